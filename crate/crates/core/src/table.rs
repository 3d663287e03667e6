//! Golden table of the worked examples: each row is evaluated once by its
//! closed form and once by building the graph and summing cubed degrees.

use std::fmt::Write as _;

use crate::error::Result;
use crate::formulas::{f_bottleneck, f_family};
use crate::generators::{bottleneck, complete, cycle, make_family, path, FamilySpec};
use crate::graph::{f_index, summarize, Graph, IndexValue};
use crate::ops;

/// A base graph used as a tensor or bottleneck operand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    Path(usize),
    Cycle(usize),
    Complete(usize),
}

impl Base {
    fn build(self) -> Result<Graph> {
        match self {
            Base::Path(n) => Ok(path(n)),
            Base::Cycle(n) => cycle(n),
            Base::Complete(n) => Ok(complete(n)),
        }
    }

    fn kind(self) -> &'static str {
        match self {
            Base::Path(_) => "path",
            Base::Cycle(_) => "cycle",
            Base::Complete(_) => "complete",
        }
    }

    fn order(self) -> usize {
        match self {
            Base::Path(n) | Base::Cycle(n) | Base::Complete(n) => n,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Case {
    Family(FamilySpec),
    Tensor(Base, Base),
    Bottleneck(Base),
}

/// Closed forms for tensor products of paths, cycles and complete graphs.
fn tensor_closed_form(a: Base, b: Base) -> Option<i128> {
    let fp = |n: i128| 8 * n - 14;
    let (n, m) = (a.order() as i128, b.order() as i128);
    Some(match (a, b) {
        (Base::Path(_), Base::Path(_)) => fp(n) * fp(m),
        (Base::Cycle(_), Base::Cycle(_)) => 64 * n * m,
        (Base::Complete(_), Base::Complete(_)) => n * m * (n - 1).pow(3) * (m - 1).pow(3),
        (Base::Path(_), Base::Cycle(_)) => 8 * m * fp(n),
        (Base::Path(_), Base::Complete(_)) => m * fp(n) * (m - 1).pow(3),
        (Base::Cycle(_), Base::Complete(_)) => 8 * n * m * (m - 1).pow(3),
        _ => return None,
    })
}

impl Case {
    pub fn label(&self) -> String {
        match self {
            Case::Family(spec) => spec.family.name().to_string(),
            Case::Tensor(a, b) => format!("tensor_{}_{}", a.kind(), b.kind()),
            Case::Bottleneck(_) => "bottleneck".to_string(),
        }
    }

    pub fn params(&self) -> String {
        match self {
            Case::Family(spec) => spec.params_display(),
            Case::Tensor(a, b) => format!("{} {}", a.order(), b.order()),
            Case::Bottleneck(g) => format!("{} {}", g.kind(), g.order()),
        }
    }

    pub fn closed_form(&self) -> Result<IndexValue> {
        match self {
            Case::Family(spec) => f_family(spec),
            Case::Tensor(a, b) => {
                let v = tensor_closed_form(*a, *b).expect("tensor case has a closed form");
                Ok(IndexValue::new(v as u128))
            }
            Case::Bottleneck(g) => f_bottleneck(&summarize(&g.build()?)?),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            Case::Family(spec) => make_family(spec),
            Case::Tensor(a, b) => ops::tensor_product(&a.build()?, &b.build()?),
            Case::Bottleneck(g) => bottleneck(&g.build()?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub family: String,
    pub params: String,
    pub formula: IndexValue,
    pub direct: IndexValue,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.formula == self.direct
    }
}

fn fam(name: &str, params: &[usize]) -> Case {
    Case::Family(FamilySpec::parse(name, params).expect("golden family spec is valid"))
}

/// Every numeric worked example, in presentation order.
pub fn paper_examples() -> Vec<Case> {
    use Base::*;
    vec![
        fam("complete_multipartite", &[1, 3]),
        fam("wheel", &[5]),
        fam("wheel", &[6]),
        fam("fan", &[5]),
        fam("windmill", &[2]),
        fam("cone", &[3, 2]),
        fam("hypercube", &[3]),
        fam("hypercube", &[4]),
        fam("hamming", &[2, 3]),
        fam("torus", &[3, 3, 3]),
        fam("nanotube_c4", &[4, 5]),
        fam("torus", &[4, 5]),
        fam("grid", &[3, 3]),
        fam("fence", &[3]),
        fam("closed_fence", &[3]),
        Case::Tensor(Path(3), Path(3)),
        Case::Tensor(Cycle(4), Cycle(3)),
        Case::Tensor(Complete(3), Complete(3)),
        Case::Tensor(Path(3), Cycle(4)),
        Case::Tensor(Path(3), Complete(3)),
        Case::Tensor(Cycle(3), Complete(3)),
        fam("thorny_cycle", &[3, 2]),
        fam("thorny_path", &[3, 2]),
        Case::Bottleneck(Cycle(4)),
        fam("bridge_b", &[2]),
        fam("bridge_b", &[3]),
        fam("bridge_t3", &[2]),
        fam("comb", &[3]),
        fam("sun", &[3, 2]),
    ]
}

pub fn evaluate(cases: &[Case]) -> Result<Vec<TableRow>> {
    cases
        .iter()
        .map(|case| {
            Ok(TableRow {
                family: case.label(),
                params: case.params(),
                formula: case.closed_form()?,
                direct: f_index(&case.build()?)?,
            })
        })
        .collect()
}

pub fn paper_table() -> Result<Vec<TableRow>> {
    evaluate(&paper_examples())
}

pub fn to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("family,params,formula,direct,match\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.family,
            r.params,
            r.formula,
            r.direct,
            if r.matches() { "yes" } else { "no" }
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_matches() {
        let rows = paper_table().unwrap();
        assert_eq!(rows.len(), paper_examples().len());
        for r in &rows {
            assert!(r.matches(), "{r:?}");
        }
    }

    #[test]
    fn tensor_closed_forms_hold_over_a_range() {
        use Base::*;
        for n in 2..=6 {
            for m in 3..=6 {
                for (a, b) in [
                    (Path(n), Path(m)),
                    (Cycle(n + 1), Cycle(m)),
                    (Complete(n), Complete(m)),
                    (Path(n), Cycle(m)),
                    (Path(n), Complete(m)),
                    (Cycle(n + 1), Complete(m)),
                ] {
                    let case = Case::Tensor(a, b);
                    assert_eq!(
                        case.closed_form().unwrap(),
                        f_index(&case.build().unwrap()).unwrap(),
                        "{a:?} x {b:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn csv_layout() {
        let rows = evaluate(&[fam("wheel", &[5]), fam("cone", &[3, 2])]).unwrap();
        assert_eq!(
            to_csv(&rows),
            "family,params,formula,direct,match\nwheel,5,260,260,yes\ncone,3 2,246,246,yes\n"
        );
    }
}
