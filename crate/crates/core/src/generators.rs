//! Base graphs and the named parametric families.
//!
//! Most families are built by delegating to [`crate::ops`], so a family
//! graph is exactly the operation result its closed form is derived from.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, RootedGraph};
use crate::ops;

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::params("cycle", format!("n must be at least 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete graph edges are valid")
}

pub fn empty_graph(n: usize) -> Graph {
    Graph::empty(n)
}

/// Complete multipartite graph, the join of edgeless parts.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.len() < 2 {
        return Err(Error::params(
            "complete_multipartite",
            "needs at least 2 parts",
        ));
    }
    if parts.contains(&0) {
        return Err(Error::params("complete_multipartite", "part sizes must be >= 1"));
    }
    let pieces: Vec<Graph> = parts.iter().map(|&p| Graph::empty(p)).collect();
    ops::join(&pieces)
}

/// Corona of `K2` with `g`.
pub fn bottleneck(g: &Graph) -> Result<Graph> {
    ops::corona(&complete(2), g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Empty,
    CompleteMultipartite,
    Wheel,
    Fan,
    Windmill,
    Cone,
    Hypercube,
    Hamming,
    Torus,
    NanotubeC4,
    Grid,
    Fence,
    ClosedFence,
    ThornyCycle,
    ThornyPath,
    BridgeB,
    BridgeT3,
    Comb,
    Sun,
}

/// Number of integer parameters a family takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Exactly(usize),
    AtLeast(usize),
}

impl Family {
    pub const ALL: [Family; 22] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Empty,
        Family::CompleteMultipartite,
        Family::Wheel,
        Family::Fan,
        Family::Windmill,
        Family::Cone,
        Family::Hypercube,
        Family::Hamming,
        Family::Torus,
        Family::NanotubeC4,
        Family::Grid,
        Family::Fence,
        Family::ClosedFence,
        Family::ThornyCycle,
        Family::ThornyPath,
        Family::BridgeB,
        Family::BridgeT3,
        Family::Comb,
        Family::Sun,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Empty => "empty",
            Family::CompleteMultipartite => "complete_multipartite",
            Family::Wheel => "wheel",
            Family::Fan => "fan",
            Family::Windmill => "windmill",
            Family::Cone => "cone",
            Family::Hypercube => "hypercube",
            Family::Hamming => "hamming",
            Family::Torus => "torus",
            Family::NanotubeC4 => "nanotube_c4",
            Family::Grid => "grid",
            Family::Fence => "fence",
            Family::ClosedFence => "closed_fence",
            Family::ThornyCycle => "thorny_cycle",
            Family::ThornyPath => "thorny_path",
            Family::BridgeB => "bridge_b",
            Family::BridgeT3 => "bridge_t3",
            Family::Comb => "comb",
            Family::Sun => "sun",
        }
    }

    pub fn arity(self) -> Arity {
        use Family::*;
        match self {
            Path | Cycle | Complete | Empty | Wheel | Fan | Windmill | Hypercube | Fence
            | ClosedFence | BridgeB | BridgeT3 | Comb => Arity::Exactly(1),
            Cone | NanotubeC4 | Grid | ThornyCycle | ThornyPath | Sun => Arity::Exactly(2),
            CompleteMultipartite => Arity::AtLeast(2),
            Hamming | Torus => Arity::AtLeast(1),
        }
    }

    /// Smallest value each parameter may take for the graph to be built.
    fn minimums(self) -> &'static [usize] {
        use Family::*;
        match self {
            Path | Empty => &[0],
            Complete | Windmill | Hypercube | Fence | BridgeB | BridgeT3 | Comb => &[1],
            Cycle | Wheel | ClosedFence => &[3],
            Fan => &[1],
            Cone => &[3, 1],
            NanotubeC4 => &[1, 3],
            Grid => &[1, 1],
            ThornyCycle => &[3, 1],
            ThornyPath => &[1, 1],
            Sun => &[3, 1],
            CompleteMultipartite | Hamming => &[1],
            Torus => &[3],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let wanted = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == wanted)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A named family with its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    /// Validates arity and per-parameter lower bounds.
    pub fn new(family: Family, params: Vec<usize>) -> Result<FamilySpec> {
        let name = family.name();
        match family.arity() {
            Arity::Exactly(k) if params.len() != k => {
                return Err(Error::params(
                    name,
                    format!("expected {k} parameter(s), got {}", params.len()),
                ))
            }
            Arity::AtLeast(k) if params.len() < k => {
                return Err(Error::params(
                    name,
                    format!("expected at least {k} parameter(s), got {}", params.len()),
                ))
            }
            _ => {}
        }
        let mins = family.minimums();
        for (i, &p) in params.iter().enumerate() {
            let min = mins[i.min(mins.len() - 1)];
            if p < min {
                return Err(Error::params(
                    name,
                    format!("parameter {} must be at least {min}, got {p}", i + 1),
                ));
            }
        }
        Ok(FamilySpec { family, params })
    }

    pub fn parse(name: &str, params: &[usize]) -> Result<FamilySpec> {
        FamilySpec::new(name.parse()?, params.to_vec())
    }

    pub fn params_display(&self) -> String {
        self.params
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.family, self.params_display())
    }
}

fn suspension(g: Graph) -> Result<Graph> {
    ops::join(&[Graph::empty(1), g])
}

/// Builds the graph named by `spec`.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    let p = &spec.params;
    match spec.family {
        Family::Path => Ok(path(p[0])),
        Family::Cycle => cycle(p[0]),
        Family::Complete => Ok(complete(p[0])),
        Family::Empty => Ok(empty_graph(p[0])),
        Family::CompleteMultipartite => complete_multipartite(p),
        Family::Wheel => suspension(cycle(p[0])?),
        Family::Fan => suspension(path(p[0])),
        Family::Windmill => {
            let copies = vec![complete(2); p[0]];
            suspension(ops::disjoint_union(&copies)?)
        }
        Family::Cone => ops::join(&[cycle(p[0])?, Graph::empty(p[1])]),
        Family::Hypercube => ops::cartesian_product(&vec![complete(2); p[0]]),
        Family::Hamming => {
            let factors: Vec<Graph> = p.iter().map(|&k| complete(k)).collect();
            ops::cartesian_product(&factors)
        }
        Family::Torus => {
            let factors = p.iter().map(|&k| cycle(k)).collect::<Result<Vec<_>>>()?;
            ops::cartesian_product(&factors)
        }
        Family::NanotubeC4 => ops::cartesian_product(&[path(p[0]), cycle(p[1])?]),
        Family::Grid => ops::cartesian_product(&[path(p[0]), path(p[1])]),
        Family::Fence => ops::composition(&path(p[0]), &path(2)),
        Family::ClosedFence => ops::composition(&cycle(p[0])?, &path(2)),
        Family::ThornyCycle => ops::t_thorn(&cycle(p[0])?, p[1]),
        Family::ThornyPath => ops::t_thorn(&path(p[0]), p[1]),
        Family::BridgeB => ops::corona(&path(p[0]), &Graph::empty(2)),
        Family::BridgeT3 => ops::corona(&path(p[0]), &complete(2)),
        Family::Comb => ops::cluster(&path(p[0]), &RootedGraph::new(path(p[0]), 0)?),
        Family::Sun => ops::cluster(&cycle(p[0])?, &RootedGraph::new(path(p[1] + 1), 0)?),
    }
}
