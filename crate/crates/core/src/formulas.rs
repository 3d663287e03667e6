//! Closed-form F-index (and M1) of graph operations, evaluated from operand
//! summaries only.
//!
//! Nothing in this module looks at a graph. Each evaluator takes the
//! `(n, m, M1, F)` tuple of its operands, plus root degrees or subset
//! degree sums where the operation needs them.
//!
//! Intermediate arithmetic is signed 128-bit and checked: several
//! expansions subtract terms larger than the final value. The Cartesian
//! product formulas divide by operand orders and are evaluated over exact
//! rationals.

use std::ops::{Add, Mul, Sub};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, Zero};

use crate::error::{Error, Result};
use crate::generators::{Family, FamilySpec};
use crate::graph::{Graph, GraphSummary, IndexValue};
use crate::ops::VertexSubset;

/// Checked signed integer; `None` once any step has overflowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Wide(Option<i128>);

impl Wide {
    fn pow(self, exp: u32) -> Wide {
        Wide(self.0.and_then(|v| v.checked_pow(exp)))
    }

    fn finish(self) -> Result<IndexValue> {
        let v = self.0.ok_or(Error::Overflow)?;
        u128::try_from(v)
            .map(IndexValue::new)
            .map_err(|_| Error::NegativeValue)
    }
}

fn w<T: Into<Wide>>(v: T) -> Wide {
    v.into()
}

impl From<u64> for Wide {
    fn from(v: u64) -> Wide {
        Wide(Some(v as i128))
    }
}

impl From<usize> for Wide {
    fn from(v: usize) -> Wide {
        Wide(i128::try_from(v).ok())
    }
}

impl From<IndexValue> for Wide {
    fn from(v: IndexValue) -> Wide {
        Wide(i128::try_from(v.get()).ok())
    }
}

impl Add for Wide {
    type Output = Wide;
    fn add(self, rhs: Wide) -> Wide {
        Wide(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_add(b)))
    }
}

impl Sub for Wide {
    type Output = Wide;
    fn sub(self, rhs: Wide) -> Wide {
        Wide(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_sub(b)))
    }
}

impl Mul for Wide {
    type Output = Wide;
    fn mul(self, rhs: Wide) -> Wide {
        Wide(self.0.zip(rhs.0).and_then(|(a, b)| a.checked_mul(b)))
    }
}

impl Add<i128> for Wide {
    type Output = Wide;
    fn add(self, rhs: i128) -> Wide {
        self + Wide(Some(rhs))
    }
}

impl Sub<i128> for Wide {
    type Output = Wide;
    fn sub(self, rhs: i128) -> Wide {
        self - Wide(Some(rhs))
    }
}

impl Mul<Wide> for i128 {
    type Output = Wide;
    fn mul(self, rhs: Wide) -> Wide {
        Wide(Some(self)) * rhs
    }
}

impl std::iter::Sum for Wide {
    fn sum<I: Iterator<Item = Wide>>(iter: I) -> Wide {
        iter.fold(Wide(Some(0)), |a, b| a + b)
    }
}

impl std::iter::Product for Wide {
    fn product<I: Iterator<Item = Wide>>(iter: I) -> Wide {
        iter.fold(Wide(Some(1)), |a, b| a * b)
    }
}

/// Subset data the hierarchical product formula needs from `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HierarchicalExtras {
    /// `|U|`
    pub u_size: u64,
    /// Sum of `d_G2(v)` over `v` in `U`.
    pub s1: u64,
    /// Sum of `d_G2(v)^2` over `v` in `U`.
    pub s2: u64,
}

impl HierarchicalExtras {
    pub fn new(u_size: u64, s1: u64, s2: u64) -> Result<Self> {
        if u_size == 0 {
            return Err(Error::EmptySubset);
        }
        Ok(HierarchicalExtras { u_size, s1, s2 })
    }

    pub fn from_subset(g2: &Graph, u: &VertexSubset) -> Result<Self> {
        let d = g2.degrees();
        let mut s1 = 0u64;
        let mut s2 = 0u64;
        for &v in u.members() {
            let dv = *d.get(v).ok_or(Error::VertexOutOfRange {
                vertex: v,
                n: g2.order(),
            })? as u64;
            s1 += dv;
            s2 += dv * dv;
        }
        HierarchicalExtras::new(u.len() as u64, s1, s2)
    }
}

/// Degrees of the two roots in splice and link.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootDegreePair {
    pub d1: u64,
    pub d2: u64,
}

impl RootDegreePair {
    pub fn new(d1: u64, d2: u64) -> Self {
        RootDegreePair { d1, d2 }
    }
}

/// Union of `k` graphs: the F-values add.
pub fn f_union(fs: &[IndexValue]) -> Result<IndexValue> {
    if fs.is_empty() {
        return Err(Error::NoOperands);
    }
    fs.iter().map(|&f| w(f)).sum::<Wide>().finish()
}

/// Join of `k` graphs, with `n̄_i = n - n_i`:
/// `ΣF_i + 3Σ n̄_i M1_i + 6Σ n̄_i² m_i + Σ n_i n̄_i³`.
pub fn f_join(ss: &[GraphSummary]) -> Result<IndexValue> {
    if ss.is_empty() {
        return Err(Error::NoOperands);
    }
    let n: Wide = ss.iter().map(|s| w(s.n)).sum();
    ss.iter()
        .map(|s| {
            let nbar = n - w(s.n);
            w(s.f) + 3 * nbar * w(s.m1) + 6 * nbar.pow(2) * w(s.m) + w(s.n) * nbar.pow(3)
        })
        .sum::<Wide>()
        .finish()
}

/// Join of `p` copies of one graph.
pub fn f_join_copies(s: &GraphSummary, p: u64) -> Result<IndexValue> {
    if p == 0 {
        return Err(Error::ZeroCopies);
    }
    let (n, m, p) = (w(s.n), w(s.m), w(p));
    let q = p - 1;
    (p * w(s.f) + 3 * n * p * q * w(s.m1) + 6 * n.pow(2) * m * p * q.pow(2) + n.pow(4) * p * q.pow(3))
        .finish()
}

/// Suspension `K1 + G`.
pub fn f_suspension(s: &GraphSummary) -> Result<IndexValue> {
    let (n, m) = (w(s.n), w(s.m));
    (w(s.f) + 3 * w(s.m1) + n.pow(3) + 6 * m + n).finish()
}

type Q = Ratio<i128>;

fn q_add(a: Q, b: Q) -> Result<Q> {
    a.checked_add(&b).ok_or(Error::Overflow)
}

fn q_mul(a: Q, b: Q) -> Result<Q> {
    a.checked_mul(&b).ok_or(Error::Overflow)
}

fn q_int<T: Into<Wide>>(v: T) -> Result<Q> {
    v.into().0.map(Q::from_integer).ok_or(Error::Overflow)
}

fn q_ratio<T: Into<Wide>>(num: T, den: u64) -> Result<Q> {
    Ok(q_int(num)? / q_int(den)?)
}

fn integral(q: Q) -> Result<IndexValue> {
    assert!(q.is_integer(), "closed form produced a non-integer {q}");
    Wide(Some(q.to_integer())).finish()
}

fn product_order(ss: &[GraphSummary]) -> Result<Q> {
    if ss.is_empty() {
        return Err(Error::NoOperands);
    }
    if ss.iter().any(|s| s.n == 0) {
        return Err(Error::EmptyOperand);
    }
    q_int(ss.iter().map(|s| w(s.n)).product::<Wide>())
}

/// Sum over ordered pairs `i != j` of `x_i * y_j`.
fn ordered_pairs(x: &[Q], y: &[Q]) -> Result<Q> {
    let mut acc = Q::zero();
    for (i, &xi) in x.iter().enumerate() {
        for (j, &yj) in y.iter().enumerate() {
            if i != j {
                acc = q_add(acc, q_mul(xi, yj)?)?;
            }
        }
    }
    Ok(acc)
}

/// First Zagreb index of a k-fold Cartesian product:
/// `n Σ M1_i/n_i + 4n Σ_{i≠j} (m_i/n_i)(m_j/n_j)`.
pub fn m1_cartesian(ss: &[GraphSummary]) -> Result<IndexValue> {
    let n = product_order(ss)?;
    let m1: Vec<Q> = ss.iter().map(|s| q_ratio(s.m1, s.n)).collect::<Result<_>>()?;
    let m: Vec<Q> = ss.iter().map(|s| q_ratio(s.m, s.n)).collect::<Result<_>>()?;
    let first = m1.iter().try_fold(Q::zero(), |acc, &x| q_add(acc, x))?;
    let cross = ordered_pairs(&m, &m)?;
    let four = Q::from_integer(4);
    integral(q_add(q_mul(n, first)?, q_mul(q_mul(four, n)?, cross)?)?)
}

/// F-index of a k-fold Cartesian product:
/// `n ΣF_i/n_i + 6n Σ_{i≠j}(M1_i/n_i)(m_j/n_j) + 8n Σ_{p,q,r distinct}
/// (m_p/n_p)(m_q/n_q)(m_r/n_r)`, all sums over ordered index tuples.
pub fn f_cartesian(ss: &[GraphSummary]) -> Result<IndexValue> {
    let n = product_order(ss)?;
    let f: Vec<Q> = ss.iter().map(|s| q_ratio(s.f, s.n)).collect::<Result<_>>()?;
    let m1: Vec<Q> = ss.iter().map(|s| q_ratio(s.m1, s.n)).collect::<Result<_>>()?;
    let m: Vec<Q> = ss.iter().map(|s| q_ratio(s.m, s.n)).collect::<Result<_>>()?;

    let first = f.iter().try_fold(Q::zero(), |acc, &x| q_add(acc, x))?;
    let second = ordered_pairs(&m1, &m)?;
    let mut third = Q::zero();
    for p in 0..m.len() {
        for q in 0..m.len() {
            for r in 0..m.len() {
                if p != q && q != r && p != r {
                    third = q_add(third, q_mul(q_mul(m[p], m[q])?, m[r])?)?;
                }
            }
        }
    }
    let six = Q::from_integer(6);
    let eight = Q::from_integer(8);
    let total = [
        q_mul(n, first)?,
        q_mul(q_mul(six, n)?, second)?,
        q_mul(q_mul(eight, n)?, third)?,
    ]
    .into_iter()
    .try_fold(Q::zero(), q_add)?;
    integral(total)
}

/// Composition `G1[G2]`: `n2⁴F1 + n1F2 + 6n2²m2M1_1 + 6n2m1M1_2`.
pub fn f_composition(s1: &GraphSummary, s2: &GraphSummary) -> Result<IndexValue> {
    let (n1, n2) = (w(s1.n), w(s2.n));
    (n2.pow(4) * w(s1.f)
        + n1 * w(s2.f)
        + 6 * n2.pow(2) * w(s2.m) * w(s1.m1)
        + 6 * n2 * w(s1.m) * w(s2.m1))
        .finish()
}

/// Tensor product: `F1 F2`.
pub fn f_tensor(f1: IndexValue, f2: IndexValue) -> Result<IndexValue> {
    f1.checked_mul(f2)
}

/// Strong product, the ten-term expansion of `Σ(d1 + d2 + d1 d2)³`.
pub fn f_strong(s1: &GraphSummary, s2: &GraphSummary) -> Result<IndexValue> {
    let (n1, n2, m1, m2) = (w(s1.n), w(s2.n), w(s1.m), w(s2.m));
    let (f1, f2, z1, z2) = (w(s1.f), w(s2.f), w(s1.m1), w(s2.m1));
    (n2 * f1
        + n1 * f2
        + f1 * f2
        + 6 * m2 * z1
        + 6 * m1 * z2
        + 6 * m2 * f1
        + 6 * m1 * f2
        + 3 * f2 * z1
        + 3 * f1 * z2
        + 6 * z1 * z2)
        .finish()
}

/// Corona `G1 o G2`:
/// `F1 + n1F2 + 3n2M1_1 + 3n1M1_2 + 6n2²m1 + 6n1m2 + n1n2(n2² + 1)`.
pub fn f_corona(s1: &GraphSummary, s2: &GraphSummary) -> Result<IndexValue> {
    if s1.n == 0 {
        return Err(Error::EmptyOperand);
    }
    let (n1, n2) = (w(s1.n), w(s2.n));
    (w(s1.f)
        + n1 * w(s2.f)
        + 3 * n2 * w(s1.m1)
        + 3 * n1 * w(s2.m1)
        + 6 * n2.pow(2) * w(s1.m)
        + 6 * n1 * w(s2.m)
        + n1 * n2 * (n2.pow(2) + 1))
        .finish()
}

/// `t`-thorny graph: `F + 3tM1 + 6mt² + nt³ + nt`.
pub fn f_thorn(s: &GraphSummary, t: u64) -> Result<IndexValue> {
    if t == 0 {
        return Err(Error::ZeroThorns);
    }
    let (n, m, t) = (w(s.n), w(s.m), w(t));
    (w(s.f) + 3 * t * w(s.m1) + 6 * m * t.pow(2) + n * t.pow(3) + n * t).finish()
}

/// Bottleneck graph `K2 o G`: `2F + 6M1 + 2n³ + 6n² + 8n + 12m + 2`.
pub fn f_bottleneck(s: &GraphSummary) -> Result<IndexValue> {
    let (n, m) = (w(s.n), w(s.m));
    (2 * w(s.f) + 6 * w(s.m1) + 2 * n.pow(3) + 6 * n.pow(2) + 8 * n + 12 * m + 2).finish()
}

/// Generalized hierarchical product `G1 Π G2(U)`:
/// `|U|F1 + n1F2 + 3M1_1 s1 + 6m1 s2`.
pub fn f_hierarchical(
    s1: &GraphSummary,
    f2: IndexValue,
    extras: &HierarchicalExtras,
) -> Result<IndexValue> {
    if extras.u_size == 0 {
        return Err(Error::EmptySubset);
    }
    (w(extras.u_size) * w(s1.f)
        + w(s1.n) * w(f2)
        + 3 * w(s1.m1) * w(extras.s1)
        + 6 * w(s1.m) * w(extras.s2))
        .finish()
}

/// Cluster product `G1{G2}` with root degree `d(x)`:
/// `F1 + n1F2 + 3M1_1 d(x) + 6m1 d(x)²`.
pub fn f_cluster(s1: &GraphSummary, s2: &GraphSummary, root_degree: u64) -> Result<IndexValue> {
    let x = w(root_degree);
    (w(s1.f) + w(s1.n) * w(s2.f) + 3 * w(s1.m1) * x + 6 * w(s1.m) * x.pow(2)).finish()
}

/// Disjunction, expanded from `Σ(n2 d1 + n1 d2 - d1 d2)³`.
pub fn f_disjunction(s1: &GraphSummary, s2: &GraphSummary) -> Result<IndexValue> {
    let (n1, n2, m1, m2) = (w(s1.n), w(s2.n), w(s1.m), w(s2.m));
    let (f1, f2, z1, z2) = (w(s1.f), w(s2.f), w(s1.m1), w(s2.m1));
    (n2.pow(4) * f1 + n1.pow(4) * f2 - f1 * f2
        + 6 * n1 * n2.pow(2) * m2 * z1
        + 6 * n1.pow(2) * n2 * m1 * z2
        + 3 * n2 * f1 * z2
        + 3 * n1 * f2 * z1
        - 6 * n2.pow(2) * m2 * f1
        - 6 * n1.pow(2) * m1 * f2
        - 6 * n1 * n2 * z1 * z2)
        .finish()
}

/// Symmetric difference, expanded from `Σ(n2 d1 + n1 d2 - 2 d1 d2)³`.
pub fn f_symmetric_difference(s1: &GraphSummary, s2: &GraphSummary) -> Result<IndexValue> {
    let (n1, n2, m1, m2) = (w(s1.n), w(s2.n), w(s1.m), w(s2.m));
    let (f1, f2, z1, z2) = (w(s1.f), w(s2.f), w(s1.m1), w(s2.m1));
    (n2.pow(4) * f1 + n1.pow(4) * f2 - 8 * f1 * f2
        + 6 * n1 * n2.pow(2) * m2 * z1
        + 6 * n1.pow(2) * n2 * m1 * z2
        + 12 * n2 * f1 * z2
        + 12 * n1 * f2 * z1
        - 12 * n2.pow(2) * m2 * f1
        - 12 * n1.pow(2) * m1 * f2
        - 12 * n1 * n2 * z1 * z2)
        .finish()
}

/// Splice at `(v1, v2)`: `F1 + F2 + 3 d1 d2 (d1 + d2)`.
pub fn f_splice(f1: IndexValue, f2: IndexValue, roots: RootDegreePair) -> Result<IndexValue> {
    let (d1, d2) = (w(roots.d1), w(roots.d2));
    (w(f1) + w(f2) + 3 * d1 * d2 * (d1 + d2)).finish()
}

/// Link at `(v1, v2)`: `F1 + F2 + 3(d1 + d2) + 3(d1² + d2²) + 2`.
pub fn f_link(f1: IndexValue, f2: IndexValue, roots: RootDegreePair) -> Result<IndexValue> {
    let (d1, d2) = (w(roots.d1), w(roots.d2));
    (w(f1) + w(f2) + 3 * (d1 + d2) + 3 * (d1.pow(2) + d2.pow(2)) + 2).finish()
}

fn domain(spec: &FamilySpec, ok: bool, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::params(
            spec.family.name(),
            format!("outside the closed-form domain: {reason}"),
        ))
    }
}

/// Closed-form F-index of a named family.
pub fn f_family(spec: &FamilySpec) -> Result<IndexValue> {
    let p: Vec<Wide> = spec.params.iter().map(|&x| w(x)).collect();
    let raw = &spec.params;
    let value = match spec.family {
        Family::Path => {
            domain(spec, raw[0] >= 2, "n >= 2")?;
            8 * p[0] - 14
        }
        Family::Cycle => 8 * p[0],
        Family::Complete => p[0] * (p[0] - 1).pow(3),
        Family::Empty => w(0u64),
        Family::CompleteMultipartite => {
            let total: Wide = p.iter().copied().sum();
            p.iter().map(|&mi| mi * (total - mi).pow(3)).sum()
        }
        Family::Wheel => p[0].pow(3) + 27 * p[0],
        Family::Fan => {
            domain(spec, raw[0] >= 2, "n >= 2")?;
            p[0].pow(3) + 27 * p[0] - 38
        }
        Family::Windmill => 8 * p[0].pow(3) + 16 * p[0],
        Family::Cone => {
            let (m, n) = (p[0], p[1]);
            m * n.pow(3) + m.pow(3) * n + 6 * m * n.pow(2) + 12 * m * n + 8 * m
        }
        Family::Hypercube => {
            let k = p[0];
            let two_k = u32::try_from(raw[0])
                .ok()
                .and_then(|e| 2i128.checked_pow(e))
                .map(|v| Wide(Some(v)))
                .unwrap_or(Wide(None));
            two_k * k.pow(3)
        }
        Family::Hamming => {
            let k = w(p.len());
            let sum: Wide = p.iter().copied().sum();
            let prod: Wide = p.iter().copied().product();
            (sum - k).pow(3) * prod
        }
        Family::Torus => {
            let k = w(p.len());
            let prod: Wide = p.iter().copied().product();
            8 * k.pow(3) * prod
        }
        Family::NanotubeC4 => {
            domain(spec, raw[0] >= 2, "n >= 2")?;
            let (n, m) = (p[0], p[1]);
            64 * m * n - 74 * m
        }
        Family::Grid => {
            domain(spec, raw[0] >= 2 && raw[1] >= 2, "n, m >= 2")?;
            let (n, m) = (p[0], p[1]);
            64 * m * n - 74 * m - 74 * n + 72
        }
        Family::Fence => {
            domain(spec, raw[0] >= 2, "n >= 2")?;
            250 * p[0] - 392
        }
        Family::ClosedFence => 250 * p[0],
        Family::ThornyCycle => {
            let (n, t) = (p[0], p[1]);
            n * t.pow(3) + 6 * n * t.pow(2) + 13 * n * t + 8 * n
        }
        Family::ThornyPath => {
            domain(spec, raw[0] >= 2, "n >= 2")?;
            let (n, t) = (p[0], p[1]);
            n * t.pow(3) + 6 * n * t.pow(2) - 6 * t.pow(2) + 13 * n * t - 18 * t + 8 * n - 14
        }
        Family::BridgeB => {
            domain(spec, raw[0] >= 2, "m >= 2")?;
            66 * p[0] - 74
        }
        Family::BridgeT3 => {
            domain(spec, raw[0] >= 2, "m >= 2")?;
            80 * p[0] - 74
        }
        Family::Comb => {
            domain(spec, raw[0] >= 2, "n >= 2")?;
            8 * p[0].pow(2) + 12 * p[0] - 38
        }
        Family::Sun => {
            let (m, n) = (p[0], p[1]);
            4 * m * (2 * n + 5)
        }
    };
    value.finish()
}
