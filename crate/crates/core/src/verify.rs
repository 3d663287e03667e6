//! Randomized check that every closed form equals direct computation on the
//! explicitly constructed graph.
//!
//! Each identity draws its operands from a ChaCha stream keyed by the suite
//! seed, the identity name and the trial index, so reports do not depend on
//! how trials are scheduled across threads.

use std::fmt;
use std::str::FromStr;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::formulas::{self, HierarchicalExtras, RootDegreePair};
use crate::graph::{
    f_index, first_zagreb, is_connected, summarize, Graph, GraphSummary, IndexValue, RootedGraph,
};
use crate::ops::{self, VertexSubset};

/// An edge probability `num / den`, strictly between 0 and 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Probability {
    num: u32,
    den: u32,
}

impl Probability {
    pub fn new(num: u32, den: u32) -> Result<Probability> {
        if num == 0 || num >= den {
            return Err(Error::params(
                "edge probability",
                format!("{num}/{den} is not in (0, 1)"),
            ));
        }
        Ok(Probability { num, den })
    }

    fn sample<R: Rng>(self, rng: &mut R) -> bool {
        rng.random_ratio(self.num, self.den)
    }
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialConfig {
    pub trials_per_identity: usize,
    pub max_vertices: usize,
    pub edge_probabilities: Vec<Probability>,
    pub seed: u64,
    pub connected_only: bool,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            trials_per_identity: 200,
            max_vertices: 8,
            edge_probabilities: vec![
                Probability { num: 1, den: 5 },
                Probability { num: 1, den: 2 },
                Probability { num: 4, den: 5 },
            ],
            seed: 42,
            connected_only: true,
        }
    }
}

impl TrialConfig {
    fn validate(&self) -> Result<()> {
        if self.max_vertices == 0 {
            return Err(Error::params("trial config", "max_vertices must be >= 1"));
        }
        if self.edge_probabilities.is_empty() {
            return Err(Error::params("trial config", "no edge probabilities"));
        }
        Ok(())
    }
}

/// The closed-form identities checked by the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Union,
    Join,
    JoinCopies,
    Suspension,
    M1Cartesian,
    Cartesian,
    Composition,
    Tensor,
    Strong,
    Corona,
    Thorn,
    Hierarchical,
    Cluster,
    Disjunction,
    SymmetricDifference,
    Splice,
    Link,
}

impl Identity {
    pub const ALL: [Identity; 17] = [
        Identity::Union,
        Identity::Join,
        Identity::JoinCopies,
        Identity::Suspension,
        Identity::M1Cartesian,
        Identity::Cartesian,
        Identity::Composition,
        Identity::Tensor,
        Identity::Strong,
        Identity::Corona,
        Identity::Thorn,
        Identity::Hierarchical,
        Identity::Cluster,
        Identity::Disjunction,
        Identity::SymmetricDifference,
        Identity::Splice,
        Identity::Link,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Union => "union",
            Identity::Join => "join",
            Identity::JoinCopies => "join-copies",
            Identity::Suspension => "suspension",
            Identity::M1Cartesian => "m1-cartesian",
            Identity::Cartesian => "cartesian",
            Identity::Composition => "composition",
            Identity::Tensor => "tensor",
            Identity::Strong => "strong",
            Identity::Corona => "corona",
            Identity::Thorn => "thorn",
            Identity::Hierarchical => "hierarchical",
            Identity::Cluster => "cluster",
            Identity::Disjunction => "disjunction",
            Identity::SymmetricDifference => "symdiff",
            Identity::Splice => "splice",
            Identity::Link => "link",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// The closed forms the harness checks. Swapping an entry lets tests
/// confirm that a corrupted formula gets caught.
#[derive(Clone, Copy)]
pub struct FormulaSet {
    pub union: fn(&[IndexValue]) -> Result<IndexValue>,
    pub join: fn(&[GraphSummary]) -> Result<IndexValue>,
    pub join_copies: fn(&GraphSummary, u64) -> Result<IndexValue>,
    pub suspension: fn(&GraphSummary) -> Result<IndexValue>,
    pub m1_cartesian: fn(&[GraphSummary]) -> Result<IndexValue>,
    pub cartesian: fn(&[GraphSummary]) -> Result<IndexValue>,
    pub composition: fn(&GraphSummary, &GraphSummary) -> Result<IndexValue>,
    pub tensor: fn(IndexValue, IndexValue) -> Result<IndexValue>,
    pub strong: fn(&GraphSummary, &GraphSummary) -> Result<IndexValue>,
    pub corona: fn(&GraphSummary, &GraphSummary) -> Result<IndexValue>,
    pub thorn: fn(&GraphSummary, u64) -> Result<IndexValue>,
    pub hierarchical: fn(&GraphSummary, IndexValue, &HierarchicalExtras) -> Result<IndexValue>,
    pub cluster: fn(&GraphSummary, &GraphSummary, u64) -> Result<IndexValue>,
    pub disjunction: fn(&GraphSummary, &GraphSummary) -> Result<IndexValue>,
    pub symmetric_difference: fn(&GraphSummary, &GraphSummary) -> Result<IndexValue>,
    pub splice: fn(IndexValue, IndexValue, RootDegreePair) -> Result<IndexValue>,
    pub link: fn(IndexValue, IndexValue, RootDegreePair) -> Result<IndexValue>,
}

impl FormulaSet {
    pub fn standard() -> Self {
        FormulaSet {
            union: formulas::f_union,
            join: formulas::f_join,
            join_copies: formulas::f_join_copies,
            suspension: formulas::f_suspension,
            m1_cartesian: formulas::m1_cartesian,
            cartesian: formulas::f_cartesian,
            composition: formulas::f_composition,
            tensor: formulas::f_tensor,
            strong: formulas::f_strong,
            corona: formulas::f_corona,
            thorn: formulas::f_thorn,
            hierarchical: formulas::f_hierarchical,
            cluster: formulas::f_cluster,
            disjunction: formulas::f_disjunction,
            symmetric_difference: formulas::f_symmetric_difference,
            splice: formulas::f_splice,
            link: formulas::f_link,
        }
    }
}

impl Default for FormulaSet {
    fn default() -> Self {
        FormulaSet::standard()
    }
}

/// Operands for one trial of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Operands {
    /// One or more plain graphs (union, join, products, suspension).
    Graphs(Vec<Graph>),
    /// A graph and a count: copies for join-copies, thorns for thorn.
    Counted(Graph, u64),
    Subset(Graph, Graph, VertexSubset),
    Clustered(Graph, RootedGraph),
    Rooted(RootedGraph, RootedGraph),
}

impl Operands {
    fn graphs(&self) -> Vec<&Graph> {
        match self {
            Operands::Graphs(gs) => gs.iter().collect(),
            Operands::Counted(g, _) => vec![g],
            Operands::Subset(a, b, _) => vec![a, b],
            Operands::Clustered(a, b) => vec![a, b.graph()],
            Operands::Rooted(a, b) => vec![a.graph(), b.graph()],
        }
    }

    fn all_connected(&self) -> bool {
        self.graphs().into_iter().all(is_connected)
    }

    pub fn describe(&self) -> Vec<String> {
        match self {
            Operands::Graphs(gs) => gs.iter().map(describe_graph).collect(),
            Operands::Counted(g, k) => vec![describe_graph(g), format!("count={k}")],
            Operands::Subset(a, b, u) => vec![
                describe_graph(a),
                describe_graph(b),
                format!("U={:?}", u.members()),
            ],
            Operands::Clustered(a, b) => vec![
                describe_graph(a),
                format!("{} root={}", describe_graph(b.graph()), b.root()),
            ],
            Operands::Rooted(a, b) => vec![
                format!("{} root={}", describe_graph(a.graph()), a.root()),
                format!("{} root={}", describe_graph(b.graph()), b.root()),
            ],
        }
    }
}

fn describe_graph(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.order(), edges.join(" "))
}

/// Closed-form value next to the directly computed one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub formula: Result<IndexValue>,
    pub direct: IndexValue,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.formula.as_ref() == Ok(&self.direct)
    }
}

fn summaries(gs: &[Graph]) -> Result<Vec<GraphSummary>> {
    gs.iter().map(summarize).collect()
}

fn binary(gs: &[Graph]) -> Result<(&Graph, &Graph)> {
    match gs {
        [a, b] => Ok((a, b)),
        _ => Err(Error::params("operands", format!("expected 2 graphs, got {}", gs.len()))),
    }
}

fn unary(gs: &[Graph]) -> Result<&Graph> {
    match gs {
        [g] => Ok(g),
        _ => Err(Error::params("operands", format!("expected 1 graph, got {}", gs.len()))),
    }
}

fn mismatch(identity: Identity) -> Error {
    Error::params(identity.name(), "operands do not fit this identity")
}

/// Builds the operation graph, computes its index directly, and evaluates
/// the closed form on operand summaries.
pub fn compare(identity: Identity, operands: &Operands, fs: &FormulaSet) -> Result<Comparison> {
    use Identity as I;
    use Operands as O;
    let (direct, formula) = match (identity, operands) {
        (I::Union, O::Graphs(gs)) => {
            let fvals = gs.iter().map(f_index).collect::<Result<Vec<_>>>()?;
            (f_index(&ops::disjoint_union(gs)?)?, (fs.union)(&fvals))
        }
        (I::Join, O::Graphs(gs)) => (f_index(&ops::join(gs)?)?, (fs.join)(&summaries(gs)?)),
        (I::JoinCopies, O::Counted(g, p)) => {
            let copies = vec![g.clone(); *p as usize];
            (f_index(&ops::join(&copies)?)?, (fs.join_copies)(&summarize(g)?, *p))
        }
        (I::Suspension, O::Graphs(gs)) => {
            let g = unary(gs)?;
            let joined = ops::join(&[Graph::empty(1), g.clone()])?;
            (f_index(&joined)?, (fs.suspension)(&summarize(g)?))
        }
        (I::M1Cartesian, O::Graphs(gs)) => (
            first_zagreb(&ops::cartesian_product(gs)?)?,
            (fs.m1_cartesian)(&summaries(gs)?),
        ),
        (I::Cartesian, O::Graphs(gs)) => (
            f_index(&ops::cartesian_product(gs)?)?,
            (fs.cartesian)(&summaries(gs)?),
        ),
        (I::Composition, O::Graphs(gs)) => {
            let (a, b) = binary(gs)?;
            (
                f_index(&ops::composition(a, b)?)?,
                (fs.composition)(&summarize(a)?, &summarize(b)?),
            )
        }
        (I::Tensor, O::Graphs(gs)) => {
            let (a, b) = binary(gs)?;
            (
                f_index(&ops::tensor_product(a, b)?)?,
                (fs.tensor)(f_index(a)?, f_index(b)?),
            )
        }
        (I::Strong, O::Graphs(gs)) => {
            let (a, b) = binary(gs)?;
            (
                f_index(&ops::strong_product(a, b)?)?,
                (fs.strong)(&summarize(a)?, &summarize(b)?),
            )
        }
        (I::Corona, O::Graphs(gs)) => {
            let (a, b) = binary(gs)?;
            (
                f_index(&ops::corona(a, b)?)?,
                (fs.corona)(&summarize(a)?, &summarize(b)?),
            )
        }
        (I::Thorn, O::Counted(g, t)) => (
            f_index(&ops::t_thorn(g, *t as usize)?)?,
            (fs.thorn)(&summarize(g)?, *t),
        ),
        (I::Hierarchical, O::Subset(a, b, u)) => (
            f_index(&ops::hierarchical(a, b, u)?)?,
            (fs.hierarchical)(
                &summarize(a)?,
                f_index(b)?,
                &HierarchicalExtras::from_subset(b, u)?,
            ),
        ),
        (I::Cluster, O::Clustered(a, b)) => (
            f_index(&ops::cluster(a, b)?)?,
            (fs.cluster)(&summarize(a)?, &summarize(b.graph())?, b.root_degree() as u64),
        ),
        (I::Disjunction, O::Graphs(gs)) => {
            let (a, b) = binary(gs)?;
            (
                f_index(&ops::disjunction(a, b)?)?,
                (fs.disjunction)(&summarize(a)?, &summarize(b)?),
            )
        }
        (I::SymmetricDifference, O::Graphs(gs)) => {
            let (a, b) = binary(gs)?;
            (
                f_index(&ops::symmetric_difference(a, b)?)?,
                (fs.symmetric_difference)(&summarize(a)?, &summarize(b)?),
            )
        }
        (I::Splice, O::Rooted(a, b)) => (
            f_index(&ops::splice(a, b)?)?,
            (fs.splice)(f_index(a.graph())?, f_index(b.graph())?, root_pair(a, b)),
        ),
        (I::Link, O::Rooted(a, b)) => (
            f_index(&ops::link(a, b)?)?,
            (fs.link)(f_index(a.graph())?, f_index(b.graph())?, root_pair(a, b)),
        ),
        (identity, _) => return Err(mismatch(identity)),
    };
    Ok(Comparison { formula, direct })
}

fn root_pair(a: &RootedGraph, b: &RootedGraph) -> RootDegreePair {
    RootDegreePair::new(a.root_degree() as u64, b.root_degree() as u64)
}

fn gnp<R: Rng>(rng: &mut R, n: usize, p: Probability) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if p.sample(rng) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("sampled pairs are valid")
}

const CONNECT_RETRIES: usize = 16;

fn connected_gnp<R: Rng>(rng: &mut R, n: usize, p: Probability) -> Graph {
    let mut g = gnp(rng, n, p);
    for _ in 0..CONNECT_RETRIES {
        if is_connected(&g) {
            return g;
        }
        g = gnp(rng, n, p);
    }
    // Overlay a random spanning tree: each vertex in a shuffled order hooks
    // onto one that came before it.
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let tree = (1..n).map(|i| (order[i], order[rng.random_range(0..i)]));
    Graph::new(n, g.edges().iter().copied().chain(tree)).expect("tree pairs are valid")
}

/// Erdős–Rényi `G(n, p)`, deterministic in `(n, p, seed)`.
pub fn random_graph(n: usize, p: Probability, seed: u64) -> Graph {
    gnp(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
}

/// Like [`random_graph`] but resampled (then patched with a spanning tree)
/// until connected.
pub fn random_connected_graph(n: usize, p: Probability, seed: u64) -> Graph {
    connected_gnp(&mut ChaCha8Rng::seed_from_u64(seed), n, p)
}

struct Sampler<'a> {
    rng: ChaCha8Rng,
    config: &'a TrialConfig,
}

impl Sampler<'_> {
    fn graph_up_to(&mut self, max_n: usize) -> Graph {
        let n = self.rng.random_range(1..=max_n.max(1));
        let p = *self
            .config
            .edge_probabilities
            .choose(&mut self.rng)
            .expect("validated nonempty");
        if self.config.connected_only {
            connected_gnp(&mut self.rng, n, p)
        } else {
            gnp(&mut self.rng, n, p)
        }
    }

    fn graph(&mut self) -> Graph {
        self.graph_up_to(self.config.max_vertices)
    }

    fn graphs(&mut self, k: usize, max_n: usize) -> Vec<Graph> {
        (0..k).map(|_| self.graph_up_to(max_n)).collect()
    }

    fn rooted(&mut self) -> RootedGraph {
        let g = self.graph();
        let root = self.rng.random_range(0..g.order());
        RootedGraph::new(g, root).expect("root drawn in range")
    }

    /// Arity for k-ary identities; four operands only with tiny graphs.
    fn arity(&mut self, allow_four: bool) -> (usize, usize) {
        let top = if allow_four { 4 } else { 3 };
        let k = self.rng.random_range(2..=top);
        let max_n = if k == 4 {
            self.config.max_vertices.min(4)
        } else {
            self.config.max_vertices
        };
        (k, max_n)
    }

    fn operands(&mut self, identity: Identity) -> Operands {
        use Identity as I;
        match identity {
            I::Union | I::Join => {
                let (k, max_n) = self.arity(true);
                Operands::Graphs(self.graphs(k, max_n))
            }
            I::Cartesian | I::M1Cartesian => {
                let (k, max_n) = self.arity(false);
                Operands::Graphs(self.graphs(k, max_n))
            }
            I::JoinCopies => {
                let p = self.rng.random_range(1..=4u64);
                Operands::Counted(self.graph(), p)
            }
            I::Thorn => {
                let t = self.rng.random_range(1..=4u64);
                Operands::Counted(self.graph(), t)
            }
            I::Suspension => Operands::Graphs(vec![self.graph()]),
            I::Composition
            | I::Tensor
            | I::Strong
            | I::Corona
            | I::Disjunction
            | I::SymmetricDifference => Operands::Graphs(self.graphs(2, self.config.max_vertices)),
            I::Hierarchical => {
                let (a, b) = (self.graph(), self.graph());
                let mask: u64 = self.rng.random_range(1..1u64 << b.order());
                let members = (0..b.order()).filter(|&v| mask >> v & 1 == 1);
                let u = VertexSubset::new(members, b.order()).expect("mask is nonempty");
                Operands::Subset(a, b, u)
            }
            I::Cluster => {
                let a = self.graph();
                Operands::Clustered(a, self.rooted())
            }
            I::Splice | I::Link => Operands::Rooted(self.rooted(), self.rooted()),
        }
    }
}

fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn trial_rng(seed: u64, identity: Identity, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(seed ^ fnv1a(identity.name())));
    rng.set_stream(trial as u64);
    rng
}

/// Operands drawn for one trial; exposed so failures can be replayed.
pub fn sample_operands(identity: Identity, config: &TrialConfig, trial: usize) -> Operands {
    let mut sampler = Sampler {
        rng: trial_rng(config.seed, identity, trial),
        config,
    };
    sampler.operands(identity)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: usize,
    pub operands: Vec<String>,
    pub formula: Result<IndexValue>,
    pub direct: IndexValue,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let formula = match &self.formula {
            Ok(v) => v.to_string(),
            Err(e) => format!("error({e})"),
        };
        write!(
            f,
            "trial {}: formula={} direct={} operands: {}",
            self.trial,
            formula,
            self.direct,
            self.operands.join("; ")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: Identity,
    pub trials: usize,
    pub failures: usize,
    /// Mismatches on disconnected operands when `connected_only` is off.
    pub informational: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} trials={} failures={} informational={} {}",
            self.identity,
            self.trials,
            self.failures,
            self.informational,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        if let Some(cx) = &self.first_counterexample {
            write!(f, " first counterexample: {cx}")?;
        }
        Ok(())
    }
}

pub fn check_identity_with(
    identity: Identity,
    config: &TrialConfig,
    fs: &FormulaSet,
) -> Result<VerificationReport> {
    config.validate()?;
    let outcomes = (0..config.trials_per_identity)
        .into_par_iter()
        .map(|trial| {
            let operands = sample_operands(identity, config, trial);
            compare(identity, &operands, fs).map(|cmp| (trial, operands, cmp))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = VerificationReport {
        identity,
        trials: outcomes.len(),
        failures: 0,
        informational: 0,
        first_counterexample: None,
    };
    for (trial, operands, cmp) in outcomes {
        if cmp.agrees() {
            continue;
        }
        if !config.connected_only && !operands.all_connected() {
            report.informational += 1;
            continue;
        }
        report.failures += 1;
        report.first_counterexample.get_or_insert(Counterexample {
            trial,
            operands: operands.describe(),
            formula: cmp.formula,
            direct: cmp.direct,
        });
    }
    Ok(report)
}

/// Checks one identity by name with the standard formulas.
pub fn check_identity(name: &str, config: &TrialConfig) -> Result<VerificationReport> {
    check_identity_with(name.parse()?, config, &FormulaSet::standard())
}

pub fn run_suite_with(config: &TrialConfig, fs: &FormulaSet) -> Result<Vec<VerificationReport>> {
    Identity::ALL
        .into_iter()
        .map(|id| check_identity_with(id, config, fs))
        .collect()
}

/// One report per identity, in [`Identity::ALL`] order.
pub fn run_suite(config: &TrialConfig) -> Result<Vec<VerificationReport>> {
    run_suite_with(config, &FormulaSet::standard())
}
