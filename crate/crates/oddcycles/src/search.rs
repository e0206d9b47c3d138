//! Exhaustive and heuristic search for extremal graphs under odd-girth,
//! triangle-free and observation-class constraints, plus conjecture probes.
//!
//! The built-in generator grows graphs one vertex at a time, pruning any
//! extension that breaks the (hereditary) constraint on the newest vertex,
//! and keeps one representative per isomorphism class per level via
//! canonical certificates. External graph6 streams can replace the built-in
//! generator; they are filtered and deduplicated the same way.

use std::collections::HashSet;
use std::ops::ControlFlow;

use num::{pow::pow, BigRational, BigUint, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, Certificate};
use crate::cycles::{
    count_cycles, count_induced_cycles, exists_induced_cycle_through, has_c6_diagonal_pattern_with,
    observation_class_check,
};
use crate::error::{Error, Result};
use crate::format::write_graph6;
use crate::graph::{BlowupSpec, Graph};
use crate::ser;

/// Largest order the built-in exhaustive generator accepts. Feasibility
/// within the cap still depends on how restrictive the constraint class is.
pub const GENERATION_CAP: usize = 12;

/// Hereditary graph classes the searches range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Constraint {
    /// No odd cycle shorter than the bound.
    OddGirthAtLeast(usize),
    TriangleFree,
    /// No induced C3, no induced C_l for 5 <= l <= k-1, and no hexagon with
    /// one or two main diagonals; k even, k >= 8.
    ObservationClass(usize),
    Unconstrained,
}

impl Constraint {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Constraint::OddGirthAtLeast(k) if k < 3 || k % 2 == 0 => {
                Err(Error::BadOddGirthBound(k))
            }
            Constraint::ObservationClass(k) if k < 8 || k % 2 != 0 => {
                Err(Error::BadObservationLength(k))
            }
            _ => Ok(()),
        }
    }

    /// Full membership test.
    pub fn satisfied_by(&self, g: &Graph) -> bool {
        match *self {
            Constraint::OddGirthAtLeast(k) => g.odd_girth().at_least(k),
            Constraint::TriangleFree => g.odd_girth().at_least(5),
            Constraint::ObservationClass(k) => {
                observation_class_check(g, k).map(|c| c.holds).unwrap_or(false)
            }
            Constraint::Unconstrained => true,
        }
    }

    /// Incremental test after appending vertex `v = g.n()-1` to a graph
    /// already in the class. Hereditary classes only need the newest vertex
    /// checked.
    fn admits_newest(&self, g: &Graph) -> bool {
        let v = g.n() - 1;
        match *self {
            Constraint::Unconstrained => true,
            Constraint::TriangleFree => no_triangle_at(g, v),
            Constraint::OddGirthAtLeast(k) => {
                g.shortest_odd_walk_through(v).is_none_or(|l| l >= k)
            }
            Constraint::ObservationClass(k) => {
                if !no_triangle_at(g, v) {
                    return false;
                }
                for len in 5..k {
                    if exists_induced_cycle_through(g, v, len) {
                        return false;
                    }
                }
                !has_c6_diagonal_pattern_with(g, v)
            }
        }
    }

    /// Does membership imply the hypothesis under which the (n/k)^k bound
    /// is known for the chosen counting mode?
    pub fn implies_bound(&self, k: usize, mode: CountMode) -> bool {
        match (*self, mode) {
            (Constraint::OddGirthAtLeast(m), CountMode::Cycles) => {
                m >= k && k % 2 == 1 && k >= 5
            }
            (Constraint::TriangleFree, CountMode::Cycles) => k == 5,
            (Constraint::ObservationClass(m), CountMode::InducedCycles) => m == k,
            _ => false,
        }
    }
}

impl std::fmt::Display for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Constraint::OddGirthAtLeast(k) => write!(f, "odd-girth>={k}"),
            Constraint::TriangleFree => write!(f, "triangle-free"),
            Constraint::ObservationClass(k) => write!(f, "observation({k})"),
            Constraint::Unconstrained => write!(f, "unconstrained"),
        }
    }
}

fn no_triangle_at(g: &Graph, v: usize) -> bool {
    let nb = *g.neighbors(v);
    nb.iter().all(|u| !(*g.neighbors(u)).intersects(&nb))
}

/// Which quantity a search maximizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CountMode {
    Cycles,
    InducedCycles,
}

pub fn count_for_mode(g: &Graph, k: usize, mode: CountMode) -> Result<BigUint> {
    match mode {
        CountMode::Cycles => count_cycles(g, k),
        CountMode::InducedCycles => count_induced_cycles(g, k),
    }
}

/// Stream one representative per isomorphism class of graphs on `n`
/// vertices satisfying `constraint`, in certificate order. Returns how
/// many classes the final level holds (the sink may stop early).
pub fn generate_constrained_graphs<F>(n: usize, constraint: &Constraint, mut sink: F) -> Result<u64>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    constraint.validate()?;
    if n > GENERATION_CAP {
        return Err(Error::GenerationOrderTooLarge { order: n, cap: GENERATION_CAP });
    }
    if n == 0 {
        let g = Graph::empty(0)?;
        let _ = sink(&g);
        return Ok(1);
    }

    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for t in 2..=n {
        let mut seen: HashSet<Certificate> = HashSet::new();
        let mut next: Vec<(Certificate, Graph)> = Vec::new();
        for parent in &level {
            for mask in 0u64..(1u64 << (t - 1)) {
                let mut nb = VertexSet::empty();
                for b in 0..t - 1 {
                    if mask >> b & 1 == 1 {
                        nb.insert(b);
                    }
                }
                let child = parent.with_vertex_appended(&nb)?;
                if !constraint.admits_newest(&child) {
                    continue;
                }
                let canon = canonical_form(&child);
                if seen.insert(canon.certificate.clone()) {
                    next.push((canon.certificate, canon.graph));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
    }

    let total = level.len() as u64;
    for g in &level {
        if sink(g).is_break() {
            break;
        }
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SearchMethod {
    Exhaustive,
    HillClimb,
}

/// Outcome of one search run.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub k: usize,
    pub constraint: Constraint,
    pub mode: CountMode,
    pub method: SearchMethod,
    #[serde(serialize_with = "ser::biguint")]
    pub best_count: BigUint,
    /// floor(n^k / k^k)
    #[serde(serialize_with = "ser::biguint")]
    pub bound_floor: BigUint,
    /// The constraint implies the hypothesis under which the bound is known.
    pub bound_applicable: bool,
    pub bound_attained: bool,
    /// graph6 records of the graphs attaining best_count, one per
    /// isomorphism class, sorted. Heuristic runs cap the list.
    pub extremal_graphs: Vec<String>,
    pub graphs_examined: u64,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
}

fn bound_floor(n: usize, k: usize) -> BigUint {
    pow(BigUint::from(n), k) / pow(BigUint::from(k), k)
}

fn finish_report(mut report: SearchReport) -> SearchReport {
    report.bound_attained = report.bound_applicable && report.best_count == report.bound_floor;
    if report.bound_applicable {
        // the bound is a theorem on these classes; exceeding it here means
        // a counting or generation bug, not new mathematics
        assert!(
            report.best_count <= report.bound_floor,
            "bound violated: {} > {} for n={} k={} {}",
            report.best_count,
            report.bound_floor,
            report.n,
            report.k,
            report.constraint,
        );
    }
    report.extremal_graphs.sort();
    report.extremal_graphs.dedup();
    report
}

/// Exact maximum of the chosen count over the whole constraint class, with
/// every extremal graph recorded up to isomorphism.
pub fn exhaustive_search(
    n: usize,
    k: usize,
    constraint: Constraint,
    mode: CountMode,
) -> Result<SearchReport> {
    if k < 3 {
        return Err(Error::CycleLengthTooSmall(k));
    }
    let (best, extremal, examined) = exhaustive_max(n, k, constraint, mode)?;
    Ok(finish_report(SearchReport {
        n,
        k,
        constraint,
        mode,
        method: SearchMethod::Exhaustive,
        best_count: best,
        bound_floor: bound_floor(n, k),
        bound_applicable: constraint.implies_bound(k, mode),
        bound_attained: false,
        extremal_graphs: extremal,
        graphs_examined: examined,
        seed: None,
        budget: None,
    }))
}

fn exhaustive_max(
    n: usize,
    k: usize,
    constraint: Constraint,
    mode: CountMode,
) -> Result<(BigUint, Vec<String>, u64)> {
    let mut best = BigUint::ZERO;
    let mut extremal: Vec<String> = Vec::new();
    let mut examined = 0u64;
    let mut failure: Option<Error> = None;
    generate_constrained_graphs(n, &constraint, |g| {
        examined += 1;
        let count = match count_for_mode(g, k, mode) {
            Ok(c) => c,
            Err(e) => {
                failure = Some(e);
                return ControlFlow::Break(());
            }
        };
        if count > best {
            best = count.clone();
            extremal.clear();
        }
        if count == best && !best.is_zero() {
            extremal.push(write_graph6(g).expect("order fits graph6"));
        }
        ControlFlow::Continue(())
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok((best, extremal, examined))
}

/// Same contract as [`exhaustive_search`], but over an external stream of
/// graphs instead of the built-in generator. Records with the wrong order
/// or outside the class are skipped; isomorphs are deduplicated.
pub fn exhaustive_search_over<I>(
    n: usize,
    k: usize,
    constraint: Constraint,
    mode: CountMode,
    graphs: I,
) -> Result<SearchReport>
where
    I: IntoIterator<Item = Graph>,
{
    if k < 3 {
        return Err(Error::CycleLengthTooSmall(k));
    }
    constraint.validate()?;
    let mut seen: HashSet<Certificate> = HashSet::new();
    let mut best = BigUint::ZERO;
    let mut extremal: Vec<String> = Vec::new();
    let mut examined = 0u64;
    for g in graphs {
        if g.n() != n || !constraint.satisfied_by(&g) {
            continue;
        }
        let canon = canonical_form(&g);
        if !seen.insert(canon.certificate) {
            continue;
        }
        examined += 1;
        let count = count_for_mode(&g, k, mode)?;
        if count > best {
            best = count.clone();
            extremal.clear();
        }
        if count == best && !best.is_zero() {
            extremal.push(write_graph6(&canon.graph)?);
        }
    }
    Ok(finish_report(SearchReport {
        n,
        k,
        constraint,
        mode,
        method: SearchMethod::Exhaustive,
        best_count: best,
        bound_floor: bound_floor(n, k),
        bound_applicable: constraint.implies_bound(k, mode),
        bound_attained: false,
        extremal_graphs: extremal,
        graphs_examined: examined,
        seed: None,
        budget: None,
    }))
}

/// How many extremal witnesses a heuristic run keeps.
const HILL_CLIMB_WITNESS_CAP: usize = 8;

/// Seeded stochastic local search over edge toggles. Toggles that violate
/// the constraint are rejected, plateau moves are accepted, and the walk
/// restarts from a fresh seed graph after a stall. Deterministic for a
/// fixed (seed, budget): the objective is an exact count and the random
/// stream of restart r is seeded with seed xor r.
pub fn hill_climb(
    n: usize,
    k: usize,
    constraint: Constraint,
    mode: CountMode,
    seed: u64,
    budget: u64,
) -> Result<SearchReport> {
    if k < 3 {
        return Err(Error::CycleLengthTooSmall(k));
    }
    constraint.validate()?;
    let stall_limit = (budget / 10).clamp(200, 20_000);

    let mut best = BigUint::ZERO;
    let mut witnesses: std::collections::BTreeSet<String> = Default::default();
    let mut examined = 0u64;
    let mut toggles = 0u64;
    let mut restart = 0u64;

    fn note_candidate(
        g: &Graph,
        count: &BigUint,
        best: &mut BigUint,
        witnesses: &mut std::collections::BTreeSet<String>,
    ) {
        if *count > *best {
            *best = count.clone();
            witnesses.clear();
        }
        if *count == *best && !best.is_zero() {
            let canon = canonical_form(g).graph;
            witnesses.insert(write_graph6(&canon).expect("order fits graph6"));
            while witnesses.len() > HILL_CLIMB_WITNESS_CAP {
                let last = witnesses.iter().next_back().cloned().expect("nonempty");
                witnesses.remove(&last);
            }
        }
    }

    loop {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ restart);
        let mut g = seed_graph(n, k, &constraint, restart, &mut rng)?;
        debug_assert!(constraint.satisfied_by(&g));
        let mut current = count_for_mode(&g, k, mode)?;
        examined += 1;
        note_candidate(&g, &current, &mut best, &mut witnesses);

        let mut stall = 0u64;
        while toggles < budget && stall < stall_limit {
            toggles += 1;
            let u = rng.random_range(0..n);
            let v = rng.random_range(0..n);
            if u == v {
                stall += 1;
                continue;
            }
            let candidate = g.with_edge_toggled(u, v)?;
            if !constraint.satisfied_by(&candidate) {
                stall += 1;
                continue;
            }
            let count = count_for_mode(&candidate, k, mode)?;
            examined += 1;
            if count > current {
                stall = 0;
                g = candidate;
                current = count;
                note_candidate(&g, &current, &mut best, &mut witnesses);
            } else if count == current {
                // plateau move
                stall += 1;
                g = candidate;
                note_candidate(&g, &current, &mut best, &mut witnesses);
            } else {
                stall += 1;
            }
        }
        if toggles >= budget {
            break;
        }
        restart += 1;
    }

    Ok(finish_report(SearchReport {
        n,
        k,
        constraint,
        mode,
        method: SearchMethod::HillClimb,
        best_count: best,
        bound_floor: bound_floor(n, k),
        bound_applicable: constraint.implies_bound(k, mode),
        bound_attained: false,
        extremal_graphs: witnesses.into_iter().collect(),
        graphs_examined: examined,
        seed: Some(seed),
        budget: Some(budget),
    }))
}

/// Restart 0 starts from the balanced blow-up of C_k; later restarts start
/// from random bipartite graphs. Either seed is repaired by deleting random
/// edges until the constraint holds.
fn seed_graph(
    n: usize,
    k: usize,
    constraint: &Constraint,
    restart: u64,
    rng: &mut ChaCha8Rng,
) -> Result<Graph> {
    let mut g = if restart == 0 && (3..=n).contains(&k) {
        BlowupSpec::balanced(Graph::cycle(k)?, n)?.build()?
    } else {
        let mut edges = Vec::new();
        let side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
        for u in 0..n {
            for v in u + 1..n {
                if side[u] != side[v] && rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges)?
    };
    while !constraint.satisfied_by(&g) {
        let edges = g.edges();
        if edges.is_empty() {
            break;
        }
        let (u, v) = edges[rng.random_range(0..edges.len())];
        g = g.with_edge_toggled(u, v)?;
    }
    Ok(g)
}

/// The two candidate leading coefficients for the count of k-cycles in a
/// balanced blow-up of an (l+2)-cycle, relative to n^k/(l+2)^k.
#[derive(Clone, Debug, Serialize)]
pub struct Conjecture2Coefficient {
    pub k: usize,
    pub l: usize,
    /// Sum over odd windings w of binomial(k, (k - w(l+2))/2).
    #[serde(serialize_with = "ser::biguint")]
    pub binomial_sum: BigUint,
    /// Independent closed-walk reference: (l+2) * binomial_sum / k. The two
    /// references disagree by a factor of (l+2)/k whenever l+2 != k; the
    /// fit table reports measured ratios next to both without asserting
    /// either.
    #[serde(serialize_with = "ser::rational")]
    pub walk_reference: BigRational,
}

pub fn conjecture2_coefficient(k: usize, l: usize) -> Result<Conjecture2Coefficient> {
    if k % 2 == 0 || l % 2 == 0 || l < 3 || k <= l {
        return Err(Error::BadCoefficientParams { k, l });
    }
    let m = l + 2;
    let mut binomial_sum = BigUint::ZERO;
    let mut winding = 1usize;
    while winding * m <= k {
        // k and w(l+2) are both odd, so the difference is even
        binomial_sum += binomial(k, (k - winding * m) / 2);
        winding += 2;
    }
    let walk_reference = BigRational::new(
        (BigUint::from(m) * binomial_sum.clone()).into(),
        BigUint::from(k).into(),
    );
    Ok(Conjecture2Coefficient {
        k,
        l,
        binomial_sum,
        walk_reference,
    })
}

fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::ZERO;
    }
    let mut out = BigUint::one();
    for i in 0..r.min(n - r) {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// One row of the leading-coefficient fit: exact k-cycle count in the
/// balanced blow-up of C_m at blob size t, next to count / t^k.
#[derive(Clone, Debug, Serialize)]
pub struct LeadingFitRow {
    pub t: usize,
    pub n: usize,
    #[serde(serialize_with = "ser::biguint")]
    pub exact_count: BigUint,
    #[serde(serialize_with = "ser::rational")]
    pub ratio: BigRational,
}

pub fn blowup_leading_fit(
    k: usize,
    m: usize,
    t_values: impl IntoIterator<Item = usize>,
) -> Result<Vec<LeadingFitRow>> {
    if k < 3 || m < 3 {
        return Err(Error::CycleLengthTooSmall(k.min(m)));
    }
    let mut rows = Vec::new();
    for t in t_values {
        let n = m * t;
        if t == 0 || n > 32 || k > 13 {
            return Err(Error::FitInfeasible { pattern: m, blob: t });
        }
        let g = BlowupSpec::new(Graph::cycle(m)?, vec![t; m])?.build()?;
        let exact_count = count_cycles(&g, k)?;
        let ratio = BigRational::new(
            exact_count.clone().into(),
            pow(BigUint::from(t), k).into(),
        );
        rows.push(LeadingFitRow { t, n, exact_count, ratio });
    }
    Ok(rows)
}

/// What a probe run should test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeSpec {
    /// Max induced C_k over all triangle-free graphs on n vertices vs
    /// floor((n/k)^k).
    Conjecture1 { n: usize, k: usize },
    /// Exact blow-up counts vs the two candidate coefficients.
    Conjecture2 { k: usize, l: usize, t_max: usize },
    /// Max induced C_k over the observation class on n vertices vs
    /// floor((n/k)^k).
    Observation { n: usize, k: usize },
}

/// Probe outcome. Probes report findings instead of failing: a conjecture
/// is a hypothesis, not a contract.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum ProbeReport {
    #[serde(rename = "conjecture1")]
    Conjecture1(BoundProbeReport),
    #[serde(rename = "conjecture2")]
    Conjecture2(CoefficientProbeReport),
    #[serde(rename = "observation")]
    Observation(BoundProbeReport),
}

impl ProbeReport {
    pub fn findings(&self) -> &[String] {
        match self {
            ProbeReport::Conjecture1(r) | ProbeReport::Observation(r) => &r.findings,
            ProbeReport::Conjecture2(r) => &r.findings,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundProbeReport {
    pub n: usize,
    pub k: usize,
    pub classes_examined: u64,
    #[serde(serialize_with = "ser::biguint")]
    pub max_count: BigUint,
    #[serde(serialize_with = "ser::biguint")]
    pub bound_floor: BigUint,
    pub holds: bool,
    /// graph6 records of the class members attaining max_count.
    pub witnesses: Vec<String>,
    pub findings: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientProbeReport {
    pub k: usize,
    pub l: usize,
    pub coefficient: Conjecture2Coefficient,
    pub fit: Vec<LeadingFitRow>,
    /// Which reference the measured ratios approach is reported, never
    /// asserted; the two candidates disagree and both are shown.
    pub note: String,
    pub findings: Vec<String>,
}

pub fn conjecture_probe(spec: ProbeSpec) -> Result<ProbeReport> {
    match spec {
        ProbeSpec::Conjecture1 { n, k } => {
            Ok(ProbeReport::Conjecture1(bound_probe(n, k, Constraint::TriangleFree)?))
        }
        ProbeSpec::Observation { n, k } => {
            Ok(ProbeReport::Observation(bound_probe(n, k, Constraint::ObservationClass(k))?))
        }
        ProbeSpec::Conjecture2 { k, l, t_max } => {
            let coefficient = conjecture2_coefficient(k, l)?;
            let fit = blowup_leading_fit(k, l + 2, 1..=t_max.max(1))?;
            let mut findings = Vec::new();
            let binom = BigRational::from_integer(coefficient.binomial_sum.clone().into());
            let walk = coefficient.walk_reference.clone();
            for row in &fit {
                if row.ratio > binom.clone().max(walk.clone()) {
                    findings.push(format!(
                        "t={}: measured ratio {} exceeds both candidate coefficients",
                        row.t,
                        ser::rational_string(&row.ratio)
                    ));
                }
            }
            let note = format!(
                "candidate leading coefficients for C_{k} counts in balanced C_{m} blow-ups: \
                 binomial sum {bs} and closed-walk reference {wr}; measured ratios \
                 exact_count/t^{k} are listed for comparison and neither candidate is asserted",
                m = l + 2,
                bs = coefficient.binomial_sum,
                wr = ser::rational_string(&coefficient.walk_reference),
            );
            Ok(ProbeReport::Conjecture2(CoefficientProbeReport {
                k,
                l,
                coefficient,
                fit,
                note,
                findings,
            }))
        }
    }
}

fn bound_probe(n: usize, k: usize, constraint: Constraint) -> Result<BoundProbeReport> {
    if k < 3 {
        return Err(Error::CycleLengthTooSmall(k));
    }
    // no theorem assertion here: a violated conjecture is a finding
    let (max_count, mut witnesses, examined) = {
        let mut best = BigUint::ZERO;
        let mut witnesses: Vec<String> = Vec::new();
        let mut examined = 0u64;
        let mut failure: Option<Error> = None;
        generate_constrained_graphs(n, &constraint, |g| {
            examined += 1;
            let count = match count_for_mode(g, k, CountMode::InducedCycles) {
                Ok(c) => c,
                Err(e) => {
                    failure = Some(e);
                    return ControlFlow::Break(());
                }
            };
            if count > best {
                best = count.clone();
                witnesses.clear();
            }
            if count == best && !best.is_zero() {
                witnesses.push(write_graph6(g).expect("order fits graph6"));
            }
            ControlFlow::Continue(())
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
        (best, witnesses, examined)
    };
    witnesses.sort();
    let floor = bound_floor(n, k);
    let holds = max_count <= floor;
    let mut findings = Vec::new();
    if !holds {
        findings.push(format!(
            "bound exceeded on {n} vertices: max induced C_{k} count {max_count} > floor {floor}"
        ));
    }
    Ok(BoundProbeReport {
        n,
        k,
        classes_examined: examined,
        max_count,
        bound_floor: floor,
        holds,
        witnesses,
        findings,
    })
}
