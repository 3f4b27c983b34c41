//! Exhaustive streams of connected labelled graphs, data-parallel bound
//! sweeps, and the aggregated verification report.
//!
//! Built-in enumeration walks every edge mask of the n-vertex labelled
//! graph in ascending order (bit k of the mask is the k-th column-major
//! vertex pair, the graph6 bit order) and keeps the connected ones. Work is
//! partitioned into disjoint mask ranges; each worker folds a partial
//! report and the partials merge with an order-insensitive, commutative
//! merge, so the report content is identical for any worker count. Witness
//! lists keep the lexicographically smallest graph6 strings per vertex
//! count, capped.
//!
//! The report's `elapsed_ms` and `workers` fields are the only
//! nondeterministic content; [`VerificationReport::canonical_json`] zeroes
//! them for byte-comparison.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{evaluate, check, BoundId};
use crate::graph::{emit_graph6, parse_graph6, Graph, Graph6Error};
use crate::invariants::{compute_all, InvariantSet, Rational};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid sweep range: {0}")]
    BadRange(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("graph6 parse error at line {line}: {source}")]
    ParseLine { line: usize, source: Graph6Error },
}

/// Where the graphs come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepSource {
    /// All connected labelled graphs with `n_min ≤ n ≤ n_max`.
    Builtin,
    /// Newline-separated graph6 file; disconnected entries are skipped and
    /// counted.
    Graph6Stream(PathBuf),
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub n_min: u32,
    pub n_max: u32,
    /// Bounds to evaluate; empty means the whole catalogue.
    pub bounds: Vec<BoundId>,
    pub include_nordhaus_gaddum: bool,
    pub source: SweepSource,
    /// 0 = default parallelism.
    pub workers: usize,
    /// Gate for the n = 8 built-in range (2^28 masks).
    pub allow_large: bool,
    /// Witness list cap per bound, vertex count, and category.
    pub witness_cap: usize,
    /// Structural identity suite evaluated on every graph.
    pub check_identities: bool,
    /// Recompute ξ_c naively on every `oracle_stride`-th mask (0 = off).
    pub oracle_stride: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            n_min: 2,
            n_max: 7,
            bounds: Vec::new(),
            include_nordhaus_gaddum: true,
            source: SweepSource::Builtin,
            workers: 0,
            allow_large: false,
            witness_cap: 10,
            check_identities: true,
            oracle_stride: 100,
        }
    }
}

/// Capped, sorted set of the lexicographically smallest witness strings.
#[derive(Debug, Clone, Default, Serialize)]
#[serde(transparent)]
struct WitnessSet(Vec<String>);

impl WitnessSet {
    fn insert(&mut self, cap: usize, s: String) {
        if cap == 0 {
            return;
        }
        if self.0.len() == cap {
            if let Some(last) = self.0.last() {
                if *last <= s {
                    return;
                }
            }
        }
        match self.0.binary_search(&s) {
            Ok(_) => {}
            Err(pos) => {
                self.0.insert(pos, s);
                self.0.truncate(cap);
            }
        }
    }

    fn merge(&mut self, cap: usize, other: WitnessSet) {
        for s in other.0 {
            self.insert(cap, s);
        }
    }
}

#[derive(Debug, Clone, Default)]
struct BoundAccum {
    checked: u64,
    holds: u64,
    violations: u64,
    violations_per_n: BTreeMap<u32, u64>,
    violation_witnesses: BTreeMap<u32, WitnessSet>,
    equality: u64,
    equality_per_n: BTreeMap<u32, u64>,
    equality_witnesses: BTreeMap<u32, WitnessSet>,
    agreement_checked: u64,
    agreement_failures: u64,
    agreement_failures_per_n: BTreeMap<u32, u64>,
    agreement_failure_witnesses: BTreeMap<u32, WitnessSet>,
    trivially_satisfied: u64,
    inapplicable: u64,
}

impl BoundAccum {
    fn merge(&mut self, cap: usize, other: BoundAccum) {
        self.checked += other.checked;
        self.holds += other.holds;
        self.violations += other.violations;
        merge_counts(&mut self.violations_per_n, other.violations_per_n);
        merge_witnesses(&mut self.violation_witnesses, other.violation_witnesses, cap);
        self.equality += other.equality;
        merge_counts(&mut self.equality_per_n, other.equality_per_n);
        merge_witnesses(&mut self.equality_witnesses, other.equality_witnesses, cap);
        self.agreement_checked += other.agreement_checked;
        self.agreement_failures += other.agreement_failures;
        merge_counts(
            &mut self.agreement_failures_per_n,
            other.agreement_failures_per_n,
        );
        merge_witnesses(
            &mut self.agreement_failure_witnesses,
            other.agreement_failure_witnesses,
            cap,
        );
        self.trivially_satisfied += other.trivially_satisfied;
        self.inapplicable += other.inapplicable;
    }
}

fn merge_counts(into: &mut BTreeMap<u32, u64>, from: BTreeMap<u32, u64>) {
    for (k, v) in from {
        *into.entry(k).or_insert(0) += v;
    }
}

fn merge_witnesses(into: &mut BTreeMap<u32, WitnessSet>, from: BTreeMap<u32, WitnessSet>, cap: usize) {
    for (k, v) in from {
        into.entry(k).or_default().merge(cap, v);
    }
}

#[derive(Debug, Clone)]
struct Partial {
    total_graphs: u64,
    graphs_per_n: BTreeMap<u32, u64>,
    bounds: Vec<BoundAccum>,
    identity_checks: u64,
    identity_failures: u64,
    identity_witnesses: WitnessSet,
    oracle_samples: u64,
    oracle_mismatches: u64,
    oracle_witnesses: WitnessSet,
}

impl Partial {
    fn empty(bound_count: usize) -> Self {
        Partial {
            total_graphs: 0,
            graphs_per_n: BTreeMap::new(),
            bounds: vec![BoundAccum::default(); bound_count],
            identity_checks: 0,
            identity_failures: 0,
            identity_witnesses: WitnessSet::default(),
            oracle_samples: 0,
            oracle_mismatches: 0,
            oracle_witnesses: WitnessSet::default(),
        }
    }

    fn merge(mut self, cap: usize, other: Partial) -> Partial {
        self.total_graphs += other.total_graphs;
        merge_counts(&mut self.graphs_per_n, other.graphs_per_n);
        for (a, b) in self.bounds.iter_mut().zip(other.bounds) {
            a.merge(cap, b);
        }
        self.identity_checks += other.identity_checks;
        self.identity_failures += other.identity_failures;
        self.identity_witnesses.merge(cap, other.identity_witnesses);
        self.oracle_samples += other.oracle_samples;
        self.oracle_mismatches += other.oracle_mismatches;
        self.oracle_witnesses.merge(cap, other.oracle_witnesses);
        self
    }
}

/// Per-bound slice of the final report.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub id: BoundId,
    pub description: String,
    pub asserted: bool,
    pub graphs_checked: u64,
    pub holds_count: u64,
    pub violation_count: u64,
    pub violations_per_n: BTreeMap<u32, u64>,
    pub violation_witnesses: BTreeMap<u32, Vec<String>>,
    pub equality_count: u64,
    pub equality_per_n: BTreeMap<u32, u64>,
    pub equality_witnesses: BTreeMap<u32, Vec<String>>,
    pub agreement_checked: u64,
    pub agreement_failure_count: u64,
    pub agreement_failures_per_n: BTreeMap<u32, u64>,
    pub agreement_failure_witnesses: BTreeMap<u32, Vec<String>>,
    pub trivially_satisfied_count: u64,
    pub inapplicable_count: u64,
}

/// Fixed probes of the stated-form regression: the complete graph violates
/// `T1ii_stated_U` at every n ≥ 3, and the report carries each one.
#[derive(Debug, Clone, Serialize)]
pub struct RegressionProbe {
    pub n: u32,
    pub graph6: String,
    pub bound: BoundId,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub graphs_checked: u64,
    pub failures: u64,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub samples: u64,
    pub mismatches: u64,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub n_min: u32,
    pub n_max: u32,
    pub bounds: Vec<BoundId>,
    pub include_nordhaus_gaddum: bool,
    pub source: String,
    pub witness_cap: usize,
    pub check_identities: bool,
    pub oracle_stride: u64,
}

/// Aggregate result of one sweep. Everything except `elapsed_ms` and
/// `workers` is deterministic for a given config.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub config: ConfigEcho,
    pub total_graphs: u64,
    pub graphs_per_n: BTreeMap<u32, u64>,
    pub skipped_disconnected: u64,
    pub bounds: Vec<BoundReport>,
    pub identities: IdentityReport,
    pub oracle: OracleReport,
    pub regressions: Vec<RegressionProbe>,
    pub elapsed_ms: u64,
    pub workers: usize,
}

impl VerificationReport {
    /// Total violations among asserted bounds (the hard-failure count).
    pub fn asserted_violations(&self) -> u64 {
        self.bounds
            .iter()
            .filter(|b| b.asserted)
            .map(|b| b.violation_count)
            .sum()
    }

    pub fn bound(&self, id: BoundId) -> Option<&BoundReport> {
        self.bounds.iter().find(|b| b.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with the nondeterministic fields (`elapsed_ms`, `workers`)
    /// zeroed; two sweeps with the same config produce byte-identical
    /// canonical JSON regardless of worker count.
    pub fn canonical_json(&self) -> String {
        let mut clone = self.clone();
        clone.elapsed_ms = 0;
        clone.workers = 0;
        serde_json::to_string_pretty(&clone).expect("report serializes")
    }

    /// One CSV row per bound. graph6 text never contains commas or quotes
    /// (its alphabet is 63..=126), so witnesses join with `;` unquoted.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "bound,asserted,graphs_checked,holds,violations,equality_count,\
             agreement_checked,agreement_failures,trivially_satisfied,inapplicable,\
             violation_witnesses,equality_witnesses,agreement_failure_witnesses\n",
        );
        for b in &self.bounds {
            let join = |m: &BTreeMap<u32, Vec<String>>| {
                m.values()
                    .flat_map(|v| v.iter().cloned())
                    .collect::<Vec<_>>()
                    .join(";")
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                b.id,
                b.asserted,
                b.graphs_checked,
                b.holds_count,
                b.violation_count,
                b.equality_count,
                b.agreement_checked,
                b.agreement_failure_count,
                b.trivially_satisfied_count,
                b.inapplicable_count,
                join(&b.violation_witnesses),
                join(&b.equality_witnesses),
                join(&b.agreement_failure_witnesses),
            ));
        }
        out
    }
}

/// Streams every connected labelled graph on `n` vertices in ascending
/// edge-mask order.
pub fn connected_labeled_graphs(n: u32) -> Result<impl Iterator<Item = Graph>, SweepError> {
    if !(1..=8).contains(&n) {
        return Err(SweepError::BadRange(format!(
            "built-in enumeration supports 1 <= n <= 8 (got {n})"
        )));
    }
    let nbits = n * (n - 1) / 2;
    Ok((0..1u64 << nbits).filter_map(move |mask| {
        let g = Graph::from_edge_mask(n as usize, mask).expect("n is in range");
        g.is_connected().then_some(g)
    }))
}

/// Reads a graph6 file, yielding connected graphs in file order.
/// Disconnected entries are skipped and counted in `skipped_disconnected`;
/// a malformed line aborts with its line number.
pub struct Graph6Reader {
    lines: std::io::Lines<BufReader<File>>,
    line_no: usize,
    pub skipped_disconnected: u64,
}

impl Graph6Reader {
    pub fn open(path: &Path) -> Result<Self, SweepError> {
        let file = File::open(path).map_err(|source| SweepError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(Graph6Reader {
            lines: BufReader::new(file).lines(),
            line_no: 0,
            skipped_disconnected: 0,
        })
    }
}

impl Iterator for Graph6Reader {
    type Item = Result<Graph, SweepError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(l) => l,
                Err(source) => {
                    return Some(Err(SweepError::Io {
                        path: PathBuf::new(),
                        source,
                    }))
                }
            };
            self.line_no += 1;
            if line.trim().is_empty() {
                continue;
            }
            match parse_graph6(&line) {
                Ok(g) => {
                    if g.is_connected() {
                        return Some(Ok(g));
                    }
                    self.skipped_disconnected += 1;
                }
                Err(source) => {
                    return Some(Err(SweepError::ParseLine {
                        line: self.line_no,
                        source,
                    }))
                }
            }
        }
    }
}

/// Opens a graph6 stream (see [`Graph6Reader`]).
pub fn read_graph6_stream(path: &Path) -> Result<Graph6Reader, SweepError> {
    Graph6Reader::open(path)
}

/// The structural identity suite evaluated on every swept graph. Returns a
/// failure label when some identity breaks (an implementation-soundness
/// alarm, never expected to fire).
fn identity_failure(g: &Graph, inv: &InvariantSet) -> Option<&'static str> {
    let n = inv.n;
    let sum_delta: u64 = inv
        .profile
        .neighbor_degree_sum
        .iter()
        .map(|&x| x as u64)
        .sum();
    if sum_delta != inv.m1 {
        return Some("sum_delta_neq_m1");
    }
    let sum_deg_delta: u64 = (0..n as usize)
        .map(|v| inv.profile.degree[v] as u64 * inv.profile.neighbor_degree_sum[v] as u64)
        .sum();
    if sum_deg_delta != 2 * inv.m2 {
        return Some("sum_deg_delta_neq_2m2");
    }
    if inv.xi_c < inv.xi_cc {
        return Some("xi_c_below_xi_cc");
    }
    if Rational::new(inv.wiener as i128, 1) < inv.harary {
        return Some("wiener_below_harary");
    }
    if !(inv.radius <= inv.diameter && inv.diameter <= 2 * inv.radius) {
        return Some("radius_diameter_relation");
    }
    for v in 0..n as usize {
        let ecc = inv.profile.eccentricity[v];
        let deg = inv.profile.degree[v];
        if ecc > n - deg {
            return Some("ecc_above_n_minus_deg");
        }
        if (ecc as u64) * (n as u64 - 1) < inv.profile.distance_sum[v] as u64 {
            return Some("ecc_below_mean_distance");
        }
    }
    // Collapse identities: k-regular gives ξ_c = k·ξ^c = k²·θ; a single
    // shared eccentricity e gives ξ_c = e·M1.
    if inv.max_degree == inv.min_degree {
        let k = inv.max_degree as u64;
        if inv.xi_c != k * inv.xi_cc || inv.xi_c != k * k * inv.theta {
            return Some("regular_collapse");
        }
    }
    if inv.radius == inv.diameter && inv.xi_c != inv.radius as u64 * inv.m1 {
        return Some("self_centered_collapse");
    }
    let _ = g;
    None
}

/// Independent ξ_c recomputation: adjacency lists rebuilt from scratch,
/// queue-based BFS, explicit neighbour-degree summation. Shares nothing with
/// the bit-set kernel beyond the `Graph` accessor API.
fn naive_xi_c(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let lists: Vec<Vec<usize>> = (0..n).map(|u| g.neighbor_ids(u).collect()).collect();
    let deg: Vec<usize> = lists.iter().map(|l| l.len()).collect();
    let mut xi = 0u64;
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for v in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[v] = 0;
        queue.clear();
        queue.push_back(v);
        let mut ecc = 0usize;
        while let Some(u) = queue.pop_front() {
            for &w in &lists[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    ecc = ecc.max(dist[w]);
                    queue.push_back(w);
                }
            }
        }
        let delta: u64 = lists[v].iter().map(|&u| deg[u] as u64).sum();
        xi += delta * ecc as u64;
    }
    xi
}

struct SweepPlan {
    bounds: Vec<BoundId>,
    include_ng: bool,
    witness_cap: usize,
    check_identities: bool,
    oracle_stride: u64,
}

impl SweepPlan {
    fn wants_complement(&self) -> bool {
        self.include_ng && self.bounds.contains(&BoundId::T12_NG)
    }
}

fn process_graph(g: &Graph, sample_oracle: bool, plan: &SweepPlan, acc: &mut Partial) {
    let inv = compute_all(g).expect("sweeps only visit connected graphs");
    let n = inv.n;
    acc.total_graphs += 1;
    *acc.graphs_per_n.entry(n).or_insert(0) += 1;

    // Complement invariants once per graph when the Nordhaus–Gaddum check
    // is live and can apply.
    let comp_inv = if plan.wants_complement() && n >= 4 {
        let gc = g.complement();
        gc.is_connected().then(|| compute_all(&gc).expect("connected"))
    } else {
        None
    };

    let mut g6: Option<String> = None;
    for (slot, &id) in plan.bounds.iter().enumerate() {
        let accum = &mut acc.bounds[slot];
        let comp = if id == BoundId::T12_NG {
            comp_inv.as_ref()
        } else {
            None
        };
        if id == BoundId::T12_NG && !plan.include_ng {
            accum.inapplicable += 1;
            continue;
        }
        match evaluate(id, g, &inv, comp) {
            None => accum.inapplicable += 1,
            Some(out) => {
                accum.checked += 1;
                if out.holds {
                    accum.holds += 1;
                } else {
                    accum.violations += 1;
                    *accum.violations_per_n.entry(n).or_insert(0) += 1;
                    let s = g6.get_or_insert_with(|| emit_graph6(g)).clone();
                    accum
                        .violation_witnesses
                        .entry(n)
                        .or_default()
                        .insert(plan.witness_cap, s);
                }
                if out.trivially_satisfied {
                    accum.trivially_satisfied += 1;
                }
                if out.is_equality {
                    accum.equality += 1;
                    *accum.equality_per_n.entry(n).or_insert(0) += 1;
                    let s = g6.get_or_insert_with(|| emit_graph6(g)).clone();
                    accum
                        .equality_witnesses
                        .entry(n)
                        .or_default()
                        .insert(plan.witness_cap, s);
                }
                if let Some(agree) = out.agreement() {
                    accum.agreement_checked += 1;
                    if !agree {
                        accum.agreement_failures += 1;
                        *accum.agreement_failures_per_n.entry(n).or_insert(0) += 1;
                        let s = g6.get_or_insert_with(|| emit_graph6(g)).clone();
                        accum
                            .agreement_failure_witnesses
                            .entry(n)
                            .or_default()
                            .insert(plan.witness_cap, s);
                    }
                }
            }
        }
    }

    if plan.check_identities {
        acc.identity_checks += 1;
        if let Some(label) = identity_failure(g, &inv) {
            acc.identity_failures += 1;
            let s = format!("{}:{}", emit_graph6(g), label);
            acc.identity_witnesses.insert(plan.witness_cap, s);
        }
    }

    if sample_oracle {
        acc.oracle_samples += 1;
        let expected = naive_xi_c(g);
        if expected != inv.xi_c {
            acc.oracle_mismatches += 1;
            acc.oracle_witnesses
                .insert(plan.witness_cap, emit_graph6(g));
        }
    }
}

fn sweep_builtin(cfg: &SweepConfig, plan: &SweepPlan) -> Partial {
    let cap = plan.witness_cap;
    let mut total = Partial::empty(plan.bounds.len());
    for n in cfg.n_min..=cfg.n_max {
        let nbits = n * (n - 1) / 2;
        let mask_count = 1u64 << nbits;
        // Fixed chunking per n keeps partition boundaries independent of
        // the worker count.
        let chunk = (mask_count / 512).max(1024).min(mask_count);
        let chunks: Vec<(u64, u64)> = (0..mask_count)
            .step_by(chunk as usize)
            .map(|lo| (lo, (lo + chunk).min(mask_count)))
            .collect();
        let part = chunks
            .into_par_iter()
            .map(|(lo, hi)| {
                let mut acc = Partial::empty(plan.bounds.len());
                for mask in lo..hi {
                    let g = Graph::from_edge_mask(n as usize, mask).expect("n in range");
                    if !g.is_connected() {
                        continue;
                    }
                    let sample =
                        plan.oracle_stride != 0 && mask.is_multiple_of(plan.oracle_stride);
                    process_graph(&g, sample, plan, &mut acc);
                }
                acc
            })
            .reduce(|| Partial::empty(plan.bounds.len()), |a, b| a.merge(cap, b));
        total = total.merge(cap, part);
    }
    total
}

fn sweep_stream(
    path: &Path,
    plan: &SweepPlan,
) -> Result<(Partial, u64, BTreeSet<u32>), SweepError> {
    let mut reader = Graph6Reader::open(path)?;
    let mut graphs = Vec::new();
    for item in reader.by_ref() {
        graphs.push(item?);
    }
    let skipped = reader.skipped_disconnected;
    let ns: BTreeSet<u32> = graphs.iter().map(|g| g.vertex_count() as u32).collect();
    let cap = plan.witness_cap;
    let part = graphs
        .par_chunks(1024)
        .enumerate()
        .map(|(chunk_idx, chunk)| {
            let mut acc = Partial::empty(plan.bounds.len());
            for (off, g) in chunk.iter().enumerate() {
                let idx = (chunk_idx * 1024 + off) as u64;
                let sample = plan.oracle_stride != 0 && idx.is_multiple_of(plan.oracle_stride);
                process_graph(g, sample, plan, &mut acc);
            }
            acc
        })
        .reduce(|| Partial::empty(plan.bounds.len()), |a, b| a.merge(cap, b));
    Ok((part, skipped, ns))
}

fn regression_probes(ns: impl Iterator<Item = u32>) -> Vec<RegressionProbe> {
    let mut out = Vec::new();
    for n in ns {
        if n < 3 {
            continue;
        }
        let g = crate::families::FamilySpec::Complete { n }
            .build()
            .expect("complete graph in range");
        let inv = compute_all(&g).expect("connected");
        let c = check(&g, &inv, BoundId::T1ii_stated_U).expect("applicable for n >= 3");
        out.push(RegressionProbe {
            n,
            graph6: emit_graph6(&g),
            bound: BoundId::T1ii_stated_U,
            holds: c.holds,
            lhs: c.lhs,
            rhs: c.rhs,
        });
    }
    out
}

/// Runs a sweep and aggregates the verification report.
///
/// The report is deterministic for a given config (modulo `elapsed_ms` and
/// `workers`): counts merge additively and witness lists keep the
/// lexicographically smallest entries, so partitioning cannot change the
/// result.
pub fn sweep(cfg: &SweepConfig) -> Result<VerificationReport, SweepError> {
    if cfg.source == SweepSource::Builtin {
        if cfg.n_min < 2 || cfg.n_min > cfg.n_max || cfg.n_max > 8 {
            return Err(SweepError::BadRange(format!(
                "need 2 <= n_min <= n_max <= 8 (got {}..{})",
                cfg.n_min, cfg.n_max
            )));
        }
        if cfg.n_max == 8 && !cfg.allow_large {
            return Err(SweepError::BadRange(
                "n_max = 8 enumerates 2^28 masks; pass allow_large to confirm".into(),
            ));
        }
    }
    let bounds = if cfg.bounds.is_empty() {
        BoundId::ALL.to_vec()
    } else {
        cfg.bounds.clone()
    };
    let plan = SweepPlan {
        bounds: bounds.clone(),
        include_ng: cfg.include_nordhaus_gaddum,
        witness_cap: cfg.witness_cap,
        check_identities: cfg.check_identities,
        oracle_stride: cfg.oracle_stride,
    };

    let started = Instant::now();
    let run = || -> Result<(Partial, u64, Vec<RegressionProbe>), SweepError> {
        match &cfg.source {
            SweepSource::Builtin => {
                let part = sweep_builtin(cfg, &plan);
                let probes = regression_probes(cfg.n_min..=cfg.n_max);
                Ok((part, 0, probes))
            }
            SweepSource::Graph6Stream(path) => {
                let (part, skipped, ns) = sweep_stream(path, &plan)?;
                let probes = regression_probes(ns.into_iter());
                Ok((part, skipped, probes))
            }
        }
    };
    let (partial, skipped_disconnected, regressions) = if cfg.workers > 0 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| SweepError::BadRange(format!("cannot build worker pool: {e}")))?;
        pool.install(run)?
    } else {
        run()?
    };

    let bounds_report = bounds
        .iter()
        .zip(partial.bounds)
        .map(|(&id, acc)| BoundReport {
            id,
            description: id.description().to_string(),
            asserted: id.asserted(),
            graphs_checked: acc.checked,
            holds_count: acc.holds,
            violation_count: acc.violations,
            violations_per_n: acc.violations_per_n,
            violation_witnesses: acc
                .violation_witnesses
                .into_iter()
                .map(|(k, v)| (k, v.0))
                .collect(),
            equality_count: acc.equality,
            equality_per_n: acc.equality_per_n,
            equality_witnesses: acc
                .equality_witnesses
                .into_iter()
                .map(|(k, v)| (k, v.0))
                .collect(),
            agreement_checked: acc.agreement_checked,
            agreement_failure_count: acc.agreement_failures,
            agreement_failures_per_n: acc.agreement_failures_per_n,
            agreement_failure_witnesses: acc
                .agreement_failure_witnesses
                .into_iter()
                .map(|(k, v)| (k, v.0))
                .collect(),
            trivially_satisfied_count: acc.trivially_satisfied,
            inapplicable_count: acc.inapplicable,
        })
        .collect();

    Ok(VerificationReport {
        config: ConfigEcho {
            n_min: cfg.n_min,
            n_max: cfg.n_max,
            bounds,
            include_nordhaus_gaddum: cfg.include_nordhaus_gaddum,
            source: match &cfg.source {
                SweepSource::Builtin => "builtin".to_string(),
                SweepSource::Graph6Stream(p) => format!("graph6:{}", p.display()),
            },
            witness_cap: cfg.witness_cap,
            check_identities: cfg.check_identities,
            oracle_stride: cfg.oracle_stride,
        },
        total_graphs: partial.total_graphs,
        graphs_per_n: partial.graphs_per_n,
        skipped_disconnected,
        bounds: bounds_report,
        identities: IdentityReport {
            graphs_checked: partial.identity_checks,
            failures: partial.identity_failures,
            witnesses: partial.identity_witnesses.0,
        },
        oracle: OracleReport {
            samples: partial.oracle_samples,
            mismatches: partial.oracle_mismatches,
            witnesses: partial.oracle_witnesses.0,
        },
        regressions,
        elapsed_ms: started.elapsed().as_millis() as u64,
        workers: if cfg.workers == 0 {
            rayon::current_num_threads()
        } else {
            cfg.workers
        },
    })
}
