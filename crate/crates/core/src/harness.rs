//! Exhaustive and sampled surveys that re-check the structural lemmas on
//! every graph visited, plus the generator/classifier round trip.
//!
//! Work is split into fixed chunks; each chunk has its own random stream
//! (seed, chunk index), so reports do not depend on the number of workers.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{Classifier, Verdict, THEOREM_MIN_ORDER};
use crate::criticality::{
    critical_degree_within, criticality_within, indecomposability_graph_within, trichotomy_violation,
};
use crate::digraph::{Digraph, PairType};
use crate::error::Result;
use crate::families::enum_family_members;
use crate::iso::{canonical_code, code_hex};
use crate::modular::{
    extend_by_two_unchecked, extension_bullet_violations, is_indecomposable_within, nontrivial_intervals_within,
    outside_partition_within, small_indecomposable_around_unchecked, SUBSET_ORACLE_BOUND,
};
use crate::set::subsets_of_size;

/// Largest order surveyed exhaustively without the long-run flag.
pub const EXHAUSTIVE_BOUND: usize = 5;
/// Largest order surveyed exhaustively at all.
pub const EXHAUSTIVE_LONG_BOUND: usize = 6;
/// Largest order for random surveys.
pub const RANDOM_BOUND: usize = 12;

const CHUNK: u64 = 4096;
const MAX_FAILURES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Audit {
    /// Closure-based indecomposability against subset enumeration.
    IndecomposableOracle,
    /// The outside classes partition `S − X`.
    Partition,
    /// The three extension statements.
    ExtensionBullets,
    /// A pair extending an indecomposable `X` by two vertices exists.
    ExtendByTwo,
    /// An indecomposable 4- or 5-subset exists around every vertex.
    SmallAround,
    /// Degree bound and interval conclusions for critical vertices.
    CriticalDegree,
    /// Complement and dual keep critical vertices and `I(G)`.
    Symmetry,
    /// Shape of `I′` is an odd cycle, a path, or a starred tree.
    Trichotomy,
    /// Defect-1 graphs of order ≥ 7 fall in a family.
    Classification,
}

const AUDITS: [Audit; 9] = [
    Audit::IndecomposableOracle,
    Audit::Partition,
    Audit::ExtensionBullets,
    Audit::ExtendByTwo,
    Audit::SmallAround,
    Audit::CriticalDegree,
    Audit::Symmetry,
    Audit::Trichotomy,
    Audit::Classification,
];

/// Which audits run on each visited graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditConfig {
    pub oracle: bool,
    /// Sizes of `X` for the partition, bullet and extend-by-two audits.
    pub base_sizes: Vec<usize>,
    pub small_around: bool,
    pub critical_degree: bool,
    pub symmetry: bool,
    pub classify: bool,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            oracle: true,
            base_sizes: vec![3, 4],
            small_around: true,
            critical_degree: true,
            symmetry: true,
            classify: true,
        }
    }
}

impl AuditConfig {
    /// Only criticality and classification.
    pub fn classify_only() -> Self {
        AuditConfig {
            oracle: false,
            base_sizes: Vec::new(),
            small_around: false,
            critical_degree: false,
            symmetry: false,
            classify: true,
        }
    }

    pub fn none() -> Self {
        AuditConfig {
            classify: false,
            ..Self::classify_only()
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub failed: u64,
}

/// A graph on which an audit failed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub audit: Audit,
    pub graph: String,
    pub detail: String,
}

/// One isomorphism class of defect-1 graphs met during a survey.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Find {
    pub code: String,
    pub order: usize,
    pub verdict: String,
    pub family: Option<String>,
    pub count: u64,
}

#[derive(Default)]
struct Stats {
    visited: u64,
    mutants: u64,
    indecomposable: u64,
    verdicts: BTreeMap<&'static str, u64>,
    tallies: [Tally; AUDITS.len()],
    failures: Vec<(u64, Failure)>,
    finds: BTreeMap<Vec<u8>, (String, Option<String>, u64)>,
}

impl Stats {
    fn tally(&mut self, a: Audit, ok: bool, key: u64, g: &Digraph, detail: impl FnOnce() -> String) {
        let t = &mut self.tallies[a as usize];
        t.checked += 1;
        if !ok {
            t.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push((
                    key,
                    Failure {
                        audit: a,
                        graph: g.to_dg(),
                        detail: detail(),
                    },
                ));
            }
        }
    }

    fn merge(mut self, o: Stats) -> Stats {
        self.visited += o.visited;
        self.mutants += o.mutants;
        self.indecomposable += o.indecomposable;
        for (k, v) in o.verdicts {
            *self.verdicts.entry(k).or_default() += v;
        }
        for (a, b) in self.tallies.iter_mut().zip(o.tallies) {
            a.checked += b.checked;
            a.failed += b.failed;
        }
        self.failures.extend(o.failures);
        for (code, (v, f, c)) in o.finds {
            self.finds.entry(code).or_insert((v, f, 0)).2 += c;
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyReport {
    pub order: usize,
    pub mode: String,
    pub visited: u64,
    /// Of which one-pair mutants of family members.
    pub mutants: u64,
    pub indecomposable: u64,
    pub verdicts: BTreeMap<String, u64>,
    pub audits: BTreeMap<Audit, Tally>,
    pub seed: Option<u64>,
    pub samples: Option<u64>,
    pub elapsed_ms: u128,
    pub failures: Vec<Failure>,
    pub finds: Vec<Find>,
}

impl SurveyReport {
    pub fn failed(&self) -> u64 {
        self.audits.values().map(|t| t.failed).sum()
    }

    pub fn passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn tally(&self, a: Audit) -> Tally {
        self.audits.get(&a).copied().unwrap_or_default()
    }

    /// The report without its wall-clock time, for determinism checks.
    pub fn without_timing(&self) -> SurveyReport {
        SurveyReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

fn finish(order: usize, mode: &str, seed: Option<u64>, samples: Option<u64>, start: Instant, s: Stats) -> SurveyReport {
    let mut failures = s.failures;
    failures.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    SurveyReport {
        order,
        mode: mode.to_string(),
        visited: s.visited,
        mutants: s.mutants,
        indecomposable: s.indecomposable,
        verdicts: s.verdicts.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        audits: AUDITS
            .iter()
            .zip(s.tallies)
            .filter(|(_, t)| t.checked > 0)
            .map(|(&a, t)| (a, t))
            .collect(),
        seed,
        samples,
        elapsed_ms: start.elapsed().as_millis(),
        failures: failures.into_iter().take(MAX_FAILURES).map(|(_, f)| f).collect(),
        finds: s
            .finds
            .into_iter()
            .map(|(code, (verdict, family, count))| Find {
                order: code[0] as usize,
                code: code_hex(&code),
                verdict,
                family,
                count,
            })
            .collect(),
    }
}

/// Runs every configured audit on one graph; `key` orders failure records.
fn audit_graph(g: &Digraph, cfg: &AuditConfig, cls: &Classifier, key: u64, st: &mut Stats) {
    let n = g.order();
    let s = g.vertices();
    st.visited += 1;
    let ind = is_indecomposable_within(g, s);
    if cfg.oracle && n <= SUBSET_ORACLE_BOUND {
        let oracle = nontrivial_intervals_within(g, s).is_empty();
        st.tally(Audit::IndecomposableOracle, oracle == ind, key, g, || {
            format!("closure says {ind}, subset oracle says {oracle}")
        });
    }

    // extension statements hold for any G once G(X) is indecomposable
    for &k in &cfg.base_sizes {
        if k < 3 || k > n {
            continue;
        }
        for xs in subsets_of_size(s, k) {
            if !is_indecomposable_within(g, xs) {
                continue;
            }
            match outside_partition_within(g, s, xs) {
                Ok(part) => {
                    st.tally(Audit::Partition, true, key, g, String::new);
                    let bad = extension_bullet_violations(g, &part, s);
                    st.tally(Audit::ExtensionBullets, bad.is_empty(), key, g, || format!("{bad:?}"));
                }
                Err(e) => st.tally(Audit::Partition, false, key, g, || e.to_string()),
            }
            if ind && n - k >= 2 {
                let r = extend_by_two_unchecked(g, xs);
                st.tally(Audit::ExtendByTwo, r.is_ok(), key, g, || format!("X = {xs}"));
            }
        }
    }

    if !ind {
        *st.verdicts.entry("decomposable").or_default() += 1;
        return;
    }
    st.indecomposable += 1;
    if cfg.small_around && n >= 5 {
        for a in s {
            let r = small_indecomposable_around_unchecked(g, a);
            st.tally(Audit::SmallAround, r.is_ok(), key, g, || format!("a = {a}"));
        }
    }
    let report = criticality_within(g, s);
    let need_ig = n >= 4 && (cfg.critical_degree || cfg.symmetry || (cfg.classify && report.defect == 1));
    let h = need_ig.then(|| indecomposability_graph_within(g, s));
    if cfg.critical_degree && n >= 5 {
        let l = critical_degree_within(g, s, &report, h.as_ref().unwrap());
        st.tally(Audit::CriticalDegree, l.passed(), key, g, || format!("{:?}", l.entries));
    }
    if cfg.symmetry {
        let ok = [g.complement(), g.dual()]
            .iter()
            .all(|t| criticality_within(t, s) == report && h.is_none_or(|h| indecomposability_graph_within(t, s) == h));
        st.tally(Audit::Symmetry, ok, key, g, || "complement or dual differs".into());
    }

    let verdict = match report.defect {
        0 => "critical",
        1 if n < THEOREM_MIN_ORDER => "out_of_scope_order",
        1 => "minus_one_critical",
        _ => "minus_k_critical",
    };
    if report.defect == 1 {
        let code = canonical_code(g).expect("survey orders are within the canonical bound");
        let mut family = None;
        let mut v = verdict.to_string();
        if !st.finds.contains_key(&code) && cfg.classify && n >= THEOREM_MIN_ORDER {
            let a = report.noncritical.first().unwrap();
            let hh = h.as_ref().unwrap();
            let tri = trichotomy_violation(hh, a);
            st.tally(Audit::Trichotomy, tri.is_none(), key, g, || {
                tri.clone().unwrap_or_default()
            });
            let m = cls.match_family(g, hh, a);
            st.tally(Audit::Classification, m.is_some(), key, g, || {
                "no family matches".into()
            });
            match m {
                Some(m) => family = Some(m.hits[0].clone()),
                None => v = "theorem_violation".into(),
            }
        }
        let e = st.finds.entry(code).or_insert((v, family, 0));
        e.2 += 1;
        *st.verdicts
            .entry(if e.0 == "theorem_violation" {
                "theorem_violation"
            } else {
                verdict
            })
            .or_default() += 1;
    } else {
        *st.verdicts.entry(verdict).or_default() += 1;
    }
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect()
}

/// Graph number `idx` in the base-4 enumeration of pair types (first pair lowest).
pub fn graph_from_index(n: usize, idx: u64) -> Digraph {
    let mut g = Digraph::empty(n).unwrap();
    for (i, (x, y)) in pair_list(n).into_iter().enumerate() {
        let t = PairType::ALL[((idx >> (2 * i)) & 3) as usize];
        g.set_pair_type_unchecked(x, y, t);
    }
    g
}

pub fn random_graph(n: usize, rng: &mut impl Rng) -> Digraph {
    let mut g = Digraph::empty(n).unwrap();
    for (x, y) in pair_list(n) {
        g.set_pair_type_unchecked(x, y, PairType::ALL[rng.gen_range(0..4)]);
    }
    g
}

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

fn run_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Every labelled graph of the given order.
pub fn survey_exhaustive(
    order: usize,
    cfg: &AuditConfig,
    workers: Option<usize>,
    long_run: bool,
) -> Result<SurveyReport> {
    let bound = if long_run {
        EXHAUSTIVE_LONG_BOUND
    } else {
        EXHAUSTIVE_BOUND
    };
    if order > bound {
        return Err(crate::Error::OrderBound { order, bound });
    }
    let start = Instant::now();
    let total = 1u64 << (order * order.saturating_sub(1));
    let chunks = total.div_ceil(CHUNK);
    let cls = Classifier::new();
    let stats = run_pool(workers, || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut st = Stats::default();
                for idx in c * CHUNK..((c + 1) * CHUNK).min(total) {
                    audit_graph(&graph_from_index(order, idx), cfg, &cls, idx, &mut st);
                }
                st
            })
            .reduce(Stats::default, Stats::merge)
    });
    Ok(finish(order, "exhaustive", None, None, start, stats))
}

/// `samples` uniformly random labelled graphs, plus (when `mutants` is set and
/// the order is in the family range) one random one-pair mutant of every
/// family member of that order.
pub fn survey_random(
    order: usize,
    samples: u64,
    seed: u64,
    cfg: &AuditConfig,
    workers: Option<usize>,
    mutants: bool,
) -> Result<SurveyReport> {
    if order > RANDOM_BOUND {
        return Err(crate::Error::OrderBound {
            order,
            bound: RANDOM_BOUND,
        });
    }
    let start = Instant::now();
    let chunks = samples.div_ceil(CHUNK);
    let cls = Classifier::new();
    let members = if mutants && order >= THEOREM_MIN_ORDER {
        enum_family_members(order)?
    } else {
        Vec::new()
    };
    let pairs = pair_list(order);
    let stats = run_pool(workers, || {
        let sampled = (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut rng = chunk_rng(seed, c);
                let mut st = Stats::default();
                for idx in c * CHUNK..((c + 1) * CHUNK).min(samples) {
                    audit_graph(&random_graph(order, &mut rng), cfg, &cls, idx, &mut st);
                }
                st
            })
            .reduce(Stats::default, Stats::merge);
        let mutated = members
            .par_iter()
            .enumerate()
            .map(|(i, m)| {
                // streams past the sampling chunks
                let mut rng = chunk_rng(seed, chunks + i as u64);
                let (x, y) = pairs[rng.gen_range(0..pairs.len())];
                let old = m.graph.pair_type_unchecked(x, y);
                let others: Vec<PairType> = PairType::ALL.into_iter().filter(|&t| t != old).collect();
                let mut g = m.graph;
                g.set_pair_type_unchecked(x, y, others[rng.gen_range(0..3)]);
                let mut st = Stats::default();
                audit_graph(&g, cfg, &cls, samples + i as u64, &mut st);
                st.mutants = 1;
                st
            })
            .reduce(Stats::default, Stats::merge);
        sampled.merge(mutated)
    });
    Ok(finish(order, "random", Some(seed), Some(samples), start, stats))
}

/// Every one-pair mutant (each pair, each of the three other pair types) of
/// every family member of the given order.
pub fn survey_mutants(order: usize, cfg: &AuditConfig, workers: Option<usize>) -> Result<SurveyReport> {
    let start = Instant::now();
    let members = enum_family_members(order)?;
    let pairs = pair_list(order);
    let cls = Classifier::new();
    let stats = run_pool(workers, || {
        members
            .par_iter()
            .enumerate()
            .map(|(i, m)| {
                let mut st = Stats::default();
                for (j, &(x, y)) in pairs.iter().enumerate() {
                    let old = m.graph.pair_type_unchecked(x, y);
                    for t in PairType::ALL.into_iter().filter(|&t| t != old) {
                        let mut g = m.graph;
                        g.set_pair_type_unchecked(x, y, t);
                        audit_graph(&g, cfg, &cls, (i * pairs.len() + j) as u64, &mut st);
                        st.mutants += 1;
                    }
                }
                st
            })
            .reduce(Stats::default, Stats::merge)
    });
    Ok(finish(order, "mutants", None, None, start, stats))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RoundtripOrder {
    pub order: usize,
    pub members: usize,
    pub matched: usize,
    /// Members whose classification failed or pointed at a non-isomorphic graph.
    pub problems: Vec<String>,
    pub per_family: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub orders: Vec<RoundtripOrder>,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.orders
            .iter()
            .all(|o| o.problems.is_empty() && o.matched == o.members)
    }
}

/// Generates the members of each order and classifies every one of them, its
/// complement and its dual.
pub fn roundtrip_check(orders: RangeInclusive<usize>) -> Result<RoundtripReport> {
    let cls = Classifier::new();
    let mut out = RoundtripReport::default();
    for order in orders {
        let members = enum_family_members(order)?;
        let results: Vec<(String, std::result::Result<String, String>)> = members
            .par_iter()
            .map(|m| {
                let graphs = [m.graph, m.graph.complement(), m.graph.dual()];
                let mut fam = String::new();
                for (i, g) in graphs.iter().enumerate() {
                    let c = cls.classify(g);
                    match &c.verdict {
                        Verdict::MinusOneCritical(fm) => {
                            if !g.is_isomorphism(&fm.target, &fm.witness) {
                                return (m.label(), Err(format!("bad witness on variant {i}")));
                            }
                            if i == 0 {
                                fam = fm.family.to_string();
                            }
                        }
                        v => return (m.label(), Err(format!("variant {i}: {}", v.kind()))),
                    }
                }
                (m.label(), Ok(fam))
            })
            .collect();
        let mut ro = RoundtripOrder {
            order,
            members: members.len(),
            ..Default::default()
        };
        for (label, r) in results {
            match r {
                Ok(f) => {
                    ro.matched += 1;
                    *ro.per_family.entry(f).or_default() += 1;
                }
                Err(e) => ro.problems.push(format!("{label}: {e}")),
            }
        }
        out.orders.push(ro);
    }
    Ok(out)
}

/// Audits on the built-in fixtures: named graphs, a few class members and
/// the order-5 boundary graph. Returns `(check, passed)` pairs.
pub fn selftest() -> Vec<(String, bool)> {
    use crate::families::*;
    let mut out = Vec::new();
    let mut fixtures: Vec<(String, Digraph)> = Vec::new();
    for n in 2..=4 {
        fixtures.push((format!("T{}", 2 * n + 1), gen_t(n).unwrap()));
        fixtures.push((format!("U{}", 2 * n + 1), gen_u(n).unwrap()));
        fixtures.push((format!("V{}", 2 * n + 1), gen_v(n).unwrap()));
        fixtures.push((format!("R{}", 2 * n + 1), gen_r(n).unwrap()));
        fixtures.push((format!("H{}", 2 * n + 1), gen_h(n).unwrap()));
    }
    fixtures.push(("Q5".into(), gen_q5()));
    for m in enum_class_f(6, 1).unwrap().into_iter().take(3) {
        fixtures.push((m.label(), m.graph));
    }
    for m in enum_hstar_even(&[2, 2, 2], false).unwrap().into_iter().take(3) {
        fixtures.push((m.label(), m.graph));
    }
    let cfg = AuditConfig::default();
    let cls = Classifier::new();
    for (name, g) in fixtures {
        let mut st = Stats::default();
        audit_graph(&g, &cfg, &cls, 0, &mut st);
        let failed: u64 = st.tallies.iter().map(|t| t.failed).sum();
        out.push((format!("audits on {name}"), failed == 0));
    }
    for n in 2..=4 {
        out.push((
            format!("R{} matches its claims", 2 * n + 1),
            member_r(n).unwrap().verify().is_ok(),
        ));
        out.push((
            format!("H{} matches its claims", 2 * n + 1),
            member_h(n).unwrap().verify().is_ok(),
        ));
    }
    let q = cls.classify(&gen_q5());
    out.push((
        "Q5 is out of theorem scope".into(),
        matches!(q.verdict, Verdict::OutOfScopeOrder { noncritical: 2 }),
    ));
    match roundtrip_check(7..=7) {
        Ok(r) => out.push(("order-7 round trip".into(), r.passed())),
        Err(_) => out.push(("order-7 round trip".into(), false)),
    }
    out
}
