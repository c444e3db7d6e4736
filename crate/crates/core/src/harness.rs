//! Exhaustive sweeps over enumerated topologies.
//!
//! The enumerator is a single sequential stream. Topologies are taken from it
//! in chunks, checked on a worker pool and merged back in enumeration order,
//! so reports do not depend on the number of workers.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use rayon::ThreadPool;

use crate::characterizations::{check, Statement, Witness};
use crate::claim::{Claim, CompiledClaim};
use crate::enumeration::{enumerate_topologies, is_canonical, SizeLimit};
use crate::error::CapExceeded;
use crate::topology::Topology;

const CHUNK: usize = 4096;
const PROGRESS_EVERY: u64 = 1 << 16;

/// Settings shared by every sweep.
#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub limit: SizeLimit,
    /// Worker threads; `None` uses one per core.
    pub jobs: Option<usize>,
    /// Upper bound on recorded failures of each kind. Totals are still counted.
    pub failure_cap: usize,
    /// Called with `(n, topologies done)` periodically.
    pub progress: Option<fn(usize, u64)>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { limit: SizeLimit::Standard, jobs: None, failure_cap: 100, progress: None }
    }
}

impl SweepOptions {
    fn pool(&self) -> ThreadPool {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = self.jobs {
            b = b.num_threads(j.max(1));
        }
        b.build().expect("thread pool")
    }
}

/// Which spaces a claim is checked on, decided by condition (a).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ModelFilter {
    #[default]
    All,
    EdOnly,
    NonEdOnly,
}

impl ModelFilter {
    fn admits(self, t: &Topology) -> bool {
        match self {
            ModelFilter::All => true,
            ModelFilter::EdOnly => check(t, Statement::A).holds,
            ModelFilter::NonEdOnly => !check(t, Statement::A).holds,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelFilter::All => "all",
            ModelFilter::EdOnly => "ed",
            ModelFilter::NonEdOnly => "non-ed",
        }
    }
}

/// A failing statement on one enumerated space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub n: usize,
    /// Position in the labeled enumeration for this `n`.
    pub index: u64,
    pub topology: Topology,
    pub witness: Witness,
}

/// Runs `work` over the topologies on `n` points in parallel and feeds the
/// results to `consume` in enumeration order.
fn sweep<T, W, C>(n: usize, opts: &SweepOptions, pool: &ThreadPool, work: W, mut consume: C) -> Result<(), CapExceeded>
where
    T: Send,
    W: Fn(&Topology) -> T + Sync,
    C: FnMut(u64, Topology, T) -> ControlFlow<()>,
{
    let mut stream = enumerate_topologies(n, opts.limit)?;
    let mut index = 0u64;
    loop {
        let chunk: Vec<Topology> = stream.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(());
        }
        let results: Vec<T> = pool.install(|| chunk.par_iter().map(&work).collect());
        for (t, r) in chunk.into_iter().zip(results) {
            if consume(index, t, r).is_break() {
                return Ok(());
            }
            index += 1;
            if let Some(report) = opts.progress {
                if index.is_multiple_of(PROGRESS_EVERY) {
                    report(n, index);
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimStats {
    pub n: usize,
    pub enumerated: u64,
    /// Spaces admitted by the filter.
    pub checked: u64,
    pub failures: u64,
}

#[derive(Clone, Debug)]
pub struct ModelCheckReport {
    pub claim: String,
    pub n_max: usize,
    pub filter: ModelFilter,
    pub per_n: Vec<ClaimStats>,
    /// The first `failure_cap` failures in enumeration order.
    pub failures: Vec<Failure>,
    pub duration: Duration,
}

impl ModelCheckReport {
    pub fn total_failures(&self) -> u64 {
        self.per_n.iter().map(|s| s.failures).sum()
    }
}

/// Checks `claim` on every enumerated space with `0 ≤ n ≤ n_max`.
pub fn model_check(
    claim: &Claim,
    n_max: usize,
    filter: ModelFilter,
    opts: &SweepOptions,
) -> Result<ModelCheckReport, CapExceeded> {
    opts.limit.check(n_max)?;
    let start = Instant::now();
    let compiled = CompiledClaim::new(claim);
    let pool = opts.pool();
    let mut per_n = Vec::new();
    let mut failures = Vec::new();
    for n in 0..=n_max {
        let mut stats = ClaimStats { n, enumerated: 0, checked: 0, failures: 0 };
        let work = |t: &Topology| filter.admits(t).then(|| compiled.find_failure(t));
        sweep(n, opts, &pool, work, |index, topology, outcome| {
            stats.enumerated += 1;
            if let Some(found) = outcome {
                stats.checked += 1;
                if let Some(witness) = found {
                    stats.failures += 1;
                    if failures.len() < opts.failure_cap {
                        failures.push(Failure { n, index, topology, witness });
                    }
                }
            }
            ControlFlow::Continue(())
        })?;
        per_n.push(stats);
    }
    Ok(ModelCheckReport {
        claim: claim.to_string(),
        n_max,
        filter,
        per_n,
        failures,
        duration: start.elapsed(),
    })
}

/// The first counterexample to `claim` in enumeration order, if any.
pub fn find_counterexample(claim: &Claim, n_max: usize, limit: SizeLimit) -> Result<Option<Failure>, CapExceeded> {
    limit.check(n_max)?;
    let compiled = CompiledClaim::new(claim);
    for n in 0..=n_max {
        for (index, topology) in enumerate_topologies(n, limit)?.enumerate() {
            if let Some(witness) = compiled.find_failure(&topology) {
                return Ok(Some(Failure { n, index: index as u64, topology, witness }));
            }
        }
    }
    Ok(None)
}

/// Spaces whose seven condition verdicts are not all equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub index: u64,
    pub topology: Topology,
    /// Verdicts of (a)..(g).
    pub verdicts: [bool; 7],
}

/// Failures of one statement, capped, with the full count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FailureLog {
    pub total: u64,
    pub recorded: Vec<Failure>,
}

impl FailureLog {
    fn record(&mut self, cap: usize, failure: impl FnOnce() -> Failure) {
        self.total += 1;
        if self.recorded.len() < cap {
            self.recorded.push(failure());
        }
    }
}

#[derive(Clone, Debug)]
pub struct TheoremStats {
    pub n: usize,
    pub labeled: u64,
    /// Filled in when sweeping one space per homeomorphism class.
    pub homeo_classes: Option<u64>,
    /// Spaces on which the statements were evaluated.
    pub checked: u64,
    /// Checked spaces on which all seven conditions hold.
    pub ed_count: u64,
    pub disagreements: Vec<Disagreement>,
    pub disagreement_total: u64,
    pub lemma1: FailureLog,
    pub corollary2: FailureLog,
    pub hint: FailureLog,
    pub hint_open: FailureLog,
    /// Checked spaces on which condition (e) restricted to disjoint `K`, `A` holds.
    pub e_printed_holds: u64,
    pub duration: Duration,
}

impl TheoremStats {
    pub fn is_clean(&self) -> bool {
        self.disagreement_total == 0 && self.lemma1.total == 0 && self.corollary2.total == 0
    }
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub n_max: usize,
    pub up_to_homeo: bool,
    pub per_n: Vec<TheoremStats>,
    pub duration: Duration,
}

impl EquivalenceReport {
    /// No disagreement among (a)..(g) and no failure of Lemma 1 or Corollary 2.
    pub fn is_clean(&self) -> bool {
        self.per_n.iter().all(TheoremStats::is_clean)
    }
}

struct SpaceOutcome {
    canonical: bool,
    verdicts: [bool; 7],
    lemma1: Option<Witness>,
    corollary2: Option<Witness>,
    hint: Option<Witness>,
    hint_open: Option<Witness>,
    e_printed: bool,
}

fn evaluate_space(t: &Topology, up_to_homeo: bool) -> SpaceOutcome {
    let canonical = !up_to_homeo || is_canonical(t);
    if !canonical {
        return SpaceOutcome {
            canonical,
            verdicts: [false; 7],
            lemma1: None,
            corollary2: None,
            hint: None,
            hint_open: None,
            e_printed: false,
        };
    }
    SpaceOutcome {
        canonical,
        verdicts: Statement::CONDITIONS.map(|c| check(t, c).holds),
        lemma1: check(t, Statement::Lemma1).witness,
        corollary2: check(t, Statement::Corollary2).witness,
        hint: check(t, Statement::Hint).witness,
        hint_open: check(t, Statement::HintOpen).witness,
        e_printed: check(t, Statement::EPrinted).holds,
    }
}

/// Checks every statement on every space with `0 ≤ n ≤ n_max`, or on one
/// representative per homeomorphism class.
pub fn verify_theorem(n_max: usize, up_to_homeo: bool, opts: &SweepOptions) -> Result<EquivalenceReport, CapExceeded> {
    opts.limit.check(n_max)?;
    let start = Instant::now();
    let pool = opts.pool();
    let cap = opts.failure_cap;
    let mut per_n = Vec::new();
    for n in 0..=n_max {
        let n_start = Instant::now();
        let mut s = TheoremStats {
            n,
            labeled: 0,
            homeo_classes: up_to_homeo.then_some(0),
            checked: 0,
            ed_count: 0,
            disagreements: Vec::new(),
            disagreement_total: 0,
            lemma1: FailureLog::default(),
            corollary2: FailureLog::default(),
            hint: FailureLog::default(),
            hint_open: FailureLog::default(),
            e_printed_holds: 0,
            duration: Duration::ZERO,
        };
        sweep(n, opts, &pool, |t| evaluate_space(t, up_to_homeo), |index, topology, out| {
            s.labeled += 1;
            if !out.canonical {
                return ControlFlow::Continue(());
            }
            if let Some(c) = s.homeo_classes.as_mut() {
                *c += 1;
            }
            s.checked += 1;
            let v = out.verdicts;
            if v.iter().all(|&b| b) {
                s.ed_count += 1;
            } else if v.iter().any(|&b| b) {
                s.disagreement_total += 1;
                if s.disagreements.len() < cap {
                    s.disagreements.push(Disagreement { index, topology: topology.clone(), verdicts: v });
                }
            }
            if out.e_printed {
                s.e_printed_holds += 1;
            }
            let logs = [
                (out.lemma1, &mut s.lemma1),
                (out.corollary2, &mut s.corollary2),
                (out.hint, &mut s.hint),
                (out.hint_open, &mut s.hint_open),
            ];
            for (witness, log) in logs {
                if let Some(witness) = witness {
                    log.record(cap, || Failure { n, index, topology: topology.clone(), witness });
                }
            }
            ControlFlow::Continue(())
        })?;
        s.duration = n_start.elapsed();
        per_n.push(s);
    }
    Ok(EquivalenceReport { n_max, up_to_homeo, per_n, duration: start.elapsed() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub labeled: u64,
    /// Count of spaces satisfying each requested statement, in request order.
    pub counts: Vec<u64>,
}

/// Counts labeled spaces satisfying each of `statements`, per `n`.
pub fn ed_census(n_max: usize, statements: &[Statement], opts: &SweepOptions) -> Result<Vec<CensusRow>, CapExceeded> {
    opts.limit.check(n_max)?;
    let pool = opts.pool();
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let mut row = CensusRow { n, labeled: 0, counts: vec![0; statements.len()] };
        let work = |t: &Topology| statements.iter().map(|&s| check(t, s).holds).collect::<Vec<bool>>();
        sweep(n, opts, &pool, work, |_, _, holds| {
            row.labeled += 1;
            for (c, h) in row.counts.iter_mut().zip(holds) {
                *c += h as u64;
            }
            ControlFlow::Continue(())
        })?;
        rows.push(row);
    }
    Ok(rows)
}
