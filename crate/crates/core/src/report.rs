//! Report documents (JSON) and their plain-text renderings.
//!
//! Every run emits a single document carrying a `version` field. Timings are
//! included only on request, so that identical runs give identical bytes.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::characterizations::{RelOp, Statement, Verdict, Witness};
use crate::harness::{CensusRow, EquivalenceReport, Failure, FailureLog, ModelCheckReport};
use crate::io::TopologyFile;
use crate::topology::Topology;

pub const REPORT_VERSION: u32 = 1;

pub const FINITE_SCOPE: &str = "finite spaces only: every topology on the listed numbers of labeled points \
     was checked; nothing is asserted about infinite spaces";

#[derive(Serialize)]
pub struct Document {
    pub version: u32,
    pub command: &'static str,
    pub scope: &'static str,
    pub parameters: serde_json::Value,
    pub per_n_stats: Vec<serde_json::Value>,
    pub failures: Vec<FailureDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<VerdictDoc>>,
    pub duration_ms: Option<u64>,
}

impl Document {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Serialize)]
pub struct AssignmentDoc {
    pub name: String,
    pub set: Vec<usize>,
}

#[derive(Serialize)]
pub struct WitnessDoc {
    pub assignment: Vec<AssignmentDoc>,
    pub lhs: Vec<usize>,
    pub op: RelOp,
    pub rhs: Vec<usize>,
}

impl From<&Witness> for WitnessDoc {
    fn from(w: &Witness) -> Self {
        WitnessDoc {
            assignment: w
                .assignment
                .iter()
                .map(|(name, s)| AssignmentDoc { name: name.clone(), set: s.points().collect() })
                .collect(),
            lhs: w.lhs.points().collect(),
            op: w.op,
            rhs: w.rhs.points().collect(),
        }
    }
}

#[derive(Serialize)]
pub struct FailureDoc {
    pub kind: String,
    pub n: usize,
    pub index: Option<u64>,
    pub topology: TopologyFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

impl FailureDoc {
    fn from_failure(kind: &str, f: &Failure) -> Self {
        FailureDoc {
            kind: kind.to_owned(),
            n: f.n,
            index: Some(f.index),
            topology: TopologyFile::from_topology(&f.topology),
            verdicts: None,
            witness: Some((&f.witness).into()),
        }
    }
}

#[derive(Serialize)]
pub struct VerdictDoc {
    pub statement: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

fn millis(d: Duration, timing: bool) -> Option<u64> {
    timing.then_some(d.as_millis() as u64)
}

/// `TFFFTFF`-style rendering of the (a)..(g) verdicts.
pub fn verdict_string(v: &[bool; 7]) -> String {
    v.iter().map(|&b| if b { 'T' } else { 'F' }).collect()
}

// ---- check ----

pub fn check_document(file: &str, t: &Topology, verdicts: &[Verdict]) -> Document {
    let failures = verdicts
        .iter()
        .filter_map(|v| {
            v.witness.as_ref().map(|w| FailureDoc {
                kind: v.statement.map_or("claim", Statement::id).to_owned(),
                n: t.points(),
                index: None,
                topology: TopologyFile::from_topology(t),
                verdicts: None,
                witness: Some(w.into()),
            })
        })
        .collect();
    Document {
        version: REPORT_VERSION,
        command: "check",
        scope: "a single finite space",
        parameters: serde_json::json!({
            "file": file,
            "statements": verdicts.iter().filter_map(|v| v.statement.map(Statement::id)).collect::<Vec<_>>(),
        }),
        per_n_stats: vec![serde_json::json!({ "n": t.points(), "opens": t.open_masks().len() })],
        failures,
        verdicts: Some(
            verdicts
                .iter()
                .map(|v| VerdictDoc {
                    statement: v.statement.map_or("claim", Statement::id).to_owned(),
                    holds: v.holds,
                    witness: v.witness.as_ref().map(Into::into),
                })
                .collect(),
        ),
        duration_ms: None,
    }
}

pub fn check_text(t: &Topology, verdicts: &[Verdict], disagreement: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "space: {} points, opens {t}", t.points());
    for v in verdicts {
        let id = v.statement.map_or("claim", Statement::id);
        match &v.witness {
            None => {
                let _ = writeln!(s, "  {id:<11} holds");
            }
            Some(w) => {
                let _ = writeln!(s, "  {id:<11} fails: {w}");
            }
        }
    }
    if disagreement {
        let _ = writeln!(s, "conditions (a)-(g) DISAGREE on this space");
    }
    s
}

// ---- verify ----

fn log_failures(out: &mut Vec<FailureDoc>, kind: &str, log: &FailureLog) {
    out.extend(log.recorded.iter().map(|f| FailureDoc::from_failure(kind, f)));
}

pub fn verify_document(r: &EquivalenceReport, failure_cap: usize, timing: bool) -> Document {
    let mut failures = Vec::new();
    for s in &r.per_n {
        failures.extend(s.disagreements.iter().map(|d| FailureDoc {
            kind: "disagreement".to_owned(),
            n: s.n,
            index: Some(d.index),
            topology: TopologyFile::from_topology(&d.topology),
            verdicts: Some(verdict_string(&d.verdicts)),
            witness: None,
        }));
        log_failures(&mut failures, "lemma1", &s.lemma1);
        log_failures(&mut failures, "corollary2", &s.corollary2);
        log_failures(&mut failures, "hint", &s.hint);
        log_failures(&mut failures, "hint-open", &s.hint_open);
    }
    let per_n_stats = r
        .per_n
        .iter()
        .map(|s| {
            let mut v = serde_json::json!({
                "n": s.n,
                "labeled": s.labeled,
                "homeo_classes": s.homeo_classes,
                "checked": s.checked,
                "ed_count": s.ed_count,
                "disagreements": s.disagreement_total,
                "lemma1_failures": s.lemma1.total,
                "corollary2_failures": s.corollary2.total,
                "hint_counterexamples": s.hint.total,
                "hint_open_failures": s.hint_open.total,
                "e_printed_holds": s.e_printed_holds,
            });
            if timing {
                v["duration_ms"] = (s.duration.as_millis() as u64).into();
            }
            v
        })
        .collect();
    Document {
        version: REPORT_VERSION,
        command: "verify",
        scope: FINITE_SCOPE,
        parameters: serde_json::json!({
            "max_n": r.n_max,
            "up_to_homeo": r.up_to_homeo,
            "failure_cap": failure_cap,
            "conditions": Statement::CONDITIONS.map(Statement::id),
        }),
        per_n_stats,
        failures,
        verdicts: None,
        duration_ms: millis(r.duration, timing),
    }
}

fn first_witness(log: &FailureLog) -> Option<&Failure> {
    log.recorded.first()
}

pub fn verify_text(r: &EquivalenceReport, timing: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "equivalence of conditions (a)-(g); scope: {FINITE_SCOPE}");
    let _ = writeln!(
        s,
        "{:>2} {:>9} {:>8} {:>8} {:>13} {:>7} {:>11} {:>5} {:>10} {:>10}",
        "n", "labeled", "checked", "ed", "disagreements", "lemma1", "corollary2", "hint", "hint-open", "e-printed"
    );
    for st in &r.per_n {
        let _ = write!(
            s,
            "{:>2} {:>9} {:>8} {:>8} {:>13} {:>7} {:>11} {:>5} {:>10} {:>10}",
            st.n,
            st.labeled,
            st.checked,
            st.ed_count,
            st.disagreement_total,
            st.lemma1.total,
            st.corollary2.total,
            st.hint.total,
            st.hint_open.total,
            st.e_printed_holds
        );
        if timing {
            let _ = write!(s, " {:>8}ms", st.duration.as_millis());
        }
        s.push('\n');
    }
    for st in &r.per_n {
        for d in &st.disagreements {
            let _ =
                writeln!(s, "disagreement n={} #{}: {} verdicts a..g = {}", st.n, d.index, d.topology, verdict_string(&d.verdicts));
        }
        for (kind, log) in [("lemma1", &st.lemma1), ("corollary2", &st.corollary2), ("hint-open", &st.hint_open)] {
            for f in &log.recorded {
                let _ = writeln!(s, "{kind} failure n={} #{}: {}; {}", f.n, f.index, f.topology, f.witness);
            }
        }
    }
    if let Some(f) = r.per_n.iter().find_map(|st| first_witness(&st.hint)) {
        let _ = writeln!(s, "first hint counterexample (A arbitrary): n={} #{} {}; {}", f.n, f.index, f.topology, f.witness);
    }
    let _ = writeln!(s, "result: {}", if r.is_clean() { "no disagreements" } else { "DISAGREEMENTS OR LEMMA FAILURES FOUND" });
    s
}

// ---- claim ----

pub fn claim_document(r: &ModelCheckReport, failure_cap: usize, timing: bool) -> Document {
    Document {
        version: REPORT_VERSION,
        command: "claim",
        scope: FINITE_SCOPE,
        parameters: serde_json::json!({
            "claim": r.claim,
            "max_n": r.n_max,
            "filter": r.filter.name(),
            "failure_cap": failure_cap,
        }),
        per_n_stats: r
            .per_n
            .iter()
            .map(|s| {
                serde_json::json!({
                    "n": s.n,
                    "enumerated": s.enumerated,
                    "checked": s.checked,
                    "failures": s.failures,
                })
            })
            .collect(),
        failures: r.failures.iter().map(|f| FailureDoc::from_failure("claim", f)).collect(),
        verdicts: None,
        duration_ms: millis(r.duration, timing),
    }
}

pub fn claim_text(r: &ModelCheckReport, timing: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "claim: {}", r.claim);
    let _ = writeln!(s, "filter: {}; scope: {FINITE_SCOPE}", r.filter.name());
    for st in &r.per_n {
        let _ = writeln!(s, "n={}: {} enumerated, {} checked, {} counterexamples", st.n, st.enumerated, st.checked, st.failures);
    }
    for f in &r.failures {
        let _ = writeln!(s, "counterexample n={} #{}: {}", f.n, f.index, f.topology);
        let _ = writeln!(s, "  {}", f.witness);
    }
    let total = r.total_failures();
    if total as usize > r.failures.len() {
        let _ = writeln!(s, "({} more counterexamples not shown)", total as usize - r.failures.len());
    }
    if timing {
        let _ = writeln!(s, "duration: {}ms", r.duration.as_millis());
    }
    let _ = writeln!(s, "result: {}", if total == 0 { "holds" } else { "COUNTEREXAMPLE FOUND" });
    s
}

// ---- census ----

pub fn census_document(rows: &[CensusRow], statements: &[Statement], n_max: usize, duration: Duration, timing: bool) -> Document {
    Document {
        version: REPORT_VERSION,
        command: "census",
        scope: FINITE_SCOPE,
        parameters: serde_json::json!({
            "max_n": n_max,
            "via": statements.iter().map(|s| s.id()).collect::<Vec<_>>(),
        }),
        per_n_stats: rows
            .iter()
            .map(|r| {
                let mut v = serde_json::json!({ "n": r.n, "labeled": r.labeled });
                for (s, c) in statements.iter().zip(&r.counts) {
                    v[format!("ed_via_{}", s.id())] = (*c).into();
                }
                v
            })
            .collect(),
        failures: Vec::new(),
        verdicts: None,
        duration_ms: millis(duration, timing),
    }
}

pub fn census_text(rows: &[CensusRow], statements: &[Statement]) -> String {
    let mut s = String::new();
    let _ = write!(s, "{:>2} {:>9}", "n", "labeled");
    for st in statements {
        let _ = write!(s, " {:>9}", format!("ed via {}", st.id()));
    }
    s.push('\n');
    for r in rows {
        let _ = write!(s, "{:>2} {:>9}", r.n, r.labeled);
        for c in &r.counts {
            let _ = write!(s, " {c:>9}");
        }
        s.push('\n');
    }
    s
}

// ---- enumerate ----

/// Streams the enumeration document so large `n` is never held in memory.
pub fn write_enumeration_json<W: std::io::Write + ?Sized>(
    out: &mut W,
    n: usize,
    up_to_homeo: bool,
    topologies: impl Iterator<Item = Topology>,
) -> std::io::Result<u64> {
    let params = serde_json::json!({ "n": n, "up_to_homeo": up_to_homeo });
    writeln!(out, "{{")?;
    writeln!(out, "  \"version\": {REPORT_VERSION},")?;
    writeln!(out, "  \"command\": \"enumerate\",")?;
    writeln!(out, "  \"scope\": \"labeled topologies on a finite point set\",")?;
    writeln!(out, "  \"parameters\": {params},")?;
    write!(out, "  \"topologies\": [")?;
    let mut count = 0u64;
    for t in topologies {
        let sep = if count == 0 { "\n" } else { ",\n" };
        let item = serde_json::to_string(&TopologyFile::from_topology(&t)).map_err(std::io::Error::other)?;
        write!(out, "{sep}    {item}")?;
        count += 1;
    }
    writeln!(out, "{}],", if count == 0 { "" } else { "\n  " })?;
    writeln!(out, "  \"per_n_stats\": [{{\"n\": {n}, \"count\": {count}}}],")?;
    writeln!(out, "  \"failures\": [],")?;
    writeln!(out, "  \"duration_ms\": null")?;
    writeln!(out, "}}")?;
    Ok(count)
}
