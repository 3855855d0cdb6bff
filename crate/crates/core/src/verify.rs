//! Exhaustive per-semiring verification sweep.
//!
//! [`verify_semiring`] runs every check over every ideal (and element) of one
//! semiring. Checks come in two kinds: assertions, whose failures become
//! [`Finding`]s and make a run fail, and observations, which are only
//! counted and reported as notes because nothing guarantees them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::classify::{is_k_irreducible, is_k_irreducible_by_pairs, is_prime, is_primary, primary_radical};
use crate::decompose::{
    associated_primes, fmt_sets, primary_decomposition, irreducible_primary_trace, verify_uniqueness,
};
use crate::elemset::ElemSet;
use crate::ideal::{all_ideals, all_k_ideals, Ideal, KIdeal};
use crate::par::{self, Strategy};
use crate::semiring::{FiniteSemiring, StructuralFlags};

pub mod checks {
    pub const DECOMPOSITION_EXISTS: &str = "decomposition-exists";
    pub const IRREDUCIBLE_IS_PRIMARY: &str = "irreducible-is-primary";
    pub const PRIME_SET_UNIQUE: &str = "prime-set-unique";
    pub const ENGINE_MATCHES_ORACLE: &str = "engine-matches-oracle";
    pub const IRREDUCIBLE_ORACLE: &str = "irreducible-oracle-agrees";
    pub const COLON_RADICAL_MEET: &str = "colon-radical-meet";
    pub const COLON_IS_IDEAL: &str = "colon-is-ideal";
    pub const COLON_OF_MEMBER: &str = "colon-of-member";
    pub const COLON_OUTSIDE_RADICAL: &str = "colon-outside-radical";
    pub const COLON_IS_PRIMARY: &str = "colon-is-primary";
    pub const COLON_CONTAINS: &str = "colon-contains";
    pub const COLON_OUTSIDE_ASSOCIATED: &str = "colon-outside-associated";
    pub const PRIMARY_RADICAL_PRIME: &str = "primary-radical-prime";
    pub const CLASS_HIERARCHY: &str = "class-hierarchy";
    pub const K_CLOSURE_LAWS: &str = "k-closure-laws";
    pub const RADICAL_LAWS: &str = "radical-laws";
    pub const RADICAL_MEET_K: &str = "radical-meet-k";
    pub const K_MEET_CLOSED: &str = "k-meet-closed";
    pub const TRACE_CONCLUSION: &str = "trace-conclusion";

    pub const OBS_RADICAL_MEET_IDEAL: &str = "radical-meet-ideal";
    pub const OBS_K_SUM_IS_K: &str = "k-sum-is-k";
    pub const OBS_RADICAL_OF_K_IS_K: &str = "radical-of-k-is-k";
}

use checks::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    /// A stated result fails on a concrete instance.
    Violation,
}

/// A failed assertion, with everything needed to recheck it by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub severity: Severity,
    pub semiring: String,
    pub check: &'static str,
    pub witness: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub failed: u64,
}

impl Tally {
    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealSummary {
    pub ideal: ElemSet,
    pub irreducible: Vec<ElemSet>,
    pub components: Vec<ElemSet>,
    pub radicals: Vec<ElemSet>,
    pub associated: Vec<ElemSet>,
    pub reduced_decompositions: usize,
    /// Why the engine produced no decomposition.
    pub error: Option<String>,
}

/// One enumerated semiring with its k-ideal lattice and per-ideal
/// decomposition summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub name: String,
    pub order: usize,
    pub flags: StructuralFlags,
    pub ideal_count: usize,
    pub k_ideal_count: usize,
    pub summaries: Vec<IdealSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemiringReport {
    pub record: CensusRecord,
    pub checks: BTreeMap<&'static str, Tally>,
    /// Properties that are recorded rather than asserted.
    pub observations: BTreeMap<&'static str, Tally>,
    /// First counterexample per observation.
    pub observation_examples: BTreeMap<&'static str, String>,
    /// Per-step tallies of the irreducible-implies-primary replay.
    pub trace_steps: BTreeMap<&'static str, Tally>,
    pub findings: Vec<Finding>,
}

impl SemiringReport {
    pub fn passed(&self) -> bool {
        self.findings.is_empty()
    }
}

struct Sweep<'a> {
    name: &'a str,
    checks: BTreeMap<&'static str, Tally>,
    observations: BTreeMap<&'static str, Tally>,
    observation_examples: BTreeMap<&'static str, String>,
    trace_steps: BTreeMap<&'static str, Tally>,
    findings: Vec<Finding>,
}

impl Sweep<'_> {
    fn assert(&mut self, check: &'static str, ok: bool, witness: impl FnOnce() -> String) {
        let t = self.checks.entry(check).or_default();
        t.checked += 1;
        if !ok {
            t.failed += 1;
            self.findings.push(Finding {
                severity: Severity::Violation,
                semiring: self.name.to_string(),
                check,
                witness: witness(),
            });
        }
    }

    fn observe(&mut self, what: &'static str, ok: bool, example: impl FnOnce() -> String) {
        let t = self.observations.entry(what).or_default();
        t.checked += 1;
        if !ok {
            t.failed += 1;
            self.observation_examples.entry(what).or_insert_with(example);
        }
    }
}

pub fn verify_semiring(s: &FiniteSemiring) -> SemiringReport {
    let mut w = Sweep {
        name: s.name(),
        checks: BTreeMap::new(),
        observations: BTreeMap::new(),
        observation_examples: BTreeMap::new(),
        trace_steps: BTreeMap::new(),
        findings: Vec::new(),
    };
    let ideals = all_ideals(s);
    let k_ideals = all_k_ideals(s);

    ideal_laws(s, &ideals, &mut w);
    k_ideal_laws(&k_ideals, &mut w);
    colon_laws(s, &ideals, &mut w);

    let mut summaries = Vec::new();
    for k in k_ideals.iter().filter(|k| k.is_proper()) {
        summaries.push(decomposition_checks(s, k, &mut w));
        irreducible_checks(s, k, &mut w);
    }

    SemiringReport {
        record: CensusRecord {
            name: s.name().to_string(),
            order: s.order(),
            flags: s.flags(),
            ideal_count: ideals.len(),
            k_ideal_count: k_ideals.len(),
            summaries,
        },
        checks: w.checks,
        observations: w.observations,
        observation_examples: w.observation_examples,
        trace_steps: w.trace_steps,
        findings: w.findings,
    }
}

fn ideal_laws(s: &FiniteSemiring, ideals: &[Ideal<'_>], w: &mut Sweep<'_>) {
    for i in ideals {
        let prime = is_prime(i);
        let primary = is_primary(i);
        w.assert(CLASS_HIERARCHY, (!prime || primary) && (!primary || i.is_proper()), || {
            format!("{i}: prime={prime} primary={primary} proper={}", i.is_proper())
        });
        if primary {
            let r = primary_radical(i);
            w.assert(PRIMARY_RADICAL_PRIME, r.is_ok(), || r.unwrap_err().to_string());
        }

        match i.k_closure() {
            Ok(c) => {
                let cc = c.k_closure().map(|x| x.members());
                let fixed = c.members() == i.members();
                w.assert(
                    K_CLOSURE_LAWS,
                    i.members().is_subset(c.members())
                        && cc == Ok(c.members())
                        && fixed == i.is_k_ideal(),
                    || format!("{i}: closure {c}, closure of closure {cc:?}, k-ideal {}", i.is_k_ideal()),
                );
            }
            Err(e) => w.assert(K_CLOSURE_LAWS, false, || e.to_string()),
        }
        let r = i.radical();
        let rr = r.radical();
        w.assert(RADICAL_LAWS, i.is_subset(&r) && rr == r, || {
            format!("{i}: radical {r}, radical of radical {rr}")
        });

        for j in ideals.iter().filter(|j| i.is_subset(j)) {
            let (ci, cj) = (i.k_closure(), j.k_closure());
            if let (Ok(ci), Ok(cj)) = (ci, cj) {
                w.assert(K_CLOSURE_LAWS, ci.is_subset(&cj), || {
                    format!("{i} ⊆ {j} but closures {ci} ⊄ {cj}")
                });
            }
            let (ri, rj) = (i.radical(), j.radical());
            w.assert(RADICAL_LAWS, ri.is_subset(&rj), || {
                format!("{i} ⊆ {j} but radicals {ri} ⊄ {rj}")
            });
        }

        for j in ideals {
            let meet = Ideal::trusted(s, i.members().intersection(j.members()));
            let lhs = meet.radical().members();
            let rhs = i.radical().members().intersection(j.radical().members());
            w.observe(OBS_RADICAL_MEET_IDEAL, lhs == rhs, || {
                format!("{}: rad({i} ∩ {j}) = {lhs} but rad {i} ∩ rad {j} = {rhs}", s.name())
            });
        }
    }
}

fn k_ideal_laws(k_ideals: &[KIdeal<'_>], w: &mut Sweep<'_>) {
    for i in k_ideals {
        let r = i.radical();
        w.observe(OBS_RADICAL_OF_K_IS_K, r.is_k_ideal(), || {
            format!("{}: radical of k-ideal {i} is {r}, not a k-ideal", i.ring().name())
        });
        for j in k_ideals {
            let meet = i.intersection(j).expect("same carrier");
            w.assert(K_MEET_CLOSED, meet.is_k_ideal(), || format!("{i} ∩ {j} = {meet}"));
            let lhs = meet.radical().members();
            let rhs = i.radical().members().intersection(j.radical().members());
            w.assert(RADICAL_MEET_K, lhs == rhs, || {
                format!("rad({i} ∩ {j}) = {lhs} but rad {i} ∩ rad {j} = {rhs}")
            });
            let sum = i.sum(j).expect("same carrier");
            w.observe(OBS_K_SUM_IS_K, sum.is_k_ideal(), || {
                format!("{}: {i} + {j} = {sum} is not a k-ideal", i.ring().name())
            });
        }
    }
}

fn colon_laws(s: &FiniteSemiring, ideals: &[Ideal<'_>], w: &mut Sweep<'_>) {
    for q in ideals {
        let primary = is_primary(q);
        let rad = q.radical();
        for x in s.elems() {
            let c = q.colon(x);
            w.assert(COLON_CONTAINS, q.is_subset(&c), || format!("({q} : {x}) = {c} misses part of {q}"));
            let is_ideal = Ideal::new(s, c.members()).is_ok();
            w.assert(COLON_IS_IDEAL, is_ideal, || format!("({q} : {x}) = {c}"));
            if !primary {
                continue;
            }
            if q.contains(x) {
                w.assert(COLON_OF_MEMBER, c.members() == s.all(), || {
                    format!("{x} ∈ {q} but ({q} : {x}) = {c}")
                });
            }
            if !rad.contains(x) {
                w.assert(COLON_OUTSIDE_RADICAL, c == *q, || {
                    format!("{x} ∉ rad {q} = {rad} but ({q} : {x}) = {c}")
                });
            }
            if !q.contains(x) {
                let cr = c.radical();
                let ok = is_primary(&c) && cr == rad;
                w.assert(COLON_IS_PRIMARY, ok, || {
                    format!(
                        "{x} ∉ {q}: ({q} : {x}) = {c}, primary={}, radical {cr}, expected {rad}",
                        is_primary(&c)
                    )
                });
            }
        }
    }
}

fn decomposition_checks(s: &FiniteSemiring, k: &KIdeal<'_>, w: &mut Sweep<'_>) -> IdealSummary {
    let assoc: Vec<ElemSet> = associated_primes(k).expect("proper k-ideal").primes().into_iter().collect();
    let (comps, rads, irreducible, error) = match primary_decomposition(k) {
        Ok(d) => {
            let comps: Vec<ElemSet> = d.components.iter().map(|c| c.members()).collect();
            let rads: Vec<ElemSet> = d.radicals.iter().map(|r| r.members()).collect();
            let meet = comps.iter().fold(s.all(), |acc, &c| acc.intersection(c));
            let all_primary_k = d.components.iter().all(|c| is_primary(c) && c.is_k_ideal());
            w.assert(DECOMPOSITION_EXISTS, meet == k.members() && all_primary_k && d.reduced, || {
                format!(
                    "{k}: components {} meet to {meet}, all primary k-ideals {all_primary_k}, reduced {}",
                    fmt_sets(&comps),
                    d.reduced
                )
            });
            let irr = d.irreducible.iter().map(|c| c.members()).collect();
            (comps, rads, irr, None)
        }
        Err(e) => {
            w.assert(DECOMPOSITION_EXISTS, false, || format!("{k}: {e}"));
            (Vec::new(), Vec::new(), Vec::new(), Some(e.to_string()))
        }
    };
    let engine: BTreeSet<ElemSet> = rads.iter().copied().collect();

    let mut reduced_count = 0;
    match verify_uniqueness(k) {
        Ok(u) => {
            reduced_count = u.decompositions.len();
            w.assert(PRIME_SET_UNIQUE, u.passed, || u.findings.join("; "));
            // both sides may agree that no decomposition exists
            let oracle_ok = if error.is_some() {
                u.radical_sets.is_empty()
            } else {
                !u.radical_sets.is_empty() && u.radical_sets.iter().all(|r| *r == engine)
            };
            w.assert(ENGINE_MATCHES_ORACLE, oracle_ok, || {
                format!(
                    "{k}: engine radicals {} vs oracle radical sets {:?}",
                    if error.is_some() { "none".to_string() } else { fmt_sets(&engine) },
                    u.radical_sets.iter().map(fmt_sets).collect::<Vec<_>>()
                )
            });
        }
        Err(e) => w.assert(PRIME_SET_UNIQUE, false, || format!("{k}: {e}")),
    }

    if error.is_none() {
        for x in s.elems() {
            let lhs = k.colon(x).radical().members();
            let rhs = comps
                .iter()
                .zip(&rads)
                .filter(|(q, _)| !q.contains(x))
                .fold(s.all(), |acc, (_, &p)| acc.intersection(p));
            w.assert(COLON_RADICAL_MEET, lhs == rhs, || {
                format!("{k}, x={x}: rad({k} : {x}) = {lhs}, meet of radicals of components missing x = {rhs}")
            });
            if rads.iter().all(|p| !p.contains(x)) {
                let c = k.colon(x);
                w.assert(COLON_OUTSIDE_ASSOCIATED, c == **k, || {
                    format!("{x} outside every associated prime of {k} but ({k} : {x}) = {c}")
                });
            }
        }
    }

    IdealSummary {
        ideal: k.members(),
        irreducible,
        components: comps,
        radicals: rads,
        associated: assoc,
        reduced_decompositions: reduced_count,
        error,
    }
}

fn irreducible_checks(s: &FiniteSemiring, k: &KIdeal<'_>, w: &mut Sweep<'_>) {
    let engine = is_k_irreducible(k).expect("proper k-ideal");
    let oracle = is_k_irreducible_by_pairs(k).expect("proper k-ideal");
    w.assert(IRREDUCIBLE_ORACLE, engine == oracle, || {
        format!("{k}: lattice test {engine}, pairwise test {oracle}")
    });
    if !engine {
        return;
    }
    w.assert(IRREDUCIBLE_IS_PRIMARY, is_primary(k), || {
        let (x, y) = crate::classify::primary_witness(k).expect("not primary");
        format!(
            "k-irreducible {k} is not primary: {x}*{y} = {} in it, {x} not in it, {y} not in its radical {}",
            s.mul(x, y),
            k.radical()
        )
    });
    for a in s.elems() {
        for b in s.elems().filter(|&b| !k.contains(b) && k.contains(s.mul(a, b))) {
            match irreducible_primary_trace(k, a, b) {
                Ok(t) => {
                    for step in &t.steps {
                        let tally = w.trace_steps.entry(step.id).or_default();
                        tally.checked += 1;
                        if !step.holds {
                            tally.failed += 1;
                        }
                    }
                    w.assert(TRACE_CONCLUSION, t.concludes(), || {
                        format!("Q={k} a={a} b={b}: a^{} = {} not in Q", t.stable_index, t.a_power)
                    });
                }
                Err(e) => w.assert(TRACE_CONCLUSION, false, || format!("Q={k} a={a} b={b}: {e}")),
            }
        }
    }
}

/// Reports for many semirings, in input order.
pub fn verify_all(semirings: &[FiniteSemiring], strategy: Strategy) -> Vec<SemiringReport> {
    par::map(strategy, semirings, verify_semiring)
}

/// Line-oriented rendering of one semiring's report.
pub fn render_text(r: &SemiringReport) -> String {
    let mut out = String::new();
    let rec = &r.record;
    let _ = writeln!(
        out,
        "semiring {} order {} flags {} ideals {} k_ideals {}",
        rec.name,
        rec.order,
        rec.flags.bit_string(),
        rec.ideal_count,
        rec.k_ideal_count
    );
    for sm in &rec.summaries {
        let _ = writeln!(
            out,
            "  ideal {} components {} radicals {} associated {} reduced_decompositions {}",
            sm.ideal,
            fmt_sets(&sm.components),
            fmt_sets(&sm.radicals),
            fmt_sets(&sm.associated),
            sm.reduced_decompositions
        );
        if let Some(e) = &sm.error {
            let _ = writeln!(out, "    no decomposition: {e}");
        }
    }
    for (name, t) in &r.checks {
        let _ = writeln!(out, "  check {name} {}/{} failed {}", t.checked - t.failed, t.checked, t.failed);
    }
    for (name, t) in &r.observations {
        let _ = write!(out, "  observe {name} holds {}/{}", t.checked - t.failed, t.checked);
        if let Some(ex) = r.observation_examples.get(name) {
            let _ = write!(out, " e.g. {ex}");
        }
        out.push('\n');
    }
    for (name, t) in &r.trace_steps {
        let _ = writeln!(out, "  trace {name} holds {}/{}", t.checked - t.failed, t.checked);
    }
    for f in &r.findings {
        let _ = writeln!(out, "  FINDING {} {}: {}", f.semiring, f.check, f.witness);
    }
    out
}

/// Totals accumulated over many semiring reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub semirings: u64,
    pub proper_k_ideals: u64,
    pub checks: BTreeMap<&'static str, Tally>,
    pub observations: BTreeMap<&'static str, Tally>,
    pub trace_steps: BTreeMap<&'static str, Tally>,
    pub findings: u64,
}

impl Totals {
    pub fn add(&mut self, r: &SemiringReport) {
        self.semirings += 1;
        self.proper_k_ideals += r.record.summaries.len() as u64;
        for (k, t) in &r.checks {
            self.checks.entry(k).or_default().merge(*t);
        }
        for (k, t) in &r.observations {
            self.observations.entry(k).or_default().merge(*t);
        }
        for (k, t) in &r.trace_steps {
            self.trace_steps.entry(k).or_default().merge(*t);
        }
        self.findings += r.findings.len() as u64;
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "summary semirings {} proper_k_ideals {} findings {}",
            self.semirings, self.proper_k_ideals, self.findings
        );
        for (name, t) in &self.checks {
            let _ = writeln!(out, "  check {name} {}/{} failed {}", t.checked - t.failed, t.checked, t.failed);
        }
        for (name, t) in &self.observations {
            let _ = writeln!(out, "  observe {name} holds {}/{}", t.checked - t.failed, t.checked);
        }
        for (name, t) in &self.trace_steps {
            let _ = writeln!(out, "  trace {name} holds {}/{}", t.checked - t.failed, t.checked);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn catalog_semirings_pass() {
        for s in [catalog::boolean(), catalog::z_mod(4), catalog::bxb(), catalog::chain3(), catalog::z_mod(6)] {
            let r = verify_semiring(&s);
            assert!(r.passed(), "{}", render_text(&r));
            assert!(r.checks[DECOMPOSITION_EXISTS].checked > 0);
        }
    }

    #[test]
    fn report_is_deterministic() {
        let s = catalog::bxb();
        assert_eq!(render_text(&verify_semiring(&s)), render_text(&verify_semiring(&s)));
    }

    #[test]
    fn bxb_summary() {
        let r = verify_semiring(&catalog::bxb());
        let zero = &r.record.summaries[0];
        assert_eq!(zero.components.len(), 2);
        assert_eq!(zero.associated.len(), 2);
        assert_eq!(zero.reduced_decompositions, 1);
        assert_eq!(r.record.k_ideal_count, 4);
    }
}
