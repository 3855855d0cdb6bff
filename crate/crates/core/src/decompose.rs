//! Primary decomposition of k-ideals in finite semirings.
//!
//! A proper k-ideal is split into k-irreducible k-ideals by repeatedly
//! writing a reducible node as `J ∩ K` with `J, K` strictly larger k-ideals.
//! Each irreducible piece is then re-checked to be primary, and the list is
//! reduced: redundant components are dropped and components sharing a
//! radical are merged. Nothing is assumed about the outcome; every step that
//! could fail returns the witness that made it fail.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::classify::{is_k_irreducible, is_primary, prime_witness, primary_radical, primary_witness};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{colon_power_chain, generated_ideal, jacobson, lattice, Ideal, KIdeal};
use crate::semiring::{Elem, FiniteSemiring};

/// Upper bound on subsets examined by [`brute_force_decompositions`].
pub const DEFAULT_SUBSET_BUDGET: u64 = 1 << 20;

/// How a node of the split tree was resolved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SplitNode {
    Irreducible { ideal: ElemSet },
    Split {
        ideal: ElemSet,
        left: Box<SplitNode>,
        right: Box<SplitNode>,
    },
}

impl SplitNode {
    pub fn ideal(&self) -> ElemSet {
        match self {
            SplitNode::Irreducible { ideal } | SplitNode::Split { ideal, .. } => *ideal,
        }
    }

    fn leaves(&self, out: &mut Vec<ElemSet>) {
        match self {
            SplitNode::Irreducible { ideal } => {
                if !out.contains(ideal) {
                    out.push(*ideal);
                }
            }
            SplitNode::Split { left, right, .. } => {
                left.leaves(out);
                right.leaves(out);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult<'s> {
    pub input: KIdeal<'s>,
    /// Primary k-ideals whose intersection is `input`.
    pub components: Vec<KIdeal<'s>>,
    /// Prime radicals, parallel to `components`.
    pub radicals: Vec<Ideal<'s>>,
    pub reduced: bool,
    /// The k-irreducible pieces before reduction.
    pub irreducible: Vec<KIdeal<'s>>,
    pub provenance: SplitNode,
}

fn check_proper_k<'s>(i: &KIdeal<'s>) -> Result<()> {
    if i.is_proper() {
        Ok(())
    } else {
        Err(Error::NotProper(i.members()))
    }
}

/// Best split `I = J ∩ K` over k-ideals strictly above `I`: smallest
/// `|J| + |K|`, then lowest `(J, K)` in bitset order with `J < K`.
fn best_split(s: &FiniteSemiring, me: ElemSet) -> Option<(ElemSet, ElemSet)> {
    let above: Vec<ElemSet> = lattice(s)
        .k_ideals
        .iter()
        .copied()
        .filter(|k| me.is_strict_subset(*k))
        .collect();
    let mut best: Option<(usize, ElemSet, ElemSet)> = None;
    for (x, &j) in above.iter().enumerate() {
        for &k in &above[x + 1..] {
            if j.intersection(k) != me {
                continue;
            }
            let key = (j.len() + k.len(), j, k);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
    }
    best.map(|(_, j, k)| (j, k))
}

fn split_tree(i: &KIdeal<'_>) -> Result<SplitNode> {
    if is_k_irreducible(i)? {
        return Ok(SplitNode::Irreducible { ideal: i.members() });
    }
    let s = i.ring();
    let (j, k) = best_split(s, i.members()).expect("reducible k-ideal must have a split");
    Ok(SplitNode::Split {
        ideal: i.members(),
        left: Box::new(split_tree(&KIdeal::trusted(s, j))?),
        right: Box::new(split_tree(&KIdeal::trusted(s, k))?),
    })
}

/// Writes a proper k-ideal as an intersection of k-irreducible k-ideals.
///
/// Every recursive call is on a strictly larger k-ideal, so the recursion is
/// bounded by the height of the lattice.
pub fn decompose_irreducible<'s>(i: &KIdeal<'s>) -> Result<Vec<KIdeal<'s>>> {
    Ok(decompose_with_provenance(i)?.0)
}

pub fn decompose_with_provenance<'s>(i: &KIdeal<'s>) -> Result<(Vec<KIdeal<'s>>, SplitNode)> {
    check_proper_k(i)?;
    let tree = split_tree(i)?;
    let mut leaves = Vec::new();
    tree.leaves(&mut leaves);
    let s = i.ring();
    Ok((leaves.into_iter().map(|m| KIdeal::trusted(s, m)).collect(), tree))
}

fn intersect_all(s: &FiniteSemiring, sets: impl IntoIterator<Item = ElemSet>) -> ElemSet {
    sets.into_iter().fold(s.all(), ElemSet::intersection)
}

/// Reduces a list of primary ideals with a common intersection:
///
/// 1. delete the lowest-indexed `Q_j ⊇ ⋂_{i≠j} Q_i`, rescanning after each
///    deletion;
/// 2. merge components with equal radicals into their intersection, in
///    order of first appearance;
/// 3. check each merged component is primary with the shared radical.
pub fn reduce<'s>(components: &[Ideal<'s>]) -> Result<Vec<Ideal<'s>>> {
    let Some(first) = components.first() else {
        return Ok(Vec::new());
    };
    let s = first.ring();
    if components.iter().any(|c| c.ring().id() != s.id()) {
        return Err(Error::CarrierMismatch);
    }
    let mut qs: Vec<ElemSet> = components.iter().map(Ideal::members).collect();

    'scan: loop {
        for j in 0..qs.len() {
            let others = intersect_all(s, qs.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &q)| q));
            if others.is_subset(qs[j]) && qs.len() > 1 {
                qs.remove(j);
                continue 'scan;
            }
        }
        break;
    }

    let mut groups: Vec<(ElemSet, ElemSet)> = Vec::new();
    for q in qs {
        let rad = Ideal::trusted(s, q).radical().members();
        match groups.iter_mut().find(|(r, _)| *r == rad) {
            Some((_, acc)) => *acc = acc.intersection(q),
            None => groups.push((rad, q)),
        }
    }

    let mut out = Vec::with_capacity(groups.len());
    for (rad, q) in groups {
        let merged = Ideal::trusted(s, q);
        let merged_rad = merged.radical().members();
        if let Some((x, y)) = primary_witness(&merged).filter(|_| merged.is_proper()) {
            return Err(Error::GroupNotPrimary {
                group: q,
                radical: rad,
                reason: format!("{x}*{y} in {q}, {x} not in it, {y} not in {merged_rad}"),
            });
        }
        if !merged.is_proper() || merged_rad != rad {
            return Err(Error::GroupNotPrimary {
                group: q,
                radical: rad,
                reason: format!("radical of the intersection is {merged_rad}"),
            });
        }
        out.push(merged);
    }
    Ok(out)
}

/// Radicals pairwise distinct and no component contains the intersection of
/// the others.
pub fn is_reduced(s: &FiniteSemiring, components: &[ElemSet]) -> bool {
    let radicals: Vec<ElemSet> = components
        .iter()
        .map(|&q| Ideal::trusted(s, q).radical().members())
        .collect();
    let distinct = radicals.iter().collect::<BTreeSet<_>>().len() == radicals.len();
    distinct
        && (0..components.len()).all(|j| {
            let others = intersect_all(
                s,
                components.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &q)| q),
            );
            !others.is_subset(components[j])
        })
}

/// Primary decomposition of a proper k-ideal.
///
/// Every k-irreducible piece must be primary; a piece that is not yields
/// [`Error::TheoremViolation`] with the offending pair.
pub fn primary_decomposition<'s>(i: &KIdeal<'s>) -> Result<DecompositionResult<'s>> {
    let (irreducible, provenance) = decompose_with_provenance(i)?;
    let s = i.ring();
    for q in &irreducible {
        if let Some((x, y)) = primary_witness(q) {
            return Err(Error::TheoremViolation {
                input: i.members(),
                component: q.members(),
                radical: q.radical().members(),
                x,
                y,
            });
        }
        // components of the split tree are lattice elements, hence k-ideals
        debug_assert!(q.is_k_ideal());
    }
    let plain: Vec<Ideal<'s>> = irreducible.iter().map(KIdeal::as_ideal).collect();
    let reduced = reduce(&plain)?;
    let components = reduced
        .into_iter()
        .map(KIdeal::try_from)
        .collect::<Result<Vec<_>>>()?;
    let radicals = components
        .iter()
        .map(|q| primary_radical(q))
        .collect::<Result<Vec<_>>>()?;
    let members: Vec<ElemSet> = components.iter().map(|q| q.members()).collect();
    assert_eq!(intersect_all(s, members.iter().copied()), i.members());
    Ok(DecompositionResult {
        input: *i,
        reduced: is_reduced(s, &members),
        components,
        radicals,
        irreducible,
        provenance,
    })
}

impl fmt::Display for DecompositionResult<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ideal {}", self.input)?;
        for (q, p) in self.components.iter().zip(&self.radicals) {
            writeln!(f, "component {q} radical {p}")?;
        }
        write!(f, "reduced {}", self.reduced)
    }
}

/// Prime ideals of the form `√(I : x)`, each with its least witness `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssociatedPrimes {
    #[serde(serialize_with = "witness_list")]
    pub witnesses: BTreeMap<ElemSet, Elem>,
}

fn witness_list<S: serde::Serializer>(w: &BTreeMap<ElemSet, Elem>, ser: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry {
        prime: ElemSet,
        witness: Elem,
    }
    ser.collect_seq(w.iter().map(|(&prime, &witness)| Entry { prime, witness }))
}

impl AssociatedPrimes {
    pub fn primes(&self) -> BTreeSet<ElemSet> {
        self.witnesses.keys().copied().collect()
    }
}

pub fn associated_primes(i: &KIdeal<'_>) -> Result<AssociatedPrimes> {
    check_proper_k(i)?;
    let mut witnesses = BTreeMap::new();
    for x in i.ring().elems() {
        let p = i.colon(x).radical();
        if p.is_proper() && prime_witness(&p).is_none() {
            witnesses.entry(p.members()).or_insert(x);
        }
    }
    Ok(AssociatedPrimes { witnesses })
}

/// All reduced primary decompositions of `i` built from proper primary
/// k-ideals containing it, with at most `max_size` components.
pub fn brute_force_decompositions(
    i: &KIdeal<'_>,
    max_size: Option<usize>,
    budget: u64,
) -> Result<Vec<Vec<ElemSet>>> {
    check_proper_k(i)?;
    let s = i.ring();
    let me = i.members();
    let candidates: Vec<(ElemSet, ElemSet)> = lattice(s)
        .k_ideals
        .iter()
        .copied()
        .filter(|&k| me.is_subset(k))
        .map(|k| Ideal::trusted(s, k))
        .filter(|k| is_primary(k))
        .map(|k| (k.members(), k.radical().members()))
        .collect();
    let c = candidates.len();
    let max_size = max_size.unwrap_or(c).min(c);
    let total: u64 = (1..=max_size as u64).map(|k| binomial(c as u64, k)).sum();
    if total > budget {
        return Err(Error::SearchSpaceTooLarge { candidates: c, budget });
    }

    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    search(s, me, &candidates, max_size, 0, &mut chosen, &mut out);
    Ok(out)
}

fn search(
    s: &FiniteSemiring,
    target: ElemSet,
    candidates: &[(ElemSet, ElemSet)],
    max_size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<ElemSet>>,
) {
    if !chosen.is_empty() {
        let comps: Vec<ElemSet> = chosen.iter().map(|&k| candidates[k].0).collect();
        if intersect_all(s, comps.iter().copied()) == target && is_reduced(s, &comps) {
            out.push(comps);
        }
    }
    if chosen.len() == max_size {
        return;
    }
    for k in start..candidates.len() {
        // distinct radicals are required, so prune repeats early
        if chosen.iter().any(|&c| candidates[c].1 == candidates[k].1) {
            continue;
        }
        chosen.push(k);
        search(s, target, candidates, max_size, k + 1, chosen, out);
        chosen.pop();
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub input: ElemSet,
    pub decompositions: Vec<Vec<ElemSet>>,
    pub radical_sets: Vec<BTreeSet<ElemSet>>,
    pub associated: BTreeSet<ElemSet>,
    pub passed: bool,
    pub findings: Vec<String>,
}

/// Checks that every reduced decomposition found by exhaustive search has
/// the same set of radicals and that it equals the associated primes.
pub fn verify_uniqueness(i: &KIdeal<'_>) -> Result<UniquenessReport> {
    let s = i.ring();
    let decompositions = brute_force_decompositions(i, None, DEFAULT_SUBSET_BUDGET)?;
    let associated = associated_primes(i)?.primes();
    let radical_sets: Vec<BTreeSet<ElemSet>> = decompositions
        .iter()
        .map(|d| d.iter().map(|&q| Ideal::trusted(s, q).radical().members()).collect())
        .collect();
    let mut findings = Vec::new();
    if decompositions.is_empty() {
        findings.push(format!("{}: no reduced primary decomposition found", i.members()));
    }
    for (d, r) in decompositions.iter().zip(&radical_sets) {
        if *r != associated {
            findings.push(format!(
                "{}: decomposition {} has radicals {} but associated primes are {}",
                i.members(),
                fmt_sets(d),
                fmt_sets(r),
                fmt_sets(&associated)
            ));
        }
    }
    Ok(UniquenessReport {
        input: i.members(),
        passed: findings.is_empty(),
        decompositions,
        radical_sets,
        associated,
        findings,
    })
}

pub fn fmt_sets<'a>(sets: impl IntoIterator<Item = &'a ElemSet>) -> String {
    let parts: Vec<String> = sets.into_iter().map(ElemSet::to_string).collect();
    format!("[{}]", parts.join(" "))
}

/// One checked identity of the k-irreducible-implies-primary argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub id: &'static str,
    pub holds: bool,
    pub detail: String,
}

/// Concrete objects of the k-irreducible-implies-primary argument for one
/// triple `(Q, a, b)` with `ab ∈ Q` and `b ∉ Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreduciblePrimaryTrace {
    pub q: ElemSet,
    pub a: Elem,
    pub b: Elem,
    pub stable_index: usize,
    pub chain: Vec<ElemSet>,
    pub a_power: Elem,
    /// `<a^m> + Q`
    pub i: ElemSet,
    /// `<b> + Q`
    pub j: ElemSet,
    pub i_closure: ElemSet,
    pub j_closure: ElemSet,
    pub jac_q: ElemSet,
    pub jac_i: ElemSet,
    pub jac_j: ElemSet,
    pub jac_r: ElemSet,
    pub steps: Vec<TraceStep>,
}

impl IrreduciblePrimaryTrace {
    pub fn first_failure(&self) -> Option<&TraceStep> {
        self.steps.iter().find(|s| !s.holds)
    }

    pub fn concludes(&self) -> bool {
        self.steps.last().is_some_and(|s| s.id == "conclusion" && s.holds)
    }

    /// `Err(StepFailed)` for the first step that does not hold.
    pub fn check(&self) -> Result<()> {
        match self.first_failure() {
            None => Ok(()),
            Some(step) => Err(Error::StepFailed {
                step: step.id.to_string(),
                witness: step.detail.clone(),
            }),
        }
    }
}

/// Replays the argument that a k-irreducible `Q` is primary on concrete
/// elements, recording each intermediate set and whether each identity the
/// argument relies on actually holds here.
///
/// `Jac(R)` is the intersection of all maximal k-ideals.
pub fn irreducible_primary_trace(q: &KIdeal<'_>, a: Elem, b: Elem) -> Result<IrreduciblePrimaryTrace> {
    let s = q.ring();
    s.elem(a.index())?;
    s.elem(b.index())?;
    if !is_k_irreducible(q)? {
        return Err(Error::InvalidArgument(format!("{q} is not k-irreducible")));
    }
    if !q.contains(s.mul(a, b)) || q.contains(b) {
        return Err(Error::InvalidArgument(format!(
            "need ab in Q and b not in Q, got a={a} b={b} Q={q}"
        )));
    }

    let pc = colon_power_chain(q, a);
    let m = pc.stable_index;
    let a_power = s.pow(a, m);
    let qi = q.as_ideal();
    let i = generated_ideal(s, ElemSet::singleton(a_power)).sum(&qi)?;
    let j = generated_ideal(s, ElemSet::singleton(b)).sum(&qi)?;
    let i_bar = i.k_closure()?;
    let j_bar = j.k_closure()?;
    let jac_q = jacobson(s, &qi)?;
    let jac_i = jacobson(s, &i_bar)?;
    let jac_j = jacobson(s, &j_bar)?;
    let jac_r = jacobson(s, &Ideal::zero(s))?;

    let qm = q.members();
    let mut steps = Vec::new();
    let mut step = |id: &'static str, holds: bool, detail: String| {
        steps.push(TraceStep { id, holds, detail });
    };
    step(
        "chain-stabilizes",
        pc.chain[m - 1] == pc.chain[m],
        format!("A_{m} = {} = A_{}", pc.chain[m - 1], m + 1),
    );
    let ij = i.members().intersection(j.members());
    step("intersection", ij == qm, format!("I={i} J={j} I∩J={ij} Q={qm}"));
    let cl = i_bar.members().intersection(j_bar.members());
    step(
        "closure-intersection",
        cl == qm,
        format!("cl(I)={i_bar} cl(J)={j_bar} meet={cl} Q={qm}"),
    );
    let meet = jac_i.members().intersection(jac_j.members());
    step(
        "jac-meet",
        jac_q.members() == meet,
        format!("Jac(Q)={jac_q} Jac(cl I)={jac_i} Jac(cl J)={jac_j} meet={meet}"),
    );
    let q_jr = qm.intersection(jac_r.members());
    step(
        "jac-q-identity",
        jac_q.members() == q_jr,
        format!("Jac(Q)={jac_q} Q∩Jac(R)={q_jr}"),
    );
    step(
        "jac-q-neq-jac-r",
        jac_q != jac_r,
        format!("Jac(Q)={jac_q} Jac(R)={jac_r}"),
    );
    let jac_q_irr = jac_q.is_proper() && jac_q.is_k_ideal() && is_k_irreducible(&jac_q)?;
    step("jac-q-irreducible", jac_q_irr, format!("Jac(Q)={jac_q}"));
    step("jac-q-equals-q", jac_q.members() == qm, format!("Jac(Q)={jac_q} Q={qm}"));
    step(
        "b-in-jac-j",
        jac_j.contains(b),
        format!("b={b} Jac(cl J)={jac_j}"),
    );
    step("q-equals-jac-i", jac_i.members() == qm, format!("Jac(cl I)={jac_i} Q={qm}"));
    step(
        "conclusion",
        q.contains(a_power),
        format!("a^{m}={a_power} {} Q={qm}", if q.contains(a_power) { "in" } else { "not in" }),
    );

    Ok(IrreduciblePrimaryTrace {
        q: qm,
        a,
        b,
        stable_index: m,
        chain: pc.chain,
        a_power,
        i: i.members(),
        j: j.members(),
        i_closure: i_bar.members(),
        j_closure: j_bar.members(),
        jac_q: jac_q.members(),
        jac_i: jac_i.members(),
        jac_j: jac_j.members(),
        jac_r: jac_r.members(),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::ideal::{all_k_ideals, maximal_k_ideals};

    fn set(xs: &[u8]) -> ElemSet {
        xs.iter().map(|&i| Elem::new(i)).collect()
    }

    fn e(i: u8) -> Elem {
        Elem::new(i)
    }

    #[test]
    fn irreducible_splitting() {
        let bxb = catalog::bxb();
        let zero = KIdeal::new(&bxb, set(&[0])).unwrap();
        let parts: Vec<ElemSet> = decompose_irreducible(&zero).unwrap().iter().map(|k| k.members()).collect();
        assert_eq!(parts, vec![set(&[0, 2]), set(&[0, 3])]);

        let c3 = catalog::chain3();
        let zero = KIdeal::new(&c3, set(&[0])).unwrap();
        assert_eq!(decompose_irreducible(&zero).unwrap(), vec![zero]);

        let whole = KIdeal::new(&c3, c3.all()).unwrap();
        assert!(matches!(decompose_irreducible(&whole), Err(Error::NotProper(_))));
    }

    #[test]
    fn primary_decompositions() {
        let z4 = catalog::z_mod(4);
        let d = primary_decomposition(&KIdeal::new(&z4, set(&[0])).unwrap()).unwrap();
        assert_eq!(d.components.iter().map(|c| c.members()).collect::<Vec<_>>(), vec![set(&[0])]);
        assert_eq!(d.radicals.iter().map(|c| c.members()).collect::<Vec<_>>(), vec![set(&[0, 2])]);
        assert!(d.reduced);

        let bxb = catalog::bxb();
        let d = primary_decomposition(&KIdeal::new(&bxb, set(&[0])).unwrap()).unwrap();
        let comps: Vec<ElemSet> = d.components.iter().map(|c| c.members()).collect();
        let rads: Vec<ElemSet> = d.radicals.iter().map(|c| c.members()).collect();
        assert_eq!(comps, vec![set(&[0, 2]), set(&[0, 3])]);
        assert_eq!(rads, comps);
        assert!(d.reduced);
        assert_eq!(
            d.to_string(),
            "ideal {0}\ncomponent {0,2} radical {0,2}\ncomponent {0,3} radical {0,3}\nreduced true"
        );

        for s in [bxb.clone(), z4.clone(), catalog::z_mod(6), catalog::chain(4)] {
            for m in maximal_k_ideals(&s) {
                let d = primary_decomposition(&m).unwrap();
                assert_eq!(d.components, vec![m]);
            }
        }
    }

    #[test]
    fn decomposition_is_deterministic() {
        let s = catalog::product(&catalog::z_mod(2), &catalog::chain3());
        for k in all_k_ideals(&s).into_iter().filter(|k| k.is_proper()) {
            assert_eq!(primary_decomposition(&k).unwrap(), primary_decomposition(&k).unwrap());
        }
    }

    #[test]
    fn reduction_steps() {
        let z4 = catalog::z_mod(4);
        let q = Ideal::new(&z4, set(&[0, 2])).unwrap();
        assert_eq!(reduce(&[q]).unwrap(), vec![q]);
        let zero = Ideal::zero(&z4);
        assert_eq!(reduce(&[zero, q]).unwrap(), vec![zero]);
        assert_eq!(reduce(&[q, zero]).unwrap(), vec![zero]);

        let bxb = catalog::bxb();
        let l = Ideal::new(&bxb, set(&[0, 3])).unwrap();
        let r = Ideal::new(&bxb, set(&[0, 2])).unwrap();
        assert_eq!(reduce(&[l, r, l]).unwrap(), vec![r, l]);
        assert_eq!(reduce(&[l, Ideal::zero(&z4)]), Err(Error::CarrierMismatch));
    }

    /// `F2[x,y]/(x^2, y^2)`; element index = coefficient bits over `1, x, y, xy`.
    fn dual_numbers_2() -> FiniteSemiring {
        let mul = |a: usize, b: usize| {
            let bit = |v: usize, i: usize| (v >> i) & 1;
            let c0 = bit(a, 0) & bit(b, 0);
            let c1 = (bit(a, 0) & bit(b, 1)) ^ (bit(a, 1) & bit(b, 0));
            let c2 = (bit(a, 0) & bit(b, 2)) ^ (bit(a, 2) & bit(b, 0));
            let c3 = (bit(a, 0) & bit(b, 3))
                ^ (bit(a, 3) & bit(b, 0))
                ^ (bit(a, 1) & bit(b, 2))
                ^ (bit(a, 2) & bit(b, 1));
            c0 | c1 << 1 | c2 << 2 | c3 << 3
        };
        let add: Vec<Vec<usize>> = (0..16).map(|a| (0..16).map(|b| a ^ b).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..16).map(|a| (0..16).map(|b| mul(a, b)).collect()).collect();
        FiniteSemiring::validate("F2[x,y]/(x2,y2)", &add, &mul).unwrap()
    }

    #[test]
    fn same_radical_grouping() {
        let z8 = catalog::z_mod(8);
        let a = Ideal::new(&z8, set(&[0, 4])).unwrap();
        let b = Ideal::new(&z8, set(&[0, 2, 4, 6])).unwrap();
        assert!(is_primary(&a) && is_primary(&b));
        // deletion handles nested components
        assert_eq!(reduce(&[a, b]).unwrap(), vec![a]);

        // (x) and (y) are incomparable, both primary to (x, y): grouping merges them
        let s = dual_numbers_2();
        let x = Ideal::new(&s, set(&[0, 2, 8, 10])).unwrap();
        let y = Ideal::new(&s, set(&[0, 4, 8, 12])).unwrap();
        assert!(is_primary(&x) && is_primary(&y));
        assert_eq!(x.radical(), y.radical());
        assert_eq!(reduce(&[x, y]).unwrap(), vec![Ideal::new(&s, set(&[0, 8])).unwrap()]);
    }

    #[test]
    fn associated_prime_examples() {
        let bxb = catalog::bxb();
        let ap = associated_primes(&KIdeal::new(&bxb, set(&[0])).unwrap()).unwrap();
        let expected: BTreeMap<ElemSet, Elem> = [(set(&[0, 2]), e(3)), (set(&[0, 3]), e(2))].into();
        assert_eq!(ap.witnesses, expected);

        let z4 = catalog::z_mod(4);
        let ap = associated_primes(&KIdeal::new(&z4, set(&[0])).unwrap()).unwrap();
        assert_eq!(ap.primes(), [set(&[0, 2])].into());
        assert_eq!(ap.witnesses[&set(&[0, 2])], e(1));

        for m in maximal_k_ideals(&bxb) {
            assert_eq!(associated_primes(&m).unwrap().primes(), [m.members()].into());
        }
    }

    #[test]
    fn brute_force_examples() {
        let bxb = catalog::bxb();
        let zero = KIdeal::new(&bxb, set(&[0])).unwrap();
        let all = brute_force_decompositions(&zero, None, DEFAULT_SUBSET_BUDGET).unwrap();
        assert_eq!(all, vec![vec![set(&[0, 2]), set(&[0, 3])]]);

        let c3 = catalog::chain3();
        let mid = KIdeal::new(&c3, set(&[0, 2])).unwrap();
        let all = brute_force_decompositions(&mid, None, DEFAULT_SUBSET_BUDGET).unwrap();
        assert_eq!(all, vec![vec![set(&[0, 2])]]);

        let z4 = catalog::z_mod(4);
        let zero = KIdeal::new(&z4, set(&[0])).unwrap();
        let all = brute_force_decompositions(&zero, None, DEFAULT_SUBSET_BUDGET).unwrap();
        assert!(all.contains(&vec![set(&[0])]));

        assert!(matches!(
            brute_force_decompositions(&zero, None, 0),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }

    #[test]
    fn uniqueness_examples() {
        let bxb = catalog::bxb();
        let r = verify_uniqueness(&KIdeal::new(&bxb, set(&[0])).unwrap()).unwrap();
        assert!(r.passed);
        assert_eq!(r.associated, [set(&[0, 2]), set(&[0, 3])].into());

        let z4 = catalog::z_mod(4);
        let r = verify_uniqueness(&KIdeal::new(&z4, set(&[0])).unwrap()).unwrap();
        assert!(r.passed);
        assert_eq!(r.associated, [set(&[0, 2])].into());
    }

    #[test]
    fn trace_examples() {
        let z4 = catalog::z_mod(4);
        let q = KIdeal::new(&z4, set(&[0, 2])).unwrap();
        let t = irreducible_primary_trace(&q, e(2), e(3)).unwrap();
        assert_eq!(t.stable_index, 1);
        assert_eq!(t.i, set(&[0, 2]));
        assert_eq!(t.j, z4.all());
        assert!(t.concludes());
        let failed: Vec<&str> = t.steps.iter().filter(|s| !s.holds).map(|s| s.id).collect();
        // Jac(Z4) = {0,2} = Jac(Q), so the claimed inequality does not hold here
        assert_eq!(failed, vec!["jac-q-neq-jac-r"]);
        assert!(matches!(t.check(), Err(Error::StepFailed { .. })));

        let b = catalog::boolean();
        let q = KIdeal::new(&b, set(&[0])).unwrap();
        let t = irreducible_primary_trace(&q, e(0), e(1)).unwrap();
        assert!(t.concludes());
        assert_eq!(t.a_power, e(0));

        assert!(irreducible_primary_trace(&q, e(1), e(1)).is_err());
    }
}
