//! Ideals, k-ideals and the ideal-level operators: generation, k-closure,
//! sum, intersection, radical, colon, the colon chain of powers, and
//! Jacobson radicals taken over maximal k-ideals.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::semiring::{Elem, FiniteSemiring};

/// An ideal of a finite semiring, identified by its carrier and member set.
#[derive(Clone, Copy)]
pub struct Ideal<'s> {
    ring: &'s FiniteSemiring,
    members: ElemSet,
}

/// An ideal that is also subtractive: `x + y ∈ I` and `x ∈ I` imply `y ∈ I`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct KIdeal<'s>(Ideal<'s>);

/// Witness that a subset fails to be an ideal.
fn ideal_defect(s: &FiniteSemiring, set: ElemSet) -> Option<String> {
    if !set.is_subset(s.all()) {
        return Some("contains indices outside the carrier".into());
    }
    if !set.contains(Elem::ZERO) {
        return Some("does not contain 0".into());
    }
    for a in set {
        for b in set {
            let c = s.add(a, b);
            if !set.contains(c) {
                return Some(format!("{a}+{b}={c} is not a member"));
            }
        }
        for r in s.elems() {
            let c = s.mul(r, a);
            if !set.contains(c) {
                return Some(format!("{r}*{a}={c} is not a member"));
            }
        }
    }
    None
}

/// Witness that an ideal fails to be subtractive.
fn subtractive_defect(s: &FiniteSemiring, set: ElemSet) -> Option<String> {
    for x in set {
        for y in s.elems() {
            if !set.contains(y) && set.contains(s.add(x, y)) {
                return Some(format!("{x}+{y}={} is a member, {x} is a member, {y} is not", s.add(x, y)));
            }
        }
    }
    None
}

pub fn is_ideal(s: &FiniteSemiring, set: ElemSet) -> bool {
    ideal_defect(s, set).is_none()
}

pub fn is_k_ideal(s: &FiniteSemiring, set: ElemSet) -> bool {
    is_ideal(s, set) && subtractive_defect(s, set).is_none()
}

impl<'s> Ideal<'s> {
    pub fn new(ring: &'s FiniteSemiring, members: ElemSet) -> Result<Self> {
        match ideal_defect(ring, members) {
            None => Ok(Ideal { ring, members }),
            Some(reason) => Err(Error::NotAnIdeal { set: members, reason }),
        }
    }

    pub(crate) fn trusted(ring: &'s FiniteSemiring, members: ElemSet) -> Self {
        debug_assert!(is_ideal(ring, members), "{members} is not an ideal");
        Ideal { ring, members }
    }

    pub fn zero(ring: &'s FiniteSemiring) -> Self {
        Ideal::trusted(ring, ElemSet::singleton(Elem::ZERO))
    }

    pub fn whole(ring: &'s FiniteSemiring) -> Self {
        Ideal::trusted(ring, ring.all())
    }

    pub fn ring(&self) -> &'s FiniteSemiring {
        self.ring
    }

    pub fn members(&self) -> ElemSet {
        self.members
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members.contains(e)
    }

    pub fn is_proper(&self) -> bool {
        !self.members.contains(Elem::ONE)
    }

    pub fn is_subset(&self, other: &Ideal<'_>) -> bool {
        self.members.is_subset(other.members)
    }

    pub fn is_k_ideal(&self) -> bool {
        subtractive_defect(self.ring, self.members).is_none()
    }

    pub fn to_k_ideal(self) -> Result<KIdeal<'s>> {
        KIdeal::try_from(self)
    }

    fn same_carrier(&self, other: &Ideal<'_>) -> Result<()> {
        if self.ring.id() == other.ring.id() {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    /// `{a + b | a ∈ I, b ∈ J}`; an ideal, but not necessarily a k-ideal even
    /// when both summands are.
    pub fn sum(&self, other: &Ideal<'_>) -> Result<Ideal<'s>> {
        self.same_carrier(other)?;
        let s = self.ring;
        let mut out = ElemSet::EMPTY;
        for a in self.members {
            for b in other.members {
                out.insert(s.add(a, b));
            }
        }
        Ok(Ideal::trusted(s, out))
    }

    pub fn intersection(&self, other: &Ideal<'_>) -> Result<Ideal<'s>> {
        self.same_carrier(other)?;
        Ok(Ideal::trusted(self.ring, self.members.intersection(other.members)))
    }

    /// `{x ∈ R | x + b = c for some b, c ∈ I}`, the least k-ideal containing
    /// `I`. The result is re-checked before it is returned.
    pub fn k_closure(&self) -> Result<KIdeal<'s>> {
        let s = self.ring;
        let mut out = ElemSet::EMPTY;
        for x in s.elems() {
            if self.members.iter().any(|b| self.members.contains(s.add(x, b))) {
                out.insert(x);
            }
        }
        let fail = |reason: String| Error::ClosureNotKIdeal {
            input: self.members,
            closure: out,
            reason,
        };
        if !self.members.is_subset(out) {
            return Err(fail("not extensive".into()));
        }
        if let Some(reason) = ideal_defect(s, out).or_else(|| subtractive_defect(s, out)) {
            return Err(fail(reason));
        }
        Ok(KIdeal(Ideal { ring: s, members: out }))
    }

    /// `{a | a^m ∈ I for some m ≥ 1}`.
    ///
    /// Only `m ≤ n` needs checking: the powers `a, a², …, a^(n+1)` take at
    /// most `n` values, so the sequence has entered its cycle by `a^n` and
    /// every value it ever takes has already appeared.
    pub fn radical(&self) -> Ideal<'s> {
        let s = self.ring;
        let n = s.order();
        let mut out = ElemSet::EMPTY;
        for a in s.elems() {
            let mut p = a;
            for _ in 0..n {
                if self.members.contains(p) {
                    out.insert(a);
                    break;
                }
                p = s.mul(p, a);
            }
        }
        debug_assert!(self.members.is_subset(out));
        Ideal::trusted(s, out)
    }

    /// `(I : x) = {r | r·x ∈ I}`.
    pub fn colon(&self, x: Elem) -> Ideal<'s> {
        let s = self.ring;
        let out: ElemSet = s.elems().filter(|&r| self.members.contains(s.mul(r, x))).collect();
        Ideal::trusted(s, out)
    }
}

impl PartialEq for Ideal<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.members == other.members
    }
}

impl Eq for Ideal<'_> {}

impl Hash for Ideal<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.id().hash(state);
        self.members.hash(state);
    }
}

impl PartialOrd for Ideal<'_> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Bitset order within one carrier.
impl Ord for Ideal<'_> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

impl fmt::Display for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.members, f)
    }
}

impl fmt::Debug for Ideal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({}, {})", self.ring.name(), self.members)
    }
}

impl<'s> KIdeal<'s> {
    pub fn new(ring: &'s FiniteSemiring, members: ElemSet) -> Result<Self> {
        KIdeal::try_from(Ideal::new(ring, members)?)
    }

    pub(crate) fn trusted(ring: &'s FiniteSemiring, members: ElemSet) -> Self {
        debug_assert!(is_k_ideal(ring, members), "{members} is not a k-ideal");
        KIdeal(Ideal { ring, members })
    }

    pub fn as_ideal(&self) -> Ideal<'s> {
        self.0
    }

    pub fn intersection_k(&self, other: &KIdeal<'_>) -> Result<KIdeal<'s>> {
        Ok(KIdeal(self.0.intersection(&other.0)?))
    }
}

impl<'s> TryFrom<Ideal<'s>> for KIdeal<'s> {
    type Error = Error;

    fn try_from(i: Ideal<'s>) -> Result<Self> {
        match subtractive_defect(i.ring, i.members) {
            None => Ok(KIdeal(i)),
            Some(reason) => Err(Error::NotKIdeal {
                set: i.members,
                reason,
            }),
        }
    }
}

impl<'s> Deref for KIdeal<'s> {
    type Target = Ideal<'s>;

    fn deref(&self) -> &Ideal<'s> {
        &self.0
    }
}

impl fmt::Display for KIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for KIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KIdeal({}, {})", self.0.ring.name(), self.0.members)
    }
}

/// Least ideal containing `gens`: the additive closure of `{r·g}`.
pub fn generated_ideal<'s>(s: &'s FiniteSemiring, gens: ElemSet) -> Ideal<'s> {
    let mut out = ElemSet::singleton(Elem::ZERO);
    for g in gens {
        for r in s.elems() {
            out.insert(s.mul(r, g));
        }
    }
    loop {
        let mut next = out;
        for a in out {
            for b in out {
                next.insert(s.add(a, b));
            }
        }
        if next == out {
            break;
        }
        out = next;
    }
    Ideal::trusted(s, out)
}

/// Ideal lattice of one semiring, cached on the semiring after first use.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub ideals: Vec<ElemSet>,
    pub k_ideals: Vec<ElemSet>,
    pub maximal_k_ideals: Vec<ElemSet>,
}

impl Lattice {
    fn compute(s: &FiniteSemiring) -> Lattice {
        let n = s.order();
        // every ideal contains 0, so walk the subsets of {1..n-1}
        let ideals: Vec<ElemSet> = (0u32..1 << (n - 1))
            .map(|rest| ElemSet::from_bits(((rest << 1) | 1) as u16))
            .filter(|&set| is_ideal(s, set))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let k_ideals: Vec<ElemSet> = ideals
            .iter()
            .copied()
            .filter(|&set| subtractive_defect(s, set).is_none())
            .collect();
        let top = s.all();
        let proper: Vec<ElemSet> = k_ideals.iter().copied().filter(|&k| k != top).collect();
        let maximal_k_ideals = proper
            .iter()
            .copied()
            .filter(|&m| !proper.iter().any(|&other| m.is_strict_subset(other)))
            .collect();
        Lattice {
            ideals,
            k_ideals,
            maximal_k_ideals,
        }
    }
}

pub fn lattice(s: &FiniteSemiring) -> &Lattice {
    s.lattice_cell().get_or_init(|| Lattice::compute(s))
}

/// All ideals, sorted by bitset value.
pub fn all_ideals(s: &FiniteSemiring) -> Vec<Ideal<'_>> {
    lattice(s).ideals.iter().map(|&m| Ideal::trusted(s, m)).collect()
}

/// All k-ideals, sorted by bitset value.
pub fn all_k_ideals(s: &FiniteSemiring) -> Vec<KIdeal<'_>> {
    lattice(s).k_ideals.iter().map(|&m| KIdeal::trusted(s, m)).collect()
}

/// Maximal proper k-ideals.
pub fn maximal_k_ideals(s: &FiniteSemiring) -> Vec<KIdeal<'_>> {
    lattice(s)
        .maximal_k_ideals
        .iter()
        .map(|&m| KIdeal::trusted(s, m))
        .collect()
}

/// Intersection of the maximal k-ideals containing `a`; the whole semiring
/// when none does (in particular for `a = R`).
pub fn jacobson<'s>(s: &'s FiniteSemiring, a: &Ideal<'_>) -> Result<Ideal<'s>> {
    if a.ring().id() != s.id() {
        return Err(Error::CarrierMismatch);
    }
    let members = lattice(s)
        .maximal_k_ideals
        .iter()
        .filter(|m| a.members().is_subset(**m))
        .fold(s.all(), |acc, &m| acc.intersection(m));
    Ok(Ideal::trusted(s, members))
}

/// The ascending chain `A_i = (Q : a^i)` up to the first repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerChain {
    /// Least `m` with `A_m = A_{m+1}`.
    pub stable_index: usize,
    /// `A_1, .., A_{m+1}`.
    pub chain: Vec<ElemSet>,
}

impl PowerChain {
    pub fn stable(&self) -> ElemSet {
        self.chain[self.stable_index - 1]
    }
}

/// Builds `A_i = {x | a^i x ∈ Q}` for `i = 1, 2, ..` until two consecutive
/// terms agree. The chain is ascending because `Q` absorbs multiplication,
/// so it stabilizes within `n` steps.
pub fn colon_power_chain(q: &KIdeal<'_>, a: Elem) -> PowerChain {
    let s = q.ring();
    let mut chain = vec![q.colon(a).members()];
    let mut power = a;
    loop {
        power = s.mul(power, a);
        let next = q.colon(power).members();
        let last = *chain.last().unwrap();
        assert!(last.is_subset(next), "colon chain not ascending: {last} then {next}");
        chain.push(next);
        if next == last {
            return PowerChain {
                stable_index: chain.len() - 1,
                chain,
            };
        }
    }
}
