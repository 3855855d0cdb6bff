//! Prime, primary and k-irreducible ideals.

use std::fmt;

use serde::Serialize;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::ideal::{lattice, Ideal, KIdeal};
use crate::semiring::Elem;

/// A pair `(a, b)` with `ab ∈ I` and `a, b ∉ I`, if one exists.
pub fn prime_witness(i: &Ideal<'_>) -> Option<(Elem, Elem)> {
    let s = i.ring();
    for a in s.elems().filter(|&a| !i.contains(a)) {
        for b in s.elems().filter(|&b| !i.contains(b)) {
            if i.contains(s.mul(a, b)) {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn is_prime(i: &Ideal<'_>) -> bool {
    i.is_proper() && prime_witness(i).is_none()
}

/// A pair `(x, y)` with `xy ∈ I`, `x ∉ I` and `y ∉ √I`, if one exists.
pub fn primary_witness(i: &Ideal<'_>) -> Option<(Elem, Elem)> {
    let s = i.ring();
    let rad = i.radical();
    for x in s.elems().filter(|&x| !i.contains(x)) {
        for y in s.elems().filter(|&y| !rad.contains(y)) {
            if i.contains(s.mul(x, y)) {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn is_primary(i: &Ideal<'_>) -> bool {
    i.is_proper() && primary_witness(i).is_none()
}

/// Radical of `i`. For a primary ideal the radical is additionally checked
/// to be prime.
pub fn primary_radical<'s>(i: &Ideal<'s>) -> Result<Ideal<'s>> {
    let rad = i.radical();
    if is_primary(i) {
        if let Some((a, b)) = prime_witness(&rad) {
            return Err(Error::RadicalNotPrime {
                ideal: i.members(),
                radical: rad.members(),
                a,
                b,
            });
        }
        if !rad.is_proper() {
            return Err(Error::RadicalNotPrime {
                ideal: i.members(),
                radical: rad.members(),
                a: Elem::ONE,
                b: Elem::ONE,
            });
        }
    }
    Ok(rad)
}

fn check_proper_k(i: &Ideal<'_>) -> Result<()> {
    if !i.is_proper() {
        return Err(Error::NotProper(i.members()));
    }
    KIdeal::try_from(*i).map(|_| ())
}

/// Whether a proper k-ideal is not the intersection of two strictly larger
/// k-ideals.
///
/// In the finite lattice of k-ideals this holds iff the intersection of all
/// k-ideals strictly above `I` is still strictly above `I`.
pub fn is_k_irreducible(i: &Ideal<'_>) -> Result<bool> {
    check_proper_k(i)?;
    let s = i.ring();
    let me = i.members();
    let meet = lattice(s)
        .k_ideals
        .iter()
        .filter(|k| me.is_strict_subset(**k))
        .fold(s.all(), |acc, &k| acc.intersection(k));
    Ok(meet != me)
}

/// Pairwise form of [`is_k_irreducible`]: scans every pair of k-ideals.
pub fn is_k_irreducible_by_pairs(i: &Ideal<'_>) -> Result<bool> {
    check_proper_k(i)?;
    let ks = &lattice(i.ring()).k_ideals;
    let me = i.members();
    for &j in ks {
        for &k in ks {
            if j.intersection(k) == me && j != me && k != me {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealClass {
    pub is_proper: bool,
    pub is_prime: bool,
    pub is_primary: bool,
    pub radical: ElemSet,
    /// `None` unless the ideal is a proper k-ideal.
    pub is_k_irreducible: Option<bool>,
}

pub fn classify(i: &Ideal<'_>) -> Result<IdealClass> {
    let radical = primary_radical(i)?.members();
    let is_k_irreducible = if i.is_proper() && i.is_k_ideal() {
        Some(is_k_irreducible(i)?)
    } else {
        None
    };
    Ok(IdealClass {
        is_proper: i.is_proper(),
        is_prime: is_prime(i),
        is_primary: is_primary(i),
        radical,
        is_k_irreducible,
    })
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let irr = match self.is_k_irreducible {
            Some(b) => b.to_string(),
            None => "n/a".into(),
        };
        write!(
            f,
            "proper={} prime={} primary={} radical={} k_irreducible={}",
            self.is_proper, self.is_prime, self.is_primary, self.radical, irr
        )
    }
}

/// Outcome of checking that `(Q : x)` is primary with the same radical as
/// `Q`, for a primary `Q` and `x ∉ Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColonReport {
    pub q: ElemSet,
    pub x: Elem,
    pub colon: ElemSet,
    pub expected_radical: ElemSet,
    pub radical: ElemSet,
    pub colon_is_primary: bool,
    /// `(a, b)` with `ab` in the colon, `a` outside it, `b` outside its radical.
    pub primary_witness: Option<(Elem, Elem)>,
    pub passed: bool,
    pub note: Option<String>,
}

pub fn colon_is_primary_check(q: &Ideal<'_>, x: Elem) -> ColonReport {
    let colon = q.colon(x);
    let rad = colon.radical();
    let expected = q.radical();
    let witness = if colon.is_proper() { primary_witness(&colon) } else { None };
    let colon_is_primary = colon.is_proper() && witness.is_none();
    let note = if q.contains(x) {
        Some(format!("precondition failed: {x} is in {q}"))
    } else if !is_primary(q) {
        Some(format!("precondition failed: {q} is not primary"))
    } else {
        None
    };
    ColonReport {
        q: q.members(),
        x,
        colon: colon.members(),
        expected_radical: expected.members(),
        radical: rad.members(),
        colon_is_primary,
        primary_witness: witness,
        passed: note.is_none() && colon_is_primary && rad == expected,
        note,
    }
}
