//! Fixed-width bitsets over the element indices of a finite semiring.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::semiring::{Elem, MAX_ORDER};

/// A subset of `{0, .., 15}` stored as a 16-bit mask.
///
/// Ordering is by the raw mask value, which is the "bitset order" used for
/// every sorted listing of ideals. Serializes as the ascending list of member
/// indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(u16);

impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter().map(|e| e.index()))
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(de)?;
        items
            .into_iter()
            .map(|i| {
                (i < MAX_ORDER)
                    .then(|| Elem::new(i as u8))
                    .ok_or_else(|| serde::de::Error::custom(format!("element {i} out of range")))
            })
            .collect()
    }
}

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub const fn from_bits(bits: u16) -> Self {
        ElemSet(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// All elements of a carrier of order `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n >= 16 {
            ElemSet(u16::MAX)
        } else {
            ElemSet((1u16 << n) - 1)
        }
    }

    pub fn singleton(e: Elem) -> Self {
        ElemSet(1 << e.index())
    }

    pub fn contains(self, e: Elem) -> bool {
        self.0 & (1 << e.index()) != 0
    }

    pub fn insert(&mut self, e: Elem) -> bool {
        let fresh = !self.contains(e);
        self.0 |= 1 << e.index();
        fresh
    }

    pub fn with(mut self, e: Elem) -> Self {
        self.insert(e);
        self
    }

    pub fn union(self, other: ElemSet) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_strict_subset(self, other: ElemSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<T: IntoIterator<Item = Elem>>(iter: T) -> Self {
        let mut s = ElemSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = Elem;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of an [`ElemSet`].
#[derive(Clone)]
pub struct Iter(u16);

impl Iterator for Iter {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as u8;
        self.0 &= self.0 - 1;
        Some(Elem::new(i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", e.index())?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
