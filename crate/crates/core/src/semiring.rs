//! Finite commutative semirings with identity, stored as Cayley tables.
//!
//! Element `0` is always the additive identity and element `1` the
//! multiplicative identity. [`FiniteSemiring::validate`] checks this rather
//! than assuming it, together with every other semiring axiom.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Axiom, Error, Result, Violation};
use crate::ideal::Lattice;

/// Largest supported order; ideals are stored as 16-bit sets.
pub const MAX_ORDER: usize = 16;

/// Index of an element inside one particular semiring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub const fn new(i: u8) -> Self {
        Elem(i)
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// Identifies the carrier an ideal belongs to. Two semirings with identical
/// tables share an id.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CarrierId(u64);

/// Additive structure flags relevant to principal-ideal subtractivity.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct StructuralFlags {
    pub additively_cancellative: bool,
    pub yoked: bool,
    pub zerosumfree: bool,
    pub is_ring: bool,
}

impl StructuralFlags {
    /// Four-character bit string in field order, e.g. `0110` for the
    /// Boolean semiring.
    pub fn bit_string(&self) -> String {
        [
            self.additively_cancellative,
            self.yoked,
            self.zerosumfree,
            self.is_ring,
        ]
        .iter()
        .map(|&b| if b { '1' } else { '0' })
        .collect()
    }
}

pub struct FiniteSemiring {
    name: String,
    order: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    id: CarrierId,
    flags: StructuralFlags,
    lattice: OnceLock<Lattice>,
}

impl FiniteSemiring {
    /// Checks every axiom on raw tables and returns the validated semiring.
    ///
    /// Axioms are checked in a fixed order (shape, entry range, additive
    /// monoid, multiplicative monoid, commutativity, distributivity,
    /// absorption) and the first failure is reported with its witness.
    pub fn validate(name: impl Into<String>, add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self> {
        let n = add.len();
        if n == 1 {
            return Err(Error::AxiomViolation(Violation {
                axiom: Axiom::ZeroNeOne,
                witness: vec![0],
                lhs: 0,
                rhs: 0,
            }));
        }
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        if mul.len() != n {
            return Err(Error::TableShape(format!(
                "add has {n} rows but mul has {}",
                mul.len()
            )));
        }
        let mut flat_add = Vec::with_capacity(n * n);
        let mut flat_mul = Vec::with_capacity(n * n);
        for (label, table, flat) in [("add", add, &mut flat_add), ("mul", mul, &mut flat_mul)] {
            for (i, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::TableShape(format!(
                        "{label} row {i} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                for (j, &v) in row.iter().enumerate() {
                    if v >= n {
                        return Err(Error::EntryOutOfRange {
                            table: label,
                            row: i,
                            col: j,
                            value: v,
                            order: n,
                        });
                    }
                    flat.push(v as u8);
                }
            }
        }
        check_axioms(n, &flat_add, &flat_mul)?;
        Ok(Self::from_parts(name.into(), n, flat_add, flat_mul))
    }

    /// Builds a semiring from row-major tables already known to satisfy the
    /// axioms (enumeration output, relabelings of valid semirings).
    pub(crate) fn from_parts(name: String, order: usize, add: Vec<u8>, mul: Vec<u8>) -> Self {
        debug_assert!(check_axioms(order, &add, &mul).is_ok());
        let mut h = std::hash::DefaultHasher::new();
        order.hash(&mut h);
        add.hash(&mut h);
        mul.hash(&mut h);
        let id = CarrierId(h.finish());
        let flags = compute_flags(order, &add);
        FiniteSemiring {
            name,
            order,
            add,
            mul,
            id,
            flags,
            lattice: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn id(&self) -> CarrierId {
        self.id
    }

    pub fn flags(&self) -> StructuralFlags {
        self.flags
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.order as u8).map(Elem)
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    /// Row-major addition table.
    pub fn add_table(&self) -> &[u8] {
        &self.add
    }

    /// Row-major multiplication table.
    pub fn mul_table(&self) -> &[u8] {
        &self.mul
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        rows(self.order, &self.add)
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        rows(self.order, &self.mul)
    }

    pub fn elem(&self, i: usize) -> Result<Elem> {
        if i < self.order {
            Ok(Elem(i as u8))
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                order: self.order,
            })
        }
    }

    /// Checked table lookup for `a + b`.
    pub fn add_of(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.elem(a.index())?;
        self.elem(b.index())?;
        Ok(self.add(a, b))
    }

    /// Checked table lookup for `a * b`.
    pub fn mul_of(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.elem(a.index())?;
        self.elem(b.index())?;
        Ok(self.mul(a, b))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.add[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.mul[a.index() * self.order + b.index()])
    }

    /// `a^k`, with `a^0 = 1`.
    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let mut acc = Elem::ONE;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// Parses a comma-separated element list such as `0,2,3`.
    pub fn parse_set(&self, text: &str) -> Result<ElemSet> {
        let mut set = ElemSet::EMPTY;
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad element `{tok}`")))?;
            set.insert(self.elem(i)?);
        }
        Ok(set)
    }

    pub(crate) fn lattice_cell(&self) -> &OnceLock<Lattice> {
        &self.lattice
    }

    /// Relabels elements by `perm` (old index -> new index). `perm` must fix
    /// 0 and 1.
    pub fn relabel(&self, perm: &[u8]) -> FiniteSemiring {
        let n = self.order;
        let (add, mul) = relabel_tables(n, &self.add, &self.mul, perm);
        Self::from_parts(self.name.clone(), n, add, mul)
    }
}

pub(crate) fn relabel_tables(n: usize, add: &[u8], mul: &[u8], perm: &[u8]) -> (Vec<u8>, Vec<u8>) {
    debug_assert_eq!(perm.len(), n);
    debug_assert!(perm[0] == 0 && perm[1] == 1);
    let mut new_add = vec![0u8; n * n];
    let mut new_mul = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            let (pi, pj) = (perm[i] as usize, perm[j] as usize);
            new_add[pi * n + pj] = perm[add[i * n + j] as usize];
            new_mul[pi * n + pj] = perm[mul[i * n + j] as usize];
        }
    }
    (new_add, new_mul)
}

fn rows(n: usize, flat: &[u8]) -> Vec<Vec<usize>> {
    flat.chunks(n)
        .map(|r| r.iter().map(|&v| v as usize).collect())
        .collect()
}

impl Clone for FiniteSemiring {
    fn clone(&self) -> Self {
        FiniteSemiring {
            name: self.name.clone(),
            order: self.order,
            add: self.add.clone(),
            mul: self.mul.clone(),
            id: self.id,
            flags: self.flags,
            lattice: self.lattice.clone(),
        }
    }
}

impl PartialEq for FiniteSemiring {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.order == other.order
            && self.add == other.add
            && self.mul == other.mul
    }
}

impl Eq for FiniteSemiring {}

impl fmt::Debug for FiniteSemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSemiring")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("add", &self.add_rows())
            .field("mul", &self.mul_rows())
            .finish()
    }
}

fn check_axioms(n: usize, add: &[u8], mul: &[u8]) -> Result<()> {
    let a = |x: usize, y: usize| add[x * n + y] as usize;
    let m = |x: usize, y: usize| mul[x * n + y] as usize;
    let fail = |axiom, witness: &[usize], lhs: usize, rhs: usize| {
        Err(Error::AxiomViolation(Violation {
            axiom,
            witness: witness.iter().map(|&w| w as u8).collect(),
            lhs: lhs as u8,
            rhs: rhs as u8,
        }))
    };

    for x in 0..n {
        if a(0, x) != x || a(x, 0) != x {
            let got = if a(0, x) != x { a(0, x) } else { a(x, 0) };
            return fail(Axiom::AddIdentity, &[x], got, x);
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if a(x, y) != a(y, x) {
                return fail(Axiom::AddCommutative, &[x, y], a(x, y), a(y, x));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (l, r) = (a(a(x, y), z), a(x, a(y, z)));
                if l != r {
                    return fail(Axiom::AddAssociative, &[x, y, z], l, r);
                }
            }
        }
    }
    for x in 0..n {
        if m(1, x) != x || m(x, 1) != x {
            let got = if m(1, x) != x { m(1, x) } else { m(x, 1) };
            return fail(Axiom::MulIdentity, &[x], got, x);
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (l, r) = (m(m(x, y), z), m(x, m(y, z)));
                if l != r {
                    return fail(Axiom::MulAssociative, &[x, y, z], l, r);
                }
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if m(x, y) != m(y, x) {
                return Err(Error::NotCommutative {
                    a: Elem(x as u8),
                    b: Elem(y as u8),
                });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (l, r) = (m(x, a(y, z)), a(m(x, y), m(x, z)));
                if l != r {
                    return fail(Axiom::LeftDistributive, &[x, y, z], l, r);
                }
                let (l, r) = (m(a(y, z), x), a(m(y, x), m(z, x)));
                if l != r {
                    return fail(Axiom::RightDistributive, &[x, y, z], l, r);
                }
            }
        }
    }
    for x in 0..n {
        if m(0, x) != 0 || m(x, 0) != 0 {
            let got = if m(0, x) != 0 { m(0, x) } else { m(x, 0) };
            return fail(Axiom::ZeroAbsorbing, &[x], got, 0);
        }
    }
    Ok(())
}

fn compute_flags(n: usize, add: &[u8]) -> StructuralFlags {
    let a = |x: usize, y: usize| add[x * n + y] as usize;
    // a + x = a + y with x != y
    let additively_cancellative =
        (0..n).all(|p| (0..n).all(|x| (x + 1..n).all(|y| a(p, x) != a(p, y))));
    let yoked = (0..n).all(|p| (0..n).all(|q| (0..n).any(|r| a(p, r) == q || a(q, r) == p)));
    let zerosumfree = (0..n).all(|p| (0..n).all(|q| a(p, q) != 0 || (p == 0 && q == 0)));
    let is_ring = (0..n).all(|p| (0..n).any(|q| a(p, q) == 0));
    StructuralFlags {
        additively_cancellative,
        yoked,
        zerosumfree,
        is_ring,
    }
}
