//! Exhaustive enumeration of finite commutative semirings with identity.
//!
//! Addition tables are enumerated first: commutative monoids with identity 0,
//! built by backtracking over the upper triangle and rejecting a partial
//! table as soon as a fully determined triple breaks associativity. For each
//! monoid the multiplication table is then filled the same way, with 0
//! absorbing, 1 the identity and commutativity built in, checking
//! associativity and distributivity on every determined triple.
//!
//! Isomorphism classes are computed by brute force over relabelings that fix
//! 0 and 1; any isomorphism must preserve both identities.

use crate::error::{Error, Result};
use crate::par::{self, Strategy};
use crate::semiring::{relabel_tables, FiniteSemiring, MAX_ORDER};

/// Largest order enumerated without an explicit override.
pub const EXHAUSTIVE_CAP: usize = 4;

const UNSET: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumerateOptions {
    pub up_to_iso: bool,
    /// Permit orders above [`EXHAUSTIVE_CAP`].
    pub allow_large: bool,
    pub strategy: Strategy,
}

impl EnumerateOptions {
    pub fn iso(mut self, up_to_iso: bool) -> Self {
        self.up_to_iso = up_to_iso;
        self
    }

    pub fn strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }
}

/// Every commutative semiring of order `n`, in lexicographic order of the
/// flattened `(add, mul)` table pair, named `<n>_<sequence>`.
pub fn enumerate(n: usize, opts: EnumerateOptions) -> Result<Vec<FiniteSemiring>> {
    if !(2..=MAX_ORDER).contains(&n) {
        return Err(Error::InvalidOrder(n));
    }
    if n > EXHAUSTIVE_CAP && !opts.allow_large {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    let monoids = additive_monoids(n);
    let mut tables: Vec<(Vec<u8>, Vec<u8>)> = par::flat_map(opts.strategy, &monoids, |add| {
        multiplications(n, add)
            .into_iter()
            .map(|mul| (add.clone(), mul))
            .collect()
    });
    if opts.up_to_iso {
        let perms = permutations_fixing_identities(n);
        tables = par::map(opts.strategy, &tables, |(a, m)| canonical_tables(n, a, m, &perms));
        tables.sort();
        tables.dedup();
    } else {
        tables.sort();
    }
    Ok(tables
        .into_iter()
        .enumerate()
        .map(|(k, (add, mul))| FiniteSemiring::from_parts(format!("{n}_{:04}", k + 1), n, add, mul))
        .collect())
}

/// Commutative monoids on `{0..n}` with identity 0, as row-major tables.
pub fn additive_monoids(n: usize) -> Vec<Vec<u8>> {
    let mut t = vec![UNSET; n * n];
    for x in 0..n {
        t[x] = x as u8;
        t[x * n] = x as u8;
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fill_add(n, &mut t, &cells, 0, &mut out);
    out
}

fn fill_add(n: usize, t: &mut [u8], cells: &[(usize, usize)], k: usize, out: &mut Vec<Vec<u8>>) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(t.to_vec());
        return;
    };
    for v in 0..n as u8 {
        t[i * n + j] = v;
        t[j * n + i] = v;
        if associative_so_far(n, t) {
            fill_add(n, t, cells, k + 1, out);
        }
    }
    t[i * n + j] = UNSET;
    t[j * n + i] = UNSET;
}

fn associative_so_far(n: usize, t: &[u8]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = t[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let (l, r) = (t[xy as usize * n + z], t[x * n + yz as usize]);
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// Multiplication tables compatible with `add`.
pub fn multiplications(n: usize, add: &[u8]) -> Vec<Vec<u8>> {
    let mut m = vec![UNSET; n * n];
    for x in 0..n {
        m[x] = 0;
        m[x * n] = 0;
    }
    for x in 1..n {
        m[n + x] = x as u8;
        m[x * n + 1] = x as u8;
    }
    let cells: Vec<(usize, usize)> = (2..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fill_mul(n, add, &mut m, &cells, 0, &mut out);
    out
}

fn fill_mul(n: usize, add: &[u8], m: &mut [u8], cells: &[(usize, usize)], k: usize, out: &mut Vec<Vec<u8>>) {
    let Some(&(i, j)) = cells.get(k) else {
        out.push(m.to_vec());
        return;
    };
    for v in 0..n as u8 {
        m[i * n + j] = v;
        m[j * n + i] = v;
        if associative_so_far(n, m) && distributive_so_far(n, add, m) {
            fill_mul(n, add, m, cells, k + 1, out);
        }
    }
    m[i * n + j] = UNSET;
    m[j * n + i] = UNSET;
}

/// `x(y + z) = xy + xz` on every triple where both sides are determined.
/// The other side follows from commutativity.
fn distributive_so_far(n: usize, add: &[u8], m: &[u8]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = m[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in y..n {
                let xz = m[x * n + z];
                if xz == UNSET {
                    continue;
                }
                let l = m[x * n + add[y * n + z] as usize];
                if l != UNSET && l != add[xy as usize * n + xz as usize] {
                    return false;
                }
            }
        }
    }
    true
}

/// Permutations of `0..n` fixing 0 and 1, in lexicographic order.
pub fn permutations_fixing_identities(n: usize) -> Vec<Vec<u8>> {
    fn go(prefix: &mut Vec<u8>, rest: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..rest.len() {
            let v = rest.remove(k);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(k, v);
        }
    }
    let mut out = Vec::new();
    let mut prefix: Vec<u8> = (0..n.min(2) as u8).collect();
    let mut rest: Vec<u8> = (2..n as u8).collect();
    go(&mut prefix, &mut rest, &mut out);
    out
}

fn canonical_tables(n: usize, add: &[u8], mul: &[u8], perms: &[Vec<u8>]) -> (Vec<u8>, Vec<u8>) {
    perms
        .iter()
        .map(|p| relabel_tables(n, add, mul, p))
        .min()
        .expect("identity permutation is always present")
}

/// Isomorphism class of a semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    /// Lexicographically least `(add, mul)` over relabelings fixing 0 and 1.
    pub canonical_form: (Vec<u8>, Vec<u8>),
    /// The relabeling of the input that realizes the canonical form.
    pub representative: FiniteSemiring,
}

pub fn canonicalize(s: &FiniteSemiring) -> IsoClass {
    let n = s.order();
    let perms = permutations_fixing_identities(n);
    let canonical_form = canonical_tables(n, s.add_table(), s.mul_table(), &perms);
    let representative = FiniteSemiring::from_parts(
        s.name().to_string(),
        n,
        canonical_form.0.clone(),
        canonical_form.1.clone(),
    );
    IsoClass {
        canonical_form,
        representative,
    }
}
