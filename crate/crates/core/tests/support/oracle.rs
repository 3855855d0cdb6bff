//! Slow, direct oracles over raw Cayley tables. Shared by the core and CLI
//! test suites; nothing here calls into the library.
#![allow(dead_code)]

/// Row-major `n x n` tables.
pub struct Tables<'a> {
    pub n: usize,
    pub add: &'a [u8],
    pub mul: &'a [u8],
}

impl Tables<'_> {
    fn a(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y] as usize
    }
    fn m(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y] as usize
    }
}

fn all_tables(n: usize) -> impl Iterator<Item = Vec<u8>> {
    let cells = n * n;
    let total = (n as u64).pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0u8; cells];
        for c in t.iter_mut() {
            *c = (code % n as u64) as u8;
            code /= n as u64;
        }
        t
    })
}

fn commutative_monoid(n: usize, t: &[u8], e: usize) -> bool {
    let op = |x: usize, y: usize| t[x * n + y] as usize;
    (0..n).all(|x| op(e, x) == x)
        && (0..n).all(|x| (0..n).all(|y| op(x, y) == op(y, x)))
        && (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| op(op(x, y), z) == op(x, op(y, z)))))
}

/// Every commutative semiring on `{0..n}` with additive identity 0 and
/// multiplicative identity 1, by generating all tables and filtering.
/// Sorted by the flattened `(add, mul)` pair.
pub fn generate_and_filter(n: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    let adds: Vec<Vec<u8>> = all_tables(n).filter(|t| commutative_monoid(n, t, 0)).collect();
    let muls: Vec<Vec<u8>> = all_tables(n)
        .filter(|t| commutative_monoid(n, t, 1))
        .filter(|t| (0..n).all(|x| t[x] == 0))
        .collect();
    let mut out = Vec::new();
    for a in &adds {
        for m in &muls {
            let t = Tables { n, add: a, mul: m };
            let distributive = (0..n).all(|x| {
                (0..n).all(|y| (0..n).all(|z| t.m(x, t.a(y, z)) == t.a(t.m(x, y), t.m(x, z))))
            });
            if distributive {
                out.push((a.clone(), m.clone()));
            }
        }
    }
    out.sort();
    out
}

pub fn members(set: u16, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&x| set >> x & 1 == 1)
}

pub fn is_ideal(t: &Tables<'_>, set: u16) -> bool {
    let has = |x: usize| set >> x & 1 == 1;
    has(0)
        && members(set, t.n).all(|x| members(set, t.n).all(|y| has(t.a(x, y))))
        && members(set, t.n).all(|x| (0..t.n).all(|r| has(t.m(r, x))))
}

pub fn is_k_ideal(t: &Tables<'_>, set: u16) -> bool {
    let has = |x: usize| set >> x & 1 == 1;
    is_ideal(t, set)
        && (0..t.n).all(|x| (0..t.n).all(|y| !(has(t.a(x, y)) && has(x)) || has(y)))
}

/// All subsets that are ideals, by exhaustive scan.
pub fn ideals(t: &Tables<'_>) -> Vec<u16> {
    (0..1u32 << t.n).map(|s| s as u16).filter(|&s| is_ideal(t, s)).collect()
}

/// The least k-ideal containing `set`: intersection of all k-ideals above it.
pub fn k_closure(t: &Tables<'_>, set: u16) -> u16 {
    (0..1u32 << t.n)
        .map(|s| s as u16)
        .filter(|&s| s & set == set && is_k_ideal(t, s))
        .fold(u16::MAX >> (16 - t.n), |acc, s| acc & s)
}

/// Elements with some positive power in `set`, following each power orbit
/// until it cycles.
pub fn radical(t: &Tables<'_>, set: u16) -> u16 {
    let mut out = 0u16;
    for x in 0..t.n {
        let mut seen = 0u32;
        let mut p = x;
        while seen >> p & 1 == 0 {
            if set >> p & 1 == 1 {
                out |= 1 << x;
                break;
            }
            seen |= 1 << p;
            p = t.m(p, x);
        }
    }
    out
}

pub fn is_primary(t: &Tables<'_>, set: u16) -> bool {
    let full = u16::MAX >> (16 - t.n);
    let rad = radical(t, set);
    set != full
        && (0..t.n).all(|x| {
            (0..t.n).all(|y| set >> t.m(x, y) & 1 == 0 || set >> x & 1 == 1 || rad >> y & 1 == 1)
        })
}

/// Tables with the identity row and column for `e` (and a zero row and
/// column when `absorbing`), symmetric, every free upper-triangle cell
/// ranging over all values.
fn symmetric_tables(n: usize, e: usize, absorbing: bool) -> Vec<Vec<u8>> {
    let fixed = |i: usize| i == e || (absorbing && i == 0);
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !fixed(i) && !fixed(j))
        .collect();
    let total = (n as u64).pow(free.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut t = vec![0u8; n * n];
            for x in 0..n {
                if absorbing {
                    t[x] = 0;
                    t[x * n] = 0;
                }
                t[e * n + x] = x as u8;
                t[x * n + e] = x as u8;
            }
            for &(i, j) in &free {
                let v = (code % n as u64) as u8;
                code /= n as u64;
                t[i * n + j] = v;
                t[j * n + i] = v;
            }
            t
        })
        .collect()
}

/// Same result as [`generate_and_filter`], reachable at order 4: only the
/// cells not fixed by identities and symmetry are enumerated.
pub fn generate_and_filter_symmetric(n: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    let adds: Vec<Vec<u8>> = symmetric_tables(n, 0, false)
        .into_iter()
        .filter(|t| commutative_monoid(n, t, 0))
        .collect();
    let muls: Vec<Vec<u8>> = symmetric_tables(n, 1, true)
        .into_iter()
        .filter(|t| commutative_monoid(n, t, 1))
        .collect();
    let mut out = Vec::new();
    for a in &adds {
        for m in &muls {
            let t = Tables { n, add: a, mul: m };
            let distributive = (0..n).all(|x| {
                (0..n).all(|y| (0..n).all(|z| t.m(x, t.a(y, z)) == t.a(t.m(x, y), t.m(x, z))))
            });
            if distributive {
                out.push((a.clone(), m.clone()));
            }
        }
    }
    out.sort();
    out
}
