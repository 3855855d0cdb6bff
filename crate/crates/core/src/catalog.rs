//! Small named semirings used in examples, tests and the data directory.

use crate::semiring::FiniteSemiring;

fn build(name: &str, n: usize, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> FiniteSemiring {
    let add: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| add(i, j)).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| mul(i, j)).collect()).collect();
    FiniteSemiring::validate(name, &add, &mul).expect("catalog semiring must satisfy the axioms")
}

/// The Boolean semiring `({0,1}, or, and)`.
pub fn boolean() -> FiniteSemiring {
    build("B", 2, |a, b| a | b, |a, b| a & b)
}

/// Integers modulo `n` viewed as a semiring.
pub fn z_mod(n: usize) -> FiniteSemiring {
    build(&format!("Z{n}"), n, |a, b| (a + b) % n, |a, b| (a * b) % n)
}

/// Totally ordered chain of `n` elements with `max` as addition and `min`
/// as multiplication.
///
/// Index 1 is the multiplicative identity and therefore the top; the order is
/// `0 < 2 < 3 < .. < n-1 < 1`.
pub fn chain(n: usize) -> FiniteSemiring {
    let rank = move |i: usize| match i {
        0 => 0,
        1 => n - 1,
        i => i - 1,
    };
    let max = move |a, b| if rank(a) >= rank(b) { a } else { b };
    let min = move |a, b| if rank(a) <= rank(b) { a } else { b };
    build(&format!("C{n}"), n, max, min)
}

pub fn chain3() -> FiniteSemiring {
    chain(3)
}

/// Direct product. Pair `(0,0)` gets index 0, `(1,1)` index 1, remaining
/// pairs follow in lexicographic order.
pub fn product(a: &FiniteSemiring, b: &FiniteSemiring) -> FiniteSemiring {
    let pairs = product_pairs(a.order(), b.order());
    let n = pairs.len();
    let index_of = |p: (usize, usize)| pairs.iter().position(|&q| q == p).unwrap();
    let (at, bt) = (a.add_table(), b.add_table());
    let (am, bm) = (a.mul_table(), b.mul_table());
    let (na, nb) = (a.order(), b.order());
    build(
        &format!("{}x{}", a.name(), b.name()),
        n,
        |i, j| {
            let ((x1, y1), (x2, y2)) = (pairs[i], pairs[j]);
            index_of((at[x1 * na + x2] as usize, bt[y1 * nb + y2] as usize))
        },
        |i, j| {
            let ((x1, y1), (x2, y2)) = (pairs[i], pairs[j]);
            index_of((am[x1 * na + x2] as usize, bm[y1 * nb + y2] as usize))
        },
    )
}

/// Index layout used by [`product`].
pub fn product_pairs(na: usize, nb: usize) -> Vec<(usize, usize)> {
    let mut pairs = vec![(0, 0), (1, 1)];
    for x in 0..na {
        for y in 0..nb {
            if (x, y) != (0, 0) && (x, y) != (1, 1) {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

/// `B x B`: index 2 is `(0,1)`, index 3 is `(1,0)`.
pub fn bxb() -> FiniteSemiring {
    product(&boolean(), &boolean())
}
