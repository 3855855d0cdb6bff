//! Exact arithmetic in `N` and `N[x]`, and self-validating certificates for
//! the standard examples of ideals that are or are not subtractive there.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A polynomial with nonnegative integer coefficients, lowest degree first,
/// without trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct NatPoly(Vec<u64>);

impl NatPoly {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        NatPoly(coeffs)
    }

    pub fn zero() -> Self {
        NatPoly(Vec::new())
    }

    pub fn constant(c: u64) -> Self {
        NatPoly::new(vec![c])
    }

    /// `c x^k`
    pub fn monomial(c: u64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        NatPoly::new(v)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Coefficientwise `self >= other`.
    pub fn dominates(&self, other: &NatPoly) -> bool {
        (0..other.0.len()).all(|k| self.coeff(k) >= other.coeff(k))
    }

    pub fn checked_add(&self, other: &NatPoly) -> Result<NatPoly> {
        let n = self.0.len().max(other.0.len());
        (0..n)
            .map(|k| self.coeff(k).checked_add(other.coeff(k)).ok_or(Error::Overflow("poly_add")))
            .collect::<Result<Vec<_>>>()
            .map(NatPoly::new)
    }

    pub fn checked_mul(&self, other: &NatPoly) -> Result<NatPoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(NatPoly::zero());
        }
        let mut out = vec![0u64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] = a
                    .checked_mul(b)
                    .and_then(|p| out[i + j].checked_add(p))
                    .ok_or(Error::Overflow("poly_mul"))?;
            }
        }
        Ok(NatPoly::new(out))
    }

    /// Coefficientwise `self - other`, when `self` dominates `other`.
    pub fn checked_sub(&self, other: &NatPoly) -> Option<NatPoly> {
        let n = self.0.len().max(other.0.len());
        (0..n)
            .map(|k| self.coeff(k).checked_sub(other.coeff(k)))
            .collect::<Option<Vec<_>>>()
            .map(NatPoly::new)
    }

    pub fn pow(&self, k: u32) -> Result<NatPoly> {
        (0..k).try_fold(NatPoly::constant(1), |acc, _| acc.checked_mul(self))
    }
}

impl From<Vec<u64>> for NatPoly {
    fn from(v: Vec<u64>) -> Self {
        NatPoly::new(v)
    }
}

fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (usize, i128)>,
{
    let mut first = true;
    for (k, c) in terms.into_iter().filter(|&(_, c)| c != 0) {
        let mag = c.unsigned_abs();
        match (first, c < 0) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        match (k, mag) {
            (0, m) => write!(f, "{m}")?,
            (1, 1) => f.write_str("x")?,
            (1, m) => write!(f, "{m}x")?,
            (k, 1) => write!(f, "x^{k}")?,
            (k, m) => write!(f, "{m}x^{k}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Ascending powers: `2 + 9x + 5x^2`; the zero polynomial prints as `0`.
impl fmt::Display for NatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.0.iter().enumerate().map(|(k, &c)| (k, c as i128)))
    }
}

/// An integer polynomial, for showing quotients that leave `N[x]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IntPoly(pub Vec<i128>);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.0.iter().copied().enumerate())
    }
}

/// # Panics
/// On coefficient overflow; use [`NatPoly::checked_add`] to handle it.
pub fn poly_add(f: &NatPoly, g: &NatPoly) -> NatPoly {
    f.checked_add(g).expect("coefficient overflow")
}

/// # Panics
/// On coefficient overflow; use [`NatPoly::checked_mul`] to handle it.
pub fn poly_mul(f: &NatPoly, g: &NatPoly) -> NatPoly {
    f.checked_mul(g).expect("coefficient overflow")
}

/// Exact quotient `f / g` over the integers, if the division leaves no
/// remainder. Coefficients may be negative.
pub fn integer_quotient(f: &NatPoly, g: &NatPoly) -> Result<Option<IntPoly>> {
    let Some(dg) = g.degree() else {
        return Err(Error::ZeroDivisor);
    };
    let Some(df) = f.degree() else {
        return Ok(Some(IntPoly(Vec::new())));
    };
    if df < dg {
        return Ok(None);
    }
    let lead = g.coeff(dg) as i128;
    let mut rem: Vec<i128> = f.coeffs().iter().map(|&c| c as i128).collect();
    let mut q = vec![0i128; df - dg + 1];
    for k in (0..=df - dg).rev() {
        let top = rem[k + dg];
        if top % lead != 0 {
            return Ok(None);
        }
        q[k] = top / lead;
        for (j, &gc) in g.coeffs().iter().enumerate() {
            let t = q[k].checked_mul(gc as i128).ok_or(Error::Overflow("division"))?;
            rem[k + j] = rem[k + j].checked_sub(t).ok_or(Error::Overflow("division"))?;
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return Ok(None);
    }
    Ok(Some(IntPoly(q)))
}

/// The cofactor `h` in `N[x]` with `f = g h`, if `f` lies in the principal
/// ideal generated by `g`.
///
/// Division in `Z[x]` is unique when exact, so `f` is in `<g>` exactly when
/// the integer quotient exists and has no negative coefficient.
pub fn principal_membership(f: &NatPoly, g: &NatPoly) -> Result<Option<NatPoly>> {
    let Some(q) = integer_quotient(f, g)? else {
        return Ok(None);
    };
    if q.0.iter().any(|&c| c < 0) {
        return Ok(None);
    }
    let h = NatPoly::new(q.0.iter().map(|&c| c as u64).collect());
    debug_assert_eq!(g.checked_mul(&h).ok().as_ref(), Some(f));
    Ok(Some(h))
}

/// `h` with `f + h = g` or `g + h = f`, which exists exactly when one
/// polynomial dominates the other coefficientwise.
pub fn yoked_pair_check(f: &NatPoly, g: &NatPoly) -> Option<NatPoly> {
    g.checked_sub(f).or_else(|| f.checked_sub(g))
}

/// One re-checked claim of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub holds: bool,
    pub detail: String,
}

fn first_failure(claims: &[Claim]) -> Result<()> {
    match claims.iter().find(|c| !c.holds) {
        None => Ok(()),
        Some(c) => Err(Error::StepFailed {
            step: c.id.to_string(),
            witness: c.detail.clone(),
        }),
    }
}

/// `u = w + v` with `u, v` in `<g>` but `w` not, so `<g>` is not a k-ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GolanCertificate {
    pub g: NatPoly,
    pub u: NatPoly,
    pub v: NatPoly,
    pub w: NatPoly,
}

/// The certificate for `<1 + x>`: `(1+x)^3 = (x^3+1) + 3x(1+x)`.
pub fn golan_witness() -> GolanCertificate {
    let g = NatPoly::new(vec![1, 1]);
    GolanCertificate {
        u: poly_mul(&poly_mul(&g, &g), &g),
        v: poly_mul(&NatPoly::monomial(3, 1), &g),
        w: NatPoly::new(vec![1, 0, 0, 1]),
        g,
    }
}

impl GolanCertificate {
    /// Recomputes every claim from the four polynomials.
    pub fn claims(&self) -> Result<Vec<Claim>> {
        let member = |p: &NatPoly, name: &str, id: &'static str| -> Result<Claim> {
            Ok(match principal_membership(p, &self.g)? {
                Some(h) => Claim {
                    id,
                    holds: true,
                    detail: format!("{name} = ({})({h})", self.g),
                },
                None => Claim {
                    id,
                    holds: false,
                    detail: format!("{name} = {p} has no cofactor in N[x]"),
                },
            })
        };
        let sum = self.w.checked_add(&self.v)?;
        let w_quotient = integer_quotient(&self.w, &self.g)?;
        let w_member = principal_membership(&self.w, &self.g)?;
        Ok(vec![
            member(&self.u, "u", "u-in-ideal")?,
            member(&self.v, "v", "v-in-ideal")?,
            Claim {
                id: "sum",
                holds: sum == self.u,
                detail: format!("w + v = {sum}, u = {}", self.u),
            },
            Claim {
                id: "w-not-in-ideal",
                holds: w_member.is_none(),
                detail: match (&w_member, &w_quotient) {
                    (Some(h), _) => format!("w = ({})({h})", self.g),
                    (None, Some(q)) => format!("integer quotient {q} has a negative coefficient"),
                    (None, None) => "division in Z[x] is inexact".to_string(),
                },
            },
        ])
    }

    pub fn validate(&self) -> Result<()> {
        first_failure(&self.claims()?)
    }

    pub fn render(&self) -> Result<String> {
        let mut out = format!(
            "certificate golan\nideal <{}>\nu = {}\nv = {}\nw = {}\n",
            self.g, self.u, self.v, self.w
        );
        let claims = self.claims()?;
        for c in &claims {
            out += &format!("claim {} {}: {}\n", c.id, verdict(c.holds), c.detail);
        }
        let ok = claims.iter().all(|c| c.holds);
        out += &format!(
            "result {}\n",
            if ok { "ideal is not a k-ideal" } else { "certificate invalid" }
        );
        Ok(out)
    }
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "holds"
    } else {
        "FAILS"
    }
}

/// The yoked check with the first coefficient blocking each direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YokedReport {
    pub f: NatPoly,
    pub g: NatPoly,
    pub h: Option<NatPoly>,
    /// Least degree where `f` falls below `g`.
    pub f_below_g: Option<usize>,
    /// Least degree where `g` falls below `f`.
    pub g_below_f: Option<usize>,
}

pub fn yoked_report(f: &NatPoly, g: &NatPoly) -> YokedReport {
    let n = f.coeffs().len().max(g.coeffs().len());
    YokedReport {
        h: yoked_pair_check(f, g),
        f_below_g: (0..n).find(|&k| f.coeff(k) < g.coeff(k)),
        g_below_f: (0..n).find(|&k| g.coeff(k) < f.coeff(k)),
        f: f.clone(),
        g: g.clone(),
    }
}

/// `f = 2 + 9x + 5x^2`, `g = 5 + 3x + 11x^2`.
pub fn non_yoked_pair() -> (NatPoly, NatPoly) {
    (NatPoly::new(vec![2, 9, 5]), NatPoly::new(vec![5, 3, 11]))
}

impl YokedReport {
    pub fn render(&self) -> String {
        let side = |below: Option<usize>, a: &str, b: &str, pa: &NatPoly, pb: &NatPoly| match below {
            None => format!("{b} dominates {a}: true\n"),
            Some(k) => format!(
                "{b} dominates {a}: false (degree {k}: {} < {})\n",
                pb.coeff(k),
                pa.coeff(k)
            ),
        };
        let mut out = format!("certificate yoked\nf = {}\ng = {}\n", self.f, self.g);
        out += &side(self.f_below_g, "g", "f", &self.g, &self.f);
        out += &side(self.g_below_f, "f", "g", &self.f, &self.g);
        match &self.h {
            Some(h) => out += &format!("h = {h}\nresult yoked\n"),
            None => out += "h = none\nresult not yoked\n",
        }
        out
    }
}

/// Bounded check that `aN` is subtractive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NatKReport {
    pub a: u64,
    pub bound: u64,
    pub pairs_checked: u64,
    /// `(x, y)` with `a | x`, `a | x + y`, `a ∤ y`.
    pub counterexample: Option<(u64, u64)>,
}

impl NatKReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn render(&self) -> String {
        let result = match self.counterexample {
            None => "pass".to_string(),
            Some((x, y)) => format!("FAIL x={x} y={y}"),
        };
        format!(
            "principal-k-check a={} bound={} pairs={} result {result}\n",
            self.a, self.bound, self.pairs_checked
        )
    }
}

pub fn nat_principal_k_check(a: u64, bound: u64) -> Result<NatKReport> {
    if a < 1 {
        return Err(Error::InvalidArgument("a must be at least 1".into()));
    }
    if bound < a {
        return Err(Error::InvalidArgument(format!("bound {bound} is below a = {a}")));
    }
    let mut counterexample = None;
    'outer: for x in (0..=bound).filter(|x| x % a == 0) {
        for y in 0..=bound {
            if (x + y) % a == 0 && y % a != 0 {
                counterexample = Some((x, y));
                break 'outer;
            }
        }
    }
    let side = bound + 1;
    Ok(NatKReport {
        a,
        bound,
        pairs_checked: side * side,
        counterexample,
    })
}

/// Membership in `aN + bN`, by direct search.
pub fn in_numerical_semigroup(a: u64, b: u64, n: u64) -> bool {
    (0..=n / a).any(|k| (n - k * a).is_multiple_of(b))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `x` and `x + y` in `aN + bN` while `y` is not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumCertificate {
    pub a: u64,
    pub b: u64,
    /// Every integer from here on is a member.
    pub conductor: u64,
    pub gaps: Vec<u64>,
    pub x: u64,
    pub y: u64,
}

pub fn nat_sum_not_k_witness(a: u64, b: u64) -> Result<SumCertificate> {
    if a < 2 || b < 2 {
        return Err(Error::InvalidArgument(format!("a = {a} and b = {b} must both be at least 2")));
    }
    let d = gcd(a, b);
    if d != 1 {
        return Err(Error::NotCoprime { a, b, gcd: d });
    }
    let conductor = (a - 1).checked_mul(b - 1).ok_or(Error::Overflow("conductor"))?;
    let gaps: Vec<u64> = (0..conductor).filter(|&n| !in_numerical_semigroup(a, b, n)).collect();
    let y = gaps[0];
    let x = (1..)
        .find(|&x| in_numerical_semigroup(a, b, x) && in_numerical_semigroup(a, b, x + y))
        .expect("every large integer is a member");
    Ok(SumCertificate {
        a,
        b,
        conductor,
        gaps,
        x,
        y,
    })
}

impl SumCertificate {
    pub fn claims(&self) -> Vec<Claim> {
        let (a, b) = (self.a, self.b);
        let member = |n| in_numerical_semigroup(a, b, n);
        let span = |n: u64| -> String {
            match (0..=n / a).find(|k| (n - k * a).is_multiple_of(b)) {
                Some(k) => format!("{n} = {a}*{k} + {b}*{}", (n - k * a) / b),
                None => format!("{n} is not of the form {a}i + {b}j"),
            }
        };
        let tail_ok = (self.conductor..self.conductor + a).all(member);
        let gaps: Vec<u64> = (0..self.conductor).filter(|&n| !member(n)).collect();
        let k_bound = a.max(b).max(self.x + self.y);
        let a_k = nat_principal_k_check(a, k_bound).map(|r| r.passed()).unwrap_or(false);
        let b_k = nat_principal_k_check(b, k_bound).map(|r| r.passed()).unwrap_or(false);
        vec![
            Claim {
                id: "summands-are-k",
                holds: a_k && b_k,
                detail: format!("{a}N and {b}N subtractive on [0, {k_bound}]"),
            },
            Claim {
                id: "conductor",
                holds: tail_ok && gaps == self.gaps,
                detail: format!(
                    "{} .. {} all members, gaps below {} are {:?}",
                    self.conductor,
                    self.conductor + a - 1,
                    self.conductor,
                    gaps
                ),
            },
            Claim {
                id: "x-in-sum",
                holds: member(self.x),
                detail: span(self.x),
            },
            Claim {
                id: "y-not-in-sum",
                holds: !member(self.y),
                detail: span(self.y),
            },
            Claim {
                id: "x-plus-y-in-sum",
                holds: member(self.x + self.y),
                detail: span(self.x + self.y),
            },
        ]
    }

    pub fn validate(&self) -> Result<()> {
        first_failure(&self.claims())
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "certificate sums\nideal {a}N + {b}N\nwitness x={} y={} x+y={}\n",
            self.x,
            self.y,
            self.x + self.y,
            a = self.a,
            b = self.b
        );
        let claims = self.claims();
        for c in &claims {
            out += &format!("claim {} {}: {}\n", c.id, verdict(c.holds), c.detail);
        }
        let ok = claims.iter().all(|c| c.holds);
        out += &format!(
            "result {}\n",
            if ok { "sum is not a k-ideal" } else { "certificate invalid" }
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u64]) -> NatPoly {
        NatPoly::new(c.to_vec())
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, 9, 5]).to_string(), "2 + 9x + 5x^2");
        assert_eq!(p(&[0, 1, 0, 1]).to_string(), "x + x^3");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(NatPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 0, 0]), NatPoly::zero());
        assert_eq!(IntPoly(vec![1, -1, 1]).to_string(), "1 - x + x^2");
        assert_eq!(IntPoly(vec![0, -3]).to_string(), "-3x");
    }

    #[test]
    fn arithmetic() {
        let g = p(&[1, 1]);
        assert_eq!(poly_mul(&g, &g), p(&[1, 2, 1]));
        assert_eq!(g.pow(3).unwrap(), p(&[1, 3, 3, 1]));
        assert_eq!(poly_add(&p(&[1, 0, 0, 1]), &p(&[0, 3, 3])), p(&[1, 3, 3, 1]));
        assert_eq!(poly_add(&g, &NatPoly::zero()), g);
        assert_eq!(
            p(&[u64::MAX]).checked_add(&p(&[1])),
            Err(Error::Overflow("poly_add"))
        );
    }

    #[test]
    fn membership() {
        let g = p(&[1, 1]);
        assert_eq!(principal_membership(&p(&[1, 0, 0, 1]), &g).unwrap(), None);
        assert_eq!(
            integer_quotient(&p(&[1, 0, 0, 1]), &g).unwrap(),
            Some(IntPoly(vec![1, -1, 1]))
        );
        assert_eq!(principal_membership(&p(&[0, 3, 3]), &g).unwrap(), Some(p(&[0, 3])));
        assert_eq!(principal_membership(&p(&[1, 3, 3, 1]), &g).unwrap(), Some(p(&[1, 2, 1])));
        assert_eq!(principal_membership(&g, &NatPoly::zero()), Err(Error::ZeroDivisor));
        assert_eq!(principal_membership(&p(&[1]), &p(&[2])).unwrap(), None);
        assert_eq!(principal_membership(&p(&[0, 2]), &p(&[0, 1])).unwrap(), Some(p(&[2])));
        assert_eq!(principal_membership(&NatPoly::zero(), &g).unwrap(), Some(NatPoly::zero()));
    }

    #[test]
    fn golan() {
        let c = golan_witness();
        assert_eq!(c.u, p(&[1, 3, 3, 1]));
        assert_eq!(c.v, p(&[0, 3, 3]));
        c.validate().unwrap();

        let mut bad = c.clone();
        bad.w = p(&[0, 1, 0, 1]);
        assert!(matches!(bad.validate(), Err(Error::StepFailed { step, .. }) if step == "sum"));
        let mut bad = c.clone();
        bad.v = NatPoly::zero();
        let claims = bad.claims().unwrap();
        assert!(!claims.iter().find(|c| c.id == "sum").unwrap().holds);
        let mut bad = c;
        bad.w = p(&[1, 1]);
        assert!(bad.validate().is_err());
    }

    #[test]
    fn yoked() {
        let (f, g) = non_yoked_pair();
        assert_eq!(yoked_pair_check(&f, &g), None);
        let r = yoked_report(&f, &g);
        assert_eq!((r.f_below_g, r.g_below_f), (Some(0), Some(1)));
        assert_eq!(yoked_pair_check(&p(&[1, 1]), &p(&[2, 3, 1])), Some(p(&[1, 2, 1])));
        assert_eq!(yoked_pair_check(&f, &f), Some(NatPoly::zero()));
    }

    #[test]
    fn principal_k() {
        assert!(nat_principal_k_check(3, 1000).unwrap().passed());
        assert!(nat_principal_k_check(1, 10).unwrap().passed());
        let r = nat_principal_k_check(7, 7).unwrap();
        assert!(r.passed());
        assert_eq!(r.pairs_checked, 64);
        assert!(nat_principal_k_check(0, 10).is_err());
        assert!(nat_principal_k_check(5, 4).is_err());
    }

    #[test]
    fn sums() {
        let c = nat_sum_not_k_witness(2, 3).unwrap();
        assert_eq!((c.x, c.y, c.x + c.y), (2, 1, 3));
        assert_eq!(c.gaps, vec![1]);
        c.validate().unwrap();

        let c = nat_sum_not_k_witness(2, 5).unwrap();
        assert_eq!(c.gaps, vec![1, 3]);
        assert_eq!((c.x, c.y), (4, 1));
        c.validate().unwrap();

        let c = nat_sum_not_k_witness(3, 5).unwrap();
        assert_eq!(c.gaps, vec![1, 2, 4, 7]);
        assert!(c.gaps.contains(&c.y));
        c.validate().unwrap();

        assert_eq!(nat_sum_not_k_witness(4, 6), Err(Error::NotCoprime { a: 4, b: 6, gcd: 2 }));
        assert!(nat_sum_not_k_witness(1, 3).is_err());

        let mut bad = nat_sum_not_k_witness(2, 3).unwrap();
        bad.y = 2;
        assert!(bad.validate().is_err());
    }
}
