//! Exact univariate polynomials in the failure probability `q`.
//!
//! Coefficients are arbitrary-precision integers in ascending powers and are
//! kept canonical: no trailing zeros, with the zero polynomial stored as an
//! empty list. Rationals only appear at evaluation time.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Largest number of grid cells used by [`sign_crossings`] to bracket sign
/// changes before bisection takes over.
pub const CROSSING_GRID_CAP: usize = 4096;

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Poly::from_coeffs(coeffs)
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Poly::monomial(1, 1)
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Poly::monomial(1, k)
    }

    /// `(1 - q)^k`, expanded with binomial coefficients.
    pub fn one_minus_q_pow(k: usize) -> Self {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = BigInt::one();
        for j in 0..=k {
            coeffs.push(if j % 2 == 0 { c.clone() } else { -c.clone() });
            c = c * BigInt::from(k - j) / BigInt::from(j + 1);
        }
        Poly::from_coeffs(coeffs)
    }

    /// `1 - q^k`.
    pub fn one_minus_q_to(k: usize) -> Self {
        Poly::one() - Poly::q_pow(k)
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `sum c * q^a * (1 - q)^b` over the given `(c, a, b)` terms.
    pub fn from_bernstein<C>(terms: &[(C, usize, usize)]) -> Self
    where
        C: Clone + Into<BigInt>,
    {
        terms
            .iter()
            .map(|(c, a, b)| Poly::bernstein(c.clone(), *a, *b))
            .fold(Poly::zero(), |acc, t| acc + t)
    }

    /// Single term `c * q^a * (1 - q)^b`.
    pub fn bernstein(c: impl Into<BigInt>, a: usize, b: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::one_minus_q_pow(b).scale(&c).shift(a)
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn lowest_term(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divides by `q^k`, provided the lowest `k` coefficients are zero.
    pub fn unshift(&self, k: usize) -> Option<Poly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        })
    }

    pub fn pow(&self, mut k: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, q: i64) -> BigInt {
        let q = BigInt::from(q);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &q + c)
    }

    /// Approximate value for plotting and diagnostics.
    pub fn eval_f64(&self, q: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * q + c.to_f64().unwrap_or(f64::NAN))
    }

    fn sign_at(&self, q: &BigRational) -> Ordering {
        sign_of(&self.eval(q))
    }
}

fn sign_of(x: &BigRational) -> Ordering {
    if x.is_zero() {
        Ordering::Equal
    } else if x.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn flip(o: Ordering) -> Ordering {
    o.reverse()
}

/// Signs immediately to the left and right of `x`. At a root of multiplicity
/// `k` the cofactor's sign is used, flipped on the left when `k` is odd.
fn side_signs(p: &Poly, x: &BigRational) -> (Ordering, Ordering) {
    let s = p.sign_at(x);
    if s != Ordering::Equal {
        return (s, s);
    }
    // Deflate by (q - x) over the rationals until x is no longer a root.
    let mut coeffs: Vec<BigRational> = p
        .coeffs
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let mut mult = 0usize;
    loop {
        let mut quotient = vec![BigRational::zero(); coeffs.len().saturating_sub(1)];
        let mut carry = BigRational::zero();
        for i in (1..coeffs.len()).rev() {
            carry = &coeffs[i] + carry * x;
            quotient[i - 1] = carry.clone();
        }
        coeffs = quotient;
        mult += 1;
        let val = coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c);
        let s = sign_of(&val);
        if s != Ordering::Equal {
            let left = if mult % 2 == 1 { flip(s) } else { s };
            return (left, s);
        }
    }
}

/// Points in the open interval `(lo, hi)` where `p - r` changes sign.
///
/// Sign changes are bracketed on a uniform grid of `ceil((hi - lo) / tol)`
/// cells, capped at [`CROSSING_GRID_CAP`], then refined by exact bisection
/// until the bracket is at most `tol` wide; the bracket midpoint is reported
/// unless the simplest rational in the bracket is an exact root. Roots met
/// exactly (on the grid or during bisection) are reported exactly.
/// Roots of even multiplicity are not sign changes and are not reported, and
/// a cell containing an even number of sign changes is invisible to the grid.
pub fn sign_crossings(
    p: &Poly,
    r: &Poly,
    lo: &BigRational,
    hi: &BigRational,
    tol: &BigRational,
) -> Vec<BigRational> {
    let d = p - r;
    if d.is_zero() || lo >= hi || !tol.is_positive() {
        return Vec::new();
    }
    let width = hi - lo;
    let wanted = (&width / tol).ceil().to_integer();
    let cells = wanted
        .to_usize()
        .unwrap_or(CROSSING_GRID_CAP)
        .clamp(1, CROSSING_GRID_CAP);
    let step = &width / BigRational::from_integer(BigInt::from(cells));
    let grid: Vec<BigRational> = (0..=cells)
        .map(|i| lo + &step * BigRational::from_integer(BigInt::from(i)))
        .collect();
    let signs: Vec<(Ordering, Ordering)> = grid.iter().map(|x| side_signs(&d, x)).collect();

    let mut out = Vec::new();
    for i in 0..=cells {
        if i > 0 && i < cells && signs[i].0 != signs[i].1 {
            out.push(grid[i].clone());
        }
        if i < cells && signs[i].1 != signs[i + 1].0 {
            out.push(bisect(
                &d,
                grid[i].clone(),
                grid[i + 1].clone(),
                signs[i].1,
                tol,
            ));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The rational with the smallest denominator in `[a, b]`, for `0 <= a <= b`.
fn simplest_between(a: &BigRational, b: &BigRational) -> BigRational {
    let fa = a.floor();
    if &fa == a {
        return fa;
    }
    let next = &fa + BigRational::one();
    if &next <= b {
        return next;
    }
    let inner = simplest_between(&(b - &fa).recip(), &(a - &fa).recip());
    fa + inner.recip()
}

fn bisect(
    d: &Poly,
    mut a: BigRational,
    mut b: BigRational,
    sign_a: Ordering,
    tol: &BigRational,
) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        let m = (&a + &b) / &two;
        if &b - &a <= *tol {
            let c = simplest_between(&a, &b);
            return if d.eval(&c).is_zero() { c } else { m };
        }
        let (left, right) = side_signs(d, &m);
        if left != right {
            return m;
        }
        if left == sign_a {
            a = m;
        } else {
            b = m;
        }
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

impl core::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

impl fmt::Display for Poly {
    /// Ascending form such as `2 + 7q - 5q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one() && k > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

/// `n` choose `k` as a big integer.
pub fn binomial_big(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc = acc.div_floor(&BigInt::from(i + 1));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_form() {
        assert!(Poly::from_i64s(&[0, 0]).is_zero());
        assert_eq!(Poly::from_i64s(&[1, 2, 0]).degree(), Some(1));
        let p = Poly::from_i64s(&[3, -1, 4]);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn bernstein_examples() {
        assert_eq!(
            Poly::from_bernstein(&[(1, 0, 1)]),
            Poly::from_i64s(&[1, -1])
        );
        assert_eq!(
            Poly::from_bernstein(&[(4, 1, 1), (2, 0, 2)]),
            Poly::from_i64s(&[2, 0, -2])
        );
        assert_eq!(Poly::one_minus_q_pow(3), Poly::from_i64s(&[1, -3, 3, -1]));
        assert!(Poly::bernstein(0, 3, 2).is_zero());
    }

    #[test]
    fn evaluation() {
        let e44 = Poly::from_bernstein(&[(10, 1, 1), (5, 0, 2)]);
        assert_eq!(e44.eval(&rat(0, 1)), rat(5, 1));
        assert_eq!(e44.eval(&rat(1, 1)), rat(0, 1));
        assert_eq!(Poly::from_i64s(&[1, -1]).eval(&rat(1, 1)), rat(0, 1));
        assert_eq!(e44.eval_int(2), BigInt::from(-15));
    }

    #[test]
    fn arithmetic() {
        let e44 = Poly::from_bernstein(&[(10, 1, 1), (5, 0, 2)]);
        let e25 = Poly::from_bernstein(&[(7, 1, 1), (7, 0, 2)]);
        assert_eq!(&e44 - &e25, Poly::from_i64s(&[-2, 7, -5]));
        assert_eq!(
            Poly::from_i64s(&[1, -1]).scale(&BigInt::from(6)),
            Poly::from_i64s(&[6, -6])
        );
        assert_eq!(Poly::from_i64s(&[1, -1]).pow(4), Poly::one_minus_q_pow(4));
        assert_eq!(
            Poly::from_i64s(&[0, 0, 3, 1]).unshift(2),
            Some(Poly::from_i64s(&[3, 1]))
        );
        assert_eq!(Poly::from_i64s(&[0, 1]).unshift(2), None);
    }

    #[test]
    fn crossings_exact_and_bisected() {
        let e44 = Poly::from_bernstein(&[(10, 1, 1), (5, 0, 2)]);
        let e25 = Poly::from_bernstein(&[(7, 1, 1), (7, 0, 2)]);
        let tol = rat(1, 1_000_000_000);
        let xs = sign_crossings(&e44, &e25, &rat(0, 1), &rat(1, 1), &tol);
        assert_eq!(xs, vec![rat(2, 5)]);

        // root at 1/3 is not a grid point of 4096 cells, so it is bisected
        let p = Poly::from_i64s(&[-1, 3]);
        let xs = sign_crossings(&p, &Poly::zero(), &rat(0, 1), &rat(1, 1), &tol);
        assert_eq!(xs.len(), 1);
        let err = &xs[0] - rat(1, 3);
        assert!(err.abs() <= tol);

        assert!(sign_crossings(&p, &p, &rat(0, 1), &rat(1, 1), &tol).is_empty());
    }

    #[test]
    fn tangential_roots_are_skipped() {
        // (3q - 1)^2 touches zero without changing sign; (2q - 1)^3 crosses
        let sq = Poly::from_i64s(&[-1, 3]).pow(2);
        let cube = Poly::from_i64s(&[-1, 2]).pow(3);
        let tol = rat(1, 1000);
        assert!(sign_crossings(&sq, &Poly::zero(), &rat(0, 1), &rat(1, 1), &tol).is_empty());
        assert_eq!(
            sign_crossings(&cube, &Poly::zero(), &rat(0, 1), &rat(1, 1), &tol),
            vec![rat(1, 2)]
        );
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64s(&[2, 7, -5]).to_string(), "2 + 7q - 5q^2");
        assert_eq!(Poly::from_i64s(&[0, -1, 0, 1]).to_string(), "-q + q^3");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn big_binomials() {
        assert_eq!(binomial_big(5, 2), BigInt::from(10));
        assert_eq!(binomial_big(3, 5), BigInt::zero());
    }
}
