//! Exact integer polynomials and truncated power series.

use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

/// Dense polynomial with `i64` coefficients; `coeffs[k]` is the coefficient
/// of `t^k`. Trailing zeros are always trimmed, so the zero polynomial has
/// no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (usize, i64)>>(terms: I) -> Self {
        let mut coeffs = Vec::new();
        for (k, c) in terms {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, 0);
            }
            coeffs[k] += c;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `t^d * p(1/t)` for `d >= deg p`.
    pub fn reciprocal(&self, d: usize) -> Self {
        assert!(self.degree().is_none_or(|deg| deg <= d));
        Self::from_terms(self.terms().map(|(k, c)| (d - k, c)))
    }

    /// Compact `exp:coeff` rendering, e.g. `1:1 11:1 19:1 29:1`.
    pub fn sparse_string(&self) -> String {
        self.terms()
            .map(|(k, c)| format!("{k}:{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if idx == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, m) => write!(f, "{m}t^{k}")?,
            }
        }
        Ok(())
    }
}

pub fn poly_add(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    let len = p.coeffs.len().max(q.coeffs.len());
    IntPolynomial::new((0..len).map(|k| p.coeff(k) + q.coeff(k)).collect())
}

pub fn poly_mul(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() || q.is_zero() {
        return IntPolynomial::zero();
    }
    let mut out = vec![0i64; p.coeffs.len() + q.coeffs.len() - 1];
    for (i, &x) in p.coeffs.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in q.coeffs.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    IntPolynomial::new(out)
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        poly_add(self, rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        poly_mul(self, rhs)
    }
}

/// Power series known modulo `t^(order+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    /// Truncates (or zero-pads) `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<i64>, order: usize) -> Self {
        coeffs.resize(order + 1, 0);
        Self { order, coeffs }
    }

    pub fn from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        Self::new(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `t^n`. Panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> i64 {
        self.coeffs[n]
    }

    /// Product with a polynomial, truncated at the same order.
    pub fn mul_poly(&self, p: &IntPolynomial) -> TruncatedSeries {
        let mut out = vec![0i64; self.order + 1];
        for (k, c) in p.terms() {
            for n in k..=self.order {
                out[n] += c * self.coeffs[n - k];
            }
        }
        TruncatedSeries::new(out, self.order)
    }
}

/// Expands `z(t) / ((1 - t^a)(1 - t^b))` to order `order` using
/// `c_n = z_n + c_{n-a} + c_{n-b} - c_{n-a-b}`.
pub fn series_div_geom(z: &IntPolynomial, a: usize, b: usize, order: usize) -> TruncatedSeries {
    assert!(a >= 1 && b >= 1, "series_div_geom needs a, b >= 1");
    let mut c = vec![0i64; order + 1];
    for n in 0..=order {
        let mut v = z.coeff(n);
        if n >= a {
            v += c[n - a];
        }
        if n >= b {
            v += c[n - b];
        }
        if n >= a + b {
            v -= c[n - a - b];
        }
        c[n] = v;
    }
    TruncatedSeries::new(c, order)
}

/// `(1 - t^a)(1 - t^b)`.
pub fn geometric_denominator(a: usize, b: usize) -> IntPolynomial {
    poly_mul(
        &IntPolynomial::from_terms([(0, 1), (a, -1)]),
        &IntPolynomial::from_terms([(0, 1), (b, -1)]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(k: usize) -> IntPolynomial {
        IntPolynomial::monomial(1, k)
    }

    #[test]
    fn add_monomials() {
        let p = poly_add(&IntPolynomial::one(), &t(12));
        assert_eq!(p.sparse_string(), "0:1 12:1");
        assert_eq!(p.eval_at_one(), 2);
    }

    #[test]
    fn denominator_expansion() {
        let d = geometric_denominator(12, 20);
        assert_eq!(
            d,
            IntPolynomial::from_terms([(0, 1), (12, -1), (20, -1), (32, 1)])
        );
    }

    #[test]
    fn mul_by_zero() {
        let p = IntPolynomial::new(vec![3, 0, -2, 5]);
        assert!(poly_mul(&p, &IntPolynomial::zero()).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPolynomial::new(vec![0, 1, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.valuation(), Some(1));
        assert_eq!(poly_add(&p, &IntPolynomial::monomial(-1, 1)), IntPolynomial::zero());
    }

    #[test]
    fn double_pole_at_one() {
        let s = series_div_geom(&IntPolynomial::one(), 1, 1, 3);
        assert_eq!(s.coeffs(), &[1, 2, 3, 4]);
    }

    #[test]
    fn e8_invariant_series_prefix() {
        let z = poly_add(&IntPolynomial::one(), &t(30));
        let s = series_div_geom(&z, 12, 20, 24);
        let support: Vec<usize> = (0..=24).filter(|&n| s.coeff(n) != 0).collect();
        assert_eq!(support, vec![0, 12, 20, 24]);
        assert!(support.iter().all(|&n| s.coeff(n) == 1));
    }

    #[test]
    fn display_forms() {
        let p = IntPolynomial::from_terms([(5, 1), (15, 2), (0, -1), (1, 1)]);
        assert_eq!(p.to_string(), "-1 + t + t^5 + 2t^15");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn reciprocal_of_palindrome() {
        let p = IntPolynomial::from_terms([(2, 1), (4, 2), (6, 1)]);
        assert_eq!(p.reciprocal(8), p);
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..8).prop_map(IntPolynomial::new)
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p + &q, &q + &p);
        }

        #[test]
        fn division_round_trip(
            z in prop::collection::vec(-50i64..50, 0..40).prop_map(IntPolynomial::new),
            a in 1usize..13,
            b in 1usize..21,
            order in 0usize..80,
        ) {
            let s = series_div_geom(&z, a, b, order);
            let back = s.mul_poly(&geometric_denominator(a, b));
            prop_assert_eq!(back, TruncatedSeries::from_polynomial(&z, order));
        }
    }
}
