//! Exact sums of square roots.
//!
//! A [`Surd`] is a finite sum `Σ c_s √s` over distinct square-free positive
//! integers `s`, with coefficients in an [`ExactField`]. Square roots of
//! distinct square-free integers are linearly independent over `Q(i)`, so the
//! representation is canonical: a surd is zero exactly when it stores no
//! terms. This is what lets Fock amplitudes such as `√((n+q)!/n!)·F(n)` and
//! ladder matrix elements `√n` be combined without rounding.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::scalar::{ExactField, Scalar, ToComplex64};
use crate::{Rational, C64};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Surd<C> {
    // square-free radicand -> nonzero coefficient
    terms: BTreeMap<BigUint, C>,
}

/// Split `n` into `(s, r)` with `n = s²·r` and `r` square-free.
fn square_free_split(mut n: u64) -> (u64, u64) {
    let mut outside = 1u64;
    let mut inside = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        outside *= p.pow(e / 2);
        if e % 2 == 1 {
            inside *= p;
        }
        p += 1;
    }
    (outside, inside * n)
}

impl<C: ExactField> Surd<C> {
    pub fn from_coeff(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(BigUint::one(), c);
        }
        Surd { terms }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Surd::from_coeff(C::from_rational(r))
    }

    /// `√n` for a machine integer.
    pub fn sqrt(n: u64) -> Self {
        if n == 0 {
            return Surd::zero();
        }
        let (outside, inside) = square_free_split(n);
        let mut terms = BTreeMap::new();
        terms.insert(
            BigUint::from(inside),
            C::from_rational(&Rational::from_integer(outside.into())),
        );
        Surd { terms }
    }

    /// `√(n!)`, built as a product of `√i`.
    pub fn sqrt_factorial(n: u64) -> Self {
        (2..=n).fold(Surd::one(), |acc, i| acc * Surd::sqrt(i))
    }

    /// `√(hi!/lo!) = √((lo+1)(lo+2)···hi)` for `lo ≤ hi`.
    pub fn sqrt_falling(hi: u64, lo: u64) -> Self {
        (lo + 1..=hi).fold(Surd::one(), |acc, i| acc * Surd::sqrt(i))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Surd::zero();
        }
        Surd {
            terms: self
                .terms
                .iter()
                .map(|(r, x)| (r.clone(), x.clone() * c.clone()))
                .collect(),
        }
    }

    /// The coefficient when the surd is a plain field element.
    pub fn as_coeff(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Replace every coefficient through `f`, keeping radicands.
    pub fn map_coeffs<D: ExactField>(&self, f: impl Fn(&C) -> D) -> Surd<D> {
        let mut terms = BTreeMap::new();
        for (r, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                terms.insert(r.clone(), d);
            }
        }
        Surd { terms }
    }

    fn accumulate(terms: &mut BTreeMap<BigUint, C>, radicand: BigUint, c: C) {
        use std::collections::btree_map::Entry;
        match terms.entry(radicand) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

impl<C: ExactField> Zero for Surd<C> {
    fn zero() -> Self {
        Surd {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: ExactField> One for Surd<C> {
    fn one() -> Self {
        Surd::from_coeff(C::one())
    }
}

impl<C: ExactField> Add for Surd<C> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (r, c) in rhs.terms {
            Surd::accumulate(&mut self.terms, r, c);
        }
        self
    }
}

impl<C: ExactField> Neg for Surd<C> {
    type Output = Self;

    fn neg(self) -> Self {
        Surd {
            terms: self.terms.into_iter().map(|(r, c)| (r, -c)).collect(),
        }
    }
}

impl<C: ExactField> Sub for Surd<C> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: ExactField> Mul for Surd<C> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: ExactField> Mul<&Surd<C>> for &Surd<C> {
    type Output = Surd<C>;

    fn mul(self, rhs: &Surd<C>) -> Surd<C> {
        let mut terms = BTreeMap::new();
        for (r1, c1) in &self.terms {
            for (r2, c2) in &rhs.terms {
                // √r1·√r2 = g·√((r1/g)(r2/g)) with g = gcd(r1, r2); both
                // radicands square-free, so the new radicand is too.
                let g = r1.gcd(r2);
                let radicand = (r1 / &g) * (r2 / &g);
                let factor = C::from_rational(&Rational::from_integer(g.into()));
                Surd::accumulate(&mut terms, radicand, c1.clone() * c2.clone() * factor);
            }
        }
        Surd { terms }
    }
}

impl<C: ExactField> Scalar for Surd<C> {
    fn sqrt_of(n: u64) -> Self {
        Surd::sqrt(n)
    }

    fn from_rational(r: &Rational) -> Self {
        Surd::from_coeff(C::from_rational(r))
    }

    fn conj(&self) -> Self {
        // radicands are positive, so only coefficients conjugate
        self.map_coeffs(|c| c.conj())
    }

    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl<C: ExactField> ToComplex64 for Surd<C> {
    fn to_c64(&self) -> C64 {
        self.terms
            .iter()
            .map(|(r, c)| c.to_c64() * r.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }
}

impl<C: ExactField> fmt::Display for Surd<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(r, c)| {
                if r.is_one() {
                    c.render()
                } else {
                    format!("({})*sqrt({})", c.render(), r)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ComplexRational, RealSurd};
    use num_complex::Complex;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn square_free_split_small() {
        assert_eq!(square_free_split(1), (1, 1));
        assert_eq!(square_free_split(12), (2, 3));
        assert_eq!(square_free_split(72), (6, 2));
        assert_eq!(square_free_split(49), (7, 1));
        assert_eq!(square_free_split(30), (1, 30));
    }

    #[test]
    fn sqrt_squares_to_integer() {
        for n in 0..200u64 {
            let s = RealSurd::sqrt(n);
            let sq = &s * &s;
            assert_eq!(
                sq.as_coeff(),
                Some(Rational::from_integer(n.into())),
                "n={n}"
            );
        }
    }

    #[test]
    fn distinct_radicands_do_not_cancel() {
        let x = RealSurd::sqrt(2) + RealSurd::sqrt(3);
        assert_eq!(x.len(), 2);
        let y = x.clone() - RealSurd::sqrt(2);
        assert_eq!(y, RealSurd::sqrt(3));
        assert!((x - RealSurd::sqrt(8).scale(&q(1, 2)) - RealSurd::sqrt(3)).is_zero());
    }

    #[test]
    fn sqrt_factorial_matches_float() {
        let s = RealSurd::sqrt_factorial(10);
        let expected = (3_628_800f64).sqrt();
        assert!((s.to_c64().re - expected).abs() < 1e-9 * expected);
        assert_eq!(RealSurd::sqrt_falling(6, 4), RealSurd::sqrt(30));
    }

    #[test]
    fn complex_coefficients_conjugate() {
        let z = ComplexSurd::from_coeff(Complex::new(q(1, 2), q(-3, 1))) * Surd::sqrt(6);
        let w = Scalar::conj(&z);
        let prod = &z * &w;
        // |z|² = (1/4 + 9)·6
        assert_eq!(
            prod.as_coeff(),
            Some(Complex::new(q(111, 2), Rational::zero()))
        );
    }

    #[test]
    fn display_is_canonical() {
        let x = RealSurd::sqrt(8).scale(&q(-1, 3)) + RealSurd::from_rational(&q(5, 1));
        assert_eq!(x.to_string(), "5/1 + (-2/3)*sqrt(2)");
        assert_eq!(RealSurd::zero().to_string(), "0");
    }

    type ComplexSurd = Surd<ComplexRational>;
}
