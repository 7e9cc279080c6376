use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, Num, Signed};

use crate::Rational;

/// Sparse polynomial in two formal variables, keyed by `(first, second)`
/// exponents. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePolynomial<T> {
    terms: BTreeMap<(u32, u32), T>,
}

impl<T: Clone + Num> BivariatePolynomial<T> {
    pub fn zero() -> Self {
        BivariatePolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn monomial(c: T, first: u32, second: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(first, second, c);
        p
    }

    /// The first slot variable on its own.
    pub fn first_var() -> Self {
        Self::monomial(T::one(), 1, 0)
    }

    pub fn second_var() -> Self {
        Self::monomial(T::one(), 0, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), T)>) -> Self {
        let mut p = Self::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn add_term(&mut self, first: u32, second: u32, c: T) {
        use std::collections::btree_map::Entry;
        match self.terms.entry((first, second)) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, first: u32, second: u32) -> T {
        self.terms
            .get(&(first, second))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Terms in ascending `(first, second)` exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_first(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_second(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiply by `first^a · second^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(p, s), v)| ((p + a, s + b), v.clone()))
                .collect(),
        }
    }

    /// Exchange the two slots: `P(x, y) ↦ P(y, x)`.
    pub fn swap_slots(&self) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(p, s), v)| ((s, p), v.clone()))
                .collect(),
        }
    }

    /// Drop every term with first exponent above `max_first` or second above
    /// `max_second`.
    pub fn truncate(&self, max_first: u32, max_second: u32) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(&(p, s), _)| p <= max_first && s <= max_second)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn map<U: Clone + Num>(&self, f: impl Fn(&T) -> U) -> BivariatePolynomial<U> {
        BivariatePolynomial::from_terms(self.terms.iter().map(|(k, v)| (*k, f(v))))
    }

    /// Evaluate at `(x, y)` in any ring `U` that the coefficients map into.
    pub fn eval_with<U: Clone + Num>(&self, x: &U, y: &U, lift: impl Fn(&T) -> U) -> U {
        let (Some(dx), Some(dy)) = (self.degree_first(), self.degree_second()) else {
            return U::zero();
        };
        let powers = |base: &U, d: u32| {
            let mut v = Vec::with_capacity(d as usize + 1);
            v.push(U::one());
            for i in 0..d as usize {
                v.push(v[i].clone() * base.clone());
            }
            v
        };
        let px = powers(x, dx);
        let py = powers(y, dy);
        self.terms.iter().fold(U::zero(), |acc, (&(p, s), c)| {
            acc + lift(c) * px[p as usize].clone() * py[s as usize].clone()
        })
    }
}

impl<T: Clone + Num + FromPrimitive> BivariatePolynomial<T> {
    /// Formal partial derivative in the first slot.
    pub fn partial_first(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(k, _)| k.0 > 0)
                .map(|(&(p, s), v)| {
                    (
                        (p - 1, s),
                        v.clone() * T::from_u32(p).expect("exponent fits"),
                    )
                }),
        )
    }

    pub fn partial_second(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(k, _)| k.1 > 0)
                .map(|(&(p, s), v)| {
                    (
                        (p, s - 1),
                        v.clone() * T::from_u32(s).expect("exponent fits"),
                    )
                }),
        )
    }

    /// Euler operator `x∂x + y∂y`: each monomial scaled by its total degree.
    pub fn euler(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&(p, s), v)| ((p, s), v.clone() * T::from_u32(p + s).expect("degree fits"))),
        )
    }
}

impl<T: Clone + Num> Add for BivariatePolynomial<T> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for ((p, s), c) in rhs.terms {
            self.add_term(p, s, c);
        }
        self
    }
}

impl<T: Clone + Num> Add for &BivariatePolynomial<T> {
    type Output = BivariatePolynomial<T>;

    fn add(self, rhs: Self) -> BivariatePolynomial<T> {
        self.clone() + rhs.clone()
    }
}

impl<T: Clone + Num + Neg<Output = T>> Neg for BivariatePolynomial<T> {
    type Output = Self;

    fn neg(self) -> Self {
        BivariatePolynomial {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl<T: Clone + Num + Neg<Output = T>> Sub for BivariatePolynomial<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Clone + Num + Neg<Output = T>> Sub for &BivariatePolynomial<T> {
    type Output = BivariatePolynomial<T>;

    fn sub(self, rhs: Self) -> BivariatePolynomial<T> {
        self.clone() - rhs.clone()
    }
}

impl<T: Clone + Num> Mul for &BivariatePolynomial<T> {
    type Output = BivariatePolynomial<T>;

    fn mul(self, rhs: Self) -> BivariatePolynomial<T> {
        let mut out = BivariatePolynomial::zero();
        for (&(p1, s1), c1) in &self.terms {
            for (&(p2, s2), c2) in &rhs.terms {
                out.add_term(p1 + p2, s1 + s2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<T: Clone + Num> Mul for BivariatePolynomial<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl BivariatePolynomial<Rational> {
    /// Canonical text form: terms by descending total degree, ties by
    /// descending first exponent; e.g. `x^2*y - 2*x`.
    pub fn render(&self, first: &str, second: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        let mut out = String::new();
        for (i, key) in keys.into_iter().enumerate() {
            let c = &self.terms[key];
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let magnitude = c.abs();
            let mut factors = Vec::new();
            let is_constant = key.0 == 0 && key.1 == 0;
            if magnitude != Rational::from_integer(1.into()) || is_constant {
                factors.push(magnitude.to_string());
            }
            for (var, e) in [(first, key.0), (second, key.1)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}
