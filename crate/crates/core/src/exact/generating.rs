//! Coefficient extraction from `exp(−t t′ + t ξ + t′ ξ*)`.

use std::collections::BTreeMap;

use num_traits::One;

use crate::exact::rational::{factorial_q, int_q};
use crate::{Rational, RationalPoly};

/// Truncated power series in `(t, t′)` whose coefficients are polynomials
/// in `(ξ, ξ*)`.
#[derive(Clone, Debug, Default)]
struct Series2 {
    max_t: u32,
    max_tp: u32,
    coeffs: BTreeMap<(u32, u32), RationalPoly>,
}

impl Series2 {
    fn new(max_t: u32, max_tp: u32) -> Self {
        Series2 {
            max_t,
            max_tp,
            coeffs: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, i: u32, j: u32, p: RationalPoly) {
        if i > self.max_t || j > self.max_tp || p.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((i, j)).or_insert_with(RationalPoly::zero);
        *slot = &*slot + &p;
        if slot.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    fn mul(&self, other: &Series2) -> Series2 {
        let mut out = Series2::new(self.max_t, self.max_tp);
        for (&(i1, j1), p1) in &self.coeffs {
            for (&(i2, j2), p2) in &other.coeffs {
                out.add_term(i1 + i2, j1 + j2, p1 * p2);
            }
        }
        out
    }

    fn scale(&self, c: &Rational) -> Series2 {
        Series2 {
            max_t: self.max_t,
            max_tp: self.max_tp,
            coeffs: self.coeffs.iter().map(|(k, p)| (*k, p.scale(c))).collect(),
        }
    }

    fn add_assign(&mut self, other: &Series2) {
        for (&(i, j), p) in &other.coeffs {
            self.add_term(i, j, p.clone());
        }
    }
}

/// `table[m][n] = m!·n!·[t^m t′^n] exp(−t t′ + t ξ + t′ ξ*)` for `m ≤ max_m`,
/// `n ≤ max_n`, expanded as `Σ_k S^k / k!` with `S = −t t′ + t ξ + t′ ξ*`.
pub fn generating_function_coeffs(max_m: u32, max_n: u32) -> Vec<Vec<RationalPoly>> {
    let mut exponent = Series2::new(max_m, max_n);
    exponent.add_term(1, 1, RationalPoly::constant(int_q(-1)));
    exponent.add_term(1, 0, RationalPoly::first_var());
    exponent.add_term(0, 1, RationalPoly::second_var());

    let mut total = Series2::new(max_m, max_n);
    total.add_term(0, 0, RationalPoly::one());
    let mut power = total.clone();
    // every term of S has total (t, t′) degree ≥ 1
    for k in 1..=(max_m + max_n) {
        power = power.mul(&exponent);
        total.add_assign(&power.scale(&(Rational::one() / factorial_q(k))));
    }

    (0..=max_m)
        .map(|m| {
            (0..=max_n)
                .map(|n| {
                    total
                        .coeffs
                        .get(&(m, n))
                        .map(|p| p.scale(&(factorial_q(m) * factorial_q(n))))
                        .unwrap_or_else(RationalPoly::zero)
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::hermite::hermite2_poly;

    #[test]
    fn low_order_entries() {
        let t = generating_function_coeffs(2, 2);
        assert_eq!(t[0][0], RationalPoly::one());
        assert_eq!(t[1][1].render("x", "y"), "x*y - 1");
        assert_eq!(t[1][0], RationalPoly::first_var());
        assert_eq!(t[2][0], hermite2_poly(2, 0));
    }

    #[test]
    fn rectangular_tables() {
        let t = generating_function_coeffs(3, 1);
        assert_eq!(t.len(), 4);
        assert!(t.iter().all(|row| row.len() == 2));
        assert_eq!(t[3][1], hermite2_poly(3, 1));
    }
}
