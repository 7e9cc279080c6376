//! Parsing, canonical printing and memoized factorials.

use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{ComplexRational, Rational};

/// Factorials are memoized up to this index; larger ones are computed on demand.
pub const FACTORIAL_CAP: u32 = 64;

fn factorial_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Vec::with_capacity(FACTORIAL_CAP as usize + 1);
        t.push(BigInt::one());
        for i in 1..=FACTORIAL_CAP {
            let next = &t[i as usize - 1] * BigInt::from(i);
            t.push(next);
        }
        t
    })
}

pub fn factorial(n: u32) -> BigInt {
    let table = factorial_table();
    if n <= FACTORIAL_CAP {
        return table[n as usize].clone();
    }
    (FACTORIAL_CAP + 1..=n).fold(table[FACTORIAL_CAP as usize].clone(), |acc, i| {
        acc * BigInt::from(i)
    })
}

pub fn factorial_q(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

pub fn int_q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or a bare integer `"p"`. Whitespace around the value is
/// ignored; anything else, including a zero denominator, is rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if t.is_empty() || t.contains(char::is_whitespace) {
        return Err(Error::InvalidParameter(format!("malformed rational {s:?}")));
    }
    Rational::from_str(t)
        .map_err(|e| Error::InvalidParameter(format!("malformed rational {s:?}: {e}")))
}

/// `num/den`, always with an explicit denominator.
pub fn fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// `re + (im)*i` in fraction form; just `re` when the imaginary part is zero.
pub fn complex_fraction_string(z: &ComplexRational) -> String {
    if z.im.is_zero() {
        fraction_string(&z.re)
    } else {
        format!(
            "{} + ({})*i",
            fraction_string(&z.re),
            fraction_string(&z.im)
        )
    }
}

/// Reduced human form: `3/4`, `-1`, `2 - 1/2*i`.
pub fn plain_complex_string(z: &ComplexRational) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => format!("{}*i", z.im),
        (false, false) => {
            let sign = if z.im.is_negative() { "-" } else { "+" };
            format!("{} {} {}*i", z.re, sign, z.im.abs())
        }
    }
}
