use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{Scalar, ToComplex64};
use crate::C64;

/// Two-mode occupation `|na, nb⟩`. Orders lexicographically by `(na, nb)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockIndex {
    pub na: u32,
    pub nb: u32,
}

impl FockIndex {
    pub fn new(na: u32, nb: u32) -> Self {
        FockIndex { na, nb }
    }

    /// `na − nb`, the eigenvalue of `Q`.
    pub fn charge(&self) -> i64 {
        self.na as i64 - self.nb as i64
    }

    pub fn fits(&self, truncation: u32) -> bool {
        self.na <= truncation && self.nb <= truncation
    }
}

impl fmt::Display for FockIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}>", self.na, self.nb)
    }
}

/// Sparse amplitude map on the lattice `na, nb ≤ truncation`.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector<T> {
    truncation: u32,
    amplitudes: BTreeMap<FockIndex, T>,
}

impl<T: Scalar> FockVector<T> {
    pub fn new(truncation: u32) -> Self {
        FockVector {
            truncation,
            amplitudes: BTreeMap::new(),
        }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Set an amplitude; zero removes the entry.
    ///
    /// Panics when `index` lies outside the lattice.
    pub fn set(&mut self, index: FockIndex, value: T) {
        assert!(
            index.fits(self.truncation),
            "{index} outside lattice with truncation {}",
            self.truncation
        );
        if value.is_zero() {
            self.amplitudes.remove(&index);
        } else {
            self.amplitudes.insert(index, value);
        }
    }

    /// Add to an amplitude, dropping it if the sum cancels.
    pub fn accumulate(&mut self, index: FockIndex, value: T) {
        let current = self.get(index);
        self.set(index, current + value);
    }

    pub fn get(&self, index: FockIndex) -> T {
        self.amplitudes.get(&index).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockIndex, &T)> {
        self.amplitudes.iter()
    }

    pub fn nnz(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Same amplitudes on a lattice with a larger (or equal) truncation.
    pub fn embed(&self, truncation: u32) -> Self {
        assert!(
            truncation >= self.truncation,
            "embedding must not shrink the lattice"
        );
        FockVector {
            truncation,
            amplitudes: self.amplitudes.clone(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = FockVector::new(self.truncation);
        for (&i, v) in &self.amplitudes {
            out.set(i, v.clone() * c.clone());
        }
        out
    }

    /// `self − other`, on the larger of the two lattices.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.embed(self.truncation.max(other.truncation));
        for (&i, v) in &other.amplitudes {
            out.accumulate(i, -v.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.embed(self.truncation.max(other.truncation));
        for (&i, v) in &other.amplitudes {
            out.accumulate(i, v.clone());
        }
        out
    }

    /// `⟨self|other⟩ = Σ conj(self_i)·other_i`.
    pub fn inner(&self, other: &Self) -> T {
        self.amplitudes
            .iter()
            .filter_map(|(i, v)| other.amplitudes.get(i).map(|w| v.conj() * w.clone()))
            .fold(T::zero(), |acc, x| acc + x)
    }

    /// Euclidean norm computed in double precision.
    pub fn norm(&self) -> f64 {
        self.amplitudes
            .values()
            .map(|v| v.magnitude().powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> FockVector<U> {
        let mut out = FockVector::new(self.truncation);
        for (&i, v) in &self.amplitudes {
            out.set(i, f(v));
        }
        out
    }

    /// Keep only amplitudes whose index satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&FockIndex) -> bool) -> Self {
        FockVector {
            truncation: self.truncation,
            amplitudes: self
                .amplitudes
                .iter()
                .filter(|(i, _)| keep(i))
                .map(|(i, v)| (*i, v.clone()))
                .collect(),
        }
    }
}

impl<T: Scalar + ToComplex64> FockVector<T> {
    /// Double-precision mirror of an exact vector.
    pub fn to_c64(&self) -> FockVector<C64> {
        self.map(|v| v.to_c64())
    }
}
