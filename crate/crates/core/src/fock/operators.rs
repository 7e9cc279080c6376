//! Sparse operators on the truncated lattice.

use std::collections::BTreeMap;

use crate::exact::rational::int_q;
use crate::fock::lattice::{FockIndex, FockVector};
use crate::scalar::Scalar;

/// Row-major sparse matrix over [`FockIndex`] with no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseOperator<T> {
    truncation: u32,
    rows: BTreeMap<FockIndex, BTreeMap<FockIndex, T>>,
}

impl<T: Scalar> SparseOperator<T> {
    pub fn new(truncation: u32) -> Self {
        SparseOperator {
            truncation,
            rows: BTreeMap::new(),
        }
    }

    pub fn identity(truncation: u32) -> Self {
        let mut op = SparseOperator::new(truncation);
        for index in lattice(truncation) {
            op.set(index, index, T::one());
        }
        op
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn set(&mut self, row: FockIndex, col: FockIndex, value: T) {
        assert!(
            row.fits(self.truncation) && col.fits(self.truncation),
            "entry ({row}, {col}) outside lattice {}",
            self.truncation
        );
        let r = self.rows.entry(row).or_default();
        if value.is_zero() {
            r.remove(&col);
            if r.is_empty() {
                self.rows.remove(&row);
            }
        } else {
            r.insert(col, value);
        }
    }

    fn accumulate(&mut self, row: FockIndex, col: FockIndex, value: T) {
        let current = self.get(row, col);
        self.set(row, col, current + value);
    }

    /// `⟨row| op |col⟩`.
    pub fn get(&self, row: FockIndex, col: FockIndex) -> T {
        self.rows
            .get(&row)
            .and_then(|r| r.get(&col))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (FockIndex, FockIndex, &T)> {
        self.rows
            .iter()
            .flat_map(|(&r, cols)| cols.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.values().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// `op |v⟩`. Amplitudes of `v` outside this operator's lattice are
    /// annihilated; the result lives on the operator's lattice.
    pub fn apply(&self, v: &FockVector<T>) -> FockVector<T> {
        let mut out = FockVector::new(self.truncation);
        for (row, col, x) in self.entries() {
            let amp = v.get(col);
            if !amp.is_zero() {
                out.accumulate(row, x.clone() * amp);
            }
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = SparseOperator::new(self.truncation.min(other.truncation));
        for (row, mid, x) in self.entries() {
            if let Some(next) = other.rows.get(&mid) {
                for (&col, y) in next {
                    if row.fits(out.truncation) && col.fits(out.truncation) {
                        out.accumulate(row, col, x.clone() * y.clone());
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.truncation = self.truncation.max(other.truncation);
        for (r, c, v) in other.entries() {
            out.accumulate(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = SparseOperator::new(self.truncation);
        for (r, col, v) in self.entries() {
            out.set(r, col, v.clone() * c.clone());
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = SparseOperator::new(self.truncation);
        for (r, c, v) in self.entries() {
            out.set(c, r, v.conj());
        }
        out
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }
}

/// Every index of the lattice, in order.
pub fn lattice(truncation: u32) -> impl Iterator<Item = FockIndex> {
    (0..=truncation).flat_map(move |na| (0..=truncation).map(move |nb| FockIndex::new(na, nb)))
}

/// Mode ladder operators and the two composite operators of interest.
#[derive(Clone, Debug)]
pub struct LadderOps<T> {
    pub a: SparseOperator<T>,
    pub b: SparseOperator<T>,
    pub a_dag: SparseOperator<T>,
    pub b_dag: SparseOperator<T>,
    /// Number difference `a†a − b†b`.
    pub q: SparseOperator<T>,
    /// Pair operator `ab − a†b†`.
    pub k: SparseOperator<T>,
}

/// Ladder operators on the lattice with truncation `n ≥ 1`:
/// `a|na,nb⟩ = √na |na−1,nb⟩`, `a†|na,nb⟩ = √(na+1) |na+1,nb⟩` while
/// `na+1 ≤ n`, and likewise for `b`.
pub fn build_ladder_ops<T: Scalar>(n: u32) -> LadderOps<T> {
    assert!(n >= 1, "truncation must be at least 1");
    let mut a = SparseOperator::new(n);
    let mut b = SparseOperator::new(n);
    let mut q = SparseOperator::new(n);
    for idx in lattice(n) {
        if idx.na > 0 {
            a.set(
                FockIndex::new(idx.na - 1, idx.nb),
                idx,
                T::sqrt_of(idx.na as u64),
            );
        }
        if idx.nb > 0 {
            b.set(
                FockIndex::new(idx.na, idx.nb - 1),
                idx,
                T::sqrt_of(idx.nb as u64),
            );
        }
        q.set(idx, idx, T::from_rational(&int_q(idx.charge())));
    }
    let a_dag = a.adjoint();
    let b_dag = b.adjoint();
    let k = a.compose(&b).sub(&a_dag.compose(&b_dag));
    LadderOps {
        a,
        b,
        a_dag,
        b_dag,
        q,
        k,
    }
}
