//! Dense exact matrices and fraction-free rank.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::cyclotomic::Cyclotomic;
use super::laurent::LaurentPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Integral-domain operations Bareiss elimination needs.
pub trait RankScalar: Clone {
    fn is_zero_elt(&self) -> bool;
    fn mul_elt(&self, o: &Self) -> Self;
    fn sub_elt(&self, o: &Self) -> Self;
    /// Division known to be exact.
    fn div_exact_elt(&self, d: &Self) -> Self;
}

impl RankScalar for Rational {
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn mul_elt(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_elt(&self, o: &Self) -> Self {
        self - o
    }
    fn div_exact_elt(&self, d: &Self) -> Self {
        self / d
    }
}

impl RankScalar for Cyclotomic {
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn mul_elt(&self, o: &Self) -> Self {
        self * o
    }
    fn sub_elt(&self, o: &Self) -> Self {
        self - o
    }
    fn div_exact_elt(&self, d: &Self) -> Self {
        self.try_div(d).expect("Bareiss divisor is a nonzero pivot")
    }
}

impl RankScalar for LaurentPoly {
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn mul_elt(&self, o: &Self) -> Self {
        self.try_mul(o).expect("uniform variable count")
    }
    fn sub_elt(&self, o: &Self) -> Self {
        self.try_sub(o).expect("uniform variable count")
    }
    fn div_exact_elt(&self, d: &Self) -> Self {
        self.div_exact(d).expect("Bareiss quotients are exact")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: RankScalar> ExactMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        ExactMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// Rank over the fraction field, by Bareiss elimination.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<T>> = self.data.chunks(self.cols.max(1)).map(|r| r.to_vec()).collect();
        if self.cols == 0 {
            return 0;
        }
        let mut prev: Option<T> = None;
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| !a[i][col].is_zero_elt()) else {
                continue;
            };
            a.swap(rank, p);
            let piv = a[rank][col].clone();
            for i in rank + 1..self.rows {
                let f = a[i][col].clone();
                for j in col + 1..self.cols {
                    let v = piv.mul_elt(&a[i][j]).sub_elt(&f.mul_elt(&a[rank][j]));
                    a[i][j] = match &prev {
                        Some(d) => v.div_exact_elt(d),
                        None => v,
                    };
                }
                a[i][col] = T::sub_elt(&f, &f);
            }
            prev = Some(piv);
            rank += 1;
        }
        rank
    }
}

pub fn exact_rank<T: RankScalar>(rows: Vec<Vec<T>>) -> Result<usize> {
    Ok(ExactMatrix::from_rows(rows)?.rank())
}

pub fn rational_rows(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect()
}

/// Solve x·A = b for square invertible A over Q (row-vector convention).
pub fn solve_left(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    // transpose to A^t x^t = b^t and eliminate
    let mut m: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = (0..n).map(|j| a[j][i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = Rational::one() / &m[c][c];
        for j in c..=n {
            m[c][j] = &m[c][j] * &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Incrementally maintained echelon basis of a Q-span of sparse vectors.
#[derive(Clone, Debug)]
pub struct SparseSpan<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeMap<K, Rational>>,
}

impl<K: Ord + Clone> Default for SparseSpan<K> {
    fn default() -> Self {
        SparseSpan { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseSpan<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: BTreeMap<K, Rational>) -> BTreeMap<K, Rational> {
        v.retain(|_, c| !c.is_zero());
        let mut done: BTreeMap<K, Rational> = BTreeMap::new();
        while let Some((k, c)) = v.pop_first() {
            match self.rows.get(&k) {
                Some(row) => {
                    // row is monic at k
                    for (k2, c2) in row.iter().skip(1) {
                        let e = v.entry(k2.clone()).or_insert_with(Rational::zero);
                        *e -= &c * c2;
                        if e.is_zero() {
                            v.remove(k2);
                        }
                    }
                }
                None => {
                    done.insert(k, c);
                }
            }
        }
        done
    }

    /// Adds v; returns true if it enlarged the span.
    pub fn insert(&mut self, v: BTreeMap<K, Rational>) -> bool {
        let r = self.reduce(v);
        let Some((k, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = Rational::one() / c;
        let row = r.into_iter().map(|(k2, c2)| (k2, c2 * &inv)).collect();
        self.rows.insert(k, row);
        true
    }

    pub fn contains(&self, v: BTreeMap<K, Rational>) -> bool {
        self.reduce(v).is_empty()
    }
}
