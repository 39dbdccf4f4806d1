use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::hnf;
use crate::arith::matrix::{exact_rank, rational_rows};
use crate::error::{fmt_vec, Error, Result};

/// A sublattice of Z^n given by independent basis rows.
///
/// Usually the basis is square (a full-rank Λ in Z^ν); lower rank is allowed
/// for sublattices such as the isotropic part of a generated subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<i64>>,
    hnf: Vec<Vec<i64>>,
    // coordinates: c = v[sel] · num / den
    sel: Vec<usize>,
    num: Vec<Vec<i64>>,
    den: i64,
}

impl Lattice {
    pub fn standard(n: usize) -> Self {
        let basis = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        Self::new(n, basis).expect("standard basis is independent")
    }

    pub fn new(dim: usize, basis: Vec<Vec<i64>>) -> Result<Self> {
        if basis.iter().any(|b| b.len() != dim) {
            return Err(Error::DimensionMismatch(format!("basis vectors must have length {dim}")));
        }
        if basis.len() > 64 {
            return Err(Error::DimensionMismatch("lattice rank above 64".into()));
        }
        let r = basis.len();
        if exact_rank(rational_rows(&basis))? != r {
            return Err(Error::Precondition("lattice basis is linearly dependent".into()));
        }
        let h = hnf::hnf(&basis, dim);
        let sel: Vec<usize> = h.iter().map(|row| hnf::pivot_col(row)).collect();
        // square r×r block B[i][k] = basis[i][sel[k]]; need B^{-1} = adj / det
        let block: Vec<Vec<i64>> = basis.iter().map(|b| sel.iter().map(|&c| b[c]).collect()).collect();
        let (num, den) = integer_inverse(&block);
        Ok(Lattice { dim, basis, hnf: h, sel, num, den })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn hnf_basis(&self) -> &[Vec<i64>] {
        &self.hnf
    }

    pub fn is_standard(&self) -> bool {
        *self == Self::standard(self.dim)
    }

    /// Same set of vectors (basis choice ignored).
    pub fn same_lattice(&self, o: &Lattice) -> bool {
        self.dim == o.dim && self.hnf == o.hnf
    }

    /// Coordinates relative to the stored basis, if v ∈ Λ.
    pub fn coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        if v.len() != self.dim {
            return None;
        }
        let r = self.rank();
        let mut c = Vec::with_capacity(r);
        for k in 0..r {
            let s: i64 = (0..r).map(|i| v[self.sel[i]] * self.num[i][k]).sum();
            if s % self.den != 0 {
                return None;
            }
            c.push(s / self.den);
        }
        (self.combine(&c) == v).then_some(c)
    }

    pub fn combine(&self, c: &[i64]) -> Vec<i64> {
        let mut v = vec![0; self.dim];
        for (ci, b) in c.iter().zip(&self.basis) {
            for (x, y) in v.iter_mut().zip(b) {
                *x += ci * y;
            }
        }
        v
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.coords(v).is_some()
    }

    /// Coset of v in Λ/2Λ as a bitmask of coordinate parities.
    pub fn class_of(&self, v: &[i64]) -> Option<u64> {
        let c = self.coords(v)?;
        Some(c.iter().enumerate().fold(0u64, |m, (i, x)| m | ((x.rem_euclid(2) as u64) << i)))
    }

    /// Representative of a class with coordinates in {0,1}.
    pub fn class_vector(&self, mask: u64) -> Vec<i64> {
        let c: Vec<i64> = (0..self.rank()).map(|i| ((mask >> i) & 1) as i64).collect();
        self.combine(&c)
    }

    pub fn num_classes(&self) -> u64 {
        1u64 << self.rank()
    }
}

// Inverse of a square integer matrix as (adjugate-like numerators, positive denominator).
fn integer_inverse(a: &[Vec<i64>]) -> (Vec<Vec<i64>>, i64) {
    use crate::arith::rational::Rational;
    use num_traits::{One, Zero};
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = rational_rows(a);
    let mut inv: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero()).expect("invertible block");
        m.swap(c, p);
        inv.swap(c, p);
        let f = Rational::one() / &m[c][c];
        for j in 0..n {
            m[c][j] = &m[c][j] * &f;
            inv[c][j] = &inv[c][j] * &f;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let g = m[i][c].clone();
                for j in 0..n {
                    let t1 = &g * &m[c][j];
                    m[i][j] -= t1;
                    let t2 = &g * &inv[c][j];
                    inv[i][j] -= t2;
                }
            }
        }
    }
    let den = inv
        .iter()
        .flatten()
        .fold(1i64, |d, x| d.lcm(&i64::try_from(x.denom()).expect("small denominators")));
    let num = inv
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let s = x * Rational::from_integer(den.into());
                    i64::try_from(s.numer()).expect("small numerators")
                })
                .collect()
        })
        .collect();
    (num, den)
}

#[derive(Serialize, Deserialize)]
pub(crate) struct LatticeJson {
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<i64>>>,
}

impl Serialize for Lattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LatticeJson { rank: self.dim, basis: Some(self.basis.clone()) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Lattice {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = LatticeJson::deserialize(d)?;
        match j.basis {
            None => Ok(Lattice::standard(j.rank)),
            Some(b) => Lattice::new(j.rank, b).map_err(serde::de::Error::custom),
        }
    }
}

/// Additive subgroup of Z^n spanned by a finite set of vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    dim: usize,
    gens: Vec<Vec<i64>>,
    basis: Vec<Vec<i64>>,
}

impl Subgroup {
    pub fn span(dim: usize, gens: &[Vec<i64>]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != dim) {
            return Err(Error::DimensionMismatch(format!("generator {} not of length {dim}", fmt_vec(g))));
        }
        Ok(Subgroup { dim, gens: gens.to_vec(), basis: hnf::hnf(gens, dim) })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.gens
    }

    /// Canonical HNF basis.
    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.dim && hnf::reduce(&self.basis, v).iter().all(|&x| x == 0)
    }

    pub fn same_group(&self, o: &Subgroup) -> bool {
        self.dim == o.dim && self.basis == o.basis
    }

    pub fn to_lattice(&self) -> Lattice {
        Lattice::new(self.dim, self.basis.clone()).expect("HNF rows are independent")
    }
}

pub fn subgroup_span(dim: usize, vectors: &[Vec<i64>]) -> Result<Subgroup> {
    Subgroup::span(dim, vectors)
}
