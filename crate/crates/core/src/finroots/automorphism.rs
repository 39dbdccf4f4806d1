//! Diagram automorphisms, acting on simple-root coordinates.

use num_traits::Zero;

use super::system::{CartanType, FiniteRootSystem, RootCoords};
use crate::arith::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    order: u32,
    // α_i ↦ α_{perm[i]}
    perm: Vec<usize>,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> Self {
        DiagramAutomorphism { order: 1, perm: (0..rank).collect() }
    }

    /// Build from an explicit base permutation; checks form preservation and exact order.
    pub fn from_permutation(r: &FiniteRootSystem, perm: Vec<usize>) -> Result<Self> {
        let n = r.rank();
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::Precondition("not a permutation of the simple roots".into()));
        }
        let g = r.gram();
        if (0..n).any(|i| (0..n).any(|j| g[perm[i]][perm[j]] != g[i][j])) {
            return Err(Error::Precondition("permutation does not preserve the form".into()));
        }
        let mut order = 1u32;
        let mut p: Vec<usize> = perm.clone();
        while p.iter().enumerate().any(|(i, &x)| i != x) {
            p = p.iter().map(|&x| perm[x]).collect();
            order += 1;
        }
        Ok(DiagramAutomorphism { order, perm })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply<T: Clone + Default>(&self, v: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); v.len()];
        for (i, x) in v.iter().enumerate() {
            out[self.perm[i]] = x.clone();
        }
        out
    }

    pub fn apply_root(&self, v: &[i64]) -> RootCoords {
        self.apply(v)
    }

    pub fn apply_pow(&self, v: &[i64], k: u32) -> RootCoords {
        let mut w = v.to_vec();
        for _ in 0..k % self.order {
            w = self.apply(&w);
        }
        w
    }

    /// The induced linear map on ε-coordinates, for vectors in the root span.
    pub fn apply_eps(&self, r: &FiniteRootSystem, v: &[Rational]) -> Option<Vec<Rational>> {
        let c = r.from_eps(v)?;
        let mut out = vec![Rational::zero(); c.len()];
        for (i, x) in c.into_iter().enumerate() {
            out[self.perm[i]] = x;
        }
        Some(r.eps_rat(&out))
    }
}

/// The standard diagram automorphism of the given order.
pub fn diagram_automorphism(r: &FiniteRootSystem, order: u32) -> Result<DiagramAutomorphism> {
    let l = r.rank();
    let bad = || Error::InadmissibleAutomorphism { label: r.label(), order };
    let perm: Vec<usize> = match (r.cartan_type(), order) {
        (_, 1) => return Ok(DiagramAutomorphism::identity(l)),
        (CartanType::A, 2) if l >= 2 => (0..l).rev().collect(),
        (CartanType::D, 2) => {
            let mut p: Vec<usize> = (0..l).collect();
            p.swap(l - 2, l - 1);
            p
        }
        // α1 → α3 → α4 → α1, α2 fixed
        (CartanType::D, 3) if l == 4 => vec![2, 1, 3, 0],
        (CartanType::E, 2) if l == 6 => vec![5, 1, 4, 3, 2, 0],
        _ => return Err(bad()),
    };
    DiagramAutomorphism::from_permutation(r, perm)
}
