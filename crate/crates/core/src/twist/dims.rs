//! Isotropic root-space dimensions of the affinization.

use num_traits::Zero;
use serde::Serialize;

use super::projection::TwistDatum;
use crate::arith::cyclotomic::Cyclotomic;
use crate::arith::matrix::exact_rank;
use crate::arith::rational::Rational;
use crate::error::{Error, Result};
use crate::finroots::RootCoords;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsotropicDim {
    pub k: i64,
    pub residue: u32,
    pub dim: usize,
    /// n_{σ,k}
    pub n_sigma_k: usize,
    /// dim π_k(h), the rank of {π_k(α_i)}
    pub cartan_bound: usize,
    /// Whether dim ≤ n_{σ,k}/2 happens to hold; informational only.
    pub half_bound_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffinizedRow {
    /// π(α) in simple coordinates (zero for isotropic rows)
    pub pi: Vec<String>,
    pub i: i64,
    pub dim: usize,
    pub isotropic: bool,
    /// orbit representative, for real rows
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_rep: Option<RootCoords>,
}

impl TwistDatum {
    fn rank_over_field(&self, vecs: Vec<Vec<Cyclotomic>>) -> usize {
        if vecs.is_empty() {
            return 0;
        }
        exact_rank(vecs).expect("rectangular")
    }

    /// rank {π_k(α_i)}: dimension of π_k(h).
    pub fn cartan_projection_rank(&self, k: i64) -> usize {
        let l = self.host().rank();
        let vecs = (0..l)
            .map(|i| {
                let e: Vec<i64> = (0..l).map(|j| (i == j) as i64).collect();
                self.pi_k(&e, k).coords
            })
            .collect();
        self.rank_over_field(vecs)
    }

    /// dim g̃_{kδ}: rank over Q(ω) of π_k of the positive orbit representatives.
    pub fn isotropic_dim(&self, k: i64) -> Result<IsotropicDim> {
        let m = self.order();
        let residue = k.rem_euclid(m as i64) as u32;
        let vecs: Vec<Vec<Cyclotomic>> = self
            .orbits()
            .positive_reps()
            .iter()
            .map(|r| self.pi_k(r, k))
            .filter(|p| !p.is_zero())
            .map(|p| p.coords)
            .collect();
        let n = vecs.len();
        let dim = self.rank_over_field(vecs);
        let cartan = self.cartan_projection_rank(k);
        if dim > n || dim > cartan {
            return Err(Error::Precondition(format!(
                "dimension {dim} exceeds bounds n_sigma_k={n}, dim pi_k(h)={cartan}"
            )));
        }
        Ok(IsotropicDim { k, residue, dim, n_sigma_k: n, cartan_bound: cartan, half_bound_holds: 2 * dim <= n })
    }

    /// Eigenvalue exponent e (σ acts on g_β by ω^e) for a σ-fixed root β.
    ///
    /// With the standard lift σ(e_i) = e_{σ(i)}, a fixed root β acquires the
    /// sign -1 exactly when m = 2 and β = γ + σγ for a root γ ≠ σγ.
    pub fn fixed_root_eigen(&self, beta: &[i64]) -> u32 {
        if self.order() != 2 {
            return 0;
        }
        let host = self.host();
        for g in host.roots() {
            let sg = self.sigma().apply_root(g);
            if &sg != g {
                let sum: Vec<i64> = g.iter().zip(&sg).map(|(a, b)| a + b).collect();
                if sum == beta {
                    return 1;
                }
            }
        }
        0
    }

    /// dim of the σ-eigenspace for ω^i on ⊕_{β ∈ O} g_β.
    pub fn orbit_eigen_dim(&self, rep: &[i64], orbit_size: usize, i: i64) -> usize {
        let m = self.order() as i64;
        let free = orbit_size as i64 == m;
        usize::from(free || self.fixed_root_eigen(rep) as i64 == i.rem_euclid(m))
    }

    /// Dimensions of the twisted root spaces π(α) + iδ with |i| ≤ b, plus the kδ rows.
    pub fn affinized_root_data(&self, b: i64) -> Result<Vec<AffinizedRow>> {
        let table = self.orbits();
        let mut rows = Vec::new();
        let l = self.host().rank();
        for i in -b..=b {
            let dim = if i == 0 { self.cartan_projection_rank(0) } else { self.isotropic_dim(i)?.dim };
            rows.push(AffinizedRow { pi: vec!["0".into(); l], i, dim, isotropic: true, orbit_rep: None });
        }
        for o in &table.orbits {
            let pi = self.pi0(&o.rep);
            for i in -b..=b {
                let dim = self.orbit_eigen_dim(&o.rep, o.members.len(), i);
                if dim > 0 {
                    rows.push(AffinizedRow {
                        pi: pi.iter().map(crate::arith::rational::fmt_rat).collect(),
                        i,
                        dim,
                        isotropic: false,
                        orbit_rep: Some(o.rep.clone()),
                    });
                }
            }
        }
        Ok(rows)
    }

    /// dim g^{ī} for each residue i, from the orbit data; sums to dim g.
    pub fn graded_dims(&self) -> Vec<usize> {
        let m = self.order() as i64;
        let table = self.orbits();
        (0..m)
            .map(|i| {
                let cartan = self.cartan_projection_rank(i);
                let roots: usize =
                    table.orbits.iter().map(|o| self.orbit_eigen_dim(&o.rep, o.members.len(), i)).sum();
                cartan + roots
            })
            .collect()
    }
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}
