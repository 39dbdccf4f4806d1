//! Eigenprojections π_k = (1/m) Σ_i ω^{-ik} σ^i.

use num_traits::Zero;
use serde::Serialize;

use crate::arith::cyclotomic::{is_prime, Cyclotomic};
use crate::arith::rational::{int, Rational};
use crate::error::{Error, Result};
use crate::finroots::{DiagramAutomorphism, FiniteRootSystem};

#[derive(Clone, Debug)]
pub struct TwistDatum {
    host: FiniteRootSystem,
    sigma: DiagramAutomorphism,
}

/// π_k of a vector, in simple-root coordinates over Q(ω).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProjectionVector {
    pub k: u32,
    pub coords: Vec<Cyclotomic>,
}

impl ProjectionVector {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Cyclotomic::is_zero)
    }

    pub fn conj(&self) -> ProjectionVector {
        let m = self.coords.first().map_or(1, Cyclotomic::order);
        ProjectionVector { k: (m - self.k) % m.max(1), coords: self.coords.iter().map(Cyclotomic::conj).collect() }
    }

    /// Rational coordinates, if every entry lies in Q.
    pub fn to_rational(&self) -> Option<Vec<Rational>> {
        self.coords.iter().map(Cyclotomic::to_rational).collect()
    }

    pub fn scale(&self, c: &Cyclotomic) -> ProjectionVector {
        ProjectionVector { k: self.k, coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, o: &ProjectionVector) -> ProjectionVector {
        ProjectionVector { k: self.k, coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    /// ε-coordinates over Q(ω).
    pub fn eps(&self, host: &FiniteRootSystem) -> Vec<Cyclotomic> {
        let m = self.coords.first().map_or(1, Cyclotomic::order);
        let mut v = vec![Cyclotomic::zero(m); host.eps_dim()];
        for (c, a) in self.coords.iter().zip(host.simple_roots_eps()) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(a) {
                if !y.is_zero() {
                    *x = &*x + &c.scale(y);
                }
            }
        }
        v
    }
}

impl TwistDatum {
    /// Only σ of prime order (or the identity) is supported.
    pub fn new(host: FiniteRootSystem, sigma: DiagramAutomorphism) -> Result<Self> {
        let m = sigma.order();
        if m != 1 && !is_prime(m) {
            return Err(Error::NonPrimeOrder(m));
        }
        if sigma.permutation().len() != host.rank() {
            return Err(Error::RankMismatch { expected: host.rank(), got: sigma.permutation().len() });
        }
        Ok(TwistDatum { host, sigma })
    }

    pub fn host(&self) -> &FiniteRootSystem {
        &self.host
    }

    pub fn sigma(&self) -> &DiagramAutomorphism {
        &self.sigma
    }

    pub fn order(&self) -> u32 {
        self.sigma.order()
    }

    pub fn omega(&self) -> Cyclotomic {
        Cyclotomic::omega_pow(self.order(), 1)
    }

    fn residue(&self, k: i64) -> u32 {
        k.rem_euclid(self.order() as i64) as u32
    }

    /// π_k(v) for v in simple coordinates; k is reduced mod m.
    pub fn pi_k_rat(&self, v: &[Rational], k: i64) -> ProjectionVector {
        let m = self.order();
        let k = self.residue(k);
        let mut acc = vec![Cyclotomic::zero(m); v.len()];
        let mut w = v.to_vec();
        let inv_m = Rational::new(1.into(), (m as i64).into());
        for i in 0..m as i64 {
            let c = Cyclotomic::omega_pow(m, -i * k as i64).scale(&inv_m);
            for (a, x) in acc.iter_mut().zip(&w) {
                if !x.is_zero() {
                    *a = &*a + &c.scale(x);
                }
            }
            w = self.sigma.apply(&w);
        }
        ProjectionVector { k, coords: acc }
    }

    pub fn pi_k(&self, v: &[i64], k: i64) -> ProjectionVector {
        let r: Vec<Rational> = v.iter().map(|&x| int(x)).collect();
        self.pi_k_rat(&r, k)
    }

    /// π = π_0, rational.
    pub fn pi0(&self, v: &[i64]) -> Vec<Rational> {
        self.pi_k(v, 0).to_rational().expect("π_0 is rational")
    }

    /// σ applied to a cyclotomic vector.
    pub fn apply_sigma(&self, p: &ProjectionVector) -> ProjectionVector {
        let m = self.order();
        let mut out = vec![Cyclotomic::zero(m); p.coords.len()];
        for (i, x) in p.coords.iter().enumerate() {
            out[self.sigma.permutation()[i]] = x.clone();
        }
        ProjectionVector { k: p.k, coords: out }
    }

    /// Bilinear extension of the form to Q(ω)-vectors.
    pub fn form_cyc(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let m = self.order();
        let g = self.host.gram();
        let mut s = Cyclotomic::zero(m);
        for i in 0..a.len() {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..b.len() {
                if g[i][j] != 0 && !b[j].is_zero() {
                    s = &s + &(&a[i] * &b[j]).scale(&int(g[i][j]));
                }
            }
        }
        s
    }

    /// (π(α), π(α)) ≠ 0.
    pub fn in_r_pi(&self, alpha: &[i64]) -> bool {
        let p = self.pi0(alpha);
        !self.host.form_rat(&p, &p).is_zero()
    }
}
