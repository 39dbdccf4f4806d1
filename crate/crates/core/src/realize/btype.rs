//! The type B_ℓ matrix algebra {X ∈ M_n(A) : G⁻¹XᵗG = -X}, n = 2ℓ + m.

use std::collections::BTreeMap;

use num_traits::One;
use serde::Serialize;

use crate::arith::matrix::SparseSpan;
use crate::arith::rational::{fmt_rat, int};
use crate::arith::{LaurentPoly, Rational};
use crate::ears::{EarsDatum, EarsRoot, RootSet};
use crate::error::{fmt_vec, Error, Result};
use crate::finroots::{build_finite, CartanType};
use crate::lattice::{Lattice, Semilattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    n: usize,
    nvars: usize,
    entries: BTreeMap<(usize, usize), LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(n: usize, nvars: usize) -> Self {
        LaurentMatrix { n, nvars, entries: BTreeMap::new() }
    }

    /// c·t^e·e_{pq}, indices 0-based.
    pub fn unit(n: usize, p: usize, q: usize, e: Vec<i64>, c: Rational) -> Self {
        let mut m = Self::zero(n, e.len());
        m.add_entry(p, q, &LaurentPoly::monomial(e, c));
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, p: usize, q: usize) -> Option<&LaurentPoly> {
        self.entries.get(&(p, q))
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), LaurentPoly> {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn add_entry(&mut self, p: usize, q: usize, v: &LaurentPoly) {
        let cur = self.entries.remove(&(p, q)).unwrap_or_else(|| LaurentPoly::zero(self.nvars));
        let s = cur.try_add(v).expect("same number of variables");
        if !s.is_zero() {
            self.entries.insert((p, q), s);
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n != o.n || self.nvars != o.nvars {
            return Err(Error::DimensionMismatch(format!("{}×{} vs {}×{}", self.n, self.n, o.n, o.n)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut m = self.clone();
        for ((p, q), v) in &o.entries {
            m.add_entry(*p, *q, v);
        }
        Ok(m)
    }

    pub fn neg(&self) -> Self {
        LaurentMatrix { n: self.n, nvars: self.nvars, entries: self.entries.iter().map(|(k, v)| (*k, v.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut m = Self::zero(self.n, self.nvars);
        for (&(i, j), x) in &self.entries {
            for (&(_, k), y) in o.entries.range((j, 0)..(j + 1, 0)) {
                m.add_entry(i, k, &x.try_mul(y)?);
            }
        }
        Ok(m)
    }

    pub fn transpose(&self) -> Self {
        LaurentMatrix { n: self.n, nvars: self.nvars, entries: self.entries.iter().map(|(&(p, q), v)| ((q, p), v.clone())).collect() }
    }

    fn flatten(&self) -> BTreeMap<(usize, usize, Vec<i64>), Rational> {
        let mut out = BTreeMap::new();
        for (&(p, q), v) in &self.entries {
            for (e, c) in v.terms() {
                out.insert((p, q, e.clone()), c.clone());
            }
        }
        out
    }
}

impl std::fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (&(p, q), v) in &self.entries {
            for (e, c) in v.terms() {
                let coef = if c.is_one() {
                    String::new()
                } else if *c == -Rational::one() {
                    "-".into()
                } else {
                    format!("{}·", fmt_rat(c))
                };
                parts.push(format!("{coef}t^{}e{},{}", fmt_vec(e), p + 1, q + 1));
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
        }
    }
}

/// XY - YX; no cocycle term.
pub fn bl_bracket(x: &LaurentMatrix, y: &LaurentMatrix) -> Result<LaurentMatrix> {
    x.mul(y)?.sub(&y.mul(x)?)
}

/// ℓ ≥ 2, S = ∪_{r=1}^m (τ_r + 2Z^ν) with τ_1 = 0, L = 2Z^ν.
#[derive(Clone, Debug)]
pub struct BlDatum {
    l: usize,
    nu: usize,
    taus: Vec<Vec<i64>>,
    datum: EarsDatum,
}

impl BlDatum {
    pub fn new(l: usize, s: Semilattice) -> Result<Self> {
        if l < 2 {
            return Err(Error::InvalidCartanType("B".into(), l));
        }
        let nu = s.dim();
        if !s.ambient().is_standard() {
            return Err(Error::Precondition("S must live in the standard lattice Z^ν".into()));
        }
        let taus = s.reps().to_vec();
        if taus.first().is_none_or(|t| t.iter().any(|&x| x != 0)) {
            return Err(Error::Precondition("the first coset representative must be 0".into()));
        }
        let v = s.validate();
        if !v.is_ok() {
            return Err(Error::Precondition(format!("invalid S: {}", v.violations[0].witness)));
        }
        let two: Vec<Vec<i64>> = (0..nu).map(|i| (0..nu).map(|j| 2 * (i == j) as i64).collect()).collect();
        let lsl = Semilattice::full(Lattice::new(nu, two)?);
        let datum = EarsDatum::new(build_finite(CartanType::B, l)?, s, Some(lsl))?;
        Ok(BlDatum { l, nu, taus, datum })
    }

    pub fn datum(&self) -> &EarsDatum {
        &self.datum
    }

    pub fn size(&self) -> usize {
        2 * self.l + self.taus.len()
    }

    /// λ_p: 0 for the first 2ℓ indices, then τ_1..τ_m.
    fn lambda(&self, p: usize) -> Vec<i64> {
        if p < 2 * self.l {
            vec![0; self.nu]
        } else {
            self.taus[p - 2 * self.l].clone()
        }
    }

    fn block_g(&self, inverse: bool) -> LaurentMatrix {
        let n = self.size();
        let l = self.l;
        let mut g = LaurentMatrix::zero(n, self.nu);
        for i in 0..l {
            g.add_entry(i, l + i, &LaurentPoly::one(self.nu));
            g.add_entry(l + i, i, &LaurentPoly::one(self.nu));
        }
        for (r, t) in self.taus.iter().enumerate() {
            let e = if inverse { t.iter().map(|x| -x).collect() } else { t.clone() };
            g.add_entry(2 * l + r, 2 * l + r, &LaurentPoly::monomial(e, Rational::one()));
        }
        g
    }

    pub fn g(&self) -> LaurentMatrix {
        self.block_g(false)
    }

    /// G⁻¹XᵗG = -X.
    pub fn in_algebra(&self, x: &LaurentMatrix) -> bool {
        let lhs = self.block_g(true).mul(&x.transpose()).and_then(|m| m.mul(&self.g()));
        lhs.is_ok_and(|m| m == x.neg())
    }

    /// deg(t^σ e_pq) = 2σ + λ_p - λ_q, if X is homogeneous.
    pub fn degree(&self, x: &LaurentMatrix) -> Option<Vec<i64>> {
        let mut deg: Option<Vec<i64>> = None;
        for (&(p, q), v) in &x.entries {
            for e in v.terms().keys() {
                let d: Vec<i64> = (0..self.nu).map(|i| 2 * e[i] + self.lambda(p)[i] - self.lambda(q)[i]).collect();
                match &deg {
                    None => deg = Some(d),
                    Some(d0) if *d0 != d => return None,
                    _ => {}
                }
            }
        }
        deg
    }

    fn mono(&self, p: usize, q: usize, e: &[i64], c: i64) -> LaurentMatrix {
        LaurentMatrix::unit(self.size(), p, q, e.to_vec(), int(c))
    }

    /// X(γ,i,r) = t^γ e_{2ℓ+r,ℓ+i} - t^{γ+τ_r} e_{i,2ℓ+r}, indices 0-based.
    pub fn x_gen(&self, gamma: &[i64], i: usize, r: usize) -> LaurentMatrix {
        let l = self.l;
        let shifted: Vec<i64> = gamma.iter().zip(&self.taus[r]).map(|(a, b)| a + b).collect();
        self.mono(2 * l + r, l + i, gamma, 1).add(&self.mono(i, 2 * l + r, &shifted, -1)).unwrap()
    }

    /// X̄(γ,i,r) = t^γ e_{2ℓ+r,i} - t^{γ+τ_r} e_{ℓ+i,2ℓ+r}.
    pub fn xbar_gen(&self, gamma: &[i64], i: usize, r: usize) -> LaurentMatrix {
        let l = self.l;
        let shifted: Vec<i64> = gamma.iter().zip(&self.taus[r]).map(|(a, b)| a + b).collect();
        self.mono(2 * l + r, i, gamma, 1).add(&self.mono(l + i, 2 * l + r, &shifted, -1)).unwrap()
    }

    /// Generators of the root space E_{α̇+λ}.
    pub fn root_space(&self, root: &EarsRoot) -> Result<Vec<LaurentMatrix>> {
        if root.is_isotropic() {
            return Err(Error::Precondition("isotropic roots have no generator list here".into()));
        }
        if !self.datum.membership(root)? {
            return Err(Error::NotARoot(root.to_string()));
        }
        let fin = self.datum.finite();
        let eps: Vec<i64> =
            fin.eps(&root.finite).iter().map(|x| crate::arith::rational::as_i64(x).expect("integral ε-coordinates")).collect();
        let nz: Vec<(usize, i64)> = eps.iter().copied().enumerate().filter(|(_, c)| *c != 0).collect();
        let lam = &root.lattice;
        let l = self.l;
        Ok(match nz.as_slice() {
            [(i, c)] => {
                let r = self.taus.iter().position(|t| (0..self.nu).all(|k| (lam[k] - t[k]).rem_euclid(2) == 0)).unwrap();
                let gamma: Vec<i64> = (0..self.nu).map(|k| (lam[k] - self.taus[r][k]) / 2).collect();
                if *c > 0 {
                    vec![self.x_gen(&gamma, *i, r)]
                } else {
                    vec![self.xbar_gen(&gamma, *i, r)]
                }
            }
            [(i, a), (j, b)] => {
                let mu: Vec<i64> = lam.iter().map(|x| x / 2).collect();
                let (i, j) = (*i, *j);
                let m = match (a, b) {
                    (1, -1) => self.mono(i, j, &mu, 1).sub(&self.mono(l + j, l + i, &mu, 1))?,
                    (-1, 1) => self.mono(j, i, &mu, 1).sub(&self.mono(l + i, l + j, &mu, 1))?,
                    (1, 1) => self.mono(i, l + j, &mu, 1).sub(&self.mono(j, l + i, &mu, 1))?,
                    _ => self.mono(l + i, j, &mu, 1).sub(&self.mono(l + j, i, &mu, 1))?,
                };
                vec![m]
            }
            _ => unreachable!("B_ℓ roots are ±ε_i or ±ε_i±ε_j"),
        })
    }

    /// dim of the span of [E_β, E_{-β+kσ}] over nonisotropic β with lattice part in the box.
    pub fn isotropic_dim(&self, sigma: &[i64], k: i64, b: i64) -> Result<BlIsotropic> {
        if k == 0 {
            return Err(Error::Precondition("k must be nonzero".into()));
        }
        if sigma.len() != self.nu {
            return Err(Error::RankMismatch { expected: self.nu, got: sigma.len() });
        }
        if sigma.iter().all(|&x| x == 0) || !self.datum.r0().contains(sigma) {
            return Err(Error::Precondition(format!("σ = {} is not a nonzero element of R⁰", fmt_vec(sigma))));
        }
        let ks: Vec<i64> = sigma.iter().map(|x| k * x).collect();
        let mut span = SparseSpan::new();
        let mut basis = Vec::new();
        for beta in self.datum.enumerate(b).into_iter().filter(|x| !x.is_isotropic()) {
            let partner = EarsRoot::new(
                beta.finite.iter().map(|x| -x).collect(),
                beta.lattice.iter().zip(&ks).map(|(x, y)| y - x).collect(),
            );
            if !self.datum.contains(&partner) {
                continue;
            }
            for x in self.root_space(&beta)? {
                for y in self.root_space(&partner)? {
                    let z = bl_bracket(&x, &y)?;
                    if span.insert(z.flatten()) {
                        basis.push(z.to_string());
                    }
                }
            }
        }
        let in_l = ks.iter().all(|x| x % 2 == 0);
        Ok(BlIsotropic {
            family: "bl".into(),
            l: self.l,
            nu: self.nu,
            k,
            sigma: sigma.to_vec(),
            dim: span.dim(),
            expected: if in_l { self.l } else { 1 },
            basis,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlIsotropic {
    pub family: String,
    pub l: usize,
    pub nu: usize,
    pub k: i64,
    pub sigma: Vec<i64>,
    pub dim: usize,
    /// ℓ if kσ ∈ L, else 1.
    pub expected: usize,
    pub basis: Vec<String>,
}
