//! Toroidal algebra sl_{ℓ+1} ⊗ A ⊕ C ⊕ D with the trace form.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::matrix::SparseSpan;
use crate::arith::rational::{fmt_rat, int};
use crate::arith::Rational;
use crate::error::{fmt_vec, Error, Result};
use crate::finroots::{build_finite, CartanType};

pub type SparseMatrix = BTreeMap<(usize, usize), Rational>;

pub fn matrix_unit(i: usize, j: usize) -> SparseMatrix {
    BTreeMap::from([((i, j), Rational::one())])
}

fn mat_add_scaled(acc: &mut SparseMatrix, m: &SparseMatrix, c: &Rational) {
    for (k, v) in m {
        let e = acc.entry(*k).or_insert_with(Rational::zero);
        *e += v * c;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

fn mat_mul(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    let mut out = SparseMatrix::new();
    for (&(i, j), x) in a {
        for (&(j2, k), y) in b.range((j, 0)..(j + 1, 0)) {
            debug_assert_eq!(j, j2);
            let e = out.entry((i, k)).or_insert_with(Rational::zero);
            *e += x * y;
            if e.is_zero() {
                out.remove(&(i, k));
            }
        }
    }
    out
}

fn commutator(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
    let mut c = mat_mul(a, b);
    mat_add_scaled(&mut c, &mat_mul(b, a), &int(-1));
    c
}

fn trace_form(a: &SparseMatrix, b: &SparseMatrix) -> Rational {
    mat_mul(a, b).iter().filter(|((i, j), _)| i == j).map(|(_, v)| v.clone()).sum()
}

/// Σ a_λ ⊗ t^λ + Σ c_i c_i + Σ d_i d_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToroidalElement {
    l: usize,
    nu: usize,
    loops: BTreeMap<Vec<i64>, SparseMatrix>,
    central: Vec<Rational>,
    deriv: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    Loop(Vec<i64>, usize, usize),
    Central(usize),
    Deriv(usize),
}

impl ToroidalElement {
    pub fn zero(l: usize, nu: usize) -> Self {
        ToroidalElement { l, nu, loops: BTreeMap::new(), central: vec![Rational::zero(); nu], deriv: vec![Rational::zero(); nu] }
    }

    /// a ⊗ t^λ; `a` must be traceless of size ℓ+1.
    pub fn loop_elt(l: usize, a: SparseMatrix, lambda: Vec<i64>) -> Result<Self> {
        if a.keys().any(|&(i, j)| i > l || j > l) {
            return Err(Error::DimensionMismatch(format!("matrix entry outside sl_{}", l + 1)));
        }
        let tr: Rational = a.iter().filter(|((i, j), _)| i == j).map(|(_, v)| v.clone()).sum();
        if !tr.is_zero() {
            return Err(Error::Precondition("matrix part must be traceless".into()));
        }
        let mut x = Self::zero(l, lambda.len());
        let a: SparseMatrix = a.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if !a.is_empty() {
            x.loops.insert(lambda, a);
        }
        Ok(x)
    }

    pub fn central(l: usize, nu: usize, i: usize) -> Self {
        let mut x = Self::zero(l, nu);
        x.central[i] = Rational::one();
        x
    }

    pub fn derivation(l: usize, nu: usize, i: usize) -> Self {
        let mut x = Self::zero(l, nu);
        x.deriv[i] = Rational::one();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.loops.is_empty() && self.central.iter().all(Zero::is_zero) && self.deriv.iter().all(Zero::is_zero)
    }

    pub fn central_part(&self) -> &[Rational] {
        &self.central
    }

    pub fn loop_part(&self, lambda: &[i64]) -> Option<&SparseMatrix> {
        self.loops.get(lambda)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.l != o.l || self.nu != o.nu {
            return Err(Error::DimensionMismatch(format!(
                "sl_{} with ν={} vs sl_{} with ν={}",
                self.l + 1,
                self.nu,
                o.l + 1,
                o.nu
            )));
        }
        Ok(())
    }

    fn add_loop(&mut self, lambda: Vec<i64>, a: &SparseMatrix, c: &Rational) {
        let e = self.loops.entry(lambda.clone()).or_default();
        mat_add_scaled(e, a, c);
        if e.is_empty() {
            self.loops.remove(&lambda);
        }
    }

    pub fn add_scaled(&self, o: &Self, c: &Rational) -> Result<Self> {
        self.check(o)?;
        let mut x = self.clone();
        for (lam, a) in &o.loops {
            x.add_loop(lam.clone(), a, c);
        }
        for (p, q) in x.central.iter_mut().zip(&o.central) {
            *p += q * c;
        }
        for (p, q) in x.deriv.iter_mut().zip(&o.deriv) {
            *p += q * c;
        }
        Ok(x)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.add_scaled(o, &Rational::one())
    }

    fn flatten(&self) -> BTreeMap<Key, Rational> {
        let mut v = BTreeMap::new();
        for (lam, a) in &self.loops {
            for (&(i, j), c) in a {
                v.insert(Key::Loop(lam.clone(), i, j), c.clone());
            }
        }
        for (i, c) in self.central.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            v.insert(Key::Central(i), c.clone());
        }
        for (i, c) in self.deriv.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            v.insert(Key::Deriv(i), c.clone());
        }
        v
    }
}

impl std::fmt::Display for ToroidalElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (lam, a) in &self.loops {
            let m: Vec<String> = a.iter().map(|((i, j), c)| format!("{}·e{}{}", fmt_rat(c), i + 1, j + 1)).collect();
            parts.push(format!("({})⊗t^{}", m.join(" + "), fmt_vec(lam)));
        }
        for (i, c) in self.central.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            parts.push(format!("{}·c{}", fmt_rat(c), i + 1));
        }
        for (i, c) in self.deriv.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            parts.push(format!("{}·d{}", fmt_rat(c), i + 1));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// [a⊗t^λ, a'⊗t^λ'] = [a,a']⊗t^{λ+λ'} + δ_{λ,-λ'}(a,a')Σλ_i c_i, [d, a⊗t^λ] = a⊗d(t^λ), C central.
pub fn toroidal_bracket(x: &ToroidalElement, y: &ToroidalElement) -> Result<ToroidalElement> {
    x.check(y)?;
    let mut out = ToroidalElement::zero(x.l, x.nu);
    for (lx, a) in &x.loops {
        for (ly, b) in &y.loops {
            let sum: Vec<i64> = lx.iter().zip(ly).map(|(p, q)| p + q).collect();
            out.add_loop(sum.clone(), &commutator(a, b), &Rational::one());
            if sum.iter().all(|&s| s == 0) {
                let f = trace_form(a, b);
                for (c, li) in out.central.iter_mut().zip(lx) {
                    *c += &f * int(*li);
                }
            }
        }
    }
    for (ly, b) in &y.loops {
        let ev: Rational = x.deriv.iter().zip(ly).map(|(p, l)| p * int(*l)).sum();
        if !ev.is_zero() {
            out.add_loop(ly.clone(), b, &ev);
        }
    }
    for (lx, a) in &x.loops {
        let ev: Rational = y.deriv.iter().zip(lx).map(|(p, l)| p * int(*l)).sum();
        if !ev.is_zero() {
            out.add_loop(lx.clone(), a, &-ev);
        }
    }
    Ok(out)
}

/// (a⊗t^λ + c + d, a'⊗t^λ' + c' + d') = δ_{λ,-λ'} tr(aa') + c(d') + c'(d).
pub fn toroidal_form(x: &ToroidalElement, y: &ToroidalElement) -> Result<Rational> {
    x.check(y)?;
    let mut s = Rational::zero();
    for (lx, a) in &x.loops {
        let neg: Vec<i64> = lx.iter().map(|v| -v).collect();
        if let Some(b) = y.loops.get(&neg) {
            s += trace_form(a, b);
        }
    }
    for i in 0..x.nu {
        s += &x.central[i] * &y.deriv[i] + &y.central[i] * &x.deriv[i];
    }
    Ok(s)
}

/// The matrix unit spanning the root space of an A_ℓ root given in simple coordinates.
pub fn root_vector(root: &[i64]) -> SparseMatrix {
    let p = root.iter().position(|&c| c != 0).expect("nonzero root");
    let q = root.iter().rposition(|&c| c != 0).unwrap();
    if root[p] > 0 {
        matrix_unit(p, q + 1)
    } else {
        matrix_unit(q + 1, p)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IsotropicSpace {
    pub family: String,
    pub l: usize,
    pub nu: usize,
    pub k: i64,
    pub delta: Vec<i64>,
    pub dim: usize,
    pub basis: Vec<String>,
}

/// Span of [E_{α+rδ}, E_{-α+sδ}] over α ∈ Ṙ and r + s = k with |r| ≤ B.
pub fn toroidal_isotropic_space(l: usize, nu: usize, delta: &[i64], k: i64, b: i64) -> Result<IsotropicSpace> {
    if k == 0 {
        return Err(Error::Precondition("k must be nonzero".into()));
    }
    if delta.len() != nu {
        return Err(Error::RankMismatch { expected: nu, got: delta.len() });
    }
    if delta.iter().all(|&x| x == 0) {
        return Err(Error::Precondition("δ must be nonzero".into()));
    }
    let fin = build_finite(CartanType::A, l)?;
    let mut span = SparseSpan::new();
    let mut basis = Vec::new();
    for a in fin.roots() {
        let neg: Vec<i64> = a.iter().map(|x| -x).collect();
        for r in -b..=b {
            let s = k - r;
            let x = ToroidalElement::loop_elt(l, root_vector(a), delta.iter().map(|d| r * d).collect())?;
            let y = ToroidalElement::loop_elt(l, root_vector(&neg), delta.iter().map(|d| s * d).collect())?;
            let z = toroidal_bracket(&x, &y)?;
            if span.insert(z.flatten()) {
                basis.push(z.to_string());
            }
        }
    }
    Ok(IsotropicSpace { family: "toroidal".into(), l, nu, k, delta: delta.to_vec(), dim: span.dim(), basis })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e() -> SparseMatrix {
        matrix_unit(0, 1)
    }
    fn f() -> SparseMatrix {
        matrix_unit(1, 0)
    }

    #[test]
    fn sl2_bracket_with_cocycle() {
        let x = ToroidalElement::loop_elt(1, e(), vec![1, 0]).unwrap();
        let y = ToroidalElement::loop_elt(1, f(), vec![-1, 0]).unwrap();
        let z = toroidal_bracket(&x, &y).unwrap();
        let mut h = matrix_unit(0, 0);
        h.insert((1, 1), int(-1));
        let want = ToroidalElement::loop_elt(1, h, vec![0, 0])
            .unwrap()
            .add(&ToroidalElement::central(1, 2, 0))
            .unwrap();
        assert_eq!(z, want);
    }

    #[test]
    fn derivation_and_central() {
        let x = ToroidalElement::loop_elt(1, e(), vec![1, 0]).unwrap();
        let d1 = ToroidalElement::derivation(1, 2, 0);
        assert_eq!(toroidal_bracket(&d1, &x).unwrap(), x);
        let c1 = ToroidalElement::central(1, 2, 0);
        assert!(toroidal_bracket(&c1, &x).unwrap().is_zero());
        assert!(toroidal_bracket(&x, &c1).unwrap().is_zero());
    }

    #[test]
    fn isotropic_dims() {
        assert_eq!(toroidal_isotropic_space(2, 2, &[1, 0], 1, 2).unwrap().dim, 2);
        assert_eq!(toroidal_isotropic_space(1, 2, &[1, 1], 3, 2).unwrap().dim, 1);
        assert!(toroidal_isotropic_space(1, 2, &[1, 1], 0, 2).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let x = ToroidalElement::loop_elt(1, e(), vec![1, 0]).unwrap();
        let y = ToroidalElement::loop_elt(1, e(), vec![1]).unwrap();
        assert!(toroidal_bracket(&x, &y).is_err());
    }
}
