//! ⟨S̃⟩ ∩ R⁰ = S̃ + S̃ for S̃ = S̃₁ ⊕ Λ′₂ inside S = S₁ ⊕ Λ₂.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::datum::{EarsDatum, RootSet};
use crate::error::{fmt_vec, Error, Result};
use crate::lattice::{box_points, subgroup_span, Lattice, Semilattice, Subgroup};
use crate::report::Report;

/// Λ = Λ₁ ⊕ Λ₂, each given by a basis in Z^ν.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub lambda1: Vec<Vec<i64>>,
    pub lambda2: Vec<Vec<i64>>,
}

impl Decomposition {
    fn combined(&self, nu: usize) -> Result<Lattice> {
        let mut b = self.lambda1.clone();
        b.extend(self.lambda2.iter().cloned());
        Lattice::new(nu, b)
    }

    /// Λ₁ ≠ 0 and Λ₁ ⊕ Λ₂ is the ambient lattice of S.
    pub fn check_against(&self, s: &Semilattice) -> Result<()> {
        if self.lambda1.is_empty() {
            return Err(Error::Precondition("Λ₁ must be nonzero".into()));
        }
        let c = self.combined(s.dim())?;
        if !c.same_lattice(s.ambient()) {
            return Err(Error::Precondition("Λ₁ ⊕ Λ₂ is not the lattice spanned by S".into()));
        }
        Ok(())
    }

    /// (v₁, v₂) with v = v₁ + v₂, v_i ∈ Λ_i.
    pub fn split(&self, v: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
        self.split_in(&self.combined(v.len()).ok()?, v)
    }

    /// `split` against a precomputed Λ₁ ⊕ Λ₂.
    fn split_in(&self, combined: &Lattice, v: &[i64]) -> Option<(Vec<i64>, Vec<i64>)> {
        let c = combined.coords(v)?;
        let r1 = self.lambda1.len();
        let part = |basis: &[Vec<i64>], cs: &[i64]| -> Vec<i64> {
            let mut out = vec![0; v.len()];
            for (ci, b) in cs.iter().zip(basis) {
                for (x, y) in out.iter_mut().zip(b) {
                    *x += ci * y;
                }
            }
            out
        };
        Some((part(&self.lambda1, &c[..r1]), part(&self.lambda2, &c[r1..])))
    }

    fn combination(basis: &[Vec<i64>], mask: u64, nu: usize) -> Vec<i64> {
        let mut v = vec![0; nu];
        for (i, b) in basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x += y;
                }
            }
        }
        v
    }

    /// S = S₁ ⊕ Λ₂ with S₁ = S ∩ Λ₁, tested on every coset of 2Λ.
    pub fn s_splits(&self, s: &Semilattice) -> bool {
        let nu = s.dim();
        let mut all = self.lambda1.clone();
        all.extend(self.lambda2.iter().cloned());
        let r1 = self.lambda1.len();
        (0..1u64 << all.len()).all(|m| {
            let v = Self::combination(&all, m, nu);
            let v1 = Self::combination(&self.lambda1, m & ((1 << r1) - 1), nu);
            s.contains(&v) == s.contains(&v1)
        })
    }

    /// ind(S₁): nonzero cosets of 2Λ₁ inside S.
    pub fn s1_index(&self, s: &Semilattice) -> usize {
        let nu = s.dim();
        (0..1u64 << self.lambda1.len()).filter(|&m| s.contains(&Self::combination(&self.lambda1, m, nu))).count() - 1
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LemmaInput {
    pub decomposition: Decomposition,
    /// S̃₁, a semilattice in its own span inside Λ₁.
    pub s1_tilde: Semilattice,
    /// Basis of Λ′₂ ⊆ Λ₂ (may be empty).
    pub lambda2_prime: Vec<Vec<i64>>,
}

impl LemmaInput {
    /// S̃ = (S ∩ U₁) ⊕ Λ′₂ for a lattice U₁ ⊆ Λ₁. Such S̃ always satisfy
    /// the hypotheses: S ∩ U₁ is stable under adding 2U₁ and 2Λ-elements.
    pub fn restricted(s: &Semilattice, decomposition: Decomposition, u1: &[Vec<i64>], lambda2_prime: Vec<Vec<i64>>) -> Result<Self> {
        let nu = s.dim();
        let u = Lattice::new(nu, u1.to_vec())?;
        let mut gens: Vec<Vec<i64>> = u1.iter().map(|b| b.iter().map(|x| 2 * x).collect()).collect();
        for m in 0..u.num_classes() {
            let y = u.class_vector(m);
            if s.contains(&y) {
                gens.push(y);
            }
        }
        let m1 = subgroup_span(nu, &gens)?.to_lattice();
        let reps: Vec<Vec<i64>> =
            (0..m1.num_classes()).map(|m| m1.class_vector(m)).filter(|v| s.contains(v)).collect();
        Ok(LemmaInput { decomposition, s1_tilde: Semilattice::new(m1, reps)?, lambda2_prime })
    }
}

/// Hypotheses are checked exactly at coset level; the equality itself is
/// brute-forced on both sides inside the box.
pub fn semilattice_closure_check(r: &EarsDatum, input: &LemmaInput, b: i64) -> Report {
    let mut rep = Report::new();
    let s = r.s();
    let nu = r.nu();
    let d = &input.decomposition;
    let s1t = &input.s1_tilde;

    match d.check_against(s) {
        Err(e) => rep.fail("hyp.decomposition", e.to_string()),
        Ok(()) => {
            if !d.s_splits(s) {
                rep.fail("hyp.s_splits", "S ≠ S₁ ⊕ Λ₂");
            }
            let ind1 = d.s1_index(s);
            if ind1 != d.lambda1.len() {
                rep.fail("hyp.index", format!("ind(S₁) = {ind1}, rank Λ₁ = {}", d.lambda1.len()));
            }
        }
    }
    if s1t.dim() != nu {
        rep.fail("hyp.rank", format!("S̃₁ lives in Z^{}, expected Z^{nu}", s1t.dim()));
        return rep;
    }
    for v in s1t.validate().violations {
        rep.fail(format!("hyp.s1_tilde.{}", v.check), v.witness);
    }
    let in_lambda1 = |v: &[i64]| d.split(v).is_some_and(|(_, v2)| v2.iter().all(|&x| x == 0));
    let in_lambda2 = |v: &[i64]| d.split(v).is_some_and(|(v1, _)| v1.iter().all(|&x| x == 0));
    for g in s1t.ambient().basis() {
        if !in_lambda1(g) {
            rep.fail("hyp.s1_tilde_in_lambda1", fmt_vec(g));
        }
    }
    for t in s1t.canonical_reps() {
        if !s.contains(&t) {
            rep.fail("hyp.s1_tilde_in_s1", format!("{} ∉ S", fmt_vec(&t)));
        }
    }
    // S̃₁ ∩ 2Λ₁ is the union of the cosets of 2⟨S̃₁⟩ whose representative lies in 2Λ₁
    let in_2lambda1 = |v: &[i64]| {
        let half: Option<Vec<i64>> = v.iter().map(|x| (x % 2 == 0).then_some(x / 2)).collect();
        half.is_some_and(|h| in_lambda1(&h))
    };
    let m1 = s1t.ambient();
    let even: Vec<u64> = s1t.classes().iter().copied().filter(|&c| in_2lambda1(&m1.class_vector(c))).collect();
    for &c in &even {
        for &c2 in s1t.classes() {
            if !s1t.classes().contains(&(c ^ c2)) {
                rep.fail(
                    "hyp.even_stable",
                    format!("{} + {} ∉ S̃₁", fmt_vec(&m1.class_vector(c)), fmt_vec(&m1.class_vector(c2))),
                );
            }
        }
    }
    for g in &input.lambda2_prime {
        if !in_lambda2(g) {
            rep.fail("hyp.lambda2_prime", format!("{} ∉ Λ₂", fmt_vec(g)));
        }
    }
    let l2p = match subgroup_span(nu, &input.lambda2_prime) {
        Ok(g) => g,
        Err(e) => {
            rep.fail("hyp.lambda2_prime", e.to_string());
            return rep;
        }
    };

    let Ok(combined) = d.combined(nu) else {
        rep.fail("hyp.decomposition", "Λ₁, Λ₂ do not form a lattice basis");
        return rep;
    };
    let in_tilde = |v: &[i64]| d.split_in(&combined, v).is_some_and(|(v1, v2)| s1t.contains(&v1) && l2p.contains(&v2));
    let mut gens = m1.basis().to_vec();
    gens.extend(input.lambda2_prime.iter().cloned());
    let span: Subgroup = match subgroup_span(nu, &gens) {
        Ok(g) => g,
        Err(e) => {
            rep.fail("span", e.to_string());
            return rep;
        }
    };
    let reach: i64 = m1.basis().iter().map(|g| g.iter().map(|x| x.abs()).max().unwrap_or(0)).sum();
    let wide = (2 * b + 2).max(b + reach);
    let tilde_wide: Vec<Vec<i64>> = box_points(nu, wide).into_iter().filter(|v| in_tilde(v)).collect();
    // η - a stays within wide + b
    let tilde_set: HashSet<Vec<i64>> = box_points(nu, wide + b).into_iter().filter(|v| in_tilde(v)).collect();

    let mut lhs_count = 0;
    for eta in box_points(nu, b) {
        let lhs = span.contains(&eta) && r.r0().contains(&eta);
        let rhs = tilde_wide.iter().any(|a| {
            let rest: Vec<i64> = eta.iter().zip(a).map(|(x, y)| x - y).collect();
            tilde_set.contains(&rest)
        });
        lhs_count += lhs as usize;
        match (lhs, rhs) {
            (true, false) => rep.fail("equality", format!("{} ∈ ⟨S̃⟩ ∩ R⁰ but ∉ S̃ + S̃", fmt_vec(&eta))),
            (false, true) => rep.fail("equality", format!("{} ∈ S̃ + S̃ but ∉ ⟨S̃⟩ ∩ R⁰", fmt_vec(&eta))),
            _ => {}
        }
    }
    rep.note(format!("{lhs_count} points of ⟨S̃⟩ ∩ R⁰ in box {b}"));
    rep
}
