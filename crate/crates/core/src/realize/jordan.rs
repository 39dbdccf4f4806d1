//! The A₁ Jordan torus J_S with x^σ·x^τ = Γ(σ,τ)x^{σ+τ}, and operators in Instrl(J).

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::rational::fmt_rat;
use crate::arith::Rational;
use crate::error::{fmt_vec, Error, Result};
use crate::lattice::Semilattice;
use crate::report::Report;

/// Σ c_σ x^σ over σ ∈ S.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JordanElement {
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl JordanElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<i64>, c: &Rational) {
        let v = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add_scaled(&mut self, o: &JordanElement, c: &Rational) {
        for (e, v) in &o.terms {
            self.add_term(e.clone(), &(v * c));
        }
    }
}

impl std::fmt::Display for JordanElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{}·x^{}", fmt_rat(c), fmt_vec(e))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Debug)]
pub struct JordanTorus {
    s: Semilattice,
}

impl JordanTorus {
    /// S in the standard lattice, with representatives τ_0 = 0, τ_1, …, τ_m in this order.
    pub fn new(s: Semilattice) -> Result<Self> {
        if !s.ambient().is_standard() {
            return Err(Error::Precondition("S must live in the standard lattice Z^ν".into()));
        }
        if s.reps().first().is_none_or(|t| t.iter().any(|&x| x != 0)) {
            return Err(Error::Precondition("τ_0 must be 0".into()));
        }
        Ok(JordanTorus { s })
    }

    pub fn semilattice(&self) -> &Semilattice {
        &self.s
    }

    pub fn tau(&self, i: usize) -> &[i64] {
        &self.s.reps()[i]
    }

    pub fn num_cosets(&self) -> usize {
        self.s.reps().len()
    }

    /// The index i with σ ∈ S_i, if σ ∈ S.
    pub fn coset(&self, sigma: &[i64]) -> Option<usize> {
        self.s.coset_index(sigma)
    }

    /// Γ(S_i, S_j) = 1 iff both are cosets of S and (i = j or ij = 0).
    pub fn gamma(&self, sigma: &[i64], tau: &[i64]) -> bool {
        match (self.coset(sigma), self.coset(tau)) {
            (Some(i), Some(j)) => i == j || i == 0 || j == 0,
            _ => false,
        }
    }

    pub fn monomial(&self, sigma: &[i64]) -> JordanElement {
        let mut x = JordanElement::zero();
        if self.s.contains(sigma) {
            x.add_term(sigma.to_vec(), &Rational::one());
        }
        x
    }

    pub fn mul(&self, x: &JordanElement, y: &JordanElement) -> JordanElement {
        let mut out = JordanElement::zero();
        for (a, c) in &x.terms {
            for (b, d) in &y.terms {
                if self.gamma(a, b) {
                    let e: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                    out.add_term(e, &(c * d));
                }
            }
        }
        out
    }

    /// Product with terms outside the box dropped; the flag records whether any were.
    pub fn mul_in_box(&self, x: &JordanElement, y: &JordanElement, b: i64) -> (JordanElement, bool) {
        let mut p = self.mul(x, y);
        let before = p.terms.len();
        p.terms.retain(|e, _| e.iter().all(|v| v.abs() <= b));
        let truncated = p.terms.len() != before;
        (p, truncated)
    }

    fn apply_term(&self, t: &OpTerm, gamma: &[i64]) -> JordanElement {
        let g = self.monomial(gamma);
        match t {
            OpTerm::L(s) => self.mul(&self.monomial(s), &g),
            OpTerm::Comm(s, u) => {
                let xs = self.monomial(s);
                let xu = self.monomial(u);
                let mut out = self.mul(&xs, &self.mul(&xu, &g));
                out.add_scaled(&self.mul(&xu, &self.mul(&xs, &g)), &-Rational::one());
                out
            }
        }
    }

    pub fn apply(&self, op: &TkkOperator, gamma: &[i64]) -> JordanElement {
        let mut out = JordanElement::zero();
        for (c, t) in &op.terms {
            out.add_scaled(&self.apply_term(t, gamma), c);
        }
        out
    }

    /// First γ ∈ S in the box where the operators differ.
    pub fn differ_on_box(&self, a: &TkkOperator, b: &TkkOperator, bx: i64) -> Option<Vec<i64>> {
        self.s.enumerate_box(bx).into_iter().find(|g| self.apply(a, g) != self.apply(b, g))
    }

    pub fn vanishes_on_box(&self, a: &TkkOperator, bx: i64) -> bool {
        self.s.enumerate_box(bx).iter().all(|g| self.apply(a, g).is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum OpTerm {
    /// L_{x^σ}
    L(Vec<i64>),
    /// [L_{x^σ}, L_{x^τ}]
    Comm(Vec<i64>, Vec<i64>),
}

/// A finite combination of L_x and [L_x, L_y] with x, y monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TkkOperator {
    terms: Vec<(Rational, OpTerm)>,
}

impl TkkOperator {
    pub fn l(sigma: &[i64]) -> Self {
        TkkOperator { terms: vec![(Rational::one(), OpTerm::L(sigma.to_vec()))] }
    }

    pub fn comm(sigma: &[i64], tau: &[i64]) -> Self {
        TkkOperator { terms: vec![(Rational::one(), OpTerm::Comm(sigma.to_vec(), tau.to_vec()))] }
    }

    pub fn plus(mut self, o: TkkOperator) -> Self {
        self.terms.extend(o.terms);
        self
    }

    pub fn scaled(mut self, c: &Rational) -> Self {
        for (v, _) in &mut self.terms {
            *v *= c;
        }
        self
    }

    pub fn neg(self) -> Self {
        self.scaled(&-Rational::one())
    }
}

impl std::fmt::Display for TkkOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, t)| {
                let body = match t {
                    OpTerm::L(s) => format!("L(x^{})", fmt_vec(s)),
                    OpTerm::Comm(s, u) => format!("[L(x^{}), L(x^{})]", fmt_vec(s), fmt_vec(u)),
                };
                if c.is_one() {
                    body
                } else if *c == -Rational::one() {
                    format!("-{body}")
                } else {
                    format!("{}·{body}", fmt_rat(c))
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// x Δ y = L_{xy} + [L_x, L_y] for monomials x^σ, x^τ.
pub fn delta_op(jt: &JordanTorus, sigma: &[i64], tau: &[i64]) -> TkkOperator {
    let mut op = TkkOperator::comm(sigma, tau);
    if jt.gamma(sigma, tau) {
        let e: Vec<i64> = sigma.iter().zip(tau).map(|(a, b)| a + b).collect();
        op = TkkOperator::l(&e).plus(op);
    }
    op
}

#[derive(Clone, Debug, Serialize)]
pub struct TkkClass {
    pub i: usize,
    pub sigma: Vec<i64>,
    pub t: i64,
    pub n: i64,
    pub n_prime: i64,
    /// 1: i = 0 or t even; 2: i ≠ 0, t odd, σ ∈ S₀ ∪ S_i; 3: otherwise.
    pub case: u8,
    pub formula: String,
    pub direct: String,
    /// Sign relating the direct evaluation to the formula (+1 outside case 3).
    pub sign: Option<i64>,
    pub agree: bool,
    pub nonzero: bool,
}

/// [x^{λ_i+nσ}, x̄^{-λ_i+n'σ}] by the case formula and by direct evaluation, λ_i = τ_i.
pub fn tkk_bracket_class(jt: &JordanTorus, i: usize, sigma: &[i64], n: i64, n_prime: i64, bx: i64) -> Result<TkkClass> {
    if i >= jt.num_cosets() {
        return Err(Error::Precondition(format!("coset index {i} out of range")));
    }
    let nu = jt.semilattice().dim();
    if sigma.len() != nu {
        return Err(Error::RankMismatch { expected: nu, got: sigma.len() });
    }
    let lam = jt.tau(i).to_vec();
    let comb = |a: i64, s: i64| -> Vec<i64> { lam.iter().zip(sigma).map(|(l, x)| a * l + s * x).collect() };
    let left = comb(1, n);
    let right = comb(-1, n_prime);
    for e in [&left, &right] {
        if !jt.semilattice().contains(e) {
            return Err(Error::Precondition(format!("x^{} = 0: exponent not in S", fmt_vec(e))));
        }
    }
    let t = n + n_prime;
    let t_sigma: Vec<i64> = sigma.iter().map(|x| t * x).collect();
    let in_s0_or_si = matches!(jt.coset(sigma), Some(c) if c == 0 || c == i);
    let case = if i == 0 || t % 2 == 0 {
        1
    } else if in_s0_or_si {
        2
    } else {
        3
    };
    let formula = if case < 3 { TkkOperator::l(&t_sigma) } else { TkkOperator::comm(&comb(1, t - 1), &comb(-1, 1)) };
    let direct = delta_op(jt, &left, &right);
    let (agree, sign) = if jt.differ_on_box(&direct, &formula, bx).is_none() {
        (true, Some(1))
    } else if case == 3 && jt.differ_on_box(&direct, &formula.clone().neg(), bx).is_none() {
        (true, Some(-1))
    } else {
        (false, None)
    };
    Ok(TkkClass {
        i,
        sigma: sigma.to_vec(),
        t,
        n,
        n_prime,
        case,
        formula: formula.to_string(),
        direct: direct.to_string(),
        sign,
        agree,
        nonzero: !jt.vanishes_on_box(&direct, bx),
    })
}

/// The five listed identities for Γ and the operators L, checked exactly on S ∩ box.
pub fn rokn3_check(jt: &JordanTorus, bx: i64) -> Report {
    let mut rep = Report::new();
    let m = jt.num_cosets();
    let add = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let pts = jt.semilattice().enumerate_box(bx);

    for i in 0..m {
        let ti = jt.tau(i);
        let t0 = jt.tau(0);
        if !jt.gamma(t0, &add(t0, ti)) || !jt.gamma(ti, &add(t0, ti)) {
            rep.fail("gamma_facts", format!("Γ(S_0, S_0+S_{i}) or Γ(S_{i}, S_0+S_{i}) ≠ 1"));
        }
        for j in 0..m {
            let tj = jt.tau(j);
            if !jt.gamma(ti, &add(tj, tj)) {
                rep.fail("gamma_facts", format!("Γ(S_{i}, S_{j}+S_{j}) ≠ 1"));
            }
        }
    }

    let small = jt.semilattice().enumerate_box(bx.min(2));
    for a in &small {
        for b in &small {
            for c in &small {
                let lhs = jt.mul(&jt.monomial(a), &jt.mul(&jt.monomial(b), &jt.monomial(c)));
                let g = jt.gamma(b, c) && jt.gamma(a, &add(b, c));
                let rhs = if g { jt.monomial(&add(a, &add(b, c))) } else { JordanElement::zero() };
                if lhs != rhs {
                    rep.fail(
                        "triple_product",
                        format!("x^{}·(x^{}·x^{}) = {lhs}", fmt_vec(a), fmt_vec(b), fmt_vec(c)),
                    );
                }
            }
        }
    }

    for a in &pts {
        for b in &pts {
            let op = TkkOperator::comm(a, b);
            let s0 = |v: &[i64]| jt.coset(v) == Some(0);
            for g in &pts {
                if (s0(a) || s0(b) || s0(g)) && !jt.apply(&op, g).is_zero() {
                    rep.fail("comm_kills_s0", format!("[L(x^{}), L(x^{})](x^{}) ≠ 0", fmt_vec(a), fmt_vec(b), fmt_vec(g)));
                }
            }
            if jt.coset(a) == jt.coset(b) {
                if let Some(g) = jt.differ_on_box(&op, &TkkOperator::default(), bx) {
                    rep.fail("same_coset_commute", format!("[L(x^{}), L(x^{})] nonzero at x^{}", fmt_vec(a), fmt_vec(b), fmt_vec(&g)));
                }
            }
            // the shift uses the representative of the coset containing τ
            let j = jt.coset(b).expect("enumerated from S");
            let tj = jt.tau(j);
            let shifted = TkkOperator::comm(&add(&add(a, b), tj), &tj.iter().map(|x| -x).collect::<Vec<_>>());
            if let Some(g) = jt.differ_on_box(&op, &shifted, bx) {
                rep.fail(
                    "shift",
                    format!("[L(x^{}), L(x^{})] ≠ shifted form at x^{} (j = {j})", fmt_vec(a), fmt_vec(b), fmt_vec(&g)),
                );
            }
        }
    }
    rep.note(format!("operators compared on S ∩ box {bx}"));
    rep
}
