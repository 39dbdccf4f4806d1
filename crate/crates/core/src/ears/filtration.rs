//! Chains R₀ ⊆ R₁ ⊆ … ⊆ R_ν = R with nullity(R_k) = k.

use serde::Serialize;

use super::axioms::{closedness_check, ClosedMode};
use super::datum::{EarsDatum, EarsRoot, RootSet};
use super::lemma::Decomposition;
use super::subsystem::{classify, subsystem_rt, SubsystemSummary, SubsystemView};
use crate::error::{fmt_vec, Error, Result};
use crate::finroots::CartanType;
use crate::lattice::{box_points, subgroup_span};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct Filtration {
    pub links: Vec<SubsystemView>,
    pub report: Report,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiltrationSummary {
    pub links: Vec<SubsystemSummary>,
    pub report: Report,
}

impl Filtration {
    pub fn summary(&self) -> FiltrationSummary {
        FiltrationSummary { links: self.links.iter().map(|l| l.summary()).collect(), report: self.report.clone() }
    }
}

/// Checks the type hypotheses under which the chain exists.
pub fn filtration_hypotheses(r: &EarsDatum, decomposition: Option<&Decomposition>) -> Result<String> {
    let fin = r.finite();
    let s = r.s();
    let nu = r.nu();
    let ind = s.classes().len().saturating_sub(1);
    if s.is_lattice() {
        return Ok("S is a lattice".into());
    }
    match (fin.cartan_type(), fin.rank()) {
        (CartanType::A, 1) => {
            if ind == nu {
                Ok(format!("type A1 with ind(S) = {ind} = rank Λ"))
            } else {
                Err(Error::Precondition(format!("type A1 needs ind(S) = rank Λ, got ind(S) = {ind}, rank Λ = {nu}")))
            }
        }
        (CartanType::B, _) => {
            let d = decomposition.ok_or_else(|| {
                Error::Precondition("type B needs an explicit decomposition Λ = Λ₁ ⊕ Λ₂ with S = S₁ ⊕ Λ₂".into())
            })?;
            d.check_against(s)?;
            if !d.s_splits(s) {
                return Err(Error::Precondition("S ≠ S₁ ⊕ Λ₂ for the given decomposition".into()));
            }
            let ind1 = d.s1_index(s);
            if ind1 != d.lambda1.len() {
                return Err(Error::Precondition(format!(
                    "type B needs ind(S₁) = rank Λ₁, got ind(S₁) = {ind1}, rank Λ₁ = {}",
                    d.lambda1.len()
                )));
            }
            Ok(format!("type B with ind(S₁) = {ind1} = rank Λ₁"))
        }
        _ => Ok(format!("type {} is neither A1 nor B", fin.label())),
    }
}

/// U_k = Σ_{i≤k} Zσ_i, T_k = (Ṙ + U_k) ∩ R^×, R_k = R̃_{T_k}.
pub fn filtration_build(
    r: &EarsDatum,
    sigma: &[Vec<i64>],
    decomposition: Option<&Decomposition>,
    b: i64,
) -> Result<Filtration> {
    let fin = r.finite();
    let nu = r.nu();
    let mut report = Report::new();
    report.note(filtration_hypotheses(r, decomposition)?);
    if sigma.len() != nu {
        return Err(Error::Precondition(format!("need {nu} vectors σ_i, got {}", sigma.len())));
    }
    for s in sigma {
        if s.len() != nu {
            return Err(Error::RankMismatch { expected: nu, got: s.len() });
        }
        if !r.s().contains(s) {
            return Err(Error::Precondition(format!("σ = {} ∉ S", fmt_vec(s))));
        }
    }
    let lambda = r.s().ambient();
    if !subgroup_span(nu, sigma)?.to_lattice().same_lattice(lambda) {
        return Err(Error::Precondition("{σ_i} is not a basis of Λ".into()));
    }

    // membership of (α̇, Σc_iσ_i) depends on c mod the class modulus
    let w = if fin.cartan_type() == CartanType::G { 6 } else { 4 };
    let mut links = Vec::with_capacity(nu + 1);
    for k in 0..=nu {
        let mut t = Vec::new();
        for a in fin.roots() {
            for c in box_points(k, w) {
                let mut u = vec![0; nu];
                for (ci, s) in c.iter().zip(sigma) {
                    for (x, y) in u.iter_mut().zip(s) {
                        *x += ci * y;
                    }
                }
                let x = EarsRoot::new(a.clone(), u);
                if r.contains(&x) {
                    t.push(x);
                }
            }
        }
        links.push(subsystem_rt(r, &t)?);
    }

    let want_type = classify(fin, fin.roots());
    for (k, link) in links.iter().enumerate() {
        if link.nullity() != k {
            report.fail("nullity", format!("R_{k} has nullity {}", link.nullity()));
        }
        if link.type_label() != want_type || link.rank() != fin.rank() {
            report.fail("type", format!("R_{k} has type {} rank {}, expected {want_type}", link.type_label(), link.rank()));
        }
        if k < nu {
            for v in closedness_check(link, &links[k + 1], b, ClosedMode::Closed).violations {
                report.fail("link_closed", format!("R_{k} in R_{}: {}", k + 1, v.witness));
            }
            for v in closedness_check(link, r, b, ClosedMode::Closed).violations {
                report.fail("closed_in_R", format!("R_{k}: {}", v.witness));
            }
        }
    }
    if links[nu].enumerate(b) != r.enumerate(b) {
        report.fail("top_equals_R", format!("R_{nu} differs from R in box {b}"));
    }
    report.note(format!("closedness verified in box {b}"));
    Ok(Filtration { links, report })
}
