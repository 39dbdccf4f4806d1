//! R̃_T = (⟨T⟩ ∩ R^×) ∪ (V⁰ ∩ (R̃^× − R̃^×)) and the localizations built from it.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::axioms::components;
use super::datum::{EarsDatum, EarsRoot, RootSet};
use crate::arith::matrix::{exact_rank, rational_rows};
use crate::error::{fmt_vec, Error, Result};
use crate::finroots::{CartanType, FiniteRootSystem};
use crate::lattice::hnf::{coords_in, hnf, pivot_col, reduce};
use crate::lattice::box_points;

#[derive(Clone, Debug)]
pub struct SubsystemView {
    host: EarsDatum,
    generators: Vec<EarsRoot>,
    /// HNF of ⟨T⟩ in Z^{ℓ+ν}, finite coordinates first.
    span: Vec<Vec<i64>>,
    /// Basis of ⟨T⟩ ∩ V⁰ (lattice coordinates), in echelon form.
    k_basis: Vec<Vec<i64>>,
    modulus: i64,
    /// Difference classes of R̃^× in K/NK.
    iso_classes: BTreeSet<Vec<i64>>,
    finite_parts: Vec<Vec<i64>>,
    type_label: String,
    rank: usize,
}

/// Summary used by reports and the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct SubsystemSummary {
    pub type_label: String,
    pub rank: usize,
    pub nullity: usize,
    pub generators: Vec<String>,
    pub span_hnf: Vec<Vec<i64>>,
    pub isotropic_lattice: Vec<Vec<i64>>,
}

impl SubsystemView {
    pub fn host(&self) -> &EarsDatum {
        &self.host
    }

    pub fn generators(&self) -> &[EarsRoot] {
        &self.generators
    }

    pub fn span_hnf(&self) -> &[Vec<i64>] {
        &self.span
    }

    /// ⟨T⟩ ∩ V⁰ as vectors in Z^ν.
    pub fn isotropic_lattice(&self) -> &[Vec<i64>] {
        &self.k_basis
    }

    pub fn nullity(&self) -> usize {
        self.k_basis.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn type_label(&self) -> &str {
        &self.type_label
    }

    /// Finite parts α̇ with some (α̇, λ) ∈ R̃^×.
    pub fn finite_parts(&self) -> &[Vec<i64>] {
        &self.finite_parts
    }

    pub fn in_span(&self, x: &EarsRoot) -> bool {
        reduce(&self.span, &x.flat()).iter().all(|&c| c == 0)
    }

    pub fn summary(&self) -> SubsystemSummary {
        SubsystemSummary {
            type_label: self.type_label.clone(),
            rank: self.rank,
            nullity: self.nullity(),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            span_hnf: self.span.clone(),
            isotropic_lattice: self.k_basis.clone(),
        }
    }

    fn k_class(&self, lattice: &[i64]) -> Option<Vec<i64>> {
        let c = coords_in(&self.k_basis, lattice)?;
        Some(c.into_iter().map(|x| x.rem_euclid(self.modulus)).collect())
    }
}

impl RootSet for SubsystemView {
    fn finite(&self) -> &FiniteRootSystem {
        self.host.finite()
    }

    fn nu(&self) -> usize {
        self.host.nu()
    }

    fn contains(&self, x: &EarsRoot) -> bool {
        if x.finite.len() != self.host.finite().rank() || x.lattice.len() != self.host.nu() {
            return false;
        }
        if x.is_isotropic() {
            self.k_class(&x.lattice).is_some_and(|c| self.iso_classes.contains(&c))
        } else {
            self.host.contains(x) && self.in_span(x)
        }
    }

    fn full_span(&self) -> Option<usize> {
        Some(self.rank + self.nullity())
    }
}

/// The maximal subsystem of R containing T.
pub fn subsystem_rt(r: &EarsDatum, t: &[EarsRoot]) -> Result<SubsystemView> {
    let fin = r.finite();
    let l = fin.rank();
    let nu = r.nu();
    if t.is_empty() {
        return Err(Error::EmptyT);
    }
    for x in t {
        if x.finite.len() != l || x.lattice.len() != nu {
            return Err(Error::RankMismatch { expected: l + nu, got: x.finite.len() + x.lattice.len() });
        }
        if x.is_isotropic() {
            return Err(Error::Precondition(format!("T contains the isotropic element {x}")));
        }
        if !r.contains(x) {
            return Err(Error::NotARoot(x.to_string()));
        }
    }
    let parts: Vec<Vec<i64>> = t.iter().map(|x| x.finite.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    if components(fin, &parts).len() > 1 {
        return Err(Error::DisconnectedT);
    }

    let flat: Vec<Vec<i64>> = t.iter().map(|x| x.flat()).collect();
    let span = hnf(&flat, l + nu);
    let k_basis: Vec<Vec<i64>> = span.iter().filter(|row| pivot_col(row) >= l).map(|row| row[l..].to_vec()).collect();
    let finite_rows: Vec<&Vec<i64>> = span.iter().filter(|row| pivot_col(row) < l).collect();
    let modulus = if fin.cartan_type() == CartanType::G { 6 } else { 2 };
    let classes = box_points(k_basis.len(), modulus).into_iter().filter(|c| c.iter().all(|&x| x >= 0 && x < modulus));
    let classes: Vec<Vec<i64>> = classes.collect();

    let mut per_root: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
    for a in fin.roots() {
        let Some(lambda0) = lift(&finite_rows, a, l, nu) else { continue };
        let present: Vec<Vec<i64>> = classes
            .iter()
            .filter(|c| {
                let mut lam = lambda0.clone();
                for (ci, k) in c.iter().zip(&k_basis) {
                    for (x, y) in lam.iter_mut().zip(k) {
                        *x += ci * y;
                    }
                }
                r.contains(&EarsRoot::new(a.clone(), lam))
            })
            .cloned()
            .collect();
        if !present.is_empty() {
            per_root.insert(a.clone(), present);
        }
    }
    let mut iso_classes = BTreeSet::new();
    for cs in per_root.values() {
        for c1 in cs {
            for c2 in cs {
                iso_classes.insert(c1.iter().zip(c2).map(|(a, b)| (a - b).rem_euclid(modulus)).collect::<Vec<i64>>());
            }
        }
    }
    let finite_parts: Vec<Vec<i64>> = per_root.keys().cloned().collect();
    let rank = if finite_parts.is_empty() { 0 } else { exact_rank(rational_rows(&finite_parts))? };
    let type_label = classify(fin, &finite_parts);
    Ok(SubsystemView {
        host: r.clone(),
        generators: t.to_vec(),
        span,
        k_basis,
        modulus,
        iso_classes,
        finite_parts,
        type_label,
        rank,
    })
}

/// Some λ with (α̇, λ) ∈ ⟨T⟩, if α̇ lies in the finite projection of ⟨T⟩.
fn lift(finite_rows: &[&Vec<i64>], a: &[i64], l: usize, nu: usize) -> Option<Vec<i64>> {
    let mut v: Vec<i64> = a.to_vec();
    v.extend(std::iter::repeat_n(0, nu));
    for row in finite_rows {
        let p = pivot_col(row);
        if v[p] % row[p] != 0 {
            return None;
        }
        let q = v[p] / row[p];
        for (x, y) in v.iter_mut().zip(row.iter()) {
            *x -= q * y;
        }
    }
    if v[..l].iter().any(|&x| x != 0) {
        return None;
    }
    Some(v[l..].iter().map(|x| -x).collect())
}

/// Cartan label of a finite root subsystem, components joined by "×".
pub fn classify(fin: &FiniteRootSystem, parts: &[Vec<i64>]) -> String {
    if parts.is_empty() {
        return "∅".into();
    }
    let mut labels: Vec<String> = components(fin, parts)
        .iter()
        .map(|c| {
            let n = exact_rank(rational_rows(c)).unwrap_or(0);
            let count = c.len();
            let lens: BTreeSet<i64> = c.iter().map(|x| fin.form(x, x)).collect();
            let short_len = *lens.iter().next().unwrap();
            let short = c.iter().filter(|x| fin.form(x, x) == short_len).count();
            let ty = if lens.len() == 1 {
                match (n, count) {
                    (n, c) if c == n * (n + 1) => "A",
                    (n, c) if n >= 4 && c == 2 * n * (n - 1) => "D",
                    (6, 72) | (7, 126) | (8, 240) => "E",
                    _ => "?",
                }
            } else {
                match (n, count) {
                    (2, 12) => "G",
                    (4, 48) => "F",
                    (n, c) if c == 2 * n * n && short == 2 * n => "B",
                    (n, c) if c == 2 * n * n => "C",
                    _ => "?",
                }
            };
            format!("{ty}{n}")
        })
        .collect();
    labels.sort();
    labels.join("×")
}

/// R_{Ṙ,δ}: generated by (Ṙ^× + Zδ) ∩ R.
pub fn affine_localize(r: &EarsDatum, delta: &EarsRoot) -> Result<SubsystemView> {
    if delta.lattice.len() != r.nu() || delta.finite.len() != r.finite().rank() {
        return Err(Error::RankMismatch { expected: r.nu(), got: delta.lattice.len() });
    }
    if !delta.is_isotropic() {
        return Err(Error::Precondition(format!("{delta} is not isotropic")));
    }
    if delta.lattice.iter().all(|&x| x == 0) {
        return Err(Error::Precondition("δ must be nonzero".into()));
    }
    if !r.r0().contains(&delta.lattice) {
        return Err(Error::Precondition(format!("{} ∉ R⁰", fmt_vec(&delta.lattice))));
    }
    // membership of (α̇, jδ) depends on j mod the class modulus, and a
    // window this wide holds every residue twice
    let mut t = Vec::new();
    for a in r.finite().roots() {
        for j in -8..=8i64 {
            let x = EarsRoot::new(a.clone(), delta.lattice.iter().map(|d| j * d).collect());
            if r.contains(&x) {
                t.push(x);
            }
        }
    }
    subsystem_rt(r, &t)
}

/// Nullity-0 subsystem generated by T; rejected when ⟨T⟩ meets V⁰.
pub fn finite_localize(r: &EarsDatum, t: &[EarsRoot]) -> Result<SubsystemView> {
    let v = subsystem_rt(r, t)?;
    if v.nullity() != 0 {
        return Err(Error::Precondition(format!(
            "⟨T⟩ ∩ V⁰ is nonzero, contains {}",
            fmt_vec(&v.isotropic_lattice()[0])
        )));
    }
    Ok(v)
}

/// R restricted to a chosen set of finite parts (plus the isotropic roots).
#[derive(Clone, Debug)]
pub struct FilteredView<'a, R: RootSet> {
    host: &'a R,
    allowed: BTreeSet<Vec<i64>>,
}

impl<'a, R: RootSet> FilteredView<'a, R> {
    pub fn new(host: &'a R, allowed: impl IntoIterator<Item = Vec<i64>>) -> Self {
        FilteredView { host, allowed: allowed.into_iter().collect() }
    }
}

impl<R: RootSet> RootSet for FilteredView<'_, R> {
    fn finite(&self) -> &FiniteRootSystem {
        self.host.finite()
    }

    fn nu(&self) -> usize {
        self.host.nu()
    }

    fn contains(&self, x: &EarsRoot) -> bool {
        (x.is_isotropic() || self.allowed.contains(&x.finite)) && self.host.contains(x)
    }
}
