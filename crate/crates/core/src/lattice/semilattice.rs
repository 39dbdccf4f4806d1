use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::lattice::{Lattice, Subgroup};
use crate::error::{fmt_vec, Error, Result};
use crate::report::Report;

/// S = ∪ (τ_i + 2Λ) inside an explicit ambient lattice Λ, with τ_0 = 0.
///
/// Representatives are kept in the order given, since several
/// constructions refer to τ_i by index. Malformed inputs are representable;
/// `validate` reports what is wrong with them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semilattice {
    ambient: Lattice,
    reps: Vec<Vec<i64>>,
    rep_classes: Vec<Option<u64>>,
    classes: BTreeSet<u64>,
}

impl Semilattice {
    pub fn new(ambient: Lattice, reps: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(r) = reps.iter().find(|r| r.len() != ambient.dim()) {
            return Err(Error::DimensionMismatch(format!(
                "coset rep {} in ambient of dimension {}",
                fmt_vec(r),
                ambient.dim()
            )));
        }
        let rep_classes: Vec<Option<u64>> = reps.iter().map(|r| ambient.class_of(r)).collect();
        let classes = rep_classes.iter().flatten().copied().collect();
        Ok(Semilattice { ambient, reps, rep_classes, classes })
    }

    /// Semilattice in the standard Z^ν.
    pub fn standard(nu: usize, reps: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(Lattice::standard(nu), reps)
    }

    /// The whole lattice, listed as all cosets of 2Λ in canonical order.
    pub fn full(ambient: Lattice) -> Self {
        let reps = (0..ambient.num_classes()).map(|m| ambient.class_vector(m)).collect();
        Self::new(ambient, reps).expect("class vectors live in the ambient")
    }

    pub fn ambient(&self) -> &Lattice {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim()
    }

    pub fn reps(&self) -> &[Vec<i64>] {
        &self.reps
    }

    /// Number of nonzero coset representatives.
    pub fn index(&self) -> usize {
        self.reps.len().saturating_sub(1)
    }

    pub fn classes(&self) -> &BTreeSet<u64> {
        &self.classes
    }

    /// Representatives normalized to {0,1}-coordinates, sorted.
    pub fn canonical_reps(&self) -> Vec<Vec<i64>> {
        self.classes.iter().map(|&m| self.ambient.class_vector(m)).collect()
    }

    pub fn is_lattice(&self) -> bool {
        self.classes.len() as u64 == self.ambient.num_classes()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.ambient.class_of(v).is_some_and(|c| self.classes.contains(&c))
    }

    /// Index i with v ∈ τ_i + 2Λ.
    pub fn coset_index(&self, v: &[i64]) -> Option<usize> {
        let c = self.ambient.class_of(v)?;
        self.rep_classes.iter().position(|&rc| rc == Some(c))
    }

    /// ⟨S⟩ as computed from the data (τ_i together with 2Λ).
    pub fn span(&self) -> Subgroup {
        let mut gens = self.reps.clone();
        gens.extend(self.ambient.basis().iter().map(|b| b.iter().map(|x| 2 * x).collect::<Vec<_>>()));
        Subgroup::span(self.dim(), &gens).expect("uniform dimension")
    }

    pub fn validate(&self) -> Report {
        let mut rep = Report::new();
        match self.reps.first() {
            Some(t0) if t0.iter().all(|&x| x == 0) => {}
            Some(t0) => rep.fail("tau0_zero", format!("tau_0 = {}", fmt_vec(t0))),
            None => rep.fail("tau0_zero", "no coset representatives"),
        }
        for (i, r) in self.reps.iter().enumerate() {
            if self.rep_classes[i].is_none() {
                rep.fail("rep_in_ambient", format!("tau_{i} = {} not in the ambient lattice", fmt_vec(r)));
            }
        }
        for i in 0..self.reps.len() {
            for j in 0..i {
                if self.rep_classes[i].is_some() && self.rep_classes[i] == self.rep_classes[j] {
                    rep.fail(
                        "distinct_cosets",
                        format!("{} ≡ {} mod 2Λ", fmt_vec(&self.reps[j]), fmt_vec(&self.reps[i])),
                    );
                }
            }
        }
        let lam = Subgroup::span(self.dim(), self.ambient.basis()).expect("uniform dimension");
        if !self.span().same_group(&lam) {
            rep.fail("spans_lattice", format!("⟨S⟩ has HNF basis {:?}, Λ has {:?}", self.span().basis(), lam.basis()));
        }
        rep
    }

    /// Members with every coordinate in [-b, b], lexicographic order.
    pub fn enumerate_box(&self, b: i64) -> Vec<Vec<i64>> {
        box_points(self.dim(), b).into_iter().filter(|v| self.contains(v)).collect()
    }

    pub fn cosets(&self) -> CosetSet {
        CosetSet { ambient: self.ambient.clone(), classes: self.classes.clone() }
    }
}

/// All integer vectors of length n with entries in [-b, b], lexicographic.
pub fn box_points(n: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * (2 * b as usize + 1));
        for v in &out {
            for x in -b..=b {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// A union of cosets of 2Λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSet {
    pub ambient: Lattice,
    pub classes: BTreeSet<u64>,
}

impl CosetSet {
    pub fn contains(&self, v: &[i64]) -> bool {
        self.ambient.class_of(v).is_some_and(|c| self.classes.contains(&c))
    }

    pub fn reps(&self) -> Vec<Vec<i64>> {
        self.classes.iter().map(|&m| self.ambient.class_vector(m)).collect()
    }

    pub fn sum(&self, o: &CosetSet) -> Result<CosetSet> {
        if !self.ambient.same_lattice(&o.ambient) {
            return Err(Error::Precondition("coset sets live in different lattices".into()));
        }
        // coordinates are relative to each side's basis; re-express o's classes in ours
        let theirs: Vec<u64> =
            o.classes.iter().map(|&m| self.ambient.class_of(&o.ambient.class_vector(m)).unwrap()).collect();
        let classes = self.classes.iter().flat_map(|&a| theirs.iter().map(move |&b| a ^ b)).collect();
        Ok(CosetSet { ambient: self.ambient.clone(), classes })
    }
}

/// Coset-level sumset S + T.
pub fn sumset_cosets(s: &Semilattice, t: &Semilattice) -> Result<CosetSet> {
    s.cosets().sum(&t.cosets())
}

/// ⟨L⟩ + S ⊆ S and k⟨S⟩ + L ⊆ L, with k = 2 (k = 3 for G2 data).
///
/// Both sides are unions of cosets, so testing generators against
/// representatives is exact.
pub fn interaction_check_k(s: &Semilattice, l: &Semilattice, k: i64) -> Report {
    let mut rep = Report::new();
    if s.dim() != l.dim() {
        rep.fail("same_rank", format!("S in Z^{} vs L in Z^{}", s.dim(), l.dim()));
        return rep;
    }
    for g in l.span().basis() {
        for t in s.reps() {
            let v: Vec<i64> = g.iter().zip(t).map(|(a, b)| a + b).collect();
            if !s.contains(&v) {
                rep.fail("L_plus_S", format!("{} + {} = {} ∉ S", fmt_vec(g), fmt_vec(t), fmt_vec(&v)));
            }
        }
    }
    for b in s.span().basis() {
        for r in l.reps() {
            let v: Vec<i64> = b.iter().zip(r).map(|(x, y)| k * x + y).collect();
            if !l.contains(&v) {
                rep.fail("kS_plus_L", format!("{k}·{} + {} = {} ∉ L", fmt_vec(b), fmt_vec(r), fmt_vec(&v)));
            }
        }
    }
    rep
}

pub fn interaction_check(s: &Semilattice, l: &Semilattice) -> Report {
    interaction_check_k(s, l, 2)
}

#[derive(Serialize, Deserialize)]
struct SemilatticeJson {
    rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    basis: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coset_reps: Option<Vec<Vec<i64>>>,
}

impl Serialize for Semilattice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SemilatticeJson {
            rank: self.dim(),
            basis: Some(self.ambient.basis().to_vec()),
            coset_reps: Some(self.reps.clone()),
        }
        .serialize(s)
    }
}

/// `coset_reps` may be omitted to mean the whole lattice; `basis` may be
/// omitted to mean the standard basis.
impl<'de> Deserialize<'de> for Semilattice {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SemilatticeJson::deserialize(d)?;
        let amb = match j.basis {
            None => Lattice::standard(j.rank),
            Some(b) => Lattice::new(j.rank, b).map_err(serde::de::Error::custom)?,
        };
        match j.coset_reps {
            None => Ok(Semilattice::full(amb)),
            Some(r) => Semilattice::new(amb, r).map_err(serde::de::Error::custom),
        }
    }
}
