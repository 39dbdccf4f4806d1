//! R = (S+S) ∪ (Ṙ_sh + S) ∪ (Ṙ_lg + L).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{fmt_vec, Error, Result};
use crate::finroots::{fmt_simple, CartanType, FiniteRootSystem, FiniteSpec};
use crate::lattice::{box_points, interaction_check_k, sumset_cosets, CosetSet, Semilattice};
use crate::report::Report;

/// A root as (finite part in simple coordinates, lattice part in Z^ν).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EarsRoot {
    pub finite: Vec<i64>,
    pub lattice: Vec<i64>,
}

impl EarsRoot {
    pub fn new(finite: Vec<i64>, lattice: Vec<i64>) -> Self {
        EarsRoot { finite, lattice }
    }

    pub fn isotropic(rank: usize, lattice: Vec<i64>) -> Self {
        EarsRoot { finite: vec![0; rank], lattice }
    }

    pub fn is_isotropic(&self) -> bool {
        self.finite.iter().all(|&x| x == 0)
    }

    pub fn neg(&self) -> Self {
        EarsRoot { finite: self.finite.iter().map(|x| -x).collect(), lattice: self.lattice.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        EarsRoot {
            finite: self.finite.iter().zip(&o.finite).map(|(a, b)| a + b).collect(),
            lattice: self.lattice.iter().zip(&o.lattice).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        EarsRoot {
            finite: self.finite.iter().map(|x| k * x).collect(),
            lattice: self.lattice.iter().map(|x| k * x).collect(),
        }
    }

    /// finite ++ lattice
    pub fn flat(&self) -> Vec<i64> {
        let mut v = self.finite.clone();
        v.extend_from_slice(&self.lattice);
        v
    }

    pub fn in_box(&self, b: i64) -> bool {
        self.lattice.iter().all(|x| x.abs() <= b)
    }
}

impl fmt::Display for EarsRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_simple(&self.finite), fmt_vec(&self.lattice))
    }
}

/// Anything that behaves as a set of roots inside Ṙ + Z^ν.
pub trait RootSet: Sync {
    fn finite(&self) -> &FiniteRootSystem;
    fn nu(&self) -> usize;
    fn contains(&self, x: &EarsRoot) -> bool;

    /// Members with lattice part in [-b, b]^ν, ordered by (finite, lattice).
    fn enumerate(&self, b: i64) -> Vec<EarsRoot> {
        let fin = self.finite();
        let l = fin.rank();
        let pts = box_points(self.nu(), b);
        let mut finite_parts: Vec<Vec<i64>> = fin.roots().to_vec();
        finite_parts.push(vec![0; l]);
        finite_parts.sort();
        let mut out = Vec::new();
        for f in &finite_parts {
            for p in &pts {
                let x = EarsRoot::new(f.clone(), p.clone());
                if self.contains(&x) {
                    out.push(x);
                }
            }
        }
        out
    }

    /// ℓ + ν when the set should span the whole space (a full datum).
    fn full_span(&self) -> Option<usize> {
        None
    }

    /// Structural checks that must pass before the axioms mean anything.
    fn precheck(&self) -> Report {
        Report::new()
    }
}

#[derive(Clone, Debug)]
pub struct EarsDatum {
    finite: FiniteRootSystem,
    s: Semilattice,
    l: Option<Semilattice>,
    nu: usize,
    r0: CosetSet,
}

impl EarsDatum {
    /// L may be omitted when Ṙ has a single root length.
    pub fn new(finite: FiniteRootSystem, s: Semilattice, l: Option<Semilattice>) -> Result<Self> {
        let nu = s.dim();
        if let Some(l) = &l {
            if l.dim() != nu {
                return Err(Error::RankMismatch { expected: nu, got: l.dim() });
            }
        }
        if !finite.long_roots().is_empty() && l.is_none() {
            return Err(Error::Precondition(format!("{} has long roots; L is required", finite.label())));
        }
        let l = if finite.long_roots().is_empty() { None } else { l };
        let r0 = sumset_cosets(&s, &s)?;
        Ok(EarsDatum { finite, s, l, nu, r0 })
    }

    pub fn s(&self) -> &Semilattice {
        &self.s
    }

    pub fn l(&self) -> Option<&Semilattice> {
        self.l.as_ref()
    }

    /// R⁰ = S + S at coset level.
    pub fn r0(&self) -> &CosetSet {
        &self.r0
    }

    /// Multiplier in the interaction law k⟨S⟩ + L ⊆ L.
    pub fn interaction_factor(&self) -> i64 {
        if self.finite.cartan_type() == CartanType::G {
            3
        } else {
            2
        }
    }

    pub fn validate(&self) -> Report {
        let mut rep = Report::new();
        for v in self.s.validate().violations {
            rep.fail(format!("S.{}", v.check), v.witness);
        }
        if let Some(l) = &self.l {
            for v in l.validate().violations {
                rep.fail(format!("L.{}", v.check), v.witness);
            }
            for v in interaction_check_k(&self.s, l, self.interaction_factor()).violations {
                rep.fail(format!("interaction.{}", v.check), v.witness);
            }
        }
        rep
    }

    pub fn membership(&self, x: &EarsRoot) -> Result<bool> {
        if x.finite.len() != self.finite.rank() {
            return Err(Error::RankMismatch { expected: self.finite.rank(), got: x.finite.len() });
        }
        if x.lattice.len() != self.nu {
            return Err(Error::RankMismatch { expected: self.nu, got: x.lattice.len() });
        }
        Ok(self.contains(x))
    }

    pub fn to_json(&self) -> DatumJson {
        DatumJson { finite: self.finite.spec(), nullity: self.nu, s: self.s.clone(), l: self.l.clone() }
    }

    pub fn from_json(j: DatumJson) -> Result<Self> {
        let fin = FiniteRootSystem::from_spec(j.finite)?;
        if j.s.dim() != j.nullity {
            return Err(Error::RankMismatch { expected: j.nullity, got: j.s.dim() });
        }
        Self::new(fin, j.s, j.l)
    }
}

impl RootSet for EarsDatum {
    fn finite(&self) -> &FiniteRootSystem {
        &self.finite
    }

    fn nu(&self) -> usize {
        self.nu
    }

    fn contains(&self, x: &EarsRoot) -> bool {
        if x.lattice.len() != self.nu || x.finite.len() != self.finite.rank() {
            return false;
        }
        if x.is_isotropic() {
            return self.r0.contains(&x.lattice);
        }
        if !self.finite.is_root(&x.finite) {
            return false;
        }
        if self.finite.form(&x.finite, &x.finite) == 2 {
            self.s.contains(&x.lattice)
        } else {
            self.l.as_ref().is_some_and(|l| l.contains(&x.lattice))
        }
    }

    fn full_span(&self) -> Option<usize> {
        Some(self.finite.rank() + self.nu)
    }

    fn precheck(&self) -> Report {
        self.validate()
    }
}

/// `{"finite":{"type":"B","rank":2},"nullity":2,"S":{...},"L":{...}}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DatumJson {
    pub finite: FiniteSpec,
    pub nullity: usize,
    #[serde(rename = "S")]
    pub s: Semilattice,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub l: Option<Semilattice>,
}

impl Serialize for EarsDatum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for EarsDatum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        EarsDatum::from_json(DatumJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
