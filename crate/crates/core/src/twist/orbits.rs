//! ⟨σ⟩-orbits on R^×_π and orbit separation by π.

use std::collections::HashMap;

use serde::Serialize;

use super::projection::TwistDatum;
use crate::finroots::RootCoords;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    /// First member in root order (height, then descending coordinates).
    pub rep: RootCoords,
    /// rep, σ(rep), σ²(rep), … without repetition.
    pub members: Vec<RootCoords>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitTable {
    /// Every orbit on R^×_π: positive orbits first, then their negatives.
    pub orbits: Vec<Orbit>,
}

impl OrbitTable {
    pub fn positive(&self) -> impl Iterator<Item = &Orbit> {
        self.orbits.iter().filter(|o| o.rep.iter().all(|&x| x >= 0))
    }

    pub fn reps(&self) -> Vec<RootCoords> {
        self.orbits.iter().map(|o| o.rep.clone()).collect()
    }

    pub fn positive_reps(&self) -> Vec<RootCoords> {
        self.positive().map(|o| o.rep.clone()).collect()
    }

    pub fn orbit_of(&self, r: &[i64]) -> Option<usize> {
        self.orbits.iter().position(|o| o.members.iter().any(|x| x == r))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub separated: bool,
    pub pairs_checked: usize,
    /// Pairs with π(α) = π(β) in different orbits.
    pub witnesses: Vec<(RootCoords, RootCoords)>,
}

impl TwistDatum {
    pub fn orbits(&self) -> OrbitTable {
        let host = self.host();
        let mut seen = vec![false; host.roots().len()];
        let mut orbits = Vec::new();
        // roots() is already in root order, so the first unseen member is the rep
        for (i, r) in host.roots().iter().enumerate() {
            if seen[i] || !self.in_r_pi(r) {
                continue;
            }
            let mut members = vec![r.clone()];
            let mut w = self.sigma().apply_root(r);
            while &w != r {
                members.push(w.clone());
                w = self.sigma().apply_root(&w);
            }
            for x in &members {
                seen[host.root_index(x).expect("σ permutes roots")] = true;
            }
            orbits.push(Orbit { rep: r.clone(), members });
        }
        OrbitTable { orbits }
    }

    /// π(α) = π(β) ⇒ same orbit, over all ordered pairs in R^×_π.
    pub fn separation_check(&self) -> SeparationReport {
        let table = self.orbits();
        let mut orbit_of: HashMap<&RootCoords, usize> = HashMap::new();
        for (i, o) in table.orbits.iter().enumerate() {
            for m in &o.members {
                orbit_of.insert(m, i);
            }
        }
        let roots: Vec<&RootCoords> = orbit_of.keys().copied().collect();
        let pis: Vec<_> = roots.iter().map(|r| self.pi0(r)).collect();
        let mut witnesses = Vec::new();
        let mut pairs = 0;
        for a in 0..roots.len() {
            for b in 0..roots.len() {
                pairs += 1;
                if pis[a] == pis[b] && orbit_of[roots[a]] != orbit_of[roots[b]] {
                    witnesses.push((roots[a].clone(), roots[b].clone()));
                }
            }
        }
        witnesses.sort();
        SeparationReport { separated: witnesses.is_empty(), pairs_checked: pairs, witnesses }
    }

    /// Number of positive orbit representatives α with π_k(α) ≠ 0.
    pub fn n_sigma_k(&self, k: i64) -> usize {
        self.orbits().positive().filter(|o| !self.pi_k(&o.rep, k).is_zero()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finroots::{build_finite, diagram_automorphism, CartanType};

    fn datum(t: CartanType, l: usize, m: u32) -> TwistDatum {
        let r = build_finite(t, l).unwrap();
        let s = diagram_automorphism(&r, m).unwrap();
        TwistDatum::new(r, s).unwrap()
    }

    #[test]
    fn d4_triality_orbits() {
        let t = datum(CartanType::D, 4, 3);
        let o = t.orbits();
        assert_eq!(o.positive().count(), 6);
        assert_eq!(o.orbits.len(), 12);
        let i = o.orbit_of(&[1, 0, 0, 0]).unwrap();
        assert_eq!(o.orbits[i].members, vec![vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]);
        let j = o.orbit_of(&[1, 2, 1, 1]).unwrap();
        assert_eq!(o.orbits[j].members.len(), 1);
    }

    #[test]
    fn counts() {
        let t = datum(CartanType::D, 4, 3);
        assert_eq!(t.n_sigma_k(1), 3);
        assert_eq!(t.n_sigma_k(2), 3);
        assert_eq!(t.n_sigma_k(0), 6);
        let id = datum(CartanType::B, 3, 1);
        assert_eq!(id.n_sigma_k(0), id.orbits().positive().count());
        assert!(id.orbits().orbits.iter().all(|o| o.members.len() == 1));
    }

    #[test]
    fn separation() {
        assert!(datum(CartanType::D, 4, 3).separation_check().separated);
        let a3 = datum(CartanType::A, 3, 2).separation_check();
        assert!(a3.separated);
        assert_eq!(a3.pairs_checked, 144);
        assert!(datum(CartanType::G, 2, 1).separation_check().separated);
    }
}
