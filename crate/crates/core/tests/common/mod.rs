//! Independent oracles shared by the property tests and the acceptance harness.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use ears_core::ears::{EarsDatum, EarsRoot, RootSet};
use ears_core::finroots::{build_finite, CartanType};
use ears_core::lattice::{Lattice, Semilattice};
use rand::seq::SliceRandom;
use rand::Rng;

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    let mut s = 0i128;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        s += sign * m[0][j] as i128 * det(&minor);
    }
    s
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Largest k with a nonzero k×k minor.
pub fn minor_rank(m: &[Vec<i64>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    for k in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                if det(&sub) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

/// Elements of ⟨T⟩ reachable inside a window by adding and subtracting generators.
fn bfs_span(t: &[Vec<i64>], bounds: &[i64]) -> HashSet<Vec<i64>> {
    let dim = bounds.len();
    let mut seen = HashSet::new();
    let zero = vec![0; dim];
    seen.insert(zero.clone());
    let mut q = VecDeque::from([zero]);
    while let Some(v) = q.pop_front() {
        for g in t {
            for s in [1, -1] {
                let w: Vec<i64> = v.iter().zip(g).map(|(a, b)| a + s * b).collect();
                if w.iter().zip(bounds).all(|(x, b)| x.abs() <= *b) && seen.insert(w.clone()) {
                    q.push_back(w);
                }
            }
        }
    }
    seen
}

/// {γ ∈ R ∩ box : γ ∈ ⟨T⟩ (nonisotropic) or γ ∈ R̃^× - R̃^× (isotropic)}, by search.
pub fn naive_rt(r: &EarsDatum, t: &[EarsRoot], b: i64) -> BTreeSet<EarsRoot> {
    let fin = r.finite();
    let l = fin.rank();
    let nu = r.nu();
    let fmax = fin.roots().iter().flatten().map(|x| x.abs()).max().unwrap_or(1);
    let tmax = t.iter().flat_map(|x| x.lattice.iter()).map(|x| x.abs()).max().unwrap_or(0);
    let near = b + 4 + 6 * tmax;
    let far = near + 4 + 2 * tmax;
    let mut bounds = vec![2 * fmax + 1; l];
    bounds.extend(std::iter::repeat_n(far, nu));
    let flat: Vec<Vec<i64>> = t.iter().map(|x| x.flat()).collect();
    let span = bfs_span(&flat, &bounds);
    let real: HashSet<EarsRoot> =
        r.enumerate(near).into_iter().filter(|x| !x.is_isotropic() && span.contains(&x.flat())).collect();
    let is_difference = |g: &[i64]| {
        real.iter().any(|x| {
            let y = EarsRoot::new(x.finite.clone(), x.lattice.iter().zip(g).map(|(a, b)| a - b).collect());
            real.contains(&y)
        })
    };
    r.enumerate(b)
        .into_iter()
        .filter(|x| if x.is_isotropic() { is_difference(&x.lattice) } else { span.contains(&x.flat()) })
        .collect()
}

/// Small data covering several types, nullities and semilattice indices.
pub fn fixture_data() -> Vec<EarsDatum> {
    let std_s = |nu: usize| Semilattice::full(Lattice::standard(nu));
    let two = |nu: usize| {
        Semilattice::full(Lattice::new(nu, (0..nu).map(|i| (0..nu).map(|j| 2 * (i == j) as i64).collect()).collect()).unwrap())
    };
    let idx2 = Semilattice::standard(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
    let mk = |ty, l, s: Semilattice, lg: Option<Semilattice>| EarsDatum::new(build_finite(ty, l).unwrap(), s, lg).unwrap();
    vec![
        mk(CartanType::A, 1, idx2.clone(), None),
        mk(CartanType::A, 1, std_s(1), None),
        mk(CartanType::A, 2, std_s(2), None),
        mk(CartanType::A, 2, std_s(1), None),
        mk(CartanType::B, 2, idx2, Some(two(2))),
        mk(CartanType::B, 2, std_s(2), Some(std_s(2))),
        mk(CartanType::C, 3, std_s(1), Some(two(1))),
    ]
}

/// A random connected set of 1–3 nonisotropic roots with small lattice parts.
pub fn random_t<R: Rng>(r: &EarsDatum, rng: &mut R) -> Vec<EarsRoot> {
    let pool: Vec<EarsRoot> = r.enumerate(2).into_iter().filter(|x| !x.is_isotropic()).collect();
    loop {
        let n = rng.gen_range(1..=3);
        let t: Vec<EarsRoot> = pool.choose_multiple(rng, n).cloned().collect();
        let parts: Vec<&Vec<i64>> = t.iter().map(|x| &x.finite).collect();
        // connected under (α, β) ≠ 0
        let mut reached = vec![0usize];
        let mut grew = true;
        while grew {
            grew = false;
            for i in 0..parts.len() {
                if !reached.contains(&i) && reached.iter().any(|&j| r.finite().form(parts[i], parts[j]) != 0) {
                    reached.push(i);
                    grew = true;
                }
            }
        }
        if reached.len() == parts.len() {
            return t;
        }
    }
}
