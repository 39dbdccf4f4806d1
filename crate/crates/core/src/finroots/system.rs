//! Finite irreducible reduced root systems.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::matrix::exact_rank;
use crate::arith::rational::{int, rat, Rational};
use crate::error::{fmt_vec, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => CartanType::A,
            "B" => CartanType::B,
            "C" => CartanType::C,
            "D" => CartanType::D,
            "E" => CartanType::E,
            "F" => CartanType::F,
            "G" => CartanType::G,
            other => return Err(Error::InvalidCartanType(other.to_string(), 0)),
        })
    }
}

/// JSON-facing `{"type":"D","rank":4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteSpec {
    #[serde(rename = "type")]
    pub ty: CartanType,
    pub rank: usize,
}

/// A root (or any element of the root lattice) in simple-root coordinates.
pub type RootCoords = Vec<i64>;

#[derive(Clone, Debug)]
pub struct FiniteRootSystem {
    ty: CartanType,
    rank: usize,
    eps_dim: usize,
    simple_eps: Vec<Vec<Rational>>,
    // form = scale × standard dot product on ε-coordinates
    scale: i64,
    gram: Vec<Vec<i64>>,
    roots: Vec<RootCoords>,
    index: HashMap<RootCoords, usize>,
    npos: usize,
}

fn e(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|j| if j == i { int(1) } else { int(0) }).collect()
}

fn comb(terms: &[(i64, &Vec<Rational>)]) -> Vec<Rational> {
    let n = terms[0].1.len();
    let mut v = vec![Rational::zero(); n];
    for (c, x) in terms {
        for (a, b) in v.iter_mut().zip(x.iter()) {
            *a += int(*c) * b;
        }
    }
    v
}

fn valid(ty: CartanType, l: usize) -> bool {
    match ty {
        CartanType::A => l >= 1,
        CartanType::B => l >= 2,
        CartanType::C => l >= 3,
        CartanType::D => l >= 4,
        CartanType::E => (6..=8).contains(&l),
        CartanType::F => l == 4,
        CartanType::G => l == 2,
    }
}

/// Bourbaki simple roots in ε-coordinates, plus the scale making short roots have length² 2.
fn simple_roots(ty: CartanType, l: usize) -> (usize, Vec<Vec<Rational>>, i64) {
    use CartanType::*;
    let chain = |n: usize, k: usize| -> Vec<Vec<Rational>> {
        (0..k).map(|i| comb(&[(1, &e(n, i)), (-1, &e(n, i + 1))])).collect()
    };
    match ty {
        A => (l + 1, chain(l + 1, l), 1),
        B => {
            let mut s = chain(l, l - 1);
            s.push(e(l, l - 1));
            (l, s, 2)
        }
        C => {
            let mut s = chain(l, l - 1);
            s.push(comb(&[(2, &e(l, l - 1))]));
            (l, s, 1)
        }
        D => {
            let mut s = chain(l, l - 1);
            s.push(comb(&[(1, &e(l, l - 2)), (1, &e(l, l - 1))]));
            (l, s, 1)
        }
        E => {
            let h = rat(1, 2);
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut s = vec![a1, comb(&[(1, &e(8, 0)), (1, &e(8, 1))])];
            for i in 0..6 {
                s.push(comb(&[(1, &e(8, i + 1)), (-1, &e(8, i))]));
            }
            s.truncate(l);
            (8, s, 1)
        }
        F => {
            let h = rat(1, 2);
            let a4 = vec![h.clone(), -h.clone(), -h.clone(), -h];
            let s = vec![
                comb(&[(1, &e(4, 1)), (-1, &e(4, 2))]),
                comb(&[(1, &e(4, 2)), (-1, &e(4, 3))]),
                e(4, 3),
                a4,
            ];
            (4, s, 2)
        }
        G => {
            let s = vec![
                comb(&[(1, &e(3, 0)), (-1, &e(3, 1))]),
                comb(&[(-2, &e(3, 0)), (1, &e(3, 1)), (1, &e(3, 2))]),
            ];
            (3, s, 1)
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl FiniteRootSystem {
    pub fn build(ty: CartanType, rank: usize) -> Result<Self> {
        if !valid(ty, rank) {
            return Err(Error::InvalidCartanType(ty.to_string(), rank));
        }
        let (eps_dim, simple_eps, scale) = simple_roots(ty, rank);
        let gram: Vec<Vec<i64>> = simple_eps
            .iter()
            .map(|a| {
                simple_eps
                    .iter()
                    .map(|b| {
                        let v = dot(a, b) * int(scale);
                        v.to_integer().to_i64().filter(|_| v.is_integer()).expect("integral Gram matrix")
                    })
                    .collect()
            })
            .collect();
        // reflection closure in simple coordinates
        let unit = |i: usize| -> RootCoords { (0..rank).map(|j| (i == j) as i64).collect() };
        let mut pos: Vec<RootCoords> = (0..rank).map(unit).collect();
        let mut seen: std::collections::HashSet<RootCoords> = pos.iter().cloned().collect();
        let mut frontier = pos.clone();
        while let Some(b) = frontier.pop() {
            for i in 0..rank {
                let bi: i64 = (0..rank).map(|j| b[j] * gram[j][i]).sum();
                let p = 2 * bi / gram[i][i];
                let mut r = b.clone();
                r[i] -= p;
                if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && seen.insert(r.clone()) {
                    pos.push(r.clone());
                    frontier.push(r);
                }
            }
        }
        let key = |r: &RootCoords| -> (i64, std::cmp::Reverse<RootCoords>) {
            (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone()))
        };
        pos.sort_by_key(key);
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|x| -x).collect::<RootCoords>()));
        let index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        Ok(FiniteRootSystem { ty, rank, eps_dim, simple_eps, scale, gram, roots, index, npos })
    }

    pub fn from_spec(s: FiniteSpec) -> Result<Self> {
        Self::build(s.ty, s.rank)
    }

    pub fn spec(&self) -> FiniteSpec {
        FiniteSpec { ty: self.ty, rank: self.rank }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.ty, self.rank)
    }

    pub fn eps_dim(&self) -> usize {
        self.eps_dim
    }

    /// The factor c with (x, y) = c·(x·y) in ε-coordinates.
    pub fn form_scale(&self) -> i64 {
        self.scale
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn simple_roots_eps(&self) -> &[Vec<Rational>] {
        &self.simple_eps
    }

    /// All roots: positive ones by height, then their negatives.
    pub fn roots(&self) -> &[RootCoords] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[RootCoords] {
        &self.roots[..self.npos]
    }

    pub fn root_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        self.index.contains_key(r)
    }

    pub fn is_positive(&self, r: &[i64]) -> bool {
        r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0)
    }

    pub fn simply_laced(&self) -> bool {
        matches!(self.ty, CartanType::A | CartanType::D | CartanType::E)
    }

    /// Form on simple coordinates (integral by normalization).
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn form_rat(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += &a[i] * int(self.gram[i][j]) * &b[j];
            }
        }
        s
    }

    pub fn is_short(&self, r: &[i64]) -> bool {
        self.is_root(r) && self.form(r, r) == 2
    }

    pub fn is_long(&self, r: &[i64]) -> bool {
        self.is_root(r) && self.form(r, r) > 2
    }

    pub fn short_roots(&self) -> Vec<RootCoords> {
        self.roots.iter().filter(|r| self.form(r, r) == 2).cloned().collect()
    }

    pub fn long_roots(&self) -> Vec<RootCoords> {
        self.roots.iter().filter(|r| self.form(r, r) > 2).cloned().collect()
    }

    /// (β, α^∨) = 2(β,α)/(α,α).
    pub fn pairing(&self, beta: &[i64], alpha: &[i64]) -> Result<i64> {
        let aa = self.form(alpha, alpha);
        if aa == 0 {
            return Err(Error::IsotropicRoot);
        }
        Ok(2 * self.form(beta, alpha) / aa)
    }

    pub fn eps(&self, r: &[i64]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.eps_dim];
        for (c, a) in r.iter().zip(&self.simple_eps) {
            if *c != 0 {
                for (x, y) in v.iter_mut().zip(a) {
                    *x += int(*c) * y;
                }
            }
        }
        v
    }

    /// ε-coordinates of a rational combination of simple roots.
    pub fn eps_rat(&self, r: &[Rational]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.eps_dim];
        for (c, a) in r.iter().zip(&self.simple_eps) {
            for (x, y) in v.iter_mut().zip(a) {
                *x += c * y;
            }
        }
        v
    }

    /// Simple coordinates of an ε-vector lying in the rational span of the roots.
    pub fn from_eps(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.eps_dim {
            return None;
        }
        // columns where the simple-root matrix has full rank
        let mut cols = Vec::new();
        for c in 0..self.eps_dim {
            let mut trial = cols.clone();
            trial.push(c);
            let sub: Vec<Vec<Rational>> =
                self.simple_eps.iter().map(|a| trial.iter().map(|&j| a[j].clone()).collect()).collect();
            if exact_rank(sub).ok()? == trial.len() {
                cols = trial;
            }
            if cols.len() == self.rank {
                break;
            }
        }
        let a: Vec<Vec<Rational>> =
            self.simple_eps.iter().map(|s| cols.iter().map(|&j| s[j].clone()).collect()).collect();
        let b: Vec<Rational> = cols.iter().map(|&j| v[j].clone()).collect();
        let x = crate::arith::matrix::solve_left(&a, &b)?;
        (self.eps_rat(&x) == v).then_some(x)
    }

    /// α^∨ = 2α/(α,α) in ε-coordinates.
    pub fn coroot(&self, alpha: &[i64]) -> Result<Vec<Rational>> {
        let aa = self.form(alpha, alpha);
        if aa == 0 {
            return Err(Error::IsotropicRoot);
        }
        let f = rat(2, aa);
        Ok(self.eps(alpha).into_iter().map(|x| x * &f).collect())
    }

    /// Maximal unbroken string β - dα, …, β + uα inside R ∪ {0}.
    pub fn root_string(&self, alpha: &[i64], beta: &[i64]) -> Result<(i64, i64)> {
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(fmt_vec(alpha)));
        }
        let in_sys = |v: &[i64]| v.iter().all(|&x| x == 0) || self.is_root(v);
        if !in_sys(beta) {
            return Err(Error::NotARoot(fmt_vec(beta)));
        }
        let step = |j: i64| -> RootCoords { beta.iter().zip(alpha).map(|(b, a)| b + j * a).collect() };
        let mut d = 0;
        while in_sys(&step(-(d + 1))) {
            d += 1;
        }
        let mut u = 0;
        while in_sys(&step(u + 1)) {
            u += 1;
        }
        Ok((d, u))
    }

    /// Classical root count for the type.
    pub fn expected_count(ty: CartanType, l: usize) -> usize {
        match ty {
            CartanType::A => l * (l + 1),
            CartanType::B | CartanType::C => 2 * l * l,
            CartanType::D => 2 * l * (l - 1),
            CartanType::E => [72, 126, 240][l - 6],
            CartanType::F => 48,
            CartanType::G => 12,
        }
    }
}

pub fn build_finite(ty: CartanType, rank: usize) -> Result<FiniteRootSystem> {
    FiniteRootSystem::build(ty, rank)
}
