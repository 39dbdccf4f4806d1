//! Orbit and projection tables in a printable layout.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::projection::{ProjectionVector, TwistDatum};
use crate::arith::cyclotomic::Cyclotomic;
use crate::arith::rational::fmt_rat;
use crate::finroots::{fmt_eps, fmt_simple, RootCoords};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRow {
    pub name: String,
    pub members: Vec<String>,
    pub members_simple: Vec<RootCoords>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjCell {
    pub k: u32,
    /// ε-coordinates, each entry as cyclotomic coefficients (constant first)
    pub eps: Vec<Vec<String>>,
    /// coefficients on the column basis
    pub coeffs: Vec<Vec<String>>,
    pub expr: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjRow {
    pub rep: RootCoords,
    pub simple_label: String,
    pub eps_label: String,
    pub cells: Vec<ProjCell>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionTable {
    pub order: u32,
    /// labels of the basis used in each column
    pub basis: Vec<Vec<String>>,
    pub rows: Vec<ProjRow>,
}

/// Solve v = Σ c_j b_j over Q(ω) for independent b_j.
pub fn solve_in_basis(basis: &[Vec<Cyclotomic>], v: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    let r = basis.len();
    let m = v.first().map_or(1, Cyclotomic::order);
    if r == 0 {
        return v.iter().all(Cyclotomic::is_zero).then(Vec::new);
    }
    // rows = coordinates, columns = basis vectors + rhs
    let n = v.len();
    let mut a: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|i| {
            let mut row: Vec<Cyclotomic> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let mut piv_cols = Vec::new();
    let mut row = 0;
    for c in 0..r {
        let Some(p) = (row..n).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(row, p);
        let inv = a[row][c].try_inv().ok()?;
        for j in 0..=r {
            a[row][j] = &a[row][j] * &inv;
        }
        for i in 0..n {
            if i != row && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=r {
                    let t = &f * &a[row][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
        piv_cols.push(c);
        row += 1;
    }
    if (row..n).any(|i| !a[i][r].is_zero()) || piv_cols.len() < r {
        return None;
    }
    let mut c = vec![Cyclotomic::zero(m); r];
    for (i, &pc) in piv_cols.iter().enumerate() {
        c[pc] = a[i][r].clone();
    }
    Some(c)
}

fn term(c: &Cyclotomic, label: &str) -> Option<(bool, String)> {
    if c.is_zero() {
        return None;
    }
    match c.to_rational() {
        Some(q) => {
            let neg = q.is_negative();
            let mag = q.abs();
            let s = if mag.is_one() { label.to_string() } else { format!("{}{label}", fmt_rat(&mag)) };
            Some((neg, s))
        }
        None => Some((false, format!("({c}){label}"))),
    }
}

pub fn linear_expr(coeffs: &[Cyclotomic], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in coeffs.iter().zip(labels) {
        if let Some((neg, s)) = term(c, l) {
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&s);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Listing order ε_i - ε_j (j ascending), then ε_i, then ε_i + ε_j, grouped by i.
fn eps_key(v: &[crate::arith::rational::Rational]) -> (usize, i8, usize, Vec<crate::arith::rational::Rational>) {
    let nz: Vec<(usize, &crate::arith::rational::Rational)> = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
    let first = nz.first().map_or(usize::MAX, |p| p.0);
    let (sign, second) = match nz.get(1) {
        Some((j, x)) if x.is_negative() => (-1, *j),
        Some((j, _)) => (1, *j),
        None => (0, 0),
    };
    (first, sign, second, v.iter().map(|x| -x).collect())
}

fn cyc_strings(v: &[Cyclotomic]) -> Vec<Vec<String>> {
    v.iter().map(Cyclotomic::coeff_strings).collect()
}

fn pi_name(k: u32) -> String {
    if k == 0 {
        "π".into()
    } else {
        format!("π{k}")
    }
}

impl TwistDatum {
    /// Orbits in listing order of their ε-forms; members likewise.
    pub fn orbit_rows(&self, positive_only: bool) -> Vec<OrbitRow> {
        let host = self.host();
        let mut orbits: Vec<Vec<RootCoords>> = self
            .orbits()
            .orbits
            .into_iter()
            .filter(|o| !positive_only || host.is_positive(&o.rep))
            .map(|o| {
                let mut m = o.members;
                m.sort_by_cached_key(|r| eps_key(&host.eps(r)));
                m
            })
            .collect();
        orbits.sort_by_cached_key(|m| eps_key(&host.eps(&m[0])));
        orbits
            .into_iter()
            .enumerate()
            .map(|(i, m)| OrbitRow {
                name: format!("O_{}", i + 1),
                members: m.iter().map(|r| fmt_eps(&host.eps(r))).collect(),
                members_simple: m,
            })
            .collect()
    }

    pub fn orbit_table_text(&self) -> String {
        let mut s = String::from("Orbits\n");
        for r in self.orbit_rows(true) {
            s.push_str(&format!("{} = {{{}}}\n", r.name, r.members.join(", ")));
        }
        s
    }

    /// Greedy basis of π_k(h) drawn from π_k(α_1), …, π_k(α_ℓ), with labels.
    fn column_basis(&self, k: u32) -> (Vec<ProjectionVector>, Vec<String>) {
        let l = self.host().rank();
        let mut basis: Vec<ProjectionVector> = Vec::new();
        let mut labels = Vec::new();
        for i in 0..l {
            let e: Vec<i64> = (0..l).map(|j| (i == j) as i64).collect();
            let p = self.pi_k(&e, k as i64);
            if p.is_zero() {
                continue;
            }
            let vecs: Vec<Vec<Cyclotomic>> = basis.iter().map(|b| b.coords.clone()).collect();
            if solve_in_basis(&vecs, &p.coords).is_some() {
                continue;
            }
            let fixed = k == 0 && p.to_rational().is_some_and(|r| r.iter().zip(&e).all(|(a, &b)| *a == crate::arith::rational::int(b)));
            labels.push(if fixed { format!("α{}", i + 1) } else { format!("{}(α{})", pi_name(k), i + 1) });
            basis.push(p);
        }
        (basis, labels)
    }

    /// π_k of every positive orbit representative, expressed in a basis of
    /// projected simple roots. Columns past m/2 are written as conjugates.
    pub fn projection_table(&self) -> ProjectionTable {
        let m = self.order();
        let host = self.host();
        let reps: Vec<RootCoords> = self.orbit_rows(true).into_iter().map(|r| r.members_simple[0].clone()).collect();
        let bases: Vec<(Vec<ProjectionVector>, Vec<String>)> = (0..m).map(|k| self.column_basis(k)).collect();
        let mut rows = Vec::new();
        for r in &reps {
            let mut cells: Vec<ProjCell> = Vec::new();
            for k in 0..m {
                let p = self.pi_k(r, k as i64);
                let mirror = (m - k) % m;
                let conj_ok = 2 * k > m && p == self.pi_k(r, mirror as i64).conj();
                let (coeffs, expr) = if conj_ok {
                    let src: &ProjCell = &cells[mirror as usize];
                    let c: Vec<Cyclotomic> = solve_in_basis(
                        &bases[mirror as usize].0.iter().map(|b| b.conj().coords).collect::<Vec<_>>(),
                        &p.coords,
                    )
                    .expect("conjugate basis spans the column");
                    let e = if src.expr == "0" { "0".to_string() } else { format!("conj({})", src.expr) };
                    (c, e)
                } else {
                    let vecs: Vec<Vec<Cyclotomic>> = bases[k as usize].0.iter().map(|b| b.coords.clone()).collect();
                    let c = solve_in_basis(&vecs, &p.coords).expect("greedy basis spans π_k(h)");
                    let e = linear_expr(&c, &bases[k as usize].1);
                    (c, e)
                };
                cells.push(ProjCell { k, eps: cyc_strings(&p.eps(host)), coeffs: cyc_strings(&coeffs), expr });
            }
            rows.push(ProjRow {
                rep: r.clone(),
                simple_label: fmt_simple(r),
                eps_label: fmt_eps(&host.eps(r)),
                cells,
            });
        }
        let basis = (0..m as usize)
            .map(|k| {
                let mirror = (m as usize - k) % m as usize;
                if 2 * k > m as usize {
                    bases[mirror].1.iter().map(|l| format!("conj({l})")).collect()
                } else {
                    bases[k].1.clone()
                }
            })
            .collect();
        ProjectionTable { order: m, basis, rows }
    }

    pub fn projection_table_text(&self) -> String {
        let t = self.projection_table();
        let mut header = vec!["O_σ".to_string()];
        header.extend((0..t.order).map(|k| format!("{}(α)", pi_name(k))));
        let mut grid = vec![header];
        for r in &t.rows {
            let mut line = vec![format!("{} = {}", r.simple_label, r.eps_label)];
            line.extend(r.cells.iter().map(|c| c.expr.clone()));
            grid.push(line);
        }
        let ncol = grid[0].len();
        let widths: Vec<usize> =
            (0..ncol).map(|j| grid.iter().map(|row| row[j].chars().count()).max().unwrap_or(0)).collect();
        let mut s = String::new();
        for row in &grid {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, c)| format!("{}{}", c, " ".repeat(widths[j] - c.chars().count())))
                .collect();
            s.push_str(cells.join(" | ").trim_end());
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finroots::{build_finite, diagram_automorphism, CartanType};

    fn d4() -> TwistDatum {
        let r = build_finite(CartanType::D, 4).unwrap();
        let s = diagram_automorphism(&r, 3).unwrap();
        TwistDatum::new(r, s).unwrap()
    }

    #[test]
    fn d4_projection_exprs() {
        let t = d4().projection_table();
        assert_eq!(t.basis[0], vec!["π(α1)", "α2"]);
        assert_eq!(t.basis[1], vec!["π1(α1)"]);
        let exprs: Vec<Vec<&str>> =
            t.rows.iter().map(|r| r.cells.iter().map(|c| c.expr.as_str()).collect()).collect();
        assert_eq!(exprs[0], vec!["π(α1)", "π1(α1)", "conj(π1(α1))"]);
        let row3 = t.rows.iter().find(|r| r.rep == vec![1, 1, 1, 0]).unwrap();
        assert_eq!(row3.cells[0].expr, "2π(α1) + α2");
        assert_eq!(row3.cells[1].expr, "(1 + ω)π1(α1)");
        assert_eq!(row3.cells[2].expr, "conj((1 + ω)π1(α1))");
    }

    #[test]
    fn text_layout() {
        let s = d4().orbit_table_text();
        assert!(s.contains("{ε1 - ε2, ε3 - ε4, ε3 + ε4}"));
        assert_eq!(s.lines().count(), 7);
        assert!(d4().projection_table_text().lines().count() == 7);
    }
}
