//! Row-style Hermite normal form over Z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// HNF of the row span of `gens` (all rows of length `n`). Returns the
/// nonzero rows, each with a positive pivot strictly right of the previous
/// one, and entries above each pivot reduced into [0, pivot).
pub fn hnf(gens: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut out_rows = 0usize;
    for col in 0..n {
        // gcd-reduce column `col` among rows out_rows.. until one nonzero remains
        loop {
            let nz: Vec<usize> = (out_rows..a.len()).filter(|&i| !a[i][col].is_zero()).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    a.swap(out_rows, i);
                    if a[out_rows][col].is_negative() {
                        for x in a[out_rows].iter_mut() {
                            *x = -x.clone();
                        }
                    }
                    out_rows += 1;
                }
                break;
            }
            let &p = nz.iter().min_by_key(|&&i| a[i][col].abs()).unwrap();
            for &i in &nz {
                if i == p {
                    continue;
                }
                let q = a[i][col].div_floor(&a[p][col]);
                let prow = a[p].clone();
                for (x, y) in a[i].iter_mut().zip(&prow) {
                    *x -= &q * y;
                }
            }
        }
    }
    a.truncate(out_rows);
    // reduce above pivots
    for r in 0..a.len() {
        let pc = (0..n).find(|&c| !a[r][c].is_zero()).unwrap();
        for above in 0..r {
            let q = a[above][pc].div_floor(&a[r][pc]);
            if !q.is_zero() {
                let row = a[r].clone();
                for (x, y) in a[above].iter_mut().zip(&row) {
                    *x -= &q * y;
                }
            }
        }
    }
    a.into_iter()
        .map(|r| r.into_iter().map(|x| x.to_i64().expect("HNF entry overflows i64")).collect())
        .collect()
}

pub fn pivot_col(row: &[i64]) -> usize {
    row.iter().position(|&x| x != 0).expect("HNF rows are nonzero")
}

/// Reduce v against an HNF basis; returns the remainder (zero iff v is in the span).
pub fn reduce(basis: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    for row in basis {
        let p = pivot_col(row);
        let q = v[p].div_euclid(row[p]);
        if q != 0 {
            for (x, y) in v.iter_mut().zip(row) {
                *x -= q * y;
            }
        }
    }
    v
}

/// Integer coordinates of v in the HNF basis, if v lies in the span.
pub fn coords_in(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let mut v = v.to_vec();
    let mut c = Vec::with_capacity(basis.len());
    for row in basis {
        let p = pivot_col(row);
        if v[p] % row[p] != 0 {
            return None;
        }
        let q = v[p] / row[p];
        for (x, y) in v.iter_mut().zip(row) {
            *x -= q * y;
        }
        c.push(q);
    }
    v.iter().all(|&x| x == 0).then_some(c)
}
