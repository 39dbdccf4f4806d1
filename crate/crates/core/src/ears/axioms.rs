//! Truncated verification of (R1)–(R8) and of (real-)closedness.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::datum::{EarsRoot, RootSet};
use crate::arith::matrix::{exact_rank, rational_rows};
use crate::report::Report;

/// Runs every axiom on the members with lattice part in the box.
///
/// Membership is exact for any lattice vector, so root strings and
/// negatives are tested without truncation; only the set of pairs
/// considered is limited to the box.
pub fn axioms_check<R: RootSet + ?Sized>(r: &R, b: i64) -> Report {
    let mut rep = Report::new();
    let pre = r.precheck();
    for v in pre.violations {
        rep.fail(format!("precheck.{}", v.check), v.witness);
    }
    let fin = r.finite();
    let l = fin.rank();
    let nu = r.nu();
    let members = r.enumerate(b);

    // R1
    if !r.contains(&EarsRoot::isotropic(l, vec![0; nu])) {
        rep.fail("R1", "0 ∉ R");
    }

    // R2
    for x in &members {
        if !r.contains(&x.neg()) {
            rep.fail("R2", format!("{x} ∈ R but its negative is not"));
        }
    }

    // R3
    let flat: Vec<Vec<i64>> = members.iter().map(|x| x.flat()).collect();
    let total = if flat.is_empty() { 0 } else { exact_rank(rational_rows(&flat)).unwrap_or(0) };
    let fin_parts: Vec<Vec<i64>> = members.iter().filter(|x| !x.is_isotropic()).map(|x| x.finite.clone()).collect();
    let fin_rank = if fin_parts.is_empty() { 0 } else { exact_rank(rational_rows(&fin_parts)).unwrap_or(0) };
    let iso: Vec<Vec<i64>> = members.iter().filter(|x| x.is_isotropic()).map(|x| x.lattice.clone()).collect();
    let iso_rank = if iso.is_empty() || nu == 0 { 0 } else { exact_rank(rational_rows(&iso)).unwrap_or(0) };
    if total != fin_rank + iso_rank {
        rep.fail("R3", format!("span has dimension {total}, finite {fin_rank} + isotropic {iso_rank}"));
    }
    if let Some(want) = r.full_span() {
        if total != want {
            rep.fail("R3", format!("span has dimension {total}, expected {want}"));
        }
    }

    // R4
    for x in members.iter().filter(|x| !x.is_isotropic()) {
        if r.contains(&x.scale(2)) {
            rep.fail("R4", format!("2·{x} ∈ R"));
        }
    }

    rep.note("R5 holds structurally: roots lie in an integer lattice");

    // R6
    let nonisotropic: Vec<&EarsRoot> = members.iter().filter(|x| !x.is_isotropic()).collect();
    let r6: Vec<String> = nonisotropic
        .par_iter()
        .flat_map_iter(|alpha| {
            let aa = fin.form(&alpha.finite, &alpha.finite);
            members.iter().filter_map(move |beta| {
                let pairing = 2 * fin.form(&beta.finite, &alpha.finite) / aa;
                let js: Vec<i64> = (-7..=7).filter(|&j| r.contains(&beta.add(&alpha.scale(j)))).collect();
                let (lo, hi) = (*js.first()?, *js.last()?);
                let unbroken = js.len() as i64 == hi - lo + 1 && lo <= 0 && hi >= 0 && lo > -7 && hi < 7;
                let (d, u) = (-lo, hi);
                if !unbroken || d - u != pairing {
                    Some(format!("{alpha}-string through {beta}: members at j ∈ {js:?}, (β,α^∨) = {pairing}"))
                } else {
                    None
                }
            })
        })
        .collect();
    for w in r6 {
        rep.fail("R6", w);
    }

    // R7
    let wide = r.enumerate(b + 1);
    let wide_nonisotropic: Vec<&EarsRoot> = wide.iter().filter(|x| !x.is_isotropic()).collect();
    for s in members.iter().filter(|x| x.is_isotropic()) {
        if !wide_nonisotropic.iter().any(|a| r.contains(&a.add(s))) {
            rep.fail("R7", format!("isotropic {s} is isolated"));
        }
    }

    // R8
    if let Some(w) = disconnected_witness(r, &members) {
        rep.fail("R8", w);
    }
    rep
}

/// Connectivity of the nonisotropic members under (α,β) ≠ 0. The form
/// only sees finite parts, and equal finite parts are always adjacent,
/// so it suffices to join the finite parts present.
fn disconnected_witness<R: RootSet + ?Sized>(r: &R, members: &[EarsRoot]) -> Option<String> {
    let parts: Vec<Vec<i64>> =
        members.iter().filter(|x| !x.is_isotropic()).map(|x| x.finite.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    let comps = components(r.finite(), &parts);
    if comps.len() > 1 {
        let reps: Vec<String> = comps.iter().map(|c| crate::finroots::fmt_simple(&c[0])).collect();
        Some(format!("{} components, represented by {}", comps.len(), reps.join(", ")))
    } else {
        None
    }
}

/// Connected components of a set of finite roots under (α,β) ≠ 0.
pub fn components(fin: &crate::finroots::FiniteRootSystem, parts: &[Vec<i64>]) -> Vec<Vec<Vec<i64>>> {
    let n = parts.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if fin.form(&parts[i], &parts[j]) != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Vec<i64>>> = BTreeMap::new();
    for i in 0..n {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(parts[i].clone());
    }
    groups.into_values().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedMode {
    /// (R'+R') ∩ R ⊆ R'
    Closed,
    /// (R'+R'^×) ∩ R ⊆ R'
    RealClosed,
}

impl std::str::FromStr for ClosedMode {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "closed" => Ok(ClosedMode::Closed),
            "real-closed" => Ok(ClosedMode::RealClosed),
            _ => Err(crate::Error::Parse(format!("unknown closedness mode {s:?}"))),
        }
    }
}

/// Exhaustive over pairs of in-box members of `sub` whose sum is in the box.
pub fn closedness_check<A: RootSet + ?Sized, B: RootSet + ?Sized>(sub: &A, host: &B, b: i64, mode: ClosedMode) -> Report {
    let mut rep = Report::new();
    let members = sub.enumerate(b);
    let right: Vec<&EarsRoot> = match mode {
        ClosedMode::Closed => members.iter().collect(),
        ClosedMode::RealClosed => members.iter().filter(|x| !x.is_isotropic()).collect(),
    };
    let bad: Vec<String> = members
        .par_iter()
        .flat_map_iter(|x| {
            right.iter().filter_map(move |y| {
                let s = x.add(y);
                (s.in_box(b) && host.contains(&s) && !sub.contains(&s)).then(|| format!("{x} + {y} = {s}"))
            })
        })
        .collect();
    let check = match mode {
        ClosedMode::Closed => "closed",
        ClosedMode::RealClosed => "real_closed",
    };
    for w in bad.into_iter().take(50) {
        rep.fail(check, w);
    }
    rep.note(format!("verified in box {b}"));
    rep
}
