//! Acceptance suite: one line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test -p ears-cli --test acceptance`.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use ears_core::arith::rational::int;
use ears_core::arith::{exact_rank, Cyclotomic, Rational};
use ears_core::ears::{
    affine_localize, axioms_check, filtration_build, semilattice_closure_check, subsystem_rt, classify, Decomposition,
    EarsDatum, EarsRoot, LemmaInput, RootSet,
};
use ears_core::finroots::{build_finite, diagram_automorphism, CartanType};
use ears_core::lattice::{box_points, Lattice, Semilattice};
use ears_core::realize::{rokn3_check, tkk_bracket_class, toroidal_isotropic_space, BlDatum, JordanTorus};
use ears_core::twist::TwistDatum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const AC1_MAX: Duration = Duration::from_secs(1);
const AC3_MAX: Duration = Duration::from_secs(1);
const AC5_MAX: Duration = Duration::from_secs(30);
const AC7_BOX: i64 = 2;
const AC8_BOX: i64 = 2;
const AC9_BOX: i64 = 3;
const AC10_BOX: i64 = 3;
const AC10_MIN_CASES: usize = 20;
const AC11_INSTANCES: usize = 50;
const AC11_SEED: u64 = 0x5eed_ea75;

type Outcome = Result<String, String>;

fn d4_triality() -> TwistDatum {
    let r = build_finite(CartanType::D, 4).unwrap();
    let s = diagram_automorphism(&r, 3).unwrap();
    TwistDatum::new(r, s).unwrap()
}

fn idx2() -> Semilattice {
    Semilattice::standard(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap()
}

fn lattice_s(nu: usize) -> Semilattice {
    Semilattice::full(Lattice::standard(nu))
}

fn two_lattice(nu: usize) -> Semilattice {
    Semilattice::full(Lattice::new(nu, (0..nu).map(|i| (0..nu).map(|j| 2 * (i == j) as i64).collect()).collect()).unwrap())
}

fn e(nu: usize, i: usize) -> Vec<i64> {
    (0..nu).map(|j| (i == j) as i64).collect()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- AC1

fn ac1() -> Outcome {
    let start = Instant::now();
    let t = d4_triality();
    // Table 1, as ε-coordinate vectors
    let eps = |v: [i64; 4]| v.to_vec();
    let table1: BTreeSet<BTreeSet<Vec<i64>>> = [
        vec![eps([1, -1, 0, 0]), eps([0, 0, 1, -1]), eps([0, 0, 1, 1])],
        vec![eps([1, 0, -1, 0]), eps([0, 1, 0, -1]), eps([0, 1, 0, 1])],
        vec![eps([1, 0, 0, -1]), eps([1, 0, 0, 1]), eps([0, 1, 1, 0])],
        vec![eps([1, 1, 0, 0])],
        vec![eps([1, 0, 1, 0])],
        vec![eps([0, 1, -1, 0])],
    ]
    .into_iter()
    .map(|o| o.into_iter().collect())
    .collect();
    let host = t.host();
    let got: BTreeSet<BTreeSet<Vec<i64>>> = t
        .orbits()
        .positive()
        .map(|o| {
            o.members
                .iter()
                .map(|r| host.eps(r).iter().map(|x| x.to_integer().try_into().unwrap()).collect())
                .collect()
        })
        .collect();
    let el = start.elapsed();
    check(got == table1, || format!("orbits differ: {got:?}"))?;
    check(el < AC1_MAX, || format!("took {el:?}"))?;
    Ok(format!("6 orbits equal as sets ({el:.2?})"))
}

// ---------------------------------------------------------------- AC2

/// π_k by direct averaging over α1 → α3 → α4 → α1, α2 fixed.
fn oracle_pi(v: &[i64], k: i64) -> Vec<Cyclotomic> {
    let perm = [2usize, 1, 3, 0];
    let mut acc = vec![Cyclotomic::zero(3); 4];
    let mut w: Vec<i64> = v.to_vec();
    for i in 0..3i64 {
        let c = Cyclotomic::omega_pow(3, -i * k).scale(&Rational::new(1.into(), 3.into()));
        for j in 0..4 {
            acc[j] = &acc[j] + &c.scale(&int(w[j]));
        }
        let mut next = vec![0; 4];
        for j in 0..4 {
            next[perm[j]] = w[j];
        }
        w = next;
    }
    acc
}

fn lin(a: &Cyclotomic, x: &[Cyclotomic], b: &Cyclotomic, y: &[Cyclotomic]) -> Vec<Cyclotomic> {
    x.iter().zip(y).map(|(p, q)| &(a * p) + &(b * q)).collect()
}

fn ac2() -> Outcome {
    let t = d4_triality();
    let c = |n: i64| Cyclotomic::from_rational(3, int(n));
    let one_w = &c(1) + &Cyclotomic::omega_pow(3, 1);
    let zero = vec![Cyclotomic::zero(3); 4];
    let a2: Vec<Cyclotomic> = [0, 1, 0, 0].iter().map(|&x| c(x)).collect();
    let pi_a1 = oracle_pi(&[1, 0, 0, 0], 0);
    let pi1_a1 = oracle_pi(&[1, 0, 0, 0], 1);
    let conj = |v: &[Cyclotomic]| v.iter().map(Cyclotomic::conj).collect::<Vec<_>>();
    // (rep, π coefficients on (π(α1), α2), π1 coefficient on π1(α1), printed row)
    let rows: Vec<([i64; 4], i64, i64, Cyclotomic, [&str; 4])> = vec![
        ([1, 0, 0, 0], 1, 0, c(1), ["α1 = ε1 - ε2", "π(α1)", "π1(α1)", "conj(π1(α1))"]),
        ([1, 1, 0, 0], 1, 1, c(1), ["α1 + α2 = ε1 - ε3", "π(α1) + α2", "π1(α1)", "conj(π1(α1))"]),
        ([1, 1, 1, 0], 2, 1, one_w.clone(), ["α1 + α2 + α3 = ε1 - ε4", "2π(α1) + α2", "(1 + ω)π1(α1)", "conj((1 + ω)π1(α1))"]),
        ([1, 2, 1, 1], 3, 2, c(0), ["α1 + 2α2 + α3 + α4 = ε1 + ε2", "3π(α1) + 2α2", "0", "0"]),
        ([1, 1, 1, 1], 3, 1, c(0), ["α1 + α2 + α3 + α4 = ε1 + ε3", "3π(α1) + α2", "0", "0"]),
        ([0, 1, 0, 0], 0, 1, c(0), ["α2 = ε2 - ε3", "α2", "0", "0"]),
    ];
    let table = t.projection_table();
    check(table.rows.len() == rows.len(), || format!("{} rows", table.rows.len()))?;
    for (r, a, b, k1, printed) in &rows {
        let want0 = lin(&c(*a), &pi_a1, &c(*b), &a2);
        let want1 = lin(k1, &pi1_a1, &c(0), &zero);
        let want2 = lin(&k1.conj(), &conj(&pi1_a1), &c(0), &zero);
        // the oracle agrees with the published entries
        check(oracle_pi(r, 0) == want0, || format!("oracle π{r:?}"))?;
        check(oracle_pi(r, 1) == want1, || format!("oracle π1{r:?}"))?;
        check(oracle_pi(r, 2) == want2, || format!("oracle π2{r:?}"))?;
        // the library agrees with both
        for (k, w) in [(0, &want0), (1, &want1), (2, &want2)] {
            check(&t.pi_k(r, k).coords == w, || format!("π{k}({r:?}) = {:?}", t.pi_k(r, k)))?;
        }
        let row = table.rows.iter().find(|x| x.rep == r.to_vec()).ok_or_else(|| format!("no row for {r:?}"))?;
        let got = [row.simple_label.clone() + " = " + &row.eps_label, row.cells[0].expr.clone(), row.cells[1].expr.clone(), row.cells[2].expr.clone()];
        check(got.iter().zip(printed).all(|(g, p)| g == p), || format!("row {got:?} vs {printed:?}"))?;
    }
    // π1(α1+α2+α3) = (1+ω)π1(α1) exactly
    let lhs = t.pi_k(&[1, 1, 1, 0], 1);
    check(lhs == t.pi_k(&[1, 0, 0, 0], 1).scale(&one_w), || "(1+ω) identity".into())?;
    Ok("18 entries exact; (1+ω)π1(α1) and conjugate column confirmed".into())
}

// ---------------------------------------------------------------- AC3

fn ac3() -> Outcome {
    let start = Instant::now();
    let t = d4_triality();
    let mut dims = Vec::new();
    for k in 1..=12i64 {
        let d = t.isotropic_dim(k).map_err(|e| e.to_string())?;
        let want = if k % 3 == 0 { 2 } else { 1 };
        check(d.dim == want, || format!("k={k}: dim {} ≠ {want}", d.dim))?;
        dims.push(d.dim.to_string());
    }
    let el = start.elapsed();
    check(el < AC3_MAX, || format!("took {el:?}"))?;
    Ok(format!("dims {} ({el:.2?})", dims.join(",")))
}

// ---------------------------------------------------------------- AC4

fn ac4() -> Outcome {
    let mut pairs = 0;
    for (ty, l, m) in [(CartanType::D, 4, 3), (CartanType::A, 3, 2), (CartanType::D, 4, 2), (CartanType::A, 4, 2)] {
        let r = build_finite(ty, l).unwrap();
        let n = r.roots().len();
        let t = TwistDatum::new(r, diagram_automorphism(&build_finite(ty, l).unwrap(), m).unwrap()).unwrap();
        let rep = t.separation_check();
        check(rep.separated, || format!("{ty}{l}/{m}: {:?}", rep.witnesses))?;
        check(rep.pairs_checked == n * n, || format!("{ty}{l}/{m}: {} pairs of {}", rep.pairs_checked, n * n))?;
        pairs += rep.pairs_checked;
    }
    Ok(format!("D4/3, A3/2, D4/2, A4/2 separated ({pairs} ordered pairs)"))
}

// ---------------------------------------------------------------- AC5

fn ac5() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for l in [2usize, 3] {
        let bl = BlDatum::new(l, idx2()).map_err(|e| e.to_string())?;
        for sigma in [[1i64, 0], [1, 1]] {
            for k in 1..=4i64 {
                // L = 2Z²
                let in_l = sigma.iter().all(|x| (k * x) % 2 == 0);
                let want = if in_l { l } else { 1 };
                let got = bl.isotropic_dim(&sigma, k, 2).map_err(|e| e.to_string())?;
                check(got.dim == want, || format!("ℓ={l} σ={sigma:?} k={k}: {} ≠ {want}", got.dim))?;
                n += 1;
            }
        }
    }
    let el = start.elapsed();
    check(el < AC5_MAX, || format!("took {el:?}"))?;
    Ok(format!("{n} cases from matrix brackets ({el:.2?})"))
}

// ---------------------------------------------------------------- AC6

fn ac6() -> Outcome {
    let mut n = 0;
    for l in [1usize, 2] {
        for delta in [[1i64, 0], [0, 1], [1, 1]] {
            for k in 1..=3 {
                let sp = toroidal_isotropic_space(l, 2, &delta, k, 3).map_err(|e| e.to_string())?;
                check(sp.dim == l, || format!("ℓ={l} δ={delta:?} k={k}: {}", sp.dim))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} cases, dim = ℓ"))
}

// ---------------------------------------------------------------- AC7

fn ac7() -> Outcome {
    let jt = JordanTorus::new(idx2()).map_err(|e| e.to_string())?;
    let s = idx2();
    let (mut total, mut case3) = (0, 0);
    for i in 0..3usize {
        let lam = jt.tau(i).to_vec();
        for sigma in box_points(2, AC7_BOX) {
            if sigma.iter().all(|&x| x == 0) {
                continue;
            }
            let plus: Vec<i64> = lam.iter().zip(&sigma).map(|(a, b)| a + b).collect();
            if !s.contains(&plus) {
                continue;
            }
            for t in -3..=3i64 {
                for n in -3..=3i64 {
                    let np = t - n;
                    if np.abs() > 3 {
                        continue;
                    }
                    let left: Vec<i64> = lam.iter().zip(&sigma).map(|(a, b)| a + n * b).collect();
                    let right: Vec<i64> = lam.iter().zip(&sigma).map(|(a, b)| -a + np * b).collect();
                    if !s.contains(&left) || !s.contains(&right) {
                        continue;
                    }
                    let c = tkk_bracket_class(&jt, i, &sigma, n, np, AC7_BOX).map_err(|e| e.to_string())?;
                    check(c.agree, || format!("i={i} σ={sigma:?} n={n} n'={np}: {} vs {}", c.formula, c.direct))?;
                    let want_case = if i == 0 || t % 2 == 0 {
                        1
                    } else if matches!(jt.coset(&sigma), Some(j) if j == 0 || j == i) {
                        2
                    } else {
                        3
                    };
                    check(c.case == want_case, || format!("case {} ≠ {want_case}", c.case))?;
                    if c.case == 3 {
                        check(c.nonzero, || format!("case 3 vanished at i={i} σ={sigma:?} n={n}"))?;
                        case3 += 1;
                    }
                    total += 1;
                }
            }
        }
    }
    let rep = rokn3_check(&jt, AC7_BOX);
    check(rep.is_ok(), || format!("rokn3: {:?}", rep.violations.first()))?;
    Ok(format!("{total} classes agree ({case3} in case 3); identities hold"))
}

// ---------------------------------------------------------------- AC8

/// d − u = (β, α^∨) by scanning strings with the membership oracle.
fn string_law<R: RootSet + ?Sized>(r: &R, b: i64) -> Result<usize, String> {
    let fin = r.finite();
    let all = r.enumerate(b);
    let mut pairs = 0;
    for a in all.iter().filter(|x| !x.is_isotropic()) {
        for beta in &all {
            let at = |j: i64| r.contains(&beta.add(&a.scale(j)));
            let d = (1..).take_while(|&j| at(-j)).count() as i64;
            let u = (1..).take_while(|&j| at(j)).count() as i64;
            let pairing = 2 * fin.form(&beta.finite, &a.finite) / fin.form(&a.finite, &a.finite);
            if d - u != pairing {
                return Err(format!("{a}-string through {beta}: d={d}, u={u}, pairing {pairing}"));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

fn ac8() -> Outcome {
    let fixtures = [
        ("A2/lattice", EarsDatum::new(build_finite(CartanType::A, 2).unwrap(), lattice_s(2), None).unwrap()),
        ("B2/index 2", EarsDatum::new(build_finite(CartanType::B, 2).unwrap(), idx2(), Some(two_lattice(2))).unwrap()),
        ("A1/index 2", EarsDatum::new(build_finite(CartanType::A, 1).unwrap(), idx2(), None).unwrap()),
    ];
    let (mut systems, mut pairs) = (0, 0);
    for (name, r) in &fixtures {
        let rep = axioms_check(r, AC8_BOX);
        check(rep.is_ok(), || format!("{name}: {:?}", rep.violations.first()))?;
        pairs += string_law(r, AC8_BOX).map_err(|e| format!("{name}: {e}"))?;
        systems += 1;
        for d in box_points(2, 1) {
            if d.iter().all(|&x| x == 0) || !r.r0().contains(&d) {
                continue;
            }
            let v = affine_localize(r, &EarsRoot::isotropic(r.finite().rank(), d.clone())).map_err(|e| e.to_string())?;
            let rep = axioms_check(&v, AC8_BOX);
            check(rep.is_ok(), || format!("{name} at δ={d:?}: {:?}", rep.violations.first()))?;
            pairs += string_law(&v, AC8_BOX).map_err(|e| format!("{name} at δ={d:?}: {e}"))?;
            systems += 1;
        }
    }
    Ok(format!("{systems} systems pass R1–R8; string law on {pairs} pairs"))
}

// ---------------------------------------------------------------- AC9

fn ac9() -> Outcome {
    let cases = [
        ("A2/ν=3/lattice", EarsDatum::new(build_finite(CartanType::A, 2).unwrap(), lattice_s(3), None).unwrap(), vec![e(3, 0), e(3, 1), e(3, 2)]),
        ("A1/ν=2/index 2", EarsDatum::new(build_finite(CartanType::A, 1).unwrap(), idx2(), None).unwrap(), vec![e(2, 0), e(2, 1)]),
    ];
    for (name, r, sigma) in &cases {
        let f = filtration_build(r, sigma, None, AC9_BOX).map_err(|e| format!("{name}: {e}"))?;
        check(f.report.is_ok(), || format!("{name}: {:?}", f.report.violations.first()))?;
        check(f.links.len() == r.nu() + 1, || format!("{name}: {} links", f.links.len()))?;
        let want = classify(r.finite(), r.finite().roots());
        for (k, link) in f.links.iter().enumerate() {
            check(link.nullity() == k, || format!("{name}: link {k} has nullity {}", link.nullity()))?;
            check(link.rank() == r.finite().rank() && link.type_label() == want, || format!("{name}: link {k} is {}", link.type_label()))?;
        }
        // the top link is R itself on the box
        let top: BTreeSet<EarsRoot> = f.links[r.nu()].enumerate(AC9_BOX).into_iter().collect();
        let all: BTreeSet<EarsRoot> = r.enumerate(AC9_BOX).into_iter().collect();
        check(top == all, || format!("{name}: top link ≠ R"))?;
    }
    Ok("both chains have nullities 0..ν, constant type, closed links".into())
}

// ---------------------------------------------------------------- AC10

fn ac10() -> Outcome {
    let mut cases: Vec<(EarsDatum, LemmaInput)> = Vec::new();
    let mut skipped = 0;
    let u1_rank2 = |a: usize, b: usize, nu: usize| -> Vec<Vec<Vec<i64>>> {
        let ea = e(nu, a);
        let eb = e(nu, b);
        let mul = |v: &[i64], k: i64| v.iter().map(|x| k * x).collect::<Vec<_>>();
        let add = |v: &[i64], w: &[i64]| v.iter().zip(w).map(|(x, y)| x + y).collect::<Vec<_>>();
        vec![
            vec![ea.clone(), eb.clone()],
            vec![ea.clone(), mul(&eb, 2)],
            vec![mul(&ea, 2), eb.clone()],
            vec![add(&ea, &eb), mul(&eb, 2)],
            vec![mul(&ea, 2), mul(&eb, 2)],
            vec![ea.clone(), mul(&eb, 3)],
            vec![ea.clone()],
            vec![eb.clone()],
            vec![add(&ea, &eb)],
        ]
    };
    let mut push = |r: &EarsDatum, d: Decomposition, u1: &[Vec<i64>], l2p: Vec<Vec<i64>>| {
        let li = LemmaInput::restricted(r.s(), d, u1, l2p).unwrap();
        cases.push((r.clone(), li));
    };
    // ν = 2, Λ1 = Z², S of index 2
    for ty in [(CartanType::B, 2), (CartanType::A, 1)] {
        let l = (ty.0 == CartanType::B).then(|| two_lattice(2));
        let r = EarsDatum::new(build_finite(ty.0, ty.1).unwrap(), idx2(), l).unwrap();
        for u1 in u1_rank2(0, 1, 2) {
            push(&r, Decomposition { lambda1: vec![e(2, 0), e(2, 1)], lambda2: vec![] }, &u1, vec![]);
        }
    }
    // ν = 2, S a lattice, Λ1 = Ze1, Λ2 = Ze2
    let r = EarsDatum::new(build_finite(CartanType::B, 2).unwrap(), lattice_s(2), Some(lattice_s(2))).unwrap();
    for u1 in [vec![e(2, 0)], vec![vec![2, 0]], vec![vec![3, 0]]] {
        for l2p in [vec![], vec![e(2, 1)], vec![vec![0, 2]]] {
            push(&r, Decomposition { lambda1: vec![e(2, 0)], lambda2: vec![e(2, 1)] }, &u1, l2p);
        }
    }
    // ν = 3, S = ({0, e1, e2} + 2Λ1) ⊕ Ze3
    let s3 = Semilattice::standard(3, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
    let r = EarsDatum::new(build_finite(CartanType::B, 3).unwrap(), s3, Some(two_lattice(3))).unwrap();
    for u1 in u1_rank2(0, 1, 3) {
        for l2p in [vec![], vec![vec![0, 0, 2]], vec![e(3, 2)]] {
            push(&r, Decomposition { lambda1: vec![e(3, 0), e(3, 1)], lambda2: vec![e(3, 2)] }, &u1, l2p);
        }
    }
    let mut confirmed = 0;
    for (r, li) in &cases {
        let rep = semilattice_closure_check(r, li, AC10_BOX);
        if rep.violations.iter().any(|v| v.check.starts_with("hyp.")) {
            skipped += 1;
            continue;
        }
        check(rep.is_ok(), || format!("{} ν={} S̃₁ reps {:?}: {:?}", r.finite().label(), r.nu(), li.s1_tilde.reps(), rep.violations.first()))?;
        confirmed += 1;
    }
    check(confirmed >= AC10_MIN_CASES, || format!("only {confirmed} hypothesis-satisfying cases"))?;
    Ok(format!("{confirmed} S̃ confirmed over ν ∈ {{2,3}} ({skipped} generated candidates failed the hypotheses)"))
}

// ---------------------------------------------------------------- AC11

fn all_matrices(rows: usize, cols: usize, vals: &[i64]) -> Vec<Vec<Vec<i64>>> {
    let cells = rows * cols;
    let total = vals.len().pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut flat = Vec::with_capacity(cells);
            for _ in 0..cells {
                flat.push(vals[code % vals.len()]);
                code /= vals.len();
            }
            flat.chunks(cols).map(<[i64]>::to_vec).collect()
        })
        .collect()
}

fn ac11() -> Outcome {
    let data = common::fixture_data();
    let mut rng = ChaCha8Rng::seed_from_u64(AC11_SEED);
    for n in 0..AC11_INSTANCES {
        let r = &data[n % data.len()];
        let t = common::random_t(r, &mut rng);
        let v = subsystem_rt(r, &t).map_err(|e| e.to_string())?;
        let got: BTreeSet<EarsRoot> = v.enumerate(2).into_iter().collect();
        let want = common::naive_rt(r, &t, 2);
        check(got == want, || {
            format!("instance {n} ({}): T = {:?}", r.finite().label(), t.iter().map(|x| x.to_string()).collect::<Vec<_>>())
        })?;
    }
    let mut mats = 0;
    let mut compare = |m: Vec<Vec<i64>>| -> Result<(), String> {
        let q: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        let a = exact_rank(q).map_err(|e| e.to_string())?;
        let b = common::minor_rank(&m);
        mats += 1;
        check(a == b, || format!("{m:?}: exact_rank {a}, minors {b}"))
    };
    for rows in 1..=3 {
        for cols in 1..=3 {
            for m in all_matrices(rows, cols, &[-1, 0, 1]) {
                compare(m)?;
            }
        }
    }
    for m in all_matrices(2, 2, &[-2, -1, 0, 1, 2]) {
        compare(m)?;
    }
    for (rows, cols) in [(4, 4), (3, 4), (4, 3), (2, 4), (4, 2), (4, 1), (1, 4)] {
        for m in all_matrices(rows, cols, &[0, 1]) {
            compare(m)?;
        }
    }
    use rand::Rng;
    for _ in 0..5000 {
        let m: Vec<Vec<i64>> = (0..4).map(|_| (0..4).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        compare(m)?;
    }
    Ok(format!("{AC11_INSTANCES} random subsystems match the naive closure; {mats} matrices match minor rank"))
}

fn main() {
    let criteria: Vec<(&str, &str, fn() -> Outcome)> = vec![
        ("AC1", "D4 triality orbit table", ac1),
        ("AC2", "D4 projection table", ac2),
        ("AC3", "D4 twisted isotropic dimensions", ac3),
        ("AC4", "orbit separation", ac4),
        ("AC5", "B-type realization dimensions", ac5),
        ("AC6", "toroidal realization dimensions", ac6),
        ("AC7", "A1 Jordan torus bracket classes", ac7),
        ("AC8", "axiom suite and root strings", ac8),
        ("AC9", "filtrations", ac9),
        ("AC10", "semilattice closure", ac10),
        ("AC11", "oracle equivalences", ac11),
    ];
    let mut failed = 0;
    for (id, title, f) in criteria {
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let el = start.elapsed();
        match res {
            Ok(msg) => println!("[PASS] {id} {title}: {msg} [{el:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {id} {title}: {msg} [{el:.2?}]");
            }
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
