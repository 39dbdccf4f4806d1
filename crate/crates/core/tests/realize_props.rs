use ears_core::arith::rational::int;
use ears_core::ears::{EarsRoot, RootSet};
use ears_core::lattice::Semilattice;
use ears_core::realize::toroidal::{matrix_unit, SparseMatrix};
use ears_core::realize::{bl_bracket, toroidal_bracket, toroidal_form, BlDatum, JordanElement, JordanTorus, ToroidalElement};
use proptest::prelude::*;

fn idx2() -> Semilattice {
    Semilattice::standard(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap()
}

fn jordan_elt(jt: &JordanTorus, terms: &[(i64, i64, i64)]) -> JordanElement {
    let mut x = JordanElement::zero();
    for &(a, b, c) in terms {
        x.add_scaled(&jt.monomial(&[a, b]), &int(c));
    }
    x
}

fn jterms() -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    proptest::collection::vec((-2i64..=2, -2i64..=2, -3i64..=3), 1..4)
}

/// Traceless 3×3 matrix from a small integer pattern.
fn sl3(v: &[i64]) -> SparseMatrix {
    let mut m = SparseMatrix::new();
    let offdiag = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
    for (k, &(i, j)) in offdiag.iter().enumerate() {
        if v[k] != 0 {
            m.insert((i, j), int(v[k]));
        }
    }
    m.insert((0, 0), int(v[6]));
    m.insert((1, 1), int(v[7] - v[6]));
    m.insert((2, 2), int(-v[7]));
    m
}

fn toroidal() -> impl Strategy<Value = ToroidalElement> {
    (
        proptest::collection::vec((proptest::collection::vec(-1i64..=1, 8), proptest::collection::vec(-2i64..=2, 2)), 0..3),
        proptest::collection::vec(-2i64..=2, 4),
    )
        .prop_map(|(loops, cd)| {
            let mut x = ToroidalElement::zero(2, 2);
            for (m, lam) in loops {
                x = x.add(&ToroidalElement::loop_elt(2, sl3(&m), lam).unwrap()).unwrap();
            }
            for i in 0..2 {
                x = x.add_scaled(&ToroidalElement::central(2, 2, i), &int(cd[i])).unwrap();
                x = x.add_scaled(&ToroidalElement::derivation(2, 2, i), &int(cd[2 + i])).unwrap();
            }
            x
        })
}

fn br(x: &ToroidalElement, y: &ToroidalElement) -> ToroidalElement {
    toroidal_bracket(x, y).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jordan_commutative_and_jordan_identity(a in jterms(), b in jterms()) {
        let jt = JordanTorus::new(idx2()).unwrap();
        let x = jordan_elt(&jt, &a);
        let y = jordan_elt(&jt, &b);
        prop_assert_eq!(jt.mul(&x, &y), jt.mul(&y, &x));
        let x2 = jt.mul(&x, &x);
        let lhs = jt.mul(&jt.mul(&x2, &y), &x);
        let rhs = jt.mul(&x2, &jt.mul(&y, &x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn toroidal_bracket_is_lie(x in toroidal(), y in toroidal(), z in toroidal()) {
        let s = br(&x, &y).add(&br(&y, &x)).unwrap();
        prop_assert!(s.is_zero());
        let j = br(&x, &br(&y, &z)).add(&br(&y, &br(&z, &x))).unwrap().add(&br(&z, &br(&x, &y))).unwrap();
        prop_assert!(j.is_zero(), "Jacobi fails: {}", j);
    }

    #[test]
    fn toroidal_form_invariant(x in toroidal(), y in toroidal(), z in toroidal()) {
        let lhs = toroidal_form(&br(&x, &y), &z).unwrap();
        let rhs = toroidal_form(&x, &br(&y, &z)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(toroidal_form(&x, &y).unwrap(), toroidal_form(&y, &x).unwrap());
    }
}

#[test]
fn toroidal_central_is_central() {
    let c = ToroidalElement::central(2, 2, 0);
    let e = ToroidalElement::loop_elt(2, matrix_unit(0, 1), vec![1, -1]).unwrap();
    assert!(br(&c, &e).is_zero());
}

#[test]
fn btype_brackets_close_with_additive_degree() {
    for l in [2usize, 3] {
        let bl = BlDatum::new(l, idx2()).unwrap();
        let roots: Vec<EarsRoot> = bl.datum().enumerate(1).into_iter().filter(|x| !x.is_isotropic()).collect();
        let gens: Vec<(EarsRoot, ears_core::realize::LaurentMatrix)> =
            roots.iter().flat_map(|r| bl.root_space(r).unwrap().into_iter().map(move |m| (r.clone(), m))).collect();
        for (r, x) in &gens {
            assert!(bl.in_algebra(x), "{r}");
            assert_eq!(bl.degree(x).as_deref(), Some(&r.lattice[..]));
        }
        for (a, x) in gens.iter().step_by(3) {
            for (b, y) in gens.iter().step_by(2) {
                let z = bl_bracket(x, y).unwrap();
                assert!(bl.in_algebra(&z));
                if z.is_zero() {
                    continue;
                }
                let sum = a.add(b);
                assert_eq!(bl.degree(&z), Some(sum.lattice.clone()));
                // a nonzero bracket of root vectors lands on a root (or in the isotropic part)
                assert!(bl.datum().contains(&sum), "[{a}, {b}] ≠ 0 but {sum} is not a root");
            }
        }
    }
}
