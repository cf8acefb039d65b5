//! BCH, Ad and coAd checked against an independent model: strictly upper
//! triangular 6x6 rational matrices, a 15-dimensional nilpotent algebra of
//! step 5 where exp and log are finite power series.

use nilorbit::exactlin::{Int, Rat, RatMatrix};
use nilorbit::nilpotent::{AlgebraElement, Bracket, DualElement, LieAlgebra};
use num_traits::Zero;
use proptest::prelude::*;

const N: usize = 6;

/// Basis `E_ij`, `i < j`, in a fixed order.
fn index_pairs() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..N {
        for j in (i + 1)..N {
            out.push((i, j));
        }
    }
    out
}

fn algebra() -> LieAlgebra {
    let pairs = index_pairs();
    let position = |p: (usize, usize)| pairs.iter().position(|&q| q == p).unwrap();
    let mut brackets = Vec::new();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            // [E_ij, E_kl] = δ_jk E_il - δ_li E_kj
            let mut terms = Vec::new();
            if j == k {
                terms.push((position((i, l)), Rat::from_integer(Int::from(1))));
            }
            if l == i {
                terms.push((position((k, j)), Rat::from_integer(Int::from(-1))));
            }
            if !terms.is_empty() {
                brackets.push(Bracket::new(a, b, terms));
            }
        }
    }
    LieAlgebra::with_default_names(pairs.len(), brackets).unwrap()
}

fn to_matrix(x: &AlgebraElement) -> RatMatrix {
    let mut m = RatMatrix::zeros(N, N);
    for (c, &(i, j)) in x.coords().iter().zip(index_pairs().iter()) {
        m.set(i, j, c.clone());
    }
    m
}

fn from_matrix(m: &RatMatrix) -> AlgebraElement {
    for i in 0..N {
        for j in 0..=i {
            assert!(m.get(i, j).is_zero(), "not strictly upper triangular");
        }
    }
    AlgebraElement::new(index_pairs().iter().map(|&(i, j)| m.get(i, j).clone()).collect())
}

fn mat_exp(x: &RatMatrix) -> RatMatrix {
    let mut sum = RatMatrix::identity(N);
    let mut term = RatMatrix::identity(N);
    for k in 1..N {
        term = term.mul(x).scale(&Rat::new(Int::from(1), Int::from(k)));
        sum = sum.add(&term);
    }
    sum
}

fn mat_log(g: &RatMatrix) -> RatMatrix {
    let a = g.sub(&RatMatrix::identity(N));
    let mut sum = RatMatrix::zeros(N, N);
    let mut power = RatMatrix::identity(N);
    for k in 1..N {
        power = power.mul(&a);
        let sign = if k % 2 == 1 { 1 } else { -1 };
        sum = sum.add(&power.scale(&Rat::new(Int::from(sign), Int::from(k as i64))));
    }
    sum
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((-3i64..=3, 1i64..=3), 15)
        .prop_map(|v| AlgebraElement::new(v.into_iter().map(|(p, q)| Rat::new(Int::from(p), Int::from(q))).collect()))
}

fn functional() -> impl Strategy<Value = DualElement> {
    prop::collection::vec(-4i64..=4, 15).prop_map(|v| DualElement::from_i64(&v))
}

#[test]
fn model_has_step_five() {
    let g = algebra();
    assert_eq!(g.dim(), 15);
    assert_eq!(g.step(), 5);
}

#[test]
fn bracket_matches_commutator() {
    let g = algebra();
    let x = AlgebraElement::basis(15, 0);
    let y = AlgebraElement::basis(15, 5);
    let (mx, my) = (to_matrix(&x), to_matrix(&y));
    assert_eq!(to_matrix(&g.bracket(&x, &y)), mx.mul(&my).sub(&my.mul(&mx)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn bracket_is_commutator(x in element(), y in element()) {
        let g = algebra();
        let (mx, my) = (to_matrix(&x), to_matrix(&y));
        prop_assert_eq!(to_matrix(&g.bracket(&x, &y)), mx.mul(&my).sub(&my.mul(&mx)));
    }

    #[test]
    fn bch_is_log_of_product(x in element(), y in element()) {
        let g = algebra();
        let z = g.bch(&x, &y).unwrap();
        let expected = from_matrix(&mat_log(&mat_exp(&to_matrix(&x)).mul(&mat_exp(&to_matrix(&y)))));
        prop_assert_eq!(z, expected);
    }

    #[test]
    fn bch_is_associative(x in element(), y in element(), z in element()) {
        let g = algebra();
        let left = g.bch(&g.bch(&x, &y).unwrap(), &z).unwrap();
        let right = g.bch(&x, &g.bch(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn ad_exp_is_conjugation(x in element(), y in element()) {
        let g = algebra();
        let mx = to_matrix(&x);
        let conj = mat_exp(&mx).mul(&to_matrix(&y)).mul(&mat_exp(&mx.neg()));
        let ad = AlgebraElement::new(g.ad_exp(&x).mul_vec(y.coords()));
        prop_assert_eq!(to_matrix(&ad), conj);
    }

    #[test]
    fn ad_is_a_homomorphism(x in element(), y in element()) {
        let g = algebra();
        let z = g.bch(&x, &y).unwrap();
        prop_assert_eq!(g.ad_exp(&z), g.ad_exp(&x).mul(&g.ad_exp(&y)));
    }

    #[test]
    fn coadjoint_preserves_pairing(x in element(), y in element(), f in functional()) {
        let g = algebra();
        let moved = g.coad_apply(&x, &f);
        let ad_y = AlgebraElement::new(g.ad_exp(&x).mul_vec(y.coords()));
        prop_assert_eq!(moved.pair(&ad_y), f.pair(&y));
    }
}
