mod common;

use common::{m22, poly};
use proptest::prelude::*;
use qmat::detid::reduce_mod_i1;
use qmat::maps::{coinvariant_check, coinvariant_preimage, gamma_weight, h_weight, poly_h_weight, theta, TorusWeight};
use qmat::parse::parse;
use qmat::{Algebra, Error, NCPoly};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_is_multiplicative(
        a in poly(Algebra::quantum_matrix(2, 3).unwrap(), 2, 3),
        b in poly(Algebra::quantum_matrix(2, 3).unwrap(), 2, 3),
    ) {
        prop_assert_eq!(theta(&(&a * &b)).unwrap(), &theta(&a).unwrap() * &theta(&b).unwrap());
        prop_assert_eq!(theta(&a).unwrap(), theta(&a.normal_form()).unwrap());
    }

    #[test]
    fn images_are_coinvariants_with_reduced_preimages(p in poly(m22(), 4, 4)) {
        let img = theta(&p).unwrap();
        prop_assert!(coinvariant_check(&img).unwrap().coinvariant);
        prop_assert_eq!(coinvariant_preimage(&img).unwrap(), reduce_mod_i1(&p).unwrap());
    }

    #[test]
    fn torus_weight_is_preserved_by_rewriting(p in poly(Algebra::quantum_matrix(3, 2).unwrap(), 5, 1)) {
        let Some((w, _)) = p.terms().next() else { return Ok(()) };
        let weight = h_weight(p.algebra(), w).unwrap();
        let nf = p.normal_form();
        for (v, _) in nf.terms() {
            prop_assert_eq!(&h_weight(nf.algebra(), v).unwrap(), &weight);
        }
    }
}

#[test]
fn preimage_then_theta_is_identity_on_coinvariants() {
    let t = Algebra::affine_tensor(2, 3).unwrap();
    for text in ["y[1]*y[2]*z[3]*z[1]", "q*y[2]*z[2] - 3*y[1]*z[3]", "y[2]^2*z[1]*z[3] + y[1]*y[2]*z[2]^2", "7"] {
        let p = parse(text, &t).unwrap();
        let pre = coinvariant_preimage(&p).unwrap();
        assert_eq!(theta(&pre).unwrap(), p, "{text}");
    }
}

#[test]
fn mixed_bidegrees_are_rejected() {
    let t = Algebra::affine_tensor(2, 2).unwrap();
    let p = parse("y[1]*y[2]*z[1] + y[1]*z[2]", &t).unwrap();
    let c = coinvariant_check(&p).unwrap();
    assert!(!c.coinvariant);
    let (word, weight) = c.witness.unwrap();
    assert_eq!((word.as_str(), weight.0), ("y[1]*y[2]*z[1]", 1));
    assert!(matches!(coinvariant_preimage(&p), Err(Error::NotCoinvariant { .. })));
    let mut weights: Vec<i64> = p.terms().map(|(w, _)| gamma_weight(&t, w).unwrap().0).collect();
    weights.sort_unstable();
    assert_eq!(weights, [0, 1]);
}

#[test]
fn weights_of_minors() {
    let a = Algebra::quantum_matrix(2, 3).unwrap();
    let minor = parse("X[1,1]*X[2,3] - q*X[1,3]*X[2,1]", &a).unwrap();
    assert_eq!(poly_h_weight(&minor).unwrap(), Some(TorusWeight { rows: vec![1, 1], cols: vec![1, 0, 1] }));
    let mixed = parse("X[1,1] + X[1,2]", &a).unwrap();
    assert_eq!(poly_h_weight(&mixed).unwrap(), None);
    assert_eq!(poly_h_weight(&NCPoly::zero(&a)).unwrap(), None);
}
