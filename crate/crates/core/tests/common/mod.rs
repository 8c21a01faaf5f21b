#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use qmat::scalar::integer;
use qmat::{Algebra, LaurentScalar, NCPoly, Word};

/// Laurent polynomials with small integer coefficients and exponents in [-3, 3].
pub fn laurent() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-3i32..=3, -4i64..=4), 0..4)
        .prop_map(|terms| LaurentScalar::from_terms(terms.into_iter().map(|(k, c)| (k, integer(c)))))
}

pub fn nonzero_laurent() -> impl Strategy<Value = LaurentScalar> {
    laurent().prop_filter("nonzero", |c| !c.is_zero())
}

/// Raw (not normal-formed) combinations of words of length <= `max_len`.
pub fn poly(algebra: Arc<Algebra>, max_len: usize, max_terms: usize) -> impl Strategy<Value = NCPoly> {
    let g = algebra.generator_count() as u16;
    prop::collection::vec((prop::collection::vec(0..g, 0..=max_len), -3i64..=3, -2i32..=2), 0..=max_terms)
        .prop_map(move |terms| {
            NCPoly::from_terms(
                &algebra,
                terms.into_iter().map(|(w, c, k)| (Word::new(w), LaurentScalar::from_int(c).shift(k))),
            )
        })
}

pub fn word(g: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..g as u16, 0..=max_len).prop_map(Word::new)
}

pub fn m22() -> Arc<Algebra> {
    Algebra::quantum_matrix(2, 2).unwrap()
}
