// Dense univariate polynomials over Q, coefficients stored low degree first.
// Only used to implement gcd and exact division of Laurent scalars.

use num_traits::{One, Zero};

use super::Rational;

pub(crate) fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap();
    let mut quot = vec![Rational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / lead;
        for (k, bk) in b.iter().enumerate() {
            rem[shift + k] -= &c * bk;
        }
        quot[shift] = c;
        // the leading term cancels exactly
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn make_monic(p: &mut [Rational]) {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            for c in p.iter_mut() {
                *c /= &lead;
            }
        }
    }
}

/// Monic greatest common divisor. `gcd(0, 0)` is the empty polynomial.
pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
        // keep coefficients from growing along the remainder sequence
        make_monic(&mut b);
    }
    make_monic(&mut a);
    a
}
