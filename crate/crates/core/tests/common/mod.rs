#![allow(dead_code)]

use crsphere::ring::{rat, ExactScalar, SpherePoly};
use proptest::prelude::*;

fn term(n: usize, max_exp: u16) -> impl Strategy<Value = SpherePoly> {
    let amb = n + 1;
    (
        prop::collection::vec(0..=max_exp, amb),
        prop::collection::vec(0..=max_exp, amb),
        -4i64..=4,
        -4i64..=4,
        1i64..=3,
    )
        .prop_map(move |(z, w, re, im, den)| {
            SpherePoly::monomial(n, &z, &w, ExactScalar::complex(rat(re, den), rat(im, den)))
        })
}

/// Random polynomial on `S^{2n+1}` with up to `terms` monomials, exponents `<= max_exp` per variable.
pub fn poly(n: usize, terms: usize, max_exp: u16) -> impl Strategy<Value = SpherePoly> {
    prop::collection::vec(term(n, max_exp), 1..=terms)
        .prop_map(move |ts| ts.iter().fold(SpherePoly::zero(n), |acc, t| &acc + t))
}

/// Real polynomial with zero average.
pub fn real_zero_mean(n: usize, terms: usize, max_exp: u16) -> impl Strategy<Value = SpherePoly> {
    poly(n, terms, max_exp).prop_map(move |p| {
        let re = (&p + &p.conjugate()).scale(&ExactScalar::ratio(1, 2));
        let avg = re.integrate();
        &re - &SpherePoly::constant(n, avg)
    })
}
