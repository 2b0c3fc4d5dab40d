//! Moments of the sphere measure by iterated integration over the simplex.
//!
//! Under the probability measure on `S^{2n+1}` the vector `(|z_1|^2, ..., |z_N|^2)` is
//! uniform on the standard simplex (density `n!`), so `int |z^a|^2` is an iterated
//! polynomial integral. This avoids the closed factorial rule entirely.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

/// Dense univariate polynomial with rational coefficients, lowest degree first.
type Dense = Vec<BigRational>;

fn binomial_expand(b: u32) -> Dense {
    // (1 - x)^b
    let mut p: Dense = vec![BigRational::one()];
    for _ in 0..b {
        let mut q = vec![BigRational::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            q[i] += c;
            q[i + 1] -= c;
        }
        p = q;
    }
    p
}

/// `int_0^1 x^a (1 - x)^b dx`, expanding the binomial and integrating term by term.
pub fn beta_integral(a: u32, b: u32) -> BigRational {
    binomial_expand(b)
        .into_iter()
        .enumerate()
        .map(|(i, c)| c / BigRational::from_integer(BigInt::from(a as u64 + i as u64 + 1)))
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// `int |z^a|^2 dsigma` on `S^{2n+1}`, `a.len() = n + 1`.
///
/// Peels one coordinate at a time: with `x_1 + ... + x_N <= s`,
/// `int x_1^{a_1} ... = int_0^s x^{a_1} (s - x)^{rest} dx` scales as `s^{a_1 + rest + 1}`.
pub fn simplex_moment(a: &[u16]) -> BigRational {
    let n = a.len() - 1;
    // integrate over {x_1 + ... + x_n <= 1} with x_N = 1 - sum; work right to left
    let mut acc = BigRational::one();
    let mut deg: u32 = a[n] as u32; // current power of the remaining budget
    for j in (0..n).rev() {
        acc *= beta_integral(a[j] as u32, deg);
        deg += a[j] as u32 + 1;
    }
    let nfact: BigInt = (1..=n as u64).fold(BigInt::one(), |x, k| x * BigInt::from(k));
    acc * BigRational::from_integer(nfact)
}
