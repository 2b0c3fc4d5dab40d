//! Text grammar for sphere polynomials and deformation files.
//!
//! Polynomial: whitespace separated terms `(re,im) z1^a w2^b ...`, where `re` and
//! `im` are `p/q` or `p`, `wk` is the conjugate of `zk`, a bare variable means
//! exponent 1 and a missing coefficient means 1. A `(` or `+` starts a new term.
//!
//! Deformation file:
//! ```text
//! # comment
//! dimension 1
//! E: (1/1,0/1) w1^5
//! ```
//! For `n > 1` the tensor is given by its lowered ambient entries `B a b: <poly>`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Zero;

use super::poly::{normal_form, Monomial, Poly, SpherePoly};
use super::scalar::ExactScalar;
use crate::error::Error;

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn parse_rational(s: &str, line: usize, column: usize) -> Result<BigRational, Error> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| perr(line, column, format!("bad integer in `{s}`")))?;
    let d: BigInt = d.trim().parse().map_err(|_| perr(line, column, format!("bad denominator in `{s}`")))?;
    if d.is_zero() {
        return Err(perr(line, column, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

struct Term {
    coeff: ExactScalar,
    z: Vec<u16>,
    w: Vec<u16>,
}

/// Parses a polynomial on `S^{2n+1}`. `line` and `col0` locate the text inside a larger file.
pub fn parse_sphere_poly_at(n: usize, text: &str, line: usize, col0: usize) -> Result<SpherePoly, Error> {
    let ambient = n + 1;
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    let mut terms: Vec<Term> = Vec::new();
    let mut open = false;
    let new_term = || Term { coeff: ExactScalar::one(), z: vec![0; ambient], w: vec![0; ambient] };
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c == '+' {
            open = false;
            i += 1;
        } else if c == '(' {
            let close = chars[i..]
                .iter()
                .position(|&x| x == ')')
                .map(|p| p + i)
                .ok_or_else(|| perr(line, col, "unclosed `(`"))?;
            let inner: String = chars[i + 1..close].iter().collect();
            let (re, im) = inner.split_once(',').ok_or_else(|| perr(line, col, "coefficient needs `(re,im)`"))?;
            let mut t = new_term();
            t.coeff = ExactScalar::new(parse_rational(re, line, col + 1)?, parse_rational(im, line, col + 1)?);
            terms.push(t);
            open = true;
            i = close + 1;
        } else if c == 'z' || c == 'w' {
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let idx: usize = chars[i + 1..j]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| perr(line, col, format!("variable `{c}` needs an index")))?;
            if idx == 0 || idx > ambient {
                return Err(perr(line, col, format!("variable index {idx} out of range 1..={ambient}")));
            }
            let mut exp: u16 = 1;
            if j < chars.len() && chars[j] == '^' {
                let mut k = j + 1;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                exp = chars[j + 1..k]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| perr(line, col0 + j, "exponent must be a nonnegative integer"))?;
                j = k;
            }
            if !open {
                terms.push(new_term());
                open = true;
            }
            let t = terms.last_mut().unwrap();
            let slot = if c == 'z' { &mut t.z[idx - 1] } else { &mut t.w[idx - 1] };
            *slot += exp;
            i = j;
        } else {
            return Err(perr(line, col, format!("unexpected character `{c}`")));
        }
    }
    let mut p = Poly::zero(ambient);
    for t in terms {
        p.add_term(Monomial::new(&t.z, &t.w), t.coeff);
    }
    Ok(normal_form(&p))
}

pub fn parse_sphere_poly(n: usize, text: &str) -> Result<SpherePoly, Error> {
    parse_sphere_poly_at(n, text, 1, 1)
}

/// Parsed contents of a deformation file.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationFile {
    pub n: usize,
    /// `E_1^{1bar}` for `n = 1`.
    pub e: Option<SpherePoly>,
    /// Lowered ambient entries `B_{ab}`, indices counted from 1.
    pub lowered: Vec<(usize, usize, SpherePoly)>,
}

pub fn parse_deformation_file(text: &str) -> Result<DeformationFile, Error> {
    let mut n: Option<usize> = None;
    let mut e = None;
    let mut lowered = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let body = raw.split('#').next().unwrap_or("");
        let indent = body.len() - body.trim_start().len();
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("dimension") {
            let v: usize = rest
                .trim()
                .parse()
                .map_err(|_| perr(line, indent + 10, "dimension must be a positive integer"))?;
            if v == 0 {
                return Err(perr(line, indent + 10, "dimension must be a positive integer"));
            }
            n = Some(v);
            continue;
        }
        let dim = n.ok_or_else(|| perr(line, indent + 1, "missing `dimension` header"))?;
        let (head, poly) = trimmed.split_once(':').ok_or_else(|| perr(line, indent + 1, "expected `E:` or `B a b:`"))?;
        let pcol = indent + head.len() + 2;
        let head = head.trim();
        if head == "E" {
            if dim != 1 {
                return Err(perr(line, indent + 1, "`E:` entries are only valid for dimension 1"));
            }
            e = Some(parse_sphere_poly_at(dim, poly, line, pcol)?);
        } else if let Some(idx) = head.strip_prefix('B') {
            let ix: Vec<&str> = idx.split_whitespace().collect();
            let parse_ix = |s: &str| -> Result<usize, Error> {
                let v: usize = s.parse().map_err(|_| perr(line, indent + 2, format!("bad index `{s}`")))?;
                if v == 0 || v > dim + 1 {
                    return Err(perr(line, indent + 2, format!("index {v} out of range 1..={}", dim + 1)));
                }
                Ok(v)
            };
            if ix.len() != 2 {
                return Err(perr(line, indent + 2, "`B` needs two indices"));
            }
            lowered.push((parse_ix(ix[0])?, parse_ix(ix[1])?, parse_sphere_poly_at(dim, poly, line, pcol)?));
        } else {
            return Err(perr(line, indent + 1, format!("unknown entry `{head}`")));
        }
    }
    let n = n.ok_or_else(|| perr(1, 1, "missing `dimension` header"))?;
    if n == 1 && e.is_none() && lowered.is_empty() {
        e = Some(SpherePoly::zero(1));
    }
    Ok(DeformationFile { n, e, lowered })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_round_trip() {
        let p = parse_sphere_poly(1, "(1/2,-3/4) z1^2 w2 (5,0) z2 w2^3").unwrap();
        let q = parse_sphere_poly(1, &p.to_string()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn bare_and_plus_terms() {
        let p = parse_sphere_poly(1, "z1 + w1").unwrap();
        assert_eq!(p, &SpherePoly::z(1, 1) + &SpherePoly::w(1, 1));
        let one = parse_sphere_poly(1, "z1 w1 + z2 w2").unwrap();
        assert_eq!(one, SpherePoly::one(1));
    }

    #[test]
    fn error_positions() {
        match parse_sphere_poly(1, "(1,0) z3") {
            Err(Error::Parse { line: 1, column: 7, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_deformation_file("dimension 1\nE: (1,0) q1") {
            Err(Error::Parse { line: 2, column: 10, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn deformation_headers() {
        let f = parse_deformation_file("# S^3\ndimension 1\nE: w1^5\n").unwrap();
        assert_eq!(f.n, 1);
        assert_eq!(f.e.unwrap(), SpherePoly::monomial(1, &[0, 0], &[5, 0], ExactScalar::one()));
        let g = parse_deformation_file("dimension 2\nB 1 2: (1,0)\nB 2 1: (1,0)\n").unwrap();
        assert_eq!(g.lowered.len(), 2);
        assert!(parse_deformation_file("E: z1").is_err());
    }
}
