//! Slow independent oracles used only to cross-check the production routes.
//!
//! Nothing here shares code with [`crate::symfunc`]: `h_enum`/`e_enum`
//! enumerate monomials directly, and `schur_product_expand` multiplies
//! explicit Schur polynomials (semistandard-tableau sums) and re-expands the
//! product by repeated leading-term subtraction. The verification suites pit
//! these against the fast implementations; production code must never call
//! into this module.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::Rat;

/// `h_m` by direct enumeration of degree-`m` monomials: sums
/// `a_1^{k_1} ... a_n^{k_n}` over all exponent choices with `sum k_i = m`,
/// recursing on the exponent of the first letter.
pub fn h_enum(m: usize, alphabet: &[Rat]) -> Rat {
    fn rec(m: usize, alphabet: &[Rat]) -> Rat {
        if m == 0 {
            return Rat::one();
        }
        let Some((first, rest)) = alphabet.split_first() else {
            return Rat::zero();
        };
        let mut acc = Rat::zero();
        let mut power = Rat::one();
        for k in 0..=m {
            if k > 0 {
                power = power * first;
            }
            acc += &power * &rec(m - k, rest);
        }
        acc
    }
    rec(m, alphabet)
}

/// `e_m` by direct enumeration of `m`-element subsets.
pub fn e_enum(m: usize, alphabet: &[Rat]) -> Rat {
    fn rec(m: usize, alphabet: &[Rat]) -> Rat {
        if m == 0 {
            return Rat::one();
        }
        let Some((first, rest)) = alphabet.split_first() else {
            return Rat::zero();
        };
        rec(m, rest) + first * &rec(m - 1, rest)
    }
    rec(m, alphabet)
}

/// Dense integer polynomial in `n` commuting variables, keyed by exponent
/// vector. Schur polynomials and their products have small integer
/// coefficients at the degrees the oracles run at.
pub type MonomialPoly = HashMap<Vec<u32>, i64>;

/// The Schur polynomial `s_lambda(x_1..x_n)` as a sum over semistandard
/// tableaux of shape `lambda` with entries in `1..=n`.
pub fn schur_poly(lambda: &Partition, n: usize) -> MonomialPoly {
    let mut out: MonomialPoly = HashMap::new();
    if lambda.len() > n {
        return out; // no fillings: columns would repeat an entry
    }
    let rows = lambda.len();
    let mut grid: Vec<Vec<u32>> = (0..rows)
        .map(|r| vec![0; lambda.part(r) as usize])
        .collect();

    fn rec(
        r: usize,
        c: usize,
        rows: usize,
        lambda: &Partition,
        n: usize,
        grid: &mut Vec<Vec<u32>>,
        out: &mut MonomialPoly,
    ) {
        if r == rows {
            let mut exps = vec![0u32; n];
            for row in grid.iter() {
                for &v in row {
                    exps[v as usize - 1] += 1;
                }
            }
            *out.entry(exps).or_insert(0) += 1;
            return;
        }
        let (next_r, next_c) = if c + 1 < lambda.part(r) as usize {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let lo = {
            let mut lo = 1;
            if c > 0 {
                lo = lo.max(grid[r][c - 1]); // weakly increasing along rows
            }
            if r > 0 && c < grid[r - 1].len() {
                lo = lo.max(grid[r - 1][c] + 1); // strictly increasing down columns
            }
            lo
        };
        for v in lo..=n as u32 {
            grid[r][c] = v;
            rec(next_r, next_c, rows, lambda, n, grid, out);
        }
        grid[r][c] = 0;
    }

    if rows == 0 {
        out.insert(vec![0; n], 1);
        return out;
    }
    rec(0, 0, rows, lambda, n, &mut grid, &mut out);
    out
}

fn poly_mul(a: &MonomialPoly, b: &MonomialPoly) -> MonomialPoly {
    let mut out: MonomialPoly = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(exps).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands a symmetric polynomial in the Schur basis by repeatedly
/// subtracting the Schur polynomial of the lex-greatest exponent vector.
/// Fails if the input is not symmetric (a lex-greatest exponent vector that
/// is not weakly decreasing).
pub fn schur_expand(poly: &MonomialPoly, n: usize) -> Result<BTreeMap<Partition, i64>> {
    let mut work = poly.clone();
    work.retain(|_, c| *c != 0);
    let mut out = BTreeMap::new();
    while !work.is_empty() {
        let lead = work
            .keys()
            .max()
            .expect("nonempty")
            .clone();
        let coeff = work[&lead];
        let mut parts: Vec<u32> = lead.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let lambda = Partition::new(parts).map_err(|_| {
            Error::internal("leading exponent of a symmetric polynomial must be a partition")
        })?;
        let s = schur_poly(&lambda, n);
        for (e, c) in &s {
            let slot = work.entry(e.clone()).or_insert(0);
            *slot -= coeff * c;
        }
        work.retain(|_, c| *c != 0);
        if let Some(prev) = out.insert(lambda, coeff) {
            return Err(Error::internal(format!(
                "shape expanded twice (had {prev})"
            )));
        }
    }
    Ok(out)
}

/// Brute-force Schur product: multiply the polynomials in
/// `n = |lambda| + |mu|` variables (enough to see every summand) and expand.
pub fn schur_product_expand(
    lambda: &Partition,
    mu: &Partition,
) -> Result<BTreeMap<Partition, i64>> {
    let n = ((lambda.size() + mu.size()) as usize).max(1);
    let a = schur_poly(lambda, n);
    let b = schur_poly(mu, n);
    schur_expand(&poly_mul(&a, &b), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn enumerated_h_and_e() {
        let a = [r(2), r(3), r(4)];
        assert_eq!(h_enum(2, &a), r(55));
        assert_eq!(e_enum(2, &a), r(26));
        assert_eq!(h_enum(0, &[]), r(1));
        assert_eq!(h_enum(2, &[]), r(0));
        assert_eq!(e_enum(4, &a), r(0));
    }

    #[test]
    fn schur_poly_counts_tableaux() {
        // s_(1) in 3 variables is x1 + x2 + x3.
        let s = schur_poly(&p(&[1]), 3);
        assert_eq!(s.len(), 3);
        // s_(1,1) in 2 variables is x1 x2.
        let s = schur_poly(&p(&[1, 1]), 2);
        assert_eq!(s.len(), 1);
        assert_eq!(s[&vec![1u32, 1]], 1);
        // s_(2,1) in 3 variables has 8 tableaux (the GL_3 adjoint).
        let s = schur_poly(&p(&[2, 1]), 3);
        let total: i64 = s.values().sum();
        assert_eq!(total, 8);
        // Too many rows for the variable count kills the polynomial.
        assert!(schur_poly(&p(&[1, 1, 1]), 2).is_empty());
    }

    #[test]
    fn expand_recovers_products() {
        let out = schur_product_expand(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out[&p(&[2])], 1);
        assert_eq!(out[&p(&[1, 1])], 1);

        let out = schur_product_expand(&p(&[2, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(out[&p(&[3, 2, 1])], 2);
        assert_eq!(out.len(), 7);
    }
}
