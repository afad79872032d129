//! Symmetric-function kernels: complete and elementary evaluation, Cauchy
//! series coefficients, Littlewood-Richardson coefficients, and dual
//! Jacobi-Trudi determinants.
//!
//! `lr_coefficients` enumerates skew semistandard tableaux whose reverse
//! reading word is a lattice word; it is the production route for Schubert
//! products. The slow independent routes (monomial enumeration, brute-force
//! Schur polynomial expansion) live in [`crate::reference`] and never share
//! code with this module.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{GenTable, GradedPoly};
use crate::rational::Rat;
use crate::series::PowerSeries;

/// Complete homogeneous symmetric polynomial `h_m` evaluated on an alphabet.
/// One-variable-at-a-time recurrence: h_j after adjoining x equals
/// h_j(before) + x * h_{j-1}(after).
pub fn eval_h(m: usize, alphabet: &[Rat]) -> Rat {
    let mut h = vec![Rat::zero(); m + 1];
    h[0] = Rat::one();
    for x in alphabet {
        for j in 1..=m {
            let add = x * &h[j - 1];
            h[j] += add;
        }
    }
    h[m].clone()
}

/// Elementary symmetric polynomial `e_m` evaluated on an alphabet.
pub fn eval_e(m: usize, alphabet: &[Rat]) -> Rat {
    let mut e = vec![Rat::zero(); m + 1];
    e[0] = Rat::one();
    for x in alphabet {
        for j in (1..=m).rev() {
            let add = x * &e[j - 1];
            e[j] += add;
        }
    }
    e[m].clone()
}

/// Coefficients `c_0 .. c_order` of `1 / prod_i (1 + a_i x)`, computed by
/// multiplying out the linear factors and inverting the truncated series.
/// By the Cauchy identity `c_m = (-1)^m h_m(a)`.
pub fn cauchy_coeffs(alphabet: &[Rat], order: usize) -> Vec<Rat> {
    let mut prod = PowerSeries::one("x", order);
    for a in alphabet {
        let factor = PowerSeries::from_fn("x", order, |k| match k {
            0 => Rat::one(),
            1 => a.clone(),
            _ => Rat::zero(),
        });
        prod = prod.mul(&factor);
    }
    prod.inverse()
        .expect("constant term is 1")
        .coeffs()
        .to_vec()
}

/// Skew shape as per-row column ranges of the cells of `nu/lambda`.
struct SkewShape {
    /// (first column, one past last column) per row, zero-based.
    rows: Vec<(usize, usize)>,
}

impl SkewShape {
    fn new(nu: &Partition, lambda: &Partition) -> SkewShape {
        let rows = (0..nu.len())
            .map(|r| (lambda.part(r) as usize, nu.part(r) as usize))
            .collect();
        SkewShape { rows }
    }
}

/// Counts Littlewood-Richardson tableaux: semistandard fillings of `nu/lambda`
/// with content `mu` whose reverse reading word (right to left, top to bottom)
/// is a lattice word. Cells are filled exactly in reverse reading order so the
/// lattice condition can be enforced prefix by prefix.
fn count_lr_tableaux(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if !nu.contains(lambda) || nu.size() != lambda.size() + mu.size() {
        return 0;
    }
    let shape = SkewShape::new(nu, lambda);
    let width = nu.part(0) as usize;
    let depth = nu.len();
    let colors = mu.len();
    // grid[r][c] = entry (1-based), 0 = unfilled or outside the skew shape.
    let mut grid = vec![vec![0u32; width]; depth.max(1)];
    let mut counts = vec![0u32; colors + 1];
    // Cells in reverse reading order.
    let mut cells = Vec::new();
    for (r, &(lo, hi)) in shape.rows.iter().enumerate() {
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        mu: &Partition,
        colors: usize,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for v in 1..=colors as u32 {
            // Content bound.
            if counts[v as usize] >= mu.part(v as usize - 1) {
                continue;
            }
            // Lattice word: prefix count of v must stay <= count of v-1.
            if v > 1 && counts[v as usize] + 1 > counts[v as usize - 1] {
                continue;
            }
            // Row weakly increasing left to right: right neighbor filled first.
            if c + 1 < grid[r].len() && grid[r][c + 1] != 0 && v > grid[r][c + 1] {
                continue;
            }
            // Column strictly increasing top to bottom.
            if r > 0 && c < grid[r - 1].len() && grid[r - 1][c] != 0 && v <= grid[r - 1][c] {
                continue;
            }
            // A cell directly above inside lambda imposes nothing, but a cell
            // above inside the skew shape that is still unfilled cannot happen
            // in reverse reading order (rows are processed top to bottom).
            grid[r][c] = v;
            counts[v as usize] += 1;
            total += rec(idx + 1, cells, grid, counts, mu, colors);
            counts[v as usize] -= 1;
            grid[r][c] = 0;
        }
        total
    }

    rec(0, &cells, &mut grid, &mut counts, mu, colors)
}

/// Littlewood-Richardson coefficient `c^nu_{lambda,mu}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    count_lr_tableaux(nu, lambda, mu)
}

/// Full product expansion `s_lambda * s_mu = sum_nu c^nu_{lambda,mu} s_nu`.
/// Only `nu` with `nu_1 <= lambda_1 + mu_1` and at most
/// `len(lambda) + len(mu)` rows can appear.
pub fn lr_coefficients(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let n = lambda.size() + mu.size();
    let max_rows = lambda.len() + mu.len();
    let max_cols = lambda.part(0) + mu.part(0);
    let mut out = BTreeMap::new();
    for nu in Partition::all_of(n) {
        if nu.len() > max_rows || nu.part(0) > max_cols || !nu.contains(lambda) {
            continue;
        }
        let c = count_lr_tableaux(&nu, lambda, mu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// Product expansion truncated to partitions inside a `rows` x `cols` box.
pub fn lr_product_in_box(
    lambda: &Partition,
    mu: &Partition,
    rows: usize,
    cols: u32,
) -> BTreeMap<Partition, u64> {
    let n = lambda.size() + mu.size();
    let mut out = BTreeMap::new();
    for nu in Partition::all_in_box(rows, cols) {
        if nu.size() != n || !nu.contains(lambda) {
            continue;
        }
        let c = count_lr_tableaux(&nu, lambda, mu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// Dual Jacobi-Trudi determinant: `s_lambda = det(e_{lambda'_i - i + j})`
/// of size `lambda_1`, expressed over a table whose generators carry weights
/// `1..=n` in order (generator `k-1` stands for `e_k`; `e_0 = 1`). Fails when
/// the table is too short: indices up to `lambda'_1 + lambda_1 - 1 <= |lambda|`
/// can occur.
pub fn dual_jacobi_trudi(
    lambda: &Partition,
    table: &Arc<GenTable>,
    cap: Option<u32>,
) -> Result<GradedPoly> {
    for (i, g) in table.gens().iter().enumerate() {
        if g.weight() != i as u32 + 1 {
            return Err(Error::domain(
                "dual Jacobi-Trudi needs generator weights 1..=n in table order",
            ));
        }
    }
    let conj = lambda.conjugate();
    let m = lambda.part(0) as usize;
    if m == 0 {
        return Ok(GradedPoly::one(table, cap));
    }
    // entry(i, j) for 0-based i, j; None = zero, index 0 = the constant 1.
    let entry = |i: usize, j: usize| -> Result<Option<GradedPoly>> {
        let idx = conj.part(i) as i64 - (i as i64 + 1) + (j as i64 + 1);
        if idx < 0 {
            return Ok(None);
        }
        if idx == 0 {
            return Ok(Some(GradedPoly::one(table, cap)));
        }
        if idx as usize > table.len() {
            return Err(Error::domain(format!(
                "dual Jacobi-Trudi needs generator of weight {idx}, table stops at {}",
                table.len()
            )));
        }
        Ok(Some(GradedPoly::generator(table, cap, idx as usize - 1)?))
    };

    // Laplace expansion along rows, memoized on the set of unused columns.
    fn minor(
        row: usize,
        colmask: u64,
        m: usize,
        entry: &dyn Fn(usize, usize) -> Result<Option<GradedPoly>>,
        table: &Arc<GenTable>,
        cap: Option<u32>,
        memo: &mut std::collections::HashMap<u64, GradedPoly>,
    ) -> Result<GradedPoly> {
        if row == m {
            return Ok(GradedPoly::one(table, cap));
        }
        if let Some(hit) = memo.get(&colmask) {
            return Ok(hit.clone());
        }
        let mut acc = GradedPoly::zero(table, cap);
        let mut sign = Rat::one();
        for j in 0..m {
            if colmask & (1 << j) != 0 {
                continue;
            }
            if let Some(e) = entry(row, j)? {
                let sub = minor(row + 1, colmask | (1 << j), m, entry, table, cap, memo)?;
                acc = acc.add(&e.mul(&sub).scale(&sign));
            }
            sign = -sign;
        }
        memo.insert(colmask, acc.clone());
        Ok(acc)
    }

    let mut memo = std::collections::HashMap::new();
    minor(0, 0, m, &entry, table, cap, &mut memo)
}
