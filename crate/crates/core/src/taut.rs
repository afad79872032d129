//! Formal tautological rings and the characteristic-class toolbox that feeds
//! the pullback formulas: Bernoulli numbers and polynomials, Todd expansion,
//! Chern character of Hodge bundles in kappa classes, Newton conversion
//! between Chern classes and Chern characters, and the
//! Grothendieck-Riemann-Roch expansion of the Poincare bundle's Chern
//! character in generalized Mumford-Morita classes.
//!
//! Ring flavors (each one a declared generator table, polynomials are
//! [`GradedPoly`]): the moduli ring of one-pointed curves with psi and the
//! lambda classes of the q-differential Hodge bundle, the kappa ring, the
//! line-bundle ring with omega and the P classes, and the Mumford-Morita
//! ring with generators m_{i,j} of weight i + j - 1 (pushforwards live one
//! degree below the fiberwise product).

use std::sync::{Mutex, OnceLock};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{GenTable, Generator, GradedPoly};
use crate::rational::Rat;
use crate::series::PowerSeries;

/// `B_0 .. B_max` from the defining series `x / (e^x - 1)`: invert
/// `(e^x - 1)/x` and scale the n-th coefficient by n!.
pub fn bernoulli_numbers(max: usize) -> Vec<Rat> {
    let inv = PowerSeries::expm1_over_x("x", max)
        .inverse()
        .expect("constant term 1");
    (0..=max)
        .map(|n| inv.coeff(n) * Rat::factorial(n as u64))
        .collect()
}

/// `B_n`, served from a growing cache.
pub fn bernoulli_number(n: usize) -> Rat {
    static CACHE: OnceLock<Mutex<Vec<Rat>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    let mut guard = cache.lock().expect("bernoulli cache poisoned");
    if guard.len() <= n {
        *guard = bernoulli_numbers(n.max(16));
    }
    guard[n].clone()
}

/// Coefficients of the Bernoulli polynomial `B_n(x)` (constant term first),
/// read off the bivariate generating function `t e^{xt} / (e^t - 1)`:
/// the t^n coefficient is sum_k B_{n-k}/(n-k)! * x^k/k!, scaled by n!.
pub fn bernoulli_poly_coeffs(n: usize) -> Vec<Rat> {
    let numbers = bernoulli_numbers(n);
    let n_fact = Rat::factorial(n as u64);
    (0..=n)
        .map(|k| {
            &numbers[n - k] / &Rat::factorial((n - k) as u64) / Rat::factorial(k as u64) * &n_fact
        })
        .collect()
}

/// `B_n(x)` evaluated at a rational point.
pub fn bernoulli_poly_at(n: usize, x: &Rat) -> Rat {
    let coeffs = bernoulli_poly_coeffs(n);
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Todd series of the relative cotangent direction,
/// `omega / (e^omega - 1) = sum_n B_n omega^n / n!`.
pub fn todd_series(order: usize) -> PowerSeries {
    PowerSeries::expm1_over_x("omega", order)
        .inverse()
        .expect("constant term 1")
}

/// Which generator dialect a [`TautRing`] speaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingFlavor {
    /// psi and the lambda classes of the q-differential Hodge bundle on the
    /// moduli of one-pointed genus-g curves. The bundle rank bounds the
    /// lambda generators: g when q = 1, (2q-1)(g-1) otherwise.
    ModuliQ { g: u32, q: u32 },
    /// kappa_0 .. kappa_max (kappa_0 has weight 0; its numeric value 2g - 2
    /// is an explicit opt-in substitution, never automatic).
    Kappa { max_index: u32 },
    /// omega and the Chern classes P_1 .. P_d of the Poincare bundle on the
    /// moduli of triples (curve, point, line bundle of degree h), d = h-g+1.
    LineBundle { g: u32, h: u32 },
    /// Generalized Mumford-Morita classes m_{i,j}, weight i + j - 1, for
    /// 1 <= i + j <= max_sum, ordered by (i + j, j).
    MumfordMorita { max_sum: u32 },
}

/// A formal tautological ring: a flavor, its generator table, and an
/// optional degree cap shared by all elements produced through it.
#[derive(Clone, Debug)]
pub struct TautRing {
    flavor: RingFlavor,
    table: Arc<GenTable>,
    cap: Option<u32>,
}

/// Rank of the q-differential Hodge bundle on genus-g curves.
pub fn hodge_rank(g: u32, q: u32) -> u32 {
    if q == 1 {
        g
    } else {
        (2 * q - 1) * (g - 1)
    }
}

/// Index of the Grassmannian component hit by the genus-g q-differential
/// Krichever map: d_q = (2q - 1)(g - 1).
pub fn moduli_component_index(g: u32, q: u32) -> i64 {
    ((2 * q - 1) * (g - 1)) as i64
}

impl TautRing {
    pub fn moduli(g: u32, q: u32, cap: Option<u32>) -> Result<TautRing> {
        if g < 2 {
            return Err(Error::domain(format!("moduli ring needs g >= 2, got {g}")));
        }
        if q < 1 {
            return Err(Error::domain("moduli ring needs q >= 1"));
        }
        let rank = hodge_rank(g, q);
        let mut gens = vec![Generator::new("psi", 1)];
        for j in 1..=rank {
            gens.push(Generator::new(format!("lambda_{j}"), j));
        }
        Ok(TautRing {
            flavor: RingFlavor::ModuliQ { g, q },
            table: GenTable::shared(gens)?,
            cap,
        })
    }

    pub fn kappa(max_index: u32, cap: Option<u32>) -> Result<TautRing> {
        let gens = (0..=max_index)
            .map(|r| Generator::new(format!("kappa_{r}"), r))
            .collect();
        Ok(TautRing {
            flavor: RingFlavor::Kappa { max_index },
            table: GenTable::shared(gens)?,
            cap,
        })
    }

    pub fn line_bundle(g: u32, h: u32, cap: Option<u32>) -> Result<TautRing> {
        if g < 2 {
            return Err(Error::domain(format!(
                "line-bundle ring needs g >= 2, got {g}"
            )));
        }
        if h <= 2 * g - 2 {
            return Err(Error::domain(format!(
                "line-bundle ring needs degree h > 2g - 2, got h = {h}, g = {g}"
            )));
        }
        let d = h - g + 1;
        let mut gens = vec![Generator::new("omega", 1)];
        for j in 1..=d {
            gens.push(Generator::new(format!("P_{j}"), j));
        }
        Ok(TautRing {
            flavor: RingFlavor::LineBundle { g, h },
            table: GenTable::shared(gens)?,
            cap,
        })
    }

    pub fn mumford_morita(max_sum: u32, cap: Option<u32>) -> Result<TautRing> {
        if max_sum < 1 {
            return Err(Error::domain("mumford-morita ring needs max_sum >= 1"));
        }
        let mut gens = Vec::new();
        for s in 1..=max_sum {
            for j in 0..=s {
                let i = s - j;
                gens.push(Generator::new(format!("m_{i}_{j}"), s - 1));
            }
        }
        Ok(TautRing {
            flavor: RingFlavor::MumfordMorita { max_sum },
            table: GenTable::shared(gens)?,
            cap,
        })
    }

    pub fn flavor(&self) -> &RingFlavor {
        &self.flavor
    }

    pub fn table(&self) -> &Arc<GenTable> {
        &self.table
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn zero(&self) -> GradedPoly {
        GradedPoly::zero(&self.table, self.cap)
    }

    pub fn one(&self) -> GradedPoly {
        GradedPoly::one(&self.table, self.cap)
    }

    pub fn constant(&self, c: Rat) -> GradedPoly {
        GradedPoly::constant(&self.table, self.cap, c)
    }

    pub fn generator(&self, name: &str) -> Result<GradedPoly> {
        let idx = self
            .table
            .index_of(name)
            .ok_or_else(|| Error::domain(format!("no generator {name:?} in this ring")))?;
        GradedPoly::generator(&self.table, self.cap, idx)
    }

    /// psi (moduli flavor).
    pub fn psi(&self) -> Result<GradedPoly> {
        self.generator("psi")
    }

    /// omega (line-bundle flavor).
    pub fn omega(&self) -> Result<GradedPoly> {
        self.generator("omega")
    }

    /// The distinguished weight-one generator the circle variable maps to:
    /// psi on moduli rings, omega on line-bundle rings.
    pub fn point_class(&self) -> Result<GradedPoly> {
        match self.flavor {
            RingFlavor::ModuliQ { .. } => self.psi(),
            RingFlavor::LineBundle { .. } => self.omega(),
            _ => Err(Error::domain("ring has no distinguished point class")),
        }
    }

    /// `lambda_j`, or zero above the Hodge bundle rank (the bundle has no
    /// higher Chern classes). `lambda_0 = 1`.
    pub fn lambda_or_zero(&self, j: u32) -> Result<GradedPoly> {
        let RingFlavor::ModuliQ { g, q } = self.flavor else {
            return Err(Error::domain("lambda classes live in the moduli ring"));
        };
        if j == 0 {
            return Ok(self.one());
        }
        if j > hodge_rank(g, q) {
            return Ok(self.zero());
        }
        self.generator(&format!("lambda_{j}"))
    }

    /// `P_j`, or zero above the bundle rank d. `P_0 = 1`.
    pub fn p_or_zero(&self, j: u32) -> Result<GradedPoly> {
        let RingFlavor::LineBundle { g, h } = self.flavor else {
            return Err(Error::domain("P classes live in the line-bundle ring"));
        };
        if j == 0 {
            return Ok(self.one());
        }
        if j > h - g + 1 {
            return Ok(self.zero());
        }
        self.generator(&format!("P_{j}"))
    }

    pub fn kappa_gen(&self, r: u32) -> Result<GradedPoly> {
        self.generator(&format!("kappa_{r}"))
    }

    pub fn mm(&self, i: u32, j: u32) -> Result<GradedPoly> {
        self.generator(&format!("m_{i}_{j}"))
    }
}

/// `ch_r` of the q-differential Hodge bundle in the kappa ring:
/// `B_{r+1}(q) / (r+1)! * kappa_r`. The genus enters only through domain
/// validation (and the separate kappa_0 assignment); the formula itself is
/// genus-uniform.
pub fn ch_hodge(r: u32, q: u32, g: u32) -> Result<GradedPoly> {
    if g < 2 || q < 1 {
        return Err(Error::domain(format!(
            "hodge character needs g >= 2 and q >= 1, got g = {g}, q = {q}"
        )));
    }
    let ring = TautRing::kappa(r, None)?;
    let coeff = bernoulli_poly_at(r as usize + 1, &Rat::from_int(q as i64))
        / Rat::factorial(r as u64 + 1);
    Ok(ring.kappa_gen(r)?.scale(&coeff))
}

/// Substitutes the numeric value `kappa_0 = 2g - 2` into a kappa-ring
/// element, leaving every other generator alone.
pub fn assign_kappa0(poly: &GradedPoly, g: u32) -> Result<GradedPoly> {
    let table = poly.table();
    let idx = table
        .index_of("kappa_0")
        .ok_or_else(|| Error::domain("polynomial has no kappa_0 generator"))?;
    let images = (0..table.len())
        .map(|k| {
            if k == idx {
                Ok(GradedPoly::constant(
                    table,
                    poly.degree_cap(),
                    Rat::from_int(2 * g as i64 - 2),
                ))
            } else {
                GradedPoly::generator(table, poly.degree_cap(), k)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    poly.substitute_with(table, poly.degree_cap(), &images)
}

/// Chern data of a formal bundle: the rank and the graded components
/// (index k holds the degree-(k+1) class), either Chern classes or Chern
/// character components depending on which conversion is applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    rank: i64,
    components: Vec<GradedPoly>,
}

impl ChernData {
    pub fn new(rank: i64, components: Vec<GradedPoly>) -> Result<ChernData> {
        for (k, c) in components.iter().enumerate() {
            if !c.is_homogeneous_of(k as u32 + 1) {
                return Err(Error::domain(format!(
                    "component {} must be homogeneous of weight {}",
                    k,
                    k + 1
                )));
            }
            if k > 0 && (components[0].table() != c.table() || components[0].degree_cap() != c.degree_cap()) {
                return Err(Error::domain("components over different rings"));
            }
        }
        Ok(ChernData { rank, components })
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn components(&self) -> &[GradedPoly] {
        &self.components
    }

    pub fn degree(&self) -> usize {
        self.components.len()
    }

    fn component(&self, k: usize) -> &GradedPoly {
        &self.components[k - 1]
    }
}

/// Chern classes to Chern character components, exactly, via the Newton
/// power sums p_k = k! ch_k:
/// p_k = (-1)^{k-1} k c_k + sum_{i=1..k-1} (-1)^{i-1} c_i p_{k-i}.
pub fn ch_from_chern(c: &ChernData) -> Result<ChernData> {
    let n = c.degree();
    if n == 0 {
        return Ok(c.clone());
    }
    let mut p: Vec<GradedPoly> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = c
            .component(k)
            .scale(&Rat::from_int(if k % 2 == 1 { k as i64 } else { -(k as i64) }));
        for i in 1..k {
            let term = c.component(i).checked_mul(&p[k - i - 1])?;
            acc = if i % 2 == 1 {
                acc.checked_add(&term)?
            } else {
                acc.checked_sub(&term)?
            };
        }
        p.push(acc);
    }
    let components = p
        .into_iter()
        .enumerate()
        .map(|(idx, pk)| pk.scale(&Rat::factorial(idx as u64 + 1).recip().expect("nonzero")))
        .collect();
    ChernData::new(c.rank, components)
}

/// Chern character components back to Chern classes:
/// c_k = (1/k) sum_{i=1..k} (-1)^{i-1} c_{k-i} p_i with c_0 = 1, p_i = i! ch_i.
pub fn chern_from_ch(ch: &ChernData) -> Result<ChernData> {
    let n = ch.degree();
    if n == 0 {
        return Ok(ch.clone());
    }
    let p: Vec<GradedPoly> = ch
        .components
        .iter()
        .enumerate()
        .map(|(idx, chk)| chk.scale(&Rat::factorial(idx as u64 + 1)))
        .collect();
    let mut c: Vec<GradedPoly> = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = p[k - 1].clone(); // i = k term: (-1)^{k-1} c_0 p_k, sign applied below
        if k % 2 == 0 {
            acc = acc.neg();
        }
        for i in 1..k {
            let term = c[k - i - 1].checked_mul(&p[i - 1])?;
            acc = if i % 2 == 1 {
                acc.checked_add(&term)?
            } else {
                acc.checked_sub(&term)?
            };
        }
        c.push(acc.scale(&Rat::new(1, k as i64)?));
    }
    ChernData::new(ch.rank, c)
}

/// Weight-k part of the Chern character of the Poincare bundle by mechanical
/// Grothendieck-Riemann-Roch: expand `e^gamma * Todd` in the two nilpotent
/// variables and push each `gamma^i omega^j` to `m_{i,j}`; exactly the
/// monomials with `i + j = k + 1` land in weight k.
pub fn grr_ch_p(k: u32) -> Result<GradedPoly> {
    let order = k + 1;
    let biv = GenTable::shared(vec![Generator::new("gamma", 1), Generator::new("omega", 1)])?;
    let gamma = GradedPoly::generator(&biv, Some(order), 0)?;
    let mut e_gamma = GradedPoly::zero(&biv, Some(order));
    for i in 0..=order {
        let inv_fact = Rat::factorial(i as u64).recip().expect("nonzero");
        e_gamma = e_gamma.add(&gamma.pow(i).scale(&inv_fact));
    }
    let todd = todd_series(order as usize);
    let omega = GradedPoly::generator(&biv, Some(order), 1)?;
    let mut todd_poly = GradedPoly::zero(&biv, Some(order));
    for j in 0..=order {
        todd_poly = todd_poly.add(&omega.pow(j).scale(&todd.coeff(j as usize)));
    }
    let prod = e_gamma.mul(&todd_poly);
    let ring = TautRing::mumford_morita(order, None)?;
    let mut out = ring.zero();
    for (exps, coeff) in prod.terms() {
        let (i, j) = (exps[0], exps[1]);
        if i + j == order {
            out = out.add(&ring.mm(i, j)?.scale(coeff));
        }
    }
    Ok(out)
}

/// The closed-form statement for the same class, exactly as printed:
/// `ch_k = m_{k+1,0}/(k+1)! - m_{k,1}/(2 k!)
///        + sum_{j=1..floor(k/2)} B_{2j}/((2j)! (k-2j)!) m_{k+1-2j,2j}`.
pub fn ch_p_stated(k: u32) -> Result<GradedPoly> {
    let ring = TautRing::mumford_morita(k + 1, None)?;
    let mut out = ring
        .mm(k + 1, 0)?
        .scale(&Rat::factorial(k as u64 + 1).recip().expect("nonzero"));
    out = out.sub(
        &ring
            .mm(k, 1)?
            .scale(&(Rat::factorial(k as u64) * Rat::from_int(2)).recip().expect("nonzero")),
    );
    for j in 1..=(k / 2) {
        let coeff = bernoulli_number(2 * j as usize)
            / (Rat::factorial(2 * j as u64) * Rat::factorial((k - 2 * j) as u64));
        out = out.add(&ring.mm(k + 1 - 2 * j, 2 * j)?.scale(&coeff));
    }
    Ok(out)
}

/// One monomial where the two routes disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChPDelta {
    pub i: u32,
    pub j: u32,
    pub grr: Rat,
    pub stated: Rat,
    /// grr - stated.
    pub delta: Rat,
}

/// Term-by-term comparison of the mechanical expansion against the printed
/// statement. An empty list means they agree at this k; a nonempty list is
/// reported, not an error, so both readings stay visible.
pub fn compare_ch_p(k: u32) -> Result<Vec<ChPDelta>> {
    let grr = grr_ch_p(k)?;
    let stated = ch_p_stated(k)?;
    let ring = TautRing::mumford_morita(k + 1, None)?;
    let mut out = Vec::new();
    for s in 1..=k + 1 {
        for j in 0..=s {
            let i = s - j;
            if i + j != k + 1 {
                continue;
            }
            let gen = ring.mm(i, j)?;
            let exps: Vec<u32> = gen.terms().next().expect("generator monomial").0.clone();
            let a = grr.coeff(&exps);
            let b = stated.coeff(&exps);
            if a != b {
                out.push(ChPDelta {
                    i,
                    j,
                    grr: a.clone(),
                    stated: b.clone(),
                    delta: &a - &b,
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    #[test]
    fn bernoulli_table() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[0], Rat::one());
        assert_eq!(b[1], r(-1, 2));
        assert_eq!(b[2], r(1, 6));
        assert_eq!(b[4], r(-1, 30));
        assert_eq!(b[6], r(1, 42));
        assert_eq!(b[8], r(-1, 30));
        assert_eq!(b[10], r(5, 66));
        assert_eq!(b[12], r(-691, 2730));
        for odd in [3, 5, 7, 9, 11] {
            assert!(b[odd].is_zero(), "B_{odd} must vanish");
        }
        assert_eq!(bernoulli_number(12), r(-691, 2730));
    }

    #[test]
    fn bernoulli_polynomials() {
        // B_1(x) = x - 1/2.
        assert_eq!(bernoulli_poly_coeffs(1), vec![r(-1, 2), Rat::one()]);
        // B_2(x) = x^2 - x + 1/6.
        assert_eq!(
            bernoulli_poly_coeffs(2),
            vec![r(1, 6), Rat::from_int(-1), Rat::one()]
        );
        // B_n(0) = B_n, and B_n(1) = B_n for n >= 2.
        for n in 0..=10 {
            assert_eq!(bernoulli_poly_at(n, &Rat::zero()), bernoulli_number(n));
            if n >= 2 {
                assert_eq!(bernoulli_poly_at(n, &Rat::one()), bernoulli_number(n));
            }
        }
        assert_eq!(bernoulli_poly_at(2, &Rat::one()), r(1, 6));
    }

    #[test]
    fn todd_matches_bernoulli() {
        let t = todd_series(12);
        for n in 0..=12 {
            assert_eq!(
                t.coeff(n) * Rat::factorial(n as u64),
                bernoulli_number(n)
            );
        }
    }

    #[test]
    fn moduli_ring_ranks() {
        // q = 1: lambda generators up to the Hodge rank g.
        let ring = TautRing::moduli(3, 1, None).unwrap();
        assert!(ring.generator("lambda_3").is_ok());
        assert!(ring.generator("lambda_4").is_err());
        assert_eq!(ring.lambda_or_zero(4).unwrap(), ring.zero());
        // q = 2, g = 2: d_q = 3.
        let ring = TautRing::moduli(2, 2, None).unwrap();
        assert!(ring.generator("lambda_3").is_ok());
        assert!(ring.generator("lambda_4").is_err());
        assert_eq!(hodge_rank(2, 2), 3);
        assert_eq!(moduli_component_index(2, 2), 3);
        assert_eq!(moduli_component_index(3, 1), 2);
        assert!(TautRing::moduli(1, 1, None).is_err());
    }

    #[test]
    fn line_bundle_ring_bounds() {
        assert!(TautRing::line_bundle(2, 2, None).is_err()); // h = 2g - 2 excluded
        let ring = TautRing::line_bundle(2, 5, None).unwrap(); // d = 4
        assert!(ring.generator("P_4").is_ok());
        assert!(ring.generator("P_5").is_err());
        assert_eq!(ring.p_or_zero(5).unwrap(), ring.zero());
    }

    #[test]
    fn hodge_character_values() {
        // ch_1 of the ordinary Hodge bundle is kappa_1 / 12.
        let c = ch_hodge(1, 1, 3).unwrap();
        let ring = TautRing::kappa(1, None).unwrap();
        assert_eq!(c, ring.kappa_gen(1).unwrap().scale(&r(1, 12)));
        // Even components vanish for q = 1.
        for rr in [2u32, 4, 6, 8] {
            assert!(ch_hodge(rr, 1, 2).unwrap().is_zero());
        }
        // ch_0 with kappa_0 = 2g - 2 equals (2q - 1)(g - 1).
        for q in 1..=5u32 {
            for g in 2..=6u32 {
                let c = ch_hodge(0, q, g).unwrap();
                let num = assign_kappa0(&c, g).unwrap();
                let expect = Rat::from_int((2 * q as i64 - 1) * (g as i64 - 1));
                assert_eq!(num.constant_term(), expect);
                assert_eq!(num.num_terms(), if expect.is_zero() { 0 } else { 1 });
            }
        }
    }

    #[test]
    fn newton_degree_two() {
        // Symbolic check: ch_2 = (c_1^2 - 2 c_2)/2 and back.
        let table = GenTable::graded_prefix("a", 2);
        let a1 = GradedPoly::generator(&table, None, 0).unwrap();
        let a2 = GradedPoly::generator(&table, None, 1).unwrap();
        let c = ChernData::new(2, vec![a1.clone(), a2.clone()]).unwrap();
        let ch = ch_from_chern(&c).unwrap();
        assert_eq!(ch.components()[0], a1);
        assert_eq!(
            ch.components()[1],
            a1.mul(&a1).sub(&a2.scale(&Rat::from_int(2))).scale(&r(1, 2))
        );
        let back = chern_from_ch(&ch).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn chern_data_validation() {
        let table = GenTable::graded_prefix("a", 2);
        let a1 = GradedPoly::generator(&table, None, 0).unwrap();
        // Weight-1 element in the weight-2 slot is rejected.
        assert!(ChernData::new(1, vec![a1.clone(), a1]).is_err());
    }

    #[test]
    fn grr_expansion_frozen_values() {
        let ring1 = TautRing::mumford_morita(1, None).unwrap();
        let expect0 = ring1
            .mm(1, 0)
            .unwrap()
            .sub(&ring1.mm(0, 1).unwrap().scale(&r(1, 2)));
        assert_eq!(grr_ch_p(0).unwrap(), expect0);

        let ring2 = TautRing::mumford_morita(2, None).unwrap();
        let expect1 = ring2
            .mm(2, 0)
            .unwrap()
            .scale(&r(1, 2))
            .sub(&ring2.mm(1, 1).unwrap().scale(&r(1, 2)))
            .add(&ring2.mm(0, 2).unwrap().scale(&r(1, 12)));
        assert_eq!(grr_ch_p(1).unwrap(), expect1);

        let ring3 = TautRing::mumford_morita(3, None).unwrap();
        let expect2 = ring3
            .mm(3, 0)
            .unwrap()
            .scale(&r(1, 6))
            .sub(&ring3.mm(2, 1).unwrap().scale(&r(1, 4)))
            .add(&ring3.mm(1, 2).unwrap().scale(&r(1, 12)));
        assert_eq!(grr_ch_p(2).unwrap(), expect2);

        let ring4 = TautRing::mumford_morita(4, None).unwrap();
        let expect3 = ring4
            .mm(4, 0)
            .unwrap()
            .scale(&r(1, 24))
            .sub(&ring4.mm(3, 1).unwrap().scale(&r(1, 12)))
            .add(&ring4.mm(2, 2).unwrap().scale(&r(1, 24)))
            .sub(&ring4.mm(0, 4).unwrap().scale(&r(1, 720)));
        assert_eq!(grr_ch_p(3).unwrap(), expect3);
    }

    #[test]
    fn grr_homogeneity() {
        for k in 0..=8u32 {
            let p = grr_ch_p(k).unwrap();
            assert!(p.is_homogeneous_of(k));
            assert!(!p.is_zero());
            // Every monomial is a single m_{i,j} with i + j = k + 1.
            for (exps, _) in p.terms() {
                assert_eq!(exps.iter().sum::<u32>(), 1);
            }
        }
    }

    #[test]
    fn statement_vs_mechanical_deltas() {
        assert!(compare_ch_p(2).unwrap().is_empty());
        let d1 = compare_ch_p(1).unwrap();
        assert_eq!(d1.len(), 1);
        assert_eq!((d1[0].i, d1[0].j), (0, 2));
        assert_eq!(d1[0].delta, r(1, 12));
        let d3 = compare_ch_p(3).unwrap();
        assert_eq!(d3.len(), 2);
        assert_eq!((d3[0].i, d3[0].j), (2, 2));
        assert_eq!(d3[0].delta, r(-1, 24));
        assert_eq!((d3[1].i, d3[1].j), (0, 4));
        assert_eq!(d3[1].delta, r(-1, 720));
        let d4 = compare_ch_p(4).unwrap();
        assert_eq!(d4.len(), 1);
        assert_eq!((d4[0].i, d4[0].j), (3, 2));
        assert_eq!(d4[0].delta, r(-1, 36));
    }
}
