//! Truncated formal power series with exact rational coefficients.
//!
//! A `PowerSeries` stores the coefficients of `x^0 .. x^order` densely; all
//! arithmetic truncates at the smaller order of the operands. Inversion
//! requires an invertible constant term and exponentiation of a series
//! requires constant term zero; both report `Error::Domain` otherwise.

use std::fmt;

use crate::error::Error;
use crate::rational::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    var: String,
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    /// Series from explicit coefficients `c_0, c_1, ..., c_order`.
    pub fn new(var: impl Into<String>, coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        PowerSeries { var: var.into(), coeffs }
    }

    pub fn zero(var: impl Into<String>, order: usize) -> Self {
        PowerSeries::new(var, vec![Rat::zero(); order + 1])
    }

    pub fn one(var: impl Into<String>, order: usize) -> Self {
        let mut s = PowerSeries::zero(var, order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// The series `x` itself.
    pub fn identity(var: impl Into<String>, order: usize) -> Self {
        let mut s = PowerSeries::zero(var, order);
        if order >= 1 {
            s.coeffs[1] = Rat::one();
        }
        s
    }

    /// Coefficients generated termwise from `f(k)`.
    pub fn from_fn(var: impl Into<String>, order: usize, f: impl Fn(usize) -> Rat) -> Self {
        PowerSeries::new(var, (0..=order).map(f).collect())
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    fn check_var(&self, rhs: &PowerSeries) {
        assert_eq!(self.var, rhs.var, "series in different variables");
    }

    pub fn add(&self, rhs: &PowerSeries) -> PowerSeries {
        self.check_var(rhs);
        let order = self.order().min(rhs.order());
        PowerSeries::from_fn(self.var.clone(), order, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }

    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        self.check_var(rhs);
        let order = self.order().min(rhs.order());
        PowerSeries::from_fn(self.var.clone(), order, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }

    pub fn scale(&self, c: &Rat) -> PowerSeries {
        PowerSeries::new(self.var.clone(), self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        self.check_var(rhs);
        let order = self.order().min(rhs.order());
        let mut out = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries::new(self.var.clone(), out)
    }

    /// Multiplicative inverse to the same order. The constant term must be nonzero;
    /// coefficients follow the triangular recurrence b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}.
    pub fn inverse(&self) -> Result<PowerSeries, Error> {
        if self.coeffs[0].is_zero() {
            return Err(Error::domain(
                "series with zero constant term has no inverse",
            ));
        }
        let a0_inv = self.coeffs[0].recip()?;
        let mut b = vec![Rat::zero(); self.order() + 1];
        b[0] = a0_inv.clone();
        for n in 1..=self.order() {
            let mut acc = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &b[n - k];
                }
            }
            b[n] = -(acc * &a0_inv);
        }
        Ok(PowerSeries::new(self.var.clone(), b))
    }

    /// `exp` of a series with zero constant term, via n*e_n = sum_{k=1..n} k*s_k*e_{n-k}.
    pub fn exp(&self) -> Result<PowerSeries, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::domain(
                "exp needs a series with zero constant term",
            ));
        }
        let mut e = vec![Rat::zero(); self.order() + 1];
        e[0] = Rat::one();
        for n in 1..=self.order() {
            let mut acc = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &Rat::from_int(k as i64)) * &e[n - k];
                }
            }
            e[n] = acc / Rat::from_int(n as i64);
        }
        Ok(PowerSeries::new(self.var.clone(), e))
    }

    /// The series (e^x - 1)/x = sum_{n>=0} x^n/(n+1)!.
    pub fn expm1_over_x(var: impl Into<String>, order: usize) -> PowerSeries {
        PowerSeries::from_fn(var, order, |n| {
            Rat::one() / Rat::factorial(n as u64 + 1)
        })
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{}", self.var)?,
                (1, false) => write!(f, "({mag})*{}", self.var)?,
                (_, true) => write!(f, "{}^{k}", self.var)?,
                (_, false) => write!(f, "({mag})*{}^{k}", self.var)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d).unwrap()
    }

    #[test]
    fn inverse_of_expm1_over_x_matches_known_coefficients() {
        // (e^t - 1)/t inverted to order 4: 1 - t/2 + t^2/12 - t^4/720.
        let s = PowerSeries::expm1_over_x("t", 4);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeff(0), Rat::one());
        assert_eq!(inv.coeff(1), r(-1, 2));
        assert_eq!(inv.coeff(2), r(1, 12));
        assert_eq!(inv.coeff(3), Rat::zero());
        assert_eq!(inv.coeff(4), r(-1, 720));
        // Product with the original recovers 1 at this order.
        assert_eq!(s.mul(&inv), PowerSeries::one("t", 4));
    }

    #[test]
    fn inverse_rejects_zero_constant_term() {
        let s = PowerSeries::identity("x", 5);
        assert!(s.inverse().is_err());
    }

    #[test]
    fn exp_of_x_gives_factorials() {
        let e = PowerSeries::identity("x", 6).exp().unwrap();
        for k in 0..=6 {
            assert_eq!(e.coeff(k), Rat::one() / Rat::factorial(k as u64));
        }
        assert!(PowerSeries::one("x", 3).exp().is_err());
    }

    #[test]
    fn mul_truncates_to_smaller_order() {
        let a = PowerSeries::from_fn("x", 5, |k| Rat::from_int(k as i64 + 1));
        let b = PowerSeries::one("x", 3);
        assert_eq!(a.mul(&b).order(), 3);
    }

    #[test]
    fn random_series_invert_back() {
        // 200 deterministic pseudo-random series with nonzero constant term.
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(17);
        for _ in 0..200 {
            let order = rng.gen_range(0..=16);
            let mut coeffs: Vec<Rat> = (0..=order)
                .map(|_| {
                    let n = rng.gen_range(-9i64..=9);
                    let d = rng.gen_range(1i64..=9);
                    r(n, d)
                })
                .collect();
            if coeffs[0].is_zero() {
                coeffs[0] = Rat::one();
            }
            let s = PowerSeries::new("x", coeffs);
            let inv = s.inverse().unwrap();
            assert_eq!(s.mul(&inv), PowerSeries::one("x", order));
        }
    }
}
