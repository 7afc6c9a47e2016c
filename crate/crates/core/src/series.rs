//! Truncated formal Laurent series in 1/T over F_q with explicit
//! precision tracking.
//!
//! A nonzero series a_{k0} T^{k0} + a_{k0-1} T^{k0-1} + ... has absolute
//! value |T|^{k0}; arithmetic respects the ultrametric (|ab| = |a||b|,
//! |a + b| <= max(|a|, |b|)). Every series carries either an exact tag
//! (finitely many terms, all of them stored) or a bound B meaning the
//! coefficients of T^e are correct for all e >= B and unknown below.
//! Each operation derives the output bound conservatively from its
//! inputs; consumers check, never assume. A series whose known window
//! is entirely zero is "zero at this precision" and cannot be inverted.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::Poly;

#[derive(Clone)]
pub struct LaurentSeries {
    field: Field,
    /// Exponent of coeffs[0]; meaningless when coeffs is empty.
    top: i64,
    /// coeffs[i] is the coefficient of T^(top - i). For a bounded series
    /// the window always covers top ..= bound; coeffs[0] != 0 or empty.
    coeffs: Vec<u32>,
    /// None = exact (all omitted coefficients are zero);
    /// Some(B) = correct for exponents >= B, unknown below.
    bound: Option<i64>,
}

impl LaurentSeries {
    // --- construction ------------------------------------------------------

    pub(crate) fn from_window(
        field: Field,
        hi: i64,
        mut vals: Vec<u32>,
        bound: Option<i64>,
    ) -> LaurentSeries {
        match bound {
            Some(b) => {
                let want = if hi >= b { (hi - b + 1) as usize } else { 0 };
                vals.resize(want, 0);
            }
            None => {
                while vals.last() == Some(&0) {
                    vals.pop();
                }
            }
        }
        let lead = vals.iter().position(|&c| c != 0);
        match lead {
            Some(k) => {
                vals.drain(..k);
                LaurentSeries { field, top: hi - k as i64, coeffs: vals, bound }
            }
            None => LaurentSeries {
                field,
                top: bound.unwrap_or(0),
                coeffs: Vec::new(),
                bound,
            },
        }
    }

    /// The exact zero series (full precision).
    pub fn zero(field: &Field) -> LaurentSeries {
        LaurentSeries {
            field: field.clone(),
            top: 0,
            coeffs: Vec::new(),
            bound: None,
        }
    }

    /// Exact single term c * T^e.
    pub fn monomial(field: &Field, c: u32, e: i64) -> LaurentSeries {
        if c == 0 {
            return Self::zero(field);
        }
        LaurentSeries { field: field.clone(), top: e, coeffs: vec![c], bound: None }
    }

    /// A polynomial viewed as an exact series.
    pub fn from_poly(p: &Poly) -> LaurentSeries {
        match p.degree() {
            None => Self::zero(p.field()),
            Some(d) => {
                let vals: Vec<u32> = (0..=d).rev().map(|i| p.coeff(i)).collect();
                Self::from_window(p.field().clone(), d as i64, vals, None)
            }
        }
    }

    /// Expansion of P/Q in powers of 1/T with at least `prec` correct
    /// coefficients from the top. The result is exact when the division
    /// terminates, and its bound is never weaker than
    /// deg(P) - deg(Q) - prec + 1.
    pub fn from_rational(p: &Poly, q: &Poly, prec: usize) -> Result<LaurentSeries> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if prec == 0 {
            return Err(Error::InvalidInput("prec must be >= 1".into()));
        }
        if p.is_zero() {
            return Ok(Self::zero(p.field()));
        }
        let top0 = p.degree().unwrap() as i64 - q.degree().unwrap() as i64;
        let floor = top0 - prec as i64 + 1;
        Self::from_rational_floor(p, q, floor)
    }

    /// Expansion of P/Q correct down to exponent `floor` (inclusive).
    pub fn from_rational_floor(p: &Poly, q: &Poly, floor: i64) -> Result<LaurentSeries> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if p.is_zero() {
            return Ok(Self::zero(p.field()));
        }
        let shift = (-floor).max(0) as usize;
        let (quo, rem) = p.shift(shift).divmod(q)?;
        // p/q = quo * T^{-shift} + rem/(q*T^{shift}); the tail only
        // affects exponents below -shift <= floor.
        let bound = if rem.is_zero() { None } else { Some(-(shift as i64)) };
        match quo.degree() {
            None => Ok(Self::from_window(
                p.field().clone(),
                0,
                Vec::new(),
                bound,
            )),
            Some(d) => {
                let vals: Vec<u32> = (0..=d).rev().map(|i| quo.coeff(i)).collect();
                Ok(Self::from_window(
                    p.field().clone(),
                    d as i64 - shift as i64,
                    vals,
                    bound,
                ))
            }
        }
    }

    // --- observers ----------------------------------------------------------

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_exact(&self) -> bool {
        self.bound.is_none()
    }

    /// Precision bound B: coefficients at exponents >= B are correct.
    /// None means the series is exact.
    pub fn known_below(&self) -> Option<i64> {
        self.bound
    }

    /// No nonzero coefficient in the known window. For an exact series
    /// this means the series is exactly zero.
    pub fn is_zero_at_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.bound.is_none()
    }

    /// Top exponent k0 of the known part; |series| = |T|^{k0}.
    /// None when zero at the current precision.
    pub fn valuation(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.top)
        }
    }

    /// Coefficient of T^e; None when e lies below the known window.
    pub fn coeff(&self, e: i64) -> Option<u32> {
        if let Some(b) = self.bound {
            if e < b {
                return None;
            }
        }
        if self.coeffs.is_empty() || e > self.top {
            return Some(0);
        }
        let idx = (self.top - e) as usize;
        Some(self.coeffs.get(idx).copied().unwrap_or(0))
    }

    /// Nonzero known terms in decreasing exponent order.
    pub fn terms(&self) -> Vec<(i64, u32)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.top - i as i64, c))
            .collect()
    }

    // --- arithmetic ---------------------------------------------------------

    fn combined_bound(&self, other: &LaurentSeries) -> Option<i64> {
        match (self.bound, other.bound) {
            (None, None) => None,
            (Some(a), None) => Some(a),
            (None, Some(b)) => Some(b),
            (Some(a), Some(b)) => Some(a.max(b)),
        }
    }

    fn support_low(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.top - (self.coeffs.len() as i64 - 1))
        }
    }

    fn add_impl(&self, other: &LaurentSeries, negate: bool) -> LaurentSeries {
        assert!(
            self.field == other.field,
            "series arithmetic across different fields"
        );
        let f = &self.field;
        let bound = self.combined_bound(other);
        let tops: Vec<i64> = [self.valuation(), other.valuation()]
            .into_iter()
            .flatten()
            .collect();
        if tops.is_empty() {
            return Self::from_window(f.clone(), 0, Vec::new(), bound);
        }
        let hi = *tops.iter().max().unwrap();
        let lo = match bound {
            Some(b) => b,
            None => self
                .support_low()
                .into_iter()
                .chain(other.support_low())
                .min()
                .unwrap(),
        };
        let mut vals = Vec::with_capacity((hi - lo + 1).max(0) as usize);
        let mut e = hi;
        while e >= lo {
            let a = self.coeff(e).unwrap_or(0);
            let b = other.coeff(e).unwrap_or(0);
            vals.push(if negate { f.sub_raw(a, b) } else { f.add_raw(a, b) });
            e -= 1;
        }
        Self::from_window(f.clone(), hi, vals, bound)
    }

    pub fn add(&self, other: &LaurentSeries) -> LaurentSeries {
        self.add_impl(other, false)
    }

    pub fn sub(&self, other: &LaurentSeries) -> LaurentSeries {
        self.add_impl(other, true)
    }

    pub fn neg(&self) -> LaurentSeries {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg_raw(c)).collect();
        LaurentSeries {
            field: self.field.clone(),
            top: self.top,
            coeffs,
            bound: self.bound,
        }
    }

    pub fn scale(&self, c: u32) -> LaurentSeries {
        if c == 0 {
            return match self.bound {
                None => Self::zero(&self.field),
                b => Self::from_window(self.field.clone(), 0, Vec::new(), b),
            };
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| self.field.mul_raw(a, c))
            .collect();
        LaurentSeries {
            field: self.field.clone(),
            top: self.top,
            coeffs,
            bound: self.bound,
        }
    }

    /// Multiply by T^k.
    pub fn shift(&self, k: i64) -> LaurentSeries {
        LaurentSeries {
            field: self.field.clone(),
            top: self.top + k,
            coeffs: self.coeffs.clone(),
            bound: self.bound.map(|b| b + k),
        }
    }

    /// True top exponent upper bound, counting the unknown region.
    fn top_estimate(&self) -> i64 {
        match self.valuation() {
            Some(t) => t,
            // zero at precision: the true top, if any, is below the bound
            None => self.bound.expect("exact zero handled by caller") - 1,
        }
    }

    pub fn mul(&self, other: &LaurentSeries) -> LaurentSeries {
        assert!(
            self.field == other.field,
            "series arithmetic across different fields"
        );
        let f = &self.field;
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::zero(f);
        }
        // The unknown region of one factor smears across the whole of
        // the other; everything above both smear tops is determined.
        let mut bound: Option<i64> = None;
        if let Some(b) = self.bound {
            bound = Some(b + other.top_estimate());
        }
        if let Some(b) = other.bound {
            let cand = b + self.top_estimate();
            bound = Some(bound.map_or(cand, |x| x.max(cand)));
        }
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::from_window(f.clone(), 0, Vec::new(), bound);
        }
        let hi = self.top + other.top;
        let lo = match bound {
            Some(b) => b,
            None => self.support_low().unwrap() + other.support_low().unwrap(),
        };
        if hi < lo {
            return Self::from_window(f.clone(), 0, Vec::new(), bound);
        }
        let len = (hi - lo + 1) as usize;
        let mut vals = vec![0u32; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = i + j;
                if k >= len {
                    break;
                }
                if b != 0 {
                    vals[k] = f.add_raw(vals[k], f.mul_raw(a, b));
                }
            }
        }
        Self::from_window(f.clone(), hi, vals, bound)
    }

    pub fn mul_poly(&self, p: &Poly) -> LaurentSeries {
        self.mul(&Self::from_poly(p))
    }

    pub fn add_poly(&self, p: &Poly) -> LaurentSeries {
        self.add(&Self::from_poly(p))
    }

    /// Multiplicative inverse to the maximal provable precision.
    ///
    /// For a bounded input with top exponent t and bound B the inverse is
    /// provable down to B - 2t. Exact inputs must be monomials (any other
    /// exact series has an infinite inverse; use [`inv_floor`]).
    ///
    /// [`inv_floor`]: LaurentSeries::inv_floor
    pub fn inv(&self) -> Result<LaurentSeries> {
        if self.coeffs.is_empty() {
            return Err(Error::ZeroToPrecision);
        }
        match self.bound {
            Some(b) => self.inv_floor(b - 2 * self.top),
            None => {
                if self.coeffs.len() == 1 {
                    let c = self.field.inv_raw(self.coeffs[0])?;
                    Ok(Self::monomial(&self.field, c, -self.top))
                } else {
                    Err(Error::InvalidInput(
                        "inverse of an exact non-monomial series is infinite; \
                         use inv_floor"
                            .into(),
                    ))
                }
            }
        }
    }

    /// Multiplicative inverse computed down to exponent `floor`, clamped
    /// to the maximal provable precision for bounded inputs.
    pub fn inv_floor(&self, floor: i64) -> Result<LaurentSeries> {
        if self.coeffs.is_empty() {
            return Err(Error::ZeroToPrecision);
        }
        let f = &self.field;
        let t = self.top;
        let floor_eff = match self.bound {
            Some(b) => floor.max(b - 2 * t),
            None => {
                if self.coeffs.len() == 1 {
                    let c = f.inv_raw(self.coeffs[0])?;
                    return Ok(Self::monomial(f, c, -t));
                }
                floor
            }
        };
        let kmax = (-t - floor_eff).max(0) as usize;
        let a0_inv = f.inv_raw(self.coeffs[0])?;
        let mut c = Vec::with_capacity(kmax + 1);
        c.push(a0_inv);
        for k in 1..=kmax {
            let mut s = 0u32;
            let imax = k.min(self.coeffs.len() - 1);
            for i in 1..=imax {
                let a = self.coeffs[i];
                if a != 0 && c[k - i] != 0 {
                    s = f.add_raw(s, f.mul_raw(a, c[k - i]));
                }
            }
            c.push(f.neg_raw(f.mul_raw(a0_inv, s)));
        }
        Ok(Self::from_window(f.clone(), -t, c, Some(floor_eff)))
    }

    /// The Frobenius power: each coefficient maps to its r-th power and
    /// each exponent scales by r, so a bound B becomes r*B.
    pub fn frobenius_pow(&self, r: u64) -> Result<LaurentSeries> {
        if !self.field.is_char_power(r) {
            return Err(Error::NotCharPower {
                r,
                p: self.field.characteristic(),
            });
        }
        let f = &self.field;
        let bound = self.bound.map(|b| b * r as i64);
        if self.coeffs.is_empty() {
            return Ok(Self::from_window(f.clone(), 0, Vec::new(), bound));
        }
        let hi = self.top * r as i64;
        let lo = match bound {
            Some(b) => b,
            None => self.support_low().unwrap() * r as i64,
        };
        let mut vals = vec![0u32; (hi - lo + 1) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let e = (self.top - i as i64) * r as i64;
                vals[(hi - e) as usize] = f.pow_raw(c, r);
            }
        }
        Ok(Self::from_window(f.clone(), hi, vals, bound))
    }

    /// Forget everything below `floor`, weakening the bound to `floor`.
    /// An existing stronger claim is kept when `floor` is below it.
    pub fn truncate_to(&self, floor: i64) -> LaurentSeries {
        if let Some(b) = self.bound {
            if floor <= b {
                return self.clone();
            }
        }
        if self.coeffs.is_empty() {
            return Self::from_window(self.field.clone(), 0, Vec::new(), Some(floor));
        }
        let keep = ((self.top - floor + 1).max(0)) as usize;
        let vals: Vec<u32> = self.coeffs.iter().take(keep).copied().collect();
        Self::from_window(self.field.clone(), self.top, vals, Some(floor))
    }

    /// Terms with exponent >= 0 as a polynomial, plus F(q)^+ membership
    /// (integral part of degree >= 1). Requires the exponent-0
    /// coefficient to lie inside the known window.
    pub fn polynomial_part(&self) -> Result<(Poly, bool)> {
        if let Some(b) = self.bound {
            if b > 0 {
                return Err(Error::InsufficientPrecision(format!(
                    "integral part needs exponent 0; known only down to {}",
                    b
                )));
            }
        }
        let f = &self.field;
        if self.coeffs.is_empty() || self.top < 0 {
            return Ok((Poly::zero(f), false));
        }
        let deg = self.top as usize;
        let mut coeffs = vec![0u32; deg + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = self.coeff(i as i64).unwrap_or(0);
        }
        let p = Poly::from_raw(f.clone(), coeffs);
        let plus = matches!(p.degree(), Some(d) if d >= 1);
        Ok((p, plus))
    }

    /// Equality of all coefficients at exponents >= floor; both series
    /// must know that range.
    pub fn eq_through(&self, other: &LaurentSeries, floor: i64) -> Result<bool> {
        for s in [self, other] {
            if let Some(b) = s.known_below() {
                if b > floor {
                    return Err(Error::InsufficientPrecision(format!(
                        "comparison through {} but known only down to {}",
                        floor, b
                    )));
                }
            }
        }
        let hi = self.top_for_cmp().max(other.top_for_cmp());
        let mut e = hi;
        while e >= floor {
            if self.coeff(e) != other.coeff(e) {
                return Ok(false);
            }
            e -= 1;
        }
        Ok(true)
    }

    fn top_for_cmp(&self) -> i64 {
        self.valuation().unwrap_or(i64::MIN / 2)
    }
}

impl PartialEq for LaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.bound == other.bound
            && self.terms() == other.terms()
    }
}

impl Eq for LaurentSeries {}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            for (i, (e, c)) in terms.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                match (*e, *c) {
                    (0, c) => write!(f, "{}", c)?,
                    (1, 1) => write!(f, "T")?,
                    (1, c) => write!(f, "{}*T", c)?,
                    (e, 1) => write!(f, "T^{}", e)?,
                    (e, c) => write!(f, "{}*T^{}", c, e)?,
                }
            }
        }
        if let Some(b) = self.bound {
            write!(f, " + O(T^{})", b - 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn f2() -> Field {
        Field::new(2, 1).unwrap()
    }

    fn series(field: &Field, hi: i64, vals: &[u32], bound: Option<i64>) -> LaurentSeries {
        LaurentSeries::from_window(field.clone(), hi, vals.to_vec(), bound)
    }

    #[test]
    fn one_over_t_is_exact() {
        let f = f2();
        let p = Poly::one(&f);
        let q = Poly::t(&f);
        let s = LaurentSeries::from_rational(&p, &q, 1).unwrap();
        assert!(s.is_exact());
        assert_eq!(s.terms(), vec![(-1, 1)]);
    }

    #[test]
    fn geometric_expansion() {
        // T/(T+1) = 1 + T^-1 + T^-2 + ... over F_2
        let f = f2();
        let p = Poly::t(&f);
        let q = Poly::from_indices(&f, &[1, 1]).unwrap();
        let s = LaurentSeries::from_rational(&p, &q, 3).unwrap();
        assert!(!s.is_exact());
        assert_eq!(s.coeff(0), Some(1));
        assert_eq!(s.coeff(-1), Some(1));
        assert_eq!(s.coeff(-2), Some(1));
    }

    #[test]
    fn zero_numerator_full_precision() {
        let f = f2();
        let s =
            LaurentSeries::from_rational(&Poly::zero(&f), &Poly::t(&f), 5).unwrap();
        assert!(s.is_exact_zero());
    }

    #[test]
    fn rational_zero_denominator() {
        let f = f2();
        assert_eq!(
            LaurentSeries::from_rational(&Poly::t(&f), &Poly::zero(&f), 3)
                .unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn recombination_bound() {
        // q * (p/q) - p vanishes above the tracked bound
        let f = Field::new(2, 2).unwrap();
        let p = Poly::from_indices(&f, &[2, 1, 3]).unwrap();
        let q = Poly::from_indices(&f, &[1, 1, 0, 1]).unwrap();
        let s = LaurentSeries::from_rational(&p, &q, 12).unwrap();
        let back = s.mul(&LaurentSeries::from_poly(&q));
        let diff = back.sub(&LaurentSeries::from_poly(&p));
        let b = diff.known_below().unwrap();
        match diff.valuation() {
            None => {}
            Some(v) => assert!(v < b, "residual {} not below bound {}", v, b),
        }
        assert!(diff.is_zero_at_precision());
    }

    #[test]
    fn inv_monomial_exact() {
        let f = f2();
        let t = LaurentSeries::from_poly(&Poly::t(&f));
        let inv = t.inv().unwrap();
        assert!(inv.is_exact());
        assert_eq!(inv.terms(), vec![(-1, 1)]);
    }

    #[test]
    fn inv_zero_at_precision_rejected() {
        let f = f2();
        let z = series(&f, 0, &[], Some(-5));
        assert_eq!(z.inv().unwrap_err(), Error::ZeroToPrecision);
    }

    #[test]
    fn inv_roundtrip_to_precision() {
        let f = Field::new(2, 3).unwrap();
        let s = series(&f, 2, &[3, 1, 0, 5, 2, 7, 1, 4, 6], Some(-6));
        let inv = s.inv().unwrap();
        // bound of the inverse: B - 2t = -6 - 4 = -10
        assert_eq!(inv.known_below(), Some(-10));
        let prod = s.mul(&inv);
        let one = LaurentSeries::monomial(&f, 1, 0);
        let floor = prod.known_below().unwrap();
        assert!(prod.eq_through(&one, floor).unwrap());
    }

    #[test]
    fn frobenius_square_char2() {
        // (T + T^-1)^2 = T^2 + T^-2
        let f = f2();
        let s = series(&f, 1, &[1, 0, 1], None);
        let sq = s.frobenius_pow(2).unwrap();
        assert_eq!(sq.terms(), vec![(2, 1), (-2, 1)]);
        assert!(sq.is_exact());
    }

    #[test]
    fn frobenius_identity_and_one() {
        let f = Field::new(2, 2).unwrap();
        let one = LaurentSeries::monomial(&f, 1, 0);
        assert_eq!(one.frobenius_pow(4).unwrap(), one);
        let s = series(&f, 1, &[2, 3, 1], Some(-1));
        assert_eq!(s.frobenius_pow(1).unwrap(), s);
    }

    #[test]
    fn frobenius_scales_precision() {
        let f = f2();
        let s = series(&f, 1, &[1, 0, 1, 1], Some(-2));
        let sq = s.frobenius_pow(2).unwrap();
        assert_eq!(sq.known_below(), Some(-4));
        assert_eq!(sq.coeff(2), Some(1));
        assert_eq!(sq.coeff(1), Some(0));
        assert_eq!(sq.coeff(-2), Some(1));
        assert_eq!(sq.coeff(-4), Some(1));
    }

    #[test]
    fn polynomial_part_examples() {
        let f = f2();
        // T + 1 + T^-1 -> T + 1
        let s = series(&f, 1, &[1, 1, 1], Some(-1));
        let (p, plus) = s.polynomial_part().unwrap();
        assert_eq!(p, Poly::from_indices(&f, &[1, 1]).unwrap());
        assert!(plus);
        // T^-1 + T^-2 -> 0, not in F(q)^+
        let s = series(&f, -1, &[1, 1], Some(-2));
        let (p, plus) = s.polynomial_part().unwrap();
        assert!(p.is_zero());
        assert!(!plus);
    }

    #[test]
    fn polynomial_part_scaled_quotient() {
        let f4 = Field::new(2, 2).unwrap();
        // gT + T^-3
        let s = series(&f4, 1, &[2, 0, 0, 0, 1], Some(-3));
        let (p, plus) = s.polynomial_part().unwrap();
        assert_eq!(p, Poly::from_indices(&f4, &[0, 2]).unwrap());
        assert!(plus);
    }

    #[test]
    fn polynomial_part_needs_exponent_zero() {
        let f = f2();
        let s = series(&f, 3, &[1, 0, 1], Some(1));
        assert!(matches!(
            s.polynomial_part().unwrap_err(),
            Error::InsufficientPrecision(_)
        ));
    }

    #[test]
    fn add_tracks_weakest_bound() {
        let f = f2();
        let a = series(&f, 2, &[1, 0, 1, 1, 0, 1], Some(-3));
        let b = series(&f, 0, &[1, 1], Some(-1));
        let sum = a.add(&b);
        assert_eq!(sum.known_below(), Some(-1));
        assert_eq!(sum.coeff(2), Some(1));
        assert_eq!(sum.coeff(0), Some(0));
        assert_eq!(sum.coeff(-1), Some(0));
        assert_eq!(sum.coeff(-2), None);
    }

    #[test]
    fn mul_bound_rule() {
        let f = f2();
        // tops 2 and 1, bounds -3 and -4: product bound
        // max(-3 + 1, -4 + 2) = -2
        let a = series(&f, 2, &[1, 1, 0, 1, 1, 1], Some(-3));
        let b = series(&f, 1, &[1, 0, 1, 1, 0, 1], Some(-4));
        let prod = a.mul(&b);
        assert_eq!(prod.known_below(), Some(-2));
        assert_eq!(prod.valuation(), Some(3));
    }

    #[test]
    fn ultrametric_on_same_valuation_cancellation() {
        let f = f2();
        let a = series(&f, 1, &[1, 1], Some(0));
        let b = series(&f, 1, &[1, 0], Some(0));
        let sum = a.add(&b);
        // leading terms cancel: |a + b| < max(|a|, |b|)
        assert_eq!(sum.valuation(), Some(0));
    }

    #[test]
    fn truncate_weakens() {
        let f = f2();
        let s = series(&f, 1, &[1, 0, 1, 1, 1], Some(-3));
        let t = s.truncate_to(-1);
        assert_eq!(t.known_below(), Some(-1));
        assert_eq!(t.coeff(-1), Some(1));
        assert_eq!(t.coeff(-2), None);
        // cannot strengthen
        assert_eq!(s.truncate_to(-10).known_below(), Some(-3));
    }
}
