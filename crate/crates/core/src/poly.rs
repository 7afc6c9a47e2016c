//! Dense univariate polynomials over F_q in the indeterminate T.
//!
//! Coefficients are stored low degree first as element indices; the zero
//! polynomial is the empty vector and its degree is `None`, which sorts
//! strictly below every integer degree.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};

#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl Poly {
    /// Build from element indices, low degree first. Indices must be
    /// valid for the field; trailing zeros are stripped.
    pub fn from_indices(field: &Field, coeffs: &[u32]) -> Result<Poly> {
        for &c in coeffs {
            if c as u64 >= field.order() {
                return Err(Error::ElementOutOfRange(c as u64, field.order()));
            }
        }
        let mut p = Poly { field: field.clone(), coeffs: coeffs.to_vec() };
        p.normalize();
        Ok(p)
    }

    pub(crate) fn from_raw(field: Field, coeffs: Vec<u32>) -> Poly {
        let mut p = Poly { field, coeffs };
        p.normalize();
        p
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![1] }
    }

    /// The indeterminate T.
    pub fn t(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: vec![0, 1] }
    }

    pub fn constant(field: &Field, c: u32) -> Poly {
        Poly::from_raw(field.clone(), vec![c])
    }

    /// c * T^k
    pub fn monomial(field: &Field, c: u32, k: usize) -> Poly {
        if c == 0 {
            return Poly::zero(field);
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly { field: field.clone(), coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of T^i as an element index (0 beyond the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeff_elem(&self, i: usize) -> FieldElem {
        self.field.elem(self.coeff(i) as u64).unwrap()
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    /// Coefficient indices, low degree first.
    pub fn indices(&self) -> &[u32] {
        &self.coeffs
    }

    fn check_same(&self, other: &Poly) -> &Field {
        assert!(
            self.field == other.field,
            "polynomial arithmetic across different fields"
        );
        &self.field
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.check_same(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.add_raw(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::from_raw(f.clone(), coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = self.check_same(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| f.sub_raw(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::from_raw(f.clone(), coeffs)
    }

    pub fn neg(&self) -> Poly {
        let coeffs = self.coeffs.iter().map(|&c| self.field.neg_raw(c)).collect();
        Poly { field: self.field.clone(), coeffs }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = self.check_same(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut coeffs = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                coeffs[i + j] = f.add_raw(coeffs[i + j], f.mul_raw(a, b));
            }
        }
        Poly { field: f.clone(), coeffs }
    }

    /// Multiply by a scalar given as an element index.
    pub fn scale(&self, c: u32) -> Poly {
        if c == 0 {
            return Poly::zero(&self.field);
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| self.field.mul_raw(a, c))
            .collect();
        Poly { field: self.field.clone(), coeffs }
    }

    /// Multiply by T^k.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0u32; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { field: self.field.clone(), coeffs }
    }

    /// Euclidean division: (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let f = self.check_same(divisor).clone();
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(&f), self.clone()));
        }
        let lead_inv = f.inv_raw(divisor.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u32; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = f.mul_raw(rem[k], lead_inv);
            if c == 0 {
                continue;
            }
            quo[k - dd] = c;
            for (i, &m) in divisor.coeffs.iter().enumerate() {
                let sub = f.mul_raw(c, m);
                rem[k - dd + i] = f.sub_raw(rem[k - dd + i], sub);
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_raw(f.clone(), quo), Poly::from_raw(f, rem)))
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// P^r for r a power of the characteristic: coefficients map to their
    /// r-th powers and exponents scale by r.
    pub fn frobenius_pow(&self, r: u64) -> Result<Poly> {
        if !self.field.is_char_power(r) {
            return Err(Error::NotCharPower {
                r,
                p: self.field.characteristic(),
            });
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let ru = r as usize;
        let mut coeffs = vec![0u32; (self.coeffs.len() - 1) * ru + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                coeffs[i * ru] = self.field.pow_raw(c, r);
            }
        }
        Ok(Poly { field: self.field.clone(), coeffs })
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{}", c)?,
                (1, 1) => write!(f, "T")?,
                (1, _) => write!(f, "{}*T", c)?,
                (_, 1) => write!(f, "T^{}", i)?,
                (_, _) => write!(f, "{}*T^{}", c, i)?,
            }
        }
        Ok(())
    }
}
