//! Exact arithmetic in finite fields F_{p^s}.
//!
//! A field is described by its characteristic `p`, extension degree `s`
//! and a monic irreducible modulus of degree `s` over F_p. Elements are
//! coordinate vectors in the power basis of the modulus, packed into a
//! single integer index: the element with coordinates (c_0, ..., c_{s-1})
//! has index `sum c_i p^i`. This index is also the text encoding used on
//! the CLI, so F_4 = {0, 1, 2, 3} with 2 = g and 3 = g + 1 for a
//! generator g of the default modulus x^2 + x + 1.
//!
//! Multiplication and inversion go through discrete-log tables built once
//! per field (all fields used here are small); a generic polynomial-basis
//! path is kept as ground truth and used to build the tables.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order for which exp/log tables are built.
const TABLE_LIMIT: u64 = 1 << 16;

/// Hard cap on the field order so indices fit comfortably in u32.
const ORDER_LIMIT: u64 = 1 << 31;

/// Built-in moduli, one fixed choice per (p, s) so element encodings are
/// reproducible across runs. Coefficients low degree first.
fn default_modulus(p: u64, s: u32) -> Option<Vec<u32>> {
    let m: &[u32] = match (p, s) {
        (_, 1) => &[0, 1], // placeholder x; F_p itself
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (2, 5) => &[1, 0, 1, 0, 0, 1],
        (2, 6) => &[1, 1, 0, 0, 0, 0, 1],
        (2, 7) => &[1, 1, 0, 0, 0, 0, 0, 1],
        (2, 8) => &[1, 1, 0, 1, 1, 0, 0, 0, 1],
        _ => return None,
    };
    Some(m.to_vec())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Debug)]
struct FieldRepr {
    p: u64,
    s: u32,
    q: u64,
    /// Monic modulus, length s + 1, low degree first.
    modulus: Vec<u32>,
    /// exp[i] = g^i for a fixed generator g; empty when q > TABLE_LIMIT.
    exp: Vec<u32>,
    /// log[rep] for rep in 1..q; log[0] is unused.
    log: Vec<u32>,
}

/// Handle to a finite field F_{p^s}. Cheap to clone; all values derived
/// from the same handle (or a structurally equal one) are compatible.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.s == other.0.s
                && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

// --- generic polynomial-basis arithmetic on digit vectors -----------------

fn unpack(rep: u32, p: u64, s: u32) -> Vec<u64> {
    let mut digits = vec![0u64; s as usize];
    let mut r = rep as u64;
    for d in digits.iter_mut() {
        *d = r % p;
        r /= p;
    }
    digits
}

fn pack(digits: &[u64], p: u64) -> u32 {
    let mut rep = 0u64;
    for &d in digits.iter().rev() {
        rep = rep * p + d;
    }
    rep as u32
}

/// Schoolbook product of the digit vectors reduced by the monic modulus.
fn generic_mul(a: u32, b: u32, p: u64, s: u32, modulus: &[u32]) -> u32 {
    let s = s as usize;
    let da = unpack(a, p, s as u32);
    let db = unpack(b, p, s as u32);
    let mut prod = vec![0u64; 2 * s - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // x^s = -(m_0 + m_1 x + ... + m_{s-1} x^{s-1})
    for k in (s..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for i in 0..s {
            let m = modulus[i] as u64;
            if m != 0 {
                let sub = (c * m) % p;
                prod[k - s + i] = (prod[k - s + i] + p - sub) % p;
            }
        }
    }
    pack(&prod[..s], p)
}

fn generic_pow(mut base: u32, mut e: u64, p: u64, s: u32, modulus: &[u32]) -> u32 {
    let mut acc = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = generic_mul(acc, base, p, s, modulus);
        }
        base = generic_mul(base, base, p, s, modulus);
        e >>= 1;
    }
    acc
}

// --- F_p[x] helpers used only for modulus validation -----------------------

fn fp_poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let lead_inv = mod_inverse(b[db], p);
    while a.len() > db {
        let k = a.len() - 1;
        let c = (a[k] * lead_inv) % p;
        if c != 0 {
            for i in 0..=db {
                let sub = (c * b[i]) % p;
                let idx = k - db + i;
                a[idx] = (a[idx] + p - sub) % p;
            }
        }
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
        if a.len() <= db {
            break;
        }
    }
    a
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, 0 < a < p
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Trial division by every monic polynomial of degree <= s/2.
fn check_irreducible(modulus: &[u32], p: u64) -> Result<()> {
    let s = modulus.len() - 1;
    let m: Vec<u64> = modulus.iter().map(|&c| c as u64).collect();
    for d in 1..=(s / 2) {
        let count = p.pow(d as u32);
        for idx in 0..count {
            // monic divisor candidate of degree d
            let mut cand = unpack(idx as u32, p, d as u32);
            cand.push(1);
            let rem = fp_poly_rem(m.clone(), &cand, p);
            if rem.iter().all(|&c| c == 0) {
                return Err(Error::ReducibleModulus(d));
            }
        }
    }
    Ok(())
}

impl Field {
    /// Field with the built-in modulus for (p, s). Available for p = 2,
    /// s <= 8 and for p in {3, 5, 7}, s = 1.
    pub fn new(p: u64, s: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let modulus =
            default_modulus(p, s).ok_or(Error::NoDefaultModulus(p, s))?;
        Self::build(p, s, modulus)
    }

    /// Field with an explicit monic irreducible modulus of degree s
    /// (coefficients low degree first, each in [0, p)).
    pub fn with_modulus(p: u64, s: u32, modulus: &[u32]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() != s as usize + 1 {
            return Err(Error::BadModulus(format!(
                "expected degree {}, got degree {}",
                s,
                modulus.len().saturating_sub(1)
            )));
        }
        if modulus.iter().any(|&c| c as u64 >= p) {
            return Err(Error::BadModulus(
                "coefficient out of range".to_string(),
            ));
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::BadModulus("not monic".to_string()));
        }
        Self::build(p, s, modulus.to_vec())
    }

    fn build(p: u64, s: u32, modulus: Vec<u32>) -> Result<Field> {
        if s == 0 {
            return Err(Error::InvalidInput("degree s must be >= 1".into()));
        }
        let mut q: u64 = 1;
        for _ in 0..s {
            q = q.checked_mul(p).ok_or(Error::FieldTooLarge(p, s))?;
            if q > ORDER_LIMIT {
                return Err(Error::FieldTooLarge(p, s));
            }
        }
        if s > 1 {
            check_irreducible(&modulus, p)?;
        }
        let (exp, log) = if q <= TABLE_LIMIT {
            build_tables(p, s, q, &modulus)
        } else {
            (Vec::new(), Vec::new())
        };
        Ok(Field(Arc::new(FieldRepr { p, s, q, modulus, exp, log })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.s
    }

    /// Field order q = p^s.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { field: self.clone(), rep: 0 }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem { field: self.clone(), rep: 1 }
    }

    /// Element from its integer index in [0, q).
    pub fn elem(&self, index: u64) -> Result<FieldElem> {
        if index >= self.0.q {
            return Err(Error::ElementOutOfRange(index, self.0.q));
        }
        Ok(FieldElem { field: self.clone(), rep: index as u32 })
    }

    /// All q - 1 nonzero elements in index order.
    pub fn units(&self) -> Vec<FieldElem> {
        (1..self.0.q).map(|i| self.elem(i).unwrap()).collect()
    }

    /// True when `r` is a power of the characteristic (including p^0 = 1).
    pub fn is_char_power(&self, r: u64) -> bool {
        let p = self.0.p;
        let mut r = r;
        if r == 0 {
            return false;
        }
        while r % p == 0 {
            r /= p;
        }
        r == 1
    }

    // --- raw index arithmetic (hot path, no tagging) -----------------------

    #[inline]
    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        let r = &*self.0;
        if r.p == 2 {
            a ^ b
        } else if r.s == 1 {
            ((a as u64 + b as u64) % r.p) as u32
        } else {
            let da = unpack(a, r.p, r.s);
            let db = unpack(b, r.p, r.s);
            let sum: Vec<u64> =
                da.iter().zip(&db).map(|(&x, &y)| (x + y) % r.p).collect();
            pack(&sum, r.p)
        }
    }

    #[inline]
    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        let r = &*self.0;
        if r.p == 2 {
            a
        } else if r.s == 1 {
            if a == 0 {
                0
            } else {
                (r.p - a as u64) as u32
            }
        } else {
            let da = unpack(a, r.p, r.s);
            let neg: Vec<u64> =
                da.iter().map(|&x| if x == 0 { 0 } else { r.p - x }).collect();
            pack(&neg, r.p)
        }
    }

    #[inline]
    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let r = &*self.0;
        if !r.exp.is_empty() {
            let n = r.q - 1;
            let idx = (r.log[a as usize] as u64 + r.log[b as usize] as u64) % n;
            r.exp[idx as usize]
        } else {
            generic_mul(a, b, r.p, r.s, &r.modulus)
        }
    }

    pub(crate) fn inv_raw(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let r = &*self.0;
        if !r.exp.is_empty() {
            let n = r.q - 1;
            let idx = (n - r.log[a as usize] as u64) % n;
            Ok(r.exp[idx as usize])
        } else {
            Ok(generic_pow(a, r.q - 2, r.p, r.s, &r.modulus))
        }
    }

    pub(crate) fn div_raw(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul_raw(a, self.inv_raw(b)?))
    }

    pub(crate) fn pow_raw(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let r = &*self.0;
        if !r.exp.is_empty() {
            let n = r.q - 1;
            let idx = (r.log[a as usize] as u64 as u128 * e as u128
                % n as u128) as u64;
            r.exp[idx as usize]
        } else {
            generic_pow(a, e, r.p, r.s, &r.modulus)
        }
    }

    /// a^r for r a power of the characteristic.
    pub(crate) fn frobenius_raw(&self, a: u32, r: u64) -> Result<u32> {
        if !self.is_char_power(r) {
            return Err(Error::NotCharPower { r, p: self.0.p });
        }
        Ok(self.pow_raw(a, r))
    }

    pub(crate) fn require_same(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }
}

fn build_tables(p: u64, s: u32, q: u64, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let n = q - 1;
    let factors = prime_factors(n);
    let mut generator = 1u32;
    if n > 1 {
        'search: for cand in 2..q {
            let cand = cand as u32;
            for &f in &factors {
                if generic_pow(cand, n / f, p, s, modulus) == 1 {
                    continue 'search;
                }
            }
            generator = cand;
            break;
        }
    }
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![0u32; q as usize];
    let mut acc = 1u32;
    for (i, e) in exp.iter_mut().enumerate() {
        *e = acc;
        log[acc as usize] = i as u32;
        acc = generic_mul(acc, generator, p, s, modulus);
    }
    (exp, log)
}

/// Element of a finite field, tagged with its field handle. Arithmetic
/// between elements of different fields is an error.
#[derive(Clone)]
pub struct FieldElem {
    field: Field,
    rep: u32,
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Integer index encoding (coordinates in base p).
    pub fn index(&self) -> u32 {
        self.rep
    }

    /// Coordinates in the power basis, low degree first, length s.
    pub fn coords(&self) -> Vec<u64> {
        unpack(self.rep, self.field.0.p, self.field.0.s)
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    pub fn add(&self, other: &FieldElem) -> Result<FieldElem> {
        self.field.require_same(&other.field)?;
        Ok(FieldElem {
            field: self.field.clone(),
            rep: self.field.add_raw(self.rep, other.rep),
        })
    }

    pub fn sub(&self, other: &FieldElem) -> Result<FieldElem> {
        self.field.require_same(&other.field)?;
        Ok(FieldElem {
            field: self.field.clone(),
            rep: self.field.sub_raw(self.rep, other.rep),
        })
    }

    pub fn mul(&self, other: &FieldElem) -> Result<FieldElem> {
        self.field.require_same(&other.field)?;
        Ok(FieldElem {
            field: self.field.clone(),
            rep: self.field.mul_raw(self.rep, other.rep),
        })
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem> {
        self.field.require_same(&other.field)?;
        Ok(FieldElem {
            field: self.field.clone(),
            rep: self.field.div_raw(self.rep, other.rep)?,
        })
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            rep: self.field.neg_raw(self.rep),
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        Ok(FieldElem {
            field: self.field.clone(),
            rep: self.field.inv_raw(self.rep)?,
        })
    }

    pub fn pow(&self, e: u64) -> FieldElem {
        FieldElem {
            field: self.field.clone(),
            rep: self.field.pow_raw(self.rep, e),
        }
    }

    /// The Frobenius map x -> x^r, r a power of the characteristic.
    /// Additive and multiplicative: (a + b)^r = a^r + b^r.
    pub fn frobenius(&self, r: u64) -> Result<FieldElem> {
        Ok(FieldElem {
            field: self.field.clone(),
            rep: self.field.frobenius_raw(self.rep, r)?,
        })
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.rep == other.rep
    }
}

impl Eq for FieldElem {}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.rep, self.field.0.q)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_elements() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.units().len(), 1);
        assert_eq!(f.units()[0].index(), 1);
    }

    #[test]
    fn f4_generator_square() {
        // g^2 = g + 1 under the default modulus x^2 + x + 1
        let f = Field::new(2, 2).unwrap();
        let g = f.elem(2).unwrap();
        assert_eq!(g.mul(&g).unwrap().index(), 3);
        assert_eq!(g.frobenius(2).unwrap().index(), 3);
    }

    #[test]
    fn char2_self_cancels() {
        let f = Field::new(2, 3).unwrap();
        for a in 0..f.order() {
            let a = f.elem(a).unwrap();
            assert!(a.add(&a).unwrap().is_zero());
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // (x + 1)^2 = x^2 + 1 over F_2
        let err = Field::with_modulus(2, 2, &[1, 0, 1]).unwrap_err();
        assert_eq!(err, Error::ReducibleModulus(1));
    }

    #[test]
    fn default_moduli_irreducible() {
        for s in 2..=8 {
            let m = default_modulus(2, s).unwrap();
            assert!(check_irreducible(&m, 2).is_ok(), "s = {}", s);
        }
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(1, 1).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn division_by_zero_rejected() {
        let f = Field::new(2, 2).unwrap();
        let one = f.one();
        let zero = f.zero();
        assert_eq!(one.div(&zero).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn mixed_fields_rejected() {
        let f4 = Field::new(2, 2).unwrap();
        let f8 = Field::new(2, 3).unwrap();
        let a = f4.one();
        let b = f8.one();
        assert_eq!(a.add(&b).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn unit_count_matches_order() {
        for (p, s, n) in [(2, 1, 1), (2, 2, 3), (2, 3, 7), (3, 1, 2), (7, 1, 6)] {
            let f = Field::new(p, s).unwrap();
            assert_eq!(f.units().len(), n);
        }
    }

    #[test]
    fn frobenius_fixed_points() {
        let f = Field::new(2, 3).unwrap();
        assert_eq!(f.one().frobenius(4).unwrap(), f.one());
        assert_eq!(f.zero().frobenius(4).unwrap(), f.zero());
        // x^q = x for every element
        for i in 0..f.order() {
            let a = f.elem(i).unwrap();
            assert_eq!(a.frobenius(8).unwrap(), a);
        }
    }

    #[test]
    fn fermat_in_prime_field() {
        let f = Field::new(2, 1).unwrap();
        for i in 0..2 {
            let a = f.elem(i).unwrap();
            assert_eq!(a.frobenius(2).unwrap(), a);
        }
    }

    #[test]
    fn frobenius_rejects_non_char_power() {
        let f = Field::new(2, 2).unwrap();
        let g = f.elem(2).unwrap();
        assert_eq!(
            g.frobenius(6).unwrap_err(),
            Error::NotCharPower { r: 6, p: 2 }
        );
        assert_eq!(
            g.frobenius(3).unwrap_err(),
            Error::NotCharPower { r: 3, p: 2 }
        );
    }

    #[test]
    fn table_and_generic_multiplication_agree() {
        for (p, s) in [(2u64, 3u32), (2, 4), (3, 1), (7, 1)] {
            let f = Field::new(p, s).unwrap();
            let repr = &*f.0;
            for a in 0..f.order() as u32 {
                for b in 0..f.order() as u32 {
                    let generic = if a == 0 || b == 0 {
                        0
                    } else {
                        generic_mul(a, b, repr.p, repr.s, &repr.modulus)
                    };
                    assert_eq!(f.mul_raw(a, b), generic, "p={} s={} {}*{}", p, s, a, b);
                }
            }
        }
    }

    #[test]
    fn inverses_multiply_to_one() {
        for (p, s) in [(2u64, 1u32), (2, 3), (2, 8), (3, 1), (5, 1), (7, 1)] {
            let f = Field::new(p, s).unwrap();
            for u in f.units() {
                assert_eq!(u.mul(&u.inv().unwrap()).unwrap(), f.one());
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative() {
        for (p, s, t_max) in [(2u64, 3u32, 3u32), (2, 4, 2), (3, 1, 2), (5, 1, 1)] {
            let f = Field::new(p, s).unwrap();
            for t in 0..=t_max {
                let r = p.pow(t);
                for a in 0..f.order() {
                    for b in 0..f.order() {
                        let a = f.elem(a).unwrap();
                        let b = f.elem(b).unwrap();
                        let lhs = a.add(&b).unwrap().frobenius(r).unwrap();
                        let rhs = a
                            .frobenius(r)
                            .unwrap()
                            .add(&b.frobenius(r).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                        let lhs = a.mul(&b).unwrap().frobenius(r).unwrap();
                        let rhs = a
                            .frobenius(r)
                            .unwrap()
                            .mul(&b.frobenius(r).unwrap())
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn custom_modulus_accepted() {
        // x^2 + 1 is irreducible over F_3
        let f = Field::with_modulus(3, 2, &[1, 0, 1]).unwrap();
        assert_eq!(f.order(), 9);
        for u in f.units() {
            assert_eq!(u.mul(&u.inv().unwrap()).unwrap(), f.one());
        }
    }

    #[test]
    fn wrong_degree_modulus_rejected() {
        assert!(matches!(
            Field::with_modulus(2, 3, &[1, 1, 1]).unwrap_err(),
            Error::BadModulus(_)
        ));
    }
}
