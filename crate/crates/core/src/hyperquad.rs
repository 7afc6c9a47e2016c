//! Hyperquadratic continued fractions in characteristic 2 with partial
//! quotients of degree one.
//!
//! An irrational alpha in F(q) is hyperquadratic of order t when
//! A alpha^{r+1} + B alpha^r + C alpha + D = 0 with polynomial
//! coefficients and r = p^t. This module builds the defining equation of
//! the family parameterized by (q = 2^s, r = 2^t, ell, Lambda), generates
//! the leading-coefficient sequence (lambda_n) recursively, and provides
//! an independent fixed-point root oracle so the two routes can be
//! cross-checked coefficient by coefficient.
//!
//! The Fibonacci-like polynomials F_0 = 1, F_1 = T,
//! F_{n+1} = T F_n + F_{n-1} drive everything: the pair
//! (P, Q) = (eps1 F_{r-1}, eps2 F_{r-2}) pins the equation, and
//! F_{r-1} = T^{r-1} in characteristic 2 (for p > 2 it is
//! (T^2+4)^{(r-1)/2}), which is what keeps every partial quotient at
//! degree one.

use std::fmt;
use std::ops::RangeInclusive;

use crate::contfrac::{self, ContinuantTable};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};
use crate::poly::Poly;
use crate::series::LaurentSeries;

// ---------------------------------------------------------------------------
// Fibonacci-like polynomials and their closed forms
// ---------------------------------------------------------------------------

/// F_n over the given field: F_0 = 1, F_1 = T, F_{n+1} = T F_n + F_{n-1}.
/// Also equals the continuant <T, ..., T> with n entries.
pub fn fib_poly(field: &Field, n: usize) -> Poly {
    let mut prev = Poly::one(field);
    if n == 0 {
        return prev;
    }
    let t = Poly::t(field);
    let mut cur = t.clone();
    for _ in 1..n {
        let next = t.mul(&cur).add(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Comparison of F_{r-1} against its closed form: T^{r-1} for p = 2 and
/// (T^2 + 4)^{(r-1)/2} for p > 2, as exact polynomial equality.
#[derive(Debug, Clone)]
pub struct ClosedFormReport {
    pub p: u64,
    pub r: u64,
    pub computed: Poly,
    pub closed_form: Poly,
    pub pass: bool,
}

pub fn fib_closed_form_report(p: u64, t: u32) -> Result<ClosedFormReport> {
    if t == 0 {
        return Err(Error::InvalidInput("need t >= 1".into()));
    }
    let field = Field::new(p, 1)?;
    let r = p
        .checked_pow(t)
        .ok_or_else(|| Error::InvalidInput("p^t overflows".into()))?;
    let computed = fib_poly(&field, (r - 1) as usize);
    let closed_form = if p == 2 {
        Poly::monomial(&field, 1, (r - 1) as usize)
    } else {
        let base = Poly::from_indices(&field, &[(4 % p) as u32, 0, 1])?;
        base.pow((r - 1) / 2)
    };
    let pass = computed == closed_form;
    Ok(ClosedFormReport { p, r, computed, closed_form, pass })
}

// ---------------------------------------------------------------------------
// The ring F_p[T][omega] / (omega^2 - T omega - 1)
// ---------------------------------------------------------------------------

/// Element u + v*omega where omega = [T, T, ...] satisfies
/// omega^2 = T omega + 1; omega is invertible with omega^{-1} = omega - T.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaRingElem {
    u: Poly,
    v: Poly,
}

impl OmegaRingElem {
    pub fn new(u: Poly, v: Poly) -> OmegaRingElem {
        OmegaRingElem { u, v }
    }

    pub fn omega(field: &Field) -> OmegaRingElem {
        OmegaRingElem { u: Poly::zero(field), v: Poly::one(field) }
    }

    /// omega^{-1} = omega - T
    pub fn omega_inv(field: &Field) -> OmegaRingElem {
        OmegaRingElem { u: Poly::t(field).neg(), v: Poly::one(field) }
    }

    pub fn from_poly(p: &Poly) -> OmegaRingElem {
        OmegaRingElem { u: p.clone(), v: Poly::zero(p.field()) }
    }

    pub fn parts(&self) -> (&Poly, &Poly) {
        (&self.u, &self.v)
    }

    pub fn add(&self, other: &OmegaRingElem) -> OmegaRingElem {
        OmegaRingElem { u: self.u.add(&other.u), v: self.v.add(&other.v) }
    }

    pub fn sub(&self, other: &OmegaRingElem) -> OmegaRingElem {
        OmegaRingElem { u: self.u.sub(&other.u), v: self.v.sub(&other.v) }
    }

    pub fn mul(&self, other: &OmegaRingElem) -> OmegaRingElem {
        // (u1 + v1 w)(u2 + v2 w) with w^2 = Tw + 1
        let t = Poly::t(self.u.field());
        let uu = self.u.mul(&other.u);
        let vv = self.v.mul(&other.v);
        let cross = self.u.mul(&other.v).add(&self.v.mul(&other.u));
        OmegaRingElem { u: uu.add(&vv), v: cross.add(&vv.mul(&t)) }
    }

    pub fn mul_poly(&self, p: &Poly) -> OmegaRingElem {
        OmegaRingElem { u: self.u.mul(p), v: self.v.mul(p) }
    }

    pub fn neg(&self) -> OmegaRingElem {
        OmegaRingElem { u: self.u.neg(), v: self.v.neg() }
    }
}

/// In-ring verification of F_{n-1} (omega + omega^{-1}) =
/// omega^n - (-omega^{-1})^n for 1 <= n <= n_max.
#[derive(Debug, Clone)]
pub struct OmegaIdentityReport {
    pub p: u64,
    pub n_max: usize,
    pub first_failure: Option<usize>,
}

impl OmegaIdentityReport {
    pub fn pass(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn omega_identity_report(p: u64, n_max: usize) -> Result<OmegaIdentityReport> {
    let field = Field::new(p, 1)?;
    let omega = OmegaRingElem::omega(&field);
    let neg_omega_inv = OmegaRingElem::omega_inv(&field).neg();
    let trace = omega.add(&OmegaRingElem::omega_inv(&field)); // omega + omega^{-1}
    let mut pow_omega = omega.clone();
    let mut pow_neg = neg_omega_inv.clone();
    let mut first_failure = None;
    for n in 1..=n_max {
        let big_omega = pow_omega.sub(&pow_neg);
        let lhs = trace.mul_poly(&fib_poly(&field, n - 1));
        if lhs != big_omega {
            first_failure = Some(n);
            break;
        }
        pow_omega = pow_omega.mul(&omega);
        pow_neg = pow_neg.mul(&neg_omega_inv);
    }
    Ok(OmegaIdentityReport { p, n_max, first_failure })
}

// ---------------------------------------------------------------------------
// Defining equations
// ---------------------------------------------------------------------------

/// Coefficients of A X^{r+1} + B X^r + C X + D = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperquadEquation {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub d: Poly,
    pub r: u64,
}

/// Residual of an equation at a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Residual {
    /// The input satisfies the equation exactly.
    ExactlyZero,
    /// No nonzero coefficient in the certified window: the residual
    /// valuation, if any, is below `below`.
    ZeroToPrecision { below: i64 },
    /// Visible nonzero residual with this exact valuation.
    Nonzero { valuation: i64 },
}

impl Residual {
    /// Certified upper bound on the residual valuation.
    pub fn valuation_bound(&self) -> i64 {
        match *self {
            Residual::ExactlyZero => i64::MIN,
            Residual::ZeroToPrecision { below } => below - 1,
            Residual::Nonzero { valuation } => valuation,
        }
    }

    pub fn is_zero_to_precision(&self) -> bool {
        !matches!(self, Residual::Nonzero { .. })
    }
}

impl HyperquadEquation {
    /// Evaluate A alpha^{r+1} + B alpha^r + C alpha + D at the maximal
    /// provable precision and report the residual valuation.
    pub fn residual(&self, alpha: &LaurentSeries) -> Result<Residual> {
        if alpha.is_zero_at_precision() {
            return Err(Error::ZeroToPrecision);
        }
        let ar = alpha.frobenius_pow(self.r)?;
        let ar1 = ar.mul(alpha);
        let sum = ar1
            .mul_poly(&self.a)
            .add(&ar.mul_poly(&self.b))
            .add(&alpha.mul_poly(&self.c))
            .add_poly(&self.d);
        match (sum.valuation(), sum.known_below()) {
            (Some(v), _) => Ok(Residual::Nonzero { valuation: v }),
            (None, Some(b)) => Ok(Residual::ZeroToPrecision { below: b }),
            (None, None) => Ok(Residual::ExactlyZero),
        }
    }
}

impl fmt::Display for HyperquadEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})*X^{} + ({})*X^{} + ({})*X + ({}) = 0",
            self.a,
            self.r + 1,
            self.b,
            self.r,
            self.c,
            self.d
        )
    }
}

/// The equation whose unique root in F(q)^+ is [a_1, ..., a_ell, tail]
/// with alpha^r = P * tail + Q:
///
///   y_ell X^{r+1} - x_ell X^r + (y_{ell-1} P - y_ell Q) X
///     + x_ell Q - x_{ell-1} P = 0
///
/// Signs are kept general; characteristic 2 collapses them.
pub fn hyperquadratic_equation(
    head: &[Poly],
    r: u64,
    big_p: &Poly,
    big_q: &Poly,
) -> Result<HyperquadEquation> {
    if head.is_empty() {
        return Err(Error::InvalidInput("need at least one head quotient".into()));
    }
    let field = head[0].field().clone();
    if !field.is_char_power(r) || r < 2 {
        return Err(Error::NotCharPower { r, p: field.characteristic() });
    }
    for a in head {
        if !matches!(a.degree(), Some(d) if d >= 1) {
            return Err(Error::InvalidInput(
                "head quotients must have degree > 0".into(),
            ));
        }
    }
    let dp = big_p.degree();
    let dq = big_q.degree();
    if dp.is_none() || dq >= dp || dp.unwrap() as u64 >= r {
        return Err(Error::InvalidInput(format!(
            "need deg(Q) < deg(P) < r; got deg(P) = {:?}, deg(Q) = {:?}, r = {}",
            dp, dq, r
        )));
    }
    let ell = head.len();
    let table = ContinuantTable::new(&field, head);
    let (xl, xl1) = (table.x(ell), table.x(ell - 1));
    let (yl, yl1) = (table.y(ell), table.y(ell - 1));
    Ok(HyperquadEquation {
        a: yl.clone(),
        b: xl.neg(),
        c: yl1.mul(big_p).sub(&yl.mul(big_q)),
        d: xl.mul(big_q).sub(&xl1.mul(big_p)),
        r,
    })
}

// ---------------------------------------------------------------------------
// Family parameters
// ---------------------------------------------------------------------------

/// Parameters (q = 2^s, r = 2^t, ell, Lambda_{ell+2}) of one instance:
/// head coefficients lambda_1..lambda_ell and the pair (eps1, eps2), all
/// units of F_q. The derived pair (P, Q) = (eps1 F_{r-1}, eps2 F_{r-2})
/// automatically satisfies deg(Q) < deg(P) < r.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperquadSpec {
    field: Field,
    t: u32,
    r: u64,
    lambdas: Vec<u32>,
    eps1: u32,
    eps2: u32,
}

impl HyperquadSpec {
    pub fn new(
        field: &Field,
        t: u32,
        lambdas: &[u32],
        eps1: u32,
        eps2: u32,
    ) -> Result<HyperquadSpec> {
        if field.characteristic() != 2 {
            return Err(Error::InvalidInput(
                "the family is defined in characteristic 2".into(),
            ));
        }
        if t == 0 {
            return Err(Error::InvalidInput("need t >= 1".into()));
        }
        if lambdas.is_empty() {
            return Err(Error::InvalidInput("need ell >= 1".into()));
        }
        let q = field.order();
        for &u in lambdas.iter().chain([&eps1, &eps2]) {
            if u == 0 {
                return Err(Error::InvalidInput(
                    "lambda and eps values must be units (nonzero)".into(),
                ));
            }
            if u as u64 >= q {
                return Err(Error::ElementOutOfRange(u as u64, q));
            }
        }
        let r = 2u64
            .checked_pow(t)
            .ok_or_else(|| Error::InvalidInput("2^t overflows".into()))?;
        Ok(HyperquadSpec {
            field: field.clone(),
            t,
            r,
            lambdas: lambdas.to_vec(),
            eps1,
            eps2,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn ell(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambda_indices(&self) -> &[u32] {
        &self.lambdas
    }

    pub fn eps_indices(&self) -> (u32, u32) {
        (self.eps1, self.eps2)
    }

    pub fn eps_elems(&self) -> (FieldElem, FieldElem) {
        (
            self.field.elem(self.eps1 as u64).unwrap(),
            self.field.elem(self.eps2 as u64).unwrap(),
        )
    }

    /// The prescribed quotients lambda_1 T, ..., lambda_ell T.
    pub fn head_quotients(&self) -> Vec<Poly> {
        self.lambdas
            .iter()
            .map(|&l| Poly::monomial(&self.field, l, 1))
            .collect()
    }

    /// P = eps1 F_{r-1}
    pub fn p_poly(&self) -> Poly {
        fib_poly(&self.field, (self.r - 1) as usize).scale(self.eps1)
    }

    /// Q = eps2 F_{r-2}
    pub fn q_poly(&self) -> Poly {
        fib_poly(&self.field, (self.r - 2) as usize).scale(self.eps2)
    }

    /// The defining equation of this instance.
    pub fn equation(&self) -> HyperquadEquation {
        hyperquadratic_equation(
            &self.head_quotients(),
            self.r,
            &self.p_poly(),
            &self.q_poly(),
        )
        .expect("spec invariants guarantee the equation preconditions")
    }
}

// ---------------------------------------------------------------------------
// The quotient-block step and the recursive lambda stream
// ---------------------------------------------------------------------------

/// The pair map (x, y) -> (x y^{-2}, y^{-1}) applied between consecutive
/// quotient blocks; it is an involution on (F_q^*)^2.
pub fn eps_involution(field: &Field, eps1: u32, eps2: u32) -> Result<(u32, u32)> {
    if eps1 == 0 || eps2 == 0 {
        return Err(Error::DivisionByZero);
    }
    let e2_inv = field.inv_raw(eps2)?;
    let e2_inv_sq = field.mul_raw(e2_inv, e2_inv);
    Ok((field.mul_raw(eps1, e2_inv_sq), e2_inv))
}

/// State of the block recursion: the current (eps1, eps2) pair, the index
/// i of the head quotient being consumed and the index j where the next
/// emitted quotient lands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockState {
    pub eps1: u32,
    pub eps2: u32,
    pub i: usize,
    pub j: usize,
}

/// One application of the block step: from alpha_i^r =
/// eps1 F_{r-1} alpha_j + eps2 F_{r-2} and a_i = lambda_i T, the r
/// quotients starting at position j are
///
///   a_j = eps1^{-1} lambda_i^r T,
///   a_{j+k} = (eps2/eps1)^{(-1)^k} T   for 1 <= k <= r-1,
///
/// and the relation advances to (i+1, j+r) with the pair replaced by
/// (eps1 eps2^{-2}, eps2^{-1}).
pub fn advance_block(
    field: &Field,
    state: &BlockState,
    lambda_i: u32,
    r: u64,
) -> Result<(Vec<Poly>, BlockState)> {
    if !field.is_char_power(r) || r < 2 {
        return Err(Error::NotCharPower { r, p: field.characteristic() });
    }
    if lambda_i == 0 || state.eps1 == 0 || state.eps2 == 0 {
        return Err(Error::InvalidInput("block state requires units".into()));
    }
    let lam_r = field.pow_raw(lambda_i, r);
    let first = field.mul_raw(field.inv_raw(state.eps1)?, lam_r);
    let ratio = field.div_raw(state.eps2, state.eps1)?; // eps2/eps1
    let ratio_inv = field.inv_raw(ratio)?;
    let mut quotients = Vec::with_capacity(r as usize);
    quotients.push(Poly::monomial(field, first, 1));
    for k in 1..r {
        let c = if k % 2 == 1 { ratio_inv } else { ratio };
        quotients.push(Poly::monomial(field, c, 1));
    }
    let (e1, e2) = eps_involution(field, state.eps1, state.eps2)?;
    let next = BlockState { eps1: e1, eps2: e2, i: state.i + 1, j: state.j + r as usize };
    Ok((quotients, next))
}

/// Position of n > ell inside the block layout: n = ell + r*m + i with
/// m >= 0 and 1 <= i <= r. Returns None for n <= ell.
pub fn block_index(n: usize, ell: usize, r: u64) -> Option<(usize, usize)> {
    if n <= ell {
        return None;
    }
    let off = n - ell - 1;
    Some((off / r as usize, off % r as usize + 1))
}

/// Pull-based generator of the sequence (lambda_n): the first ell values
/// come from the spec, and for n = ell + r*m + i,
///
///   lambda_n = (eps2/eps1) eps2^{(-1)^{m+1}} lambda_{m+1}^r   (i = 1)
///   lambda_n = (eps1/eps2)^{(-1)^i}                           (2 <= i <= r)
///
/// The self-reference lambda_{m+1} always lands on an index already
/// produced, so any finite prefix is computable in one forward pass.
#[derive(Debug, Clone)]
pub struct LambdaStream {
    spec: HyperquadSpec,
    memo: Vec<u32>,
}

impl LambdaStream {
    pub fn new(spec: &HyperquadSpec) -> LambdaStream {
        LambdaStream { spec: spec.clone(), memo: spec.lambdas.clone() }
    }

    /// lambda_n, 1-indexed.
    pub fn get(&mut self, n: usize) -> u32 {
        assert!(n >= 1, "lambda indices are 1-based");
        let f = &self.spec.field;
        let r = self.spec.r;
        let ell = self.spec.ell();
        let (e1, e2) = (self.spec.eps1, self.spec.eps2);
        let ratio = f.div_raw(e2, e1).unwrap(); // eps2/eps1
        let ratio_inv = f.inv_raw(ratio).unwrap();
        let e2_inv = f.inv_raw(e2).unwrap();
        while self.memo.len() < n {
            let k = self.memo.len() + 1; // index being produced
            let (m, i) = block_index(k, ell, r).expect("k > ell here");
            let val = if i == 1 {
                let lam = self.memo[m]; // lambda_{m+1}, already produced
                let eps_pow = if m % 2 == 0 { e2_inv } else { e2 };
                f.mul_raw(f.mul_raw(ratio, eps_pow), f.pow_raw(lam, r))
            } else if i % 2 == 0 {
                ratio_inv // (eps1/eps2)^{+1}
            } else {
                ratio
            };
            self.memo.push(val);
        }
        self.memo[n - 1]
    }

    /// The first n values as element indices.
    pub fn prefix(&mut self, n: usize) -> Vec<u32> {
        self.get(n.max(1));
        self.memo[..n].to_vec()
    }

    /// The first n partial quotients lambda_k T.
    pub fn quotient_prefix(&mut self, n: usize) -> Vec<Poly> {
        let f = self.spec.field.clone();
        self.prefix(n)
            .into_iter()
            .map(|l| Poly::monomial(&f, l, 1))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Independent root oracle
// ---------------------------------------------------------------------------

/// The unique root in F(q)^+ of the instance equation, computed without
/// the recursive lambda formulas: iterate
///
///   Phi(beta) = [lambda_1 T, ..., lambda_ell T,
///                (beta^r - eps2 F_{r-2}) (eps1 F_{r-1})^{-1}]
///
/// from beta_0 = x_ell / y_ell. Phi is an ultrametric contraction:
/// beta -> beta^r multiplies agreement valuations by r while the affine
/// tail and the head evaluation only shift them by bounded amounts, so
/// successive iterates agree to geometrically improving depth. Iteration
/// stops once two consecutive iterates agree on every tracked
/// coefficient; the result is certified down to exponent -(prec + 8).
pub fn root_series(spec: &HyperquadSpec, prec: usize) -> Result<LaurentSeries> {
    if prec == 0 {
        return Err(Error::InvalidInput("prec must be >= 1".into()));
    }
    let field = spec.field.clone();
    let cap = -(prec as i64 + 8);
    let head = spec.head_quotients();
    let ell = spec.ell();
    let r = spec.r;
    let q_series = LaurentSeries::from_poly(&spec.q_poly());
    let p_inv = LaurentSeries::from_rational_floor(
        &Poly::one(&field),
        &spec.p_poly(),
        cap - r as i64 - 1,
    )?;
    let table = ContinuantTable::new(&field, &head);
    let mut beta = LaurentSeries::from_rational_floor(table.x(ell), table.y(ell), cap)?;
    let mut prev_gap: Option<i64> = None;
    for _ in 0..64 {
        let tail = beta
            .frobenius_pow(r)?
            .sub(&q_series)
            .mul(&p_inv)
            .truncate_to(cap);
        if tail.valuation() != Some(1) {
            return Err(Error::ContractionStall);
        }
        let next = contfrac::eval_with_tail(&head, &tail, cap)?;
        let diff = next.sub(&beta);
        match diff.valuation() {
            None => return Ok(next),
            Some(v) => {
                if let Some(pv) = prev_gap {
                    if v >= pv {
                        return Err(Error::ContractionStall);
                    }
                }
                prev_gap = Some(v);
            }
        }
        beta = next;
    }
    Err(Error::ContractionStall)
}

// ---------------------------------------------------------------------------
// Exact residuals at convergents
// ---------------------------------------------------------------------------

/// Valuations of the equation residual at the convergents x_n / y_n of
/// the generated expansion, for n over `range`, computed with exact
/// polynomial arithmetic:
///
///   E(x/y) = (A x^{r+1} + B x^r y + C x y^r + D y^{r+1}) / y^{r+1}
///
/// so the valuation is deg(numerator) - (r+1) deg(y_n). The Frobenius
/// powers x_n^r, y_n^r follow the same three-term recurrence with
/// quotients a_n^r, which keeps the scan linear in n.
pub fn convergent_residual_valuations(
    spec: &HyperquadSpec,
    range: RangeInclusive<usize>,
) -> Vec<(usize, i64)> {
    let field = spec.field.clone();
    let eq = spec.equation();
    let r = spec.r;
    let mut stream = LambdaStream::new(spec);
    let mut out = Vec::new();
    let (mut x_prev, mut x_cur) = (Poly::zero(&field), Poly::one(&field));
    let (mut y_prev, mut y_cur) = (Poly::one(&field), Poly::zero(&field));
    let (mut xr_prev, mut xr_cur) = (Poly::zero(&field), Poly::one(&field));
    let (mut yr_prev, mut yr_cur) = (Poly::one(&field), Poly::zero(&field));
    let hi = *range.end();
    for n in 1..=hi {
        let a = Poly::monomial(&field, stream.get(n), 1);
        let ar = a.frobenius_pow(r).expect("r is a power of 2");
        let x_next = a.mul(&x_cur).add(&x_prev);
        let y_next = a.mul(&y_cur).add(&y_prev);
        let xr_next = ar.mul(&xr_cur).add(&xr_prev);
        let yr_next = ar.mul(&yr_cur).add(&yr_prev);
        x_prev = std::mem::replace(&mut x_cur, x_next);
        y_prev = std::mem::replace(&mut y_cur, y_next);
        xr_prev = std::mem::replace(&mut xr_cur, xr_next);
        yr_prev = std::mem::replace(&mut yr_cur, yr_next);
        if range.contains(&n) {
            let num = eq
                .a
                .mul(&xr_cur.mul(&x_cur))
                .add(&eq.b.mul(&xr_cur.mul(&y_cur)))
                .add(&eq.c.mul(&x_cur.mul(&yr_cur)))
                .add(&eq.d.mul(&yr_cur.mul(&y_cur)));
            let num_deg = num
                .degree()
                .expect("convergent of an irrational root cannot satisfy the equation")
                as i64;
            let y_deg = y_cur.degree().expect("y_n nonzero for n >= 1") as i64;
            out.push((n, num_deg - (r as i64 + 1) * y_deg));
        }
    }
    out
}
