//! The continued fraction algorithm in F(q) = F_q((1/T)).
//!
//! An irrational series expands as [a_1, a_2, ...] with polynomial
//! partial quotients, deg(a_i) > 0 for i > 1; a rational one expands
//! finitely. Continuants x_n = <a_1,...,a_n> and y_n = <a_2,...,a_n>
//! satisfy the three-term recurrence x_n = a_n x_{n-1} + x_{n-2} and
//! give the convergents x_n / y_n with
//! |alpha - x_n/y_n| = |y_n y_{n+1}|^{-1}.

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::poly::Poly;
use crate::series::LaurentSeries;

/// Why an expansion stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// Exact zero remainder: the input is rational and fully expanded.
    Rational,
    /// The quotient budget was reached.
    QuotientLimit,
    /// The next quotient is not certified by the input precision.
    PrecisionExhausted,
}

impl Termination {
    pub fn as_str(&self) -> &'static str {
        match self {
            Termination::Rational => "complete",
            Termination::QuotientLimit => "quotient_limit",
            Termination::PrecisionExhausted => "precision_exhausted",
        }
    }
}

/// A finite run of partial quotients with the reason the run ended.
/// Every quotient is certified correct for the input it was computed
/// from; the distinction between a rational stop and a precision stop is
/// part of the contract.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContFrac {
    pub quotients: Vec<Poly>,
    pub termination: Termination,
}

impl ContFrac {
    pub fn is_complete(&self) -> bool {
        self.termination == Termination::Rational
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }
}

/// Continuant tables x_0..x_n, y_0..y_n for a quotient list, with
/// x_0 = 1, y_0 = 0 (the empty continuant is 1) and the seeds
/// x_{-1} = 0, y_{-1} = 1.
#[derive(Debug, Clone)]
pub struct ContinuantTable {
    x: Vec<Poly>,
    y: Vec<Poly>,
}

impl ContinuantTable {
    pub fn new(field: &Field, quotients: &[Poly]) -> ContinuantTable {
        let mut x = Vec::with_capacity(quotients.len() + 1);
        let mut y = Vec::with_capacity(quotients.len() + 1);
        x.push(Poly::one(field));
        y.push(Poly::zero(field));
        let mut x_prev = Poly::zero(field);
        let mut y_prev = Poly::one(field);
        for a in quotients {
            let xn = a.mul(x.last().unwrap()).add(&x_prev);
            let yn = a.mul(y.last().unwrap()).add(&y_prev);
            x_prev = x.last().unwrap().clone();
            y_prev = y.last().unwrap().clone();
            x.push(xn);
            y.push(yn);
        }
        ContinuantTable { x, y }
    }

    /// Number of quotients the table covers.
    pub fn len(&self) -> usize {
        self.x.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// x_k = <a_1, ..., a_k>
    pub fn x(&self, k: usize) -> &Poly {
        &self.x[k]
    }

    /// y_k = <a_2, ..., a_k>
    pub fn y(&self, k: usize) -> &Poly {
        &self.y[k]
    }
}

/// Expand a series into its continued fraction.
///
/// Exact inputs run the Euclidean algorithm and terminate rationally;
/// bounded inputs emit quotients only while the precision certifies
/// them, then stop with [`Termination::PrecisionExhausted`]. With
/// `require_fq_plus`, a first quotient of degree < 1 (input outside
/// F(q)^+) is an error.
pub fn expand(
    alpha: &LaurentSeries,
    max_quotients: usize,
    require_fq_plus: bool,
) -> Result<ContFrac> {
    if alpha.is_exact() {
        expand_exact(alpha, max_quotients, require_fq_plus)
    } else {
        expand_bounded(alpha, max_quotients, require_fq_plus)
    }
}

fn check_first(a: &Poly, require_fq_plus: bool) -> Result<()> {
    if require_fq_plus && !matches!(a.degree(), Some(d) if d >= 1) {
        return Err(Error::InvalidInput(
            "input is outside F(q)^+: first quotient has degree < 1".into(),
        ));
    }
    Ok(())
}

fn expand_exact(
    alpha: &LaurentSeries,
    max_quotients: usize,
    require_fq_plus: bool,
) -> Result<ContFrac> {
    let field = alpha.field().clone();
    // An exact series is a Laurent polynomial; write it as num / T^m.
    let terms = alpha.terms();
    let low = terms.iter().map(|&(e, _)| e).min().unwrap_or(0).min(0);
    let mut num = Poly::zero(&field);
    for &(e, c) in &terms {
        num = num.add(&Poly::monomial(&field, c, (e - low) as usize));
    }
    let mut den = Poly::monomial(&field, 1, (-low) as usize);
    let mut quotients = Vec::new();
    loop {
        if quotients.len() == max_quotients {
            return Ok(ContFrac { quotients, termination: Termination::QuotientLimit });
        }
        let (q, r) = num.divmod(&den)?;
        if quotients.is_empty() {
            check_first(&q, require_fq_plus)?;
        }
        quotients.push(q);
        if r.is_zero() {
            return Ok(ContFrac { quotients, termination: Termination::Rational });
        }
        num = den;
        den = r;
    }
}

fn expand_bounded(
    alpha: &LaurentSeries,
    max_quotients: usize,
    require_fq_plus: bool,
) -> Result<ContFrac> {
    let mut cur = alpha.clone();
    let mut quotients = Vec::new();
    loop {
        if quotients.len() == max_quotients {
            return Ok(ContFrac { quotients, termination: Termination::QuotientLimit });
        }
        let (a, _) = match cur.polynomial_part() {
            Ok(pair) => pair,
            Err(Error::InsufficientPrecision(_)) => {
                return Ok(ContFrac {
                    quotients,
                    termination: Termination::PrecisionExhausted,
                });
            }
            Err(e) => return Err(e),
        };
        if quotients.is_empty() {
            check_first(&a, require_fq_plus)?;
        }
        let rem = cur.sub(&LaurentSeries::from_poly(&a));
        quotients.push(a);
        if rem.is_zero_at_precision() {
            // cannot distinguish an exact zero tail from a tiny one
            return Ok(ContFrac {
                quotients,
                termination: Termination::PrecisionExhausted,
            });
        }
        cur = rem.inv()?;
    }
}

/// Evaluate a finite quotient list back into a series: the expansion of
/// the convergent x_n / y_n with `prec` correct coefficients.
///
/// When the list is a truncation of a longer expansion with next
/// quotient a_{n+1}, the convergent agrees with the full value down to
/// the bound |alpha - x_n/y_n| = |y_n y_{n+1}|^{-1}, i.e. for about
/// 2 deg(y_n) + deg(a_{n+1}) coefficients below deg(a_1).
pub fn eval(quotients: &[Poly], prec: usize) -> Result<LaurentSeries> {
    if quotients.is_empty() {
        return Err(Error::InvalidInput("empty quotient list".into()));
    }
    for a in &quotients[1..] {
        if !matches!(a.degree(), Some(d) if d >= 1) {
            return Err(Error::InvalidInput(
                "partial quotients after the first must have degree > 0".into(),
            ));
        }
    }
    let field = quotients[0].field();
    let table = ContinuantTable::new(field, quotients);
    let n = quotients.len();
    LaurentSeries::from_rational(table.x(n), table.y(n), prec)
}

/// Evaluate [a_1, ..., a_n, z] for a series tail z via the convergent
/// pair: (x_n z + x_{n-1}) / (y_n z + y_{n-1}), computed down to
/// `floor` or to the provable precision, whichever is weaker.
pub fn eval_with_tail(
    quotients: &[Poly],
    tail: &LaurentSeries,
    floor: i64,
) -> Result<LaurentSeries> {
    if quotients.is_empty() {
        return Ok(tail.clone());
    }
    let field = quotients[0].field();
    let table = ContinuantTable::new(field, quotients);
    let n = quotients.len();
    let num = tail.mul_poly(table.x(n)).add_poly(table.x(n - 1));
    let den = tail.mul_poly(table.y(n)).add_poly(table.y(n - 1));
    let num_top = num.valuation().unwrap_or(0);
    let den_inv = den.inv_floor(floor - num_top)?;
    Ok(num.mul(&den_inv).truncate_to(floor))
}

/// Rewrite [[a_1,...,a_n], x] as [a_1,...,a_n, y]: returns the tail
///
///   y = (-1)^(n-1) <a_2,...,a_n>^(-2) x - <a_2,...,a_{n-1}> <a_2,...,a_n>^(-1)
///
/// computed down to `floor` (or to the precision of `x`). The empty
/// continuant <> arising at n = 2 is 1, matching x_0 = 1. In
/// characteristic 2 the sign collapses to +1.
pub fn tail_after_block(
    block: &[Poly],
    x: &LaurentSeries,
    floor: i64,
) -> Result<LaurentSeries> {
    if block.len() < 2 {
        return Err(Error::InvalidInput(
            "tail rewriting needs a block of at least 2 quotients".into(),
        ));
    }
    let field = block[0].field().clone();
    let n = block.len();
    let table = ContinuantTable::new(&field, block);
    let wn = table.y(n);
    let wn1 = table.y(n - 1);
    if wn.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let x_top = x.valuation().ok_or(Error::ZeroToPrecision)?;
    let wn_sq = wn.mul(wn);
    let inv_sq =
        LaurentSeries::from_rational_floor(&Poly::one(&field), &wn_sq, floor - x_top)?;
    let mut first = inv_sq.mul(x);
    if n % 2 == 0 {
        // (-1)^(n-1) = -1
        first = first.neg();
    }
    let second = LaurentSeries::from_rational_floor(wn1, wn, floor)?;
    Ok(first.sub(&second))
}

/// Smallest (preperiod, period) consistent with the prefix, requiring at
/// least 3 full period repetitions; None otherwise. The period is
/// minimized first, then the preperiod. A positive report is evidence of
/// quadraticity, not proof: only a prefix was examined.
pub fn detect_periodicity(quotients: &[Poly]) -> Option<(usize, usize)> {
    let n = quotients.len();
    if n < 4 {
        return None;
    }
    for period in 1..=n / 3 {
        // smallest preperiod for which the tail is `period`-periodic
        let mut pre = n - period;
        while pre > 0 && quotients[pre - 1] == quotients[pre - 1 + period] {
            pre -= 1;
        }
        if n - pre >= 3 * period {
            return Some((pre, period));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn f2() -> Field {
        Field::new(2, 1).unwrap()
    }

    fn poly(f: &Field, c: &[u32]) -> Poly {
        Poly::from_indices(f, c).unwrap()
    }

    #[test]
    fn rational_expansion_terminates() {
        // (T^2 + 1)/T = [T, T] over F_2
        let f = f2();
        let num = poly(&f, &[1, 0, 1]);
        let den = Poly::t(&f);
        let s = LaurentSeries::from_rational(&num, &den, 10).unwrap();
        assert!(s.is_exact());
        let cf = expand(&s, 16, true).unwrap();
        assert_eq!(cf.termination, Termination::Rational);
        assert_eq!(cf.quotients, vec![Poly::t(&f), Poly::t(&f)]);
    }

    #[test]
    fn exact_polynomial_is_single_quotient() {
        let f = f2();
        let s = LaurentSeries::from_poly(&Poly::t(&f));
        let cf = expand(&s, 16, true).unwrap();
        assert!(cf.is_complete());
        assert_eq!(cf.quotients, vec![Poly::t(&f)]);
    }

    #[test]
    fn golden_series_certified_quotients() {
        // omega = [T, T, T, ...]; a convergent truncated to 40 known
        // coefficients certifies exactly 20 quotients.
        let f = f2();
        let t = Poly::t(&f);
        let quots = vec![t.clone(); 22];
        let conv = eval(&quots, 60).unwrap();
        let alpha = conv.truncate_to(-38);
        let cf = expand(&alpha, 100, true).unwrap();
        assert_eq!(cf.termination, Termination::PrecisionExhausted);
        assert_eq!(cf.len(), 20);
        assert!(cf.quotients.iter().all(|a| *a == t));
    }

    #[test]
    fn first_quotient_degree_enforced() {
        let f = f2();
        // 1/T is not in F(q)^+
        let s = LaurentSeries::from_rational(&Poly::one(&f), &Poly::t(&f), 5).unwrap();
        assert!(expand(&s, 4, true).is_err());
        let cf = expand(&s, 4, false).unwrap();
        assert!(cf.quotients[0].is_zero());
        assert_eq!(cf.quotients[1], Poly::t(&f));
    }

    #[test]
    fn continuant_table_basics() {
        let f = f2();
        let t = Poly::t(&f);
        let table = ContinuantTable::new(&f, &[t.clone(), t.clone()]);
        assert_eq!(table.x(1), &t);
        assert_eq!(table.y(1), &Poly::one(&f));
        assert_eq!(table.x(2), &poly(&f, &[1, 0, 1]));
        assert_eq!(table.y(2), &t);
        // determinant x_2 y_1 - x_1 y_2 = (-1)^2 = 1
        let det = table.x(2).mul(table.y(1)).sub(&table.x(1).mul(table.y(2)));
        assert_eq!(det, Poly::one(&f));
    }

    #[test]
    fn determinant_identity_alternates() {
        // over F_7: x_n y_{n-1} - x_{n-1} y_n = (-1)^n
        let f = Field::new(7, 1).unwrap();
        let quots = vec![
            poly(&f, &[3, 2]),
            poly(&f, &[0, 1, 4]),
            poly(&f, &[5, 6]),
            poly(&f, &[1, 0, 2]),
            poly(&f, &[2, 3]),
        ];
        let table = ContinuantTable::new(&f, &quots);
        for n in 1..=quots.len() {
            let det = table.x(n).mul(table.y(n - 1)).sub(&table.x(n - 1).mul(table.y(n)));
            let expected = if n % 2 == 0 {
                Poly::one(&f)
            } else {
                Poly::one(&f).neg()
            };
            assert_eq!(det, expected, "n = {}", n);
        }
    }

    #[test]
    fn eval_single_quotient() {
        let f = f2();
        let s = eval(&[Poly::t(&f)], 5).unwrap();
        assert_eq!(s, LaurentSeries::from_poly(&Poly::t(&f)));
    }

    #[test]
    fn convergent_error_valuation() {
        // |omega - x_n/y_n| = |y_n y_{n+1}|^{-1} = |T|^{-(2n-1)}
        let f = f2();
        let t = Poly::t(&f);
        for n in 3..8usize {
            let a = eval(&vec![t.clone(); n], 40).unwrap();
            let b = eval(&vec![t.clone(); n + 6], 40).unwrap();
            let diff = a.sub(&b);
            assert_eq!(diff.valuation(), Some(-(2 * n as i64 - 1)), "n = {}", n);
        }
    }

    #[test]
    fn expand_eval_roundtrip() {
        let f = Field::new(2, 2).unwrap();
        let quots = vec![
            poly(&f, &[0, 2]),
            poly(&f, &[1, 3]),
            poly(&f, &[0, 1]),
            poly(&f, &[2, 2]),
            poly(&f, &[3, 1]),
        ];
        let s = eval(&quots, 60).unwrap();
        let cf = expand(&s, 10, true).unwrap();
        // a bounded series can never certify rationality, but the
        // quotients round-trip and the tail is zero at precision
        assert_eq!(cf.termination, Termination::PrecisionExhausted);
        assert_eq!(cf.quotients, quots);
    }

    #[test]
    fn tail_rewrite_identity_on_series() {
        // [[T,T], x] = [T,T,y] with y = <T>^{-2} x + <T>^{-1} in char 2
        let f = f2();
        let t = Poly::t(&f);
        let block = vec![t.clone(), t.clone()];
        // x = T + T^-2 + O(T^-21): arbitrary invertible tail
        let x = LaurentSeries::from_window(
            f.clone(),
            1,
            {
                let mut v = vec![0u32; 22];
                v[0] = 1;
                v[3] = 1;
                v
            },
            Some(-20),
        );
        let y = tail_after_block(&block, &x, -40).unwrap();
        // left side: [X, x] with X = x_2/y_2 = (T^2+1)/T
        let x2_over_y2 =
            LaurentSeries::from_rational(&poly(&f, &[1, 0, 1]), &t, 40).unwrap();
        let lhs = x2_over_y2.add(&x.inv().unwrap());
        let rhs = eval_with_tail(&block, &y, -30).unwrap();
        let floor = lhs
            .known_below()
            .unwrap()
            .max(rhs.known_below().unwrap());
        assert!(lhs.eq_through(&rhs, floor).unwrap());
        assert!(floor <= -10, "too little certified overlap: {}", floor);
    }

    #[test]
    fn tail_rewrite_degenerate_tail() {
        // n = 2 over F_2 with x = series of T: y = T^-2 * T + T^-1 = 0;
        // both sides still agree: [(T^2+1)/T, T] = T = [T, T, 0] formally.
        let f = f2();
        let t = Poly::t(&f);
        let block = vec![t.clone(), t.clone()];
        let x = LaurentSeries::from_poly(&t).truncate_to(-20);
        let y = tail_after_block(&block, &x, -20).unwrap();
        assert!(y.is_zero_at_precision());
    }

    #[test]
    fn continuant_scaling_alternating_units() {
        // <cT, c^-1 T, ..., cT> (odd length) = c <T,...,T>
        // <cT, c^-1 T, ..., c^-1 T> (even length) = <T,...,T>
        for q in [4u32, 8] {
            let f = if q == 4 {
                Field::new(2, 2).unwrap()
            } else {
                Field::new(2, 3).unwrap()
            };
            for c in f.units() {
                let c_idx = c.index();
                let c_inv = c.inv().unwrap().index();
                for len in 1..=10usize {
                    let alternating: Vec<Poly> = (0..len)
                        .map(|i| {
                            let u = if i % 2 == 0 { c_idx } else { c_inv };
                            Poly::monomial(&f, u, 1)
                        })
                        .collect();
                    let plain = vec![Poly::t(&f); len];
                    let lhs = ContinuantTable::new(&f, &alternating);
                    let rhs = ContinuantTable::new(&f, &plain);
                    let expected = if len % 2 == 1 {
                        rhs.x(len).scale(c_idx)
                    } else {
                        rhs.x(len).clone()
                    };
                    assert_eq!(lhs.x(len), &expected, "q={} c={} len={}", q, c_idx, len);
                }
            }
        }
    }

    #[test]
    fn periodicity_constant() {
        let f = f2();
        let t = Poly::t(&f);
        assert_eq!(detect_periodicity(&vec![t.clone(); 12]), Some((0, 1)));
        assert_eq!(detect_periodicity(&vec![t.clone(); 3]), None);
    }

    #[test]
    fn periodicity_with_preperiod() {
        let f = f2();
        let t = Poly::t(&f);
        let u = poly(&f, &[1, 1]);
        let mut seq = vec![u.clone(), t.clone()];
        seq.extend([u.clone(), t.clone(), u.clone(), t.clone(), u.clone(), t.clone()]);
        assert_eq!(detect_periodicity(&seq), Some((0, 2)));
        // break the head with a quotient outside the alternation
        let mut seq2 = vec![poly(&f, &[0, 0, 1])];
        seq2.extend(seq.clone());
        assert_eq!(detect_periodicity(&seq2), Some((1, 2)));
    }

    #[test]
    fn periodicity_aperiodic_none() {
        let f = f2();
        let t = Poly::t(&f);
        let u = poly(&f, &[1, 1]);
        let v = poly(&f, &[0, 0, 1]);
        let seq = vec![
            t.clone(), u.clone(), t.clone(), v.clone(), u.clone(), t.clone(),
            v.clone(), v.clone(), u.clone(), t.clone(), u.clone(), v.clone(),
        ];
        assert_eq!(detect_periodicity(&seq), None);
    }
}
