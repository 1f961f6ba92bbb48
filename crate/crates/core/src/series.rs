//! Exact rational generating functions with cyclotomic denominators.
//!
//! Every denominator that arises here is a product of factors `1 - z^a`,
//! which split over the integers into cyclotomic polynomials. Denominators
//! are therefore stored as exponents of cyclotomic factors; since those are
//! irreducible over the rationals, cancelling them one at a time against the
//! numerator yields the fully reduced fraction.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{eulerian_polynomial, set_partitions, CycleType};
use crate::error::{Error, Result};
use crate::fixed_polytope::{is_lambda_compatible, v_pi};
use crate::poly::IntegerPolynomial;

/// Default number of Maclaurin coefficients inspected by consumers.
pub const DEFAULT_COEFFICIENT_WINDOW: usize = 50;

/// The `d`-th cyclotomic polynomial, except that index 1 denotes `1 - z`
/// rather than `z - 1`. With that convention `1 - z^a` is exactly the product
/// of the factors indexed by the divisors of `a`, and every factor has
/// constant term 1.
pub fn cyclotomic(d: u32) -> IntegerPolynomial {
    assert!(d >= 1, "cyclotomic index must be positive");
    if d == 1 {
        return IntegerPolynomial::one_minus_power(1);
    }
    // z^d - 1 = prod_{e | d} Phi_e, with Phi_1 = z - 1 = -(1 - z).
    let mut quotient = -IntegerPolynomial::one_minus_power(d as usize);
    for e in divisors(d).into_iter().filter(|&e| e < d) {
        let factor = if e == 1 { -cyclotomic(1) } else { cyclotomic(e) };
        quotient = quotient
            .checked_div(&factor)
            .expect("cyclotomic factors divide z^d - 1");
    }
    quotient
}

fn divisors(a: u32) -> Vec<u32> {
    (1..=a).filter(|d| a.is_multiple_of(*d)).collect()
}

/// `numerator / prod_d Phi_d^(e_d)` with cyclotomic factors `Phi_d` as in
/// [`cyclotomic`].
#[derive(Clone, Debug)]
pub struct RationalFunction {
    numerator: IntegerPolynomial,
    denominator: BTreeMap<u32, u32>,
}

/// Polynomial part plus `sum_j c_j / (1+z)^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionTail {
    pub polynomial_part: IntegerPolynomial,
    /// `c_1, ..., c_r`.
    pub tail_numerators: Vec<BigInt>,
}

impl RationalFunction {
    /// `numerator / prod (1 - z^a)^e` over the given `(a, e)` pairs, unreduced.
    pub fn new(numerator: IntegerPolynomial, one_minus_factors: &[(u32, u32)]) -> Result<Self> {
        let mut rf = RationalFunction::from_polynomial(numerator);
        for &(a, e) in one_minus_factors {
            if a == 0 {
                return Err(Error::InvalidInput("factor 1 - z^0 vanishes identically".into()));
            }
            for d in divisors(a) {
                *rf.denominator.entry(d).or_insert(0) += e;
            }
        }
        rf.denominator.retain(|_, e| *e > 0);
        Ok(rf)
    }

    pub fn from_polynomial(numerator: IntegerPolynomial) -> Self {
        RationalFunction {
            numerator,
            denominator: BTreeMap::new(),
        }
    }

    /// Divides by `Phi_d^e`, e.g. `d = 2` for powers of `1 + z`.
    pub fn divide_by_cyclotomic(mut self, d: u32, e: u32) -> Self {
        if e > 0 {
            *self.denominator.entry(d).or_insert(0) += e;
        }
        self
    }

    pub fn numerator(&self) -> &IntegerPolynomial {
        &self.numerator
    }

    /// Denominator as `(cyclotomic index, exponent)` pairs.
    pub fn denominator_factors(&self) -> Vec<(u32, u32)> {
        self.denominator.iter().map(|(&d, &e)| (d, e)).collect()
    }

    pub fn expanded_denominator(&self) -> IntegerPolynomial {
        self.denominator
            .iter()
            .fold(IntegerPolynomial::one(), |acc, (&d, &e)| {
                &acc * &cyclotomic(d).pow(e)
            })
    }

    /// Cancels every cyclotomic factor shared by numerator and denominator.
    pub fn reduce(&self) -> Self {
        if self.numerator.is_zero() {
            return RationalFunction::from_polynomial(IntegerPolynomial::zero());
        }
        let mut numerator = self.numerator.clone();
        let mut denominator = BTreeMap::new();
        for (&d, &e) in &self.denominator {
            let factor = cyclotomic(d);
            let mut remaining = e;
            while remaining > 0 {
                match numerator.checked_div(&factor) {
                    Some(q) => {
                        numerator = q;
                        remaining -= 1;
                    }
                    None => break,
                }
            }
            if remaining > 0 {
                denominator.insert(d, remaining);
            }
        }
        RationalFunction {
            numerator,
            denominator,
        }
    }

    /// True when the reduced denominator is trivial.
    pub fn is_polynomial(&self) -> bool {
        self.reduce().denominator.is_empty()
    }

    /// The polynomial itself, if this is one.
    pub fn as_polynomial(&self) -> Option<IntegerPolynomial> {
        let r = self.reduce();
        r.denominator.is_empty().then_some(r.numerator)
    }

    /// Multiplies by `1 - z^a` and reduces.
    pub fn mul_one_minus_power(&self, a: u32) -> Self {
        let mut out = self.clone();
        for d in divisors(a) {
            match out.denominator.get_mut(&d) {
                Some(e) if *e > 0 => {
                    *e -= 1;
                    if *e == 0 {
                        out.denominator.remove(&d);
                    }
                }
                _ => out.numerator = &out.numerator * &cyclotomic(d),
            }
        }
        out.reduce()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut common = self.denominator.clone();
        for (&d, &e) in &other.denominator {
            let slot = common.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |rf: &Self| {
            common.iter().fold(rf.numerator.clone(), |acc, (&d, &e)| {
                let have = rf.denominator.get(&d).copied().unwrap_or(0);
                &acc * &cyclotomic(d).pow(e - have)
            })
        };
        RationalFunction {
            numerator: &lift(self) + &lift(other),
            denominator: common,
        }
        .reduce()
    }

    /// First `count` Maclaurin coefficients.
    pub fn series_coefficients(&self, count: usize) -> Vec<BigInt> {
        series_coefficients(self, count)
    }

    /// Exact value at a rational point, `None` at a pole.
    pub fn eval_rational(&self, x: &BigRational) -> Option<BigRational> {
        let r = self.reduce();
        let den = r.expanded_denominator().eval_rational(x);
        if den.is_zero() {
            return None;
        }
        Some(r.numerator.eval_rational(x) / den)
    }

    /// Writes the reduced function as a polynomial plus `sum c_j/(1+z)^j`.
    ///
    /// Errors when the reduced denominator has any factor other than `1 + z`.
    pub fn partial_fraction_tail(&self) -> Result<PartialFractionTail> {
        let r = self.reduce();
        if let Some((&d, _)) = r.denominator.iter().find(|(&d, _)| d != 2) {
            return Err(Error::Structural(format!(
                "denominator of {r} has the factor {} besides powers of 1+z",
                render_cyclotomic(d)
            )));
        }
        let order = r.denominator.get(&2).copied().unwrap_or(0) as usize;
        if order == 0 {
            return Ok(PartialFractionTail {
                polynomial_part: r.numerator,
                tail_numerators: Vec::new(),
            });
        }
        // Expand in w = 1 + z: N(w - 1) = sum b_k w^k.
        let b = r.numerator.taylor_shift(&BigInt::from(-1));
        let tail_numerators = (1..=order).map(|j| b.coeff(order - j)).collect();
        let high: Vec<BigInt> = (order..b.coeffs().len()).map(|k| b.coeff(k)).collect();
        let polynomial_part = IntegerPolynomial::new(high).taylor_shift(&BigInt::one());
        Ok(PartialFractionTail {
            polynomial_part,
            tail_numerators,
        })
    }
}

impl PartialEq for RationalFunction {
    /// Equality as functions (cross-multiplication).
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.expanded_denominator() == &other.numerator * &self.expanded_denominator()
    }
}

impl Eq for RationalFunction {}

fn render_cyclotomic(d: u32) -> String {
    format!("({})", cyclotomic(d).to_string_ascending("z"))
}

/// `(index, exponent)` pairs.
type Factors = Vec<(u32, u32)>;

/// Greedily regroups cyclotomic exponents into `(1 - z^a)^e` factors, largest
/// `a` first; leftovers stay as bare cyclotomic factors.
fn regroup(denominator: &BTreeMap<u32, u32>) -> (Factors, Factors) {
    let mut left = denominator.clone();
    let mut grouped = Vec::new();
    for &a in denominator.keys().rev() {
        let divs = divisors(a);
        let times = divs
            .iter()
            .map(|d| left.get(d).copied().unwrap_or(0))
            .min()
            .unwrap_or(0);
        if times > 0 {
            for d in &divs {
                *left.get_mut(d).unwrap() -= times;
            }
            grouped.push((a, times));
        }
    }
    grouped.sort_unstable();
    let leftover = left.into_iter().filter(|&(_, e)| e > 0).collect();
    (grouped, leftover)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.to_string_ascending("z");
        if self.denominator.is_empty() {
            return f.write_str(&num);
        }
        let (grouped, leftover) = regroup(&self.denominator);
        let mut factors = Vec::new();
        for (a, e) in grouped {
            let base = if a == 1 {
                "(1-z)".to_string()
            } else {
                format!("(1-z^{a})")
            };
            factors.push(if e == 1 { base } else { format!("{base}^{e}") });
        }
        for (d, e) in leftover {
            let base = render_cyclotomic(d);
            factors.push(if e == 1 { base } else { format!("{base}^{e}") });
        }
        let den = factors.concat();
        let single_factor = factors.len() == 1;
        let num = if self.numerator.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
            format!("({num})")
        } else {
            num
        };
        if single_factor {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "{num}/({den})")
        }
    }
}

/// First `count` Maclaurin coefficients of `rf`.
pub fn series_coefficients(rf: &RationalFunction, count: usize) -> Vec<BigInt> {
    let den = rf.expanded_denominator();
    debug_assert!(den.coeff(0).is_one(), "cyclotomic products have constant term 1");
    let mut out: Vec<BigInt> = Vec::with_capacity(count);
    for i in 0..count {
        let mut c = rf.numerator.coeff(i);
        for (j, d) in den.coeffs().iter().enumerate().skip(1).take(i) {
            c -= d * &out[i - j];
        }
        out.push(c);
    }
    out
}

/// `Ehr(z) = 1 + sum_{t>=1} L(t) z^t` for the fixed polytope, assembled from
/// Eulerian polynomials: compatible partitions contribute to every `t`,
/// incompatible ones only to even `t`.
pub fn ehrhart_series(lambda: &CycleType) -> RationalFunction {
    let m = lambda.m();
    // Weights grouped by (degree, compatible).
    let mut weights: BTreeMap<(usize, bool), BigInt> = BTreeMap::new();
    for pi in set_partitions(m).expect("cycle types have m >= 1") {
        let k = m - pi.len();
        let compatible = is_lambda_compatible(lambda, &pi).expect("partition is on [m]");
        *weights.entry((k, compatible)).or_default() += v_pi(lambda, &pi).expect("partition is on [m]");
    }

    // Common denominator (1-z)^(m+1) (1+z)^(m+1).
    let one_minus = cyclotomic(1);
    let one_plus = cyclotomic(2);
    let mut numerator = IntegerPolynomial::zero();
    for ((k, compatible), v) in weights {
        let rest = (m - k) as u32;
        let term = if compatible {
            &(&eulerian_polynomial(k as u32) * &one_minus.pow(rest)) * &one_plus.pow(m as u32 + 1)
        } else {
            let scaled = eulerian_polynomial(k as u32)
                .compose_power(2)
                .scale(&(BigInt::one() << k));
            &scaled * &(&one_minus * &one_plus).pow(rest)
        };
        numerator = &numerator + &term.scale(&v);
    }
    RationalFunction {
        numerator,
        denominator: BTreeMap::from([(1, m as u32 + 1), (2, m as u32 + 1)]),
    }
    .reduce()
}

/// The equivariant series at a permutation of cycle type `lambda`:
/// `prod_i (1 - z^(l_i)) * Ehr(z)`, reduced.
pub fn phi_series(lambda: &CycleType) -> RationalFunction {
    lambda
        .parts()
        .iter()
        .fold(ehrhart_series(lambda), |acc, &l| acc.mul_one_minus_power(l))
}

/// The parity criterion for polynomiality: the number of even parts is
/// `0`, `m - 1` or `m`.
pub fn polynomiality_predicate(lambda: &CycleType) -> bool {
    let evens = lambda.even_part_count();
    let m = lambda.m();
    evens == 0 || evens + 1 == m || evens == m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn ct(parts: &[u32]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cyclotomic_factors() {
        assert_eq!(cyclotomic(1), p(&[1, -1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        for a in 1..=12 {
            let product = divisors(a)
                .into_iter()
                .fold(IntegerPolynomial::one(), |acc, d| &acc * &cyclotomic(d));
            assert_eq!(product, IntegerPolynomial::one_minus_power(a as usize));
        }
    }

    #[test]
    fn geometric_series() {
        let rf = RationalFunction::new(IntegerPolynomial::one(), &[(1, 1)]).unwrap();
        assert_eq!(rf.series_coefficients(4), ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn reduction_cancels_common_factors() {
        // (1 - z^2) / (1 - z)^2 = (1 + z) / (1 - z)
        let rf = RationalFunction::new(p(&[1, 0, -1]), &[(1, 2)]).unwrap();
        let r = rf.reduce();
        assert_eq!(r.numerator(), &p(&[1, 1]));
        assert_eq!(r.denominator_factors(), vec![(1, 1)]);
        assert_eq!(rf, r);
        assert!(!rf.is_polynomial());
        assert!(RationalFunction::new(p(&[1, 0, 0, -1]), &[(3, 1)])
            .unwrap()
            .is_polynomial());
    }

    #[test]
    fn zero_factor_rejected() {
        assert!(RationalFunction::new(IntegerPolynomial::one(), &[(0, 1)]).is_err());
    }

    #[test]
    fn display_regroups_factors() {
        let rf = RationalFunction::new(p(&[1, 0, 1]), &[(1, 1), (2, 1)]).unwrap();
        assert_eq!(rf.to_string(), "(1+z^2)/((1-z)(1-z^2))");
        let rf = RationalFunction::new(p(&[1, 4, 1]), &[(1, 3)]).unwrap();
        assert_eq!(rf.to_string(), "(1+4z+z^2)/(1-z)^3");
        let rf = RationalFunction::from_polynomial(p(&[4])).divide_by_cyclotomic(2, 1);
        assert_eq!(rf.to_string(), "4/(1+z)");
    }

    #[test]
    fn partial_fractions_of_polynomial_are_trivial() {
        let rf = RationalFunction::from_polynomial(p(&[1, 2, 3]));
        let tail = rf.partial_fraction_tail().unwrap();
        assert_eq!(tail.polynomial_part, p(&[1, 2, 3]));
        assert!(tail.tail_numerators.is_empty());
    }

    #[test]
    fn partial_fractions_reject_other_poles() {
        let rf = RationalFunction::new(IntegerPolynomial::one(), &[(1, 1)]).unwrap();
        assert!(matches!(rf.partial_fraction_tail(), Err(Error::Structural(_))));
    }

    #[test]
    fn partial_fraction_reconstruction() {
        // 4 z^4 / (1 + z)
        let rf = RationalFunction::from_polynomial(p(&[0, 0, 0, 0, 4])).divide_by_cyclotomic(2, 1);
        let tail = rf.partial_fraction_tail().unwrap();
        assert_eq!(tail.tail_numerators, ints(&[4]));
        assert_eq!(tail.polynomial_part, p(&[-4, 4, -4, 4]));
    }

    #[test]
    fn small_series() {
        assert_eq!(
            ehrhart_series(&ct(&[1, 1, 1])),
            RationalFunction::new(p(&[1, 4, 1]), &[(1, 3)]).unwrap()
        );
        assert_eq!(phi_series(&ct(&[3])).as_polynomial(), Some(p(&[1, 1, 1])));
        assert_eq!(phi_series(&ct(&[2, 2])).as_polynomial(), Some(p(&[1, 2, 3, 2])));
        assert_eq!(
            ehrhart_series(&ct(&[2, 1, 1])).series_coefficients(4),
            ints(&[1, 6, 23, 42])
        );
    }

    #[test]
    fn parity_predicate() {
        assert!(!polynomiality_predicate(&ct(&[2, 1, 1])));
        assert!(polynomiality_predicate(&ct(&[2, 2])));
        assert!(polynomiality_predicate(&ct(&[3, 1])));
        assert!(polynomiality_predicate(&ct(&[4])));
    }
}
