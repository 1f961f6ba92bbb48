//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! Coefficients are stored lowest degree first and always trimmed, so two
//! polynomials are equal exactly when their coefficient vectors are equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntegerPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^degree`.
    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `1 - z^a`.
    pub fn one_minus_power(a: usize) -> Self {
        Self::one() - Self::monomial(BigInt::one(), a)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Substitutes `z -> z^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Substitutes `z -> z + shift` (a Taylor shift).
    pub fn taylor_shift(&self, shift: &BigInt) -> Self {
        // Horner in the shifted variable.
        let linear = Self::new(vec![shift.clone(), BigInt::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &linear) + &Self::constant(c.clone())
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// Gcd of the coefficients, zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Long division over the integers. Returns `None` unless `divisor`
    /// divides `self` exactly with an integer quotient.
    pub fn checked_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_integral(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Integer long division; fails if some leading-coefficient division is
    /// inexact.
    fn div_rem_integral(&self, divisor: &Self) -> Option<(Self, Self)> {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let d_lead = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + d_deg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(d_lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let d_deg = divisor.degree().expect("division by the zero polynomial");
        let d_lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let top = rem.leading_coeff().unwrap().clone();
            let shifted = Self::monomial(top, r_deg - d_deg);
            rem = &rem.scale(&d_lead) - &(&shifted * divisor);
        }
        rem
    }

    /// Greatest common divisor over the rationals, returned as a primitive
    /// integer polynomial with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        if a.leading_coeff().is_some_and(Signed::is_negative) {
            a = -a;
        }
        a
    }

    /// Renders highest degree first, e.g. `4t^2+3t+1`.
    pub fn to_string_descending(&self, var: &str) -> String {
        self.render(var, self.coeffs.iter().enumerate().rev())
    }

    /// Renders lowest degree first, e.g. `1+4z+11z^2-2z^3`.
    pub fn to_string_ascending(&self, var: &str) -> String {
        self.render(var, self.coeffs.iter().enumerate())
    }

    fn render<'a>(&self, var: &str, terms: impl Iterator<Item = (usize, &'a BigInt)>) -> String {
        let mut out = String::new();
        for (i, c) in terms {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let abs = c.abs();
            if i == 0 || !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_ascending("z"))
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn add(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn sub(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntegerPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn mul(self, rhs: &IntegerPolynomial) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntegerPolynomial::new(coeffs)
    }
}

impl Neg for IntegerPolynomial {
    type Output = IntegerPolynomial;

    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for IntegerPolynomial {
            type Output = IntegerPolynomial;
            fn $method(self, rhs: IntegerPolynomial) -> IntegerPolynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[1, -1]);
        assert_eq!(&a * &b, p(&[1, 0, -1]));
        assert_eq!(&a + &b, p(&[2]));
        assert_eq!(&a - &a, IntegerPolynomial::zero());
        assert_eq!(a.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn exact_division() {
        let num = p(&[1, 0, -1]);
        assert_eq!(num.checked_div(&p(&[1, 1])), Some(p(&[1, -1])));
        assert_eq!(num.checked_div(&p(&[2, 1])), None);
        assert_eq!(p(&[1, 1]).checked_div(&p(&[0, 2])), None);
    }

    #[test]
    fn gcd_over_rationals() {
        let a = &p(&[1, 1]) * &p(&[2, 0, 3]);
        let b = &p(&[1, 1]).scale(&BigInt::from(6)) * &p(&[1, -1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[1, 2]).gcd(&p(&[3])), p(&[1]));
    }

    #[test]
    fn shift_and_compose() {
        // (w - 1)^2 = w^2 - 2w + 1
        assert_eq!(p(&[0, 0, 1]).taylor_shift(&BigInt::from(-1)), p(&[1, -2, 1]));
        assert_eq!(p(&[1, 2]).compose_power(2), p(&[1, 0, 2]));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[1, 3, 4]).to_string_descending("t"), "4t^2+3t+1");
        assert_eq!(p(&[1, 4, 11, -2]).to_string_ascending("z"), "1+4z+11z^2-2z^3");
        assert_eq!(p(&[0, -1]).to_string_ascending("z"), "-z");
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
    }
}
