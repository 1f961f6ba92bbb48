//! Characters of `S_n` and the equivariant series of the permutahedron.
//!
//! Irreducible characters come from the Murnaghan–Nakayama rule on beta-sets
//! (abacus positions): removing a border strip of length `k` moves one bead
//! from position `b` to the empty position `b - k`, with sign given by the
//! parity of the beads jumped over.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{class_size, factorial, partitions_of, CycleType};
use crate::error::{Error, Result};
use crate::fixed_polytope::{index, volume};
use crate::poly::IntegerPolynomial;
use crate::series::{phi_series, PartialFractionTail, RationalFunction};

/// Label of an irreducible character: a partition of `n`.
pub type IrrepLabel = CycleType;

/// An integer-valued function on the conjugacy classes of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: u32,
    values: BTreeMap<CycleType, BigInt>,
}

impl ClassFunction {
    /// Requires a value for exactly the partitions of `n`.
    pub fn new(n: u32, values: BTreeMap<CycleType, BigInt>) -> Result<Self> {
        let classes = partitions_of(n)?;
        if values.len() != classes.len() || classes.iter().any(|c| !values.contains_key(c)) {
            return Err(Error::InvalidInput(format!(
                "class function must be defined on exactly the {} classes of S_{n}",
                classes.len()
            )));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(&CycleType) -> BigInt) -> Result<Self> {
        let values = partitions_of(n)?
            .into_iter()
            .map(|c| {
                let v = f(&c);
                (c, v)
            })
            .collect();
        Ok(ClassFunction { n, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn value(&self, class: &CycleType) -> &BigInt {
        &self.values[class]
    }

    pub fn values(&self) -> &BTreeMap<CycleType, BigInt> {
        &self.values
    }
}

/// Multiplicities of the irreducible characters in a virtual character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterDecomposition {
    n: u32,
    multiplicities: BTreeMap<IrrepLabel, BigInt>,
}

impl CharacterDecomposition {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn multiplicity(&self, mu: &IrrepLabel) -> BigInt {
        self.multiplicities.get(mu).cloned().unwrap_or_default()
    }

    pub fn multiplicities(&self) -> &BTreeMap<IrrepLabel, BigInt> {
        &self.multiplicities
    }

    pub fn trivial_multiplicity(&self) -> BigInt {
        self.multiplicity(&CycleType::new(vec![self.n]).expect("n >= 1"))
    }

    pub fn is_effective(&self) -> bool {
        self.multiplicities.values().all(|m| !m.is_negative())
    }

    /// First irreducible, in display order, with a negative multiplicity.
    pub fn first_negative(&self) -> Option<(IrrepLabel, BigInt)> {
        display_order(self.n)
            .into_iter()
            .map(|mu| {
                let m = self.multiplicity(&mu);
                (mu, m)
            })
            .find(|(_, m)| m.is_negative())
    }

    /// `sum_mu mult(mu) chi^mu`.
    pub fn reconstruct(&self, table: &CharacterTable) -> ClassFunction {
        ClassFunction::from_fn(self.n, |class| {
            self.multiplicities
                .iter()
                .map(|(mu, mult)| mult * table.value(mu, class))
                .sum()
        })
        .expect("n >= 1")
    }
}

/// Irreducibles in the order triv, alt, std, then the rest lexicographically.
pub fn display_order(n: u32) -> Vec<IrrepLabel> {
    let mut labels = partitions_of(n).expect("n >= 1");
    labels.sort_by_key(|mu| (irrep_rank(mu), mu.clone()));
    labels.dedup();
    labels
}

fn irrep_rank(mu: &IrrepLabel) -> u8 {
    let n = mu.n();
    if mu.parts() == [n] {
        0
    } else if mu.m() == n as usize {
        1
    } else if mu.parts() == [n - 1, 1] {
        2
    } else {
        3
    }
}

/// `triv`, `alt`, `std`, or the partition itself.
pub fn irrep_name(mu: &IrrepLabel) -> String {
    match irrep_rank(mu) {
        0 => "triv".into(),
        1 => "alt".into(),
        2 => "std".into(),
        _ => mu.to_string(),
    }
}

impl fmt::Display for CharacterDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for mu in display_order(self.n) {
            let m = self.multiplicity(&mu);
            if m.is_zero() {
                continue;
            }
            let sign = if m.is_negative() { "-" } else { "+" };
            if first {
                if m.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = m.abs();
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "χ_{}", irrep_name(&mu))?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Murnaghan–Nakayama evaluator with a memo keyed by
/// (remaining shape, number of class parts already removed).
struct MnEvaluator<'a> {
    class_parts: &'a [u32],
    memo: HashMap<(Vec<u32>, usize), BigInt>,
}

impl MnEvaluator<'_> {
    fn value(&mut self, shape: &[u32], step: usize) -> BigInt {
        if step == self.class_parts.len() {
            return if shape.is_empty() {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let key = (shape.to_vec(), step);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let strip = self.class_parts[step] as usize;
        let r = shape.len();
        let beta: Vec<usize> = shape
            .iter()
            .enumerate()
            .map(|(i, &p)| p as usize + (r - 1 - i))
            .collect();
        let mut total = BigInt::zero();
        for (i, &b) in beta.iter().enumerate() {
            if b < strip || beta.contains(&(b - strip)) {
                continue;
            }
            let target = b - strip;
            let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut moved = beta.clone();
            moved[i] = target;
            moved.sort_unstable_by(|x, y| y.cmp(x));
            let len = moved.len();
            let next: Vec<u32> = moved
                .iter()
                .enumerate()
                .map(|(j, &x)| (x - (len - 1 - j)) as u32)
                .filter(|&p| p > 0)
                .collect();
            let v = self.value(&next, step + 1);
            if jumped % 2 == 0 {
                total += v;
            } else {
                total -= v;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `chi^mu` evaluated on the class of cycle type `lambda`.
pub fn irreducible_character(mu: &IrrepLabel, lambda: &CycleType) -> Result<BigInt> {
    if mu.n() != lambda.n() {
        return Err(Error::InvalidInput(format!(
            "{mu} and {lambda} are partitions of different integers"
        )));
    }
    let mut eval = MnEvaluator {
        class_parts: lambda.parts(),
        memo: HashMap::new(),
    };
    Ok(eval.value(mu.parts(), 0))
}

/// The full character table of `S_n`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: u32,
    classes: Vec<CycleType>,
    values: BTreeMap<(IrrepLabel, CycleType), BigInt>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Result<Self> {
        let classes = partitions_of(n)?;
        let mut values = BTreeMap::new();
        for class in &classes {
            // One memo per class serves every irreducible.
            let mut eval = MnEvaluator {
                class_parts: class.parts(),
                memo: HashMap::new(),
            };
            for mu in &classes {
                values.insert((mu.clone(), class.clone()), eval.value(mu.parts(), 0));
            }
        }
        Ok(CharacterTable { n, classes, values })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Classes (and irreducible labels) in reverse-lexicographic order.
    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn value(&self, mu: &IrrepLabel, class: &CycleType) -> &BigInt {
        &self.values[&(mu.clone(), class.clone())]
    }

    /// `mult(mu) = (1/n!) sum_lambda |C_lambda| chi^mu(lambda) f(lambda)`.
    pub fn decompose(&self, f: &ClassFunction) -> Result<CharacterDecomposition> {
        if f.n() != self.n {
            return Err(Error::InvalidInput(format!(
                "class function on S_{} decomposed with the table of S_{}",
                f.n(),
                self.n
            )));
        }
        let order = factorial(self.n);
        let sizes: Vec<BigInt> = self.classes.iter().map(class_size).collect();
        let mut multiplicities = BTreeMap::new();
        for mu in &self.classes {
            let inner: BigInt = self
                .classes
                .iter()
                .zip(&sizes)
                .map(|(c, size)| size * self.value(mu, c) * f.value(c))
                .sum();
            let (q, r) = inner.div_rem(&order);
            if !r.is_zero() {
                return Err(Error::Structural(format!(
                    "multiplicity of χ_{} is {inner}/{order}, not an integer; input is not a virtual character",
                    irrep_name(mu)
                )));
            }
            multiplicities.insert(mu.clone(), q);
        }
        Ok(CharacterDecomposition {
            n: self.n,
            multiplicities,
        })
    }
}

/// Decomposes a virtual character into irreducibles.
pub fn decompose(f: &ClassFunction) -> Result<CharacterDecomposition> {
    CharacterTable::new(f.n())?.decompose(f)
}

/// The equivariant series of `Pi_n` on every conjugacy class, with the
/// class functions `phi_i` up to where the eventual `1/(1+z)^j` tails take
/// over.
#[derive(Clone, Debug)]
pub struct PhiData {
    pub n: u32,
    pub classes: Vec<CycleType>,
    /// Reduced series per class.
    pub series: BTreeMap<CycleType, RationalFunction>,
    pub tails: BTreeMap<CycleType, PartialFractionTail>,
    /// First index past every class's polynomial part; from here on each
    /// coefficient comes only from the `1/(1+z)^j` terms.
    pub tail_start: usize,
    /// `phi_0, ..., phi_{tail_start - 1}`.
    pub polynomial_coefficients: Vec<ClassFunction>,
    pub is_polynomial: bool,
    pub is_effective: bool,
    table: CharacterTable,
}

impl PhiData {
    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    /// `phi_i` as a class function, for any `i`.
    pub fn coefficient(&self, i: usize) -> ClassFunction {
        if let Some(f) = self.polynomial_coefficients.get(i) {
            return f.clone();
        }
        ClassFunction::from_fn(self.n, |c| self.series[c].series_coefficients(i + 1)[i].clone())
            .expect("n >= 1")
    }

    pub fn decomposition(&self, i: usize) -> Result<CharacterDecomposition> {
        self.table.decompose(&self.coefficient(i))
    }

    /// First class (reverse-lexicographic order) whose series is not a
    /// polynomial.
    pub fn non_polynomial_witness(&self) -> Option<&CycleType> {
        self.classes
            .iter()
            .find(|c| !self.tails[*c].tail_numerators.is_empty())
    }

    /// First `(i, mu, multiplicity)` with a negative multiplicity among
    /// `phi_0, ..., phi_{tail_start}`.
    pub fn negative_multiplicity_witness(&self) -> Result<Option<(usize, IrrepLabel, BigInt)>> {
        for i in 0..=self.tail_start {
            if let Some((mu, m)) = self.decomposition(i)?.first_negative() {
                return Ok(Some((i, mu, m)));
            }
        }
        Ok(None)
    }

    /// Decomposition of `(-1)^s phi_s` at `s = tail_start`; for a simple pole
    /// at `-1` this is the character multiplying `z^s - z^(s+1) + ...`.
    pub fn tail_decomposition(&self) -> Result<Option<CharacterDecomposition>> {
        if self.is_polynomial {
            return Ok(None);
        }
        let s = self.tail_start;
        let sign = if s.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let f = self.coefficient(s);
        let signed = ClassFunction::from_fn(self.n, |c| f.value(c) * &sign)?;
        self.table.decompose(&signed).map(Some)
    }

    /// True when every class has at most a simple pole at `-1`, so the tail
    /// is exactly the alternating series `z^s - z^(s+1) + ...`.
    pub fn tail_is_alternating(&self) -> bool {
        self.tails.values().all(|t| t.tail_numerators.len() <= 1)
    }

    /// `phi[1]` as a class function, when every class is polynomial.
    pub fn phi_at_one(&self) -> Option<ClassFunction> {
        if !self.is_polynomial {
            return None;
        }
        ClassFunction::from_fn(self.n, |c| {
            self.series[c]
                .as_polynomial()
                .expect("polynomial")
                .eval(&BigInt::one())
        })
        .ok()
    }

    pub fn h_star(&self) -> IntegerPolynomial {
        let identity = CycleType::identity(self.n).expect("n >= 1");
        self.series[&identity]
            .as_polynomial()
            .expect("the identity class always has a polynomial series")
    }
}

/// Computes the equivariant series of `Pi_n` on all classes.
pub fn phi_data(n: u32) -> Result<PhiData> {
    let classes = partitions_of(n)?;
    let table = CharacterTable::new(n)?;
    let mut series = BTreeMap::new();
    let mut tails = BTreeMap::new();
    for c in &classes {
        let rf = phi_series(c);
        tails.insert(c.clone(), rf.partial_fraction_tail()?);
        series.insert(c.clone(), rf);
    }
    let tail_start = tails
        .values()
        .map(|t| t.polynomial_part.degree().map_or(0, |d| d + 1))
        .max()
        .unwrap_or(0);
    let is_polynomial = tails.values().all(|t| t.tail_numerators.is_empty());

    let expansions: BTreeMap<&CycleType, Vec<BigInt>> = series
        .iter()
        .map(|(c, rf)| (c, rf.series_coefficients(tail_start)))
        .collect();
    let polynomial_coefficients = (0..tail_start)
        .map(|i| ClassFunction::from_fn(n, |c| expansions[c][i].clone()))
        .collect::<Result<Vec<_>>>()?;

    // A non-polynomial series has an infinite tail and cannot be effective.
    let is_effective = is_polynomial
        && polynomial_coefficients
            .iter()
            .map(|f| table.decompose(f))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(CharacterDecomposition::is_effective);

    Ok(PhiData {
        n,
        classes,
        series,
        tails,
        tail_start,
        polynomial_coefficients,
        is_polynomial,
        is_effective,
        table,
    })
}

pub fn is_polynomial(n: u32) -> Result<bool> {
    Ok(phi_data(n)?.is_polynomial)
}

pub fn is_effective(n: u32) -> Result<bool> {
    Ok(phi_data(n)?.is_effective)
}

/// The `h*`-polynomial of `Pi_n`: the equivariant series at the identity.
pub fn h_star(n: u32) -> Result<IntegerPolynomial> {
    let rf = phi_series(&CycleType::identity(n)?);
    rf.as_polynomial().ok_or_else(|| {
        Error::Structural(format!(
            "series at the identity of S_{n} is not a polynomial: {rf}"
        ))
    })
}

/// `(m-1)! * n^(m-2) gcd(l) * l_1 ... l_m / ind`, the closed form for the
/// equivariant series at `z = 1`.
pub fn phi_at_one_formula(lambda: &CycleType) -> Result<BigInt> {
    let m = lambda.m() as u32;
    let numerator =
        factorial(m - 1) * volume(lambda) * lambda.parts().iter().fold(BigInt::one(), |acc, &l| acc * l);
    let ind = BigInt::from(index(lambda));
    let (q, r) = numerator.div_rem(&ind);
    if !r.is_zero() {
        return Err(Error::Structural(format!(
            "closed form at {lambda} is {numerator}/{ind}, not an integer"
        )));
    }
    Ok(q)
}

/// The reduced equivariant series of `lambda` evaluated at `z = 1`.
pub fn phi_at_one_from_series(lambda: &CycleType) -> Result<BigRational> {
    phi_series(lambda)
        .eval_rational(&BigRational::one())
        .ok_or_else(|| Error::Structural(format!("series at {lambda} has a pole at z = 1")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture {
    /// `phi[1]` is a permutation character when `phi` is effective.
    PermutationAtOne,
    /// The closed form for `phi[1](g)` is a non-negative integer.
    IntegralAtOne,
    /// Positive `h*_i` forces a trivial constituent in `phi_i`.
    TrivialConstituent,
}

impl Conjecture {
    pub fn label(self) -> &'static str {
        match self {
            Conjecture::PermutationAtOne => "12.2",
            Conjecture::IntegralAtOne => "12.3",
            Conjecture::TrivialConstituent => "12.4",
        }
    }

    pub fn from_label(s: &str) -> Result<Self> {
        match s.trim() {
            "12.2" => Ok(Conjecture::PermutationAtOne),
            "12.3" => Ok(Conjecture::IntegralAtOne),
            "12.4" => Ok(Conjecture::TrivialConstituent),
            other => Err(Error::InvalidInput(format!(
                "unknown conjecture {other:?}; expected 12.2, 12.3 or 12.4"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub description: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub conjecture: Conjecture,
    pub n: u32,
    pub checks: Vec<CheckLine>,
    /// Decomposition of `phi[1]` for 12.2.
    pub decomposition: Option<CharacterDecomposition>,
}

impl ConjectureReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, description: impl Into<String>, passed: bool) {
        self.checks.push(CheckLine {
            description: description.into(),
            passed,
        });
    }
}

fn require_polynomial(data: &PhiData, conjecture: Conjecture) -> Result<()> {
    if data.is_polynomial {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "conjecture {} concerns polynomial series, but the series of Pi_{} is not a polynomial",
            conjecture.label(),
            data.n
        )))
    }
}

/// Necessary conditions for `phi[1]` to be a permutation character, plus
/// the exact decomposition `3χ_triv + χ_alt + χ_std` at `n = 3`.
pub fn check_conjecture_12_2(n: u32) -> Result<ConjectureReport> {
    let data = phi_data(n)?;
    require_polynomial(&data, Conjecture::PermutationAtOne)?;
    let at_one = data.phi_at_one().expect("polynomial");
    let decomposition = data.table.decompose(&at_one)?;
    let mut report = ConjectureReport {
        conjecture: Conjecture::PermutationAtOne,
        n,
        checks: Vec::new(),
        decomposition: None,
    };
    report.push(
        format!(
            "hypothesis: series of Pi_{n} is effective ({})",
            data.is_effective
        ),
        true,
    );
    report.push(
        format!("all multiplicities in phi[1] = {decomposition} are non-negative"),
        decomposition.is_effective(),
    );
    report.push(
        "all values of phi[1] are non-negative",
        at_one.values().values().all(|v| !v.is_negative()),
    );
    let identity = CycleType::identity(n)?;
    let at_identity = at_one.value(&identity);
    report.push(
        format!("value at the identity ({at_identity}) is maximal"),
        at_one.values().values().all(|v| v <= at_identity),
    );
    report.push(
        "trivial character occurs in phi[1]",
        decomposition.trivial_multiplicity() >= BigInt::one(),
    );
    if n == 3 {
        let expected: BTreeMap<IrrepLabel, BigInt> = [(vec![3], 3), (vec![2, 1], 1), (vec![1, 1, 1], 1)]
            .into_iter()
            .map(|(p, m)| (CycleType::new(p).unwrap(), BigInt::from(m)))
            .collect();
        report.push(
            "phi[1] = 3χ_triv + χ_alt + χ_std",
            decomposition.multiplicities() == &expected,
        );
    }
    report.decomposition = Some(decomposition);
    Ok(report)
}

/// Largest `n` for which 12.3 also compares against the series at `z = 1`.
pub const SERIES_CROSS_CHECK_MAX_N: u32 = 7;

/// The closed form for `phi[1](g)` is a non-negative integer on every class
/// of every `S_n`, `n <= n_max`; for small `n` it also matches the reduced
/// series evaluated at `z = 1`.
pub fn check_conjecture_12_3(n_max: u32) -> Result<ConjectureReport> {
    if n_max == 0 {
        return Err(Error::InvalidInput("n_max must be positive".into()));
    }
    let mut report = ConjectureReport {
        conjecture: Conjecture::IntegralAtOne,
        n: n_max,
        checks: Vec::new(),
        decomposition: None,
    };
    for n in 1..=n_max {
        for lambda in partitions_of(n)? {
            match phi_at_one_formula(&lambda) {
                Ok(v) => {
                    let mut ok = !v.is_negative();
                    let mut note = String::new();
                    if n <= SERIES_CROSS_CHECK_MAX_N {
                        let from_series = phi_at_one_from_series(&lambda)?;
                        ok &= from_series == BigRational::from_integer(v.clone());
                        note = format!(", series at z=1 gives {from_series}");
                    }
                    report.push(format!("{lambda}: phi[1] = {v}{note}"), ok);
                }
                Err(e) => report.push(format!("{lambda}: {e}"), false),
            }
        }
    }
    Ok(report)
}

/// For polynomial series: whenever `h*_i > 0`, `phi_i` contains `χ_triv`.
pub fn check_conjecture_12_4(n: u32) -> Result<ConjectureReport> {
    let data = phi_data(n)?;
    require_polynomial(&data, Conjecture::TrivialConstituent)?;
    let h = data.h_star();
    let mut report = ConjectureReport {
        conjecture: Conjecture::TrivialConstituent,
        n,
        checks: Vec::new(),
        decomposition: None,
    };
    for (i, coeff) in h.coeffs().iter().enumerate() {
        if !coeff.is_positive() {
            continue;
        }
        let d = data.decomposition(i)?;
        report.push(
            format!("h*_{i} = {coeff}, phi_{i} = {d}"),
            d.trivial_multiplicity() >= BigInt::one(),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(parts: &[u32]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    fn chi(mu: &[u32], lambda: &[u32]) -> i64 {
        irreducible_character(&ct(mu), &ct(lambda))
            .unwrap()
            .try_into()
            .unwrap()
    }

    #[test]
    fn trivial_and_standard_characters() {
        for c in partitions_of(5).unwrap() {
            assert_eq!(irreducible_character(&ct(&[5]), &c).unwrap(), BigInt::one());
        }
        assert_eq!(chi(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(chi(&[2, 1], &[2, 1]), 0);
        assert_eq!(chi(&[2, 1], &[3]), -1);
        assert_eq!(chi(&[1, 1, 1], &[2, 1]), -1);
        assert!(irreducible_character(&ct(&[2, 1]), &ct(&[2, 2])).is_err());
    }

    #[test]
    fn s4_dimensions() {
        let dims: Vec<i64> = [[4].as_slice(), &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]]
            .iter()
            .map(|mu| chi(mu, &[1, 1, 1, 1]))
            .collect();
        assert_eq!(dims, vec![1, 3, 2, 3, 1]);
    }

    #[test]
    fn decompose_trivial() {
        let f = ClassFunction::from_fn(4, |_| BigInt::one()).unwrap();
        let d = decompose(&f).unwrap();
        assert_eq!(d.trivial_multiplicity(), BigInt::one());
        assert_eq!(d.to_string(), "χ_triv");
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let f = ClassFunction::from_fn(3, |c| {
            if c.parts() == [3] {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .unwrap();
        assert!(matches!(decompose(&f), Err(Error::Structural(_))));
    }

    #[test]
    fn class_function_requires_every_class() {
        let mut values = BTreeMap::new();
        values.insert(ct(&[2]), BigInt::one());
        assert!(ClassFunction::new(2, values).is_err());
    }

    #[test]
    fn s3_phi_coefficient_one() {
        let values = [(ct(&[1, 1, 1]), 4), (ct(&[2, 1]), 0), (ct(&[3]), 1)]
            .into_iter()
            .map(|(c, v)| (c, BigInt::from(v)))
            .collect();
        let f = ClassFunction::new(3, values).unwrap();
        assert_eq!(decompose(&f).unwrap().to_string(), "χ_triv + χ_alt + χ_std");
    }

    #[test]
    fn names_and_order() {
        let names: Vec<String> = display_order(4).iter().map(irrep_name).collect();
        assert_eq!(names, ["triv", "alt", "std", "(2,1,1)", "(2,2)"]);
        assert_eq!(irrep_name(&ct(&[1, 1])), "alt");
        assert_eq!(irrep_name(&ct(&[1])), "triv");
    }

    #[test]
    fn h_star_small() {
        assert_eq!(h_star(2).unwrap(), IntegerPolynomial::one());
        assert_eq!(h_star(3).unwrap(), IntegerPolynomial::from_i64s(&[1, 4, 1]));
        assert_eq!(h_star(4).unwrap(), IntegerPolynomial::from_i64s(&[1, 34, 55, 6]));
    }

    #[test]
    fn closed_form_at_one() {
        assert_eq!(phi_at_one_formula(&ct(&[1, 1, 1])).unwrap(), BigInt::from(6));
        assert_eq!(phi_at_one_formula(&ct(&[2, 1, 1])).unwrap(), BigInt::from(16));
        assert_eq!(phi_at_one_formula(&ct(&[4])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn conjecture_preconditions() {
        assert!(matches!(check_conjecture_12_2(4), Err(Error::Precondition(_))));
        assert!(matches!(check_conjecture_12_4(5), Err(Error::Precondition(_))));
        assert!(check_conjecture_12_3(0).is_err());
        assert!(Conjecture::from_label("12.9").is_err());
    }
}
