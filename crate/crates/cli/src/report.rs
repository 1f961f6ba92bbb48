//! Serializable report model. Every integer is carried as a decimal string so
//! that JSON output is exact at any size.

use std::collections::BTreeMap;

use ehrhart_core::characters::irrep_name;
use ehrhart_core::{
    CharacterDecomposition, CycleType, IntegerPolynomial, PartialFractionTail, Quasipolynomial,
    RationalFunction,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    /// The invocation, without the program name.
    pub arguments: Vec<String>,
    pub inputs: Inputs,
    pub results: Results,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inputs {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle_type: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_range: Option<TRange>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjecture: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<BudgetJson>,
}

/// Inclusive range of dilation factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TRange {
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetJson {
    pub max_tn: String,
    pub max_candidates: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Quasipolynomial {
        cycle_type: Vec<String>,
        quasipolynomial: QuasipolynomialJson,
        samples: Vec<Sample>,
    },
    Series {
        cycle_type: Vec<String>,
        series: SeriesJson,
        /// Leading Maclaurin coefficients, i.e. lattice-point counts.
        coefficients: Vec<String>,
    },
    Phi {
        cycle_type: Vec<String>,
        phi: PhiJson,
    },
    Table {
        n: String,
        rows: Vec<TableRow>,
    },
    Decomposition {
        n: String,
        polynomial: bool,
        effective: bool,
        terms: Vec<TermJson>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tail: Option<TailJson>,
    },
    Verdict {
        n: String,
        polynomial: bool,
        effective: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        non_polynomial_witness: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        negative_multiplicity: Option<NegativeMultiplicity>,
    },
    Oracle {
        entries: Vec<OracleEntry>,
        skipped: Vec<SkippedCase>,
        all_match: bool,
    },
    Check {
        conjecture: String,
        passed: bool,
        reports: Vec<CheckReport>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasipolynomialJson {
    /// `"1"` when both branches agree, `"2"` otherwise.
    pub period: String,
    /// Ascending coefficients of the branch used for even `t`.
    pub even: Vec<String>,
    pub odd: Vec<String>,
    pub even_text: String,
    pub odd_text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub t: String,
    pub value: String,
}

/// `numerator / prod Phi_d^e`, where `Phi_1 = 1 - z` and `Phi_d` is the
/// `d`-th cyclotomic polynomial otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub numerator: Vec<String>,
    pub denominator: Vec<FactorJson>,
    pub text: String,
    pub polynomial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub cyclotomic_index: String,
    pub exponent: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiJson {
    pub series: SeriesJson,
    /// `polynomial_part + sum_j tail_numerators[j-1] / (1+z)^j`.
    pub polynomial_part: Vec<String>,
    pub tail_numerators: Vec<String>,
    /// Leading terms written out, followed by the closed tail.
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub cycle_type: Vec<String>,
    pub class_size: String,
    pub quasipolynomial: QuasipolynomialJson,
    pub ehrhart_series: SeriesJson,
    pub phi: PhiJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub index: String,
    /// Value of `phi_i` on each class, keyed by the class.
    pub values: BTreeMap<String, String>,
    /// Multiplicity of each irreducible, keyed by `triv`, `alt`, `std` or
    /// the partition.
    pub decomposition: BTreeMap<String, String>,
    pub text: String,
    pub effective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailJson {
    /// First index at which every class is in its `1/(1+z)^j` regime.
    pub start: String,
    /// True when the tail is `(-1)^(i - start)` times one fixed character.
    pub alternating: bool,
    /// Decomposition of `(-1)^start phi_start`.
    pub decomposition: BTreeMap<String, String>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeMultiplicity {
    pub index: String,
    pub irrep: String,
    pub multiplicity: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub cycle_type: Vec<String>,
    pub t: String,
    pub oracle: String,
    pub formula: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedCase {
    pub cycle_type: Vec<String>,
    pub t: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub n: String,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub checks: Vec<CheckLineJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLineJson {
    pub description: String,
    pub passed: bool,
}

pub fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

pub fn cycle_type_json(lambda: &CycleType) -> Vec<String> {
    strings(lambda.parts())
}

pub fn coefficients(p: &IntegerPolynomial) -> Vec<String> {
    strings(p.coeffs())
}

impl QuasipolynomialJson {
    pub fn new(q: &Quasipolynomial) -> Self {
        QuasipolynomialJson {
            period: if q.is_polynomial() { "1" } else { "2" }.into(),
            even: coefficients(&q.even),
            odd: coefficients(&q.odd),
            even_text: q.even.to_string_descending("t"),
            odd_text: q.odd.to_string_descending("t"),
        }
    }

    /// Human-readable form: one polynomial, or both branches by parity.
    pub fn text(&self) -> String {
        if self.period == "1" {
            self.even_text.clone()
        } else {
            format!("{} (t even); {} (t odd)", self.even_text, self.odd_text)
        }
    }
}

impl SeriesJson {
    pub fn new(rf: &RationalFunction) -> Self {
        let reduced = rf.reduce();
        SeriesJson {
            numerator: coefficients(reduced.numerator()),
            denominator: reduced
                .denominator_factors()
                .into_iter()
                .map(|(d, e)| FactorJson {
                    cyclotomic_index: d.to_string(),
                    exponent: e.to_string(),
                })
                .collect(),
            text: reduced.to_string(),
            polynomial: reduced.is_polynomial(),
        }
    }
}

impl PhiJson {
    pub fn new(rf: &RationalFunction, tail: &PartialFractionTail) -> Self {
        PhiJson {
            series: SeriesJson::new(rf),
            polynomial_part: coefficients(&tail.polynomial_part),
            tail_numerators: strings(&tail.tail_numerators),
            text: phi_text(rf, tail),
        }
    }
}

/// For a polynomial, the polynomial. Otherwise `phi_0 + ... + phi_{D-1}
/// z^(D-1) + z^D Q(z)/(1+z)^r` with `D` one past the polynomial part, e.g.
/// `1+4z+11z^2-2z^3+4z^4/(1+z)`.
pub fn phi_text(rf: &RationalFunction, tail: &PartialFractionTail) -> String {
    let reduced = rf.reduce();
    if tail.tail_numerators.is_empty() {
        return reduced.numerator().to_string_ascending("z");
    }
    let start = tail.polynomial_part.degree().map_or(0, |d| d + 1);
    let head = IntegerPolynomial::new(reduced.series_coefficients(start));
    // N - head * (1+z)^r = z^start * Q.
    let rest = reduced.numerator() - &(&head * &reduced.expanded_denominator());
    let shifted = IntegerPolynomial::new(rest.coeffs().iter().skip(start).cloned().collect());
    debug_assert!(rest.coeffs().iter().take(start).all(|c| c == &BigInt::from(0)));
    let order = tail.tail_numerators.len();
    let den = if order == 1 {
        "(1+z)".to_string()
    } else {
        format!("(1+z)^{order}")
    };
    let nonzero_terms = shifted.coeffs().iter().filter(|c| c != &&BigInt::from(0)).count();
    let scaled = IntegerPolynomial::new(
        std::iter::repeat_n(BigInt::from(0), start)
            .chain(shifted.coeffs().iter().cloned())
            .collect(),
    );
    let numerator_text = scaled.to_string_ascending("z");
    let fraction = if nonzero_terms > 1 {
        format!("({numerator_text})/{den}")
    } else {
        format!("{numerator_text}/{den}")
    };
    if head.is_zero() {
        return fraction;
    }
    let head_text = head.to_string_ascending("z");
    if fraction.starts_with('-') {
        format!("{head_text}{fraction}")
    } else {
        format!("{head_text}+{fraction}")
    }
}

/// Label -> multiplicity over every irreducible.
pub fn decomposition_map(d: &CharacterDecomposition) -> BTreeMap<String, String> {
    d.multiplicities()
        .iter()
        .map(|(mu, k)| (irrep_name(mu), k.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ehrhart_core::phi_series;

    fn text(lambda: &str) -> String {
        let rf = phi_series(&lambda.parse().unwrap());
        phi_text(&rf, &rf.partial_fraction_tail().unwrap())
    }

    #[test]
    fn phi_text_forms() {
        assert_eq!(text("2,1,1"), "1+4z+11z^2-2z^3+4z^4/(1+z)");
        assert_eq!(text("2,2"), "1+2z+3z^2+2z^3");
        for lambda in ["2,1,1,1", "4,1,1", "2,2,1,1", "3,2,1,1"] {
            let t = text(lambda);
            assert!(t.contains("/(1+z"), "{lambda}: {t}");
        }
    }

    #[test]
    fn quasipolynomial_text() {
        let q = ehrhart_core::ehrhart_quasipolynomial(&"4".parse().unwrap());
        assert_eq!(QuasipolynomialJson::new(&q).text(), "1 (t even); 0 (t odd)");
    }
}
