use std::fmt;

use clap::{Parser, Subcommand, ValueEnum};
use ehrhart_core::oracle::SweepEntry;
use ehrhart_core::{
    check_conjecture_12_2, check_conjecture_12_3, check_conjecture_12_4, class_size,
    count_fixed_lattice_points_with_budget, ehrhart_quasipolynomial, ehrhart_series, oracle_sweep,
    partitions_of, phi_data, phi_series, series_coefficients, Budget, Conjecture, ConjectureReport,
    CycleType, Error, SweepReport,
};
use num_bigint::BigInt;

use crate::report::*;

#[derive(Debug, Parser)]
#[command(
    name = "ehrhart",
    version,
    about = "Equivariant Ehrhart theory of the permutahedron"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,
    /// Oracle limits as MAX_TN[,MAX_CANDIDATES] (default 40,100000000).
    #[arg(long, global = true, value_name = "MAX_TN[,MAX_CANDIDATES]", value_parser = parse_budget)]
    pub budget: Option<Budget>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Even and odd branches of the Ehrhart quasipolynomial.
    Quasipoly {
        #[arg(long, value_name = "L1,L2,...", value_parser = parse_cycle_type)]
        cycle_type: CycleType,
        /// Evaluate at t = 0..=T.
        #[arg(long, default_value_t = 6)]
        t_max: u64,
    },
    /// The Ehrhart series as a reduced rational function.
    Series {
        #[arg(long, value_name = "L1,L2,...", value_parser = parse_cycle_type)]
        cycle_type: CycleType,
        /// Number of series coefficients to list.
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// The equivariant series at one cycle type.
    Phi {
        #[arg(long, value_name = "L1,L2,...", value_parser = parse_cycle_type)]
        cycle_type: CycleType,
    },
    /// Quasipolynomial, Ehrhart series and equivariant series for every class of S_n.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Decompositions of the coefficients into irreducible characters.
    Decompose {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Number of coefficients phi_0, phi_1, ... to decompose.
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Whether the equivariant series of Pi_n is polynomial and effective.
    Verdict {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Brute-force lattice-point counts compared with the formula.
    Oracle {
        #[arg(long, value_name = "L1,L2,...", value_parser = parse_cycle_type, requires = "t")]
        cycle_type: Option<CycleType>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), requires = "cycle_type")]
        t: Option<u64>,
        /// Sweep every cycle type of n <= N and 1 <= t <= TMAX.
        #[arg(long, value_name = "N,TMAX", value_parser = parse_sweep, conflicts_with = "cycle_type")]
        sweep: Option<(u32, u64)>,
    },
    /// Computational checks of the conjectures 12.2, 12.3 and 12.4.
    Check {
        #[arg(long, value_parser = ["12.2", "12.3", "12.4"])]
        conjecture: String,
        /// Check every n up to this bound (default 3, or 10 for 12.3).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), conflicts_with = "n")]
        max_n: Option<u32>,
        /// Check a single n.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
    },
}

fn parse_cycle_type(s: &str) -> Result<CycleType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_budget(s: &str) -> Result<Budget, String> {
    let mut budget = Budget::default();
    let mut fields = s.split(',');
    let tn = fields.next().unwrap_or_default().trim();
    budget.max_tn = tn.parse().map_err(|_| format!("bad MAX_TN {tn:?}"))?;
    if let Some(c) = fields.next() {
        budget.max_candidates = c
            .trim()
            .parse()
            .map_err(|_| format!("bad MAX_CANDIDATES {c:?}"))?;
    }
    if fields.next().is_some() {
        return Err("expected MAX_TN[,MAX_CANDIDATES]".into());
    }
    Ok(budget)
}

fn parse_sweep(s: &str) -> Result<(u32, u64), String> {
    let (n, t) = s.split_once(',').ok_or("expected N,TMAX")?;
    let n: u32 = n.trim().parse().map_err(|_| format!("bad N {n:?}"))?;
    let t: u64 = t.trim().parse().map_err(|_| format!("bad TMAX {t:?}"))?;
    if n == 0 || t == 0 {
        return Err("N and TMAX must be positive".into());
    }
    Ok((n, t))
}

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    InputError = 1,
    Internal = 2,
    Mismatch = 3,
}

#[derive(Debug)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Structural(_) => Status::Internal,
            Error::InvalidInput(_) | Error::Precondition(_) | Error::BudgetExceeded(_) => Status::InputError,
        };
        CliError {
            status,
            message: e.to_string(),
        }
    }
}

/// Runs one parsed command. The status is `Mismatch` when a check or oracle
/// comparison fails; the report is produced either way.
pub fn execute(cli: &Cli, arguments: Vec<String>) -> Result<(ReportDocument, Status), CliError> {
    let budget = cli.budget.unwrap_or_default();
    let mut inputs = Inputs::default();
    let mut status = Status::Success;
    let (command, results) = match &cli.command {
        Command::Quasipoly { cycle_type, t_max } => {
            inputs.n = Some(cycle_type.n().to_string());
            inputs.cycle_type = Some(cycle_type_json(cycle_type));
            inputs.t_range = Some(TRange {
                from: "0".into(),
                to: t_max.to_string(),
            });
            let q = ehrhart_quasipolynomial(cycle_type);
            let samples = (0..=*t_max)
                .map(|t| Sample {
                    t: t.to_string(),
                    value: q.eval(t).to_string(),
                })
                .collect();
            let results = Results::Quasipolynomial {
                cycle_type: cycle_type_json(cycle_type),
                quasipolynomial: QuasipolynomialJson::new(&q),
                samples,
            };
            ("quasipoly", results)
        }
        Command::Series { cycle_type, terms } => {
            inputs.n = Some(cycle_type.n().to_string());
            inputs.cycle_type = Some(cycle_type_json(cycle_type));
            inputs.terms = Some(terms.to_string());
            let rf = ehrhart_series(cycle_type);
            let results = Results::Series {
                cycle_type: cycle_type_json(cycle_type),
                series: SeriesJson::new(&rf),
                coefficients: strings(series_coefficients(&rf, *terms)),
            };
            ("series", results)
        }
        Command::Phi { cycle_type } => {
            inputs.n = Some(cycle_type.n().to_string());
            inputs.cycle_type = Some(cycle_type_json(cycle_type));
            let rf = phi_series(cycle_type);
            let tail = rf.partial_fraction_tail()?;
            let results = Results::Phi {
                cycle_type: cycle_type_json(cycle_type),
                phi: PhiJson::new(&rf, &tail),
            };
            ("phi", results)
        }
        Command::Table { n } => {
            inputs.n = Some(n.to_string());
            ("table", table(*n)?)
        }
        Command::Decompose { n, terms } => {
            inputs.n = Some(n.to_string());
            inputs.terms = terms.map(|t| t.to_string());
            ("decompose", decomposition(*n, *terms)?)
        }
        Command::Verdict { n } => {
            inputs.n = Some(n.to_string());
            ("verdict", verdict(*n)?)
        }
        Command::Oracle { cycle_type, t, sweep } => {
            inputs.budget = Some(BudgetJson {
                max_tn: budget.max_tn.to_string(),
                max_candidates: budget.max_candidates.to_string(),
            });
            let report = match (cycle_type, t, sweep) {
                (_, _, Some((n_max, t_max))) => {
                    inputs.n = Some(n_max.to_string());
                    inputs.t_range = Some(TRange {
                        from: "1".into(),
                        to: t_max.to_string(),
                    });
                    oracle_sweep(*n_max, *t_max, &budget)?
                }
                (Some(lambda), Some(t), None) => {
                    inputs.n = Some(lambda.n().to_string());
                    inputs.cycle_type = Some(cycle_type_json(lambda));
                    inputs.t_range = Some(TRange {
                        from: t.to_string(),
                        to: t.to_string(),
                    });
                    let oracle = count_fixed_lattice_points_with_budget(lambda, *t, &budget)?;
                    let formula = ehrhart_quasipolynomial(lambda).eval(*t);
                    SweepReport {
                        entries: vec![SweepEntry {
                            lambda: lambda.clone(),
                            t: *t,
                            oracle,
                            formula,
                        }],
                        skipped: Vec::new(),
                    }
                }
                _ => {
                    return Err(CliError {
                        status: Status::InputError,
                        message: "oracle needs --cycle-type with --t, or --sweep N,TMAX".into(),
                    })
                }
            };
            if !report.all_match() {
                status = Status::Mismatch;
            }
            ("oracle", oracle_results(&report))
        }
        Command::Check { conjecture, max_n, n } => {
            let conjecture = Conjecture::from_label(conjecture)?;
            inputs.conjecture = Some(conjecture.label().to_string());
            let results = check(conjecture, *max_n, *n, &mut inputs)?;
            if let Results::Check { passed: false, .. } = results {
                status = Status::Mismatch;
            }
            ("check", results)
        }
    };
    let doc = ReportDocument {
        command: command.to_string(),
        arguments,
        inputs,
        results,
    };
    Ok((doc, status))
}

/// Classes in ascending lexicographic order, starting from the identity.
fn table_classes(n: u32) -> Result<Vec<CycleType>, Error> {
    let mut classes = partitions_of(n)?;
    classes.sort_by(|a, b| a.parts().cmp(b.parts()));
    Ok(classes)
}

fn table(n: u32) -> Result<Results, CliError> {
    let mut rows = Vec::new();
    for lambda in table_classes(n)? {
        let phi = phi_series(&lambda);
        let tail = phi.partial_fraction_tail()?;
        rows.push(TableRow {
            cycle_type: cycle_type_json(&lambda),
            class_size: class_size(&lambda).to_string(),
            quasipolynomial: QuasipolynomialJson::new(&ehrhart_quasipolynomial(&lambda)),
            ehrhart_series: SeriesJson::new(&ehrhart_series(&lambda)),
            phi: PhiJson::new(&phi, &tail),
        });
    }
    Ok(Results::Table {
        n: n.to_string(),
        rows,
    })
}

fn decomposition(n: u32, terms: Option<usize>) -> Result<Results, CliError> {
    let data = phi_data(n)?;
    let count = terms.unwrap_or(data.tail_start);
    let classes = table_classes(n)?;
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let f = data.coefficient(i);
        let d = data.decomposition(i)?;
        out.push(TermJson {
            index: i.to_string(),
            values: classes
                .iter()
                .map(|c| (c.to_string(), f.value(c).to_string()))
                .collect(),
            decomposition: decomposition_map(&d),
            text: d.to_string(),
            effective: d.is_effective(),
        });
    }
    let tail = data.tail_decomposition()?.map(|d| TailJson {
        start: data.tail_start.to_string(),
        alternating: data.tail_is_alternating(),
        decomposition: decomposition_map(&d),
        text: d.to_string(),
    });
    Ok(Results::Decomposition {
        n: n.to_string(),
        polynomial: data.is_polynomial,
        effective: data.is_effective,
        terms: out,
        tail,
    })
}

fn verdict(n: u32) -> Result<Results, CliError> {
    let data = phi_data(n)?;
    let negative = data.negative_multiplicity_witness()?;
    Ok(Results::Verdict {
        n: n.to_string(),
        polynomial: data.is_polynomial,
        effective: data.is_effective,
        non_polynomial_witness: data.non_polynomial_witness().map(cycle_type_json),
        negative_multiplicity: negative.map(|(i, mu, k)| NegativeMultiplicity {
            index: i.to_string(),
            irrep: ehrhart_core::characters::irrep_name(&mu),
            multiplicity: k.to_string(),
        }),
    })
}

fn oracle_results(report: &SweepReport) -> Results {
    Results::Oracle {
        entries: report
            .entries
            .iter()
            .map(|e| OracleEntry {
                cycle_type: cycle_type_json(&e.lambda),
                t: e.t.to_string(),
                oracle: e.oracle.to_string(),
                formula: e.formula.to_string(),
                matches: BigInt::from(e.oracle) == e.formula,
            })
            .collect(),
        skipped: report
            .skipped
            .iter()
            .map(|(lambda, t, reason)| SkippedCase {
                cycle_type: cycle_type_json(lambda),
                t: t.to_string(),
                reason: reason.clone(),
            })
            .collect(),
        all_match: report.all_match(),
    }
}

fn check_report(report: &ConjectureReport) -> CheckReport {
    CheckReport {
        n: report.n.to_string(),
        status: if report.passed() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        note: None,
        checks: report
            .checks
            .iter()
            .map(|c| CheckLineJson {
                description: c.description.clone(),
                passed: c.passed,
            })
            .collect(),
        decomposition: report.decomposition.as_ref().map(decomposition_map),
    }
}

fn check(
    conjecture: Conjecture,
    max_n: Option<u32>,
    single_n: Option<u32>,
    inputs: &mut Inputs,
) -> Result<Results, CliError> {
    let mut reports = Vec::new();
    if conjecture == Conjecture::IntegralAtOne {
        let n_max = single_n.or(max_n).unwrap_or(10);
        inputs.n = Some(n_max.to_string());
        reports.push(check_report(&check_conjecture_12_3(n_max)?));
    } else {
        let run = match conjecture {
            Conjecture::PermutationAtOne => check_conjecture_12_2,
            _ => check_conjecture_12_4,
        };
        if let Some(n) = single_n {
            inputs.n = Some(n.to_string());
            reports.push(check_report(&run(n)?));
        } else {
            let n_max = max_n.unwrap_or(3);
            inputs.n = Some(n_max.to_string());
            for n in 1..=n_max {
                match run(n) {
                    Ok(r) => reports.push(check_report(&r)),
                    Err(Error::Precondition(note)) => reports.push(CheckReport {
                        n: n.to_string(),
                        status: CheckStatus::NotApplicable,
                        note: Some(note),
                        checks: Vec::new(),
                        decomposition: None,
                    }),
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    let passed = reports.iter().all(|r| r.status != CheckStatus::Fail);
    Ok(Results::Check {
        conjecture: conjecture.label().to_string(),
        passed,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_parsing() {
        assert_eq!(
            parse_budget("50").unwrap(),
            Budget {
                max_tn: 50,
                ..Budget::default()
            }
        );
        assert_eq!(
            parse_budget("10, 99").unwrap(),
            Budget {
                max_tn: 10,
                max_candidates: 99
            }
        );
        assert!(parse_budget("x").is_err());
        assert!(parse_budget("1,2,3").is_err());
    }

    #[test]
    fn sweep_parsing() {
        assert_eq!(parse_sweep("6,4").unwrap(), (6, 4));
        assert!(parse_sweep("6").is_err());
        assert!(parse_sweep("0,4").is_err());
    }

    #[test]
    fn error_statuses() {
        let status = |e: Error| CliError::from(e).status;
        assert_eq!(status(Error::InvalidInput(String::new())), Status::InputError);
        assert_eq!(status(Error::BudgetExceeded(String::new())), Status::InputError);
        assert_eq!(status(Error::Precondition(String::new())), Status::InputError);
        assert_eq!(status(Error::Structural(String::new())), Status::Internal);
    }

    #[test]
    fn table_rows_start_at_identity() {
        let classes: Vec<String> = table_classes(4).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(classes, ["(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"]);
    }
}
