//! Markdown rendering of a [`ReportDocument`]. The layout is fixed: a level-2
//! heading, then pipe tables with a `| --- |` separator row, cells exactly as
//! in the JSON `text` fields.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::report::*;

fn cycle(parts: &[String]) -> String {
    format!("({})", parts.join(","))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    writeln!(out, "| {} |", header.join(" | ")).unwrap();
    writeln!(out, "|{}", " --- |".repeat(header.len())).unwrap();
    for row in rows {
        writeln!(out, "| {} |", row.join(" | ")).unwrap();
    }
}

fn decomposition_rows(d: &BTreeMap<String, String>) -> Vec<Vec<String>> {
    d.iter().map(|(k, v)| vec![k.clone(), v.clone()]).collect()
}

pub fn render(doc: &ReportDocument) -> String {
    let mut out = String::new();
    match &doc.results {
        Results::Quasipolynomial {
            cycle_type,
            quasipolynomial: q,
            samples,
        } => {
            writeln!(out, "## Ehrhart quasipolynomial of {}\n", cycle(cycle_type)).unwrap();
            table(
                &mut out,
                &["branch", "polynomial", "coefficients"],
                &[
                    vec!["t even".into(), q.even_text.clone(), q.even.join(", ")],
                    vec!["t odd".into(), q.odd_text.clone(), q.odd.join(", ")],
                ],
            );
            writeln!(out).unwrap();
            let mut header = vec!["t"];
            header.extend(samples.iter().map(|s| s.t.as_str()));
            let mut row = vec!["count".to_string()];
            row.extend(samples.iter().map(|s| s.value.clone()));
            table(&mut out, &header, &[row]);
        }
        Results::Series {
            cycle_type,
            series,
            coefficients,
        } => {
            writeln!(out, "## Ehrhart series of {}\n", cycle(cycle_type)).unwrap();
            writeln!(out, "Ehr(z) = {}\n", series.text).unwrap();
            let labels: Vec<String> = (0..coefficients.len()).map(|t| t.to_string()).collect();
            let mut header = vec!["t"];
            header.extend(labels.iter().map(String::as_str));
            let mut row = vec!["count".to_string()];
            row.extend(coefficients.iter().cloned());
            table(&mut out, &header, &[row]);
        }
        Results::Phi { cycle_type, phi } => {
            writeln!(out, "## Equivariant series at {}\n", cycle(cycle_type)).unwrap();
            table(
                &mut out,
                &["form", "value"],
                &[
                    vec!["expanded".into(), phi.text.clone()],
                    vec!["reduced".into(), phi.series.text.clone()],
                    vec!["polynomial".into(), yes_no(phi.series.polynomial).into()],
                ],
            );
        }
        Results::Table { n, rows } => {
            writeln!(out, "## Equivariant Ehrhart data of S_{n}\n").unwrap();
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        cycle(&r.cycle_type),
                        r.class_size.clone(),
                        r.quasipolynomial.text(),
                        r.ehrhart_series.text.clone(),
                        r.phi.text.clone(),
                    ]
                })
                .collect();
            table(
                &mut out,
                &[
                    "cycle type",
                    "class size",
                    "quasipolynomial",
                    "Ehrhart series",
                    "phi",
                ],
                &rows,
            );
        }
        Results::Decomposition {
            n,
            polynomial,
            effective,
            terms,
            tail,
        } => {
            writeln!(out, "## Decomposition of the equivariant series of Pi_{n}\n").unwrap();
            let rows: Vec<Vec<String>> = terms
                .iter()
                .map(|t| vec![t.index.clone(), t.text.clone(), yes_no(t.effective).into()])
                .collect();
            table(&mut out, &["i", "phi_i", "effective"], &rows);
            writeln!(out).unwrap();
            if let Some(tail) = tail {
                let kind = if tail.alternating {
                    "alternating"
                } else {
                    "higher order"
                };
                writeln!(out, "Tail from z^{} ({kind}): {}\n", tail.start, tail.text).unwrap();
            }
            writeln!(
                out,
                "Polynomial: {}. Effective: {}.",
                yes_no(*polynomial),
                yes_no(*effective)
            )
            .unwrap();
        }
        Results::Verdict {
            n,
            polynomial,
            effective,
            non_polynomial_witness,
            negative_multiplicity,
        } => {
            writeln!(out, "## Verdict for Pi_{n}\n").unwrap();
            let poly_witness = non_polynomial_witness
                .as_deref()
                .map(cycle)
                .unwrap_or_else(|| "-".into());
            let eff_witness = negative_multiplicity
                .as_ref()
                .map(|w| {
                    format!(
                        "multiplicity {} of {} in phi_{}",
                        w.multiplicity, w.irrep, w.index
                    )
                })
                .unwrap_or_else(|| {
                    if *polynomial || *effective {
                        "-".into()
                    } else {
                        "not a polynomial".into()
                    }
                });
            table(
                &mut out,
                &["property", "holds", "witness"],
                &[
                    vec!["polynomial".into(), yes_no(*polynomial).into(), poly_witness],
                    vec!["effective".into(), yes_no(*effective).into(), eff_witness],
                ],
            );
        }
        Results::Oracle {
            entries,
            skipped,
            all_match,
        } => {
            writeln!(out, "## Brute-force lattice-point counts\n").unwrap();
            let rows: Vec<Vec<String>> = entries
                .iter()
                .map(|e| {
                    vec![
                        cycle(&e.cycle_type),
                        e.t.clone(),
                        e.oracle.clone(),
                        e.formula.clone(),
                        yes_no(e.matches).into(),
                    ]
                })
                .collect();
            table(&mut out, &["cycle type", "t", "count", "formula", "match"], &rows);
            if !skipped.is_empty() {
                writeln!(out, "\nSkipped over budget:\n").unwrap();
                for s in skipped {
                    writeln!(out, "- {}", s.reason).unwrap();
                }
            }
            writeln!(out, "\nAll match: {}.", yes_no(*all_match)).unwrap();
        }
        Results::Check {
            conjecture,
            passed,
            reports,
        } => {
            writeln!(out, "## Conjecture {conjecture}\n").unwrap();
            for r in reports {
                let status = match r.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::NotApplicable => "not applicable",
                };
                writeln!(out, "### n = {}: {status}\n", r.n).unwrap();
                if let Some(note) = &r.note {
                    writeln!(out, "{note}\n").unwrap();
                }
                if !r.checks.is_empty() {
                    let rows: Vec<Vec<String>> = r
                        .checks
                        .iter()
                        .map(|c| {
                            vec![
                                c.description.clone(),
                                if c.passed { "pass" } else { "FAIL" }.into(),
                            ]
                        })
                        .collect();
                    table(&mut out, &["check", "result"], &rows);
                    writeln!(out).unwrap();
                }
                if let Some(d) = &r.decomposition {
                    table(
                        &mut out,
                        &["irreducible", "multiplicity in phi[1]"],
                        &decomposition_rows(d),
                    );
                    writeln!(out).unwrap();
                }
            }
            writeln!(out, "Overall: {}.", if *passed { "pass" } else { "FAIL" }).unwrap();
        }
    }
    out
}
