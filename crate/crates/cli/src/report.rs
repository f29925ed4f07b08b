//! Report rendering in markdown, JSON and CSV.
//!
//! Human-oriented cells use six significant digits. The markdown machine
//! section and every CSV or JSON number carry full precision, so orders and
//! verdicts can be recomputed from them.

use std::fmt::Write as _;
use std::io::Write;

use hvas_core::distance::AxiomReport;
use hvas_core::ifs::Ifn;
use hvas_core::ranking::RankingResult;
use hvas_core::robustness::AuditReport;
use serde::Serialize;

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Body {
    Rankings {
        rankings: Vec<RankingResult>,
    },
    Audit {
        audit: AuditReport,
        /// Rankings of a problem's alternatives against both ideals, when a
        /// problem was supplied.
        reference_rankings: Vec<RankingResult>,
        robust_on_problem: Option<bool>,
    },
    Hypervolume {
        points: usize,
        dimensions: usize,
        reference: Vec<f64>,
        volume: f64,
        estimate: Option<Estimate>,
    },
    Axioms {
        reports: Vec<AxiomReport>,
    },
}

/// A Monte Carlo volume estimate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub samples: usize,
    pub seed: u64,
    pub value: f64,
    pub stderr: f64,
}

pub fn emit(report: &Report, format: Format, sink: &mut dyn Write) -> Result<()> {
    let bytes = render(report, format)?;
    sink.write_all(&bytes)
        .map_err(|e| CliError::Output(e.to_string()))
}

pub fn render(report: &Report, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Md => Ok(markdown(report).into_bytes()),
        Format::Json => {
            let mut text = serde_json::to_string_pretty(report)
                .map_err(|e| CliError::Output(e.to_string()))?;
            text.push('\n');
            Ok(text.into_bytes())
        }
        Format::Csv => csv_bytes(report),
    }
}

/// Six significant digits with trailing zeros removed, switching to
/// exponent notation outside `[1e-5, 1e6)`.
pub fn human(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let scientific = format!("{x:.5e}");
    let (mantissa, exponent) = scientific.split_once('e').expect("exponent notation");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-5..6).contains(&exponent) {
        trim_zeros(format!("{:.*}", (5 - exponent) as usize, x))
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(text: String) -> String {
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        text
    }
}

/// Shortest representation that parses back to the same value.
pub fn full(x: f64) -> String {
    format!("{x:?}")
}

fn pair(x: Ifn) -> String {
    format!("({}, {})", human(x.mu()), human(x.nu()))
}

fn cell(text: &str) -> String {
    text.replace('|', "\\|")
}

struct Table {
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table {
            rows: vec![header.iter().map(|h| h.to_string()).collect()],
        }
    }

    fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    fn write(&self, out: &mut String) {
        let line = |cells: &[String]| {
            format!(
                "| {} |\n",
                cells
                    .iter()
                    .map(|c| cell(c))
                    .collect::<Vec<_>>()
                    .join(" | ")
            )
        };
        out.push_str(&line(&self.rows[0]));
        out.push_str(&line(&vec!["---".to_string(); self.rows[0].len()]));
        for row in &self.rows[1..] {
            out.push_str(&line(row));
        }
        out.push('\n');
    }
}

fn markdown(report: &Report) -> String {
    let mut out = format!("# hvas {}\n\n", report.command);
    let mut machine: Vec<(String, String)> = Vec::new();
    match &report.body {
        Body::Rankings { rankings } => {
            ranking_tables(rankings, &mut out);
            for ranking in rankings {
                ranking_machine(ranking, &mut machine);
            }
        }
        Body::Audit {
            audit,
            reference_rankings,
            robust_on_problem,
        } => {
            audit_markdown(audit, &mut out, &mut machine);
            if !reference_rankings.is_empty() {
                ranking_tables(reference_rankings, &mut out);
                for ranking in reference_rankings {
                    ranking_machine(ranking, &mut machine);
                }
            }
            if let Some(robust) = robust_on_problem {
                let verdict = if *robust {
                    "same order against both ideals"
                } else {
                    "orders differ between ideals"
                };
                let _ = writeln!(out, "Problem: {verdict}\n");
                machine.push(("problem.robust".into(), robust.to_string()));
            }
        }
        Body::Hypervolume {
            points,
            dimensions,
            reference,
            volume,
            estimate,
        } => {
            let mut table = Table::new(&["Points", "Dimensions", "Reference", "Volume"]);
            let coords = reference
                .iter()
                .map(|&r| human(r))
                .collect::<Vec<_>>()
                .join(", ");
            table.row(vec![
                points.to_string(),
                dimensions.to_string(),
                format!("({coords})"),
                human(*volume),
            ]);
            table.write(&mut out);
            machine.push(("volume".into(), full(*volume)));
            machine.push((
                "reference".into(),
                reference
                    .iter()
                    .map(|&r| full(r))
                    .collect::<Vec<_>>()
                    .join(","),
            ));
            if let Some(e) = estimate {
                let mut table = Table::new(&[
                    "Samples",
                    "Seed",
                    "Estimate",
                    "Std. error",
                    "Deviation / std. error",
                ]);
                let ratio = if e.stderr > 0.0 {
                    human((volume - e.value).abs() / e.stderr)
                } else {
                    "-".into()
                };
                table.row(vec![
                    e.samples.to_string(),
                    e.seed.to_string(),
                    human(e.value),
                    human(e.stderr),
                    ratio,
                ]);
                table.write(&mut out);
                machine.push(("estimate.value".into(), full(e.value)));
                machine.push(("estimate.stderr".into(), full(e.stderr)));
            }
        }
        Body::Axioms { reports } => {
            let mut table = Table::new(&[
                "Measure", "Samples", "Symmetry", "Identity", "Triangle", "Verdict",
            ]);
            let mark = |ok: bool| if ok { "ok" } else { "violated" }.to_string();
            for r in reports {
                let verdict = if r.all_ok() { "metric" } else { "not a metric" };
                table.row(vec![
                    r.measure_name.clone(),
                    r.samples.to_string(),
                    mark(r.symmetry_ok),
                    mark(r.identity_ok),
                    mark(r.triangle_ok),
                    verdict.into(),
                ]);
                machine.push((format!("{}.all_ok", r.measure_name), r.all_ok().to_string()));
                for (k, w) in r.witnesses.iter().enumerate() {
                    let distances = w
                        .distances
                        .iter()
                        .map(|&d| full(d))
                        .collect::<Vec<_>>()
                        .join(",");
                    machine.push((
                        format!("{}.witness.{k}", r.measure_name),
                        format!("{:?} {distances}", w.axiom),
                    ));
                }
            }
            table.write(&mut out);
        }
    }
    out.push_str("## Machine\n\n```text\n");
    for (key, value) in machine {
        let _ = writeln!(out, "{key} = {value}");
    }
    out.push_str("```\n");
    out
}

fn ranking_tables(rankings: &[RankingResult], out: &mut String) {
    let mut header = vec!["Alternative"];
    header.extend(rankings.iter().map(|r| r.method.as_str()));
    let mut scores = Table::new(&header);
    if let Some(first) = rankings.first() {
        for (i, name) in first.alternatives.iter().enumerate() {
            let mut row = vec![name.clone()];
            row.extend(rankings.iter().map(|r| human(r.scores[i])));
            scores.row(row);
        }
    }
    scores.write(out);

    let mut orders = Table::new(&["Method", "Ranking order"]);
    for r in rankings {
        orders.row(vec![r.method.clone(), r.order_string()]);
    }
    orders.write(out);
}

fn ranking_machine(ranking: &RankingResult, machine: &mut Vec<(String, String)>) {
    let prefix = &ranking.method;
    for (name, score) in ranking.alternatives.iter().zip(&ranking.scores) {
        machine.push((format!("{prefix}.score.{name}"), full(*score)));
    }
    machine.push((format!("{prefix}.order"), ranking.order_string()));
    for (key, value) in &ranking.config_echo {
        machine.push((format!("{prefix}.config.{key}"), value.clone()));
    }
}

fn audit_markdown(audit: &AuditReport, out: &mut String, machine: &mut Vec<(String, String)>) {
    let verdict = if audit.is_robust_on_budget {
        "robust on budget (no counterexample found)".to_string()
    } else {
        format!(
            "not robust ({} counterexamples)",
            audit.counterexamples.len()
        )
    };
    let c = &audit.config;
    let _ = writeln!(out, "Measure: {}\n", audit.measure_name);
    let _ = writeln!(out, "Verdict: {verdict}\n");
    let _ = writeln!(
        out,
        "Search: {} samples of budget {}, eps {}, delta {}, seed {}\n",
        audit.samples_used,
        c.budget,
        human(c.eps),
        human(c.delta),
        c.seed
    );
    machine.push(("measure".into(), audit.measure_name.clone()));
    machine.push((
        "robust_on_budget".into(),
        audit.is_robust_on_budget.to_string(),
    ));
    machine.push(("samples_used".into(), audit.samples_used.to_string()));
    if audit.counterexamples.is_empty() {
        return;
    }
    let mut table = Table::new(&[
        "#",
        "First",
        "Second",
        "NIS distance",
        "PIS distance (first)",
        "PIS distance (second)",
    ]);
    for (k, x) in audit.counterexamples.iter().enumerate() {
        table.row(vec![
            (k + 1).to_string(),
            pair(x.first),
            pair(x.second),
            human(x.nis_distance),
            human(x.pis_distance_first),
            human(x.pis_distance_second),
        ]);
        let key = |field: &str| format!("counterexample.{}.{field}", k + 1);
        machine.push((
            key("first"),
            format!("{},{}", full(x.first.mu()), full(x.first.nu())),
        ));
        machine.push((
            key("second"),
            format!("{},{}", full(x.second.mu()), full(x.second.nu())),
        ));
        machine.push((
            key("nis"),
            format!("{},{}", full(x.nis_distance), full(x.nis_distance_second)),
        ));
        machine.push((
            key("pis"),
            format!(
                "{},{}",
                full(x.pis_distance_first),
                full(x.pis_distance_second)
            ),
        ));
    }
    table.write(out);
}

fn csv_bytes(report: &Report) -> Result<Vec<u8>> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Output(e.to_string());
    match &report.body {
        Body::Rankings { rankings } => {
            writer
                .write_record(["method", "alternative", "score", "rank"])
                .map_err(fail)?;
            for r in rankings {
                for (i, name) in r.alternatives.iter().enumerate() {
                    let rank = r.rank_of(i).map_or(0, |g| g + 1);
                    writer
                        .write_record([
                            r.method.clone(),
                            name.clone(),
                            full(r.scores[i]),
                            rank.to_string(),
                        ])
                        .map_err(fail)?;
                }
            }
        }
        Body::Audit { audit, .. } => {
            writer
                .write_record([
                    "measure",
                    "robust_on_budget",
                    "samples_used",
                    "first_mu",
                    "first_nu",
                    "second_mu",
                    "second_nu",
                    "nis_first",
                    "nis_second",
                    "pis_first",
                    "pis_second",
                ])
                .map_err(fail)?;
            let head = [
                audit.measure_name.clone(),
                audit.is_robust_on_budget.to_string(),
                audit.samples_used.to_string(),
            ];
            if audit.counterexamples.is_empty() {
                let mut row = head.to_vec();
                row.extend(std::iter::repeat_n(String::new(), 8));
                writer.write_record(row).map_err(fail)?;
            }
            for x in &audit.counterexamples {
                let mut row = head.to_vec();
                row.extend(
                    [
                        x.first.mu(),
                        x.first.nu(),
                        x.second.mu(),
                        x.second.nu(),
                        x.nis_distance,
                        x.nis_distance_second,
                        x.pis_distance_first,
                        x.pis_distance_second,
                    ]
                    .map(full),
                );
                writer.write_record(row).map_err(fail)?;
            }
        }
        Body::Hypervolume {
            points,
            dimensions,
            reference,
            volume,
            estimate,
        } => {
            writer
                .write_record([
                    "points",
                    "dimensions",
                    "reference",
                    "volume",
                    "mc_samples",
                    "mc_seed",
                    "mc_estimate",
                    "mc_stderr",
                ])
                .map_err(fail)?;
            let mut row = vec![
                points.to_string(),
                dimensions.to_string(),
                reference
                    .iter()
                    .map(|&r| full(r))
                    .collect::<Vec<_>>()
                    .join(","),
                full(*volume),
            ];
            match estimate {
                Some(e) => row.extend([
                    e.samples.to_string(),
                    e.seed.to_string(),
                    full(e.value),
                    full(e.stderr),
                ]),
                None => row.extend(std::iter::repeat_n(String::new(), 4)),
            }
            writer.write_record(row).map_err(fail)?;
        }
        Body::Axioms { reports } => {
            writer
                .write_record([
                    "measure",
                    "samples",
                    "symmetry_ok",
                    "identity_ok",
                    "triangle_ok",
                    "witnesses",
                ])
                .map_err(fail)?;
            for r in reports {
                writer
                    .write_record([
                        r.measure_name.clone(),
                        r.samples.to_string(),
                        r.symmetry_ok.to_string(),
                        r.identity_ok.to_string(),
                        r.triangle_ok.to_string(),
                        r.witnesses.len().to_string(),
                    ])
                    .map_err(fail)?;
            }
        }
    }
    writer
        .into_inner()
        .map_err(|e| CliError::Output(e.to_string()))
}
