//! `crl` — exact computations for coincident root loci of binary forms.
//!
//! Subcommands: `degree` (two independent degree formulas), `singular`
//! (merge-set description of the singular locus), `ideal` (predicted and/or
//! brute-force graded ideal characters), `covariants` (criterion tables,
//! vanishing checks, calibration), and `char` (raw character arithmetic).
//!
//! Every command prints a human-readable summary by default and a
//! schema-versioned JSON envelope with `--json`.  Exit codes: 0 success,
//! 2 validation error, 3 computation budget exceeded, 4 cross-validation
//! mismatch.

mod expr;

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crl_core::charring::{self, Character};
use crl_core::covariants::{
    calibrate_combination, criterion_table, named_covariants, vanishes_on_locus,
};
use crl_core::encomplex::{complex_report, EncomplexError};
use crl_core::ideal_la::{
    graded_piece_kernel, minimal_generators_by_degree, IdealError, KernelConfig,
};
use crl_core::partitions::{MergeElement, MergeWitness, Partition};

#[derive(Parser)]
#[command(
    name = "crl",
    version,
    about = "Exact equations, characters, and degrees of coincident root loci of binary forms"
)]
struct Cli {
    /// Emit a machine-readable JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Report wall-clock time (populates `timing_ms` in JSON output).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree of X_lambda by two independent formulas.
    Degree {
        /// Partition as a comma list, e.g. "3,2".
        lambda: String,
    },
    /// Singular locus of X_lambda as merged partitions with witnesses.
    Singular {
        /// Partition as a comma list, e.g. "3,2,2".
        lambda: String,
    },
    /// The degree-m piece of the ideal of X_lambda.
    Ideal {
        /// Partition as a comma list, e.g. "3,2".
        lambda: String,
        /// Degree of the graded piece.
        m: u32,
        /// Computation method; "both" cross-validates the two.
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Also count new minimal generators in degrees 1..=N.
        #[arg(long, value_name = "N")]
        gens_up_to: Option<u32>,
    },
    /// Covariant criteria for a locus: table, vanishing check, calibration.
    Covariants {
        /// Partition of the locus, e.g. "3,2".
        #[arg(long)]
        locus: String,
        /// Base degree d of the forms (defaults to the locus size).
        #[arg(long, short = 'd')]
        base_degree: Option<u32>,
        /// Calibrate an integer combination of these expressions (repeat).
        #[arg(long, value_name = "EXPR")]
        calibrate: Vec<String>,
        /// Check whether one expression vanishes on the locus.
        #[arg(long, value_name = "EXPR", conflicts_with = "calibrate")]
        check: Option<String>,
    },
    /// Raw character arithmetic.
    Char {
        #[command(subcommand)]
        op: CharOp,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Predict,
    Kernel,
    Both,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Predict => "predict",
            Method::Kernel => "kernel",
            Method::Both => "both",
        }
    }
}

#[derive(Subcommand)]
enum CharOp {
    /// Clebsch-Gordan decomposition of s_m (x) s_n.
    Cg { m: u32, n: u32 },
    /// Character of Sym^m(Sym^n).
    Plethysm { m: u32, n: u32 },
    /// Character of Wedge^k(Sym^n).
    Wedge { k: u32, n: u32 },
    /// Tensor product of two character expressions such as "s3 + 2s1".
    Tensor { left: String, right: String },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn budget(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into() }
    }

    fn mismatch(message: impl Into<String>) -> Failure {
        Failure { code: 4, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }
}

fn ideal_failure(e: IdealError) -> Failure {
    match e {
        IdealError::Budget { .. } => Failure::budget(e.to_string()),
        IdealError::Groebner(_) => Failure::budget(e.to_string()),
        IdealError::Internal(_) => Failure::internal(e.to_string()),
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    text.parse::<Partition>()
        .map_err(|e| Failure::validation(format!("invalid partition '{text}': {e}")))
}

fn kernel_config() -> Result<KernelConfig, Failure> {
    let mut config = KernelConfig::default();
    if let Ok(raw) = std::env::var("CRL_MAX_DIM") {
        config.max_ambient_dim = raw.parse().map_err(|_| {
            Failure::validation(format!("CRL_MAX_DIM must be a positive integer, got '{raw}'"))
        })?;
    }
    Ok(config)
}

/// Everything a finished command hands to the printer.
struct Report {
    command: &'static str,
    lambda: Option<Partition>,
    parameters: Value,
    results: Value,
    assumptions: Vec<String>,
    certification: &'static str,
    warnings: Vec<String>,
    human: String,
}

fn emit(cli: &Cli, started: Instant, report: Report) {
    if cli.json {
        let timing: Value = if cli.timing {
            json!(u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX))
        } else {
            Value::Null
        };
        let envelope = json!({
            "assumptions": report.assumptions,
            "certification": report.certification,
            "command": report.command,
            "lambda": report.lambda.as_ref().map(Partition::to_json).unwrap_or(Value::Null),
            "parameters": report.parameters,
            "results": report.results,
            "schema_version": "1",
            "timing_ms": timing,
            "warnings": report.warnings,
        });
        println!("{}", serde_json::to_string_pretty(&envelope).expect("serializable"));
    } else {
        print!("{}", report.human);
        for warning in &report.warnings {
            println!("warning: {warning}");
        }
        if cli.timing {
            println!("elapsed: {} ms", started.elapsed().as_millis());
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(report) => {
            emit(&cli, started, report);
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Degree { lambda } => cmd_degree(lambda),
        Command::Singular { lambda } => cmd_singular(lambda),
        Command::Ideal { lambda, m, method, gens_up_to } => {
            cmd_ideal(lambda, *m, *method, *gens_up_to)
        }
        Command::Covariants { locus, base_degree, calibrate, check } => {
            cmd_covariants(locus, *base_degree, calibrate, check.as_deref())
        }
        Command::Char { op } => cmd_char(op),
    }
}

fn cmd_degree(lambda_text: &str) -> Result<Report, Failure> {
    let lambda = parse_partition(lambda_text)?;
    let by_multiplicity = lambda.crl_degree();
    let by_coefficient = lambda.de_jonquieres_degree();
    if by_multiplicity != by_coefficient {
        return Err(Failure::mismatch(format!(
            "degree formulas disagree for {lambda}: multiplicity formula gives \
             {by_multiplicity}, De Jonquieres coefficient gives {by_coefficient}"
        )));
    }
    let mut human = String::new();
    let _ = writeln!(
        human,
        "deg X{lambda} = {by_multiplicity}   [multiplicity formula]"
    );
    let _ = writeln!(
        human,
        "{:width$} = {by_coefficient}   [De Jonquieres coefficient]",
        "",
        width = format!("deg X{lambda}").len()
    );
    Ok(Report {
        command: "degree",
        lambda: Some(lambda),
        parameters: json!({ "lambda": lambda_text }),
        results: json!({
            "agree": true,
            "de_jonquieres": { "method": "formula", "value": by_coefficient.to_string() },
            "multiplicity_formula": { "method": "formula", "value": by_multiplicity.to_string() },
        }),
        assumptions: Vec::new(),
        certification: "not-applicable",
        warnings: Vec::new(),
        human,
    })
}

fn describe_witness(witness: &MergeWitness) -> String {
    match witness {
        MergeWitness::PairJoin { r1, r2 } => format!("join parts {r1} and {r2}"),
        MergeWitness::FoldInto { r1, r2, t } => {
            format!("fold {t} parts of size {r2} into an extra part {r1}")
        }
        MergeWitness::DoubleFold { r1, r2, r3, t1, t2 } => format!(
            "fold {t1} parts of size {r1} and {t2} parts of size {r2} into two parts {r3}"
        ),
    }
}

fn describe_case(human: &mut String, label: &str, elements: &[MergeElement]) {
    for element in elements {
        let witnesses: Vec<String> =
            element.witnesses.iter().map(describe_witness).collect();
        let _ = writeln!(
            human,
            "  case ({label}): {}   [{}]",
            element.merged,
            witnesses.join("; ")
        );
    }
}

fn cmd_singular(lambda_text: &str) -> Result<Report, Failure> {
    let lambda = parse_partition(lambda_text)?;
    let merge_set = lambda.singular_merge_set();
    let mut human = String::new();
    if merge_set.is_empty() {
        let _ = writeln!(human, "X{lambda} is smooth: the merge set is empty");
    } else {
        let total =
            merge_set.case_a.len() + merge_set.case_b.len() + merge_set.case_c.len();
        let noun = if total == 1 { "locus" } else { "loci" };
        let _ = writeln!(
            human,
            "singular locus of X{lambda}: union of {total} coarser {noun}"
        );
        describe_case(&mut human, "a", &merge_set.case_a);
        describe_case(&mut human, "b", &merge_set.case_b);
        describe_case(&mut human, "c", &merge_set.case_c);
    }
    Ok(Report {
        command: "singular",
        lambda: Some(lambda.clone()),
        parameters: json!({ "lambda": lambda_text }),
        results: json!({
            "is_smooth": merge_set.is_empty(),
            "merge_set": merge_set.to_json(),
            "method": "formula",
        }),
        assumptions: Vec::new(),
        certification: "not-applicable",
        warnings: Vec::new(),
        human,
    })
}

fn cmd_ideal(
    lambda_text: &str,
    m: u32,
    method: Method,
    gens_up_to: Option<u32>,
) -> Result<Report, Failure> {
    let lambda = parse_partition(lambda_text)?;
    let config = kernel_config()?;

    let mut results = serde_json::Map::new();
    let mut assumptions: Vec<String> = Vec::new();
    let mut warnings: Vec<String> = Vec::new();
    let mut certification = "not-applicable";
    let mut human = String::new();
    let _ = writeln!(
        human,
        "degree-{m} piece of the ideal of X{lambda} in P^{}",
        lambda.d()
    );

    // The prediction can be structurally unavailable (no known correction
    // term); that downgrades the run to kernel-only with a warning.
    let mut predicted: Option<Character> = None;
    let mut run_kernel = method != Method::Predict;
    if method != Method::Kernel {
        match complex_report(&lambda, m) {
            Ok(report) => {
                assumptions = report.assumptions.iter().map(|s| s.to_string()).collect();
                let mut prediction = report.to_json();
                prediction
                    .as_object_mut()
                    .expect("object")
                    .insert("method".into(), json!("complex-prediction"));
                let _ = writeln!(
                    human,
                    "  prediction [complex-prediction]: {}   (dim {})",
                    report.predicted,
                    report.predicted.dim()
                );
                predicted = Some(report.predicted);
                results.insert("prediction".into(), prediction);
            }
            Err(e @ EncomplexError::UnknownCorrection(_)) => {
                warnings.push(format!(
                    "{e}; falling back to the linear-algebra kernel"
                ));
                run_kernel = true;
            }
            Err(e @ EncomplexError::NegativeMultiplicity { .. }) => {
                return Err(Failure::mismatch(format!(
                    "prediction is invalid here ({e}); the vanishing assumptions fail \
                     in this degree"
                )));
            }
        }
    }

    let mut kernel_char: Option<Character> = None;
    if run_kernel {
        let piece = graded_piece_kernel(&lambda, m, &config).map_err(ideal_failure)?;
        certification = if piece.report.certified { "certified" } else { "uncertified" };
        let mut kernel = piece.report.to_json();
        kernel
            .as_object_mut()
            .expect("object")
            .insert("method".into(), json!("linear-algebra"));
        let _ = writeln!(
            human,
            "  kernel     [linear-algebra]:     {}   (dim {} of ambient {}, Hilbert value {}, {})",
            piece.report.character,
            piece.report.dim_ideal,
            piece.report.dim_ambient,
            piece.report.hilbert_value,
            certification
        );
        kernel_char = Some(piece.report.character.clone());
        results.insert("kernel".into(), kernel);
    }

    if let (Some(p), Some(k)) = (&predicted, &kernel_char) {
        if p != k {
            return Err(Failure::mismatch(format!(
                "prediction and kernel disagree for {lambda} in degree {m}: \
                 predicted {p}, computed {k}"
            )));
        }
        results.insert("cross_validation".into(), json!({ "match": true }));
        let _ = writeln!(human, "  cross-validation: match");
    }

    if let Some(up_to) = gens_up_to {
        let gens =
            minimal_generators_by_degree(&lambda, up_to, &config).map_err(ideal_failure)?;
        let by_degree: serde_json::Map<String, Value> =
            gens.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
        results.insert(
            "minimal_generators".into(),
            json!({ "by_degree": by_degree, "method": "linear-algebra" }),
        );
        let rendered: Vec<String> =
            gens.iter().map(|(deg, count)| format!("{deg}:{count}")).collect();
        let _ = writeln!(
            human,
            "  new minimal generators by degree: {}",
            rendered.join("  ")
        );
    }

    Ok(Report {
        command: "ideal",
        lambda: Some(lambda),
        parameters: json!({
            "gens_up_to": gens_up_to,
            "lambda": lambda_text,
            "m": m,
            "method": method.as_str(),
        }),
        results: Value::Object(results),
        assumptions,
        certification,
        warnings,
        human,
    })
}

fn cmd_covariants(
    locus_text: &str,
    base_degree: Option<u32>,
    calibrate: &[String],
    check: Option<&str>,
) -> Result<Report, Failure> {
    let lambda = parse_partition(locus_text)?;
    let d = base_degree.unwrap_or_else(|| lambda.d());
    if d != lambda.d() {
        return Err(Failure::validation(format!(
            "base degree {d} does not match the locus {lambda}, which lives on forms \
             of degree {}",
            lambda.d()
        )));
    }
    let named = named_covariants(d);
    let mut human = String::new();

    let (mode, results) = if !calibrate.is_empty() {
        let mut basis = Vec::with_capacity(calibrate.len());
        for text in calibrate {
            let c = expr::parse_covariant_expr(text, &named)
                .map_err(|e| Failure::validation(format!("in '{text}': {e}")))?;
            basis.push(c);
        }
        let vectors = calibrate_combination(&basis, &lambda)
            .map_err(|e| Failure::validation(e.to_string()))?;
        let rendered: Vec<Vec<String>> = vectors
            .iter()
            .map(|v| v.iter().map(|c| c.to_string()).collect())
            .collect();
        if vectors.is_empty() {
            let _ = writeln!(
                human,
                "no combination of [{}] vanishes on X{lambda}",
                calibrate.join(", ")
            );
        } else {
            for v in &rendered {
                let terms: Vec<String> = v
                    .iter()
                    .zip(calibrate)
                    .map(|(c, label)| format!("{c} * ({label})"))
                    .collect();
                let _ = writeln!(human, "vanishes on X{lambda}: {}", terms.join(" + "));
            }
        }
        (
            "calibrate",
            json!({
                "basis": calibrate,
                "method": "linear-algebra",
                "vanishing_combinations": rendered,
            }),
        )
    } else if let Some(text) = check {
        let c = expr::parse_covariant_expr(text, &named)
            .map_err(|e| Failure::validation(format!("in '{text}': {e}")))?;
        let vanishes =
            vanishes_on_locus(&c, &lambda).map_err(|e| Failure::validation(e.to_string()))?;
        let _ = writeln!(
            human,
            "{text} {} on X{lambda}",
            if vanishes { "vanishes" } else { "does not vanish" }
        );
        (
            "check",
            json!({
                "deg_coeffs": c.deg_coeffs(),
                "expression": text,
                "method": "formula",
                "nonzero": !c.is_zero(),
                "order": c.order(),
                "vanishes": vanishes,
            }),
        )
    } else {
        let table =
            criterion_table(d, &lambda).map_err(|e| Failure::validation(e.to_string()))?;
        let mut rows = Vec::new();
        let _ = writeln!(human, "covariant criteria for X{lambda} (forms of degree {d})");
        for (m, entries) in table {
            let mut entry_rows = Vec::new();
            for (label, c) in entries {
                let vanishes = vanishes_on_locus(&c, &lambda)
                    .map_err(|e| Failure::internal(e.to_string()))?;
                let _ = writeln!(
                    human,
                    "  degree {m}: {label}   type ({}, {})   {}",
                    c.deg_coeffs(),
                    c.order(),
                    if vanishes { "vanishes" } else { "DOES NOT VANISH" }
                );
                entry_rows.push(json!({
                    "deg_coeffs": c.deg_coeffs(),
                    "label": label,
                    "nonzero": !c.is_zero(),
                    "order": c.order(),
                    "vanishes": vanishes,
                }));
            }
            rows.push(json!({ "degree": m, "entries": entry_rows }));
        }
        ("table", json!({ "method": "formula", "table": rows }))
    };

    Ok(Report {
        command: "covariants",
        lambda: Some(lambda),
        parameters: json!({
            "base_degree": d,
            "calibrate": calibrate,
            "check": check,
            "locus": locus_text,
            "mode": mode,
        }),
        results,
        assumptions: Vec::new(),
        certification: "not-applicable",
        warnings: Vec::new(),
        human,
    })
}

fn parse_character(text: &str) -> Result<Character, Failure> {
    text.parse::<Character>()
        .map_err(|e| Failure::validation(format!("invalid character '{text}': {e}")))
}

fn cmd_char(op: &CharOp) -> Result<Report, Failure> {
    let (character, parameters) = match op {
        CharOp::Cg { m, n } => (
            charring::cg_tensor(*m, *n),
            json!({ "m": m, "n": n, "op": "cg" }),
        ),
        CharOp::Plethysm { m, n } => (
            charring::plethysm_sym_sym(*m, *n),
            json!({ "m": m, "n": n, "op": "plethysm" }),
        ),
        CharOp::Wedge { k, n } => (
            charring::wedge_sym(*k, *n),
            json!({ "k": k, "n": n, "op": "wedge" }),
        ),
        CharOp::Tensor { left, right } => {
            let product = charring::tensor(&parse_character(left)?, &parse_character(right)?);
            (product, json!({ "left": left, "op": "tensor", "right": right }))
        }
    };
    let human = format!("{character}   (dim {})\n", character.dim());
    Ok(Report {
        command: "char",
        lambda: None,
        parameters,
        results: json!({
            "character": character.to_json(),
            "dim": character.dim(),
            "method": "formula",
            "rendered": character.to_string(),
        }),
        assumptions: Vec::new(),
        certification: "not-applicable",
        warnings: Vec::new(),
        human,
    })
}
