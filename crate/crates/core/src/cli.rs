//! Command line front end. Everything is printed as JSON unless `--format` asks otherwise.
//!
//! Exit codes: 0 on success, 1 when a mathematical precondition fails or a comparison
//! finds a mismatch, 2 on usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::diagrams::{is_in_y_gamma, PeriodicSkewDiagram, SkewDiagram};
use crate::error::{Error, Result};
use crate::genfun::{gf_classical_formula, gf_enumerated, gf_periodic_formula, gf_single_column, single_column};
use crate::plane_partitions::{enumerate_pp, kostka, kostka_restricted, weight, PpVariant, Shape};
use crate::qalgebra::{char_equal, int, is_integer, parse_rational, to_i64, QSeries, Rational};
use crate::representation::{
    character_l, character_standard, classify, restriction_decomposition, single_column_report,
    spherical_character, spherical_character_by_rank, spherical_character_formula, spherical_dims,
    window, Sign, TableauModule, DEFINING_RELATIONS,
};
use crate::tableaux::{enumerate_restricted, enumerate_st, enumerate_st_gamma, tableau_json};

#[derive(Parser, Debug)]
#[command(name = "cylindric", version, about = "Cylindric diagrams, tableaux and the modules built on them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Spread the work over threads; output is identical.
    #[arg(long, global = true)]
    parallel: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Periodic skew diagrams.
    Diagram {
        #[command(subcommand)]
        action: DiagramCmd,
    },
    /// Standard tableaux, classical or periodic.
    Tableaux {
        #[command(subcommand)]
        action: TableauxCmd,
    },
    /// Plane partitions.
    Pp {
        #[command(subcommand)]
        action: PpCmd,
    },
    /// Kostka polynomials of a skew shape, or the level-restricted one with `--level`.
    Kostka {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Restrict to level `kappa - m` (requires an integral `--kappa`).
        #[arg(long)]
        level: bool,
    },
    /// Generating functions of plane partitions.
    Gf {
        #[command(subcommand)]
        action: GfCmd,
    },
    /// The tableau representation.
    Rep {
        #[command(subcommand)]
        action: RepCmd,
    },
    /// Whether `L(lambda)` has a weight decomposition, with the obstruction check.
    Classify {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Largest `j - i` in the obstruction scan; defaults to `3n`.
        #[arg(long)]
        span: Option<i64>,
    },
}

#[derive(Subcommand, Debug)]
enum DiagramCmd {
    Check {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Copies on each side for the brute-force check.
        #[arg(long, default_value_t = 3)]
        copies: i64,
    },
    Render {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value_t = 1)]
        copies: i64,
    },
}

#[derive(Subcommand, Debug)]
enum TableauxCmd {
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Only level-restricted tableaux of the fundamental domain.
        #[arg(long)]
        restricted: bool,
    },
    Count {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        restricted: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PpCmd {
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        variant: VariantArgs,
    },
    Gf {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        variant: VariantArgs,
    },
}

#[derive(Subcommand, Debug)]
enum GfCmd {
    /// Closed form only.
    Formula {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        variant: VariantArgs,
    },
    /// Closed form against enumeration; exit 1 on mismatch.
    Compare {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        variant: VariantArgs,
    },
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    /// Check relation families on every basis vector of the window.
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Comma separated families among R1..R5, X, Y.
        #[arg(long, value_delimiter = ',')]
        families: Option<Vec<String>>,
    },
    /// Fibers of the restriction to the affine Hecke algebra, with spherical dimensions.
    Restrict {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Character of `L(lambda)`.
    Character {
        #[command(flatten)]
        shape: ShapeArgs,
    },
    /// Character of `e_+ L(lambda)` or `e_- L(lambda)`.
    Spherical {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: String,
    },
    /// The module on a single column at `kappa = n / r`.
    SingleColumn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long = "max", default_value_t = 8)]
        max: usize,
    },
}

#[derive(Args, Debug, Clone)]
struct ShapeArgs {
    /// Row lengths, e.g. `5,3`.
    #[arg(long, alias = "shape", value_delimiter = ',', allow_hyphen_values = true)]
    lambda: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    mu: Option<Vec<String>>,
    /// Number of rows; shorter `lambda` and `mu` are padded with zeros.
    #[arg(long)]
    m: Option<usize>,
    /// Exact fraction `s/r`; makes the shape periodic.
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<String>,
    /// Single column of height `n` at `kappa = n / r` (with `--r`).
    #[arg(long)]
    column: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Largest weight or degree.
    #[arg(long = "max", default_value_t = 8)]
    max: i64,
}

#[derive(Args, Debug, Clone)]
struct VariantArgs {
    /// `W` (weak), `R` (row strict) or `C` (column strict).
    #[arg(long, default_value = "W")]
    variant: String,
    /// Use the periodic diagram (needs `--kappa` or `--column`).
    #[arg(long)]
    periodic: bool,
}

enum Built {
    Classical(SkewDiagram),
    Periodic(PeriodicSkewDiagram),
}

impl ShapeArgs {
    fn rows(&self) -> Result<(Vec<Rational>, Vec<Rational>)> {
        let parse = |v: &Option<Vec<String>>| -> Result<Vec<Rational>> {
            v.iter().flatten().map(|s| parse_rational(s.trim())).collect()
        };
        self.kappa()?;
        let mut lambda = parse(&self.lambda)?;
        let mut mu = parse(&self.mu)?;
        if lambda.is_empty() {
            return Err(Error::Parse("--lambda is required".into()));
        }
        let m = self.m.unwrap_or(lambda.len());
        if m < lambda.len() || m < mu.len() {
            return Err(Error::Parse(format!("--m {m} is smaller than the number of given rows")));
        }
        lambda.resize(m, int(0));
        mu.resize(m, int(0));
        Ok((lambda, mu))
    }

    fn kappa(&self) -> Result<Option<Rational>> {
        self.kappa.as_deref().map(parse_rational).transpose()
    }

    fn lambda_ints(&self) -> Result<Vec<i64>> {
        let (lambda, mu) = self.rows()?;
        if mu.iter().any(|x| *x != int(0)) {
            return Err(Error::Precondition("a partition is required here; drop --mu".into()));
        }
        lambda
            .iter()
            .map(|x| {
                if is_integer(x) {
                    Ok(to_i64(x))
                } else {
                    Err(Error::NonIntegerColumn(x.to_string()))
                }
            })
            .collect()
    }

    fn periodic(&self) -> Result<PeriodicSkewDiagram> {
        if let Some(n) = self.column {
            let r = self.r.ok_or_else(|| Error::Parse("--column needs --r".into()))?;
            return single_column(n, r);
        }
        let kappa = self.kappa()?.ok_or_else(|| Error::Parse("--kappa is required".into()))?;
        let (lambda, mu) = self.rows()?;
        PeriodicSkewDiagram::new(&lambda, &mu, kappa)
    }

    fn build(&self) -> Result<Built> {
        if self.kappa.is_some() || self.column.is_some() {
            return self.periodic().map(Built::Periodic);
        }
        let (lambda, mu) = self.rows()?;
        SkewDiagram::from_rows(&lambda, &mu).map(Built::Classical)
    }

    fn max_degree(&self) -> Result<usize> {
        usize::try_from(self.max).map_err(|_| Error::Parse("--max must be nonnegative".into()))
    }
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    value: Value,
    ascii: Option<String>,
    csv: Option<String>,
    ok: bool,
}

impl Report {
    fn json(value: Value) -> Self {
        Self { value, ascii: None, csv: None, ok: true }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = cli.format;
    let parallel = cli.parallel;
    match dispatch(cli.command, parallel) {
        Ok(r) => {
            let stdout = match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&r.value).expect("serializable")),
                Format::Ascii => r.ascii.unwrap_or_else(|| ascii_of(&r.value)),
                Format::Csv => match r.csv {
                    Some(c) => c,
                    None => {
                        return Outcome {
                            code: 2,
                            stdout: String::new(),
                            stderr: "error: csv output is only available for enumerations and series\n".into(),
                        }
                    }
                },
            };
            Outcome { code: if r.ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

fn ascii_of(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            let mut out = String::new();
            for (k, x) in map {
                let s = match x {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("{k}: {s}\n"));
            }
            out
        }
        other => format!("{other}\n"),
    }
}

fn series_csv(s: &QSeries) -> String {
    let mut out = String::from("degree,coefficient\n");
    for (d, c) in s.coeffs().iter().enumerate() {
        out.push_str(&format!("{d},{c}\n"));
    }
    out
}

fn rows_csv<T: std::fmt::Display>(header: &str, rows: &[Vec<T>]) -> String {
    let mut out = format!("{header}\n");
    for r in rows {
        out.push_str(&r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";"));
        out.push('\n');
    }
    out
}

fn dispatch(cmd: Command, parallel: bool) -> Result<Report> {
    match cmd {
        Command::Diagram { action } => diagram(action),
        Command::Tableaux { action } => tableaux(action),
        Command::Pp { action } => pp(action),
        Command::Kostka { shape, level } => kostka_cmd(&shape, level),
        Command::Gf { action } => gf(action),
        Command::Rep { action } => rep(action, parallel),
        Command::Classify { shape, span } => {
            let kappa = shape.kappa()?.ok_or_else(|| Error::Parse("--kappa is required".into()))?;
            let c = classify(&shape.lambda_ints()?, &kappa, span)?;
            Ok(Report { ok: c.consistent(), ..Report::json(c.to_json()) })
        }
    }
}

fn diagram(action: DiagramCmd) -> Result<Report> {
    match action {
        DiagramCmd::Check { shape, copies } => {
            let kappa = shape.kappa()?.ok_or_else(|| Error::Parse("--kappa is required".into()))?;
            let (lambda, mu) = shape.rows()?;
            let d = PeriodicSkewDiagram::new_unchecked(&lambda, &mu, kappa.clone())?;
            let valid = d.is_valid();
            let value = json!({
                "diagram": d.describe(),
                "kappa": kappa.to_string(),
                "valid": valid,
                "in_y_gamma": is_in_y_gamma(&lambda, &mu, &kappa),
                "window_check": d.check_periodic_window(copies),
                "integral": d.is_integral(),
                "generic": valid && d.is_generic(),
                "cells": d.fundamental().to_json(),
            });
            Ok(Report { ok: valid, ..Report::json(value) })
        }
        DiagramCmd::Render { shape, copies } => {
            let d = shape.periodic()?;
            let pic = d.render(copies, None);
            Ok(Report {
                ascii: Some(pic.clone()),
                ..Report::json(json!({"diagram": d.to_json(), "render": pic}))
            })
        }
    }
}

fn tableaux(action: TableauxCmd) -> Result<Report> {
    let (shape, restricted, count) = match action {
        TableauxCmd::Enumerate { shape, restricted } => (shape, restricted, false),
        TableauxCmd::Count { shape, restricted } => (shape, restricted, true),
    };
    match shape.build()? {
        Built::Classical(theta) => {
            if restricted {
                return Err(Error::LevelRequiresPositiveInteger("none given".into()));
            }
            let ts = enumerate_st(&theta);
            if count {
                return Ok(Report::json(json!({"count": ts.len()})));
            }
            let list: Vec<Value> = ts.iter().map(|t| tableau_json(theta.cells(), t)).collect();
            Ok(Report { csv: Some(rows_csv("values", &ts)), ..Report::json(json!({"count": ts.len(), "tableaux": list})) })
        }
        Built::Periodic(d) if restricted => {
            let ts = enumerate_restricted(&d)?;
            if count {
                return Ok(Report::json(json!({"count": ts.len()})));
            }
            let list: Vec<Value> = ts.iter().map(|t| tableau_json(d.cells(), t)).collect();
            Ok(Report { csv: Some(rows_csv("values", &ts)), ..Report::json(json!({"count": ts.len(), "tableaux": list})) })
        }
        Built::Periodic(d) => {
            let fibers = enumerate_st_gamma(&d, shape.max);
            let mut by_weight = vec![0usize; shape.max.max(0) as usize + 1];
            for f in &fibers {
                by_weight[f.weight() as usize] += f.tableaux.len();
            }
            let total: usize = by_weight.iter().sum();
            if count {
                return Ok(Report::json(json!({"count": total, "by_weight": by_weight})));
            }
            let list: Vec<Value> = fibers
                .iter()
                .map(|f| {
                    json!({
                        "p": f.p,
                        "tableaux": f.tableaux.iter().map(|t| tableau_json(d.cells(), t)).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let all: Vec<Vec<i64>> = fibers.iter().flat_map(|f| f.tableaux.clone()).collect();
            Ok(Report {
                csv: Some(rows_csv("values", &all)),
                ..Report::json(json!({"count": total, "by_weight": by_weight, "fibers": list}))
            })
        }
    }
}

fn with_shape<T>(built: &Built, f: impl FnOnce(&Shape) -> T) -> T {
    match built {
        Built::Classical(t) => f(&Shape::Classical(t)),
        Built::Periodic(d) => f(&Shape::Periodic(d)),
    }
}

fn shape_for(shape: &ShapeArgs, v: &VariantArgs) -> Result<Built> {
    if v.periodic {
        shape.periodic().map(Built::Periodic)
    } else {
        let (lambda, mu) = shape.rows()?;
        SkewDiagram::from_rows(&lambda, &mu).map(Built::Classical)
    }
}

fn pp(action: PpCmd) -> Result<Report> {
    match action {
        PpCmd::Enumerate { shape, variant } => {
            let var = PpVariant::parse(&variant.variant)?;
            let built = shape_for(&shape, &variant)?;
            let pps = with_shape(&built, |s| enumerate_pp(s, var, shape.max));
            let list: Vec<Value> = pps.iter().map(|p| json!({"p": p, "weight": weight(p)})).collect();
            Ok(Report {
                csv: Some(rows_csv("p", &pps)),
                ..Report::json(json!({"variant": var.name(), "count": pps.len(), "plane_partitions": list}))
            })
        }
        PpCmd::Gf { shape, variant } => {
            let var = PpVariant::parse(&variant.variant)?;
            let built = shape_for(&shape, &variant)?;
            let max = shape.max_degree()?;
            let s = with_shape(&built, |sh| gf_enumerated(sh, var, max));
            Ok(Report {
                ascii: Some(format!("{s}\n")),
                csv: Some(series_csv(&s)),
                ..Report::json(json!({"variant": var.name(), "gf": s.to_json()}))
            })
        }
    }
}

fn kostka_cmd(shape: &ShapeArgs, level: bool) -> Result<Report> {
    if level {
        let d = shape.periodic()?;
        let k = kostka_restricted(&d)?;
        let ell = d.kappa() - int(d.m() as i64);
        return Ok(Report {
            ascii: Some(format!("{k}\n")),
            ..Report::json(json!({"level": ell.to_string(), "Kcheck": k.to_string(), "Kcheck_coeffs": k.to_json()}))
        });
    }
    let (lambda, mu) = shape.rows()?;
    let theta = SkewDiagram::from_rows(&lambda, &mu)?;
    let (kc, k) = kostka(&theta);
    Ok(Report {
        ascii: Some(format!("Kcheck = {kc}\nK = {k}\n")),
        ..Report::json(json!({
            "Kcheck": kc.to_string(),
            "K": k.to_string(),
            "Kcheck_coeffs": kc.to_json(),
            "K_coeffs": k.to_json(),
        }))
    })
}

fn gf(action: GfCmd) -> Result<Report> {
    let (shape, variant, compare) = match action {
        GfCmd::Formula { shape, variant } => (shape, variant, false),
        GfCmd::Compare { shape, variant } => (shape, variant, true),
    };
    let var = PpVariant::parse(&variant.variant)?;
    let max = shape.max_degree()?;
    let (formula, built) = if let (Some(n), Some(r)) = (shape.column, shape.r) {
        (gf_single_column(n, r, var, max)?, Built::Periodic(single_column(n, r)?))
    } else if variant.periodic {
        if var != PpVariant::ColumnStrict {
            return Err(Error::Precondition(
                "the periodic closed form is for column-strict plane partitions at integral kappa".into(),
            ));
        }
        let d = shape.periodic()?;
        (gf_periodic_formula(&d, max)?, Built::Periodic(d))
    } else {
        let (lambda, mu) = shape.rows()?;
        let theta = SkewDiagram::from_rows(&lambda, &mu)?;
        (gf_classical_formula(&theta, var, max)?, Built::Classical(theta))
    };
    if !compare {
        return Ok(Report {
            ascii: Some(format!("{formula}\n")),
            csv: Some(series_csv(&formula)),
            ..Report::json(json!({"variant": var.name(), "formula": formula.to_json()}))
        });
    }
    let enumerated = with_shape(&built, |s| gf_enumerated(s, var, max));
    let agree = enumerated == formula;
    Ok(Report {
        ascii: Some(format!("formula    {formula}\nenumerated {enumerated}\nagree      {agree}\n")),
        ok: agree,
        ..Report::json(json!({
            "variant": var.name(),
            "formula": formula.to_json(),
            "enumerated": enumerated.to_json(),
            "agree": agree,
        }))
    })
}

fn rep(action: RepCmd, parallel: bool) -> Result<Report> {
    match action {
        RepCmd::Verify { shape, families } => {
            let d = shape.periodic()?;
            let families: Vec<String> =
                families.unwrap_or_else(|| DEFINING_RELATIONS.iter().map(|s| s.to_string()).collect());
            let names: Vec<&str> = families.iter().map(String::as_str).collect();
            let basis: Vec<Vec<i64>> =
                enumerate_st_gamma(&d, shape.max).into_iter().flat_map(|f| f.tableaux).collect();
            let reports = TableauModule::new(d.clone())
                .verify_relations(&basis, &window(shape.max), &names, parallel)?;
            let ok = reports.iter().all(|r| r.passed());
            Ok(Report {
                ok,
                ..Report::json(json!({
                    "diagram": d.to_json(),
                    "max_weight": shape.max,
                    "basis": basis.len(),
                    "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                    "passed": ok,
                }))
            })
        }
        RepCmd::Restrict { shape } => {
            let d = shape.periodic()?;
            let summands = restriction_decomposition(&d, shape.max)?;
            let dims = spherical_dims(&d, shape.max)?;
            let ok = summands.iter().all(|s| s.matches_level_module) && dims.iter().all(|s| s.agree());
            Ok(Report {
                ok,
                ..Report::json(json!({
                    "window_dim": summands.iter().map(|s| s.dim).sum::<usize>(),
                    "summands": summands.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                    "spherical": dims.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                    "consistent": ok,
                }))
            })
        }
        RepCmd::Character { shape } => {
            let kappa = shape.kappa()?.ok_or_else(|| Error::Parse("--kappa is required".into()))?;
            let lambda = shape.lambda_ints()?;
            let max = shape.max_degree()?;
            let ch = character_l(&lambda, &kappa, max)?;
            let d = PeriodicSkewDiagram::from_partitions(&lambda, &[], kappa.clone())?;
            let mut value = json!({"character": ch.to_json(), "string": ch.to_string(), "generic": d.is_generic()});
            if d.is_generic() {
                let st = character_standard(&lambda, &kappa, max)?;
                value["standard"] = st.to_json();
                value["equals_standard"] = json!(char_equal(&ch, &st));
            }
            Ok(Report { ascii: Some(format!("{ch}\n")), ..Report::json(value) })
        }
        RepCmd::Spherical { shape, sign } => {
            let kappa = shape.kappa()?.ok_or_else(|| Error::Parse("--kappa is required".into()))?;
            let sign = Sign::parse(&sign)?;
            let lambda = shape.lambda_ints()?;
            let max = shape.max_degree()?;
            let ch = spherical_character(&lambda, &kappa, sign, max)?;
            let by_rank = spherical_character_by_rank(&lambda, &kappa, sign, max)?;
            let mut ok = char_equal(&ch, &by_rank);
            let mut value = json!({
                "sign": if sign == Sign::Plus { "+" } else { "-" },
                "character": ch.to_json(),
                "string": ch.to_string(),
                "by_projector_rank": by_rank.to_json(),
            });
            if sign == Sign::Plus && is_integer(&kappa) {
                let f = spherical_character_formula(&lambda, &kappa, max)?;
                ok &= char_equal(&ch, &f);
                value["formula"] = f.to_json();
            }
            value["consistent"] = json!(ok);
            Ok(Report { ok, ascii: Some(format!("{ch}\n")), ..Report::json(value) })
        }
        RepCmd::SingleColumn { n, r, max } => {
            let rep = single_column_report(n, r, max)?;
            Ok(Report { ok: rep.all_match(), ..Report::json(rep.to_json()) })
        }
    }
}
