//! `dpb`: tables, polynomials, identity checks and series evaluation for
//! the degenerate poly-Bernoulli family.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dpb_core::families::{self, Family};
use dpb_core::identities::{self, Identity, IdentityParams, IdentityReport, LambdaMode, Tables};
use dpb_core::parser::{self, ExprError};
use dpb_core::{LambdaPoly, DEFAULT_PRECISION};

use output::{OutputRecord, Row};

#[derive(Parser)]
#[command(
    name = "dpb",
    version,
    about = "Degenerate poly-Bernoulli numbers over Q[lambda]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print n!·[tⁿ] of a family's generating function for n = 0..N-1.
    Table {
        /// bernoulli | daehee | carlitz | poly-bernoulli | dpb | dpb-higher
        family: Family,
        #[command(flatten)]
        common: Common,
    },
    /// Print the Appell polynomial of a family in x.
    Poly {
        family: Family,
        #[command(flatten)]
        common: Common,
    },
    /// Check a catalog identity (or `all`) or an equation `lhs == rhs`.
    Verify {
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate a series expression, listing [tⁿ] and n!·[tⁿ].
    Eval {
        expr: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Polylogarithm order.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    k: i32,
    /// Order of the higher-order family.
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Row count (table), index (poly) or largest index checked (verify).
    #[arg(long)]
    n: Option<usize>,
    /// Number of series coefficients.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    order: usize,
    /// `symbolic`, or a rational value substituted for lambda.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    lambda: LambdaMode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized samples of `verify`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// A failure that maps to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<bool, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Table { family, common } => table(family, &common),
        Command::Poly { family, common } => poly(family, &common),
        Command::Verify { target, common } => verify(&target, &common),
        Command::Eval { expr, common } => eval(&expr, &common),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn render_value(v: &LambdaPoly, lambda: &LambdaMode) -> String {
    match lambda {
        LambdaMode::Symbolic => v.to_string(),
        LambdaMode::At(x) => v.eval(x).to_string(),
    }
}

fn record(descriptor: String, family: Option<Family>, c: &Common, rows: Vec<Row>) -> OutputRecord {
    OutputRecord {
        descriptor,
        k: family.is_none_or(Family::uses_k).then_some(c.k),
        r: family.is_none_or(Family::uses_r).then_some(c.r),
        lambda: c.lambda.clone(),
        rows,
    }
}

fn table(family: Family, c: &Common) -> CmdResult {
    let n = c.n.unwrap_or(c.order);
    if n > c.order {
        return Err(UsageError(format!("--n {n} exceeds --order {}", c.order)));
    }
    let table = families::table(family, c.k, c.r, n)?;
    let rows = table
        .entries
        .iter()
        .enumerate()
        .map(|(i, v)| Row::new(i, render_value(v, &c.lambda)))
        .collect();
    print!(
        "{}",
        record(family.to_string(), Some(family), c, rows).render(c.format)
    );
    Ok(true)
}

fn poly(family: Family, c: &Common) -> CmdResult {
    let n = c.n.ok_or_else(|| UsageError("poly needs --n".into()))?;
    let p = families::family_poly(family, c.k, c.r, n, c.order)?;
    let p = match &c.lambda {
        LambdaMode::Symbolic => p,
        LambdaMode::At(x) => p.map(|coeff| LambdaPoly::constant(coeff.eval(x))),
    };
    match c.format {
        Format::Text => println!("{p}"),
        _ => print!(
            "{}",
            record(
                family.to_string(),
                Some(family),
                c,
                vec![Row::new(n, p.to_string())]
            )
            .render(c.format)
        ),
    }
    Ok(true)
}

fn eval(text: &str, c: &Common) -> CmdResult {
    let series = parser::eval_str(text, c.order).map_err(|e| expr_error(text, &e))?;
    let coeffs = series.coeffs();
    let values = series.egf_values();
    let rows = coeffs
        .iter()
        .zip(&values)
        .enumerate()
        .map(|(n, (coeff, value))| Row {
            n,
            value: render_value(coeff, &c.lambda),
            sequence: Some(render_value(value, &c.lambda)),
        })
        .collect();
    print!(
        "{}",
        record(text.to_string(), None, c, rows).render(c.format)
    );
    Ok(true)
}

fn verify(target: &str, c: &Common) -> CmdResult {
    if target.contains("==") {
        let report = identities::check_equation(target, c.order, &c.lambda)
            .map_err(|e| expr_error(target, &e))?;
        print!(
            "{}",
            output::render_reports(std::slice::from_ref(&report), c.format)
        );
        return Ok(report.passed());
    }
    let params = IdentityParams::new(c.k, c.r, c.n.unwrap_or(12))
        .with_seed(c.seed)
        .with_lambda(c.lambda.clone());
    let ids: Vec<Identity> = if target == "all" {
        Identity::ALL.to_vec()
    } else {
        vec![target.parse()?]
    };
    let tables = Tables::for_params(&params)?;
    // entries are independent; results are collected back in catalog order
    let reports: Vec<Result<IdentityReport, _>> = std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|&id| {
                let (params, tables) = (&params, &tables);
                s.spawn(move || identities::verify_with_tables(id, params, tables))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("identity check panicked"))
            .collect()
    });
    let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
    print!("{}", output::render_reports(&reports, c.format));
    Ok(reports.iter().all(IdentityReport::passed))
}

/// The error message plus the input with the offending bytes underlined.
fn expr_error(input: &str, e: &ExprError) -> UsageError {
    let Some(span) = e.span() else {
        return UsageError(e.to_string());
    };
    let start = span.start.min(input.len());
    let end = span.end.clamp(start + 1, input.len().max(start + 1));
    let pad = input[..start].chars().count();
    let width = input
        .get(start..end)
        .map_or(1, |s| s.chars().count().max(1));
    UsageError(format!(
        "{e}\n  {input}\n  {}{}",
        " ".repeat(pad),
        "^".repeat(width)
    ))
}
