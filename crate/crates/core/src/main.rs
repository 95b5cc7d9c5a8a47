use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gencliff::expr::{self, ExprError, Value};
use gencliff::groups::{self, LieBasis};
use gencliff::verify::{self, VerifyReport};
use gencliff::{spectral, AlgebraContext, AlgebraElement, Limits};

#[derive(Parser)]
#[command(name = "gencliff", version, about = "Generalized Clifford algebra calculator")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Verification tolerance; 1e-9 applies each check's reference threshold.
    #[arg(long, default_value_t = verify::REFERENCE_TOL, global = true)]
    tol: f64,
    /// Lift the default caps on algebra and representation size.
    #[arg(long, global = true)]
    unbounded: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisKind {
    U,
    Su,
}

#[derive(Args)]
struct Algebra {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    d: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression; `-` reads it from stdin.
    Eval {
        #[command(flatten)]
        alg: Algebra,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Multiplication table of the non-scalar basis monomials.
    Table {
        #[command(flatten)]
        alg: Algebra,
    },
    /// Characteristic polynomial coefficients and determinant of an element.
    Charpoly {
        #[command(flatten)]
        alg: Algebra,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Basis of the unitary or special unitary Lie algebra.
    Basis {
        #[arg(value_enum)]
        kind: BasisKind,
        #[command(flatten)]
        alg: Algebra,
    },
    /// The su(3) basis of Cl^(1/3)_2 and its relation to the Gell-Mann matrices.
    #[command(name = "su3-tables")]
    Su3Tables,
    /// Run the self-check suite on one algebra, or on all default ones.
    Verify {
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

enum Failure {
    Expr(ExprError),
    Lib(gencliff::Error),
    Input(String),
    Verification,
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Expr(e)
    }
}

impl From<gencliff::Error> for Failure {
    fn from(e: gencliff::Error) -> Self {
        Failure::Lib(e)
    }
}

struct StderrLogger;

impl log::Log for StderrLogger {
    fn enabled(&self, metadata: &log::Metadata) -> bool {
        metadata.level() <= log::Level::Warn
    }

    fn log(&self, record: &log::Record) {
        if self.enabled(record.metadata()) {
            eprintln!("warning: {}", record.args());
        }
    }

    fn flush(&self) {}
}

fn main() -> ExitCode {
    if log::set_logger(&StderrLogger).is_ok() {
        log::set_max_level(log::LevelFilter::Warn);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(2),
        Err(f) => {
            report(&f, format);
            ExitCode::from(1)
        }
    }
}

// A closed pipe (`gencliff table | head`) is not an error worth a panic.
fn emit(out: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{out}").and_then(|_| stdout.flush());
}

fn report(f: &Failure, format: Format) {
    let (kind, position, message) = match f {
        Failure::Expr(e) => (e.kind.as_str(), Some(e.position), e.message.clone()),
        Failure::Lib(e) => ("eval", None, e.to_string()),
        Failure::Input(msg) => ("input", None, msg.clone()),
        Failure::Verification => ("verification", None, String::new()),
    };
    match format {
        Format::Json => {
            let err = json!({ "error": { "kind": kind, "position": position, "message": message } });
            eprintln!("{err}");
        }
        Format::Text => match position {
            Some(p) => eprintln!("error: {kind} error at position {p}: {message}"),
            None => eprintln!("error: {message}"),
        },
    }
}

fn context(cli: &Cli, m: u32, d: u32) -> Result<AlgebraContext, Failure> {
    let limits = if cli.unbounded { Limits::unbounded() } else { Limits::default() };
    Ok(AlgebraContext::with_limits(m, d, limits)?)
}

fn read_expr(arg: &str) -> Result<String, Failure> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).unwrap_or_default()
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Eval { alg, expr } => {
            let ctx = context(&cli, alg.m, alg.d)?;
            let value = expr::eval_str(&read_expr(expr)?, &ctx)?;
            Ok(match format {
                Format::Text => value.to_string(),
                Format::Json => value.to_json_value().to_string(),
            })
        }
        Command::Table { alg } => {
            let ctx = context(&cli, alg.m, alg.d)?;
            Ok(match format {
                Format::Text => table_text(&ctx),
                Format::Json => pretty(&table_json(&ctx)),
            })
        }
        Command::Charpoly { alg, expr } => {
            let ctx = context(&cli, alg.m, alg.d)?;
            let u = match expr::eval_str(&read_expr(expr)?, &ctx)? {
                Value::Element(u) => u,
                Value::Scalar(c) => AlgebraElement::scalar(&ctx, c),
                other => {
                    return Err(Failure::Input(format!(
                        "charpoly needs an element, got a {}",
                        other.kind_name()
                    )))
                }
            };
            let cp = spectral::faddeev_leverrier(&u);
            Ok(match format {
                Format::Text => Value::CharPoly(cp).to_string(),
                Format::Json => cp.to_json(),
            })
        }
        Command::Basis { kind, alg } => {
            let ctx = context(&cli, alg.m, alg.d)?;
            let basis = match kind {
                BasisKind::U => groups::unitary_lie_basis(&ctx),
                BasisKind::Su => groups::special_unitary_lie_basis(&ctx),
            };
            Ok(basis_output(&basis, format))
        }
        Command::Su3Tables => su3_output(format),
        Command::Verify { m, d, seed } => {
            let configs = match (m, d) {
                (Some(m), Some(d)) => vec![(*m, *d)],
                (None, None) => verify::default_configurations(),
                _ => return Err(Failure::Input("--m and --d must be given together".into())),
            };
            let mut reports = Vec::new();
            for (m, d) in configs {
                let ctx = context(&cli, m, d)?;
                reports.push(verify::verify_config(&ctx, *seed, cli.tol)?);
            }
            let out = match format {
                Format::Text => verify_text(&reports),
                Format::Json => pretty(&json!(reports)),
            };
            if reports.iter().all(VerifyReport::passed) {
                Ok(out)
            } else {
                emit(&out);
                Err(Failure::Verification)
            }
        }
    }
}

fn phase_label(phase: u32) -> String {
    match phase {
        0 => String::new(),
        1 => "w".into(),
        k => format!("w{k}"),
    }
}

fn table_cells(ctx: &AlgebraContext) -> (Vec<String>, Vec<Vec<String>>) {
    let order = ctx.display_order();
    let labels = order.iter().map(|j| j.to_string()).collect();
    let rows = order
        .iter()
        .map(|a| {
            order
                .iter()
                .map(|b| {
                    let p = ctx.monomial_product(a, b);
                    let label = phase_label(p.phase);
                    if label.is_empty() {
                        p.exponents.to_string()
                    } else {
                        format!("{label}*{}", p.exponents)
                    }
                })
                .collect()
        })
        .collect();
    (labels, rows)
}

/// Row label is the left factor, column label the right factor.
fn table_text(ctx: &AlgebraContext) -> String {
    let (labels, rows) = table_cells(ctx);
    let corner = "1st\\2nd".to_string();
    let mut lines: Vec<Vec<String>> = vec![std::iter::once(corner).chain(labels.iter().cloned()).collect()];
    for (label, row) in labels.iter().zip(rows) {
        lines.push(std::iter::once(label.clone()).chain(row).collect());
    }
    let cols = lines[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = format!("{ctx}, w = exp(2*pi*i/{})\n", ctx.m());
    for line in &lines {
        let text: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(text.join("  ").trim_end());
        out.push('\n');
    }
    out.pop();
    out
}

fn table_json(ctx: &AlgebraContext) -> serde_json::Value {
    let order = ctx.display_order();
    let products: Vec<Vec<serde_json::Value>> = order
        .iter()
        .map(|a| {
            order
                .iter()
                .map(|b| {
                    let p = ctx.monomial_product(a, b);
                    json!({ "phase": p.phase, "exponents": p.exponents.exponents() })
                })
                .collect()
        })
        .collect();
    json!({
        "m": ctx.m(),
        "d": ctx.d(),
        "monomials": order.iter().map(|j| j.exponents().to_vec()).collect::<Vec<_>>(),
        "products": products,
    })
}

fn basis_output(basis: &LieBasis, format: Format) -> String {
    match format {
        Format::Text => basis
            .elements
            .iter()
            .enumerate()
            .map(|(k, x)| format!("X{k} = {x}"))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let items: Vec<_> = basis.elements.iter().map(|x| x.to_json_value()).collect();
            json!(items).to_string()
        }
    }
}

fn su3_output(format: Format) -> Result<String, Failure> {
    let ctx = AlgebraContext::new(3, 2)?;
    let t = groups::su3_tables(&ctx)?;
    Ok(match format {
        Format::Json => {
            let mats = |v: &[gencliff::ComplexMatrix]| v.iter().map(|a| a.to_json_value()).collect::<Vec<_>>();
            pretty(&json!({
                "tau": t.tau.iter().map(|x| x.to_json_value()).collect::<Vec<_>>(),
                "beta_tau": mats(&t.beta_tau),
                "gell_mann": mats(&t.gell_mann),
                "theta": mats(&t.theta),
                "tau_to_theta": t.tau_to_theta,
                "theta_to_tau": t.theta_to_tau,
            }))
        }
        Format::Text => {
            let mut out = String::new();
            for (k, x) in t.tau.iter().enumerate() {
                out.push_str(&format!("tau_{} = {x}\n", k + 1));
            }
            let rows = |name: &str, over: &str, table: &[[f64; 8]; 8]| {
                table
                    .iter()
                    .enumerate()
                    .map(|(j, row)| {
                        let terms: Vec<String> = row
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| **c != 0.0)
                            .map(|(k, c)| format!("{c:+.12} {over}_{}", k + 1))
                            .collect();
                        format!("{name}_{} = {}\n", j + 1, terms.join(" "))
                    })
                    .collect::<String>()
            };
            out.push_str(&rows("beta", "theta", &t.tau_to_theta));
            out.push_str(&rows("theta", "beta", &t.theta_to_tau));
            out.pop();
            out
        }
    })
}

fn verify_text(reports: &[VerifyReport]) -> String {
    let mut out = Vec::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        out.push(format!("Cl^(1/{})_{} seed={}: {status}", r.m, r.d, r.seed));
        for c in &r.checks {
            let mark = if c.passed { "ok" } else { "FAILED" };
            out.push(format!(
                "  {:<30} {:>4} samples  worst {:.3e}  limit {:.1e}  {mark}",
                c.name, c.samples, c.worst, c.limit
            ));
        }
    }
    out.join("\n")
}
