//! The `jackalg` command line.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cms::{self, pieri_expand_e};
use crate::deformed::{self, ShiftedConvention, SuperJackMethod};
use crate::error::{Error, Result};
use crate::ideals::{ideal_project, Filter};
use crate::multipoly::MultiPoly;
use crate::partitions::Partition;
use crate::ratfun::{parse_rational, BigRational};
use crate::shifted::{self, ShiftedMethod};
use crate::symfunc::{expand_in_variables, Basis, SymFn};
use crate::verify::{self, Bounds, Suite};

#[derive(Parser, Debug)]
#[command(name = "jackalg", version, about = "Exact Jack, shifted Jack and super-Jack polynomials over Q(θ)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Specialize θ to a rational number such as 1/2.
    #[arg(long, value_parser = parse_theta)]
    pub theta: Option<BigRational>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jack polynomial P_λ in a basis of Λ, or expanded in N variables.
    Jack {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, default_value = "m", value_parser = parse_basis)]
        basis: Basis,
        /// Expand in x1..xN instead of a symmetric-function basis.
        #[arg(long)]
        vars: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Shifted Jack polynomial P*_λ in z1..zN.
    ShiftedJack {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "branching", value_parser = parse_shifted_method)]
        method: ShiftedMethod,
        #[command(flatten)]
        common: Common,
    },
    /// Super-Jack polynomial SP_λ in x1..xn, y1..ym.
    Superjack {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "skew_expansion", value_parser = parse_super_method)]
        method: SuperJackMethod,
        #[command(flatten)]
        common: Common,
    },
    /// Shifted super-Jack polynomial.
    ShiftedSuperjack {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "flat", value_parser = parse_convention)]
        convention: ShiftedConvention,
        #[command(flatten)]
        common: Common,
    },
    /// Deformed Newton sum p_r(x, y, θ).
    Newton {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Jack expansion of P_λ · e_r.
    Pieri {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Re-expands the basis element b_λ in another basis (Jack by default).
    Expand {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, default_value = "p", value_parser = parse_basis)]
        basis: Basis,
        #[arg(long, default_value = "jack", value_parser = parse_basis)]
        to: Basis,
        #[command(flatten)]
        common: Common,
    },
    /// Projects b_λ onto the ideal spanned by Jack polynomials indexed by a filter.
    Project {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, default_value = "p", value_parser = parse_basis)]
        basis: Basis,
        /// Generators separated by `;`, e.g. `2,2;3`.
        #[arg(long, value_parser = parse_filter)]
        filter: Filter,
        #[command(flatten)]
        common: Common,
    },
    /// Runs identity sweeps; exits 1 on the first failing property.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn parse_basis(s: &str) -> std::result::Result<Basis, String> {
    s.parse::<Basis>().map_err(|e| e.to_string())
}

fn parse_theta(s: &str) -> std::result::Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_shifted_method(s: &str) -> std::result::Result<ShiftedMethod, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_super_method(s: &str) -> std::result::Result<SuperJackMethod, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_convention(s: &str) -> std::result::Result<ShiftedConvention, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `"2,2;3"` → Ω{(2,2), (3)}.
pub fn parse_filter(s: &str) -> std::result::Result<Filter, String> {
    let gens = s
        .split(';')
        .map(str::trim)
        .filter(|g| !g.is_empty())
        .map(parse_partition)
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Filter::new(gens))
}

/// What a command produced.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn render<T: Serialize + std::fmt::Display>(value: &T, format: Format) -> String {
    match format {
        Format::Text => format!("{value}\n"),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value).expect("values serialize")),
    }
}

fn emit_sym(f: SymFn, common: &Common) -> Result<String> {
    let f = match &common.theta {
        Some(t) => f.specialize(t)?,
        None => f,
    };
    Ok(render(&f, common.format))
}

fn emit_poly(p: MultiPoly, common: &Common) -> Result<String> {
    let p = match &common.theta {
        Some(t) => p.specialize(t)?,
        None => p,
    };
    Ok(render(&p, common.format))
}

fn execute(cli: Cli) -> Result<Output> {
    let mut out = Output::default();
    out.stdout = match cli.command {
        Command::Jack { lambda, basis, vars, common } => {
            let j = cms::jack(&lambda);
            match vars {
                Some(n) => emit_poly(expand_in_variables(&j, n)?, &common)?,
                None => emit_sym(cms::convert(&j, basis)?, &common)?,
            }
        }
        Command::ShiftedJack { lambda, n, method, common } => {
            emit_poly(shifted::shifted_jack(&lambda, n, method)?, &common)?
        }
        Command::Superjack { lambda, n, m, method, common } => {
            if !lambda.in_fat_hook(n, m) {
                out.stderr = format!("note: {lambda} is outside the fat ({n},{m})-hook, so its super-Jack polynomial is 0\n");
            }
            emit_poly(deformed::super_jack(&lambda, n, m, method)?.poly, &common)?
        }
        Command::ShiftedSuperjack { lambda, n, m, convention, common } => {
            emit_poly(deformed::shifted_super_jack(&lambda, n, m, convention)?, &common)?
        }
        Command::Newton { r, n, m, common } => emit_poly(deformed::deformed_newton(r, n, m).poly, &common)?,
        Command::Pieri { lambda, r, common } => {
            let d = lambda.weight() + r;
            let terms = pieri_expand_e(&lambda, r, d)?;
            emit_sym(SymFn::from_terms(Basis::Jack, d, terms)?, &common)?
        }
        Command::Expand { lambda, basis, to, common } => {
            let f = SymFn::element(basis, &lambda);
            emit_sym(cms::convert(&f, to)?, &common)?
        }
        Command::Project { lambda, basis, filter, common } => {
            let f = SymFn::element(basis, &lambda);
            emit_sym(ideal_project(&f, &filter)?, &common)?
        }
        Command::Verify { suite, max_weight, n, m, format } => {
            let report = verify::run(suite, Bounds { max_weight, n, m });
            if let Some(bad) = report.first_failure() {
                out.code = 1;
                out.stderr = format!("first counterexample: {}\n", bad.failure.as_deref().unwrap_or_default());
            }
            match format {
                Format::Text => report.to_string(),
                Format::Json => {
                    let rows: Vec<serde_json::Value> = report
                        .outcomes
                        .iter()
                        .map(|o| {
                            serde_json::json!({
                                "property": o.name,
                                "checked": o.checked,
                                "passed": o.passed(),
                                "counterexample": o.failure,
                            })
                        })
                        .collect();
                    let mut s = serde_json::to_string_pretty(&rows).expect("report serializes");
                    s.push('\n');
                    s
                }
            }
        }
    };
    Ok(out)
}

/// Parses arguments and runs the command; exit code 0 on success,
/// 1 when a verification sweep fails, 2 on usage or input errors.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { stdout: text, stderr: String::new(), code }
            } else {
                Output { stdout: String::new(), stderr: text, code }
            };
        }
    };
    match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            let mut stderr = String::new();
            let _ = writeln!(stderr, "error: {e}");
            Output { stdout: String::new(), stderr, code: 2 }
        }
    }
}
