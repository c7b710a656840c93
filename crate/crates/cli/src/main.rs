//! `msdcost`: mean squared derivative cost from the command line.
//!
//! Exit codes: 0 ok, 1 self-test failure, 2 parse or schema error,
//! 3 domain error.

mod input;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use msd_core::cost::{cost_with_route, is_free_flight, FREE_FLIGHT_TOL};
use msd_core::matrices;
use msd_core::oracle::quadrature_cost;
use msd_core::selftest::{self, SelfTestOptions};
use msd_core::trajectory::solve_trajectory;
use msd_core::transport::w2_uniform;
use msd_core::{DenseMatrix, Error, Route};
use serde_json::{json, Map, Value};

#[derive(Debug)]
pub enum CliError {
    Schema(String),
    Domain(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "msdcost",
    version,
    about = "Mean squared derivative cost, optimal trajectories and discrete transport"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the cost of a boundary value problem.
    Cost {
        /// Problem JSON file, or `-` for standard input.
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, default_value = "alg51", value_parser = parse_route)]
        route: Route,
        /// Relative tolerance of the free-flight test.
        #[arg(long, default_value_t = FREE_FLIGHT_TOL)]
        tol: f64,
    },
    /// Solve for the optimal polynomial and sample one of its derivatives.
    Trajectory {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Print closed-form matrices as row-major arrays.
    Matrices {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        h: f64,
        /// Comma-separated subset of A,B,V,L,U,Linv,Uinv,Ainv,K.
        #[arg(long, default_value = "A,B,V,L,U,Linv,Uinv,Ainv,K")]
        which: String,
    },
    /// Optimal matching cost between two uniform discrete measures.
    Transport {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Run the built-in consistency checks.
    Selftest {
        /// Machine-readable report.
        #[arg(long)]
        json: bool,
        /// Perturb checks whose name starts with this prefix.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse()
}

fn rows_json(m: &DenseMatrix) -> Value {
    json!(m.to_rows())
}

fn cmd_cost(path: &str, route: Route, tol: f64) -> Result<Value, CliError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Domain(format!(
            "tol: must be positive, got {tol}"
        )));
    }
    let problem = input::problem(&input::parse(&input::read_source(path)?)?)?;
    let breakdown = cost_with_route(&problem, route)?;
    Ok(json!({
        "cost": breakdown.total,
        "route": route.as_str(),
        "b": rows_json(&breakdown.b_vector),
        "free_flight": is_free_flight(&problem, tol),
        "noise_clamped": breakdown.noise_clamped,
    }))
}

fn cmd_trajectory(path: &str) -> Result<Value, CliError> {
    let spec: input::TrajectoryJson = input::parse(&input::read_source(path)?)?;
    let problem = input::problem(&spec.problem)?;
    let k = usize::try_from(spec.samples.k).map_err(|_| {
        CliError::Domain(format!(
            "samples.k: derivative order must be >= 0, got {}",
            spec.samples.k
        ))
    })?;
    let times: Vec<f64> = match (&spec.samples.count, &spec.samples.times) {
        (Some(_), Some(_)) => {
            return Err(CliError::Schema(
                "samples: give either `count` or `times`, not both".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::Schema(
                "samples: missing `count` or `times`".into(),
            ))
        }
        (Some(0), None) => {
            return Err(CliError::Domain("samples.count: must be at least 1".into()))
        }
        (Some(1), None) => vec![0.0],
        (Some(count), None) => {
            let count = *count;
            let h = problem.h();
            let last = (count - 1) as f64;
            (0..count)
                .map(|i| {
                    if i + 1 == count {
                        h
                    } else {
                        h * i as f64 / last
                    }
                })
                .collect()
        }
        (None, Some(times)) => times.clone(),
    };
    let poly = solve_trajectory(&problem)?;
    let mut values = Vec::with_capacity(times.len());
    let mut extrapolated = false;
    for &t in &times {
        let sample = poly.eval(k, t);
        extrapolated |= sample.extrapolated;
        values.push(sample.values);
    }
    Ok(json!({
        "n": problem.n(),
        "h": problem.h(),
        "d": problem.dim(),
        "coeffs": poly.to_rows(),
        "k": k,
        "times": times,
        "values": values,
        "extrapolated": extrapolated,
        "quadrature_cost": quadrature_cost(&poly),
    }))
}

const MATRIX_NAMES: [&str; 9] = ["A", "B", "V", "L", "U", "Linv", "Uinv", "Ainv", "K"];

fn cmd_matrices(n: i64, h: f64, which: &str) -> Result<Value, CliError> {
    let names: Vec<&str> = which
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    if let Some(bad) = names.iter().find(|name| !MATRIX_NAMES.contains(name)) {
        return Err(CliError::Schema(format!(
            "which: unknown matrix `{bad}` (expected one of {})",
            MATRIX_NAMES.join(",")
        )));
    }
    let order = input::order(n)?;
    let horizon = input::horizon(h)?;
    let mut out = Map::new();
    for name in names {
        let m = match name {
            "A" => matrices::build_a(order, horizon),
            "B" => matrices::build_b(order, horizon),
            "V" => matrices::build_v(order, horizon.get())?,
            "L" => matrices::build_l(order, horizon),
            "U" => matrices::build_u(order, horizon),
            "Linv" => matrices::build_l_inv(order, horizon),
            "Uinv" => matrices::build_u_inv(order, horizon),
            "Ainv" => matrices::build_a_inv(order, horizon),
            "K" => matrices::build_k(order, horizon),
            _ => unreachable!("validated above"),
        };
        out.insert(
            name.to_string(),
            json!({ "rows": m.rows(), "cols": m.cols(), "data": m.data() }),
        );
    }
    Ok(Value::Object(out))
}

fn cmd_transport(path: &str) -> Result<Value, CliError> {
    let spec: input::TransportJson = input::parse(&input::read_source(path)?)?;
    let (mu, nu, h) = input::measures(&spec)?;
    let plan = w2_uniform(&mu, &nu, h)?;
    Ok(json!({ "w2": plan.value, "assignment": plan.assignment }))
}

fn cmd_selftest(json: bool, inject_fault: Option<String>) -> ExitCode {
    let report = selftest::run(&SelfTestOptions { inject_fault });
    if json {
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "worst_ratio": finite_or_null(c.worst_ratio) }))
            .collect();
        println!(
            "{}",
            output::to_json_string(&json!({ "passed": report.passed(), "checks": checks }))
        );
    } else {
        for check in &report.checks {
            println!("{check}");
        }
        let failed = report.failures().count();
        if failed == 0 {
            println!("all {} checks passed", report.checks.len());
        } else {
            println!("{failed} of {} checks failed", report.checks.len());
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        for check in report.failures() {
            eprintln!("self-test failure: {}", check.name);
        }
        ExitCode::from(1)
    }
}

fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Cost { input, route, tol } => cmd_cost(&input, route, tol),
        Command::Trajectory { input } => cmd_trajectory(&input),
        Command::Matrices { n, h, which } => cmd_matrices(n, h, &which),
        Command::Transport { input } => cmd_transport(&input),
        Command::Selftest { json, inject_fault } => return cmd_selftest(json, inject_fault),
    };
    match result {
        Ok(value) => {
            println!("{}", output::to_json_string(&value));
            ExitCode::SUCCESS
        }
        Err(e) => {
            let (CliError::Schema(msg) | CliError::Domain(msg)) = &e;
            eprintln!("error: {msg}");
            ExitCode::from(e.exit_code())
        }
    }
}
