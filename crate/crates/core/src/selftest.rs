//! Built-in consistency checks: printed tables, factorisation identities and
//! the independent oracles.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cost::{condition_scale, cost, cost_scaled, cost_via_k, free_flight_target};
use crate::golden::{self, Table};
use crate::matrices::{
    build_a, build_a_inv, build_b, build_l, build_l_inv, build_u, build_u_inv, det_a,
};
use crate::matrix::DenseMatrix;
use crate::oracle::{elimination_det, quadrature_cost};
use crate::sample::{random_problems, ProblemRanges};
use crate::state::{BoundaryState, CostProblem, Horizon, Order};
use crate::trajectory::solve_trajectory;

pub const SEED: u64 = 0x5eed_c057;

#[derive(Debug, Clone, Default)]
pub struct SelfTestOptions {
    /// Perturbs every computed quantity of checks whose name starts with
    /// this prefix, to exercise the failure path.
    pub inject_fault: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Worst observed error divided by its allowance; passing needs `<= 1`.
    pub worst_ratio: f64,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{tag} {:<28} worst error/allowance = {:.3e}",
            self.name, self.worst_ratio
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfTestReport {
    pub checks: Vec<CheckOutcome>,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Check {
    name: String,
    fault: bool,
    worst: f64,
}

impl Check {
    fn new(name: impl Into<String>, opts: &SelfTestOptions) -> Self {
        let name = name.into();
        let fault = opts
            .inject_fault
            .as_deref()
            .is_some_and(|p| name.starts_with(p));
        Self {
            name,
            fault,
            worst: 0.0,
        }
    }

    fn perturb(&self, v: f64) -> f64 {
        if self.fault {
            v * (1.0 + 1e-3) + 1e-3
        } else {
            v
        }
    }

    /// Records `|got - expected| <= allowance`.
    fn compare(&mut self, got: f64, expected: f64, allowance: f64) {
        let err = (self.perturb(got) - expected).abs();
        let ratio = if err == 0.0 { 0.0 } else { err / allowance };
        // NaN counts as failure
        self.worst = if ratio.is_nan() {
            f64::INFINITY
        } else {
            self.worst.max(ratio)
        };
    }

    fn require(&mut self, ok: bool) {
        if !ok || self.fault {
            self.worst = f64::INFINITY;
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            passed: self.worst <= 1.0,
            worst_ratio: self.worst,
            name: self.name,
        }
    }
}

fn residual_vs_identity(m: &DenseMatrix) -> f64 {
    (m - &DenseMatrix::identity(m.rows())).norm_inf()
}

fn golden_checks(opts: &SelfTestOptions, out: &mut Vec<CheckOutcome>) {
    for n in 1..=golden::MAX_TABLE_ORDER {
        let order = Order::new(n).expect("small order");
        for table in Table::ALL {
            let mut check = Check::new(format!("golden/n={n}/{}", table.name()), opts);
            for h in [1.0, 2.0] {
                let horizon = Horizon::new(h).expect("positive");
                let built = match table {
                    Table::A => build_a(order, horizon),
                    Table::AInv => build_a_inv(order, horizon),
                    Table::B => build_b(order, horizon),
                    Table::L => build_l(order, horizon),
                    Table::U => build_u(order, horizon),
                    Table::LInv => build_l_inv(order, horizon),
                    Table::UInv => build_u_inv(order, horizon),
                };
                let printed = golden::table(n, table, h).expect("table exists");
                for (g, e) in built.data().iter().zip(printed.data()) {
                    check.compare(*g, *e, 1e-12);
                }
            }
            out.push(check.finish());
        }
    }
}

fn rest_to_rest(n: usize) -> CostProblem {
    let mut end = vec![0.0; n];
    end[0] = 1.0;
    CostProblem::new(
        Order::new(n).expect("small order"),
        Horizon::unit(),
        BoundaryState::zeros(n, 1),
        BoundaryState::new(n, 1, end).expect("n x 1"),
    )
    .expect("matching shapes")
}

fn canonical_cost_check(opts: &SelfTestOptions) -> CheckOutcome {
    let mut check = Check::new("costs/rest-to-rest", opts);
    for (i, &expected) in golden::REST_TO_REST_UNIT.iter().enumerate() {
        let got = cost(&rest_to_rest(i + 1))
            .map(|c| c.total)
            .unwrap_or(f64::NAN);
        check.compare(got, expected, 1e-10 * expected);
    }
    check.finish()
}

fn lu_check(opts: &SelfTestOptions) -> CheckOutcome {
    let mut check = Check::new("lu/identities", opts);
    for n in 1..=10 {
        let order = Order::new(n).expect("within default limit");
        for h in [0.5, 1.0, 2.0, 10.0] {
            let horizon = Horizon::new(h).expect("positive");
            let a = build_a(order, horizon);
            let (l, u) = (build_l(order, horizon), build_u(order, horizon));
            let (l_inv, u_inv) = (build_l_inv(order, horizon), build_u_inv(order, horizon));
            check.compare((&(&l * &u) - &a).norm_inf(), 0.0, 1e-10 * a.norm_inf());
            check.compare(residual_vs_identity(&(&u * &u_inv)), 0.0, 1e-10);
            check.compare(residual_vs_identity(&(&l * &l_inv)), 0.0, 1e-10);
            let a_inv = &u_inv * &l_inv;
            check.compare(
                residual_vs_identity(&(&a * &a_inv)),
                0.0,
                1e-8 * condition_scale(order, horizon),
            );
        }
    }
    check.finish()
}

fn det_check(opts: &SelfTestOptions) -> CheckOutcome {
    let mut check = Check::new("det/elimination", opts);
    for n in 1..=8 {
        let order = Order::new(n).expect("within default limit");
        for h in [0.5, 1.0, 2.0] {
            let horizon = Horizon::new(h).expect("positive");
            let closed = det_a(order, horizon);
            check.compare(
                elimination_det(&build_a(order, horizon)),
                closed,
                1e-8 * closed.abs(),
            );
        }
    }
    check.finish()
}

fn random_checks(opts: &SelfTestOptions, out: &mut Vec<CheckOutcome>) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let problems = random_problems(&mut rng, 200, &ProblemRanges::default());
    let mut routes = Check::new("oracle/routes", opts);
    let mut quadrature = Check::new("oracle/quadrature", opts);
    for p in &problems {
        let base = cost(p).map(|c| c.total).unwrap_or(f64::NAN);
        let via_k = cost_via_k(p).unwrap_or(f64::NAN);
        let scaled = cost_scaled(p).unwrap_or(f64::NAN);
        let rel = 1e-8 * base.abs().max(f64::MIN_POSITIVE);
        routes.compare(via_k, base, rel);
        routes.compare(scaled, base, rel);
        routes.compare(scaled, via_k, 1e-8 * via_k.abs().max(f64::MIN_POSITIVE));
        let quad = solve_trajectory(p)
            .map(|t| quadrature_cost(&t))
            .unwrap_or(f64::NAN);
        quadrature.compare(quad, base, 1e-8 * (1.0 + base));
    }
    out.push(routes.finish());
    out.push(quadrature.finish());

    let mut ff = Check::new("free-flight/zero-cost", opts);
    for p in problems.iter().take(50) {
        let target = free_flight_target(p.order(), p.horizon(), p.start());
        match target.and_then(|t| CostProblem::new(p.order(), p.horizon(), p.start().clone(), t)) {
            Ok(q) => {
                let c = cost(&q).map(|c| c.total).unwrap_or(f64::NAN);
                ff.compare(c, 0.0, 1e-12 * (1.0 + q.input_scale()));
            }
            Err(_) => ff.require(false),
        }
    }
    out.push(ff.finish());
}

pub fn run(opts: &SelfTestOptions) -> SelfTestReport {
    let mut checks = Vec::new();
    golden_checks(opts, &mut checks);
    checks.push(canonical_cost_check(opts));
    checks.push(lu_check(opts));
    checks.push(det_check(opts));
    random_checks(opts, &mut checks);
    SelfTestReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let report = run(&SelfTestOptions::default());
        for c in &report.checks {
            assert!(c.passed, "{c}");
        }
        assert_eq!(
            report
                .checks
                .iter()
                .filter(|c| c.name.starts_with("golden/"))
                .count(),
            28
        );
    }

    #[test]
    fn injected_fault_is_named() {
        let opts = SelfTestOptions {
            inject_fault: Some("golden/n=3/B".into()),
        };
        let report = run(&opts);
        let failed: Vec<_> = report.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["golden/n=3/B"]);
        assert!(!report.passed());
    }
}
