//! Self-check suite: engine against the dense oracle, conservation laws,
//! coin unitarity and the machine contracts.

use num_complex::Complex64;
use qwalk_core::oracle::{apply_power, max_abs_difference, unitarity_defect as dense_defect};
use qwalk_core::random::{random_coins, random_graph, random_state};
use qwalk_core::{
    build_sequential_ab, build_sequential_eq, build_sequential_word, build_spatial_ab,
    build_spatial_eq, coin, dense_step_matrix, words_of_length, CoinAssignment, CoinMatrix,
    Cutpoint, Machine, QuantumWalk, Verdict, Word, UNITARITY_TOLERANCE,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    pub graphs: usize,
    pub oracle_limit: usize,
    pub cutpoint: Cutpoint,
    /// Replace one reference coin with a non-unitary matrix before checking.
    pub inject_corrupt_coin: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            graphs: 100,
            oracle_limit: qwalk_core::DEFAULT_ORACLE_LIMIT,
            cutpoint: Cutpoint::default(),
            inject_corrupt_coin: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Largest measured deviation, where the check has one.
    pub defect: Option<f64>,
    pub detail: String,
}

impl Check {
    fn within(name: &'static str, defect: f64, tolerance: f64, detail: String) -> Check {
        Check {
            name,
            passed: defect < tolerance,
            defect: Some(defect),
            detail,
        }
    }

    pub fn report_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match self.defect {
            Some(d) => format!("{status} {:<24} defect {d:.3e}  {}", self.name, self.detail),
            None => format!("{status} {:<24} {}", self.name, self.detail),
        }
    }
}

fn reference_machines() -> Vec<Machine> {
    let mut out = Vec::new();
    for m in 1..=4 {
        out.push(build_spatial_eq(m).unwrap());
        out.push(build_spatial_ab(m).unwrap());
        out.push(build_sequential_ab(2 * m).unwrap());
        out.push(build_sequential_eq(m).unwrap());
        out.push(build_sequential_word(&Word::ab_m(m)).unwrap());
    }
    out
}

pub fn run(opts: &VerifyOptions) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    vec![
        coin_unitarity(opts.inject_corrupt_coin),
        oracle_equivalence(&mut rng, opts.graphs, opts.oracle_limit),
        norm_conservation(&mut rng),
        grover_transfer(),
        membership_certainty(),
        classification(opts.cutpoint),
    ]
}

fn coin_unitarity(inject: bool) -> Check {
    let mut worst = 0.0f64;
    let mut count = 0;
    for (i, machine) in reference_machines().into_iter().enumerate() {
        let mut coins: Vec<_> = machine.coins().iter().cloned().collect();
        if inject && i == 0 {
            let v = machine.accepting()[0];
            coins[v] *= Complex64::new(1.01, 0.0);
        }
        let assignment = CoinAssignment::new_unchecked(coins);
        worst = worst.max(assignment.max_unitarity_defect());
        count += assignment.len();
    }
    Check::within(
        "coin-unitarity",
        worst,
        UNITARITY_TOLERANCE,
        format!("{count} coins across the reference machines"),
    )
}

fn oracle_equivalence(rng: &mut ChaCha8Rng, graphs: usize, limit: usize) -> Check {
    let mut worst = 0.0f64;
    for _ in 0..graphs {
        let g = random_graph(rng, limit.max(2));
        let coins = random_coins(rng, &g);
        let state = random_state(rng, g.port_count());
        let steps = rng.random_range(0..=16);
        let u = match dense_step_matrix(&g, &coins, limit) {
            Ok(u) => u,
            Err(e) => {
                return Check {
                    name: "oracle-equivalence",
                    passed: false,
                    defect: None,
                    detail: e.to_string(),
                }
            }
        };
        let walk = QuantumWalk::new(g, coins).expect("random coins match degrees");
        let fast = walk.evolve(&state, steps).expect("state sized to walk");
        worst = worst
            .max(max_abs_difference(&fast, &apply_power(&u, &state, steps)))
            .max(dense_defect(&u));
    }
    Check::within(
        "oracle-equivalence",
        worst,
        1e-12,
        format!("{graphs} random graphs, <= {limit} ports"),
    )
}

fn norm_conservation(rng: &mut ChaCha8Rng) -> Check {
    const STEPS: usize = 10_000;
    let mut worst = 0.0f64;
    for _ in 0..4 {
        let g = random_graph(rng, 64);
        let coins = random_coins(rng, &g);
        let state = random_state(rng, g.port_count());
        let walk = QuantumWalk::new(g, coins).expect("random coins match degrees");
        let fin = walk.evolve(&state, STEPS).expect("state sized to walk");
        worst = worst.max((fin.norm_sqr().sqrt() - 1.0).abs());
    }
    Check::within(
        "norm-conservation",
        worst,
        1e-12,
        format!("4 walks, {STEPS} steps"),
    )
}

fn grover_transfer() -> Check {
    let mut worst = 0.0f64;
    for d in [2, 4, 6, 8] {
        let g = coin::grover(d).expect("d > 0");
        let x = Complex64::new(0.6, -0.3);
        let zero = Complex64::new(0.0, 0.0);
        let input: Vec<_> = (0..d).map(|i| if i < d / 2 { x } else { zero }).collect();
        let v = g * CoinMatrix::from_column_slice(d, 1, &input);
        for (i, out) in v.iter().enumerate() {
            let want = if i < d / 2 { zero } else { x };
            worst = worst.max((out - want).norm());
        }
    }
    Check::within("grover-transfer", worst, 1e-12, "d = 2, 4, 6, 8".into())
}

fn membership_certainty() -> Check {
    let mut worst = 0.0f64;
    for m in 1..=8 {
        for machine in [
            build_spatial_eq(m).unwrap(),
            build_spatial_ab(m).unwrap(),
            build_sequential_ab(2 * m).unwrap(),
            build_sequential_eq(m).unwrap(),
            build_sequential_word(&Word::a_m_b_m(m)).unwrap(),
        ] {
            let member = machine.member_word().expect("even length has a member");
            let p = machine.acceptance(&member).unwrap_or(0.0);
            worst = worst.max((1.0 - p).abs());
        }
    }
    Check::within(
        "membership-certainty",
        worst,
        1e-12,
        "all families, m = 1..8".into(),
    )
}

fn classification(cutpoint: Cutpoint) -> Check {
    let mut wrong = 0;
    let mut total = 0;
    for m in 1..=4 {
        for machine in [build_spatial_eq(m).unwrap(), build_spatial_ab(m).unwrap()] {
            for w in words_of_length(2 * m) {
                let expected = if machine.language().contains(&w) {
                    Verdict::Accept
                } else {
                    Verdict::Reject
                };
                let got = machine
                    .acceptance(&w)
                    .map(|p| cutpoint.judge(p).verdict)
                    .unwrap_or(Verdict::WithinMargin);
                total += 1;
                if got != expected {
                    wrong += 1;
                }
            }
        }
    }
    Check {
        name: "spatial-classification",
        passed: wrong == 0,
        defect: None,
        detail: format!(
            "{wrong} of {total} words misclassified at lambda = {}, epsilon = {}",
            cutpoint.lambda(),
            cutpoint.epsilon()
        ),
    }
}
