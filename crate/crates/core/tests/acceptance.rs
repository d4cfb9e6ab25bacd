mod common;

use std::process::ExitCode;
use std::time::Instant;

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};

use wolfes_core::diffop2::{check_flag_preservation, pushforward, pushforward_action, Poly2};
use wolfes_core::envelope::{decompose, enumerate_env_basis, DEFAULT_MAX_BASIS};
use wolfes_core::exactcoeff::{rat, rat_int, ParamPoly, Rational};
use wolfes_core::modelbank::{
    energy, ground_energy, k_g2_blocks, make_h_a2, make_h_g2, make_h_g2_static, make_k_a2, make_k_g2, make_x_g2,
    param_map, Branch, ModelParams,
};
use wolfes_core::repspace::{basis, matrix, multiset, spectrum};
use wolfes_core::verifysuite::{
    check_a2_cubic, check_a2_quadratic_flipped, check_g2_integrability, check_g2_quartic, check_g2_quartic_at,
    check_lambda_zero_block, check_shift_invariance, Orientation, RelationReport,
};
use wolfes_core::DiffOp;

type Criterion = (u32, &'static str, fn() -> Outcome);

/// Criteria whose printed statement is known not to hold exactly.
const KNOWN_RED: &[u32] = &[3];

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { ok: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, note: impl Into<String>) {
        let note = note.into();
        self.notes.push(format!("{} {note}", if ok { "ok  " } else { "FAIL" }));
        self.ok &= ok;
    }

    fn reports(&mut self, reports: &[RelationReport]) {
        for r in reports {
            let order = match r.expected_order {
                Some(e) => format!("order {} (expected {e})", r.lhs_order),
                None => format!("order {}", r.lhs_order),
            };
            self.check(r.ok, format!("{}: {order}, peak {} terms [{}]", r.name, r.term_count_peak, r.restriction));
        }
    }
}

fn deterministic_runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config { cases, failure_persistence: None, ..Config::default() },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn c1() -> Outcome {
    let mut o = Outcome::new();
    let (c, stats) = make_h_g2_static().commutator_with_stats(&make_k_g2());
    o.check(c.is_zero(), format!("[h(omega=0), k] = 0 with lambda, nu symbolic; peak {} terms", stats.peak_terms));
    o
}

fn c2() -> Outcome {
    let mut o = Outcome::new();
    let integ = check_g2_integrability();
    o.reports(&integ);
    o.reports(&check_g2_quartic(Orientation::Reversed));
    o
}

fn c3() -> Outcome {
    let mut o = Outcome::new();
    o.reports(&check_a2_cubic(Orientation::Reversed));
    let flipped = check_a2_quadratic_flipped();
    o.notes.push(format!(
        "info {}: residual {}",
        flipped.name,
        if flipped.residual.is_zero() { "zero" } else { "nonzero" }
    ));
    o
}

fn c4() -> Outcome {
    let mut o = Outcome::new();
    o.reports(&check_g2_quartic_at(Some(&rat_int(0)), Orientation::Reversed));
    o.reports(&[check_lambda_zero_block()]);
    let k0 = make_k_g2().substitute(Some(&rat_int(0)), None, None);
    let k = make_k_a2();
    let pf = pushforward(&k.compose(&k), 6);
    o.check(pf.map(|d| d == k0).unwrap_or(false), "k(lambda=0) equals the pushforward of (k_A2)^2");
    o
}

fn c5() -> Outcome {
    let mut o = Outcome::new();
    let mut runner = deterministic_runner(6);
    let strat = common::shift_sample();
    let samples: Vec<_> = (0..6).map(|_| strat.new_tree(&mut runner).expect("sample").current()).collect();
    o.reports(&check_shift_invariance(&samples));
    o
}

fn c6() -> Outcome {
    let mut o = Outcome::new();
    let omega = rat_int(1);
    let fb = basis(3, 8).expect("basis");
    let mut expected = Vec::new();
    for m in 0..=8u32 {
        for _ in 0..=(m / 3) {
            expected.push(rat_int(-4 * m as i64));
        }
    }
    let expected = multiset(&expected);
    let h = make_h_g2();
    for (l, n) in [(rat(1, 3), rat_int(1)), (rat_int(2), rat(5, 2)), (rat(1, 7), rat(3, 4))] {
        let m = matrix(&h, &fb, &l, &n, &omega).expect("flag invariant");
        o.check(m.first_subdiagonal().is_none(), format!("lambda={l} nu={n}: triangular, dim {}", m.dim()));
        let diag = spectrum(&m).expect("triangular");
        o.check(multiset(&diag) == expected, format!("lambda={l} nu={n}: diagonal multiset"));

        let e0_direct = rat(3, 2) * &omega * (rat_int(1) + rat_int(4) * &l + rat_int(2) * &n);
        let three = rat_int(3);
        for (branch, nt, mt) in [
            (Branch::Branch1, &three * &l, &n - &l),
            (Branch::Branch2, &n - &l, &three * &l),
        ] {
            let mp = ModelParams::new(nt, mt, omega.clone(), branch);
            let back = param_map(&mp) == (l.clone(), n.clone());
            let e0 = ground_energy(&mp);
            let mut from_matrix: Vec<Rational> = diag.iter().map(|d| &e0 - d / rat_int(2)).collect();
            let mut closed: Vec<Rational> = Vec::new();
            for n2 in 0..=2u32 {
                for n1 in 0..=(8 - 3 * n2) {
                    closed.push(energy(n1, n2, &mp));
                }
            }
            from_matrix.sort();
            closed.sort();
            o.check(
                back && e0 == e0_direct && from_matrix == closed,
                format!("lambda={l} nu={n} {branch:?}: E0 = {e0}, levels match"),
            );
        }
    }
    o
}

fn c7() -> Outcome {
    let mut o = Outcome::new();
    let ops = [("h", make_h_g2()), ("x", make_x_g2()), ("k", make_k_g2())];
    for (name, d) in &ops {
        let all = (3..=6).all(|s| check_flag_preservation(d, s, 8).expect("grading").preserved);
        o.check(all, format!("{name} preserves P^(s)_n, s = 3..6, n <= 8"));
    }
    let h2 = check_flag_preservation(&ops[0].1, 2, 8).expect("grading");
    o.check(h2.preserved, "h preserves P^(2)_n, n <= 8");
    let x2 = check_flag_preservation(&ops[1].1, 2, 8).expect("grading");
    match x2.witness {
        Some(((p, q), (op, oq))) if !x2.preserved => {
            o.check(true, format!("x leaves P^(2): u^{p} v^{q} -> u^{op} v^{oq}"))
        }
        _ => o.check(false, "x should not preserve P^(2)"),
    }
    o
}

fn c8() -> Outcome {
    let mut o = Outcome::new();
    let k = make_k_a2();
    let k2 = k.compose(&k);
    let block = &k_g2_blocks()[0];
    let mut all = true;
    let mut count = 0;
    for q in 0..=2u32 {
        for p in 0..=(8 - 3 * q) {
            let lhs = pushforward_action(&k2, p, q);
            let rhs = block.apply(&Poly2::monomial(p, q, ParamPoly::one()));
            all &= lhs.map(|l| l == rhs).unwrap_or(false);
            count += 1;
        }
    }
    o.check(all, format!("pushforward of (k_A2)^2 matches the block on {count} monomials u^p v^q, p+3q <= 8"));
    let pf = pushforward(&k2, 6);
    o.check(pf.map(|d| d == *block).unwrap_or(false), "recovered (u,v) operator equals the block");
    o
}

fn c9() -> Outcome {
    let mut o = Outcome::new();
    let zero = rat_int(0);
    let b3 = enumerate_env_basis(3, zero.clone(), 2, true).expect("basis");
    let b1 = enumerate_env_basis(1, zero, 2, true).expect("basis");
    let cases: [(&str, DiffOp, _); 3] = [
        ("h.g2(omega=0)", make_h_g2_static(), &b3),
        ("x.g2", make_x_g2(), &b3),
        ("h.a2", make_h_a2(), &b1),
    ];
    for (name, d, b) in cases {
        match decompose(name, &d, b, DEFAULT_MAX_BASIS) {
            Ok(dec) => o.check(
                dec.is_exact() && dec.recompose() == d,
                format!("{name}: {} terms over {} products in g^({}), no J4", dec.coefficients.len(), b.len(), b.s),
            ),
            Err(e) => o.check(false, format!("{name}: {e}")),
        }
    }
    o
}

fn c10() -> Outcome {
    let mut o = Outcome::new();
    let mut run = |name: &str, r: Result<(), TestError<String>>| match r {
        Ok(()) => o.check(true, format!("{name}: 1000 cases")),
        Err(e) => o.check(false, format!("{name}: {e}")),
    };
    let cases = 1000;
    let verdict = |b: bool| if b { Ok(()) } else { Err(proptest::test_runner::TestCaseError::fail("violated")) };
    run(
        "jacobi identity",
        deterministic_runner(cases)
            .run(&(common::diffop(), common::diffop(), common::diffop()), |(a, b, c)| {
                verdict(common::jacobi_holds(&a, &b, &c))
            })
            .map_err(map_err),
    );
    run(
        "composition vs application",
        deterministic_runner(cases)
            .run(&(common::diffop(), common::diffop(), common::poly2()), |(a, b, f)| {
                verdict(common::compose_matches_apply(&a, &b, &f))
            })
            .map_err(map_err),
    );
    run(
        "text and json round trips",
        deterministic_runner(cases)
            .run(&common::diffop(), |d| verdict(common::round_trips(&d)))
            .map_err(map_err),
    );
    o
}

fn map_err<T: std::fmt::Debug>(e: TestError<T>) -> TestError<String> {
    match e {
        TestError::Abort(r) => TestError::Abort(r),
        TestError::Fail(r, v) => TestError::Fail(r, format!("{v:?}")),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "[h(omega=0), k] = 0", c1),
        (2, "G2 quartic algebra", c2),
        (3, "A2 cubic algebra", c3),
        (4, "lambda = 0 reduction", c4),
        (5, "shift invariance of I12", c5),
        (6, "spectrum on P^(3)_8", c6),
        (7, "flag preservation", c7),
        (8, "pushforward of (k_A2)^2", c8),
        (9, "decomposition in g^(s)", c9),
        (10, "property suites", c10),
    ];
    let mut unexpected = 0;
    for (id, title, f) in criteria {
        let t = Instant::now();
        let out = f();
        let known = KNOWN_RED.contains(&id);
        let verdict = match (out.ok, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        if !out.ok && !known {
            unexpected += 1;
        }
        println!("criterion {id:>2} {verdict}: {title} ({:.2?})", t.elapsed());
        for n in &out.notes {
            println!("    {n}");
        }
        if out.ok && known {
            println!("    note: listed as known red but passed");
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
