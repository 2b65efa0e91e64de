//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use unicyclic_ga::enumerate::{
    enumerate_by_augmentation, enumerate_unicyclic, verify_bounds, verify_monotonicity,
};
use unicyclic_ga::families::{
    a_diagonal_lower_bound, b_q1_lower_bound, c_diagonal_lower_bound, compare_ab, compare_cd,
    ga_sn3_closed, ga_spq4_closed, ga_srk3_closed,
};
use unicyclic_ga::{
    canonical_form, ga_index, make_family, reduction_pipeline, FamilySpec, Graph,
};

const TABLE_TOL: f64 = 5e-5;

// (p, q, A(p,q), B(p,q)) as printed
const TABLE_1: [(usize, usize, f64, f64); 15] = [
    (2, 2, 0.5543, 1.4468),
    (3, 2, 0.6934, 1.4641),
    (4, 2, 0.7994, 1.4749),
    (5, 2, 0.8825, 1.4829),
    (6, 2, 0.9491, 1.4896),
    (7, 2, 1.0036, 1.4957),
    (3, 3, 0.8721, 1.4713),
    (4, 3, 1.0108, 1.4834),
    (5, 3, 1.1211, 1.4740),
    (6, 3, 1.2109, 1.4744),
    (7, 3, 1.2853, 1.4750),
    (4, 4, 1.1767, 1.4681),
    (5, 4, 1.3102, 1.4624),
    (6, 4, 1.4199, 1.4572),
    (7, 4, 1.5116, 1.4531),
];

// (r, k, C(r,k), D(r,k)) as printed
const TABLE_2: [(usize, usize, f64, f64); 42] = [
    (2, 2, 0.4006, 1.1536),
    (3, 2, 0.5289, 1.1772),
    (4, 2, 0.6282, 1.1886),
    (5, 2, 0.7072, 1.1936),
    (6, 2, 0.7716, 1.1949),
    (7, 2, 0.8251, 1.1941),
    (8, 2, 0.8703, 1.1920),
    (9, 2, 0.9091, 1.1891),
    (10, 2, 0.9427, 1.1858),
    (11, 2, 0.9723, 1.1823),
    (12, 2, 0.9984, 1.1786),
    (13, 2, 1.0218, 1.1750),
    (3, 3, 0.7009, 1.2070),
    (4, 3, 0.8355, 1.2226),
    (5, 3, 0.9436, 1.2303),
    (6, 3, 1.0324, 1.2333),
    (7, 3, 1.1067, 1.2335),
    (8, 3, 1.1699, 1.2319),
    (9, 3, 1.2244, 1.2293),
    (10, 3, 1.2719, 1.2259),
    (11, 3, 1.3137, 1.2221),
    (12, 3, 1.3509, 1.2181),
    (13, 3, 1.3842, 1.2139),
    (4, 4, 0.9992, 1.2413),
    (5, 4, 1.1317, 1.2513),
    (6, 4, 1.2413, 1.2561),
    (7, 4, 1.3336, 1.2575),
    (8, 4, 1.4124, 1.2568),
    (9, 4, 1.4808, 1.2546),
    (10, 4, 1.5406, 1.2516),
    (11, 4, 1.5934, 1.2480),
    (12, 4, 1.6406, 1.2440),
    (13, 4, 1.6829, 1.2397),
    (5, 5, 1.2850, 1.2633),
    (6, 5, 1.4126, 1.2695),
    (7, 5, 1.5205, 1.2721),
    (8, 5, 1.6133, 1.2724),
    (9, 5, 1.6939, 1.2710),
    (10, 5, 1.7647, 1.2685),
    (11, 5, 1.8276, 1.2653),
    (12, 5, 1.8837, 1.2616),
    (13, 5, 1.9343, 1.2575),
];

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

fn run(id: u32, title: &str, limit: Duration, check: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut out = check();
    let elapsed = start.elapsed();
    if elapsed > limit {
        out.failures.push(format!("took {elapsed:.2?}, limit {limit:?}"));
    }
    let ok = out.failures.is_empty();
    println!(
        "criterion {id} [{}] {title}: {} ({elapsed:.2?})",
        if ok { "PASS" } else { "FAIL" },
        out.summary
    );
    for f in &out.failures {
        println!("    {f}");
    }
    ok
}

fn cycles_attain_n() -> Outcome {
    let mut failures = Vec::new();
    for n in 3..=64 {
        let ga = ga_index(&Graph::cycle(n).unwrap()).unwrap();
        if (ga - n as f64).abs() > 1e-12 {
            failures.push(format!("GA(C_{n}) = {ga}"));
        }
    }
    Outcome {
        failures,
        summary: "GA(C_n) = n for 3 <= n <= 64 within 1e-12".into(),
    }
}

fn sn3_closed_form() -> Outcome {
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for n in 3..=200 {
        let g = make_family(FamilySpec::Sn3 { n }).unwrap();
        let d = (ga_sn3_closed(n).unwrap() - ga_index(&g).unwrap()).abs();
        worst = worst.max(d);
        if d > 1e-9 {
            failures.push(format!("n = {n}: difference {d:e}"));
        }
    }
    Outcome {
        failures,
        summary: format!("closed form vs summation for 3 <= n <= 200, max difference {worst:.1e}"),
    }
}

fn table_check(
    name: &str,
    rows: &[(usize, usize, f64, f64)],
    labels: (&str, &str),
    eval: impl Fn(usize, usize) -> (f64, f64),
) -> Outcome {
    let mut failures = Vec::new();
    for &(i, j, x, y) in rows {
        let (cx, cy) = eval(i, j);
        for (label, printed, computed) in [(labels.0, x, cx), (labels.1, y, cy)] {
            let d = (printed - computed).abs();
            if d > TABLE_TOL {
                failures.push(format!(
                    "{label}({i},{j}): printed {printed:.4}, computed {computed:.6}, off by {d:.2e}"
                ));
            }
        }
    }
    let total = rows.len() * 2;
    Outcome {
        summary: format!(
            "{name}: {}/{total} printed entries within {TABLE_TOL:e}",
            total - failures.len()
        ),
        failures,
    }
}

fn named_constants() -> Outcome {
    let checks = [
        ("2g(3) - f(5)", b_q1_lower_bound(), 1.2142),
        ("A(q,q) lower bound at q = 5", a_diagonal_lower_bound(5), 1.0188),
        ("C(k,k) lower bound at k = 6", c_diagonal_lower_bound(6), 1.1118),
    ];
    let failures = checks
        .iter()
        .filter(|(_, v, t)| (v - t).abs() > TABLE_TOL)
        .map(|(name, v, t)| format!("{name} = {v:.6}, expected about {t}"))
        .collect();
    let values: Vec<String> = checks.iter().map(|(_, v, _)| format!("{v:.4}")).collect();
    Outcome {
        failures,
        summary: format!("proof constants {}", values.join(", ")),
    }
}

fn exhaustive_bounds() -> Outcome {
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 3..=9 {
        let r = verify_bounds(n, 1e-9).unwrap();
        counts.push(r.count);
        if !r.violations.is_empty() {
            failures.push(format!("n = {n}: {} bound violations", r.violations.len()));
        }
        if !(r.cycle_attains_max && r.max_unique) {
            failures.push(format!("n = {n}: maximum not attained only by C_n"));
        }
        if !r.sn3_attains_min {
            failures.push(format!("n = {n}: S_{{n;3}} does not attain the minimum"));
        }
        match n {
            3 | 4 if r.count != n - 2 => failures.push(format!("n = {n}: {} classes", r.count)),
            5.. => {
                let a: Vec<_> = enumerate_unicyclic(n).unwrap().iter().map(canonical_form).collect();
                let b: Vec<_> = enumerate_by_augmentation(n)
                    .unwrap()
                    .iter()
                    .map(canonical_form)
                    .collect();
                if a != b {
                    failures.push(format!("n = {n}: generators disagree ({} vs {})", a.len(), b.len()));
                }
            }
            _ => {}
        }
    }
    let counts: Vec<String> = counts.iter().map(usize::to_string).collect();
    Outcome {
        failures,
        summary: format!("n = 3..9, class counts {}", counts.join(", ")),
    }
}

fn monotonicity_sweep() -> Outcome {
    let mut failures = Vec::new();
    let mut total = 0;
    for n in 5..=8 {
        let r = verify_monotonicity(n).unwrap();
        total += r.total_applications();
        for v in &r.violations {
            failures.push(format!(
                "n = {n}: {} {} on {:?}: {}",
                v.operator, v.arguments, v.graph, v.reason
            ));
        }
        for o in &r.operators {
            if o.applications == 0 {
                failures.push(format!("n = {n}: {} never applied", o.operator));
            }
        }
    }
    Outcome {
        failures,
        summary: format!("{total} operator applications over n = 5..8"),
    }
}

fn pipeline_totality() -> Outcome {
    let mut failures = Vec::new();
    let mut runs = 0;
    for n in 5..=8 {
        let lower = ga_sn3_closed(n).unwrap();
        for g in enumerate_unicyclic(n).unwrap() {
            runs += 1;
            match reduction_pipeline(&g) {
                Ok(t) => {
                    if t.terminal_ga > t.input_ga + 1e-9 || t.terminal_ga < lower - 1e-9 {
                        failures.push(format!("{g:?}: terminal GA {}", t.terminal_ga));
                    }
                    if let Err(e) = t.validate() {
                        failures.push(format!("{g:?}: {e}"));
                    }
                }
                Err(e) => failures.push(format!("{g:?}: {e}")),
            }
        }
    }
    Outcome {
        failures,
        summary: format!("{runs} reductions over n = 5..8 end in a family member"),
    }
}

fn family_ordering() -> Outcome {
    let mut failures = Vec::new();
    let mut pairs = 0;
    for n in 4..=60 {
        let sn3 = ga_sn3_closed(n).unwrap();
        for q in 0..=(n - 4) / 2 {
            let p = n - 4 - q;
            pairs += 1;
            if sn3 >= ga_spq4_closed(p, q) {
                failures.push(format!("S_{{{p},{q};4}} at n = {n}"));
            }
        }
        for k in 1..=(n.saturating_sub(3)) / 2 {
            let r = n - 3 - k;
            pairs += 1;
            if sn3 >= ga_srk3_closed(r, k) {
                failures.push(format!("S_{{{r},{k};3}} at n = {n}"));
            }
        }
    }
    Outcome {
        failures,
        summary: format!("{pairs} family members above S_{{n;3}} for n <= 60"),
    }
}

fn main() -> ExitCode {
    let second = Duration::from_secs(1);
    let results = [
        run(1, "upper extremal", second, cycles_attain_n),
        run(2, "lower closed form", second, sn3_closed_form),
        run(3, "Table 1", second, || {
            table_check("A/B", &TABLE_1, ("A", "B"), |p, q| compare_ab(p, q).unwrap())
        }),
        run(4, "Table 2", second, || {
            table_check("C/D", &TABLE_2, ("C", "D"), |r, k| compare_cd(r, k).unwrap())
        }),
        run(5, "proof constants", second, named_constants),
        run(6, "exhaustive bounds", Duration::from_secs(60), exhaustive_bounds),
        run(7, "monotonicity sweep", Duration::from_secs(120), monotonicity_sweep),
        run(8, "pipeline totality", Duration::from_secs(120), pipeline_totality),
        run(9, "strict family ordering", second, family_ordering),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
