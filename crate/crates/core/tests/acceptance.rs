//! One PASS/FAIL line per acceptance criterion. All comparisons are exact.

use plucker_core::crossratio::Tuple4;
use plucker_core::fixtures::{d1, d2};
use plucker_core::golden::{check_g42, check_g52, RowVerdict};
use plucker_core::sampling::{perturbed_family, seeded};
use plucker_core::strata::{enumerate_parallel_structures, witness_plane, witness_plane_with};
use plucker_core::suites::{
    gm_suite, identities_suite, momentmap_suite, orbit_suite, plucker_suite, theorem6_suite, SuiteReport,
};
use plucker_core::*;
use rand::Rng;

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn suites(reports: Vec<SuiteReport>) -> Verdict {
    let mut total = reports[0].clone();
    let ok = reports.iter().all(SuiteReport::passed);
    for r in reports.into_iter().skip(1) {
        total.merge(r);
    }
    let detail = total.checks.iter().map(|c| format!("{} {}/{}", c.check, c.passed, c.total)).collect::<Vec<_>>().join(", ");
    Verdict { ok, detail }
}

fn criterion_1() -> Verdict {
    suites((4..=8).map(|n| plucker_suite(n, 100, 100 + n as u64)).collect())
}

fn criterion_2() -> Verdict {
    suites((5..=8).map(|n| identities_suite(n, 50, 200 + n as u64)).collect())
}

fn criterion_3() -> Verdict {
    let mut checked = 0;
    let mut ok = true;
    for n in 5..=8 {
        let mut rng = seeded(300 + n as u64);
        for _ in 0..100 {
            let pv = plucker_of(&plucker_core::sampling::random_main_plane(n, &mut rng));
            let z = z_coordinates(&pv).expect("main stratum");
            for t in Tuple4::all_sorted(n) {
                checked += 1;
                ok &= cross_ratio_from_z(&t, &z).is_ok_and(|p| evaluate_cross_ratio(&pv, &t) == CrossRatioValue::Defined(p));
            }
        }
    }
    Verdict { ok, detail: format!("{checked} tuple evaluations over 400 planes") }
}

fn criterion_4() -> Verdict {
    suites((4..=7).map(|n| theorem6_suite(n, 2).expect("enumerable")).collect())
}

fn criterion_5() -> Verdict {
    let mut v = suites((4..=8).map(|n| momentmap_suite(n, 200, 500 + n as u64)).collect());
    let mut strata = 0;
    for ps in enumerate_parallel_structures(5).unwrap() {
        let poly = admissible_polytope(&ps.signature()).expect("admissible");
        for seed in 0..3 {
            v.ok &= in_relative_interior(&poly, &moment_map(&plucker_of(&witness_plane(&ps, seed))));
        }
        strata += 1;
    }
    v.detail.push_str(&format!("; witnesses interior on {strata} strata at n=5"));
    v
}

fn criterion_6() -> Verdict {
    let mut checked = 0;
    let mut ok = true;
    for n in 4..=6 {
        for sig in enumerate_strata(n).unwrap() {
            checked += 1;
            ok &= stabilizer_lattice(&sig).unwrap().rank() + admissible_polytope(&sig).unwrap().dim == n;
        }
    }
    Verdict { ok, detail: format!("{checked} strata") }
}

fn bell(n: usize) -> u64 {
    // Bell triangle
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    row[0]
}

fn choose(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn criterion_7() -> Verdict {
    let oracle = |n: usize| (0..=n - 2).map(|z| choose(n, z) * (bell(n - z) - 1)).sum::<u64>();
    let counts: Vec<(usize, u64, u64)> = (4..=5).map(|n| (n, enumerate_strata(n).unwrap().len() as u64, oracle(n))).collect();
    let ok = counts == [(4, 36, 36), (5, 171, 171)];
    let detail = counts.iter().map(|(n, got, want)| format!("n={n}: {got} (oracle {want})")).collect::<Vec<_>>().join(", ");
    Verdict { ok, detail }
}

fn criterion_8() -> Verdict {
    let report = check_g42(5).unwrap();
    let coordinates = Tuple4::all_sorted(4).len();
    let ok = report.passed() && coordinates == 1 && report.rows.len() == 38;
    Verdict { ok, detail: format!("{coordinates} coordinate, {} rows, all match: {}", report.rows.len(), report.passed()) }
}

fn criterion_9() -> Verdict {
    let report = check_g52(20, 52).unwrap();
    let matched = report.count(|v| matches!(v, RowVerdict::Match));
    let noted: Vec<_> = report.rows.iter().filter(|r| matches!(r.verdict, RowVerdict::NotedDiscrepancy { .. })).collect();
    let mismatched: Vec<_> = report.rows.iter().filter(|r| matches!(r.verdict, RowVerdict::Mismatch { .. })).collect();
    for row in noted.iter().chain(&mismatched) {
        println!("    {row}");
    }
    let ok = report.rows.len() == 35 && report.passed() && noted.iter().all(|r| r.label == "12");
    Verdict {
        ok,
        detail: format!("{} rows, {matched} match, {} noted, {} mismatch", report.rows.len(), noted.len(), mismatched.len()),
    }
}

fn criterion_10() -> Verdict {
    let tuple = |lp: LaurentPlane| {
        let r = limit_point(&lp).unwrap();
        let values: Vec<String> = r.limit_tuple.ordered_values().iter().map(|v| v.to_string()).collect();
        (r.limit_signature.to_string(), values, r.member_of_virtual)
    };
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let mut ok = tuple(d1()) == ("4,5".into(), s(&["1/2", "1/2", "1", "1", "1"]), true)
        && tuple(d2()) == ("3,4".into(), s(&["1", "1/2", "1/2", "inf", "inf"]), true);
    let mut rng = seeded(1000);
    let mut passed = 0;
    for _ in 0..50 {
        let i = rng.random_range(1..=4);
        let j = rng.random_range(i + 1..=5);
        let classes = (1..=5).filter(|&k| k != j).map(|k| if k == i { vec![i, j] } else { vec![k] }).collect();
        let ps = ParallelStructure::new(5, Default::default(), classes).unwrap();
        let family = perturbed_family(&witness_plane_with(&ps, &mut rng), &mut rng);
        let single = limit_point(&family).is_ok_and(|r| r.limit_signature.vanishing().len() == 1);
        if single && continuity_check(&family) {
            passed += 1;
        }
    }
    ok &= passed == 50;
    Verdict { ok, detail: format!("D1 and D2 exact, {passed}/50 single-vanishing families continuous") }
}

fn criterion_11() -> Verdict {
    suites((4..=7).map(|n| orbit_suite(n, 25, 1100 + n as u64)).collect())
}

fn criterion_12() -> Verdict {
    suites((5..=8).map(|n| gm_suite(n, 25, 1200 + n as u64)).collect())
}

/// Criteria that fail on two printed table entries; see the README.
const KNOWN_UNMET: &[usize] = &[9];

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("Plücker relations", criterion_1),
        ("cross-ratio identities", criterion_2),
        ("z-coordinate formulas", criterion_3),
        ("two-class polytopes", criterion_4),
        ("moment map", criterion_5),
        ("stabilizer plus polytope dimension", criterion_6),
        ("stratum census", criterion_7),
        ("G(4,2) golden", criterion_8),
        ("G(5,2) golden", criterion_9),
        ("degeneration continuity", criterion_10),
        ("orbit oracle equivalence", criterion_11),
        ("point configurations", criterion_12),
    ];
    let mut failed = Vec::new();
    println!();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        println!("{} criterion {:>2} {name}: {}", if v.ok { "PASS" } else { "FAIL" }, k + 1, v.detail);
        if !v.ok {
            failed.push(k + 1);
        }
    }
    println!("{} of 12 criteria pass; failing: {failed:?}", 12 - failed.len());
    assert_eq!(failed, KNOWN_UNMET, "failing criteria differ from the documented set");
}
