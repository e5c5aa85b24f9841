use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use plucker_core::crossratio::Tuple4;
use plucker_core::degeneration::{continuity_check, limit_point, LaurentPlane};
use plucker_core::golden::{check_g42, check_g52, GoldenReport, RowVerdict};
use plucker_core::momentmap::admissible_polytope;
use plucker_core::param_space::virtual_space_of;
use plucker_core::strata::{enumerate_strata, parallel_structure_of, parse_signature, stabilizer_lattice};
use plucker_core::suites::{
    identities_suite, momentmap_suite, orbit_suite, plucker_suite, theorem6_suite, SuiteReport,
};
use plucker_core::{classify_cross_ratio, is_admissible, Classification, Signature};
use serde_json::{json, Value};

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "plucker", version, about = "Torus-orbit combinatorics of 2-planes, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every stratum with its polytope and cross-ratio counts
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..=8))]
        n: u64,
        #[arg(long)]
        json: bool,
    },
    /// Run a seeded verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..=8))]
        n: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Limit of a one-parameter family read from a JSON file
    Limit {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify the cross-ratios of one stratum and describe its virtual space
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(4..=8))]
        n: u64,
        /// Vanishing pairs, e.g. "1,2;3,4"
        #[arg(long, allow_hyphen_values = true)]
        signature: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare against the embedded tables for G(4,2) or G(5,2)
    PaperCheck {
        #[arg(long, value_enum)]
        case: Case,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Plucker,
    Identities,
    Theorem6,
    Orbit,
    Momentmap,
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    G42,
    G52,
}

struct Outcome {
    code: u8,
    text: String,
}

impl Outcome {
    fn new(ok: bool, text: String) -> Self {
        Self { code: if ok { PASS } else { FAIL }, text }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self { code: USAGE, text: format!("error: {msg}") }
    }
}

fn render(json: bool, value: Value, text: String) -> String {
    if json {
        serde_json::to_string_pretty(&value).expect("serialisable")
    } else {
        text
    }
}

fn counts(sig: &Signature) -> (usize, usize, usize) {
    let mut c = (0, 0, 0);
    for t in Tuple4::all_sorted(sig.n()) {
        match classify_cross_ratio(sig, &t).expect("admissible signature") {
            Classification::Strong => c.0 += 1,
            Classification::Weak(_) => c.1 += 1,
            Classification::NonAdmissible => c.2 += 1,
        }
    }
    c
}

fn sig_label(sig: &Signature) -> String {
    if sig.is_main() {
        "-".into()
    } else {
        sig.to_string()
    }
}

fn enumerate(n: usize, json: bool) -> Outcome {
    let strata = match enumerate_strata(n) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    let mut rows = Vec::new();
    let mut text = format!("{:<40} {:>3} {:>4} {:>4} {:>6} {:>4} {:>6}\n", "signature", "dim", "vert", "stab", "strong", "weak", "nonadm");
    for sig in &strata {
        let poly = admissible_polytope(sig).expect("enumerated strata are admissible");
        let stab = stabilizer_lattice(sig).expect("enumerated strata are admissible").rank();
        let (strong, weak, nonadm) = counts(sig);
        let label = sig_label(sig);
        let _ = writeln!(
            text,
            "{label:<40} {:>3} {:>4} {stab:>4} {strong:>6} {weak:>4} {nonadm:>6}",
            poly.dim,
            poly.vertices.len()
        );
        rows.push(json!({
            "signature": label,
            "dim": poly.dim,
            "vertices": poly.vertices.len(),
            "stabilizer_rank": stab,
            "strong": strong,
            "weak": weak,
            "non_admissible": nonadm,
        }));
    }
    let _ = writeln!(text, "{} strata", strata.len());
    let value = json!({ "n": n, "count": strata.len(), "strata": rows });
    Outcome::new(true, render(json, value, text))
}

fn verify(suite: Suite, n: usize, samples: usize, seed: u64, json: bool) -> Outcome {
    let report: SuiteReport = match suite {
        Suite::Plucker => plucker_suite(n, samples, seed),
        Suite::Identities => identities_suite(n, samples, seed),
        Suite::Theorem6 => match theorem6_suite(n, samples.min(5)) {
            Ok(r) => r,
            Err(e) => return Outcome::new(false, format!("error: {e}")),
        },
        Suite::Orbit => orbit_suite(n, samples, seed),
        Suite::Momentmap => momentmap_suite(n, samples, seed),
    };
    let ok = report.passed();
    let mut text = report.to_string();
    let _ = writeln!(text, "{}", if ok { "PASS" } else { "FAIL" });
    let value = serde_json::to_value(&report).expect("serialisable");
    Outcome::new(ok, render(json, json!({ "passed": ok, "report": value }), text))
}

fn limit(path: &PathBuf, json: bool) -> Outcome {
    let raw = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(format!("{}: {e}", path.display())),
    };
    let family: LaurentPlane = match serde_json::from_str(&raw) {
        Ok(f) => f,
        Err(e) => return Outcome::usage(format!("{}: {e}", path.display())),
    };
    let report = match limit_point(&family) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let ok = continuity_check(&family);
    let values: Vec<String> = report.limit_tuple.ordered_values().iter().map(|v| v.to_string()).collect();
    let text = format!(
        "limit signature: {}\nlimit tuple: ({})\nmember of virtual space: {}\n",
        sig_label(&report.limit_signature),
        values.join(", "),
        report.member_of_virtual
    );
    let value = json!({
        "limit_signature": sig_label(&report.limit_signature),
        "limit_tuple": report.limit_tuple,
        "member_of_virtual": report.member_of_virtual,
    });
    Outcome::new(ok, render(json, value, text))
}

fn classify(n: usize, signature: &str, json: bool) -> Outcome {
    let sig = match parse_signature(n, signature) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e),
    };
    if !is_admissible(&sig) {
        let value = json!({ "signature": sig_label(&sig), "admissible": false });
        return Outcome::new(false, render(json, value, format!("{}: not admissible\n", sig_label(&sig))));
    }
    let ps = parallel_structure_of(&sig).expect("admissible");
    let poly = admissible_polytope(&sig).expect("admissible");
    let desc = virtual_space_of(&sig).expect("admissible");
    let mut text = format!("signature: {}\n", sig_label(&sig));
    let _ = writeln!(text, "zero rows: {:?}", ps.zero_rows());
    let _ = writeln!(text, "classes: {:?}", ps.classes());
    let _ = writeln!(text, "polytope: dim {}, {} vertices", poly.dim, poly.vertices.len());
    let mut tuples = Vec::new();
    for t in Tuple4::all_sorted(n) {
        let c = classify_cross_ratio(&sig, &t).expect("admissible");
        let label = match c {
            Classification::Strong => "strong".to_string(),
            Classification::Weak(v) => format!("weak {v}"),
            Classification::NonAdmissible => "non-admissible".to_string(),
        };
        let _ = writeln!(text, "  w{t} {label}");
        tuples.push(json!({ "tuple": t.to_string(), "class": label }));
    }
    let _ = writeln!(text, "constraints: {}", desc.constraints.len());
    for c in &desc.constraints {
        let monomial: Vec<String> = c.exponents.iter().map(|(t, e)| format!("w{t}^{e}")).collect();
        let _ = writeln!(text, "  {} = {}", monomial.join(" "), c.value);
    }
    let value = json!({
        "signature": sig_label(&sig),
        "admissible": true,
        "polytope": poly,
        "tuples": tuples,
        "virtual_space": desc,
    });
    Outcome::new(true, render(json, value, text))
}

fn paper_check(case: Case, json: bool) -> Outcome {
    let report: GoldenReport = match case {
        Case::G42 => check_g42(5),
        Case::G52 => check_g52(20, 52),
    }
    .expect("embedded tables are well formed");
    let ok = report.passed();
    let mut text = String::new();
    for row in &report.rows {
        let _ = writeln!(text, "{row}");
    }
    let matched = report.count(|v| matches!(v, RowVerdict::Match));
    let noted = report.count(|v| matches!(v, RowVerdict::NotedDiscrepancy { .. }));
    let mismatched = report.count(|v| matches!(v, RowVerdict::Mismatch { .. }));
    let _ = writeln!(
        text,
        "{}: {} rows, {matched} match, {noted} noted, {mismatched} mismatch: {}",
        report.case,
        report.rows.len(),
        if ok { "PASS" } else { "FAIL" }
    );
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            let verdict = match &r.verdict {
                RowVerdict::Match => "match",
                RowVerdict::NotedDiscrepancy { .. } => "noted-discrepancy",
                RowVerdict::Mismatch { .. } => "mismatch",
            };
            json!({ "label": r.label, "verdict": verdict, "detail": r.to_string() })
        })
        .collect();
    let value = json!({ "case": report.case, "passed": ok, "rows": rows });
    Outcome::new(ok, render(json, value, text))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Enumerate { n, json } => enumerate(n as usize, json),
        Command::Verify { suite, n, samples, seed, json } => verify(suite, n as usize, samples, seed, json),
        Command::Limit { family, json } => limit(&family, json),
        Command::Classify { n, signature, json } => classify(n as usize, &signature, json),
        Command::PaperCheck { case, json } => paper_check(case, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { PASS };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = run(cli);
    if outcome.code == USAGE {
        eprintln!("{}", outcome.text);
    } else {
        print!("{}", outcome.text);
        if !outcome.text.ends_with('\n') {
            println!();
        }
    }
    ExitCode::from(outcome.code)
}
