//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
//!
//! Run with `cargo test --test acceptance`. Oracles here are string scans
//! written independently of the library's statistics code.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use motzkin::bijections::involution::{segment_form, segment_form_shuffled, SegmentRule};
use motzkin::bijections::{b1, b2, b2_inverse, b3, b4, b5, involution, InvolutionForm};
use motzkin::trees::{format_tree, path_to_tree, tree_stats, tree_to_path};
use motzkin::verify::run_check;
use motzkin::{
    all_avoiding, all_paths, motzkin_number, BijectionRegistry, CheckId, ClassSpec, Harness, Mode, MotzkinPath, Pattern,
};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const N: usize = 12;

type Map = fn(&MotzkinPath, Mode) -> Result<MotzkinPath, motzkin::BijectionError>;
type Criterion = (&'static str, fn() -> Outcome);
type Transport = Box<dyn Fn(usize) -> Option<String>>;

fn class(n: usize, avoid: &[Pattern]) -> Vec<MotzkinPath> {
    all_avoiding(&ClassSpec::new(n, avoid)).collect()
}

fn occurrences(s: &str, pat: &str) -> usize {
    (0..=s.len().saturating_sub(pat.len())).filter(|&i| s[i..].starts_with(pat)).count()
}

fn low_peaks(s: &str) -> usize {
    let mut h = 0i64;
    let mut prev = ' ';
    let mut count = 0;
    for c in s.chars() {
        h += match c {
            'U' => 1,
            'D' => -1,
            _ => 0,
        };
        if c == 'D' && prev == 'U' && h == 0 {
            count += 1;
        }
        prev = c;
    }
    count
}

fn final_descent(s: &str) -> usize {
    s.chars().rev().take_while(|&c| c == 'D').count()
}

/// Minimum k over runs U F^k D; the length for an all-flat path.
fn mpl(s: &str) -> usize {
    let b = s.as_bytes();
    (0..b.len())
        .filter(|&i| b[i] == b'U')
        .filter_map(|i| {
            let k = b[i + 1..].iter().take_while(|&&c| c == b'F').count();
            (b.get(i + 1 + k) == Some(&b'D')).then_some(k)
        })
        .min()
        .unwrap_or(b.len())
}

struct Outcome {
    ok: bool,
    note: String,
}

fn outcome(ok: bool, note: impl Into<String>) -> Outcome {
    Outcome { ok, note: note.into() }
}

fn first_bad<T>(items: impl IntoIterator<Item = T>, bad: impl Fn(&T) -> bool) -> Option<T> {
    items.into_iter().find(|x| bad(x))
}

fn c1_examples() -> Outcome {
    let start = Instant::now();
    let p = |s: &str| s.parse::<MotzkinPath>().unwrap();
    let got = [
        b1(&p("UFDUFFUDD"), Mode::Checked).unwrap().to_string(),
        b2(&p("UFDUFFUDD"), Mode::Checked).unwrap().to_string(),
        b3(&p("UFDUFFUDD"), Mode::Checked).unwrap().to_string(),
        b4(&p("UFDUFFUDD"), Mode::Checked).unwrap().to_string(),
        b5(&p("UFDFUUFFDDFFUD"), Mode::Checked).unwrap().to_string(),
        format_tree(&path_to_tree(&p("FFFUFUDUUFFDDFUDD"))),
    ];
    let want =
        ["UUDFFUDDF", "UUFDUFFDDF", "UFDUFUFDDF", "UUFDFUFDDF", "UFFDUUFFFDDFUFD", "(3 (1 0 (0 (0 2 0) (1 0 0))) 0)"];
    let elapsed = start.elapsed();
    let mismatches = got.iter().zip(want).filter(|(g, w)| g.as_str() != *w).count();
    outcome(mismatches == 0 && elapsed < Duration::from_secs(1), format!("{mismatches} mismatches in {elapsed:?}"))
}

fn c2_roundtrips() -> Outcome {
    let mut cases = 0u64;
    let mut bad = 0u64;
    for n in 0..=10 {
        for p in all_paths(n) {
            cases += 1;
            let t = path_to_tree(&p);
            if tree_to_path(&t) != p || path_to_tree(&tree_to_path(&t)) != t || t.weight() != n {
                bad += 1;
            }
        }
    }
    let expected: BigUint = (0..=10).map(motzkin_number).sum();
    let report = run_check(CheckId::Roundtrip, 10);
    outcome(
        bad == 0 && BigUint::from(cases) == expected && report.passed(),
        format!("{cases} cases, {bad} failures, harness: {}", report.summary_line()),
    )
}

fn c3_mode_agreement() -> Outcome {
    let registry = BijectionRegistry::standard();
    let mut cases = 0;
    for b in registry.iter().filter(|b| b.id() != motzkin::BijectionId::Invol) {
        for n in 0..=N {
            for p in class(n, b.domain()) {
                cases += 1;
                if b.recursive(&p) != b.explicit(&p) {
                    return outcome(false, format!("{} disagrees on {p}", b.id()));
                }
            }
        }
    }
    outcome(true, format!("{cases} cases"))
}

fn c4_bijectivity() -> Outcome {
    let maps: [(Map, Pattern, &str); 4] =
        [(b2, Pattern::UU, "b2"), (b3, Pattern::UU, "b3"), (b4, Pattern::UU, "b4"), (b5, Pattern::DU, "b5")];
    for n in 0..=N {
        let target = class(n + 1, &[Pattern::UD]);
        for (f, avoid, name) in maps {
            let mut image: Vec<MotzkinPath> =
                class(n, &[avoid]).iter().map(|p| f(p, Mode::Explicit).unwrap()).collect();
            image.sort();
            if image != target {
                return outcome(false, format!("{name} image differs from M_{}(UD)", n + 1));
            }
        }
    }
    outcome(true, format!("n <= {N}"))
}

fn c5_involutions() -> Outcome {
    for n in 0..=N {
        if let Some(p) = first_bad(all_paths(n), |p| b1(&b1(p, Mode::Explicit).unwrap(), Mode::Explicit).unwrap() != *p)
        {
            return outcome(false, format!("b1 twice moves {p}"));
        }
        for p in class(n, &[Pattern::UU]) {
            let q = involution(&p, InvolutionForm::Segment).unwrap();
            if involution(&q, InvolutionForm::Segment).unwrap() != p {
                return outcome(false, format!("involution twice moves {p}"));
            }
            let composed = b2_inverse(&b4(&p, Mode::Recursive).unwrap()).unwrap();
            if composed != q {
                return outcome(false, format!("segment form {q} != composition {composed} on {p}"));
            }
            if n <= 10 {
                let mut rng = ChaCha8Rng::seed_from_u64(n as u64 * 7919 + p.len() as u64);
                for _ in 0..20 {
                    if segment_form_shuffled(&p, SegmentRule::Balanced, &mut rng) != q {
                        return outcome(false, format!("processing order matters on {p}"));
                    }
                }
            }
        }
    }
    outcome(true, format!("n <= {N}, 20 orders per path for n <= 10"))
}

fn c6_transport() -> Outcome {
    let checks: Vec<(&str, Transport)> = vec![
        (
            "b1 (UU,DU)",
            Box::new(|n| {
                first_bad(all_paths(n), |p| {
                    let (s, t) = (p.to_string(), b1(p, Mode::Explicit).unwrap().to_string());
                    (occurrences(&s, "UU"), occurrences(&s, "DU")) != (occurrences(&t, "DU"), occurrences(&t, "UU"))
                })
                .map(|p| p.to_string())
            }),
        ),
        (
            "b2 DD->DU",
            Box::new(|n| {
                first_bad(class(n, &[Pattern::UU]), |p| {
                    occurrences(&p.to_string(), "DD") != occurrences(&b2(p, Mode::Explicit).unwrap().to_string(), "DU")
                })
                .map(|p| p.to_string())
            }),
        ),
        (
            "b3 low peaks",
            Box::new(|n| {
                first_bad(class(n, &[Pattern::UU]), |p| {
                    let (s, t) = (p.to_string(), b3(p, Mode::Explicit).unwrap().to_string());
                    low_peaks(&s) != final_descent(&t) || t.ends_with('F') != (low_peaks(&s) == 0)
                })
                .map(|p| p.to_string())
            }),
        ),
        (
            "b4 UFU->DU",
            Box::new(|n| {
                first_bad(class(n, &[Pattern::UU]), |p| {
                    occurrences(&p.to_string(), "UFU") != occurrences(&b4(p, Mode::Explicit).unwrap().to_string(), "DU")
                })
                .map(|p| p.to_string())
            }),
        ),
        (
            "b5 mpl+1",
            Box::new(|n| {
                first_bad(class(n, &[Pattern::DU]), |p| {
                    mpl(&p.to_string()) + 1 != mpl(&b5(p, Mode::Explicit).unwrap().to_string())
                })
                .map(|p| p.to_string())
            }),
        ),
        (
            "involution (UFU,DD)",
            Box::new(|n| {
                first_bad(class(n, &[Pattern::UU]), |p| {
                    let (s, t) = (p.to_string(), involution(p, InvolutionForm::Segment).unwrap().to_string());
                    (occurrences(&s, "UFU"), occurrences(&s, "DD")) != (occurrences(&t, "DD"), occurrences(&t, "UFU"))
                })
                .map(|p| p.to_string())
            }),
        ),
    ];
    for (name, check) in &checks {
        for n in 0..=N {
            if let Some(p) = check(n) {
                return outcome(false, format!("{name} violated on {p:?}"));
            }
        }
    }
    outcome(true, format!("{} statistics, n <= {N}", checks.len()))
}

fn c7_counts() -> Outcome {
    let size = |n: usize, avoid: &[Pattern]| class(n, avoid).len();
    for n in 0..=N {
        let uu = size(n, &[Pattern::UU]);
        if uu != size(n, &[Pattern::DU]) || uu != size(n + 1, &[Pattern::UD]) {
            return outcome(false, format!("single-pattern counts differ at n={n}"));
        }
        if size(n, &[Pattern::UU, Pattern::DD]) != size(n + 1, &[Pattern::UD, Pattern::DU]) {
            return outcome(false, format!("two-pattern counts differ at n={n}"));
        }
        let no_low = class(n, &[Pattern::UU]).iter().filter(|p| low_peaks(&p.to_string()) == 0).count();
        if no_low != size(n, &[Pattern::UD]) {
            return outcome(false, format!("no-low-peak count differs at n={n}"));
        }
        if BigUint::from(all_paths(n).count()) != motzkin_number(n) {
            return outcome(false, format!("|M_{n}| differs from the recurrence"));
        }
    }
    let m14 = motzkin_number(14) == BigUint::from(113_634u32);
    outcome(m14, format!("n <= {N}, M_14 = {}", motzkin_number(14)))
}

fn c8_dyck() -> Outcome {
    let mut cases = 0;
    for n in 1..=14 {
        for p in all_avoiding(&ClassSpec::new(n, &[])).filter(|p| !p.to_string().contains('F')) {
            cases += 1;
            let s = p.to_string();
            if occurrences(&s, "UD") != occurrences(&s, "DU") + 1 || occurrences(&s, "UU") != occurrences(&s, "DD") {
                return outcome(false, format!("fails on {s}"));
            }
        }
    }
    let report = run_check(CheckId::DyckFacts, 14);
    outcome(report.passed(), format!("{cases} Dyck paths; harness: {}", report.summary_line()))
}

fn c9_table() -> Outcome {
    for n in 0..=10 {
        if let Some(p) = first_bad(all_paths(n), |p| tree_stats(&path_to_tree(p)) != p.statistics().table()) {
            return outcome(false, format!("tree and path disagree on {p}"));
        }
    }
    let report = run_check(CheckId::StatsTable, 10);
    outcome(report.passed(), report.summary_line())
}

fn c10_negative_control() -> Outcome {
    let short = segment_form(&"UFUDFD".parse().unwrap(), SegmentRule::Literal);
    let report = run_check(CheckId::InvolLiteral, N);
    outcome(
        short.len() == 5 && !report.passed(),
        format!("literal rule gives \"{short}\" (length {}); expected-fail: {}", short.len(), report.summary_line()),
    )
}

fn c11_runtime() -> Outcome {
    let timed = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let start = Instant::now();
        let reports = pool.install(|| Harness::standard().run_all(N));
        (start.elapsed(), reports.iter().all(|r| r.passed()))
    };
    let (single, single_ok) = timed(1);
    let (parallel, parallel_ok) = timed(0);
    let ok = single_ok && parallel_ok && single < Duration::from_secs(300) && parallel < Duration::from_secs(60);
    outcome(ok, format!("suite at n={N}: single-threaded {single:?}, parallel {parallel:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("example vectors", c1_examples),
        ("path/tree round trips", c2_roundtrips),
        ("mode agreement", c3_mode_agreement),
        ("bijectivity", c4_bijectivity),
        ("involutions", c5_involutions),
        ("statistic transport", c6_transport),
        ("counting identities", c7_counts),
        ("Dyck specialization", c8_dyck),
        ("statistics table", c9_table),
        ("negative control", c10_negative_control),
        ("runtime", c11_runtime),
    ];
    let mut results = BTreeMap::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let Outcome { ok, note } = run();
        println!(
            "{} criterion {:>2} {name}: {note} [{:.2?}]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed()
        );
        results.insert(i + 1, ok);
    }
    let failed: Vec<usize> = results.iter().filter(|(_, ok)| !**ok).map(|(i, _)| *i).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", results.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
