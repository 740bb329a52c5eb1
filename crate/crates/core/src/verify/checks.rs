use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{equidistribution, CheckId, Failure, Harness};
use crate::bijections::involution::segment_form_shuffled;
use crate::bijections::transfer::explicit_shuffled;
use crate::bijections::{Bijection, BijectionId, SegmentRule, UfuDdInvolution};
use crate::enumerate::{all_avoiding, all_paths, count_avoiding, motzkin_number, ClassSpec};
use crate::paths::{
    first_return_split, is_motzkin_word, strict_factor, Factorization, MotzkinPath, Pattern, Step, StrictFactorization,
};
use crate::trees::{
    classify, format_tree, left_leaf_correspondence, parse_tree, path_to_tree, right_leaf_correspondence, tree_stats,
    tree_to_path, LeafCorrespondence, MotzkinTree, Side, Turn, VertexRef,
};

type Outcome = (u64, Vec<Failure>);

pub(super) fn run(h: &Harness, check: CheckId, max_n: usize) -> Outcome {
    match check {
        CheckId::Roundtrip => sweep_lengths(max_n, &[], roundtrip),
        CheckId::StatsTable => sweep_lengths(max_n, &[], stats_table),
        CheckId::DyckFacts => sweep_lengths(max_n, &[], dyck_facts),
        CheckId::Bij1 => bijection(h, BijectionId::B1, max_n),
        CheckId::Bij2 => bijection(h, BijectionId::B2, max_n),
        CheckId::Bij3 => bijection(h, BijectionId::B3, max_n),
        CheckId::Bij4 => bijection(h, BijectionId::B4, max_n),
        CheckId::Bij5 => bijection(h, BijectionId::B5, max_n),
        CheckId::Invol => {
            let inv = h.registry.get(BijectionId::Invol).expect("INVOL registered");
            involution(h, inv, SegmentRule::Balanced, max_n)
        }
        CheckId::InvolLiteral => {
            let literal = UfuDdInvolution { rule: SegmentRule::Literal };
            involution(h, &literal, SegmentRule::Literal, max_n)
        }
        CheckId::Counts => counts(max_n),
    }
}

fn panic_message(payload: &(dyn std::any::Any + Send)) -> String {
    payload
        .downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| payload.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "non-string panic payload".to_string())
}

/// Runs `f` on every path of `class` in parallel; failures keep input order.
/// A panic inside `f` is recorded as a failure for that path.
fn sweep<T: Send>(
    class: &ClassSpec,
    f: impl Fn(usize, &MotzkinPath, &mut Vec<Failure>) -> T + Sync,
) -> (Vec<MotzkinPath>, Vec<Option<T>>, Vec<Failure>) {
    let paths: Vec<MotzkinPath> = all_avoiding(class).collect();
    let results: Vec<(Option<T>, Vec<Failure>)> = paths
        .par_iter()
        .enumerate()
        .map(|(i, p)| {
            let mut failures = Vec::new();
            let value = panic::catch_unwind(AssertUnwindSafe(|| f(i, p, &mut failures)));
            match value {
                Ok(v) => (Some(v), failures),
                Err(payload) => {
                    failures.push(Failure::new(p, "no panic", panic_message(payload.as_ref()), "panic"));
                    (None, failures)
                }
            }
        })
        .collect();
    let mut values = Vec::with_capacity(results.len());
    let mut failures = Vec::new();
    for (v, fs) in results {
        values.push(v);
        failures.extend(fs);
    }
    (paths, values, failures)
}

fn sweep_lengths(max_n: usize, avoid: &[Pattern], f: fn(&MotzkinPath, &mut Vec<Failure>)) -> Outcome {
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let (paths, _, fs) = sweep(&ClassSpec::new(n, avoid), |_, p, out| f(p, out));
        cases += paths.len() as u64;
        failures.extend(fs);
    }
    (cases, failures)
}

fn roundtrip(p: &MotzkinPath, out: &mut Vec<Failure>) {
    let text = p.to_string();
    match MotzkinPath::parse(&text) {
        Ok(q) if q == *p => {}
        other => out.push(Failure::new(&text, &text, format!("{other:?}"), "path-format-roundtrip")),
    }

    let t = path_to_tree(p);
    if t.weight() != p.len() {
        out.push(Failure::new(p, p.len(), t.weight(), "tree-weight"));
    }
    let back = tree_to_path(&t);
    if back != *p {
        out.push(Failure::new(p, p, &back, "path-tree-path"));
    }
    if path_to_tree(&back) != t {
        out.push(Failure::new(p, &t, path_to_tree(&back), "tree-path-tree"));
    }
    let tree_text = format_tree(&t);
    match parse_tree(&tree_text) {
        Ok(u) if u == t => {}
        other => out.push(Failure::new(p, &tree_text, format!("{other:?}"), "tree-format-roundtrip")),
    }

    let split = first_return_split(p.steps());
    if split.reassemble() != p.steps() {
        out.push(Failure::new(p, p, crate::paths::format_steps(&split.reassemble()), "first-return-reassembly"));
    }
    if let Factorization::Arch { inside, .. } = split {
        let inside_text = crate::paths::format_steps(inside);
        if !is_motzkin_word(inside) {
            out.push(Failure::new(p, "balanced interior", &inside_text, "arch-interior"));
            return;
        }
        let framed = strict_factor(inside, false).expect("unrestricted");
        if framed.reassemble() != inside {
            out.push(Failure::new(
                p,
                &inside_text,
                crate::paths::format_steps(&framed.reassemble()),
                "strict-factor-reassembly",
            ));
        }
        if let StrictFactorization::Framed { s, .. } = framed {
            if s.first() != Some(&Step::U) || s.last() != Some(&Step::D) {
                out.push(Failure::new(p, "strict core", crate::paths::format_steps(s), "strict-factor-shape"));
            }
            if p.avoids(&[Pattern::UU]) && strict_factor(inside, true).is_err() {
                out.push(Failure::new(p, "a >= 1", "a = 0", "uu-free-leading-flat"));
            }
        }
    }
}

/// Minimum label over the left leaves (the root label for the trivial tree).
fn left_leaf_min(t: &MotzkinTree) -> usize {
    if t.is_leaf() {
        return t.label;
    }
    t.leaves_on(Turn::Left).iter().map(|v| t.label_at(v)).min().expect("nontrivial tree has a first leaf")
}

fn stats_table(p: &MotzkinPath, out: &mut Vec<Failure>) {
    let s = p.statistics();
    for (name, stat, pattern) in [
        ("peaks", s.peaks, Pattern::UD),
        ("valleys", s.valleys, Pattern::DU),
        ("doublerises", s.doublerises, Pattern::UU),
        ("doublefalls", s.doublefalls, Pattern::DD),
        ("ufu", s.ufu, Pattern::UFU),
    ] {
        let count = p.count_pattern(pattern);
        if stat != count {
            out.push(Failure::new(p, count, stat, format!("{name}-vs-pattern-count")));
        }
    }
    if s.low_peaks > s.peaks || s.final_descent > s.doublefalls + 1 {
        out.push(Failure::new(
            p,
            "low_peaks <= peaks, final_descent <= doublefalls + 1",
            format!("{s:?}"),
            "stat-bounds",
        ));
    }

    let t = path_to_tree(p);
    let tree_side = tree_stats(&t);
    if tree_side != s.table() {
        out.push(Failure::new(p, format!("{:?}", s.table()), format!("{tree_side:?}"), "tree-table"));
    }
    let min_leaf = left_leaf_min(&t);
    if min_leaf != s.mpl {
        out.push(Failure::new(p, min_leaf, s.mpl, "mpl-vs-left-leaves"));
    }
}

/// Nearest ancestor that is a `side` child, or the root.
fn walk_up_to(leaf: &VertexRef, side: Turn) -> VertexRef {
    let mut at = leaf.parent().expect("leaf has a parent");
    while !at.is_root() && at.last_turn() != Some(side) {
        at = at.parent().expect("non-root");
    }
    at
}

fn check_correspondence(
    p: &MotzkinPath,
    t: &MotzkinTree,
    corr: &LeafCorrespondence,
    leaf_side: Turn,
    out: &mut Vec<Failure>,
) {
    let target_side = match leaf_side {
        Turn::Left => Turn::Right,
        Turn::Right => Turn::Left,
    };
    let label = if leaf_side == Turn::Left { "left" } else { "right" };
    let leaves = t.leaves_on(leaf_side);
    let targets = 1 + t.nodes_on(target_side).len();
    if corr.len() != leaves.len() || leaves.len() != targets {
        out.push(Failure::new(p, targets, leaves.len(), format!("{label}-leaf-correspondence-size")));
        return;
    }
    for leaf in &leaves {
        let Some(target) = corr.target_of(leaf) else {
            out.push(Failure::new(
                p,
                "a target",
                format!("none for {leaf}"),
                format!("{label}-leaf-correspondence-total"),
            ));
            continue;
        };
        let walked = walk_up_to(leaf, target_side);
        if *target != walked {
            out.push(Failure::new(p, &walked, target, format!("{label}-leaf-correspondence-walk")));
        }
        if corr.leaf_of(target) != Some(leaf) {
            out.push(Failure::new(
                p,
                leaf,
                format!("{:?}", corr.leaf_of(target)),
                format!("{label}-leaf-correspondence-inverse"),
            ));
        }
    }
}

fn dyck_facts(p: &MotzkinPath, out: &mut Vec<Failure>) {
    let t = path_to_tree(p);
    if !t.is_leaf() {
        let left = left_leaf_correspondence(&t).expect("nontrivial");
        check_correspondence(p, &t, &left, Turn::Left, out);
        let right = right_leaf_correspondence(&t).expect("nontrivial");
        check_correspondence(p, &t, &right, Turn::Right, out);
    }
    if !p.is_empty() && !p.steps().contains(&Step::F) {
        let s = p.statistics();
        if s.peaks != s.valleys + 1 {
            out.push(Failure::new(p, s.valleys + 1, s.peaks, "dyck-peaks-valleys"));
        }
        if s.doublerises != s.doublefalls {
            out.push(Failure::new(p, s.doublefalls, s.doublerises, "dyck-doublerises-doublefalls"));
        }
    }
}

fn vertex_census(t: &MotzkinTree) -> BTreeMap<(u8, bool, usize), usize> {
    let mut census = BTreeMap::new();
    for (_, c) in classify(t) {
        let side = match c.side {
            Side::Root => 0,
            Side::Left => 1,
            Side::Right => 2,
        };
        *census.entry((side, c.kind == crate::trees::VertexKind::Leaf, c.label)).or_insert(0) += 1;
    }
    census
}

fn mirrored(census: &BTreeMap<(u8, bool, usize), usize>) -> BTreeMap<(u8, bool, usize), usize> {
    census
        .iter()
        .map(|(&(side, leaf, label), &count)| {
            let side = match side {
                1 => 2,
                2 => 1,
                s => s,
            };
            ((side, leaf, label), count)
        })
        .collect()
}

fn transport(h: &Harness, id: BijectionId, p: &MotzkinPath, image: &MotzkinPath, out: &mut Vec<Failure>) {
    let pair = |a: usize, b: usize| format!("({a}, {b})");
    match id {
        BijectionId::B1 => {
            let before = (p.count_pattern(Pattern::UU), p.count_pattern(Pattern::DU));
            let after = (image.count_pattern(Pattern::DU), image.count_pattern(Pattern::UU));
            if before != after {
                out.push(Failure::new(
                    p,
                    pair(before.0, before.1),
                    pair(after.0, after.1),
                    "transport: (#UU, #DU) swap",
                ));
            }
            let b = h.registry.get(id).expect("registered");
            let twice = b.explicit(image);
            if twice != *p {
                out.push(Failure::new(p, p, &twice, "involution"));
            }
            let t = path_to_tree(p);
            if vertex_census(&t.flip()) != mirrored(&vertex_census(&t)) {
                out.push(Failure::new(p, "mirrored vertex census", "mismatch", "flip-census"));
            }
        }
        BijectionId::B2 => {
            let (dd, du) = (p.count_pattern(Pattern::DD), image.count_pattern(Pattern::DU));
            if dd != du {
                out.push(Failure::new(p, dd, du, "transport: #DD -> #DU"));
            }
        }
        BijectionId::B3 => {
            let low = p.statistics().low_peaks;
            let descent = image.statistics().final_descent;
            if low != descent {
                out.push(Failure::new(p, low, descent, "transport: low peaks -> final descent"));
            }
            let ends_flat = image.steps().last() == Some(&Step::F);
            if ends_flat != (low == 0) {
                out.push(Failure::new(p, low == 0, ends_flat, "ends in F iff no low peaks"));
            }
        }
        BijectionId::B4 => {
            let (ufu, du) = (p.count_pattern(Pattern::UFU), image.count_pattern(Pattern::DU));
            if ufu != du {
                out.push(Failure::new(p, ufu, du, "transport: #UFU -> #DU"));
            }
            if let (Some(b1), Some(b5)) = (h.registry.get(BijectionId::B1), h.registry.get(BijectionId::B5)) {
                let composed = b5.explicit(&b1.explicit(p));
                if composed != *image {
                    out.push(Failure::new(p, &composed, image, "B4 = B5 token step after flip"));
                }
            }
        }
        BijectionId::B5 => {
            let (before, after) = (p.statistics().mpl, image.statistics().mpl);
            if after != before + 1 {
                out.push(Failure::new(p, before + 1, after, "transport: mpl + 1"));
            }
        }
        BijectionId::Invol => {}
    }
}

fn distribution_pair(id: BijectionId, n: usize) -> Option<super::Equidistribution> {
    let uu = ClassSpec::new(n, &[Pattern::UU]);
    let ud_next = ClassSpec::new(n + 1, &[Pattern::UD]);
    let count = |q: Pattern| move |p: &MotzkinPath| p.count_pattern(q);
    Some(match id {
        BijectionId::B1 => {
            equidistribution(count(Pattern::UU), &ClassSpec::all(n), count(Pattern::DU), &ClassSpec::all(n))
        }
        BijectionId::B2 => equidistribution(count(Pattern::DD), &uu, count(Pattern::DU), &ud_next),
        BijectionId::B3 => {
            equidistribution(|p| p.statistics().low_peaks, &uu, |p| p.statistics().final_descent, &ud_next)
        }
        BijectionId::B4 => equidistribution(count(Pattern::UFU), &uu, count(Pattern::DU), &ud_next),
        BijectionId::B5 => equidistribution(
            |p| p.statistics().mpl + 1,
            &ClassSpec::new(n, &[Pattern::DU]),
            |p| p.statistics().mpl,
            &ud_next,
        ),
        BijectionId::Invol => return None,
    })
}

fn in_class(p: &MotzkinPath, len: usize, avoid: &[Pattern]) -> bool {
    p.len() == len && p.avoids(avoid)
}

fn bijection(h: &Harness, id: BijectionId, max_n: usize) -> Outcome {
    let b = h.registry.get(id).unwrap_or_else(|| panic!("{id} is not registered"));
    let shift = b.length_shift();
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let m = n + shift;
        let (domain, images, fs) = sweep(&ClassSpec::new(n, b.domain()), |_, p, out| {
            let recursive = b.recursive(p);
            let explicit = b.explicit(p);
            if recursive != explicit {
                out.push(Failure::new(p, &recursive, &explicit, "mode-agreement"));
            }
            if !in_class(&explicit, m, b.codomain()) {
                out.push(Failure::new(p, format!("a {m}-path avoiding {:?}", b.codomain()), &explicit, "codomain"));
                return explicit;
            }
            let back = b.invert(&explicit);
            if back != *p {
                out.push(Failure::new(p, p, &back, "inverse after forward"));
            }
            transport(h, id, p, &explicit, out);
            explicit
        });
        cases += domain.len() as u64;
        failures.extend(fs);

        let mut sorted: Vec<MotzkinPath> = images.into_iter().flatten().collect();
        sorted.sort();
        let codomain: Vec<MotzkinPath> = all_avoiding(&ClassSpec::new(m, b.codomain())).collect();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                failures.push(Failure::new(&pair[0], "one preimage", "several preimages", "image-not-injective"));
            }
        }
        for q in &codomain {
            if sorted.binary_search(q).is_err() {
                failures.push(Failure::new(q, "in the image", "missing", "image-not-onto"));
            }
        }

        let (_, _, fs) = sweep(&ClassSpec::new(m, b.codomain()), |_, q, out| {
            let back = b.invert(q);
            if !in_class(&back, n, b.domain()) {
                out.push(Failure::new(q, format!("a {n}-path avoiding {:?}", b.domain()), &back, "inverse codomain"));
                return;
            }
            let again = b.explicit(&back);
            if again != *q {
                out.push(Failure::new(q, q, &again, "forward after inverse"));
            }
        });
        failures.extend(fs);

        if let Some(eq) = distribution_pair(id, n) {
            if !eq.equal {
                failures.push(Failure::new(
                    format!("n={n}"),
                    format!("{:?}", eq.left),
                    format!("{:?}", eq.right),
                    "equidistribution",
                ));
            }
        }

        if id == BijectionId::B3 && n <= h.order_cap {
            let (_, _, fs) = sweep(&ClassSpec::new(n, b.domain()), |i, p, out| {
                let mut rng = ChaCha8Rng::seed_from_u64(h.seed ^ ((n as u64) << 40) ^ i as u64);
                let reference = b.explicit(p);
                for _ in 0..h.order_trials {
                    let shuffled = explicit_shuffled(p, &mut rng);
                    if shuffled != reference {
                        out.push(Failure::new(p, &reference, &shuffled, "subtree transfer order independence"));
                        break;
                    }
                }
            });
            failures.extend(fs);
        }
    }
    (cases, failures)
}

fn involution(h: &Harness, inv: &dyn Bijection, rule: SegmentRule, max_n: usize) -> Outcome {
    let b2 = h.registry.get(BijectionId::B2).expect("B2 registered");
    let b4 = h.registry.get(BijectionId::B4).expect("B4 registered");
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let (paths, _, fs) = sweep(&ClassSpec::new(n, &[Pattern::UU]), |i, p, out| {
            let segment = inv.explicit(p);
            let composition = b2.invert(&b4.recursive(p));
            if segment != composition {
                out.push(Failure::new(p, &composition, &segment, "segment form = B2 inverse after B4"));
            }
            if !in_class(&segment, n, &[Pattern::UU]) {
                out.push(Failure::new(p, format!("a UU-free {n}-path"), &segment, "codomain"));
                return;
            }
            let twice = inv.explicit(&segment);
            if twice != *p {
                out.push(Failure::new(p, p, &twice, "involution"));
            }
            let before = (p.count_pattern(Pattern::UFU), p.count_pattern(Pattern::DD));
            let after = (segment.count_pattern(Pattern::DD), segment.count_pattern(Pattern::UFU));
            if before != after {
                out.push(Failure::new(p, format!("{before:?}"), format!("{after:?}"), "(#UFU, #DD) exchange"));
            }
            if n <= h.order_cap {
                let mut rng = ChaCha8Rng::seed_from_u64(h.seed ^ ((n as u64) << 40) ^ i as u64);
                for _ in 0..h.order_trials {
                    let shuffled = segment_form_shuffled(p, rule, &mut rng);
                    if shuffled != segment {
                        out.push(Failure::new(p, &segment, &shuffled, "segment order independence"));
                        break;
                    }
                }
            }
        });
        cases += paths.len() as u64;
        failures.extend(fs);
    }
    (cases, failures)
}

fn counts(max_n: usize) -> Outcome {
    use Pattern::*;
    let count = |n: usize, avoid: &[Pattern]| count_avoiding(&ClassSpec::new(n, avoid));
    let results: Vec<Vec<Failure>> = (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut out = Vec::new();
            let label = format!("n={n}");
            let (uu, du, ud_next) = (count(n, &[UU]), count(n, &[DU]), count(n + 1, &[UD]));
            if uu != du || du != ud_next {
                out.push(Failure::new(&label, uu, format!("{du}, {ud_next}"), "|M_n(UU)| = |M_n(DU)| = |M_{n+1}(UD)|"));
            }
            let (uudd, uddu_next) = (count(n, &[UU, DD]), count(n + 1, &[UD, DU]));
            if uudd != uddu_next {
                out.push(Failure::new(&label, uudd, uddu_next, "|M_n(UU,DD)| = |M_{n+1}(UD,DU)|"));
            }
            let no_low =
                all_avoiding(&ClassSpec::new(n, &[UU])).filter(|p| p.statistics().low_peaks == 0).count() as u64;
            let ud = count(n, &[UD]);
            if no_low != ud {
                out.push(Failure::new(&label, ud, no_low, "|{p in M_n(UU): no low peaks}| = |M_n(UD)|"));
            }
            let paths: Vec<MotzkinPath> = all_paths(n).collect();
            let expected = motzkin_number(n);
            if num_bigint::BigUint::from(paths.len()) != expected {
                out.push(Failure::new(&label, &expected, paths.len(), "|M_n| = Motzkin number"));
            }
            if !paths.windows(2).all(|w| w[0] < w[1]) {
                out.push(Failure::new(&label, "strictly increasing", "out of order", "generation order"));
            }
            out
        })
        .collect();
    ((max_n + 1) as u64, results.into_iter().flatten().collect())
}
