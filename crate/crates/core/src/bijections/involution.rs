//! The involution on `M_n(UU)` that exchanges `#UFU` and `#DD`.
//!
//! As a composition it is the inverse of [`super::LabelExchange`] after
//! [`super::FlipSlide`]. The direct segment form works on critical upsteps
//! (a `U` followed by `F`): the segment strictly between a critical `U` and its
//! matching `D` is left alone if it is all flats, and otherwise has the shape
//! `F^a·S·F^b` with `a ≥ 1` and `S` strict; it is replaced by
//! `F^(b+1)·S·F^(a−1)`. Segments of different critical upsteps only share
//! whole sub-arches, so the replacements commute.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Bijection, BijectionId, FlipSlide, LabelExchange};
use crate::paths::{MotzkinPath, Pattern, Step};

/// Which description [`super::involution`] evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvolutionForm {
    Segment,
    Composition,
}

/// Replacement applied to a framed segment `F^a·S·F^b`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SegmentRule {
    /// `F^(b+1)·S·F^(a−1)`, length preserving.
    #[default]
    Balanced,
    /// `F^b·S·F^(a−1)`, as sometimes quoted. Drops one step per replaced
    /// segment; kept as a negative control for the harness.
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Item {
    Flat,
    Arch(usize),
}

/// The path as nested arches: `interiors[i]` is the item sequence strictly
/// inside the `i`-th upstep (numbered left to right).
struct ArchForest {
    top: Vec<Item>,
    interiors: Vec<Vec<Item>>,
}

impl ArchForest {
    fn new(steps: &[Step]) -> Self {
        let mut interiors: Vec<Vec<Item>> = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        let mut top = Vec::new();
        for &s in steps {
            let item = match s {
                Step::U => {
                    let id = interiors.len();
                    interiors.push(Vec::new());
                    let item = Item::Arch(id);
                    match open.last() {
                        Some(&parent) => interiors[parent].push(item),
                        None => top.push(item),
                    }
                    open.push(id);
                    continue;
                }
                Step::F => Item::Flat,
                Step::D => {
                    open.pop().expect("balanced word");
                    continue;
                }
            };
            match open.last() {
                Some(&parent) => interiors[parent].push(item),
                None => top.push(item),
            }
        }
        Self { top, interiors }
    }

    /// Arches whose interior starts with a flatstep, left to right.
    fn critical(&self) -> Vec<usize> {
        (0..self.interiors.len()).filter(|&i| self.interiors[i].first() == Some(&Item::Flat)).collect()
    }

    fn rewrite(&mut self, arch: usize, rule: SegmentRule) {
        let items = &self.interiors[arch];
        let Some(first) = items.iter().position(|&it| it != Item::Flat) else {
            return;
        };
        let last = items.iter().rposition(|&it| it != Item::Flat).expect("has an arch");
        let a = first;
        let b = items.len() - 1 - last;
        debug_assert!(a >= 1, "critical segment starts with a flatstep");
        let lead = match rule {
            SegmentRule::Balanced => b + 1,
            SegmentRule::Literal => b,
        };
        let mut replaced = vec![Item::Flat; lead];
        replaced.extend_from_slice(&items[first..=last]);
        replaced.extend(std::iter::repeat_n(Item::Flat, a - 1));
        self.interiors[arch] = replaced;
    }

    fn emit(&self, items: &[Item], out: &mut Vec<Step>) {
        for &it in items {
            match it {
                Item::Flat => out.push(Step::F),
                Item::Arch(id) => {
                    out.push(Step::U);
                    self.emit(&self.interiors[id], out);
                    out.push(Step::D);
                }
            }
        }
    }

    fn into_steps(self) -> Vec<Step> {
        let mut out = Vec::new();
        self.emit(&self.top, &mut out);
        out
    }
}

fn segment_form_ordered(p: &MotzkinPath, rule: SegmentRule, order: impl FnOnce(&mut Vec<usize>)) -> MotzkinPath {
    let mut forest = ArchForest::new(p.steps());
    let mut critical = forest.critical();
    order(&mut critical);
    for arch in critical {
        forest.rewrite(arch, rule);
    }
    MotzkinPath::from_steps_unchecked(forest.into_steps())
}

/// Segment form, processing critical upsteps left to right.
pub fn segment_form(p: &MotzkinPath, rule: SegmentRule) -> MotzkinPath {
    segment_form_ordered(p, rule, |_| {})
}

/// Segment form, processing critical upsteps in a random order.
pub fn segment_form_shuffled<R: Rng + ?Sized>(p: &MotzkinPath, rule: SegmentRule, rng: &mut R) -> MotzkinPath {
    segment_form_ordered(p, rule, |order| order.shuffle(rng))
}

/// Inverse of [`LabelExchange`] after [`FlipSlide`], using the recursive
/// form of the latter.
pub fn composition_form(p: &MotzkinPath) -> MotzkinPath {
    LabelExchange.invert(&FlipSlide.recursive(p))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct UfuDdInvolution {
    pub rule: SegmentRule,
}

impl Bijection for UfuDdInvolution {
    fn id(&self) -> BijectionId {
        BijectionId::Invol
    }

    fn summary(&self) -> &'static str {
        "M_n(UU) -> M_n(UU): rewrite the segment under each critical upstep (exchanges #UFU and #DD)"
    }

    fn domain(&self) -> &'static [Pattern] {
        &[Pattern::UU]
    }

    fn codomain(&self) -> &'static [Pattern] {
        &[Pattern::UU]
    }

    fn length_shift(&self) -> usize {
        0
    }

    /// Composition form.
    fn recursive(&self, p: &MotzkinPath) -> MotzkinPath {
        composition_form(p)
    }

    /// Segment form.
    fn explicit(&self, p: &MotzkinPath) -> MotzkinPath {
        segment_form(p, self.rule)
    }

    fn invert(&self, q: &MotzkinPath) -> MotzkinPath {
        segment_form(q, self.rule)
    }
}
