//! `M_n(DU) → M_{n+1}(UD)`: every plateau (and every peak) grows by one.
//!
//! Recursive form: `ε ↦ F`, `F·R ↦ F·φ(R)`, `U·R·D ↦ U·φ(R)·D`,
//! `U·R·D·F·S ↦ U·φ(R)·D·φ(S)`.
//!
//! A DU-free path has positive right nodes, so the southwest token slide of
//! [`super::slide::lift_tree`] applies directly, without a flip. Each left
//! leaf receives exactly one token, so the minimum plateau length goes up by
//! exactly one.

use super::slide::{lift_tree, unlift_tree};
use super::{Bijection, BijectionId};
use crate::paths::{first_return_split, Factorization, MotzkinPath, Pattern, Step};
use crate::trees::{path_to_tree, tree_to_path};

#[derive(Clone, Copy, Debug, Default)]
pub struct PlateauLift;

fn rewrite(mut w: &[Step], out: &mut Vec<Step>) {
    loop {
        match first_return_split(w) {
            Factorization::Empty => {
                out.push(Step::F);
                return;
            }
            Factorization::Flat { rest } => {
                out.push(Step::F);
                w = rest;
            }
            Factorization::Arch { inside, rest: [] } => {
                out.push(Step::U);
                rewrite(inside, out);
                out.push(Step::D);
                return;
            }
            Factorization::Arch { inside, rest } => {
                assert_eq!(rest[0], Step::F, "DU-free path continues with a flatstep after an arch");
                out.push(Step::U);
                rewrite(inside, out);
                out.push(Step::D);
                w = &rest[1..];
            }
        }
    }
}

impl Bijection for PlateauLift {
    fn id(&self) -> BijectionId {
        BijectionId::B5
    }

    fn summary(&self) -> &'static str {
        "M_n(DU) -> M_{n+1}(UD): add a root token, slide tokens southwest"
    }

    fn domain(&self) -> &'static [Pattern] {
        &[Pattern::DU]
    }

    fn codomain(&self) -> &'static [Pattern] {
        &[Pattern::UD]
    }

    fn length_shift(&self) -> usize {
        1
    }

    fn recursive(&self, p: &MotzkinPath) -> MotzkinPath {
        let mut out = Vec::with_capacity(p.len() + 1);
        rewrite(p.steps(), &mut out);
        MotzkinPath::from_steps_unchecked(out)
    }

    fn explicit(&self, p: &MotzkinPath) -> MotzkinPath {
        tree_to_path(&lift_tree(path_to_tree(p)))
    }

    fn invert(&self, q: &MotzkinPath) -> MotzkinPath {
        tree_to_path(&unlift_tree(path_to_tree(q)))
    }
}
