//! `M_n(UU) → M_{n+1}(UD)`: flip the tree, then slide tokens southwest.
//!
//! Recursive form: `ε ↦ F`, `F·R ↦ F·φ(R)`, `U·D·R ↦ U·φ(R)·D`,
//! `U·F·R·D·S ↦ U·φ(S)·D·φ(R)`.
//!
//! After the flip the root and every right node are positive; one new token
//! goes on the root and then one token from the root and from each right node
//! moves to the leftmost leaf below it. A left node labelled 1 (a `UFU`)
//! ends up as a right 0-node (a `DU`).

use super::tokens::{slide_southwest, unslide_southwest};
use super::{Bijection, BijectionId};
use crate::paths::{first_return_split, Factorization, MotzkinPath, Pattern, Step};
use crate::trees::{path_to_tree, tree_to_path, MotzkinTree};

#[derive(Clone, Copy, Debug, Default)]
pub struct FlipSlide;

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
            Factorization::Arch { inside: [], rest } => {
                out.push(Step::U);
                rewrite(rest, out);
                out.push(Step::D);
                return;
            }
            Factorization::Arch { inside, rest } => {
                assert_eq!(inside[0], Step::F, "UU-free arch interior must start with a flatstep");
                out.push(Step::U);
                rewrite(rest, out);
                out.push(Step::D);
                w = &inside[1..];
            }
        }
    }
}

/// Root token plus southwest slide, without the flip. This is also the
/// explicit form of [`super::PlateauLift`].
pub fn lift_tree(mut t: MotzkinTree) -> MotzkinTree {
    t.label += 1;
    slide_southwest(&mut t);
    t
}

pub fn unlift_tree(mut t: MotzkinTree) -> MotzkinTree {
    unslide_southwest(&mut t);
    t.label = t.label.checked_sub(1).expect("image root keeps the added token");
    t
}

impl Bijection for FlipSlide {
    fn id(&self) -> BijectionId {
        BijectionId::B4
    }

    fn summary(&self) -> &'static str {
        "M_n(UU) -> M_{n+1}(UD): flip, add a root token, slide tokens southwest"
    }

    fn domain(&self) -> &'static [Pattern] {
        &[Pattern::UU]
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
        tree_to_path(&lift_tree(path_to_tree(p).flip()))
    }

    fn invert(&self, q: &MotzkinPath) -> MotzkinPath {
        tree_to_path(&unlift_tree(path_to_tree(q)).flip())
    }
}
