//! `M_n(UU) → M_{n+1}(UD)` by sliding tokens to right leaves and moving
//! sibling subtrees onto left 0-leaves.
//!
//! Recursive form: `ε ↦ F`, `F·R ↦ F·φ(R)`, `U·D·R ↦ U·φ(R)·D`,
//! `U·F·R·D·S ↦ U·φ(R)·D·φ(S)`.
//!
//! Explicit form, on the tree:
//! 1. one new token on the root;
//! 2. one token from the root and from each left node to the rightmost leaf
//!    below it (skipped for the trivial tree);
//! 3. every left 0-leaf present after step 2 takes over its sibling's subtree,
//!    and the sibling position becomes a 0-leaf.
//!
//! The low peaks of the input become the final descent of the image.

use rand::seq::SliceRandom;
use rand::Rng;

use super::tokens::{left_zero_leaves, right_zero_leaves, slide_southeast, swap_with_siblings, unslide_southeast};
use super::{Bijection, BijectionId};
use crate::paths::{first_return_split, Factorization, MotzkinPath, Pattern, Step};
use crate::trees::{path_to_tree, tree_to_path, MotzkinTree, Turn};

#[derive(Clone, Copy, Debug, Default)]
pub struct SubtreeTransfer;

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
                rewrite(&inside[1..], out);
                out.push(Step::D);
                w = rest;
            }
        }
    }
}

/// Steps 1 and 2; returns the step-3 snapshot of left 0-leaves in preorder.
fn prepare(t: &mut MotzkinTree) -> Vec<crate::trees::VertexRef> {
    t.label += 1;
    slide_southeast(t);
    left_zero_leaves(t)
}

/// The explicit form with step 3 applied in preorder.
pub fn transfer_tree(mut t: MotzkinTree) -> MotzkinTree {
    let leaves = prepare(&mut t);
    let order: Vec<usize> = (0..leaves.len()).collect();
    swap_with_siblings(&mut t, leaves, &order, Turn::Left);
    t
}

/// The explicit form with step 3 processed in a random order.
pub fn explicit_shuffled<R: Rng + ?Sized>(p: &MotzkinPath, rng: &mut R) -> MotzkinPath {
    let mut t = path_to_tree(p);
    let leaves = prepare(&mut t);
    let mut order: Vec<usize> = (0..leaves.len()).collect();
    order.shuffle(rng);
    swap_with_siblings(&mut t, leaves, &order, Turn::Left);
    tree_to_path(&t)
}

pub fn untransfer_tree(mut t: MotzkinTree) -> MotzkinTree {
    let leaves = right_zero_leaves(&t);
    let order: Vec<usize> = (0..leaves.len()).collect();
    swap_with_siblings(&mut t, leaves, &order, Turn::Right);
    unslide_southeast(&mut t);
    t.label = t.label.checked_sub(1).expect("image root keeps the added token");
    t
}

impl Bijection for SubtreeTransfer {
    fn id(&self) -> BijectionId {
        BijectionId::B3
    }

    fn summary(&self) -> &'static str {
        "M_n(UU) -> M_{n+1}(UD): slide tokens to right leaves, move siblings onto left 0-leaves"
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
        tree_to_path(&transfer_tree(path_to_tree(p)))
    }

    fn invert(&self, q: &MotzkinPath) -> MotzkinPath {
        tree_to_path(&untransfer_tree(path_to_tree(q)))
    }
}
