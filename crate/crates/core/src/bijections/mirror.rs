//! `M_n → M_n`: the vertical flip of the path's tree.

use super::{Bijection, BijectionId};
use crate::paths::{first_return_split, Factorization, MotzkinPath, Pattern, Step};
use crate::trees::{path_to_tree, tree_to_path};

#[derive(Clone, Copy, Debug, Default)]
pub struct Mirror;

// ε ↦ ε, F·R ↦ F·φ(R), U·R·D·S ↦ U·φ(S)·D·φ(R)
fn rewrite(mut w: &[Step], out: &mut Vec<Step>) {
    loop {
        match first_return_split(w) {
            Factorization::Empty => return,
            Factorization::Flat { rest } => {
                out.push(Step::F);
                w = rest;
            }
            Factorization::Arch { inside, rest } => {
                out.push(Step::U);
                rewrite(rest, out);
                out.push(Step::D);
                w = inside;
            }
        }
    }
}

impl Bijection for Mirror {
    fn id(&self) -> BijectionId {
        BijectionId::B1
    }

    fn summary(&self) -> &'static str {
        "M_n -> M_n: flip the tree left-to-right (an involution)"
    }

    fn domain(&self) -> &'static [Pattern] {
        &[]
    }

    fn codomain(&self) -> &'static [Pattern] {
        &[]
    }

    fn length_shift(&self) -> usize {
        0
    }

    fn recursive(&self, p: &MotzkinPath) -> MotzkinPath {
        let mut out = Vec::with_capacity(p.len());
        rewrite(p.steps(), &mut out);
        MotzkinPath::from_steps_unchecked(out)
    }

    fn explicit(&self, p: &MotzkinPath) -> MotzkinPath {
        tree_to_path(&path_to_tree(p).flip())
    }

    fn invert(&self, q: &MotzkinPath) -> MotzkinPath {
        self.explicit(q)
    }
}
