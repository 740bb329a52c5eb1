//! `M_n(UU) → M_{n+1}(UD)` by flipping the tree and exchanging labels.
//!
//! Recursive form:
//!
//! ```text
//! ε            ↦ F
//! F·R          ↦ F·φ(R)
//! U·F^a·D·R    ↦ U·φ(R)·D·F^a                 (a ≥ 0)
//! U·F^a·S·F^b·D·R ↦ U·φ(R)·D·φ(F^b·S·F^(a−1))   (a ≥ 1, S strict)
//! ```
//!
//! Explicit form: flip the tree, exchange the label of every right node with
//! the leftmost leaf below it, then put one new token on the first leaf (on
//! the root, for the trivial tree). The root label is carried through
//! unchanged, which matches `φ(F·R) = F·φ(R)`. Swapping the root label with
//! the first leaf instead would disagree with the recursion already on `UDF`.

use super::tokens::{exchange_right_nodes_with_left_leaves, first_leaf};
use super::{Bijection, BijectionId};
use crate::paths::{first_return_split, strict_factor, Factorization, MotzkinPath, Pattern, Step, StrictFactorization};
use crate::trees::{path_to_tree, tree_to_path, MotzkinTree};

#[derive(Clone, Copy, Debug, Default)]
pub struct LabelExchange;

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
            Factorization::Arch { inside, rest } => {
                let framed = strict_factor(inside, false).expect("unrestricted strict factorization");
                out.push(Step::U);
                rewrite(rest, out);
                out.push(Step::D);
                match framed {
                    StrictFactorization::AllFlat(a) => {
                        out.extend(std::iter::repeat_n(Step::F, a));
                        return;
                    }
                    StrictFactorization::Framed { a, s, b } => {
                        assert!(a >= 1, "UU-free arch interior must start with a flatstep");
                        let mut inner = vec![Step::F; b];
                        inner.extend_from_slice(s);
                        inner.extend(std::iter::repeat_n(Step::F, a - 1));
                        rewrite(&inner, out);
                        return;
                    }
                }
            }
        }
    }
}

/// Forward explicit moves on the tree of a UU-free path.
pub fn exchange_tree(mut t: MotzkinTree) -> MotzkinTree {
    t = t.flip();
    if t.is_leaf() {
        t.label += 1;
        return t;
    }
    exchange_right_nodes_with_left_leaves(&mut t);
    let first = first_leaf(&t);
    *t.label_at_mut(&first) += 1;
    t
}

pub fn unexchange_tree(mut t: MotzkinTree) -> MotzkinTree {
    if t.is_leaf() {
        t.label = t.label.checked_sub(1).expect("image of the trivial tree has a positive root");
        return t;
    }
    let first = first_leaf(&t);
    let label = t.label_at_mut(&first);
    *label = label.checked_sub(1).expect("first leaf of a UD-free tree is positive");
    exchange_right_nodes_with_left_leaves(&mut t);
    t.flip()
}

impl Bijection for LabelExchange {
    fn id(&self) -> BijectionId {
        BijectionId::B2
    }

    fn summary(&self) -> &'static str {
        "M_n(UU) -> M_{n+1}(UD): flip, exchange labels of right nodes and their left leaves, new token on the first leaf"
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
        tree_to_path(&exchange_tree(path_to_tree(p)))
    }

    fn invert(&self, q: &MotzkinPath) -> MotzkinPath {
        tree_to_path(&unexchange_tree(path_to_tree(q)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::{b2, b2_inverse, Mode};

    fn p(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(b2(&p("UFDUFFUDD"), Mode::Checked).unwrap().to_string(), "UUFDUFFDDF");
        assert_eq!(b2(&p(""), Mode::Checked).unwrap().to_string(), "F");
        assert_eq!(b2(&p("UFUDD"), Mode::Checked).unwrap().to_string(), "UFDUFD");
        // smallest case where the root label and the first leaf label differ
        assert_eq!(b2(&p("UDF"), Mode::Checked).unwrap().to_string(), "UFFD");
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(b2_inverse(&p("UUFDUFFDDF")).unwrap().to_string(), "UFDUFFUDD");
        assert_eq!(b2_inverse(&p("F")).unwrap().to_string(), "");
        assert_eq!(b2_inverse(&p("UFDUFD")).unwrap().to_string(), "UFUDD");
    }
}
