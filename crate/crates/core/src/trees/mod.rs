//! Motzkin trees: full binary trees with a nonnegative label on every vertex.
//!
//! Under the preorder correspondence a tree `(a L R)` is the path
//! `F^a · U · path(L) · D · path(R)`, and a leaf `a` is `F^a`. Left edges are
//! upsteps, right edges are downsteps, and labels count the flatsteps sitting
//! at each path vertex.

mod classify;
mod sexpr;

use std::fmt;

use thiserror::Error;

use crate::paths::{first_return_split, Factorization, MotzkinPath, Step};

pub use classify::{
    classify, left_leaf_correspondence, right_leaf_correspondence, tree_stats, LeafCorrespondence, Side, VertexClass,
    VertexKind,
};
pub use sexpr::{format_tree, parse_tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("syntax error at position {position}: {message}")]
    SyntaxError { position: usize, message: String },
    #[error("negative label at position {position}")]
    NegativeLabel { position: usize },
    #[error("operation needs a tree with at least one edge")]
    TrivialTree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotzkinTree {
    pub label: usize,
    children: Option<Box<(MotzkinTree, MotzkinTree)>>,
}

/// One step from a vertex to a child.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Turn {
    Left,
    Right,
}

/// Address of a vertex: the turns taken from the root.
///
/// Ordering on addresses is lexicographic with `Left < Right` and a prefix
/// before its extensions, which is preorder.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexRef(pub Vec<Turn>);

impl VertexRef {
    pub fn root() -> Self {
        Self(Vec::new())
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, turn: Turn) -> Self {
        let mut turns = self.0.clone();
        turns.push(turn);
        Self(turns)
    }

    pub fn parent(&self) -> Option<Self> {
        let (_, init) = self.0.split_last()?;
        Some(Self(init.to_vec()))
    }

    /// Which child of its parent this vertex is; `None` for the root.
    pub fn last_turn(&self) -> Option<Turn> {
        self.0.last().copied()
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn starts_with(&self, prefix: &VertexRef) -> bool {
        self.0.starts_with(&prefix.0)
    }

    /// Replaces the leading `from` by `to`, if `from` is a prefix.
    pub fn rebase(&self, from: &VertexRef, to: &VertexRef) -> Option<Self> {
        let rest = self.0.strip_prefix(from.0.as_slice())?;
        let mut turns = to.0.clone();
        turns.extend_from_slice(rest);
        Some(Self(turns))
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("/")?;
        for t in &self.0 {
            f.write_str(match t {
                Turn::Left => "L",
                Turn::Right => "R",
            })?;
        }
        Ok(())
    }
}

impl MotzkinTree {
    pub fn leaf(label: usize) -> Self {
        Self { label, children: None }
    }

    pub fn node(label: usize, left: MotzkinTree, right: MotzkinTree) -> Self {
        Self { label, children: Some(Box::new((left, right))) }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }

    pub fn children(&self) -> Option<(&MotzkinTree, &MotzkinTree)> {
        self.children.as_deref().map(|(l, r)| (l, r))
    }

    pub fn children_mut(&mut self) -> Option<(&mut MotzkinTree, &mut MotzkinTree)> {
        self.children.as_deref_mut().map(|(l, r)| (l, r))
    }

    pub fn child(&self, turn: Turn) -> Option<&MotzkinTree> {
        let (l, r) = self.children()?;
        Some(match turn {
            Turn::Left => l,
            Turn::Right => r,
        })
    }

    fn child_mut(&mut self, turn: Turn) -> Option<&mut MotzkinTree> {
        let (l, r) = self.children_mut()?;
        Some(match turn {
            Turn::Left => l,
            Turn::Right => r,
        })
    }

    pub fn get(&self, at: &VertexRef) -> Option<&MotzkinTree> {
        at.0.iter().try_fold(self, |t, &turn| t.child(turn))
    }

    pub fn get_mut(&mut self, at: &VertexRef) -> Option<&mut MotzkinTree> {
        at.0.iter().try_fold(self, |t, &turn| t.child_mut(turn))
    }

    /// Label of the vertex at `at`. Panics if the address does not resolve.
    pub fn label_at(&self, at: &VertexRef) -> usize {
        self.get(at).unwrap_or_else(|| panic!("no vertex at {at}")).label
    }

    pub fn label_at_mut(&mut self, at: &VertexRef) -> &mut usize {
        &mut self.get_mut(at).unwrap_or_else(|| panic!("no vertex at {at}")).label
    }

    pub fn edge_count(&self) -> usize {
        self.children().map_or(0, |(l, r)| 2 + l.edge_count() + r.edge_count())
    }

    pub fn label_sum(&self) -> usize {
        self.label + self.children().map_or(0, |(l, r)| l.label_sum() + r.label_sum())
    }

    /// `#edges + Σ labels`, equal to the length of the corresponding path.
    pub fn weight(&self) -> usize {
        self.edge_count() + self.label_sum()
    }

    /// All vertex addresses in preorder.
    pub fn preorder(&self) -> Vec<VertexRef> {
        fn walk(t: &MotzkinTree, at: &mut Vec<Turn>, out: &mut Vec<VertexRef>) {
            out.push(VertexRef(at.clone()));
            if let Some((l, r)) = t.children() {
                at.push(Turn::Left);
                walk(l, at, out);
                at.pop();
                at.push(Turn::Right);
                walk(r, at, out);
                at.pop();
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Follows `turn` from `from` until reaching a leaf.
    fn extreme_leaf(&self, from: &VertexRef, turn: Turn) -> VertexRef {
        let mut at = from.clone();
        let mut t = self.get(from).unwrap_or_else(|| panic!("no vertex at {from}"));
        while let Some(next) = t.child(turn) {
            at.0.push(turn);
            t = next;
        }
        at
    }

    pub fn leftmost_leaf(&self, from: &VertexRef) -> VertexRef {
        self.extreme_leaf(from, Turn::Left)
    }

    pub fn rightmost_leaf(&self, from: &VertexRef) -> VertexRef {
        self.extreme_leaf(from, Turn::Right)
    }

    /// Interior non-root vertices that are `side` children, in preorder.
    pub fn nodes_on(&self, side: Turn) -> Vec<VertexRef> {
        self.preorder()
            .into_iter()
            .filter(|v| v.last_turn() == Some(side) && !self.get(v).expect("preorder address").is_leaf())
            .collect()
    }

    /// Childless non-root vertices that are `side` children, in preorder.
    pub fn leaves_on(&self, side: Turn) -> Vec<VertexRef> {
        self.preorder()
            .into_iter()
            .filter(|v| v.last_turn() == Some(side) && self.get(v).expect("preorder address").is_leaf())
            .collect()
    }

    /// Exchanges the two subtrees below the interior vertex at `at`.
    pub fn swap_children(&mut self, at: &VertexRef) {
        let t = self.get_mut(at).unwrap_or_else(|| panic!("no vertex at {at}"));
        let (l, r) = t.children_mut().unwrap_or_else(|| panic!("vertex at {at} is a leaf"));
        std::mem::swap(l, r);
    }

    /// Mirror image: left and right children exchanged at every vertex.
    pub fn flip(&self) -> MotzkinTree {
        match self.children() {
            None => MotzkinTree::leaf(self.label),
            Some((l, r)) => MotzkinTree::node(self.label, r.flip(), l.flip()),
        }
    }

    pub fn from_path(p: &MotzkinPath) -> Self {
        path_to_tree(p)
    }

    pub fn to_path(&self) -> MotzkinPath {
        tree_to_path(self)
    }
}

pub fn flip(t: &MotzkinTree) -> MotzkinTree {
    t.flip()
}

pub fn path_to_tree(p: &MotzkinPath) -> MotzkinTree {
    fn build(steps: &[Step]) -> MotzkinTree {
        let label = steps.iter().take_while(|&&s| s == Step::F).count();
        match first_return_split(&steps[label..]) {
            Factorization::Empty => MotzkinTree::leaf(label),
            Factorization::Arch { inside, rest } => MotzkinTree::node(label, build(inside), build(rest)),
            Factorization::Flat { .. } => unreachable!("leading flats already consumed"),
        }
    }
    build(p.steps())
}

pub fn tree_to_path(t: &MotzkinTree) -> MotzkinPath {
    fn emit(t: &MotzkinTree, out: &mut Vec<Step>) {
        out.extend(std::iter::repeat_n(Step::F, t.label));
        if let Some((l, r)) = t.children() {
            out.push(Step::U);
            emit(l, out);
            out.push(Step::D);
            emit(r, out);
        }
    }
    let mut out = Vec::with_capacity(t.weight());
    emit(t, &mut out);
    MotzkinPath::from_steps_unchecked(out)
}

impl fmt::Display for MotzkinTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.children() {
            None => write!(f, "{}", self.label),
            Some((l, r)) => write!(f, "({} {} {})", self.label, l, r),
        }
    }
}

impl std::str::FromStr for MotzkinTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tree(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE_PATH: &str = "FFFUFUDUUFFDDFUDD";
    const SAMPLE_TREE: &str = "(3 (1 0 (0 (0 2 0) (1 0 0))) 0)";

    fn path(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    fn tree(s: &str) -> MotzkinTree {
        s.parse().unwrap()
    }

    #[test]
    fn sample_correspondence() {
        assert_eq!(path_to_tree(&path(SAMPLE_PATH)).to_string(), SAMPLE_TREE);
        assert_eq!(tree_to_path(&tree(SAMPLE_TREE)).to_string(), SAMPLE_PATH);
        assert_eq!(tree(SAMPLE_TREE).weight(), 17);
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(path_to_tree(&path("")), MotzkinTree::leaf(0));
        assert_eq!(path_to_tree(&path("FF")), MotzkinTree::leaf(2));
        assert_eq!(tree_to_path(&tree("0")).to_string(), "");
        assert_eq!(tree_to_path(&tree("(0 0 0)")).to_string(), "UD");
    }

    #[test]
    fn flip_examples() {
        assert_eq!(tree("0").flip(), tree("0"));
        assert_eq!(tree("(0 1 2)").flip(), tree("(0 2 1)"));
        let flipped = path_to_tree(&path("UFDUFFUDD")).flip();
        assert_eq!(tree_to_path(&flipped).to_string(), "UUDFFUDDF");
    }

    #[test]
    fn addressing() {
        let t = tree(SAMPLE_TREE);
        let lr = VertexRef(vec![Turn::Left, Turn::Right]);
        assert_eq!(t.label_at(&lr), 0);
        assert_eq!(t.leftmost_leaf(&lr), VertexRef(vec![Turn::Left, Turn::Right, Turn::Left, Turn::Left]));
        assert_eq!(t.label_at(&t.leftmost_leaf(&lr)), 2);
        assert_eq!(t.rightmost_leaf(&VertexRef::root()), VertexRef(vec![Turn::Right]));
        assert_eq!(t.preorder().len(), 11);
        assert!(t.get(&VertexRef(vec![Turn::Right, Turn::Left])).is_none());
        assert_eq!(lr.to_string(), "/LR");
        assert_eq!(
            VertexRef(vec![Turn::Right, Turn::Left])
                .rebase(&VertexRef(vec![Turn::Right]), &VertexRef(vec![Turn::Left])),
            Some(VertexRef(vec![Turn::Left, Turn::Left]))
        );
    }

    #[test]
    fn preorder_is_address_order() {
        let t = tree(SAMPLE_TREE);
        let order = t.preorder();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
    }
}
