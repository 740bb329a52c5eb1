use std::collections::BTreeMap;

use super::{MotzkinTree, TreeError, Turn, VertexRef};
use crate::paths::TableStatistics;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Root,
    Left,
    Right,
}

/// Root, node (non-root interior vertex) or leaf (non-root childless vertex).
/// The root of the trivial tree is `Root`, so the trivial tree has no leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Root,
    Node,
    Leaf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexClass {
    pub side: Side,
    pub kind: VertexKind,
    pub label: usize,
}

impl VertexClass {
    pub fn is(&self, side: Side, kind: VertexKind, label: usize) -> bool {
        self.side == side && self.kind == kind && self.label == label
    }
}

pub fn classify(t: &MotzkinTree) -> Vec<(VertexRef, VertexClass)> {
    t.preorder()
        .into_iter()
        .map(|v| {
            let vertex = t.get(&v).expect("preorder address");
            let (side, kind) = match v.last_turn() {
                None => (Side::Root, VertexKind::Root),
                Some(turn) => (
                    if turn == Turn::Left { Side::Left } else { Side::Right },
                    if vertex.is_leaf() { VertexKind::Leaf } else { VertexKind::Node },
                ),
            };
            let class = VertexClass { side, kind, label: vertex.label };
            (v, class)
        })
        .collect()
}

/// A bijection between the leaves on one side and the nodes on the other side
/// plus the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafCorrespondence {
    leaf_to_target: BTreeMap<VertexRef, VertexRef>,
    target_to_leaf: BTreeMap<VertexRef, VertexRef>,
}

impl LeafCorrespondence {
    fn from_targets(
        t: &MotzkinTree,
        targets: Vec<VertexRef>,
        descend: fn(&MotzkinTree, &VertexRef) -> VertexRef,
    ) -> Self {
        let mut leaf_to_target = BTreeMap::new();
        let mut target_to_leaf = BTreeMap::new();
        for target in targets {
            let leaf = descend(t, &target);
            leaf_to_target.insert(leaf.clone(), target.clone());
            target_to_leaf.insert(target, leaf);
        }
        Self { leaf_to_target, target_to_leaf }
    }

    pub fn target_of(&self, leaf: &VertexRef) -> Option<&VertexRef> {
        self.leaf_to_target.get(leaf)
    }

    pub fn leaf_of(&self, target: &VertexRef) -> Option<&VertexRef> {
        self.target_to_leaf.get(target)
    }

    /// `(leaf, target)` pairs ordered by leaf address.
    pub fn pairs(&self) -> impl Iterator<Item = (&VertexRef, &VertexRef)> {
        self.leaf_to_target.iter()
    }

    pub fn len(&self) -> usize {
        self.leaf_to_target.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaf_to_target.is_empty()
    }
}

/// `{left leaves} → {right nodes} ∪ {root}`: a non-first left leaf goes to
/// the nearest ancestor that is a right child, the first leaf to the root.
/// Built from the inverse direction: the leftmost leaf below each right node
/// and below the root.
pub fn left_leaf_correspondence(t: &MotzkinTree) -> Result<LeafCorrespondence, TreeError> {
    if t.is_leaf() {
        return Err(TreeError::TrivialTree);
    }
    let mut targets = vec![VertexRef::root()];
    targets.extend(t.nodes_on(Turn::Right));
    Ok(LeafCorrespondence::from_targets(t, targets, MotzkinTree::leftmost_leaf))
}

/// `{right leaves} → {left nodes} ∪ {root}`, the mirror image of
/// [`left_leaf_correspondence`]; the last leaf goes to the root.
pub fn right_leaf_correspondence(t: &MotzkinTree) -> Result<LeafCorrespondence, TreeError> {
    if t.is_leaf() {
        return Err(TreeError::TrivialTree);
    }
    let mut targets = vec![VertexRef::root()];
    targets.extend(t.nodes_on(Turn::Left));
    Ok(LeafCorrespondence::from_targets(t, targets, MotzkinTree::rightmost_leaf))
}

/// Path statistics read off the tree alone.
pub fn tree_stats(t: &MotzkinTree) -> TableStatistics {
    if t.is_leaf() {
        return TableStatistics {
            initial_flats: t.label,
            first_peak_plateau_height: Some(0),
            plateau_lengths: vec![t.label],
            ..Default::default()
        };
    }
    let classes = classify(t);
    let count = |side, kind| classes.iter().filter(|(_, c)| c.is(side, kind, 0)).count();
    let last_leaf = t.rightmost_leaf(&VertexRef::root());
    let last_is_zero = t.label_at(&last_leaf) == 0;
    TableStatistics {
        initial_flats: t.label,
        doublerises: count(Side::Left, VertexKind::Node),
        peaks: count(Side::Left, VertexKind::Leaf),
        valleys: count(Side::Right, VertexKind::Node),
        doublefalls: count(Side::Right, VertexKind::Leaf) - usize::from(last_is_zero),
        first_peak_plateau_height: Some(t.leftmost_leaf(&VertexRef::root()).level()),
        ground_returns: last_leaf.level(),
        plateau_lengths: classes
            .iter()
            .filter(|(_, c)| c.side == Side::Left && c.kind == VertexKind::Leaf && c.label > 0)
            .map(|(_, c)| c.label)
            .collect(),
    }
}
