//! Label ("token") and subtree moves shared by the explicit descriptions.

use crate::trees::{MotzkinTree, Turn, VertexRef};

fn take_token(t: &mut MotzkinTree, from: &VertexRef) {
    let label = t.label_at_mut(from);
    *label = label.checked_sub(1).unwrap_or_else(|| panic!("no token to move from {from}"));
}

fn give_token(t: &mut MotzkinTree, to: &VertexRef) {
    *t.label_at_mut(to) += 1;
}

/// The root followed by the non-root interior vertices on `side`.
fn root_and_nodes(t: &MotzkinTree, side: Turn) -> Vec<VertexRef> {
    let mut sources = vec![VertexRef::root()];
    sources.extend(t.nodes_on(side));
    sources
}

/// Moves one token from the root and from every right node to the leftmost
/// leaf below it. No-op on the trivial tree.
pub(crate) fn slide_southwest(t: &mut MotzkinTree) {
    if t.is_leaf() {
        return;
    }
    for v in root_and_nodes(t, Turn::Right) {
        let leaf = t.leftmost_leaf(&v);
        take_token(t, &v);
        give_token(t, &leaf);
    }
}

pub(crate) fn unslide_southwest(t: &mut MotzkinTree) {
    if t.is_leaf() {
        return;
    }
    for v in root_and_nodes(t, Turn::Right) {
        let leaf = t.leftmost_leaf(&v);
        take_token(t, &leaf);
        give_token(t, &v);
    }
}

/// Moves one token from the root and from every left node to the rightmost
/// leaf below it. No-op on the trivial tree.
pub(crate) fn slide_southeast(t: &mut MotzkinTree) {
    if t.is_leaf() {
        return;
    }
    for v in root_and_nodes(t, Turn::Left) {
        let leaf = t.rightmost_leaf(&v);
        take_token(t, &v);
        give_token(t, &leaf);
    }
}

pub(crate) fn unslide_southeast(t: &mut MotzkinTree) {
    if t.is_leaf() {
        return;
    }
    for v in root_and_nodes(t, Turn::Left) {
        let leaf = t.rightmost_leaf(&v);
        take_token(t, &leaf);
        give_token(t, &v);
    }
}

/// Swaps the label of every right node with that of the leftmost leaf below
/// it (the non-first left leaf corresponding to it). Self-inverse.
pub(crate) fn exchange_right_nodes_with_left_leaves(t: &mut MotzkinTree) {
    for v in t.nodes_on(Turn::Right) {
        let leaf = t.leftmost_leaf(&v);
        let node_label = t.label_at(&v);
        let leaf_label = std::mem::replace(t.label_at_mut(&leaf), node_label);
        *t.label_at_mut(&v) = leaf_label;
    }
}

pub(crate) fn first_leaf(t: &MotzkinTree) -> VertexRef {
    t.leftmost_leaf(&VertexRef::root())
}

/// Left 0-leaves in preorder.
pub(crate) fn left_zero_leaves(t: &MotzkinTree) -> Vec<VertexRef> {
    t.leaves_on(Turn::Left).into_iter().filter(|v| t.label_at(v) == 0).collect()
}

/// Right 0-leaves in preorder.
pub(crate) fn right_zero_leaves(t: &MotzkinTree) -> Vec<VertexRef> {
    t.leaves_on(Turn::Right).into_iter().filter(|v| t.label_at(v) == 0).collect()
}

/// For each snapshot leaf (taken in `order`), exchanges it with its sibling's
/// whole subtree. `leaves` must all sit on side `from`; after processing a
/// leaf at `parent·from`, pending addresses under `parent·to` are rebased to
/// `parent·from`.
pub(crate) fn swap_with_siblings(t: &mut MotzkinTree, mut leaves: Vec<VertexRef>, order: &[usize], from: Turn) {
    debug_assert_eq!(order.len(), leaves.len());
    let to = match from {
        Turn::Left => Turn::Right,
        Turn::Right => Turn::Left,
    };
    for &i in order {
        let leaf = leaves[i].clone();
        debug_assert_eq!(leaf.last_turn(), Some(from));
        debug_assert!(t.get(&leaf).is_some_and(|v| v.is_leaf() && v.label == 0));
        let parent = leaf.parent().expect("leaf has a parent");
        t.swap_children(&parent);
        let moved_from = parent.child(to);
        let moved_to = parent.child(from);
        for pending in leaves.iter_mut() {
            if let Some(rebased) = pending.rebase(&moved_from, &moved_to) {
                *pending = rebased;
            }
        }
    }
}
