//! Fixture trees shared across unit tests.

use alloc::vec;
use alloc::vec::Vec;

use crate::composition::WeakComposition;
use crate::tree::{Node, SDecreasingTree};

pub(crate) fn sig(v: &[u32]) -> WeakComposition {
    WeakComposition::new(v.to_vec()).unwrap()
}

fn node(label: usize, children: Vec<Option<Node>>) -> Option<Node> {
    Some(Node { label, children })
}

/// s = (0,0,2,1,3):
/// 5 -> [4 -> [leaf, leaf], leaf, 3 -> [leaf, leaf, 2 -> [1 -> [leaf]]], leaf]
pub(crate) fn example_tree() -> SDecreasingTree {
    let root = Node {
        label: 5,
        children: vec![
            node(4, vec![None, None]),
            None,
            node(3, vec![None, None, node(2, vec![node(1, vec![None])])]),
            None,
        ],
    };
    SDecreasingTree::new(sig(&[0, 0, 2, 1, 3]), root).unwrap()
}

/// A pair of s = (0,2,2) trees whose join needs the transitive closure:
/// T = 3 -> [1 -> [leaf], leaf, 2 -> [leaf, leaf, leaf]] with card(3,2) = 2,
/// R = 3 -> [2 -> [leaf, 1 -> [leaf], leaf], leaf, leaf] with card(2,1) = 1.
pub(crate) fn closure_join_pair() -> (SDecreasingTree, SDecreasingTree) {
    let s = sig(&[0, 2, 2]);
    let t = Node {
        label: 3,
        children: vec![
            node(1, vec![None]),
            None,
            node(2, vec![None, None, None]),
        ],
    };
    let r = Node {
        label: 3,
        children: vec![
            node(2, vec![None, node(1, vec![None]), None]),
            None,
            None,
        ],
    };
    (
        SDecreasingTree::new(s.clone(), t).unwrap(),
        SDecreasingTree::new(s, r).unwrap(),
    )
}

/// s = (0,0,1,1,1,0,2,2), the eight-node tree with six tree-ascents:
/// 8 -> [5 -> [leaf, leaf],
///       7 -> [6 -> [3 -> [leaf, leaf]],
///             4 -> [2 -> [leaf], 1 -> [leaf]],
///             leaf],
///       leaf]
pub(crate) fn six_ascent_tree() -> SDecreasingTree {
    let root = Node {
        label: 8,
        children: vec![
            node(5, vec![None, None]),
            node(
                7,
                vec![
                    node(6, vec![node(3, vec![None, None])]),
                    node(4, vec![node(2, vec![None]), node(1, vec![None])]),
                    None,
                ],
            ),
            None,
        ],
    };
    SDecreasingTree::new(sig(&[0, 0, 1, 1, 1, 0, 2, 2]), root).unwrap()
}

/// s = (0,0,1,1,2,1,2), the s-Tamari tree with four Tamari-ascents:
/// 7 -> [5 -> [2 -> [1 -> [leaf]], 3 -> [leaf, leaf], 4 -> [leaf, leaf]],
///       6 -> [leaf, leaf],
///       leaf]
pub(crate) fn four_ascent_tamari_tree() -> SDecreasingTree {
    let root = Node {
        label: 7,
        children: vec![
            node(
                5,
                vec![
                    node(2, vec![node(1, vec![None])]),
                    node(3, vec![None, None]),
                    node(4, vec![None, None]),
                ],
            ),
            node(6, vec![None, None]),
            None,
        ],
    };
    SDecreasingTree::new(sig(&[0, 0, 1, 1, 2, 1, 2]), root).unwrap()
}

/// s = (0,1,1,1,2):
/// 5 -> [3 -> [leaf, leaf], 4 -> [2 -> [leaf, leaf], 1 -> [leaf]], leaf]
pub(crate) fn projection_example_tree() -> SDecreasingTree {
    let root = Node {
        label: 5,
        children: vec![
            node(3, vec![None, None]),
            node(4, vec![node(2, vec![None, None]), node(1, vec![None])]),
            None,
        ],
    };
    SDecreasingTree::new(sig(&[0, 1, 1, 1, 2]), root).unwrap()
}
