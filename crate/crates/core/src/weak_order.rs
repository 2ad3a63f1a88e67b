//! The s-weak order: comparison, join and meet, tree-ascents, rotations,
//! cover relations and Hasse diagrams.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::composition::WeakComposition;
use crate::error::Error;
use crate::inversions::TreeInversionSet;
use crate::tree::{construct_tree, enumerate_trees, Node, SDecreasingTree};

/// A pair `(a, c)` with `a < c` marking a legal rightward rotation of node
/// `a` along its ancestor `c`. For a fixed `a` at most one `c` qualifies,
/// so the smaller label identifies the ascent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeAscent {
    pub a: usize,
    pub c: usize,
}

/// Elements in canonical order plus the labeled cover edges between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    pub elements: Vec<SDecreasingTree>,
    /// `(from, to, label)` with `elements[to]` covering `elements[from]` by
    /// rotating `label`; sorted by `(from, label)`.
    pub edges: Vec<(usize, usize, TreeAscent)>,
}

fn same_signature(t: &SDecreasingTree, r: &SDecreasingTree) -> Result<(), Error> {
    if t.signature() == r.signature() {
        Ok(())
    } else {
        Err(Error::SignatureMismatch)
    }
}

/// `T \preceq R` in the s-weak order: multiset inclusion `inv(T) <= inv(R)`.
pub fn leq(t: &SDecreasingTree, r: &SDecreasingTree) -> Result<bool, Error> {
    same_signature(t, r)?;
    t.inversions().included_in(r.inversions())
}

/// Least upper bound: the tree of `tc(inv(T) ∪ inv(R))`. The closure of a
/// union of tree-inversion sets is again a tree-inversion set, so this
/// never fails beyond a signature mismatch.
pub fn join(t: &SDecreasingTree, r: &SDecreasingTree) -> Result<SDecreasingTree, Error> {
    same_signature(t, r)?;
    let union = t.inversions().union(r.inversions())?;
    let closed = union.transitive_closure();
    let tis = TreeInversionSet::new_unchecked(closed, t.signature().clone());
    Ok(construct_tree(&tis))
}

/// Greatest lower bound, computed on the mirror images:
/// `meet(T, R) = mirror(join(mirror(T), mirror(R)))`.
pub fn meet(t: &SDecreasingTree, r: &SDecreasingTree) -> Result<SDecreasingTree, Error> {
    Ok(join(&t.mirror(), &r.mirror())?.mirror())
}

/// All tree-ascents of `T`, sorted by `(a, c)`.
///
/// The pair `(a, c)` is a tree-ascent exactly when, in terms of inversions:
/// every `d > c` sees `a` and `c` in the same child interval; `card(c, a)`
/// is below `s(c)`; any `b` strictly between with `card(c, b) = card(c, a)`
/// has `card(b, a) = s(b)`; and when `s(a) > 0`, any `a' < a` with
/// `card(a, a') = s(a)` satisfies `card(c, a') > card(c, a)`.
pub fn tree_ascents(t: &SDecreasingTree) -> Vec<TreeAscent> {
    let n = t.n();
    let sig = t.signature();
    let inv = t.inversions();
    let mut out = Vec::new();
    for a in 1..n {
        'cand: for c in a + 1..=n {
            if inv.get(c, a) >= sig.get(c) {
                continue;
            }
            for d in c + 1..=n {
                if inv.get(d, c) != inv.get(d, a) {
                    continue 'cand;
                }
            }
            for b in a + 1..c {
                if inv.get(c, b) == inv.get(c, a) && inv.get(b, a) != sig.get(b) {
                    continue 'cand;
                }
            }
            if sig.get(a) > 0 {
                for x in 1..a {
                    if inv.get(a, x) == sig.get(a) && inv.get(c, x) <= inv.get(c, a) {
                        continue 'cand;
                    }
                }
            }
            out.push(TreeAscent { a, c });
            break; // at most one ascent per smaller label
        }
    }
    out
}

/// Labels that move along with `a` in a rotation: `a` itself plus every
/// descendant in a non-left child subtree, i.e. with `card(a, x) > 0`.
fn moved_labels(t: &SDecreasingTree, a: usize) -> Vec<usize> {
    let mut moved = Vec::new();
    for x in 1..a {
        if t.inversions().get(a, x) > 0 && is_descendant(t.root(), a, x) {
            moved.push(x);
        }
    }
    moved.push(a);
    moved
}

fn find_node(node: &Node, label: usize) -> Option<&Node> {
    if node.label == label {
        return Some(node);
    }
    if node.label < label {
        return None;
    }
    node.children
        .iter()
        .flatten()
        .find_map(|c| find_node(c, label))
}

fn is_descendant(root: &Node, ancestor: usize, label: usize) -> bool {
    let anc = find_node(root, ancestor).expect("label present");
    anc.children
        .iter()
        .flatten()
        .any(|c| find_node(c, label).is_some())
}

/// Rotates `T` at a tree-ascent: the cardinality of `(c, a')` grows by one
/// for `a' = a` and every non-left descendant of `a`, everything else is
/// unchanged. Equals the tree of `tc(inv(T) + (c, a))`.
pub fn rotate(t: &SDecreasingTree, asc: TreeAscent) -> Result<SDecreasingTree, Error> {
    if !tree_ascents(t).contains(&asc) {
        return Err(Error::NotAnAscent { a: asc.a, c: asc.c });
    }
    let mut inv = t.inversions().clone();
    for x in moved_labels(t, asc.a) {
        inv.add(asc.c, x);
    }
    let tis = TreeInversionSet::new_unchecked(inv, t.signature().clone());
    Ok(construct_tree(&tis))
}

/// Every cover of `T` in the s-weak order, as `(rotated tree, ascent)`
/// pairs sorted by ascent.
pub fn covers(t: &SDecreasingTree) -> Vec<(SDecreasingTree, TreeAscent)> {
    tree_ascents(t)
        .into_iter()
        .map(|asc| (rotate(t, asc).expect("ascent of t"), asc))
        .collect()
}

/// Assembles the full Hasse diagram of the s-weak order.
pub fn hasse(sig: &WeakComposition) -> HasseDiagram {
    let elements = enumerate_trees(sig);
    diagram_of(elements, covers)
}

pub(crate) fn diagram_of(
    elements: Vec<SDecreasingTree>,
    covers_fn: impl Fn(&SDecreasingTree) -> Vec<(SDecreasingTree, TreeAscent)>,
) -> HasseDiagram {
    let index: BTreeMap<Vec<u32>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, t)| (t.inversions().vector().to_vec(), i))
        .collect();
    let mut edges = Vec::new();
    for (from, t) in elements.iter().enumerate() {
        for (r, asc) in covers_fn(t) {
            let to = index[r.inversions().vector()];
            edges.push((from, to, asc));
        }
    }
    edges.sort();
    HasseDiagram { elements, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inversions::MultiInversionSet;
    use crate::testutil::{example_tree, closure_join_pair, six_ascent_tree, sig};
    use alloc::vec;

    #[test]
    fn leq_extremes() {
        let s = sig(&[0, 2, 2]);
        let min = SDecreasingTree::minimum(&s);
        let max = SDecreasingTree::maximum(&s);
        for t in enumerate_trees(&s) {
            assert!(leq(&min, &t).unwrap());
            assert!(leq(&t, &max).unwrap());
        }
    }

    #[test]
    fn leq_signature_mismatch() {
        let a = SDecreasingTree::minimum(&sig(&[0, 2, 2]));
        let b = SDecreasingTree::minimum(&sig(&[1, 1, 1]));
        assert_eq!(leq(&a, &b), Err(Error::SignatureMismatch));
    }

    #[test]
    fn join_worked_example() {
        let (t, r) = closure_join_pair();
        let union = t.inversions().union(r.inversions()).unwrap();
        let mut expected_union = MultiInversionSet::empty(3);
        expected_union.set(3, 2, 2);
        expected_union.set(2, 1, 1);
        assert_eq!(union, expected_union);

        let j = join(&t, &r).unwrap();
        let mut expected = MultiInversionSet::empty(3);
        expected.set(3, 2, 2);
        expected.set(3, 1, 2);
        expected.set(2, 1, 1);
        assert_eq!(j.inversions(), &expected);
        assert!(leq(&t, &j).unwrap());
        assert!(leq(&r, &j).unwrap());
    }

    #[test]
    fn join_unit_laws() {
        let s = sig(&[0, 2, 2]);
        let min = SDecreasingTree::minimum(&s);
        for t in enumerate_trees(&s) {
            assert_eq!(join(&t, &t).unwrap(), t);
            assert_eq!(join(&t, &min).unwrap(), t);
            assert_eq!(meet(&t, &t).unwrap(), t);
            assert_eq!(meet(&t, &SDecreasingTree::maximum(&s)).unwrap(), t);
        }
    }

    #[test]
    fn ascents_of_example_tree() {
        let t = example_tree();
        let ascents = tree_ascents(&t);
        assert_eq!(
            ascents,
            vec![
                TreeAscent { a: 1, c: 5 },
                TreeAscent { a: 2, c: 5 },
                TreeAscent { a: 4, c: 5 }
            ]
        );
        assert!(!ascents.iter().any(|asc| asc.a == 3));
    }

    #[test]
    fn max_tree_has_no_ascents() {
        for s in [sig(&[0, 2, 2]), sig(&[1, 1, 1]), sig(&[0, 0, 2, 1, 3])] {
            assert!(tree_ascents(&SDecreasingTree::maximum(&s)).is_empty());
        }
    }

    #[test]
    fn eight_node_example_has_six_ascents() {
        let t = six_ascent_tree();
        let ascents = tree_ascents(&t);
        assert_eq!(ascents.len(), 6);
        // rotating (7,8) drags the middle descendants 4, 2, 1 of 7 along
        let rotated = rotate(&t, TreeAscent { a: 7, c: 8 }).unwrap();
        assert_eq!(rotated.cardinality(8, 7).unwrap(), 2);
        for x in [4, 2, 1] {
            assert_eq!(t.cardinality(8, x).unwrap(), 1);
            assert_eq!(rotated.cardinality(8, x).unwrap(), 2, "card(8,{x})");
        }
        // nodes left behind keep their cardinality
        assert_eq!(rotated.cardinality(8, 6).unwrap(), 1);
        assert_eq!(rotated.cardinality(8, 3).unwrap(), 1);
        assert_eq!(rotated.cardinality(8, 5).unwrap(), 0);
    }

    #[test]
    fn rotation_without_middle_children_changes_one_entry() {
        // ascent (4,5) of the example tree: node 4 has only leaf children
        let t = example_tree();
        let rotated = rotate(&t, TreeAscent { a: 4, c: 5 }).unwrap();
        let mut expected = t.inversions().clone();
        expected.add(5, 4);
        assert_eq!(rotated.inversions(), &expected);
    }

    #[test]
    fn rotate_rejects_non_ascent() {
        let t = example_tree();
        assert_eq!(
            rotate(&t, TreeAscent { a: 3, c: 5 }),
            Err(Error::NotAnAscent { a: 3, c: 5 })
        );
    }

    #[test]
    fn rotation_agrees_with_closure_route() {
        for s in [sig(&[0, 2, 2, 1]), sig(&[0, 0, 2, 1, 3]), sig(&[1, 1, 1, 1])] {
            for t in enumerate_trees(&s) {
                for asc in tree_ascents(&t) {
                    let by_formula = rotate(&t, asc).unwrap();
                    let mut added = t.inversions().clone();
                    added.add(asc.c, asc.a);
                    let by_closure = construct_tree(&TreeInversionSet::new_unchecked(
                        added.transitive_closure(),
                        s.clone(),
                    ));
                    assert_eq!(by_formula, by_closure);
                    assert!(by_formula.inversions().weight() > t.inversions().weight());
                }
            }
        }
    }

    #[test]
    fn hasse_shapes() {
        let square = hasse(&sig(&[0, 0, 1]));
        assert_eq!(square.elements.len(), 4);
        assert_eq!(square.edges.len(), 4);

        let point = hasse(&sig(&[1]));
        assert_eq!(point.elements.len(), 1);
        assert!(point.edges.is_empty());

        let h = hasse(&sig(&[0, 2, 2]));
        assert_eq!(h.elements.len(), 15);
        let total_ascents: usize = h.elements.iter().map(|t| tree_ascents(t).len()).sum();
        assert_eq!(h.edges.len(), total_ascents);
    }

    #[test]
    fn each_label_rotates_at_most_once_per_element() {
        for t in enumerate_trees(&sig(&[0, 3, 2])) {
            let ascents = tree_ascents(&t);
            let mut firsts: Vec<usize> = ascents.iter().map(|a| a.a).collect();
            firsts.dedup();
            assert_eq!(firsts.len(), ascents.len());
        }
    }
}
