//! s-decreasing trees and their bijection with tree-inversion sets.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use crate::composition::WeakComposition;
use crate::error::Error;
use crate::inversions::{MultiInversionSet, TreeInversionSet};

/// An internal node of an s-decreasing tree. Node `label` carries exactly
/// `s(label) + 1` children, listed left to right; `None` is a leaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Node {
    pub label: usize,
    pub children: Vec<Option<Node>>,
}

impl Node {
    /// A node whose children are all leaves.
    pub fn bare(label: usize, arity: usize) -> Self {
        Node {
            label,
            children: vec![None; arity],
        }
    }
}

/// A planar tree with internal nodes labeled `1..=n`, node `i` having
/// `s(i) + 1` children and all labeled descendants of a node smaller than it.
///
/// The tree caches its inversion multiset; equality, hashing and ordering
/// all compare the cardinality vector in the fixed `(y, x)` pair order,
/// which identifies the tree uniquely.
#[derive(Debug, Clone)]
pub struct SDecreasingTree {
    sig: WeakComposition,
    root: Node,
    inv: MultiInversionSet,
}

impl PartialEq for SDecreasingTree {
    fn eq(&self, other: &Self) -> bool {
        self.sig == other.sig && self.inv == other.inv
    }
}

impl Eq for SDecreasingTree {}

impl Hash for SDecreasingTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sig.hash(state);
        self.inv.hash(state);
    }
}

impl PartialOrd for SDecreasingTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SDecreasingTree {
    /// Canonical order: lexicographic on the inversion vector.
    fn cmp(&self, other: &Self) -> Ordering {
        self.sig
            .cmp(&other.sig)
            .then_with(|| self.inv.vector().cmp(other.inv.vector()))
    }
}

/// Child-index addresses from the root, used to place any label pair
/// without walking ancestor chains per pair.
fn collect_addresses(node: &Node, prefix: &mut Vec<u32>, out: &mut Vec<Option<Vec<u32>>>) {
    out[node.label - 1] = Some(prefix.clone());
    for (i, child) in node.children.iter().enumerate() {
        if let Some(child) = child {
            prefix.push(i as u32);
            collect_addresses(child, prefix, out);
            prefix.pop();
        }
    }
}

fn inversions_of(root: &Node, sig: &WeakComposition) -> MultiInversionSet {
    let n = sig.length();
    let mut addr: Vec<Option<Vec<u32>>> = vec![None; n];
    collect_addresses(root, &mut Vec::new(), &mut addr);
    let mut inv = MultiInversionSet::empty(n);
    for y in 2..=n {
        let ay = addr[y - 1].as_ref().expect("label present");
        for x in 1..y {
            let ax = addr[x - 1].as_ref().expect("label present");
            // y's address is never an extension of x's: labels decrease down.
            let card = if ax.len() > ay.len() && ax[..ay.len()] == ay[..] {
                // x is a descendant of y, sitting in child subtree ax[|ay|]
                ax[ay.len()]
            } else {
                let k = ay.iter().zip(ax.iter()).position(|(a, b)| a != b);
                match k {
                    Some(k) if ax[k] > ay[k] => sig.get(y), // x right of y
                    _ => 0,                                 // x left of y
                }
            };
            if card > 0 {
                inv.set(y, x, card);
            }
        }
    }
    inv
}

fn check_shape(
    node: &Node,
    sig: &WeakComposition,
    seen: &mut [bool],
    parent_label: usize,
) -> Result<(), Error> {
    let n = sig.length();
    if node.label < 1 || node.label > n {
        return Err(Error::MalformedTree("label out of range"));
    }
    if node.label >= parent_label {
        return Err(Error::MalformedTree("labels must decrease downward"));
    }
    if seen[node.label - 1] {
        return Err(Error::MalformedTree("duplicate label"));
    }
    seen[node.label - 1] = true;
    if node.children.len() != sig.get(node.label) as usize + 1 {
        return Err(Error::MalformedTree("node arity must be s(label) + 1"));
    }
    for child in node.children.iter().flatten() {
        check_shape(child, sig, seen, node.label)?;
    }
    Ok(())
}

impl SDecreasingTree {
    /// Validates the shape (labels `1..=n` each once, root `n`, arities from
    /// `s`, decreasing labels) and caches the inversion multiset.
    pub fn new(sig: WeakComposition, root: Node) -> Result<Self, Error> {
        let n = sig.length();
        if root.label != n {
            return Err(Error::MalformedTree("root must carry the largest label"));
        }
        let mut seen = vec![false; n];
        check_shape(&root, &sig, &mut seen, n + 1)?;
        if !seen.iter().all(|&s| s) {
            return Err(Error::MalformedTree("every label must appear"));
        }
        let inv = inversions_of(&root, &sig);
        Ok(SDecreasingTree { sig, root, inv })
    }

    pub fn signature(&self) -> &WeakComposition {
        &self.sig
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn n(&self) -> usize {
        self.sig.length()
    }

    /// `card(y, x)`: which child interval of `y` the smaller label `x`
    /// occupies (0 when weakly left of the left child or `s(y) = 0`, the
    /// child index for a middle child, `s(y)` when weakly right of the
    /// right child).
    pub fn cardinality(&self, y: usize, x: usize) -> Result<u32, Error> {
        self.inv.try_get(y, x)
    }

    /// The tree-inversion multiset of this tree.
    pub fn inversions(&self) -> &MultiInversionSet {
        &self.inv
    }

    pub fn to_inversion_set(&self) -> TreeInversionSet {
        TreeInversionSet::new_unchecked(self.inv.clone(), self.sig.clone())
    }

    /// The unique tree with the all-zero inversion set, the minimum of the
    /// s-weak order.
    pub fn minimum(sig: &WeakComposition) -> Self {
        let tis = TreeInversionSet::new_unchecked(
            MultiInversionSet::empty(sig.length()),
            sig.clone(),
        );
        construct_tree(&tis)
    }

    /// The tree of the maximal inversion set `maxs_s`, the maximum of the
    /// s-weak order.
    pub fn maximum(sig: &WeakComposition) -> Self {
        let tis = TreeInversionSet::new_unchecked(MultiInversionSet::maximal(sig), sig.clone());
        construct_tree(&tis)
    }

    /// Reflects the tree along a vertical line; complements every
    /// cardinality: `card(mirror(T), b, a) = s(b) - card(T, b, a)`.
    pub fn mirror(&self) -> Self {
        fn flip(node: &Node) -> Node {
            let mut children: Vec<Option<Node>> = node
                .children
                .iter()
                .map(|c| c.as_ref().map(flip))
                .collect();
            children.reverse();
            Node {
                label: node.label,
                children,
            }
        }
        let root = flip(&self.root);
        let mut inv = MultiInversionSet::empty(self.n());
        for y in 2..=self.n() {
            for x in 1..y {
                inv.set(y, x, self.sig.get(y) - self.inv.get(y, x));
            }
        }
        debug_assert_eq!(inv, inversions_of(&root, &self.sig));
        SDecreasingTree {
            sig: self.sig.clone(),
            root,
            inv,
        }
    }

    /// Reads the word of cavern labels in preorder: between two consecutive
    /// child traversals of node `y` the label `y` is emitted, so each `y`
    /// appears `s(y)` times. The result is a 121-avoiding s-permutation.
    /// Only defined for signatures without zeros.
    pub fn s_permutation(&self) -> Result<Vec<usize>, Error> {
        if !self.sig.is_composition() {
            return Err(Error::ZeroSignature);
        }
        fn walk(node: &Node, out: &mut Vec<usize>) {
            for (i, child) in node.children.iter().enumerate() {
                if i > 0 {
                    out.push(node.label);
                }
                if let Some(child) = child {
                    walk(child, out);
                }
            }
        }
        let mut out = Vec::with_capacity(self.sig.weight() as usize);
        walk(&self.root, &mut out);
        Ok(out)
    }

    pub(crate) fn from_parts_unchecked(
        sig: WeakComposition,
        root: Node,
        inv: MultiInversionSet,
    ) -> Self {
        debug_assert_eq!(inv, inversions_of(&root, &sig));
        SDecreasingTree { sig, root, inv }
    }
}

/// Rebuilds the unique s-decreasing tree of a valid tree-inversion set:
/// the root takes the largest remaining label and the other labels are
/// partitioned into its child subtrees by their cardinality against it.
pub fn construct_tree(tis: &TreeInversionSet) -> SDecreasingTree {
    let sig = tis.signature().clone();
    let inv = tis.inversions();

    fn build(labels: &[usize], inv: &MultiInversionSet, sig: &WeakComposition) -> Option<Node> {
        let (&c, rest) = labels.split_last()?;
        let arity = sig.get(c) as usize + 1;
        let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); arity];
        for &a in rest {
            buckets[inv.get(c, a) as usize].push(a);
        }
        let children = buckets
            .iter()
            .map(|bucket| build(bucket, inv, sig))
            .collect();
        Some(Node { label: c, children })
    }

    let labels: Vec<usize> = (1..=sig.length()).collect();
    let root = build(&labels, inv, &sig).expect("non-empty signature");
    SDecreasingTree::from_parts_unchecked(sig, root, inv.clone())
}

/// All s-decreasing trees of the signature, each exactly once, sorted in
/// the canonical order (lexicographic on inversion vectors, so the minimum
/// tree comes first and the maximum last).
pub fn enumerate_trees(sig: &WeakComposition) -> Vec<SDecreasingTree> {
    let n = sig.length();
    let mut partial = vec![Node::bare(n, sig.get(n) as usize + 1)];
    // insert labels n-1 down to 1, each into every leaf slot of every tree
    for label in (1..n).rev() {
        let mut next = Vec::new();
        for tree in &partial {
            let slots = count_leaves(tree);
            for slot in 0..slots {
                let mut copy = tree.clone();
                let mut remaining = slot;
                fill_slot(&mut copy, &mut remaining, label, sig.get(label) as usize + 1);
                next.push(copy);
            }
        }
        partial = next;
    }
    let mut trees: Vec<SDecreasingTree> = partial
        .into_iter()
        .map(|root| {
            let inv = inversions_of(&root, sig);
            SDecreasingTree::from_parts_unchecked(sig.clone(), root, inv)
        })
        .collect();
    trees.sort();
    trees
}

/// The product formula `prod_{i=1}^{n-1} (1 + s(i+1) + ... + s(n))` for the
/// number of s-decreasing trees: inserting node `i` into a partial tree on
/// the larger labels offers one slot per leaf. Enumeration remains the
/// ground truth; the formula serves as a cross-check and as the cheap
/// pre-check for element-count guards.
pub fn expected_tree_count(sig: &WeakComposition) -> u128 {
    let entries = sig.entries();
    let mut suffix: u128 = 0;
    let mut prod: u128 = 1;
    for i in (1..entries.len()).rev() {
        suffix += entries[i] as u128;
        prod = prod.saturating_mul(1 + suffix);
    }
    prod
}

fn count_leaves(node: &Node) -> usize {
    node.children
        .iter()
        .map(|c| c.as_ref().map_or(1, count_leaves))
        .sum()
}

fn fill_slot(node: &mut Node, remaining: &mut usize, label: usize, arity: usize) -> bool {
    for child in node.children.iter_mut() {
        match child {
            Some(c) => {
                if fill_slot(c, remaining, label, arity) {
                    return true;
                }
            }
            None => {
                if *remaining == 0 {
                    *child = Some(Node::bare(label, arity));
                    return true;
                }
                *remaining -= 1;
            }
        }
    }
    false
}
