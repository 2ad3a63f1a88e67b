//! An indexed finite lattice built from either the s-weak order or the
//! s-Tamari order, shared by the structural verifiers.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::composition::WeakComposition;
use crate::error::Error;
use crate::tamari;
use crate::tree::{enumerate_trees, expected_tree_count, SDecreasingTree};
use crate::weak_order::{covers, diagram_of, join, leq, meet, TreeAscent};

/// Default ceiling on the number of elements a verifier will enumerate.
/// Exceeding it yields an explicit refusal, never silent truncation.
pub const DEFAULT_ELEMENT_LIMIT: usize = 20_000;

/// Elements in canonical order with precomputed order relation, labeled
/// covers and algebraic join/meet on indices.
#[derive(Debug, Clone)]
pub struct FiniteLattice {
    sig: WeakComposition,
    elements: Vec<SDecreasingTree>,
    index: BTreeMap<Vec<u32>, usize>,
    /// `leq[i]` is a bit row: bit `j` set iff `elements[i] <= elements[j]`.
    leq_rows: Vec<Vec<u64>>,
    covers: Vec<(usize, usize, TreeAscent)>,
    up_adj: Vec<Vec<(usize, TreeAscent)>>,
    down_adj: Vec<Vec<(usize, TreeAscent)>>,
}

fn guard(sig: &WeakComposition, limit: usize) -> Result<(), Error> {
    let required = expected_tree_count(sig);
    if required > limit as u128 {
        return Err(Error::ElementLimit {
            required: required.min(usize::MAX as u128) as usize,
            limit,
        });
    }
    Ok(())
}

impl FiniteLattice {
    /// The full s-weak order on all s-decreasing trees of `sig`.
    pub fn s_weak(sig: &WeakComposition, limit: usize) -> Result<Self, Error> {
        guard(sig, limit)?;
        let elements = enumerate_trees(sig);
        Ok(Self::from_elements(sig.clone(), elements, covers))
    }

    /// The s-Tamari lattice on the s-Tamari trees of `sig`, with covers
    /// given by Tamari rotations.
    pub fn s_tamari(sig: &WeakComposition, limit: usize) -> Result<Self, Error> {
        guard(sig, limit)?;
        let elements: Vec<SDecreasingTree> = enumerate_trees(sig)
            .into_iter()
            .filter(tamari::is_s_tamari)
            .collect();
        Ok(Self::from_elements(sig.clone(), elements, |t| {
            tamari::tamari_covers(t).expect("element is s-Tamari")
        }))
    }

    fn from_elements(
        sig: WeakComposition,
        elements: Vec<SDecreasingTree>,
        covers_fn: impl Fn(&SDecreasingTree) -> Vec<(SDecreasingTree, TreeAscent)>,
    ) -> Self {
        let diagram = diagram_of(elements, covers_fn);
        let elements = diagram.elements;
        let covers = diagram.edges;
        let n = elements.len();
        let words = n.div_ceil(64);
        let mut leq_rows = vec![vec![0u64; words]; n];
        for (i, t) in elements.iter().enumerate() {
            for (j, r) in elements.iter().enumerate() {
                if leq(t, r).expect("same signature") {
                    leq_rows[i][j / 64] |= 1 << (j % 64);
                }
            }
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, t)| (t.inversions().vector().to_vec(), i))
            .collect();
        let mut up_adj = vec![Vec::new(); n];
        let mut down_adj = vec![Vec::new(); n];
        for &(from, to, label) in &covers {
            up_adj[from].push((to, label));
            down_adj[to].push((from, label));
        }
        FiniteLattice {
            sig,
            elements,
            index,
            leq_rows,
            covers,
            up_adj,
            down_adj,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn signature(&self) -> &WeakComposition {
        &self.sig
    }

    pub fn elements(&self) -> &[SDecreasingTree] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SDecreasingTree {
        &self.elements[i]
    }

    pub fn index_of(&self, t: &SDecreasingTree) -> Option<usize> {
        self.index.get(t.inversions().vector()).copied()
    }

    pub fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq_rows[i][j / 64] & (1 << (j % 64)) != 0
    }

    pub fn lt_idx(&self, i: usize, j: usize) -> bool {
        i != j && self.leq_idx(i, j)
    }

    /// Labeled cover edges, sorted by `(from, label)`.
    pub fn covers(&self) -> &[(usize, usize, TreeAscent)] {
        &self.covers
    }

    pub fn up_covers(&self, i: usize) -> &[(usize, TreeAscent)] {
        &self.up_adj[i]
    }

    pub fn down_covers(&self, i: usize) -> &[(usize, TreeAscent)] {
        &self.down_adj[i]
    }

    /// The label of the cover edge from `i` to `j`, if one exists.
    pub fn cover_label(&self, i: usize, j: usize) -> Option<TreeAscent> {
        self.up_adj[i]
            .iter()
            .find(|(to, _)| *to == j)
            .map(|&(_, l)| l)
    }

    /// Algebraic join on indices. Inside the s-Tamari sublattice this is
    /// the same operation restricted to s-Tamari trees.
    pub fn join_idx(&self, i: usize, j: usize) -> usize {
        let t = join(&self.elements[i], &self.elements[j]).expect("same signature");
        *self
            .index
            .get(t.inversions().vector())
            .expect("join stays inside the lattice")
    }

    pub fn meet_idx(&self, i: usize, j: usize) -> usize {
        let t = meet(&self.elements[i], &self.elements[j]).expect("same signature");
        *self
            .index
            .get(t.inversions().vector())
            .expect("meet stays inside the lattice")
    }

    /// Dense join and meet tables (`n * n` entries each) for the verifiers
    /// that probe many pairs.
    pub fn operation_tables(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.len();
        let mut join_t = vec![0u32; n * n];
        let mut meet_t = vec![0u32; n * n];
        for i in 0..n {
            for j in i..n {
                let jo = self.join_idx(i, j) as u32;
                let me = self.meet_idx(i, j) as u32;
                join_t[i * n + j] = jo;
                join_t[j * n + i] = jo;
                meet_t[i * n + j] = me;
                meet_t[j * n + i] = me;
            }
        }
        (join_t, meet_t)
    }

    /// All `k` with `lo <= k <= hi`, ascending.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&k| self.leq_idx(lo, k) && self.leq_idx(k, hi))
            .collect()
    }

    /// Indices of elements with no strict lower (resp. upper) neighbour.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.down_adj[i].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.up_adj[i].is_empty())
            .collect()
    }

    /// Reflexive-transitive closure of the cover digraph as bit rows, for
    /// comparing reachability against the order relation.
    pub fn cover_reachability(&self) -> Vec<Vec<u64>> {
        let n = self.len();
        let words = n.div_ceil(64);
        let mut reach = vec![vec![0u64; words]; n];
        // process in reverse canonical order: covers go upward in the sort
        for i in (0..n).rev() {
            reach[i][i / 64] |= 1 << (i % 64);
            let ups: Vec<usize> = self.up_adj[i].iter().map(|&(j, _)| j).collect();
            for j in ups {
                let (head, tail) = reach.split_at_mut(j);
                let src = &tail[0];
                for (w, word) in head[i].iter_mut().enumerate() {
                    *word |= src[w];
                }
            }
        }
        reach
    }
}
