//! Multi inversion sets and the two axioms (transitivity, planarity) that
//! characterize inversion multisets of s-decreasing trees.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::composition::WeakComposition;
use crate::error::Error;

/// A multiset of inversions `(y, x)` with `1 <= x < y <= n`, stored as a
/// dense triangular array of cardinalities; an absent pair has cardinality 0.
///
/// Pairs are ordered lexicographically by `(y, x)`; that fixed order defines
/// the canonical cardinality vector used for equality, hashing and the
/// enumeration order of trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiInversionSet {
    n: usize,
    card: Vec<u32>,
}

#[inline]
fn pair_index(y: usize, x: usize) -> usize {
    debug_assert!(x >= 1 && x < y);
    (y - 1) * (y - 2) / 2 + (x - 1)
}

impl MultiInversionSet {
    /// The empty multiset on `1..=n`.
    pub fn empty(n: usize) -> Self {
        MultiInversionSet {
            n,
            card: vec![0; n * n.saturating_sub(1) / 2],
        }
    }

    /// The maximal s-inversion set: `card(y, x) = s(y)` for every pair.
    pub fn maximal(sig: &WeakComposition) -> Self {
        let n = sig.length();
        let mut inv = Self::empty(n);
        for y in 2..=n {
            for x in 1..y {
                inv.set(y, x, sig.get(y));
            }
        }
        inv
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_pair(&self, y: usize, x: usize) -> Result<(), Error> {
        if x >= 1 && x < y && y <= self.n {
            Ok(())
        } else {
            Err(Error::InvalidLabelPair { y, x, n: self.n })
        }
    }

    /// Cardinality of the pair `(y, x)`; the pair must satisfy `x < y <= n`.
    pub fn get(&self, y: usize, x: usize) -> u32 {
        self.card[pair_index(y, x)]
    }

    /// Checked variant of [`get`](Self::get) for untrusted labels.
    pub fn try_get(&self, y: usize, x: usize) -> Result<u32, Error> {
        self.check_pair(y, x)?;
        Ok(self.get(y, x))
    }

    pub fn set(&mut self, y: usize, x: usize, value: u32) {
        self.card[pair_index(y, x)] = value;
    }

    /// Adds the inversion `(y, x)` once, increasing its cardinality by one.
    pub fn add(&mut self, y: usize, x: usize) {
        self.card[pair_index(y, x)] += 1;
    }

    /// All pairs `(y, x, card)` with positive cardinality, sorted by `(y, x)`.
    pub fn positive_entries(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for y in 2..=self.n {
            for x in 1..y {
                let c = self.get(y, x);
                if c > 0 {
                    out.push((y, x, c));
                }
            }
        }
        out
    }

    /// The cardinality vector in the fixed `(y, x)` lexicographic pair order.
    pub fn vector(&self) -> &[u32] {
        &self.card
    }

    pub fn from_vector(n: usize, card: Vec<u32>) -> Result<Self, Error> {
        if card.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::SizeMismatch {
                left: card.len(),
                right: n * n.saturating_sub(1) / 2,
            });
        }
        Ok(MultiInversionSet { n, card })
    }

    /// Total number of inversions counted with multiplicity.
    pub fn weight(&self) -> u64 {
        self.card.iter().map(|&c| c as u64).sum()
    }

    /// Multiset inclusion: every cardinality in `self` is at most the one in
    /// `other`.
    pub fn included_in(&self, other: &Self) -> Result<bool, Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.card.iter().zip(&other.card).all(|(a, b)| a <= b))
    }

    /// Pointwise maximum, the smallest multi inversion set containing both.
    pub fn union(&self, other: &Self) -> Result<Self, Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let card = self
            .card
            .iter()
            .zip(&other.card)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(MultiInversionSet { n: self.n, card })
    }

    /// Smallest transitive multi inversion set containing `self`.
    ///
    /// `card(c, a)` becomes the maximal first-edge cardinality over
    /// transitivity paths `c = b_1 > ... > b_k = a` whose every edge has
    /// positive cardinality. Computed as a fixed-point relaxation over
    /// triples `c > b > a`:
    /// `card(c, a) <- max(card(c, a), card(c, b))` whenever `card(b, a) > 0`.
    pub fn transitive_closure(&self) -> Self {
        let mut tc = self.clone();
        let n = self.n;
        let mut changed = true;
        while changed {
            changed = false;
            for c in 3..=n {
                for b in 2..c {
                    let cb = tc.get(c, b);
                    if cb == 0 {
                        continue;
                    }
                    for a in 1..b {
                        if tc.get(b, a) > 0 && tc.get(c, a) < cb {
                            tc.set(c, a, cb);
                            changed = true;
                        }
                    }
                }
            }
        }
        tc
    }

    /// True when transitivity holds: `card(c, b) = i > 0` forces
    /// `card(b, a) = 0` or `card(c, a) >= i`.
    pub fn is_transitive(&self) -> bool {
        self.transitivity_witness().is_none()
    }

    fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        for c in 3..=self.n {
            for b in 2..c {
                let cb = self.get(c, b);
                if cb == 0 {
                    continue;
                }
                for a in 1..b {
                    if self.get(b, a) > 0 && self.get(c, a) < cb {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    fn planarity_witness(&self, sig: &WeakComposition) -> Option<(usize, usize, usize)> {
        for c in 3..=self.n {
            for a in 1..c - 1 {
                let ca = self.get(c, a);
                if ca == 0 {
                    continue;
                }
                for b in a + 1..c {
                    if self.get(b, a) != sig.get(b) && self.get(c, b) < ca {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    fn bound_witness(&self, sig: &WeakComposition) -> Option<(usize, usize)> {
        for y in 2..=self.n {
            for x in 1..y {
                if self.get(y, x) > sig.get(y) {
                    return Some((y, x));
                }
            }
        }
        None
    }
}

/// Which tree-inversion axiom failed, with a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `card(y, x) > s(y)` at the witness pair.
    Bound { y: usize, x: usize },
    /// Transitivity fails at the witness triple `a < b < c`.
    Transitivity { a: usize, b: usize, c: usize },
    /// Planarity fails at the witness triple `a < b < c`.
    Planarity { a: usize, b: usize, c: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Bound { y, x } => write!(f, "cardinality bound exceeded at ({y},{x})"),
            AxiomViolation::Transitivity { a, b, c } => {
                write!(f, "transitivity violated at ({a},{b},{c})")
            }
            AxiomViolation::Planarity { a, b, c } => {
                write!(f, "planarity violated at ({a},{b},{c})")
            }
        }
    }
}

/// Verdict of [`validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    Ok,
    Violated(AxiomViolation),
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        matches!(self, Validation::Ok)
    }
}

/// Checks the three s-tree-inversion-set axioms for `inv` against `sig`:
/// bounded by `maxs_s`, transitive, and planar. Reports the first failed
/// axiom with a witness.
pub fn validate(inv: &MultiInversionSet, sig: &WeakComposition) -> Result<Validation, Error> {
    if inv.n() != sig.length() {
        return Err(Error::SizeMismatch {
            left: inv.n(),
            right: sig.length(),
        });
    }
    if let Some((y, x)) = inv.bound_witness(sig) {
        return Ok(Validation::Violated(AxiomViolation::Bound { y, x }));
    }
    if let Some((a, b, c)) = inv.transitivity_witness() {
        return Ok(Validation::Violated(AxiomViolation::Transitivity { a, b, c }));
    }
    if let Some((a, b, c)) = inv.planarity_witness(sig) {
        return Ok(Validation::Violated(AxiomViolation::Planarity { a, b, c }));
    }
    Ok(Validation::Ok)
}

/// A multi inversion set that passed all tree-inversion axioms for its
/// signature, hence corresponds to a unique s-decreasing tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeInversionSet {
    sig: WeakComposition,
    inv: MultiInversionSet,
}

impl TreeInversionSet {
    pub fn new(inv: MultiInversionSet, sig: WeakComposition) -> Result<Self, Error> {
        match validate(&inv, &sig)? {
            Validation::Ok => Ok(TreeInversionSet { sig, inv }),
            Validation::Violated(v) => Err(Error::InvalidInversionSet(v)),
        }
    }

    /// Wraps without re-running the axioms. Used on closure paths whose
    /// validity the structure theorems guarantee; debug builds re-validate.
    pub(crate) fn new_unchecked(inv: MultiInversionSet, sig: WeakComposition) -> Self {
        debug_assert_eq!(validate(&inv, &sig), Ok(Validation::Ok));
        TreeInversionSet { sig, inv }
    }

    pub fn signature(&self) -> &WeakComposition {
        &self.sig
    }

    pub fn inversions(&self) -> &MultiInversionSet {
        &self.inv
    }

    pub fn into_parts(self) -> (MultiInversionSet, WeakComposition) {
        (self.inv, self.sig)
    }
}
