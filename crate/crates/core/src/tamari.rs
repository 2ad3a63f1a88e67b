//! s-Tamari trees: the sublattice, Tamari rotations, the projections onto
//! s-Tamari and s-maximal-Tamari trees, congruence classes, and the
//! quotient-lattice verification for signatures without interior zeros.

use alloc::vec;
use alloc::vec::Vec;

use crate::composition::WeakComposition;
use crate::error::Error;
use crate::inversions::{MultiInversionSet, TreeInversionSet};
use crate::lattice::FiniteLattice;
use crate::tree::{construct_tree, enumerate_trees, SDecreasingTree};
use crate::weak_order::{diagram_of, HasseDiagram, TreeAscent};

/// Row-monotone cardinalities: `card(c, a) <= card(c, b)` for all
/// `a < b < c`; equivalently the labels in lower child intervals of any
/// node are smaller than those in higher ones.
pub fn is_s_tamari(t: &SDecreasingTree) -> bool {
    let inv = t.inversions();
    for c in 3..=t.n() {
        for a in 1..c - 1 {
            if inv.get(c, a) > inv.get(c, a + 1) {
                return false;
            }
        }
    }
    true
}

/// Pairs `(a, c)` where `a` is a direct non-right child of `c`, sorted by
/// `(a, c)`. Only defined on s-Tamari trees.
pub fn tamari_ascents(t: &SDecreasingTree) -> Result<Vec<TreeAscent>, Error> {
    if !is_s_tamari(t) {
        return Err(Error::NotTamari);
    }
    let mut out = Vec::new();
    collect_direct_non_right(t.root(), &mut out);
    out.sort();
    Ok(out)
}

fn collect_direct_non_right(
    node: &crate::tree::Node,
    out: &mut Vec<TreeAscent>,
) {
    let last = node.children.len() - 1;
    for (i, child) in node.children.iter().enumerate() {
        if let Some(child) = child {
            if i < last {
                out.push(TreeAscent {
                    a: child.label,
                    c: node.label,
                });
            }
            collect_direct_non_right(child, out);
        }
    }
}

/// Rotates an s-Tamari tree at a Tamari-ascent: the cardinality of
/// `(c, a')` grows by one for `a' = a` and every non-left descendant of
/// `a`; the result is again s-Tamari and covers `t` in the s-Tamari order.
pub fn tamari_rotate(t: &SDecreasingTree, asc: TreeAscent) -> Result<SDecreasingTree, Error> {
    if !tamari_ascents(t)?.contains(&asc) {
        return Err(Error::NotATamariAscent { a: asc.a, c: asc.c });
    }
    let mut inv = t.inversions().clone();
    inv.add(asc.c, asc.a);
    let old = t.inversions();
    for x in 1..asc.a {
        // x is a non-left descendant of a exactly when card(a, x) > 0 and
        // card(c, x) = card(c, a): the child interval of c holding a is
        // rooted at a itself
        if old.get(asc.a, x) > 0 && old.get(asc.c, x) == old.get(asc.c, asc.a) {
            inv.add(asc.c, x);
        }
    }
    let tis = TreeInversionSet::new_unchecked(inv, t.signature().clone());
    let rotated = construct_tree(&tis);
    debug_assert!(is_s_tamari(&rotated));
    Ok(rotated)
}

/// Covers of `t` in the s-Tamari lattice, one per Tamari-ascent.
pub fn tamari_covers(t: &SDecreasingTree) -> Result<Vec<(SDecreasingTree, TreeAscent)>, Error> {
    tamari_ascents(t)?
        .into_iter()
        .map(|asc| Ok((tamari_rotate(t, asc)?, asc)))
        .collect()
}

/// All s-Tamari trees of the signature in canonical order.
pub fn enumerate_tamari(sig: &WeakComposition) -> Vec<SDecreasingTree> {
    enumerate_trees(sig).into_iter().filter(is_s_tamari).collect()
}

/// Hasse diagram of the s-Tamari lattice (covers are Tamari rotations).
pub fn tamari_hasse(sig: &WeakComposition) -> HasseDiagram {
    diagram_of(enumerate_tamari(sig), |t| {
        tamari_covers(t).expect("element is s-Tamari")
    })
}

/// Projection onto s-Tamari trees:
/// `card(c, a) = min(card(T, c, b) : a <= b < c)`. The image is s-Tamari,
/// lies below `T`, and the map is idempotent and (for signatures without
/// interior zeros) order preserving.
pub fn pi_down(t: &SDecreasingTree) -> SDecreasingTree {
    let n = t.n();
    let inv = t.inversions();
    let mut out = MultiInversionSet::empty(n);
    for c in 2..=n {
        let mut running = u32::MAX;
        // b descends from c-1 to a, so the minimum accumulates
        for a in (1..c).rev() {
            running = running.min(inv.get(c, a));
            out.set(c, a, running);
        }
    }
    let tis = TreeInversionSet::new_unchecked(out, t.signature().clone());
    construct_tree(&tis)
}

/// Projection onto s-maximal-Tamari trees: `card(c, a)` jumps to `s(c)`
/// whenever some `b` with `a < b < c` has `card(b, a) = s(b)`, and is kept
/// otherwise. Dual to [`pi_down`]; order preserving for every signature.
pub fn pi_up(t: &SDecreasingTree) -> SDecreasingTree {
    let n = t.n();
    let sig = t.signature();
    let inv = t.inversions();
    let mut out = MultiInversionSet::empty(n);
    for c in 2..=n {
        for a in 1..c {
            let saturated = (a + 1..c).any(|b| inv.get(b, a) == sig.get(b));
            out.set(c, a, if saturated { sig.get(c) } else { inv.get(c, a) });
        }
    }
    let tis = TreeInversionSet::new_unchecked(out, sig.clone());
    construct_tree(&tis)
}

/// `card(b, a) = s(b)` forces `card(c, a) = s(c)` for every `c > b`;
/// exactly the maximal elements of the congruence classes, the image of
/// [`pi_up`].
pub fn is_s_maximal_tamari(t: &SDecreasingTree) -> bool {
    let n = t.n();
    let sig = t.signature();
    let inv = t.inversions();
    for a in 1..n {
        for b in a + 1..n {
            if inv.get(b, a) == sig.get(b) {
                for c in b + 1..=n {
                    if inv.get(c, a) != sig.get(c) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn require_quotient_signature(sig: &WeakComposition) -> Result<(), Error> {
    if sig.supports_quotient() {
        Ok(())
    } else {
        Err(Error::QuotientUnsupported)
    }
}

/// Whether the tree-ascent stays inside its congruence class: some `b`
/// with `a < b < c` has `card(b, a) = s(b)`. Only meaningful when the
/// signature has no zero entries after the first position.
pub fn is_congruence_ascent(
    t: &SDecreasingTree,
    asc: TreeAscent,
) -> Result<bool, Error> {
    require_quotient_signature(t.signature())?;
    if !crate::weak_order::tree_ascents(t).contains(&asc) {
        return Err(Error::NotAnAscent { a: asc.a, c: asc.c });
    }
    let inv = t.inversions();
    let sig = t.signature();
    Ok((asc.a + 1..asc.c).any(|b| inv.get(b, asc.a) == sig.get(b)))
}

/// One congruence class: an interval of the s-weak order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TamariClass {
    /// Index of the minimal element (an s-Tamari tree) in the s-weak order.
    pub bottom: usize,
    /// Index of the maximal element (an s-maximal-Tamari tree).
    pub top: usize,
    /// Member indices, ascending.
    pub members: Vec<usize>,
}

/// The congruence classes of the s-weak order, as fibers of [`pi_down`].
#[derive(Debug, Clone)]
pub struct ClassPartition {
    pub lattice: FiniteLattice,
    /// Classes sorted by their bottom element's canonical position.
    pub classes: Vec<TamariClass>,
    /// `class_of[i]` is the class index of element `i`.
    pub class_of: Vec<usize>,
}

/// Partitions the s-weak order into congruence classes. Refused for
/// signatures with a zero after the first position, where the fibers of
/// the two projections disagree and neither yields the s-Tamari lattice
/// as a quotient.
pub fn tamari_classes(sig: &WeakComposition, limit: usize) -> Result<ClassPartition, Error> {
    require_quotient_signature(sig)?;
    let lattice = FiniteLattice::s_weak(sig, limit)?;
    let mut bottoms: Vec<usize> = Vec::new();
    let mut class_of = Vec::with_capacity(lattice.len());
    for element in lattice.elements() {
        let bottom = lattice
            .index_of(&pi_down(element))
            .expect("projection image is enumerated");
        if let Some(pos) = bottoms.iter().position(|&b| b == bottom) {
            class_of.push(pos);
        } else {
            class_of.push(bottoms.len());
            bottoms.push(bottom);
        }
    }
    // renumber classes by bottom position for a deterministic report
    let mut order: Vec<usize> = (0..bottoms.len()).collect();
    order.sort_by_key(|&k| bottoms[k]);
    let mut renumber = vec![0usize; bottoms.len()];
    for (new, &old) in order.iter().enumerate() {
        renumber[old] = new;
    }
    for c in class_of.iter_mut() {
        *c = renumber[*c];
    }
    let mut classes: Vec<TamariClass> = order
        .iter()
        .map(|&old| TamariClass {
            bottom: bottoms[old],
            top: usize::MAX,
            members: Vec::new(),
        })
        .collect();
    for (i, &c) in class_of.iter().enumerate() {
        classes[c].members.push(i);
    }
    for class in classes.iter_mut() {
        let top = lattice
            .index_of(&pi_up(lattice.element(class.bottom)))
            .expect("projection image is enumerated");
        class.top = top;
    }
    Ok(ClassPartition {
        lattice,
        classes,
        class_of,
    })
}

/// A counterexample found by [`verify_sublattice`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SublatticeCounterexample {
    pub left: usize,
    pub right: usize,
    pub join_closed: bool,
    pub meet_closed: bool,
}

/// Checks that s-Tamari trees are closed under join and meet (valid for
/// every signature, zeros included). Indices refer to the s-Tamari
/// lattice's canonical element order.
pub fn verify_sublattice(
    sig: &WeakComposition,
    limit: usize,
) -> Result<Result<(), SublatticeCounterexample>, Error> {
    let tam = FiniteLattice::s_tamari(sig, limit)?;
    for i in 0..tam.len() {
        for j in i + 1..tam.len() {
            let jo = crate::weak_order::join(tam.element(i), tam.element(j))?;
            let me = crate::weak_order::meet(tam.element(i), tam.element(j))?;
            let join_closed = is_s_tamari(&jo);
            let meet_closed = is_s_tamari(&me);
            if !join_closed || !meet_closed {
                return Ok(Err(SublatticeCounterexample {
                    left: i,
                    right: j,
                    join_closed,
                    meet_closed,
                }));
            }
        }
    }
    Ok(Ok(()))
}

/// A failure of any quotient-lattice property, with a witness description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientViolation {
    /// A class is not the interval between its projections.
    ClassNotInterval { class: usize },
    /// The fibers of the two projections differ at an element.
    FibersDiffer { element: usize },
    /// A projection fails to be order preserving on a cover.
    NotOrderPreserving { from: usize, to: usize, up: bool },
    /// A cover is class-internal but not a congruence rotation, or the
    /// other way around.
    CongruenceMismatch { from: usize, to: usize },
    /// pi_down does not strictly increase on a class-crossing cover.
    ProjectionNotStrict { from: usize, to: usize },
    /// The join of two classes depends on the chosen representatives.
    JoinNotWellDefined { x: usize, y: usize, x2: usize, y2: usize },
    /// The quotient order is not isomorphic to the s-Tamari lattice.
    NotIsomorphic,
}

/// Report of [`verify_quotient`]: the partition plus the outcome.
#[derive(Debug, Clone)]
pub struct QuotientReport {
    pub partition: ClassPartition,
    pub class_count: usize,
    pub verdict: Result<(), QuotientViolation>,
}

/// Verifies the whole quotient-lattice story for a signature without
/// interior zeros: classes are intervals `[pi_down(T), pi_up(T)]`, both
/// projections are order preserving, the class-internal covers are exactly
/// the congruence rotations (and class-crossing covers strictly increase
/// the projection), joins are well defined on classes, and the quotient
/// order is isomorphic to the s-Tamari lattice under `class -> bottom`.
pub fn verify_quotient(sig: &WeakComposition, limit: usize) -> Result<QuotientReport, Error> {
    let partition = tamari_classes(sig, limit)?;
    let verdict = quotient_verdict(&partition);
    Ok(QuotientReport {
        class_count: partition.classes.len(),
        partition,
        verdict,
    })
}

fn quotient_verdict(partition: &ClassPartition) -> Result<(), QuotientViolation> {
    let lat = &partition.lattice;
    // classes are the intervals of their projections, and pi_up fibers
    // coincide with pi_down fibers
    for (ci, class) in partition.classes.iter().enumerate() {
        let interval = lat.interval(class.bottom, class.top);
        if interval != class.members {
            return Err(QuotientViolation::ClassNotInterval { class: ci });
        }
        for &m in &class.members {
            let up = lat
                .index_of(&pi_up(lat.element(m)))
                .expect("image enumerated");
            if up != class.top {
                return Err(QuotientViolation::FibersDiffer { element: m });
            }
        }
    }
    // projections order preserving on covers; internal covers are exactly
    // the congruence rotations; crossing covers strictly increase pi_down
    for &(from, to, label) in lat.covers() {
        let (pf, pt) = (
            lat.index_of(&pi_down(lat.element(from))).unwrap(),
            lat.index_of(&pi_down(lat.element(to))).unwrap(),
        );
        if !lat.leq_idx(pf, pt) {
            return Err(QuotientViolation::NotOrderPreserving { from, to, up: false });
        }
        let (uf, ut) = (
            lat.index_of(&pi_up(lat.element(from))).unwrap(),
            lat.index_of(&pi_up(lat.element(to))).unwrap(),
        );
        if !lat.leq_idx(uf, ut) {
            return Err(QuotientViolation::NotOrderPreserving { from, to, up: true });
        }
        let internal = partition.class_of[from] == partition.class_of[to];
        let congruence = is_congruence_ascent(lat.element(from), label)
            .expect("cover label is an ascent");
        if internal != congruence {
            return Err(QuotientViolation::CongruenceMismatch { from, to });
        }
        if !internal && !lat.lt_idx(pf, pt) {
            return Err(QuotientViolation::ProjectionNotStrict { from, to });
        }
    }
    // joins of classes are independent of the representatives
    for x_class in &partition.classes {
        for y_class in &partition.classes {
            let reference = partition.class_of
                [lat.join_idx(x_class.bottom, y_class.bottom)];
            for &x in &x_class.members {
                for &y in &y_class.members {
                    if partition.class_of[lat.join_idx(x, y)] != reference {
                        return Err(QuotientViolation::JoinNotWellDefined {
                            x: x_class.bottom,
                            y: y_class.bottom,
                            x2: x,
                            y2: y,
                        });
                    }
                }
            }
        }
    }
    // quotient order (classes under the induced order) is isomorphic to
    // the s-Tamari lattice via class -> bottom element
    let tam = tamari_hasse(lat.signature());
    if tam.elements.len() != partition.classes.len() {
        return Err(QuotientViolation::NotIsomorphic);
    }
    // bottoms are s-Tamari trees listed in canonical order on both sides
    for (class, tree) in partition.classes.iter().zip(&tam.elements) {
        if lat.element(class.bottom) != tree {
            return Err(QuotientViolation::NotIsomorphic);
        }
    }
    // quotient covers: Hasse edges of the induced order on class bottoms
    let qn = partition.classes.len();
    let mut q_leq = vec![false; qn * qn];
    for (i, x_class) in partition.classes.iter().enumerate() {
        for (j, y_class) in partition.classes.iter().enumerate() {
            q_leq[i * qn + j] = lat.leq_idx(x_class.bottom, y_class.bottom);
        }
    }
    let mut q_covers = Vec::new();
    for i in 0..qn {
        for j in 0..qn {
            if i == j || !q_leq[i * qn + j] {
                continue;
            }
            let strict_between = (0..qn).any(|k| {
                k != i && k != j && q_leq[i * qn + k] && q_leq[k * qn + j]
            });
            if !strict_between {
                q_covers.push((i, j));
            }
        }
    }
    q_covers.sort_unstable();
    let mut t_covers: Vec<(usize, usize)> =
        tam.edges.iter().map(|&(f, t, _)| (f, t)).collect();
    t_covers.sort_unstable();
    if q_covers != t_covers {
        return Err(QuotientViolation::NotIsomorphic);
    }
    Ok(())
}

/// Groups elements by a projection image, with no congruence claim; the
/// two groupings agree exactly when the signature has no interior zeros.
pub fn projection_fibers(
    sig: &WeakComposition,
    up: bool,
    limit: usize,
) -> Result<Vec<Vec<usize>>, Error> {
    let lattice = FiniteLattice::s_weak(sig, limit)?;
    let mut fibers: Vec<(usize, Vec<usize>)> = Vec::new();
    for i in 0..lattice.len() {
        let image = if up {
            pi_up(lattice.element(i))
        } else {
            pi_down(lattice.element(i))
        };
        let key = lattice.index_of(&image).expect("image enumerated");
        if let Some(entry) = fibers.iter_mut().find(|(k, _)| *k == key) {
            entry.1.push(i);
        } else {
            fibers.push((key, vec![i]));
        }
    }
    fibers.sort();
    Ok(fibers.into_iter().map(|(_, members)| members).collect())
}
