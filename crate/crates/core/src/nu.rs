//! nu-paths, nu-trees, right flushing, and the isomorphisms carrying the
//! s-Tamari lattice onto the nu-Tamari lattice of `nu(reverse s)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::composition::WeakComposition;
use crate::error::Error;
use crate::tamari::is_s_tamari;
use crate::tree::{Node, SDecreasingTree};

/// One step of a lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    North,
    East,
}

/// A word over `{N, E}` read from the origin; `x` grows east, `y` north.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepWord(pub Vec<Step>);

impl StepWord {
    pub fn parse(word: &str) -> Result<Self, Error> {
        word.chars()
            .map(|ch| match ch {
                'N' => Ok(Step::North),
                'E' => Ok(Step::East),
                _ => Err(Error::InvalidStepWord),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(StepWord)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn east_count(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::East).count()
    }

    pub fn north_count(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::North).count()
    }

    /// Lattice points visited, starting at the origin; one more point than
    /// steps.
    pub fn points(&self) -> Vec<(u32, u32)> {
        let mut pts = Vec::with_capacity(self.len() + 1);
        let (mut x, mut y) = (0u32, 0u32);
        pts.push((x, y));
        for &s in &self.0 {
            match s {
                Step::North => y += 1,
                Step::East => x += 1,
            }
            pts.push((x, y));
        }
        pts
    }

    /// For each height `0..=north_count`, the x-coordinate at which the
    /// path leaves that height (its east extent there).
    fn row_ends(&self) -> Vec<u32> {
        let mut ends = Vec::with_capacity(self.north_count() + 1);
        let mut x = 0u32;
        for &s in &self.0 {
            match s {
                Step::North => ends.push(x),
                Step::East => x += 1,
            }
        }
        ends.push(x);
        ends
    }

    /// Heights of the east steps in path order (non-decreasing).
    fn east_heights(&self) -> Vec<u32> {
        let mut h = 0u32;
        let mut out = Vec::with_capacity(self.east_count());
        for &s in &self.0 {
            match s {
                Step::North => h += 1,
                Step::East => out.push(h),
            }
        }
        out
    }
}

impl core::fmt::Display for StepWord {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for &s in &self.0 {
            f.write_str(if s == Step::North { "N" } else { "E" })?;
        }
        Ok(())
    }
}

/// The path `N E^{s(1)} N E^{s(2)} ... N E^{s(n)}`. The bijections target
/// `nu_of(&s.reversed())`.
pub fn nu_of(sig: &WeakComposition) -> StepWord {
    let mut steps = Vec::new();
    for &e in sig.entries() {
        steps.push(Step::North);
        steps.extend(core::iter::repeat_n(Step::East, e as usize));
    }
    StepWord(steps)
}

/// A lattice path with the same endpoints as `nu`, weakly above it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NuPath {
    nu: StepWord,
    steps: StepWord,
}

impl NuPath {
    pub fn new(nu: StepWord, steps: StepWord) -> Result<Self, Error> {
        if steps.east_count() != nu.east_count() || steps.north_count() != nu.north_count() {
            return Err(Error::NotANuPath);
        }
        let path = NuPath { nu, steps };
        if path
            .steps
            .points()
            .iter()
            .any(|&p| !weakly_above(&path.nu, p))
        {
            return Err(Error::NotANuPath);
        }
        Ok(path)
    }

    pub fn nu(&self) -> &StepWord {
        &self.nu
    }

    pub fn steps(&self) -> &StepWord {
        &self.steps
    }

    pub fn points(&self) -> Vec<(u32, u32)> {
        self.steps.points()
    }

    /// Horizontal distance of the indexed lattice point: the number of
    /// east steps that can be appended to it without crossing `nu`.
    pub fn horiz(&self, point: usize) -> Result<u32, Error> {
        let pts = self.points();
        let &(x, y) = pts.get(point).ok_or(Error::PointOutOfRange)?;
        Ok(self.nu.row_ends()[y as usize] - x)
    }

    /// Indices of valleys: lattice points preceded by an east step and
    /// followed by a north step.
    pub fn valleys(&self) -> Vec<usize> {
        let w = &self.steps.0;
        (1..w.len())
            .filter(|&i| w[i - 1] == Step::East && w[i] == Step::North)
            .collect()
    }

    /// Rotation at a valley `p`: with `q` the next lattice point of equal
    /// horizontal distance (equality, not mere non-excess, is required),
    /// the east step before `p` moves behind the subpath from `p` to `q`.
    /// The result covers `self` in the nu-Tamari order.
    pub fn rotate(&self, valley: usize) -> Result<NuPath, Error> {
        if !self.valleys().contains(&valley) {
            return Err(Error::NotAValley);
        }
        let h = self.horiz(valley)?;
        let pts = self.points();
        let ends = self.nu.row_ends();
        // east steps lower the distance by one and the endpoint reaches 0,
        // so a later point of equal distance always exists
        let q = (valley + 1..pts.len())
            .find(|&i| ends[pts[i].1 as usize] - pts[i].0 == h)
            .expect("a later point of equal horizontal distance");
        let w = &self.steps.0;
        let mut out = Vec::with_capacity(w.len());
        out.extend_from_slice(&w[..valley - 1]); // up to the E before p
        out.extend_from_slice(&w[valley..q]); // the subpath p..q
        out.push(Step::East);
        out.extend_from_slice(&w[q..]);
        NuPath::new(self.nu.clone(), StepWord(out))
    }
}

fn weakly_above(nu: &StepWord, (x, y): (u32, u32)) -> bool {
    let ends = nu.row_ends();
    (y as usize) < ends.len() && x <= ends[y as usize]
}

/// All nu-paths, ordered lexicographically by their east-step height
/// sequences. A path above `nu` is exactly a non-decreasing sequence of
/// east-step heights dominating nu's own, bounded by the total height.
pub fn enumerate_nu_paths(nu: &StepWord) -> Vec<NuPath> {
    let floor = nu.east_heights();
    let top = nu.north_count() as u32;
    let mut out = Vec::new();
    let mut current = floor.clone();
    loop {
        out.push(path_from_east_heights(nu, &current));
        // next lexicographic height sequence, keeping non-decreasing and
        // bounded below by the floor profile
        let mut k = current.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if current[k] < top {
                current[k] += 1;
                for i in k + 1..current.len() {
                    current[i] = floor[i].max(current[k]);
                }
                break;
            }
        }
    }
}

fn path_from_east_heights(nu: &StepWord, heights: &[u32]) -> NuPath {
    let top = nu.north_count() as u32;
    let mut steps = Vec::with_capacity(nu.len());
    let mut h = 0u32;
    for &eh in heights {
        while h < eh {
            steps.push(Step::North);
            h += 1;
        }
        steps.push(Step::East);
    }
    while h < top {
        steps.push(Step::North);
        h += 1;
    }
    NuPath::new(nu.clone(), StepWord(steps)).expect("heights dominate nu")
}

/// The bijection from s-Tamari trees to `nu(reverse s)`-paths: traverse in
/// reverse preorder (children right to left), emit `N` per internal node
/// and `E` per leaf, and drop the trailing `E`.
///
/// ```
/// use slattice_core::{nu::tree_to_path, SDecreasingTree, WeakComposition};
///
/// let s = WeakComposition::new(vec![0, 2, 2]).unwrap();
/// let bottom = tree_to_path(&SDecreasingTree::minimum(&s)).unwrap();
/// assert_eq!(bottom.steps().to_string(), "NEENEEN");
/// let top = tree_to_path(&SDecreasingTree::maximum(&s)).unwrap();
/// assert_eq!(top.steps().to_string(), "NNNEEEE");
/// ```
pub fn tree_to_path(t: &SDecreasingTree) -> Result<NuPath, Error> {
    if !is_s_tamari(t) {
        return Err(Error::NotTamari);
    }
    let mut word = Vec::new();
    fn walk(node: &Node, out: &mut Vec<Step>) {
        out.push(Step::North);
        for child in node.children.iter().rev() {
            match child {
                Some(c) => walk(c, out),
                None => out.push(Step::East),
            }
        }
    }
    walk(t.root(), &mut word);
    // the last visited node in reverse preorder is a leaf
    let dropped = word.pop();
    debug_assert_eq!(dropped, Some(Step::East));
    NuPath::new(nu_of(&t.signature().reversed()), StepWord(word))
}

/// The lattice points of the path paired with the tree nodes they encode:
/// node labels for internal nodes, `None` for leaves, in reverse preorder.
pub fn path_point_labels(t: &SDecreasingTree) -> Vec<Option<usize>> {
    let mut out = Vec::new();
    fn walk(node: &Node, out: &mut Vec<Option<usize>>) {
        out.push(Some(node.label));
        for child in node.children.iter().rev() {
            match child {
                Some(c) => walk(c, out),
                None => out.push(None),
            }
        }
    }
    walk(t.root(), &mut out);
    out
}

/// A maximal set of pairwise nu-compatible lattice points weakly above
/// `nu` in its bounding rectangle; always `|nu| + 1` points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NuTree {
    nu: StepWord,
    /// Sorted by `(y descending, x ascending)`.
    points: Vec<(u32, u32)>,
}

impl NuTree {
    pub fn nu(&self) -> &StepWord {
        &self.nu
    }

    pub fn points(&self) -> &[(u32, u32)] {
        &self.points
    }

    pub fn contains(&self, p: (u32, u32)) -> bool {
        self.points.contains(&p)
    }

    /// Ascent points: members lying strictly below another member in
    /// their column and strictly left of another member in their row.
    pub fn ascent_points(&self) -> Vec<(u32, u32)> {
        self.points
            .iter()
            .copied()
            .filter(|&(x, y)| {
                self.points.iter().any(|&(px, py)| px == x && py > y)
                    && self.points.iter().any(|&(rx, ry)| ry == y && rx > x)
            })
            .collect()
    }

    /// Exchanges the ascent point `q` for the corner point opposite it:
    /// with `p` the nearest member above and `r` the nearest member to the
    /// right, `q` is replaced by `(r.x, p.y)`.
    pub fn rotate(&self, q: (u32, u32)) -> Result<NuTree, Error> {
        if !self.contains(q) {
            return Err(Error::NotANuAscent);
        }
        let p_y = self
            .points
            .iter()
            .filter(|&&(x, y)| x == q.0 && y > q.1)
            .map(|&(_, y)| y)
            .min()
            .ok_or(Error::NotANuAscent)?;
        let r_x = self
            .points
            .iter()
            .filter(|&&(x, y)| y == q.1 && x > q.0)
            .map(|&(x, _)| x)
            .min()
            .ok_or(Error::NotANuAscent)?;
        let mut points: Vec<(u32, u32)> = self
            .points
            .iter()
            .copied()
            .filter(|&pt| pt != q)
            .collect();
        points.push((r_x, p_y));
        sort_points(&mut points);
        let out = NuTree {
            nu: self.nu.clone(),
            points,
        };
        debug_assert!(out.is_valid());
        Ok(out)
    }

    /// Pairwise compatibility plus maximality against every candidate
    /// point of the region.
    pub fn is_valid(&self) -> bool {
        let region = region_points(&self.nu);
        for (i, &p) in self.points.iter().enumerate() {
            for &q in &self.points[i + 1..] {
                if !compatible(&self.nu, p, q) {
                    return false;
                }
            }
        }
        for cand in region {
            if !self.points.contains(&cand)
                && self.points.iter().all(|&p| compatible(&self.nu, p, cand))
            {
                return false;
            }
        }
        true
    }
}

fn sort_points(points: &mut [(u32, u32)]) {
    points.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
}

/// All lattice points weakly above `nu` inside its bounding rectangle.
pub fn region_points(nu: &StepWord) -> Vec<(u32, u32)> {
    let ends = nu.row_ends();
    let mut out = Vec::new();
    for (y, &end) in ends.iter().enumerate() {
        for x in 0..=end {
            out.push((x, y as u32));
        }
    }
    out
}

/// Two points are nu-incompatible when one is strictly southwest of the
/// other and the southeast corner of their bounding rectangle stays weakly
/// above `nu`; compatibility is the symmetric complement.
pub fn compatible(nu: &StepWord, p: (u32, u32), q: (u32, u32)) -> bool {
    let (sw, ne) = if p.0 < q.0 && p.1 < q.1 {
        (p, q)
    } else if q.0 < p.0 && q.1 < p.1 {
        (q, p)
    } else {
        return true;
    };
    !weakly_above(nu, (ne.0, sw.1))
}

/// Right flushing: the unique nu-tree with the same number of lattice
/// points per height as the path. Rows are filled bottom to top, right to
/// left, skipping columns above any placed point that was not the leftmost
/// of its row.
pub fn right_flush(path: &NuPath) -> NuTree {
    let nu = path.nu().clone();
    let ends = nu.row_ends();
    let mut counts = vec![0usize; ends.len()];
    for (_, y) in path.points() {
        counts[y as usize] += 1;
    }
    let mut forbidden = vec![false; nu.east_count() + 1];
    let mut points = Vec::with_capacity(path.points().len());
    for (y, &count) in counts.iter().enumerate() {
        let mut placed = Vec::with_capacity(count);
        let mut x = ends[y] as i64;
        while placed.len() < count {
            debug_assert!(x >= 0, "row must fit");
            if !forbidden[x as usize] {
                placed.push((x as u32, y as u32));
            }
            x -= 1;
        }
        // every non-leftmost point of the row blocks its column upward
        for &(px, _) in &placed[..placed.len() - 1] {
            forbidden[px as usize] = true;
        }
        points.extend(placed);
    }
    sort_points(&mut points);
    let out = NuTree { nu, points };
    debug_assert!(out.is_valid());
    out
}

/// The composite bijection from s-Tamari trees to nu-trees: right flushing
/// of [`tree_to_path`]. The image has as many points at height `i` as the
/// tree has nodes reached after `i` internal nodes in reverse preorder.
pub fn tree_to_nutree(t: &SDecreasingTree) -> Result<NuTree, Error> {
    Ok(right_flush(&tree_to_path(t)?))
}

/// Everything [`verify_nu_isomorphism`] can report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuIsomorphismCounterexample {
    pub reason: String,
}

/// Checks, over the whole s-Tamari lattice of `sig`:
/// the path image is exactly the set of `nu(reverse s)`-paths; rotations
/// commute with the bijection edge-by-edge (covers map to nu-rotations at
/// the valley of the rotated node and back); the horizontal-distance
/// identity `horiz(point of child i) = horiz(point of parent) + i` at
/// every parent-child pair; and the nu-tree rotations mirror the Tamari
/// covers under right flushing.
pub fn verify_nu_isomorphism(
    sig: &WeakComposition,
    limit: usize,
) -> Result<Result<(), NuIsomorphismCounterexample>, Error> {
    use crate::lattice::FiniteLattice;

    let fail = |reason: String| Ok(Err(NuIsomorphismCounterexample { reason }));
    let tam = FiniteLattice::s_tamari(sig, limit)?;
    let nu = nu_of(&sig.reversed());
    let mut paths: Vec<NuPath> = Vec::with_capacity(tam.len());
    for t in tam.elements() {
        paths.push(tree_to_path(t)?);
    }
    // bijectivity onto the independently enumerated path set
    let mut image: Vec<&NuPath> = paths.iter().collect();
    image.sort();
    image.dedup();
    if image.len() != paths.len() {
        return fail(String::from("tree-to-path map is not injective"));
    }
    let mut all_paths = enumerate_nu_paths(&nu);
    all_paths.sort();
    let mut sorted_image: Vec<NuPath> = paths.clone();
    sorted_image.sort();
    if sorted_image != all_paths {
        return fail(String::from("path image differs from the nu-path set"));
    }
    // horizontal-distance identity at every parent-child pair
    for (i, t) in tam.elements().iter().enumerate() {
        let labels = path_point_labels(t);
        let path = &paths[i];
        let position_of = |label: usize| {
            labels
                .iter()
                .position(|&l| l == Some(label))
                .expect("node in traversal")
        };
        for c in 1..=t.n() {
            let node = find_node(t.root(), c).expect("label present");
            let hc = path.horiz(position_of(c))?;
            let mut cursor = position_of(c) + 1;
            for (idx, child) in node.children.iter().enumerate().rev() {
                // cursor points at the traversal slot of this child's root
                let hchild = path.horiz(cursor)?;
                if hchild != hc + idx as u32 {
                    return fail(String::from("horizontal distance identity fails"));
                }
                if let Some(child) = child {
                    if t.cardinality(c, child.label)? != idx as u32 {
                        return fail(String::from("child interval disagrees with cardinality"));
                    }
                    cursor += subtree_point_count(child);
                } else {
                    cursor += 1;
                }
            }
        }
    }
    // edge correspondence: tamari covers <-> nu rotations, both ways
    for (i, t) in tam.elements().iter().enumerate() {
        let path = &paths[i];
        let covers = tam.up_covers(i);
        let valleys = path.valleys();
        if covers.len() != valleys.len() {
            return fail(String::from("cover count differs from valley count"));
        }
        let labels = path_point_labels(t);
        for &(to, asc) in covers {
            let valley = labels
                .iter()
                .position(|&l| l == Some(asc.a))
                .expect("node in traversal");
            if !valleys.contains(&valley) {
                return fail(String::from("rotated node is not at a valley"));
            }
            let rotated = path.rotate(valley)?;
            if rotated != paths[to] {
                return fail(String::from("nu rotation disagrees with tamari rotation"));
            }
        }
    }
    // nu-tree side: flushing is injective, images are valid nu-trees, and
    // rotations correspond cover-by-cover
    let trees: Vec<NuTree> = paths.iter().map(right_flush).collect();
    let mut tset: Vec<&NuTree> = trees.iter().collect();
    tset.sort();
    tset.dedup();
    if tset.len() != trees.len() {
        return fail(String::from("right flushing is not injective here"));
    }
    for i in 0..tam.len() {
        let img = &trees[i];
        if !img.is_valid() {
            return fail(String::from("flushed image is not a nu-tree"));
        }
        let mut rotated_images: Vec<NuTree> = Vec::new();
        for q in img.ascent_points() {
            rotated_images.push(img.rotate(q)?);
        }
        rotated_images.sort();
        let mut cover_images: Vec<NuTree> = tam
            .up_covers(i)
            .iter()
            .map(|&(to, _)| trees[to].clone())
            .collect();
        cover_images.sort();
        if rotated_images != cover_images {
            return fail(String::from("nu-tree rotations disagree with covers"));
        }
    }
    Ok(Ok(()))
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

/// Lattice points a subtree occupies in the traversal: its nodes plus one
/// per leaf.
fn subtree_point_count(node: &Node) -> usize {
    1 + node
        .children
        .iter()
        .map(|c| c.as_ref().map_or(1, subtree_point_count))
        .sum::<usize>()
}
