//! Equivariant self-maps of a G-set: validation, composition, the three
//! canonical constructions (collapsing, translation, orbit swap), kernels,
//! and classification of elementary collapsings by type.

use thiserror::Error;

use crate::action::{ActionError, Classification, GAction};
use crate::group::{GroupError, SubgroupClass};

/// Errors from map construction and classification.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    /// An image vector whose length does not match the action's point count.
    #[error("image vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    /// Two maps over different point counts were composed.
    #[error("map bindings differ: {left} vs {right} points")]
    BindingMismatch { left: usize, right: usize },
    /// Collapsing/swap endpoints must lie in distinct orbits.
    #[error("points {x} and {y} lie in the same orbit")]
    SameOrbit { x: usize, y: usize },
    /// A collapsing `[x -> y]` needs the stabilizer of x inside that of y.
    #[error("stabilizer of {x} is not contained in stabilizer of {y}")]
    StabilizerNotContained { x: usize, y: usize },
    /// A translation needs k in the normalizer of the stabilizer.
    #[error("element {k} is not in the normalizer of the stabilizer of {x}")]
    NotInNormalizer { x: usize, k: usize },
    /// An orbit swap needs exactly equal stabilizers.
    #[error("stabilizers of {x} and {y} differ")]
    StabilizerMismatch { x: usize, y: usize },
    /// The given point set is not a union of orbits.
    #[error("subset is not G-invariant: point {point} is moved outside it")]
    NotInvariant { point: usize },
    /// The partial map does not commute with the action on the subset.
    #[error("partial map is not equivariant on the subset at point {point}, element {g}")]
    NotEquivariantOnSubset { point: usize, g: usize },
    /// The partial map leaves the invariant subset.
    #[error("partial map sends point {point} outside the subset")]
    EscapesSubset { point: usize },
    /// A map that was required to be equivariant is not.
    #[error("map is not equivariant")]
    NotEquivariant,
    /// An image entry outside `[0, m)`.
    #[error("image entry {point} out of range for {points} points")]
    PointOutOfRange { point: usize, points: usize },
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A total self-map of the point set, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GMap {
    image: Vec<usize>,
}

impl GMap {
    /// The identity map on `m` points.
    pub fn identity(m: usize) -> GMap {
        GMap {
            image: (0..m).collect(),
        }
    }

    /// Wraps an image vector after a range check. Equivariance is *not*
    /// checked here; use [`is_equivariant`] when the source is untrusted.
    pub fn from_image(image: Vec<usize>) -> Result<GMap, MapError> {
        let m = image.len();
        for &p in &image {
            if p >= m {
                return Err(MapError::PointOutOfRange { point: p, points: m });
            }
        }
        Ok(GMap { image })
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> GMap {
        GMap { image }
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn into_image(self) -> Vec<usize> {
        self.image
    }

    pub fn point_count(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        for &v in &self.image {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GMap) -> Result<GMap, MapError> {
        if self.image.len() != other.image.len() {
            return Err(MapError::BindingMismatch {
                left: self.image.len(),
                right: other.image.len(),
            });
        }
        Ok(GMap {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        })
    }

    /// The kernel partition `{(a, b) : f(a) = f(b)}`.
    pub fn kernel(&self) -> KernelRelation {
        let m = self.image.len();
        let mut first = vec![usize::MAX; m];
        let mut block_of = vec![usize::MAX; m];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..m {
            let v = self.image[x];
            if first[v] == usize::MAX {
                first[v] = classes.len();
                classes.push(Vec::new());
            }
            block_of[x] = first[v];
            classes[first[v]].push(x);
        }
        let pair_count = classes.iter().map(|b| b.len() * b.len()).sum();
        KernelRelation {
            classes,
            pair_count,
        }
    }
}

/// The kernel of a map as a partition of the point set.
///
/// Blocks are ordered by least element; `pair_count` is the number of ordered
/// pairs `(a, b)` with equal image, i.e. the sum of squared block sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelRelation {
    classes: Vec<Vec<usize>>,
    pair_count: usize,
}

impl KernelRelation {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn pair_count(&self) -> usize {
        self.pair_count
    }

    pub fn is_diagonal(&self) -> bool {
        self.classes.iter().all(|b| b.len() == 1)
    }

    /// Whether every block of `self` lies inside one block of `coarser`.
    pub fn refines(&self, coarser: &KernelRelation) -> bool {
        let mut block_of = vec![usize::MAX; coarser.classes.iter().map(Vec::len).sum()];
        for (i, b) in coarser.classes.iter().enumerate() {
            for &p in b {
                block_of[p] = i;
            }
        }
        self.classes
            .iter()
            .all(|b| b.iter().all(|&p| block_of[p] == block_of[b[0]]))
    }
}

/// The type of an elementary collapsing: which stabilizer class it collapses
/// from, and the N_i-conjugacy class of the target stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapsingType {
    pub class_index: usize,
    pub target_class: SubgroupClass,
}

impl PartialOrd for CollapsingType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CollapsingType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.class_index
            .cmp(&other.class_index)
            .then_with(|| self.target_class.cmp(&other.target_class))
    }
}

impl std::fmt::Display for CollapsingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.class_index, self.target_class)
    }
}

/// Whether `image` commutes with the action: `f(g·x) = g·f(x)` for all g, x.
pub fn is_equivariant(action: &GAction, image: &[usize]) -> Result<bool, MapError> {
    let m = action.point_count();
    if image.len() != m {
        return Err(MapError::LengthMismatch {
            expected: m,
            got: image.len(),
        });
    }
    for &p in image {
        if p >= m {
            return Err(MapError::PointOutOfRange { point: p, points: m });
        }
    }
    for g in 0..action.group().order() {
        for x in 0..m {
            if image[action.apply(g, x)] != action.apply(g, image[x]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The collapsing `[x -> y]`: sends `g·x` to `g·y`, fixes everything else.
///
/// Defined exactly when the orbits differ and the stabilizer of `x` is
/// contained in the stabilizer of `y`; the result is equivariant and
/// non-bijective.
pub fn collapsing(action: &GAction, x: usize, y: usize) -> Result<GMap, MapError> {
    let orbit_x = action.orbit(x)?;
    let orbit_y = action.orbit(y)?;
    if orbit_x == orbit_y {
        return Err(MapError::SameOrbit { x, y });
    }
    let sx = action.stabilizer(x)?;
    let sy = action.stabilizer(y)?;
    if !sx.is_contained_in(&sy)? {
        return Err(MapError::StabilizerNotContained { x, y });
    }
    let mut image: Vec<usize> = (0..action.point_count()).collect();
    for g in 0..action.group().order() {
        image[action.apply(g, x)] = action.apply(g, y);
    }
    Ok(GMap { image })
}

/// The translation `τ_{x,k}`: sends `g·x` to `gk·x` on the orbit of `x`,
/// identity elsewhere. Needs `k` in the normalizer of the stabilizer of `x`;
/// always bijective.
pub fn translation(action: &GAction, x: usize, k: usize) -> Result<GMap, MapError> {
    let sx = action.stabilizer(x)?;
    let nx = action.group().normalizer(&sx)?;
    if !nx.contains(k) {
        return Err(MapError::NotInNormalizer { x, k });
    }
    let mut image: Vec<usize> = (0..action.point_count()).collect();
    for g in 0..action.group().order() {
        image[action.apply(g, x)] = action.apply(action.group().mul(g, k), x);
    }
    Ok(GMap { image })
}

/// The orbit swap `[x, y]`: exchanges the orbits of `x` and `y` compatibly
/// (`g·x <-> g·y`), identity elsewhere. Needs equal stabilizers and distinct
/// orbits; the result is a bijective involution.
pub fn orbit_swap(action: &GAction, x: usize, y: usize) -> Result<GMap, MapError> {
    let orbit_x = action.orbit(x)?;
    let orbit_y = action.orbit(y)?;
    if orbit_x == orbit_y {
        return Err(MapError::SameOrbit { x, y });
    }
    if action.stabilizer(x)? != action.stabilizer(y)? {
        return Err(MapError::StabilizerMismatch { x, y });
    }
    let mut image: Vec<usize> = (0..action.point_count()).collect();
    for g in 0..action.group().order() {
        image[action.apply(g, x)] = action.apply(g, y);
        image[action.apply(g, y)] = action.apply(g, x);
    }
    Ok(GMap { image })
}

/// Extends a partial equivariant map on a G-invariant subset by the identity.
///
/// `sub_points` must be sorted and G-invariant; `images[i]` is the image of
/// `sub_points[i]` and must stay inside the subset.
pub fn extend_by_identity(
    action: &GAction,
    sub_points: &[usize],
    images: &[usize],
) -> Result<GMap, MapError> {
    if sub_points.len() != images.len() {
        return Err(MapError::LengthMismatch {
            expected: sub_points.len(),
            got: images.len(),
        });
    }
    let m = action.point_count();
    let mut local = vec![usize::MAX; m];
    for (i, &p) in sub_points.iter().enumerate() {
        if p >= m {
            return Err(MapError::PointOutOfRange { point: p, points: m });
        }
        local[p] = i;
    }
    for &p in sub_points {
        for g in 0..action.group().order() {
            if local[action.apply(g, p)] == usize::MAX {
                return Err(MapError::NotInvariant {
                    point: action.apply(g, p),
                });
            }
        }
    }
    for (i, &fp) in images.iter().enumerate() {
        if fp >= m || local[fp] == usize::MAX {
            return Err(MapError::EscapesSubset {
                point: sub_points[i],
            });
        }
    }
    for (i, &p) in sub_points.iter().enumerate() {
        for g in 0..action.group().order() {
            let lhs = images[local[action.apply(g, p)]];
            let rhs = action.apply(g, images[i]);
            if lhs != rhs {
                return Err(MapError::NotEquivariantOnSubset { point: p, g });
            }
        }
    }
    let mut image: Vec<usize> = (0..m).collect();
    for (i, &p) in sub_points.iter().enumerate() {
        image[p] = images[i];
    }
    Ok(GMap { image })
}

/// Classifies `f` as an elementary collapsing, if it is one.
///
/// Returns the type `(i, [K]_{N_i})` when the kernel of `f` is exactly the
/// equivalence closure of `{(g·x, g·y) : g in G}` for an orbit pair with
/// distinct orbits and stabilizer containment; `None` otherwise. The source
/// point is conjugated so its stabilizer equals the class representative
/// before the target class is read off, using the least conjugating witness.
pub fn classify_elementary_collapsing(
    action: &GAction,
    classification: &Classification,
    f: &GMap,
) -> Result<Option<CollapsingType>, MapError> {
    if !is_equivariant(action, f.image())? {
        return Err(MapError::NotEquivariant);
    }
    let kernel = f.kernel();
    let merged: Vec<&Vec<usize>> = kernel.classes().iter().filter(|b| b.len() > 1).collect();
    if merged.is_empty() {
        return Ok(None);
    }
    // the merged points must cover exactly two orbits
    let mut orbit_reps: Vec<usize> = Vec::new();
    for block in &merged {
        for &p in block.iter() {
            let rep = action.orbit(p)?[0];
            if !orbit_reps.contains(&rep) {
                orbit_reps.push(rep);
            }
        }
    }
    if orbit_reps.len() != 2 {
        return Ok(None);
    }
    orbit_reps.sort_unstable();

    for (sa, sb) in [(orbit_reps[0], orbit_reps[1]), (orbit_reps[1], orbit_reps[0])] {
        let x = sa;
        let orbit_t = action.orbit(sb)?;
        let block = merged
            .iter()
            .find(|b| b.contains(&x))
            .expect("x lies in a merged block");
        let targets: Vec<usize> = block
            .iter()
            .copied()
            .filter(|p| orbit_t.binary_search(p).is_ok())
            .collect();
        if targets.len() != 1 {
            continue;
        }
        let y = targets[0];
        let sx = action.stabilizer(x)?;
        let sy = action.stabilizer(y)?;
        if !sx.is_contained_in(&sy)? {
            continue;
        }
        let model = collapsing(action, x, y)?;
        if model.kernel() != kernel {
            continue;
        }
        return Ok(Some(type_of_pair(action, classification, f, x)?));
    }
    Ok(None)
}

/// Reads off the type `(i, [G_{f(x)}]_{N_i})` after conjugating `x` so that
/// its stabilizer is exactly `H_i`.
fn type_of_pair(
    action: &GAction,
    classification: &Classification,
    f: &GMap,
    x: usize,
) -> Result<CollapsingType, MapError> {
    let group = action.group();
    let sx = action.stabilizer(x)?;
    let class_index = classification
        .classes()
        .iter()
        .position(|c| {
            c.rep.len() == sx.len()
                && group
                    .n_conjugacy_class(&sx, &group.full_subgroup())
                    .map(|cl| cl.canonical() == &c.rep)
                    .unwrap_or(false)
        })
        .expect("every stabilizer belongs to a class");
    let class = &classification.classes()[class_index];
    let witness = (0..group.order())
        .find(|&g| group.conjugate_subgroup(&sx, g).expect("in range") == class.rep)
        .expect("conjugating witness exists");
    let target_stab = action.stabilizer(f.apply(x))?;
    let conjugated = group.conjugate_subgroup(&target_stab, witness)?;
    let target_class = group.n_conjugacy_class(&conjugated, &class.normalizer)?;
    Ok(CollapsingType {
        class_index,
        target_class,
    })
}
