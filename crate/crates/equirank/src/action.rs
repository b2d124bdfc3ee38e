//! Finite G-actions, orbit/stabilizer computation, and the per-class
//! classification (representative stabilizer, normalizer, block, orbits,
//! multiplicity) that feeds every formula downstream.

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, Subgroup};

/// Default cap on the number of points a shift action may have.
pub const DEFAULT_POINT_BUDGET: usize = 1 << 20;

/// Errors from action construction and point-level queries.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ActionError {
    /// The identity row of the action table moves a point.
    #[error("identity does not fix point {point}")]
    IdentityNotFixing { point: usize },
    /// First (g, h, x) with g·(h·x) != (gh)·x.
    #[error("action not compatible at g={g}, h={h}, x={point}: g·(h·x) != (gh)·x")]
    NotCompatible { g: usize, h: usize, point: usize },
    /// A point id outside `[0, m)`.
    #[error("point id {point} out of range for action on {points} points")]
    PointOutOfRange { point: usize, points: usize },
    /// Shift action would exceed the configured point budget.
    #[error("shift action needs {required} points, over the budget of {budget}")]
    BudgetExceeded { required: String, budget: usize },
    /// Alphabet for a shift action must have at least one symbol.
    #[error("shift alphabet must have at least one symbol")]
    EmptyAlphabet,
    /// Two actions over different groups were combined.
    #[error("actions are over different groups")]
    GroupMismatch,
    /// A point subset that is not a union of orbits.
    #[error("subset is not invariant: point {point} is moved outside it")]
    NotInvariant { point: usize },
    /// The action table has the wrong shape.
    #[error("action table must have one row of length {points} per group element ({order} rows), got row {row} of length {len}")]
    TableShape {
        order: usize,
        points: usize,
        row: usize,
        len: usize,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A finite group acting on `[0, m)`, given by the full table `act[g][x] = g·x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GAction {
    group: FiniteGroup,
    point_count: usize,
    act: Vec<Vec<usize>>,
}

impl GAction {
    /// Validates an action table: shape, range, identity row, compatibility.
    pub fn new(group: FiniteGroup, act: Vec<Vec<usize>>) -> Result<Self, ActionError> {
        let n = group.order();
        let m = if act.is_empty() { 0 } else { act[0].len() };
        if act.len() != n {
            return Err(ActionError::TableShape {
                order: n,
                points: m,
                row: act.len(),
                len: 0,
            });
        }
        for (g, row) in act.iter().enumerate() {
            if row.len() != m {
                return Err(ActionError::TableShape {
                    order: n,
                    points: m,
                    row: g,
                    len: row.len(),
                });
            }
            for &p in row {
                if p >= m {
                    return Err(ActionError::PointOutOfRange { point: p, points: m });
                }
            }
        }
        let e = group.identity();
        for x in 0..m {
            if act[e][x] != x {
                return Err(ActionError::IdentityNotFixing { point: x });
            }
        }
        for g in 0..n {
            for h in 0..n {
                let gh = group.mul(g, h);
                for x in 0..m {
                    if act[g][act[h][x]] != act[gh][x] {
                        return Err(ActionError::NotCompatible { g, h, point: x });
                    }
                }
            }
        }
        Ok(GAction {
            group,
            point_count: m,
            act,
        })
    }

    /// The shift action of `group` on configurations `x: G -> [0, q)`.
    ///
    /// A configuration is encoded as the integer `sum_h x(h) * q^h`, with the
    /// element id `h` as digit position, and `g` acts by `(g·x)(h) = x(g^{-1}h)`.
    pub fn shift(group: FiniteGroup, alphabet_size: usize) -> Result<Self, ActionError> {
        Self::shift_with_budget(group, alphabet_size, DEFAULT_POINT_BUDGET)
    }

    /// Shift action with an explicit point budget.
    pub fn shift_with_budget(
        group: FiniteGroup,
        alphabet_size: usize,
        budget: usize,
    ) -> Result<Self, ActionError> {
        let q = alphabet_size;
        if q == 0 {
            return Err(ActionError::EmptyAlphabet);
        }
        let n = group.order();
        let mut m: usize = 1;
        for _ in 0..n {
            m = m.checked_mul(q).filter(|&v| v <= budget).ok_or_else(|| {
                ActionError::BudgetExceeded {
                    required: format!("{q}^{n}"),
                    budget,
                }
            })?;
        }
        let pow: Vec<usize> = (0..n)
            .scan(1usize, |acc, _| {
                let v = *acc;
                *acc *= q;
                Some(v)
            })
            .collect();
        let mut act = vec![vec![0usize; m]; n];
        for g in 0..n {
            let gi = group.inv(g);
            // position h of g·x reads position g^{-1}h of x
            let source: Vec<usize> = (0..n).map(|h| group.mul(gi, h)).collect();
            for (p, slot) in act[g].iter_mut().enumerate() {
                let mut out = 0usize;
                for h in 0..n {
                    let digit = p / pow[source[h]] % q;
                    out += digit * pow[h];
                }
                *slot = out;
            }
        }
        Self::new(group, act)
    }

    /// Action on the left cosets of `h`, with `g·(aH) = (ga)H`.
    ///
    /// Points are the cosets ordered by their least element id.
    pub fn coset(group: FiniteGroup, h: &Subgroup) -> Result<Self, ActionError> {
        if h.group_order() != group.order() {
            return Err(GroupError::ParentMismatch {
                left: h.group_order(),
                right: group.order(),
            }
            .into());
        }
        let n = group.order();
        let mut point_of = vec![usize::MAX; n];
        let mut count = 0usize;
        for a in 0..n {
            if point_of[a] != usize::MAX {
                continue;
            }
            for &x in h.elements() {
                point_of[group.mul(a, x)] = count;
            }
            count += 1;
        }
        let m = count;
        let mut act = vec![vec![0usize; m]; n];
        // one representative per coset: the least element
        let mut reps = vec![usize::MAX; m];
        for a in (0..n).rev() {
            reps[point_of[a]] = a;
        }
        for g in 0..n {
            for (p, &a) in reps.iter().enumerate() {
                act[g][p] = point_of[group.mul(g, a)];
            }
        }
        Self::new(group, act)
    }

    /// The regular action (cosets of the trivial subgroup).
    pub fn regular(group: FiniteGroup) -> Result<Self, ActionError> {
        let triv = group.trivial_subgroup();
        Self::coset(group, &triv)
    }

    /// Disjoint union of two actions of the same group; the second operand's
    /// points are shifted past the first's.
    pub fn disjoint_union(&self, other: &GAction) -> Result<Self, ActionError> {
        if self.group != other.group {
            return Err(ActionError::GroupMismatch);
        }
        let offset = self.point_count;
        let act = self
            .act
            .iter()
            .zip(&other.act)
            .map(|(ra, rb)| {
                ra.iter()
                    .copied()
                    .chain(rb.iter().map(|&p| p + offset))
                    .collect()
            })
            .collect();
        Self::new(self.group.clone(), act)
    }

    /// Restriction to a G-invariant subset of points (the sub-action).
    /// Points are renumbered by their rank in `points`, which must be sorted.
    pub fn restrict(&self, points: &[usize]) -> Result<GAction, ActionError> {
        let mut member = vec![false; self.point_count];
        for &p in points {
            if p >= self.point_count {
                return Err(ActionError::PointOutOfRange {
                    point: p,
                    points: self.point_count,
                });
            }
            member[p] = true;
        }
        for &p in points {
            for g in 0..self.group.order() {
                let q = self.act[g][p];
                if !member[q] {
                    return Err(ActionError::NotInvariant { point: q });
                }
            }
        }
        Ok(self.restrict_unchecked(points))
    }

    /// [`Self::restrict`] without the invariance check, for callers holding a
    /// block of a classification.
    pub(crate) fn restrict_unchecked(&self, points: &[usize]) -> GAction {
        let mut local = vec![usize::MAX; self.point_count];
        for (i, &p) in points.iter().enumerate() {
            local[p] = i;
        }
        let act = self
            .act
            .iter()
            .map(|row| points.iter().map(|&p| local[row[p]]).collect())
            .collect();
        GAction {
            group: self.group.clone(),
            point_count: points.len(),
            act,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn point_count(&self) -> usize {
        self.point_count
    }

    /// `g·x`.
    #[inline]
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.act[g][x]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.act
    }

    fn check_point(&self, x: usize) -> Result<(), ActionError> {
        if x >= self.point_count {
            return Err(ActionError::PointOutOfRange {
                point: x,
                points: self.point_count,
            });
        }
        Ok(())
    }

    /// The orbit `Gx`, sorted.
    pub fn orbit(&self, x: usize) -> Result<Vec<usize>, ActionError> {
        self.check_point(x)?;
        let mut pts: Vec<usize> = self.act.iter().map(|row| row[x]).collect();
        pts.sort_unstable();
        pts.dedup();
        Ok(pts)
    }

    /// The stabilizer `G_x`.
    pub fn stabilizer(&self, x: usize) -> Result<Subgroup, ActionError> {
        self.check_point(x)?;
        let carrier: Vec<usize> = (0..self.group.order())
            .filter(|&g| self.act[g][x] == x)
            .collect();
        Ok(Subgroup::from_carrier_of_stabilizer(
            carrier,
            self.group.order(),
        ))
    }

    /// Whether the action has a single orbit.
    pub fn is_transitive(&self) -> bool {
        self.point_count <= 1
            || self.orbit(0).map(|o| o.len() == self.point_count).unwrap_or(false)
    }

    /// Full orbit/stabilizer classification.
    pub fn classify(&self) -> Classification {
        Classification::compute(self)
    }
}

/// One conjugacy class of point stabilizers together with its block data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerClass {
    /// Canonical representative `H_i` of the class (lexicographically least
    /// carrier among the conjugates).
    pub rep: Subgroup,
    /// `N_i = N_G(H_i)`.
    pub normalizer: Subgroup,
    /// All points whose stabilizer is conjugate to `H_i`, sorted.
    pub block: Vec<usize>,
    /// The G-orbits inside the block, each sorted, ordered by least point.
    pub orbits: Vec<Vec<usize>>,
    /// Least point of each orbit.
    pub orbit_reps: Vec<usize>,
    /// Number of orbits in the block.
    pub alpha: usize,
}

/// Classification of an action by conjugacy classes of point stabilizers.
///
/// Classes are ordered by descending stabilizer order, ties broken by the
/// lexicographic carrier of the canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    classes: Vec<StabilizerClass>,
    stabs: Vec<Subgroup>,
    point_stab: Vec<usize>,
}

impl Classification {
    fn compute(action: &GAction) -> Classification {
        let m = action.point_count();
        let group = action.group();

        // orbit partition; scanning in point order makes the least point the rep
        let mut orbit_of = vec![usize::MAX; m];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for x in 0..m {
            if orbit_of[x] != usize::MAX {
                continue;
            }
            let pts = action.orbit(x).expect("point in range");
            for &p in &pts {
                orbit_of[p] = orbits.len();
            }
            orbits.push(pts);
        }

        // distinct stabilizers over all points
        let mut stabs: Vec<Subgroup> = Vec::new();
        let mut point_stab = vec![usize::MAX; m];
        for x in 0..m {
            let s = action.stabilizer(x).expect("point in range");
            let idx = match stabs.iter().position(|t| *t == s) {
                Some(i) => i,
                None => {
                    stabs.push(s);
                    stabs.len() - 1
                }
            };
            point_stab[x] = idx;
        }

        // group orbits by the conjugacy class of their representative's stabilizer
        struct Partial {
            rep: Subgroup,
            orbits: Vec<Vec<usize>>,
        }
        let mut partials: Vec<Partial> = Vec::new();
        for orbit in &orbits {
            let stab = &stabs[point_stab[orbit[0]]];
            let class = group
                .n_conjugacy_class(stab, &group.full_subgroup())
                .expect("valid subgroups");
            let canon = class.canonical().clone();
            match partials.iter_mut().find(|p| p.rep == canon) {
                Some(p) => p.orbits.push(orbit.clone()),
                None => partials.push(Partial {
                    rep: canon,
                    orbits: vec![orbit.clone()],
                }),
            }
        }
        partials.sort_by(|a, b| {
            b.rep
                .len()
                .cmp(&a.rep.len())
                .then_with(|| a.rep.cmp(&b.rep))
        });

        let classes = partials
            .into_iter()
            .map(|p| {
                let normalizer = group.normalizer(&p.rep).expect("valid subgroup");
                let mut block: Vec<usize> = p.orbits.iter().flatten().copied().collect();
                block.sort_unstable();
                let orbit_reps: Vec<usize> = p.orbits.iter().map(|o| o[0]).collect();
                let alpha = p.orbits.len();
                StabilizerClass {
                    rep: p.rep,
                    normalizer,
                    block,
                    orbits: p.orbits,
                    orbit_reps,
                    alpha,
                }
            })
            .collect();

        // remap stabilizer indices so `stabs` is sorted
        let mut order: Vec<usize> = (0..stabs.len()).collect();
        order.sort_by(|&a, &b| stabs[a].cmp(&stabs[b]));
        let mut rank = vec![0usize; stabs.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let stabs: Vec<Subgroup> = order.iter().map(|&i| stabs[i].clone()).collect();
        for idx in point_stab.iter_mut() {
            *idx = rank[*idx];
        }

        Classification {
            classes,
            stabs,
            point_stab,
        }
    }

    pub fn classes(&self) -> &[StabilizerClass] {
        &self.classes
    }

    /// Number of stabilizer conjugacy classes.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// All distinct point stabilizers, sorted by carrier.
    pub fn stabs(&self) -> &[Subgroup] {
        &self.stabs
    }

    /// The stabilizer of `x` (shared reference into [`Self::stabs`]).
    pub fn stabilizer_of(&self, x: usize) -> &Subgroup {
        &self.stabs[self.point_stab[x]]
    }

    /// The multiplicity vector in class order.
    pub fn alpha_vector(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.alpha).collect()
    }

    /// Total number of G-orbits.
    pub fn orbit_count(&self) -> usize {
        self.classes.iter().map(|c| c.alpha).sum()
    }

    /// Least orbit representatives over all classes, ascending.
    pub fn all_orbit_reps(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = self
            .classes
            .iter()
            .flat_map(|c| c.orbit_reps.iter().copied())
            .collect();
        reps.sort_unstable();
        reps
    }
}

impl Subgroup {
    /// Stabilizer carriers are subgroups by construction; skip revalidation.
    pub(crate) fn from_carrier_of_stabilizer(carrier: Vec<usize>, group_order: usize) -> Subgroup {
        Subgroup::from_sorted_unchecked(carrier, group_order)
    }
}
