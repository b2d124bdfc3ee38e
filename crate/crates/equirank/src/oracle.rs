//! Independent brute-force ground truth: enumerate the full endomorphism
//! monoid and automorphism group, close generating sets under composition,
//! exhaustively search for minimal generating sets on tiny instances, and run
//! the structural identities as executable checks.

use std::collections::{HashSet, VecDeque};
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::action::{Classification, GAction};
use crate::equivariant::{
    classify_elementary_collapsing, is_equivariant, translation, orbit_swap, CollapsingType, GMap,
};
use crate::group::{FiniteGroup, Subgroup};
use crate::rank::end_order;

/// Default cap on the size of enumerated monoids.
pub const DEFAULT_ENUM_BUDGET: usize = 1 << 20;
/// Default cap on the number of subsets tried by the minimality search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 10_000_000;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// Enumeration would produce more maps than the budget allows.
    #[error("enumeration needs {required} maps, over the budget of {budget}")]
    BudgetExceeded { required: String, budget: usize },
    /// The subset search would try too many combinations.
    #[error("minimality search needs {combinations} subset tests, over the budget of {budget}")]
    SearchBudgetExceeded { combinations: String, budget: u64 },
    /// A lower-bound check was asked about a set that does not generate.
    #[error("the given set does not generate the endomorphism monoid modulo automorphisms")]
    NotGenerating,
}

/// A deduplicated set of image vectors, sorted for deterministic iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSet {
    members: Vec<Vec<usize>>,
    closed_under_composition: bool,
}

impl MapSet {
    fn from_sorted(members: Vec<Vec<usize>>, closed: bool) -> MapSet {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        MapSet {
            members,
            closed_under_composition: closed,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn contains(&self, image: &[usize]) -> bool {
        self.members
            .binary_search_by(|m| m.as_slice().cmp(image))
            .is_ok()
    }

    pub fn is_closed_under_composition(&self) -> bool {
        self.closed_under_composition
    }

    pub fn iter_maps(&self) -> impl Iterator<Item = GMap> + '_ {
        self.members
            .iter()
            .map(|v| GMap::from_image_unchecked(v.clone()))
    }
}

fn check_budget(required: &BigUint, budget: usize) -> Result<(), OracleError> {
    if *required > BigUint::from(budget) {
        return Err(OracleError::BudgetExceeded {
            required: required.to_string(),
            budget,
        });
    }
    Ok(())
}

/// All equivariant self-maps, built by choosing for each orbit representative
/// any target point with a containing stabilizer and extending along the
/// action.
pub fn enumerate_end(action: &GAction, budget: usize) -> Result<MapSet, OracleError> {
    let classification = action.classify();
    enumerate_end_with(action, &classification, budget)
}

/// [`enumerate_end`] reusing a precomputed classification.
pub fn enumerate_end_with(
    action: &GAction,
    classification: &Classification,
    budget: usize,
) -> Result<MapSet, OracleError> {
    let total = end_order(action, classification);
    check_budget(&total, budget)?;

    let m = action.point_count();
    let reps = classification.all_orbit_reps();
    // transporter[p] = some g with g·rep(p) = p
    let mut transporter = vec![0usize; m];
    let mut orbit_points: Vec<Vec<usize>> = Vec::with_capacity(reps.len());
    for &rep in &reps {
        let mut pts = Vec::new();
        let mut seen = vec![false; m];
        for g in 0..action.group().order() {
            let p = action.apply(g, rep);
            if !seen[p] {
                seen[p] = true;
                transporter[p] = g;
                pts.push(p);
            }
        }
        orbit_points.push(pts);
    }
    let candidates: Vec<Vec<usize>> = reps
        .iter()
        .map(|&rep| {
            let sx = classification.stabilizer_of(rep);
            (0..m)
                .filter(|&y| {
                    sx.is_contained_in(classification.stabilizer_of(y))
                        .expect("same parent")
                })
                .collect()
        })
        .collect();

    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut choice = vec![0usize; reps.len()];
    loop {
        let mut image = vec![0usize; m];
        for (o, pts) in orbit_points.iter().enumerate() {
            let y = candidates[o][choice[o]];
            for &p in pts {
                image[p] = action.apply(transporter[p], y);
            }
        }
        members.push(image);
        // odometer, least-significant position last
        let mut pos = reps.len();
        loop {
            if pos == 0 {
                members.sort_unstable();
                members.dedup();
                return Ok(MapSet::from_sorted(members, true));
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < candidates[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// The bijective equivariant self-maps.
pub fn enumerate_aut(action: &GAction, budget: usize) -> Result<MapSet, OracleError> {
    let end = enumerate_end(action, budget)?;
    Ok(aut_of(&end))
}

fn aut_of(end: &MapSet) -> MapSet {
    let members: Vec<Vec<usize>> = end
        .members()
        .iter()
        .filter(|image| {
            let mut seen = vec![false; image.len()];
            image.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        })
        .cloned()
        .collect();
    MapSet::from_sorted(members, true)
}

/// Least composition-closed set containing the seeds and the identity, by
/// breadth-first frontier expansion (composing with every seed on both sides).
pub fn monoid_closure(
    action: &GAction,
    seeds: &[GMap],
    budget: usize,
) -> Result<MapSet, OracleError> {
    let classification = action.classify();
    let total = end_order(action, &classification);
    check_budget(&total, budget)?;
    for s in seeds {
        assert!(
            is_equivariant(action, s.image()).unwrap_or(false),
            "monoid_closure seeds must be equivariant"
        );
    }
    let m = action.point_count();
    let mut set: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    let identity: Vec<usize> = (0..m).collect();
    set.insert(identity.clone());
    queue.push_back(identity);
    for s in seeds {
        if set.insert(s.image().to_vec()) {
            queue.push_back(s.image().to_vec());
        }
    }
    while let Some(f) = queue.pop_front() {
        for s in seeds {
            let left: Vec<usize> = f.iter().map(|&v| s.image()[v]).collect();
            let right: Vec<usize> = s.image().iter().map(|&v| f[v]).collect();
            for new in [left, right] {
                if !set.contains(&new) {
                    set.insert(new.clone());
                    queue.push_back(new);
                }
            }
        }
    }
    let mut members: Vec<Vec<usize>> = set.into_iter().collect();
    members.sort_unstable();
    Ok(MapSet::from_sorted(members, true))
}

/// A small generating set of the automorphism group: per class, translations
/// of one aligned orbit representative by the normalizer, plus swaps of
/// consecutive aligned representatives.
pub fn aut_generators(action: &GAction, classification: &Classification) -> Vec<GMap> {
    let mut gens = Vec::new();
    for class in classification.classes() {
        // one point with stabilizer exactly H_i in each orbit of the block
        let aligned: Vec<usize> = class
            .orbits
            .iter()
            .map(|orbit| {
                orbit
                    .iter()
                    .copied()
                    .find(|&p| classification.stabilizer_of(p) == &class.rep)
                    .expect("each orbit has a point with the exact representative stabilizer")
            })
            .collect();
        for &k in class.normalizer.elements() {
            if k == action.group().identity() {
                continue;
            }
            let t = translation(action, aligned[0], k).expect("k normalizes the stabilizer");
            if !t.is_identity() {
                gens.push(t);
            }
        }
        for pair in aligned.windows(2) {
            gens.push(orbit_swap(action, pair[0], pair[1]).expect("equal stabilizers"));
        }
    }
    gens
}

/// Whether `maps` together with the automorphism group generate the whole
/// endomorphism monoid, decided by closing and counting.
pub fn generates_modulo_aut(
    action: &GAction,
    maps: &[GMap],
    budget: usize,
) -> Result<bool, OracleError> {
    let classification = action.classify();
    let total = end_order(action, &classification);
    check_budget(&total, budget)?;
    let mut seeds = aut_generators(action, &classification);
    seeds.extend(maps.iter().cloned());
    let closure = monoid_closure(action, &seeds, budget)?;
    Ok(BigUint::from(closure.len()) == total)
}

/// Smallest k <= cap such that some k-subset of the non-invertible
/// equivariant maps generates modulo automorphisms; `cap + 1` if none does.
pub fn min_generating_size(
    action: &GAction,
    cap: usize,
    enum_budget: usize,
    search_budget: u64,
) -> Result<usize, OracleError> {
    let end = enumerate_end(action, enum_budget)?;
    let combinations = binomial(end.len(), cap);
    if combinations > BigUint::from(search_budget) {
        return Err(OracleError::SearchBudgetExceeded {
            combinations: combinations.to_string(),
            budget: search_budget,
        });
    }
    let classification = action.classify();
    let total = end_order(action, &classification);
    let aut_gens = aut_generators(action, &classification);
    let pool: Vec<GMap> = end
        .iter_maps()
        .filter(|f| !f.is_bijective())
        .collect();

    let closes = |subset: &[usize]| -> bool {
        let mut seeds = aut_gens.clone();
        seeds.extend(subset.iter().map(|&i| pool[i].clone()));
        let closure = monoid_closure(action, &seeds, enum_budget).expect("within budget");
        BigUint::from(closure.len()) == total
    };

    for k in 0..=cap.min(pool.len()) {
        let mut indices: Vec<usize> = (0..k).collect();
        loop {
            if closes(&indices) {
                return Ok(k);
            }
            if !next_combination(&mut indices, pool.len()) {
                break;
            }
        }
    }
    Ok(cap + 1)
}

/// Advances `indices` to the next k-combination of `[0, n)` in lexicographic
/// order; returns false when exhausted.
fn next_combination(indices: &mut [usize], n: usize) -> bool {
    let k = indices.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < n - (k - i) {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All possible elementary-collapsing types `(i, [K]_{N_i})`: stabilizers K
/// containing H_i, minus the self-type when the block has a single orbit.
pub fn collapsing_types(
    action: &GAction,
    classification: &Classification,
) -> Vec<CollapsingType> {
    let group = action.group();
    let mut out: Vec<CollapsingType> = Vec::new();
    for (i, class) in classification.classes().iter().enumerate() {
        for stab in classification.stabs() {
            if !class.rep.is_contained_in(stab).expect("same parent") {
                continue;
            }
            if class.alpha == 1 && stab == &class.rep {
                continue;
            }
            let target_class = group
                .n_conjugacy_class(stab, &class.normalizer)
                .expect("valid subgroups");
            let ty = CollapsingType {
                class_index: i,
                target_class,
            };
            if !out.contains(&ty) {
                out.push(ty);
            }
        }
    }
    out.sort();
    out
}

/// Coverage of the possible collapsing types by a generating set.
#[derive(Debug, Clone)]
pub struct LowerBoundReport {
    /// One entry per possible type: the type and the index into the checked
    /// set of some member realizing it.
    pub coverage: Vec<(CollapsingType, Option<usize>)>,
    /// True when every type is realized by some member.
    pub consistent: bool,
    /// The offending generating set, kept only when inconsistent.
    pub offending: Option<Vec<GMap>>,
}

/// Checks that a generating set contains an elementary collapsing of every
/// possible type. A failed verdict signals an implementation bug, so the
/// offending set is included in the report.
pub fn verify_lower_bound(
    action: &GAction,
    maps: &[GMap],
    budget: usize,
) -> Result<LowerBoundReport, OracleError> {
    if !generates_modulo_aut(action, maps, budget)? {
        return Err(OracleError::NotGenerating);
    }
    let classification = action.classify();
    let types = collapsing_types(action, &classification);
    let member_types: Vec<Option<CollapsingType>> = maps
        .iter()
        .map(|f| {
            classify_elementary_collapsing(action, &classification, f)
                .expect("members are equivariant")
        })
        .collect();
    let coverage: Vec<(CollapsingType, Option<usize>)> = types
        .into_iter()
        .map(|ty| {
            let witness = member_types
                .iter()
                .position(|mt| mt.as_ref() == Some(&ty));
            (ty, witness)
        })
        .collect();
    let consistent = coverage.iter().all(|(_, w)| w.is_some());
    let offending = if consistent {
        None
    } else {
        Some(maps.to_vec())
    };
    Ok(LowerBoundReport {
        coverage,
        consistent,
        offending,
    })
}

/// One named check with its outcome.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub count: u64,
    pub detail: String,
    pub elapsed_ms: u128,
}

/// Result of the executable identity suite.
#[derive(Debug, Clone)]
pub struct InvariantSuiteReport {
    pub checks: Vec<CheckResult>,
}

impl InvariantSuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs the executable identities against enumeration:
///
/// (a) a bijective equivariant map x -> y exists iff the stabilizers are equal;
/// (b) across distinct orbits, an equivariant map x -> y exists iff the
///     stabilizer of x is contained in that of y;
/// (c) transitive actions have no non-invertible equivariant maps;
/// (d) per block: |Aut of the sub-action| * |pointwise stabilizer in Aut| = |Aut|;
/// (e) per block: the sub-action endomorphism count matches the wreath order
///     with the full transformation monoid.
pub fn check_invariant_suite(
    action: &GAction,
    budget: usize,
) -> Result<InvariantSuiteReport, OracleError> {
    let classification = action.classify();
    let end = enumerate_end_with(action, &classification, budget)?;
    let aut = aut_of(&end);
    let m = action.point_count();
    let mut checks = Vec::new();

    let start = Instant::now();
    let mut reach_aut = vec![vec![false; m]; m];
    for f in aut.members() {
        for (x, &y) in f.iter().enumerate() {
            reach_aut[x][y] = true;
        }
    }
    let mut pass = true;
    let mut detail = String::new();
    'outer_a: for x in 0..m {
        for y in 0..m {
            let same = classification.stabilizer_of(x) == classification.stabilizer_of(y);
            if reach_aut[x][y] != same {
                pass = false;
                detail = format!("pair ({x}, {y})");
                break 'outer_a;
            }
        }
    }
    checks.push(CheckResult {
        name: "aut_reachability_iff_equal_stabilizers".into(),
        pass,
        count: (m * m) as u64,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    });

    let start = Instant::now();
    let mut reach_end = vec![vec![false; m]; m];
    for f in end.members() {
        for (x, &y) in f.iter().enumerate() {
            reach_end[x][y] = true;
        }
    }
    let mut orbit_id = vec![usize::MAX; m];
    for (i, rep) in classification.all_orbit_reps().iter().enumerate() {
        for p in action.orbit(*rep).expect("in range") {
            orbit_id[p] = i;
        }
    }
    let mut pass = true;
    let mut detail = String::new();
    'outer_b: for x in 0..m {
        for y in 0..m {
            if orbit_id[x] == orbit_id[y] {
                continue;
            }
            let contained = classification
                .stabilizer_of(x)
                .is_contained_in(classification.stabilizer_of(y))
                .expect("same parent");
            if reach_end[x][y] != contained {
                pass = false;
                detail = format!("pair ({x}, {y})");
                break 'outer_b;
            }
        }
    }
    checks.push(CheckResult {
        name: "end_reachability_iff_contained_stabilizers".into(),
        pass,
        count: (m * m) as u64,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    });

    let start = Instant::now();
    let transitive = action.is_transitive();
    let pass = !transitive || end.len() == aut.len();
    checks.push(CheckResult {
        name: "transitive_actions_collapse".into(),
        pass,
        count: end.len() as u64,
        detail: if transitive {
            format!("end={} aut={}", end.len(), aut.len())
        } else {
            "not transitive".into()
        },
        elapsed_ms: start.elapsed().as_millis(),
    });

    let start = Instant::now();
    let mut pass = true;
    let mut detail = String::new();
    let mut quotient_count = 0u64;
    for class in classification.classes() {
        let sub = action.restrict_unchecked(&class.block);
        let sub_aut = enumerate_aut(&sub, budget)?;
        let pointwise = aut
            .members()
            .iter()
            .filter(|f| class.block.iter().all(|&p| f[p] == p))
            .count();
        quotient_count += sub_aut.len() as u64;
        if sub_aut.len() * pointwise != aut.len() {
            pass = false;
            detail = format!(
                "block of H={} : {} * {} != {}",
                class.rep,
                sub_aut.len(),
                pointwise,
                aut.len()
            );
            break;
        }
    }
    checks.push(CheckResult {
        name: "aut_quotient_identity_per_block".into(),
        pass,
        count: quotient_count,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    });

    let start = Instant::now();
    let mut pass = true;
    let mut detail = String::new();
    let mut wreath_count = 0u64;
    for class in classification.classes() {
        let sub = action.restrict_unchecked(&class.block);
        let sub_end = enumerate_end(&sub, budget)?;
        let alpha = class.alpha;
        let unit = BigUint::from(class.normalizer.len() / class.rep.len());
        let expected = unit.pow(alpha as u32) * BigUint::from(alpha).pow(alpha as u32);
        wreath_count += sub_end.len() as u64;
        if BigUint::from(sub_end.len()) != expected {
            pass = false;
            detail = format!(
                "block of H={} : {} != {}",
                class.rep,
                sub_end.len(),
                expected
            );
            break;
        }
    }
    checks.push(CheckResult {
        name: "end_wreath_order_per_block".into(),
        pass,
        count: wreath_count,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    });

    Ok(InvariantSuiteReport { checks })
}

/// All subgroups of a small group, by closing every subset of a modest
/// generating pool. Intended for building test corpora of coset actions.
pub fn all_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let n = group.order();
    let mut found: Vec<Subgroup> = vec![group.trivial_subgroup()];
    // every subgroup is reachable from the trivial one by a chain of
    // one-generator extensions
    let mut frontier = 0;
    while frontier < found.len() {
        let base = found[frontier].clone();
        frontier += 1;
        for g in 0..n {
            if base.contains(g) {
                continue;
            }
            let mut gens: Vec<usize> = base.elements().to_vec();
            gens.push(g);
            let bigger = group.subgroup_closure(&gens).expect("elements in range");
            if !found.contains(&bigger) {
                found.push(bigger);
            }
        }
    }
    found.sort();
    found
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::one();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(n - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}
