//! The closed formulas: per-class target sets U(H_i), the single-orbit count
//! kappa, the relative rank of the endomorphism monoid modulo its group of
//! units, the two explicit generating sets, and the orders of both monoids.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::action::{Classification, GAction};
use crate::equivariant::{collapsing, CollapsingType, GMap};
use crate::group::SubgroupClass;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RankError {
    #[error("class index {index} out of range ({classes} classes)")]
    IndexOutOfRange { index: usize, classes: usize },
}

/// Per-class data feeding the rank formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRankInfo {
    pub stabilizer_order: usize,
    pub normalizer_order: usize,
    pub alpha: usize,
    /// The N_i-conjugacy classes of stabilizers containing H_i, sorted by
    /// canonical carrier.
    pub u_classes: Vec<SubgroupClass>,
}

impl ClassRankInfo {
    pub fn u_size(&self) -> usize {
        self.u_classes.len()
    }
}

/// Everything the main formula produces for one action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub classes: Vec<ClassRankInfo>,
    pub kappa: usize,
    pub relative_rank: usize,
    pub aut_order: BigUint,
    pub end_order: BigUint,
}

/// The set `U(H_i)` of N_i-conjugacy classes of stabilizers that contain the
/// class representative exactly, deduplicated, sorted by canonical carrier.
pub fn u_set(
    action: &GAction,
    classification: &Classification,
    class_index: usize,
) -> Result<Vec<SubgroupClass>, RankError> {
    let classes = classification.classes();
    if class_index >= classes.len() {
        return Err(RankError::IndexOutOfRange {
            index: class_index,
            classes: classes.len(),
        });
    }
    let class = &classes[class_index];
    let group = action.group();
    let mut out: Vec<SubgroupClass> = Vec::new();
    for stab in classification.stabs() {
        if !class.rep.is_contained_in(stab).expect("same parent") {
            continue;
        }
        let n_class = group
            .n_conjugacy_class(stab, &class.normalizer)
            .expect("valid subgroups");
        if !out.contains(&n_class) {
            out.push(n_class);
        }
    }
    out.sort();
    Ok(out)
}

/// Number of stabilizer classes whose block is a single orbit.
pub fn kappa(classification: &Classification) -> usize {
    classification
        .classes()
        .iter()
        .filter(|c| c.alpha == 1)
        .count()
}

/// `|Aut_G(X)|` via the wreath-product decomposition:
/// product over classes of `(|N_i|/|H_i|)^alpha_i * alpha_i!`.
pub fn aut_order(classification: &Classification) -> BigUint {
    let mut total = BigUint::one();
    for class in classification.classes() {
        let unit = BigUint::from(class.normalizer.len() / class.rep.len());
        total *= unit.pow(class.alpha as u32);
        total *= factorial(class.alpha);
    }
    total
}

/// `|End_G(X)|`: an equivariant map freely sends each orbit representative x
/// to any y whose stabilizer contains that of x.
pub fn end_order(action: &GAction, classification: &Classification) -> BigUint {
    let mut total = BigUint::one();
    for rep in classification.all_orbit_reps() {
        total *= BigUint::from(admissible_target_count(action, classification, rep));
    }
    total
}

fn admissible_target_count(
    action: &GAction,
    classification: &Classification,
    x: usize,
) -> usize {
    let sx = classification.stabilizer_of(x);
    (0..action.point_count())
        .filter(|&y| {
            sx.is_contained_in(classification.stabilizer_of(y))
                .expect("same parent")
        })
        .count()
}

/// Full rank computation for an action.
pub fn rank_report(action: &GAction, classification: &Classification) -> RankReport {
    let classes: Vec<ClassRankInfo> = (0..classification.class_count())
        .map(|i| {
            let class = &classification.classes()[i];
            ClassRankInfo {
                stabilizer_order: class.rep.len(),
                normalizer_order: class.normalizer.len(),
                alpha: class.alpha,
                u_classes: u_set(action, classification, i).expect("index in range"),
            }
        })
        .collect();
    let kappa = kappa(classification);
    let u_total: usize = classes.iter().map(ClassRankInfo::u_size).sum();
    let relative_rank = u_total - kappa;
    let aut = aut_order(classification);
    let end = end_order(action, classification);
    debug_assert!(aut <= end);
    debug_assert_eq!(relative_rank == 0, aut == end);
    RankReport {
        classes,
        kappa,
        relative_rank,
        aut_order: aut,
        end_order: end,
    }
}

/// Convenience wrapper that classifies first.
pub fn relative_rank(action: &GAction) -> RankReport {
    rank_report(action, &action.classify())
}

/// The full generating set W: every collapsing `[x -> y]` over ordered point
/// pairs with distinct orbits and contained stabilizers, deduplicated by
/// image vector, in lexicographic (x, y) order.
pub fn generating_set_w(action: &GAction, classification: &Classification) -> Vec<GMap> {
    let m = action.point_count();
    let mut orbit_id = vec![usize::MAX; m];
    for (i, rep) in classification.all_orbit_reps().iter().enumerate() {
        for p in action.orbit(*rep).expect("in range") {
            orbit_id[p] = i;
        }
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for x in 0..m {
        for y in 0..m {
            if orbit_id[x] == orbit_id[y] {
                continue;
            }
            let contained = classification
                .stabilizer_of(x)
                .is_contained_in(classification.stabilizer_of(y))
                .expect("same parent");
            if !contained {
                continue;
            }
            let map = collapsing(action, x, y).expect("preconditions hold");
            if seen.insert(map.image().to_vec()) {
                out.push(map);
            }
        }
    }
    out
}

/// A generator together with its declared collapsing type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedGenerator {
    pub map: GMap,
    pub ty: CollapsingType,
}

/// The minimal generating set V realizing the relative rank, with
/// deterministic witness choices:
///
/// * `x_i` is the least point of block i whose stabilizer is exactly `H_i`;
/// * for each strict-containment class in `U(H_i)` (ordered by canonical
///   carrier), the target is the least point whose stabilizer is exactly that
///   class's canonical representative;
/// * when the block has at least two orbits, `x_i'` is the least point of the
///   block outside the orbit of `x_i` with stabilizer exactly `H_i`.
pub fn generating_set_v(
    action: &GAction,
    classification: &Classification,
) -> Vec<TypedGenerator> {
    let group = action.group();
    let m = action.point_count();
    let mut out = Vec::new();
    for (i, class) in classification.classes().iter().enumerate() {
        let x_i = class
            .block
            .iter()
            .copied()
            .find(|&p| classification.stabilizer_of(p) == &class.rep)
            .expect("every block has a point with the exact representative stabilizer");
        let u = u_set(action, classification, i).expect("index in range");
        for n_class in &u {
            if n_class.canonical().len() == class.rep.len() {
                // the class of H_i itself; handled by the extra-orbit map below
                continue;
            }
            let target_stab = n_class.canonical();
            let y = (0..m)
                .find(|&p| classification.stabilizer_of(p) == target_stab)
                .expect("canonical member of a stabilizer class is a stabilizer");
            let map = collapsing(action, x_i, y).expect("preconditions hold");
            let target_class = group
                .n_conjugacy_class(target_stab, &class.normalizer)
                .expect("valid subgroups");
            out.push(TypedGenerator {
                map,
                ty: CollapsingType {
                    class_index: i,
                    target_class,
                },
            });
        }
        if class.alpha >= 2 {
            let orbit_of_x = action.orbit(x_i).expect("in range");
            let x_prime = class
                .block
                .iter()
                .copied()
                .find(|&p| {
                    classification.stabilizer_of(p) == &class.rep
                        && orbit_of_x.binary_search(&p).is_err()
                })
                .expect("a second orbit contains a point with the exact stabilizer");
            let map = collapsing(action, x_i, x_prime).expect("preconditions hold");
            let target_class = group
                .n_conjugacy_class(&class.rep, &class.normalizer)
                .expect("valid subgroups");
            out.push(TypedGenerator {
                map,
                ty: CollapsingType {
                    class_index: i,
                    target_class,
                },
            });
        }
    }
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn z2_shift() -> GAction {
        GAction::shift(FiniteGroup::cyclic(2).unwrap(), 2).unwrap()
    }

    fn z4_shift() -> GAction {
        GAction::shift(FiniteGroup::cyclic(4).unwrap(), 2).unwrap()
    }

    #[test]
    fn u_set_sizes_on_z4_shift() {
        let a = z4_shift();
        let c = a.classify();
        assert_eq!(u_set(&a, &c, 0).unwrap().len(), 1);
        assert_eq!(u_set(&a, &c, 1).unwrap().len(), 2);
        assert_eq!(u_set(&a, &c, 2).unwrap().len(), 3);
        assert!(matches!(
            u_set(&a, &c, 3),
            Err(RankError::IndexOutOfRange { index: 3, .. })
        ));
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(&z4_shift().classify()), 1);
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let regular = GAction::regular(z3.clone()).unwrap();
        assert_eq!(kappa(&regular.classify()), 1);
        let doubled = regular.disjoint_union(&regular).unwrap();
        assert_eq!(kappa(&doubled.classify()), 0);
    }

    #[test]
    fn rank_report_z4_shift() {
        let a = z4_shift();
        let r = relative_rank(&a);
        assert_eq!(r.relative_rank, 5);
        assert_eq!(r.kappa, 1);
        assert_eq!(r.aut_order, BigUint::from(1536u32));
        assert_eq!(r.end_order, BigUint::from(65536u32));
    }

    #[test]
    fn rank_report_z2_shift() {
        let r = relative_rank(&z2_shift());
        assert_eq!(r.relative_rank, 2);
        assert_eq!(r.aut_order, BigUint::from(4u32));
        assert_eq!(r.end_order, BigUint::from(16u32));
    }

    #[test]
    fn transitive_actions_have_rank_zero() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        for h in [
            s3.trivial_subgroup(),
            s3.subgroup_closure(&[1]).unwrap(),
            s3.full_subgroup(),
        ] {
            let a = GAction::coset(s3.clone(), &h).unwrap();
            let r = relative_rank(&a);
            assert_eq!(r.relative_rank, 0);
            assert_eq!(r.aut_order, r.end_order);
        }
    }

    #[test]
    fn coset_action_aut_order_is_normalizer_index() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let words = FiniteGroup::symmetric_words(3);
        let swap01 = words.iter().position(|w| w == &vec![1, 0, 2]).unwrap();
        let h = s3.subgroup_closure(&[swap01]).unwrap();
        let a = GAction::coset(s3.clone(), &h).unwrap();
        let c = a.classify();
        let n = s3.normalizer(&h).unwrap();
        assert_eq!(aut_order(&c), BigUint::from(n.len() / h.len()));
    }

    #[test]
    fn generating_set_w_on_z2_shift() {
        let a = z2_shift();
        let c = a.classify();
        let w = generating_set_w(&a, &c);
        assert_eq!(w.len(), 4);
        let images: Vec<&[usize]> = w.iter().map(|m| m.image()).collect();
        assert!(images.contains(&[3, 1, 2, 3].as_slice())); // [0 -> 3]
        assert!(images.contains(&[0, 1, 2, 0].as_slice())); // [3 -> 0]
        assert!(images.contains(&[0, 0, 0, 3].as_slice())); // [1 -> 0]
        assert!(images.contains(&[0, 3, 3, 3].as_slice())); // [1 -> 3]
    }

    #[test]
    fn generating_set_w_empty_for_regular_action() {
        let a = GAction::regular(FiniteGroup::cyclic(3).unwrap()).unwrap();
        let c = a.classify();
        assert!(generating_set_w(&a, &c).is_empty());
    }

    #[test]
    fn generating_set_w_count_on_z4_shift() {
        // frozen from enumeration: one map per diagonal orbit on the valid
        // ordered point pairs (fixed<->fixed 2, middle->fixed 2, and
        // 1+1+2+4+4 = 12 per free orbit)
        let a = z4_shift();
        let c = a.classify();
        assert_eq!(generating_set_w(&a, &c).len(), 40);
    }

    #[test]
    fn generating_set_v_on_z4_shift() {
        let a = z4_shift();
        let c = a.classify();
        let v = generating_set_v(&a, &c);
        assert_eq!(v.len(), 5);
        let expected: Vec<GMap> = [
            (0, 15), // two fixed points merge
            (5, 0),  // middle class up to the fixed point
            (1, 0),  // free class onto the whole-group stabilizer
            (1, 5),  // free class onto the middle stabilizer
            (1, 3),  // free class onto a second free orbit
        ]
        .iter()
        .map(|&(x, y)| collapsing(&a, x, y).unwrap())
        .collect();
        let got: Vec<&GMap> = v.iter().map(|t| &t.map).collect();
        for e in &expected {
            assert!(got.contains(&e));
        }
        // declared types agree with the classifier
        for t in &v {
            let classified =
                crate::equivariant::classify_elementary_collapsing(&a, &c, &t.map)
                    .unwrap()
                    .unwrap();
            assert_eq!(classified, t.ty);
        }
    }

    #[test]
    fn generating_set_v_on_z2_shift_and_regular() {
        let a = z2_shift();
        let c = a.classify();
        let v = generating_set_v(&a, &c);
        assert_eq!(v.len(), 2);
        let images: Vec<&[usize]> = v.iter().map(|t| t.map.image()).collect();
        assert!(images.contains(&[3, 1, 2, 3].as_slice())); // [0 -> 3]
        assert!(images.contains(&[0, 0, 0, 3].as_slice())); // [1 -> 0]

        let reg = GAction::regular(FiniteGroup::cyclic(3).unwrap()).unwrap();
        assert!(generating_set_v(&reg, &reg.classify()).is_empty());
    }

    #[test]
    fn v_size_always_equals_relative_rank() {
        let actions = vec![
            z2_shift(),
            z4_shift(),
            GAction::shift(FiniteGroup::cyclic(3).unwrap(), 2).unwrap(),
            GAction::regular(FiniteGroup::symmetric(3).unwrap()).unwrap(),
        ];
        for a in actions {
            let c = a.classify();
            let report = rank_report(&a, &c);
            assert_eq!(generating_set_v(&a, &c).len(), report.relative_rank);
        }
    }

    #[test]
    fn trivial_group_on_n_points_has_rank_one() {
        for n in 2..=6 {
            let g = FiniteGroup::cyclic(1).unwrap();
            let a = GAction::new(g, vec![(0..n).collect()]).unwrap();
            assert_eq!(relative_rank(&a).relative_rank, 1);
        }
    }

    #[test]
    fn end_order_of_cyclic4_alphabet3_needs_big_integers() {
        let a = GAction::shift(FiniteGroup::cyclic(4).unwrap(), 3).unwrap();
        let c = a.classify();
        let end = end_order(&a, &c);
        assert!(end > BigUint::from(u64::MAX));
        // shift endomorphisms are in bijection with local rules A^{A^G} here
        assert_eq!(end, BigUint::from(3u32).pow(81));
    }
}
