//! Property tests for the structural invariants: subgroup arithmetic, the
//! canonical map constructions, kernel laws, and file-format round-trips.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use equirank::io::ActionFile;
use equirank::{
    all_subgroups, collapsing, enumerate_end, is_equivariant, orbit_swap, translation,
    FiniteGroup, GAction, GMap,
};

fn groups() -> &'static Vec<FiniteGroup> {
    static POOL: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool: Vec<FiniteGroup> =
            (1..=8).map(|n| FiniteGroup::cyclic(n).unwrap()).collect();
        pool.push(FiniteGroup::symmetric(3).unwrap());
        pool.push(FiniteGroup::symmetric(4).unwrap());
        pool.push(common::dihedral8());
        pool.push(common::quaternion8());
        pool
    })
}

fn actions() -> &'static Vec<GAction> {
    static POOL: OnceLock<Vec<GAction>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut pool = Vec::new();
        for n in 2..=4 {
            pool.push(GAction::shift(FiniteGroup::cyclic(n).unwrap(), 2).unwrap());
        }
        for g in [FiniteGroup::symmetric(3).unwrap(), common::dihedral8()] {
            for h in all_subgroups(&g) {
                pool.push(GAction::coset(g.clone(), &h).unwrap());
            }
        }
        let z2s = GAction::shift(FiniteGroup::cyclic(2).unwrap(), 2).unwrap();
        pool.push(z2s.disjoint_union(&z2s).unwrap());
        pool
    })
}

fn end_pools() -> &'static Vec<(GAction, Vec<GMap>)> {
    static POOL: OnceLock<Vec<(GAction, Vec<GMap>)>> = OnceLock::new();
    POOL.get_or_init(|| {
        [
            GAction::shift(FiniteGroup::cyclic(2).unwrap(), 2).unwrap(),
            GAction::shift(FiniteGroup::cyclic(3).unwrap(), 2).unwrap(),
            GAction::regular(FiniteGroup::symmetric(3).unwrap()).unwrap(),
        ]
        .into_iter()
        .map(|a| {
            let end = enumerate_end(&a, 1 << 20).unwrap().iter_maps().collect();
            (a, end)
        })
        .collect()
    })
}

proptest! {
    #[test]
    fn subgroup_closure_is_a_valid_subgroup(
        group_idx in 0usize..12,
        gens in proptest::collection::vec(0usize..48, 0..4),
    ) {
        let group = &groups()[group_idx % groups().len()];
        let gens: Vec<usize> = gens.into_iter().map(|g| g % group.order()).collect();
        let sub = group.subgroup_closure(&gens).unwrap();
        // revalidates identity, closure under product/inverse, Lagrange
        prop_assert!(group.subgroup_from_carrier(sub.elements()).is_ok());
        for &g in &gens {
            prop_assert!(sub.contains(g));
        }
    }

    #[test]
    fn conjugacy_arithmetic_invariants(
        group_idx in 0usize..12,
        sub_idx in 0usize..16,
        g in 0usize..48,
    ) {
        let group = &groups()[group_idx % groups().len()];
        let subs = all_subgroups(group);
        let h = &subs[sub_idx % subs.len()];
        let g = g % group.order();
        let conj = group.conjugate_subgroup(h, g).unwrap();
        prop_assert_eq!(conj.len(), h.len());
        let n = group.normalizer(h).unwrap();
        prop_assert!(h.is_contained_in(&n).unwrap());
        prop_assert!(group.subgroup_from_carrier(n.elements()).is_ok());
        // orbit-stabilizer for the conjugation action
        let class = group.n_conjugacy_class(h, &group.full_subgroup()).unwrap();
        prop_assert_eq!(class.len(), group.order() / n.len());
        for (member, &w) in class.members().iter().zip(class.witnesses()) {
            prop_assert_eq!(&group.conjugate_subgroup(h, w).unwrap(), member);
        }
    }

    #[test]
    fn canonical_constructions_are_equivariant(
        action_idx in 0usize..32,
        x in 0usize..64,
        y in 0usize..64,
        k in 0usize..24,
    ) {
        let action = &actions()[action_idx % actions().len()];
        let m = action.point_count();
        let (x, y) = (x % m, y % m);
        let sx = action.stabilizer(x).unwrap();
        let sy = action.stabilizer(y).unwrap();
        let same_orbit = action.orbit(x).unwrap() == action.orbit(y).unwrap();

        if !same_orbit && sx.is_contained_in(&sy).unwrap() {
            let f = collapsing(action, x, y).unwrap();
            prop_assert!(is_equivariant(action, f.image()).unwrap());
            prop_assert!(!f.is_bijective());
        }
        if !same_orbit && sx == sy {
            let f = orbit_swap(action, x, y).unwrap();
            prop_assert!(is_equivariant(action, f.image()).unwrap());
            prop_assert!(f.compose(&f).unwrap().is_identity());
        }
        let n = action.group().normalizer(&sx).unwrap();
        let k = n.elements()[k % n.len()];
        let f = translation(action, x, k).unwrap();
        prop_assert!(is_equivariant(action, f.image()).unwrap());
        prop_assert!(f.is_bijective());
    }

    #[test]
    fn kernel_laws_hold_for_arbitrary_pairs(
        pool_idx in 0usize..3,
        i in 0usize..4096,
        j in 0usize..4096,
    ) {
        let (_, pool) = &end_pools()[pool_idx % end_pools().len()];
        let sigma = &pool[i % pool.len()];
        let tau = &pool[j % pool.len()];
        let composed = sigma.compose(tau).unwrap();
        prop_assert!(tau.kernel().refines(&composed.kernel()));
        if tau.is_bijective() {
            prop_assert_eq!(
                composed.kernel().pair_count(),
                sigma.kernel().pair_count()
            );
        }
        // the kernel is diagonal exactly for bijections
        prop_assert_eq!(composed.kernel().is_diagonal(), composed.is_bijective());
    }

    #[test]
    fn action_files_round_trip(action_idx in 0usize..32) {
        let action = &actions()[action_idx % actions().len()];
        let file = ActionFile::from_action(action, None);
        let text = serde_json::to_string(&file).unwrap();
        let back: ActionFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back.build().unwrap(), action);
    }

    #[test]
    fn stabilizers_only_grow_along_equivariant_maps(
        pool_idx in 0usize..3,
        i in 0usize..4096,
    ) {
        let (action, pool) = &end_pools()[pool_idx % end_pools().len()];
        let f = &pool[i % pool.len()];
        for x in 0..action.point_count() {
            let sx = action.stabilizer(x).unwrap();
            let sfx = action.stabilizer(f.apply(x)).unwrap();
            prop_assert!(sx.is_contained_in(&sfx).unwrap());
        }
    }
}
