//! Shared test corpus: small groups (including hand-built dihedral and
//! quaternion tables), all their coset actions, shift actions, and disjoint
//! unions within the enumeration budget.

// each test target compiles this module separately and uses a different slice
#![allow(dead_code)]

use equirank::{all_subgroups, FiniteGroup, GAction};

pub const ENUM_BUDGET: usize = 1 << 20;

/// Dihedral group of order 8 as an explicit multiplication table.
///
/// Element `a + 4b` is the symmetry r^a s^b of the square, with
/// s r s = r^{-1}.
pub fn dihedral8() -> FiniteGroup {
    let idx = |a: usize, b: usize| a % 4 + 4 * (b % 2);
    let mut mul = vec![vec![0usize; 8]; 8];
    for a in 0..4 {
        for b in 0..2 {
            for c in 0..4 {
                for d in 0..2 {
                    let rot = if b == 0 { (a + c) % 4 } else { (a + 4 - c) % 4 };
                    mul[idx(a, b)][idx(c, d)] = idx(rot, b + d);
                }
            }
        }
    }
    FiniteGroup::from_mul_table(mul).expect("dihedral table is a group")
}

/// Quaternion group of order 8: ids 0..8 are 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion8() -> FiniteGroup {
    // unit products with signs: entry (u, v) = (sign, unit) for u*v
    // units: 0 = 1, 1 = i, 2 = j, 3 = k
    let unit_mul = [
        [(1i32, 0usize), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let id = |sign: i32, unit: usize| 2 * unit + usize::from(sign < 0);
    let mut mul = vec![vec![0usize; 8]; 8];
    for su in [1i32, -1] {
        for u in 0..4 {
            for sv in [1i32, -1] {
                for v in 0..4 {
                    let (sw, w) = unit_mul[u][v];
                    mul[id(su, u)][id(sv, v)] = id(su * sv * sw, w);
                }
            }
        }
    }
    FiniteGroup::from_mul_table(mul).expect("quaternion table is a group")
}

/// Every corpus group of order <= 8, with a printable name.
pub fn corpus_groups() -> Vec<(String, FiniteGroup)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("cyclic:{n}"), FiniteGroup::cyclic(n).unwrap()));
    }
    for k in 1..=3 {
        out.push((format!("symmetric:{k}"), FiniteGroup::symmetric(k).unwrap()));
    }
    out.push(("dihedral8".into(), dihedral8()));
    out.push(("quaternion8".into(), quaternion8()));
    out
}

pub struct Instance {
    pub name: String,
    pub action: GAction,
}

/// All coset actions of all corpus groups, one per subgroup.
pub fn coset_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for (gname, group) in corpus_groups() {
        for h in all_subgroups(&group) {
            out.push(Instance {
                name: format!("{gname}/coset{h}"),
                action: GAction::coset(group.clone(), &h).unwrap(),
            });
        }
    }
    out
}

/// Shift actions cyclic:2,3,4 over a binary alphabet.
pub fn shift_corpus() -> Vec<Instance> {
    (2..=4)
        .map(|n| Instance {
            name: format!("cyclic:{n}/shift:2"),
            action: GAction::shift(FiniteGroup::cyclic(n).unwrap(), 2).unwrap(),
        })
        .collect()
}

/// Disjoint unions with end order within the enumeration budget.
pub fn union_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    let z2 = FiniteGroup::cyclic(2).unwrap();
    let z4 = FiniteGroup::cyclic(4).unwrap();
    let s3 = FiniteGroup::symmetric(3).unwrap();

    let z2_shift = GAction::shift(z2.clone(), 2).unwrap();
    let z2_reg = GAction::regular(z2.clone()).unwrap();
    out.push(Instance {
        name: "cyclic:2/shift:2+shift:2".into(),
        action: z2_shift.disjoint_union(&z2_shift).unwrap(),
    });
    out.push(Instance {
        name: "cyclic:2/shift:2+regular".into(),
        action: z2_shift.disjoint_union(&z2_reg).unwrap(),
    });

    let z4_reg = GAction::regular(z4.clone()).unwrap();
    let z4_half = GAction::coset(z4.clone(), &z4.subgroup_closure(&[2]).unwrap()).unwrap();
    let z4_point = GAction::coset(z4.clone(), &z4.full_subgroup()).unwrap();
    out.push(Instance {
        name: "cyclic:4/regular+regular".into(),
        action: z4_reg.disjoint_union(&z4_reg).unwrap(),
    });
    out.push(Instance {
        name: "cyclic:4/coset2+regular+point".into(),
        action: z4_half
            .disjoint_union(&z4_reg)
            .unwrap()
            .disjoint_union(&z4_point)
            .unwrap(),
    });
    let z4_shift = GAction::shift(z4, 2).unwrap();
    out.push(Instance {
        name: "cyclic:4/shift:2+coset2".into(),
        action: z4_shift.disjoint_union(&z4_half).unwrap(),
    });

    let s3_reg = GAction::regular(s3.clone()).unwrap();
    let s3_cosets = GAction::coset(s3.clone(), &s3.subgroup_closure(&[1]).unwrap()).unwrap();
    out.push(Instance {
        name: "symmetric:3/regular+coset".into(),
        action: s3_reg.disjoint_union(&s3_cosets).unwrap(),
    });
    out
}

/// The whole corpus.
pub fn full_corpus() -> Vec<Instance> {
    let mut out = coset_corpus();
    out.extend(shift_corpus());
    out.extend(union_corpus());
    out
}
