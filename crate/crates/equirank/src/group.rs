//! Finite groups as explicit multiplication tables, plus subgroup arithmetic:
//! closure, conjugation, normalizers and N-conjugacy classes.
//!
//! Elements are integer ids in `[0, n)`. The identity is detected from the
//! table, not required to sit at id 0, so arbitrary user tables are accepted.

use std::fmt;

use thiserror::Error;

/// Errors from group construction and subgroup arithmetic.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// A row or column of the multiplication table is not a permutation of `[0, n)`.
    #[error("multiplication table is not a Latin square: {kind} {index} is not a permutation of 0..{order}")]
    NotLatinSquare {
        kind: &'static str,
        index: usize,
        order: usize,
    },
    /// No element acts as a two-sided identity.
    #[error("multiplication table has no two-sided identity element")]
    NoIdentity,
    /// First associativity violation, by witnesses.
    #[error("multiplication table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    /// An element has no two-sided inverse.
    #[error("element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    /// Groups must have at least one element.
    #[error("group order must be positive")]
    ZeroOrder,
    /// Guard on symmetric-group table size.
    #[error("symmetric group degree {degree} too large (max {max})")]
    TooLarge { degree: usize, max: usize },
    /// An element id outside `[0, n)`.
    #[error("element id {element} out of range for group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    /// Two subgroups bound to groups of different order were mixed.
    #[error("subgroup parent order mismatch: {left} vs {right}")]
    ParentMismatch { left: usize, right: usize },
    /// A carrier set that is not actually a subgroup.
    #[error("carrier is not a subgroup: {reason}")]
    NotSubgroup { reason: String },
}

/// A finite group given by its complete multiplication table.
///
/// `mul[g][h]` is the id of the product `g*h`. The table is validated on
/// construction: Latin square, two-sided identity, two-sided inverses and
/// full associativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table and derives identity and inverses.
    pub fn from_mul_table(mul: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = mul.len();
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        // Row and column permutation checks (also catches ragged/out-of-range tables).
        let mut seen = vec![false; n];
        for (r, row) in mul.iter().enumerate() {
            seen.iter_mut().for_each(|s| *s = false);
            if row.len() != n {
                return Err(GroupError::NotLatinSquare {
                    kind: "row",
                    index: r,
                    order: n,
                });
            }
            for &v in row {
                if v >= n || seen[v] {
                    return Err(GroupError::NotLatinSquare {
                        kind: "row",
                        index: r,
                        order: n,
                    });
                }
                seen[v] = true;
            }
        }
        for c in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for row in &mul {
                let v = row[c];
                if seen[v] {
                    return Err(GroupError::NotLatinSquare {
                        kind: "column",
                        index: c,
                        order: n,
                    });
                }
                seen[v] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul[e][g] == g && mul[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![0usize; n];
        for g in 0..n {
            let h = (0..n)
                .find(|&h| mul[g][h] == identity && mul[h][g] == identity)
                .ok_or(GroupError::MissingInverse { element: g })?;
            inv[g] = h;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            mul,
            identity,
            inv,
        })
    }

    /// Cyclic group of order `n` under addition mod `n`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        let mul = (0..n)
            .map(|g| (0..n).map(|h| (g + h) % n).collect())
            .collect();
        Self::from_mul_table(mul)
    }

    /// Symmetric group on `k` symbols, `k <= 5`.
    ///
    /// Elements are the permutations of `[0, k)` enumerated in lexicographic
    /// order of their one-line words, so ids are reproducible across runs.
    /// Multiplication is composition: `(g*h)(i) = g(h(i))`.
    pub fn symmetric(k: usize) -> Result<Self, GroupError> {
        if k == 0 {
            return Err(GroupError::ZeroOrder);
        }
        if k > 5 {
            return Err(GroupError::TooLarge { degree: k, max: 5 });
        }
        let perms = lex_permutations(k);
        let index: std::collections::HashMap<&[usize], usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i))
            .collect();
        let n = perms.len();
        let mut mul = vec![vec![0usize; n]; n];
        for (g, pg) in perms.iter().enumerate() {
            for (h, ph) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..k).map(|i| pg[ph[i]]).collect();
                mul[g][h] = index[composed.as_slice()];
            }
        }
        Self::from_mul_table(mul)
    }

    /// The permutation words of `symmetric(k)` in id order, for callers that
    /// need to map ids back to permutations.
    pub fn symmetric_words(k: usize) -> Vec<Vec<usize>> {
        lex_permutations(k)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Product `g*h`.
    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mul[g][h]
    }

    /// Inverse of `g`.
    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    fn check_element(&self, g: usize) -> Result<(), GroupError> {
        if g >= self.order {
            return Err(GroupError::ElementOutOfRange {
                element: g,
                order: self.order,
            });
        }
        Ok(())
    }

    fn check_binding(&self, h: &Subgroup) -> Result<(), GroupError> {
        if h.group_order != self.order {
            return Err(GroupError::ParentMismatch {
                left: h.group_order,
                right: self.order,
            });
        }
        Ok(())
    }

    /// The whole group as a subgroup of itself.
    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked((0..self.order).collect(), self.order)
    }

    /// The trivial subgroup `{e}`.
    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted_unchecked(vec![self.identity], self.order)
    }

    /// Smallest subgroup containing `gens`, by breadth-first closure under
    /// multiplication and inversion.
    pub fn subgroup_closure(&self, gens: &[usize]) -> Result<Subgroup, GroupError> {
        for &g in gens {
            self.check_element(g)?;
        }
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut queue: Vec<usize> = vec![self.identity];
        for &g in gens {
            if !member[g] {
                member[g] = true;
                queue.push(g);
            }
            let gi = self.inv[g];
            if !member[gi] {
                member[gi] = true;
                queue.push(gi);
            }
        }
        let step: Vec<usize> = queue.clone();
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &step {
                for y in [self.mul[x][g], self.mul[g][x]] {
                    if !member[y] {
                        member[y] = true;
                        queue.push(y);
                    }
                }
            }
        }
        let carrier: Vec<usize> = (0..self.order).filter(|&g| member[g]).collect();
        Ok(Subgroup::from_sorted_unchecked(carrier, self.order))
    }

    /// Conjugate subgroup `g H g^{-1}`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Result<Subgroup, GroupError> {
        self.check_binding(h)?;
        self.check_element(g)?;
        let gi = self.inv[g];
        let mut carrier: Vec<usize> = h
            .elements()
            .iter()
            .map(|&x| self.mul[self.mul[g][x]][gi])
            .collect();
        carrier.sort_unstable();
        Ok(Subgroup::from_sorted_unchecked(carrier, self.order))
    }

    /// Normalizer `N_G(H) = { g : g H g^{-1} = H }`. Always contains `H`.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup, GroupError> {
        self.check_binding(h)?;
        let carrier: Vec<usize> = (0..self.order)
            .filter(|&g| {
                let gi = self.inv[g];
                h.elements()
                    .iter()
                    .all(|&x| h.contains(self.mul[self.mul[g][x]][gi]))
            })
            .collect();
        Ok(Subgroup::from_sorted_unchecked(carrier, self.order))
    }

    /// The N-conjugacy class `[H]_N = { gHg^{-1} : g in N }`, with one
    /// conjugating witness per member. Passing `N = G` yields the full
    /// conjugacy class `[H]`.
    pub fn n_conjugacy_class(
        &self,
        h: &Subgroup,
        n: &Subgroup,
    ) -> Result<SubgroupClass, GroupError> {
        self.check_binding(h)?;
        self.check_binding(n)?;
        let mut members: Vec<Subgroup> = Vec::new();
        let mut witnesses: Vec<usize> = Vec::new();
        for &g in n.elements() {
            let k = self.conjugate_subgroup(h, g)?;
            if !members.contains(&k) {
                members.push(k);
                witnesses.push(g);
            }
        }
        // Sort members by carrier; the lexicographically least is canonical.
        let mut order: Vec<usize> = (0..members.len()).collect();
        order.sort_by(|&a, &b| members[a].cmp(&members[b]));
        let members: Vec<Subgroup> = order.iter().map(|&i| members[i].clone()).collect();
        let witnesses: Vec<usize> = order.iter().map(|&i| witnesses[i]).collect();
        Ok(SubgroupClass { members, witnesses })
    }

    /// Validates that `carrier` really is a subgroup (identity, closure under
    /// product and inverse, Lagrange).
    pub fn subgroup_from_carrier(&self, carrier: &[usize]) -> Result<Subgroup, GroupError> {
        for &g in carrier {
            self.check_element(g)?;
        }
        let mut sorted = carrier.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let sub = Subgroup::from_sorted_unchecked(sorted, self.order);
        if !sub.contains(self.identity) {
            return Err(GroupError::NotSubgroup {
                reason: "missing identity".into(),
            });
        }
        for &a in sub.elements() {
            if !sub.contains(self.inv[a]) {
                return Err(GroupError::NotSubgroup {
                    reason: format!("inverse of {a} not in carrier"),
                });
            }
            for &b in sub.elements() {
                if !sub.contains(self.mul[a][b]) {
                    return Err(GroupError::NotSubgroup {
                        reason: format!("product {a}*{b} escapes carrier"),
                    });
                }
            }
        }
        if !self.order.is_multiple_of(sub.len()) {
            return Err(GroupError::NotSubgroup {
                reason: format!("size {} does not divide {}", sub.len(), self.order),
            });
        }
        Ok(sub)
    }
}

/// A subgroup of a [`FiniteGroup`], stored as a sorted carrier of element ids
/// plus a bitset for membership tests. Ordering is lexicographic on the
/// sorted carrier, which is the order used everywhere a canonical
/// representative is picked.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    carrier: Vec<usize>,
    group_order: usize,
    bits: Vec<u64>,
}

impl Subgroup {
    pub(crate) fn from_sorted_unchecked(carrier: Vec<usize>, group_order: usize) -> Self {
        debug_assert!(carrier.windows(2).all(|w| w[0] < w[1]));
        let mut bits = vec![0u64; group_order.div_ceil(64)];
        for &g in &carrier {
            bits[g / 64] |= 1 << (g % 64);
        }
        Subgroup {
            carrier,
            group_order,
            bits,
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    #[inline]
    pub fn contains(&self, g: usize) -> bool {
        g < self.group_order && self.bits[g / 64] >> (g % 64) & 1 == 1
    }

    /// Containment test `self <= other`, over the same parent group.
    pub fn is_contained_in(&self, other: &Subgroup) -> Result<bool, GroupError> {
        if self.group_order != other.group_order {
            return Err(GroupError::ParentMismatch {
                left: self.group_order,
                right: other.group_order,
            });
        }
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, g) in self.carrier.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

/// An N-conjugacy class of subgroups. Members are sorted by carrier, so
/// `members[0]` is the canonical representative; `witnesses[i]` conjugates
/// the class's defining subgroup onto `members[i]`.
///
/// Equality compares the member sets only; witnesses depend on which member
/// the class was built from.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    members: Vec<Subgroup>,
    witnesses: Vec<usize>,
}

impl PartialEq for SubgroupClass {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for SubgroupClass {}

impl std::hash::Hash for SubgroupClass {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for SubgroupClass {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubgroupClass {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

impl SubgroupClass {
    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn canonical(&self) -> &Subgroup {
        &self.members[0]
    }

    pub fn witnesses(&self) -> &[usize] {
        &self.witnesses
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.members.contains(h)
    }

    /// Classes are compared by their member sets only.
    pub fn same_class(&self, other: &SubgroupClass) -> bool {
        self.members == other.members
    }
}

impl fmt::Display for SubgroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canonical())
    }
}

fn lex_permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut word: Vec<usize> = (0..k).collect();
    loop {
        out.push(word.clone());
        if !next_permutation(&mut word) {
            break;
        }
    }
    out
}

fn next_permutation(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_from_table() {
        let g = FiniteGroup::from_mul_table(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn z4_from_addition_table() {
        let mul = (0..4usize)
            .map(|a| (0..4).map(|b| (a + b) % 4).collect())
            .collect();
        let g = FiniteGroup::from_mul_table(mul).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!((0..4).map(|x| g.inv(x)).collect::<Vec<_>>(), vec![0, 3, 2, 1]);
    }

    #[test]
    fn duplicate_row_entry_is_not_latin() {
        let err = FiniteGroup::from_mul_table(vec![vec![0, 0], vec![1, 0]]).unwrap_err();
        assert!(matches!(err, GroupError::NotLatinSquare { kind: "row", index: 0, .. }));
    }

    #[test]
    fn latin_square_without_identity_is_rejected() {
        // Rows are permutations but no element is a two-sided identity.
        let t = vec![vec![1, 0, 2], vec![2, 1, 0], vec![0, 2, 1]];
        let err = FiniteGroup::from_mul_table(t).unwrap_err();
        assert!(matches!(err, GroupError::NoIdentity));
    }

    #[test]
    fn nonassociative_loop_is_rejected() {
        // Smallest nonassociative loop has order 5.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_mul_table(t).unwrap_err();
        assert!(matches!(err, GroupError::NotAssociative { .. }));
    }

    #[test]
    fn cyclic_builders() {
        assert_eq!(FiniteGroup::cyclic(1).unwrap().order(), 1);
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(z2.inv(0), 0);
        assert_eq!(z2.inv(1), 1);
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(z4.mul(3, 2), 1);
        assert!(matches!(FiniteGroup::cyclic(0), Err(GroupError::ZeroOrder)));
    }

    #[test]
    fn symmetric_group_small() {
        assert_eq!(FiniteGroup::symmetric(1).unwrap().order(), 1);
        assert_eq!(FiniteGroup::symmetric(2).unwrap().order(), 2);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        // identity plus the three transpositions are self-inverse
        let self_inverse = (0..6).filter(|&g| s3.inv(g) == g).count();
        assert_eq!(self_inverse, 4);
        assert!(matches!(
            FiniteGroup::symmetric(6),
            Err(GroupError::TooLarge { .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(z4.subgroup_closure(&[]).unwrap().elements(), &[0]);
        assert_eq!(z4.subgroup_closure(&[2]).unwrap().elements(), &[0, 2]);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        // a 3-cycle: the permutation [1,2,0] sits at lex index 3
        let words = FiniteGroup::symmetric_words(3);
        let cycle = words.iter().position(|w| w == &vec![1, 2, 0]).unwrap();
        assert_eq!(s3.subgroup_closure(&[cycle]).unwrap().len(), 3);
        assert!(matches!(
            z4.subgroup_closure(&[7]),
            Err(GroupError::ElementOutOfRange { element: 7, .. })
        ));
    }

    #[test]
    fn conjugation_examples() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let h = z4.subgroup_closure(&[2]).unwrap();
        assert_eq!(z4.conjugate_subgroup(&h, 0).unwrap(), h);
        assert_eq!(z4.conjugate_subgroup(&h, 3).unwrap(), h);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let words = FiniteGroup::symmetric_words(3);
        let swap01 = words.iter().position(|w| w == &vec![1, 0, 2]).unwrap();
        let cycle = words.iter().position(|w| w == &vec![1, 2, 0]).unwrap();
        let h = s3.subgroup_closure(&[swap01]).unwrap();
        let conj = s3.conjugate_subgroup(&h, cycle).unwrap();
        assert_eq!(conj.len(), 2);
        assert_ne!(conj, h);
    }

    #[test]
    fn normalizer_examples() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let h = z4.subgroup_closure(&[2]).unwrap();
        assert_eq!(z4.normalizer(&h).unwrap().len(), 4);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let words = FiniteGroup::symmetric_words(3);
        let cycle = words.iter().position(|w| w == &vec![1, 2, 0]).unwrap();
        let a3 = s3.subgroup_closure(&[cycle]).unwrap();
        assert_eq!(s3.normalizer(&a3).unwrap().len(), 6);
        let swap01 = words.iter().position(|w| w == &vec![1, 0, 2]).unwrap();
        let h = s3.subgroup_closure(&[swap01]).unwrap();
        assert_eq!(s3.normalizer(&h).unwrap(), h);
    }

    #[test]
    fn conjugacy_class_examples() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let h = z4.subgroup_closure(&[2]).unwrap();
        let class = z4
            .n_conjugacy_class(&h, &z4.trivial_subgroup())
            .unwrap();
        assert_eq!(class.len(), 1);
        assert_eq!(class.canonical(), &h);
        // abelian: conjugating by anything gives the singleton class
        let full = z4.n_conjugacy_class(&h, &z4.full_subgroup()).unwrap();
        assert_eq!(full.len(), 1);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let words = FiniteGroup::symmetric_words(3);
        let swap01 = words.iter().position(|w| w == &vec![1, 0, 2]).unwrap();
        let h = s3.subgroup_closure(&[swap01]).unwrap();
        let class = s3.n_conjugacy_class(&h, &s3.full_subgroup()).unwrap();
        assert_eq!(class.len(), 3);
        // orbit-stabilizer for the conjugation action
        assert_eq!(class.len(), s3.order() / s3.normalizer(&h).unwrap().len());
        // every member is reproduced by its recorded witness
        for (m, &w) in class.members().iter().zip(class.witnesses()) {
            assert_eq!(&s3.conjugate_subgroup(&h, w).unwrap(), m);
        }
    }

    #[test]
    fn containment_examples() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let h = z4.subgroup_closure(&[2]).unwrap();
        let full = z4.full_subgroup();
        assert!(z4.trivial_subgroup().is_contained_in(&h).unwrap());
        assert!(h.is_contained_in(&h).unwrap());
        assert!(h.is_contained_in(&full).unwrap());
        assert!(!full.is_contained_in(&h).unwrap());
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert!(matches!(
            h.is_contained_in(&z2.full_subgroup()),
            Err(GroupError::ParentMismatch { .. })
        ));
    }

    #[test]
    fn group_axioms_exhaustive_for_small_builders() {
        for g in [
            FiniteGroup::cyclic(1).unwrap(),
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::cyclic(8).unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
        ] {
            let n = g.order();
            assert!(n <= 24);
            for a in 0..n {
                assert_eq!(g.mul(g.identity(), a), a);
                assert_eq!(g.mul(a, g.identity()), a);
                assert_eq!(g.mul(a, g.inv(a)), g.identity());
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn subgroup_from_carrier_validates() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert!(z4.subgroup_from_carrier(&[0, 2]).is_ok());
        assert!(matches!(
            z4.subgroup_from_carrier(&[0, 1]),
            Err(GroupError::NotSubgroup { .. })
        ));
        assert!(matches!(
            z4.subgroup_from_carrier(&[1, 2]),
            Err(GroupError::NotSubgroup { .. })
        ));
    }
}
