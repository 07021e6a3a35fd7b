//! Ideals of a finite ring as bitsets over dense element indices.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::RingError;
use crate::ring::FiniteRing;

/// An ideal together with the generators it was built from.
#[derive(Clone)]
pub struct Ideal {
    ring: FiniteRing,
    elements: FixedBitSet,
    generators: Vec<usize>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("elements", &self.to_vec())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn zero(ring: &FiniteRing) -> Ideal {
        generated_ideal(ring, &[])
    }

    pub fn whole(ring: &FiniteRing) -> Ideal {
        principal_ideal(ring, ring.one())
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn elements(&self) -> &FixedBitSet {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.elements.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.contains(a)
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.contains(self.ring.one())
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elements.is_subset(&other.elements)
    }

    /// Checks the defining closure properties directly.
    pub fn satisfies_invariants(&self) -> bool {
        let r = &self.ring;
        if !self.contains(r.zero()) {
            return false;
        }
        let members = self.to_vec();
        for &a in &members {
            if !self.contains(r.neg(a)) {
                return false;
            }
            if members.iter().any(|&b| !self.contains(r.add(a, b))) {
                return false;
            }
            if r.elements().any(|s| !self.contains(r.mul(s, a))) {
                return false;
            }
        }
        self.elements == generated_ideal(r, &self.generators).elements
    }

    /// Ordering used for enumeration output: cardinality, then the ascending
    /// member lists compared lexicographically.
    fn canonical_cmp(&self, other: &Ideal) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.elements.ones().cmp(other.elements.ones()))
    }
}

/// Closes `set` under addition. `set` must already be closed under
/// multiplication by ring elements; sums preserve that.
fn close_additively(ring: &FiniteRing, set: &mut FixedBitSet) {
    let mut members: Vec<usize> = set.ones().collect();
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        let mut j = 0;
        while j <= i {
            let z = ring.add(x, members[j]);
            if !set.contains(z) {
                set.insert(z);
                members.push(z);
            }
            j += 1;
        }
        i += 1;
    }
}

/// `Ra = { r·a : r ∈ R }`.
pub fn principal_ideal(ring: &FiniteRing, a: usize) -> Ideal {
    let mut elements = FixedBitSet::with_capacity(ring.size());
    for r in ring.elements() {
        elements.insert(ring.mul(r, a));
    }
    Ideal {
        ring: ring.clone(),
        elements,
        generators: vec![a],
    }
}

/// Smallest ideal containing `gens`: the union of their principal ideals,
/// closed under addition.
pub fn generated_ideal(ring: &FiniteRing, gens: &[usize]) -> Ideal {
    let mut elements = FixedBitSet::with_capacity(ring.size());
    elements.insert(ring.zero());
    for &g in gens {
        for r in ring.elements() {
            elements.insert(ring.mul(r, g));
        }
    }
    close_additively(ring, &mut elements);
    Ideal {
        ring: ring.clone(),
        elements,
        generators: gens.to_vec(),
    }
}

/// `I + J`, generated by the union of both generator lists.
pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Ideal {
    let ring = &i.ring;
    let mut elements = FixedBitSet::with_capacity(ring.size());
    for a in i.iter() {
        for b in j.iter() {
            elements.insert(ring.add(a, b));
        }
    }
    close_additively(ring, &mut elements);
    let mut generators = i.generators.clone();
    generators.extend_from_slice(&j.generators);
    Ideal {
        ring: ring.clone(),
        elements,
        generators,
    }
}

/// `I ∩ J`; the generator list is the member list, which generates it.
pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Ideal {
    let mut elements = i.elements.clone();
    elements.intersect_with(&j.elements);
    let generators = elements.ones().collect();
    Ideal {
        ring: i.ring.clone(),
        elements,
        generators,
    }
}

pub fn ideal_equal(i: &Ideal, j: &Ideal) -> bool {
    i == j
}

pub fn contains(i: &Ideal, a: usize) -> bool {
    i.contains(a)
}

/// Every ideal of `ring` contained in `bound`, sorted by cardinality and then
/// lexicographically by members.
///
/// Every ideal of a finite ring is a finite sum of principal ideals, so
/// closing the principal ideals `Ra` (`a ∈ bound`) under sums is complete.
pub fn enumerate_ideals_within(ring: &FiniteRing, bound: &Ideal, oracle_cap: usize) -> Result<Vec<Ideal>, RingError> {
    if bound.len() > oracle_cap {
        return Err(RingError::OracleCapExceeded {
            size: bound.len(),
            cap: oracle_cap,
        });
    }
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut principals: Vec<Ideal> = Vec::new();
    for a in bound.iter() {
        let p = principal_ideal(ring, a);
        if seen.insert(p.elements.clone()) {
            principals.push(p);
        }
    }
    let mut found = principals.clone();
    let mut i = 0;
    while i < found.len() {
        for p in &principals {
            if p.is_subset(&found[i]) {
                continue;
            }
            let sum = ideal_sum(&found[i], p);
            if seen.insert(sum.elements.clone()) {
                found.push(sum);
            }
        }
        i += 1;
    }
    found.sort_by(Ideal::canonical_cmp);
    Ok(found)
}

/// Lookup from idempotent-generated ideals `Rf` to their least generator `f`.
pub struct IdempotentGenerators {
    by_ideal: HashMap<FixedBitSet, usize>,
}

impl IdempotentGenerators {
    pub fn new(ring: &FiniteRing) -> IdempotentGenerators {
        let mut by_ideal = HashMap::new();
        // Idempotents are ascending, so the first insert per ideal is the least.
        for &f in ring.idempotents() {
            by_ideal.entry(principal_ideal(ring, f).elements).or_insert(f);
        }
        IdempotentGenerators { by_ideal }
    }

    pub fn find(&self, ideal: &Ideal) -> Option<usize> {
        self.by_ideal.get(&ideal.elements).copied()
    }
}

/// Least idempotent `f` with `I = Rf`, if any.
pub fn idempotent_generator(ring: &FiniteRing, ideal: &Ideal) -> Option<usize> {
    IdempotentGenerators::new(ring).find(ideal)
}

/// Whether `ideal` has a complement `K` with `I + K = R` and `I ∩ K = 0`,
/// searched over all ideals of `ring`. Independent of idempotent detection.
pub fn is_direct_summand(ring: &FiniteRing, ideal: &Ideal, oracle_cap: usize) -> Result<bool, RingError> {
    let all = all_ideals(ring, oracle_cap)?;
    Ok(has_complement_among(ring, ideal, &all))
}

pub(crate) fn all_ideals(ring: &FiniteRing, oracle_cap: usize) -> Result<Vec<Ideal>, RingError> {
    if ring.size() > oracle_cap {
        return Err(RingError::OracleCapExceeded {
            size: ring.size(),
            cap: oracle_cap,
        });
    }
    enumerate_ideals_within(ring, &Ideal::whole(ring), oracle_cap)
}

pub(crate) fn has_complement_among(ring: &FiniteRing, ideal: &Ideal, candidates: &[Ideal]) -> bool {
    candidates.iter().any(|k| {
        let mut meet = ideal.elements.clone();
        meet.intersect_with(&k.elements);
        // I + K is an ideal, so it is all of R iff it contains 1.
        meet.count_ones(..) == 1 && ideal.iter().any(|i| k.contains(ring.sub(ring.one(), i)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_product, make_zmod};
    use crate::{DEFAULT_ORACLE_CAP as ORACLE, DEFAULT_SIZE_CAP as CAP};

    fn z(n: u64) -> FiniteRing {
        make_zmod(n, CAP).unwrap()
    }

    #[test]
    fn principal_ideals_in_z12() {
        let r = z(12);
        assert_eq!(principal_ideal(&r, 4).to_vec(), [0, 4, 8]);
        assert_eq!(principal_ideal(&r, 0).to_vec(), [0]);
        assert_eq!(principal_ideal(&r, 9).to_vec(), [0, 3, 6, 9]);
    }

    #[test]
    fn generated_ideals() {
        let r = z(12);
        assert_eq!(generated_ideal(&r, &[4, 6]).to_vec(), [0, 2, 4, 6, 8, 10]);
        assert_eq!(generated_ideal(&r, &[]).to_vec(), [0]);
        let r6 = z(6);
        assert!(generated_ideal(&r6, &[2, 3]).is_whole());
    }

    #[test]
    fn sums_and_intersections() {
        let r = z(12);
        let i4 = principal_ideal(&r, 4);
        let i6 = principal_ideal(&r, 6);
        assert_eq!(ideal_sum(&i4, &i6), principal_ideal(&r, 2));
        assert!(ideal_equal(&ideal_intersect(&i4, &i4), &i4));
        assert!(ideal_intersect(&i4, &i6).is_zero());
        assert!(contains(&i4, 8) && !contains(&i4, 6));
    }

    #[test]
    fn enumerate_within_bounds() {
        let r = z(12);
        let within: Vec<Vec<usize>> = enumerate_ideals_within(&r, &principal_ideal(&r, 9), ORACLE)
            .unwrap()
            .iter()
            .map(Ideal::to_vec)
            .collect();
        assert_eq!(within, vec![vec![0], vec![0, 6], vec![0, 3, 6, 9]]);

        let zero = Ideal::zero(&r);
        assert_eq!(enumerate_ideals_within(&r, &zero, ORACLE).unwrap().len(), 1);

        let r = make_product(vec![z(2), z(2)], CAP).unwrap();
        // (1,0) has index 1 under little-endian encoding.
        let within: Vec<Vec<usize>> = enumerate_ideals_within(&r, &principal_ideal(&r, 1), ORACLE)
            .unwrap()
            .iter()
            .map(Ideal::to_vec)
            .collect();
        assert_eq!(within, vec![vec![0], vec![0, 1]]);

        let all = enumerate_ideals_within(&z(12), &Ideal::whole(&z(12)), 8);
        assert!(matches!(all, Err(RingError::OracleCapExceeded { size: 12, cap: 8 })));
    }

    #[test]
    fn idempotent_generators() {
        let r = z(12);
        assert_eq!(idempotent_generator(&r, &principal_ideal(&r, 4)), Some(4));
        assert_eq!(idempotent_generator(&r, &Ideal::zero(&r)), Some(0));
        assert_eq!(idempotent_generator(&r, &principal_ideal(&r, 6)), None);
        // (8) = (4) is generated by the idempotent 4.
        assert_eq!(idempotent_generator(&r, &principal_ideal(&r, 8)), Some(4));
    }

    #[test]
    fn direct_summands() {
        let r = z(12);
        assert!(is_direct_summand(&r, &principal_ideal(&r, 4), ORACLE).unwrap());
        assert!(is_direct_summand(&r, &Ideal::whole(&r), ORACLE).unwrap());
        assert!(!is_direct_summand(&r, &principal_ideal(&r, 6), ORACLE).unwrap());
    }

    #[test]
    fn enumerated_ideals_are_ideals() {
        for n in [8u64, 12, 30, 36] {
            let r = z(n);
            for ideal in all_ideals(&r, ORACLE).unwrap() {
                assert!(ideal.satisfies_invariants(), "Z/{n}: {:?}", ideal);
            }
        }
        // Ideals of Z/n correspond to divisors of n.
        assert_eq!(all_ideals(&z(36), ORACLE).unwrap().len(), 9);
    }
}
