//! Regularity deciders.
//!
//! WVNR is decided three independent ways: by its definition over ideals
//! ([`is_wvnr_definitional`]), by the element criterion `a ∈ Ra²` for every
//! `a` in some `Re` with `e` a nonunit idempotent ([`is_wvnr_element`]), and
//! by requiring each such `Ra` to be a direct summand ([`is_wvnr_summand`]).
//! Structural shortcuts for particular ring families live in [`structural`].
//!
//! All scans run in ascending dense-index order, so witnesses are
//! reproducible.

pub(crate) mod factor;
pub mod structural;

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::RingError;
use crate::ideals::{all_ideals, enumerate_ideals_within, has_complement_among, principal_ideal, IdempotentGenerators};
use crate::ring::FiniteRing;

pub use factor::{factor_int, factor_poly, Factorization, FpPoly};
pub use structural::{
    is_primary_int, is_primary_poly, polynomial_extension_wvnr, polyquot_wvnr_structural, product_wvnr_structural,
    structural_wvnr, trivial_ext_wvnr_structural, zmod_wvnr_structural,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictMethod {
    /// `x = x²y` solved by search.
    BruteForce,
    /// Reducedness (finite rings are zero-dimensional).
    Reduced,
    /// WVNR plus every nonunit lying in some `Re`, `e ≠ 1`.
    Characterization,
    Definitional,
    Element,
    Summand,
    /// Factorization of the modulus (`Z/n`, `GF(p)[x]/(f)`).
    Structural,
    TwoIdempotent,
    Product,
    TrivialExt,
}

impl VerdictMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictMethod::BruteForce => "brute-force",
            VerdictMethod::Reduced => "reduced",
            VerdictMethod::Characterization => "characterization",
            VerdictMethod::Definitional => "definitional",
            VerdictMethod::Element => "element",
            VerdictMethod::Summand => "summand",
            VerdictMethod::Structural => "structural",
            VerdictMethod::TwoIdempotent => "two-idempotent",
            VerdictMethod::Product => "product",
            VerdictMethod::TrivialExt => "trivial-ext",
        }
    }
}

/// Evidence for a negative verdict. All indices refer to the ring the
/// verdict was computed for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// No `y` solves `a = a²y`.
    NotRegular { a: usize },
    /// `e` is a nonunit idempotent, `a ∈ Re`, and `a ∉ Ra²`.
    NotWeaklyRegular { e: usize, a: usize },
    /// An ideal inside `Re` (`e` a nonunit idempotent) that no idempotent generates.
    NoIdempotentGenerator { e: usize, ideal: Vec<usize> },
    /// In `A ⋉ E`: `a = (a,0)` is a nonunit idempotent, `x = (0,x)`, and `ax ≠ 0`.
    Annihilation { a: usize, x: usize },
    /// A nonunit lying in no `Re` with `e ≠ 1` idempotent.
    Uncovered { a: usize },
}

fn in_principal_of_idempotent(ring: &FiniteRing, e: usize, a: usize) -> bool {
    ring.mul(a, e) == a
}

fn is_nonunit_idempotent(ring: &FiniteRing, e: usize) -> bool {
    ring.is_idempotent(e) && !ring.is_unit(e)
}

/// Least `r` with `e·r = a`.
pub fn least_multiplier(ring: &FiniteRing, e: usize, a: usize) -> Option<usize> {
    ring.elements().find(|&r| ring.mul(e, r) == a)
}

/// `∃x: a = a²x`.
fn in_ra2(ring: &FiniteRing, a: usize) -> bool {
    let a2 = ring.mul(a, a);
    ring.elements().any(|x| ring.mul(a2, x) == a)
}

impl Witness {
    /// Re-checks the witness from scratch against `ring`.
    pub fn verify(&self, ring: &FiniteRing) -> bool {
        let in_range = |i: usize| i < ring.size();
        match *self {
            Witness::NotRegular { a } => in_range(a) && !in_ra2(ring, a),
            Witness::NotWeaklyRegular { e, a } => {
                in_range(e)
                    && in_range(a)
                    && is_nonunit_idempotent(ring, e)
                    && in_principal_of_idempotent(ring, e, a)
                    && !in_ra2(ring, a)
            }
            Witness::NoIdempotentGenerator { e, ref ideal } => {
                if !in_range(e) || !is_nonunit_idempotent(ring, e) || ideal.iter().any(|&i| !in_range(i)) {
                    return false;
                }
                let mut set = FixedBitSet::with_capacity(ring.size());
                set.extend(ideal.iter().copied());
                let closed = set.contains(ring.zero())
                    && ideal.iter().all(|&a| {
                        in_principal_of_idempotent(ring, e, a)
                            && ideal.iter().all(|&b| set.contains(ring.add(a, b)))
                            && ring.elements().all(|r| set.contains(ring.mul(r, a)))
                    });
                closed && ring.idempotents().iter().all(|&f| principal_ideal(ring, f).elements() != &set)
            }
            Witness::Annihilation { a, x } => {
                let Some((base, _)) = ring.trivial_parts() else {
                    return false;
                };
                let bs = base.size();
                in_range(a)
                    && in_range(x)
                    && a < bs
                    && x % bs == 0
                    && is_nonunit_idempotent(ring, a)
                    && ring.mul(a, x) != ring.zero()
            }
            Witness::Uncovered { a } => {
                in_range(a)
                    && !ring.is_unit(a)
                    && ring
                        .idempotents()
                        .iter()
                        .filter(|&&e| !ring.is_unit(e))
                        .all(|&e| !in_principal_of_idempotent(ring, e, a))
            }
        }
    }

    /// Human-readable rendering with structural values and dense indices.
    pub fn describe(&self, ring: &FiniteRing) -> String {
        let show = |i: usize| format!("{} [#{i}]", ring.render(i));
        match self {
            Witness::NotRegular { a } => {
                let a2 = ring.mul(*a, *a);
                format!("a = {}: a^2 = {} and a^2*y != a for every y", show(*a), ring.render(a2))
            }
            Witness::NotWeaklyRegular { e, a } => {
                let a2 = ring.mul(*a, *a);
                let r = least_multiplier(ring, *e, *a).unwrap_or(*a);
                format!(
                    "e = {} is a nonunit idempotent; a = e*{} = {} lies in Re; a^2 = {}^2 = {}; a^2*x != a for every x",
                    show(*e),
                    ring.render(r),
                    show(*a),
                    ring.render(*a),
                    ring.render(a2)
                )
            }
            Witness::NoIdempotentGenerator { e, ideal } => {
                let members: Vec<String> = ideal.iter().map(|&i| ring.render(i)).collect();
                format!(
                    "ideal {{{}}} inside R*{} is not generated by an idempotent",
                    members.join(", "),
                    show(*e)
                )
            }
            Witness::Annihilation { a, x } => format!(
                "a = {} is a nonunit idempotent but a*x = {} != 0 for x = {}",
                show(*a),
                ring.render(ring.mul(*a, *x)),
                show(*x)
            ),
            Witness::Uncovered { a } => {
                format!("nonunit a = {} lies in no Re with e != 1 idempotent", show(*a))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub value: bool,
    pub method: VerdictMethod,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub(crate) fn holds(method: VerdictMethod) -> Verdict {
        Verdict {
            value: true,
            method,
            witness: None,
        }
    }

    pub(crate) fn fails(method: VerdictMethod, witness: Option<Witness>) -> Verdict {
        Verdict {
            value: false,
            method,
            witness,
        }
    }
}

/// Nonunit idempotents in ascending order.
pub fn nonunit_idempotents(ring: &FiniteRing) -> impl Iterator<Item = usize> + '_ {
    ring.idempotents().iter().copied().filter(|&e| !ring.is_unit(e))
}

/// VNR by search: every `a` has some `y` with `a = a²y`.
pub fn is_vnr(ring: &FiniteRing) -> Verdict {
    match ring.elements().find(|&a| !in_ra2(ring, a)) {
        Some(a) => Verdict::fails(VerdictMethod::BruteForce, Some(Witness::NotRegular { a })),
        None => Verdict::holds(VerdictMethod::BruteForce),
    }
}

/// VNR as reducedness; exact for finite rings.
pub fn is_vnr_via_reduced(ring: &FiniteRing) -> bool {
    ring.is_reduced()
}

/// VNR as "WVNR and every nonunit lies in `Re` for some idempotent `e ≠ 1`".
pub fn vnr_characterization(ring: &FiniteRing) -> Verdict {
    let wvnr = is_wvnr_element(ring);
    if !wvnr.value {
        return Verdict::fails(VerdictMethod::Characterization, wvnr.witness);
    }
    let nonunit_idems: Vec<usize> = nonunit_idempotents(ring).collect();
    let uncovered = ring
        .elements()
        .filter(|&a| !ring.is_unit(a))
        .find(|&a| !nonunit_idems.iter().any(|&e| in_principal_of_idempotent(ring, e, a)));
    match uncovered {
        Some(a) => Verdict::fails(VerdictMethod::Characterization, Some(Witness::Uncovered { a })),
        None => Verdict::holds(VerdictMethod::Characterization),
    }
}

/// WVNR by the element criterion: for every nonunit idempotent `e` and
/// every `a ∈ Re`, `a ∈ Ra²`. The witness is the first failing `(e, a)`.
pub fn is_wvnr_element(ring: &FiniteRing) -> Verdict {
    let mut memo: HashMap<usize, bool> = HashMap::new();
    for e in nonunit_idempotents(ring) {
        for a in principal_ideal(ring, e).iter() {
            let ok = *memo.entry(a).or_insert_with(|| in_ra2(ring, a));
            if !ok {
                return Verdict::fails(VerdictMethod::Element, Some(Witness::NotWeaklyRegular { e, a }));
            }
        }
    }
    Verdict::holds(VerdictMethod::Element)
}

fn check_oracle_cap(ring: &FiniteRing, oracle_cap: usize) -> Result<(), RingError> {
    if ring.size() > oracle_cap {
        Err(RingError::OracleCapExceeded {
            size: ring.size(),
            cap: oracle_cap,
        })
    } else {
        Ok(())
    }
}

/// WVNR from the definition: every ideal contained in `Re`, for `e` a
/// nonunit idempotent, is generated by an idempotent. In a finite ring every
/// ideal is finitely generated, so all ideals are quantified over.
pub fn is_wvnr_definitional(ring: &FiniteRing, oracle_cap: usize) -> Result<Verdict, RingError> {
    check_oracle_cap(ring, oracle_cap)?;
    let generators = IdempotentGenerators::new(ring);
    for e in nonunit_idempotents(ring) {
        let bound = principal_ideal(ring, e);
        for ideal in enumerate_ideals_within(ring, &bound, oracle_cap)? {
            if generators.find(&ideal).is_none() {
                return Ok(Verdict::fails(
                    VerdictMethod::Definitional,
                    Some(Witness::NoIdempotentGenerator { e, ideal: ideal.to_vec() }),
                ));
            }
        }
    }
    Ok(Verdict::holds(VerdictMethod::Definitional))
}

/// WVNR by direct summands: every `Ra` with `a ∈ Re`, `e` a nonunit
/// idempotent, has a complementary ideal.
pub fn is_wvnr_summand(ring: &FiniteRing, oracle_cap: usize) -> Result<Verdict, RingError> {
    check_oracle_cap(ring, oracle_cap)?;
    let ideals = all_ideals(ring, oracle_cap)?;
    let mut memo: HashMap<FixedBitSet, bool> = HashMap::new();
    for e in nonunit_idempotents(ring) {
        for a in principal_ideal(ring, e).iter() {
            let ra = principal_ideal(ring, a);
            let ok = *memo
                .entry(ra.elements().clone())
                .or_insert_with(|| has_complement_among(ring, &ra, &ideals));
            if !ok {
                return Ok(Verdict::fails(
                    VerdictMethod::Summand,
                    Some(Witness::NotWeaklyRegular { e, a }),
                ));
            }
        }
    }
    Ok(Verdict::holds(VerdictMethod::Summand))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_module, make_poly_quotient, make_product, make_trivial_extension, make_zmod};
    use crate::{ModuleSpec, DEFAULT_ORACLE_CAP as ORACLE, DEFAULT_SIZE_CAP as CAP};

    fn z(n: u64) -> FiniteRing {
        make_zmod(n, CAP).unwrap()
    }

    #[test]
    fn vnr_brute_force() {
        assert!(is_vnr(&z(6)).value);
        assert!(is_vnr(&z(5)).value);
        let v = is_vnr(&z(4));
        assert_eq!(v.witness, Some(Witness::NotRegular { a: 2 }));
        assert!(v.witness.unwrap().verify(&z(4)));
    }

    #[test]
    fn vnr_via_reduced() {
        assert!(!is_vnr_via_reduced(&z(12)));
        assert!(is_vnr_via_reduced(&z(30)));
        assert!(!is_vnr_via_reduced(&make_poly_quotient(z(2), &[0, 0, 1], CAP).unwrap()));
    }

    #[test]
    fn element_criterion_pinned_cases() {
        let r = z(12);
        let v = is_wvnr_element(&r);
        assert_eq!(v.witness, Some(Witness::NotWeaklyRegular { e: 9, a: 6 }));
        assert!(!v.value && v.witness.as_ref().unwrap().verify(&r));

        assert!(is_wvnr_element(&z(6)).value);

        let r = make_product(vec![z(4), z(9)], CAP).unwrap();
        let Some(Witness::NotWeaklyRegular { e, a }) = is_wvnr_element(&r).witness else {
            panic!("expected a witness")
        };
        assert_eq!((r.render(e).as_str(), r.render(a).as_str()), ("(1,0)", "(2,0)"));
    }

    #[test]
    fn definitional_oracle() {
        let r = z(12);
        let v = is_wvnr_definitional(&r, ORACLE).unwrap();
        assert_eq!(v.witness, Some(Witness::NoIdempotentGenerator { e: 9, ideal: vec![0, 6] }));
        assert!(v.witness.unwrap().verify(&r));
        assert!(is_wvnr_definitional(&z(4), ORACLE).unwrap().value);
        assert!(is_wvnr_definitional(&make_product(vec![z(2), z(2)], CAP).unwrap(), ORACLE).unwrap().value);
        assert!(matches!(
            is_wvnr_definitional(&z(300), ORACLE),
            Err(RingError::OracleCapExceeded { size: 300, cap: 256 })
        ));
    }

    #[test]
    fn summand_oracle() {
        for (ring, expected) in [
            (z(12), false),
            (z(6), true),
            (make_product(vec![z(4), z(9)], CAP).unwrap(), false),
            (z(8), true),
        ] {
            let v = is_wvnr_summand(&ring, ORACLE).unwrap();
            assert_eq!(v.value, expected, "{:?}", ring);
            assert_eq!(v.value, is_wvnr_element(&ring).value);
        }
    }

    #[test]
    fn characterization() {
        assert!(vnr_characterization(&z(6)).value);
        assert!(vnr_characterization(&z(3)).value);
        let r = z(4);
        let v = vnr_characterization(&r);
        assert!(!v.value);
        assert_eq!(v.witness, Some(Witness::Uncovered { a: 2 }));
        assert!(v.witness.unwrap().verify(&r));
    }

    #[test]
    fn witnesses_reject_wrong_rings() {
        let w = Witness::NotWeaklyRegular { e: 9, a: 6 };
        assert!(w.verify(&z(12)));
        assert!(!w.verify(&z(10)));
        assert!(!Witness::NotWeaklyRegular { e: 4, a: 4 }.verify(&z(12)));
        let r = make_trivial_extension(z(6), make_module(&z(6), &ModuleSpec::free(1), CAP).unwrap(), CAP).unwrap();
        // (3,0) has index 3 and (0,1) has index 6.
        assert!(Witness::Annihilation { a: 3, x: 6 }.verify(&r));
        assert!(!Witness::Annihilation { a: 3, x: 6 }.verify(&z(36)));
    }
}
