//! Structural WVNR criteria that avoid searching the whole ring.

use super::factor::{factor_int, factor_poly, is_prime, FpPoly};
use super::{is_vnr, is_wvnr_element, nonunit_idempotents, Verdict, VerdictMethod, Witness};
use crate::constructions::{FiniteModule, RingDescriptor};
use crate::error::RingError;
use crate::ring::FiniteRing;

/// `Z/n` is WVNR iff `n` is a prime power or squarefree.
pub fn zmod_wvnr_structural(n: u64) -> Result<bool, RingError> {
    let f = factor_int(n)?;
    Ok(f.is_prime_power() || f.is_squarefree())
}

/// `GF(p)[x]/(f)` is WVNR iff `f` is a power of one irreducible or squarefree.
pub fn polyquot_wvnr_structural(p: u64, f: &FpPoly) -> Result<bool, RingError> {
    let fact = factor_poly(p, f)?;
    Ok(fact.is_prime_power() || fact.is_squarefree())
}

/// Whether `nZ` is a primary ideal of `Z`: `n = 0` or a prime power.
pub fn is_primary_int(n: u64) -> bool {
    match n {
        0 => true,
        1 => false,
        n => factor_int(n).map(|f| f.is_prime_power()).unwrap_or(false),
    }
}

/// Whether `(f)` is a primary ideal of `GF(p)[x]`: `f = 0` or a unit times a
/// power of a single irreducible.
pub fn is_primary_poly(p: u64, f: &FpPoly) -> Result<bool, RingError> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    match f.degree() {
        None => Ok(true),
        Some(0) => Ok(false),
        Some(_) => Ok(factor_poly(p, f)?.is_prime_power()),
    }
}

/// Classifies `R[x]`, `R[x_1, .., x_n]` and `R[[x]]` (all infinite): each is
/// WVNR iff `R` has exactly two idempotents.
pub fn polynomial_extension_wvnr(ring: &FiniteRing) -> Verdict {
    Verdict {
        value: ring.has_exactly_two_idempotents(),
        method: VerdictMethod::TwoIdempotent,
        witness: None,
    }
}

/// `A ⋉ E` is WVNR iff `A` is WVNR and `aE = 0` for every nonunit idempotent
/// `a` of `A`. Witness indices are in the `A ⋉ E` encoding
/// (`index(a) + |A| * index(x)`), so they verify against the extension ring.
pub fn trivial_ext_wvnr_structural(base: &FiniteRing, module: &FiniteModule) -> Verdict {
    let method = VerdictMethod::TrivialExt;
    let base_verdict = is_wvnr_element(base);
    if !base_verdict.value {
        // (e,0) and (a,0) share indices with e and a.
        return Verdict::fails(method, base_verdict.witness);
    }
    for a in nonunit_idempotents(base) {
        if let Some(x) = module.elements().find(|&x| module.scale(a, x) != module.zero()) {
            return Verdict::fails(method, Some(Witness::Annihilation { a, x: x * base.size() }));
        }
    }
    Verdict::holds(method)
}

/// For a direct product: WVNR iff every factor is VNR. `None` for other rings.
pub fn product_wvnr_structural(ring: &FiniteRing) -> Option<Verdict> {
    let factors = ring.product_factors()?;
    let mut stride = 1;
    for factor in factors {
        if let Verdict {
            value: false,
            witness: Some(Witness::NotRegular { a: r }),
            ..
        } = is_vnr(factor)
        {
            // e_i has one in the i-th place, a has r there; zeros elsewhere.
            let e = stride * factor.one();
            let a = stride * r;
            return Some(Verdict::fails(VerdictMethod::Product, Some(Witness::NotWeaklyRegular { e, a })));
        }
        stride *= factor.size();
    }
    Some(Verdict::holds(VerdictMethod::Product))
}

/// Factorization-based verdict for `Z/n` and `GF(p)[x]/(f)`; `None` for
/// other rings.
pub fn structural_wvnr(ring: &FiniteRing) -> Option<Verdict> {
    let value = match ring.descriptor() {
        RingDescriptor::Zmod(n) => zmod_wvnr_structural(*n).ok()?,
        RingDescriptor::PolyQuotient { base, modulus } => match **base {
            RingDescriptor::Zmod(p) if is_prime(p) => polyquot_wvnr_structural(p, &FpPoly::new(p, modulus)).ok()?,
            _ => return None,
        },
        _ => return None,
    };
    Some(Verdict {
        value,
        method: VerdictMethod::Structural,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{make_module, make_zmod};
    use crate::{make_product, ModuleSpec, DEFAULT_SIZE_CAP as CAP};

    fn z(n: u64) -> FiniteRing {
        make_zmod(n, CAP).unwrap()
    }

    #[test]
    fn zmod_structural() {
        assert!(!zmod_wvnr_structural(12).unwrap());
        assert!(zmod_wvnr_structural(8).unwrap());
        assert!(zmod_wvnr_structural(30).unwrap());
        assert!(zmod_wvnr_structural(1).is_err());
    }

    #[test]
    fn polyquot_structural() {
        assert!(polyquot_wvnr_structural(2, &FpPoly::new(2, &[0, 0, 1])).unwrap());
        assert!(!polyquot_wvnr_structural(2, &FpPoly::new(2, &[0, 0, 1, 1])).unwrap());
        assert!(polyquot_wvnr_structural(3, &FpPoly::new(3, &[0, 1, 1])).unwrap());
    }

    #[test]
    fn primary_ideals() {
        assert!(is_primary_int(9));
        assert!(!is_primary_int(6));
        assert!(is_primary_int(0));
        assert!(!is_primary_int(1));
        // (x+1)^3 = x^3 + x^2 + x + 1 over GF(2)
        assert!(is_primary_poly(2, &FpPoly::new(2, &[1, 1, 1, 1])).unwrap());
        assert!(!is_primary_poly(2, &FpPoly::new(2, &[0, 1, 1])).unwrap());
        assert!(!is_primary_poly(2, &FpPoly::new(2, &[1])).unwrap());
        assert!(is_primary_poly(6, &FpPoly::new(6, &[1, 1])).is_err());
    }

    #[test]
    fn polynomial_extensions() {
        assert!(!polynomial_extension_wvnr(&z(6)).value);
        assert!(polynomial_extension_wvnr(&z(4)).value);
        assert!(polynomial_extension_wvnr(&z(7)).value);
    }

    #[test]
    fn trivial_extension_criterion() {
        let a = z(6);
        let e = make_module(&a, &ModuleSpec::free(1), CAP).unwrap();
        let v = trivial_ext_wvnr_structural(&a, &e);
        // (3,0) and (0,1)
        assert_eq!(v.witness, Some(Witness::Annihilation { a: 3, x: 6 }));

        let a = z(4);
        let e = make_module(&a, &ModuleSpec::cyclic(vec![2]), CAP).unwrap();
        assert!(trivial_ext_wvnr_structural(&a, &e).value);

        let a = z(9);
        let e = make_module(&a, &ModuleSpec::free(2), CAP).unwrap();
        assert!(trivial_ext_wvnr_structural(&a, &e).value);
    }

    #[test]
    fn product_criterion() {
        let r = make_product(vec![z(4), z(3)], CAP).unwrap();
        let v = product_wvnr_structural(&r).unwrap();
        assert!(!v.value);
        assert!(v.witness.unwrap().verify(&r));
        assert!(product_wvnr_structural(&make_product(vec![z(2), z(15)], CAP).unwrap()).unwrap().value);
        assert!(product_wvnr_structural(&z(6)).is_none());
    }
}
