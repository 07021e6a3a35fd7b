use std::collections::BTreeMap;
use std::fmt;

use super::{ModAtom, ModuleExpr, PolyExpr, RingExpr, Span};
use crate::constructions::{
    make_module, make_poly_quotient, make_product, make_trivial_extension, make_zmod, CyclicSpec, ModuleSpec,
    RingDescriptor,
};
use crate::error::RingError;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElabError {
    /// Source range of the construct that failed.
    pub span: Span,
    pub error: RingError,
}

impl fmt::Display for ElabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.span.start, self.error)
    }
}

impl std::error::Error for ElabError {}

fn at(span: Span) -> impl Fn(RingError) -> ElabError {
    move |error| ElabError { span, error }
}

/// Realizes an expression, enforcing `size_cap` on every intermediate ring.
pub fn elaborate(expr: &RingExpr, size_cap: usize) -> Result<FiniteRing, ElabError> {
    match expr {
        RingExpr::Zmod { n, span } | RingExpr::Gf { p: n, span } => make_zmod(*n, size_cap).map_err(at(*span)),
        RingExpr::Product { factors, span } => {
            let rings = factors
                .iter()
                .map(|f| elaborate(f, size_cap))
                .collect::<Result<Vec<_>, _>>()?;
            make_product(rings, size_cap).map_err(at(*span))
        }
        RingExpr::Quotient { base, modulus, .. } => {
            let base = elaborate(base, size_cap)?;
            let coeffs = modulus_coefficients(&base, modulus, size_cap)?;
            make_poly_quotient(base, &coeffs, size_cap).map_err(at(modulus.span))
        }
        RingExpr::Trivial { base, module, span } => {
            let base = elaborate(base, size_cap)?;
            let spec = module_spec(module, size_cap)?;
            let module = make_module(&base, &spec, size_cap).map_err(at(module.span))?;
            make_trivial_extension(base, module, size_cap).map_err(at(*span))
        }
    }
}

fn signed(value: u64, negative: bool, span: Span) -> Result<i64, ElabError> {
    let v = i64::try_from(value).map_err(|_| ElabError {
        span,
        error: RingError::LiteralOverflow(value.to_string()),
    })?;
    Ok(if negative { -v } else { v })
}

/// Collects integer coefficients by exponent, dropping exponents whose
/// coefficient vanishes in `base`, and rejects degrees whose realized size
/// would exceed the cap before allocating a dense coefficient vector.
fn modulus_coefficients(base: &FiniteRing, poly: &PolyExpr, size_cap: usize) -> Result<Vec<i64>, ElabError> {
    let mut by_power: BTreeMap<u64, i64> = BTreeMap::new();
    for term in &poly.terms {
        let c = signed(term.coeff.unwrap_or(1), term.negative, term.span)?;
        let slot = by_power.entry(term.power.unwrap_or(0)).or_insert(0);
        *slot = slot.checked_add(c).ok_or_else(|| ElabError {
            span: term.span,
            error: RingError::LiteralOverflow(format!("{slot} + {c}")),
        })?;
    }
    by_power.retain(|_, c| base.from_int(*c) != base.zero());
    let degree = by_power.keys().next_back().copied().unwrap_or(0);
    let computed = (base.size() as u128).saturating_pow(u32::try_from(degree).unwrap_or(u32::MAX));
    if degree >= 1 && computed > size_cap as u128 {
        return Err(ElabError {
            span: poly.span,
            error: RingError::SizeOverflow { computed, cap: size_cap },
        });
    }
    let mut dense = vec![0i64; degree as usize + 1];
    for (power, c) in by_power {
        dense[power as usize] = c;
    }
    Ok(dense)
}

fn module_spec(module: &ModuleExpr, size_cap: usize) -> Result<ModuleSpec, ElabError> {
    let mut components = Vec::new();
    for atom in &module.atoms {
        match atom {
            ModAtom::Free { .. } => components.push(CyclicSpec { annihilators: vec![] }),
            ModAtom::Power { exponent, span } => {
                // Every base has at least two elements, so rank > 64 exceeds any usize cap.
                if *exponent > 64 {
                    return Err(ElabError {
                        span: *span,
                        error: RingError::SizeOverflow {
                            computed: 2u128.saturating_pow(*exponent as u32),
                            cap: size_cap,
                        },
                    });
                }
                components.extend((0..*exponent).map(|_| CyclicSpec { annihilators: vec![] }));
            }
            ModAtom::Quotient { annihilators, span } => components.push(CyclicSpec {
                annihilators: annihilators
                    .iter()
                    .map(|&g| signed(g, false, *span))
                    .collect::<Result<_, _>>()?,
            }),
        }
    }
    Ok(ModuleSpec { components })
}

/// The ring recipe an expression denotes, without realizing it.
/// `GF(p)` becomes `Z/p`; polynomial coefficients are kept as written,
/// combined by exponent. Degrees and module ranks are bounded by `size_cap`
/// the same way elaboration bounds them.
pub fn to_descriptor(expr: &RingExpr, size_cap: usize) -> Result<RingDescriptor, ElabError> {
    Ok(match expr {
        RingExpr::Zmod { n, .. } | RingExpr::Gf { p: n, .. } => RingDescriptor::Zmod(*n),
        RingExpr::Product { factors, .. } => {
            RingDescriptor::Product(
                factors
                    .iter()
                    .map(|f| to_descriptor(f, size_cap))
                    .collect::<Result<_, _>>()?,
            )
        }
        RingExpr::Quotient { base, modulus, .. } => {
            let mut by_power: BTreeMap<u64, i64> = BTreeMap::new();
            for term in &modulus.terms {
                let c = signed(term.coeff.unwrap_or(1), term.negative, term.span)?;
                let slot = by_power.entry(term.power.unwrap_or(0)).or_insert(0);
                *slot = slot.saturating_add(c);
            }
            by_power.retain(|_, c| *c != 0);
            let degree = by_power.keys().next_back().copied().unwrap_or(0);
            if degree > 64 {
                return Err(ElabError {
                    span: modulus.span,
                    error: RingError::SizeOverflow {
                        computed: 2u128.saturating_pow(degree.min(u32::MAX as u64) as u32),
                        cap: size_cap,
                    },
                });
            }
            let mut dense = vec![0i64; degree as usize + 1];
            for (power, c) in by_power {
                dense[power as usize] = c;
            }
            RingDescriptor::PolyQuotient {
                base: Box::new(to_descriptor(base, size_cap)?),
                modulus: dense,
            }
        }
        RingExpr::Trivial { base, module, .. } => RingDescriptor::TrivialExt {
            base: Box::new(to_descriptor(base, size_cap)?),
            module: module_spec(module, size_cap)?,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, realize};
    use crate::DEFAULT_SIZE_CAP as CAP;

    fn elab(text: &str) -> Result<FiniteRing, ElabError> {
        elaborate(&parse(text).unwrap(), CAP)
    }

    #[test]
    fn realizes_rings() {
        let gf4 = elab("GF(2)[x]/(x^2+x+1)").unwrap();
        assert_eq!(gf4.size(), 4);
        assert_eq!(gf4.idempotents(), &[0, 1]);
        assert_eq!(elab("triv(Z/6, self)").unwrap().size(), 36);
        assert_eq!(elab("triv(Z/4, self/(2) (+) self^2)").unwrap().size(), 2 * 4 * 4 * 4);
        assert_eq!(elab("(Z/2 * Z/3)[x]/(x^2)").unwrap().size(), 36);
        // Negative coefficients reduce modulo the characteristic.
        assert_eq!(elab("Z/5[x]/(x^2-1)").unwrap().size(), 25);
    }

    #[test]
    fn non_monic_modulus() {
        let text = "Z/6[x]/(2*x^2+1)";
        let err = elab(text).unwrap_err();
        assert_eq!(err.error, RingError::NonMonic { leading: "2".into() });
        assert_eq!(err.span.start, 8);
    }

    #[test]
    fn size_overflow_reports_computed_size() {
        let err = elab("Z/64 * Z/65").unwrap_err();
        assert_eq!(err.error, RingError::SizeOverflow { computed: 4160, cap: CAP });
        assert_eq!(err.span.start, 0);

        let err = elab("Z/2[x]/(x^100+1)").unwrap_err();
        assert!(matches!(err.error, RingError::SizeOverflow { .. }));
        assert_eq!(err.span.start, 8);

        let err = elab("triv(Z/16, self^3)").unwrap_err();
        assert!(matches!(err.error, RingError::SizeOverflow { computed: 65536, .. }));
        assert_eq!(err.span.start, 0);

        let err = elab("triv(Z/16, self^4)").unwrap_err();
        assert!(matches!(err.error, RingError::SizeOverflow { computed: 65536, .. }));
        assert_eq!(err.span.start, 11);
    }

    #[test]
    fn small_moduli_rejected() {
        let err = elab("Z/2 * Z/1").unwrap_err();
        assert_eq!(err.error, RingError::ModulusTooSmall(1));
        assert_eq!(err.span.start, 6);
    }

    #[test]
    fn elaboration_is_deterministic() {
        for text in ["triv(Z/4, self/(2))", "GF(3)[x]/(x^2+1) * Z/2"] {
            let a = realize(text, CAP).unwrap();
            let b = realize(text, CAP).unwrap();
            assert_eq!(a.descriptor(), b.descriptor());
            assert_eq!(a.size(), b.size());
            for i in a.elements() {
                assert_eq!(a.decode(i), b.decode(i));
            }
        }
    }

    #[test]
    fn descriptors_round_trip_through_text() {
        for text in ["Z/12", "Z/2 * Z/3", "triv(Z/4, self/(2))", "(Z/2 * Z/2)[x]/(x^2-1)", "GF(2)[x]/(x^2+x+1)"] {
            let d = to_descriptor(&parse(text).unwrap(), CAP).unwrap();
            let again = to_descriptor(&parse(&d.to_string()).unwrap(), CAP).unwrap();
            assert_eq!(d, again, "{text}");
        }
    }
}
