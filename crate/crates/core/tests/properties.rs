use std::sync::OnceLock;

use proptest::prelude::*;

use finring::deciders::{is_vnr, is_vnr_via_reduced, is_wvnr_element};
use finring::expr::{parse, realize, tokenize, unparse, ModAtom, ModuleExpr, PolyExpr, PolyTerm, RingExpr, Span};
use finring::harness::{mixed_corpus, Case};
use finring::ideals::{
    generated_ideal, idempotent_generator, ideal_intersect, ideal_sum, is_direct_summand, principal_ideal,
};
use finring::ring::TableRing;
use finring::{check_ring_axioms, DEFAULT_ORACLE_CAP, DEFAULT_SIZE_CAP};

const PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn span() -> Span {
    Span::default()
}

fn poly_term() -> impl Strategy<Value = PolyTerm> {
    (any::<bool>(), proptest::option::of(1u64..20), proptest::option::of(1u64..6)).prop_map(
        |(negative, coeff, power)| {
            // A bare constant is always written with its coefficient.
            let coeff = if power.is_none() { Some(coeff.unwrap_or(1)) } else { coeff };
            PolyTerm {
                negative,
                coeff,
                power,
                span: span(),
            }
        },
    )
}

fn poly() -> impl Strategy<Value = PolyExpr> {
    (poly_term(), proptest::collection::vec(poly_term(), 0..4)).prop_map(|(first, rest)| {
        let mut terms = vec![first];
        terms.extend(rest);
        PolyExpr { terms, span: span() }
    })
}

fn mod_atom() -> impl Strategy<Value = ModAtom> {
    prop_oneof![
        Just(ModAtom::Free { span: span() }),
        (0u64..5).prop_map(|exponent| ModAtom::Power { exponent, span: span() }),
        proptest::collection::vec(0u64..30, 1..3).prop_map(|annihilators| ModAtom::Quotient {
            annihilators,
            span: span()
        }),
    ]
}

fn module() -> impl Strategy<Value = ModuleExpr> {
    proptest::collection::vec(mod_atom(), 1..4).prop_map(|atoms| ModuleExpr { atoms, span: span() })
}

fn ring_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![
        (0u64..1000).prop_map(|n| RingExpr::Zmod { n, span: span() }),
        proptest::sample::select(&PRIMES[..]).prop_map(|p| RingExpr::Gf { p, span: span() }),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            proptest::collection::vec(inner.clone(), 2..4).prop_map(|factors| RingExpr::Product {
                factors,
                span: span()
            }),
            (inner.clone(), poly()).prop_map(|(base, modulus)| RingExpr::Quotient {
                base: Box::new(base),
                modulus,
                span: span()
            }),
            (inner, module()).prop_map(|(base, module)| RingExpr::Trivial {
                base: Box::new(base),
                module,
                span: span()
            }),
        ]
    })
}

fn depth(e: &RingExpr) -> usize {
    match e {
        RingExpr::Zmod { .. } | RingExpr::Gf { .. } => 0,
        RingExpr::Product { factors, .. } => 1 + factors.iter().map(depth).max().unwrap_or(0),
        RingExpr::Quotient { base, .. } | RingExpr::Trivial { base, .. } => 1 + depth(base),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn parse_inverts_unparse(ast in ring_expr()) {
        prop_assume!(depth(&ast) <= 4);
        let text = unparse(&ast);
        let reparsed = parse(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert!(reparsed.same_structure(&ast), "{}", text);
        prop_assert!(reparsed.spans_nest());
        prop_assert_eq!(unparse(&reparsed), text);
    }
}

proptest! {
    #[test]
    fn parse_errors_point_inside_input(text in "[ -~]{0,24}") {
        if let Err(e) = parse(&text) {
            prop_assert!(e.offset <= text.len());
        }
    }

    #[test]
    fn lexing_is_total_with_increasing_offsets(text in "\\PC{0,32}") {
        let tokens = tokenize(&text);
        prop_assert!(tokens.windows(2).all(|w| w[0].offset < w[1].offset));
        prop_assert_eq!(tokens.last().unwrap().offset, text.len());
    }
}

fn corpus() -> &'static [Case] {
    static CORPUS: OnceLock<Vec<Case>> = OnceLock::new();
    CORPUS.get_or_init(|| mixed_corpus(32))
}

fn case_and_elements(k: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..corpus().len()).prop_flat_map(move |i| {
        let size = corpus()[i].ring.size();
        (Just(i), proptest::collection::vec(0..size, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn codec_round_trips((i, elems) in case_and_elements(4)) {
        let ring = &corpus()[i].ring;
        for a in elems {
            prop_assert_eq!(ring.encode(&ring.decode(a)), Some(a));
        }
    }

    #[test]
    fn reduced_iff_vnr(i in 0..corpus().len()) {
        let ring = &corpus()[i].ring;
        prop_assert_eq!(is_vnr_via_reduced(ring), is_vnr(ring).value);
        prop_assert_eq!(ring.structure().reduced(), ring.structure().nilpotents().count_ones(..) == 1);
    }

    #[test]
    fn idempotent_structure(i in 0..corpus().len()) {
        let ring = &corpus()[i].ring;
        let idems = ring.idempotents();
        prop_assert!(idems.contains(&ring.zero()) && idems.contains(&ring.one()));
        // Idempotents are closed under u + v - uv and uv.
        for &u in idems {
            for &v in idems {
                let uv = ring.mul(u, v);
                prop_assert!(ring.is_idempotent(ring.sub(ring.add(u, v), uv)));
                prop_assert!(ring.is_idempotent(uv));
            }
        }
        // The only idempotent unit is one.
        let unit_idems: Vec<usize> = idems.iter().copied().filter(|&e| ring.is_unit(e)).collect();
        prop_assert_eq!(unit_idems, vec![ring.one()]);
    }

    #[test]
    fn two_idempotents_imply_wvnr(i in 0..corpus().len()) {
        let ring = &corpus()[i].ring;
        if ring.has_exactly_two_idempotents() {
            prop_assert!(is_wvnr_element(ring).value);
        }
        if is_vnr(ring).value {
            prop_assert!(is_wvnr_element(ring).value);
        }
    }

    #[test]
    fn principal_ideals((i, elems) in case_and_elements(2)) {
        let ring = &corpus()[i].ring;
        let (a, b) = (elems[0], elems[1]);
        let ra = principal_ideal(ring, a);
        prop_assert_eq!(&generated_ideal(ring, &[a]), &ra);
        prop_assert!(ra.satisfies_invariants());
        let rb = principal_ideal(ring, b);
        let sum = ideal_sum(&ra, &rb);
        prop_assert_eq!(&sum, &generated_ideal(ring, &[a, b]));
        let meet = ideal_intersect(&ra, &rb);
        prop_assert!(meet.is_subset(&ra) && meet.is_subset(&rb) && meet.satisfies_invariants());
    }

    #[test]
    fn idempotent_generator_iff_direct_summand((i, elems) in case_and_elements(1)) {
        let ring = &corpus()[i].ring;
        let ideal = principal_ideal(ring, elems[0]);
        let generated = idempotent_generator(ring, &ideal);
        let summand = is_direct_summand(ring, &ideal, DEFAULT_ORACLE_CAP).unwrap();
        prop_assert_eq!(generated.is_some(), summand);
        if let Some(e) = generated {
            prop_assert!(ring.is_idempotent(e));
            prop_assert_eq!(&principal_ideal(ring, e), &ideal);
        }
    }

    #[test]
    fn crt_mirror(a in 2u64..9, b in 2u64..9) {
        let product = realize(&format!("Z/{a} * Z/{b}"), DEFAULT_SIZE_CAP).unwrap();
        let cyclic = realize(&format!("Z/{}", a * b), DEFAULT_SIZE_CAP).unwrap();
        if gcd(a, b) == 1 {
            prop_assert_eq!(product.idempotents().len(), cyclic.idempotents().len());
            prop_assert_eq!(is_wvnr_element(&product).value, is_wvnr_element(&cyclic).value);
            prop_assert_eq!(is_vnr(&product).value, is_vnr(&cyclic).value);
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn axioms_hold_exhaustively_on_corpus() {
    for case in corpus() {
        let size = case.ring.size() as u64;
        let report = check_ring_axioms(&case.ring, size.pow(3));
        assert!(report.exhaustive, "{}", case.expr);
        assert!(report.passed(), "{}: {:?}", case.expr, report.violation);
    }
    for expr in ["Z/64", "Z/8 * Z/8", "GF(2)[x]/(x^6+x+1)", "triv(Z/8, self^1)", "triv(Z/4, self/(2) (+) self)"] {
        let ring = realize(expr, DEFAULT_SIZE_CAP).unwrap();
        let report = check_ring_axioms(&ring, 64 * 64 * 64);
        assert!(report.exhaustive && report.passed(), "{expr}");
    }
}

#[test]
fn corrupted_table_fails_axioms() {
    let z4 = realize("Z/4", DEFAULT_SIZE_CAP).unwrap();
    let mut table = TableRing::from_ring(&z4);
    table.set_mul(2, 2, 1);
    let report = check_ring_axioms(&table, 64);
    assert!(!report.passed());
    let report = check_ring_axioms(&table, 10);
    assert!(!report.exhaustive);
}

#[test]
fn modules_satisfy_axioms() {
    for case in mixed_corpus(64).iter().filter(|c| c.ring.trivial_parts().is_some()) {
        let (_, module) = case.ring.trivial_parts().unwrap();
        module.check_axioms().unwrap_or_else(|e| panic!("{}: {e}", case.expr));
    }
}

#[test]
fn elaboration_is_deterministic() {
    for case in corpus().iter().step_by(7) {
        let again = realize(&case.expr, DEFAULT_SIZE_CAP).unwrap();
        assert_eq!(again.descriptor(), case.ring.descriptor());
        for i in again.elements() {
            assert_eq!(again.decode(i), case.ring.decode(i));
            assert_eq!(again.mul(i, (i * 7) % again.size()), case.ring.mul(i, (i * 7) % again.size()));
        }
    }
}
