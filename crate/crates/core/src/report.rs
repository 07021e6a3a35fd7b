//! Per-ring classification: every applicable decider run on one ring,
//! cross-checked, with re-verified witnesses.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::constructions::RingDescriptor;
use crate::deciders::factor::{factor_int, factor_poly, is_prime, FpPoly};
use crate::deciders::{
    is_vnr, is_vnr_via_reduced, is_wvnr_definitional, is_wvnr_element, is_wvnr_summand,
    polynomial_extension_wvnr, product_wvnr_structural, structural_wvnr, trivial_ext_wvnr_structural,
    vnr_characterization, Verdict, VerdictMethod, Witness,
};
use crate::error::RingError;
use crate::ring::FiniteRing;

/// Idempotents listed in a report; the count is always exact.
pub const SHOWN_IDEMPOTENTS: usize = 32;

pub const EXTENSION_NOTE: &str =
    "classifies R[x], R[x1..xn], R[[x]] by criterion: WVNR iff R has exactly two idempotents";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementView {
    pub index: usize,
    pub value: String,
}

impl ElementView {
    fn new(ring: &FiniteRing, index: usize) -> ElementView {
        ElementView {
            index,
            value: ring.render(index),
        }
    }
}

impl fmt::Display for ElementView {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [#{}]", self.value, self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedElement {
    pub name: &'static str,
    #[serde(flatten)]
    pub element: ElementView,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessView {
    pub kind: &'static str,
    pub elements: Vec<NamedElement>,
    /// Members of the offending ideal, for definitional witnesses.
    pub ideal: Option<Vec<ElementView>>,
    pub trace: String,
    pub verified: bool,
}

impl WitnessView {
    pub fn new(ring: &FiniteRing, witness: &Witness) -> WitnessView {
        let named = |name, index| NamedElement {
            name,
            element: ElementView::new(ring, index),
        };
        let (kind, elements, ideal) = match witness {
            Witness::NotRegular { a } => ("not-regular", vec![named("a", *a)], None),
            Witness::NotWeaklyRegular { e, a } => ("not-weakly-regular", vec![named("e", *e), named("a", *a)], None),
            Witness::NoIdempotentGenerator { e, ideal } => (
                "no-idempotent-generator",
                vec![named("e", *e)],
                Some(ideal.iter().map(|&i| ElementView::new(ring, i)).collect()),
            ),
            Witness::Annihilation { a, x } => ("annihilation", vec![named("a", *a), named("x", *x)], None),
            Witness::Uncovered { a } => ("uncovered", vec![named("a", *a)], None),
        };
        WitnessView {
            kind,
            elements,
            ideal,
            trace: witness.describe(ring),
            verified: witness.verify(ring),
        }
    }

    /// Dense index of the element called `name`.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().find(|e| e.name == name).map(|e| e.element.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MethodStatus {
    Ran,
    /// Ring larger than the oracle cap; rerun with `--oracle`.
    Skipped,
    CapExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MethodResult {
    pub method: VerdictMethod,
    pub status: MethodStatus,
    pub value: Option<bool>,
    pub witness: Option<WitnessView>,
}

impl MethodResult {
    fn ran(ring: &FiniteRing, verdict: &Verdict) -> MethodResult {
        MethodResult {
            method: verdict.method,
            status: MethodStatus::Ran,
            value: Some(verdict.value),
            witness: verdict.witness.as_ref().map(|w| WitnessView::new(ring, w)),
        }
    }

    fn bare(method: VerdictMethod, value: bool) -> MethodResult {
        MethodResult {
            method,
            status: MethodStatus::Ran,
            value: Some(value),
            witness: None,
        }
    }

    fn not_run(method: VerdictMethod, status: MethodStatus) -> MethodResult {
        MethodResult {
            method,
            status,
            value: None,
            witness: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdicts {
    /// Common value of every method that ran; `None` when they disagree.
    pub value: Option<bool>,
    pub agree: bool,
    pub methods: Vec<MethodResult>,
}

impl PropertyVerdicts {
    fn new(methods: Vec<MethodResult>) -> PropertyVerdicts {
        let mut values = methods.iter().filter_map(|m| m.value);
        let first = values.next();
        let agree = values.all(|v| Some(v) == first);
        PropertyVerdicts {
            value: if agree { first } else { None },
            agree,
            methods,
        }
    }

    fn witnesses_verified(&self) -> bool {
        self.methods
            .iter()
            .filter_map(|m| m.witness.as_ref())
            .all(|w| w.verified)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionVerdict {
    pub value: bool,
    pub method: VerdictMethod,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub input: String,
    pub canonical: String,
    pub size: usize,
    pub idempotent_count: usize,
    pub idempotents: Vec<ElementView>,
    pub vnr: PropertyVerdicts,
    pub wvnr: PropertyVerdicts,
    /// Some methods disagree or a witness failed to re-verify.
    pub disagreement: bool,
    pub facts: Vec<String>,
    pub polynomial_extension: ExtensionVerdict,
    pub elapsed_ms: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Largest ring the definitional and summand oracles run on.
    pub oracle_cap: usize,
    pub timing: bool,
}

impl ClassificationReport {
    /// Whether an oracle was requested but the ring exceeded its cap.
    pub fn oracle_cap_exceeded(&self) -> bool {
        self.wvnr.methods.iter().any(|m| m.status == MethodStatus::CapExceeded)
    }

    pub fn wvnr_method(&self, method: VerdictMethod) -> Option<&MethodResult> {
        self.wvnr.methods.iter().find(|m| m.method == method)
    }
}

fn oracle(
    ring: &FiniteRing,
    method: VerdictMethod,
    oracle_cap: usize,
    skipped: bool,
    run: impl FnOnce(&FiniteRing, usize) -> Result<Verdict, RingError>,
) -> MethodResult {
    if skipped {
        return MethodResult::not_run(method, MethodStatus::Skipped);
    }
    match run(ring, oracle_cap) {
        Ok(v) => MethodResult::ran(ring, &v),
        Err(_) => MethodResult::not_run(method, MethodStatus::CapExceeded),
    }
}

/// Runs every applicable decider on `ring`. The element method always runs;
/// the ideal oracles run when `ring.size() <= options.oracle_cap`.
/// `force_oracle` runs them regardless, reporting `cap-exceeded` if the
/// ring is too large for them anyway.
pub fn classify(input: &str, ring: &FiniteRing, options: ClassifyOptions, force_oracle: bool) -> ClassificationReport {
    let start = Instant::now();

    let vnr = PropertyVerdicts::new(vec![
        MethodResult::ran(ring, &is_vnr(ring)),
        MethodResult::bare(VerdictMethod::Reduced, is_vnr_via_reduced(ring)),
        MethodResult::ran(ring, &vnr_characterization(ring)),
    ]);

    let skip_oracles = ring.size() > options.oracle_cap && !force_oracle;
    let mut methods = vec![
        MethodResult::ran(ring, &is_wvnr_element(ring)),
        oracle(ring, VerdictMethod::Definitional, options.oracle_cap, skip_oracles, is_wvnr_definitional),
        oracle(ring, VerdictMethod::Summand, options.oracle_cap, skip_oracles, is_wvnr_summand),
    ];
    if let Some(v) = structural_wvnr(ring) {
        methods.push(MethodResult::ran(ring, &v));
    }
    if let Some(v) = product_wvnr_structural(ring) {
        methods.push(MethodResult::ran(ring, &v));
    }
    if let Some((base, module)) = ring.trivial_parts() {
        methods.push(MethodResult::ran(ring, &trivial_ext_wvnr_structural(base, module)));
    }
    if ring.has_exactly_two_idempotents() {
        methods.push(MethodResult::bare(VerdictMethod::TwoIdempotent, true));
    }
    let wvnr = PropertyVerdicts::new(methods);

    let disagreement = !vnr.agree || !wvnr.agree || !vnr.witnesses_verified() || !wvnr.witnesses_verified();
    let ext = polynomial_extension_wvnr(ring);
    let idempotents = ring.idempotents();

    let mut report = ClassificationReport {
        input: input.to_string(),
        canonical: ring.descriptor().to_string(),
        size: ring.size(),
        idempotent_count: idempotents.len(),
        idempotents: idempotents
            .iter()
            .take(SHOWN_IDEMPOTENTS)
            .map(|&i| ElementView::new(ring, i))
            .collect(),
        vnr,
        wvnr,
        disagreement,
        facts: structural_facts(ring),
        polynomial_extension: ExtensionVerdict {
            value: ext.value,
            method: ext.method,
            note: EXTENSION_NOTE,
        },
        elapsed_ms: None,
    };
    if options.timing {
        report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1000.0);
    }
    report
}

fn show_factorization<P: fmt::Display>(factors: &[(P, u32)], paren: bool) -> String {
    let parts: Vec<String> = factors
        .iter()
        .map(|(p, k)| {
            let p = if paren { format!("({p})") } else { p.to_string() };
            if *k == 1 {
                p
            } else {
                format!("{p}^{k}")
            }
        })
        .collect();
    parts.join(" * ")
}

/// Facts about `ring` that follow from its shape without search.
pub fn structural_facts(ring: &FiniteRing) -> Vec<String> {
    let mut facts = Vec::new();
    if ring.has_exactly_two_idempotents() {
        facts.push("exactly two idempotents (0 and 1) => WVNR".to_string());
    }
    if ring.is_reduced() {
        facts.push("reduced finite ring => VNR".to_string());
    } else {
        facts.push("nonzero nilpotents => not VNR".to_string());
    }
    match ring.descriptor() {
        RingDescriptor::Zmod(n) => {
            if let Ok(f) = factor_int(*n) {
                facts.push(format!("n = {n} = {}", show_factorization(&f.factors, false)));
                if f.is_squarefree() {
                    facts.push(format!("Z/{n} squarefree => VNR"));
                }
                if f.is_prime_power() {
                    facts.push(format!("{n}Z is a primary ideal => Z/{n} is WVNR with exactly two idempotents"));
                } else {
                    facts.push(format!("{n}Z is not a primary ideal"));
                }
                if !f.is_squarefree() && !f.is_prime_power() {
                    facts.push(format!("Z/{n} neither squarefree nor a prime power => not WVNR"));
                }
            }
        }
        RingDescriptor::PolyQuotient { base, modulus } => {
            if let RingDescriptor::Zmod(p) = **base {
                if is_prime(p) {
                    let f = FpPoly::new(p, modulus);
                    if let Ok(fact) = factor_poly(p, &f) {
                        facts.push(format!("f = {f} = {} over GF({p})", show_factorization(&fact.factors, true)));
                        if fact.is_squarefree() {
                            facts.push("f squarefree => VNR".to_string());
                        }
                        if fact.is_prime_power() {
                            facts.push("(f) is a primary ideal => WVNR with exactly two idempotents".to_string());
                        }
                        if !fact.is_squarefree() && !fact.is_prime_power() {
                            facts.push("f neither squarefree nor a power of one irreducible => not WVNR".to_string());
                        }
                    }
                }
            }
        }
        RingDescriptor::Product(factors) => {
            facts.push(format!(
                "direct product of {} rings: WVNR iff VNR iff every factor is VNR",
                factors.len()
            ));
        }
        RingDescriptor::TrivialExt { .. } => {
            facts.push("trivial extension: idempotents are exactly (a,0) with a idempotent in A".to_string());
            facts.push("A ⋉ E is WVNR iff A is WVNR and aE = 0 for every nonunit idempotent a of A".to_string());
        }
    }
    facts
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "DISAGREEMENT",
    }
}

fn write_methods(f: &mut fmt::Formatter<'_>, verdicts: &PropertyVerdicts) -> fmt::Result {
    for m in &verdicts.methods {
        let value = match (m.status, m.value) {
            (MethodStatus::Ran, Some(v)) => v.to_string(),
            (MethodStatus::Skipped, _) => "skipped (size above oracle cap; use --oracle)".to_string(),
            _ => "not run (oracle cap exceeded)".to_string(),
        };
        writeln!(f, "  {:<17} {value}", m.method.as_str())?;
        if let Some(w) = &m.witness {
            let check = if w.verified { "verified" } else { "FAILED TO VERIFY" };
            writeln!(f, "    witness ({check}): {}", w.trace)?;
        }
    }
    Ok(())
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.canonical)?;
        writeln!(f, "size: {}", self.size)?;
        let shown: Vec<String> = self.idempotents.iter().map(ToString::to_string).collect();
        let more = if self.idempotent_count > self.idempotents.len() { " ..." } else { "" };
        writeln!(f, "idempotents ({}): {}{more}", self.idempotent_count, shown.join(" "))?;
        writeln!(f, "vnr: {}", yes_no(self.vnr.value))?;
        write_methods(f, &self.vnr)?;
        writeln!(f, "wvnr: {}", yes_no(self.wvnr.value))?;
        write_methods(f, &self.wvnr)?;
        if self.disagreement {
            writeln!(f, "DISAGREEMENT: methods disagree or a witness failed to verify")?;
        }
        writeln!(f, "facts:")?;
        for fact in &self.facts {
            writeln!(f, "  {fact}")?;
        }
        writeln!(
            f,
            "polynomial extension: {} ({}; {})",
            self.polynomial_extension.value,
            self.polynomial_extension.method.as_str(),
            self.polynomial_extension.note
        )?;
        if let Some(ms) = self.elapsed_ms {
            writeln!(f, "elapsed: {ms:.3} ms")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::realize;
    use crate::{DEFAULT_ORACLE_CAP, DEFAULT_SIZE_CAP};

    const OPTS: ClassifyOptions = ClassifyOptions {
        oracle_cap: DEFAULT_ORACLE_CAP,
        timing: false,
    };

    fn report(text: &str) -> ClassificationReport {
        classify(text, &realize(text, DEFAULT_SIZE_CAP).unwrap(), OPTS, false)
    }

    #[test]
    fn z12_pins_the_counterexample() {
        let r = report("Z/12");
        assert_eq!(r.wvnr.value, Some(false));
        assert!(!r.disagreement);
        let element = r.wvnr_method(VerdictMethod::Element).unwrap();
        let w = element.witness.as_ref().unwrap();
        assert_eq!((w.index_of("e"), w.index_of("a")), (Some(9), Some(6)));
        assert!(w.verified);
        assert!(w.trace.contains("a^2 = 6^2 = 0"), "{}", w.trace);
        let shown: Vec<usize> = r.idempotents.iter().map(|e| e.index).collect();
        assert_eq!(shown, [0, 1, 4, 9]);
        assert!(!r.polynomial_extension.value);
    }

    #[test]
    fn fields_and_trivial_extensions() {
        let r = report("Z/7");
        assert_eq!((r.vnr.value, r.wvnr.value), (Some(true), Some(true)));

        let r = report("triv(Z/6, self)");
        assert_eq!(r.wvnr.value, Some(false));
        let w = r.wvnr_method(VerdictMethod::TrivialExt).unwrap().witness.as_ref().unwrap();
        let values: Vec<&str> = w.elements.iter().map(|e| e.element.value.as_str()).collect();
        assert_eq!(values, ["(3,0)", "(0,1)"]);
    }

    #[test]
    fn oracles_skip_above_cap_unless_forced() {
        let ring = realize("Z/300", DEFAULT_SIZE_CAP).unwrap();
        let r = classify("Z/300", &ring, OPTS, false);
        assert_eq!(r.wvnr_method(VerdictMethod::Definitional).unwrap().status, MethodStatus::Skipped);
        assert!(!r.oracle_cap_exceeded());
        let r = classify("Z/300", &ring, OPTS, true);
        assert!(r.oracle_cap_exceeded());
        let wide = ClassifyOptions { oracle_cap: 512, ..OPTS };
        let r = classify("Z/300", &ring, wide, true);
        assert_eq!(r.wvnr_method(VerdictMethod::Summand).unwrap().value, Some(false));
    }

    #[test]
    fn idempotent_list_is_capped() {
        let r = report("Z/2 * Z/2 * Z/2 * Z/2 * Z/2 * Z/2");
        assert_eq!(r.idempotent_count, 64);
        assert_eq!(r.idempotents.len(), SHOWN_IDEMPOTENTS);
    }
}
