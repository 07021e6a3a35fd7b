//! Corpus sweeps: generate families of rings, run every cross-check on each,
//! and tally the results.
//!
//! Cases are checked in parallel; tallies and counterexamples follow corpus
//! order.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{ModuleSpec, RingDescriptor};
use crate::deciders::factor::{is_prime, FpPoly};
use crate::deciders::{
    is_primary_int, is_primary_poly, is_vnr, is_vnr_via_reduced, is_wvnr_definitional, is_wvnr_element,
    is_wvnr_summand, polynomial_extension_wvnr, polyquot_wvnr_structural, product_wvnr_structural,
    trivial_ext_wvnr_structural, vnr_characterization, zmod_wvnr_structural, Verdict,
};
use crate::expr::{realize, ExprError};
use crate::ring::{check_ring_axioms, FiniteRing};

/// Counterexamples kept per family.
pub const MAX_COUNTEREXAMPLES: usize = 10;

/// Triples sampled by the axiom check; exhaustive up to size 64.
pub const AXIOM_BUDGET: u64 = 1 << 18;

/// Truncation degrees used for the polynomial proxy `R[x]/(x^k)`.
pub const PROXY_DEGREES: [u32; 2] = [2, 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Zmod,
    Products,
    Polyquot,
    Trivialext,
    ProxyPolynomial,
    Th1Equivalence,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Zmod,
        Family::Products,
        Family::Polyquot,
        Family::Trivialext,
        Family::ProxyPolynomial,
        Family::Th1Equivalence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Zmod => "zmod",
            Family::Products => "products",
            Family::Polyquot => "polyquot",
            Family::Trivialext => "trivialext",
            Family::ProxyPolynomial => "proxy-polynomial",
            Family::Th1Equivalence => "th1-equivalence",
        }
    }

    /// Parses a family name; `all` selects every family.
    pub fn select(name: &str) -> Option<Vec<Family>> {
        if name == "all" {
            return Some(Family::ALL.to_vec());
        }
        Family::ALL.into_iter().find(|f| f.name() == name).map(|f| vec![f])
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `n` in the `Z/n` family.
    pub max_n: u64,
    /// Largest `n` for which the `Z/n` family also runs the ideal oracles.
    pub oracle_max_n: u64,
    /// Largest ring in the product, quotient and trivial-extension families.
    pub max_size: usize,
    /// Largest base ring `R` for the proxy `R[x]/(x^k)`.
    pub proxy_max_size: usize,
    /// Largest ring the ideal oracles run on.
    pub oracle_cap: usize,
}

impl Default for Bounds {
    fn default() -> Bounds {
        Bounds {
            max_n: 200,
            oracle_max_n: 96,
            max_size: 64,
            proxy_max_size: 32,
            oracle_cap: crate::DEFAULT_ORACLE_CAP,
        }
    }
}

/// One corpus ring with the DSL text that builds it.
#[derive(Debug, Clone)]
pub struct Case {
    pub expr: String,
    pub ring: FiniteRing,
}

impl Case {
    pub fn new(expr: String, size_cap: usize) -> Result<Case, ExprError> {
        let ring = realize(&expr, size_cap)?;
        Ok(Case { expr, ring })
    }
}

fn build(exprs: Vec<String>, size_cap: usize) -> Vec<Case> {
    exprs
        .into_iter()
        .map(|e| Case::new(e, size_cap).expect("corpus expression must realize"))
        .collect()
}

/// `Z/n` for `2 <= n <= max_n`.
pub fn zmod_corpus(max_n: u64) -> Vec<Case> {
    build((2..=max_n).map(|n| format!("Z/{n}")).collect(), max_n as usize)
}

/// `Z/a * Z/b` (ordered, `ab <= max_size`), then three-factor products if
/// `three_factors`.
pub fn product_corpus(max_size: usize, three_factors: bool) -> Vec<Case> {
    let m = max_size as u64;
    let mut exprs = Vec::new();
    for a in 2..=m / 2 {
        for b in 2..=m / a {
            exprs.push(format!("Z/{a} * Z/{b}"));
        }
    }
    if three_factors {
        for a in 2..=m / 4 {
            for b in 2..=m / (2 * a) {
                for c in 2..=m / (a * b) {
                    exprs.push(format!("Z/{a} * Z/{b} * Z/{c}"));
                }
            }
        }
    }
    build(exprs, max_size)
}

/// `GF(p)[x]/(f)` for every prime `p` and monic `f` of positive degree with
/// `p^deg f <= max_size`, restricted to `primes` when given.
pub fn polyquot_corpus(max_size: usize, primes: Option<&[u64]>) -> Vec<Case> {
    let mut exprs = Vec::new();
    for p in (2..=max_size as u64).filter(|&p| is_prime(p)) {
        if primes.is_some_and(|ps| !ps.contains(&p)) {
            continue;
        }
        let mut degree = 1;
        while (p as u128).pow(degree as u32) <= max_size as u128 {
            for f in FpPoly::monic_of_degree(p, degree) {
                exprs.push(format!("GF({p})[x]/({f})"));
            }
            degree += 1;
        }
    }
    build(exprs, max_size)
}

/// `triv(Z/n, E)` for `2 <= n <= 12` and `E` one of `self`, `self^2`,
/// `self/(g)` with `g` a proper divisor of `n`, keeping sizes `<= max_size`.
pub fn trivialext_corpus(max_size: usize) -> Vec<Case> {
    let mut exprs = Vec::new();
    for n in 2..=12usize {
        let mut modules = vec![("self".to_string(), n), ("self^2".to_string(), n * n)];
        modules.extend((2..n).filter(|g| n % g == 0).map(|g| (format!("self/({g})"), g)));
        for (module, module_size) in modules {
            if n * module_size <= max_size {
                exprs.push(format!("triv(Z/{n}, {module})"));
            }
        }
    }
    build(exprs, max_size)
}

/// Every ring of the other families with size `<= max_size`.
pub fn mixed_corpus(max_size: usize) -> Vec<Case> {
    let mut cases = zmod_corpus(max_size as u64);
    cases.extend(product_corpus(max_size, true));
    cases.extend(polyquot_corpus(max_size, None));
    cases.extend(trivialext_corpus(max_size));
    cases
}

/// The union corpus on which the three WVNR definitions are compared.
pub fn th1_corpus(bounds: &Bounds) -> Vec<Case> {
    let mut cases = zmod_corpus(bounds.oracle_max_n);
    cases.extend(product_corpus(bounds.max_size, false));
    cases.extend(polyquot_corpus(bounds.max_size, None));
    cases.extend(trivialext_corpus(bounds.max_size));
    cases
}

/// Default corpus for a family.
pub fn corpus(family: Family, bounds: &Bounds) -> Vec<Case> {
    match family {
        Family::Zmod => zmod_corpus(bounds.max_n),
        Family::Products => product_corpus(bounds.max_size, true),
        Family::Polyquot => polyquot_corpus(bounds.max_size, None),
        Family::Trivialext => trivialext_corpus(bounds.max_size),
        Family::ProxyPolynomial => mixed_corpus(bounds.proxy_max_size),
        Family::Th1Equivalence => th1_corpus(bounds),
    }
}

/// `R[x]/(x^k)` for a corpus ring `R`, with the size cap raised to fit.
pub fn truncated_proxy(case: &Case, k: u32) -> Result<Case, ExprError> {
    let base = if matches!(case.ring.descriptor(), RingDescriptor::Product(_)) {
        format!("({})", case.expr)
    } else {
        case.expr.clone()
    };
    let cap = case.ring.size().saturating_pow(k);
    Case::new(format!("{base}[x]/(x^{k})"), cap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub expr: String,
    pub detail: String,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub check: &'static str,
    pub runs: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyResult {
    pub family: Family,
    pub cases: usize,
    pub passes: usize,
    pub failures: usize,
    pub checks: Vec<CheckTally>,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HarnessResult {
    pub families: Vec<FamilyResult>,
    pub cases: usize,
    pub failures: usize,
    pub elapsed_ms: f64,
}

impl HarnessResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn family(&self, family: Family) -> Option<&FamilyResult> {
        self.families.iter().find(|f| f.family == family)
    }
}

impl FamilyResult {
    pub fn tally(&self, check: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|t| t.check == check)
    }
}

/// Outcomes of every check run on one case, in the order they ran.
#[derive(Default)]
struct CaseLog {
    outcomes: Vec<(&'static str, Option<Counterexample>)>,
}

impl CaseLog {
    fn check(&mut self, case: &Case, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let failure = (!ok).then(|| Counterexample {
            check: name,
            expr: case.expr.clone(),
            detail: detail(),
            witness: None,
        });
        self.outcomes.push((name, failure));
    }

    /// Like [`CaseLog::check`], attaching the rendered witness of `verdict`.
    fn check_with(&mut self, case: &Case, ring: &FiniteRing, name: &'static str, ok: bool, verdict: &Verdict, detail: impl FnOnce() -> String) {
        self.check(case, name, ok, detail);
        if let Some((_, Some(cx))) = self.outcomes.last_mut() {
            cx.witness = verdict.witness.as_ref().map(|w| w.describe(ring));
        }
    }

    fn witness_verifies(&mut self, case: &Case, ring: &FiniteRing, verdict: &Verdict) {
        let ok = verdict.witness.as_ref().is_none_or(|w| w.verify(ring)) && (verdict.value || verdict.witness.is_some());
        self.check_with(case, ring, "witness-verifies", ok, verdict, || {
            format!("{} witness does not re-verify", verdict.method.as_str())
        });
    }
}

fn two_idempotents_note(ring: &FiniteRing) -> String {
    format!("{} idempotents", ring.idempotents().len())
}

/// Checks shared by every family: witnesses, VNR routes, implications,
/// the three WVNR definitions (when `oracle`), and the ring axioms.
fn common_checks(log: &mut CaseLog, case: &Case, element: &Verdict, oracle_cap: Option<usize>) {
    let ring = &case.ring;
    log.witness_verifies(case, ring, element);

    let brute = is_vnr(ring);
    let reduced = is_vnr_via_reduced(ring);
    let charac = vnr_characterization(ring);
    log.witness_verifies(case, ring, &brute);
    log.witness_verifies(case, ring, &charac);
    log.check(case, "vnr-crosscheck", brute.value == reduced && reduced == charac.value, || {
        format!("brute-force {}, reduced {reduced}, characterization {}", brute.value, charac.value)
    });
    log.check(case, "vnr-implies-wvnr", !brute.value || element.value, || "VNR but not WVNR".into());
    log.check(case, "two-idempotents-implies-wvnr", !ring.has_exactly_two_idempotents() || element.value, || {
        "exactly two idempotents but not WVNR".into()
    });

    if let Some(cap) = oracle_cap.filter(|&cap| ring.size() <= cap) {
        th1_check(log, case, element, cap);
    }

    let axioms = check_ring_axioms(ring, AXIOM_BUDGET);
    log.check(case, "ring-axioms", axioms.passed(), || format!("{:?}", axioms.violation));
}

fn th1_check(log: &mut CaseLog, case: &Case, element: &Verdict, cap: usize) {
    let ring = &case.ring;
    match (is_wvnr_definitional(ring, cap), is_wvnr_summand(ring, cap)) {
        (Ok(def), Ok(sum)) => {
            log.witness_verifies(case, ring, &def);
            log.witness_verifies(case, ring, &sum);
            let agree = def.value == element.value && sum.value == element.value;
            log.check_with(case, ring, "th1-equivalence", agree, element, || {
                format!(
                    "definitional {}, element {}, summand {}",
                    def.value, element.value, sum.value
                )
            });
        }
        _ => log.check(case, "th1-equivalence", false, || format!("oracle cap {cap} exceeded")),
    }
}

fn zmod_checks(log: &mut CaseLog, case: &Case, bounds: &Bounds) {
    let ring = &case.ring;
    let element = is_wvnr_element(ring);
    let oracle = match ring.zmod_modulus() {
        Some(n) if n <= bounds.oracle_max_n => Some(bounds.oracle_cap),
        _ => None,
    };
    common_checks(log, case, &element, oracle);
    let Some(n) = ring.zmod_modulus() else { return };
    let structural = zmod_wvnr_structural(n).ok();
    log.check_with(case, ring, "dedekind-structural", structural == Some(element.value), &element, || {
        format!("structural {structural:?}, element {}", element.value)
    });
    if is_primary_int(n) {
        log.check(case, "primary-local", element.value && ring.has_exactly_two_idempotents(), || {
            format!("prime power: element {}, {}", element.value, two_idempotents_note(ring))
        });
    }
    if n == 6 {
        log.check(case, "primary-converse", element.value && !is_primary_int(6), || {
            "Z/6 should be WVNR with 6Z not primary".into()
        });
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn product_checks(log: &mut CaseLog, case: &Case, bounds: &Bounds) {
    let ring = &case.ring;
    let element = is_wvnr_element(ring);
    common_checks(log, case, &element, Some(bounds.oracle_cap));
    let Some(factors) = ring.product_factors() else { return };
    let vnr = is_vnr(ring).value;
    let factors_vnr = factors.iter().all(|f| is_vnr(f).value);
    let structural = product_wvnr_structural(ring).expect("product ring");
    log.witness_verifies(case, ring, &structural);
    let ok = element.value == vnr && vnr == factors_vnr && structural.value == element.value;
    log.check_with(case, ring, "product-criterion", ok, &element, || {
        format!(
            "element {}, vnr {vnr}, all factors vnr {factors_vnr}, product route {}",
            element.value, structural.value
        )
    });

    // Z/a x Z/b with coprime moduli mirrors Z/ab.
    let moduli: Option<Vec<u64>> = factors.iter().map(FiniteRing::zmod_modulus).collect();
    if let Some(moduli) = moduli {
        let coprime = moduli
            .iter()
            .enumerate()
            .all(|(i, &a)| moduli[i + 1..].iter().all(|&b| gcd(a, b) == 1));
        if coprime {
            let n: u64 = moduli.iter().product();
            let mirror = Case::new(format!("Z/{n}"), ring.size()).expect("mirror realizes");
            let ok = mirror.ring.idempotents().len() == ring.idempotents().len()
                && is_wvnr_element(&mirror.ring).value == element.value
                && is_vnr(&mirror.ring).value == vnr;
            log.check(case, "crt-mirror", ok, || format!("disagrees with Z/{n}"));
        }
    }
}

fn polyquot_checks(log: &mut CaseLog, case: &Case, bounds: &Bounds) {
    let ring = &case.ring;
    let element = is_wvnr_element(ring);
    common_checks(log, case, &element, Some(bounds.oracle_cap));
    let RingDescriptor::PolyQuotient { base, modulus } = ring.descriptor() else { return };
    let RingDescriptor::Zmod(p) = **base else { return };
    if !is_prime(p) {
        return;
    }
    let f = FpPoly::new(p, modulus);
    let structural = polyquot_wvnr_structural(p, &f).ok();
    log.check_with(case, ring, "dedekind-structural", structural == Some(element.value), &element, || {
        format!("structural {structural:?}, element {}", element.value)
    });
    if is_primary_poly(p, &f).unwrap_or(false) {
        log.check(case, "primary-local", element.value && ring.has_exactly_two_idempotents(), || {
            format!("power of an irreducible: element {}, {}", element.value, two_idempotents_note(ring))
        });
    }
}

fn trivialext_checks(log: &mut CaseLog, case: &Case, bounds: &Bounds) {
    let ring = &case.ring;
    let element = is_wvnr_element(ring);
    common_checks(log, case, &element, Some(bounds.oracle_cap));
    let Some((base, module)) = ring.trivial_parts() else { return };

    // (a,0) has the same dense index as a.
    log.check(case, "idempotent-shape", ring.idempotents() == base.idempotents(), || {
        format!("idempotents {:?} vs base {:?}", ring.idempotents(), base.idempotents())
    });
    let structural = trivial_ext_wvnr_structural(base, module);
    log.witness_verifies(case, ring, &structural);
    log.check_with(case, ring, "trivial-ext-criterion", structural.value == element.value, &structural, || {
        format!("element {}, criterion {}", element.value, structural.value)
    });
    if *module.spec() == ModuleSpec::free(1) {
        let two = base.has_exactly_two_idempotents();
        log.check(case, "self-extension", element.value == two, || {
            format!("element {}, base has two idempotents: {two}", element.value)
        });
    }
    let axioms = module.check_axioms();
    log.check(case, "module-axioms", axioms.is_ok(), || axioms.unwrap_err());
}

fn proxy_checks(log: &mut CaseLog, case: &Case) {
    let ring = &case.ring;
    let two = ring.has_exactly_two_idempotents();
    let classifier = polynomial_extension_wvnr(ring);
    log.check(case, "classifier", classifier.value == two, || "two-idempotent classifier mismatch".into());
    for k in PROXY_DEGREES {
        let proxy = match truncated_proxy(case, k) {
            Ok(p) => p,
            Err(e) => {
                log.check(case, "truncated-proxy", false, || format!("k = {k}: {e}"));
                continue;
            }
        };
        let element = is_wvnr_element(&proxy.ring);
        log.witness_verifies(&proxy, &proxy.ring, &element);
        log.check_with(&proxy, &proxy.ring, "truncated-proxy", element.value == two, &element, || {
            format!("k = {k}: proxy WVNR {}, base has two idempotents: {two}", element.value)
        });
    }
    let pinned = match ring.descriptor() {
        RingDescriptor::Zmod(6) => Some(false),
        RingDescriptor::Zmod(4) => Some(true),
        _ => None,
    };
    if let Some(expected) = pinned {
        log.check(case, "classifier-pin", classifier.value == expected, || {
            format!("expected {expected}, got {}", classifier.value)
        });
    }
}

fn th1_family_checks(log: &mut CaseLog, case: &Case, bounds: &Bounds) {
    let element = is_wvnr_element(&case.ring);
    log.witness_verifies(case, &case.ring, &element);
    th1_check(log, case, &element, bounds.oracle_cap);
}

fn run_case(family: Family, case: &Case, bounds: &Bounds) -> CaseLog {
    let mut log = CaseLog::default();
    match family {
        Family::Zmod => zmod_checks(&mut log, case, bounds),
        Family::Products => product_checks(&mut log, case, bounds),
        Family::Polyquot => polyquot_checks(&mut log, case, bounds),
        Family::Trivialext => trivialext_checks(&mut log, case, bounds),
        Family::ProxyPolynomial => proxy_checks(&mut log, case),
        Family::Th1Equivalence => th1_family_checks(&mut log, case, bounds),
    }
    log
}

/// Runs one family's checks over `cases`.
pub fn run_family_on(family: Family, cases: &[Case], bounds: &Bounds) -> FamilyResult {
    let start = Instant::now();
    let logs: Vec<CaseLog> = cases.par_iter().map(|c| run_case(family, c, bounds)).collect();

    let mut checks: Vec<CheckTally> = Vec::new();
    let mut counterexamples = Vec::new();
    let mut failures = 0;
    for log in logs.iter() {
        let mut failed = false;
        for (name, failure) in &log.outcomes {
            let tally = match checks.iter_mut().position(|t| t.check == *name) {
                Some(i) => &mut checks[i],
                None => {
                    checks.push(CheckTally {
                        check: name,
                        runs: 0,
                        failures: 0,
                    });
                    checks.last_mut().unwrap()
                }
            };
            tally.runs += 1;
            if let Some(cx) = failure {
                tally.failures += 1;
                failed = true;
                if counterexamples.len() < MAX_COUNTEREXAMPLES {
                    counterexamples.push(cx.clone());
                }
            }
        }
        failures += usize::from(failed);
    }
    FamilyResult {
        family,
        cases: cases.len(),
        passes: cases.len() - failures,
        failures,
        checks,
        counterexamples,
        elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
    }
}

/// Generates and checks the default corpus of each family, in order.
pub fn run(families: &[Family], bounds: &Bounds) -> HarnessResult {
    collect(families.iter().map(|&f| run_family_on(f, &corpus(f, bounds), bounds)))
}

/// Checks the given rings under each family's checks.
pub fn run_on(families: &[Family], cases: &[Case], bounds: &Bounds) -> HarnessResult {
    collect(families.iter().map(|&f| run_family_on(f, cases, bounds)))
}

fn collect(results: impl Iterator<Item = FamilyResult>) -> HarnessResult {
    let start = Instant::now();
    let results: Vec<FamilyResult> = results.collect();
    HarnessResult {
        cases: results.iter().map(|r| r.cases).sum(),
        failures: results.iter().map(|r| r.failures).sum(),
        families: results,
        elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
    }
}

impl fmt::Display for HarnessResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fam in &self.families {
            writeln!(
                f,
                "{}: {} cases, {} passed, {} failed ({:.0} ms)",
                fam.family, fam.cases, fam.passes, fam.failures, fam.elapsed_ms
            )?;
            for t in &fam.checks {
                writeln!(f, "  {:<30} {:>6} runs {:>4} failures", t.check, t.runs, t.failures)?;
            }
            for cx in &fam.counterexamples {
                writeln!(f, "  counterexample [{}] {}: {}", cx.check, cx.expr, cx.detail)?;
                if let Some(w) = &cx.witness {
                    writeln!(f, "    witness: {w}")?;
                }
            }
        }
        writeln!(
            f,
            "total: {} cases, {} failures ({:.0} ms)",
            self.cases, self.failures, self.elapsed_ms
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes() {
        assert_eq!(zmod_corpus(200).len(), 199);
        let products = product_corpus(64, false);
        assert!(products.iter().all(|c| c.ring.size() <= 64));
        assert!(products.iter().any(|c| c.expr == "Z/8 * Z/8"));
        assert!(products.iter().any(|c| c.expr == "Z/32 * Z/2"));
        assert!(product_corpus(64, true).iter().any(|c| c.expr == "Z/2 * Z/2 * Z/2"));
        let gf = polyquot_corpus(64, Some(&[2]));
        assert_eq!(gf.len(), 2 + 4 + 8 + 16 + 32 + 64);
        let triv = trivialext_corpus(64);
        assert!(triv.iter().any(|c| c.expr == "triv(Z/6, self)"));
        assert!(triv.iter().any(|c| c.expr == "triv(Z/4, self/(2))"));
        assert!(triv.iter().all(|c| c.ring.size() <= 64));
    }

    #[test]
    fn proxy_expressions_parse() {
        let base = Case::new("Z/2 * Z/3".into(), 64).unwrap();
        let proxy = truncated_proxy(&base, 3).unwrap();
        assert_eq!(proxy.expr, "(Z/2 * Z/3)[x]/(x^3)");
        assert_eq!(proxy.ring.size(), 216);
    }

    #[test]
    fn z12_alone_in_th1_family() {
        let cases = vec![Case::new("Z/12".into(), 12).unwrap()];
        let r = run_family_on(Family::Th1Equivalence, &cases, &Bounds::default());
        assert_eq!((r.cases, r.failures), (1, 0));
        assert_eq!(r.tally("th1-equivalence").unwrap().runs, 1);
    }

    #[test]
    fn small_sweeps_pass() {
        let bounds = Bounds {
            max_n: 30,
            oracle_max_n: 30,
            max_size: 16,
            proxy_max_size: 8,
            ..Bounds::default()
        };
        let result = run(&Family::ALL, &bounds);
        assert!(result.passed(), "{result}");
    }
}
