//! The finite commutative unital ring abstraction.
//!
//! A [`FiniteRing`] is an immutable, cheaply clonable handle. Elements are
//! addressed by dense index in `0..size()`; the structural value of an
//! element is recovered with [`FiniteRing::decode`].

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{FiniteModule, RingDescriptor};

/// Rings up to this size get precomputed addition and multiplication tables.
const TABLE_LIMIT: usize = 512;

/// Canonical structural value of a ring element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    /// A residue in `0..n` of `Z/n`.
    Residue(u64),
    /// A tuple of a direct product, one entry per factor.
    Tuple(Vec<Element>),
    /// Coefficients `c_0, .., c_{d-1}` of a polynomial quotient, lowest first.
    Poly(Vec<Element>),
    /// `(a, x)` in a trivial extension `A ⋉ E`.
    Pair(Box<Element>, ModuleElement),
}

/// Element of a finite module: one coset representative per cyclic component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement(pub Vec<Element>);

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Residue(r) => write!(f, "{r}"),
            Element::Tuple(items) => write_list(f, "(", items, ")"),
            Element::Poly(coeffs) => {
                if coeffs.iter().all(|c| matches!(c, Element::Residue(_))) {
                    write_polynomial(f, coeffs)
                } else {
                    write_list(f, "[", coeffs, "]")
                }
            }
            Element::Pair(a, x) => write!(f, "({a},{x})"),
        }
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [single] => write!(f, "{single}"),
            items => write_list(f, "[", items, "]"),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, open: &str, items: &[Element], close: &str) -> fmt::Result {
    f.write_str(open)?;
    for (i, item) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    f.write_str(close)
}

fn write_polynomial(f: &mut fmt::Formatter<'_>, coeffs: &[Element]) -> fmt::Result {
    let mut first = true;
    for (power, c) in coeffs.iter().enumerate().rev() {
        let Element::Residue(c) = *c else { unreachable!() };
        if c == 0 {
            continue;
        }
        if !first {
            f.write_str("+")?;
        }
        first = false;
        match (c, power) {
            (c, 0) => write!(f, "{c}")?,
            (1, 1) => f.write_str("x")?,
            (1, p) => write!(f, "x^{p}")?,
            (c, 1) => write!(f, "{c}*x")?,
            (c, p) => write!(f, "{c}*x^{p}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Derived structure computed once at construction.
#[derive(Debug, Clone)]
pub struct StructureCache {
    idempotents: Vec<usize>,
    units: FixedBitSet,
    nilpotents: FixedBitSet,
    reduced: bool,
}

impl StructureCache {
    /// Idempotents in ascending index order.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn units(&self) -> &FixedBitSet {
        &self.units
    }

    pub fn nilpotents(&self) -> &FixedBitSet {
        &self.nilpotents
    }

    pub fn reduced(&self) -> bool {
        self.reduced
    }
}

pub(crate) enum Repr {
    Zmod { n: usize },
    Product { factors: Vec<FiniteRing>, strides: Vec<usize> },
    /// `base[x]/(f)` with `f = x^d + tail[d-1] x^(d-1) + .. + tail[0]`.
    Poly { base: FiniteRing, tail: Vec<usize> },
    Trivial { base: FiniteRing, module: FiniteModule },
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

struct RingInner {
    descriptor: RingDescriptor,
    size: usize,
    one: usize,
    repr: Repr,
    neg: Vec<u32>,
    tables: Option<Tables>,
    cache: StructureCache,
}

/// A realized finite commutative ring with identity.
#[derive(Clone)]
pub struct FiniteRing {
    inner: Arc<RingInner>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("descriptor", &self.inner.descriptor.to_string())
            .field("size", &self.inner.size)
            .finish()
    }
}

impl FiniteRing {
    /// Builds the ring handle. The caller has already enforced the size cap.
    pub(crate) fn from_repr(descriptor: RingDescriptor, repr: Repr) -> FiniteRing {
        let (size, one) = match &repr {
            Repr::Zmod { n } => (*n, 1),
            Repr::Product { factors, strides } => {
                let size = factors.iter().map(FiniteRing::size).product();
                let one = factors.iter().zip(strides).map(|(f, s)| f.one() * s).sum();
                (size, one)
            }
            Repr::Poly { base, tail } => (base.size().pow(tail.len() as u32), base.one()),
            Repr::Trivial { base, module } => (base.size() * module.size(), base.one()),
        };
        let mut inner = RingInner {
            descriptor,
            size,
            one,
            repr,
            neg: Vec::new(),
            tables: None,
            cache: StructureCache {
                idempotents: Vec::new(),
                units: FixedBitSet::new(),
                nilpotents: FixedBitSet::new(),
                reduced: false,
            },
        };
        inner.neg = (0..size).map(|a| inner.raw_neg(a) as u32).collect();
        if size <= TABLE_LIMIT {
            let mut add = Vec::with_capacity(size * size);
            let mut mul = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    add.push(inner.raw_add(a, b) as u32);
                    mul.push(inner.raw_mul(a, b) as u32);
                }
            }
            inner.tables = Some(Tables { add, mul });
        }
        let ring = FiniteRing { inner: Arc::new(inner) };
        let cache = compute_cache(&ring);
        let mut inner = Arc::try_unwrap(ring.inner).ok().expect("fresh ring handle is unique");
        inner.cache = cache;
        FiniteRing { inner: Arc::new(inner) }
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.inner.descriptor
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.inner.one
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.size
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        match &self.inner.tables {
            Some(t) => t.add[a * self.inner.size + b] as usize,
            None => self.inner.raw_add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.inner.tables {
            Some(t) => t.mul[a * self.inner.size + b] as usize,
            None => self.inner.raw_mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.inner.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Image of the integer `n` under the canonical map `Z -> R`, `n ↦ n·1`.
    pub fn from_int(&self, n: i64) -> usize {
        if let Repr::Zmod { n: m } = self.inner.repr {
            return n.rem_euclid(m as i64) as usize;
        }
        let mut k = n.unsigned_abs();
        let mut acc = self.zero();
        let mut step = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, step);
            }
            step = self.add(step, step);
            k >>= 1;
        }
        if n < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    pub fn decode(&self, index: usize) -> Element {
        assert!(index < self.inner.size, "index {index} out of range for ring of size {}", self.inner.size);
        match &self.inner.repr {
            Repr::Zmod { .. } => Element::Residue(index as u64),
            Repr::Product { factors, strides } => Element::Tuple(
                factors
                    .iter()
                    .zip(strides)
                    .map(|(f, s)| f.decode((index / s) % f.size()))
                    .collect(),
            ),
            Repr::Poly { base, tail } => {
                let bs = base.size();
                let mut rest = index;
                Element::Poly(
                    (0..tail.len())
                        .map(|_| {
                            let digit = rest % bs;
                            rest /= bs;
                            base.decode(digit)
                        })
                        .collect(),
                )
            }
            Repr::Trivial { base, module } => {
                let bs = base.size();
                Element::Pair(Box::new(base.decode(index % bs)), module.decode(index / bs))
            }
        }
    }

    /// Dense index of a structural value, or `None` if it is not an element.
    pub fn encode(&self, element: &Element) -> Option<usize> {
        match (&self.inner.repr, element) {
            (Repr::Zmod { n }, Element::Residue(r)) => ((*r as usize) < *n).then_some(*r as usize),
            (Repr::Product { factors, strides }, Element::Tuple(items)) if items.len() == factors.len() => {
                let mut index = 0;
                for ((f, s), item) in factors.iter().zip(strides).zip(items) {
                    index += f.encode(item)? * s;
                }
                Some(index)
            }
            (Repr::Poly { base, tail }, Element::Poly(coeffs)) if coeffs.len() == tail.len() => {
                let mut index = 0;
                for c in coeffs.iter().rev() {
                    index = index * base.size() + base.encode(c)?;
                }
                Some(index)
            }
            (Repr::Trivial { base, module }, Element::Pair(a, x)) => {
                Some(base.encode(a)? + base.size() * module.encode(x)?)
            }
            _ => None,
        }
    }

    /// Structural rendering of the element at `index`.
    pub fn render(&self, index: usize) -> String {
        self.decode(index).to_string()
    }

    pub fn structure(&self) -> &StructureCache {
        &self.inner.cache
    }

    /// All idempotents, ascending by dense index.
    pub fn idempotents(&self) -> &[usize] {
        &self.inner.cache.idempotents
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    /// True iff the only idempotents are zero and one.
    pub fn has_exactly_two_idempotents(&self) -> bool {
        self.idempotents() == [self.zero(), self.one()]
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.inner.cache.units.contains(a)
    }

    pub fn units(&self) -> &FixedBitSet {
        &self.inner.cache.units
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.inner.cache.nilpotents.contains(a)
    }

    pub fn is_reduced(&self) -> bool {
        self.inner.cache.reduced
    }

    /// Factors of a direct product.
    pub fn product_factors(&self) -> Option<&[FiniteRing]> {
        match &self.inner.repr {
            Repr::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    /// Base ring and module of a trivial extension.
    pub fn trivial_parts(&self) -> Option<(&FiniteRing, &FiniteModule)> {
        match &self.inner.repr {
            Repr::Trivial { base, module } => Some((base, module)),
            _ => None,
        }
    }

    /// Base ring and the non-leading modulus coefficients of a polynomial quotient.
    pub fn poly_parts(&self) -> Option<(&FiniteRing, &[usize])> {
        match &self.inner.repr {
            Repr::Poly { base, tail } => Some((base, tail)),
            _ => None,
        }
    }

    /// The modulus `n` when this ring is `Z/n`.
    pub fn zmod_modulus(&self) -> Option<u64> {
        match self.inner.repr {
            Repr::Zmod { n } => Some(n as u64),
            _ => None,
        }
    }
}

impl RingInner {
    fn raw_neg(&self, a: usize) -> usize {
        match &self.repr {
            Repr::Zmod { n } => (n - a) % n,
            Repr::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| f.neg((a / s) % f.size()) * s)
                .sum(),
            Repr::Poly { base, tail } => {
                let bs = base.size();
                let d = tail.len();
                let mut digits = split_digits(a, bs, d);
                for c in &mut digits[..d] {
                    *c = base.neg(*c);
                }
                compose_digits(&digits[..d], bs)
            }
            Repr::Trivial { base, module } => {
                let bs = base.size();
                base.neg(a % bs) + bs * module.neg(a / bs)
            }
        }
    }

    fn raw_add(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Zmod { n } => {
                let s = a + b;
                if s >= *n {
                    s - n
                } else {
                    s
                }
            }
            Repr::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| f.add((a / s) % f.size(), (b / s) % f.size()) * s)
                .sum(),
            Repr::Poly { base, tail } => {
                let bs = base.size();
                let d = tail.len();
                let mut da = split_digits(a, bs, d);
                let db = split_digits(b, bs, d);
                for (x, &y) in da[..d].iter_mut().zip(&db[..d]) {
                    *x = base.add(*x, y);
                }
                compose_digits(&da[..d], bs)
            }
            Repr::Trivial { base, module } => {
                let bs = base.size();
                base.add(a % bs, b % bs) + bs * module.add(a / bs, b / bs)
            }
        }
    }

    fn raw_mul(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Zmod { n } => (a * b) % n,
            Repr::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| f.mul((a / s) % f.size(), (b / s) % f.size()) * s)
                .sum(),
            Repr::Poly { base, tail } => {
                let bs = base.size();
                let d = tail.len();
                let da = split_digits(a, bs, d);
                let db = split_digits(b, bs, d);
                let mut c = [0usize; 2 * MAX_DEGREE];
                for (i, &x) in da[..d].iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in db[..d].iter().enumerate() {
                        c[i + j] = base.add(c[i + j], base.mul(x, y));
                    }
                }
                // x^d = -(tail[0] + .. + tail[d-1] x^(d-1)); fold high terms down.
                for k in (d..2 * d - 1).rev() {
                    let t = c[k];
                    if t == 0 {
                        continue;
                    }
                    for (i, &f) in tail.iter().enumerate() {
                        c[k - d + i] = base.sub(c[k - d + i], base.mul(t, f));
                    }
                }
                compose_digits(&c[..d], bs)
            }
            Repr::Trivial { base, module } => {
                let bs = base.size();
                let (a0, ax) = (a % bs, a / bs);
                let (b0, bx) = (b % bs, b / bs);
                let x = module.add(module.scale(a0, bx), module.scale(b0, ax));
                base.mul(a0, b0) + bs * x
            }
        }
    }
}

/// A polynomial quotient over a base of size >= 2 with at most `usize`
/// elements has degree at most 64.
const MAX_DEGREE: usize = 64;

/// Little-endian digits of `index` in radix `radix`; entries past `len` are zero.
pub(crate) fn split_digits(mut index: usize, radix: usize, len: usize) -> [usize; MAX_DEGREE] {
    let mut out = [0; MAX_DEGREE];
    for digit in &mut out[..len] {
        *digit = index % radix;
        index /= radix;
    }
    out
}

pub(crate) fn compose_digits(digits: &[usize], radix: usize) -> usize {
    digits.iter().rev().fold(0, |acc, &d| acc * radix + d)
}

fn compute_cache(ring: &FiniteRing) -> StructureCache {
    let idempotents: Vec<usize> = ring.elements().filter(|&a| ring.is_idempotent(a)).collect();

    // a is nilpotent iff its squaring sequence reaches zero.
    let nilpotents = classify_by_walk(ring, ring.zero(), ring.one(), |p, _| ring.mul(p, p));
    let reduced = nilpotents.count_ones(..) == 1;

    StructureCache {
        idempotents,
        units: compute_units(ring),
        nilpotents,
        reduced,
    }
}

/// Units: `a` is a unit iff some power `a^k` (k >= 1) is a unit.
fn compute_units(ring: &FiniteRing) -> FixedBitSet {
    classify_by_walk(ring, ring.one(), ring.zero(), |p, a| ring.mul(p, a))
}

/// Splits the ring into elements whose orbit under `step` reaches `target`
/// and those whose orbit cycles without meeting it.
///
/// Membership must be shared along an orbit: `p` is in the set iff
/// `step(p, a)` is. Each walk stops at the first already-classified element,
/// so the total work is linear in the size.
fn classify_by_walk(
    ring: &FiniteRing,
    target: usize,
    excluded: usize,
    step: impl Fn(usize, usize) -> usize,
) -> FixedBitSet {
    const UNKNOWN: u8 = 0;
    const IN: u8 = 1;
    const OUT: u8 = 2;

    let size = ring.size();
    let mut class = vec![UNKNOWN; size];
    let mut seen_in_walk = vec![usize::MAX; size];
    class[target] = IN;
    class[excluded] = OUT;
    let mut walk = Vec::new();
    for a in ring.elements() {
        if class[a] != UNKNOWN {
            continue;
        }
        walk.clear();
        let mut p = a;
        let verdict = loop {
            if class[p] != UNKNOWN {
                break class[p];
            }
            if seen_in_walk[p] == a {
                break OUT;
            }
            seen_in_walk[p] = a;
            walk.push(p);
            p = step(p, a);
        };
        for &q in &walk {
            class[q] = verdict;
        }
    }
    let mut set = FixedBitSet::with_capacity(size);
    for (a, &c) in class.iter().enumerate() {
        if c == IN {
            set.insert(a);
        }
    }
    set
}

/// Minimal ring interface used by the axiom checker.
pub trait RingTables {
    fn size(&self) -> usize;
    fn zero(&self) -> usize;
    fn one(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn neg(&self, a: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
}

impl RingTables for FiniteRing {
    fn size(&self) -> usize {
        FiniteRing::size(self)
    }
    fn zero(&self) -> usize {
        FiniteRing::zero(self)
    }
    fn one(&self) -> usize {
        FiniteRing::one(self)
    }
    fn add(&self, a: usize, b: usize) -> usize {
        FiniteRing::add(self, a, b)
    }
    fn neg(&self, a: usize) -> usize {
        FiniteRing::neg(self, a)
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        FiniteRing::mul(self, a, b)
    }
}

/// Explicit operation tables; lets callers validate hand-edited arithmetic.
#[derive(Debug, Clone)]
pub struct TableRing {
    size: usize,
    zero: usize,
    one: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    mul: Vec<usize>,
}

impl TableRing {
    pub fn from_ring(ring: &FiniteRing) -> TableRing {
        let size = ring.size();
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for a in 0..size {
            for b in 0..size {
                add.push(ring.add(a, b));
                mul.push(ring.mul(a, b));
            }
        }
        TableRing {
            size,
            zero: ring.zero(),
            one: ring.one(),
            add,
            neg: (0..size).map(|a| ring.neg(a)).collect(),
            mul,
        }
    }

    pub fn set_mul(&mut self, a: usize, b: usize, value: usize) {
        self.mul[a * self.size + b] = value;
    }
}

impl RingTables for TableRing {
    fn size(&self) -> usize {
        self.size
    }
    fn zero(&self) -> usize {
        self.zero
    }
    fn one(&self) -> usize {
        self.one
    }
    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }
    fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub law: &'static str,
    pub elements: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub exhaustive: bool,
    pub triples_checked: u64,
    pub violation: Option<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

const AXIOM_SEED: u64 = 0x5eed_0f_a110;

/// Checks the commutative unital ring axioms.
///
/// All triples are visited when `size^3 <= budget`; otherwise `budget`
/// triples are drawn from a fixed-seed generator. The first violation found
/// is reported together with the elements involved.
pub fn check_ring_axioms<R: RingTables + ?Sized>(ring: &R, budget: u64) -> AxiomReport {
    let size = ring.size();
    let (zero, one) = (ring.zero(), ring.one());
    let fail = |law, elements: Vec<usize>, exhaustive, triples| AxiomReport {
        exhaustive,
        triples_checked: triples,
        violation: Some(AxiomViolation { law, elements }),
    };
    let cube = (size as u128).pow(3);
    let exhaustive = cube <= budget as u128;

    if one == zero {
        return fail("one != zero", vec![one], exhaustive, 0);
    }
    for a in 0..size {
        if ring.add(a, zero) != a {
            return fail("additive identity", vec![a], exhaustive, 0);
        }
        if ring.add(a, ring.neg(a)) != zero {
            return fail("additive inverse", vec![a], exhaustive, 0);
        }
        if ring.mul(one, a) != a {
            return fail("multiplicative identity", vec![a], exhaustive, 0);
        }
    }

    let check_triple = |a: usize, b: usize, c: usize| -> Option<&'static str> {
        if ring.add(a, b) != ring.add(b, a) {
            return Some("additive commutativity");
        }
        if ring.mul(a, b) != ring.mul(b, a) {
            return Some("multiplicative commutativity");
        }
        if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)) {
            return Some("additive associativity");
        }
        if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)) {
            return Some("multiplicative associativity");
        }
        if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)) {
            return Some("distributivity");
        }
        None
    };

    let mut triples = 0u64;
    if exhaustive {
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    triples += 1;
                    if let Some(law) = check_triple(a, b, c) {
                        return fail(law, vec![a, b, c], true, triples);
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(AXIOM_SEED);
        for _ in 0..budget {
            let (a, b, c) = (rng.gen_range(0..size), rng.gen_range(0..size), rng.gen_range(0..size));
            triples += 1;
            if let Some(law) = check_triple(a, b, c) {
                return fail(law, vec![a, b, c], false, triples);
            }
        }
    }
    AxiomReport {
        exhaustive,
        triples_checked: triples,
        violation: None,
    }
}

impl FiniteRing {
    /// True when both handles denote the same ring (shared handle or equal recipe).
    pub fn same_ring(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.descriptor == other.inner.descriptor
    }
}
