//! Builders for every supported finite ring family.
//!
//! Each builder checks the realized carrier size against a caller-supplied
//! cap before allocating anything proportional to it.

use std::fmt;
use std::sync::Arc;

use crate::error::RingError;
use crate::ideals::generated_ideal;
use crate::ring::{FiniteRing, ModuleElement, Repr};
#[cfg(test)]
use crate::ring::Element;

/// Syntactic recipe for a finite ring.
///
/// Integer coefficients (polynomial moduli, module annihilators) are read
/// through the canonical map `n ↦ n·1` into the relevant base ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Zmod(u64),
    Product(Vec<RingDescriptor>),
    /// `base[x]/(f)`; `modulus` lists the coefficients of `f`, lowest degree first.
    PolyQuotient { base: Box<RingDescriptor>, modulus: Vec<i64> },
    TrivialExt { base: Box<RingDescriptor>, module: ModuleSpec },
}

/// One cyclic summand `A/(g_1, .., g_k)`; no generators means `A` itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicSpec {
    pub annihilators: Vec<i64>,
}

/// A finite direct sum of cyclic modules over the base ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleSpec {
    pub components: Vec<CyclicSpec>,
}

impl ModuleSpec {
    /// `A^rank`.
    pub fn free(rank: usize) -> ModuleSpec {
        ModuleSpec {
            components: vec![CyclicSpec { annihilators: Vec::new() }; rank],
        }
    }

    /// `A/(gens)`.
    pub fn cyclic(annihilators: Vec<i64>) -> ModuleSpec {
        ModuleSpec {
            components: vec![CyclicSpec { annihilators }],
        }
    }
}

impl RingDescriptor {
    /// Realizes the recipe, failing if any intermediate or final carrier
    /// exceeds `cap`.
    pub fn realize(&self, cap: usize) -> Result<FiniteRing, RingError> {
        match self {
            RingDescriptor::Zmod(n) => make_zmod(*n, cap),
            RingDescriptor::Product(factors) => {
                let rings = factors.iter().map(|d| d.realize(cap)).collect::<Result<Vec<_>, _>>()?;
                make_product(rings, cap)
            }
            RingDescriptor::PolyQuotient { base, modulus } => make_poly_quotient(base.realize(cap)?, modulus, cap),
            RingDescriptor::TrivialExt { base, module } => {
                let base = base.realize(cap)?;
                let module = make_module(&base, module, cap)?;
                make_trivial_extension(base, module, cap)
            }
        }
    }
}

fn write_int_poly(f: &mut fmt::Formatter<'_>, coeffs: &[i64]) -> fmt::Result {
    let mut first = true;
    for (power, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let magnitude = c.unsigned_abs();
        if c < 0 {
            f.write_str("-")?;
        } else if !first {
            f.write_str("+")?;
        }
        first = false;
        match (magnitude, power) {
            (m, 0) => write!(f, "{m}")?,
            (1, 1) => f.write_str("x")?,
            (1, p) => write!(f, "x^{p}")?,
            (m, 1) => write!(f, "{m}*x")?,
            (m, p) => write!(f, "{m}*x^{p}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Zmod(n) => write!(f, "Z/{n}"),
            RingDescriptor::Product(factors) => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    if matches!(factor, RingDescriptor::Product(_)) {
                        write!(f, "({factor})")?;
                    } else {
                        write!(f, "{factor}")?;
                    }
                }
                Ok(())
            }
            RingDescriptor::PolyQuotient { base, modulus } => {
                if matches!(**base, RingDescriptor::Product(_)) {
                    write!(f, "({base})")?;
                } else {
                    write!(f, "{base}")?;
                }
                f.write_str("[x]/(")?;
                write_int_poly(f, modulus)?;
                f.write_str(")")
            }
            RingDescriptor::TrivialExt { base, module } => write!(f, "triv({base}, {module})"),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut free_run = 0usize;
        let flush = |run: &mut usize, parts: &mut Vec<String>| {
            match *run {
                0 => {}
                1 => parts.push("self".to_string()),
                m => parts.push(format!("self^{m}")),
            }
            *run = 0;
        };
        for component in &self.components {
            if component.annihilators.is_empty() {
                free_run += 1;
            } else {
                flush(&mut free_run, &mut parts);
                let gens: Vec<String> = component.annihilators.iter().map(i64::to_string).collect();
                parts.push(format!("self/({})", gens.join(",")));
            }
        }
        flush(&mut free_run, &mut parts);
        if parts.is_empty() {
            // The zero module has no DSL spelling; `self/(1)` realizes it.
            parts.push("self/(1)".to_string());
        }
        f.write_str(&parts.join(" (+) "))
    }
}

fn check_cap(computed: u128, cap: usize) -> Result<(), RingError> {
    if computed > cap as u128 {
        Err(RingError::SizeOverflow { computed, cap })
    } else {
        Ok(())
    }
}

/// `Z/n` for `2 <= n <= cap`.
pub fn make_zmod(n: u64, cap: usize) -> Result<FiniteRing, RingError> {
    if n < 2 {
        return Err(RingError::ModulusTooSmall(n));
    }
    check_cap(n as u128, cap)?;
    Ok(FiniteRing::from_repr(RingDescriptor::Zmod(n), Repr::Zmod { n: n as usize }))
}

/// Direct product with componentwise operations. Tuples are encoded in
/// little-endian mixed radix: the first factor is the least significant digit.
pub fn make_product(rings: Vec<FiniteRing>, cap: usize) -> Result<FiniteRing, RingError> {
    if rings.len() < 2 {
        return Err(RingError::ProductArity(rings.len()));
    }
    let total = rings.iter().fold(1u128, |acc, r| acc.saturating_mul(r.size() as u128));
    check_cap(total, cap)?;
    let mut strides = Vec::with_capacity(rings.len());
    let mut stride = 1;
    for r in &rings {
        strides.push(stride);
        stride *= r.size();
    }
    let descriptor = RingDescriptor::Product(rings.iter().map(|r| r.descriptor().clone()).collect());
    Ok(FiniteRing::from_repr(descriptor, Repr::Product { factors: rings, strides }))
}

/// `base[x]/(f)` for a monic `f` of degree at least 1, with integer
/// coefficients given lowest degree first.
pub fn make_poly_quotient(base: FiniteRing, modulus: &[i64], cap: usize) -> Result<FiniteRing, RingError> {
    let mapped: Vec<usize> = modulus.iter().map(|&c| base.from_int(c)).collect();
    let degree = match mapped.iter().rposition(|&c| c != base.zero()) {
        Some(d) if d >= 1 => d,
        _ => return Err(RingError::ConstantModulus),
    };
    if mapped[degree] != base.one() {
        return Err(RingError::NonMonic {
            leading: base.render(mapped[degree]),
        });
    }
    check_cap((base.size() as u128).saturating_pow(degree as u32), cap)?;
    let mut trimmed = modulus.to_vec();
    while trimmed.last() == Some(&0) {
        trimmed.pop();
    }
    let descriptor = RingDescriptor::PolyQuotient {
        base: Box::new(base.descriptor().clone()),
        modulus: trimmed,
    };
    let tail = mapped[..degree].to_vec();
    Ok(FiniteRing::from_repr(descriptor, Repr::Poly { base, tail }))
}

/// `A ⋉ E` with `(a,x)(b,y) = (ab, ay + bx)`. Pairs are encoded as
/// `index(a) + |A| * index(x)`, so `(a, 0)` shares its index with `a`.
pub fn make_trivial_extension(base: FiniteRing, module: FiniteModule, cap: usize) -> Result<FiniteRing, RingError> {
    assert!(
        base.same_ring(module.base()),
        "module is defined over {}, not {}",
        module.base().descriptor(),
        base.descriptor()
    );
    check_cap(base.size() as u128 * module.size() as u128, cap)?;
    let descriptor = RingDescriptor::TrivialExt {
        base: Box::new(base.descriptor().clone()),
        module: module.spec().clone(),
    };
    Ok(FiniteRing::from_repr(descriptor, Repr::Trivial { base, module }))
}

struct CyclicComponent {
    /// Coset representatives (least index in each coset), ascending.
    reps: Vec<usize>,
    /// Base element index to coset ordinal.
    class_of: Vec<u32>,
}

struct ModuleInner {
    base: FiniteRing,
    spec: ModuleSpec,
    components: Vec<CyclicComponent>,
    size: usize,
}

/// A finite module realized as a direct sum of cyclic quotients of the base.
#[derive(Clone)]
pub struct FiniteModule {
    inner: Arc<ModuleInner>,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModule")
            .field("spec", &self.inner.spec.to_string())
            .field("size", &self.inner.size)
            .finish()
    }
}

/// Realizes `spec` over `base`.
pub fn make_module(base: &FiniteRing, spec: &ModuleSpec, cap: usize) -> Result<FiniteModule, RingError> {
    let mut components = Vec::with_capacity(spec.components.len());
    let mut total = 1u128;
    for cyclic in &spec.components {
        let gens: Vec<usize> = cyclic.annihilators.iter().map(|&g| base.from_int(g)).collect();
        let ideal = generated_ideal(base, &gens);
        total = total.saturating_mul((base.size() / ideal.len()) as u128);
        check_cap(total, cap)?;

        let mut class_of = vec![u32::MAX; base.size()];
        let mut reps = Vec::new();
        for a in base.elements() {
            if class_of[a] != u32::MAX {
                continue;
            }
            let ordinal = reps.len() as u32;
            reps.push(a);
            for i in ideal.iter() {
                class_of[base.add(a, i)] = ordinal;
            }
        }
        components.push(CyclicComponent { reps, class_of });
    }
    Ok(FiniteModule {
        inner: Arc::new(ModuleInner {
            base: base.clone(),
            spec: spec.clone(),
            components,
            size: total as usize,
        }),
    })
}

impl FiniteModule {
    pub fn base(&self) -> &FiniteRing {
        &self.inner.base
    }

    pub fn spec(&self) -> &ModuleSpec {
        &self.inner.spec
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.size
    }

    fn digits(&self, x: usize) -> impl Iterator<Item = (&CyclicComponent, usize)> + '_ {
        let mut rest = x;
        self.inner.components.iter().map(move |c| {
            let d = rest % c.reps.len();
            rest /= c.reps.len();
            (c, d)
        })
    }

    fn map_components(&self, x: usize, mut f: impl FnMut(&CyclicComponent, usize) -> usize) -> usize {
        let mut index = 0;
        let mut stride = 1;
        for (c, d) in self.digits(x) {
            index += f(c, c.reps[d]) * stride;
            stride *= c.reps.len();
        }
        index
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let base = &self.inner.base;
        let ys: Vec<usize> = self.digits(y).map(|(c, d)| c.reps[d]).collect();
        let mut k = 0;
        self.map_components(x, |c, rep| {
            let out = c.class_of[base.add(rep, ys[k])] as usize;
            k += 1;
            out
        })
    }

    pub fn neg(&self, x: usize) -> usize {
        let base = &self.inner.base;
        self.map_components(x, |c, rep| c.class_of[base.neg(rep)] as usize)
    }

    /// Scalar action of the base element `r` on `x`.
    pub fn scale(&self, r: usize, x: usize) -> usize {
        let base = &self.inner.base;
        self.map_components(x, |c, rep| c.class_of[base.mul(r, rep)] as usize)
    }

    pub fn decode(&self, x: usize) -> ModuleElement {
        let base = &self.inner.base;
        ModuleElement(self.digits(x).map(|(c, d)| base.decode(c.reps[d])).collect())
    }

    pub fn encode(&self, element: &ModuleElement) -> Option<usize> {
        if element.0.len() != self.inner.components.len() {
            return None;
        }
        let base = &self.inner.base;
        let mut digits = Vec::with_capacity(element.0.len());
        for (c, e) in self.inner.components.iter().zip(&element.0) {
            let b = base.encode(e)?;
            let ordinal = c.class_of[b] as usize;
            if c.reps[ordinal] != b {
                return None;
            }
            digits.push(ordinal);
        }
        let mut index = 0;
        for (c, d) in self.inner.components.iter().zip(digits).rev() {
            index = index * c.reps.len() + d;
        }
        Some(index)
    }

    /// Checks the abelian-group and unital module laws over every element
    /// (and every pair/triple of scalars and elements). Returns the first
    /// failing law.
    pub fn check_axioms(&self) -> Result<(), String> {
        let base = &self.inner.base;
        for x in self.elements() {
            if self.add(x, self.zero()) != x {
                return Err(format!("x + 0 = x fails for x = {x}"));
            }
            if self.add(x, self.neg(x)) != self.zero() {
                return Err(format!("x + (-x) = 0 fails for x = {x}"));
            }
            if self.scale(base.one(), x) != x {
                return Err(format!("1x = x fails for x = {x}"));
            }
            for y in self.elements() {
                if self.add(x, y) != self.add(y, x) {
                    return Err(format!("x + y = y + x fails for ({x}, {y})"));
                }
                for z in self.elements() {
                    if self.add(self.add(x, y), z) != self.add(x, self.add(y, z)) {
                        return Err(format!("addition not associative at ({x}, {y}, {z})"));
                    }
                }
                for a in base.elements() {
                    if self.scale(a, self.add(x, y)) != self.add(self.scale(a, x), self.scale(a, y)) {
                        return Err(format!("a(x+y) = ax + ay fails for a = {a}, ({x}, {y})"));
                    }
                }
            }
            for a in base.elements() {
                for b in base.elements() {
                    if self.scale(base.mul(a, b), x) != self.scale(a, self.scale(b, x)) {
                        return Err(format!("(ab)x = a(bx) fails for ({a}, {b}), x = {x}"));
                    }
                    if self.scale(base.add(a, b), x) != self.add(self.scale(a, x), self.scale(b, x)) {
                        return Err(format!("(a+b)x = ax + bx fails for ({a}, {b}), x = {x}"));
                    }
                }
            }
        }
        Ok(())
    }
}
