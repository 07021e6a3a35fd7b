//! Trial-division factorization of integers and of polynomials over `GF(p)`.

use std::fmt;

use crate::error::RingError;

/// Product of prime powers times a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization<P> {
    /// Unit factor: 1 for integers, the leading coefficient for polynomials.
    pub unit: u64,
    /// Distinct primes with exponents, in discovery order.
    pub factors: Vec<(P, u32)>,
}

impl<P> Factorization<P> {
    /// Exactly one distinct prime.
    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, k)| k == 1)
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.factors.iter().map(|&(_, k)| k).collect()
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Factors `n >= 2` by trial division over `2..=√n`.
pub fn factor_int(n: u64) -> Result<Factorization<u64>, RingError> {
    if n < 2 {
        return Err(RingError::Unfactorable(n.to_string()));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            let mut k = 0;
            while rest % d == 0 {
                rest /= d;
                k += 1;
            }
            factors.push((d, k));
        }
        d += 1;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { unit: 1, factors })
}

/// Polynomial over `GF(p)`, coefficients lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) inverts a.
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

impl FpPoly {
    /// Reduces integer coefficients (lowest degree first) into `0..p`.
    pub fn new(p: u64, coeffs: &[i64]) -> FpPoly {
        let coeffs = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
        FpPoly::from_residues(p, coeffs)
    }

    fn from_residues(p: u64, mut coeffs: Vec<u64>) -> FpPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        if self.is_zero() || other.is_zero() {
            return FpPoly::from_residues(self.p, Vec::new());
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % self.p;
            }
        }
        FpPoly::from_residues(self.p, out)
    }

    pub fn pow(&self, k: u32) -> FpPoly {
        (0..k).fold(FpPoly::from_residues(self.p, vec![1]), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let p = self.p;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (FpPoly::from_residues(p, Vec::new()), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let t = rem[k];
            if t == 0 {
                continue;
            }
            quot[k - dd] = t;
            for (i, &c) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = (rem[k - dd + i] + p - t * c % p) % p;
            }
        }
        (FpPoly::from_residues(p, quot), FpPoly::from_residues(p, rem))
    }

    /// All monic polynomials of the given degree, in lexicographic order of
    /// their lower coefficients.
    pub fn monic_of_degree(p: u64, degree: usize) -> impl Iterator<Item = FpPoly> {
        let count = p.pow(degree as u32);
        (0..count).map(move |mut idx| {
            let mut coeffs = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                coeffs.push(idx % p);
                idx /= p;
            }
            coeffs.push(1);
            FpPoly { p, coeffs }
        })
    }

    /// Coefficients as `i64`, lowest degree first.
    pub fn to_int_coeffs(&self) -> Vec<i64> {
        self.coeffs.iter().map(|&c| c as i64).collect()
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, &c) in self.coeffs.iter().enumerate().rev() {
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
                (1, k) => write!(f, "x^{k}")?,
                (c, 1) => write!(f, "{c}*x")?,
                (c, k) => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Factors a non-constant polynomial over `GF(p)` into monic irreducibles by
/// trial division with every monic polynomial of degree up to half the
/// remaining degree.
pub fn factor_poly(p: u64, f: &FpPoly) -> Result<Factorization<FpPoly>, RingError> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    if f.modulus() != p {
        return Err(RingError::Unfactorable(format!("{f} is not over GF({p})")));
    }
    let Some(degree) = f.degree().filter(|&d| d >= 1) else {
        return Err(RingError::Unfactorable(f.to_string()));
    };
    let unit = f.coeffs[degree];
    let inv = inverse_mod(unit, p);
    let mut rest = FpPoly::from_residues(p, f.coeffs.iter().map(|&c| c * inv % p).collect());

    let mut factors = Vec::new();
    let mut d = 1;
    while 2 * d <= rest.degree().unwrap_or(0) {
        for candidate in FpPoly::monic_of_degree(p, d) {
            let mut k = 0;
            loop {
                let (q, r) = rest.div_rem_monic(&candidate);
                if !r.is_zero() {
                    break;
                }
                rest = q;
                k += 1;
            }
            if k > 0 {
                factors.push((candidate, k));
            }
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) >= 1 {
        // No factor of degree <= half its own degree: irreducible.
        factors.push((rest, 1));
    }
    Ok(Factorization { unit, factors })
}
