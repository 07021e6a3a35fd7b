//! Independent brute-force oracle. Rings are rebuilt here from plain integer
//! arithmetic (no library code) with the same little-endian index encoding,
//! and idempotents, WVNR verdicts and witnesses are compared with the library.

use finring::deciders::{is_wvnr_element, trivial_ext_wvnr_structural, Witness};
use finring::expr::realize;
use finring::DEFAULT_SIZE_CAP as CAP;

/// A ring given by explicit tables over `0..size`.
struct Naive {
    size: usize,
    one: usize,
    mul: Vec<usize>,
}

impl Naive {
    fn build(size: usize, one: usize, mul: impl Fn(usize, usize) -> usize) -> Naive {
        let mut table = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                table[a * size + b] = mul(a, b);
            }
        }
        Naive { size, one, mul: table }
    }

    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b]
    }

    fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.m(a, a) == a).collect()
    }

    fn is_unit(&self, a: usize) -> bool {
        (0..self.size).any(|b| self.m(a, b) == self.one)
    }

    /// First `(e, a)` with `e` a nonunit idempotent, `a ∈ Re` and `a ∉ Ra²`.
    fn wvnr_witness(&self) -> Option<(usize, usize)> {
        for e in self.idempotents().into_iter().filter(|&e| !self.is_unit(e)) {
            let mut re: Vec<usize> = (0..self.size).map(|r| self.m(r, e)).collect();
            re.sort_unstable();
            re.dedup();
            for a in re {
                let a2 = self.m(a, a);
                if !(0..self.size).any(|x| self.m(a2, x) == a) {
                    return Some((e, a));
                }
            }
        }
        None
    }
}

fn zmod(n: usize) -> Naive {
    Naive::build(n, 1 % n, |a, b| a * b % n)
}

/// `Z/m × Z/n`, index `x + m*y`.
fn product(m: usize, n: usize) -> Naive {
    Naive::build(m * n, 1 + m, |a, b| {
        let (a0, a1, b0, b1) = (a % m, a / m, b % m, b / m);
        (a0 * b0 % m) + m * (a1 * b1 % n)
    })
}

/// `triv(Z/n, self)`, index `a + n*x`, `(a,x)(b,y) = (ab, ay + bx)`.
fn trivial_self(n: usize) -> Naive {
    Naive::build(n * n, 1, |p, q| {
        let (a, x, b, y) = (p % n, p / n, q % n, q / n);
        a * b % n + n * ((a * y + b * x) % n)
    })
}

/// `GF(p)[x]/(f)` for monic `f` given low to high; index `Σ c_i p^i`.
fn gf_quotient(p: usize, f: &[usize]) -> Naive {
    let d = f.len() - 1;
    let size = p.pow(d as u32);
    let digits = |mut i: usize| -> Vec<usize> {
        (0..d)
            .map(|_| {
                let c = i % p;
                i /= p;
                c
            })
            .collect()
    };
    Naive::build(size, if d == 0 { 0 } else { 1 }, |a, b| {
        let (da, db) = (digits(a), digits(b));
        let mut c = vec![0; 2 * d];
        for i in 0..d {
            for j in 0..d {
                c[i + j] = (c[i + j] + da[i] * db[j]) % p;
            }
        }
        for k in (d..2 * d).rev() {
            let t = c[k];
            for i in 0..=d {
                c[k - d + i] = (c[k - d + i] + p * p - t * f[i] % p) % p;
            }
        }
        (0..d).rev().fold(0, |acc, i| acc * p + c[i])
    })
}

fn library_witness(expr: &str) -> (Vec<usize>, Option<(usize, usize)>) {
    let ring = realize(expr, CAP).unwrap();
    let verdict = is_wvnr_element(&ring);
    let witness = match verdict.witness {
        Some(Witness::NotWeaklyRegular { e, a }) => Some((e, a)),
        None => None,
        other => panic!("unexpected witness {other:?}"),
    };
    assert_eq!(verdict.value, witness.is_none());
    (ring.idempotents().to_vec(), witness)
}

fn poly_text(f: &[usize]) -> String {
    let mut terms = Vec::new();
    for (k, &c) in f.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        terms.push(match k {
            0 => c.to_string(),
            1 => format!("{c}*x"),
            k => format!("{c}*x^{k}"),
        });
    }
    terms.join("+")
}

#[test]
fn zmod_matches_oracle() {
    for n in 2..=200 {
        let oracle = zmod(n);
        let (idems, witness) = library_witness(&format!("Z/{n}"));
        assert_eq!(idems, oracle.idempotents(), "Z/{n}");
        assert_eq!(witness, oracle.wvnr_witness(), "Z/{n}");
    }
}

#[test]
fn pinned_values() {
    assert_eq!(zmod(12).idempotents(), [0, 1, 4, 9]);
    assert_eq!(zmod(12).wvnr_witness(), Some((9, 6)));
    assert_eq!(zmod(6).idempotents().len(), 4);
    assert_eq!(zmod(4).idempotents().len(), 2);
    // (3,0) and (4,0) in triv(Z/6, self).
    assert_eq!(trivial_self(6).idempotents(), [0, 1, 3, 4]);
    assert!(trivial_self(6).wvnr_witness().is_some());
    assert_eq!(product(4, 9).wvnr_witness(), Some((1, 2)));
    // GF(2): x^2 is local, x^3+x^2 mixes exponents; GF(3): x(x+1) is squarefree.
    assert!(gf_quotient(2, &[0, 0, 1]).wvnr_witness().is_none());
    assert!(gf_quotient(2, &[0, 0, 1, 1]).wvnr_witness().is_some());
    assert!(gf_quotient(3, &[0, 1, 1]).wvnr_witness().is_none());
}

#[test]
fn products_match_oracle() {
    for m in 2..=32 {
        for n in 2..=64 / m {
            let oracle = product(m, n);
            let (idems, witness) = library_witness(&format!("Z/{m} * Z/{n}"));
            assert_eq!(idems, oracle.idempotents(), "Z/{m} * Z/{n}");
            assert_eq!(witness, oracle.wvnr_witness(), "Z/{m} * Z/{n}");
        }
    }
}

#[test]
fn self_extensions_match_oracle() {
    for n in 2..=12 {
        let oracle = trivial_self(n);
        let expr = format!("triv(Z/{n}, self)");
        let (idems, witness) = library_witness(&expr);
        assert_eq!(idems, oracle.idempotents(), "{expr}");
        assert_eq!(witness, oracle.wvnr_witness(), "{expr}");
    }
}

#[test]
fn gf_quotients_match_oracle() {
    for (p, max_degree) in [(2usize, 6u32), (3, 3), (5, 2)] {
        for d in 1..=max_degree {
            for idx in 0..p.pow(d) {
                let mut f: Vec<usize> = (0..d).map(|i| idx / p.pow(i) % p).collect();
                f.push(1);
                let oracle = gf_quotient(p, &f);
                let expr = format!("GF({p})[x]/({})", poly_text(&f));
                let (idems, witness) = library_witness(&expr);
                assert_eq!(idems, oracle.idempotents(), "{expr}");
                assert_eq!(witness, oracle.wvnr_witness(), "{expr}");
            }
        }
    }
}

#[test]
fn trivial_extension_annihilation_witness() {
    // (3,0)·(0,1) = (0,3) != 0 in triv(Z/6, self).
    let ring = realize("triv(Z/6, self)", CAP).unwrap();
    let (base, module) = ring.trivial_parts().unwrap();
    let v = trivial_ext_wvnr_structural(base, module);
    assert!(!v.value);
    assert_eq!(v.witness, Some(Witness::Annihilation { a: 3, x: 6 }));
    assert_eq!(ring.render(6), "(0,1)");

    // Over Z/4 the only nonunit idempotent is 0.
    let ring = realize("triv(Z/4, self/(2))", CAP).unwrap();
    let (base, module) = ring.trivial_parts().unwrap();
    assert!(trivial_ext_wvnr_structural(base, module).value);
    assert!(is_wvnr_element(&ring).value);
}

#[test]
fn ideal_counts_match_divisor_counts() {
    use finring::ideals::{enumerate_ideals_within, Ideal};
    for n in 2..=96u64 {
        let ring = realize(&format!("Z/{n}"), CAP).unwrap();
        let ideals = enumerate_ideals_within(&ring, &Ideal::whole(&ring), 256).unwrap();
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        assert_eq!(ideals.len(), divisors, "Z/{n}");
    }
}
