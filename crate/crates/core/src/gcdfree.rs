//! GCD-free (coprime) bases: decidable equality in the unit group of the base
//! field tensored with ℚ.
//!
//! A finite set of nonzero polynomials is refined into pairwise-coprime
//! square-free basis elements plus rational primes for the constant parts.
//! Every input then factors exactly (up to sign, which is torsion and dies
//! after tensoring with ℚ) as a product of powers of basis members, turning
//! multiplicative questions into exact linear algebra on exponent vectors.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Poly, Rat};
use crate::ratfunc::RatFunc;
use num::{BigInt, One, Signed, Zero};

/// Exact factorization of one input over a [`GcdFreeBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// +1 or -1; discarded by all ℚ-linear consumers.
    pub sign: i8,
    /// Exponents over the prime list (may be negative for rational contents).
    pub prime_exps: Vec<i64>,
    /// Exponents over the polynomial basis elements.
    pub elem_exps: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct GcdFreeBasis {
    primes: Vec<BigInt>,
    elements: Vec<Poly>,
    table: Vec<Factorization>,
}

impl GcdFreeBasis {
    /// Builds a basis from nonzero input polynomials and records how each
    /// input factors over it.
    pub fn build(inputs: &[Poly]) -> Result<Self> {
        let mut pool: Vec<Poly> = Vec::new();
        for p in inputs {
            if p.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            for (f, _) in p.squarefree_decomposition() {
                pool.push(f);
            }
        }
        let mut elements: Vec<Poly> = Vec::new();
        for p in pool {
            insert_coprime(&mut elements, p);
        }
        elements.sort();

        // Factor every input over the refined basis; the leftover constant
        // goes into the rational prime table.
        let mut prime_set: BTreeMap<BigInt, ()> = BTreeMap::new();
        let mut partial: Vec<(i8, Vec<(BigInt, i64)>, Vec<i64>)> = Vec::new();
        for p in inputs {
            let (content, mut rest) = p.primitive();
            let mut elem_exps = vec![0i64; elements.len()];
            for (k, b) in elements.iter().enumerate() {
                while let Some(q) = rest.div_exact(b) {
                    rest = q;
                    elem_exps[k] += 1;
                    if rest.total_degree() == 0 {
                        break;
                    }
                }
            }
            let leftover = rest
                .as_constant()
                .expect("input must factor completely over its own basis");
            let c = content * leftover;
            let sign = if c.is_negative() { -1 } else { 1 };
            let c = c.abs();
            let mut primes = factor_nat(c.numer().clone())
                .into_iter()
                .map(|(p, e)| (p, e as i64))
                .collect::<Vec<_>>();
            for (p, e) in factor_nat(c.denom().clone()) {
                primes.push((p, -(e as i64)));
            }
            for (p, _) in &primes {
                prime_set.insert(p.clone(), ());
            }
            partial.push((sign, primes, elem_exps));
        }
        let primes: Vec<BigInt> = prime_set.into_keys().collect();
        let table = partial
            .into_iter()
            .map(|(sign, pe, elem_exps)| {
                let mut prime_exps = vec![0i64; primes.len()];
                for (p, e) in pe {
                    let k = primes.binary_search(&p).expect("prime recorded");
                    prime_exps[k] += e;
                }
                Factorization {
                    sign,
                    prime_exps,
                    elem_exps,
                }
            })
            .collect();
        Ok(GcdFreeBasis {
            primes,
            elements,
            table,
        })
    }

    pub fn primes(&self) -> &[BigInt] {
        &self.primes
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn factorization(&self, input_index: usize) -> &Factorization {
        &self.table[input_index]
    }

    /// Dimension of the exponent lattice: primes then polynomial elements.
    pub fn dim(&self) -> usize {
        self.primes.len() + self.elements.len()
    }

    /// ℚ-exponent vector of a recorded input, sign discarded.
    pub fn vector(&self, input_index: usize) -> Vec<Rat> {
        let f = &self.table[input_index];
        f.prime_exps
            .iter()
            .chain(f.elem_exps.iter())
            .map(|&e| Rat::from_integer(BigInt::from(e)))
            .collect()
    }

    /// Rebuilds an input from its factorization; used to check exactness.
    pub fn reconstruct(&self, input_index: usize) -> Poly {
        let f = &self.table[input_index];
        let nvars = self
            .elements
            .first()
            .map(|e| e.nvars())
            .unwrap_or(0);
        let mut c = Rat::from_integer(BigInt::from(f.sign));
        for (p, &e) in self.primes.iter().zip(&f.prime_exps) {
            let base = Rat::from_integer(p.clone());
            for _ in 0..e.unsigned_abs() {
                if e > 0 {
                    c *= &base;
                } else {
                    c /= &base;
                }
            }
        }
        let mut r = Poly::constant(nvars, c);
        for (b, &e) in self.elements.iter().zip(&f.elem_exps) {
            debug_assert!(e >= 0, "polynomial exponents are nonnegative");
            for _ in 0..e {
                r = r.mul(b);
            }
        }
        r
    }
}

fn insert_coprime(basis: &mut Vec<Poly>, p: Poly) {
    if p.total_degree() == 0 {
        return;
    }
    for i in 0..basis.len() {
        if basis[i] == p {
            return;
        }
        let g = p.gcd(&basis[i]);
        if g.total_degree() > 0 {
            let b = basis.remove(i);
            let b_rest = b.div_exact(&g).expect("gcd divides");
            let p_rest = p.div_exact(&g).expect("gcd divides");
            insert_coprime(basis, g);
            insert_coprime(basis, b_rest.primitive_part());
            insert_coprime(basis, p_rest.primitive_part());
            return;
        }
    }
    basis.push(p.primitive_part());
}

/// Trial-division factorization of a positive integer.
fn factor_nat(mut n: BigInt) -> Vec<(BigInt, u32)> {
    debug_assert!(n.is_positive() || n.is_one());
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0u32;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == BigInt::from(2) {
            BigInt::one()
        } else {
            BigInt::from(2)
        };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// Exponent vector of a rational function over a basis built from a closed
/// set of polynomials: vector(num) - vector(den).
pub fn ratfunc_vector(basis: &GcdFreeBasis, index_num: usize, index_den: usize) -> Vec<Rat> {
    let vn = basis.vector(index_num);
    let vd = basis.vector(index_den);
    vn.into_iter().zip(vd).map(|(a, b)| a - b).collect()
}

/// Decides whether `Σ cᵢ · uᵢ ∧ wᵢ` vanishes in `Λ²` of the unit group
/// tensored with ℚ, via exponent vectors over a shared gcd-free basis.
pub fn wedge_sum_is_zero(pairs: &[(RatFunc, RatFunc, Rat)]) -> Result<bool> {
    if pairs.is_empty() {
        return Ok(true);
    }
    let mut polys: Vec<Poly> = Vec::new();
    let mut idx = Vec::new();
    for (u, w, _) in pairs {
        if u.is_zero() || w.is_zero() {
            return Err(Error::NonUnit);
        }
        let base = polys.len();
        polys.push(u.num().clone());
        polys.push(u.den().clone());
        polys.push(w.num().clone());
        polys.push(w.den().clone());
        idx.push(base);
    }
    let basis = GcdFreeBasis::build(&polys)?;
    let dim = basis.dim();
    let mut mat: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
    for (k, (_, _, c)) in pairs.iter().enumerate() {
        let vu = ratfunc_vector(&basis, idx[k], idx[k] + 1);
        let vw = ratfunc_vector(&basis, idx[k] + 2, idx[k] + 3);
        for i in 0..dim {
            if vu[i].is_zero() {
                continue;
            }
            for j in 0..dim {
                if i == j || vw[j].is_zero() {
                    continue;
                }
                let (a, b, s) = if i < j {
                    (i, j, c.clone())
                } else {
                    (j, i, -c.clone())
                };
                let delta = &vu[i] * &vw[j] * s;
                let entry = mat.entry((a, b)).or_insert_with(Rat::zero);
                *entry += delta;
            }
        }
    }
    Ok(mat.values().all(|v| v.is_zero()))
}
