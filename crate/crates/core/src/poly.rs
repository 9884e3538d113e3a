//! Sparse multivariate polynomials over the exact rationals.
//!
//! Monomials are exponent vectors ordered graded-lexicographically, which
//! fixes the canonical term order used everywhere for serialization and for
//! leading-coefficient normalization.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num::integer::Integer as NumInteger;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational scalar used throughout the kernel.
pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector under graded-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        Monomial(e)
    }

    pub fn from_exps(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Exact quotient, or `None` when some exponent would turn negative.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            e.push(a - b);
        }
        Some(Monomial(e))
    }

    pub fn display(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (j, &e) in self.0.iter().enumerate() {
            if e == 1 {
                parts.push(names[j].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", names[j], e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

/// Sparse polynomial; no zero coefficients are ever stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        Poly { nvars, terms }
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(nvars, j), Rat::one());
        Poly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, entries: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in entries {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_one() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, j: usize) -> u32 {
        self.terms.keys().map(|m| m.exps()[j]).max().unwrap_or(0)
    }

    /// Highest variable index that actually occurs, if any.
    pub fn max_var(&self) -> Option<usize> {
        (0..self.nvars).rev().find(|&j| self.degree_in(j) > 0)
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut r = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        r
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            r.add_term(ma.mul(m), ca * c);
        }
        r
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::one(self.nvars);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn partial(&self, j: usize) -> Poly {
        let mut r = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps()[j];
            if e > 0 {
                let mut exps = m.exps().to_vec();
                exps[j] -= 1;
                r.add_term(Monomial::from_exps(exps), c * rat_int(e as i64));
            }
        }
        r
    }

    /// Rational content, signed so the primitive part has a positive leading
    /// coefficient. The content of the zero polynomial is 1.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut cont = Rat::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            cont = -cont;
        }
        cont
    }

    /// Splits into `(content, primitive)` with `self = content * primitive`;
    /// the primitive part has coprime integer coefficients and positive
    /// leading coefficient.
    pub fn primitive(&self) -> (Rat, Poly) {
        let c = self.content();
        let inv = Rat::one() / c.clone();
        (c, self.scale(&inv))
    }

    pub fn primitive_part(&self) -> Poly {
        self.primitive().1
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Poly) -> Option<Poly> {
        debug_assert_eq!(self.nvars, other.nvars);
        if other.is_zero() {
            return None;
        }
        let mut r = self.clone();
        let mut q = Poly::zero(self.nvars);
        let (lm_g, lc_g) = {
            let (m, c) = other.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !r.is_zero() {
            let (lm_r, lc_r) = {
                let (m, c) = r.leading().unwrap();
                (m.clone(), c.clone())
            };
            let m = lm_r.div(&lm_g)?;
            let c = lc_r / &lc_g;
            q.add_term(m.clone(), c.clone());
            r = r.sub(&other.mul_term(&m, &c));
        }
        Some(q)
    }

    /// GCD, normalized primitive with positive leading coefficient. Nonzero
    /// constants are units here, so their gcd with anything is 1.
    pub fn gcd(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, other.nvars);
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        if self.total_degree() == 0 || other.total_degree() == 0 {
            return Poly::one(self.nvars);
        }
        gcd_inner(&self.primitive_part(), &other.primitive_part()).primitive_part()
    }

    /// Square-free decomposition `self = content * Π fᵢ^{eᵢ}` with the `fᵢ`
    /// primitive, square-free and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, u32)> {
        let (_, p) = self.primitive();
        if p.total_degree() == 0 {
            return Vec::new();
        }
        let mut g = p.clone();
        for j in 0..self.nvars {
            let d = p.partial(j);
            if !d.is_zero() {
                g = g.gcd(&d);
            }
        }
        let mut w = p.div_exact(&g).expect("gcd divides");
        let mut res = Vec::new();
        let mut i = 1u32;
        while w.total_degree() > 0 {
            let y = w.gcd(&g);
            let f = w.div_exact(&y).expect("gcd divides");
            if f.total_degree() > 0 {
                res.push((f, i));
            }
            g = g.div_exact(&y).expect("gcd divides");
            w = y;
            i += 1;
        }
        res
    }

    /// Evaluate with polynomial arguments (used by substitution maps).
    pub fn eval_poly(&self, args: &[Poly]) -> Poly {
        debug_assert_eq!(args.len(), self.nvars);
        let out_vars = args
            .first()
            .map(|a| a.nvars())
            .unwrap_or(self.nvars);
        let mut pows: Vec<Vec<Poly>> = vec![Vec::new(); self.nvars];
        let mut r = Poly::zero(out_vars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(out_vars, c.clone());
            for (j, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pows[j].len() < e as usize {
                    let next = match pows[j].last() {
                        None => args[j].clone(),
                        Some(p) => p.mul(&args[j]),
                    };
                    pows[j].push(next);
                }
                t = t.mul(&pows[j][e as usize - 1]);
            }
            r = r.add(&t);
        }
        r
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else if neg {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&m.display(names));
            } else {
                s.push_str(&format!("{}*{}", abs, m.display(names)));
            }
        }
        s
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        (1..=nvars).map(|j| format!("x{j}")).collect()
    }
}

/// Univariate view of a polynomial in variable `v`: coefficient polynomials
/// indexed by the degree in `v`, each with the `v`-exponent cleared.
fn to_univar(p: &Poly, v: usize) -> Vec<Poly> {
    let d = p.degree_in(v) as usize;
    let mut coeffs = vec![Poly::zero(p.nvars()); d + 1];
    for (m, c) in p.terms() {
        let e = m.exps()[v] as usize;
        let mut exps = m.exps().to_vec();
        exps[v] = 0;
        coeffs[e].add_term(Monomial::from_exps(exps), c.clone());
    }
    coeffs
}

fn from_univar(coeffs: &[Poly], v: usize, nvars: usize) -> Poly {
    let mut r = Poly::zero(nvars);
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut shift = vec![0u32; nvars];
        shift[v] = e as u32;
        r = r.add(&c.mul_term(&Monomial::from_exps(shift), &Rat::one()));
    }
    r
}

fn uni_trim(u: &mut Vec<Poly>) {
    while matches!(u.last(), Some(c) if c.is_zero()) {
        u.pop();
    }
}

fn uni_deg(u: &[Poly]) -> usize {
    u.len().saturating_sub(1)
}

fn uni_content(u: &[Poly], nvars: usize) -> Poly {
    let mut g = Poly::zero(nvars);
    for c in u {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.total_degree() == 0 && !g.is_zero() {
                return Poly::one(nvars);
            }
        }
    }
    if g.is_zero() {
        Poly::one(nvars)
    } else {
        g
    }
}

fn uni_div_coeffs(u: &[Poly], d: &Poly) -> Vec<Poly> {
    u.iter()
        .map(|c| {
            if c.is_zero() {
                c.clone()
            } else {
                c.div_exact(d).expect("content divides")
            }
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` in the main variable (lazy variant: each
/// reduction step scales by the leading coefficient of `b`).
fn prem(mut a: Vec<Poly>, b: &[Poly]) -> Vec<Poly> {
    let db = uni_deg(b);
    let lb = b[db].clone();
    uni_trim(&mut a);
    while !a.is_empty() && uni_deg(&a) >= db {
        let da = uni_deg(&a);
        let la = a[da].clone();
        let mut next: Vec<Poly> = a.iter().map(|c| c.mul(&lb)).collect();
        for k in 0..=db {
            let t = la.mul(&b[k]);
            next[da - db + k] = next[da - db + k].sub(&t);
        }
        a = next;
        uni_trim(&mut a);
    }
    a
}

/// Primitive PRS gcd for nonconstant primitive inputs.
fn gcd_inner(f: &Poly, g: &Poly) -> Poly {
    let nvars = f.nvars();
    let v = match (f.max_var(), g.max_var()) {
        (Some(a), Some(b)) => a.max(b),
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => return Poly::one(nvars),
    };
    let fu = to_univar(f, v);
    let gu = to_univar(g, v);
    let cont_f = uni_content(&fu, nvars);
    let cont_g = uni_content(&gu, nvars);
    let c = cont_f.gcd(&cont_g);
    let pf = uni_div_coeffs(&fu, &cont_f);
    let pg = uni_div_coeffs(&gu, &cont_g);
    let (mut a, mut b) = if uni_deg(&pf) >= uni_deg(&pg) {
        (pf, pg)
    } else {
        (pg, pf)
    };
    let prim = loop {
        uni_trim(&mut b);
        if b.is_empty() {
            break from_univar(&a, v, nvars);
        }
        if uni_deg(&b) == 0 {
            break Poly::one(nvars);
        }
        let mut r = prem(a, &b);
        uni_trim(&mut r);
        if !r.is_empty() {
            let rc = uni_content(&r, nvars);
            let rp = from_univar(&r, v, nvars);
            let (_, rp) = rp.primitive();
            let rp = rp
                .div_exact(&rc)
                .map(|q| q.primitive_part())
                .unwrap_or(rp);
            a = b;
            b = to_univar(&rp, v);
        } else {
            a = b;
            b = Vec::new();
        }
    };
    c.mul(&prim.primitive_part())
}
