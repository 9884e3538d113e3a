//! Normalized rational functions over the base polynomial ring.
//!
//! The base algebra is the generic localization of `ℚ[x₁..xₙ]`: every nonzero
//! rational function is a unit. Numerator and denominator are kept coprime and
//! the denominator's leading coefficient (graded-lex) is normalized to 1, so
//! equality is structural.

use crate::error::{Error, Result};
use crate::poly::{Poly, Rat};
use num::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(den.nvars()),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let lc = den.leading().expect("nonzero").1.clone();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFunc { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        let n = p.nvars();
        RatFunc {
            num: p,
            den: Poly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        RatFunc::from_poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        RatFunc::from_poly(Poly::one(nvars))
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        RatFunc::from_poly(Poly::constant(nvars, c))
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        RatFunc::from_poly(Poly::var(nvars, j))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        // Classical gcd-saving addition: split the denominators first.
        let g0 = self.den.gcd(&other.den);
        let db = self.den.div_exact(&g0).expect("gcd divides");
        let dd = other.den.div_exact(&g0).expect("gcd divides");
        let t = self.num.mul(&dd).add(&other.num.mul(&db));
        if t.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        let g1 = t.gcd(&g0);
        let t = t.div_exact(&g1).expect("gcd divides");
        let den = self
            .den
            .div_exact(&g1)
            .expect("gcd divides")
            .mul(&dd);
        RatFunc::normalized(t, den)
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        // Cross-reduce before multiplying to keep gcds small.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let num = self
            .num
            .div_exact(&g1)
            .expect("gcd divides")
            .mul(&other.num.div_exact(&g2).expect("gcd divides"));
        let den = self
            .den
            .div_exact(&g2)
            .expect("gcd divides")
            .mul(&other.den.div_exact(&g1).expect("gcd divides"));
        RatFunc::normalized(num, den)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn scale(&self, c: &Rat) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = RatFunc::one(self.nvars());
        for _ in 0..e.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }

    /// Exact partial derivative by the quotient rule.
    pub fn partial(&self, j: usize) -> RatFunc {
        let dn = self.num.partial(j);
        let dd = self.den.partial(j);
        if dd.is_zero() {
            return RatFunc::normalized(dn, self.den.clone());
        }
        let num = dn.mul(&self.den).sub(&self.num.mul(&dd));
        RatFunc::normalized(num, self.den.mul(&self.den))
    }

    /// Iterated partial derivative `∂^β`.
    pub fn partial_multi(&self, beta: &[u32]) -> RatFunc {
        let mut r = self.clone();
        for (j, &e) in beta.iter().enumerate() {
            for _ in 0..e {
                r = r.partial(j);
            }
        }
        r
    }

    /// Substitute rational functions for the variables. Fails when the
    /// denominator vanishes at the given point.
    pub fn eval(&self, args: &[RatFunc]) -> Result<RatFunc> {
        let num = eval_poly(&self.num, args)?;
        let den = eval_poly(&self.den, args)?;
        if den.is_zero() {
            return Err(Error::DenominatorVanishes(
                self.den.display(&Poly::default_names(self.den.nvars())),
            ));
        }
        den.inv().map(|d| num.mul(&d))
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.den.is_one() {
            self.num.display(names)
        } else {
            format!("({})/({})", self.num.display(names), self.den.display(names))
        }
    }
}

fn eval_poly(p: &Poly, args: &[RatFunc]) -> Result<RatFunc> {
    debug_assert_eq!(args.len(), p.nvars());
    let out_vars = args
        .first()
        .map(|a| a.nvars())
        .unwrap_or(p.nvars());
    let mut pows: Vec<Vec<RatFunc>> = vec![Vec::new(); p.nvars()];
    let mut r = RatFunc::zero(out_vars);
    for (m, c) in p.terms() {
        let mut t = RatFunc::constant(out_vars, c.clone());
        for (j, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while pows[j].len() < e as usize {
                let next = match pows[j].last() {
                    None => args[j].clone(),
                    Some(q) => q.mul(&args[j]),
                };
                pows[j].push(next);
            }
            t = t.mul(&pows[j][e as usize - 1]);
        }
        r = r.add(&t);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat_int, Monomial};
    use proptest::prelude::*;

    fn x() -> RatFunc {
        RatFunc::var(1, 0)
    }

    fn c(n: i64) -> RatFunc {
        RatFunc::constant(1, rat_int(n))
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        // (x/(x-1)) * ((x-1)/x) = 1
        let a = x().div(&x().sub(&c(1))).unwrap();
        let b = x().sub(&c(1)).div(&x()).unwrap();
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn add_complement() {
        // x + (1 - x) = 1
        let a = x();
        let b = c(1).sub(&x());
        assert!(a.add(&b).is_one());
    }

    #[test]
    fn normalization_cancels_common_factor() {
        // (x^2 - 1)/(x - 1) = x + 1; oracle: univariate long division.
        let num = x().mul(&x()).sub(&c(1));
        let den = x().sub(&c(1));
        let f = num.div(&den).unwrap();
        let oracle = num
            .num()
            .div_exact(den.num())
            .expect("exact long division");
        assert_eq!(f, RatFunc::from_poly(oracle));
        assert_eq!(f.display(&["x".to_string()]), "x + 1");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(x().div(&RatFunc::zero(1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn quotient_rule() {
        // d/dx (x/(x-1)) = -1/(x-1)^2
        let f = x().div(&x().sub(&c(1))).unwrap();
        let d = f.partial(0);
        let expected = c(-1)
            .div(&x().sub(&c(1)).mul(&x().sub(&c(1))))
            .unwrap();
        assert_eq!(d, expected);
        // d/dx x^2 = 2x
        assert_eq!(x().mul(&x()).partial(0), x().scale(&rat_int(2)));
        // d/dx (1/x) = -1/x^2
        assert_eq!(
            x().inv().unwrap().partial(0),
            c(-1).div(&x().mul(&x())).unwrap()
        );
    }

    #[test]
    fn denominator_vanishes_on_eval() {
        let f = c(1).div(&x().sub(&c(1))).unwrap();
        let err = f.eval(&[c(1)]).unwrap_err();
        assert!(matches!(err, Error::DenominatorVanishes(_)));
    }

    fn small_poly(nvars: usize) -> impl Strategy<Value = crate::poly::Poly> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, nvars), -3i64..4),
            0..4,
        )
        .prop_map(move |entries| {
            crate::poly::Poly::from_terms(
                nvars,
                entries
                    .into_iter()
                    .map(|(e, c)| (Monomial::from_exps(e), rat_int(c))),
            )
        })
    }

    fn small_ratfunc(nvars: usize) -> impl Strategy<Value = RatFunc> {
        (small_poly(nvars), small_poly(nvars))
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn mul_div_round_trip(f in small_ratfunc(2), g in small_ratfunc(2)) {
            if !g.is_zero() {
                prop_assert_eq!(f.mul(&g).div(&g).unwrap(), f);
            }
        }

        #[test]
        fn leibniz_rule(f in small_ratfunc(2), g in small_ratfunc(2)) {
            let lhs = f.mul(&g).partial(0);
            let rhs = f.partial(0).mul(&g).add(&f.mul(&g.partial(0)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn add_sub_round_trip(f in small_ratfunc(2), g in small_ratfunc(2)) {
            prop_assert_eq!(f.add(&g).sub(&g), f);
        }
    }
}
