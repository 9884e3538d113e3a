//! The square-zero extension `A = Ā ⊕ I` with `I` free of rank `m`, together
//! with splittings (stored as derivations), algebra homomorphisms, and the
//! infinitesimal scaling endomorphisms.

use crate::error::{Error, Result};
use crate::poly::{Poly, Rat};
use crate::ratfunc::RatFunc;
use num::Zero;

/// Shape of the ambient ring: `n` base variables and `m` free generators of
/// the square-zero ideal. Carries the display names used by the DSL.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    pub xnames: Vec<String>,
    pub tnames: Vec<String>,
}

impl RingSpec {
    pub fn new(xnames: Vec<String>, tnames: Vec<String>) -> Self {
        assert!(!tnames.is_empty(), "the ideal must have rank at least 1");
        RingSpec { xnames, tnames }
    }

    pub fn with_default_names(n: usize, m: usize) -> Self {
        RingSpec::new(
            (1..=n).map(|j| format!("x{j}")).collect(),
            (1..=m).map(|i| format!("t{i}")).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.xnames.len()
    }

    pub fn m(&self) -> usize {
        self.tnames.len()
    }
}

/// Element `u + Σ vᵢ tᵢ` of `A = Ā ⊕ I`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SqZeroElement {
    pub u: RatFunc,
    pub v: Vec<RatFunc>,
}

impl SqZeroElement {
    pub fn new(u: RatFunc, v: Vec<RatFunc>) -> Self {
        SqZeroElement { u, v }
    }

    pub fn from_base(u: RatFunc, m: usize) -> Self {
        let n = u.nvars();
        SqZeroElement {
            u,
            v: vec![RatFunc::zero(n); m],
        }
    }

    pub fn zero(nvars: usize, m: usize) -> Self {
        SqZeroElement::from_base(RatFunc::zero(nvars), m)
    }

    pub fn one(nvars: usize, m: usize) -> Self {
        SqZeroElement::from_base(RatFunc::one(nvars), m)
    }

    pub fn nvars(&self) -> usize {
        self.u.nvars()
    }

    pub fn m(&self) -> usize {
        self.v.len()
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        SqZeroElement {
            u: self.u.add(&other.u),
            v: self
                .v
                .iter()
                .zip(&other.v)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        SqZeroElement {
            u: self.u.sub(&other.u),
            v: self
                .v
                .iter()
                .zip(&other.v)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SqZeroElement {
            u: self.u.neg(),
            v: self.v.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Product `(u, v)(u', v') = (uu', uv' + u'v)`; the ideal squares to zero.
    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.m(), other.m());
        SqZeroElement {
            u: self.u.mul(&other.u),
            v: self
                .v
                .iter()
                .zip(&other.v)
                .map(|(a, b)| self.u.mul(b).add(&other.u.mul(a)))
                .collect(),
        }
    }

    /// Inverse `(u⁻¹, -u⁻²v)`; fails when the base part vanishes.
    pub fn inv(&self) -> Result<Self> {
        if self.u.is_zero() {
            return Err(Error::NonUnit);
        }
        let ui = self.u.inv()?;
        let ui2 = ui.mul(&ui).neg();
        Ok(SqZeroElement {
            u: ui,
            v: self.v.iter().map(|c| ui2.mul(c)).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn is_unit(&self) -> bool {
        !self.u.is_zero()
    }

    /// A unit whose difference from 1 is also a unit.
    pub fn is_flat(&self) -> bool {
        !self.u.is_zero() && !self.u.is_one()
    }

    /// The scaling endomorphism `u + v ↦ u + λ v`.
    pub fn scale_infinitesimal(&self, lambda: &Rat) -> Self {
        SqZeroElement {
            u: self.u.clone(),
            v: self.v.iter().map(|c| c.scale(lambda)).collect(),
        }
    }

    pub fn display(&self, spec: &RingSpec) -> String {
        let mut s = format!("({})", self.u.display(&spec.xnames));
        for (i, c) in self.v.iter().enumerate() {
            if !c.is_zero() {
                s.push_str(&format!(
                    " + ({})*{}",
                    c.display(&spec.xnames),
                    spec.tnames[i]
                ));
            }
        }
        s
    }
}

/// A splitting of the projection `A → Ā`, stored as the derivation `D` it
/// corresponds to via `τ_D(a) = a + D(a)`: the data is `D(xⱼ) ∈ I` for each
/// generator, extended by `D(r) = Σⱼ ∂ⱼr · D(xⱼ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    /// `d[j][i]` = coefficient of `tᵢ` in `D(xⱼ)`.
    d: Vec<Vec<RatFunc>>,
    nvars: usize,
    m: usize,
}

impl Splitting {
    pub fn new(d: Vec<Vec<RatFunc>>, nvars: usize, m: usize) -> Self {
        assert_eq!(d.len(), nvars);
        for row in &d {
            assert_eq!(row.len(), m);
        }
        Splitting { d, nvars, m }
    }

    pub fn zero(nvars: usize, m: usize) -> Self {
        Splitting {
            d: vec![vec![RatFunc::zero(nvars); m]; nvars],
            nvars,
            m,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(|row| row.iter().all(|c| c.is_zero()))
    }

    /// `D(xⱼ)` as an `I`-coefficient vector.
    pub fn gen_image(&self, j: usize) -> &[RatFunc] {
        &self.d[j]
    }

    /// `D(r) = Σⱼ ∂ⱼr · D(xⱼ)` as an `I`-coefficient vector.
    pub fn apply(&self, r: &RatFunc) -> Vec<RatFunc> {
        let mut out = vec![RatFunc::zero(self.nvars); self.m];
        for j in 0..self.nvars {
            let dr = r.partial(j);
            if dr.is_zero() {
                continue;
            }
            for i in 0..self.m {
                if !self.d[j][i].is_zero() {
                    out[i] = out[i].add(&dr.mul(&self.d[j][i]));
                }
            }
        }
        out
    }

    /// `τ_D(r) = (r, D(r))`.
    pub fn apply_splitting(&self, r: &RatFunc) -> SqZeroElement {
        SqZeroElement::new(r.clone(), self.apply(r))
    }
}

/// A `k`-algebra homomorphism `f: A₁ → A₂` in split coordinates:
/// `f(xⱼ, 0) = (pⱼ, φⱼ)` and `f(tᵢ) = ψᵢ ∈ I₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraHom {
    pub source: RingSpec,
    pub target: RingSpec,
    /// Base-part images of the source generators.
    pub px: Vec<RatFunc>,
    /// `I₂`-part of the images of the source generators.
    pub phix: Vec<Vec<RatFunc>>,
    /// Images of the ideal generators, `ψᵢ ∈ I₂`.
    pub psit: Vec<Vec<RatFunc>>,
}

impl AlgebraHom {
    pub fn new(
        source: RingSpec,
        target: RingSpec,
        px: Vec<RatFunc>,
        phix: Vec<Vec<RatFunc>>,
        psit: Vec<Vec<RatFunc>>,
    ) -> Self {
        assert_eq!(px.len(), source.n());
        assert_eq!(phix.len(), source.n());
        assert_eq!(psit.len(), source.m());
        for row in phix.iter().chain(psit.iter()) {
            assert_eq!(row.len(), target.m());
        }
        AlgebraHom {
            source,
            target,
            px,
            phix,
            psit,
        }
    }

    pub fn identity(spec: &RingSpec) -> Self {
        let n = spec.n();
        let m = spec.m();
        let px = (0..n).map(|j| RatFunc::var(n, j)).collect();
        let phix = vec![vec![RatFunc::zero(n); m]; n];
        let psit = (0..m)
            .map(|i| {
                (0..m)
                    .map(|k| {
                        if i == k {
                            RatFunc::one(n)
                        } else {
                            RatFunc::zero(n)
                        }
                    })
                    .collect()
            })
            .collect();
        AlgebraHom::new(spec.clone(), spec.clone(), px, phix, psit)
    }

    /// `f̄(r) = r(p)`, the induced map on base parts.
    pub fn base_image(&self, r: &RatFunc) -> Result<RatFunc> {
        r.eval(&self.px)
    }

    /// `Σⱼ ∂ⱼr(p) · φⱼ`, the `I₂`-part of `f(τ₀(r))`.
    pub fn phi_image(&self, r: &RatFunc) -> Result<Vec<RatFunc>> {
        let n2 = self.target.n();
        let m2 = self.target.m();
        let mut out = vec![RatFunc::zero(n2); m2];
        for j in 0..self.source.n() {
            let dr = r.partial(j);
            if dr.is_zero() {
                continue;
            }
            let drp = dr.eval(&self.px)?;
            for i in 0..m2 {
                if !self.phix[j][i].is_zero() {
                    out[i] = out[i].add(&drp.mul(&self.phix[j][i]));
                }
            }
        }
        Ok(out)
    }

    /// `Σᵢ αᵢ(p) · ψᵢ`, the image of an `I₁`-element.
    pub fn ideal_image(&self, alpha: &[RatFunc]) -> Result<Vec<RatFunc>> {
        let n2 = self.target.n();
        let m2 = self.target.m();
        let mut out = vec![RatFunc::zero(n2); m2];
        for (i, a) in alpha.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ap = a.eval(&self.px)?;
            for k in 0..m2 {
                if !self.psit[i][k].is_zero() {
                    out[k] = out[k].add(&ap.mul(&self.psit[i][k]));
                }
            }
        }
        Ok(out)
    }

    /// `f(u, v) = (u(p), Σⱼ ∂ⱼu(p) φⱼ + Σᵢ vᵢ(p) ψᵢ)`.
    pub fn apply(&self, a: &SqZeroElement) -> Result<SqZeroElement> {
        let u = self.base_image(&a.u)?;
        let phi = self.phi_image(&a.u)?;
        let psi = self.ideal_image(&a.v)?;
        Ok(SqZeroElement::new(
            u,
            phi.iter().zip(&psi).map(|(a, b)| a.add(b)).collect(),
        ))
    }
}

/// The scaling endomorphism `t_λ(u + v) = u + λ v`.
pub fn scaling_endo(lambda: &Rat, a: &SqZeroElement) -> SqZeroElement {
    a.scale_infinitesimal(lambda)
}

/// Constant rational as a flat element requires `c ∉ {0, 1}`.
pub fn flat_error(label: &str) -> Error {
    Error::FlatnessViolation(label.to_string())
}

pub fn require_flat(a: &SqZeroElement, label: &str) -> Result<()> {
    if a.is_flat() {
        Ok(())
    } else {
        Err(flat_error(label))
    }
}

/// Convenience: the zero polynomial check for unit bases.
pub fn is_zero_ratfunc(r: &RatFunc) -> bool {
    r.num().is_zero() || Poly::zero(r.nvars()).is_zero() && r.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat_int, Rat};
    use num::One;

    fn spec11() -> RingSpec {
        RingSpec::new(vec!["x".into()], vec!["t1".into()])
    }

    fn x() -> RatFunc {
        RatFunc::var(1, 0)
    }

    fn c(n: i64) -> RatFunc {
        RatFunc::constant(1, rat_int(n))
    }

    fn elem(u: RatFunc, v: RatFunc) -> SqZeroElement {
        SqZeroElement::new(u, vec![v])
    }

    #[test]
    fn square_zero_multiplication() {
        // (x, t1)(x, -t1) = (x^2, 0)
        let a = elem(x(), c(1));
        let b = elem(x(), c(-1));
        let p = a.mul(&b);
        assert_eq!(p.u, x().mul(&x()));
        assert!(p.v[0].is_zero());
        // (1, t1)^2 = (1, 2 t1)
        let u = elem(c(1), c(1));
        let sq = u.mul(&u);
        assert_eq!(sq, elem(c(1), c(2)));
        // (0, t1)(0, t2) = 0 with m = 2
        let z1 = SqZeroElement::new(RatFunc::zero(1), vec![c(1), c(0)]);
        let z2 = SqZeroElement::new(RatFunc::zero(1), vec![c(0), c(1)]);
        assert!(z1.mul(&z2).is_zero());
    }

    #[test]
    fn inverse() {
        // (x, t1)^{-1} = (1/x, -t1/x^2)
        let a = elem(x(), c(1));
        let inv = a.inv().unwrap();
        assert_eq!(inv.u, x().inv().unwrap());
        assert_eq!(inv.v[0], c(-1).div(&x().mul(&x())).unwrap());
        assert_eq!(a.mul(&inv), SqZeroElement::one(1, 1));
        // (1, 0)^{-1} = (1, 0)
        let one = SqZeroElement::one(1, 1);
        assert_eq!(one.inv().unwrap(), one);
        // (0, t1) is not a unit
        assert_eq!(elem(c(0), c(1)).inv(), Err(Error::NonUnit));
    }

    #[test]
    fn flatness() {
        assert!(elem(x(), c(0)).is_flat());
        assert!(!elem(c(1), c(1)).is_flat());
        assert!(elem(c(2), c(3)).is_flat());
    }

    #[test]
    fn splitting_application() {
        let zero = Splitting::zero(1, 1);
        assert_eq!(zero.apply_splitting(&x()), elem(x(), c(0)));
        let d = Splitting::new(vec![vec![c(1)]], 1, 1); // D(x) = t1
        assert_eq!(d.apply_splitting(&x()), elem(x(), c(1)));
        // τ_D(x^2) = (x^2, 2x t1) by the derivation rule.
        let x2 = x().mul(&x());
        assert_eq!(
            d.apply_splitting(&x2),
            elem(x2.clone(), x().scale(&rat_int(2)))
        );
    }

    #[test]
    fn splitting_is_ring_hom() {
        let d = Splitting::new(vec![vec![x()]], 1, 1); // D(x) = x t1
        let r = x().add(&c(2));
        let s = x().mul(&x()).sub(&c(1));
        let lhs = d.apply_splitting(&r.mul(&s));
        let rhs = d.apply_splitting(&r).mul(&d.apply_splitting(&s));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hom_application() {
        let spec = spec11();
        let id = AlgebraHom::identity(&spec);
        let a = elem(x(), x());
        assert_eq!(id.apply(&a).unwrap(), a);

        // f(x) = (x, t1): chain rule gives f(x^2, 0) = (x^2, 2x t1).
        let f = AlgebraHom::new(
            spec.clone(),
            spec.clone(),
            vec![x()],
            vec![vec![c(1)]],
            vec![vec![c(1)]],
        );
        let sq = elem(x().mul(&x()), c(0));
        assert_eq!(
            f.apply(&sq).unwrap(),
            elem(x().mul(&x()), x().scale(&rat_int(2)))
        );

        // f(t1) = 0 kills (0, t1).
        let g = AlgebraHom::new(
            spec.clone(),
            spec,
            vec![x()],
            vec![vec![c(0)]],
            vec![vec![c(0)]],
        );
        assert!(g.apply(&elem(c(0), c(1))).unwrap().is_zero());
    }

    #[test]
    fn hom_respects_multiplication() {
        let spec = spec11();
        let f = AlgebraHom::new(
            spec.clone(),
            spec,
            vec![x().mul(&x()).add(&c(1))],
            vec![vec![x()]],
            vec![vec![x().add(&c(2))]],
        );
        let a = elem(x(), c(3));
        let b = elem(x().sub(&c(1)), x());
        let lhs = f.apply(&a.mul(&b)).unwrap();
        let rhs = f.apply(&a).unwrap().mul(&f.apply(&b).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scaling_endomorphism() {
        let a = elem(x(), c(3));
        assert_eq!(scaling_endo(&Rat::one(), &a), a);
        assert_eq!(
            scaling_endo(&rat_int(0), &a),
            elem(x(), c(0))
        );
        assert_eq!(
            scaling_endo(&rat_int(2), &elem(x(), c(3))),
            elem(x(), c(6))
        );
        // ring endomorphism for every λ
        let b = elem(x().add(&c(1)), x());
        let l = rat_int(5);
        assert_eq!(
            scaling_endo(&l, &a.mul(&b)),
            scaling_endo(&l, &a).mul(&scaling_endo(&l, &b))
        );
    }
}
