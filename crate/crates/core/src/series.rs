//! Truncated formal power series in one variable (`x`) or two (`x`, `y`),
//! with coefficients in a pluggable ring (rationals, or graded polynomials
//! with an optional exponent cap).

use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::classes;
use crate::error::{Error, Result};
use crate::exact::combinat::inv_factorial;
use crate::exact::{qi, GradedPoly, Rational, TableRef};

/// Coefficient ring context. Elements carry no ring data themselves, so
/// per-computation options (such as a γ cap) live here.
pub trait CoeffRing: Clone + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn from_rational(&self, q: Rational) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, q: &Rational) -> Self::Elem;
    /// Inverse of a nonzero scalar element, if it is one.
    fn scalar_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn one(&self) -> Self::Elem {
        self.from_rational(Rational::one())
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// The rational numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QField;

impl CoeffRing for QField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn from_rational(&self, q: Rational) -> Rational {
        q
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn scale(&self, a: &Rational, q: &Rational) -> Rational {
        a * q
    }
    fn scalar_inverse(&self, a: &Rational) -> Option<Rational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

/// Graded polynomials over one table. With `cap = Some((v, e))`, every
/// product drops monomials whose exponent of variable `v` exceeds `e`.
#[derive(Clone, Debug)]
pub struct PolyRing {
    pub table: TableRef,
    pub cap: Option<(usize, u32)>,
}

impl PolyRing {
    pub fn new(table: &TableRef) -> Self {
        PolyRing {
            table: table.clone(),
            cap: None,
        }
    }

    /// Q[α,β,γ] modulo γ^{g+1}.
    pub fn gamma_capped(g: usize) -> Self {
        PolyRing {
            table: classes::abc_table(),
            cap: Some((2, g as u32)),
        }
    }

    pub fn normalize(&self, p: GradedPoly) -> GradedPoly {
        match self.cap {
            Some((v, e)) => p.cap(v, e),
            None => p,
        }
    }
}

impl CoeffRing for PolyRing {
    type Elem = GradedPoly;

    fn zero(&self) -> GradedPoly {
        GradedPoly::zero(&self.table)
    }
    fn from_rational(&self, q: Rational) -> GradedPoly {
        GradedPoly::constant(&self.table, q)
    }
    fn is_zero(&self, a: &GradedPoly) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
        a + b
    }
    fn neg(&self, a: &GradedPoly) -> GradedPoly {
        -a
    }
    fn mul(&self, a: &GradedPoly, b: &GradedPoly) -> GradedPoly {
        self.normalize(a * b)
    }
    fn scale(&self, a: &GradedPoly, q: &Rational) -> GradedPoly {
        a.scale(q)
    }
    fn scalar_inverse(&self, a: &GradedPoly) -> Option<GradedPoly> {
        let c = a.as_constant()?;
        (!c.is_zero()).then(|| GradedPoly::constant(&self.table, c.recip()))
    }
}

/// Univariate series `Σ_{i < order} c_i x^i`.
#[derive(Clone, Debug)]
pub struct Series<R: CoeffRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: CoeffRing> PartialEq for Series<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: CoeffRing> Series<R> {
    pub fn zero(ring: &R, order: usize) -> Self {
        Series {
            ring: ring.clone(),
            coeffs: vec![ring.zero(); order],
        }
    }

    pub fn one(ring: &R, order: usize) -> Self {
        Self::constant(ring, ring.one(), order)
    }

    pub fn constant(ring: &R, c: R::Elem, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// Coefficients beyond `order` are discarded, missing ones are zero.
    pub fn from_coeffs(ring: &R, coeffs: Vec<R::Elem>, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        for (i, c) in coeffs.into_iter().take(order).enumerate() {
            s.coeffs[i] = c;
        }
        s
    }

    /// The monomial `c·x^k`.
    pub fn monomial(ring: &R, c: R::Elem, k: usize, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn set_coeff(&mut self, i: usize, c: R::Elem) {
        if i < self.order() {
            self.coeffs[i] = c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(&self.ring, self.coeffs.clone(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        Series {
            ring: self.ring.clone(),
            coeffs: (0..n)
                .map(|i| self.ring.add(&self.coeffs[i], &other.coeffs[i]))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.scale(c, q)).collect(),
        }
    }

    pub fn scale_elem(&self, e: &R::Elem) -> Self {
        Series {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| self.ring.mul(e, c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        let mut out = Self::zero(&self.ring, n);
        for i in 0..n {
            if self.ring.is_zero(&self.coeffs[i]) {
                continue;
            }
            for j in 0..n - i {
                if self.ring.is_zero(&other.coeffs[j]) {
                    continue;
                }
                let prod = self.ring.mul(&self.coeffs[i], &other.coeffs[j]);
                out.coeffs[i + j] = self.ring.add(&out.coeffs[i + j], &prod);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring, self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(&self.ring, n);
        for i in 0..n.saturating_sub(k) {
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(&self.ring, n.saturating_sub(1));
        for i in 1..n {
            out.coeffs[i - 1] = self.ring.scale(&self.coeffs[i], &qi(i as i64));
        }
        out
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(&self.ring, n);
        for i in 0..n.saturating_sub(1) {
            out.coeffs[i + 1] = self
                .ring
                .scale(&self.coeffs[i], &Rational::new(1.into(), (i as i64 + 1).into()));
        }
        out
    }

    fn require_zero_constant(&self, what: &str) -> Result<()> {
        if self.order() > 0 && !self.ring.is_zero(&self.coeffs[0]) {
            return Err(Error::Series(format!("{what} requires a zero constant term")));
        }
        Ok(())
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        inner.require_zero_constant("compose")?;
        let n = self.common_order(inner);
        let mut acc = Self::zero(&self.ring, n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(&self.ring, c.clone(), n));
        }
        Ok(acc)
    }

    /// `exp(self)`; requires zero constant term. Uses `n e_n = Σ k a_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        self.require_zero_constant("exp")?;
        let n = self.order();
        let mut e = Self::one(&self.ring, n);
        for m in 1..n {
            let mut acc = self.ring.zero();
            for k in 1..=m {
                if self.ring.is_zero(&self.coeffs[k]) {
                    continue;
                }
                let term = self.ring.mul(&self.coeffs[k], &e.coeffs[m - k]);
                acc = self.ring.add(&acc, &self.ring.scale(&term, &qi(k as i64)));
            }
            e.coeffs[m] = self.ring.scale(&acc, &Rational::new(1.into(), (m as i64).into()));
        }
        Ok(e)
    }

    /// Multiplicative inverse; the constant term must be an invertible scalar.
    pub fn geometric_inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let inv0 = self
            .ring
            .scalar_inverse(&self.coeffs[0])
            .ok_or_else(|| Error::Series("geometric_inverse requires a unit constant term".into()))?;
        let mut b = Self::zero(&self.ring, n);
        b.coeffs[0] = inv0.clone();
        for m in 1..n {
            let mut acc = self.ring.zero();
            for i in 1..=m {
                if self.ring.is_zero(&self.coeffs[i]) {
                    continue;
                }
                acc = self.ring.add(&acc, &self.ring.mul(&self.coeffs[i], &b.coeffs[m - i]));
            }
            b.coeffs[m] = self.ring.neg(&self.ring.mul(&inv0, &acc));
        }
        Ok(b)
    }

    /// Maps coefficients into another ring.
    pub fn map<S: CoeffRing>(&self, ring: &S, f: impl Fn(&R::Elem) -> S::Elem) -> Series<S> {
        Series {
            ring: ring.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// Bivariate series `Σ_{r+s < order} c_{r,s} x^r y^s`.
#[derive(Clone, Debug)]
pub struct BiSeries<R: CoeffRing> {
    ring: R,
    order: usize,
    // coeffs[r][s], s < order - r
    coeffs: Vec<Vec<R::Elem>>,
}

impl<R: CoeffRing> PartialEq for BiSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.coeffs == other.coeffs
    }
}

impl<R: CoeffRing> BiSeries<R> {
    pub fn zero(ring: &R, order: usize) -> Self {
        BiSeries {
            ring: ring.clone(),
            order,
            coeffs: (0..order).map(|r| vec![ring.zero(); order - r]).collect(),
        }
    }

    pub fn one(ring: &R, order: usize) -> Self {
        let mut s = Self::zero(ring, order);
        if order > 0 {
            s.coeffs[0][0] = ring.one();
        }
        s
    }

    /// `c·x^r y^s`.
    pub fn monomial(ring: &R, c: R::Elem, r: usize, s: usize, order: usize) -> Self {
        let mut out = Self::zero(ring, order);
        out.set(r, s, c);
        out
    }

    /// A series in `x` alone.
    pub fn from_x(f: &Series<R>, order: usize) -> Self {
        let mut out = Self::zero(&f.ring, order);
        for (r, c) in f.coeffs.iter().enumerate().take(order) {
            out.coeffs[r][0] = c.clone();
        }
        out
    }

    /// A series in `y` alone.
    pub fn from_y(f: &Series<R>, order: usize) -> Self {
        let mut out = Self::zero(&f.ring, order);
        for (s, c) in f.coeffs.iter().enumerate().take(order) {
            out.coeffs[0][s] = c.clone();
        }
        out
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn get(&self, r: usize, s: usize) -> R::Elem {
        if r + s < self.order {
            self.coeffs[r][s].clone()
        } else {
            self.ring.zero()
        }
    }

    pub fn set(&mut self, r: usize, s: usize, c: R::Elem) {
        if r + s < self.order {
            self.coeffs[r][s] = c;
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order.min(other.order);
        let mut out = Self::zero(&self.ring, n);
        for r in 0..n {
            for s in 0..n - r {
                out.coeffs[r][s] = self.ring.add(&self.coeffs[r][s], &other.coeffs[r][s]);
            }
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = self.clone();
        for row in out.coeffs.iter_mut() {
            for c in row.iter_mut() {
                *c = self.ring.scale(c, q);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order.min(other.order);
        let mut out = Self::zero(&self.ring, n);
        for r1 in 0..n {
            for s1 in 0..n - r1 {
                let a = &self.coeffs[r1][s1];
                if self.ring.is_zero(a) {
                    continue;
                }
                for r2 in 0..n - r1 - s1 {
                    for s2 in 0..n - r1 - s1 - r2 {
                        let b = &other.coeffs[r2][s2];
                        if self.ring.is_zero(b) {
                            continue;
                        }
                        let slot = &mut out.coeffs[r1 + r2][s1 + s2];
                        *slot = self.ring.add(slot, &self.ring.mul(a, b));
                    }
                }
            }
        }
        out
    }

    fn require_zero_constant(&self, what: &str) -> Result<()> {
        if self.order > 0 && !self.ring.is_zero(&self.coeffs[0][0]) {
            return Err(Error::Series(format!("{what} requires a zero constant term")));
        }
        Ok(())
    }

    /// `f(self)` for a univariate `f`; `self` must have zero constant term.
    pub fn compose_into(&self, f: &Series<R>) -> Result<Self> {
        self.require_zero_constant("compose")?;
        let n = self.order;
        let mut acc = Self::zero(&self.ring, n);
        for c in f.coeffs.iter().take(n).rev() {
            acc = acc.mul(self).add(&Self::monomial(&self.ring, c.clone(), 0, 0, n));
        }
        Ok(acc)
    }

    /// `exp(self)`; zero constant term required.
    pub fn exp(&self) -> Result<Self> {
        self.require_zero_constant("exp")?;
        let n = self.order;
        let mut acc = Self::one(&self.ring, n);
        let mut power = Self::one(&self.ring, n);
        // self has valuation ≥ 1, so self^k vanishes to order for k ≥ n
        for k in 1..n {
            power = power.mul(self);
            acc = acc.add(&power.scale(&inv_factorial(k as i64)));
        }
        Ok(acc)
    }
}

/// The four even functions of `t = √(3x)` entering the φ coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EvenKind {
    /// `t / tanh t`
    TOverTanh,
    /// `t / sinh t`
    TOverSinh,
    /// `1 / cosh² t`
    InvCoshSq,
    /// `(3/t²)(1 − tanh t / t)`
    OneMinusTanhOverT,
}

/// `Σ 3^n x^n / (2n + shift)!`: `cosh t` for shift 0, `sinh t / t` for shift 1.
fn cosh_like(shift: i64, order: usize) -> Series<QField> {
    let mut three = Rational::one();
    let coeffs = (0..order)
        .map(|n| {
            let c = &three * inv_factorial(2 * n as i64 + shift);
            three *= qi(3);
            c
        })
        .collect();
    Series::from_coeffs(&QField, coeffs, order)
}

/// An even series evaluated at `t = √(3x)`, as a series in `x`.
pub fn even_series(kind: EvenKind, order: usize) -> Series<QField> {
    let inv = |s: Series<QField>| s.geometric_inverse().expect("unit constant term");
    match kind {
        EvenKind::TOverSinh => inv(cosh_like(1, order)),
        EvenKind::TOverTanh => cosh_like(0, order).mul(&inv(cosh_like(1, order))),
        EvenKind::InvCoshSq => {
            let sech = inv(cosh_like(0, order));
            sech.mul(&sech)
        }
        EvenKind::OneMinusTanhOverT => {
            // tanh t / t = 1 - x + ..., so (1 - tanh t / t) / x needs one extra term
            let n = order + 1;
            let tanh_over_t = cosh_like(1, n).mul(&inv(cosh_like(0, n)));
            let num = Series::one(&QField, n).sub(&tanh_over_t);
            Series::from_coeffs(&QField, num.coeffs()[1..].to_vec(), order)
        }
    }
}

/// `F^k_0(x) = Σ_r ξ^k_r x^r` in the γ-capped ring.
pub fn f0_series(g: usize, k: usize, order: usize) -> Series<PolyRing> {
    let ring = PolyRing::gamma_capped(g);
    let coeffs = classes::xi_table(g, k, order);
    Series::from_coeffs(&ring, coeffs, order)
}

fn abc_var(ring: &PolyRing, name: &str) -> GradedPoly {
    GradedPoly::var(&ring.table, name).expect("standard variable")
}

/// Residual of `(1−βx²)F′ − (α + (1−2k)βx + 2γx²)F` for a given series.
pub fn ode_residual(f: &Series<PolyRing>, k: usize) -> Series<PolyRing> {
    let ring = f.ring().clone();
    let n = f.order().saturating_sub(1);
    let (a, b, c) = (abc_var(&ring, "α"), abc_var(&ring, "β"), abc_var(&ring, "γ"));
    let lhs_factor = Series::from_coeffs(
        &ring,
        vec![ring.one(), ring.zero(), b.scale_int(-1)],
        n,
    );
    let rhs_factor = Series::from_coeffs(
        &ring,
        vec![a, b.scale_int(1 - 2 * k as i64), c.scale_int(2)],
        n,
    );
    let lhs = lhs_factor.mul(&f.derivative());
    let rhs = rhs_factor.mul(&f.truncate(n));
    lhs.sub(&rhs)
}

/// The first-order ODE satisfied by `F^k_0`, checked to the given order.
pub fn ode_check_f0(g: usize, k: usize, order: usize) -> bool {
    ode_residual(&f0_series(g, k, order), k).is_zero()
}

/// `F^k(x,y) = Σ ξ^k_{r,s} x^r y^s` using the given coefficient function.
pub fn bivariate_lhs(
    g: usize,
    order: usize,
    coeff: impl Fn(usize, usize) -> GradedPoly,
) -> BiSeries<PolyRing> {
    let ring = PolyRing::gamma_capped(g);
    let mut out = BiSeries::zero(&ring, order);
    for r in 0..order {
        for s in 0..order - r {
            out.set(r, s, ring.normalize(coeff(r, s)));
        }
    }
    out
}

/// `(1−βy)^{2k−1} exp(2γxy/(1−βy)) F^k_0(x/(1−βy))`.
pub fn bivariate_rhs(g: usize, k: usize, order: usize) -> BiSeries<PolyRing> {
    let ring = PolyRing::gamma_capped(g);
    let b = abc_var(&ring, "β");
    let c = abc_var(&ring, "γ");
    let one_minus_by = Series::from_coeffs(&ring, vec![ring.one(), -&b], order);
    let inv = one_minus_by
        .geometric_inverse()
        .expect("constant term one");
    let prefactor = one_minus_by.pow(2 * k as u32).mul(&inv);
    let inv_y = BiSeries::from_y(&inv, order);
    let x = BiSeries::monomial(&ring, ring.one(), 1, 0, order);
    let x_over = x.mul(&inv_y);
    let xy = BiSeries::monomial(&ring, c.scale_int(2), 1, 1, order);
    let expo = xy.mul(&inv_y).exp().expect("zero constant term");
    let f0 = f0_series(g, k, order);
    let composed = x_over.compose_into(&f0).expect("zero constant term");
    BiSeries::from_y(&prefactor, order).mul(&expo).mul(&composed)
}

/// Whether `Σ ξ^k_{r,s} x^r y^s` agrees with the closed functional form.
///
/// The two-index classes here use the generalized binomial, which is what
/// the functional equation expands to; for `r ≥ 2k` it agrees with
/// [`classes::xi_rs`].
pub fn bivariate_identity_check(g: usize, k: usize, order: usize) -> bool {
    let lhs = bivariate_lhs(g, order, |r, s| classes::xi_rs_extended(g, k, r, s));
    lhs == bivariate_rhs(g, k, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn x_series(coeffs: &[i64], order: usize) -> Series<QField> {
        Series::from_coeffs(&QField, coeffs.iter().map(|&c| qi(c)).collect(), order)
    }

    #[test]
    fn basic_series_algebra() {
        let zero = Series::zero(&QField, 6);
        assert_eq!(zero.exp().unwrap(), Series::one(&QField, 6));
        let inv = x_series(&[1, -1], 6).geometric_inverse().unwrap();
        assert_eq!(inv, x_series(&[1; 6], 6));
        let x = x_series(&[0, 1], 8);
        let prod = x.exp().unwrap().mul(&x.neg().exp().unwrap());
        assert_eq!(prod, Series::one(&QField, 8));
        assert!(x_series(&[2, 1], 4).geometric_inverse().is_ok());
        assert!(x_series(&[0, 1], 4).geometric_inverse().is_err());
        assert!(x_series(&[1, 1], 4).exp().is_err());
    }

    #[test]
    fn compose_and_integrate() {
        // log(1+x) composed into exp gives 1 + x
        let n = 7;
        let dlog = x_series(&[1, 1], n).geometric_inverse().unwrap();
        let log1p = dlog.integrate();
        let e = Series::from_coeffs(&QField, (0..n).map(|i| inv_factorial(i as i64)).collect(), n);
        assert_eq!(e.compose(&log1p).unwrap(), x_series(&[1, 1], n));
        assert!(e.compose(&x_series(&[1, 1], n)).is_err());
    }

    #[test]
    fn even_series_spot_values() {
        assert_eq!(even_series(EvenKind::TOverSinh, 4).coeff(1), q(-1, 2));
        assert_eq!(even_series(EvenKind::InvCoshSq, 4).coeff(1), qi(-3));
        for kind in [
            EvenKind::TOverTanh,
            EvenKind::TOverSinh,
            EvenKind::InvCoshSq,
            EvenKind::OneMinusTanhOverT,
        ] {
            assert_eq!(even_series(kind, 3).coeff(0), qi(1));
        }
        // t/tanh t = 1 + t²/3 - ..., so x-coefficient 1
        assert_eq!(even_series(EvenKind::TOverTanh, 3).coeff(1), qi(1));
    }

    #[test]
    fn bivariate_mul_matches_univariate() {
        let f = x_series(&[1, 2, 3], 5);
        let bf = BiSeries::from_x(&f, 5);
        let sq = bf.mul(&bf);
        let fsq = f.mul(&f);
        for r in 0..5 {
            assert_eq!(sq.get(r, 0), fsq.coeff(r));
        }
    }

    #[test]
    fn ode_small_cases() {
        assert!(ode_check_f0(2, 0, 10));
        assert!(ode_check_f0(2, 1, 10));
        let mut f = f0_series(2, 0, 10);
        let bumped = f.coeff(3) + GradedPoly::from_int(&f.ring().table, 1);
        f.set_coeff(3, bumped);
        assert!(!ode_residual(&f, 0).is_zero());
    }
}
