//! The named polynomial families: `ρ^c_{r,s,t}`, `ξ^k_r`, `ξ^k_{r,s}`, the
//! ideal generators of `I^g_n`, the φ coefficients and the equivariant
//! classes built from `F^k(u,1)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::combinat::{binomial, binomial_general, factorial_q, inv_factorial};
use crate::exact::{qi, GradedPoly, HomogeneousIdeal, Rational, TableRef, VarTable};
use crate::series::{even_series, EvenKind, QField, Series};

const ALPHA: usize = 0;
const BETA: usize = 1;
const GAMMA: usize = 2;

/// Genus and twist of a moduli space `M^g_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuliParams {
    pub g: usize,
    pub n: usize,
}

impl ModuliParams {
    /// Moduli-level operations need `g ≥ 2`.
    pub fn new(g: usize, n: usize) -> Result<Self> {
        if g < 2 {
            return Err(Error::Params(format!("genus must be at least 2, got {g}")));
        }
        Ok(ModuliParams { g, n })
    }
}

/// Index of a generator `ρ^c_{r,s,t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RhoIndex {
    pub c: i64,
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl RhoIndex {
    /// `c = r + 3s + 2t − 2g + 2 − n`.
    pub fn new(g: usize, n: usize, r: usize, s: usize, t: usize) -> Self {
        let c = (r + 3 * s + 2 * t) as i64 - 2 * g as i64 + 2 - n as i64;
        RhoIndex { c, r, s, t }
    }

    pub fn total_degree(&self) -> usize {
        self.r + 2 * self.s + 3 * self.t
    }

    /// Both membership conditions: `r+3s+3t > 3g−3+n` and `r+2s+2t ≥ 2g−2+n`.
    pub fn admissible(&self, g: usize, n: usize) -> bool {
        let (r, s, t) = (self.r as i64, self.s as i64, self.t as i64);
        let (g, n) = (g as i64, n as i64);
        r + 3 * s + 3 * t > 3 * g - 3 + n && r + 2 * s + 2 * t >= 2 * g - 2 + n
    }
}

fn abc() -> TableRef {
    static TABLE: OnceLock<TableRef> = OnceLock::new();
    TABLE.get_or_init(VarTable::abc).clone()
}

fn abcu() -> TableRef {
    static TABLE: OnceLock<TableRef> = OnceLock::new();
    TABLE.get_or_init(VarTable::abcu).clone()
}

/// Shared `Q[α,β,γ]` table.
pub fn abc_table() -> TableRef {
    abc()
}

/// Shared `Q[α,β,γ,u]` table.
pub fn abcu_table() -> TableRef {
    abcu()
}

fn mono(a: usize, b: usize, c: usize, coeff: Rational) -> GradedPoly {
    GradedPoly::monomial(&abc(), vec![a as u32, b as u32, c as u32], coeff)
        .expect("even monomial")
}

fn cap(p: GradedPoly, gamma_cap: Option<usize>) -> GradedPoly {
    match gamma_cap {
        Some(g) => p.cap(GAMMA, g as u32),
        None => p,
    }
}

type XiKey = (Option<usize>, usize);

fn xi_cache() -> &'static Mutex<HashMap<XiKey, Arc<Vec<GradedPoly>>>> {
    static CACHE: OnceLock<Mutex<HashMap<XiKey, Arc<Vec<GradedPoly>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `ξ^k_0, …, ξ^k_{len−1}` from
/// `(r+1)ξ_{r+1} = αξ_r + (r−2k)βξ_{r−1} + 2γξ_{r−2}` (for all `r ≥ 0`),
/// optionally reduced modulo `γ^{cap+1}`.
pub fn xi_table_in(gamma_cap: Option<usize>, k: usize, len: usize) -> Arc<Vec<GradedPoly>> {
    if let Some(t) = xi_cache().lock().expect("xi cache").get(&(gamma_cap, k)) {
        if t.len() >= len {
            return t.clone();
        }
    }
    let t = abc();
    let a = GradedPoly::var_at(&t, ALPHA);
    let b = GradedPoly::var_at(&t, BETA);
    let c2 = GradedPoly::var_at(&t, GAMMA).scale_int(2);
    let zero = GradedPoly::zero(&t);
    let mut xs: Vec<GradedPoly> = Vec::with_capacity(len.max(1));
    xs.push(GradedPoly::one(&t));
    for r in 0..len.saturating_sub(1) {
        let prev = |j: i64| if j >= 0 { &xs[j as usize] } else { &zero };
        let ri = r as i64;
        let mut next = &a * prev(ri);
        next = &next + &(&b * prev(ri - 1)).scale_int(ri - 2 * k as i64);
        next = &next + &(&c2 * prev(ri - 2));
        next = cap(next, gamma_cap).scale(&Rational::new(BigInt::one(), BigInt::from(r + 1)));
        xs.push(next);
    }
    xs.truncate(len);
    let xs = Arc::new(xs);
    let mut cache = xi_cache().lock().expect("xi cache");
    let slot = cache.entry((gamma_cap, k)).or_insert_with(|| xs.clone());
    if slot.len() < xs.len() {
        *slot = xs.clone();
    }
    xs
}

/// `ξ^k_0, …, ξ^k_{len−1}` in `Q[α,β,γ]/(γ^{g+1})`.
pub fn xi_table(g: usize, k: usize, len: usize) -> Vec<GradedPoly> {
    xi_table_in(Some(g), k, len)[..len].to_vec()
}

/// `ξ^k_r`, γ-capped at `g`.
pub fn xi(g: usize, k: usize, r: usize) -> GradedPoly {
    xi_table_in(Some(g), k, r + 1)[r].clone()
}

fn xi_rs_impl(
    gamma_cap: Option<usize>,
    k: usize,
    r: usize,
    s: usize,
    binom: impl Fn(i64, usize, usize) -> BigInt,
) -> GradedPoly {
    let table = xi_table_in(gamma_cap, k, r + 1);
    let mut acc = GradedPoly::zero(&abc());
    let imax = r.min(s).min(gamma_cap.unwrap_or(usize::MAX));
    for i in 0..=imax {
        let b = binom(r as i64 - 2 * k as i64, s, i);
        if b.is_zero() {
            continue;
        }
        let two_i = Rational::from_integer(BigInt::from(2).pow(i as u32));
        let coeff = Rational::from_integer(b) * two_i * inv_factorial(i as i64);
        let term = mono(0, s - i, i, coeff) * table[r - i].clone();
        acc = acc + term;
    }
    cap(acc, gamma_cap)
}

/// `ξ^k_{r,s} = Σ_i C(r−2k+s−i, r−2k) β^{s−i} (2γ)^i/i! ξ^k_{r−i}`, with
/// `C(a,b) = 0` for `a < b` or `b < 0`, so it vanishes for `r < 2k`.
pub fn xi_rs_in(gamma_cap: Option<usize>, k: usize, r: usize, s: usize) -> GradedPoly {
    xi_rs_impl(gamma_cap, k, r, s, |d, s, i| binomial(d + (s - i) as i64, d))
}

/// [`xi_rs_in`] in the γ-capped ring.
pub fn xi_rs(g: usize, k: usize, r: usize, s: usize) -> GradedPoly {
    xi_rs_in(Some(g), k, r, s)
}

/// The same sum with the generalized binomial `C(r−2k+s−i, s−i)`, allowing a
/// negative upper index. Equal to [`xi_rs`] for `r ≥ 2k`; for `r < 2k` this is
/// the coefficient that the bivariate generating function actually produces.
pub fn xi_rs_extended(g: usize, k: usize, r: usize, s: usize) -> GradedPoly {
    xi_rs_impl(Some(g), k, r, s, |d, s, i| {
        binomial_general(d + (s - i) as i64, (s - i) as i64)
    })
}

/// `ρ^c_{r,s,t} = Σ_{i ≤ min(c,r,s)} (c−i)! α^{r−i}/(r−i)! β^{s−i}/(s−i)! (2γ)^{t+i}/i!`
/// with an explicit `c ≥ 0`. Not γ-capped.
pub fn rho_with_c(c: i64, r: usize, s: usize, t: usize) -> Result<GradedPoly> {
    if c < 0 {
        return Err(Error::Index(format!(
            "rho requires c >= 0, got c = {c} at (r,s,t) = ({r},{s},{t})"
        )));
    }
    let mut acc = GradedPoly::zero(&abc());
    let imax = (c as usize).min(r).min(s);
    for i in 0..=imax {
        let two = Rational::from_integer(BigInt::from(2).pow((t + i) as u32));
        let coeff = factorial_q(c - i as i64)
            * inv_factorial((r - i) as i64)
            * inv_factorial((s - i) as i64)
            * inv_factorial(i as i64)
            * two;
        acc = acc + mono(r - i, s - i, t + i, coeff);
    }
    Ok(acc)
}

/// `ρ^c_{r,s,t}` with `c = r+3s+2t−2g+2−n`.
pub fn rho(g: usize, n: usize, r: usize, s: usize, t: usize) -> Result<GradedPoly> {
    rho_with_c(RhoIndex::new(g, n, r, s, t).c, r, s, t)
}

/// `γ^{g+1}`.
pub fn gamma_power(g: usize) -> GradedPoly {
    mono(0, 0, g + 1, Rational::one())
}

/// Generators of `I^g_n` up to a total degree.
#[derive(Clone, Debug)]
pub struct IdealGenerators {
    pub g: usize,
    pub n: usize,
    pub max_total_degree: usize,
    pub rhos: Vec<(RhoIndex, GradedPoly)>,
    /// `γ^{g+1}`, if its total degree is within range.
    pub gamma: Option<GradedPoly>,
}

/// All admissible `ρ^c_{r,s,t}` of total degree `r+2s+3t ≤ max_total_degree`,
/// ordered by degree then `(t, s, r)`, together with `γ^{g+1}`.
pub fn ideal_generators(g: usize, n: usize, max_total_degree: usize) -> IdealGenerators {
    let mut idx = Vec::new();
    for t in 0..=max_total_degree / 3 {
        for s in 0..=(max_total_degree - 3 * t) / 2 {
            for r in 0..=max_total_degree - 3 * t - 2 * s {
                let i = RhoIndex::new(g, n, r, s, t);
                if i.admissible(g, n) {
                    idx.push(i);
                }
            }
        }
    }
    idx.sort_by_key(|i| (i.total_degree(), i.t, i.s, i.r));
    let rhos = idx
        .into_iter()
        .map(|i| {
            let p = rho_with_c(i.c, i.r, i.s, i.t).expect("admissible indices have c >= 0");
            (i, p)
        })
        .collect();
    let gamma = (3 * (g + 1) <= max_total_degree).then(|| gamma_power(g));
    IdealGenerators {
        g,
        n,
        max_total_degree,
        rhos,
        gamma,
    }
}

/// `I^g_n ⊂ Q[α,β,γ]`, with slices available through the given total degree.
pub fn ideal_in(g: usize, n: usize, max_total_degree: usize) -> HomogeneousIdeal {
    let gens = ideal_generators(g, n, max_total_degree);
    let mut polys: Vec<GradedPoly> = gens.rhos.into_iter().map(|(_, p)| p).collect();
    polys.push(gamma_power(g));
    HomogeneousIdeal::new(&abc(), polys, Some(2 * max_total_degree as u32))
        .expect("generators are homogeneous")
}

/// `φ^k_m(r,p)`: the `x^m` coefficient of
/// `cosh^{−2k}(t) · (t/sinh t) · (t/tanh t)^r · ((3/t²)(1 − tanh t/t))^p`, `t = √(3x)`.
pub fn phi(k: usize, m: usize, r: usize, p: usize) -> Rational {
    phi_series(k, r, p, m + 1).coeff(m)
}

fn phi_series(k: usize, r: usize, p: usize, order: usize) -> Series<QField> {
    let a = even_series(EvenKind::InvCoshSq, order).pow(k as u32);
    let b = even_series(EvenKind::TOverSinh, order);
    let c = even_series(EvenKind::TOverTanh, order).pow(r as u32);
    let d = even_series(EvenKind::OneMinusTanhOverT, order).pow(p as u32);
    a.mul(&b).mul(&c).mul(&d)
}

/// `ξ^k_r = Σ_{m,p} φ^k_m(r,p) / (3^{m+p} (r−2m−3p)! p!) α^{r−2m−3p} β^m (2γ)^p`,
/// γ-capped at `g`.
pub fn xi_via_phi(g: usize, k: usize, r: usize) -> GradedPoly {
    let mut acc = GradedPoly::zero(&abc());
    for p in 0..=(r / 3).min(g) {
        let order = (r - 3 * p) / 2 + 1;
        let series = phi_series(k, r, p, order);
        for m in 0..order {
            let ph = series.coeff(m);
            if ph.is_zero() {
                continue;
            }
            let three = Rational::from_integer(BigInt::from(3).pow((m + p) as u32));
            let two = Rational::from_integer(BigInt::from(2).pow(p as u32));
            let coeff = ph / three
                * inv_factorial((r - 2 * m - 3 * p) as i64)
                * inv_factorial(p as i64)
                * two;
            acc = acc + mono(r - 2 * m - 3 * p, m, p, coeff);
        }
    }
    acc
}

fn lift_to_abcu(p: &GradedPoly) -> GradedPoly {
    p.to_table(&abcu()).expect("abc embeds in abcu")
}

fn u_power(e: usize) -> GradedPoly {
    GradedPoly::monomial(&abcu(), vec![0, 0, 0, e as u32], Rational::one()).expect("even monomial")
}

/// `F^k(u,1)_{2g+2n} = Σ_{r=0}^{g+n} ξ^k_{r,g+n−r} u^r`, an equivariant class on
/// `M_{n+2}` for `0 ≤ k ≤ ⌊n/2⌋`.
pub fn equivariant_family_84(g: usize, n: usize, k: usize) -> Result<GradedPoly> {
    if k > n / 2 {
        return Err(Error::Index(format!("k = {k} out of range 0..={} for n = {n}", n / 2)));
    }
    let mut acc = GradedPoly::zero(&abcu());
    for r in 0..=g + n {
        let c = xi_rs(g, k, r, g + n - r);
        if !c.is_zero() {
            acc = acc + lift_to_abcu(&c) * u_power(r);
        }
    }
    Ok(acc)
}

/// Range of `k` allowed by [`theorem86_class`] for a given `n`.
pub fn theorem86_k_range(n: usize) -> std::ops::RangeInclusive<usize> {
    if n.is_multiple_of(2) {
        0..=n / 2
    } else {
        0..=(n - 1) / 2
    }
}

/// Even `n`: `((2+u²−β)^{n/2−k} F^k(u,1))_{2g+n+2k}`.
/// Odd `n`: `((1+u²−β)(2+u²−β)^{(n−1)/2−k} F^k(u,1))_{2g+n+2k+1}`.
/// Subscripts are total degrees; `u` has total degree 1.
pub fn theorem86_class(g: usize, n: usize, k: usize) -> Result<GradedPoly> {
    if !theorem86_k_range(n).contains(&k) {
        return Err(Error::Index(format!("k = {k} out of range for n = {n}")));
    }
    let t = abcu();
    let u2_minus_b = u_power(2) - GradedPoly::var_at(&t, BETA);
    let (e, target, extra_one) = if n.is_multiple_of(2) {
        (n / 2 - k, 2 * g + n + 2 * k, false)
    } else {
        ((n - 1) / 2 - k, 2 * g + n + 2 * k + 1, true)
    };
    let two = GradedPoly::from_int(&t, 2);
    let mut prefactor = (&two + &u2_minus_b).pow(e as u32);
    if extra_one {
        prefactor = prefactor * (GradedPoly::one(&t) + u2_minus_b);
    }
    // F^k(u,1) restricted to the terms that can reach the target degree
    let half = target / 2;
    let mut f = GradedPoly::zero(&t);
    for total in 0..=half {
        for r in 0..=total {
            let c = xi_rs(g, k, r, total - r);
            if !c.is_zero() {
                f = f + lift_to_abcu(&c) * u_power(r);
            }
        }
    }
    let product = (prefactor * f).cap(GAMMA, g as u32);
    Ok(product.homogeneous_part(2 * target as u32))
}

/// One relation from the two index families on `M_{n+2}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IndexedRelation {
    /// `1` or `2` for the two families.
    pub family: u8,
    /// Family parameter `i` or `j`.
    pub param: usize,
    pub k: usize,
    pub r: usize,
    pub s: usize,
    #[serde(skip)]
    pub poly: Option<GradedPoly>,
}

/// For `n ≥ −2`: `ξ^k_{r,s}` (even `n`) or `ξ^k_{r,s} − βξ^k_{r,s−1}` (odd `n`),
/// a relation in the ordinary cohomology of `M_{n+2}`, for
/// (1) `k=⌊n/2⌋−i, r=n−2i, s=g+i`, `i = 0..=⌊n/2⌋`, and
/// (2) `k=⌊n/2⌋+j, r=n+3j, s=g−j`, `j = 1..=g`.
/// Index combinations with a negative entry are skipped.
pub fn theorem88_relations(g: usize, n: i64) -> Result<Vec<IndexedRelation>> {
    if n < -2 {
        return Err(Error::Params(format!("n must be at least -2, got {n}")));
    }
    let half = n.div_euclid(2);
    let g_i = g as i64;
    let mut raw: Vec<(u8, usize, i64, i64, i64)> = Vec::new();
    for i in 0..=half.max(-1) {
        raw.push((1, i as usize, half - i, n - 2 * i, g_i + i));
    }
    for j in 1..=g_i {
        raw.push((2, j as usize, half + j, n + 3 * j, g_i - j));
    }
    let odd = n.rem_euclid(2) == 1;
    let mut out = Vec::new();
    for (family, param, k, r, s) in raw {
        if k < 0 || r < 0 || s < 0 {
            continue;
        }
        let (k, r, s) = (k as usize, r as usize, s as usize);
        let mut p = xi_rs(g, k, r, s);
        if odd && s >= 1 {
            let b = GradedPoly::var_at(&abc(), BETA);
            p = p - (b * xi_rs(g, k, r, s - 1)).cap(GAMMA, g as u32);
        }
        out.push(IndexedRelation {
            family,
            param,
            k,
            r,
            s,
            poly: Some(p),
        });
    }
    Ok(out)
}

/// The coefficient `C(r+l, r) + C(r+l−1, r)` of the product expansion, with
/// `C(−1, 0) = 0`.
fn theorem75_coeff(r: usize, l: usize) -> Rational {
    let (r, l) = (r as i64, l as i64);
    Rational::from_integer(binomial(r + l, r) + binomial(r + l - 1, r))
}

/// Right-hand side `Σ_{l ≤ s} (−1)^{s−l} [C(r+l,r)+C(r+l−1,r)] ξ^k_{s−l} ξ^k_{r+s+l}`.
pub fn theorem75_rhs(g: usize, k: usize, r: usize, s: usize) -> GradedPoly {
    let xs = xi_table_in(Some(g), k, r + 2 * s + 1);
    let mut acc = GradedPoly::zero(&abc());
    for l in 0..=s {
        let sign = if (s - l).is_multiple_of(2) { 1 } else { -1 };
        let coeff = theorem75_coeff(r, l) * qi(sign);
        let term = (&xs[s - l] * &xs[r + s + l]).cap(GAMMA, g as u32).scale(&coeff);
        acc = acc + term;
    }
    acc
}

/// `ξ^k_{2k, g+ℓ} = β^ℓ ξ^k_{2k, g}` in the γ-capped ring.
pub fn stability_holds(g: usize, k: usize, l: usize) -> bool {
    let lhs = xi_rs(g, k, 2 * k, g + l);
    let rhs = (mono(0, l, 0, Rational::one()) * xi_rs(g, k, 2 * k, g)).cap(GAMMA, g as u32);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_poly, q};

    fn p(s: &str) -> GradedPoly {
        parse_poly(s, &abc()).unwrap()
    }

    #[test]
    fn xi_small_values() {
        assert_eq!(xi(2, 0, 0), p("1"));
        assert_eq!(xi(2, 0, 1), p("a"));
        assert_eq!(xi(2, 0, 2), p("1/2*a^2 + 1/2*b"));
        assert_eq!(xi(2, 1, 2), p("1/2*a^2 - 1/2*b"));
    }

    #[test]
    fn xi_rs_small_values() {
        assert!(xi_rs(2, 1, 1, 3).is_zero());
        assert_eq!(xi_rs(2, 0, 0, 3), p("b^3"));
        assert_eq!(xi_rs(2, 0, 1, 1), p("2*a*b + 2*g3"));
        assert_eq!(xi_rs_extended(2, 0, 1, 1), xi_rs(2, 0, 1, 1));
        assert!(!xi_rs_extended(2, 1, 1, 1).is_zero());
    }

    #[test]
    fn rho_small_values() {
        assert_eq!(rho(2, 1, 0, 2, 0).unwrap(), p("3*b^2"));
        assert_eq!(rho(2, 0, 1, 1, 0).unwrap(), p("2*a*b + 2*g3"));
        assert_eq!(rho(1, 0, 0, 0, 0).unwrap(), p("1"));
        assert!(rho(3, 0, 0, 0, 0).is_err());
    }

    #[test]
    fn generator_listing() {
        let gens = ideal_generators(2, 0, 3);
        let idx: Vec<_> = gens.rhos.iter().map(|(i, _)| (i.r, i.s, i.t)).collect();
        assert!(idx.contains(&(1, 1, 0)));
        assert!(!idx.contains(&(0, 1, 0)));
        assert!(gens.gamma.is_none());
        assert!(ideal_generators(2, 0, 9).gamma.is_some());
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(3, 0, 4, 0), qi(1));
        assert_eq!(phi(0, 1, 0, 0), q(-1, 2));
        assert_eq!(phi(0, 1, 2, 0), q(3, 2));
        assert_eq!(xi_via_phi(2, 0, 2), p("1/2*a^2 + 1/2*b"));
        assert_eq!(xi_via_phi(4, 2, 5), xi(4, 2, 5));
    }

    #[test]
    fn family_84_shape() {
        let f = equivariant_family_84(2, 0, 0).unwrap();
        let u = abcu();
        let expected = lift_to_abcu(&xi_rs(2, 0, 0, 2))
            + lift_to_abcu(&xi_rs(2, 0, 1, 1)) * u_power(1)
            + lift_to_abcu(&xi_rs(2, 0, 2, 0)) * u_power(2);
        assert_eq!(f, expected);
        assert!(f.is_homogeneous_of(8));
        assert!(equivariant_family_84(2, 1, 1).is_err());
        assert!(equivariant_family_84(3, 4, 2).unwrap().divisible_by_power(u.require("u").unwrap(), 4));
    }

    #[test]
    fn theorem86_divisibility() {
        let t = abcu();
        let ui = t.require("u").unwrap();
        assert!(theorem86_class(2, 2, 1).unwrap().divisible_by_power(ui, 2));
        assert!(theorem86_class(2, 3, 1).unwrap().divisible_by_power(ui, 3));
        assert_eq!(
            theorem86_class(2, 0, 0).unwrap(),
            equivariant_family_84(2, 0, 0).unwrap()
        );
    }

    #[test]
    fn theorem88_indices() {
        let rels = theorem88_relations(2, 0).unwrap();
        let first = &rels[0];
        assert_eq!((first.k, first.r, first.s), (0, 0, 2));
        assert_eq!(first.poly.clone().unwrap(), p("b^2"));
        assert!(rels.iter().any(|x| x.family == 2 && (x.k, x.r, x.s) == (1, 3, 1)));
        assert!(theorem88_relations(2, -3).is_err());
        assert!(!theorem88_relations(2, -2).unwrap().is_empty());
    }

    #[test]
    fn product_identity_and_stability() {
        for g in 1..=3 {
            for k in 0..=2 {
                for r in 0..=5 {
                    for s in 0..=5 {
                        assert_eq!(
                            xi_rs_extended(g, k, r, s),
                            theorem75_rhs(g, k, r, s),
                            "g={g} k={k} r={r} s={s}"
                        );
                    }
                }
                for l in 0..=3 {
                    assert!(stability_holds(g, k, l));
                }
            }
        }
    }
}
