use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::vars::{same_table, TableRef};
use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector indexed by table position.
pub type Monomial = Vec<u32>;

/// Ordinary degree of a monomial.
pub fn monomial_degree(table: &TableRef, mono: &[u32]) -> u32 {
    mono.iter()
        .enumerate()
        .map(|(i, &e)| e * table.weight(i))
        .sum()
}

/// Product of two monomials in a graded-commutative ring.
///
/// Returns `None` when an odd generator would appear squared, otherwise the
/// product exponent vector and the sign picked up by reordering odd factors.
pub fn multiply_monomials(table: &TableRef, a: &[u32], b: &[u32]) -> Option<(Monomial, bool)> {
    let total_odd_a = (0..a.len()).filter(|&i| table.is_odd(i) && a[i] == 1).count();
    let mut out = Vec::with_capacity(a.len());
    let mut negative = false;
    let mut odd_a_seen = 0usize;
    for i in 0..a.len() {
        let e = a[i] + b[i];
        if table.is_odd(i) {
            if e > 1 {
                return None;
            }
            odd_a_seen += a[i] as usize;
            // ξ_i from `b` moves left past every odd factor of `a` with larger index
            if b[i] == 1 && (total_odd_a - odd_a_seen) % 2 == 1 {
                negative = !negative;
            }
        }
        out.push(e);
    }
    Some((out, negative))
}

/// Sparse polynomial over the rationals in a weight-graded,
/// graded-commutative ring described by a [`VarTable`](super::VarTable).
#[derive(Clone, Debug)]
pub struct GradedPoly {
    table: TableRef,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for GradedPoly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for GradedPoly {}

impl GradedPoly {
    pub fn zero(table: &TableRef) -> Self {
        GradedPoly {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(table: &TableRef, c: Rational) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(vec![0; table.len()], c);
        }
        p
    }

    pub fn one(table: &TableRef) -> Self {
        Self::constant(table, Rational::one())
    }

    pub fn from_int(table: &TableRef, c: i64) -> Self {
        Self::constant(table, Rational::from_integer(c.into()))
    }

    /// A single generator, looked up by name or alias.
    pub fn var(table: &TableRef, name: &str) -> Result<Self> {
        let i = table.require(name)?;
        Ok(Self::var_at(table, i))
    }

    pub fn var_at(table: &TableRef, i: usize) -> Self {
        let mut mono = vec![0; table.len()];
        mono[i] = 1;
        Self::monomial(table, mono, Rational::one()).expect("single generator")
    }

    pub fn monomial(table: &TableRef, mono: Monomial, coeff: Rational) -> Result<Self> {
        if mono.len() != table.len() {
            return Err(Error::TableMismatch(format!(
                "exponent vector of length {} for table of {} variables",
                mono.len(),
                table.len()
            )));
        }
        let mut p = Self::zero(table);
        if mono.iter().enumerate().any(|(i, &e)| table.is_odd(i) && e > 1) {
            return Ok(p);
        }
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        Ok(p)
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(table: &TableRef, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(table);
        for (m, c) in terms {
            p.add_term(m, c)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) -> Result<()> {
        if mono.len() != self.table.len() {
            return Err(Error::TableMismatch("exponent vector length".into()));
        }
        if coeff.is_zero()
            || mono
                .iter()
                .enumerate()
                .any(|(i, &e)| self.table.is_odd(i) && e > 1)
        {
            return Ok(());
        }
        accumulate(&mut self.terms, mono, coeff);
        Ok(())
    }

    pub fn table(&self) -> &TableRef {
        &self.table
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &[u32]) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn monomial_degree(&self, mono: &[u32]) -> u32 {
        monomial_degree(&self.table, mono)
    }

    /// Ordinary degree if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| monomial_degree(&self.table, m));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// True for zero and for polynomials homogeneous of the given ordinary degree.
    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms
            .keys()
            .all(|m| monomial_degree(&self.table, m) == degree)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| monomial_degree(&self.table, m))
            .max()
    }

    pub fn homogeneous_part(&self, degree: u32) -> Self {
        self.filter_terms(|m| monomial_degree(&self.table, m) == degree)
    }

    fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        GradedPoly {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every monomial in which generator `var` has exponent above `max`.
    ///
    /// Models the quotient by `var^(max+1)`.
    pub fn cap(&self, var: usize, max: u32) -> Self {
        self.filter_terms(|m| m[var] <= max)
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::TableMismatch(
                "operands live in different rings".into(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(GradedPoly {
            table: self.table.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        GradedPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero(&self.table);
        }
        GradedPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rational::from_integer(k.into()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, negative)) = multiply_monomials(&self.table, ma, mb) {
                    let c = ca * cb;
                    accumulate(&mut terms, m, if negative { -c } else { c });
                }
            }
        }
        Ok(GradedPoly {
            table: self.table.clone(),
            terms,
        })
    }

    /// Multiplies by a single monomial (with coefficient one).
    pub fn mul_monomial(&self, mono: &[u32]) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if let Some((p, negative)) = multiply_monomials(&self.table, mono, m) {
                accumulate(&mut terms, p, if negative { -c.clone() } else { c.clone() });
            }
        }
        GradedPoly {
            table: self.table.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.table);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Ring homomorphism sending generator `i` of this table to `images[i]`,
    /// all images living in `target`.
    ///
    /// Images of odd generators must be odd and images of even generators
    /// even; with that, reordering signs are tracked exactly.
    pub fn substitute(&self, images: &[GradedPoly], target: &TableRef) -> Result<Self> {
        if images.len() != self.table.len() {
            return Err(Error::TableMismatch(format!(
                "{} images supplied for {} variables",
                images.len(),
                self.table.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if !same_table(img.table(), target) {
                return Err(Error::TableMismatch(format!(
                    "image of `{}` is not in the target ring",
                    self.table.var(i).name
                )));
            }
            let odd = self.table.is_odd(i);
            for m in img.terms.keys() {
                let d = monomial_degree(target, m);
                if odd && d.is_multiple_of(2) {
                    return Err(Error::OddImage(self.table.var(i).name.clone()));
                }
                if !odd && d % 2 == 1 {
                    return Err(Error::EvenImage(self.table.var(i).name.clone()));
                }
            }
        }
        // powers are cached per generator
        let mut powers: Vec<Vec<GradedPoly>> = images
            .iter()
            .map(|img| vec![GradedPoly::one(target), img.clone()])
            .collect();
        let mut out = GradedPoly::zero(target);
        for (mono, c) in &self.terms {
            let mut term = GradedPoly::constant(target, c.clone());
            for (i, &e) in mono.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &images[i];
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitution specified by name; unnamed generators map to themselves
    /// (looked up by name in `target`).
    pub fn substitute_named(&self, map: &[(&str, GradedPoly)], target: &TableRef) -> Result<Self> {
        let mut images = Vec::with_capacity(self.table.len());
        for v in self.table.vars() {
            let img = match map.iter().find(|(n, _)| *n == v.name || *n == v.alias) {
                Some((_, p)) => p.clone(),
                None => GradedPoly::var(target, &v.name)?,
            };
            images.push(img);
        }
        self.substitute(&images, target)
    }

    /// Re-expresses the polynomial in another table, matching generators by
    /// name. Fails if a generator with nonzero exponent is missing there.
    pub fn to_table(&self, target: &TableRef) -> Result<Self> {
        if same_table(&self.table, target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .table
            .vars()
            .iter()
            .map(|v| target.index_of(&v.name))
            .collect();
        for (i, v) in self.table.vars().iter().enumerate() {
            if let Some(j) = map[i] {
                if target.weight(j) != v.weight {
                    return Err(Error::TableMismatch(format!("weight of `{}` differs", v.name)));
                }
            }
        }
        let mut out = GradedPoly::zero(target);
        for (m, c) in &self.terms {
            let mut nm = vec![0; target.len()];
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => nm[j] = e,
                    None => return Err(Error::UnknownVariable(self.table.var(i).name.clone())),
                }
            }
            // only odd generators can change relative order; recompute the sign
            let sign = odd_order_sign(&self.table, m, &map);
            out.add_term(nm, if sign { -c.clone() } else { c.clone() })?;
        }
        Ok(out)
    }

    /// Splits by the exponent of generator `var`: `p = Σ_e var^e · coeff_e`.
    /// The coefficients have exponent zero in `var`.
    pub fn split_by(&self, var: usize) -> BTreeMap<u32, GradedPoly> {
        let mut out: BTreeMap<u32, GradedPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m[var];
            let mut rest = m.clone();
            rest[var] = 0;
            let entry = out
                .entry(e)
                .or_insert_with(|| GradedPoly::zero(&self.table));
            // moving an odd generator to the front may flip the sign
            let sign = if self.table.is_odd(var) && e == 1 {
                (0..var).filter(|&i| self.table.is_odd(i) && m[i] == 1).count() % 2 == 1
            } else {
                false
            };
            accumulate(&mut entry.terms, rest, if sign { -c.clone() } else { c.clone() });
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Coefficient of `var^e` (with `var` removed).
    pub fn coefficient_of(&self, var: usize, e: u32) -> GradedPoly {
        self.split_by(var)
            .remove(&e)
            .unwrap_or_else(|| GradedPoly::zero(&self.table))
    }

    /// Partial derivative with respect to an even generator.
    pub fn derivative(&self, var: usize) -> Result<Self> {
        if self.table.is_odd(var) {
            return Err(Error::Params(format!(
                "derivative with respect to odd generator `{}`",
                self.table.var(var).name
            )));
        }
        let mut out = GradedPoly::zero(&self.table);
        for (m, c) in &self.terms {
            if m[var] == 0 {
                continue;
            }
            let mut nm = m.clone();
            nm[var] -= 1;
            out.add_term(nm, c * Rational::from_integer(m[var].into()))?;
        }
        Ok(out)
    }

    /// Every monomial contains `var^e`.
    pub fn divisible_by_power(&self, var: usize, e: u32) -> bool {
        self.terms.keys().all(|m| m[var] >= e)
    }

    /// Lowest exponent of `var` among the terms (`None` for zero).
    pub fn min_exponent(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m[var]).min()
    }

    /// Terms in printing order: descending ordinary degree, then descending
    /// lexicographic exponent vector.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da = monomial_degree(&self.table, a);
            let db = monomial_degree(&self.table, b);
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    /// Human-readable rendering using display names (`α`, `ψ1`, …).
    pub fn pretty(&self) -> String {
        super::text::format_poly(self, true)
    }
}

/// Sign of moving odd generators from `from`-order into the order induced by `map`.
fn odd_order_sign(from: &TableRef, mono: &[u32], map: &[Option<usize>]) -> bool {
    let positions: Vec<usize> = (0..mono.len())
        .filter(|&i| from.is_odd(i) && mono[i] == 1)
        .filter_map(|i| map[i])
        .collect();
    let mut inversions = 0usize;
    for i in 0..positions.len() {
        for j in i + 1..positions.len() {
            if positions[i] > positions[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, mono: Monomial, coeff: Rational) {
    use std::collections::btree_map::Entry;
    match terms.entry(mono) {
        Entry::Vacant(e) => {
            if !coeff.is_zero() {
                e.insert(coeff);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl fmt::Display for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_poly(self, false))
    }
}

impl<'a> Add<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: &'a GradedPoly) -> GradedPoly {
        self.try_add(rhs).expect("add: table mismatch")
    }
}

impl<'a> Sub<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: &'a GradedPoly) -> GradedPoly {
        self.try_sub(rhs).expect("sub: table mismatch")
    }
}

impl<'a> Mul<&'a GradedPoly> for &'a GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: &'a GradedPoly) -> GradedPoly {
        self.try_mul(rhs).expect("mul: table mismatch")
    }
}

impl Add for GradedPoly {
    type Output = GradedPoly;
    fn add(self, rhs: GradedPoly) -> GradedPoly {
        &self + &rhs
    }
}

impl Sub for GradedPoly {
    type Output = GradedPoly;
    fn sub(self, rhs: GradedPoly) -> GradedPoly {
        &self - &rhs
    }
}

impl Mul for GradedPoly {
    type Output = GradedPoly;
    fn mul(self, rhs: GradedPoly) -> GradedPoly {
        &self * &rhs
    }
}

impl Neg for &GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        self.neg_ref()
    }
}

impl Neg for GradedPoly {
    type Output = GradedPoly;
    fn neg(self) -> GradedPoly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::vars::VarTable;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn odd_square_vanishes() {
        let t = VarTable::moduli(2);
        let psi1 = GradedPoly::var(&t, "psi1").unwrap();
        assert!((&psi1 * &psi1).is_zero());
    }

    #[test]
    fn odd_generators_anticommute() {
        let t = VarTable::moduli(2);
        let p1 = GradedPoly::var(&t, "psi1").unwrap();
        let p3 = GradedPoly::var(&t, "psi3").unwrap();
        assert_eq!(&p1 * &p3, -(&p3 * &p1));
        let a = GradedPoly::var(&t, "a").unwrap();
        assert_eq!(&a * &p3, &p3 * &a);
    }

    #[test]
    fn scale_by_zero() {
        let t = VarTable::abc();
        let p = GradedPoly::var(&t, "a").unwrap() + GradedPoly::var(&t, "b").unwrap();
        assert!(p.scale(&Rational::zero()).is_zero());
    }

    #[test]
    fn gamma_pulls_back_through_psi() {
        // γ = -2 Σ ψ_j ψ_{j+g} with ψ_j ↦ ½(η-u)ξ_j gives -½(η-u)²θ
        for g in 1..=3usize {
            let m = VarTable::moduli(g);
            let s = VarTable::symprod(g);
            let mut gamma = GradedPoly::zero(&m);
            for j in 1..=g {
                let a = GradedPoly::var(&m, &format!("psi{j}")).unwrap();
                let b = GradedPoly::var(&m, &format!("psi{}", j + g)).unwrap();
                gamma = &gamma + &(&a * &b).scale_int(-2);
            }
            let eta = GradedPoly::var(&s, "eta").unwrap();
            let u = GradedPoly::var(&s, "u").unwrap();
            let em = &eta - &u;
            let mut map = Vec::new();
            for j in 1..=2 * g {
                let xi = GradedPoly::var(&s, &format!("xi{j}")).unwrap();
                map.push((format!("psi{j}"), (&em * &xi).scale(&q(1, 2))));
            }
            let mut images = Vec::new();
            for v in m.vars() {
                let img = match map.iter().find(|(n, _)| *n == v.alias) {
                    Some((_, p)) => p.clone(),
                    None if v.alias == "u" => u.clone(),
                    None => GradedPoly::zero(&s),
                };
                images.push(img);
            }
            let pulled = gamma.substitute(&images, &s).unwrap();
            let mut theta = GradedPoly::zero(&s);
            for j in 1..=g {
                let a = GradedPoly::var(&s, &format!("xi{j}")).unwrap();
                let b = GradedPoly::var(&s, &format!("xi{}", j + g)).unwrap();
                theta = &theta + &(&a * &b);
            }
            let expected = (&em * &em * theta).scale(&q(-1, 2));
            assert_eq!(pulled, expected, "g = {g}");
        }
    }

    #[test]
    fn parity_checked_on_substitution() {
        let m = VarTable::moduli(1);
        let s = VarTable::symprod(1);
        let eta = GradedPoly::var(&s, "eta").unwrap();
        let p = GradedPoly::var(&m, "psi1").unwrap();
        let r = p.substitute_named(&[("psi1", eta.clone())], &s);
        assert!(r.is_err());
    }

    #[test]
    fn split_and_derivative() {
        let t = VarTable::abcu();
        let a = GradedPoly::var(&t, "a").unwrap();
        let u = GradedPoly::var(&t, "u").unwrap();
        let p = &(&a * &u.pow(2)) + &u;
        let ui = t.require("u").unwrap();
        let parts = p.split_by(ui);
        assert_eq!(parts[&2], a);
        assert_eq!(parts[&1], GradedPoly::one(&t));
        let d = p.derivative(ui).unwrap();
        assert_eq!(d, &(&a * &u).scale_int(2) + &GradedPoly::one(&t));
    }

    #[test]
    fn to_table_reorders_odd_signs() {
        let s = VarTable::symprod(2);
        let x1 = GradedPoly::var(&s, "xi1").unwrap();
        let x3 = GradedPoly::var(&s, "xi3").unwrap();
        let prod = &x1 * &x3;
        let back = prod.to_table(&s).unwrap();
        assert_eq!(prod, back);
        let abc = VarTable::abc();
        let a = GradedPoly::var(&abc, "a").unwrap();
        assert!(a.to_table(&VarTable::eta_theta()).is_err());
        let lifted = a.to_table(&VarTable::abcu()).unwrap();
        assert_eq!(lifted.to_table(&abc).unwrap(), a);
    }
}
