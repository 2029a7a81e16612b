//! Intersection numbers on the symmetric products `C_m` of a genus-`g` curve.
//!
//! Classes live in `Q[η, θ, u, ξ_1..ξ_{2g}]` (the `symprod` table) or in any
//! table containing `η` and `θ` for the invariant part. `θ` is the sum
//! `Σ_j ξ_j ξ_{j+g}`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::combinat::{binomial_general, factorial, inv_factorial};
use crate::exact::{degree_slice_monomials, GradedPoly, Monomial, Rational, TableRef, VarTable};
use crate::series::{QField, Series};

/// The symmetric product `C_m` of a curve of genus `g`.
#[derive(Clone, Debug)]
pub struct SymProdSpace {
    m: usize,
    g: usize,
    table: TableRef,
}

impl SymProdSpace {
    pub fn new(m: usize, g: usize) -> Self {
        SymProdSpace {
            m,
            g,
            table: VarTable::symprod(g),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// The full ring `Q[η, θ, u, ξ_j]` of this genus.
    pub fn table(&self) -> &TableRef {
        &self.table
    }

    /// `θ = Σ_j ξ_j ξ_{j+g}` in the full ring.
    pub fn theta_expanded(&self) -> GradedPoly {
        let mut acc = GradedPoly::zero(&self.table);
        for j in 0..self.g {
            let a = GradedPoly::var_at(&self.table, 3 + j);
            let b = GradedPoly::var_at(&self.table, 3 + j + self.g);
            acc = acc + a * b;
        }
        acc
    }

    /// `ξ_{from} ⋯ ξ_{to}` (1-based, inclusive).
    pub fn xi_product(&self, from: usize, to: usize) -> GradedPoly {
        let mut acc = GradedPoly::one(&self.table);
        for j in from..=to {
            acc = acc * GradedPoly::var_at(&self.table, 2 + j);
        }
        acc
    }

    /// `η^a θ^b` in the full ring (θ kept as a variable).
    pub fn eta_theta_monomial(&self, a: usize, b: usize) -> GradedPoly {
        let mut mono = vec![0; self.table.len()];
        mono[0] = a as u32;
        mono[1] = b as u32;
        GradedPoly::monomial(&self.table, mono, Rational::one()).expect("even monomial")
    }
}

/// Macdonald's rule on `C_m`: `η^q Π ξ_j^{p_j}` of total degree `m` evaluates
/// to the sign that turns it into a product of `θ_j = ξ_jξ_{j+g}` when
/// `p_j = p_{j+g}` for all `j`, and to 0 otherwise. `θ` is expanded into pairs
/// first. The class must not involve `u`.
pub fn evaluate_full(space: &SymProdSpace, p: &GradedPoly) -> Result<Rational> {
    let table = space.table();
    let p = if crate::exact::vars::same_table(p.table(), table) {
        p.clone()
    } else {
        p.to_table(table)?
    };
    let mut images: Vec<GradedPoly> = (0..table.len()).map(|i| GradedPoly::var_at(table, i)).collect();
    images[1] = space.theta_expanded();
    let expanded = p.substitute(&images, table)?;
    let g = space.g;
    let mut total = Rational::zero();
    for (mono, c) in expanded.terms() {
        if mono[2] != 0 {
            return Err(Error::Params("evaluation on C_m is not defined for classes involving u".into()));
        }
        if expanded.monomial_degree(mono) != 2 * space.m as u32 {
            continue;
        }
        let xi = &mono[3..];
        if (0..g).any(|j| xi[j] != xi[j + g]) {
            continue;
        }
        let pairs = xi[..g].iter().filter(|&&e| e == 1).count();
        // sorted ξ_{a1}..ξ_{ar} ξ_{a1+g}..ξ_{ar+g} regrouped into pairs
        let sign = if (pairs * pairs.saturating_sub(1) / 2) % 2 == 0 { 1 } else { -1 };
        total += c * Rational::from_integer(sign.into());
    }
    Ok(total)
}

fn eta_theta_indices(table: &TableRef) -> Result<(usize, usize)> {
    Ok((table.require("η")?, table.require("θ")?))
}

/// `η^a θ^b ↦ b!·C(g,b)` when `a + b = m`, extended linearly. Other
/// variables must not occur.
pub fn evaluate_invariant(space: &SymProdSpace, p: &GradedPoly) -> Result<Rational> {
    let (ie, it) = eta_theta_indices(p.table())?;
    let mut total = Rational::zero();
    for (mono, c) in p.terms() {
        if mono.iter().enumerate().any(|(i, &e)| e != 0 && i != ie && i != it) {
            return Err(Error::Params(format!(
                "evaluate_invariant expects a polynomial in η and θ, got {p}"
            )));
        }
        let (a, b) = (mono[ie] as usize, mono[it] as usize);
        if a + b == space.m && b <= space.g {
            total += c * invariant_pairing_value(space.g, b);
        }
    }
    Ok(total)
}

/// `b!·C(g,b)`, the value of `η^{m−b} θ^b` on `C_m`.
pub fn invariant_pairing_value(g: usize, b: usize) -> Rational {
    if b > g {
        return Rational::zero();
    }
    Rational::from_integer(factorial(g as u64) / factorial((g - b) as u64))
}

/// `A(η) exp(θB(η))[C_m]` through the η^m coefficient of `A(η)(1+ηB(η))^g`.
pub fn residue_evaluate(space: &SymProdSpace, a: &Series<QField>, b: &Series<QField>) -> Result<Rational> {
    let m = space.m;
    if a.order() <= m || b.order() <= m {
        return Err(Error::Series(format!(
            "residue on C_{m} needs series of order > {m}, got {} and {}",
            a.order(),
            b.order()
        )));
    }
    let order = m + 1;
    let eta = Series::monomial(&QField, Rational::one(), 1, order);
    let base = Series::one(&QField, order).add(&eta.mul(&b.truncate(order)));
    let prod = a.truncate(order).mul(&base.pow(space.g as u32));
    Ok(prod.coeff(m))
}

/// `A(η) exp(θB(η))` expanded as a polynomial in η, θ up to total degree `m`.
pub fn exp_theta_class(
    table: &TableRef,
    a: &Series<QField>,
    b: &Series<QField>,
    m: usize,
) -> Result<GradedPoly> {
    let (ie, it) = eta_theta_indices(table)?;
    let order = m + 1;
    let mut acc = GradedPoly::zero(table);
    let mut bpow = Series::one(&QField, order);
    let a = a.truncate(order);
    for kk in 0..=m {
        let coeffs = a.mul(&bpow);
        for (j, c) in coeffs.coeffs().iter().enumerate() {
            if c.is_zero() || j + kk > m {
                continue;
            }
            let mut mono: Monomial = vec![0; table.len()];
            mono[ie] = j as u32;
            mono[it] = kk as u32;
            acc = acc + GradedPoly::monomial(table, mono, c * inv_factorial(kk as i64))?;
        }
        bpow = bpow.mul(&b.truncate(order));
    }
    Ok(acc)
}

/// Pairings `⟨q · η^a θ^b⟩` with `a + b = m − D` that decide whether a class
/// of total degree `D` in η, θ vanishes on `C_m`. Indexed by `b`.
pub fn invariant_pairings(space: &SymProdSpace, q: &GradedPoly) -> Result<Vec<(usize, Rational)>> {
    let (ie, it) = eta_theta_indices(q.table())?;
    let mut degrees: Vec<u32> = q.terms().map(|(mono, _)| q.monomial_degree(mono)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = Vec::new();
    for d in degrees {
        let part = q.homogeneous_part(d);
        let total = (d / 2) as usize;
        if total > space.m {
            continue;
        }
        let rest = space.m - total;
        for b in 0..=rest.min(space.g) {
            let mut mono = vec![0; q.table().len()];
            mono[ie] = (rest - b) as u32;
            mono[it] = b as u32;
            let partner = GradedPoly::monomial(q.table(), mono, Rational::one())?;
            out.push((b, evaluate_invariant(space, &(&part * &partner))?));
        }
    }
    Ok(out)
}

/// Whether a class in η, θ vanishes in `H*(C_m)`: every homogeneous part of
/// total degree `D ≤ m` pairs to zero with all `η^a θ^b`, `a + b = m − D`.
pub fn is_zero_class(space: &SymProdSpace, q: &GradedPoly) -> Result<bool> {
    Ok(invariant_pairings(space, q)?.iter().all(|(_, v)| v.is_zero()))
}

/// The part of `η^p exp θ / (1+η)^q` in total degree `ℓ`, in `Q[η, θ]`.
pub fn lemma51_class(p: usize, q: usize, l: usize) -> GradedPoly {
    let table = VarTable::eta_theta();
    let mut acc = GradedPoly::zero(&table);
    if l < p {
        return acc;
    }
    for b in 0..=l - p {
        let j = l - p - b;
        // coefficient of η^j in (1+η)^{-q}
        let c = Rational::from_integer(binomial_general(-(q as i64), j as i64)) * inv_factorial(b as i64);
        let mono = vec![(p + j) as u32, b as u32];
        acc = acc + GradedPoly::monomial(&table, mono, c).expect("even monomial");
    }
    acc
}

/// Checks the vanishing `(η^p exp θ/(1+η)^q)_ℓ = 0` on `C_m`, after checking
/// `m−g+q ≤ ℓ` and `g+p−q < ℓ`.
pub fn lemma51_check(space: &SymProdSpace, p: usize, q: usize, l: usize) -> Result<bool> {
    let (m, g) = (space.m as i64, space.g as i64);
    let (p, q, l) = (p as i64, q as i64, l as i64);
    if m - g + q > l || g + p - q >= l {
        return Err(Error::Hypothesis(format!(
            "need m-g+q <= l and g+p-q < l (m={m}, g={g}, p={p}, q={q}, l={l})"
        )));
    }
    is_zero_class(space, &lemma51_class(p as usize, q as usize, l as usize))
}

/// Whether `p(η,θ)·ξ_1⋯ξ_k` vanishes in `H*(C^g_m)`, by full Poincaré duality:
/// pairing against every monomial in η and the ξ_j of complementary degree.
pub fn times_xi_is_zero(g: usize, m: usize, k: usize, p: &GradedPoly) -> Result<bool> {
    let space = SymProdSpace::new(m, g);
    let lifted = lift_eta_theta(&space, p)?;
    let prod = lifted * space.xi_product(1, k);
    let mut degrees: Vec<u32> = prod.terms().map(|(mono, _)| prod.monomial_degree(mono)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        if d > 2 * m as u32 {
            continue;
        }
        let part = prod.homogeneous_part(d);
        for mono in degree_slice_monomials(space.table(), 2 * m as u32 - d) {
            // partners use η and ξ only
            if mono[1] != 0 || mono[2] != 0 {
                continue;
            }
            let partner = GradedPoly::monomial(space.table(), mono, Rational::one())?;
            if !evaluate_full(&space, &(&part * &partner))?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Moves a polynomial in η, θ into the full ring of the given space.
pub fn lift_eta_theta(space: &SymProdSpace, p: &GradedPoly) -> Result<GradedPoly> {
    let (ie, it) = eta_theta_indices(p.table())?;
    let mut acc = GradedPoly::zero(space.table());
    for (mono, c) in p.terms() {
        if mono.iter().enumerate().any(|(i, &e)| e != 0 && i != ie && i != it) {
            return Err(Error::Params(format!("expected a polynomial in η and θ, got {p}")));
        }
        acc = acc + space
            .eta_theta_monomial(mono[ie] as usize, mono[it] as usize)
            .scale(c);
    }
    Ok(acc)
}

/// Both sides of the ξ-multiplication criterion for one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma101Outcome {
    /// `p` is a relation on `C^{g−k}_{m−k}` (everything is when `m < k`).
    pub lower_relation: bool,
    /// `p·ξ_1⋯ξ_k` vanishes on `C^g_m`.
    pub product_vanishes: bool,
}

impl Lemma101Outcome {
    pub fn holds(&self) -> bool {
        self.lower_relation == self.product_vanishes
    }
}

pub fn lemma101_outcome(g: usize, m: usize, k: usize, p: &GradedPoly) -> Result<Lemma101Outcome> {
    if k > g {
        return Err(Error::Params(format!("need k <= g, got k={k}, g={g}")));
    }
    let lower_relation = if m < k {
        true
    } else {
        is_zero_class(&SymProdSpace::new(m - k, g - k), p)?
    };
    let product_vanishes = times_xi_is_zero(g, m, k, p)?;
    Ok(Lemma101Outcome {
        lower_relation,
        product_vanishes,
    })
}

/// `p` is a relation on `C^{g−k}_{m−k}` iff `p·ξ_1⋯ξ_k` is a relation on `C^g_m`.
pub fn lemma101_check(g: usize, m: usize, k: usize, p: &GradedPoly) -> Result<bool> {
    Ok(lemma101_outcome(g, m, k, p)?.holds())
}

/// `C(g, b)` as a rational; handy for tests and reports.
pub fn choose(g: usize, b: usize) -> Rational {
    Rational::from_integer(crate::exact::combinat::binomial(g as i64, b as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_poly, qi};

    #[test]
    fn macdonald_rule() {
        let s = SymProdSpace::new(2, 2);
        let t = s.table().clone();
        assert_eq!(evaluate_full(&s, &parse_poly("eta^2", &t).unwrap()).unwrap(), qi(1));
        assert_eq!(evaluate_full(&s, &parse_poly("eta*xi1*xi3", &t).unwrap()).unwrap(), qi(1));
        assert_eq!(evaluate_full(&s, &parse_poly("xi3*xi1*eta", &t).unwrap()).unwrap(), qi(-1));
        assert_eq!(evaluate_full(&s, &parse_poly("xi1*xi2", &t).unwrap()).unwrap(), qi(0));
        assert_eq!(evaluate_full(&s, &parse_poly("th^2", &t).unwrap()).unwrap(), qi(2));
        assert!(evaluate_full(&s, &parse_poly("u*eta", &t).unwrap()).is_err());
    }

    #[test]
    fn invariant_values() {
        let t = VarTable::eta_theta();
        let ev = |m, g, s: &str| evaluate_invariant(&SymProdSpace::new(m, g), &parse_poly(s, &t).unwrap()).unwrap();
        assert_eq!(ev(1, 2, "th"), qi(2));
        assert_eq!(ev(2, 2, "eta*th"), qi(2));
        assert_eq!(ev(2, 2, "th^2"), qi(2));
    }

    #[test]
    fn residue_values() {
        let one = Series::one(&QField, 4);
        assert_eq!(residue_evaluate(&SymProdSpace::new(2, 3), &one, &one).unwrap(), qi(3));
        let eta2 = Series::monomial(&QField, qi(1), 2, 4);
        let zero = Series::zero(&QField, 4);
        assert_eq!(residue_evaluate(&SymProdSpace::new(2, 3), &eta2, &zero).unwrap(), qi(1));
        assert!(residue_evaluate(&SymProdSpace::new(5, 3), &one, &one).is_err());
    }

    #[test]
    fn zero_classes() {
        let t = VarTable::eta_theta();
        let s = SymProdSpace::new(1, 2);
        assert!(is_zero_class(&s, &parse_poly("th - 2*eta", &t).unwrap()).unwrap());
        assert!(!is_zero_class(&s, &parse_poly("eta", &t).unwrap()).unwrap());
        assert!(is_zero_class(&SymProdSpace::new(3, 2), &parse_poly("eta^4", &t).unwrap()).unwrap());
        // C_0 = point
        assert!(!is_zero_class(&SymProdSpace::new(0, 2), &parse_poly("3", &t).unwrap()).unwrap());
    }

    #[test]
    fn lemma51_instances() {
        assert!(lemma51_check(&SymProdSpace::new(3, 2), 0, 2, 3).unwrap());
        // m−g+q = 5 > 4: outside the hypotheses, and the class is indeed nonzero
        assert!(lemma51_check(&SymProdSpace::new(4, 2), 1, 3, 4).is_err());
        assert!(!is_zero_class(&SymProdSpace::new(4, 2), &lemma51_class(1, 3, 4)).unwrap());
        assert!(lemma51_check(&SymProdSpace::new(4, 2), 1, 3, 5).unwrap());
        assert!(matches!(
            lemma51_check(&SymProdSpace::new(4, 3), 0, 0, 2),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn lemma101_instances() {
        let t = VarTable::eta_theta();
        let eta = parse_poly("eta", &t).unwrap();
        let o = lemma101_outcome(2, 2, 1, &eta).unwrap();
        assert!(!o.lower_relation && !o.product_vanishes);
        let rel = parse_poly("th - eta", &t).unwrap();
        let o = lemma101_outcome(2, 2, 1, &rel).unwrap();
        assert!(o.lower_relation && o.product_vanishes);
        let o = lemma101_outcome(2, 1, 2, &parse_poly("1", &t).unwrap()).unwrap();
        assert!(o.lower_relation && o.product_vanishes);
    }
}
