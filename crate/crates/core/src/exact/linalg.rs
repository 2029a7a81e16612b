//! Degreewise exact linear algebra: canonical row-reduced bases of subspaces
//! of a fixed degree slice of a graded polynomial ring.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::poly::{monomial_degree, GradedPoly, Monomial};
use super::vars::{same_table, TableRef};
use super::Rational;
use crate::error::{Error, Result};

/// All monomials of exactly the given ordinary degree, odd generators with
/// exponent at most one, in descending lexicographic order of exponent
/// vectors (graded lex by table order).
pub fn degree_slice_monomials(table: &TableRef, degree: u32) -> Vec<Monomial> {
    fn rec(table: &TableRef, i: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == table.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = table.weight(i);
        let max = if table.is_odd(i) { 1.min(left / w) } else { left / w };
        for e in (0..=max).rev() {
            cur[i] = e;
            rec(table, i + 1, left - e * w, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(table, 0, degree, &mut vec![0; table.len()], &mut out);
    out
}

/// Reduced row-echelon form over the rationals, maintained incrementally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<Rational>>>(ncols: usize, rows: I) -> Self {
        let mut e = Echelon::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the span's contribution on pivot columns; the remainder is
    /// zero exactly when `v` lies in the row space.
    pub fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds a vector to the span. Returns `false` if it was already contained.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.ncols, "row length mismatch");
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / &v[p];
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Basis of `{x : row · x = 0 for every row}`.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Rational::zero(); self.ncols];
                x[f] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }

    /// Coordinates of `v` modulo the span, on the non-pivot columns.
    pub fn quotient_coords(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        w.into_iter()
            .enumerate()
            .filter(|(i, _)| !is_pivot[*i])
            .map(|(_, x)| x)
            .collect()
    }
}

/// Solves `Σ_j x_j · columns[j] = rhs` exactly; `None` if infeasible.
/// Free unknowns are set to zero.
pub fn solve_columns(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = columns.len();
    let m = rhs.len();
    // rows of the augmented system [A | b]
    let mut ech = Echelon::new(n + 1);
    for i in 0..m {
        let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
        row.push(rhs[i].clone());
        ech.insert(row);
    }
    if ech.pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// Canonical basis of a linear subspace of one degree slice.
#[derive(Clone, Debug)]
pub struct SliceBasis {
    table: TableRef,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ech: Echelon,
}

impl PartialEq for SliceBasis {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table)
            && self.degree == other.degree
            && self.monomials == other.monomials
            && self.ech == other.ech
    }
}

impl SliceBasis {
    /// The zero subspace of the slice.
    pub fn zero(table: &TableRef, degree: u32) -> Self {
        let monomials = degree_slice_monomials(table, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let n = monomials.len();
        SliceBasis {
            table: table.clone(),
            degree,
            monomials,
            index,
            ech: Echelon::new(n),
        }
    }

    /// The whole slice.
    pub fn full(table: &TableRef, degree: u32) -> Self {
        let mut s = Self::zero(table, degree);
        for i in 0..s.ambient_dim() {
            let mut v = vec![Rational::zero(); s.ambient_dim()];
            v[i] = Rational::one();
            s.ech.insert(v);
        }
        s
    }

    pub fn span<'a, I>(table: &TableRef, degree: u32, polys: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a GradedPoly>,
    {
        let mut s = Self::zero(table, degree);
        for p in polys {
            s.insert(p)?;
        }
        Ok(s)
    }

    /// Elements of the slice annihilated by every functional; functionals are
    /// coefficient rows indexed like [`monomials`](Self::monomials).
    pub fn kernel(table: &TableRef, degree: u32, functionals: &[Vec<Rational>]) -> Self {
        let mut s = Self::zero(table, degree);
        let ech = Echelon::from_rows(s.ambient_dim(), functionals.iter().cloned());
        for v in ech.null_space() {
            s.ech.insert(v);
        }
        s
    }

    pub fn table(&self) -> &TableRef {
        &self.table
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn echelon(&self) -> &Echelon {
        &self.ech
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn position(&self, mono: &[u32]) -> Option<usize> {
        self.index.get(mono).copied()
    }

    /// Coefficient vector of a polynomial homogeneous of this slice's degree.
    pub fn vector_of(&self, p: &GradedPoly) -> Result<Vec<Rational>> {
        if !same_table(p.table(), &self.table) {
            return Err(Error::TableMismatch("polynomial and slice rings differ".into()));
        }
        let mut v = vec![Rational::zero(); self.ambient_dim()];
        for (m, c) in p.terms() {
            if monomial_degree(&self.table, m) != self.degree {
                return Err(Error::NotHomogeneous {
                    expected: self.degree,
                });
            }
            v[self.index[m]] = c.clone();
        }
        Ok(v)
    }

    pub fn poly_of(&self, v: &[Rational]) -> GradedPoly {
        GradedPoly::from_terms(
            &self.table,
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (self.monomials[i].clone(), c.clone())),
        )
        .expect("slice monomials belong to the table")
    }

    pub fn insert(&mut self, p: &GradedPoly) -> Result<bool> {
        let v = self.vector_of(p)?;
        Ok(self.ech.insert(v))
    }

    pub fn insert_vector(&mut self, v: Vec<Rational>) -> bool {
        self.ech.insert(v)
    }

    pub fn member(&self, p: &GradedPoly) -> Result<bool> {
        Ok(self.ech.contains(&self.vector_of(p)?))
    }

    /// Canonical basis polynomials (rows of the reduced echelon form).
    pub fn basis(&self) -> Vec<GradedPoly> {
        self.ech.rows().iter().map(|r| self.poly_of(r)).collect()
    }

    pub fn is_subspace_of(&self, other: &SliceBasis) -> bool {
        self.ech.rows().iter().all(|r| other.ech.contains(r))
    }

    /// Normal form modulo the subspace, as coordinates on non-pivot monomials.
    pub fn quotient_coords(&self, p: &GradedPoly) -> Result<Vec<Rational>> {
        Ok(self.ech.quotient_coords(&self.vector_of(p)?))
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::text::parse_poly;
    use crate::exact::vars::VarTable;

    #[test]
    fn slice_enumeration() {
        let t = VarTable::abc();
        let names: Vec<String> = degree_slice_monomials(&t, 6)
            .into_iter()
            .map(|m| GradedPoly::monomial(&t, m, Rational::one()).unwrap().to_string())
            .collect();
        assert_eq!(names, vec!["a^3", "a*b", "g3"]);
        assert_eq!(degree_slice_monomials(&t, 2).len(), 1);
        assert!(degree_slice_monomials(&t, 1).is_empty());
        let s = VarTable::symprod(2);
        // degree 2: η, θ, u and the six products ξ_iξ_j
        assert_eq!(degree_slice_monomials(&s, 2).len(), 3 + 6);
    }

    #[test]
    fn span_and_membership() {
        let t = VarTable::abc();
        let p1 = parse_poly("a^2", &t).unwrap();
        let p2 = parse_poly("a^2 + b", &t).unwrap();
        let s = SliceBasis::span(&t, 4, [&p1, &p2]).unwrap();
        assert_eq!(s.dim(), 2);
        let only = SliceBasis::span(&t, 4, [&p1]).unwrap();
        assert!(!only.member(&parse_poly("b", &t).unwrap()).unwrap());
        assert!(only.member(&parse_poly("-3*a^2", &t).unwrap()).unwrap());
    }

    #[test]
    fn kernel_of_zero_functional() {
        let t = VarTable::abc();
        let k = SliceBasis::kernel(&t, 2, &[vec![Rational::zero()]]);
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let t = VarTable::abc();
        let mut s = SliceBasis::zero(&t, 4);
        let p = parse_poly("a^2 + a", &t).unwrap();
        assert!(matches!(s.insert(&p), Err(Error::NotHomogeneous { .. })));
    }

    #[test]
    fn respanning_is_idempotent() {
        let t = VarTable::abc();
        let polys: Vec<_> = ["a^3 + 2*a*b", "a*b - g3", "a^3 + 2*g3"]
            .iter()
            .map(|s| parse_poly(s, &t).unwrap())
            .collect();
        let s = SliceBasis::span(&t, 6, &polys).unwrap();
        let again = SliceBasis::span(&t, 6, &s.basis()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn solve_simple_system() {
        let one = Rational::one;
        let two = || Rational::from_integer(2.into());
        let cols = vec![vec![one(), Rational::zero()], vec![one(), one()]];
        let x = solve_columns(&cols, &[two(), one()]).unwrap();
        assert_eq!(x, vec![one(), one()]);
        assert!(solve_columns(&[vec![one(), one()]], &[one(), two()]).is_none());
    }
}
