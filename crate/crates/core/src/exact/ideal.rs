use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::linalg::SliceBasis;
use super::poly::GradedPoly;
use super::vars::{same_table, TableRef};
use crate::error::{Error, Result};

/// Ideal generated by finitely many homogeneous polynomials, with lazily
/// computed degree slices.
///
/// Slices are built as `span(gens of degree d ∪ x_v · slice(d - w_v))`, which
/// covers every product `monomial × generator`.
#[derive(Debug)]
pub struct HomogeneousIdeal {
    table: TableRef,
    generators: Vec<GradedPoly>,
    complete_through: Option<u32>,
    cache: Mutex<HashMap<u32, Arc<SliceBasis>>>,
}

impl HomogeneousIdeal {
    /// `complete_through`: if set, the generator list is only known to be
    /// complete up to that ordinary degree and higher slices are refused.
    pub fn new(
        table: &TableRef,
        generators: Vec<GradedPoly>,
        complete_through: Option<u32>,
    ) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if !same_table(g.table(), table) {
                return Err(Error::TableMismatch("generator ring differs".into()));
            }
            if g.is_zero() {
                continue;
            }
            if g.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous {
                    expected: g.max_degree().unwrap_or(0),
                });
            }
            gens.push(g);
        }
        Ok(HomogeneousIdeal {
            table: table.clone(),
            generators: gens,
            complete_through,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn table(&self) -> &TableRef {
        &self.table
    }

    pub fn generators(&self) -> &[GradedPoly] {
        &self.generators
    }

    pub fn complete_through(&self) -> Option<u32> {
        self.complete_through
    }

    /// The ideal's slice in the given ordinary degree.
    pub fn slice(&self, degree: u32) -> Result<Arc<SliceBasis>> {
        if let Some(bound) = self.complete_through {
            if degree > bound {
                return Err(Error::Params(format!(
                    "ideal generators only known through degree {bound}, asked for {degree}"
                )));
            }
        }
        if let Some(s) = self.cache.lock().expect("cache lock").get(&degree) {
            return Ok(s.clone());
        }
        let mut s = SliceBasis::zero(&self.table, degree);
        if s.ambient_dim() > 0 {
            for g in &self.generators {
                if g.homogeneous_degree() == Some(degree) {
                    s.insert(g)?;
                }
            }
            for v in 0..self.table.len() {
                if s.is_full() {
                    break;
                }
                let w = self.table.weight(v);
                if w > degree {
                    continue;
                }
                let lower = self.slice(degree - w)?;
                let x = GradedPoly::var_at(&self.table, v);
                for b in lower.basis() {
                    s.insert(&(&x * &b))?;
                    if s.is_full() {
                        break;
                    }
                }
            }
        }
        let s = Arc::new(s);
        self.cache
            .lock()
            .expect("cache lock")
            .insert(degree, s.clone());
        Ok(s)
    }

    /// Membership, checked homogeneous component by component.
    pub fn contains(&self, p: &GradedPoly) -> Result<bool> {
        let mut degrees: Vec<u32> = p.terms().map(|(m, _)| p.monomial_degree(m)).collect();
        degrees.sort_unstable();
        degrees.dedup();
        for d in degrees {
            if !self.slice(d)?.member(&p.homogeneous_part(d))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn quotient_dim(&self, degree: u32) -> Result<usize> {
        Ok(self.slice(degree)?.codim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::text::parse_poly;
    use crate::exact::vars::VarTable;

    #[test]
    fn principal_ideal_slices() {
        let t = VarTable::abc();
        let gen = parse_poly("a*b + g3", &t).unwrap();
        let ideal = HomogeneousIdeal::new(&t, vec![gen], None).unwrap();
        assert_eq!(ideal.slice(4).unwrap().dim(), 0);
        assert_eq!(ideal.slice(6).unwrap().dim(), 1);
        // multiples by α and by nothing else in degree 8
        assert_eq!(ideal.slice(8).unwrap().dim(), 1);
        // α², β multiples
        assert_eq!(ideal.slice(10).unwrap().dim(), 2);
        let mult = parse_poly("a^2*b + a*g3", &t).unwrap();
        assert!(ideal.contains(&mult).unwrap());
        assert!(!ideal.contains(&parse_poly("a*g3", &t).unwrap()).unwrap());
    }

    #[test]
    fn bounded_generator_lists() {
        let t = VarTable::abc();
        let ideal = HomogeneousIdeal::new(&t, vec![parse_poly("a", &t).unwrap()], Some(4)).unwrap();
        assert!(ideal.slice(4).is_ok());
        assert!(ideal.slice(6).is_err());
    }
}
