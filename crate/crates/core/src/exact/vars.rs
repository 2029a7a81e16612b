use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// One generator of a graded-commutative ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Var {
    /// Display name, e.g. `α` or `ψ3`.
    pub name: String,
    /// ASCII name used by the text format, e.g. `a` or `psi3`.
    pub alias: String,
    /// Ordinary cohomological degree.
    pub weight: u32,
}

impl Var {
    pub fn new(name: impl Into<String>, alias: impl Into<String>, weight: u32) -> Self {
        Var {
            name: name.into(),
            alias: alias.into(),
            weight,
        }
    }

    /// Odd-weight generators anticommute and square to zero.
    pub fn is_odd(&self) -> bool {
        self.weight % 2 == 1
    }
}

/// Ordered list of generators with fixed weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarTable {
    vars: Vec<Var>,
}

pub type TableRef = Arc<VarTable>;

impl VarTable {
    pub fn new(vars: Vec<Var>) -> Result<TableRef> {
        let mut seen = HashSet::new();
        for v in &vars {
            if v.weight == 0 {
                return Err(Error::Params(format!("variable `{}` has weight 0", v.name)));
            }
            if !seen.insert(v.name.clone()) {
                return Err(Error::DuplicateVariable(v.name.clone()));
            }
            if v.alias != v.name && !seen.insert(v.alias.clone()) {
                return Err(Error::DuplicateVariable(v.alias.clone()));
            }
        }
        Ok(Arc::new(VarTable { vars }))
    }

    fn build(vars: Vec<Var>) -> TableRef {
        VarTable::new(vars).expect("standard tables are well formed")
    }

    /// `α:2, β:4, γ:6`.
    pub fn abc() -> TableRef {
        Self::build(vec![alpha(), beta(), gamma()])
    }

    /// `α:2, β:4, γ:6, u:2`.
    pub fn abcu() -> TableRef {
        Self::build(vec![alpha(), beta(), gamma(), u()])
    }

    /// The universal classes together with the equivariant parameter:
    /// `α:2, β:4, γ:6, u:2, ψ_1..ψ_{2g}:3`.
    pub fn moduli(g: usize) -> TableRef {
        let mut vars = vec![alpha(), beta(), gamma(), u()];
        vars.extend((1..=2 * g).map(|j| Var::new(format!("ψ{j}"), format!("psi{j}"), 3)));
        Self::build(vars)
    }

    /// Symmetric-product classes: `η:2, θ:2, u:2, ξ_1..ξ_{2g}:1`.
    pub fn symprod(g: usize) -> TableRef {
        let mut vars = vec![eta(), theta(), u()];
        vars.extend((1..=2 * g).map(|j| Var::new(format!("ξ{j}"), format!("xi{j}"), 1)));
        Self::build(vars)
    }

    /// `η:2, θ:2`, the invariant part of the symmetric product ring.
    pub fn eta_theta() -> TableRef {
        Self::build(vec![eta(), theta()])
    }

    /// `η:2, θ:2, u:2`.
    pub fn eta_theta_u() -> TableRef {
        Self::build(vec![eta(), theta(), u()])
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn var(&self, i: usize) -> &Var {
        &self.vars[i]
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.vars[i].weight
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.vars[i].is_odd()
    }

    /// Looks a variable up by display name or ASCII alias.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars
            .iter()
            .position(|v| v.name == name || v.alias == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

fn alpha() -> Var {
    Var::new("α", "a", 2)
}
fn beta() -> Var {
    Var::new("β", "b", 4)
}
fn gamma() -> Var {
    Var::new("γ", "g3", 6)
}
fn u() -> Var {
    Var::new("u", "u", 2)
}
fn eta() -> Var {
    Var::new("η", "eta", 2)
}
fn theta() -> Var {
    Var::new("θ", "th", 2)
}

/// Two table handles describe the same ring.
pub fn same_table(a: &TableRef, b: &TableRef) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_tables() {
        let m = VarTable::moduli(2);
        assert_eq!(m.len(), 8);
        assert_eq!(m.weight(m.require("psi4").unwrap()), 3);
        assert_eq!(m.require("γ").unwrap(), m.require("g3").unwrap());
        let s = VarTable::symprod(3);
        assert!(s.is_odd(s.require("xi6").unwrap()));
        assert!(!s.is_odd(s.require("th").unwrap()));
    }

    #[test]
    fn duplicate_names_rejected() {
        let r = VarTable::new(vec![Var::new("x", "x", 2), Var::new("x", "y", 2)]);
        assert!(matches!(r, Err(Error::DuplicateVariable(_))));
        let r = VarTable::new(vec![Var::new("x", "x", 0)]);
        assert!(r.is_err());
    }
}
