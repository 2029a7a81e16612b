//! Localization to the circle-fixed locus: fixed components, restriction of
//! the universal classes, the model for the stable-bundle component `N`, the
//! relation checker and the degreewise relation oracle.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::classes::{abc_table, abcu_table, gamma_power, xi_table_in};
use crate::error::{Error, Result};
use crate::exact::vars::same_table;
use crate::exact::{
    degree_slice_monomials, q, GradedPoly, HomogeneousIdeal, Monomial, Rational, SliceBasis, TableRef, VarTable,
};
use crate::par;
use crate::sympow::{evaluate_invariant, SymProdSpace};

/// A component of the fixed-point set of `M^g_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FixedComponent {
    /// The stable-bundle moduli space `N`.
    #[serde(rename = "MIN")]
    Min,
    /// A cover of the symmetric product `C_m`, `m = 2g+n−1−2d`.
    #[serde(rename = "SYM")]
    Sym { d: usize, m: usize },
}

impl fmt::Display for FixedComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedComponent::Min => write!(f, "MIN"),
            FixedComponent::Sym { d, m } => write!(f, "SYM(d={d}, m={m})"),
        }
    }
}

fn require_genus(g: usize) -> Result<()> {
    if g < 2 {
        return Err(Error::Params(format!("moduli-level operations need g >= 2, got {g}")));
    }
    Ok(())
}

/// `N` followed by `SYM(d)` for `d = 1..=g+⌊(n−1)/2⌋`.
pub fn fixed_components(g: usize, n: usize) -> Result<Vec<FixedComponent>> {
    require_genus(g)?;
    let dmax = g as i64 + (n as i64 - 1).div_euclid(2);
    let mut out = vec![FixedComponent::Min];
    for d in 1..=dmax.max(0) as usize {
        out.push(FixedComponent::Sym {
            d,
            m: 2 * g + n - 1 - 2 * d,
        });
    }
    Ok(out)
}

/// Images of the universal classes on `SYM(d)`, indexed like `source`.
/// Invariant sources land in `Q[η,θ,u]`; sources with `ψ_j` land in the
/// full symmetric-product ring of genus `g`.
fn restriction_images(source: &TableRef, g: usize, d: usize) -> Result<(TableRef, Vec<GradedPoly>)> {
    let has_psi = source.vars().iter().any(|v| v.is_odd());
    let target = if has_psi { VarTable::symprod(g) } else { VarTable::eta_theta_u() };
    let var = |name: &str| GradedPoly::var(&target, name);
    let eta_minus_u = var("η")? - var("u")?;
    let theta = var("θ")?;
    let mut images = Vec::with_capacity(source.len());
    for v in source.vars() {
        let img = match v.name.as_str() {
            "α" => eta_minus_u.scale_int(2 * d as i64 - 1) + theta.clone(),
            "β" => eta_minus_u.pow(2),
            "γ" => (eta_minus_u.pow(2) * theta.clone()).scale(&q(-1, 2)),
            "u" => var("u")?,
            name => match name.strip_prefix('ψ').and_then(|j| j.parse::<usize>().ok()) {
                Some(j) if (1..=2 * g).contains(&j) => {
                    (eta_minus_u.clone() * var(&format!("ξ{j}"))?).scale(&q(1, 2))
                }
                _ => return Err(Error::UnknownVariable(v.name.clone())),
            },
        };
        images.push(img);
    }
    Ok((target, images))
}

/// Restriction to `SYM(d)`:
/// `α ↦ (2d−1)(η−u)+θ`, `β ↦ (η−u)²`, `γ ↦ −½(η−u)²θ`, `ψ_j ↦ ½(η−u)ξ_j`.
pub fn restrict(p: &GradedPoly, g: usize, d: usize) -> Result<GradedPoly> {
    let (target, images) = restriction_images(p.table(), g, d)?;
    p.substitute(&images, &target)
}

/// Moves a polynomial in α, β, γ (and possibly u) into `Q[α,β,γ,u]`.
fn to_abcu(p: &GradedPoly) -> Result<GradedPoly> {
    let t = abcu_table();
    if same_table(p.table(), &t) {
        Ok(p.clone())
    } else {
        p.to_table(&t)
    }
}

/// u-coefficients of a class in `Q[α,β,γ,u]`, each moved to `Q[α,β,γ]`.
fn u_coefficients_abc(p: &GradedPoly) -> Result<Vec<(u32, GradedPoly)>> {
    let p = to_abcu(p)?;
    let abc = abc_table();
    p.split_by(3)
        .into_iter()
        .map(|(e, c)| Ok((e, c.to_table(&abc)?)))
        .collect()
}

/// Invariant cohomology of `N` as `Q[α,β,γ]/(ξ^0_g, ξ^0_{g+1}, ξ^0_{g+2}, γ^{g+1})`.
#[derive(Debug)]
pub struct NModel {
    g: usize,
    ideal: HomogeneousIdeal,
    hilbert: Vec<usize>,
}

/// Coefficients of `(1−x^g)(1−x^{g+1})(1−x^{g+2}) / ((1−x)(1−x²)(1−x³))`.
pub fn n_hilbert_series(g: usize) -> Vec<i64> {
    let len = 3 * g + 4;
    let mut c = vec![0i64; len];
    c[0] = 1;
    for e in [g, g + 1, g + 2] {
        for i in (e..len).rev() {
            c[i] -= c[i - e];
        }
    }
    for e in [1, 2, 3] {
        for i in e..len {
            c[i] += c[i - e];
        }
    }
    c
}

impl NModel {
    /// Builds the model and checks its Hilbert function against the
    /// three-relation presentation; fails with [`Error::SelfCheck`] otherwise.
    pub fn new(g: usize) -> Result<Self> {
        require_genus(g)?;
        let xs = xi_table_in(None, 0, g + 3);
        let gens = vec![xs[g].clone(), xs[g + 1].clone(), xs[g + 2].clone(), gamma_power(g)];
        let ideal = HomogeneousIdeal::new(&abc_table(), gens, None)?;
        let expected = n_hilbert_series(g);
        let mut hilbert = Vec::with_capacity(expected.len());
        for (total, &want) in expected.iter().enumerate() {
            let got = ideal.quotient_dim(2 * total as u32)?;
            if got as i64 != want {
                return Err(Error::SelfCheck(format!(
                    "N-model for g={g}: quotient dimension {got} in total degree {total}, expected {want}"
                )));
            }
            hilbert.push(got);
        }
        Ok(NModel { g, ideal, hilbert })
    }

    /// Shared, lazily built model for genus `g`.
    pub fn shared(g: usize) -> Result<Arc<NModel>> {
        static MODELS: OnceLock<Mutex<HashMap<usize, Arc<NModel>>>> = OnceLock::new();
        let models = MODELS.get_or_init(Default::default);
        if let Some(m) = models.lock().expect("model cache").get(&g) {
            return Ok(m.clone());
        }
        let m = Arc::new(NModel::new(g)?);
        Ok(models.lock().expect("model cache").entry(g).or_insert(m).clone())
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn ideal(&self) -> &HomogeneousIdeal {
        &self.ideal
    }

    /// Quotient dimensions by total degree, through `3g+3`.
    pub fn hilbert(&self) -> &[usize] {
        &self.hilbert
    }

    /// The ideal slice in total degree `d`.
    pub fn slice(&self, total: u32) -> Result<Arc<SliceBasis>> {
        self.ideal.slice(2 * total)
    }
}

/// Membership of a class in `Q[α,β,γ]` or `Q[α,β,γ,u]` in the equivariant
/// ideal of `N`, one u-coefficient at a time.
pub fn n_membership(model: &NModel, p: &GradedPoly) -> Result<bool> {
    for (_, c) in u_coefficients_abc(p)? {
        if !model.ideal.contains(&c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evidence that a class does not vanish on a component.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    /// Power of `u` whose coefficient fails.
    pub u_power: u32,
    /// That coefficient (restricted, for SYM components).
    pub class: String,
    /// Pairing partner `η^a θ^b` on SYM components.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partner: Option<String>,
    /// Value of the pairing on SYM components.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.partner, &self.value) {
            (Some(p), Some(v)) => write!(
                f,
                "u^{} coefficient {} paired with {} gives {}",
                self.u_power, self.class, p, v
            ),
            _ => write!(f, "u^{} coefficient {} is not in the ideal of N", self.u_power, self.class),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentVerdict {
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Per-component outcome of the localization test.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub poly: String,
    pub g: usize,
    pub n: usize,
    /// Total degree (half the ordinary degree).
    pub degree: u32,
    pub components: Vec<ComponentVerdict>,
    pub verdict: bool,
}

fn sym_verdict(p: &GradedPoly, g: usize, d: usize, m: usize) -> Result<(bool, Option<Witness>)> {
    let r = restrict(p, g, d)?;
    let space = SymProdSpace::new(m, g);
    let et = VarTable::eta_theta();
    for (e, c) in r.split_by(2) {
        let c = c.to_table(&et)?;
        let total = c.homogeneous_degree().map(|x| x / 2);
        let Some(total) = total else { continue };
        if total as usize > m {
            continue;
        }
        let rest = m - total as usize;
        for b in 0..=rest.min(g) {
            let partner = GradedPoly::monomial(&et, vec![(rest - b) as u32, b as u32], Rational::from_integer(1.into()))?;
            let v = evaluate_invariant(&space, &(&c * &partner))?;
            if !v.is_zero() {
                return Ok((
                    false,
                    Some(Witness {
                        u_power: e,
                        class: c.pretty(),
                        partner: Some(partner.pretty()),
                        value: Some(crate::exact::text::format_rational(&v)),
                    }),
                ));
            }
        }
    }
    Ok((true, None))
}

/// Kirwan's criterion: `p ∈ Q[α,β,γ,u]` is an equivariant relation on
/// `M^g_n` iff it restricts to zero on every fixed component.
pub fn is_equivariant_relation(g: usize, n: usize, p: &GradedPoly) -> Result<RelationReport> {
    let comps = fixed_components(g, n)?;
    let p = to_abcu(p)?;
    let degree = match p.homogeneous_degree() {
        Some(d) => d / 2,
        None if p.is_zero() => 0,
        None => {
            return Err(Error::NotHomogeneous {
                expected: p.max_degree().unwrap_or(0),
            })
        }
    };
    let model = NModel::shared(g)?;
    let results = par::map(comps, |c| -> Result<ComponentVerdict> {
        match c {
            FixedComponent::Min => {
                let mut witness = None;
                for (e, coeff) in u_coefficients_abc(&p)? {
                    if !model.ideal.contains(&coeff)? {
                        witness = Some(Witness {
                            u_power: e,
                            class: coeff.pretty(),
                            partner: None,
                            value: None,
                        });
                        break;
                    }
                }
                Ok(ComponentVerdict {
                    kind: "MIN".into(),
                    d: None,
                    m: None,
                    verdict: witness.is_none(),
                    witness,
                })
            }
            FixedComponent::Sym { d, m } => {
                let (verdict, witness) = sym_verdict(&p, g, d, m)?;
                Ok(ComponentVerdict {
                    kind: "SYM".into(),
                    d: Some(d),
                    m: Some(m),
                    verdict,
                    witness,
                })
            }
        }
    });
    let components = results.into_iter().collect::<Result<Vec<_>>>()?;
    let verdict = components.iter().all(|c| c.verdict);
    Ok(RelationReport {
        poly: p.to_string(),
        g,
        n,
        degree,
        components,
        verdict,
    })
}

/// Linear functionals on the total-degree-`total` slice of `Q[α,β,γ,u]` whose
/// common kernel is the space of equivariant relations on `M^g_n`.
pub fn localization_functionals(g: usize, n: usize, total: u32) -> Result<Vec<Vec<Rational>>> {
    let comps = fixed_components(g, n)?;
    let model = NModel::shared(g)?;
    let abcu = abcu_table();
    let abc = abc_table();
    let monos = degree_slice_monomials(&abcu, 2 * total);
    let ncols = monos.len();

    let blocks = par::map(comps, |c| -> Result<Vec<Vec<Rational>>> {
        let mut rows = Vec::new();
        match c {
            FixedComponent::Min => {
                // normal forms modulo the N-ideal, grouped by u-exponent
                let mut by_u: HashMap<u32, Vec<(usize, Vec<Rational>)>> = HashMap::new();
                for (col, mono) in monos.iter().enumerate() {
                    let e = mono[3];
                    let slice = model.slice(total - e)?;
                    let m_abc = GradedPoly::monomial(&abc, mono[..3].to_vec(), Rational::from_integer(1.into()))?;
                    by_u.entry(e).or_default().push((col, slice.quotient_coords(&m_abc)?));
                }
                let mut keys: Vec<u32> = by_u.keys().copied().collect();
                keys.sort_unstable();
                for e in keys {
                    let cols = &by_u[&e];
                    let width = cols.first().map_or(0, |(_, v)| v.len());
                    for j in 0..width {
                        let mut row = vec![Rational::zero(); ncols];
                        for (col, v) in cols {
                            row[*col] = v[j].clone();
                        }
                        if row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
            FixedComponent::Sym { d, m } => {
                let space = SymProdSpace::new(m, g);
                let et = VarTable::eta_theta();
                let (target, images) = restriction_images(&abcu, g, d)?;
                // restricted monomials, split into u-coefficients
                let restricted: Vec<Vec<(u32, GradedPoly)>> = monos
                    .iter()
                    .map(|mono| -> Result<Vec<(u32, GradedPoly)>> {
                        let p = GradedPoly::monomial(&abcu, mono.clone(), Rational::from_integer(1.into()))?;
                        let r = p.substitute(&images, &target)?;
                        r.split_by(2)
                            .into_iter()
                            .map(|(e, c)| Ok((e, c.to_table(&et)?)))
                            .collect()
                    })
                    .collect::<Result<_>>()?;
                for e in 0..=total {
                    let deg = total - e;
                    if deg as usize > m {
                        continue;
                    }
                    let rest = m - deg as usize;
                    for b in 0..=rest.min(g) {
                        let partner: Monomial = vec![(rest - b) as u32, b as u32];
                        let partner = GradedPoly::monomial(&et, partner, Rational::from_integer(1.into()))?;
                        let mut row = vec![Rational::zero(); ncols];
                        for (col, parts) in restricted.iter().enumerate() {
                            if let Some((_, c)) = parts.iter().find(|(ee, _)| *ee == e) {
                                row[col] = evaluate_invariant(&space, &(c * &partner))?;
                            }
                        }
                        if row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        Ok(rows)
    });
    let mut all = Vec::new();
    for b in blocks {
        all.extend(b?);
    }
    Ok(all)
}

type KernelKey = (usize, usize, u32);

/// `V_D`: the equivariant relations on `M^g_n` in total degree `D`, as a
/// subspace of the slice of `Q[α,β,γ,u]`.
pub fn equivariant_kernel(g: usize, n: usize, total: u32) -> Result<Arc<SliceBasis>> {
    static CACHE: OnceLock<Mutex<HashMap<KernelKey, Arc<SliceBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(k) = cache.lock().expect("kernel cache").get(&(g, n, total)) {
        return Ok(k.clone());
    }
    let rows = localization_functionals(g, n, total)?;
    let k = Arc::new(SliceBasis::kernel(&abcu_table(), 2 * total, &rows));
    cache.lock().expect("kernel cache").insert((g, n, total), k.clone());
    Ok(k)
}

/// The image of `V_D` under `u ↦ 0`: the ordinary invariant relations of
/// `M^g_n` in total degree `D`, as a subspace of the slice of `Q[α,β,γ]`.
pub fn relation_oracle_slice(g: usize, n: usize, total: u32) -> Result<SliceBasis> {
    let v = equivariant_kernel(g, n, total)?;
    let abc = abc_table();
    let mut out = SliceBasis::zero(&abc, 2 * total);
    for b in v.basis() {
        let c0 = b.coefficient_of(3, 0).to_table(&abc)?;
        if !c0.is_zero() {
            out.insert(&c0)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::equivariant_family_84;
    use crate::exact::parse_poly;

    #[test]
    fn component_lists() {
        use FixedComponent::*;
        assert_eq!(fixed_components(2, 0).unwrap(), vec![Min, Sym { d: 1, m: 1 }]);
        assert_eq!(
            fixed_components(2, 1).unwrap(),
            vec![Min, Sym { d: 1, m: 2 }, Sym { d: 2, m: 0 }]
        );
        assert_eq!(
            fixed_components(3, 0).unwrap(),
            vec![Min, Sym { d: 1, m: 3 }, Sym { d: 2, m: 1 }]
        );
        assert!(fixed_components(1, 0).is_err());
    }

    #[test]
    fn restriction_rules() {
        let t = abcu_table();
        let r = restrict(&parse_poly("a", &t).unwrap(), 2, 1).unwrap();
        assert_eq!(r, parse_poly("eta - u + th", r.table()).unwrap());
        let r = restrict(&parse_poly("b", &t).unwrap(), 2, 3).unwrap();
        assert_eq!(r, parse_poly("eta^2 - 2*eta*u + u^2", r.table()).unwrap());
        // γ through ψ agrees with the direct rule
        let g = 2;
        let mt = VarTable::moduli(g);
        let via_psi = parse_poly("-2*psi1*psi3 - 2*psi2*psi4", &mt).unwrap();
        let direct = parse_poly("g3", &mt).unwrap();
        let a = restrict(&via_psi, g, 1).unwrap();
        let b = restrict(&direct, g, 1).unwrap();
        let space = SymProdSpace::new(3, g);
        let st = space.table().clone();
        let mut images: Vec<GradedPoly> = (0..st.len()).map(|i| GradedPoly::var_at(&st, i)).collect();
        images[1] = space.theta_expanded();
        assert_eq!(a, b.substitute(&images, &st).unwrap());
    }

    #[test]
    fn n_model_small() {
        let m = NModel::new(2).unwrap();
        assert_eq!(&m.hilbert()[..5], &[1, 1, 1, 1, 0]);
        let t = abc_table();
        assert!(n_membership(&m, &parse_poly("1/2*a^2 + 1/2*b", &t).unwrap()).unwrap());
        assert!(!n_membership(&m, &parse_poly("a", &t).unwrap()).unwrap());
        assert!(n_membership(&m, &parse_poly("g3^3", &t).unwrap()).unwrap());
    }

    #[test]
    fn relation_reports() {
        let rep = is_equivariant_relation(2, 2, &equivariant_family_84(2, 0, 0).unwrap()).unwrap();
        assert!(rep.verdict, "{rep:?}");
        let t = abcu_table();
        assert!(is_equivariant_relation(2, 0, &parse_poly("u*g3^3", &t).unwrap()).unwrap().verdict);
        let rep = is_equivariant_relation(2, 2, &parse_poly("a", &t).unwrap()).unwrap();
        assert!(!rep.verdict);
        let w = rep.components[1].witness.clone().unwrap();
        assert_eq!(rep.components[1].m, Some(3));
        assert_eq!(w.value.as_deref(), Some("3"));
        assert_eq!(w.partner.as_deref(), Some("η^2"));
    }

    #[test]
    fn oracle_small_slices() {
        let t = abc_table();
        let s3 = relation_oracle_slice(2, 0, 3).unwrap();
        assert_eq!(s3.dim(), 1);
        assert!(s3.member(&parse_poly("2*a*b + 2*g3", &t).unwrap()).unwrap());
        assert_eq!(relation_oracle_slice(2, 0, 2).unwrap().dim(), 0);
        assert!(relation_oracle_slice(2, 0, 9).unwrap().member(&parse_poly("g3^3", &t).unwrap()).unwrap());
    }
}
