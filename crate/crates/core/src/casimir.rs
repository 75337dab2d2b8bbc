//! Casimir eigenvalue polynomials: coefficient extraction of representation
//! characters in the power-sum basis, normalization against the adjoint,
//! and class analysis against the K-polynomial families.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{theta_vector, DominantE8};
use crate::linalg::{self, Solution};
use crate::rat::Rat;
use crate::orbitchar::e8_orbit_char_expr;
use crate::repsys::{char_rep, dim_rep, freudenthal};
use crate::kfamily::{K12Zero, KFamily};
use crate::symfunc::{duality_expr, partitions, EvalPoint, Partition, SymExpr};

pub const DEGREES: [u32; 3] = [8, 12, 14];

/// `Θ(M, Λ⁺) = Σ_I θ_I(Λ⁺)^M`.
pub fn theta(m: u32, r: &DominantE8) -> Rat {
    theta_vector(r).iter().map(|t| crate::rat::pow(t, m)).sum()
}

/// `Θ(0..=max, r)`.
pub fn thetas(max: u32, r: &DominantE8) -> Vec<Rat> {
    crate::symfunc::power_sums(&theta_vector(r), max)
}

/// Products of `p_2..p_9` of degree `m`: the monomials `T(α)` in reverse
/// lexicographic order, `α = 1, 2, …`.
pub fn monomial_basis(m: u32) -> Vec<Partition> {
    partitions(m, 9, 9).into_iter().filter(|p| p.parts().iter().all(|&x| x >= 2)).collect()
}

pub fn basis_label(p: &Partition) -> String {
    let mut groups: Vec<(u32, usize)> = Vec::new();
    for &x in p.parts() {
        match groups.last_mut() {
            Some((v, n)) if *v == x => *n += 1,
            _ => groups.push((x, 1)),
        }
    }
    groups
        .iter()
        .map(|(v, n)| if *n == 1 { format!("p{v}") } else { format!("p{v}^{n}") })
        .collect::<Vec<_>>()
        .join("*")
}

/// Rewrites every `p_k`, `k ≥ 10`, through the dualities until only
/// `p_2..p_9` remain.
pub fn reduce_to_basis(e: &SymExpr) -> Result<SymExpr> {
    let mut cur = e.without_p1();
    loop {
        let mut next = SymExpr::zero();
        let mut changed = false;
        for (key, c) in cur.terms() {
            match key.iter().position(|&k| k >= 10) {
                None => next = next.add(&SymExpr::monomial(key, c.clone())),
                Some(i) => {
                    changed = true;
                    let mut rest = key.to_vec();
                    let k = rest.remove(i);
                    let sub = duality_expr(k)?;
                    next = next.add(&sub.mul(&SymExpr::monomial(&rest, c.clone())));
                }
            }
        }
        cur = next.without_p1();
        if !changed {
            return Ok(cur);
        }
    }
}

/// Coefficients of `ch_M(Π(λ⁺))` of one E8 orbit over `monomial_basis(M)`,
/// by symbolic reduction of the orbit-table expansion. Cached per orbit.
pub fn orbit_cofs(m: u32, l: &DominantE8) -> Result<Arc<Vec<Rat>>> {
    type Memo = Mutex<HashMap<(u32, DominantE8), Arc<Vec<Rat>>>>;
    static CACHE: OnceLock<Memo> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(m, *l)) {
        return Ok(v.clone());
    }
    let e = reduce_to_basis(&e8_orbit_char_expr(m, l)?)?;
    let basis = monomial_basis(m);
    let known = basis.iter().filter(|b| !e.coefficient(b.parts()).is_zero()).count();
    if known != e.len() {
        return Err(Error::InvalidArgument(format!("degree-{m} reduction left non-basis terms")));
    }
    let v = Arc::new(basis.iter().map(|b| e.coefficient(b.parts())).collect::<Vec<_>>());
    cache.lock().unwrap().insert((m, *l), v.clone());
    Ok(v)
}

/// Coefficients of `ch_M(R(Λ⁺))` over `monomial_basis(M)`: the orbit
/// coefficients weighted by Freudenthal multiplicities.
pub fn cofs_symbolic(m: u32, top: &DominantE8) -> Result<Vec<Rat>> {
    let n = monomial_basis(m).len();
    let dec = freudenthal(top);
    let per_orbit = dec.orbits.par_iter().map(|(l, _)| orbit_cofs(m, l)).collect::<Result<Vec<_>>>()?;
    let mut out = vec![Rat::zero(); n];
    for ((_, mult), cofs) in dec.orbits.iter().zip(&per_orbit) {
        let k = Rat::from(BigInt::from(*mult));
        for (o, c) in out.iter_mut().zip(cofs.iter()) {
            *o += c * &k;
        }
    }
    Ok(out)
}

fn basis_row(basis: &[Partition], ps: &[Rat]) -> Vec<Rat> {
    basis
        .iter()
        .map(|b| b.parts().iter().fold(Rat::one(), |acc, &k| acc * &ps[k as usize]))
        .collect()
}

pub const MAX_REDRAWS: usize = 5;

/// Coefficients of `ch_M(R(Λ⁺))` over `monomial_basis(M)` by exact
/// interpolation: the character is evaluated at random points and the
/// square system in the basis monomials is solved. Five extra points are
/// checked after the fit.
pub fn extract_cofs<R: Rng + ?Sized>(m: u32, top: &DominantE8, rng: &mut R) -> Result<Vec<Rat>> {
    if !DEGREES.contains(&m) {
        return Err(Error::UnsupportedDegree(m));
    }
    let basis = monomial_basis(m);
    let n = basis.len();
    for _ in 0..MAX_REDRAWS {
        let pts: Vec<EvalPoint> = (0..n + 5).map(|_| EvalPoint::random(rng)).collect();
        let rows: Vec<Vec<Rat>> = pts.iter().map(|h| basis_row(&basis, &h.power_sums(m))).collect();
        let vals: Vec<Rat> = pts.iter().map(|h| char_rep(m, top, h)).collect::<Result<_>>()?;
        let Ok(sol) = linalg::solve(&rows[..n], &vals[..n]) else {
            continue;
        };
        for (row, v) in rows[n..].iter().zip(&vals[n..]) {
            let fit: Rat = row.iter().zip(&sol).map(|(a, b)| a * b).sum();
            if &fit != v {
                return Err(Error::Singular(format!(
                    "degree-{m} fit for {top} fails at a held-out point"
                )));
            }
        }
        return Ok(sol);
    }
    Err(Error::Singular(format!("evaluation matrix for degree {m} stayed singular after {MAX_REDRAWS} draws")))
}

/// `P_α(Λ⁺) = cof_α(Λ⁺)·dim R(λ₁) / (cof_α(λ₁)·dim R(Λ⁺))`, so that
/// `P_α(λ₁) = 1`.
pub fn normalize_p(cof: &[Rat], dim: &BigInt, reference: &[Rat], ref_dim: &BigInt) -> Result<Vec<Rat>> {
    cof.iter()
        .zip(reference)
        .enumerate()
        .map(|(a, (c, r))| {
            if r.is_zero() {
                return Err(Error::VanishingReference(a + 1));
            }
            Ok(c * Rat::from(ref_dim.clone()) / (r * Rat::from(dim.clone())))
        })
        .collect()
}

/// Coefficients and normalized values for one representation.
#[derive(Clone, Debug)]
pub struct CofData {
    pub weight: DominantE8,
    pub dim: BigInt,
    pub cof: Vec<Rat>,
}

pub fn cof_data(m: u32, top: &DominantE8) -> Result<CofData> {
    Ok(CofData { weight: *top, dim: dim_rep(top), cof: cofs_symbolic(m, top)? })
}

/// `P_α(Λ⁺)` with the adjoint as reference.
pub fn normalize_p_alpha(m: u32, alpha: usize, top: &DominantE8) -> Result<Rat> {
    let basis = monomial_basis(m);
    if alpha == 0 || alpha > basis.len() {
        return Err(Error::UnsupportedIndex { degree: m, index: alpha });
    }
    if top.is_zero() {
        return Ok(Rat::zero());
    }
    let adjoint = DominantE8::fundamental(1)?;
    let reference = cof_data(m, &adjoint)?;
    let data = cof_data(m, top)?;
    let r = &reference.cof[alpha - 1];
    if r.is_zero() {
        return Err(Error::VanishingReference(alpha));
    }
    Ok(&data.cof[alpha - 1] * Rat::from(reference.dim.clone()) / (r * Rat::from(data.dim.clone())))
}

/// Coefficient vectors of one degree over a fixed sample of representations.
#[derive(Clone, Debug)]
pub struct CofTable {
    pub degree: u32,
    pub basis: Vec<Partition>,
    pub rows: Vec<CofData>,
}

impl CofTable {
    pub fn compute(m: u32, sample: &[DominantE8]) -> Result<Self> {
        if !DEGREES.contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        let rows = sample.par_iter().map(|w| cof_data(m, w)).collect::<Result<Vec<_>>>()?;
        Ok(CofTable { degree: m, basis: monomial_basis(m), rows })
    }

    pub fn weights(&self) -> Vec<DominantE8> {
        self.rows.iter().map(|d| d.weight).collect()
    }

    /// Index (into the sample) of the reference representation for
    /// coefficient `alpha`: the first whose coefficient is nonzero. This is
    /// the adjoint whenever the adjoint coefficient does not vanish.
    pub fn reference(&self, alpha: usize) -> Option<usize> {
        self.rows.iter().position(|d| !d.cof[alpha - 1].is_zero())
    }

    /// `P_α` over the sample, normalized at `reference(α)`; `None` when the
    /// coefficient vanishes on every sampled representation.
    pub fn normalized(&self, alpha: usize) -> Option<Vec<Rat>> {
        let r = &self.rows[self.reference(alpha)?];
        let scale = Rat::from(r.dim.clone()) / &r.cof[alpha - 1];
        Some(self.rows.iter().map(|d| &d.cof[alpha - 1] * &scale / Rat::from(d.dim.clone())).collect())
    }

    /// `cof_α / dim` over the sample, the unnormalized eigenvalue shape.
    pub fn per_dim(&self, alpha: usize) -> Vec<Rat> {
        self.rows.iter().map(|d| &d.cof[alpha - 1] / Rat::from(d.dim.clone())).collect()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassReport {
    pub degree: u32,
    pub sample: Vec<String>,
    /// Each class as 1-based basis indices.
    pub classes: Vec<Vec<usize>>,
    /// The same classes with monomial labels.
    pub labels: Vec<Vec<String>>,
    /// Coefficients that vanish on every sampled representation; they are
    /// not counted as a class.
    pub vanishing: Vec<usize>,
    /// Coefficients normalized at a representation other than the adjoint
    /// (their adjoint coefficient is zero), with that representation.
    pub reference_fallbacks: Vec<(usize, String)>,
}

impl ClassReport {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, alpha: usize) -> Option<&[usize]> {
        self.classes.iter().find(|c| c.contains(&alpha)).map(Vec::as_slice)
    }
}

/// Groups α by exact equality of the normalized `P_α` over the sample.
pub fn distinct_classes(table: &CofTable) -> ClassReport {
    let mut groups: BTreeMap<Vec<Rat>, Vec<usize>> = BTreeMap::new();
    let mut vanishing = Vec::new();
    let mut reference_fallbacks = Vec::new();
    for alpha in 1..=table.basis.len() {
        match table.normalized(alpha) {
            None => vanishing.push(alpha),
            Some(p) => {
                let r = table.reference(alpha).expect("nonvanishing");
                if table.rows[r].weight != DominantE8::fundamental(1).expect("λ₁") {
                    reference_fallbacks.push((alpha, table.rows[r].weight.to_string()));
                }
                groups.entry(p).or_default().push(alpha);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = groups.into_values().collect();
    classes.sort();
    let labels =
        classes.iter().map(|c| c.iter().map(|&a| basis_label(&table.basis[a - 1])).collect()).collect();
    ClassReport {
        degree: table.degree,
        sample: table.rows.iter().map(|d| d.weight.to_string()).collect(),
        classes,
        labels,
        vanishing,
        reference_fallbacks,
    }
}

/// A named function of the highest weight used as a fitting column.
pub type Column = (String, Box<dyn Fn(&DominantE8) -> Rat + Send + Sync>);

/// `{1} ∪ K_1(m) … K_n(m)` as fitting columns.
pub fn k_columns(family: &KFamily) -> Vec<Column> {
    let mut cols: Vec<Column> = vec![("1".into(), Box::new(|_: &DominantE8| Rat::one()))];
    for a in 1..=family.size() {
        let f = family.clone();
        cols.push((family.name(a), Box::new(move |w: &DominantE8| f.eval(a, w).expect("in range"))));
    }
    cols
}

/// `k_columns` plus `Θ(2)^j`, `j = 1..=max_power`.
pub fn theta2_extended_columns(family: &KFamily, max_power: u32) -> Vec<Column> {
    let mut cols = k_columns(family);
    for j in 1..=max_power {
        cols.push((format!("Theta2^{j}"), Box::new(move |w: &DominantE8| crate::rat::pow(&theta(2, w), j))));
    }
    cols
}

/// Evaluation matrix of the columns over the weights.
pub fn column_matrix(cols: &[Column], weights: &[DominantE8]) -> Vec<Vec<Rat>> {
    weights.par_iter().map(|w| cols.iter().map(|(_, f)| f(w)).collect()).collect()
}

/// Exact rank of the evaluation matrix of `{1} ∪ KFamily(m)` over the
/// weights.
pub fn independence_rank(family: &KFamily, weights: &[DominantE8]) -> usize {
    linalg::rank(&column_matrix(&k_columns(family), weights))
}

/// Indices of a maximal independent subset of the columns, judged over
/// the probe weights.
pub fn independent_subset(cols: &[Column], probe: &[DominantE8]) -> Vec<usize> {
    linalg::independent_columns(&column_matrix(cols, probe))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassFit {
    pub class: Vec<usize>,
    /// Normalization reference used for the class representative.
    pub reference: String,
    pub consistent_on_fit: bool,
    /// Coefficients over `SpanReport::columns` (absent columns are zero).
    #[serde(with = "crate::rat::serde_vec")]
    pub coefficients: Vec<Rat>,
    /// Value minus prediction at each held-out weight.
    #[serde(with = "crate::rat::serde_vec")]
    pub residuals: Vec<Rat>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpanReport {
    pub degree: u32,
    pub columns: Vec<String>,
    /// Columns kept after dropping those dependent on the others.
    pub used_columns: Vec<String>,
    pub fit_weights: Vec<String>,
    pub held_out_weights: Vec<String>,
    pub fits: Vec<ClassFit>,
    pub passed: bool,
}

/// Fits one representative of each class as an exact linear combination
/// of the columns on the first `fit` sampled representations, then checks
/// the prediction on every remaining one. Dependent columns (judged on
/// `probe`) are dropped first so the fit is unique when `fit` is large
/// enough.
pub fn span_check(
    table: &CofTable,
    classes: &ClassReport,
    cols: &[Column],
    probe: &[DominantE8],
    fit: usize,
) -> Result<SpanReport> {
    let n = table.rows.len();
    if fit == 0 || fit >= n {
        return Err(Error::InvalidArgument(format!("fit count {fit} must lie in 1..{n}")));
    }
    let keep = independent_subset(cols, probe);
    let weights = table.weights();
    let full = column_matrix(cols, &weights);
    let a: Vec<Vec<Rat>> = full.iter().map(|row| keep.iter().map(|&j| row[j].clone()).collect()).collect();
    let mut fits = Vec::new();
    for class in &classes.classes {
        let alpha = class[0];
        let reference = table.rows[table.reference(alpha).expect("class member is nonvanishing")].weight;
        let p = table.normalized(alpha).expect("class member is nonvanishing");
        let (consistent, coefficients, residuals) = match linalg::solve_system(&a[..fit], &p[..fit]) {
            Solution::Inconsistent { .. } => (false, vec![Rat::zero(); cols.len()], vec![]),
            Solution::Unique(x) | Solution::Underdetermined { particular: x, .. } => {
                let mut coefficients = vec![Rat::zero(); cols.len()];
                for (&j, c) in keep.iter().zip(&x) {
                    coefficients[j] = c.clone();
                }
                let residuals = (fit..n)
                    .map(|i| &p[i] - a[i].iter().zip(&x).map(|(u, v)| u * v).sum::<Rat>())
                    .collect();
                (true, coefficients, residuals)
            }
        };
        let passed = consistent && residuals.iter().all(Zero::is_zero);
        fits.push(ClassFit {
            class: class.clone(),
            reference: reference.to_string(),
            consistent_on_fit: consistent,
            coefficients,
            residuals,
            passed,
        });
    }
    Ok(SpanReport {
        degree: table.degree,
        columns: cols.iter().map(|(n, _)| n.clone()).collect(),
        used_columns: keep.iter().map(|&j| cols[j].0.clone()).collect(),
        fit_weights: weights[..fit].iter().map(ToString::to_string).collect(),
        held_out_weights: weights[fit..].iter().map(ToString::to_string).collect(),
        passed: fits.iter().all(|f| f.passed),
        fits,
    })
}

/// Outcome of resolving the undefined `K₁₂(0)` constant against the data.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct K12ZeroFit {
    pub chosen: K12Zero,
    /// `span_check(12)` passes with the chosen value.
    pub span_passes: bool,
    /// `span_check(12)` also passes with the symbol set to zero, i.e. the
    /// data cannot pin the value down.
    pub passes_at_zero: bool,
}

/// Resolves `K₁₂(0)` by requiring the degree-12 span check to pass.
///
/// The symbol enters `K₁(12)` as an additive constant, which the `{1}`
/// column absorbs; any value satisfies the requirement. The default (the
/// value making `K₁(12)` vanish at the adjoint) is therefore kept, and both
/// outcomes are reported so the non-identifiability stays visible.
pub fn fit_k12_zero(table: &CofTable, probe: &[DominantE8], fit: usize) -> Result<K12ZeroFit> {
    if table.degree != 12 {
        return Err(Error::UnsupportedDegree(table.degree));
    }
    let classes = distinct_classes(table);
    let chosen = K12Zero::default();
    let with = KFamily::with_k12_zero(12, chosen.clone())?;
    let zero = KFamily::with_k12_zero(12, K12Zero { value: Rat::zero(), source: "zero".into() })?;
    let span_passes = span_check(table, &classes, &k_columns(&with), probe, fit)?.passed;
    let passes_at_zero = span_check(table, &classes, &k_columns(&zero), probe, fit)?.passed;
    Ok(K12ZeroFit { chosen, span_passes, passes_at_zero })
}

/// The representations used for class analysis: the adjoint first (it is
/// the normalization reference), then small representations.
pub fn standard_sample(max_dim: u64) -> Vec<DominantE8> {
    let l = |i| DominantE8::fundamental(i).expect("1..=8");
    let candidates = [
        l(1),
        l(7),
        l(1).plus(&l(1)),
        l(2),
        l(8),
        l(1).plus(&l(7)),
        l(7).plus(&l(7)),
        l(6),
        l(1).plus(&l(1)).plus(&l(1)),
        l(1).plus(&l(2)),
        l(3),
    ];
    candidates.into_iter().filter(|w| dim_rep(w) <= BigInt::from(max_dim)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn l(i: usize) -> DominantE8 {
        DominantE8::fundamental(i).unwrap()
    }

    #[test]
    fn theta_anchors() {
        assert!(theta(1, &l(3)).is_zero());
        assert_eq!(theta(2, &DominantE8::ZERO), int(620));
        assert_eq!(theta(2, &l(1)), int(680));
    }

    #[test]
    fn degree8_basis_order() {
        let labels: Vec<String> = monomial_basis(8).iter().map(basis_label).collect();
        assert_eq!(labels, ["p8", "p6*p2", "p5*p3", "p4^2", "p4*p2^2", "p3^2*p2", "p2^4"]);
    }

    #[test]
    fn trivial_rep_has_no_coefficients() {
        assert!(cofs_symbolic(8, &DominantE8::ZERO).unwrap().iter().all(Zero::is_zero));
        assert!(normalize_p_alpha(8, 1, &DominantE8::ZERO).unwrap().is_zero());
    }

    #[test]
    fn interpolation_agrees_with_symbolic_reduction() {
        let mut rng = crate::random::rng(3);
        for w in [l(1), l(7)] {
            assert_eq!(extract_cofs(8, &w, &mut rng).unwrap(), cofs_symbolic(8, &w).unwrap());
        }
    }

    #[test]
    fn adjoint_normalizes_to_one() {
        assert_eq!(normalize_p_alpha(8, 1, &l(1)).unwrap(), int(1));
        assert!(matches!(normalize_p_alpha(8, 7, &l(7)), Err(Error::VanishingReference(7))));
    }

    #[test]
    fn degree8_classes_on_small_sample() {
        let table = CofTable::compute(8, &[l(1), l(7), l(2), l(8), l(1).plus(&l(1))]).unwrap();
        let rep = distinct_classes(&table);
        assert_eq!(rep.classes, vec![vec![1, 2, 3, 4, 5, 6], vec![7]]);
        assert_eq!(rep.reference_fallbacks, vec![(7, l(7).to_string())]);
    }

    #[test]
    fn rank_of_degree8_family() {
        let ws = crate::random::random_weights(&mut crate::random::rng(0), 10, 3);
        assert_eq!(independence_rank(&KFamily::new(8).unwrap(), &ws), 3);
    }
}
