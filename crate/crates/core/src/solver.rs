//! Weight multiplicities from Casimir eigenvalues, checked against
//! Freudenthal.
//!
//! For each degree `M` and basis monomial `α`, the coefficient of `T(α)`
//! in `ch_M` of a representation is `E_α(Λ⁺)·dim R(Λ⁺)`. Writing both sides
//! over the E8 orbits of `R(Λ⁺)` gives one linear equation in the unknown
//! multiplicities:
//!
//! `Σ m(λ⁺) (a_α(λ⁺) − E_α(Λ⁺)·|Π(λ⁺)|) = 0`, with `m(Λ⁺) = 1`,
//!
//! where `a_α(λ⁺)` is the orbit coefficient. `E_α` is unknown a priori; it
//! is calibrated as a linear combination of a chosen basis of functions of
//! `Λ⁺` on small representations whose multiplicities Freudenthal gives.
//! A calibration is only used when it is over-determined and consistent,
//! so a basis that cannot express `E_α` never contributes equations.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::casimir::{basis_label, column_matrix, cofs_symbolic, independent_subset, k_columns, monomial_basis, orbit_cofs, theta, Column};
use crate::error::{Error, Result};
use crate::kfamily::{w_aux, KFamily};
use crate::lattice::DominantE8;
use crate::linalg::{self, Solution};
use crate::rat::{pow, Rat};
use crate::registry::Registry;
use crate::repsys::{dim_rep, dominant_weights_below, freudenthal};
use crate::weyl::e8_orbit_size;

pub const SOLVER_DEGREES: [u32; 4] = [2, 8, 12, 14];

/// A family of functions of the highest weight assumed to span the
/// eigenvalue functions of a given degree.
pub trait EigenvalueBasis: Send + Sync {
    fn columns(&self, m: u32) -> Result<Vec<Column>>;
}

fn theta2_powers(max: u32) -> Vec<Column> {
    (0..=max)
        .map(|j| -> Column {
            let name = if j == 0 { "1".to_string() } else { format!("Theta2^{j}") };
            (name, Box::new(move |w: &DominantE8| pow(&theta(2, w), j)))
        })
        .collect()
}

/// `{1} ∪ K_α(M)`; degree 2 uses `{1, Θ(2)}`.
pub struct KFamilyBasis;

impl EigenvalueBasis for KFamilyBasis {
    fn columns(&self, m: u32) -> Result<Vec<Column>> {
        match m {
            2 => Ok(theta2_powers(1)),
            _ => Ok(k_columns(&KFamily::new(m)?)),
        }
    }
}

/// Products of the invariants `I₂ = Θ(2)`, `I₈ = W₁(8)`, `I₁₂ = W₁(12)`,
/// `I₁₄ = W₁(14)` of weighted degree at most `M`.
pub struct RootInvariantBasis;

impl EigenvalueBasis for RootInvariantBasis {
    fn columns(&self, m: u32) -> Result<Vec<Column>> {
        if !SOLVER_DEGREES.contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        let mut cols = theta2_powers(m / 2);
        for (deg, name) in [(8, "W1(8)"), (12, "W1(12)"), (14, "W1(14)")] {
            if deg > m {
                continue;
            }
            for j in 0..=(m - deg) / 2 {
                let label = if j == 0 { name.to_string() } else { format!("{name}*Theta2^{j}") };
                cols.push((label, Box::new(move |w: &DominantE8| w_aux(name, w).expect("known auxiliary") * pow(&theta(2, w), j))));
            }
        }
        Ok(cols)
    }
}

pub const BASIS_NAMES: [&str; 2] = ["k-family", "root-invariants"];

fn make_basis(name: &str) -> Option<Box<dyn EigenvalueBasis>> {
    match name {
        "k-family" => Some(Box::new(KFamilyBasis)),
        "root-invariants" => Some(Box::new(RootInvariantBasis)),
        _ => None,
    }
}

pub fn eigenvalue_basis_registry() -> Registry<dyn EigenvalueBasis> {
    let mut reg = Registry::new("eigenvalue basis");
    for name in BASIS_NAMES {
        reg.register(name, make_basis(name).expect("listed basis"));
    }
    reg
}

/// The trivial representation and the four smallest nontrivial ones, with
/// Freudenthal multiplicities. Five representations leave one consistency
/// check for the four independent degree-12 columns of the K family, and
/// keep `λ₈` (dimension 147250) and everything larger out of calibration.
pub fn default_calibration_reps() -> Vec<DominantE8> {
    let l = |i| DominantE8::fundamental(i).expect("1..=8");
    vec![DominantE8::ZERO, l(1), l(7), l(1).plus(&l(1)), l(2)]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CalibrationStatus {
    /// Fitted with `checks` calibration representations to spare, all
    /// consistent.
    Verified { checks: usize },
    /// As many unknowns as calibration representations (or fewer
    /// independent rows): nothing confirms the fit.
    Unverifiable,
    /// The basis cannot reproduce the calibration data.
    Inconsistent,
    /// The coefficient vanishes on every representation seen.
    Vanishing,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlphaCalibration {
    pub alpha: usize,
    pub monomial: String,
    pub status: CalibrationStatus,
    /// Over `DegreeCalibration::used_columns`.
    #[serde(with = "crate::rat::serde_vec")]
    pub coefficients: Vec<Rat>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeCalibration {
    pub degree: u32,
    pub used_columns: Vec<String>,
    pub alphas: Vec<AlphaCalibration>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Calibration {
    pub basis: String,
    pub reps: Vec<String>,
    pub degrees: Vec<DegreeCalibration>,
    #[serde(skip)]
    keep: Vec<Vec<usize>>,
}

/// `E_α(Λ⁺) = cof_α(Λ⁺) / dim R(Λ⁺)` for every `α`.
pub fn eigenvalues(m: u32, top: &DominantE8) -> Result<Vec<Rat>> {
    let dim = Rat::from(dim_rep(top));
    Ok(cofs_symbolic(m, top)?.into_iter().map(|c| c / &dim).collect())
}

/// Fits every eigenvalue function of the listed degrees on the calibration
/// representations. `probe` weights decide which basis columns are
/// independent.
pub fn calibrate(
    basis_name: &str,
    basis: &dyn EigenvalueBasis,
    reps: &[DominantE8],
    degrees: &[u32],
    probe: &[DominantE8],
) -> Result<Calibration> {
    let mut out = Vec::new();
    let mut keeps = Vec::new();
    for &m in degrees {
        let cols = basis.columns(m)?;
        let keep = independent_subset(&cols, probe);
        let full = column_matrix(&cols, reps);
        let a: Vec<Vec<Rat>> = full.iter().map(|row| keep.iter().map(|&j| row[j].clone()).collect()).collect();
        let values = reps.par_iter().map(|w| eigenvalues(m, w)).collect::<Result<Vec<_>>>()?;
        let labels = monomial_basis(m);
        let mut alphas = Vec::new();
        for (i, label) in labels.iter().enumerate() {
            let b: Vec<Rat> = values.iter().map(|v| v[i].clone()).collect();
            let (status, coefficients) = if b.iter().all(Zero::is_zero) {
                (CalibrationStatus::Vanishing, vec![])
            } else {
                match linalg::solve_system(&a, &b) {
                    Solution::Inconsistent { .. } => (CalibrationStatus::Inconsistent, vec![]),
                    Solution::Underdetermined { .. } => (CalibrationStatus::Unverifiable, vec![]),
                    Solution::Unique(x) if keep.len() == reps.len() => (CalibrationStatus::Unverifiable, x),
                    Solution::Unique(x) => (CalibrationStatus::Verified { checks: reps.len() - keep.len() }, x),
                }
            };
            alphas.push(AlphaCalibration { alpha: i + 1, monomial: basis_label(label), status, coefficients });
        }
        out.push(DegreeCalibration { degree: m, used_columns: keep.iter().map(|&j| cols[j].0.clone()).collect(), alphas });
        keeps.push(keep);
    }
    Ok(Calibration { basis: basis_name.to_string(), reps: reps.iter().map(ToString::to_string).collect(), degrees: out, keep: keeps })
}

impl Calibration {
    /// Calibrated `E_α` of degree `m` at `top`, when verified.
    pub fn predict(&self, basis: &dyn EigenvalueBasis, m: u32, alpha: usize, top: &DominantE8) -> Result<Option<Rat>> {
        let Some(d) = self.degrees.iter().position(|d| d.degree == m) else {
            return Ok(None);
        };
        let cal = &self.degrees[d].alphas[alpha - 1];
        if !matches!(cal.status, CalibrationStatus::Verified { .. }) {
            return Ok(None);
        }
        let cols = basis.columns(m)?;
        Ok(Some(self.keep[d].iter().zip(&cal.coefficients).map(|(&j, c)| (cols[j].1)(top) * c).sum()))
    }

    pub fn verified_count(&self) -> usize {
        self.degrees
            .iter()
            .flat_map(|d| &d.alphas)
            .filter(|a| matches!(a.status, CalibrationStatus::Verified { .. }))
            .count()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SolveOutcome {
    Determined { multiplicities: Vec<(DominantE8, String)> },
    /// Fewer independent equations than unknowns; nothing is guessed.
    InsufficientEquations { rank: usize, unknowns: usize },
    Inconsistent { rank: usize },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MultiplicitySolution {
    pub highest: DominantE8,
    pub unknowns: Vec<DominantE8>,
    pub equations: usize,
    pub outcome: SolveOutcome,
}

impl MultiplicitySolution {
    /// Determined multiplicities as integers, if they are.
    pub fn integer_multiplicities(&self) -> Option<Vec<(DominantE8, u64)>> {
        match &self.outcome {
            SolveOutcome::Determined { multiplicities } => multiplicities
                .iter()
                .map(|(w, s)| s.parse::<u64>().ok().map(|m| (*w, m)))
                .collect(),
            _ => None,
        }
    }
}

/// Solves for the multiplicities of every dominant weight below `top`.
pub fn solve_multiplicities(top: &DominantE8, basis: &dyn EigenvalueBasis, cal: &Calibration) -> Result<MultiplicitySolution> {
    let weights = dominant_weights_below(top);
    let unknowns: Vec<DominantE8> = weights.iter().filter(|w| *w != top).copied().collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for d in &cal.degrees {
        let m = d.degree;
        let orbit: Vec<_> = weights.par_iter().map(|w| orbit_cofs(m, w)).collect::<Result<Vec<_>>>()?;
        let sizes: Vec<Rat> = weights.iter().map(|w| Rat::from(BigInt::from(e8_orbit_size(w)))).collect();
        for a in &d.alphas {
            let Some(e) = cal.predict(basis, m, a.alpha, top)? else { continue };
            let coef = |k: usize| &orbit[k][a.alpha - 1] - &e * &sizes[k];
            let mut row = Vec::with_capacity(unknowns.len());
            let mut b = Rat::zero();
            for (k, w) in weights.iter().enumerate() {
                if w == top {
                    b = -coef(k);
                } else {
                    row.push(coef(k));
                }
            }
            rows.push(row);
            rhs.push(b);
        }
    }
    let equations = rows.len();
    let outcome = if unknowns.is_empty() {
        SolveOutcome::Determined { multiplicities: vec![] }
    } else if rows.is_empty() {
        SolveOutcome::InsufficientEquations { rank: 0, unknowns: unknowns.len() }
    } else {
        match linalg::solve_system(&rows, &rhs) {
            Solution::Unique(x) => SolveOutcome::Determined {
                multiplicities: unknowns.iter().zip(&x).map(|(w, v)| (*w, crate::rat::rat_to_string(v))).collect(),
            },
            Solution::Underdetermined { rank, unknowns, .. } => SolveOutcome::InsufficientEquations { rank, unknowns },
            Solution::Inconsistent { rank } => SolveOutcome::Inconsistent { rank },
        }
    };
    Ok(MultiplicitySolution { highest: *top, unknowns, equations, outcome })
}

/// Multiplicities of the dominant weights strictly below the highest one.
pub trait MultiplicityMethod: Send + Sync {
    fn multiplicities(&self, top: &DominantE8) -> Result<MultiplicitySolution>;
}

pub struct FreudenthalMethod;

impl MultiplicityMethod for FreudenthalMethod {
    fn multiplicities(&self, top: &DominantE8) -> Result<MultiplicitySolution> {
        let dec = freudenthal(top);
        let unknowns: Vec<DominantE8> = dominant_weights_below(top).into_iter().filter(|w| w != top).collect();
        let multiplicities = unknowns
            .iter()
            .map(|w| (*w, dec.multiplicity(w).unwrap_or(0).to_string()))
            .collect();
        Ok(MultiplicitySolution { highest: *top, unknowns, equations: 0, outcome: SolveOutcome::Determined { multiplicities } })
    }
}

/// The eigenvalue route with a fixed calibration.
pub struct CharacterMethod {
    pub basis: Box<dyn EigenvalueBasis>,
    pub calibration: Calibration,
}

impl CharacterMethod {
    pub fn new(basis_name: &str, probe: &[DominantE8]) -> Result<Self> {
        let Some(basis) = make_basis(basis_name) else {
            // Produces the error listing the available names.
            eigenvalue_basis_registry().get(basis_name)?;
            return Err(Error::InvalidArgument(basis_name.to_string()));
        };
        let calibration = calibrate(basis_name, basis.as_ref(), &default_calibration_reps(), &SOLVER_DEGREES, probe)?;
        Ok(CharacterMethod { basis, calibration })
    }
}

impl MultiplicityMethod for CharacterMethod {
    fn multiplicities(&self, top: &DominantE8) -> Result<MultiplicitySolution> {
        solve_multiplicities(top, self.basis.as_ref(), &self.calibration)
    }
}

/// `"freudenthal"` and `"chars"` (the eigenvalue route over the K family).
pub fn multiplicity_registry(probe: &[DominantE8]) -> Result<Registry<dyn MultiplicityMethod>> {
    Ok(Registry::new("multiplicity method")
        .with("freudenthal", Box::new(FreudenthalMethod) as Box<dyn MultiplicityMethod>)
        .with("chars", Box::new(CharacterMethod::new("k-family", probe)?) as Box<dyn MultiplicityMethod>))
}

/// Whether a solution agrees with Freudenthal on every determined entry.
pub fn agrees_with_freudenthal(sol: &MultiplicitySolution) -> Option<bool> {
    let found = sol.integer_multiplicities();
    match &sol.outcome {
        SolveOutcome::Determined { .. } => {
            let Some(found) = found else { return Some(false) };
            let dec = freudenthal(&sol.highest);
            Some(found.iter().all(|(w, m)| dec.multiplicity(w).unwrap_or(0) == *m))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_weights, rng};

    fn l(i: usize) -> DominantE8 {
        DominantE8::fundamental(i).unwrap()
    }

    fn method() -> CharacterMethod {
        CharacterMethod::new("k-family", &random_weights(&mut rng(0), 25, 3)).unwrap()
    }

    #[test]
    fn adjoint_zero_weight_multiplicity() {
        let sol = method().multiplicities(&l(1)).unwrap();
        assert_eq!(sol.integer_multiplicities().unwrap(), vec![(DominantE8::ZERO, 8)]);
    }

    #[test]
    fn held_out_representation_matches_freudenthal() {
        let cm = method();
        assert!(!cm.calibration.reps.contains(&l(8).to_string()));
        let sol = cm.multiplicities(&l(8)).unwrap();
        assert_eq!(agrees_with_freudenthal(&sol), Some(true));
    }

    #[test]
    fn mu2_power_class_is_not_calibrated_by_k_family() {
        let cm = method();
        let d8 = cm.calibration.degrees.iter().find(|d| d.degree == 8).unwrap();
        assert_eq!(d8.alphas[6].status, CalibrationStatus::Inconsistent);
    }

    #[test]
    fn underdetermined_is_reported() {
        let sol = method().multiplicities(&l(1).plus(&l(7))).unwrap();
        assert!(matches!(sol.outcome, SolveOutcome::InsufficientEquations { .. }));
        assert_eq!(agrees_with_freudenthal(&sol), None);
    }

    #[test]
    fn registries_list_names() {
        assert_eq!(eigenvalue_basis_registry().names(), ["k-family", "root-invariants"]);
        assert!(CharacterMethod::new("bogus", &[]).is_err());
        let f = FreudenthalMethod.multiplicities(&l(7)).unwrap();
        assert_eq!(agrees_with_freudenthal(&f), Some(true));
    }
}
