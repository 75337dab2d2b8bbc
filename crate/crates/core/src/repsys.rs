//! Irreducible representations: dominant weights, Freudenthal
//! multiplicities, dimensions and representation characters.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{self, label_inner, weight_form, DominantE8, RANK};
use crate::orbitchar::{char_e8_orbit, e8_orbit_char_expr};
use crate::rat::Rat;
use crate::symfunc::{EvalPoint, SymExpr};
use crate::weyl::{e8_dominantize_labels, e8_orbit_size, enumerate_e8_orbit};

pub type Labels = [i64; RANK];

/// A positive root with its simple-root coefficients and Dynkin labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    pub coefficients: [i64; RANK],
    pub labels: Labels,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.coefficients.iter().sum()
    }
}

/// The 120 positive roots, read off the adjoint orbit.
pub fn positive_roots() -> &'static [PositiveRoot] {
    static ROOTS: OnceLock<Vec<PositiveRoot>> = OnceLock::new();
    ROOTS.get_or_init(|| {
        let fund: Vec<[i64; 9]> = (1..=RANK)
            .map(|i| lattice::e8_weight_to_ints(&std::array::from_fn(|j| i64::from(j + 1 == i))))
            .collect();
        let orbit = enumerate_e8_orbit(&DominantE8::fundamental(1).unwrap(), 240).unwrap();
        let mut out: Vec<PositiveRoot> = orbit
            .iter()
            .map(|a| PositiveRoot {
                coefficients: std::array::from_fn(|j| lattice::mu_inner_int(a, &fund[j])),
                labels: lattice::labels_of(a),
            })
            .filter(|r| r.coefficients.iter().all(|&c| c >= 0))
            .collect();
        out.sort_by_key(|r| (r.height(), std::cmp::Reverse(r.coefficients)));
        out
    })
}

fn to_labels(l: &DominantE8) -> Labels {
    l.r.map(i64::from)
}

fn to_dominant(l: &Labels) -> DominantE8 {
    DominantE8::new(l.map(|x| u32::try_from(x).expect("dominant labels are nonnegative")))
}

/// Simple-root coefficients of a weight given by labels (E8 is unimodular).
pub fn root_coefficients(l: &Labels) -> [i64; RANK] {
    let g = weight_form();
    std::array::from_fn(|i| (0..RANK).map(|k| l[k] * g[k][i]).sum())
}

/// Dominant weights `λ⁺ ≤ Λ⁺`, highest first (by depth, then labels).
pub fn dominant_weights_below(top: &DominantE8) -> Vec<DominantE8> {
    let top_l = to_labels(top);
    let mut found: BTreeMap<Labels, ()> = BTreeMap::from([(top_l, ())]);
    let mut queue = vec![top_l];
    while let Some(w) = queue.pop() {
        for a in positive_roots() {
            let next: Labels = std::array::from_fn(|i| w[i] - a.labels[i]);
            if next.iter().all(|&x| x >= 0) && !found.contains_key(&next) {
                found.insert(next, ());
                queue.push(next);
            }
        }
    }
    let mut out: Vec<Labels> = found.into_keys().collect();
    let depth = |l: &Labels| -> i64 {
        let d: Labels = std::array::from_fn(|i| top_l[i] - l[i]);
        root_coefficients(&d).iter().sum()
    };
    out.sort_by_key(|l| (depth(l), std::cmp::Reverse(*l)));
    out.iter().map(to_dominant).collect()
}

/// `R(Λ⁺)` as a sum of E8 orbits with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepDecomposition {
    pub highest: DominantE8,
    pub orbits: Vec<(DominantE8, u64)>,
}

impl RepDecomposition {
    pub fn multiplicity(&self, l: &DominantE8) -> Option<u64> {
        self.orbits.iter().find(|(w, _)| w == l).map(|(_, m)| *m)
    }

    pub fn dim_by_orbits(&self) -> BigInt {
        self.orbits.iter().map(|(l, m)| BigInt::from(e8_orbit_size(l)) * BigInt::from(*m)).sum()
    }
}

/// Freudenthal's recursion over the dominant weights of `R(Λ⁺)`.
pub fn freudenthal(top: &DominantE8) -> Arc<RepDecomposition> {
    static CACHE: OnceLock<Mutex<HashMap<DominantE8, Arc<RepDecomposition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.lock().unwrap().get(top) {
        return d.clone();
    }
    let dec = Arc::new(freudenthal_uncached(top));
    cache.lock().unwrap().insert(*top, dec.clone());
    dec
}

fn freudenthal_uncached(top: &DominantE8) -> RepDecomposition {
    let weights = dominant_weights_below(top);
    let rho = [1i64; RANK];
    let top_l = to_labels(top);
    let shifted = |l: &Labels| -> Labels { std::array::from_fn(|i| l[i] + rho[i]) };
    let norm_top = {
        let t = shifted(&top_l);
        label_inner(&t, &t)
    };
    let mut mult: HashMap<Labels, u64> = HashMap::new();
    let mut out = Vec::with_capacity(weights.len());
    for w in &weights {
        let wl = to_labels(w);
        if wl == top_l {
            mult.insert(wl, 1);
            out.push((*w, 1));
            continue;
        }
        let mut sum: i64 = 0;
        for a in positive_roots() {
            let mut k = 1;
            loop {
                let v: Labels = std::array::from_fn(|i| wl[i] + k * a.labels[i]);
                let m = *mult.get(&e8_dominantize_labels(v)).unwrap_or(&0);
                if m == 0 {
                    // Weights of an irreducible module form unbroken strings.
                    break;
                }
                sum += m as i64 * label_inner(&v, &a.labels);
                k += 1;
            }
        }
        let s = shifted(&wl);
        let denom = norm_top - label_inner(&s, &s);
        let m = (2 * sum) / denom;
        debug_assert_eq!((2 * sum) % denom, 0);
        let m = m as u64;
        mult.insert(wl, m);
        out.push((*w, m));
    }
    RepDecomposition { highest: *top, orbits: out.into_iter().filter(|(_, m)| *m > 0).collect() }
}

pub fn freudenthal_mult(top: &DominantE8, l: &DominantE8) -> Result<u64> {
    freudenthal(top).multiplicity(l).ok_or_else(|| Error::NotBelow {
        weight: l.to_string(),
        highest: top.to_string(),
    })
}

/// Weyl dimension formula over the 120 positive roots.
pub fn dim_weyl(top: &DominantE8) -> BigInt {
    let (mut num, mut den) = (BigInt::one(), BigInt::one());
    for a in positive_roots() {
        let c = &a.coefficients;
        num *= (0..RANK).map(|j| c[j] * (i64::from(top.r[j]) + 1)).sum::<i64>();
        den *= c.iter().sum::<i64>();
    }
    num / den
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimReport {
    pub weight: DominantE8,
    pub by_orbits: String,
    pub by_weyl_formula: String,
    pub agree: bool,
}

pub fn dim_rep(top: &DominantE8) -> BigInt {
    freudenthal(top).dim_by_orbits()
}

pub fn dim_report(top: &DominantE8) -> DimReport {
    let a = dim_rep(top);
    let b = dim_weyl(top);
    DimReport { weight: *top, agree: a == b, by_orbits: a.to_string(), by_weyl_formula: b.to_string() }
}

/// `Σ m(λ⁺) ch_M(Π(λ⁺))` at `h`.
pub fn char_rep(m: u32, top: &DominantE8, h: &EvalPoint) -> Result<Rat> {
    let dec = freudenthal(top);
    let mut total = Rat::zero();
    for (l, mult) in &dec.orbits {
        total += char_e8_orbit(m, l, h)? * Rat::from(BigInt::from(*mult));
    }
    Ok(total)
}

/// `ch_M` of the representation as a power-sum polynomial in `h`.
pub fn char_rep_expr(m: u32, top: &DominantE8) -> Result<SymExpr> {
    let dec = freudenthal(top);
    let mut out = SymExpr::zero();
    for (l, mult) in &dec.orbits {
        out = out.add(&e8_orbit_char_expr(m, l)?.scale(&Rat::from(BigInt::from(*mult))));
    }
    Ok(out)
}

pub fn dim_as_u64(top: &DominantE8) -> Option<u64> {
    dim_rep(top).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn lam(i: usize) -> DominantE8 {
        DominantE8::fundamental(i).unwrap()
    }

    #[test]
    fn root_count_and_simple_roots() {
        let roots = positive_roots();
        assert_eq!(roots.len(), 120);
        for j in 0..RANK {
            let mut e = [0; RANK];
            e[j] = 1;
            assert!(roots.iter().any(|r| r.coefficients == e));
        }
        assert!(roots.iter().all(|r| r.height() >= 1));
        assert_eq!(roots.last().unwrap().height(), 29);
    }

    #[test]
    fn dominant_weights() {
        assert_eq!(dominant_weights_below(&lam(1)), vec![lam(1), DominantE8::ZERO]);
        assert_eq!(dominant_weights_below(&DominantE8::ZERO), vec![DominantE8::ZERO]);
        assert_eq!(dominant_weights_below(&lam(7)), vec![lam(7), lam(1), DominantE8::ZERO]);
    }

    #[test]
    fn adjoint_multiplicities() {
        assert_eq!(freudenthal_mult(&lam(1), &lam(1)).unwrap(), 1);
        assert_eq!(freudenthal_mult(&lam(1), &DominantE8::ZERO).unwrap(), 8);
        assert!(freudenthal_mult(&lam(1), &lam(7)).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_rep(&lam(1)), BigInt::from(248));
        assert_eq!(dim_rep(&DominantE8::ZERO), BigInt::from(1));
        assert_eq!(dim_rep(&lam(7)), BigInt::from(3875));
        assert_eq!(dim_weyl(&lam(7)), BigInt::from(3875));
        assert_eq!(dim_weyl(&lam(2)), BigInt::from(30380));
        assert_eq!(dim_weyl(&lam(1).plus(&lam(1))), BigInt::from(27000));
        assert_eq!(dim_weyl(&lam(8)), BigInt::from(147250));
        assert_eq!(dim_weyl(&lam(1).plus(&lam(7))), BigInt::from(779247));
        assert_eq!(dim_weyl(&lam(7).plus(&lam(7))), BigInt::from(4881384));
    }

    #[test]
    fn degree_one_character_vanishes() {
        let h = EvalPoint::from_ints([3, -1, 2, 0, 0, 1, 0, 0]);
        assert!(char_rep(1, &lam(7), &h).unwrap().is_zero());
    }

    #[test]
    fn adjoint_degree_two() {
        let h = EvalPoint::from_ints([3, -1, 2, 0, 0, 1, 0, 0]);
        assert_eq!(char_rep(2, &lam(1), &h).unwrap(), int(60) * &h.power_sums(2)[2]);
    }
}
