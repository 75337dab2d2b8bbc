//! The invariant polynomials `K_α(M)` in the Θ basis functions, with their
//! auxiliaries `W`, `Q₁₂`, `Q₁₄`.
//!
//! Two evaluation routes exist: `eval` walks the printed nesting with exact
//! rationals, and `expand` multiplies everything out into a polynomial in
//! `Θ(2..9)` (a `SymExpr` whose index `k` stands for `Θ(k)`).

mod data;

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::casimir::thetas;
use crate::error::{Error, Result};
use crate::lattice::DominantE8;
use crate::rat::{int, parse_rat, Rat};
use crate::symfunc::SymExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[allow(non_camel_case_types)]
pub enum Atom {
    Theta(u32),
    W1_8,
    W2_8,
    W1_12,
    W2_12,
    W3_12,
    W4_12,
    W1_14,
    Q12,
    Q14,
    K12(usize),
    K14(usize),
    /// The undefined symbol in the first degree-12 function; always
    /// supplied from configuration.
    K12Zero,
}

pub struct Block {
    pub prefactor: &'static str,
    pub terms: &'static [(&'static str, &'static [Atom])],
}

pub type Def = &'static [Block];

/// `Θ(2)` at the origin: the squared length of the Weyl vector.
pub const WEYL_VECTOR_NORM: i64 = 620;

pub const AUX_NAMES: [&str; 9] = ["W1(8)", "W2(8)", "W1(12)", "W2(12)", "W3(12)", "W4(12)", "W1(14)", "Q12", "Q14"];

const K12: [Def; 8] =
    [data::K12_1, data::K12_2, data::K12_3, data::K12_4, data::K12_5, data::K12_6, data::K12_7, data::K12_8];

const K14: [Def; 19] = [
    data::K14_1,
    data::K14_2,
    data::K14_3,
    data::K14_4,
    data::K14_5,
    data::K14_6,
    data::K14_7,
    data::K14_8,
    data::K14_9,
    data::K14_10,
    data::K14_11,
    data::K14_12,
    data::K14_13,
    data::K14_14,
    data::K14_15,
    data::K14_16,
    data::K14_17,
    data::K14_18,
    data::K14_19,
];

pub fn family_size(m: u32) -> Result<usize> {
    match m {
        8 => Ok(2),
        12 => Ok(8),
        14 => Ok(19),
        _ => Err(Error::UnsupportedDegree(m)),
    }
}

fn definition(m: u32, alpha: usize) -> Result<Def> {
    let n = family_size(m)?;
    if alpha == 0 || alpha > n {
        return Err(Error::UnsupportedIndex { degree: m, index: alpha });
    }
    Ok(match m {
        8 => [data::K8_1, data::K8_2][alpha - 1],
        12 => K12[alpha - 1],
        _ => K14[alpha - 1],
    })
}

fn aux_definition(a: Atom) -> Option<Def> {
    Some(match a {
        Atom::W1_8 => data::W1_8,
        Atom::W2_8 => data::W2_8,
        Atom::W1_12 => data::W1_12,
        Atom::W2_12 => data::W2_12,
        Atom::W3_12 => data::W3_12,
        Atom::W4_12 => data::W4_12,
        Atom::W1_14 => data::W1_14,
        _ => return None,
    })
}

fn aux_atom(name: &str) -> Result<Atom> {
    let atoms =
        [Atom::W1_8, Atom::W2_8, Atom::W1_12, Atom::W2_12, Atom::W3_12, Atom::W4_12, Atom::W1_14, Atom::Q12, Atom::Q14];
    AUX_NAMES
        .iter()
        .position(|n| *n == name)
        .map(|i| atoms[i])
        .ok_or_else(|| Error::InvalidArgument(format!("unknown auxiliary {name:?}; expected one of {AUX_NAMES:?}")))
}

fn coef(s: &str) -> Rat {
    parse_rat(s).unwrap_or_else(|| panic!("bad coefficient literal {s}"))
}

/// Arithmetic needed to evaluate a definition: exact numbers or expanded
/// polynomials.
trait Value: Clone {
    fn constant(c: Rat) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn scaled(&self, c: &Rat) -> Self;
}

impl Value for Rat {
    fn constant(c: Rat) -> Self {
        c
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn scaled(&self, c: &Rat) -> Self {
        self * c
    }
}

impl Value for SymExpr {
    fn constant(c: Rat) -> Self {
        SymExpr::monomial(&[], c)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn scaled(&self, c: &Rat) -> Self {
        self.scale(c)
    }
}

struct Evaluator<V, F> {
    theta: F,
    k12_zero: Rat,
    memo: HashMap<Atom, V>,
}

impl<V: Value, F: Fn(u32) -> V> Evaluator<V, F> {
    fn new(theta: F, k12_zero: Rat) -> Self {
        Evaluator { theta, k12_zero, memo: HashMap::new() }
    }

    fn atom(&mut self, a: Atom) -> V {
        if let Some(v) = self.memo.get(&a) {
            return v.clone();
        }
        let v = match a {
            Atom::Theta(k) => (self.theta)(k),
            Atom::K12Zero => V::constant(self.k12_zero.clone()),
            Atom::Q12 | Atom::Q14 => {
                let inner = if a == Atom::Q12 { data::Q12_INNER } else { data::Q14_INNER };
                let shifted = (self.theta)(2).plus(&V::constant(int(-WEYL_VECTOR_NORM)));
                shifted.times(&self.def(inner))
            }
            Atom::K12(i) => self.def(K12[i - 1]),
            Atom::K14(i) => self.def(K14[i - 1]),
            w => self.def(aux_definition(w).expect("auxiliary atom")),
        };
        self.memo.insert(a, v.clone());
        v
    }

    fn def(&mut self, d: Def) -> V {
        let mut total = V::constant(Rat::zero());
        for block in d {
            let mut sum = V::constant(Rat::zero());
            for (c, atoms) in block.terms {
                let mut prod = V::constant(coef(c));
                for &a in atoms.iter() {
                    prod = prod.times(&self.atom(a));
                }
                sum = sum.plus(&prod);
            }
            total = total.plus(&sum.scaled(&coef(block.prefactor)));
        }
        total
    }
}

fn numeric(r: &DominantE8, k12_zero: &Rat) -> Evaluator<Rat, impl Fn(u32) -> Rat> {
    let ps = thetas(9, r);
    Evaluator::new(move |k| ps[k as usize].clone(), k12_zero.clone())
}

fn symbolic(k12_zero: &Rat) -> Evaluator<SymExpr, impl Fn(u32) -> SymExpr> {
    Evaluator::new(|k| SymExpr::monomial(&[k], Rat::one()), k12_zero.clone())
}

/// The constant standing in for the undefined `K₁₂(0)` symbol, together
/// with where it came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct K12Zero {
    #[serde(with = "crate::rat::serde_str")]
    pub value: Rat,
    pub source: String,
}

impl Default for K12Zero {
    /// Chosen so that `K₁(12)` vanishes at `λ₁`, as `K₁(8)` does. Any
    /// value gives the same affine span, since the symbol enters as an
    /// additive constant.
    fn default() -> Self {
        let r = DominantE8::fundamental(1).expect("λ₁");
        let at_zero = eval_with(12, 1, &r, &Rat::zero()).expect("K1(12)");
        let slope = eval_with(12, 1, &r, &Rat::one()).expect("K1(12)") - &at_zero;
        K12Zero { value: -at_zero / slope, source: "default: K1(12) vanishes at the adjoint".into() }
    }
}

fn eval_with(m: u32, alpha: usize, r: &DominantE8, k12_zero: &Rat) -> Result<Rat> {
    let d = definition(m, alpha)?;
    Ok(numeric(r, k12_zero).def(d))
}

/// The family of degree `m`: `K_1(m) … K_n(m)`.
#[derive(Clone, Debug)]
pub struct KFamily {
    pub degree: u32,
    pub k12_zero: K12Zero,
}

impl KFamily {
    pub fn new(degree: u32) -> Result<Self> {
        family_size(degree)?;
        Ok(KFamily { degree, k12_zero: K12Zero::default() })
    }

    pub fn with_k12_zero(degree: u32, k12_zero: K12Zero) -> Result<Self> {
        family_size(degree)?;
        Ok(KFamily { degree, k12_zero })
    }

    pub fn size(&self) -> usize {
        family_size(self.degree).expect("validated degree")
    }

    pub fn name(&self, alpha: usize) -> String {
        format!("K{alpha}({})", self.degree)
    }

    pub fn eval(&self, alpha: usize, r: &DominantE8) -> Result<Rat> {
        eval_with(self.degree, alpha, r, &self.k12_zero.value)
    }

    /// All members at one weight, sharing the intermediate values.
    pub fn eval_all(&self, r: &DominantE8) -> Vec<Rat> {
        let mut ev = numeric(r, &self.k12_zero.value);
        (1..=self.size()).map(|a| ev.def(definition(self.degree, a).expect("in range"))).collect()
    }

    /// `K_α(m)` multiplied out into a polynomial in the `Θ(k)`.
    pub fn expand(&self, alpha: usize) -> Result<SymExpr> {
        let d = definition(self.degree, alpha)?;
        Ok(symbolic(&self.k12_zero.value).def(d))
    }
}

pub fn k8(alpha: usize, r: &DominantE8) -> Result<Rat> {
    eval_with(8, alpha, r, &Rat::zero())
}

pub fn k12(alpha: usize, r: &DominantE8, k12_zero: &Rat) -> Result<Rat> {
    eval_with(12, alpha, r, k12_zero)
}

pub fn k14(alpha: usize, r: &DominantE8) -> Result<Rat> {
    eval_with(14, alpha, r, &Rat::zero())
}

/// Auxiliary by name: `W1(8)`, `W2(8)`, `W1(12)`..`W4(12)`, `W1(14)`,
/// `Q12`, `Q14`.
pub fn w_aux(name: &str, r: &DominantE8) -> Result<Rat> {
    let a = aux_atom(name)?;
    Ok(numeric(r, &Rat::zero()).atom(a))
}

pub fn w_aux_expand(name: &str) -> Result<SymExpr> {
    let a = aux_atom(name)?;
    Ok(symbolic(&Rat::zero()).atom(a))
}

pub fn q12(r: &DominantE8) -> Rat {
    numeric(r, &Rat::zero()).atom(Atom::Q12)
}

pub fn q14(r: &DominantE8) -> Rat {
    numeric(r, &Rat::zero()).atom(Atom::Q14)
}

/// For `α ≥ 4` the degree-14 functions are printed as combinations of
/// `Q₁₄, K₁(14), K₂(14), K₃(14)`; returns those four coefficients.
pub fn k14_combination(alpha: usize) -> Result<[Rat; 4]> {
    if !(4..=19).contains(&alpha) {
        return Err(Error::UnsupportedIndex { degree: 14, index: alpha });
    }
    let mut out = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    for block in K14[alpha - 1] {
        let pre = coef(block.prefactor);
        for (c, atoms) in block.terms {
            let slot = match atoms {
                [Atom::Q14] => 0,
                [Atom::K14(i)] if *i <= 3 => *i,
                _ => return Err(Error::InvalidArgument(format!("K{alpha}(14) is not a plain combination"))),
            };
            out[slot] += coef(c) * &pre;
        }
    }
    Ok(out)
}

/// `K₂(8) − W₁(8)` at each weight; every entry should be `385526887200`.
pub fn k8_offsets(weights: &[DominantE8]) -> Vec<Rat> {
    weights.iter().map(|w| k8(2, w).expect("in range") - w_aux("W1(8)", w).expect("known")).collect()
}

pub const K8_OFFSET: i64 = 385526887200;

/// For each `α ≥ 4`: whether the fully expanded `K_α(14)`, evaluated at
/// the Θ values of every weight, equals the stated combination of
/// `Q₁₄, K₁(14), K₂(14), K₃(14)` evaluated numerically.
pub fn k14_combination_checks(weights: &[DominantE8]) -> Result<Vec<(usize, bool)>> {
    let fam = KFamily::new(14)?;
    let mut out = Vec::new();
    for alpha in 4..=19 {
        let expanded = fam.expand(alpha)?;
        let c = k14_combination(alpha)?;
        let ok = weights.iter().all(|w| {
            let stated = &c[0] * q14(w)
                + (1..=3).map(|i| &c[i] * fam.eval(i, w).expect("in range")).sum::<Rat>();
            expanded.eval(&thetas(9, w)) == stated
        });
        out.push((alpha, ok));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::theta_vector;
    use crate::rat::rat;

    fn l(i: usize) -> DominantE8 {
        DominantE8::fundamental(i).unwrap()
    }

    #[test]
    fn q_factors_vanish_at_origin() {
        assert!(q12(&DominantE8::ZERO).is_zero());
        assert!(q14(&DominantE8::ZERO).is_zero());
        assert!(!q12(&l(1)).is_zero());
    }

    #[test]
    fn k8_first_is_theta8_line() {
        let t8: Rat = theta_vector(&l(1)).iter().map(|t| crate::rat::pow(t, 8)).sum();
        assert_eq!(k8(1, &l(1)).unwrap(), t8 * int(729) - int(71757069294212));
    }

    #[test]
    fn k8_second_minus_w1_is_constant() {
        for w in [DominantE8::ZERO, l(1), l(4), l(8).plus(&l(2))] {
            assert_eq!(k8(2, &w).unwrap() - w_aux("W1(8)", &w).unwrap(), int(385526887200));
        }
    }

    #[test]
    fn expansion_matches_nested_evaluation() {
        let fam = KFamily::new(12).unwrap();
        let w = l(3).plus(&l(6));
        let ps = thetas(9, &w);
        for a in 1..=8 {
            assert_eq!(fam.expand(a).unwrap().eval(&ps), fam.eval(a, &w).unwrap(), "K{a}(12)");
        }
    }

    #[test]
    fn default_k12_zero_kills_k1_at_adjoint() {
        let fam = KFamily::new(12).unwrap();
        assert!(fam.eval(1, &l(1)).unwrap().is_zero());
        assert_ne!(fam.k12_zero.value, rat(0, 1));
    }

    #[test]
    fn combination_coefficients_read_back() {
        let c = k14_combination(5).unwrap();
        assert_eq!(c[0], crate::rat::parse_rat("1555746820875/12804209320064").unwrap());
        assert!(k14_combination(3).is_err());
    }

    #[test]
    fn index_errors() {
        assert!(matches!(k8(3, &l(1)), Err(Error::UnsupportedIndex { .. })));
        assert!(matches!(KFamily::new(10), Err(Error::UnsupportedDegree(10))));
        assert!(w_aux("W9(8)", &l(1)).is_err());
    }
}
