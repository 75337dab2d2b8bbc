//! Weights of E8 written in the nine A8 fundamental weights `μ_I`.
//!
//! The `μ_I` satisfy `Σ μ_I = 0` and pair as `δ_IJ − 1/9`, so a weight is a
//! 9-vector of coefficients defined up to adding a multiple of `(1, …, 1)`.
//! [`MuVector`] fixes that freedom by making the ninth coefficient zero,
//! which keeps every E8 lattice vector integral.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rat::{int, rat, to_i64, Rat};

pub const RANK: usize = 8;
pub const DIM: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuVector {
    c: [Rat; DIM],
}

impl MuVector {
    pub fn new(c: [Rat; DIM]) -> Self {
        let shift = c[DIM - 1].clone();
        let c = c.map(|x| x - &shift);
        MuVector { c }
    }

    pub fn from_ints(c: [i64; DIM]) -> Self {
        Self::new(c.map(int))
    }

    pub fn zero() -> Self {
        MuVector { c: std::array::from_fn(|_| Rat::zero()) }
    }

    pub fn coords(&self) -> &[Rat; DIM] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &MuVector) -> MuVector {
        MuVector::new(std::array::from_fn(|i| &self.c[i] + &o.c[i]))
    }

    pub fn sub(&self, o: &MuVector) -> MuVector {
        MuVector::new(std::array::from_fn(|i| &self.c[i] - &o.c[i]))
    }

    pub fn scale(&self, t: &Rat) -> MuVector {
        MuVector::new(std::array::from_fn(|i| &self.c[i] * t))
    }

    pub fn neg(&self) -> MuVector {
        self.scale(&-Rat::one())
    }

    /// Representative with coordinates summing to zero.
    pub fn trace_zero(&self) -> [Rat; DIM] {
        let mean: Rat = self.c.iter().sum::<Rat>() / int(DIM as i64);
        std::array::from_fn(|i| &self.c[i] - &mean)
    }

    pub fn to_ints(&self) -> Option<[i64; DIM]> {
        let mut out = [0i64; DIM];
        for (o, c) in out.iter_mut().zip(&self.c) {
            *o = to_i64(c)?;
        }
        Some(out)
    }
}

impl fmt::Display for MuVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.c.iter().map(crate::rat::rat_to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Dynkin labels `r_1..r_8` of an E8 dominant weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantE8 {
    pub r: [u32; RANK],
}

impl DominantE8 {
    pub const ZERO: DominantE8 = DominantE8 { r: [0; RANK] };

    pub fn new(r: [u32; RANK]) -> Self {
        DominantE8 { r }
    }

    /// The fundamental weight `λ_i`, `i` in `1..=8`.
    pub fn fundamental(i: usize) -> Result<Self> {
        if !(1..=RANK).contains(&i) {
            return Err(Error::IndexOutOfRange { index: i, lo: 1, hi: RANK });
        }
        let mut r = [0; RANK];
        r[i - 1] = 1;
        Ok(DominantE8 { r })
    }

    pub fn plus(&self, o: &DominantE8) -> DominantE8 {
        DominantE8 { r: std::array::from_fn(|i| self.r[i] + o.r[i]) }
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(|&x| x == 0)
    }

    pub fn level(&self) -> u32 {
        self.r.iter().sum()
    }
}

impl fmt::Display for DominantE8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.r.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for DominantE8 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let vals: Vec<&str> = s.split(',').map(str::trim).collect();
        if vals.len() != RANK {
            return Err(Error::InvalidWeight(format!(
                "expected {RANK} comma-separated labels, got {}",
                vals.len()
            )));
        }
        let mut r = [0u32; RANK];
        for (slot, v) in r.iter_mut().zip(vals) {
            *slot = v
                .parse()
                .map_err(|_| Error::InvalidWeight(format!("bad label {v:?}")))?;
        }
        Ok(DominantE8 { r })
    }
}

/// An A8 dominant weight `Σ q_i μ_i` with `q_1 ≥ … ≥ q_8 ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantA8 {
    q: [Rat; RANK],
}

impl DominantA8 {
    pub fn new(q: [Rat; RANK]) -> Result<Self> {
        let ordered = q.windows(2).all(|w| w[0] >= w[1]);
        if !ordered || q[RANK - 1].is_negative() {
            return Err(Error::InvalidWeight(
                "A8 dominant weight needs q1 >= ... >= q8 >= 0".into(),
            ));
        }
        Ok(DominantA8 { q })
    }

    pub fn from_ints(q: [i64; RANK]) -> Result<Self> {
        Self::new(q.map(int))
    }

    pub fn q(&self) -> &[Rat; RANK] {
        &self.q
    }

    pub fn to_mu(&self) -> MuVector {
        MuVector::new(std::array::from_fn(|i| {
            if i < RANK {
                self.q[i].clone()
            } else {
                Rat::zero()
            }
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.q.iter().all(Zero::is_zero)
    }

    pub fn to_ints(&self) -> Option<[i64; RANK]> {
        let mut out = [0i64; RANK];
        for (o, c) in out.iter_mut().zip(&self.q) {
            *o = to_i64(c)?;
        }
        Some(out)
    }
}

impl fmt::Display for DominantA8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.q.iter().map(crate::rat::rat_to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `κ(u, v) = Σ u_I v_I − (Σ u_I)(Σ v_I)/9`.
pub fn mu_inner(u: &MuVector, v: &MuVector) -> Rat {
    let dot: Rat = u.c.iter().zip(&v.c).map(|(a, b)| a * b).sum();
    let su: Rat = u.c.iter().sum();
    let sv: Rat = v.c.iter().sum();
    dot - su * sv / int(DIM as i64)
}

/// Integer version of [`mu_inner`] for lattice vectors; the result is exact
/// whenever both arguments lie in the E8 lattice.
pub fn mu_inner_int(u: &[i64; DIM], v: &[i64; DIM]) -> i64 {
    let dot: i64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    let su: i64 = u.iter().sum();
    let sv: i64 = v.iter().sum();
    let num = 9 * dot - su * sv;
    debug_assert_eq!(num % 9, 0, "inner product of non-lattice vectors");
    num / 9
}

/// `σ_i = μ_1 + … + μ_i`.
pub fn sigma_to_mu(i: usize) -> Result<MuVector> {
    if !(1..=RANK).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, lo: 1, hi: RANK });
    }
    Ok(MuVector::from_ints(std::array::from_fn(|j| i64::from(j < i))))
}

/// Multiples of `σ_8` in `λ_i = σ_i + k_i σ_8` (`λ_8 = 3 σ_8`).
const SIGMA8_SHIFT: [i64; RANK] = [1, 2, 3, 4, 5, 3, 1, 2];

/// Fundamental weight `λ_i` of E8 (1-based).
pub fn fundamental_weight(i: usize) -> Result<MuVector> {
    let s = sigma_to_mu(i)?;
    let s8 = sigma_to_mu(RANK)?;
    Ok(s.add(&s8.scale(&int(SIGMA8_SHIFT[i - 1]))))
}

pub fn e8_weight_to_mu(r: &DominantE8) -> MuVector {
    let c: [i64; DIM] = e8_weight_to_ints(&r.r.map(i64::from));
    MuVector::from_ints(c)
}

/// `Σ r_i λ_i` for arbitrary integer labels, in canonical integer coordinates.
pub fn e8_weight_to_ints(r: &[i64; RANK]) -> [i64; DIM] {
    let mut c = [0i64; DIM];
    for (i, &ri) in r.iter().enumerate() {
        for cj in c.iter_mut().take(i + 1) {
            *cj += ri;
        }
        for cj in c.iter_mut().take(RANK) {
            *cj += ri * SIGMA8_SHIFT[i];
        }
    }
    c
}

/// Solves `κ(λ_i, β_j) = δ_ij` for each `j` (with a trace-zero gauge) and
/// checks that every solution has length 2.
pub fn derive_e8_simple_roots() -> Result<[MuVector; RANK]> {
    let lambdas: Vec<MuVector> =
        (1..=RANK).map(fundamental_weight).collect::<Result<_>>()?;
    // Row i: κ(λ_i, β) = Σ_I (λ_iI − mean(λ_i)) β_I; last row: Σ β_I = 0.
    let mut a: Vec<Vec<Rat>> = lambdas.iter().map(|l| l.trace_zero().to_vec()).collect();
    a.push(vec![Rat::one(); DIM]);
    let mut roots = Vec::with_capacity(RANK);
    for j in 0..RANK {
        let mut b = vec![Rat::zero(); DIM];
        b[j] = Rat::one();
        let x = linalg::solve(&a, &b)?;
        let beta = MuVector::new(x.try_into().expect("nine coordinates"));
        let len = mu_inner(&beta, &beta);
        if len != int(2) {
            return Err(Error::NotARoot(crate::rat::rat_to_string(&len)));
        }
        roots.push(beta);
    }
    Ok(roots.try_into().expect("eight roots"))
}

pub fn simple_roots() -> &'static [MuVector; RANK] {
    static ROOTS: OnceLock<[MuVector; RANK]> = OnceLock::new();
    ROOTS.get_or_init(|| derive_e8_simple_roots().expect("E8 simple roots are derivable"))
}

pub fn simple_roots_int() -> &'static [[i64; DIM]; RANK] {
    static ROOTS: OnceLock<[[i64; DIM]; RANK]> = OnceLock::new();
    ROOTS.get_or_init(|| simple_roots().clone().map(|b| b.to_ints().expect("integral root")))
}

/// Gram matrix `κ(β_i, β_j)`.
pub fn cartan_matrix() -> &'static [[i64; RANK]; RANK] {
    static C: OnceLock<[[i64; RANK]; RANK]> = OnceLock::new();
    C.get_or_init(|| {
        let b = simple_roots_int();
        std::array::from_fn(|i| std::array::from_fn(|j| mu_inner_int(&b[i], &b[j])))
    })
}

/// Gram matrix `κ(λ_i, λ_j)` (the inverse Cartan matrix).
pub fn weight_form() -> &'static [[i64; RANK]; RANK] {
    static G: OnceLock<[[i64; RANK]; RANK]> = OnceLock::new();
    G.get_or_init(|| {
        let l: Vec<MuVector> = (1..=RANK).map(|i| fundamental_weight(i).unwrap()).collect();
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                to_i64(&mu_inner(&l[i], &l[j])).expect("E8 is unimodular")
            })
        })
    })
}

/// Dynkin labels `κ(w, β_j)` of a lattice vector.
pub fn labels_of(w: &[i64; DIM]) -> [i64; RANK] {
    let b = simple_roots_int();
    std::array::from_fn(|j| mu_inner_int(w, &b[j]))
}

/// `κ(u, v)` for two weights given by Dynkin labels.
pub fn label_inner(u: &[i64; RANK], v: &[i64; RANK]) -> i64 {
    let g = weight_form();
    let mut s = 0;
    for i in 0..RANK {
        if u[i] == 0 {
            continue;
        }
        for j in 0..RANK {
            s += u[i] * g[i][j] * v[j];
        }
    }
    s
}

/// `ρ = Σ λ_i`.
pub fn weyl_vector() -> MuVector {
    e8_weight_to_mu(&DominantE8::new([1; RANK]))
}

/// Affine coordinates of `Λ + ρ`: constant parts and label coefficients, all
/// scaled by 3.
const THETA_TABLE: [[i64; RANK + 1]; DIM] = [
    [19, 3, 3, 3, 3, 3, 2, 1, 1],
    [16, 0, 3, 3, 3, 3, 2, 1, 1],
    [13, 0, 0, 3, 3, 3, 2, 1, 1],
    [10, 0, 0, 0, 3, 3, 2, 1, 1],
    [7, 0, 0, 0, 0, 3, 2, 1, 1],
    [4, 0, 0, 0, 0, 0, 2, 1, 1],
    [1, 0, 0, 0, 0, 0, -1, 1, 1],
    [-2, 0, 0, 0, 0, 0, -1, -2, 1],
    [-68, -3, -6, -9, -12, -15, -10, -5, -8],
];

/// The nine coordinates `θ_I(Λ⁺)`; they always sum to zero.
pub fn theta_vector(r: &DominantE8) -> [Rat; DIM] {
    std::array::from_fn(|i| {
        let row = &THETA_TABLE[i];
        let mut num = row[0];
        for j in 0..RANK {
            num += row[j + 1] * i64::from(r.r[j]);
        }
        rat(num, 3)
    })
}

/// Simply-laced Dynkin type of a connected diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        fn fact(n: u64) -> u64 {
            (1..=n).product()
        }
        match *self {
            DynkinType::A(n) => fact(n as u64 + 1),
            DynkinType::D(n) => (1u64 << (n - 1)) * fact(n as u64),
            DynkinType::E(6) => 51_840,
            DynkinType::E(7) => 2_903_040,
            DynkinType::E(8) => 696_729_600,
            DynkinType::E(n) => panic!("no E{n}"),
        }
    }
}

/// Splits the sub-diagram on `nodes` into connected components and types them.
pub fn classify_subdiagram(nodes: &[usize]) -> Vec<DynkinType> {
    let c = cartan_matrix();
    let mut seen = [false; RANK];
    let inside: Vec<bool> = (0..RANK).map(|i| nodes.contains(&i)).collect();
    let mut out = Vec::new();
    for &start in nodes {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..RANK {
                if inside[w] && !seen[w] && c[v][w] != 0 && v != w {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        out.push(type_of_tree(&comp, c));
    }
    out
}

fn type_of_tree(comp: &[usize], c: &[[i64; RANK]; RANK]) -> DynkinType {
    let n = comp.len();
    let degree = |v: usize| comp.iter().filter(|&&w| w != v && c[v][w] != 0).count();
    let Some(&branch) = comp.iter().find(|&&v| degree(v) == 3) else {
        return DynkinType::A(n);
    };
    // Arm lengths from the branch node.
    let mut arms: Vec<usize> = comp
        .iter()
        .filter(|&&w| w != branch && c[branch][w] != 0)
        .map(|&first| {
            let (mut prev, mut cur, mut len) = (branch, first, 1);
            loop {
                let next = comp
                    .iter()
                    .copied()
                    .find(|&w| w != prev && w != cur && c[cur][w] != 0);
                match next {
                    Some(nx) => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => DynkinType::D(n),
        [1, 2, 2..=4] => DynkinType::E(n),
        other => panic!("not a finite simply-laced diagram: arms {other:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_products_of_mu_basis() {
        let m1 = MuVector::from_ints([1, 0, 0, 0, 0, 0, 0, 0, 0]);
        let m2 = MuVector::from_ints([0, 1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(mu_inner(&m1, &m1), rat(8, 9));
        assert_eq!(mu_inner(&m1, &m2), rat(-1, 9));
        let s3 = sigma_to_mu(3).unwrap();
        assert_eq!(mu_inner(&s3, &s3), int(2));
    }

    #[test]
    fn sigma_embedding() {
        assert_eq!(sigma_to_mu(1).unwrap(), MuVector::from_ints([1, 0, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(sigma_to_mu(8).unwrap(), MuVector::from_ints([1, 1, 1, 1, 1, 1, 1, 1, 0]));
        assert_eq!(sigma_to_mu(6).unwrap(), MuVector::from_ints([1, 1, 1, 1, 1, 1, 0, 0, 0]));
        assert!(matches!(sigma_to_mu(0), Err(Error::IndexOutOfRange { .. })));
        assert!(sigma_to_mu(9).is_err());
    }

    #[test]
    fn fundamental_weights() {
        let l1 = e8_weight_to_mu(&DominantE8::fundamental(1).unwrap());
        assert_eq!(l1, MuVector::from_ints([2, 1, 1, 1, 1, 1, 1, 1, 0]));
        let l8 = e8_weight_to_mu(&DominantE8::fundamental(8).unwrap());
        assert_eq!(l8, MuVector::from_ints([3, 3, 3, 3, 3, 3, 3, 3, 0]));
        assert!(e8_weight_to_mu(&DominantE8::ZERO).is_zero());
        assert_eq!(mu_inner(&l1, &l1), int(2));
    }

    #[test]
    fn simple_roots_are_dual_to_fundamental_weights() {
        let b = simple_roots();
        assert_eq!(b[0], MuVector::from_ints([1, -1, 0, 0, 0, 0, 0, 0, 0]));
        for j in 0..7 {
            let mut c = [0i64; DIM];
            c[j] = 1;
            c[j + 1] = -1;
            assert_eq!(b[j], MuVector::from_ints(c));
        }
        let beta8: [Rat; DIM] = [-1, -1, -1, -1, -1, 2, 2, 2, -1].map(|n| rat(n, 3));
        assert_eq!(b[7].trace_zero(), beta8);
        for i in 1..=RANK {
            let l = fundamental_weight(i).unwrap();
            for (j, bj) in b.iter().enumerate() {
                let expect = if i == j + 1 { 1 } else { 0 };
                assert_eq!(mu_inner(&l, bj), int(expect));
            }
        }
    }

    #[test]
    fn cartan_matrix_is_e8() {
        let c = cartan_matrix();
        let m: Vec<Vec<Rat>> = c.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        assert_eq!(linalg::determinant(&m), int(1));
        // node 8 hangs off node 5 of the A7 chain 1-2-...-7
        assert_eq!(c[7][4], -1);
        assert_eq!((0..7).filter(|&j| c[7][j] != 0).count(), 1);
        assert_eq!(classify_subdiagram(&(0..8).collect::<Vec<_>>()), vec![DynkinType::E(8)]);
        assert_eq!(DynkinType::E(8).weyl_order(), 2 * 8 * 12 * 14 * 18 * 20 * 24 * 30);
    }

    #[test]
    fn theta_anchors() {
        let t0 = theta_vector(&DominantE8::ZERO);
        let expect = [19, 16, 13, 10, 7, 4, 1, -2, -68].map(|n| rat(n, 3));
        assert_eq!(t0, expect);
        assert_eq!(t0.iter().map(|x| x * x).sum::<Rat>(), int(620));
        assert_eq!(t0.to_vec(), weyl_vector().trace_zero().to_vec());
        let t = theta_vector(&DominantE8::new([1; 8]));
        assert!(t.iter().sum::<Rat>().is_zero());
        let l1 = DominantE8::fundamental(1).unwrap();
        let d: Vec<Rat> = theta_vector(&l1).iter().zip(&t0).map(|(a, b)| a - b).collect();
        assert_eq!(d, [1, 0, 0, 0, 0, 0, 0, 0, -1].map(int).to_vec());
    }

    #[test]
    fn parse_dominant() {
        let w: DominantE8 = "0,0,0,0,0,0,1,0".parse().unwrap();
        assert_eq!(w, DominantE8::fundamental(7).unwrap());
        assert!("1,2".parse::<DominantE8>().is_err());
        assert!("a,0,0,0,0,0,0,0".parse::<DominantE8>().is_err());
        assert!(DominantA8::from_ints([1, 2, 0, 0, 0, 0, 0, 0]).is_err());
    }
}
