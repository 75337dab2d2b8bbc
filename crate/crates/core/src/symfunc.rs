//! Power sums in nine variables with `Σ x_I = 0`: augmented monomials,
//! their reduction to power sums, the A8 duality identities and partition
//! counting.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{DominantA8, DIM, RANK};
use crate::poly::{power_sum_eliminated, Poly};
use crate::rat::{int, pow, rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `Π mult_v!` over distinct part values.
    pub fn multiplicity_factor(&self) -> u64 {
        let mut out = 1u64;
        let mut i = 0;
        while i < self.0.len() {
            let j = (i..self.0.len()).find(|&j| self.0[j] != self.0[i]).unwrap_or(self.0.len());
            out *= crate::perm::factorial((j - i) as u64);
            i = j;
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Partitions of `n` into at most `max_parts` parts, each at most `max_part`,
/// in reverse lexicographic order.
pub fn partitions(n: u32, max_parts: usize, max_part: u32) -> Vec<Partition> {
    fn go(n: u32, max_parts: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_parts == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            go(n - p, max_parts - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_parts, max_part, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `m` into at most nine parts, all in `{2,…,9}`:
/// the products of `p_2..p_9` of degree `m` with at most nine factors.
pub fn count_partitions_2to9(m: u32) -> u64 {
    let m = m as usize;
    // ways[k][n]: partitions of n into exactly k parts from the parts seen so far.
    let mut ways = vec![vec![0u64; m + 1]; 10];
    ways[0][0] = 1;
    for part in 2..=9usize {
        for k in 1..=9 {
            for n in part..=m {
                ways[k][n] += ways[k - 1][n - part];
            }
        }
    }
    ways.iter().map(|w| w[m]).sum()
}

/// Linear combination of products of power sums. A key lists the power-sum
/// indices of one product, sorted descending; the empty key is the constant.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymExpr {
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl SymExpr {
    pub fn zero() -> Self {
        SymExpr::default()
    }

    pub fn one() -> Self {
        SymExpr::monomial(&[], Rat::one())
    }

    pub fn monomial(indices: &[u32], c: Rat) -> Self {
        let mut e = SymExpr::zero();
        e.add_term(indices.to_vec(), c);
        e
    }

    pub fn power_sum(k: u32) -> Self {
        SymExpr::monomial(&[k], Rat::one())
    }

    fn add_term(&mut self, mut key: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        key.sort_unstable_by(|a, b| b.cmp(a));
        let e = self.terms.entry(key.clone()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, indices: &[u32]) -> Rat {
        let mut key = indices.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.terms.get(&key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, o: &SymExpr) -> SymExpr {
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, o: &SymExpr) -> SymExpr {
        self.add(&o.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rat) -> SymExpr {
        let mut out = SymExpr::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, o: &SymExpr) -> SymExpr {
        let mut out = SymExpr::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &o.terms {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                out.add_term(k, va * vb);
            }
        }
        out
    }

    /// Drops every product containing `p_1`.
    pub fn without_p1(&self) -> SymExpr {
        SymExpr {
            terms: self.terms.iter().filter(|(k, _)| !k.contains(&1)).map(|(k, v)| (k.clone(), v.clone())).collect(),
        }
    }

    pub fn max_index(&self) -> u32 {
        self.terms.keys().flat_map(|k| k.iter().copied()).max().unwrap_or(0)
    }

    /// Evaluates with `ps[k] = p_k`.
    pub fn eval(&self, ps: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(k, v)| k.iter().fold(v.clone(), |acc, &i| acc * &ps[i as usize]))
            .sum()
    }

    pub fn eval_at(&self, x: &[Rat]) -> Rat {
        self.eval(&power_sums(x, self.max_index()))
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| {
                let mono: Vec<String> = k.iter().map(|i| format!("p{i}")).collect();
                format!("{}*{}", crate::rat::rat_to_string(v), if mono.is_empty() { "1".into() } else { mono.join("*") })
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `ps[k] = Σ x_i^k` for `k = 0..=max`.
pub fn power_sums(x: &[Rat], max: u32) -> Vec<Rat> {
    let mut ps = vec![Rat::zero(); max as usize + 1];
    for xi in x {
        let mut acc = Rat::one();
        for p in ps.iter_mut() {
            *p += &acc;
            acc *= xi;
        }
    }
    ps
}

/// Nine rational values with zero sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    x: [Rat; DIM],
}

impl EvalPoint {
    /// Takes `x_1..x_8`; `x_9` is set to `−Σ x_I`.
    pub fn new(head: [Rat; RANK]) -> Self {
        let last = -head.iter().sum::<Rat>();
        let x = std::array::from_fn(|i| if i < RANK { head[i].clone() } else { last.clone() });
        EvalPoint { x }
    }

    pub fn from_ints(head: [i64; RANK]) -> Self {
        EvalPoint::new(head.map(int))
    }

    /// Numerators in `[-1000, 1000]`, denominators in `[1, 1000]`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        EvalPoint::new(std::array::from_fn(|_| rat(rng.gen_range(-1000..=1000), rng.gen_range(1..=1000))))
    }

    pub fn x(&self) -> &[Rat; DIM] {
        &self.x
    }

    pub fn power_sums(&self, max: u32) -> Vec<Rat> {
        power_sums(&self.x, max)
    }

    pub fn scale(&self, t: &Rat) -> Self {
        EvalPoint { x: self.x.clone().map(|v| v * t) }
    }

    /// Applies a permutation of the nine coordinates.
    pub fn permuted(&self, perm: &[usize; DIM]) -> Self {
        EvalPoint { x: std::array::from_fn(|i| self.x[perm[i]].clone()) }
    }
}

/// Set partitions of `0..n`, each as a list of blocks.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for i in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for b in 0..p.len() {
                let mut q: Vec<Vec<usize>> = p.clone();
                q[b].push(i);
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![i]);
            next.push(q);
        }
        out = next;
    }
    out
}

/// `Σ` over ordered tuples of pairwise distinct indices of `Π x_{I_j}^{ν_j}`,
/// reduced to power sums by Möbius inversion over set partitions of the
/// positions. The reduction does not depend on the number of variables;
/// `vars` only bounds the number of parts.
pub fn aug_monomial_in(nu: &Partition, vars: usize) -> Result<SymExpr> {
    if nu.len() > vars {
        return Err(Error::TooManyParts { parts: nu.len(), vars });
    }
    let mut out = SymExpr::zero();
    for blocks in set_partitions(nu.len()) {
        let mut c: i64 = 1;
        let mut key = Vec::with_capacity(blocks.len());
        for b in &blocks {
            let n = b.len() as u64;
            let sign = if n % 2 == 1 { 1 } else { -1 };
            c *= sign * crate::perm::factorial(n - 1) as i64;
            key.push(b.iter().map(|&i| nu.parts()[i]).sum());
        }
        out.add_term(key, int(c));
    }
    Ok(out)
}

pub fn aug_monomial_to_power_sums(nu: &Partition) -> Result<SymExpr> {
    aug_monomial_in(nu, DIM)
}

/// The distinct-index augmented monomial over the eight values `q_1..q_8`.
pub fn q_generator(nu: &Partition, q: &DominantA8) -> Result<Rat> {
    Ok(aug_monomial_in(nu, RANK)?.eval_at(q.q()))
}

/// Brute-force distinct-index sum, used as an oracle in tests.
pub fn aug_monomial_brute(nu: &Partition, x: &[Rat]) -> Rat {
    fn go(nu: &[u32], x: &[Rat], used: &mut Vec<bool>, acc: Rat, out: &mut Rat) {
        let Some((&first, rest)) = nu.split_first() else {
            *out += acc;
            return;
        };
        for i in 0..x.len() {
            if !used[i] {
                used[i] = true;
                go(rest, x, used, &acc * pow(&x[i], first), out);
                used[i] = false;
            }
        }
    }
    let mut out = Rat::zero();
    go(nu.parts(), x, &mut vec![false; x.len()], Rat::one(), &mut out);
    out
}

type DualityTable = (i64, &'static [(i64, &'static [u32])]);

const DUAL_10: (i64, &[(i64, &[u32])]) = (
    40320,
    &[
        (25200, &[2, 8]),
        (19200, &[3, 7]),
        (16800, &[4, 6]),
        (-8400, &[2, 2, 6]),
        (-13440, &[2, 3, 5]),
        (8064, &[5, 5]),
        (2100, &[2, 2, 2, 4]),
        (-5600, &[3, 3, 4]),
        (-6300, &[2, 4, 4]),
        (2800, &[2, 2, 3, 3]),
        (-105, &[2, 2, 2, 2, 2]),
    ],
);

const DUAL_11: (i64, &[(i64, &[u32])]) = (
    362880,
    &[
        (-3465, &[2, 2, 2, 2, 3]),
        (12320, &[2, 3, 3, 3]),
        (41580, &[2, 2, 3, 4]),
        (-41580, &[3, 4, 4]),
        (16632, &[2, 2, 2, 5]),
        (-44352, &[3, 3, 5]),
        (-99792, &[2, 4, 5]),
        (-110880, &[2, 3, 6]),
        (133056, &[5, 6]),
        (-71280, &[2, 2, 7]),
        (142560, &[4, 7]),
        (166320, &[3, 8]),
        (221760, &[2, 9]),
    ],
);

const DUAL_12: (i64, &[(i64, &[u32])]) = (
    725760,
    &[
        (322560, &[3, 9]),
        (136080, &[2, 2, 8]),
        (272160, &[4, 8]),
        (248832, &[5, 7]),
        (-60480, &[2, 2, 2, 6]),
        (-80640, &[3, 3, 6]),
        (120960, &[6, 6]),
        (-72576, &[2, 2, 3, 5]),
        (-145152, &[3, 4, 5]),
        (17010, &[2, 2, 2, 2, 4]),
        (-34020, &[2, 2, 4, 4]),
        (-22680, &[4, 4, 4]),
        (20160, &[2, 2, 2, 3, 3]),
        (4480, &[3, 3, 3, 3]),
        (-945, &[2, 2, 2, 2, 2, 2]),
    ],
);

const DUAL_14: (i64, &[(i64, &[u32])]) = (
    8709120,
    &[
        (-2835, &[2, 2, 2, 2, 2, 2, 2]),
        (17640, &[2, 2, 2, 2, 3, 3]),
        (125440, &[2, 3, 3, 3, 3]),
        (39690, &[2, 2, 2, 2, 2, 4]),
        (635040, &[2, 2, 3, 3, 4]),
        (79380, &[2, 2, 2, 4, 4]),
        (-635040, &[3, 3, 4, 4]),
        (-476280, &[2, 4, 4, 4]),
        (-301056, &[3, 3, 3, 5]),
        (-2032128, &[2, 3, 4, 5]),
        (-158760, &[2, 2, 2, 2, 6]),
        (-1128960, &[2, 3, 3, 6]),
        (-635040, &[2, 2, 4, 6]),
        (635040, &[4, 4, 6]),
        (-725760, &[2, 2, 3, 7]),
        (1451520, &[3, 4, 7]),
        (1244160, &[7, 7]),
        (317520, &[2, 2, 2, 8]),
        (846720, &[3, 3, 8]),
        (1905120, &[2, 4, 8]),
        (2540160, &[6, 8]),
        (2257920, &[2, 3, 9]),
        (2709504, &[5, 9]),
    ],
);

fn duality_table(m: u32) -> Result<DualityTable> {
    match m {
        10 => Ok(DUAL_10),
        11 => Ok(DUAL_11),
        12 => Ok(DUAL_12),
        14 => Ok(DUAL_14),
        _ => Err(Error::UnsupportedDegree(m)),
    }
}

pub const DUALITY_DEGREES: [u32; 4] = [10, 11, 12, 14];

/// Right-hand side of the duality expressing `p_M` through `p_2..p_9`.
pub fn duality_expr(m: u32) -> Result<SymExpr> {
    let (den, rows) = duality_table(m)?;
    let mut out = SymExpr::zero();
    for (c, key) in rows {
        out.add_term(key.to_vec(), rat(*c, den));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualityMode {
    Exact,
    Points,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityReport {
    pub degree: u32,
    pub mode: DualityMode,
    pub passed: bool,
    pub points_checked: usize,
    /// Monomials surviving the expansion (exact) or failing points (points).
    pub failures: usize,
}

/// `den · (p_M − rhs)` expanded in `x_1..x_8` with `x_9 = −Σ x_I`.
pub fn duality_residual_poly(m: u32) -> Result<Poly> {
    let (den, rows) = duality_table(m)?;
    let ps: Vec<Poly> = (0..=m).into_par_iter().map(power_sum_eliminated).collect::<Result<_>>()?;
    let terms: Vec<Poly> = rows
        .par_iter()
        .map(|(c, key)| {
            let mut prod = Poly::constant(*c as i128);
            for &k in key.iter() {
                prod = prod.mul(&ps[k as usize])?;
            }
            Ok(prod)
        })
        .collect::<Result<_>>()?;
    let mut res = Poly::zero();
    res.add_scaled(&ps[m as usize], den as i128)?;
    for t in &terms {
        res.add_scaled(t, -1)?;
    }
    Ok(res)
}

pub fn verify_duality_exact(m: u32) -> Result<DualityReport> {
    let res = duality_residual_poly(m)?;
    Ok(DualityReport {
        degree: m,
        mode: DualityMode::Exact,
        passed: res.is_zero(),
        points_checked: 0,
        failures: res.len(),
    })
}

pub fn verify_duality_points(m: u32, points: &[EvalPoint]) -> Result<DualityReport> {
    let rhs = duality_expr(m)?;
    let failures = points
        .iter()
        .filter(|h| {
            let ps = h.power_sums(m);
            ps[m as usize] != rhs.eval(&ps)
        })
        .count();
    Ok(DualityReport {
        degree: m,
        mode: DualityMode::Points,
        passed: failures == 0,
        points_checked: points.len(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn partition_counts() {
        assert_eq!(count_partitions_2to9(8), 7);
        assert_eq!(count_partitions_2to9(30), 390);
        assert_eq!(count_partitions_2to9(2), 1);
        assert_eq!(count_partitions_2to9(1), 0);
        assert_eq!(count_partitions_2to9(0), 1);
    }

    #[test]
    fn partitions_enumeration() {
        assert_eq!(partitions(8, 8, 8).len(), 22);
        assert_eq!(partitions(4, 9, 4).len(), 5);
        assert_eq!(partitions(5, 2, 5), vec![p(&[5]), p(&[4, 1]), p(&[3, 2])]);
    }

    #[test]
    fn aug_monomial_small() {
        assert_eq!(aug_monomial_to_power_sums(&p(&[5])).unwrap(), SymExpr::power_sum(5));
        let e = aug_monomial_to_power_sums(&p(&[3, 2])).unwrap();
        assert_eq!(e, SymExpr::monomial(&[3, 2], int(1)).sub(&SymExpr::power_sum(5)));
        let e = aug_monomial_to_power_sums(&p(&[2, 2])).unwrap();
        assert_eq!(e, SymExpr::monomial(&[2, 2], int(1)).sub(&SymExpr::power_sum(4)));
        assert!(matches!(
            aug_monomial_to_power_sums(&p(&[1; 10])),
            Err(Error::TooManyParts { parts: 10, vars: 9 })
        ));
    }

    #[test]
    fn aug_monomial_matches_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let h = EvalPoint::random(&mut rng);
        for nu in [p(&[2, 1, 1]), p(&[3, 3, 2]), p(&[1, 1, 1, 1]), p(&[4, 2, 2, 1])] {
            let e = aug_monomial_to_power_sums(&nu).unwrap();
            assert_eq!(e.eval_at(h.x()), aug_monomial_brute(&nu, h.x()), "{nu}");
        }
    }

    #[test]
    fn q_generator_examples() {
        let q = |v: [i64; 8]| DominantA8::from_ints(v).unwrap();
        assert_eq!(q_generator(&p(&[8]), &q([1, 0, 0, 0, 0, 0, 0, 0])).unwrap(), int(1));
        assert_eq!(q_generator(&p(&[1, 1]), &q([1, 1, 0, 0, 0, 0, 0, 0])).unwrap(), int(2));
        assert_eq!(q_generator(&p(&[4, 4]), &q([2, 1, 0, 0, 0, 0, 0, 0])).unwrap(), int(32));
        assert!(q_generator(&p(&[1; 9]), &q([1; 8])).is_err());
    }

    #[test]
    fn duality_coefficients() {
        assert_eq!(duality_expr(10).unwrap().coefficient(&[2, 8]), rat(25200, 40320));
        assert_eq!(duality_expr(12).unwrap().coefficient(&[2, 2, 2, 2, 2, 2]), rat(-945, 725760));
        assert_eq!(duality_expr(14).unwrap().coefficient(&[7, 7]), rat(1244160, 8709120));
        assert!(duality_expr(13).is_err());
    }

    #[test]
    fn duality_at_simple_point() {
        let h = EvalPoint::from_ints([1, -1, 0, 0, 0, 0, 0, 0]);
        let ps = h.power_sums(10);
        assert_eq!(ps[10], int(2));
        assert_eq!(duality_expr(10).unwrap().eval(&ps), int(2));
        let zero = EvalPoint::from_ints([0; 8]);
        assert_eq!(duality_expr(10).unwrap().eval(&zero.power_sums(10)), Rat::zero());
    }

    #[test]
    fn duality_10_exact() {
        assert!(verify_duality_exact(10).unwrap().passed);
    }

    #[test]
    fn broken_duality_detected() {
        let rhs = duality_expr(10).unwrap().add(&SymExpr::monomial(&[5, 5], rat(1, 40320)));
        let h = EvalPoint::from_ints([1, 2, -3, 4, 0, 0, 0, 0]);
        let ps = h.power_sums(10);
        assert_ne!(ps[10], rhs.eval(&ps));
    }
}
