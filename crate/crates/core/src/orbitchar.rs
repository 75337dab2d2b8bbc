//! Orbit characters `ch_M(σ⁺) = Σ_{w ∈ Π(σ⁺)} ⟨w, h⟩^M` for A8 orbits, via
//! the Ω coefficient tables or by enumerating the orbit.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{DominantA8, DominantE8, DIM, RANK};
use crate::omega_tables::{OMEGA_12, OMEGA_14, OMEGA_8};
use crate::perm::{distinct_count, factorial, for_each_distinct};
use crate::registry::Registry;
use crate::rat::{int, Rat};
use crate::symfunc::{aug_monomial_in, partitions, EvalPoint, Partition, SymExpr};
use crate::weyl::sigma_set_transversal;

pub const MAX_DEGREE: u32 = 14;
pub const ENUMERATION_GUARD: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaRow {
    pub coefficient: u64,
    pub q_partition: Partition,
    pub mu_partition: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaTable {
    pub degree: u32,
    pub rows: Vec<OmegaRow>,
}

impl OmegaTable {
    fn sorted(mut self) -> Self {
        self.rows.sort_by(|a, b| b.q_partition.cmp(&a.q_partition));
        self
    }

    pub fn row(&self, nu: &Partition) -> Option<&OmegaRow> {
        self.rows.iter().find(|r| &r.q_partition == nu)
    }
}

/// The printed tables, block prefactors multiplied in.
pub fn omega_fixture(m: u32) -> Result<OmegaTable> {
    let raw: &[(u64, &[u32])] = match m {
        8 => &OMEGA_8,
        12 => &OMEGA_12,
        14 => &OMEGA_14,
        _ => return Err(Error::UnsupportedDegree(m)),
    };
    let rows = raw
        .iter()
        .map(|(c, nu)| {
            let p = Partition::new(nu.to_vec());
            OmegaRow { coefficient: *c, q_partition: p.clone(), mu_partition: p }
        })
        .collect();
    Ok(OmegaTable { degree: m, rows }.sorted())
}

/// Coefficients from the multinomial expansion of
/// `Σ_{π ∈ S_9} (Σ_I q_{π(I)} x_I)^M` with `q_9 = 0`, written against
/// unordered monomial functions `Q(ν)` and `μ(ν)`:
/// `M!/Π ν_j! · (9 − ℓ(ν))! · Π_v mult_v(ν)!`.
pub fn derive_omega(m: u32) -> Result<OmegaTable> {
    if !(1..=MAX_DEGREE).contains(&m) {
        return Err(Error::UnsupportedDegree(m));
    }
    let rows = partitions(m, RANK, m)
        .into_iter()
        .map(|nu| {
            let mut c = factorial(m as u64);
            for &p in nu.parts() {
                c /= factorial(p as u64);
            }
            c *= factorial((DIM - nu.len()) as u64) * nu.multiplicity_factor();
            OmegaRow { coefficient: c, q_partition: nu.clone(), mu_partition: nu }
        })
        .collect();
    Ok(OmegaTable { degree: m, rows }.sorted())
}

/// A table row prepared for evaluation: the unordered generators as
/// power-sum expressions in eight (`Q`) and nine (`μ`) variables.
struct PreparedRow {
    coefficient: Rat,
    q: SymExpr,
    mu: SymExpr,
}

struct Prepared {
    rows: Vec<PreparedRow>,
}

fn prepared(m: u32) -> Result<Arc<Prepared>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Prepared>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&m) {
        return Ok(p.clone());
    }
    let table = derive_omega(m)?;
    let mut rows = Vec::with_capacity(table.rows.len());
    for r in &table.rows {
        let sym = Rat::one() / int(r.q_partition.multiplicity_factor() as i64);
        rows.push(PreparedRow {
            coefficient: int(r.coefficient as i64),
            q: aug_monomial_in(&r.q_partition, RANK)?.scale(&sym),
            mu: aug_monomial_in(&r.mu_partition, DIM)?.scale(&sym).without_p1(),
        });
    }
    let p = Arc::new(Prepared { rows });
    cache.lock().unwrap().insert(m, p.clone());
    Ok(p)
}

/// Row weights `(dimΠ/9!) · c_ν · Q(ν)(σ⁺)`; `ch_M` is their dot product
/// with the `μ(ν)` values.
pub fn orbit_row_weights(m: u32, sigma: &DominantA8) -> Result<Vec<Rat>> {
    let prep = prepared(m)?;
    let qs = crate::symfunc::power_sums(sigma.q(), m);
    let dim = Rat::from(BigInt::from(distinct_count(&full_coords(sigma))));
    let scale = dim / int(factorial(9) as i64);
    Ok(prep.rows.iter().map(|r| &scale * &r.coefficient * r.q.eval(&qs)).collect())
}

/// `μ(ν)(h)` for every row of the degree-`m` table.
pub fn mu_row_values(m: u32, h: &EvalPoint) -> Result<Vec<Rat>> {
    let prep = prepared(m)?;
    let ps = h.power_sums(m);
    Ok(prep.rows.iter().map(|r| r.mu.eval(&ps)).collect())
}

/// `ch_M(σ⁺)` as a polynomial in the power sums `p_2..p_M` of `h`.
pub fn orbit_char_expr(m: u32, sigma: &DominantA8) -> Result<SymExpr> {
    let prep = prepared(m)?;
    let w = orbit_row_weights(m, sigma)?;
    let mut out = SymExpr::zero();
    for (r, c) in prep.rows.iter().zip(&w) {
        out = out.add(&r.mu.scale(c));
    }
    Ok(out)
}

fn full_coords(sigma: &DominantA8) -> Vec<Rat> {
    let mut v: Vec<Rat> = sigma.q().to_vec();
    v.push(Rat::zero());
    v
}

pub fn char_orbit(m: u32, sigma: &DominantA8, h: &EvalPoint) -> Result<Rat> {
    let w = orbit_row_weights(m, sigma)?;
    let mu = mu_row_values(m, h)?;
    Ok(w.iter().zip(&mu).map(|(a, b)| a * b).sum())
}

/// Integer form of `h`: `x_I = n_I / d`.
fn integer_point(h: &EvalPoint) -> (Vec<BigInt>, BigInt) {
    let d = h.x().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let n = h.x().iter().map(|x| x.numer() * (&d / x.denom())).collect();
    (n, d)
}

/// Distribution of the pairings `⟨w, h⟩·d` over the orbit of `σ⁺`.
fn pairing_histogram(sigma: &DominantA8, h: &EvalPoint) -> Result<(HashMap<BigInt, u64>, BigInt)> {
    let coords = full_coords(sigma);
    let size = distinct_count(&coords);
    if size > ENUMERATION_GUARD {
        return Err(Error::OrbitTooLarge { size, limit: ENUMERATION_GUARD });
    }
    let (n, d) = integer_point(h);
    // Scale q to integers too, so each pairing is a single integer.
    let qd = coords.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let q: [BigInt; DIM] = std::array::from_fn(|i| coords[i].numer() * (&qd / coords[i].denom()));
    let small: Option<([i64; DIM], [i128; DIM])> = (|| {
        let qi = std::array::from_fn(|i| q[i].to_i64());
        let ni = std::array::from_fn(|i| n[i].to_i128());
        if qi.iter().any(Option::is_none) || ni.iter().any(Option::is_none) {
            return None;
        }
        let ni: [i128; DIM] = ni.map(Option::unwrap);
        if ni.iter().any(|x| x.abs() > 1i128 << 90) {
            return None;
        }
        Some((qi.map(Option::unwrap), ni))
    })();
    let mut hist: HashMap<BigInt, u64> = HashMap::new();
    match small {
        Some((qi, ni)) if qi.iter().all(|x| x.abs() < 1 << 20) => {
            let mut h128: HashMap<i128, u64> = HashMap::new();
            for_each_distinct(&qi, |p| {
                let v: i128 = p.iter().zip(&ni).map(|(a, b)| *a as i128 * b).sum();
                *h128.entry(v).or_insert(0) += 1;
            });
            for (k, c) in h128 {
                hist.insert(BigInt::from(k), c);
            }
        }
        _ => {
            for_each_distinct(&q, |p| {
                let v: BigInt = p.iter().zip(&n).map(|(a, b)| a * b).sum();
                *hist.entry(v).or_insert(0) += 1;
            });
        }
    }
    Ok((hist, d * qd))
}

/// `ch_M` by enumerating every distinct permutation of the coordinates of
/// `σ⁺`. Exact, independent of the tables.
pub fn char_orbit_oracle(m: u32, sigma: &DominantA8, h: &EvalPoint) -> Result<Rat> {
    Ok(char_orbit_oracle_multi(&[m], sigma, h)?.remove(0))
}

/// Oracle values for several degrees from one enumeration.
pub fn char_orbit_oracle_multi(ms: &[u32], sigma: &DominantA8, h: &EvalPoint) -> Result<Vec<Rat>> {
    let (hist, d) = pairing_histogram(sigma, h)?;
    Ok(ms
        .iter()
        .map(|&m| {
            let num: BigInt = hist.iter().map(|(v, c)| v.pow(m) * BigInt::from(*c)).sum();
            Rat::new(num, d.pow(m))
        })
        .collect())
}

/// `ch_M` of an E8 orbit: the sum over its A8 orbits.
pub fn char_e8_orbit(m: u32, l: &DominantE8, h: &EvalPoint) -> Result<Rat> {
    let mu = mu_row_values(m, h)?;
    let set = sigma_set_transversal(l);
    let mut total = Rat::zero();
    for member in &set.members {
        let w = orbit_row_weights(m, &member.q)?;
        total += w.iter().zip(&mu).map(|(a, b)| a * b).sum::<Rat>();
    }
    Ok(total)
}

/// `ch_M` of an E8 orbit as a power-sum polynomial.
pub fn e8_orbit_char_expr(m: u32, l: &DominantE8) -> Result<SymExpr> {
    let set = sigma_set_transversal(l);
    let mut out = SymExpr::zero();
    for member in &set.members {
        out = out.add(&orbit_char_expr(m, &member.q)?);
    }
    Ok(out)
}

/// Interchangeable ways of evaluating an A8 orbit character.
pub trait OrbitCharacter: Send + Sync {
    fn char_orbit(&self, m: u32, sigma: &DominantA8, h: &EvalPoint) -> Result<Rat>;
}

pub struct TableCharacter;

impl OrbitCharacter for TableCharacter {
    fn char_orbit(&self, m: u32, sigma: &DominantA8, h: &EvalPoint) -> Result<Rat> {
        char_orbit(m, sigma, h)
    }
}

pub struct EnumerationCharacter;

impl OrbitCharacter for EnumerationCharacter {
    fn char_orbit(&self, m: u32, sigma: &DominantA8, h: &EvalPoint) -> Result<Rat> {
        char_orbit_oracle(m, sigma, h)
    }
}

pub fn orbit_character_registry() -> Registry<dyn OrbitCharacter> {
    Registry::new("orbit character method")
        .with("table", Box::new(TableCharacter) as Box<dyn OrbitCharacter>)
        .with("enumeration", Box::new(EnumerationCharacter) as Box<dyn OrbitCharacter>)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(v: [i64; 8]) -> DominantA8 {
        DominantA8::from_ints(v).unwrap()
    }

    #[test]
    fn fixtures_have_expected_shape() {
        assert_eq!(omega_fixture(8).unwrap().rows.len(), 22);
        assert_eq!(omega_fixture(12).unwrap().rows.len(), 70);
        assert_eq!(omega_fixture(14).unwrap().rows.len(), 116);
        let t = omega_fixture(8).unwrap();
        assert_eq!(t.row(&Partition::new(vec![8])).unwrap().coefficient, 40320);
        assert_eq!(t.row(&Partition::new(vec![5, 3])).unwrap().coefficient, 282240);
        let t = omega_fixture(12).unwrap();
        assert_eq!(t.row(&Partition::new(vec![6, 6])).unwrap().coefficient, 5040 * 1848);
        let t = omega_fixture(14).unwrap();
        assert_eq!(t.row(&Partition::new(vec![7, 7])).unwrap().coefficient, 5040 * 6864);
        assert!(omega_fixture(10).is_err());
    }

    #[test]
    fn derived_degree_two() {
        let t = derive_omega(2).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert_eq!(t.rows[0].coefficient, 40320);
        assert_eq!(t.rows[1].coefficient, 20160);
        assert!(derive_omega(15).is_err());
        assert!(derive_omega(0).is_err());
    }

    #[test]
    fn derived_matches_degree_8_fixture() {
        assert_eq!(derive_omega(8).unwrap(), omega_fixture(8).unwrap());
    }

    #[test]
    fn sigma1_degree2_is_p2() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let h = EvalPoint::random(&mut rng);
        let v = char_orbit(2, &q([1, 0, 0, 0, 0, 0, 0, 0]), &h).unwrap();
        assert_eq!(v, h.power_sums(2)[2]);
    }

    #[test]
    fn zero_orbit_vanishes() {
        let h = EvalPoint::from_ints([1, 2, 3, -6, 0, 0, 0, 0]);
        for m in [2, 8, 12] {
            assert!(char_orbit(m, &q([0; 8]), &h).unwrap().is_zero());
        }
        assert!(char_e8_orbit(8, &DominantE8::ZERO, &h).unwrap().is_zero());
    }

    #[test]
    fn table_matches_oracle_small() {
        let h = EvalPoint::from_ints([1, 2, 3, -6, 0, 0, 0, 0]);
        for s in [q([1, 1, 1, 0, 0, 0, 0, 0]), q([2, 1, 1, 1, 1, 1, 1, 1]), q([3, 1, 1, 0, 0, 0, 0, 0])] {
            for m in [1, 2, 8] {
                assert_eq!(char_orbit(m, &s, &h).unwrap(), char_orbit_oracle(m, &s, &h).unwrap());
            }
        }
    }

    #[test]
    fn oracle_degree_one_vanishes() {
        let s = q([8, 7, 6, 5, 4, 3, 2, 1]);
        let h = EvalPoint::from_ints([1, 0, 0, 0, 0, 0, 0, 0]);
        assert!(char_orbit_oracle(1, &s, &h).unwrap().is_zero());
    }

    #[test]
    fn strategies_agree() {
        let reg = orbit_character_registry();
        let h = EvalPoint::from_ints([2, -1, 0, 5, 0, 1, 0, 0]);
        let s = q([2, 2, 1, 0, 0, 0, 0, 0]);
        let a = reg.get("table").unwrap().char_orbit(8, &s, &h).unwrap();
        let b = reg.get("enumeration").unwrap().char_orbit(8, &s, &h).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn adjoint_orbit_degree2() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let h = EvalPoint::random(&mut rng);
        let roots = crate::weyl::enumerate_e8_orbit(&DominantE8::fundamental(1).unwrap(), 1000).unwrap();
        let brute: Rat = roots
            .iter()
            .map(|r| {
                let v: Rat = r.iter().zip(h.x()).map(|(a, b)| int(*a) * b).sum();
                &v * &v
            })
            .sum();
        assert_eq!(char_e8_orbit(2, &DominantE8::fundamental(1).unwrap(), &h).unwrap(), brute);
        // Σ_roots ⟨α,h⟩² = 60 κ(h,h) and κ(h,h) = p_2 for trace-zero h.
        assert_eq!(brute, int(60) * &h.power_sums(2)[2]);
    }
}
