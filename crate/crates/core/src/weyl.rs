//! Weyl-group machinery: A8 dominantization, the E8 orbit transversal that
//! computes `Σ(λ⁺)`, orbit sizes, and the sum-set construction of `Σ(λ⁺)`
//! from the fundamental sets.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::appendix1;
use crate::error::{Error, Result};
use crate::lattice::{
    self, cartan_matrix, classify_subdiagram, e8_weight_to_ints, mu_inner, mu_inner_int,
    DominantA8, DominantE8, MuVector, DIM, RANK,
};
use crate::perm::{distinct_count, for_each_distinct};
use crate::rat::{int, Rat};
use crate::registry::Registry;

pub const WEYL_E8_ORDER: u64 = 696_729_600;
pub const WEYL_A8_ORDER: u64 = 362_880;

/// Integer lattice vector in canonical `μ` coordinates.
pub type IntMu = [i64; DIM];

/// Sorts coordinates descending and shifts the smallest to zero; returns
/// `q_1..q_8` and the A8 orbit size `9!/Π mult!`.
pub fn a8_dominantize(w: &MuVector) -> (DominantA8, u64) {
    let mut c: Vec<Rat> = w.coords().to_vec();
    c.sort_by(|a, b| b.cmp(a));
    let min = c[DIM - 1].clone();
    let size = distinct_count(&c);
    let q: [Rat; RANK] = std::array::from_fn(|i| &c[i] - &min);
    (DominantA8::new(q).expect("sorted coordinates are dominant"), size)
}

pub fn a8_dominantize_int(w: &IntMu) -> [i64; RANK] {
    let mut c = *w;
    c.sort_unstable_by(|a, b| b.cmp(a));
    let min = c[DIM - 1];
    std::array::from_fn(|i| c[i] - min)
}

/// A8 orbit size of an A8 dominant weight given by `q_1..q_8`.
pub fn a8_orbit_size(q: &[i64; RANK]) -> u64 {
    let mut full = [0i64; DIM];
    full[..RANK].copy_from_slice(q);
    distinct_count(&full)
}

pub fn q_to_mu(q: &[i64; RANK]) -> IntMu {
    let mut full = [0i64; DIM];
    full[..RANK].copy_from_slice(q);
    full
}

/// `w − κ(w, root)·root` for a length-2 root.
pub fn reflect(w: &MuVector, root: &MuVector) -> Result<MuVector> {
    let len = mu_inner(root, root);
    if len != int(2) {
        return Err(Error::NotARoot(crate::rat::rat_to_string(&len)));
    }
    Ok(w.sub(&root.scale(&mu_inner(w, root))))
}

pub fn reflect_int(w: &IntMu, root: &IntMu) -> IntMu {
    let k = mu_inner_int(w, root);
    std::array::from_fn(|i| w[i] - k * root[i])
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SigmaMember {
    pub q: DominantA8,
    pub a8_orbit_size: u64,
}

impl SigmaMember {
    pub fn from_ints(q: [i64; RANK]) -> Self {
        SigmaMember {
            q: DominantA8::from_ints(q).expect("dominant"),
            a8_orbit_size: a8_orbit_size(&q),
        }
    }

    pub fn q_ints(&self) -> [i64; RANK] {
        self.q.to_ints().expect("E8 orbit members are integral")
    }
}

/// The A8 dominant weights lying in one E8 Weyl orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaSet {
    pub source: DominantE8,
    pub members: Vec<SigmaMember>,
    pub e8_orbit_size: u64,
}

impl SigmaSet {
    fn from_q_set(source: DominantE8, qs: impl IntoIterator<Item = [i64; RANK]>) -> Self {
        // Descending lexicographic order keeps output deterministic.
        let sorted: BTreeSet<std::cmp::Reverse<[i64; RANK]>> =
            qs.into_iter().map(std::cmp::Reverse).collect();
        SigmaSet {
            source,
            members: sorted.into_iter().map(|q| SigmaMember::from_ints(q.0)).collect(),
            e8_orbit_size: e8_orbit_size(&source),
        }
    }

    pub fn q_set(&self) -> BTreeSet<[i64; RANK]> {
        self.members.iter().map(SigmaMember::q_ints).collect()
    }

    pub fn orbit_size_sum(&self) -> u64 {
        self.members.iter().map(|m| m.a8_orbit_size).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "source": self.source.r.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "members": self.members.iter().map(|m| serde_json::json!({
                "q": m.q.q().iter().map(crate::rat::rat_to_string).collect::<Vec<_>>(),
                "orbit_size": m.a8_orbit_size.to_string(),
            })).collect::<Vec<_>>(),
            "e8_orbit_size": self.e8_orbit_size.to_string(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Option<SigmaSet> {
        let source: Vec<u32> = v["source"]
            .as_array()?
            .iter()
            .map(|s| s.as_str()?.parse().ok())
            .collect::<Option<_>>()?;
        let mut members = Vec::new();
        for m in v["members"].as_array()? {
            let q: Vec<i64> = m["q"]
                .as_array()?
                .iter()
                .map(|s| s.as_str()?.parse().ok())
                .collect::<Option<_>>()?;
            let q: [i64; RANK] = q.try_into().ok()?;
            let member = SigmaMember::from_ints(q);
            if member.a8_orbit_size.to_string() != m["orbit_size"].as_str()? {
                return None;
            }
            members.push(member);
        }
        Some(SigmaSet {
            source: DominantE8::new(source.try_into().ok()?),
            members,
            e8_orbit_size: v["e8_orbit_size"].as_str()?.parse().ok()?,
        })
    }
}

/// The W(A8) orbit of a root, as the set of reflections it generates.
fn conjugate_roots(seed: &IntMu) -> Vec<IntMu> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for_each_distinct(seed, |p| {
        // s_α = s_{−α}: keep one of each pair.
        let canon = canonical_int(p);
        let neg = canonical_int(&p.map(|x| -x));
        if !seen.contains(&neg) && seen.insert(canon) {
            out.push(canon);
        }
    });
    out
}

pub fn canonical_int(w: &IntMu) -> IntMu {
    let s = w[DIM - 1];
    w.map(|x| x - s)
}

fn extra_root() -> IntMu {
    lattice::simple_roots_int()[RANK - 1]
}

/// `Σ(λ⁺)` by closure: reflect every member in every non-A8 root of the
/// W(A8) class of `β_8`, re-dominantize, repeat until nothing new appears.
pub fn sigma_set_transversal(l: &DominantE8) -> SigmaSet {
    sigma_set_transversal_with(l, &extra_root()).expect("β_8 is a non-A8 root")
}

/// Same closure with a caller-chosen extra root (any E8 root outside A8).
pub fn sigma_set_transversal_with(l: &DominantE8, seed: &IntMu) -> Result<SigmaSet> {
    if mu_inner_int(seed, seed) != 2 {
        return Err(Error::NotARoot(mu_inner_int(seed, seed).to_string()));
    }
    let start = a8_dominantize_int(&e8_weight_to_ints(&l.r.map(i64::from)));
    Ok(SigmaSet::from_q_set(*l, closure(start, &conjugate_roots(seed))))
}

fn closure(start: [i64; RANK], roots: &[IntMu]) -> HashSet<[i64; RANK]> {
    let mut found: HashSet<[i64; RANK]> = HashSet::from([start]);
    let mut queue = vec![start];
    while let Some(q) = queue.pop() {
        let w = q_to_mu(&q);
        for r in roots {
            let d = a8_dominantize_int(&reflect_int(&w, r));
            if found.insert(d) {
                queue.push(d);
            }
        }
    }
    found
}

/// `|W(E8)| / |W(stabilizer)|`, the stabilizer being generated by the simple
/// reflections at nodes with zero label.
pub fn e8_orbit_size(l: &DominantE8) -> u64 {
    let zero_nodes: Vec<usize> = (0..RANK).filter(|&i| l.r[i] == 0).collect();
    let stab: u64 = classify_subdiagram(&zero_nodes)
        .iter()
        .map(|t| t.weyl_order())
        .product();
    WEYL_E8_ORDER / stab
}

/// Brings Dynkin labels into the dominant chamber with simple reflections.
pub fn e8_dominantize_labels(mut l: [i64; RANK]) -> [i64; RANK] {
    let c = cartan_matrix();
    loop {
        let Some(j) = (0..RANK).find(|&j| l[j] < 0) else {
            return l;
        };
        let k = l[j];
        for (x, cj) in l.iter_mut().zip(&c[j]) {
            *x -= k * cj;
        }
    }
}

/// Every vector of the E8 orbit of `l`, by expanding the A8 orbits of
/// `Σ(l)`. Only sensible for small orbits.
pub fn enumerate_e8_orbit(l: &DominantE8, limit: u64) -> Result<Vec<IntMu>> {
    let set = sigma_set_transversal(l);
    if set.e8_orbit_size > limit {
        return Err(Error::OrbitTooLarge { size: set.e8_orbit_size, limit });
    }
    let mut out = Vec::with_capacity(set.e8_orbit_size as usize);
    for m in &set.members {
        for_each_distinct(&q_to_mu(&m.q_ints()), |p| out.push(canonical_int(p)));
    }
    Ok(out)
}

/// Coefficients of an A8 dominant weight over `σ_1..σ_8`.
pub fn q_to_sigma(q: &[i64; RANK]) -> [i64; RANK] {
    std::array::from_fn(|i| if i + 1 < RANK { q[i] - q[i + 1] } else { q[i] })
}

pub fn sigma_to_q(a: &[i64; RANK]) -> [i64; RANK] {
    std::array::from_fn(|i| a[i..].iter().sum())
}

/// Nonnegative integers `t` with `|v + t σ_8|² = target`, where `v` is given
/// by its `σ_1..σ_7` coefficients.
fn solve_sigma8(sigma7: &[i64; RANK - 1], target: i64) -> Vec<i64> {
    let mut a = [0i64; RANK];
    a[..RANK - 1].copy_from_slice(sigma7);
    let v = q_to_mu(&sigma_to_q(&a));
    let s8 = q_to_mu(&[1; RANK]);
    // Work with 9·κ to stay integral: 9|v|² + 18 t κ(v,σ8) + 8 t² = 9 target.
    let nine = |x: &IntMu, y: &IntMu| {
        let dot: i64 = x.iter().zip(y).map(|(p, q)| p * q).sum();
        9 * dot - x.iter().sum::<i64>() * y.iter().sum::<i64>()
    };
    let (a2, b, c) = (nine(&s8, &s8), 2 * nine(&v, &s8), nine(&v, &v) - 9 * target);
    let disc = b * b - 4 * a2 * c;
    if disc < 0 {
        return Vec::new();
    }
    let root = disc.isqrt();
    if root * root != disc {
        return Vec::new();
    }
    let mut out: Vec<i64> = [-b + root, -b - root]
        .into_iter()
        .filter(|n| n % (2 * a2) == 0)
        .map(|n| n / (2 * a2))
        .filter(|&t| t >= 0)
        .collect();
    out.dedup();
    out
}

/// Members of `Σ(l)` built from the fundamental sets: one member of `Σ(λ_i)`
/// for each of the `r_i` copies, `σ_1..σ_7` parts summed, `σ_8`
/// coefficient re-solved from the length condition.
pub fn sumset_candidates(l: &DominantE8) -> BTreeSet<[i64; RANK]> {
    let target = lattice::label_inner(&l.r.map(i64::from), &l.r.map(i64::from));
    let mut partial: BTreeSet<[i64; RANK - 1]> = BTreeSet::from([[0; RANK - 1]]);
    for i in 0..RANK {
        if l.r[i] == 0 {
            continue;
        }
        let fund = sigma_set_transversal(&DominantE8::fundamental(i + 1).unwrap());
        let parts: Vec<[i64; RANK - 1]> = fund
            .members
            .iter()
            .map(|m| {
                let a = q_to_sigma(&m.q_ints());
                std::array::from_fn(|k| a[k])
            })
            .collect();
        // Unordered choice with repetition: sums depend only on the multiset.
        for _ in 0..l.r[i] {
            let mut next = BTreeSet::new();
            for p in &partial {
                for s in &parts {
                    next.insert(std::array::from_fn(|k| p[k] + s[k]));
                }
            }
            partial = next;
        }
    }
    let mut out = BTreeSet::new();
    for p in &partial {
        for t in solve_sigma8(p, target) {
            let mut a = [0i64; RANK];
            a[..RANK - 1].copy_from_slice(p);
            a[RANK - 1] = t;
            out.insert(sigma_to_q(&a));
        }
    }
    out
}

/// Disagreement between the sum-set construction and the transversal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsetDiscrepancy {
    pub source: DominantE8,
    /// In the transversal but not produced by the sum set.
    pub missing: Vec<[i64; RANK]>,
    /// Produced by the sum set but not in the E8 orbit.
    pub extra: Vec<[i64; RANK]>,
}

/// `Σ(l)` from the fundamental sets, checked against the transversal.
pub fn sigma_set_sumset(l: &DominantE8) -> std::result::Result<SigmaSet, SumsetDiscrepancy> {
    let cand = sumset_candidates(l);
    let truth = sigma_set_transversal(l).q_set();
    if cand == truth {
        return Ok(SigmaSet::from_q_set(*l, cand));
    }
    Err(SumsetDiscrepancy {
        source: *l,
        missing: truth.difference(&cand).copied().collect(),
        extra: cand.difference(&truth).copied().collect(),
    })
}

/// Sum-set candidates that dominantize to `l` under E8, without
/// consulting the transversal.
pub fn sumset_members(l: &DominantE8) -> SigmaSet {
    let target = l.r.map(i64::from);
    let members: BTreeSet<[i64; RANK]> = sumset_candidates(l)
        .into_iter()
        .filter(|q| e8_dominantize_labels(lattice::labels_of(&q_to_mu(q))) == target)
        .collect();
    SigmaSet::from_q_set(*l, members)
}

/// Interchangeable constructions of `Σ(λ⁺)`.
pub trait SigmaSetMethod: Send + Sync {
    fn sigma_set(&self, l: &DominantE8) -> Result<SigmaSet>;
}

pub struct Transversal;

impl SigmaSetMethod for Transversal {
    fn sigma_set(&self, l: &DominantE8) -> Result<SigmaSet> {
        Ok(sigma_set_transversal(l))
    }
}

pub struct Sumset;

impl SigmaSetMethod for Sumset {
    fn sigma_set(&self, l: &DominantE8) -> Result<SigmaSet> {
        Ok(sumset_members(l))
    }
}

pub fn sigma_set_registry() -> Registry<dyn SigmaSetMethod> {
    Registry::new("sigma-set method")
        .with("transversal", Box::new(Transversal) as Box<dyn SigmaSetMethod>)
        .with("sumset", Box::new(Sumset) as Box<dyn SigmaSetMethod>)
}

/// How one printed entry relates to the computed set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EntryStatus {
    /// Dominant as printed and a member.
    Exact,
    /// A member once the `σ_8` coefficient is re-solved from the length.
    Sigma8Adjusted { printed: i64, solved: i64 },
    /// No admissible `σ_8` coefficient gives a member.
    NoMatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub printed: [i64; RANK],
    pub status: EntryStatus,
    /// Matched member, as `q_1..q_8`.
    pub member: Option<[i64; RANK]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconcileReport {
    pub index: usize,
    pub printed_count: usize,
    pub computed_count: usize,
    pub counts_agree: bool,
    pub entries: Vec<EntryReport>,
    /// Computed members matched by no printed entry.
    pub unmatched_members: Vec<[i64; RANK]>,
}

fn reconcile(printed: &[[i64; RANK]], set: &SigmaSet, index: usize) -> ReconcileReport {
    let truth = set.q_set();
    let target = lattice::label_inner(&set.source.r.map(i64::from), &set.source.r.map(i64::from));
    let mut matched = BTreeSet::new();
    let entries: Vec<EntryReport> = printed
        .iter()
        .map(|a| {
            let q = sigma_to_q(a);
            if a.iter().all(|&x| x >= 0) && truth.contains(&q) {
                matched.insert(q);
                return EntryReport { printed: *a, status: EntryStatus::Exact, member: Some(q) };
            }
            let s7: [i64; RANK - 1] = std::array::from_fn(|k| a[k]);
            for t in solve_sigma8(&s7, target) {
                let mut b = *a;
                b[RANK - 1] = t;
                let q = sigma_to_q(&b);
                if truth.contains(&q) {
                    matched.insert(q);
                    return EntryReport {
                        printed: *a,
                        status: EntryStatus::Sigma8Adjusted { printed: a[RANK - 1], solved: t },
                        member: Some(q),
                    };
                }
            }
            EntryReport { printed: *a, status: EntryStatus::NoMatch, member: None }
        })
        .collect();
    ReconcileReport {
        index,
        printed_count: printed.len(),
        computed_count: truth.len(),
        counts_agree: printed.len() == truth.len(),
        entries,
        unmatched_members: truth.difference(&matched).copied().collect(),
    }
}

/// Compares the printed fundamental set `Σ(λ_i)` with the transversal.
pub fn reconcile_appendix1(i: usize) -> Result<ReconcileReport> {
    let printed =
        appendix1::printed_set(i).ok_or(Error::IndexOutOfRange { index: i, lo: 1, hi: RANK })?;
    let set = sigma_set_transversal(&DominantE8::fundamental(i)?);
    Ok(reconcile(printed, &set, i))
}

/// Same comparison for the printed `Σ(λ_1 + λ_7)` example.
pub fn reconcile_sum_example() -> ReconcileReport {
    let l = DominantE8::fundamental(1).unwrap().plus(&DominantE8::fundamental(7).unwrap());
    reconcile(&appendix1::SET_1_PLUS_7, &sigma_set_transversal(&l), 0)
}

/// A8 orbit size straight from a rational weight, for callers outside the
/// integer fast path.
pub fn orbit_size_of(w: &MuVector) -> u64 {
    a8_dominantize(w).1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::e8_weight_to_mu;

    fn lam(i: usize) -> DominantE8 {
        DominantE8::fundamental(i).unwrap()
    }

    #[test]
    fn dominantize_examples() {
        let (q, n) = a8_dominantize(&MuVector::from_ints([1, 1, 1, 0, 0, 0, 0, 0, 0]));
        assert_eq!(q, DominantA8::from_ints([1, 1, 1, 0, 0, 0, 0, 0]).unwrap());
        assert_eq!(n, 84);
        assert_eq!(a8_dominantize(&MuVector::zero()).1, 1);
        assert_eq!(a8_dominantize(&MuVector::from_ints([2, 1, 1, 1, 1, 1, 1, 1, 0])).1, 72);
        let (q, _) = a8_dominantize(&MuVector::from_ints([0, -1, 0, 3, 0, 0, 0, 0, 0]));
        assert_eq!(q, DominantA8::from_ints([4, 1, 1, 1, 1, 1, 1, 1]).unwrap());
    }

    #[test]
    fn reflection_examples() {
        let l1 = e8_weight_to_mu(&lam(1));
        let b = lattice::simple_roots();
        assert_eq!(reflect(&l1, &b[0]).unwrap(), l1.sub(&b[0]));
        let w = MuVector::from_ints([3, -1, 4, 1, -5, 9, 2, 6, 0]);
        assert_eq!(reflect(&reflect(&w, &b[7]).unwrap(), &b[7]).unwrap(), w);
        assert_eq!(reflect(&MuVector::zero(), &b[3]).unwrap(), MuVector::zero());
        assert!(matches!(reflect(&w, &l1.scale(&int(2))), Err(Error::NotARoot(_))));
        let r = reflect(&w, &b[7]).unwrap();
        assert_eq!(mu_inner(&r, &r), mu_inner(&w, &w));
    }

    #[test]
    fn adjoint_sigma_set() {
        let s = sigma_set_transversal(&lam(1));
        let qs: Vec<[i64; 8]> = s.members.iter().map(|m| m.q_ints()).collect();
        assert_eq!(
            qs,
            vec![[2, 1, 1, 1, 1, 1, 1, 1], [1, 1, 1, 1, 1, 1, 0, 0], [1, 1, 1, 0, 0, 0, 0, 0]]
        );
        let sizes: Vec<u64> = s.members.iter().map(|m| m.a8_orbit_size).collect();
        assert_eq!(sizes, vec![72, 84, 84]);
        assert_eq!(s.e8_orbit_size, 240);
        assert_eq!(s.orbit_size_sum(), 240);
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(e8_orbit_size(&lam(1)), 240);
        assert_eq!(e8_orbit_size(&DominantE8::ZERO), 1);
        assert_eq!(e8_orbit_size(&lam(7)), 696_729_600 / ((1 << 6) * 5040));
        assert_eq!(e8_orbit_size(&DominantE8::new([1; 8])), WEYL_E8_ORDER);
    }

    #[test]
    fn e8_dominantize_reaches_chamber() {
        let l = e8_dominantize_labels([-1, 0, 0, 0, 0, 0, 0, 0]);
        assert!(l.iter().all(|&x| x >= 0));
        assert_eq!(lattice::label_inner(&l, &l), 2);
    }

    #[test]
    fn sigma_coordinates_roundtrip() {
        let a = [1, 0, 2, 0, 0, 1, 0, 3];
        assert_eq!(q_to_sigma(&sigma_to_q(&a)), a);
    }

    #[test]
    fn json_roundtrip() {
        let s = sigma_set_transversal(&lam(7));
        assert_eq!(SigmaSet::from_json(&s.to_json()), Some(s));
    }

    #[test]
    fn registry_methods_agree() {
        let reg = sigma_set_registry();
        assert_eq!(reg.names(), ["sumset", "transversal"]);
        for l in [DominantE8::fundamental(1).unwrap(), DominantE8::fundamental(7).unwrap()] {
            let a = reg.get("transversal").unwrap().sigma_set(&l).unwrap();
            let b = reg.get("sumset").unwrap().sigma_set(&l).unwrap();
            assert_eq!(a.q_set(), b.q_set());
        }
        assert!(reg.get("nope").is_err());
    }
}