//! Sparse integer polynomials in eight variables, used for exact expansion
//! of power-sum identities after eliminating the ninth variable.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub const NVARS: usize = 8;

/// Exponent vector packed one byte per variable; degrees stay below 256.
pub type Mono = u64;

fn mono_from(e: &[u8; NVARS]) -> Mono {
    u64::from_le_bytes(*e)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    pub terms: HashMap<Mono, i128>,
}

fn overflow() -> Error {
    Error::InvalidArgument("polynomial coefficient overflow".into())
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: i128) -> Self {
        let mut p = Poly::zero();
        if c != 0 {
            p.terms.insert(0, c);
        }
        p
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u8; NVARS];
        e[i] = 1;
        let mut p = Poly::zero();
        p.terms.insert(mono_from(&e), 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, o: &Poly, c: i128) -> Result<()> {
        for (m, v) in &o.terms {
            let add = v.checked_mul(c).ok_or_else(overflow)?;
            let e = self.terms.entry(*m).or_insert(0);
            *e = e.checked_add(add).ok_or_else(overflow)?;
            if *e == 0 {
                self.terms.remove(m);
            }
        }
        Ok(())
    }

    pub fn mul(&self, o: &Poly) -> Result<Poly> {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let small: Vec<(Mono, i128)> = small.terms.iter().map(|(m, v)| (*m, *v)).collect();
        let chunks: Vec<(Mono, i128)> = big.terms.iter().map(|(m, v)| (*m, *v)).collect();
        let partials: Vec<Result<HashMap<Mono, i128>>> = chunks
            .par_chunks(4096)
            .map(|chunk| {
                let mut acc: HashMap<Mono, i128> = HashMap::new();
                for (ma, va) in chunk {
                    for (mb, vb) in &small {
                        let v = va.checked_mul(*vb).ok_or_else(overflow)?;
                        let e = acc.entry(ma + mb).or_insert(0);
                        *e = e.checked_add(v).ok_or_else(overflow)?;
                    }
                }
                Ok(acc)
            })
            .collect();
        let mut out = Poly::zero();
        for part in partials {
            for (m, v) in part? {
                let e = out.terms.entry(m).or_insert(0);
                *e = e.checked_add(v).ok_or_else(overflow)?;
            }
        }
        out.terms.retain(|_, v| *v != 0);
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Poly> {
        let mut out = Poly::constant(1);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }
}

/// `p_k(x_1..x_8, x_9)` with `x_9 = −(x_1 + … + x_8)`.
pub fn power_sum_eliminated(k: u32) -> Result<Poly> {
    let mut s = Poly::zero();
    for i in 0..NVARS {
        s.add_scaled(&Poly::var(i), -1)?;
    }
    let mut p = s.pow(k)?;
    for i in 0..NVARS {
        p.add_scaled(&Poly::var(i).pow(k)?, 1)?;
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_vanishes() {
        assert!(power_sum_eliminated(1).unwrap().is_zero());
    }

    #[test]
    fn binomial_square() {
        let mut x = Poly::var(0);
        x.add_scaled(&Poly::var(1), 1).unwrap();
        let sq = x.pow(2).unwrap();
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.terms.values().copied().max(), Some(2));
    }

    #[test]
    fn p2_term_count() {
        // x_i² for each i plus all x_i x_j from the eliminated variable.
        assert_eq!(power_sum_eliminated(2).unwrap().len(), 8 + 28);
    }
}
