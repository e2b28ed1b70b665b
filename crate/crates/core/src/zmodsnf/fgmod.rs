use serde::{Deserialize, Serialize};

use crate::zmodsnf::matrix::{IntMat, ZError};
use crate::zmodsnf::snf::smith_normal_form;

/// A finitely generated abelian group in canonical form:
/// `Z^rank ⊕ Z_{d_1} ⊕ ... ⊕ Z_{d_k}` with `2 <= d_1 | d_2 | ... | d_k`.
///
/// Generators are ordered free part first, then torsion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgZModule {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl FgZModule {
    /// Canonicalizes an arbitrary torsion list (reordering and merging
    /// into a divisibility chain, dropping trivial factors) via the
    /// Smith normal form of the diagonal relation matrix.
    pub fn new(rank: usize, torsion: Vec<i64>) -> Result<FgZModule, ZError> {
        if torsion.iter().any(|&d| d < 1) {
            return Err(ZError::InvalidModule(
                "torsion orders must be positive".into(),
            ));
        }
        let k = torsion.len();
        let mut diag = IntMat::zeros(k, k);
        for (i, &d) in torsion.iter().enumerate() {
            diag[(i, i)] = d;
        }
        let snf = smith_normal_form(&diag)?;
        let torsion: Vec<i64> = snf
            .invariant_factors()
            .into_iter()
            .filter(|&d| d > 1)
            .collect();
        Ok(FgZModule { rank, torsion })
    }

    pub fn free(rank: usize) -> FgZModule {
        FgZModule {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn zero() -> FgZModule {
        FgZModule {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Number of generators in the canonical presentation.
    pub fn gens(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// `None` for free generators, `Some(d)` for torsion ones.
    pub fn gen_order(&self, i: usize) -> Option<i64> {
        if i < self.rank {
            None
        } else {
            Some(self.torsion[i - self.rank])
        }
    }

    /// Canonicalizes an element's coordinate vector (torsion entries
    /// reduced to `0..d`).
    pub fn canonical_element(&self, coords: &[i64]) -> Vec<i64> {
        coords
            .iter()
            .enumerate()
            .map(|(i, &c)| match self.gen_order(i) {
                None => c,
                Some(d) => c.rem_euclid(d),
            })
            .collect()
    }

    /// All elements of order dividing `q` (finite because free
    /// coordinates must vanish). `None` if the count exceeds `limit`.
    pub fn torsion_elements(&self, q: i64, limit: usize) -> Option<Vec<Vec<i64>>> {
        let mut count: usize = 1;
        let steps: Vec<i64> = self
            .torsion
            .iter()
            .map(|&d| {
                let g = num_integer::gcd(d, q);
                count = count.saturating_mul(g as usize);
                d / g
            })
            .collect();
        if count > limit {
            return None;
        }
        let mut out = Vec::with_capacity(count);
        let mut idx = vec![0i64; self.torsion.len()];
        loop {
            let mut coords = vec![0i64; self.rank];
            coords.extend(idx.iter().zip(&steps).map(|(&i, &s)| i * s));
            out.push(coords);
            let mut p = self.torsion.len();
            loop {
                if p == 0 {
                    return Some(out);
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] * steps[p] < self.torsion[p] {
                    break;
                }
                idx[p] = 0;
            }
        }
    }
}

impl std::fmt::Display for FgZModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.rank == 1 {
            parts.push("Z".into());
        } else if self.rank > 1 {
            parts.push(format!("Z^{}", self.rank));
        }
        for d in &self.torsion {
            parts.push(format!("Z_{d}"));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join(" (+) "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalization_merges_coprime_factors() {
        let m = FgZModule::new(0, vec![2, 3]).unwrap();
        assert_eq!(m.torsion, vec![6]);
        let m = FgZModule::new(1, vec![4, 2, 3]).unwrap();
        assert_eq!(m.torsion, vec![2, 12]);
        let m = FgZModule::new(0, vec![1, 1]).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn torsion_elements_of_mixed_module() {
        // Z (+) Z_2: elements of order dividing 2 are (0,0) and (0,1)
        let m = FgZModule::new(1, vec![2]).unwrap();
        let elems = m.torsion_elements(2, 100).unwrap();
        assert_eq!(elems, vec![vec![0, 0], vec![0, 1]]);
        // Z_2 (+) Z_4: four elements of order dividing 2
        let m = FgZModule::new(0, vec![2, 4]).unwrap();
        assert_eq!(m.torsion_elements(2, 100).unwrap().len(), 4);
    }

    #[test]
    fn display_forms() {
        assert_eq!(FgZModule::new(1, vec![2]).unwrap().to_string(), "Z (+) Z_2");
        assert_eq!(FgZModule::free(2).to_string(), "Z^2");
        assert_eq!(FgZModule::zero().to_string(), "0");
    }
}
