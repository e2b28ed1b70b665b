use num_integer::gcd;
use serde::Serialize;

use crate::zmodsnf::hom::{in_image, zhom_cokernel, zhom_kernel, ZModHom};
use crate::zmodsnf::matrix::{IntMat, ZError};
use crate::zmodsnf::snf::{solve, SolveOutcome};

/// Why an embedded submodule admits no complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZObstruction {
    /// All elements of order dividing `q` already lie in the submodule,
    /// yet the quotient has `q`-torsion, so a complement (isomorphic to
    /// the quotient) cannot exist.
    TorsionContainment { q: i64 },
    /// The retraction system has no integer solution: a transformed
    /// equation demands `factor | value` (factor 0 encodes an
    /// inconsistent equation).
    NoIntegerRetraction { factor: i64, value: i64 },
}

#[derive(Debug, Clone, Serialize)]
pub enum ZSummandVerdict {
    /// Split confirmed by an explicit retraction with
    /// `retraction ∘ inclusion = id`.
    Holds { retraction: ZModHom },
    Fails { obstruction: ZObstruction },
}

impl ZSummandVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ZSummandVerdict::Holds { .. })
    }
}

/// Decides whether the image of an injective `inclusion: N -> M` is a
/// direct summand of `M`, by solving for a retraction `M -> N` as an
/// integer-linear congruence system via Smith normal form.
pub fn zsummand_test(inclusion: &ZModHom) -> Result<ZSummandVerdict, ZError> {
    let kernel = zhom_kernel(inclusion)?;
    if !kernel.module.is_zero() {
        return Err(ZError::InvalidHom(
            "zsummand_test requires an injective inclusion".into(),
        ));
    }
    let n = &inclusion.source; // the submodule
    let m = &inclusion.target;
    let a = &inclusion.matrix; // m.gens() x n.gens()

    // Unknowns: entries of the retraction matrix X (n.gens() rows,
    // m.gens() cols) with the block constraints substituted in, plus
    // slack multiples of the torsion orders for congruence rows.
    let mut var_count = 0usize;
    let mut entry_var: Vec<Vec<Option<(usize, i64)>>> = vec![vec![None; m.gens()]; n.gens()];
    for i in 0..n.gens() {
        for j in 0..m.gens() {
            let scale = match (n.gen_order(i), m.gen_order(j)) {
                (_, None) => 1,                      // free source column
                (None, Some(_)) => continue,         // torsion -> free is zero
                (Some(d), Some(e)) => d / gcd(d, e), // torsion -> torsion
            };
            entry_var[i][j] = Some((var_count, scale));
            var_count += 1;
        }
    }
    // constraint rows: for each (target gen i of N, source gen t of N):
    //   sum_j X[i][j] A[j][t] (+ d_i * slack) = delta_{it}
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<i64> = Vec::new();
    let mut slack_rows: Vec<usize> = Vec::new();
    for i in 0..n.gens() {
        for t in 0..n.gens() {
            let mut row = vec![0i64; var_count];
            for j in 0..m.gens() {
                if let Some((v, scale)) = entry_var[i][j] {
                    let coeff = scale.checked_mul(a[(j, t)]).ok_or(ZError::Overflow)?;
                    row[v] = row[v].checked_add(coeff).ok_or(ZError::Overflow)?;
                }
            }
            if n.gen_order(i).is_some() {
                slack_rows.push(rows.len());
            }
            rows.push(row);
            rhs.push(if i == t { 1 } else { 0 });
        }
    }
    // append slack columns
    let slack_count = slack_rows.len();
    for row in rows.iter_mut() {
        row.extend(std::iter::repeat(0).take(slack_count));
    }
    for (s, row_idx) in slack_rows.iter().enumerate() {
        let i = row_idx / n.gens();
        let d = n.gen_order(i).expect("slack rows are torsion rows");
        rows[*row_idx][var_count + s] = d;
    }
    let system = IntMat::from_rows(rows)?;
    match solve(&system, &rhs)? {
        SolveOutcome::Solution(x) => {
            let mut ret = IntMat::zeros(n.gens(), m.gens());
            for i in 0..n.gens() {
                for j in 0..m.gens() {
                    if let Some((v, scale)) = entry_var[i][j] {
                        ret[(i, j)] = x[v].checked_mul(scale).ok_or(ZError::Overflow)?;
                    }
                }
            }
            let retraction = ZModHom::new(m.clone(), n.clone(), ret)?;
            let composite = retraction.after(inclusion)?;
            if !composite.is_identity() {
                return Err(ZError::InvalidHom(
                    "internal error: solved retraction does not invert the inclusion".into(),
                ));
            }
            Ok(ZSummandVerdict::Holds { retraction })
        }
        SolveOutcome::NoSolution { factor, value } => {
            let obstruction = torsion_containment(inclusion)?
                .unwrap_or(ZObstruction::NoIntegerRetraction { factor, value });
            Ok(ZSummandVerdict::Fails { obstruction })
        }
    }
}

/// Looks for the counting obstruction: some `q` with nontrivial
/// `q`-torsion in both M and M/N where every element of order dividing
/// `q` already lies in N.
fn torsion_containment(inclusion: &ZModHom) -> Result<Option<ZObstruction>, ZError> {
    let m = &inclusion.target;
    let coker = zhom_cokernel(inclusion)?;
    let mut qs: Vec<i64> = coker.torsion.clone();
    qs.dedup();
    for q in qs {
        let Some(elems) = m.torsion_elements(q, 256) else {
            continue;
        };
        if elems.len() <= 1 {
            continue; // no nontrivial q-torsion in M to contain
        }
        let mut all_inside = true;
        for e in &elems {
            if !in_image(inclusion, e)? {
                all_inside = false;
                break;
            }
        }
        if all_inside {
            return Ok(Some(ZObstruction::TorsionContainment { q }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zmodsnf::fgmod::FgZModule;

    fn hom(src: FgZModule, tgt: FgZModule, rows: Vec<Vec<i64>>) -> ZModHom {
        ZModHom::new(src, tgt, IntMat::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn two_z_in_z_does_not_split() {
        let incl = hom(FgZModule::free(1), FgZModule::free(1), vec![vec![2]]);
        let v = zsummand_test(&incl).unwrap();
        let ZSummandVerdict::Fails { obstruction } = v else {
            panic!("2Z must not split off Z")
        };
        assert_eq!(
            obstruction,
            ZObstruction::NoIntegerRetraction { factor: 2, value: 1 }
        );
    }

    #[test]
    fn canonical_factor_splits_with_projection() {
        // Z (+) 0 inside Z (+) Z_2
        let m = FgZModule::new(1, vec![2]).unwrap();
        let incl = hom(FgZModule::free(1), m.clone(), vec![vec![1], vec![0]]);
        let v = zsummand_test(&incl).unwrap();
        let ZSummandVerdict::Holds { retraction } = v else {
            panic!("canonical factor must split")
        };
        assert_eq!(retraction.matrix.to_rows(), vec![vec![1, 0]]);
    }

    #[test]
    fn socle_containment_blocks_splitting() {
        // 2Z (+) Z_2 inside Z (+) Z_2: the unique order-2 element lies
        // inside, and the quotient is Z_2
        let m = FgZModule::new(1, vec![2]).unwrap();
        let sub = FgZModule::new(1, vec![2]).unwrap();
        let incl = hom(sub, m, vec![vec![2, 0], vec![0, 1]]);
        let v = zsummand_test(&incl).unwrap();
        let ZSummandVerdict::Fails { obstruction } = v else {
            panic!("must not split")
        };
        assert_eq!(obstruction, ZObstruction::TorsionContainment { q: 2 });
    }

    #[test]
    fn torsion_summand_inside_torsion_module() {
        // Z_2 = 2Z_4 inside Z_4 does not split
        let m = FgZModule::new(0, vec![4]).unwrap();
        let sub = FgZModule::new(0, vec![2]).unwrap();
        let incl = hom(sub, m, vec![vec![2]]);
        assert!(!zsummand_test(&incl).unwrap().holds());
        // but Z_2 splits off Z_2 (+) Z_4 as the first coordinate
        let m = FgZModule::new(0, vec![2, 4]).unwrap();
        let sub = FgZModule::new(0, vec![2]).unwrap();
        let incl = hom(sub, m, vec![vec![1], vec![0]]);
        assert!(zsummand_test(&incl).unwrap().holds());
    }

    #[test]
    fn non_injective_inclusion_is_rejected() {
        let z2 = FgZModule::new(0, vec![2]).unwrap();
        let z = FgZModule::free(1);
        let not_injective = ZModHom::zero(z2, z);
        assert!(zsummand_test(&not_injective).is_err());
    }
}
