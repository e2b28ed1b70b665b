use num_integer::gcd;
use serde::Serialize;

use crate::zmodsnf::fgmod::FgZModule;
use crate::zmodsnf::matrix::{IntMat, ZError};
use crate::zmodsnf::snf::{smith_normal_form, unimodular_inverse};

/// A homomorphism of finitely generated abelian groups, stored as an
/// integer matrix with one column per source generator (targets in
/// rows, free rows first). Torsion rows are kept in canonical residues.
///
/// Block constraints: a torsion generator maps to zero in every free
/// coordinate, and its torsion coordinates are multiples of
/// `d_target / gcd(d_target, d_source)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZModHom {
    pub source: FgZModule,
    pub target: FgZModule,
    pub matrix: IntMat,
}

impl ZModHom {
    pub fn new(source: FgZModule, target: FgZModule, matrix: IntMat) -> Result<ZModHom, ZError> {
        if matrix.rows() != target.gens() || matrix.cols() != source.gens() {
            return Err(ZError::Shape(format!(
                "hom matrix must be {}x{}, got {}x{}",
                target.gens(),
                source.gens(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        let mut canonical = matrix;
        for i in 0..canonical.rows() {
            if let Some(d) = target.gen_order(i) {
                for j in 0..canonical.cols() {
                    canonical[(i, j)] = canonical[(i, j)].rem_euclid(d);
                }
            }
        }
        for j in 0..canonical.cols() {
            let Some(e) = source.gen_order(j) else { continue };
            for i in 0..canonical.rows() {
                match target.gen_order(i) {
                    None => {
                        if canonical[(i, j)] != 0 {
                            return Err(ZError::InvalidHom(format!(
                                "torsion generator {j} maps to a nonzero free coordinate"
                            )));
                        }
                    }
                    Some(d) => {
                        let need = d / gcd(d, e);
                        if canonical[(i, j)] % need != 0 {
                            return Err(ZError::InvalidHom(format!(
                                "entry ({i},{j}) = {} must be a multiple of {need}",
                                canonical[(i, j)]
                            )));
                        }
                    }
                }
            }
        }
        Ok(ZModHom {
            source,
            target,
            matrix: canonical,
        })
    }

    pub fn zero(source: FgZModule, target: FgZModule) -> ZModHom {
        let m = IntMat::zeros(target.gens(), source.gens());
        ZModHom::new(source, target, m).expect("zero map is valid")
    }

    pub fn identity(module: FgZModule) -> ZModHom {
        let m = IntMat::identity(module.gens());
        ZModHom::new(module.clone(), module, m).expect("identity is valid")
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && *self == ZModHom::identity(self.source.clone())
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn after(&self, other: &ZModHom) -> Result<ZModHom, ZError> {
        if other.target != self.source {
            return Err(ZError::Shape("composition shape mismatch".into()));
        }
        let m = self.matrix.mul(&other.matrix)?;
        ZModHom::new(other.source.clone(), self.target.clone(), m)
    }

    /// Image of an element given by coordinates in the source.
    pub fn apply(&self, coords: &[i64]) -> Result<Vec<i64>, ZError> {
        if coords.len() != self.source.gens() {
            return Err(ZError::Shape("element length".into()));
        }
        let mut out = vec![0i64; self.target.gens()];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = 0i64;
            for (j, &c) in coords.iter().enumerate() {
                let p = self.matrix[(i, j)].checked_mul(c).ok_or(ZError::Overflow)?;
                acc = acc.checked_add(p).ok_or(ZError::Overflow)?;
            }
            *o = acc;
        }
        Ok(self.target.canonical_element(&out))
    }

    /// Relation matrix of the target: columns `d_j * e_{torsion j}`.
    pub(crate) fn relation_matrix(module: &FgZModule) -> IntMat {
        let n = module.gens();
        let k = module.torsion.len();
        let mut g = IntMat::zeros(n, k);
        for (j, &d) in module.torsion.iter().enumerate() {
            g[(module.rank + j, j)] = d;
        }
        g
    }
}

/// Kernel of a homomorphism, presented canonically with an explicit
/// inclusion into the source.
#[derive(Debug, Clone, Serialize)]
pub struct ZKernel {
    pub module: FgZModule,
    pub inclusion: ZModHom,
}

/// Computes the kernel by lifting to a free presentation and running
/// one Smith normal form: with `T = [A | G_target]`, the kernel of the
/// induced map is the projection of `ker_Z(T)` to the source
/// coordinates, modulo the source relations.
pub fn zhom_kernel(h: &ZModHom) -> Result<ZKernel, ZError> {
    let ns = h.source.gens();
    let t = h.matrix.hstack(&ZModHom::relation_matrix(&h.target))?;
    let snf_t = smith_normal_form(&t)?;
    let rank_t = snf_t.rank();
    let vt = snf_t.v.to_intmat()?;
    // generators of W = { v : A v lies in the target relation lattice }
    let w_cols: Vec<Vec<i64>> = (rank_t..t.cols())
        .map(|c| (0..ns).map(|r| vt[(r, c)]).collect())
        .collect();
    // basis of the lattice spanned by w_cols
    let b = if w_cols.is_empty() {
        IntMat::zeros(ns, 0)
    } else {
        let mut m = IntMat::zeros(ns, w_cols.len());
        for (j, col) in w_cols.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    };
    let snf_b = smith_normal_form(&b)?;
    let rank_w = snf_b.rank();
    let ub = snf_b.u.to_intmat()?;
    let u_inv = unimodular_inverse(&snf_b.u)?.to_intmat()?;
    // basis vectors w_i = D_B[i][i] * (column i of U_B^{-1})
    let basis: Vec<Vec<i64>> = (0..rank_w)
        .map(|i| {
            (0..ns)
                .map(|r| u_inv[(r, i)].checked_mul(snf_b.d[(i, i)]).ok_or(ZError::Overflow))
                .collect::<Result<Vec<i64>, ZError>>()
        })
        .collect::<Result<_, _>>()?;
    // express the source relations in the W basis: for relation g,
    // coefficient i is (U_B g)_i / D_B[i][i]
    let ks = h.source.torsion.len();
    let mut c = IntMat::zeros(rank_w, ks);
    for (j, &d) in h.source.torsion.iter().enumerate() {
        let mut g = vec![0i64; ns];
        g[h.source.rank + j] = d;
        for i in 0..ns {
            let mut acc = 0i64;
            for (r, &gr) in g.iter().enumerate() {
                let p = ub[(i, r)].checked_mul(gr).ok_or(ZError::Overflow)?;
                acc = acc.checked_add(p).ok_or(ZError::Overflow)?;
            }
            if i < rank_w {
                let di = snf_b.d[(i, i)];
                debug_assert_eq!(acc % di, 0, "source relations must lie in W");
                c[(i, j)] = acc / di;
            } else {
                debug_assert_eq!(acc, 0, "source relations must lie in W");
            }
        }
    }
    // kernel = Z^rank_w / C Z^ks
    let snf_c = smith_normal_form(&c)?;
    let uc_inv = unimodular_inverse(&snf_c.u)?.to_intmat()?;
    let factor_of = |t: usize| -> i64 {
        if t < rank_w.min(ks) {
            snf_c.d[(t, t)]
        } else {
            0
        }
    };
    // generator vectors in source coordinates
    let mut free_gens: Vec<Vec<i64>> = Vec::new();
    let mut torsion_gens: Vec<(i64, Vec<i64>)> = Vec::new();
    for t in 0..rank_w {
        let f = factor_of(t);
        if f == 1 {
            continue;
        }
        let mut vec_t = vec![0i64; ns];
        for i in 0..rank_w {
            for (r, v) in vec_t.iter_mut().enumerate() {
                let p = uc_inv[(i, t)]
                    .checked_mul(basis[i][r])
                    .ok_or(ZError::Overflow)?;
                *v = v.checked_add(p).ok_or(ZError::Overflow)?;
            }
        }
        // sign normalization for stable output
        if let Some(&first) = vec_t.iter().find(|&&x| x != 0) {
            if first < 0 {
                for v in vec_t.iter_mut() {
                    *v = -*v;
                }
            }
        }
        if f == 0 {
            free_gens.push(vec_t);
        } else {
            torsion_gens.push((f, vec_t));
        }
    }
    let kernel_module = FgZModule::new(
        free_gens.len(),
        torsion_gens.iter().map(|(f, _)| *f).collect(),
    )?;
    let mut incl = IntMat::zeros(ns, kernel_module.gens());
    for (j, v) in free_gens.iter().chain(torsion_gens.iter().map(|(_, v)| v)).enumerate() {
        for (i, &x) in v.iter().enumerate() {
            incl[(i, j)] = x;
        }
    }
    let inclusion = ZModHom::new(kernel_module.clone(), h.source.clone(), incl)?;
    // the inclusion must compose with h to the zero map
    let composite = h.after(&inclusion)?;
    if !composite.is_zero() {
        return Err(ZError::InvalidHom(
            "internal error: kernel inclusion does not annihilate".into(),
        ));
    }
    Ok(ZKernel {
        module: kernel_module,
        inclusion,
    })
}

/// Cokernel presentation: invariant factors of
/// `Z^{n_target} / (im A + relations)`.
pub fn zhom_cokernel(h: &ZModHom) -> Result<FgZModule, ZError> {
    let t = h.matrix.hstack(&ZModHom::relation_matrix(&h.target))?;
    let snf = smith_normal_form(&t)?;
    let nt = h.target.gens();
    let factors = snf.invariant_factors();
    let rank = nt - factors.len();
    FgZModule::new(rank, factors.into_iter().filter(|&f| f > 1).collect())
}

/// Does `elem` (coordinates in the target of `incl`) lie in the image
/// of `incl`? Decided by solving `[A | G_target] y = elem` over Z.
pub fn in_image(incl: &ZModHom, elem: &[i64]) -> Result<bool, ZError> {
    let t = incl.matrix.hstack(&ZModHom::relation_matrix(&incl.target))?;
    match crate::zmodsnf::snf::solve(&t, elem)? {
        crate::zmodsnf::snf::SolveOutcome::Solution(_) => Ok(true),
        crate::zmodsnf::snf::SolveOutcome::NoSolution { .. } => Ok(false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hom(src: FgZModule, tgt: FgZModule, rows: Vec<Vec<i64>>) -> ZModHom {
        ZModHom::new(src, tgt, IntMat::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn reduction_map_kernel_is_two_z() {
        // f: Z -> Z_2, x -> x mod 2
        let f = hom(FgZModule::free(1), FgZModule::new(0, vec![2]).unwrap(), vec![vec![1]]);
        let k = zhom_kernel(&f).unwrap();
        assert_eq!(k.module, FgZModule::free(1));
        assert_eq!(k.inclusion.matrix.to_rows(), vec![vec![2]]);
    }

    #[test]
    fn mixed_kernel_example() {
        // phi on Z (+) Z_2 with phi(x, a) = (0, x mod 2)
        let m = FgZModule::new(1, vec![2]).unwrap();
        let phi = hom(m.clone(), m.clone(), vec![vec![0, 0], vec![1, 0]]);
        let k = zhom_kernel(&phi).unwrap();
        assert_eq!(k.module, FgZModule::new(1, vec![2]).unwrap());
        // inclusion (x, a) -> (2x, a)
        assert_eq!(k.inclusion.matrix.to_rows(), vec![vec![2, 0], vec![0, 1]]);
    }

    #[test]
    fn identity_kernel_is_zero() {
        let m = FgZModule::free(2);
        let k = zhom_kernel(&ZModHom::identity(m)).unwrap();
        assert!(k.module.is_zero());
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let m = FgZModule::new(1, vec![4]).unwrap();
        let k = zhom_kernel(&ZModHom::zero(m.clone(), m.clone())).unwrap();
        assert_eq!(k.module, m);
        // inclusion is an isomorphism onto the whole module
        let coker = zhom_cokernel(&k.inclusion).unwrap();
        assert!(coker.is_zero());
    }

    #[test]
    fn cokernel_examples() {
        // multiplication by 2 on Z has cokernel Z_2
        let dbl = hom(FgZModule::free(1), FgZModule::free(1), vec![vec![2]]);
        assert_eq!(zhom_cokernel(&dbl).unwrap(), FgZModule::new(0, vec![2]).unwrap());
        // surjection Z -> Z_2 has zero cokernel
        let f = hom(FgZModule::free(1), FgZModule::new(0, vec![2]).unwrap(), vec![vec![1]]);
        assert!(zhom_cokernel(&f).unwrap().is_zero());
    }

    #[test]
    fn invalid_block_is_rejected() {
        // Z_2 cannot map onto a free generator
        let err = ZModHom::new(
            FgZModule::new(0, vec![2]).unwrap(),
            FgZModule::free(1),
            IntMat::from_rows(vec![vec![1]]).unwrap(),
        );
        assert!(err.is_err());
        // Z_2 -> Z_4 must land in 2Z_4
        let err = ZModHom::new(
            FgZModule::new(0, vec![2]).unwrap(),
            FgZModule::new(0, vec![4]).unwrap(),
            IntMat::from_rows(vec![vec![1]]).unwrap(),
        );
        assert!(err.is_err());
        let ok = ZModHom::new(
            FgZModule::new(0, vec![2]).unwrap(),
            FgZModule::new(0, vec![4]).unwrap(),
            IntMat::from_rows(vec![vec![2]]).unwrap(),
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn image_membership() {
        // inclusion of 2Z (+) Z_2 into Z (+) Z_2
        let m = FgZModule::new(1, vec![2]).unwrap();
        let sub = FgZModule::new(1, vec![2]).unwrap();
        let incl = hom(sub, m, vec![vec![2, 0], vec![0, 1]]);
        assert!(in_image(&incl, &[4, 1]).unwrap());
        assert!(!in_image(&incl, &[3, 0]).unwrap());
        assert!(in_image(&incl, &[0, 1]).unwrap());
    }

    #[test]
    fn kernel_of_torsion_projection() {
        // Z_2 (+) Z_4 -> Z_2, (a, b) -> a + b mod 2... must respect
        // validity: entry for the Z_4 generator must be a multiple of
        // 2/gcd(2,4) = 1, fine.
        let src = FgZModule::new(0, vec![2, 4]).unwrap();
        let tgt = FgZModule::new(0, vec![2]).unwrap();
        let f = hom(src, tgt, vec![vec![1, 1]]);
        let k = zhom_kernel(&f).unwrap();
        // kernel has 4 elements: {(0,0),(0,2),(1,1),(1,3)} = Z_4 generated by (1,1)
        assert_eq!(k.module, FgZModule::new(0, vec![4]).unwrap());
    }
}
