use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ZError {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("invalid module presentation: {0}")]
    InvalidModule(String),
}

/// Dense integer matrix with overflow-checked arithmetic. Entries are
/// `i64`; every arithmetic path returns an explicit error instead of
/// wrapping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> IntMat {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> IntMat {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<IntMat, ZError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(ZError::Shape("ragged rows".into()));
        }
        Ok(IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Matrix product, accumulated in i128 so that intermediate terms
    /// may exceed the entry range as long as the result fits.
    pub fn mul(&self, other: &IntMat) -> Result<IntMat, ZError> {
        if self.cols != other.rows {
            return Err(ZError::Shape(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i128 = 0;
                for k in 0..self.cols {
                    let p = (self[(i, k)] as i128)
                        .checked_mul(other[(k, j)] as i128)
                        .ok_or(ZError::Overflow)?;
                    acc = acc.checked_add(p).ok_or(ZError::Overflow)?;
                }
                out[(i, j)] = i64::try_from(acc).map_err(|_| ZError::Overflow)?;
            }
        }
        Ok(out)
    }

    /// Glues `other` to the right.
    pub fn hstack(&self, other: &IntMat) -> Result<IntMat, ZError> {
        if self.rows != other.rows {
            return Err(ZError::Shape("hstack row mismatch".into()));
        }
        let mut out = IntMat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)];
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Display for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Dense big-integer matrix for the unimodular transforms of the
/// Smith normal form, whose entries can legitimately outgrow `i64`
/// even for small inputs. Arithmetic here is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigMat {
    rows: usize,
    cols: usize,
    data: Vec<num_bigint::BigInt>,
}

impl BigMat {
    pub fn zeros(rows: usize, cols: usize) -> BigMat {
        BigMat {
            rows,
            cols,
            data: vec![num_bigint::BigInt::from(0); rows * cols],
        }
    }
    pub fn identity(n: usize) -> BigMat {
        let mut m = BigMat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = num_bigint::BigInt::from(1);
        }
        m
    }
    pub fn from_mat(m: &IntMat) -> BigMat {
        BigMat {
            rows: m.rows(),
            cols: m.cols(),
            data: m
                .to_rows()
                .into_iter()
                .flatten()
                .map(num_bigint::BigInt::from)
                .collect(),
        }
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &num_bigint::BigInt {
        &self.data[i * self.cols + j]
    }
    pub(crate) fn set(&mut self, i: usize, j: usize, v: num_bigint::BigInt) {
        self.data[i * self.cols + j] = v;
    }
    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }
    pub(crate) fn add_multiple_of_row(&mut self, i: usize, k: usize, c: &num_bigint::BigInt) {
        for j in 0..self.cols {
            let v = self.get(i, j) + c * self.get(k, j);
            self.set(i, j, v);
        }
    }
    pub(crate) fn add_multiple_of_col(&mut self, j: usize, k: usize, c: &num_bigint::BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, j) + c * self.get(i, k);
            self.set(i, j, v);
        }
    }
    /// Exact product.
    pub fn mul(&self, other: &BigMat) -> BigMat {
        assert_eq!(self.cols, other.rows, "BigMat product shapes");
        let mut out = BigMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let acc: num_bigint::BigInt =
                    (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum();
                out.set(i, j, acc);
            }
        }
        out
    }
    /// Exact determinant (fraction-free Bareiss elimination).
    pub fn determinant(&self) -> num_bigint::BigInt {
        use num_traits::{One, Zero};
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return num_bigint::BigInt::one();
        }
        let mut a: Vec<Vec<num_bigint::BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = num_bigint::BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return num_bigint::BigInt::zero();
                };
                a.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if negate {
            -a[n - 1][n - 1].clone()
        } else {
            a[n - 1][n - 1].clone()
        }
    }
    /// Narrows to the i64 tier, reporting overflow explicitly.
    pub fn to_intmat(&self) -> Result<IntMat, ZError> {
        let mut out = IntMat::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] =
                    i64::try_from(self.get(i, j).clone()).map_err(|_| ZError::Overflow)?;
            }
        }
        Ok(out)
    }
}

/// `a * b * c` computed exactly (big-integer intermediates); only the
/// final entries must fit the i64 range. Used to verify decompositions
/// whose transform matrices are large while the product is small.
pub fn triple_product(a: &IntMat, b: &IntMat, c: &IntMat) -> Result<IntMat, ZError> {
    use num_bigint::BigInt;
    if a.cols != b.rows || b.cols != c.rows {
        return Err(ZError::Shape("triple product shapes".into()));
    }
    let big = |m: &IntMat| -> Vec<Vec<BigInt>> {
        (0..m.rows)
            .map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    };
    let (ba, bb, bc) = (big(a), big(b), big(c));
    let mut ab = vec![vec![BigInt::from(0); b.cols]; a.rows];
    for i in 0..a.rows {
        for j in 0..b.cols {
            ab[i][j] = (0..a.cols).map(|k| &ba[i][k] * &bb[k][j]).sum();
        }
    }
    let mut out = IntMat::zeros(a.rows, c.cols);
    for i in 0..a.rows {
        for j in 0..c.cols {
            let acc: BigInt = (0..b.cols).map(|k| &ab[i][k] * &bc[k][j]).sum();
            out[(i, j)] = i64::try_from(acc).map_err(|_| ZError::Overflow)?;
        }
    }
    Ok(out)
}

/// Exact determinant by fraction-free (Bareiss) elimination over
/// big integers; the result must fit i64.
pub fn determinant(m: &IntMat) -> Result<i64, ZError> {
    use num_bigint::BigInt;
    use num_traits::{One, Zero};
    if m.rows != m.cols {
        return Err(ZError::Shape("determinant of non-square matrix".into()));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(1);
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(0);
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact division in Bareiss
            }
        }
        prev = a[k][k].clone();
    }
    let det = if negate {
        -a[n - 1][n - 1].clone()
    } else {
        a[n - 1][n - 1].clone()
    };
    i64::try_from(det).map_err(|_| ZError::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_stack() {
        let a = IntMat::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        let b = IntMat::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(
            a.mul(&b).unwrap().to_rows(),
            vec![vec![2, 1], vec![4, 3]]
        );
        assert_eq!(
            a.hstack(&b).unwrap().to_rows(),
            vec![vec![1, 2, 0, 1], vec![3, 4, 1, 0]]
        );
    }

    #[test]
    fn determinant_examples() {
        let a = IntMat::from_rows(vec![vec![2, 4], vec![6, 8]]).unwrap();
        assert_eq!(determinant(&a).unwrap(), -8);
        assert_eq!(determinant(&IntMat::identity(5)).unwrap(), 1);
        let s = IntMat::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(determinant(&s).unwrap(), -1);
        let m = IntMat::from_rows(vec![
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ])
        .unwrap();
        // rank-deficient example
        assert_eq!(determinant(&m).unwrap(), 0);
    }

    #[test]
    fn overflow_is_reported() {
        let a = IntMat::from_rows(vec![vec![i64::MAX, 1], vec![1, i64::MAX]]).unwrap();
        assert_eq!(a.mul(&a), Err(ZError::Overflow));
    }
}
