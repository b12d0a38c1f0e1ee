//! Small dense matrices over [`Rat`] with exact determinant and rank.
//!
//! Elimination is fraction-free (Bareiss): rows are first scaled to integers,
//! then every intermediate division is exact over `BigInt`. This keeps the
//! coefficient swell polynomial even though frieze entries grow quickly.

use std::fmt;

use num::{BigInt, Integer, One, Zero};

use crate::error::MatrixError;
use crate::rat::Rat;

/// Maximum size accepted by [`MatExact::determinant`].
pub const MAX_DET_SIZE: usize = 64;

/// Immutable dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatExact {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl MatExact {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Result<Self, MatrixError> {
        if data.len() != rows * cols {
            return Err(MatrixError::BadShape { rows, cols, got: data.len() });
        }
        Ok(MatExact { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        MatExact { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rat::from(x)).collect()).collect())
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        MatExact { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        self.data[r * self.cols + c] = v;
    }

    pub fn transpose(&self) -> MatExact {
        let mut out = MatExact::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.at(r, c);
                    if r == c { e.is_one() } else { e.is_zero() }
                })
            })
    }

    /// Exact product; errors on an inner-dimension mismatch.
    pub fn matmul(&self, rhs: &MatExact) -> Result<MatExact, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimMismatch(self.rows, self.cols, rhs.rows, rhs.cols));
        }
        let mut out = MatExact::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    acc = acc + self.at(i, k) * rhs.at(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> MatExact {
        MatExact {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    /// Rows scaled to integers, plus the scale factor of each row.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
        let mut rows = Vec::with_capacity(self.rows);
        let mut scales = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut lcm = BigInt::one();
            for c in 0..self.cols {
                lcm = lcm.lcm(self.at(r, c).denom());
            }
            let row = (0..self.cols)
                .map(|c| {
                    let e = self.at(r, c);
                    e.numer() * (&lcm / e.denom())
                })
                .collect();
            rows.push(row);
            scales.push(lcm);
        }
        (rows, scales)
    }

    /// Exact determinant by fraction-free elimination. Square input of size
    /// at most [`MAX_DET_SIZE`]; the empty matrix has determinant 1.
    pub fn determinant(&self) -> Result<Rat, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows > MAX_DET_SIZE {
            return Err(MatrixError::TooLarge { size: self.rows });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rat::one());
        }
        let (mut a, scales) = self.integer_rows();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Rat::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                    a[i][j] = &t / &prev; // exact by Bareiss
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let mut det = Rat::from_bigint(a[n - 1][n - 1].clone());
        if sign < 0 {
            det = -det;
        }
        for s in scales {
            det = det.checked_div(&Rat::from_bigint(s)).expect("row scale is nonzero");
        }
        Ok(det)
    }

    /// Exact rank over the rationals (fraction-free elimination with full pivoting).
    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        let (nr, nc) = (self.rows, self.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        let mut col_perm: Vec<usize> = (0..nc).collect();
        for k in 0..nr.min(nc) {
            // find any nonzero pivot at (i >= k, j >= k)
            let mut pivot = None;
            'outer: for i in k..nr {
                for j in k..nc {
                    if !a[i][col_perm[j]].is_zero() {
                        pivot = Some((i, j));
                        break 'outer;
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap(k, pi);
            col_perm.swap(k, pj);
            rank += 1;
            for i in k + 1..nr {
                for j in k + 1..nc {
                    let t = &a[k][col_perm[k]] * &a[i][col_perm[j]]
                        - &a[i][col_perm[k]] * &a[k][col_perm[j]];
                    a[i][col_perm[j]] = &t / &prev;
                }
                a[i][col_perm[k]] = BigInt::zero();
            }
            prev = a[k][col_perm[k]].clone();
        }
        rank
    }
}

impl fmt::Debug for MatExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatExact {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for MatExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;

    #[test]
    fn determinant_identity() {
        assert_eq!(MatExact::identity(3).determinant().unwrap(), rat(1));
    }

    #[test]
    fn determinant_rotation_block() {
        let m = MatExact::from_i64(&[&[0, 1], &[-1, 0]]);
        assert_eq!(m.determinant().unwrap(), rat(1));
    }

    #[test]
    fn determinant_tridiagonal() {
        // cofactor expansion by hand: 2*(4-1) - 1*(2-0) = 4
        let m = MatExact::from_i64(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        assert_eq!(m.determinant().unwrap(), rat(4));
    }

    #[test]
    fn determinant_rejects_non_square() {
        let m = MatExact::zero(2, 3);
        assert!(matches!(m.determinant(), Err(MatrixError::NotSquare { .. })));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(MatExact::zero(4, 4).rank(), 0);
        assert_eq!(MatExact::identity(5).rank(), 5);
        // incidence form for period 6: rows 1 and 3 are negatives of each other
        let omega6 = MatExact::from_i64(&[
            &[0, 1, 0, -1],
            &[-1, 0, 1, 0],
            &[0, -1, 0, 1],
            &[1, 0, -1, 0],
        ]);
        assert_eq!(omega6.rank(), 2);
    }

    #[test]
    fn matmul_examples() {
        let id = MatExact::identity(3);
        assert_eq!(id.matmul(&id).unwrap(), id);

        // N^{-1} computed by adjugate (det N = 1)
        let n = MatExact::from_i64(&[&[0, 0, 1], &[1, 0, -1], &[0, 1, 1]]);
        let adj = adjugate3(&n);
        assert_eq!(n.matmul(&adj).unwrap(), MatExact::identity(3));

        let u = MatExact::from_i64(&[&[1, 1], &[0, 1]]);
        assert_eq!(u.matmul(&u).unwrap(), MatExact::from_i64(&[&[1, 2], &[0, 1]]));
    }

    #[test]
    fn matmul_dimension_mismatch() {
        let a = MatExact::zero(2, 3);
        let b = MatExact::zero(2, 3);
        assert!(matches!(a.matmul(&b), Err(MatrixError::DimMismatch(..))));
    }

    /// Independent 3x3 inverse for unimodular matrices, used as an oracle.
    fn adjugate3(m: &MatExact) -> MatExact {
        assert_eq!((m.rows(), m.cols()), (3, 3));
        let e = |r: usize, c: usize| m.at(r, c);
        let cof = |r: usize, c: usize| {
            let (r1, r2) = match r {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let (c1, c2) = match c {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let minor = e(r1, c1) * e(r2, c2) - e(r1, c2) * e(r2, c1);
            if (r + c) % 2 == 0 {
                minor
            } else {
                -minor
            }
        };
        let mut out = MatExact::zero(3, 3);
        for r in 0..3 {
            for c in 0..3 {
                out.set(r, c, cof(c, r));
            }
        }
        out
    }

    fn small_mat(n: usize) -> impl Strategy<Value = MatExact> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), n * n).prop_map(move |v| {
            MatExact::new(n, n, v.into_iter().map(|(p, q)| Rat::new(p, q).unwrap()).collect())
                .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn det_is_multiplicative(a in small_mat(3), b in small_mat(3)) {
            let ab = a.matmul(&b).unwrap();
            prop_assert_eq!(
                ab.determinant().unwrap(),
                a.determinant().unwrap() * b.determinant().unwrap()
            );
        }

        #[test]
        fn rank_is_transpose_invariant(a in small_mat(4)) {
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }
    }
}
