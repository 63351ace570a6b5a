//! Dense matrices over the rationals with exact elimination.

use super::{rat, Rat};
use crate::report::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense matrix of [`Rat`] entries, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rat>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![rat(0); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = rat(1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Matrix with the given columns.
    pub fn from_cols(rows: usize, cols: Vec<Vec<Rat>>) -> Self {
        let c = cols.len();
        let mut m = Matrix::zeros(rows, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for i in 0..rows {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        Matrix::new(
            self.rows,
            self.cols,
            self.data.iter().map(|x| c * x).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length must match columns");
        (0..self.rows)
            .map(|i| {
                let mut acc = rat(0);
                for j in 0..self.cols {
                    acc += &self[(i, j)] * &v[j];
                }
                acc
            })
            .collect()
    }

    /// Exact rank via fraction-free (Bareiss) elimination on the
    /// denominator-cleared integer matrix. Pivots are chosen deterministically:
    /// columns left to right, first nonzero row below the current one.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Clear denominators row by row; row scaling preserves rank.
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let lcm = (0..self.cols)
                    .map(|j| self[(i, j)].denom().clone())
                    .fold(BigInt::one(), |acc, d| acc.lcm(&d));
                (0..self.cols)
                    .map(|j| {
                        let e = &self[(i, j)];
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect()
            })
            .collect();

        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..self.cols {
            if rank >= self.rows {
                break;
            }
            let Some(p) = (rank..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let pivot = a[rank][col].clone();
            for i in rank + 1..self.rows {
                for j in col + 1..self.cols {
                    // Bareiss step: exact integer division by the previous pivot.
                    let num = &pivot * &a[i][j] - &a[i][col] * &a[rank][j];
                    a[i][j] = num / &prev;
                }
                a[i][col] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Reduced row echelon form with deterministic first-nonzero pivoting.
    /// Returns `(rref, pivot_columns)`.
    fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..a.cols {
            if r >= a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            for j in 0..a.cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
            let inv = a[(r, col)].recip();
            for j in 0..a.cols {
                let v = &a[(r, j)] * &inv;
                a[(r, j)] = v;
            }
            for i in 0..a.rows {
                if i != r && !a[(i, col)].is_zero() {
                    let factor = a[(i, col)].clone();
                    for j in 0..a.cols {
                        let v = &a[(i, j)] - &factor * &a[(r, j)];
                        a[(i, j)] = v;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (a, pivots)
    }

    /// Exact kernel basis, one vector per free column, free columns ascending.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rat>> {
        if self.cols == 0 {
            return Vec::new();
        }
        if self.rows == 0 {
            return (0..self.cols)
                .map(|j| super::basis_vec(self.cols, j))
                .collect();
        }
        let (rr, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().peekable();
        let mut col_to_row = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            col_to_row[c] = Some(row);
        }
        for free in 0..self.cols {
            if piv_iter.peek() == Some(&free) {
                piv_iter.next();
                continue;
            }
            let mut v = super::zero_vec(self.cols);
            v[free] = rat(1);
            for &pc in &pivots {
                let row = col_to_row[pc].unwrap();
                v[pc] = -rr[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of `self * x = b` with free variables set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "rhs length must match rows");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (rr, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = super::zero_vec(self.cols);
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = rr[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse; errors when the matrix is singular or not square.
    pub fn inverse(&self) -> Result<Matrix, Error> {
        if self.rows != self.cols {
            return Err(Error::input(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = rat(1);
        }
        let (rr, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) {
            return Err(Error::NotInvertible);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = rr[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|a| -a).collect())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = &out[(i, j)] + &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{ratio, vec_is_zero, vec_sub};
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(2).rank(), 2);
        assert_eq!(Matrix::zeros(2, 2).rank(), 0);
        assert_eq!(m(vec![vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn rank_with_fractions() {
        // det = 1/2 * 2 - 1/3 * 3/2 = 1/2
        let a = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), rat(2)],
        ]);
        assert_eq!(a.rank(), 2);
        // rows 2 and 3 are 3x and 4x the first row
        let b = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(3, 2), rat(1)],
            vec![rat(2), ratio(4, 3)],
        ]);
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert!(Matrix::identity(2).nullspace_basis().is_empty());
        let k = m(vec![vec![1, 0]]).nullspace_basis();
        assert_eq!(k, vec![vec![rat(0), rat(1)]]);
        let k = m(vec![vec![1, 1], vec![1, 1]]).nullspace_basis();
        assert_eq!(k, vec![vec![rat(-1), rat(1)]]);
    }

    #[test]
    fn solve_examples() {
        let x = Matrix::identity(2).solve(&[rat(3), rat(5)]).unwrap();
        assert_eq!(x, vec![rat(3), rat(5)]);
        assert!(Matrix::zeros(2, 2).solve(&[rat(1), rat(0)]).is_none());
        let x = m(vec![vec![2, 0], vec![0, 0]])
            .solve(&[rat(4), rat(0)])
            .unwrap();
        assert_eq!(x, vec![rat(2), rat(0)]);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(vec![vec![0, 1], vec![1, 0]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(matches!(
            m(vec![vec![1, 0], vec![0, 0]]).inverse(),
            Err(Error::NotInvertible)
        ));
    }

    proptest! {
        #[test]
        fn rank_plus_nullity_is_cols(rows in 1usize..5, cols in 1usize..5,
                                     entries in proptest::collection::vec(-3i64..=3, 25)) {
            let data: Vec<Rat> = entries.iter().take(rows * cols).map(|&e| rat(e)).collect();
            prop_assume!(data.len() == rows * cols);
            let a = Matrix::new(rows, cols, data);
            let kernel = a.nullspace_basis();
            prop_assert_eq!(a.rank() + kernel.len(), cols);
            for v in &kernel {
                prop_assert!(vec_is_zero(&a.mul_vec(v)));
            }
        }

        #[test]
        fn solve_is_exact_or_detectably_inconsistent(
            rows in 1usize..5, cols in 1usize..5,
            entries in proptest::collection::vec(-3i64..=3, 25),
            rhs in proptest::collection::vec(-3i64..=3, 5)) {
            let data: Vec<Rat> = entries.iter().take(rows * cols).map(|&e| rat(e)).collect();
            prop_assume!(data.len() == rows * cols && rhs.len() >= rows);
            let a = Matrix::new(rows, cols, data);
            let b: Vec<Rat> = rhs.iter().take(rows).map(|&e| rat(e)).collect();
            match a.solve(&b) {
                Some(x) => prop_assert!(vec_is_zero(&vec_sub(&a.mul_vec(&x), &b))),
                None => {
                    // inconsistent: the augmented matrix has strictly larger rank
                    let mut aug_rows = Vec::new();
                    for i in 0..rows {
                        let mut row: Vec<Rat> = (0..cols).map(|j| a[(i, j)].clone()).collect();
                        row.push(b[i].clone());
                        aug_rows.push(row);
                    }
                    prop_assert!(Matrix::from_rows(aug_rows).rank() > a.rank());
                }
            }
        }
    }
}
