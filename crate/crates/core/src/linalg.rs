//! Exact linear algebra over a prime field F_p.
//!
//! Matrices are dense and row-major. Vectors are rows, and a matrix acts on
//! the right of a row vector (`x ↦ x·A`), which is the convention used for
//! right modules throughout the crate.

use std::fmt;

/// A prime field F_p with `p < 2^31`, so that products fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub const DEFAULT_PRIME: u64 = 32003;

    /// Returns `None` if `p` is not a prime below 2^31.
    pub fn new(p: u64) -> Option<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return None;
        }
        Some(Fp { p })
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }
}

impl Default for Fp {
    fn default() -> Self {
        Fp {
            p: Self::DEFAULT_PRIME,
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = u64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &u64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u64 {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row");
            m.data[r * cols..(r + 1) * cols].copy_from_slice(row);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other[(k, j)];
                    if b != 0 {
                        out[(i, j)] = f.add(out[(i, j)], f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: u64, f: Fp) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.mul(x, s)).collect(),
        }
    }

    pub fn add(&self, other: &Matrix, f: Fp) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[u64], f: Fp) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self[(k, j)]));
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref_in_place(&mut self, f: Fp) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self[(r, c)]);
            for j in c..self.cols {
                self[(r, j)] = f.mul(self[(r, j)], inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)];
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.mul(factor, self[(r, j)]);
                    self[(i, j)] = f.sub(self[(i, j)], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: Fp) -> usize {
        let mut m = self.clone();
        m.rref_in_place(f).len()
    }

    /// Basis (as rows) of the row space.
    pub fn row_space(&self, f: Fp) -> Matrix {
        let mut m = self.clone();
        let rank = m.rref_in_place(f).len();
        m.truncate_rows(rank);
        m
    }

    fn truncate_rows(&mut self, n: usize) {
        self.rows = n;
        self.data.truncate(n * self.cols);
    }

    /// Basis (as rows) of `{x : A x = 0}` (right null space).
    pub fn null_space(&self, f: Fp) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out[(k, fc)] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                out[(k, pc)] = f.neg(m[(r, fc)]);
            }
        }
        out
    }

    /// Basis (as rows) of `{y : y A = 0}` (left null space).
    pub fn left_null_space(&self, f: Fp) -> Matrix {
        self.transpose().null_space(f)
    }

    /// Solves `X · self = target` for `X`, where the rows of `self` are
    /// linearly independent. Returns `None` when a row of `target` is not in
    /// the row space of `self`.
    pub fn solve_left(&self, target: &Matrix, f: Fp) -> Option<Matrix> {
        assert_eq!(self.cols, target.cols);
        // self^T X^T = target^T
        let a = self.transpose();
        let b = target.transpose();
        let n = a.cols;
        let mut aug = Matrix::zeros(a.rows, n + b.cols);
        for r in 0..a.rows {
            for c in 0..n {
                aug[(r, c)] = a[(r, c)];
            }
            for c in 0..b.cols {
                aug[(r, n + c)] = b[(r, c)];
            }
        }
        let pivots = aug.rref_in_place(f);
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut xt = Matrix::zeros(n, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                xt[(pc, c)] = aug[(r, n + c)];
            }
        }
        let x = xt.transpose();
        debug_assert_eq!(&x.mul(self, f), target);
        Some(x)
    }

    pub fn is_invertible(&self, f: Fp) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

/// Rank of a set of equal-length vectors.
pub fn rank_of_vectors(vectors: &[Vec<u64>], len: usize, f: Fp) -> usize {
    if vectors.is_empty() || len == 0 {
        return 0;
    }
    Matrix::from_rows(len, vectors).rank(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_inverse_roundtrip() {
        let f = Fp::default();
        for a in [1u64, 2, 3, 17, 32002] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert!(Fp::new(32004).is_none());
        assert!(Fp::new(2).is_some());
    }

    #[test]
    fn rank_and_null_space() {
        let f = Fp::new(7).unwrap();
        let m = Matrix::from_rows(3, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(f), 2);
        let ns = m.null_space(f);
        assert_eq!(ns.rows(), 1);
        assert!(m.mul(&ns.transpose(), f).is_zero());
        let lns = m.left_null_space(f);
        assert_eq!(lns.rows(), 1);
        assert!(lns.mul(&m, f).is_zero());
    }

    #[test]
    fn solve_left_detects_inconsistency() {
        let f = Fp::new(5).unwrap();
        let basis = Matrix::from_rows(3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let t = Matrix::from_rows(3, &[vec![2, 3, 0]]);
        let x = basis.solve_left(&t, f).unwrap();
        assert_eq!(x, Matrix::from_rows(2, &[vec![2, 3]]));
        let bad = Matrix::from_rows(3, &[vec![0, 0, 1]]);
        assert!(basis.solve_left(&bad, f).is_none());
    }
}
