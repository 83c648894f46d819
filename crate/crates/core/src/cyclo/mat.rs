use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use super::num::CycNum;
use crate::error::{Error, Result};

/// Dense matrix over a cyclotomic field. All entries share one conductor.
#[derive(Clone)]
pub struct Mat {
    rows: usize,
    cols: usize,
    conductor: u64,
    entries: Vec<CycNum>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            conductor: 1,
            entries: vec![CycNum::zero(1); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = CycNum::one(1);
        }
        m
    }

    /// Matrix unit `E_ij` of order `n` (zero-based indices).
    pub fn unit(n: usize, i: usize, j: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        m.entries[i * n + j] = CycNum::one(1);
        m
    }

    pub fn diag(values: &[CycNum]) -> Mat {
        let n = values.len();
        let mut entries = vec![CycNum::zero(1); n * n];
        for (i, v) in values.iter().enumerate() {
            entries[i * n + i] = v.clone();
        }
        Mat::from_entries(n, n, entries).expect("square diagonal")
    }

    /// Builds a matrix from row-major entries, lifting them to a common
    /// conductor.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<CycNum>) -> Result<Mat> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let conductor = entries.iter().fold(1u64, |acc, e| acc.lcm(&e.conductor()));
        let entries = entries.into_iter().map(|e| e.lift_unchecked(conductor)).collect();
        Ok(Mat {
            rows,
            cols,
            conductor,
            entries,
        })
    }

    /// Integer matrix helper, mostly for tests and fixed forms.
    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let entries = rows
            .iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged rows");
                row.iter().map(|&v| CycNum::from_int(v, 1))
            })
            .collect();
        Mat::from_entries(r, c, entries).expect("consistent shape")
    }

    /// Reshapes a flattened `n^2` vector into an `n x n` matrix.
    pub fn from_flat(n: usize, v: &[CycNum]) -> Result<Mat> {
        Mat::from_entries(n, n, v.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.entries
    }

    /// Row-major flattening, the vector form used by subspaces.
    pub fn flatten(&self) -> Vec<CycNum> {
        self.entries.clone()
    }

    pub fn into_flat(self) -> Vec<CycNum> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycNum::is_zero)
    }

    pub fn lift(&self, m: u64) -> Result<Mat> {
        if m == 0 || !m.is_multiple_of(self.conductor) {
            return Err(Error::InvalidConductor(format!(
                "cannot lift conductor {} to {m}",
                self.conductor
            )));
        }
        Ok(self.lift_unchecked(m))
    }

    fn lift_unchecked(&self, m: u64) -> Mat {
        if m == self.conductor {
            return self.clone();
        }
        Mat {
            rows: self.rows,
            cols: self.cols,
            conductor: m,
            entries: self.entries.iter().map(|e| e.lift_unchecked(m)).collect(),
        }
    }

    pub fn transpose(&self) -> Mat {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Mat {
            rows: self.cols,
            cols: self.rows,
            conductor: self.conductor,
            entries,
        }
    }

    pub fn trace(&self) -> CycNum {
        let mut t = CycNum::zero(self.conductor);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn scale(&self, s: &CycNum) -> Mat {
        let entries = self.entries.iter().map(|e| e * s).collect();
        Mat::from_entries(self.rows, self.cols, entries).expect("same shape")
    }

    pub fn try_mul(&self, rhs: &Mat) -> Result<Mat> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let m = self.conductor.lcm(&rhs.conductor);
        let a = self.lift_unchecked(m);
        let b = rhs.lift_unchecked(m);
        let mut entries = vec![CycNum::zero(m); self.rows * rhs.cols];
        for i in 0..a.rows {
            for k in 0..a.cols {
                let x = a.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..b.cols {
                    let y = b.get(k, j);
                    if !y.is_zero() {
                        entries[i * b.cols + j] += &(x * y);
                    }
                }
            }
        }
        Ok(Mat {
            rows: a.rows,
            cols: b.cols,
            conductor: m,
            entries,
        })
    }

    fn zip_with(&self, rhs: &Mat, f: impl Fn(&CycNum, &CycNum) -> CycNum) -> Result<Mat> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let m = self.conductor.lcm(&rhs.conductor);
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect();
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            conductor: m,
            entries,
        })
    }

    pub fn try_add(&self, rhs: &Mat) -> Result<Mat> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Mat) -> Result<Mat> {
        self.zip_with(rhs, |a, b| a - b)
    }

    /// Commutator `[X, Y] = XY - YX`.
    pub fn bracket(&self, rhs: &Mat) -> Mat {
        &(self * rhs) - &(rhs * self)
    }

    /// Kronecker product with block structure `a_ij * B`, row-major.
    pub fn kron(&self, rhs: &Mat) -> Mat {
        let m = self.conductor.lcm(&rhs.conductor);
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut entries = vec![CycNum::zero(m); rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            entries[(i * rhs.rows + k) * cols + j * rhs.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        Mat::from_entries(rows, cols, entries).expect("kron shape")
    }

    pub fn pow(&self, e: u32) -> Mat {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Mat::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The same matrix over the smallest cyclotomic field containing all of
    /// its entries.
    pub fn reduced(&self) -> Mat {
        let n = self.conductor;
        for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
            let entries: Option<Vec<CycNum>> = self.entries.iter().map(|x| x.descend(d)).collect();
            if let Some(entries) = entries {
                return Mat {
                    rows: self.rows,
                    cols: self.cols,
                    conductor: d,
                    entries,
                };
            }
        }
        self.clone()
    }

    /// Reduced row echelon form, rank, and pivot columns.
    pub fn rref(&self) -> (Mat, usize, Vec<usize>) {
        let mut rows: Vec<Vec<CycNum>> = (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let pivots = rref_rows(&mut rows, self.cols);
        let rank = pivots.len();
        let entries = rows.into_iter().flatten().collect();
        let m = Mat::from_entries(self.rows, self.cols, entries).expect("same shape");
        (m, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let id = Mat::identity(n);
        let mut rows: Vec<Vec<CycNum>> = (0..n)
            .map(|i| {
                let mut r = self.entries[i * n..(i + 1) * n].to_vec();
                r.extend_from_slice(&id.entries[i * n..(i + 1) * n]);
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::DivisionByZero);
        }
        let entries = rows.into_iter().flat_map(|r| r[n..].to_vec()).collect();
        Mat::from_entries(n, n, entries)
    }

    /// Basis of the right kernel `{v : self * v = 0}`, one vector per free
    /// column.
    pub fn kernel(&self) -> Vec<Vec<CycNum>> {
        let (r, rank, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![CycNum::zero(self.conductor); self.cols];
                v[f] = CycNum::one(1);
                for (row, &p) in pivots.iter().enumerate().take(rank) {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }
}

/// In-place reduced row echelon form of `rows` (each of length `ncols`).
/// Pivot choice is the leftmost nonzero column, topmost nonzero row. Returns
/// the pivot columns; rows beyond the rank are left zero.
pub(crate) fn rref_rows(rows: &mut [Vec<CycNum>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

// Equality is by value; the conductor tag is ignored.
impl PartialEq for Mat {
    fn eq(&self, other: &Mat) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl Eq for Mat {}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn mul(self, rhs: &'a Mat) -> Mat {
        self.try_mul(rhs).expect("matrix shapes must agree")
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn add(self, rhs: &'a Mat) -> Mat {
        self.try_add(rhs).expect("matrix shapes must agree")
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;
    fn sub(self, rhs: &'a Mat) -> Mat {
        self.try_sub(rhs).expect("matrix shapes must agree")
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            conductor: self.conductor,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[{}]\n{}", self.rows, self.cols, self.conductor, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rref() {
        let (r, rank, piv) = Mat::identity(3).rref();
        assert_eq!(r, Mat::identity(3));
        assert_eq!(rank, 3);
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn zero_rref() {
        let (r, rank, piv) = Mat::zeros(2, 3).rref();
        assert!(r.is_zero());
        assert_eq!(rank, 0);
        assert!(piv.is_empty());
    }

    #[test]
    fn gaussian_integer_rank_one() {
        // [[1, i], [i, -1]]: the second row is i times the first
        let i = CycNum::zeta(4).unwrap();
        let m = Mat::from_entries(2, 2, vec![CycNum::one(4), i.clone(), i, CycNum::from_int(-1, 4)]).unwrap();
        let (r, rank, piv) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(piv, vec![0]);
        assert!(r.get(1, 0).is_zero() && r.get(1, 1).is_zero());
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Mat::from_ints(&[&[2, 4, 1], &[1, 2, 0], &[3, 6, 1]]);
        let (r, _, _) = m.rref();
        assert_eq!(r.rref().0, r);
    }

    #[test]
    fn inverse_and_singular() {
        let m = Mat::from_ints(&[&[0, 1], &[-1, 0]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(2));
        let s = Mat::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn kron_block_layout() {
        let a = Mat::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Mat::from_ints(&[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        let expect = Mat::from_ints(&[&[0, 1, 0, 2], &[1, 0, 2, 0], &[0, 3, 0, 4], &[3, 0, 4, 0]]);
        assert_eq!(k, expect);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = Mat::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let col = Mat::from_entries(3, 1, v).unwrap();
            assert!((&m * &col).is_zero());
        }
    }

    #[test]
    fn shape_errors() {
        let a = Mat::zeros(2, 3);
        assert!(matches!(a.try_mul(&a), Err(Error::DimensionMismatch(_))));
        assert!(matches!(a.inverse(), Err(Error::DimensionMismatch(_))));
        assert!(matches!(
            Mat::from_entries(2, 2, vec![CycNum::one(1)]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn reduced_uses_smallest_field() {
        let m = Mat::from_ints(&[&[1, -1], &[0, 2]]).lift(6).unwrap();
        let r = m.reduced();
        assert_eq!(r.conductor(), 1);
        assert_eq!(r, m);
        let w = Mat::diag(&[CycNum::zeta(3).unwrap(), CycNum::one(1)]).lift(12).unwrap();
        assert_eq!(w.reduced().conductor(), 3);
    }
}
