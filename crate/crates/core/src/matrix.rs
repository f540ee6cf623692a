//! Dense exact matrices with reduced row-echelon form, kernels and images.
//!
//! All entries of a matrix share one field tag (enforced at construction).
//! `rref` produces the canonical reduced row-echelon form with zero rows
//! dropped, so row spaces compare by entry-wise equality.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;

pub type Vector = Vec<Scalar>;

pub fn zero_vec(field: Field, n: usize) -> Vector {
    vec![Scalar::zero(field); n]
}

pub fn unit_vec(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = Scalar::one(field);
    v
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add_scaled(dst: &mut [Scalar], src: &[Scalar], c: &Scalar) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d = &*d + &(c * s);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged rows or mixed field tags.
    pub fn from_rows(field: Field, rows: Vec<Vector>, cols: usize) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            for s in &r {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            field,
            data,
        })
    }

    /// Convenience constructor from integer literals.
    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&n| Scalar::from_int(field, n)).collect())
            .collect();
        Matrix::from_rows(field, data, cols).expect("literal matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if !v.is_zero() {
                    t.set(j, i, v.clone());
                }
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field, rhs.field));
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j);
                    out.set(i, j, &*cur + &(a * b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = zero_vec(self.field, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                out[i] = &out[i] + &(a * &v[j]);
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: other.rows,
            });
        }
        let mut data = Vec::with_capacity((self.cols + other.cols) * self.rows);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            field: self.field,
            data,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|v| c * v).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|v| -v).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    /// Canonical reduced row-echelon form, zero rows dropped.
    pub fn rref(&self) -> Matrix {
        let mut red = RowReducer::new(self.field, self.cols);
        for i in 0..self.rows {
            red.insert(self.row(i).to_vec());
        }
        red.into_matrix()
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.field, self.cols);
        for i in 0..self.rows {
            red.insert(self.row(i).to_vec());
        }
        red.rank()
    }

    /// The null space `{v : m v = 0}` as a canonical subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace {
        let r = self.rref();
        let pivots = r.pivot_cols();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for j in 0..self.cols {
            if is_pivot[j] {
                continue;
            }
            let mut v = zero_vec(self.field, self.cols);
            v[j] = Scalar::one(self.field);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, j);
            }
            basis.push(v);
        }
        Subspace::from_span(self.field, self.cols, basis)
    }

    /// One solution of `self · x = b`, or None if the system is
    /// inconsistent (free coordinates are set to zero).
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut col = Matrix::zeros(self.field, self.rows, 1);
        for (i, c) in b.iter().enumerate() {
            col.set(i, 0, c.clone());
        }
        let aug = self.hstack(&col).expect("row counts match");
        let r = aug.rref();
        let pivots = r.pivot_cols();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = zero_vec(self.field, self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Column space of the matrix.
    pub fn image(&self) -> Subspace {
        let t = self.transpose();
        Subspace::from_matrix_rows(&t)
    }

    /// Pivot columns of a matrix already in rref.
    pub fn pivot_cols(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            if let Some(j) = (0..self.cols).find(|&j| !self.get(i, j).is_zero()) {
                out.push(j);
            }
        }
        out
    }
}

/// Incremental canonical row reducer.  Rows may be inserted one at a time;
/// the basis is kept in full rref (pivot columns strictly increasing, unit
/// pivots, pivot columns cleared elsewhere) after every insertion.
#[derive(Clone, Debug)]
pub struct RowReducer {
    field: Field,
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(field: Field, cols: usize) -> RowReducer {
        RowReducer {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduces `row` against the current basis in place.
    pub fn reduce(&self, row: &mut Vector) {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if !row[p].is_zero() {
                let c = -&row[p];
                vec_add_scaled(row, r, &c);
            }
        }
    }

    /// Inserts a row; returns true when it increased the rank.
    pub fn insert(&mut self, mut row: Vector) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        self.reduce(&mut row);
        let Some(p) = row.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        let inv = row[p].inv().expect("nonzero pivot");
        for v in row.iter_mut() {
            if !v.is_zero() {
                *v = &*v * &inv;
            }
        }
        // clear the new pivot column from existing rows
        for r in self.rows.iter_mut() {
            if !r[p].is_zero() {
                let c = -&r[p];
                vec_add_scaled(r, &row, &c);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    pub fn contains(&self, row: &[Scalar]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        vec_is_zero(&r)
    }

    pub fn into_matrix(self) -> Matrix {
        let cols = self.cols;
        let field = self.field;
        Matrix::from_rows(field, self.rows, cols).expect("reducer rows are consistent")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_finds_a_solution_or_reports_inconsistency() {
        let m = Matrix::from_ints(Field::Q, &[&[1, 1], &[0, 1]]);
        let b = vec![Scalar::from_int(Field::Q, 3), Scalar::from_int(Field::Q, 1)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b);
        let sing = Matrix::from_ints(Field::Q, &[&[1, 1], &[1, 1]]);
        let b2 = vec![Scalar::from_int(Field::Q, 1), Scalar::from_int(Field::Q, 2)];
        assert!(sing.solve(&b2).is_none());
    }

    #[test]
    fn rref_drops_dependent_rows() {
        let m = Matrix::from_ints(Field::Q, &[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r, Matrix::from_ints(Field::Q, &[&[1, 2]]));
    }

    #[test]
    fn rref_identity_fixed_point() {
        let id = Matrix::identity(Field::Q, 3);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_over_gf2() {
        let m = Matrix::from_ints(Field::Gf(2), &[&[1, 1], &[1, 0]]);
        assert_eq!(m.rref(), Matrix::identity(Field::Gf(2), 2));
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = Matrix::zeros(Field::Q, 2, 3);
        assert_eq!(m.kernel().dim(), 3);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let m = Matrix::identity(Field::Q, 4);
        assert_eq!(m.kernel().dim(), 0);
    }

    #[test]
    fn kernel_by_substitution() {
        // [[1,1,0],[0,0,1]] -> span{(1,-1,0)}
        let m = Matrix::from_ints(Field::Q, &[&[1, 1, 0], &[0, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        let v: Vec<Scalar> = [1, -1, 0]
            .iter()
            .map(|&n| Scalar::from_int(Field::Q, n))
            .collect();
        assert!(k.contains_vec(&v));
    }

    #[test]
    fn rank_plus_nullity() {
        let m = Matrix::from_ints(Field::Q, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank() + m.kernel().dim(), m.cols());
    }

    #[test]
    fn rejects_mixed_fields() {
        let rows = vec![vec![Scalar::from_int(Field::Q, 1), Scalar::from_int(Field::Gf(3), 1)]];
        assert!(matches!(
            Matrix::from_rows(Field::Q, rows, 2),
            Err(Error::FieldMismatch(..))
        ));
    }
}
