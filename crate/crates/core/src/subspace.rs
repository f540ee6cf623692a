//! Canonical subspaces of a coordinate space.
//!
//! A subspace is identified with its reduced row-echelon basis (zero rows
//! dropped), so two subspaces are equal as sets iff their bases are equal
//! entry-wise.

use crate::error::{Error, Result};
use crate::matrix::{unit_vec, vec_add_scaled, vec_is_zero, Matrix, RowReducer, Vector};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Matrix::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            ambient,
            field,
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn from_span(field: Field, ambient: usize, vectors: Vec<Vector>) -> Subspace {
        let mut red = RowReducer::new(field, ambient);
        for v in vectors {
            red.insert(v);
        }
        Subspace {
            ambient,
            field,
            basis: red.into_matrix(),
        }
    }

    pub fn from_matrix_rows(m: &Matrix) -> Subspace {
        Subspace {
            ambient: m.cols(),
            field: m.field(),
            basis: m.rref(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        self.coords_of(v).is_some()
    }

    /// Coordinates of `v` in this basis, or None if `v` lies outside.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        let pivots = self.basis.pivot_cols();
        let mut residue = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (row, &p) in pivots.iter().enumerate() {
            let c = residue[p].clone();
            if !c.is_zero() {
                let nc = -&c;
                vec_add_scaled(&mut residue, self.basis.row(row), &nc);
            }
            coords.push(c);
        }
        if vec_is_zero(&residue) {
            Some(coords)
        } else {
            None
        }
    }

    /// Matrix sending an ambient vector *known to lie in this subspace* to
    /// its basis coordinates (selects the pivot columns).
    pub fn coords_matrix(&self) -> Matrix {
        let pivots = self.basis.pivot_cols();
        let mut m = Matrix::zeros(self.field, self.dim(), self.ambient);
        for (row, &p) in pivots.iter().enumerate() {
            m.set(row, p, Scalar::one(self.field));
        }
        m
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && (0..self.dim()).all(|i| other.contains_vec(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut red = RowReducer::new(self.field, self.ambient);
        for i in 0..self.dim() {
            red.insert(self.basis.row(i).to_vec());
        }
        for i in 0..other.dim() {
            red.insert(other.basis.row(i).to_vec());
        }
        Ok(Subspace {
            ambient: self.ambient,
            field: self.field,
            basis: red.into_matrix(),
        })
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        // x in A∩B iff x = u^T A = v^T B; solve A^T u - B^T v = 0.
        let at = self.basis.transpose();
        let bt = other.basis.transpose().neg();
        let sys = at.hstack(&bt)?;
        let ker = sys.kernel();
        let mut vectors = Vec::new();
        for w in ker.basis_vectors() {
            let u = &w[..self.dim()];
            let mut x = vec![Scalar::zero(self.field); self.ambient];
            for (i, c) in u.iter().enumerate() {
                vec_add_scaled(&mut x, self.basis.row(i), c);
            }
            vectors.push(x);
        }
        Ok(Subspace::from_span(self.field, self.ambient, vectors))
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

/// Projection and section for the quotient `sup / sub`.
///
/// Both maps act in `sup`-coordinates: the projection is a `q x dim(sup)`
/// matrix, the section a `dim(sup) x q` matrix choosing coset
/// representatives on the non-pivot coordinates of `sub`'s canonical basis,
/// with `proj . section = id`.  When `sup` is the full space,
/// `sup`-coordinates are the ambient coordinates.
pub fn quotient_basis(sub: &Subspace, sup: &Subspace) -> Result<(Matrix, Matrix)> {
    if !sub.is_subspace_of(sup) {
        return Err(Error::SubspaceNotContained);
    }
    let field = sup.field();
    let k = sup.dim();
    // express sub inside sup
    let mut red = RowReducer::new(field, k);
    for i in 0..sub.dim() {
        let coords = sup
            .coords_of(sub.basis().row(i))
            .expect("containment verified");
        red.insert(coords);
    }
    let inner = red.into_matrix();
    let pivots = inner.pivot_cols();
    let mut is_pivot = vec![false; k];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..k).filter(|&j| !is_pivot[j]).collect();
    let q = free.len();
    let mut proj = Matrix::zeros(field, q, k);
    for j in 0..k {
        let mut e = unit_vec(field, k, j);
        for (row, &p) in pivots.iter().enumerate() {
            if !e[p].is_zero() {
                let c = -&e[p];
                vec_add_scaled(&mut e, inner.row(row), &c);
            }
        }
        for (out, &f) in free.iter().enumerate() {
            if !e[f].is_zero() {
                proj.set(out, j, e[f].clone());
            }
        }
    }
    let mut section = Matrix::zeros(field, k, q);
    for (out, &f) in free.iter().enumerate() {
        section.set(f, out, Scalar::one(field));
    }
    Ok((proj, section))
}

/// A complement of `of` in the full ambient space that contains
/// `containing`, chosen greedily along the standard coordinates
/// (deterministic).  Requires `containing` independent from `of`.
pub fn greedy_complement(of: &Subspace, containing: Option<&Subspace>) -> Result<Subspace> {
    let field = of.field();
    let n = of.ambient_dim();
    let mut red = RowReducer::new(field, n);
    for v in of.basis_vectors() {
        red.insert(v);
    }
    let mut comp: Vec<Vector> = Vec::new();
    if let Some(c) = containing {
        if c.ambient_dim() != n {
            return Err(Error::AmbientMismatch(c.ambient_dim(), n));
        }
        for v in c.basis_vectors() {
            if !red.insert(v.clone()) {
                return Err(Error::NotAComplement);
            }
            comp.push(v);
        }
    }
    for j in 0..n {
        if red.rank() == n {
            break;
        }
        let e = unit_vec(field, n, j);
        if red.insert(e.clone()) {
            comp.push(e);
        }
    }
    Ok(Subspace::from_span(field, n, comp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(rows: &[&[i64]], ambient: usize) -> Subspace {
        let vs = rows
            .iter()
            .map(|r| r.iter().map(|&n| Scalar::from_int(Field::Q, n)).collect())
            .collect();
        Subspace::from_span(Field::Q, ambient, vs)
    }

    #[test]
    fn intersection_of_axes_is_zero() {
        let a = span(&[&[1, 0]], 2);
        let b = span(&[&[0, 1]], 2);
        assert!(a.intersect(&b).unwrap().is_zero());
    }

    #[test]
    fn dimension_formula() {
        let a = span(&[&[1, 0, 0], &[0, 1, 0]], 3);
        let b = span(&[&[0, 1, 0], &[0, 0, 1]], 3);
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
    }

    #[test]
    fn quotient_of_line_in_q3() {
        let sub = span(&[&[1, 0, 0]], 3);
        let (proj, section) = quotient_basis(&sub, &Subspace::full(Field::Q, 3)).unwrap();
        assert_eq!(proj.rows(), 2);
        let ps = proj.mul(&section).unwrap();
        assert_eq!(ps, Matrix::identity(Field::Q, 2));
    }

    #[test]
    fn quotient_rejects_non_containment() {
        let a = span(&[&[1, 0]], 2);
        let b = span(&[&[0, 1]], 2);
        assert!(matches!(
            quotient_basis(&a, &b),
            Err(Error::SubspaceNotContained)
        ));
    }

    #[test]
    fn greedy_complement_is_complementary() {
        let a = span(&[&[1, 2, 3]], 3);
        let c = greedy_complement(&a, None).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(a.intersect(&c).unwrap().is_zero());
        assert_eq!(a.sum(&c).unwrap().dim(), 3);
    }
}
