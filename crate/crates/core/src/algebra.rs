//! Finite-dimensional right Leibniz algebras given by structure constants,
//! with ideals, centers, quotients, direct sums and a small catalog of
//! named algebras.
//!
//! The bracket satisfies the right Leibniz identity
//! `[[x,y],z] = [[x,z],y] + [x,[y,z]]`; a Lie algebra is the special case
//! with antisymmetric bracket.

use crate::error::{Error, Result};
use crate::matrix::{unit_vec, zero_vec, Matrix, RowReducer, Vector};
use crate::scalar::{Field, Scalar};
use crate::subspace::{quotient_basis, Subspace};

/// Structure-constant presentation of a right Leibniz algebra.
///
/// `sc[i][j]` is the sparse expansion of `[e_i, e_j]` in the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizAlgebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    sc: Vec<Vec<Vec<(usize, Scalar)>>>,
}

/// A basis triple violating the right Leibniz identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<LeibnizViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl LeibnizAlgebra {
    /// Builds an algebra without validating the Leibniz identity;
    /// call [`LeibnizAlgebra::validate`] to check it.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, Scalar)>)],
    ) -> Result<LeibnizAlgebra> {
        let dim = labels.len();
        let mut sc = vec![vec![Vec::new(); dim]; dim];
        for (i, j, terms) in brackets {
            if *i >= dim || *j >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket index ({i},{j}) out of range for dim {dim}"
                )));
            }
            let mut acc = zero_vec(field, dim);
            for (k, c) in terms {
                if *k >= dim {
                    return Err(Error::InvalidAlgebra(format!(
                        "bracket target {k} out of range for dim {dim}"
                    )));
                }
                if c.field() != field {
                    return Err(Error::FieldMismatch(field, c.field()));
                }
                acc[*k] = &acc[*k] + c;
            }
            sc[*i][*j] = sparsify(&acc);
        }
        Ok(LeibnizAlgebra {
            field,
            dim,
            labels,
            sc,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constant(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.sc[i][j]
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    /// Lists every basis triple violating the right Leibniz identity.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let lhs = self.bracket_sparse(&self.sc[i][j], k, Side::Right);
                    let mut rhs = self.bracket_sparse(&self.sc[i][k], j, Side::Right);
                    let inner = self.bracket_sparse(&self.sc[j][k], i, Side::Left);
                    for (v, w) in rhs.iter_mut().zip(&inner) {
                        *v = &*v + w;
                    }
                    if lhs != rhs {
                        violations.push(LeibnizViolation { i, j, k });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// `[Σ terms, e_fixed]` (Right) or `[e_fixed, Σ terms]` (Left).
    fn bracket_sparse(&self, terms: &[(usize, Scalar)], fixed: usize, side: Side) -> Vector {
        let mut out = zero_vec(self.field, self.dim);
        for (a, c) in terms {
            let prod = match side {
                Side::Right => &self.sc[*a][fixed],
                Side::Left => &self.sc[fixed][*a],
            };
            for (k, s) in prod {
                out[*k] = &out[*k] + &(c * s);
            }
        }
        out
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: u.len(),
            });
        }
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let mut out = zero_vec(self.field, self.dim);
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, s) in &self.sc[i][j] {
                    out[*k] = &out[*k] + &(&ab * s);
                }
            }
        }
        Ok(out)
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        if s.ambient_dim() != self.dim || s.field() != self.field {
            return Err(Error::AmbientMismatch(s.ambient_dim(), self.dim));
        }
        for i in 0..self.dim {
            let e = unit_vec(self.field, self.dim, i);
            for v in s.basis_vectors() {
                if !s.contains_vec(&self.bracket(&e, &v)?) {
                    return Ok(false);
                }
                if !s.contains_vec(&self.bracket(&v, &e)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `span{[u,v], [v,u] : u in a, v in b}`, the product ideal.
    pub fn product_ideal(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        if a.ambient_dim() != self.dim || b.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch(a.ambient_dim(), b.ambient_dim()));
        }
        let mut red = RowReducer::new(self.field, self.dim);
        for u in a.basis_vectors() {
            for v in b.basis_vectors() {
                red.insert(self.bracket(&u, &v)?);
                red.insert(self.bracket(&v, &u)?);
            }
        }
        Ok(Subspace::from_matrix_rows(&red.into_matrix()))
    }

    /// The derived subalgebra `g^2 = [g,g]`.
    pub fn derived(&self) -> Subspace {
        self.product_ideal(&self.full_space(), &self.full_space())
            .expect("full spaces match")
    }

    /// `Z(g) = {z : [z,g] = [g,z] = 0}`.
    pub fn center(&self) -> Subspace {
        // stack left- and right-multiplication operators by every basis vector
        let mut rows: Vec<Vector> = Vec::new();
        for i in 0..self.dim {
            // v -> [v, e_i]
            for k in 0..self.dim {
                let mut row = zero_vec(self.field, self.dim);
                for j in 0..self.dim {
                    for (t, s) in &self.sc[j][i] {
                        if *t == k {
                            row[j] = &row[j] + s;
                        }
                    }
                }
                rows.push(row);
            }
            // v -> [e_i, v]
            for k in 0..self.dim {
                let mut row = zero_vec(self.field, self.dim);
                for j in 0..self.dim {
                    for (t, s) in &self.sc[i][j] {
                        if *t == k {
                            row[j] = &row[j] + s;
                        }
                    }
                }
                rows.push(row);
            }
        }
        let m = Matrix::from_rows(self.field, rows, self.dim).expect("consistent rows");
        m.kernel()
    }

    /// The series g ⊇ g² ⊇ [g²,g]+[g,g²] ⊇ … until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![self.full_space()];
        loop {
            let prev = series.last().unwrap();
            let next = self
                .product_ideal(prev, &self.full_space())
                .expect("ambient match");
            if &next == prev {
                break;
            }
            series.push(next);
            if series.last().unwrap().is_zero() {
                break;
            }
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().is_zero()
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.iter().flatten().all(|t| t.is_empty())
    }

    pub fn is_lie(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ei = unit_vec(self.field, self.dim, i);
                let ej = unit_vec(self.field, self.dim, j);
                let mut s = self.bracket(&ei, &ej).unwrap();
                let t = self.bracket(&ej, &ei).unwrap();
                for (a, b) in s.iter_mut().zip(&t) {
                    *a = &*a + b;
                }
                if !s.iter().all(Scalar::is_zero) {
                    return false;
                }
            }
        }
        true
    }

    /// `d(g) = dim(g/g²)`, defined here for nilpotent algebras only.
    pub fn minimal_generator_count(&self) -> Result<usize> {
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        Ok(self.dim - self.derived().dim())
    }

    /// Nilpotent with `dim Z(g) = dim g² = 1`.
    pub fn is_extra_special(&self) -> Result<bool> {
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        Ok(self.center().dim() == 1 && self.derived().dim() == 1)
    }

    /// Quotient by a two-sided ideal, with the projection and a section
    /// choosing coset representatives on the ideal's non-pivot coordinates.
    pub fn quotient(&self, n: &Ideal) -> Result<(LeibnizAlgebra, Matrix, Matrix)> {
        let (proj, section) = quotient_basis(&n.space, &self.full_space())?;
        let q = proj.rows();
        let mut brackets = Vec::new();
        for i in 0..q {
            let ui = section_col(&section, i);
            for j in 0..q {
                let uj = section_col(&section, j);
                let w = proj.mul_vec(&self.bracket(&ui, &uj)?)?;
                let terms = sparsify(&w);
                if !terms.is_empty() {
                    brackets.push((i, j, terms));
                }
            }
        }
        let free_labels: Vec<String> = {
            // non-pivot coordinates keep their parent labels
            let pivots = n.space.basis().pivot_cols();
            let mut is_pivot = vec![false; self.dim];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            (0..self.dim)
                .filter(|&i| !is_pivot[i])
                .map(|i| self.labels[i].clone())
                .collect()
        };
        let alg = LeibnizAlgebra::new(self.field, free_labels, &brackets)?;
        debug_assert!(alg.validate().is_valid());
        Ok((alg, proj, section))
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> Result<LeibnizAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut cand = l.clone();
            while labels.contains(&cand) {
                cand.push('\'');
            }
            labels.push(cand);
        }
        let d1 = self.dim;
        let mut brackets = Vec::new();
        for i in 0..d1 {
            for j in 0..d1 {
                if !self.sc[i][j].is_empty() {
                    brackets.push((i, j, self.sc[i][j].clone()));
                }
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                if !other.sc[i][j].is_empty() {
                    let shifted = other.sc[i][j]
                        .iter()
                        .map(|(k, c)| (k + d1, c.clone()))
                        .collect();
                    brackets.push((i + d1, j + d1, shifted));
                }
            }
        }
        LeibnizAlgebra::new(self.field, labels, &brackets)
    }

    /// The structure induced on an ideal (or subalgebra) as a standalone
    /// algebra, together with the inclusion matrix into the parent.
    pub fn restrict_to(&self, s: &Subspace) -> Result<(LeibnizAlgebra, Matrix)> {
        if s.ambient_dim() != self.dim {
            return Err(Error::AmbientMismatch(s.ambient_dim(), self.dim));
        }
        let k = s.dim();
        let basis = s.basis_vectors();
        let mut brackets = Vec::new();
        for i in 0..k {
            for j in 0..k {
                let w = self.bracket(&basis[i], &basis[j])?;
                let coords = s.coords_of(&w).ok_or(Error::NotAnIdeal)?;
                let terms = sparsify(&coords);
                if !terms.is_empty() {
                    brackets.push((i, j, terms));
                }
            }
        }
        let labels = (0..k).map(|i| format!("b{i}")).collect();
        let alg = LeibnizAlgebra::new(self.field, labels, &brackets)?;
        let incl = s.basis().transpose();
        Ok((alg, incl))
    }
}

fn sparsify(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

pub fn section_col(section: &Matrix, j: usize) -> Vector {
    (0..section.rows()).map(|i| section.get(i, j).clone()).collect()
}

enum Side {
    Left,
    Right,
}

/// A two-sided ideal of a fixed parent algebra (validated on construction).
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    pub space: Subspace,
}

impl Ideal {
    pub fn new(parent: &LeibnizAlgebra, space: Subspace) -> Result<Ideal> {
        if !parent.is_ideal(&space)? {
            return Err(Error::NotAnIdeal);
        }
        Ok(Ideal { space })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// An algebra with a distinguished two-sided ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct Pair {
    pub g: LeibnizAlgebra,
    pub n: Ideal,
}

impl Pair {
    pub fn new(g: LeibnizAlgebra, n: Subspace) -> Result<Pair> {
        let n = Ideal::new(&g, n)?;
        Ok(Pair { g, n })
    }

    pub fn full(g: LeibnizAlgebra) -> Pair {
        let space = g.full_space();
        Pair::new(g, space).expect("full space is an ideal")
    }

    /// `Z(g,n) = Z(g) ∩ n`.
    pub fn center_of_pair(&self) -> Subspace {
        self.g
            .center()
            .intersect(&self.n.space)
            .expect("same ambient")
    }

    /// `[g,n]` as a subspace.
    pub fn commutator_with_ideal(&self) -> Subspace {
        self.g
            .product_ideal(&self.g.full_space(), &self.n.space)
            .expect("same ambient")
    }

    pub fn is_central(&self) -> bool {
        self.n.space.is_subspace_of(&self.g.center())
    }

    /// Component-wise direct sum; `n1 ⊕ n2` is an ideal of `g1 ⊕ g2`.
    pub fn direct_sum(&self, other: &Pair) -> Result<Pair> {
        let g = self.g.direct_sum(&other.g)?;
        let d1 = self.g.dim();
        let total = g.dim();
        let field = g.field();
        let mut vectors = Vec::new();
        for v in self.n.space.basis_vectors() {
            let mut w = zero_vec(field, total);
            w[..d1].clone_from_slice(&v);
            vectors.push(w);
        }
        for v in other.n.space.basis_vectors() {
            let mut w = zero_vec(field, total);
            w[d1..].clone_from_slice(&v);
            vectors.push(w);
        }
        Pair::new(g, Subspace::from_span(field, total, vectors))
    }
}

/// Named algebras used throughout the tests and the CLI.
pub mod catalog {
    use super::*;

    /// Abelian algebra of dimension `q`.
    pub fn abelian(field: Field, q: usize) -> LeibnizAlgebra {
        let labels = (1..=q).map(|i| format!("a{i}")).collect();
        LeibnizAlgebra::new(field, labels, &[]).expect("abelian")
    }

    /// `J1 = <x,y | [x,x]=y>`, non-Lie extra special.
    pub fn j1(field: Field) -> LeibnizAlgebra {
        LeibnizAlgebra::new(
            field,
            vec!["x".into(), "y".into()],
            &[(0, 0, vec![(1, Scalar::one(field))])],
        )
        .expect("J1")
    }

    /// `J2 = <x,y,z | [x,y]=z>`, non-Lie extra special.
    pub fn j2(field: Field) -> LeibnizAlgebra {
        LeibnizAlgebra::new(
            field,
            vec!["x".into(), "y".into(), "z".into()],
            &[(0, 1, vec![(2, Scalar::one(field))])],
        )
        .expect("J2")
    }

    /// `H1 = <x,y,z | [x,y]=z=-[y,x]>`, the 3-dimensional Heisenberg Lie algebra.
    pub fn h1(field: Field) -> LeibnizAlgebra {
        LeibnizAlgebra::new(
            field,
            vec!["x".into(), "y".into(), "z".into()],
            &[
                (0, 1, vec![(2, Scalar::one(field))]),
                (1, 0, vec![(2, -&Scalar::one(field))]),
            ],
        )
        .expect("H1")
    }

    /// Heisenberg Lie algebra of dimension `2k+1`.
    pub fn heisenberg(field: Field, k: usize) -> Result<LeibnizAlgebra> {
        if k == 0 {
            return Err(Error::ShapeMismatch("heisenberg needs k >= 1".into()));
        }
        let mut labels: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
        labels.extend((1..=k).map(|i| format!("y{i}")));
        labels.push("z".into());
        let z = 2 * k;
        let mut brackets = Vec::new();
        for i in 0..k {
            brackets.push((i, k + i, vec![(z, Scalar::one(field))]));
            brackets.push((k + i, i, vec![(z, -&Scalar::one(field))]));
        }
        LeibnizAlgebra::new(field, labels, &brackets)
    }

    /// Lookup by name; `param` feeds `abelian` and `heisenberg`.
    pub fn by_name(field: Field, name: &str, param: Option<usize>) -> Result<LeibnizAlgebra> {
        match name.to_ascii_lowercase().as_str() {
            "abelian" | "a" => {
                let q = param.ok_or_else(|| {
                    Error::ShapeMismatch("abelian needs a dimension parameter".into())
                })?;
                Ok(abelian(field, q))
            }
            "j1" => Ok(j1(field)),
            "j2" => Ok(j2(field)),
            "h1" => Ok(h1(field)),
            "heisenberg" | "h" => {
                let k = param.ok_or_else(|| {
                    Error::ShapeMismatch("heisenberg needs a parameter k".into())
                })?;
                heisenberg(field, k)
            }
            other => Err(Error::UnknownCatalog(other.into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;

    fn q() -> Field {
        Field::Q
    }

    fn e(dim: usize, i: usize) -> Vector {
        unit_vec(Field::Q, dim, i)
    }

    #[test]
    fn catalog_algebras_are_valid() {
        for alg in [abelian(q(), 3), j1(q()), j2(q()), h1(q()), heisenberg(q(), 2).unwrap()] {
            assert!(alg.validate().is_valid(), "{:?}", alg.labels());
        }
        assert_eq!(heisenberg(q(), 2).unwrap().dim(), 5);
        assert_eq!(abelian(q(), 0).dim(), 0);
        assert_eq!(heisenberg(q(), 1).unwrap(), {
            // same structure constants as H1 up to labels
            let mut h = h1(q());
            h.labels = heisenberg(q(), 1).unwrap().labels.clone();
            h
        });
    }

    #[test]
    fn invalid_structure_constants_are_reported() {
        // [x,x]=y together with [y,x]=x breaks the identity on (y,y,x)
        let bad = LeibnizAlgebra::new(
            q(),
            vec!["x".into(), "y".into()],
            &[
                (0, 0, vec![(1, Scalar::one(q()))]),
                (1, 0, vec![(0, Scalar::one(q()))]),
            ],
        )
        .unwrap();
        let report = bad.validate();
        assert!(!report.is_valid());
        assert!(report.violations.contains(&LeibnizViolation { i: 1, j: 1, k: 0 }));
    }

    #[test]
    fn bracket_examples() {
        let a = j1(q());
        assert_eq!(a.bracket(&e(2, 0), &e(2, 0)).unwrap(), e(2, 1));
        assert!(a
            .bracket(&zero_vec(q(), 2), &e(2, 0))
            .unwrap()
            .iter()
            .all(Scalar::is_zero));
        let h = h1(q());
        let yz = h.bracket(&e(3, 1), &e(3, 0)).unwrap();
        let mut expect = zero_vec(q(), 3);
        expect[2] = Scalar::from_int(q(), -1);
        assert_eq!(yz, expect);
    }

    #[test]
    fn derived_and_center() {
        let a = j1(q());
        let d = a.derived();
        assert_eq!(d.dim(), 1);
        assert!(d.contains_vec(&e(2, 1)));
        let h = h1(q());
        assert_eq!(h.center().dim(), 1);
        assert!(h.center().contains_vec(&e(3, 2)));
        assert_eq!(abelian(q(), 4).center().dim(), 4);
    }

    #[test]
    fn lower_central_series_and_nilpotency() {
        assert_eq!(abelian(q(), 3).lower_central_series().len(), 2);
        let j2a = j2(q());
        let series = j2a.lower_central_series();
        assert_eq!(series.len(), 3);
        assert_eq!(series[1].dim(), 1);
        assert!(j2a.is_nilpotent());

        // [x,y]=y is not nilpotent
        let solv = LeibnizAlgebra::new(
            q(),
            vec!["x".into(), "y".into()],
            &[(0, 1, vec![(1, Scalar::one(q()))]), (1, 0, vec![(1, -&Scalar::one(q()))])],
        )
        .unwrap();
        assert!(solv.validate().is_valid());
        assert!(!solv.is_nilpotent());
        assert!(solv.minimal_generator_count().is_err());
    }

    #[test]
    fn quotient_examples() {
        let a = j1(q());
        let n = Ideal::new(&a, Subspace::from_span(q(), 2, vec![e(2, 1)])).unwrap();
        let (quot, proj, section) = a.quotient(&n).unwrap();
        assert!(quot.is_abelian());
        assert_eq!(quot.dim(), 1);
        assert_eq!(proj.mul(&section).unwrap(), Matrix::identity(q(), 1));

        let h = h1(q());
        let z = Ideal::new(&h, Subspace::from_span(q(), 3, vec![e(3, 2)])).unwrap();
        let (hq, _, _) = h.quotient(&z).unwrap();
        assert!(hq.is_abelian());
        assert_eq!(hq.dim(), 2);

        let (same, _, _) = a.quotient(&Ideal::new(&a, a.zero_subspace()).unwrap()).unwrap();
        assert_eq!(same.dim(), a.dim());
        assert!(same.validate().is_valid());
    }

    #[test]
    fn direct_sums() {
        let s = abelian(q(), 2).direct_sum(&abelian(q(), 3)).unwrap();
        assert!(s.is_abelian());
        assert_eq!(s.dim(), 5);

        let j1a = j1(q()).direct_sum(&abelian(q(), 3)).unwrap();
        assert_eq!(j1a.dim(), 5);
        assert_eq!(j1a.derived().dim(), 1);

        let hh = h1(q()).direct_sum(&h1(q())).unwrap();
        assert_eq!(hh.dim(), 6);
        assert_eq!(hh.derived().dim(), 2);
        assert!(hh.validate().is_valid());
    }

    #[test]
    fn generator_counts() {
        assert_eq!(abelian(q(), 4).minimal_generator_count().unwrap(), 4);
        assert_eq!(h1(q()).minimal_generator_count().unwrap(), 2);
        let g = j1(q()).direct_sum(&abelian(q(), 2)).unwrap();
        assert_eq!(g.minimal_generator_count().unwrap(), 3);
    }

    #[test]
    fn extra_special_and_lie_flags() {
        assert!(j1(q()).is_extra_special().unwrap());
        assert!(j2(q()).is_extra_special().unwrap());
        assert!(h1(q()).is_extra_special().unwrap());
        assert!(!abelian(q(), 2).is_extra_special().unwrap());
        let g = h1(q()).direct_sum(&abelian(q(), 1)).unwrap();
        assert!(!g.is_extra_special().unwrap());

        assert!(h1(q()).is_lie());
        assert!(abelian(q(), 3).is_lie());
        assert!(!j1(q()).is_lie());
        assert!(!j2(q()).is_lie());
    }

    #[test]
    fn product_ideal_examples() {
        let a = j1(q());
        let full = a.full_space();
        let d = a.product_ideal(&full, &full).unwrap();
        assert!(d.contains_vec(&e(2, 1)));
        assert_eq!(d.dim(), 1);

        let h = h1(q());
        let z = Subspace::from_span(q(), 3, vec![e(3, 2)]);
        assert!(h.product_ideal(&h.full_space(), &z).unwrap().is_zero());
    }

    #[test]
    fn pair_center() {
        let j2a = j2(q());
        let z = Subspace::from_span(q(), 3, vec![e(3, 2)]);
        let p = Pair::new(j2a, z.clone()).unwrap();
        assert_eq!(p.center_of_pair(), z);
    }
}
