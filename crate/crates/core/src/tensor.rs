//! Non-abelian tensor and exterior products of two ideals of a common
//! Leibniz algebra.
//!
//! For ideals `m`, `n` of `g` the product is presented on the symbol space
//! spanned by `m_i * n_j` (the A block) and `n_j * m_i` (the B block), with
//! both ideals acting on each other through the ambient bracket.  Scalar
//! and additive relations are absorbed by working with basis instances, so
//! the remaining defining relations span a subspace of the symbol space and
//! the product is the linear quotient, carrying an induced bracket.

use crate::algebra::{section_col, LeibnizAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{unit_vec, zero_vec, vec_is_zero, Matrix, RowReducer, Vector};
use crate::scalar::{Field, Scalar};
use crate::subspace::{quotient_basis, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Tensor,
    Exterior,
}

/// A presented tensor or exterior product, with its quotient structure.
#[derive(Clone, Debug)]
pub struct TensorPresentation {
    g: LeibnizAlgebra,
    m: Subspace,
    n: Subspace,
    kind: ProductKind,
    /// Subspace of the symbol space killed in the quotient.
    relations: Subspace,
    /// Image of the square generators in the symbol space.
    square: Subspace,
    proj: Matrix,
    section: Matrix,
    /// Bracket coordinates per symbol: `[s,t] = A(mpart(s) x npart(t))`.
    mpart: Vec<Vector>,
    npart: Vec<Vector>,
    quotient_algebra: LeibnizAlgebra,
}

impl TensorPresentation {
    pub fn tensor(g: &LeibnizAlgebra, m: &Subspace, n: &Subspace) -> Result<TensorPresentation> {
        TensorPresentation::build(g, m, n, ProductKind::Tensor)
    }

    pub fn exterior(g: &LeibnizAlgebra, m: &Subspace, n: &Subspace) -> Result<TensorPresentation> {
        TensorPresentation::build(g, m, n, ProductKind::Exterior)
    }

    fn build(
        g: &LeibnizAlgebra,
        m: &Subspace,
        n: &Subspace,
        kind: ProductKind,
    ) -> Result<TensorPresentation> {
        if !g.is_ideal(m)? || !g.is_ideal(n)? {
            return Err(Error::NotAnIdeal);
        }
        let field = g.field();
        let dm = m.dim();
        let dn = n.dim();
        let symbols = 2 * dm * dn;
        let mb = m.basis_vectors();
        let nb = n.basis_vectors();

        // products of basis vectors, in the coordinates of each ideal
        let coords_in = |s: &Subspace, v: &Vector| -> Vector {
            s.coords_of(v).expect("ideal closed under ambient bracket")
        };
        let mut mn_m = vec![vec![Vector::new(); dn]; dm];
        let mut mn_n = vec![vec![Vector::new(); dn]; dm];
        let mut nm_m = vec![vec![Vector::new(); dm]; dn];
        let mut nm_n = vec![vec![Vector::new(); dm]; dn];
        for i in 0..dm {
            for j in 0..dn {
                let uv = g.bracket(&mb[i], &nb[j])?;
                let vu = g.bracket(&nb[j], &mb[i])?;
                mn_m[i][j] = coords_in(m, &uv);
                mn_n[i][j] = coords_in(n, &uv);
                nm_m[j][i] = coords_in(m, &vu);
                nm_n[j][i] = coords_in(n, &vu);
            }
        }
        let mut mm = vec![vec![Vector::new(); dm]; dm];
        for i in 0..dm {
            for k in 0..dm {
                mm[i][k] = coords_in(m, &g.bracket(&mb[i], &mb[k])?);
            }
        }
        let mut nn = vec![vec![Vector::new(); dn]; dn];
        for j in 0..dn {
            for l in 0..dn {
                nn[j][l] = coords_in(n, &g.bracket(&nb[j], &nb[l])?);
            }
        }

        let a_add = |row: &mut Vector, mc: &[Scalar], nc: &[Scalar], negate: bool| {
            for (i, ci) in mc.iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                for (j, cj) in nc.iter().enumerate() {
                    if cj.is_zero() {
                        continue;
                    }
                    let t = ci * cj;
                    let idx = i * dn + j;
                    row[idx] = if negate { &row[idx] - &t } else { &row[idx] + &t };
                }
            }
        };
        let b_add = |row: &mut Vector, nc: &[Scalar], mc: &[Scalar], negate: bool| {
            for (j, cj) in nc.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                for (i, ci) in mc.iter().enumerate() {
                    if ci.is_zero() {
                        continue;
                    }
                    let t = cj * ci;
                    let idx = dm * dn + j * dm + i;
                    row[idx] = if negate { &row[idx] - &t } else { &row[idx] + &t };
                }
            }
        };

        let e_m = |i: usize| unit_vec(field, dm, i);
        let e_n = |j: usize| unit_vec(field, dn, j);

        let mut red = RowReducer::new(field, symbols);
        let push = |row: Vector, red: &mut RowReducer| {
            if !vec_is_zero(&row) {
                red.insert(row);
            }
        };

        // m_i * [n_j,n_l] = m_i^{n_j} * n_l - m_i^{n_l} * n_j
        for i in 0..dm {
            for j in 0..dn {
                for l in 0..dn {
                    let mut row = zero_vec(field, symbols);
                    a_add(&mut row, &e_m(i), &nn[j][l], false);
                    a_add(&mut row, &mn_m[i][j], &e_n(l), true);
                    a_add(&mut row, &mn_m[i][l], &e_n(j), false);
                    push(row, &mut red);
                }
            }
        }
        // n_j * [m_i,m_k] = n_j^{m_i} * m_k - n_j^{m_k} * m_i
        for j in 0..dn {
            for i in 0..dm {
                for k in 0..dm {
                    let mut row = zero_vec(field, symbols);
                    b_add(&mut row, &e_n(j), &mm[i][k], false);
                    b_add(&mut row, &nm_n[j][i], &e_m(k), true);
                    b_add(&mut row, &nm_n[j][k], &e_m(i), false);
                    push(row, &mut red);
                }
            }
        }
        // [m_i,m_k] * n_j = ^{m_i}n_j * m_k - m_i * n_j^{m_k}
        for i in 0..dm {
            for k in 0..dm {
                for j in 0..dn {
                    let mut row = zero_vec(field, symbols);
                    a_add(&mut row, &mm[i][k], &e_n(j), false);
                    b_add(&mut row, &mn_n[i][j], &e_m(k), true);
                    a_add(&mut row, &e_m(i), &nm_n[j][k], false);
                    push(row, &mut red);
                }
            }
        }
        // [n_j,n_l] * m_i = ^{n_j}m_i * n_l - n_j * m_i^{n_l}
        for j in 0..dn {
            for l in 0..dn {
                for i in 0..dm {
                    let mut row = zero_vec(field, symbols);
                    b_add(&mut row, &nn[j][l], &e_m(i), false);
                    a_add(&mut row, &nm_m[j][i], &e_n(l), true);
                    b_add(&mut row, &e_n(j), &mn_m[i][l], false);
                    push(row, &mut red);
                }
            }
        }
        // m_i * ^{m_k}n_j = -(m_i * n_j^{m_k})
        for i in 0..dm {
            for k in 0..dm {
                for j in 0..dn {
                    let mut row = zero_vec(field, symbols);
                    a_add(&mut row, &e_m(i), &mn_n[k][j], false);
                    a_add(&mut row, &e_m(i), &nm_n[j][k], false);
                    push(row, &mut red);
                }
            }
        }
        // n_j * ^{n_l}m_i = -(n_j * m_i^{n_l})
        for j in 0..dn {
            for l in 0..dn {
                for i in 0..dm {
                    let mut row = zero_vec(field, symbols);
                    b_add(&mut row, &e_n(j), &nm_m[l][i], false);
                    b_add(&mut row, &e_n(j), &mn_m[i][l], false);
                    push(row, &mut red);
                }
            }
        }
        // outer equalities of the bracket-defining relations:
        // m^n * ^{m'}n' = ^mn * m'^{n'}, and the three companions
        for i in 0..dm {
            for j in 0..dn {
                if vec_is_zero(&mn_m[i][j]) && vec_is_zero(&mn_n[i][j]) {
                    continue;
                }
                for k in 0..dm {
                    for l in 0..dn {
                        let mut row = zero_vec(field, symbols);
                        a_add(&mut row, &mn_m[i][j], &mn_n[k][l], false);
                        b_add(&mut row, &mn_n[i][j], &mn_m[k][l], true);
                        push(row, &mut red);
                    }
                }
            }
        }
        for j in 0..dn {
            for i in 0..dm {
                if vec_is_zero(&nm_m[j][i]) && vec_is_zero(&nm_n[j][i]) {
                    continue;
                }
                for l in 0..dn {
                    for k in 0..dm {
                        let mut row = zero_vec(field, symbols);
                        a_add(&mut row, &nm_m[j][i], &nm_n[l][k], false);
                        b_add(&mut row, &nm_n[j][i], &nm_m[l][k], true);
                        push(row, &mut red);
                    }
                }
            }
        }
        for i in 0..dm {
            for j in 0..dn {
                if vec_is_zero(&mn_m[i][j]) && vec_is_zero(&mn_n[i][j]) {
                    continue;
                }
                for l in 0..dn {
                    for k in 0..dm {
                        let mut row = zero_vec(field, symbols);
                        a_add(&mut row, &mn_m[i][j], &nm_n[l][k], false);
                        b_add(&mut row, &mn_n[i][j], &nm_m[l][k], true);
                        push(row, &mut red);
                    }
                }
            }
        }
        for j in 0..dn {
            for i in 0..dm {
                if vec_is_zero(&nm_m[j][i]) && vec_is_zero(&nm_n[j][i]) {
                    continue;
                }
                for k in 0..dm {
                    for l in 0..dn {
                        let mut row = zero_vec(field, symbols);
                        a_add(&mut row, &nm_m[j][i], &mn_n[k][l], false);
                        b_add(&mut row, &nm_n[j][i], &mn_m[k][l], true);
                        push(row, &mut red);
                    }
                }
            }
        }
        let base_relations = Subspace::from_matrix_rows(&red.into_matrix());

        // matched symbols come from the intersection: w * w' - w * w' swapped
        let inter = m.intersect(n)?;
        let mut sq_rows = Vec::new();
        for wa in inter.basis_vectors() {
            for wb in inter.basis_vectors() {
                let mut row = zero_vec(field, symbols);
                a_add(&mut row, &coords_in(m, &wa), &coords_in(n, &wb), false);
                b_add(&mut row, &coords_in(n, &wa), &coords_in(m, &wb), true);
                if !vec_is_zero(&row) {
                    sq_rows.push(row);
                }
            }
        }
        let square = Subspace::from_span(field, symbols, sq_rows);

        let relations = match kind {
            ProductKind::Tensor => base_relations,
            ProductKind::Exterior => base_relations.sum(&square)?,
        };

        let mut mpart = Vec::with_capacity(symbols);
        let mut npart = Vec::with_capacity(symbols);
        for i in 0..dm {
            for j in 0..dn {
                mpart.push(mn_m[i][j].clone());
                npart.push(mn_n[i][j].clone());
            }
        }
        for j in 0..dn {
            for i in 0..dm {
                mpart.push(nm_m[j][i].clone());
                npart.push(nm_n[j][i].clone());
            }
        }

        let (proj, section) = quotient_basis(&relations, &Subspace::full(field, symbols))?;

        let mut tp = TensorPresentation {
            g: g.clone(),
            m: m.clone(),
            n: n.clone(),
            kind,
            relations,
            square,
            proj,
            section,
            mpart,
            npart,
            quotient_algebra: LeibnizAlgebra::new(field, Vec::new(), &[])?,
        };
        tp.check_bracket_well_defined()?;
        tp.quotient_algebra = tp.build_quotient_algebra()?;
        debug_assert!(tp.quotient_algebra.validate().is_valid());
        Ok(tp)
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn field(&self) -> Field {
        self.g.field()
    }

    pub fn symbol_dim(&self) -> usize {
        2 * self.m.dim() * self.n.dim()
    }

    /// Dimension of the product as a vector space.
    pub fn dim(&self) -> usize {
        self.symbol_dim() - self.relations.dim()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Image of the square generators in the symbol space (independent of
    /// `kind`; already contained in `relations` for the exterior product).
    pub fn square_subspace(&self) -> &Subspace {
        &self.square
    }

    /// Square generators expressed in the quotient coordinates.
    pub fn square_in_quotient(&self) -> Subspace {
        let mut vs = Vec::new();
        for v in self.square.basis_vectors() {
            vs.push(self.proj.mul_vec(&v).expect("symbol length"));
        }
        Subspace::from_span(self.field(), self.dim(), vs)
    }

    /// Projection from symbol coordinates to quotient coordinates.
    pub fn projection(&self) -> &Matrix {
        &self.proj
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    /// The product as an abstract Leibniz algebra on quotient coordinates.
    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.quotient_algebra
    }

    /// Bilinear bracket on raw symbol coordinates.
    pub fn bracket_symbols(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let field = self.field();
        let dm = self.m.dim();
        let dn = self.n.dim();
        let mut mc = zero_vec(field, dm);
        let mut nc = zero_vec(field, dn);
        for (s, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, x) in self.mpart[s].iter().enumerate() {
                if !x.is_zero() {
                    mc[t] = &mc[t] + &(c * x);
                }
            }
        }
        for (s, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, x) in self.npart[s].iter().enumerate() {
                if !x.is_zero() {
                    nc[t] = &nc[t] + &(c * x);
                }
            }
        }
        let mut out = zero_vec(field, self.symbol_dim());
        for (i, a) in mc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in nc.iter().enumerate() {
                if !b.is_zero() {
                    let idx = i * dn + j;
                    out[idx] = &out[idx] + &(a * b);
                }
            }
        }
        out
    }

    /// The bracket descends to the quotient: bracketing a relation with any
    /// symbol lands back in the relation subspace, on both sides.
    fn check_bracket_well_defined(&self) -> Result<()> {
        let field = self.field();
        let symbols = self.symbol_dim();
        for r in self.relations.basis_vectors() {
            for s in 0..symbols {
                let e = unit_vec(field, symbols, s);
                if !self.relations.contains_vec(&self.bracket_symbols(&r, &e)) {
                    return Err(Error::BracketNotWellDefined);
                }
                if !self.relations.contains_vec(&self.bracket_symbols(&e, &r)) {
                    return Err(Error::BracketNotWellDefined);
                }
            }
        }
        Ok(())
    }

    fn build_quotient_algebra(&self) -> Result<LeibnizAlgebra> {
        let q = self.dim();
        let mut brackets = Vec::new();
        for i in 0..q {
            let ui = section_col(&self.section, i);
            for j in 0..q {
                let uj = section_col(&self.section, j);
                let w = self.proj.mul_vec(&self.bracket_symbols(&ui, &uj))?;
                let terms: Vec<(usize, Scalar)> = w
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                if !terms.is_empty() {
                    brackets.push((i, j, terms));
                }
            }
        }
        let labels = (0..q).map(|i| format!("t{i}")).collect();
        LeibnizAlgebra::new(self.field(), labels, &brackets)
    }

    /// Commutator map on raw symbols: `m_i * n_j -> [m_i, n_j]` and
    /// `n_j * m_i -> [n_j, m_i]`, with values in ambient coordinates.
    pub fn commutator_matrix_symbols(&self) -> Result<Matrix> {
        let field = self.field();
        let dg = self.g.dim();
        let dm = self.m.dim();
        let dn = self.n.dim();
        let mb = self.m.basis_vectors();
        let nb = self.n.basis_vectors();
        let mut cols: Vec<Vector> = Vec::with_capacity(self.symbol_dim());
        for i in 0..dm {
            for j in 0..dn {
                cols.push(self.g.bracket(&mb[i], &nb[j])?);
            }
        }
        for j in 0..dn {
            for i in 0..dm {
                cols.push(self.g.bracket(&nb[j], &mb[i])?);
            }
        }
        let mut mat = Matrix::zeros(field, dg, self.symbol_dim());
        for (s, col) in cols.iter().enumerate() {
            for (k, c) in col.iter().enumerate() {
                if !c.is_zero() {
                    mat.set(k, s, c.clone());
                }
            }
        }
        // the map must be constant on cosets of the killed subspace
        for r in self.relations.basis_vectors() {
            if !vec_is_zero(&mat.mul_vec(&r)?) {
                return Err(Error::RelationNotKilled);
            }
        }
        Ok(mat)
    }

    /// Commutator map on quotient coordinates (g.dim x dim).
    pub fn commutator_matrix(&self) -> Result<Matrix> {
        let sym = self.commutator_matrix_symbols()?;
        sym.mul(&self.section)
    }

    /// Kernel of the commutator map, in quotient coordinates.
    pub fn commutator_kernel(&self) -> Result<Subspace> {
        Ok(self.commutator_matrix()?.kernel())
    }
}

/// The maps `g^k -> g^n -> (g/k)^(n/k)` induced on exterior products by the
/// inclusion and the projections, together with exactness facts about them.
#[derive(Clone, Debug)]
pub struct InducedExteriorMaps {
    pub map1: Matrix,
    pub map2: Matrix,
    pub composite_zero: bool,
    pub map2_surjective: bool,
    pub image_equals_kernel: bool,
}

/// Builds both induced maps for ideals `k <= n` of `g` and checks the
/// three-term exactness at the middle product.
pub fn induced_exterior_maps(
    g: &LeibnizAlgebra,
    k: &Subspace,
    n: &Subspace,
) -> Result<InducedExteriorMaps> {
    if !k.is_subspace_of(n) {
        return Err(Error::SubspaceNotContained);
    }
    let field = g.field();
    let full = g.full_space();
    let src = TensorPresentation::exterior(g, &full, k)?;
    let mid = TensorPresentation::exterior(g, &full, n)?;
    let kn = crate::algebra::Ideal::new(g, k.clone())?;
    let (gq, gproj, _) = g.quotient(&kn)?;
    let mut nq_vecs = Vec::new();
    for v in n.basis_vectors() {
        nq_vecs.push(gproj.mul_vec(&v)?);
    }
    let nq = Subspace::from_span(field, gq.dim(), nq_vecs);
    let dst = TensorPresentation::exterior(&gq, &gq.full_space(), &nq)?;

    // symbol-level map g^k -> g^n: include the k-basis into n-coordinates
    let dg = g.dim();
    let dk = k.dim();
    let dn = n.dim();
    let mut m1_sym = Matrix::zeros(field, 2 * dg * dn, 2 * dg * dk);
    for i in 0..dg {
        for j in 0..dk {
            let coords = n
                .coords_of(k.basis().row(j))
                .expect("containment verified");
            for (t, c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    m1_sym.set(i * dn + t, i * dk + j, c.clone());
                    m1_sym.set(dg * dn + t * dg + i, dg * dk + j * dg + i, c.clone());
                }
            }
        }
    }
    let map1 = induced_on_quotients(&m1_sym, &src, &mid)?;

    // symbol-level map g^n -> (g/k)^(n/k) via the two projections
    let dq = gq.dim();
    let dnq = nq.dim();
    let mut m2_sym = Matrix::zeros(field, 2 * dq * dnq, 2 * dg * dn);
    for i in 0..dg {
        let gi = gproj.mul_vec(&unit_vec(field, dg, i))?;
        for j in 0..dn {
            let nj = nq
                .coords_of(&gproj.mul_vec(n.basis().row(j))?)
                .expect("projected ideal");
            for (a, ca) in gi.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (b, cb) in nj.iter().enumerate() {
                    if cb.is_zero() {
                        continue;
                    }
                    let c = ca * cb;
                    let old = m2_sym.get(a * dnq + b, i * dn + j).clone();
                    m2_sym.set(a * dnq + b, i * dn + j, &old + &c);
                    let old = m2_sym
                        .get(dq * dnq + b * dq + a, dg * dn + j * dg + i)
                        .clone();
                    m2_sym.set(dq * dnq + b * dq + a, dg * dn + j * dg + i, &old + &c);
                }
            }
        }
    }
    let map2 = induced_on_quotients(&m2_sym, &mid, &dst)?;

    let composite_zero = map2.mul(&map1)?.is_zero();
    let map2_surjective = map2.rank() == dst.dim();
    let image = map1.image();
    let kernel = map2.kernel();
    let image_equals_kernel = image == kernel;
    Ok(InducedExteriorMaps {
        map1,
        map2,
        composite_zero,
        map2_surjective,
        image_equals_kernel,
    })
}

/// Pushes a symbol-level linear map down to the two quotients, checking it
/// maps killed vectors to killed vectors.
fn induced_on_quotients(
    sym: &Matrix,
    src: &TensorPresentation,
    dst: &TensorPresentation,
) -> Result<Matrix> {
    for r in src.relations().basis_vectors() {
        if !dst.relations().contains_vec(&sym.mul_vec(&r)?) {
            return Err(Error::RelationNotKilled);
        }
    }
    dst.projection().mul(&sym.mul(src.section())?)
}

/// The trivial-action tensor factor of a direct sum: carrier blocks
/// `A1 = r1 x e2`, `A2 = e2 x r1`, `B1 = e1 x r2`, `B2 = r2 x e1`, where
/// `r_i` are the reduced ideals and `e_i` the abelianized ambients, then
/// quotiented by the span of the matching generators.
#[derive(Clone, Debug)]
pub struct BFactor {
    pub field: Field,
    pub r1: usize,
    pub e1: usize,
    pub r2: usize,
    pub e2: usize,
    pub killed: Subspace,
    pub proj: Matrix,
    pub section: Matrix,
}

impl BFactor {
    /// `left`: per basis vector of the first ideal, its coordinates in the
    /// reduced ideal `r1` and in the abelianization `e1`.  `right`: same
    /// for the second pair.
    pub fn new(
        field: Field,
        dims: (usize, usize, usize, usize),
        left: &[(Vector, Vector)],
        right: &[(Vector, Vector)],
    ) -> Result<BFactor> {
        let (r1, e1, r2, e2) = dims;
        let total = 2 * r1 * e2 + 2 * e1 * r2;
        let mut rows = Vec::new();
        for (a_r1, a_e1) in left {
            for (b_r2, b_e2) in right {
                let mut g1 = zero_vec(field, total);
                add_outer(&mut g1, 0, e2, a_r1, b_e2, false);
                add_outer(&mut g1, 2 * r1 * e2, r2, a_e1, b_r2, true);
                if !vec_is_zero(&g1) {
                    rows.push(g1);
                }
                let mut g2 = zero_vec(field, total);
                add_outer(&mut g2, r1 * e2, r1, b_e2, a_r1, false);
                add_outer(&mut g2, 2 * r1 * e2 + e1 * r2, e1, b_r2, a_e1, true);
                if !vec_is_zero(&g2) {
                    rows.push(g2);
                }
            }
        }
        let killed = Subspace::from_span(field, total, rows);
        let (proj, section) = quotient_basis(&killed, &Subspace::full(field, total))?;
        Ok(BFactor {
            field,
            r1,
            e1,
            r2,
            e2,
            killed,
            proj,
            section,
        })
    }

    pub fn carrier_dim(&self) -> usize {
        2 * self.r1 * self.e2 + 2 * self.e1 * self.r2
    }

    pub fn dim(&self) -> usize {
        self.carrier_dim() - self.killed.dim()
    }

    /// Carrier-coordinate vector for `u x v` placed in block `A1`.
    pub fn a1(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field, self.carrier_dim());
        add_outer(&mut out, 0, self.e2, u, v, false);
        out
    }

    pub fn a2(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field, self.carrier_dim());
        add_outer(&mut out, self.r1 * self.e2, self.r1, u, v, false);
        out
    }

    pub fn b1(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field, self.carrier_dim());
        add_outer(&mut out, 2 * self.r1 * self.e2, self.r2, u, v, false);
        out
    }

    pub fn b2(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.field, self.carrier_dim());
        add_outer(&mut out, 2 * self.r1 * self.e2 + self.e1 * self.r2, self.e1, u, v, false);
        out
    }
}

fn add_outer(
    row: &mut Vector,
    base: usize,
    inner: usize,
    u: &[Scalar],
    v: &[Scalar],
    negate: bool,
) {
    for (i, ci) in u.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        for (j, cj) in v.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let t = ci * cj;
            let idx = base + i * inner + j;
            row[idx] = if negate { &row[idx] - &t } else { &row[idx] + &t };
        }
    }
}

/// The `BFactor` attached to a direct sum of pairs: first ideal reduced by
/// `[g_i, n_i]`, ambient abelianized by `g_i^2`.
pub fn pair_b_factor(p1: &crate::algebra::Pair, p2: &crate::algebra::Pair) -> Result<BFactor> {
    let data = |p: &crate::algebra::Pair| -> Result<Vec<(Vector, Vector)>> {
        let gn = p.commutator_with_ideal();
        let (nproj, _) = quotient_basis(&gn.intersect(&p.n.space)?, &p.n.space)?;
        let (gproj, _) = quotient_basis(&p.g.derived(), &p.g.full_space())?;
        let mut out = Vec::new();
        for (j, v) in p.n.space.basis_vectors().into_iter().enumerate() {
            let nc = nproj.mul_vec(&unit_vec(p.g.field(), p.n.space.dim(), j))?;
            let gc = gproj.mul_vec(&v)?;
            out.push((nc, gc));
        }
        Ok(out)
    };
    let left = data(p1)?;
    let right = data(p2)?;
    let r1 = if left.is_empty() { reduced_ideal_dim(p1)? } else { left[0].0.len() };
    let e1 = p1.g.dim() - p1.g.derived().dim();
    let r2 = if right.is_empty() { reduced_ideal_dim(p2)? } else { right[0].0.len() };
    let e2 = p2.g.dim() - p2.g.derived().dim();
    BFactor::new(p1.g.field(), (r1, e1, r2, e2), &left, &right)
}

fn reduced_ideal_dim(p: &crate::algebra::Pair) -> Result<usize> {
    let gn = p.commutator_with_ideal();
    Ok(p.n.space.dim() - gn.intersect(&p.n.space)?.dim())
}

/// Both sides of the exterior-product decomposition of a direct sum of
/// pairs, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub direct_dim: usize,
    pub part1_dim: usize,
    pub part2_dim: usize,
    pub b_factor_dim: usize,
    pub agree: bool,
}

pub fn direct_sum_decomposition_check(
    p1: &crate::algebra::Pair,
    p2: &crate::algebra::Pair,
) -> Result<DecompositionReport> {
    let sum = p1.direct_sum(p2)?;
    let direct =
        TensorPresentation::exterior(&sum.g, &sum.g.full_space(), &sum.n.space)?.dim();
    let t1 = TensorPresentation::exterior(&p1.g, &p1.g.full_space(), &p1.n.space)?.dim();
    let t2 = TensorPresentation::exterior(&p2.g, &p2.g.full_space(), &p2.n.space)?.dim();
    let b = pair_b_factor(p1, p2)?.dim();
    Ok(DecompositionReport {
        direct_dim: direct,
        part1_dim: t1,
        part2_dim: t2,
        b_factor_dim: b,
        agree: direct == t1 + t2 + b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::*;
    use crate::algebra::Pair;

    fn q() -> Field {
        Field::Q
    }

    fn full_tensor(g: &LeibnizAlgebra) -> TensorPresentation {
        TensorPresentation::tensor(g, &g.full_space(), &g.full_space()).unwrap()
    }

    fn full_exterior(g: &LeibnizAlgebra) -> TensorPresentation {
        TensorPresentation::exterior(g, &g.full_space(), &g.full_space()).unwrap()
    }

    #[test]
    fn abelian_tensor_is_free_on_symbols() {
        let g = abelian(q(), 2);
        let m = Subspace::from_span(q(), 2, vec![unit_vec(q(), 2, 0)]);
        let tp = TensorPresentation::tensor(&g, &m, &m).unwrap();
        assert_eq!(tp.dim(), 2);
        // the two symbols get identified in the exterior product
        let ep = TensorPresentation::exterior(&g, &m, &m).unwrap();
        assert_eq!(ep.dim(), 1);
    }

    #[test]
    fn zero_ideal_gives_zero_product() {
        let g = j1(q());
        let z = g.zero_subspace();
        let tp = TensorPresentation::tensor(&g, &g.full_space(), &z).unwrap();
        assert_eq!(tp.dim(), 0);
    }

    #[test]
    fn j1_tensor_and_exterior_dims() {
        let g = j1(q());
        assert_eq!(full_tensor(&g).dim(), 3);
        assert_eq!(full_exterior(&g).dim(), 2);
    }

    #[test]
    fn abelian_square_dims() {
        for qd in 1..=3usize {
            let g = abelian(q(), qd);
            assert_eq!(full_exterior(&g).dim(), qd * qd);
            assert_eq!(full_tensor(&g).dim(), 2 * qd * qd);
        }
    }

    #[test]
    fn commutator_map_values() {
        let g = j1(q());
        let ep = full_exterior(&g);
        let com = ep.commutator_matrix().unwrap();
        // image is exactly the derived subalgebra
        assert_eq!(com.image(), g.derived());
        let ker = ep.commutator_kernel().unwrap();
        assert_eq!(ker.dim(), 1);
    }

    #[test]
    fn abelian_commutator_is_zero() {
        let g = abelian(q(), 2);
        let ep = full_exterior(&g);
        assert!(ep.commutator_matrix().unwrap().is_zero());
    }

    #[test]
    fn square_is_central_in_tensor() {
        let g = h1(q());
        let tp = full_tensor(&g);
        let sq = tp.square_subspace();
        for v in sq.basis_vectors() {
            for s in 0..tp.symbol_dim() {
                let e = unit_vec(q(), tp.symbol_dim(), s);
                let lhs = tp.bracket_symbols(&v, &e);
                let rhs = tp.bracket_symbols(&e, &v);
                assert!(tp.relations().contains_vec(&lhs));
                assert!(tp.relations().contains_vec(&rhs));
            }
        }
    }

    #[test]
    fn induced_maps_are_exact() {
        let g = h1(q());
        let z = Subspace::from_span(q(), 3, vec![unit_vec(q(), 3, 2)]);
        let full = g.full_space();
        let r = induced_exterior_maps(&g, &z, &full).unwrap();
        assert!(r.composite_zero);
        assert!(r.map2_surjective);
        assert!(r.image_equals_kernel);

        // k = 0: first map has zero source contribution, second is bijective
        let r0 = induced_exterior_maps(&g, &g.zero_subspace(), &full).unwrap();
        assert!(r0.composite_zero);
        assert!(r0.map2_surjective);
        assert_eq!(r0.map2.kernel().dim(), 0);

        // k = n: second map lands in the zero product
        let rn = induced_exterior_maps(&g, &full, &full).unwrap();
        assert!(rn.composite_zero && rn.map2_surjective && rn.image_equals_kernel);
    }

    #[test]
    fn decomposition_matches_direct_computation() {
        let p1 = Pair::full(j1(q()));
        let p2 = Pair::full(abelian(q(), 1));
        let rep = direct_sum_decomposition_check(&p1, &p2).unwrap();
        assert!(rep.agree, "{rep:?}");

        let a1 = Pair::full(abelian(q(), 2));
        let a2 = Pair::full(abelian(q(), 3));
        let rep = direct_sum_decomposition_check(&a1, &a2).unwrap();
        assert!(rep.agree);
        assert_eq!(rep.direct_dim, 25);
        assert_eq!(rep.b_factor_dim, 2 * 2 * 3 * 2 - 2 * 2 * 3);
    }

    #[test]
    fn zero_second_factor_degenerates() {
        let p1 = Pair::full(h1(q()));
        let p2 = Pair::full(abelian(q(), 0));
        let rep = direct_sum_decomposition_check(&p1, &p2).unwrap();
        assert!(rep.agree);
        assert_eq!(rep.part2_dim, 0);
        assert_eq!(rep.b_factor_dim, 0);
        assert_eq!(rep.direct_dim, rep.part1_dim);
    }
}
