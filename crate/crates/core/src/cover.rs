//! Crossed modules with explicit action tables, validation of the
//! crossed-module and relative-stem-cover axioms, and constructions of
//! stem covers: for abelian pairs, for direct sums of pairs with given
//! covers, and for whole algebras via central extensions by 2-cocycles.
//!
//! Convention for the trivial-action tensor blocks: a displayed pair
//! `(u ∗ v, -v' ∗ u')` places its second component in the opposite
//! symbol block with positive sign (`u' ∗ v'` of the other symbol
//! order), which is the unique reading under which the Peiffer
//! identities hold modulo the identified subspace and which agrees with
//! the explicit decomposition isomorphism used for direct sums.

use crate::algebra::{LeibnizAlgebra, Pair};
use crate::error::{Error, Result};
use crate::homology::hl2_exterior;
use crate::matrix::{unit_vec, vec_add_scaled, vec_is_zero, zero_vec, Matrix, RowReducer, Vector};
use crate::scalar::Scalar;
use crate::subspace::{quotient_basis, Subspace};
use crate::tensor::BFactor;

/// A homomorphism `delta: m -> g` (as a `dim g x dim m` matrix over the
/// bases) together with left and right action tables: `left_action[i][j]`
/// holds `^{x_i} m_j` and `right_action[i][j]` holds `m_j ^{x_i}`, both in
/// `m`-coordinates.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    pub m: LeibnizAlgebra,
    pub g: LeibnizAlgebra,
    pub delta: Matrix,
    pub left_action: Vec<Vec<Vector>>,
    pub right_action: Vec<Vec<Vector>>,
}

impl CrossedModule {
    /// Shape and field checks only; the axioms are verified by
    /// [`validate_crossed_module`].
    pub fn new(
        m: LeibnizAlgebra,
        g: LeibnizAlgebra,
        delta: Matrix,
        left_action: Vec<Vec<Vector>>,
        right_action: Vec<Vec<Vector>>,
    ) -> Result<CrossedModule> {
        if m.field() != g.field() {
            return Err(Error::FieldMismatch(m.field(), g.field()));
        }
        if delta.rows() != g.dim() || delta.cols() != m.dim() {
            return Err(Error::InvalidCrossedModule(format!(
                "delta is {}x{}, expected {}x{}",
                delta.rows(),
                delta.cols(),
                g.dim(),
                m.dim()
            )));
        }
        for table in [&left_action, &right_action] {
            if table.len() != g.dim() {
                return Err(Error::InvalidCrossedModule(
                    "action table has wrong outer length".into(),
                ));
            }
            for row in table {
                if row.len() != m.dim() || row.iter().any(|v| v.len() != m.dim()) {
                    return Err(Error::InvalidCrossedModule(
                        "action table has wrong inner shape".into(),
                    ));
                }
            }
        }
        Ok(CrossedModule {
            m,
            g,
            delta,
            left_action,
            right_action,
        })
    }

    /// Bilinear extension of the left action table.
    pub fn left_act(&self, x: &[Scalar], mv: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.m.field(), self.m.dim());
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in mv.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = a * b;
                vec_add_scaled(&mut out, &self.left_action[i][j], &c);
            }
        }
        out
    }

    /// Bilinear extension of the right action table.
    pub fn right_act(&self, mv: &[Scalar], x: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.m.field(), self.m.dim());
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in mv.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = a * b;
                vec_add_scaled(&mut out, &self.right_action[i][j], &c);
            }
        }
        out
    }

    pub fn delta_of(&self, mv: &[Scalar]) -> Vector {
        self.delta.mul_vec(mv).expect("delta shape checked")
    }

    fn delta_col(&self, j: usize) -> Vector {
        (0..self.g.dim()).map(|i| self.delta.get(i, j).clone()).collect()
    }
}

/// The inclusion of a two-sided ideal with the bracket actions.
pub fn inclusion(g: &LeibnizAlgebra, s: &Subspace) -> Result<CrossedModule> {
    if !g.is_ideal(s)? {
        return Err(Error::NotAnIdeal);
    }
    let (m, incl) = g.restrict_to(s)?;
    let field = g.field();
    let k = s.dim();
    let mut left = Vec::with_capacity(g.dim());
    let mut right = Vec::with_capacity(g.dim());
    for i in 0..g.dim() {
        let e = unit_vec(field, g.dim(), i);
        let mut lrow = Vec::with_capacity(k);
        let mut rrow = Vec::with_capacity(k);
        for j in 0..k {
            let bj = s.basis().row(j);
            let lw = g.bracket(&e, bj)?;
            let rw = g.bracket(bj, &e)?;
            lrow.push(s.coords_of(&lw).ok_or(Error::NotAnIdeal)?);
            rrow.push(s.coords_of(&rw).ok_or(Error::NotAnIdeal)?);
        }
        left.push(lrow);
        right.push(rrow);
    }
    CrossedModule::new(m, g.clone(), incl, left, right)
}

/// The identity crossed module `id: g -> g` with the bracket actions.
pub fn identity(g: &LeibnizAlgebra) -> CrossedModule {
    inclusion(g, &g.full_space()).expect("full space is an ideal")
}

/// The zero crossed module `0 -> g` over the pair `(g, 0)`.
pub fn zero_cover(g: &LeibnizAlgebra) -> Result<StemCoverCandidate> {
    let m = LeibnizAlgebra::new(g.field(), Vec::new(), &[])?;
    let delta = Matrix::zeros(g.field(), g.dim(), 0);
    let left = vec![Vec::new(); g.dim()];
    let right = vec![Vec::new(); g.dim()];
    let cm = CrossedModule::new(m, g.clone(), delta, left, right)?;
    let target = Pair::new(g.clone(), g.zero_subspace())?;
    StemCoverCandidate::new(cm, target)
}

/// Axiom failures, each with the instantiating basis indices.
#[derive(Clone, Debug)]
pub struct CrossedModuleReport {
    pub issues: Vec<String>,
}

impl CrossedModuleReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks every crossed-module axiom on basis instances: the six action
/// axioms, that `delta` is a homomorphism, equivariance of `delta` with
/// both actions, and the two Peiffer identities.
pub fn validate_crossed_module(cm: &CrossedModule) -> CrossedModuleReport {
    let mut issues = Vec::new();
    let dg = cm.g.dim();
    let dm = cm.m.dim();
    let field = cm.m.field();
    for v in &cm.m.validate().violations {
        issues.push(format!(
            "m is not a Leibniz algebra at ({}, {}, {})",
            v.i, v.j, v.k
        ));
    }
    for v in &cm.g.validate().violations {
        issues.push(format!(
            "g is not a Leibniz algebra at ({}, {}, {})",
            v.i, v.j, v.k
        ));
    }
    let eg = |i: usize| unit_vec(field, dg, i);
    let em = |j: usize| unit_vec(field, dm, j);
    let bg = |u: &[Scalar], v: &[Scalar]| cm.g.bracket(u, v).expect("dims fixed");
    let bm = |u: &[Scalar], v: &[Scalar]| cm.m.bracket(u, v).expect("dims fixed");
    let add = |u: &Vector, v: &Vector| -> Vector {
        u.iter().zip(v).map(|(a, b)| a + b).collect()
    };
    let sub = |u: &Vector, v: &Vector| -> Vector {
        u.iter().zip(v).map(|(a, b)| a - b).collect()
    };
    for i in 0..dg {
        for i2 in 0..dg {
            let xx = bg(&eg(i), &eg(i2));
            for j in 0..dm {
                // ^{[x,x']}m = ^x(^{x'}m) + (^x m)^{x'}
                let lhs = cm.left_act(&xx, &em(j));
                let rhs = add(
                    &cm.left_act(&eg(i), &cm.left_action[i2][j]),
                    &cm.right_act(&cm.left_action[i][j], &eg(i2)),
                );
                if lhs != rhs {
                    issues.push(format!("left iterated-action axiom fails at x{i}, x{i2}, m{j}"));
                }
                // m^{[x,x']} = (m^x)^{x'} - (m^{x'})^x
                let lhs = cm.right_act(&em(j), &xx);
                let rhs = sub(
                    &cm.right_act(&cm.right_action[i][j], &eg(i2)),
                    &cm.right_act(&cm.right_action[i2][j], &eg(i)),
                );
                if lhs != rhs {
                    issues.push(format!("right iterated-action axiom fails at x{i}, x{i2}, m{j}"));
                }
                // ^x(^{x'}m) = -^x(m^{x'})
                let lhs = cm.left_act(&eg(i), &cm.left_action[i2][j]);
                let rhs = cm.left_act(&eg(i), &cm.right_action[i2][j]);
                if !vec_is_zero(&add(&lhs, &rhs)) {
                    issues.push(format!("mixed-action axiom fails at x{i}, x{i2}, m{j}"));
                }
            }
        }
    }
    for i in 0..dg {
        for j in 0..dm {
            for k in 0..dm {
                let mm = bm(&em(j), &em(k));
                // ^x[m,m'] = [^x m, m'] - [^x m', m]
                let lhs = cm.left_act(&eg(i), &mm);
                let rhs = sub(
                    &bm(&cm.left_action[i][j], &em(k)),
                    &bm(&cm.left_action[i][k], &em(j)),
                );
                if lhs != rhs {
                    issues.push(format!("left derivation axiom fails at x{i}, m{j}, m{k}"));
                }
                // [m,m']^x = [m^x, m'] + [m, m'^x]
                let lhs = cm.right_act(&mm, &eg(i));
                let rhs = add(
                    &bm(&cm.right_action[i][j], &em(k)),
                    &bm(&em(j), &cm.right_action[i][k]),
                );
                if lhs != rhs {
                    issues.push(format!("right derivation axiom fails at x{i}, m{j}, m{k}"));
                }
                // [m, ^x m'] = -[m, m'^x]
                let lhs = bm(&em(j), &cm.left_action[i][k]);
                let rhs = bm(&em(j), &cm.right_action[i][k]);
                if !vec_is_zero(&add(&lhs, &rhs)) {
                    issues.push(format!("mixed bracket axiom fails at x{i}, m{j}, m{k}"));
                }
            }
        }
    }
    for j in 0..dm {
        for k in 0..dm {
            let mm = bm(&em(j), &em(k));
            // delta is a homomorphism
            let lhs = cm.delta_of(&mm);
            let rhs = bg(&cm.delta_col(j), &cm.delta_col(k));
            if lhs != rhs {
                issues.push(format!("delta homomorphism fails at m{j}, m{k}"));
            }
            // peiffer: ^{delta m} m' = [m, m'] = m ^{delta m'}
            let left = cm.left_act(&cm.delta_col(j), &em(k));
            if left != mm {
                issues.push(format!("left peiffer identity fails at m{j}, m{k}"));
            }
            let right = cm.right_act(&em(j), &cm.delta_col(k));
            if right != mm {
                issues.push(format!("right peiffer identity fails at m{j}, m{k}"));
            }
        }
    }
    for i in 0..dg {
        for j in 0..dm {
            // delta(^x m) = [x, delta m], delta(m^x) = [delta m, x]
            let lhs = cm.delta_of(&cm.left_action[i][j]);
            let rhs = bg(&eg(i), &cm.delta_col(j));
            if lhs != rhs {
                issues.push(format!("left equivariance fails at x{i}, m{j}"));
            }
            let lhs = cm.delta_of(&cm.right_action[i][j]);
            let rhs = bg(&cm.delta_col(j), &eg(i));
            if lhs != rhs {
                issues.push(format!("right equivariance fails at x{i}, m{j}"));
            }
        }
    }
    CrossedModuleReport { issues }
}

/// `Z(g,m) = { m : ^x m = m^x = 0 for all x }`, the kernel of the
/// stacked action matrices.
pub fn relative_center(cm: &CrossedModule) -> Subspace {
    let dm = cm.m.dim();
    let field = cm.m.field();
    let mut rows = Vec::new();
    for table in [&cm.left_action, &cm.right_action] {
        for row in table.iter() {
            for r in 0..dm {
                let v: Vector = (0..dm).map(|j| row[j][r].clone()).collect();
                if !vec_is_zero(&v) {
                    rows.push(v);
                }
            }
        }
    }
    Matrix::from_rows(field, rows, dm)
        .expect("rows share the module dimension")
        .kernel()
}

/// `[g,m]`, the span of all action values.
pub fn action_commutator(cm: &CrossedModule) -> Subspace {
    let mut vectors = Vec::new();
    for table in [&cm.left_action, &cm.right_action] {
        for row in table.iter() {
            for v in row.iter() {
                if !vec_is_zero(v) {
                    vectors.push(v.clone());
                }
            }
        }
    }
    Subspace::from_span(cm.m.field(), cm.m.dim(), vectors)
}

/// A crossed module proposed as a relative stem cover of `target`.
#[derive(Clone, Debug)]
pub struct StemCoverCandidate {
    pub cm: CrossedModule,
    pub target: Pair,
}

impl StemCoverCandidate {
    pub fn new(cm: CrossedModule, target: Pair) -> Result<StemCoverCandidate> {
        if cm.g != target.g {
            return Err(Error::InvalidCrossedModule(
                "candidate and target disagree on the ambient algebra".into(),
            ));
        }
        Ok(StemCoverCandidate { cm, target })
    }
}

/// The three stem-cover conditions, reported separately.
#[derive(Clone, Debug)]
pub struct StemCoverReport {
    pub image_matches_ideal: bool,
    pub kernel_dim: usize,
    pub homology_dim: usize,
    pub kernel_dim_matches: bool,
    pub kernel_is_central: bool,
    pub kernel_in_commutator: bool,
}

impl StemCoverReport {
    pub fn is_valid(&self) -> bool {
        self.image_matches_ideal
            && self.kernel_dim_matches
            && self.kernel_is_central
            && self.kernel_in_commutator
    }
}

/// Checks that `im delta` is the distinguished ideal, that `dim ker delta`
/// equals the second homology of the target pair, and that
/// `ker delta` lies inside `Z(g,m) ∩ [g,m]`.
pub fn validate_stem_cover(c: &StemCoverCandidate) -> Result<StemCoverReport> {
    let image = c.cm.delta.image();
    let kernel = c.cm.delta.kernel();
    let homology_dim = hl2_exterior(&c.target)?.dim;
    let center = relative_center(&c.cm);
    let commutator = action_commutator(&c.cm);
    Ok(StemCoverReport {
        image_matches_ideal: image == c.target.n.space,
        kernel_dim: kernel.dim(),
        homology_dim,
        kernel_dim_matches: kernel.dim() == homology_dim,
        kernel_is_central: kernel.is_subspace_of(&center),
        kernel_in_commutator: kernel.is_subspace_of(&commutator),
    })
}

/// Stem cover of a pair `(g,n)` with `g` abelian: the carrier is
/// `n + (n wedge n) + (n x u) + (u x n)` with `u = g/n`, the bracket of
/// two `n`-coordinates lands in the wedge block, `delta` projects to the
/// first block, and `g` acts through its `n`- and `u`-components into the
/// wedge and mixed blocks respectively.
pub fn abelian_pair_cover(pair: &Pair) -> Result<StemCoverCandidate> {
    if !pair.g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let field = pair.g.field();
    let dg = pair.g.dim();
    let k = pair.n.dim();
    let (proj, section) = quotient_basis(&pair.n.space, &pair.g.full_space())?;
    let u = proj.rows();
    let off_w = k;
    let off_t1 = k + k * k;
    let off_t2 = off_t1 + k * u;
    let dim = off_t2 + u * k;
    let mut brackets = Vec::new();
    for a in 0..k {
        for b in 0..k {
            brackets.push((a, b, vec![(off_w + a * k + b, Scalar::one(field))]));
        }
    }
    let labels = (0..dim).map(|i| format!("c{i}")).collect();
    let m = LeibnizAlgebra::new(field, labels, &brackets)?;
    let mut delta = Matrix::zeros(field, dg, dim);
    for (a, bv) in pair.n.space.basis_vectors().iter().enumerate() {
        for r in 0..dg {
            delta.set(r, a, bv[r].clone());
        }
    }
    let mut left = Vec::with_capacity(dg);
    let mut right = Vec::with_capacity(dg);
    for i in 0..dg {
        let e = unit_vec(field, dg, i);
        let xbar = proj.mul_vec(&e)?;
        let mut rem = e.clone();
        let lift = section.mul_vec(&xbar)?;
        for (r, l) in rem.iter_mut().zip(&lift) {
            *r = &*r - l;
        }
        let nu = pair
            .n
            .space
            .coords_of(&rem)
            .expect("difference lies in the ideal");
        let mut lrow = Vec::with_capacity(dim);
        let mut rrow = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut lv = zero_vec(field, dim);
            let mut rv = zero_vec(field, dim);
            if j < k {
                for (t, c) in nu.iter().enumerate() {
                    lv[off_w + t * k + j] = c.clone();
                    rv[off_w + j * k + t] = c.clone();
                }
                for (s, c) in xbar.iter().enumerate() {
                    lv[off_t1 + j * u + s] = c.clone();
                    rv[off_t2 + s * k + j] = c.clone();
                }
            }
            lrow.push(lv);
            rrow.push(rv);
        }
        left.push(lrow);
        right.push(rrow);
    }
    let cm = CrossedModule::new(m, pair.g.clone(), delta, left, right)?;
    StemCoverCandidate::new(cm, pair.clone())
}

struct CoverSummandData {
    dm: usize,
    dg: usize,
    mbar: Vec<Vector>,
    dbar: Vec<Vector>,
    xbar: Vec<Vector>,
    r: usize,
    e: usize,
}

fn summand_data(cm: &CrossedModule, reduce_by: &Subspace) -> Result<CoverSummandData> {
    let field = cm.m.field();
    let dm = cm.m.dim();
    let dg = cm.g.dim();
    let (pm, _) = quotient_basis(reduce_by, &Subspace::full(field, dm))?;
    let (pg, _) = quotient_basis(&cm.g.derived(), &cm.g.full_space())?;
    let mut mbar = Vec::with_capacity(dm);
    let mut dbar = Vec::with_capacity(dm);
    for a in 0..dm {
        let e = unit_vec(field, dm, a);
        mbar.push(pm.mul_vec(&e)?);
        dbar.push(pg.mul_vec(&cm.delta_of(&e))?);
    }
    let mut xbar = Vec::with_capacity(dg);
    for i in 0..dg {
        xbar.push(pg.mul_vec(&unit_vec(field, dg, i))?);
    }
    Ok(CoverSummandData {
        dm,
        dg,
        mbar,
        dbar,
        xbar,
        r: pm.rows(),
        e: pg.rows(),
    })
}

fn sparsify(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Stem cover of `(g1 + g2, n1 + n2)` from covers of the summands: the
/// carrier is `m1 + m2 + B` with `B` the trivial-action tensor factor on
/// the reduced modules `m_i/[g_i, m_i]` and abelianized ambients, the
/// cross brackets and actions land in `B`, and `delta = delta1 + delta2`.
pub fn direct_sum_cover(
    c1: &StemCoverCandidate,
    c2: &StemCoverCandidate,
) -> Result<StemCoverCandidate> {
    let field = c1.cm.m.field();
    if field != c2.cm.m.field() {
        return Err(Error::FieldMismatch(field, c2.cm.m.field()));
    }
    let d1 = summand_data(&c1.cm, &action_commutator(&c1.cm))?;
    let d2 = summand_data(&c2.cm, &action_commutator(&c2.cm))?;
    let left_data: Vec<(Vector, Vector)> = (0..d1.dm)
        .map(|a| (d1.mbar[a].clone(), d1.dbar[a].clone()))
        .collect();
    let right_data: Vec<(Vector, Vector)> = (0..d2.dm)
        .map(|b| (d2.mbar[b].clone(), d2.dbar[b].clone()))
        .collect();
    let b = BFactor::new(field, (d1.r, d1.e, d2.r, d2.e), &left_data, &right_data)?;
    let off_z = d1.dm + d2.dm;
    let dim = off_z + b.dim();
    let zput = |carrier: Vector| -> Result<Vec<(usize, Scalar)>> {
        let q = b.proj.mul_vec(&carrier)?;
        Ok(sparsify(&q).into_iter().map(|(i, c)| (off_z + i, c)).collect())
    };
    // carrier algebra
    let mut brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)> = Vec::new();
    for i in 0..d1.dm {
        for j in 0..d1.dm {
            let terms = c1.cm.m.structure_constant(i, j).to_vec();
            if !terms.is_empty() {
                brackets.push((i, j, terms));
            }
        }
    }
    for i in 0..d2.dm {
        for j in 0..d2.dm {
            let terms: Vec<(usize, Scalar)> = c2
                .cm
                .m
                .structure_constant(i, j)
                .iter()
                .map(|(t, c)| (t + d1.dm, c.clone()))
                .collect();
            if !terms.is_empty() {
                brackets.push((i + d1.dm, j + d1.dm, terms));
            }
        }
    }
    for a in 0..d1.dm {
        for bx in 0..d2.dm {
            // [m1_a, m2_b] lands in the g1-reduced block of B
            let z = zput(b.b2(&d2.mbar[bx], &d1.dbar[a]))?;
            if !z.is_empty() {
                brackets.push((a, d1.dm + bx, z));
            }
            // [m2_b, m1_a] lands in the g2-reduced block of B
            let z = zput(b.a1(&d1.mbar[a], &d2.dbar[bx]))?;
            if !z.is_empty() {
                brackets.push((d1.dm + bx, a, z));
            }
        }
    }
    let labels = (0..dim).map(|i| format!("m{i}")).collect();
    let m = LeibnizAlgebra::new(field, labels, &brackets)?;
    if !m.validate().is_valid() {
        return Err(Error::InvalidAlgebra(
            "direct-sum cover carrier violates the Leibniz identity".into(),
        ));
    }
    let g = c1.cm.g.direct_sum(&c2.cm.g)?;
    let dg = g.dim();
    let mut delta = Matrix::zeros(field, dg, dim);
    for r in 0..d1.dg {
        for cidx in 0..d1.dm {
            delta.set(r, cidx, c1.cm.delta.get(r, cidx).clone());
        }
    }
    for r in 0..d2.dg {
        for cidx in 0..d2.dm {
            delta.set(d1.dg + r, d1.dm + cidx, c2.cm.delta.get(r, cidx).clone());
        }
    }
    let embed1 = |v: &[Scalar]| -> Vector {
        let mut out = zero_vec(field, dim);
        out[..d1.dm].clone_from_slice(v);
        out
    };
    let embed2 = |v: &[Scalar]| -> Vector {
        let mut out = zero_vec(field, dim);
        out[d1.dm..d1.dm + d2.dm].clone_from_slice(v);
        out
    };
    let from_z = |carrier: Vector| -> Result<Vector> {
        let q = b.proj.mul_vec(&carrier)?;
        let mut out = zero_vec(field, dim);
        out[off_z..].clone_from_slice(&q);
        Ok(out)
    };
    let mut left = Vec::with_capacity(dg);
    let mut right = Vec::with_capacity(dg);
    for i in 0..dg {
        let mut lrow = Vec::with_capacity(dim);
        let mut rrow = Vec::with_capacity(dim);
        for j in 0..dim {
            let (lv, rv) = if i < d1.dg {
                if j < d1.dm {
                    (
                        embed1(&c1.cm.left_action[i][j]),
                        embed1(&c1.cm.right_action[i][j]),
                    )
                } else if j < off_z {
                    let bx = j - d1.dm;
                    (
                        from_z(b.b2(&d2.mbar[bx], &d1.xbar[i]))?,
                        from_z(b.b1(&d1.xbar[i], &d2.mbar[bx]))?,
                    )
                } else {
                    (zero_vec(field, dim), zero_vec(field, dim))
                }
            } else {
                let i2 = i - d1.dg;
                if j < d1.dm {
                    (
                        from_z(b.a1(&d1.mbar[j], &d2.xbar[i2]))?,
                        from_z(b.a2(&d2.xbar[i2], &d1.mbar[j]))?,
                    )
                } else if j < off_z {
                    let bx = j - d1.dm;
                    (
                        embed2(&c2.cm.left_action[i2][bx]),
                        embed2(&c2.cm.right_action[i2][bx]),
                    )
                } else {
                    (zero_vec(field, dim), zero_vec(field, dim))
                }
            };
            lrow.push(lv);
            rrow.push(rv);
        }
        left.push(lrow);
        right.push(rrow);
    }
    let cm = CrossedModule::new(m, g, delta, left, right)?;
    let target = c1.target.direct_sum(&c2.target)?;
    StemCoverCandidate::new(cm, target)
}

/// Stem cover of `g1 + g2` from covers of the whole summands: the carrier
/// is `m1 + m2 + (m1^ab x m2^ab) + (m2^ab x m1^ab)`, a specialization of
/// [`direct_sum_cover`] in which the abelianized ambients are identified
/// with the module abelianizations through `delta`.
pub fn cover_of_direct_sum(
    c1: &StemCoverCandidate,
    c2: &StemCoverCandidate,
) -> Result<StemCoverCandidate> {
    let field = c1.cm.m.field();
    if field != c2.cm.m.field() {
        return Err(Error::FieldMismatch(field, c2.cm.m.field()));
    }
    for c in [c1, c2] {
        if c.target.n.space != c.target.g.full_space() {
            return Err(Error::ShapeMismatch(
                "inputs must be covers of whole algebras".into(),
            ));
        }
    }
    let ab_data = |cm: &CrossedModule| -> Result<(Vec<Vector>, Vec<Vector>, usize)> {
        let field = cm.m.field();
        let dm = cm.m.dim();
        let (pm, _) = quotient_basis(&cm.m.derived(), &Subspace::full(field, dm))?;
        let mbar: Vec<Vector> = (0..dm)
            .map(|a| pm.mul_vec(&unit_vec(field, dm, a)))
            .collect::<Result<_>>()?;
        let mut psi = Vec::with_capacity(cm.g.dim());
        for i in 0..cm.g.dim() {
            let pre = cm
                .delta
                .solve(&unit_vec(field, cm.g.dim(), i))
                .ok_or_else(|| Error::ShapeMismatch("delta is not surjective".into()))?;
            psi.push(pm.mul_vec(&pre)?);
        }
        Ok((mbar, psi, pm.rows()))
    };
    let (mbar1, psi1, r1) = ab_data(&c1.cm)?;
    let (mbar2, psi2, r2) = ab_data(&c2.cm)?;
    let dm1 = c1.cm.m.dim();
    let dm2 = c2.cm.m.dim();
    let dg1 = c1.cm.g.dim();
    let off_z1 = dm1 + dm2;
    let off_z2 = off_z1 + r1 * r2;
    let dim = off_z2 + r2 * r1;
    // u from the first abelianization, v from the second
    let z1 = |u: &[Scalar], v: &[Scalar]| -> Vector {
        let mut out = zero_vec(field, dim);
        for (a, ca) in u.iter().enumerate() {
            for (bx, cb) in v.iter().enumerate() {
                if !ca.is_zero() && !cb.is_zero() {
                    out[off_z1 + a * r2 + bx] = ca * cb;
                }
            }
        }
        out
    };
    let z2 = |v: &[Scalar], u: &[Scalar]| -> Vector {
        let mut out = zero_vec(field, dim);
        for (bx, cb) in v.iter().enumerate() {
            for (a, ca) in u.iter().enumerate() {
                if !ca.is_zero() && !cb.is_zero() {
                    out[off_z2 + bx * r1 + a] = cb * ca;
                }
            }
        }
        out
    };
    let mut brackets: Vec<(usize, usize, Vec<(usize, Scalar)>)> = Vec::new();
    for i in 0..dm1 {
        for j in 0..dm1 {
            let terms = c1.cm.m.structure_constant(i, j).to_vec();
            if !terms.is_empty() {
                brackets.push((i, j, terms));
            }
        }
    }
    for i in 0..dm2 {
        for j in 0..dm2 {
            let terms: Vec<(usize, Scalar)> = c2
                .cm
                .m
                .structure_constant(i, j)
                .iter()
                .map(|(t, c)| (t + dm1, c.clone()))
                .collect();
            if !terms.is_empty() {
                brackets.push((i + dm1, j + dm1, terms));
            }
        }
    }
    for a in 0..dm1 {
        for bx in 0..dm2 {
            let t = sparsify(&z2(&mbar2[bx], &mbar1[a]));
            if !t.is_empty() {
                brackets.push((a, dm1 + bx, t));
            }
            let t = sparsify(&z1(&mbar1[a], &mbar2[bx]));
            if !t.is_empty() {
                brackets.push((dm1 + bx, a, t));
            }
        }
    }
    let labels = (0..dim).map(|i| format!("m{i}")).collect();
    let m = LeibnizAlgebra::new(field, labels, &brackets)?;
    if !m.validate().is_valid() {
        return Err(Error::InvalidAlgebra(
            "direct-sum cover carrier violates the Leibniz identity".into(),
        ));
    }
    let g = c1.cm.g.direct_sum(&c2.cm.g)?;
    let dg = g.dim();
    let mut delta = Matrix::zeros(field, dg, dim);
    for r in 0..dg1 {
        for cidx in 0..dm1 {
            delta.set(r, cidx, c1.cm.delta.get(r, cidx).clone());
        }
    }
    for r in 0..c2.cm.g.dim() {
        for cidx in 0..dm2 {
            delta.set(dg1 + r, dm1 + cidx, c2.cm.delta.get(r, cidx).clone());
        }
    }
    let embed1 = |v: &[Scalar]| -> Vector {
        let mut out = zero_vec(field, dim);
        out[..dm1].clone_from_slice(v);
        out
    };
    let embed2 = |v: &[Scalar]| -> Vector {
        let mut out = zero_vec(field, dim);
        out[dm1..dm1 + dm2].clone_from_slice(v);
        out
    };
    let mut left = Vec::with_capacity(dg);
    let mut right = Vec::with_capacity(dg);
    for i in 0..dg {
        let mut lrow = Vec::with_capacity(dim);
        let mut rrow = Vec::with_capacity(dim);
        for j in 0..dim {
            let (lv, rv) = if i < dg1 {
                if j < dm1 {
                    (
                        embed1(&c1.cm.left_action[i][j]),
                        embed1(&c1.cm.right_action[i][j]),
                    )
                } else if j < off_z1 {
                    let bx = j - dm1;
                    (z2(&mbar2[bx], &psi1[i]), z1(&psi1[i], &mbar2[bx]))
                } else {
                    (zero_vec(field, dim), zero_vec(field, dim))
                }
            } else {
                let i2 = i - dg1;
                if j < dm1 {
                    (z1(&mbar1[j], &psi2[i2]), z2(&psi2[i2], &mbar1[j]))
                } else if j < off_z1 {
                    let bx = j - dm1;
                    (
                        embed2(&c2.cm.left_action[i2][bx]),
                        embed2(&c2.cm.right_action[i2][bx]),
                    )
                } else {
                    (zero_vec(field, dim), zero_vec(field, dim))
                }
            };
            lrow.push(lv);
            rrow.push(rv);
        }
        left.push(lrow);
        right.push(rrow);
    }
    let cm = CrossedModule::new(m, g.clone(), delta, left, right)?;
    StemCoverCandidate::new(cm, Pair::full(g))
}

/// Stem cover of a whole algebra as a central extension: solves the
/// 2-cocycle conditions exactly, picks cocycles spanning a complement of
/// the coboundaries, and extends `g` centrally by one coordinate per
/// chosen cocycle.  The actions are brackets with coordinate preimages.
pub fn stem_cover_full(g: &LeibnizAlgebra) -> Result<StemCoverCandidate> {
    let field = g.field();
    let d = g.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                // c([a,b],k) - c([a,k],b) - c(a,[b,k]) = 0
                let mut row = zero_vec(field, d * d);
                for (t, c) in g.structure_constant(i, j) {
                    row[t * d + k] = &row[t * d + k] + c;
                }
                for (t, c) in g.structure_constant(i, k) {
                    row[t * d + j] = &row[t * d + j] - c;
                }
                for (t, c) in g.structure_constant(j, k) {
                    row[i * d + t] = &row[i * d + t] - c;
                }
                if !vec_is_zero(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let cocycles = Matrix::from_rows(field, rows, d * d)?.kernel();
    let mut red = RowReducer::new(field, d * d);
    for l in 0..d {
        let mut v = zero_vec(field, d * d);
        for i in 0..d {
            for j in 0..d {
                for (t, c) in g.structure_constant(i, j) {
                    if *t == l {
                        v[i * d + j] = &v[i * d + j] + c;
                    }
                }
            }
        }
        red.insert(v);
    }
    let mut reps: Vec<Vector> = Vec::new();
    for v in cocycles.basis_vectors() {
        if red.insert(v.clone()) {
            reps.push(v);
        }
    }
    let h = reps.len();
    let dm = d + h;
    let mut brackets = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let mut terms = g.structure_constant(i, j).to_vec();
            for (l, c) in reps.iter().enumerate() {
                if !c[i * d + j].is_zero() {
                    terms.push((d + l, c[i * d + j].clone()));
                }
            }
            if !terms.is_empty() {
                brackets.push((i, j, terms));
            }
        }
    }
    let labels = (0..dm).map(|i| format!("m{i}")).collect();
    let m = LeibnizAlgebra::new(field, labels, &brackets)?;
    if !m.validate().is_valid() {
        return Err(Error::InvalidAlgebra(
            "cocycle extension violates the Leibniz identity".into(),
        ));
    }
    let mut delta = Matrix::zeros(field, d, dm);
    for i in 0..d {
        delta.set(i, i, Scalar::one(field));
    }
    let embed = |i: usize| -> Vector {
        let mut v = zero_vec(field, dm);
        v[i] = Scalar::one(field);
        v
    };
    let mut left = Vec::with_capacity(d);
    let mut right = Vec::with_capacity(d);
    for i in 0..d {
        let xe = embed(i);
        let mut lrow = Vec::with_capacity(dm);
        let mut rrow = Vec::with_capacity(dm);
        for j in 0..dm {
            let me = unit_vec(field, dm, j);
            lrow.push(m.bracket(&xe, &me)?);
            rrow.push(m.bracket(&me, &xe)?);
        }
        left.push(lrow);
        right.push(rrow);
    }
    let cm = CrossedModule::new(m, g.clone(), delta, left, right)?;
    StemCoverCandidate::new(cm, Pair::full(g.clone()))
}
