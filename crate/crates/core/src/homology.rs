//! First and second homology of a pair (g, n), each computed by several
//! independent routes: the kernel of the commutator map on the exterior
//! product, the mapping cone of the chain map induced by g -> g/n, and two
//! closed forms available when n is central.

use crate::algebra::{Ideal, LeibnizAlgebra, Pair};
use crate::error::{Error, Result};
use crate::matrix::{unit_vec, zero_vec, Matrix, RowReducer, Vector};
use crate::scalar::{Field, Scalar};
use crate::subspace::{quotient_basis, Subspace};
use crate::tensor::{pair_b_factor, TensorPresentation};

/// Default cap on `dim g` for the mapping-cone route, whose chain spaces
/// grow like `dim(g)^3 + dim(g/n)^4`.
pub const DEFAULT_CONE_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exterior,
    Cone,
    Tau,
    Star,
}

#[derive(Clone, Debug)]
pub struct HomologyResult {
    pub dim: usize,
    /// Cycle representatives, in the computing model's coordinates.
    pub representatives: Subspace,
    pub method: Method,
}

/// Tensor-power chain complex of an algebra, truncated at degree `top`.
///
/// `CL_n = g^{(x)n}` with `CL_0` the one-dimensional trivial space, and
/// coordinates ordered lexicographically by index tuple.
#[derive(Clone, Debug)]
pub struct ChainComplexSlice {
    pub dims: Vec<usize>,
    /// `boundaries[n]` is the map `CL_{n+1} -> CL_n`; the first one is 0.
    pub boundaries: Vec<Matrix>,
}

impl ChainComplexSlice {
    pub fn new(g: &LeibnizAlgebra, top: usize) -> ChainComplexSlice {
        let d = g.dim();
        // d = 0 gives CL_0 = F and CL_n = 0 for n >= 1
        let mut dims = vec![1usize];
        for nn in 1..=top {
            dims.push(d.pow(nn as u32));
        }
        let mut boundaries = Vec::with_capacity(top);
        for nn in 1..=top {
            boundaries.push(boundary_matrix(g, nn, &dims));
        }
        for w in boundaries.windows(2) {
            debug_assert!(w[0].mul(&w[1]).expect("adjacent degrees").is_zero());
        }
        ChainComplexSlice { dims, boundaries }
    }

    /// The map `CL_n -> CL_{n-1}`.
    pub fn boundary(&self, n: usize) -> &Matrix {
        &self.boundaries[n - 1]
    }
}

/// `sum over i<j of (-1)^j (x_1 (x) ... [x_i,x_j] at slot i ... omit x_j ...)`.
fn boundary_matrix(g: &LeibnizAlgebra, n: usize, dims: &[usize]) -> Matrix {
    let field = g.field();
    let d = g.dim();
    let rows = dims[n - 1];
    let cols = dims[n];
    let mut m = Matrix::zeros(field, rows, cols);
    if n == 1 {
        return m; // the augmentation to the trivial space is zero
    }
    let mut tuple = vec![0usize; n];
    for col in 0..cols {
        // decode the lexicographic index
        let mut rest = col;
        for slot in (0..n).rev() {
            tuple[slot] = rest % d;
            rest /= d;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for (k, c) in g.structure_constant(tuple[i], tuple[j]) {
                    // replace slot i, omit slot j
                    let mut row_idx = 0usize;
                    for (slot, &t) in tuple.iter().enumerate() {
                        if slot == j {
                            continue;
                        }
                        let v = if slot == i { *k } else { t };
                        row_idx = row_idx * d + v;
                    }
                    // (-1)^j with 1-based j
                    let signed = if (j + 1) % 2 == 0 { c.clone() } else { -c };
                    let old = m.get(row_idx, col).clone();
                    m.set(row_idx, col, &old + &signed);
                }
            }
        }
    }
    m
}

fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    let field = a.field();
    let mut out = Matrix::zeros(field, a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let c = a.get(i, j);
            if c.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    let x = b.get(k, l);
                    if !x.is_zero() {
                        out.set(i * b.rows() + k, j * b.cols() + l, c * x);
                    }
                }
            }
        }
    }
    out
}

/// `n`-th tensor power of a linear map (degree-0 power is the identity on
/// the trivial space).
fn tensor_power(field: Field, m: &Matrix, n: usize) -> Matrix {
    let mut out = Matrix::identity(field, 1);
    for _ in 0..n {
        out = kronecker(&out, m);
    }
    out
}

/// Mapping cone of the chain map induced by `g -> g/n`, truncated so that
/// the second homology of the pair is available.
#[derive(Clone, Debug)]
pub struct MappingCone {
    /// `deltas[i]` is the cone boundary out of `M_{i+2}` (so `deltas[0]`
    /// is the map from degree 2, and `deltas[2]` from degree 4).
    pub deltas: Vec<Matrix>,
}

impl MappingCone {
    pub fn new(pair: &Pair) -> Result<MappingCone> {
        let g = &pair.g;
        let field = g.field();
        let (q, proj, _) = g.quotient(&pair.n)?;
        let cg = ChainComplexSlice::new(g, 3);
        let cq = ChainComplexSlice::new(&q, 4);
        // M_n = CL_{n-1}(g) (+) CL_n(g/n);
        // delta_n(a,b) = (-d_{n-1} a, dbar_n b + pi_{n-1} a)
        let mut deltas = Vec::new();
        for n in 2..=4usize {
            let dg = if n == 2 {
                Matrix::zeros(field, 1, cg.dims[1])
            } else {
                cg.boundary(n - 1).clone()
            };
            let dq = cq.boundary(n).clone();
            let pi = tensor_power(field, &proj, n - 1);
            let top = dg.neg().hstack(&Matrix::zeros(field, dg.rows(), dq.cols()))?;
            let bottom = pi.hstack(&dq)?;
            deltas.push(top.vstack(&bottom)?);
        }
        for w in deltas.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Err(Error::ShapeMismatch(
                    "cone boundary does not square to zero".into(),
                ));
            }
        }
        Ok(MappingCone { deltas })
    }

    /// Second relative homology of the pair: homology at cone degree 3.
    pub fn h3(&self) -> (usize, Subspace) {
        let cycles = self.deltas[1].kernel();
        let boundaries = self.deltas[2].image();
        let mut red = RowReducer::new(
            boundaries.field(),
            boundaries.ambient_dim(),
        );
        for v in boundaries.basis_vectors() {
            red.insert(v);
        }
        let mut reps = Vec::new();
        for v in cycles.basis_vectors() {
            if red.insert(v.clone()) {
                reps.push(v);
            }
        }
        let reps = Subspace::from_span(boundaries.field(), boundaries.ambient_dim(), reps);
        (cycles.dim() - boundaries.dim(), reps)
    }
}

/// `HL_1(g,n) = n/[g,n]`.
pub fn hl1(pair: &Pair) -> Result<HomologyResult> {
    let gn = pair.commutator_with_ideal();
    let inside = gn.intersect(&pair.n.space)?;
    debug_assert_eq!(&inside, &gn, "[g,n] always lies inside the ideal");
    let dim = pair.n.dim() - inside.dim();
    // coset representatives: extend a basis of [g,n] inside n
    let mut red = RowReducer::new(pair.g.field(), pair.g.dim());
    for v in inside.basis_vectors() {
        red.insert(v);
    }
    let mut reps = Vec::new();
    for v in pair.n.space.basis_vectors() {
        if red.insert(v.clone()) {
            reps.push(v);
        }
    }
    Ok(HomologyResult {
        dim,
        representatives: Subspace::from_span(pair.g.field(), pair.g.dim(), reps),
        method: Method::Exterior,
    })
}

/// Kernel of the commutator map on the exterior product `g ^ n`.
pub fn hl2_exterior(pair: &Pair) -> Result<HomologyResult> {
    let ep = TensorPresentation::exterior(&pair.g, &pair.g.full_space(), &pair.n.space)?;
    let ker = ep.commutator_kernel()?;
    Ok(HomologyResult {
        dim: ker.dim(),
        representatives: ker,
        method: Method::Exterior,
    })
}

/// Homology at degree 3 of the mapping cone.
pub fn hl2_cone(pair: &Pair, cap: usize) -> Result<HomologyResult> {
    if pair.g.dim() > cap {
        return Err(Error::DimensionCapExceeded(pair.g.dim(), cap));
    }
    let cone = MappingCone::new(pair)?;
    let (dim, reps) = cone.h3();
    Ok(HomologyResult {
        dim,
        representatives: reps,
        method: Method::Cone,
    })
}

/// Generators of the identification span shared by the two central-ideal
/// closed forms, in the coordinates of `(gbar (x) n) (+) (n (x) gbar)`.
fn central_identifications(pair: &Pair) -> Result<(usize, usize, Vec<Vector>)> {
    let g = &pair.g;
    let field = g.field();
    let (gproj, _) = quotient_basis(&g.derived(), &g.full_space())?;
    let u = gproj.rows();
    let k = pair.n.dim();
    let nb = pair.n.space.basis_vectors();
    let mut bars = Vec::with_capacity(k);
    for v in &nb {
        bars.push(gproj.mul_vec(v)?);
    }
    let total = 2 * u * k;
    let mut gens = Vec::new();
    for i in 0..k {
        for j in 0..k {
            // (nbar_i (x) n_j) in the first block, minus (n_i (x) nbar_j)
            // in the second
            let mut row = zero_vec(field, total);
            for (a, c) in bars[i].iter().enumerate() {
                if !c.is_zero() {
                    row[a * k + j] = &row[a * k + j] + c;
                }
            }
            for (b, c) in bars[j].iter().enumerate() {
                if !c.is_zero() {
                    row[u * k + i * u + b] = &row[u * k + i * u + b] - c;
                }
            }
            if !row.iter().all(Scalar::is_zero) {
                gens.push(row);
            }
        }
    }
    Ok((u, k, gens))
}

/// Cokernel of `tau: n (x) n -> (g/g2 (x) n) (+) (n (x) g/g2)`,
/// `tau(n_i (x) n_j) = (nbar_i (x) n_j, -n_i (x) nbar_j)`.
pub fn hl2_central_tau(pair: &Pair) -> Result<HomologyResult> {
    if !pair.is_central() {
        return Err(Error::IdealNotCentral);
    }
    let field = pair.g.field();
    let (u, k, _) = central_identifications(pair)?;
    let total = 2 * u * k;
    // tau as an explicit matrix, columns indexed by n (x) n
    let mut tau = Matrix::zeros(field, total, k * k);
    for (col, row) in gens_as_columns(pair, u, k)?.into_iter().enumerate() {
        for (r, c) in row.iter().enumerate() {
            if !c.is_zero() {
                tau.set(r, col, c.clone());
            }
        }
    }
    let rank = tau.rank();
    let image = tau.image();
    let reps = coset_representatives(&image, total, field);
    Ok(HomologyResult {
        dim: total - rank,
        representatives: reps,
        method: Method::Tau,
    })
}

fn gens_as_columns(pair: &Pair, u: usize, k: usize) -> Result<Vec<Vector>> {
    let g = &pair.g;
    let field = g.field();
    let (gproj, _) = quotient_basis(&g.derived(), &g.full_space())?;
    let nb = pair.n.space.basis_vectors();
    let mut bars = Vec::with_capacity(k);
    for v in &nb {
        bars.push(gproj.mul_vec(v)?);
    }
    let total = 2 * u * k;
    let mut cols = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let mut col = zero_vec(field, total);
            for (a, c) in bars[i].iter().enumerate() {
                if !c.is_zero() {
                    col[a * k + j] = &col[a * k + j] + c;
                }
            }
            for (b, c) in bars[j].iter().enumerate() {
                if !c.is_zero() {
                    col[u * k + i * u + b] = &col[u * k + i * u + b] - c;
                }
            }
            cols.push(col);
        }
    }
    Ok(cols)
}

fn coset_representatives(killed: &Subspace, total: usize, field: Field) -> Subspace {
    let mut red = RowReducer::new(field, total);
    for v in killed.basis_vectors() {
        red.insert(v);
    }
    let mut reps = Vec::new();
    for j in 0..total {
        let e = unit_vec(field, total, j);
        if red.insert(e.clone()) {
            reps.push(e);
        }
    }
    Subspace::from_span(field, total, reps)
}

/// Trivial-action tensor `g^{ab} * n` modulo the identification of the two
/// placements of each pair of ideal elements.  For `n` inside `g2` no
/// identification survives and the whole tensor is returned.
pub fn hl2_central_star(pair: &Pair) -> Result<HomologyResult> {
    if !pair.is_central() {
        return Err(Error::IdealNotCentral);
    }
    let field = pair.g.field();
    let (u, k, gens) = central_identifications(pair)?;
    let total = 2 * u * k;
    let killed = Subspace::from_span(field, total, gens);
    let reps = coset_representatives(&killed, total, field);
    Ok(HomologyResult {
        dim: total - killed.dim(),
        representatives: reps,
        method: Method::Star,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethReport {
    pub direct_dim: usize,
    pub part1_dim: usize,
    pub part2_dim: usize,
    pub b_factor_dim: usize,
    pub agree: bool,
}

/// Checks the direct-sum formula
/// `HL_2(g1 (+) g2, n1 (+) n2) = HL_2(p1) (+) HL_2(p2) (+) B` by computing
/// both sides independently.
pub fn kunneth_check(p1: &Pair, p2: &Pair) -> Result<KunnethReport> {
    let sum = p1.direct_sum(p2)?;
    let direct = hl2_exterior(&sum)?.dim;
    let h1 = hl2_exterior(p1)?.dim;
    let h2 = hl2_exterior(p2)?.dim;
    let b = pair_b_factor(p1, p2)?.dim();
    Ok(KunnethReport {
        direct_dim: direct,
        part1_dim: h1,
        part2_dim: h2,
        b_factor_dim: b,
        agree: direct == h1 + h2 + b,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
    pub slack: i64,
    /// Only meaningful for the bound that is sharp exactly on abelian
    /// algebras.
    pub equality: bool,
}

/// `dim HL_2(g,n) <= dim HL_2(g/(g2 cap n), n/(g2 cap n))
///  + 2 dim(g2 cap n) d(g/Z(g,n))` for nilpotent g.
pub fn bound_theorem_quotient(pair: &Pair) -> Result<BoundReport> {
    if !pair.g.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let g = &pair.g;
    let lhs = hl2_exterior(pair)?.dim;
    let k = g.derived().intersect(&pair.n.space)?;
    let kid = Ideal::new(g, k.clone())?;
    let (q, proj, _) = g.quotient(&kid)?;
    let mut nq_vecs = Vec::new();
    for v in pair.n.space.basis_vectors() {
        nq_vecs.push(proj.mul_vec(&v)?);
    }
    let nq = Subspace::from_span(g.field(), q.dim(), nq_vecs);
    let qpair = Pair::new(q, nq)?;
    let first = hl2_exterior(&qpair)?.dim;
    let zn = pair.center_of_pair();
    let znid = Ideal::new(g, zn)?;
    let (gz, _, _) = g.quotient(&znid)?;
    let d = gz.minimal_generator_count()?;
    let rhs = first + 2 * k.dim() * d;
    Ok(BoundReport {
        lhs,
        rhs,
        holds: lhs <= rhs,
        slack: rhs as i64 - lhs as i64,
        equality: lhs == rhs,
    })
}

/// `dim HL_2(g) <= (dim g - dim g2)^2 + 2 dim(g2) d(g/Z(g))`, sharp exactly
/// on abelian algebras.
pub fn bound_abelian_gap(g: &LeibnizAlgebra) -> Result<BoundReport> {
    if !g.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let lhs = hl2_exterior(&Pair::full(g.clone()))?.dim;
    let d2 = g.derived().dim();
    let zid = Ideal::new(g, g.center())?;
    let (gz, _, _) = g.quotient(&zid)?;
    let d = gz.minimal_generator_count()?;
    let rhs = (g.dim() - d2) * (g.dim() - d2) + 2 * d2 * d;
    Ok(BoundReport {
        lhs,
        rhs,
        holds: lhs <= rhs,
        slack: rhs as i64 - lhs as i64,
        equality: lhs == rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub whole: usize,
    pub relative: usize,
    pub quotient: usize,
    pub holds: bool,
}

/// When `g = n (+) complement` with both summands ideals, the homology of g
/// splits as the relative part plus the quotient part.
pub fn complement_split_check(pair: &Pair, complement: &Subspace) -> Result<SplitReport> {
    let g = &pair.g;
    if !g.is_ideal(complement)?
        || !pair.n.space.intersect(complement)?.is_zero()
        || pair.n.space.sum(complement)?.dim() != g.dim()
    {
        return Err(Error::NotAComplement);
    }
    let whole = hl2_exterior(&Pair::full(g.clone()))?.dim;
    let relative = hl2_exterior(pair)?.dim;
    let (q, _, _) = g.quotient(&pair.n)?;
    let quotient = hl2_exterior(&Pair::full(q))?.dim;
    Ok(SplitReport {
        whole,
        relative,
        quotient,
        holds: whole == relative + quotient,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeReport {
    pub quotient_dim: usize,
    pub pair_dim: usize,
    pub correction: usize,
    pub holds: bool,
    /// Set when n is central: the sharper comparison without correction.
    pub sharp: Option<bool>,
}

/// `dim HL_2(g/k, n/k) <= dim HL_2(g,n) + dim([g,n] cap k)` for
/// `k <= Z(g) cap n`; without the correction term when n is central.
pub fn snake_inequality_check(pair: &Pair, k: &Subspace) -> Result<SnakeReport> {
    let g = &pair.g;
    let zn = pair.center_of_pair();
    if !k.is_subspace_of(&zn) {
        return Err(Error::NotCentralInPair);
    }
    let pair_dim = hl2_exterior(pair)?.dim;
    let kid = Ideal::new(g, k.clone())?;
    let (q, proj, _) = g.quotient(&kid)?;
    let mut nq_vecs = Vec::new();
    for v in pair.n.space.basis_vectors() {
        nq_vecs.push(proj.mul_vec(&v)?);
    }
    let nq = Subspace::from_span(g.field(), q.dim(), nq_vecs);
    let quotient_dim = hl2_exterior(&Pair::new(q, nq)?)?.dim;
    let correction = pair.commutator_with_ideal().intersect(k)?.dim();
    let holds = quotient_dim <= pair_dim + correction;
    let sharp = if pair.is_central() {
        Some(quotient_dim <= pair_dim)
    } else {
        None
    };
    Ok(SnakeReport {
        quotient_dim,
        pair_dim,
        correction,
        holds,
        sharp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::*;

    fn q() -> Field {
        Field::Q
    }

    fn span(g: &LeibnizAlgebra, idx: &[usize]) -> Subspace {
        Subspace::from_span(
            g.field(),
            g.dim(),
            idx.iter().map(|&i| unit_vec(g.field(), g.dim(), i)).collect(),
        )
    }

    #[test]
    fn hl1_values() {
        let p = Pair::full(h1(q()));
        assert_eq!(hl1(&p).unwrap().dim, 2);
        let j = j1(q());
        let p = Pair::new(j.clone(), span(&j, &[1])).unwrap();
        assert_eq!(hl1(&p).unwrap().dim, 1);
        let a = abelian(q(), 3);
        let p = Pair::new(a.clone(), span(&a, &[0, 1])).unwrap();
        assert_eq!(hl1(&p).unwrap().dim, 2);
    }

    #[test]
    fn abelian_pair_formula() {
        for qd in 0..=3usize {
            for k in 0..=qd {
                let a = abelian(q(), qd);
                let n = span(&a, &(0..k).collect::<Vec<_>>());
                let p = Pair::new(a, n).unwrap();
                assert_eq!(hl2_exterior(&p).unwrap().dim, k * (2 * qd - k));
            }
        }
    }

    #[test]
    fn extra_special_values() {
        assert_eq!(hl2_exterior(&Pair::full(j1(q()))).unwrap().dim, 1);
        assert_eq!(hl2_exterior(&Pair::full(j2(q()))).unwrap().dim, 4);
        assert_eq!(hl2_exterior(&Pair::full(h1(q()))).unwrap().dim, 5);
    }

    #[test]
    fn cone_matches_exterior() {
        let algs = [abelian(q(), 2), j1(q()), j2(q()), h1(q())];
        for g in algs {
            let p = Pair::full(g);
            let e = hl2_exterior(&p).unwrap().dim;
            let c = hl2_cone(&p, DEFAULT_CONE_CAP).unwrap().dim;
            assert_eq!(e, c);
        }
        // a proper ideal too
        let g = j2(q());
        let p = Pair::new(g.clone(), span(&g, &[2])).unwrap();
        assert_eq!(
            hl2_exterior(&p).unwrap().dim,
            hl2_cone(&p, DEFAULT_CONE_CAP).unwrap().dim
        );
    }

    #[test]
    fn cone_cap_is_enforced() {
        let p = Pair::full(abelian(q(), 4));
        assert!(matches!(
            hl2_cone(&p, 3),
            Err(Error::DimensionCapExceeded(4, 3))
        ));
    }

    #[test]
    fn central_methods_agree() {
        let g = j2(q());
        let p = Pair::new(g.clone(), span(&g, &[2])).unwrap();
        assert_eq!(hl2_central_tau(&p).unwrap().dim, 4);
        assert_eq!(hl2_central_star(&p).unwrap().dim, 4);
        assert_eq!(hl2_exterior(&p).unwrap().dim, 4);

        let a = abelian(q(), 3);
        let p = Pair::new(a.clone(), span(&a, &[0])).unwrap();
        assert_eq!(hl2_central_tau(&p).unwrap().dim, 5);
        assert_eq!(hl2_central_star(&p).unwrap().dim, 5);
    }

    #[test]
    fn central_methods_reject_noncentral() {
        let p = Pair::full(h1(q()));
        assert!(matches!(hl2_central_tau(&p), Err(Error::IdealNotCentral)));
        assert!(matches!(hl2_central_star(&p), Err(Error::IdealNotCentral)));
    }

    #[test]
    fn kunneth_j1_j1() {
        let p = Pair::full(j1(q()));
        let rep = kunneth_check(&p, &p).unwrap();
        assert!(rep.agree, "{rep:?}");
        assert_eq!(rep.direct_dim, 4);
        assert_eq!(rep.b_factor_dim, 2);
    }

    #[test]
    fn bounds_hold() {
        let rep = bound_abelian_gap(&abelian(q(), 3)).unwrap();
        assert!(rep.holds && rep.equality);
        let rep = bound_abelian_gap(&h1(q())).unwrap();
        assert!(rep.holds && !rep.equality);
        assert_eq!((rep.lhs, rep.rhs), (5, 8));
        let rep = bound_abelian_gap(&j1(q())).unwrap();
        assert_eq!((rep.lhs, rep.rhs), (1, 3));

        let p = Pair::full(j2(q()));
        let rep = bound_theorem_quotient(&p).unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn split_and_snake() {
        let g = h1(q()).direct_sum(&abelian(q(), 1)).unwrap();
        let n = span(&g, &[3]);
        let comp = span(&g, &[0, 1, 2]);
        let p = Pair::new(g, n).unwrap();
        let rep = complement_split_check(&p, &comp).unwrap();
        assert!(rep.holds, "{rep:?}");

        let g = j2(q());
        let z = span(&g, &[2]);
        let p = Pair::new(g, z.clone()).unwrap();
        let rep = snake_inequality_check(&p, &z).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.sharp, Some(true));
    }
}
