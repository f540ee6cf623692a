//! Acceptance suite: ten end-to-end checks of the library's dimension
//! formulas, method cross-validation, classification verdicts, cover
//! constructions and chain-complex sanity.  Each check prints a single
//! pass/fail line.

use leibniz_core::algebra::{catalog, LeibnizAlgebra, Pair};
use leibniz_core::classify::{
    defect, defect_three_verdict, extra_special_plus_abelian, low_defect_verdict, MatchedCase,
    TableRow, two_dim_ideal_table,
};
use leibniz_core::cover::{
    abelian_pair_cover, cover_of_direct_sum, direct_sum_cover, stem_cover_full,
    validate_stem_cover,
};
use leibniz_core::homology::{
    bound_abelian_gap, bound_theorem_quotient, hl1, hl2_central_star, hl2_central_tau, hl2_cone,
    hl2_exterior, kunneth_check, ChainComplexSlice, MappingCone, DEFAULT_CONE_CAP,
};
use leibniz_core::matrix::{unit_vec, Vector};
use leibniz_core::scalar::Field;
use leibniz_core::subspace::Subspace;
use leibniz_core::tensor::TensorPresentation;

fn q() -> Field {
    Field::Q
}

fn criterion(name: &str, ok: bool) {
    println!("{name}: {}", if ok { "pass" } else { "fail" });
    assert!(ok, "{name} failed");
}

fn span(g: &LeibnizAlgebra, idx: &[usize]) -> Subspace {
    Subspace::from_span(
        g.field(),
        g.dim(),
        idx.iter()
            .map(|&i| unit_vec(g.field(), g.dim(), i))
            .collect(),
    )
}

fn span_vecs(g: &LeibnizAlgebra, vecs: Vec<Vector>) -> Subspace {
    Subspace::from_span(g.field(), g.dim(), vecs)
}

fn pair(g: &LeibnizAlgebra, idx: &[usize]) -> Pair {
    Pair::new(g.clone(), span(g, idx)).expect("ideal")
}

/// Catalog-built test pairs with ambient dimension at most 5.
fn corpus() -> Vec<Pair> {
    let mut out = Vec::new();
    for qd in 1..=5usize {
        let a = catalog::abelian(q(), qd);
        for k in 0..=qd {
            out.push(pair(&a, &(0..k).collect::<Vec<_>>()));
        }
    }
    let j1 = catalog::j1(q());
    for idx in [&[][..], &[1], &[0, 1]] {
        out.push(pair(&j1, idx));
    }
    let j2 = catalog::j2(q());
    for idx in [&[][..], &[2], &[2, 1], &[2, 0], &[0, 1, 2]] {
        out.push(pair(&j2, idx));
    }
    let h1 = catalog::h1(q());
    for idx in [&[][..], &[2], &[2, 0], &[2, 1], &[0, 1, 2]] {
        out.push(pair(&h1, idx));
    }
    let h2 = catalog::heisenberg(q(), 2).unwrap();
    for idx in [&[][..], &[4], &[0, 1, 2, 3, 4]] {
        out.push(pair(&h2, idx));
    }
    let ja = j1.direct_sum(&catalog::abelian(q(), 1)).unwrap();
    for idx in [&[][..], &[1], &[2], &[1, 2], &[0, 1, 2]] {
        out.push(pair(&ja, idx));
    }
    let jj = j1.direct_sum(&j1).unwrap();
    for idx in [&[1, 3][..], &[0, 1, 2, 3]] {
        out.push(pair(&jj, idx));
    }
    out
}

#[test]
fn abelian_pair_dimension_formula() {
    let mut ok = true;
    for qd in 0..=4usize {
        let a = catalog::abelian(q(), qd);
        for k in 0..=qd {
            let p = pair(&a, &(0..k).collect::<Vec<_>>());
            let dim = hl2_exterior(&p).unwrap().dim;
            ok &= dim == k * (2 * qd - k);
        }
    }
    criterion("abelian pair dimension formula", ok);
}

#[test]
fn extra_special_dimensions() {
    let mut ok = true;
    for (g, t) in [
        (catalog::j1(q()), 1usize),
        (catalog::j2(q()), 1),
        (catalog::h1(q()), 2),
    ] {
        let d = g.dim();
        let expected = (d - 1) * (d - 1) - 1 + t;
        let dim = hl2_exterior(&Pair::full(g)).unwrap().dim;
        ok &= dim == expected;
    }
    criterion("extra special whole-algebra dimensions", ok);
}

#[test]
fn extra_special_ideal_tables() {
    let mut ok = true;
    // every proper nonzero ideal contains z; 2-dimensional ones are
    // span{z, w} with w in the plane spanned by x and y
    for (g, by_dim) in [
        (catalog::j2(q()), [4usize, 3, 4]),
        (catalog::h1(q()), [4, 4, 5]),
    ] {
        let e = |i: usize| unit_vec(q(), 3, i);
        let one_dims = vec![span(&g, &[2])];
        let two_dims = vec![
            span(&g, &[2, 0]),
            span(&g, &[2, 1]),
            span_vecs(&g, vec![e(2), vec![&e(0)[0] + &e(1)[0], e(0)[1].clone(), e(0)[2].clone()]]),
        ];
        let full = vec![g.full_space()];
        for (expected, ideals) in [(by_dim[0], one_dims), (by_dim[1], two_dims), (by_dim[2], full)]
        {
            for n in ideals {
                let p = Pair::new(g.clone(), n).unwrap();
                ok &= hl2_exterior(&p).unwrap().dim == expected;
            }
        }
    }
    criterion("extra special ideal tables", ok);
}

#[test]
fn extra_special_plus_abelian_sweep() {
    let mut ok = true;
    for e_name in ["j1", "j2", "h1"] {
        let e_dim = if e_name == "j1" { 2 } else { 3 };
        for qd in 0..=2usize {
            let g = extra_special_plus_abelian(q(), e_name, qd).unwrap();
            let mut cases: Vec<(Subspace, TableRow)> = Vec::new();
            // a 2-dimensional ideal inside the trailing abelian part
            if qd >= 2 {
                cases.push((span(&g, &[e_dim, e_dim + 1]), TableRow::InsideAbelianPart));
            }
            // central and containing the commutator: e2 plus an abelian line
            if qd >= 1 {
                let e2_idx = if e_name == "j1" { 1 } else { 2 };
                cases.push((
                    span(&g, &[e2_idx, e_dim]),
                    TableRow::CentralContainingCommutator,
                ));
            }
            // neither: the commutator plus a non-central generator
            let other_idx: &[usize] = if e_name == "j1" { &[1, 0] } else { &[2, 0] };
            cases.push((span(&g, other_idx), TableRow::Otherwise));
            for (n, row) in cases {
                let p = Pair::new(g.clone(), n).unwrap();
                let rep = two_dim_ideal_table(e_name, qd, &p).unwrap();
                ok &= rep.agree && rep.row == row;
            }
        }
    }
    criterion("two-dimensional ideal case tables", ok);
}

#[test]
fn independent_methods_agree() {
    let pairs = corpus();
    assert!(pairs.len() >= 40, "corpus has {} pairs", pairs.len());
    let mut ok = true;
    for p in &pairs {
        let e = hl2_exterior(p).unwrap().dim;
        let c = hl2_cone(p, DEFAULT_CONE_CAP).unwrap().dim;
        ok &= e == c;
        if p.is_central() {
            ok &= hl2_central_tau(p).unwrap().dim == e;
            ok &= hl2_central_star(p).unwrap().dim == e;
        }
    }
    criterion("independent methods agree on the corpus", ok);
}

#[test]
fn direct_sum_dimension_identity() {
    // all (unordered) direct sums of small factor pairs
    let mut factors = Vec::new();
    let a1 = catalog::abelian(q(), 1);
    let a2 = catalog::abelian(q(), 2);
    let a3 = catalog::abelian(q(), 3);
    factors.push(pair(&a1, &[]));
    factors.push(pair(&a1, &[0]));
    factors.push(pair(&a2, &[0]));
    factors.push(pair(&a3, &[0, 1]));
    let j1 = catalog::j1(q());
    factors.push(pair(&j1, &[1]));
    factors.push(pair(&j1, &[0, 1]));
    let j2 = catalog::j2(q());
    factors.push(pair(&j2, &[2]));
    factors.push(pair(&j2, &[0, 1, 2]));
    let h1 = catalog::h1(q());
    factors.push(pair(&h1, &[2]));
    factors.push(pair(&h1, &[0, 1, 2]));
    let mut ok = true;
    for (i, p1) in factors.iter().enumerate() {
        for p2 in &factors[i..] {
            let rep = kunneth_check(p1, p2).unwrap();
            ok &= rep.agree;
        }
    }
    criterion("direct sum dimension identity", ok);
}

#[test]
fn nilpotent_upper_bounds() {
    let mut ok = true;
    for p in &corpus() {
        ok &= bound_theorem_quotient(p).unwrap().holds;
    }
    let algebras = [
        catalog::abelian(q(), 0),
        catalog::abelian(q(), 2),
        catalog::abelian(q(), 4),
        catalog::j1(q()),
        catalog::j2(q()),
        catalog::h1(q()),
        catalog::heisenberg(q(), 2).unwrap(),
        catalog::j1(q()).direct_sum(&catalog::abelian(q(), 2)).unwrap(),
        catalog::j1(q()).direct_sum(&catalog::j2(q())).unwrap(),
    ];
    for g in &algebras {
        let rep = bound_abelian_gap(g).unwrap();
        ok &= rep.holds && rep.equality == g.is_abelian();
    }
    criterion("nilpotent upper bounds with sharpness", ok);
}

#[test]
fn defect_classification() {
    let mut ok = true;
    // defect 0: abelian ambients, any ideal
    for k in 0..=3usize {
        let a = catalog::abelian(q(), 3);
        let v = low_defect_verdict(&pair(&a, &(0..k).collect::<Vec<_>>())).unwrap();
        ok &= v.defect == 0 && v.matched_case == MatchedCase::Abelian && v.consistent;
    }
    // defect 1: one-dimensional commutator taken as the ideal
    for e_name in ["j1", "j2", "h1"] {
        for qd in [0usize, 2] {
            let g = extra_special_plus_abelian(q(), e_name, qd).unwrap();
            let p = Pair::new(g.clone(), g.derived()).unwrap();
            let v = low_defect_verdict(&p).unwrap();
            ok &= v.defect == 1
                && v.matched_case == MatchedCase::ExtraSpecialCommutator
                && v.consistent;
        }
    }
    // defect 2: a central line independent from the commutator
    for (e, line) in [
        (catalog::j1(q()), 2usize),
        (catalog::j2(q()), 3),
        (catalog::h1(q()), 3),
    ] {
        let g = e.direct_sum(&catalog::abelian(q(), 1)).unwrap();
        let v = low_defect_verdict(&pair(&g, &[line])).unwrap();
        ok &= v.defect == 2
            && v.matched_case == MatchedCase::OneDimCentralSummand
            && v.consistent
            && v.evidence.witness_found == Some(true);
    }
    // converse direction: pairs outside the three shapes have defect > 2
    for p in [
        Pair::full(catalog::j2(q())),
        Pair::full(catalog::h1(q())),
        pair(&catalog::heisenberg(q(), 2).unwrap(), &[0, 1, 2, 3, 4]),
    ] {
        let v = low_defect_verdict(&p).unwrap();
        ok &= v.matched_case == MatchedCase::Unclassified && v.consistent && v.defect > 2;
    }
    // defect 3, first shape: two-dimensional commutator, central line inside it
    let g = catalog::j2(q()).direct_sum(&catalog::j1(q())).unwrap();
    let p = pair(&g, &[2]);
    ok &= defect(&p).unwrap() == 3;
    let v = defect_three_verdict(&p).unwrap();
    ok &= v.matched_case == MatchedCase::Case3a && v.consistent;
    // defect 3, second shape: central plane containing a one-dimensional
    // commutator
    let g = catalog::j1(q()).direct_sum(&catalog::abelian(q(), 1)).unwrap();
    let p = pair(&g, &[1, 2]);
    ok &= defect(&p).unwrap() == 3;
    let v = defect_three_verdict(&p).unwrap();
    ok &= v.matched_case == MatchedCase::Case3b && v.consistent;
    // converse direction: neither shape, defect away from 3
    let v = defect_three_verdict(&Pair::full(catalog::h1(q()))).unwrap();
    ok &= v.matched_case == MatchedCase::Unclassified && v.consistent && v.defect != 3;
    criterion("defect classification in both directions", ok);
}

#[test]
fn stem_cover_constructions() {
    let mut ok = true;
    // abelian pairs: the cover validates and the two-block dimension
    // identity k^2 + 2k(q-k) accounts for the whole exterior product
    for qd in 1..=3usize {
        let a = catalog::abelian(q(), qd);
        for k in 1..=qd {
            let p = pair(&a, &(0..k).collect::<Vec<_>>());
            let c = abelian_pair_cover(&p).unwrap();
            let rep = validate_stem_cover(&c).unwrap();
            ok &= rep.is_valid() && rep.kernel_dim == hl2_exterior(&p).unwrap().dim;
            let wedge = TensorPresentation::exterior(&a, &p.n.space, &p.n.space)
                .unwrap()
                .dim();
            let whole = TensorPresentation::exterior(&a, &a.full_space(), &p.n.space)
                .unwrap()
                .dim();
            ok &= wedge + 2 * k * (qd - k) == whole && wedge == k * k;
        }
    }
    // cocycle covers of whole algebras
    let singles: Vec<_> = [
        catalog::j1(q()),
        catalog::j2(q()),
        catalog::h1(q()),
        catalog::abelian(q(), 2),
    ]
    .iter()
    .map(|g| stem_cover_full(g).unwrap())
    .collect();
    for c in &singles {
        let rep = validate_stem_cover(c).unwrap();
        ok &= rep.is_valid();
    }
    // both direct-sum constructions validate and agree on the kernel size
    let s1 = direct_sum_cover(&singles[0], &singles[1]).unwrap();
    let s2 = cover_of_direct_sum(&singles[0], &singles[1]).unwrap();
    let r1 = validate_stem_cover(&s1).unwrap();
    let r2 = validate_stem_cover(&s2).unwrap();
    ok &= r1.is_valid() && r2.is_valid() && r1.kernel_dim == r2.kernel_dim;
    // direct sum with a proper ideal in one summand
    let ap = abelian_pair_cover(&pair(&catalog::abelian(q(), 2), &[0])).unwrap();
    let mixed = direct_sum_cover(&singles[2], &ap).unwrap();
    let rep = validate_stem_cover(&mixed).unwrap();
    ok &= rep.is_valid();
    criterion("stem cover constructions", ok);
}

#[test]
fn chain_complex_sanity() {
    let mut ok = true;
    let algebras = [
        catalog::abelian(q(), 3),
        catalog::j1(q()),
        catalog::j2(q()),
        catalog::h1(q()),
        catalog::heisenberg(q(), 2).unwrap(),
    ];
    for g in &algebras {
        let c = ChainComplexSlice::new(g, 4);
        for n in 2..=4usize {
            ok &= c.boundary(n - 1).mul(c.boundary(n)).unwrap().is_zero();
        }
    }
    for p in [
        Pair::full(catalog::h1(q())),
        pair(&catalog::j2(q()), &[2]),
        pair(&catalog::abelian(q(), 3), &[0]),
    ] {
        let cone = MappingCone::new(&p).unwrap();
        for w in cone.deltas.windows(2) {
            ok &= w[0].mul(&w[1]).unwrap().is_zero();
        }
    }
    for p in &corpus() {
        let expected = p.n.dim() - p.commutator_with_ideal().dim();
        ok &= hl1(p).unwrap().dim == expected;
    }
    criterion("chain complex sanity and first homology", ok);
}
