//! Command-line front end: parses algebra/pair/crossed-module files, runs
//! the homology, classification and cover computations, and emits JSON
//! reports on standard output.  Exit codes: 0 success/verified, 1 a check
//! failed, 2 input error.  Diagnostics go to standard error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use leibniz_core::algebra::{catalog, LeibnizAlgebra, Pair};
use leibniz_core::classify::{
    defect_three_verdict, extra_special_plus_abelian, low_defect_verdict, two_dim_ideal_table,
    TableReport, TableRow,
};
use leibniz_core::cover::{
    abelian_pair_cover, stem_cover_full, validate_crossed_module, validate_stem_cover,
    StemCoverCandidate, StemCoverReport,
};
use leibniz_core::homology::{
    bound_abelian_gap, bound_theorem_quotient, hl1, hl2_central_star, hl2_central_tau, hl2_cone,
    hl2_exterior, kunneth_check, BoundReport, DEFAULT_CONE_CAP,
};
use leibniz_core::io;
use leibniz_core::matrix::unit_vec;
use leibniz_core::scalar::Field;
use leibniz_core::subspace::Subspace;
use leibniz_core::tensor::TensorPresentation;

#[derive(Parser)]
#[command(name = "leibniz", version, about = "Exact computations with right Leibniz algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the defining identities of an algebra, pair or crossed module.
    Validate {
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long)]
        pair: Option<PathBuf>,
        #[arg(long = "crossed-module")]
        crossed_module: Option<PathBuf>,
    },
    /// Basic structural invariants of an algebra.
    Invariants {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Dimensions of the non-abelian tensor product attached to a pair.
    Tensor {
        #[arg(long)]
        pair: PathBuf,
    },
    /// Dimensions of the non-abelian exterior product attached to a pair.
    Exterior {
        #[arg(long)]
        pair: PathBuf,
    },
    /// Second homology of a pair by one or all applicable methods.
    Hl2 {
        #[arg(long)]
        pair: PathBuf,
        /// exterior | cone | tau | star | all
        #[arg(long, default_value = "exterior")]
        method: String,
    },
    /// Check the direct-sum dimension identity on two pairs.
    Kunneth {
        #[arg(long)]
        pair1: PathBuf,
        #[arg(long)]
        pair2: PathBuf,
    },
    /// Evaluate the nilpotent upper bounds on a pair.
    Bounds {
        #[arg(long)]
        pair: PathBuf,
    },
    /// Defect-based classification verdict for a pair.
    Classify {
        #[arg(long)]
        pair: PathBuf,
    },
    /// Sweep the two-dimensional ideal case tables of e (+) a(q).
    #[command(name = "prop43-sweep")]
    Prop43Sweep {
        /// inclusive range of abelian dimensions, e.g. 0..2
        #[arg(long, default_value = "0..2")]
        q: String,
    },
    /// Construct and validate a relative stem cover of a pair.
    Cover {
        #[arg(long)]
        pair: PathBuf,
        /// also emit the constructed crossed module
        #[arg(long)]
        emit: bool,
    },
    /// Look up a named algebra; --emit prints its structure-constant file.
    Catalog {
        name: String,
        #[arg(long)]
        param: Option<usize>,
        /// Q (default) or a prime p for GF(p)
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        emit: bool,
    },
    /// Run every applicable homology method on a pair and compare.
    #[command(name = "oracle-diff")]
    OracleDiff {
        #[arg(long)]
        pair: PathBuf,
    },
}

/// 2 is reserved for input errors, 1 for failed checks.
struct InputError(String);

type RunResult = Result<(Value, u8), InputError>;

impl From<leibniz_core::error::Error> for InputError {
    fn from(e: leibniz_core::error::Error) -> InputError {
        InputError(e.to_string())
    }
}

fn cone_cap() -> usize {
    std::env::var("LEIBNIZ_DIM_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_CONE_CAP)
}

fn read_to_string(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<LeibnizAlgebra, InputError> {
    let s = read_to_string(path)?;
    let f: io::AlgebraFile = io::from_json(&s)?;
    Ok(io::algebra_from_file(&f)?)
}

fn load_pair(path: &Path) -> Result<Pair, InputError> {
    let s = read_to_string(path)?;
    let f: io::PairFile = io::from_json(&s)?;
    Ok(io::pair_from_file(&f)?)
}

fn parse_field(s: &str) -> Result<Field, InputError> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(Field::Q);
    }
    let digits = t
        .trim_start_matches("GF(")
        .trim_start_matches("gf(")
        .trim_end_matches(')');
    let p: u64 = digits
        .parse()
        .map_err(|_| InputError(format!("unknown field {s:?}")))?;
    Ok(Field::Gf(p).validate()?)
}

fn bound_json(r: &BoundReport) -> Value {
    json!({
        "lhs": r.lhs,
        "rhs": r.rhs,
        "holds": r.holds,
        "slack": r.slack,
        "equality": r.equality,
    })
}

fn stem_report_json(r: &StemCoverReport) -> Value {
    json!({
        "image_matches_ideal": r.image_matches_ideal,
        "kernel_dim": r.kernel_dim,
        "homology_dim": r.homology_dim,
        "kernel_dim_matches": r.kernel_dim_matches,
        "kernel_is_central": r.kernel_is_central,
        "kernel_in_commutator": r.kernel_in_commutator,
        "valid": r.is_valid(),
    })
}

fn presentation_json(p: &TensorPresentation) -> Value {
    json!({
        "symbol_dim": p.symbol_dim(),
        "relations_dim": p.relations().dim(),
        "dim": p.dim(),
        "square_dim": p.square_in_quotient().dim(),
    })
}

fn run_validate(
    algebra: Option<PathBuf>,
    pair: Option<PathBuf>,
    crossed_module: Option<PathBuf>,
) -> RunResult {
    let given = [&algebra, &pair, &crossed_module]
        .iter()
        .filter(|o| o.is_some())
        .count();
    if given != 1 {
        return Err(InputError(
            "provide exactly one of --algebra, --pair, --crossed-module".into(),
        ));
    }
    if let Some(path) = algebra {
        let g = load_algebra(&path)?;
        let rep = g.validate();
        let violations: Vec<Value> = rep
            .violations
            .iter()
            .map(|v| json!({"i": v.i, "j": v.j, "k": v.k}))
            .collect();
        let ok = rep.is_valid();
        return Ok((json!({"kind": "algebra", "valid": ok, "violations": violations}),
            u8::from(!ok)));
    }
    if let Some(path) = pair {
        let p = load_pair(&path)?;
        let ok = p.g.validate().is_valid();
        return Ok((
            json!({"kind": "pair", "valid": ok, "ideal_dim": p.n.dim()}),
            u8::from(!ok),
        ));
    }
    let path = crossed_module.expect("counted above");
    let s = read_to_string(&path)?;
    let f: io::CrossedModuleFile = io::from_json(&s)?;
    let cm = io::crossed_module_from_file(&f)?;
    let rep = validate_crossed_module(&cm);
    let ok = rep.is_valid();
    Ok((
        json!({"kind": "crossed_module", "valid": ok, "issues": rep.issues}),
        u8::from(!ok),
    ))
}

fn run_invariants(path: &Path) -> RunResult {
    let g = load_algebra(path)?;
    let lcs: Vec<usize> = g.lower_central_series().iter().map(Subspace::dim).collect();
    let generators = g.minimal_generator_count().ok();
    Ok((
        json!({
            "dim": g.dim(),
            "derived_dim": g.derived().dim(),
            "center_dim": g.center().dim(),
            "abelian": g.is_abelian(),
            "lie": g.is_lie(),
            "nilpotent": g.is_nilpotent(),
            "lower_central_dims": lcs,
            "minimal_generators": generators,
        }),
        0,
    ))
}

fn run_product(path: &Path, exterior: bool) -> RunResult {
    let p = load_pair(path)?;
    let full = p.g.full_space();
    let pres = if exterior {
        TensorPresentation::exterior(&p.g, &full, &p.n.space)?
    } else {
        TensorPresentation::tensor(&p.g, &full, &p.n.space)?
    };
    Ok((presentation_json(&pres), 0))
}

fn hl2_all(p: &Pair) -> Result<(Value, u8), InputError> {
    let mut dims = Vec::new();
    let mut out = serde_json::Map::new();
    let mut notes = Vec::new();
    let e = hl2_exterior(p)?.dim;
    dims.push(e);
    out.insert("exterior".into(), json!(e));
    if p.g.dim() <= cone_cap() {
        let c = hl2_cone(p, cone_cap())?.dim;
        dims.push(c);
        out.insert("cone".into(), json!(c));
    } else {
        notes.push("cone skipped".to_string());
    }
    if p.is_central() {
        let t = hl2_central_tau(p)?.dim;
        let s = hl2_central_star(p)?.dim;
        dims.extend([t, s]);
        out.insert("tau".into(), json!(t));
        out.insert("star".into(), json!(s));
    }
    let agree = dims.iter().all(|&d| d == dims[0]);
    out.insert("agreement".into(), json!(agree));
    if !notes.is_empty() {
        out.insert("notes".into(), json!(notes));
    }
    Ok((Value::Object(out), u8::from(!agree)))
}

fn run_hl2(path: &Path, method: &str) -> RunResult {
    let p = load_pair(path)?;
    let dim = match method {
        "exterior" => hl2_exterior(&p)?.dim,
        "cone" => hl2_cone(&p, cone_cap())?.dim,
        "tau" => hl2_central_tau(&p)?.dim,
        "star" => hl2_central_star(&p)?.dim,
        "all" => return hl2_all(&p),
        other => return Err(InputError(format!("unknown method {other:?}"))),
    };
    Ok((json!({method: dim}), 0))
}

fn run_kunneth(p1: &Path, p2: &Path) -> RunResult {
    let rep = kunneth_check(&load_pair(p1)?, &load_pair(p2)?)?;
    Ok((
        json!({
            "direct_dim": rep.direct_dim,
            "part1_dim": rep.part1_dim,
            "part2_dim": rep.part2_dim,
            "b_factor_dim": rep.b_factor_dim,
            "agree": rep.agree,
        }),
        u8::from(!rep.agree),
    ))
}

fn run_bounds(path: &Path) -> RunResult {
    let p = load_pair(path)?;
    let quotient = bound_theorem_quotient(&p)?;
    let gap = bound_abelian_gap(&p.g)?;
    let ok = quotient.holds && gap.holds;
    Ok((
        json!({
            "quotient_bound": bound_json(&quotient),
            "abelian_gap_bound": bound_json(&gap),
        }),
        u8::from(!ok),
    ))
}

fn run_classify(path: &Path) -> RunResult {
    let p = load_pair(path)?;
    let low = low_defect_verdict(&p)?;
    let mut out = serde_json::Map::new();
    let mut ok = low.consistent;
    out.insert("low_defect".into(), serde_json::to_value(&low).expect("serializable"));
    if low.defect == 3 {
        let three = defect_three_verdict(&p)?;
        ok &= three.consistent;
        out.insert("defect_three".into(), serde_json::to_value(&three).expect("serializable"));
    }
    Ok((Value::Object(out), u8::from(!ok)))
}

fn parse_range(s: &str) -> Result<(usize, usize), InputError> {
    if let Some((a, b)) = s.split_once("..") {
        let lo = a.parse().map_err(|_| InputError(format!("bad range {s:?}")))?;
        let hi = b.parse().map_err(|_| InputError(format!("bad range {s:?}")))?;
        if lo > hi {
            return Err(InputError(format!("empty range {s:?}")));
        }
        return Ok((lo, hi));
    }
    let v = s.parse().map_err(|_| InputError(format!("bad range {s:?}")))?;
    Ok((v, v))
}

/// Representative two-dimensional ideals of `e (+) a(q)` for each table row.
fn sweep_cases(e_name: &str, qd: usize) -> Vec<(Subspace, TableRow)> {
    let field = Field::Q;
    let g = extra_special_plus_abelian(field, e_name, qd).expect("catalog");
    let e_dim = if e_name == "j1" { 2 } else { 3 };
    let e2_idx = if e_name == "j1" { 1 } else { 2 };
    let span = |idx: &[usize]| {
        Subspace::from_span(
            field,
            g.dim(),
            idx.iter().map(|&i| unit_vec(field, g.dim(), i)).collect(),
        )
    };
    let mut cases = Vec::new();
    if qd >= 2 {
        cases.push((span(&[e_dim, e_dim + 1]), TableRow::InsideAbelianPart));
    }
    if qd >= 1 {
        cases.push((span(&[e2_idx, e_dim]), TableRow::CentralContainingCommutator));
    }
    cases.push((span(&[e2_idx, 0]), TableRow::Otherwise));
    cases
}

fn run_sweep(range: &str) -> RunResult {
    let (lo, hi) = parse_range(range)?;
    let mut rows: Vec<TableReport> = Vec::new();
    for e_name in ["j1", "j2", "h1"] {
        for qd in lo..=hi {
            let g = extra_special_plus_abelian(Field::Q, e_name, qd)?;
            for (n, expected_row) in sweep_cases(e_name, qd) {
                let p = Pair::new(g.clone(), n)?;
                let rep = two_dim_ideal_table(e_name, qd, &p)?;
                debug_assert_eq!(rep.row, expected_row);
                rows.push(rep);
            }
        }
    }
    let ok = rows.iter().all(|r| r.agree);
    Ok((
        json!({"rows": rows, "all_agree": ok}),
        u8::from(!ok),
    ))
}

fn run_cover(path: &Path, emit: bool) -> RunResult {
    let p = load_pair(path)?;
    let (candidate, construction): (StemCoverCandidate, &str) = if p.g.is_abelian() {
        (abelian_pair_cover(&p)?, "abelian_pair")
    } else if p.n.space == p.g.full_space() {
        (stem_cover_full(&p.g)?, "central_extension")
    } else {
        return Err(InputError(
            "covers are constructed for abelian pairs or whole algebras".into(),
        ));
    };
    let rep = validate_stem_cover(&candidate)?;
    let mut out = serde_json::Map::new();
    out.insert("construction".into(), json!(construction));
    out.insert("report".into(), stem_report_json(&rep));
    if emit {
        let file = io::crossed_module_to_file(&candidate.cm);
        out.insert(
            "crossed_module".into(),
            serde_json::to_value(&file).expect("serializable"),
        );
    }
    let ok = rep.is_valid();
    Ok((Value::Object(out), u8::from(!ok)))
}

fn run_catalog(name: &str, param: Option<usize>, field: &str, emit: bool) -> RunResult {
    let field = parse_field(field)?;
    let g = catalog::by_name(field, name, param)?;
    if emit {
        let file = io::algebra_to_file(&g);
        return Ok((serde_json::to_value(&file).expect("serializable"), 0));
    }
    Ok((
        json!({
            "name": name.to_ascii_lowercase(),
            "dim": g.dim(),
            "valid": g.validate().is_valid(),
        }),
        0,
    ))
}

fn run_oracle_diff(path: &Path) -> RunResult {
    let p = load_pair(path)?;
    let (mut value, code) = hl2_all(&p)?;
    if let Value::Object(map) = &mut value {
        map.insert("hl1".into(), json!(hl1(&p)?.dim));
    }
    Ok((value, code))
}

fn run(cmd: Cmd) -> RunResult {
    match cmd {
        Cmd::Validate {
            algebra,
            pair,
            crossed_module,
        } => run_validate(algebra, pair, crossed_module),
        Cmd::Invariants { algebra } => run_invariants(&algebra),
        Cmd::Tensor { pair } => run_product(&pair, false),
        Cmd::Exterior { pair } => run_product(&pair, true),
        Cmd::Hl2 { pair, method } => run_hl2(&pair, &method),
        Cmd::Kunneth { pair1, pair2 } => run_kunneth(&pair1, &pair2),
        Cmd::Bounds { pair } => run_bounds(&pair),
        Cmd::Classify { pair } => run_classify(&pair),
        Cmd::Prop43Sweep { q } => run_sweep(&q),
        Cmd::Cover { pair, emit } => run_cover(&pair, emit),
        Cmd::Catalog {
            name,
            param,
            field,
            emit,
        } => run_catalog(&name, param, &field, emit),
        Cmd::OracleDiff { pair } => run_oracle_diff(&pair),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok((value, code)) => {
            let mut s = serde_json::to_string_pretty(&value).expect("serializable");
            s.push('\n');
            print!("{s}");
            ExitCode::from(code)
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
