use num_rational::BigRational;
use serde_json::{json, Value};
use solvkit::classify::{classify, classify_type_ii, homogeneous_surface_table, orbifold_euler, SurfaceClass};
use solvkit::exact::MPoly;
use solvkit::geom::kahler::hard_lefschetz_in;
use solvkit::geom::{
    geometry_report, integrability_witness, is_symplectic, AlmostComplexStructure, CEComplex, CohomologyRing,
    ExteriorForm,
};
use solvkit::liealg::catalog::inoue_spm_relabeled_j;
use solvkit::liealg::{
    catalog, is_completely_solvable, is_rigid_type, symbolic_catalog, CatalogId, Decision, QLieAlgebra,
};
use solvkit::models::inoue::inoue_spm_solve_in_range;
use solvkit::models::{
    example3_frame_check, hyperelliptic_lattices, inoue_s0_generators, kodaira_group_law_check, pythagorean_points,
    scan_hyperelliptic, secondary_kodaira_check, secondary_kodaira_symbolic, verify_hyperelliptic_lattice,
    HyperellipticLatticeClass,
};
use solvkit::rational_string;

use crate::input::{self, AlgebraSource};
use crate::{Cli, CliError, Command, InoueCommand, LatticesCommand, Outcome};

pub const KODAIRA_SAMPLES: usize = 32;
pub const FRAME_SAMPLES: usize = 20;
pub const PYTHAGOREAN_HEIGHT: i64 = 25;

fn done(payload: Value, inputs: Vec<String>) -> Outcome {
    Outcome {
        payload,
        inputs,
        unenumerated: false,
    }
}

pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let stdin = cli.stdin.as_deref();
    match &cli.command {
        Command::Classify(a) => match (&a.type_ii, &a.type_iii) {
            (Some(arg), _) => {
                let inp = input::load(arg, stdin)?;
                let m = input::type_ii_matrix(&inp.value)?;
                let r = classify_type_ii(&m).map_err(CliError::classify)?;
                Ok(Outcome {
                    unenumerated: r.class == SurfaceClass::OtherNotEnumerated,
                    payload: r.to_json(),
                    inputs: vec![inp.text],
                })
            }
            (None, Some(arg)) => {
                let inp = input::load(arg, stdin)?;
                let w = input::type_iii_extension(&inp.value)?;
                let r = classify(&w).map_err(CliError::classify)?;
                Ok(Outcome {
                    unenumerated: r.class == SurfaceClass::OtherNotEnumerated,
                    payload: r.to_json(),
                    inputs: vec![inp.text],
                })
            }
            (None, None) => Err(CliError::input(
                "usage",
                "one of --type-ii, --type-iii is required".into(),
            )),
        },
        Command::CatalogVerify => catalog_verify(cli.seed),
        Command::Cohomology(a) => cohomology(&a.algebra, a.omega.as_deref(), stdin),
        Command::Lefschetz(a) => lefschetz(&a.algebra, &a.omega, stdin),
        Command::Lattices(LatticesCommand::Hyperelliptic {
            max_denominator,
            max_offset,
            verify,
        }) => lattices(*max_denominator, *max_offset, verify.as_deref(), stdin),
        Command::Inoue(InoueCommand::S0 { matrix }) => {
            let inp = input::load(matrix, stdin)?;
            let m = input::type_ii_matrix(&inp.value)?;
            let r = inoue_s0_generators(&m).map_err(CliError::model)?;
            Ok(done(r.to_json(), vec![inp.text]))
        }
        Command::Inoue(InoueCommand::Spm { input: arg, range }) => {
            if *range < 0 {
                return Err(CliError::input("invalid_parameter", "range must be nonnegative".into()));
            }
            let inp = input::load(arg, stdin)?;
            let (n, b, eps) = input::short_extension(&inp.value)?;
            let gamma = input::gamma(&inp.value)?;
            let s = inoue_spm_solve_in_range(n, &b, eps, gamma, *range).map_err(CliError::model)?;
            Ok(done(s.to_json(), vec![inp.text]))
        }
        Command::Table => Ok(done(
            serde_json::to_value(homogeneous_surface_table()).expect("serializable"),
            vec![],
        )),
        Command::Orbifold { input: arg } => {
            let inp = input::load(arg, stdin)?;
            let bad = |m: &str| CliError::input("invalid_orbifold", m.to_string());
            let e = inp
                .value
                .get("euler_base")
                .and_then(Value::as_i64)
                .ok_or_else(|| bad("euler_base must be an integer"))?;
            let m: Vec<i64> = match inp.value.get("m") {
                None => Vec::new(),
                Some(Value::Array(a)) => a
                    .iter()
                    .map(|x| x.as_i64().ok_or_else(|| bad("multiplicities must be integers")))
                    .collect::<Result<_, _>>()?,
                Some(_) => return Err(bad("m must be an array")),
            };
            let (v, t) = orbifold_euler(e, &m).map_err(CliError::classify)?;
            Ok(done(json!({"value": rational_string(&v), "type": t}), vec![inp.text]))
        }
    }
}

fn decision(d: &Decision) -> (Value, bool) {
    (d.to_json(), d.holds().is_none())
}

fn entry_record(id: &CatalogId) -> Result<(Value, bool), CliError> {
    let e = catalog(id).map_err(CliError::lie)?;
    let g = &e.algebra;
    let cx = CEComplex::new(g).map_err(CliError::geom)?;
    let witness = integrability_witness(g, &e.j).map_err(CliError::geom)?;
    let (cs, cs_open) = decision(&is_completely_solvable(g).map_err(CliError::lie)?);
    let (rigid, rigid_open) = decision(&is_rigid_type(g).map_err(CliError::lie)?);
    let derived = g.derived_dim();
    let rec = json!({
        "id": id.to_string(),
        "dim": g.dim(),
        "jacobi": g.jacobi_check().is_ok(),
        "unimodular": g.is_unimodular(),
        "nilpotent": g.is_nilpotent(),
        "derived_dim": derived,
        "lie_b1": g.dim() - derived,
        "surface_b1": id.surface_b1(),
        "d_squared_zero": cx.d_squared_vanishes(),
        "integrable": witness.is_none(),
        "nijenhuis_witness": witness.map(|(i, j, v)| json!({
            "pair": [i, j],
            "value": v.iter().map(rational_string).collect::<Vec<_>>(),
        })),
        "completely_solvable": cs,
        "rigid": rigid,
    });
    Ok((rec, cs_open || rigid_open))
}

fn symbolic_witness(
    g: &solvkit::SymbolicLieAlgebra,
    j: &AlmostComplexStructure<MPoly>,
) -> Result<(Value, Option<(usize, usize, Vec<MPoly>)>), CliError> {
    let w = integrability_witness(g, j).map_err(CliError::geom)?;
    let v = json!({
        "integrable": w.is_none(),
        "witness": w.as_ref().map(|(i, k, v)| json!({
            "pair": [i, k],
            "value": v.iter().map(|c| c.to_string_with(&["q"])).collect::<Vec<_>>(),
        })),
    });
    Ok((v, w))
}

/// Integrability of the printed, relabeled and transposed structures on the
/// `S^±` algebra with `q` symbolic, against the claimed `N(X3, X4) = X3`.
pub fn spm_discrepancy() -> Result<Value, CliError> {
    let id = CatalogId::InoueSpm4 {
        q: BigRational::from_integer(1.into()),
    };
    let (g, printed, _) = symbolic_catalog(&id).map_err(CliError::lie)?;
    let corrected = inoue_spm_relabeled_j(MPoly::var(0));
    let transposed = AlmostComplexStructure::new(printed.matrix().transpose()).map_err(CliError::geom)?;
    let (p, pw) = symbolic_witness(&g, &printed)?;
    let (c, _) = symbolic_witness(&g, &corrected)?;
    let (t, _) = symbolic_witness(&g, &transposed)?;
    let one = MPoly::constant(BigRational::from_integer(1.into()));
    let zero = MPoly::constant(BigRational::from_integer(0.into()));
    let claimed = vec![zero.clone(), zero.clone(), one, zero];
    let reproduced = matches!(&pw, Some((3, 4, v)) if *v == claimed);
    Ok(json!({
        "entry": id.to_string(),
        "claim": "printed J has N(X3, X4) = X3",
        "printed_j": p,
        "corrected_j": c,
        "transposed_j": t,
        "claim_reproduced": reproduced,
    }))
}

pub fn models_section(seed: u64) -> Result<Value, CliError> {
    let kodaira = kodaira_group_law_check(seed, KODAIRA_SAMPLES);
    let points = pythagorean_points(PYTHAGOREAN_HEIGHT);
    let mut secondary_ok = true;
    for (a, b) in &points {
        secondary_ok &= secondary_kodaira_check(a, b, 1).map_err(CliError::model)?;
    }
    let frame = example3_frame_check(seed, FRAME_SAMPLES).map_err(CliError::model)?;
    Ok(json!({
        "kodaira_group_law": kodaira.to_json(),
        "secondary_kodaira": {
            "points": points.len(),
            "holds_at_points": secondary_ok,
            "holds_symbolically": secondary_kodaira_symbolic(),
        },
        "frame": frame.to_json(),
    }))
}

fn catalog_verify(seed: u64) -> Result<Outcome, CliError> {
    let mut entries = Vec::new();
    let mut open = false;
    for id in CatalogId::standard_list() {
        let (rec, o) = entry_record(&id)?;
        open |= o;
        entries.push(rec);
    }
    let all = |key: &str| entries.iter().all(|e| e[key] == json!(true));
    let summary = json!({
        "jacobi": all("jacobi"),
        "unimodular": all("unimodular"),
        "d_squared_zero": all("d_squared_zero"),
        "integrable": all("integrable"),
    });
    Ok(Outcome {
        payload: json!({
            "entries": entries,
            "summary": summary,
            "discrepancies": [spm_discrepancy()?],
            "models": models_section(seed)?,
        }),
        inputs: vec![],
        unenumerated: open,
    })
}

fn resolve(
    arg: &str,
    stdin: Option<&str>,
) -> Result<(QLieAlgebra, Option<(ExteriorForm, solvkit::QMatrix)>, Vec<String>), CliError> {
    Ok(match input::algebra(arg, stdin)? {
        AlgebraSource::Catalog(id) => {
            let e = catalog(&id).map_err(CliError::lie)?;
            let extra = e.omega.map(|w| (w, e.j.matrix().clone()));
            (e.algebra, extra, vec![id.to_string()])
        }
        AlgebraSource::Inline(g, inp) => (*g, None, vec![inp.text]),
    })
}

fn load_form(arg: &str, stdin: Option<&str>) -> Result<(ExteriorForm, String), CliError> {
    let inp = input::load(arg, stdin)?;
    let w = ExteriorForm::from_json(&inp.value).map_err(CliError::geom)?;
    Ok((w, inp.text))
}

fn cohomology(algebra: &str, omega: Option<&str>, stdin: Option<&str>) -> Result<Outcome, CliError> {
    let (g, extra, mut inputs) = resolve(algebra, stdin)?;
    let payload = match (omega, extra) {
        (Some(arg), _) => {
            let (w, text) = load_form(arg, stdin)?;
            inputs.push(text);
            geometry_report(&g, Some(&w), None)
        }
        (None, Some((w, j))) => geometry_report(&g, Some(&w), Some(&j)),
        (None, None) => geometry_report(&g, None, None),
    }
    .map_err(CliError::geom)?;
    Ok(done(payload, inputs))
}

fn lefschetz(algebra: &str, omega: &str, stdin: Option<&str>) -> Result<Outcome, CliError> {
    let (g, _, mut inputs) = resolve(algebra, stdin)?;
    let (w, text) = load_form(omega, stdin)?;
    inputs.push(text);
    let symplectic = is_symplectic(&g, &w).map_err(CliError::geom)?;
    let ring = CohomologyRing::new(&g).map_err(CliError::geom)?;
    let hl = if symplectic {
        Some(hard_lefschetz_in(&ring, &w).map_err(CliError::geom)?)
    } else {
        None
    };
    Ok(done(
        json!({
            "symplectic": symplectic,
            "betti": ring.betti(),
            "hard_lefschetz": hl,
            "holds": hl.as_ref().map(|v| v.iter().all(|b| *b)),
        }),
        inputs,
    ))
}

fn lattices(max_den: i64, max_offset: i64, verify: Option<&str>, stdin: Option<&str>) -> Result<Outcome, CliError> {
    if let Some(arg) = verify {
        let inp = input::load(arg, stdin)?;
        let c = HyperellipticLatticeClass::from_json(&inp.value).map_err(CliError::model)?;
        return Ok(done(
            json!({"class": c.to_json(), "verified": verify_hyperelliptic_lattice(&c)}),
            vec![inp.text],
        ));
    }
    if !(1..=24).contains(&max_den) || !(0..=6).contains(&max_offset) {
        return Err(CliError::input(
            "invalid_parameter",
            "max-denominator must be in 1..=24 and max-offset in 0..=6".into(),
        ));
    }
    let classes: Vec<Value> = hyperelliptic_lattices()
        .iter()
        .map(|c| {
            let mut v = c.to_json();
            v["verified"] = json!(verify_hyperelliptic_lattice(c));
            v
        })
        .collect();
    Ok(done(
        json!({
            "count": classes.len(),
            "classes": classes,
            "scan": scan_hyperelliptic(max_den, max_offset).to_json(),
        }),
        vec![],
    ))
}
