use std::path::Path;

use ehrhart::classify::{interior_counts, interior_inequality_check};
use ehrhart::counting::{box_polynomial, interior_point_count, is_hollow, lattice_volume};
use ehrhart::enumerate::{enumerate_to_log, question1_scan, EnumOptions, EnumRecord};
use ehrhart::gorenstein::{dual_lstar_check, theorem_main_check};
use ehrhart::io::{int_to_json, points_to_json};
use ehrhart::local::decomposition_check;
use ehrhart::poset::toric_polys;
use ehrhart::{
    classify_thin_3d, gorenstein_data, hstar as ehrhart_data, local_hstar, lstar_3d, newton_number,
    thin_criterion_3d, BigInt, Error, Polytope,
};
use serde_json::{json, Value};

use crate::Failure;

fn to_value<S: serde::Serialize>(x: &S) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn gorenstein_or_none(p: &Polytope) -> Result<Option<ehrhart::GorensteinData<BigInt>>, Error> {
    match gorenstein_data(p) {
        Ok(d) => Ok(Some(d)),
        Err(Error::NotGorenstein) => Ok(None),
        Err(e) => Err(e),
    }
}

fn structure(p: &Polytope) -> Value {
    let joins = p.joins();
    json!({
        "simplex": p.is_simplex(),
        "lattice_pyramid": p.is_lattice_pyramid(),
        "cayley": p.is_cayley(),
        "hollow": is_hollow(p),
        "spanning_index": int_to_json(&p.spanning_index()),
        "joins": joins.len(),
        "free_join": p.find_free_join().map(|(f, g)| json!([f.to_vec(), g.to_vec()])),
    })
}

pub fn invariants(p: &Polytope, width_bound: usize) -> Result<Value, Failure> {
    let ehr = ehrhart_data(p);
    let local = local_hstar(p)?;
    let toric = toric_polys(p);
    let width = p.lattice_width(width_bound);
    let decomposition = decomposition_check(p);
    if !decomposition.holds {
        return Err(Error::InternalConsistency(format!(
            "decomposition residual {}",
            decomposition.residual
        ))
        .into());
    }
    let gor = gorenstein_or_none(p)?;
    let (theorem, duality) = match &gor {
        Some(_) if p.dim() > 0 => {
            let duality = dual_lstar_check(p)?;
            if !duality.holds() {
                return Err(Error::Falsification(format!(
                    "duality of local h* fails: {duality:?}"
                ))
                .into());
            }
            (Some(theorem_main_check(p)?), Some(duality))
        }
        _ => (None, None),
    };
    let simplex = if p.is_simplex() {
        let q = p.quotient_group()?;
        json!({
            "box_polynomial": to_value(&box_polynomial(p)?),
            "newton_number": int_to_json(&newton_number(p)),
            "quotient_group": to_value(&q),
        })
    } else {
        Value::Null
    };
    let three = if p.dim() == 3 {
        classify3d(p)?
    } else {
        Value::Null
    };
    Ok(json!({
        "vertices": points_to_json(&p.ambient_vertices()),
        "dim": p.dim(),
        "ambient_dim": p.ambient_dim(),
        "f_vector": p.face_lattice().f_vector(),
        "hstar": to_value(&ehr.hstar),
        "degree": ehr.degree,
        "codegree": ehr.codegree,
        "volume": int_to_json(&ehr.volume),
        "lstar": to_value(&local.lstar),
        "thin": local.is_thin,
        "trivially_thin": ehrhart::is_trivially_thin(p),
        "interior_points": int_to_json(&interior_point_count(p)),
        "toric": to_value(&toric),
        "width": int_to_json(&width.width),
        "width_search": to_value(&width),
        "gorenstein": gor.is_some(),
        "gorenstein_data": gor.as_ref().map(to_value),
        "structure": structure(p),
        "simplex": simplex,
        "classify3d": three,
        "audits": {
            "local": to_value(&local.checks),
            "decomposition": decomposition.holds,
            "lower_bound": ehrhart::local::lower_bound_check(p)?,
            "gorenstein_theorem": theorem.as_ref().map(to_value),
            "duality": duality.as_ref().map(to_value),
        },
    }))
}

pub fn hstar(p: &Polytope) -> Value {
    to_value(&ehrhart_data(p))
}

pub fn lstar(p: &Polytope) -> Result<Value, Failure> {
    Ok(to_value(&local_hstar(p)?))
}

pub fn gpoly(p: &Polytope) -> Value {
    let t = toric_polys(p);
    json!({
        "rank": t.rank,
        "f": to_value(&t.f),
        "g": to_value(&t.g),
        "h": to_value(&t.h),
        "g_thin": ehrhart::gorenstein::is_g_thin(p),
    })
}

pub fn gorenstein(p: &Polytope) -> Result<Value, Failure> {
    Ok(match gorenstein_or_none(p)? {
        Some(d) => json!({ "gorenstein": true, "data": to_value(&d) }),
        None => json!({ "gorenstein": false }),
    })
}

pub fn dual(p: &Polytope) -> Result<Value, Failure> {
    if p.dim() == 0 {
        return Err(Failure::input("a point has no dual polytope"));
    }
    let d = gorenstein_data(p)?;
    let dual = d.dual();
    Ok(json!({
        "codegree": d.codegree,
        "degree": d.degree,
        "vertices": points_to_json(&dual.ambient_vertices()),
        "hstar": to_value(&ehrhart_data(&dual).hstar),
    }))
}

pub fn classify3d(p: &Polytope) -> Result<Value, Failure> {
    let verdict = classify_thin_3d(p)?;
    let local = local_hstar(p)?;
    let closed_form = lstar_3d(p)?;
    if closed_form != local.lstar || verdict.is_thin() != local.is_thin {
        return Err(Error::Falsification(format!(
            "closed-form local h* {closed_form} or verdict disagrees with the face sum {}",
            local.lstar
        ))
        .into());
    }
    Ok(json!({
        "classification": to_value(&verdict),
        "thin": verdict.is_thin(),
        "criterion": thin_criterion_3d(p)?,
        "counts": to_value(&interior_counts(p)?),
        "lstar": to_value(&closed_form),
        "inequality": to_value(&interior_inequality_check(p)?),
    }))
}

pub fn width(p: &Polytope, bound: usize) -> Value {
    let w = p.lattice_width(bound);
    json!({
        "width": int_to_json(&w.width),
        "search": to_value(&w),
        "cayley": p.cayley_structure().map(|c| json!({
            "functional": c.functional.iter().map(int_to_json).collect::<Vec<_>>(),
            "level": int_to_json(&c.level),
            "lower": c.lower.to_vec(),
            "upper": c.upper.to_vec(),
        })),
        "volume": int_to_json(&lattice_volume(p)),
    })
}

pub fn enumerate(
    out: &Path,
    dim: usize,
    max_vol: u64,
    dedup_iso: bool,
    resume: bool,
) -> Result<Value, Failure> {
    let summary = enumerate_to_log::<BigInt>(out, dim, max_vol, EnumOptions { dedup_iso }, resume)?;
    Ok(to_value(&summary))
}

pub fn scan_q1(text: &str) -> Result<Value, Failure> {
    let mut records: Vec<EnumRecord<BigInt>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let r = serde_json::from_str(line)
            .map_err(|e| Failure::input(format!("line {}: {e}", i + 1)))?;
        records.push(r);
    }
    Ok(to_value(&question1_scan(&records)))
}
