//! Recomputes the pinned worked examples and compares them with golden
//! values, one verdict line per example.

use std::fmt::Write;

use ehrhart::enumerate::{enumerate_simplices, EnumOptions};
use ehrhart::gorenstein::{dual_lstar_check, is_gorenstein_join, subdegree_law_check};
use ehrhart::{catalog, counting, gorenstein_data, hstar, local_hstar, BigInt, Polytope};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::Failure;

pub const GOLDEN: &str = include_str!("golden.json");

#[derive(Deserialize)]
struct Golden {
    examples: Vec<Example>,
}

#[derive(Deserialize)]
struct Example {
    name: String,
    values: Map<String, Value>,
}

fn poly(p: &ehrhart::Polynomial) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn int(x: &BigInt) -> Value {
    ehrhart::io::int_to_json(x)
}

fn nonspanning() -> Result<Value, ehrhart::Error> {
    let p: Polytope = catalog::nonspanning_thin_simplex();
    let local = local_hstar(&p)?;
    let view = p.spanning_view();
    let base = view
        .pyramid_structure()
        .and_then(|w| w.base_facet)
        .map(|f| view.face_polytope(view.facets()[f].vertices));
    let base = base.transpose()?;
    let reflexive = match &base {
        Some(b) => gorenstein_data(b).map(|g| g.codegree == 1).unwrap_or(false),
        None => false,
    };
    Ok(json!({
        "hstar": poly(&local.hstar),
        "lstar": poly(&local.lstar),
        "thin": local.is_thin,
        "trivially_thin": ehrhart::is_trivially_thin(&p),
        "width": int(&p.lattice_width(3).width),
        "spanning_index": int(&p.spanning_index()),
        "sublattice_pyramid": base.is_some(),
        "sublattice_base_reflexive": reflexive,
        "sublattice_base_volume": base.map(|b| int(&counting::lattice_volume(&b))),
    }))
}

fn cayley_tetrahedron() -> Result<Value, ehrhart::Error> {
    let p: Polytope = catalog::cayley_tetrahedron();
    let (f, g) = catalog::cayley_tetrahedron_edges(&p);
    let local = local_hstar(&p)?;
    let data = gorenstein_data(&p);
    Ok(json!({
        "hstar": poly(&local.hstar),
        "lstar": poly(&local.lstar),
        "gorenstein": data.is_ok(),
        "codegree": data.as_ref().map(|d| d.codegree).ok(),
        "cayley_join_of_edges": p.is_cayley_join(f, g),
        "gorenstein_join_of_edges": is_gorenstein_join(&p, f, g)?,
        "thin": local.is_thin,
        "subdegree_law": subdegree_law_check(&p)?,
    }))
}

fn local_example(p: Polytope) -> Result<Value, ehrhart::Error> {
    let local = local_hstar(&p)?;
    Ok(json!({
        "hstar": poly(&local.hstar),
        "lstar": poly(&local.lstar),
        "gorenstein": ehrhart::is_gorenstein(&p),
    }))
}

fn cube_duality() -> Result<Value, ehrhart::Error> {
    let d = dual_lstar_check(&catalog::centered_cube::<BigInt>(3))?;
    Ok(json!({
        "lstar": poly(&d.lstar),
        "dual_lstar": poly(&d.dual_lstar),
        "thin_duality": d.thin_duality,
        "degree_duality": d.degree_duality,
    }))
}

fn unit_cube() -> Result<Value, ehrhart::Error> {
    let p = catalog::cube::<BigInt>(3);
    let local = local_hstar(&p)?;
    Ok(json!({
        "hstar": poly(&local.hstar),
        "lstar": poly(&local.lstar),
        "thin": local.is_thin,
        "newton_number": int(&counting::newton_number(&p)),
    }))
}

fn triangle_join() -> Result<Value, ehrhart::Error> {
    let p: Polytope = catalog::thin_join_simplex();
    let local = local_hstar(&p)?;
    Ok(json!({
        "hstar": poly(&hstar(&p).hstar),
        "thin": local.is_thin,
        "trivially_thin": ehrhart::is_trivially_thin(&p),
        "pyramid": p.is_lattice_pyramid(),
        "free_join": p.find_free_join().is_some(),
    }))
}

fn tetrahedra_scan() -> Result<Value, ehrhart::Error> {
    let max_volume = 8;
    let records = enumerate_simplices::<i64>(3, max_volume, EnumOptions::default())?;
    let bad = records
        .iter()
        .filter(|r| r.flags.thin && !r.flags.pyramid)
        .count();
    Ok(json!({ "max_volume": max_volume, "records": records.len(), "thin_not_pyramid": bad }))
}

fn compute(name: &str) -> Option<Result<Value, ehrhart::Error>> {
    Some(match name {
        "nonspanning-thin-simplex" => nonspanning(),
        "cayley-tetrahedron" => cayley_tetrahedron(),
        "low-degree-local-hstar-simplex" => {
            local_example(catalog::simplex_with_low_degree_local_hstar())
        }
        "monomial-local-hstar-simplex" => {
            local_example(catalog::simplex_with_monomial_local_hstar())
        }
        "centered-cube-duality" => cube_duality(),
        "unit-cube" => unit_cube(),
        "triangle-free-join" => triangle_join(),
        "thin-tetrahedra-are-pyramids" => tetrahedra_scan(),
        _ => return None,
    })
}

/// The verdict table and whether every example matched.
pub fn run(golden_text: &str) -> Result<(String, bool), Failure> {
    let golden: Golden = serde_json::from_str(golden_text)
        .map_err(|e| Failure::input(format!("malformed golden file: {e}")))?;
    let mut out = String::new();
    let mut passed = 0;
    for ex in &golden.examples {
        let mut diffs = Vec::new();
        match compute(&ex.name) {
            None => diffs.push("unknown example".to_string()),
            Some(Err(e)) => diffs.push(format!("error: {e}")),
            Some(Ok(actual)) => {
                for (key, expected) in &ex.values {
                    let got = actual.get(key).unwrap_or(&Value::Null);
                    if got != expected {
                        diffs.push(format!("{key}: expected {expected}, got {got}"));
                    }
                }
            }
        }
        if diffs.is_empty() {
            passed += 1;
            writeln!(out, "PASS  {}", ex.name).expect("write to string");
        } else {
            writeln!(out, "FAIL  {}", ex.name).expect("write to string");
            for d in diffs {
                writeln!(out, "      {d}").expect("write to string");
            }
        }
    }
    let total = golden.examples.len();
    writeln!(out, "{passed}/{total} examples match").expect("write to string");
    Ok((out, passed == total))
}
