use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::cohomology::{CohomologyReport, IdentityReport};
use crate::exactlin::{format_rational, Matrix, Scalar};
use crate::liealg::{LieAlgebra, SsNilpotentReport, StructureFlags, Subspace};
use crate::repmod::Representation;
use crate::theorem::{CorollaryReport, TheoremVerdict, Witness, WitnessHit};

pub(crate) fn to_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn matrix_json(m: &Matrix) -> Value {
    json!((0..m.rows()).map(|r| vector(m.row(r))).collect::<Vec<_>>())
}

fn subspace_json(s: &Subspace) -> Value {
    json!(s.basis().iter().map(|v| vector(v)).collect::<Vec<_>>())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn indent(out: &mut String, text: &str) {
    for line in text.lines() {
        writeln!(out, "  {line}").unwrap();
    }
}

/// Values `x=1, y=0` of a one-dimensional module on the basis.
fn character_values(m: &Representation) -> Option<Vec<(String, String)>> {
    (m.dim() == 1).then(|| {
        m.algebra()
            .names()
            .iter()
            .zip(m.action())
            .map(|(n, a)| (n.clone(), format_rational(&a[(0, 0)])))
            .collect()
    })
}

pub(crate) fn check(
    alg: &LieAlgebra,
    f: &StructureFlags,
    split: &SsNilpotentReport,
    json: bool,
) -> String {
    if json {
        return to_json(&json!({
            "command": "check",
            "dim": alg.dim(),
            "basis": alg.names(),
            "abelian": f.abelian,
            "nilpotent": f.nilpotent,
            "solvable": f.solvable,
            "semisimple": f.semisimple,
            "perfect": f.perfect,
            "unimodular": f.unimodular,
            "semisimple_plus_nilpotent": split.holds,
            "radical_nilpotent": split.radical_nilpotent,
            "levi_acts_trivially": split.levi_acts_trivially,
            "killing_form": matrix_json(&f.killing_form),
            "derived": subspace_json(&f.derived),
            "radical": subspace_json(&f.radical),
            "center": subspace_json(&f.center),
        }));
    }
    let mut out = String::new();
    writeln!(
        out,
        "algebra of dimension {} on basis {}",
        alg.dim(),
        alg.names().join(", ")
    )
    .unwrap();
    for (name, value) in [
        ("abelian", f.abelian),
        ("nilpotent", f.nilpotent),
        ("solvable", f.solvable),
        ("semisimple", f.semisimple),
        ("perfect", f.perfect),
        ("unimodular", f.unimodular),
        ("semisimple plus nilpotent", split.holds),
    ] {
        writeln!(out, "{name:<26} {}", yes(value)).unwrap();
    }
    for (name, s) in [
        ("[L,L]", &f.derived),
        ("radical", &f.radical),
        ("center", &f.center),
    ] {
        writeln!(out, "dim {name:<22} {}", s.dim()).unwrap();
    }
    writeln!(out, "killing form").unwrap();
    indent(&mut out, &f.killing_form.to_string());
    out
}

pub(crate) fn cohomology(m: &Representation, r: &CohomologyReport, json: bool) -> String {
    if json {
        let rows: Vec<Value> = (0..r.dims.len())
            .map(|n| json!({ "n": n, "cochains": r.cochain_dims[n], "rank": r.ranks[n], "dim": r.dims[n] }))
            .collect();
        let mut v = json!({
            "command": "cohomology",
            "module": m.label(),
            "module_dim": m.dim(),
            "rows": rows,
            "dims": r.dims,
            "euler_characteristic": r.euler_characteristic(),
        });
        if let Some(reps) = &r.representatives {
            v["representatives"] = json!(reps
                .iter()
                .map(|deg| deg.iter().map(|z| vector(z)).collect::<Vec<_>>())
                .collect::<Vec<_>>());
        }
        return to_json(&v);
    }
    let mut out = String::new();
    writeln!(out, "H^*(L, {}), module dimension {}", m.label(), m.dim()).unwrap();
    writeln!(
        out,
        "{:>3} {:>9} {:>9} {:>8}",
        "n", "dim C^n", "rank d_n", "dim H^n"
    )
    .unwrap();
    for n in 0..r.dims.len() {
        writeln!(
            out,
            "{n:>3} {:>9} {:>9} {:>8}",
            r.cochain_dims[n], r.ranks[n], r.dims[n]
        )
        .unwrap();
    }
    writeln!(out, "euler characteristic {}", r.euler_characteristic()).unwrap();
    if let Some(reps) = &r.representatives {
        for (n, deg) in reps.iter().enumerate().filter(|(_, d)| !d.is_empty()) {
            writeln!(out, "representatives in degree {n}").unwrap();
            for z in deg {
                writeln!(out, "  ({})", vector(z).join(", ")).unwrap();
            }
        }
    }
    out
}

pub(crate) fn identity(
    r: &IdentityReport,
    m: &Representation,
    other: Option<&Representation>,
    json: bool,
) -> String {
    let (lhs_name, rhs_name) = match r.name {
        "kunneth" => ("direct", "convolution"),
        "hazewinkel" => ("dim H^n(L,(V^tw)^*)", "dim H^{d-n}(L,V)"),
        _ => ("lhs", "rhs"),
    };
    if json {
        let degrees: Vec<Value> = r
            .degrees
            .iter()
            .map(
                |d| json!({ "degree": d.degree, "lhs": d.lhs, "rhs": d.rhs, "passes": d.passes() }),
            )
            .collect();
        return to_json(&json!({
            "command": if r.name == "kunneth" { "kunneth" } else { "duality" },
            "identity": r.name,
            "module": m.label(),
            "other_module": other.map(Representation::label),
            "degrees": degrees,
            "passes": r.passes(),
        }));
    }
    let mut out = String::new();
    match other {
        Some(o) => writeln!(out, "{} check for {} and {}", r.name, m.label(), o.label()).unwrap(),
        None => writeln!(out, "{} check for {}", r.name, m.label()).unwrap(),
    }
    writeln!(out, "{:>3} {:>20} {:>20}", "n", lhs_name, rhs_name).unwrap();
    for d in &r.degrees {
        let mark = if d.passes() { "" } else { "  MISMATCH" };
        writeln!(out, "{:>3} {:>20} {:>20}{mark}", d.degree, d.lhs, d.rhs).unwrap();
    }
    writeln!(out, "{}", if r.passes() { "passes" } else { "fails" }).unwrap();
    out
}

fn witnesses_json(ws: &[Witness]) -> Value {
    json!(ws
        .iter()
        .map(|w| json!({ "module": w.module, "degree": w.degree, "dim": w.dim }))
        .collect::<Vec<_>>())
}

fn write_witnesses(out: &mut String, ws: &[Witness]) {
    if ws.is_empty() {
        writeln!(out, "no witnesses").unwrap();
    }
    for w in ws {
        writeln!(
            out,
            "witness {} degree {} dim {}",
            w.module, w.degree, w.dim
        )
        .unwrap();
    }
}

pub(crate) fn theorem(v: &TheoremVerdict, json: bool) -> String {
    if json {
        return to_json(&json!({
            "command": "verify-theorem",
            "condition_i": v.condition_i,
            "condition_ii": v.condition_ii,
            "condition_iii": v.condition_iii,
            "condition_iv": v.condition_iv,
            "radical_nilpotent": v.decomposition.radical_nilpotent,
            "levi_acts_trivially": v.decomposition.levi_acts_trivially,
            "evaluated": v.evaluated,
            "skipped": v.skipped.iter().map(|(m, r)| json!({ "module": m, "reason": r })).collect::<Vec<_>>(),
            "witnesses": witnesses_json(&v.witnesses),
            "adequate": v.adequate,
            "consistent": v.consistent,
        }));
    }
    let mut out = String::new();
    writeln!(
        out,
        "(i)   semisimple plus nilpotent  {}",
        yes(v.condition_i)
    )
    .unwrap();
    writeln!(
        out,
        "(ii)  H^n = 0 for all n          {}",
        yes(v.condition_ii)
    )
    .unwrap();
    writeln!(
        out,
        "(iii) H^(dim L - 1) = 0          {}",
        yes(v.condition_iii)
    )
    .unwrap();
    writeln!(
        out,
        "(iv)  H^1 = 0                    {}",
        yes(v.condition_iv)
    )
    .unwrap();
    writeln!(
        out,
        "members evaluated {}, family adequate {}",
        v.evaluated,
        yes(v.adequate)
    )
    .unwrap();
    for (m, reason) in &v.skipped {
        writeln!(out, "skipped {m}: {reason}").unwrap();
    }
    write_witnesses(&mut out, &v.witnesses);
    writeln!(out, "consistent {}", yes(v.consistent)).unwrap();
    out
}

pub(crate) fn corollary(c: &CorollaryReport, json: bool) -> String {
    if json {
        return to_json(&json!({
            "command": "verify-corollary",
            "dim": c.dim,
            "criterion": c.criterion.as_str(),
            "structural": c.structural,
            "vanishing_on_family": c.vanishing_on_family,
            "evaluated": c.evaluated,
            "witnesses": witnesses_json(&c.witnesses),
            "adequate": c.adequate,
            "agree": c.agree,
        }));
    }
    let mut out = String::new();
    writeln!(
        out,
        "dimension {}, criterion {}",
        c.dim,
        c.criterion.as_str()
    )
    .unwrap();
    writeln!(out, "structural side          {}", yes(c.structural)).unwrap();
    writeln!(
        out,
        "H^n = 0 for n >= 3       {}",
        yes(c.vanishing_on_family)
    )
    .unwrap();
    writeln!(
        out,
        "members evaluated {}, family adequate {}",
        c.evaluated,
        yes(c.adequate)
    )
    .unwrap();
    write_witnesses(&mut out, &c.witnesses);
    writeln!(out, "agree {}", yes(c.agree)).unwrap();
    out
}

pub(crate) fn witness(hit: Option<&WitnessHit>, budget: usize, json: bool) -> String {
    let Some(h) = hit else {
        return if json {
            to_json(&json!({ "command": "witness", "found": false, "budget": budget }))
        } else {
            format!("no witness among the first {budget} candidates\n")
        };
    };
    let values = character_values(&h.module);
    if json {
        return to_json(&json!({
            "command": "witness",
            "found": true,
            "module": h.module.label(),
            "module_dim": h.module.dim(),
            "stage": h.stage.as_str(),
            "character": values
                .as_ref()
                .map(|vs| vs.iter().map(|(n, v)| (n.clone(), json!(v))).collect::<serde_json::Map<_, _>>()),
            "degree": h.degree,
            "dim": h.dim,
            "examined": h.examined,
            "action": h.module.action().iter().map(matrix_json).collect::<Vec<_>>(),
        }));
    }
    let mut out = String::new();
    writeln!(
        out,
        "witness {} ({}, dim {})",
        h.module.label(),
        h.stage.as_str(),
        h.module.dim()
    )
    .unwrap();
    if let Some(vs) = values {
        let parts: Vec<String> = vs
            .iter()
            .map(|(n, v)| format!("lambda({n}) = {v}"))
            .collect();
        writeln!(out, "character {}", parts.join(", ")).unwrap();
    }
    writeln!(out, "dim H^{} = {}", h.degree, h.dim).unwrap();
    writeln!(out, "candidates examined {}", h.examined).unwrap();
    out
}
