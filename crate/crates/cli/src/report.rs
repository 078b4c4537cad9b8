//! Command reports as JSON values. Keys are sorted (serde_json's default map is
//! a BTreeMap), so the same input always renders to the same bytes.

use serde_json::{json, Map, Value};

use gsym_core::algebra::{trace_dual, Algebra, GroupAction};
use gsym_core::completion::{end_mod_rad_dim, CompletedObject};
use gsym_core::group::AbelianGroup;
use gsym_core::mat::SVec;
use gsym_core::twocat::{
    all_adjunctions, catalogue, cells, check_closed_forms, classify_count, fiat_report, hcell_realization_check,
    hcell_solve, mult_table, section7_toolkit, verify_zigzag, Catalogue, Instance, MultTable,
};
use gsym_core::{Error, Scalar};

/// Why a command did not produce a clean report.
#[derive(Debug)]
pub enum Failure {
    /// A named invariant does not hold.
    Invariant(String, String),
    /// A computation error from the core crate.
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Invariant(name, detail) => write!(f, "invariant {name} failed: {detail}"),
            Failure::Core(e) => write!(f, "{}: {e}", e.name()),
        }
    }
}

pub type Outcome = Result<Value, Failure>;

fn coeff_literal(c: &Scalar) -> String {
    let s = c.to_literal();
    if s[1..].contains([' ', '*']) {
        format!("({s})")
    } else {
        s
    }
}

/// `e1 - 1/2*a` style rendering of an algebra element.
pub fn element_literal(a: &Algebra, v: &SVec) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let lit = coeff_literal(c);
        let (neg, abs) = match lit.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, lit),
        };
        let body = if abs == "1" { a.labels[*i].clone() } else { format!("{abs}*{}", a.labels[*i]) };
        out.push_str(match (k == 0, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        });
        out.push_str(&body);
    }
    out
}

fn labels(cat: &Catalogue, ks: &[usize]) -> Value {
    Value::from(ks.iter().map(|&k| cat.entries[k].label.name()).collect::<Vec<_>>())
}

fn summary(a: &Algebra, act: &GroupAction) -> Value {
    json!({
        "dim": a.dim,
        "vertices": a.nverts,
        "blocks": a.nblocks,
        "group_orders": act.group.orders,
        "conductor": a.field.m,
    })
}

pub fn catalogue_report(inst: &Instance) -> Outcome {
    let cat = catalogue(inst)?;
    let s = &inst.s;
    let mut entries = Vec::new();
    for e in &cat.entries {
        entries.push(json!({
            "label": e.label.name(),
            "src_block": e.src + 1,
            "tgt_block": e.tgt + 1,
            "rank": e.obj.rank(s),
            "base_dim": cat.bases[e.base].dim,
        }));
    }
    Ok(json!({ "instance": summary(&s.a, &s.act), "count": entries.len(), "entries": entries }))
}

fn table_value(cat: &Catalogue, t: &MultTable) -> Value {
    let mut rows = Vec::new();
    for f in 0..t.n() {
        for g in 0..t.n() {
            let prod: Vec<Value> =
                t.mult[f][g].iter().map(|&(h, m)| json!({ "label": cat.entries[h].label.name(), "mult": m })).collect();
            rows.push(json!({
                "f": cat.entries[f].label.name(),
                "g": cat.entries[g].label.name(),
                "product": prod,
            }));
        }
    }
    Value::from(rows)
}

pub fn table_report(inst: &Instance) -> Outcome {
    let cat = catalogue(inst)?;
    let t = mult_table(inst, &cat)?;
    if !t.is_associative() {
        return Err(Failure::Invariant("table-associative".into(), "structure constants are not associative".into()));
    }
    Ok(json!({ "labels": labels(&cat, &(0..cat.len()).collect::<Vec<_>>()), "table": table_value(&cat, &t) }))
}

pub fn cells_report(inst: &Instance) -> Outcome {
    let cat = catalogue(inst)?;
    let t = mult_table(inst, &cat)?;
    let c = cells(&t);
    if !c.is_consistent() {
        return Err(Failure::Invariant("cells-consistent".into(), "preorders disagree with the cells".into()));
    }
    let list = |cs: &Vec<Vec<usize>>| Value::from(cs.iter().map(|x| labels(&cat, x)).collect::<Vec<_>>());
    let sizes: Vec<usize> = c.two_sided.iter().map(|x| x.len()).collect();
    Ok(json!({
        "left": list(&c.left),
        "right": list(&c.right),
        "two_sided": list(&c.two_sided),
        "two_sided_sizes": sizes,
    }))
}

pub fn adjunctions_report(inst: &Instance) -> Outcome {
    if let Err(e) = &inst.nak {
        return Err(Failure::Core(e.clone()));
    }
    let cat = catalogue(inst)?;
    let adj = all_adjunctions(inst, &cat)?;
    let mut rows = Vec::new();
    for d in &adj {
        let ok = verify_zigzag(inst, d)?;
        let left = cat.entries[d.left].label.name();
        if !ok {
            return Err(Failure::Invariant("zig-zag".into(), format!("fails for {left}")));
        }
        rows.push(json!({ "left": left, "right": cat.entries[d.right].label.name(), "zigzag": ok }));
    }
    Ok(json!({ "adjunctions": rows }))
}

pub fn fiat_report_value(inst: &Instance) -> Outcome {
    let cat = catalogue(inst)?;
    let t = mult_table(inst, &cat)?;
    let r = fiat_report(inst, &cat, &t)?;
    let star = match &r.star {
        Some(st) => {
            let mut m = Map::new();
            for (k, &j) in st.iter().enumerate() {
                m.insert(cat.entries[k].label.name(), Value::from(cat.entries[j].label.name()));
            }
            Value::Object(m)
        }
        None => Value::Null,
    };
    Ok(json!({ "weakly_fiat": r.weakly_fiat, "fiat": r.fiat, "star": star }))
}

pub fn classify_report(g: &AbelianGroup) -> Value {
    let (rows, total) = classify_count(g);
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| json!({ "order": r.subgroup.len(), "invariant_factors": r.invariant_factors, "schur_order": r.schur_order }))
        .collect();
    json!({ "group_orders": g.orders, "subgroups": rows, "total": total })
}

pub fn hcell_report(max: u64) -> Value {
    let sols = hcell_solve(max);
    let diag = sols.iter().all(|s| s.x == s.y && s.y == s.b && s.b == s.c);
    let list: Vec<Value> = sols.iter().map(|s| json!({ "x": s.x, "y": s.y, "b": s.b, "c": s.c })).collect();
    json!({ "max": max, "count": sols.len(), "all_diagonal": diag, "solutions": list })
}

fn check(name: &str, ok: bool, detail: impl FnOnce() -> String, passed: &mut Vec<Value>) -> Result<(), Failure> {
    if ok {
        passed.push(Value::from(name));
        Ok(())
    } else {
        Err(Failure::Invariant(name.into(), detail()))
    }
}

/// Verifies everything the toolkit can say about an instance, stopping at the
/// first violated invariant.
pub fn check_report(inst: &Instance) -> Outcome {
    let s = &inst.s;
    let a = &s.a;
    let mut passed = Vec::new();
    check("algebra-associative", a.check_associative(), || "multiplication is not associative".into(), &mut passed)?;
    let self_injective = inst.nak.is_ok();
    if let Ok(nak) = &inst.nak {
        let td = trace_dual(a, nak)?;
        let ok = (0..a.dim).all(|i| {
            (0..a.dim).all(|j| {
                let v = td.eval(&a.mul(&a.unit_vec(i), &td.dual[j]));
                if i == j {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        });
        check("trace-dual-basis", ok, || "t(b_i b_j*) is not the identity".into(), &mut passed)?;
    }
    let cat = catalogue(inst)?;
    for e in &cat.entries {
        let d = end_mod_rad_dim(s, &e.obj)?;
        check("indecomposables-local", d == 1, || format!("End/Rad of {} has dimension {d}", e.label), &mut passed)?;
    }
    for m in &cat.bases {
        let d = end_mod_rad_dim(s, &CompletedObject::plain(s, m.clone()))?;
        let stab = gsym_core::completion::stabilizer(s, m).len();
        check(
            "end-mod-rad-stabilizer",
            d == stab,
            || format!("End/Rad dimension {d}, stabilizer order {stab}"),
            &mut passed,
        )?;
    }
    let t = mult_table(inst, &cat)?;
    check("table-associative", t.is_associative(), || "structure constants are not associative".into(), &mut passed)?;
    check_closed_forms(inst, &cat, &t).map_err(|e| Failure::Invariant("closed-forms".into(), e.to_string()))?;
    passed.push(Value::from("closed-forms"));
    let c = cells(&t);
    check("cells-consistent", c.is_consistent(), || "preorders disagree with the cells".into(), &mut passed)?;
    let expect = a.nblocks + 1;
    check(
        "cell-count",
        c.two_sided.len() == expect,
        || format!("{} two-sided cells, expected {expect}", c.two_sided.len()),
        &mut passed,
    )?;
    if self_injective {
        for d in all_adjunctions(inst, &cat)? {
            let ok = verify_zigzag(inst, &d)?;
            check("zig-zag", ok, || format!("fails for {}", cat.entries[d.left].label), &mut passed)?;
        }
        let r = fiat_report(inst, &cat, &t)?;
        check("duality-involutive", r.fiat, || "the right-adjoint map is not an involution".into(), &mut passed)?;
    }
    passed.dedup();
    Ok(json!({
        "instance": summary(a, &s.act),
        "self_injective": self_injective,
        "indecomposables": cat.len(),
        "passed": passed,
        "ok": true,
    }))
}

/// The order-four toolkit on the generator of an instance acting through a
/// cyclic group, plus the realization check.
pub fn section7_report(inst: &Instance) -> Outcome {
    let s = &inst.s;
    let a = &s.a;
    let g = &s.act.group;
    if g.orders.len() != 1 {
        return Err(Failure::Core(Error::Invalid("needs a cyclic group".into())));
    }
    let phi = g.elem(&[1]);
    let rep = section7_toolkit(a, &s.act.mats[phi])?;
    let poly: Vec<String> = rep.b_poly.iter().map(|c| c.to_literal()).collect();
    if rep.order_sigma_phi != rep.order_phi {
        return Err(Failure::Invariant(
            "sigma-phi-order".into(),
            format!("sigma phi has order {}, phi has order {}", rep.order_sigma_phi, rep.order_phi),
        ));
    }
    let real = hcell_realization_check(inst)?;
    Ok(json!({
        "toolkit": {
            "order_phi": rep.order_phi,
            "a": element_literal(a, &rep.a),
            "t": element_literal(a, &rep.t),
            "t_central": rep.t_central,
            "b": element_literal(a, &rep.b),
            "b_poly": poly,
            "order_sigma_phi": rep.order_sigma_phi,
        },
        "realization": {
            "realized": real.realized,
            "n": real.n,
            "f": real.f,
            "g": real.g,
            "cartan": real.cartan,
            "reason": real.reason,
        },
    }))
}

/// Human-readable rendering of a report value.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", xs.iter().map(|x| scalar_text(x).unwrap()).collect::<Vec<_>>().join(", ")))
        }
        Value::Array(xs)
            if xs.iter().all(|x| x.as_array().is_some_and(|y| y.iter().all(|z| !z.is_array() && !z.is_object()))) =>
        {
            Some(format!("[{}]", xs.iter().map(|x| scalar_text(x).unwrap()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar_text(x) {
                    Some(t) => out.push_str(&format!("{pad}{k}: {t}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                match (scalar_text(x), x) {
                    (Some(t), _) => out.push_str(&format!("{pad}- {t}\n")),
                    (None, Value::Object(m)) => {
                        let line: Option<Vec<String>> =
                            m.iter().map(|(k, y)| scalar_text(y).map(|t| format!("{k}={t}"))).collect();
                        match line {
                            Some(parts) => out.push_str(&format!("{pad}- {}\n", parts.join(" "))),
                            None => {
                                out.push_str(&format!("{pad}-\n"));
                                render(x, depth + 1, out);
                            }
                        }
                    }
                    (None, _) => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other).unwrap_or_default())),
    }
}
