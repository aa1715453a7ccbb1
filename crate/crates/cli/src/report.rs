//! JSON rendering of verification results.

use num_complex::Complex64;
use serde_json::{json, Map, Value};
use spirallike::{CoefficientSum, GridCheck, GridSpec, InequalitySides, VerificationReport};

use crate::format::{pair, pretty_json, sig9};

fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(sig9(x))
    } else {
        Value::Null
    }
}

fn point(z: Complex64) -> Value {
    json!(pair(z))
}

fn coefficient_sum(c: &CoefficientSum) -> Value {
    json!({
        "sum": num(c.sum),
        "bound": num(c.bound),
        "pass": c.pass,
        "truncated_at": c.truncated_at,
        "first_violation": c.first_violation,
    })
}

fn grid_check(c: &GridCheck) -> Value {
    json!({ "min": num(c.min), "witness": point(c.at), "pass": c.pass })
}

pub fn grid(g: &GridSpec) -> Value {
    json!({
        "r_min": num(g.r_min),
        "r_max": num(g.r_max),
        "n_radii": g.n_radii,
        "n_angles": g.n_angles,
        "margin_eps": num(g.margin_eps),
    })
}

pub fn sides(z: Complex64, s: &InequalitySides) -> Value {
    json!({ "z": point(z), "lhs": num(s.lhs), "rhs": num(s.rhs), "holds": s.holds() })
}

/// Flat key/value document; keys sort alphabetically in the output.
pub fn report_json(r: &VerificationReport, probe: Option<(Complex64, InequalitySides)>) -> Value {
    let mut o = Map::new();
    o.insert("lambda".into(), num(r.lambda));
    o.insert("truncation".into(), json!(r.truncation));
    o.insert("signed_form".into(), json!(r.signed_form));
    o.insert("closed_form".into(), json!(r.closed_form));
    o.insert("weight_B".into(), num(r.weights_b));
    o.insert("B_over_A1".into(), num(r.b_over_a1));
    o.insert("silverman".into(), coefficient_sum(&r.silverman));
    o.insert("sufficient".into(), coefficient_sum(&r.sufficient));
    o.insert("sufficient_sum".into(), num(r.sufficient.sum));
    o.insert("sufficient_pass".into(), json!(r.sufficient.pass));
    o.insert(
        "necessary_weighted_sum".into(),
        r.necessary_weighted.map(|c| num(c.sum)).unwrap_or(Value::Null),
    );
    o.insert(
        "necessary_weighted".into(),
        r.necessary_weighted.as_ref().map(coefficient_sum).unwrap_or(Value::Null),
    );
    o.insert(
        "necessary_sharp_sum".into(),
        r.necessary_sharp.map(|c| num(c.tail.sum)).unwrap_or(Value::Null),
    );
    o.insert(
        "necessary_sharp".into(),
        r.necessary_sharp
            .map(|c| json!({ "tail": coefficient_sum(&c.tail), "with_leading_term": num(c.with_leading_term) }))
            .unwrap_or(Value::Null),
    );
    o.insert("sense_preserving".into(), grid_check(&r.sense_preserving));
    o.insert("sense_preserving_min".into(), num(r.sense_preserving.min));
    o.insert("nonvanishing".into(), grid_check(&r.nonvanishing));
    match (&r.pointwise, &r.pointwise_error) {
        (Some(c), _) => {
            o.insert("pointwise".into(), grid_check(c));
            o.insert("pointwise_min_margin".into(), num(c.min));
        }
        (None, e) => {
            o.insert("pointwise".into(), json!({ "pass": false, "error": e }));
            o.insert("pointwise_min_margin".into(), Value::Null);
        }
    }
    o.insert(
        "theorem1_at_witness".into(),
        r.theorem1_at_witness.map(|(z, s)| sides(z, &s)).unwrap_or(Value::Null),
    );
    o.insert("margin_M".into(), grid_check(&r.margin_m));
    o.insert("margin_M_min".into(), num(r.margin_m.min));
    match r.growth {
        Some(g) => {
            o.insert("growth_lower".into(), num(g.lower));
            o.insert("growth_upper".into(), num(g.upper));
            o.insert("covering_radius".into(), num(g.covering_radius));
        }
        None => {
            o.insert("growth_lower".into(), Value::Null);
            o.insert("growth_upper".into(), Value::Null);
            o.insert("covering_radius".into(), Value::Null);
        }
    }
    if let Some((z, s)) = probe {
        o.insert("theorem1_probe".into(), sides(z, &s));
    }
    o.insert("grid_used".into(), grid(&r.grid));
    o.insert("sampled".into(), json!(r.sampled));
    let checks: Map<String, Value> = r.checks().into_iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    o.insert("checks".into(), Value::Object(checks));
    o.insert("all_pass".into(), json!(r.all_pass()));
    Value::Object(o)
}

pub fn to_text(v: &Value) -> String {
    pretty_json(v)
}
