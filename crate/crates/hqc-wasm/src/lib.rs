//! Browser bindings for the symbolic engine.
//!
//! Every export takes plain strings and returns a JSON string, so the same
//! functions are callable from JavaScript through `wasm-bindgen` and from
//! native tests without any JS runtime.  Success and failure share one
//! envelope: `{"ok": true, ...}` or `{"ok": false, "error": {...}}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use hqc::calculus::{cartan_maurer, differential, FORM_NAMES};
use hqc::expr::{parse_element, ParseError};
use hqc::hopf::{antipode, delta, epsilon};
use hqc::ideal::IdealGenerators;

/// Degree budgets beyond this freeze a browser tab for no extra insight;
/// native callers wanting deeper sweeps use the CLI.
const MAX_BROWSER_DEGREE: u32 = 6;

fn parse_error(e: &ParseError) -> String {
    json!({
        "ok": false,
        "error": { "position": e.position, "message": e.message },
    })
    .to_string()
}

fn usage_error(message: &str) -> String {
    json!({ "ok": false, "error": { "message": message } }).to_string()
}

/// Normal form, Hopf data, and quotient reduction of one expression.
#[wasm_bindgen]
pub fn analyze(src: &str) -> String {
    let x = match parse_element(src) {
        Ok(x) => x,
        Err(e) => return parse_error(&e),
    };
    let gens = IdealGenerators::ad_invariant();
    let reduction = gens.reduce_traced(&x);
    let trace: Vec<String> = reduction
        .trace
        .iter()
        .map(|step| {
            format!(
                "{} * ({}) * {}",
                step.coefficient,
                gens.generators()[step.generator_index].canonical_text(),
                hqc::algebra::Element::from_mono(step.cofactor).canonical_text(),
            )
        })
        .collect();
    json!({
        "ok": true,
        "normal_form": x.canonical_text(),
        "degree": x.degree(),
        "delta": delta(&x).canonical_text(),
        "epsilon": epsilon(&x).canonical_text(),
        "antipode": antipode(&x).canonical_text(),
        "reduce": {
            "class": reduction.class.canonical_text(),
            "in_ideal": reduction.class.is_zero(),
            "trace": trace,
        },
    })
    .to_string()
}

/// The differential of one expression as a left-coefficient row over
/// (w_a, w_b, w_d), plus the assembled one-form.
#[wasm_bindgen]
pub fn differential_of(src: &str) -> String {
    let x = match parse_element(src) {
        Ok(x) => x,
        Err(e) => return parse_error(&e),
    };
    let dx = differential(&x);
    let mut coefficients = serde_json::Map::new();
    for (name, coeff) in FORM_NAMES.iter().zip(dx.left_coeffs.iter()) {
        coefficients.insert(name.to_string(), Value::String(coeff.canonical_text()));
    }
    json!({
        "ok": true,
        "differential": dx.canonical_text(),
        "coefficients": coefficients,
    })
    .to_string()
}

/// The three structure equations for the invariant forms.
#[wasm_bindgen]
pub fn structure_equations() -> String {
    let dw = cartan_maurer();
    let lines: Vec<String> = FORM_NAMES
        .iter()
        .zip(dw.iter())
        .map(|(name, form)| format!("d({name}) = {}", form.canonical_text()))
        .collect();
    json!({ "ok": true, "equations": lines }).to_string()
}

/// Runs one verification suite and returns its report (the same JSON the
/// CLI emits, wrapped in the envelope).
#[wasm_bindgen]
pub fn verify(suite: &str, max_degree: u32) -> String {
    if max_degree > MAX_BROWSER_DEGREE {
        return usage_error(&format!(
            "max_degree {max_degree} exceeds the browser budget of {MAX_BROWSER_DEGREE}"
        ));
    }
    match hqc::run_suite(suite, max_degree) {
        Some(report) => {
            let mut value: Value =
                serde_json::from_str(&report.render_json()).expect("report serializes");
            value["ok"] = Value::Bool(true);
            value.to_string()
        }
        None => usage_error(&format!(
            "unknown suite {suite:?}; expected one of {:?}",
            hqc::SUITES
        )),
    }
}

/// The suites `verify` accepts, for populating a menu.
#[wasm_bindgen]
pub fn suites() -> String {
    json!({ "ok": true, "suites": hqc::SUITES }).to_string()
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn parsed(payload: String) -> Value {
        serde_json::from_str(&payload).unwrap()
    }

    #[test]
    fn analyze_reports_hopf_data() {
        let v = parsed(analyze("a*b"));
        assert_eq!(v["ok"], true);
        assert_eq!(v["normal_form"], "b*a + i*l*a");
        assert_eq!(v["degree"], 2);
        assert_eq!(v["epsilon"], "0");
        // The commutator term survives reduction: [β,α] lands on i*l*a.
        assert_eq!(v["reduce"]["class"], "i*l*a");
        assert_eq!(v["reduce"]["in_ideal"], false);
        assert_eq!(parsed(analyze("b*a"))["reduce"]["in_ideal"], true);

        let w = parsed(analyze("b^2"));
        assert_eq!(w["reduce"]["class"], "2*i*l*b");
        assert_eq!(w["reduce"]["in_ideal"], false);
        assert_eq!(
            w["reduce"]["trace"][0],
            "1 * (b^2 - 2*i*l*b) * 1"
        );
    }

    #[test]
    fn analyze_reports_parse_errors_with_position() {
        let v = parsed(analyze("a + "));
        assert_eq!(v["ok"], false);
        assert!(v["error"]["position"].is_u64());
    }

    #[test]
    fn differential_row() {
        let v = parsed(differential_of("b*a"));
        assert_eq!(v["ok"], true);
        assert_eq!(v["differential"], "b*w_a + a*w_b + a^2*w_d");
        assert_eq!(v["coefficients"]["w_b"], "a");
    }

    #[test]
    fn structure_equations_match_engine() {
        let v = parsed(structure_equations());
        assert_eq!(v["equations"][1], "d(w_b) = -w_a/\\w_d");
    }

    #[test]
    fn verify_wraps_report_and_validates_input() {
        let v = parsed(verify("hopf", 2));
        assert_eq!(v["ok"], true);
        assert_eq!(v["suite"], "hopf");
        assert!(v["checks"].as_array().unwrap().len() >= 9);

        assert_eq!(parsed(verify("bogus", 2))["ok"], false);
        assert_eq!(parsed(verify("hopf", 99))["ok"], false);
    }

    #[test]
    fn suites_lists_all() {
        let v = parsed(suites());
        assert_eq!(v["suites"].as_array().unwrap().len(), 5);
    }
}
