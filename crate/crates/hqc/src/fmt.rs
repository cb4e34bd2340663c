//! Shared text-assembly helpers for the canonical display forms.
//!
//! Every printable value in this crate is a finite sum of signed terms; the
//! only subtlety is folding a leading minus of a term into the ` - ` joiner
//! so that `x + (-y)` renders as `x - y`.

/// Joins already-formatted term strings with ` + ` / ` - `, absorbing a
/// leading `-` of each term into the separator. An empty list renders as "0".
pub(crate) fn join_signed_terms(terms: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        if k == 0 {
            out.push_str(t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(t);
        }
    }
    out
}

/// `coeff_str` multiplied onto a symbol (monomial, form, tensor...): handles
/// the `1`/`-1` coefficient elisions and inserts `*`.
pub(crate) fn coeff_times_symbol(coeff_str: &str, symbol: &str) -> String {
    match coeff_str {
        "1" => symbol.to_string(),
        "-1" => format!("-{symbol}"),
        c => format!("{c}*{symbol}"),
    }
}
