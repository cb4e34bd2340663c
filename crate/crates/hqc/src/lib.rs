//! Exact symbolic engine for the quantum Heisenberg group.
//!
//! The coordinate algebra 𝒜 is generated by α, β, δ with
//! `[α,β] = iλα`, `[δ,β] = iλδ`, `[α,δ] = 0`, and carries the Hopf
//! structure of unipotent upper-triangular matrices.  Working in exact
//! `ℚ(i)[λ]`
//! arithmetic throughout, the crate constructs from first principles:
//!
//! * the PBW normal form and the Hopf operations ([`algebra`], [`hopf`]);
//! * the ad-invariant right ideal ℛ ⊂ ker ε with certified reductions
//!   onto the 3-dimensional quotient ([`ideal`]);
//! * the bicovariant first-order calculus, the braiding σ, the exterior
//!   square, and the Cartan–Maurer equations ([`calculus`]);
//! * the dual quantum Lie algebra of tangent functionals and its
//!   convolution structure ([`dual`]);
//! * an expression parser and machine-readable verification reports
//!   ([`expr`], [`report`]).
//!
//! Every published identity the construction touches is re-derived and
//! compared.  A mismatch is reported as a `paper-discrepancy` carrying
//! both the computed and the printed value — never silently corrected
//! and never silently adopted.

// Index loops here usually walk several fixed-size arrays in lockstep,
// where the index *is* the basis position; iterator rewrites obscure that.
#![allow(clippy::needless_range_loop)]

pub(crate) mod fmt;

pub mod algebra;
pub mod calculus;
pub mod dual;
pub mod expr;
pub mod hopf;
pub mod ideal;
pub mod report;
pub mod scalar;

use report::VerificationReport;

/// Verifier suite names accepted by [`run_suite`].
pub const SUITES: [&str; 5] = ["hopf", "ideal", "calculus", "dual", "all"];

/// Runs a named verifier suite and stamps the wall time.  `all` chains
/// every module verifier in construction order.  Returns `None` for an
/// unknown name.
pub fn run_suite(name: &str, max_degree: u32) -> Option<VerificationReport> {
    let start = std::time::Instant::now();
    let mut report = match name {
        "hopf" => hopf::verify_hopf_axioms(max_degree),
        "ideal" => {
            let mut r = VerificationReport::new("ideal", max_degree);
            r.absorb(ideal::verify_ad_invariance(max_degree));
            r.absorb(ideal::verify_quotient_basis(max_degree));
            r
        }
        "calculus" => calculus::verify_calculus(max_degree),
        "dual" => dual::verify_quantum_lie(max_degree),
        "all" => {
            let mut r = VerificationReport::new("all", max_degree);
            r.absorb(hopf::verify_hopf_axioms(max_degree));
            r.absorb(ideal::verify_ad_invariance(max_degree));
            r.absorb(ideal::verify_quotient_basis(max_degree));
            r.absorb(calculus::verify_calculus(max_degree));
            r.absorb(dual::verify_quantum_lie(max_degree));
            r
        }
        _ => return None,
    };
    report.wall_ms = Some(start.elapsed().as_millis() as u64);
    Some(report)
}
