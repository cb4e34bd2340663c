//! Hopf structure on 𝒜: coproduct, counit, antipode, adjoint action.
//!
//! On generators
//!
//! ```text
//!     Δα = I⊗α + α⊗I            Sα = −α           εα = 0
//!     Δβ = I⊗β + β⊗I + α⊗δ      Sβ = −β + αδ      εβ = 0
//!     Δδ = I⊗δ + δ⊗I            Sδ = −δ           εδ = 0
//! ```
//!
//! Δ and ε extend as algebra maps, S as an antihomomorphism; monomial
//! values are computed by peeling one letter at a time (Δ(g·m) = Δg·Δm,
//! S(g·m) = Sm·Sg) and memoized per thread.  That the generator images
//! respect the defining relations — so the extensions are well defined on
//! 𝒜 and independent of the peeling order — is itself one of the checks in
//! [`verify_hopf_axioms`].
//!
//! The adjoint action of 𝒜 on itself is
//!
//! ```text
//!     ad(a) = Σ b_k ⊗ S(a_k)·c_k     where   (Δ⊗id)Δ(a) = Σ a_k⊗b_k⊗c_k,
//! ```
//!
//! normalized so that (id⊗ε)∘ad = id.

use std::cell::RefCell;
use std::collections::BTreeMap;

use crate::algebra::{pbw_monomials, Element, Gen, Monomial, Tensor2, Tensor3};
use crate::report::{Check, VerificationReport};
use crate::scalar::Scalar;

// ---------------------------------------------------------------------------
// The structure maps
// ---------------------------------------------------------------------------

fn delta_gen(g: Gen) -> Tensor2 {
    let i = Element::one();
    let x = Element::gen(g);
    let mut t = &Tensor2::of(&i, &x) + &Tensor2::of(&x, &i);
    if g == Gen::Beta {
        t = &t + &Tensor2::of(&Element::alpha(), &Element::delta());
    }
    t
}

fn antipode_gen(g: Gen) -> Element {
    match g {
        Gen::Alpha => -&Element::alpha(),
        Gen::Beta => &-&Element::beta() + &(&Element::alpha() * &Element::delta()),
        Gen::Delta => -&Element::delta(),
    }
}

thread_local! {
    static DELTA_MEMO: RefCell<BTreeMap<Monomial, Tensor2>> = const { RefCell::new(BTreeMap::new()) };
    static ANTIPODE_MEMO: RefCell<BTreeMap<Monomial, Element>> = const { RefCell::new(BTreeMap::new()) };
    static ADJOINT_MEMO: RefCell<BTreeMap<Monomial, Tensor2>> = const { RefCell::new(BTreeMap::new()) };
}

fn delta_mono(m: &Monomial) -> Tensor2 {
    if let Some(hit) = DELTA_MEMO.with(|memo| memo.borrow().get(m).cloned()) {
        return hit;
    }
    let value = match m.split_left() {
        None => Tensor2::unit(),
        Some((g, rest)) => delta_gen(g).tensor_multiply2(&delta_mono(&rest)),
    };
    DELTA_MEMO.with(|memo| memo.borrow_mut().insert(*m, value.clone()));
    value
}

fn antipode_mono(m: &Monomial) -> Element {
    if let Some(hit) = ANTIPODE_MEMO.with(|memo| memo.borrow().get(m).cloned()) {
        return hit;
    }
    let value = match m.split_left() {
        None => Element::one(),
        Some((g, rest)) => &antipode_mono(&rest) * &antipode_gen(g),
    };
    ANTIPODE_MEMO.with(|memo| memo.borrow_mut().insert(*m, value.clone()));
    value
}

/// Coproduct Δ: 𝒜 → 𝒜⊗𝒜.
pub fn delta(x: &Element) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (m, c) in x.terms() {
        for ((m1, m2), s) in delta_mono(m).terms() {
            out.add_term(*m1, *m2, s * c);
        }
    }
    out
}

/// Counit ε: 𝒜 → `ℚ(i)[λ]`; the coefficient of the unit monomial.
pub fn epsilon(x: &Element) -> Scalar {
    x.coeff(&Monomial::UNIT)
}

/// Antipode S: 𝒜 → 𝒜 (an algebra antihomomorphism).
pub fn antipode(x: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in x.terms() {
        out = &out + &antipode_mono(m).scale(c);
    }
    out
}

/// (Δ⊗id)∘Δ — by coassociativity also (id⊗Δ)∘Δ.
pub fn delta3(x: &Element) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((m1, m2), c) in delta(x).terms() {
        for ((n1, n2), s) in delta_mono(m1).terms() {
            out.add_term(*n1, *n2, *m2, s * c);
        }
    }
    out
}

fn delta3_right(x: &Element) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((m1, m2), c) in delta(x).terms() {
        for ((n1, n2), s) in delta_mono(m2).terms() {
            out.add_term(*m1, *n1, *n2, s * c);
        }
    }
    out
}

fn adjoint_mono(m: &Monomial) -> Tensor2 {
    if let Some(hit) = ADJOINT_MEMO.with(|memo| memo.borrow().get(m).cloned()) {
        return hit;
    }
    let mut out = Tensor2::zero();
    for ((a, b, c), s) in delta3(&Element::from_mono(*m)).terms() {
        let tail = &antipode_mono(a) * &Element::from_mono(*c);
        for (t, ts) in tail.terms() {
            out.add_term(*b, *t, ts * s);
        }
    }
    ADJOINT_MEMO.with(|memo| memo.borrow_mut().insert(*m, out.clone()));
    out
}

/// Adjoint action ad: 𝒜 → 𝒜⊗𝒜 (see the module docs).
pub fn adjoint(x: &Element) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (m, c) in x.terms() {
        for ((m1, m2), s) in adjoint_mono(m).terms() {
            out.add_term(*m1, *m2, s * c);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Structure checks
// ---------------------------------------------------------------------------

fn apply_slotwise(t: &Tensor2, f: impl Fn(&Monomial) -> Element) -> Tensor2 {
    t.map_slot(0, &f).map_slot(1, &f)
}

/// (ε⊗id): 𝒜⊗𝒜 → 𝒜.
fn epsilon_left(t: &Tensor2) -> Element {
    let mut out = Element::zero();
    for ((m1, m2), c) in t.terms() {
        if m1.is_unit() {
            out.add_term(*m2, c.clone());
        }
    }
    out
}

/// (id⊗ε): 𝒜⊗𝒜 → 𝒜.
fn epsilon_right(t: &Tensor2) -> Element {
    let mut out = Element::zero();
    for ((m1, m2), c) in t.terms() {
        if m2.is_unit() {
            out.add_term(*m1, c.clone());
        }
    }
    out
}

/// The unipotent matrix of generators with I on the diagonal:
/// rows/columns 0..3, entries T[0][1] = α, T[0][2] = β, T[1][2] = δ.
fn coproduct_matrix() -> [[Element; 3]; 3] {
    let mut t: [[Element; 3]; 3] = Default::default();
    for (k, row) in t.iter_mut().enumerate() {
        row[k] = Element::one();
    }
    t[0][1] = Element::alpha();
    t[0][2] = Element::beta();
    t[1][2] = Element::delta();
    t
}

/// Checks Δ(T_ij) = Σ_k T_ik ⊗ T_kj for all nine entries of the
/// generator matrix — the matrix-quantum-group form of the coproduct.
pub fn verify_matrix_coproduct() -> Check {
    let t = coproduct_matrix();
    for i in 0..3 {
        for j in 0..3 {
            let lhs = delta(&t[i][j]);
            let mut rhs = Tensor2::zero();
            for k in 0..3 {
                rhs = &rhs + &Tensor2::of(&t[i][k], &t[k][j]);
            }
            if lhs != rhs {
                return Check::fail(
                    "hopf.matrix_coproduct",
                    "Eq. (1)",
                    format!("entry ({i},{j}): delta = {lhs}, matrix form = {rhs}"),
                );
            }
        }
    }
    Check::pass("hopf.matrix_coproduct", "Eq. (1)")
}

/// Verifies the Hopf-algebra axioms and the adjoint normalization on all
/// PBW monomials of degree ≤ `max_degree`.
pub fn verify_hopf_axioms(max_degree: u32) -> VerificationReport {
    let mut report = VerificationReport::new("hopf", max_degree);
    let monos = pbw_monomials(max_degree);

    // Generator table: rebuild the structure maps' images independently and
    // compare, so a regression in the recursion shows up against fixed data.
    {
        let (i, a, b, d) = (
            Element::one(),
            Element::alpha(),
            Element::beta(),
            Element::delta(),
        );
        let table_ok = delta(&a) == &Tensor2::of(&i, &a) + &Tensor2::of(&a, &i)
            && delta(&b)
                == &(&Tensor2::of(&i, &b) + &Tensor2::of(&b, &i)) + &Tensor2::of(&a, &d)
            && delta(&d) == &Tensor2::of(&i, &d) + &Tensor2::of(&d, &i)
            && antipode(&a) == -&a
            && antipode(&b) == &-&b + &(&a * &d)
            && antipode(&d) == -&d
            && epsilon(&a).is_zero()
            && epsilon(&b).is_zero()
            && epsilon(&d).is_zero();
        report.record("hopf.generator_values", "Eq. (3)", table_ok, || {
            format!(
                "delta(a) = {}\ndelta(b) = {}\ndelta(d) = {}",
                delta(&a),
                delta(&b),
                delta(&d)
            )
        });
    }

    // Well-definedness: the generator images satisfy the defining relations
    // ([α,β] = iλα, [δ,β] = iλδ, [α,δ] = 0) — Δ verbatim in 𝒜⊗𝒜, S with
    // factors reversed ([Sβ,Sα] = iλSα and so on), ε trivially.
    {
        let (a, b, d) = (Element::alpha(), Element::beta(), Element::delta());
        let ilam = Scalar::i_lambda(1);
        let delta_ok = {
            let (da, db, dd) = (delta(&a), delta(&b), delta(&d));
            let comm =
                |x: &Tensor2, y: &Tensor2| &x.tensor_multiply2(y) - &y.tensor_multiply2(x);
            comm(&da, &db) == da.scale(&ilam)
                && comm(&dd, &db) == dd.scale(&ilam)
                && comm(&da, &dd).is_zero()
        };
        let antipode_ok = {
            let (sa, sb, sd) = (antipode(&a), antipode(&b), antipode(&d));
            let comm = |x: &Element, y: &Element| &(x * y) - &(y * x);
            comm(&sb, &sa) == sa.scale(&ilam)
                && comm(&sb, &sd) == sd.scale(&ilam)
                && comm(&sa, &sd).is_zero()
        };
        report.record(
            "hopf.relations",
            "Eq. (2)",
            delta_ok && antipode_ok,
            || "structure maps do not respect the defining relations".to_string(),
        );
    }

    // Algebra (anti)homomorphism property on monomial pairs.
    {
        let mut bad = None;
        'outer: for m1 in &monos {
            for m2 in &monos {
                if m1.degree() + m2.degree() > max_degree {
                    continue;
                }
                let prod = &Element::from_mono(*m1) * &Element::from_mono(*m2);
                let hom = delta(&prod)
                    == delta_mono(m1).tensor_multiply2(&delta_mono(m2))
                    && epsilon(&prod) == &epsilon(&Element::from_mono(*m1))
                        * &epsilon(&Element::from_mono(*m2))
                    && antipode(&prod) == &antipode_mono(m2) * &antipode_mono(m1);
                if !hom {
                    bad = Some((*m1, *m2));
                    break 'outer;
                }
            }
        }
        report.record("hopf.homomorphism", "", bad.is_none(), || {
            let (m1, m2) = bad.unwrap();
            format!("first offending pair: ({m1}, {m2})")
        });
    }

    // Coassociativity, counit, and antipode axioms monomial by monomial.
    {
        let mut bad_coassoc = None;
        let mut bad_counit = None;
        let mut bad_antipode = None;
        for m in &monos {
            let e = Element::from_mono(*m);
            let dm = delta_mono(m);
            if delta3(&e) != delta3_right(&e) {
                bad_coassoc.get_or_insert(*m);
            }
            if epsilon_left(&dm) != e || epsilon_right(&dm) != e {
                bad_counit.get_or_insert(*m);
            }
            let want = Element::from_scalar(epsilon(&e));
            let s_left = dm.map_slot(0, antipode_mono).contract();
            let s_right = dm.map_slot(1, antipode_mono).contract();
            if s_left != want || s_right != want {
                bad_antipode.get_or_insert(*m);
            }
        }
        report.record("hopf.coassociativity", "", bad_coassoc.is_none(), || {
            format!("fails on {}", bad_coassoc.unwrap())
        });
        report.record("hopf.counit", "", bad_counit.is_none(), || {
            format!("fails on {}", bad_counit.unwrap())
        });
        report.record("hopf.antipode", "", bad_antipode.is_none(), || {
            format!("fails on {}", bad_antipode.unwrap())
        });
    }

    // Classical antipode identities (cheap consequences of the axioms, kept
    // at low degree): S² = id, ε∘S = ε, (S⊗S)∘Δ = flip∘Δ∘S.
    {
        let bound = max_degree.min(3);
        let mut ok = true;
        for m in pbw_monomials(bound) {
            let e = Element::from_mono(m);
            let s = antipode(&e);
            ok &= antipode(&s) == e;
            ok &= epsilon(&s) == epsilon(&e);
            ok &= apply_slotwise(&delta(&e), antipode_mono) == delta(&s).flip();
            if !ok {
                break;
            }
        }
        report.record("hopf.classical_identities", "", ok, || {
            "S^2 = id / eps∘S = eps / (S⊗S)∘delta = flip∘delta∘S failed".to_string()
        });
    }

    // Adjoint normalization: (id⊗ε)∘ad = id.
    {
        let mut bad = None;
        for m in &monos {
            if epsilon_right(&adjoint_mono(m)) != Element::from_mono(*m) {
                bad = Some(*m);
                break;
            }
        }
        report.record("hopf.adjoint_counit", "Eq. (4)", bad.is_none(), || {
            let m = bad.unwrap();
            format!("(id⊗eps)(ad({m})) = {}", epsilon_right(&adjoint_mono(&m)))
        });
    }

    report.push(verify_matrix_coproduct());
    report
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_on_generators() {
        let (i, a, d) = (Element::one(), Element::alpha(), Element::delta());
        let b = Element::beta();
        let want =
            &(&Tensor2::of(&i, &b) + &Tensor2::of(&b, &i)) + &Tensor2::of(&a, &d);
        assert_eq!(delta(&b), want);
        assert_eq!(delta(&b).canonical_text(), "a (x) d + 1 (x) b + b (x) 1");
    }

    #[test]
    fn antipode_on_generators() {
        assert_eq!(antipode(&Element::alpha()).canonical_text(), "-a");
        assert_eq!(antipode(&Element::beta()).canonical_text(), "a*d - b");
        assert_eq!(antipode(&Element::delta()).canonical_text(), "-d");
    }

    #[test]
    fn adjoint_on_generators() {
        // ad(α) = α⊗I, ad(δ) = δ⊗I, ad(β) = β⊗I − δ⊗α + α⊗δ
        let one = Element::one();
        assert_eq!(
            adjoint(&Element::alpha()),
            Tensor2::of(&Element::alpha(), &one)
        );
        assert_eq!(
            adjoint(&Element::delta()),
            Tensor2::of(&Element::delta(), &one)
        );
        let want = &(&Tensor2::of(&Element::beta(), &one)
            - &Tensor2::of(&Element::delta(), &Element::alpha()))
            + &Tensor2::of(&Element::alpha(), &Element::delta());
        assert_eq!(adjoint(&Element::beta()), want);
    }

    #[test]
    fn axioms_to_degree_three() {
        let report = verify_hopf_axioms(3);
        assert!(report.all_pass(), "{}", report.render_text());
        assert_eq!(report.count(crate::report::Status::Pass), report.checks.len());
    }

    #[test]
    fn matrix_coproduct_passes() {
        assert_eq!(verify_matrix_coproduct().status, crate::report::Status::Pass);
    }
}
