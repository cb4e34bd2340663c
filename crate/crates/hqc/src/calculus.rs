//! The first-order differential calculus Γ on 𝒜 and its exterior square.
//!
//! Everything here is built from the quotient, not from printed tables:
//!
//! * Γ ≅ 𝒜 ⊗ (ker ε/ℛ) with left-invariant basis ω_α, ω_β, ω_δ attached to
//!   the classes `[α]`, `[β]`, `[δ]`;
//! * the differential is `da = Σ a₍₁₎ · ω_{[a₍₂₎ − ε(a₍₂₎)I]}`, giving
//!   dα = ω_α, dβ = ω_β + α·ω_δ, dδ = ω_δ;
//! * the right action is `ω_i·x = Σ x₍₁₎ · ω_{[gᵢ·x₍₂₎]}` — the nine
//!   generator commutators come out of this, they are not assumed;
//! * right-invariant forms are η_x = Σ d(x₍₁₎)·S(x₍₂₎);
//! * σ is the unique right-𝒜-linear map with σ(ω ⊗ η) = η ⊗ ω, derived by
//!   changing the second slot to the η basis and back;
//! * Γ^∧2 = Γ^⊗2 / ker(I−σ), with the projection table solved from σ at
//!   startup — construction aborts if the quotient is not free of rank 3;
//! * dω_x = Σ d(S(x₍₁₎)) ∧ d(x₍₂₎), from ω_x = Σ S(x₍₁₎)·d(x₍₂₎) and
//!   d(a·db) = da ∧ db.
//!
//! Basis order everywhere: (ω_α, ω_β, ω_δ), wedge basis
//! (ω_α∧ω_β, ω_α∧ω_δ, ω_δ∧ω_β).

use std::fmt;
use std::sync::OnceLock;

use crate::algebra::{pbw_monomials, Element, Gen, Monomial, Tensor2};
use crate::fmt::{coeff_times_symbol, join_signed_terms};
use crate::hopf::{antipode, delta};
use crate::ideal::{IdealGenerators, QuotientClass};
use crate::report::{Check, VerificationReport};
use crate::scalar::{GaussRational, Scalar};

pub const FORM_NAMES: [&str; 3] = ["w_a", "w_b", "w_d"];
pub const WEDGE_NAMES: [&str; 3] = ["w_a/\\w_b", "w_a/\\w_d", "w_d/\\w_b"];
/// Representatives of the wedge basis inside Γ^⊗2.
const WEDGE_REPS: [(usize, usize); 3] = [(0, 1), (0, 2), (2, 1)];
const FORM_GENS: [Gen; 3] = [Gen::Alpha, Gen::Beta, Gen::Delta];

fn ideal() -> &'static IdealGenerators {
    static IDEAL: OnceLock<IdealGenerators> = OnceLock::new();
    IDEAL.get_or_init(IdealGenerators::ad_invariant)
}

// ---------------------------------------------------------------------------
// One-forms
// ---------------------------------------------------------------------------

/// A 1-form in left-coefficient shape: a_α·ω_α + a_β·ω_β + a_δ·ω_δ.
/// Γ is free as a left module on the ω's, so this is a faithful normal form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OneForm {
    pub left_coeffs: [Element; 3],
}

/// A 1-form in right-coefficient shape: ω_α·b_α + ω_β·b_β + ω_δ·b_δ.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RightOneForm {
    pub right_coeffs: [Element; 3],
}

impl OneForm {
    pub fn zero() -> Self {
        OneForm::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut w = OneForm::zero();
        w.left_coeffs[i] = Element::one();
        w
    }

    pub fn is_zero(&self) -> bool {
        self.left_coeffs.iter().all(Element::is_zero)
    }

    /// x · ω — free left-module action.
    pub fn scale_left(&self, x: &Element) -> OneForm {
        OneForm {
            left_coeffs: std::array::from_fn(|i| x * &self.left_coeffs[i]),
        }
    }

    pub fn scale(&self, c: &Scalar) -> OneForm {
        OneForm {
            left_coeffs: std::array::from_fn(|i| self.left_coeffs[i].scale(c)),
        }
    }

    /// ω · x — the bimodule right action, resolved back to left shape.
    pub fn times_element(&self, x: &Element) -> OneForm {
        let mut out = OneForm::zero();
        for i in 0..3 {
            if self.left_coeffs[i].is_zero() {
                continue;
            }
            let w = form_times_element(i, x);
            for k in 0..3 {
                out.left_coeffs[k] =
                    &out.left_coeffs[k] + &(&self.left_coeffs[i] * &w.left_coeffs[k]);
            }
        }
        out
    }

    pub fn canonical_text(&self) -> String {
        module_text(&self.left_coeffs, &FORM_NAMES)
    }
}

impl std::ops::Add for &OneForm {
    type Output = OneForm;
    fn add(self, rhs: &OneForm) -> OneForm {
        OneForm {
            left_coeffs: std::array::from_fn(|i| &self.left_coeffs[i] + &rhs.left_coeffs[i]),
        }
    }
}

impl std::ops::Sub for &OneForm {
    type Output = OneForm;
    fn sub(self, rhs: &OneForm) -> OneForm {
        OneForm {
            left_coeffs: std::array::from_fn(|i| &self.left_coeffs[i] - &rhs.left_coeffs[i]),
        }
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

fn module_text(coeffs: &[Element], names: &[&str]) -> String {
    let mut terms = Vec::new();
    for (e, name) in coeffs.iter().zip(names) {
        if e.is_zero() {
            continue;
        }
        let text = e.canonical_text();
        terms.push(if e.term_count() > 1 {
            format!("({text})*{name}")
        } else {
            coeff_times_symbol(&text, name)
        });
    }
    join_signed_terms(&terms)
}

// ---------------------------------------------------------------------------
// The Woronowicz identification and the differential
// ---------------------------------------------------------------------------

/// The invariant form attached to a quotient class; the I-component is
/// dropped (the identification concerns ker ε/ℛ).
pub fn class_to_form(class: &QuotientClass) -> OneForm {
    let mut w = OneForm::zero();
    w.left_coeffs[0] = Element::from_scalar(class.c_alpha.clone());
    w.left_coeffs[1] = Element::from_scalar(class.c_beta.clone());
    w.left_coeffs[2] = Element::from_scalar(class.c_delta.clone());
    w
}

/// The three basis forms paired with their defining classes in ker ε/ℛ.
pub fn omega_basis() -> [(OneForm, QuotientClass); 3] {
    std::array::from_fn(|i| {
        (
            OneForm::basis(i),
            ideal().reduce(&Element::gen(FORM_GENS[i])),
        )
    })
}

/// ω_i · x = Σ x₍₁₎ · ω_{[gᵢ·x₍₂₎]} in left-coefficient shape.
pub fn form_times_element(i: usize, x: &Element) -> OneForm {
    let gen = Element::gen(FORM_GENS[i]);
    let mut out = OneForm::zero();
    for ((m1, m2), c) in delta(x).terms() {
        let class = ideal().reduce(&(&gen * &Element::from_mono(*m2)));
        for (k, s) in [
            (0usize, &class.c_alpha),
            (1, &class.c_beta),
            (2, &class.c_delta),
        ] {
            if !s.is_zero() {
                out.left_coeffs[k].add_term(*m1, s * c);
            }
        }
    }
    out
}

/// dx = Σ x₍₁₎ · ω_{[x₍₂₎ − ε(x₍₂₎)I]}.
pub fn differential(x: &Element) -> OneForm {
    let mut out = OneForm::zero();
    for ((m1, m2), c) in delta(x).terms() {
        let class = ideal().reduce(&Element::from_mono(*m2));
        for (k, s) in [
            (0usize, &class.c_alpha),
            (1, &class.c_beta),
            (2, &class.c_delta),
        ] {
            if !s.is_zero() {
                out.left_coeffs[k].add_term(*m1, s * c);
            }
        }
    }
    out
}

/// r⁻¹(a ⊗ b) = (a ⊗ I)(S ⊗ I)Δ(b), termwise.
pub fn r_inverse(t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((m1, m2), c) in t.terms() {
        for ((n1, n2), s) in delta(&Element::from_mono(*m2)).terms() {
            let left = &Element::from_mono(*m1) * &antipode(&Element::from_mono(*n1));
            for (p, pc) in left.terms() {
                out.add_term(*p, *n2, &(pc * s) * c);
            }
        }
    }
    out
}

/// Errors from calculus maps with a stated domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CalculusError {
    /// π is defined on Σ a_k ⊗ b_k with Σ a_k·b_k = 0; the payload is the
    /// offending contraction.
    PiDomain(Element),
}

impl fmt::Display for CalculusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CalculusError::PiDomain(c) => {
                write!(f, "pi requires a tensor with zero contraction, got {c}")
            }
        }
    }
}

impl std::error::Error for CalculusError {}

/// π(Σ a_k ⊗ b_k) = Σ a_k·d(b_k), on tensors with zero contraction.
pub fn pi_map(t: &Tensor2) -> Result<OneForm, CalculusError> {
    let contraction = t.contract();
    if !contraction.is_zero() {
        return Err(CalculusError::PiDomain(contraction));
    }
    let mut out = OneForm::zero();
    for ((m1, m2), c) in t.terms() {
        let d = differential(&Element::from_mono(*m2));
        let factor = Element::from_term(*m1, c.clone());
        for k in 0..3 {
            out.left_coeffs[k] = &out.left_coeffs[k] + &(&factor * &d.left_coeffs[k]);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Left/right coefficient conversion
// ---------------------------------------------------------------------------

/// ω_i·g = (g + shift)·ω_i with a *scalar* shift, for every generator g.
/// The shifts are read off `form_times_element` once and the scalar shape
/// is asserted — it is a theorem about this calculus, not an assumption.
struct CommutationTable {
    shift: [[Scalar; 3]; 3], // [generator][form]
}

fn commutation() -> &'static CommutationTable {
    static TABLE: OnceLock<CommutationTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut shift: [[Scalar; 3]; 3] = Default::default();
        for (gi, g) in FORM_GENS.iter().enumerate() {
            for i in 0..3 {
                let w = form_times_element(i, &Element::gen(*g));
                for (k, coeff) in w.left_coeffs.iter().enumerate() {
                    assert!(
                        k == i || coeff.is_zero(),
                        "omega_{i} * {} leaves the omega_{i} line",
                        g.name()
                    );
                }
                let diff = &w.left_coeffs[i] - &Element::gen(*g);
                shift[gi][i] = diff
                    .as_scalar()
                    .expect("generator commutator with a form is not scalar");
            }
        }
        CommutationTable { shift }
    })
}

fn gen_index(g: Gen) -> usize {
    match g {
        Gen::Alpha => 0,
        Gen::Beta => 1,
        Gen::Delta => 2,
    }
}

/// m·ω_i in right-coefficient shape, by peeling the rightmost letter with
/// g·ω_i = ω_i·g − shift·ω_i.
fn mono_times_form(m: &Monomial, i: usize) -> RightOneForm {
    match m.split_right() {
        None => {
            let mut out = RightOneForm::default();
            out.right_coeffs[i] = Element::one();
            out
        }
        Some((rest, g)) => {
            let prev = mono_times_form(&rest, i);
            let s = &commutation().shift[gen_index(g)][i];
            let ge = Element::gen(g);
            RightOneForm {
                right_coeffs: std::array::from_fn(|k| {
                    &(&prev.right_coeffs[k] * &ge) - &prev.right_coeffs[k].scale(s)
                }),
            }
        }
    }
}

/// x·ω_i in right-coefficient shape.
fn elem_times_form(x: &Element, i: usize) -> RightOneForm {
    let mut out = RightOneForm::default();
    for (m, c) in x.terms() {
        let r = mono_times_form(m, i);
        for k in 0..3 {
            out.right_coeffs[k] = &out.right_coeffs[k] + &r.right_coeffs[k].scale(c);
        }
    }
    out
}

/// Left-coefficient → right-coefficient shape.
pub fn to_right(w: &OneForm) -> RightOneForm {
    let mut out = RightOneForm::default();
    for i in 0..3 {
        let r = elem_times_form(&w.left_coeffs[i], i);
        for k in 0..3 {
            out.right_coeffs[k] = &out.right_coeffs[k] + &r.right_coeffs[k];
        }
    }
    out
}

/// Right-coefficient → left-coefficient shape.
pub fn to_left(w: &RightOneForm) -> OneForm {
    let mut out = OneForm::zero();
    for i in 0..3 {
        if w.right_coeffs[i].is_zero() {
            continue;
        }
        out = &out + &form_times_element(i, &w.right_coeffs[i]);
    }
    out
}

// ---------------------------------------------------------------------------
// Right-invariant forms
// ---------------------------------------------------------------------------

/// The right-invariant basis η_α, η_β, η_δ in resolved left-coefficient
/// shape: η_x = Σ d(x₍₁₎)·S(x₍₂₎).
#[derive(Clone, Debug)]
pub struct RightInvariantBasis {
    pub forms: [OneForm; 3],
}

pub fn eta_basis() -> RightInvariantBasis {
    let forms = std::array::from_fn(|i| {
        let mut eta = OneForm::zero();
        for ((m1, m2), c) in delta(&Element::gen(FORM_GENS[i])).terms() {
            let d1 = differential(&Element::from_mono(*m1));
            if d1.is_zero() {
                continue;
            }
            let s2 = antipode(&Element::from_mono(*m2));
            eta = &eta + &d1.times_element(&s2).scale(c);
        }
        eta
    });
    RightInvariantBasis { forms }
}

// ---------------------------------------------------------------------------
// σ and the exterior square
// ---------------------------------------------------------------------------

/// An element of Γ⊗_𝒜Γ in right-coefficient shape:
/// Σ (ω_i⊗ω_j)·`right_coeffs[i][j]` over the nine basis tensors.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiForm {
    pub right_coeffs: [[Element; 3]; 3],
}

impl BiForm {
    pub fn zero() -> Self {
        BiForm::default()
    }

    pub fn basis(i: usize, j: usize) -> Self {
        let mut b = BiForm::zero();
        b.right_coeffs[i][j] = Element::one();
        b
    }

    pub fn is_zero(&self) -> bool {
        self.right_coeffs.iter().flatten().all(Element::is_zero)
    }
}

impl std::ops::Add for &BiForm {
    type Output = BiForm;
    fn add(self, rhs: &BiForm) -> BiForm {
        BiForm {
            right_coeffs: std::array::from_fn(|i| {
                std::array::from_fn(|j| &self.right_coeffs[i][j] + &rhs.right_coeffs[i][j])
            }),
        }
    }
}

impl std::ops::Sub for &BiForm {
    type Output = BiForm;
    fn sub(self, rhs: &BiForm) -> BiForm {
        BiForm {
            right_coeffs: std::array::from_fn(|i| {
                std::array::from_fn(|j| &self.right_coeffs[i][j] - &rhs.right_coeffs[i][j])
            }),
        }
    }
}

/// Internal left-coefficient picture of Γ^⊗2: Σ coeffs[i][j]·(ω_i⊗ω_j).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
struct LeftBiTensor {
    coeffs: [[Element; 3]; 3],
}

/// σ data derived at startup: the matrix of σ on the nine basis tensors
/// (right-𝒜-linear, so scalar entries suffice — asserted), the projection
/// of each basis tensor onto the wedge basis, and the kernel/quotient
/// ranks of (I−σ).
struct SigmaData {
    matrix: [[[[Scalar; 3]; 3]; 3]; 3], // [i][j] → entries over [k][l]
    proj: [[[Scalar; 3]; 3]; 3],        // [i][j] → wedge coordinates
    eta_right: [[Element; 3]; 3],       // H with η_j = Σ_k ω_k·H[k][j]
    ker_rank: usize,
    quotient_rank: usize,
}

fn mat3_mul(a: &[[Element; 3]; 3], b: &[[Element; 3]; 3]) -> [[Element; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = Element::zero();
            for k in 0..3 {
                acc = &acc + &(&a[i][k] * &b[k][j]);
            }
            acc
        })
    })
}

fn mat3_identity() -> [[Element; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| if i == j { Element::one() } else { Element::zero() })
    })
}

/// Reduced row echelon form over ℚ(i); returns the rank.
fn rref(mat: &mut [Vec<GaussRational>]) -> usize {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !mat[r][c].is_zero()) else {
            continue;
        };
        mat.swap(rank, p);
        let inv = mat[rank][c].inv();
        for x in &mut mat[rank] {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != rank && !mat[r][c].is_zero() {
                let factor = mat[r][c].clone();
                for c2 in 0..cols {
                    let sub = &mat[rank][c2] * &factor;
                    mat[r][c2] = &mat[r][c2] - &sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn derive_sigma() -> SigmaData {
    // η basis in right coordinates: H[k][j] with η_j = Σ_k ω_k·H[k][j].
    let etas = eta_basis();
    let mut h: [[Element; 3]; 3] = Default::default();
    for (j, eta) in etas.forms.iter().enumerate() {
        let r = to_right(eta);
        for k in 0..3 {
            h[k][j] = r.right_coeffs[k].clone();
        }
    }
    // H = I + N with N nilpotent; invert by the finite Neumann series.
    let identity = mat3_identity();
    let n: [[Element; 3]; 3] =
        std::array::from_fn(|i| std::array::from_fn(|j| &h[i][j] - &identity[i][j]));
    let mut hinv = mat3_identity();
    let mut power = n.clone();
    let mut sign = true; // next term is −power
    for _ in 0..4 {
        if power.iter().flatten().all(Element::is_zero) {
            break;
        }
        for i in 0..3 {
            for j in 0..3 {
                hinv[i][j] = if sign {
                    &hinv[i][j] - &power[i][j]
                } else {
                    &hinv[i][j] + &power[i][j]
                };
            }
        }
        sign = !sign;
        power = mat3_mul(&power, &n);
    }
    assert!(
        power.iter().flatten().all(Element::is_zero),
        "eta change of basis is not unipotent"
    );
    assert_eq!(mat3_mul(&h, &hinv), mat3_identity(), "H·H⁻¹ ≠ I");

    // σ(ω_i⊗ω_j) = Σ_k (η_k⊗ω_i)·H⁻¹[k][j], with
    // η_k⊗ω_i = Σ_{l,m} (ω_l⊗ω_m)·(H[l][k]·ω_i)_m.
    let mut matrix: [[[[Scalar; 3]; 3]; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            let mut entries: [[Element; 3]; 3] = Default::default();
            for k in 0..3 {
                if hinv[k][j].is_zero() {
                    continue;
                }
                for l in 0..3 {
                    if h[l][k].is_zero() {
                        continue;
                    }
                    let rof = elem_times_form(&h[l][k], i);
                    for m in 0..3 {
                        if rof.right_coeffs[m].is_zero() {
                            continue;
                        }
                        entries[l][m] =
                            &entries[l][m] + &(&rof.right_coeffs[m] * &hinv[k][j]);
                    }
                }
            }
            for k in 0..3 {
                for l in 0..3 {
                    matrix[i][j][k][l] = entries[k][l]
                        .as_scalar()
                        .expect("sigma matrix entry is not scalar");
                }
            }
        }
    }

    // (I−σ) over the nine basis tensors, as a 9×9 constant matrix.
    let flat = |i: usize, j: usize| 3 * i + j;
    let constant = |s: &Scalar| {
        s.as_constant()
            .expect("sigma matrix entry depends on lambda")
    };
    let mut one_minus_sigma = vec![vec![GaussRational::zero(); 9]; 9];
    for d in 0..9 {
        one_minus_sigma[d][d] = GaussRational::one();
    }
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    let v = constant(&matrix[i][j][k][l]);
                    one_minus_sigma[flat(k, l)][flat(i, j)] =
                        &one_minus_sigma[flat(k, l)][flat(i, j)] - &v;
                }
            }
        }
    }
    let image_rank = {
        let mut m = one_minus_sigma.clone();
        rref(&mut m)
    };
    let ker_rank = 9 - image_rank;
    let quotient_rank = image_rank;
    assert_eq!(
        quotient_rank, 3,
        "exterior square is not free of rank 3 (got {quotient_rank})"
    );

    // Wedge coordinates: solve (I−σ)(ω_i⊗ω_j) = Σ_k x_k·(I−σ)(rep_k) —
    // equality of (I−σ)-images is exactly equality modulo ker(I−σ).
    let column = |i: usize, j: usize| -> Vec<GaussRational> {
        (0..9).map(|r| one_minus_sigma[r][flat(i, j)].clone()).collect()
    };
    let rep_cols: Vec<Vec<GaussRational>> =
        WEDGE_REPS.iter().map(|&(i, j)| column(i, j)).collect();
    let mut proj: [[[Scalar; 3]; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            let target = column(i, j);
            let mut aug: Vec<Vec<GaussRational>> = (0..9)
                .map(|r| {
                    vec![
                        rep_cols[0][r].clone(),
                        rep_cols[1][r].clone(),
                        rep_cols[2][r].clone(),
                        target[r].clone(),
                    ]
                })
                .collect();
            rref(&mut aug);
            // consistency: no pivot in the augmented column
            for row in &aug {
                let lhs_zero = row[..3].iter().all(GaussRational::is_zero);
                assert!(
                    !(lhs_zero && !row[3].is_zero()),
                    "wedge class of basis tensor ({i},{j}) is not spanned by the representatives"
                );
            }
            let mut coords = [
                GaussRational::zero(),
                GaussRational::zero(),
                GaussRational::zero(),
            ];
            for row in &aug {
                if let Some(pivot) = (0..3).find(|&c| row[c].is_one()) {
                    coords[pivot] = row[3].clone();
                }
            }
            for (k, v) in coords.into_iter().enumerate() {
                proj[i][j][k] = Scalar::from_gauss(v);
            }
        }
    }

    SigmaData {
        matrix,
        proj,
        eta_right: h,
        ker_rank,
        quotient_rank,
    }
}

fn sigma_data() -> &'static SigmaData {
    static DATA: OnceLock<SigmaData> = OnceLock::new();
    DATA.get_or_init(derive_sigma)
}

/// The braiding σ: Γ^⊗2 → Γ^⊗2, right-𝒜-linear on the basis tensors.
pub fn sigma(b: &BiForm) -> BiForm {
    let data = sigma_data();
    let mut out = BiForm::zero();
    for i in 0..3 {
        for j in 0..3 {
            let coeff = &b.right_coeffs[i][j];
            if coeff.is_zero() {
                continue;
            }
            for k in 0..3 {
                for l in 0..3 {
                    let s = &data.matrix[i][j][k][l];
                    if !s.is_zero() {
                        out.right_coeffs[k][l] = &out.right_coeffs[k][l] + &coeff.scale(s);
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Two-forms
// ---------------------------------------------------------------------------

/// An element of Γ^∧2 over the wedge basis (ω_α∧ω_β, ω_α∧ω_δ, ω_δ∧ω_β),
/// with left coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TwoForm {
    pub left_coeffs: [Element; 3],
}

impl TwoForm {
    pub fn zero() -> Self {
        TwoForm::default()
    }

    pub fn basis(k: usize) -> Self {
        let mut w = TwoForm::zero();
        w.left_coeffs[k] = Element::one();
        w
    }

    pub fn is_zero(&self) -> bool {
        self.left_coeffs.iter().all(Element::is_zero)
    }

    pub fn scale_left(&self, x: &Element) -> TwoForm {
        TwoForm {
            left_coeffs: std::array::from_fn(|i| x * &self.left_coeffs[i]),
        }
    }

    pub fn scale(&self, c: &Scalar) -> TwoForm {
        TwoForm {
            left_coeffs: std::array::from_fn(|i| self.left_coeffs[i].scale(c)),
        }
    }

    /// Right action through a tensor representative — well defined because
    /// ker(I−σ) is a sub-bimodule (σ has central scalar matrix entries).
    pub fn times_element(&self, x: &Element) -> TwoForm {
        let mut t = LeftBiTensor::default();
        for (k, &(i, j)) in WEDGE_REPS.iter().enumerate() {
            let a = &self.left_coeffs[k];
            if a.is_zero() {
                continue;
            }
            // a·(ω_i⊗ω_j)·x = Σ_l a·(ω_i·c_l)⊗ω_l with ω_j·x = Σ_l c_l·ω_l
            let inner = form_times_element(j, x);
            for l in 0..3 {
                if inner.left_coeffs[l].is_zero() {
                    continue;
                }
                let mid = form_times_element(i, &inner.left_coeffs[l]);
                for m in 0..3 {
                    if !mid.left_coeffs[m].is_zero() {
                        t.coeffs[m][l] = &t.coeffs[m][l] + &(a * &mid.left_coeffs[m]);
                    }
                }
            }
        }
        project_left_tensor(&t)
    }

    pub fn canonical_text(&self) -> String {
        module_text(&self.left_coeffs, &WEDGE_NAMES)
    }
}

impl std::ops::Add for &TwoForm {
    type Output = TwoForm;
    fn add(self, rhs: &TwoForm) -> TwoForm {
        TwoForm {
            left_coeffs: std::array::from_fn(|i| &self.left_coeffs[i] + &rhs.left_coeffs[i]),
        }
    }
}

impl std::ops::Sub for &TwoForm {
    type Output = TwoForm;
    fn sub(self, rhs: &TwoForm) -> TwoForm {
        TwoForm {
            left_coeffs: std::array::from_fn(|i| &self.left_coeffs[i] - &rhs.left_coeffs[i]),
        }
    }
}

impl fmt::Display for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

fn project_left_tensor(t: &LeftBiTensor) -> TwoForm {
    let proj = &sigma_data().proj;
    let mut out = TwoForm::zero();
    for i in 0..3 {
        for j in 0..3 {
            let a = &t.coeffs[i][j];
            if a.is_zero() {
                continue;
            }
            for k in 0..3 {
                let s = &proj[i][j][k];
                if !s.is_zero() {
                    out.left_coeffs[k] = &out.left_coeffs[k] + &a.scale(s);
                }
            }
        }
    }
    out
}

fn biform_to_left(b: &BiForm) -> LeftBiTensor {
    let mut t = LeftBiTensor::default();
    for i in 0..3 {
        for j in 0..3 {
            let coeff = &b.right_coeffs[i][j];
            if coeff.is_zero() {
                continue;
            }
            // (ω_i⊗ω_j)·b = Σ_l (ω_i·c_l)⊗ω_l with ω_j·b = Σ_l c_l·ω_l
            let inner = form_times_element(j, coeff);
            for l in 0..3 {
                if inner.left_coeffs[l].is_zero() {
                    continue;
                }
                let outer = form_times_element(i, &inner.left_coeffs[l]);
                for k in 0..3 {
                    if !outer.left_coeffs[k].is_zero() {
                        t.coeffs[k][l] = &t.coeffs[k][l] + &outer.left_coeffs[k];
                    }
                }
            }
        }
    }
    t
}

fn left_to_biform(t: &LeftBiTensor) -> BiForm {
    let mut b = BiForm::zero();
    for i in 0..3 {
        for j in 0..3 {
            let a = &t.coeffs[i][j];
            if a.is_zero() {
                continue;
            }
            // a·(ω_i⊗ω_j) = Σ_k ω_k⊗(c_k·ω_j) with a·ω_i = Σ_k ω_k·c_k
            let r1 = elem_times_form(a, i);
            for k in 0..3 {
                if r1.right_coeffs[k].is_zero() {
                    continue;
                }
                let r2 = elem_times_form(&r1.right_coeffs[k], j);
                for l in 0..3 {
                    if !r2.right_coeffs[l].is_zero() {
                        b.right_coeffs[k][l] = &b.right_coeffs[k][l] + &r2.right_coeffs[l];
                    }
                }
            }
        }
    }
    b
}

/// Image in Γ^∧2 = Γ^⊗2 / ker(I−σ), in the 3-element wedge basis.
pub fn wedge_project(b: &BiForm) -> TwoForm {
    project_left_tensor(&biform_to_left(b))
}

/// Exterior product of two 1-forms.
pub fn wedge(u: &OneForm, v: &OneForm) -> TwoForm {
    let mut t = LeftBiTensor::default();
    for i in 0..3 {
        let a = &u.left_coeffs[i];
        if a.is_zero() {
            continue;
        }
        for j in 0..3 {
            let bcoeff = &v.left_coeffs[j];
            if bcoeff.is_zero() {
                continue;
            }
            // (a·ω_i)⊗(b·ω_j) = Σ_k a·c_k·(ω_k⊗ω_j) with ω_i·b = Σ_k c_k·ω_k
            let mid = form_times_element(i, bcoeff);
            for k in 0..3 {
                if !mid.left_coeffs[k].is_zero() {
                    t.coeffs[k][j] = &t.coeffs[k][j] + &(a * &mid.left_coeffs[k]);
                }
            }
        }
    }
    project_left_tensor(&t)
}

// ---------------------------------------------------------------------------
// d on forms
// ---------------------------------------------------------------------------

/// dω_x = Σ d(S(x₍₁₎)) ∧ d(x₍₂₎), cached per basis form.
fn d_omega() -> &'static [TwoForm; 3] {
    static D: OnceLock<[TwoForm; 3]> = OnceLock::new();
    D.get_or_init(|| {
        std::array::from_fn(|i| {
            let mut out = TwoForm::zero();
            for ((m1, m2), c) in delta(&Element::gen(FORM_GENS[i])).terms() {
                let left = differential(&antipode(&Element::from_mono(*m1)));
                if left.is_zero() {
                    continue;
                }
                let right = differential(&Element::from_mono(*m2));
                if right.is_zero() {
                    continue;
                }
                out = &out + &wedge(&left, &right).scale(c);
            }
            out
        })
    })
}

/// The three Cartan–Maurer values dω_α, dω_β, dω_δ.
pub fn cartan_maurer() -> [TwoForm; 3] {
    d_omega().clone()
}

/// d(Σ a_i·ω_i) = Σ da_i ∧ ω_i + Σ a_i·dω_i.
pub fn differential_on_forms(w: &OneForm) -> TwoForm {
    let mut out = TwoForm::zero();
    for i in 0..3 {
        let a = &w.left_coeffs[i];
        if a.is_zero() {
            continue;
        }
        out = &out + &wedge(&differential(a), &OneForm::basis(i));
        out = &out + &d_omega()[i].scale_left(a);
    }
    out
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Derived-versus-printed comparison of the commutator table: the printed
/// scalar c in [x, ω_i] = c·ω_i for the nine lines, in printed order.
/// Entries are (generator index, form index, printed c).
fn printed_commutators() -> [(usize, usize, Scalar); 9] {
    [
        (0, 0, Scalar::zero()),
        (2, 0, Scalar::zero()),
        (1, 0, Scalar::i_lambda(-1)),
        (0, 2, Scalar::zero()),
        (2, 2, Scalar::zero()),
        (1, 2, Scalar::i_lambda(-1)),
        (0, 1, Scalar::zero()),
        (2, 1, Scalar::zero()),
        (1, 1, Scalar::i_lambda(2)),
    ]
}

fn commutator_form(gen_idx: usize, form_idx: usize) -> OneForm {
    let x = Element::gen(FORM_GENS[gen_idx]);
    &OneForm::basis(form_idx).scale_left(&x) - &form_times_element(form_idx, &x)
}

/// Verifies the calculus: the ω identification, the derived commutator
/// table, η basis, σ, exterior square, Cartan–Maurer values, d² = 0, both
/// Leibniz rules, left covariance, and the module-structure invariants.
pub fn verify_calculus(max_degree: u32) -> VerificationReport {
    let max_degree = max_degree.max(2);
    let mut report = VerificationReport::new("calculus", max_degree);
    let monos = pbw_monomials(max_degree);

    // ω_x = πr⁻¹(I⊗x) is the basis form attached to [x].
    {
        let mut ok = true;
        for (i, g) in FORM_GENS.iter().enumerate() {
            let t = Tensor2::of(&Element::one(), &Element::gen(*g));
            match pi_map(&r_inverse(&t)) {
                Ok(w) => ok &= w == OneForm::basis(i),
                Err(_) => ok = false,
            }
        }
        report.record("calculus.eq5.omega_identification", "Eq. (5)", ok, || {
            "pi(r_inverse(1 (x) g)) is not the basis form of [g]".to_string()
        });
    }

    // The printed d-expressions attach dβ to ω_β and dβ − α·dδ to ω_δ;
    // direct computation gives the opposite pairing.
    {
        let d_beta = differential(&Element::beta());
        let d_delta = differential(&Element::delta());
        let composite = &d_beta - &d_delta.scale_left(&Element::alpha());
        let derived_ok =
            OneForm::basis(1) == composite && OneForm::basis(2) == d_delta;
        let printed_holds =
            OneForm::basis(1) == d_beta || OneForm::basis(2) == composite;
        let witness = "computed: w_b = d(b) - a*d(d);  w_d = d(d)\n\
                       printed:  w_b = d(b);  w_d = d(b) - a*d(d)"
            .to_string();
        report.push(if derived_ok && !printed_holds {
            Check::discrepancy("calculus.eq5.printed_values", "Eq. (5)", witness)
        } else {
            Check::fail("calculus.eq5.printed_values", "Eq. (5)", witness)
        });
    }

    // Commutator table, lines 1–8 (line 9 is handled separately).
    {
        let printed = printed_commutators();
        let mut bad = None;
        for (line, (g, i, c)) in printed.iter().enumerate().take(8) {
            let got = commutator_form(*g, *i);
            if got != OneForm::basis(*i).scale(c) {
                bad = Some((line + 1, got));
                break;
            }
        }
        report.record(
            "calculus.eq6.commutators",
            "Eq. (6) lines 1-8",
            bad.is_none(),
            || {
                let (line, got) = bad.as_ref().unwrap();
                format!("line {line}: computed {got}")
            },
        );
    }

    // Line 9: computed [β, ω_β] = −2iλ·ω_β against the printed +2iλ·ω_β.
    {
        let (g, i, printed_c) = &printed_commutators()[8];
        let got = commutator_form(*g, *i);
        let derived = OneForm::basis(*i).scale(&Scalar::i_lambda(-2));
        let printed = OneForm::basis(*i).scale(printed_c);
        let witness = format!(
            "computed: [b, w_b] = {got}\nprinted:  [b, w_b] = {printed}"
        );
        report.push(if got == derived && got != printed {
            Check::discrepancy("calculus.eq6.beta_w_beta", "Eq. (6) line 9", witness)
        } else {
            Check::fail("calculus.eq6.beta_w_beta", "Eq. (6) line 9", witness)
        });
    }

    // η basis: η_α = ω_α, η_δ = ω_δ, η_β = ω_β − ω_α·δ + ω_δ·α.
    {
        let etas = eta_basis();
        let printed_eta_beta = &(&OneForm::basis(1)
            - &form_times_element(0, &Element::delta()))
            + &form_times_element(2, &Element::alpha());
        let ok = etas.forms[0] == OneForm::basis(0)
            && etas.forms[2] == OneForm::basis(2)
            && etas.forms[1] == printed_eta_beta;
        report.record("calculus.eq7.eta_basis", "Eq. (7)", ok, || {
            format!(
                "eta_a = {}\neta_b = {}\neta_d = {}",
                etas.forms[0], etas.forms[1], etas.forms[2]
            )
        });
    }

    // σ: defining property on ω_i⊗η_j, and the derived action on the basis.
    {
        let data = sigma_data();
        let mut defining_ok = true;
        for i in 0..3 {
            for j in 0..3 {
                // ω_i⊗η_j = Σ_k (ω_i⊗ω_k)·H[k][j]
                let mut lhs = BiForm::zero();
                for k in 0..3 {
                    lhs.right_coeffs[i][k] = data.eta_right[k][j].clone();
                }
                // η_j⊗ω_i = Σ_{l,m} (ω_l⊗ω_m)·(H[l][j]·ω_i)_m
                let mut rhs = BiForm::zero();
                for l in 0..3 {
                    if data.eta_right[l][j].is_zero() {
                        continue;
                    }
                    let rof = elem_times_form(&data.eta_right[l][j], i);
                    for m in 0..3 {
                        rhs.right_coeffs[l][m] =
                            &rhs.right_coeffs[l][m] + &rof.right_coeffs[m];
                    }
                }
                defining_ok &= sigma(&lhs) == rhs;
            }
        }
        let mut flip_ok = true;
        let mut invol_ok = true;
        let mut sym_ok = true;
        for i in 0..3 {
            for j in 0..3 {
                let b = BiForm::basis(i, j);
                flip_ok &= sigma(&b) == BiForm::basis(j, i);
                invol_ok &= sigma(&sigma(&b)) == b;
                let symm = &b + &BiForm::basis(j, i);
                sym_ok &= sigma(&symm) == symm;
            }
        }
        report.record(
            "calculus.eq8.sigma",
            "Eq. (8)",
            defining_ok && flip_ok && invol_ok && sym_ok,
            || {
                format!(
                    "defining {defining_ok}, flip {flip_ok}, involutive {invol_ok}, \
                     symmetric-fixed {sym_ok}"
                )
            },
        );
    }

    // Exterior square ranks: ker(I−σ) free of rank 6, quotient of rank 3.
    {
        let data = sigma_data();
        report.record(
            "calculus.eq9.wedge_rank",
            "Eq. (9)",
            data.ker_rank == 6 && data.quotient_rank == 3,
            || {
                format!(
                    "ker(I-sigma) rank {}, quotient rank {}",
                    data.ker_rank, data.quotient_rank
                )
            },
        );
    }

    // The six wedge relations.
    {
        let w = |i, j| wedge_project(&BiForm::basis(i, j));
        let neg = |t: &TwoForm| &TwoForm::zero() - t;
        let ok = w(1, 0) == neg(&w(0, 1))
            && w(1, 2) == neg(&w(2, 1))
            && w(1, 1).is_zero()
            && w(0, 0).is_zero()
            && w(2, 2).is_zero()
            && w(0, 2) == neg(&w(2, 0))
            && w(0, 1) == TwoForm::basis(0)
            && w(0, 2) == TwoForm::basis(1)
            && w(2, 1) == TwoForm::basis(2);
        report.record("calculus.eq10.wedge_relations", "Eq. (10)", ok, || {
            let mut lines = Vec::new();
            for i in 0..3 {
                for j in 0..3 {
                    lines.push(format!("w_{i} (x) w_{j} -> {}", w(i, j)));
                }
            }
            lines.join("\n")
        });
    }

    // Cartan–Maurer: dω_α = dω_δ = 0 as printed.
    {
        let dw = cartan_maurer();
        report.record(
            "calculus.eq11.cartan_maurer",
            "Eq. (11) lines 1-2",
            dw[0].is_zero() && dw[2].is_zero(),
            || format!("d(w_a) = {}, d(w_d) = {}", dw[0], dw[2]),
        );
        // Line 3: derived dω_β = −ω_α∧ω_δ against the printed −ω_δ∧ω_β.
        let derived = &TwoForm::zero() - &TwoForm::basis(1);
        let printed = &TwoForm::zero() - &TwoForm::basis(2);
        let witness = format!(
            "computed: d(w_b) = {}\nprinted:  d(w_b) = {}",
            dw[1], printed
        );
        report.push(if dw[1] == derived && dw[1] != printed {
            Check::discrepancy("calculus.eq11.w_beta", "Eq. (11) line 3", witness)
        } else {
            Check::fail("calculus.eq11.w_beta", "Eq. (11) line 3", witness)
        });
    }

    // d∘d = 0 on all monomials in range.
    {
        let bad = monos.iter().find(|m| {
            !differential_on_forms(&differential(&Element::from_mono(**m))).is_zero()
        });
        report.record("calculus.d_squared", "", bad.is_none(), || {
            let m = bad.unwrap();
            format!(
                "d(d({m})) = {}",
                differential_on_forms(&differential(&Element::from_mono(*m)))
            )
        });
    }

    // Leibniz: d(xy) = dx·y + x·dy on monomial pairs within the budget.
    {
        let mut bad = None;
        'pairs: for m1 in &monos {
            for m2 in &monos {
                if m1.degree() + m2.degree() > max_degree {
                    continue;
                }
                let (x, y) = (Element::from_mono(*m1), Element::from_mono(*m2));
                let lhs = differential(&(&x * &y));
                let rhs = &differential(&x).times_element(&y)
                    + &differential(&y).scale_left(&x);
                if lhs != rhs {
                    bad = Some((*m1, *m2));
                    break 'pairs;
                }
            }
        }
        report.record("calculus.leibniz", "", bad.is_none(), || {
            let (m1, m2) = bad.unwrap();
            format!("fails on ({m1})·({m2})")
        });
    }

    // Graded Leibniz: d(ω·y) = dω·y − ω ∧ dy.
    {
        let bound = max_degree.min(3);
        let mut bad = None;
        'graded: for i in 0..3 {
            for m in pbw_monomials(bound) {
                let y = Element::from_mono(m);
                let lhs = differential_on_forms(&form_times_element(i, &y));
                let rhs = &d_omega()[i].times_element(&y)
                    - &wedge(&OneForm::basis(i), &differential(&y));
                if lhs != rhs {
                    bad = Some((i, m));
                    break 'graded;
                }
            }
        }
        report.record("calculus.graded_leibniz", "", bad.is_none(), || {
            let (i, m) = bad.unwrap();
            format!("fails on {}·({m})", FORM_NAMES[i])
        });
    }

    // Left covariance: Δ applied to the coefficients of dx agrees with
    // Σ x₍₁₎ ⊗ d(x₍₂₎) slotwise.
    {
        let mut bad = None;
        'cov: for m in &monos {
            let dx = differential(&Element::from_mono(*m));
            let mut rhs: [Tensor2; 3] = Default::default();
            for ((m1, m2), c) in delta(&Element::from_mono(*m)).terms() {
                let d2 = differential(&Element::from_mono(*m2));
                for i in 0..3 {
                    for (p, s) in d2.left_coeffs[i].terms() {
                        rhs[i].add_term(*m1, *p, s * c);
                    }
                }
            }
            for i in 0..3 {
                if delta(&dx.left_coeffs[i]) != rhs[i] {
                    bad = Some(*m);
                    break 'cov;
                }
            }
        }
        report.record("calculus.covariance", "", bad.is_none(), || {
            format!("d is not a left-comodule map on {}", bad.unwrap())
        });
    }

    // Bimodule associativity on low-degree pairs.
    {
        let pairs = pbw_monomials(2);
        let mut bad = None;
        'assoc: for i in 0..3 {
            for m1 in &pairs {
                for m2 in &pairs {
                    let (x, y) = (Element::from_mono(*m1), Element::from_mono(*m2));
                    if form_times_element(i, &(&x * &y))
                        != form_times_element(i, &x).times_element(&y)
                    {
                        bad = Some((i, *m1, *m2));
                        break 'assoc;
                    }
                }
            }
        }
        report.record("calculus.bimodule_assoc", "", bad.is_none(), || {
            let (i, m1, m2) = bad.unwrap();
            format!("({}·{m1})·{m2} differs from {}·({m1}·{m2})", FORM_NAMES[i], FORM_NAMES[i])
        });
    }

    // Free-module invariant: left↔right coefficient conversion is inverse.
    {
        let bound = max_degree.min(3);
        let mut ok = true;
        for i in 0..3 {
            for m in pbw_monomials(bound) {
                let w = form_times_element(i, &Element::from_mono(m));
                ok &= to_left(&to_right(&w)) == w;
                let mut r = RightOneForm::default();
                r.right_coeffs[i] = Element::from_mono(m);
                ok &= to_right(&to_left(&r)) == r;
            }
        }
        // Γ^⊗2 version: the two coefficient pictures are inverse as well.
        for i in 0..3 {
            for j in 0..3 {
                for m in pbw_monomials(2) {
                    let mut b = BiForm::zero();
                    b.right_coeffs[i][j] = Element::from_mono(m);
                    ok &= left_to_biform(&biform_to_left(&b)) == b;
                }
            }
        }
        report.record("calculus.free_module_roundtrip", "", ok, || {
            "left/right coefficient conversion is not a bijection".to_string()
        });
    }

    report
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn differentials_of_generators() {
        assert_eq!(differential(&Element::alpha()).canonical_text(), "w_a");
        assert_eq!(differential(&Element::beta()).canonical_text(), "w_b + a*w_d");
        assert_eq!(differential(&Element::delta()).canonical_text(), "w_d");
        assert!(differential(&Element::one()).is_zero());
    }

    #[test]
    fn differential_of_products() {
        // d(αδ) = δ·ω_α + α·ω_δ
        let ad = &Element::alpha() * &Element::delta();
        assert_eq!(differential(&ad).canonical_text(), "d*w_a + a*w_d");
        // d(β²) = (2β + 2iλ)·ω_β + (2βα + 2iλα)·ω_δ
        let b2 = Element::beta().pow(2);
        assert_eq!(
            differential(&b2).canonical_text(),
            "(2*b + 2*i*l)*w_b + (2*b*a + 2*i*l*a)*w_d"
        );
        // d(βα) = β·ω_α + α·ω_β + α²·ω_δ
        let ba = Element::from_mono(Monomial::new(1, 1, 0));
        assert_eq!(
            differential(&ba).canonical_text(),
            "b*w_a + a*w_b + a^2*w_d"
        );
    }

    #[test]
    fn r_inverse_and_pi() {
        let t = Tensor2::of(&Element::one(), &Element::alpha());
        assert_eq!(r_inverse(&t).canonical_text(), "1 (x) a - a (x) 1");
        let w = pi_map(&r_inverse(&t)).unwrap();
        assert_eq!(w, OneForm::basis(0));
        // domain violation
        let bad = Tensor2::unit();
        assert!(matches!(pi_map(&bad), Err(CalculusError::PiDomain(_))));
    }

    #[test]
    fn commutation_examples() {
        assert_eq!(
            form_times_element(0, &Element::beta()).canonical_text(),
            "(b + i*l)*w_a"
        );
        assert_eq!(
            form_times_element(1, &Element::alpha()).canonical_text(),
            "a*w_b"
        );
        assert_eq!(
            form_times_element(1, &Element::beta()).canonical_text(),
            "(b + 2*i*l)*w_b"
        );
    }

    #[test]
    fn eta_beta_resolved() {
        let etas = eta_basis();
        let mut expect = OneForm::basis(1);
        expect.left_coeffs[0] = -&Element::delta();
        expect.left_coeffs[2] = Element::alpha();
        assert_eq!(etas.forms[1], expect);
    }

    #[test]
    fn sigma_is_flip_on_basis() {
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(sigma(&BiForm::basis(i, j)), BiForm::basis(j, i));
            }
        }
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_project(&BiForm::basis(0, 1)), TwoForm::basis(0));
        assert_eq!(
            wedge_project(&BiForm::basis(1, 0)),
            &TwoForm::zero() - &TwoForm::basis(0)
        );
        assert!(wedge_project(&BiForm::basis(1, 1)).is_zero());
        let u = OneForm::basis(0);
        let v = OneForm::basis(2);
        assert_eq!(wedge(&u, &v), TwoForm::basis(1));
        assert_eq!(wedge(&u, &u), TwoForm::zero());
    }

    #[test]
    fn cartan_maurer_values() {
        let dw = cartan_maurer();
        assert!(dw[0].is_zero());
        assert!(dw[2].is_zero());
        assert_eq!(dw[1].canonical_text(), "-w_a/\\w_d");
    }

    #[test]
    fn d_squared_on_samples() {
        for m in [
            Monomial::new(2, 0, 0),
            Monomial::new(1, 1, 1),
            Monomial::new(0, 2, 1),
            Monomial::new(3, 0, 0),
        ] {
            let dd = differential_on_forms(&differential(&Element::from_mono(m)));
            assert!(dd.is_zero(), "d(d({m})) = {dd}");
        }
    }

    #[test]
    fn verify_report_statuses() {
        let report = verify_calculus(3);
        assert!(report.all_pass(), "{}", report.render_text());
        for id in [
            "calculus.eq5.printed_values",
            "calculus.eq6.beta_w_beta",
            "calculus.eq11.w_beta",
        ] {
            assert_eq!(
                report.find(id).unwrap().status,
                Status::PaperDiscrepancy,
                "{id}"
            );
        }
        assert_eq!(report.count(Status::PaperDiscrepancy), 3);
    }
}
