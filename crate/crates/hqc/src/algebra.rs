//! The coordinate algebra 𝒜 of the quantum Heisenberg group.
//!
//! 𝒜 is generated by α, β, δ subject to
//!
//! ```text
//!     [α, β] = iλ·α,      [δ, β] = iλ·δ,      [α, δ] = 0,
//! ```
//!
//! an iterated Ore extension, so the ordered monomials β^b α^a δ^d form a
//! PBW basis (letter order β < α < δ).  Multiplication never needs stepwise
//! rewriting: writing x = α^{a₁}δ^{d₁} one has [x, β] = (a₁+d₁)·iλ·x, hence
//! the closed form
//!
//! ```text
//!     β^{b₁}α^{a₁}δ^{d₁} · β^{b₂}α^{a₂}δ^{d₂}
//!         = Σ_{j=0}^{b₂} C(b₂,j) ((a₁+d₁)iλ)^{b₂−j} · β^{b₁+j} α^{a₁+a₂} δ^{d₁+d₂}.
//! ```
//!
//! The word-rewriting route (α·β → β·α + iλ·α and friends) is kept as an
//! independent cross-check in the test suite; both agree on every word, which
//! is exactly the diamond property of the rewriting system.
//!
//! Monomial order used everywhere (enumeration, canonical text, tensor keys):
//! by total degree, then β-count descending, then α-count descending — so
//! degree 1 lists as β, α, δ and canonical text puts dominant β-powers first.

use num_bigint::BigInt;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::fmt::{coeff_times_symbol, join_signed_terms};
use crate::scalar::{GaussRational, Rat, Scalar};

// ---------------------------------------------------------------------------
// Generators, words, monomials
// ---------------------------------------------------------------------------

/// A generator letter of 𝒜.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Gen {
    Alpha,
    Beta,
    Delta,
}

impl Gen {
    pub fn name(self) -> &'static str {
        match self {
            Gen::Alpha => "a",
            Gen::Beta => "b",
            Gen::Delta => "d",
        }
    }
}

/// A word in the free monoid on {α, β, δ} — input to normal ordering.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word(pub Vec<Gen>);

/// A PBW basis monomial β^b α^a δ^d.  The zero triple is the unit I.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub b: u32,
    pub a: u32,
    pub d: u32,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial { b: 0, a: 0, d: 0 };

    pub fn new(b: u32, a: u32, d: u32) -> Self {
        Monomial { b, a, d }
    }

    pub fn gen(g: Gen) -> Self {
        match g {
            Gen::Alpha => Monomial::new(0, 1, 0),
            Gen::Beta => Monomial::new(1, 0, 0),
            Gen::Delta => Monomial::new(0, 0, 1),
        }
    }

    pub fn degree(&self) -> u32 {
        self.b + self.a + self.d
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == 0
    }

    /// Strips the leftmost letter: β^b α^a δ^d = g · rest.
    pub fn split_left(&self) -> Option<(Gen, Monomial)> {
        if self.b > 0 {
            Some((Gen::Beta, Monomial::new(self.b - 1, self.a, self.d)))
        } else if self.a > 0 {
            Some((Gen::Alpha, Monomial::new(0, self.a - 1, self.d)))
        } else if self.d > 0 {
            Some((Gen::Delta, Monomial::new(0, 0, self.d - 1)))
        } else {
            None
        }
    }

    /// Strips the rightmost letter: β^b α^a δ^d = rest · g.
    pub fn split_right(&self) -> Option<(Monomial, Gen)> {
        if self.d > 0 {
            Some((Monomial::new(self.b, self.a, self.d - 1), Gen::Delta))
        } else if self.a > 0 {
            Some((Monomial::new(self.b, self.a - 1, self.d), Gen::Alpha))
        } else if self.b > 0 {
            Some((Monomial::new(self.b - 1, self.a, self.d), Gen::Beta))
        } else {
            None
        }
    }

    /// The letters in written order (all β's, then α's, then δ's).
    pub fn letters(&self) -> impl Iterator<Item = Gen> {
        std::iter::repeat_n(Gen::Beta, self.b as usize)
            .chain(std::iter::repeat_n(Gen::Alpha, self.a as usize))
            .chain(std::iter::repeat_n(Gen::Delta, self.d as usize))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(other.b.cmp(&self.b))
            .then(other.a.cmp(&self.a))
            .then(other.d.cmp(&self.d))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut pieces = Vec::new();
        for (count, letter) in [(self.b, "b"), (self.a, "a"), (self.d, "d")] {
            match count {
                0 => {}
                1 => pieces.push(letter.to_string()),
                k => pieces.push(format!("{letter}^{k}")),
            }
        }
        write!(f, "{}", pieces.join("*"))
    }
}

/// All PBW monomials of total degree ≤ `max_degree`, in canonical order:
/// degree 0 → `[I]`, degree 1 appends `[β, α, δ]`, and so on.
pub fn pbw_monomials(max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for b in 0..=max_degree {
        for a in 0..=max_degree - b {
            for d in 0..=max_degree - b - a {
                out.push(Monomial::new(b, a, d));
            }
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// An element of 𝒜: finite `ℚ(i)[λ]`-linear combination of PBW monomials.
/// Zero coefficients are never stored, so structural equality is equality
/// in 𝒜 (the PBW basis is faithful).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Element::from_mono(Monomial::UNIT)
    }

    pub fn gen(g: Gen) -> Self {
        Element::from_mono(Monomial::gen(g))
    }

    pub fn alpha() -> Self {
        Element::gen(Gen::Alpha)
    }

    pub fn beta() -> Self {
        Element::gen(Gen::Beta)
    }

    pub fn delta() -> Self {
        Element::gen(Gen::Delta)
    }

    pub fn from_mono(m: Monomial) -> Self {
        Element::from_term(m, Scalar::one())
    }

    pub fn from_term(m: Monomial, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn from_scalar(c: Scalar) -> Self {
        Element::from_term(Monomial::UNIT, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero();
        for (m, s) in &self.terms {
            out.add_term(*m, s * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut out = Element::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// If the element is a scalar multiple of I, that scalar.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::UNIT) {
                return Some(c.clone());
            }
        }
        None
    }

    /// Terms in display order: total degree descending, dominant β-powers
    /// first within a degree (stable against the canonical order).
    fn display_order(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(m, _)| std::cmp::Reverse(m.degree()));
        v
    }

    /// Canonical text form, e.g. `b*a + i*l*a`.
    pub fn canonical_text(&self) -> String {
        let terms: Vec<String> = self
            .display_order()
            .into_iter()
            .map(|(m, c)| term_text(m, c))
            .collect();
        join_signed_terms(&terms)
    }
}

fn term_text(m: &Monomial, c: &Scalar) -> String {
    if m.is_unit() {
        return if c.atoms() > 1 {
            format!("({})", c.canonical_text())
        } else {
            c.canonical_text()
        };
    }
    let coeff = if c.atoms() > 1 {
        format!("({})", c.canonical_text())
    } else {
        c.canonical_text()
    };
    coeff_times_symbol(&coeff, &m.to_string())
}

/// Product of two PBW monomials via the closed form in the module docs.
pub fn mono_mul(m1: &Monomial, m2: &Monomial) -> Element {
    let mut out = Element::zero();
    let passing = i64::from(m1.a + m1.d);
    let stub = Scalar::i_lambda(passing);
    for j in 0..=m2.b {
        let binom = num_integer::binomial(BigInt::from(m2.b), BigInt::from(j));
        let coeff = &Scalar::from_gauss(GaussRational::from_rat(Rat::from_integer(binom)))
            * &stub.pow(m2.b - j);
        out.add_term(
            Monomial::new(m1.b + j, m1.a + m2.a, m1.d + m2.d),
            coeff,
        );
    }
    out
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        let mut out = Element::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let c = c1 * c2;
                for (m, s) in mono_mul(m1, m2).terms() {
                    out.add_term(*m, s * &c);
                }
            }
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

/// PBW normal form of a word: the product of its letters in 𝒜.
pub fn normal_form(w: &Word) -> Element {
    let mut out = Element::one();
    for g in &w.0 {
        out = &out * &Element::gen(*g);
    }
    out
}

/// `multiply` from the module interface — alias for the `Mul` impl.
pub fn multiply(x: &Element, y: &Element) -> Element {
    x * y
}

// ---------------------------------------------------------------------------
// Tensor squares and cubes
// ---------------------------------------------------------------------------

/// An element of 𝒜⊗𝒜 as a scalar-weighted sum of monomial pairs.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tensor2 {
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

/// An element of 𝒜⊗𝒜⊗𝒜.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tensor3 {
    terms: BTreeMap<(Monomial, Monomial, Monomial), Scalar>,
}

impl Tensor2 {
    pub fn zero() -> Self {
        Tensor2 {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit() -> Self {
        Tensor2::of(&Element::one(), &Element::one())
    }

    /// x ⊗ y, expanded bilinearly.
    pub fn of(x: &Element, y: &Element) -> Self {
        let mut out = Tensor2::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                out.add_term(*m1, *m2, c1 * c2);
            }
        }
        out
    }

    pub fn add_term(&mut self, m1: Monomial, m2: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (m1, m2);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Scalar) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((m1, m2), s) in &self.terms {
            out.add_term(*m1, *m2, s * c);
        }
        out
    }

    /// Applies an algebra map (given on monomials) to one slot and
    /// re-expands.  `slot` is 0 or 1.
    pub fn map_slot(&self, slot: usize, f: impl Fn(&Monomial) -> Element) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((m1, m2), c) in &self.terms {
            let image = f(if slot == 0 { m1 } else { m2 });
            for (m, s) in image.terms() {
                let (n1, n2) = if slot == 0 { (*m, *m2) } else { (*m1, *m) };
                out.add_term(n1, n2, s * c);
            }
        }
        out
    }

    /// Multiplies both slots of every term pair: (x⊗y)(u⊗v) = xu ⊗ yv.
    pub fn tensor_multiply2(&self, rhs: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((m1, m2), c1) in &self.terms {
            for ((n1, n2), c2) in &rhs.terms {
                let c = c1 * c2;
                let left = mono_mul(m1, n1);
                let right = mono_mul(m2, n2);
                for (p1, s1) in left.terms() {
                    for (p2, s2) in right.terms() {
                        out.add_term(*p1, *p2, &(s1 * s2) * &c);
                    }
                }
            }
        }
        out
    }

    /// Multiplication map m: 𝒜⊗𝒜 → 𝒜, x⊗y ↦ xy.
    pub fn contract(&self) -> Element {
        let mut out = Element::zero();
        for ((m1, m2), c) in &self.terms {
            for (m, s) in mono_mul(m1, m2).terms() {
                out.add_term(*m, s * c);
            }
        }
        out
    }

    pub fn flip(&self) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((m1, m2), c) in &self.terms {
            out.add_term(*m2, *m1, c.clone());
        }
        out
    }

    pub fn canonical_text(&self) -> String {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|((m1, m2), _)| std::cmp::Reverse(m1.degree() + m2.degree()));
        let terms: Vec<String> = v
            .into_iter()
            .map(|((m1, m2), c)| {
                let coeff = if c.atoms() > 1 {
                    format!("({})", c.canonical_text())
                } else {
                    c.canonical_text()
                };
                coeff_times_symbol(&coeff, &format!("{m1} (x) {m2}"))
            })
            .collect();
        join_signed_terms(&terms)
    }
}

impl Add for &Tensor2 {
    type Output = Tensor2;
    fn add(self, rhs: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((m1, m2), c) in &rhs.terms {
            out.add_term(*m1, *m2, c.clone());
        }
        out
    }
}

impl Sub for &Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((m1, m2), c) in &rhs.terms {
            out.add_term(*m1, *m2, -c);
        }
        out
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

impl Tensor3 {
    pub fn zero() -> Self {
        Tensor3 {
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, m1: Monomial, m2: Monomial, m3: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (m1, m2, m3);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial, Monomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn canonical_text(&self) -> String {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|((m1, m2, m3), _)| {
            std::cmp::Reverse(m1.degree() + m2.degree() + m3.degree())
        });
        let terms: Vec<String> = v
            .into_iter()
            .map(|((m1, m2, m3), c)| {
                let coeff = if c.atoms() > 1 {
                    format!("({})", c.canonical_text())
                } else {
                    c.canonical_text()
                };
                coeff_times_symbol(&coeff, &format!("{m1} (x) {m2} (x) {m3}"))
            })
            .collect();
        join_signed_terms(&terms)
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        for ((m1, m2, m3), c) in &rhs.terms {
            out.add_term(*m1, *m2, *m3, -c);
        }
        out
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

// ---------------------------------------------------------------------------
// Classical-limit matrix oracle
// ---------------------------------------------------------------------------

/// Errors from the λ = 0 matrix oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// The matrix picture is only claimed multiplicative at λ = 0.
    NonzeroLambdaValue,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::NonzeroLambdaValue => {
                write!(f, "matrix representation is defined only at lambda = 0")
            }
        }
    }
}

impl std::error::Error for AlgebraError {}

pub type Mat3 = [[GaussRational; 3]; 3];

fn mat_identity() -> Mat3 {
    let mut m: Mat3 = Default::default();
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = GaussRational::one();
    }
    m
}

fn mat_mul(x: &Mat3, y: &Mat3) -> Mat3 {
    let mut out: Mat3 = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = GaussRational::zero();
            for (k, yr) in y.iter().enumerate() {
                acc = &acc + &(&x[i][k] * &yr[j]);
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Upper-triangular unipotent image of one generator.  With N = E₁₂ + E₂₃
/// (so N² = E₁₃, N³ = 0) the three images I+2N, I+3N², I+5N are pairwise
/// commuting polynomials in N, hence the assignment extends to an algebra
/// homomorphism of the commutative λ = 0 specialization — an independent
/// multiplicativity oracle for the structure constants.
fn gen_matrix(g: Gen) -> Mat3 {
    let mut m = mat_identity();
    match g {
        Gen::Alpha => {
            m[0][1] = GaussRational::from_int(2);
            m[1][2] = GaussRational::from_int(2);
        }
        Gen::Beta => {
            m[0][2] = GaussRational::from_int(3);
        }
        Gen::Delta => {
            m[0][1] = GaussRational::from_int(5);
            m[1][2] = GaussRational::from_int(5);
        }
    }
    m
}

/// Evaluates the element in the λ = 0 matrix picture (see `gen_matrix`).
/// Rejects any nonzero `lambda_value`: only the classical specialization is
/// claimed multiplicative.
pub fn matrix_representation(
    x: &Element,
    lambda_value: &GaussRational,
) -> Result<Mat3, AlgebraError> {
    if !lambda_value.is_zero() {
        return Err(AlgebraError::NonzeroLambdaValue);
    }
    let mut out: Mat3 = Default::default();
    for (m, c) in x.terms() {
        let c0 = c.at_lambda_zero();
        if c0.is_zero() {
            continue;
        }
        let mut mat = mat_identity();
        for g in m.letters() {
            mat = mat_mul(&mat, &gen_matrix(g));
        }
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = &out[i][j] + &(&c0 * &mat[i][j]);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[Gen]) -> Word {
        Word(letters.to_vec())
    }

    #[test]
    fn pbw_enumeration() {
        assert_eq!(pbw_monomials(0), vec![Monomial::UNIT]);
        assert_eq!(
            pbw_monomials(1),
            vec![
                Monomial::UNIT,
                Monomial::gen(Gen::Beta),
                Monomial::gen(Gen::Alpha),
                Monomial::gen(Gen::Delta),
            ]
        );
        assert_eq!(pbw_monomials(3).len(), 20);
        assert_eq!(pbw_monomials(4).len(), 35);
        assert_eq!(pbw_monomials(6).len(), 84);
    }

    #[test]
    fn defining_relations() {
        let (a, b, d) = (Element::alpha(), Element::beta(), Element::delta());
        // [α,β] = iλα
        assert_eq!(&(&a * &b) - &(&b * &a), a.scale(&Scalar::i_lambda(1)));
        // [δ,β] = iλδ
        assert_eq!(&(&d * &b) - &(&b * &d), d.scale(&Scalar::i_lambda(1)));
        // [α,δ] = 0
        assert_eq!(&a * &d, &d * &a);
    }

    #[test]
    fn normal_form_examples() {
        // α·β → βα + iλα
        let ab = normal_form(&word(&[Gen::Alpha, Gen::Beta]));
        assert_eq!(ab.canonical_text(), "b*a + i*l*a");
        // α·δ unchanged
        let ad = normal_form(&word(&[Gen::Alpha, Gen::Delta]));
        assert_eq!(ad.canonical_text(), "a*d");
        // δ·β·α → βαδ + iλαδ
        let dba = normal_form(&word(&[Gen::Delta, Gen::Beta, Gen::Alpha]));
        assert_eq!(dba.canonical_text(), "b*a*d + i*l*a*d");
        // already sorted word stays itself
        let bad = normal_form(&word(&[Gen::Beta, Gen::Alpha, Gen::Delta]));
        assert_eq!(bad, Element::from_mono(Monomial::new(1, 1, 1)));
    }

    #[test]
    fn closed_form_product() {
        // (βα)·(βδ) = β²αδ + iλ·βαδ
        let ba = Element::from_mono(Monomial::new(1, 1, 0));
        let bd = Element::from_mono(Monomial::new(1, 0, 1));
        let mut expect = Element::from_mono(Monomial::new(2, 1, 1));
        expect.add_term(Monomial::new(1, 1, 1), Scalar::i_lambda(1));
        assert_eq!(&ba * &bd, expect);
        // closed form vs letterwise fold on a deg-6 pair
        let m1 = Monomial::new(1, 2, 1);
        let m2 = Monomial::new(2, 0, 0);
        let letters: Vec<Gen> = m1.letters().chain(m2.letters()).collect();
        assert_eq!(
            mono_mul(&m1, &m2),
            normal_form(&Word(letters))
        );
    }

    #[test]
    fn associativity_on_degree_two_monomials() {
        let monos = pbw_monomials(2);
        for m1 in &monos {
            for m2 in &monos {
                for m3 in &monos {
                    let left = &mono_mul(m1, m2)
                        * &Element::from_mono(*m3);
                    let right = &Element::from_mono(*m1) * &mono_mul(m2, m3);
                    assert_eq!(left, right, "({m1})({m2})({m3})");
                }
            }
        }
    }

    #[test]
    fn tensor_multiply() {
        // (α⊗I)(I⊗δ) = α⊗δ ; (I⊗α)(δ⊗I) = δ⊗α
        let a_i = Tensor2::of(&Element::alpha(), &Element::one());
        let i_d = Tensor2::of(&Element::one(), &Element::delta());
        assert_eq!(
            a_i.tensor_multiply2(&i_d),
            Tensor2::of(&Element::alpha(), &Element::delta())
        );
        let i_a = Tensor2::of(&Element::one(), &Element::alpha());
        let d_i = Tensor2::of(&Element::delta(), &Element::one());
        assert_eq!(
            i_a.tensor_multiply2(&d_i),
            Tensor2::of(&Element::delta(), &Element::alpha())
        );
    }

    #[test]
    fn matrix_oracle() {
        let zero = GaussRational::zero();
        // multiplicative at λ=0 on a noncommuting pair
        let x = normal_form(&word(&[Gen::Alpha, Gen::Beta]));
        let xa = matrix_representation(&x, &zero).unwrap();
        let ma = matrix_representation(&Element::alpha(), &zero).unwrap();
        let mb = matrix_representation(&Element::beta(), &zero).unwrap();
        assert_eq!(xa, mat_mul(&ma, &mb));
        // commutators vanish in the image
        let comm = &(&Element::alpha() * &Element::beta())
            - &(&Element::beta() * &Element::alpha());
        let image = matrix_representation(&comm, &zero).unwrap();
        assert_eq!(image, Mat3::default());
        // nonzero λ rejected
        assert_eq!(
            matrix_representation(&Element::one(), &GaussRational::one()),
            Err(AlgebraError::NonzeroLambdaValue)
        );
    }

    #[test]
    fn canonical_text_round_shapes() {
        let mut e = Element::from_term(Monomial::new(1, 1, 0), Scalar::one());
        e.add_term(Monomial::gen(Gen::Alpha), Scalar::i_lambda(1));
        assert_eq!(e.canonical_text(), "b*a + i*l*a");
        let mut f = Element::from_term(Monomial::gen(Gen::Beta), Scalar::from_int(2));
        f.add_term(Monomial::UNIT, Scalar::i_lambda(2));
        assert_eq!(f.canonical_text(), "2*b + 2*i*l");
        let g = Element::from_term(
            Monomial::gen(Gen::Beta),
            &Scalar::one() + &Scalar::i_lambda(2),
        );
        assert_eq!(g.canonical_text(), "(1 + 2*i*l)*b");
    }
}
