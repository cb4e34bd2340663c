//! Exact arithmetic in the commutative coefficient ring `ℚ(i)[λ]`.
//!
//! Every identity that the engine verifies is a polynomial identity in the
//! deformation parameter λ with Gaussian-rational coefficients, so the
//! coefficient ring is `ℚ(i)[λ]` and nothing less exact will do: a single
//! verification run at degree 6 produces λ-powers past 30 and integer
//! numerators far outside machine range.  λ is a formal central
//! indeterminate (never a float, never inverted); i is carried structurally
//! as a re/im pair, giving O(1) multiplication instead of polynomial
//! arithmetic modulo x² + 1.
//!
//! Canonical form: fractions in lowest terms with positive denominators
//! (guaranteed by `BigRational`), no stored zero coefficients.  Structural
//! equality therefore coincides with mathematical equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::fmt::join_signed_terms;

pub type Rat = BigRational;

// ---------------------------------------------------------------------------
// Gaussian rationals
// ---------------------------------------------------------------------------

/// An element of ℚ(i): `re + im·i` with arbitrary-precision rational parts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GaussRational {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRational {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        GaussRational::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        GaussRational::new(Rat::one(), Rat::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational::new(Rat::zero(), Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational::new(Rat::from_integer(BigInt::from(n)), Rat::zero())
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRational::new(re, Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// Multiplicative inverse `(re − im·i)/(re² + im²)`.
    ///
    /// Panics on zero; the only callers invert pivots that were tested for
    /// non-zeroness first (rank computations over ℚ(i)).
    pub fn inv(&self) -> Self {
        let norm = &self.re * &self.re + &self.im * &self.im;
        assert!(!norm.is_zero(), "inverse of zero Gaussian rational");
        GaussRational::new(&self.re / &norm, -&self.im / &norm)
    }

    /// Number of nonzero additive atoms (re and im·i count separately).
    fn atom_count(&self) -> usize {
        usize::from(!self.re.is_zero()) + usize::from(!self.im.is_zero())
    }
}

impl Add for &GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        // (a+bi)(c+di) = (ac − bd) + (ad + bc)i
        GaussRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational::new(-&self.re, -&self.im)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if !self.re.is_zero() {
            terms.push(self.re.to_string());
        }
        if !self.im.is_zero() {
            terms.push(rational_atom(&self.im, true, 0));
        }
        write!(f, "{}", join_signed_terms(&terms))
    }
}

/// One additive atom `q · i^{?} · λ^k` rendered in the canonical text form
/// (`q` elided when ±1 and another factor is present).
fn rational_atom(q: &Rat, imag: bool, lambda_pow: u32) -> String {
    let mut pieces: Vec<String> = Vec::new();
    let mag = q.abs();
    if !mag.is_one() || (!imag && lambda_pow == 0) {
        pieces.push(mag.to_string());
    }
    if imag {
        pieces.push("i".to_string());
    }
    match lambda_pow {
        0 => {}
        1 => pieces.push("l".to_string()),
        k => pieces.push(format!("l^{k}")),
    }
    let body = pieces.join("*");
    if q.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

/// Generalized binomial coefficient `C(s, n) = s(s−1)···(s−n+1)/n!` for a
/// rational exponent, needed to expand `(I + c·χ)^s` functional series.
pub fn binomial_coefficient(s: &Rat, n: u32) -> GaussRational {
    let mut num = Rat::one();
    let mut den = Rat::one();
    for k in 0..n {
        num *= s - Rat::from_integer(BigInt::from(k));
        den *= Rat::from_integer(BigInt::from(k + 1));
    }
    GaussRational::from_rat(num / den)
}

// ---------------------------------------------------------------------------
// Polynomials in λ over ℚ(i)
// ---------------------------------------------------------------------------

/// An element of `ℚ(i)[λ]`: sparse map λ-exponent → Gaussian-rational
/// coefficient, zero coefficients never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Scalar {
    coeffs: BTreeMap<u32, GaussRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Scalar::term(0, GaussRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::term(0, GaussRational::from_int(n))
    }

    pub fn from_gauss(g: GaussRational) -> Self {
        Scalar::term(0, g)
    }

    /// The single term `g·λ^power`.
    pub fn term(power: u32, g: GaussRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !g.is_zero() {
            coeffs.insert(power, g);
        }
        Scalar { coeffs }
    }

    pub fn i() -> Self {
        Scalar::term(0, GaussRational::i())
    }

    pub fn lambda() -> Self {
        Scalar::term(1, GaussRational::one())
    }

    /// `n·iλ` — the combination in which λ enters every structure constant.
    pub fn i_lambda(n: i64) -> Self {
        Scalar::term(0, GaussRational::from_int(n)) * &Scalar::term(1, GaussRational::i())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1
            && self
                .coeffs
                .get(&0)
                .map(GaussRational::is_one)
                .unwrap_or(false)
    }

    /// Coefficient of λ^power (zero if absent).
    pub fn coeff(&self, power: u32) -> GaussRational {
        self.coeffs.get(&power).cloned().unwrap_or_default()
    }

    /// Evaluation at λ = 0, i.e. the constant coefficient.
    pub fn at_lambda_zero(&self) -> GaussRational {
        self.coeff(0)
    }

    pub fn lambda_degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// The value as a λ-free constant, if it is one.
    pub fn as_constant(&self) -> Option<GaussRational> {
        match self.lambda_degree() {
            None => Some(GaussRational::zero()),
            Some(0) => Some(self.at_lambda_zero()),
            Some(_) => None,
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut out = Scalar::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    fn insert_add(coeffs: &mut BTreeMap<u32, GaussRational>, power: u32, g: GaussRational) {
        if g.is_zero() {
            return;
        }
        match coeffs.get_mut(&power) {
            Some(existing) => {
                let sum = &*existing + &g;
                if sum.is_zero() {
                    coeffs.remove(&power);
                } else {
                    *existing = sum;
                }
            }
            None => {
                coeffs.insert(power, g);
            }
        }
    }

    /// Number of additive atoms in the canonical text form; callers
    /// parenthesize coefficients with more than one.
    pub fn atoms(&self) -> usize {
        self.coeffs.values().map(GaussRational::atom_count).sum()
    }

    /// Canonical text, e.g. `2*i*l - 4*l^2`, ascending in λ-power.
    pub fn canonical_text(&self) -> String {
        let mut terms = Vec::new();
        for (power, g) in &self.coeffs {
            if !g.re.is_zero() {
                terms.push(rational_atom(&g.re, false, *power));
            }
            if !g.im.is_zero() {
                terms.push(rational_atom(&g.im, true, *power));
            }
        }
        join_signed_terms(&terms)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut coeffs = self.coeffs.clone();
        for (power, g) in &rhs.coeffs {
            Scalar::insert_add(&mut coeffs, *power, g.clone());
        }
        Scalar { coeffs }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut coeffs = self.coeffs.clone();
        for (power, g) in &rhs.coeffs {
            Scalar::insert_add(&mut coeffs, *power, -g);
        }
        Scalar { coeffs }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut coeffs = BTreeMap::new();
        for (p1, g1) in &self.coeffs {
            for (p2, g2) in &rhs.coeffs {
                Scalar::insert_add(&mut coeffs, p1 + p2, g1 * g2);
            }
        }
        Scalar { coeffs }
    }
}

impl Mul<&Scalar> for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        &self * rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            coeffs: self.coeffs.iter().map(|(p, g)| (*p, -g)).collect(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

/// JSON form mandated for the CLI: array of `[lambda_power, "re", "im"]`
/// triples, parts as explicit `num/den` strings, ascending powers, zero
/// entries omitted.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        fn frac(r: &Rat) -> String {
            format!("{}/{}", r.numer(), r.denom())
        }
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (power, g) in &self.coeffs {
            seq.serialize_element(&(*power, frac(&g.re), frac(&g.im)))?;
        }
        seq.end()
    }
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Scalar::i();
        assert_eq!(&i * &i, Scalar::from_int(-1));
    }

    #[test]
    fn i_lambda_products() {
        // (iλ)² = −λ²; (−2iλ)² = −4λ².
        let il = Scalar::i_lambda(1);
        assert_eq!(&il * &il, Scalar::term(2, GaussRational::from_int(-1)));
        let m2il = Scalar::i_lambda(-2);
        assert_eq!(&m2il * &m2il, Scalar::term(2, GaussRational::from_int(-4)));
    }

    #[test]
    fn cancellation() {
        let a = &Scalar::one() + &Scalar::i_lambda(1);
        let b = &Scalar::one() - &Scalar::i_lambda(1);
        assert_eq!(&a + &b, Scalar::from_int(2));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(
            binomial_coefficient(&rat(1, 2), 1),
            GaussRational::from_rat(rat(1, 2))
        );
        assert_eq!(
            binomial_coefficient(&rat(-1, 2), 2),
            GaussRational::from_rat(rat(3, 8))
        );
        assert_eq!(binomial_coefficient(&rat(7, 3), 0), GaussRational::one());
        // C(1/2, 2) = −1/8 enters the f_α series fit.
        assert_eq!(
            binomial_coefficient(&rat(1, 2), 2),
            GaussRational::from_rat(rat(-1, 8))
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::i_lambda(2).to_string(), "2*i*l");
        assert_eq!(Scalar::i_lambda(-2).to_string(), "-2*i*l");
        assert_eq!(
            Scalar::term(2, GaussRational::from_int(-4)).to_string(),
            "-4*l^2"
        );
        let mixed = &Scalar::one() + &Scalar::i_lambda(2);
        assert_eq!(mixed.to_string(), "1 + 2*i*l");
        assert_eq!(mixed.atoms(), 2);
        assert_eq!(
            Scalar::from_gauss(GaussRational::new(rat(1, 2), rat(-3, 4))).to_string(),
            "1/2 - 3/4*i"
        );
    }

    #[test]
    fn json_triples() {
        let s = &Scalar::one() + &Scalar::i_lambda(-2);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(
            v,
            serde_json::json!([[0, "1/1", "0/1"], [1, "0/1", "-2/1"]])
        );
    }

    #[test]
    fn gauss_inverse() {
        let g = GaussRational::new(rat(3, 1), rat(-4, 1));
        let product = &g * &g.inv();
        assert!(product.is_one());
    }
}
