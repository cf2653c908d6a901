//! Exact arithmetic in the golden field Q(sqrt5) and the cyclotomic field Q(zeta),
//! zeta = exp(2*pi*i/5).
//!
//! Every geometric predicate in this crate reduces to sign computations on these
//! two field types; floats appear only in display output and search-box sizing.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Shorthand for a small rational constant.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub const SQRT5_F64: f64 = 2.23606797749978969;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GoldenError {
    #[error("division by zero in Q(sqrt5)")]
    DivisionByZero,
    #[error("element is not in the real subfield (coefficients {0})")]
    NonRealElement(String),
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

/// An element p + q*sqrt5 of Q(sqrt5), with p, q exact rationals.
///
/// The representation is canonical because {1, sqrt5} is a basis: two elements
/// are equal iff their coefficient pairs are. Ordering is the real-number order,
/// decided exactly by `sign`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quad {
    p: Rational,
    q: Rational,
}

impl Quad {
    pub fn new(p: Rational, q: Rational) -> Self {
        Quad { p, q }
    }

    pub fn from_integer(n: i64) -> Self {
        Quad::new(rat(n, 1), Rational::zero())
    }

    pub fn from_rational(r: Rational) -> Self {
        Quad::new(r, Rational::zero())
    }

    pub fn zero() -> Self {
        Quad::from_integer(0)
    }

    pub fn one() -> Self {
        Quad::from_integer(1)
    }

    pub fn sqrt5() -> Self {
        Quad::new(Rational::zero(), Rational::one())
    }

    /// The golden ratio tau = (1 + sqrt5)/2, the larger root of x^2 = x + 1.
    pub fn tau() -> Self {
        Quad::new(rat(1, 2), rat(1, 2))
    }

    /// The algebraic conjugate tau' = (1 - sqrt5)/2 = -1/tau.
    pub fn tau_conj() -> Self {
        Quad::new(rat(1, 2), rat(-1, 2))
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// Galois conjugation sqrt5 -> -sqrt5.
    pub fn conj(&self) -> Self {
        Quad::new(self.p.clone(), -self.q.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Returns the value as a rational if the sqrt5 part vanishes.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.p.clone())
    }

    /// Returns the value as an integer if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_rational() && self.p.is_integer() {
            Some(self.p.to_integer())
        } else {
            None
        }
    }

    /// Exact sign of p + q*sqrt5 as a real number.
    ///
    /// When p and q have opposite signs the comparison reduces to p^2 vs 5q^2;
    /// equality there would force sqrt5 rational, so it cannot occur for
    /// nonzero inputs.
    pub fn sign(&self) -> Sign {
        let (p_zero, q_zero) = (self.p.is_zero(), self.q.is_zero());
        if q_zero {
            return if p_zero {
                Sign::Zero
            } else if self.p.is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            };
        }
        if p_zero {
            return if self.q.is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            };
        }
        match (self.p.is_positive(), self.q.is_positive()) {
            (true, true) => Sign::Positive,
            (false, false) => Sign::Negative,
            (true, false) => {
                // p > 0, q < 0: sign of p^2 - 5 q^2.
                match (&self.p * &self.p).cmp(&(rat(5, 1) * &self.q * &self.q)) {
                    Ordering::Greater => Sign::Positive,
                    Ordering::Less => Sign::Negative,
                    Ordering::Equal => Sign::Zero,
                }
            }
            (false, true) => match (rat(5, 1) * &self.q * &self.q).cmp(&(&self.p * &self.p)) {
                Ordering::Greater => Sign::Positive,
                Ordering::Less => Sign::Negative,
                Ordering::Equal => Sign::Zero,
            },
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse via the field norm p^2 - 5q^2.
    pub fn recip(&self) -> Result<Self, GoldenError> {
        if self.is_zero() {
            return Err(GoldenError::DivisionByZero);
        }
        let norm = &self.p * &self.p - rat(5, 1) * &self.q * &self.q;
        debug_assert!(!norm.is_zero(), "nonzero element has nonzero norm");
        Ok(Quad::new(&self.p / &norm, -&self.q / &norm))
    }

    pub fn checked_div(&self, rhs: &Quad) -> Result<Self, GoldenError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut acc = Quad::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.p.to_f64().unwrap_or(f64::NAN) + self.q.to_f64().unwrap_or(f64::NAN) * SQRT5_F64
    }

    /// Exact floor. A float seed is corrected by exact comparisons, so the
    /// result is right even when the value sits next to an integer.
    pub fn floor_int(&self) -> BigInt {
        let seed = self.to_f64().floor();
        assert!(seed.is_finite(), "floor_int needs a finite value");
        let mut n = BigInt::from(seed as i64);
        while (self - &Quad::from_rational(Rational::from(&n + 1))).sign() != Sign::Negative {
            n += 1;
        }
        while (self - &Quad::from_rational(Rational::from(n.clone()))).sign() == Sign::Negative {
            n -= 1;
        }
        n
    }

    /// Renders in the basis {1, tau}: p + q*sqrt5 = (p - q) + 2q*tau.
    pub fn fmt_tau(&self) -> String {
        let a = &self.p - &self.q;
        let b = rat(2, 1) * &self.q;
        if b.is_zero() {
            return format!("{a}");
        }
        let mag = b.abs();
        let tau_mag = if mag == Rational::one() {
            "τ".to_string()
        } else {
            format!("{mag}·τ")
        };
        if a.is_zero() {
            if b.is_negative() {
                format!("-{tau_mag}")
            } else {
                tau_mag
            }
        } else if b.is_negative() {
            format!("{a} - {tau_mag}")
        } else {
            format!("{a} + {tau_mag}")
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_tau())
    }
}

impl PartialOrd for Quad {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Quad {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl Neg for &Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad::new(-self.p.clone(), -self.q.clone())
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        -&self
    }
}

impl Add for &Quad {
    type Output = Quad;
    fn add(self, rhs: &Quad) -> Quad {
        Quad::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub for &Quad {
    type Output = Quad;
    fn sub(self, rhs: &Quad) -> Quad {
        Quad::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Mul for &Quad {
    type Output = Quad;
    fn mul(self, rhs: &Quad) -> Quad {
        // (p1 + q1 s)(p2 + q2 s) = p1 p2 + 5 q1 q2 + (p1 q2 + q1 p2) s
        Quad::new(
            &self.p * &rhs.p + rat(5, 1) * &self.q * &rhs.q,
            &self.p * &rhs.q + &self.q * &rhs.p,
        )
    }
}

impl Div for &Quad {
    type Output = Quad;
    fn div(self, rhs: &Quad) -> Quad {
        self.checked_div(rhs).expect("division by zero in Q(sqrt5)")
    }
}

macro_rules! forward_quad_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Quad {
            type Output = Quad;
            fn $method(self, rhs: Quad) -> Quad {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Quad> for Quad {
            type Output = Quad;
            fn $method(self, rhs: &Quad) -> Quad {
                (&self).$method(rhs)
            }
        }
        impl $trait<Quad> for &Quad {
            type Output = Quad;
            fn $method(self, rhs: Quad) -> Quad {
                self.$method(&rhs)
            }
        }
    };
}

forward_quad_binop!(Add, add);
forward_quad_binop!(Sub, sub);
forward_quad_binop!(Mul, mul);
forward_quad_binop!(Div, div);

/// An element of Q(zeta), zeta = exp(2*pi*i/5), in the power basis
/// {1, zeta, zeta^2, zeta^3}. Reduction uses zeta^4 = -(1 + zeta + zeta^2 + zeta^3).
///
/// The basis makes the representation canonical, so equality is coefficient-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclo {
    c: [Rational; 4],
}

impl Cyclo {
    pub fn new(c: [Rational; 4]) -> Self {
        Cyclo { c }
    }

    pub fn zero() -> Self {
        Cyclo::new([
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ])
    }

    pub fn one() -> Self {
        Cyclo::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclo::new([r, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    /// zeta^k for any integer k (period 5).
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(5) as usize;
        if k == 4 {
            let m = -Rational::one();
            return Cyclo::new([m.clone(), m.clone(), m.clone(), m]);
        }
        let mut c = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        c[k] = Rational::one();
        Cyclo::new(c)
    }

    pub fn zeta() -> Self {
        Cyclo::zeta_pow(1)
    }

    /// sqrt5 as a cyclotomic element: zeta - zeta^2 - zeta^3 + zeta^4.
    pub fn sqrt5_element() -> Self {
        Cyclo::new([rat(-1, 1), Rational::zero(), rat(-2, 1), rat(-2, 1)])
    }

    /// Embeds p + q*sqrt5 into Q(zeta).
    pub fn from_quad(x: &Quad) -> Self {
        let s = Cyclo::sqrt5_element();
        let mut c = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for i in 0..4 {
            c[i] = x.q() * &s.c[i];
        }
        c[0] += x.p();
        Cyclo::new(c)
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.c[i]
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    /// Complex conjugation zeta -> zeta^{-1}.
    pub fn conj(&self) -> Self {
        let [c0, c1, c2, c3] = &self.c;
        Cyclo::new([c0 - c1, -c1.clone(), c3 - c1, c2 - c1])
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Multiplies by a real scalar from Q(sqrt5).
    pub fn scale(&self, s: &Quad) -> Self {
        self * &Cyclo::from_quad(s)
    }

    /// Exact real part, as an element of Q(sqrt5).
    ///
    /// Computes (a + conj a)/2; the symmetrized element always lies in the real
    /// subfield {b0 + b2 (zeta^2 + zeta^3)}, whose real value is b0 - b2*tau.
    pub fn real_part(&self) -> Result<Quad, GoldenError> {
        let sym = self + &self.conj();
        if !sym.c[1].is_zero() || sym.c[2] != sym.c[3] {
            return Err(GoldenError::NonRealElement(format!("{:?}", sym.c)));
        }
        let b0 = &sym.c[0] / rat(2, 1);
        let b2 = &sym.c[2] / rat(2, 1);
        // b0 + b2 * 2*Re(zeta^2) = b0 - b2 * tau
        Ok(Quad::new(&b0 - &b2 / rat(2, 1), -&b2 / rat(2, 1)))
    }

    /// Exact squared modulus |z|^2 = z * conj(z), a real algebraic number.
    pub fn norm_sqr(&self) -> Quad {
        (self * &self.conj())
            .real_part()
            .expect("z * conj(z) is conjugation-fixed")
    }

    /// Double-precision value at zeta = exp(2*pi*i/5). Display/search use only;
    /// error stays within a few ulp per coefficient.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.c.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * (k as f64) / 5.0;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}z + {}z2 + {}z3",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo::new([
            -self.c[0].clone(),
            -self.c[1].clone(),
            -self.c[2].clone(),
            -self.c[3].clone(),
        ])
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        Cyclo::new([
            &self.c[0] + &rhs.c[0],
            &self.c[1] + &rhs.c[1],
            &self.c[2] + &rhs.c[2],
            &self.c[3] + &rhs.c[3],
        ])
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        Cyclo::new([
            &self.c[0] - &rhs.c[0],
            &self.c[1] - &rhs.c[1],
            &self.c[2] - &rhs.c[2],
            &self.c[3] - &rhs.c[3],
        ])
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        // Convolve to degree 6, fold zeta^5 = 1 and zeta^6 = zeta, then
        // eliminate zeta^4.
        let mut full = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                full[i + j] += &self.c[i] * &rhs.c[j];
            }
        }
        let wrap5 = full[5].clone();
        let wrap6 = full[6].clone();
        full[0] += wrap5;
        full[1] += wrap6;
        let quartic = full[4].clone();
        Cyclo::new([
            &full[0] - &quartic,
            &full[1] - &quartic,
            &full[2] - &quartic,
            &full[3] - &quartic,
        ])
    }
}

macro_rules! forward_cyclo_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                (&self).$method(rhs)
            }
        }
        impl $trait<Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                self.$method(&rhs)
            }
        }
    };
}

forward_cyclo_binop!(Add, add);
forward_cyclo_binop!(Sub, sub);
forward_cyclo_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p_num: i64, p_den: i64, q_num: i64, q_den: i64) -> Quad {
        Quad::new(rat(p_num, p_den), rat(q_num, q_den))
    }

    #[test]
    fn tau_satisfies_its_quadratic() {
        let tau = Quad::tau();
        assert_eq!(&tau * &tau, &tau + &Quad::one());
        assert_eq!(&tau * &Quad::tau_conj(), -Quad::one());
        assert_eq!(&tau + &Quad::tau_conj(), Quad::one());
    }

    #[test]
    fn sign_mixed_cases() {
        assert_eq!(q(2, 1, -1, 1).sign(), Sign::Negative); // 2 - sqrt5 < 0
        assert_eq!(q(9, 4, -1, 1).sign(), Sign::Positive); // 9/4 > sqrt5
        assert_eq!(q(-2, 1, 1, 1).sign(), Sign::Positive);
        assert_eq!(q(-9, 4, 1, 1).sign(), Sign::Negative);
        assert_eq!(Quad::zero().sign(), Sign::Zero);
        assert_eq!(Quad::tau().sign(), Sign::Positive);
        assert_eq!(Quad::tau_conj().sign(), Sign::Negative);
    }

    #[test]
    fn ordering_matches_value() {
        let vals = [
            -Quad::tau(),
            Quad::tau_conj(),
            Quad::zero(),
            q(1, 2, 0, 1),
            Quad::one(),
            Quad::tau(),
            Quad::sqrt5(),
        ];
        for w in vals.windows(2) {
            assert!(w[0] < w[1], "{} < {}", w[0], w[1]);
        }
    }

    #[test]
    fn division_and_errors() {
        let tau = Quad::tau();
        let inv = tau.recip().unwrap();
        assert_eq!(&tau * &inv, Quad::one());
        // 1/tau = tau - 1
        assert_eq!(inv, &tau - &Quad::one());
        assert_eq!(Quad::zero().recip(), Err(GoldenError::DivisionByZero));
        assert_eq!(
            Quad::one().checked_div(&Quad::zero()),
            Err(GoldenError::DivisionByZero)
        );
    }

    #[test]
    fn floor_is_exact_near_integers() {
        assert_eq!(Quad::tau().floor_int(), BigInt::from(1));
        assert_eq!((-Quad::tau()).floor_int(), BigInt::from(-2));
        assert_eq!(Quad::from_integer(3).floor_int(), BigInt::from(3));
        assert_eq!(q(-7, 2, 0, 1).floor_int(), BigInt::from(-4));
        // tau^2 = 2.618..., floor 2; tau^2 - tau = 1 exactly, floor 1
        let t2 = Quad::tau().pow(2);
        assert_eq!(t2.floor_int(), BigInt::from(2));
        assert_eq!((&t2 - &Quad::tau()).floor_int(), BigInt::from(1));
    }

    #[test]
    fn tau_basis_display() {
        assert_eq!(Quad::tau().fmt_tau(), "τ");
        assert_eq!((-Quad::tau()).fmt_tau(), "-τ");
        assert_eq!(Quad::from_integer(2).fmt_tau(), "2");
        assert_eq!((Quad::one() + Quad::tau()).fmt_tau(), "1 + τ");
        assert_eq!((-Quad::one() - Quad::tau()).fmt_tau(), "-1 - τ");
        assert_eq!(Quad::sqrt5().fmt_tau(), "-1 + 2·τ");
    }

    #[test]
    fn zeta_powers_cycle_and_sum_to_zero() {
        let z = Cyclo::zeta();
        assert_eq!(&z * &Cyclo::zeta_pow(4), Cyclo::one());
        assert_eq!(Cyclo::zeta_pow(7), Cyclo::zeta_pow(2));
        assert_eq!(Cyclo::zeta_pow(-1), Cyclo::zeta_pow(4));
        let sum = (0..5).fold(Cyclo::zero(), |acc, k| acc + Cyclo::zeta_pow(k));
        assert!(sum.is_zero());
    }

    #[test]
    fn sqrt5_element_squares_to_five() {
        let s = Cyclo::sqrt5_element();
        assert_eq!(&s * &s, Cyclo::from_rational(rat(5, 1)));
        // and it is the positive square root
        let (re, im) = s.to_complex_f64();
        assert!(im.abs() < 1e-12 && (re - SQRT5_F64).abs() < 1e-12);
    }

    #[test]
    fn conjugation_is_involutive_homomorphism() {
        let a = Cyclo::new([rat(1, 2), rat(-3, 1), rat(2, 5), rat(7, 3)]);
        let b = Cyclo::new([rat(0, 1), rat(1, 7), rat(-2, 1), rat(1, 1)]);
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
    }

    #[test]
    fn real_parts_of_small_powers() {
        // Re(zeta) = (tau - 1)/2, Re(zeta^2) = -tau/2
        let half = Quad::new(rat(1, 2), rat(0, 1));
        let re_z = Cyclo::zeta().real_part().unwrap();
        assert_eq!(re_z, &(&Quad::tau() - &Quad::one()) * &half);
        let re_z2 = Cyclo::zeta_pow(2).real_part().unwrap();
        assert_eq!(re_z2, -&(&Quad::tau() * &half));
        assert_eq!(Cyclo::one().real_part().unwrap(), Quad::one());
    }

    #[test]
    fn scale_by_tau_matches_reduced_form() {
        let t = Cyclo::one().scale(&Quad::tau());
        // tau = -zeta^2 - zeta^3
        assert_eq!(
            t,
            Cyclo::new([rat(0, 1), rat(0, 1), rat(-1, 1), rat(-1, 1)])
        );
        let (re, im) = t.to_complex_f64();
        assert!((re - 1.6180339887498949).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn complex_evaluation_matches_trig_oracle() {
        let a = Cyclo::new([rat(1, 3), rat(-2, 1), rat(5, 7), rat(4, 1)]);
        let (re, im) = a.to_complex_f64();
        let mut ore = 0.0;
        let mut oim = 0.0;
        for (k, c) in a.coeffs().iter().enumerate() {
            let ang = 72.0_f64.to_radians() * k as f64;
            ore += c.to_f64().unwrap() * ang.cos();
            oim += c.to_f64().unwrap() * ang.sin();
        }
        assert!((re - ore).abs() < 1e-12 && (im - oim).abs() < 1e-12);
    }

    #[test]
    fn norm_sqr_examples() {
        // |1 + zeta|^2 = 2 + 2 Re(zeta) = 1 + tau... check against tau^2 = |2cos36|^2
        let v = Cyclo::one() + Cyclo::zeta();
        assert_eq!(v.norm_sqr(), Quad::tau().pow(2));
        assert_eq!(Cyclo::zeta_pow(3).norm_sqr(), Quad::one());
    }

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_quad() -> impl Strategy<Value = Quad> {
        (small_rat(), small_rat()).prop_map(|(p, q)| Quad::new(p, q))
    }

    fn arb_cyclo() -> impl Strategy<Value = Cyclo> {
        (small_rat(), small_rat(), small_rat(), small_rat())
            .prop_map(|(a, b, c, d)| Cyclo::new([a, b, c, d]))
    }

    proptest! {
        #[test]
        fn quad_field_axioms(a in arb_quad(), b in arb_quad(), c in arb_quad()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a - &a, Quad::zero());
            if !b.is_zero() {
                prop_assert_eq!(&(&a * &b) / &b, a.clone());
            }
        }

        #[test]
        fn quad_conj_is_ring_hom(a in arb_quad(), b in arb_quad()) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
            prop_assert_eq!(a.conj().conj(), a);
        }

        #[test]
        fn quad_sign_matches_float(a in arb_quad()) {
            // Coefficients are small here, so f64 is a trustworthy oracle away
            // from zero; the exact-zero case is checked directly.
            let v = a.to_f64();
            match a.sign() {
                Sign::Zero => prop_assert!(a.p().is_zero() && a.q().is_zero()),
                Sign::Positive => prop_assert!(v > -1e-9),
                Sign::Negative => prop_assert!(v < 1e-9),
            }
        }

        #[test]
        fn cyclo_ring_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn cyclo_mul_matches_complex(a in arb_cyclo(), b in arb_cyclo()) {
            let (ar, ai) = a.to_complex_f64();
            let (br, bi) = b.to_complex_f64();
            let (pr, pi) = (&a * &b).to_complex_f64();
            prop_assert!((pr - (ar * br - ai * bi)).abs() < 1e-7);
            prop_assert!((pi - (ar * bi + ai * br)).abs() < 1e-7);
        }

        #[test]
        fn real_part_is_projection(a in arb_cyclo()) {
            let re = a.real_part().unwrap();
            let (fre, _) = a.to_complex_f64();
            prop_assert!((re.to_f64() - fre).abs() < 1e-7);
            // real elements are fixed points
            let sym = &a + &a.conj();
            prop_assert!(sym.is_real());
            prop_assert_eq!(sym.real_part().unwrap(), &re + &re);
        }

        #[test]
        fn scale_commutes_with_real_embedding(a in arb_cyclo(), s in arb_quad()) {
            let scaled = a.scale(&s);
            let (r0, i0) = a.to_complex_f64();
            let (r1, i1) = scaled.to_complex_f64();
            let sf = s.to_f64();
            prop_assert!((r1 - sf * r0).abs() < 1e-6);
            prop_assert!((i1 - sf * i0).abs() < 1e-6);
        }
    }
}
