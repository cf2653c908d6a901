//! Test-side oracles, written against the definitions rather than the crate:
//! a 50-digit decimal bracket for sqrt5 decides signs in Q(sqrt5), and a
//! from-scratch rational cyclotomic field rebuilds the acceptance pentagon
//! (vertices via Cramer, inverses via the Galois norm). Nothing here calls
//! into the crate's arithmetic except to hand results back for comparison.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use fivefold::lattice::LatticePoint;
use fivefold::pattern::Shift;
use fivefold::window::Containment;

pub fn br(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Bracket n/10^50 <= sqrt5 < (n+1)/10^50 from an integer square root.
fn sqrt5_bracket() -> &'static (BigRational, BigRational) {
    static CELL: OnceLock<(BigRational, BigRational)> = OnceLock::new();
    CELL.get_or_init(|| {
        let scale = BigInt::from(10u32).pow(50);
        let n = (BigInt::from(5) * &scale * &scale).sqrt();
        (
            BigRational::new(n.clone(), scale.clone()),
            BigRational::new(n + 1, scale),
        )
    })
}

/// A real number p + q sqrt5 with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct R5 {
    pub p: BigRational,
    pub q: BigRational,
}

impl R5 {
    pub fn new(p: BigRational, q: BigRational) -> Self {
        R5 { p, q }
    }

    pub fn from_int(n: i64) -> Self {
        R5::new(br(n, 1), BigRational::zero())
    }

    pub fn zero() -> Self {
        R5::from_int(0)
    }

    pub fn tau() -> Self {
        R5::new(br(1, 2), br(1, 2))
    }

    /// Sign decided purely by the decimal bracket: rational independence of
    /// sqrt5 means a nonzero value cannot hide inside a 10^-50 interval at
    /// the coefficient heights these tests produce.
    pub fn sign(&self) -> Ordering {
        if self.p.is_zero() && self.q.is_zero() {
            return Ordering::Equal;
        }
        let (lo5, hi5) = sqrt5_bracket();
        let (lo, hi) = if self.q.is_negative() {
            (&self.p + &self.q * hi5, &self.p + &self.q * lo5)
        } else {
            (&self.p + &self.q * lo5, &self.p + &self.q * hi5)
        };
        if lo.is_positive() {
            Ordering::Greater
        } else if hi.is_negative() {
            Ordering::Less
        } else {
            panic!("sqrt5 bracket too coarse for {:?}", self);
        }
    }

    pub fn cmp(&self, other: &R5) -> Ordering {
        (self - other).sign()
    }

    pub fn abs_le(&self, bound: &R5) -> bool {
        self.cmp(bound) != Ordering::Greater && (-self).cmp(bound) != Ordering::Greater
    }

    /// Exact reciprocal via the conjugate; p^2 = 5 q^2 has no rational
    /// solution, so the denominator only vanishes for zero itself.
    pub fn recip(&self) -> R5 {
        let den = &self.p * &self.p - br(5, 1) * &self.q * &self.q;
        assert!(!den.is_zero(), "reciprocal of zero");
        R5::new(&self.p / &den, -&self.q / &den)
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: &BigRational| {
            let n = r.numer().to_string().parse::<f64>().unwrap();
            let d = r.denom().to_string().parse::<f64>().unwrap();
            n / d
        };
        f(&self.p) + f(&self.q) * 5.0_f64.sqrt()
    }
}

impl Add for &R5 {
    type Output = R5;
    fn add(self, rhs: &R5) -> R5 {
        R5::new(&self.p + &rhs.p, &self.q + &rhs.q)
    }
}

impl Sub for &R5 {
    type Output = R5;
    fn sub(self, rhs: &R5) -> R5 {
        R5::new(&self.p - &rhs.p, &self.q - &rhs.q)
    }
}

impl Mul for &R5 {
    type Output = R5;
    fn mul(self, rhs: &R5) -> R5 {
        R5::new(
            &self.p * &rhs.p + br(5, 1) * &self.q * &rhs.q,
            &self.p * &rhs.q + &self.q * &rhs.p,
        )
    }
}

impl Neg for &R5 {
    type Output = R5;
    fn neg(self) -> R5 {
        R5::new(-&self.p, -&self.q)
    }
}

/// Element of Q(zeta), zeta = exp(2 pi i/5), kept as five coefficients of
/// 1, zeta, .., zeta^4 with the zeta^4 slot normalized away at each step
/// using 1 + zeta + .. + zeta^4 = 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F(pub [BigRational; 4]);

impl F {
    pub fn from_five(mut c: [BigRational; 5]) -> F {
        let last = std::mem::replace(&mut c[4], BigRational::zero());
        F(std::array::from_fn(|i| &c[i] - &last))
    }

    pub fn zero() -> F {
        F(std::array::from_fn(|_| BigRational::zero()))
    }

    pub fn one() -> F {
        F::from_rat(BigRational::one())
    }

    pub fn from_rat(r: BigRational) -> F {
        let mut c = F::zero();
        c.0[0] = r;
        c
    }

    pub fn zeta(k: i64) -> F {
        let mut five: [BigRational; 5] = std::array::from_fn(|_| BigRational::zero());
        five[k.rem_euclid(5) as usize] = BigRational::one();
        F::from_five(five)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, s: &BigRational) -> F {
        F(std::array::from_fn(|i| &self.0[i] * s))
    }

    /// Galois map zeta -> zeta^k for k coprime to 5; k = 4 is conjugation.
    pub fn galois(&self, k: i64) -> F {
        let mut five: [BigRational; 5] = std::array::from_fn(|_| BigRational::zero());
        for (i, c) in self.0.iter().enumerate() {
            five[(i as i64 * k).rem_euclid(5) as usize] += c;
        }
        F::from_five(five)
    }

    pub fn conj(&self) -> F {
        self.galois(4)
    }

    /// Field inverse via the product of the nontrivial Galois images: the
    /// full product is the rational norm.
    pub fn inv(&self) -> F {
        let cof = &(&self.galois(2) * &self.galois(3)) * &self.galois(4);
        let norm = self * &cof;
        assert!(
            norm.0[1].is_zero() && norm.0[2].is_zero() && norm.0[3].is_zero(),
            "norm of {:?} is not rational",
            self
        );
        assert!(!norm.0[0].is_zero(), "inverse of zero");
        cof.scale(&norm.0[0].recip())
    }

    /// Real part as an element of Q(sqrt5), read off the cosines of the
    /// basis powers.
    pub fn re(&self) -> R5 {
        let [a0, a1, a2, a3] = &self.0;
        R5::new(
            a0 - br(1, 4) * (a1 + a2 + a3),
            br(1, 4) * (a1 - a2 - a3),
        )
    }

    pub fn from_r5(x: &R5) -> F {
        // sqrt5 = -1 - 2 zeta^2 - 2 zeta^3
        let mut c = F::zero();
        c.0[0] = &x.p - &x.q;
        c.0[2] = br(-2, 1) * &x.q;
        c.0[3] = br(-2, 1) * &x.q;
        c
    }

    pub fn to_cyclo(&self) -> fivefold::Cyclo {
        fivefold::Cyclo::new(self.0.clone())
    }

    pub fn to_complex_f64(&self) -> (f64, f64) {
        let f = |r: &BigRational| {
            let n = r.numer().to_string().parse::<f64>().unwrap();
            let d = r.denom().to_string().parse::<f64>().unwrap();
            n / d
        };
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.0.iter().enumerate() {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / 5.0;
            re += f(c) * ang.cos();
            im += f(c) * ang.sin();
        }
        (re, im)
    }
}

impl Add for &F {
    type Output = F;
    fn add(self, rhs: &F) -> F {
        F(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &F {
    type Output = F;
    fn sub(self, rhs: &F) -> F {
        F(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Mul for &F {
    type Output = F;
    fn mul(self, rhs: &F) -> F {
        let mut five: [BigRational; 5] = std::array::from_fn(|_| BigRational::zero());
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                five[(i + j) % 5] += a * b;
            }
        }
        F::from_five(five)
    }
}

impl Neg for &F {
    type Output = F;
    fn neg(self) -> F {
        F(std::array::from_fn(|i| -&self.0[i]))
    }
}

/// Outward edge direction of the acceptance pentagon: zeta^j + zeta^{j+1}.
pub fn nu(j: i64) -> F {
    &F::zeta(j) + &F::zeta(j + 1)
}

/// Edge threshold h = (1 + tau)/2 = (3 + sqrt5)/4.
pub fn threshold() -> R5 {
    R5::new(br(3, 4), br(1, 4))
}

/// Edge functional Re(z conj(nu_j)), the quantity compared against h.
pub fn functional(z: &F, j: i64) -> R5 {
    (z * &nu(j).conj()).re()
}

/// The window scale per level residue: 1, -tau, tau, -1 for residues 1..4,
/// no window on residue 0.
pub fn level_scale(n: i64) -> Option<R5> {
    match n.rem_euclid(5) {
        1 => Some(R5::from_int(1)),
        2 => Some(-&R5::tau()),
        3 => Some(R5::tau()),
        4 => Some(R5::from_int(-1)),
        _ => None,
    }
}

/// Pentagon vertices solved from pairs of adjacent edge equalities by Cramer
/// in the field; each is checked to sit on exactly its two edges.
pub fn pentagon_vertices() -> [F; 5] {
    let h2 = F::from_r5(&(&threshold() + &threshold()));
    std::array::from_fn(|k| {
        let na = nu(k as i64);
        let nb = nu(k as i64 + 1);
        let det = &(&na.conj() * &nb) - &(&na * &nb.conj());
        let v = &(&h2 * &(&nb - &na)) * &det.inv();
        assert_eq!(v.conj(), &(&h2 * &(&na.conj() - &nb.conj())) * &det.inv());
        for j in 0..5 {
            let expect = if (j - k as i64).rem_euclid(5) <= 1 {
                Ordering::Equal
            } else {
                Ordering::Less
            };
            assert_eq!(functional(&v, j).cmp(&threshold()), expect);
        }
        v
    })
}

/// Window membership decided entirely in the test field: divide out the
/// level scale and compare the five edge functionals with h.
pub fn window_class(level: i64, z: &F, anchor: &F) -> Containment {
    let Some(scale) = level_scale(level) else {
        return Containment::Outside;
    };
    let w = &(z - anchor) * &F::from_r5(&scale).inv();
    let mut on_edge = false;
    for j in 0..5 {
        match functional(&w, j).cmp(&threshold()) {
            Ordering::Greater => return Containment::Outside,
            Ordering::Equal => on_edge = true,
            Ordering::Less => {}
        }
    }
    if on_edge {
        Containment::Boundary
    } else {
        Containment::Inside
    }
}

/// Whether r . pentagon fits inside the pentagon, via the 25 vertex times
/// edge functional comparisons. `None` when some vertex lands outside,
/// otherwise `Some(strict)`.
pub fn pentagon_fits(r: &R5, vertices: &[F; 5]) -> Option<bool> {
    let rf = F::from_r5(r);
    let mut strict = true;
    for v in vertices {
        let rv = &rf * v;
        for j in 0..5 {
            match functional(&rv, j).cmp(&threshold()) {
                Ordering::Greater => return None,
                Ordering::Equal => strict = false,
                Ordering::Less => {}
            }
        }
    }
    Some(strict)
}

/// Internal shadow sum x_k zeta^{2k}, k = 1..5, in the test field.
pub fn embed_c(x: &LatticePoint) -> F {
    let mut five: [BigRational; 5] = std::array::from_fn(|_| BigRational::zero());
    for (i, &c) in x.coords().iter().enumerate() {
        five[(2 * (i + 1)) % 5] += br(c, 1);
    }
    F::from_five(five)
}

/// Physical shadow sum x_k zeta^k, k = 1..5, in the test field.
pub fn embed_d(x: &LatticePoint) -> F {
    let mut five: [BigRational; 5] = std::array::from_fn(|_| BigRational::zero());
    for (i, &c) in x.coords().iter().enumerate() {
        five[(i + 1) % 5] += br(c, 1);
    }
    F::from_five(five)
}

/// The internal anchor of a shift, sum s_k zeta^{2k}, k = 1..5.
pub fn anchor(shift: &Shift) -> F {
    let mut five: [BigRational; 5] = std::array::from_fn(|_| BigRational::zero());
    for (i, s) in shift.coords().iter().enumerate() {
        five[(2 * (i + 1)) % 5] += s;
    }
    F::from_five(five)
}
