//! The integer lattice Z^5, its cyclic coordinate action, and the two planar
//! embeddings used throughout: a "physical" plane carrying the tiling vertices
//! and an "internal" plane carrying the acceptance windows.
//!
//! Both embeddings kill the main diagonal direction (1,1,1,1,1), so lattice
//! points are classified by their coordinate sum (the level) modulo 5 and a
//! canonical representative with level in {1, 2, 3, 4}.

use std::fmt;
use std::ops::{Add, Sub};

use crate::golden::{rat, Cyclo, Quad, Rational};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("level {0} is divisible by 5; the point projects outside every window level")]
    LevelDivisibleByFive(i64),
    #[error("level {0} is not divisible by 5; the point cannot be normalized to level 0")]
    LevelNotDivisibleByFive(i64),
}

/// A point of Z^5.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub [i64; 5]);

impl LatticePoint {
    pub fn origin() -> Self {
        LatticePoint([0; 5])
    }

    /// Standard basis vector e_k, k in 1..=5.
    pub fn basis(k: usize) -> Self {
        assert!((1..=5).contains(&k), "basis index must be 1..=5");
        let mut c = [0i64; 5];
        c[k - 1] = 1;
        LatticePoint(c)
    }

    /// The diagonal vector (1,1,1,1,1).
    pub fn ones() -> Self {
        LatticePoint([1; 5])
    }

    pub fn coords(&self) -> &[i64; 5] {
        &self.0
    }

    /// Coordinate sum; both planar embeddings are invariant under adding
    /// multiples of the diagonal, which shifts the level by 5.
    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The cyclic coordinate rotation (x1,..,x5) -> (x2,..,x5,x1), applied
    /// `times` times (negative values rotate the other way).
    pub fn cyclic_shift(&self, times: i64) -> Self {
        let t = times.rem_euclid(5) as usize;
        let mut c = [0i64; 5];
        for i in 0..5 {
            c[i] = self.0[(i + t) % 5];
        }
        LatticePoint(c)
    }

    pub fn scaled(&self, m: i64) -> Self {
        let mut c = self.0;
        for v in &mut c {
            *v *= m;
        }
        LatticePoint(c)
    }

    /// Physical-plane embedding sum_k x_k zeta^k.
    pub fn embed_phys(&self) -> Cyclo {
        embed_with_step(&self.0.map(|v| rat(v, 1)), 1)
    }

    /// Internal-plane embedding sum_k x_k zeta^{2k}.
    pub fn embed_int(&self) -> Cyclo {
        embed_with_step(&self.0.map(|v| rat(v, 1)), 2)
    }

    /// Double-precision physical position, for display and search boxes.
    pub fn phys_f64(&self) -> (f64, f64) {
        self.embed_phys().to_complex_f64()
    }

    /// The representative x + m*(1,1,1,1,1) whose level lies in {1,2,3,4},
    /// together with the multiplier m. Fails when the level is divisible by 5.
    pub fn canonicalize(&self) -> Result<(Self, i64), LatticeError> {
        let n = self.level();
        if n.rem_euclid(5) == 0 {
            return Err(LatticeError::LevelDivisibleByFive(n));
        }
        let target = {
            let r = n.rem_euclid(5);
            debug_assert!((1..=4).contains(&r));
            r
        };
        let m = (target - n) / 5;
        Ok((*self + LatticePoint::ones().scaled(m), m))
    }

    /// The representative with level exactly 0, for points whose level is a
    /// multiple of 5 (inflation centers live here).
    pub fn canonicalize_center(&self) -> Result<(Self, i64), LatticeError> {
        let n = self.level();
        if n.rem_euclid(5) != 0 {
            return Err(LatticeError::LevelNotDivisibleByFive(n));
        }
        let m = -n / 5;
        Ok((*self + LatticePoint::ones().scaled(m), m))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.0[0], self.0[1], self.0[2], self.0[3], self.0[4]
        )
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: LatticePoint) -> LatticePoint {
        let mut c = [0i64; 5];
        for i in 0..5 {
            c[i] = self.0[i] + rhs.0[i];
        }
        LatticePoint(c)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: LatticePoint) -> LatticePoint {
        let mut c = [0i64; 5];
        for i in 0..5 {
            c[i] = self.0[i] - rhs.0[i];
        }
        LatticePoint(c)
    }
}

/// sum_k x_k zeta^{step*k} for rational coordinates, k = 1..=5.
pub(crate) fn embed_with_step(coords: &[Rational; 5], step: i64) -> Cyclo {
    let mut acc = Cyclo::zero();
    for (i, x) in coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let k = (i as i64 + 1) * step;
        acc = acc + Cyclo::zeta_pow(k).scale(&Quad::from_rational(x.clone()));
    }
    acc
}

/// The three invariant planes of the cyclic action, named by what they carry.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum ProjectorKind {
    /// Plane of the tiling vertices.
    Phys,
    /// Plane of the acceptance windows.
    Int,
    /// The diagonal line measured by the level.
    Diag,
}

/// A 5x5 matrix over Q(sqrt5).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix5 {
    entries: [[Quad; 5]; 5],
}

impl Matrix5 {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Quad) -> Self {
        Matrix5 {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    pub fn zero() -> Self {
        Matrix5::from_fn(|_, _| Quad::zero())
    }

    pub fn identity() -> Self {
        Matrix5::from_fn(|i, j| {
            if i == j {
                Quad::one()
            } else {
                Quad::zero()
            }
        })
    }

    /// Symmetric circulant with value `diag` on the diagonal, `near` at offset
    /// +-1 (mod 5) and `far` at offset +-2 (mod 5).
    pub fn circulant(diag: &Quad, near: &Quad, far: &Quad) -> Self {
        Matrix5::from_fn(|i, j| {
            match (i as i64 - j as i64).rem_euclid(5) {
                0 => diag.clone(),
                1 | 4 => near.clone(),
                _ => far.clone(),
            }
        })
    }

    pub fn entry(&self, i: usize, j: usize) -> &Quad {
        &self.entries[i][j]
    }

    pub fn mul(&self, rhs: &Matrix5) -> Matrix5 {
        Matrix5::from_fn(|i, j| {
            let mut acc = Quad::zero();
            for k in 0..5 {
                acc = &acc + &(&self.entries[i][k] * &rhs.entries[k][j]);
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Matrix5) -> Matrix5 {
        Matrix5::from_fn(|i, j| &self.entries[i][j] + &rhs.entries[i][j])
    }

    pub fn scaled(&self, s: &Quad) -> Matrix5 {
        Matrix5::from_fn(|i, j| s * &self.entries[i][j])
    }

    pub fn transpose(&self) -> Matrix5 {
        Matrix5::from_fn(|i, j| self.entries[j][i].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Exact integer form, when every entry is a rational integer.
    pub fn to_integer_matrix(&self) -> Option<IntMatrix5> {
        let mut m = [[0i64; 5]; 5];
        for i in 0..5 {
            for j in 0..5 {
                let v = self.entries[i][j].to_integer()?;
                m[i][j] = i64::try_from(&v).ok()?;
            }
        }
        Some(IntMatrix5(m))
    }

    pub fn apply_int(&self, x: &LatticePoint) -> [Quad; 5] {
        std::array::from_fn(|i| {
            let mut acc = Quad::zero();
            for j in 0..5 {
                acc = &acc + &(&self.entries[i][j] * &Quad::from_integer(x.0[j]));
            }
            acc
        })
    }
}

/// A 5x5 integer matrix, acting on lattice points.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct IntMatrix5(pub [[i64; 5]; 5]);

impl IntMatrix5 {
    pub fn apply(&self, x: &LatticePoint) -> LatticePoint {
        let mut c = [0i64; 5];
        for (i, row) in self.0.iter().enumerate() {
            c[i] = row.iter().zip(x.0.iter()).map(|(a, b)| a * b).sum();
        }
        LatticePoint(c)
    }

    pub fn column_sums(&self) -> [i64; 5] {
        std::array::from_fn(|j| (0..5).map(|i| self.0[i][j]).sum())
    }
}

/// Orthogonal projector onto the chosen invariant subspace, exact over Q(sqrt5).
///
/// All three are symmetric circulants with diagonal weight 1/5 * (2, 2, 1) and
/// off-diagonal weights built from the golden ratio conjugate pair.
pub fn projector_matrix(kind: ProjectorKind) -> Matrix5 {
    let fifth = Quad::from_rational(rat(1, 5));
    let two = Quad::from_integer(2);
    let one = Quad::one();
    let tau = Quad::tau();
    let tau_c = Quad::tau_conj();
    let m = match kind {
        ProjectorKind::Phys => Matrix5::circulant(&two, &-&tau_c, &-&tau),
        ProjectorKind::Int => Matrix5::circulant(&two, &-&tau, &-&tau_c),
        ProjectorKind::Diag => Matrix5::circulant(&one, &one, &one),
    };
    m.scaled(&fifth)
}
