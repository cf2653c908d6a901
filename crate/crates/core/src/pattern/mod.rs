//! Point patterns and rhombus tilings cut from the lattice.
//!
//! A lattice point belongs to the pattern for shift v when its canonical
//! representative's internal shadow falls in the open window of its level,
//! translated by v. Patch generation walks a finite candidate box derived from
//! the coordinate-reconstruction identity
//!
//!   x_k = (2/5) Re(d conj(zeta^k)) + (2/5) Re(c conj(zeta^{2k})) + n/5,
//!
//! so a disk bound on the physical shadow d and one on the internal shadow c
//! give exact integer ranges per coordinate. Floats only ever widen the box;
//! every accept/reject decision on a candidate is exact.

pub mod io;
pub mod svg;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_traits::Zero;

use crate::golden::{Cyclo, Quad, Rational};
use crate::lattice::{embed_with_step, LatticePoint};
use crate::window::{classify_halfplanes, level_halfplanes, Containment};

/// Candidate boxes beyond this many points are refused outright.
pub const MAX_BOX_CANDIDATES: u128 = 200_000_000;

/// Widening applied to every float-derived bound so rounding can only grow
/// the search region.
const BOX_EPS: f64 = 1e-6;

const TAU_F: f64 = 1.6180339887498949;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    #[error("patch radius must be positive and finite, got {0}")]
    InvalidRadius(String),
    #[error("candidate box holds about {candidates} points, above the safety bound {bound}")]
    BoxTooLarge { candidates: u128, bound: u128 },
    #[error("patch document is not valid JSON: {0}")]
    Json(String),
    #[error("patch document has format version {found}, this build reads version {expected}")]
    Version { found: u32, expected: u32 },
    #[error("patch document is malformed: {0}")]
    Malformed(String),
}

/// Three-way membership of a lattice point's projection in the pattern.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Membership {
    Member,
    Boundary,
    NonMember,
}

/// A translation of the window system: v = sum_k s_k zeta^{2k} with rational
/// coordinates s_k. The zero shift gives the maximally symmetric (singular)
/// pattern; generic shifts give defect-free ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shift {
    coords: [Rational; 5],
}

impl Shift {
    pub fn zero() -> Self {
        Shift {
            coords: std::array::from_fn(|_| Rational::zero()),
        }
    }

    pub fn new(coords: [Rational; 5]) -> Self {
        Shift { coords }
    }

    pub fn coords(&self) -> &[Rational; 5] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// The internal-plane translation vector this shift induces.
    pub fn internal_vector(&self) -> Cyclo {
        embed_with_step(&self.coords, 2)
    }
}

impl fmt::Display for Shift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.coords[0], self.coords[1], self.coords[2], self.coords[3], self.coords[4]
        )
    }
}

impl FromStr for Shift {
    type Err = PatternError;

    /// Parses five comma-separated rationals, e.g. "1/7,0,0,0,0".
    fn from_str(s: &str) -> Result<Self, PatternError> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 5 {
            return Err(PatternError::Malformed(format!(
                "shift needs 5 comma-separated rationals, got {}",
                parts.len()
            )));
        }
        let mut coords = std::array::from_fn(|_| Rational::zero());
        for (i, p) in parts.iter().enumerate() {
            coords[i] = Rational::from_str(p).map_err(|e| {
                PatternError::Malformed(format!("bad rational {p:?} in shift: {e}"))
            })?;
        }
        Ok(Shift::new(coords))
    }
}

/// The two rhombus congruence classes, named by their acute angle.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum TileKind {
    /// Acute angle 72 degrees; generators zeta^j, zeta^k with adjacent exponents.
    Thick,
    /// Acute angle 36 degrees.
    Thin,
}

impl TileKind {
    pub fn from_generators(j: usize, k: usize) -> TileKind {
        match (j as i64 - k as i64).rem_euclid(5) {
            1 | 4 => TileKind::Thick,
            2 | 3 => TileKind::Thin,
            _ => unreachable!("a rhomb needs two distinct edge directions"),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TileKind::Thick => "thick",
            TileKind::Thin => "thin",
        }
    }
}

/// One pattern vertex: the canonical lattice preimage, its level, the exact
/// physical shadow, and a display position.
#[derive(Debug, Clone, PartialEq)]
pub struct PatchPoint {
    pub pre: LatticePoint,
    pub level: i64,
    pub phys: Cyclo,
    pub pos: (f64, f64),
}

/// A rhombus face, recorded by the indices of its four corners in cyclic
/// order (base, base + e_j, base + e_j + e_k, base + e_k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub verts: [usize; 4],
    pub kind: TileKind,
    pub generators: (usize, usize),
}

/// A finite patch of the pattern: all vertices whose physical shadow has
/// modulus at most `radius`, plus derived edges and faces.
#[derive(Debug, Clone, PartialEq)]
pub struct PatternPatch {
    pub shift: Shift,
    pub radius: f64,
    pub points: Vec<PatchPoint>,
    pub edges: Vec<(usize, usize)>,
    pub faces: Vec<Face>,
    /// Whether any candidate in the searched box touched a window edge.
    pub singular: bool,
    /// Lexicographically smallest boundary-touching preimage, if any.
    pub witness: Option<LatticePoint>,
}

impl PatternPatch {
    pub fn index_of(&self, pre: &LatticePoint) -> Option<usize> {
        self.points
            .binary_search_by(|p| p.pre.cmp(pre))
            .ok()
    }
}

/// Exact three-way membership test for arbitrary lattice points.
///
/// Points whose level is divisible by 5 face an empty window and are plain
/// non-members. Otherwise the canonical representative (same shadows) is
/// classified against the open window of its level.
pub fn is_member(shift: &Shift, x: &LatticePoint) -> Membership {
    let Ok((rep, _)) = x.canonicalize() else {
        return Membership::NonMember;
    };
    let v = shift.internal_vector();
    match crate::window::window_contains(rep.level(), &rep.embed_int(), &v) {
        Containment::Inside => Membership::Member,
        Containment::Boundary => Membership::Boundary,
        Containment::Outside => Membership::NonMember,
    }
}

/// A candidate search region: levels to visit, a disk bound on the physical
/// shadow, and a disk bound on the internal shadow.
pub(crate) struct BoxQuery {
    pub levels: Vec<i64>,
    pub d_radius: f64,
    pub c_center: Complex64,
    pub c_radius: f64,
}

fn zeta_f(k: i64) -> Complex64 {
    let ang = 2.0 * std::f64::consts::PI * (k.rem_euclid(5) as f64) / 5.0;
    Complex64::new(ang.cos(), ang.sin())
}

/// Integer interval of x such that |part + x*coeff - center| can be at most
/// radius; floats only widen it.
fn coeff_interval(coeff: Complex64, part: Complex64, center: Complex64, radius: f64) -> (f64, f64) {
    let w = center - part;
    let t = (w * coeff.conj()).re / coeff.norm_sqr();
    let hw = (radius + BOX_EPS) / coeff.norm();
    (t - hw, t + hw)
}

/// Visits every lattice point that can satisfy the query's two disk bounds.
/// The visited set over-approximates; callers decide each point exactly.
pub(crate) fn enumerate_box(
    query: &BoxQuery,
    mut visit: impl FnMut(LatticePoint),
) -> Result<(), PatternError> {
    let reach = query.c_center.norm() + query.c_radius;
    // zeta^{step*k} - 1 for the elimination of x5 via the level
    let d_coeff: [Complex64; 4] = std::array::from_fn(|i| zeta_f(i as i64 + 1) - 1.0);
    let c_coeff: [Complex64; 4] = std::array::from_fn(|i| zeta_f(2 * (i as i64 + 1)) - 1.0);

    for &n in &query.levels {
        let lo_f = 0.4 * (-query.d_radius - reach) + n as f64 / 5.0 - BOX_EPS;
        let hi_f = 0.4 * (query.d_radius + reach) + n as f64 / 5.0 + BOX_EPS;
        let (lo, hi) = (lo_f.ceil() as i64, hi_f.floor() as i64);
        if lo > hi {
            continue;
        }
        let width = (hi - lo + 1) as u128;
        let x4_est = width.min(
            (2.0 * (query.c_radius + 1.0) / c_coeff[3].norm() + 2.0).ceil() as u128,
        );
        let candidates = width * width * width * x4_est;
        if candidates > MAX_BOX_CANDIDATES {
            return Err(PatternError::BoxTooLarge {
                candidates,
                bound: MAX_BOX_CANDIDATES,
            });
        }

        let base = Complex64::new(n as f64, 0.0);
        for x1 in lo..=hi {
            let d1 = base + d_coeff[0] * x1 as f64;
            let c1 = base + c_coeff[0] * x1 as f64;
            for x2 in lo..=hi {
                let d2 = d1 + d_coeff[1] * x2 as f64;
                let c2 = c1 + c_coeff[1] * x2 as f64;
                for x3 in lo..=hi {
                    let d3 = d2 + d_coeff[2] * x3 as f64;
                    let c3 = c2 + c_coeff[2] * x3 as f64;
                    let (clo, chi) = coeff_interval(
                        c_coeff[3],
                        c3,
                        query.c_center,
                        query.c_radius,
                    );
                    let (dlo, dhi) =
                        coeff_interval(d_coeff[3], d3, Complex64::zero(), query.d_radius);
                    let x4_lo = (clo.max(dlo).max(lo as f64)).ceil() as i64;
                    let x4_hi = (chi.min(dhi).min(hi as f64)).floor() as i64;
                    for x4 in x4_lo..=x4_hi {
                        let x5 = n - x1 - x2 - x3 - x4;
                        if x5 < lo || x5 > hi {
                            continue;
                        }
                        visit(LatticePoint([x1, x2, x3, x4, x5]));
                    }
                }
            }
        }
    }
    Ok(())
}

struct Scan {
    members: Vec<LatticePoint>,
    boundary: Vec<LatticePoint>,
}

/// Exact classification of every candidate whose physical shadow modulus is
/// at most `radius` (in double precision, the same norm used everywhere).
fn scan_disk(shift: &Shift, radius: f64) -> Result<Scan, PatternError> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(PatternError::InvalidRadius(format!("{radius}")));
    }
    let v = shift.internal_vector();
    let v_f = {
        let (re, im) = v.to_complex_f64();
        Complex64::new(re, im)
    };
    let planes: [Vec<(Cyclo, Quad)>; 4] =
        std::array::from_fn(|i| level_halfplanes(i as i64 + 1).expect("levels 1..=4"));

    let mut scan = Scan {
        members: Vec::new(),
        boundary: Vec::new(),
    };
    let query = BoxQuery {
        levels: vec![1, 2, 3, 4],
        d_radius: radius,
        c_center: v_f,
        // window circumradius is at most tau; widen so the closure survives
        // the float prefilter
        c_radius: TAU_F + 1e-3,
    };
    enumerate_box(&query, |x| {
        let (re, im) = x.phys_f64();
        if re * re + im * im > radius * radius {
            return;
        }
        let n = x.level();
        debug_assert!((1..=4).contains(&n));
        let z = x.embed_int() - &v;
        match classify_halfplanes(&planes[(n - 1) as usize], &z) {
            Containment::Inside => scan.members.push(x),
            Containment::Boundary => scan.boundary.push(x),
            Containment::Outside => {}
        }
    })?;
    scan.members.sort();
    scan.boundary.sort();
    Ok(scan)
}

/// Builds the patch of all pattern points with physical shadow in the closed
/// disk of the given radius. Edges and faces are left empty; see
/// [`build_edges_faces`].
pub fn generate(shift: &Shift, radius: f64) -> Result<PatternPatch, PatternError> {
    let scan = scan_disk(shift, radius)?;
    let points = scan
        .members
        .into_iter()
        .map(|pre| {
            let phys = pre.embed_phys();
            let pos = phys.to_complex_f64();
            PatchPoint {
                pre,
                level: pre.level(),
                phys,
                pos,
            }
        })
        .collect();
    Ok(PatternPatch {
        shift: shift.clone(),
        radius,
        points,
        edges: Vec::new(),
        faces: Vec::new(),
        singular: !scan.boundary.is_empty(),
        witness: scan.boundary.first().copied(),
    })
}

/// Derives unit edges and rhombus faces from the patch's point set.
///
/// An edge joins preimages differing by a basis vector; a face is a quadruple
/// {x, x+e_j, x+e_k, x+e_j+e_k} entirely inside the patch. Both lists come out
/// sorted, so equal patches give byte-equal serializations.
pub fn build_edges_faces(patch: &mut PatternPatch) {
    let index: BTreeMap<LatticePoint, usize> = patch
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.pre, i))
        .collect();

    let mut edges = Vec::new();
    let mut faces = Vec::new();
    for (i, p) in patch.points.iter().enumerate() {
        for k in 1..=5 {
            let up = p.pre + LatticePoint::basis(k);
            if let Some(&j) = index.get(&up) {
                debug_assert!(j > i, "adding a basis vector increases lex order");
                edges.push((i, j));
            }
        }
        for j in 1..=4 {
            for k in (j + 1)..=5 {
                let a = p.pre + LatticePoint::basis(j);
                let b = p.pre + LatticePoint::basis(k);
                let ab = a + LatticePoint::basis(k);
                let (Some(&ia), Some(&ib), Some(&iab)) =
                    (index.get(&a), index.get(&b), index.get(&ab))
                else {
                    continue;
                };
                faces.push(Face {
                    verts: [i, ia, iab, ib],
                    kind: TileKind::from_generators(j, k),
                    generators: (j, k),
                });
            }
        }
    }
    edges.sort_unstable();
    faces.sort_by_key(|f| f.verts);
    patch.edges = edges;
    patch.faces = faces;
}

/// Finds the lexicographically smallest lattice point in the radius disk whose
/// internal shadow lands exactly on a window edge, if any.
///
/// The zero shift always has such points; generic rational shifts have none,
/// and a `None` certifies the searched box is defect-free.
pub fn singular_witness(
    shift: &Shift,
    radius: f64,
) -> Result<Option<LatticePoint>, PatternError> {
    Ok(scan_disk(shift, radius)?.boundary.first().copied())
}
