//! Acceptance windows in the internal plane.
//!
//! The level-1 window is the open regular pentagon whose vertices are the five
//! fifth roots of unity; the windows for levels 2, 3, 4 are that pentagon
//! scaled by -tau, tau, -1 respectively, and levels divisible by 5 admit
//! nothing. All containment decisions are exact sign computations in Q(sqrt5).

use crate::golden::{rat, Cyclo, Quad, Sign};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WindowError {
    #[error("margin is defined only for strict containment (scale ratio {0})")]
    NotStrictlyContained(String),
}

/// Three-way location of a point relative to an open window.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

fn halve(q: &Quad) -> Quad {
    q * &Quad::from_rational(rat(1, 2))
}

/// Scale factor carrying the level-1 pentagon onto the level-n window, or
/// `None` when the window is empty (level divisible by 5).
pub fn scale_for_level(n: i64) -> Option<Quad> {
    match n.rem_euclid(5) {
        1 => Some(Quad::one()),
        2 => Some(-Quad::tau()),
        3 => Some(Quad::tau()),
        4 => Some(-Quad::one()),
        _ => None,
    }
}

/// Edge functional threshold of the unit pentagon: h = (1 + tau)/2.
///
/// With the unnormalized outward normal nu_j = zeta^j + zeta^{j+1}, a point z
/// lies in the open pentagon iff Re(z * conj(nu_j)) < h for all j. Euclidean
/// edge distance is the functional slack divided by |nu_j| = tau.
pub fn edge_threshold() -> Quad {
    halve(&(Quad::one() + Quad::tau()))
}

/// The five half-planes cutting out the unit pentagon, as pairs of
/// (outward normal as a cyclotomic integer, threshold).
pub fn pentagon_halfplanes() -> Vec<(Cyclo, Quad)> {
    let h = edge_threshold();
    (0..5)
        .map(|j| (Cyclo::zeta_pow(j) + Cyclo::zeta_pow(j + 1), h.clone()))
        .collect()
}

/// Half-planes of the level-n window, pre-multiplied so membership needs no
/// division: z - v lies in the open window iff Re((z - v) * g_j) < t_j for
/// every pair (g_j, t_j). `None` for empty windows.
///
/// Scaling the defining inequality by the square of the (real, nonzero) window
/// scale factor keeps the direction of every comparison.
pub fn level_halfplanes(n: i64) -> Option<Vec<(Cyclo, Quad)>> {
    let s = scale_for_level(n)?;
    let threshold = &edge_threshold() * &(&s * &s);
    Some(
        pentagon_halfplanes()
            .into_iter()
            .map(|(nu, _)| (nu.conj().scale(&s), threshold.clone()))
            .collect(),
    )
}

/// Classifies a (window-relative) point against precomputed half-planes.
pub fn classify_halfplanes(halfplanes: &[(Cyclo, Quad)], z: &Cyclo) -> Containment {
    let mut on_edge = false;
    for (g, threshold) in halfplanes {
        let lhs = (z * g).real_part().expect("edge functional is real");
        match (threshold - &lhs).sign() {
            Sign::Negative => return Containment::Outside,
            Sign::Zero => on_edge = true,
            Sign::Positive => {}
        }
    }
    if on_edge {
        Containment::Boundary
    } else {
        Containment::Inside
    }
}

/// Classifies z against the level-n window translated by v.
pub fn window_contains(n: i64, z: &Cyclo, v: &Cyclo) -> Containment {
    match level_halfplanes(n) {
        None => Containment::Outside,
        Some(planes) => classify_halfplanes(&planes, &(z - v)),
    }
}

/// Value of the unit-pentagon edge functional at the vertex r * zeta^k for
/// half-plane j; depends only on (k - j) mod 5.
///
/// The functional over the vertices takes one of three exact values, with
/// maximum h = (1+tau)/2 on the two vertices spanning the edge.
pub fn vertex_functional(r: &Quad, j: i64, k: i64) -> Quad {
    let g = match (k - j).rem_euclid(5) {
        0 | 1 => edge_threshold(),
        2 | 4 => -halve(&Quad::one()),
        _ => -Quad::tau(),
    };
    r * &g
}

/// Whether the pentagon scaled by r (any sign) fits in the closed (or open,
/// when `strict`) unit pentagon.
pub fn scaled_pentagon_contained(r: &Quad, strict: bool) -> bool {
    // max over 25 (vertex, edge) pairs of the edge functional; containment
    // means that max stays below (or at) the threshold h.
    let h = edge_threshold();
    let mut worst: Option<Quad> = None;
    for j in 0..5 {
        for k in 0..5 {
            let val = vertex_functional(r, j, k);
            worst = Some(match worst {
                None => val,
                Some(w) if val > w => val,
                Some(w) => w,
            });
        }
    }
    let worst = worst.expect("25 evaluations");
    match (&h - &worst).sign() {
        Sign::Positive => true,
        Sign::Zero => !strict,
        Sign::Negative => false,
    }
}

/// Exact functional slack between the boundary of the host pentagon (scaled by
/// |host_scale|) and the pentagon scaled by r inside it; requires strict
/// containment. Euclidean clearance is the returned value divided by tau.
pub fn containment_margin(r: &Quad, host_scale_abs: &Quad) -> Result<Quad, WindowError> {
    if !scaled_pentagon_contained(r, true) {
        return Err(WindowError::NotStrictlyContained(r.to_string()));
    }
    let h = edge_threshold();
    let mut slack: Option<Quad> = None;
    for j in 0..5 {
        for k in 0..5 {
            let gap = &h - &vertex_functional(r, j, k);
            slack = Some(match slack {
                None => gap,
                Some(s) if gap < s => gap,
                Some(s) => s,
            });
        }
    }
    Ok(&slack.expect("25 evaluations") * host_scale_abs)
}
