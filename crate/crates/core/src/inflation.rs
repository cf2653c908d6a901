//! Scaling self-maps of the projected patterns.
//!
//! An integer triple (alpha, beta, gamma) of a common parity determines a
//! symmetric integer circulant acting on the lattice. Its three eigenvalues
//! scale the physical shadow, the internal shadow and the level separately,
//! so the matrix is a candidate inflation: when the internal eigenvalue also
//! carries every window into the window of the image level, multiplying the
//! pattern by the physical eigenvalue maps it into itself. Strict window
//! containments buy more: a whole neighborhood of admissible level-0 centers
//! around which the same inflation can be re-anchored.

use std::cmp::max;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::golden::{rat, Cyclo, Quad, Rational};
use crate::lattice::{projector_matrix, IntMatrix5, LatticePoint, Matrix5, ProjectorKind};
use crate::pattern::{self, BoxQuery, Membership, PatternError, PatternPatch, Shift};
use crate::window::{edge_threshold, pentagon_halfplanes, scale_for_level, scaled_pentagon_contained};

/// Radius of the sample patch every reported center is re-validated on.
pub const CENTER_REVALIDATION_RADIUS: f64 = 3.0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InflationError {
    #[error("triple ({0}, {1}, {2}) mixes parities, so its matrix is not integral")]
    NotIntegral(i64, i64, i64),
    #[error("center {0} lies at level {1}; only level-0 centers keep the level map linear")]
    CenterNotLevelZero(LatticePoint, i64),
    #[error("class {0} gives no guaranteed center neighborhood; every window containment must be strict")]
    NotStrictClass(TripleClass),
    #[error("internal scale 1 would accept every translate; the center construction degenerates")]
    DegenerateInternalScale,
    #[error("shift has a boundary hit within the probed disk (witness {0}); center guarantees do not apply")]
    SingularShift(LatticePoint),
    #[error("center {0} violates the half-plane admissibility inequality for this shift")]
    CenterNotAdmissible(LatticePoint),
    #[error("center {0} failed re-validation on a sample patch")]
    Revalidation(LatticePoint),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// How a scaling triple interacts with the lattice and the window family,
/// ordered weakest to strongest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleClass {
    /// Mixed parities: half-integer matrix entries, does not map the lattice
    /// into itself.
    NotInL,
    /// Integral, but some window escapes its host under the internal scale,
    /// so pattern membership is not preserved.
    LOnly,
    /// Preserves the pattern; at least one window containment is an exact fit.
    LTildeBoundary,
    /// Preserves the pattern with slack in every window containment.
    LTildeZero,
}

impl TripleClass {
    /// Stable name used in CLI tables and JSON.
    pub fn name(self) -> &'static str {
        match self {
            TripleClass::NotInL => "not_in_L",
            TripleClass::LOnly => "L_only",
            TripleClass::LTildeBoundary => "L_tilde_boundary",
            TripleClass::LTildeZero => "L_tilde_0",
        }
    }
}

impl fmt::Display for TripleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An integer scaling triple with its exact eigenvalue data.
///
/// `lambda` acts on physical shadows, `lambda_conj` (the Galois conjugate) on
/// internal shadows, and `lambda_par` (a rational integer for valid triples)
/// on levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflationTriple {
    alpha: i64,
    beta: i64,
    gamma: i64,
    lambda: Quad,
    lambda_conj: Quad,
    lambda_par: Quad,
    class: TripleClass,
}

impl InflationTriple {
    /// Builds and classifies the triple. Never fails; mixed parities come
    /// back as class [`TripleClass::NotInL`].
    pub fn new(alpha: i64, beta: i64, gamma: i64) -> Self {
        let lambda = Quad::new(rat(alpha, 2), rat(beta, 2));
        let lambda_conj = lambda.conj();
        let par2 = alpha as i128 + 5 * gamma as i128;
        let lambda_par = Quad::from_rational(Rational::new(BigInt::from(par2), BigInt::from(2)));
        let class = classify(alpha, beta, gamma, &lambda_conj, par2);
        InflationTriple {
            alpha,
            beta,
            gamma,
            lambda,
            lambda_conj,
            lambda_par,
            class,
        }
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    /// Physical scaling factor lambda = alpha/2 + (beta/2) sqrt5.
    pub fn lambda(&self) -> &Quad {
        &self.lambda
    }

    /// Internal scaling factor, the conjugate of lambda.
    pub fn lambda_conj(&self) -> &Quad {
        &self.lambda_conj
    }

    /// Level scaling factor (alpha + 5 gamma)/2.
    pub fn lambda_par(&self) -> &Quad {
        &self.lambda_par
    }

    pub fn class(&self) -> TripleClass {
        self.class
    }

    /// Whether the matrix is integral (all three parities agree).
    pub fn is_integral(&self) -> bool {
        self.class != TripleClass::NotInL
    }

    /// The scaling matrix as an exact circulant: diagonal (alpha+gamma)/2,
    /// offset-1 band (gamma+beta)/2, offset-2 band (gamma-beta)/2.
    pub fn matrix(&self) -> Matrix5 {
        let half = |n: i128| Quad::from_rational(Rational::new(BigInt::from(n), BigInt::from(2)));
        Matrix5::circulant(
            &half(self.alpha as i128 + self.gamma as i128),
            &half(self.gamma as i128 + self.beta as i128),
            &half(self.gamma as i128 - self.beta as i128),
        )
    }

    /// The same matrix recombined from the three spectral projectors; agrees
    /// with [`InflationTriple::matrix`] entry for entry.
    pub fn projector_sum(&self) -> Matrix5 {
        let phys = projector_matrix(ProjectorKind::Phys).scaled(&self.lambda);
        let int = projector_matrix(ProjectorKind::Int).scaled(&self.lambda_conj);
        let diag = projector_matrix(ProjectorKind::Diag).scaled(&self.lambda_par);
        phys.add(&int).add(&diag)
    }

    /// Integer form of the matrix; errors when the parities mix.
    pub fn integer_matrix(&self) -> Result<IntMatrix5, InflationError> {
        self.matrix()
            .to_integer_matrix()
            .ok_or(InflationError::NotIntegral(self.alpha, self.beta, self.gamma))
    }

    /// Level factor as a plain integer; meaningful for integral triples.
    fn level_factor(&self) -> i128 {
        (self.alpha as i128 + 5 * self.gamma as i128) / 2
    }
}

/// Window-containment classification shared by every constructor.
fn classify(alpha: i64, beta: i64, gamma: i64, lambda_conj: &Quad, par2: i128) -> TripleClass {
    if (alpha - beta) % 2 != 0 || (beta - gamma) % 2 != 0 {
        return TripleClass::NotInL;
    }
    let level_factor = par2 / 2;
    let mut strict = true;
    for m in 1..=4i128 {
        let host = (level_factor * m).rem_euclid(5) as i64;
        let Some(s_host) = scale_for_level(host) else {
            // the image level has an empty window
            return TripleClass::LOnly;
        };
        let s_m = scale_for_level(m as i64).expect("levels 1..=4");
        let ratio = (lambda_conj * &s_m)
            .checked_div(&s_host)
            .expect("window scales are nonzero");
        if !scaled_pentagon_contained(&ratio, false) {
            return TripleClass::LOnly;
        }
        strict &= scaled_pentagon_contained(&ratio, true);
    }
    if strict {
        TripleClass::LTildeZero
    } else {
        TripleClass::LTildeBoundary
    }
}

/// Closed interval of internal scales admissible for a branch, the residue of
/// the level factor mod 5. Containment is strict exactly on the interior.
pub fn interval_for_branch(n: i64) -> Option<(Quad, Quad)> {
    let tau = Quad::tau();
    let half = Quad::from_rational(rat(1, 2));
    match n.rem_euclid(5) {
        1 => Some((-&(&tau * &half), Quad::one())),
        2 => Some((-half, &tau - &Quad::one())),
        3 => Some((&Quad::one() - &tau, half)),
        4 => Some((-Quad::one(), &tau * &half)),
        _ => None,
    }
}

/// One witness triple for an admissible factor. The first component alpha is
/// pinned by the branch and gamma: alpha = 2 branch - 5 gamma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaWitness {
    pub branch: i64,
    pub beta: i64,
    pub gamma: i64,
    pub class: TripleClass,
}

impl LambdaWitness {
    pub fn triple(&self) -> InflationTriple {
        InflationTriple::new(2 * self.branch - 5 * self.gamma, self.beta, self.gamma)
    }
}

/// An inflation factor with every witness found for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflationFactor {
    pub lambda: Quad,
    pub witnesses: Vec<LambdaWitness>,
    /// Strongest class among the witnesses.
    pub class: TripleClass,
}

fn floor_i64(x: &Quad) -> i64 {
    x.floor_int().to_i64().expect("enumeration bound fits in i64")
}

fn ceil_i64(x: &Quad) -> i64 {
    -floor_i64(&-x)
}

/// Every inflation factor with |lambda| <= bound, ascending, each with its
/// witnesses (branch, beta, gamma) and class.
///
/// The scan is finite because the internal factor of an admissible lambda is
/// confined to [-tau, tau]: |beta| sqrt5 = |lambda - conj| <= bound + 1 bounds
/// beta, and per branch alpha = 2 branch - 5 gamma together with
/// |alpha| = |lambda + conj| <= bound + 1 bounds gamma. All comparisons are
/// exact.
pub fn enumerate_lambda(bound: &Quad) -> Vec<InflationFactor> {
    let mut hits: BTreeMap<Quad, Vec<LambdaWitness>> = BTreeMap::new();
    if !bound.sign().is_positive() {
        return Vec::new();
    }
    let reach = bound + &Quad::one();
    let five = Quad::from_integer(5);
    let beta_max = floor_i64(&(&(&reach * &Quad::sqrt5()) / &five));
    for branch in 1..=4i64 {
        let two_n = Quad::from_integer(2 * branch);
        let gamma_lo = ceil_i64(&(&(&two_n - &reach) / &five));
        let gamma_hi = floor_i64(&(&(&two_n + &reach) / &five));
        let (lo, hi) = interval_for_branch(branch).expect("branches 1..=4");
        for gamma in gamma_lo..=gamma_hi {
            let alpha = 2 * branch - 5 * gamma;
            for beta in -beta_max..=beta_max {
                if (alpha - beta) % 2 != 0 {
                    continue;
                }
                let lambda = Quad::new(rat(alpha, 2), rat(beta, 2));
                if lambda.abs() > *bound {
                    continue;
                }
                let conj = lambda.conj();
                if conj < lo || conj > hi {
                    continue;
                }
                let class = InflationTriple::new(alpha, beta, gamma).class();
                debug_assert!(class >= TripleClass::LTildeBoundary);
                hits.entry(lambda).or_default().push(LambdaWitness {
                    branch,
                    beta,
                    gamma,
                    class,
                });
            }
        }
    }
    hits.into_iter()
        .map(|(lambda, witnesses)| {
            let class = witnesses.iter().map(|w| w.class).max().expect("nonempty");
            InflationFactor {
                lambda,
                witnesses,
                class,
            }
        })
        .collect()
}

/// The inflation map x -> center + A (x - center), exactly on the lattice.
///
/// With a level-0 center the level of the image is the level of x times the
/// level factor, and the two shadow identities hold exactly: the physical
/// shadow scales by lambda around the center's shadow, the internal one by
/// its conjugate.
pub fn apply_inflation_exact(
    x: &LatticePoint,
    triple: &InflationTriple,
    center: &LatticePoint,
) -> Result<LatticePoint, InflationError> {
    let a = triple.integer_matrix()?;
    let level = center.level();
    if level != 0 {
        return Err(InflationError::CenterNotLevelZero(*center, level));
    }
    Ok(a.apply(&(*x - *center)) + *center)
}

/// One point that did not survive verification.
///
/// `membership` is the image's own classification; a `Member` entry can only
/// appear when the patch-lookup cross-check misses an in-radius image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFailure {
    pub pre: LatticePoint,
    pub image: LatticePoint,
    pub membership: Membership,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// Patch points examined.
    pub checked: usize,
    /// Images confirmed present in the patch itself (only attempted for
    /// images that land safely inside the patch radius).
    pub cross_checked: usize,
    pub failures: Vec<VerifyFailure>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Applies the inflation about `center` to every patch point and re-tests
/// membership exactly, independent of the patch's extent.
///
/// For a shifted pattern the center must first qualify: the translated window
/// images have to stay strictly inside their hosts, the same half-plane
/// inequality the center search uses. With `lookup_cross_check` set, images
/// landing safely inside the patch radius must also appear in the patch's
/// point list.
pub fn verify_patch(
    patch: &PatternPatch,
    triple: &InflationTriple,
    center: &LatticePoint,
    lookup_cross_check: bool,
) -> Result<VerifyReport, InflationError> {
    let a = triple.integer_matrix()?;
    let level = center.level();
    if level != 0 {
        return Err(InflationError::CenterNotLevelZero(*center, level));
    }
    if !patch.shift.is_zero() {
        let planes = center_planes(triple)?;
        let q = &center.embed_int() - &patch.shift.internal_vector();
        if !center_slack(&planes, &q).sign().is_positive() {
            return Err(InflationError::CenterNotAdmissible(*center));
        }
    }
    let mut report = VerifyReport {
        checked: 0,
        cross_checked: 0,
        failures: Vec::new(),
    };
    for p in &patch.points {
        let image = a.apply(&(p.pre - *center)) + *center;
        report.checked += 1;
        let membership = pattern::is_member(&patch.shift, &image);
        if membership != Membership::Member {
            report.failures.push(VerifyFailure {
                pre: p.pre,
                image,
                membership,
            });
            continue;
        }
        if lookup_cross_check {
            let (re, im) = image.phys_f64();
            if (re * re + im * im).sqrt() <= patch.radius - 1e-9 {
                let rep = image.canonicalize().expect("members have nonzero level").0;
                if patch.index_of(&rep).is_some() {
                    report.cross_checked += 1;
                } else {
                    report.failures.push(VerifyFailure {
                        pre: p.pre,
                        image,
                        membership,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// A verified inflation center.
#[derive(Debug, Clone, PartialEq)]
pub struct CenterResult {
    /// Level-0 preimage of the center.
    pub t: LatticePoint,
    /// Physical shadow of t, for display only.
    pub center_display: (f64, f64),
    /// Smallest slack left in the admissibility inequality, in exact
    /// half-plane functional units.
    pub margin_used: Quad,
}

/// Admissibility data: per source level, the strict threshold and the five
/// half-plane functionals applied to q = internal(center) - shift.
///
/// A center is admissible when each translated window image, after scaling by
/// the internal factor, clears every edge of its host: for all levels m and
/// edges j, Re(q * G_{m,j}) < T_m, where T_m is the containment slack of the
/// scaled window in its host and G_{m,j} folds the edge normal, the host
/// scale and (1 - conj) together.
struct CenterPlanes {
    rows: Vec<(Quad, Vec<Cyclo>)>,
}

fn center_planes(triple: &InflationTriple) -> Result<CenterPlanes, InflationError> {
    if triple.class() != TripleClass::LTildeZero {
        return Err(InflationError::NotStrictClass(triple.class()));
    }
    let h = edge_threshold();
    let tau = Quad::tau();
    let one_minus = &Quad::one() - triple.lambda_conj();
    let mut rows = Vec::with_capacity(4);
    for m in 1..=4i64 {
        let host = ((triple.level_factor() * m as i128).rem_euclid(5)) as i64;
        let s_host = scale_for_level(host).expect("strict class has nonempty hosts");
        let s_m = scale_for_level(m).expect("levels 1..=4");
        let rho = &(triple.lambda_conj() * &s_m) * &s_host;
        // sup of the edge functional over the closure of the scaled window
        let sup = max(&rho * &h, &(-&rho) * &tau);
        let threshold = &(&h * &(&s_host * &s_host)) - &sup;
        debug_assert!(threshold.sign().is_positive());
        let scale = &s_host * &one_minus;
        let normals = pentagon_halfplanes()
            .into_iter()
            .map(|(nu, _)| nu.conj().scale(&scale))
            .collect();
        rows.push((threshold, normals));
    }
    Ok(CenterPlanes { rows })
}

/// Worst slack of the admissibility inequality over all twenty half-planes;
/// positive exactly when the center qualifies.
fn center_slack(planes: &CenterPlanes, q: &Cyclo) -> Quad {
    let mut worst: Option<Quad> = None;
    for (threshold, normals) in &planes.rows {
        for g in normals {
            let value = (q * g).real_part().expect("symmetrized functional is real");
            let gap = threshold - &value;
            worst = Some(match worst {
                None => gap,
                Some(w) if gap < w => gap,
                Some(w) => w,
            });
        }
    }
    worst.expect("four rows of five planes")
}

/// Searches level-0 lattice points whose internal shadow lies close enough to
/// the shift that re-anchoring the inflation there still maps every window
/// strictly into its host.
///
/// Results come ordered by physical distance from the origin (exact squared
/// modulus, lexicographic tie-break) and truncated to `max_count`; each one
/// is re-validated on a sample patch of radius
/// [`CENTER_REVALIDATION_RADIUS`]. Nonzero shifts are first probed for
/// boundary hits within the search disk and refused if any turn up: a none
/// result certifies only the probed box. The zero shift is the canonical
/// symmetric case and is exempt; the strict containments cover its boundary
/// hits too.
pub fn find_centers(
    shift: &Shift,
    triple: &InflationTriple,
    search_radius: f64,
    max_count: usize,
) -> Result<Vec<CenterResult>, InflationError> {
    if !(search_radius.is_finite() && search_radius > 0.0) {
        return Err(PatternError::InvalidRadius(format!("{search_radius}")).into());
    }
    let planes = center_planes(triple)?;
    if triple.lambda_conj() == &Quad::one() {
        // unreachable through the class gate, but the construction divides
        // meaning by (1 - conj); refuse explicitly
        return Err(InflationError::DegenerateInternalScale);
    }
    if !shift.is_zero() {
        if let Some(witness) = pattern::singular_witness(shift, search_radius)? {
            return Err(InflationError::SingularShift(witness));
        }
    }
    let v = shift.internal_vector();
    let v_f = {
        let (re, im) = v.to_complex_f64();
        Complex64::new(re, im)
    };
    // circumradius of the admissible polygon, for sizing the search box only;
    // acceptance itself is decided exactly below
    let cos36 = (std::f64::consts::PI / 5.0).cos();
    let mut rho_box = f64::INFINITY;
    for (threshold, normals) in &planes.rows {
        let (gre, gim) = normals[0].to_complex_f64();
        let g_norm = (gre * gre + gim * gim).sqrt();
        rho_box = rho_box.min(threshold.to_f64() / g_norm / cos36);
    }
    let query = BoxQuery {
        levels: vec![0],
        d_radius: search_radius,
        c_center: v_f,
        c_radius: rho_box + 1e-9,
    };
    let mut found: Vec<(Quad, LatticePoint, Quad)> = Vec::new();
    pattern::enumerate_box(&query, |t| {
        let (re, im) = t.phys_f64();
        if re * re + im * im > search_radius * search_radius {
            return;
        }
        let q = &t.embed_int() - &v;
        let slack = center_slack(&planes, &q);
        if slack.sign().is_positive() {
            found.push((t.embed_phys().norm_sqr(), t, slack));
        }
    })?;
    found.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    found.truncate(max_count);

    let sample = pattern::generate(shift, CENTER_REVALIDATION_RADIUS)?;
    let mut out = Vec::with_capacity(found.len());
    for (_, t, margin_used) in found {
        let report = verify_patch(&sample, triple, &t, false)?;
        if !report.ok() {
            return Err(InflationError::Revalidation(t));
        }
        out.push(CenterResult {
            t,
            center_display: t.phys_f64(),
            margin_used,
        });
    }
    Ok(out)
}
