//! Versioned JSON serialization for patches.
//!
//! Exact data (shift rationals, lattice preimages, levels, edge and face
//! indices) round-trips identically; display positions are stored as floats
//! rounded to 12 significant digits and are never fed back into arithmetic.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Face, PatchPoint, PatternError, PatternPatch, Shift, TileKind};
use crate::golden::Rational;
use crate::lattice::LatticePoint;

pub const PATCH_FORMAT: &str = "fivefold-patch";
pub const PATCH_VERSION: u32 = 1;

/// Norm of the orthogonal-projection image of one tile edge, in lattice
/// coordinates: sqrt(2/5) per unit of the physical shadow plane.
pub const PROJECTION_NORM_PER_EDGE: f64 = 0.6324555320336759;

#[derive(Debug, Serialize, Deserialize)]
struct PatchDoc {
    format: String,
    version: u32,
    shift: [String; 5],
    radius: f64,
    points: Vec<PointDoc>,
    edges: Vec<[usize; 2]>,
    faces: Vec<FaceDoc>,
    singular: bool,
    meta: MetaDoc,
}

#[derive(Debug, Serialize, Deserialize)]
struct PointDoc {
    x: [i64; 5],
    n: i64,
    pos: [f64; 2],
}

#[derive(Debug, Serialize, Deserialize)]
struct FaceDoc {
    verts: [usize; 4],
    kind: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct MetaDoc {
    generator: String,
    /// Points are sorted by lexicographic canonical preimage.
    ordering: String,
    projection_norm_per_edge: f64,
    singular_witness: Option<[i64; 5]>,
}

/// Rounds to 12 significant digits; positions are display data only.
fn round_sig(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().expect("scientific round-trip")
}

pub fn write_patch(patch: &PatternPatch) -> String {
    let doc = PatchDoc {
        format: PATCH_FORMAT.to_string(),
        version: PATCH_VERSION,
        shift: std::array::from_fn(|i| patch.shift.coords()[i].to_string()),
        radius: patch.radius,
        points: patch
            .points
            .iter()
            .map(|p| PointDoc {
                x: *p.pre.coords(),
                n: p.level,
                pos: [round_sig(p.pos.0), round_sig(p.pos.1)],
            })
            .collect(),
        edges: patch.edges.iter().map(|&(i, j)| [i, j]).collect(),
        faces: patch
            .faces
            .iter()
            .map(|f| FaceDoc {
                verts: f.verts,
                kind: f.kind.name().to_string(),
            })
            .collect(),
        singular: patch.singular,
        meta: MetaDoc {
            generator: format!("fivefold {}", env!("CARGO_PKG_VERSION")),
            ordering: "lex-canonical-preimage".to_string(),
            projection_norm_per_edge: PROJECTION_NORM_PER_EDGE,
            singular_witness: patch.witness.map(|w| *w.coords()),
        },
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

fn basis_index(diff: LatticePoint) -> Option<usize> {
    let mut found = None;
    for (i, &c) in diff.coords().iter().enumerate() {
        match c {
            0 => {}
            1 if found.is_none() => found = Some(i + 1),
            _ => return None,
        }
    }
    found
}

pub fn read_patch(text: &str) -> Result<PatternPatch, PatternError> {
    let doc: PatchDoc =
        serde_json::from_str(text).map_err(|e| PatternError::Json(e.to_string()))?;
    if doc.format != PATCH_FORMAT {
        return Err(PatternError::Malformed(format!(
            "unknown format {:?}, expected {PATCH_FORMAT:?}",
            doc.format
        )));
    }
    if doc.version != PATCH_VERSION {
        return Err(PatternError::Version {
            found: doc.version,
            expected: PATCH_VERSION,
        });
    }

    let mut coords = std::array::from_fn(|_| Rational::from_integer(0.into()));
    for (i, s) in doc.shift.iter().enumerate() {
        coords[i] = Rational::from_str(s)
            .map_err(|e| PatternError::Malformed(format!("bad shift rational {s:?}: {e}")))?;
    }
    let shift = Shift::new(coords);

    if !(doc.radius.is_finite() && doc.radius > 0.0) {
        return Err(PatternError::InvalidRadius(format!("{}", doc.radius)));
    }

    let mut points = Vec::with_capacity(doc.points.len());
    for pd in &doc.points {
        let pre = LatticePoint(pd.x);
        if pre.level() != pd.n {
            return Err(PatternError::Malformed(format!(
                "point {pre} declares level {}, coordinates sum to {}",
                pd.n,
                pre.level()
            )));
        }
        if !(1..=4).contains(&pd.n) {
            return Err(PatternError::Malformed(format!(
                "point {pre} has non-canonical level {}",
                pd.n
            )));
        }
        points.push(PatchPoint {
            pre,
            level: pd.n,
            phys: pre.embed_phys(),
            pos: (pd.pos[0], pd.pos[1]),
        });
    }
    for w in points.windows(2) {
        if w[0].pre >= w[1].pre {
            return Err(PatternError::Malformed(
                "points are not sorted by lexicographic preimage".to_string(),
            ));
        }
    }

    let n = points.len();
    let mut edges = Vec::with_capacity(doc.edges.len());
    for &[i, j] in &doc.edges {
        if i >= n || j >= n {
            return Err(PatternError::Malformed(format!(
                "edge ({i},{j}) indexes past the {n} points"
            )));
        }
        edges.push((i, j));
    }

    let mut faces = Vec::with_capacity(doc.faces.len());
    for fd in &doc.faces {
        if fd.verts.iter().any(|&v| v >= n) {
            return Err(PatternError::Malformed(format!(
                "face {:?} indexes past the {n} points",
                fd.verts
            )));
        }
        let [a, b, _, d] = fd.verts;
        let j = basis_index(points[b].pre - points[a].pre);
        let k = basis_index(points[d].pre - points[a].pre);
        let (Some(j), Some(k)) = (j, k) else {
            return Err(PatternError::Malformed(format!(
                "face {:?} corners are not basis-vector translates of the base",
                fd.verts
            )));
        };
        let kind = match fd.kind.as_str() {
            "thick" => TileKind::Thick,
            "thin" => TileKind::Thin,
            other => {
                return Err(PatternError::Malformed(format!(
                    "unknown face kind {other:?}"
                )))
            }
        };
        if kind != TileKind::from_generators(j, k) {
            return Err(PatternError::Malformed(format!(
                "face {:?} kind {:?} contradicts its edge directions",
                fd.verts, fd.kind
            )));
        }
        faces.push(Face {
            verts: fd.verts,
            kind,
            generators: (j.min(k), j.max(k)),
        });
    }

    Ok(PatternPatch {
        shift,
        radius: doc.radius,
        points,
        edges,
        faces,
        singular: doc.singular,
        witness: doc.meta.singular_witness.map(LatticePoint),
    })
}
