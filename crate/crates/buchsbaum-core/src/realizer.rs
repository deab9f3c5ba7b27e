//! Witness construction: given a feasible h-vector, build an explicit
//! 2-dimensional Buchsbaum complex realizing it, together with a
//! step-by-step certificate.
//!
//! Two engines cover the connected case:
//!
//! * `h_3 >= 0` — a shelling-style Cohen-Macaulay build: a seed
//!   triangle, cone facets over a fixed edge, two-edge glues over a
//!   colexicographic pair list, and three-edge fills.
//! * `h_3 < 0` — a cyclic base block with optional two-facet bridges,
//!   trimmed and padded face by face. Every facet added after the base
//!   block is audited against the gluing pattern that predicts its
//!   exact h-vector effect; any deviation aborts with
//!   [`RealizeError::InvariantViolated`].
//!
//! The disconnected case peels disjoint solid triangles (each worth
//! `(0, 3, -3, 1)`) off the h-vector and realizes the connected rest.

use crate::complex::{Face, GlueClass, SimplicialComplex};
use crate::hvec::{binomial, buchsbaum_split, connected_buchsbaum_check, ConnectedBuchsbaumCheck, HVector};
use crate::properties::is_buchsbaum;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from witness construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizeError {
    /// Only length-4 h-vectors (dimension 2) are supported.
    WrongDimension { expected: usize, got: usize },
    /// No Buchsbaum complex with this h-vector exists under the
    /// requested connectivity; the breakdown shows which condition fails.
    Unrealizable {
        connected_required: bool,
        check: ConnectedBuchsbaumCheck,
    },
    /// The witness would need more than 64 vertices.
    TooManyVertices { needed: i64 },
    /// A construction step did not match its predicted gluing pattern.
    /// This indicates a bug in the construction, never bad input.
    InvariantViolated { detail: String },
}

impl fmt::Display for RealizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizeError::WrongDimension { expected, got } => {
                write!(f, "expected h-vector of length {expected}, got {got}")
            }
            RealizeError::Unrealizable {
                connected_required,
                check,
            } => {
                let kind = if *connected_required {
                    "connected Buchsbaum"
                } else {
                    "Buchsbaum"
                };
                write!(f, "no 2-dimensional {kind} complex has this h-vector: {check}")
            }
            RealizeError::TooManyVertices { needed } => {
                write!(f, "witness needs {needed} vertices, more than the 64 supported")
            }
            RealizeError::InvariantViolated { detail } => {
                write!(f, "construction invariant violated: {detail}")
            }
        }
    }
}

impl core::error::Error for RealizeError {}

fn invariant(detail: String) -> RealizeError {
    RealizeError::InvariantViolated { detail }
}

/// Which phase of the construction a glued facet belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlueStage {
    /// Three-edge glue on the base block, raising `h_3` by one.
    CloseTriangle,
    /// Two-edge glue hitting the residue of the target `h_2` mod 3.
    ResidueFace,
    /// One-edge glue on the anchor edge with a fresh vertex, raising `h_1`.
    VertexPad,
    /// Two-edge glue over a missing pair, raising `h_2`.
    PairFace,
    /// Cone facet over the base edge in the Cohen-Macaulay build.
    Cone,
    /// Two-edge glue over a colexicographic pair in the CM build.
    PairFill,
    /// Three-edge fill in the CM build, raising `h_3`.
    TriangleFill,
}

impl fmt::Display for GlueStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GlueStage::CloseTriangle => "close-triangle",
            GlueStage::ResidueFace => "residue-face",
            GlueStage::VertexPad => "vertex-pad",
            GlueStage::PairFace => "pair-face",
            GlueStage::Cone => "cone",
            GlueStage::PairFill => "pair-fill",
            GlueStage::TriangleFill => "triangle-fill",
        };
        write!(f, "{s}")
    }
}

/// One entry in the construction log of a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceStep {
    /// The base block was assembled wholesale; its h-vector is verified
    /// rather than derived step by step.
    Base { facets: usize, h: HVector },
    /// One audited facet addition with its verified gluing class.
    Glue {
        face: Face,
        class: GlueClass,
        stage: GlueStage,
    },
    /// A disjoint solid triangle was appended as a new component.
    Component { face: Face },
}

/// Structural sanity results recomputed on the finished witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateChecks {
    pub pure: bool,
    pub connected: bool,
    /// Whether connectivity was part of the request.
    pub connected_required: bool,
    /// Buchsbaumness via the vertex-link connectivity criterion.
    pub buchsbaum: bool,
    pub h_matches: bool,
}

impl CertificateChecks {
    pub fn passes(&self) -> bool {
        self.pure
            && self.buchsbaum
            && self.h_matches
            && (!self.connected_required || self.connected)
    }
}

/// A witness complex plus everything needed to audit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationCertificate {
    pub target: HVector,
    /// Recomputed h-vector of the witness (equal to `target`).
    pub achieved: HVector,
    pub complex: SimplicialComplex,
    /// Number of disjoint solid-triangle components peeled off.
    pub split_triangles: i64,
    pub checks: CertificateChecks,
    pub trace: Vec<TraceStep>,
}

/// Decomposition of a connected target `(1, h_1, h_2, h_3)` with
/// `h_3 < 0` into base-block and padding parameters.
///
/// Writing `w = -h_3`, the core lives on `n = x + 3` vertices where `x`
/// is minimal with `3w <= C(x+1, 2)`; `y = min(h_2, C(x+1, 2))` is the
/// core's `h_2`; `gamma = h_1 - x` vertex pads and `delta = h_2 - y`
/// pair pads finish the job. On the core, `y = 3(m - b) + alpha` with
/// `alpha = y mod 3`, and `c = y div 3 - w` counts three-edge closing
/// faces; `m` is the largest `k` with `3k <= C(n-2, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoreParams {
    pub w: i64,
    pub x: i64,
    pub y: i64,
    pub gamma: i64,
    pub delta: i64,
    pub n: i64,
    pub p: i64,
    /// Residue `q` in `n = 3p + q`, `q` in `{-1, 0, 1}`.
    pub residue: i64,
    pub m: i64,
    pub b: i64,
    pub c: i64,
    pub alpha: i64,
}

/// Computes [`CoreParams`] for a feasible connected target with
/// `h_3 < 0`, verifying every internal range constraint.
pub fn core_params(h: &HVector) -> Result<CoreParams, RealizeError> {
    if h.len() != 4 {
        return Err(RealizeError::WrongDimension {
            expected: 4,
            got: h.len(),
        });
    }
    let (h1, h2, h3) = (h.entry(1), h.entry(2), h.entry(3));
    if h3 >= 0 {
        return Err(invariant(format!("core decomposition needs h3 < 0, got {h3}")));
    }
    let w = -h3;
    let mut x = 1;
    while binomial(x + 1, 2) < 3 * w {
        x += 1;
    }
    let y = h2.min(binomial(x + 1, 2));
    let gamma = h1 - x;
    let delta = h2 - y;
    let n = x + 3;
    let (p, residue) = match n % 3 {
        0 => (n / 3, 0),
        1 => ((n - 1) / 3, 1),
        _ => ((n + 1) / 3, -1),
    };
    let m = binomial(n - 2, 2) / 3;
    let alpha = y % 3;
    let b = m - y / 3;
    let c = y / 3 - w;
    let params = CoreParams {
        w,
        x,
        y,
        gamma,
        delta,
        n,
        p,
        residue,
        m,
        b,
        c,
        alpha,
    };
    let ok = n >= 5
        && p >= 2
        && gamma >= 0
        && delta >= 0
        && b >= 0
        && c >= 0
        && b + c <= p - 2
        && 3 * (m - b) + alpha == y
        && m - b - c == w
        && (alpha == 0 || b > 0 || (residue == 1 && alpha == 1));
    if !ok {
        return Err(invariant(format!("inconsistent decomposition {params:?} for {h}")));
    }
    Ok(params)
}

/// A two-facet bridge block of a base family, with every index name
/// `(i, j)` that denotes it; wrap-around bridges use `None` for `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bridge {
    pub facets: [Face; 2],
    pub names: Vec<(i64, Option<i64>)>,
}

/// The vertex-count-dependent base family: a cyclic block of facets
/// that is always present, plus optional bridges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseFamily {
    pub n: i64,
    pub p: i64,
    pub residue: i64,
    pub core_facets: Vec<Face>,
    pub bridges: Vec<Bridge>,
}

/// Vertex label for `v` reduced mod `n` into `1..=n`.
fn md(v: i64, n: i64) -> u32 {
    ((v - 1).rem_euclid(n) + 1) as u32
}

fn tri(a: i64, b: i64, c: i64, n: i64) -> Result<Face, RealizeError> {
    Face::from_vertices(&[md(a, n), md(b, n), md(c, n)])
        .map_err(|e| invariant(format!("degenerate facet ({a},{b},{c}) mod {n}: {e}")))
}

/// Builds the base family on `n` vertices (`5 <= n <= 64`).
pub fn base_family(n: i64) -> Result<BaseFamily, RealizeError> {
    if !(5..=64).contains(&n) {
        return Err(invariant(format!("base family needs 5 <= n <= 64, got {n}")));
    }
    let (p, residue) = match n % 3 {
        0 => (n / 3, 0),
        1 => ((n - 1) / 3, 1),
        _ => ((n + 1) / 3, -1),
    };
    let mut core_facets = Vec::new();
    // Raw (i, j) -> two facets, before alias deduplication.
    type RawBlock = ((i64, Option<i64>), [Face; 2]);
    let mut raw: Vec<RawBlock> = Vec::new();
    match residue {
        -1 => {
            for i in 1..=n {
                core_facets.push(tri(i, 1 + i, 2 + i, n)?);
            }
            for i in 1..=n {
                for j in 1..=(p - 2) {
                    raw.push((
                        (i, Some(j)),
                        [
                            tri(i, 1 + i, 2 + i + 3 * j, n)?,
                            tri(1 + i + 3 * j, 2 + i + 3 * j, 1 + i, n)?,
                        ],
                    ));
                }
            }
        }
        0 => {
            for i in 1..=p {
                core_facets.push(tri(i, i + p, i + 2 * p, n)?);
            }
            for i in 1..=n {
                for j in 1..=(p - 1) {
                    raw.push((
                        (i, Some(j)),
                        [
                            tri(i, i + p, i + j + p, n)?,
                            tri(i + j + p, i + j + 2 * p, i, n)?,
                        ],
                    ));
                }
            }
        }
        _ => {
            for i in 1..=n {
                core_facets.push(tri(i - (p - 1), i, i + p + 1, n)?);
            }
            for i in 1..=n {
                for j in 1..=(p - 2) {
                    raw.push((
                        (i, Some(j)),
                        [
                            tri(i - j, i, i + 2 * p - j, n)?,
                            tri(1 + i + p, i + 2 * p - j, i, n)?,
                        ],
                    ));
                }
            }
            for i in 1..=p {
                raw.push((
                    (i, None),
                    [
                        tri(i, i + p, i + 2 * p, n)?,
                        tri(i + p, i + 2 * p, i + 3 * p, n)?,
                    ],
                ));
            }
        }
    }
    // Alias names denote the same facet pair (possibly swapped);
    // deduplicate on the sorted pair.
    let mut merged: BTreeMap<[Face; 2], Vec<(i64, Option<i64>)>> = BTreeMap::new();
    for (name, facets) in raw {
        let mut key = facets;
        key.sort();
        merged.entry(key).or_default().push(name);
    }
    let bridges = merged
        .into_iter()
        .map(|(facets, names)| Bridge { facets, names })
        .collect();
    Ok(BaseFamily {
        n,
        p,
        residue,
        core_facets,
        bridges,
    })
}

impl BaseFamily {
    /// Is this bridge removed when trimming the first `b` bridges at
    /// anchor index 1?
    fn removed(&self, bridge: &Bridge, b: i64) -> bool {
        bridge
            .names
            .iter()
            .any(|&(i, j)| i == 1 && j.is_some_and(|j| j <= b))
    }

    /// The three-edge closing face `G_j`.
    fn closing_face(&self, j: i64) -> Result<Face, RealizeError> {
        let (n, p) = (self.n, self.p);
        match self.residue {
            -1 => tri(1, 2 + 3 * j, 3 + 3 * j, n),
            0 => tri(1 + p, 1 + j + p, 1 + j + 2 * p, n),
            _ => tri(1 - j, 1, 2 + p, n),
        }
    }

    /// The one or two two-edge faces hitting the residue `alpha` of the
    /// target `h_2` mod 3.
    fn residue_faces(&self, b: i64, alpha: i64) -> Result<Vec<Face>, RealizeError> {
        let (n, p) = (self.n, self.p);
        if alpha == 0 {
            return Ok(Vec::new());
        }
        if b == 0 {
            // Only the n = 3p + 1 family reaches alpha > 0 with b = 0,
            // via the single missing edge {p, n}.
            if self.residue != 1 || alpha != 1 {
                return Err(invariant(format!(
                    "residue faces with b = 0 need n = 3p+1 and alpha = 1, got alpha = {alpha}"
                )));
            }
            return Ok(vec![tri(1, p, n, n)?]);
        }
        let faces = match self.residue {
            -1 => [tri(1, 2 + 3 * b, 3 + 3 * b, n)?, tri(1, 2, 3 + 3 * b, n)?],
            0 => [
                tri(1 + p, 1 + b + p, 1 + b + 2 * p, n)?,
                tri(1, 1 + p, 1 + b + p, n)?,
            ],
            _ => [
                tri(1 - b, 1, 2 + p, n)?,
                tri(1 - b, 1, 1 + 2 * p - b, n)?,
            ],
        };
        Ok(faces[..alpha as usize].to_vec())
    }

    /// The base edge used for one-edge vertex pads; always a facet edge
    /// of the core block.
    fn anchor_edge(&self) -> (u32, u32) {
        match self.residue {
            -1 => (1, 2),
            0 => (1, (1 + self.p) as u32),
            _ => (1, (2 + self.p) as u32),
        }
    }
}

/// The full base family complex on `n` vertices (core plus every
/// bridge): Buchsbaum, acyclic vertex links, and h-vector
/// `(1, n-3, 3m, -m)` where `m` is maximal with `3m <= C(n-2, 2)`.
pub fn extremal_complex(n: i64) -> Result<SimplicialComplex, RealizeError> {
    let fam = base_family(n)?;
    let mut facets = fam.core_facets.clone();
    for br in &fam.bridges {
        facets.extend(br.facets);
    }
    SimplicialComplex::from_facets(facets)
        .map_err(|e| invariant(format!("base family on {n} vertices rejected: {e}")))
}

/// Adds `face` after verifying it glues with exactly the expected
/// pattern, logging the step.
fn glue(
    cur: &mut SimplicialComplex,
    face: Face,
    expected: GlueClass,
    stage: GlueStage,
    trace: &mut Vec<TraceStep>,
) -> Result<(), RealizeError> {
    let got = cur
        .classify_glue(face)
        .map_err(|e| invariant(format!("{stage} face {face}: {e}")))?;
    if got != expected {
        return Err(invariant(format!(
            "{stage} face {face} glues as {got}, expected {expected}"
        )));
    }
    *cur = cur.add_facet(face);
    trace.push(TraceStep::Glue {
        face,
        class: got,
        stage,
    });
    Ok(())
}

/// Connected witness for a feasible target with `h_3 < 0`.
fn realize_negative(h: &HVector) -> Result<(SimplicialComplex, Vec<TraceStep>), RealizeError> {
    let params = core_params(h)?;
    let fam = base_family(params.n)?;
    let mut facets = fam.core_facets.clone();
    for br in fam.bridges.iter().filter(|br| !fam.removed(br, params.b)) {
        facets.extend(br.facets);
    }
    let base = SimplicialComplex::from_facets(facets)
        .map_err(|e| invariant(format!("base block rejected: {e}")))?;
    let base_h = HVector::dim2(
        params.n - 3,
        3 * (params.m - params.b),
        -(params.m - params.b),
    );
    if base.h_vector() != base_h {
        return Err(invariant(format!(
            "base block h-vector {} differs from predicted {base_h}",
            base.h_vector()
        )));
    }
    let mut trace = vec![TraceStep::Base {
        facets: base.facets().len(),
        h: base_h,
    }];
    let mut cur = base;
    for k in 1..=params.c {
        let f = fam.closing_face(params.b + k)?;
        glue(&mut cur, f, GlueClass::ThreeEdges, GlueStage::CloseTriangle, &mut trace)?;
    }
    for f in fam.residue_faces(params.b, params.alpha)? {
        glue(&mut cur, f, GlueClass::TwoEdges, GlueStage::ResidueFace, &mut trace)?;
    }
    let core_h = HVector::dim2(params.x, params.y, -params.w);
    if cur.h_vector() != core_h {
        return Err(invariant(format!(
            "core h-vector {} differs from predicted {core_h}",
            cur.h_vector()
        )));
    }
    let (a1, a2) = fam.anchor_edge();
    for k in 1..=params.gamma {
        let v = (params.n + k) as u32;
        let f = Face::from_vertices(&[a1, a2, v])
            .map_err(|e| invariant(format!("vertex pad {v}: {e}")))?;
        glue(&mut cur, f, GlueClass::OneEdge, GlueStage::VertexPad, &mut trace)?;
    }
    if params.delta > 0 {
        let pairs = missing_pairs(&params, a2);
        if (pairs.len() as i64) < params.delta {
            return Err(invariant(format!(
                "only {} missing pairs for {} pair pads",
                pairs.len(),
                params.delta
            )));
        }
        for &(u, v) in pairs.iter().take(params.delta as usize) {
            let f = Face::from_vertices(&[1, u, v])
                .map_err(|e| invariant(format!("pair pad ({u},{v}): {e}")))?;
            glue(&mut cur, f, GlueClass::TwoEdges, GlueStage::PairFace, &mut trace)?;
        }
    }
    Ok((cur, trace))
}

/// Pairs usable by two-edge pair pads, in lexicographic order: both
/// members drawn from the core vertices minus the anchor endpoints or
/// from the pad vertices, with at least one pad vertex (these are
/// exactly the missing edges when the core skeleton is complete).
fn missing_pairs(params: &CoreParams, anchor_b: u32) -> Vec<(u32, u32)> {
    let mut verts: Vec<u32> = (2..=params.n as u32)
        .filter(|&v| v != anchor_b)
        .chain((params.n as u32 + 1)..=(params.n + params.gamma) as u32)
        .collect();
    verts.sort_unstable();
    let pad_start = params.n as u32 + 1;
    let mut pairs = Vec::new();
    for (ai, &u) in verts.iter().enumerate() {
        for &v in &verts[ai + 1..] {
            if u >= pad_start || v >= pad_start {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

/// First `count` pairs over `{3, 4, ...}` in colexicographic order.
fn colex_pairs(count: i64) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    let mut b = 4u32;
    while (pairs.len() as i64) < count {
        for a in 3..b {
            if (pairs.len() as i64) == count {
                break;
            }
            pairs.push((a, b));
        }
        b += 1;
    }
    pairs
}

/// Three-edge fill candidates over a pair list: one triangle through
/// vertex 2 per pair, then every triangle of the pair graph, in
/// lexicographic order.
fn fill_triples(pairs: &[(u32, u32)]) -> Vec<(u32, u32, u32)> {
    let set: BTreeSet<(u32, u32)> = pairs.iter().copied().collect();
    let mut triples: Vec<(u32, u32, u32)> = pairs.iter().map(|&(a, b)| (2, a, b)).collect();
    let verts: BTreeSet<u32> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let verts: Vec<u32> = verts.into_iter().collect();
    for (ai, &a) in verts.iter().enumerate() {
        for (bi, &b) in verts.iter().enumerate().skip(ai + 1) {
            if !set.contains(&(a, b)) {
                continue;
            }
            for &c in &verts[bi + 1..] {
                if set.contains(&(a, c)) && set.contains(&(b, c)) {
                    triples.push((a, b, c));
                }
            }
        }
    }
    triples
}

/// Number of three-edge fills available after laying down `h2`
/// colexicographic pairs; equals the Macaulay shift `h2^<2>`.
pub fn cm_fill_capacity(h2: i64) -> i64 {
    if h2 <= 0 {
        return 0;
    }
    fill_triples(&colex_pairs(h2)).len() as i64
}

/// Cohen-Macaulay witness for a feasible connected target with
/// `h_3 >= 0`.
fn realize_cm(h: &HVector) -> Result<(SimplicialComplex, Vec<TraceStep>), RealizeError> {
    let (h1, h2, h3) = (h.entry(1), h.entry(2), h.entry(3));
    let mut cur = SimplicialComplex::from_vertex_lists(&[&[1, 2, 3]])
        .map_err(|e| invariant(format!("seed triangle: {e}")))?;
    let mut trace = vec![TraceStep::Base {
        facets: 1,
        h: HVector::dim2(0, 0, 0),
    }];
    for v in 4..=(h1 + 3) as u32 {
        let f = Face::from_vertices(&[1, 2, v])
            .map_err(|e| invariant(format!("cone facet over {v}: {e}")))?;
        glue(&mut cur, f, GlueClass::OneEdge, GlueStage::Cone, &mut trace)?;
    }
    let pairs = colex_pairs(h2);
    for &(a, b) in &pairs {
        let f = Face::from_vertices(&[1, a, b])
            .map_err(|e| invariant(format!("pair fill ({a},{b}): {e}")))?;
        glue(&mut cur, f, GlueClass::TwoEdges, GlueStage::PairFill, &mut trace)?;
    }
    let triples = fill_triples(&pairs);
    if (triples.len() as i64) < h3 {
        return Err(invariant(format!(
            "only {} fill triangles for h3 = {h3}",
            triples.len()
        )));
    }
    for &(a, b, c) in triples.iter().take(h3 as usize) {
        let f = Face::from_vertices(&[a, b, c])
            .map_err(|e| invariant(format!("triangle fill ({a},{b},{c}): {e}")))?;
        glue(&mut cur, f, GlueClass::ThreeEdges, GlueStage::TriangleFill, &mut trace)?;
    }
    Ok((cur, trace))
}

fn finish(
    target: &HVector,
    complex: SimplicialComplex,
    trace: Vec<TraceStep>,
    split_triangles: i64,
    connected_required: bool,
) -> Result<RealizationCertificate, RealizeError> {
    let achieved = complex.h_vector();
    if achieved != *target {
        return Err(invariant(format!(
            "witness h-vector {achieved} differs from target {target}"
        )));
    }
    let checks = CertificateChecks {
        pure: complex.is_pure(),
        connected: complex.is_connected(),
        connected_required,
        buchsbaum: is_buchsbaum(&complex, crate::homology::Field::Rationals),
        h_matches: true,
    };
    Ok(RealizationCertificate {
        target: target.clone(),
        achieved,
        complex,
        split_triangles,
        checks,
        trace,
    })
}

fn check_budget(h1: i64) -> Result<(), RealizeError> {
    if h1 + 3 > 64 {
        return Err(RealizeError::TooManyVertices { needed: h1 + 3 });
    }
    Ok(())
}

/// Builds a witness for `h` with `triangles` disjoint solid-triangle
/// components peeled off; the rest must be realizable connected.
pub fn realize_split(h: &HVector, triangles: i64) -> Result<RealizationCertificate, RealizeError> {
    if h.len() != 4 {
        return Err(RealizeError::WrongDimension {
            expected: 4,
            got: h.len(),
        });
    }
    let rest = HVector::dim2(
        h.entry(1) - 3 * triangles,
        h.entry(2) + 3 * triangles,
        h.entry(3) - triangles,
    );
    let check = connected_buchsbaum_check(&rest).expect("length 4");
    if triangles < 0 || !check.passes() {
        return Err(RealizeError::Unrealizable {
            connected_required: false,
            check,
        });
    }
    check_budget(h.entry(1))?;
    let (mut complex, mut trace) = if rest.entry(3) >= 0 {
        realize_cm(&rest)?
    } else {
        realize_negative(&rest)?
    };
    let solid = SimplicialComplex::from_vertex_lists(&[&[1, 2, 3]])
        .map_err(|e| invariant(format!("solid triangle: {e}")))?;
    for _ in 0..triangles {
        let base = complex.max_vertex();
        complex = complex
            .disjoint_union(&solid)
            .map_err(|e| invariant(format!("appending component: {e}")))?;
        let face = Face::from_vertices(&[base + 1, base + 2, base + 3])
            .map_err(|e| invariant(format!("component labels: {e}")))?;
        trace.push(TraceStep::Component { face });
    }
    finish(h, complex, trace, triangles, false)
}

/// Decides realizability of `h` and on success builds a witness with
/// certificate. With `require_connected` the witness is connected; the
/// target must satisfy the connected feasibility conditions. Otherwise
/// the fewest possible solid-triangle components are split off.
pub fn realize(h: &HVector, require_connected: bool) -> Result<RealizationCertificate, RealizeError> {
    if h.len() != 4 {
        return Err(RealizeError::WrongDimension {
            expected: 4,
            got: h.len(),
        });
    }
    if require_connected {
        let check = connected_buchsbaum_check(h).expect("length 4");
        if !check.passes() {
            return Err(RealizeError::Unrealizable {
                connected_required: true,
                check,
            });
        }
        check_budget(h.entry(1))?;
        let (complex, trace) = if h.entry(3) >= 0 {
            realize_cm(h)?
        } else {
            realize_negative(h)?
        };
        finish(h, complex, trace, 0, true)
    } else {
        match buchsbaum_split(h).expect("length 4") {
            Some(split) => realize_split(h, split.triangles),
            None => Err(RealizeError::Unrealizable {
                connected_required: false,
                check: connected_buchsbaum_check(h).expect("length 4"),
            }),
        }
    }
}
