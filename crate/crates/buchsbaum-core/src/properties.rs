//! Structural predicates on complexes — Cohen-Macaulay, Buchsbaum,
//! link-acyclicity — plus the identities and inequalities tying
//! h-vectors to Betti numbers.
//!
//! Every Betti-dependent predicate takes an explicit [`Field`]; where a
//! result is field-independent (Betti numbers of graphs) the fast paths
//! say so in their docs.

use crate::complex::{Face, SimplicialComplex};
use crate::homology::{betti_numbers, reduced_betti, Field};
use crate::hvec::{
    binomial_checked, buchsbaum_split, connected_buchsbaum_check, is_m_vector, macaulay_power,
    BuchsbaumSplit, ConnectedBuchsbaumCheck, FVector, HVector,
};
use alloc::vec::Vec;
use core::fmt;

/// Errors from structural predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertiesError {
    /// The operation is only defined for Buchsbaum complexes.
    NotBuchsbaum,
    /// An h-vector of unsupported length was supplied.
    WrongDimension { expected: usize, got: usize },
}

impl fmt::Display for PropertiesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertiesError::NotBuchsbaum => write!(f, "complex is not Buchsbaum"),
            PropertiesError::WrongDimension { expected, got } => {
                write!(f, "expected h-vector of length >= {expected}, got {got}")
            }
        }
    }
}

impl core::error::Error for PropertiesError {}

/// Cohen-Macaulayness over `field`, by the reduced-homology criterion:
/// for every face `F` (including the empty face), the link of `F` has
/// vanishing reduced homology in every degree except `dim - |F|`.
///
/// Degree -1 participates: the link `{∅}` of a facet carries
/// `β̃_{-1} = 1`, which is only tolerated when `dim - |F| = -1`.
pub fn is_cohen_macaulay(c: &SimplicialComplex, field: Field) -> bool {
    let dim = c.dim();
    c.all_faces().into_iter().all(|f| {
        let lk = c.link(f).expect("enumerated faces are faces");
        let target = dim - f.card() as i32;
        if target != -1 && reduced_betti(&lk, field, -1) != 0 {
            return false;
        }
        let b = betti_numbers(&lk, field);
        (0..=lk.dim()).all(|i| i == target || b.get(i) == 0)
    })
}

/// Buchsbaumness by definition: pure, and the link of every vertex is
/// Cohen-Macaulay over `field`.
pub fn is_buchsbaum_definitional(c: &SimplicialComplex, field: Field) -> bool {
    c.is_pure()
        && c.support().vertices().all(|v| {
            let lk = c
                .link(Face::from_vertices(&[v]).expect("support vertex"))
                .expect("vertices are faces");
            is_cohen_macaulay(&lk, field)
        })
}

/// Buchsbaumness with the 2-dimensional shortcut: a pure 2-complex is
/// Buchsbaum exactly when every vertex link is a connected graph, which
/// needs no homology and no field choice (vertex links of a pure
/// 2-complex are pure graphs, and a pure graph is Cohen-Macaulay over
/// every field iff it is connected). Other dimensions fall back to
/// [`is_buchsbaum_definitional`].
pub fn is_buchsbaum(c: &SimplicialComplex, field: Field) -> bool {
    if !c.is_pure() {
        return false;
    }
    if c.dim() == 2 {
        c.support().vertices().all(|v| {
            c.link(Face::from_vertices(&[v]).expect("support vertex"))
                .expect("vertices are faces")
                .is_connected()
        })
    } else {
        is_buchsbaum_definitional(c, field)
    }
}

/// Does every vertex link have vanishing reduced homology in all
/// degrees? Requires Buchsbaumness (else [`PropertiesError::NotBuchsbaum`]).
///
/// In dimension 2 this says every vertex link is a tree, checked by
/// counting (connected + one fewer edge than vertices), which is
/// field-independent; in other dimensions link Betti numbers are
/// required to vanish over both supported fields.
pub fn is_link_acyclic(c: &SimplicialComplex) -> Result<bool, PropertiesError> {
    if !is_buchsbaum(c, Field::Rationals) {
        return Err(PropertiesError::NotBuchsbaum);
    }
    let ok = c.support().vertices().all(|v| {
        let lk = c
            .link(Face::from_vertices(&[v]).expect("support vertex"))
            .expect("vertices are faces");
        if c.dim() == 2 {
            let f = lk.f_vector();
            f.faces(1) == f.faces(0) - 1 // tree: connected by Buchsbaumness
        } else {
            [Field::Rationals, Field::Gf2].into_iter().all(|fld| {
                betti_numbers(&lk, fld).entries().iter().all(|&b| b == 0)
            })
        }
    });
    Ok(ok)
}

/// Both sides of the vertex-link Betti identity for a `(d-1)`-dimensional
/// Buchsbaum complex:
///
/// `d * h_d + h_{d-1} = sum over vertices v of β̃_{d-2}(lk v)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkBettiIdentity {
    /// `d * h_d + h_{d-1}`.
    pub lhs: i64,
    /// `Σ_v β̃_{d-2}(lk v)` over the chosen field.
    pub rhs: i64,
}

impl LinkBettiIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates the vertex-link Betti identity over `field`; errors when
/// the complex is not Buchsbaum (the identity needs links with homology
/// concentrated in top degree).
pub fn link_betti_identity(
    c: &SimplicialComplex,
    field: Field,
) -> Result<LinkBettiIdentity, PropertiesError> {
    if !is_buchsbaum(c, Field::Rationals) {
        return Err(PropertiesError::NotBuchsbaum);
    }
    let d = c.dim() + 1;
    let h = c.h_vector();
    let lhs = d as i64 * h.entry(d as usize) + h.entry(d as usize - 1);
    let rhs = c
        .support()
        .vertices()
        .map(|v| {
            let lk = c
                .link(Face::from_vertices(&[v]).expect("support vertex"))
                .expect("vertices are faces");
            reduced_betti(&lk, field, d - 2)
        })
        .sum();
    Ok(LinkBettiIdentity { lhs, rhs })
}

/// The inequalities tying the h-vector of a 2-dimensional Buchsbaum
/// complex to its first two (reduced) Betti numbers, plus the equality
/// `h_3 + β_1 = β_2` which pins the top Betti number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuchsbaumBettiBounds {
    /// `(1, h_1, h_2)` is an M-vector.
    pub truncation_is_m_vector: bool,
    /// `h_2 >= 3 * β_1`.
    pub h2_dominates_beta1: bool,
    /// `h_3 + β_1 <= (h_2 - 3 β_1)^<2>`.
    pub h3_upper_bound: bool,
    /// `h_3 + β_1 = β_2` (reported separately from the bounds).
    pub top_betti_relation: bool,
}

impl BuchsbaumBettiBounds {
    /// The three inequality conditions (the equality is informational).
    pub fn passes(&self) -> bool {
        self.truncation_is_m_vector && self.h2_dominates_beta1 && self.h3_upper_bound
    }
}

/// Evaluates [`BuchsbaumBettiBounds`] for a length-4 h-vector and a
/// Betti pair `(β_1, β_2)` computed over one field.
pub fn buchsbaum_betti_bounds(
    h: &HVector,
    beta1: i64,
    beta2: i64,
) -> Result<BuchsbaumBettiBounds, PropertiesError> {
    if h.len() != 4 {
        return Err(PropertiesError::WrongDimension {
            expected: 4,
            got: h.len(),
        });
    }
    let (h1, h2, h3) = (h.entry(1), h.entry(2), h.entry(3));
    let reduced = h2 - 3 * beta1;
    Ok(BuchsbaumBettiBounds {
        truncation_is_m_vector: is_m_vector(&[1, h1, h2]),
        h2_dominates_beta1: reduced >= 0,
        h3_upper_bound: reduced >= 0
            && h3 + beta1 <= macaulay_power(reduced, 2).expect("reduced >= 0 checked"),
        top_betti_relation: h3 + beta1 == beta2,
    })
}

/// Face-count threshold that forces a Buchsbaum complex to be
/// Cohen-Macaulay: for `d >= 3`,
///
/// `h_0 + h_1 + ... + h_d >= C(h_1 + d, d) - 3 h_1 + 2`.
///
/// Returns whether the threshold is met (a sufficient condition only).
pub fn cm_face_threshold(h: &HVector) -> Result<bool, PropertiesError> {
    if h.len() < 4 {
        return Err(PropertiesError::WrongDimension {
            expected: 4,
            got: h.len(),
        });
    }
    let d = (h.len() - 1) as i64;
    let h1 = h.entry(1);
    let total: i64 = h.entries().iter().sum();
    match binomial_checked(h1 + d, d) {
        // Unrepresentable threshold can never be met at i64 scale.
        None => Ok(false),
        Some(c) => Ok(total >= c - 3 * h1 + 2),
    }
}

/// Per-field slice of a [`PropertyReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldReport {
    pub field: Field,
    pub betti: crate::homology::BettiVector,
    pub cohen_macaulay: bool,
    /// Buchsbaumness by the homological definition over this field.
    pub buchsbaum: bool,
    /// Betti bounds using this field's `β_1, β_2` (2-dimensional only).
    pub betti_bounds: Option<BuchsbaumBettiBounds>,
    /// Vertex-link Betti identity over this field (Buchsbaum only).
    pub link_identity: Option<LinkBettiIdentity>,
}

/// Everything the library can say about one complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub dim: i32,
    pub pure: bool,
    pub connected: bool,
    pub f: FVector,
    pub h: HVector,
    /// Buchsbaumness via the 2-dimensional connectivity shortcut.
    pub buchsbaum: bool,
    /// All vertex links acyclic (`false` when not Buchsbaum).
    pub link_acyclic: bool,
    pub rationals: FieldReport,
    pub gf2: FieldReport,
    /// Condition-by-condition connected realizability of `h` (2-dim only).
    pub connected_check: Option<ConnectedBuchsbaumCheck>,
    /// Triangle-peeling realizability of `h` (2-dim only).
    pub split: Option<Option<BuchsbaumSplit>>,
    /// Face-count threshold forcing CM (`None` below dimension 2).
    pub cm_threshold_met: Option<bool>,
}

fn field_report(c: &SimplicialComplex, h: &HVector, field: Field) -> FieldReport {
    let betti = betti_numbers(c, field);
    let betti_bounds = (c.dim() == 2)
        .then(|| buchsbaum_betti_bounds(h, betti.get(1), betti.get(2)).expect("length checked"));
    let link_identity = link_betti_identity(c, field).ok();
    FieldReport {
        field,
        cohen_macaulay: is_cohen_macaulay(c, field),
        buchsbaum: is_buchsbaum_definitional(c, field),
        betti,
        betti_bounds,
        link_identity,
    }
}

/// Runs every predicate on one complex and collects the results.
pub fn analyze(c: &SimplicialComplex) -> PropertyReport {
    let h = c.h_vector();
    let two_dim = c.dim() == 2;
    PropertyReport {
        dim: c.dim(),
        pure: c.is_pure(),
        connected: c.is_connected(),
        f: c.f_vector(),
        buchsbaum: is_buchsbaum(c, Field::Rationals),
        link_acyclic: is_link_acyclic(c).unwrap_or(false),
        rationals: field_report(c, &h, Field::Rationals),
        gf2: field_report(c, &h, Field::Gf2),
        connected_check: two_dim
            .then(|| connected_buchsbaum_check(&h).expect("length 4 in dimension 2")),
        split: two_dim.then(|| buchsbaum_split(&h).expect("length 4 in dimension 2")),
        cm_threshold_met: two_dim.then(|| cm_face_threshold(&h).expect("length 4")),
        h,
    }
}

/// Vertex-link Betti sum shortcut for pure 2-complexes: the right-hand
/// side of the identity with graph Betti numbers computed by counting
/// (`β̃_1 = f_1 - f_0 + components`), avoiding matrix work. Agrees with
/// [`link_betti_identity`] over either field.
pub fn link_cycle_sum_2dim(c: &SimplicialComplex) -> i64 {
    c.support()
        .vertices()
        .map(|v| {
            let lk = c
                .link(Face::from_vertices(&[v]).expect("support vertex"))
                .expect("vertices are faces");
            let f = lk.f_vector();
            f.faces(1) - f.faces(0) + lk.connected_components().len() as i64
        })
        .sum()
}

/// `f_1` and component count of every vertex link, packaged for callers
/// that want the tree test without recomputing links.
pub fn vertex_link_profile(c: &SimplicialComplex) -> Vec<(u32, FVector, usize)> {
    c.support()
        .vertices()
        .map(|v| {
            let lk = c
                .link(Face::from_vertices(&[v]).expect("support vertex"))
                .expect("vertices are faces");
            let comps = lk.connected_components().len();
            (v, lk.f_vector(), comps)
        })
        .collect()
}
