//! Exhaustive enumeration of small 2-dimensional complexes, used to
//! validate every h-vector predicate against ground truth.
//!
//! The universe at vertex count `n` is every set of triangles on `[n]`
//! whose union covers all `n` vertices — exactly the pure 2-dimensional
//! complexes with full support, which includes every 2-dimensional
//! Buchsbaum complex on `[n]`. Each complex is keyed by its h-vector,
//! connectivity, Buchsbaumness, link-acyclicity, and Betti pairs over
//! the rationals and GF(2); alongside the census, violation counters
//! track every predicate the theory says can never fire.

use crate::complex::{Face, SimplicialComplex};
use crate::homology::{betti_numbers, boundary_matrix, rank, Field};
use crate::hvec::{binomial, buchsbaum_split, connected_buchsbaum_check, HVector};
use crate::properties::{
    buchsbaum_betti_bounds, cm_face_threshold, is_buchsbaum, is_buchsbaum_definitional,
    is_cohen_macaulay, is_link_acyclic, link_cycle_sum_2dim,
};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// Errors from enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    /// Enumeration needs at least 3 vertices for a triangle to exist.
    TooSmall { n: u32 },
    /// Full enumeration is capped (2^C(n,3) complexes).
    TooLarge { n: u32, max: u32 },
    /// A mask range outside `0..2^C(n,3)` or with `start > end`.
    BadRange { start: u64, end: u64, limit: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooSmall { n } => {
                write!(f, "enumeration needs n >= 3, got {n}")
            }
            OracleError::TooLarge { n, max } => {
                write!(f, "enumeration on {n} vertices exceeds the cap of {max}")
            }
            OracleError::BadRange { start, end, limit } => {
                write!(f, "mask range {start}..{end} invalid (limit {limit})")
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// Classification key of one scanned complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CensusKey {
    pub h1: i64,
    pub h2: i64,
    pub h3: i64,
    pub connected: bool,
    pub buchsbaum: bool,
    /// Buchsbaum with all vertex links trees (`false` when not Buchsbaum).
    pub link_acyclic: bool,
    /// Reduced Betti numbers `(β_1, β_2)` over the rationals.
    pub betti_q: (i64, i64),
    /// Reduced Betti numbers `(β_1, β_2)` over GF(2).
    pub betti_gf2: (i64, i64),
}

/// Counters for predicates the theory says can never fire. Every field
/// must be zero on a completed scan.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NecessityStats {
    /// Buchsbaum and connected, but the h-vector fails the connected
    /// feasibility conditions.
    pub connected_feasibility: u64,
    /// Buchsbaum, but no triangle-splitting decomposition exists.
    pub split_feasibility: u64,
    /// Buchsbaum and connected, but the Betti-number bounds fail over
    /// the rationals. (The bounds are theorems only in the connected
    /// case; two disjoint solid triangles violate them.)
    pub betti_bounds_q: u64,
    /// Same over GF(2).
    pub betti_bounds_gf2: u64,
    /// Buchsbaum and connected with `h_3 + β_1 != β_2` over the
    /// rationals. (Connected-only for the same reason as the bounds.)
    pub top_betti_q: u64,
    /// Same over GF(2).
    pub top_betti_gf2: u64,
    /// Buchsbaum with `3 h_3 + h_2` different from the vertex-link
    /// cycle sum.
    pub link_identity: u64,
    /// Buchsbaum where tree links disagree with `3 h_3 + h_2 = 0`.
    pub link_acyclic_mismatch: u64,
    /// Fast Buchsbaum test disagreeing with the homological definition
    /// over the rationals (only counted when requested).
    pub definitional_q: u64,
    /// Same over GF(2).
    pub definitional_gf2: u64,
    /// Face-count threshold met but the complex is not Cohen-Macaulay
    /// over the rationals.
    pub threshold_q: u64,
    /// Same over GF(2).
    pub threshold_gf2: u64,
}

impl NecessityStats {
    pub fn all_zero(&self) -> bool {
        *self == NecessityStats::default()
    }

    pub fn merge(&mut self, other: &NecessityStats) {
        self.connected_feasibility += other.connected_feasibility;
        self.split_feasibility += other.split_feasibility;
        self.betti_bounds_q += other.betti_bounds_q;
        self.betti_bounds_gf2 += other.betti_bounds_gf2;
        self.top_betti_q += other.top_betti_q;
        self.top_betti_gf2 += other.top_betti_gf2;
        self.link_identity += other.link_identity;
        self.link_acyclic_mismatch += other.link_acyclic_mismatch;
        self.definitional_q += other.definitional_q;
        self.definitional_gf2 += other.definitional_gf2;
        self.threshold_q += other.threshold_q;
        self.threshold_gf2 += other.threshold_gf2;
    }
}

/// Scan configuration.
#[derive(Debug, Clone, Copy, Default)]
pub struct ScanOptions {
    /// Additionally compare the fast Buchsbaum test with the full
    /// homological definition over both fields on every complex
    /// (roughly an order of magnitude slower).
    pub verify_definitional: bool,
}

/// Aggregated result of one (partial) enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub n: u32,
    /// Masks visited (covered or not).
    pub scanned: u64,
    /// Complexes covering all `n` vertices, i.e. counted in `counts`.
    pub covered: u64,
    pub counts: BTreeMap<CensusKey, u64>,
    pub stats: NecessityStats,
}

impl Census {
    /// Folds a disjoint partial census into this one.
    pub fn merge(&mut self, other: &Census) {
        debug_assert_eq!(self.n, other.n);
        self.scanned += other.scanned;
        self.covered += other.covered;
        for (k, v) in &other.counts {
            *self.counts.entry(*k).or_insert(0) += v;
        }
        self.stats.merge(&other.stats);
    }

    /// Total count across all keys matching a predicate.
    pub fn count_where(&self, mut pred: impl FnMut(&CensusKey) -> bool) -> u64 {
        self.counts
            .iter()
            .filter(|(k, _)| pred(k))
            .map(|(_, v)| v)
            .sum()
    }
}

/// Number of triangles on `[n]`.
pub fn triangle_count(n: u32) -> u64 {
    binomial(n as i64, 3) as u64
}

/// All triangles on `[n]` in lexicographic order; bit `i` of a scan
/// mask selects `triangles[i]`.
pub fn triangles_on(n: u32) -> Vec<Face> {
    let full = Face::from_vertices(&(1..=n).collect::<Vec<_>>()).expect("n <= 64");
    full.subsets_of_card(3)
}

/// Reduced Betti pair `(β_1, β_2)` over both fields for a pure
/// 2-dimensional complex, sharing one boundary matrix and using
/// `rank ∂_1 = f_0 - components` (field-independent for graphs).
fn betti_pairs(c: &SimplicialComplex, components: i64) -> ((i64, i64), (i64, i64)) {
    let f = c.f_vector();
    let d2 = boundary_matrix(c, 2).expect("pure 2-dimensional");
    let rank1 = f.faces(0) - components;
    let pair = |rank2: i64| {
        (
            f.faces(1) - rank1 - rank2,
            f.faces(2) - rank2,
        )
    };
    (
        pair(rank(&d2, Field::Rationals) as i64),
        pair(rank(&d2, Field::Gf2) as i64),
    )
}

fn assess(c: &SimplicialComplex, opts: &ScanOptions, stats: &mut NecessityStats) -> CensusKey {
    let h = c.h_vector();
    let (h1, h2, h3) = (h.entry(1), h.entry(2), h.entry(3));
    let components = c.connected_components().len() as i64;
    let connected = components == 1;
    let buchsbaum = is_buchsbaum(c, Field::Rationals);
    let link_acyclic = is_link_acyclic(c).unwrap_or(false);
    let (betti_q, betti_gf2) = betti_pairs(c, components);

    if buchsbaum {
        if connected && !connected_buchsbaum_check(&h).expect("length 4").passes() {
            stats.connected_feasibility += 1;
        }
        if buchsbaum_split(&h).expect("length 4").is_none() {
            stats.split_feasibility += 1;
        }
        // The Betti bounds and the top-Betti relation hold for
        // connected Buchsbaum complexes only: two disjoint solid
        // triangles have h = (1, 3, -3, 1) with all Betti numbers
        // zero, so the truncation is not an M-vector and
        // h_3 + β_1 != β_2.
        if connected {
            let bounds_q = buchsbaum_betti_bounds(&h, betti_q.0, betti_q.1).expect("length 4");
            if !bounds_q.passes() {
                stats.betti_bounds_q += 1;
            }
            if !bounds_q.top_betti_relation {
                stats.top_betti_q += 1;
            }
            let bounds_g =
                buchsbaum_betti_bounds(&h, betti_gf2.0, betti_gf2.1).expect("length 4");
            if !bounds_g.passes() {
                stats.betti_bounds_gf2 += 1;
            }
            if !bounds_g.top_betti_relation {
                stats.top_betti_gf2 += 1;
            }
        }
        if 3 * h3 + h2 != link_cycle_sum_2dim(c) {
            stats.link_identity += 1;
        }
        if link_acyclic != (3 * h3 + h2 == 0) {
            stats.link_acyclic_mismatch += 1;
        }
        if cm_face_threshold(&h).expect("length 4") {
            if !is_cohen_macaulay(c, Field::Rationals) {
                stats.threshold_q += 1;
            }
            if !is_cohen_macaulay(c, Field::Gf2) {
                stats.threshold_gf2 += 1;
            }
        }
    }
    if opts.verify_definitional {
        if is_buchsbaum_definitional(c, Field::Rationals) != buchsbaum {
            stats.definitional_q += 1;
        }
        if is_buchsbaum_definitional(c, Field::Gf2) != buchsbaum {
            stats.definitional_gf2 += 1;
        }
    }
    CensusKey {
        h1,
        h2,
        h3,
        connected,
        buchsbaum,
        link_acyclic,
        betti_q,
        betti_gf2,
    }
}

/// Enumerates masks `start..end` (exclusive) over the `C(n,3)`
/// triangles on `[n]`, skipping sets that do not cover every vertex.
/// Partial ranges from disjoint calls merge into a full census.
pub fn scan_range(
    n: u32,
    start: u64,
    end: u64,
    opts: &ScanOptions,
) -> Result<Census, OracleError> {
    if n < 3 {
        return Err(OracleError::TooSmall { n });
    }
    if n > 7 {
        return Err(OracleError::TooLarge { n, max: 7 });
    }
    let bits = triangle_count(n);
    let limit = 1u64 << bits;
    if start > end || end > limit {
        return Err(OracleError::BadRange { start, end, limit });
    }
    let triangles = triangles_on(n);
    let masks: Vec<u64> = triangles.iter().map(|t| t.bits()).collect();
    let full = Face::from_vertices(&(1..=n).collect::<Vec<_>>())
        .expect("n <= 64")
        .bits();
    let mut census = Census {
        n,
        scanned: 0,
        covered: 0,
        counts: BTreeMap::new(),
        stats: NecessityStats::default(),
    };
    let mut facets: Vec<Face> = Vec::with_capacity(bits as usize);
    for mask in start..end {
        census.scanned += 1;
        let mut support = 0u64;
        let mut m = mask;
        while m != 0 {
            support |= masks[m.trailing_zeros() as usize];
            m &= m - 1;
        }
        if support != full {
            continue;
        }
        census.covered += 1;
        facets.clear();
        let mut m = mask;
        while m != 0 {
            facets.push(triangles[m.trailing_zeros() as usize]);
            m &= m - 1;
        }
        let c = SimplicialComplex::from_faces_unchecked(facets.clone());
        let key = assess(&c, opts, &mut census.stats);
        *census.counts.entry(key).or_insert(0) += 1;
    }
    Ok(census)
}

/// Full census on `[n]` (`3 <= n <= 6`).
pub fn census(n: u32, opts: &ScanOptions) -> Result<Census, OracleError> {
    if n > 6 {
        return Err(OracleError::TooLarge { n, max: 6 });
    }
    if n < 3 {
        return Err(OracleError::TooSmall { n });
    }
    scan_range(n, 0, 1u64 << triangle_count(n), opts)
}

/// Result of the tight-threshold Betti profile scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiProfileScan {
    /// 13-triangle subsets of the 20 triangles on 6 vertices.
    pub total_sets: u64,
    /// Subsets whose triangles cover all 15 edges (h = (1,3,6,3)).
    pub full_skeleton: u64,
    /// Full-skeleton subsets that are Buchsbaum.
    pub buchsbaum: u64,
    /// `(β_1, β_2)` histogram over the rationals among Buchsbaum members.
    pub profiles_q: BTreeMap<(i64, i64), u64>,
    /// Same over GF(2).
    pub profiles_gf2: BTreeMap<(i64, i64), u64>,
}

/// Scans every 13-triangle set on 6 vertices with complete edge
/// skeleton — exactly the complexes with h = (1, 3, 6, 3), which meet
/// the Cohen-Macaulay face-count threshold. The theory forces every
/// Buchsbaum member to have Betti profile `(0, 3)` over either field;
/// in particular the profile `(1, 4)`, allowed by the Betti-number
/// bounds alone, never occurs.
pub fn betti_profile_scan() -> BettiProfileScan {
    let triangles = triangles_on(6);
    let mut edge_masks = Vec::with_capacity(triangles.len());
    let edges = Face::from_vertices(&[1, 2, 3, 4, 5, 6])
        .expect("six vertices")
        .subsets_of_card(2);
    for t in &triangles {
        let mut em = 0u32;
        for (ei, e) in edges.iter().enumerate() {
            if e.is_subset_of(*t) {
                em |= 1 << ei;
            }
        }
        edge_masks.push(em);
    }
    let full_edges = (1u32 << edges.len()) - 1;
    let mut out = BettiProfileScan {
        total_sets: 0,
        full_skeleton: 0,
        buchsbaum: 0,
        profiles_q: BTreeMap::new(),
        profiles_gf2: BTreeMap::new(),
    };
    // All 13-subsets of 20 bits, odometer order.
    let k = 13usize;
    let nbits = triangles.len();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.total_sets += 1;
        let mut em = 0u32;
        for &i in &idx {
            em |= edge_masks[i];
        }
        if em == full_edges {
            out.full_skeleton += 1;
            let facets: Vec<Face> = idx.iter().map(|&i| triangles[i]).collect();
            let c = SimplicialComplex::from_faces_unchecked(facets);
            debug_assert_eq!(c.h_vector(), HVector::dim2(3, 6, 3));
            if is_buchsbaum(&c, Field::Rationals) {
                out.buchsbaum += 1;
                let bq = betti_numbers(&c, Field::Rationals);
                let bg = betti_numbers(&c, Field::Gf2);
                *out.profiles_q.entry((bq.get(1), bq.get(2))).or_insert(0) += 1;
                *out.profiles_gf2.entry((bg.get(1), bg.get(2))).or_insert(0) += 1;
            }
        }
        // Advance the combination odometer.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + nbits - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
