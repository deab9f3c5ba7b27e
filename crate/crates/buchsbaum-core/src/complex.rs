//! Simplicial complexes on vertex set `{1, ..., n}`, `n <= 64`, stored
//! as antichains of facet bitmasks.
//!
//! Faces are enumerated on demand; nothing keeps the full face lattice
//! in memory. [`SimplicialComplex::classify_glue`] recognises the three
//! triangle-attachment patterns that change the h-vector of a
//! 2-dimensional complex in a controlled way (each adds exactly one to
//! one of `h_1`, `h_2`, `h_3`) and preserve Buchsbaumness.

use crate::hvec::FVector;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Largest supported vertex id; faces are `u64` bitmasks.
pub const MAX_VERTEX: u32 = 64;

/// Errors from face and complex construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComplexError {
    /// `from_facets` was given no faces at all.
    EmptyInput,
    /// Some vertex in `1..=max` appears in no facet.
    GapVertex { vertex: u32 },
    /// A vertex id outside `1..=64`.
    VertexOutOfRange { vertex: u32 },
    /// A vertex listed twice in one face.
    DuplicateVertex { vertex: u32 },
    /// `link` was asked for a set that is not a face.
    NotAFace { face: Face },
    /// `classify_glue` was asked about a triangle that is already a face.
    FacePresent { face: Face },
    /// A vertex shift (disjoint union) would exceed the id limit.
    TooManyVertices,
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::EmptyInput => write!(f, "a complex needs at least one facet"),
            ComplexError::GapVertex { vertex } => {
                write!(f, "vertex {vertex} appears in no facet (ids must be contiguous from 1)")
            }
            ComplexError::VertexOutOfRange { vertex } => {
                write!(f, "vertex {vertex} outside supported range 1..={MAX_VERTEX}")
            }
            ComplexError::DuplicateVertex { vertex } => {
                write!(f, "repeated vertex {vertex} in a face")
            }
            ComplexError::NotAFace { face } => write!(f, "{face} is not a face"),
            ComplexError::FacePresent { face } => {
                write!(f, "{face} is already a face")
            }
            ComplexError::TooManyVertices => {
                write!(f, "operation would exceed {MAX_VERTEX} vertices")
            }
        }
    }
}

impl core::error::Error for ComplexError {}

/// A face: a finite set of vertices from `1..=64`, stored as a bitmask.
/// The empty face is a legitimate value (`Face::EMPTY`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    /// Builds a face from vertex ids; order is irrelevant, repeats and
    /// out-of-range ids are errors.
    pub fn from_vertices(vertices: &[u32]) -> Result<Self, ComplexError> {
        let mut bits = 0u64;
        for &v in vertices {
            if !(1..=MAX_VERTEX).contains(&v) {
                return Err(ComplexError::VertexOutOfRange { vertex: v });
            }
            let bit = 1u64 << (v - 1);
            if bits & bit != 0 {
                return Err(ComplexError::DuplicateVertex { vertex: v });
            }
            bits |= bit;
        }
        Ok(Face(bits))
    }

    /// The raw bitmask (bit `v-1` set means vertex `v` is in the face).
    pub fn bits(self) -> u64 {
        self.0
    }

    /// Face from a raw bitmask.
    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    /// Number of vertices.
    pub fn card(self) -> u32 {
        self.0.count_ones()
    }

    /// Dimension, `card - 1`; the empty face has dimension -1.
    pub fn dim(self) -> i32 {
        self.card() as i32 - 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, vertex: u32) -> bool {
        (1..=MAX_VERTEX).contains(&vertex) && self.0 & (1 << (vertex - 1)) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    /// Ascending vertex ids.
    pub fn vertices(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Largest vertex id, 0 for the empty face.
    pub fn max_vertex(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    /// All subsets of this face with exactly `k` vertices.
    pub fn subsets_of_card(self, k: u32) -> Vec<Face> {
        let verts: Vec<u32> = self.vertices().collect();
        let mut out = Vec::new();
        if k > verts.len() as u32 {
            return out;
        }
        // Odometer over index combinations.
        let k = k as usize;
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut bits = 0u64;
            for &i in &idx {
                bits |= 1 << (verts[i] - 1);
            }
            out.push(Face(bits));
            // advance
            let mut pos = k;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if idx[pos] + (k - pos) < verts.len() {
                    idx[pos] += 1;
                    for j in pos + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

/// Lexicographic order on the ascending vertex sequences, so
/// `{1,5} < {2,3}` and `{1,2} < {1,2,3}`.
impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                (false, false) => {}
            }
            let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
            match la.cmp(&lb) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                unequal => return unequal,
            }
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// How a candidate triangle meets an existing 2-dimensional complex.
///
/// The first three patterns are exactly the attachments that add the
/// triangle while bumping a single h-vector entry by one and preserving
/// Buchsbaumness; anything else is [`GlueClass::Unsupported`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlueClass {
    /// The complex contains the full triangle boundary: filling the hole
    /// adds `(0,0,0,1)` to the h-vector.
    ThreeEdges,
    /// Exactly two of the three edges are present: adds `(0,0,1,0)`.
    TwoEdges,
    /// Exactly one edge is present and the opposite vertex is new:
    /// adds `(0,1,0,0)`.
    OneEdge,
    /// Any other intersection pattern (no controlled h-vector effect).
    Unsupported,
}

impl GlueClass {
    /// The h-vector increment of the attachment, `None` for
    /// [`GlueClass::Unsupported`].
    pub fn h_delta(self) -> Option<[i64; 4]> {
        match self {
            GlueClass::ThreeEdges => Some([0, 0, 0, 1]),
            GlueClass::TwoEdges => Some([0, 0, 1, 0]),
            GlueClass::OneEdge => Some([0, 1, 0, 0]),
            GlueClass::Unsupported => None,
        }
    }
}

impl fmt::Display for GlueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GlueClass::ThreeEdges => "three-edges",
            GlueClass::TwoEdges => "two-edges",
            GlueClass::OneEdge => "one-edge",
            GlueClass::Unsupported => "unsupported",
        };
        write!(f, "{name}")
    }
}

/// A simplicial complex given by its facets (inclusion-maximal faces).
///
/// Facets are kept lexicographically sorted and form an antichain; the
/// complex `{∅}` (sole facet the empty face) is allowed and arises as
/// the link of a facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    support: Face,
}

impl SimplicialComplex {
    /// Builds a complex from faces (not necessarily maximal; dominated
    /// ones are dropped). Vertex ids must cover `1..=max` with no gap.
    pub fn from_facets<I: IntoIterator<Item = Face>>(faces: I) -> Result<Self, ComplexError> {
        let faces: Vec<Face> = faces.into_iter().collect();
        if faces.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        let c = Self::from_faces_unchecked(faces);
        let max = c.support.max_vertex();
        if max > 0 {
            let full = if max == 64 { u64::MAX } else { (1u64 << max) - 1 };
            let missing = full & !c.support.bits();
            if missing != 0 {
                return Err(ComplexError::GapVertex {
                    vertex: missing.trailing_zeros() + 1,
                });
            }
        }
        Ok(c)
    }

    /// Convenience constructor from vertex-id lists, mainly for tests
    /// and literals.
    pub fn from_vertex_lists(lists: &[&[u32]]) -> Result<Self, ComplexError> {
        let faces = lists
            .iter()
            .map(|l| Face::from_vertices(l))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_facets(faces)
    }

    /// Internal constructor: reduces to an antichain and sorts, but does
    /// not require contiguous vertex ids (links keep original labels).
    pub(crate) fn from_faces_unchecked(mut faces: Vec<Face>) -> Self {
        faces.sort_unstable_by_key(|f| core::cmp::Reverse(f.card()));
        let mut facets: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !facets.iter().any(|kept| f.is_subset_of(*kept)) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        let support = facets
            .iter()
            .fold(Face::EMPTY, |acc, f| acc.union(*f));
        SimplicialComplex { facets, support }
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Union of all facets (the vertex set actually used).
    pub fn support(&self) -> Face {
        self.support
    }

    /// Largest vertex id (equals the vertex count for gap-free
    /// complexes), 0 for `{∅}`.
    pub fn max_vertex(&self) -> u32 {
        self.support.max_vertex()
    }

    /// Number of vertices.
    pub fn num_vertices(&self) -> u32 {
        self.support.card()
    }

    /// Dimension: largest facet cardinality minus one; `{∅}` has
    /// dimension -1.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    /// All facets have the same dimension.
    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.facets.iter().any(|facet| f.is_subset_of(*facet))
    }

    /// All faces with exactly `k` vertices, lexicographically sorted.
    /// `k = 0` gives the empty face (present in every complex).
    pub fn faces_of_card(&self, k: u32) -> Vec<Face> {
        if k == 0 {
            return alloc::vec![Face::EMPTY];
        }
        let mut set = BTreeSet::new();
        for facet in &self.facets {
            for sub in facet.subsets_of_card(k) {
                set.insert(sub);
            }
        }
        set.into_iter().collect()
    }

    /// Every face including the empty one, by ascending cardinality then
    /// lexicographically.
    pub fn all_faces(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for k in 0..=(self.dim() + 1).max(0) as u32 {
            out.extend(self.faces_of_card(k));
        }
        out
    }

    /// Face-count vector `(f_{-1}, f_0, ..., f_{dim})`.
    pub fn f_vector(&self) -> FVector {
        let mut entries = alloc::vec![1i64];
        for k in 1..=(self.dim() + 1) as u32 {
            entries.push(self.faces_of_card(k).len() as i64);
        }
        FVector::new(entries).expect("leading entry is 1")
    }

    /// h-vector, via the face counts.
    pub fn h_vector(&self) -> crate::hvec::HVector {
        self.f_vector().to_h()
    }

    /// The link of `f`: all faces disjoint from `f` whose union with `f`
    /// is a face. Vertex ids are preserved (so the result may have
    /// gaps). Errors when `f` is not a face.
    pub fn link(&self, f: Face) -> Result<SimplicialComplex, ComplexError> {
        if !self.contains_face(f) {
            return Err(ComplexError::NotAFace { face: f });
        }
        let faces = self
            .facets
            .iter()
            .filter(|facet| f.is_subset_of(**facet))
            .map(|facet| facet.minus(f))
            .collect();
        Ok(Self::from_faces_unchecked(faces))
    }

    /// Vertex sets of the connected components (two vertices are
    /// connected when they share a facet), sorted.
    pub fn connected_components(&self) -> Vec<Face> {
        let mut parent: [u8; 65] = core::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; 65], v: u8) -> u8 {
            let mut v = v;
            while parent[v as usize] != v {
                parent[v as usize] = parent[parent[v as usize] as usize];
                v = parent[v as usize];
            }
            v
        }
        for facet in &self.facets {
            let mut verts = facet.vertices();
            if let Some(first) = verts.next() {
                let r = find(&mut parent, first as u8);
                for v in verts {
                    let rv = find(&mut parent, v as u8);
                    parent[rv as usize] = r;
                }
            }
        }
        let mut comps: alloc::collections::BTreeMap<u8, u64> = alloc::collections::BTreeMap::new();
        for v in self.support.vertices() {
            let r = find(&mut parent, v as u8);
            *comps.entry(r).or_insert(0) |= 1 << (v - 1);
        }
        let mut out: Vec<Face> = comps.into_values().map(Face::from_bits).collect();
        out.sort_unstable();
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Disjoint union; vertices of `other` are shifted up by
    /// `self.max_vertex()`.
    pub fn disjoint_union(&self, other: &SimplicialComplex) -> Result<Self, ComplexError> {
        let shift = self.max_vertex();
        if shift + other.max_vertex() > MAX_VERTEX {
            return Err(ComplexError::TooManyVertices);
        }
        let faces = self
            .facets
            .iter()
            .copied()
            .chain(
                other
                    .facets
                    .iter()
                    .map(|f| Face::from_bits(f.bits() << shift)),
            )
            .collect();
        Ok(Self::from_faces_unchecked(faces))
    }

    /// The complex together with one extra facet (and its subfaces).
    pub fn add_facet(&self, t: Face) -> Self {
        let mut faces = self.facets.clone();
        faces.push(t);
        Self::from_faces_unchecked(faces)
    }

    /// Classifies how the triangle `t` meets this 2-dimensional complex;
    /// see [`GlueClass`]. Errors when `t` is already a face; returns
    /// [`GlueClass::Unsupported`] when the complex is not 2-dimensional,
    /// `t` is not a triangle, or the intersection is not one of the
    /// three recognised patterns. Buchsbaumness of the complex is the
    /// caller's precondition, not checked here.
    pub fn classify_glue(&self, t: Face) -> Result<GlueClass, ComplexError> {
        if self.contains_face(t) {
            return Err(ComplexError::FacePresent { face: t });
        }
        if self.dim() != 2 || t.card() != 3 {
            return Ok(GlueClass::Unsupported);
        }
        let edges = t.subsets_of_card(2);
        let present: Vec<Face> = edges
            .iter()
            .copied()
            .filter(|e| self.contains_face(*e))
            .collect();
        Ok(match present.len() {
            3 => GlueClass::ThreeEdges,
            2 => GlueClass::TwoEdges,
            1 => {
                let opposite = t.minus(present[0]);
                if opposite.is_subset_of(self.support) {
                    // The lone vertex already belongs to the complex, so
                    // the intersection is bigger than one edge.
                    GlueClass::Unsupported
                } else {
                    GlueClass::OneEdge
                }
            }
            _ => GlueClass::Unsupported,
        })
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{facet}")?;
        }
        write!(f, ">")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    use crate::fixtures::{octahedron, pentagon_band};

    fn face(vs: &[u32]) -> Face {
        Face::from_vertices(vs).unwrap()
    }

    #[test]
    fn face_construction_and_errors() {
        let f = face(&[3, 1, 2]);
        assert_eq!(f.vertices().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(f.card(), 3);
        assert_eq!(f.dim(), 2);
        assert_eq!(format!("{f}"), "{1,2,3}");
        assert_eq!(
            Face::from_vertices(&[1, 2, 2]),
            Err(ComplexError::DuplicateVertex { vertex: 2 })
        );
        assert_eq!(
            Face::from_vertices(&[0]),
            Err(ComplexError::VertexOutOfRange { vertex: 0 })
        );
        assert_eq!(
            Face::from_vertices(&[65]),
            Err(ComplexError::VertexOutOfRange { vertex: 65 })
        );
        assert!(Face::from_vertices(&[64]).is_ok());
        assert_eq!(Face::EMPTY.dim(), -1);
        assert_eq!(format!("{}", Face::EMPTY), "{}");
    }

    #[test]
    fn face_order_is_lexicographic_on_vertex_lists() {
        let mut faces = [
            face(&[2, 3]),
            face(&[1, 5]),
            face(&[1, 2, 3]),
            face(&[1, 2]),
            Face::EMPTY,
            face(&[1]),
        ];
        faces.sort();
        let shown: Vec<_> = faces.iter().map(|f| format!("{f}")).collect();
        assert_eq!(shown, vec!["{}", "{1}", "{1,2}", "{1,2,3}", "{1,5}", "{2,3}"]);
    }

    #[test]
    fn subsets_of_card_enumerates_combinations() {
        let f = face(&[1, 3, 5]);
        let pairs: Vec<_> = f.subsets_of_card(2).iter().map(|s| format!("{s}")).collect();
        assert_eq!(pairs, vec!["{1,3}", "{1,5}", "{3,5}"]);
        assert_eq!(f.subsets_of_card(0), vec![Face::EMPTY]);
        assert_eq!(f.subsets_of_card(4), vec![]);
    }

    #[test]
    fn from_facets_reduces_to_antichain() {
        let c = SimplicialComplex::from_facets(vec![
            face(&[1, 2]),
            face(&[1, 2, 3]),
            face(&[3]),
        ])
        .unwrap();
        assert_eq!(c.facets(), &[face(&[1, 2, 3])]);
        assert_eq!(c.max_vertex(), 3);
        assert_eq!(c.num_vertices(), 3);
    }

    #[test]
    fn from_facets_rejects_bad_input() {
        assert_eq!(
            SimplicialComplex::from_facets(Vec::new()),
            Err(ComplexError::EmptyInput)
        );
        assert_eq!(
            SimplicialComplex::from_vertex_lists(&[&[1, 3]]),
            Err(ComplexError::GapVertex { vertex: 2 })
        );
        assert_eq!(
            SimplicialComplex::from_vertex_lists(&[&[2, 3]]),
            Err(ComplexError::GapVertex { vertex: 1 })
        );
    }

    #[test]
    fn empty_face_only_complex() {
        let c = SimplicialComplex::from_facets(vec![Face::EMPTY]).unwrap();
        assert_eq!(c.dim(), -1);
        assert_eq!(c.f_vector().entries(), &[1]);
        assert_eq!(c.num_vertices(), 0);
        assert_eq!(c.connected_components().len(), 0);
    }

    #[test]
    fn octahedron_face_counts() {
        let c = octahedron();
        assert_eq!(c.dim(), 2);
        assert!(c.is_pure());
        assert!(c.is_connected());
        assert_eq!(c.f_vector().entries(), &[1, 6, 12, 8]);
        assert_eq!(c.h_vector().entries(), &[1, 3, 3, 1]);
    }

    #[test]
    fn pentagon_band_face_counts() {
        let c = pentagon_band();
        assert_eq!(c.f_vector().entries(), &[1, 5, 10, 5]);
        assert_eq!(c.h_vector().entries(), &[1, 2, 3, -1]);
    }

    #[test]
    fn link_preserves_vertex_labels() {
        let c = octahedron();
        let lk = c.link(face(&[1])).unwrap();
        // Link of vertex 1 is the square 2-3-4-5.
        assert_eq!(lk.dim(), 1);
        assert_eq!(lk.f_vector().entries(), &[1, 4, 4]);
        assert_eq!(
            lk.facets(),
            &[face(&[2, 3]), face(&[2, 5]), face(&[3, 4]), face(&[4, 5])]
        );
        let lk = c.link(face(&[1, 2])).unwrap();
        assert_eq!(lk.facets(), &[face(&[3]), face(&[5])]);
        // Link of a facet is the empty-face complex.
        let lk = c.link(face(&[1, 2, 3])).unwrap();
        assert_eq!(lk.facets(), &[Face::EMPTY]);
        assert_eq!(lk.dim(), -1);
        // Link of the empty face is the whole complex.
        assert_eq!(c.link(Face::EMPTY).unwrap(), c);
        assert_eq!(
            c.link(face(&[1, 6])),
            Err(ComplexError::NotAFace { face: face(&[1, 6]) })
        );
    }

    // For every complex, summing (k-2)-face counts of vertex links
    // counts each (k-1)-face once per vertex: sum_v f_{k-2}(lk v) =
    // k * f_{k-1}.
    #[test]
    fn vertex_link_face_count_identity() {
        for c in [octahedron(), pentagon_band()] {
            let f = c.f_vector();
            for k in 1..=3i32 {
                let total: i64 = c
                    .support()
                    .vertices()
                    .map(|v| {
                        c.link(Face::from_vertices(&[v]).unwrap())
                            .unwrap()
                            .f_vector()
                            .faces(k - 2)
                    })
                    .sum();
                assert_eq!(total, k as i64 * f.faces(k - 1), "k = {k}");
            }
        }
    }

    #[test]
    fn components_and_disjoint_union() {
        let t = SimplicialComplex::from_vertex_lists(&[&[1, 2, 3]]).unwrap();
        let two = t.disjoint_union(&t).unwrap();
        assert_eq!(two.facets(), &[face(&[1, 2, 3]), face(&[4, 5, 6])]);
        assert_eq!(two.connected_components().len(), 2);
        assert!(!two.is_connected());
        assert_eq!(two.h_vector().entries(), &[1, 3, -3, 1]);
        // h(a ⊔ b) = h(a) + h(b) + (-1, 3, -3, 1) in dimension 2.
        let a = octahedron();
        let b = pentagon_band();
        let u = a.disjoint_union(&b).unwrap();
        let expect: Vec<i64> = a
            .h_vector()
            .entries()
            .iter()
            .zip(b.h_vector().entries())
            .zip([-1, 3, -3, 1])
            .map(|((x, y), z)| x + y + z)
            .collect();
        assert_eq!(u.h_vector().entries(), &expect[..]);
    }

    #[test]
    fn classify_glue_patterns() {
        // Pentagon band has the complete 1-skeleton, so any missing
        // triangle shows all three edges.
        let band = pentagon_band();
        assert_eq!(
            band.classify_glue(face(&[1, 3, 5])).unwrap(),
            GlueClass::ThreeEdges
        );
        assert_eq!(
            band.classify_glue(face(&[1, 2, 3])),
            Err(ComplexError::FacePresent { face: face(&[1, 2, 3]) })
        );

        let t = SimplicialComplex::from_vertex_lists(&[&[1, 2, 3]]).unwrap();
        // New vertex hanging off one edge.
        assert_eq!(t.classify_glue(face(&[1, 2, 4])).unwrap(), GlueClass::OneEdge);
        // No shared edge at all.
        assert_eq!(
            t.classify_glue(face(&[4, 5, 6])).unwrap(),
            GlueClass::Unsupported
        );

        let two = SimplicialComplex::from_vertex_lists(&[&[1, 2, 3], &[1, 2, 4]]).unwrap();
        // Edges {1,3} and {1,4} present, {3,4} missing.
        assert_eq!(two.classify_glue(face(&[1, 3, 4])).unwrap(), GlueClass::TwoEdges);

        // One edge present but the opposite vertex already in use.
        let chain = SimplicialComplex::from_vertex_lists(&[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        assert_eq!(
            chain.classify_glue(face(&[1, 2, 4])).unwrap(),
            GlueClass::Unsupported
        );

        // Non-2-dimensional base or non-triangle candidates.
        let graph = SimplicialComplex::from_vertex_lists(&[&[1, 2], &[2, 3], &[1, 3]]).unwrap();
        assert_eq!(
            graph.classify_glue(face(&[1, 2, 3])).unwrap(),
            GlueClass::Unsupported
        );
        assert_eq!(
            band.classify_glue(face(&[1, 3])),
            Err(ComplexError::FacePresent { face: face(&[1, 3]) })
        );
    }

    #[test]
    fn glue_deltas_match_recomputed_h() {
        let cases = [
            (pentagon_band(), face(&[1, 3, 5])),
            (
                SimplicialComplex::from_vertex_lists(&[&[1, 2, 3]]).unwrap(),
                face(&[1, 2, 4]),
            ),
            (
                SimplicialComplex::from_vertex_lists(&[&[1, 2, 3], &[1, 2, 4]]).unwrap(),
                face(&[1, 3, 4]),
            ),
        ];
        for (c, t) in cases {
            let class = c.classify_glue(t).unwrap();
            let delta = class.h_delta().unwrap();
            let before = c.h_vector();
            let after = c.add_facet(t).h_vector();
            for (i, &expected) in delta.iter().enumerate() {
                assert_eq!(
                    after.entry(i) - before.entry(i),
                    expected,
                    "{c} + {t} ({class}) at h_{i}"
                );
            }
        }
    }

    #[test]
    fn disjoint_union_vertex_limit() {
        let big = SimplicialComplex::from_vertex_lists(&[&(1..=33).collect::<Vec<_>>()]).unwrap();
        assert_eq!(
            big.disjoint_union(&big),
            Err(ComplexError::TooManyVertices)
        );
    }

    #[test]
    fn display_formats() {
        let t = SimplicialComplex::from_vertex_lists(&[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        assert_eq!(format!("{t}"), "<{1,2,3}, {2,3,4}>");
    }
}
