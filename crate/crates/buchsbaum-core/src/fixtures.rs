//! Shared example complexes for unit tests.

use crate::complex::SimplicialComplex;

/// Boundary of the octahedron: 2-sphere on 6 vertices, 8 facets.
pub(crate) fn octahedron() -> SimplicialComplex {
    SimplicialComplex::from_vertex_lists(&[
        &[1, 2, 3],
        &[1, 3, 4],
        &[1, 4, 5],
        &[1, 2, 5],
        &[2, 3, 6],
        &[3, 4, 6],
        &[4, 5, 6],
        &[2, 5, 6],
    ])
    .unwrap()
}

/// Five triangles `{i, i+1, i+2}` with vertices mod 5: a Möbius band.
pub(crate) fn pentagon_band() -> SimplicialComplex {
    SimplicialComplex::from_vertex_lists(&[
        &[1, 2, 3],
        &[2, 3, 4],
        &[3, 4, 5],
        &[1, 4, 5],
        &[1, 2, 5],
    ])
    .unwrap()
}

/// Minimal 6-vertex triangulation of the real projective plane.
pub(crate) fn projective_plane() -> SimplicialComplex {
    SimplicialComplex::from_vertex_lists(&[
        &[1, 2, 3],
        &[1, 3, 4],
        &[1, 4, 5],
        &[1, 2, 6],
        &[1, 5, 6],
        &[2, 3, 5],
        &[2, 4, 5],
        &[2, 4, 6],
        &[3, 4, 6],
        &[3, 5, 6],
    ])
    .unwrap()
}

/// Boundary of the tetrahedron: 2-sphere on 4 vertices.
pub(crate) fn tetrahedron_boundary() -> SimplicialComplex {
    SimplicialComplex::from_vertex_lists(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
        .unwrap()
}

/// Two solid triangles sharing no vertices.
pub(crate) fn two_triangles() -> SimplicialComplex {
    SimplicialComplex::from_vertex_lists(&[&[1, 2, 3], &[4, 5, 6]]).unwrap()
}
