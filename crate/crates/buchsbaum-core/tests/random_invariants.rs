//! Cross-checks on seeded random complexes: chain-complex identities,
//! Euler characteristic, the counted link sum versus the matrix-rank
//! identity, field-independence facts, and the audited glue classes.

use buchsbaum_core::complex::GlueClass;
use buchsbaum_core::homology::{betti_numbers, boundary_matrix, reduced_betti};
use buchsbaum_core::properties::{
    is_buchsbaum, is_buchsbaum_definitional, link_betti_identity, link_cycle_sum_2dim,
};
use buchsbaum_core::{Face, Field, SimplicialComplex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BOTH_FIELDS: [Field; 2] = [Field::Rationals, Field::Gf2];

/// Random complex on up to `max_n` vertices with faces of up to
/// `max_card` vertices; labels are compacted so construction succeeds.
fn random_complex(rng: &mut ChaCha8Rng, max_n: u32, max_card: u32) -> SimplicialComplex {
    loop {
        let n = rng.gen_range(3..=max_n);
        let count = rng.gen_range(1..=3 * n as usize);
        let mut faces = Vec::with_capacity(count);
        for _ in 0..count {
            let card = rng.gen_range(1..=max_card.min(n));
            let mut verts = Vec::new();
            while (verts.len() as u32) < card {
                let v = rng.gen_range(1..=n);
                if !verts.contains(&v) {
                    verts.push(v);
                }
            }
            faces.push(verts);
        }
        // Compact the labels to 1..=k so the support has no gaps.
        let mut used: Vec<u32> = faces.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        let relabel = |v: u32| used.binary_search(&v).expect("v used") as u32 + 1;
        let lists: Vec<Vec<u32>> = faces
            .iter()
            .map(|f| f.iter().map(|&v| relabel(v)).collect())
            .collect();
        let refs: Vec<&[u32]> = lists.iter().map(|l| l.as_slice()).collect();
        if let Ok(c) = SimplicialComplex::from_vertex_lists(&refs) {
            return c;
        }
    }
}

/// Random pure 2-dimensional complex covering all its vertices.
fn random_triangle_complex(rng: &mut ChaCha8Rng, max_n: u32) -> SimplicialComplex {
    loop {
        let n = rng.gen_range(4..=max_n);
        let count = rng.gen_range(2..=2 * n as usize);
        let mut faces = Vec::with_capacity(count);
        for _ in 0..count {
            let mut verts = Vec::new();
            while verts.len() < 3 {
                let v = rng.gen_range(1..=n);
                if !verts.contains(&v) {
                    verts.push(v);
                }
            }
            faces.push(Face::from_vertices(&verts).expect("distinct in-range"));
        }
        if let Ok(c) = SimplicialComplex::from_facets(faces) {
            if c.dim() == 2 && c.is_pure() {
                return c;
            }
        }
    }
}

#[test]
fn boundary_of_boundary_vanishes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0B0_0001);
    for _ in 0..150 {
        let c = random_complex(&mut rng, 9, 4);
        for k in 0..c.dim() {
            let d_k = boundary_matrix(&c, k).unwrap();
            let d_k1 = boundary_matrix(&c, k + 1).unwrap();
            assert!(
                d_k.multiply(&d_k1).is_zero(),
                "d_{k} . d_{} != 0 on {:?}",
                k + 1,
                c.facets()
            );
        }
    }
}

#[test]
fn euler_characteristic_from_betti_numbers() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0B0_0002);
    for _ in 0..150 {
        let c = random_complex(&mut rng, 9, 4);
        let f = c.f_vector();
        let faces_alternating: i64 = (0..=c.dim())
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                sign * f.faces(k)
            })
            .sum();
        for field in BOTH_FIELDS {
            let betti = betti_numbers(&c, field);
            let betti_alternating: i64 = (0..=c.dim())
                .map(|k| {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    sign * betti.get(k)
                })
                .sum();
            assert_eq!(
                faces_alternating - 1,
                betti_alternating,
                "reduced Euler characteristic over {field} on {:?}",
                c.facets()
            );
        }
    }
}

#[test]
fn graph_betti_numbers_are_field_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0B0_0003);
    for _ in 0..200 {
        let c = random_complex(&mut rng, 9, 2);
        assert!(c.dim() <= 1);
        assert_eq!(
            betti_numbers(&c, Field::Rationals).entries(),
            betti_numbers(&c, Field::Gf2).entries(),
            "{:?}",
            c.facets()
        );
    }
}

#[test]
fn counted_link_sum_matches_matrix_ranks() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0B0_0004);
    let mut buchsbaum_seen = 0u32;
    for _ in 0..120 {
        let c = random_triangle_complex(&mut rng, 8);
        // The counting shortcut (f_1 - f_0 + components per link) must
        // agree with the rank-computed graph Betti number on any pure
        // 2-complex, whatever the field.
        for field in BOTH_FIELDS {
            let rank_sum: i64 = c
                .support()
                .vertices()
                .map(|v| {
                    let lk = c.link(Face::from_vertices(&[v]).unwrap()).unwrap();
                    betti_numbers(&lk, field).get(1)
                })
                .sum();
            assert_eq!(
                rank_sum,
                link_cycle_sum_2dim(&c),
                "link sum over {field} on {:?}",
                c.facets()
            );
        }
        // On the Buchsbaum draws the full identity must hold.
        if is_buchsbaum(&c, Field::Rationals) {
            buchsbaum_seen += 1;
            let h = c.h_vector();
            for field in BOTH_FIELDS {
                let ident = link_betti_identity(&c, field).unwrap();
                assert_eq!(ident.lhs, 3 * h.entry(3) + h.entry(2));
                assert!(ident.holds(), "identity over {field} on {:?}", c.facets());
            }
        }
    }
    assert!(buchsbaum_seen >= 5, "only {buchsbaum_seen} Buchsbaum draws");
}

#[test]
fn fast_buchsbaum_test_matches_homological_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0B0_0005);
    for _ in 0..120 {
        let c = random_triangle_complex(&mut rng, 7);
        for field in BOTH_FIELDS {
            assert_eq!(
                is_buchsbaum(&c, field),
                is_buchsbaum_definitional(&c, field),
                "over {field} on {:?}",
                c.facets()
            );
        }
    }
}

#[test]
fn glue_classification_predicts_h_delta() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xB0B0_0006);
    let mut classified = 0u32;
    for _ in 0..400 {
        let c = random_triangle_complex(&mut rng, 7);
        let n = c.max_vertex();
        // A random absent triangle on the same vertex set.
        let all = Face::from_vertices(&(1..=n).collect::<Vec<_>>()).unwrap();
        let candidates: Vec<Face> = all
            .subsets_of_card(3)
            .into_iter()
            .filter(|t| !c.contains_face(*t))
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let t = candidates[rng.gen_range(0..candidates.len())];
        let class = c.classify_glue(t).unwrap();
        if class == GlueClass::Unsupported {
            continue;
        }
        classified += 1;
        let delta = class.h_delta().unwrap();
        let mut facets = c.facets().to_vec();
        facets.push(t);
        let glued = SimplicialComplex::from_facets(facets).unwrap();
        let before = c.h_vector();
        let after = glued.h_vector();
        for (i, &d) in delta.iter().enumerate() {
            assert_eq!(
                after.entry(i) - before.entry(i),
                d,
                "class {class} gluing {t} onto {:?}",
                c.facets()
            );
        }
    }
    assert!(classified >= 100, "only {classified} classifiable glues seen");
}

#[test]
fn degree_minus_one_convention() {
    // {∅} is the link of a facet; its only homology sits in degree -1.
    let c = SimplicialComplex::from_vertex_lists(&[&[1, 2, 3]]).unwrap();
    let link = c.link(c.facets()[0]).unwrap();
    assert_eq!(link.dim(), -1);
    for field in BOTH_FIELDS {
        assert_eq!(reduced_betti(&link, field, -1), 1);
        assert_eq!(reduced_betti(&link, field, 0), 0);
    }
    // Nonempty complexes have no degree -1 homology.
    for field in BOTH_FIELDS {
        assert_eq!(reduced_betti(&c, field, -1), 0);
    }
}
