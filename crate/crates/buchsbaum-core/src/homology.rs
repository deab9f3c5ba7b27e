//! Exact reduced simplicial homology over the rationals and over GF(2).
//!
//! Boundary matrices come from the augmented chain complex (the empty
//! face is a genuine `(-1)`-chain, so `∂_0` is the 1 × f_0 all-ones
//! augmentation row). Ranks are computed exactly: fraction-free
//! Gaussian elimination on integers for the rationals, bitset row
//! reduction for GF(2). No floating point anywhere.

use crate::complex::{Face, SimplicialComplex};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Field {
    /// Characteristic zero (exact integer arithmetic on minors).
    Rationals,
    /// The two-element field.
    Gf2,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Gf2 => write!(f, "GF(2)"),
        }
    }
}

/// Errors from homology computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomologyError {
    /// Boundary matrices exist for `0 <= k <= dim` only.
    OutOfRange { k: i32, dim: i32 },
}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::OutOfRange { k, dim } => {
                write!(f, "no boundary map in degree {k} (complex dimension {dim})")
            }
        }
    }
}

impl core::error::Error for HomologyError {}

/// Dense row-major integer matrix; entries of boundary matrices are in
/// `{-1, 0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: alloc::vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        self.data[r * self.cols + c] = value;
    }

    /// Matrix product, for `∂∘∂ = 0` style checks.
    pub fn multiply(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }
}

/// The boundary map `∂_k` from `k`-dimensional to `(k-1)`-dimensional
/// chains of the augmented complex: rows are indexed by the
/// `(k-1)`-faces (for `k = 0` the single empty face), columns by the
/// `k`-faces, both in lexicographic order. The entry for removing the
/// `p`-th smallest vertex of a face is `(-1)^p`.
pub fn boundary_matrix(c: &SimplicialComplex, k: i32) -> Result<IntMatrix, HomologyError> {
    let dim = c.dim();
    if k < 0 || k > dim {
        return Err(HomologyError::OutOfRange { k, dim });
    }
    let row_faces = c.faces_of_card(k as u32);
    let col_faces = c.faces_of_card(k as u32 + 1);
    let row_index: BTreeMap<Face, usize> = row_faces
        .iter()
        .enumerate()
        .map(|(i, f)| (*f, i))
        .collect();
    let mut m = IntMatrix::zero(row_faces.len(), col_faces.len());
    for (j, face) in col_faces.iter().enumerate() {
        for (p, v) in face.vertices().enumerate() {
            let sub = face.minus(Face::from_vertices(&[v]).expect("valid vertex"));
            let i = row_index[&sub];
            m.set(i, j, if p % 2 == 0 { 1 } else { -1 });
        }
    }
    Ok(m)
}

/// Exact rank of an integer matrix over the chosen field.
pub fn rank(m: &IntMatrix, field: Field) -> usize {
    match field {
        Field::Rationals => rank_over_rationals(m),
        Field::Gf2 => rank_over_gf2(m),
    }
}

/// Fraction-free (Bareiss) elimination with full pivoting; every
/// intermediate entry is a minor of the input, so for boundary matrices
/// at desk scale `i128` never overflows (checked arithmetic panics
/// rather than wrapping if it ever would).
fn rank_over_rationals(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<i128> = m.data.iter().map(|&e| e as i128).collect();
    let at = |a: &Vec<i128>, r: usize, c: usize| a[r * cols + c];
    let mut rank = 0;
    let mut prev: i128 = 1;
    while rank < rows && rank < cols {
        // Find any nonzero pivot in the remaining submatrix.
        let pivot = (rank..rows)
            .flat_map(|i| (rank..cols).map(move |j| (i, j)))
            .find(|&(i, j)| at(&a, i, j) != 0);
        let Some((pi, pj)) = pivot else { break };
        if pi != rank {
            for j in 0..cols {
                a.swap(pi * cols + j, rank * cols + j);
            }
        }
        if pj != rank {
            for i in 0..rows {
                a.swap(i * cols + pj, i * cols + rank);
            }
        }
        let piv = at(&a, rank, rank);
        for i in rank + 1..rows {
            let head = at(&a, i, rank);
            for j in rank + 1..cols {
                let num = at(&a, i, j)
                    .checked_mul(piv)
                    .and_then(|x| x.checked_sub(head.checked_mul(at(&a, rank, j))?))
                    .expect("exact rank: minor exceeds i128 (matrix too large)");
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                a[i * cols + j] = num / prev;
            }
            a[i * cols + rank] = 0;
        }
        prev = piv;
        rank += 1;
    }
    rank
}

/// Row reduction over GF(2) with rows as bitsets (64 columns per word).
fn rank_over_gf2(m: &IntMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| {
            let mut row = alloc::vec![0u64; words];
            for j in 0..m.cols {
                if m.get(i, j) % 2 != 0 {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..m.cols {
        let (w, b) = (col / 64, col % 64);
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail {
            if row[w] >> b & 1 == 1 {
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Reduced Betti numbers `(β̃_0, ..., β̃_dim)` over a field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiVector {
    pub field: Field,
    entries: Vec<i64>,
}

impl BettiVector {
    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `β̃_i`, zero outside `0..=dim`.
    pub fn get(&self, i: i32) -> i64 {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.entries.get(i))
            .copied()
            .unwrap_or(0)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// All reduced Betti numbers of the complex over `field`, computed from
/// boundary-map ranks: `β̃_k = f_k - rank ∂_k - rank ∂_{k+1}`.
///
/// The complex `{∅}` has an empty Betti vector here; its only nonzero
/// reduced Betti number sits in degree -1, see [`reduced_betti`].
pub fn betti_numbers(c: &SimplicialComplex, field: Field) -> BettiVector {
    let dim = c.dim();
    if dim < 0 {
        return BettiVector {
            field,
            entries: Vec::new(),
        };
    }
    let f = c.f_vector();
    let ranks: Vec<i64> = (0..=dim)
        .map(|k| rank(&boundary_matrix(c, k).expect("k in range"), field) as i64)
        .collect();
    let entries = (0..=dim)
        .map(|k| {
            let outgoing = ranks[k as usize];
            let incoming = if k < dim { ranks[k as usize + 1] } else { 0 };
            f.faces(k) - outgoing - incoming
        })
        .collect();
    BettiVector { field, entries }
}

/// `β̃_i` for any integer `i`, including the degree -1 convention:
/// `β̃_{-1} = 1` exactly for the complex `{∅}` (no vertices).
pub fn reduced_betti(c: &SimplicialComplex, field: Field, i: i32) -> i64 {
    if i == -1 {
        return i64::from(c.num_vertices() == 0);
    }
    if i < -1 || i > c.dim() {
        return 0;
    }
    betti_numbers(c, field).get(i)
}
