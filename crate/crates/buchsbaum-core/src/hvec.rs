//! f-vectors, h-vectors, Macaulay representations, and the arithmetic
//! characterizations of realizable h-vectors.
//!
//! All arithmetic is exact. The two central predicates are
//! [`connected_buchsbaum_check`] (is `h` the h-vector of a *connected*
//! two-dimensional Buchsbaum complex?) and [`buchsbaum_split`] (same
//! question without connectivity, answered by peeling off disjoint
//! triangles).

use alloc::vec::Vec;
use core::fmt;

/// Errors from h-vector arithmetic and predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HvecError {
    /// A face-count vector was empty or did not start with the required
    /// leading 1.
    LengthMismatch,
    /// A predicate specific to 2-dimensional complexes (h-vector length
    /// 4) or to a minimum dimension was given a vector of another
    /// length.
    WrongDimension { expected: usize, got: usize },
    /// Macaulay representations are defined for positive integers only.
    NonPositiveInput,
    /// The discriminant `8*h1 + 8*h2 + 9` of the closed-form split
    /// count was negative.
    NegativeRadicand,
}

impl fmt::Display for HvecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HvecError::LengthMismatch => {
                write!(f, "vector must be nonempty and start with 1")
            }
            HvecError::WrongDimension { expected, got } => {
                write!(f, "expected vector of length {expected}, got {got}")
            }
            HvecError::NonPositiveInput => {
                write!(f, "Macaulay representation requires a positive integer")
            }
            HvecError::NegativeRadicand => {
                write!(f, "discriminant 8*h1 + 8*h2 + 9 is negative")
            }
        }
    }
}

impl core::error::Error for HvecError {}

/// Exact binomial coefficient `C(n, k)`, zero when `n < k` or either
/// argument is negative.
///
/// Panics if the value overflows `i64`; see [`binomial_checked`] for the
/// total version.
pub fn binomial(n: i64, k: i64) -> i64 {
    binomial_checked(n, k).expect("binomial coefficient overflows i64")
}

/// [`binomial`] returning `None` on `i64` overflow instead of panicking.
pub fn binomial_checked(n: i64, k: i64) -> Option<i64> {
    if k < 0 || n < k {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for j in 0..k {
        // Multiply before dividing so every division is exact.
        acc = acc.checked_mul((n - j) as i128)?;
        acc /= (j + 1) as i128;
        if acc > i64::MAX as i128 {
            return None;
        }
    }
    Some(acc as i64)
}

/// Face-count vector `(f_{-1}, f_0, ..., f_{d-1})` of a `(d-1)`-dimensional
/// complex; the leading entry is always `f_{-1} = 1` (the empty face).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FVector(Vec<i64>);

/// h-vector `(h_0, ..., h_d)`; the leading entry is always `h_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HVector(Vec<i64>);

impl FVector {
    /// Wraps `(f_{-1}, f_0, ..., f_{d-1})`; the vector must be nonempty
    /// with leading entry 1.
    pub fn new(entries: Vec<i64>) -> Result<Self, HvecError> {
        if entries.first() != Some(&1) {
            return Err(HvecError::LengthMismatch);
        }
        Ok(FVector(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Number of entries, i.e. `d + 1` for a `(d-1)`-dimensional complex.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always holds f_{-1}
    }

    /// `f_k` for `k` in `-1..=d-1`; zero outside that range.
    pub fn faces(&self, k: i32) -> i64 {
        usize::try_from(k + 1)
            .ok()
            .and_then(|i| self.0.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// h-vector of the same complex, via
    /// `sum_i f_{i-1} (x-1)^{d-i} = sum_i h_i x^{d-i}`.
    pub fn to_h(&self) -> HVector {
        let d = self.0.len() - 1;
        let h = (0..=d)
            .map(|j| {
                (0..=j)
                    .map(|i| {
                        let c = binomial((d - i) as i64, (j - i) as i64);
                        let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
                        sign * c * self.0[i]
                    })
                    .sum()
            })
            .collect();
        HVector(h)
    }
}

impl HVector {
    /// Wraps `(h_0, ..., h_d)`; the vector must be nonempty with leading
    /// entry 1.
    pub fn new(entries: Vec<i64>) -> Result<Self, HvecError> {
        if entries.first() != Some(&1) {
            return Err(HvecError::LengthMismatch);
        }
        Ok(HVector(entries))
    }

    /// Convenience constructor for the ubiquitous length-4 case.
    pub fn dim2(h1: i64, h2: i64, h3: i64) -> Self {
        HVector(alloc::vec![1, h1, h2, h3])
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Number of entries, i.e. `d + 1` for a `(d-1)`-dimensional complex.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always holds h_0
    }

    /// `h_i`, zero outside `0..=d`.
    pub fn entry(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Face-count vector of the same complex (inverse of
    /// [`FVector::to_h`]).
    pub fn to_f(&self) -> FVector {
        let d = self.0.len() - 1;
        let f = (0..=d)
            .map(|j| {
                (0..=j)
                    .map(|i| binomial((d - i) as i64, (j - i) as i64) * self.0[i])
                    .sum()
            })
            .collect();
        FVector(f)
    }
}

fn fmt_tuple(entries: &[i64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, ")")
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(&self.0, f)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(&self.0, f)
    }
}

/// The unique Macaulay representation of a positive integer `a` for an
/// index `d`:
///
/// `a = C(a(d)+d, d) + C(a(d-1)+d-1, d-1) + ... + C(a(k)+k, k)`
///
/// with `a(d) >= a(d-1) >= ... >= a(k) >= 0` and `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    /// Pairs `(a(i), i)` in order of decreasing `i`, from `i = d` down to
    /// `i = k`.
    terms: Vec<(i64, u32)>,
}

impl MacaulayRep {
    pub fn terms(&self) -> &[(i64, u32)] {
        &self.terms
    }

    /// Reconstructs the represented integer.
    pub fn value(&self) -> i64 {
        self.terms
            .iter()
            .map(|&(a, i)| binomial(a + i as i64, i as i64))
            .sum()
    }

    /// The shifted sum `C(a(d)+d+1, d+1) + ... + C(a(k)+k+1, k+1)`,
    /// i.e. the value of `a^<d>` for the represented `a`.
    pub fn shifted_value(&self) -> i64 {
        self.terms
            .iter()
            .map(|&(a, i)| binomial(a + i as i64 + 1, i as i64 + 1))
            .sum()
    }
}

impl fmt::Display for MacaulayRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, &(a, i)) in self.terms.iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "C({},{})", a + i as i64, i)?;
        }
        Ok(())
    }
}

/// Largest `m` with `C(m, i) <= target`, for `i >= 1`, `target >= 1`.
fn largest_binomial_top(target: i64, i: i64) -> i64 {
    debug_assert!(i >= 1 && target >= 1);
    let mut lo = i; // C(i, i) = 1 <= target
    let mut hi = i + 1;
    while binomial_checked(hi, i).is_some_and(|c| c <= target) {
        lo = hi;
        hi *= 2;
    }
    // Invariant: C(lo, i) <= target < C(hi, i) (overflow counts as >).
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial_checked(mid, i).is_some_and(|c| c <= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy Macaulay representation of `a` for index `d`.
///
/// Errors with [`HvecError::NonPositiveInput`] when `a < 1` or `d < 1`.
pub fn macaulay_rep(a: i64, d: u32) -> Result<MacaulayRep, HvecError> {
    if a < 1 || d < 1 {
        return Err(HvecError::NonPositiveInput);
    }
    let mut terms = Vec::new();
    let mut rest = a;
    let mut i = d as i64;
    while rest > 0 {
        debug_assert!(i >= 1, "greedy decomposition must stop at index 1");
        let m = largest_binomial_top(rest, i);
        terms.push((m - i, i as u32));
        rest -= binomial(m, i);
        i -= 1;
    }
    Ok(MacaulayRep { terms })
}

/// The Macaulay bound `a^<d>`: shift every binomial in the
/// representation of `a` up by one in both arguments. By convention
/// `0^<d> = 0`.
///
/// Errors with [`HvecError::NonPositiveInput`] when `a < 0`.
pub fn macaulay_power(a: i64, d: u32) -> Result<i64, HvecError> {
    match a {
        0 => Ok(0),
        _ if a < 0 => Err(HvecError::NonPositiveInput),
        _ => Ok(macaulay_rep(a, d)?.shifted_value()),
    }
}

/// Is `h` an M-vector, i.e. the h-vector of some Cohen-Macaulay complex
/// (equivalently the Hilbert function of a standard graded algebra)?
///
/// Requires `h_0 = 1`, `h_1 >= 0`, and `0 <= h_{i+1} <= h_i^<i>` for
/// every `i >= 1`.
pub fn is_m_vector(h: &[i64]) -> bool {
    if h.first() != Some(&1) {
        return false;
    }
    if h.iter().skip(1).any(|&e| e < 0) {
        return false;
    }
    (1..h.len() - 1).all(|i| {
        let bound = macaulay_power(h[i], i as u32).expect("entries checked nonnegative");
        h[i + 1] <= bound
    })
}

/// Verdict of [`connected_buchsbaum_check`], one flag per condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectedBuchsbaumCheck {
    /// `0 <= h_1`.
    pub h1_nonnegative: bool,
    /// `0 <= h_2 <= C(h_1 + 1, 2)`.
    pub h2_in_range: bool,
    /// `-h_2 / 3 <= h_3 <= h_2^<2>` (the lower bound evaluated exactly
    /// as `3*h_3 >= -h_2`).
    pub h3_in_range: bool,
}

impl ConnectedBuchsbaumCheck {
    pub fn passes(&self) -> bool {
        self.h1_nonnegative && self.h2_in_range && self.h3_in_range
    }
}

impl fmt::Display for ConnectedBuchsbaumCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |ok: bool| if ok { "ok" } else { "violated" };
        write!(
            f,
            "h1 >= 0: {}; 0 <= h2 <= C(h1+1, 2): {}; -h2/3 <= h3 <= h2^<2>: {}",
            flag(self.h1_nonnegative),
            flag(self.h2_in_range),
            flag(self.h3_in_range)
        )
    }
}

/// Decides whether `(1, h_1, h_2, h_3)` is the h-vector of a connected
/// two-dimensional Buchsbaum simplicial complex.
///
/// Errors with [`HvecError::WrongDimension`] unless `h` has length 4.
pub fn connected_buchsbaum_check(h: &HVector) -> Result<ConnectedBuchsbaumCheck, HvecError> {
    if h.len() != 4 {
        return Err(HvecError::WrongDimension {
            expected: 4,
            got: h.len(),
        });
    }
    let (h1, h2, h3) = (h.entry(1), h.entry(2), h.entry(3));
    Ok(ConnectedBuchsbaumCheck {
        h1_nonnegative: h1 >= 0,
        h2_in_range: h2 >= 0 && h2 <= binomial(h1 + 1, 2),
        h3_in_range: h2 >= 0
            && 3 * h3 >= -h2
            && h3 <= macaulay_power(h2, 2).expect("h2 >= 0 checked"),
    })
}

/// A decomposition `h = h' + k * (0, 3, -3, 1)` where `h'` passes
/// [`connected_buchsbaum_check`]: the witness complex is a connected
/// complex with h-vector `h'` together with `k` disjoint triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuchsbaumSplit {
    /// Number of disjoint triangles peeled off (smallest possible).
    pub triangles: i64,
    /// h-vector of the connected part.
    pub connected_part: HVector,
}

/// Decides whether `(1, h_1, h_2, h_3)` is the h-vector of a
/// two-dimensional Buchsbaum simplicial complex, connected or not.
///
/// Searches the smallest `k <= floor(h_1 / 3)` such that
/// `(1, h_1 - 3k, h_2 + 3k, h_3 - k)` passes
/// [`connected_buchsbaum_check`]; returns `None` when no `k` works.
pub fn buchsbaum_split(h: &HVector) -> Result<Option<BuchsbaumSplit>, HvecError> {
    if h.len() != 4 {
        return Err(HvecError::WrongDimension {
            expected: 4,
            got: h.len(),
        });
    }
    let (h1, h2, h3) = (h.entry(1), h.entry(2), h.entry(3));
    for k in 0..=(h1.max(0) / 3) {
        let part = HVector::dim2(h1 - 3 * k, h2 + 3 * k, h3 - k);
        if connected_buchsbaum_check(&part)?.passes() {
            return Ok(Some(BuchsbaumSplit {
                triangles: k,
                connected_part: part,
            }));
        }
    }
    Ok(None)
}

/// Canonical split count: the largest `k` whose shifted vector can
/// still satisfy the `h_2` upper bound,
///
/// `floor((2*h1 + 3 - sqrt(8*h1 + 8*h2 + 9)) / 6)`
///
/// evaluated in exact integer arithmetic. Whenever *some* split count
/// works for `(1, h1, h2, h3)`, this one works too (shifting further up
/// preserves the connected conditions), so it is an always-valid
/// witness choice — not necessarily the smallest. Whenever
/// `h_2 <= C(h_1+1, 2)` the result is nonnegative and equals
/// `max { a : h_2 + 3a <= C(h_1 - 3a + 1, 2) }`; outside that range the
/// exact floor may be negative and is returned as-is.
///
/// Errors with [`HvecError::NegativeRadicand`] when the discriminant is
/// negative.
pub fn split_count_closed_form(h1: i64, h2: i64) -> Result<i64, HvecError> {
    let r = 8i128 * h1 as i128 + 8 * h2 as i128 + 9;
    if r < 0 {
        return Err(HvecError::NegativeRadicand);
    }
    let a = 2i128 * h1 as i128 + 3;
    // q <= (a - sqrt(r)) / 6  <=>  a - 6q >= 0 and (a - 6q)^2 >= r.
    let fits = |q: i128| {
        let rest = a - 6 * q;
        rest >= 0 && rest * rest >= r
    };
    let mut q = (a - (r as u128).isqrt() as i128).div_euclid(6);
    while fits(q + 1) {
        q += 1;
    }
    while !fits(q) {
        q -= 1;
    }
    Ok(q as i64)
}

/// Verdict of [`general_dim_conditions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralDimCheck {
    /// `(h_0, ..., h_{d-1})` is an M-vector.
    pub truncation_is_m_vector: bool,
    /// `-h_{d-1} / d <= h_d <= h_{d-1}^<d-1>` (lower bound evaluated
    /// exactly as `d * h_d >= -h_{d-1}`).
    pub top_in_range: bool,
}

impl GeneralDimCheck {
    pub fn passes(&self) -> bool {
        self.truncation_is_m_vector && self.top_in_range
    }
}

/// The conjectured characterization, in general dimension `d - 1 >= 2`,
/// of h-vectors of Buchsbaum complexes whose reduced Betti numbers
/// vanish in degrees `<= d - 3`: the truncation is an M-vector and the
/// top entry lies in a Macaulay-bounded window. For length-4 input the
/// vanishing hypothesis says the complex is connected, and the
/// conditions are equivalent to [`connected_buchsbaum_check`] (proven,
/// not conjectural, in that case).
pub fn general_dim_conditions(h: &HVector) -> Result<GeneralDimCheck, HvecError> {
    if h.len() < 4 {
        return Err(HvecError::WrongDimension {
            expected: 4,
            got: h.len(),
        });
    }
    let d = h.len() - 1;
    let (hd1, hd) = (h.entry(d - 1), h.entry(d));
    Ok(GeneralDimCheck {
        truncation_is_m_vector: is_m_vector(&h.entries()[..d]),
        top_in_range: hd1 >= 0
            && (d as i64) * hd >= -hd1
            && hd <= macaulay_power(hd1, d as u32 - 1).expect("h_{d-1} >= 0 checked"),
    })
}
