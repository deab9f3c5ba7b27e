//! Command implementations: thread-parallel census and the realize-everything
//! sweeps. Pure logic, shared by the binary and the integration tests.

use crate::report::{SweepDto, SweepFailureDto, SweepPartDto};
use buchsbaum_core::homology::Field;
use buchsbaum_core::hvec::{
    binomial, buchsbaum_split, connected_buchsbaum_check, macaulay_power, split_count_closed_form,
};
use buchsbaum_core::oracle::{census, scan_range, triangle_count, Census, OracleError, ScanOptions};
use buchsbaum_core::properties::is_buchsbaum_definitional;
use buchsbaum_core::realizer::{realize, realize_split, RealizationCertificate};
use buchsbaum_core::HVector;
use std::collections::BTreeSet;

/// Full census on `[n]` (`3 <= n <= 6`), split over `workers` threads by
/// partitioning the bitmask range; results merge commutatively, so the
/// outcome is identical to the single-threaded scan.
pub fn parallel_census(
    n: u32,
    workers: u64,
    opts: &ScanOptions,
) -> Result<Census, OracleError> {
    if n < 3 {
        return Err(OracleError::TooSmall { n });
    }
    if n > 6 {
        return Err(OracleError::TooLarge { n, max: 6 });
    }
    let limit = 1u64 << triangle_count(n);
    let workers = workers.clamp(1, 64).min(limit);
    if workers == 1 {
        return census(n, opts);
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|i| {
                let (start, end) = (limit * i / workers, limit * (i + 1) / workers);
                let opts = *opts;
                scope.spawn(move || scan_range(n, start, end, &opts))
            })
            .collect();
        let mut merged: Option<Census> = None;
        for handle in handles {
            let part = handle.join().expect("census worker panicked")?;
            match &mut merged {
                None => merged = Some(part),
                Some(c) => c.merge(&part),
            }
        }
        Ok(merged.expect("at least one worker"))
    })
}

/// Every h-vector of a connected 2-dimensional Buchsbaum complex with
/// `h_1 <= h1_max`, enumerated directly from the characterization.
pub fn connected_targets(h1_max: i64) -> Vec<HVector> {
    let mut out = Vec::new();
    for h1 in 0..=h1_max {
        for h2 in 0..=binomial(h1 + 1, 2) {
            let hi = macaulay_power(h2, 2).expect("h2 >= 0");
            for h3 in -(h2 / 3)..=hi {
                out.push(HVector::dim2(h1, h2, h3));
            }
        }
    }
    out
}

/// Every h-vector of a 2-dimensional Buchsbaum complex (connected or
/// not) with `h_1 <= h1_max`: shifts of the connected targets by `k`
/// disjoint triangles, deduplicated.
pub fn arbitrary_targets(h1_max: i64) -> Vec<HVector> {
    let mut seen: BTreeSet<(i64, i64, i64)> = BTreeSet::new();
    for h1 in 0..=h1_max {
        for k in 0..=h1 / 3 {
            let h1_part = h1 - 3 * k;
            for h2_part in 0..=binomial(h1_part + 1, 2) {
                let hi = macaulay_power(h2_part, 2).expect("h2 >= 0");
                for h3_part in -(h2_part / 3)..=hi {
                    seen.insert((h1, h2_part - 3 * k, h3_part + k));
                }
            }
        }
    }
    seen.into_iter()
        .map(|(h1, h2, h3)| HVector::dim2(h1, h2, h3))
        .collect()
}

/// Everything the sweep requires of one certificate: structural checks,
/// exact h-vector match, and Buchsbaumness by the homological
/// definition over both fields.
fn verify_certificate(cert: &RealizationCertificate, h: &HVector) -> Result<(), String> {
    if !cert.checks.passes() {
        return Err(format!("certificate checks failed: {:?}", cert.checks));
    }
    if cert.achieved != *h {
        return Err(format!(
            "achieved {:?} instead of target",
            cert.achieved.entries()
        ));
    }
    for field in [Field::Rationals, Field::Gf2] {
        if !is_buchsbaum_definitional(&cert.complex, field) {
            return Err(format!("witness not Buchsbaum by definition over {field}"));
        }
    }
    Ok(())
}

/// The canonical (closed-form) split count must itself realize the
/// target: nonnegative, within the search bound, shifted vector
/// feasible, and the resulting witness verified.
fn verify_closed_form(h: &HVector) -> Result<(), String> {
    let (h1, h2) = (h.entry(1), h.entry(2));
    let k = split_count_closed_form(h1, h2).map_err(|e| format!("closed form: {e}"))?;
    if k < 0 || 3 * k > h1 {
        return Err(format!("closed-form count {k} outside 0..=floor(h1/3)"));
    }
    let shifted = HVector::dim2(h1 - 3 * k, h2 + 3 * k, h.entry(3) - k);
    let check = connected_buchsbaum_check(&shifted).expect("length 4");
    if !check.passes() {
        return Err(format!("closed-form count {k} gives infeasible part: {check}"));
    }
    let cert = realize_split(h, k).map_err(|e| format!("closed-form witness: {e}"))?;
    verify_certificate(&cert, h)
}

fn sweep_part(
    targets: &[HVector],
    run: impl Fn(&HVector) -> Result<(), String>,
) -> SweepPartDto {
    let mut verified = 0;
    let mut failures = Vec::new();
    for h in targets {
        match run(h) {
            Ok(()) => verified += 1,
            Err(detail) => failures.push(SweepFailureDto {
                h: h.entries().to_vec(),
                detail,
            }),
        }
    }
    SweepPartDto {
        candidates: targets.len() as u64,
        verified,
        failures,
    }
}

/// Realizes every feasible target with `h_1 <= h1_max` and verifies the
/// witnesses; `connected`/`arbitrary` select which families to run.
pub fn run_sweep(h1_max: i64, connected: bool, arbitrary: bool) -> SweepDto {
    let connected_part = connected.then(|| {
        sweep_part(&connected_targets(h1_max), |h| {
            let cert = realize(h, true).map_err(|e| e.to_string())?;
            if !cert.checks.connected {
                return Err("witness not connected".to_string());
            }
            verify_certificate(&cert, h)
        })
    });
    let arbitrary_part = arbitrary.then(|| {
        sweep_part(&arbitrary_targets(h1_max), |h| {
            let cert = realize(h, false).map_err(|e| e.to_string())?;
            verify_certificate(&cert, h)?;
            // The smallest split count must match the decision procedure.
            let split = buchsbaum_split(h)
                .expect("length 4")
                .ok_or("buchsbaum_split rejected a feasible target")?;
            if cert.split_triangles != split.triangles {
                return Err(format!(
                    "witness used {} triangles, decision says {}",
                    cert.split_triangles, split.triangles
                ));
            }
            verify_closed_form(h)
        })
    });
    let all_verified = connected_part
        .iter()
        .chain(arbitrary_part.iter())
        .all(|p: &SweepPartDto| p.failures.is_empty());
    SweepDto {
        h1_max,
        connected: connected_part,
        arbitrary: arbitrary_part,
        all_verified,
    }
}
