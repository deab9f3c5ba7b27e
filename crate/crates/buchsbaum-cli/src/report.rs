//! Serializable report shapes for every command, with conversions from
//! the core types and plain-text renderers.
//!
//! JSON reports always carry both coefficient fields side by side; the
//! `--field` flag only narrows the *text* rendering. The census CSV has
//! the fixed header
//! `n,h1,h2,h3,connected,buchsbaum,link_acyclic,b1_q,b2_q,b1_gf2,b2_gf2,count`.

use buchsbaum_core::homology::Field;
use buchsbaum_core::hvec::{BuchsbaumSplit, ConnectedBuchsbaumCheck, MacaulayRep};
use buchsbaum_core::oracle::{BettiProfileScan, Census, NecessityStats};
use buchsbaum_core::properties::{
    BuchsbaumBettiBounds, FieldReport, LinkBettiIdentity, PropertyReport,
};
use buchsbaum_core::realizer::{RealizationCertificate, TraceStep};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Which coefficient field(s) a text rendering should show.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rationals,
    Gf2,
    Both,
}

impl FieldChoice {
    fn shows(self, field: Field) -> bool {
        matches!(
            (self, field),
            (FieldChoice::Both, _)
                | (FieldChoice::Rationals, Field::Rationals)
                | (FieldChoice::Gf2, Field::Gf2)
        )
    }
}

fn tuple(entries: &[i64]) -> String {
    let inner: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn vertices(face: buchsbaum_core::Face) -> Vec<u32> {
    face.vertices().collect()
}

// ---------------------------------------------------------------- check

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedConditionsDto {
    pub h1_nonnegative: bool,
    pub h2_in_range: bool,
    pub h3_in_range: bool,
    pub passes: bool,
}

impl From<ConnectedBuchsbaumCheck> for ConnectedConditionsDto {
    fn from(c: ConnectedBuchsbaumCheck) -> Self {
        ConnectedConditionsDto {
            h1_nonnegative: c.h1_nonnegative,
            h2_in_range: c.h2_in_range,
            h3_in_range: c.h3_in_range,
            passes: c.passes(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitVerdictDto {
    pub realizable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangles: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected_part: Option<Vec<i64>>,
}

impl From<&Option<BuchsbaumSplit>> for SplitVerdictDto {
    fn from(s: &Option<BuchsbaumSplit>) -> Self {
        match s {
            None => SplitVerdictDto {
                realizable: false,
                triangles: None,
                connected_part: None,
            },
            Some(split) => SplitVerdictDto {
                realizable: true,
                triangles: Some(split.triangles),
                connected_part: Some(split.connected_part.entries().to_vec()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiBoundsDto {
    pub truncation_is_m_vector: bool,
    pub h2_dominates_beta1: bool,
    pub h3_upper_bound: bool,
    /// The three inequalities together.
    pub inequalities_pass: bool,
    /// `h_3 + β_1 = β_2`, reported separately.
    pub top_betti_relation: bool,
}

impl From<BuchsbaumBettiBounds> for BettiBoundsDto {
    fn from(b: BuchsbaumBettiBounds) -> Self {
        BettiBoundsDto {
            truncation_is_m_vector: b.truncation_is_m_vector,
            h2_dominates_beta1: b.h2_dominates_beta1,
            h3_upper_bound: b.h3_upper_bound,
            inequalities_pass: b.passes(),
            top_betti_relation: b.top_betti_relation,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkIdentityDto {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl From<LinkBettiIdentity> for LinkIdentityDto {
    fn from(i: LinkBettiIdentity) -> Self {
        LinkIdentityDto {
            lhs: i.lhs,
            rhs: i.rhs,
            holds: i.holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldReportDto {
    /// `"rationals"` or `"gf2"`.
    pub field: String,
    /// Reduced Betti numbers in degrees `0..=dim`.
    pub betti: Vec<i64>,
    pub cohen_macaulay: bool,
    /// Buchsbaumness by the homological definition over this field.
    pub buchsbaum_definitional: bool,
    /// h-vector versus Betti-number inequalities (2-dimensional only;
    /// meaningful for connected Buchsbaum complexes).
    pub betti_bounds: Option<BettiBoundsDto>,
    /// Vertex-link Betti identity (Buchsbaum only).
    pub link_identity: Option<LinkIdentityDto>,
}

fn field_key(field: Field) -> &'static str {
    match field {
        Field::Rationals => "rationals",
        Field::Gf2 => "gf2",
    }
}

impl From<&FieldReport> for FieldReportDto {
    fn from(r: &FieldReport) -> Self {
        FieldReportDto {
            field: field_key(r.field).to_string(),
            betti: r.betti.entries().to_vec(),
            cohen_macaulay: r.cohen_macaulay,
            buchsbaum_definitional: r.buchsbaum,
            betti_bounds: r.betti_bounds.map(Into::into),
            link_identity: r.link_identity.map(Into::into),
        }
    }
}

/// Full analysis of one complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReportDto {
    pub dim: i32,
    pub pure: bool,
    pub connected: bool,
    /// `(f_{-1}, f_0, ..., f_{d-1})`.
    pub f: Vec<i64>,
    /// `(h_0, ..., h_d)`.
    pub h: Vec<i64>,
    /// Buchsbaumness (field-independent in dimension 2).
    pub buchsbaum: bool,
    pub link_acyclic: bool,
    pub rationals: FieldReportDto,
    pub gf2: FieldReportDto,
    /// Is `h` the h-vector of a *connected* 2-dimensional Buchsbaum
    /// complex, condition by condition (`null` off dimension 2)?
    pub connected_realizability: Option<ConnectedConditionsDto>,
    /// Is `h` the h-vector of *some* 2-dimensional Buchsbaum complex,
    /// by peeling disjoint triangles (`null` off dimension 2)?
    pub split_realizability: Option<SplitVerdictDto>,
    /// Face-count threshold that forces Cohen-Macaulayness.
    pub cm_threshold_met: Option<bool>,
}

impl From<&PropertyReport> for CheckReportDto {
    fn from(r: &PropertyReport) -> Self {
        CheckReportDto {
            dim: r.dim,
            pure: r.pure,
            connected: r.connected,
            f: r.f.entries().to_vec(),
            h: r.h.entries().to_vec(),
            buchsbaum: r.buchsbaum,
            link_acyclic: r.link_acyclic,
            rationals: (&r.rationals).into(),
            gf2: (&r.gf2).into(),
            connected_realizability: r.connected_check.map(Into::into),
            split_realizability: r.split.as_ref().map(Into::into),
            cm_threshold_met: r.cm_threshold_met,
        }
    }
}

fn render_field_text(out: &mut String, dto: &FieldReportDto, label: &str) {
    let _ = writeln!(
        out,
        "over {label}: betti {}; cohen-macaulay {}; buchsbaum-definitional {}",
        tuple(&dto.betti),
        dto.cohen_macaulay,
        dto.buchsbaum_definitional
    );
    if let Some(b) = &dto.betti_bounds {
        let _ = writeln!(
            out,
            "over {label}: truncation M-vector {}; h2 >= 3*b1 {}; h3+b1 <= (h2-3*b1)^<2> {}; h3+b1 = b2 {}",
            b.truncation_is_m_vector, b.h2_dominates_beta1, b.h3_upper_bound, b.top_betti_relation
        );
    }
    if let Some(i) = &dto.link_identity {
        let _ = writeln!(
            out,
            "over {label}: link identity {} = {} ({})",
            i.lhs,
            i.rhs,
            if i.holds { "holds" } else { "VIOLATED" }
        );
    }
}

pub fn render_check_text(dto: &CheckReportDto, fields: FieldChoice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "dimension: {}", dto.dim);
    let _ = writeln!(out, "pure: {}", dto.pure);
    let _ = writeln!(out, "connected: {}", dto.connected);
    let _ = writeln!(out, "f-vector: {}", tuple(&dto.f));
    let _ = writeln!(out, "h-vector: {}", tuple(&dto.h));
    let _ = writeln!(out, "buchsbaum: {}", dto.buchsbaum);
    let _ = writeln!(out, "link-acyclic: {}", dto.link_acyclic);
    if fields.shows(Field::Rationals) {
        render_field_text(&mut out, &dto.rationals, "Q");
    }
    if fields.shows(Field::Gf2) {
        render_field_text(&mut out, &dto.gf2, "GF(2)");
    }
    if let Some(c) = &dto.connected_realizability {
        let flag = |ok: bool| if ok { "ok" } else { "violated" };
        let _ = writeln!(
            out,
            "connected h-vector conditions: h1 >= 0: {}; 0 <= h2 <= C(h1+1, 2): {}; \
             -h2/3 <= h3 <= h2^<2>: {} (passes: {})",
            flag(c.h1_nonnegative),
            flag(c.h2_in_range),
            flag(c.h3_in_range),
            c.passes
        );
    }
    if let Some(s) = &dto.split_realizability {
        match (&s.triangles, &s.connected_part) {
            (Some(k), Some(part)) => {
                let _ = writeln!(
                    out,
                    "split decomposition: {k} disjoint triangle(s) + connected part {}",
                    tuple(part)
                );
            }
            _ => {
                let _ = writeln!(out, "split decomposition: none (h-vector not realizable)");
            }
        }
    }
    if let Some(t) = dto.cm_threshold_met {
        let _ = writeln!(out, "cm face-count threshold met: {t}");
    }
    out
}

// -------------------------------------------------------------- realize

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksDto {
    pub pure: bool,
    pub connected: bool,
    pub connected_required: bool,
    pub buchsbaum: bool,
    pub h_matches: bool,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TraceStepDto {
    /// Base block assembled wholesale with its verified h-vector.
    Base { facets: usize, h: Vec<i64> },
    /// One audited facet addition.
    Glue {
        face: Vec<u32>,
        class: String,
        stage: String,
    },
    /// A disjoint solid triangle appended as a new component.
    Component { face: Vec<u32> },
}

impl From<&TraceStep> for TraceStepDto {
    fn from(s: &TraceStep) -> Self {
        match s {
            TraceStep::Base { facets, h } => TraceStepDto::Base {
                facets: *facets,
                h: h.entries().to_vec(),
            },
            TraceStep::Glue { face, class, stage } => TraceStepDto::Glue {
                face: vertices(*face),
                class: class.to_string(),
                stage: stage.to_string(),
            },
            TraceStep::Component { face } => TraceStepDto::Component {
                face: vertices(*face),
            },
        }
    }
}

/// Witness construction result: the complex plus its audit trail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDto {
    pub target: Vec<i64>,
    pub achieved: Vec<i64>,
    pub n: u32,
    pub facet_count: usize,
    pub facets: Vec<Vec<u32>>,
    pub split_triangles: i64,
    pub checks: ChecksDto,
    pub trace: Vec<TraceStepDto>,
}

impl From<&RealizationCertificate> for CertificateDto {
    fn from(c: &RealizationCertificate) -> Self {
        CertificateDto {
            target: c.target.entries().to_vec(),
            achieved: c.achieved.entries().to_vec(),
            n: c.complex.max_vertex(),
            facet_count: c.complex.facets().len(),
            facets: c
                .complex
                .facets()
                .iter()
                .map(|f| vertices(*f))
                .collect(),
            split_triangles: c.split_triangles,
            checks: ChecksDto {
                pure: c.checks.pure,
                connected: c.checks.connected,
                connected_required: c.checks.connected_required,
                buchsbaum: c.checks.buchsbaum,
                h_matches: c.checks.h_matches,
                passes: c.checks.passes(),
            },
            trace: c.trace.iter().map(Into::into).collect(),
        }
    }
}

pub fn render_certificate_text(dto: &CertificateDto) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "target h-vector: {}", tuple(&dto.target));
    let _ = writeln!(
        out,
        "witness: {} vertices, {} facets, {} disjoint triangle component(s)",
        dto.n, dto.facet_count, dto.split_triangles
    );
    let c = &dto.checks;
    let _ = writeln!(
        out,
        "checks: pure {}; connected {} (required: {}); buchsbaum {}; h matches {} => {}",
        c.pure,
        c.connected,
        c.connected_required,
        c.buchsbaum,
        c.h_matches,
        if c.passes { "verified" } else { "FAILED" }
    );
    let facets: Vec<String> = dto
        .facets
        .iter()
        .map(|f| {
            let verts: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", verts.join(","))
        })
        .collect();
    let _ = writeln!(out, "facets: {}", facets.join(" "));
    let _ = writeln!(out, "trace:");
    for step in &dto.trace {
        match step {
            TraceStepDto::Base { facets, h } => {
                let _ = writeln!(out, "  base block: {facets} facet(s), h {}", tuple(h));
            }
            TraceStepDto::Glue { face, class, stage } => {
                let verts: Vec<String> = face.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "  glue {{{}}} {class} {stage}", verts.join(","));
            }
            TraceStepDto::Component { face } => {
                let verts: Vec<String> = face.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "  component {{{}}}", verts.join(","));
            }
        }
    }
    out
}

// ------------------------------------------------------------- macaulay

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayTermDto {
    pub top: i64,
    pub bottom: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayDto {
    pub a: i64,
    pub d: u32,
    /// Binomial sum, e.g. `"C(5,2) + C(4,1)"`.
    pub representation: String,
    pub terms: Vec<MacaulayTermDto>,
    /// The shifted value `a^<d>`.
    pub power: i64,
}

pub fn macaulay_dto(a: i64, d: u32, rep: &MacaulayRep, power: i64) -> MacaulayDto {
    MacaulayDto {
        a,
        d,
        representation: rep.to_string(),
        terms: rep
            .terms()
            .iter()
            .map(|&(ai, i)| MacaulayTermDto {
                top: ai + i as i64,
                bottom: i,
            })
            .collect(),
        power,
    }
}

pub fn render_macaulay_text(dto: &MacaulayDto) -> String {
    format!(
        "{} = {}; {}^<{}> = {}\n",
        dto.a, dto.representation, dto.a, dto.d, dto.power
    )
}

// --------------------------------------------------------------- census

pub const CENSUS_CSV_HEADER: [&str; 12] = [
    "n",
    "h1",
    "h2",
    "h3",
    "connected",
    "buchsbaum",
    "link_acyclic",
    "b1_q",
    "b2_q",
    "b1_gf2",
    "b2_gf2",
    "count",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecordDto {
    pub h1: i64,
    pub h2: i64,
    pub h3: i64,
    pub connected: bool,
    pub buchsbaum: bool,
    pub link_acyclic: bool,
    pub b1_q: i64,
    pub b2_q: i64,
    pub b1_gf2: i64,
    pub b2_gf2: i64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationsDto {
    pub connected_feasibility: u64,
    pub split_feasibility: u64,
    pub betti_bounds_q: u64,
    pub betti_bounds_gf2: u64,
    pub top_betti_q: u64,
    pub top_betti_gf2: u64,
    pub link_identity: u64,
    pub link_acyclic_mismatch: u64,
    pub definitional_q: u64,
    pub definitional_gf2: u64,
    pub threshold_q: u64,
    pub threshold_gf2: u64,
    pub all_zero: bool,
}

impl From<&NecessityStats> for ViolationsDto {
    fn from(s: &NecessityStats) -> Self {
        ViolationsDto {
            connected_feasibility: s.connected_feasibility,
            split_feasibility: s.split_feasibility,
            betti_bounds_q: s.betti_bounds_q,
            betti_bounds_gf2: s.betti_bounds_gf2,
            top_betti_q: s.top_betti_q,
            top_betti_gf2: s.top_betti_gf2,
            link_identity: s.link_identity,
            link_acyclic_mismatch: s.link_acyclic_mismatch,
            definitional_q: s.definitional_q,
            definitional_gf2: s.definitional_gf2,
            threshold_q: s.threshold_q,
            threshold_gf2: s.threshold_gf2,
            all_zero: s.all_zero(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusDto {
    pub n: u32,
    /// Triangle subsets visited.
    pub scanned: u64,
    /// Subsets covering all `n` vertices, i.e. classified below.
    pub covered: u64,
    pub workers: u64,
    pub records: Vec<CensusRecordDto>,
    /// Counters for predicates the theory forbids; all must be zero.
    pub violations: ViolationsDto,
}

pub fn census_dto(census: &Census, workers: u64) -> CensusDto {
    CensusDto {
        n: census.n,
        scanned: census.scanned,
        covered: census.covered,
        workers,
        records: census
            .counts
            .iter()
            .map(|(k, &count)| CensusRecordDto {
                h1: k.h1,
                h2: k.h2,
                h3: k.h3,
                connected: k.connected,
                buchsbaum: k.buchsbaum,
                link_acyclic: k.link_acyclic,
                b1_q: k.betti_q.0,
                b2_q: k.betti_q.1,
                b1_gf2: k.betti_gf2.0,
                b2_gf2: k.betti_gf2.1,
                count,
            })
            .collect(),
        violations: (&census.stats).into(),
    }
}

/// Census CSV with the documented fixed header; one record per row.
pub fn render_census_csv(dto: &CensusDto) -> Result<Vec<u8>, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CENSUS_CSV_HEADER)?;
    for r in &dto.records {
        w.write_record([
            dto.n.to_string(),
            r.h1.to_string(),
            r.h2.to_string(),
            r.h3.to_string(),
            r.connected.to_string(),
            r.buchsbaum.to_string(),
            r.link_acyclic.to_string(),
            r.b1_q.to_string(),
            r.b2_q.to_string(),
            r.b1_gf2.to_string(),
            r.b2_gf2.to_string(),
            r.count.to_string(),
        ])?;
    }
    Ok(w.into_inner().expect("in-memory writer"))
}

pub fn render_census_text(dto: &CensusDto, fields: FieldChoice) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "census n={}: scanned {}, covered {}, distinct keys {}, workers {}",
        dto.n,
        dto.scanned,
        dto.covered,
        dto.records.len(),
        dto.workers
    );
    let _ = writeln!(
        out,
        "violations: {}",
        if dto.violations.all_zero {
            "none".to_string()
        } else {
            format!("{:?}", dto.violations)
        }
    );
    for r in &dto.records {
        let mut betti = String::new();
        if fields.shows(Field::Rationals) {
            let _ = write!(betti, " betti-Q=({}, {})", r.b1_q, r.b2_q);
        }
        if fields.shows(Field::Gf2) {
            let _ = write!(betti, " betti-GF(2)=({}, {})", r.b1_gf2, r.b2_gf2);
        }
        let _ = writeln!(
            out,
            "h=(1, {}, {}, {}) connected={} buchsbaum={} link-acyclic={}{}: {}",
            r.h1, r.h2, r.h3, r.connected, r.buchsbaum, r.link_acyclic, betti, r.count
        );
    }
    out
}

// ------------------------------------------------------- threshold-scan

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileCountDto {
    pub b1: i64,
    pub b2: i64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdScanDto {
    /// 13-triangle subsets of the 20 triangles on 6 vertices.
    pub total_sets: u64,
    /// Subsets with complete edge skeleton, i.e. h = (1, 3, 6, 3).
    pub full_skeleton: u64,
    pub buchsbaum: u64,
    pub profiles_q: Vec<ProfileCountDto>,
    pub profiles_gf2: Vec<ProfileCountDto>,
    /// Buchsbaum members with profile `(1, 4)` — the profile the Betti
    /// bounds alone would allow; must be zero.
    pub profile_1_4_q: u64,
    pub profile_1_4_gf2: u64,
    /// Buchsbaum members with `β_1 != 0`; must be zero.
    pub nonzero_b1_q: u64,
    pub nonzero_b1_gf2: u64,
}

pub fn threshold_scan_dto(scan: &BettiProfileScan) -> ThresholdScanDto {
    let profiles = |m: &std::collections::BTreeMap<(i64, i64), u64>| {
        m.iter()
            .map(|(&(b1, b2), &count)| ProfileCountDto { b1, b2, count })
            .collect::<Vec<_>>()
    };
    let total_where = |m: &std::collections::BTreeMap<(i64, i64), u64>,
                       pred: &dyn Fn(i64, i64) -> bool| {
        m.iter()
            .filter(|(&(b1, b2), _)| pred(b1, b2))
            .map(|(_, &c)| c)
            .sum::<u64>()
    };
    ThresholdScanDto {
        total_sets: scan.total_sets,
        full_skeleton: scan.full_skeleton,
        buchsbaum: scan.buchsbaum,
        profiles_q: profiles(&scan.profiles_q),
        profiles_gf2: profiles(&scan.profiles_gf2),
        profile_1_4_q: total_where(&scan.profiles_q, &|b1, b2| (b1, b2) == (1, 4)),
        profile_1_4_gf2: total_where(&scan.profiles_gf2, &|b1, b2| (b1, b2) == (1, 4)),
        nonzero_b1_q: total_where(&scan.profiles_q, &|b1, _| b1 != 0),
        nonzero_b1_gf2: total_where(&scan.profiles_gf2, &|b1, _| b1 != 0),
    }
}

pub fn render_threshold_scan_text(dto: &ThresholdScanDto) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "13-triangle sets on 6 vertices: {}; complete skeleton (h = (1, 3, 6, 3)): {}; buchsbaum: {}",
        dto.total_sets, dto.full_skeleton, dto.buchsbaum
    );
    let render = |profiles: &[ProfileCountDto]| {
        profiles
            .iter()
            .map(|p| format!("({}, {}) x {}", p.b1, p.b2, p.count))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(out, "betti profiles over Q: {}", render(&dto.profiles_q));
    let _ = writeln!(
        out,
        "betti profiles over GF(2): {}",
        render(&dto.profiles_gf2)
    );
    let _ = writeln!(
        out,
        "witnesses with profile (1, 4): {} over Q, {} over GF(2)",
        dto.profile_1_4_q, dto.profile_1_4_gf2
    );
    let _ = writeln!(
        out,
        "witnesses with b1 != 0: {} over Q, {} over GF(2)",
        dto.nonzero_b1_q, dto.nonzero_b1_gf2
    );
    out
}

// ---------------------------------------------------------------- sweep

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepFailureDto {
    pub h: Vec<i64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepPartDto {
    /// Feasible target vectors enumerated.
    pub candidates: u64,
    /// Candidates whose witness passed every verification.
    pub verified: u64,
    pub failures: Vec<SweepFailureDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepDto {
    pub h1_max: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected: Option<SweepPartDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arbitrary: Option<SweepPartDto>,
    pub all_verified: bool,
}

pub fn render_sweep_text(dto: &SweepDto) -> String {
    let mut out = String::new();
    let part = |out: &mut String, name: &str, p: &SweepPartDto, extra: &str| {
        if p.failures.is_empty() {
            let _ = writeln!(
                out,
                "{name} targets with h1 <= {}: all {} certificates verified{extra}",
                dto.h1_max, p.candidates
            );
        } else {
            let _ = writeln!(
                out,
                "{name} targets with h1 <= {}: {} of {} verified, {} FAILED",
                dto.h1_max,
                p.verified,
                p.candidates,
                p.failures.len()
            );
            for f in &p.failures {
                let _ = writeln!(out, "  {}: {}", tuple(&f.h), f.detail);
            }
        }
    };
    if let Some(p) = &dto.connected {
        part(&mut out, "connected", p, "");
    }
    if let Some(p) = &dto.arbitrary {
        part(
            &mut out,
            "arbitrary",
            p,
            "; canonical split count valid for every target",
        );
    }
    out
}
