//! Complex files: a JSON object and an equivalent plain-text format.
//!
//! * JSON: `{"n": 6, "facets": [[1,2,3], [1,2,4], ...]}` — 1-based
//!   ascending vertex lists, facets sorted lexicographically on output.
//! * Text: one facet per line, space-separated vertex ids; `#` starts a
//!   comment (whole-line or trailing); blank lines are ignored.
//!
//! Readers sniff the format from content: input whose first
//! non-whitespace byte is `{` is JSON, anything else is text. Writers
//! pick the format from the file extension (`.json` means JSON) and are
//! atomic: the bytes go to a temporary file in the target directory
//! which is then renamed over the destination.

use buchsbaum_core::complex::ComplexError;
use buchsbaum_core::{Face, SimplicialComplex};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::fs;
use std::path::Path;

/// On-disk JSON shape of a complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    /// Number of vertices; every vertex `1..=n` must appear in a facet.
    pub n: u32,
    pub facets: Vec<Vec<u32>>,
}

/// Errors from reading or writing complex files.
#[derive(Debug)]
pub enum FormatError {
    Io(std::io::Error),
    Json(serde_json::Error),
    /// A token in the text format that is not a vertex id.
    TextToken { line: usize, token: String },
    /// A specific facet failed validation; the diagnostic names it.
    Facet { facet: Vec<u32>, source: ComplexError },
    /// Whole-complex validation failure (gap in the vertex ids, no
    /// facets at all).
    Complex(ComplexError),
    /// The JSON `n` disagrees with the vertices the facets use.
    DeclaredCount { declared: u32, used: u32 },
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Io(e) => write!(f, "{e}"),
            FormatError::Json(e) => write!(f, "invalid JSON: {e}"),
            FormatError::TextToken { line, token } => {
                write!(f, "line {line}: {token:?} is not a vertex id")
            }
            FormatError::Facet { facet, source } => {
                write!(f, "facet {facet:?}: {source}")
            }
            FormatError::Complex(e) => write!(f, "{e}"),
            FormatError::DeclaredCount { declared, used } => write!(
                f,
                "file declares n={declared} but the facets use {used} vertices \
                 (isolated vertices are not representable)"
            ),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<std::io::Error> for FormatError {
    fn from(e: std::io::Error) -> Self {
        FormatError::Io(e)
    }
}

/// Builds the complex from vertex lists, blaming the offending facet on
/// failure.
fn complex_from_lists(lists: &[Vec<u32>]) -> Result<SimplicialComplex, FormatError> {
    let faces = lists
        .iter()
        .map(|l| {
            Face::from_vertices(l).map_err(|source| FormatError::Facet {
                facet: l.clone(),
                source,
            })
        })
        .collect::<Result<Vec<Face>, FormatError>>()?;
    SimplicialComplex::from_facets(faces).map_err(FormatError::Complex)
}

/// Parses either format from in-memory text (see the module docs for
/// the sniffing rule).
pub fn parse_complex(input: &str) -> Result<SimplicialComplex, FormatError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

fn parse_json(input: &str) -> Result<SimplicialComplex, FormatError> {
    let file: ComplexFile = serde_json::from_str(input).map_err(FormatError::Json)?;
    let c = complex_from_lists(&file.facets)?;
    if c.max_vertex() != file.n {
        return Err(FormatError::DeclaredCount {
            declared: file.n,
            used: c.max_vertex(),
        });
    }
    Ok(c)
}

fn parse_text(input: &str) -> Result<SimplicialComplex, FormatError> {
    let mut lists: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut facet = Vec::new();
        for token in line.split_whitespace() {
            let v = token.parse::<u32>().map_err(|_| FormatError::TextToken {
                line: idx + 1,
                token: token.to_string(),
            })?;
            facet.push(v);
        }
        if !facet.is_empty() {
            lists.push(facet);
        }
    }
    complex_from_lists(&lists)
}

/// Reads a complex file of either format.
pub fn read_complex(path: &Path) -> Result<SimplicialComplex, FormatError> {
    let input = fs::read_to_string(path)?;
    parse_complex(&input)
}

/// The JSON shape of a complex (facets in lexicographic order).
pub fn to_complex_file(c: &SimplicialComplex) -> ComplexFile {
    ComplexFile {
        n: c.max_vertex(),
        facets: c
            .facets()
            .iter()
            .map(|f| f.vertices().collect())
            .collect(),
    }
}

/// The text shape of a complex: one facet per line.
pub fn render_complex_text(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in c.facets() {
        let verts: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
        out.push_str(&verts.join(" "));
        out.push('\n');
    }
    out
}

/// Writes `bytes` to `path` atomically: temporary file in the same
/// directory, then rename.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> Result<(), FormatError> {
    let mut tmp_name = path.file_name().unwrap_or_default().to_os_string();
    tmp_name.push(".tmp");
    let tmp = path.with_file_name(tmp_name);
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Writes the complex to `path`; `.json` extension selects JSON,
/// anything else the text format.
pub fn write_complex(path: &Path, c: &SimplicialComplex) -> Result<(), FormatError> {
    let json = path.extension().is_some_and(|e| e == "json");
    let bytes = if json {
        let mut v = serde_json::to_vec_pretty(&to_complex_file(c)).map_err(FormatError::Json)?;
        v.push(b'\n');
        v
    } else {
        render_complex_text(c).into_bytes()
    };
    atomic_write(path, &bytes)
}
