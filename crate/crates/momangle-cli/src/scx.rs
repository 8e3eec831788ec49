//! Plain-text complex format: a `vertices: n` header line, then one face
//! per line as space-separated vertex labels. `#` starts a comment and
//! blank lines are ignored. Faces are closed downward on construction.

use std::collections::BTreeSet;

use momangle::scomplex::SimplicialComplex;
use momangle::Error as LibError;

/// Parse failure with the offending 1-based line number, or a library
/// refusal (size caps, vertex count) passed through unchanged.
#[derive(Debug)]
pub enum ScxError {
    Parse { line: usize, message: String },
    Lib(LibError),
}

impl std::fmt::Display for ScxError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScxError::Parse { line, message } => write!(f, "line {line}: {message}"),
            ScxError::Lib(e) => write!(f, "{e}"),
        }
    }
}

pub fn parse_scx(text: &str) -> Result<SimplicialComplex, ScxError> {
    let mut n: Option<u32> = None;
    let mut faces: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let Some(limit) = n else {
            let Some(rest) = body.strip_prefix("vertices:") else {
                return Err(ScxError::Parse {
                    line,
                    message: format!("expected header \"vertices: n\", found \"{body}\""),
                });
            };
            let count: u32 = rest.trim().parse().map_err(|_| ScxError::Parse {
                line,
                message: format!("invalid vertex count \"{}\"", rest.trim()),
            })?;
            n = Some(count);
            continue;
        };
        let mut face = Vec::new();
        let mut seen = BTreeSet::new();
        for tok in body.split_whitespace() {
            let v: u32 = tok.parse().map_err(|_| ScxError::Parse {
                line,
                message: format!("invalid vertex label \"{tok}\""),
            })?;
            if v < 1 || v > limit {
                return Err(ScxError::Parse {
                    line,
                    message: format!("vertex {v} out of range 1..={limit}"),
                });
            }
            if !seen.insert(v) {
                return Err(ScxError::Parse {
                    line,
                    message: format!("duplicate vertex {v} in face"),
                });
            }
            face.push(v);
        }
        faces.push(face);
    }
    let Some(n) = n else {
        return Err(ScxError::Parse {
            line: 1,
            message: "missing header \"vertices: n\"".into(),
        });
    };
    SimplicialComplex::construct(n, &faces).map_err(ScxError::Lib)
}

/// Normalized document: header plus one line per nonempty maximal face.
pub fn print_scx(k: &SimplicialComplex) -> String {
    let mut out = format!("vertices: {}\n", k.n());
    for f in k.maximal_faces() {
        if f.is_empty() {
            continue;
        }
        let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}
