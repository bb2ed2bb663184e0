//! Instance ingestion: plain line-per-string files and FASTA.

use std::path::Path;

use superstring::{validate_instance, Instance, InstanceError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Lines,
    Fasta,
}

#[derive(Debug)]
pub enum InputError {
    Io(String),
    /// Malformed content, with a 1-based line number.
    Parse {
        line: usize,
        message: String,
    },
    Invalid(InstanceError),
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InputError::Io(m) => write!(f, "{m}"),
            InputError::Parse { line, message } => write!(f, "line {line}: {message}"),
            InputError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

pub fn parse_input(path: &Path, format: InputFormat) -> Result<Instance, InputError> {
    let bytes = std::fs::read(path)
        .map_err(|e| InputError::Io(format!("cannot read {}: {e}", path.display())))?;
    let raw = match format {
        InputFormat::Lines => parse_lines(&bytes),
        InputFormat::Fasta => parse_fasta(&bytes)?,
    };
    validate_instance(raw).map_err(InputError::Invalid)
}

fn strip_trailing_ws(line: &[u8]) -> &[u8] {
    let mut end = line.len();
    while end > 0 && line[end - 1].is_ascii_whitespace() {
        end -= 1;
    }
    &line[..end]
}

/// One string per line, trailing whitespace stripped, blank lines skipped.
fn parse_lines(bytes: &[u8]) -> Vec<Vec<u8>> {
    bytes
        .split(|&b| b == b'\n')
        .map(strip_trailing_ws)
        .filter(|l| !l.is_empty())
        .map(<[u8]>::to_vec)
        .collect()
}

/// Standard header/sequence records; sequences may span lines and are
/// uppercased.
fn parse_fasta(bytes: &[u8]) -> Result<Vec<Vec<u8>>, InputError> {
    let mut records: Vec<(usize, Vec<u8>)> = Vec::new();
    for (i, line) in bytes.split(|&b| b == b'\n').enumerate() {
        let line = strip_trailing_ws(line);
        if line.is_empty() {
            continue;
        }
        if line[0] == b'>' {
            records.push((i + 1, Vec::new()));
        } else {
            match records.last_mut() {
                None => {
                    return Err(InputError::Parse {
                        line: i + 1,
                        message: "sequence data before the first FASTA header".into(),
                    })
                }
                Some((_, seq)) => {
                    seq.extend(line.iter().map(u8::to_ascii_uppercase));
                }
            }
        }
    }
    if records.is_empty() {
        return Err(InputError::Parse {
            line: 1,
            message: "no FASTA records found".into(),
        });
    }
    records
        .into_iter()
        .map(|(line, seq)| {
            if seq.is_empty() {
                Err(InputError::Parse {
                    line,
                    message: "FASTA record has an empty sequence".into(),
                })
            } else {
                Ok(seq)
            }
        })
        .collect()
}
