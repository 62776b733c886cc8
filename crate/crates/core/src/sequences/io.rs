//! Sequence files.
//!
//! * text: one decimal element per line; blank lines and lines starting with
//!   `#` are skipped. The register size is supplied by the reader.
//! * binary: `n` and `M` as little-endian `u64`, followed by the `M`
//!   elements in increasing order, each a little-endian `u64`.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::{Error, Result, Sequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceFormat {
    Text,
    Binary,
}

pub fn write_text<W: Write>(seq: &Sequence, mut out: W) -> Result<()> {
    for x in seq.elements() {
        writeln!(out, "{x}")?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_text<R: BufRead>(input: R, n: usize) -> Result<Sequence> {
    let mut elements = Vec::new();
    for (lineno, line) in input.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let x = line.parse::<usize>().map_err(|e| {
            Error::InvalidSequence(format!("line {}: cannot parse {line:?}: {e}", lineno + 1))
        })?;
        elements.push(x);
    }
    Sequence::from_unsorted(n, elements)
}

pub fn write_binary<W: Write>(seq: &Sequence, mut out: W) -> Result<()> {
    out.write_all(&(seq.n() as u64).to_le_bytes())?;
    out.write_all(&(seq.len() as u64).to_le_bytes())?;
    for &x in seq.elements() {
        out.write_all(&(x as u64).to_le_bytes())?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_binary<R: Read>(mut input: R) -> Result<Sequence> {
    let mut word = [0u8; 8];
    let mut next = |input: &mut R| -> Result<u64> {
        input.read_exact(&mut word)?;
        Ok(u64::from_le_bytes(word))
    };
    let n = next(&mut input)?;
    let m = next(&mut input)?;
    if n == 0 || n > crate::MAX_QUBITS as u64 {
        return Err(Error::UnsupportedQubits(n as usize));
    }
    if m == 0 || m > 1 << n {
        return Err(Error::InvalidSequence(format!("header declares {m} elements for {n} qubits")));
    }
    let elements = (0..m).map(|_| next(&mut input).map(|x| x as usize)).collect::<Result<Vec<_>>>()?;
    if input.read(&mut [0u8; 1])? != 0 {
        return Err(Error::InvalidSequence("trailing bytes after the declared elements".into()));
    }
    Sequence::new(n as usize, elements)
}

/// Recognizes the binary layout by its self-consistent header.
pub fn detect_format(bytes: &[u8]) -> SequenceFormat {
    if bytes.len() >= 16 && (bytes.len() - 16) % 8 == 0 {
        let n = u64::from_le_bytes(bytes[0..8].try_into().unwrap());
        let m = u64::from_le_bytes(bytes[8..16].try_into().unwrap());
        if (1..=crate::MAX_QUBITS as u64).contains(&n) && m.checked_mul(8) == Some(bytes.len() as u64 - 16) {
            return SequenceFormat::Binary;
        }
    }
    SequenceFormat::Text
}

pub fn save(seq: &Sequence, path: &Path, format: SequenceFormat) -> Result<()> {
    let out = BufWriter::new(File::create(path)?);
    match format {
        SequenceFormat::Text => write_text(seq, out),
        SequenceFormat::Binary => write_binary(seq, out),
    }
}

/// Loads either format. Text files need `n`; binary files carry their own
/// and must agree with `n` when it is given.
pub fn load(path: &Path, n: Option<usize>) -> Result<Sequence> {
    let mut bytes = Vec::new();
    File::open(path)?.read_to_end(&mut bytes)?;
    match detect_format(&bytes) {
        SequenceFormat::Binary => {
            let seq = read_binary(bytes.as_slice())?;
            match n {
                Some(n) if n != seq.n() => Err(Error::InvalidSequence(format!(
                    "file holds a {}-qubit sequence, expected {n}",
                    seq.n()
                ))),
                _ => Ok(seq),
            }
        }
        SequenceFormat::Text => {
            let n = n.ok_or_else(|| Error::InvalidArgument("text sequence files need the qubit count".into()))?;
            read_text(BufReader::new(bytes.as_slice()), n)
        }
    }
}
