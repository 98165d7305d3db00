//! graph6 encoding and newline-delimited graph6 streams.
//!
//! Layout: one byte `63 + n`, then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed
//! big-endian six bits per byte, zero-padded, each byte offset by 63.
//! Only the single-byte order prefix is produced; on input, the `~` prefix
//! is recognised so oversized graphs get a precise error.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, MAX_ORDER};

/// Optional first-line header written by some tools.
pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("order {order} (declared at offset {offset}) exceeds 31")]
    OrderTooLarge { offset: usize, order: usize },
    #[error("record has {found} bytes, expected {expected} (mismatch at offset {offset})")]
    BadLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("order-0 graphs are not supported")]
    ZeroOrder,
    #[error("nonzero padding bits in byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

/// Number of data bytes after the order byte for an order-`n` graph.
#[inline]
fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Encodes `g` as a graph6 record (no trailing newline).
pub fn encode(g: &SmallGraph) -> String {
    // Every byte is printable ASCII by construction.
    String::from_utf8(encode_bytes(g)).unwrap()
}

pub fn encode_bytes(g: &SmallGraph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        let col = g.neighbors(j).0;
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    out
}

/// Decodes one graph6 record. Surrounding whitespace is not accepted.
pub fn decode(record: &str) -> Result<SmallGraph, Graph6Error> {
    decode_bytes(record.as_bytes())
}

pub fn decode_bytes(bytes: &[u8]) -> Result<SmallGraph, Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::NonPrintable { offset, byte });
        }
    }
    if first == 126 {
        // Multi-byte order prefix: always beyond capacity, but report the order.
        let order = bytes
            .get(1..4)
            .map(|b| {
                b.iter()
                    .fold(0usize, |acc, &x| acc << 6 | (x - 63) as usize)
            })
            .unwrap_or(usize::MAX);
        return Err(Graph6Error::OrderTooLarge { offset: 0, order });
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge {
            offset: 0,
            order: n,
        });
    }
    let expected = 1 + data_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::BadLength {
            offset: expected.min(bytes.len()),
            expected,
            found: bytes.len(),
        });
    }
    if n == 0 {
        return Err(Graph6Error::ZeroOrder);
    }
    let total_bits = n * (n - 1) / 2;
    let pad = expected.saturating_sub(1) * 6 - total_bits;
    if pad > 0 {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding {
                offset: expected - 1,
            });
        }
    }
    let mut rows = [0u32; MAX_ORDER];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(SmallGraph::from_rows_unchecked(n, &rows))
}

/// What to do with a malformed line in a stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OnError {
    /// Stop at the first bad line.
    #[default]
    FailFast,
    /// Log the bad line and continue.
    Skip,
}

/// Streaming reader over newline-delimited graph6 records.
///
/// Yields `(line_number, graph)` pairs with 1-based line numbers. Blank lines
/// and a leading `>>graph6<<` header are skipped; CRLF endings are accepted.
pub struct Graph6Reader<R> {
    inner: R,
    line: usize,
    buf: Vec<u8>,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader {
            inner,
            line: 0,
            buf: Vec::with_capacity(128),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = Result<(usize, SmallGraph)>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.inner.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.line += 1;
            let mut rec: &[u8] = &self.buf;
            while let [rest @ .., b'\n' | b'\r'] = rec {
                rec = rest;
            }
            if self.line == 1 {
                if let Some(rest) = rec.strip_prefix(HEADER.as_bytes()) {
                    rec = rest;
                }
            }
            if rec.is_empty() {
                continue;
            }
            let line = self.line;
            return Some(
                decode_bytes(rec)
                    .map(|g| (line, g))
                    .map_err(|source| Error::Line { line, source }),
            );
        }
    }
}

/// Everything read from a stream, plus the diagnostics of skipped lines.
#[derive(Debug, Default)]
pub struct StreamReport {
    pub graphs: Vec<SmallGraph>,
    pub skipped: Vec<Error>,
}

/// Reads a whole stream into memory. Use [`Graph6Reader`] for bounded memory.
pub fn read_stream<R: BufRead>(source: R, mode: OnError) -> Result<StreamReport> {
    let mut report = StreamReport::default();
    for item in Graph6Reader::new(source) {
        match item {
            Ok((_, g)) => report.graphs.push(g),
            Err(e @ Error::Line { .. }) if mode == OnError::Skip => {
                log::warn!("skipping malformed record: {e}");
                report.skipped.push(e);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Writes one record per line (LF), returning the number written.
pub fn write_stream<'a, W, I>(mut sink: W, graphs: I) -> io::Result<usize>
where
    W: Write,
    I: IntoIterator<Item = &'a SmallGraph>,
{
    let mut count = 0;
    for g in graphs {
        sink.write_all(&encode_bytes(g))?;
        sink.write_all(b"\n")?;
        count += 1;
    }
    sink.flush()?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn fixed_vectors() {
        let k1 = SmallGraph::empty(1).unwrap();
        assert_eq!(encode(&k1), "@");
        assert_eq!(decode("@").unwrap(), k1);
        let k2 = named::complete(2);
        assert_eq!(encode(&k2), "A_");
        assert_eq!(decode("A_").unwrap(), k2);
        // Widely published vectors.
        assert_eq!(encode(&named::complete(4)), "C~");
        assert_eq!(encode(&named::petersen()).len(), 9);
    }

    #[test]
    fn matches_reference_encoder_on_five_vertex_example() {
        // A-C, A-E, B-D, D-E as in petgraph's graph6 tests.
        let g = SmallGraph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode("C"), Err(Graph6Error::BadLength { .. })));
        assert!(matches!(decode("A_?"), Err(Graph6Error::BadLength { .. })));
        assert!(matches!(
            decode("A\x01"),
            Err(Graph6Error::NonPrintable { offset: 1, .. })
        ));
        assert!(matches!(
            decode("A "),
            Err(Graph6Error::NonPrintable { offset: 1, .. })
        ));
        // "A" followed by 0b100001: the low bit is padding.
        assert!(matches!(
            decode("A`"),
            Err(Graph6Error::NonzeroPadding { offset: 1 })
        ));
        assert!(matches!(
            decode("_"),
            Err(Graph6Error::OrderTooLarge { order: 32, .. })
        ));
        assert!(matches!(
            decode("~?@?"),
            Err(Graph6Error::OrderTooLarge { order: 64, .. })
        ));
        assert!(decode("?").is_err());
    }

    #[test]
    fn stream_reading() {
        let text = "@\nA_\r\nC~\n";
        let r = read_stream(text.as_bytes(), OnError::FailFast).unwrap();
        assert_eq!(r.graphs.len(), 3);
        assert_eq!(r.graphs[2], named::complete(4));

        let text = ">>graph6<<C~\n";
        let r = read_stream(text.as_bytes(), OnError::FailFast).unwrap();
        assert_eq!(r.graphs, vec![named::complete(4)]);

        let text = ">>graph6<<\nC~\n";
        let r = read_stream(text.as_bytes(), OnError::FailFast).unwrap();
        assert_eq!(r.graphs.len(), 1);

        let text = "@\nA`\nC~\n";
        let r = read_stream(text.as_bytes(), OnError::Skip).unwrap();
        assert_eq!(r.graphs.len(), 2);
        assert_eq!(r.skipped.len(), 1);
        assert!(matches!(r.skipped[0], Error::Line { line: 2, .. }));

        let err = read_stream(text.as_bytes(), OnError::FailFast).unwrap_err();
        assert!(matches!(err, Error::Line { line: 2, .. }));
    }

    #[test]
    fn stream_writing() {
        let mut out = Vec::new();
        let gs = [named::complete(2), named::complete(4)];
        assert_eq!(write_stream(&mut out, &gs).unwrap(), 2);
        assert_eq!(out, b"A_\nC~\n");
    }
}
