//! graph6 (short form) and plain edge-list serialization.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, DENSE_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFormat {
    Graph6,
    Edgelist,
}

/// A serialized graph together with its format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphText {
    pub format: GraphFormat,
    pub payload: Vec<u8>,
}

impl GraphText {
    pub fn encode(g: &Graph, format: GraphFormat) -> Result<GraphText> {
        let payload = match format {
            GraphFormat::Graph6 => encode_graph6(g)?,
            GraphFormat::Edgelist => encode_edgelist(g).into_bytes(),
        };
        Ok(GraphText { format, payload })
    }

    /// Guesses the format: a single whitespace-free token is graph6.
    pub fn detect(payload: &[u8]) -> GraphText {
        let body = payload.trim_ascii();
        let format = if body.iter().any(|b| b.is_ascii_whitespace()) {
            GraphFormat::Edgelist
        } else {
            GraphFormat::Graph6
        };
        GraphText {
            format,
            payload: payload.to_vec(),
        }
    }

    pub fn decode(&self) -> Result<Graph> {
        match self.format {
            GraphFormat::Graph6 => decode_graph6(&self.payload),
            GraphFormat::Edgelist => {
                let text = std::str::from_utf8(&self.payload).map_err(|e| Error::Parse {
                    offset: e.valid_up_to(),
                    message: "edge list is not UTF-8".into(),
                })?;
                decode_edgelist(text)
            }
        }
    }
}

/// Short-form graph6: one byte `n + 63`, then the upper triangle in column
/// order packed six bits per byte (most significant first), each plus 63.
pub fn encode_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > DENSE_LIMIT {
        return Err(Error::UnsupportedParameter(format!(
            "graph6 long form is not supported (order {n} > {DENSE_LIMIT})"
        )));
    }
    let mut out = vec![n as u8 + 63];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(out)
}

/// Inverse of [`encode_graph6`]. Surrounding whitespace is ignored; padding
/// bits must be zero.
pub fn decode_graph6(bytes: &[u8]) -> Result<Graph> {
    let lead = bytes.len() - bytes.trim_ascii_start().len();
    let body = bytes.trim_ascii();
    let err = |offset: usize, message: String| Error::Parse {
        offset: lead + offset,
        message,
    };
    let (&first, rest) = body
        .split_first()
        .ok_or_else(|| err(0, "empty graph6 input".into()))?;
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(pos, format!("byte {} outside the graph6 range 63..=126", body[pos])));
    }
    if first == 126 {
        return Err(err(0, "graph6 long form (order above 62) is not supported".into()));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if rest.len() != want {
        return Err(err(
            1 + rest.len().min(want),
            format!("order {n} needs {want} data bytes, found {}", rest.len()),
        ));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if let Some(k) = (bits..want * 6).find(|&k| bit(k)) {
        return Err(err(1 + k / 6, "nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// `n m` on the first line, then one `u v` line per edge (0-indexed).
pub fn encode_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

pub fn decode_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .split_inclusive('\n')
        .scan(0usize, |offset, line| {
            let start = *offset;
            *offset += line.len();
            Some((start, line.trim()))
        })
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));
    let pair = |offset: usize, line: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = |message: String| Error::Parse { offset, message };
        if fields.len() != 2 {
            return Err(bad(format!("expected two integers, found {line:?}")));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| bad(format!("{s:?} is not a vertex count or index: {e}")))
        };
        Ok((parse(fields[0])?, parse(fields[1])?))
    };
    let (offset, header) = lines.next().ok_or_else(|| Error::Parse {
        offset: 0,
        message: "missing \"n m\" header".into(),
    })?;
    let (n, m) = pair(offset, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut end = text.len();
    for (offset, line) in lines {
        edges.push(pair(offset, line)?);
        end = offset;
    }
    if edges.len() != m {
        return Err(Error::Parse {
            offset: end,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

/// Parses graph6 or an edge list, chosen by [`GraphText::detect`].
pub fn parse_graph(payload: &[u8]) -> Result<Graph> {
    GraphText::detect(payload).decode()
}
