//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` bit-set row per vertex, so construction, BFS and
//! complementation stay cheap enough for sweeps over millions of graphs.
//! Vertex ids are 0-based everywhere.

use std::fmt;
use thiserror::Error;

/// Hard cap on vertex count; one machine word per adjacency row.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("graph has {n} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices { n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex id {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 encodes {n} vertices; at most {MAX_VERTICES} are supported")]
    TooLarge { n: usize },
    #[error("graph6 encodes a graph with no vertices")]
    ZeroVertices,
    #[error("invalid graph6 byte {byte:#04x} at position {pos} (must be 63..=126)")]
    InvalidChar { pos: usize, byte: u8 },
    #[error("malformed length header: expected {expected} data characters, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("nonzero padding bits in final graph6 character")]
    NonzeroPadding,
}

#[derive(Debug, Error)]
pub enum EdgeListTextError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("unexpected end of input: expected {expected} edge lines, found {found}")]
    UnexpectedEof { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An explicit edge list: vertex count plus unordered 0-based pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Immutable simple undirected graph with bit-set adjacency rows.
///
/// Invariants (enforced by every constructor): `1 ≤ n ≤ 64`, adjacency is
/// symmetric and irreflexive. Values are safe to share across threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline(always)]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline(always)]
fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Builds a graph from an edge list, validating every pair.
    pub fn from_edge_list(e: &EdgeList) -> Result<Self, GraphError> {
        if e.n == 0 {
            return Err(GraphError::NoVertices);
        }
        if e.n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: e.n });
        }
        let mut adj = vec![0u64; e.n];
        for &(u, v) in &e.edges {
            if u >= e.n {
                return Err(GraphError::VertexOutOfRange { v: u, n: e.n });
            }
            if v >= e.n {
                return Err(GraphError::VertexOutOfRange { v, n: e.n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            if adj[u] & bit(v) != 0 {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph { n: e.n, adj })
    }

    /// Builds a graph from raw adjacency rows without per-edge validation.
    /// Debug builds still assert symmetry and irreflexivity.
    pub fn from_adjacency_rows(n: usize, adj: Vec<u64>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        debug_assert_eq!(adj.len(), n);
        #[cfg(debug_assertions)]
        {
            let mask = full_mask(n);
            for v in 0..n {
                debug_assert_eq!(adj[v] & !mask, 0, "bits outside 0..n at row {v}");
                debug_assert_eq!(adj[v] & bit(v), 0, "self-loop at vertex {v}");
                let mut row = adj[v];
                while row != 0 {
                    let u = row.trailing_zeros() as usize;
                    row &= row - 1;
                    debug_assert_ne!(adj[u] & bit(v), 0, "asymmetric at ({u},{v})");
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Builds an n-vertex graph from an edge bit-mask.
    ///
    /// Bit `k` of `mask` is the k-th pair in column-major upper-triangle
    /// order: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), … — the same order
    /// graph6 uses, so mask enumeration and graph6 strings line up.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![0u64; n];
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                if mask & (1u64 << k) != 0 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline(always)]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.adj.iter().map(|row| row.count_ones()).sum();
        (total / 2) as usize
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Neighbour bit-set of `v`.
    #[inline(always)]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// All adjacency rows; `adjacency()[v]` is the neighbour bit-set of `v`.
    #[inline(always)]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbor_ids(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, in column-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Breadth-first reachability from vertex 0. A 1-vertex graph counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        let full = full_mask(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen == full
    }

    /// Complement on the same vertex set: `u ~ v` in the output iff `u ≠ v`
    /// and `u ≁ v` here. Involution: `g.complement().complement() == g`.
    pub fn complement(&self) -> Graph {
        let mask = full_mask(self.n);
        let adj = (0..self.n)
            .map(|v| mask & !(self.adj[v] | bit(v)))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Edge mask in the column-major pair order used by [`Graph::from_edge_mask`].
    ///
    /// Only defined when the triangle fits one word, i.e. `n ≤ 11`.
    pub fn edge_mask(&self) -> u64 {
        assert!(
            self.n * (self.n - 1) / 2 <= 64,
            "edge_mask requires n(n-1)/2 <= 64"
        );
        let mut mask = 0u64;
        let mut k = 0usize;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1u64 << k;
                }
                k += 1;
            }
        }
        mask
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, g6={})", self.n, emit_graph6(self))
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Parses one graph6 line (an optional `>>graph6<<` header is stripped).
///
/// The encoding is the standard one: a size header (one character for
/// `n ≤ 62`, `~` plus three characters otherwise), then the column-major
/// upper triangle of the adjacency matrix packed into 6-bit chunks offset
/// by 63. Padding bits must be zero.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let s = line.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar { pos, byte: b });
        }
    }
    let (n, data_start) = if bytes[0] == 126 {
        // '~' introduces an 18-bit size; '~~' (126-bit sizes) is far beyond
        // the 64-vertex cap, so reject it by magnitude after decoding.
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength {
                expected: 4,
                found: bytes.len(),
            });
        }
        if bytes[1] == 126 {
            return Err(Graph6Error::TooLarge { n: usize::MAX });
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n });
    }
    let nbits = n * (n - 1) / 2;
    let nchars = nbits.div_ceil(6);
    let found = bytes.len() - data_start;
    if found != nchars {
        return Err(Graph6Error::BadLength {
            expected: nchars,
            found,
        });
    }
    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let chunk = bytes[data_start + k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = bytes[data_start + nchars - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph { n, adj })
}

/// Encodes a graph as a graph6 string; inverse of [`parse_graph6`].
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n;
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut chunk = 0u8;
    let mut used = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk <<= 1;
            if g.has_edge(i, j) {
                chunk |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(chunk + 63);
                chunk = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((chunk << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses the edge-list text format: first line `n m`, then `m` lines `u v`
/// (0-based, whitespace-separated). Blank lines and `#` comments are ignored.
pub fn parse_edge_list_text(text: &str) -> Result<Graph, EdgeListTextError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(EdgeListTextError::Malformed {
        line: 1,
        msg: "missing 'n m' header".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse_num = |tok: Option<&str>, what: &str, line: usize| -> Result<usize, EdgeListTextError> {
        tok.ok_or_else(|| EdgeListTextError::Malformed {
            line,
            msg: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| EdgeListTextError::Malformed {
            line,
            msg: format!("invalid {what}"),
        })
    };
    let n = parse_num(it.next(), "vertex count", line)?;
    let m = parse_num(it.next(), "edge count", line)?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, l) = lines.next().ok_or(EdgeListTextError::UnexpectedEof {
            expected: m,
            found: edges.len(),
        })?;
        let mut it = l.split_whitespace();
        let u = parse_num(it.next(), "edge endpoint", line)?;
        let v = parse_num(it.next(), "edge endpoint", line)?;
        edges.push((u, v));
    }
    if let Some((line, _)) = lines.next() {
        return Err(EdgeListTextError::Malformed {
            line,
            msg: "trailing content after last edge".into(),
        });
    }
    Ok(Graph::from_edge_list(&EdgeList { n, edges })?)
}

/// Writes the edge-list text format accepted by [`parse_edge_list_text`].
pub fn emit_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
