//! Simple undirected graphs.
//!
//! Graphs are immutable values. Orders up to [`DENSE_LIMIT`] keep a bit-row
//! adjacency matrix; larger graphs keep sorted adjacency lists.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest order stored as a dense bit matrix.
pub const DENSE_LIMIT: usize = 62;

/// Largest order accepted by [`Graph::canonical_form`].
pub const ISOMORPHISM_LIMIT: usize = 10;

/// A subset of `{0, …, order-1}` stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: Vec<u64>,
    len: usize,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The set whose members are the set bits of `mask`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = VertexSet::new();
        if mask != 0 {
            s.words.push(mask);
            s.len = mask.count_ones() as usize;
        }
        s
    }

    /// `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        if fresh {
            self.words[w] |= 1 << b;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        let present = self.contains(v);
        if present {
            self.words[w] &= !(1 << b);
            self.len -= 1;
            while self.words.last() == Some(&0) {
                self.words.pop();
            }
        }
        present
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Largest member, if any.
    pub fn max(&self) -> Option<usize> {
        let (i, w) = self.words.iter().enumerate().rev().find(|(_, w)| **w != 0)?;
        Some(i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The members as a single word, if they all fit below 64.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[derive(Clone)]
enum Adjacency {
    Dense(Vec<u64>),
    Sparse(Vec<Vec<usize>>),
}

/// A simple undirected graph on vertices `0..order`.
///
/// Edges are stored as sorted pairs `(u, v)` with `u < v`.
#[derive(Clone)]
pub struct Graph {
    order: usize,
    edges: Vec<(usize, usize)>,
    adj: Adjacency,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Validates and builds a graph. Pairs may be given in either orientation.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::Range { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Validation(format!(
                "duplicate edge {{{}, {}}}",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph::from_sorted(order, list))
    }

    /// `edges` must be sorted, deduplicated, normalized and in range.
    fn from_sorted(order: usize, edges: Vec<(usize, usize)>) -> Graph {
        let adj = if order <= DENSE_LIMIT {
            let mut rows = vec![0u64; order];
            for &(u, v) in &edges {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            Adjacency::Dense(rows)
        } else {
            let mut lists = vec![Vec::new(); order];
            for &(u, v) in &edges {
                lists[u].push(v);
                lists[v].push(u);
            }
            for l in &mut lists {
                l.sort_unstable();
            }
            Adjacency::Sparse(lists)
        };
        Graph { order, edges, adj }
    }

    fn from_unsorted(order: usize, mut edges: Vec<(usize, usize)>) -> Graph {
        edges.sort_unstable();
        Graph::from_sorted(order, edges)
    }

    /// Builds a graph of order at most 64 from adjacency bit rows.
    pub fn from_rows(rows: &[u64]) -> Result<Graph> {
        let n = rows.len();
        if n > 64 {
            return Err(Error::Limit {
                what: "bit-row graph order",
                actual: n,
                limit: 64,
            });
        }
        let mut edges = Vec::new();
        for (u, &row) in rows.iter().enumerate() {
            for v in u + 1..n {
                if row >> v & 1 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges)
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted(n, Vec::new())
    }

    /// The complete graph `K_k`.
    pub fn complete(k: usize) -> Graph {
        let edges = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
        Graph::from_sorted(k, edges)
    }

    /// The star `K_{1,leaves}` with center 0; `star(0)` is a single vertex.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_sorted(leaves + 1, (1..=leaves).map(|v| (0, v)).collect())
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_sorted(a + b, edges)
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Graph {
        Graph::from_sorted(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Validation(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Ok(Graph::from_unsorted(n, edges))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Adjacency bit rows, present when `order <= DENSE_LIMIT`.
    pub fn dense_rows(&self) -> Option<&[u64]> {
        match &self.adj {
            Adjacency::Dense(rows) => Some(rows),
            Adjacency::Sparse(_) => None,
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.order || v >= self.order {
            return false;
        }
        match &self.adj {
            Adjacency::Dense(rows) => rows[u] >> v & 1 == 1,
            Adjacency::Sparse(lists) => lists[u].binary_search(&v).is_ok(),
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        match &self.adj {
            Adjacency::Dense(rows) => rows[v].count_ones() as usize,
            Adjacency::Sparse(lists) => lists[v].len(),
        }
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> Neighbors<'_> {
        match &self.adj {
            Adjacency::Dense(rows) => Neighbors::Bits(rows[v]),
            Adjacency::Sparse(lists) => Neighbors::List(lists[v].iter()),
        }
    }

    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Degrees in nonincreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `self` followed by `other`, whose vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_sorted(self.order + other.order, edges)
    }

    /// Disjoint union of a sequence of graphs, in order.
    pub fn union_all<'a, I: IntoIterator<Item = &'a Graph>>(parts: I) -> Graph {
        parts
            .into_iter()
            .fold(Graph::empty(0), |acc, g| acc.disjoint_union(g))
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let (a, b) = (self.order, other.order);
        let mut edges = self.edges.clone();
        edges.extend((0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))));
        edges.extend(other.edges.iter().map(|&(u, v)| (u + a, v + a)));
        Graph::from_unsorted(a + b, edges)
    }

    /// The subgraph induced by `set`, relabelled by increasing vertex index.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Graph> {
        if let Some(m) = set.max() {
            if m >= self.order {
                return Err(Error::Range {
                    vertex: m,
                    order: self.order,
                });
            }
        }
        let mut index = vec![usize::MAX; self.order];
        for (i, v) in set.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Ok(Graph::from_sorted(set.len(), edges))
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = VertexSet::new();
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.order];
        if perm.len() != self.order
            || perm.iter().any(|&p| p >= self.order || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Validation("relabelling is not a permutation".into()));
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        Ok(Graph::from_unsorted(self.order, edges))
    }

    /// A copy with the edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::from_edges(self.order, edges)
    }

    /// A copy with the edge `{u, v}` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let key = (u.min(v), u.max(v));
        let edges = self.edges.iter().copied().filter(|&e| e != key).collect();
        Graph::from_sorted(self.order, edges)
    }

    /// An encoding that is equal for two graphs exactly when they are isomorphic.
    ///
    /// The first byte is the order; the rest is the lexicographically least
    /// upper-triangle bit string (graph6 column order) over all relabellings
    /// that respect a colour-refined degree partition.
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        let n = self.order;
        if n > ISOMORPHISM_LIMIT {
            return Err(Error::Limit {
                what: "canonical form order",
                actual: n,
                limit: ISOMORPHISM_LIMIT,
            });
        }
        let rows = self.dense_rows().expect("small graphs are dense");
        let key = canonical_key(rows);
        let mut out = vec![n as u8];
        out.extend_from_slice(&key.to_be_bytes());
        Ok(out)
    }

    /// Rebuilds the canonically labelled representative from [`Graph::canonical_form`] output.
    pub fn from_canonical_form(bytes: &[u8]) -> Result<Graph> {
        let malformed = |message: &str| Error::Parse {
            offset: 0,
            message: message.into(),
        };
        if bytes.len() != 9 {
            return Err(malformed("canonical form must be 9 bytes"));
        }
        let n = bytes[0] as usize;
        if n > ISOMORPHISM_LIMIT {
            return Err(malformed("canonical form order out of range"));
        }
        let key = u64::from_be_bytes(bytes[1..].try_into().expect("8 bytes"));
        let total = n * n.saturating_sub(1) / 2;
        if total < 64 && key >> total != 0 {
            return Err(malformed("canonical form has stray bits"));
        }
        let mut edges = Vec::new();
        let mut bit = total;
        for j in 1..n {
            for i in 0..j {
                bit -= 1;
                if key >> bit & 1 == 1 {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(n, edges)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        if self.order != other.order || self.edge_count() != other.edge_count() {
            // Still enforce the limit so behaviour does not depend on cheap rejections.
            self.canonical_form()?;
            other.canonical_form()?;
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

/// Iterator over the neighbors of a vertex.
pub enum Neighbors<'a> {
    Bits(u64),
    List(std::slice::Iter<'a, usize>),
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        match self {
            Neighbors::Bits(bits) => {
                if *bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    *bits &= *bits - 1;
                    Some(b)
                }
            }
            Neighbors::List(it) => it.next().copied(),
        }
    }
}

/// Colour refinement: returns a colour per vertex, with colours numbered in
/// an isomorphism-invariant order.
fn refine_colours(rows: &[u64]) -> Vec<usize> {
    let n = rows.len();
    let mut colour: Vec<usize> = rows.iter().map(|r| r.count_ones() as usize).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = Neighbors::Bits(rows[v]).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        colour = sigs
            .iter()
            .map(|s| uniq.binary_search(s).expect("signature present"))
            .collect();
        if uniq.len() == classes {
            return colour;
        }
        classes = uniq.len();
    }
}

struct CanonSearch<'a> {
    rows: &'a [u64],
    n: usize,
    /// Colour required at each position.
    slot_colour: Vec<usize>,
    colour: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    best: Option<u64>,
    total_bits: u32,
}

impl CanonSearch<'_> {
    fn run(&mut self, pos: usize, prefix: u64, bits: u32) {
        if let Some(best) = self.best {
            let shifted = if bits == 0 { 0 } else { best >> (self.total_bits - bits) };
            if prefix > shifted {
                return;
            }
        }
        if pos == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let want = self.slot_colour[pos];
        let mut tried: u64 = 0;
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.colour[v] != want {
                continue;
            }
            // Two unused vertices with equal neighbourhoods outside each other are
            // swapped by an automorphism fixing everything else: try only one.
            let twin = Neighbors::Bits(tried)
                .any(|u| (self.rows[u] ^ self.rows[v]) & !(1u64 << u | 1u64 << v) == 0);
            if twin {
                continue;
            }
            tried |= 1 << v;
            let mut col = 0u64;
            for i in 0..pos {
                col = col << 1 | (self.rows[self.perm[i]] >> v & 1);
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.run(pos + 1, (prefix << pos) | col, bits + pos as u32);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

fn canonical_key(rows: &[u64]) -> u64 {
    let n = rows.len();
    if n <= 1 {
        return 0;
    }
    let colour = refine_colours(rows);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let mut search = CanonSearch {
        rows,
        n,
        slot_colour,
        colour,
        perm: Vec::with_capacity(n),
        used: 0,
        best: None,
        total_bits: (n * (n - 1) / 2) as u32,
    };
    search.run(0, 0, 0);
    search.best.expect("at least one labelling")
}
