//! Exhaustive search for the largest spectral radius among all labelled
//! graphs of a small order that satisfy the hereditary edge bound.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{build_extremal, plan_extremal};
use crate::graph::Graph;
use crate::hereditary::{first_violation, Params};
use crate::io::encode_graph6;
use crate::spectral::{spectral_radius_rows, DEFAULT_MAX_ITER};

/// Largest order accepted by [`exhaustive_search`].
pub const SEARCH_LIMIT: usize = 8;
/// Graphs whose radius is within this of the maximum are all reported.
pub const RHO_TIE_TOL: f64 = 1e-9;
const SEARCH_TOL: f64 = 1e-12;
const CHUNK_BITS: u32 = 18;

/// Vertex pairs in graph6 column order: `(0,1), (0,2), (1,2), (0,3), …`.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn rows_from_mask(pairs: &[(usize, usize)], n: usize, mask: u64, rows: &mut [u64]) {
    rows[..n].fill(0);
    let mut bits = mask;
    while bits != 0 {
        let k = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (i, j) = pairs[k];
        rows[i] |= 1 << j;
        rows[j] |= 1 << i;
    }
}

/// The labelled graph on `n` vertices whose edge set is given by `mask`, bit `k`
/// selecting the `k`-th pair of [`pair_order`].
pub fn labeled_graph(n: usize, mask: u64) -> Result<Graph> {
    let pairs = pair_order(n);
    if pairs.len() < 64 && mask >> pairs.len() != 0 {
        return Err(Error::Validation(format!(
            "mask {mask:#x} has bits beyond the {} vertex pairs",
            pairs.len()
        )));
    }
    Graph::from_edges(
        n,
        (0..pairs.len()).filter(|k| mask >> k & 1 == 1).map(|k| pairs[k]),
    )
}

/// One maximizer, up to isomorphism.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Maximizer {
    /// graph6 of the canonically labelled representative.
    pub graph6: String,
    pub edges: usize,
    pub rho: f64,
}

/// How the constructed extremal graph compares with the search result.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConstructionComparison {
    /// The construction is isomorphic to one of the maximizers.
    Agrees { graph6: String, rho: f64 },
    /// The construction is not among the maximizers at this order.
    Deviates { graph6: String, rho: f64 },
    /// No construction exists at this order.
    Unavailable { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub params: Params,
    pub labeled_graphs: u64,
    pub satisfying_graphs: u64,
    pub max_rho: f64,
    /// Sorted by canonical form.
    pub maximizers: Vec<Maximizer>,
    pub construction: ConstructionComparison,
}

#[derive(Default)]
struct ChunkResult {
    satisfying: u64,
    candidates: HashMap<Vec<u8>, f64>,
}

struct Enumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    min_size: u32,
    budget: Vec<i128>,
}

impl Enumerator {
    fn chunk(&self, start: u64, end: u64) -> Result<ChunkResult> {
        let n = self.n;
        let constrained = n as u32 >= self.min_size;
        let whole_budget = self.budget[n];
        let mut rows = [0u64; SEARCH_LIMIT];
        let mut out = ChunkResult::default();
        let mut survivors: Vec<(f64, u64)> = Vec::new();
        for mask in start..end {
            if constrained && mask.count_ones() as i128 > whole_budget {
                continue;
            }
            rows_from_mask(&self.pairs, n, mask, &mut rows);
            if constrained && first_violation(&rows[..n], self.min_size, &self.budget).is_some() {
                continue;
            }
            out.satisfying += 1;
            survivors.push((edge_degree_bound(&rows[..n]), mask));
        }
        survivors.sort_by(|a, b| b.0.total_cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut best = f64::NEG_INFINITY;
        let mut kept: Vec<(f64, u64)> = Vec::new();
        for &(bound, mask) in &survivors {
            if bound + 1e-8 < best - RHO_TIE_TOL {
                break;
            }
            rows_from_mask(&self.pairs, n, mask, &mut rows);
            let rho = spectral_radius_rows(&rows[..n], SEARCH_TOL, DEFAULT_MAX_ITER)?;
            best = best.max(rho);
            if rho >= best - RHO_TIE_TOL {
                kept.push((rho, mask));
            }
        }
        for (rho, mask) in kept.into_iter().filter(|&(rho, _)| rho >= best - RHO_TIE_TOL) {
            let key = labeled_graph(n, mask)?.canonical_form()?;
            let slot = out.candidates.entry(key).or_insert(rho);
            *slot = slot.max(rho);
        }
        Ok(out)
    }
}

/// `max over edges uv of sqrt(d_u d_v)`, an upper bound on the spectral radius.
fn edge_degree_bound(rows: &[u64]) -> f64 {
    let mut best = 0u32;
    for (u, &row) in rows.iter().enumerate() {
        let du = row.count_ones();
        let mut higher = row >> u >> 1 << 1 << u;
        while higher != 0 {
            let v = higher.trailing_zeros() as usize;
            higher &= higher - 1;
            best = best.max(du * rows[v].count_ones());
        }
    }
    (best as f64).sqrt()
}

/// Enumerates all `2^C(n,2)` labelled graphs on `n` vertices, keeps those
/// satisfying the property (whole-graph edge count first, then every vertex
/// subset exactly) and reports the largest spectral radius with all
/// maximizers up to isomorphism.
///
/// Work is split into fixed mask ranges across `jobs` threads; the report does
/// not depend on `jobs`. Survivors are visited in decreasing order of an edge
/// degree upper bound so that most radii are never computed.
pub fn exhaustive_search(n: usize, p: &Params, jobs: usize) -> Result<SearchReport> {
    if n > SEARCH_LIMIT {
        return Err(Error::Limit {
            what: "exhaustive search order",
            actual: n,
            limit: SEARCH_LIMIT,
        });
    }
    if n == 0 {
        return Err(Error::Validation("exhaustive search needs n >= 1".into()));
    }
    if jobs == 0 {
        return Err(Error::Validation("jobs must be at least 1".into()));
    }
    let pairs = pair_order(n);
    let total: u64 = 1 << pairs.len();
    let enumerator = Enumerator {
        n,
        pairs,
        min_size: p.t().ceil().max(1) as u32,
        budget: (0..=n).map(|k| p.edge_budget(k)).collect(),
    };
    let chunk = 1u64 << CHUNK_BITS;
    let ranges: Vec<(u64, u64)> = (0..total.div_ceil(chunk))
        .map(|i| (i * chunk, ((i + 1) * chunk).min(total)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Validation(format!("cannot start {jobs} workers: {e}")))?;
    let parts: Vec<ChunkResult> = pool.install(|| {
        ranges
            .par_iter()
            .map(|&(s, e)| enumerator.chunk(s, e))
            .collect::<Result<_>>()
    })?;

    let mut satisfying = 0;
    let mut merged: BTreeMap<Vec<u8>, f64> = BTreeMap::new();
    for part in parts {
        satisfying += part.satisfying;
        for (key, rho) in part.candidates {
            let slot = merged.entry(key).or_insert(rho);
            *slot = slot.max(rho);
        }
    }
    let max_rho = merged.values().copied().fold(0.0, f64::max);
    let mut maximizers = Vec::new();
    let mut keys = Vec::new();
    for (key, rho) in merged.into_iter().filter(|&(_, rho)| rho >= max_rho - RHO_TIE_TOL) {
        let g = Graph::from_canonical_form(&key)?;
        maximizers.push(Maximizer {
            graph6: graph6_string(&g)?,
            edges: g.edge_count(),
            rho,
        });
        keys.push(key);
    }
    let construction = match plan_extremal(n, p) {
        Ok(plan) => {
            let g = build_extremal(&plan);
            let rows = g.dense_rows().expect("small graphs are dense");
            let rho = spectral_radius_rows(rows, SEARCH_TOL, DEFAULT_MAX_ITER)?;
            let canon = g.canonical_form()?;
            let graph6 = graph6_string(&Graph::from_canonical_form(&canon)?)?;
            if keys.contains(&canon) {
                ConstructionComparison::Agrees { graph6, rho }
            } else {
                ConstructionComparison::Deviates { graph6, rho }
            }
        }
        Err(e) => ConstructionComparison::Unavailable {
            reason: e.to_string(),
        },
    };
    Ok(SearchReport {
        n,
        params: *p,
        labeled_graphs: total,
        satisfying_graphs: satisfying,
        max_rho,
        maximizers,
        construction,
    })
}

fn graph6_string(g: &Graph) -> Result<String> {
    Ok(String::from_utf8(encode_graph6(g)?).expect("graph6 is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hereditary::check_property_exhaustive;
    use crate::rational::Rational;
    use crate::spectral::{spectral_radius, DEFAULT_TOL};

    fn params(t: &str, r: &str) -> Params {
        Params::new(t.parse().unwrap(), r.parse().unwrap()).unwrap()
    }

    #[test]
    fn pair_order_is_column_major() {
        assert_eq!(pair_order(4), vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
        assert!(pair_order(1).is_empty());
    }

    #[test]
    fn labeled_graph_round_trip() {
        assert_eq!(labeled_graph(3, 0b111).unwrap(), Graph::complete(3));
        assert!(labeled_graph(3, 0b1000).is_err());
    }

    #[test]
    fn degree_bound_dominates_radius() {
        for mask in 0..(1u64 << 10) {
            let g = labeled_graph(5, mask).unwrap();
            let rho = spectral_radius(&g, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap().rho;
            assert!(rho <= edge_degree_bound(g.dense_rows().unwrap()) + 1e-9);
        }
    }

    #[test]
    fn counts_match_direct_checking() {
        let p = params("1", "0");
        let report = exhaustive_search(4, &p, 2).unwrap();
        let direct = (0..64u64)
            .filter(|&m| check_property_exhaustive(&labeled_graph(4, m).unwrap(), &p).unwrap().holds())
            .count() as u64;
        assert_eq!(report.satisfying_graphs, direct);
        assert_eq!(report.labeled_graphs, 64);
    }

    #[test]
    fn small_forests_at_t_one() {
        // With t = 1, r = 0 every graph on 4 vertices with at most one cycle per component qualifies;
        // K_1 ∇ (K_2 ∪ K_1) and C_4 are both candidates, the former wins.
        let report = exhaustive_search(4, &params("1", "0"), 1).unwrap();
        let best = Graph::complete(1).join(&Graph::complete(2).disjoint_union(&Graph::empty(1)));
        let rho = spectral_radius(&best, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap().rho;
        assert!((report.max_rho - rho).abs() < 1e-9);
        assert_eq!(report.maximizers.len(), 1);
        assert!(matches!(report.construction, ConstructionComparison::Agrees { .. }));
    }

    #[test]
    fn deterministic_across_jobs() {
        let p = params("3/2", "0");
        let a = exhaustive_search(6, &p, 1).unwrap();
        let b = exhaustive_search(6, &p, 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn limits() {
        let p = params("1", "0");
        assert!(matches!(exhaustive_search(9, &p, 1), Err(Error::Limit { .. })));
        assert!(exhaustive_search(0, &p, 1).is_err());
        assert!(exhaustive_search(3, &p, 0).is_err());
    }

    #[test]
    fn vacuous_orders_keep_everything() {
        let p = Params::new(Rational::integer(5), Rational::ZERO).unwrap();
        let report = exhaustive_search(3, &p, 1).unwrap();
        assert_eq!(report.satisfying_graphs, 8);
        assert!((report.max_rho - 2.0).abs() < 1e-9);
        assert!(matches!(report.construction, ConstructionComparison::Unavailable { .. }));
    }
}
