//! Spectral radius, Perron vectors and exact walk counts.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hereditary::{derive_constants, Params};

/// Default residual tolerance for power iteration.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Default iteration cap for power iteration.
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

/// Spectral radius with its nonnegative unit eigenvector.
#[derive(Debug, Clone, Serialize)]
pub struct PerronResult {
    pub rho: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
    /// `max_i |(A x)_i - rho x_i|` at the returned iterate.
    pub residual: f64,
}

/// Outcome of comparing two graphs by their walk-count sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum WalkComparison {
    Equivalent,
    /// `W_level` of the first graph is larger and all earlier levels agree.
    FirstPreferable { level: usize },
    SecondPreferable { level: usize },
}

struct Component {
    rho: f64,
    vector: Vec<f64>,
    iterations: usize,
    residual: f64,
}

/// Power iteration on `A + I` over one connected piece given as local adjacency lists.
fn power_iterate(adj: &[Vec<usize>], tol: f64, max_iter: usize) -> Result<Component> {
    let k = adj.len();
    let mut x = vec![1.0 / (k as f64).sqrt(); k];
    let mut ax = vec![0.0; k];
    let mut theta = f64::NAN;
    let mut residual = f64::INFINITY;
    for it in 0..=max_iter {
        for (i, nb) in adj.iter().enumerate() {
            ax[i] = nb.iter().map(|&j| x[j]).sum();
        }
        theta = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        residual = ax
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - theta * b).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok(Component {
                rho: theta,
                vector: x,
                iterations: it,
                residual,
            });
        }
        if it == max_iter {
            break;
        }
        let norm = ax
            .iter()
            .zip(&x)
            .map(|(a, b)| (a + b) * (a + b))
            .sum::<f64>()
            .sqrt();
        for (xi, ai) in x.iter_mut().zip(&ax) {
            *xi = (*xi + ai) / norm;
        }
    }
    Err(Error::Convergence {
        rho: theta,
        residual,
        iterations: max_iter,
    })
}

/// Largest adjacency eigenvalue and its Perron vector.
///
/// Each component with an edge is iterated separately on the shifted matrix
/// `A + I`; the component with the largest eigenvalue wins (the earliest one
/// on ties) and the vector is zero elsewhere. An edgeless graph returns
/// `rho = 0` with the uniform vector.
pub fn spectral_radius(g: &Graph, tol: f64, max_iter: usize) -> Result<PerronResult> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Validation("spectral radius of the empty graph".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Validation(format!("tolerance must be positive, got {tol}")));
    }
    if g.edge_count() == 0 {
        return Ok(PerronResult {
            rho: 0.0,
            vector: vec![1.0 / (n as f64).sqrt(); n],
            iterations: 0,
            residual: 0.0,
        });
    }
    let mut local = vec![usize::MAX; n];
    let mut best: Option<(VertexSet, Component)> = None;
    for comp in g.components().into_iter().filter(|c| c.len() > 1) {
        for (i, v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let adj: Vec<Vec<usize>> = comp
            .iter()
            .map(|v| g.neighbors(v).map(|w| local[w]).collect())
            .collect();
        let res = power_iterate(&adj, tol, max_iter)?;
        if best.as_ref().is_none_or(|(_, b)| res.rho > b.rho) {
            best = Some((comp, res));
        }
    }
    let (comp, res) = best.expect("a graph with an edge has a nontrivial component");
    let mut vector = vec![0.0; n];
    for (v, x) in comp.iter().zip(res.vector) {
        vector[v] = x;
    }
    Ok(PerronResult {
        rho: res.rho,
        vector,
        iterations: res.iterations,
        residual: res.residual,
    })
}

/// Spectral radius of a graph of order at most 64 given by adjacency bit rows.
///
/// Same algorithm as [`spectral_radius`] without building a [`Graph`]; used by
/// the enumeration paths.
pub fn spectral_radius_rows(rows: &[u64], tol: f64, max_iter: usize) -> Result<f64> {
    let n = rows.len();
    let mut remaining: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best: f64 = 0.0;
    let mut x = [0.0f64; 64];
    let mut ax = [0.0f64; 64];
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = rows[v] & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        remaining &= !comp;
        let k = comp.count_ones();
        if k < 2 {
            continue;
        }
        let init = 1.0 / (k as f64).sqrt();
        let mut bits = comp;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            x[v] = init;
        }
        let mut converged = false;
        let mut theta = 0.0;
        let mut residual = f64::INFINITY;
        for it in 0..=max_iter {
            theta = 0.0;
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let mut s = 0.0;
                let mut nb = rows[v];
                while nb != 0 {
                    s += x[nb.trailing_zeros() as usize];
                    nb &= nb - 1;
                }
                ax[v] = s;
                theta += s * x[v];
            }
            residual = 0.0;
            let mut norm = 0.0;
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                residual = f64::max(residual, (ax[v] - theta * x[v]).abs());
                norm += (ax[v] + x[v]) * (ax[v] + x[v]);
            }
            if residual <= tol {
                converged = true;
                break;
            }
            if it == max_iter {
                break;
            }
            let norm = norm.sqrt();
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                x[v] = (x[v] + ax[v]) / norm;
            }
        }
        if !converged {
            return Err(Error::Convergence {
                rho: theta,
                residual,
                iterations: max_iter,
            });
        }
        best = best.max(theta);
    }
    Ok(best)
}

/// Walk counts `W_1, W_2, …` generated level by level with overflow checks.
struct WalkSequence<'a> {
    g: &'a Graph,
    per_vertex: Vec<u128>,
    level: usize,
}

impl<'a> WalkSequence<'a> {
    fn new(g: &'a Graph) -> Self {
        WalkSequence {
            g,
            per_vertex: vec![1; g.order()],
            level: 0,
        }
    }

    fn advance(&mut self) -> Result<u128> {
        self.level += 1;
        let overflow = Error::Overflow {
            what: "walk count",
            level: self.level,
        };
        let mut next = vec![0u128; self.g.order()];
        for (v, slot) in next.iter_mut().enumerate() {
            let mut s: u128 = 0;
            for w in self.g.neighbors(v) {
                s = s.checked_add(self.per_vertex[w]).ok_or_else(|| overflow.clone())?;
            }
            *slot = s;
        }
        let total = next
            .iter()
            .try_fold(0u128, |acc, &x| acc.checked_add(x))
            .ok_or(overflow)?;
        self.per_vertex = next;
        Ok(total)
    }
}

/// Exact walk totals `[W_1, …, W_lmax]`.
pub fn walk_counts(g: &Graph, lmax: usize) -> Result<Vec<u128>> {
    if lmax == 0 {
        return Err(Error::Validation("lmax must be at least 1".into()));
    }
    let mut seq = WalkSequence::new(g);
    (0..lmax).map(|_| seq.advance()).collect()
}

/// Compares walk totals level by level up to `order(h1) + order(h2)`.
///
/// Agreement on that whole window implies agreement at every level: each
/// difference `W_l(h1) - W_l(h2)` is an exponential sum over at most that
/// many distinct eigenvalues.
pub fn walk_compare(h1: &Graph, h2: &Graph) -> Result<WalkComparison> {
    let window = h1.order() + h2.order();
    let mut a = WalkSequence::new(h1);
    let mut b = WalkSequence::new(h2);
    for level in 1..=window {
        match a.advance()?.cmp(&b.advance()?) {
            Ordering::Greater => return Ok(WalkComparison::FirstPreferable { level }),
            Ordering::Less => return Ok(WalkComparison::SecondPreferable { level }),
            Ordering::Equal => {}
        }
    }
    Ok(WalkComparison::Equivalent)
}

/// `sum_v deg(v)^p`, exactly.
pub fn degree_power_sum(g: &Graph, p: u32) -> Result<u128> {
    if p == 0 {
        return Err(Error::Validation("degree power must be at least 1".into()));
    }
    let overflow = || Error::Overflow {
        what: "degree power sum",
        level: p as usize,
    };
    (0..g.order()).try_fold(0u128, |acc, v| {
        let term = (g.degree(v) as u128).checked_pow(p).ok_or_else(overflow)?;
        acc.checked_add(term).ok_or_else(overflow)
    })
}

/// Vertices whose Perron entry is at least `(1 - 1/(50 s^2))` times the largest entry.
pub fn heavy_vertex_set(g: &Graph, params: &Params, tol: f64) -> Result<VertexSet> {
    if !g.is_connected() {
        return Err(Error::Validation("heavy vertex set needs a connected graph".into()));
    }
    let s = derive_constants(params)?.s as f64;
    let perron = spectral_radius(g, tol, DEFAULT_MAX_ITER)?;
    let top = perron.vector.iter().copied().fold(0.0, f64::max);
    let threshold = (1.0 - 1.0 / (50.0 * s * s)) * top;
    Ok(perron
        .vector
        .iter()
        .enumerate()
        .filter(|(_, &x)| x >= threshold)
        .map(|(v, _)| v)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn rho(g: &Graph) -> f64 {
        spectral_radius(g, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap().rho
    }

    #[test]
    fn closed_form_radii() {
        assert!((rho(&Graph::complete_bipartite(2, 8)) - 4.0).abs() < 1e-9);
        assert!((rho(&Graph::complete(7)) - 6.0).abs() < 1e-9);
        assert!((rho(&Graph::star(4)) - 2.0).abs() < 1e-9);
        assert!((rho(&Graph::cycle(9).unwrap()) - 2.0).abs() < 1e-9);
        let expected = 2.0 * (std::f64::consts::PI / 9.0).cos();
        assert!((rho(&Graph::path(8)) - expected).abs() < 1e-9);
    }

    #[test]
    fn perron_vector_is_unit_and_nonnegative() {
        let g = Graph::complete(2).join(&Graph::complete(3).disjoint_union(&Graph::empty(5)));
        let p = spectral_radius(&g, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let norm: f64 = p.vector.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-12);
        assert!(p.vector.iter().all(|&x| x >= 0.0));
        assert!(p.residual <= DEFAULT_TOL);
    }

    #[test]
    fn disconnected_graph_uses_largest_component() {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(5));
        let p = spectral_radius(&g, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert!((p.rho - 4.0).abs() < 1e-9);
        assert!(p.vector[..3].iter().all(|&x| x == 0.0));
        assert!(p.vector[3..].iter().all(|&x| x > 0.0));
    }

    #[test]
    fn edgeless_and_empty() {
        let p = spectral_radius(&Graph::empty(3), DEFAULT_TOL, 10).unwrap();
        assert_eq!(p.rho, 0.0);
        assert!(spectral_radius(&Graph::empty(0), DEFAULT_TOL, 10).is_err());
        assert!(spectral_radius(&Graph::star(2), 0.0, 10).is_err());
    }

    #[test]
    fn convergence_error_carries_estimate() {
        let err = spectral_radius(&Graph::path(30), 1e-14, 3).unwrap_err();
        match err {
            Error::Convergence { rho, iterations, .. } => {
                assert!(rho > 1.0 && rho < 2.0);
                assert_eq!(iterations, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn row_kernel_matches_general_path() {
        let g = Graph::complete(2)
            .join(&Graph::star(3).disjoint_union(&Graph::empty(2)))
            .disjoint_union(&Graph::cycle(5).unwrap());
        let fast = spectral_radius_rows(g.dense_rows().unwrap(), DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert!((fast - rho(&g)).abs() < 1e-9);
        assert_eq!(spectral_radius_rows(&[0, 0], DEFAULT_TOL, 10).unwrap(), 0.0);
    }

    #[test]
    fn walk_count_examples() {
        assert_eq!(walk_counts(&Graph::complete(3), 3).unwrap()[2], 24);
        assert_eq!(walk_counts(&Graph::star(3), 3).unwrap()[2], 18);
        assert!(walk_counts(&Graph::star(3), 0).is_err());
    }

    #[test]
    fn walk_count_overflow_is_reported() {
        let err = walk_counts(&Graph::complete(40), 40).unwrap_err();
        assert!(matches!(err, Error::Overflow { level, .. } if level > 20 && level <= 40));
    }

    #[test]
    fn walk_compare_examples() {
        let tri = Graph::complete(3).disjoint_union(&Graph::empty(5));
        let claw = Graph::star(3).disjoint_union(&Graph::empty(4));
        assert_eq!(
            walk_compare(&tri, &claw).unwrap(),
            WalkComparison::FirstPreferable { level: 3 }
        );
        assert_eq!(walk_compare(&tri, &tri).unwrap(), WalkComparison::Equivalent);
        let matching = Graph::union_all(&vec![Graph::complete(2); 4]);
        assert_eq!(
            walk_compare(&matching, &tri).unwrap(),
            WalkComparison::FirstPreferable { level: 1 }
        );
        assert_eq!(
            walk_compare(&tri, &matching).unwrap(),
            WalkComparison::SecondPreferable { level: 1 }
        );
    }

    #[test]
    fn degree_power_sums() {
        let claw = Graph::star(3).disjoint_union(&Graph::empty(2));
        let tri = Graph::complete(3).disjoint_union(&Graph::empty(1));
        assert_eq!(degree_power_sum(&claw, 2).unwrap(), 12);
        assert_eq!(degree_power_sum(&tri, 2).unwrap(), 12);
        assert_eq!(degree_power_sum(&Graph::star(4), 2).unwrap(), 20);
        assert_eq!(degree_power_sum(&Graph::cycle(5).unwrap(), 1).unwrap(), 10);
        assert!(degree_power_sum(&tri, 0).is_err());
        assert!(matches!(
            degree_power_sum(&Graph::star(100), 40),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn heavy_vertices() {
        let t2 = Params::new(Rational::integer(2), Rational::ZERO).unwrap();
        let kb = Graph::complete_bipartite(2, 8);
        assert_eq!(heavy_vertex_set(&kb, &t2, DEFAULT_TOL).unwrap().to_vec(), vec![0, 1]);
        let g = Graph::complete(2).join(&Graph::complete(3).disjoint_union(&Graph::empty(5)));
        assert_eq!(heavy_vertex_set(&g, &t2, DEFAULT_TOL).unwrap().to_vec(), vec![0, 1]);
        let t1 = Params::new(Rational::ONE, Rational::integer(100)).unwrap();
        assert_eq!(heavy_vertex_set(&Graph::complete(6), &t1, DEFAULT_TOL).unwrap().len(), 6);
        assert!(heavy_vertex_set(&Graph::empty(2), &t1, DEFAULT_TOL).is_err());
    }
}
