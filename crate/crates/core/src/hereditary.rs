//! The hereditary edge bound `P_{t,r}`: every subgraph `H` with `|V(H)| >= t`
//! has `|E(H)| <= t|V(H)| + r`.
//!
//! Three certifiers are provided. The exhaustive one enumerates vertex
//! subsets and finds witnesses; the flow one computes the unconstrained
//! maximum of `e(S) - t|S|` by a min cut and can only certify; the join one
//! decides `K_{floor t} ∇ F` from the component potentials of `F`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

/// Default cap on the order accepted by the exhaustive checker.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 24;
const HARD_EXHAUSTIVE_CAP: usize = 30;

fn choose2(k: i128) -> i128 {
    k * (k - 1) / 2
}

/// Admissible `(t, r)`: `t > 0` and `r >= -C(floor(t) + 1, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    t: Rational,
    r: Rational,
}

impl Params {
    pub fn new(t: Rational, r: Rational) -> Result<Params> {
        if !t.is_positive() {
            return Err(Error::Validation(format!("t must be positive, got {t}")));
        }
        let min_r = -Rational::integer(choose2(t.floor() + 1));
        if r < min_r {
            return Err(Error::Validation(format!(
                "r = {r} is below the admissible minimum {min_r} for t = {t}"
            )));
        }
        Ok(Params { t, r })
    }

    pub fn t(&self) -> Rational {
        self.t
    }

    pub fn r(&self) -> Rational {
        self.r
    }

    pub fn floor_t(&self) -> i128 {
        self.t.floor()
    }

    /// `g0 = t floor(t) + r - C(floor(t), 2)`.
    pub fn g0(&self) -> Rational {
        let ft = self.floor_t();
        self.t * ft + self.r - choose2(ft)
    }

    /// Largest edge count allowed on `k` vertices, `floor(t k + r)`.
    pub fn edge_budget(&self, k: usize) -> i128 {
        (self.t * k as i128 + self.r).floor()
    }
}

/// Constants derived from `(t, r)` that drive the bounds and the extremal plans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DerivedConstants {
    pub floor_t: i64,
    pub s: i64,
    /// `floor(t) + 1 - t`, in `(0, 1]`.
    pub t0: Rational,
    pub g0: Rational,
    /// `floor(1 / t0)`.
    pub m0: i64,
    /// Potential of the star `K_{1,m0}`, `(1 + m0) t0 - 1`.
    pub phi0: Rational,
    pub alpha0: i64,
    /// `g0 - alpha0 phi0`, in `[0, phi0)`.
    pub beta0: Rational,
}

pub fn derive_constants(p: &Params) -> Result<DerivedConstants> {
    let t = p.t;
    if t < Rational::ONE {
        return Err(Error::UnsupportedParameter(format!(
            "t = {t} < 1 admits no large connected graphs"
        )));
    }
    let ft = t.floor();
    let t0 = Rational::integer(ft + 1) - t;
    let g0 = p.g0();
    let m0 = (Rational::ONE / t0).floor();
    let phi0 = t0 * (1 + m0) - 1;
    let alpha0 = (g0 / phi0).floor();
    let beta0 = g0 - phi0 * alpha0;
    let s = ((t * (ft + 1) + p.r) / t0).ceil() + 1;
    Ok(DerivedConstants {
        floor_t: ft as i64,
        s: s as i64,
        t0,
        g0,
        m0: m0 as i64,
        phi0,
        alpha0: alpha0 as i64,
        beta0,
    })
}

/// `eta(F) = e(F) + (floor(t) - t)|V(F)|`.
pub fn eta(f: &Graph, p: &Params) -> Rational {
    potential(f.edge_count(), f.order(), p)
}

fn potential(edges: usize, vertices: usize, p: &Params) -> Rational {
    let slack = Rational::integer(p.floor_t()) - p.t;
    Rational::from(edges) + slack * vertices as i128
}

/// Components of `f` with their edge counts.
fn component_sizes(f: &Graph) -> Vec<(VertexSet, usize)> {
    f.components()
        .into_iter()
        .map(|c| {
            let edges = c.iter().map(|v| f.degree(v)).sum::<usize>() / 2;
            (c, edges)
        })
        .collect()
}

/// Sum of `eta` over the components with strictly positive potential.
pub fn eta_plus(f: &Graph, p: &Params) -> Rational {
    component_sizes(f)
        .iter()
        .map(|(c, e)| potential(*e, c.len(), p))
        .filter(|x| x.is_positive())
        .sum()
}

/// How a `Holds` verdict was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    FlowCut,
    Exhaustive,
    JoinEta,
    /// The graph has fewer than `t` vertices, so nothing is constrained.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PropertyVerdict {
    Holds {
        certificate: Certificate,
    },
    /// `witness` spans `witness_edges > bound = t|witness| + r` edges.
    Violated {
        witness: VertexSet,
        witness_edges: usize,
        bound: Rational,
    },
}

impl PropertyVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, PropertyVerdict::Holds { .. })
    }
}

fn violated(witness: VertexSet, witness_edges: usize, p: &Params) -> PropertyVerdict {
    let bound = p.t * witness.len() as i128 + p.r;
    PropertyVerdict::Violated {
        witness,
        witness_edges,
        bound,
    }
}

/// Exhaustive check over vertex subsets, capped at [`DEFAULT_EXHAUSTIVE_CAP`].
pub fn check_property_exhaustive(g: &Graph, p: &Params) -> Result<PropertyVerdict> {
    check_property_exhaustive_with_cap(g, p, DEFAULT_EXHAUSTIVE_CAP)
}

/// Enumerates every vertex subset `S` with `|S| >= ceil(t)` and compares
/// `e(G[S])` with `t|S| + r` exactly. Induced subgraphs are the binding case.
///
/// The witness is the violating subset with the smallest bitmask
/// (vertex `i` is bit `i`). Caps above 30 are clamped to 30.
pub fn check_property_exhaustive_with_cap(
    g: &Graph,
    p: &Params,
    cap: usize,
) -> Result<PropertyVerdict> {
    let n = g.order();
    let limit = cap.min(HARD_EXHAUSTIVE_CAP);
    if n > limit {
        return Err(Error::Limit {
            what: "exhaustive property check order",
            actual: n,
            limit,
        });
    }
    if Rational::from(n) < p.t {
        return Ok(PropertyVerdict::Holds {
            certificate: Certificate::Vacuous,
        });
    }
    let rows = g.dense_rows().expect("orders below 30 are dense");
    let min_size = p.t.ceil().max(1) as u32;
    let budget: Vec<i128> = (0..=n).map(|k| p.edge_budget(k)).collect();
    match first_violation(rows, min_size, &budget) {
        Some((mask, edges)) => Ok(violated(VertexSet::from_mask(mask), edges, p)),
        None => Ok(PropertyVerdict::Holds {
            certificate: Certificate::Exhaustive,
        }),
    }
}

/// Smallest subset mask whose induced edge count exceeds `budget[|S|]`.
pub(crate) fn first_violation(rows: &[u64], min_size: u32, budget: &[i128]) -> Option<(u64, usize)> {
    let n = rows.len();
    let total = 1usize << n;
    let mut edges = vec![0u16; total];
    for mask in 1..total {
        let low = mask & mask.wrapping_neg();
        let v = low.trailing_zeros() as usize;
        let rest = mask ^ low;
        let e = edges[rest] + (rows[v] & rest as u64).count_ones() as u16;
        edges[mask] = e;
        let k = mask.count_ones();
        if k >= min_size && e as i128 > budget[k as usize] {
            return Some((mask as u64, e as usize));
        }
    }
    None
}

/// `max over S ⊆ V` of `e(G[S]) - t|S|` (the empty set gives 0), by a min cut
/// on the edge/vertex selection network with capacities scaled by `denom(t)`.
pub fn max_density_excess(g: &Graph, t: Rational) -> Rational {
    let e = g.edge_count();
    let n = g.order();
    if !t.is_positive() {
        return Rational::from(e) - t * n as i128;
    }
    let (num, den) = (t.numer(), t.denom());
    let source = 0;
    let sink = 1;
    let edge_node = |i: usize| 2 + i;
    let vertex_node = |v: usize| 2 + e + v;
    let inf = den * (e as i128 + 1);
    let mut net = FlowNetwork::new(2 + e + n);
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        net.add_arc(source, edge_node(i), den);
        net.add_arc(edge_node(i), vertex_node(u), inf);
        net.add_arc(edge_node(i), vertex_node(v), inf);
    }
    for v in 0..n {
        net.add_arc(vertex_node(v), sink, num);
    }
    let cut = net.max_flow(source, sink);
    Rational::new(den * e as i128 - cut, den)
}

/// Certifies `P_{t,r}` for `g`, trying the cheap certificates first.
///
/// 1. For `r >= 0`, a maximum density excess of at most `r` proves the bound.
/// 2. If `g` has `floor(t) >= 1` universal vertices it is `K_{floor t} ∇ F`
///    and the potential test decides it.
/// 3. Otherwise the exhaustive checker decides (and may hit its cap).
pub fn check_property(g: &Graph, p: &Params) -> Result<PropertyVerdict> {
    check_property_with_cap(g, p, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn check_property_with_cap(g: &Graph, p: &Params, cap: usize) -> Result<PropertyVerdict> {
    if !p.r.is_negative() && max_density_excess(g, p.t) <= p.r {
        return Ok(PropertyVerdict::Holds {
            certificate: Certificate::FlowCut,
        });
    }
    if let Some(verdict) = check_as_join(g, p)? {
        return Ok(verdict);
    }
    check_property_exhaustive_with_cap(g, p, cap)
}

fn check_as_join(g: &Graph, p: &Params) -> Result<Option<PropertyVerdict>> {
    let n = g.order();
    let ft = p.floor_t() as usize;
    if ft == 0 || n < ft {
        return Ok(None);
    }
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 == n).take(ft).collect();
    if hubs.len() < ft {
        return Ok(None);
    }
    let rest: Vec<usize> = (0..n).filter(|v| !hubs.contains(v)).collect();
    let f = g.induced_subgraph(&rest.iter().copied().collect())?;
    let verdict = match check_join_property(&f, p) {
        PropertyVerdict::Violated {
            witness,
            witness_edges,
            bound,
        } => PropertyVerdict::Violated {
            witness: witness
                .iter()
                .map(|i| if i < ft { hubs[i] } else { rest[i - ft] })
                .collect(),
            witness_edges,
            bound,
        },
        holds => holds,
    };
    Ok(Some(verdict))
}

/// Decides `P_{t,r}` for `K_{floor t} ∇ f`: it holds exactly when
/// `eta_plus(f) <= g0`.
///
/// Witness labels follow [`Graph::join`]: hubs are `0..floor(t)` and vertex
/// `v` of `f` is `floor(t) + v`. The witness is the hubs together with every
/// positive component of `f`.
pub fn check_join_property(f: &Graph, p: &Params) -> PropertyVerdict {
    let ft = p.floor_t() as usize;
    let comps = component_sizes(f);
    let positive: Vec<&(VertexSet, usize)> = comps
        .iter()
        .filter(|(c, e)| potential(*e, c.len(), p).is_positive())
        .collect();
    let plus: Rational = positive.iter().map(|(c, e)| potential(*e, c.len(), p)).sum();
    if plus <= p.g0() {
        return PropertyVerdict::Holds {
            certificate: Certificate::JoinEta,
        };
    }
    let mut witness: VertexSet = (0..ft).collect();
    let mut inner_edges = 0;
    let mut inner_vertices = 0;
    for (c, e) in &positive {
        inner_edges += e;
        inner_vertices += c.len();
        for v in c.iter() {
            witness.insert(ft + v);
        }
    }
    let witness_edges = ft * (ft.saturating_sub(1)) / 2 + ft * inner_vertices + inner_edges;
    violated(witness, witness_edges, p)
}

/// A subgraph of some host graph: a vertex subset and a subset of the host's
/// edges inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgraphEmbedding {
    pub vertices: VertexSet,
    pub edges: Vec<(usize, usize)>,
}

impl SubgraphEmbedding {
    /// The induced subgraph of `host` on `vertices`.
    pub fn induced(host: &Graph, vertices: VertexSet) -> Self {
        let edges = host
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| vertices.contains(u) && vertices.contains(v))
            .collect();
        SubgraphEmbedding { vertices, edges }
    }

    fn validate(&self, host: &Graph) -> Result<()> {
        if let Some(m) = self.vertices.max() {
            if m >= host.order() {
                return Err(Error::Validation(format!(
                    "embedded vertex {m} is outside the host of order {}",
                    host.order()
                )));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(u, v) in &self.edges {
            let key = (u.min(v), u.max(v));
            if !self.vertices.contains(u) || !self.vertices.contains(v) {
                return Err(Error::Validation(format!(
                    "embedded edge {{{u}, {v}}} leaves the vertex subset"
                )));
            }
            if !host.has_edge(u, v) {
                return Err(Error::Validation(format!("{{{u}, {v}}} is not a host edge")));
            }
            if !seen.insert(key) {
                return Err(Error::Validation(format!("edge {{{u}, {v}}} embedded twice")));
            }
        }
        Ok(())
    }
}

/// Reports whether `eta(sub) <= eta(f)`.
///
/// This always holds for connected `f`. For disconnected `f` it can fail when
/// `sub` drops a whole component of negative potential; the sharp statement
/// there is `eta(sub) <= eta_plus(f)`.
pub fn eta_monotone_check(f: &Graph, sub: &SubgraphEmbedding, p: &Params) -> Result<bool> {
    sub.validate(f)?;
    Ok(potential(sub.edges.len(), sub.vertices.len(), p) <= eta(f, p))
}

/// `(t-1)/2 + sqrt(t(t+1) + 2r) + sqrt(t n)`, for integer `t`.
pub fn bound_t0(n: usize, p: &Params) -> Result<f64> {
    if !p.t.is_integer() {
        return Err(Error::UnsupportedParameter(format!(
            "this bound needs an integer t, got {}",
            p.t
        )));
    }
    let t = p.t.to_f64();
    let inner = (p.t * (p.t + 1) + p.r * 2).to_f64();
    Ok((t - 1.0) / 2.0 + inner.sqrt() + (t * n as f64).sqrt())
}

/// The larger root of
/// `rho^2 - (s + ft - 2) rho - ft n + ft^2 + (s - 1)(ft - 1) = 0`, `ft = floor(t)`.
pub fn bound_t2(n: usize, p: &Params) -> Result<f64> {
    let dc = derive_constants(p)?;
    let (s, ft) = (dc.s as i128, dc.floor_t as i128);
    let half = Rational::new(s + ft - 2, 2);
    let disc = half * half + ft * n as i128 - ft * ft - (s - 1) * (ft - 1);
    if disc.is_negative() {
        return Err(Error::Domain(format!(
            "negative discriminant {disc} at n = {n}"
        )));
    }
    Ok(half.to_f64() + disc.to_f64().sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(t: &str, r: &str) -> Params {
        Params::new(t.parse().unwrap(), r.parse().unwrap()).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(Params::new(Rational::ZERO, Rational::ZERO).is_err());
        assert!(Params::new(q("3/2"), q("-1")).is_ok());
        assert!(Params::new(q("3/2"), q("-3/2")).is_err());
        assert!(Params::new(q("2"), q("-3")).is_ok());
        assert!(Params::new(q("2"), q("-31/10")).is_err());
    }

    #[test]
    fn constants_examples() {
        let dc = derive_constants(&params("3/2", "0")).unwrap();
        assert_eq!((dc.floor_t, dc.s, dc.m0, dc.alpha0), (1, 7, 2, 3));
        assert_eq!((dc.t0, dc.g0, dc.phi0, dc.beta0), (q("1/2"), q("3/2"), q("1/2"), q("0")));

        let dc = derive_constants(&params("2", "0")).unwrap();
        assert_eq!((dc.floor_t, dc.s, dc.m0, dc.alpha0), (2, 7, 1, 3));
        assert_eq!((dc.t0, dc.g0, dc.phi0, dc.beta0), (q("1"), q("3"), q("1"), q("0")));

        let dc = derive_constants(&params("1", "0")).unwrap();
        assert_eq!((dc.floor_t, dc.s, dc.m0, dc.alpha0), (1, 3, 1, 1));
        assert_eq!((dc.t0, dc.g0, dc.phi0, dc.beta0), (q("1"), q("1"), q("1"), q("0")));
    }

    #[test]
    fn constants_reject_small_t() {
        assert!(matches!(
            derive_constants(&params("1/2", "0")),
            Err(Error::UnsupportedParameter(_))
        ));
    }

    #[test]
    fn eta_examples() {
        let p = params("3/2", "0");
        assert_eq!(eta(&Graph::empty(1), &p), q("-1/2"));
        assert_eq!(eta(&Graph::complete(3), &p), q("3/2"));
        let dc = derive_constants(&p).unwrap();
        assert_eq!(eta(&Graph::star(dc.m0 as usize), &p), dc.phi0);
    }

    #[test]
    fn eta_plus_examples() {
        let p = params("3/2", "0");
        let f = Graph::union_all(&[Graph::star(4), Graph::complete(2), Graph::complete(2)]);
        assert_eq!(eta_plus(&f, &p), q("3/2"));
        assert_eq!(eta_plus(&Graph::empty(7), &p), q("0"));
        let f = Graph::star(4).disjoint_union(&Graph::star(4));
        assert_eq!(eta_plus(&f, &p), q("3"));
    }

    #[test]
    fn exhaustive_examples() {
        let p = params("1", "0");
        match check_property_exhaustive(&Graph::complete(4), &p).unwrap() {
            PropertyVerdict::Violated {
                witness,
                witness_edges,
                bound,
            } => {
                assert_eq!(witness.to_vec(), vec![0, 1, 2, 3]);
                assert_eq!(witness_edges, 6);
                assert_eq!(bound, q("4"));
            }
            v => panic!("{v:?}"),
        }
        assert!(check_property_exhaustive(&Graph::cycle(4).unwrap(), &p)
            .unwrap()
            .holds());
        match check_property_exhaustive(&Graph::complete_bipartite(7, 2), &params("3/2", "0")).unwrap() {
            PropertyVerdict::Violated { witness_edges, bound, witness } => {
                assert!(Rational::from(witness_edges) > bound);
                assert_eq!(witness.len(), 9);
                assert_eq!((witness_edges, bound), (14, q("27/2")));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn exhaustive_vacuous_and_cap() {
        let p = params("5/2", "0");
        assert_eq!(
            check_property_exhaustive(&Graph::complete(2), &p).unwrap(),
            PropertyVerdict::Holds {
                certificate: Certificate::Vacuous
            }
        );
        assert!(matches!(
            check_property_exhaustive(&Graph::empty(25), &p),
            Err(Error::Limit { .. })
        ));
        assert!(check_property_exhaustive_with_cap(&Graph::empty(25), &p, 25).is_ok());
    }

    #[test]
    fn density_excess_examples() {
        assert_eq!(max_density_excess(&Graph::complete(4), q("1")), q("2"));
        assert_eq!(max_density_excess(&Graph::star(3), q("1")), q("0"));
        assert_eq!(max_density_excess(&Graph::complete(5), q("5")), q("0"));
        assert_eq!(max_density_excess(&Graph::complete(4), q("1/2")), q("4"));
        assert_eq!(max_density_excess(&Graph::complete(3), q("0")), q("3"));
    }

    #[test]
    fn composite_checker_examples() {
        let p = params("1", "0");
        assert_eq!(
            check_property(&Graph::cycle(4).unwrap(), &p).unwrap(),
            PropertyVerdict::Holds {
                certificate: Certificate::FlowCut
            }
        );
        match check_property(&Graph::complete(4), &p).unwrap() {
            PropertyVerdict::Violated { witness, .. } => assert_eq!(witness.to_vec(), vec![0, 1, 2, 3]),
            v => panic!("{v:?}"),
        }
        assert_eq!(
            check_property(&Graph::complete(4), &params("1", "2")).unwrap(),
            PropertyVerdict::Holds {
                certificate: Certificate::FlowCut
            }
        );
    }

    #[test]
    fn composite_checker_negative_r_skips_flow() {
        let p = params("1", "-1");
        let v = check_property(&Graph::path(5), &p).unwrap();
        assert!(v.holds());
        assert_ne!(v, PropertyVerdict::Holds { certificate: Certificate::FlowCut });
        assert!(!check_property(&Graph::cycle(5).unwrap(), &p).unwrap().holds());
    }

    #[test]
    fn join_examples() {
        let p = params("3/2", "0");
        let holds = Graph::union_all(&[Graph::star(4), Graph::complete(2), Graph::complete(2)]);
        assert!(check_join_property(&holds, &p).holds());
        let joined = Graph::complete(1).join(&holds);
        assert!(check_property_exhaustive(&joined, &p).unwrap().holds());

        let fails = Graph::star(4).disjoint_union(&Graph::star(4));
        let verdict = check_join_property(&fails, &p);
        assert!(!verdict.holds());
        let joined = Graph::complete(1).join(&fails);
        assert!(!check_property_exhaustive(&joined, &p).unwrap().holds());
        if let PropertyVerdict::Violated { witness, witness_edges, bound } = verdict {
            assert_eq!(witness.len(), 11);
            assert_eq!(witness_edges, 18);
            assert!(Rational::from(witness_edges) > bound);
        }

        for (t, r) in [("1", "0"), ("3/2", "-1"), ("7/3", "5")] {
            assert!(check_join_property(&Graph::empty(6), &params(t, r)).holds());
        }
    }

    #[test]
    fn eta_monotone_examples() {
        let p = params("3/2", "0");
        let k3 = Graph::complete(3);
        let k2_in_k3 = SubgraphEmbedding {
            vertices: [0, 1].into_iter().collect(),
            edges: vec![(0, 1)],
        };
        assert!(eta_monotone_check(&k3, &k2_in_k3, &p).unwrap());
        let whole = SubgraphEmbedding::induced(&k3, VertexSet::full(3));
        assert!(eta_monotone_check(&k3, &whole, &p).unwrap());
        let star = Graph::star(4);
        let edge = SubgraphEmbedding {
            vertices: [0, 1].into_iter().collect(),
            edges: vec![(0, 1)],
        };
        assert!(eta_monotone_check(&star, &edge, &p).unwrap());

        let bad = SubgraphEmbedding {
            vertices: [1, 2].into_iter().collect(),
            edges: vec![(1, 2)],
        };
        assert!(matches!(eta_monotone_check(&star, &bad, &p), Err(Error::Validation(_))));
    }

    #[test]
    fn eta_monotonicity_fails_when_dropping_negative_components() {
        // F = K_2 ∪ K_1 at t = 3/2 has eta = -1/2; dropping the isolated vertex leaves eta(K_2) = 0.
        let p = params("3/2", "0");
        let f = Graph::complete(2).disjoint_union(&Graph::empty(1));
        let sub = SubgraphEmbedding::induced(&f, [0, 1].into_iter().collect());
        assert!(!eta_monotone_check(&f, &sub, &p).unwrap());
        assert!(Rational::from(sub.edges.len()) - Rational::from(2usize) <= eta_plus(&f, &p));
    }

    #[test]
    fn bound_t0_examples() {
        let v = bound_t0(9, &params("1", "0")).unwrap();
        assert!((v - (2f64.sqrt() + 3.0)).abs() < 1e-12);
        let v = bound_t0(8, &params("2", "0")).unwrap();
        assert!((v - (0.5 + 6f64.sqrt() + 4.0)).abs() < 1e-12);
        assert!((v - 6.94949).abs() < 1e-5);
        let v = bound_t0(1, &params("1", "0")).unwrap();
        assert!((v - (2f64.sqrt() + 1.0)).abs() < 1e-12);
        assert!(bound_t0(5, &params("3/2", "0")).is_err());
    }

    #[test]
    fn bound_t2_examples() {
        let v = bound_t2(10, &params("2", "0")).unwrap();
        assert!((v - (3.5 + 22.25f64.sqrt())).abs() < 1e-12);
        assert!((v - 8.21699).abs() < 1e-5);
        assert_eq!(bound_t2(9, &params("1", "0")).unwrap(), 4.0);
        for (t, r) in [("1", "0"), ("3/2", "0"), ("2", "1"), ("7/3", "-2")] {
            let p = params(t, r);
            let ft = p.floor_t() as f64;
            for n in 4..60 {
                let lower = (ft * (n as f64 - ft)).sqrt();
                assert!(bound_t2(n, &p).unwrap() >= lower);
            }
        }
    }
}
