//! Extremal graphs for the hereditary edge bound: `K_{floor t} ∇ F` where `F`
//! is either a triangle plus isolated vertices or a star forest.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hereditary::{bound_t2, check_join_property, derive_constants, eta_plus, DerivedConstants, Params};
use crate::rational::Rational;
use crate::spectral::{spectral_radius, DEFAULT_MAX_ITER, DEFAULT_TOL};

/// Counts of the star forest. With `m0 = floor(1/t0)` the forest has
/// one maximal star `K_{1,m0+a}` (when `maximal_present`), `b` big stars
/// `K_{1,m0}`, `small_count` small stars `K_{1,m0-1}` and, when `gamma < m0`,
/// one minimal star `K_{1,gamma-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StarProfile {
    pub a: usize,
    pub b: usize,
    pub small_count: usize,
    pub gamma: usize,
    /// `n - floor(t) - alpha0 = n0 m0 + gamma0` with `1 <= gamma0 <= m0`.
    pub n0: usize,
    pub gamma0: usize,
    /// False only when `alpha0 = 0`: then no component has positive potential.
    pub maximal_present: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Branch {
    /// `F = K_3 ∪ (n - floor(t) - 3) K_1`.
    Triangle,
    StarForest(StarProfile),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalPlan {
    pub n: usize,
    pub params: Params,
    pub constants: DerivedConstants,
    pub branch: Branch,
}

fn too_small(n: usize, reason: String) -> Error {
    Error::NTooSmall { n, reason }
}

/// True when the triangle forest beats every star forest: `3 t0 <= g0 < 8 t0 - 4`.
pub fn triangle_branch(dc: &DerivedConstants) -> bool {
    dc.t0 * 3 <= dc.g0 && dc.g0 < dc.t0 * 8 - 4
}

/// The excess `a` of the maximal star over `m0`.
pub fn maximal_excess(dc: &DerivedConstants) -> i64 {
    if dc.alpha0 == 0 {
        return 0;
    }
    if dc.t0 == dc.phi0 {
        return dc.alpha0 - 1;
    }
    let slack = (dc.beta0 / (dc.t0 - dc.phi0)).floor();
    slack.min((dc.alpha0 - 1) as i128) as i64
}

pub fn plan_extremal(n: usize, p: &Params) -> Result<ExtremalPlan> {
    let dc = derive_constants(p)?;
    let ft = dc.floor_t as usize;
    if n < ft {
        return Err(too_small(n, format!("order must be at least floor(t) = {ft}")));
    }
    let rest = (n - ft) as i64;
    if triangle_branch(&dc) {
        if rest < 3 {
            return Err(too_small(n, format!("the triangle forest needs n >= {}", ft + 3)));
        }
        return Ok(ExtremalPlan {
            n,
            params: *p,
            constants: dc,
            branch: Branch::Triangle,
        });
    }
    let m0 = dc.m0;
    let a = maximal_excess(&dc);
    let maximal_present = dc.alpha0 >= 1;
    let b = if maximal_present { dc.alpha0 - a - 1 } else { 0 };
    let rem = rest - dc.alpha0;
    if rem < 1 {
        return Err(too_small(
            n,
            format!("the star forest needs n >= {}", ft as i64 + dc.alpha0 + 1),
        ));
    }
    let n0 = (rem - 1) / m0;
    let gamma0 = rem - n0 * m0;
    let small_count = match (maximal_present, gamma0 < m0) {
        (true, true) => n0 - b - 1,
        (true, false) => n0 - b,
        (false, true) => n0,
        (false, false) => n0 + 1,
    };
    if small_count < 0 {
        return Err(too_small(
            n,
            format!("{b} big stars and the maximal star do not fit"),
        ));
    }
    Ok(ExtremalPlan {
        n,
        params: *p,
        constants: dc,
        branch: Branch::StarForest(StarProfile {
            a: a as usize,
            b: b as usize,
            small_count: small_count as usize,
            gamma: gamma0 as usize,
            n0: n0 as usize,
            gamma0: gamma0 as usize,
            maximal_present,
        }),
    })
}

impl ExtremalPlan {
    /// The graph `F` joined to `K_{floor t}`.
    pub fn forest(&self) -> Graph {
        let ft = self.constants.floor_t as usize;
        match self.branch {
            Branch::Triangle => Graph::complete(3).disjoint_union(&Graph::empty(self.n - ft - 3)),
            Branch::StarForest(sp) => {
                let m0 = self.constants.m0 as usize;
                let mut parts = Vec::new();
                if sp.maximal_present {
                    parts.push(Graph::star(m0 + sp.a));
                }
                parts.extend(std::iter::repeat_n(Graph::star(m0), sp.b));
                parts.extend(std::iter::repeat_n(Graph::star(m0 - 1), sp.small_count));
                if sp.gamma < m0 {
                    parts.push(Graph::star(sp.gamma - 1));
                }
                Graph::union_all(&parts)
            }
        }
    }

    /// Edges of `F` on a star forest: `n - floor(t) - (n0 + 1)` when a maximal
    /// star is present, otherwise one component per `m0` vertices rounded up.
    pub fn expected_forest_edges(&self) -> Option<usize> {
        let rest = self.n - self.constants.floor_t as usize;
        match self.branch {
            Branch::Triangle => None,
            Branch::StarForest(sp) => Some(rest - self.expected_components(&sp)),
        }
    }

    fn expected_components(&self, sp: &StarProfile) -> usize {
        let rest = self.n - self.constants.floor_t as usize;
        let m0 = self.constants.m0 as usize;
        if sp.maximal_present {
            sp.n0 + 1
        } else {
            rest.div_ceil(m0)
        }
    }

    /// `eta_plus` of the planned forest, `alpha0 phi0 + a (t0 - phi0)`.
    pub fn planned_eta_plus(&self) -> Option<Rational> {
        match self.branch {
            Branch::Triangle => None,
            Branch::StarForest(sp) => {
                let dc = &self.constants;
                Some(dc.phi0 * dc.alpha0 as i128 + (dc.t0 - dc.phi0) * sp.a as i128)
            }
        }
    }
}

pub fn build_extremal(plan: &ExtremalPlan) -> Graph {
    Graph::complete(plan.constants.floor_t as usize).join(&plan.forest())
}

/// Twice the objective `a^2 + a + c^2 - 2c(m0 - gamma0 + 1/2)`.
pub fn f2_score(a: i64, c: i64, dc: &DerivedConstants, gamma0: i64) -> i64 {
    2 * a * a + 2 * a + 2 * c * c - 2 * c * (2 * (dc.m0 - gamma0) + 1)
}

/// `(a, c)` with `a t0 - (a + c) phi0 <= beta0`, `0 <= c <= m0 - gamma0`,
/// `a + c <= alpha0 - 1` and `a >= 0`.
pub fn f2_feasible(a: i64, c: i64, dc: &DerivedConstants, gamma0: i64) -> bool {
    a >= 0
        && c >= 0
        && c <= dc.m0 - gamma0
        && a + c < dc.alpha0
        && dc.t0 * a as i128 - dc.phi0 * (a + c) as i128 <= dc.beta0
}

/// The closed-form choice `(a, 0)` used by the construction.
pub fn f2_closed_form(dc: &DerivedConstants) -> (i64, i64) {
    (maximal_excess(dc), 0)
}

/// Maximizer of [`f2_score`] over the feasible region by enumeration; ties go
/// to the smaller `a`, then the smaller `c`. `None` when the region is empty.
pub fn f2_region_argmax(dc: &DerivedConstants, gamma0: i64) -> Option<(i64, i64)> {
    let mut best: Option<(i64, (i64, i64))> = None;
    for a in 0..dc.alpha0 {
        for c in 0..=(dc.m0 - gamma0).min(dc.alpha0 - 1 - a) {
            if !f2_feasible(a, c, dc, gamma0) {
                continue;
            }
            let score = f2_score(a, c, dc, gamma0);
            if best.is_none_or(|(s, _)| score > s) {
                best = Some((score, (a, c)));
            }
        }
    }
    best.map(|(_, ac)| ac)
}

/// Center of a star component given as a vertex set: the unique vertex of
/// full degree, the smaller endpoint of a `K_2`, or the lone vertex of `K_1`.
fn star_center(f: &Graph, comp: &VertexSet) -> Option<usize> {
    let k = comp.len();
    let edges: usize = comp.iter().map(|v| f.degree(v)).sum::<usize>() / 2;
    if edges + 1 != k {
        return None;
    }
    comp.iter().find(|&v| f.degree(v) + 1 == k)
}

/// Moves one leaf of the `donor` star to the center of the `receiver` star.
///
/// Components are indexed as in [`Graph::components`]. The moved leaf is the
/// donor's largest-labelled leaf.
pub fn star_shift(f: &Graph, donor: usize, receiver: usize) -> Result<Graph> {
    let comps = f.components();
    let get = |i: usize| {
        comps.get(i).ok_or_else(|| {
            Error::Validation(format!("component {i} does not exist ({} components)", comps.len()))
        })
    };
    let (dc, rc) = (get(donor)?, get(receiver)?);
    if donor == receiver {
        return Err(Error::Validation("donor and receiver must differ".into()));
    }
    let not_star = |i: usize| Error::Validation(format!("component {i} is not a star"));
    let d_center = star_center(f, dc).ok_or_else(|| not_star(donor))?;
    let r_center = star_center(f, rc).ok_or_else(|| not_star(receiver))?;
    let leaf = dc
        .iter()
        .filter(|&v| v != d_center)
        .max()
        .ok_or_else(|| Error::Validation(format!("donor component {donor} has no edge")))?;
    f.without_edge(d_center, leaf).with_edge(r_center, leaf)
}

/// Result of [`verify_plan`]. `all_passed` is the conjunction of the checks
/// that apply to the plan's branch.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub plan: ExtremalPlan,
    pub order: usize,
    pub edges: usize,
    pub join_property_holds: bool,
    pub eta_plus: Rational,
    pub g0: Rational,
    /// `None` on the triangle branch.
    pub forest_edges: Option<usize>,
    pub expected_forest_edges: Option<usize>,
    pub forest_edge_identity: Option<bool>,
    pub rho: Option<f64>,
    /// `sqrt(floor(t) (n - floor(t)))`, the radius of the spanning complete bipartite subgraph.
    pub rho_lower_bound: f64,
    pub rho_above_lower_bound: bool,
    /// The quadratic upper bound at this order, when defined.
    pub rho_upper_bound: Option<f64>,
    pub notes: Vec<String>,
    pub all_passed: bool,
}

pub fn verify_plan(plan: &ExtremalPlan) -> VerificationReport {
    let ft = plan.constants.floor_t as usize;
    let f = plan.forest();
    let g = Graph::complete(ft).join(&f);
    let mut notes = Vec::new();
    let join_property_holds = check_join_property(&f, &plan.params).holds();
    let (forest_edges, expected, identity) = match plan.expected_forest_edges() {
        Some(want) => (Some(f.edge_count()), Some(want), Some(f.edge_count() == want)),
        None => (None, None, None),
    };
    let rho = match spectral_radius(&g, DEFAULT_TOL, DEFAULT_MAX_ITER) {
        Ok(res) => Some(res.rho),
        Err(e) => {
            notes.push(format!("spectral radius failed: {e}"));
            None
        }
    };
    let rho_lower_bound = ((ft * (plan.n - ft)) as f64).sqrt();
    let rho_above_lower_bound = rho.is_some_and(|r| r >= rho_lower_bound - 1e-9);
    let rho_upper_bound = match bound_t2(plan.n, &plan.params) {
        Ok(v) => Some(v),
        Err(e) => {
            notes.push(format!("upper bound unavailable: {e}"));
            None
        }
    };
    let all_passed = join_property_holds && identity.unwrap_or(true) && rho_above_lower_bound;
    VerificationReport {
        plan: *plan,
        order: g.order(),
        edges: g.edge_count(),
        join_property_holds,
        eta_plus: eta_plus(&f, &plan.params),
        g0: plan.constants.g0,
        forest_edges,
        expected_forest_edges: expected,
        forest_edge_identity: identity,
        rho,
        rho_lower_bound,
        rho_above_lower_bound,
        rho_upper_bound,
        notes,
        all_passed,
    }
}
