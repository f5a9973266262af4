//! Hereditarily bounded graphs: exact certification of the edge bound
//! `e(H) <= t|V(H)| + r` on every subgraph with at least `t` vertices,
//! the extremal graphs maximizing the spectral radius under it, and the
//! numerical and enumerative tools used to check them.

pub mod error;
pub mod extremal;
mod flow;
pub mod graph;
pub mod hereditary;
pub mod io;
pub mod rational;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use extremal::{
    build_extremal, f2_closed_form, f2_region_argmax, f2_score, plan_extremal, star_shift, verify_plan, Branch,
    ExtremalPlan, StarProfile, VerificationReport,
};
pub use graph::{Graph, VertexSet};
pub use hereditary::{
    bound_t0, bound_t2, check_join_property, check_property, check_property_exhaustive, derive_constants, eta,
    eta_monotone_check, eta_plus, max_density_excess, Certificate, DerivedConstants, Params, PropertyVerdict,
    SubgraphEmbedding,
};
pub use io::{decode_edgelist, decode_graph6, encode_edgelist, encode_graph6, parse_graph, GraphFormat, GraphText};
pub use rational::Rational;
pub use search::{exhaustive_search, ConstructionComparison, Maximizer, SearchReport};
pub use spectral::{
    degree_power_sum, heavy_vertex_set, spectral_radius, walk_compare, walk_counts, PerronResult, WalkComparison,
};
