// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Exact closeness centrality with `2^-d` decay.
//!
//! The closeness of a vertex is `C(i) = sum_{j != i} 2^-d(i,j)` and the
//! closeness of a graph is the sum over its vertices; unreachable pairs
//! contribute zero. All values are exact dyadic rationals
//! ([`DyadicValue`]), so closed-form results can be compared bit for bit
//! against breadth-first computation.
//!
//! ```
//! use closeness_core::{generate, graph_closeness, closed_form, FamilySpec};
//!
//! let spec: FamilySpec = "lollipop:3,2".parse().unwrap();
//! let g = generate(&spec).unwrap();
//! assert_eq!(graph_closeness(&g).total, closed_form(&spec).unwrap());
//! assert_eq!(graph_closeness(&g).total.to_string(), "7/2^0");
//! ```

pub mod closeness;
pub mod error;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod numeric;
pub mod sweep;
pub mod transforms;
pub mod vulnerability;

pub use closeness::{bfs_distances, graph_closeness, total_closeness, vertex_closeness, ClosenessReport, DistanceRow};
pub use error::{Error, Result};
pub use formulas::{
    bridged_line, closed_form, closed_form_line, compose_bridge, compose_coalesce, compose_line_bridge,
    shadow_closeness, BridgedCase, BridgedLine, FormulaId,
};
pub use generators::{gen_basic, gen_composite, gen_random_connected, generate, Family, FamilySpec};
pub use graph::Graph;
pub use numeric::{DyadicOp, DyadicValue};
pub use sweep::{run_sweep, SweepGroup, SweepWindow, VerificationRecord};
pub use transforms::{bridge_join, coalesce_join, edit, line_graph, shadow, EditAction, Transformed, VertexOrigin};
pub use vulnerability::{
    additional_closeness, analyze, link_residual, vertex_residual, Measure, VulnerabilityReport, Witness,
};
