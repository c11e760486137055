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

//! Residual and additional closeness by exhaustive single edits.
//!
//! * link residual closeness: minimum graph closeness after deleting one edge;
//! * vertex residual closeness: minimum after deleting one vertex and its edges;
//! * additional closeness: maximum after adding one missing edge.
//!
//! Every candidate is rebuilt and measured from scratch. Ties are reported
//! in full, sorted by index.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::closeness::total_closeness;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::DyadicValue;
use crate::transforms::{edit, EditAction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    LinkResidual,
    VertexResidual,
    Additional,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::LinkResidual => "link_residual",
            Measure::VertexResidual => "vertex_residual",
            Measure::Additional => "additional",
        })
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "link" | "link_residual" => Ok(Measure::LinkResidual),
            "vertex" | "vertex_residual" => Ok(Measure::VertexResidual),
            "additional" => Ok(Measure::Additional),
            other => Err(Error::validation(format!(
                "unknown measure {other:?}; expected link, vertex or additional"
            ))),
        }
    }
}

/// An edge `[u, v]` or a single vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Edge(usize, usize),
    Vertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VulnerabilityReport {
    pub measure: Measure,
    pub baseline: DyadicValue,
    pub value: DyadicValue,
    pub witnesses: Vec<Witness>,
}

impl VulnerabilityReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn optimize<I>(
    g: &Graph,
    measure: Measure,
    candidates: I,
    better: fn(&DyadicValue, &DyadicValue) -> bool,
) -> Result<VulnerabilityReport>
where
    I: IntoIterator<Item = (Witness, EditAction)>,
{
    let mut best: Option<DyadicValue> = None;
    let mut witnesses = Vec::new();
    for (witness, action) in candidates {
        let value = total_closeness(&edit(g, action)?.graph);
        match &best {
            Some(b) if better(&value, b) => {
                best = Some(value);
                witnesses = vec![witness];
            }
            Some(b) if value == *b => witnesses.push(witness),
            Some(_) => {}
            None => {
                best = Some(value);
                witnesses.push(witness);
            }
        }
    }
    let value = best.ok_or_else(|| Error::validation(format!("{measure}: no candidate edit exists")))?;
    witnesses.sort();
    Ok(VulnerabilityReport {
        measure,
        baseline: total_closeness(g),
        value,
        witnesses,
    })
}

pub fn link_residual(g: &Graph) -> Result<VulnerabilityReport> {
    if g.edge_count() == 0 {
        return Err(Error::validation("link residual closeness needs at least one edge"));
    }
    let candidates: Vec<_> = g
        .edges()
        .map(|(u, v)| (Witness::Edge(u, v), EditAction::DeleteEdge(u, v)))
        .collect();
    optimize(g, Measure::LinkResidual, candidates, |a, b| a < b)
}

pub fn vertex_residual(g: &Graph) -> Result<VulnerabilityReport> {
    if g.is_empty() {
        return Err(Error::validation("vertex residual closeness needs at least one vertex"));
    }
    let candidates = (0..g.order()).map(|v| (Witness::Vertex(v), EditAction::DeleteVertex(v)));
    optimize(g, Measure::VertexResidual, candidates, |a, b| a < b)
}

pub fn additional_closeness(g: &Graph) -> Result<VulnerabilityReport> {
    if g.is_complete() {
        return Err(Error::validation("additional closeness: no non-edge exists"));
    }
    let candidates: Vec<_> = g
        .non_edges()
        .map(|(u, v)| (Witness::Edge(u, v), EditAction::AddEdge(u, v)))
        .collect();
    optimize(g, Measure::Additional, candidates, |a, b| a > b)
}

pub fn analyze(g: &Graph, measure: Measure) -> Result<VulnerabilityReport> {
    match measure {
        Measure::LinkResidual => link_residual(g),
        Measure::VertexResidual => vertex_residual(g),
        Measure::Additional => additional_closeness(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))).unwrap()
    }

    // Independent oracle: hand-enumerated edits with closeness from first principles.
    fn brute_min_edge_delete(g: &Graph) -> DyadicValue {
        g.edges()
            .map(|(u, v)| {
                let mut h = g.clone();
                h.remove_edge(u, v).unwrap();
                total_closeness(&h)
            })
            .min()
            .unwrap()
    }

    #[test]
    fn link_residual_examples() {
        let c3 = complete(3);
        let r = link_residual(&c3).unwrap();
        assert_eq!(r.value, DyadicValue::new(5, 1));
        assert_eq!(
            r.witnesses,
            vec![Witness::Edge(0, 1), Witness::Edge(0, 2), Witness::Edge(1, 2)]
        );
        assert_eq!(r.baseline, DyadicValue::integer(3));
        assert_eq!(r.value, brute_min_edge_delete(&c3));

        let r = link_residual(&path(3)).unwrap();
        assert_eq!(r.value, DyadicValue::one());
        assert_eq!(r.witnesses.len(), 2);

        assert_eq!(link_residual(&path(2)).unwrap().value, DyadicValue::zero());
        assert!(link_residual(&Graph::new(3)).is_err());
    }

    #[test]
    fn vertex_residual_examples() {
        let r = vertex_residual(&path(3)).unwrap();
        assert_eq!(r.value, DyadicValue::zero());
        assert_eq!(r.witnesses, vec![Witness::Vertex(1)]);

        let r = vertex_residual(&complete(4)).unwrap();
        assert_eq!(r.value, DyadicValue::integer(3));
        assert_eq!(r.witnesses.len(), 4);

        let r = vertex_residual(&Graph::new(1)).unwrap();
        assert_eq!(r.value, DyadicValue::zero());
        assert_eq!(r.witnesses, vec![Witness::Vertex(0)]);
        assert!(vertex_residual(&Graph::new(0)).is_err());
    }

    #[test]
    fn additional_examples() {
        let r = additional_closeness(&path(3)).unwrap();
        assert_eq!(r.value, DyadicValue::integer(3));
        assert_eq!(r.witnesses, vec![Witness::Edge(0, 2)]);

        // Closing P_4 into C_4 ties with forming K_3 plus a pendant: both reach 5.
        let r = additional_closeness(&path(4)).unwrap();
        assert_eq!(r.value, DyadicValue::integer(5));
        assert_eq!(
            r.witnesses,
            vec![Witness::Edge(0, 2), Witness::Edge(0, 3), Witness::Edge(1, 3)]
        );

        let k3_k1 = complete(3).disjoint_union(&Graph::new(1));
        let r = additional_closeness(&k3_k1).unwrap();
        assert_eq!(
            r.witnesses,
            vec![Witness::Edge(0, 3), Witness::Edge(1, 3), Witness::Edge(2, 3)]
        );
        assert_eq!(r.value, DyadicValue::integer(5));

        let err = additional_closeness(&complete(4)).unwrap_err();
        assert!(err.to_string().contains("no non-edge exists"));
    }

    #[test]
    fn report_json_shape() {
        let r = additional_closeness(&path(3)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["measure"], "additional");
        assert_eq!(v["baseline"], "5/2^1");
        assert_eq!(v["value"], "3/2^0");
        assert_eq!(v["witnesses"], serde_json::json!([[0, 2]]));

        let r = vertex_residual(&path(3)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["witnesses"], serde_json::json!([1]));
    }

    #[test]
    fn measure_names() {
        assert_eq!("link".parse::<Measure>().unwrap(), Measure::LinkResidual);
        assert_eq!("vertex".parse::<Measure>().unwrap(), Measure::VertexResidual);
        assert_eq!("additional".parse::<Measure>().unwrap(), Measure::Additional);
        assert!("edge".parse::<Measure>().is_err());
    }
}
