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

//! Graph operations: shadow graph, line graph, bridge join, vertex
//! coalescence and single-element edits.
//!
//! Every operation returns a fresh [`Graph`] together with an origin table
//! that records, for each result vertex, where it came from.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;

/// Where a vertex of a transformed graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexOrigin {
    /// First copy `v'` of a shadow graph.
    Copy0 {
        source: usize,
    },
    /// Second copy `v''` of a shadow graph.
    Copy1 {
        source: usize,
    },
    /// Line-graph vertex standing for the edge `(u, v)`, `u < v`.
    Edge {
        u: usize,
        v: usize,
    },
    Left {
        source: usize,
    },
    Right {
        source: usize,
    },
    /// Coalesced vertex: `left` of the first graph merged with `right` of the second.
    Merged {
        left: usize,
        right: usize,
    },
    /// Vertex surviving an edit, with its index before the edit.
    Kept {
        source: usize,
    },
}

/// A transformed graph and its origin table (`origins[v]` describes vertex `v`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformed {
    pub graph: Graph,
    pub origins: Vec<VertexOrigin>,
}

impl Transformed {
    /// Result index of the first vertex whose origin matches.
    pub fn find(&self, origin: VertexOrigin) -> Option<usize> {
        self.origins.iter().position(|&o| o == origin)
    }

    pub fn origins_json(&self) -> String {
        serde_json::to_string_pretty(&self.origins).expect("origin table serializes")
    }
}

/// Shadow graph: two copies `v'` (indices `0..n`) and `v''` (indices `n..2n`);
/// every edge `(u, v)` yields `(u', v')`, `(u', v'')`, `(u'', v')` and
/// `(u'', v'')`. A vertex is never joined to its own copy.
pub fn shadow(g: &Graph) -> Transformed {
    let n = g.order();
    let mut out = Graph::new(2 * n);
    for (u, v) in g.edges() {
        for (a, b) in [(u, v), (u, v + n), (u + n, v), (u + n, v + n)] {
            out.add_edge(a, b).expect("shadow edges are distinct");
        }
    }
    let mut origins = Vec::with_capacity(2 * n);
    for v in 0..n {
        out.set_label(v, format!("{}'", g.label(v)));
        origins.push(VertexOrigin::Copy0 { source: v });
    }
    for v in 0..n {
        out.set_label(v + n, format!("{}\"", g.label(v)));
        origins.push(VertexOrigin::Copy1 { source: v });
    }
    Transformed { graph: out, origins }
}

/// Line graph. Result vertices follow the lexicographic order of the edges
/// `(u, v)`, `u < v`; two are adjacent iff their edges share an endpoint.
pub fn line_graph(g: &Graph) -> Transformed {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));

    let mut out = Graph::new(edges.len());
    for v in 0..g.order() {
        let incident: Vec<usize> = g.neighbors(v).iter().map(|&w| index[&key(v, w)]).collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                // Two distinct edges share at most one endpoint, so no duplicates.
                out.add_edge(a, b).expect("line graph edges are distinct");
            }
        }
    }
    let origins = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| {
            out.set_label(i, format!("{}-{}", g.label(u), g.label(v)));
            VertexOrigin::Edge { u, v }
        })
        .collect();
    Transformed { graph: out, origins }
}

/// Disjoint union of `g1` and `g2` plus the bridge `(p, q)`. `g2`'s vertices
/// are shifted by `g1.order()`.
pub fn bridge_join(g1: &Graph, p: usize, g2: &Graph, q: usize) -> Result<Transformed> {
    g1.check_vertex(p)?;
    g2.check_vertex(q)?;
    let mut out = g1.disjoint_union(g2);
    out.add_edge(p, g1.order() + q)?;
    let origins = (0..g1.order())
        .map(|source| VertexOrigin::Left { source })
        .chain((0..g2.order()).map(|source| VertexOrigin::Right { source }))
        .collect();
    Ok(Transformed { graph: out, origins })
}

/// Disjoint union with `p` and `q` identified into one vertex `r`, which keeps
/// `p`'s index and label. The other vertices of `g2` follow `g1`'s in order.
pub fn coalesce_join(g1: &Graph, p: usize, g2: &Graph, q: usize) -> Result<Transformed> {
    g1.check_vertex(p)?;
    g2.check_vertex(q)?;
    let offset = g1.order();
    let remap = |w: usize| -> usize {
        match w.cmp(&q) {
            std::cmp::Ordering::Equal => p,
            std::cmp::Ordering::Less => offset + w,
            std::cmp::Ordering::Greater => offset + w - 1,
        }
    };

    let mut out = g1.clone();
    let mut origins: Vec<VertexOrigin> = (0..offset).map(|source| VertexOrigin::Left { source }).collect();
    origins[p] = VertexOrigin::Merged { left: p, right: q };
    for w in (0..g2.order()).filter(|&w| w != q) {
        out.add_vertex(g2.label(w));
        origins.push(VertexOrigin::Right { source: w });
    }
    for (a, b) in g2.edges() {
        out.add_edge(remap(a), remap(b))?;
    }
    Ok(Transformed { graph: out, origins })
}

/// Single-element edits used by the vulnerability measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EditAction {
    DeleteEdge(usize, usize),
    DeleteVertex(usize),
    AddEdge(usize, usize),
}

/// Applies `action`. Deleting a vertex re-densifies the indices; the origin
/// table maps each surviving vertex to its old index.
pub fn edit(g: &Graph, action: EditAction) -> Result<Transformed> {
    let identity = |n: usize| (0..n).map(|source| VertexOrigin::Kept { source }).collect();
    match action {
        EditAction::DeleteEdge(u, v) => {
            let mut out = g.clone();
            out.remove_edge(u, v)?;
            Ok(Transformed {
                graph: out,
                origins: identity(g.order()),
            })
        }
        EditAction::AddEdge(u, v) => {
            let mut out = g.clone();
            out.add_edge(u, v)?;
            Ok(Transformed {
                graph: out,
                origins: identity(g.order()),
            })
        }
        EditAction::DeleteVertex(x) => {
            g.check_vertex(x)?;
            let shift = |w: usize| if w > x { w - 1 } else { w };
            let kept: Vec<usize> = (0..g.order()).filter(|&w| w != x).collect();
            let labels = kept.iter().map(|&w| g.label(w).to_string()).collect();
            let edges = g
                .edges()
                .filter(|&(a, b)| a != x && b != x)
                .map(|(a, b)| (shift(a), shift(b)));
            let out = Graph::from_edges(kept.len(), edges)?.with_labels(labels)?;
            let origins = kept.into_iter().map(|source| VertexOrigin::Kept { source }).collect();
            Ok(Transformed { graph: out, origins })
        }
    }
}

/// Attaches a new pendant vertex to `v` and returns the graph with the index
/// of the new vertex.
pub fn add_pendant(g: &Graph, v: usize) -> Result<(Graph, usize)> {
    g.check_vertex(v)?;
    let mut out = g.clone();
    let w = out.add_vertex("B");
    out.add_edge(v, w)?;
    Ok((out, w))
}
