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

//! Breadth-first distances and exponentially decaying closeness.
//!
//! The closeness of vertex `i` is `C(i) = sum_{j != i} 2^-d(i,j)`, and the
//! closeness of a graph is the sum over all vertices. Pairs with no path
//! between them contribute exactly zero, so the measure is defined for
//! disconnected graphs as well.

use std::collections::VecDeque;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::numeric::DyadicValue;

/// Hop distances from one source vertex. `None` marks an unreachable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRow {
    pub source: usize,
    pub dist: Vec<Option<usize>>,
}

impl DistanceRow {
    /// `2^-d` summed over every reachable vertex other than the source.
    pub fn closeness(&self) -> DyadicValue {
        // Histogram by distance, then one bigint accumulation over a common
        // denominator 2^max_d.
        let mut counts: Vec<u64> = Vec::new();
        for d in self.dist.iter().flatten().copied().filter(|&d| d > 0) {
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        let Some(max_d) = counts.len().checked_sub(1) else {
            return DyadicValue::zero();
        };
        let numerator = counts
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &c)| c > 0)
            .fold(BigInt::from(0), |acc, (d, &c)| acc + (BigInt::from(c) << (max_d - d)));
        DyadicValue::new(numerator, max_d as u32)
    }
}

/// Per-vertex closenesses and their sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosenessReport {
    pub per_vertex: Vec<DyadicValue>,
    pub total: DyadicValue,
}

pub fn bfs_distances(g: &Graph, source: usize) -> Result<DistanceRow> {
    g.check_vertex(source)?;
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].map(|d| d + 1);
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    Ok(DistanceRow { source, dist })
}

pub fn vertex_closeness(g: &Graph, i: usize) -> Result<DyadicValue> {
    Ok(bfs_distances(g, i)?.closeness())
}

pub fn graph_closeness(g: &Graph) -> ClosenessReport {
    let per_vertex: Vec<DyadicValue> = (0..g.order())
        .map(|i| vertex_closeness(g, i).expect("index in range"))
        .collect();
    let total = per_vertex.iter().sum();
    ClosenessReport { per_vertex, total }
}

/// Graph closeness without keeping the per-vertex table.
pub fn total_closeness(g: &Graph) -> DyadicValue {
    (0..g.order())
        .map(|i| vertex_closeness(g, i).expect("index in range"))
        .sum()
}
