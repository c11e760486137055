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

//! Simple undirected graphs with dense vertex indices, plus the edge-list
//! text format and DOT export.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A simple undirected graph.
///
/// Vertices are `0..order`. Each adjacency list is sorted and free of
/// duplicates, there are no self-loops, and adjacency is symmetric. Every
/// vertex carries a display label; labels default to the vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn new(order: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); order],
            labels: (0..order).map(|v| v.to_string()).collect(),
        }
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Every vertex label gets `prefix` prepended to its index, e.g. `"K:3"`.
    pub fn with_label_prefix(mut self, prefix: &str) -> Self {
        for (v, label) in self.labels.iter_mut().enumerate() {
            *label = format!("{prefix}{v}");
        }
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::validation(format!(
                "expected {} labels, got {}",
                self.order(),
                labels.len()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels[v] = label.into();
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Adds a new isolated vertex and returns its index.
    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        self.adjacency.push(Vec::new());
        self.labels.push(label.into());
        self.order() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        match self.adjacency[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adjacency[u].insert(pos, v);
                let pos = self.adjacency[v].binary_search(&u).unwrap_err();
                self.adjacency[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        match self.adjacency[u].binary_search(&v) {
            Ok(pos) => {
                self.adjacency[u].remove(pos);
                let pos = self.adjacency[v].binary_search(&u).expect("asymmetric adjacency");
                self.adjacency[v].remove(pos);
                Ok(())
            }
            Err(_) => Err(Error::MissingEdge(u.min(v), u.max(v))),
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Non-adjacent vertex pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order();
        (0..n).flat_map(move |u| ((u + 1)..n).filter(move |&v| !self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adjacency.iter().all(|adj| adj.len() + 1 == n)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adjacency.iter().map(Vec::len).min()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.order() <= 1 {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.order()
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.order();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|adj| adj.iter().map(|&v| v + offset).collect()),
        );
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Graph { adjacency, labels }
    }

    /// Checks the structural invariants. Only used by tests and debug assertions;
    /// every constructor maintains them.
    pub fn validate(&self) -> Result<()> {
        if self.labels.len() != self.adjacency.len() {
            return Err(Error::validation("label count differs from order"));
        }
        for (u, adj) in self.adjacency.iter().enumerate() {
            for w in adj.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::validation(format!("adjacency of {u} not strictly sorted")));
                }
            }
            for &v in adj {
                self.check_vertex(v)?;
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if self.adjacency[v].binary_search(&u).is_err() {
                    return Err(Error::validation(format!("edge ({u}, {v}) is not symmetric")));
                }
            }
        }
        Ok(())
    }

    /// Parses the edge-list format: a header line `n m`, then `m` lines `u v`
    /// with 0-based endpoints. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
            .filter(|(_, line)| !line.is_empty());

        let parse_pair = |line_no: usize, line: &str, what: &str| -> Result<(usize, usize)> {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two integers ({what}), found {:?}", line),
                });
            }
            let num = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("{s:?} is not a non-negative integer"),
                })
            };
            Ok((num(fields[0])?, num(fields[1])?))
        };

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header line \"n m\"".into(),
        })?;
        let (order, expected_edges) = parse_pair(header_line, header, "order and edge count")?;

        let mut g = Graph::new(order);
        let mut seen = 0usize;
        let mut last_line = header_line;
        for (line_no, line) in lines {
            last_line = line_no;
            let (u, v) = parse_pair(line_no, line, "edge endpoints")?;
            g.add_edge(u, v).map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })?;
            seen += 1;
        }
        if seen != expected_edges {
            return Err(Error::Parse {
                line: last_line,
                message: format!("header declares {expected_edges} edges but {seen} were listed"),
            });
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Graphviz rendering; vertices are labelled with their provenance labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}
