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

//! Named graph families.
//!
//! Labelling conventions:
//!
//! * `P_n`: vertices `0..n` chained in order, labels `P:i`. Vertex 0 is the
//!   leaf used for bridges.
//! * `C_n`: the path plus the edge `(n-1, 0)`, labels `C:i`.
//! * `S_n`: `n` vertices in total, center 0 adjacent to `1..n`, labels `S:i`.
//! * `K_n`: all pairs, labels `K:i`.
//!
//! Composite families place the first part at indices `0..m` and the second
//! at `m..m+n`, joined by one bridge edge:
//!
//! * lollipop `L_{m,n}`: `K_m` vertex 0 to the leaf of `P_n`;
//! * tadpole `T_{m,n}`: `C_m` vertex 0 to the leaf of `P_n`;
//! * broom `B_{m,n}`: the center of `S_m` to the leaf of `P_n`;
//! * bistar `BS_{m,n}`: the center of `S_m` (labels `Sa:i`) to the center
//!   of `S_n` (labels `Sb:i`).

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transforms::bridge_join;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Lollipop,
    Tadpole,
    Broom,
    Bistar,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::Complete,
        Family::Lollipop,
        Family::Tadpole,
        Family::Broom,
        Family::Bistar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::Complete => "complete",
            Family::Lollipop => "lollipop",
            Family::Tadpole => "tadpole",
            Family::Broom => "broom",
            Family::Bistar => "bistar",
        }
    }

    pub fn is_composite(self) -> bool {
        matches!(
            self,
            Family::Lollipop | Family::Tadpole | Family::Broom | Family::Bistar
        )
    }

    /// Smallest allowed `(p1, p2)`; `p2` is 0 for basic families.
    pub fn minimum(self) -> (usize, usize) {
        match self {
            Family::Path | Family::Complete => (1, 0),
            Family::Cycle => (3, 0),
            Family::Star => (2, 0),
            Family::Lollipop => (1, 1),
            Family::Tadpole | Family::Broom => (3, 1),
            Family::Bistar => (3, 3),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| Error::validation(format!("unknown graph family {s:?}")))
    }
}

/// A family with its integer parameters, written `family:p1[,p2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub p1: usize,
    pub p2: Option<usize>,
}

impl FamilySpec {
    pub fn basic(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            p1: n,
            p2: None,
        }
    }

    pub fn composite(family: Family, m: usize, n: usize) -> Self {
        FamilySpec {
            family,
            p1: m,
            p2: Some(n),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (min1, min2) = self.family.minimum();
        let name = self.family.name();
        match (self.family.is_composite(), self.p2) {
            (false, Some(_)) => {
                return Err(Error::validation(format!("{name} takes one parameter")));
            }
            (true, None) => {
                return Err(Error::validation(format!("{name} takes two parameters m,n")));
            }
            _ => {}
        }
        if self.p1 < min1 {
            return Err(Error::validation(format!(
                "{name} requires first parameter >= {min1}, got {}",
                self.p1
            )));
        }
        if let Some(p2) = self.p2 {
            if p2 < min2 {
                return Err(Error::validation(format!(
                    "{name} requires second parameter >= {min2}, got {p2}"
                )));
            }
        }
        Ok(())
    }

    /// Order of the generated graph.
    pub fn order(&self) -> usize {
        self.p1 + self.p2.unwrap_or(0)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p2 {
            Some(p2) => write!(f, "{}:{},{}", self.family, self.p1, p2),
            None => write!(f, "{}:{}", self.family, self.p1),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| Error::validation(format!("expected family:params, got {s:?}")))?;
        let family: Family = name.parse()?;
        let nums = params
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::validation(format!("invalid parameter {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = match nums.as_slice() {
            [p1] => FamilySpec {
                family,
                p1: *p1,
                p2: None,
            },
            [p1, p2] => FamilySpec {
                family,
                p1: *p1,
                p2: Some(*p2),
            },
            _ => return Err(Error::validation(format!("expected one or two parameters in {s:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        .expect("valid path")
        .with_label_prefix("P:")
}

fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        .expect("valid cycle")
        .with_label_prefix("C:")
}

fn star(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
        .expect("valid star")
        .with_label_prefix("S:")
}

fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
        .expect("valid complete graph")
        .with_label_prefix("K:")
}

/// Path, cycle, star or complete graph.
pub fn gen_basic(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.p1;
    match spec.family {
        Family::Path => Ok(path(n)),
        Family::Cycle => Ok(cycle(n)),
        Family::Star => Ok(star(n)),
        Family::Complete => Ok(complete(n)),
        other => Err(Error::validation(format!("{other} is not a basic family"))),
    }
}

/// Lollipop, tadpole, broom or bistar graph.
pub fn gen_composite(spec: &FamilySpec) -> Result<Graph> {
    if !spec.family.is_composite() {
        return Err(Error::validation(format!("{} is not a composite family", spec.family)));
    }
    spec.validate()?;
    let (m, n) = (spec.p1, spec.p2.expect("validated"));
    let (head, tail) = match spec.family {
        Family::Lollipop => (complete(m), path(n)),
        Family::Tadpole => (cycle(m), path(n)),
        Family::Broom => (star(m), path(n)),
        _ => (star(m).with_label_prefix("Sa:"), star(n).with_label_prefix("Sb:")),
    };
    // Every attachment point is index 0: K/C vertex 0, star center, path leaf.
    Ok(bridge_join(&head, 0, &tail, 0)?.graph)
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    if spec.family.is_composite() {
        gen_composite(spec)
    } else {
        gen_basic(spec)
    }
}

/// A connected graph with exactly `edge_budget` edges: a random spanning tree
/// (each vertex in a shuffled order attaches to a uniformly chosen earlier one)
/// followed by extra edges drawn uniformly without replacement from the
/// remaining pairs. Deterministic in `seed`.
pub fn gen_random_connected(order: usize, edge_budget: usize, seed: u64) -> Result<Graph> {
    if order == 0 {
        return Err(Error::validation("random connected graph needs order >= 1"));
    }
    let max_edges = order * (order - 1) / 2;
    if edge_budget + 1 < order || edge_budget > max_edges {
        return Err(Error::validation(format!(
            "edge budget {edge_budget} infeasible for order {order}: need {}..={max_edges}",
            order - 1
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(order);

    let mut perm: Vec<usize> = (0..order).collect();
    perm.shuffle(&mut rng);
    for i in 1..order {
        let parent = perm[rng.random_range(0..i)];
        g.add_edge(perm[i], parent)?;
    }

    let mut candidates: Vec<(usize, usize)> = g.non_edges().collect();
    let extra = edge_budget - (order - 1);
    let (chosen, _) = candidates.partial_shuffle(&mut rng, extra);
    for &(u, v) in chosen.iter() {
        g.add_edge(u, v)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn parses_and_prints_specs() {
        assert_eq!(spec("path:5"), FamilySpec::basic(Family::Path, 5));
        assert_eq!(spec("lollipop:3,2"), FamilySpec::composite(Family::Lollipop, 3, 2));
        assert_eq!(spec("bistar:4,3").to_string(), "bistar:4,3");
        assert!("wheel:5".parse::<FamilySpec>().is_err());
        assert!("path".parse::<FamilySpec>().is_err());
        assert!("path:5,2".parse::<FamilySpec>().is_err());
        assert!("lollipop:3".parse::<FamilySpec>().is_err());
        assert!("cycle:2".parse::<FamilySpec>().is_err());
        assert!("bistar:3,2".parse::<FamilySpec>().is_err());
        assert!("star:1".parse::<FamilySpec>().is_err());
        assert!("path:0".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn validation_names_the_constraint() {
        let err = gen_basic(&FamilySpec::basic(Family::Cycle, 2)).unwrap_err();
        assert!(err.to_string().contains(">= 3"), "{err}");
    }

    #[test]
    fn basic_examples() {
        let s4 = gen_basic(&spec("star:4")).unwrap();
        assert_eq!(s4.order(), 4);
        assert_eq!(s4.edge_count(), 3);
        assert_eq!(s4.degree_sequence(), vec![3, 1, 1, 1]);

        let c3 = gen_basic(&spec("cycle:3")).unwrap();
        let k3 = gen_basic(&spec("complete:3")).unwrap();
        assert_eq!(c3.edges().collect::<Vec<_>>(), k3.edges().collect::<Vec<_>>());

        assert_eq!(gen_basic(&spec("complete:5")).unwrap().edge_count(), 10);

        let p2 = gen_basic(&spec("path:2")).unwrap();
        let s2 = gen_basic(&spec("star:2")).unwrap();
        assert_eq!(p2.edges().collect::<Vec<_>>(), s2.edges().collect::<Vec<_>>());
    }

    #[test]
    fn composite_examples() {
        let l = gen_composite(&spec("lollipop:3,2")).unwrap();
        // K_3 (3 edges) + P_2 (1 edge) + bridge.
        assert_eq!((l.order(), l.edge_count()), (5, 5));
        assert!(l.has_edge(0, 3));
        assert_eq!(l.label(3), "P:0");

        let t = gen_composite(&spec("tadpole:4,2")).unwrap();
        assert_eq!((t.order(), t.edge_count()), (6, 6));

        let b = gen_composite(&spec("broom:4,2")).unwrap();
        assert_eq!((b.order(), b.edge_count()), (6, 5));
        assert_eq!(b.degree(0), 4);

        let bs = gen_composite(&spec("bistar:4,3")).unwrap();
        assert_eq!((bs.order(), bs.edge_count()), (7, 6));
        assert!(bs.has_edge(0, 4));
        assert_eq!(bs.label(4), "Sb:0");
        assert!(gen_composite(&spec("path:3")).is_err());
        assert!(gen_basic(&spec("broom:3,1")).is_err());
    }

    #[test]
    fn composite_edge_counts() {
        for m in 3..8 {
            for n in 1..6 {
                let l = generate(&FamilySpec::composite(Family::Lollipop, m, n)).unwrap();
                assert_eq!(l.edge_count(), m * (m - 1) / 2 + n);
                let t = generate(&FamilySpec::composite(Family::Tadpole, m, n)).unwrap();
                assert_eq!(t.edge_count(), m + n);
                let b = generate(&FamilySpec::composite(Family::Broom, m, n)).unwrap();
                assert_eq!(b.edge_count(), m - 1 + n);
                if n >= 3 {
                    let bs = generate(&FamilySpec::composite(Family::Bistar, m, n)).unwrap();
                    assert_eq!(bs.edge_count(), (m - 1) + (n - 1) + 1);
                }
                for g in [l, t, b] {
                    assert_eq!(g.order(), m + n);
                    g.validate().unwrap();
                    assert!(g.is_connected());
                }
            }
        }
    }

    #[test]
    fn random_connected_examples() {
        let single = gen_random_connected(1, 0, 99).unwrap();
        assert_eq!(single.order(), 1);

        let tree = gen_random_connected(5, 4, 7).unwrap();
        assert_eq!(tree.edge_count(), 4);
        assert!(tree.is_connected());

        let full = gen_random_connected(6, 15, 3).unwrap();
        assert!(full.is_complete());

        assert!(gen_random_connected(5, 3, 0).is_err());
        assert!(gen_random_connected(5, 11, 0).is_err());
        assert!(gen_random_connected(0, 0, 0).is_err());
    }

    #[test]
    fn random_connected_is_reproducible() {
        for seed in 0..20 {
            let a = gen_random_connected(9, 14, seed).unwrap();
            let b = gen_random_connected(9, 14, seed).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.edge_count(), 14);
            assert!(a.is_connected());
            a.validate().unwrap();
        }
        assert_ne!(
            gen_random_connected(9, 14, 1).unwrap(),
            gen_random_connected(9, 14, 2).unwrap()
        );
    }
}
