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

//! Verification sweeps: every closed form is evaluated over a parameter
//! window and compared, as an exact dyadic value, against breadth-first
//! closeness of the graph it describes.

use std::fmt::Write as _;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::closeness::{total_closeness, vertex_closeness};
use crate::error::{Error, Result};
use crate::formulas::{
    bridged_base_graph, bridged_line, closed_form, closed_form_line, shadow_closeness, BridgedCase, FormulaId,
};
use crate::generators::{gen_random_connected, generate, Family, FamilySpec};
use crate::graph::Graph;
use crate::numeric::DyadicValue;
use crate::transforms::{line_graph, shadow, VertexOrigin};

/// Inclusive parameter range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub const fn new(lo: usize, hi: usize) -> Self {
        Span { lo, hi }
    }

    /// Values in the span that are at least `min`.
    fn iter_from(self, min: usize) -> impl Iterator<Item = usize> {
        self.lo.max(min)..=self.hi
    }
}

impl FromStr for Span {
    type Err = Error;

    /// `a..b` (inclusive) or a single upper bound `b` (meaning `1..b`).
    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::validation(format!("invalid range bound {t:?}")))
        };
        let span = match s.split_once("..") {
            Some((a, b)) => Span::new(num(a)?, num(b.trim_start_matches('='))?),
            None => Span::new(1, num(s)?),
        };
        if span.lo > span.hi {
            return Err(Error::validation(format!("empty range {s:?}")));
        }
        Ok(span)
    }
}

/// Parameter windows for a sweep. Lower bounds are raised to each family's
/// minimum automatically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepWindow {
    /// `n` for path, cycle and star.
    pub basic: Span,
    pub complete: Span,
    /// `m` for the composite families.
    pub composite_m: Span,
    /// `n` for lollipop, tadpole and broom.
    pub composite_n: Span,
    pub bistar_n: Span,
    /// `n` for the pendant-edge line-graph cases.
    pub pendant: Span,
    /// Number of random connected graphs for the shadow check.
    pub shadow_samples: usize,
    pub shadow_max_order: usize,
}

impl Default for SweepWindow {
    fn default() -> Self {
        SweepWindow {
            basic: Span::new(1, 64),
            complete: Span::new(1, 24),
            composite_m: Span::new(3, 16),
            composite_n: Span::new(1, 24),
            bistar_n: Span::new(3, 16),
            pendant: Span::new(1, 32),
            shadow_samples: 200,
            shadow_max_order: 12,
        }
    }
}

impl SweepWindow {
    /// A quick window for smoke tests.
    pub fn small() -> Self {
        SweepWindow {
            basic: Span::new(1, 12),
            complete: Span::new(1, 8),
            composite_m: Span::new(3, 6),
            composite_n: Span::new(1, 6),
            bistar_n: Span::new(3, 6),
            pendant: Span::new(1, 10),
            shadow_samples: 20,
            shadow_max_order: 8,
        }
    }
}

impl FromStr for SweepWindow {
    type Err = Error;

    /// `default`, `small`, or comma-separated overrides of the default window:
    /// `basic=2..40,complete=12,m=3..8,n=1..10,bistar-n=3..8,pendant=20,shadow=50,shadow-order=10`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "" | "default" => return Ok(SweepWindow::default()),
            "small" => return Ok(SweepWindow::small()),
            _ => {}
        }
        let mut w = SweepWindow::default();
        for item in s.split(',') {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::validation(format!("expected key=value in window, got {item:?}")))?;
            let count = || {
                value
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::validation(format!("invalid count {value:?} for {key}")))
            };
            match key.trim() {
                "basic" => w.basic = value.parse()?,
                "complete" => w.complete = value.parse()?,
                "m" => w.composite_m = value.parse()?,
                "n" => w.composite_n = value.parse()?,
                "bistar-n" => w.bistar_n = value.parse()?,
                "pendant" => w.pendant = value.parse()?,
                "shadow" => w.shadow_samples = count()?,
                "shadow-order" => w.shadow_max_order = count()?,
                other => return Err(Error::validation(format!("unknown window key {other:?}"))),
            }
        }
        Ok(w)
    }
}

/// A group of closed forms verified together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SweepGroup {
    /// The family closed form and its line-graph closed form.
    Family(Family),
    /// The pendant-edge line-graph values, both components.
    Pendant,
    /// Shadow closeness over seeded random connected graphs.
    Shadow,
}

impl SweepGroup {
    pub fn all() -> Vec<SweepGroup> {
        Family::ALL
            .into_iter()
            .map(SweepGroup::Family)
            .chain([SweepGroup::Pendant, SweepGroup::Shadow])
            .collect()
    }
}

impl FromStr for SweepGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "pendant" | "bridged" => Ok(SweepGroup::Pendant),
            "shadow" => Ok(SweepGroup::Shadow),
            other => other.parse().map(SweepGroup::Family),
        }
    }
}

/// One grid point of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    /// Formula id, e.g. `CL_lollipop`.
    pub family: String,
    pub p1: usize,
    pub p2: Option<usize>,
    pub formula: DyadicValue,
    pub oracle: DyadicValue,
    pub pass: bool,
}

impl VerificationRecord {
    fn new(id: FormulaId, p1: usize, p2: Option<usize>, formula: DyadicValue, oracle: DyadicValue) -> Self {
        let pass = formula == oracle;
        VerificationRecord {
            family: id.name().to_string(),
            p1,
            p2,
            formula,
            oracle,
            pass,
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.family,
            self.p1,
            self.p2.map(|p| p.to_string()).unwrap_or_default(),
            self.formula,
            self.oracle,
            self.pass
        )
    }
}

pub const CSV_HEADER: &str = "family,p1,p2,formula,oracle,pass";

pub fn records_to_csv(records: &[VerificationRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(out, "{}", r.csv_row());
    }
    out
}

pub fn records_to_json(records: &[VerificationRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

/// Breadth-first closeness of the line graph of `g`.
pub fn line_oracle(g: &Graph) -> DyadicValue {
    total_closeness(&line_graph(g).graph)
}

/// Breadth-first values for a pendant-edge case: closeness of `L(G + B)` and
/// of the vertex standing for `B`.
pub fn bridged_oracle(case: BridgedCase, n: usize) -> Result<(DyadicValue, DyadicValue)> {
    let (g, (at, w)) = bridged_base_graph(case, n)?;
    let t = line_graph(&g);
    let b = t
        .find(VertexOrigin::Edge {
            u: at.min(w),
            v: at.max(w),
        })
        .expect("pendant edge present in line graph");
    Ok((total_closeness(&t.graph), vertex_closeness(&t.graph, b)?))
}

#[derive(Debug, Clone, Copy)]
enum Task {
    Family(FamilySpec),
    Line(FamilySpec),
    Pendant(BridgedCase, usize),
    Shadow {
        index: usize,
        order: usize,
        edges: usize,
        seed: u64,
    },
}

fn family_grid(family: Family, line: bool, window: &SweepWindow) -> Vec<FamilySpec> {
    let (min1, min2) = family.minimum();
    // L(P_1) has no vertices and no closed form.
    let min1 = if line && family == Family::Path { 2 } else { min1 };
    match family {
        Family::Path | Family::Cycle | Family::Star => window
            .basic
            .iter_from(min1)
            .map(|n| FamilySpec::basic(family, n))
            .collect(),
        Family::Complete => window
            .complete
            .iter_from(min1)
            .map(|n| FamilySpec::basic(family, n))
            .collect(),
        _ => {
            let n_span = if family == Family::Bistar {
                window.bistar_n
            } else {
                window.composite_n
            };
            window
                .composite_m
                .iter_from(min1)
                .flat_map(|m| n_span.iter_from(min2).map(move |n| FamilySpec::composite(family, m, n)))
                .collect()
        }
    }
}

/// Deterministic sample plan for the shadow check: orders from 2 up to the
/// maximum, edge budgets uniform over the feasible range.
fn shadow_tasks(window: &SweepWindow, seed: u64) -> Vec<Task> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_order = window.shadow_max_order.max(2);
    (0..window.shadow_samples)
        .map(|index| {
            let order = rng.random_range(2..=max_order);
            let edges = rng.random_range(order - 1..=order * (order - 1) / 2);
            Task::Shadow {
                index,
                order,
                edges,
                seed: rng.random(),
            }
        })
        .collect()
}

fn plan(groups: &[SweepGroup], window: &SweepWindow, seed: u64) -> Vec<Task> {
    let mut groups = groups.to_vec();
    groups.sort();
    groups.dedup();
    let mut tasks = Vec::new();
    for group in groups {
        match group {
            SweepGroup::Family(family) => {
                tasks.extend(family_grid(family, false, window).into_iter().map(Task::Family));
                tasks.extend(family_grid(family, true, window).into_iter().map(Task::Line));
            }
            SweepGroup::Pendant => {
                for case in BridgedCase::ALL {
                    tasks.extend(window.pendant.iter_from(case.minimum()).map(|n| Task::Pendant(case, n)));
                }
            }
            SweepGroup::Shadow => tasks.extend(shadow_tasks(window, seed)),
        }
    }
    tasks
}

fn run_task(task: Task) -> Result<Vec<VerificationRecord>> {
    Ok(match task {
        Task::Family(spec) => {
            let id = FormulaId::for_family(spec.family, false);
            let oracle = total_closeness(&generate(&spec)?);
            vec![VerificationRecord::new(
                id,
                spec.p1,
                spec.p2,
                closed_form(&spec)?,
                oracle,
            )]
        }
        Task::Line(spec) => {
            let id = FormulaId::for_family(spec.family, true);
            let oracle = line_oracle(&generate(&spec)?);
            vec![VerificationRecord::new(
                id,
                spec.p1,
                spec.p2,
                closed_form_line(&spec)?,
                oracle,
            )]
        }
        Task::Pendant(case, n) => {
            let (line_id, bridge_id) = case.formula_ids();
            let formula = bridged_line(case, n)?;
            let (line, bridge) = bridged_oracle(case, n)?;
            vec![
                VerificationRecord::new(line_id, n, None, formula.line_closeness, line),
                VerificationRecord::new(bridge_id, n, None, formula.bridge_vertex_closeness, bridge),
            ]
        }
        Task::Shadow {
            index,
            order,
            edges,
            seed,
        } => {
            let g = gen_random_connected(order, edges, seed)?;
            let formula = shadow_closeness(&total_closeness(&g), order);
            let oracle = total_closeness(&shadow(&g).graph);
            vec![VerificationRecord::new(
                FormulaId::CShadow,
                order,
                Some(index),
                formula,
                oracle,
            )]
        }
    })
}

/// Runs the selected groups. Records come back in a fixed order (group, then
/// formula, then parameters) regardless of how the work is scheduled.
pub fn run_sweep(groups: &[SweepGroup], window: &SweepWindow, seed: u64) -> Result<Vec<VerificationRecord>> {
    let tasks = plan(groups, window, seed);

    #[cfg(feature = "parallel")]
    let results: Vec<Result<Vec<VerificationRecord>>> = {
        use rayon::prelude::*;
        tasks.into_par_iter().map(run_task).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<Vec<VerificationRecord>>> = tasks.into_iter().map(run_task).collect();

    let mut records = Vec::new();
    for r in results {
        records.extend(r?);
    }
    Ok(records)
}

/// Sizes the global worker pool used by [`run_sweep`]. Only the first call
/// has an effect.
#[cfg(feature = "parallel")]
pub fn set_parallelism(threads: usize) -> Result<()> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::validation(format!("cannot configure {threads} worker threads: {e}")))
}

/// Outcome of checking the shadow identity on one graph outside the
/// connected class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowFinding {
    pub description: String,
    pub order: usize,
    pub min_degree: usize,
    pub connected: bool,
    pub formula: DyadicValue,
    pub oracle: DyadicValue,
    pub holds: bool,
}

/// Checks `C(S(G)) = 4 C(G) + n/2` on disconnected graphs with minimum degree
/// at least one (disjoint unions of two random connected graphs, each of
/// order at least 2), plus graphs containing an isolated vertex for contrast.
/// Reports the findings without judging them.
pub fn shadow_min_degree_experiment(samples: usize, max_order: usize, seed: u64) -> Result<Vec<ShadowFinding>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_order = max_order.max(2);
    let mut findings = Vec::with_capacity(samples + 2);
    let mut record = |description: String, g: &Graph| {
        let formula = shadow_closeness(&total_closeness(g), g.order());
        let oracle = total_closeness(&shadow(g).graph);
        findings.push(ShadowFinding {
            description,
            order: g.order(),
            min_degree: g.min_degree().unwrap_or(0),
            connected: g.is_connected(),
            holds: formula == oracle,
            formula,
            oracle,
        });
    };
    for i in 0..samples {
        let mut part = || -> Result<Graph> {
            let order = rng.random_range(2..=max_order);
            let edges = rng.random_range(order - 1..=order * (order - 1) / 2);
            gen_random_connected(order, edges, rng.random())
        };
        let (a, b) = (part()?, part()?);
        record(format!("union sample {i}"), &a.disjoint_union(&b));
    }
    record("K_1".into(), &Graph::new(1));
    let p3 = Graph::from_edges(3, [(0, 1), (1, 2)])?;
    record("P_3 plus isolated vertex".into(), &p3.disjoint_union(&Graph::new(1)));
    Ok(findings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_parsing() {
        assert_eq!("default".parse::<SweepWindow>().unwrap(), SweepWindow::default());
        assert_eq!("small".parse::<SweepWindow>().unwrap(), SweepWindow::small());
        let w: SweepWindow = "basic=2..40,complete=12,shadow=5".parse().unwrap();
        assert_eq!(w.basic, Span::new(2, 40));
        assert_eq!(w.complete, Span::new(1, 12));
        assert_eq!(w.shadow_samples, 5);
        assert_eq!(w.composite_m, SweepWindow::default().composite_m);
        assert!("basic=9..3".parse::<SweepWindow>().is_err());
        assert!("wheel=3".parse::<SweepWindow>().is_err());
        assert!("basic".parse::<SweepWindow>().is_err());
        assert!("shadow=x".parse::<SweepWindow>().is_err());
    }

    #[test]
    fn group_parsing() {
        assert_eq!(
            "lollipop".parse::<SweepGroup>().unwrap(),
            SweepGroup::Family(Family::Lollipop)
        );
        assert_eq!("pendant".parse::<SweepGroup>().unwrap(), SweepGroup::Pendant);
        assert_eq!("shadow".parse::<SweepGroup>().unwrap(), SweepGroup::Shadow);
        assert!("wheel".parse::<SweepGroup>().is_err());
    }

    #[test]
    fn grids_respect_family_minimums() {
        let w = SweepWindow::default();
        let cycles = family_grid(Family::Cycle, false, &w);
        assert_eq!(cycles.first().unwrap().p1, 3);
        assert_eq!(cycles.last().unwrap().p1, 64);
        assert_eq!(family_grid(Family::Path, true, &w).first().unwrap().p1, 2);
        assert_eq!(family_grid(Family::Star, false, &w).first().unwrap().p1, 2);
        assert_eq!(family_grid(Family::Lollipop, false, &w).len(), 14 * 24);
        assert_eq!(family_grid(Family::Bistar, true, &w).len(), 14 * 14);
    }

    #[test]
    fn small_sweep_passes() {
        let records = run_sweep(&SweepGroup::all(), &SweepWindow::small(), 1).unwrap();
        assert!(!records.is_empty());
        let failures: Vec<_> = records.iter().filter(|r| !r.pass).collect();
        assert!(failures.is_empty(), "{failures:?}");
    }

    #[test]
    fn csv_format() {
        let records = run_sweep(&[SweepGroup::Family(Family::Path)], &"basic=1..2".parse().unwrap(), 0).unwrap();
        let csv = records_to_csv(&records);
        assert_eq!(
            csv,
            "family,p1,p2,formula,oracle,pass\n\
             C_path,1,,0/2^0,0/2^0,true\n\
             C_path,2,,1/2^0,1/2^0,true\n\
             CL_path,2,,0/2^0,0/2^0,true\n"
        );
        let json = records_to_json(&records);
        let back: Vec<VerificationRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, records);
    }

    #[test]
    fn a_wrong_formula_is_caught() {
        let r = VerificationRecord::new(
            FormulaId::CPath,
            3,
            None,
            DyadicValue::integer(2),
            DyadicValue::new(5, 1),
        );
        assert!(!r.pass);
    }

    #[test]
    fn shadow_experiment_reports() {
        let findings = shadow_min_degree_experiment(5, 6, 3).unwrap();
        assert_eq!(findings.len(), 7);
        for f in &findings {
            println!(
                "{}: order {} min degree {} connected {} formula {} oracle {} holds {}",
                f.description, f.order, f.min_degree, f.connected, f.formula, f.oracle, f.holds
            );
        }
    }
}
