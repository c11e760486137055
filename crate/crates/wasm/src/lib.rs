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

//! Browser bindings. Every entry point takes strings and returns a JSON
//! document so the page stays plain JavaScript.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use closeness_core::sweep::records_to_json;
use closeness_core::{
    analyze, closed_form, closed_form_line, generate, graph_closeness, line_graph, run_sweep, shadow, shadow_closeness,
    DyadicValue, FamilySpec, Graph, Measure, SweepGroup, SweepWindow,
};

#[derive(Serialize)]
struct Value {
    exact: DyadicValue,
    approx: f64,
}

impl From<&DyadicValue> for Value {
    fn from(v: &DyadicValue) -> Self {
        Value {
            exact: v.clone(),
            approx: v.to_f64(),
        }
    }
}

#[derive(Serialize)]
struct GraphView {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    closeness: Vec<Value>,
    total: Value,
    /// Closed-form value, when one applies.
    formula: Option<Value>,
}

fn build(spec: &str, transform: &str) -> Result<(Graph, Option<DyadicValue>), String> {
    let spec: FamilySpec = spec.parse().map_err(|e| format!("{e}"))?;
    let g = generate(&spec).map_err(|e| e.to_string())?;
    Ok(match transform {
        "none" => (g, closed_form(&spec).ok()),
        "line" => (line_graph(&g).graph, closed_form_line(&spec).ok()),
        "shadow" => {
            let formula = (g.order() >= 2)
                .then(|| closed_form(&spec).ok().map(|c| shadow_closeness(&c, g.order())))
                .flatten();
            (shadow(&g).graph, formula)
        }
        other => return Err(format!("unknown transform {other:?}")),
    })
}

pub fn describe_graph(spec: &str, transform: &str) -> Result<String, String> {
    let (g, formula) = build(spec, transform)?;
    let report = graph_closeness(&g);
    let view = GraphView {
        labels: g.labels().to_vec(),
        edges: g.edges().collect(),
        closeness: report.per_vertex.iter().map(Value::from).collect(),
        total: Value::from(&report.total),
        formula: formula.as_ref().map(Value::from),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

pub fn vulnerability_report(spec: &str, transform: &str, measure: &str) -> Result<String, String> {
    let (g, _) = build(spec, transform)?;
    let measure: Measure = measure.parse().map_err(|e| format!("{e}"))?;
    let report = analyze(&g, measure).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

pub fn verification_records(group: &str, window: &str, seed: u64) -> Result<String, String> {
    let group: SweepGroup = group.parse().map_err(|e| format!("{e}"))?;
    let window: SweepWindow = window.parse().map_err(|e| format!("{e}"))?;
    let records = run_sweep(&[group], &window, seed).map_err(|e| e.to_string())?;
    Ok(records_to_json(&records))
}

/// Graph, per-vertex closeness and the matching closed form for a family
/// spec such as `tadpole:5,3`; `transform` is `none`, `line` or `shadow`.
#[wasm_bindgen(js_name = describeGraph)]
pub fn describe_graph_js(spec: &str, transform: &str) -> Result<String, JsError> {
    describe_graph(spec, transform).map_err(|e| JsError::new(&e))
}

/// Residual or additional closeness (`link`, `vertex`, `additional`) with
/// every optimal witness.
#[wasm_bindgen(js_name = vulnerability)]
pub fn vulnerability_js(spec: &str, transform: &str, measure: &str) -> Result<String, JsError> {
    vulnerability_report(spec, transform, measure).map_err(|e| JsError::new(&e))
}

/// Closed form against breadth-first closeness for one family or group.
#[wasm_bindgen(js_name = verifyFamily)]
pub fn verify_family_js(group: &str, window: &str, seed: u64) -> Result<String, JsError> {
    verification_records(group, window, seed).map_err(|e| JsError::new(&e))
}
