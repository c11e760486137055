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

import init, { describeGraph, vulnerability, verifyFamily } from "./pkg/closeness_wasm.js";

const $ = (id) => document.getElementById(id);
let current = null;
let highlight = { vertices: new Set(), edges: [] };

function report(fn) {
  try {
    $("error").textContent = "";
    fn();
  } catch (e) {
    $("error").textContent = String(e.message ?? e);
  }
}

function positions(n, size) {
  const r = size / 2 - 40;
  return Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / Math.max(n, 1) - Math.PI / 2;
    return [size / 2 + r * Math.cos(a), size / 2 + r * Math.sin(a)];
  });
}

function shade(t) {
  // t in [0, 1]: pale blue to deep blue.
  const l = 85 - 50 * t;
  return `hsl(215, 70%, ${l}%)`;
}

function draw() {
  const canvas = $("canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!current) return;
  const pos = positions(current.labels.length, canvas.width);
  const values = current.closeness.map((c) => c.approx);
  const max = Math.max(...values, 1e-9);

  ctx.lineWidth = 1.5;
  for (const [u, v] of current.edges) {
    ctx.strokeStyle = "#999";
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  ctx.setLineDash([6, 4]);
  ctx.strokeStyle = "#d33";
  ctx.lineWidth = 2.5;
  for (const [u, v] of highlight.edges) {
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  ctx.setLineDash([]);

  const radius = current.labels.length > 40 ? 6 : 11;
  current.labels.forEach((label, i) => {
    ctx.beginPath();
    ctx.arc(...pos[i], radius, 0, 2 * Math.PI);
    ctx.fillStyle = shade(values[i] / max);
    ctx.fill();
    ctx.strokeStyle = highlight.vertices.has(i) ? "#d33" : "#335";
    ctx.lineWidth = highlight.vertices.has(i) ? 3 : 1;
    ctx.stroke();
    if (current.labels.length <= 40) {
      ctx.fillStyle = "#222";
      ctx.font = "11px ui-monospace, monospace";
      ctx.fillText(label, pos[i][0] + radius + 2, pos[i][1] - radius);
    }
  });
}

function compute() {
  report(() => {
    current = JSON.parse(describeGraph($("spec").value.trim(), $("transform").value));
    highlight = { vertices: new Set(), edges: [] };
    const f = current.formula;
    const agree = f ? (f.exact === current.total.exact ? "matches" : "DIFFERS FROM") : "no closed form for";
    $("summary").textContent =
      `C(G) = ${current.total.exact} (${current.total.approx}); closed form ${agree} breadth-first value`;
    const rows = current.labels.map(
      (label, i) => `<tr><td>${i}</td><td>${label}</td><td>${current.closeness[i].exact}</td>` +
        `<td>${current.closeness[i].approx.toFixed(6)}</td></tr>`,
    );
    $("vertices").innerHTML = "<tr><th>#</th><th>label</th><th>C(i)</th><th>~</th></tr>" + rows.join("");
    $("vuln-out").textContent = "";
    draw();
  });
}

function analyze() {
  report(() => {
    const r = JSON.parse(vulnerability($("spec").value.trim(), $("transform").value, $("measure").value));
    highlight = { vertices: new Set(), edges: [] };
    for (const w of r.witnesses) {
      if (Array.isArray(w)) highlight.edges.push(w);
      else highlight.vertices.add(w);
    }
    const shown = r.witnesses.map((w) => JSON.stringify(w)).join(" ");
    $("vuln-out").textContent = `${r.measure}: ${r.baseline} -> ${r.value}; witnesses ${shown}`;
    draw();
  });
}

function verify() {
  report(() => {
    const records = JSON.parse(verifyFamily($("group").value.trim(), $("window").value.trim(), 1n));
    const failed = records.filter((r) => !r.pass).length;
    $("verify-summary").textContent = `${records.length} records, ${failed} failed`;
    const rows = records.map(
      (r) => `<tr class="${r.pass ? "" : "fail"}"><td>${r.family}</td><td>${r.p1}</td>` +
        `<td>${r.p2 ?? ""}</td><td>${r.formula}</td><td>${r.oracle}</td><td>${r.pass}</td></tr>`,
    );
    $("verify-out").innerHTML =
      "<table><tr><th>formula</th><th>p1</th><th>p2</th><th>closed form</th><th>BFS</th><th>pass</th></tr>" +
      rows.join("") + "</table>";
  });
}

await init();
$("draw").addEventListener("click", compute);
$("vuln").addEventListener("click", analyze);
$("verify").addEventListener("click", verify);
$("spec").addEventListener("keydown", (e) => e.key === "Enter" && compute());
compute();
