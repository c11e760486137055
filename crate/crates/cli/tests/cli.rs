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

use std::path::Path;
use std::process::{Command, Output};

fn closeness(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_closeness"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn generated_lollipop_totals_seven() {
    let dir = tempfile::tempdir().unwrap();
    assert!(closeness(&["gen", "lollipop:3,2", "-o", "g.txt"], dir.path())
        .status
        .success());
    let out = closeness(&["closeness", "-i", "g.txt", "--format", "json"], dir.path());
    assert_eq!(json(&out)["total"], "7/2^0");

    let text = stdout(&closeness(&["closeness", "-i", "g.txt"], dir.path()));
    assert_eq!(text, "total\t7/2^0\t7\n");
}

#[test]
fn per_vertex_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = closeness(
        &["closeness", "--family", "star:4", "--per-vertex", "--format", "csv"],
        dir.path(),
    );
    assert_eq!(
        stdout(&out),
        "vertex,label,closeness\n0,S:0,3/2^1\n1,S:1,1/2^0\n2,S:2,1/2^0\n3,S:3,1/2^0\ntotal,,9/2^1\n"
    );
}

#[test]
fn line_graph_of_triangle_with_pendant() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.txt"), "4 4\n0 1\n0 2\n1 2\n0 3\n").unwrap();
    let out = closeness(&["transform", "line", "-i", "g.txt", "-o", "l.txt"], dir.path());
    assert!(out.status.success());
    let total = json(&closeness(
        &["closeness", "-i", "l.txt", "--format", "json"],
        dir.path(),
    ));
    assert_eq!(total["total"], "11/2^1");

    let origins: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("l.txt.origins.json")).unwrap()).unwrap();
    assert_eq!(origins.as_array().unwrap().len(), 4);
    assert_eq!(origins[3], serde_json::json!({ "kind": "edge", "u": 1, "v": 2 }));
}

#[test]
fn bridge_join_rebuilds_lollipop() {
    let dir = tempfile::tempdir().unwrap();
    closeness(&["gen", "complete:4", "-o", "k.txt"], dir.path());
    closeness(&["gen", "path:3", "-o", "p.txt"], dir.path());
    let out = closeness(
        &[
            "transform",
            "bridge-join",
            "-i",
            "k.txt",
            "-p",
            "0",
            "-j",
            "p.txt",
            "-q",
            "0",
            "-o",
            "j.txt",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let joined = json(&closeness(
        &["closeness", "-i", "j.txt", "--format", "json"],
        dir.path(),
    ));
    let direct = json(&closeness(
        &["closeness", "--family", "lollipop:4,3", "--format", "json"],
        dir.path(),
    ));
    assert_eq!(joined["total"], direct["total"]);

    let out = closeness(
        &[
            "transform",
            "coalesce",
            "-i",
            "k.txt",
            "-p",
            "0",
            "-j",
            "p.txt",
            "-q",
            "0",
            "-o",
            "c.txt",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("c.txt")).unwrap();
    assert!(text.starts_with("6 8\n"));
}

#[test]
fn shadow_writes_dot_with_provenance_labels() {
    let dir = tempfile::tempdir().unwrap();
    let out = closeness(
        &["transform", "shadow", "--family", "path:2", "--format", "dot"],
        dir.path(),
    );
    let dot = stdout(&out);
    assert!(dot.contains("label=\"P:0'\""), "{dot}");
    assert!(dot.contains("label=\"P:1\\\"\""), "{dot}");
}

#[test]
fn vulnerability_reports() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&closeness(&["vuln", "vertex", "--family", "path:3"], dir.path()));
    assert_eq!(v["measure"], "vertex_residual");
    assert_eq!(v["value"], "0/2^0");
    assert_eq!(v["witnesses"], serde_json::json!([1]));

    let v = json(&closeness(&["vuln", "additional", "--family", "path:3"], dir.path()));
    assert_eq!(v["value"], "3/2^0");
    assert_eq!(v["witnesses"], serde_json::json!([[0, 2]]));

    let out = closeness(&["vuln", "additional", "--family", "complete:3"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_and_validation_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.txt"), "3 2\n0 1\n1 1\n").unwrap();
    for args in [
        vec!["gen", "cycle:2"],
        vec!["gen", "lollipop:3"],
        vec!["closeness", "-i", "bad.txt"],
        vec!["closeness", "-i", "bad.txt", "--family", "path:3"],
        vec!["closeness"],
        vec!["transform", "bridge-join", "--family", "path:3", "-o", "x.txt"],
        vec!["verify", "--window", "basic=9..2", "-o", "out"],
        vec!["nonsense"],
    ] {
        let out = closeness(&args, dir.path());
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let err = String::from_utf8(closeness(&["closeness", "-i", "bad.txt"], dir.path()).stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn verify_writes_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = closeness(
        &["verify", "--family", "tadpole", "--window", "small", "-o", "out"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(dir.path().join("out/verification.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("family,p1,p2,formula,oracle,pass"));
    assert!(lines.all(|l| l.ends_with(",true") && l.contains("_tadpole,")));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("out/verification.json")).unwrap()).unwrap();
    assert_eq!(json.as_array().unwrap().len() + 1, csv.lines().count());
}

#[test]
fn edge_list_round_trip_through_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let generated = stdout(&closeness(&["gen", "broom:4,3"], dir.path()));
    let mut child = Command::new(env!("CARGO_BIN_EXE_closeness"))
        .args(["transform", "line", "-i", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(generated.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("6 "));
}
