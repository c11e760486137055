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

//! Closed-form closeness of the graph families, their line graphs, line
//! graphs with one pendant "bridge" edge, and the composition rules for
//! bridged and coalesced graphs.
//!
//! All evaluators work in exact dyadic arithmetic; every denominator that
//! appears is a power of two.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{Family, FamilySpec};
use crate::graph::Graph;
use crate::numeric::DyadicValue;

fn int(x: i64) -> DyadicValue {
    DyadicValue::integer(x)
}

/// `2^e`.
fn p2(e: i64) -> DyadicValue {
    DyadicValue::pow2_signed(e)
}

/// `x / 2^k`.
fn over(x: i64, k: u32) -> DyadicValue {
    DyadicValue::new(x, k)
}

fn as_i64(x: usize) -> i64 {
    i64::try_from(x).expect("parameter fits in i64")
}

/// Identifies one closed form.
///
/// `C_*` is the closeness of a family, `CL_*` of its line graph, `CLB_*` of
/// the line graph of the base graph with one pendant edge attached at the
/// convention vertex, and `CB_*` of the vertex standing for that pendant edge
/// inside the same line graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormulaId {
    #[serde(rename = "C_path")]
    CPath,
    #[serde(rename = "C_cycle")]
    CCycle,
    #[serde(rename = "C_star")]
    CStar,
    #[serde(rename = "C_complete")]
    CComplete,
    #[serde(rename = "C_shadow")]
    CShadow,
    #[serde(rename = "C_lollipop")]
    CLollipop,
    #[serde(rename = "C_tadpole")]
    CTadpole,
    #[serde(rename = "C_broom")]
    CBroom,
    #[serde(rename = "C_bistar")]
    CBistar,
    #[serde(rename = "CL_path")]
    CLPath,
    #[serde(rename = "CL_cycle")]
    CLCycle,
    #[serde(rename = "CL_star")]
    CLStar,
    #[serde(rename = "CL_complete")]
    CLComplete,
    #[serde(rename = "CL_lollipop")]
    CLLollipop,
    #[serde(rename = "CL_tadpole")]
    CLTadpole,
    #[serde(rename = "CL_broom")]
    CLBroom,
    #[serde(rename = "CL_bistar")]
    CLBistar,
    #[serde(rename = "CLB_path")]
    CLBPath,
    #[serde(rename = "CLB_cycle")]
    CLBCycle,
    #[serde(rename = "CLB_star_leaf")]
    CLBStarLeaf,
    #[serde(rename = "CLB_star_center")]
    CLBStarCenter,
    #[serde(rename = "CLB_complete")]
    CLBComplete,
    #[serde(rename = "CB_path")]
    CBPath,
    #[serde(rename = "CB_cycle")]
    CBCycle,
    #[serde(rename = "CB_star_leaf")]
    CBStarLeaf,
    #[serde(rename = "CB_star_center")]
    CBStarCenter,
    #[serde(rename = "CB_complete")]
    CBComplete,
}

impl FormulaId {
    pub const ALL: [FormulaId; 27] = [
        FormulaId::CPath,
        FormulaId::CCycle,
        FormulaId::CStar,
        FormulaId::CComplete,
        FormulaId::CShadow,
        FormulaId::CLollipop,
        FormulaId::CTadpole,
        FormulaId::CBroom,
        FormulaId::CBistar,
        FormulaId::CLPath,
        FormulaId::CLCycle,
        FormulaId::CLStar,
        FormulaId::CLComplete,
        FormulaId::CLLollipop,
        FormulaId::CLTadpole,
        FormulaId::CLBroom,
        FormulaId::CLBistar,
        FormulaId::CLBPath,
        FormulaId::CLBCycle,
        FormulaId::CLBStarLeaf,
        FormulaId::CLBStarCenter,
        FormulaId::CLBComplete,
        FormulaId::CBPath,
        FormulaId::CBCycle,
        FormulaId::CBStarLeaf,
        FormulaId::CBStarCenter,
        FormulaId::CBComplete,
    ];

    pub fn name(self) -> &'static str {
        use FormulaId::*;
        match self {
            CPath => "C_path",
            CCycle => "C_cycle",
            CStar => "C_star",
            CComplete => "C_complete",
            CShadow => "C_shadow",
            CLollipop => "C_lollipop",
            CTadpole => "C_tadpole",
            CBroom => "C_broom",
            CBistar => "C_bistar",
            CLPath => "CL_path",
            CLCycle => "CL_cycle",
            CLStar => "CL_star",
            CLComplete => "CL_complete",
            CLLollipop => "CL_lollipop",
            CLTadpole => "CL_tadpole",
            CLBroom => "CL_broom",
            CLBistar => "CL_bistar",
            CLBPath => "CLB_path",
            CLBCycle => "CLB_cycle",
            CLBStarLeaf => "CLB_star_leaf",
            CLBStarCenter => "CLB_star_center",
            CLBComplete => "CLB_complete",
            CBPath => "CB_path",
            CBCycle => "CB_cycle",
            CBStarLeaf => "CB_star_leaf",
            CBStarCenter => "CB_star_center",
            CBComplete => "CB_complete",
        }
    }

    /// One-line statement of the closed form, in plain notation.
    pub fn describe(self) -> &'static str {
        use FormulaId::*;
        match self {
            CPath => "C(P_n) = 2n - 4 + 2^(2-n)",
            CCycle => "C(C_2k) = 4k - 6k 2^-k;  C(C_2k+1) = 2(2k+1) - 2(2k+1) 2^-k",
            CStar => "C(S_n) = (n-1)(n+2)/4",
            CComplete => "C(K_n) = n(n-1)/2",
            CShadow => "C(S(G)) = 4 C(G) + n/2 for connected G of order n",
            CLollipop => "C(L_mn) = m/2 (m + 1 - 2^(1-n)) + 2n - 3 + 3 2^-n",
            CTadpole => {
                "C(T_2k,n) = 4k - 6k 2^-k + 2n + 2 + 6(2^(-n-k) - 2^-k) - 2^(1-n);  \
                 C(T_2k+1,n) = 4k - k 2^(2-k) + 2n + 4 + 2^(2-n-k) - 3 2^(1-k) - 2^(1-n)"
            }
            CBroom => "C(B_mn) = m/4 (m + 5 - 2^(2-n)) + 2n - 7/2 + 3 2^-n",
            CBistar => "C(BS_mn) = (m(m+2) + n(n+2) + mn - 3)/4",
            CLPath => "C(L(P_n)) = C(P_n-1) = 2n - 6 + 2^(3-n)",
            CLCycle => "C(L(C_n)) = C(C_n)",
            CLStar => "C(L(S_n)) = C(K_n-1) = (n-1)(n-2)/2",
            CLComplete => "C(L(K_n)) = n(n^3 + 2n^2 - 13n + 10)/16",
            CLLollipop => "C(L(L_mn)) = m/16 (m^3 + 2m^2 - 5m + 18) - (m^2 + m - 10) 2^(-n-1) + 2n - 5",
            CLTadpole => {
                "C(L(T_2k,n)) = 4k + 2n - (6k+8) 2^-k - 2^(2-n) + 4 + 2^(3-k-n);  \
                 C(L(T_2k+1,n)) = 4k + 2n + 6 - (4k+8) 2^-k - 2^(2-n) + 3 2^(1-k-n)"
            }
            CLBroom => "C(L(B_mn)) = m(m+1)/2 + 2n - 5 + (3-m) 2^(1-n)",
            CLBistar => "C(L(BS_mn)) = ((m-1)^2 + (n-1)^2 + mn - 1)/2",
            CLBPath => "C(L(P_n + B)) = 2n - 4 + 2^(2-n), B at a leaf",
            CLBCycle => "C(L(C_2k + B)) = 4k + 4 - (6k+4) 2^-k;  C(L(C_2k+1 + B)) = 4k + 6 - (8k+10) 2^(-k-1)",
            CLBStarLeaf => "C(L(S_n + B)) = ((n-1)(n-2) + n)/2, B at a leaf",
            CLBStarCenter => "C(L(S_n + B)) = n(n-1)/2, B at the center",
            CLBComplete => "C(L(K_n + B)) = (n^4 + 2n^3 - 9n^2 + 14n - 8)/16",
            CBPath => "C(B) in L(P_n + B) = 1 - 2^(1-n)",
            CBCycle => "C(B) in L(C_2k + B) = 2 - 2^(1-k);  in L(C_2k+1 + B) = 2 - 3 2^(-k-1)",
            CBStarLeaf => "C(B) in L(S_n + B) = n/4, B at a leaf",
            CBStarCenter => "C(B) in L(S_n + B) = (n-1)/2, B at the center",
            CBComplete => "C(B) in L(K_n + B) = (n-1)(n+2)/8",
        }
    }

    /// Evaluates the formula at `(p1, p2)`. `C_shadow` is not a function of
    /// integer parameters alone; use [`shadow_closeness`].
    pub fn evaluate(self, p1: usize, p2: Option<usize>) -> Result<DyadicValue> {
        use FormulaId::*;
        let basic = |family| FamilySpec { family, p1, p2 };
        match self {
            CPath => closed_form(&basic(Family::Path)),
            CCycle => closed_form(&basic(Family::Cycle)),
            CStar => closed_form(&basic(Family::Star)),
            CComplete => closed_form(&basic(Family::Complete)),
            CLollipop => closed_form(&basic(Family::Lollipop)),
            CTadpole => closed_form(&basic(Family::Tadpole)),
            CBroom => closed_form(&basic(Family::Broom)),
            CBistar => closed_form(&basic(Family::Bistar)),
            CLPath => closed_form_line(&basic(Family::Path)),
            CLCycle => closed_form_line(&basic(Family::Cycle)),
            CLStar => closed_form_line(&basic(Family::Star)),
            CLComplete => closed_form_line(&basic(Family::Complete)),
            CLLollipop => closed_form_line(&basic(Family::Lollipop)),
            CLTadpole => closed_form_line(&basic(Family::Tadpole)),
            CLBroom => closed_form_line(&basic(Family::Broom)),
            CLBistar => closed_form_line(&basic(Family::Bistar)),
            CShadow => Err(Error::validation(
                "C_shadow depends on the closeness of the input graph; use shadow_closeness",
            )),
            pendant => {
                if p2.is_some() {
                    return Err(Error::validation(format!("{pendant} takes one parameter")));
                }
                let (case, bridge) = pendant.bridged_case().expect("remaining ids are pendant-edge ids");
                let value = bridged_line(case, p1)?;
                Ok(if bridge {
                    value.bridge_vertex_closeness
                } else {
                    value.line_closeness
                })
            }
        }
    }

    /// For `CLB_*`/`CB_*` ids: the bridged case, and whether the id names the
    /// bridge-vertex component.
    pub fn bridged_case(self) -> Option<(BridgedCase, bool)> {
        use FormulaId::*;
        Some(match self {
            CLBPath => (BridgedCase::Path, false),
            CLBCycle => (BridgedCase::Cycle, false),
            CLBStarLeaf => (BridgedCase::StarLeaf, false),
            CLBStarCenter => (BridgedCase::StarCenter, false),
            CLBComplete => (BridgedCase::Complete, false),
            CBPath => (BridgedCase::Path, true),
            CBCycle => (BridgedCase::Cycle, true),
            CBStarLeaf => (BridgedCase::StarLeaf, true),
            CBStarCenter => (BridgedCase::StarCenter, true),
            CBComplete => (BridgedCase::Complete, true),
            _ => return None,
        })
    }

    /// The family closed form (`C_*`) or line closed form (`CL_*`) for `family`.
    pub fn for_family(family: Family, line: bool) -> FormulaId {
        use FormulaId::*;
        match (family, line) {
            (Family::Path, false) => CPath,
            (Family::Cycle, false) => CCycle,
            (Family::Star, false) => CStar,
            (Family::Complete, false) => CComplete,
            (Family::Lollipop, false) => CLollipop,
            (Family::Tadpole, false) => CTadpole,
            (Family::Broom, false) => CBroom,
            (Family::Bistar, false) => CBistar,
            (Family::Path, true) => CLPath,
            (Family::Cycle, true) => CLCycle,
            (Family::Star, true) => CLStar,
            (Family::Complete, true) => CLComplete,
            (Family::Lollipop, true) => CLLollipop,
            (Family::Tadpole, true) => CLTadpole,
            (Family::Broom, true) => CLBroom,
            (Family::Bistar, true) => CLBistar,
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::validation(format!("unknown formula id {s:?}")))
    }
}

fn path_closeness(n: i64) -> DyadicValue {
    int(2 * n - 4) + p2(2 - n)
}

fn path_leaf_closeness(n: i64) -> DyadicValue {
    int(1) - p2(1 - n)
}

fn cycle_closeness(n: i64) -> DyadicValue {
    let k = n / 2;
    if n % 2 == 0 {
        int(4 * k) - int(6 * k) * p2(-k)
    } else {
        int(2 * n) - int(2 * n) * p2(-k)
    }
}

fn star_closeness(n: i64) -> DyadicValue {
    over((n - 1) * (n + 2), 2)
}

fn complete_closeness(n: i64) -> DyadicValue {
    over(n * (n - 1), 1)
}

/// Closeness of a family member.
pub fn closed_form(spec: &FamilySpec) -> Result<DyadicValue> {
    spec.validate()?;
    let m = as_i64(spec.p1);
    let n = as_i64(spec.p2.unwrap_or(0));
    Ok(match spec.family {
        Family::Path => path_closeness(m),
        Family::Cycle => cycle_closeness(m),
        Family::Star => star_closeness(m),
        Family::Complete => complete_closeness(m),
        Family::Lollipop => over(m, 1) * (int(m + 1) - p2(1 - n)) + int(2 * n - 3) + int(3) * p2(-n),
        Family::Tadpole => {
            let k = m / 2;
            if m % 2 == 0 {
                int(4 * k) - int(6 * k) * p2(-k) + int(2 * n + 2) + int(6) * (p2(-n - k) - p2(-k)) - p2(1 - n)
            } else {
                int(4 * k) - int(k) * p2(2 - k) + int(2 * n + 4) + p2(2 - n - k) - int(3) * p2(1 - k) - p2(1 - n)
            }
        }
        Family::Broom => over(m, 2) * (int(m + 5) - p2(2 - n)) + int(2 * n) - over(7, 1) + int(3) * p2(-n),
        Family::Bistar => over(m * (m + 2) + n * (n + 2) + m * n - 3, 2),
    })
}

/// Closeness of the line graph of a family member.
pub fn closed_form_line(spec: &FamilySpec) -> Result<DyadicValue> {
    spec.validate()?;
    let m = as_i64(spec.p1);
    let n = as_i64(spec.p2.unwrap_or(0));
    Ok(match spec.family {
        Family::Path => {
            if m < 2 {
                return Err(Error::validation(
                    "line graph of P_1 is empty; path requires n >= 2 here",
                ));
            }
            int(2 * m - 6) + p2(3 - m)
        }
        Family::Cycle => cycle_closeness(m),
        Family::Star => over((m - 1) * (m - 2), 1),
        Family::Complete => over(m * (m * m * m + 2 * m * m - 13 * m + 10), 4),
        Family::Lollipop => {
            over(m * (m * m * m + 2 * m * m - 5 * m + 18), 4) - int(m * m + m - 10) * p2(-n - 1) + int(2 * n - 5)
        }
        Family::Tadpole => {
            let k = m / 2;
            if m % 2 == 0 {
                int(4 * k + 2 * n + 4) - int(6 * k + 8) * p2(-k) - p2(2 - n) + p2(3 - k - n)
            } else {
                int(4 * k + 2 * n + 6) - int(4 * k + 8) * p2(-k) - p2(2 - n) + int(3) * p2(1 - k - n)
            }
        }
        Family::Broom => over(m * (m + 1), 1) + int(2 * n - 5) + int(3 - m) * p2(1 - n),
        Family::Bistar => over((m - 1) * (m - 1) + (n - 1) * (n - 1) + m * n - 1, 1),
    })
}

/// A base graph that receives one pendant edge `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BridgedCase {
    /// `P_n`, pendant at the leaf 0.
    Path,
    /// `C_n`, pendant at vertex 0.
    Cycle,
    /// `S_n`, pendant at the leaf 1.
    StarLeaf,
    /// `S_n`, pendant at the center 0.
    StarCenter,
    /// `K_n`, pendant at vertex 0.
    Complete,
}

impl BridgedCase {
    pub const ALL: [BridgedCase; 5] = [
        BridgedCase::Path,
        BridgedCase::Cycle,
        BridgedCase::StarLeaf,
        BridgedCase::StarCenter,
        BridgedCase::Complete,
    ];

    pub fn minimum(self) -> usize {
        match self {
            BridgedCase::Path => 1,
            BridgedCase::Cycle => 3,
            BridgedCase::StarLeaf | BridgedCase::StarCenter | BridgedCase::Complete => 2,
        }
    }

    pub fn family(self) -> Family {
        match self {
            BridgedCase::Path => Family::Path,
            BridgedCase::Cycle => Family::Cycle,
            BridgedCase::StarLeaf | BridgedCase::StarCenter => Family::Star,
            BridgedCase::Complete => Family::Complete,
        }
    }

    /// Vertex of the base graph the pendant edge attaches to.
    pub fn attachment_vertex(self) -> usize {
        match self {
            BridgedCase::StarLeaf => 1,
            _ => 0,
        }
    }

    pub fn formula_ids(self) -> (FormulaId, FormulaId) {
        use FormulaId::*;
        match self {
            BridgedCase::Path => (CLBPath, CBPath),
            BridgedCase::Cycle => (CLBCycle, CBCycle),
            BridgedCase::StarLeaf => (CLBStarLeaf, CBStarLeaf),
            BridgedCase::StarCenter => (CLBStarCenter, CBStarCenter),
            BridgedCase::Complete => (CLBComplete, CBComplete),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BridgedCase::Path => "path",
            BridgedCase::Cycle => "cycle",
            BridgedCase::StarLeaf => "star_leaf",
            BridgedCase::StarCenter => "star_center",
            BridgedCase::Complete => "complete",
        }
    }
}

/// Closeness of `L(G + B)` and of the vertex `B` inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgedLine {
    pub line_closeness: DyadicValue,
    pub bridge_vertex_closeness: DyadicValue,
}

pub fn bridged_line(case: BridgedCase, n: usize) -> Result<BridgedLine> {
    if n < case.minimum() {
        return Err(Error::validation(format!(
            "bridged {} requires n >= {}, got {n}",
            case.name(),
            case.minimum()
        )));
    }
    let n = as_i64(n);
    let (line_closeness, bridge_vertex_closeness) = match case {
        BridgedCase::Path => (path_closeness(n), path_leaf_closeness(n)),
        BridgedCase::Cycle => {
            let k = n / 2;
            if n % 2 == 0 {
                (int(4 * k + 4) - int(6 * k + 4) * p2(-k), int(2) - p2(1 - k))
            } else {
                (
                    int(4 * k + 6) - int(8 * k + 10) * p2(-k - 1),
                    int(2) - int(3) * p2(-k - 1),
                )
            }
        }
        BridgedCase::StarLeaf => (over((n - 1) * (n - 2) + n, 1), over(n, 2)),
        BridgedCase::StarCenter => (over(n * (n - 1), 1), over(n - 1, 1)),
        BridgedCase::Complete => (
            over(n * n * n * n + 2 * n * n * n - 9 * n * n + 14 * n - 8, 4),
            over((n - 1) * (n + 2), 3),
        ),
    };
    Ok(BridgedLine {
        line_closeness,
        bridge_vertex_closeness,
    })
}

/// Closeness after joining two graphs by the edge `(p, q)`:
/// `C(G1) + C(G2) + (1 + C(p))(1 + C(q))`.
pub fn compose_bridge(cg1: &DyadicValue, cg2: &DyadicValue, cp: &DyadicValue, cq: &DyadicValue) -> DyadicValue {
    let one = DyadicValue::one();
    cg1 + cg2 + (&one + cp) * (&one + cq)
}

/// Closeness after identifying `p` and `q`: `C(G1) + C(G2) + 2 C(p) C(q)`.
pub fn compose_coalesce(cg1: &DyadicValue, cg2: &DyadicValue, cp: &DyadicValue, cq: &DyadicValue) -> DyadicValue {
    cg1 + cg2 + (cp * cq).shl(1)
}

/// Closeness of `L(G1 + B + G2)` from the two one-sided pieces
/// `L(G1 + B1)` and `L(G2 + B2)`: the bridge vertices `B1` and `B2` coincide,
/// so this is [`compose_coalesce`] at the bridge vertex.
pub fn compose_line_bridge(cl1: &DyadicValue, cl2: &DyadicValue, cb1: &DyadicValue, cb2: &DyadicValue) -> DyadicValue {
    compose_coalesce(cl1, cl2, cb1, cb2)
}

/// Shadow-graph closeness of a connected graph of closeness `cg` and the
/// given order: `4 C(G) + n/2`.
pub fn shadow_closeness(cg: &DyadicValue, order: usize) -> DyadicValue {
    cg.shl(2) + over(as_i64(order), 1)
}

/// The base graph of a bridged case with its pendant edge attached. Returns
/// the graph and the pendant edge `(attachment, new vertex)`.
pub fn bridged_base_graph(case: BridgedCase, n: usize) -> Result<(Graph, (usize, usize))> {
    if n < case.minimum() {
        return Err(Error::validation(format!(
            "bridged {} requires n >= {}, got {n}",
            case.name(),
            case.minimum()
        )));
    }
    let base = crate::generators::gen_basic(&FamilySpec::basic(case.family(), n))?;
    let at = case.attachment_vertex();
    let (g, w) = crate::transforms::add_pendant(&base, at)?;
    Ok((g, (at, w)))
}
