//! Kashiwara operators on multipartitions via the signature rule, and the
//! crystal graph they generate.
//!
//! For a residue `i`, the addable (`+`) and removable (`-`) `i`-boxes are
//! listed in a fixed [`BoxOrder`]. Adjacent `+-` pairs are cancelled until the
//! word reads `-^eps +^phi`. `e~_i` removes the rightmost surviving `-` box,
//! `f~_i` adds the leftmost surviving `+` box.

use std::collections::BTreeMap;
use std::fmt::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipartition::{enumerate, BoxCoord, Multicharge, Multipartition};
use crate::weight::{wt, AffineWeight};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoxOrder {
    /// Component ascending, then row ascending.
    #[default]
    Default,
    /// Component descending, then row descending.
    Mirror,
}

impl BoxOrder {
    pub const ALL: [BoxOrder; 2] = [BoxOrder::Default, BoxOrder::Mirror];

    fn sort(self, boxes: &mut [(Sign, BoxCoord)]) {
        boxes.sort_by_key(|(_, b)| (b.component, b.row));
        if self == BoxOrder::Mirror {
            boxes.reverse();
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoxOrder::Default => "default",
            BoxOrder::Mirror => "mirror",
        }
    }
}

impl fmt::Display for BoxOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoxOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "default" => Ok(BoxOrder::Default),
            "mirror" => Ok(BoxOrder::Mirror),
            other => Err(Error::Parse(format!(
                "unknown box order {other:?} (expected default or mirror)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureReport {
    pub symbols: Vec<(Sign, BoxCoord)>,
    pub reduced: Vec<(Sign, BoxCoord)>,
    pub epsilon: usize,
    pub phi: usize,
    pub good_removable: Option<BoxCoord>,
    pub good_addable: Option<BoxCoord>,
}

impl SignatureReport {
    pub fn word(&self) -> String {
        self.symbols.iter().map(|(s, _)| s.symbol()).collect()
    }

    pub fn reduced_word(&self) -> String {
        self.reduced.iter().map(|(s, _)| s.symbol()).collect()
    }
}

pub fn signature(
    i: usize,
    mp: &Multipartition,
    c: &Multicharge,
    order: BoxOrder,
) -> SignatureReport {
    let mut symbols: Vec<(Sign, BoxCoord)> = mp
        .addable_boxes(c, Some(i))
        .into_iter()
        .map(|b| (Sign::Plus, b))
        .chain(
            mp.removable_boxes(c, Some(i))
                .into_iter()
                .map(|b| (Sign::Minus, b)),
        )
        .collect();
    order.sort(&mut symbols);

    let mut reduced: Vec<(Sign, BoxCoord)> = Vec::with_capacity(symbols.len());
    for &(sign, b) in &symbols {
        match (reduced.last(), sign) {
            (Some((Sign::Plus, _)), Sign::Minus) => {
                reduced.pop();
            }
            _ => reduced.push((sign, b)),
        }
    }
    let epsilon = reduced.iter().filter(|(s, _)| *s == Sign::Minus).count();
    let phi = reduced.len() - epsilon;
    let good_removable = epsilon.checked_sub(1).map(|k| reduced[k].1);
    let good_addable = (phi > 0).then(|| reduced[epsilon].1);
    SignatureReport {
        symbols,
        reduced,
        epsilon,
        phi,
        good_removable,
        good_addable,
    }
}

pub fn crystal_e(
    i: usize,
    mp: &Multipartition,
    c: &Multicharge,
    order: BoxOrder,
) -> Option<Multipartition> {
    signature(i, mp, c, order)
        .good_removable
        .map(|b| mp.remove_box(&b).expect("good box is removable"))
}

pub fn crystal_f(
    i: usize,
    mp: &Multipartition,
    c: &Multicharge,
    order: BoxOrder,
) -> Option<Multipartition> {
    signature(i, mp, c, order)
        .good_addable
        .map(|b| mp.add_box(&b).expect("good box is addable"))
}

/// Cached crystal data of one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalNode {
    pub mp: Multipartition,
    pub wt: AffineWeight,
    pub eps: Vec<i64>,
    pub phi: Vec<i64>,
    /// `e~_i` of this node for each residue.
    pub raise: Vec<Option<Multipartition>>,
}

/// An `f~_i` arrow `from -> to`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: Multipartition,
    pub i: usize,
    pub to: Multipartition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrystalGraph {
    pub charge: Multicharge,
    pub max_rank: usize,
    pub order: BoxOrder,
    pub nodes: Vec<CrystalNode>,
    pub edges: Vec<Edge>,
    /// Arrows leaving the graph (target rank `max_rank + 1`).
    pub boundary: Vec<Edge>,
    index: BTreeMap<Multipartition, usize>,
}

pub fn build_graph(c: &Multicharge, max_rank: usize, order: BoxOrder) -> CrystalGraph {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut boundary = Vec::new();
    for n in 0..=max_rank {
        for mp in enumerate(n, c.level()) {
            let weight = wt(&mp, c);
            let mut eps = Vec::with_capacity(c.e());
            let mut phi = Vec::with_capacity(c.e());
            let mut raise = Vec::with_capacity(c.e());
            for i in 0..c.e() {
                let sig = signature(i, &mp, c, order);
                eps.push(sig.epsilon as i64);
                phi.push(sig.phi as i64);
                raise.push(
                    sig.good_removable
                        .map(|b| mp.remove_box(&b).expect("removable")),
                );
                if let Some(b) = sig.good_addable {
                    let edge = Edge {
                        from: mp.clone(),
                        i,
                        to: mp.add_box(&b).expect("addable"),
                    };
                    if n == max_rank {
                        boundary.push(edge);
                    } else {
                        edges.push(edge);
                    }
                }
            }
            nodes.push(CrystalNode {
                mp,
                wt: weight,
                eps,
                phi,
                raise,
            });
        }
    }
    CrystalGraph::from_parts(c.clone(), max_rank, order, nodes, edges, boundary)
}

impl CrystalGraph {
    pub fn from_parts(
        charge: Multicharge,
        max_rank: usize,
        order: BoxOrder,
        nodes: Vec<CrystalNode>,
        edges: Vec<Edge>,
        boundary: Vec<Edge>,
    ) -> Self {
        let index = nodes
            .iter()
            .enumerate()
            .map(|(k, n)| (n.mp.clone(), k))
            .collect();
        CrystalGraph {
            charge,
            max_rank,
            order,
            nodes,
            edges,
            boundary,
            index,
        }
    }

    pub fn node(&self, mp: &Multipartition) -> Option<&CrystalNode> {
        self.index.get(mp).map(|&k| &self.nodes[k])
    }

    pub fn node_mut(&mut self, mp: &Multipartition) -> Option<&mut CrystalNode> {
        self.index.get(mp).map(|&k| &mut self.nodes[k])
    }

    /// `f~_i` read off the stored arrows (boundary arrows included).
    pub fn f_target(&self, from: &Multipartition, i: usize) -> Option<&Multipartition> {
        self.edges
            .iter()
            .chain(&self.boundary)
            .find(|e| e.i == i && &e.from == from)
            .map(|e| &e.to)
    }

    /// Vertices on which every `e~_i` is undefined, keyed by rank and weight.
    pub fn hw_elements(&self) -> BTreeMap<(usize, AffineWeight), Vec<Multipartition>> {
        let mut out: BTreeMap<(usize, AffineWeight), Vec<Multipartition>> = BTreeMap::new();
        for node in &self.nodes {
            if node.raise.iter().all(Option::is_none) {
                out.entry((node.mp.rank(), node.wt.clone()))
                    .or_default()
                    .push(node.mp.clone());
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for node in &self.nodes {
            let id = node.mp.format();
            writeln!(out, "  \"{id}\" [label=\"{id}\\n{}\"];", node.wt).expect("write to string");
        }
        for edge in &self.edges {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                edge.from, edge.to, edge.i
            )
            .expect("write to string");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct NodeDoc<'a> {
            mp: &'a Multipartition,
            wt: &'a AffineWeight,
            eps: &'a [i64],
            phi: &'a [i64],
        }
        #[derive(Serialize)]
        struct EdgeDoc<'a> {
            from: &'a Multipartition,
            i: usize,
            to: &'a Multipartition,
        }
        #[derive(Serialize)]
        struct GraphDoc<'a> {
            nodes: Vec<NodeDoc<'a>>,
            edges: Vec<EdgeDoc<'a>>,
            boundary: Vec<EdgeDoc<'a>>,
        }
        fn edge_docs(edges: &[Edge]) -> Vec<EdgeDoc<'_>> {
            edges
                .iter()
                .map(|e| EdgeDoc {
                    from: &e.from,
                    i: e.i,
                    to: &e.to,
                })
                .collect()
        }
        let doc = GraphDoc {
            nodes: self
                .nodes
                .iter()
                .map(|n| NodeDoc {
                    mp: &n.mp,
                    wt: &n.wt,
                    eps: &n.eps,
                    phi: &n.phi,
                })
                .collect(),
            edges: edge_docs(&self.edges),
            boundary: edge_docs(&self.boundary),
        };
        serde_json::to_string(&doc).expect("graphs always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(text: &str) -> Multipartition {
        Multipartition::parse(text).unwrap()
    }

    fn charge(e: usize, s: &[i64]) -> Multicharge {
        Multicharge::new(e, s.to_vec()).unwrap()
    }

    #[test]
    fn signature_examples() {
        let c = charge(2, &[0]);
        let empty = signature(0, &mp("[[]]"), &c, BoxOrder::Default);
        assert_eq!(
            (empty.word().as_str(), empty.epsilon, empty.phi),
            ("+", 0, 1)
        );

        let one = signature(1, &mp("[[1]]"), &c, BoxOrder::Default);
        assert_eq!((one.word().as_str(), one.epsilon, one.phi), ("++", 0, 2));

        let square = signature(0, &mp("[[2,2]]"), &c, BoxOrder::Default);
        assert_eq!(square.word(), "+-+");
        assert_eq!(square.reduced_word(), "+");
        assert_eq!((square.epsilon, square.phi), (0, 1));
        assert_eq!(square.good_addable, Some(BoxCoord::new(3, 1, 1)));
        assert_eq!(square.good_removable, None);
    }

    #[test]
    fn raising_examples() {
        let c = charge(2, &[0]);
        for i in 0..2 {
            assert_eq!(crystal_e(i, &mp("[[]]"), &c, BoxOrder::Default), None);
        }
        assert_eq!(
            crystal_e(0, &mp("[[1]]"), &c, BoxOrder::Default),
            Some(mp("[[]]"))
        );
        assert_eq!(
            crystal_e(1, &mp("[[2]]"), &c, BoxOrder::Default),
            Some(mp("[[1]]"))
        );
        assert_eq!(crystal_e(1, &mp("[[1,1]]"), &c, BoxOrder::Default), None);
        assert_eq!(
            crystal_e(1, &mp("[[1,1]]"), &c, BoxOrder::Mirror),
            Some(mp("[[1]]"))
        );
    }

    #[test]
    fn lowering_examples() {
        let c = charge(2, &[0]);
        assert_eq!(
            crystal_f(0, &mp("[[]]"), &c, BoxOrder::Default),
            Some(mp("[[1]]"))
        );
        assert_eq!(
            crystal_f(1, &mp("[[1]]"), &c, BoxOrder::Default),
            Some(mp("[[2]]"))
        );
        assert_eq!(
            crystal_f(1, &mp("[[1]]"), &c, BoxOrder::Mirror),
            Some(mp("[[1,1]]"))
        );
        assert_eq!(crystal_f(0, &mp("[[1]]"), &c, BoxOrder::Default), None);
    }

    #[test]
    fn graph_examples() {
        let g = build_graph(&charge(2, &[0]), 0, BoxOrder::Default);
        assert_eq!((g.nodes.len(), g.edges.len()), (1, 0));
        assert_eq!(g.boundary.len(), 1);

        let g = build_graph(&charge(2, &[0]), 2, BoxOrder::Default);
        let nodes: Vec<String> = g.nodes.iter().map(|n| n.mp.format()).collect();
        assert_eq!(nodes, vec!["[[]]", "[[1]]", "[[1,1]]", "[[2]]"]);
        assert_eq!(
            g.edges,
            vec![
                Edge {
                    from: mp("[[]]"),
                    i: 0,
                    to: mp("[[1]]")
                },
                Edge {
                    from: mp("[[1]]"),
                    i: 1,
                    to: mp("[[2]]")
                },
            ]
        );

        let g = build_graph(&charge(2, &[0, 1]), 1, BoxOrder::Default);
        let from_empty: Vec<_> = g
            .edges
            .iter()
            .filter(|e| e.from == mp("[[],[]]"))
            .cloned()
            .collect();
        assert_eq!(
            from_empty,
            vec![
                Edge {
                    from: mp("[[],[]]"),
                    i: 0,
                    to: mp("[[1],[]]")
                },
                Edge {
                    from: mp("[[],[]]"),
                    i: 1,
                    to: mp("[[],[1]]")
                },
            ]
        );
    }

    #[test]
    fn highest_weight_examples() {
        let c = charge(2, &[0]);
        let g = build_graph(&c, 2, BoxOrder::Default);
        let hw = g.hw_elements();
        let at_rank = |n: usize| -> Vec<Multipartition> {
            hw.iter()
                .filter(|((r, _), _)| *r == n)
                .flat_map(|(_, v)| v.clone())
                .collect()
        };
        assert_eq!(at_rank(0), vec![mp("[[]]")]);
        assert!(at_rank(1).is_empty());
        assert_eq!(at_rank(2), vec![mp("[[1,1]]")]);
        let mirrored = build_graph(&c, 2, BoxOrder::Mirror).hw_elements();
        assert_eq!(
            mirrored
                .values()
                .flatten()
                .filter(|m| m.rank() == 2)
                .count(),
            1
        );
        assert!(mirrored.values().flatten().any(|m| *m == mp("[[2]]")));
    }

    #[test]
    fn exports_are_well_formed() {
        let g = build_graph(&charge(2, &[0]), 1, BoxOrder::Default);
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("\"[[]]\" -> \"[[1]]\" [label=\"0\"];"));
        let json: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
        assert_eq!(json["nodes"].as_array().unwrap().len(), 2);
        assert_eq!(json["edges"][0]["i"], 0);
        assert_eq!(json["nodes"][1]["wt"]["lambda"], serde_json::json!([-1, 2]));
        assert_eq!(json["boundary"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn order_names() {
        assert_eq!("mirror".parse::<BoxOrder>().unwrap(), BoxOrder::Mirror);
        assert!("sideways".parse::<BoxOrder>().is_err());
    }
}
