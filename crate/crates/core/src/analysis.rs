//! Checkers for crystal structures and perfect bases.
//!
//! * [`check_crystal_axioms`] validates a built [`CrystalGraph`] from its
//!   stored data alone, so a corrupted graph is caught.
//! * [`check_perfect_basis`] tests a basis of a module with partial crystal
//!   maps against the perfect-basis conditions. It works through the
//!   [`PerfectBasisModel`] trait; [`FockModel`] is the multipartition basis of
//!   the Fock space and [`Sl2Doublet`] a two-element toy.
//! * [`compare_components`] compares the number of crystal highest-weight
//!   vertices with the dimension of the primitive space, slice by slice.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{BigRational, One, Zero};

use crate::crystal::{build_graph, crystal_e, crystal_f, BoxOrder, CrystalGraph};
use crate::fock::{apply_e, depth_with, primitive_dimensions, Depth, FockVector, LinComb};
use crate::linalg::format_rational;
use crate::multipartition::{enumerate_up_to, Multicharge, Multipartition};
use crate::report::{AxiomCheck, AxiomReport, Witness};
use crate::weight::{pair_coroot, simple_root, AffineWeight};

pub const WEIGHT_PAIRING: &str = "crystal.weight_pairing";
pub const RAISE_STEP: &str = "crystal.raise_step";
pub const LOWER_STEP: &str = "crystal.lower_step";
pub const MUTUAL_INVERSE: &str = "crystal.mutual_inverse";
pub const MINUS_INFINITY: &str = "crystal.minus_infinity";

pub const PERFECT_MUTUAL_INVERSE: &str = "perfect.mutual_inverse";
pub const PERFECT_NONZERO_IFF: &str = "perfect.nonzero_iff";
pub const PERFECT_LEADING_TERM: &str = "perfect.leading_term";
pub const PERFECT_SUPPORT: &str = "perfect.support";

pub const COMPONENT_COUNT: &str = "components.count";

fn stats(g: &CrystalGraph, mp: &Multipartition, i: usize) -> Option<(AffineWeight, i64, i64)> {
    g.node(mp).map(|n| (n.wt.clone(), n.eps[i], n.phi[i]))
}

fn describe(w: &AffineWeight, eps: i64, phi: i64) -> String {
    format!("wt={w} eps={eps} phi={phi}")
}

/// Checks every crystal axiom on every vertex and residue of `g`, using only
/// the stored weights, statistics, raising maps and arrows.
pub fn check_crystal_axioms(g: &CrystalGraph) -> AxiomReport {
    let e = g.charge.e();
    let mut pairing = Vec::new();
    let mut raise_step = Vec::new();
    let mut lower_step = Vec::new();
    let mut inverse = Vec::new();

    let mut out_arrows: BTreeMap<(&Multipartition, usize), Vec<&Multipartition>> = BTreeMap::new();
    let mut in_arrows: BTreeMap<(&Multipartition, usize), Vec<&Multipartition>> = BTreeMap::new();
    for edge in &g.edges {
        out_arrows
            .entry((&edge.from, edge.i))
            .or_default()
            .push(&edge.to);
        in_arrows
            .entry((&edge.to, edge.i))
            .or_default()
            .push(&edge.from);
    }
    for edge in &g.boundary {
        out_arrows
            .entry((&edge.from, edge.i))
            .or_default()
            .push(&edge.to);
    }

    for node in &g.nodes {
        let name = node.mp.format();
        for i in 0..e {
            let expected_phi = node.eps[i] + pair_coroot(i, &node.wt);
            if node.phi[i] != expected_phi {
                pairing.push(Witness::new(
                    &name,
                    Some(i),
                    format!("phi={}", node.phi[i]),
                    format!("phi={expected_phi}"),
                ));
            }

            if let Some(up) = &node.raise[i] {
                let expected_wt = &node.wt + &simple_root(i, e);
                let expected = describe(&expected_wt, node.eps[i] - 1, node.phi[i] + 1);
                match stats(g, up, i) {
                    Some((w, eps, phi)) => {
                        let observed = describe(&w, eps, phi);
                        if observed != expected {
                            raise_step.push(Witness::new(
                                &name,
                                Some(i),
                                format!("e~ -> {up}: {observed}"),
                                expected,
                            ));
                        }
                    }
                    None => raise_step.push(Witness::new(
                        &name,
                        Some(i),
                        format!("e~ -> {up} outside graph"),
                        expected,
                    )),
                }
                let forward = out_arrows.get(&(up, i)).cloned().unwrap_or_default();
                if forward != [&node.mp] {
                    inverse.push(Witness::new(
                        &name,
                        Some(i),
                        format!("e~ -> {up} but f~({up}) -> {}", list(&forward)),
                        format!("f~({up}) -> {name}"),
                    ));
                }
            }

            let targets = out_arrows.get(&(&node.mp, i)).cloned().unwrap_or_default();
            if targets.len() > 1 {
                inverse.push(Witness::new(
                    &name,
                    Some(i),
                    format!("{} outgoing arrows", targets.len()),
                    "at most 1",
                ));
            }
            let sources = in_arrows.get(&(&node.mp, i)).cloned().unwrap_or_default();
            if sources.len() > 1 {
                inverse.push(Witness::new(
                    &name,
                    Some(i),
                    format!("{} incoming arrows", sources.len()),
                    "at most 1",
                ));
            }
        }
    }

    for edge in &g.edges {
        let name = edge.from.format();
        let i = edge.i;
        let Some((w, eps, phi)) = stats(g, &edge.from, i) else {
            lower_step.push(Witness::new(
                &name,
                Some(i),
                "arrow source outside graph",
                "a vertex",
            ));
            continue;
        };
        let expected = describe(&(&w - &simple_root(i, e)), eps + 1, phi - 1);
        match stats(g, &edge.to, i) {
            Some((w2, eps2, phi2)) => {
                let observed = describe(&w2, eps2, phi2);
                if observed != expected {
                    lower_step.push(Witness::new(
                        &name,
                        Some(i),
                        format!("f~ -> {}: {observed}", edge.to),
                        expected,
                    ));
                }
            }
            None => lower_step.push(Witness::new(
                &name,
                Some(i),
                format!("f~ -> {} outside graph", edge.to),
                expected,
            )),
        }
        let back = g.node(&edge.to).and_then(|n| n.raise[i].as_ref());
        if back != Some(&edge.from) {
            inverse.push(Witness::new(
                &name,
                Some(i),
                format!(
                    "f~ -> {} but e~({}) = {}",
                    edge.to,
                    edge.to,
                    back.map_or("none".into(), |b| b.format())
                ),
                format!("e~({}) = {name}", edge.to),
            ));
        }
    }

    // phi_i = -inf would force both crystal operators to vanish. On a
    // normal crystal the statistics are finite string lengths, so a negative
    // or missing entry is the only way this clause can be violated.
    let mut minus_infinity = Vec::new();
    for node in &g.nodes {
        for i in 0..e {
            let (eps, phi) = (node.eps.get(i), node.phi.get(i));
            if !matches!((eps, phi), (Some(a), Some(b)) if *a >= 0 && *b >= 0) {
                minus_infinity.push(Witness::new(
                    node.mp.format(),
                    Some(i),
                    format!("eps={eps:?} phi={phi:?}"),
                    "finite string lengths",
                ));
            }
        }
    }

    let mut report = AxiomReport::new();
    report.push(AxiomCheck::from_witnesses(WEIGHT_PAIRING, pairing));
    report.push(AxiomCheck::from_witnesses(RAISE_STEP, raise_step));
    report.push(AxiomCheck::from_witnesses(LOWER_STEP, lower_step));
    report.push(AxiomCheck::from_witnesses(MUTUAL_INVERSE, inverse));
    report.push(AxiomCheck::from_witnesses(MINUS_INFINITY, minus_infinity));
    report
}

fn list(mps: &[&Multipartition]) -> String {
    if mps.is_empty() {
        return "none".into();
    }
    mps.iter().map(|m| m.format()).collect::<Vec<_>>().join("|")
}

/// A weight basis of a module with an action of the `e_i` and candidate
/// crystal maps on the basis.
pub trait PerfectBasisModel {
    type Elem: Ord + Clone + fmt::Display;

    fn residues(&self) -> usize;

    /// Basis elements on which the conditions are checked.
    fn basis(&self) -> Vec<Self::Elem>;

    fn apply_e(&self, i: usize, v: &LinComb<Self::Elem>) -> LinComb<Self::Elem>;

    fn crystal_e(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;

    fn crystal_f(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;

    fn depth(&self, i: usize, v: &LinComb<Self::Elem>) -> Depth {
        depth_with(v, |w| self.apply_e(i, w))
    }
}

/// The multipartition basis of the Fock space up to a rank bound.
#[derive(Clone, Debug)]
pub struct FockModel {
    pub charge: Multicharge,
    pub max_rank: usize,
    pub order: BoxOrder,
}

impl PerfectBasisModel for FockModel {
    type Elem = Multipartition;

    fn residues(&self) -> usize {
        self.charge.e()
    }

    fn basis(&self) -> Vec<Multipartition> {
        enumerate_up_to(self.max_rank, self.charge.level())
            .into_iter()
            .flatten()
            .collect()
    }

    fn apply_e(&self, i: usize, v: &FockVector) -> FockVector {
        apply_e(i, v, &self.charge)
    }

    fn crystal_e(&self, i: usize, b: &Multipartition) -> Option<Multipartition> {
        crystal_e(i, b, &self.charge, self.order)
    }

    fn crystal_f(&self, i: usize, b: &Multipartition) -> Option<Multipartition> {
        crystal_f(i, b, &self.charge, self.order)
    }
}

/// Two-dimensional `sl_2` module with basis `low`, `high`, where
/// `e(low) = high`, `e(high) = 0`, and the crystal maps follow `e` exactly.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sl2Doublet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum DoubletElem {
    Low,
    High,
}

impl fmt::Display for DoubletElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DoubletElem::Low => "low",
            DoubletElem::High => "high",
        })
    }
}

impl PerfectBasisModel for Sl2Doublet {
    type Elem = DoubletElem;

    fn residues(&self) -> usize {
        1
    }

    fn basis(&self) -> Vec<DoubletElem> {
        vec![DoubletElem::Low, DoubletElem::High]
    }

    fn apply_e(&self, _i: usize, v: &LinComb<DoubletElem>) -> LinComb<DoubletElem> {
        v.map_linear(|b| match b {
            DoubletElem::Low => LinComb::basis(DoubletElem::High),
            DoubletElem::High => LinComb::zero(),
        })
    }

    fn crystal_e(&self, _i: usize, b: &DoubletElem) -> Option<DoubletElem> {
        (*b == DoubletElem::Low).then_some(DoubletElem::High)
    }

    fn crystal_f(&self, _i: usize, b: &DoubletElem) -> Option<DoubletElem> {
        (*b == DoubletElem::High).then_some(DoubletElem::Low)
    }
}

/// The unique scalar `c` with `e_i^L b = c * e_i^(L-1) e~_i b` where
/// `L = l_i(b)`; `None` when `e~_i b` is undefined or no such nonzero scalar
/// exists.
pub fn leading_scalar<M: PerfectBasisModel>(
    model: &M,
    i: usize,
    b: &M::Elem,
) -> Option<BigRational> {
    let raised = model.crystal_e(i, b)?;
    let v = LinComb::basis(b.clone());
    let Depth::Finite(l) = model.depth(i, &v) else {
        return None;
    };
    if l == 0 {
        return None;
    }
    let mut top = v;
    for _ in 0..l {
        top = model.apply_e(i, &top);
    }
    let mut reference = LinComb::basis(raised);
    for _ in 0..l - 1 {
        reference = model.apply_e(i, &reference);
    }
    let (key, ref_coeff) = reference.iter().next()?;
    let scalar = top.coeff(key) / ref_coeff;
    (!scalar.is_zero() && top == reference.scale(&scalar)).then_some(scalar)
}

/// Length of the `e~_i`-string starting at `b`.
fn raise_string_length<M: PerfectBasisModel>(model: &M, i: usize, b: &M::Elem) -> usize {
    let mut k = 0;
    let mut current = b.clone();
    while let Some(next) = model.crystal_e(i, &current) {
        current = next;
        k += 1;
    }
    k
}

/// Checks each perfect-basis condition separately. The condition
/// `e~_i b != 0 <=> e_i b != 0` is reported as informational.
pub fn check_perfect_basis_model<M: PerfectBasisModel>(model: &M) -> AxiomReport {
    let mut inverse = Vec::new();
    let mut nonzero = Vec::new();
    let mut leading = Vec::new();
    let mut support = Vec::new();
    for b in model.basis() {
        let name = b.to_string();
        let v = LinComb::basis(b.clone());
        for i in 0..model.residues() {
            let up = model.crystal_e(i, &b);
            let down = model.crystal_f(i, &b);
            if let Some(d) = &down {
                if model.crystal_e(i, d).as_ref() != Some(&b) {
                    inverse.push(Witness::new(
                        &name,
                        Some(i),
                        format!("f~ -> {d}, e~({d}) differs"),
                        format!("e~({d}) = {name}"),
                    ));
                }
            }
            if let Some(u) = &up {
                if model.crystal_f(i, u).as_ref() != Some(&b) {
                    inverse.push(Witness::new(
                        &name,
                        Some(i),
                        format!("e~ -> {u}, f~({u}) differs"),
                        format!("f~({u}) = {name}"),
                    ));
                }
            }

            let image = model.apply_e(i, &v);
            if up.is_some() != !image.is_zero() {
                nonzero.push(Witness::new(
                    &name,
                    Some(i),
                    format!(
                        "e~ {}, e {}",
                        defined(up.is_some()),
                        if image.is_zero() { "= 0" } else { "!= 0" }
                    ),
                    "both zero or both nonzero",
                ));
            }

            let Some(u) = up else { continue };
            let coeff = image.coeff(&u);
            let Depth::Finite(l) = model.depth(i, &v) else {
                unreachable!("basis vectors are nonzero")
            };
            let eps = raise_string_length(model, i, &b);
            if coeff < BigRational::one() || eps > l {
                support.push(Witness::new(
                    &name,
                    Some(i),
                    format!(
                        "coeff of e~ = {}, eps = {eps}, depth = {l}",
                        format_rational(&coeff)
                    ),
                    "coeff >= 1 and eps <= depth",
                ));
            }
            match leading_scalar(model, i, &b) {
                Some(scalar) => {
                    let residual = image.sub(&LinComb::basis(u).scale(&scalar));
                    let d = model.depth(i, &residual);
                    if !d.below(l as i64 - 1) {
                        leading.push(Witness::new(
                            &name,
                            Some(i),
                            format!(
                                "depth of residual {d} with scalar {}",
                                format_rational(&scalar)
                            ),
                            format!("< {}", l as i64 - 1),
                        ));
                    }
                }
                None => leading.push(Witness::new(
                    &name,
                    Some(i),
                    "no nonzero matching scalar",
                    "e_i b in C* e~_i b + V_i^{<l-1}",
                )),
            }
        }
    }
    let mut report = AxiomReport::new();
    report.push(AxiomCheck::from_witnesses(PERFECT_MUTUAL_INVERSE, inverse));
    report.push(AxiomCheck::from_witnesses(PERFECT_NONZERO_IFF, nonzero).informational());
    report.push(AxiomCheck::from_witnesses(PERFECT_LEADING_TERM, leading));
    report.push(AxiomCheck::from_witnesses(PERFECT_SUPPORT, support));
    report
}

fn defined(yes: bool) -> &'static str {
    if yes {
        "defined"
    } else {
        "undefined"
    }
}

/// Perfect-basis conditions for the multipartition basis up to rank `max_rank`.
pub fn check_perfect_basis(c: &Multicharge, max_rank: usize, order: BoxOrder) -> AxiomReport {
    check_perfect_basis_model(&FockModel {
        charge: c.clone(),
        max_rank,
        order,
    })
}

/// Crystal highest-weight count against primitive dimension on one slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentRow {
    pub rank: usize,
    pub weight: AffineWeight,
    pub crystal_count: usize,
    pub kernel_dim: usize,
}

pub fn component_table(c: &Multicharge, max_rank: usize, order: BoxOrder) -> Vec<ComponentRow> {
    let graph = build_graph(c, max_rank, order);
    let hw = graph.hw_elements();
    let mut rows = Vec::new();
    for n in 0..=max_rank {
        let dims = primitive_dimensions(n, c);
        let weights: BTreeSet<&AffineWeight> = dims
            .keys()
            .chain(hw.keys().filter(|(r, _)| *r == n).map(|(_, w)| w))
            .collect();
        for w in weights {
            rows.push(ComponentRow {
                rank: n,
                weight: w.clone(),
                crystal_count: hw.get(&(n, w.clone())).map_or(0, Vec::len),
                kernel_dim: dims.get(w).copied().unwrap_or(0),
            });
        }
    }
    rows
}

/// Number of highest-weight crystal vertices equals the primitive dimension
/// on every (rank, weight) slice up to `max_rank`.
pub fn compare_components(c: &Multicharge, max_rank: usize, order: BoxOrder) -> AxiomReport {
    let witnesses = component_table(c, max_rank, order)
        .into_iter()
        .filter(|row| row.crystal_count != row.kernel_dim)
        .map(|row| {
            Witness::new(
                format!("rank {} weight {}", row.rank, row.weight),
                None,
                format!("{} highest-weight vertices", row.crystal_count),
                format!("kernel dimension {}", row.kernel_dim),
            )
        })
        .collect();
    let mut report = AxiomReport::new();
    report.push(AxiomCheck::from_witnesses(COMPONENT_COUNT, witnesses));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::Edge;

    fn charge(e: usize, s: &[i64]) -> Multicharge {
        Multicharge::new(e, s.to_vec()).unwrap()
    }

    fn mp(text: &str) -> Multipartition {
        Multipartition::parse(text).unwrap()
    }

    #[test]
    fn built_graphs_pass() {
        assert!(
            check_crystal_axioms(&build_graph(&charge(2, &[0]), 0, BoxOrder::Default)).passed()
        );
        for order in BoxOrder::ALL {
            let report = check_crystal_axioms(&build_graph(&charge(2, &[0]), 6, order));
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn deleted_edge_is_flagged() {
        let mut g = build_graph(&charge(2, &[0]), 6, BoxOrder::Default);
        let removed = g.edges.remove(3);
        let report = check_crystal_axioms(&g);
        let check = report.get(MUTUAL_INVERSE).unwrap();
        assert!(!check.passed());
        assert!(check
            .witnesses
            .iter()
            .any(|w| w.element == removed.to.format()));
    }

    #[test]
    fn redirected_edge_is_flagged() {
        let mut g = build_graph(&charge(2, &[0]), 4, BoxOrder::Default);
        let Edge { from, i, to } = g.edges[1].clone();
        let other = g
            .nodes
            .iter()
            .map(|n| n.mp.clone())
            .find(|m| m.rank() == to.rank() && *m != to)
            .unwrap();
        g.edges[1] = Edge { from, i, to: other };
        assert!(!check_crystal_axioms(&g)
            .get(MUTUAL_INVERSE)
            .unwrap()
            .passed());
    }

    #[test]
    fn corrupted_statistics_are_flagged() {
        let mut g = build_graph(&charge(3, &[0, 1]), 3, BoxOrder::Default);
        g.node_mut(&mp("[[1],[]]")).unwrap().eps[0] += 1;
        let report = check_crystal_axioms(&g);
        assert!(!report.get(WEIGHT_PAIRING).unwrap().passed());
        assert!(
            !report.get(RAISE_STEP).unwrap().passed() || !report.get(LOWER_STEP).unwrap().passed()
        );
    }

    #[test]
    fn negative_statistics_are_flagged() {
        let mut g = build_graph(&charge(2, &[0]), 2, BoxOrder::Default);
        g.node_mut(&mp("[[2]]")).unwrap().phi[1] = -1;
        assert!(!check_crystal_axioms(&g)
            .get(MINUS_INFINITY)
            .unwrap()
            .passed());
    }

    #[test]
    fn perfect_basis_small_rank() {
        let c = charge(2, &[0]);
        let report = check_perfect_basis(&c, 5, BoxOrder::Default);
        assert!(report.get(PERFECT_MUTUAL_INVERSE).unwrap().passed());
        assert!(report.get(PERFECT_SUPPORT).unwrap().passed());
        assert!(report.get(PERFECT_LEADING_TERM).unwrap().passed());

        for (order, expected) in [(BoxOrder::Default, "[[1,1]]"), (BoxOrder::Mirror, "[[2]]")] {
            let report = check_perfect_basis(&c, 2, order);
            let check = report.get(PERFECT_NONZERO_IFF).unwrap();
            assert!(check.informational);
            let elements: Vec<&str> = check.witnesses.iter().map(|w| w.element.as_str()).collect();
            assert_eq!(elements, vec![expected]);
            assert!(report.passed());
        }
    }

    #[test]
    fn leading_scalar_counts_removable_boxes() {
        let c = charge(2, &[0]);
        let model = FockModel {
            charge: c,
            max_rank: 3,
            order: BoxOrder::Default,
        };
        assert_eq!(
            leading_scalar(&model, 1, &mp("[[2,1]]")),
            Some(BigRational::from_integer(2.into()))
        );
        assert_eq!(
            leading_scalar(&model, 1, &mp("[[2]]")),
            Some(BigRational::one())
        );
        assert_eq!(leading_scalar(&model, 1, &mp("[[1,1]]")), None);
    }

    #[test]
    fn doublet_is_perfect() {
        let report = check_perfect_basis_model(&Sl2Doublet);
        assert!(report.checks.iter().all(AxiomCheck::passed), "{report:?}");
    }

    #[test]
    fn component_examples() {
        let c = charge(2, &[0]);
        let rows = component_table(&c, 2, BoxOrder::Default);
        let rank0: Vec<_> = rows.iter().filter(|r| r.rank == 0).collect();
        assert_eq!(rank0.len(), 1);
        assert_eq!((rank0[0].crystal_count, rank0[0].kernel_dim), (1, 1));
        let rank2: Vec<_> = rows.iter().filter(|r| r.rank == 2).collect();
        assert_eq!(rank2.iter().map(|r| r.crystal_count).sum::<usize>(), 1);
        assert_eq!(rank2.iter().map(|r| r.kernel_dim).sum::<usize>(), 1);
        assert!(compare_components(&charge(2, &[0, 1]), 3, BoxOrder::Default).passed());
    }
}
