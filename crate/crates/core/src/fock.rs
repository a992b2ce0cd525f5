//! The level-`l` Fock space as a module over `sl_e^`.
//!
//! Vectors are finite exact-rational combinations of multipartitions. The
//! Chevalley generators act by
//!
//! * `e_i(lambda)`: sum of all `mu` obtained by removing one box of residue `i`,
//! * `f_i(lambda)`: sum of all `mu` obtained by adding one box of residue `i`,
//! * `h_i(lambda) = <alpha_i^vee, wt(lambda)> lambda`.
//!
//! Every generator moves the rank by at most one, so nothing here truncates:
//! results are always exact. [`FockSpace`] adds an explicit rank ceiling for
//! callers that want one enforced.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, kernel, parse_rational, Matrix, Rationals};
use crate::multipartition::{enumerate, enumerate_up_to, Multicharge, Multipartition};
use crate::report::{AxiomCheck, AxiomReport, Witness};
use crate::weight::{cartan_entry, pair_coroot, simple_root, wt, AffineWeight};

/// Truncation rank used when a caller does not pick one.
pub const DEFAULT_MAX_RANK: usize = 8;

/// A finite linear combination with exact rational coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, BigRational>,
}

pub type FockVector = LinComb<Multipartition>;

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, BigRational::one())
    }

    pub fn term(k: K, coeff: BigRational) -> Self {
        let mut v = Self::zero();
        v.add_term(k, coeff);
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, BigRational)>) -> Self {
        let mut v = Self::zero();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, k: K, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(k.clone())
            .or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> BigRational {
        self.terms.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigRational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    /// Linear extension of a map defined on basis elements.
    pub fn map_linear(&self, mut image: impl FnMut(&K) -> LinComb<K>) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            for (k2, c2) in image(k).terms {
                out.add_term(k2, c * c2);
            }
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                if c.is_one() {
                    k.to_string()
                } else {
                    format!("{}*{}", format_rational(c), k)
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<K: Ord + fmt::Display> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    coeff: String,
    mp: Multipartition,
}

impl FockVector {
    /// Terms in canonical (serialized lexicographic) order.
    pub fn canonical_terms(&self) -> Vec<(&Multipartition, &BigRational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_cached_key(|(k, _)| k.format());
        terms
    }

    pub fn to_json(&self) -> String {
        let docs: Vec<TermDoc> = self
            .canonical_terms()
            .into_iter()
            .map(|(mp, c)| TermDoc {
                coeff: format_rational(c),
                mp: mp.clone(),
            })
            .collect();
        serde_json::to_string(&docs).expect("vectors always serialize")
    }

    /// Reads `[{"coeff": "p/q", "mp": [[..],..]}, ..]`; a bare multipartition
    /// document is read as that basis vector.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|err| Error::Parse(err.to_string()))?;
        let is_term_list = value
            .as_array()
            .is_some_and(|a| a.iter().all(|x| x.is_object()));
        if !is_term_list {
            return Multipartition::parse(text).map(FockVector::basis);
        }
        let docs: Vec<TermDoc> =
            serde_json::from_value(value).map_err(|err| Error::Parse(err.to_string()))?;
        let mut v = FockVector::zero();
        let mut level = None;
        for doc in docs {
            if *level.get_or_insert(doc.mp.level()) != doc.mp.level() {
                return Err(Error::LevelMismatch {
                    expected: level.unwrap(),
                    found: doc.mp.level(),
                });
            }
            let coeff = parse_rational(&doc.coeff)
                .ok_or_else(|| Error::Parse(format!("bad coefficient {:?}", doc.coeff)))?;
            v.add_term(doc.mp, coeff);
        }
        Ok(v)
    }

    pub fn max_rank(&self) -> Option<usize> {
        self.keys().map(Multipartition::rank).max()
    }
}

fn e_basis(i: usize, mp: &Multipartition, c: &Multicharge) -> FockVector {
    let mut out = FockVector::zero();
    for b in mp.removable_boxes(c, Some(i)) {
        out.add_term(mp.remove_box(&b).expect("removable"), BigRational::one());
    }
    out
}

fn f_basis(i: usize, mp: &Multipartition, c: &Multicharge) -> FockVector {
    let mut out = FockVector::zero();
    for b in mp.addable_boxes(c, Some(i)) {
        out.add_term(mp.add_box(&b).expect("addable"), BigRational::one());
    }
    out
}

pub fn apply_e(i: usize, v: &FockVector, c: &Multicharge) -> FockVector {
    v.map_linear(|mp| e_basis(i, mp, c))
}

pub fn apply_f(i: usize, v: &FockVector, c: &Multicharge) -> FockVector {
    v.map_linear(|mp| f_basis(i, mp, c))
}

pub fn apply_h(i: usize, v: &FockVector, c: &Multicharge) -> FockVector {
    v.map_linear(|mp| FockVector::term(mp.clone(), int(pair_coroot(i, &wt(mp, c)))))
}

/// `e_i^k v`.
pub fn apply_e_pow(i: usize, k: usize, v: &FockVector, c: &Multicharge) -> FockVector {
    (0..k).fold(v.clone(), |acc, _| apply_e(i, &acc, c))
}

pub fn apply_f_pow(i: usize, k: usize, v: &FockVector, c: &Multicharge) -> FockVector {
    (0..k).fold(v.clone(), |acc, _| apply_f(i, &acc, c))
}

/// `max { k : e_i^k v != 0 }`, or minus infinity for the zero vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Depth {
    NegInfinity,
    Finite(usize),
}

impl Depth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Depth::NegInfinity => None,
            Depth::Finite(k) => Some(k),
        }
    }

    /// Whether `self < bound` for an integer bound.
    pub fn below(self, bound: i64) -> bool {
        match self {
            Depth::NegInfinity => true,
            Depth::Finite(k) => (k as i64) < bound,
        }
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::NegInfinity => f.write_str("-inf"),
            Depth::Finite(k) => write!(f, "{k}"),
        }
    }
}

/// Depth of `v` under repeated `e`-application; `apply` must strictly lower
/// some grading so that the loop terminates.
pub fn depth_with<K: Ord + Clone>(
    v: &LinComb<K>,
    mut apply: impl FnMut(&LinComb<K>) -> LinComb<K>,
) -> Depth {
    if v.is_zero() {
        return Depth::NegInfinity;
    }
    let mut k = 0;
    let mut current = apply(v);
    while !current.is_zero() {
        k += 1;
        current = apply(&current);
    }
    Depth::Finite(k)
}

pub fn depth(i: usize, v: &FockVector, c: &Multicharge) -> Depth {
    depth_with(v, |w| apply_e(i, w, c))
}

/// Membership in `V_i^{< bound}`.
pub fn in_filtration(i: usize, bound: i64, v: &FockVector, c: &Multicharge) -> bool {
    depth(i, v, c).below(bound)
}

/// Matrix of `v -> (e_0 v, .., e_{e-1} v)` from the span of `columns` into rank one lower.
fn lowering_matrix(columns: &[Multipartition], c: &Multicharge) -> Matrix<BigRational> {
    let images: Vec<Vec<FockVector>> = columns
        .iter()
        .map(|mp| (0..c.e()).map(|i| e_basis(i, mp, c)).collect())
        .collect();
    let mut row_index: BTreeMap<(usize, Multipartition), usize> = BTreeMap::new();
    for per_i in &images {
        for (i, v) in per_i.iter().enumerate() {
            for k in v.keys() {
                let next = row_index.len();
                row_index.entry((i, k.clone())).or_insert(next);
            }
        }
    }
    let mut m = Matrix::zeros(&Rationals, row_index.len(), columns.len());
    for (col, per_i) in images.iter().enumerate() {
        for (i, v) in per_i.iter().enumerate() {
            for (k, coeff) in v.iter() {
                m.set(row_index[&(i, k.clone())], col, coeff.clone());
            }
        }
    }
    m
}

fn kernel_vectors(columns: &[Multipartition], c: &Multicharge) -> Vec<FockVector> {
    if columns.is_empty() {
        return Vec::new();
    }
    let m = lowering_matrix(columns, c);
    kernel(&Rationals, &m)
        .into_iter()
        .map(|coeffs| FockVector::from_terms(columns.iter().cloned().zip(coeffs)))
        .collect()
}

/// Basis of the primitive vectors `cap_i ker(e_i)` of rank `n`.
pub fn primitive_basis(n: usize, c: &Multicharge) -> Vec<FockVector> {
    kernel_vectors(&enumerate(n, c.level()), c)
}

/// Multipartitions of rank `n` grouped by weight.
pub fn weight_slices(n: usize, c: &Multicharge) -> BTreeMap<AffineWeight, Vec<Multipartition>> {
    let mut slices: BTreeMap<AffineWeight, Vec<Multipartition>> = BTreeMap::new();
    for mp in enumerate(n, c.level()) {
        slices.entry(wt(&mp, c)).or_default().push(mp);
    }
    slices
}

/// Basis of primitive vectors of rank `n` and weight `weight`.
pub fn primitive_basis_for_weight(
    n: usize,
    weight: &AffineWeight,
    c: &Multicharge,
) -> Vec<FockVector> {
    let slice: Vec<Multipartition> = enumerate(n, c.level())
        .into_iter()
        .filter(|mp| &wt(mp, c) == weight)
        .collect();
    kernel_vectors(&slice, c)
}

/// Dimension of the primitive space on each weight slice of rank `n`.
pub fn primitive_dimensions(n: usize, c: &Multicharge) -> BTreeMap<AffineWeight, usize> {
    weight_slices(n, c)
        .into_iter()
        .map(|(w, slice)| {
            let m = lowering_matrix(&slice, c);
            (w, slice.len() - crate::linalg::rank(&Rationals, &m))
        })
        .collect()
}

/// Checks `sum_i e_i(lambda) = sum over all one-box removals` and the
/// corresponding statement for `f`.
pub fn verify_pieri(mp: &Multipartition, c: &Multicharge) -> bool {
    let mut all_removals = FockVector::zero();
    for b in mp.removable_boxes(c, None) {
        all_removals.add_term(mp.remove_box(&b).expect("removable"), BigRational::one());
    }
    let mut all_additions = FockVector::zero();
    for b in mp.addable_boxes(c, None) {
        all_additions.add_term(mp.add_box(&b).expect("addable"), BigRational::one());
    }
    let basis = FockVector::basis(mp.clone());
    let e_sum = (0..c.e()).fold(FockVector::zero(), |acc, i| acc.add(&apply_e(i, &basis, c)));
    let f_sum = (0..c.e()).fold(FockVector::zero(), |acc, i| acc.add(&apply_f(i, &basis, c)));
    e_sum == all_removals && f_sum == all_additions
}

/// A view of the Fock space with an enforced rank ceiling.
#[derive(Clone, Debug)]
pub struct FockSpace {
    charge: Multicharge,
    max_rank: usize,
}

impl FockSpace {
    pub fn new(charge: Multicharge) -> Self {
        FockSpace {
            charge,
            max_rank: DEFAULT_MAX_RANK,
        }
    }

    pub fn with_max_rank(charge: Multicharge, max_rank: usize) -> Self {
        FockSpace { charge, max_rank }
    }

    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    pub fn max_rank(&self) -> usize {
        self.max_rank
    }

    pub fn e(&self, i: usize, v: &FockVector) -> Result<FockVector> {
        self.charge.check_residue(i)?;
        Ok(apply_e(i, v, &self.charge))
    }

    pub fn h(&self, i: usize, v: &FockVector) -> Result<FockVector> {
        self.charge.check_residue(i)?;
        Ok(apply_h(i, v, &self.charge))
    }

    /// Refuses to produce terms above the rank ceiling.
    pub fn f(&self, i: usize, v: &FockVector) -> Result<FockVector> {
        self.charge.check_residue(i)?;
        if let Some(r) = v.max_rank() {
            if r + 1 > self.max_rank {
                return Err(Error::ResourceBound(format!(
                    "f_{i} would reach rank {} above the ceiling {}",
                    r + 1,
                    self.max_rank
                )));
            }
        }
        Ok(apply_f(i, v, &self.charge))
    }

    /// All basis vectors up to the ceiling.
    pub fn basis(&self) -> Vec<Multipartition> {
        enumerate_up_to(self.max_rank, self.charge.level())
            .into_iter()
            .flatten()
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, t| acc * (n - t) as i64 / (t + 1) as i64)
}

/// `(ad x)^m (y) = sum_k (-1)^k C(m,k) x^(m-k) y x^k` applied to `v`.
fn ad_power(
    m: usize,
    v: &FockVector,
    x: &dyn Fn(&FockVector) -> FockVector,
    y: &dyn Fn(&FockVector) -> FockVector,
) -> FockVector {
    let mut total = FockVector::zero();
    let mut right = v.clone();
    for k in 0..=m {
        let mut term = y(&right);
        for _ in 0..m - k {
            term = x(&term);
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        total = total.add(&term.scale(&int(sign * binomial(m, k))));
        right = x(&right);
    }
    total
}

/// `[e_i, f_j] = delta_ij h_i` on every basis vector of rank `<= max_rank`.
pub fn check_commutators(c: &Multicharge, max_rank: usize) -> AxiomCheck {
    let mut witnesses = Vec::new();
    for mp in enumerate_up_to(max_rank, c.level()).into_iter().flatten() {
        let v = FockVector::basis(mp.clone());
        for i in 0..c.e() {
            for j in 0..c.e() {
                let lhs = apply_e(i, &apply_f(j, &v, c), c).sub(&apply_f(j, &apply_e(i, &v, c), c));
                let rhs = if i == j {
                    apply_h(i, &v, c)
                } else {
                    FockVector::zero()
                };
                if lhs != rhs {
                    witnesses.push(Witness::new(
                        mp.format(),
                        Some(i),
                        format!("[e_{i},f_{j}] = {lhs}"),
                        rhs.to_string(),
                    ));
                }
            }
        }
    }
    AxiomCheck::from_witnesses("fock.commutator", witnesses)
}

/// Serre relations `(ad e_i)^(1-a_ij) e_j = 0` and the `f` analogue.
pub fn check_serre(c: &Multicharge, max_rank: usize) -> AxiomCheck {
    let mut witnesses = Vec::new();
    let e = c.e();
    for mp in enumerate_up_to(max_rank, c.level()).into_iter().flatten() {
        let v = FockVector::basis(mp.clone());
        for i in 0..e {
            for j in (0..e).filter(|&j| j != i) {
                let m = (1 - cartan_entry(i, j, e)) as usize;
                let up = ad_power(m, &v, &|w| apply_e(i, w, c), &|w| apply_e(j, w, c));
                let down = ad_power(m, &v, &|w| apply_f(i, w, c), &|w| apply_f(j, w, c));
                for (name, image) in [("e", up), ("f", down)] {
                    if !image.is_zero() {
                        witnesses.push(Witness::new(
                            mp.format(),
                            Some(i),
                            format!("(ad {name}_{i})^{m} {name}_{j} = {image}"),
                            "0",
                        ));
                    }
                }
            }
        }
    }
    AxiomCheck::from_witnesses("fock.serre", witnesses)
}

/// Weight shifts, rank shifts, positivity and the Pieri sums on every basis
/// vector of rank `<= max_rank`.
pub fn check_module_structure(c: &Multicharge, max_rank: usize) -> AxiomReport {
    let mut weight_step = Vec::new();
    let mut rank_step = Vec::new();
    let mut positivity = Vec::new();
    let mut pieri = Vec::new();
    for mp in enumerate_up_to(max_rank, c.level()).into_iter().flatten() {
        let v = FockVector::basis(mp.clone());
        let w = wt(&mp, c);
        for i in 0..c.e() {
            let alpha = simple_root(i, c.e());
            for (name, image, target, rank) in [
                (
                    "e",
                    apply_e(i, &v, c),
                    &w + &alpha,
                    mp.rank().checked_sub(1),
                ),
                ("f", apply_f(i, &v, c), &w - &alpha, Some(mp.rank() + 1)),
            ] {
                for k in image.keys() {
                    if wt(k, c) != target {
                        weight_step.push(Witness::new(
                            mp.format(),
                            Some(i),
                            format!("{name}-term {k} of weight {}", wt(k, c)),
                            target.to_string(),
                        ));
                    }
                    if Some(k.rank()) != rank {
                        rank_step.push(Witness::new(
                            mp.format(),
                            Some(i),
                            k.format(),
                            format!("{rank:?}"),
                        ));
                    }
                }
                if !image.is_nonnegative() {
                    positivity.push(Witness::new(
                        mp.format(),
                        Some(i),
                        image.to_string(),
                        "nonnegative",
                    ));
                }
            }
            if let Depth::Finite(d) = depth(i, &v, c) {
                if d > mp.rank() {
                    rank_step.push(Witness::new(
                        mp.format(),
                        Some(i),
                        format!("depth {d}"),
                        "<= rank",
                    ));
                }
            }
        }
        if !verify_pieri(&mp, c) {
            pieri.push(Witness::new(
                mp.format(),
                None,
                "Pieri sums differ",
                "equal",
            ));
        }
    }
    let mut report = AxiomReport::new();
    report.push(AxiomCheck::from_witnesses("fock.weight_step", weight_step));
    report.push(AxiomCheck::from_witnesses("fock.rank_step", rank_step));
    report.push(AxiomCheck::from_witnesses("fock.positivity", positivity));
    report.push(AxiomCheck::from_witnesses("fock.pieri", pieri));
    report
}

/// Weights occurring among multipartitions of rank `n`.
pub fn weights_of_rank(n: usize, c: &Multicharge) -> BTreeSet<AffineWeight> {
    enumerate(n, c.level()).iter().map(|mp| wt(mp, c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(text: &str) -> Multipartition {
        Multipartition::parse(text).unwrap()
    }

    fn v(text: &str) -> FockVector {
        FockVector::basis(mp(text))
    }

    fn charge(e: usize, s: &[i64]) -> Multicharge {
        Multicharge::new(e, s.to_vec()).unwrap()
    }

    #[test]
    fn e_examples() {
        let c = charge(2, &[0]);
        assert_eq!(apply_e(0, &v("[[1]]"), &c), v("[[]]"));
        assert_eq!(apply_e(0, &v("[[2,2]]"), &c), v("[[2,1]]"));
        let sum = v("[[2]]").add(&v("[[1,1]]"));
        assert_eq!(apply_e(1, &sum, &c), v("[[1]]").scale(&int(2)));
        assert!(apply_e(0, &v("[[]]"), &c).is_zero());
    }

    #[test]
    fn f_examples() {
        let c = charge(2, &[0]);
        assert_eq!(apply_f(0, &v("[[]]"), &c), v("[[1]]"));
        assert_eq!(apply_f(1, &v("[[1]]"), &c), v("[[2]]").add(&v("[[1,1]]")));
        assert_eq!(
            apply_f(0, &v("[[],[]]"), &charge(2, &[0, 1])),
            v("[[1],[]]")
        );
    }

    #[test]
    fn h_examples() {
        assert_eq!(apply_h(0, &v("[[],[]]"), &charge(2, &[0, 1])), v("[[],[]]"));
        assert_eq!(
            apply_h(0, &v("[[1]]"), &charge(2, &[0])),
            v("[[1]]").scale(&int(-1))
        );
        assert!(apply_h(1, &FockVector::zero(), &charge(2, &[0])).is_zero());
    }

    #[test]
    fn depth_examples() {
        let c = charge(2, &[0]);
        assert_eq!(depth(0, &FockVector::zero(), &c), Depth::NegInfinity);
        assert_eq!(depth(0, &v("[[1]]"), &c), Depth::Finite(1));
        assert_eq!(depth(1, &v("[[2,2]]"), &c), Depth::Finite(0));
        assert_eq!(depth(1, &v("[[2,1]]"), &c), Depth::Finite(2));
    }

    #[test]
    fn filtration_examples() {
        let c = charge(2, &[0]);
        assert!(in_filtration(0, 0, &FockVector::zero(), &c));
        assert!(in_filtration(0, 2, &v("[[1]]"), &c));
        assert!(!in_filtration(0, 1, &v("[[1]]"), &c));
    }

    #[test]
    fn primitive_examples() {
        for c in [charge(2, &[0]), charge(3, &[0, 1])] {
            assert_eq!(
                primitive_basis(0, &c),
                vec![FockVector::basis(Multipartition::empty(c.level()))]
            );
        }
        let c = charge(2, &[0]);
        assert!(primitive_basis(1, &c).is_empty());
        let basis = primitive_basis(2, &c);
        assert_eq!(basis, vec![v("[[2]]").sub(&v("[[1,1]]"))]);
        for b in &basis {
            for i in 0..2 {
                assert!(apply_e(i, b, &c).is_zero());
            }
        }
    }

    #[test]
    fn primitive_dimensions_refine_rank() {
        let c = charge(2, &[0, 1]);
        for n in 0..5 {
            let by_weight: usize = primitive_dimensions(n, &c).values().sum();
            assert_eq!(by_weight, primitive_basis(n, &c).len());
        }
    }

    #[test]
    fn pieri_examples() {
        assert!(verify_pieri(&Multipartition::empty(1), &charge(2, &[0])));
        assert!(verify_pieri(&mp("[[2,1]]"), &charge(2, &[0])));
        assert!(verify_pieri(&mp("[[1],[1]]"), &charge(2, &[0, 1])));
    }

    #[test]
    fn relations_on_small_slices() {
        let c = charge(3, &[0, 1]);
        assert!(check_commutators(&c, 3).passed());
        assert!(check_serre(&c, 3).passed());
        assert!(check_module_structure(&c, 3).passed());
    }

    #[test]
    fn serre_for_e4_includes_commuting_pairs() {
        let c = charge(4, &[0]);
        assert!(check_serre(&c, 4).passed());
    }

    #[test]
    fn bounded_space_refuses_to_truncate() {
        let space = FockSpace::with_max_rank(charge(2, &[0]), 1);
        assert!(space.f(0, &v("[[]]")).is_ok());
        assert!(matches!(
            space.f(1, &v("[[1]]")),
            Err(Error::ResourceBound(_))
        ));
        assert!(matches!(
            space.e(2, &v("[[1]]")),
            Err(Error::InvalidResidue { .. })
        ));
        assert_eq!(space.basis().len(), 2);
    }

    #[test]
    fn json_round_trip() {
        let vec = v("[[2]]")
            .add(&v("[[1,1]]").scale(&BigRational::new(BigInt::from(-1), BigInt::from(2))));
        let text = vec.to_json();
        assert_eq!(
            text,
            r#"[{"coeff":"-1/2","mp":[[1,1]]},{"coeff":"1","mp":[[2]]}]"#
        );
        assert_eq!(FockVector::from_json(&text).unwrap(), vec);
        assert_eq!(FockVector::from_json("[[1],[]]").unwrap(), v("[[1],[]]"));
        assert_eq!(FockVector::from_json("[]").unwrap(), FockVector::zero());
        assert!(FockVector::from_json(r#"[{"coeff":"0.5","mp":[[1]]}]"#).is_err());
        assert!(
            FockVector::from_json(r#"[{"coeff":"1","mp":[[1]]},{"coeff":"1","mp":[[1],[]]}]"#)
                .is_err()
        );
    }
}
