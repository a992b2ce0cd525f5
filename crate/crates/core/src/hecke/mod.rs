//! The cyclotomic Hecke algebra `H_{q,n}` at `q = zeta_e`, built from its
//! presentation.
//!
//! Generators `T_0, .., T_{n-1}` satisfy
//!
//! * `(T_0 - q_1) .. (T_0 - q_l) = 0` with `q_p = q^{s_p}`,
//! * `(T_i + 1)(T_i - q) = 0` for `i >= 1`,
//! * `T_0 T_1 T_0 T_1 = T_1 T_0 T_1 T_0`,
//! * `T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}` for `i >= 1`,
//! * `T_i T_j = T_j T_i` for `|i - j| > 1`.
//!
//! A Groebner basis of the relation ideal gives exact coordinates on the
//! algebra; the left regular representation is then assembled by saturating
//! from the identity, multiplying known basis elements on the left by
//! generators in breadth-first order.

pub mod central;
pub mod rewriting;

use std::collections::HashMap;

use num::{BigInt, BigRational};
use serde_json::{json, Value};

use crate::cyclotomic::{CyclotomicField, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, inverse, rank, Field, Matrix, RowSpace};
use crate::multipartition::Multicharge;
use crate::report::{AxiomCheck, AxiomReport, Witness};
use rewriting::{GroebnerBasis, NcPoly, Word};

pub use central::{
    a_poly, central_characters, check_character_restriction, check_character_weight,
    CentralCharacter, CharacterAnalysis, CharacterBlock,
};

/// Largest regular representation built unless `FOCK_MAX_DIM` says otherwise.
pub const DEFAULT_DIMENSION_BOUND: usize = 200;

/// Cap on processed overlaps during completion.
const COMPLETION_STEPS: usize = 50_000;

pub type CMatrix = Matrix<CyclotomicNumber>;

/// The dimension bound, taken from `FOCK_MAX_DIM` when set and valid.
pub fn dimension_bound() -> usize {
    std::env::var("FOCK_MAX_DIM")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_DIMENSION_BOUND)
}

/// `l^n n!`, saturating on overflow.
pub fn expected_dimension(level: usize, n: usize) -> usize {
    let mut d: usize = 1;
    for k in 1..=n {
        d = d.saturating_mul(level).saturating_mul(k);
    }
    d
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeckeParams {
    pub h: BigRational,
    /// `h_p` for `p = 1 .. l-1`.
    pub h_p: Vec<BigRational>,
    pub q: CyclotomicNumber,
    pub q_p: Vec<CyclotomicNumber>,
}

impl HeckeParams {
    pub fn to_json(&self) -> Value {
        json!({
            "h": format_rational(&self.h),
            "h_p": self.h_p.iter().map(format_rational).collect::<Vec<_>>(),
            "q": self.q.to_string(),
            "q_p": self.q_p.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        })
    }
}

pub fn params_from_charge(c: &Multicharge) -> HeckeParams {
    let field = CyclotomicField::new(c.e());
    let e = c.e() as i64;
    let l = c.level() as i64;
    let rat = |p: i64, q: i64| BigRational::new(BigInt::from(p), BigInt::from(q));
    let s = c.charge();
    let h_p = s
        .windows(2)
        .map(|w| rat(w[1] - w[0], e) - rat(1, l))
        .collect();
    HeckeParams {
        h: rat(-1, e),
        h_p,
        q: field.zeta(),
        q_p: s.iter().map(|&sp| field.zeta_pow(sp)).collect(),
    }
}

/// Left regular representation of `H_{q,n}`.
#[derive(Clone, Debug)]
pub struct FinDimAlgebraRep {
    pub field: CyclotomicField,
    pub charge: Multicharge,
    pub params: HeckeParams,
    pub n: usize,
    /// Word labelling each basis vector, e.g. `T1T0`; the identity is `1`.
    pub labels: Vec<String>,
    pub generators: Vec<CMatrix>,
}

impl FinDimAlgebraRep {
    pub fn dimension(&self) -> usize {
        self.labels.len()
    }

    pub fn level(&self) -> usize {
        self.charge.level()
    }

    pub fn identity(&self) -> CMatrix {
        Matrix::identity(&self.field, self.dimension())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "e": self.charge.e(),
            "s": self.charge.charge(),
            "n": self.n,
            "dimension": self.dimension(),
            "params": self.params.to_json(),
            "basis": self.labels,
            "generators": self.generators.iter().enumerate().map(|(j, m)| json!({
                "name": format!("T{j}"),
                "matrix": matrix_to_json(m),
            })).collect::<Vec<_>>(),
        })
    }
}

/// A matrix as nested arrays of coefficient vectors in the power basis of `zeta`.
pub fn matrix_to_json(m: &CMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|x| {
                            Value::Array(
                                x.coeffs()
                                    .iter()
                                    .map(|c| Value::String(format_rational(c)))
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

fn word_label(w: &[u8]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(|x| format!("T{x}")).collect()
    }
}

/// Coefficients `c_0..c_d` of `prod (x - r)`.
pub(crate) fn poly_from_roots(
    f: &CyclotomicField,
    roots: &[CyclotomicNumber],
) -> Vec<CyclotomicNumber> {
    let mut coeffs = vec![f.one()];
    for r in roots {
        let mut next = vec![f.zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = f.add(&next[k + 1], c);
            next[k] = f.sub(&next[k], &f.mul(c, r));
        }
        coeffs = next;
    }
    coeffs
}

fn presentation(
    f: &CyclotomicField,
    params: &HeckeParams,
    n: usize,
) -> Vec<NcPoly<CyclotomicNumber>> {
    let one = f.one();
    let neg = f.neg(&one);
    let q = &params.q;
    let mut rels = Vec::new();
    if n == 0 {
        return rels;
    }
    let t0 = poly_from_roots(f, &params.q_p);
    rels.push(NcPoly::from_terms(
        f,
        t0.into_iter().enumerate().map(|(k, c)| (vec![0u8; k], c)),
    ));
    for i in 1..n as u8 {
        rels.push(NcPoly::from_terms(
            f,
            [
                (vec![i, i], one.clone()),
                (vec![i], f.sub(&one, q)),
                (vec![], f.neg(q)),
            ],
        ));
    }
    if n >= 2 {
        rels.push(NcPoly::from_terms(
            f,
            [
                (vec![1, 0, 1, 0], one.clone()),
                (vec![0, 1, 0, 1], neg.clone()),
            ],
        ));
    }
    for i in 0..n as u8 {
        for j in 0..i {
            if i - j > 1 {
                rels.push(NcPoly::from_terms(
                    f,
                    [(vec![i, j], one.clone()), (vec![j, i], neg.clone())],
                ));
            }
        }
    }
    for i in 1..(n as u8).saturating_sub(1) {
        rels.push(NcPoly::from_terms(
            f,
            [
                (vec![i + 1, i, i + 1], one.clone()),
                (vec![i, i + 1, i], neg.clone()),
            ],
        ));
    }
    rels
}

/// Builds `H_{q,n}` for the charge `c` under the bound from [`dimension_bound`].
pub fn build_algebra(c: &Multicharge, n: usize) -> Result<FinDimAlgebraRep> {
    build_algebra_with_bound(c, n, dimension_bound())
}

pub fn build_algebra_with_bound(
    c: &Multicharge,
    n: usize,
    bound: usize,
) -> Result<FinDimAlgebraRep> {
    let expected = expected_dimension(c.level(), n);
    if expected > bound {
        return Err(Error::DimensionOverflow {
            dimension: expected,
            bound,
        });
    }
    let f = CyclotomicField::new(c.e());
    let params = params_from_charge(c);
    let gb = GroebnerBasis::complete(&f, presentation(&f, &params, n), COMPLETION_STEPS)?;
    let words = gb
        .normal_words(n as u8, bound)
        .ok_or(Error::DimensionOverflow {
            dimension: bound + 1,
            bound,
        })?;
    let ambient = words.len();
    let index: HashMap<Word, usize> = words
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, w)| (w, k))
        .collect();

    // Left multiplication by each generator in normal-word coordinates.
    let left: Vec<CMatrix> = (0..n as u8)
        .map(|j| {
            let mut m = Matrix::zeros(&f, ambient, ambient);
            for (col, w) in words.iter().enumerate() {
                let mut word = vec![j];
                word.extend_from_slice(w);
                let reduced = gb.reduce(&f, &NcPoly::from_terms(&f, [(word, f.one())]));
                for (u, coeff) in reduced.terms() {
                    m.set(index[u], col, coeff.clone());
                }
            }
            m
        })
        .collect();

    // Saturation from the identity, breadth-first, generators in index order.
    let mut space = RowSpace::new(ambient);
    let mut unit = vec![f.zero(); ambient];
    unit[index[&Vec::new()]] = f.one();
    space.insert(&f, &unit);
    let mut basis: Vec<(Word, Vec<CyclotomicNumber>)> = vec![(Vec::new(), unit)];
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &b in &frontier {
            for (j, a) in left.iter().enumerate() {
                let v = a.apply(&f, &basis[b].1);
                if space.insert(&f, &v) {
                    if basis.len() >= bound {
                        return Err(Error::DimensionOverflow {
                            dimension: basis.len() + 1,
                            bound,
                        });
                    }
                    let mut w = vec![j as u8];
                    w.extend_from_slice(&basis[b].0);
                    basis.push((w, v));
                    next.push(basis.len() - 1);
                }
            }
        }
        frontier = next;
    }
    if basis.len() != expected || ambient != expected {
        return Err(Error::ClosureMismatch {
            expected,
            found: basis.len().max(ambient),
        });
    }

    let p = Matrix::from_rows(basis.iter().map(|(_, v)| v.clone()).collect(), ambient).transpose();
    let p_inv = inverse(&f, &p).ok_or(Error::ClosureMismatch {
        expected,
        found: rank(&f, &p),
    })?;
    let generators = left.iter().map(|a| p_inv.mul(&f, &a.mul(&f, &p))).collect();
    Ok(FinDimAlgebraRep {
        field: f,
        charge: c.clone(),
        params,
        n,
        labels: basis.iter().map(|(w, _)| word_label(w)).collect(),
        generators,
    })
}

fn nonzero_entries(f: &CyclotomicField, m: &CMatrix) -> usize {
    (0..m.rows())
        .map(|r| m.row(r).iter().filter(|x| !f.is_zero(x)).count())
        .sum()
}

fn zero_witness(f: &CyclotomicField, name: String, m: &CMatrix) -> Option<Witness> {
    (!m.is_zero(f)).then(|| {
        Witness::new(
            name,
            None,
            format!("{} nonzero entries", nonzero_entries(f, m)),
            "0",
        )
    })
}

fn product(f: &CyclotomicField, ms: &[&CMatrix]) -> CMatrix {
    let mut it = ms.iter();
    let first = (*it.next().expect("nonempty product")).clone();
    it.fold(first, |acc, m| acc.mul(f, m))
}

pub const DIMENSION: &str = "hecke.dimension";
pub const CYCLOTOMIC: &str = "hecke.cyclotomic";
pub const QUADRATIC: &str = "hecke.quadratic";
pub const BRAID_ZERO: &str = "hecke.braid_zero";
pub const BRAID: &str = "hecke.braid";
pub const COMMUTING: &str = "hecke.commuting";
pub const INVERTIBLE: &str = "hecke.invertible";
pub const JM_INTERTWINING: &str = "hecke.jm_intertwining";
pub const JM_COMMUTING: &str = "hecke.jm_commuting";
pub const JM_INVERTIBLE: &str = "hecke.jm_invertible";
pub const CENTRALITY: &str = "hecke.centrality";

/// Evaluates every defining relation on the generator matrices.
pub fn check_relations(rep: &FinDimAlgebraRep) -> AxiomReport {
    let f = &rep.field;
    let t = &rep.generators;
    let d = rep.dimension();
    let mut report = AxiomReport::new();

    let expected = expected_dimension(rep.level(), rep.n);
    let mut dim = Vec::new();
    if d != expected || rep.labels.first().map(String::as_str) != Some("1") {
        dim.push(Witness::new(
            "basis",
            None,
            d.to_string(),
            expected.to_string(),
        ));
    }
    report.push(AxiomCheck::from_witnesses(DIMENSION, dim));

    let mut cyc = Vec::new();
    if let Some(t0) = t.first() {
        let mut acc = rep.identity();
        for qp in &rep.params.q_p {
            acc = acc.mul(f, &t0.add_scalar(f, &f.neg(qp)));
        }
        cyc.extend(zero_witness(f, "T0".into(), &acc));
    }
    report.push(AxiomCheck::from_witnesses(CYCLOTOMIC, cyc));

    // The quadratic relation in the factored form (T + 1)(T - q) = 0.
    let q = &rep.params.q;
    let quad = (1..rep.n)
        .filter_map(|i| {
            let m = t[i]
                .add_scalar(f, &f.one())
                .mul(f, &t[i].add_scalar(f, &f.neg(q)));
            zero_witness(f, format!("T{i}"), &m)
        })
        .collect();
    report.push(AxiomCheck::from_witnesses(QUADRATIC, quad));

    let mut braid0 = Vec::new();
    if rep.n >= 2 {
        let m = product(f, &[&t[0], &t[1], &t[0], &t[1]])
            .sub(f, &product(f, &[&t[1], &t[0], &t[1], &t[0]]));
        braid0.extend(zero_witness(f, "T0T1T0T1-T1T0T1T0".into(), &m));
    }
    report.push(AxiomCheck::from_witnesses(BRAID_ZERO, braid0));

    let braid = (1..rep.n.saturating_sub(1))
        .filter_map(|i| {
            let m = product(f, &[&t[i], &t[i + 1], &t[i]])
                .sub(f, &product(f, &[&t[i + 1], &t[i], &t[i + 1]]));
            zero_witness(f, format!("T{i}T{j}T{i}-T{j}T{i}T{j}", j = i + 1), &m)
        })
        .collect();
    report.push(AxiomCheck::from_witnesses(BRAID, braid));

    let mut comm = Vec::new();
    for i in 0..rep.n {
        for j in i + 2..rep.n {
            comm.extend(zero_witness(
                f,
                format!("[T{i},T{j}]"),
                &t[i].commutator(f, &t[j]),
            ));
        }
    }
    report.push(AxiomCheck::from_witnesses(COMMUTING, comm));

    let inv = t
        .iter()
        .enumerate()
        .filter_map(|(j, m)| {
            let r = rank(f, m);
            (r != d).then(|| {
                Witness::new(
                    format!("T{j}"),
                    None,
                    format!("rank {r}"),
                    format!("rank {d}"),
                )
            })
        })
        .collect();
    report.push(AxiomCheck::from_witnesses(INVERTIBLE, inv));
    report
}

/// `J_0 = T_0`, `J_i = q^{-1} T_i J_{i-1} T_i`.
pub fn jm_elements(rep: &FinDimAlgebraRep) -> Vec<CMatrix> {
    let f = &rep.field;
    let q_inv = f.inv(&rep.params.q).expect("q is a unit");
    let mut out: Vec<CMatrix> = Vec::with_capacity(rep.n);
    for i in 0..rep.n {
        let j = match out.last() {
            None => rep.generators[0].clone(),
            Some(prev) => {
                product(f, &[&rep.generators[i], prev, &rep.generators[i]]).scale(f, &q_inv)
            }
        };
        out.push(j);
    }
    out
}

/// `e_0(J), .., e_n(J)`, the coefficients of `prod (z - J_i)` up to sign.
pub fn elementary_jm(rep: &FinDimAlgebraRep, jm: &[CMatrix]) -> Vec<CMatrix> {
    let f = &rep.field;
    let d = rep.dimension();
    let mut e = vec![rep.identity()];
    e.extend((0..jm.len()).map(|_| Matrix::zeros(f, d, d)));
    for (m, j) in jm.iter().enumerate() {
        for k in (1..=m + 1).rev() {
            e[k] = e[k].add(f, &e[k - 1].mul(f, j));
        }
    }
    e
}

/// The `k`-th elementary symmetric function of the Jucys-Murphy elements.
pub fn symmetric_jm(rep: &FinDimAlgebraRep, k: usize) -> CMatrix {
    let jm = jm_elements(rep);
    elementary_jm(rep, &jm).swap_remove(k)
}

/// Recursion, commutativity and invertibility of the Jucys-Murphy elements,
/// and centrality of their elementary symmetric functions.
pub fn check_jm(rep: &FinDimAlgebraRep) -> AxiomReport {
    let f = &rep.field;
    let t = &rep.generators;
    let jm = jm_elements(rep);
    let d = rep.dimension();
    let mut report = AxiomReport::new();

    let inter = (1..rep.n)
        .filter_map(|i| {
            let m = product(f, &[&t[i], &jm[i - 1], &t[i]]).sub(f, &jm[i].scale(f, &rep.params.q));
            zero_witness(f, format!("T{i}J{}T{i}-qJ{i}", i - 1), &m)
        })
        .collect();
    report.push(AxiomCheck::from_witnesses(JM_INTERTWINING, inter));

    let mut comm = Vec::new();
    for a in 0..rep.n {
        for b in a + 1..rep.n {
            comm.extend(zero_witness(
                f,
                format!("[J{a},J{b}]"),
                &jm[a].commutator(f, &jm[b]),
            ));
        }
    }
    report.push(AxiomCheck::from_witnesses(JM_COMMUTING, comm));

    let inv = jm
        .iter()
        .enumerate()
        .filter_map(|(i, m)| {
            let r = rank(f, m);
            (r != d).then(|| {
                Witness::new(
                    format!("J{i}"),
                    None,
                    format!("rank {r}"),
                    format!("rank {d}"),
                )
            })
        })
        .collect();
    report.push(AxiomCheck::from_witnesses(JM_INVERTIBLE, inv));

    let mut central = Vec::new();
    for (k, ek) in elementary_jm(rep, &jm).iter().enumerate() {
        for (j, tj) in t.iter().enumerate() {
            central.extend(zero_witness(
                f,
                format!("[e{k}(J),T{j}]"),
                &ek.commutator(f, tj),
            ));
        }
    }
    report.push(AxiomCheck::from_witnesses(CENTRALITY, central));
    report
}

/// Builds the algebra and runs every check: relations, Jucys-Murphy
/// properties and the central-character analysis.
pub fn verify_hecke(c: &Multicharge, n: usize) -> Result<(FinDimAlgebraRep, AxiomReport)> {
    let rep = build_algebra(c, n)?;
    let mut report = check_relations(&rep);
    report.extend(check_jm(&rep));
    report.extend(central_characters(&rep).report);
    Ok((rep, report))
}
