//! Central characters: the polynomials `a_lambda(z) = prod (z - q^res(v))`
//! over the boxes of `lambda`, and the joint generalized eigenspaces of the
//! elementary symmetric Jucys-Murphy elements on the regular representation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigRational, One};
use serde_json::{json, Value};

use super::{elementary_jm, jm_elements, poly_from_roots, CMatrix, FinDimAlgebraRep};
use crate::cyclotomic::{CyclotomicField, CyclotomicNumber};
use crate::fock::{apply_e, apply_f, FockVector};
use crate::linalg::{nullity, stable_power, Field, Matrix};
use crate::multipartition::{enumerate, residue, Multicharge, Multipartition};
use crate::report::{AxiomCheck, AxiomReport, Witness};
use crate::weight::{wt, AffineWeight};

pub const CHARACTER_TOTAL: &str = "hecke.character_total";
pub const CHARACTER_SUPPORT: &str = "hecke.character_support";
pub const BLOCK_COUNT: &str = "hecke.block_count";
pub const CHARACTER_WEIGHT: &str = "hecke.character_weight";
pub const CHARACTER_RESTRICTION: &str = "hecke.character_restriction";

/// The monic polynomial `a_lambda(z)`, stored by its coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CentralCharacter {
    /// Coefficients of `z^0, .., z^n`.
    coeffs: Vec<CyclotomicNumber>,
}

impl CentralCharacter {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[CyclotomicNumber] {
        &self.coeffs
    }

    /// `e_k` of the roots, read off as `(-1)^k` times the coefficient of `z^(n-k)`.
    pub fn elementary(&self, f: &CyclotomicField, k: usize) -> CyclotomicNumber {
        let c = &self.coeffs[self.degree() - k];
        if k.is_multiple_of(2) {
            c.clone()
        } else {
            f.neg(c)
        }
    }

    /// Multiplies by `z - root`.
    pub fn times_linear(&self, f: &CyclotomicField, root: &CyclotomicNumber) -> CentralCharacter {
        let mut next = vec![f.zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            next[k + 1] = f.add(&next[k + 1], c);
            next[k] = f.sub(&next[k], &f.mul(c, root));
        }
        CentralCharacter { coeffs: next }
    }

    pub fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl fmt::Debug for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            let text = c.to_string();
            if text == "0" {
                continue;
            }
            let simple = !text[1..].contains([' ', 'q']);
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ if simple => (false, text.clone()),
                _ => (false, format!("({text})")),
            };
            let var = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            let term = match (body.as_str(), k) {
                (b, 0) => b.to_string(),
                ("1", _) => var,
                (b, _) => format!("{b}*{var}"),
            };
            if out.is_empty() {
                out = if neg { format!("-{term}") } else { term };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        f.write_str(if out.is_empty() { "0" } else { &out })
    }
}

/// `a_lambda(z) = prod over boxes v of (z - q^res(v))`.
pub fn a_poly(mp: &Multipartition, c: &Multicharge) -> CentralCharacter {
    let f = CyclotomicField::new(c.e());
    let roots: Vec<CyclotomicNumber> = mp
        .boxes()
        .iter()
        .map(|b| f.zeta_pow(residue(b, c).expect("boxes of a well-formed multipartition") as i64))
        .collect();
    CentralCharacter {
        coeffs: poly_from_roots(&f, &roots),
    }
}

/// One candidate character with the multipartitions producing it.
#[derive(Clone, Debug)]
pub struct CharacterBlock {
    pub character: CentralCharacter,
    pub members: Vec<Multipartition>,
    pub weight: AffineWeight,
    /// Dimension of the joint generalized eigenspace in the regular representation.
    pub dimension: usize,
}

impl CharacterBlock {
    pub fn to_json(&self) -> Value {
        json!({
            "character": self.character.to_json(),
            "weight": serde_json::to_value(&self.weight).expect("weights serialize"),
            "members": self.members.iter().map(Multipartition::format).collect::<Vec<_>>(),
            "dimension": self.dimension,
        })
    }
}

#[derive(Clone, Debug)]
pub struct CharacterAnalysis {
    /// Every candidate, in order of first appearance among the sorted multipartitions.
    pub blocks: Vec<CharacterBlock>,
    pub report: AxiomReport,
}

impl CharacterAnalysis {
    pub fn attained(&self) -> impl Iterator<Item = &CharacterBlock> {
        self.blocks.iter().filter(|b| b.dimension > 0)
    }
}

/// Groups the rank-`n` multipartitions by central character.
pub fn candidate_blocks(n: usize, c: &Multicharge) -> Vec<(CentralCharacter, Vec<Multipartition>)> {
    let mut out: Vec<(CentralCharacter, Vec<Multipartition>)> = Vec::new();
    for mp in enumerate(n, c.level()) {
        let ch = a_poly(&mp, c);
        match out.iter_mut().find(|(x, _)| *x == ch) {
            Some((_, members)) => members.push(mp),
            None => out.push((ch, vec![mp])),
        }
    }
    out
}

/// Generalized-eigenspace dimensions of `(e_1(J), .., e_n(J))` at every
/// candidate character, with the bookkeeping checks: dimensions add up to
/// the algebra dimension, no spectrum lies outside the candidates, and the
/// number of attained characters equals the number of distinct weights.
pub fn central_characters(rep: &FinDimAlgebraRep) -> CharacterAnalysis {
    let f = &rep.field;
    let c = &rep.charge;
    let n = rep.n;
    let d = rep.dimension();
    let jm = jm_elements(rep);
    let ek = elementary_jm(rep, &jm);
    let candidates = candidate_blocks(n, c);

    // (E_k - v)^m with m large enough that its kernel is the generalized eigenspace.
    let mut powers: HashMap<(usize, CyclotomicNumber), CMatrix> = HashMap::new();
    let mut blocks = Vec::new();
    for (ch, members) in candidates {
        let mut stacked = Vec::new();
        for (k, e_k) in ek.iter().enumerate().skip(1) {
            let v = ch.elementary(f, k);
            let m = powers
                .entry((k, v.clone()))
                .or_insert_with(|| stable_power(f, &e_k.add_scalar(f, &f.neg(&v))).1);
            stacked.push(m.clone());
        }
        let dimension = if stacked.is_empty() {
            d
        } else {
            nullity(f, &Matrix::vstack(&stacked))
        };
        let weight = wt(&members[0], c);
        blocks.push(CharacterBlock {
            character: ch,
            members,
            weight,
            dimension,
        });
    }

    let mut report = AxiomReport::new();
    let total: usize = blocks.iter().map(|b| b.dimension).sum();
    let mut w = Vec::new();
    if total != d {
        w.push(Witness::new(
            "sum of eigenspace dimensions",
            None,
            total.to_string(),
            d.to_string(),
        ));
    }
    report.push(AxiomCheck::from_witnesses(CHARACTER_TOTAL, w));

    let mut w = Vec::new();
    for (k, e_k) in ek.iter().enumerate().skip(1) {
        let mut values: Vec<CyclotomicNumber> = Vec::new();
        for b in &blocks {
            let v = b.character.elementary(f, k);
            if !values.contains(&v) {
                values.push(v);
            }
        }
        let mut prod = rep.identity();
        for v in &values {
            prod = prod.mul(f, &e_k.add_scalar(f, &f.neg(v)));
        }
        let (_, p) = stable_power(f, &prod);
        if !p.is_zero(f) {
            w.push(Witness::new(
                format!("e{k}(J)"),
                None,
                "spectrum outside candidates",
                "nilpotent",
            ));
        }
    }
    report.push(AxiomCheck::from_witnesses(CHARACTER_SUPPORT, w));

    let attained = blocks.iter().filter(|b| b.dimension > 0).count();
    let weights: std::collections::BTreeSet<AffineWeight> =
        enumerate(n, c.level()).iter().map(|mp| wt(mp, c)).collect();
    let mut w = Vec::new();
    if attained != weights.len() {
        w.push(Witness::new(
            format!("n={n}"),
            None,
            format!("{attained} attained characters"),
            format!("{} weights", weights.len()),
        ));
    }
    report.push(AxiomCheck::from_witnesses(BLOCK_COUNT, w));
    CharacterAnalysis { blocks, report }
}

/// `a_lambda = a_mu` exactly when `wt(lambda) = wt(mu)`, for equal ranks up to `max_rank`.
pub fn check_character_weight(c: &Multicharge, max_rank: usize) -> AxiomCheck {
    let mut witnesses = Vec::new();
    for n in 0..=max_rank {
        let data: Vec<(Multipartition, CentralCharacter, AffineWeight)> = enumerate(n, c.level())
            .into_iter()
            .map(|mp| {
                let ch = a_poly(&mp, c);
                let w = wt(&mp, c);
                (mp, ch, w)
            })
            .collect();
        for (a, (la, ca, wa)) in data.iter().enumerate() {
            for (lb, cb, wb) in &data[a + 1..] {
                let same_char = ca == cb;
                let same_wt = wa == wb;
                if same_char != same_wt {
                    witnesses.push(Witness::new(
                        format!("{} {}", la.format(), lb.format()),
                        None,
                        format!("characters equal: {same_char}"),
                        format!("weights equal: {same_wt}"),
                    ));
                }
            }
        }
    }
    AxiomCheck::from_witnesses(CHARACTER_WEIGHT, witnesses)
}

/// `e_i` computed through characters: the multipartitions one box smaller
/// whose character times `(z - q^i)` is the character of `mp`.
pub fn restrict_by_character(i: usize, mp: &Multipartition, c: &Multicharge) -> FockVector {
    let f = CyclotomicField::new(c.e());
    let target = a_poly(mp, c);
    let root = f.zeta_pow(i as i64);
    let mut out = FockVector::zero();
    for b in mp.removable_boxes(c, None) {
        let mu = mp.remove_box(&b).expect("removable");
        if a_poly(&mu, c).times_linear(&f, &root) == target {
            out.add_term(mu, BigRational::one());
        }
    }
    out
}

/// `f_i` computed through characters.
pub fn induce_by_character(i: usize, mp: &Multipartition, c: &Multicharge) -> FockVector {
    let f = CyclotomicField::new(c.e());
    let target = a_poly(mp, c).times_linear(&f, &f.zeta_pow(i as i64));
    let mut out = FockVector::zero();
    for b in mp.addable_boxes(c, None) {
        let mu = mp.add_box(&b).expect("addable");
        if a_poly(&mu, c) == target {
            out.add_term(mu, BigRational::one());
        }
    }
    out
}

/// Compares the character route for `e_i` and `f_i` with the Fock-space operators.
pub fn check_character_restriction(c: &Multicharge, max_rank: usize) -> AxiomCheck {
    let mut witnesses = Vec::new();
    for n in 0..=max_rank {
        for mp in enumerate(n, c.level()) {
            let v = FockVector::basis(mp.clone());
            for i in 0..c.e() {
                let pairs = [
                    ("e", restrict_by_character(i, &mp, c), apply_e(i, &v, c)),
                    ("f", induce_by_character(i, &mp, c), apply_f(i, &v, c)),
                ];
                for (op, by_char, fock) in pairs {
                    if by_char != fock {
                        witnesses.push(Witness::new(
                            format!("{op}_{i} {}", mp.format()),
                            Some(i),
                            by_char.to_json(),
                            fock.to_json(),
                        ));
                    }
                }
            }
        }
    }
    AxiomCheck::from_witnesses(CHARACTER_RESTRICTION, witnesses)
}

/// Rank-`n` multipartitions grouped by weight, in weight order.
pub fn weight_blocks(n: usize, c: &Multicharge) -> BTreeMap<AffineWeight, Vec<Multipartition>> {
    let mut out: BTreeMap<AffineWeight, Vec<Multipartition>> = BTreeMap::new();
    for mp in enumerate(n, c.level()) {
        out.entry(wt(&mp, c)).or_default().push(mp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::build_algebra_with_bound;

    fn charge(e: usize, s: &[i64]) -> Multicharge {
        Multicharge::new(e, s.to_vec()).unwrap()
    }

    fn mp(text: &str) -> Multipartition {
        Multipartition::parse(text).unwrap()
    }

    #[test]
    fn polynomials() {
        let c = charge(2, &[0]);
        assert_eq!(a_poly(&mp("[[1]]"), &c).to_string(), "z - 1");
        assert_eq!(a_poly(&mp("[[2]]"), &c).to_string(), "z^2 - 1");
        assert_eq!(
            a_poly(&mp("[[1],[1]]"), &charge(2, &[0, 1])).to_string(),
            "z^2 - 1"
        );
        assert_eq!(a_poly(&mp("[[]]"), &c).to_string(), "1");
        // Two boxes of residues 0 and 1 at e = 3: z^2 - (1 + q) z + q.
        assert_eq!(
            a_poly(&mp("[[2]]"), &charge(3, &[0])).to_string(),
            "z^2 + (-1 - q)*z + q"
        );
    }

    #[test]
    fn level_one_e2_characters() {
        let c = charge(2, &[0]);
        let rep = build_algebra_with_bound(&c, 2, 200).unwrap();
        let a = central_characters(&rep);
        assert!(a.report.passed(), "{:?}", a.report);
        assert_eq!(a.attained().count(), 1);
        assert_eq!(a.blocks[0].dimension, 2);

        let rep = build_algebra_with_bound(&c, 3, 200).unwrap();
        let a = central_characters(&rep);
        assert!(a.report.passed());
        assert_eq!(a.attained().count(), 2);
    }

    #[test]
    fn rank_one_single_character() {
        for e in 2..5 {
            let rep = build_algebra_with_bound(&charge(e, &[0]), 1, 200).unwrap();
            let a = central_characters(&rep);
            assert_eq!(a.attained().count(), 1);
            assert_eq!(a.blocks[0].dimension, 1);
        }
    }

    #[test]
    fn characters_match_weights() {
        assert!(check_character_weight(&charge(3, &[0, 1]), 4).passed());
        assert!(check_character_restriction(&charge(2, &[0, 1]), 4).passed());
    }
}
