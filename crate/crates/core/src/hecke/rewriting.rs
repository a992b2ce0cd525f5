//! Noncommutative Groebner bases for finitely presented algebras over a field.
//!
//! Words in the generators are ordered degree-lexicographically. Completion
//! follows the usual overlap (Buchberger-Mora) procedure with interreduction
//! of leading words. When the algebra is finite-dimensional the words that
//! avoid every leading word form a basis, and reduction to that basis is the
//! normal form map.

use std::cmp::Ordering;
use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::Field;

pub type Word = Vec<u8>;

/// Key wrapper ordering words by length, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegLex(pub Word);

impl Ord for DegLex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for DegLex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the free algebra: a finite sum of coefficient times word.
#[derive(Clone, Debug, PartialEq)]
pub struct NcPoly<T> {
    terms: BTreeMap<DegLex, T>,
}

impl<T: Clone + PartialEq + std::fmt::Debug> NcPoly<T> {
    pub fn zero() -> Self {
        NcPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<F: Field<Elem = T>>(
        f: &F,
        terms: impl IntoIterator<Item = (Word, T)>,
    ) -> Self {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(f, w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term<F: Field<Elem = T>>(&mut self, f: &F, w: Word, c: T) {
        if f.is_zero(&c) {
            return;
        }
        let key = DegLex(w);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = f.add(existing, &c);
                if f.is_zero(&sum) {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn leading(&self) -> Option<(&Word, &T)> {
        self.terms.last_key_value().map(|(k, c)| (&k.0, c))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &T)> {
        self.terms.iter().map(|(k, c)| (&k.0, c))
    }

    /// `self += c * left * other * right`.
    pub fn add_multiple<F: Field<Elem = T>>(
        &mut self,
        f: &F,
        c: &T,
        left: &[u8],
        other: &NcPoly<T>,
        right: &[u8],
    ) {
        for (w, d) in other.terms() {
            let mut word = Vec::with_capacity(left.len() + w.len() + right.len());
            word.extend_from_slice(left);
            word.extend_from_slice(w);
            word.extend_from_slice(right);
            self.add_term(f, word, f.mul(c, d));
        }
    }

    fn monic<F: Field<Elem = T>>(self, f: &F) -> Self {
        let Some((_, lc)) = self.leading() else {
            return self;
        };
        let inv = f.inv(lc).expect("leading coefficient is nonzero");
        NcPoly {
            terms: self
                .terms
                .into_iter()
                .map(|(k, c)| (k, f.mul(&inv, &c)))
                .collect(),
        }
    }
}

fn find_subword(haystack: &[u8], needle: &[u8]) -> Option<usize> {
    if needle.len() > haystack.len() {
        return None;
    }
    (0..=haystack.len() - needle.len()).find(|&k| &haystack[k..k + needle.len()] == needle)
}

/// A reduced Groebner basis, every element monic.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<T> {
    rules: Vec<NcPoly<T>>,
}

impl<T: Clone + PartialEq + std::fmt::Debug> GroebnerBasis<T> {
    /// Completes `relations` to a Groebner basis, giving up after `max_steps`
    /// processed overlaps.
    pub fn complete<F: Field<Elem = T>>(
        f: &F,
        relations: Vec<NcPoly<T>>,
        max_steps: usize,
    ) -> Result<Self> {
        let mut slots: Vec<Option<NcPoly<T>>> = Vec::new();
        let mut pending: VecDeque<NcPoly<T>> = relations.into();
        let mut pairs: VecDeque<(usize, usize)> = VecDeque::new();
        let mut steps = 0;
        loop {
            while let Some(p) = pending.pop_front() {
                let r = reduce_with(f, &p, slots.iter().flatten());
                if r.is_zero() {
                    continue;
                }
                let r = r.monic(f);
                let lead = r.leading().expect("nonzero").0.clone();
                for slot in slots.iter_mut() {
                    let contains = slot.as_ref().is_some_and(|g| {
                        find_subword(g.leading().expect("nonzero").0, &lead).is_some()
                    });
                    if contains {
                        pending.push_back(slot.take().expect("checked"));
                    }
                }
                let id = slots.len();
                slots.push(Some(r));
                for (j, slot) in slots.iter().enumerate() {
                    if slot.is_some() {
                        pairs.push_back((id, j));
                        if j != id {
                            pairs.push_back((j, id));
                        }
                    }
                }
            }
            let Some((a, b)) = pairs.pop_front() else {
                break;
            };
            let (Some(ga), Some(gb)) = (&slots[a], &slots[b]) else {
                continue;
            };
            steps += 1;
            if steps > max_steps {
                return Err(Error::RewritingDiverged(max_steps));
            }
            let wa = ga.leading().expect("nonzero").0;
            let wb = gb.leading().expect("nonzero").0;
            // Proper overlaps: wa = u x, wb = x v with x, u, v nonempty.
            for k in 1..wa.len().min(wb.len()) {
                if wa[wa.len() - k..] == wb[..k] {
                    let u = &wa[..wa.len() - k];
                    let v = &wb[k..];
                    let mut s = NcPoly::zero();
                    s.add_multiple(f, &f.one(), &[], ga, v);
                    s.add_multiple(f, &f.neg(&f.one()), u, gb, &[]);
                    pending.push_back(s);
                }
            }
        }
        let mut rules: Vec<NcPoly<T>> = slots.into_iter().flatten().collect();
        // Fully reduce tails so the basis is canonical.
        for k in 0..rules.len() {
            let (lead, lc) = {
                let (w, c) = rules[k].leading().expect("nonzero");
                (w.clone(), c.clone())
            };
            let mut tail = rules[k].clone();
            tail.terms.remove(&DegLex(lead.clone()));
            let others: Vec<&NcPoly<T>> = rules
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, g)| g)
                .collect();
            let mut reduced = reduce_with(f, &tail, others.into_iter());
            reduced.add_term(f, lead, lc);
            rules[k] = reduced;
        }
        rules.sort_by(|a, b| {
            DegLex(a.leading().unwrap().0.clone()).cmp(&DegLex(b.leading().unwrap().0.clone()))
        });
        Ok(GroebnerBasis { rules })
    }

    pub fn rules(&self) -> &[NcPoly<T>] {
        &self.rules
    }

    pub fn leading_words(&self) -> impl Iterator<Item = &Word> {
        self.rules.iter().map(|g| g.leading().expect("nonzero").0)
    }

    pub fn reduce<F: Field<Elem = T>>(&self, f: &F, p: &NcPoly<T>) -> NcPoly<T> {
        reduce_with(f, p, self.rules.iter())
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.leading_words()
            .all(|lead| find_subword(w, lead).is_none())
    }

    /// Normal words in degree-lexicographic order over `letters` generators;
    /// `None` if there are more than `limit`.
    pub fn normal_words(&self, letters: u8, limit: usize) -> Option<Vec<Word>> {
        let mut out = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for x in 0..letters {
                    let mut candidate = w.clone();
                    candidate.push(x);
                    let ok = self.leading_words().all(|lead| !candidate.ends_with(lead));
                    if ok {
                        next.push(candidate);
                    }
                }
            }
            next.sort_by_key(|w| DegLex(w.clone()));
            out.extend(next.iter().cloned());
            if out.len() > limit {
                return None;
            }
            frontier = next;
        }
        Some(out)
    }
}

fn reduce_with<'a, F, T>(
    f: &F,
    p: &NcPoly<T>,
    rules: impl Iterator<Item = &'a NcPoly<T>> + Clone,
) -> NcPoly<T>
where
    F: Field<Elem = T>,
    T: Clone + PartialEq + std::fmt::Debug + 'a,
{
    let mut p = p.clone();
    let mut done = NcPoly::zero();
    // Peel off the leading term: either rewrite it or move it to the result.
    while let Some((w, c)) = p.leading().map(|(w, c)| (w.clone(), c.clone())) {
        let hit = rules.clone().find_map(|g| {
            let (lead, lc) = g.leading().expect("nonzero");
            find_subword(&w, lead).map(|k| (g, k, lead.len(), lc))
        });
        match hit {
            Some((g, k, len, lc)) => {
                let factor = f.neg(&f.mul(&c, &f.inv(lc).expect("nonzero")));
                p.add_multiple(f, &factor, &w[..k], g, &w[k + len..]);
            }
            None => {
                p.terms.remove(&DegLex(w.clone()));
                done.terms.insert(DegLex(w), c);
            }
        }
    }
    done
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rationals;
    use num::BigRational;

    fn q(n: i64) -> BigRational {
        Rationals.from_i64(n)
    }

    #[test]
    fn deglex_order() {
        assert!(DegLex(vec![1]) < DegLex(vec![0, 0]));
        assert!(DegLex(vec![0, 1]) < DegLex(vec![1, 0]));
    }

    #[test]
    fn commutative_polynomial_ring_mod_squares() {
        // x^2 = 0, y^2 = 0, yx = xy: basis 1, x, y, xy.
        let f = Rationals;
        let rels = vec![
            NcPoly::from_terms(&f, [(vec![0, 0], q(1))]),
            NcPoly::from_terms(&f, [(vec![1, 1], q(1))]),
            NcPoly::from_terms(&f, [(vec![1, 0], q(1)), (vec![0, 1], q(-1))]),
        ];
        let gb = GroebnerBasis::complete(&f, rels, 1000).unwrap();
        let words = gb.normal_words(2, 100).unwrap();
        assert_eq!(words, vec![vec![], vec![0], vec![1], vec![0, 1]]);
        let p = NcPoly::from_terms(&f, [(vec![1, 0, 1], q(1))]);
        assert!(gb.reduce(&f, &p).is_zero());
    }

    #[test]
    fn symmetric_group_s3_from_coxeter_presentation() {
        // s^2 = 1, t^2 = 1, sts = tst: the group algebra of S_3 has dimension 6.
        let f = Rationals;
        let rels = vec![
            NcPoly::from_terms(&f, [(vec![0, 0], q(1)), (vec![], q(-1))]),
            NcPoly::from_terms(&f, [(vec![1, 1], q(1)), (vec![], q(-1))]),
            NcPoly::from_terms(&f, [(vec![0, 1, 0], q(1)), (vec![1, 0, 1], q(-1))]),
        ];
        let gb = GroebnerBasis::complete(&f, rels, 1000).unwrap();
        assert_eq!(gb.normal_words(2, 100).unwrap().len(), 6);
    }

    #[test]
    fn infinite_algebra_hits_limit() {
        let f = Rationals;
        let rels = vec![NcPoly::from_terms(&f, [(vec![0, 0], q(1))])];
        let gb = GroebnerBasis::complete(&f, rels, 100).unwrap();
        assert!(gb.normal_words(2, 50).is_none());
    }
}
