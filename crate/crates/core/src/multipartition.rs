//! Partitions, multipartitions and their Young diagrams.
//!
//! A multipartition of level `l` is an `l`-tuple of integer partitions. Boxes
//! are addressed as `(row, column, component)` triples, all 1-based. The
//! residue of a box under a [`Multicharge`] `(e; s_1, .., s_l)` is
//! `column - row + s_component` reduced mod `e`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer partition stored as weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, stripping trailing zero parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        Self::from_signed(0, parts.into_iter().map(i64::from).collect())
    }

    fn from_signed(component: usize, mut parts: Vec<i64>) -> Result<Self> {
        if let Some(&part) = parts.iter().find(|&&p| p < 0) {
            return Err(Error::NegativePart { component, part });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotDecreasing { component, parts });
        }
        let parts = parts
            .into_iter()
            .map(|p| u32::try_from(p).map_err(|_| Error::Parse(format!("part {p} too large"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `a` (1-based); zero past the last part.
    pub fn row(&self, a: usize) -> u32 {
        if a == 0 {
            return 0;
        }
        self.0.get(a - 1).copied().unwrap_or(0)
    }

    /// All partitions of `n` in reverse lexicographic order of parts.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(current.clone()));
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                current.push(part);
                go(remaining - part, part, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        go(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }
}

/// A single cell `(a, b, j)` of a multipartition diagram: row `a`, column `b`,
/// component `j`, all starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
    pub component: usize,
}

impl BoxCoord {
    pub fn new(row: usize, col: usize, component: usize) -> Self {
        BoxCoord {
            row,
            col,
            component,
        }
    }

    /// Content `b - a` of the box, ignoring the charge.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.component)
    }
}

/// The pair `(e, s)`: the quantum characteristic `e >= 2` and the charge
/// `s = (s_1, .., s_l)`. The level `l` is the length of `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multicharge {
    e: usize,
    s: Vec<i64>,
}

impl Multicharge {
    pub fn new(e: usize, s: Vec<i64>) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidCharge(format!("e = {e} must be at least 2")));
        }
        if s.is_empty() {
            return Err(Error::InvalidCharge(
                "charge must have at least one entry".into(),
            ));
        }
        Ok(Multicharge { e, s })
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn charge(&self) -> &[i64] {
        &self.s
    }

    pub fn level(&self) -> usize {
        self.s.len()
    }

    /// Reduces an integer into `0..e`.
    pub fn reduce(&self, n: i64) -> usize {
        n.rem_euclid(self.e as i64) as usize
    }

    pub fn check_residue(&self, i: usize) -> Result<()> {
        if i < self.e {
            Ok(())
        } else {
            Err(Error::InvalidResidue {
                residue: i,
                e: self.e,
            })
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            e: usize,
            s: Vec<i64>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|err| Error::Parse(err.to_string()))?;
        Multicharge::new(raw.e, raw.s)
    }
}

/// Residue `b - a + s_j mod e` of a box.
pub fn residue(b: &BoxCoord, c: &Multicharge) -> Result<usize> {
    if b.component == 0 || b.component > c.level() {
        return Err(Error::ComponentOutOfRange {
            component: b.component,
            level: c.level(),
        });
    }
    Ok(c.reduce(b.content() + c.s[b.component - 1]))
}

/// An `l`-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn empty(level: usize) -> Self {
        Multipartition {
            components: vec![Partition::empty(); level],
        }
    }

    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition { components }
    }

    /// Convenience constructor from raw parts; fails on malformed parts.
    pub fn from_parts(parts: Vec<Vec<u32>>) -> Result<Self> {
        parts
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()
            .map(Multipartition::new)
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, j: usize) -> &Partition {
        &self.components[j - 1]
    }

    /// Number of boxes.
    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn contains(&self, b: &BoxCoord) -> bool {
        b.component >= 1
            && b.component <= self.level()
            && b.row >= 1
            && b.col >= 1
            && b.col as u32 <= self.component(b.component).row(b.row)
    }

    /// All boxes of the diagram in (component, row, column) order.
    pub fn boxes(&self) -> Vec<BoxCoord> {
        let mut out = Vec::with_capacity(self.rank());
        for (j, p) in self.components.iter().enumerate() {
            for (a, &len) in p.parts().iter().enumerate() {
                for b in 1..=len as usize {
                    out.push(BoxCoord::new(a + 1, b, j + 1));
                }
            }
        }
        out
    }

    /// Number of boxes of each residue, indexed `0..e`.
    pub fn residue_counts(&self, c: &Multicharge) -> Vec<usize> {
        let mut counts = vec![0; c.e()];
        for (j, p) in self.components.iter().enumerate() {
            for (a, &len) in p.parts().iter().enumerate() {
                for b in 1..=len as i64 {
                    counts[c.reduce(b - (a as i64 + 1) + c.s[j])] += 1;
                }
            }
        }
        counts
    }

    /// Removable boxes sorted by (component, row), optionally filtered by residue.
    pub fn removable_boxes(&self, c: &Multicharge, i: Option<usize>) -> Vec<BoxCoord> {
        let mut out = Vec::new();
        for (j, p) in self.components.iter().enumerate() {
            let parts = p.parts();
            for a in 1..=parts.len() {
                let len = parts[a - 1];
                if a == parts.len() || parts[a] < len {
                    out.push(BoxCoord::new(a, len as usize, j + 1));
                }
            }
        }
        filter_residue(out, c, i)
    }

    /// Addable boxes sorted by (component, row), optionally filtered by residue.
    pub fn addable_boxes(&self, c: &Multicharge, i: Option<usize>) -> Vec<BoxCoord> {
        let mut out = Vec::new();
        for (j, p) in self.components.iter().enumerate() {
            let parts = p.parts();
            for a in 1..=parts.len() + 1 {
                let len = p.row(a);
                if a == 1 || p.row(a - 1) > len {
                    out.push(BoxCoord::new(a, len as usize + 1, j + 1));
                }
            }
        }
        filter_residue(out, c, i)
    }

    pub fn is_addable(&self, b: &BoxCoord) -> bool {
        if b.component == 0 || b.component > self.level() || b.row == 0 {
            return false;
        }
        let p = self.component(b.component);
        b.col as u32 == p.row(b.row) + 1 && (b.row == 1 || p.row(b.row - 1) >= b.col as u32)
    }

    pub fn is_removable(&self, b: &BoxCoord) -> bool {
        if b.component == 0 || b.component > self.level() || b.row == 0 {
            return false;
        }
        let p = self.component(b.component);
        b.col >= 1 && b.col as u32 == p.row(b.row) && p.row(b.row + 1) < b.col as u32
    }

    pub fn add_box(&self, b: &BoxCoord) -> Result<Multipartition> {
        if !self.is_addable(b) {
            return Err(Error::NotAddable(*b));
        }
        let mut next = self.clone();
        let parts = &mut next.components[b.component - 1].0;
        if b.row > parts.len() {
            parts.push(1);
        } else {
            parts[b.row - 1] += 1;
        }
        Ok(next)
    }

    pub fn remove_box(&self, b: &BoxCoord) -> Result<Multipartition> {
        if !self.is_removable(b) {
            return Err(Error::NotRemovable(*b));
        }
        let mut next = self.clone();
        let parts = &mut next.components[b.component - 1].0;
        parts[b.row - 1] -= 1;
        if parts[b.row - 1] == 0 {
            parts.pop();
        }
        Ok(next)
    }

    /// Parses a nested integer array such as `[[2,1],[1]]`.
    pub fn parse(text: &str) -> Result<Self> {
        let raw: Vec<Vec<i64>> =
            serde_json::from_str(text).map_err(|err| Error::Parse(err.to_string()))?;
        Self::from_raw(raw)
    }

    /// Parses and checks the component count against `level`.
    pub fn parse_with_level(text: &str, level: usize) -> Result<Self> {
        let mp = Self::parse(text)?;
        if mp.level() != level {
            return Err(Error::LevelMismatch {
                expected: level,
                found: mp.level(),
            });
        }
        Ok(mp)
    }

    fn from_raw(raw: Vec<Vec<i64>>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Parse(
                "a multipartition needs at least one component".into(),
            ));
        }
        raw.into_iter()
            .enumerate()
            .map(|(j, parts)| Partition::from_signed(j + 1, parts))
            .collect::<Result<Vec<_>>>()
            .map(Multipartition::new)
    }

    /// Canonical serialized form, e.g. `[[2,1],[]]`.
    pub fn format(&self) -> String {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|p| {
                let parts: Vec<String> = p.parts().iter().map(u32::to_string).collect();
                format!("[{}]", parts.join(","))
            })
            .collect();
        format!("[{}]", comps.join(","))
    }
}

fn filter_residue(boxes: Vec<BoxCoord>, c: &Multicharge, i: Option<usize>) -> Vec<BoxCoord> {
    match i {
        None => boxes,
        Some(i) => boxes
            .into_iter()
            .filter(|b| c.reduce(b.content() + c.s[b.component - 1]) == i)
            .collect(),
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl Serialize for Multipartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let raw: Vec<&[u32]> = self.components.iter().map(Partition::parts).collect();
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multipartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<Vec<i64>>::deserialize(deserializer)?;
        Multipartition::from_raw(raw).map_err(serde::de::Error::custom)
    }
}

/// All `l`-partitions of `n`, sorted lexicographically by serialized form.
pub fn enumerate(n: usize, level: usize) -> Vec<Multipartition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(level);
    fill(n, level, &mut current, &mut out);
    sort_canonical(&mut out);
    out
}

/// All `l`-partitions of rank at most `n`, grouped by rank.
pub fn enumerate_up_to(n: usize, level: usize) -> Vec<Vec<Multipartition>> {
    (0..=n).map(|k| enumerate(k, level)).collect()
}

fn fill(
    remaining: usize,
    level: usize,
    current: &mut Vec<Partition>,
    out: &mut Vec<Multipartition>,
) {
    if current.len() + 1 == level {
        for p in Partition::all_of(remaining) {
            current.push(p);
            out.push(Multipartition::new(current.clone()));
            current.pop();
        }
        return;
    }
    for k in 0..=remaining {
        for p in Partition::all_of(k) {
            current.push(p);
            fill(remaining - k, level, current, out);
            current.pop();
        }
    }
}

/// Sorts by the canonical serialized form.
pub fn sort_canonical(mps: &mut [Multipartition]) {
    mps.sort_by_cached_key(Multipartition::format);
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
    fn boxes_read_off_diagram() {
        assert!(Multipartition::empty(3).boxes().is_empty());
        assert_eq!(
            mp("[[2,1]]").boxes(),
            vec![
                BoxCoord::new(1, 1, 1),
                BoxCoord::new(1, 2, 1),
                BoxCoord::new(2, 1, 1)
            ]
        );
        assert_eq!(
            mp("[[1],[1]]").boxes(),
            vec![BoxCoord::new(1, 1, 1), BoxCoord::new(1, 1, 2)]
        );
        assert_eq!(
            mp("[[3,1],[2,2]]").boxes().len(),
            mp("[[3,1],[2,2]]").rank()
        );
    }

    #[test]
    fn residues() {
        assert_eq!(
            residue(&BoxCoord::new(1, 1, 1), &charge(2, &[0])).unwrap(),
            0
        );
        assert_eq!(
            residue(&BoxCoord::new(1, 3, 1), &charge(3, &[0])).unwrap(),
            2
        );
        assert_eq!(
            residue(&BoxCoord::new(2, 1, 2), &charge(2, &[0, 1])).unwrap(),
            0
        );
        assert_eq!(
            residue(&BoxCoord::new(5, 1, 1), &charge(3, &[-7])).unwrap(),
            1
        );
        assert!(matches!(
            residue(&BoxCoord::new(1, 1, 3), &charge(2, &[0, 1])),
            Err(Error::ComponentOutOfRange { .. })
        ));
    }

    #[test]
    fn removable_examples() {
        let c = charge(2, &[0]);
        assert_eq!(
            mp("[[2,2]]").removable_boxes(&c, None),
            vec![BoxCoord::new(2, 2, 1)]
        );
        assert_eq!(
            mp("[[1]]").removable_boxes(&c, Some(0)),
            vec![BoxCoord::new(1, 1, 1)]
        );
        assert!(mp("[[2,2]]").removable_boxes(&c, Some(1)).is_empty());
    }

    #[test]
    fn addable_examples() {
        let c = charge(2, &[0]);
        assert_eq!(
            mp("[[1]]").addable_boxes(&c, Some(1)),
            vec![BoxCoord::new(1, 2, 1), BoxCoord::new(2, 1, 1)]
        );
        assert_eq!(
            Multipartition::empty(2).addable_boxes(&charge(2, &[0, 1]), Some(0)),
            vec![BoxCoord::new(1, 1, 1)]
        );
        assert_eq!(
            mp("[[2,2]]").addable_boxes(&c, Some(0)),
            vec![BoxCoord::new(1, 3, 1), BoxCoord::new(3, 1, 1)]
        );
    }

    #[test]
    fn add_and_remove() {
        assert_eq!(
            Multipartition::empty(2)
                .add_box(&BoxCoord::new(1, 1, 1))
                .unwrap(),
            mp("[[1],[]]")
        );
        assert_eq!(
            mp("[[2,2]]").remove_box(&BoxCoord::new(2, 2, 1)).unwrap(),
            mp("[[2,1]]")
        );
        assert_eq!(
            mp("[[1]]").add_box(&BoxCoord::new(3, 1, 1)),
            Err(Error::NotAddable(BoxCoord::new(3, 1, 1)))
        );
        assert!(mp("[[2,2]]").remove_box(&BoxCoord::new(1, 2, 1)).is_err());
        assert!(mp("[[1]]").add_box(&BoxCoord::new(1, 2, 2)).is_err());
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(2, 1).len(), 2);
        assert_eq!(enumerate(2, 2).len(), 5);
        assert_eq!(enumerate(0, 3), vec![Multipartition::empty(3)]);
        let listed: Vec<String> = enumerate(2, 1).iter().map(Multipartition::format).collect();
        assert_eq!(listed, vec!["[[1,1]]", "[[2]]"]);
    }

    #[test]
    fn parse_and_format() {
        let parsed = mp("[[2,1],[1]]");
        assert_eq!(
            parsed,
            Multipartition::from_parts(vec![vec![2, 1], vec![1]]).unwrap()
        );
        assert_eq!(mp("[[ ]]"), Multipartition::empty(1));
        assert_eq!(mp(" [ [3, 1, 0], [] ] ").format(), "[[3,1],[]]");
        assert!(matches!(
            Multipartition::parse("[[1,2]]"),
            Err(Error::NotDecreasing { .. })
        ));
        assert!(matches!(
            Multipartition::parse("[[1,-1]]"),
            Err(Error::NegativePart { .. })
        ));
        assert!(matches!(
            Multipartition::parse("[[1,0,1]]"),
            Err(Error::NotDecreasing { .. })
        ));
        assert!(matches!(
            Multipartition::parse("[[1]"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(Multipartition::parse("[]"), Err(Error::Parse(_))));
        assert_eq!(
            Multipartition::parse_with_level("[[1]]", 2),
            Err(Error::LevelMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn multicharge_validation() {
        assert!(Multicharge::new(1, vec![0]).is_err());
        assert!(Multicharge::new(2, vec![]).is_err());
        let c = Multicharge::from_json(r#"{"e": 2, "s": [0,1]}"#).unwrap();
        assert_eq!((c.e(), c.level()), (2, 2));
    }
}
