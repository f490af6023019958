//! Partition arithmetic, orderings, and Young-diagram box enumeration.
//!
//! Partitions are kept in canonical form: weakly decreasing, strictly
//! positive parts, no trailing zeros. The empty partition is valid and is
//! the unit of most constructions. All operations here are pure functions
//! on immutable values.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// A partition in canonical form.
///
/// The derived total order is zero-padded lexicographic on the parts,
/// largest part first: `(2,1) > (2) > (1,1) > (1) > ()`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, stripping trailing zeros.
    ///
    /// Rejects sequences that are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Single-row partition `(u)`; empty when `u == 0`.
    pub fn row(u: u32) -> Self {
        if u == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![u] }
        }
    }

    /// Single-column partition `(1^u)`.
    pub fn column(u: u32) -> Self {
        Partition {
            parts: vec![1; u as usize],
        }
    }

    /// Full rectangle `(cols^rows)`; empty when either side is zero.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if rows == 0 || cols == 0 {
            Self::empty()
        } else {
            Partition {
                parts: vec![cols; rows as usize],
            }
        }
    }

    /// Internal constructor for parts already in canonical form.
    pub(crate) fn from_canonical(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes in the diagram.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// The `i`-th part (zero-indexed), zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram. Involutive.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 0..cols {
            let height = self.parts.iter().take_while(|&&p| p as usize > j).count();
            parts.push(height as u32);
        }
        Partition::from_canonical(parts)
    }

    /// Containment of Young diagrams (`other` fits inside `self`).
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// Row-major cells `(row, col)`, zero-indexed.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
    }

    /// Dominance order via prefix sums; requires equal sizes.
    pub fn dominance(&self, other: &Partition) -> Result<Dominance, Error> {
        if self.size() != other.size() {
            return Err(Error::DominanceSizeMismatch(self.size(), other.size()));
        }
        let rows = self.len().max(other.len());
        let (mut sum_a, mut sum_b) = (0u64, 0u64);
        let (mut ge, mut le) = (true, true);
        for i in 0..rows {
            sum_a += u64::from(self.part(i));
            sum_b += u64::from(other.part(i));
            ge &= sum_a >= sum_b;
            le &= sum_a <= sum_b;
        }
        Ok(match (ge, le) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Greater,
            (false, true) => Dominance::Less,
            (false, false) => Dominance::Incomparable,
        })
    }
}

impl Ord for Partition {
    /// Zero-padded lexicographic comparison, largest part first.
    fn cmp(&self, other: &Self) -> Ordering {
        let rows = self.len().max(other.len());
        for i in 0..rows {
            match self.part(i).cmp(&other.part(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated descending parts, e.g. `3,1`. The empty
    /// string and `()` denote the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "()" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in trimmed.split(',') {
            let value = piece
                .trim()
                .parse::<u32>()
                .map_err(|e| Error::PartitionLiteral {
                    literal: s.to_owned(),
                    reason: e.to_string(),
                })?;
            parts.push(value);
        }
        Partition::new(parts).map_err(|e| Error::PartitionLiteral {
            literal: s.to_owned(),
            reason: e.to_string(),
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.parts.iter())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Outcome of a dominance comparison between equal-size partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Equal,
    Greater,
    Incomparable,
}

/// The set of partitions with at most `rows` rows and `cols` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionBox {
    pub rows: u32,
    pub cols: u32,
}

impl PartitionBox {
    pub fn new(rows: u32, cols: u32) -> Self {
        PartitionBox { rows, cols }
    }

    pub fn contains(&self, p: &Partition) -> bool {
        p.len() as u32 <= self.rows && p.part(0) <= self.cols
    }

    /// Every partition in the box exactly once, lexicographically
    /// descending from the full rectangle down to the empty partition.
    pub fn enumerate(&self) -> Vec<Partition> {
        fn rec(rows_left: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rows_left > 0 {
                for p in (1..=max_part).rev() {
                    prefix.push(p);
                    rec(rows_left - 1, p, prefix, out);
                    prefix.pop();
                }
            }
            // stopping here is lex-smaller than any positive continuation
            out.push(Partition::from_canonical(prefix.clone()));
        }
        let mut out = Vec::new();
        rec(self.rows, self.cols, &mut Vec::new(), &mut out);
        out
    }

    /// Cardinality of the box, `binomial(rows + cols, rows)`.
    pub fn count(&self) -> BigInt {
        num_integer::binomial(
            BigInt::from(self.rows) + BigInt::from(self.cols),
            BigInt::from(self.rows),
        )
    }
}

impl fmt::Display for PartitionBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{})", self.rows, self.cols)
    }
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions_of_size(n: u32) -> Vec<Partition> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_canonical(prefix.clone()));
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Independent transpose: enumerate the cells, flip them, recount rows.
    fn conjugate_oracle(a: &Partition) -> Partition {
        let flipped: Vec<(usize, usize)> = a.cells().map(|(r, c)| (c, r)).collect();
        let rows = flipped.iter().map(|&(r, _)| r + 1).max().unwrap_or(0);
        let mut parts = vec![0u32; rows];
        for (r, _) in flipped {
            parts[r] += 1;
        }
        Partition::new(parts).unwrap()
    }

    #[test]
    fn new_strips_trailing_zeros() {
        assert_eq!(p(&[3, 1, 0, 0]), p(&[3, 1]));
        assert_eq!(p(&[0]), Partition::empty());
    }

    #[test]
    fn new_rejects_increasing() {
        assert!(matches!(
            Partition::new(vec![1, 3]),
            Err(Error::NotWeaklyDecreasing(_))
        ));
        assert!(matches!(
            Partition::new(vec![2, 0, 1]),
            Err(Error::NotWeaklyDecreasing(_))
        ));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), conjugate_oracle(&p(&[3, 1])));
    }

    #[test]
    fn conjugate_is_involution_up_to_size_ten() {
        for n in 0..=10 {
            for a in partitions_of_size(n) {
                assert_eq!(a.conjugate(), conjugate_oracle(&a), "transpose of {a}");
                assert_eq!(a.conjugate().conjugate(), a, "involution at {a}");
            }
        }
    }

    #[test]
    fn lex_order_examples() {
        assert!(p(&[2]) > p(&[1, 1]));
        assert!(p(&[2, 1]) > p(&[2]));
        assert_eq!(p(&[2, 1]).cmp(&p(&[2, 1])), Ordering::Equal);
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(p(&[2]).dominance(&p(&[1, 1])).unwrap(), Dominance::Greater);
        assert_eq!(p(&[1, 1]).dominance(&p(&[2])).unwrap(), Dominance::Less);
        assert_eq!(
            p(&[3, 1, 1, 1]).dominance(&p(&[2, 2, 2])).unwrap(),
            Dominance::Incomparable
        );
        assert_eq!(p(&[2, 1]).dominance(&p(&[2, 1])).unwrap(), Dominance::Equal);
        assert!(matches!(
            p(&[2]).dominance(&p(&[1])),
            Err(Error::DominanceSizeMismatch(2, 1))
        ));
    }

    #[test]
    fn box_enumeration_order_and_counts() {
        let listed = PartitionBox::new(2, 2).enumerate();
        let expected: Vec<Partition> =
            [vec![2, 2], vec![2, 1], vec![2], vec![1, 1], vec![1], vec![]]
                .into_iter()
                .map(|v| Partition::new(v).unwrap())
                .collect();
        assert_eq!(listed, expected);

        assert_eq!(
            PartitionBox::new(1, 3).enumerate(),
            vec![p(&[3]), p(&[2]), p(&[1]), Partition::empty()]
        );
        assert_eq!(
            PartitionBox::new(0, 5).enumerate(),
            vec![Partition::empty()]
        );

        for rows in 0..=6 {
            for cols in 0..=6 {
                let bx = PartitionBox::new(rows, cols);
                let listed = bx.enumerate();
                assert_eq!(BigInt::from(listed.len()), bx.count(), "{bx}");
                assert!(listed.iter().all(|q| bx.contains(q)));
                assert!(listed.windows(2).all(|w| w[0] > w[1]), "descending in {bx}");
            }
        }
    }

    #[test]
    fn conjugate_maps_box_onto_transposed_box() {
        for rows in 0..=5 {
            for cols in 0..=5 {
                let mut image: Vec<Partition> = PartitionBox::new(rows, cols)
                    .enumerate()
                    .iter()
                    .map(Partition::conjugate)
                    .collect();
                image.sort();
                image.dedup();
                let mut target = PartitionBox::new(cols, rows).enumerate();
                target.sort();
                assert_eq!(image, target);
            }
        }
    }

    #[test]
    fn partition_counts_match_euler() {
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(partitions_of_size(n as u32).len(), count, "p({n})");
        }
    }

    #[test]
    fn parse_literals() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("3,,1".parse::<Partition>().is_err());
    }

    #[test]
    fn serde_round_trip() {
        let a = p(&[3, 1]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[3,1]");
        assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), a);
        assert_eq!(
            serde_json::from_str::<Partition>("[]").unwrap(),
            Partition::empty()
        );
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
