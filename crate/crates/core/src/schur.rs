//! Character-level Schur calculus.
//!
//! Everything here lives in the character ring: a tensor product of Schur
//! functors is represented by the multiset of its irreducible factors (a
//! [`VirtualSchurSum`]), never by an actual filtration. Multiplicities
//! are arbitrary-precision integers, so verdicts cannot be corrupted by
//! overflow.
//!
//! Littlewood-Richardson products are computed by two independent
//! routes. [`lr_expand`] goes through the Jacobi-Trudi determinant and
//! the row Pieri rule; [`lr_coefficient_oracle`] counts lattice-word skew
//! tableaux directly. The test suite holds the two against each other on
//! every pair of small partitions.
//!
//! Rank truncation: a partition with more than `n` rows is the zero
//! functor on a rank-`n` space. Truncation is applied after every single
//! multiplication step, which is sound because adding boxes never
//! shortens a partition.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;
use crate::Error;

/// Integer-multiplicity formal sum of partitions, optionally truncated to
/// partitions with at most `rank_bound` rows.
///
/// Invariants: no stored zero multiplicities; when a rank bound is set,
/// no stored partition exceeds it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualSchurSum {
    terms: BTreeMap<Partition, BigInt>,
    rank_bound: Option<u32>,
}

impl VirtualSchurSum {
    pub fn zero(rank_bound: Option<u32>) -> Self {
        VirtualSchurSum {
            terms: BTreeMap::new(),
            rank_bound,
        }
    }

    /// The sum `1 * L_()`, the unit of the tensor product.
    pub fn unit(rank_bound: Option<u32>) -> Self {
        Self::from_partition(Partition::empty(), rank_bound)
    }

    pub fn from_partition(p: Partition, rank_bound: Option<u32>) -> Self {
        let mut sum = Self::zero(rank_bound);
        sum.add_term(p, BigInt::one());
        sum
    }

    pub fn rank_bound(&self) -> Option<u32> {
        self.rank_bound
    }

    /// Adds `mult * L_p`, cancelling to zero and enforcing the rank bound.
    pub fn add_term(&mut self, p: Partition, mult: BigInt) {
        use std::collections::btree_map::Entry;
        if mult.is_zero() {
            return;
        }
        if let Some(n) = self.rank_bound {
            if p.len() as u32 > n {
                return;
            }
        }
        match self.terms.entry(p) {
            Entry::Vacant(slot) => {
                slot.insert(mult);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += mult;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &VirtualSchurSum, scale: &BigInt) {
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c * scale);
        }
    }

    pub fn coefficient(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in descending lexicographic order (the serialization order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Partitions with nonzero multiplicity, ascending.
    pub fn support(&self) -> Vec<Partition> {
        self.terms.keys().cloned().collect()
    }

    /// `sum of mult * schur_dim(p, n)` over all terms.
    pub fn total_dimension(&self, n: u32) -> BigInt {
        self.terms.iter().map(|(p, c)| c * schur_dim(p, n)).sum()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    partition: Partition,
    #[serde(with = "crate::report::bigint")]
    multiplicity: BigInt,
}

impl Serialize for VirtualSchurSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.terms_desc().map(|(p, c)| TermRecord {
            partition: p.clone(),
            multiplicity: c.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for VirtualSchurSum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut sum = VirtualSchurSum::zero(None);
        for rec in records {
            if rec.multiplicity.is_zero() {
                return Err(D::Error::custom("zero multiplicity in Schur sum"));
            }
            sum.add_term(rec.partition, rec.multiplicity);
        }
        Ok(sum)
    }
}

/// Littlewood-Richardson coefficient `c^g_{a,b}` by direct enumeration of
/// skew tableaux of shape `g/a` with content `b`.
///
/// A filling counts when it is semistandard (rows weakly increase, columns
/// strictly increase) and its reverse reading word — rows top to bottom,
/// each row right to left — is a lattice word. Returns 0 when `a` does not
/// fit inside `g` or the sizes do not match.
pub fn lr_coefficient_oracle(a: &Partition, b: &Partition, g: &Partition) -> u64 {
    if a.size() + b.size() != g.size() || !g.contains(a) {
        return 0;
    }
    if b.is_empty() {
        return 1; // g == a, empty filling
    }

    // skew cells in reverse reading order
    let mut cells = Vec::new();
    for r in 0..g.len() {
        for c in (a.part(r)..g.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }

    let letters = b.len();
    let mut grid: Vec<Vec<u32>> = g.parts().iter().map(|&p| vec![0u32; p as usize]).collect();
    let mut counts = vec![0u32; letters];

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        a: &Partition,
        b: &Partition,
        g: &Partition,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for x in 1..=counts.len() as u32 {
            let xi = (x - 1) as usize;
            // content cap
            if counts[xi] >= b.part(xi) {
                continue;
            }
            // lattice condition on the prefix read so far
            if x > 1 && counts[xi - 1] <= counts[xi] {
                continue;
            }
            // row: weakly increasing left to right (right neighbor is filled)
            if ((c + 1) as u32) < g.part(r) && x > grid[r][c + 1] {
                continue;
            }
            // column: strictly increasing downwards, when the cell above is skew
            if r > 0 && (c as u32) >= a.part(r - 1) && x <= grid[r - 1][c] {
                continue;
            }
            grid[r][c] = x;
            counts[xi] += 1;
            total += rec(idx + 1, cells, grid, counts, a, b, g);
            counts[xi] -= 1;
            grid[r][c] = 0;
        }
        total
    }

    rec(0, &cells, &mut grid, &mut counts, a, b, g)
}

/// Row Pieri rule: all ways of adding `boxes` boxes to `a`, no two in the
/// same column (horizontal strips). Each result has multiplicity one.
pub fn pieri_row(a: &Partition, boxes: u32, rank_bound: Option<u32>) -> Vec<Partition> {
    fn rec(
        i: usize,
        rows: usize,
        remaining: u32,
        a: &Partition,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
        rank_bound: Option<u32>,
    ) {
        if i == rows {
            if remaining == 0 {
                let parts: Vec<u32> = cur.iter().copied().take_while(|&v| v > 0).collect();
                if rank_bound.is_none_or(|n| parts.len() as u32 <= n) {
                    out.push(Partition::from_canonical(parts));
                }
            }
            return;
        }
        let lo = a.part(i);
        let cap = if i == 0 { u32::MAX } else { a.part(i - 1) };
        let hi = lo.saturating_add(remaining).min(cap);
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(i + 1, rows, remaining - (v - lo), a, cur, out, rank_bound);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        0,
        a.len() + 1,
        boxes,
        a,
        &mut Vec::new(),
        &mut out,
        rank_bound,
    );
    out
}

/// Column Pieri rule: all ways of adding `boxes` boxes to `a`, no two in
/// the same row (vertical strips). Each result has multiplicity one.
pub fn pieri_column(a: &Partition, boxes: u32, rank_bound: Option<u32>) -> Vec<Partition> {
    fn emit(cur: &[u32], tail_ones: u32, out: &mut Vec<Partition>, rank_bound: Option<u32>) {
        let mut parts: Vec<u32> = cur.to_vec();
        parts.extend(std::iter::repeat_n(1, tail_ones as usize));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if rank_bound.is_none_or(|n| parts.len() as u32 <= n) {
            out.push(Partition::from_canonical(parts));
        }
    }
    fn rec(
        i: usize,
        remaining: u32,
        prev: u32,
        a: &Partition,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
        rank_bound: Option<u32>,
    ) {
        if i == a.len() {
            // rows past the diagram each take exactly one new box
            if remaining == 0 || prev >= 1 {
                emit(cur, remaining, out, rank_bound);
            }
            return;
        }
        // choosing the larger value first keeps output lex-descending
        for add in [1u32, 0] {
            if add > remaining {
                continue;
            }
            let v = a.part(i) + add;
            if v > prev {
                continue;
            }
            cur.push(v);
            rec(i + 1, remaining - add, v, a, cur, out, rank_bound);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, boxes, u32::MAX, a, &mut Vec::new(), &mut out, rank_bound);
    out
}

/// Calls `f` with every permutation of `{0, .., k-1}` and its sign.
fn for_each_permutation_signed<F: FnMut(&[usize], i8)>(k: usize, mut f: F) {
    // Heap's algorithm; every step is a single transposition.
    let mut perm: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    let mut sign: i8 = 1;
    f(&perm, sign);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            f(&perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Full Littlewood-Richardson product `L_a (x) L_b = sum_g c^g_{a,b} L_g`.
///
/// Computed through the Jacobi-Trudi determinant of `b`: each permutation
/// contributes a signed chain of row Pieri multiplications. The signed
/// terms cancel down to the genuine product, so the result is independent
/// of the tableau machinery in [`lr_coefficient_oracle`].
pub fn lr_expand(a: &Partition, b: &Partition, rank_bound: Option<u32>) -> VirtualSchurSum {
    let mut result = VirtualSchurSum::zero(rank_bound);
    if let Some(n) = rank_bound {
        if a.len() as u32 > n || b.len() as u32 > n {
            return result;
        }
    }
    let k = b.len();
    if k == 0 {
        result.add_term(a.clone(), BigInt::one());
        return result;
    }
    for_each_permutation_signed(k, |perm, sign| {
        let mut exps = Vec::with_capacity(k);
        for (i, &p) in perm.iter().enumerate() {
            let e = i64::from(b.part(i)) + p as i64 - i as i64;
            if e < 0 {
                return; // h_{negative} = 0 kills the whole product
            }
            exps.push(e as u32);
        }
        let mut state: BTreeMap<Partition, BigInt> = BTreeMap::new();
        state.insert(a.clone(), BigInt::one());
        for &e in exps.iter().filter(|&&e| e > 0) {
            let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
            for (p, c) in &state {
                for q in pieri_row(p, e, rank_bound) {
                    *next.entry(q).or_insert_with(BigInt::zero) += c;
                }
            }
            state = next;
        }
        let sign = BigInt::from(sign);
        for (p, c) in state {
            result.add_term(p, c * &sign);
        }
    });
    debug_assert!(result.is_nonnegative(), "LR product went negative");
    result
}

/// Product of two Schur sums, expanding every pair of terms.
pub fn product(
    x: &VirtualSchurSum,
    y: &VirtualSchurSum,
    rank_bound: Option<u32>,
) -> VirtualSchurSum {
    let mut result = VirtualSchurSum::zero(rank_bound);
    for (p, cp) in x.terms() {
        for (q, cq) in y.terms() {
            let expanded = lr_expand(p, q, rank_bound);
            result.add_scaled(&expanded, &(cp * cq));
        }
    }
    result
}

/// Character of `Wedge^{u_1} E (x) ... (x) Wedge^{u_k} E` for a rank-`n`
/// space `E`, by iterated column Pieri multiplication with truncation at
/// every step.
///
/// Degrees above `n` are rejected; the caller decides what a zero factor
/// means.
pub fn exterior_product_character(useq: &[u32], n: u32) -> Result<VirtualSchurSum, Error> {
    for &u in useq {
        if u > n {
            return Err(Error::ExteriorDegree { degree: u, rank: n });
        }
    }
    let mut sum = VirtualSchurSum::unit(Some(n));
    for &u in useq.iter().filter(|&&u| u > 0) {
        let mut next = VirtualSchurSum::zero(Some(n));
        for (p, c) in sum.terms() {
            for q in pieri_column(p, u, Some(n)) {
                next.add_term(q, c.clone());
            }
        }
        sum = next;
    }
    Ok(sum)
}

/// Dimension of the Schur module `L_a` of a rank-`n` space, by the
/// hook-content formula. Zero when `a` has more than `n` rows.
///
/// The quotient of the two cell products is exact; the division is
/// checked.
pub fn schur_dim(a: &Partition, n: u32) -> BigInt {
    if a.len() as u32 > n {
        return BigInt::zero();
    }
    let conj = a.conjugate();
    let mut numerator = BigInt::one();
    let mut denominator = BigInt::one();
    for (r, c) in a.cells() {
        numerator *= BigInt::from(i64::from(n) + c as i64 - r as i64);
        let arm = a.part(r) as i64 - c as i64 - 1;
        let leg = conj.part(c) as i64 - r as i64 - 1;
        denominator *= BigInt::from(arm + leg + 1);
    }
    let (quotient, remainder) = num_integer::Integer::div_rem(&numerator, &denominator);
    assert!(remainder.is_zero(), "hook-content division must be exact");
    quotient
}
