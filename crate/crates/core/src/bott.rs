//! Characteristic-zero cohomology of homogeneous bundles on `Grass(l, m)`.
//!
//! A bundle `L_gamma(Q) (x) L_beta(R) (x) (det Q)^{-k}` corresponds to a
//! weight in `Z^m` split into a Q-block (first `l` entries) and an
//! R-block (last `m - l` entries), each weakly decreasing. Its cohomology
//! is decided by the rho-shift: add `rho = (m-1, ..., 1, 0)`; a repeated
//! entry kills everything, otherwise sorting places a single irreducible
//! in the degree given by the inversion count. Weights that are dominant
//! across the whole vector short-circuit to degree zero (Kempf
//! vanishing), which the general path reproduces.
//!
//! Conventions are anchored by the global-sections identity: for a
//! partition `gamma` with at most `l` rows, `L_gamma(Q)` has cohomology
//! concentrated in degree zero with dimension `schur_dim(gamma, m)`. The
//! invariant suite pins every other choice against this anchor and
//! against the closed form for line bundles on projective space.
//!
//! Output weights are highest weights for the full general linear group.
//! Whether one reads them against the ambient space or its dual is a
//! presentation choice with no effect at the dimension level; tables here
//! use the convention in which `H^0` of `L_gamma(Q)` is the irreducible
//! with highest weight `gamma` itself.
//!
//! Everything here is exact integer arithmetic. Verdicts are valid in
//! characteristic zero only.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::partition::Partition;
use crate::schur::schur_dim;
use crate::Error;

/// The Grassmannian `Grass(l, m)` of `l`-dimensional subspaces of an
/// `m`-dimensional space. The tautological quotient `Q` has rank `l`, the
/// tautological subbundle `R` has rank `m - l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GrassContext {
    l: u32,
    m: u32,
}

impl GrassContext {
    pub fn new(l: u32, m: u32) -> Result<Self, Error> {
        if l == 0 || l >= m {
            return Err(Error::InvalidContext { l, m });
        }
        Ok(GrassContext { l, m })
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q_rank(&self) -> u32 {
        self.l
    }

    pub fn r_rank(&self) -> u32 {
        self.m - self.l
    }

    /// Dimension of the variety, `l * (m - l)`.
    pub fn dim(&self) -> u32 {
        self.l * (self.m - self.l)
    }
}

impl fmt::Display for GrassContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grass({},{})", self.l, self.m)
    }
}

impl<'de> Deserialize<'de> for GrassContext {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            l: u32,
            m: u32,
        }
        let raw = Raw::deserialize(deserializer)?;
        GrassContext::new(raw.l, raw.m).map_err(D::Error::custom)
    }
}

/// A `GL(m)` weight split into Q- and R-blocks, each weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLWeight {
    q_block: Vec<i64>,
    r_block: Vec<i64>,
}

impl GLWeight {
    /// Validates length `m` and per-block ordering against the context.
    pub fn new(ctx: &GrassContext, entries: Vec<i64>) -> Result<Self, Error> {
        if entries.len() != ctx.m() as usize {
            return Err(Error::WeightLength {
                got: entries.len(),
                expected: ctx.m() as usize,
            });
        }
        let (q, r) = entries.split_at(ctx.l() as usize);
        for block in [q, r] {
            if block.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::WeightBlockOrder(block.to_vec()));
            }
        }
        Ok(GLWeight {
            q_block: q.to_vec(),
            r_block: r.to_vec(),
        })
    }

    pub fn q_block(&self) -> &[i64] {
        &self.q_block
    }

    pub fn r_block(&self) -> &[i64] {
        &self.r_block
    }

    pub fn entries(&self) -> Vec<i64> {
        let mut v = self.q_block.clone();
        v.extend_from_slice(&self.r_block);
        v
    }

    /// Dominant for the full group: weakly decreasing across both blocks.
    pub fn is_dominant(&self) -> bool {
        let within = |b: &[i64]| b.windows(2).all(|w| w[0] >= w[1]);
        let junction = match (self.q_block.last(), self.r_block.first()) {
            (Some(&a), Some(&b)) => a >= b,
            _ => true,
        };
        within(&self.q_block) && within(&self.r_block) && junction
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_block = |b: &[i64]| {
            b.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "({}|{})",
            fmt_block(&self.q_block),
            fmt_block(&self.r_block)
        )
    }
}

/// The bundle `L_gamma(Q) (x) (det Q)^{-det_twist} (x) L_{r_part}(R)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedSchurBundle {
    pub gamma: Partition,
    pub det_twist: i64,
    #[serde(default)]
    pub r_part: Partition,
}

impl TwistedSchurBundle {
    pub fn new(gamma: Partition, det_twist: i64) -> Self {
        TwistedSchurBundle {
            gamma,
            det_twist,
            r_part: Partition::empty(),
        }
    }

    pub fn with_r_part(gamma: Partition, det_twist: i64, r_part: Partition) -> Self {
        TwistedSchurBundle {
            gamma,
            det_twist,
            r_part,
        }
    }

    /// Strips full columns of height `l` out of `gamma` into the twist,
    /// e.g. `(1,1)` with twist 1 on `Grass(2, m)` becomes `()` with
    /// twist 0. The underlying bundle is unchanged.
    pub fn normalized(&self, l: u32) -> Self {
        let depth = if self.gamma.len() as u32 == l {
            self.gamma.part(l as usize - 1)
        } else {
            0
        };
        if depth == 0 {
            return self.clone();
        }
        let parts: Vec<u32> = self.gamma.parts().iter().map(|&p| p - depth).collect();
        TwistedSchurBundle {
            gamma: Partition::new(parts).expect("subtracting a constant keeps the order"),
            det_twist: self.det_twist - i64::from(depth),
            r_part: self.r_part.clone(),
        }
    }

    /// The weight of the bundle: Q-block `gamma_i - det_twist` (padded to
    /// `l`), R-block `r_part` (padded to `m - l`).
    pub fn weight(&self, ctx: &GrassContext) -> Result<GLWeight, Error> {
        if self.gamma.len() as u32 > ctx.l() {
            return Err(Error::TooManyRows(self.gamma.parts().to_vec(), ctx.l()));
        }
        if self.r_part.len() as u32 > ctx.r_rank() {
            return Err(Error::TooManyRows(
                self.r_part.parts().to_vec(),
                ctx.r_rank(),
            ));
        }
        let mut entries = Vec::with_capacity(ctx.m() as usize);
        for i in 0..ctx.l() as usize {
            entries.push(i64::from(self.gamma.part(i)) - self.det_twist);
        }
        for i in 0..ctx.r_rank() as usize {
            entries.push(i64::from(self.r_part.part(i)));
        }
        GLWeight::new(ctx, entries)
    }
}

/// Weight of a twisted Schur bundle; see [`TwistedSchurBundle::weight`].
pub fn bundle_weight(ctx: &GrassContext, bundle: &TwistedSchurBundle) -> Result<GLWeight, Error> {
    bundle.weight(ctx)
}

/// A dominant `GL(m)` weight: weakly decreasing integer vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self, Error> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::WeightBlockOrder(entries));
        }
        Ok(DominantWeight(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Dimension of the irreducible with this highest weight. Tensoring
    /// by a determinant power preserves dimension, so the weight is
    /// shifted to a genuine partition first.
    pub fn dimension(&self) -> BigInt {
        let n = self.0.len() as u32;
        let shift = self.0.last().copied().unwrap_or(0);
        let parts: Vec<u32> = self
            .0
            .iter()
            .map(|&v| u32::try_from(v - shift).expect("shifted entries are non-negative"))
            .collect();
        let partition = Partition::new(parts).expect("dominant weights shift to partitions");
        schur_dim(&partition, n)
    }
}

impl Serialize for DominantWeight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

impl<'de> Deserialize<'de> for DominantWeight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<i64>::deserialize(deserializer)?;
        DominantWeight::new(entries).map_err(D::Error::custom)
    }
}

/// Cohomology of a (virtual) homogeneous bundle: for each degree, a
/// formal integer combination of dominant `GL(m)` weights.
///
/// Zero rows are never stored; per-degree dimensions are exact.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomologyTable {
    degrees: BTreeMap<u32, BTreeMap<DominantWeight, BigInt>>,
}

impl CohomologyTable {
    pub fn zero() -> Self {
        CohomologyTable::default()
    }

    pub fn add_weight(&mut self, degree: u32, weight: DominantWeight, mult: BigInt) {
        use std::collections::btree_map::Entry;
        if mult.is_zero() {
            return;
        }
        let row = self.degrees.entry(degree).or_default();
        match row.entry(weight) {
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
        if self.degrees.get(&degree).is_some_and(BTreeMap::is_empty) {
            self.degrees.remove(&degree);
        }
    }

    pub fn add_scaled(&mut self, other: &CohomologyTable, scale: &BigInt) {
        for (&degree, row) in &other.degrees {
            for (w, c) in row {
                self.add_weight(degree, w.clone(), c * scale);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Degrees with a nonzero entry, ascending.
    pub fn nonzero_degrees(&self) -> Vec<u32> {
        self.degrees.keys().copied().collect()
    }

    pub fn weights_at(&self, degree: u32) -> Option<&BTreeMap<DominantWeight, BigInt>> {
        self.degrees.get(&degree)
    }

    /// Exact dimension in one degree (zero when the row is absent).
    pub fn dimension(&self, degree: u32) -> BigInt {
        self.degrees
            .get(&degree)
            .map(|row| row.iter().map(|(w, c)| c * w.dimension()).sum())
            .unwrap_or_else(BigInt::zero)
    }

    /// Map degree -> exact dimension over all nonzero rows.
    pub fn dimensions(&self) -> BTreeMap<u32, BigInt> {
        self.degrees
            .keys()
            .map(|&d| (d, self.dimension(d)))
            .collect()
    }

    /// True when every degree in `lo..=hi` is zero.
    pub fn vanishes_in(&self, lo: u32, hi: u32) -> bool {
        self.degrees.keys().all(|&d| d < lo || d > hi)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightRecord {
    weight: DominantWeight,
    #[serde(with = "crate::report::bigint")]
    multiplicity: BigInt,
}

#[derive(Serialize, Deserialize)]
struct DegreeRecord {
    dimension: String,
    weights: Vec<WeightRecord>,
}

impl Serialize for CohomologyTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<u32, DegreeRecord> = self
            .degrees
            .iter()
            .map(|(&degree, row)| {
                let weights = row
                    .iter()
                    .map(|(w, c)| WeightRecord {
                        weight: w.clone(),
                        multiplicity: c.clone(),
                    })
                    .collect();
                (
                    degree,
                    DegreeRecord {
                        dimension: self.dimension(degree).to_string(),
                        weights,
                    },
                )
            })
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CohomologyTable {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        // JSON object keys are strings; parsing them here keeps the table
        // readable from buffered deserializers (e.g. inside tagged enums)
        let map = BTreeMap::<String, DegreeRecord>::deserialize(deserializer)?;
        let mut table = CohomologyTable::zero();
        for (key, record) in map {
            let degree = key
                .parse::<u32>()
                .map_err(|e| D::Error::custom(format!("bad degree key {key:?}: {e}")))?;
            for rec in record.weights {
                table.add_weight(degree, rec.weight, rec.multiplicity);
            }
            let recomputed = table.dimension(degree).to_string();
            if recomputed != record.dimension {
                return Err(D::Error::custom(format!(
                    "degree {degree} claims dimension {} but weights give {recomputed}",
                    record.dimension
                )));
            }
        }
        Ok(table)
    }
}

/// Cohomology of the homogeneous bundle with weight `w` on `ctx`, by the
/// rho-shift. The output has at most one nonzero degree, which lies in
/// `[0, dim]`.
pub fn bott(ctx: &GrassContext, w: &GLWeight) -> CohomologyTable {
    let m = ctx.m() as usize;
    debug_assert_eq!(w.q_block().len() + w.r_block().len(), m);

    let mut table = CohomologyTable::zero();

    // Kempf shortcut: dominant weights induce in degree zero untouched.
    if w.is_dominant() {
        let weight = DominantWeight::new(w.entries()).expect("dominant by the check above");
        table.add_weight(0, weight, BigInt::one());
        return table;
    }

    let rho = |i: usize| (m - 1 - i) as i64;
    let shifted: Vec<i64> = w
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &v)| v + rho(i))
        .collect();

    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return table; // singular: everything cancels
    }

    // length of the sorting permutation
    let mut inversions = 0u32;
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            if shifted[i] < shifted[j] {
                inversions += 1;
            }
        }
    }
    debug_assert!(inversions <= ctx.dim());

    let dominant: Vec<i64> = sorted
        .iter()
        .enumerate()
        .map(|(i, &v)| v - rho(i))
        .collect();
    let weight = DominantWeight::new(dominant).expect("sorted strictly, so dominant after unshift");
    table.add_weight(inversions, weight, BigInt::one());
    table
}

/// Closed-form cohomology of the line bundle `O(d)` on projective space
/// `P^{n-1}` (so `n >= 2` is the dimension of the ambient space):
/// sections of dimension `binomial(d+n-1, n-1)` in degree 0 for `d >= 0`,
/// top cohomology of dimension `binomial(-d-1, n-1)` in degree `n-1` for
/// `d <= -n`, and nothing at all in the band `-n < d < 0`.
///
/// Dimensions come from the binomial formulas, independently of the
/// hook-content machinery; the table's derived dimension is checked
/// against them.
pub fn projective_line_bundle_oracle(n: u32, d: i64) -> CohomologyTable {
    assert!(n >= 2, "projective space needs ambient dimension >= 2");
    let mut table = CohomologyTable::zero();
    let n_i64 = i64::from(n);
    if d >= 0 {
        let mut entries = vec![0i64; n as usize];
        entries[0] = d;
        let weight = DominantWeight::new(entries).expect("decreasing");
        table.add_weight(0, weight, BigInt::one());
        let expected = num_integer::binomial(BigInt::from(d + n_i64 - 1), BigInt::from(n_i64 - 1));
        assert_eq!(
            table.dimension(0),
            expected,
            "sections of O({d}) on P^{}",
            n - 1
        );
    } else if d <= -n_i64 {
        let mut entries = vec![-1i64; n as usize];
        entries[n as usize - 1] = d + n_i64 - 1;
        let weight = DominantWeight::new(entries).expect("decreasing");
        table.add_weight(n - 1, weight, BigInt::one());
        let expected = num_integer::binomial(BigInt::from(-d - 1), BigInt::from(n_i64 - 1));
        assert_eq!(
            table.dimension(n - 1),
            expected,
            "top cohomology of O({d}) on P^{}",
            n - 1
        );
    }
    table
}

/// Multiplicity-weighted cohomology of a virtual combination of twisted
/// Schur bundles.
pub fn bundle_cohomology(
    ctx: &GrassContext,
    terms: &[(TwistedSchurBundle, BigInt)],
) -> Result<CohomologyTable, Error> {
    let mut table = CohomologyTable::zero();
    for (bundle, mult) in terms {
        let single = bott(ctx, &bundle.weight(ctx)?);
        table.add_scaled(&single, mult);
    }
    Ok(table)
}

/// The weight whose bundle is `E^dual (x) omega` for `E` the bundle of
/// weight `w`, with `omega = (det Q)^{-(m-l)} (x) (det R)^{l}` the
/// canonical bundle. Serre duality pairs degree `i` of `w` with degree
/// `dim - i` of this weight, at equal dimensions.
pub fn serre_dual_weight(ctx: &GrassContext, w: &GLWeight) -> GLWeight {
    let dual_block = |block: &[i64], twist: i64| -> Vec<i64> {
        block.iter().rev().map(|&v| -v + twist).collect()
    };
    let mut entries = dual_block(w.q_block(), -i64::from(ctx.r_rank()));
    entries.extend(dual_block(w.r_block(), i64::from(ctx.l())));
    GLWeight::new(ctx, entries).expect("reversed negated blocks stay ordered")
}
