//! Machine-readable verification reports.
//!
//! Every verifier emits a [`VerificationReport`] with the same envelope:
//! context, check name, three-valued verdict, failure witnesses, a
//! check-specific `tables` payload, optional timing, and an explicit
//! characteristic-zero marker. A report claiming success carries zero
//! witnesses.
//!
//! Exact integers (multiplicities, dimensions, ranks) serialize as
//! decimal strings so that arbitrary-precision values survive JSON.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bott::{CohomologyTable, GrassContext};
use crate::partition::Partition;
use crate::tilting::ExteriorSequence;

/// Serde adapter: `BigInt` as a decimal string.
pub mod bigint {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse::<BigInt>()
            .map_err(|e| D::Error::custom(format!("bad integer literal {text:?}: {e}")))
    }
}

/// Serde adapter: `Vec<BigInt>` as decimal strings.
pub mod bigint_vec {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&v.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Vec<BigInt>, D::Error> {
        let texts = Vec::<String>::deserialize(deserializer)?;
        texts
            .into_iter()
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|e| D::Error::custom(format!("bad integer literal {t:?}: {e}")))
            })
            .collect()
    }
}

/// Serde adapter: matrix of `BigInt` as decimal strings.
pub mod bigint_matrix {
    use num_bigint::BigInt;
    use serde::de::Error as _;
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        values: &[Vec<BigInt>],
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(values.len()))?;
        for row in values {
            let row: Vec<String> = row.iter().map(BigInt::to_string).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Vec<Vec<BigInt>>, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        rows.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|t| {
                        t.parse::<BigInt>().map_err(|e| {
                            D::Error::custom(format!("bad integer literal {t:?}: {e}"))
                        })
                    })
                    .collect()
            })
            .collect()
    }
}

/// Three-valued check outcome.
///
/// `OutOfScope` marks questions the characteristic-zero engine cannot
/// decide (e.g. anything genuinely characteristic-p); it is distinct from
/// failure so that "true in characteristic 0" is never silently promoted
/// to "true always".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    Failed,
    OutOfScope,
}

impl Verdict {
    pub fn from_success(ok: bool) -> Self {
        if ok {
            Verdict::Verified
        } else {
            Verdict::Failed
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified)
    }
}

/// A concrete object demonstrating a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// An ordered summand pair with non-vanishing higher cohomology.
    ExtPair {
        source: ExteriorSequence,
        target: ExteriorSequence,
        table: CohomologyTable,
    },
    /// A dual-sequence/partition pair with non-vanishing higher cohomology.
    Prop3Case {
        sequence: ExteriorSequence,
        gamma: Partition,
        table: CohomologyTable,
    },
    /// A box partition whose exterior product breaks the generation order.
    GenerationCase {
        alpha: Partition,
        #[serde(with = "bigint")]
        coefficient: BigInt,
        not_smaller: Vec<Partition>,
    },
    /// Support of the decomposition differs from the expected box.
    SupportMismatch {
        missing: Vec<Partition>,
        extra: Vec<Partition>,
    },
    /// A named sub-check of the fixed Grass(2,4) example went wrong.
    ExampleCase {
        detail: String,
        table: CohomologyTable,
    },
}

/// Common envelope for all verifier outputs; `P` is the check-specific
/// payload under `tables`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport<P> {
    pub context: GrassContext,
    pub check: String,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub tables: P,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub characteristic: String,
}

impl<P> VerificationReport<P> {
    pub fn new(
        context: GrassContext,
        check: &str,
        verdict: Verdict,
        witnesses: Vec<Witness>,
        tables: P,
        elapsed_ms: Option<u64>,
    ) -> Self {
        debug_assert!(
            !verdict.is_verified() || witnesses.is_empty(),
            "a verified report must carry no witnesses"
        );
        VerificationReport {
            context,
            check: check.to_owned(),
            verdict,
            witnesses,
            tables,
            elapsed_ms,
            characteristic: "0".to_owned(),
        }
    }

    /// Drops wall-clock data, e.g. for byte-reproducible output.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

/// The sections of an aggregate run. The fixed `Grass(2,4)` example is
/// present only when the context matches it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateChecks {
    pub ext_vanishing: VerificationReport<crate::tilting::ExtVanishingTables>,
    pub prop3_sweep: VerificationReport<crate::tilting::Prop3SweepTables>,
    pub generation_order: VerificationReport<crate::tilting::GenerationTables>,
    pub kapranov_support: VerificationReport<crate::tilting::KapranovTables>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub example_grass_2_4: Option<VerificationReport<crate::tilting::Example24Tables>>,
}

/// One self-contained document holding every check for a context, with
/// provenance (library version) and the characteristic-zero disclaimer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateReport {
    pub library_version: String,
    pub characteristic: String,
    pub disclaimer: String,
    pub context: GrassContext,
    pub checks: AggregateChecks,
}

impl AggregateReport {
    pub fn all_verified(&self) -> bool {
        let c = &self.checks;
        c.ext_vanishing.verdict.is_verified()
            && c.prop3_sweep.verdict.is_verified()
            && c.generation_order.verdict.is_verified()
            && c.kapranov_support.verdict.is_verified()
            && c.example_grass_2_4
                .as_ref()
                .is_none_or(|r| r.verdict.is_verified())
    }

    /// Drops wall-clock data from every section.
    pub fn without_timing(mut self) -> Self {
        self.checks.ext_vanishing.elapsed_ms = None;
        self.checks.prop3_sweep.elapsed_ms = None;
        self.checks.generation_order.elapsed_ms = None;
        self.checks.kapranov_support.elapsed_ms = None;
        if let Some(example) = self.checks.example_grass_2_4.as_mut() {
            example.elapsed_ms = None;
        }
        self
    }
}
