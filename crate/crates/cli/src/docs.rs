//! Document shapes for the calculator subcommands. The verifier commands
//! reuse the report types from the core crate directly.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use grasstilt_core::{
    CohomologyTable, ExteriorSequence, GrassContext, Partition, PartitionBox, VirtualSchurSum,
};

#[derive(Debug, Serialize, Deserialize)]
pub struct BoxDoc {
    pub rows: u32,
    pub cols: u32,
    pub count: usize,
    pub partitions: Vec<Partition>,
}

impl BoxDoc {
    pub fn new(bx: PartitionBox) -> Self {
        let partitions = bx.enumerate();
        BoxDoc {
            rows: bx.rows,
            cols: bx.cols,
            count: partitions.len(),
            partitions,
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LrDoc {
    pub a: Partition,
    pub b: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_bound: Option<u32>,
    pub product: VirtualSchurSum,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DimDoc {
    pub partition: Partition,
    pub rank: u32,
    #[serde(with = "grasstilt_core::report::bigint")]
    pub dimension: BigInt,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BottDoc {
    pub context: GrassContext,
    pub weight: Vec<i64>,
    pub table: CohomologyTable,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SummandsDoc {
    pub context: GrassContext,
    pub count: usize,
    pub sequences: Vec<ExteriorSequence>,
    #[serde(with = "grasstilt_core::report::bigint_vec")]
    pub ranks: Vec<BigInt>,
    #[serde(with = "grasstilt_core::report::bigint")]
    pub total_rank: BigInt,
}
