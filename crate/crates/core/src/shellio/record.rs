use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::braided::{CheckOutcome, IdentityCheck};
use crate::ydclass::{Classification, DimensionRecord};

use super::HopfFileV1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    /// Fail if anything fails, skipped if everything was skipped, pass otherwise.
    pub fn combine<'a>(outcomes: impl IntoIterator<Item = &'a CheckOutcome>) -> CheckStatus {
        let mut any = false;
        let mut all_skipped = true;
        for o in outcomes {
            any = true;
            match o {
                CheckOutcome::Fail { .. } => return CheckStatus::Fail,
                CheckOutcome::Pass => all_skipped = false,
                CheckOutcome::Skipped { .. } => {}
            }
        }
        if any && all_skipped {
            CheckStatus::Skipped
        } else {
            CheckStatus::Pass
        }
    }

    pub fn from_bool(ok: bool) -> CheckStatus {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == CheckStatus::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub qybe: CheckStatus,
    pub e_r: CheckStatus,
    pub integral_cocomm: CheckStatus,
    pub h_simple: CheckStatus,
    pub divisibility: CheckStatus,
    pub dim_identity: CheckStatus,
}

impl CheckRecord {
    pub fn new(
        suite: &[IdentityCheck],
        classification: &Classification,
        divisibility: &[IdentityCheck],
        dim_identity: &[DimensionRecord],
    ) -> CheckRecord {
        let pick = |names: &[&str]| {
            CheckStatus::combine(suite.iter().filter(|c| names.contains(&c.name.as_str())).map(|c| &c.outcome))
        };
        CheckRecord {
            qybe: pick(&["qybe"]),
            e_r: pick(&["e_r_part1", "e_r_part2"]),
            integral_cocomm: pick(&["integral_cocommutative"]),
            h_simple: CheckStatus::from_bool(classification.blocks.iter().all(|b| b.h_simple)),
            divisibility: CheckStatus::combine(divisibility.iter().map(|c| &c.outcome)),
            dim_identity: CheckStatus::from_bool(dim_identity.iter().all(|r| r.holds)),
        }
    }

    pub fn any_failed(&self) -> bool {
        [
            self.qybe,
            self.e_r,
            self.integral_cocomm,
            self.h_simple,
            self.divisibility,
            self.dim_identity,
        ]
        .iter()
        .any(|s| s.is_fail())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRecord {
    pub block_dim: usize,
    pub coideal_dim: usize,
    pub nw_dim: usize,
    pub irreducible_dims: Vec<usize>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub count: usize,
    pub sum_dim_sq: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecordV1 {
    pub schema_version: u32,
    /// SHA-256 of the compact HopfFileV1 JSON of the input.
    pub input_digest: String,
    pub seed: u64,
    pub max_den: u64,
    /// Cyclotomic order of the field the pipeline ran over.
    pub field_order: u32,
    pub blocks: Vec<BlockRecord>,
    pub totals: Totals,
    pub checks: CheckRecord,
}

impl ClassificationRecordV1 {
    /// Totals agree with the per-block entries.
    pub fn totals_consistent(&self) -> bool {
        let count: usize = self.blocks.iter().map(|b| b.count).sum();
        let squares: usize = self.blocks.iter().flat_map(|b| &b.irreducible_dims).map(|d| d * d).sum();
        let per_block = self.blocks.iter().all(|b| b.count == b.irreducible_dims.len());
        per_block && count == self.totals.count && squares == self.totals.sum_dim_sq
    }
}

pub fn input_digest(file: &HopfFileV1) -> String {
    let json = serde_json::to_string(file).expect("HopfFileV1 serializes");
    hex::encode(Sha256::digest(json.as_bytes()))
}

pub fn classification_record(
    input: &HopfFileV1,
    seed: u64,
    max_den: u64,
    classification: &Classification,
    checks: CheckRecord,
) -> ClassificationRecordV1 {
    let blocks = classification
        .blocks
        .iter()
        .map(|b| BlockRecord {
            block_dim: b.block.dim(),
            coideal_dim: b.coideal.dim(),
            nw_dim: b.nw.dim(),
            irreducible_dims: b.dims(),
            count: b.modules.len(),
        })
        .collect();
    ClassificationRecordV1 {
        schema_version: 1,
        input_digest: input_digest(input),
        seed,
        max_den,
        field_order: classification.order,
        blocks,
        totals: Totals {
            count: classification.count(),
            sum_dim_sq: classification.sum_dim_sq(),
        },
        checks,
    }
}
