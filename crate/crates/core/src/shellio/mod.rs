//! Exchange formats: the HopfFileV1 input file, the ClassificationRecordV1 result record
//! and plain-text reports.

mod hopf_file;
mod locate;
mod record;
mod report;

pub use hopf_file::{export, load, load_str, parse_str, FieldSpec, HopfFileV1, LoadError, ParseError};
pub use record::{
    classification_record, input_digest, BlockRecord, CheckRecord, CheckStatus, ClassificationRecordV1, Totals,
};
pub use report::{describe_span, render_identity_suite, render_table, render_verify};
