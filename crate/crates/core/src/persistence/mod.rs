//! Pointed barcodes of pointed modules over a field, a brute-force
//! decomposition used as a test oracle, and the pointed bottleneck distance.

mod barcode;
mod bottleneck;
mod oracle;
pub mod random;

pub use barcode::{barcode, Interval, PointedBarcode};
pub use bottleneck::{bottleneck, feasible_matching, feasible_within, Matching};
pub use oracle::{decompose_oracle, ORACLE_CAP};
