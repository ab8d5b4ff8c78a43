//! Big integers travel through JSON as decimal strings.

use num_bigint::BigUint;
use serde::Serializer;

pub fn serialize<S: Serializer>(value: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.collect_str(value)
}
