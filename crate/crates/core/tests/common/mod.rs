#![allow(dead_code)]

use std::path::PathBuf;

use num_rational::BigRational;
use spinmod::characters::{CharLabel, FormalChar};
use spinmod::rouquier::{PartMatrix, RowLabel};
use spinmod::Partition;

pub fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn fixture(name: &str) -> PartMatrix {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    PartMatrix::load(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn row(label: &str) -> RowLabel {
    label.parse().unwrap()
}

pub fn label(s: &str) -> CharLabel {
    s.parse().unwrap()
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// A character with every listed label at coefficient 1.
pub fn char_of(level: usize, labels: &[&str]) -> FormalChar {
    FormalChar::from_terms(level, labels.iter().map(|s| (label(s), 1))).unwrap()
}

/// Rows of `m` as plain vectors, in order.
pub fn rows_of(m: &PartMatrix) -> Vec<Vec<i64>> {
    m.entries().to_vec()
}
