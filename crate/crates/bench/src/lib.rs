//! Shared inputs for the criterion benches.

use slitpath_core::{SlitSpec, Weights};

pub fn worked_example() -> (SlitSpec, Weights) {
    (
        SlitSpec::new(9).expect("m >= 2"),
        Weights::from_integers(1, 3, 2).expect("positive weights"),
    )
}

pub fn unit_weights() -> Weights {
    Weights::from_integers(1, 1, 1).expect("positive weights")
}

pub fn probability_weights() -> Weights {
    "1/2,1/3,1/6".parse().expect("valid literal")
}
