//! Long-running optimality checks, not part of the default run:
//! `cargo test -p snakebox-core --test extended -- --ignored`.

mod common;

use common::dim;
use snakebox_core::exact::{optimal_coil_length, optimal_snake_length, Budget, Status};
use snakebox_core::*;

#[test]
#[ignore = "long exhaustive search"]
fn seven_dimensional_optima() {
    let budget = Budget {
        max_nodes: u64::MAX,
        max_seconds: f64::INFINITY,
    };
    let snake = optimal_snake_length(dim(7), budget, &NoClock);
    assert_eq!((snake.best_length, snake.status), (50, Status::Proven));
    let coil = optimal_coil_length(dim(7), budget, &NoClock);
    assert_eq!((coil.best_length, coil.status), (48, Status::Proven));
}
