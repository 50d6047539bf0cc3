//! Multistart search on graphs without a discretization order.

use pennyrig::corpus::fixture;
use pennyrig::enumerate::{numeric_solve, NumericOptions};
use pennyrig::framework::ToleranceConfig;
use pennyrig::graph::Graph;

fn main() {
    let tol = ToleranceConfig::default();
    let opts = NumericOptions { restarts: 200, seed: 0 };
    let square = numeric_solve(&Graph::cycle(4), 2, &opts, &tol);
    println!("C4: {} classes found (exhaustive: {})", square.count, square.exhaustive);
    for id in ["fig-sparse-1", "fig-rigid-not-global"] {
        let f = fixture(id).expect("fixture exists");
        let set = numeric_solve(&f.graph, 2, &opts, &tol);
        println!("{id}: {} classes found", set.count);
    }
}
