//! Chordality, clique number, connectivity and d-tree tests on a few graphs.

use pennyrig::graph::{clique_number, edge_count_tight, is_chordal, is_d_tree, is_k_connected, Graph};

fn main() -> pennyrig::Result<()> {
    let fan = Graph::new(
        ["o", "r1", "r2", "r3", "r4"],
        [("o", "r1"), ("o", "r2"), ("o", "r3"), ("o", "r4"), ("r1", "r2"), ("r2", "r3"), ("r3", "r4")],
    )?;
    let graphs = [("fan-5", fan), ("C4", Graph::cycle(4)), ("path-4", Graph::path(4)), ("K4", Graph::complete(4))];
    println!("{:<8} {:>7} {:>6} {:>12} {:>6} {:>7}", "graph", "chordal", "clique", "2-connected", "tight", "2-tree");
    for (name, g) in &graphs {
        let (chordal, peo) = is_chordal(g);
        println!(
            "{:<8} {:>7} {:>6} {:>12} {:>6} {:>7}",
            name,
            chordal,
            clique_number(g, peo.as_ref())?,
            is_k_connected(g, 2),
            edge_count_tight(g, 2),
            is_d_tree(g, 2)
        );
    }
    Ok(())
}
