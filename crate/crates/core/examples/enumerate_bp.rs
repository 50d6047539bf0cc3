//! Exhaustive branch-and-prune on the two-realization fixture, printing
//! the two flap angles of each class.

use pennyrig::corpus::fixture;
use pennyrig::enumerate::{bp_enumerate_with_stats, discretization_order};
use pennyrig::framework::{Framework, ToleranceConfig};

fn angle(f: &Framework, a: &str, apex: &str, b: &str) -> f64 {
    let g = f.graph();
    let at = |l: &str| f.point(g.index_of(l).expect("vertex"));
    let (u, w) = (at(a) - at(apex), at(b) - at(apex));
    (u.dot(&w) / (u.norm() * w.norm())).acos().to_degrees()
}

fn main() -> pennyrig::Result<()> {
    let f = fixture("fig-two-realizations").expect("fixture exists");
    let order = discretization_order(&f.graph, 2).expect("order exists");
    println!("order is plain: {}", order.is_plain());
    let (set, stats) = bp_enumerate_with_stats(&f.graph, 2, &order, &ToleranceConfig::default())?;
    println!("{} classes, {} nodes, {} leaves", set.count, stats.nodes, stats.leaves);
    for c in &set.classes {
        println!("  b2-a2-a3 {:.2} deg, c1-m-b3 {:.2} deg", angle(c, "b2", "a2", "a3"), angle(c, "c1", "m", "b3"));
    }
    Ok(())
}
