//! Combinatorial sphere-rigidity classification with its justification.

use pennyrig::classify::classify_general;
use pennyrig::corpus::fixture;
use pennyrig::framework::ToleranceConfig;

fn main() -> pennyrig::Result<()> {
    let tol = ToleranceConfig::default();
    for id in ["fan-5", "path-4", "3-tree-5", "K4", "penny-grid-1"] {
        let f = fixture(id).expect("fixture exists");
        let report = classify_general(&f.graph, f.d, f.realization.as_ref(), &tol)?;
        println!("{id}: {:?}", report.verdict);
        for step in &report.justification {
            println!("    {}: {}", step.rule, step.detail);
        }
    }
    Ok(())
}
