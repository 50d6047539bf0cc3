//! Rotates one side of a path about its middle penny and checks that the
//! moved packing is still valid.

use pennyrig::corpus::fixture;
use pennyrig::framework::{congruent, flex_witness_from_separator, validate_sphere, ToleranceConfig};

fn main() -> pennyrig::Result<()> {
    let tol = ToleranceConfig::default();
    let f = fixture("path-4").expect("fixture exists").realization.expect("stored");
    let witness = flex_witness_from_separator(&f, &[2, 3], &[0, 1, 2])?;
    println!("separator {:?}, rotating {:?}", witness.separator, witness.rotating_side);
    for angle in [0.2, 0.6, 1.0] {
        let moved = witness.apply(&f, angle)?;
        println!(
            "angle {angle}: valid {}, congruent to start {}",
            validate_sphere(&moved, &tol).is_valid(),
            congruent(&f, &moved, &tol)?
        );
    }
    Ok(())
}
