//! Canonical forms: a rotated and mirrored copy is congruent, a sheared
//! rhombus is equivalent but not congruent.

use nalgebra::{DMatrix, DVector};
use pennyrig::corpus::fixture;
use pennyrig::framework::{canonical_form, congruent, equivalent, ToleranceConfig};

fn main() -> pennyrig::Result<()> {
    let tol = ToleranceConfig::default();
    let square = fixture("fig-flex-square").expect("fixture exists").realization.expect("stored");
    let rhombus = fixture("fig-flex-rhombus").expect("fixture exists").realization.expect("stored");
    let (c, s) = (0.3f64.cos(), 0.3f64.sin());
    let mirror_turn = DMatrix::from_row_slice(2, 2, &[c, s, s, -c]);
    let moved = square.transformed(&mirror_turn, &DVector::from_vec(vec![4.0, -2.5]));
    println!("canonical square: {:?}", canonical_form(&square).coords);
    println!("moved copy congruent: {}", congruent(&square, &moved, &tol)?);
    println!("rhombus equivalent: {}, congruent: {}", equivalent(&square, &rhombus, &tol)?, congruent(&square, &rhombus, &tol)?);
    Ok(())
}
