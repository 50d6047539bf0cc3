//! Checks penny conditions and the rigidity matrix of a realization.

use pennyrig::corpus::fixture;
use pennyrig::framework::{infinitesimally_rigid, numerical_rank, rigidity_matrix, validate_sphere, ToleranceConfig};

fn main() -> pennyrig::Result<()> {
    let tol = ToleranceConfig::default();
    for id in ["fig-penny-yes", "fig-penny-no", "fig-flex-square"] {
        let f = fixture(id).expect("fixture exists").realization.expect("stored realization");
        let report = validate_sphere(&f, &tol);
        let m = rigidity_matrix(&f);
        println!(
            "{id:<16} {:?}, {} violation(s), rigidity matrix rank {} of {}, infinitesimally rigid {}",
            report.verdict,
            report.violations.len(),
            numerical_rank(&m, tol.tol_rank),
            m.nrows(),
            infinitesimally_rigid(&f, &tol)?
        );
    }
    Ok(())
}
