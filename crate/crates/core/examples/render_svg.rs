//! Writes SVG drawings of three fixtures into the temp directory.

use pennyrig::corpus::fixture;
use pennyrig::render::render_svg;

fn main() -> pennyrig::Result<()> {
    let dir = std::env::temp_dir();
    for id in ["fig-penny-yes", "fig-penny-no", "fig-two-realizations"] {
        let f = fixture(id).expect("fixture exists").realization.expect("stored");
        let path = dir.join(format!("{id}.svg"));
        std::fs::write(&path, render_svg(&f)?)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
