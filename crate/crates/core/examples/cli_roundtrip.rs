//! Exports the corpus and runs the command-line interface on the files.

use pennyrig::cli::{corpus_export, run_cli};

fn main() -> pennyrig::Result<()> {
    let dir = std::env::temp_dir().join("pennyrig-corpus");
    corpus_export(&dir)?;
    let graph = dir.join("path-4.graph.json");
    let mut out = Vec::new();
    let code = run_cli(
        ["pennyrig", "classify", "-g", graph.to_str().expect("utf-8 path"), "-d", "2"],
        &mut out,
        &mut std::io::stderr(),
    );
    println!("exit {code}\n{}", String::from_utf8_lossy(&out));
    Ok(())
}
