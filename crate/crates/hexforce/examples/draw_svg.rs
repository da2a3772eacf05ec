//! Render a system as SVG with its optimal construction highlighted, and
//! its dual graph as DOT. Writes `coronene.svg` and `coronene.dot` into the
//! system temp directory.

use hexforce::families::{construct_cfs, generate, FamilySpec};
use hexforce::render::{dual_dot, svg};

fn main() -> std::io::Result<()> {
    let spec = FamilySpec::Hexagon { p: 2 };
    let hs = generate(&spec).unwrap().system;
    let highlight = construct_cfs(&spec).unwrap();

    let dir = std::env::temp_dir();
    let svg_path = dir.join("coronene.svg");
    let dot_path = dir.join("coronene.dot");
    std::fs::write(&svg_path, svg(&hs, &highlight))?;
    std::fs::write(&dot_path, dual_dot(&hs))?;
    println!(
        "wrote {} ({} highlighted edges) and {}",
        svg_path.display(),
        highlight.len(),
        dot_path.display()
    );
    Ok(())
}
