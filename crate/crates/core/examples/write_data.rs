//! Writes the reference maps as input documents into a directory.

use rzero_core::fixtures;
use rzero_core::io::{to_json, InputDocument};

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "data".into());
    std::fs::create_dir_all(&dir)?;
    for (name, f) in [
        ("edge", fixtures::edge()),
        ("rectangle", fixtures::rectangle()),
        ("grid_id", fixtures::grid_identity()),
        ("octagon", fixtures::octagon()),
    ] {
        std::fs::write(format!("{dir}/{name}.json"), to_json(&InputDocument::from_map(&f)) + "\n")?;
    }
    Ok(())
}
