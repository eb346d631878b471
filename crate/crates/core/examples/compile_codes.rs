//! Canonical diagrams of the nine-, seven- and five-qubit codes.
//!
//! Prints each diagram as JSON and writes a Graphviz file next to it:
//!
//!     cargo run --example compile_codes -- /tmp/out

use std::path::PathBuf;

use zxcanon::{canonicalize, codes, render_dot};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map(PathBuf::from);
    if let Some(d) = &dir {
        std::fs::create_dir_all(d)?;
    }
    for (name, t) in codes::all() {
        let d = canonicalize(&t)?;
        println!("{name}: n={} k={} edges={}", d.n(), d.k(), d.a_edges().len());
        println!("  {}", d.to_json());
        if let Some(dir) = &dir {
            let path = dir.join(format!("{name}.dot"));
            std::fs::write(&path, render_dot(&d))?;
            println!("  wrote {}", path.display());
        }
    }
    Ok(())
}
