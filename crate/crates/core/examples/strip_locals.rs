//! Removing every phase and output Hadamard leaves a bare graph that still
//! encodes a code of the same dimension, usually a different one.

use zxcanon::oracle::{images_equal, zxcf_to_isometry};
use zxcanon::{canonicalize, codes, decompile, format_tableau, strip_locals};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, t) in codes::all() {
        let d = canonicalize(&t)?;
        let bare = strip_locals(&d)?;
        let same = images_equal(&zxcf_to_isometry(&d)?, &zxcf_to_isometry(&bare)?)?;
        println!("{name}: bare diagram valid={} same code={same}", bare.is_valid());
        print!("{}", format_tableau(&decompile(&bare)?));
    }
    Ok(())
}
