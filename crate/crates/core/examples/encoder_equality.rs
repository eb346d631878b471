//! Two encoders are the same code exactly when their canonical diagrams
//! match. Here two unrelated-looking circuits for the repetition code are
//! compared with each other, with a tableau, and with the dense simulator.

use zxcanon::oracle::{circuit_to_isometry, images_equal};
use zxcanon::{canonicalize, canonicalize_encoder, parse_circuit, StabilizerTableau};

const CNOT: &str = "wires=2\ninputs=0\nCX 0 1\n";

// Same code written with Hadamards around a CZ, then a logical X·X.
const ROUNDABOUT: &str = "wires=2\ninputs=1\nH 1\nH 0\nCZ 0 1\nH 0\nX 1\nX 0\n";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = parse_circuit(CNOT)?;
    let b = parse_circuit(ROUNDABOUT)?;
    let t = StabilizerTableau::from_strs(&["ZZ"])?;

    let (da, db, dt) = (canonicalize_encoder(&a)?, canonicalize_encoder(&b)?, canonicalize(&t)?);
    println!("cnot       {}", da.to_json());
    println!("roundabout {}", db.to_json());
    println!("tableau    {}", dt.to_json());
    println!("canonical forms agree: {}", da == db && db == dt);

    let dense = images_equal(&circuit_to_isometry(&a)?, &circuit_to_isometry(&b)?)?;
    println!("dense images agree:    {dense}");

    let flipped = canonicalize(&StabilizerTableau::from_strs(&["-ZZ"])?)?;
    println!("-ZZ differs:           {}", flipped != dt);
    Ok(())
}
