//! Encoder circuits from stabilizer tableaus, checked by simulation.

use zxcanon::oracle::{circuit_to_isometry, images_equal, tableau_projector};
use zxcanon::{codes, format_circuit, synthesize_encoder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, t) in codes::all() {
        let e = synthesize_encoder(&t)?;
        let ok = images_equal(&circuit_to_isometry(&e)?, &tableau_projector(&t)?)?;
        println!("# {name}: {} gates, image matches code space: {ok}", e.circuit().len());
        print!("{}", format_circuit(&e));
    }
    Ok(())
}
