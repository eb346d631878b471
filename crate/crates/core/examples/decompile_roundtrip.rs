//! Random codes go to canonical diagrams and back to tableaus. Every
//! generator set for the same code lands on the same diagram.

use zxcanon::random::{random_tableau, regenerate, rng};
use zxcanon::{canonicalize, decompile, format_tableau, groups_equal};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut r = rng(7);
    let t = random_tableau(&mut r, 5, 3);
    print!("original generators\n{}", format_tableau(&t));

    let d = canonicalize(&t)?;
    println!("diagram {}", d.to_json());

    let back = decompile(&d)?;
    print!("decompiled\n{}", format_tableau(&back));
    println!("same group: {}", groups_equal(&t, &back)?);

    let mut agree = 0;
    for _ in 0..100 {
        agree += (canonicalize(&regenerate(&mut r, &t))? == d) as usize;
    }
    println!("{agree}/100 regenerated generator sets give the same diagram");
    Ok(())
}
