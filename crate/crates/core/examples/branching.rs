//! Restriction and induction of spin characters, and Kleshchev's normal nodes.

use spinmod::characters::{
    brauer_max, divided, e_step, kleshchev, signature_string, CharLabel, Direction, FormalChar,
};
use spinmod::{Partition, Residue};

fn main() -> spinmod::Result<()> {
    let chi = FormalChar::from_label("<11,9,7,5,4,1>+".parse::<CharLabel>()?);
    println!("chi            = {chi}");
    println!("e0 chi         = {}", e_step(Residue::Zero, &chi)?);
    println!(
        "e0^(2) chi     = {}",
        divided(Residue::Zero, 2, Direction::Restrict, &chi)?
    );
    println!(
        "f1 chi         = {}",
        divided(Residue::One, 1, Direction::Induce, &chi)?
    );

    let mu: Partition = "15,11,8,6,5,2".parse()?;
    let k = kleshchev(&mu, Residue::Zero)?;
    println!(
        "\n0-signature of {mu}: {} reduced {}",
        signature_string(&k.signature),
        signature_string(&k.reduced)
    );
    println!(
        "e0 max: {}",
        brauer_max(&mu, Residue::Zero, Direction::Restrict)?
    );
    println!(
        "f0 max: {}",
        brauer_max(&mu, Residue::Zero, Direction::Induce)?
    );
    Ok(())
}
