//! A weight-4 Rouquier block: projective characters and the spin rows of the
//! decomposition matrix.

use std::path::PathBuf;

use spinmod::rouquier::{assemble_e, PartMatrix, RouquierBlock};
use spinmod::Partition;

fn fixture(name: &str) -> spinmod::Result<PartMatrix> {
    PartMatrix::load(
        &PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("fixtures")
            .join(name),
    )
}

fn main() -> spinmod::Result<()> {
    let block = RouquierBlock::new(3, 4)?;
    println!(
        "core {} weight {}, tau {}",
        block.core(),
        block.weight(),
        block.tau()
    );
    println!("psi^() = {}", block.psi(&Partition::empty())?);
    println!("psi^(1,1) = {}", block.psi(&"1,1".parse()?)?);

    let asm = assemble_e(&block, &fixture("d_w4.txt")?, &fixture("dbar_w4.txt")?)?;
    println!("\nadjustment matrix A:\n{}", asm.a);
    println!(
        "spin rows E = J A for {:?}:\n{}",
        asm.spin_rows
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>(),
        asm.e
    );
    println!(
        "the same rows times D^-1, from the omega characters:\n{}",
        block.spin_rows_via_omega()?
    );
    Ok(())
}
