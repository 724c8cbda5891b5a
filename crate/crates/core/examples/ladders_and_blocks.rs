//! Regularization, doubling, 4-bar cores and spin blocks.

use spinmod::partitions::strict_partitions_of;
use spinmod::regdouble::{
    dblreg, double, four_bar_core, four_bar_weight, ladder_counts, regularize, slope_counts,
    spin_block, spin_regularization_entry,
};
use spinmod::Partition;

fn main() -> spinmod::Result<()> {
    let lambda: Partition = "4,4,3,3,3,3,1".parse()?;
    println!("ladders of {lambda}: {:?}", ladder_counts(&lambda));
    println!("regularized: {}", regularize(&lambda));

    let mu: Partition = "14,8,7,1".parse()?;
    println!("double of {mu}: {}", double(&mu));
    println!(
        "slopes {:?} = ladders of the double {:?}",
        slope_counts(&mu)?,
        ladder_counts(&double(&mu))
    );

    let (target, entry) = spin_regularization_entry(&"6,4,2".parse()?)?;
    println!("(6,4,2): dblreg {target}, decomposition entry {entry}");

    println!("\nspin blocks of S(11):");
    for l in strict_partitions_of(11)? {
        let block = spin_block(&l)?;
        println!(
            "  {:<12} dblreg {:<14} bar core {:<8} weight {}  {block}",
            l.to_string(),
            dblreg(&l).to_string(),
            four_bar_core(&l)?.to_string(),
            four_bar_weight(&l)?
        );
    }
    Ok(())
}
