//! The 2-abacus: cores, quotients, signs and contents.

use spinmod::abacus::{
    from_core_and_quotient, two_content, two_core, two_quotient, two_sign, two_weight,
    AbacusDisplay,
};
use spinmod::Partition;

fn main() -> spinmod::Result<()> {
    let lambda: Partition = "6,4,4,3".parse()?;
    print!("{}", AbacusDisplay::new(&lambda));

    let (q0, q1) = two_quotient(&lambda);
    let core = two_core(&lambda);
    println!(
        "{lambda}: quotient ({q0},{q1}) core={core} weight={}",
        two_weight(&lambda)
    );
    println!("rebuilt: {}", from_core_and_quotient(&core, &q0, &q1)?);

    for s in ["2,2", "3,1", "4,4", "7,4,1,1,1"] {
        let mu: Partition = s.parse()?;
        println!(
            "{mu:<12} sign {:+}  content {}",
            two_sign(&mu),
            two_content(&mu)
        );
    }
    Ok(())
}
