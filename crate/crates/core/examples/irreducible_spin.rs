//! Which spin characters remain irreducible modulo 2.

use spinmod::classify::{is_two_carter, spin_irreducible, verify_suite, VerifySuite};
use spinmod::partitions::strict_partitions_of;
use spinmod::Partition;

fn main() -> spinmod::Result<()> {
    for n in 1..=12 {
        let irreducible: Vec<String> = strict_partitions_of(n)?
            .into_iter()
            .filter_map(|l| match spin_irreducible(&l) {
                Ok(v) if v.irreducible => Some(Ok(l.to_string())),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<spinmod::Result<_>>()?;
        println!("n={n:<2} {}", irreducible.join(" "));
    }

    for s in ["31,15,6", "21,11,5,2,1", "11,7,3"] {
        let l: Partition = s.parse()?;
        println!("{l}: {}", spin_irreducible(&l)?);
    }
    println!("(5,2,1) is 2-Carter: {}", is_two_carter(&"5,2,1".parse()?));

    for suite in VerifySuite::ALL {
        println!("{}", verify_suite(suite, 18, 1)?);
    }
    Ok(())
}
