//! Exact spin degrees and the families with equal dblreg but different degree.

use spinmod::degrees::{approx, family, spin_degree, FamilyKind};
use spinmod::regdouble::dblreg;
use spinmod::Partition;

fn main() -> spinmod::Result<()> {
    for s in ["9,1", "5,4,1", "31,15,6"] {
        let l: Partition = s.parse()?;
        let d = spin_degree(&l)?;
        println!("deg <{s}> = {d} (~{:.3e})", approx(&d));
    }

    let kinds = [
        (FamilyKind::Dimen1, 0, 3),
        (FamilyKind::First, 2, 1),
        (FamilyKind::Second, 1, 2),
        (FamilyKind::Third, 2, 2),
        (FamilyKind::Fourth, 1, 1),
    ];
    for (kind, a, m) in kinds {
        let (lambda, mu) = family(kind, a, m)?;
        println!(
            "{kind:<7} a={a} m={m}: {lambda} vs {mu}, dblreg {} / {}, degrees {} > {}",
            dblreg(&lambda),
            dblreg(&mu),
            spin_degree(&lambda)?,
            spin_degree(&mu)?
        );
    }
    Ok(())
}
