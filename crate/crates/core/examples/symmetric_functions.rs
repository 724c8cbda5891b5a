//! Schur expansions, Littlewood-Richardson coefficients and the h-to-e transition.

use spinmod::partitions::partitions_of;
use spinmod::symfun::{e_to_schur, h_to_schur, kappa, lr_coeff, lr_product, spade, SchurPoly};
use spinmod::Partition;

fn show(poly: &SchurPoly) -> String {
    poly.terms()
        .map(|(l, c)| {
            if c == 1 {
                format!("s{l}")
            } else {
                format!("{c} s{l}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() -> spinmod::Result<()> {
    let p = |s: &str| s.parse::<Partition>();
    println!("h(2,1)   = {}", show(&h_to_schur(&p("2,1")?)));
    println!("e(2,2)   = {}", show(&e_to_schur(&p("2,2")?)));
    println!("s21*s21  = {}", show(&lr_product(&p("2,1")?, &p("2,1")?)?));
    println!(
        "c^(3,2,1)_(2,1),(2,1) = {}",
        lr_coeff(&p("3,2,1")?, &p("2,1")?, &p("2,1")?)
    );
    println!("kappa((1),(2)) = {}", kappa(&p("1")?, &p("2")?)?);

    println!("\nh_(4) in the elementary basis:");
    for mu in partitions_of(4)? {
        let c = spade(&p("4")?, &mu);
        if c != 0 {
            println!("  {c:+} e{mu}");
        }
    }
    Ok(())
}
