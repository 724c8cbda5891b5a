//! Parsing, conjugating and combining partitions.

use spinmod::partitions::{eval_expr, strict_partitions_of};
use spinmod::Partition;

fn main() -> spinmod::Result<()> {
    let lambda: Partition = "9,6,4,3,1".parse()?;
    println!(
        "lambda        = {lambda}  (size {}, {} parts)",
        lambda.size(),
        lambda.len()
    );
    println!("conjugate     = {}", lambda.conjugate());
    println!("2-regular     = {}", lambda.is_two_regular());
    println!("even parts    = {}", lambda.even_parts());

    let nodes: Vec<String> = lambda
        .removable_nodes()
        .iter()
        .map(|n| n.to_string())
        .collect();
    println!("removable     = {}", nodes.join(" "));

    // Scaling binds tightest, then +, then union.
    let expr = "(11,7,3) + 4*(3,1,1) u (10,2)";
    println!("{expr} = {}", eval_expr(expr)?);
    println!(
        "dup(2,1)      = {}",
        "2,1".parse::<Partition>()?.duplicate()
    );

    for n in [5, 10, 15] {
        println!(
            "strict partitions of {n:>2}: {}",
            strict_partitions_of(n)?.len()
        );
    }
    Ok(())
}
