//! Enumerate 2-factors of small explicit graphs and classify their cycles.

use gridfactor::oracle::{classify, enumerate_two_factors, oracle_counts, ExplicitGraph};
use gridfactor::{Counter, GraphFamily};

fn main() -> gridfactor::Result<()> {
    let g = ExplicitGraph::new(GraphFamily::MS, 3, 4)?;
    for (i, tf) in enumerate_two_factors(&g).iter().enumerate().take(6) {
        let classes: Vec<String> = classify(tf, &g)?.iter().map(|c| format!("{:?}({})", c.class, c.length)).collect();
        println!("2-factor {i}: {}", classes.join(" "));
    }

    println!();
    for family in GraphFamily::ALL {
        for m in 2..=4 {
            let k = Counter::build(m)?;
            for n in 1..=6 {
                let o = oracle_counts(family, m, n)?;
                assert_eq!(o.total, k.count(family, n)?);
            }
        }
        println!("{family}: brute force agrees with transfer counts for m<=4, n<=6");
    }
    Ok(())
}
