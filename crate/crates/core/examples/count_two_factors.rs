//! Count 2-factors of the three graph families for a fixed height.
//!
//! cargo run --release --example count_two_factors -- 4 12

use gridfactor::{Counter, GraphFamily};

fn main() -> gridfactor::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let m = args.first().copied().unwrap_or(4);
    let n = args.get(1).copied().unwrap_or(12);

    let counter = Counter::build(m)?;
    for family in GraphFamily::ALL {
        println!("{:>3} m={m} n={n}: {}", family.name(), counter.count(family, n)?);
    }
    Ok(())
}
