//! Run the structural, tabulated and empirical checks over a height range.

use gridfactor::series::conjectures::verify_conjectures;
use gridfactor::tables::verify_tables;
use gridfactor::Transfer;

fn main() -> gridfactor::Result<()> {
    let hi = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10);
    for m in 2..=hi {
        let t = Transfer::build(m)?;
        let mut report = t.check_structure();
        report.extend(verify_tables(&t));
        report.extend(verify_conjectures(&t));
        let failed: Vec<_> = report.failures().collect();
        println!("m={m:>2}: {} checks, {} failed", report.checks.len(), failed.len());
        for c in failed {
            println!("    {}: {}", c.name, c.detail);
        }
    }
    Ok(())
}
