//! Estimate the growth constant `theta` and leading coefficient `a` with
//! `f(n) ~ a * theta^n`.

use gridfactor::series::estimate_spectrum;
use gridfactor::{Counter, GraphFamily};

fn main() -> gridfactor::Result<()> {
    let n_max = 120;
    println!("{:>3} {:>4} {:>22} {:>18} {:>10}", "m", "fam", "theta", "a", "residual");
    for m in 2..=8 {
        let k = Counter::build(m)?;
        for family in GraphFamily::ALL {
            let e = estimate_spectrum(family, m, &k.series(family, n_max)?)?;
            println!("{m:>3} {:>4} {:>22.15} {:>18.13} {:>10.1e}", family.name(), e.theta, e.a, e.residual);
        }
    }
    Ok(())
}
