//! Fit the minimal recurrence and rational generating function of a
//! counting sequence.

use gridfactor::series::{fit_family, tabulated_order};
use gridfactor::{Counter, GraphFamily};

fn main() -> gridfactor::Result<()> {
    for (family, m) in [(GraphFamily::RG, 2), (GraphFamily::RG, 3), (GraphFamily::RG, 4), (GraphFamily::TkC, 3)] {
        let k = Counter::build(m)?;
        let model = fit_family(&k, family, tabulated_order(family, m))?;
        println!("{family} m={m}: order {} (in x^2: {:?})", model.order, model.reduced_order);
        println!("  P = {:?}", model.numerator.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        println!("  Q = {:?}", model.denominator.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        let first: Vec<String> = model.expand(10).iter().map(|c| c.to_string()).collect();
        println!("  f(1..10) = {}", first.join(", "));
    }
    Ok(())
}
