//! Split cylinder and strip counts by cycle type and compare the zeros
//! with the parity rule.

use gridfactor::counting::{zero_predicate, CountClass};
use gridfactor::{Counter, GraphFamily};

fn main() -> gridfactor::Result<()> {
    for m in 2..=5 {
        let k = Counter::build(m)?;
        let tkc = k.split_series(GraphFamily::TkC, 8)?;
        let ms = k.split_series(GraphFamily::MS, 8)?;
        for n in 1..=8 {
            let (e, o) = (&tkc.even[n - 1], &tkc.odd[n - 1]);
            let (s0, s1) = (&ms.even[n - 1], &ms.odd[n - 1]);
            println!("m={m} n={n}  tkc even-nc {e:>8} odd-nc {o:>8}   ms no-short {s0:>8} short {s1:>8}");
            assert_eq!(*o == 0u32.into(), zero_predicate(CountClass::TkcOdd, m, n));
            assert_eq!(*s1 == 0u32.into(), zero_predicate(CountClass::MsShort, m, n));
        }
    }
    Ok(())
}
