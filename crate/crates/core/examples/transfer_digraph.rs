//! Build `D*_m`, list its strongly connected components and the contracted
//! digraph used for rectangular grids.

use gridfactor::transfer::ComponentLabel;
use gridfactor::Transfer;

fn main() -> gridfactor::Result<()> {
    let m = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(6);
    let t = Transfer::build(m)?;
    let d = &t.dstar;
    println!("D*_{m}: {} vertices, {} arcs, loops at {:?}", d.vertex_count(), d.arc_count(), d.loops());

    let c = &t.components;
    for k in 0..c.count() {
        let name = match c.label(k) {
            ComponentLabel::A => "A*".to_string(),
            ComponentLabel::B(i) => format!("B*({i})"),
        };
        let marker = if k == c.r_star() { "  <- contains 0^m" } else { "" };
        println!("{name:>6}: {} vertices{marker}", c.size(k));
    }

    let r = &t.rstarstar;
    println!("R**: {} classes, largest entry {}", r.class_count(), r.max_entry());
    Ok(())
}
