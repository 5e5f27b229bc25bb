//! Letters, alpha words and their outlet and inlet words.

use gridfactor::codes::{enumerate_valid_columns, Letter};
use gridfactor::AlphaWord;

fn main() {
    for l in [Letter::A, Letter::B, Letter::C, Letter::D, Letter::E, Letter::F] {
        println!(
            "{} up={} down={} left={} right={}",
            l.symbol(),
            l.has_up() as u8,
            l.has_down() as u8,
            l.has_left() as u8,
            l.has_right() as u8
        );
    }

    let w: AlphaWord = "eacdf".parse().unwrap();
    println!("\n{w}: valid={} outlet={} inlet={}", w.is_valid_column(), w.outlet(), w.inlet());
    println!("horizontal conversion {}", w.horizontal_conversion());
    println!("vertical conversion   {}", w.vertical_conversion());

    println!("\nvalid columns of height 3:");
    for c in enumerate_valid_columns(3) {
        println!("  {c}  {} -> {}", c.inlet(), c.outlet());
    }
}
