//! Store transfer digraphs on disk and load them back.

use gridfactor::transfer::cache::{load_or_build, CacheOptions};

fn main() -> gridfactor::Result<()> {
    let dir = std::env::temp_dir().join("gridfactor-example-cache");
    let opts = CacheOptions { dir: Some(dir.clone()), ..CacheOptions::default() };
    for m in [8, 10] {
        let (t, first) = load_or_build(m, &opts)?;
        let (_, second) = load_or_build(m, &opts)?;
        println!("m={m}: {} vertices, first {first:?}, then {second:?}", t.dstar.vertex_count());
    }
    println!("cache files in {}", dir.display());
    Ok(())
}
