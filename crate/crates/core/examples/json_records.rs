//! Produce the machine-readable records the command line prints.

use gridfactor::output::{OutputFormat, OutputRecord};
use gridfactor::{Counter, GraphFamily};

fn main() -> gridfactor::Result<()> {
    let k = Counter::build(3)?;
    let rec = OutputRecord::count(&k.count_result(GraphFamily::TkC, 10, true)?);
    for format in [OutputFormat::Plain, OutputFormat::Json, OutputFormat::Csv] {
        println!("{format:?}:\n{}\n", rec.render(format));
    }

    let json = rec.to_json();
    assert_eq!(OutputRecord::from_json(&json)?.to_json(), json);

    let s = k.series(GraphFamily::MS, 8)?;
    println!("{}", OutputRecord::series(GraphFamily::MS, 3, &s, None).render(OutputFormat::Csv));
    Ok(())
}
