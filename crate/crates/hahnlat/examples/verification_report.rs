//! Runs one verification suite and prints its JSON report, the same output as
//! `hahnlat verify cardinality --grid d3-small --no-timing`.

use hahnlat::cli::verify_report;
use hahnlat::Result;

fn main() -> Result<()> {
    let r = verify_report("cardinality", &["--grid", "d3-small"])?;
    println!("{}", serde_json::to_string_pretty(&r).expect("serializes"));
    if r.failed() {
        std::process::exit(1);
    }
    Ok(())
}
