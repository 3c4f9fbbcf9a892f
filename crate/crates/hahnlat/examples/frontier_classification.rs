//! For d = 2, the polynomial at the top of each column of H either is
//! undefined, splits into explicit factors, or stays general.

use hahnlat::hahnmd::frontier::{d2_frontier_classify, undefined_condition_corrected, undefined_condition_printed, FrontierClass};
use hahnlat::hahnmd::LatticeParams;
use hahnlat::Result;

fn main() -> Result<()> {
    let p = LatticeParams::new(vec![6, 4, 4], 7)?;
    for nu1 in 0..=p.ell_at(1) {
        let h = p.height(nu1)?;
        let what = match d2_frontier_classify(nu1, &p)? {
            FrontierClass::Undefined(why) => format!("undefined ({why})"),
            FrontierClass::Splits { formula, constant, roots, .. } => {
                let r: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
                format!("splits by {formula:?}: {constant} * prod (x1 - r), r in [{}]", r.join(", "))
            }
            FrontierClass::General { first_factor } => format!("general, first factor {first_factor}"),
        };
        println!(
            "nu=({nu1},{h}): {what}; corrected condition {}, printed condition {}",
            undefined_condition_corrected(nu1, &p),
            undefined_condition_printed(nu1, &p)
        );
    }
    Ok(())
}
