//! The lattice V, the index sets H and CH, and the height function for d = 2.

use hahnlat::hahnmd::LatticeParams;
use hahnlat::Result;

fn main() -> Result<()> {
    let p = LatticeParams::new(vec![6, 4, 4], 7)?;
    let s = p.index_sets();
    println!("{p}: |V| = {}, |H| = {}, |CH| = {}, formula {}", s.v.len(), s.h.len(), s.ch.len(), p.card_v_formula());
    for nu1 in 0..=p.ell_at(1) {
        println!("  height({nu1}) = {} (piecewise {})", p.height(nu1)?, p.height_piecewise(nu1)?);
    }
    let row: Vec<String> = s.v.iter().map(|x| x.to_string()).collect();
    println!("V = {}", row.join(" "));
    let ch_not_h: Vec<String> = s.ch.iter().filter(|nu| !p.in_h(nu)).map(|nu| nu.to_string()).collect();
    println!("CH minus H = {}", ch_not_h.join(" "));
    Ok(())
}
