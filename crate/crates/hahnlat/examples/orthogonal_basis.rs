//! The multivariate basis on V: values, norms and the Gram matrix.

use hahnlat::hahnmd::{Basis, LatticeParams};
use hahnlat::Result;

fn main() -> Result<()> {
    let p = LatticeParams::new(vec![3, 3, 2], 4)?;
    let b = Basis::new(&p)?;
    for (i, nu) in b.h.iter().enumerate() {
        println!("B_{nu} = {}", b.norms[i]);
    }
    match b.orthogonality_failure() {
        None => println!("Gram matrix is diagonal ({} x {})", b.h.len(), b.h.len()),
        Some((a, c, v)) => println!("<{a},{c}> = {v}"),
    }
    Ok(())
}
