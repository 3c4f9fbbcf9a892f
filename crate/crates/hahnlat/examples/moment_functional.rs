//! The moment functional of the Jacobi-type polynomials G_n is not positive
//! definite: h_n alternates in sign.

use hahnlat::hahn1d::{h_n, jacobi_g, moment_l};
use hahnlat::Result;

fn main() -> Result<()> {
    let (l1, l2) = (3, 4);
    for n in 0..=3 {
        let g = jacobi_g(n, l1, l2)?;
        let h = h_n(n, l1, l2)?;
        println!("G_{n} = {g}");
        println!("  L(G_n^2) = {} = h_n = {h}", moment_l(&(&g * &g), l1, l2)?);
    }
    Ok(())
}
