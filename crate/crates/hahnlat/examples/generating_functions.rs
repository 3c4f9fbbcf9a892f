//! Generating functions in one variable and in homogeneous coordinates.

use hahnlat::hahn1d::{genfun_b, genfun_check, genfun_sides, Params1D};
use hahnlat::hahnmd::genfun::{genfun_md_check, genfun_poly};
use hahnlat::hahnmd::{LatticeParams, MultiIndex};
use hahnlat::Result;

fn main() -> Result<()> {
    let p = Params1D::new(4, 5, 6)?;
    let (lhs, rhs) = genfun_sides(2, &p)?;
    println!("n=2, {p:?}: b = {}", genfun_b(2, &p));
    println!("  lhs {lhs}\n  rhs {rhs}\n  identity holds: {}", genfun_check(2, &p)?);

    let lp = LatticeParams::new(vec![3, 3, 2], 4)?;
    let nu = MultiIndex(vec![1, 1]);
    println!("{lp}, nu={nu}: {}", genfun_poly(&nu, &lp)?);
    println!("  coefficients equal sH_nu(alpha): {}", genfun_md_check(&nu, &lp)?);
    Ok(())
}
