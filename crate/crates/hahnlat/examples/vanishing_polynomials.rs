//! Polynomials indexed by CH minus H vanish on all of V. For l = (6,4,4),
//! N = 7 the irreducible quartic factor of sQ_(0,5) and the quadratic factor
//! of sQ_(3,3) share 8 lattice zeros, the Bezout maximum.

use hahnlat::hahnmd::frontier::{example_common_zeros, example_q33_printed, example_sq};
use hahnlat::hahnmd::{norm_b_nu, vanishing_check, LatticeParams, MultiIndex};
use hahnlat::Result;

fn main() -> Result<()> {
    let p = LatticeParams::new(vec![6, 4, 4], 7)?;
    for nu in [[0, 5], [3, 3]] {
        let m = MultiIndex(nu.to_vec());
        println!("sQ_{m} = {}", example_sq(&nu)?);
        println!("  vanishes on V: {}, B = {}", vanishing_check(&m, &p)?, norm_b_nu(&m, &p)?);
    }
    println!("printed form of sQ_(3,3): {}", example_q33_printed());
    let z: Vec<String> = example_common_zeros().iter().map(|x| x.to_string()).collect();
    println!("common lattice zeros of the quartic and quadratic factors: {}", z.join(" "));
    Ok(())
}
