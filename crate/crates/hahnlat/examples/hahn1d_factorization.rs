//! One-variable Hahn polynomials beyond the degree bound split into linear
//! factors times a lower Hahn polynomial.

use hahnlat::hahn1d::{factorize_thm, hahn_sq, norm_b, Params1D};
use hahnlat::Result;

fn main() -> Result<()> {
    for (n, l1, l2, big_n) in [(6, 6, 8, 12), (7, 8, 9, 16)] {
        let p = Params1D::new(l1, l2, big_n)?;
        let f = factorize_thm(n, &p)?;
        println!("sQ_{n}(x; {l1},{l2},{big_n}) = {}", hahn_sq(n, &p)?);
        println!(
            "  = {} * prod (x - r), r in {:?}, times {}",
            f.prefactor, f.linear_roots, f.reduced
        );
        let s = p.support();
        println!("  support [{}, {}], degree bound {}", s.lo, s.hi, s.deg_bound);
        for m in 0..=s.deg_bound as u32 {
            println!("  B_{m} = {}", norm_b(m, &p)?);
        }
    }
    Ok(())
}
