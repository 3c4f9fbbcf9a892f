//! Reproducing kernels by direct summation and in closed form, and the
//! Poisson kernel in the triangle case.

use hahnlat::hahnmd::kernel::{kernel_p, poisson_phi, poisson_triangle_formula, KernelMethod};
use hahnlat::hahnmd::{LatticeParams, MultiIndex};
use hahnlat::{Result, Q};

fn main() -> Result<()> {
    let p = LatticeParams::new(vec![6, 4, 4], 7)?;
    let (x, y) = (MultiIndex(vec![2, 3]), MultiIndex(vec![4, 1]));
    for n in 0..=4 {
        let d = kernel_p(n, &x, &y, &p, KernelMethod::Direct)?;
        let c = kernel_p(n, &x, &y, &p, KernelMethod::Closed)?;
        println!("P_{n}({x},{y}) = {d} (closed form {c})");
    }

    let t = LatticeParams::new(vec![2, 2, 2], 4)?;
    let y0 = MultiIndex(vec![0, 2]);
    for x1 in 0..=2 {
        println!("Phi_r((x1={x1}, .), (0,2)) = {}", poisson_triangle_formula(2, x1)?);
    }
    let half = Q::new(1.into(), 2.into());
    println!("Phi_1/2((2,0),(0,2)) = {}", poisson_phi(&half, &MultiIndex(vec![2, 0]), &y0, &t)?);
    Ok(())
}
