//! Exact polynomial arithmetic and factoring over the rationals.

use hahnlat::poly::{bivariate_factor, univariate_factor, BivariateOutcome, PolyQ};
use hahnlat::exact::q;
use hahnlat::Result;

fn main() -> Result<()> {
    // (x - 4)(2x^2 - 13x + 33)
    let f = &PolyQ::from_int_coeffs(&[-4, 1]) * &PolyQ::from_int_coeffs(&[33, -13, 2]);
    println!("f = {f}");
    let fac = univariate_factor(&f)?;
    println!("content {}", fac.content);
    for (g, m) in &fac.factors {
        println!("  ({g})^{m}");
    }
    assert_eq!(fac.product(), f);

    let x = PolyQ::var(2, 0);
    let y = PolyQ::var(2, 1);
    let g = &(&y - &x.scale(&q(2))) * &(&(&x * &x) + &y).add_const(&q(1));
    match bivariate_factor(&g)? {
        BivariateOutcome::Irreducible => println!("{g} is irreducible"),
        BivariateOutcome::Factors(a, b) => println!("{g} = ({a}) * ({b})"),
    }
    println!("as JSON: {}", serde_json::to_string(&f).expect("serializes"));
    Ok(())
}
