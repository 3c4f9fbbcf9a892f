//! The hat-normalized polynomials are eigenfunctions of difference operators
//! in x and in the index nu.

use hahnlat::bispectral::{apply_lnu, apply_lx, hat_sq_value, lx_eigenvalue, GridFunction};
use hahnlat::hahnmd::{LatticeParams, MultiIndex};
use hahnlat::Result;

fn main() -> Result<()> {
    let p = LatticeParams::new(vec![6, 4, 4], 7)?;
    let v = p.enum_v();
    let nu = MultiIndex(vec![2, 1]);
    let f = GridFunction::from_fn(&v, |x| hat_sq_value(&nu, x, &p))?;
    for k in 1..=2 {
        let lf = apply_lx(k, &f, &p)?;
        let ev = lx_eigenvalue(k, &nu, &p);
        let ok = lf.iter().all(|(x, val)| *val == &ev * f.get(x).unwrap());
        println!("L^x_{k} hatQ_{nu} = {ev} * hatQ_{nu}: {ok}");
    }

    let x = MultiIndex(vec![4, 1]);
    let ch = p.enum_ch();
    let g = GridFunction::from_fn(&ch, |m| hat_sq_value(m, &x, &p))?;
    for k in 1..=2 {
        let out = apply_lnu(k, &g, &nu, &p)?;
        println!(
            "(L^nu_{k} g)({nu}) = {}, expected {} * g({nu}) = {}",
            out.value,
            x.head(k),
            g.get(&nu).unwrap() * hahnlat::exact::q(x.head(k))
        );
    }
    Ok(())
}
