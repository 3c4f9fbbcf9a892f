//! Irreducibility of R_n(x; l1, l2, y) on small cases. Evidence, not proof.

use hahnlat::verify::{conjecture_instance, ConjectureOutcome};
use hahnlat::Result;

fn main() -> Result<()> {
    for (n, l1, l2) in [(2, 3, 3), (3, 3, 3), (3, 4, 5), (4, 5, 5)] {
        let (o, agrees) = conjecture_instance(n, l1, l2)?;
        let what = match o {
            ConjectureOutcome::Irreducible => "irreducible".to_string(),
            ConjectureOutcome::LinearFactorThenIrreducible => "(y-2x) times an irreducible factor".to_string(),
            ConjectureOutcome::Other(s) => s,
        };
        println!("R_{n}(x;{l1},{l2},y): {what}; as predicted: {agrees}");
    }
    Ok(())
}
