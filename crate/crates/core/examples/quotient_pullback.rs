//! Quotient algebras by the catalog ideals, and the pullback identity
//! <pi* b, [x, y]> = <b, [pi x, pi y]>.
//!
//! cargo run --example quotient_pullback

use lieslice::algebra::{catalog, catalog_names, QuotientMap};
use lieslice::sampling::draws;

fn main() -> lieslice::Result<()> {
    for name in catalog_names() {
        let e = catalog(name)?;
        for (ideal, n) in &e.ideals {
            let q = QuotientMap::new(&e.algebra, n)?;
            let mut ok = true;
            for beta in draws(1, "example", 4, 3, q.quotient().dim()) {
                ok &= q.pullback_identity_holds(&beta)?;
            }
            println!(
                "{name}/{ideal}: quotient dim {}, abelian {}, pullback identity {}",
                q.quotient().dim(),
                q.quotient().is_abelian(),
                if ok { "holds" } else { "FAILS" }
            );
        }
    }
    Ok(())
}
