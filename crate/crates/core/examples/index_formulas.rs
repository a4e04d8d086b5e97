//! The index formula through the reduced algebra and its affine Poisson
//! reading, on catalog pairs and a few generated ones.
//!
//! cargo run --example index_formulas

use lieslice::algebra::catalog;
use lieslice::algebra::random::random_pair;
use lieslice::reduction::{panasyuk_from, verify_index_formula};

fn main() -> lieslice::Result<()> {
    let mut pairs = Vec::new();
    for (name, ideal) in [("heisenberg3", "center"), ("se3", "translations"), ("gl2", "sl2"), ("oscillator", "heisenberg")] {
        let e = catalog(name)?;
        pairs.push((format!("{name}/{ideal}"), e.algebra.clone(), e.ideal(ideal).expect("catalog ideal").clone()));
    }
    for k in 0..4 {
        let p = random_pair(0, k)?;
        pairs.push((p.recipe, p.algebra, p.ideal));
    }
    for (tag, g, n) in pairs {
        let r = verify_index_formula(&g, &n, 0, 16, 7)?;
        let f = r.formula;
        let p = panasyuk_from(&r);
        println!(
            "{tag}: {} = {} + {} - {} ({}), eta index {} ({}), witness found after {} draws",
            f.ind_g,
            f.ind_g_n,
            f.ind_b_nu,
            f.delta,
            if f.holds { "holds" } else { "FAILS" },
            p.ind_eta,
            if p.holds { "holds" } else { "FAILS" },
            r.witness.attempts
        );
    }
    Ok(())
}
