//! Semidirect products k ⋉ V with V abelian: ind g = ind(k, V) + ind k_nu.
//!
//! cargo run --example semidirect_rais

use lieslice::algebra::catalog::sl2_standard;
use lieslice::algebra::random::random_semidirect;
use lieslice::algebra::{catalog, Representation};
use lieslice::reduction::verify_rais;

fn main() -> lieslice::Result<()> {
    let (so3, r3) = catalog("se3")?.semidirect.expect("se3 is stored as so3 ⋉ Q^3");
    let sl2 = catalog("sl2")?.algebra;
    let mut cases = vec![
        ("so3 ⋉ Q^3".to_string(), so3, r3),
        ("sl2 ⋉ Q^2".to_string(), sl2.clone(), sl2_standard(&sl2)),
        ("sl2 ⋉ sl2".to_string(), sl2.clone(), Representation::adjoint(&sl2)),
        ("sl2 ⋉ Q^2 (trivial)".to_string(), sl2.clone(), Representation::trivial(&sl2, 2)),
    ];
    for k in 0..3 {
        let (k_alg, rep) = random_semidirect(0, k)?;
        cases.push((format!("random #{k}"), k_alg, rep));
    }
    for (tag, k, rep) in cases {
        let r = verify_rais(&k, &rep, 0, 16, 7)?;
        println!(
            "{tag}: {} = {} + {} {}  (dim k_nu = {})",
            r.ind_g,
            r.ind_k_v,
            r.ind_k_nu,
            if r.holds { "holds" } else { "FAILS" },
            r.k_nu.dim()
        );
    }
    Ok(())
}
