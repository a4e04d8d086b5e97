//! Abelian complements of an ideal inside the isotropy algebra, when the
//! slice is trivial and the reduced algebra is abelian.
//!
//! cargo run --example abelian_complement

use lieslice::algebra::{catalog, semidirect, LieAlgebra, Representation};
use lieslice::error::Error;
use lieslice::linalg::rat::from_ints;
use lieslice::slice::{abelian_complement, check_isotropy_coincidence};

fn main() -> lieslice::Result<()> {
    let gl2 = catalog("gl2")?;
    let sl2 = gl2.ideal("sl2").expect("catalog ideal");
    let a = abelian_complement(&gl2.algebra, sl2, &from_ints(&[1, 0, 0]), 0, 16, 7)?;
    println!("gl2 over sl2: complement {a:?}");
    println!("isotropy coincidence: {:?}", check_isotropy_coincidence(&gl2.algebra, sl2, &from_ints(&[1, 0, 0, 3]))?);

    let (g, v) = semidirect(&LieAlgebra::abelian(1), &Representation::trivial(&LieAlgebra::abelian(1), 2))?;
    println!("Q ⊕ Q^2 over Q^2: complement {:?}", abelian_complement(&g, &v, &from_ints(&[1, 2]), 0, 16, 7)?);

    let h3 = catalog("heisenberg3")?;
    match abelian_complement(&h3.algebra, h3.ideal("center").expect("catalog ideal"), &from_ints(&[1]), 0, 16, 7) {
        Err(Error::HypothesisNotMet(clause)) => println!("h3 over its center: hypothesis not met ({clause:?})"),
        other => println!("h3 over its center: {other:?}"),
    }
    Ok(())
}
