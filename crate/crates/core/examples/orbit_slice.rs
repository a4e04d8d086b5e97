//! Isotropy algebras and the affine slice through a covector of se(3),
//! relative to the translation ideal.
//!
//! cargo run --example orbit_slice

use lieslice::algebra::catalog;
use lieslice::linalg::rat::{format_rat, from_ints};
use lieslice::slice::{analyze_slice, complexity};

fn main() -> lieslice::Result<()> {
    let e = catalog("se3")?;
    let n = e.ideal("translations").expect("catalog ideal");
    for sigma in [from_ints(&[1, 0, 2, 0, 0, 1]), from_ints(&[0, 0, 0, 0, 0, 1]), from_ints(&[3, 1, 0, 0, 0, 0])] {
        let r = analyze_slice(&e.algebra, n, &sigma)?;
        let shown: Vec<String> = sigma.iter().map(format_rat).collect();
        println!("sigma = [{}]", shown.join(", "));
        println!("  dims {:?}", r.dims);
        println!("  identities pass: {}, point conditions agree: {}", r.all_pass(), r.point_conditions.agree());
    }
    println!("complexity of (se3, R^3) = {}", complexity(&e.algebra, n, 0, 16, 7)?);
    Ok(())
}
