//! The reduced algebra b_nu and the cocycle gamma_tau for the Heisenberg
//! algebra and its center, rebuilt as a central extension.
//!
//! cargo run --example reduction

use lieslice::algebra::{catalog, central_extension};
use lieslice::linalg::rat::{format_rat, from_ints};
use lieslice::linalg::Rat;

fn show(v: &[Rat]) -> String {
    v.iter().map(format_rat).collect::<Vec<_>>().join(", ")
}
use lieslice::reduction::{cocycle_class_equal, cocycle_gamma, reduced_algebra, split_extension_matches};

fn main() -> lieslice::Result<()> {
    let h3 = catalog("heisenberg3")?;
    let center = h3.ideal("center").expect("catalog ideal");
    let red = reduced_algebra(&h3.algebra, center, &from_ints(&[1]))?;
    println!("g_nu {:?}\nn_nu^nat {:?}", red.g_nu, red.n_natural);
    println!("b_nu has dim {} and brackets:", red.b_nu().dim());
    for (i, j, v) in red.b_nu().nonzero_brackets() {
        println!("  [b{i}, b{j}] = [{}]", show(v));
    }

    let tau = red.tau_of(&from_ints(&[0, 0, 1]))?;
    let gamma = cocycle_gamma(&red, center, &tau)?;
    println!("gamma_tau = {:?}", gamma.gamma.form());
    let rebuilt = central_extension(gamma.quotient.quotient(), &gamma.gamma)?;
    println!("central extension equals h3: {}", rebuilt == h3.algebra);
    println!("split basis reproduces b_nu: {}", split_extension_matches(&red, center, &tau)?);

    // another extension of the same nu changes gamma by a coboundary only
    let other = red.tau_of(&from_ints(&[2, -5, 1]))?;
    let gamma2 = cocycle_gamma(&red, center, &other)?;
    let (equal, lambda) = cocycle_class_equal(gamma.quotient.quotient(), &gamma.gamma, &gamma2.gamma)?;
    println!("same class: {equal}, lambda = [{}]", lambda.as_deref().map(show).unwrap_or_default());
    Ok(())
}
