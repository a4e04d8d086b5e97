//! Building an algebra in code, writing it as a JSON algebra file, reading
//! it back, and wrapping a result in a report envelope.
//!
//! cargo run --example algebra_files

use std::collections::BTreeMap;

use serde_json::json;

use lieslice::algebra::{central_extension, direct_sum, Cocycle2, LieAlgebra};
use lieslice::coadjoint::index;
use lieslice::io::report::{index_report, ReportEnvelope};
use lieslice::io::AlgebraFile;
use lieslice::linalg::Matrix;

fn main() -> lieslice::Result<()> {
    // h3 as the central extension of Q^2 by e0 ∧ e1, plus a central line
    let q2 = LieAlgebra::abelian(2);
    let form = Matrix::from_ints(&[&[0, 1], &[-1, 0]]);
    let h3 = central_extension(&q2, &Cocycle2::new(&q2, form)?)?;
    let g = direct_sum(&h3, &LieAlgebra::abelian(1));

    let file = AlgebraFile::from_algebra("h3+ab1", &g, None, None);
    let text = file.to_json();
    println!("{text}");
    let back = AlgebraFile::from_json(&text)?.load()?;
    println!("round trip equal: {}", back.algebra == g);

    let r = index(&g, 0, 16, 7)?;
    let verdicts = BTreeMap::from([("index_is_2".to_string(), r.algebra_index == 2)]);
    let env = ReportEnvelope::new(text.as_bytes(), 0, json!({"samples": 16, "bound": 7}), index_report(&r), verdicts);
    println!("{}", env.to_json());
    Ok(())
}
