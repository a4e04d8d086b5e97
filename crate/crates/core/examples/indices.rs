//! Index of every catalog algebra, with the sampled witness that certifies it.
//!
//! cargo run --example indices

use lieslice::algebra::{catalog, catalog_names};
use lieslice::coadjoint::index;
use lieslice::linalg::rat::format_rat;

fn main() -> lieslice::Result<()> {
    for name in catalog_names() {
        let g = catalog(name)?.algebra;
        let r = index(&g, 0, 16, 7)?;
        let c = &r.certificate;
        let witness: Vec<String> = c.witness.iter().map(format_rat).collect();
        println!(
            "{name:<16} dim {}  ind {}  rank {} after {} draws{}  witness [{}]",
            g.dim(),
            r.algebra_index,
            c.achieved_rank,
            c.samples_tried,
            if c.saturated { " (saturated)" } else { "" },
            witness.join(", ")
        );
    }
    Ok(())
}
