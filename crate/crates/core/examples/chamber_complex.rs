//! Build the real moment-angle manifold of a few polytopes as a cell
//! complex and read off its invariants.

use rzpoly::corpus;
use rzpoly::zcomplex::{build_chamber_complex, summarize};
use rzpoly::CombPolytope;

fn main() {
    for (name, p) in [
        ("triangle", CombPolytope::simplex(2)),
        ("square", corpus::cube(2)),
        ("cube", corpus::cube(3)),
        ("prism", corpus::prism(3)),
    ] {
        let z = build_chamber_complex(&p).unwrap();
        let s = summarize(&z);
        println!(
            "{name}: cells {:?}, euler {}, components {}, orientable {}",
            s.cells_by_dim, s.euler, s.components, s.orientable
        );
        let fixed: Vec<usize> = s.fixed_sets.iter().map(|f| f.components).collect();
        println!("  fixed-set components per facet: {fixed:?}");
    }
}
