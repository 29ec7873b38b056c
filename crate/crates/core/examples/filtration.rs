//! Grow the manifold by doubling along one facet at a time and count the
//! two kinds of boundary edges at each stage.

use rzpoly::corpus;
use rzpoly::zcomplex::{build_chamber_complex, classify_edge_types, doubling_filtration};

fn main() {
    let z = build_chamber_complex(&corpus::cube(3)).unwrap();
    for stage in doubling_filtration(&z) {
        let edges = classify_edge_types(&z, &stage);
        println!(
            "j = {}: {} chambers, {} boundary facets, type I {}, type II {}",
            stage.j,
            stage.chambers,
            stage.facets.len(),
            edges.type1,
            edges.type2
        );
    }
}
