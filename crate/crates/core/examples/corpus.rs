//! Write a few standard polytopes as JSON incidence files.

use rzpoly::corpus::{generate, Kind};

fn main() {
    for kind in [
        Kind::Simplex { dim: 3 },
        Kind::Cube { dim: 3 },
        Kind::Prism { sides: 5 },
        Kind::RandomVertexCuts { cuts: 3, seed: 9 },
        Kind::Dodecahedron,
    ] {
        let p = generate(kind).unwrap();
        println!("{kind:?}: {} facets, {} vertices", p.facet_count(), p.vertex_count());
    }
    println!("{}", generate(Kind::Prism { sides: 3 }).unwrap().to_json());
}
