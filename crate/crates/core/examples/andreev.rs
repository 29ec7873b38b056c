//! Prismatic 3- and 4-circuits. The dodecahedron has none yet is not
//! reducible to a simplex by collapsing triangles.

use rzpoly::corpus;
use rzpoly::moves::prismatic_circuits;

fn main() {
    for (name, p) in [
        ("prism", corpus::prism(3)),
        ("cube", corpus::cube(3)),
        ("pentagonal prism", corpus::prism(5)),
        ("dodecahedron", corpus::dodecahedron()),
    ] {
        let three = prismatic_circuits(&p, 3).unwrap();
        let four = prismatic_circuits(&p, 4).unwrap();
        println!("{name}: {} prismatic 3-circuits, {} prismatic 4-circuits", three.len(), four.len());
        for c in three.iter().chain(&four) {
            println!("  facets {:?}", c.facets);
        }
    }
}
