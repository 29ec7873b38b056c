//! Parse an inequality description and enumerate its vertices.

use rzpoly::hrep::{enumerate_vertices, parse_hrep};
use rzpoly::polytope::face_lattice;

const WEDGE: &str = "\
# n m, then rows a_1 .. a_n b meaning <a, x> + b >= 0
3 5
1 0 0 0
0 1 0 0
-1 -1 0 1
0 0 1 0
-1 0 -1 2
";

fn main() {
    let h = parse_hrep(WEDGE).unwrap();
    let (p, coords) = enumerate_vertices(&h).unwrap();
    for (facets, x) in p.vertices().iter().zip(&coords) {
        println!("{facets:?} at {x:?}");
    }
    println!("f-vector {:?}", face_lattice(&p).f_vector());
}
