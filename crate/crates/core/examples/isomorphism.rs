//! Two different constructions of the same combinatorial polytope.

use rzpoly::corpus;
use rzpoly::moves::vertex_cut;
use rzpoly::polytope::combinatorial_isomorphic;
use rzpoly::CombPolytope;

fn main() {
    let simplex = CombPolytope::simplex(3);
    let once = vertex_cut(&simplex, 0).unwrap();
    let prism = corpus::prism(3);
    println!("cut tetrahedron vs prism: {:?}", combinatorial_isomorphic(&once, &prism));
    println!("square prism vs cube: {:?}", combinatorial_isomorphic(&corpus::prism(4), &corpus::cube(3)));
    let twice = vertex_cut(&once, 0).unwrap();
    println!("twice-cut tetrahedron vs cube: {:?}", combinatorial_isomorphic(&twice, &corpus::cube(3)));
}
