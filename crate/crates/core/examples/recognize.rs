//! Recognize polytopes built from the tetrahedron by vertex-cuts, and show
//! that the cube is not one of them.

use rzpoly::corpus;
use rzpoly::moves::recognize_vertexcut_reducible;
use rzpoly::polytope::combinatorial_isomorphic;

fn main() {
    let cut = corpus::random_vertex_cuts(6, 42);
    let r = recognize_vertexcut_reducible(&cut).unwrap();
    println!("6 random cuts: reducible = {}", r.reducible);
    println!("facet counts along the reduction: {:?}", r.trace.facet_counts());
    let rebuilt = r.trace.replay_as_vertex_cuts().unwrap();
    println!(
        "rebuilt by cuts is isomorphic to input: {}",
        combinatorial_isomorphic(&rebuilt, &cut).is_some()
    );

    for (name, p) in [("cube", corpus::cube(3)), ("dodecahedron", corpus::dodecahedron())] {
        let r = recognize_vertexcut_reducible(&p).unwrap();
        println!("{name}: reducible = {}, stuck after {} collapses", r.reducible, r.trace.steps.len());
    }
}
