//! The simplex gives the round sphere: one quadric `Σ y_k² = 1`.

use rzpoly::corpus;
use rzpoly::hrep::{lift_point, relation_matrix};

fn main() {
    for n in 1..=3 {
        let h = corpus::simplex_hrep(n);
        let q = relation_matrix(&h).unwrap();
        println!("n = {n}: gamma = {:?}, rhs = {:?}", q.gamma(), q.rhs());
        let bary = vec![1.0 / (n as f64 + 1.0); n];
        let y = lift_point(&h, &bary, &vec![1; n + 1]).unwrap();
        println!("  barycenter lifts to {:?}", y.y);
    }
}
