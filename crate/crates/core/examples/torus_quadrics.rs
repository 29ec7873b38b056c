//! The cube gives the 3-torus as three circles `y_i² + y_{i+3}² = 1`, and
//! the quadrics meet transversally everywhere we look.

use rzpoly::corpus;
use rzpoly::hrep::{relation_matrix, verify_nondegeneracy};

fn main() {
    let h = corpus::cube_hrep(3);
    let q = relation_matrix(&h).unwrap();
    for (row, b) in q.gamma().iter().zip(q.rhs()) {
        println!("{row:?} . y^2 = {b}");
    }
    let report = verify_nondegeneracy(&h, 1000, 1).unwrap();
    println!(
        "{} samples, gradient rank {} (expected {}), smallest singular value {:.3}",
        report.samples, report.min_rank, report.expected_rank, report.min_margin
    );
}
