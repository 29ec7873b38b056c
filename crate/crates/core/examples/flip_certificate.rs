//! Search for a sequence of codimension ≥ 3 flips from the simplex.

use rzpoly::corpus;
use rzpoly::moves::{psc_flip_certificate, FlipSearch};

fn main() {
    for (name, p) in [("prism", corpus::prism(3)), ("cube", corpus::cube(3))] {
        match psc_flip_certificate(&p, 3, 100_000).unwrap() {
            FlipSearch::Certificate(moves) => {
                println!("{name}: {} moves", moves.len());
                for m in moves {
                    println!("  {:?} at {:?} (codim {})", m.kind, m.face, m.codim);
                }
            }
            FlipSearch::NoneWithinBound { depth, states } => {
                println!("{name}: nothing within depth {depth} ({states} states)")
            }
        }
    }
}
