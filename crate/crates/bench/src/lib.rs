//! Fixed inputs shared by the benchmarks.

use ftlb_core::invariants::{parse_braid, BraidWord};
use ftlb_core::ybalgebra::Letter;

/// Braid words on three strands of increasing length, as `(d, text)`.
pub const WORDS: [(u32, &str); 4] = [
    (1, "s1 r1 s2 s1^-1"),
    (2, "s1 t1^1 r1 s2 s1 r1^-1"),
    (3, "t2^2 s1 r1 s2 s1 t3^1 r1 s2^-1"),
    (3, "s1 r1 s1 r1 s2 s1 r1 s2 t1^2 s1 s2"),
];

pub fn word(d: u32, text: &str) -> BraidWord {
    parse_braid(text, 3, d).expect("fixture parses")
}

/// The letters of the `i`-th fixture word.
pub fn letters(i: usize) -> (u32, Vec<Letter>) {
    let (d, text) = WORDS[i];
    (d, word(d, text).algebra_letters())
}
