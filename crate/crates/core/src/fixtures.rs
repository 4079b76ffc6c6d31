//! Small reference maps used by the tests, benchmarks and example data.

use crate::exact::{integer, Norm, Rational};
use crate::simplicial::{Complex, PLMap};

fn build(tops: &[&[&str]], values: &[(&str, &[i64])], norm: Norm) -> PLMap {
    let tops: Vec<Vec<&str>> = tops.iter().map(|t| t.to_vec()).collect();
    let complex = Complex::build(&tops).expect("fixture complex");
    let n = values[0].1.len();
    let mut vals: Vec<Vec<Rational>> = vec![Vec::new(); complex.vertex_count()];
    for (id, v) in values {
        vals[complex.vertex_index(id).expect("fixture vertex")] = v.iter().map(|&x| integer(x)).collect();
    }
    PLMap::new(complex, vals, n, norm).expect("fixture map")
}

/// A single edge with values −1 and +1.
pub fn edge() -> PLMap {
    build(&[&["v0", "v1"]], &[("v0", &[-1]), ("v1", &[1])], Norm::Linf)
}

/// Six vertices on two rows (`y = −1` and `y = 1`), four triangles, `f(x, y) = y`.
pub fn rectangle() -> PLMap {
    build(
        &[&["b0", "b1", "t1"], &["b0", "t0", "t1"], &["b1", "b2", "t2"], &["b1", "t1", "t2"]],
        &[("b0", &[-1]), ("b1", &[-1]), ("b2", &[-1]), ("t0", &[1]), ("t1", &[1]), ("t2", &[1])],
        Norm::Linf,
    )
}

const GRID: [(&str, [i64; 2]); 9] = [
    ("c", [0, 0]),
    ("e", [1, 0]),
    ("ne", [1, 1]),
    ("n", [0, 1]),
    ("nw", [-1, 1]),
    ("w", [-1, 0]),
    ("sw", [-1, -1]),
    ("s", [0, -1]),
    ("se", [1, -1]),
];

const GRID_TRIANGLES: [&[&str]; 8] = [
    &["c", "e", "ne"],
    &["c", "ne", "n"],
    &["c", "n", "nw"],
    &["c", "nw", "w"],
    &["c", "w", "sw"],
    &["c", "sw", "s"],
    &["c", "s", "se"],
    &["c", "se", "e"],
];

/// The square `[−1, 1]²` on the 3×3 grid, cut by the diagonals through the
/// centre into eight triangles, with `f` the identity and the ℓ∞ norm.
pub fn grid_identity() -> PLMap {
    let values: Vec<(&str, &[i64])> = GRID.iter().map(|(id, v)| (*id, v.as_slice())).collect();
    build(&GRID_TRIANGLES, &values, Norm::Linf)
}

/// An 8-cycle mapped around the unit ℓ∞ sphere twice through the four axis points.
pub fn octagon() -> PLMap {
    let ids = ["o0", "o1", "o2", "o3", "o4", "o5", "o6", "o7"];
    let axis: [[i64; 2]; 4] = [[1, 0], [0, 1], [-1, 0], [0, -1]];
    let edges: Vec<[&str; 2]> = (0..8).map(|i| [ids[i], ids[(i + 1) % 8]]).collect();
    let tops: Vec<&[&str]> = edges.iter().map(|e| e.as_slice()).collect();
    let values: Vec<(&str, &[i64])> = ids.iter().enumerate().map(|(i, id)| (*id, axis[i % 4].as_slice())).collect();
    build(&tops, &values, Norm::Linf)
}
