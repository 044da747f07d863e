//! Brute-force oracles shared by the integration tests. None of them reuse
//! the library's neighbor fans, geodesic walk or block detection.

#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use rand::Rng;
use trefoil_tight::Slope;

/// Random slope with `|num|, den <= bound`, `∞` included.
pub fn random_slope<R: Rng>(rng: &mut R, bound: i64) -> Slope {
    loop {
        let (p, q) = (rng.gen_range(-bound..=bound), rng.gen_range(0..=bound));
        if (p, q) != (0, 0) && num_integer::gcd(p, q) == 1 {
            return Slope::new(p, q).unwrap();
        }
    }
}

/// `x < y` on ℚ ∪ {∞}, with `∞` largest.
fn less(x: (i64, i64), y: (i64, i64)) -> bool {
    let ((xn, xd), (yn, yd)) = (x, y);
    match (xd, yd) {
        (0, 0) => false,
        (0, _) => false,
        (_, 0) => true,
        _ => (xn as i128) * (yd as i128) < (yn as i128) * (xd as i128),
    }
}

/// `x` lies on the closed arc that runs clockwise (increasing, wrapping at
/// `∞`) from `a` to `b`.
pub fn on_arc(x: Slope, a: Slope, b: Slope) -> bool {
    let v = |s: Slope| (s.num(), s.den());
    let (x, a, b) = (v(x), v(a), v(b));
    if x == a || x == b {
        return true;
    }
    if less(a, b) {
        less(a, x) && less(x, b)
    } else {
        less(a, x) || less(x, b)
    }
}

/// Solutions `(x, y)` of `d y - n x = ±1` in the box, as slopes `y/x`.
fn box_neighbors(s: Slope, bound: i64) -> Vec<Slope> {
    let (n, d) = (s.num(), s.den());
    let mut out = Vec::new();
    for x in 0..=bound {
        for e in [1, -1] {
            let rhs = e + n * x;
            if d == 0 {
                // -n x = ±1 with n = 1
                if rhs == 0 {
                    for y in -bound..=bound {
                        out.push(Slope::new(y, x).unwrap());
                    }
                }
            } else if rhs % d == 0 {
                let y = rhs / d;
                if y.abs() <= bound && (x, y) != (0, 0) {
                    out.push(Slope::new(y, x).unwrap());
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Length of a shortest edge path from `a` to `b` through slopes on the arc
/// `[a, b]` whose numerator and denominator are no larger than those of the
/// endpoints.
pub fn bfs_distance(a: Slope, b: Slope) -> Option<usize> {
    let bound = [a.num().abs(), b.num().abs(), a.den(), b.den()].into_iter().max().unwrap();
    let mut dist = HashMap::from([(a, 0usize)]);
    let mut queue = VecDeque::from([a]);
    while let Some(v) = queue.pop_front() {
        if v == b {
            return Some(dist[&v]);
        }
        for w in box_neighbors(v, bound) {
            if on_arc(w, a, b) && !dist.contains_key(&w) {
                dist.insert(w, dist[&v] + 1);
                queue.push_back(w);
            }
        }
    }
    None
}

/// Edges `i` and `i + 1` lie in a common continued fraction block: with
/// suitable representatives `v_i + v_{i+2} = 2 v_{i+1}`.
pub fn same_block(vertices: &[Slope], i: usize) -> bool {
    let v = |s: Slope| (s.den() as i128, s.num() as i128);
    let (a, m, c) = (v(vertices[i]), v(vertices[i + 1]), v(vertices[i + 2]));
    [1i128, -1].iter().any(|&e| [1i128, -1].iter().any(|&f| a.0 + e * c.0 == 2 * f * m.0 && a.1 + e * c.1 == 2 * f * m.1))
}

/// Number of shuffle orbits of sign vectors on the signed edges `1..` of a
/// path, found by flood-filling adjacent transpositions inside blocks.
pub fn orbit_count(vertices: &[Slope]) -> u64 {
    let m = vertices.len() - 2;
    let swappable: Vec<usize> = (0..m.saturating_sub(1)).filter(|&j| same_block(vertices, j + 1)).collect();
    let mut seen = vec![false; 1 << m];
    let mut orbits = 0;
    for start in 0..1usize << m {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &j in &swappable {
                let (bj, bk) = ((x >> j) & 1, (x >> (j + 1)) & 1);
                if bj != bk {
                    let y = x ^ (1 << j) ^ (1 << (j + 1));
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
    }
    orbits
}
