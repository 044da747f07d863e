//! Paths in the Farey graph.

use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::slope::{arc_contains, det, eval_minus, cf_minus, is_edge, unimodular_partner, Slope};

/// Direction in which a path travels around the Farey circle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Clockwise,
    Anticlockwise,
}

/// A monotone path in the Farey graph: consecutive vertices are adjacent and
/// every vertex lies in the closed arc from the first vertex to the last,
/// visited in order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FareyPath {
    vertices: Vec<Slope>,
    direction: Direction,
}

impl FareyPath {
    pub fn new(vertices: Vec<Slope>) -> Result<FareyPath> {
        FareyPath::with_direction(vertices, Direction::Clockwise)
    }

    pub fn with_direction(vertices: Vec<Slope>, direction: Direction) -> Result<FareyPath> {
        let Some(&last) = vertices.last() else {
            return Err(Error::InvalidPath("no vertices".into()));
        };
        for w in vertices.windows(2) {
            if !is_edge(w[0], w[1]) {
                return Err(Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])));
            }
            let ahead = match direction {
                Direction::Clockwise => arc_contains(w[1], w[0], last, false, true),
                Direction::Anticlockwise => arc_contains(w[1], last, w[0], true, false),
            };
            if !ahead {
                return Err(Error::InvalidPath(format!(
                    "{} does not move {:?} from {} towards {}",
                    w[1], direction, w[0], last
                )));
            }
        }
        Ok(FareyPath { vertices, direction })
    }

    pub fn vertices(&self) -> &[Slope] {
        &self.vertices
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn first(&self) -> Slope {
        self.vertices[0]
    }

    pub fn last(&self) -> Slope {
        *self.vertices.last().expect("nonempty")
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn edge(&self, i: usize) -> (Slope, Slope) {
        (self.vertices[i], self.vertices[i + 1])
    }

    pub fn contains(&self, s: Slope) -> bool {
        self.vertices.contains(&s)
    }

    /// The same vertex set traversed the other way.
    pub fn reversed(&self) -> FareyPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        let direction = match self.direction {
            Direction::Clockwise => Direction::Anticlockwise,
            Direction::Anticlockwise => Direction::Clockwise,
        };
        FareyPath { vertices, direction }
    }

    /// Whether this is the minimal path between its endpoints.
    pub fn is_minimal(&self) -> bool {
        let (a, b) = match self.direction {
            Direction::Clockwise => (self.first(), self.last()),
            Direction::Anticlockwise => (self.last(), self.first()),
        };
        if a == b {
            return self.vertices.len() == 1;
        }
        let min = minimal_path(a, b).expect("distinct endpoints");
        min.edge_count() == self.edge_count()
    }
}

impl fmt::Display for FareyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " → ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for FareyPath {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.vertices.serialize(serializer)
    }
}

/// The Farey neighbor of `v` lying furthest clockwise in `(v, b]`.
fn furthest_step(v: Slope, b: Slope) -> Slope {
    let vv = (v.den() as i128, v.num() as i128);
    let mut bb = (b.den() as i128, b.num() as i128);
    let cross = |p: (i128, i128), q: (i128, i128)| p.0 * q.1 - p.1 * q.0;
    if cross(vv, bb) < 0 {
        bb = (-bb.0, -bb.1);
    }
    let w0 = unimodular_partner(&v);
    // neighbors w0 + k v move clockwise as k decreases; keep those with
    // det(w, b) >= 0 and take the smallest such k
    let (n, d) = (-cross(w0, bb), cross(vv, bb));
    let k = -(-n).div_euclid(d); // ceil(n / d), d > 0
    Slope::from_vector(w0.0 + k * vv.0, w0.1 + k * vv.1).expect("neighbor in range")
}

/// The minimal path from `a` clockwise to `b` inside the arc `[a, b]`.
///
/// Built greedily: each step goes to the neighbor of the current vertex that
/// is furthest clockwise without passing `b`.
pub fn minimal_path(a: Slope, b: Slope) -> Result<FareyPath> {
    if a == b {
        return Err(Error::EqualSlopes(a));
    }
    let mut vertices = vec![a];
    let mut v = a;
    while v != b {
        v = furthest_step(v, b);
        vertices.push(v);
    }
    Ok(FareyPath { vertices, direction: Direction::Clockwise })
}

/// The path from `x > 1` anticlockwise to `1` read off the continued
/// fraction of `x` by repeatedly lowering its last entry.
pub fn decrement_path(x: Slope) -> Result<FareyPath> {
    let mut entries = cf_minus(x)?.entries().to_vec();
    let mut vertices = vec![x];
    loop {
        *entries.last_mut().expect("nonempty") -= 1;
        // [.., a, 1] = [.., a - 1]
        while entries.len() > 1 && *entries.last().unwrap() == 1 {
            entries.pop();
            *entries.last_mut().unwrap() -= 1;
        }
        vertices.push(eval_minus(&entries));
        if entries == [1] {
            break;
        }
    }
    Ok(FareyPath { vertices, direction: Direction::Anticlockwise })
}

/// Partition of a path's edges into maximal continued fraction blocks.
///
/// Edge `i` runs from vertex `i` to vertex `i + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockDecomposition {
    blocks: Vec<Range<usize>>,
}

impl BlockDecomposition {
    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, edge: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&edge))
            .expect("edge in range")
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// Whether the two edges meeting at vertex `i` lie in a common block.
pub(crate) fn joins_block(vertices: &[Slope], i: usize) -> bool {
    det(&vertices[i - 1], &vertices[i + 1]).abs() == 2
}

pub fn blocks(path: &FareyPath) -> BlockDecomposition {
    BlockDecomposition { blocks: block_ranges(path.vertices(), 0) }
}

/// Maximal blocks of the edges `from..` of the path through `vertices`.
pub(crate) fn block_ranges(vertices: &[Slope], from: usize) -> Vec<Range<usize>> {
    let edges = vertices.len().saturating_sub(1);
    let mut out = Vec::new();
    let mut start = from;
    for e in from..edges {
        if e + 1 == edges || !joins_block(vertices, e + 1) {
            out.push(start..e + 1);
            start = e + 1;
        }
    }
    out
}

/// Index of the edge whose open arc contains `t`, if any.
pub(crate) fn edge_containing(path: &FareyPath, t: Slope) -> Option<usize> {
    (0..path.edge_count()).find(|&i| {
        let (u, v) = path.edge(i);
        arc_contains(t, u, v, false, false)
    })
}

/// Lengthens a clockwise path so that it passes through `t`, replacing the
/// edge over `t` by the minimal paths into and out of `t`. A path already
/// through `t` comes back unchanged.
pub fn lengthen_through(path: &FareyPath, t: Slope) -> Result<FareyPath> {
    Ok(lengthen_with_split(path, t)?.0)
}

/// As [`lengthen_through`], also reporting which original edge was split
/// and into how many edges.
pub(crate) fn lengthen_with_split(path: &FareyPath, t: Slope) -> Result<(FareyPath, Option<(usize, usize)>)> {
    if path.direction() != Direction::Clockwise {
        return Err(Error::Domain("lengthening expects a clockwise path".into()));
    }
    if path.edge_count() == 0 || !arc_contains(t, path.first(), path.last(), false, false) {
        return Err(Error::Domain(format!(
            "{t} is not strictly between {} and {}",
            path.first(),
            path.last()
        )));
    }
    if path.contains(t) {
        return Ok((path.clone(), None));
    }
    let i = edge_containing(path, t).expect("t is interior to some edge");
    let (u, v) = path.edge(i);
    let into = minimal_path(u, t)?;
    let out = minimal_path(t, v)?;
    let mut vertices = path.vertices[..i].to_vec();
    vertices.extend_from_slice(into.vertices());
    vertices.extend_from_slice(&out.vertices()[1..]);
    vertices.extend_from_slice(&path.vertices[i + 2..]);
    let pieces = into.edge_count() + out.edge_count();
    Ok((FareyPath { vertices, direction: Direction::Clockwise }, Some((i, pieces))))
}
