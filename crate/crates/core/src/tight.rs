//! Tight contact structures on solid tori as decorated Farey paths.
//!
//! A structure on the solid torus with lower meridian `r` and boundary
//! dividing slope `s` is a sign on every edge of the minimal path from `r`
//! clockwise to `s` except the first, up to shuffling signs inside
//! continued fraction blocks.

use std::collections::{HashSet, VecDeque};
use std::ops::Range;

use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::paths::{block_ranges, lengthen_with_split, minimal_path, Direction, FareyPath};
use crate::sign::Sign;
use crate::slope::{cf_minus, is_edge, Slope};

/// A Farey path with a sign on every edge but the first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DecoratedPath {
    path: FareyPath,
    signs: Vec<Sign>,
}

impl DecoratedPath {
    pub fn new(path: FareyPath, signs: Vec<Sign>) -> Result<DecoratedPath> {
        if path.direction() != Direction::Clockwise {
            return Err(Error::InvalidPath("decorated paths run clockwise".into()));
        }
        if path.edge_count() == 0 {
            return Err(Error::InvalidPath("a decorated path needs at least one edge".into()));
        }
        if signs.len() != path.edge_count() - 1 {
            return Err(Error::InvalidPath(format!(
                "{} edges need {} signs, got {}",
                path.edge_count(),
                path.edge_count() - 1,
                signs.len()
            )));
        }
        Ok(DecoratedPath { path, signs })
    }

    pub fn uniform(path: FareyPath, sign: Sign) -> Result<DecoratedPath> {
        let n = path.edge_count().saturating_sub(1);
        DecoratedPath::new(path, vec![sign; n])
    }

    pub fn path(&self) -> &FareyPath {
        &self.path
    }

    /// Signs of edges `1..`; edge 0 carries none.
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign_of(&self, edge: usize) -> Option<Sign> {
        edge.checked_sub(1).map(|i| self.signs[i])
    }
}

/// Blocks of the signed edges `1..` of a path. The unsigned first edge is
/// left out even when it continues a block.
pub fn signed_blocks(path: &FareyPath) -> Vec<Range<usize>> {
    block_ranges(path.vertices(), 1)
}

/// A decorated path up to shuffling, recorded as the number of minus signs in
/// each signed block.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ShuffleClass {
    path: FareyPath,
    blocks: Vec<Range<usize>>,
    minus: Vec<usize>,
}

/// How the signs of one block are distributed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BlockSigns {
    AllPlus,
    AllMinus,
    Mixed,
}

impl ShuffleClass {
    pub fn new(path: FareyPath, minus: Vec<usize>) -> Result<ShuffleClass> {
        if path.direction() != Direction::Clockwise || path.edge_count() == 0 {
            return Err(Error::InvalidPath("shuffle classes live on clockwise paths".into()));
        }
        let blocks = signed_blocks(&path);
        if blocks.len() != minus.len() {
            return Err(Error::InvalidPath(format!(
                "path has {} signed blocks, got {} minus counts",
                blocks.len(),
                minus.len()
            )));
        }
        for (b, &m) in blocks.iter().zip(&minus) {
            if m > b.len() {
                return Err(Error::InvalidPath(format!("{m} minus signs in a block of {}", b.len())));
            }
        }
        Ok(ShuffleClass { path, blocks, minus })
    }

    pub fn path(&self) -> &FareyPath {
        &self.path
    }

    /// Signed blocks as ranges of edge indices (edge 0 is the unsigned edge).
    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn minus_counts(&self) -> &[usize] {
        &self.minus
    }

    pub fn block_signs(&self, block: usize) -> BlockSigns {
        let (m, len) = (self.minus[block], self.blocks[block].len());
        match m {
            0 => BlockSigns::AllPlus,
            _ if m == len => BlockSigns::AllMinus,
            _ => BlockSigns::Mixed,
        }
    }

    /// Sign pattern of the last signed block, `None` when nothing is signed.
    pub fn terminal_block_signs(&self) -> Option<BlockSigns> {
        self.blocks.len().checked_sub(1).map(|b| self.block_signs(b))
    }

    /// Canonical representative: minus signs at the clockwise end of each
    /// block.
    pub fn representative(&self) -> DecoratedPath {
        let mut signs = Vec::with_capacity(self.path.edge_count().saturating_sub(1));
        for (b, &m) in self.blocks.iter().zip(&self.minus) {
            signs.extend(std::iter::repeat_n(Sign::Plus, b.len() - m));
            signs.extend(std::iter::repeat_n(Sign::Minus, m));
        }
        DecoratedPath { path: self.path.clone(), signs }
    }
}

impl Serialize for ShuffleClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        // edges numbered from 1; the unsigned first edge is listed as its own
        // block with no minus signs
        let mut blocks: Vec<Vec<usize>> = vec![vec![1]];
        blocks.extend(self.blocks.iter().map(|b| b.clone().map(|e| e + 1).collect()));
        let mut minus = vec![0];
        minus.extend_from_slice(&self.minus);
        let mut st = serializer.serialize_struct("ShuffleClass", 3)?;
        st.serialize_field("path", &self.path)?;
        st.serialize_field("blocks", &blocks)?;
        st.serialize_field("minus", &minus)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ShuffleClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<ShuffleClass, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            path: Vec<Slope>,
            blocks: Vec<Vec<usize>>,
            minus: Vec<usize>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let path = FareyPath::new(raw.path).map_err(D::Error::custom)?;
        if raw.minus.first() != Some(&0) || raw.blocks.first().map(Vec::as_slice) != Some(&[1][..]) {
            return Err(D::Error::custom("first block must be the unsigned edge [1] with 0 minus signs"));
        }
        let class = ShuffleClass::new(path, raw.minus[1..].to_vec()).map_err(D::Error::custom)?;
        let listed: Vec<Vec<usize>> = raw.blocks[1..].to_vec();
        let actual: Vec<Vec<usize>> = class.blocks.iter().map(|b| b.clone().map(|e| e + 1).collect()).collect();
        if listed != actual {
            return Err(D::Error::custom("blocks do not match the path"));
        }
        Ok(class)
    }
}

pub fn shuffle_canonical(d: &DecoratedPath) -> ShuffleClass {
    let blocks = signed_blocks(&d.path);
    let minus = blocks
        .iter()
        .map(|b| b.clone().filter(|&e| d.signs[e - 1] == Sign::Minus).count())
        .collect();
    ShuffleClass { path: d.path.clone(), blocks, minus }
}

fn block_product(path: &FareyPath) -> u64 {
    signed_blocks(path).iter().map(|b| b.len() as u64 + 1).product()
}

/// Number of tight structures on the solid torus with lower meridian `r` and
/// dividing slope `s`.
pub fn count_tight(r: Slope, s: Slope) -> Result<u64> {
    Ok(block_product(&minimal_path(r, s)?))
}

/// `(a₁ - 1)⋯(aₙ - 1)` where `1/r = [a₀, …, aₙ]`.
pub fn phi(r: Slope) -> Result<u64> {
    if r.is_infinite() || r <= Slope::ZERO || r >= Slope::ONE {
        return Err(Error::Domain(format!("phi needs r in (0, 1), got {r}")));
    }
    let cf = cf_minus(r.reciprocal())?;
    Ok(cf.entries()[1..].iter().map(|&a| (a - 1) as u64).product())
}

/// Number of tight structures on the solid torus with upper meridian `x > 1`
/// and dividing slope `s`, counted on the minimal path from `x`
/// anticlockwise to `s`.
pub fn count_tight_upper(x: Slope, s: Slope) -> Result<u64> {
    if x.is_infinite() || x <= Slope::ONE {
        return Err(Error::Domain(format!("upper meridian must be > 1, got {x}")));
    }
    let path = minimal_path(s, x)?.reversed();
    Ok(block_ranges(path.vertices(), 1).iter().map(|b| b.len() as u64 + 1).product())
}

/// An isotopy class of tight structures on a solid torus.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct SolidTorusStructure {
    pub meridian: Slope,
    pub dividing: Slope,
    pub class: ShuffleClass,
}

impl SolidTorusStructure {
    pub fn new(class: ShuffleClass) -> SolidTorusStructure {
        SolidTorusStructure { meridian: class.path.first(), dividing: class.path.last(), class }
    }

    pub fn representative(&self) -> DecoratedPath {
        self.class.representative()
    }
}

/// All classes on `minimal_path(r, s)`, ordered lexicographically by minus
/// counts.
pub fn enumerate_tight(r: Slope, s: Slope) -> Result<Vec<SolidTorusStructure>> {
    let path = minimal_path(r, s)?;
    Ok(enumerate_classes(&path)
        .into_iter()
        .map(SolidTorusStructure::new)
        .collect())
}

pub(crate) fn enumerate_classes(path: &FareyPath) -> Vec<ShuffleClass> {
    let blocks = signed_blocks(path);
    let mut minus = vec![0usize; blocks.len()];
    let mut out = Vec::new();
    loop {
        out.push(ShuffleClass { path: path.clone(), blocks: blocks.clone(), minus: minus.clone() });
        // odometer, last block fastest
        let mut i = blocks.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if minus[i] < blocks[i].len() {
                minus[i] += 1;
                break;
            }
            minus[i] = 0;
        }
    }
}

/// Signs for the edges of one block with `sign` placed on `edge` and the
/// rest in canonical order.
fn arrange_block(block: &Range<usize>, minus: usize, edge: usize, sign: Sign) -> Option<Vec<Sign>> {
    let len = block.len();
    let rest_minus = match sign {
        Sign::Minus if minus >= 1 => minus - 1,
        Sign::Plus if minus < len => minus,
        _ => return None,
    };
    let mut rest = std::iter::repeat_n(Sign::Plus, len - 1 - rest_minus)
        .chain(std::iter::repeat_n(Sign::Minus, rest_minus));
    Some(
        block
            .clone()
            .map(|e| if e == edge { sign } else { rest.next().unwrap() })
            .collect(),
    )
}

/// Searches for a sequence of consistent shortenings, interleaved with
/// shuffles inside blocks, that reaches the minimal path. Returns the class
/// reached.
pub fn shorten_to_minimal(d: &DecoratedPath) -> Option<ShuffleClass> {
    let start = shuffle_canonical(d);
    let mut seen: HashSet<ShuffleClass> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);

    while let Some(state) = queue.pop_front() {
        if state.path.is_minimal() {
            return Some(state);
        }
        let verts = state.path.vertices();
        let block_of = |e: usize| state.blocks.iter().position(|b| b.contains(&e)).unwrap();
        for i in 1..verts.len() - 1 {
            if !is_edge(verts[i - 1], verts[i + 1]) {
                continue;
            }
            let right = block_of(i);
            for sign in [Sign::Plus, Sign::Minus] {
                let Some(right_signs) = arrange_block(&state.blocks[right], state.minus[right], i, sign) else {
                    continue;
                };
                let mut signs = state.representative().signs;
                for (e, sg) in state.blocks[right].clone().zip(right_signs) {
                    signs[e - 1] = sg;
                }
                if i > 1 {
                    let left = block_of(i - 1);
                    let Some(left_signs) = arrange_block(&state.blocks[left], state.minus[left], i - 1, sign) else {
                        continue;
                    };
                    for (e, sg) in state.blocks[left].clone().zip(left_signs) {
                        signs[e - 1] = sg;
                    }
                }
                // merged edge keeps the sign of edge i - 1 (or stays unsigned)
                signs.remove(i - 1);
                let mut vertices = verts.to_vec();
                vertices.remove(i);
                let path = FareyPath::new(vertices).expect("shortening keeps a monotone path");
                let next = shuffle_canonical(&DecoratedPath { path, signs });
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

pub fn is_tight(d: &DecoratedPath) -> bool {
    shorten_to_minimal(d).is_some()
}

/// Lengthens a decorated path through `t`. Pieces of a signed edge inherit
/// its sign; pieces of the unsigned first edge are signed `+` apart from the
/// piece at the meridian.
pub fn lengthen_decorated(d: &DecoratedPath, t: Slope) -> Result<DecoratedPath> {
    let (path, split) = lengthen_with_split(&d.path, t)?;
    let Some((edge, pieces)) = split else {
        return Ok(d.clone());
    };
    let mut signs = Vec::with_capacity(path.edge_count() - 1);
    if edge == 0 {
        signs.extend(std::iter::repeat_n(Sign::Plus, pieces - 1));
        signs.extend_from_slice(&d.signs);
    } else {
        let sign = d.signs[edge - 1];
        signs.extend_from_slice(&d.signs[..edge - 1]);
        signs.extend(std::iter::repeat_n(sign, pieces));
        signs.extend_from_slice(&d.signs[edge..]);
    }
    DecoratedPath::new(path, signs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    fn path(ts: &[&str]) -> FareyPath {
        FareyPath::new(ts.iter().map(|t| s(t)).collect()).unwrap()
    }

    #[test]
    fn canonical_forms() {
        let p = path(&["9/25", "4/11", "3/8", "2/5", "1/2"]);
        let a = shuffle_canonical(&DecoratedPath::new(p.clone(), vec![Plus, Minus, Plus]).unwrap());
        let b = shuffle_canonical(&DecoratedPath::new(p.clone(), vec![Minus, Plus, Plus]).unwrap());
        assert_eq!(a.minus_counts(), &[1]);
        assert_eq!(a.blocks(), std::slice::from_ref(&(1..4)));
        assert_eq!(a, b);
        let c = shuffle_canonical(&DecoratedPath::uniform(p, Plus).unwrap());
        assert_eq!(c.minus_counts(), &[0]);
        assert_eq!(a.representative().signs(), &[Plus, Plus, Minus]);
    }

    #[test]
    fn counts() {
        assert_eq!(count_tight(s("9/25"), s("1/2")).unwrap(), 4);
        assert_eq!(count_tight(s("2/5"), s("1/2")).unwrap(), 1);
        assert_eq!(count_tight(s("1/6"), s("1/5")).unwrap(), 1);
        assert!(count_tight(s("1/2"), s("1/2")).is_err());
        assert_eq!(phi(s("1/7")).unwrap(), 1);
        assert_eq!(phi(s("9/25")).unwrap(), 4);
        assert_eq!(phi(s("13/49")).unwrap(), 4);
        assert!(phi(Slope::ONE).is_err());
        assert!(phi(s("-1/3")).is_err());
    }

    #[test]
    fn upper_counts() {
        assert_eq!(count_tight_upper(s("25/9"), Slope::ONE).unwrap(), 8);
        assert_eq!(count_tight_upper(s("25/9"), s("2")).unwrap(), 4);
        assert_eq!(count_tight_upper(s("6"), s("5")).unwrap(), 1);
        assert!(count_tight_upper(s("1/2"), s("1/3")).is_err());
    }

    #[test]
    fn enumeration() {
        let all = enumerate_tight(s("9/25"), s("1/2")).unwrap();
        let minus: Vec<_> = all.iter().map(|x| x.class.minus_counts().to_vec()).collect();
        assert_eq!(minus, vec![vec![0], vec![1], vec![2], vec![3]]);
        let one = enumerate_tight(s("2/5"), s("1/2")).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].class.minus_counts().is_empty());
        assert_eq!(enumerate_tight(s("7/32"), s("1/4")).unwrap().len(), 2);
    }

    #[test]
    fn tightness() {
        let p = minimal_path(s("9/25"), s("1/2")).unwrap();
        assert!(is_tight(&DecoratedPath::new(p, vec![Minus, Plus, Minus]).unwrap()));

        let long = path(&["inf", "0", "1/3", "1/2"]);
        assert!(is_tight(&DecoratedPath::new(long.clone(), vec![Plus, Plus]).unwrap()));
        assert!(!is_tight(&DecoratedPath::new(long.clone(), vec![Plus, Minus]).unwrap()));
        let reached = shorten_to_minimal(&DecoratedPath::new(long, vec![Minus, Minus]).unwrap()).unwrap();
        assert_eq!(reached.path().vertices(), &[Slope::INFINITY, s("0"), s("1/2")]);
        assert_eq!(reached.minus_counts(), &[1]);
    }

    #[test]
    fn decorated_lengthening() {
        let p = path(&["inf", "0", "1/2"]);
        for sign in [Plus, Minus] {
            let d = DecoratedPath::new(p.clone(), vec![sign]).unwrap();
            let l = lengthen_decorated(&d, s("2/5")).unwrap();
            assert_eq!(l.path().vertices(), path(&["inf", "0", "1/3", "2/5", "1/2"]).vertices());
            assert_eq!(l.signs(), &[sign; 3]);
            assert!(is_tight(&l));
        }
        let d = DecoratedPath::new(p.clone(), vec![Minus]).unwrap();
        let l = lengthen_decorated(&d, s("-3")).unwrap();
        assert_eq!(l.path().vertices(), path(&["inf", "-3", "-2", "-1", "0", "1/2"]).vertices());
        assert_eq!(l.signs(), &[Plus, Plus, Plus, Minus]);
        assert!(is_tight(&l));

        let edge = DecoratedPath::new(path(&["inf", "0"]), vec![]).unwrap();
        assert!(lengthen_decorated(&edge, s("1/2")).is_err());
    }

    #[test]
    fn json_schema() {
        let p = minimal_path(s("9/25"), s("1/2")).unwrap();
        let c = ShuffleClass::new(p, vec![1]).unwrap();
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"path":["9/25","4/11","3/8","2/5","1/2"],"blocks":[[1],[2,3,4]],"minus":[0,1]}"#);
        let back: ShuffleClass = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<ShuffleClass>(
            r#"{"path":["9/25","4/11","3/8","2/5","1/2"],"blocks":[[1],[2],[3,4]],"minus":[0,0,1]}"#
        )
        .is_err());
    }
}
