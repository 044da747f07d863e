//! Tight contact structures on `r`-surgery on the right-handed trefoil for
//! `r ∈ (0, 1)`, and their fillability verdicts.
//!
//! For `r ∈ [1/(n+1), 1/n)` a structure is a triple `(k, l, P)`: a row
//! `k ∈ 1..=n` of the classification triangle, the number `l ∈ 0..=n-k` of
//! minus signs on the block `1/n → 1/(n-1) → ⋯ → 1/k`, and a shuffle class
//! `P` on the minimal path from `r` to `1/n`. Verdicts are looked up from a
//! fixed table of published results; anything outside it is reported as not
//! covered.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::paths::minimal_path;
use crate::sign::Sign;
use crate::slope::{neighbors_in_interval, Slope};
use crate::tight::{enumerate_classes, shuffle_canonical, BlockSigns, DecoratedPath, ShuffleClass};

fn check_unit_interval(r: Slope) -> Result<()> {
    if r.is_infinite() || r <= Slope::ZERO || r >= Slope::ONE {
        return Err(Error::Domain(format!("surgery coefficient must lie in (0, 1), got {r}")));
    }
    Ok(())
}

/// The `n` with `1/(n+1) <= r < 1/n`.
pub fn n_of(r: Slope) -> Result<i64> {
    check_unit_interval(r)?;
    // 1/r ∈ (n, n+1]
    let (num, den) = (r.num(), r.den());
    Ok((den + num - 1) / num - 1)
}

/// `lo <= r < hi`.
fn in_half_open(r: Slope, lo: Slope, hi: Slope) -> bool {
    lo <= r && r < hi
}

fn frac(num: i64, den: i64) -> Slope {
    Slope::new(num, den).expect("nonzero denominator")
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TightStructureId {
    r: Slope,
    n: i64,
    k: i64,
    l: i64,
    p: ShuffleClass,
}

impl TightStructureId {
    pub fn new(r: Slope, k: i64, l: i64, p: ShuffleClass) -> Result<TightStructureId> {
        let n = n_of(r)?;
        if !(1..=n).contains(&k) {
            return Err(Error::Domain(format!("row k = {k} outside 1..={n}")));
        }
        if !(0..=n - k).contains(&l) {
            return Err(Error::Domain(format!("l = {l} outside 0..={}", n - k)));
        }
        let expected = minimal_path(r, Slope::reciprocal_of(n))?;
        if p.path() != &expected {
            return Err(Error::Domain(format!("P must live on {expected}")));
        }
        Ok(TightStructureId { r, n, k, l, p })
    }

    pub fn r(&self) -> Slope {
        self.r
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn p(&self) -> &ShuffleClass {
        &self.p
    }
}

impl fmt::Display for TightStructureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi^{}_{{{},P{:?}}} on r = {}", self.k, self.l, self.p.minus_counts(), self.r)
    }
}

/// All `n(n+1)/2 · Φ(r)` structures, by row, then `l`, then `P`.
pub fn enumerate_structures(r: Slope) -> Result<Vec<TightStructureId>> {
    let n = n_of(r)?;
    let classes = enumerate_classes(&minimal_path(r, Slope::reciprocal_of(n))?);
    let mut out = Vec::new();
    for k in 1..=n {
        for l in 0..=n - k {
            for p in &classes {
                out.push(TightStructureId { r, n, k, l, p: p.clone() });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideEdge {
    /// `l = 0`
    Low,
    /// `l = n - k`
    High,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TrianglePosition {
    Base,
    Top,
    Interior,
    Side(SideEdge),
}

impl TrianglePosition {
    pub fn tag(&self) -> &'static str {
        match self {
            TrianglePosition::Base => "Base",
            TrianglePosition::Top => "Top",
            TrianglePosition::Interior => "Interior",
            TrianglePosition::Side(_) => "Side",
        }
    }
}

impl fmt::Display for TrianglePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrianglePosition::Side(SideEdge::Low) => write!(f, "Side(low)"),
            TrianglePosition::Side(SideEdge::High) => write!(f, "Side(high)"),
            other => f.write_str(other.tag()),
        }
    }
}

/// Position of `(k, l)` in the triangle of height `n`. Row 1 counts as the
/// base even when `n = 1`.
pub fn position_of(n: i64, k: i64, l: i64) -> TrianglePosition {
    if k == 1 {
        TrianglePosition::Base
    } else if k == n {
        TrianglePosition::Top
    } else if l >= 1 && l < n - k {
        TrianglePosition::Interior
    } else if l == 0 {
        TrianglePosition::Side(SideEdge::Low)
    } else {
        TrianglePosition::Side(SideEdge::High)
    }
}

pub fn triangle_position(id: &TightStructureId) -> TrianglePosition {
    position_of(id.n, id.k, id.l)
}

/// The decorated path from `r` to `1/k`: a representative of `P` followed by
/// the block `1/n → ⋯ → 1/k` with its `l` minus signs at the clockwise end.
pub fn full_path(id: &TightStructureId) -> DecoratedPath {
    let rep = id.p.representative();
    let mut vertices = rep.path().vertices().to_vec();
    let mut signs = rep.signs().to_vec();
    let tail = (id.n - id.k) as usize;
    vertices.extend((id.k..id.n).rev().map(Slope::reciprocal_of));
    signs.extend(std::iter::repeat_n(Sign::Plus, tail - id.l as usize));
    signs.extend(std::iter::repeat_n(Sign::Minus, id.l as usize));
    let path = crate::paths::FareyPath::new(vertices).expect("integer-reciprocal block continues P");
    DecoratedPath::new(path, signs).expect("one sign per signed edge")
}

/// A convex torus between basic slices of opposite signs, with the dividing
/// slopes of its two associated tori (`s1` on the clockwise side).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MixedTorus {
    pub s0: Slope,
    pub s1: Slope,
    pub s_neg1: Slope,
}

/// Interior vertices of the full path at which some shuffle representative
/// has basic slices of opposite sign on the two sides.
pub fn mixed_tori(id: &TightStructureId) -> Vec<MixedTorus> {
    let d = full_path(id);
    let class = shuffle_canonical(&d);
    let verts = d.path().vertices();
    let block_of = |e: usize| class.blocks().iter().position(|b| b.contains(&e)).unwrap();
    let has = |b: usize, sign: Sign| match (class.block_signs(b), sign) {
        (BlockSigns::Mixed, _) => true,
        (BlockSigns::AllPlus, s) => s == Sign::Plus,
        (BlockSigns::AllMinus, s) => s == Sign::Minus,
    };
    let mut out = Vec::new();
    // vertex i joins edges i - 1 and i; edge 0 is unsigned
    for i in 2..verts.len().saturating_sub(1) {
        let (left, right) = (block_of(i - 1), block_of(i));
        let mixed = if left == right {
            class.block_signs(left) == BlockSigns::Mixed
        } else {
            (has(left, Sign::Plus) || has(right, Sign::Plus)) && (has(left, Sign::Minus) || has(right, Sign::Minus))
        };
        if mixed {
            out.push(MixedTorus { s0: verts[i], s1: verts[i + 1], s_neg1: verts[i - 1] });
        }
    }
    out
}

/// Which exceptional slopes to report.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ExceptionalMode {
    /// Every Farey neighbor of `s0` strictly inside the arc between the
    /// associated slopes that avoids `s0`.
    #[default]
    Raw,
    /// The raw set minus the slopes dropped in the published arguments: for
    /// the torus at `1/n` between `2/(2n+1)` and `1/(n-1)` only `1/(n+1)` is
    /// kept.
    Published,
}

pub fn exceptional_slopes(t: &MixedTorus, mode: ExceptionalMode) -> Result<Vec<Slope>> {
    let mut raw = neighbors_in_interval(t.s0, t.s1, t.s_neg1, false)?;
    if mode == ExceptionalMode::Published {
        raw.retain(|s| !published_exclusion(t, *s));
    }
    Ok(raw)
}

fn published_exclusion(t: &MixedTorus, s: Slope) -> bool {
    if s != Slope::ZERO || t.s0.num() != 1 || t.s0.den() < 2 {
        return false;
    }
    let n = t.s0.den();
    t.s1 == Slope::reciprocal_of(n - 1) && t.s_neg1 == frac(2, 2 * n + 1)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Fillability {
    Stein,
    StrongNotExact,
    StrongSteinConditional,
    NotCovered,
}

impl fmt::Display for Fillability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The published result a verdict rests on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Citation {
    /// Bottom row: Legendrian surgery on the stabilized core in the torus
    /// bundle with its Stein fillable structure.
    BaseRow,
    /// Interior: a mixed torus whose only exceptional splitting slope forces
    /// a filling of a non-fillable torus bundle structure.
    InteriorSplitting,
    /// `r ∈ [(2n-1)/2n², 2/(2n+1))`, built from two copies of the `(n,1)`-cable.
    NOneCable,
    /// `r ∈ [9/25, 4/11)`, built from the `(5,2)`-cable.
    FiveTwoCable,
    /// `r ∈ [13/49, 4/15)`, built from the `(7,2)`-cable.
    SevenTwoCable,
    /// `n ∈ {2, 3}` on the `(n,1)`-cable interval.
    SmallTriangle,
}

impl fmt::Display for Citation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Citation::BaseRow => "base-row",
            Citation::InteriorSplitting => "interior-splitting",
            Citation::NOneCable => "n-one-cable",
            Citation::FiveTwoCable => "five-two-cable",
            Citation::SevenTwoCable => "seven-two-cable",
            Citation::SmallTriangle => "small-triangle",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FillabilityVerdict {
    pub status: Fillability,
    pub citation: Option<Citation>,
    pub note: Option<String>,
}

impl FillabilityVerdict {
    fn cited(status: Fillability, citation: Citation) -> FillabilityVerdict {
        FillabilityVerdict { status, citation: Some(citation), note: None }
    }

    fn not_covered() -> FillabilityVerdict {
        FillabilityVerdict { status: Fillability::NotCovered, citation: None, note: None }
    }
}

/// Whether the last signed block of `P` carries a single sign. A path with no
/// signed edges counts as uniform.
fn terminal_uniform(p: &ShuffleClass) -> bool {
    !matches!(p.terminal_block_signs(), Some(BlockSigns::Mixed))
}

/// `[(2n-1)/2n², 2/(2n+1))`
pub fn n_one_cable_interval(n: i64) -> (Slope, Slope) {
    (frac(2 * n - 1, 2 * n * n), frac(2, 2 * n + 1))
}

pub fn five_two_cable_interval() -> (Slope, Slope) {
    (frac(9, 25), frac(4, 11))
}

pub fn seven_two_cable_interval() -> (Slope, Slope) {
    (frac(13, 49), frac(4, 15))
}

/// Looks up the verdict for `id`; the first matching rule wins.
pub fn classify(id: &TightStructureId) -> FillabilityVerdict {
    use Fillability::*;
    let (r, n) = (id.r, id.n);
    let pos = triangle_position(id);

    if pos == TrianglePosition::Base {
        return FillabilityVerdict::cited(Stein, Citation::BaseRow);
    }
    if pos == TrianglePosition::Interior {
        return FillabilityVerdict::cited(StrongNotExact, Citation::InteriorSplitting);
    }

    let (lo, hi) = n_one_cable_interval(n);
    let on_n_one = in_half_open(r, lo, hi);
    if n > 3 && on_n_one {
        let p_signs = id.p.terminal_block_signs();
        let stein = match pos {
            TrianglePosition::Top => true,
            TrianglePosition::Side(SideEdge::Low) => p_signs == Some(BlockSigns::AllPlus),
            TrianglePosition::Side(SideEdge::High) => p_signs == Some(BlockSigns::AllMinus),
            _ => unreachable!("base and interior handled above"),
        };
        if stein {
            return FillabilityVerdict::cited(Stein, Citation::NOneCable);
        }
        return FillabilityVerdict {
            status: StrongSteinConditional,
            citation: Some(Citation::NOneCable),
            note: Some(format!(
                "Stein iff xi^{}_{} on -Sigma(2,3,{}) is Stein",
                id.k,
                id.l,
                6 * n + 5
            )),
        };
    }

    let top_by_terminal_block = |citation| {
        if terminal_uniform(&id.p) {
            FillabilityVerdict::cited(Stein, citation)
        } else {
            FillabilityVerdict::cited(StrongNotExact, citation)
        }
    };
    let (lo, hi) = five_two_cable_interval();
    if n == 2 && in_half_open(r, lo, hi) && pos == TrianglePosition::Top {
        return top_by_terminal_block(Citation::FiveTwoCable);
    }
    let (lo, hi) = seven_two_cable_interval();
    if n == 3 && in_half_open(r, lo, hi) {
        match pos {
            TrianglePosition::Side(_) => return FillabilityVerdict::cited(Stein, Citation::SevenTwoCable),
            TrianglePosition::Top => return top_by_terminal_block(Citation::SevenTwoCable),
            _ => {}
        }
    }
    if (n == 2 || n == 3) && on_n_one {
        return FillabilityVerdict::cited(Stein, Citation::SmallTriangle);
    }
    FillabilityVerdict::not_covered()
}

/// Verdict tallies over all structures on one surgery.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct VerdictSummary {
    pub total: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub stein: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub strong_not_exact: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub strong_stein_conditional: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub not_covered: u64,
}

fn is_zero(x: &u64) -> bool {
    *x == 0
}

impl VerdictSummary {
    pub fn count(&self, status: Fillability) -> u64 {
        match status {
            Fillability::Stein => self.stein,
            Fillability::StrongNotExact => self.strong_not_exact,
            Fillability::StrongSteinConditional => self.strong_stein_conditional,
            Fillability::NotCovered => self.not_covered,
        }
    }

    fn add(&mut self, status: Fillability) {
        self.total += 1;
        match status {
            Fillability::Stein => self.stein += 1,
            Fillability::StrongNotExact => self.strong_not_exact += 1,
            Fillability::StrongSteinConditional => self.strong_stein_conditional += 1,
            Fillability::NotCovered => self.not_covered += 1,
        }
    }
}

pub fn verdict_summary(r: Slope) -> Result<VerdictSummary> {
    let mut summary = VerdictSummary::default();
    for id in enumerate_structures(r)? {
        summary.add(classify(&id).status);
    }
    Ok(summary)
}

/// One row of a sweep over surgery coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SweepRow {
    pub r: Slope,
    pub n: i64,
    pub phi: u64,
    pub summary: VerdictSummary,
}

/// Every `r = p/q` with `q <= bound` in `[lo, hi) ∩ (0, 1)`, in increasing
/// order.
pub fn slopes_in(lo: Slope, hi: Slope, bound: i64) -> Vec<Slope> {
    let mut out: Vec<Slope> = (2..=bound.max(1))
        .flat_map(|q| (1..q).map(move |p| (p, q)))
        .filter(|&(p, q)| num_integer::gcd(p, q) == 1)
        .map(|(p, q)| frac(p, q))
        .filter(|&r| in_half_open(r, lo, hi))
        .collect();
    out.sort();
    out
}

pub fn sweep(lo: Slope, hi: Slope, bound: i64) -> Result<Vec<SweepRow>> {
    slopes_in(lo, hi, bound)
        .into_par_iter()
        .map(|r| {
            Ok(SweepRow {
                r,
                n: n_of(r)?,
                phi: crate::tight::phi(r)?,
                summary: verdict_summary(r)?,
            })
        })
        .collect()
}

/// Machine-readable verdict for one structure.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerdictRecord {
    pub r: Slope,
    pub k: i64,
    pub l: i64,
    #[serde(rename = "P")]
    pub p: ShuffleClass,
    pub position: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<SideEdge>,
    pub status: Fillability,
    #[serde(rename = "cite", skip_serializing_if = "Option::is_none")]
    pub citation: Option<Citation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerdictRecord {
    pub fn new(id: &TightStructureId) -> VerdictRecord {
        let pos = triangle_position(id);
        let verdict = classify(id);
        VerdictRecord {
            r: id.r,
            k: id.k,
            l: id.l,
            p: id.p.clone(),
            position: pos.tag(),
            side: match pos {
                TrianglePosition::Side(e) => Some(e),
                _ => None,
            },
            status: verdict.status,
            citation: verdict.citation,
            note: verdict.note,
        }
    }
}
