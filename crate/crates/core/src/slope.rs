//! Slopes on a torus as points of the Farey circle ℚ ∪ {∞}.
//!
//! A slope `num/den` is stored reduced with `den >= 0`; infinity is `1/0`.
//! The Farey circle is traversed clockwise from `0` through the positive
//! rationals to `∞` and then through the negative rationals back to `0`, so
//! clockwise order agrees with the usual order on ℝ with `∞` as the wrap
//! point. All comparisons are done with integer cross products.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    num: i64,
    den: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { num: 1, den: 0 };
    pub const ZERO: Slope = Slope { num: 0, den: 1 };
    pub const ONE: Slope = Slope { num: 1, den: 1 };

    /// Reduces `num/den`; both `1/0` and `-1/0` become `∞`.
    pub fn new(num: i64, den: i64) -> Result<Slope> {
        if num == 0 && den == 0 {
            return Err(Error::InvalidSlope);
        }
        if den == 0 {
            return Ok(Slope::INFINITY);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Slope { num, den })
    }

    pub const fn integer(n: i64) -> Slope {
        Slope { num: n, den: 1 }
    }

    /// `1/n` for `n >= 1`.
    pub fn reciprocal_of(n: i64) -> Slope {
        Slope::new(1, n).expect("1/n is a valid slope")
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// The primitive vector `(den, num)` representing this slope.
    pub fn vector(&self) -> (i64, i64) {
        (self.den, self.num)
    }

    pub(crate) fn from_vector(den: i128, num: i128) -> Result<Slope> {
        let den = i64::try_from(den).map_err(|_| Error::Domain("slope overflow".into()))?;
        let num = i64::try_from(num).map_err(|_| Error::Domain("slope overflow".into()))?;
        Slope::new(num, den)
    }

    /// `1/x`, exchanging the two coordinates.
    pub fn reciprocal(&self) -> Slope {
        Slope::new(self.den, self.num).expect("nonzero vector")
    }

    /// Position of `self` within the linear order of ℝ ∪ {∞}, ∞ last.
    fn linear_cmp(&self, other: &Slope) -> Ordering {
        0.cmp(&det(self, other))
    }
}

/// `det((den_a, num_a), (den_b, num_b))`; positive iff `b` is after `a` in the
/// linear order of ℝ ∪ {∞}.
pub fn det(a: &Slope, b: &Slope) -> i128 {
    a.den as i128 * b.num as i128 - a.num as i128 * b.den as i128
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        self.linear_cmp(other)
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den {
            0 => write!(f, "inf"),
            1 => write!(f, "{}", self.num),
            d => write!(f, "{}/{}", self.num, d),
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Slope::INFINITY);
        }
        let bad = || Error::Parse(s.to_string());
        match t.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                Slope::new(n, d).map_err(|_| bad())
            }
            None => t.parse::<i64>().map(Slope::integer).map_err(|_| bad()),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Slope, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Farey sum (mediant). `∞` is read as `1/0` next to a nonnegative operand
/// and as `-1/0` next to a negative one.
pub fn farey_sum(a: Slope, b: Slope) -> Result<Slope> {
    if a == b {
        return Err(Error::EqualSlopes(a));
    }
    let lift = |s: Slope, other: Slope| -> (i64, i64) {
        if s.is_infinite() && other.num < 0 {
            (-1, 0)
        } else {
            (s.num, s.den)
        }
    };
    let (an, ad) = lift(a, b);
    let (bn, bd) = lift(b, a);
    let (num, den) = (an + bn, ad + bd);
    if num == 0 && den == 0 {
        return Err(Error::DegenerateMediant(a, b));
    }
    Slope::new(num, den)
}

/// Farey adjacency: `|num_a den_b - num_b den_a| = 1`.
pub fn is_edge(a: Slope, b: Slope) -> bool {
    det(&a, &b).abs() == 1
}

/// Whether `x` lies in the clockwise arc from `a` to `b`.
pub fn cw_interval_contains(x: Slope, a: Slope, b: Slope, closed: bool) -> bool {
    arc_contains(x, a, b, closed, closed)
}

/// Clockwise arc test with independent control of each endpoint.
pub(crate) fn arc_contains(x: Slope, a: Slope, b: Slope, a_closed: bool, b_closed: bool) -> bool {
    if x == a {
        return a_closed;
    }
    if x == b {
        return b_closed;
    }
    if a == b {
        // the full circle minus one point
        return true;
    }
    if a < b {
        a < x && x < b
    } else {
        x > a || x < b
    }
}

/// A vector `w` with `det(v, w) = 1`, i.e. some Farey neighbor of `v` lying
/// clockwise of it.
pub(crate) fn unimodular_partner(v: &Slope) -> (i128, i128) {
    let (d, n) = (v.den as i128, v.num as i128);
    let e = d.extended_gcd(&n);
    // d * x + n * y = g with g = ±1
    let (x, y) = if e.gcd < 0 { (-e.x, -e.y) } else { (e.x, e.y) };
    debug_assert_eq!(d * x + n * y, 1);
    // det((d, n), (w_d, w_n)) = d w_n - n w_d = 1
    (-y, x)
}

fn div_floor(a: i128, b: i128) -> i128 {
    Integer::div_floor(&a, &b)
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -Integer::div_floor(&-a, &b)
}

/// Farey neighbors of `s0` in the clockwise arc `(a, b)` (or `[a, b]`),
/// listed clockwise from `a`.
///
/// The neighbors of `s0` form the fan `w0 + k v` over `k ∈ ℤ`, which runs
/// clockwise as `k` decreases; the arc cuts out a finite run of `k` unless it
/// reaches `s0` itself.
pub fn neighbors_in_interval(s0: Slope, a: Slope, b: Slope, closed: bool) -> Result<Vec<Slope>> {
    if a == s0 || b == s0 || arc_contains(s0, a, b, false, false) {
        return Err(Error::InfiniteNeighborSet(s0, a, b));
    }
    let v = (s0.den as i128, s0.num as i128);
    let w0 = unimodular_partner(&s0);
    let cross = |p: (i128, i128), q: (i128, i128)| p.0 * q.1 - p.1 * q.0;

    // parameter k at which the fan meets the slope, as numerator/denominator
    let crossing = |s: &Slope| -> (i128, i128) {
        let mut t = (s.den as i128, s.num as i128);
        if cross(v, t) < 0 {
            t = (-t.0, -t.1);
        }
        (-cross(w0, t), cross(v, t))
    };
    let (na, da) = crossing(&a);
    let (nb, db) = crossing(&b);
    let (hi, lo) = if closed {
        (div_floor(na, da), div_ceil(nb, db))
    } else {
        (div_ceil(na, da) - 1, div_floor(nb, db) + 1)
    };

    let mut out = Vec::new();
    let mut k = hi;
    while k >= lo {
        let w = (w0.0 + k * v.0, w0.1 + k * v.1);
        let s = Slope::from_vector(w.0, w.1)?;
        if cw_interval_contains(s, a, b, closed) {
            out.push(s);
        }
        k -= 1;
    }
    Ok(out)
}

/// Continued fraction `a₀ - 1/(a₁ - 1/(⋯ - 1/aₙ))` with every entry `>= 2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ContinuedFraction {
    entries: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(entries: Vec<i64>) -> Result<ContinuedFraction> {
        if entries.is_empty() {
            return Err(Error::NormalForm("empty expansion".into()));
        }
        if let Some(bad) = entries.iter().find(|&&a| a < 2) {
            return Err(Error::NormalForm(format!("entry {bad} < 2")));
        }
        Ok(ContinuedFraction { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn value(&self) -> Slope {
        eval_minus(&self.entries)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Evaluates a minus-convention expansion. Entries equal to 1 are allowed
/// here as long as no intermediate value hits 0.
pub(crate) fn eval_minus(entries: &[i64]) -> Slope {
    let (mut num, mut den) = (*entries.last().expect("nonempty") as i128, 1i128);
    for &a in entries.iter().rev().skip(1) {
        // a - den/num
        let (n, d) = (a as i128 * num - den, num);
        num = n;
        den = d;
    }
    Slope::from_vector(den, num).expect("continued fraction value in range")
}

/// The minus-convention expansion of `x > 1`.
pub fn cf_minus(x: Slope) -> Result<ContinuedFraction> {
    if x.is_infinite() || x <= Slope::ONE {
        return Err(Error::Domain(format!("expansion needs a rational > 1, got {x}")));
    }
    let (mut num, mut den) = (x.num as i128, x.den as i128);
    let mut entries = Vec::new();
    loop {
        let a = div_ceil(num, den);
        entries.push(a as i64);
        // x = a - 1/y  =>  y = 1/(a - x) = den / (a den - num)
        let rest = a * den - num;
        if rest == 0 {
            break;
        }
        (num, den) = (den, rest);
    }
    Ok(ContinuedFraction { entries })
}

pub fn cf_value(cf: &ContinuedFraction) -> Result<Slope> {
    ContinuedFraction::new(cf.entries.clone()).map(|c| c.value())
}
