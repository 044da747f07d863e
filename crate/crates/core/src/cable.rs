//! Surgery on cables: the slope formula, the re-gluing matrix, and its
//! action on decorated paths.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::paths::FareyPath;
use crate::sign::Sign;
use crate::slope::{cw_interval_contains, Slope};
use crate::tight::{lengthen_decorated, shorten_to_minimal, DecoratedPath, SolidTorusStructure};

/// Integer matrix `[[a, b], [c, d]]` of determinant 1 acting on the vector
/// `(den, num)` of a slope, so `y/x ↦ (c x + d y)/(a x + b y)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MobiusMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl MobiusMap {
    pub const IDENTITY: MobiusMap = MobiusMap { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<MobiusMap> {
        let det = a * d - b * c;
        if det != 1 {
            return Err(Error::Determinant(det));
        }
        Ok(MobiusMap { a, b, c, d })
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn determinant(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn apply(&self, s: Slope) -> Slope {
        let (x, y) = (s.den() as i128, s.num() as i128);
        let den = self.a as i128 * x + self.b as i128 * y;
        let num = self.c as i128 * x + self.d as i128 * y;
        Slope::from_vector(den, num).expect("unimodular image is a slope")
    }

    pub fn pow(&self, k: u32) -> MobiusMap {
        (0..k).fold(MobiusMap::IDENTITY, |acc, _| acc * *self)
    }
}

impl Mul for MobiusMap {
    type Output = MobiusMap;

    fn mul(self, o: MobiusMap) -> MobiusMap {
        MobiusMap {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for MobiusMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json {
            m: [[i64; 2]; 2],
        }
        Json { m: self.entries() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MobiusMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<MobiusMap, D::Error> {
        #[derive(Deserialize)]
        struct Json {
            m: [[i64; 2]; 2],
        }
        let [[a, b], [c, d]] = Json::deserialize(deserializer)?.m;
        MobiusMap::new(a, b, c, d).map_err(serde::de::Error::custom)
    }
}

pub fn apply_map(m: &MobiusMap, s: Slope) -> Slope {
    m.apply(s)
}

fn check_cable(p: i64, q: i64) -> Result<()> {
    if p < 2 || p.gcd(&q) != 1 {
        return Err(Error::InvalidCable { p, q });
    }
    Ok(())
}

/// `(pq ± 1)/p²`: surgery on the `(p, q)`-cable with framing one above or
/// below the cabling torus framing, viewed as surgery on the companion.
pub fn cable_surgery_slope(p: i64, q: i64, sign: Sign) -> Result<Slope> {
    check_cable(p, q)?;
    Slope::new(p * q + sign.as_i64(), p * p)
}

/// `[[1 ∓ pq, ±p²], [∓q², 1 ± pq]]`, upper signs for `Sign::Plus`.
pub fn reglue_map(p: i64, q: i64, sign: Sign) -> Result<MobiusMap> {
    check_cable(p, q)?;
    let e = sign.as_i64();
    MobiusMap::new(1 - e * p * q, e * p * p, -e * q * q, 1 + e * p * q)
}

/// Legendrian surgery on `count` Legendrian divides of the convex torus of
/// slope `q/p` inside `x`.
///
/// The path of `x` is lengthened through `q/p` and split there; the part
/// from the meridian to `q/p` is carried by the re-gluing map (applied
/// `count` times) while the part beyond `q/p` is untouched. Signs travel with
/// their edges and the result is shortened back to a minimal path.
pub fn legendrian_cable_surgery(
    x: &SolidTorusStructure,
    p: i64,
    q: i64,
    count: u32,
) -> Result<SolidTorusStructure> {
    check_cable(p, q)?;
    if count == 0 {
        return Err(Error::Domain("surgery needs at least one Legendrian divide".into()));
    }
    let cable = Slope::new(q, p)?;
    let rep = x.representative();
    let d = if rep.path().contains(cable) {
        if cable == x.meridian {
            return Err(Error::Domain(format!("cable slope {cable} is the meridian")));
        }
        rep
    } else {
        if !cw_interval_contains(cable, x.meridian, x.dividing, false) {
            return Err(Error::Domain(format!(
                "cable slope {cable} is outside ({}, {})",
                x.meridian, x.dividing
            )));
        }
        lengthen_decorated(&rep, cable)?
    };

    let split = d.path().vertices().iter().position(|&v| v == cable).expect("path passes through cable slope");
    let m = reglue_map(p, q, Sign::Minus)?.pow(count);
    let mut vertices: Vec<Slope> = d.path().vertices()[..split].iter().map(|&v| m.apply(v)).collect();
    vertices.extend_from_slice(&d.path().vertices()[split..]);

    let path = FareyPath::new(vertices)
        .map_err(|e| Error::Domain(format!("surgery result is not a monotone path: {e}")))?;
    let glued = DecoratedPath::new(path, d.signs().to_vec())?;
    let class = shorten_to_minimal(&glued)
        .ok_or_else(|| Error::Domain("surgery result does not shorten consistently".into()))?;
    Ok(SolidTorusStructure::new(class))
}

/// New lower meridian after one surgery on a divide of slope `q/p` in a
/// solid torus with meridian `s/r`: `(q²r + (1 - pq)s)/((1 + pq)r - p²s)`.
pub fn surgered_meridian(meridian: Slope, p: i64, q: i64) -> Result<Slope> {
    check_cable(p, q)?;
    let (r, s) = (meridian.den() as i128, meridian.num() as i128);
    let (p, q) = (p as i128, q as i128);
    Slope::from_vector((1 + p * q) * r - p * p * s, q * q * r + (1 - p * q) * s)
}
