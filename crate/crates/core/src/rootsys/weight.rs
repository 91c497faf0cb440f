use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::Error;

pub(crate) type Coords = SmallVec<[i32; 8]>;

/// A weight in the ambient ε-basis.
///
/// Coordinates are stored doubled so that half-integral weights (ρ of type B,
/// ρ̄ of even-size `gl` blocks, spin weights) stay exact. The derived ordering
/// is lexicographic on the doubled coordinates and serves as the canonical
/// order everywhere output has to be deterministic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(pub(crate) Coords);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(smallvec::smallvec![0; dim])
    }

    /// Builds a weight from integral ε-coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(
            coords
                .iter()
                .map(|&c| i32::try_from(2 * c).expect("coordinate out of range"))
                .collect(),
        )
    }

    /// Builds a weight from already doubled coordinates.
    pub fn from_doubled(doubled: &[i32]) -> Self {
        Weight(doubled.iter().copied().collect())
    }

    /// The unit vector ε_i scaled by `k` (0-based index).
    pub fn unit(dim: usize, i: usize, k: i32) -> Self {
        let mut w = Weight::zero(dim);
        w.0[i] = 2 * k;
        w
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn doubled(&self) -> &[i32] {
        &self.0
    }

    /// True coordinate `i` as a (numerator, denominator) pair in lowest terms.
    pub fn coord(&self, i: usize) -> (i32, i32) {
        let d = self.0[i];
        if d % 2 == 0 {
            (d / 2, 1)
        } else {
            (d, 2)
        }
    }

    /// Integral coordinates, or `None` if some coordinate is a half-integer.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|&d| (d % 2 == 0).then_some(i64::from(d / 2)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// All true coordinates are integers.
    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|d| d % 2 == 0)
    }

    /// All true coordinates are strict half-integers.
    pub fn is_half_integral(&self) -> bool {
        self.0.iter().all(|d| d % 2 != 0)
    }

    /// Four times the standard inner product (exact on doubled coordinates).
    pub fn dot4(&self, other: &Weight) -> i64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| i64::from(a) * i64::from(b))
            .sum()
    }

    pub fn scaled(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|&d| d * k).collect())
    }

    /// Sum of the true coordinates, doubled.
    pub fn doubled_sum(&self) -> i64 {
        self.0.iter().map(|&d| i64::from(d)).sum()
    }

    /// Largest absolute value of a doubled coordinate.
    pub fn doubled_max_abs(&self) -> i32 {
        self.0.iter().map(|d| d.abs()).max().unwrap_or(0)
    }

    /// Restriction to a set of coordinates (used for Levi blocks).
    pub fn restrict(&self, coords: &[usize]) -> Weight {
        Weight(coords.iter().map(|&i| self.0[i]).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|d| -d).collect())
    }
}

fn fmt_doubled(d: i32) -> String {
    if d % 2 == 0 {
        (d / 2).to_string()
    } else {
        format!("{d}/2")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", fmt_doubled(d))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_coord(tok: &str) -> Result<i32, Error> {
    let bad = || Error::InvalidWeight(format!("cannot parse coordinate {tok:?}"));
    if let Some((num, den)) = tok.split_once('/') {
        let num: i32 = num.trim().parse().map_err(|_| bad())?;
        let den: i32 = den.trim().parse().map_err(|_| bad())?;
        return match den {
            1 => Ok(2 * num),
            2 => Ok(num),
            _ => Err(bad()),
        };
    }
    if let Ok(v) = tok.parse::<i32>() {
        return Ok(2 * v);
    }
    let v: f64 = tok.parse().map_err(|_| bad())?;
    doubled_from_f64(v).ok_or_else(bad)
}

fn doubled_from_f64(v: f64) -> Option<i32> {
    let d = v * 2.0;
    (d.fract() == 0.0 && d.abs() < f64::from(i32::MAX)).then_some(d as i32)
}

/// Parses `"5,2,2,1,4,3"`, `"(5,2,2,1|4,3)"` or `"1/2,-1/2"`. A `|` is
/// accepted as a block separator and treated like a comma.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let inner = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if inner.trim().is_empty() {
            return Ok(Weight(Coords::new()));
        }
        inner
            .split([',', '|'])
            .map(|t| parse_coord(t.trim()))
            .collect::<Result<Coords, _>>()
            .map(Weight)
    }
}

/// Integral weights serialize as integer lists, half-integral ones as
/// decimal lists (`0.5`), so the encoding is bit-exact across runs.
impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for &d in &self.0 {
            if d % 2 == 0 {
                seq.serialize_element(&(d / 2))?;
            } else {
                seq.serialize_element(&(f64::from(d) / 2.0))?;
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<serde_json::Value> = Vec::deserialize(deserializer)?;
        raw.iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => {
                    if let Some(i) = n.as_i64() {
                        i32::try_from(2 * i).map_err(D::Error::custom)
                    } else {
                        n.as_f64()
                            .and_then(doubled_from_f64)
                            .ok_or_else(|| D::Error::custom(format!("coordinate {n} is not a half-integer")))
                    }
                }
                serde_json::Value::String(s) => parse_coord(s).map_err(D::Error::custom),
                other => Err(D::Error::custom(format!("bad coordinate {other}"))),
            })
            .collect::<Result<Coords, _>>()
            .map(Weight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let w: Weight = "(5,2,2,1|4,3)".parse().unwrap();
        assert_eq!(w, Weight::from_ints(&[5, 2, 2, 1, 4, 3]));
        let h: Weight = "1/2, -3/2".parse().unwrap();
        assert_eq!(h.doubled(), &[1, -3]);
        let d: Weight = "0.5,-0.5".parse().unwrap();
        assert_eq!(d.doubled(), &[1, -1]);
        assert!("1/3".parse::<Weight>().is_err());
        assert!("0.25".parse::<Weight>().is_err());
    }

    #[test]
    fn json_encoding_is_exact() {
        let w = Weight::from_doubled(&[2, -4, 0]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[1,-2,0]");
        let h = Weight::from_doubled(&[3, -1]);
        assert_eq!(serde_json::to_string(&h).unwrap(), "[1.5,-0.5]");
        let back: Weight = serde_json::from_str("[1.5,-0.5]").unwrap();
        assert_eq!(back, h);
        assert!(serde_json::from_str::<Weight>("[0.3]").is_err());
    }

    #[test]
    fn display_uses_halves() {
        assert_eq!(Weight::from_doubled(&[3, 2, -1]).to_string(), "(3/2,1,-1/2)");
    }

    #[test]
    fn inner_product_is_scaled_by_four() {
        let a = Weight::from_ints(&[3, 2, 1]);
        let b = Weight::from_ints(&[1, 0, 0]);
        assert_eq!(a.dot4(&b), 12);
    }
}
