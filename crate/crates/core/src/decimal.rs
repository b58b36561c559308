//! Fixed-point decimals on top of `BigInt`, used as the weight arithmetic:
//! high-precision square roots of exact rational squared lengths, and the
//! chord-length table `2 sin(i*pi/n)` of the regular polygon.
//!
//! A `Dec` stores `units / 10^scale`. All values taking part in one
//! computation share a scale; mixing scales is a bug and panics.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// 100 fractional digits of pi.
const PI_DIGITS: &str =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170679";

#[derive(Clone, PartialEq, Eq)]
pub struct Dec {
    units: BigInt,
    scale: u32,
}

impl Dec {
    pub fn zero(scale: u32) -> Self {
        Dec { units: BigInt::zero(), scale }
    }

    pub fn from_units(units: BigInt, scale: u32) -> Self {
        Dec { units, scale }
    }

    pub fn from_int(v: i64, scale: u32) -> Self {
        Dec { units: BigInt::from(v) * pow10(scale), scale }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn units(&self) -> &BigInt {
        &self.units
    }

    pub fn is_zero(&self) -> bool {
        self.units.is_zero()
    }

    pub fn abs(&self) -> Dec {
        Dec { units: self.units.abs(), scale: self.scale }
    }

    /// Nearest `Dec` to the rational `r` (round half away from zero).
    pub fn from_rational(r: &BigRational, scale: u32) -> Self {
        let scaled = r * BigRational::from_integer(pow10(scale));
        let (q, rem) = scaled.numer().div_rem(scaled.denom());
        let units = if (&rem * 2i32).abs() >= scaled.denom().abs() {
            if scaled.is_negative() {
                q - 1
            } else {
                q + 1
            }
        } else {
            q
        };
        Dec { units, scale }
    }

    /// `sqrt(r)` to `scale` fractional digits (truncated), `r >= 0`.
    pub fn sqrt_rational(r: &BigRational, scale: u32) -> Self {
        assert!(!r.is_negative(), "square root of a negative rational");
        let scaled = r.numer() * pow10(2 * scale) / r.denom();
        Dec { units: scaled.sqrt(), scale }
    }

    pub fn pi(scale: u32) -> Self {
        Self::parse(PI_DIGITS, scale).expect("pi constant parses")
    }

    /// Parse a plain decimal literal, truncating extra fractional digits.
    pub fn parse(s: &str, scale: u32) -> Option<Self> {
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        if !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let mut digits = String::from(int_part);
        let take = (scale as usize).min(frac_part.len());
        digits.push_str(&frac_part[..take]);
        let mut units: BigInt = digits.parse().ok()?;
        units *= pow10(scale - take as u32);
        if negative {
            units = -units;
        }
        Some(Dec { units, scale })
    }

    pub fn mul(&self, other: &Dec) -> Dec {
        assert_eq!(self.scale, other.scale, "mixed decimal scales");
        Dec {
            units: div_round(&self.units * &other.units, &pow10(self.scale)),
            scale: self.scale,
        }
    }

    pub fn mul_int(&self, k: i64) -> Dec {
        Dec { units: &self.units * BigInt::from(k), scale: self.scale }
    }

    pub fn div_int(&self, k: i64) -> Dec {
        Dec { units: div_round(self.units.clone(), &BigInt::from(k)), scale: self.scale }
    }

    pub fn to_f64(&self) -> f64 {
        // Scale down in integer space first so huge units stay in range.
        let whole = &self.units / pow10(self.scale);
        let frac = &self.units - &whole * pow10(self.scale);
        whole.to_f64().unwrap_or(f64::NAN)
            + frac.to_f64().unwrap_or(f64::NAN) / 10.0f64.powi(self.scale as i32)
    }
}

/// Division rounding half away from zero.
fn div_round(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    if (&r * 2i32).abs() >= den.abs() {
        if num.is_negative() == den.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

pub fn pow10(e: u32) -> BigInt {
    BigInt::from(10u32).pow(e)
}

impl PartialOrd for Dec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dec {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.scale, other.scale, "mixed decimal scales");
        self.units.cmp(&other.units)
    }
}

impl Add for &Dec {
    type Output = Dec;
    fn add(self, rhs: &Dec) -> Dec {
        assert_eq!(self.scale, rhs.scale, "mixed decimal scales");
        Dec { units: &self.units + &rhs.units, scale: self.scale }
    }
}

impl AddAssign<&Dec> for Dec {
    fn add_assign(&mut self, rhs: &Dec) {
        assert_eq!(self.scale, rhs.scale, "mixed decimal scales");
        self.units += &rhs.units;
    }
}

impl Sub for &Dec {
    type Output = Dec;
    fn sub(self, rhs: &Dec) -> Dec {
        assert_eq!(self.scale, rhs.scale, "mixed decimal scales");
        Dec { units: &self.units - &rhs.units, scale: self.scale }
    }
}

impl fmt::Display for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ten = pow10(self.scale);
        let whole = (&self.units / &ten).abs();
        let frac = (&self.units % &ten).abs();
        let sign = if self.units.is_negative() { "-" } else { "" };
        let mut frac_str = alloc::format!("{frac}");
        while (frac_str.len() as u32) < self.scale {
            frac_str.insert(0, '0');
        }
        write!(f, "{sign}{whole}.{frac_str}")
    }
}

impl fmt::Debug for Dec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dec({self})")
    }
}

/// `sin(x)` for `0 <= x <= pi`, by Taylor series with guard digits.
pub fn sin(x: &Dec, scale: u32) -> Dec {
    let work = scale + 15;
    let pi = Dec::pi(work);
    let mut x = Dec::from_units(x.units() * pow10(work - x.scale), work);
    assert!(!x.units.is_negative() && x <= pi, "sin domain is [0, pi]");
    // Fold onto [0, pi/2].
    if x > pi.div_int(2) {
        x = &pi - &x;
    }
    let x2 = x.mul(&x);
    let mut term = x.clone();
    let mut sum = x;
    let mut k: i64 = 1;
    while !term.is_zero() {
        term = term.mul(&x2).div_int((2 * k) * (2 * k + 1));
        if k % 2 == 1 {
            sum = &sum - &term;
        } else {
            sum = &sum + &term;
        }
        k += 1;
    }
    Dec::from_units(div_round(sum.units, &pow10(15)), scale)
}

/// Chord lengths of the regular `n`-gon inscribed in the unit circle:
/// `table[i-1] = 2 sin(i*pi/n)` for spans `i = 1..=n/2`.
pub fn regular_chord_lengths(n: usize, scale: u32) -> Vec<Dec> {
    assert!(n >= 3);
    let work = scale + 15;
    let pi = Dec::pi(work);
    (1..=n / 2)
        .map(|i| {
            let x = pi.mul_int(i as i64).div_int(n as i64);
            let s = sin(&x, scale);
            s.mul_int(2)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;

    #[test]
    fn sqrt_two_digits() {
        let two = BigRational::from_integer(2.into());
        let r = Dec::sqrt_rational(&two, 50);
        assert_eq!(
            r.to_string(),
            "1.41421356237309504880168872420969807856967187537694"
        );
    }

    #[test]
    fn rounding_from_rational() {
        let r = BigRational::new(1.into(), 3.into());
        assert_eq!(Dec::from_rational(&r, 5).to_string(), "0.33333");
        let r = BigRational::new(2.into(), 3.into());
        assert_eq!(Dec::from_rational(&r, 5).to_string(), "0.66667");
        let r = BigRational::new((-2).into(), 3.into());
        assert_eq!(Dec::from_rational(&r, 5).to_string(), "-0.66667");
    }

    #[test]
    fn sin_special_values() {
        let scale = 50;
        let pi = Dec::pi(scale);
        // sin(pi/6) = 1/2
        let s = sin(&pi.div_int(6), scale);
        let half = Dec::parse("0.5", scale).unwrap();
        let err = (&s - &half).abs();
        assert!(err <= Dec::from_units(10.into(), scale), "{s}");
        // sin(pi/2) = 1
        let s = sin(&pi.div_int(2), scale);
        let one = Dec::from_int(1, scale);
        assert!((&s - &one).abs() <= Dec::from_units(10.into(), scale));
    }

    #[test]
    fn chord_table_squares() {
        // On the unit circle the span-i chord of the square has length
        // sqrt(2) (i=1) and 2 (i=2).
        let t = regular_chord_lengths(4, 40);
        let sqrt2 = Dec::sqrt_rational(&BigRational::from_integer(2.into()), 40);
        assert!((&t[0] - &sqrt2).abs() <= Dec::from_units(100.into(), 40));
        assert!((&t[1] - &Dec::from_int(2, 40)).abs() <= Dec::from_units(100.into(), 40));
        // Hexagon: l_1 = 1, l_2 = sqrt(3), l_3 = 2.
        let t = regular_chord_lengths(6, 40);
        let sqrt3 = Dec::sqrt_rational(&BigRational::from_integer(3.into()), 40);
        assert!((&t[0] - &Dec::from_int(1, 40)).abs() <= Dec::from_units(100.into(), 40));
        assert!((&t[1] - &sqrt3).abs() <= Dec::from_units(100.into(), 40));
        assert!((&t[2] - &Dec::from_int(2, 40)).abs() <= Dec::from_units(100.into(), 40));
    }

    #[test]
    fn display_pads_fraction() {
        let d = Dec::from_units(BigInt::from(5), 4);
        assert_eq!(format!("{d}"), "0.0005");
        let d = Dec::from_units(BigInt::from(-123456), 4);
        assert_eq!(format!("{d}"), "-12.3456");
    }
}
