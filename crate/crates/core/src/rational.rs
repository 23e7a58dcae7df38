//! Exact rationals used in every certificate.
//!
//! Values are serialized as `"p/q"` strings (always with an explicit
//! denominator) so JSON output never carries floating point.

use num_integer::Integer;
use num_rational::Ratio;

pub type Rational = Ratio<i64>;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn from_int(value: usize) -> Rational {
    Rational::from_integer(value as i64)
}

/// `p/q` rendering with the denominator always present.
pub fn format(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => text.parse::<i64>().ok().map(Rational::from_integer),
    }
}

/// Smallest `l >= 0` with `(3/2)^l >= num/den`, computed without floating point.
pub fn ceil_log_three_halves(num: u64, den: u64) -> u32 {
    assert!(den > 0);
    let (num, den) = (num as u128, den as u128);
    let mut l = 0u32;
    let (mut pow3, mut pow2) = (1u128, 1u128);
    while pow3 * den < pow2 * num {
        l += 1;
        pow3 *= 3;
        pow2 *= 2;
    }
    l
}

/// Largest rational `p/q` with fixed denominator `q` such that `(p/q)^2 <= value`.
pub fn sqrt_floor(value: &Rational, denom: i64) -> Rational {
    assert!(*value.numer() >= 0 && denom > 0);
    // (p/q)^2 <= a/b  <=>  p^2 * b <= a * q^2
    let (a, b) = (*value.numer() as i128, *value.denom() as i128);
    let q = denom as i128;
    let target = a * q * q;
    let mut p = ((target as f64 / b as f64).sqrt()) as i128;
    while p > 0 && p * p * b > target {
        p -= 1;
    }
    while (p + 1) * (p + 1) * b <= target {
        p += 1;
    }
    let g = p.gcd(&q);
    Rational::new((p / g) as i64, (q / g) as i64)
}

pub mod serde_ratio {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(value))
    }
}

pub mod serde_ratio_opt {
    use super::Rational;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => s.serialize_str(&super::format(v)),
            None => s.serialize_none(),
        }
    }
}

pub mod serde_ratio_vec {
    use super::Rational;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&super::format(v))?;
        }
        seq.end()
    }
}
