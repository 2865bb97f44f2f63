//! JSON helpers shared by report types.
//!
//! Floats are written with exactly six decimals so that report output is
//! byte-stable; exact quantities (big integers, rationals) are written as
//! decimal strings.

use serde::ser::{SerializeSeq, Serializer};
use serde_json::Number;
use std::str::FromStr;

/// Six-decimal JSON number; `-0.000000` is folded to `0.000000`.
pub fn fixed6_number(x: f64) -> Number {
    if !x.is_finite() {
        return Number::from(0);
    }
    let mut s = format!("{x:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s = s.trim_start_matches('-').to_string();
    }
    Number::from_str(&s).expect("formatted float is a valid JSON number")
}

pub fn fixed6<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&fixed6_number(*x), s)
}

pub fn fixed6_opt<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => fixed6(v, s),
        None => s.serialize_none(),
    }
}

pub fn fixed6_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&fixed6_number(*x))?;
    }
    seq.end()
}

/// Scientific notation for tolerances, which are far below six decimals.
pub fn sci<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    let n = Number::from_str(&format!("{x:e}")).unwrap_or_else(|_| Number::from(0));
    serde::Serialize::serialize(&n, s)
}

/// Serializes any value through `Display` as a JSON string.
pub fn display<T: std::fmt::Display, S: Serializer>(x: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Pretty JSON with a trailing newline.
pub fn to_string_pretty<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types always serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_decimals() {
        assert_eq!(fixed6_number(4.0).to_string(), "4.000000");
        assert_eq!(fixed6_number(-0.58578643).to_string(), "-0.585786");
        assert_eq!(fixed6_number(-1e-12).to_string(), "0.000000");
    }

    #[test]
    fn tolerance_is_scientific() {
        let v = serde_json::to_value(Wrap(1e-12)).unwrap();
        assert_eq!(v.to_string(), "1e-12");
    }

    struct Wrap(f64);
    impl serde::Serialize for Wrap {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            sci(&self.0, s)
        }
    }
}
