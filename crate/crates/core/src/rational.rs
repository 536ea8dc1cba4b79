//! Exact rationals and their `"p/q"` text form.

use num_rational::Ratio;
use serde::de::{self, Deserializer, Visitor};
use serde::Serializer;

pub type Q = Ratio<i64>;

pub fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

pub fn int(n: i64) -> Q {
    Ratio::from_integer(n)
}

/// `"p/q"`, or `"p"` for integers.
pub fn to_text(x: &Q) -> String {
    x.to_string()
}

pub fn parse(text: &str) -> Result<Q, String> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| format!("bad numerator in {text:?}"))?;
            let d: i64 = d.trim().parse().map_err(|_| format!("bad denominator in {text:?}"))?;
            if d == 0 {
                return Err(format!("zero denominator in {text:?}"));
            }
            Ok(Ratio::new(n, d))
        }
        None => text.parse().map(Ratio::from_integer).map_err(|_| format!("not a rational: {text:?}")),
    }
}

pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_text(x))
}

/// Accepts JSON integers or `"p/q"` strings.
pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
    struct V;
    impl Visitor<'_> for V {
        type Value = Q;
        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("an integer or a \"p/q\" string")
        }
        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Q, E> {
            Ok(int(v))
        }
        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Q, E> {
            i64::try_from(v).map(int).map_err(E::custom)
        }
        fn visit_str<E: de::Error>(self, v: &str) -> Result<Q, E> {
            parse(v).map_err(E::custom)
        }
    }
    d.deserialize_any(V)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        assert_eq!(to_text(&q(6, 16)), "3/8");
        assert_eq!(to_text(&int(-2)), "-2");
        assert_eq!(parse(" 3 / 8 ").unwrap(), q(3, 8));
        assert_eq!(parse("4").unwrap(), int(4));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }
}
