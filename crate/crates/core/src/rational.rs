//! Exact rationals backed by unbounded integers.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{MoebiusError, Result};

pub type Q = BigRational;

pub fn q_int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn q_zero() -> Q {
    Q::zero()
}

pub fn q_one() -> Q {
    Q::one()
}

/// Parses `"p/q"` or an integer literal. Surrounding whitespace is ignored.
pub fn parse_q(text: &str) -> Result<Q> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(MoebiusError::Parse("empty rational literal".into()));
    }
    Q::from_str(&t).map_err(|e| MoebiusError::Parse(format!("bad rational {text:?}: {e}")))
}

/// Renders in lowest terms; integers print without a denominator.
pub fn q_to_string(q: &Q) -> String {
    q.to_string()
}

pub fn q_pow(base: &Q, exp: u64) -> Q {
    num_traits::pow::pow(base.clone(), exp as usize)
}

/// Serde adapter writing values through `Display` and reading through `FromStr`.
pub mod as_string {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// [`as_string`] for optional values.
pub mod opt_as_string {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<Option<T>, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        Option::<String>::deserialize(d)?.map(|t| t.parse().map_err(serde::de::Error::custom)).transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["0", "3", "-7", "1/2", "-4/6"] {
            let q = parse_q(s).unwrap();
            assert_eq!(parse_q(&q_to_string(&q)).unwrap(), q);
        }
        assert_eq!(q_to_string(&parse_q("-4/6").unwrap()), "-2/3");
        assert_eq!(q_to_string(&parse_q(" 10 / 5 ").unwrap()), "2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_q("").is_err());
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert!(parse_q("0.5").is_err());
    }
}
