use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

/// Exact rational number extended with `+inf`.
///
/// Finite values are kept in lowest terms with a positive denominator.
/// The derived ordering puts `Infinite` above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rational {
    Finite(Ratio<i64>),
    Infinite,
}

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Rational {
        Rational::Finite(Ratio::new(num, den))
    }

    pub fn integer(v: i64) -> Rational {
        Rational::Finite(Ratio::from_integer(v))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Rational::Infinite)
    }

    pub fn numer(self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(*r.numer()),
            Rational::Infinite => None,
        }
    }

    pub fn denom(self) -> Option<i64> {
        match self {
            Rational::Finite(r) => Some(*r.denom()),
            Rational::Infinite => None,
        }
    }
}

/// `num/den` (always both parts) or `inf`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rational::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Rational::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse '{0}' as a rational (expected 'a', 'a/b' or 'inf')")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Rational, ParseRationalError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "+inf" {
            return Ok(Rational::Infinite);
        }
        let bad = || ParseRationalError(s.to_string());
        match t.split_once('/') {
            Some((a, b)) => {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let b: i64 = b.trim().parse().map_err(|_| bad())?;
                if b == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(a, b))
            }
            None => t.parse().map(Rational::integer).map_err(|_| bad()),
        }
    }
}
