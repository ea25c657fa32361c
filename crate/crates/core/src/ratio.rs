use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

/// A nonnegative fraction in lowest terms. Displays as `p/q` even when `q = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RatioValue {
    num: u64,
    den: u64,
}

impl RatioValue {
    pub const ZERO: RatioValue = RatioValue { num: 0, den: 1 };
    pub const ONE: RatioValue = RatioValue { num: 1, den: 1 };

    /// # Panics
    /// If `den` is zero.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = num.gcd(&den);
        RatioValue {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }

    pub fn is_one(self) -> bool {
        self.num == self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn to_big(self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

impl PartialOrd for RatioValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RatioValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (u128::from(self.num) * u128::from(other.den))
            .cmp(&(u128::from(other.num) * u128::from(self.den)))
    }
}

impl fmt::Display for RatioValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// `p/q` for any exact rational, keeping the `/1` for integers.
pub fn format_big(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces() {
        let r = RatioValue::new(5, 5);
        assert_eq!(r, RatioValue::ONE);
        assert_eq!(r.to_string(), "1/1");
        assert_eq!(RatioValue::new(0, 3), RatioValue::ZERO);
        assert_eq!(RatioValue::new(10, 18).to_string(), "5/9");
    }

    #[test]
    fn ordering() {
        assert!(RatioValue::new(6, 7) < RatioValue::ONE);
        assert!(RatioValue::new(13, 15) < RatioValue::new(14, 15));
        assert_eq!(
            RatioValue::new(2, 4).cmp(&RatioValue::new(1, 2)),
            Ordering::Equal
        );
    }

    #[test]
    #[should_panic]
    fn zero_denominator() {
        RatioValue::new(1, 0);
    }
}
