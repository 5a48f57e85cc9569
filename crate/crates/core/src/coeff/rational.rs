//! Exact rationals with an inline `i64` fast path and a big-integer fallback.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

/// A rational number. Values that fit in `i64` numerator and denominator are
/// always stored inline, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Q {
    Small(Ratio<i64>),
    Big(BigRational),
}

impl Q {
    pub fn zero() -> Q {
        Q::Small(Ratio::from_integer(0))
    }

    pub fn one() -> Q {
        Q::Small(Ratio::from_integer(1))
    }

    pub fn int(n: i64) -> Q {
        Q::Small(Ratio::from_integer(n))
    }

    /// `n / d`; panics only if `d == 0`, which callers rule out.
    pub fn frac(n: i64, d: i64) -> Q {
        assert!(d != 0, "zero denominator");
        Q::Small(Ratio::new(n, d))
    }

    pub fn from_big(r: BigRational) -> Q {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => Q::Small(Ratio::new_raw(n, d)),
            _ => Q::Big(r),
        }
    }

    fn big(&self) -> BigRational {
        match self {
            Q::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Q::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Q::Small(r) => r.is_zero(),
            Q::Big(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Q::Small(r) => r.is_one(),
            Q::Big(r) => r.is_one(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Q::Small(r) => r.is_negative(),
            Q::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Q::Small(r) => r.is_integer(),
            Q::Big(r) => r.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Q::Small(r) => BigInt::from(*r.numer()),
            Q::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Q::Small(r) => BigInt::from(*r.denom()),
            Q::Big(r) => r.denom().clone(),
        }
    }

    pub fn add(&self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(r) = a.checked_add(b) {
                return Q::Small(r);
            }
        }
        Q::from_big(self.big() + o.big())
    }

    pub fn sub(&self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(r) = a.checked_sub(b) {
                return Q::Small(r);
            }
        }
        Q::from_big(self.big() - o.big())
    }

    pub fn mul(&self, o: &Q) -> Q {
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(r) = a.checked_mul(b) {
                return Q::Small(r);
            }
        }
        Q::from_big(self.big() * o.big())
    }

    /// Quotient, or `None` when dividing by zero.
    pub fn div(&self, o: &Q) -> Option<Q> {
        if o.is_zero() {
            return None;
        }
        if let (Q::Small(a), Q::Small(b)) = (self, o) {
            if let Some(r) = a.checked_div(b) {
                return Some(Q::Small(r));
            }
        }
        Some(Q::from_big(self.big() / o.big()))
    }

    pub fn neg(&self) -> Q {
        match self {
            Q::Small(r) if *r.numer() != i64::MIN => Q::Small(-r),
            _ => Q::from_big(-self.big()),
        }
    }

    pub fn recip(&self) -> Option<Q> {
        Q::one().div(self)
    }
}

impl PartialOrd for Q {
    fn partial_cmp(&self, other: &Q) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Q {
    fn cmp(&self, other: &Q) -> Ordering {
        match (self, other) {
            (Q::Small(a), Q::Small(b)) => a.cmp(b),
            _ => self.big().cmp(&other.big()),
        }
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(r) => write!(f, "{}", r),
            Q::Big(r) => write!(f, "{}", r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Q::int(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq, Q::Big(_)));
        let back = sq.div(&big).unwrap();
        assert_eq!(back, Q::int(i64::MAX));
        assert!(matches!(back, Q::Small(_)));
    }

    #[test]
    fn basic_arithmetic() {
        let a = Q::frac(1, 2);
        let b = Q::frac(1, 3);
        assert_eq!(a.add(&b), Q::frac(5, 6));
        assert_eq!(a.sub(&b), Q::frac(1, 6));
        assert_eq!(a.mul(&b), Q::frac(1, 6));
        assert_eq!(a.div(&b).unwrap(), Q::frac(3, 2));
        assert!(a.div(&Q::zero()).is_none());
        assert_eq!(Q::frac(-4, 6).to_string(), "-2/3");
    }
}
