use num_bigint::BigInt;
use num_traits::One;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The numerator of `q` if `q` is an integer.
pub fn to_integer(q: &Rational) -> Option<BigInt> {
    q.is_integer().then(|| q.numer().clone())
}

/// n (n-1) ... (n-k+1); zero when k > n.
pub fn falling_factorial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}
