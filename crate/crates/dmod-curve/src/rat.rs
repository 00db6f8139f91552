//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The coefficient field: arbitrary-precision rationals.
pub type Rat = BigRational;

/// `p/q` as a rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// An integer as a rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn is_zero(x: &Rat) -> bool {
    x.is_zero()
}

pub fn is_one(x: &Rat) -> bool {
    x.is_one()
}

/// Is `x` the square of a rational, and if so which nonnegative root?
pub fn sqrt_exact(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let n = x.numer().magnitude().sqrt();
    let d = x.denom().magnitude().sqrt();
    let candidate = Rat::new(BigInt::from(n), BigInt::from(d));
    if &candidate * &candidate == *x {
        Some(candidate)
    } else {
        None
    }
}

/// Render a rational as `p/q` (or `p` when the denominator is one).
pub fn render(x: &Rat) -> String {
    x.to_string()
}

/// Parse `p`, `-p`, or `p/q`.
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                None
            } else {
                Some(rat(p, q))
            }
        }
        None => {
            let p: i64 = s.parse().ok()?;
            Some(rint(p))
        }
    }
}

/// Fractional part in `[0, 1)` and integer part, so that
/// `x = floor + frac` with `floor` an integer.
pub fn split_integer_part(x: &Rat) -> (BigInt, Rat) {
    let fl = x.floor();
    let frac = x - &fl;
    (fl.to_integer(), frac)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_detects_squares() {
        assert_eq!(sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(-1, 1)), None);
        assert_eq!(sqrt_exact(&Rat::zero()), Some(Rat::zero()));
    }

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["3", "-7", "1/2", "-5/3"] {
            let x = parse(s).unwrap();
            assert_eq!(render(&x), s);
        }
        assert!(parse("1/0").is_none());
        assert!(parse("x").is_none());
    }

    #[test]
    fn integer_split() {
        let (fl, fr) = split_integer_part(&rat(-3, 2));
        assert_eq!(fl, BigInt::from(-2));
        assert_eq!(fr, rat(1, 2));
    }
}
