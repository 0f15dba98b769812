//! Exact rational arithmetic helpers.
//!
//! Every cost, capacity and LP point in the crate is a [`Rational`]. Hot loops
//! (flows, branch-and-bound, cut enumeration) first move a vector onto a
//! common denominator with [`to_common_denominator`] and then work in `i128`.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::Ratio<i128>;

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

pub fn ratio(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// Scales `values` by the least common multiple `d` of their denominators and
/// returns `(numerators, d)`, so that `values[i] == numerators[i] / d`.
pub fn to_common_denominator(values: &[Rational]) -> (Vec<i128>, i128) {
    let d = values.iter().fold(1i128, |acc, v| acc.lcm(v.denom()));
    let nums = values.iter().map(|v| v.numer() * (d / v.denom())).collect();
    (nums, d)
}

pub fn sum<'a, I: IntoIterator<Item = &'a Rational>>(it: I) -> Rational {
    it.into_iter().fold(Rational::zero(), |acc, v| acc + v)
}

/// Parses `"p"` or `"p/q"` (q > 0 after sign normalization).
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        None => text.parse::<i128>().ok().map(int),
        Some((p, q)) => {
            let p = p.trim().parse::<i128>().ok()?;
            let q = q.trim().parse::<i128>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
    }
}

/// Machine form: always `"p/q"`, lowest terms, positive denominator.
pub fn to_pq(v: &Rational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

pub fn is_unit_interval(v: &Rational) -> bool {
    !v.is_negative() && *v <= Rational::one()
}

pub fn ceil_to_usize(v: &Rational) -> usize {
    let c = v.ceil().to_integer();
    usize::try_from(c.max(0)).unwrap_or(usize::MAX)
}
