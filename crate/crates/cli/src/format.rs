//! Exact number parsing and printing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};
use occulab::exactalg::RootInterval;
use occulab::Rational;

/// Parses `7`, `-3/4` or `0.125` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let bad = || format!("not a rational number: {text:?}");
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(format!("zero denominator in {text:?}"));
        }
        return Ok(Rational::new(num, den));
    }
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if frac.starts_with(['+', '-']) || (int.is_empty() && frac.is_empty()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    Ok(Rational::new(digits, BigInt::from(10u32).pow(frac.len() as u32)))
}

/// Decimal expansion rounded half away from zero to `places` digits.
pub fn decimal(x: &Rational, places: usize) -> String {
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = x.abs() * Rational::from_integer(scale);
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let rounded = if &r * 2 >= *scaled.denom() { q + 1 } else { q };
    let mut digits = rounded.to_string();
    if digits.len() <= places {
        digits = format!("{}{digits}", "0".repeat(places + 1 - digits.len()));
    }
    let sign = if x.is_negative() && !rounded_is_zero(&digits) { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{digits}");
    }
    let (int, frac) = digits.split_at(digits.len() - places);
    format!("{sign}{int}.{frac}")
}

fn rounded_is_zero(digits: &str) -> bool {
    digits.bytes().all(|b| b == b'0')
}

/// Root location to `places` decimals, refined so the printed digits are
/// within one unit of the last place.
pub fn root_decimal(root: &RootInterval, places: usize) -> String {
    let mut r = root.clone();
    let width = Rational::new(1.into(), BigInt::from(10u32).pow(places as u32 + 2));
    r.refine_to(&width);
    decimal(&r.midpoint(), places)
}
