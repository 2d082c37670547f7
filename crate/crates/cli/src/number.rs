//! Number parsing that never goes through `f64`, so `0.1` is exactly `1/10`.

use distpf_core::{parse_rational, BigRational};
use num_traits::{One, Pow, Zero};

/// `p/q`, an integer, or a decimal with optional exponent (`-2.5e-3`).
pub fn parse_number(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    parse_rational(text).or_else(|| parse_decimal(text))
}

pub fn parse_decimal(text: &str) -> Option<BigRational> {
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let numer: BigRational = BigRational::from_integer(all_digits.parse().ok()?);
    let ten = BigRational::from_integer(10.into());
    let shift = exponent - frac_part.len() as i32;
    let scale = if shift >= 0 {
        Pow::pow(ten, shift as u32)
    } else {
        BigRational::one() / Pow::pow(ten, (-shift) as u32)
    };
    let value = numer * scale;
    Some(if negative && !value.is_zero() {
        -value
    } else {
        value
    })
}
