//! JSON helpers. Reals are written as number tokens rounded to 12
//! significant digits with trailing zeros dropped, so `23.25` stays `23.25`
//! and `3.0` is written `3`; the text is stable across platforms.

use serde_json::{Number, Value};

const SIGNIFICANT: usize = 12;

/// Decimal text of `x` rounded to 12 significant digits. Non-finite values
/// yield `None`.
pub fn format_real(x: f64) -> Option<String> {
    if !x.is_finite() {
        return None;
    }
    if x == 0.0 {
        return Some("0".to_string());
    }
    let sci = format!("{:.*e}", SIGNIFICANT - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let digits = digits.trim_end_matches('0');
    let digits = if digits.is_empty() { "0" } else { digits };

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if (-7..21).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if digits.len() <= int_len {
                out.push_str(digits);
                out.extend(std::iter::repeat_n('0', int_len - digits.len()));
            } else {
                out.push_str(&digits[..int_len]);
                out.push('.');
                out.push_str(&digits[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
            out.push_str(digits);
        }
    } else {
        out.push_str(&digits[..1]);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&exp.to_string());
    }
    Some(out)
}

/// A JSON number token for `x`, or `null` if `x` is not finite.
pub fn real(x: f64) -> Value {
    format_real(x)
        .and_then(|s| s.parse::<Number>().ok())
        .map_or(Value::Null, Value::Number)
}

pub fn opt_real(x: Option<f64>) -> Value {
    x.map_or(Value::Null, real)
}
