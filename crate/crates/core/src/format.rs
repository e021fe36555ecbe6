//! Fixed-precision number rendering for stable golden output.
//!
//! Values are rounded to a fixed number of significant digits (ties to even,
//! via the exact decimal expansion `std` uses for `{:e}`), trailing zeros are
//! dropped, and the result is written positionally when the exponent is
//! moderate. JSON output uses 17 digits and CSV output 12.

use serde::Serializer;
use serde_json::value::RawValue;

pub const JSON_DIGITS: usize = 17;
pub const CSV_DIGITS: usize = 12;

/// Renders `x` rounded to `digits` significant digits.
pub fn sig(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.0".to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let mut body: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    while body.len() > 1 && body.ends_with('0') {
        body.pop();
    }

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if (-7..21).contains(&exp) {
        if exp >= 0 {
            let int_len = exp as usize + 1;
            if body.len() <= int_len {
                out.push_str(&body);
                out.extend(std::iter::repeat_n('0', int_len - body.len()));
                out.push_str(".0");
            } else {
                out.push_str(&body[..int_len]);
                out.push('.');
                out.push_str(&body[int_len..]);
            }
        } else {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-exp - 1) as usize));
            out.push_str(&body);
        }
    } else {
        out.push_str(&body[..1]);
        out.push('.');
        out.push_str(if body.len() > 1 { &body[1..] } else { "0" });
        out.push('e');
        out.push_str(&exp.to_string());
    }
    out
}

pub fn json(x: f64) -> String {
    sig(x, JSON_DIGITS)
}

pub fn csv(x: f64) -> String {
    sig(x, CSV_DIGITS)
}

/// `serialize_with` helper emitting `x` as a 17-digit JSON number.
pub fn serialize_json_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if !x.is_finite() {
        return s.serialize_none();
    }
    let raw = RawValue::from_string(json(*x)).map_err(serde::ser::Error::custom)?;
    serde::Serialize::serialize(&raw, s)
}

pub fn serialize_json_opt_f64<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => serialize_json_f64(v, s),
        None => s.serialize_none(),
    }
}

pub fn serialize_json_f64_seq<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        let raw = RawValue::from_string(json(*x)).map_err(serde::ser::Error::custom)?;
        seq.serialize_element(&raw)?;
    }
    seq.end()
}
