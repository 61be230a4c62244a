use celine_core::{Rational, SqrtRational};

/// `%.15g`-style rendering: 15 significant digits, trailing zeros dropped.
pub fn sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim(mantissa.to_string()), exp.abs())
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn exact_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.to_string()
    } else {
        format!("{v} ≈ {}", sig15(v.to_f64()))
    }
}

pub fn exact_sqrt(v: &SqrtRational) -> String {
    if v.is_zero() {
        v.to_string()
    } else {
        format!("{v} ≈ {}", sig15(v.to_f64()))
    }
}
