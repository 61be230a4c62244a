use std::f64::consts::PI;

use celine_core::{HalfInt, Rational};

use crate::Failure;

/// Command-line tokens such as `-1/2` or `-pi/3` would be read as flags;
/// they are passed through with a U+2212 minus sign instead.
pub fn protect_negative(arg: std::ffi::OsString) -> std::ffi::OsString {
    match arg.to_str().and_then(|s| s.strip_prefix('-')) {
        Some(rest) if rest.starts_with(|c: char| c.is_ascii_digit() || c == '.') || rest.starts_with("pi") => {
            format!("\u{2212}{rest}").into()
        }
        _ => arg,
    }
}

fn minus(s: &str) -> std::borrow::Cow<'_, str> {
    match s.strip_prefix('\u{2212}') {
        Some(rest) => format!("-{rest}").into(),
        None => s.into(),
    }
}

pub fn half(s: &str) -> Result<HalfInt, Failure> {
    minus(s).parse().map_err(|_| Failure::Usage(format!("`{s}` is not an integer or half-integer (use n or p/2)")))
}

pub fn rational(s: &str) -> Result<Rational, Failure> {
    minus(s).parse().map_err(|_| Failure::Usage(format!("`{s}` is not a rational (use p or p/q)")))
}

pub fn uint(s: &str) -> Result<u64, Failure> {
    s.parse().map_err(|_| Failure::Usage(format!("`{s}` is not a nonnegative integer")))
}

/// Decimal radians, or `[-][c]pi[/k]` with the platform π.
pub fn angle(s: &str) -> Result<f64, Failure> {
    let bad = || Failure::Usage(format!("`{s}` is not an angle (use decimal radians or pi/k)"));
    let t = minus(s.trim());
    let t = t.as_ref();
    let Some(pos) = t.find("pi") else {
        return t.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
    };
    let (head, tail) = (&t[..pos], &t[pos + 2..]);
    let coeff = match head {
        "" => 1.0,
        "-" => -1.0,
        h => h.trim_end_matches('*').parse::<f64>().map_err(|_| bad())?,
    };
    let divisor = match tail {
        "" => 1.0,
        d => d.strip_prefix('/').and_then(|k| k.parse::<f64>().ok()).filter(|k| *k != 0.0).ok_or_else(bad)?,
    };
    Ok(coeff * PI / divisor)
}

pub fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, Failure> {
    value.as_deref().ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

pub fn triple<T>(
    values: &Option<Vec<String>>,
    flag: &str,
    f: fn(&str) -> Result<T, Failure>,
) -> Result<[T; 3], Failure> {
    let v = values.as_ref().ok_or_else(|| Failure::Usage(format!("missing --{flag}")))?;
    match v.as_slice() {
        [a, b, c] => Ok([f(a)?, f(b)?, f(c)?]),
        _ => Err(Failure::Usage(format!("--{flag} takes exactly three values"))),
    }
}

pub fn list(values: &[String]) -> Result<Vec<Rational>, Failure> {
    values.iter().map(|s| rational(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn angles() {
        assert_eq!(angle("0.5").ok(), Some(0.5));
        assert_eq!(angle("pi").ok(), Some(PI));
        assert_eq!(angle("pi/3").ok(), Some(PI / 3.0));
        assert_eq!(angle("2pi/3").ok(), Some(2.0 * PI / 3.0));
        assert_eq!(angle("-pi/2").ok(), Some(-PI / 2.0));
        assert!(angle("pi/0").is_err());
        assert!(angle("tau").is_err());
        assert_eq!(angle("\u{2212}pi").ok(), Some(-PI));
    }

    #[test]
    fn negative_tokens() {
        let p = |s: &str| protect_negative(s.into()).into_string().unwrap();
        assert_eq!(p("-1/2"), "\u{2212}1/2");
        assert_eq!(p("-pi/3"), "\u{2212}pi/3");
        assert_eq!(p("-n"), "-n");
        assert_eq!(p("--j"), "--j");
        assert_eq!(half(&p("-3/2")).unwrap(), HalfInt::from_twice(-3));
        assert_eq!(rational(&p("-2/3")).unwrap(), Rational::frac(-2, 3));
    }
}
