//! Deterministic number formatting and tabular output.

use std::fmt::Write as _;

use tavis_core::HalfInt;

/// Twelve significant digits, fixed notation for moderate exponents,
/// trailing zeros trimmed; `nan`, `inf`, `-inf` for non-finite values.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim(mantissa))
    }
}

fn trim(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn half(x: HalfInt) -> String {
    x.to_string()
}

/// A CSV table with a fixed header; cells are written verbatim.
pub struct Table {
    out: String,
    width: usize,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        let mut out = header.join(",");
        out.push('\n');
        Table { out, width: header.len() }
    }

    pub fn row(&mut self, cells: &[String]) {
        debug_assert_eq!(cells.len(), self.width);
        let _ = writeln!(self.out, "{}", cells.join(","));
    }

    pub fn finish(self) -> String {
        self.out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(num(1.0), "1");
        assert_eq!(num(-0.4), "-0.4");
        assert_eq!(num(1.0 / 3.0), "0.333333333333");
        assert_eq!(num(2.0 / 3.0 * 1e-7), "6.66666666667e-8");
        assert_eq!(num(123456789012345.0), "1.23456789012e14");
        assert_eq!(num(9.999999999999995), "10");
        assert_eq!(num(f64::NAN), "nan");
        assert_eq!(num(-0.0), "0");
    }

    #[test]
    fn round_trip_within_tolerance() {
        for x in [std::f64::consts::PI, -1.8816666666666668, 6.02e23, 1.5e-300, 0.035017700001] {
            let back: f64 = num(x).parse().unwrap();
            assert!(((back - x) / x).abs() < 1e-11, "{x} -> {}", num(x));
        }
    }
}
