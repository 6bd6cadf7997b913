//! Stable number formatting: every value is rounded to 12 significant digits.

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x)
}

pub fn round_point(p: [f64; 2]) -> [f64; 2] {
    [round12(p[0]), round12(p[1])]
}

/// Shortest text that reads back as `round12(x)`.
pub fn num(x: f64) -> String {
    format!("{:?}", round12(x))
}
