//! Deterministic decimal formatting shared by the CSV and SVG writers.

/// Formats `x` with at most `max_decimals` digits after the point, dropping
/// trailing zeros (`1.000` -> `1`, `0.910` -> `0.91`). Negative zero prints
/// as `0`.
pub fn trim_decimal(x: f64, max_decimals: usize) -> String {
    let mut s = format!("{:.*}", max_decimals, x);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

/// Fixed number of decimals, with negative zero normalised.
pub fn fixed(x: f64, decimals: usize) -> String {
    let s = format!("{:.*}", decimals, x);
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}
