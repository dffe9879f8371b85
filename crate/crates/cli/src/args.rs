//! Parsers for flag values.

use loopdress::{GridSpec, C};

/// Parses `re,im`; a bare real number is accepted as well.
pub fn parse_complex(s: &str) -> Result<C, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| t.parse::<f64>().map_err(|_| format!("expected re,im, got {s:?}"));
    let z = match parts.as_slice() {
        [re] => C::new(num(re)?, 0.0),
        [re, im] => C::new(num(re)?, num(im)?),
        _ => return Err(format!("expected re,im, got {s:?}")),
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(format!("non-finite value {s:?}"));
    }
    Ok(z)
}

pub fn parse_grid(s: &str) -> Result<GridSpec, String> {
    s.parse::<GridSpec>().map_err(|e| e.to_string())
}

/// Inverse of [`parse_complex`], exact under round-trip.
pub fn format_complex(z: C) -> String {
    format!("{},{}", z.re, z.im)
}
