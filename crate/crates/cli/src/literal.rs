//! Complex literal grammar: `re,im`, a bare real, or `polar:MOD@ARG` where
//! the angle accepts `pi` / `k*pi` terms joined by `+` and `-`
//! (e.g. `polar:1@0.6+pi`, `polar:0.5@2*pi-0.3`).

use std::f64::consts::PI;
use trinom::Complex;

pub fn parse_complex(input: &str) -> Result<Complex, String> {
    let s = input.trim();
    if let Some(rest) = s.strip_prefix("polar:") {
        let (modulus, angle) = rest
            .split_once('@')
            .ok_or_else(|| format!("polar literal `{input}` needs the form polar:MOD@ARG"))?;
        let modulus: f64 = modulus
            .trim()
            .parse()
            .map_err(|_| format!("bad modulus in `{input}`"))?;
        if modulus < 0.0 {
            return Err(format!("modulus must be non-negative in `{input}`"));
        }
        return Ok(Complex::from_polar(modulus, parse_angle(angle)?));
    }
    if let Some((re, im)) = s.split_once(',') {
        let re: f64 = re
            .trim()
            .parse()
            .map_err(|_| format!("bad real part in `{input}`"))?;
        let im: f64 = im
            .trim()
            .parse()
            .map_err(|_| format!("bad imaginary part in `{input}`"))?;
        return Ok(Complex::new(re, im));
    }
    s.parse()
        .map(|re| Complex::new(re, 0.0))
        .map_err(|_| format!("bad complex literal `{input}`; expected re,im or polar:MOD@ARG"))
}

/// Sum of signed terms, each a number, `pi`, or `k*pi`.
pub fn parse_angle(input: &str) -> Result<f64, String> {
    let chars: Vec<char> = input.trim().chars().collect();
    if chars.is_empty() {
        return Err("empty angle".to_string());
    }
    let mut terms: Vec<(f64, String)> = Vec::new();
    let mut current = String::new();
    let mut sign = 1.0;
    for (i, &ch) in chars.iter().enumerate() {
        if ch == '+' || ch == '-' {
            // A sign right after `e`/`E` belongs to a float exponent.
            let exponent_sign = i > 0 && matches!(chars[i - 1], 'e' | 'E');
            if !exponent_sign {
                if i == 0 {
                    if ch == '-' {
                        sign = -1.0;
                    }
                } else {
                    if current.trim().is_empty() {
                        return Err(format!("malformed angle `{input}`"));
                    }
                    terms.push((sign, std::mem::take(&mut current)));
                    sign = if ch == '+' { 1.0 } else { -1.0 };
                }
                continue;
            }
        }
        current.push(ch);
    }
    if current.trim().is_empty() {
        return Err(format!("malformed angle `{input}`"));
    }
    terms.push((sign, current));

    let mut total = 0.0;
    for (sign, term) in terms {
        let t = term.trim();
        let value = if t == "pi" {
            PI
        } else if let Some(coeff) = t.strip_suffix("*pi") {
            coeff
                .trim()
                .parse::<f64>()
                .map_err(|_| format!("bad pi multiple `{t}` in angle `{input}`"))?
                * PI
        } else {
            t.parse::<f64>()
                .map_err(|_| format!("bad term `{t}` in angle `{input}`"))?
        };
        total += sign * value;
    }
    Ok(total)
}
