//! Exact nonnegative rationals for solution-quality comparisons.

use std::fmt;
use std::str::FromStr;

/// A nonnegative rational `num/den` with `den > 0`, stored reduced.
/// Comparisons against algorithm bounds are done by integer
/// cross-multiplication so no floating point enters any verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den > 0, "denominator must be positive");
        let g = gcd(num, den).max(1);
        Ratio { num: num / g, den: den / g }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `self <= other`, exactly.
    pub fn le(&self, other: &Ratio) -> bool {
        (self.num as u128) * (other.den as u128) <= (other.num as u128) * (self.den as u128)
    }

    /// `self <= sqrt(10/3)`, via squared cross-multiplication:
    /// (num/den)² ≤ 10/3  ⟺  3·num² ≤ 10·den².
    pub fn le_sqrt_10_over_3(&self) -> bool {
        3u128 * (self.num as u128).pow(2) <= 10u128 * (self.den as u128).pow(2)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = String;

    /// Accepts "p/q", decimals like "0.5", and plain integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let num: u64 = p.trim().parse().map_err(|_| format!("bad numerator in '{s}'"))?;
            let den: u64 = q.trim().parse().map_err(|_| format!("bad denominator in '{s}'"))?;
            if den == 0 {
                return Err(format!("zero denominator in '{s}'"));
            }
            return Ok(Ratio::new(num, den));
        }
        if let Some((i, f)) = s.split_once('.') {
            if f.is_empty() || !f.chars().all(|c| c.is_ascii_digit()) {
                return Err(format!("malformed decimal '{s}'"));
            }
            let int: u64 = if i.is_empty() { 0 } else { i.parse().map_err(|_| format!("malformed decimal '{s}'"))? };
            let frac: u64 = f.parse().map_err(|_| format!("malformed decimal '{s}'"))?;
            let scale = 10u64.pow(f.len() as u32);
            return Ok(Ratio::new(int * scale + frac, scale));
        }
        let v: u64 = s.parse().map_err(|_| format!("malformed rational '{s}'"))?;
        Ok(Ratio::new(v, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_display() {
        assert_eq!(Ratio::new(6, 4), Ratio::new(3, 2));
        assert_eq!(Ratio::new(3, 2).to_string(), "3/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("1/2".parse::<Ratio>().unwrap(), Ratio::new(1, 2));
        assert_eq!("0.5".parse::<Ratio>().unwrap(), Ratio::new(1, 2));
        assert_eq!("2".parse::<Ratio>().unwrap(), Ratio::new(2, 1));
        assert!("1/0".parse::<Ratio>().is_err());
        assert!("x".parse::<Ratio>().is_err());
    }

    #[test]
    fn sqrt_bound_is_exact() {
        // sqrt(10/3) = 1.8257418...
        assert!(Ratio::new(18257, 10000).le_sqrt_10_over_3());
        assert!(!Ratio::new(18258, 10000).le_sqrt_10_over_3());
        assert!(Ratio::new(1, 3).le_sqrt_10_over_3());
    }
}
