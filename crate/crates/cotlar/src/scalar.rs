//! Exact and floating scalar types for symbols and group-algebra
//! coefficients. Verification paths run on exact rational complex
//! numbers so that "zero" means zero; the float type exists only for
//! norm-ratio sampling.

use num::complex::Complex;
use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rat = BigRational;
/// Complex numbers with exact rational real and imaginary parts.
pub type ExactComplex = Complex<Rat>;
pub type FloatComplex = Complex<f64>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn exact(re: i64) -> ExactComplex {
    Complex::new(rat(re), rat(0))
}

pub fn exact_pair(re: Rat, im: Rat) -> ExactComplex {
    Complex::new(re, im)
}

pub fn exact_i() -> ExactComplex {
    Complex::new(rat(0), rat(1))
}

pub fn exact_one() -> ExactComplex {
    exact(1)
}

pub fn exact_minus_one() -> ExactComplex {
    exact(-1)
}

pub fn exact_zero() -> ExactComplex {
    exact(0)
}

/// Squared modulus, exact.
pub fn abs_sq(z: &ExactComplex) -> Rat {
    &z.re * &z.re + &z.im * &z.im
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let numer = r.numer();
    let denom = r.denom();
    // convert via string for magnitudes beyond i64; coefficients in this
    // workbench stay tiny, so the fast path covers everything in practice
    match (numer.try_into(), denom.try_into()) {
        (Ok(n), Ok(d)) => {
            let n: i64 = n;
            let d: i64 = d;
            n as f64 / d as f64
        }
        _ => format!("{r}").parse::<f64>().unwrap_or(f64::NAN),
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders an exact complex scalar compactly: "0", "1", "-1", "i", "2-i",
/// "1/2+3i", ...
pub fn fmt_exact(z: &ExactComplex) -> String {
    let re_zero = z.re.is_zero();
    let im_zero = z.im.is_zero();
    if re_zero && im_zero {
        return "0".to_owned();
    }
    let mut out = String::new();
    if !re_zero {
        out.push_str(&fmt_rat(&z.re));
    }
    if !im_zero {
        if !re_zero && z.im.is_positive() {
            out.push('+');
        }
        if z.im == rat(1) {
            out.push('i');
        } else if z.im == rat(-1) {
            out.push_str("-i");
        } else {
            out.push_str(&fmt_rat(&z.im));
            out.push('i');
        }
    }
    out
}

/// Parses "1", "-1", "i", "-i", "3/2", "2+i", "1-2i" into an exact scalar.
pub fn parse_exact(text: &str) -> Option<ExactComplex> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return None;
    }
    // split into real and imaginary summands at a +/- that is not leading
    // and not part of a previous operator
    let bytes = t.as_bytes();
    let mut split = None;
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' {
            split = Some(i);
        }
    }
    let (re_part, im_part) = match split {
        Some(i) => (&t[..i], &t[i..]),
        None => {
            if t.ends_with('i') {
                ("0", t.as_str())
            } else {
                (t.as_str(), "0i")
            }
        }
    };
    let re = parse_rat(re_part)?;
    let im_text = im_part.strip_suffix('i')?;
    let im = match im_text {
        "" | "+" => rat(1),
        "-" => rat(-1),
        other => parse_rat(other)?,
    };
    Some(Complex::new(re, im))
}

fn parse_rat(text: &str) -> Option<Rat> {
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = text.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Coefficient arithmetic shared by the exact and float group-algebra
/// representations.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn from_exact(z: &ExactComplex) -> Self;
    fn abs_sq_f64(&self) -> f64;
    fn render(&self) -> String;
}

impl Scalar for ExactComplex {
    fn zero() -> Self {
        exact_zero()
    }
    fn one() -> Self {
        exact_one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_exact(z: &ExactComplex) -> Self {
        z.clone()
    }
    fn abs_sq_f64(&self) -> f64 {
        rat_to_f64(&abs_sq(self))
    }
    fn render(&self) -> String {
        fmt_exact(self)
    }
}

impl Scalar for FloatComplex {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn conj(&self) -> Self {
        Complex::new(self.re, -self.im)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn from_exact(z: &ExactComplex) -> Self {
        Complex::new(rat_to_f64(&z.re), rat_to_f64(&z.im))
    }
    fn abs_sq_f64(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }
    fn render(&self) -> String {
        format!("{}+{}i", self.re, self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_and_parses() {
        for text in ["0", "1", "-1", "i", "-i", "2+i", "1-2i", "3/2", "1/2+3i"] {
            let z = parse_exact(text).unwrap();
            assert_eq!(fmt_exact(&z), text);
        }
        assert_eq!(parse_exact("+1").map(|z| fmt_exact(&z)), Some("1".into()));
        assert!(parse_exact("1/0").is_none());
        assert!(parse_exact("").is_none());
    }

    #[test]
    fn exact_arithmetic_is_exact() {
        let z = exact_pair(ratio(1, 3), rat(1));
        let w = Scalar::mul(&z, &z.conj());
        assert_eq!(w, exact_pair(ratio(10, 9), rat(0)));
        assert!(Scalar::is_zero(&Scalar::sub(&w, &w)));
    }
}
