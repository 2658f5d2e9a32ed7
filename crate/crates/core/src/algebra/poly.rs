use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Zero};
use thiserror::Error;

use super::{Integer, Rational};

/// Dense univariate polynomial in the Casimir symbol `c` over the exact
/// rationals. `coeffs[i]` is the coefficient of `c^i`; the vector carries no
/// trailing zeros, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CasimirPoly {
    coeffs: Vec<Rational>,
}

#[derive(Debug, Error)]
pub enum PolyJsonError {
    #[error("polynomial JSON must be an object with \"variable\" and \"coeffs\"")]
    Shape,
    #[error("unsupported variable {0:?}, expected \"c\"")]
    Variable(String),
    #[error("coefficient {0} is not a [numerator, denominator] string pair")]
    Coefficient(usize),
    #[error("coefficient {0} has a zero denominator")]
    ZeroDenominator(usize),
}

impl CasimirPoly {
    pub fn zero() -> Self {
        CasimirPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        CasimirPoly::constant(Rational::one())
    }

    /// The variable `c` itself.
    pub fn c() -> Self {
        CasimirPoly::monomial(Rational::one(), 1)
    }

    pub fn constant(value: Rational) -> Self {
        CasimirPoly::from_coeffs(vec![value])
    }

    pub fn monomial(coeff: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = coeff;
        CasimirPoly::from_coeffs(coeffs)
    }

    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CasimirPoly { coeffs }
    }

    /// Convenience constructor from small integer coefficients (low to high).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        CasimirPoly::from_coeffs(coeffs.iter().map(|&n| super::rat_int(n)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return CasimirPoly::zero();
        }
        CasimirPoly::from_coeffs(self.coeffs.iter().map(|a| a * factor).collect())
    }

    /// Horner-exact evaluation at a rational point.
    pub fn eval(&self, v: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * v + a;
        }
        acc
    }

    /// Substitutes `c := factor * c`, i.e. returns `p(factor * c)`.
    pub fn scale_variable(&self, factor: &Rational) -> Self {
        let mut pow = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let scaled = a * &pow;
                pow = &pow * factor;
                scaled
            })
            .collect();
        CasimirPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = CasimirPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Serializes to the documented JSON schema:
    /// `{"variable":"c","coeffs":[["num","den"],...]}` with decimal strings,
    /// index = power of `c`.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coeffs
            .iter()
            .map(|a| {
                serde_json::Value::Array(vec![
                    serde_json::Value::String(a.numer().to_string()),
                    serde_json::Value::String(a.denom().to_string()),
                ])
            })
            .collect();
        serde_json::json!({ "variable": "c", "coeffs": coeffs })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, PolyJsonError> {
        let obj = value.as_object().ok_or(PolyJsonError::Shape)?;
        let var = obj
            .get("variable")
            .and_then(|v| v.as_str())
            .ok_or(PolyJsonError::Shape)?;
        if var != "c" {
            return Err(PolyJsonError::Variable(var.to_string()));
        }
        let raw = obj
            .get("coeffs")
            .and_then(|v| v.as_array())
            .ok_or(PolyJsonError::Shape)?;
        let mut coeffs = Vec::with_capacity(raw.len());
        for (i, entry) in raw.iter().enumerate() {
            let pair = entry.as_array().ok_or(PolyJsonError::Coefficient(i))?;
            if pair.len() != 2 {
                return Err(PolyJsonError::Coefficient(i));
            }
            let num = pair[0]
                .as_str()
                .and_then(|s| s.parse::<Integer>().ok())
                .ok_or(PolyJsonError::Coefficient(i))?;
            let den = pair[1]
                .as_str()
                .and_then(|s| s.parse::<Integer>().ok())
                .ok_or(PolyJsonError::Coefficient(i))?;
            if den.is_zero() {
                return Err(PolyJsonError::ZeroDenominator(i));
            }
            coeffs.push(Rational::new(num, den));
        }
        Ok(CasimirPoly::from_coeffs(coeffs))
    }
}

fn fmt_coeff_magnitude(a: &Rational) -> String {
    let numer = a.numer().magnitude().to_string();
    if a.denom().is_one() {
        numer
    } else {
        format!("{}/{}", numer, a.denom())
    }
}

/// Human-readable form, highest power first: `c^4 - 4c^3 + 8c^2 - 4c`.
/// Non-integer coefficients are parenthesized: `(1/6)c - 1/2`.
impl fmt::Display for CasimirPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for power in (0..self.coeffs.len()).rev() {
            let a = &self.coeffs[power];
            if a.is_zero() {
                continue;
            }
            let negative = a.numer().sign() == num::bigint::Sign::Minus;
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = fmt_coeff_magnitude(a);
            let var = match power {
                0 => String::new(),
                1 => "c".to_string(),
                p => format!("c^{p}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{var}")?;
            } else if a.denom().is_one() {
                write!(f, "{mag}{var}")?;
            } else {
                write!(f, "({mag}){var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CasimirPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CasimirPoly({self})")
    }
}

impl Add for &CasimirPoly {
    type Output = CasimirPoly;
    fn add(self, rhs: &CasimirPoly) -> CasimirPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        CasimirPoly::from_coeffs(coeffs)
    }
}

impl Sub for &CasimirPoly {
    type Output = CasimirPoly;
    fn sub(self, rhs: &CasimirPoly) -> CasimirPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        CasimirPoly::from_coeffs(coeffs)
    }
}

impl Mul for &CasimirPoly {
    type Output = CasimirPoly;
    fn mul(self, rhs: &CasimirPoly) -> CasimirPoly {
        if self.is_zero() || rhs.is_zero() {
            return CasimirPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        CasimirPoly::from_coeffs(coeffs)
    }
}

impl Neg for &CasimirPoly {
    type Output = CasimirPoly;
    fn neg(self) -> CasimirPoly {
        CasimirPoly::from_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }
}

macro_rules! forward_owned_binop {
    ($Op:ident, $op:ident) => {
        impl $Op for CasimirPoly {
            type Output = CasimirPoly;
            fn $op(self, rhs: CasimirPoly) -> CasimirPoly {
                (&self).$op(&rhs)
            }
        }
        impl $Op<&CasimirPoly> for CasimirPoly {
            type Output = CasimirPoly;
            fn $op(self, rhs: &CasimirPoly) -> CasimirPoly {
                (&self).$op(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn product_expands() {
        // (c) * (c - 1) = c^2 - c
        let p = CasimirPoly::c() * CasimirPoly::from_ints(&[-1, 1]);
        assert_eq!(p, CasimirPoly::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn zero_is_additive_identity() {
        let p = CasimirPoly::from_ints(&[3, 0, 7]);
        assert_eq!(&p + &CasimirPoly::zero(), p);
    }

    #[test]
    fn scaling_by_rational() {
        // (c - 3) * 1/6 = (1/6)c - 1/2
        let p = CasimirPoly::from_ints(&[-3, 1]).scale(&rat(1, 6));
        assert_eq!(p.coeff(0), rat(-1, 2));
        assert_eq!(p.coeff(1), rat(1, 6));
        assert_eq!(p.to_string(), "(1/6)c - 1/2");
    }

    #[test]
    fn eval_is_exact() {
        let p = CasimirPoly::from_ints(&[0, -1, 1]); // c^2 - c
        assert_eq!(p.eval(&rat_int(2)), rat_int(2));
        assert_eq!(CasimirPoly::zero().eval(&rat(7, 3)), rat_int(0));
        // k_{2,2} = c^4 - 4c^3 + 8c^2 - 4c at c = 1
        let k22 = CasimirPoly::from_ints(&[0, -4, 8, -4, 1]);
        assert_eq!(k22.eval(&rat_int(1)), rat_int(1));
    }

    #[test]
    fn degree_bookkeeping() {
        assert_eq!(CasimirPoly::zero().degree(), None);
        assert_eq!(CasimirPoly::one().degree(), Some(0));
        let a = CasimirPoly::from_ints(&[1, 1]);
        let b = CasimirPoly::from_ints(&[-1, 1]);
        assert_eq!((&a * &b).degree(), Some(2));
        // cancellation trims trailing zeros
        assert_eq!((&a - &a).degree(), None);
    }

    #[test]
    fn display_matches_documented_form() {
        let k22 = CasimirPoly::from_ints(&[0, -4, 8, -4, 1]);
        assert_eq!(k22.to_string(), "c^4 - 4c^3 + 8c^2 - 4c");
        assert_eq!(CasimirPoly::zero().to_string(), "0");
        assert_eq!(CasimirPoly::from_ints(&[0, -1]).to_string(), "-c");
    }

    #[test]
    fn json_round_trip() {
        let p = CasimirPoly::from_coeffs(vec![rat(-1, 2), rat(1, 6), rat_int(3)]);
        let v = p.to_json();
        assert_eq!(v["variable"], "c");
        let q = CasimirPoly::from_json(&v).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn json_rejects_bad_input() {
        for text in [
            r#"{"variable":"x","coeffs":[]}"#,
            r#"{"variable":"c","coeffs":[["1"]]}"#,
            r#"{"variable":"c","coeffs":[["1","0"]]}"#,
            r#"[1,2]"#,
        ] {
            let v: serde_json::Value = serde_json::from_str(text).unwrap();
            assert!(CasimirPoly::from_json(&v).is_err(), "accepted {text}");
        }
    }

    fn arb_poly() -> impl proptest::strategy::Strategy<Value = CasimirPoly> {
        use proptest::prelude::*;
        proptest::collection::vec((-9i64..=9, 1i64..=4), 0..=6)
            .prop_map(|coeffs| CasimirPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect()))
    }

    proptest::proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), d in arb_poly()) {
            proptest::prop_assert_eq!(&(&a * &b) * &d, &a * &(&b * &d));
            proptest::prop_assert_eq!(&(&a + &b) + &d, &a + &(&b + &d));
            proptest::prop_assert_eq!(&a * &(&b + &d), &(&a * &b) + &(&a * &d));
            proptest::prop_assert_eq!(&a * &b, &b * &a);
            proptest::prop_assert_eq!(&(&a - &b) + &b, a);
        }

        #[test]
        fn mul_degree_adds(a in arb_poly(), b in arb_poly()) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => proptest::prop_assert_eq!(prod.degree(), Some(da + db)),
                _ => proptest::prop_assert!(prod.is_zero()),
            }
        }
    }
}
