use thiserror::Error;

use super::{factorial, CasimirPoly, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series_exp requires a zero constant term")]
    NonzeroConstantTerm,
}

/// Truncated formal power series in `x` with `CasimirPoly` coefficients.
/// `coeffs[k]` is the coefficient of `x^k`; coefficients are valid for
/// `k <= truncation_order` and operations never report anything beyond the
/// common truncation order of their inputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesX {
    coeffs: Vec<CasimirPoly>,
    truncation_order: usize,
}

impl SeriesX {
    pub fn zero(truncation_order: usize) -> Self {
        SeriesX {
            coeffs: vec![CasimirPoly::zero(); truncation_order + 1],
            truncation_order,
        }
    }

    pub fn one(truncation_order: usize) -> Self {
        let mut s = SeriesX::zero(truncation_order);
        s.coeffs[0] = CasimirPoly::one();
        s
    }

    /// Builds a series from a coefficient function for `x^0 .. x^N`.
    pub fn from_fn(truncation_order: usize, f: impl FnMut(usize) -> CasimirPoly) -> Self {
        SeriesX {
            coeffs: (0..=truncation_order).map(f).collect(),
            truncation_order,
        }
    }

    /// The series of `p * x^power`.
    pub fn monomial(p: CasimirPoly, power: usize, truncation_order: usize) -> Self {
        let mut s = SeriesX::zero(truncation_order);
        if power <= truncation_order {
            s.coeffs[power] = p;
        }
        s
    }

    /// exp(a * x) up to the truncation order: coefficients a^k / k!.
    pub fn exp_linear(a: &CasimirPoly, truncation_order: usize) -> Self {
        let mut pow = CasimirPoly::one();
        SeriesX::from_fn(truncation_order, |k| {
            if k > 0 {
                pow = &pow * a;
            }
            pow.scale(&Rational::new(1.into(), factorial(k)))
        })
    }

    pub fn truncation_order(&self) -> usize {
        self.truncation_order
    }

    /// Coefficient of `x^k`. Panics past the truncation order: a coefficient
    /// beyond it was never computed and must not be silently reported as 0.
    pub fn coeff(&self, k: usize) -> &CasimirPoly {
        assert!(
            k <= self.truncation_order,
            "coefficient x^{k} requested beyond truncation order {}",
            self.truncation_order
        );
        &self.coeffs[k]
    }

    pub fn add(&self, rhs: &SeriesX) -> SeriesX {
        let n = self.truncation_order.min(rhs.truncation_order);
        SeriesX::from_fn(n, |k| self.coeff(k) + rhs.coeff(k))
    }

    pub fn sub(&self, rhs: &SeriesX) -> SeriesX {
        let n = self.truncation_order.min(rhs.truncation_order);
        SeriesX::from_fn(n, |k| self.coeff(k) - rhs.coeff(k))
    }

    pub fn scale(&self, p: &CasimirPoly) -> SeriesX {
        SeriesX::from_fn(self.truncation_order, |k| self.coeff(k) * p)
    }

    /// Truncated Cauchy product; the result carries the common (minimum)
    /// truncation order of the factors.
    pub fn mul(&self, rhs: &SeriesX) -> SeriesX {
        let n = self.truncation_order.min(rhs.truncation_order);
        let mut coeffs = vec![CasimirPoly::zero(); n + 1];
        for i in 0..=n {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                if rhs.coeff(j).is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(self.coeff(i) * rhs.coeff(j));
            }
        }
        SeriesX {
            coeffs,
            truncation_order: n,
        }
    }

    pub fn pow(&self, exp: usize) -> SeriesX {
        let mut acc = SeriesX::one(self.truncation_order);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// exp of a series with zero constant term, via the terminating sum
    /// 1 + a + a^2/2! + ... (a^k has valuation >= k).
    pub fn exp(&self) -> Result<SeriesX, SeriesError> {
        if !self.coeff(0).is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.truncation_order;
        let mut result = SeriesX::one(n);
        let mut term = SeriesX::one(n);
        for k in 1..=n {
            term = term.mul(self);
            let inv_k = Rational::new(1.into(), (k as i64).into());
            term = SeriesX::from_fn(n, |j| term.coeff(j).scale(&inv_k));
            result = result.add(&term);
        }
        Ok(result)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat;
    use super::*;

    #[test]
    fn exp_of_zero_is_one() {
        let e = SeriesX::zero(6).exp().unwrap();
        assert_eq!(e, SeriesX::one(6));
    }

    #[test]
    fn exp_of_minus_cx_coefficients() {
        // exp(-c x): coefficient of x^2 is c^2/2
        let a = SeriesX::monomial(-&CasimirPoly::c(), 1, 5);
        let e = a.exp().unwrap();
        assert_eq!(
            e.coeff(2),
            &CasimirPoly::monomial(rat(1, 2), 2),
        );
        assert_eq!(e, SeriesX::exp_linear(&(-&CasimirPoly::c()), 5));
    }

    #[test]
    fn exp_inverse() {
        // exp(x) * exp(-x) = 1 at any truncation order
        for n in [0usize, 1, 3, 8] {
            let x = SeriesX::monomial(CasimirPoly::one(), 1, n);
            let prod = x.exp().unwrap().mul(&(SeriesX::zero(n).sub(&x)).exp().unwrap());
            assert_eq!(prod, SeriesX::one(n));
        }
    }

    #[test]
    fn exp_rejects_constant_term() {
        let s = SeriesX::one(3);
        assert_eq!(s.exp(), Err(SeriesError::NonzeroConstantTerm));
    }

    #[test]
    fn mul_truncates_to_common_order() {
        let a = SeriesX::exp_linear(&CasimirPoly::one(), 7);
        let b = SeriesX::exp_linear(&CasimirPoly::one(), 4);
        assert_eq!(a.mul(&b).truncation_order(), 4);
    }

    #[test]
    #[should_panic(expected = "beyond truncation order")]
    fn coeff_past_truncation_panics() {
        let s = SeriesX::one(2);
        let _ = s.coeff(3);
    }

    #[test]
    fn exp_linear_multiplies_like_exponents() {
        // e^{(c-1)x} * e^{x} = e^{cx}
        let a = SeriesX::exp_linear(&CasimirPoly::from_ints(&[-1, 1]), 6);
        let b = SeriesX::exp_linear(&CasimirPoly::one(), 6);
        assert_eq!(a.mul(&b), SeriesX::exp_linear(&CasimirPoly::c(), 6));
    }
}
