use num::traits::Zero;
use thiserror::Error;

use super::{CasimirPoly, Rational};

#[derive(Debug, Error)]
pub enum InterpError {
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(Rational),
    #[error("no interpolation points supplied")]
    Empty,
}

/// The unique polynomial of degree < points.len() through the given points,
/// built exactly from the Newton divided-difference form.
pub fn interpolate(points: &[(Rational, Rational)]) -> Result<CasimirPoly, InterpError> {
    if points.is_empty() {
        return Err(InterpError::Empty);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in &points[..i] {
            if xi == xj {
                return Err(InterpError::DuplicateAbscissa(xi.clone()));
            }
        }
    }

    let n = points.len();
    let mut diffs: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &points[i].0 - &points[i - level].0;
            diffs[i] = (&diffs[i] - &diffs[i - 1]) / dx;
        }
    }

    // p = sum_i diffs[i] * prod_{j<i} (c - x_j)
    let mut result = CasimirPoly::zero();
    let mut basis = CasimirPoly::one();
    for (i, d) in diffs.iter().enumerate() {
        if !d.is_zero() {
            result = &result + &basis.scale(d);
        }
        if i + 1 < n {
            let linear =
                CasimirPoly::from_coeffs(vec![-&points[i].0, Rational::from_integer(1.into())]);
            basis = &basis * &linear;
        }
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn recovers_square() {
        let pts = vec![
            (rat_int(0), rat_int(0)),
            (rat_int(1), rat_int(1)),
            (rat_int(2), rat_int(4)),
        ];
        assert_eq!(interpolate(&pts).unwrap(), CasimirPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn single_point_is_constant() {
        let pts = vec![(rat_int(5), rat_int(3))];
        assert_eq!(interpolate(&pts).unwrap(), CasimirPoly::from_ints(&[3]));
    }

    #[test]
    fn recovers_k22_polynomial_from_samples() {
        // c^4 - 4c^3 + 8c^2 - 4c sampled at five points
        let p = CasimirPoly::from_ints(&[0, -4, 8, -4, 1]);
        let pts: Vec<_> = (0..5)
            .map(|i| {
                let x = rat(i as i64 * 2 - 3, 2);
                let y = p.eval(&x);
                (x, y)
            })
            .collect();
        assert_eq!(interpolate(&pts).unwrap(), p);
    }

    #[test]
    fn duplicate_abscissa_is_rejected() {
        let pts = vec![(rat_int(1), rat_int(0)), (rat_int(1), rat_int(2))];
        assert!(matches!(
            interpolate(&pts),
            Err(InterpError::DuplicateAbscissa(_))
        ));
    }

    proptest::proptest! {
        /// interpolate after sampling returns the original polynomial.
        #[test]
        fn interpolation_inverts_sampling(raw in proptest::collection::vec(-20i64..=20, 0..=11)) {
            let p = CasimirPoly::from_coeffs(raw.iter().map(|&n| rat_int(n)).collect());
            let samples: Vec<_> = (0..=p.degree().unwrap_or(0))
                .map(|i| (rat_int(i as i64), p.eval(&rat_int(i as i64))))
                .collect();
            proptest::prop_assert_eq!(interpolate(&samples).unwrap(), p);
        }
    }
}
