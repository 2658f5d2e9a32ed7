use num::traits::{One, Zero};

use super::{Integer, Rational};

/// Stirling number of the second kind S(n, m): partitions of an n-set into m
/// nonempty unlabeled blocks, by the triangular recurrence
/// S(n, m) = S(n-1, m-1) + m * S(n-1, m) with S(0, 0) = 1.
pub fn stirling2(n: usize, m: usize) -> Integer {
    if m > n {
        return Integer::zero();
    }
    if n == 0 {
        return Integer::one(); // S(0,0)
    }
    let mut row = vec![Integer::zero(); m + 1];
    row[0] = Integer::one();
    for i in 1..=n {
        let hi = m.min(i);
        for j in (1..=hi).rev() {
            row[j] = &row[j - 1] + Integer::from(j) * &row[j];
        }
        row[0] = Integer::zero();
        let _ = i;
    }
    row[m].clone()
}

/// Falling factorial x(x-1)...(x-k+1), with the empty product 1 for k = 0.
pub fn falling_factorial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= x - Rational::from_integer(Integer::from(i as i64));
    }
    acc
}

pub fn factorial(n: usize) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n {
        acc *= Integer::from(i);
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Multinomial coefficient n! / (k_1! ... k_m!); the parts must sum to n.
pub fn multinomial(n: usize, parts: &[usize]) -> Integer {
    debug_assert_eq!(parts.iter().sum::<usize>(), n);
    let mut acc = factorial(n);
    for &k in parts {
        acc /= factorial(k);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;
    use num::ToPrimitive;

    #[test]
    fn stirling_small_values() {
        assert_eq!(stirling2(4, 2), Integer::from(7));
        for n in 0..=8 {
            assert_eq!(stirling2(n, n), Integer::one(), "S({n},{n})");
        }
        assert_eq!(stirling2(6, 2), Integer::from(31));
        assert_eq!(stirling2(3, 0), Integer::zero());
        assert_eq!(stirling2(2, 5), Integer::zero());
    }

    #[test]
    fn stirling_row_sums_are_bell_numbers() {
        let bell = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate() {
            let sum: Integer = (0..=n).map(|m| stirling2(n, m)).sum();
            assert_eq!(sum.to_u64().unwrap(), b);
        }
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(&rat_int(5), 3), rat_int(60));
        assert_eq!(falling_factorial(&rat(7, 2), 0), rat_int(1));
        assert_eq!(falling_factorial(&rat_int(-2), 3), rat_int(-24));
    }

    /// Sum_{m=a}^{N+a} (-1)^(m-1) (m-1)! S(N, m-a) = (-1)^(a-1) (a-1)! (-a)^N.
    #[test]
    fn alternating_stirling_lemma() {
        for a in 1usize..=4 {
            for n in 1usize..=8 {
                let mut lhs = Rational::zero();
                for m in a..=(n + a) {
                    let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
                    lhs += rat_int(sign)
                        * Rational::from_integer(factorial(m - 1))
                        * Rational::from_integer(stirling2(n, m - a));
                }
                let sign = if (a - 1) % 2 == 0 { 1 } else { -1 };
                let rhs = rat_int(sign)
                    * Rational::from_integer(factorial(a - 1))
                    * rat_int(-(a as i64)).pow(n as i32);
                assert_eq!(lhs, rhs, "a={a} N={n}");
            }
        }
    }

    /// Sum_{k=1}^{N} S(N,k) FF(x,k) = x^N at assorted rational points.
    #[test]
    fn stirling_falling_factorial_identity() {
        let points = [
            rat_int(0),
            rat_int(1),
            rat_int(-1),
            rat(1, 2),
            rat(-3, 7),
            rat(22, 5),
            rat_int(13),
            rat(-9, 2),
            rat(5, 3),
            rat(-17, 4),
        ];
        for n in 1usize..=8 {
            for x in &points {
                let mut lhs = Rational::zero();
                for k in 1..=n {
                    lhs += Rational::from_integer(stirling2(n, k)) * falling_factorial(x, k);
                }
                assert_eq!(lhs, x.pow(n as i32), "N={n} x={x}");
            }
        }
    }

    #[test]
    fn binomial_and_multinomial() {
        assert_eq!(binomial(5, 2), Integer::from(10));
        assert_eq!(binomial(4, 7), Integer::zero());
        assert_eq!(multinomial(6, &[2, 2, 2]), Integer::from(90));
        assert_eq!(multinomial(5, &[5]), Integer::one());
    }
}
