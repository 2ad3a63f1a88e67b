//! Exact rational Catalan numbers `Cat(a, b) = binom(a+b, a) / (a+b)`.

use crate::error::Error;

/// The exact value of `binom(a+b, a) / (a+b)` in lowest terms. For coprime
/// `a, b` this is an integer, counting the rational Catalan objects of
/// slope `a/b`; otherwise the reduced fraction is reported and the
/// non-coprime input flagged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalCatalan {
    pub numerator: u128,
    pub denominator: u128,
    /// Whether `gcd(a, b) = 1`.
    pub coprime: bool,
}

impl RationalCatalan {
    pub fn as_integer(&self) -> Option<u128> {
        (self.denominator == 1).then_some(self.numerator)
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn binomial(n: u128, k: u128) -> Result<u128, Error> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // multiply before dividing keeps every intermediate value integral
        acc = acc
            .checked_mul(n - k + i)
            .ok_or(Error::Overflow)?
            / i;
    }
    Ok(acc)
}

/// Computes `Cat(a, b)` exactly in integer arithmetic; overflow is detected
/// and reported, never wrapped.
///
/// ```
/// use slattice_core::rational_catalan;
///
/// assert_eq!(rational_catalan(5, 3).unwrap().as_integer(), Some(7));
/// let c = rational_catalan(9, 3).unwrap(); // 220/12 reduces to 55/3
/// assert_eq!((c.numerator, c.denominator, c.coprime), (55, 3, false));
/// ```
pub fn rational_catalan(a: u64, b: u64) -> Result<RationalCatalan, Error> {
    if a == 0 || b == 0 {
        return Err(Error::NonPositiveInput);
    }
    let (a, b) = (a as u128, b as u128);
    let sum = a.checked_add(b).ok_or(Error::Overflow)?;
    let binom = binomial(sum, a)?;
    let g = gcd(binom, sum);
    Ok(RationalCatalan {
        numerator: binom / g,
        denominator: sum / g,
        coprime: gcd(a, b) == 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coprime_values_are_integers() {
        let c = rational_catalan(5, 3).unwrap();
        assert_eq!(c.as_integer(), Some(7));
        assert!(c.coprime);

        let c = rational_catalan(1, 1).unwrap();
        assert_eq!(c.as_integer(), Some(1));
    }

    #[test]
    fn non_coprime_reports_reduced_fraction() {
        // binom(12, 9) / 12 = 220 / 12 = 55 / 3
        let c = rational_catalan(9, 3).unwrap();
        assert_eq!(c.as_integer(), None);
        assert_eq!((c.numerator, c.denominator), (55, 3));
        assert!(!c.coprime);
    }

    #[test]
    fn overflow_is_detected() {
        assert_eq!(rational_catalan(u64::MAX, u64::MAX - 1), Err(Error::Overflow));
    }

    #[test]
    fn zero_arguments_rejected() {
        assert!(rational_catalan(0, 3).is_err());
        assert!(rational_catalan(3, 0).is_err());
    }
}
