//! Exact arithmetic primitives: factorials of every flavour and a scalar
//! type that tracks powers of √π through Gamma-function products.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 2..=n {
        acc *= t;
    }
    acc
}

/// `n!! = n(n-2)(n-4)⋯` down to 1 or 2, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::Unsupported(format!(
            "double factorial of {n} has no empty-product reading"
        )));
    }
    let mut acc = BigInt::one();
    let mut t = n;
    while t >= 2 {
        acc *= t;
        t -= 2;
    }
    Ok(acc)
}

/// The superfactorial `F(k) = 1!·2!·…·(k-1)!`, with `F(0) = F(1) = 1`.
pub fn superfactorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for t in 1..k {
        fact *= t;
        acc *= &fact;
    }
    acc
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc
}

/// Converts an exactly-integral rational, failing loudly on a remainder.
pub fn rational_to_integer(value: BigRational, what: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral(format!(
            "{what} evaluated to the non-integer {value}"
        )))
    }
}

/// An exact scalar of the form `coeff · π^(half_pi_power / 2)`.
///
/// Multiplication adds the half-power exponents, so products of
/// half-integer Gamma values stay exact; a value is plain rational exactly
/// when the exponent has cancelled to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiHalfScalar {
    coeff: BigRational,
    half_pi_power: i64,
}

impl PiHalfScalar {
    pub fn one() -> PiHalfScalar {
        PiHalfScalar {
            coeff: BigRational::one(),
            half_pi_power: 0,
        }
    }

    pub fn from_rational(coeff: BigRational) -> PiHalfScalar {
        PiHalfScalar {
            coeff,
            half_pi_power: 0,
        }
    }

    /// `Γ(q)` for positive `q` with denominator 1 or 2.
    ///
    /// Integer arguments give `Γ(n) = (n-1)!`; half-integer arguments give
    /// `Γ(t + 1/2) = (2t-1)!!/2^t · √π`.
    pub fn gamma(q: &BigRational) -> Result<PiHalfScalar> {
        if !q.is_positive() {
            return Err(Error::Unsupported(format!(
                "Gamma argument {q} is not positive"
            )));
        }
        if q.is_integer() {
            let n = q.to_integer().to_u64().ok_or_else(|| {
                Error::BudgetExceeded(format!("Gamma argument {q} too large"))
            })?;
            return Ok(PiHalfScalar::from_rational(factorial(n - 1).into()));
        }
        if *q.denom() == BigInt::from(2) {
            // q = t + 1/2 with t >= 0.
            let t = (q - BigRational::new(BigInt::one(), BigInt::from(2)))
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::BudgetExceeded(format!("Gamma argument {q} too large")))?;
            let coeff = BigRational::new(
                double_factorial(2 * t - 1)?,
                BigInt::from(2).pow(t as u32),
            );
            return Ok(PiHalfScalar {
                coeff,
                half_pi_power: 1,
            });
        }
        Err(Error::Unsupported(format!(
            "Gamma argument {q} has denominator above 2"
        )))
    }

    pub fn mul(&self, other: &PiHalfScalar) -> PiHalfScalar {
        PiHalfScalar {
            coeff: &self.coeff * &other.coeff,
            half_pi_power: self.half_pi_power + other.half_pi_power,
        }
    }

    pub fn div(&self, other: &PiHalfScalar) -> PiHalfScalar {
        PiHalfScalar {
            coeff: &self.coeff / &other.coeff,
            half_pi_power: self.half_pi_power - other.half_pi_power,
        }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    /// Exponent `k` in `π^(k/2)`.
    pub fn half_pi_power(&self) -> i64 {
        self.half_pi_power
    }

    pub fn is_rational(&self) -> bool {
        self.half_pi_power == 0 || self.coeff.is_zero()
    }

    /// The rational value, failing when a power of √π remains.
    pub fn into_rational(self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.coeff)
        } else {
            Err(Error::NonIntegral(format!(
                "value {} carries π^({}/2)",
                self.coeff, self.half_pi_power
            )))
        }
    }
}

impl std::fmt::Display for PiHalfScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.coeff)
        } else if self.half_pi_power % 2 == 0 {
            write!(f, "{} * pi^{}", self.coeff, self.half_pi_power / 2)
        } else {
            write!(f, "{} * pi^({}/2)", self.coeff, self.half_pi_power)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        // 20! is the last factorial fitting in u64; the exact type keeps going.
        assert_eq!(factorial(21).to_string(), "51090942171709440000");
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(-1).unwrap(), BigInt::one());
        assert_eq!(double_factorial(0).unwrap(), BigInt::one());
        assert_eq!(double_factorial(5).unwrap(), BigInt::from(15));
        assert_eq!(double_factorial(6).unwrap(), BigInt::from(48));
        assert!(double_factorial(-3).is_err());
    }

    #[test]
    fn superfactorial_values() {
        assert_eq!(superfactorial(0), BigInt::one());
        assert_eq!(superfactorial(1), BigInt::one());
        assert_eq!(superfactorial(3), BigInt::from(2));
        assert_eq!(superfactorial(4), BigInt::from(12));
        assert_eq!(superfactorial(5), BigInt::from(288));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(6, 7), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn gamma_integers_and_half_integers() {
        assert_eq!(
            PiHalfScalar::gamma(&rat(4, 1)).unwrap(),
            PiHalfScalar::from_rational(rat(6, 1))
        );
        // Γ(1/2) = √π.
        let g = PiHalfScalar::gamma(&rat(1, 2)).unwrap();
        assert_eq!(g.coeff(), &rat(1, 1));
        assert_eq!(g.half_pi_power(), 1);
        // Γ(5/2) = 3/4 √π.
        let g = PiHalfScalar::gamma(&rat(5, 2)).unwrap();
        assert_eq!(g.coeff(), &rat(3, 4));
        assert_eq!(g.half_pi_power(), 1);
        assert!(PiHalfScalar::gamma(&rat(-1, 2)).is_err());
        assert!(PiHalfScalar::gamma(&rat(1, 3)).is_err());
    }

    #[test]
    fn pi_powers_track_and_cancel() {
        let g = PiHalfScalar::gamma(&rat(1, 2)).unwrap();
        let product = g.mul(&g);
        assert_eq!(product.half_pi_power(), 2);
        assert!(product.into_rational().is_err());
        let ratio = g.div(&g);
        assert!(ratio.is_rational());
        assert_eq!(ratio.into_rational().unwrap(), rat(1, 1));
        // Γ(1/2)Γ(3/2)/Γ(2) · Γ(2)/(Γ(1/2)Γ(3/2)) round trip through mixed ops.
        let reflect = PiHalfScalar::gamma(&rat(3, 2)).unwrap();
        let combined = g.mul(&reflect);
        assert_eq!(combined.half_pi_power(), 2);
        assert_eq!(combined.coeff(), &rat(1, 2));
    }

    #[test]
    fn integrality_assertions() {
        assert_eq!(rational_to_integer(rat(8, 2), "test").unwrap(), BigInt::from(4));
        assert!(rational_to_integer(rat(7, 2), "test").is_err());
    }
}
