//! Exact arithmetic helpers shared by the norm and bound code.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Ratio = BigRational;

pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Ratio {
    BigRational::new(num.into(), den.into())
}

pub fn int(v: impl Into<BigInt>) -> Ratio {
    BigRational::from_integer(v.into())
}

/// Binomial coefficient; zero when `k > n` or either argument is negative.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn binomial_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i as u128 + 1);
    }
    u64::try_from(acc).expect("binomial overflow")
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * i)
}

/// Renders a rational as `"p/q"`, always with an explicit denominator.
pub fn fmt_ratio(r: &Ratio) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_ratio(s: &str) -> Option<Ratio> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub mod serde_ratio {
    //! Serializes [`Ratio`](super::Ratio) values as `"p/q"` strings.
    use super::{fmt_ratio, parse_ratio, Ratio};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_ratio(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio, D::Error> {
        let s = String::deserialize(d)?;
        parse_ratio(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}")))
    }

    pub mod opt {
        use super::*;

        pub fn serialize<S: Serializer>(r: &Option<Ratio>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_str(&fmt_ratio(r)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Ratio>, D::Error> {
            let s = Option::<String>::deserialize(d)?;
            s.map(|s| parse_ratio(&s).ok_or_else(|| D::Error::custom(format!("bad rational {s:?}"))))
                .transpose()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial_u64(10, 3), 120);
    }

    #[test]
    fn ratio_strings() {
        assert_eq!(fmt_ratio(&ratio(4, 3)), "4/3");
        assert_eq!(fmt_ratio(&int(1)), "1/1");
        assert_eq!(parse_ratio("6/4"), Some(ratio(3, 2)));
        assert_eq!(parse_ratio("2"), Some(int(2)));
        assert_eq!(parse_ratio("1/0"), None);
    }
}
