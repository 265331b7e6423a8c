use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Default prime used for generic (randomized) constructions.
pub const DEFAULT_PRIME: u64 = 32003;

/// Coefficient field: the rationals (characteristic 0) or a prime field `F_p` with `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
}

/// A field element. Prime-field residues are kept reduced in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Fp(u64),
    Q(Box<BigRational>),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { p: DEFAULT_PRIME }
    }
}

impl FieldSpec {
    /// `0` selects the rationals, otherwise a prime below `2^31` is required.
    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            return Ok(FieldSpec { p: 0 });
        }
        if characteristic >= 1 << 31 {
            return Err(Error::InvalidInput(format!(
                "characteristic {characteristic} exceeds 2^31"
            )));
        }
        if !is_prime(characteristic) {
            return Err(Error::InvalidInput(format!(
                "characteristic {characteristic} is not prime"
            )));
        }
        Ok(FieldSpec { p: characteristic })
    }

    pub fn rationals() -> Self {
        FieldSpec { p: 0 }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn is_rational(&self) -> bool {
        self.p == 0
    }

    pub fn zero(&self) -> Coeff {
        if self.p == 0 {
            Coeff::Q(Box::new(BigRational::zero()))
        } else {
            Coeff::Fp(0)
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        if self.p == 0 {
            Coeff::Q(Box::new(BigRational::from_integer(BigInt::from(v))))
        } else {
            Coeff::Fp(v.rem_euclid(self.p as i64) as u64)
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        if self.p == 0 {
            Coeff::Q(Box::new(BigRational::from_integer(v.clone())))
        } else {
            let r = v % BigInt::from(self.p);
            let r = if r.is_negative() { r + BigInt::from(self.p) } else { r };
            Coeff::Fp(r.to_u64().expect("residue fits in u64"))
        }
    }

    /// `num / den`; fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        let d = self.from_bigint(den);
        if self.is_zero(&d) {
            return Err(Error::InvalidInput("denominator vanishes in the field".into()));
        }
        Ok(self.div(&self.from_bigint(num), &d))
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(v) => *v == 0,
            Coeff::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Fp(v) => *v == 1,
            Coeff::Q(q) => q.is_one(),
        }
    }

    #[inline]
    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Fp(x), Coeff::Fp(y)) => {
                let s = x + y;
                Coeff::Fp(if s >= self.p { s - self.p } else { s })
            }
            (Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(Box::new(&**x + &**y)),
            _ => unreachable!("mixed coefficient kinds"),
        }
    }

    #[inline]
    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(if x >= y { x - y } else { x + self.p - y }),
            (Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(Box::new(&**x - &**y)),
            _ => unreachable!("mixed coefficient kinds"),
        }
    }

    #[inline]
    pub fn neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Fp(x) => Coeff::Fp(if *x == 0 { 0 } else { self.p - x }),
            Coeff::Q(x) => Coeff::Q(Box::new(-&**x)),
        }
    }

    #[inline]
    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(x * y % self.p),
            (Coeff::Q(x), Coeff::Q(y)) => Coeff::Q(Box::new(&**x * &**y)),
            _ => unreachable!("mixed coefficient kinds"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Fp(x) => {
                assert!(*x != 0, "inverse of zero");
                Coeff::Fp(pow_mod(*x, self.p - 2, self.p))
            }
            Coeff::Q(x) => {
                assert!(!x.is_zero(), "inverse of zero");
                Coeff::Q(Box::new(x.recip()))
            }
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Coeff, mut e: u64) -> Coeff {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// A uniformly random element; for the rationals, a small integer.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Coeff {
        if self.p == 0 {
            self.from_i64(rng.gen_range(-1000..=1000))
        } else {
            Coeff::Fp(rng.gen_range(0..self.p))
        }
    }

    /// A random element that is nonzero.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Coeff {
        loop {
            let c = self.random(rng);
            if !self.is_zero(&c) {
                return c;
            }
        }
    }

    /// Signed representative used for printing: residues above `p/2` print as negatives.
    pub fn signed_repr(&self, a: &Coeff) -> CoeffRepr {
        match a {
            Coeff::Fp(x) => {
                if *x > self.p / 2 {
                    CoeffRepr { negative: true, num: (self.p - x).to_string(), den: None }
                } else {
                    CoeffRepr { negative: false, num: x.to_string(), den: None }
                }
            }
            Coeff::Q(q) => {
                let den = if q.denom().is_one() { None } else { Some(q.denom().to_string()) };
                CoeffRepr { negative: q.is_negative(), num: q.numer().abs().to_string(), den }
            }
        }
    }

    pub fn format(&self, a: &Coeff) -> String {
        let r = self.signed_repr(a);
        let mut s = String::new();
        if r.negative {
            s.push('-');
        }
        s.push_str(&r.num);
        if let Some(d) = r.den {
            s.push('/');
            s.push_str(&d);
        }
        s
    }
}

/// Sign, absolute numerator and optional denominator of a coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffRepr {
    pub negative: bool,
    pub num: String,
    pub den: Option<String>,
}

impl CoeffRepr {
    pub fn is_one(&self) -> bool {
        self.num == "1" && self.den.is_none()
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "QQ")
        } else {
            write!(f, "F_{}", self.p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_and_large() {
        assert!(FieldSpec::new(32003).is_ok());
        assert!(FieldSpec::new(32004).is_err());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new((1 << 31) + 11).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::new(5).unwrap();
        let a = f.from_i64(2);
        let b = f.from_i64(3);
        assert_eq!(f.mul(&a, &b), f.one());
        assert_eq!(f.add(&a, &b), f.zero());
        assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
        assert_eq!(f.format(&f.from_i64(-1)), "-1");
    }

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::rationals();
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(f.add(&half, &half), f.one());
        assert_eq!(f.format(&f.neg(&half)), "-1/2");
    }
}
