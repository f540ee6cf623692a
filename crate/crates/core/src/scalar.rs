//! Exact scalars over the rationals or a prime field GF(p).
//!
//! Rationals are arbitrary-precision and always kept in lowest terms;
//! residues always lie in `[0, p)`.  Every arithmetic operation is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Q,
    Gf(u64),
}

impl Field {
    pub fn is_prime_field(self) -> bool {
        matches!(self, Field::Gf(_))
    }

    /// Rejects non-prime moduli.
    pub fn validate(self) -> Result<Self> {
        match self {
            Field::Q => Ok(self),
            Field::Gf(p) => {
                if p >= 2 && is_prime(p) {
                    Ok(self)
                } else {
                    Err(Error::Parse(format!("GF({p}): modulus must be prime")))
                }
            }
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Q => write!(f, "Q"),
            Field::Gf(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Gf { p: u64, val: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Q,
            Scalar::Gf { p, .. } => Field::Gf(*p),
        }
    }

    pub fn zero(field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::zero()),
            Field::Gf(p) => Scalar::Gf { p, val: 0 },
        }
    }

    pub fn one(field: Field) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::one()),
            Field::Gf(p) => Scalar::Gf { p, val: 1 % p },
        }
    }

    pub fn from_int(field: Field, n: i64) -> Scalar {
        match field {
            Field::Q => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Gf(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Gf { p, val: r }
            }
        }
    }

    /// Rational `a/b` mapped into `field`; `b` must be invertible there.
    pub fn from_fraction(field: Field, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        let n = Scalar::from_int(field, num);
        let d = Scalar::from_int(field, den);
        let d_inv = d.inv()?;
        Ok(&n * &d_inv)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Gf { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Gf { p, val } => *val == 1 % p,
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Q(r) => {
                if r.is_zero() {
                    Err(Error::NotInvertible)
                } else {
                    Ok(Scalar::Q(r.recip()))
                }
            }
            Scalar::Gf { p, val } => {
                let v = mod_inverse(*val, *p).ok_or(Error::NotInvertible)?;
                Ok(Scalar::Gf { p: *p, val: v })
            }
        }
    }

    /// Parses `"a"` or `"a/b"` (decimal, optionally signed).
    pub fn parse(field: Field, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num_s
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?;
        let den: BigInt = match den_s {
            Some(d) => d
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        match field {
            Field::Q => Ok(Scalar::Q(BigRational::new(num, den))),
            Field::Gf(p) => {
                let pm = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let mut r = x % &pm;
                    if r.is_negative() {
                        r += &pm;
                    }
                    u64::try_from(r).expect("residue fits u64")
                };
                let n = Scalar::Gf { p, val: reduce(&num) };
                let d = Scalar::Gf { p, val: reduce(&den) };
                let d_inv = d.inv()?;
                Ok(&n * &d_inv)
            }
        }
    }

    fn check_same(&self, other: &Scalar) {
        assert_eq!(
            self.field(),
            other.field(),
            "scalar field mismatch (callers must validate fields)"
        );
    }
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    // extended Euclid on (a, p)
    if a % p == 0 {
        return None;
    }
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(p as i128) as u64)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Gf { p, val: a }, Scalar::Gf { val: b, .. }) => Scalar::Gf {
                p: *p,
                val: (a + b) % p,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Gf { p, val: a }, Scalar::Gf { val: b, .. }) => Scalar::Gf {
                p: *p,
                val: (a + p - b) % p,
            },
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.check_same(rhs);
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Gf { p, val: a }, Scalar::Gf { val: b, .. }) => Scalar::Gf {
                p: *p,
                val: (((*a as u128) * (*b as u128)) % (*p as u128)) as u64,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Gf { p, val } => Scalar::Gf {
                p: *p,
                val: (p - val) % p,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Gf { val, .. } => write!(f, "{val}"),
        }
    }
}
