//! Coefficient fields: arbitrary-precision rationals and prime fields `Z/p`
//! with `p < 2^32`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default working prime.
pub const DEFAULT_PRIME: u64 = 2_147_483_629;
/// Prime used for the `--verify` re-run.
pub const VERIFY_PRIME: u64 = 2_147_483_563;
/// Default PRNG seed.
pub const DEFAULT_SEED: u64 = 42;

const MIN_WORKING_PRIME: u64 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldKind {
    Rationals,
    PrimeField { prime: u64 },
}

/// Field descriptor plus the seed every randomized choice derives from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldConfig {
    pub kind: FieldKind,
    pub seed: u64,
}

/// An exact field element. Residues are kept in `[0, p)`, rationals in
/// lowest terms with positive denominator, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod(u64),
    Rat(Box<BigRational>),
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig {
            kind: FieldKind::PrimeField {
                prime: DEFAULT_PRIME,
            },
            seed: DEFAULT_SEED,
        }
    }
}

impl FieldConfig {
    /// Prime field for geometric work; `prime` must be an odd prime in
    /// `(2^20, 2^32)`.
    pub fn prime_field(prime: u64, seed: u64) -> Result<Self> {
        if prime <= MIN_WORKING_PRIME || prime >= (1 << 32) {
            return Err(Error::InvalidField(format!(
                "working prime must lie in (2^20, 2^32), got {prime}"
            )));
        }
        if !is_prime(prime) {
            return Err(Error::InvalidField(format!("{prime} is not prime")));
        }
        Ok(FieldConfig {
            kind: FieldKind::PrimeField { prime },
            seed,
        })
    }

    /// Any odd prime below `2^32`. Only for plain arithmetic: the generic-point
    /// arguments used by the geometric layer need a large field.
    pub fn small_prime(prime: u64) -> Result<Self> {
        if !(3..(1 << 32)).contains(&prime) || !is_prime(prime) {
            return Err(Error::InvalidField(format!("{prime} is not an odd prime below 2^32")));
        }
        Ok(FieldConfig {
            kind: FieldKind::PrimeField { prime },
            seed: DEFAULT_SEED,
        })
    }

    pub fn rationals(seed: u64) -> Self {
        FieldConfig {
            kind: FieldKind::Rationals,
            seed,
        }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        FieldConfig { seed, ..self }
    }

    pub fn prime(&self) -> Option<u64> {
        match self.kind {
            FieldKind::PrimeField { prime } => Some(prime),
            FieldKind::Rationals => None,
        }
    }

    /// True when the field is large enough for probabilistic genericity.
    pub fn is_working_field(&self) -> bool {
        match self.kind {
            FieldKind::Rationals => true,
            FieldKind::PrimeField { prime } => prime > MIN_WORKING_PRIME,
        }
    }

    /// Same field, ignoring the seed.
    pub fn same_field(&self, other: &FieldConfig) -> bool {
        self.kind == other.kind
    }

    pub fn zero(&self) -> Scalar {
        match self.kind {
            FieldKind::PrimeField { .. } => Scalar::Mod(0),
            FieldKind::Rationals => Scalar::Rat(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.kind {
            FieldKind::PrimeField { prime } => Scalar::Mod(v.rem_euclid(prime as i64) as u64),
            FieldKind::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(v.into()))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self.kind {
            FieldKind::PrimeField { prime } => {
                let r = v.mod_floor(&BigInt::from(prime));
                Scalar::Mod(r.to_u64().expect("residue fits in u64"))
            }
            FieldKind::Rationals => Scalar::Rat(Box::new(BigRational::from_integer(v.clone()))),
        }
    }

    /// `num / den`, failing when the denominator vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        let inv = self
            .inv(&d)
            .ok_or_else(|| Error::Syntax(format!("denominator {den} vanishes in the field")))?;
        Ok(self.mul(&self.from_bigint(num), &inv))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(x) => *x == 0,
            Scalar::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(x) => *x == 1,
            Scalar::Rat(q) => q.is_one(),
        }
    }

    #[inline]
    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b, self.kind) {
            (Scalar::Mod(x), Scalar::Mod(y), FieldKind::PrimeField { prime }) => {
                let s = x + y;
                Scalar::Mod(if s >= prime { s - prime } else { s })
            }
            (Scalar::Rat(x), Scalar::Rat(y), _) => Scalar::Rat(Box::new(&**x + &**y)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    #[inline]
    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b, self.kind) {
            (Scalar::Mod(x), Scalar::Mod(y), FieldKind::PrimeField { prime }) => {
                Scalar::Mod(if x >= y { x - y } else { x + prime - y })
            }
            (Scalar::Rat(x), Scalar::Rat(y), _) => Scalar::Rat(Box::new(&**x - &**y)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    #[inline]
    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b, self.kind) {
            (Scalar::Mod(x), Scalar::Mod(y), FieldKind::PrimeField { prime }) => {
                Scalar::Mod(x * y % prime)
            }
            (Scalar::Rat(x), Scalar::Rat(y), _) => Scalar::Rat(Box::new(&**x * &**y)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (a, self.kind) {
            (Scalar::Mod(x), FieldKind::PrimeField { prime }) => {
                Scalar::Mod(if *x == 0 { 0 } else { prime - x })
            }
            (Scalar::Rat(x), _) => Scalar::Rat(Box::new(-&**x)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (a, self.kind) {
            (Scalar::Mod(x), FieldKind::PrimeField { prime }) => {
                Some(Scalar::Mod(pow_mod(*x, prime - 2, prime)))
            }
            (Scalar::Rat(x), _) => Some(Scalar::Rat(Box::new(x.recip()))),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
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

    /// Uniform element of `F_p`, or a small random integer over `Q`.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self.kind {
            FieldKind::PrimeField { prime } => Scalar::Mod(rng.gen_range(0..prime)),
            FieldKind::Rationals => self.from_i64(rng.gen_range(-1000..=1000)),
        }
    }

    /// A random element that is nonzero.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !self.is_zero(&s) {
                return s;
            }
        }
    }

    /// Signed representative: residues map to `(-p/2, p/2]`; rationals must
    /// be integral and fit.
    pub fn to_i64(&self, a: &Scalar) -> Option<i64> {
        match (a, self.kind) {
            (Scalar::Mod(x), FieldKind::PrimeField { prime }) => {
                if *x > prime / 2 {
                    Some(-((prime - x) as i64))
                } else {
                    Some(*x as i64)
                }
            }
            (Scalar::Rat(q), _) if q.is_integer() => q.to_integer().to_i64(),
            _ => None,
        }
    }

    /// Reduce a rational value into this field.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        self.from_ratio(q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(x) => write!(f, "{x}"),
            Scalar::Rat(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

impl Scalar {
    /// Whether the printed form needs a leading minus sign.
    pub(crate) fn is_negative_rat(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_negative())
    }
}

pub(crate) fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut base = (b % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
