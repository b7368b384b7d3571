//! Unboxed coefficient arithmetic for the inner loops.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::field::Scalar;

pub(crate) trait Arith: Clone + Send + Sync {
    type E: Clone + PartialEq + Debug + Send + Sync;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn from_scalar(&self, s: &Scalar) -> Self::E;
    fn to_scalar(&self, a: &Self::E) -> Scalar;
    fn from_i64(&self, v: i64) -> Self::E;
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct ModP {
    pub p: u64,
}

impl Arith for ModP {
    type E = u64;
    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        crate::algebra::field::pow_mod(*a, self.p - 2, self.p)
    }
    fn from_scalar(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Mod(x) => *x,
            Scalar::Rat(_) => panic!("rational scalar in a prime-field kernel"),
        }
    }
    fn to_scalar(&self, a: &u64) -> Scalar {
        Scalar::Mod(*a)
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct RatField;

impl Arith for RatField {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn from_scalar(&self, s: &Scalar) -> BigRational {
        match s {
            Scalar::Rat(q) => (**q).clone(),
            Scalar::Mod(_) => panic!("modular scalar in a rational kernel"),
        }
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Rat(Box::new(a.clone()))
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }
}

/// Run `$body` with `$a` bound to the unboxed arithmetic of `$field`.
macro_rules! with_arith {
    ($field:expr, $a:ident => $body:expr) => {
        match $field.kind {
            $crate::algebra::field::FieldKind::PrimeField { prime } => {
                let $a = $crate::groebner::arith::ModP { p: prime };
                $body
            }
            $crate::algebra::field::FieldKind::Rationals => {
                let $a = $crate::groebner::arith::RatField;
                $body
            }
        }
    };
}
pub(crate) use with_arith;
