use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Largest variable registry a ring may carry.
pub const MAX_VARS: usize = 40;

/// Exponent vector over a ring of at most [`MAX_VARS`] variables. Entries
/// beyond the ring size are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    nvars: u8,
    deg: u16,
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
            deg: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    /// Panics if an exponent exceeds 255.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut m = Monomial::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u8::try_from(e).expect("exponent exceeds 255");
            m.deg += e as u16;
        }
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn exponents(&self) -> &[u8] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..self.nvars as usize {
            r.exps[i] = self.exps[i].saturating_add(other.exps[i]);
        }
        r.deg = self.deg + other.deg;
        r
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut r = *other;
        for i in 0..self.nvars as usize {
            r.exps[i] -= self.exps[i];
        }
        r.deg = other.deg - self.deg;
        Some(r)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        let mut deg = 0u16;
        for i in 0..self.nvars as usize {
            r.exps[i] = self.exps[i].max(other.exps[i]);
            deg += r.exps[i] as u16;
        }
        r.deg = deg;
        r
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        let mut deg = 0u16;
        for i in 0..self.nvars as usize {
            r.exps[i] = self.exps[i].min(other.exps[i]);
            deg += r.exps[i] as u16;
        }
        r.deg = deg;
        r
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit signature used to reject non-divisibility quickly.
    #[inline]
    pub fn divmask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps[..self.nvars as usize].iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    /// Index of the single variable when this monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exponents().iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Remove exponent of variable `i` (set to zero).
    pub fn without_var(&self, i: usize) -> Monomial {
        let mut r = *self;
        r.deg -= r.exps[i] as u16;
        r.exps[i] = 0;
        r
    }

    /// Decrease exponent of variable `i` by one if positive.
    pub fn divide_by_var(&self, i: usize) -> Monomial {
        let mut r = *self;
        if r.exps[i] > 0 {
            r.exps[i] -= 1;
            r.deg -= 1;
        }
        r
    }

    /// Re-index into a ring of `nvars` variables via `map[old] = new`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut r = Monomial::one(nvars);
        for (i, &e) in self.exponents().iter().enumerate() {
            if e > 0 {
                r.exps[map[i]] += e;
            }
        }
        r.deg = self.deg;
        r
    }
}

/// A monomial order. `Block(k)` compares the first `k` variables by
/// graded reverse lexicographic order and breaks ties with grevlex on the
/// remaining ones; it is an elimination order for the first block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
    Block(usize),
}

fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    let da: u32 = a.exps[lo..hi].iter().map(|&e| e as u32).sum();
    let db: u32 = b.exps[lo..hi].iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (lo..hi).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for i in (0..a.nvars as usize).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(k) => {
                let n = a.nvars as usize;
                let k = k.min(n);
                match grevlex_range(a, b, 0, k) {
                    Ordering::Equal => grevlex_range(a, b, k, n),
                    o => o,
                }
            }
        }
    }
}
