//! Dense univariate polynomials (coefficients lowest degree first).

use rand::Rng;

use crate::groebner::arith::{Arith, ModP};

pub(crate) fn trim<A: Arith>(a: &A, mut p: Vec<A::E>) -> Vec<A::E> {
    while p.last().is_some_and(|c| a.is_zero(c)) {
        p.pop();
    }
    p
}

pub(crate) fn degree<E>(p: &[E]) -> i64 {
    p.len() as i64 - 1
}

pub(crate) fn derivative<A: Arith>(a: &A, p: &[A::E]) -> Vec<A::E> {
    let out = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| a.mul(c, &a.from_i64(i as i64)))
        .collect();
    trim(a, out)
}

pub(crate) fn mul<A: Arith>(a: &A, x: &[A::E], y: &[A::E]) -> Vec<A::E> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![a.zero(); x.len() + y.len() - 1];
    for (i, u) in x.iter().enumerate() {
        if a.is_zero(u) {
            continue;
        }
        for (j, v) in y.iter().enumerate() {
            out[i + j] = a.add(&out[i + j], &a.mul(u, v));
        }
    }
    trim(a, out)
}

/// `x mod y` (y nonzero).
pub(crate) fn rem<A: Arith>(a: &A, x: &[A::E], y: &[A::E]) -> Vec<A::E> {
    let mut r = trim(a, x.to_vec());
    let dy = y.len();
    let inv = a.inv(y.last().expect("nonzero divisor"));
    while r.len() >= dy {
        let shift = r.len() - dy;
        let c = a.mul(r.last().unwrap(), &inv);
        for (j, v) in y.iter().enumerate() {
            r[shift + j] = a.sub(&r[shift + j], &a.mul(&c, v));
        }
        r.pop();
        r = trim(a, r);
    }
    r
}

/// Exact quotient `x / y`.
pub(crate) fn div_exact<A: Arith>(a: &A, x: &[A::E], y: &[A::E]) -> Vec<A::E> {
    let mut r = trim(a, x.to_vec());
    let dy = y.len();
    if r.len() < dy {
        return Vec::new();
    }
    let mut q = vec![a.zero(); r.len() - dy + 1];
    let inv = a.inv(y.last().expect("nonzero divisor"));
    while r.len() >= dy {
        let shift = r.len() - dy;
        let c = a.mul(r.last().unwrap(), &inv);
        for (j, v) in y.iter().enumerate() {
            r[shift + j] = a.sub(&r[shift + j], &a.mul(&c, v));
        }
        q[shift] = c;
        r.pop();
        r = trim(a, r);
    }
    trim(a, q)
}

pub(crate) fn monic<A: Arith>(a: &A, p: Vec<A::E>) -> Vec<A::E> {
    match p.last() {
        None => p,
        Some(l) => {
            let inv = a.inv(l);
            p.iter().map(|c| a.mul(c, &inv)).collect()
        }
    }
}

pub(crate) fn gcd<A: Arith>(a: &A, x: &[A::E], y: &[A::E]) -> Vec<A::E> {
    let mut u = trim(a, x.to_vec());
    let mut v = trim(a, y.to_vec());
    while !v.is_empty() {
        let r = rem(a, &u, &v);
        u = v;
        v = r;
    }
    monic(a, u)
}

/// Degree of the squarefree part `p / gcd(p, p')`, i.e. the number of
/// distinct roots over the algebraic closure (characteristic zero or large).
pub(crate) fn squarefree_degree<A: Arith>(a: &A, p: &[A::E]) -> i64 {
    let g = gcd(a, p, &derivative(a, p));
    degree(p) - degree(&g)
}

fn mulmod(a: &ModP, x: &[u64], y: &[u64], m: &[u64]) -> Vec<u64> {
    rem(a, &mul(a, x, y), m)
}

fn powmod(a: &ModP, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(a, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(a, &acc, &b, m);
        }
        b = mulmod(a, &b, &b, m);
        e >>= 1;
    }
    acc
}

/// Distinct roots in `F_p`, sorted ascending.
pub(crate) fn roots_mod_p<R: Rng + ?Sized>(a: &ModP, f: &[u64], rng: &mut R) -> Vec<u64> {
    let f = monic(a, trim(a, f.to_vec()));
    if f.len() <= 1 {
        return Vec::new();
    }
    // g = gcd(f, x^p - x) is the product of the distinct linear factors
    let xp = powmod(a, &[0, 1], a.p, &f);
    let mut xp_minus_x = xp;
    if xp_minus_x.len() < 2 {
        xp_minus_x.resize(2, 0);
    }
    xp_minus_x[1] = a.sub(&xp_minus_x[1], &1);
    let g = gcd(a, &f, &trim(a, xp_minus_x));
    let mut out = Vec::new();
    split(a, g, rng, &mut out);
    out.sort_unstable();
    out
}

fn split<R: Rng + ?Sized>(a: &ModP, g: Vec<u64>, rng: &mut R, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(a.neg(&a.mul(&g[0], &a.inv(&g[1])))),
        _ => loop {
            let shift = rng.gen_range(0..a.p);
            let h = powmod(a, &[shift, 1], (a.p - 1) / 2, &g);
            let mut h1 = h;
            if h1.is_empty() {
                h1.push(0);
            }
            h1[0] = a.sub(&h1[0], &1);
            let d = gcd(a, &g, &trim(a, h1));
            if d.len() > 1 && d.len() < g.len() {
                let rest = monic(a, div_exact(a, &g, &d));
                split(a, d, rng, out);
                split(a, rest, rng, out);
                return;
            }
        },
    }
}
