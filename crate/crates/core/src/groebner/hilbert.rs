//! Hilbert series of monomial ideals.

use serde::{Deserialize, Serialize};

use crate::algebra::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub projective_dimension: i64,
    pub degree: i64,
    /// Numerator `N(t)` of `HS(t) = N(t) / (1 - t)^n`, lowest degree first.
    pub hilbert_numerator: Vec<i64>,
}

type UPoly = Vec<i128>;

fn trim(mut p: UPoly) -> UPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn add_shifted(a: &UPoly, b: &UPoly, shift: usize) -> UPoly {
    let mut out = a.clone();
    if out.len() < b.len() + shift {
        out.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        out[j + shift] += y;
    }
    trim(out)
}

fn one_minus_t_pow(d: u32) -> UPoly {
    let mut p = vec![0i128; d as usize + 1];
    p[0] = 1;
    p[d as usize] -= 1;
    trim(p)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `S / ⟨gens⟩`.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i128> {
    numer(minimalize(gens.to_vec()))
}

fn numer(gens: Vec<Monomial>) -> UPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    if gens.iter().all(|m| m.pure_power_var().is_some()) {
        return gens
            .iter()
            .fold(vec![1], |acc, m| mul(&acc, &one_minus_t_pow(m.degree())));
    }
    let n = gens[0].nvars();
    let mut counts = vec![0usize; n];
    for g in gens.iter().filter(|m| m.pure_power_var().is_none()) {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let var = (0..n).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("nonempty");
    let mut exps: Vec<u32> = gens
        .iter()
        .filter(|m| m.pure_power_var().is_none() && m.exp(var) > 0)
        .map(|m| m.exp(var))
        .collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let mut pivot = Monomial::one(n);
    for _ in 0..e {
        pivot = pivot.mul(&Monomial::var(n, var));
    }
    let mut plus = gens.clone();
    plus.push(pivot);
    let quot: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut q = *m;
            for _ in 0..e.min(m.exp(var)) {
                q = q.divide_by_var(var);
            }
            q
        })
        .collect();
    let a = numer(minimalize(plus));
    let b = numer(minimalize(quot));
    add_shifted(&a, &b, e as usize)
}

/// Dimension and degree of the projective scheme cut out by an ideal with
/// the given initial monomials in `n` variables.
pub fn hilbert_data(lead_monomials: &[Monomial], n: usize) -> HilbertData {
    let num = if lead_monomials.is_empty() {
        vec![1]
    } else {
        hilbert_numerator(lead_monomials)
    };
    if num.is_empty() {
        return HilbertData {
            projective_dimension: -1,
            degree: 0,
            hilbert_numerator: Vec::new(),
        };
    }
    let mut q = num.clone();
    let mut k = 0usize;
    while q.iter().sum::<i128>() == 0 {
        // synthetic division by (1 - t)
        let mut out = vec![0i128; q.len() - 1];
        let mut acc = 0i128;
        for i in 0..q.len() - 1 {
            acc += q[i];
            out[i] = acc;
        }
        q = trim(out);
        k += 1;
    }
    HilbertData {
        projective_dimension: n as i64 - k as i64 - 1,
        degree: q.iter().sum::<i128>() as i64,
        hilbert_numerator: num.iter().map(|&c| c as i64).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn simple_cases() {
        let h = hilbert_data(&[m(&[1, 0, 0, 0])], 4);
        assert_eq!((h.projective_dimension, h.degree), (2, 1));
        let h = hilbert_data(&[], 3);
        assert_eq!((h.projective_dimension, h.degree), (2, 1));
        let h = hilbert_data(&[m(&[0, 0])], 2);
        assert_eq!((h.projective_dimension, h.degree), (-1, 0));
        let h = hilbert_data(&[m(&[1, 0, 0]), m(&[0, 1, 0]), m(&[0, 0, 1])], 3);
        assert_eq!((h.projective_dimension, h.degree), (-1, 1));
    }

    #[test]
    fn twisted_cubic_initial_ideal() {
        // grevlex initial ideal of the 2x2 minors: x1^2, x1x2, x2^2
        let h = hilbert_data(&[m(&[0, 2, 0, 0]), m(&[0, 1, 1, 0]), m(&[0, 0, 2, 0])], 4);
        assert_eq!((h.projective_dimension, h.degree), (1, 3));
    }

    #[test]
    fn complete_intersection_degree() {
        let h = hilbert_data(&[m(&[3, 0, 0]), m(&[0, 4, 0])], 3);
        assert_eq!((h.projective_dimension, h.degree), (0, 12));
        // both generators contain x1, so the plane x1 = 0 is a component
        let h = hilbert_data(&[m(&[2, 1, 0, 0]), m(&[0, 1, 3, 0])], 4);
        assert_eq!((h.projective_dimension, h.degree), (2, 1));
    }
}
