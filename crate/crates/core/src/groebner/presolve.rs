//! Substitute away generators that are linear in an eliminable variable.

use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Polynomial;

pub(crate) struct Presolved {
    pub gens: Vec<Polynomial>,
    /// `(var, value)`; every value is written in the unsubstituted variables.
    pub subs: Vec<(usize, Polynomial)>,
}

/// If `g = c·x_v + r` with `c` constant and `x_v` absent from `r`, return `-r/c`.
fn solve_for(g: &Polynomial, v: usize) -> Option<Polynomial> {
    let n = g.ring().nvars();
    let xv = Monomial::var(n, v);
    let mut c = None;
    for (m, coef) in g.terms() {
        if m.exp(v) == 0 {
            continue;
        }
        if *m == xv {
            c = Some(coef.clone());
        } else {
            return None;
        }
    }
    let c = c?;
    let f = g.field();
    let inv = f.neg(&f.inv(&c)?);
    let rest = g.sub(&Polynomial::monomial(g.ring(), xv, c));
    Some(rest.scale(&inv))
}

pub(crate) fn substitute_linear(gens: &[Polynomial], eliminable: &[usize]) -> Presolved {
    let mut gens: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let mut subs: Vec<(usize, Polynomial)> = Vec::new();
    loop {
        let mut best: Option<(usize, usize, Polynomial)> = None;
        for (gi, g) in gens.iter().enumerate() {
            for &v in eliminable {
                if g.degree_in(v) != 1 {
                    continue;
                }
                if let Some(val) = solve_for(g, v) {
                    let better = match &best {
                        None => true,
                        Some((_, _, b)) => val.nterms() < b.nterms(),
                    };
                    if better {
                        best = Some((gi, v, val));
                    }
                }
            }
        }
        let Some((gi, v, val)) = best else { break };
        gens.remove(gi);
        let ring = val.ring().clone();
        let images: Vec<Polynomial> = (0..ring.nvars())
            .map(|i| if i == v { val.clone() } else { Polynomial::var(&ring, i) })
            .collect();
        gens = gens
            .into_iter()
            .map(|g| if g.degree_in(v) > 0 { g.substitute(&images) } else { g })
            .filter(|g| !g.is_zero())
            .collect();
        for (_, s) in subs.iter_mut() {
            if s.degree_in(v) > 0 {
                *s = s.substitute(&images);
            }
        }
        subs.push((v, val));
    }
    Presolved { gens, subs }
}

impl Presolved {
    /// Apply the substitutions to `f`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let ring = f.ring().clone();
        let mut out = f.clone();
        for (v, val) in self.subs.iter().rev() {
            if out.degree_in(*v) == 0 {
                continue;
            }
            let images: Vec<Polynomial> = (0..ring.nvars())
                .map(|i| if i == *v { val.clone() } else { Polynomial::var(&ring, i) })
                .collect();
            out = out.substitute(&images);
        }
        out
    }
}
