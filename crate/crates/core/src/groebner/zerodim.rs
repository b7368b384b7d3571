//! Counting and solving zero-dimensional systems.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::field::{FieldKind, Scalar};
use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::poly::{Polynomial, Ring, RingRef};
use crate::error::{Error, Result};
use crate::groebner::arith::{with_arith, Arith, ModP};
use crate::groebner::engine::{Engine, Terms};
use crate::groebner::presolve::{substitute_linear, Presolved};
use crate::groebner::univariate;
use crate::groebner::{to_terms, Ideal};

const MAX_STANDARD_MONOMIALS: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroDimCount {
    /// Dimension of the quotient ring: solutions with multiplicity.
    pub total: u64,
    /// Distinct values of the distinguished element over all solutions.
    pub distinct: u64,
}

struct Reduced {
    ring: RingRef,
    gens: Vec<Polynomial>,
    pre: Presolved,
    /// Index in the original ring of each reduced-ring variable.
    back: Vec<usize>,
}

/// Presolve and move to a ring on the variables that remain.
fn reduce_system(ideal: &Ideal) -> Result<Reduced> {
    let ring = ideal.ring();
    let all: Vec<usize> = (0..ring.nvars()).collect();
    let pre = substitute_linear(ideal.gens(), &all);
    let substituted: Vec<usize> = pre.subs.iter().map(|(v, _)| *v).collect();
    let back: Vec<usize> = all.into_iter().filter(|v| !substituted.contains(v)).collect();
    let names: Vec<String> = back.iter().map(|&i| ring.vars()[i].clone()).collect();
    let small = Ring::new(&names, *ring.field(), MonomialOrder::GrevLex)?;
    let gens = pre
        .gens
        .iter()
        .map(|g| g.to_ring(&small))
        .collect::<Result<Vec<_>>>()?;
    Ok(Reduced {
        ring: small,
        gens,
        pre,
        back,
    })
}

fn standard_monomials(lms: &[Monomial], nvars: usize) -> Result<Vec<Monomial>> {
    for v in 0..nvars {
        if !lms.iter().any(|m| m.pure_power_var() == Some(v)) {
            return Err(Error::NotZeroDimensional);
        }
    }
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue: VecDeque<Monomial> = VecDeque::new();
    let one = Monomial::one(nvars);
    seen.insert(one);
    queue.push_back(one);
    let mut out = Vec::new();
    while let Some(m) = queue.pop_front() {
        out.push(m);
        if out.len() > MAX_STANDARD_MONOMIALS {
            return Err(Error::NotFinite);
        }
        for v in 0..nvars {
            let next = m.mul(&Monomial::var(nvars, v));
            if seen.contains(&next) || lms.iter().any(|l| l.divides(&next)) {
                continue;
            }
            seen.insert(next);
            queue.push_back(next);
        }
    }
    Ok(out)
}

/// `total` is the dimension of `k[x]/I`; `distinct` is the number of
/// distinct values taken by `distinguished` on `V(I)`, computed as the
/// degree of the squarefree part of its minimal polynomial on `k[x]/I`.
pub fn count_zero_dim(ideal: &Ideal, distinguished: &Polynomial) -> Result<ZeroDimCount> {
    let red = reduce_system(ideal)?;
    let g = red.pre.apply(&distinguished.to_ring(ideal.ring())?);
    let g = g.to_ring(&red.ring).map_err(|_| Error::NotZeroDimensional)?;
    let field = *ideal.ring().field();
    let order = MonomialOrder::GrevLex;
    with_arith!(field, a => {
        let eng = Engine::new(a, order, ideal.degree_cap());
        let input: Vec<Terms<_>> = red.gens.iter().map(|p| to_terms(&eng.a, p, order)).collect();
        let gb = eng.buchberger(input)?;
        if gb.len() == 1 && gb[0][0].0.is_one() {
            return Ok(ZeroDimCount { total: 0, distinct: 0 });
        }
        let n = red.ring.nvars();
        if n == 0 {
            return Ok(ZeroDimCount { total: 1, distinct: 1 });
        }
        let lms: Vec<Monomial> = gb.iter().map(|t| t[0].0).collect();
        let basis = standard_monomials(&lms, n)?;
        let total = basis.len();
        let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let gt = to_terms(&eng.a, &g, order);
        let minpoly = minimal_polynomial(&eng, &gb, &gt, &index, total);
        let distinct = univariate::squarefree_degree(&eng.a, &minpoly);
        if distinct < 0 {
            return Err(Error::EliminantDegenerate);
        }
        Ok(ZeroDimCount { total: total as u64, distinct: distinct as u64 })
    })
}

fn dense<A: Arith>(a: &A, t: &Terms<A::E>, index: &HashMap<Monomial, usize>, n: usize) -> Vec<A::E> {
    let mut v = vec![a.zero(); n];
    for (m, c) in t {
        v[index[m]] = c.clone();
    }
    v
}

fn mul_terms<A: Arith>(eng: &Engine<A>, x: &Terms<A::E>, y: &Terms<A::E>) -> Terms<A::E> {
    let a = &eng.a;
    let mut acc: HashMap<Monomial, A::E> = HashMap::new();
    for (mx, cx) in x {
        for (my, cy) in y {
            let m = mx.mul(my);
            let c = a.mul(cx, cy);
            let e = acc.entry(m).or_insert_with(|| a.zero());
            *e = a.add(e, &c);
        }
    }
    let mut t: Terms<A::E> = acc.into_iter().filter(|(_, c)| !a.is_zero(c)).collect();
    eng.sort(&mut t);
    t
}

/// Minimal polynomial (low degree first) of multiplication by `g`.
fn minimal_polynomial<A: Arith>(
    eng: &Engine<A>,
    gb: &[Terms<A::E>],
    g: &Terms<A::E>,
    index: &HashMap<Monomial, usize>,
    n: usize,
) -> Vec<A::E> {
    let a = &eng.a;
    let one_nv = index.keys().next().map(|m| m.nvars()).unwrap_or(0);
    let mut cur: Terms<A::E> = vec![(Monomial::one(one_nv), a.one())];
    let mut rows: Vec<(Vec<A::E>, usize, Vec<A::E>)> = Vec::new();
    for k in 0..=n {
        let mut r = dense(a, &cur, index, n);
        let mut combo = vec![a.zero(); n + 1];
        combo[k] = a.one();
        for (row, piv, rc) in &rows {
            if a.is_zero(&r[*piv]) {
                continue;
            }
            let f = a.mul(&r[*piv], &a.inv(&row[*piv]));
            for j in 0..n {
                if !a.is_zero(&row[j]) {
                    r[j] = a.sub(&r[j], &a.mul(&f, &row[j]));
                }
            }
            for j in 0..=k {
                if !a.is_zero(&rc[j]) {
                    combo[j] = a.sub(&combo[j], &a.mul(&f, &rc[j]));
                }
            }
        }
        match r.iter().position(|c| !a.is_zero(c)) {
            None => {
                combo.truncate(k + 1);
                return univariate::trim(a, combo);
            }
            Some(p) => rows.push((r, p, combo)),
        }
        cur = eng.normal_form(mul_terms(eng, &cur, g), gb);
    }
    unreachable!("the minimal polynomial has degree at most the dimension")
}

/// Points of `V(I)` with coordinates in the prime field, in the original
/// variable order. Requires a prime field.
pub fn rational_points<R: Rng + ?Sized>(ideal: &Ideal, rng: &mut R, max_points: usize) -> Result<Vec<Vec<Scalar>>> {
    let field = *ideal.ring().field();
    let FieldKind::PrimeField { prime } = field.kind else {
        return Err(Error::Unsupported("point finding needs a prime field".into()));
    };
    let a = ModP { p: prime };
    let red = reduce_system(ideal)?;
    let n = red.ring.nvars();
    let mut points_small: Vec<Vec<u64>> = Vec::new();
    if n == 0 {
        let unit = red.gens.iter().any(|g| !g.is_zero());
        if !unit {
            points_small.push(Vec::new());
        }
    } else {
        let mut names: Vec<String> = red.ring.vars().to_vec();
        names.push(crate::groebner::fresh_name(&names, "sep_z"));
        let lex = Ring::new(&names, field, MonomialOrder::Lex)?;
        let mut found = false;
        for _attempt in 0..4 {
            let coeffs: Vec<u64> = (0..n).map(|_| rng.gen_range(1..prime)).collect();
            let mut sep = Polynomial::var(&lex, n);
            for (i, c) in coeffs.iter().enumerate() {
                sep = &sep - &Polynomial::var(&lex, i).scale(&Scalar::Mod(*c));
            }
            let mut gens: Vec<Polynomial> = red
                .gens
                .iter()
                .map(|g| g.to_ring(&lex))
                .collect::<Result<_>>()?;
            gens.push(sep);
            let eng = Engine::new(a, MonomialOrder::Lex, ideal.degree_cap());
            let input: Vec<Terms<u64>> = gens.iter().map(|p| to_terms(&a, p, MonomialOrder::Lex)).collect();
            let gb = eng.buchberger(input)?;
            if gb.len() == 1 && gb[0][0].0.is_one() {
                return Ok(Vec::new());
            }
            let Some(shape) = shape_form(&a, &gb, n) else { continue };
            let (univ, others) = shape;
            for z in univariate::roots_mod_p(&a, &univ, rng) {
                let pt: Vec<u64> = others
                    .iter()
                    .map(|h| eval_univ(&a, h, z))
                    .collect();
                points_small.push(pt);
                if points_small.len() >= max_points {
                    break;
                }
            }
            found = true;
            break;
        }
        if !found {
            return Err(Error::NotZeroDimensional);
        }
    }
    let f = field;
    let orig = ideal.ring();
    let mut out = Vec::with_capacity(points_small.len());
    for ps in points_small {
        let mut full = vec![f.zero(); orig.nvars()];
        for (k, &i) in red.back.iter().enumerate() {
            full[i] = Scalar::Mod(ps[k]);
        }
        for (v, val) in &red.pre.subs {
            full[*v] = val.eval_unchecked(&full);
        }
        out.push(full);
    }
    Ok(out)
}

fn eval_univ(a: &ModP, h: &[u64], z: u64) -> u64 {
    h.iter().rev().fold(0, |acc, c| a.add(&a.mul(&acc, &z), c))
}

/// Recognize `{x_i - h_i(z)} ∪ {g(z)}` with `z` the last variable.
fn shape_form(a: &ModP, gb: &[Terms<u64>], n: usize) -> Option<(Vec<u64>, Vec<Vec<u64>>)> {
    if gb.len() != n + 1 {
        return None;
    }
    let z = n;
    let univ_terms = &gb[0];
    if univ_terms.iter().any(|(m, _)| (0..n).any(|i| m.exp(i) > 0)) {
        return None;
    }
    let to_dense = |t: &[(Monomial, u64)]| {
        let d = t.iter().map(|(m, _)| m.exp(z)).max().unwrap_or(0) as usize;
        let mut v = vec![0u64; d + 1];
        for (m, c) in t {
            v[m.exp(z) as usize] = *c;
        }
        v
    };
    let univ = to_dense(univ_terms);
    let mut others = vec![Vec::new(); n];
    for t in &gb[1..] {
        let lead = t[0].0;
        let var = lead.pure_power_var()?;
        if var == z || lead.degree() != 1 {
            return None;
        }
        let rest = &t[1..];
        if rest.iter().any(|(m, _)| (0..n).any(|i| m.exp(i) > 0)) {
            return None;
        }
        let h: Vec<u64> = to_dense(rest).iter().map(|c| a.neg(c)).collect();
        others[var] = h;
    }
    Some((univ, others))
}

/// Convenience: count with a linear form in the listed variables as the
/// distinguished element.
pub fn count_with_form(ideal: &Ideal, vars: &[usize], coeffs: &[Scalar]) -> Result<ZeroDimCount> {
    let ring = ideal.ring();
    let mut g = Polynomial::zero(ring);
    for (v, c) in vars.iter().zip(coeffs) {
        g = &g + &Polynomial::var(ring, *v).scale(c);
    }
    count_zero_dim(ideal, &g)
}
