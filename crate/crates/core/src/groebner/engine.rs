//! Buchberger's algorithm on unboxed term vectors.

use std::cmp::Ordering;

use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::groebner::arith::Arith;

pub(crate) type Terms<E> = Vec<(Monomial, E)>;

#[derive(Clone)]
pub(crate) struct Engine<A: Arith> {
    pub a: A,
    pub ord: MonomialOrder,
    pub cap: u32,
}

struct Elt<E> {
    poly: Terms<E>,
    lm: Monomial,
    mask: u64,
    maxdeg: u32,
    sugar: u32,
    active: bool,
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

impl<A: Arith> Engine<A> {
    pub fn new(a: A, ord: MonomialOrder, cap: u32) -> Self {
        Engine { a, ord, cap }
    }

    pub fn sort(&self, t: &mut Terms<A::E>) {
        let ord = self.ord;
        t.sort_by(|x, y| ord.cmp(&y.0, &x.0));
    }

    pub fn make_monic(&self, t: &mut Terms<A::E>) {
        if let Some((_, c)) = t.first() {
            let inv = self.a.inv(c);
            if inv != self.a.one() {
                for (_, x) in t.iter_mut() {
                    *x = self.a.mul(x, &inv);
                }
            }
        }
    }

    /// `f - c·m·g`, where the leading terms are known to cancel when
    /// `skip_lead` is set.
    fn sub_mul(
        &self,
        f: &[(Monomial, A::E)],
        c: &A::E,
        m: &Monomial,
        g: &[(Monomial, A::E)],
        skip_lead: bool,
    ) -> Terms<A::E> {
        let a = &self.a;
        let ord = self.ord;
        let (f, g) = if skip_lead { (&f[1..], &g[1..]) } else { (f, g) };
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        let mut gm = g.first().map(|t| t.0.mul(m));
        while i < f.len() {
            let Some(gmon) = gm else { break };
            match ord.cmp(&f[i].0, &gmon) {
                Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gmon, a.neg(&a.mul(c, &g[j].1))));
                    j += 1;
                    gm = g.get(j).map(|t| t.0.mul(m));
                }
                Ordering::Equal => {
                    let v = a.sub(&f[i].1, &a.mul(c, &g[j].1));
                    if !a.is_zero(&v) {
                        out.push((gmon, v));
                    }
                    i += 1;
                    j += 1;
                    gm = g.get(j).map(|t| t.0.mul(m));
                }
            }
        }
        out.extend_from_slice(&f[i..]);
        while j < g.len() {
            out.push((g[j].0.mul(m), a.neg(&a.mul(c, &g[j].1))));
            j += 1;
        }
        out
    }

    fn find_reducer(elts: &[Elt<A::E>], m: &Monomial) -> Option<usize> {
        let mm = m.divmask();
        let mut best: Option<usize> = None;
        for (k, e) in elts.iter().enumerate() {
            if e.active && e.mask & !mm == 0 && e.lm.divides(m) {
                match best {
                    Some(b) if elts[b].poly.len() <= e.poly.len() => {}
                    _ => best = Some(k),
                }
            }
        }
        best
    }

    /// Full reduction of `f` by the active, monic elements.
    fn reduce_by(&self, f: Terms<A::E>, elts: &[Elt<A::E>]) -> Result<Terms<A::E>> {
        let mut p = f;
        let mut out: Terms<A::E> = Vec::new();
        let mut start = 0;
        while start < p.len() {
            let (m, c) = (p[start].0, p[start].1.clone());
            match Self::find_reducer(elts, &m) {
                Some(k) => {
                    let q = elts[k].lm.quotient_of(&m).expect("divides");
                    if elts[k].maxdeg + q.degree() > self.cap {
                        return Err(Error::DegreeCapExceeded(self.cap));
                    }
                    p = self.sub_mul(&p[start..], &c, &q, &elts[k].poly, true);
                    start = 0;
                }
                None => {
                    out.push(p[start].clone());
                    start += 1;
                }
            }
        }
        Ok(out)
    }

    /// Full reduction against a reduced basis given as plain term vectors.
    pub fn normal_form(&self, f: Terms<A::E>, basis: &[Terms<A::E>]) -> Terms<A::E> {
        let mut p = f;
        let mut out: Terms<A::E> = Vec::new();
        let lms: Vec<(Monomial, u64)> = basis.iter().map(|g| (g[0].0, g[0].0.divmask())).collect();
        let mut start = 0;
        while start < p.len() {
            let m = p[start].0;
            let mm = m.divmask();
            let hit = lms
                .iter()
                .position(|(l, mask)| mask & !mm == 0 && l.divides(&m));
            match hit {
                Some(k) => {
                    let c = self.a.mul(&p[start].1, &self.a.inv(&basis[k][0].1));
                    let q = lms[k].0.quotient_of(&m).expect("divides");
                    p = self.sub_mul(&p[start..], &c, &q, &basis[k], true);
                    start = 0;
                }
                None => {
                    out.push(p[start].clone());
                    start += 1;
                }
            }
        }
        out
    }

    fn spoly(&self, f: &Elt<A::E>, g: &Elt<A::E>, lcm: &Monomial) -> Result<Terms<A::E>> {
        let qf = f.lm.quotient_of(lcm).expect("lcm");
        let qg = g.lm.quotient_of(lcm).expect("lcm");
        if (f.maxdeg + qf.degree()).max(g.maxdeg + qg.degree()) > self.cap {
            return Err(Error::DegreeCapExceeded(self.cap));
        }
        let one = self.a.one();
        let fm: Terms<A::E> = f.poly[1..].iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
        let gm: Vec<(Monomial, A::E)> = g.poly.iter().map(|(m, c)| (*m, c.clone())).collect();
        let mut head = vec![(*lcm, one.clone())];
        head.extend(fm);
        Ok(self.sub_mul(&head, &one, &qg, &gm, true))
    }

    fn update(&self, elts: &mut [Elt<A::E>], pairs: &mut Vec<Pair>, h: usize) {
        let hlm = elts[h].lm;
        let hs = elts[h].sugar;
        let cands: Vec<Pair> = (0..h)
            .filter(|&g| elts[g].active)
            .map(|g| {
                let lcm = elts[g].lm.lcm(&hlm);
                let sugar = (elts[g].sugar + lcm.degree() - elts[g].lm.degree())
                    .max(hs + lcm.degree() - hlm.degree());
                Pair { i: g, j: h, lcm, sugar }
            })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in cands.iter().enumerate() {
            let coprime = elts[p.i].lm.is_coprime(&hlm);
            let dominated = cands[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(*p);
            }
        }
        kept.retain(|p| !elts[p.i].lm.is_coprime(&hlm));
        pairs.retain(|p| {
            !(hlm.divides(&p.lcm)
                && elts[p.i].lm.lcm(&hlm) != p.lcm
                && elts[p.j].lm.lcm(&hlm) != p.lcm)
        });
        pairs.extend(kept);
        for e in elts.iter_mut().take(h) {
            if e.active && hlm.divides(&e.lm) {
                e.active = false;
            }
        }
    }

    fn push(&self, elts: &mut Vec<Elt<A::E>>, pairs: &mut Vec<Pair>, mut poly: Terms<A::E>, sugar: u32) {
        self.make_monic(&mut poly);
        let lm = poly[0].0;
        let maxdeg = poly.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        elts.push(Elt {
            poly,
            lm,
            mask: lm.divmask(),
            maxdeg,
            sugar,
            active: true,
        });
        let h = elts.len() - 1;
        self.update(elts, pairs, h);
    }

    /// Reduced Gröbner basis, sorted by ascending leading monomial.
    pub fn buchberger(&self, gens: Vec<Terms<A::E>>) -> Result<Vec<Terms<A::E>>> {
        let mut input: Vec<Terms<A::E>> = gens.into_iter().filter(|g| !g.is_empty()).collect();
        if let Some(g) = input.iter().find(|g| g[0].0.is_one()) {
            return Ok(vec![vec![(g[0].0, self.a.one())]]);
        }
        let ord = self.ord;
        input.sort_by(|x, y| ord.cmp(&x[0].0, &y[0].0).then(x.len().cmp(&y.len())));
        let mut elts: Vec<Elt<A::E>> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        for g in input {
            let sugar = g.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
            if g.iter().any(|(m, _)| m.degree() > self.cap) {
                return Err(Error::DegreeCapExceeded(self.cap));
            }
            let r = self.reduce_by(g, &elts)?;
            if r.is_empty() {
                continue;
            }
            if r[0].0.is_one() {
                return Ok(vec![vec![(r[0].0, self.a.one())]]);
            }
            self.push(&mut elts, &mut pairs, r, sugar);
        }
        while !pairs.is_empty() {
            let mut best = 0;
            for k in 1..pairs.len() {
                let (p, q) = (&pairs[k], &pairs[best]);
                let c = p
                    .sugar
                    .cmp(&q.sugar)
                    .then_with(|| ord.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)));
                if c == Ordering::Less {
                    best = k;
                }
            }
            let pair = pairs.swap_remove(best);
            if pair.lcm.degree() > self.cap {
                return Err(Error::DegreeCapExceeded(self.cap));
            }
            let s = self.spoly(&elts[pair.i], &elts[pair.j], &pair.lcm)?;
            let r = self.reduce_by(s, &elts)?;
            if r.is_empty() {
                continue;
            }
            if r[0].0.is_one() {
                return Ok(vec![vec![(r[0].0, self.a.one())]]);
            }
            self.push(&mut elts, &mut pairs, r, pair.sugar);
        }
        self.interreduce(elts)
    }

    fn interreduce(&self, elts: Vec<Elt<A::E>>) -> Result<Vec<Terms<A::E>>> {
        let mut act: Vec<Elt<A::E>> = elts.into_iter().filter(|e| e.active).collect();
        let ord = self.ord;
        act.sort_by(|x, y| ord.cmp(&x.lm, &y.lm));
        let n = act.len();
        let mut out: Vec<Terms<A::E>> = Vec::with_capacity(n);
        for k in 0..n {
            let poly = std::mem::take(&mut act[k].poly);
            act[k].active = false;
            let lead = poly[0].clone();
            let tail = self.reduce_by(poly[1..].to_vec(), &act)?;
            act[k].active = true;
            let mut p = vec![lead];
            p.extend(tail);
            act[k].maxdeg = p.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
            act[k].poly = p.clone();
            out.push(p);
        }
        Ok(out)
    }
}
