//! Ideals, Gröbner bases, elimination, saturation, Hilbert data and
//! zero-dimensional counting.

pub(crate) mod arith;
pub(crate) mod engine;
pub mod hilbert;
mod presolve;
pub mod univariate;
pub mod zerodim;

use crate::algebra::monomial::MonomialOrder;
use crate::algebra::poly::{Polynomial, Ring, RingRef};
use crate::error::{Error, Result};
use arith::{with_arith, Arith};
use engine::{Engine, Terms};

pub use hilbert::HilbertData;
pub use zerodim::ZeroDimCount;

pub const DEFAULT_DEGREE_CAP: u32 = 60;

/// A finitely generated ideal. `gb_order` records that the generators form
/// the reduced Gröbner basis for that order.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    homogeneous: bool,
    degree_cap: u32,
    gb_order: Option<MonomialOrder>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.vars() == other.ring.vars() && self.gens == other.gens
    }
}

pub(crate) fn to_terms<A: Arith>(a: &A, p: &Polynomial, ord: MonomialOrder) -> Terms<A::E> {
    let mut t: Terms<A::E> = p.terms().iter().map(|(m, c)| (*m, a.from_scalar(c))).collect();
    if p.ring().order() != ord {
        t.sort_by(|x, y| ord.cmp(&y.0, &x.0));
    }
    t
}

pub(crate) fn from_terms<A: Arith>(a: &A, ring: &RingRef, t: Terms<A::E>) -> Polynomial {
    Polynomial::from_terms(ring, t.into_iter().map(|(m, c)| (m, a.to_scalar(&c))).collect())
}

impl Ideal {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().compatible(ring) {
                if g.ring().vars() == ring.vars() {
                    return Err(Error::FieldMismatch);
                }
                return Err(Error::DimensionMismatch("generator from another ring".into()));
            }
            if !g.is_zero() {
                out.push(if g.ring().order() == ring.order() {
                    g
                } else {
                    g.with_ring_order(ring)
                });
            }
        }
        let homogeneous = out.iter().all(|g| g.is_homogeneous());
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            homogeneous,
            degree_cap: DEFAULT_DEGREE_CAP,
            gb_order: None,
        })
    }

    /// Like [`Ideal::new`], failing unless every generator is homogeneous.
    pub fn homogeneous(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Ideal> {
        let i = Ideal::new(ring, gens)?;
        if !i.homogeneous {
            return Err(Error::NotHomogeneous);
        }
        Ok(i)
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    pub fn with_cap(mut self, cap: u32) -> Ideal {
        self.degree_cap = cap;
        self
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gb_order(&self) -> Option<MonomialOrder> {
        self.gb_order
    }

    fn derived(&self, ring: &RingRef, gens: Vec<Polynomial>, gb: Option<MonomialOrder>) -> Ideal {
        let homogeneous = gens.iter().all(|g| g.is_homogeneous());
        Ideal {
            ring: ring.clone(),
            gens,
            homogeneous,
            degree_cap: self.degree_cap,
            gb_order: gb,
        }
    }

    pub fn add_gens(&self, more: Vec<Polynomial>) -> Result<Ideal> {
        let mut g = self.gens.clone();
        g.extend(more);
        Ok(Ideal::new(&self.ring, g)?.with_cap(self.degree_cap))
    }

    /// Reduced Gröbner basis for `order`; generators sorted by ascending
    /// leading monomial, each monic.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Ideal> {
        if self.gb_order == Some(order) {
            return Ok(self.clone());
        }
        let ring = if self.ring.order() == order {
            self.ring.clone()
        } else {
            self.ring.with_order(order)
        };
        let field = *self.ring.field();
        let gens = with_arith!(field, a => {
            let eng = Engine::new(a, order, self.degree_cap);
            let input = self.gens.iter().map(|g| to_terms(&eng.a, g, order)).collect();
            let gb = eng.buchberger(input)?;
            gb.into_iter().map(|t| from_terms(&eng.a, &ring, t)).collect::<Vec<_>>()
        });
        Ok(self.derived(&ring, gens, Some(order)))
    }

    /// Gröbner basis for the ring's own order.
    pub fn gb(&self) -> Result<Ideal> {
        self.groebner_basis(self.ring.order())
    }

    pub fn is_unit(&self) -> Result<bool> {
        let g = self.groebner_basis(MonomialOrder::GrevLex)?;
        Ok(g.gens.len() == 1 && g.gens[0].is_constant())
    }

    /// Normal form of `f` modulo this ideal, for this ideal's GB order
    /// (computing a grevlex basis first if needed).
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let gb = match self.gb_order {
            Some(_) => self.clone(),
            None => self.groebner_basis(MonomialOrder::GrevLex)?,
        };
        let f = f.to_ring(&gb.ring)?;
        let order = gb.ring.order();
        let field = *self.ring.field();
        Ok(with_arith!(field, a => {
            let eng = Engine::new(a, order, gb.degree_cap);
            let basis: Vec<_> = gb.gens.iter().map(|g| to_terms(&eng.a, g, order)).collect();
            let r = eng.normal_form(to_terms(&eng.a, &f, order), &basis);
            from_terms(&eng.a, &gb.ring, r)
        }))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let gb = match self.gb_order {
            Some(_) => self.clone(),
            None => self.groebner_basis(MonomialOrder::GrevLex)?,
        };
        for g in &other.gens {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same ideal (mutual containment).
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// Move to another ring holding all variables in use, by name.
    pub fn to_ring(&self, target: &RingRef) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(target, gens)?.with_cap(self.degree_cap))
    }

    /// `I ∩ k[keep]`, as a grevlex Gröbner basis over a ring on `keep`.
    pub fn eliminate<S: AsRef<str>>(&self, keep: &[S]) -> Result<Ideal> {
        let keep_idx: Vec<usize> = keep
            .iter()
            .map(|v| self.ring.var_index(v.as_ref()))
            .collect::<Result<_>>()?;
        let out_ring = Ring::new(keep, *self.ring.field(), MonomialOrder::GrevLex)?;
        let elim: Vec<usize> = (0..self.ring.nvars()).filter(|i| !keep_idx.contains(i)).collect();
        let pre = presolve::substitute_linear(&self.gens, &elim);
        let gens = pre.gens;
        let used: Vec<usize> = elim
            .iter()
            .copied()
            .filter(|&i| gens.iter().any(|g| g.degree_in(i) > 0))
            .collect();
        if used.is_empty() {
            let moved: Vec<Polynomial> = gens
                .iter()
                .map(|g| g.to_ring(&out_ring))
                .collect::<Result<_>>()?;
            return Ideal::new(&out_ring, moved)?
                .with_cap(self.degree_cap)
                .groebner_basis(MonomialOrder::GrevLex);
        }
        let mut names: Vec<String> = used.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        names.extend(keep.iter().map(|v| v.as_ref().to_string()));
        let bring = Ring::new(&names, *self.ring.field(), MonomialOrder::Block(used.len()))?;
        let moved: Vec<Polynomial> = gens
            .iter()
            .map(|g| g.to_ring(&bring))
            .collect::<Result<_>>()?;
        let gb = Ideal::new(&bring, moved)?
            .with_cap(self.degree_cap)
            .groebner_basis(MonomialOrder::Block(used.len()))?;
        let k = used.len();
        let kept: Vec<Polynomial> = gb
            .gens
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exp(i) == 0)))
            .map(|g| g.to_ring(&out_ring))
            .collect::<Result<_>>()?;
        let mut kept = kept;
        kept.sort_by(|a, b| {
            let o = MonomialOrder::GrevLex;
            o.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
        });
        Ok(self.derived(&out_ring, kept, Some(MonomialOrder::GrevLex)))
    }

    /// `I : f^∞`, by adding `1 - z·f` and eliminating `z`.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::DimensionMismatch("cannot saturate by zero".into()));
        }
        if f.is_constant() {
            return self.groebner_basis(MonomialOrder::GrevLex);
        }
        let mut names: Vec<String> = self.ring.vars().to_vec();
        let z = fresh_name(&names, "sat_z");
        names.push(z);
        let big = Ring::new(&names, *self.ring.field(), MonomialOrder::GrevLex)?;
        let zp = Polynomial::var(&big, names.len() - 1);
        let fb = f.to_ring(&big)?;
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.to_ring(&big))
            .collect::<Result<_>>()?;
        gens.push(&Polynomial::one(&big) - &(&zp * &fb));
        let keep: Vec<String> = self.ring.vars().to_vec();
        let out = Ideal::new(&big, gens)?
            .with_cap(self.degree_cap)
            .eliminate(&keep)?;
        if out.ring.order() == self.ring.order() {
            Ok(out)
        } else {
            Ok(out.to_ring(&self.ring.with_order(MonomialOrder::GrevLex))?
                .groebner_basis(MonomialOrder::GrevLex)?)
        }
    }

    pub fn hilbert_dim_degree(&self) -> Result<HilbertData> {
        if !self.homogeneous {
            return Err(Error::NotHomogeneous);
        }
        let gb = self.groebner_basis(MonomialOrder::GrevLex)?;
        let lms: Vec<_> = gb.gens.iter().map(|g| *g.leading_monomial().unwrap()).collect();
        Ok(hilbert::hilbert_data(&lms, self.ring.nvars()))
    }

    /// See [`zerodim::count_zero_dim`].
    pub fn count_zero_dim(&self, distinguished: &Polynomial) -> Result<ZeroDimCount> {
        zerodim::count_zero_dim(self, distinguished)
    }

    /// Random invertible linear change of coordinates, for tests and
    /// genericity probes.
    pub fn linear_change(&self, images: &[Polynomial]) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.substitute(images)).collect();
        Ok(Ideal::new(images[0].ring(), gens)?.with_cap(self.degree_cap))
    }
}

pub(crate) fn fresh_name(existing: &[String], base: &str) -> String {
    let mut name = base.to_string();
    let mut k = 0;
    while existing.contains(&name) {
        k += 1;
        name = format!("{base}{k}");
    }
    name
}
