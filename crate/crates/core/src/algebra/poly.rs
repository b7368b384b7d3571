//! Sparse multivariate polynomials over an explicit variable registry.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::field::{FieldConfig, Scalar};
use crate::algebra::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

/// Variable registry, coefficient field and term order shared by a family
/// of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: FieldConfig,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], field: FieldConfig, order: MonomialOrder) -> Result<RingRef> {
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(vars.len()));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidSpec(format!("duplicate variable {v}")));
            }
        }
        Ok(Arc::new(Ring { vars, field, order }))
    }

    /// Ring with variables `{prefix}0 .. {prefix}{n-1}` under grevlex.
    pub fn indexed(prefix: &str, n: usize, field: FieldConfig) -> Result<RingRef> {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        Ring::new(&names, field, MonomialOrder::GrevLex)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> &FieldConfig {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring {
            vars: self.vars.clone(),
            field: self.field,
            order,
        })
    }

    pub fn with_field(&self, field: FieldConfig) -> RingRef {
        Arc::new(Ring {
            vars: self.vars.clone(),
            field,
            order: self.order,
        })
    }

    /// Same variables and field (orders may differ).
    pub fn compatible(&self, other: &Ring) -> bool {
        self.vars == other.vars && self.field.same_field(&other.field)
    }
}

/// A polynomial: terms sorted strictly descending in the ring order, with
/// no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.vars == other.ring.vars && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Self {
        let mut p = Polynomial::zero(ring);
        if !ring.field.is_zero(&c) {
            p.terms.push((Monomial::one(ring.nvars()), c));
        }
        p
    }

    pub fn from_i64(ring: &RingRef, c: i64) -> Self {
        Polynomial::constant(ring, ring.field.from_i64(c))
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::from_i64(ring, 1)
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i), ring.field.one())],
        }
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<Self> {
        Ok(Polynomial::var(ring, ring.var_index(name)?))
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: Scalar) -> Self {
        let mut p = Polynomial::zero(ring);
        if !ring.field.is_zero(&c) {
            p.terms.push((m, c));
        }
        p
    }

    /// Build from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &RingRef, terms: Vec<(Monomial, Scalar)>) -> Self {
        let f = ring.field;
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(e) => *e = f.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, Scalar)> =
            acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        let ord = ring.order;
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Linear form `Σ c_i x_i` from a coefficient vector.
    pub fn linear_form(ring: &RingRef, coeffs: &[Scalar]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(ring.nvars(), i), c.clone()))
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> &FieldConfig {
        &self.ring.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Scalar {
        let ord = self.ring.order;
        match self.terms.binary_search_by(|t| ord.cmp(m, &t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field.zero(),
        }
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn min_degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree() as i64)
            .min()
            .unwrap_or(-1)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Homogeneous with respect to the grading that only counts `vars`.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let deg = |m: &Monomial| vars.iter().map(|&v| m.exp(v)).sum::<u32>();
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d0 = deg(m0);
                self.terms.iter().all(|(m, _)| deg(m) == d0)
            }
        }
    }

    /// Variables actually occurring.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exp(i) > 0))
            .collect()
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            self.ring.compatible(&other.ring),
            "polynomials from different rings"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let f = self.ring.field;
        let ord = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match ord.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(&a.1, &b.1);
                    if !f.is_zero(&c) {
                        out.push((a.0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let f = self.ring.field;
        if f.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, f.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        let f = self.ring.field;
        if f.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_monomial(m, c);
        }
        let f = self.ring.field;
        let mut acc: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let m = ma.mul(mb);
                let c = f.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = f.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Scalar)> =
            acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        let ord = self.ring.order;
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => {
                let inv = self.ring.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Formal partial derivative with respect to variable index `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let f = self.ring.field;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| (m.divide_by_var(i), f.mul(c, &f.from_i64(m.exp(i) as i64))))
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn differentiate(&self, var: &str) -> Result<Polynomial> {
        Ok(self.derivative(self.ring.var_index(var)?))
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ring has {n} variables",
                point.len()
            )));
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[Scalar]) -> Scalar {
        let f = self.ring.field;
        let n = self.ring.nvars();
        let maxdeg: Vec<u32> = (0..n).map(|i| self.degree_in(i)).collect();
        let powers: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut v = Vec::with_capacity(maxdeg[i] as usize + 1);
                v.push(f.one());
                for k in 1..=maxdeg[i] as usize {
                    let next = f.mul(&v[k - 1], &point[i]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = f.mul(&t, &powers[i][e as usize]);
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }

    /// Replace variable `i` by `images[i]` (all in a common target ring).
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let n = self.ring.nvars();
        let maxdeg: Vec<u32> = (0..n).map(|i| self.degree_in(i)).collect();
        let mut cache: Vec<Vec<Polynomial>> = (0..n)
            .map(|_| vec![Polynomial::one(&target)])
            .collect();
        for i in 0..n {
            for k in 1..=maxdeg[i] as usize {
                let next = cache[i][k - 1].mul(&images[i]);
                cache[i].push(next);
            }
        }
        let f = target.field;
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&cache[i][e as usize]);
                }
            }
            for (tm, tc) in t.terms {
                match acc.get_mut(&tm) {
                    Some(x) => *x = f.add(x, &tc),
                    None => {
                        acc.insert(tm, tc);
                    }
                }
            }
        }
        Polynomial::from_terms(&target, acc.into_iter().collect())
    }

    /// Move into `target`, sending variable `i` to `map[i]`.
    pub fn remap(&self, target: &RingRef, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.remap(n, map), c.clone()))
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Move into a ring with the same variable names (possibly another
    /// order), or a ring that contains all variables by name.
    pub fn to_ring(&self, target: &RingRef) -> Result<Polynomial> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for (i, v) in self.ring.vars.iter().enumerate() {
            match target.var_index(v) {
                Ok(j) => map.push(j),
                Err(e) => {
                    if self.degree_in(i) > 0 {
                        return Err(e);
                    }
                    map.push(usize::MAX);
                }
            }
        }
        Ok(self.remap(target, &map))
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .cloned()
                .collect(),
        }
    }

    /// Coefficients as polynomials in the remaining variables, keyed by the
    /// exponent of `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let d = self.degree_in(var) as usize;
        let mut parts: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            parts[m.exp(var) as usize].push((m.without_var(var), c.clone()));
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_terms(&self.ring, t))
            .collect()
    }

    /// Re-sort for a changed ring order (same variables).
    pub fn with_ring_order(&self, target: &RingRef) -> Polynomial {
        debug_assert_eq!(self.ring.vars, target.vars);
        let mut terms = self.terms.clone();
        let ord = target.order;
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Polynomial {
            ring: target.clone(),
            terms,
        }
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = match c {
                Scalar::Mod(_) => {
                    let v = field.to_i64(c).unwrap_or(0);
                    (v < 0, field.from_i64(v.abs()))
                }
                Scalar::Rat(_) => (c.is_negative_rat(), if c.is_negative_rat() { field.neg(c) } else { c.clone() }),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = field.is_one(&mag);
            let mut first = true;
            if !unit || m.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ring.vars[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;
    use proptest::prelude::*;

    fn ring() -> RingRef {
        Ring::new(&["x", "y", "z"], FieldConfig::default(), MonomialOrder::GrevLex).unwrap()
    }

    fn arb_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0u32..4, 3), -20i64..20), 0..6)
    }

    fn build(r: &RingRef, t: Vec<(Vec<u32>, i64)>) -> Polynomial {
        Polynomial::from_terms(
            r,
            t.into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), r.field().from_i64(c)))
                .collect(),
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let r = ring();
            let (f, g, h) = (build(&r, a), build(&r, b), build(&r, c));
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn leibniz_rule(a in arb_poly(), b in arb_poly(), v in 0usize..3) {
            let r = ring();
            let (f, g) = (build(&r, a), build(&r, b));
            let lhs = (&f * &g).derivative(v);
            let rhs = &(&f.derivative(v) * &g) + &(&f * &g.derivative(v));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mixed_partials_commute(a in arb_poly(), i in 0usize..3, j in 0usize..3) {
            let r = ring();
            let f = build(&r, a);
            prop_assert_eq!(f.derivative(i).derivative(j), f.derivative(j).derivative(i));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), p in proptest::collection::vec(-50i64..50, 3)) {
            let r = ring();
            let fc = *r.field();
            let (f, g) = (build(&r, a), build(&r, b));
            let pt: Vec<Scalar> = p.iter().map(|&v| fc.from_i64(v)).collect();
            let (ef, eg) = (f.evaluate(&pt).unwrap(), g.evaluate(&pt).unwrap());
            prop_assert_eq!((&f + &g).evaluate(&pt).unwrap(), fc.add(&ef, &eg));
            prop_assert_eq!((&f * &g).evaluate(&pt).unwrap(), fc.mul(&ef, &eg));
        }

        #[test]
        fn display_round_trips(a in arb_poly()) {
            let r = ring();
            let f = build(&r, a);
            let back = parse_poly(&f.to_string(), r.vars(), *r.field()).unwrap();
            prop_assert_eq!(back, f);
        }
    }

    #[test]
    fn derivative_examples() {
        let r = Ring::new(&["u", "x"], FieldConfig::default(), MonomialOrder::GrevLex).unwrap();
        let u3 = parse_poly("u^3", r.vars(), *r.field()).unwrap();
        let three_u2 = parse_poly("3*u^2", r.vars(), *r.field()).unwrap();
        assert_eq!(u3.differentiate("u").unwrap(), three_u2);
        assert!(u3.differentiate("x").unwrap().is_zero());
        assert!(matches!(u3.differentiate("w"), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn evaluate_examples() {
        let r = Ring::new(&["x", "y"], FieldConfig::default(), MonomialOrder::GrevLex).unwrap();
        let f = parse_poly("x^2 + y + 5", r.vars(), *r.field()).unwrap();
        let fc = *r.field();
        assert_eq!(f.evaluate(&[fc.from_i64(2), fc.from_i64(3)]).unwrap(), fc.from_i64(12));
        assert_eq!(f.evaluate(&[fc.zero(), fc.zero()]).unwrap(), f.constant_term());
        assert!(matches!(f.evaluate(&[fc.zero()]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn substitution_composes() {
        let r = Ring::new(&["x", "y"], FieldConfig::default(), MonomialOrder::GrevLex).unwrap();
        let t = Ring::new(&["t"], FieldConfig::default(), MonomialOrder::GrevLex).unwrap();
        let f = parse_poly("y - x^2", r.vars(), *r.field()).unwrap();
        let imgs = vec![
            parse_poly("t", t.vars(), *t.field()).unwrap(),
            parse_poly("t^2", t.vars(), *t.field()).unwrap(),
        ];
        assert!(f.substitute(&imgs).is_zero());
    }
}
