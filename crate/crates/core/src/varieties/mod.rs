//! Projective varieties given by constrained parametrizations, by ideals,
//! or both, with implicitization, projection and joins.

pub mod spec;

use std::sync::OnceLock;

use rand::Rng;

use crate::algebra::field::{FieldConfig, FieldKind, Scalar};
use crate::algebra::linalg::{self, Matrix, Vector};
use crate::algebra::monomial::MonomialOrder;
use crate::algebra::poly::{Polynomial, Ring, RingRef};
use crate::error::{Error, Result};
use crate::groebner::zerodim::rational_points;
use crate::groebner::{HilbertData, Ideal, DEFAULT_DEGREE_CAP};

pub use spec::{make_variety, Center, VarietySpec};

const POINT_RETRIES: usize = 10;

/// A map `u ↦ ψ(u)` from the locus `constraints = 0` in parameter space to
/// `𝔸^{N+1}`, read projectively. Chart normalizations of parameter
/// scalings are ordinary constraints.
#[derive(Clone, Debug)]
pub struct ParamMap {
    ring: RingRef,
    psi: Vec<Polynomial>,
    constraints: Vec<Polynomial>,
    expected_dim: usize,
    cap: u32,
    jac: OnceLock<Vec<Vec<Polynomial>>>,
    cjac: OnceLock<Vec<Vec<Polynomial>>>,
    pdeg: OnceLock<u64>,
}

fn check_ring(ring: &RingRef, p: &Polynomial) -> Result<()> {
    if !p.ring().compatible(ring) {
        return Err(Error::DimensionMismatch("polynomial from another ring".into()));
    }
    Ok(())
}

impl ParamMap {
    pub fn new(
        ring: &RingRef,
        psi: Vec<Polynomial>,
        constraints: Vec<Polynomial>,
        expected_dim: usize,
    ) -> Result<ParamMap> {
        if psi.is_empty() || psi.iter().all(|p| p.is_zero()) {
            return Err(Error::InvalidSpec("parametrization is identically zero".into()));
        }
        for p in psi.iter().chain(&constraints) {
            check_ring(ring, p)?;
        }
        if expected_dim >= psi.len() {
            return Err(Error::InvalidSpec(format!(
                "dimension {expected_dim} does not fit in P^{}",
                psi.len() - 1
            )));
        }
        let constraints: Vec<Polynomial> = constraints.into_iter().filter(|c| !c.is_zero()).collect();
        if constraints.len() > ring.nvars() {
            return Err(Error::InvalidSpec("more constraints than parameters".into()));
        }
        Ok(ParamMap {
            ring: ring.clone(),
            psi,
            constraints,
            expected_dim,
            cap: DEFAULT_DEGREE_CAP,
            jac: OnceLock::new(),
            cjac: OnceLock::new(),
            pdeg: OnceLock::new(),
        })
    }

    pub fn with_cap(mut self, cap: u32) -> ParamMap {
        self.cap = cap;
        self
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn field(&self) -> &FieldConfig {
        self.ring.field()
    }

    pub fn psi(&self) -> &[Polynomial] {
        &self.psi
    }

    pub fn constraints(&self) -> &[Polynomial] {
        &self.constraints
    }

    pub fn nparams(&self) -> usize {
        self.ring.nvars()
    }

    pub fn ambient_dim(&self) -> usize {
        self.psi.len() - 1
    }

    pub fn expected_dim(&self) -> usize {
        self.expected_dim
    }

    pub fn is_constrained(&self) -> bool {
        !self.constraints.is_empty()
    }

    /// Dimension of the parameter locus, assuming the constraints form a
    /// complete intersection.
    pub fn locus_dim(&self) -> usize {
        self.nparams() - self.constraints.len()
    }

    /// `jacobian()[k][i] = ∂ψ_k/∂u_i`.
    pub fn jacobian(&self) -> &[Vec<Polynomial>] {
        self.jac.get_or_init(|| {
            self.psi
                .iter()
                .map(|p| (0..self.nparams()).map(|i| p.derivative(i)).collect())
                .collect()
        })
    }

    pub fn constraint_jacobian(&self) -> &[Vec<Polynomial>] {
        self.cjac.get_or_init(|| {
            self.constraints
                .iter()
                .map(|p| (0..self.nparams()).map(|i| p.derivative(i)).collect())
                .collect()
        })
    }

    pub fn eval(&self, u: &[Scalar]) -> Vector {
        self.psi.iter().map(|p| p.eval_unchecked(u)).collect()
    }

    /// `∂_i ψ(u)` for every parameter `i`.
    pub fn partials_at(&self, u: &[Scalar]) -> Vec<Vector> {
        let jac = self.jacobian();
        (0..self.nparams())
            .map(|i| jac.iter().map(|row| row[i].eval_unchecked(u)).collect())
            .collect()
    }

    /// `H[i][j] = ∂_i∂_j ψ(u)`.
    pub fn hessian_at(&self, u: &[Scalar]) -> Vec<Vec<Vector>> {
        second_derivatives(&self.psi, u)
    }

    /// Rows `∇C_r(u)`.
    pub fn constraint_gradients_at(&self, u: &[Scalar]) -> Vec<Vector> {
        self.constraint_jacobian()
            .iter()
            .map(|row| row.iter().map(|p| p.eval_unchecked(u)).collect())
            .collect()
    }

    /// `H[i][j]` is the vector over constraints of `∂_i∂_j C(u)`.
    pub fn constraint_hessian_at(&self, u: &[Scalar]) -> Vec<Vec<Vector>> {
        second_derivatives(&self.constraints, u)
    }

    pub fn satisfies_constraints(&self, u: &[Scalar]) -> bool {
        let f = self.field();
        self.constraints.iter().all(|c| f.is_zero(&c.eval_unchecked(u)))
    }

    /// Basis of the tangent space of the parameter locus at `u`.
    pub fn locus_tangent(&self, u: &[Scalar]) -> Vec<Vector> {
        let f = self.field();
        let m = self.nparams();
        if self.constraints.is_empty() {
            return (0..m)
                .map(|i| {
                    let mut e = vec![f.zero(); m];
                    e[i] = f.one();
                    e
                })
                .collect();
        }
        Matrix::from_rows(f, &self.constraint_gradients_at(u), m).kernel(f)
    }

    /// `J_ψ(u)·k` for a parameter direction `k`.
    pub fn push_forward(&self, partials: &[Vector], k: &[Scalar]) -> Vector {
        let f = self.field();
        let mut out = vec![f.zero(); self.psi.len()];
        for (d, c) in partials.iter().zip(k) {
            if !f.is_zero(c) {
                out = linalg::axpy(f, c, d, &out);
            }
        }
        out
    }

    /// Rank of the projective differential at `u`, i.e. the rank of
    /// `ψ(u)` together with the images of locus tangent vectors, minus one.
    pub fn projective_rank_at(&self, u: &[Scalar]) -> i64 {
        let partials = self.partials_at(u);
        let mut rows = vec![self.eval(u)];
        for k in self.locus_tangent(u) {
            rows.push(self.push_forward(&partials, &k));
        }
        linalg::rank_of(self.field(), &rows) as i64 - 1
    }

    /// A random point of the parameter locus with coordinates in the field.
    pub fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Vector> {
        let f = *self.field();
        let m = self.nparams();
        if self.constraints.is_empty() {
            return Ok((0..m).map(|_| f.random(rng)).collect());
        }
        if !matches!(f.kind, FieldKind::PrimeField { .. }) {
            return Err(Error::Unsupported(
                "points on constrained parameter loci need a prime field".into(),
            ));
        }
        let slices = self.locus_dim();
        let mut last = Error::NoRegularPointFound(0);
        for _ in 0..POINT_RETRIES {
            let mut gens = self.constraints.clone();
            for _ in 0..slices {
                let coeffs: Vec<Scalar> = (0..m).map(|_| f.random(rng)).collect();
                let l = Polynomial::linear_form(&self.ring, &coeffs);
                gens.push(&l - &Polynomial::constant(&self.ring, f.random(rng)));
            }
            let ideal = Ideal::new(&self.ring, gens)?.with_cap(self.cap);
            match rational_points(&ideal, rng, 16) {
                Ok(pts) if !pts.is_empty() => {
                    let k = rng.gen_range(0..pts.len());
                    return Ok(pts[k].clone());
                }
                Ok(_) => continue,
                Err(Error::NotZeroDimensional) => {
                    last = Error::NotZeroDimensional;
                    continue;
                }
                Err(e) => return Err(e),
            }
        }
        match last {
            Error::NotZeroDimensional => Err(Error::InvalidSpec(
                "parameter locus has larger dimension than declared".into(),
            )),
            _ => Err(Error::NoRegularPointFound(POINT_RETRIES)),
        }
    }

    /// A sampled point at which the locus is smooth of the declared
    /// dimension and the projective differential has full rank.
    pub fn regular_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Vector> {
        for _ in 0..POINT_RETRIES {
            let u = self.sample_point(rng)?;
            if self.locus_tangent(&u).len() == self.locus_dim()
                && self.projective_rank_at(&u) == self.expected_dim as i64
            {
                return Ok(u);
            }
        }
        Err(Error::NoRegularPointFound(POINT_RETRIES))
    }

    /// Same parameters and constraints, coordinates transformed by the
    /// rows of `forms` (each a linear form on `𝔸^{N+1}`).
    pub fn compose_linear(&self, forms: &[Vector]) -> ParamMap {
        let f = self.field();
        let psi = forms
            .iter()
            .map(|row| {
                let mut acc = Polynomial::zero(&self.ring);
                for (c, p) in row.iter().zip(&self.psi) {
                    if !f.is_zero(c) {
                        acc = &acc + &p.scale(c);
                    }
                }
                acc
            })
            .collect();
        ParamMap {
            ring: self.ring.clone(),
            psi,
            constraints: self.constraints.clone(),
            expected_dim: self.expected_dim,
            cap: self.cap,
            jac: OnceLock::new(),
            cjac: OnceLock::new(),
            pdeg: OnceLock::new(),
        }
    }

    /// Add constraints, lowering the declared dimension accordingly.
    pub fn restrict(&self, extra: Vec<Polynomial>) -> Result<ParamMap> {
        let k = extra.len();
        if k > self.expected_dim {
            return Err(Error::InvalidSpec("too many restricting equations".into()));
        }
        let mut cons = self.constraints.clone();
        cons.extend(extra);
        Ok(ParamMap::new(&self.ring, self.psi.clone(), cons, self.expected_dim - k)?.with_cap(self.cap))
    }

    /// Cut positive-dimensional fibers with random affine hyperplanes in
    /// parameter space until the locus has the image dimension. The image
    /// is unchanged.
    pub fn cut_fibers<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<ParamMap> {
        let k = self.locus_dim().saturating_sub(self.expected_dim);
        if k == 0 {
            return Ok(self.clone());
        }
        let f = *self.field();
        let mut cons = self.constraints.clone();
        for _ in 0..k {
            let coeffs: Vec<Scalar> = (0..self.nparams()).map(|_| f.random(rng)).collect();
            let l = Polynomial::linear_form(&self.ring, &coeffs);
            cons.push(&l - &Polynomial::constant(&self.ring, f.random(rng)));
        }
        Ok(ParamMap::new(&self.ring, self.psi.clone(), cons, self.expected_dim)?.with_cap(self.cap))
    }

    /// Copy `ψ` and the constraints into `target`, parameter `i` going to
    /// variable `offset + i`.
    pub fn embed(&self, target: &RingRef, offset: usize) -> (Vec<Polynomial>, Vec<Polynomial>) {
        let map: Vec<usize> = (0..self.nparams()).map(|i| offset + i).collect();
        let psi = self.psi.iter().map(|p| p.remap(target, &map)).collect();
        let cons = self.constraints.iter().map(|p| p.remap(target, &map)).collect();
        (psi, cons)
    }

    /// Same, for the Jacobians: `(jac[k][i], cjac[r][i])`.
    pub fn embed_jacobians(&self, target: &RingRef, offset: usize) -> (Vec<Vec<Polynomial>>, Vec<Vec<Polynomial>>) {
        let map: Vec<usize> = (0..self.nparams()).map(|i| offset + i).collect();
        let mv = |rows: &[Vec<Polynomial>]| {
            rows.iter()
                .map(|r| r.iter().map(|p| p.remap(target, &map)).collect())
                .collect()
        };
        (mv(self.jacobian()), mv(self.constraint_jacobian()))
    }

    /// Number of parameter points over a general image point.
    pub fn param_degree(&self) -> Result<u64> {
        if let Some(d) = self.pdeg.get() {
            return Ok(*d);
        }
        let f = *self.field();
        let mut rng = crate::random::rng_for(f.seed, "param_degree", 0);
        let u0 = self.regular_point(&mut rng)?;
        let target = self.eval(&u0);
        let m = self.nparams();
        let mut names: Vec<String> = (0..m).map(|i| format!("u{i}")).collect();
        names.push("s".into());
        let ring = Ring::new(&names, f, MonomialOrder::GrevLex)?;
        let (psi, cons) = self.embed(&ring, 0);
        let s = Polynomial::var(&ring, m);
        let mut gens: Vec<Polynomial> = psi
            .iter()
            .zip(&target)
            .map(|(p, c)| &(&s * p) - &Polynomial::constant(&ring, c.clone()))
            .collect();
        gens.extend(cons);
        let coeffs: Vec<Scalar> = (0..m).map(|_| f.random_nonzero(&mut rng)).collect();
        let mut all = coeffs.clone();
        all.push(f.zero());
        let form = Polynomial::linear_form(&ring, &all);
        let ideal = Ideal::new(&ring, gens)?.with_cap(self.cap);
        let d = match ideal.count_zero_dim(&form) {
            Ok(c) => c.distinct,
            Err(Error::NotZeroDimensional) | Err(Error::NotFinite) => return Err(Error::FiberNotFinite),
            Err(e) => return Err(e),
        };
        if d == 0 {
            return Err(Error::FiberNotFinite);
        }
        let _ = self.pdeg.set(d);
        Ok(d)
    }
}

fn second_derivatives(polys: &[Polynomial], u: &[Scalar]) -> Vec<Vec<Vector>> {
    let m = u.len();
    let mut h: Vec<Vec<Vector>> = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        let di: Vec<Polynomial> = polys.iter().map(|p| p.derivative(i)).collect();
        for j in i..m {
            let v: Vector = di.iter().map(|p| p.derivative(j).eval_unchecked(u)).collect();
            h[j][i] = v.clone();
            h[i][j] = v;
        }
    }
    h
}

/// Names `x0..xN` for the ambient coordinates.
pub fn ambient_ring(field: &FieldConfig, n: usize) -> Result<RingRef> {
    Ring::indexed("x", n + 1, *field)
}

/// Ideal of the closure of `{ Σ exprs }`: eliminate every parameter from
/// `x_k - exprs_k, constraints`. The expressions must already be closed
/// under scaling (a cone), so the result is homogeneous.
pub fn eliminate_to_ambient(
    ring: &RingRef,
    exprs: &[Polynomial],
    constraints: &[Polynomial],
    cap: u32,
) -> Result<Ideal> {
    let f = *ring.field();
    let m = ring.nvars();
    let n1 = exprs.len();
    let mut names: Vec<String> = (0..m).map(|i| format!("p{i}")).collect();
    let xs: Vec<String> = (0..n1).map(|k| format!("x{k}")).collect();
    names.extend(xs.iter().cloned());
    let big = Ring::new(&names, f, MonomialOrder::GrevLex)?;
    let map: Vec<usize> = (0..m).collect();
    let mut gens: Vec<Polynomial> = exprs
        .iter()
        .enumerate()
        .map(|(k, e)| &Polynomial::var(&big, m + k) - &e.remap(&big, &map))
        .collect();
    gens.extend(constraints.iter().map(|c| c.remap(&big, &map)));
    let out = Ideal::new(&big, gens)?.with_cap(cap).eliminate(&xs)?;
    debug_assert!(out.is_homogeneous());
    Ok(out)
}

/// Homogeneous ideal of the image closure.
pub fn implicitize_param(p: &ParamMap) -> Result<Ideal> {
    let m = p.nparams();
    let mut names: Vec<String> = (0..m).map(|i| format!("u{i}")).collect();
    names.push("a".into());
    let ring = Ring::new(&names, *p.field(), MonomialOrder::GrevLex)?;
    let (psi, cons) = p.embed(&ring, 0);
    let a = Polynomial::var(&ring, m);
    let exprs: Vec<Polynomial> = psi.iter().map(|q| &a * q).collect();
    let ideal = eliminate_to_ambient(&ring, &exprs, &cons, p.cap())?;
    let h = ideal.hilbert_dim_degree()?;
    if h.projective_dimension < p.expected_dim() as i64 {
        return Err(Error::ImageDegenerate {
            got: h.projective_dimension,
            expected: p.expected_dim(),
        });
    }
    Ok(ideal)
}

/// A variety known by a parametrization, an ideal, or both.
#[derive(Clone, Debug)]
pub struct VarietyHandle {
    name: String,
    param: Option<ParamMap>,
    ideal: OnceLock<Ideal>,
    hilbert: OnceLock<HilbertData>,
    cap: u32,
}

impl VarietyHandle {
    pub fn from_param(name: impl Into<String>, param: ParamMap) -> VarietyHandle {
        let cap = param.cap();
        VarietyHandle {
            name: name.into(),
            param: Some(param),
            ideal: OnceLock::new(),
            hilbert: OnceLock::new(),
            cap,
        }
    }

    pub fn from_ideal(name: impl Into<String>, ideal: Ideal) -> Result<VarietyHandle> {
        if !ideal.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let cap = ideal.degree_cap();
        let cell = OnceLock::new();
        let _ = cell.set(ideal);
        Ok(VarietyHandle {
            name: name.into(),
            param: None,
            ideal: cell,
            hilbert: OnceLock::new(),
            cap,
        })
    }

    /// Attach a known ideal to a parametrized handle.
    pub fn with_ideal(self, ideal: Ideal) -> Result<VarietyHandle> {
        if !ideal.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let cell = OnceLock::new();
        let _ = cell.set(ideal);
        Ok(VarietyHandle { ideal: cell, hilbert: OnceLock::new(), ..self })
    }

    pub fn with_cap(mut self, cap: u32) -> VarietyHandle {
        self.cap = cap;
        self.param = self.param.map(|p| p.with_cap(cap));
        self
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn param(&self) -> Option<&ParamMap> {
        self.param.as_ref()
    }

    pub fn require_param(&self) -> Result<&ParamMap> {
        self.param
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("{} has no parametrization", self.name)))
    }

    pub fn field(&self) -> FieldConfig {
        match (&self.param, self.ideal.get()) {
            (Some(p), _) => *p.field(),
            (None, Some(i)) => *i.ring().field(),
            (None, None) => unreachable!("a handle always has a parametrization or an ideal"),
        }
    }

    pub fn has_ideal(&self) -> bool {
        self.ideal.get().is_some()
    }

    /// The homogeneous ideal, implicitizing on first use.
    pub fn ideal(&self) -> Result<&Ideal> {
        if let Some(i) = self.ideal.get() {
            return Ok(i);
        }
        let i = implicitize_param(self.require_param()?)?;
        let _ = self.ideal.set(i);
        Ok(self.ideal.get().expect("just set"))
    }

    pub fn hilbert(&self) -> Result<HilbertData> {
        if let Some(h) = self.hilbert.get() {
            return Ok(h.clone());
        }
        let h = self.ideal()?.hilbert_dim_degree()?;
        let _ = self.hilbert.set(h.clone());
        Ok(h)
    }

    pub fn ambient_dim(&self) -> usize {
        match (&self.param, self.ideal.get()) {
            (Some(p), _) => p.ambient_dim(),
            (None, Some(i)) => i.ring().nvars() - 1,
            (None, None) => unreachable!("a handle always has a parametrization or an ideal"),
        }
    }

    /// Declared dimension when parametrized, Hilbert dimension otherwise.
    pub fn dim(&self) -> Result<i64> {
        match &self.param {
            Some(p) => Ok(p.expected_dim() as i64),
            None => Ok(self.hilbert()?.projective_dimension),
        }
    }

    /// Every ideal generator pulls back into the constraint ideal.
    pub fn check_consistency(&self) -> Result<bool> {
        let (Some(p), Some(i)) = (&self.param, self.ideal.get()) else {
            return Ok(true);
        };
        let cons = Ideal::new(p.ring(), p.constraints().to_vec())?.with_cap(self.cap);
        for g in i.gens() {
            let pulled = g.substitute(p.psi());
            if !cons.contains(&pulled)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A linear subspace of `P^N`, by rows spanning its lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSpace {
    rows: Vec<Vector>,
    field: FieldConfig,
}

impl LinearSpace {
    pub fn new(field: &FieldConfig, rows: Vec<Vector>) -> Result<LinearSpace> {
        let Some(len) = rows.first().map(|r| r.len()) else {
            return Err(Error::DimensionMismatch("empty linear space".into()));
        };
        if rows.iter().any(|r| r.len() != len) {
            return Err(Error::DimensionMismatch("rows of unequal length".into()));
        }
        if linalg::rank_of(field, &rows) != rows.len() {
            return Err(Error::DimensionMismatch("rows are dependent".into()));
        }
        Ok(LinearSpace { rows, field: *field })
    }

    pub fn point(field: &FieldConfig, coords: Vector) -> Result<LinearSpace> {
        LinearSpace::new(field, vec![coords])
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn ambient_dim(&self) -> usize {
        self.rows[0].len() - 1
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut r = self.rows.clone();
        r.push(v.to_vec());
        linalg::rank_of(&self.field, &r) == self.rows.len()
    }

    /// Linear forms cutting out the subspace.
    pub fn equations(&self) -> Vec<Vector> {
        Matrix::from_rows(&self.field, &self.rows, self.ambient_dim() + 1).kernel(&self.field)
    }

    /// `P^k` itself, parametrized by the affine chart `(1, u_1..u_k)`.
    pub fn as_param(&self) -> Result<ParamMap> {
        let f = self.field;
        let k = self.dim();
        let ring = Ring::indexed("w", k, f)?;
        let n1 = self.ambient_dim() + 1;
        let psi = (0..n1)
            .map(|c| {
                let mut p = Polynomial::constant(&ring, self.rows[0][c].clone());
                for i in 0..k {
                    p = &p + &Polynomial::var(&ring, i).scale(&self.rows[i + 1][c]);
                }
                p
            })
            .collect();
        ParamMap::new(&ring, psi, Vec::new(), k)
    }
}

/// Projection from `center`.
pub fn project(x: &VarietyHandle, center: &LinearSpace) -> Result<VarietyHandle> {
    if center.ambient_dim() != x.ambient_dim() {
        return Err(Error::DimensionMismatch("center lives in another ambient space".into()));
    }
    let forms = center.equations();
    if forms.is_empty() {
        return Err(Error::CenterContainsVariety);
    }
    let name = format!("proj({})", x.name());
    match x.param() {
        Some(p) => {
            let f = *p.field();
            let mut rng = crate::random::rng_for(f.seed, "project", 0);
            let mut inside = 0;
            for _ in 0..2 {
                let u = p.sample_point(&mut rng)?;
                if center.contains(&p.eval(&u)) {
                    inside += 1;
                }
            }
            if inside == 2 {
                return Err(Error::CenterContainsVariety);
            }
            let q = p.compose_linear(&forms);
            let u = p.regular_point(&mut rng)?;
            let r = q.projective_rank_at(&u);
            if r < q.expected_dim() as i64 {
                return Err(Error::ImageDegenerate { got: r, expected: q.expected_dim() });
            }
            Ok(VarietyHandle::from_param(name, q).with_cap(x.cap()))
        }
        None => {
            let ideal = x.ideal()?;
            Ok(VarietyHandle::from_ideal(name, project_ideal(ideal, &forms)?)?)
        }
    }
}

/// `(I + ⟨y_j - ℓ_j(x)⟩) ∩ k[y]`.
pub fn project_ideal(ideal: &Ideal, forms: &[Vector]) -> Result<Ideal> {
    let f = *ideal.ring().field();
    let n1 = ideal.ring().nvars();
    if ideal.contains_ideal(&Ideal::new(
        ideal.ring(),
        forms.iter().map(|r| Polynomial::linear_form(ideal.ring(), r)).collect(),
    )?)? {
        return Err(Error::CenterContainsVariety);
    }
    let mut names: Vec<String> = (0..n1).map(|i| format!("x{i}")).collect();
    let ys: Vec<String> = (0..forms.len()).map(|j| format!("y{j}")).collect();
    names.extend(ys.iter().cloned());
    let big = Ring::new(&names, f, MonomialOrder::GrevLex)?;
    let map: Vec<usize> = (0..n1).collect();
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.remap(&big, &map)).collect();
    for (j, r) in forms.iter().enumerate() {
        let mut full = r.clone();
        full.resize(n1 + forms.len(), f.zero());
        gens.push(&Polynomial::var(&big, n1 + j) - &Polynomial::linear_form(&big, &full));
    }
    let out = Ideal::new(&big, gens)?.with_cap(ideal.degree_cap()).eliminate(&ys)?;
    let target = Ring::indexed("x", forms.len(), f)?;
    let renamed: Vec<Polynomial> = out
        .gens()
        .iter()
        .map(|g| g.remap(&target, &(0..forms.len()).collect::<Vec<_>>()))
        .collect();
    Ok(Ideal::new(&target, renamed)?.with_cap(ideal.degree_cap()))
}

/// Join of two parametrized varieties placed in complementary coordinate
/// blocks: `(u_A, u_B, s) ↦ (ψ_A(u_A), s·ψ_B(u_B))`.
pub fn cone_join(a: &VarietyHandle, b: &VarietyHandle) -> Result<VarietyHandle> {
    let pa = a.require_param()?;
    let pb = b.require_param()?;
    if !pa.field().same_field(pb.field()) {
        return Err(Error::FieldMismatch);
    }
    let (ma, mb) = (pa.nparams(), pb.nparams());
    let names: Vec<String> = (0..ma + mb + 1).map(|i| format!("p{i}")).collect();
    let ring = Ring::new(&names, *pa.field(), MonomialOrder::GrevLex)?;
    let (psi_a, mut cons) = pa.embed(&ring, 0);
    let (psi_b, cons_b) = pb.embed(&ring, ma);
    cons.extend(cons_b);
    let s = Polynomial::var(&ring, ma + mb);
    let mut psi = psi_a;
    psi.extend(psi_b.iter().map(|p| &s * p));
    let dim = pa.expected_dim() + pb.expected_dim() + 1;
    let p = ParamMap::new(&ring, psi, cons, dim)?.with_cap(a.cap().max(b.cap()));
    Ok(VarietyHandle::from_param(format!("join({}, {})", a.name(), b.name()), p))
}

/// Multiplicity of the hypersurface `V(h)` at `point`; zero off it.
pub fn multiplicity_at(h: &Ideal, point: &[Scalar]) -> Result<u32> {
    let ring = h.ring();
    let f = *ring.field();
    if point.len() != ring.nvars() {
        return Err(Error::PointNotOnAmbient(format!(
            "expected {} coordinates, got {}",
            ring.nvars(),
            point.len()
        )));
    }
    let Some(i0) = point.iter().position(|c| !f.is_zero(c)) else {
        return Err(Error::PointNotOnAmbient("all coordinates vanish".into()));
    };
    let gb = h.groebner_basis(MonomialOrder::GrevLex)?;
    if gb.gens().len() != 1 || gb.gens()[0].is_constant() {
        return Err(Error::NotHypersurface);
    }
    let g = &gb.gens()[0];
    let images: Vec<Polynomial> = (0..ring.nvars())
        .map(|j| {
            let c = Polynomial::constant(ring, point[j].clone());
            if j == i0 {
                c
            } else {
                &c + &Polynomial::var(ring, j)
            }
        })
        .collect();
    let local = g.substitute(&images);
    Ok(local.min_degree().max(0) as u32)
}

/// Degree of the image: parameter points on `dim` random hyperplanes,
/// divided by the parametrization degree.
pub fn degree_by_slicing(p: &ParamMap) -> Result<u64> {
    let f = *p.field();
    let n = p.expected_dim();
    let mut rng = crate::random::rng_for(f.seed, "degree_by_slicing", 0);
    let extra: Vec<Polynomial> = (0..n)
        .map(|_| {
            let row: Vector = (0..=p.ambient_dim()).map(|_| f.random(&mut rng)).collect();
            let mut acc = Polynomial::zero(p.ring());
            for (c, q) in row.iter().zip(p.psi()) {
                acc = &acc + &q.scale(c);
            }
            acc
        })
        .collect();
    let mut gens = p.constraints().to_vec();
    gens.extend(extra);
    let coeffs: Vec<Scalar> = (0..p.nparams()).map(|_| f.random_nonzero(&mut rng)).collect();
    let form = Polynomial::linear_form(p.ring(), &coeffs);
    let c = Ideal::new(p.ring(), gens)?.with_cap(p.cap()).count_zero_dim(&form)?;
    let pd = p.param_degree()?;
    Ok(c.distinct / pd)
}
