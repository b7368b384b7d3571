//! Enumerative invariants by counting solutions of zero-dimensional
//! incidence systems: the tangent degree τ, the cetos ω_i, the secant
//! degree μ and the node count σ, plus the identity checks that relate
//! them.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::field::{FieldConfig, Scalar};
use crate::algebra::linalg::{self, Vector};
use crate::algebra::poly::{Polynomial, Ring, RingRef};
use crate::algebra::monomial::MonomialOrder;
use crate::groebner::{Ideal, ZeroDimCount};
use crate::error::{Error, Result};
use crate::random::majority;
use crate::tangential::{self, gauss_defect, tan_dim_fast, tangent_system};
use crate::varieties::{ParamMap, VarietyHandle};


/// A named integer identity `lhs = rhs` (or `lhs ≥ rhs` for bounds).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Identity {
    pub fn equality(name: &str, lhs: i64, rhs: i64) -> Identity {
        Identity {
            name: name.into(),
            lhs,
            rhs,
            pass: lhs == rhs,
            note: None,
        }
    }

    pub fn at_least(name: &str, lhs: i64, rhs: i64) -> Identity {
        Identity {
            name: name.into(),
            lhs,
            rhs,
            pass: lhs >= rhs,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Identity {
        self.note = Some(note.into());
        self
    }
}

/// Everything a run computes. Absent fields were not requested or do not
/// apply.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub omega: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg_tan: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_tan: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg_sec: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_sec: Option<i64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, serde_json::Value>,
    #[serde(default)]
    pub identities: Vec<Identity>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Solution counts with multiplicity, for comparison with the distinct
    /// counts above.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub totals: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub command: String,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub trials: usize,
}

impl InvariantReport {
    pub fn new(x: &VarietyHandle, trials: usize) -> InvariantReport {
        let f = x.field();
        InvariantReport {
            name: x.name().to_string(),
            seed: f.seed,
            prime: f.prime(),
            trials,
            ..Default::default()
        }
    }

    pub fn all_pass(&self) -> bool {
        self.identities.iter().all(|i| i.pass)
    }

    /// Every integer output, keyed by name, for cross-prime comparison.
    pub fn integers(&self) -> BTreeMap<String, i64> {
        let mut out = BTreeMap::new();
        let mut put = |k: &str, v: Option<i64>| {
            if let Some(v) = v {
                out.insert(k.to_string(), v);
            }
        };
        put("tau", self.tau.map(|v| v as i64));
        put("mu", self.mu.map(|v| v as i64));
        put("sigma", self.sigma.map(|v| v as i64));
        put("degree", self.degree.map(|v| v as i64));
        put("dim", self.dim);
        put("deg_tan", self.deg_tan.map(|v| v as i64));
        put("dim_tan", self.dim_tan);
        put("deg_sec", self.deg_sec.map(|v| v as i64));
        put("dim_sec", self.dim_sec);
        for (k, v) in &self.omega {
            out.insert(format!("omega_{k}"), *v as i64);
        }
        for (k, v) in &self.data {
            if let Some(i) = v.as_i64() {
                out.insert(k.clone(), i);
            }
        }
        for i in &self.identities {
            out.insert(format!("{}.lhs", i.name), i.lhs);
            out.insert(format!("{}.rhs", i.name), i.rhs);
        }
        out
    }
}

/// A distinct count and the solution count with multiplicity of the
/// underlying system, before normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Count {
    pub value: u64,
    pub total: u64,
}

fn random_vec<R: Rng + ?Sized>(f: &FieldConfig, n: usize, rng: &mut R) -> Vector {
    (0..n).map(|_| f.random(rng)).collect()
}

fn combine(ring: &RingRef, row: &[Scalar], polys: &[Polynomial]) -> Polynomial {
    let f = ring.field();
    let mut acc = Polynomial::zero(ring);
    for (c, p) in row.iter().zip(polys) {
        if !f.is_zero(c) {
            acc = &acc + &p.scale(c);
        }
    }
    acc
}

fn random_form<R: Rng + ?Sized>(ring: &RingRef, vars: &[usize], rng: &mut R) -> Polynomial {
    let f = *ring.field();
    let mut acc = Polynomial::zero(ring);
    for &v in vars {
        acc = &acc + &Polynomial::var(ring, v).scale(&f.random_nonzero(rng));
    }
    acc
}

/// The same variables followed by `y`.
fn with_y(ring: &RingRef) -> Result<RingRef> {
    let mut names = ring.vars().to_vec();
    names.push("y".into());
    Ring::new(&names, *ring.field(), MonomialOrder::GrevLex)
}

fn moved(polys: &[Polynomial], ring: &RingRef) -> Result<Vec<Polynomial>> {
    polys.iter().map(|p| p.to_ring(ring)).collect()
}

/// `y·ℓ(image) - 1` for a random form `ℓ`: discards solutions whose image
/// is the zero vector, which is not a projective point.
fn nonzero_image<R: Rng + ?Sized>(ring: &RingRef, image: &[Polynomial], y: usize, rng: &mut R) -> Polynomial {
    let f = *ring.field();
    let l = combine(ring, &random_vec(&f, image.len(), rng), image);
    &(&Polynomial::var(ring, y) * &l) - &Polynomial::one(ring)
}

fn count(ring: &RingRef, gens: Vec<Polynomial>, form: &Polynomial, cap: u32) -> Result<ZeroDimCount> {
    match Ideal::new(ring, gens)?.with_cap(cap).count_zero_dim(form) {
        Err(Error::NotZeroDimensional) => Err(Error::NotFinite),
        r => r,
    }
}

fn divide(c: ZeroDimCount, by: u64, what: &str) -> Result<Count> {
    if !c.distinct.is_multiple_of(by) {
        return Err(Error::GenericityWarning(format!(
            "{what}: {} solutions is not a multiple of {by}",
            c.distinct
        )));
    }
    Ok(Count {
        value: c.distinct / by,
        total: c.total,
    })
}

/// Majority over trials of a count; the reported total comes from the
/// first trial that agrees with the majority.
fn vote<F>(f: &FieldConfig, label: &str, trials: usize, mut once: F) -> Result<Count>
where
    F: FnMut(&mut rand_chacha::ChaCha8Rng) -> Result<Count>,
{
    let mut seen: Vec<Count> = Vec::new();
    let m = majority(f.seed, label, trials, |rng| {
        let c = once(rng)?;
        seen.push(c);
        Ok(c.value as i64)
    })?;
    let total = seen
        .iter()
        .find(|c| c.value as i64 == m.value)
        .map(|c| c.total)
        .unwrap_or(0);
    if seen.iter().any(|c| c.value as i64 == m.value && c.total != c.value) {
        log::debug!("{label}: solutions with multiplicity, totals {seen:?}");
    }
    Ok(Count {
        value: m.value as u64,
        total,
    })
}

/// Why τ is zero, if it is.
fn tau_precheck(x: &VarietyHandle, trials: usize) -> Result<Option<String>> {
    let p = x.require_param()?;
    let n = p.expected_dim();
    let dt = tan_dim_fast(x, trials)?;
    if dt < 2 * n {
        return Ok(Some(format!("dim Tan = {dt} < 2n = {}: tau is 0 by convention", 2 * n)));
    }
    if gauss_defect(x, trials)? > 0 {
        return Err(Error::Unsupported(
            "tau needs a generically finite Gauss map".into(),
        ));
    }
    Ok(None)
}

fn tau_once<R: Rng + ?Sized>(p: &ParamMap, rng: &mut R) -> Result<Count> {
    let f = *p.field();
    let m = p.nparams();
    let fr = tangential::regular_point(p, rng)?;
    let mut w = linalg::scale(&f, &f.random_nonzero(rng), &fr.point);
    for t in &fr.tangents {
        w = linalg::axpy(&f, &f.random_nonzero(rng), t, &w);
    }
    let (ring, exprs, cons) = tangent_system(p)?;
    let mut gens: Vec<Polynomial> = exprs
        .iter()
        .zip(&w)
        .map(|(e, c)| e - &Polynomial::constant(&ring, c.clone()))
        .collect();
    gens.extend(cons);
    let u: Vec<usize> = (0..m).collect();
    let form = random_form(&ring, &u, rng);
    let c = count(&ring, gens, &form, p.cap())?;
    if c.distinct == 0 {
        return Err(Error::GenericityWarning("no tangent space through a sampled point of Tan".into()));
    }
    divide(c, p.param_degree()?, "tau")
}

/// Number of tangent spaces through a general point of `Tan(X)`, or zero
/// when `dim Tan(X) < 2n`.
pub fn tau(x: &VarietyHandle, trials: usize) -> Result<Count> {
    if tau_precheck(x, trials)?.is_some() {
        return Ok(Count { value: 0, total: 0 });
    }
    let p = x.require_param()?;
    vote(p.field(), "tau", trials, |rng| tau_once(p, rng))
}

fn omega_top_once<R: Rng + ?Sized>(p: &ParamMap, rng: &mut R) -> Result<Count> {
    let f = *p.field();
    let m = p.nparams();
    let n = p.expected_dim();
    let (small, exprs, cons) = tangent_system(p)?;
    let ring = with_y(&small)?;
    let y = small.nvars();
    let exprs = moved(&exprs, &ring)?;
    let mut gens: Vec<Polynomial> = (0..2 * n)
        .map(|_| combine(&ring, &random_vec(&f, exprs.len(), rng), &exprs))
        .collect();
    gens.extend(moved(&cons, &ring)?);
    let chart_vars: Vec<usize> = (m..y).collect();
    gens.push(&random_form(&ring, &chart_vars, rng) - &Polynomial::one(&ring));
    gens.push(nonzero_image(&ring, &exprs, y, rng));
    let u: Vec<usize> = (0..m).collect();
    let form = random_form(&ring, &u, rng);
    let c = count(&ring, gens, &form, p.cap())?;
    divide(c, p.param_degree()?, "omega")
}

fn omega_top_param(p: &ParamMap, trials: usize, label: &str) -> Result<Count> {
    let n = p.expected_dim();
    if p.ambient_dim() < 2 * n {
        return Err(Error::Unsupported(format!(
            "omega_{n} needs N >= 2n, got N = {}",
            p.ambient_dim()
        )));
    }
    vote(p.field(), label, trials, |rng| omega_top_once(p, rng))
}

/// `ω_n`: tangent spaces meeting a general linear space of codimension 2n.
pub fn omega_top(x: &VarietyHandle, trials: usize) -> Result<Count> {
    let p = x.require_param()?;
    omega_top_param(p, trials, "omega_top")
}

/// `ω_i`: the top ceto of a general linear section of dimension `i`. The
/// section is cut on the parametrization by pulled-back hyperplanes.
pub fn omega_slice(x: &VarietyHandle, i: usize, trials: usize) -> Result<Count> {
    let p = x.require_param()?;
    let n = p.expected_dim();
    if i == 0 || i > n {
        return Err(Error::InvalidSpec(format!("omega index {i} outside 1..={n}")));
    }
    if i == n {
        return omega_top(x, trials);
    }
    let f = *p.field();
    let label = format!("omega_slice_{i}");
    vote(&f, &label, trials, |rng| {
        let extra: Vec<Polynomial> = (0..n - i)
            .map(|_| combine(p.ring(), &random_vec(&f, p.psi().len(), rng), p.psi()))
            .collect();
        let sliced = p.restrict(extra)?;
        match omega_top_once(&sliced, rng) {
            Err(Error::NoRegularPointFound(_)) | Err(Error::FiberNotFinite) => Err(Error::SliceSingularityHit),
            r => r,
        }
    })
}

/// Ring `u_0.., v_0.., a, z` plus `extra` trailing variables, with
/// `ψ(u)`, `ψ(v)`, the constraints on `u` and `v`, and the equation
/// `z·r(u - v) = 1` that keeps `u ≠ v`.
struct Pairs {
    ring: RingRef,
    pu: Vec<Polynomial>,
    pv: Vec<Polynomial>,
    cons: Vec<Polynomial>,
    a: usize,
}

impl Pairs {
    /// `aψ(u) + ψ(v)`.
    fn joined(&self) -> Vec<Polynomial> {
        let a = Polynomial::var(&self.ring, self.a);
        self.pu.iter().zip(&self.pv).map(|(x, y)| &(&a * x) + y).collect()
    }
}

fn pair_system<R: Rng + ?Sized>(p: &ParamMap, extra: &[&str], rng: &mut R) -> Result<Pairs> {
    let f = *p.field();
    let m = p.nparams();
    let mut names: Vec<String> = (0..m).map(|i| format!("u{i}")).collect();
    names.extend((0..m).map(|i| format!("v{i}")));
    names.push("a".into());
    names.push("z".into());
    names.extend(extra.iter().map(|s| s.to_string()));
    let ring = Ring::new(&names, f, MonomialOrder::GrevLex)?;
    let (pu, mut cons) = p.embed(&ring, 0);
    let (pv, cv) = p.embed(&ring, m);
    cons.extend(cv);
    let z = Polynomial::var(&ring, 2 * m + 1);
    let mut sep = Polynomial::zero(&ring);
    for i in 0..m {
        let d = &Polynomial::var(&ring, i) - &Polynomial::var(&ring, m + i);
        sep = &sep + &d.scale(&f.random_nonzero(rng));
    }
    cons.push(&(&z * &sep) - &Polynomial::one(&ring));
    Ok(Pairs { ring, pu, pv, cons, a: 2 * m })
}

fn ordered_pairs(c: ZeroDimCount, pd: u64, what: &str) -> Result<Count> {
    if !c.distinct.is_multiple_of(2) {
        return Err(Error::OddOrderedCount(c.distinct));
    }
    divide(c, 2 * pd * pd, what)
}

fn mu_once<R: Rng + ?Sized>(p: &ParamMap, rng: &mut R) -> Result<Count> {
    let f = *p.field();
    let m = p.nparams();
    let u0 = p.regular_point(rng)?;
    let v0 = p.regular_point(rng)?;
    let pt = linalg::axpy(
        &f,
        &f.random_nonzero(rng),
        &p.eval(&u0),
        &linalg::scale(&f, &f.random_nonzero(rng), &p.eval(&v0)),
    );
    let sys = pair_system(p, &["b"], rng)?;
    let ring = sys.ring.clone();
    let a = Polynomial::var(&ring, 2 * m);
    let b = Polynomial::var(&ring, 2 * m + 2);
    let mut gens = sys.cons.clone();
    for ((x, y), c) in sys.pu.iter().zip(&sys.pv).zip(&pt) {
        let e = &(&a * x) + &(&b * y);
        gens.push(&Polynomial::constant(&ring, c.clone()) - &e);
    }
    let uv: Vec<usize> = (0..2 * m).collect();
    let form = random_form(&ring, &uv, rng);
    let c = count(&ring, gens, &form, p.cap())?;
    if c.distinct == 0 {
        return Err(Error::GenericityWarning("sampled secant point lost".into()));
    }
    ordered_pairs(c, p.param_degree()?, "mu")
}

/// Number of secant lines through a general point of `Sec(X)`.
pub fn secant_mu(x: &VarietyHandle, trials: usize) -> Result<Count> {
    let p = x.require_param()?;
    vote(p.field(), "mu", trials, |rng| mu_once(p, rng))
}

fn sigma_once<R: Rng + ?Sized>(p: &ParamMap, rng: &mut R) -> Result<Count> {
    let f = *p.field();
    let m = p.nparams();
    let n = p.expected_dim();
    let sys = pair_system(p, &["y"], rng)?;
    let ring = sys.ring.clone();
    let exprs = sys.joined();
    let mut gens = sys.cons.clone();
    for _ in 0..=2 * n {
        gens.push(combine(&ring, &random_vec(&f, exprs.len(), rng), &exprs));
    }
    gens.push(nonzero_image(&ring, &exprs, 2 * m + 2, rng));
    let uv: Vec<usize> = (0..2 * m).collect();
    let form = random_form(&ring, &uv, rng);
    let c = count(&ring, gens, &form, p.cap())?;
    ordered_pairs(c, p.param_degree()?, "sigma")
}

/// Nodes of a general projection into `P^{2n}`: secant lines meeting a
/// general center of dimension `N - 2n - 1`.
pub fn sigma_nodes(x: &VarietyHandle, trials: usize) -> Result<Count> {
    let p = x.require_param()?;
    let n = p.expected_dim();
    let big_n = p.ambient_dim();
    if big_n < 2 * n {
        return Err(Error::Unsupported(format!("sigma needs N >= 2n, got N = {big_n}")));
    }
    if big_n == 2 * n {
        return Ok(Count { value: 0, total: 0 });
    }
    vote(p.field(), "sigma", trials, |rng| sigma_once(p, rng))
}

fn slice_once<R: Rng + ?Sized>(p: &ParamMap, rng: &mut R) -> Result<Count> {
    let f = *p.field();
    let ring = with_y(p.ring())?;
    let y = p.nparams();
    let psi = moved(p.psi(), &ring)?;
    let mut gens = moved(p.constraints(), &ring)?;
    for _ in 0..p.expected_dim() {
        gens.push(combine(&ring, &random_vec(&f, psi.len(), rng), &psi));
    }
    gens.push(nonzero_image(&ring, &psi, y, rng));
    let all: Vec<usize> = (0..y).collect();
    let form = random_form(&ring, &all, rng);
    let c = count(&ring, gens, &form, p.cap())?;
    divide(c, p.param_degree()?, "degree")
}

/// Degree of the image of a parametrization, by counting points on a
/// general linear section.
pub fn degree_count(p: &ParamMap, trials: usize) -> Result<Count> {
    vote(p.field(), "degree", trials, |rng| slice_once(p, rng))
}

/// `deg X` by slicing.
pub fn degree(x: &VarietyHandle, trials: usize) -> Result<u64> {
    Ok(degree_count(x.require_param()?, trials)?.value)
}

fn image_degree(h: &VarietyHandle, label: &str, trials: usize) -> Result<u64> {
    let p = h.require_param()?;
    let mut rng = crate::random::rng_for(p.field().seed, label, 0);
    let cut = p.cut_fibers(&mut rng)?;
    Ok(degree_count(&cut, trials)?.value)
}

/// `deg Tan(X)` as the degree of the tangent parametrization.
pub fn tan_degree_count(x: &VarietyHandle, trials: usize) -> Result<u64> {
    if tan_dim_fast(x, trials)? == x.ambient_dim() {
        return Ok(1);
    }
    image_degree(&tangential::tangent_handle(x)?, "cut:tangent", trials)
}

/// `deg Tan(X)` by slicing, or `ω_n / τ` when slicing hits the degree cap.
pub fn tan_degree(x: &VarietyHandle, trials: usize) -> Result<u64> {
    match tan_degree_count(x, trials) {
        Err(Error::DegreeCapExceeded(c)) => {
            let t = tau(x, trials)?.value;
            let w = if t > 0 { omega_top(x, trials)?.value } else { 0 };
            if t == 0 || w % t != 0 {
                return Err(Error::DegreeCapExceeded(c));
            }
            Ok(w / t)
        }
        r => r,
    }
}

/// `deg Sec(X)` as the degree of `(u, v, a) ↦ aψ(u) + ψ(v)` restricted
/// to `u ≠ v`.
pub fn sec_degree_count(x: &VarietyHandle, trials: usize) -> Result<u64> {
    let p = x.require_param()?;
    let dim_sec = tangential::sec_dim_fast(x, trials)?;
    if dim_sec == p.ambient_dim() {
        return Ok(1);
    }
    let mut rng = crate::random::rng_for(p.field().seed, "secant_pairs", 0);
    let sys = pair_system(p, &[], &mut rng)?;
    let map = ParamMap::new(&sys.ring, sys.joined(), sys.cons.clone(), dim_sec)?.with_cap(p.cap());
    image_degree(&VarietyHandle::from_param("pairs", map), "cut:secant", trials)
}

/// Operands of the double point formula `2σ = d(d-1) - Σ ω_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeveriData {
    pub degree: u64,
    pub sigma: u64,
    pub omega: Vec<u64>,
    pub identity: Identity,
}

pub fn severi_check(x: &VarietyHandle, trials: usize) -> Result<SeveriData> {
    let p = x.require_param()?;
    let n = p.expected_dim();
    let d = degree(x, trials)?;
    let sigma = sigma_nodes(x, trials)?.value;
    let omega = (1..=n)
        .map(|i| omega_slice(x, i, trials).map(|c| c.value))
        .collect::<Result<Vec<_>>>()?;
    let identity = severi_identity(d, sigma, &omega);
    Ok(SeveriData {
        degree: d,
        sigma,
        omega,
        identity,
    })
}

pub fn severi_identity(d: u64, sigma: u64, omega: &[u64]) -> Identity {
    let d = d as i64;
    let sum: i64 = omega.iter().map(|&w| w as i64).sum();
    Identity::equality("severi", 2 * sigma as i64, d * (d - 1) - sum)
}

fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// Dimensions and degrees of `Tan(X)` and `Sec(X)` in `P^N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TanSecData {
    pub ambient: usize,
    pub dim_tan: usize,
    pub deg_tan: u64,
    pub dim_sec: usize,
    pub deg_sec: u64,
}

/// The lower bounds on `deg Tan` and `deg Sec` that apply to the given
/// data. A tangential bound met with equality is flagged as minimal.
pub fn bounds_from(d: &TanSecData) -> Vec<Identity> {
    let big_n = d.ambient as i64;
    let mut out = Vec::new();
    if d.dim_tan < d.ambient {
        out.push(Identity::at_least("tan_proper_degree", d.deg_tan as i64, 3));
        if d.deg_tan == 3 {
            out.push(Identity::equality(
                "cubic_tan_is_sec_hypersurface",
                d.dim_tan as i64,
                big_n - 1,
            ));
        }
    }
    if d.dim_tan < d.dim_sec {
        let bound = 2 * (big_n - d.dim_tan as i64 + 1);
        let mut id = Identity::at_least("tan_degree_bound", d.deg_tan as i64, bound);
        if d.deg_tan as i64 == bound {
            id = id.with_note("minimal tangential degree");
        }
        out.push(id);
    }
    if d.dim_sec < d.ambient {
        let codim = big_n - d.dim_sec as i64;
        let bound = binom2(codim + 2);
        let mut id = Identity::at_least("sec_degree_bound", d.deg_sec as i64, bound);
        if d.deg_sec as i64 == bound {
            id = id.with_note("tight");
        }
        out.push(id);
    }
    out
}

/// Tangent and secant data by counting, then the bounds.
pub fn bounds_check(x: &VarietyHandle, trials: usize) -> Result<(TanSecData, Vec<Identity>)> {
    let p = x.require_param()?;
    let data = TanSecData {
        ambient: p.ambient_dim(),
        dim_tan: tan_dim_fast(x, trials)?,
        deg_tan: tan_degree(x, trials)?,
        dim_sec: tangential::sec_dim_fast(x, trials)?,
        deg_sec: sec_degree_count(x, trials)?,
    };
    let ids = bounds_from(&data);
    Ok((data, ids))
}

/// `6d + 4·HK + 2·K² - 12χ`.
pub fn surface_degtan_formula(d: i64, hk: i64, k2: i64, chi: i64) -> i64 {
    6 * d + 4 * hk + 2 * k2 - 12 * chi
}

/// Fill in τ, ω, μ, σ, degrees and every applicable identity.
pub fn report_all(x: &VarietyHandle, trials: usize) -> Result<InvariantReport> {
    let p = x.require_param()?;
    let n = p.expected_dim();
    let big_n = p.ambient_dim();
    let mut r = InvariantReport::new(x, trials);
    r.dim = Some(n as i64);
    r.ambient = Some(big_n);
    r.degree = Some(degree(x, trials)?);
    let dim_tan = tan_dim_fast(x, trials)?;
    let dim_sec = tangential::sec_dim_fast(x, trials)?;
    r.dim_tan = Some(dim_tan as i64);
    r.dim_sec = Some(dim_sec as i64);
    r.data.insert("gauss_defect".into(), gauss_defect(x, trials)?.into());

    if let Some(note) = tau_precheck(x, trials).unwrap_or(None) {
        r.tau = Some(0);
        r.notes.push(note);
    } else {
        match tau(x, trials) {
            Ok(c) => {
                r.tau = Some(c.value);
                r.totals.insert("tau".into(), c.total);
            }
            Err(e) => r.notes.push(format!("tau: {e}")),
        }
    }
    if big_n >= 2 * n {
        for i in 1..=n {
            let c = omega_slice(x, i, trials)?;
            r.omega.insert(i.to_string(), c.value);
            r.totals.insert(format!("omega_{i}"), c.total);
        }
    }
    let top = r.omega.get(&n.to_string()).copied();
    let deg_tan = match (tan_degree_count(x, trials), r.tau, top) {
        (Ok(d), Some(t), Some(w)) if t > 0 => {
            r.identities
                .push(Identity::equality("omega_tau_deg_tan", w as i64, (t * d) as i64));
            d
        }
        (Ok(d), _, _) => d,
        (Err(Error::DegreeCapExceeded(c)), Some(t), Some(w)) if t > 0 && w % t == 0 => {
            r.notes.push(format!(
                "deg Tan from omega_{n} / tau: slicing the tangent parametrization hit the degree cap {c}"
            ));
            w / t
        }
        (Err(e), _, _) => return Err(e),
    };
    r.deg_tan = Some(deg_tan);
    if dim_sec == 2 * n + 1 {
        let mu = secant_mu(x, trials)?;
        r.mu = Some(mu.value);
        r.totals.insert("mu".into(), mu.total);
    } else {
        r.notes.push(format!(
            "mu: dim Sec = {dim_sec} < {}, so secant lines through a general point of Sec are not finite in number",
            2 * n + 1
        ));
    }
    let deg_sec = sec_degree_count(x, trials)?;
    r.deg_sec = Some(deg_sec);
    if big_n >= 2 * n {
        let s = sigma_nodes(x, trials)?;
        r.sigma = Some(s.value);
        if let (true, Some(mu)) = (big_n > 2 * n, r.mu) {
            r.identities.push(Identity::equality(
                "sigma_mu_deg_sec",
                s.value as i64,
                (mu * deg_sec) as i64,
            ));
        }
        let omega: Vec<u64> = r.omega.values().copied().collect();
        r.identities.push(severi_identity(r.degree.unwrap(), s.value, &omega));
    }
    if let Some(t) = r.tau {
        r.identities.push(Identity::equality(
            "tau_zero_iff_tan_small",
            (t == 0) as i64,
            (dim_tan < 2 * n) as i64,
        ));
    }
    r.identities.extend(bounds_from(&TanSecData {
        ambient: big_n,
        dim_tan,
        deg_tan,
        dim_sec,
        deg_sec,
    }));
    Ok(r)
}
