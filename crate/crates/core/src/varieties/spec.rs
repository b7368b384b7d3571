//! JSON variety descriptions and the constructors behind them.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::field::FieldConfig;
use crate::algebra::linalg::Vector;
use crate::algebra::monomial::{Monomial, MonomialOrder};
use crate::algebra::parse::parse_in;
use crate::algebra::poly::{Polynomial, Ring, RingRef};
use crate::error::{Error, Result};
use crate::random::rng_for;
use crate::varieties::{cone_join, project, LinearSpace, ParamMap, VarietyHandle};

const ROTH_DRAWS: u64 = 3;

fn two() -> i64 {
    2
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum VarietySpec {
    Rnc {
        d: i64,
    },
    Scroll {
        a: Vec<i64>,
    },
    Veronese {
        n: i64,
        #[serde(default = "two")]
        d: i64,
    },
    Segre {
        a: i64,
        b: i64,
    },
    Roth {
        b: i64,
        #[serde(rename = "N")]
        n: i64,
    },
    Verra {
        d: i64,
    },
    Osculating {
        curve: Box<VarietySpec>,
        k: i64,
    },
    Custom {
        vars: Vec<String>,
        psi: Vec<String>,
        #[serde(default)]
        constraints: Vec<String>,
        #[serde(default)]
        dim: Option<usize>,
    },
    Linear {
        k: i64,
    },
    Tangent {
        of: Box<VarietySpec>,
    },
    Project {
        of: Box<VarietySpec>,
        center: Center,
    },
    Cone {
        vertex: Box<VarietySpec>,
        base: Box<VarietySpec>,
    },
}

/// Projection center: a named choice or explicit spanning rows.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Center {
    Named(String),
    Coords(Vec<Vec<i64>>),
}

impl VarietySpec {
    pub fn from_json(src: &str) -> Result<VarietySpec> {
        serde_json::from_str(src).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn from_value(v: &serde_json::Value) -> Result<VarietySpec> {
        serde_json::from_value(v.clone()).map_err(|e| Error::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("specs serialize")
    }
}

fn nonneg(v: i64, what: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::InvalidSpec(format!("{what} must be non-negative, got {v}")))
}

fn positive(v: i64, what: &str) -> Result<u32> {
    match nonneg(v, what)? {
        0 => Err(Error::InvalidSpec(format!("{what} must be positive"))),
        x => Ok(x),
    }
}

fn chart<R: Rng>(ring: &RingRef, vars: &[usize], rng: &mut R) -> Polynomial {
    let f = *ring.field();
    let mut coeffs = vec![f.zero(); ring.nvars()];
    for &v in vars {
        coeffs[v] = f.random_nonzero(rng);
    }
    &Polynomial::linear_form(ring, &coeffs) - &Polynomial::one(ring)
}

fn random_univariate<R: Rng>(ring: &RingRef, var: usize, deg: u32, rng: &mut R) -> Polynomial {
    let f = *ring.field();
    let t = Polynomial::var(ring, var);
    let mut p = Polynomial::zero(ring);
    for k in 0..=deg {
        let c = if k == deg { f.random_nonzero(rng) } else { f.random(rng) };
        p = &p + &t.pow(k).scale(&c);
    }
    p
}

pub fn rnc(field: &FieldConfig, d: u32) -> Result<ParamMap> {
    if d == 0 {
        return Err(Error::InvalidSpec("rnc degree must be positive".into()));
    }
    let ring = Ring::new(&["t"], *field, MonomialOrder::GrevLex)?;
    let t = Polynomial::var(&ring, 0);
    ParamMap::new(&ring, (0..=d).map(|k| t.pow(k)).collect(), Vec::new(), 1)
}

pub fn scroll(field: &FieldConfig, a: &[u32]) -> Result<ParamMap> {
    if a.is_empty() || a.iter().all(|&x| x == 0) {
        return Err(Error::InvalidSpec("a scroll needs a positive entry".into()));
    }
    let n = a.len();
    let mut names = vec!["t".to_string()];
    names.extend((1..=n).map(|i| format!("l{i}")));
    let ring = Ring::new(&names, *field, MonomialOrder::GrevLex)?;
    let t = Polynomial::var(&ring, 0);
    let mut psi = Vec::new();
    for (i, &ai) in a.iter().enumerate() {
        let l = Polynomial::var(&ring, i + 1);
        for k in 0..=ai {
            psi.push(&l * &t.pow(k));
        }
    }
    let mut rng = rng_for(field.seed, "chart:scroll", 0);
    let lam: Vec<usize> = (1..=n).collect();
    let c = chart(&ring, &lam, &mut rng);
    ParamMap::new(&ring, psi, vec![c], n)
}

/// Monomials of degree at most `d` in `n` variables, by degree.
fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=d {
        let mut layer = Vec::new();
        let mut e = vec![0u32; n];
        collect_degree(&mut e, 0, deg, &mut layer);
        out.extend(layer);
    }
    out
}

fn collect_degree(e: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i + 1 == e.len() {
        e[i] = left;
        out.push(Monomial::from_exponents(e));
        e[i] = 0;
        return;
    }
    if e.is_empty() {
        if left == 0 {
            out.push(Monomial::from_exponents(e));
        }
        return;
    }
    for k in (0..=left).rev() {
        e[i] = k;
        collect_degree(e, i + 1, left - k, out);
    }
    e[i] = 0;
}

pub fn veronese(field: &FieldConfig, n: u32, d: u32) -> Result<ParamMap> {
    let ring = Ring::indexed("u", n as usize, *field)?;
    let f = *field;
    let psi = monomials_up_to(n as usize, d)
        .into_iter()
        .map(|m| Polynomial::monomial(&ring, m, f.one()))
        .collect();
    ParamMap::new(&ring, psi, Vec::new(), n as usize)
}

pub fn segre(field: &FieldConfig, a: u32, b: u32) -> Result<ParamMap> {
    let mut names: Vec<String> = (1..=a).map(|i| format!("x{i}")).collect();
    names.extend((1..=b).map(|j| format!("y{j}")));
    let ring = Ring::new(&names, *field, MonomialOrder::GrevLex)?;
    let one = Polynomial::one(&ring);
    let mut xs = vec![one.clone()];
    xs.extend((0..a as usize).map(|i| Polynomial::var(&ring, i)));
    let mut ys = vec![one];
    ys.extend((0..b as usize).map(|j| Polynomial::var(&ring, a as usize + j)));
    let psi = xs.iter().flat_map(|x| ys.iter().map(move |y| x * y)).collect();
    ParamMap::new(&ring, psi, Vec::new(), (a + b) as usize)
}

/// A general member of `|bH + F|` on the cone `S(0,0,N-2)`, parametrized
/// by `(t, l0, l1, l2) ↦ (l0, l1, l2, l2·t, …, l2·t^{N-2})` subject to
/// `G(t; l) = 0` and a chart.
pub fn roth(field: &FieldConfig, b: u32, n: u32) -> Result<ParamMap> {
    if b == 0 {
        return Err(Error::InvalidSpec("roth needs b >= 1".into()));
    }
    if n < 3 {
        return Err(Error::InvalidSpec("roth needs N >= 3".into()));
    }
    let ring = Ring::new(&["t", "l0", "l1", "l2"], *field, MonomialOrder::GrevLex)?;
    let t = Polynomial::var(&ring, 0);
    let l: Vec<Polynomial> = (1..4).map(|i| Polynomial::var(&ring, i)).collect();
    let mut psi = vec![l[0].clone(), l[1].clone()];
    for k in 0..=n - 2 {
        psi.push(&l[2] * &t.pow(k));
    }
    for draw in 0..ROTH_DRAWS {
        let mut rng = rng_for(field.seed, "roth", draw);
        let mut g = Polynomial::zero(&ring);
        for a2 in 0..=b {
            for a1 in 0..=b - a2 {
                let a0 = b - a2 - a1;
                let c = random_univariate(&ring, 0, 1 + (n - 2) * a2, &mut rng);
                let mono = &(&l[0].pow(a0) * &l[1].pow(a1)) * &l[2].pow(a2);
                g = &g + &(&c * &mono);
            }
        }
        let c = chart(&ring, &[1, 2, 3], &mut rng);
        let p = ParamMap::new(&ring, psi.clone(), vec![g, c], 2)?;
        let mut probe = rng_for(field.seed, "roth:probe", draw);
        match p.regular_point(&mut probe) {
            Ok(_) => return Ok(p),
            Err(Error::NoRegularPointFound(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SmoothnessCheckFailed(format!(
        "no regular member of |{b}H+F| in {ROTH_DRAWS} draws"
    )))
}

/// Lines joining the twisted cubic in `x0..x3` to the line `x4, x5` along
/// a random map of degree `d - 3`.
pub fn verra(field: &FieldConfig, d: u32) -> Result<ParamMap> {
    if d < 4 {
        return Err(Error::InvalidSpec("verra needs d >= 4".into()));
    }
    let e = d - 3;
    let ring = Ring::new(&["t", "l1", "l2"], *field, MonomialOrder::GrevLex)?;
    let t = Polynomial::var(&ring, 0);
    let l1 = Polynomial::var(&ring, 1);
    let l2 = Polynomial::var(&ring, 2);
    let mut rng = rng_for(field.seed, "verra", 0);
    let p = random_univariate(&ring, 0, e, &mut rng);
    let q = random_univariate(&ring, 0, e, &mut rng);
    let mut psi: Vec<Polynomial> = (0..4).map(|k| &l1 * &t.pow(k)).collect();
    psi.push(&l2 * &p);
    psi.push(&l2 * &q);
    let c = chart(&ring, &[1, 2], &mut rng);
    ParamMap::new(&ring, psi, vec![c], 2)
}

/// The union of osculating `k`-spaces of an unconstrained curve.
pub fn osculating(curve: &ParamMap, k: u32) -> Result<ParamMap> {
    if curve.nparams() != 1 || curve.is_constrained() || curve.expected_dim() != 1 {
        return Err(Error::InvalidSpec("osculating scrolls need a one-parameter curve".into()));
    }
    if k == 0 || k as usize >= curve.ambient_dim() {
        return Err(Error::InvalidSpec(format!("osculating order {k} out of range")));
    }
    let field = *curve.field();
    let mut names = vec!["t".to_string()];
    names.extend((0..=k).map(|j| format!("l{j}")));
    let ring = Ring::new(&names, field, MonomialOrder::GrevLex)?;
    let (base, _) = curve.embed(&ring, 0);
    let mut derivs = vec![base];
    for j in 1..=k as usize {
        let next: Vec<Polynomial> = derivs[j - 1].iter().map(|p| p.derivative(0)).collect();
        derivs.push(next);
    }
    let psi = (0..=curve.ambient_dim())
        .map(|c| {
            let mut acc = Polynomial::zero(&ring);
            for (j, dj) in derivs.iter().enumerate() {
                acc = &acc + &(&Polynomial::var(&ring, j + 1) * &dj[c]);
            }
            acc
        })
        .collect();
    let mut rng = rng_for(field.seed, "chart:osculating", 0);
    let lam: Vec<usize> = (1..=k as usize + 1).collect();
    let c = chart(&ring, &lam, &mut rng);
    ParamMap::new(&ring, psi, vec![c], k as usize + 1)
}

pub fn custom(
    field: &FieldConfig,
    vars: &[String],
    psi: &[String],
    constraints: &[String],
    dim: Option<usize>,
) -> Result<ParamMap> {
    let ring = Ring::new(vars, *field, MonomialOrder::GrevLex)?;
    let psi: Vec<Polynomial> = psi.iter().map(|s| parse_in(s, &ring)).collect::<Result<_>>()?;
    let cons: Vec<Polynomial> = constraints.iter().map(|s| parse_in(s, &ring)).collect::<Result<_>>()?;
    if psi.len() < 2 {
        return Err(Error::InvalidSpec("psi needs at least two coordinates".into()));
    }
    let locus = vars.len().saturating_sub(cons.len());
    let mut rng = rng_for(field.seed, "custom:dim", 0);
    let r = match dim {
        Some(d) => d,
        None => {
            let trial = ParamMap::new(&ring, psi.clone(), cons.clone(), locus.min(psi.len() - 1))?;
            let u = trial.sample_point(&mut rng)?;
            let r = trial.projective_rank_at(&u);
            if r < 0 {
                return Err(Error::ImageDegenerate { got: r, expected: 0 });
            }
            r as usize
        }
    };
    let map = ParamMap::new(&ring, psi, cons, r)?;
    if r < locus {
        // e.g. homogeneous coordinates: cut the fibers down to points
        return map.cut_fibers(&mut rng);
    }
    Ok(map)
}

pub fn linear(field: &FieldConfig, k: u32) -> Result<ParamMap> {
    let rows: Vec<Vector> = (0..=k as usize)
        .map(|i| {
            let mut r = vec![field.zero(); k as usize + 1];
            r[i] = field.one();
            r
        })
        .collect();
    LinearSpace::new(field, rows)?.as_param()
}

fn center_space(x: &VarietyHandle, center: &Center, field: &FieldConfig) -> Result<LinearSpace> {
    let n1 = x.ambient_dim() + 1;
    match center {
        Center::Named(name) => {
            let mut rng = rng_for(field.seed, "center", 0);
            let coords: Vector = match name.as_str() {
                "random_point" => (0..n1).map(|_| field.random_nonzero(&mut rng)).collect(),
                "point_on_variety" => {
                    let p = x.require_param()?;
                    let u = p.regular_point(&mut rng)?;
                    p.eval(&u)
                }
                other => return Err(Error::InvalidSpec(format!("unknown center {other:?}"))),
            };
            LinearSpace::point(field, coords)
        }
        Center::Coords(rows) => {
            if rows.iter().any(|r| r.len() != n1) {
                return Err(Error::DimensionMismatch(format!("center rows need {n1} coordinates")));
            }
            let rows: Vec<Vector> = rows
                .iter()
                .map(|r| r.iter().map(|&c| field.from_i64(c)).collect())
                .collect();
            LinearSpace::new(field, rows)
        }
    }
}

fn scroll_name(a: &[u32]) -> String {
    let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("S({})", parts.join(","))
}

pub fn make_variety(spec: &VarietySpec, field: &FieldConfig) -> Result<VarietyHandle> {
    let f = field;
    Ok(match spec {
        VarietySpec::Rnc { d } => {
            let d = positive(*d, "d")?;
            VarietyHandle::from_param(format!("rnc({d})"), rnc(f, d)?)
        }
        VarietySpec::Scroll { a } => {
            let a: Vec<u32> = a.iter().map(|&x| nonneg(x, "scroll entry")).collect::<Result<_>>()?;
            VarietyHandle::from_param(scroll_name(&a), scroll(f, &a)?)
        }
        VarietySpec::Veronese { n, d } => {
            let (n, d) = (positive(*n, "n")?, positive(*d, "d")?);
            VarietyHandle::from_param(format!("v{d}(P{n})"), veronese(f, n, d)?)
        }
        VarietySpec::Segre { a, b } => {
            let (a, b) = (positive(*a, "a")?, positive(*b, "b")?);
            VarietyHandle::from_param(format!("P{a}xP{b}"), segre(f, a, b)?)
        }
        VarietySpec::Roth { b, n } => {
            let (b, n) = (positive(*b, "b")?, positive(*n, "N")?);
            VarietyHandle::from_param(format!("roth({b},{n})"), roth(f, b, n)?)
        }
        VarietySpec::Verra { d } => {
            let d = positive(*d, "d")?;
            VarietyHandle::from_param(format!("verra({d})"), verra(f, d)?)
        }
        VarietySpec::Osculating { curve, k } => {
            let c = make_variety(curve, f)?;
            let k = positive(*k, "k")?;
            let p = osculating(c.require_param()?, k)?;
            VarietyHandle::from_param(format!("osc{k}({})", c.name()), p)
        }
        VarietySpec::Custom { vars, psi, constraints, dim } => {
            VarietyHandle::from_param("custom", custom(f, vars, psi, constraints, *dim)?)
        }
        VarietySpec::Linear { k } => {
            let k = nonneg(*k, "k")?;
            VarietyHandle::from_param(format!("P{k}"), linear(f, k)?)
        }
        VarietySpec::Tangent { of } => {
            let x = make_variety(of, f)?;
            crate::tangential::tangent_handle(&x)?
        }
        VarietySpec::Project { of, center } => {
            let x = make_variety(of, f)?;
            let c = center_space(&x, center, f)?;
            project(&x, &c)?
        }
        VarietySpec::Cone { vertex, base } => {
            let v = make_variety(vertex, f)?;
            let b = make_variety(base, f)?;
            cone_join(&v, &b)?
        }
    })
}
