//! Acceptance criteria, one status line each. Runs without the libtest
//! harness so the lines always reach stdout; exits nonzero on any FAIL.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tanvar_core::algebra::linalg::Matrix;
use tanvar_core::algebra::{FieldConfig, Polynomial, Ring, Scalar, DEFAULT_PRIME, VERIFY_PRIME};
use tanvar_core::algebra::{parse_in, MonomialOrder};
use tanvar_core::groebner::Ideal;
use tanvar_core::invariants::{self, Identity, TanSecData};
use tanvar_core::localgeom::{self, SecondFF};
use tanvar_core::random::rng_for;
use tanvar_core::runner::{self, Command, RunConfig};
use tanvar_core::tangential;
use tanvar_core::varieties::{self, make_variety, LinearSpace, VarietyHandle, VarietySpec};
use tanvar_core::Error;

const TRIALS: usize = 3;
const SEEDS: [u64; 3] = [42, 1042, 2042];

type Outcome = Result<Status, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

enum Status {
    Pass(String),
    Skip(String),
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e(err: Error) -> String {
    format!("{}: {err}", err.kind())
}

fn fields() -> Vec<FieldConfig> {
    let mut out = Vec::new();
    for p in [DEFAULT_PRIME, VERIFY_PRIME] {
        for s in SEEDS {
            out.push(FieldConfig::prime_field(p, s).unwrap());
        }
    }
    out
}

fn tag(f: &FieldConfig) -> String {
    format!("p={} seed={}", f.prime().unwrap(), f.seed)
}

fn h(spec: &str, f: &FieldConfig) -> Result<VarietyHandle, String> {
    make_variety(&VarietySpec::from_json(spec).map_err(e)?, f).map_err(e)
}

fn dd(x: &VarietyHandle) -> Result<(i64, i64), String> {
    let d = x.hilbert().map_err(e)?;
    Ok((d.projective_dimension, d.degree))
}

fn tau(x: &VarietyHandle) -> Result<u64, String> {
    Ok(invariants::tau(x, TRIALS).map_err(e)?.value)
}

fn omega(x: &VarietyHandle, i: usize) -> Result<u64, String> {
    let n = x.dim().map_err(e)? as usize;
    let c = if i == n { invariants::omega_top(x, TRIALS) } else { invariants::omega_slice(x, i, TRIALS) };
    Ok(c.map_err(e)?.value)
}

fn mu(x: &VarietyHandle) -> Result<u64, String> {
    Ok(invariants::secant_mu(x, TRIALS).map_err(e)?.value)
}

fn sigma(x: &VarietyHandle) -> Result<u64, String> {
    Ok(invariants::sigma_nodes(x, TRIALS).map_err(e)?.value)
}

fn tan(x: &VarietyHandle) -> Result<VarietyHandle, String> {
    tangential::tangent_variety(x).map_err(e)
}

fn sec(x: &VarietyHandle) -> Result<VarietyHandle, String> {
    tangential::secant_variety(x).map_err(e)
}

fn point_on(x: &VarietyHandle, label: &str) -> Result<Vec<Scalar>, String> {
    let p = x.require_param().map_err(e)?;
    let mut rng = rng_for(p.field().seed, label, 0);
    let u = p.regular_point(&mut rng).map_err(e)?;
    Ok(p.eval(&u))
}

fn bound<'a>(ids: &'a [Identity], name: &str) -> Result<&'a Identity, String> {
    ids.iter().find(|i| i.name == name).ok_or_else(|| format!("no {name} check"))
}

fn c1() -> Outcome {
    for f in fields() {
        let x = h(r#"{"type":"rnc","d":3}"#, &f)?;
        let t = tan(&x)?;
        ensure!(dd(&t)? == (2, 4), "Tan dim/deg {:?} at {}", dd(&t)?, tag(&f));
        ensure!(tau(&x)? == 1, "tau {} at {}", tau(&x)?, tag(&f));
        ensure!(mu(&x)? == 1, "mu at {}", tag(&f));
        let q = point_on(&x, "c1")?;
        let m = varieties::multiplicity_at(t.ideal().map_err(e)?, &q).map_err(e)?;
        ensure!(m == 2, "mult along the curve {m} at {}", tag(&f));
    }
    Ok(Status::Pass("Tan quartic surface, tau=1, mu=1, mult 2 along the curve".into()))
}

fn c2() -> Outcome {
    for f in fields() {
        for d in 3..=6u64 {
            let x = h(&format!(r#"{{"type":"rnc","d":{d}}}"#), &f)?;
            let by_elim = dd(&tan(&x)?)?;
            ensure!(by_elim == (2, 2 * d as i64 - 2), "rnc({d}) elimination {by_elim:?} at {}", tag(&f));
            let (w, t) = (omega(&x, 1)?, tau(&x)?);
            ensure!(t > 0 && w % t == 0 && w / t == 2 * d - 2, "rnc({d}) omega/tau = {w}/{t} at {}", tag(&f));
        }
    }
    Ok(Status::Pass("deg Tan(rnc(d)) = 2d-2 for d=3..6 by elimination and omega/tau".into()))
}

fn c3() -> Outcome {
    for f in fields() {
        let v = h(r#"{"type":"veronese","n":2}"#, &f)?;
        let (s, t) = (sec(&v)?, tan(&v)?);
        ensure!(dd(&s)? == (4, 3) && dd(&t)? == (4, 3), "Sec/Tan not cubic hypersurfaces at {}", tag(&f));
        let same = s.ideal().map_err(e)?.same_ideal(t.ideal().map_err(e)?).map_err(e)?;
        ensure!(same, "Sec != Tan at {}", tag(&f));
        ensure!(tau(&v)? == 2, "tau at {}", tag(&f));
        ensure!(omega(&v, 2)? == 6, "omega_2 at {}", tag(&f));
        let (_, ids) = invariants::bounds_check(&v, TRIALS).map_err(e)?;
        let b = bound(&ids, "sec_degree_bound")?;
        ensure!(b.pass && (b.lhs, b.rhs) == (3, 3) && b.note.as_deref() == Some("tight"), "secant bound {b:?}");
    }
    Ok(Status::Pass("Sec = Tan cubic in P5, tau=2, omega_2=6, secant bound tight at 3".into()))
}

fn c4() -> Outcome {
    let mut extended = String::new();
    for f in fields() {
        let x = h(r#"{"type":"segre","a":2,"b":2}"#, &f)?;
        let t0 = Instant::now();
        let d = tangential::tan_dim_fast(&x, TRIALS).map_err(e)?;
        ensure!(t0.elapsed() < Duration::from_secs(1), "tan_dim_fast took {:?}", t0.elapsed());
        ensure!(d == 7, "tan_dim_fast {d} at {}", tag(&f));
        match tan(&x) {
            Ok(t) => {
                ensure!(dd(&t)? == (7, 3), "Tan {:?} at {}", dd(&t)?, tag(&f));
                extended = "full elimination gives the cubic hypersurface".into();
            }
            Err(m) if m.starts_with("DegreeCapExceeded") => {
                return Ok(Status::Skip(format!("tan_dim_fast=7; extended elimination hit the degree cap ({m})")));
            }
            Err(m) => return Err(m),
        }
    }
    Ok(Status::Pass(format!("tan_dim_fast=7; {extended}")))
}

/// Parameter directions along the ruling of a scroll at the frame point.
fn ruling_directions(ff: &SecondFF, x: &VarietyHandle) -> Result<Vec<Vec<Scalar>>, String> {
    let p = x.require_param().map_err(e)?;
    let f = *p.field();
    let mut rows = p.constraint_gradients_at(&ff.frame.params);
    let mut t = vec![f.zero(); p.nparams()];
    t[0] = f.one();
    rows.push(t);
    Matrix::from_rows(&f, &rows, p.nparams())
        .kernel(&f)
        .iter()
        .map(|v| ff.direction(v).ok_or_else(|| "ruling direction outside the chart".to_string()))
        .collect()
}

fn c5() -> Outcome {
    for f in fields() {
        let s = h(r#"{"type":"scroll","a":[1,2]}"#, &f)?;
        ensure!(tau(&s)? == 2, "tau at {}", tag(&f));
        ensure!(omega(&s, 2)? == 2, "omega_2 at {}", tag(&f));
        ensure!(omega(&s, 1)? == 4, "omega_1 at {}", tag(&f));
        let sev = invariants::severi_check(&s, TRIALS).map_err(e)?;
        ensure!(sev.identity == Identity::equality("severi", 0, 0) && sev.omega == [4, 2], "severi {sev:?}");
        let fd = localgeom::focal_at(&s).map_err(e)?;
        let r = ruling_directions(&fd.ff, &s)?;
        ensure!(r.len() == 1, "ruling directions {}", r.len());
        let ring = fd.ff.ring().clone();
        let ell = &Polynomial::var(&ring, 0).scale(&r[0][1]) - &Polynomial::var(&ring, 1).scale(&r[0][0]);
        let det = fd.focal_ideal.gens()[0].clone();
        ensure!(det.total_degree() == 2, "focal determinant degree {}", det.total_degree());
        let divides = Ideal::new(&ring, vec![ell]).map_err(e)?.contains(&det).map_err(e)?;
        ensure!(divides, "ruling form does not divide the focal determinant at {}", tag(&f));
        for q in &fd.ff.quadrics {
            ensure!(f.is_zero(&q.evaluate(&r[0]).map_err(e)?), "ruling direction not in Bs|II|");
        }
    }
    Ok(Status::Pass("tau=2, omega_2=2, omega_1=4, Severi 0=6-(4+2), ruling form divides focal conic, ruling in Bs|II|".into()))
}

fn c6() -> Outcome {
    for f in fields() {
        let x = h(r#"{"type":"scroll","a":[2,3]}"#, &f)?;
        ensure!(dd(&sec(&x)?)? == (5, 3), "Sec at {}", tag(&f));
        ensure!(dd(&tan(&x)?)? == (4, 6), "Tan at {}", tag(&f));
        let (_, ids) = invariants::bounds_check(&x, TRIALS).map_err(e)?;
        let t = bound(&ids, "tan_degree_bound")?;
        ensure!(t.pass && t.note.as_deref() == Some("minimal tangential degree"), "tan bound {t:?}");
        let s = bound(&ids, "sec_degree_bound")?;
        ensure!(s.pass && s.note.as_deref() == Some("tight"), "sec bound {s:?}");
        ensure!(sigma(&x)? == 3 && mu(&x)? == 1, "sigma/mu at {}", tag(&f));
        let sev = invariants::severi_check(&x, TRIALS).map_err(e)?;
        ensure!(sev.identity == Identity::equality("severi", 6, 6) && sev.omega == [8, 6], "severi {sev:?}");
    }
    Ok(Status::Pass("Sec (5,3), Tan (4,6) minimal, sigma=3, mu=1, Severi 6=20-(8+6)".into()))
}

fn c7() -> Outcome {
    for f in fields() {
        let x = h(r#"{"type":"cone","vertex":{"type":"linear","k":1},"base":{"type":"rnc","d":3}}"#, &f)?;
        ensure!(dd(&x)? == (3, 3), "X {:?} at {}", dd(&x)?, tag(&f));
        let t = tan(&x)?;
        ensure!(dd(&t)? == (4, 4), "Tan {:?} at {}", dd(&t)?, tag(&f));
        let line = h(r#"{"type":"linear","k":1}"#, &f)?;
        let base = tangential::tangent_handle(&h(r#"{"type":"rnc","d":3}"#, &f)?).map_err(e)?;
        let j = varieties::cone_join(&line, &base).map_err(e)?;
        let same = j.ideal().map_err(e)?.same_ideal(t.ideal().map_err(e)?).map_err(e)?;
        ensure!(same, "Tan(X) != join(L, Tan(rnc(3))) at {}", tag(&f));
    }
    Ok(Status::Pass("S(0,0,3) has dim 3, deg 3; Tan = join(L, Tan(rnc(3))) with dim 4, deg 4".into()))
}

fn c8() -> Outcome {
    for f in fields() {
        for d in [4, 5] {
            let y = h(&format!(r#"{{"type":"verra","d":{d}}}"#), &f)?;
            let t = tan(&y)?;
            ensure!(dd(&t)? == (4, 4), "Tan(verra({d})) {:?} at {}", dd(&t)?, tag(&f));
            if d == 4 {
                continue;
            }
            ensure!(mu(&y)? == 1, "mu at {}", tag(&f));
            // a general point of the cone over the twisted cubic with vertex line
            let mut rng = rng_for(f.seed, "c8", 0);
            let (s, a, b) = (f.random_nonzero(&mut rng), f.random_nonzero(&mut rng), f.random_nonzero(&mut rng));
            let q = vec![f.one(), s.clone(), f.pow(&s, 2), f.pow(&s, 3), a, b];
            let m = varieties::multiplicity_at(t.ideal().map_err(e)?, &q).map_err(e)?;
            let yq = varieties::project(&y, &LinearSpace::point(&f, q).map_err(e)?).map_err(e)?;
            let tq = tau(&yq)?;
            ensure!(m == 2 && tq == 2, "mult {m}, tau(Y_q) {tq} at {}", tag(&f));
            ensure!(tq as i64 == 4 - m as i64, "tau(Y_q) != 4 - mult");
        }
    }
    Ok(Status::Pass("verra(5): mu=1, Tan (4,4); cone point q has mult 2 and tau(Y_q)=2=4-mult".into()))
}

fn c9() -> Outcome {
    for f in fields() {
        let r = h(r#"{"type":"roth","b":2,"N":5}"#, &f)?;
        let d = invariants::degree(&r, TRIALS).map_err(e)?;
        ensure!(d == 7, "degree {d} at {}", tag(&f));
        let (t, w, m) = (tau(&r)?, omega(&r, 2)?, mu(&r)?);
        ensure!((t, w, m) == (4, 16, 4), "tau {t}, omega_2 {w}, mu {m} at {}", tag(&f));
        let dt = invariants::tan_degree(&r, TRIALS).map_err(e)?;
        ensure!(dt == w / t && dt == 2 * (5 - 4 + 1), "deg Tan {dt} at {}", tag(&f));
    }
    let report = invariants::report_all(&h(r#"{"type":"roth","b":2,"N":5}"#, &FieldConfig::default())?, TRIALS).map_err(e)?;
    ensure!(report.all_pass(), "report-all identities {:?}", report.identities);
    Ok(Status::Pass("roth(2,5): degree 7, tau=4, mu=4, omega_2=16, deg Tan=16/4=4".into()))
}

fn dev_family(rows: &[&[&str]]) -> Vec<Vec<Polynomial>> {
    let ring = Ring::new(&["t"], FieldConfig::default(), MonomialOrder::GrevLex).unwrap();
    rows.iter().map(|r| r.iter().map(|s| parse_in(s, &ring).unwrap()).collect()).collect()
}

fn c10() -> Outcome {
    let f = FieldConfig::default();
    for spec in [
        r#"{"type":"rnc","d":2}"#,
        r#"{"type":"rnc","d":3}"#,
        r#"{"type":"rnc","d":4}"#,
        r#"{"type":"scroll","a":[1,2]}"#,
        r#"{"type":"project","of":{"type":"veronese","n":2},"center":"random_point"}"#,
    ] {
        let fd = localgeom::focal_at(&h(spec, &f)?).map_err(e)?;
        ensure!(fd.focal_ideal.gens().iter().all(|g| g.is_homogeneous()), "focal ideal of {spec} not homogeneous");
    }
    for spec in [
        r#"{"type":"rnc","d":4}"#,
        r#"{"type":"rnc","d":5}"#,
        r#"{"type":"veronese","n":2}"#,
        r#"{"type":"scroll","a":[2,3]}"#,
    ] {
        let x = h(spec, &f)?;
        let (t, s) = (tan(&x)?, sec(&x)?);
        let inside = t.ideal().map_err(e)?.contains_ideal(s.ideal().map_err(e)?).map_err(e)?;
        ensure!(inside, "Tan not inside Sec for {spec}");
    }
    for spec in [r#"{"type":"rnc","d":4}"#, r#"{"type":"rnc","d":5}"#] {
        let x = h(spec, &f)?;
        let mut rng = rng_for(f.seed, "c10", 0);
        let c: Vec<Scalar> = (0..=x.ambient_dim()).map(|_| f.random(&mut rng)).collect();
        let center = LinearSpace::point(&f, c).map_err(e)?;
        let t = tan(&x)?;
        let projected_tan = varieties::project_ideal(t.ideal().map_err(e)?, &center.equations()).map_err(e)?;
        let tan_of_projection = tan(&varieties::project(&x, &center).map_err(e)?)?;
        let same = projected_tan.same_ideal(tan_of_projection.ideal().map_err(e)?).map_err(e)?;
        ensure!(same, "Tan(X)_p != Tan(X_p) for {spec}");
    }
    for (spec, expect) in [
        (r#"{"type":"rnc","d":3}"#, 2),
        (r#"{"type":"scroll","a":[1,2]}"#, 4),
        (r#"{"type":"veronese","n":2}"#, 4),
        (r#"{"type":"segre","a":2,"b":2}"#, 7),
    ] {
        let x = h(spec, &f)?;
        let ff = localgeom::second_ff(&x).map_err(e)?;
        let via_ff = ff.n() as i64 + 1 + localgeom::quadric_image_dim(&ff).map_err(e)?;
        let fast = tangential::tan_dim_fast(&x, TRIALS).map_err(e)? as i64;
        ensure!(via_ff == expect && fast == expect, "{spec}: quadric map {via_ff}, fast {fast}, want {expect}");
    }
    let lines = dev_family(&[&["1", "t", "t^2", "t^3"], &["0", "1", "2*t", "3*t^2"]]);
    let planes = dev_family(&[
        &["1", "t", "t^2", "t^3", "t^4"],
        &["0", "1", "2*t", "3*t^2", "4*t^3"],
        &["0", "0", "2", "6*t", "12*t^2"],
    ]);
    let rulings = dev_family(&[&["1", "t", "0", "0"], &["0", "0", "1", "t"]]);
    let got: Vec<bool> = [lines, planes, rulings]
        .iter()
        .map(|fam| localgeom::developable_check(fam, TRIALS).map(|d| d.developable))
        .collect::<Result<_, _>>()
        .map_err(e)?;
    ensure!(got == [true, true, false], "developable_check gave {got:?}");
    for spec in [r#"{"type":"rnc","d":3}"#, r#"{"type":"scroll","a":[1,2]}"#, r#"{"type":"verra","d":5}"#] {
        let mut seen = Vec::new();
        for seed in 1..=5u64 {
            let g = FieldConfig::prime_field(DEFAULT_PRIME, seed).unwrap();
            let x = h(spec, &g)?;
            let n = x.dim().map_err(e)? as usize;
            // secant lines through a general point are finite in number only when N = 2n + 1
            let mu_if_finite = || if x.ambient_dim() == 2 * n + 1 { mu(&x).map(Some) } else { Ok(None) };
            let got = (|| Ok::<_, String>((tau(&x)?, omega(&x, n)?, mu_if_finite()?)))();
            seen.push(got.map_err(|m| format!("{spec} seed {seed}: {m}"))?);
        }
        ensure!(seen.windows(2).all(|w| w[0] == w[1]), "{spec} varies with the seed: {seen:?}");
    }
    let cfg = RunConfig::new(VarietySpec::from_json(r#"{"type":"scroll","a":[1,2]}"#).unwrap(), Command::ReportAll);
    let a = serde_json::to_string(&runner::run(&cfg).map_err(e)?).unwrap();
    let b = serde_json::to_string(&runner::run(&cfg).map_err(e)?).unwrap();
    ensure!(a == b, "report-all output differs between identical runs");
    Ok(Status::Pass(
        "focal homogeneity x5, Tan in Sec x4, projection commutes x2, quadric-map dimension x4, developability x3, seeds x5"
            .into(),
    ))
}

/// Brute-force tangent-space counts over `F_101`, independent of the library.
mod oracle {
    use rand::Rng;

    pub const P: u64 = 101;

    fn inv(a: u64) -> u64 {
        let mut r = 1;
        let (mut b, mut e) = (a % P, P - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    }

    /// Row echelon form in place; returns the rank.
    fn echelon(m: &mut [Vec<u64>]) -> usize {
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
            m.swap(rank, piv);
            let s = inv(m[rank][c]);
            for x in m[rank].iter_mut() {
                *x = *x * s % P;
            }
            for r in 0..m.len() {
                if r != rank && m[r][c] != 0 {
                    let k = m[r][c];
                    for j in 0..cols {
                        m[r][j] = (m[r][j] + P * P - k * m[rank][j]) % P;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn rank(rows: &[Vec<u64>]) -> usize {
        echelon(&mut rows.to_vec())
    }

    /// Linear equations cutting out the span of `rows`: the kernel of its
    /// echelon form.
    pub fn equations(rows: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let mut m = rows.to_vec();
        let r = echelon(&mut m);
        let n = rows[0].len();
        let pivots: Vec<usize> = m[..r].iter().map(|row| row.iter().position(|&x| x != 0).unwrap()).collect();
        (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0; n];
                v[free] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = (P - m[i][free]) % P;
                }
                v
            })
            .collect()
    }

    fn dot(a: &[u64], b: &[u64]) -> u64 {
        a.iter().zip(b).map(|(x, y)| x * y % P).sum::<u64>() % P
    }

    pub fn contains(eqs: &[Vec<u64>], w: &[u64]) -> bool {
        eqs.iter().all(|e| dot(e, w) == 0)
    }

    pub fn p1() -> Vec<(u64, u64)> {
        let mut v: Vec<(u64, u64)> = (0..P).map(|t| (1, t)).collect();
        v.push((0, 1));
        v
    }

    fn pw(a: u64, e: u32) -> u64 {
        (0..e).fold(1, |r, _| r * a % P)
    }

    /// Tangent lines of the rational normal curve of degree `d`, spanned by
    /// the two partials of `(s^d, s^(d-1) t, ..., t^d)`.
    pub fn rnc_tangents(d: u32) -> Vec<Vec<Vec<u64>>> {
        p1().into_iter()
            .map(|(s, t)| {
                let ds = (0..=d).map(|i| (d - i) as u64 * pw(s, (d - i).saturating_sub(1)) % P * pw(t, i) % P).collect();
                let dt = (0..=d).map(|i| i as u64 * pw(s, d - i) % P * pw(t, i.saturating_sub(1)) % P).collect();
                vec![ds, dt]
            })
            .collect()
    }

    /// Tangent planes of `(a s, a t, b s^2, b s t, b t^2)`.
    pub fn s12_tangents() -> Vec<Vec<Vec<u64>>> {
        let mut out = Vec::new();
        for (s, t) in p1() {
            for (a, b) in p1() {
                let rows = vec![
                    vec![s, t, 0, 0, 0],
                    vec![0, 0, s * s % P, s * t % P, t * t % P],
                    vec![a, 0, 2 * b * s % P, b * t % P, 0],
                    vec![0, a, 0, b * s % P, 2 * b * t % P],
                ];
                if rank(&rows) == 3 {
                    out.push(rows);
                }
            }
        }
        out
    }

    pub fn random_in<R: Rng>(rows: &[Vec<u64>], rng: &mut R) -> Vec<u64> {
        let n = rows[0].len();
        let mut w = vec![0; n];
        for r in rows {
            let c = rng.gen_range(0..P);
            for j in 0..n {
                w[j] = (w[j] + c * r[j]) % P;
            }
        }
        w
    }

    pub fn random_point<R: Rng>(n: usize, rng: &mut R) -> Vec<u64> {
        (0..n).map(|_| rng.gen_range(0..P)).collect()
    }

    /// Largest count reached by at least 2% of the samples: general
    /// positions whose incidences are all defined over the prime field.
    pub fn generic_max(counts: &[usize]) -> usize {
        let floor = counts.len() / 50;
        (0..=counts.iter().copied().max().unwrap_or(0))
            .rev()
            .find(|&c| counts.iter().filter(|&&x| x == c).count() > floor)
            .unwrap_or(0)
    }

    /// Most frequent count.
    pub fn mode(counts: &[usize]) -> usize {
        let top = counts.iter().copied().max().unwrap_or(0);
        (0..=top).max_by_key(|&c| counts.iter().filter(|&&x| x == c).count()).unwrap()
    }
}

/// Returns (tau, omega_n): tau from points on random tangent spaces, omega_n
/// from random linear spaces of dimension `N - 2n` through such a point.
fn oracle_counts(tangents: &[Vec<Vec<u64>>], n: usize, samples: usize) -> (usize, usize) {
    use oracle::*;
    let eqs: Vec<Vec<Vec<u64>>> = tangents.iter().map(|t| equations(t)).collect();
    let ranks: Vec<usize> = tangents.iter().map(|t| rank(t)).collect();
    let big_n = tangents[0][0].len() - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut tau_counts = Vec::new();
    let mut omega_counts = Vec::new();
    for _ in 0..samples {
        let t = &tangents[rng.gen_range(0..tangents.len())];
        let w = random_in(t, &mut rng);
        if rank(std::slice::from_ref(&w)) == 0 {
            continue;
        }
        tau_counts.push(eqs.iter().filter(|e| contains(e, &w)).count());
        let mut l = vec![w];
        while l.len() < big_n - 2 * n + 1 {
            l.push(random_point(big_n + 1, &mut rng));
        }
        if rank(&l) < l.len() {
            continue;
        }
        let meets = tangents.iter().zip(&ranks).filter(|(t, &r)| {
            let mut rows = (*t).clone();
            rows.extend(l.iter().cloned());
            rank(&rows) < r + l.len()
        });
        omega_counts.push(meets.count());
    }
    (mode(&tau_counts), generic_max(&omega_counts))
}

fn c11() -> Outcome {
    let frozen = [("conic", 2, 2), ("twisted cubic", 1, 4), ("S(1,2)", 2, 2)];
    let got = [
        ("conic", oracle_counts(&oracle::rnc_tangents(2), 1, 400)),
        ("twisted cubic", oracle_counts(&oracle::rnc_tangents(3), 1, 2000)),
        ("S(1,2)", oracle_counts(&oracle::s12_tangents(), 2, 300)),
    ];
    for ((name, t, w), (_, (ot, ow))) in frozen.iter().zip(&got) {
        ensure!((*t, *w) == (*ot, *ow), "{name}: oracle ({ot}, {ow}), frozen ({t}, {w})");
    }
    let specs = [r#"{"type":"rnc","d":2}"#, r#"{"type":"rnc","d":3}"#, r#"{"type":"scroll","a":[1,2]}"#];
    for f in fields() {
        for ((name, t, w), spec) in frozen.iter().zip(specs) {
            let x = h(spec, &f)?;
            let n = x.dim().map_err(e)? as usize;
            let lib = (tau(&x)? as usize, omega(&x, n)? as usize);
            ensure!(lib == (*t, *w), "{name}: engine {lib:?} at {}, oracle ({t}, {w})", tag(&f));
        }
    }
    Ok(Status::Pass(format!(
        "F_{} point counts: conic (2,2), twisted cubic (1,4), S(1,2) (2,2) agree with the engine",
        oracle::P
    )))
}

fn extra_surfaces() -> Outcome {
    let dp = r#"{"type":"custom","vars":["x","y"],"psi":["x^2*y-x*y","x^2-x*y","x*y^2-x*y","y^2-x*y","x-x*y","y-x*y"]}"#;
    let formula_dp = invariants::surface_degtan_formula(5, -5, 5, 1);
    let formula_scroll = invariants::surface_degtan_formula(5, -3, 8, 1);
    for f in fields() {
        let x = h(dp, &f)?;
        let (t, w) = (tau(&x)?, omega(&x, 2)?);
        ensure!((t, w) == (1, 8), "quintic del Pezzo tau {t}, omega_2 {w} at {}", tag(&f));
        ensure!(formula_dp == (w / t) as i64, "formula {formula_dp} vs {}", w / t);
        let s = h(r#"{"type":"scroll","a":[2,3]}"#, &f)?;
        let engine = invariants::tan_degree(&s, TRIALS).map_err(e)?;
        ensure!(engine == 6 && formula_scroll == 22, "scroll: engine {engine}, formula {formula_scroll}");
    }
    Ok(Status::Pass(
        "quintic del Pezzo tau=1, omega_2=8 = surface formula; S(2,3) engine 6 vs formula 22 (scrolls excluded)".into(),
    ))
}

fn extra_projection_law() -> Outcome {
    for f in fields() {
        let y = h(r#"{"type":"rnc","d":3}"#, &f)?;
        let q = point_on(&y, "projection_law")?;
        let t = tan(&y)?;
        let m = varieties::multiplicity_at(t.ideal().map_err(e)?, &q).map_err(e)?;
        let yq = varieties::project(&y, &LinearSpace::point(&f, q).map_err(e)?).map_err(e)?;
        let tq = tau(&yq)?;
        ensure!((m, tq) == (2, 2) && tq as i64 == (4 - m as i64) * tau(&y)? as i64, "mult {m}, tau {tq}");
        let x = h(r#"{"type":"scroll","a":[2,3]}"#, &f)?;
        let (m, s, d) = (mu(&x)?, sigma(&x)?, invariants::sec_degree_count(&x, TRIALS).map_err(e)?);
        ensure!(s == m * d, "sigma {s} != mu {m} * deg Sec {d}");
        let td = TanSecData { ambient: 3, dim_tan: 2, deg_tan: 4, dim_sec: 3, deg_sec: 1 };
        ensure!(invariants::bounds_from(&td).iter().all(|i| i.pass), "bounds for the twisted cubic");
    }
    Ok(Status::Pass("twisted cubic from its own point: mult 2, tau=2; sigma = mu * deg Sec on S(2,3)".into()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("1 twisted cubic", 2, c1),
        ("2 rational normal curves", 30, c2),
        ("3 Veronese surface", 60, c3),
        ("4 Segre P2xP2", 600, c4),
        ("5 cubic scroll S(1,2)", 30, c5),
        ("6 scroll S(2,3)", 180, c6),
        ("7 degenerate scroll S(0,0,3)", 60, c7),
        ("8 Verra surface", 180, c8),
        ("9 Roth surface", 300, c9),
        ("10 property suites", 120, c10),
        ("11 point-count oracle", 120, c11),
        ("extra surface formula", 120, extra_surfaces),
        ("extra projection law", 120, extra_projection_law),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let t0 = Instant::now();
        let outcome = run();
        let took = t0.elapsed();
        let over = took > Duration::from_secs(budget);
        let line = match outcome {
            Ok(Status::Pass(_)) | Ok(Status::Skip(_)) if over => {
                failed += 1;
                format!("FAIL {name}: over the {budget}s budget")
            }
            Ok(Status::Pass(msg)) => format!("PASS {name}: {msg}"),
            Ok(Status::Skip(msg)) => format!("SKIP {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                format!("FAIL {name}: {msg}")
            }
        };
        println!("{line} [{:.2}s]", took.as_secs_f64());
    }
    println!("acceptance: {failed} failing");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
