//! One command on one variety, producing a report; and the golden suite
//! that checks a manifest of expected values at two primes.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::field::{FieldConfig, DEFAULT_PRIME, VERIFY_PRIME};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, DEFAULT_DEGREE_CAP};
use crate::invariants::{self, Identity, InvariantReport};
use crate::localgeom;
use crate::tangential::{self, DEFAULT_TRIALS};
use crate::varieties::{make_variety, VarietyHandle, VarietySpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Implicitize,
    Tan,
    Sec,
    Dims,
    Tau,
    /// `None` means the top ceto `ω_n`.
    Omega(Option<usize>),
    Mu,
    Sigma,
    Severi,
    Bounds,
    Ff2,
    Focal,
    Gauss,
    Osc,
    Dev,
    ReportAll,
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Command> {
        if let Some(i) = s.strip_prefix("omega:") {
            let i = i
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad omega index `{i}`")))?;
            return Ok(Command::Omega(Some(i)));
        }
        Ok(match s {
            "implicitize" => Command::Implicitize,
            "tan" => Command::Tan,
            "sec" => Command::Sec,
            "dims" => Command::Dims,
            "tau" => Command::Tau,
            "omega" => Command::Omega(None),
            "mu" => Command::Mu,
            "sigma" => Command::Sigma,
            "severi" => Command::Severi,
            "bounds" => Command::Bounds,
            "ff2" => Command::Ff2,
            "focal" => Command::Focal,
            "gauss" => Command::Gauss,
            "osc" => Command::Osc,
            "dev" => Command::Dev,
            "report-all" => Command::ReportAll,
            _ => return Err(Error::InvalidSpec(format!("unknown command `{s}`"))),
        })
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Command::Implicitize => "implicitize",
            Command::Tan => "tan",
            Command::Sec => "sec",
            Command::Dims => "dims",
            Command::Tau => "tau",
            Command::Omega(Some(i)) => return write!(f, "omega:{i}"),
            Command::Omega(None) => "omega",
            Command::Mu => "mu",
            Command::Sigma => "sigma",
            Command::Severi => "severi",
            Command::Bounds => "bounds",
            Command::Ff2 => "ff2",
            Command::Focal => "focal",
            Command::Gauss => "gauss",
            Command::Osc => "osc",
            Command::Dev => "dev",
            Command::ReportAll => "report-all",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub spec: VarietySpec,
    pub command: Command,
    pub field: FieldConfig,
    pub trials: usize,
    pub degree_cap: u32,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(spec: VarietySpec, command: Command) -> RunConfig {
        RunConfig {
            spec,
            command,
            field: FieldConfig::default(),
            trials: DEFAULT_TRIALS,
            degree_cap: DEFAULT_DEGREE_CAP,
            output_path: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidSpec("trials must be at least 1".into()));
        }
        if self.degree_cap < 4 {
            return Err(Error::InvalidSpec("degree cap must be at least 4".into()));
        }
        Ok(())
    }

    pub fn with_prime(&self, prime: u64) -> Result<RunConfig> {
        let mut c = self.clone();
        c.field = FieldConfig::prime_field(prime, self.field.seed)?;
        Ok(c)
    }
}

fn strings(ideal: &Ideal) -> Value {
    Value::Array(ideal.gens().iter().map(|g| Value::String(g.to_string())).collect())
}

fn hilbert_into(r: &mut InvariantReport, ideal: &Ideal, key: &str) -> Result<(i64, u64)> {
    let h = ideal.hilbert_dim_degree()?;
    r.data.insert(format!("{key}_generators"), strings(ideal));
    Ok((h.projective_dimension, h.degree.max(0) as u64))
}

/// The vector family `(ψ, ψ', …, ψ^(k))` of a curve given by an
/// unconstrained one-parameter map; `k = 1` for a bare curve.
fn family_of(spec: &VarietySpec, field: &FieldConfig) -> Result<Vec<Vec<crate::algebra::poly::Polynomial>>> {
    let (curve, k) = match spec {
        VarietySpec::Osculating { curve, k } => (make_variety(curve, field)?, *k as usize),
        other => (make_variety(other, field)?, 1),
    };
    let p = curve.require_param()?;
    if p.nparams() != 1 || p.is_constrained() {
        return Err(Error::Unsupported(
            "dev needs a curve with one free parameter, or an osculating scroll of one".into(),
        ));
    }
    let mut fam = vec![p.psi().to_vec()];
    for _ in 0..k {
        let next = fam.last().unwrap().iter().map(|q| q.derivative(0)).collect();
        fam.push(next);
    }
    Ok(fam)
}

/// Execute one command.
pub fn run(cfg: &RunConfig) -> Result<InvariantReport> {
    cfg.validate()?;
    let x = make_variety(&cfg.spec, &cfg.field)?.with_cap(cfg.degree_cap);
    let t = cfg.trials;
    let mut r = InvariantReport::new(&x, t);
    r.command = cfg.command.to_string();
    match cfg.command {
        Command::Implicitize => {
            let ideal = x.ideal()?.clone();
            let (d, deg) = hilbert_into(&mut r, &ideal, "ideal")?;
            r.dim = Some(d);
            r.degree = Some(deg);
            r.ambient = Some(x.ambient_dim());
        }
        Command::Tan => tan_into(&mut r, &x, t)?,
        Command::Sec => sec_into(&mut r, &x, t)?,
        Command::Dims => {
            r.dim_tan = Some(tangential::tan_dim_fast(&x, t)? as i64);
            r.dim_sec = Some(tangential::sec_dim_fast(&x, t)? as i64);
        }
        Command::Tau => {
            let c = invariants::tau(&x, t)?;
            if c.value == 0 {
                r.notes.push("dim Tan < 2n: tau is 0 by convention".into());
            }
            r.tau = Some(c.value);
            r.totals.insert("tau".into(), c.total);
        }
        Command::Omega(i) => {
            let n = x.require_param()?.expected_dim();
            let i = i.unwrap_or(n);
            let c = invariants::omega_slice(&x, i, t)?;
            r.omega.insert(i.to_string(), c.value);
            r.totals.insert(format!("omega_{i}"), c.total);
        }
        Command::Mu => {
            let c = invariants::secant_mu(&x, t)?;
            r.mu = Some(c.value);
            r.totals.insert("mu".into(), c.total);
        }
        Command::Sigma => r.sigma = Some(invariants::sigma_nodes(&x, t)?.value),
        Command::Severi => {
            let s = invariants::severi_check(&x, t)?;
            r.degree = Some(s.degree);
            r.sigma = Some(s.sigma);
            for (i, w) in s.omega.iter().enumerate() {
                r.omega.insert((i + 1).to_string(), *w);
            }
            r.identities.push(s.identity);
        }
        Command::Bounds => {
            let (d, ids) = invariants::bounds_check(&x, t)?;
            r.ambient = Some(d.ambient);
            r.dim_tan = Some(d.dim_tan as i64);
            r.deg_tan = Some(d.deg_tan);
            r.dim_sec = Some(d.dim_sec as i64);
            r.deg_sec = Some(d.deg_sec);
            r.identities.extend(ids);
        }
        Command::Ff2 => {
            let ff = localgeom::second_ff(&x)?;
            let (_, h) = localgeom::ff_base_locus(&ff)?;
            r.data.insert(
                "quadrics".into(),
                Value::Array(ff.quadrics.iter().map(|q| Value::String(q.to_string())).collect()),
            );
            r.data.insert("ff_dim".into(), json!(ff.system_dim()));
            r.data.insert("base_locus_dim".into(), json!(h.projective_dimension));
        }
        Command::Focal => {
            let fd = localgeom::focal_at(&x)?;
            r.data.insert("focal_generators".into(), strings(&fd.focal_ideal));
            r.data.insert("is_hypersurface".into(), json!(fd.is_hypersurface));
            if let Some(d) = fd.focal_degree {
                r.data.insert("focal_degree".into(), json!(d));
            }
        }
        Command::Gauss => {
            r.data.insert("gauss_defect".into(), json!(tangential::gauss_defect(&x, t)?));
        }
        Command::Osc => {
            r.data.insert("osc_dim".into(), json!(tangential::osculating_dim(&x, 2, t)?));
        }
        Command::Dev => {
            let fam = family_of(&cfg.spec, &cfg.field)?;
            let d = localgeom::developable_check(&fam, t)?;
            r.data.insert("developable".into(), json!(d.developable));
            r.data.insert("rank".into(), json!(d.rank));
            r.data.insert("focal_dim".into(), json!(d.focal_points.len() as i64 - 1));
        }
        Command::ReportAll => {
            let mut full = invariants::report_all(&x, t)?;
            full.command = r.command;
            if let Ok(o) = tangential::osculating_dim(&x, 2, t) {
                full.data.insert("osc_dim".into(), json!(o));
            }
            r = full;
        }
    }
    Ok(r)
}

fn tan_into(r: &mut InvariantReport, x: &VarietyHandle, t: usize) -> Result<()> {
    match tangential::tangent_variety(x) {
        Ok(h) => {
            let (d, deg) = hilbert_into(r, h.ideal()?, "tan")?;
            r.dim_tan = Some(d);
            r.deg_tan = Some(deg);
        }
        Err(Error::DegreeCapExceeded(c)) => {
            r.dim_tan = Some(tangential::tan_dim_fast(x, t)? as i64);
            r.deg_tan = Some(invariants::tan_degree(x, t)?);
            r.notes.push(format!("elimination hit the degree cap {c}; deg Tan by counting"));
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn sec_into(r: &mut InvariantReport, x: &VarietyHandle, t: usize) -> Result<()> {
    match tangential::secant_variety(x) {
        Ok(h) => {
            let (d, deg) = hilbert_into(r, h.ideal()?, "sec")?;
            r.dim_sec = Some(d);
            r.deg_sec = Some(deg);
        }
        Err(Error::DegreeCapExceeded(c)) => {
            r.dim_sec = Some(tangential::sec_dim_fast(x, t)? as i64);
            r.deg_sec = Some(invariants::sec_degree_count(x, t)?);
            r.notes.push(format!("elimination hit the degree cap {c}; deg Sec by counting"));
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

/// Rerun at the verification prime and record whether every integer
/// output agrees.
pub fn run_verified(cfg: &RunConfig) -> Result<InvariantReport> {
    let mut r = run(cfg)?;
    let other = if cfg.field.prime() == Some(VERIFY_PRIME) { DEFAULT_PRIME } else { VERIFY_PRIME };
    let second = run(&cfg.with_prime(other)?)?;
    let a = r.integers();
    let b = second.integers();
    let keys: std::collections::BTreeSet<&String> = a.keys().chain(b.keys()).collect();
    let agree = keys.iter().filter(|k| a.get(**k) == b.get(**k)).count();
    let mut id = Identity::equality("verify_prime", agree as i64, keys.len() as i64);
    id.note = Some(format!("second prime {other}"));
    r.identities.push(id);
    Ok(r)
}

/// One manifest row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ManifestRow {
    pub spec: Value,
    pub command: String,
    /// Expected fields of the report; nested objects match as subsets.
    pub expect: Value,
    #[serde(default)]
    pub tag: String,
    #[serde(default, rename = "ref")]
    pub reference: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenFailure {
    pub row: usize,
    pub prime: u64,
    pub command: String,
    pub spec: Value,
    pub expect: Value,
    /// The report, or an error object.
    pub got: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenSummary {
    pub rows: usize,
    pub passed: usize,
    pub failures: Vec<GoldenFailure>,
}

impl GoldenSummary {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn parse_manifest(src: &str) -> Result<Vec<ManifestRow>> {
    serde_json::from_str(src).map_err(|e| Error::ManifestParseError(e.to_string()))
}

pub fn load_manifest(path: &Path) -> Result<Vec<ManifestRow>> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Error::ManifestParseError(format!("{}: {e}", path.display())))?;
    parse_manifest(&src)
}

/// `expect` is contained in `got`.
pub fn matches(expect: &Value, got: &Value) -> bool {
    match (expect, got) {
        (Value::Object(e), Value::Object(g)) => e
            .iter()
            .all(|(k, v)| g.get(k).is_some_and(|w| matches(v, w))),
        (Value::Array(e), Value::Array(g)) => e.len() == g.len() && e.iter().zip(g).all(|(a, b)| matches(a, b)),
        (Value::Number(a), Value::Number(b)) => a.as_f64() == b.as_f64(),
        _ => expect == got,
    }
}

pub fn error_value(e: &Error) -> Value {
    json!({"error": {"kind": e.kind(), "detail": e.to_string()}})
}

/// Run each row at each prime; a row passes when every run matches.
pub fn golden_suite(rows: &[ManifestRow], primes: &[u64], seed: u64, trials: usize) -> GoldenSummary {
    let mut failures = Vec::new();
    let mut passed = 0;
    for (k, row) in rows.iter().enumerate() {
        let mut ok = true;
        for &prime in primes {
            let got = golden_row(row, prime, seed, trials);
            let hit = match &got {
                Ok(v) => matches(&row.expect, v),
                Err(_) => false,
            };
            if !hit {
                ok = false;
                failures.push(GoldenFailure {
                    row: k,
                    prime,
                    command: row.command.clone(),
                    spec: row.spec.clone(),
                    expect: row.expect.clone(),
                    got: got.unwrap_or_else(|e| error_value(&e)),
                });
            }
        }
        if ok {
            passed += 1;
        }
    }
    GoldenSummary {
        rows: rows.len(),
        passed,
        failures,
    }
}

fn golden_row(row: &ManifestRow, prime: u64, seed: u64, trials: usize) -> Result<Value> {
    let spec = VarietySpec::from_value(&row.spec)?;
    let command: Command = row.command.parse()?;
    let mut cfg = RunConfig::new(spec, command);
    cfg.field = FieldConfig::prime_field(prime, seed)?;
    cfg.trials = trials;
    let r = run(&cfg)?;
    serde_json::to_value(&r).map_err(|e| Error::Unsupported(e.to_string()))
}

/// Default primes of the golden suite.
pub const GOLDEN_PRIMES: [u64; 2] = [DEFAULT_PRIME, VERIFY_PRIME];

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn row(spec: &str, command: &str, expect: Value) -> ManifestRow {
        ManifestRow {
            spec: serde_json::from_str(spec).unwrap(),
            command: command.into(),
            expect,
            tag: String::new(),
            reference: String::new(),
        }
    }

    #[test]
    fn commands_round_trip() {
        for s in [
            "implicitize", "tan", "sec", "dims", "tau", "omega", "omega:2", "mu", "sigma", "severi", "bounds",
            "ff2", "focal", "gauss", "osc", "dev", "report-all",
        ] {
            assert_eq!(s.parse::<Command>().unwrap().to_string(), s);
        }
        assert!("nope".parse::<Command>().is_err());
        assert!("omega:x".parse::<Command>().is_err());
    }

    #[test]
    fn config_validation() {
        let spec = VarietySpec::from_json(r#"{"type":"rnc","d":3}"#).unwrap();
        let mut c = RunConfig::new(spec, Command::Dims);
        assert!(c.validate().is_ok());
        c.trials = 0;
        assert!(c.validate().is_err());
        c.trials = 1;
        c.degree_cap = 3;
        assert!(matches!(run(&c), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn subset_matching() {
        let got = json!({"tau": 2, "omega": {"1": 4, "2": 2}, "seed": 42});
        assert!(matches(&json!({"tau": 2}), &got));
        assert!(matches(&json!({"omega": {"2": 2}}), &got));
        assert!(!matches(&json!({"omega": {"2": 3}}), &got));
        assert!(!matches(&json!({"mu": 1}), &got));
    }

    #[test]
    fn golden_harness() {
        let empty = golden_suite(&[], &GOLDEN_PRIMES, 42, 3);
        assert_eq!((empty.rows, empty.passed), (0, 0));
        assert!(empty.all_pass());
        let rows = vec![
            row(r#"{"type":"rnc","d":3}"#, "tau", json!({"tau": 1})),
            row(r#"{"type":"rnc","d":3}"#, "tau", json!({"tau": 5})),
            row(r#"{"type":"rnc","d":2}"#, "dims", json!({"dim_tan": 2})),
        ];
        let s = golden_suite(&rows, &GOLDEN_PRIMES, 42, 3);
        assert_eq!(s.rows, 3);
        assert_eq!(s.passed, 2);
        assert_eq!(s.failures.len(), 2);
        assert!(s.failures.iter().all(|f| f.row == 1));
        assert!(matches!(parse_manifest("{"), Err(Error::ManifestParseError(_))));
    }

    #[test]
    fn reports_are_deterministic_and_verified() {
        let spec = VarietySpec::from_json(r#"{"type":"scroll","a":[1,2]}"#).unwrap();
        let c = RunConfig::new(spec, Command::Tau);
        let a = serde_json::to_string(&run(&c).unwrap()).unwrap();
        let b = serde_json::to_string(&run(&c).unwrap()).unwrap();
        assert_eq!(a, b);
        let v = run_verified(&c).unwrap();
        assert_eq!(v.tau, Some(2));
        assert!(v.all_pass());
    }

    proptest! {
        #[test]
        fn expectations_match_any_report_containing_them(
            fields in proptest::collection::btree_map("[a-z_]{1,8}", -50i64..50, 0..8),
            keep in proptest::collection::vec(any::<bool>(), 8),
        ) {
            let got: Value = serde_json::to_value(&fields).unwrap();
            prop_assert!(matches(&got, &got));
            let subset: std::collections::BTreeMap<_, _> = fields.iter().zip(&keep).filter(|(_, k)| **k).map(|(kv, _)| kv).collect();
            prop_assert!(matches(&serde_json::to_value(&subset).unwrap(), &got));
            if let Some((k, v)) = fields.iter().next() {
                let wrong = json!({ k.as_str(): v + 1 });
                prop_assert!(!matches(&wrong, &got));
            }
        }

        #[test]
        fn omega_commands_round_trip(i in 1usize..64) {
            let c: Command = format!("omega:{i}").parse().unwrap();
            prop_assert_eq!(c, Command::Omega(Some(i)));
            prop_assert_eq!(c.to_string().parse::<Command>().unwrap(), c);
        }
    }
}
