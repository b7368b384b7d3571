//! Tangent and secant varieties: exact ideals by elimination and local
//! dimension data from ranks at random regular points.

use rand::Rng;

use crate::algebra::field::{FieldConfig, Scalar};
use crate::algebra::linalg::{self, Matrix, Vector};
use crate::algebra::monomial::MonomialOrder;
use crate::algebra::poly::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::random::majority;
use crate::varieties::{eliminate_to_ambient, ParamMap, VarietyHandle};

pub const DEFAULT_TRIALS: usize = 3;

/// First- and second-order data of a parametrization at a regular point.
#[derive(Clone, Debug)]
pub struct TangentFrame {
    pub params: Vector,
    pub point: Vector,
    /// Images of a basis `k_1..k_n` of the locus tangent space.
    pub tangents: Vec<Vector>,
    /// `second[i][j]`: second derivative of `ψ` along `k_i, k_j`, corrected
    /// so that the curve stays on the constraint locus.
    pub second: Vec<Vec<Vector>>,
    pub field: FieldConfig,
}

impl TangentFrame {
    pub fn n(&self) -> usize {
        self.tangents.len()
    }

    /// `ψ(u₀)` and the tangent images: a lift of the tangent space.
    pub fn span_rows(&self) -> Vec<Vector> {
        let mut rows = vec![self.point.clone()];
        rows.extend(self.tangents.iter().cloned());
        rows
    }

    /// Every `second[i][j]` with `i ≤ j`.
    pub fn second_rows(&self) -> Vec<Vector> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .map(|(i, j)| self.second[i][j].clone())
            .collect()
    }

    /// `w_j(λ) = Σ_i λ_i · second[i][j]` for `j = 1..n`.
    pub fn w(&self, lambda: &[Scalar]) -> Vec<Vector> {
        let f = &self.field;
        let dim = self.point.len();
        (0..self.n())
            .map(|j| {
                let mut acc = vec![f.zero(); dim];
                for (i, l) in lambda.iter().enumerate() {
                    acc = linalg::axpy(f, l, &self.second[i][j], &acc);
                }
                acc
            })
            .collect()
    }

    /// A basis of the ambient space: the independent span rows followed by
    /// unit vectors completing them. The trailing coordinates of a vector
    /// in this basis are its normal components.
    pub fn adapted_basis(&self) -> (Vec<Vector>, usize) {
        let f = &self.field;
        let span = linalg::independent_subset(f, &self.span_rows());
        let k = span.len();
        let mut basis = span;
        basis.extend(linalg::complete_basis(f, &basis.clone(), self.point.len()));
        (basis, k)
    }

    /// Normal components of `v` relative to `adapted_basis`.
    pub fn normal_part(&self, basis: &[Vector], k: usize, v: &[Scalar]) -> Vector {
        let c = linalg::coordinates(&self.field, basis, v).expect("a basis spans everything");
        c[k..].to_vec()
    }
}

/// The frame at a given locus point.
pub fn frame_at(p: &ParamMap, u: &[Scalar]) -> Result<TangentFrame> {
    let f = *p.field();
    let ks = p.locus_tangent(u);
    let partials = p.partials_at(u);
    let tangents: Vec<Vector> = ks.iter().map(|k| p.push_forward(&partials, k)).collect();
    let h = p.hessian_at(u);
    let m = p.nparams();
    let cgrad = if p.is_constrained() {
        Some(Matrix::from_rows(&f, &p.constraint_gradients_at(u), m))
    } else {
        None
    };
    let ch = p.constraint_hessian_at(u);
    let bilinear = |hs: &[Vec<Vector>], a: &[Scalar], b: &[Scalar], len: usize| -> Vector {
        let mut acc = vec![f.zero(); len];
        for (x, ax) in a.iter().enumerate() {
            if f.is_zero(ax) {
                continue;
            }
            for (y, by) in b.iter().enumerate() {
                if f.is_zero(by) {
                    continue;
                }
                acc = linalg::axpy(&f, &f.mul(ax, by), &hs[x][y], &acc);
            }
        }
        acc
    };
    let n = ks.len();
    let dim = p.psi().len();
    let mut second = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut w = bilinear(&h, &ks[i], &ks[j], dim);
            if let Some(cg) = &cgrad {
                let rhs = bilinear(&ch, &ks[i], &ks[j], p.constraints().len());
                let rhs: Vector = rhs.iter().map(|c| f.neg(c)).collect();
                let z = cg
                    .solve(&f, &rhs)
                    .ok_or(Error::NoRegularPointFound(0))?;
                w = linalg::axpy(&f, &f.one(), &p.push_forward(&partials, &z), &w);
            }
            second[j][i] = w.clone();
            second[i][j] = w;
        }
    }
    Ok(TangentFrame {
        params: u.to_vec(),
        point: p.eval(u),
        tangents,
        second,
        field: f,
    })
}

/// A random regular point and its frame.
pub fn regular_point<R: Rng + ?Sized>(p: &ParamMap, rng: &mut R) -> Result<TangentFrame> {
    let u = p.regular_point(rng)?;
    frame_at(p, &u)
}

fn random_vec<R: Rng + ?Sized>(f: &FieldConfig, n: usize, rng: &mut R) -> Vector {
    (0..n).map(|_| f.random(rng)).collect()
}

/// `dim Tan(X) = rank{ψ, tangents, w_1(λ)..w_n(λ)} - 1` at a random frame
/// and random `λ`.
pub fn tan_dim_fast(x: &VarietyHandle, trials: usize) -> Result<usize> {
    let p = x.require_param()?;
    let f = *p.field();
    let m = majority(f.seed, "tan_dim", trials, |rng| {
        let fr = regular_point(p, rng)?;
        let lambda = random_vec(&f, fr.n(), rng);
        let mut rows = fr.span_rows();
        rows.extend(fr.w(&lambda));
        Ok(linalg::rank_of(&f, &rows) as i64 - 1)
    })?;
    Ok(m.value as usize)
}

/// `dim T^(2)_x X`.
pub fn osculating_dim(x: &VarietyHandle, k: usize, trials: usize) -> Result<usize> {
    if k != 2 {
        return Err(Error::Unsupported("only second osculating spaces".into()));
    }
    let p = x.require_param()?;
    let f = *p.field();
    let m = majority(f.seed, "osculating_dim", trials, |rng| {
        let fr = regular_point(p, rng)?;
        let mut rows = fr.span_rows();
        rows.extend(fr.second_rows());
        Ok(linalg::rank_of(&f, &rows) as i64 - 1)
    })?;
    Ok(m.value as usize)
}

/// Gauss defect `n - rank dG`, where `dG` sends `λ` to the normal parts of
/// `(w_1(λ), …, w_n(λ))`.
pub fn gauss_defect(x: &VarietyHandle, trials: usize) -> Result<usize> {
    let p = x.require_param()?;
    let f = *p.field();
    let m = majority(f.seed, "gauss_defect", trials, |rng| {
        let fr = regular_point(p, rng)?;
        Ok(gauss_defect_at(&fr) as i64)
    })?;
    Ok(m.value as usize)
}

pub fn gauss_defect_at(fr: &TangentFrame) -> usize {
    let n = fr.n();
    let (basis, k) = fr.adapted_basis();
    let rows: Vec<Vector> = (0..n)
        .map(|i| {
            (0..n)
                .flat_map(|j| fr.normal_part(&basis, k, &fr.second[i][j]))
                .collect()
        })
        .collect();
    if rows.first().is_none_or(|r| r.is_empty()) {
        return n;
    }
    n - linalg::rank_of(&fr.field, &rows)
}

/// `dim Sec(X)` by Terracini's lemma at two random points.
pub fn sec_dim_fast(x: &VarietyHandle, trials: usize) -> Result<usize> {
    let p = x.require_param()?;
    let f = *p.field();
    let m = majority(f.seed, "sec_dim", trials, |rng| {
        let a = regular_point(p, rng)?;
        let b = regular_point(p, rng)?;
        let mut rows = a.span_rows();
        rows.extend(b.span_rows());
        Ok(linalg::rank_of(&f, &rows) as i64 - 1)
    })?;
    Ok(m.value as usize)
}

/// Ring `u_0..u_{m-1}, a, v_0..v_{m-1}` with `aψ(u) + J_ψ(u)v` and the
/// constraints `C(u) = 0`, `J_C(u)v = 0`.
pub(crate) fn tangent_system(p: &ParamMap) -> Result<(crate::algebra::poly::RingRef, Vec<Polynomial>, Vec<Polynomial>)> {
    let m = p.nparams();
    let mut names: Vec<String> = (0..m).map(|i| format!("u{i}")).collect();
    names.push("a".into());
    names.extend((0..m).map(|i| format!("v{i}")));
    let ring = Ring::new(&names, *p.field(), MonomialOrder::GrevLex)?;
    let (psi, mut cons) = p.embed(&ring, 0);
    let (jac, cjac) = p.embed_jacobians(&ring, 0);
    let a = Polynomial::var(&ring, m);
    let v: Vec<Polynomial> = (0..m).map(|i| Polynomial::var(&ring, m + 1 + i)).collect();
    let exprs = psi
        .iter()
        .zip(&jac)
        .map(|(q, row)| {
            let mut acc = &a * q;
            for (d, vi) in row.iter().zip(&v) {
                acc = &acc + &(d * vi);
            }
            acc
        })
        .collect();
    for row in &cjac {
        let mut acc = Polynomial::zero(&ring);
        for (d, vi) in row.iter().zip(&v) {
            acc = &acc + &(d * vi);
        }
        cons.push(acc);
    }
    Ok((ring, exprs, cons))
}

/// Parametrization `(u, a, v) ↦ aψ(u) + J_ψ(u)v` of `Tan(X)`, with a
/// chart on `(a, v)`.
pub fn tangent_map(p: &ParamMap, dim_tan: usize) -> Result<ParamMap> {
    let (ring, exprs, mut cons) = tangent_system(p)?;
    let f = *p.field();
    let m = p.nparams();
    let mut rng = crate::random::rng_for(f.seed, "chart:tangent", 0);
    let mut coeffs = vec![f.zero(); ring.nvars()];
    for c in coeffs.iter_mut().skip(m) {
        *c = f.random_nonzero(&mut rng);
    }
    cons.push(&Polynomial::linear_form(&ring, &coeffs) - &Polynomial::one(&ring));
    Ok(ParamMap::new(&ring, exprs, cons, dim_tan)?.with_cap(p.cap()))
}

/// `Tan(X)` as a parametrized handle; the ideal is computed on demand.
pub fn tangent_handle(x: &VarietyHandle) -> Result<VarietyHandle> {
    let p = x.require_param()?;
    let d = tan_dim_fast(x, DEFAULT_TRIALS)?;
    Ok(VarietyHandle::from_param(format!("Tan({})", x.name()), tangent_map(p, d)?).with_cap(x.cap()))
}

/// `Tan(X)` with its ideal, by eliminating `(u, a, v)` from the incidence
/// system.
pub fn tangent_variety(x: &VarietyHandle) -> Result<VarietyHandle> {
    let p = x.require_param()?;
    let (ring, exprs, cons) = tangent_system(p)?;
    let ideal = eliminate_to_ambient(&ring, &exprs, &cons, x.cap())?;
    tangent_handle(x)?.with_ideal(ideal)
}

pub(crate) fn secant_system(p: &ParamMap) -> Result<(crate::algebra::poly::RingRef, Vec<Polynomial>, Vec<Polynomial>)> {
    let m = p.nparams();
    let mut names: Vec<String> = (0..m).map(|i| format!("u{i}")).collect();
    names.extend((0..m).map(|i| format!("v{i}")));
    names.push("a".into());
    names.push("b".into());
    let ring = Ring::new(&names, *p.field(), MonomialOrder::GrevLex)?;
    let (pu, mut cons) = p.embed(&ring, 0);
    let (pv, cv) = p.embed(&ring, m);
    cons.extend(cv);
    let a = Polynomial::var(&ring, 2 * m);
    let b = Polynomial::var(&ring, 2 * m + 1);
    let exprs = pu.iter().zip(&pv).map(|(x, y)| &(&a * x) + &(&b * y)).collect();
    Ok((ring, exprs, cons))
}

/// Parametrization `(u, v, a, b) ↦ aψ(u) + bψ(v)` of `Sec(X)`, with a
/// chart on `(a, b)`.
pub fn secant_map(p: &ParamMap, dim_sec: usize) -> Result<ParamMap> {
    let (ring, exprs, mut cons) = secant_system(p)?;
    let f = *p.field();
    let m = p.nparams();
    let mut rng = crate::random::rng_for(f.seed, "chart:secant", 0);
    let mut coeffs = vec![f.zero(); ring.nvars()];
    coeffs[2 * m] = f.random_nonzero(&mut rng);
    coeffs[2 * m + 1] = f.random_nonzero(&mut rng);
    cons.push(&Polynomial::linear_form(&ring, &coeffs) - &Polynomial::one(&ring));
    Ok(ParamMap::new(&ring, exprs, cons, dim_sec)?.with_cap(p.cap()))
}

pub fn secant_handle(x: &VarietyHandle) -> Result<VarietyHandle> {
    let p = x.require_param()?;
    let d = sec_dim_fast(x, DEFAULT_TRIALS)?;
    Ok(VarietyHandle::from_param(format!("Sec({})", x.name()), secant_map(p, d)?).with_cap(x.cap()))
}

/// `Sec(X)` with its ideal.
pub fn secant_variety(x: &VarietyHandle) -> Result<VarietyHandle> {
    let p = x.require_param()?;
    let (ring, exprs, cons) = secant_system(p)?;
    let ideal = eliminate_to_ambient(&ring, &exprs, &cons, x.cap())?;
    secant_handle(x)?.with_ideal(ideal)
}

#[cfg(test)]
mod tests;
