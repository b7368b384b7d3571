//! Second fundamental form, focal loci in a tangent space and
//! developability of one-parameter families of linear spaces.

use rand::Rng;
use serde::Serialize;

use crate::algebra::field::{FieldConfig, Scalar};
use crate::algebra::linalg::{self, Matrix, Vector};
use crate::algebra::monomial::Monomial;
use crate::algebra::poly::{Polynomial, Ring, RingRef};
use crate::error::{Error, Result};
use crate::groebner::{HilbertData, Ideal};
use crate::random::{majority, rng_for};
use crate::tangential::{self, tan_dim_fast, TangentFrame};
use crate::varieties::{eliminate_to_ambient, VarietyHandle};


/// `|II_x|` at a random regular point.
#[derive(Clone, Debug)]
pub struct SecondFF {
    pub frame: TangentFrame,
    /// Basis of the locus tangent space in parameter coordinates; `λ_i`
    /// is the coordinate along `locus_basis[i]`.
    pub locus_basis: Vec<Vector>,
    /// Independent quadrics in `l1..ln`.
    pub quadrics: Vec<Polynomial>,
    /// Completion of the span rows to a basis of the ambient space.
    pub normal_basis: Vec<Vector>,
    /// `matrix[k][i][j]`: normal coordinate `k` of `second[i][j]`.
    matrix: Vec<Vec<Vec<Scalar>>>,
    ring: RingRef,
}

fn lambda_ring(field: &FieldConfig, n: usize) -> Result<RingRef> {
    let names: Vec<String> = (1..=n).map(|i| format!("l{i}")).collect();
    Ring::new(&names, *field, crate::algebra::monomial::MonomialOrder::GrevLex)
}

impl SecondFF {
    pub fn n(&self) -> usize {
        self.frame.n()
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// `dim |II_x|`, that is, the number of quadrics minus one.
    pub fn system_dim(&self) -> i64 {
        self.quadrics.len() as i64 - 1
    }

    /// `A(λ)`: rows indexed by normal coordinates, columns by `j`, entry
    /// `Σ_i λ_i · second[i][j]` in that coordinate.
    pub fn focal_matrix(&self) -> Vec<Vec<Polynomial>> {
        let n = self.n();
        self.matrix
            .iter()
            .map(|m| {
                (0..n)
                    .map(|j| {
                        let mut acc = Polynomial::zero(&self.ring);
                        for (i, row) in m.iter().enumerate() {
                            acc = &acc + &Polynomial::var(&self.ring, i).scale(&row[j]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    /// `A(w)` for a concrete direction.
    pub fn focal_matrix_at(&self, w: &[Scalar]) -> Matrix {
        let f = &self.frame.field;
        let n = self.n();
        let rows: Vec<Vector> = self
            .matrix
            .iter()
            .map(|m| {
                (0..n)
                    .map(|j| {
                        let mut acc = f.zero();
                        for (i, row) in m.iter().enumerate() {
                            acc = f.add(&acc, &f.mul(&w[i], &row[j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(f, &rows, n)
    }

    /// Coordinates in `λ` of a parameter-space tangent vector, if it is
    /// tangent to the locus.
    pub fn direction(&self, param_vec: &[Scalar]) -> Option<Vector> {
        linalg::coordinates(&self.frame.field, &self.locus_basis, param_vec)
    }
}

/// Second fundamental form at a regular point drawn from `rng`.
pub fn second_ff_with<R: Rng + ?Sized>(x: &VarietyHandle, rng: &mut R) -> Result<SecondFF> {
    let p = x.require_param()?;
    let f = *p.field();
    let frame = tangential::regular_point(p, rng)?;
    let locus_basis = p.locus_tangent(&frame.params);
    let n = frame.n();
    let (basis, k) = frame.adapted_basis();
    let normal: Vec<Vec<Vector>> = (0..n)
        .map(|i| (0..n).map(|j| frame.normal_part(&basis, k, &frame.second[i][j])).collect())
        .collect();
    let codim = basis.len() - k;
    let matrix: Vec<Vec<Vec<Scalar>>> = (0..codim)
        .map(|c| (0..n).map(|i| (0..n).map(|j| normal[i][j][c].clone()).collect()).collect())
        .collect();
    let ring = lambda_ring(&f, n)?;
    let coeff_rows: Vec<Vector> = matrix
        .iter()
        .map(|m| {
            (0..n)
                .flat_map(|i| (i..n).map(move |j| (i, j)))
                .map(|(i, j)| if i == j { m[i][i].clone() } else { f.add(&m[i][j], &m[j][i]) })
                .collect()
        })
        .collect();
    let quadrics = linalg::independent_subset(&f, &coeff_rows)
        .into_iter()
        .map(|row| {
            let mut acc = Polynomial::zero(&ring);
            let pairs = (0..n).flat_map(|i| (i..n).map(move |j| (i, j)));
            for ((i, j), c) in pairs.zip(&row) {
                let mut e = vec![0u32; n];
                e[i] += 1;
                e[j] += 1;
                acc = &acc + &Polynomial::monomial(&ring, Monomial::from_exponents(&e), c.clone());
            }
            acc
        })
        .collect();
    Ok(SecondFF {
        frame,
        locus_basis,
        quadrics,
        normal_basis: basis[k..].to_vec(),
        matrix,
        ring,
    })
}

pub fn second_ff(x: &VarietyHandle) -> Result<SecondFF> {
    let mut rng = rng_for(x.field().seed, "second_ff", 0);
    second_ff_with(x, &mut rng)
}

/// The ideal of `Bs|II_x|` in `l1..ln` and its projective Hilbert data.
pub fn ff_base_locus(ff: &SecondFF) -> Result<(Ideal, HilbertData)> {
    let ideal = Ideal::homogeneous(&ff.ring, ff.quadrics.clone())?;
    let h = ideal.hilbert_dim_degree()?;
    Ok((ideal, h))
}

/// Projective dimension of the closure of the image of
/// `λ ↦ (q_1(λ) : … : q_c(λ))`; `-1` if there are no quadrics.
pub fn quadric_image_dim(ff: &SecondFF) -> Result<i64> {
    if ff.quadrics.is_empty() {
        return Ok(-1);
    }
    let ideal = eliminate_to_ambient(&ff.ring, &ff.quadrics, &[], crate::groebner::DEFAULT_DEGREE_CAP)?;
    Ok(ideal.hilbert_dim_degree()?.projective_dimension)
}

#[derive(Clone, Debug)]
pub struct FocalData {
    pub focal_ideal: Ideal,
    pub is_hypersurface: bool,
    pub focal_degree: Option<i64>,
    pub ff: SecondFF,
}

fn det_poly(m: &[Vec<Polynomial>], ring: &RingRef) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(ring);
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][c] * &det_poly(&minor, ring);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Focal locus in `P(t_x X)`: maximal minors of `A(λ)`.
pub fn focal_at_with<R: Rng + ?Sized>(x: &VarietyHandle, rng: &mut R) -> Result<FocalData> {
    let p = x.require_param()?;
    let n = p.expected_dim();
    let big_n = p.ambient_dim();
    if big_n < 2 * n {
        return Err(Error::Unsupported(format!("focal locus needs N >= 2n, got N = {big_n}")));
    }
    if tan_dim_fast(x, tangential::DEFAULT_TRIALS)? < 2 * n {
        return Err(Error::TangentFamilyDegenerate);
    }
    let ff = second_ff_with(x, rng)?;
    let a = ff.focal_matrix();
    let minors: Vec<Polynomial> = combinations(a.len(), n)
        .into_iter()
        .map(|rows| {
            let sub: Vec<Vec<Polynomial>> = rows.iter().map(|&r| a[r].clone()).collect();
            det_poly(&sub, &ff.ring)
        })
        .filter(|d| !d.is_zero())
        .collect();
    if minors.is_empty() {
        return Err(Error::TangentFamilyDegenerate);
    }
    let focal_ideal = Ideal::homogeneous(&ff.ring, minors.clone())?;
    let gb = focal_ideal.gb()?;
    let is_hypersurface = gb.gens().len() == 1;
    let focal_degree = is_hypersurface.then(|| gb.gens()[0].total_degree());
    Ok(FocalData {
        focal_ideal,
        is_hypersurface,
        focal_degree,
        ff,
    })
}

pub fn focal_at(x: &VarietyHandle) -> Result<FocalData> {
    let mut rng = rng_for(x.field().seed, "focal", 0);
    focal_at_with(x, &mut rng)
}

/// Outcome of a developability test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Developability {
    pub developable: bool,
    /// Rank of `a_0(t)..a_r(t), a_0'(t)..a_r'(t)`.
    pub rank: usize,
    /// Basis, in the coordinates `λ` of `Σ λ_i a_i(t)`, of the focal
    /// hyperplane; empty unless developable.
    #[serde(skip)]
    pub focal_lambdas: Vec<Vector>,
    /// Points `Σ λ_i a_i(t)` spanning the focal hyperplane.
    #[serde(skip)]
    pub focal_points: Vec<Vector>,
    #[serde(skip)]
    pub t: Scalar,
}

fn check_family(family: &[Vec<Polynomial>]) -> Result<(RingRef, usize)> {
    let first = family
        .first()
        .and_then(|a| a.first())
        .ok_or_else(|| Error::DegenerateFamily("empty family".into()))?;
    let ring = first.ring().clone();
    if ring.nvars() != 1 {
        return Err(Error::DegenerateFamily("family must depend on one variable".into()));
    }
    let len = family[0].len();
    if family.iter().any(|a| a.len() != len) {
        return Err(Error::DimensionMismatch("family vectors differ in length".into()));
    }
    Ok((ring, len))
}

fn eval_vec(a: &[Polynomial], t: &Scalar) -> Vector {
    a.iter().map(|p| p.evaluate(std::slice::from_ref(t)).expect("one variable")).collect()
}

fn developability_at(family: &[Vec<Polynomial>], t: &Scalar, field: &FieldConfig) -> Result<Developability> {
    let r1 = family.len();
    let pts: Vec<Vector> = family.iter().map(|a| eval_vec(a, t)).collect();
    let ders: Vec<Vector> = family
        .iter()
        .map(|a| eval_vec(&a.iter().map(|p| p.derivative(0)).collect::<Vec<_>>(), t))
        .collect();
    if linalg::rank_of(field, &pts) < r1 {
        return Err(Error::DegenerateFamily(format!("the {r1} vectors are dependent")));
    }
    let mut all = pts.clone();
    all.extend(ders.iter().cloned());
    let rank = linalg::rank_of(field, &all);
    let developable = rank == r1 + 1;
    let (focal_lambdas, focal_points) = if developable {
        let mut basis = pts.clone();
        basis.extend(linalg::complete_basis(field, &pts, pts[0].len()));
        let normals: Vec<Vector> = ders
            .iter()
            .map(|d| linalg::coordinates(field, &basis, d).expect("basis")[r1..].to_vec())
            .collect();
        let b = Matrix::from_rows(field, &normals, normals[0].len());
        let lambdas = b.transpose().kernel(field);
        let points = lambdas
            .iter()
            .map(|l| {
                let mut acc = vec![field.zero(); pts[0].len()];
                for (c, v) in l.iter().zip(&pts) {
                    acc = linalg::axpy(field, c, v, &acc);
                }
                acc
            })
            .collect();
        (lambdas, points)
    } else {
        (Vec::new(), Vec::new())
    };
    Ok(Developability {
        developable,
        rank,
        focal_lambdas,
        focal_points,
        t: t.clone(),
    })
}

/// Whether the family `t ↦ ⟨a_0(t), …, a_r(t)⟩` is developable, decided by
/// a majority over random parameter values.
pub fn developable_check(family: &[Vec<Polynomial>], trials: usize) -> Result<Developability> {
    let (ring, _) = check_family(family)?;
    let f = *ring.field();
    let mut seen = Vec::new();
    let m = majority(f.seed, "developable", trials, |rng| {
        let t = f.random(rng);
        let d = developability_at(family, &t, &f)?;
        let rank = d.rank as i64;
        seen.push(d);
        Ok(rank)
    })?;
    Ok(seen.into_iter().find(|d| d.rank as i64 == m.value).expect("majority value was seen"))
}
