//! Dense exact linear algebra over a [`FieldConfig`].

use crate::algebra::field::{FieldConfig, Scalar};

pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &FieldConfig, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &FieldConfig, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(field: &FieldConfig, rows: &[Vector], cols: usize) -> Self {
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            m.data[i * cols..(i + 1) * cols].clone_from_slice(r);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, field: &FieldConfig, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = field.add(out.get(i, j), &field.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, field: &FieldConfig, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| dot(field, &self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect()
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self, field: &FieldConfig) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !field.is_zero(self.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = field.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..self.cols {
                let v = field.mul(self.get(r, j), &inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if field.is_zero(&factor) {
                    continue;
                }
                for j in c..self.cols {
                    let v = field.sub(self.get(i, j), &field.mul(&factor, self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &FieldConfig) -> usize {
        self.clone().rref(field).len()
    }

    /// Basis of `{x : self·x = 0}`.
    pub fn kernel(&self, field: &FieldConfig) -> Vec<Vector> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![field.zero(); self.cols];
                v[f] = field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = field.neg(m.get(r, f));
                }
                v
            })
            .collect()
    }

    /// One solution of `self·x = b`, if any.
    pub fn solve(&self, field: &FieldConfig, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref(field);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn determinant(&self, field: &FieldConfig) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !field.is_zero(m.get(i, c))) else {
                return field.zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = field.neg(&det);
            }
            let piv = m.get(c, c).clone();
            det = field.mul(&det, &piv);
            let inv = field.inv(&piv).expect("nonzero");
            for i in c + 1..n {
                let factor = field.mul(m.get(i, c), &inv);
                if field.is_zero(&factor) {
                    continue;
                }
                for j in c..n {
                    let v = field.sub(m.get(i, j), &field.mul(&factor, m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }
}

pub fn dot(field: &FieldConfig, a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .fold(field.zero(), |acc, (x, y)| field.add(&acc, &field.mul(x, y)))
}

pub fn axpy(field: &FieldConfig, a: &Scalar, x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter()
        .zip(y)
        .map(|(xi, yi)| field.add(&field.mul(a, xi), yi))
        .collect()
}

pub fn scale(field: &FieldConfig, a: &Scalar, x: &[Scalar]) -> Vector {
    x.iter().map(|xi| field.mul(a, xi)).collect()
}

pub fn is_zero_vec(field: &FieldConfig, v: &[Scalar]) -> bool {
    v.iter().all(|x| field.is_zero(x))
}

/// Rank of a list of equal-length vectors.
pub fn rank_of(field: &FieldConfig, vecs: &[Vector]) -> usize {
    match vecs.first() {
        None => 0,
        Some(v) => Matrix::from_rows(field, vecs, v.len()).rank(field),
    }
}

/// A maximal independent subset, kept in order.
pub fn independent_subset(field: &FieldConfig, vecs: &[Vector]) -> Vec<Vector> {
    let mut kept: Vec<Vector> = Vec::new();
    for v in vecs {
        let mut trial = kept.clone();
        trial.push(v.clone());
        if rank_of(field, &trial) == trial.len() {
            kept = trial;
        }
    }
    kept
}

/// Unit vectors completing the span of `rows` to the whole space; each
/// added vector is `e_j` for the first `j` not yet spanned.
pub fn complete_basis(field: &FieldConfig, rows: &[Vector], dim: usize) -> Vec<Vector> {
    let mut span = independent_subset(field, rows);
    let mut added = Vec::new();
    for j in 0..dim {
        if span.len() == dim {
            break;
        }
        let mut e = vec![field.zero(); dim];
        e[j] = field.one();
        let mut trial = span.clone();
        trial.push(e.clone());
        if rank_of(field, &trial) == trial.len() {
            span = trial;
            added.push(e);
        }
    }
    added
}

/// Coordinates of `v` in the basis `basis` (rows). `None` if `v` is not
/// in the span.
pub fn coordinates(field: &FieldConfig, basis: &[Vector], v: &[Scalar]) -> Option<Vector> {
    let dim = v.len();
    let mt = Matrix::from_rows(field, basis, dim).transpose();
    mt.solve(field, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> FieldConfig {
        FieldConfig::default()
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f().from_i64(x)).collect()
    }

    #[test]
    fn rank_kernel_solve() {
        let fc = f();
        let m = Matrix::from_rows(&fc, &[v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])], 3);
        assert_eq!(m.rank(&fc), 2);
        let k = m.kernel(&fc);
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&fc, &m.mul_vec(&fc, &k[0])));
        let x = m.solve(&fc, &v(&[1, 2, 0])).unwrap();
        assert_eq!(m.mul_vec(&fc, &x), v(&[1, 2, 0]));
        assert!(m.solve(&fc, &v(&[1, 0, 0])).is_none());
    }

    #[test]
    fn determinant_and_completion() {
        let fc = f();
        let m = Matrix::from_rows(&fc, &[v(&[2, 1]), v(&[1, 3])], 2);
        assert_eq!(m.determinant(&fc), fc.from_i64(5));
        let rows = vec![v(&[1, 2, 4, 8]), v(&[0, 1, 4, 12])];
        let extra = complete_basis(&fc, &rows, 4);
        assert_eq!(extra, vec![v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]);
        let c = coordinates(&fc, &rows, &v(&[1, 3, 8, 20])).unwrap();
        assert_eq!(c, v(&[1, 1]));
    }
}
