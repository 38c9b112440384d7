//! Dense exact linear algebra over `Scalar`: reduced row-echelon form,
//! kernels, spans, intersections. Every subspace is kept in RREF so that
//! subspace equality is representation equality.

use crate::error::Error;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set_column(&mut self, j: usize, v: &[Scalar]) {
        assert_eq!(v.len(), self.rows);
        for (i, x) in v.iter().enumerate() {
            self[(i, j)] = x.clone();
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other[(k, j)].is_zero() {
                        continue;
                    }
                    out[(i, j)] = &out[(i, j)] + &self[(i, k)] * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact inverse via Gauss-Jordan; None for singular matrices.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// exp(m) for nilpotent m; panics if m is not nilpotent.
    pub fn exp_nilpotent(&self) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.rows);
        let mut term = Matrix::identity(self.rows);
        for k in 1..=(self.rows + 1) {
            term = term.mul(self).scale(&Scalar::from_rat(1, k as i64));
            if term.is_zero() {
                return acc.add(&term);
            }
            acc = acc.add(&term);
        }
        panic!("matrix is not nilpotent");
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// Reduced row-echelon form with exact division pivoting and
    /// first-nonzero pivot choice; deterministic output.
    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, col)].inverse().expect("pivot is nonzero");
            for j in col..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, col)].is_zero() {
                    let factor = m[(i, col)].clone();
                    for j in col..m.cols {
                        m[(i, j)] = &m[(i, j)] - &factor * &m[(r, j)];
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of `{v : m v = 0}` as a subspace of the column space.
    pub fn kernel(&self) -> SubspaceBasis {
        let (r, pivots) = self.rref_with_pivots();
        let mut vectors = Vec::new();
        let mut pivot_row = vec![None; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            pivot_row[col] = Some(row);
        }
        for free in 0..self.cols {
            if pivot_row[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for col in 0..self.cols {
                if let Some(row) = pivot_row[col] {
                    v[col] = -&r[(row, free)];
                }
            }
            vectors.push(v);
        }
        SubspaceBasis::from_vectors(self.cols, vectors)
    }

    /// One exact solution of `m x = b`, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r[(row, self.cols)].clone();
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }
}

/// A subspace of a fixed coordinate space, stored as RREF row vectors.
/// Pivot columns strictly increase, each pivot entry is 1 and is the only
/// nonzero entry in its column, so equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    vectors: Vec<Vec<Scalar>>,
}

impl SubspaceBasis {
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length differs from ambient");
        }
        if vectors.is_empty() {
            return SubspaceBasis {
                ambient,
                vectors: vec![],
            };
        }
        let m = Matrix::from_rows(vectors).rref();
        let vectors = (0..m.rows())
            .map(|i| m.row(i).to_vec())
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect();
        SubspaceBasis { ambient, vectors }
    }

    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            vectors: vec![],
        }
    }

    pub fn full(ambient: usize) -> Self {
        SubspaceBasis::from_vectors(
            ambient,
            (0..ambient)
                .map(|i| {
                    let mut v = vec![Scalar::zero(); ambient];
                    v[i] = Scalar::one();
                    v
                })
                .collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Scalar>] {
        &self.vectors
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient");
        let mut w = v.to_vec();
        for row in &self.vectors {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("RREF row");
            if !w[pivot].is_zero() {
                let c = w[pivot].clone();
                for j in 0..self.ambient {
                    w[j] = &w[j] - &c * &row[j];
                }
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut vs = self.vectors.clone();
        vs.extend(other.vectors.clone());
        Ok(SubspaceBasis::from_vectors(self.ambient, vs))
    }

    /// Intersection via the kernel of `[A^t | -B^t]`.
    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let (k, m) = (self.dim(), other.dim());
        if k == 0 || m == 0 {
            return Ok(SubspaceBasis::zero(self.ambient));
        }
        let mut stacked = Matrix::zero(self.ambient, k + m);
        for (col, v) in self.vectors.iter().enumerate() {
            for i in 0..self.ambient {
                stacked[(i, col)] = v[i].clone();
            }
        }
        for (col, v) in other.vectors.iter().enumerate() {
            for i in 0..self.ambient {
                stacked[(i, k + col)] = -&v[i];
            }
        }
        let ker = stacked.kernel();
        let vectors = ker
            .vectors()
            .iter()
            .map(|coeffs| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (c, basis_vec) in coeffs[..k].iter().zip(&self.vectors) {
                    if !c.is_zero() {
                        for i in 0..self.ambient {
                            v[i] = &v[i] + c * &basis_vec[i];
                        }
                    }
                }
                v
            })
            .collect();
        Ok(SubspaceBasis::from_vectors(self.ambient, vectors))
    }

    /// Express `v` in this basis; `None` when `v` is outside the span.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for row in &self.vectors {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("RREF row");
            let c = w[pivot].clone();
            if !c.is_zero() {
                for j in 0..self.ambient {
                    w[j] = &w[j] - &c * &row[j];
                }
            }
            coords.push(c);
        }
        if w.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_vec(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Scalar::from_int).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_examples() {
        let r = m(vec![vec![2, 4], vec![1, 2]]).rref();
        assert_eq!(r, m(vec![vec![1, 2], vec![0, 0]]));
        let id = Matrix::identity(3);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_over_function_field() {
        // [[alpha, 1], [0, 0]] -> [[1, 1/alpha], [0, 0]]
        let a = Matrix::from_rows(vec![
            vec![Scalar::alpha(), Scalar::one()],
            vec![Scalar::zero(), Scalar::zero()],
        ]);
        let r = a.rref();
        assert_eq!(r[(0, 0)], Scalar::one());
        assert_eq!(r[(0, 1)], Scalar::one().field_div(&Scalar::alpha()).unwrap());
    }

    #[test]
    fn kernel_examples() {
        let k = m(vec![vec![1, 0], vec![0, 0]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[Scalar::zero(), Scalar::one()]));
        assert_eq!(Matrix::identity(4).kernel().dim(), 0);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        let k = a.kernel();
        assert_eq!(k.dim(), 3 - a.rank());
        for v in k.vectors() {
            assert!(is_zero_vec(&a.mul_vec(v)));
        }
    }

    #[test]
    fn intersect_examples() {
        let x = SubspaceBasis::from_vectors(2, vec![vec![Scalar::one(), Scalar::zero()]]);
        let y = SubspaceBasis::from_vectors(2, vec![vec![Scalar::zero(), Scalar::one()]]);
        assert_eq!(x.intersect(&y).unwrap().dim(), 0);
        assert_eq!(x.intersect(&x).unwrap(), x);

        let a = SubspaceBasis::from_vectors(
            3,
            vec![
                vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
            ],
        );
        let b = SubspaceBasis::from_vectors(
            3,
            vec![
                vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
                vec![Scalar::zero(), Scalar::zero(), Scalar::one()],
            ],
        );
        let c = a.intersect(&b).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[Scalar::zero(), Scalar::one(), Scalar::zero()]));
    }

    #[test]
    fn contains_examples() {
        let s = SubspaceBasis::from_vectors(2, vec![vec![Scalar::one(), Scalar::zero()]]);
        assert!(s.contains(&[Scalar::zero(), Scalar::zero()]));
        assert!(!s.contains(&[Scalar::one(), Scalar::one()]));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = SubspaceBasis::zero(2);
        let b = SubspaceBasis::zero(3);
        assert!(a.intersect(&b).is_err());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(vec![vec![1, 1], vec![0, 1]]);
        let x = a
            .solve(&[Scalar::from_int(3), Scalar::from_int(1)])
            .unwrap();
        assert!(is_zero_vec(
            &a.mul_vec(&x)
                .iter()
                .zip([Scalar::from_int(3), Scalar::from_int(1)])
                .map(|(u, v)| u - &v)
                .collect::<Vec<_>>()
        ));
        let b = m(vec![vec![1, 1], vec![1, 1]]);
        assert!(b.solve(&[Scalar::zero(), Scalar::one()]).is_none());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..5, r * c).prop_map(move |vals| {
                Matrix::from_rows(
                    vals.chunks(c)
                        .map(|row| row.iter().map(|&x| Scalar::from_int(x)).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_nullity(a in small_matrix()) {
            prop_assert_eq!(a.rank() + a.kernel().dim(), a.cols());
        }

        #[test]
        fn kernel_annihilates(a in small_matrix()) {
            for v in a.kernel().vectors() {
                prop_assert!(is_zero_vec(&a.mul_vec(v)));
            }
        }

        #[test]
        fn dim_formula(a in small_matrix(), b in small_matrix()) {
            let n = a.cols().max(b.cols());
            let pad = |m: &Matrix| {
                let vs: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| {
                    let mut row = m.row(i).to_vec();
                    row.resize(n, Scalar::zero());
                    row
                }).collect();
                SubspaceBasis::from_vectors(n, vs)
            };
            let (sa, sb) = (pad(&a), pad(&b));
            let inter = sa.intersect(&sb).unwrap();
            let sum = sa.sum(&sb).unwrap();
            prop_assert_eq!(inter.dim() + sum.dim(), sa.dim() + sb.dim());
        }
    }
}
