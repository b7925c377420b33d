//! Dense matrices over a finite field, exact determinants and the all-minors
//! MDS test for generator matrices.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::galois::{FieldElement, FiniteField};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn from_fn(
        field: FiniteField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert!(e.field() == field, "matrix entry from a different field");
                entries.push(e);
            }
        }
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(field: FiniteField, rows: &[Vec<FieldElement>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        if rows.iter().flatten().any(|e| e.field() != field) {
            return Err(Error::CrossField);
        }
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        })
    }

    pub fn identity(field: FiniteField, n: usize) -> Self {
        Self::from_fn(
            field,
            n,
            n,
            |i, j| if i == j { field.one() } else { field.zero() },
        )
    }

    /// The `n × n` moment matrix with `(i, j)` entry `points[j]^i`.
    pub fn vandermonde(points: &[FieldElement]) -> Result<Self> {
        let field = points
            .first()
            .ok_or_else(|| Error::InvalidParameter("no points".into()))?
            .field();
        if points.iter().any(|p| p.field() != field) {
            return Err(Error::CrossField);
        }
        let n = points.len();
        Ok(Self::from_fn(field, n, n, |i, j| points[j].powu(i as u64)))
    }

    pub fn field(&self) -> FiniteField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of bounds"
        );
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Submatrix keeping the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.field, self.rows, cols.len(), |i, j| {
            self.get(i, cols[j])
        })
    }

    /// This matrix with `row` appended at the bottom.
    pub fn stack_row(&self, row: &[FieldElement]) -> Result<Self> {
        if row.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: row.len(),
            });
        }
        if row.iter().any(|e| e.field() != self.field) {
            return Err(Error::CrossField);
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(row);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + 1,
            cols: self.cols,
            entries,
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<FieldElement> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.entries.clone();
        let mut negate = false;
        let mut prev = self.field.one();
        for k in 0..n {
            if m[k * n + k].is_zero() {
                let Some(pivot) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return Ok(self.field.zero());
                };
                for j in 0..n {
                    m.swap(k * n + j, pivot * n + j);
                }
                negate = !negate;
            }
            let pkk = m[k * n + k];
            for i in k + 1..n {
                let pik = m[i * n + k];
                for j in k + 1..n {
                    m[i * n + j] = (m[i * n + j] * pkk - pik * m[k * n + j]) / prev;
                }
            }
            prev = pkk;
        }
        let det = if n == 0 {
            self.field.one()
        } else {
            m[n * n - 1]
        };
        Ok(if negate { -det } else { det })
    }

    /// Solves `self · x = rhs` for square nonsingular `self` by Gauss-Jordan.
    #[cfg(test)]
    pub(crate) fn solve(&self, rhs: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        let mut a: Vec<Vec<FieldElement>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(rhs[i]);
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero())?;
            a.swap(c, p);
            let inv = a[c][c].inv().ok()?;
            for x in a[c].iter_mut() {
                *x *= inv;
            }
            for i in 0..n {
                if i != c && !a[i][c].is_zero() {
                    let f = a[i][c];
                    let pivot = a[c].clone();
                    for (x, v) in a[i].iter_mut().zip(pivot) {
                        *x -= f * v;
                    }
                }
            }
        }
        Some(a.into_iter().map(|r| r[n]).collect())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        write!(f, "{self}")
    }
}

/// One row per line, entries as canonical encodings separated by spaces.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line = self.row(i).iter().map(|e| e.value().to_string()).join(" ");
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// `∏_{i<j} (points[j] - points[i])`.
pub fn vandermonde_det(points: &[FieldElement]) -> Result<FieldElement> {
    let field = points
        .first()
        .ok_or_else(|| Error::InvalidParameter("no points".into()))?
        .field();
    let mut acc = field.one();
    for (j, &b) in points.iter().enumerate() {
        for &a in &points[..j] {
            acc = acc.checked_mul(b.checked_sub(a)?)?;
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MdsVerdict {
    pub is_mds: bool,
    /// First singular column subset in lexicographic order, when not MDS.
    pub witness: Option<Vec<usize>>,
}

/// Checks that every `k`-column submatrix of the `k`-row matrix `g` is nonsingular.
pub fn mds_generator_check(g: &Matrix, k: usize) -> Result<MdsVerdict> {
    if g.rows() != k {
        return Err(Error::RowCount {
            rows: g.rows(),
            expected: k,
        });
    }
    if g.cols() < k {
        return Err(Error::InvalidParameter(format!(
            "{} columns cannot hold a {k}-subset",
            g.cols()
        )));
    }
    for cols in (0..g.cols()).combinations(k) {
        if g.select_columns(&cols).determinant()?.is_zero() {
            return Ok(MdsVerdict {
                is_mds: false,
                witness: Some(cols),
            });
        }
    }
    Ok(MdsVerdict {
        is_mds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(q: u64) -> FiniteField {
        FiniteField::with_order(q).unwrap()
    }

    fn els(q: u64, v: &[u64]) -> Vec<FieldElement> {
        v.iter().map(|&x| f(q).element(x).unwrap()).collect()
    }

    // Cofactor expansion along the first row.
    fn cofactor_det(m: &Matrix) -> FieldElement {
        let n = m.rows();
        if n == 0 {
            return m.field().one();
        }
        let mut acc = m.field().zero();
        for j in 0..n {
            let minor = Matrix::from_fn(m.field(), n - 1, n - 1, |r, c| {
                m.get(r + 1, if c < j { c } else { c + 1 })
            });
            let term = m.get(0, j) * cofactor_det(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(Matrix::identity(f(5), 3).determinant().unwrap(), f(5).one());
        let rows = vec![els(5, &[1, 1, 2]), els(5, &[3, 3, 0]), els(5, &[4, 4, 1])];
        let m = Matrix::from_rows(f(5), &rows).unwrap();
        assert!(m.determinant().unwrap().is_zero());
        let v = Matrix::vandermonde(&els(5, &[1, 2, 3])).unwrap();
        assert_eq!(cofactor_det(&v).value(), 2);
        assert_eq!(v.determinant().unwrap().value(), 2);
        assert!(matches!(
            Matrix::from_fn(f(5), 2, 3, |_, _| f(5).one()).determinant(),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn vandermonde_product() {
        assert_eq!(vandermonde_det(&els(5, &[1, 2, 3])).unwrap().value(), 2);
        assert!(vandermonde_det(&els(7, &[1, 4, 1])).unwrap().is_zero());
        assert_eq!(vandermonde_det(&els(9, &[5])).unwrap(), f(9).one());
    }

    #[test]
    fn vandermonde_formula_matches_elimination_exhaustively() {
        for q in [4u64, 5, 7, 8, 9] {
            let field = f(q);
            for size in 1..=4usize.min(q as usize) {
                for pts in field.elements(false).into_iter().combinations(size) {
                    let m = Matrix::vandermonde(&pts).unwrap();
                    assert_eq!(vandermonde_det(&pts).unwrap(), m.determinant().unwrap());
                }
            }
        }
    }

    #[test]
    fn mds_examples() {
        let g = Matrix::from_rows(f(5), &[els(5, &[1, 1, 1, 0]), els(5, &[0, 1, 2, 1])]).unwrap();
        assert_eq!(
            mds_generator_check(&g, 2).unwrap(),
            MdsVerdict {
                is_mds: true,
                witness: None
            }
        );
        let z = Matrix::from_rows(f(5), &[els(5, &[1, 0, 1, 0]), els(5, &[0, 0, 2, 1])]).unwrap();
        let v = mds_generator_check(&z, 2).unwrap();
        assert!(!v.is_mds);
        assert_eq!(v.witness, Some(vec![0, 1]));
        assert!(matches!(
            mds_generator_check(&g, 3),
            Err(Error::RowCount { .. })
        ));
    }

    fn square(q: u64) -> impl Strategy<Value = (u64, usize, Vec<u64>, usize, usize, u64)> {
        (1usize..=5).prop_flat_map(move |n| {
            (
                Just(q),
                Just(n),
                prop::collection::vec(0..q, n * n),
                0..n,
                0..n,
                1..q,
            )
        })
    }

    proptest! {
        #[test]
        fn determinant_alternating_and_multilinear((q, n, e, c1, c2, s) in prop_oneof![square(7), square(9), square(13)]) {
            let field = f(q);
            let m = Matrix::from_fn(field, n, n, |i, j| field.element(e[i * n + j]).unwrap());
            let d = m.determinant().unwrap();
            prop_assert_eq!(d, cofactor_det(&m));
            let mut cols: Vec<usize> = (0..n).collect();
            cols.swap(c1, c2);
            let swapped = m.select_columns(&cols).determinant().unwrap();
            prop_assert_eq!(swapped, if c1 == c2 { d } else { -d });
            let scale = field.element(s).unwrap();
            let scaled = Matrix::from_fn(field, n, n, |i, j| if j == c1 { m.get(i, j) * scale } else { m.get(i, j) });
            prop_assert_eq!(scaled.determinant().unwrap(), d * scale);
        }
    }
}
