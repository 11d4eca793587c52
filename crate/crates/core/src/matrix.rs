//! Dense exact matrices.
//!
//! A matrix with `r` rows and `c` columns is a linear map from a space of
//! dimension `c` to one of dimension `r`; composition is matrix product.
//! Tensor factors are ordered left-major: `e_i ⊗ e_j` has index `i * dim(W) + j`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::pipeline::Comparison;
use crate::setfn::SetFn;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix entrywise. Entries must already belong to `field`.
    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let s = f(r, c);
                debug_assert!(field.contains(&s));
                data.push(s);
            }
        }
        ExactMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::dims("matrix row length", cols, row.len()));
            }
            for s in row {
                data.push(field.normalize(s)?);
            }
        }
        Ok(ExactMatrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Row-major integer entries.
    pub fn from_ints(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dims("matrix entries", rows * cols, entries.len()));
        }
        Ok(ExactMatrix {
            field,
            rows,
            cols,
            data: entries.iter().map(|&n| field.from_i64(n)).collect(),
        })
    }

    /// The `1 × 1` matrix holding `s`.
    pub fn scalar(field: FieldSpec, s: Scalar) -> Result<Self> {
        Ok(ExactMatrix {
            field,
            rows: 1,
            cols: 1,
            data: vec![field.normalize(s)?],
        })
    }

    /// The linearization of a set map: column `x` is the basis vector `f(x)`.
    pub fn from_setfn(field: FieldSpec, f: &SetFn) -> Self {
        let mut m = Self::zeros(field, f.cod(), f.dom());
        for x in 0..f.dom() {
            m.data[f.apply(x) * f.dom() + x] = field.one();
        }
        m
    }

    /// The flip `V ⊗ W → W ⊗ V` with `dim V = a`, `dim W = b`.
    pub fn flip(field: FieldSpec, a: usize, b: usize) -> Self {
        Self::from_setfn(field, &SetFn::flip(a, b))
    }

    /// The column vector of basis element `i`.
    pub fn basis_vector(field: FieldSpec, n: usize, i: usize) -> Self {
        let mut m = Self::zeros(field, n, 1);
        m.data[i] = field.one();
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) -> Result<()> {
        self.data[r * self.cols + c] = self.field.normalize(s)?;
        Ok(())
    }

    /// Adds `s` to entry `(r, c)`.
    pub fn accumulate(&mut self, r: usize, c: usize, s: &Scalar) {
        let i = r * self.cols + c;
        self.data[i] = self.field.add(&self.data[i], s);
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Nonzero entries of column `c` as `(row, value)` pairs.
    pub fn column_sparse(&self, c: usize) -> Vec<(usize, Scalar)> {
        (0..self.rows)
            .filter_map(|r| {
                let s = self.get(r, c);
                (!s.is_zero()).then(|| (r, s.clone()))
            })
            .collect()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    /// `self ∘ g`, i.e. the product `self · g`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        self.same_field(g)?;
        if self.cols != g.rows {
            return Err(Error::dims("composition", self.cols, g.rows));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, g.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..g.cols {
                    let b = g.get(k, j);
                    if !b.is_zero() {
                        out.accumulate(i, j, &f.mul(a, b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: row `i * other.rows + k`, column `j * other.cols + l`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let f = self.field;
        let mut out = Self::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * out.cols + j * other.cols + l] =
                                f.mul(a, b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::dims("matrix sum", self.rows * self.cols, other.rows * other.cols));
        }
        let f = self.field;
        Ok(ExactMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let f = self.field;
        ExactMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let s = self.get(r, c);
                    if r == c {
                        s.is_one()
                    } else {
                        s.is_zero()
                    }
                })
            })
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::dims("matrix power", self.rows, self.cols));
        }
        let mut acc = Self::identity(self.field, self.rows);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Scalar {
        let f = self.field;
        (0..self.rows.min(self.cols)).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    /// Gauss-Jordan inverse; `None` when singular or non-square.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let mut a = self.clone();
        let mut inv = Self::identity(f, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                    inv.data.swap(pivot * n + c, col * n + c);
                }
            }
            let p = f.inv(a.get(col, col)).expect("pivot is nonzero");
            for c in 0..n {
                a.data[col * n + c] = f.mul(&a.data[col * n + c], &p);
                inv.data[col * n + c] = f.mul(&inv.data[col * n + c], &p);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in 0..n {
                    let da = f.mul(&factor, &a.data[col * n + c]);
                    a.data[r * n + c] = f.sub(&a.data[r * n + c], &da);
                    let di = f.mul(&factor, &inv.data[col * n + c]);
                    inv.data[r * n + c] = f.sub(&inv.data[r * n + c], &di);
                }
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }

    /// Column-by-column comparison with a matrix of the same shape.
    pub fn compare_columns(&self, other: &Self) -> Result<Comparison> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::dims("compared matrices", self.rows * self.cols, other.rows * other.cols));
        }
        let mut cmp = Comparison {
            violations: 0,
            first: None,
        };
        for c in 0..self.cols {
            if (0..self.rows).any(|r| self.get(r, c) != other.get(r, c)) {
                cmp.violations += 1;
                cmp.first.get_or_insert(c);
            }
        }
        Ok(cmp)
    }

    /// Reads the matrix as a set map when every column is a basis vector.
    pub fn as_setfn(&self) -> Option<SetFn> {
        let table = (0..self.cols)
            .map(|c| match self.column_sparse(c).as_slice() {
                [(r, s)] if s.is_one() => Some(*r),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        SetFn::new(table, self.rows).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix> {
        proptest::collection::vec(-3i64..4, rows * cols)
            .prop_map(move |v| ExactMatrix::from_ints(Q, rows, cols, &v).unwrap())
    }

    #[test]
    fn kron_index_convention() {
        let a = ExactMatrix::from_ints(Q, 2, 1, &[1, 2]).unwrap();
        let b = ExactMatrix::from_ints(Q, 2, 1, &[3, 5]).unwrap();
        let k = a.kron(&b).unwrap();
        let expected = ExactMatrix::from_ints(Q, 4, 1, &[3, 5, 6, 10]).unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn flip_moves_index() {
        let c = ExactMatrix::flip(Q, 2, 3);
        // e_1 ⊗ e_2 has index 1*3+2 = 5 and lands on e_2 ⊗ e_1 = 2*2+1 = 5;
        // e_0 ⊗ e_1 (index 1) lands on e_1 ⊗ e_0 (index 2).
        assert!(c.get(2, 1).is_one());
        assert!(c.get(5, 5).is_one());
    }

    #[test]
    fn inverse_of_singular_is_none() {
        let m = ExactMatrix::from_ints(Q, 2, 2, &[1, 2, 2, 4]).unwrap();
        assert!(m.inverse().is_none());
        let m = ExactMatrix::from_ints(Q, 2, 2, &[1, 2, 3, 4]).unwrap();
        assert!(m.compose(&m.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let a = ExactMatrix::identity(Q, 2);
        let b = ExactMatrix::identity(FieldSpec::Prime(5), 2);
        assert_eq!(a.kron(&b), Err(Error::FieldMismatch));
        assert_eq!(a.compose(&b), Err(Error::FieldMismatch));
    }

    proptest! {
        #[test]
        fn kron_is_associative(a in small_matrix(2, 1), b in small_matrix(1, 2), c in small_matrix(2, 2)) {
            let left = a.kron(&b).unwrap().kron(&c).unwrap();
            let right = a.kron(&b.kron(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn kron_is_functorial(a in small_matrix(2, 2), b in small_matrix(2, 2), c in small_matrix(2, 2), d in small_matrix(2, 2)) {
            let left = a.kron(&b).unwrap().compose(&c.kron(&d).unwrap()).unwrap();
            let right = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn flip_is_natural(a in small_matrix(2, 3), b in small_matrix(3, 2)) {
            // c ∘ (a ⊗ b) = (b ⊗ a) ∘ c
            let left = ExactMatrix::flip(Q, 2, 3).compose(&a.kron(&b).unwrap()).unwrap();
            let right = b.kron(&a).unwrap().compose(&ExactMatrix::flip(Q, 3, 2)).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn flip_is_involutive(a in 1usize..4, b in 1usize..4) {
            let c = ExactMatrix::flip(Q, a, b);
            prop_assert!(ExactMatrix::flip(Q, b, a).compose(&c).unwrap().is_identity());
        }
    }
}
