//! Dense linear algebra over `F_p` and the matrix view of double cyclic codes.
//!
//! [`FqMatrix`] provides exact Gaussian elimination (rank, reduced row
//! echelon form, nullspace). The submodules build on it:
//!
//! * [`generator`]: natural generator matrices, the standardized block form
//!   and the matching parity-check matrices,
//! * [`counts`]: dimension and cardinality formulas, cross-checked against ranks,
//! * [`distance`]: exhaustive minimum distance.

pub mod counts;
pub mod distance;
pub mod generator;

use std::fmt;

use crate::field::FieldCtx;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FqMatrix {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FqMatrix {
    pub fn zeros(ctx: FieldCtx, rows: usize, cols: usize) -> Self {
        Self {
            ctx,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(ctx: FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from integer rows (reduced mod p). All rows must have
    /// length `cols`.
    pub fn from_rows(ctx: FieldCtx, cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(ctx, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has the wrong length");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, ctx.reduce(v));
            }
        }
        m
    }

    pub(crate) fn from_residue_rows(ctx: FieldCtx, cols: usize, rows: Vec<Vec<u32>>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            debug_assert_eq!(r.len(), cols);
            data.extend(r);
        }
        Self {
            ctx,
            rows: n,
            cols,
            data,
        }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.ctx.p());
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> FqMatrix {
        let mut t = Self::zeros(self.ctx, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.rows, "incompatible shapes");
        let ctx = self.ctx;
        let mut out = Self::zeros(ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = ctx.add(out.get(i, j), ctx.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Columns `range` as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> FqMatrix {
        let rows = self
            .row_iter()
            .map(|r| r[range.clone()].to_vec())
            .collect();
        Self::from_residue_rows(self.ctx, range.len(), rows)
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> FqMatrix {
        assert_eq!(perm.len(), self.cols);
        let rows = self
            .row_iter()
            .map(|r| perm.iter().map(|&c| r[c]).collect())
            .collect();
        Self::from_residue_rows(self.ctx, self.cols, rows)
    }

    /// The block with rows `rows` and columns `cols`.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> FqMatrix {
        let data = rows.map(|r| self.row(r)[cols.clone()].to_vec()).collect();
        Self::from_residue_rows(self.ctx, cols.len(), data)
    }

    /// The listed rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> FqMatrix {
        let data = rows.iter().map(|&r| self.row(r).to_vec()).collect();
        Self::from_residue_rows(self.ctx, self.cols, data)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.rows, other.rows, "row counts differ");
        let data = (0..self.rows)
            .map(|r| {
                let mut v = self.row(r).to_vec();
                v.extend_from_slice(other.row(r));
                v
            })
            .collect();
        Self::from_residue_rows(self.ctx, self.cols + other.cols, data)
    }

    pub fn neg(&self) -> FqMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = self.ctx.neg(*v);
        }
        out
    }

    pub fn add(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shapes differ");
        let mut out = self.clone();
        for (v, &w) in out.data.iter_mut().zip(&other.data) {
            *v = self.ctx.add(*v, w);
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.cols, "column counts differ");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self {
            ctx: self.ctx,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form with zero rows dropped, plus the pivot
    /// column of each remaining row.
    pub fn rref(&self) -> (FqMatrix, Vec<usize>) {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_in_order(&order)
    }

    /// Reduced row echelon form where pivots are searched for in the given
    /// column order. Columns not listed never become pivots.
    pub fn rref_in_order(&self, order: &[usize]) -> (FqMatrix, Vec<usize>) {
        let ctx = self.ctx;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in order {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = ctx.inv(m.get(r, c)).expect("nonzero pivot");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if f != 0 {
                        m.sub_row_multiple(i, r, f);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.rows = r;
        m.data.truncate(r * m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (as rows) of `{x : self * x^t = 0}`.
    pub fn nullspace(&self) -> FqMatrix {
        let ctx = self.ctx;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = ctx.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Self::from_residue_rows(ctx, self.cols, basis)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, f: u32) {
        let ctx = self.ctx;
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = ctx.mul(*v, f);
        }
    }

    /// `row[dst] -= f * row[src]`
    fn sub_row_multiple(&mut self, dst: usize, src: usize, f: u32) {
        let ctx = self.ctx;
        for c in 0..self.cols {
            let v = ctx.sub(self.get(dst, c), ctx.mul(f, self.get(src, c)));
            self.set(dst, c, v);
        }
    }

    /// One row per line, residues separated by spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in self.row_iter() {
            let line: Vec<String> = r.iter().map(u32::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Echelon basis of a row space, kept around for repeated membership tests.
#[derive(Clone, Debug)]
pub struct RowSpace {
    basis: FqMatrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &FqMatrix) -> Self {
        let (basis, pivots) = m.rref();
        Self { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &FqMatrix {
        &self.basis
    }

    /// Reduces `v` against the basis; zero result means membership.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let ctx = self.basis.ctx;
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let f = v[p];
            if f == 0 {
                continue;
            }
            for (x, &b) in v.iter_mut().zip(self.basis.row(i)) {
                *x = ctx.sub(*x, ctx.mul(f, b));
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.basis.cols, "vector length mismatch");
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Whether two matrices span the same row space.
    pub fn same_span(a: &FqMatrix, b: &FqMatrix) -> bool {
        let ra = RowSpace::new(a);
        ra.basis == RowSpace::new(b).basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f7() -> FieldCtx {
        FieldCtx::new(7).unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let id = FqMatrix::identity(f7(), 4);
        assert_eq!(id.rank(), 4);
        assert_eq!(id.nullspace().nrows(), 0);
        let z = FqMatrix::zeros(f7(), 3, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.nullspace(), FqMatrix::identity(f7(), 5));
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = FqMatrix::from_rows(
            f7(),
            3,
            &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1], vec![1, 3, 4]],
        );
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.nrows(), 1);
        assert!(m.mul(&ns.transpose()).is_zero());
    }

    #[test]
    fn row_space_membership() {
        let m = FqMatrix::from_rows(f7(), 3, &[vec![1, 0, 2], vec![0, 1, 3]]);
        let rs = RowSpace::new(&m);
        // 2*(1,0,2) + 3*(0,1,3) = (2,3,13) = (2,3,6)
        assert!(rs.contains(&[2, 3, 6]));
        assert!(!rs.contains(&[0, 0, 1]));
    }

    fn arb_matrix() -> impl Strategy<Value = FqMatrix> {
        (
            prop::sample::select(vec![3u64, 5, 7]),
            1usize..6,
            1usize..8,
        )
            .prop_flat_map(|(p, r, c)| {
                prop::collection::vec(prop::collection::vec(0..p as i64, c), r)
                    .prop_map(move |rows| FqMatrix::from_rows(FieldCtx::new(p).unwrap(), c, &rows))
            })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let ns = m.nullspace();
            prop_assert_eq!(m.rank() + ns.nrows(), m.ncols());
            prop_assert!(m.mul(&ns.transpose()).is_zero());
            prop_assert_eq!(ns.rank(), ns.nrows());
        }

        #[test]
        fn rref_preserves_row_space(m in arb_matrix()) {
            let (r, pivots) = m.rref();
            prop_assert_eq!(r.nrows(), pivots.len());
            let rs = RowSpace::new(&r);
            for row in m.row_iter() {
                prop_assert!(rs.contains(row));
            }
            prop_assert!(RowSpace::same_span(&m, &r));
            prop_assert_eq!(m.transpose().rank(), m.rank());
        }
    }
}
