//! Generator and parity-check matrices of the component codes `C_i`.
//!
//! Column convention: ascending coefficients, left block `0..m` then right
//! block `m..m+n`.

use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::matrix::{FqMatrix, RowSpace};
use crate::poly::Poly;

/// Natural generator matrix of one component: rows `x^j (iota | 0)` for
/// `j < m - deg iota`, then `x^j (ell | theta)` for `j < n - deg theta`.
pub fn natural_matrix(m: usize, n: usize, iota: &Poly, ell: &Poly, theta: &Poly) -> FqMatrix {
    let ctx = iota.ctx();
    let xm1 = Poly::x_pow_minus_one(ctx, m);
    let xn1 = Poly::x_pow_minus_one(ctx, n);
    let write = |row: &mut Vec<u32>, p: &Poly, offset: usize, len: usize| {
        for (j, slot) in row[offset..offset + len].iter_mut().enumerate() {
            *slot = p.raw(j);
        }
    };
    let mut rows = Vec::new();
    for j in 0..m - iota.deg0() {
        let mut row = vec![0; m + n];
        write(&mut row, &iota.shift(j).rem(&xm1).expect("nonzero"), 0, m);
        rows.push(row);
    }
    for j in 0..n - theta.deg0() {
        let mut row = vec![0; m + n];
        write(&mut row, &ell.shift(j).rem(&xm1).expect("nonzero"), 0, m);
        write(&mut row, &theta.shift(j).rem(&xn1).expect("nonzero"), m, n);
        rows.push(row);
    }
    FqMatrix::from_residue_rows(ctx, m + n, rows)
}

/// `G_1, G_2, G_3` for a code.
pub fn natural_matrices(code: &CodeSpec) -> [FqMatrix; 3] {
    [1, 2, 3].map(|i| {
        natural_matrix(
            code.m(),
            code.n(),
            code.iota().component(i),
            code.ell().component(i),
            code.theta().component(i),
        )
    })
}

/// Column-permuted, row-reduced generator matrix in three row bands
///
/// ```text
/// [ I  A1 A2 | 0  0  0 ]   m - deg iota rows
/// [ 0  B1 B2 | B3 I  0 ]   k rows, B1 invertible
/// [ 0  0  0  | M1 M2 I ]   n - deg theta - k rows
/// ```
///
/// with column groups of widths `m - deg iota`, `k`, `deg iota - k`,
/// `deg theta`, `k`, `n - deg theta - k`.
#[derive(Clone, Debug)]
pub struct StandardizedForm {
    /// Column `j` of [`StandardizedForm::matrix`] is column `perm[j]` of the natural matrix.
    pub perm: Vec<usize>,
    pub matrix: FqMatrix,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub deg_iota: usize,
    pub deg_theta: usize,
}

/// The named blocks of a [`StandardizedForm`].
#[derive(Clone, Debug)]
pub struct Blocks {
    pub a1: FqMatrix,
    pub a2: FqMatrix,
    pub b1: FqMatrix,
    pub b2: FqMatrix,
    pub b3: FqMatrix,
    pub m1: FqMatrix,
    pub m2: FqMatrix,
}

impl StandardizedForm {
    /// Column boundaries `[0, c1, .., c6 = m + n]`.
    pub fn col_bounds(&self) -> [usize; 7] {
        let a = self.m - self.deg_iota;
        [
            0,
            a,
            a + self.k,
            self.m,
            self.m + self.deg_theta,
            self.m + self.deg_theta + self.k,
            self.m + self.n,
        ]
    }

    /// Row boundaries `[0, r1, r2, r3 = rows]`.
    pub fn row_bounds(&self) -> [usize; 4] {
        let a = self.m - self.deg_iota;
        [0, a, a + self.k, a + self.n - self.deg_theta]
    }

    pub fn blocks(&self) -> Blocks {
        let c = self.col_bounds();
        let r = self.row_bounds();
        let g = &self.matrix;
        Blocks {
            a1: g.submatrix(r[0]..r[1], c[1]..c[2]),
            a2: g.submatrix(r[0]..r[1], c[2]..c[3]),
            b1: g.submatrix(r[1]..r[2], c[1]..c[2]),
            b2: g.submatrix(r[1]..r[2], c[2]..c[3]),
            b3: g.submatrix(r[1]..r[2], c[3]..c[4]),
            m1: g.submatrix(r[2]..r[3], c[3]..c[4]),
            m2: g.submatrix(r[2]..r[3], c[4]..c[5]),
        }
    }

    /// Checks every identity and zero block, the band sizes and that `B1` is
    /// invertible. Returns a description of the first mismatch.
    pub fn check_shape(&self) -> std::result::Result<(), String> {
        let c = self.col_bounds();
        let r = self.row_bounds();
        let g = &self.matrix;
        if g.nrows() != r[3] {
            return Err(format!("expected {} rows, found {}", r[3], g.nrows()));
        }
        let ctx = g.ctx();
        let is_identity = |b: &FqMatrix| *b == FqMatrix::identity(ctx, b.nrows());
        let expect = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_owned()) };
        expect(is_identity(&g.submatrix(r[0]..r[1], c[0]..c[1])), "band 1 identity")?;
        expect(g.submatrix(r[0]..r[1], c[3]..c[6]).is_zero(), "band 1 right block")?;
        expect(g.submatrix(r[1]..r[2], c[0]..c[1]).is_zero(), "band 2 leading zeros")?;
        expect(is_identity(&g.submatrix(r[1]..r[2], c[4]..c[5])), "band 2 identity")?;
        expect(g.submatrix(r[1]..r[2], c[5]..c[6]).is_zero(), "band 2 trailing zeros")?;
        expect(g.submatrix(r[2]..r[3], c[0]..c[3]).is_zero(), "band 3 left block")?;
        expect(is_identity(&g.submatrix(r[2]..r[3], c[5]..c[6])), "band 3 identity")?;
        expect(self.blocks().b1.rank() == self.k, "B1 invertible")?;
        Ok(())
    }

    /// The parity-check matrix in the permuted column order:
    ///
    /// ```text
    /// [ -A1^t  I  0 | 0  -B1^t   B1^t M2^t         ]
    /// [ -A2^t  0  I | 0  -B2^t   B2^t M2^t         ]
    /// [  0     0  0 | I  -B3^t  -M1^t + B3^t M2^t  ]
    /// ```
    pub fn parity_check_permuted(&self) -> FqMatrix {
        let ctx = self.matrix.ctx();
        let b = self.blocks();
        let a = self.m - self.deg_iota;
        let k = self.k;
        let rest_l = self.deg_iota - k;
        let dt = self.deg_theta;
        let tail = self.n - dt - k;
        let z = |r, c| FqMatrix::zeros(ctx, r, c);
        let id = |n| FqMatrix::identity(ctx, n);
        let m2t = b.m2.transpose();
        let row = |parts: [FqMatrix; 6]| {
            let [p0, p1, p2, p3, p4, p5] = parts;
            p0.hstack(&p1).hstack(&p2).hstack(&p3).hstack(&p4).hstack(&p5)
        };
        let h1 = row([
            b.a1.transpose().neg(),
            id(k),
            z(k, rest_l),
            z(k, dt),
            b.b1.transpose().neg(),
            b.b1.transpose().mul(&m2t),
        ]);
        let h2 = row([
            b.a2.transpose().neg(),
            z(rest_l, k),
            id(rest_l),
            z(rest_l, dt),
            b.b2.transpose().neg(),
            b.b2.transpose().mul(&m2t),
        ]);
        let h3 = row([
            z(dt, a),
            z(dt, k),
            z(dt, rest_l),
            id(dt),
            b.b3.transpose().neg(),
            b.m1.transpose().neg().add(&b.b3.transpose().mul(&m2t)),
        ]);
        debug_assert_eq!(h1.ncols(), a + k + rest_l + dt + k + tail);
        h1.vstack(&h2).vstack(&h3)
    }

    /// The parity-check matrix in the natural column order.
    pub fn parity_check(&self) -> FqMatrix {
        let mut inv = vec![0; self.perm.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p] = j;
        }
        self.parity_check_permuted().permute_columns(&inv)
    }
}

/// Rows of a reduced matrix whose pivot lies in `range`.
fn rows_with_pivot_in(
    rref: &(FqMatrix, Vec<usize>),
    range: std::ops::Range<usize>,
) -> FqMatrix {
    let idx: Vec<usize> = (0..rref.1.len())
        .filter(|&i| range.contains(&rref.1[i]))
        .collect();
    rref.0.select_rows(&idx)
}

/// Brings a natural generator matrix into the three-band form.
///
/// Band 1 is an echelon basis of `{(u | 0)}`, band 3 one of `{(0 | z)}`, and
/// band 2 completes the right projection. Fails with
/// [`Error::InvariantViolation`] if the result does not have the declared
/// block shape, which cannot happen for a valid code.
pub fn standardize(g: &FqMatrix, m: usize, iota: &Poly, ell: &Poly) -> Result<StandardizedForm> {
    let ctx = g.ctx();
    let n = g.ncols() - m;
    let left: Vec<usize> = (0..m).collect();
    let right: Vec<usize> = (m..m + n).collect();
    let fail = |what: String| Error::InvariantViolation(format!("standardized form: {what}"));

    let right_first: Vec<usize> = right.iter().chain(&left).copied().collect();
    let left_first: Vec<usize> = left.iter().chain(&right).copied().collect();
    let by_right = g.rref_in_order(&right_first);
    let by_left = g.rref_in_order(&left_first);

    let (band1, p1) = rows_with_pivot_in(&by_right, 0..m).rref();
    let (band3, p3) = rows_with_pivot_in(&by_left, m..m + n).rref();
    let projection = rows_with_pivot_in(&by_right, m..m + n);
    let deg_iota = m - band1.nrows();
    let deg_theta = n - projection.nrows();

    // Clear the band 1 and band 3 pivot columns from the projection rows.
    let (s1, s3) = (RowSpace::new(&band1), RowSpace::new(&band3));
    let cleared: Vec<Vec<u32>> = projection
        .row_iter()
        .map(|r| s3.reduce(&s1.reduce(r)))
        .collect();
    let cleared = FqMatrix::from_residue_rows(ctx, m + n, cleared);
    let order: Vec<usize> = right
        .iter()
        .filter(|c| !p3.contains(c))
        .chain(left.iter().filter(|c| !p1.contains(c)))
        .copied()
        .collect();
    let reduced = cleared.rref_in_order(&order);
    if reduced.1.iter().any(|&c| c < m) {
        return Err(fail("a projection row reduced into the left kernel".into()));
    }
    let (band2, q2) = reduced;
    let k = band2.nrows();
    let (_, q1) = band2.columns(0..m).rref();
    if q1.len() != k {
        return Err(fail(format!("left part of band 2 has rank {} < {k}", q1.len())));
    }
    let gcd = iota.gcd(ell)?;
    if k != iota.deg0() - gcd.deg0() || iota.deg0() != deg_iota {
        return Err(fail(format!(
            "k = {k} does not match deg iota - deg gcd(iota, ell) = {}",
            iota.deg0() - gcd.deg0()
        )));
    }

    let mut perm = p1.clone();
    perm.extend(&q1);
    perm.extend(left.iter().filter(|c| !p1.contains(c) && !q1.contains(c)));
    perm.extend(right.iter().filter(|c| !q2.contains(c) && !p3.contains(c)));
    perm.extend(&q2);
    perm.extend(&p3);

    let matrix = band1.vstack(&band2).vstack(&band3).permute_columns(&perm);
    let form = StandardizedForm {
        perm,
        matrix,
        m,
        n,
        k,
        deg_iota,
        deg_theta,
    };
    form.check_shape().map_err(fail)?;
    if !RowSpace::same_span(&form.matrix, &g.permute_columns(&form.perm)) {
        return Err(fail("row space changed".into()));
    }
    Ok(form)
}

/// Standardized forms of all three components.
pub fn standardize_code(code: &CodeSpec) -> Result<[StandardizedForm; 3]> {
    let gs = natural_matrices(code);
    let [a, b, c] = [1, 2, 3].map(|i| {
        standardize(
            &gs[i - 1],
            code.m(),
            code.iota().component(i),
            code.ell().component(i),
        )
    });
    Ok([a?, b?, c?])
}

/// Parity-check matrices `H_1, H_2, H_3` in natural column order.
pub fn parity_check(code: &CodeSpec) -> Result<[FqMatrix; 3]> {
    Ok(standardize_code(code)?.map(|f| f.parity_check()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::example1;
    use crate::field::FieldCtx;

    #[test]
    fn example1_natural_matrices() {
        let c = example1();
        let ctx = c.ctx();
        let right = [
            [0, 0, 0, 0, 0],
            [6, 1, 0, 0, 0],
            [0, 6, 1, 0, 0],
            [0, 0, 6, 1, 0],
            [0, 0, 0, 6, 1],
        ];
        let lefts = [[5, 2, 3, 4, 0], [1, 3, 2, 5, 0], [6, 2, 4, 1, 0]];
        let gs = natural_matrices(&c);
        for (i, l) in lefts.iter().enumerate() {
            let mut rows = vec![];
            for r in 0..5 {
                let mut row: Vec<i64> = if r == 0 {
                    vec![1; 5]
                } else {
                    // left block rotated right by r - 1
                    (0..5).map(|j| l[(j + 5 - (r - 1)) % 5]).collect()
                };
                row.extend(right[r]);
                rows.push(row);
            }
            assert_eq!(gs[i], FqMatrix::from_rows(ctx, 10, &rows), "G{}", i + 1);
            assert_eq!(gs[i].rank(), 5);
        }
    }

    #[test]
    fn zero_code_has_empty_matrices() {
        let ctx = FieldCtx::new(5).unwrap();
        let z = CodeSpec::zero(ctx, 3, 2);
        for g in natural_matrices(&z) {
            assert_eq!((g.nrows(), g.ncols()), (0, 5));
        }
        for h in parity_check(&z).unwrap() {
            assert_eq!(h, FqMatrix::identity(ctx, 5));
        }
    }

    #[test]
    fn example1_standardized() {
        let c = example1();
        for f in standardize_code(&c).unwrap() {
            assert_eq!(f.k, 4);
            assert_eq!(f.row_bounds(), [0, 1, 5, 5]);
            f.check_shape().unwrap();
        }
        for (g, h) in natural_matrices(&c).iter().zip(parity_check(&c).unwrap()) {
            assert!(g.mul(&h.transpose()).is_zero());
            assert_eq!(g.rank() + h.rank(), 10);
        }
    }

    #[test]
    fn separable_component_has_no_middle_band() {
        let ctx = FieldCtx::new(7).unwrap();
        let iota = Poly::new(ctx, &[6, 1]);
        let theta = Poly::new(ctx, &[1, 1, 1, 1, 1]);
        let g = natural_matrix(5, 5, &iota, &Poly::zero(ctx), &theta);
        let f = standardize(&g, 5, &iota, &Poly::zero(ctx)).unwrap();
        assert_eq!(f.k, 0);
        assert_eq!(f.row_bounds(), [0, 4, 4, 5]);
        assert!(g.mul(&f.parity_check().transpose()).is_zero());
    }
}
