//! Exhaustive minimum distance of an `F_q`-linear code.

use std::ops::Range;
use std::thread;

use crate::code::check_cap;
use crate::error::Result;
use crate::matrix::{FqMatrix, RowSpace};

fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Minimum nonzero weight among the message indices in `range`.
///
/// Index `t` encodes the message vector through its base-`q` digits (least
/// significant digit on row 0). Stepping from `t` to `t + 1` adds row `j` for
/// each digit `j` that changes, including digits that wrap from `q - 1` to 0,
/// because `q` copies of a row sum to zero.
fn min_weight_in(basis: &FqMatrix, range: Range<u64>) -> Option<usize> {
    let ctx = basis.ctx();
    let q = ctx.p();
    let r = basis.nrows();
    let mut digits = vec![0u32; r];
    let mut word = vec![0u32; basis.ncols()];
    let mut t = range.start;
    for (j, d) in digits.iter_mut().enumerate() {
        *d = (t % q as u64) as u32;
        t /= q as u64;
        if *d != 0 {
            for (w, &g) in word.iter_mut().zip(basis.row(j)) {
                *w = ctx.add(*w, ctx.mul(*d, g));
            }
        }
    }
    let mut best: Option<usize> = None;
    for idx in range {
        if idx != 0 {
            let w = weight(&word);
            best = Some(best.map_or(w, |b| b.min(w)));
        }
        for (j, digit) in digits.iter_mut().enumerate() {
            for (w, &g) in word.iter_mut().zip(basis.row(j)) {
                *w = ctx.add(*w, g);
            }
            *digit += 1;
            if *digit < q {
                break;
            }
            *digit = 0;
        }
    }
    best
}

/// Minimum Hamming weight of a nonzero vector in the row space of `m`, by
/// exhaustive enumeration of all `q^rank` vectors. `None` for the zero code.
/// Fails with [`crate::Error::TooLarge`] if `q^rank` exceeds `cap`.
pub fn min_distance(m: &FqMatrix, cap: u64) -> Result<Option<usize>> {
    let basis = RowSpace::new(m).basis().clone();
    let total = check_cap(m.ctx().p(), basis.nrows(), cap)?;
    if total <= 1 {
        return Ok(None);
    }
    let workers = thread::available_parallelism()
        .map(|n| n.get() as u64)
        .unwrap_or(1)
        .min(total / 4096 + 1);
    let chunk = total.div_ceil(workers);
    let best = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let basis = &basis;
                let range = (w * chunk).min(total)..((w + 1) * chunk).min(total);
                s.spawn(move || min_weight_in(basis, range))
            })
            .collect();
        handles
            .into_iter()
            .filter_map(|h| h.join().expect("worker panicked"))
            .min()
    });
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::field::FieldCtx;

    #[test]
    fn identity_has_distance_one() {
        let ctx = FieldCtx::new(5).unwrap();
        assert_eq!(min_distance(&FqMatrix::identity(ctx, 3), 1000).unwrap(), Some(1));
    }

    #[test]
    fn zero_code_has_no_distance() {
        let ctx = FieldCtx::new(5).unwrap();
        assert_eq!(min_distance(&FqMatrix::zeros(ctx, 2, 4), 10).unwrap(), None);
    }

    #[test]
    fn repetition_code() {
        let ctx = FieldCtx::new(3).unwrap();
        let m = FqMatrix::from_rows(ctx, 4, &[vec![1, 1, 1, 1]]);
        assert_eq!(min_distance(&m, 10).unwrap(), Some(4));
    }

    #[test]
    fn cap_is_enforced() {
        let ctx = FieldCtx::new(7).unwrap();
        let err = min_distance(&FqMatrix::identity(ctx, 6), 1000).unwrap_err();
        assert!(matches!(err, Error::TooLarge { exponent: 6, cap: 1000, .. }));
    }

    #[test]
    fn ranges_cover_everything() {
        let ctx = FieldCtx::new(3).unwrap();
        let m = FqMatrix::from_rows(ctx, 5, &[vec![1, 0, 2, 1, 1], vec![0, 1, 1, 2, 0], vec![1, 1, 0, 0, 2]]);
        let basis = RowSpace::new(&m).basis().clone();
        let whole = min_weight_in(&basis, 0..27);
        let parts = [0..5, 5..13, 13..27]
            .into_iter()
            .filter_map(|r| min_weight_in(&basis, r))
            .min();
        assert_eq!(whole, parts);
        // brute force over all 27 combinations
        let mut best = usize::MAX;
        for idx in 1..27u32 {
            let c = [idx % 3, (idx / 3) % 3, idx / 9];
            let v: Vec<u32> = (0..5)
                .map(|j| (0..3).map(|r| c[r] * basis.get(r, j)).sum::<u32>() % 3)
                .collect();
            best = best.min(weight(&v));
        }
        assert_eq!(whole, Some(best));
    }
}
