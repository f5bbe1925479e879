use std::collections::HashSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use double_cyclic::code::Codeword;
use double_cyclic::dual::{dual_code, Method};
use double_cyclic::matrix::generator::{natural_matrices, standardize_code};
use double_cyclic::verify::{check_closure, random_code, random_word, SMALL_CODE};
use double_cyclic::{CodeSpec, FieldCtx, Fq, Poly, RElem, RPoly};

fn arb_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13])
}

fn arb_coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0i64..1000, 0..=len)
}

fn arb_rpoly(len: usize) -> impl Strategy<Value = [Vec<i64>; 3]> {
    (arb_coeffs(len), arb_coeffs(len), arb_coeffs(len)).prop_map(|(a, b, c)| [a, b, c])
}

fn rpoly(ctx: FieldCtx, c: &[Vec<i64>; 3]) -> RPoly {
    RPoly::from_components([0, 1, 2].map(|i| Poly::new(ctx, &c[i])))
}

/// `(a + bv + cv^2)(d + ev + fv^2)` with `v^3 = v`, in the standard basis.
fn std_mul(ctx: FieldCtx, x: (Fq, Fq, Fq), y: (Fq, Fq, Fq)) -> (Fq, Fq, Fq) {
    let a = [x.0, x.1, x.2];
    let b = [y.0, y.1, y.2];
    let mut out = [ctx.zero(); 5];
    for i in 0..3 {
        for j in 0..3 {
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    // v^3 = v, v^4 = v^2
    (out[0], out[1] + out[3], out[2] + out[4])
}

fn code_from_seed(seed: u64, q: u64, m: usize, n: usize) -> CodeSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_code(&mut rng, FieldCtx::new(q).unwrap(), m, n)
}

fn small(code: &CodeSpec) -> bool {
    (code.ctx().p() as f64).powi(code.measured_dimension() as i32) <= SMALL_CODE as f64
}

#[test]
fn every_nonzero_residue_is_invertible() {
    for p in (3u64..=101).filter(|&p| FieldCtx::new(p).is_ok()) {
        let ctx = FieldCtx::new(p).unwrap();
        for a in 1..p as i64 {
            let x = ctx.elem(a);
            assert_eq!(x * x.inv().unwrap(), ctx.one());
        }
    }
}

proptest! {
    #[test]
    fn field_axioms(p in arb_prime(), a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let ctx = FieldCtx::new(p).unwrap();
        let (a, b, c) = (ctx.elem(a), ctx.elem(b), ctx.elem(c));
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a + b) - b, a);
    }

    #[test]
    fn projections_are_evaluations(p in arb_prime(), a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let ctx = FieldCtx::new(p).unwrap();
        let (a, b, c) = (ctx.elem(a), ctx.elem(b), ctx.elem(c));
        let r = RElem::from_standard(a, b, c);
        prop_assert_eq!(r.project(1), a);
        prop_assert_eq!(r.project(2), a + b + c);
        prop_assert_eq!(r.project(3), a - b + c);
        prop_assert_eq!(r.to_standard(), (a, b, c));
        let sum = (1..=3)
            .map(|i| RElem::idempotent(ctx, i) * RElem::from_components([r.project(i); 3]))
            .fold(RElem::zero(ctx), |s, t| s + t);
        prop_assert_eq!(sum, r);
    }

    #[test]
    fn product_matches_standard_basis(p in arb_prime(), x in any::<[i64; 3]>(), y in any::<[i64; 3]>()) {
        let ctx = FieldCtx::new(p).unwrap();
        let xs = (ctx.elem(x[0]), ctx.elem(x[1]), ctx.elem(x[2]));
        let ys = (ctx.elem(y[0]), ctx.elem(y[1]), ctx.elem(y[2]));
        let prod = RElem::from_standard(xs.0, xs.1, xs.2) * RElem::from_standard(ys.0, ys.1, ys.2);
        prop_assert_eq!(prod.to_standard(), std_mul(ctx, xs, ys));
    }

    #[test]
    fn divisibility_has_explicit_quotient(p in arb_prime(), a in arb_rpoly(4), e in arb_rpoly(4)) {
        let ctx = FieldCtx::new(p).unwrap();
        let (a, e) = (rpoly(ctx, &a), rpoly(ctx, &e));
        let b = &e * &a;
        prop_assert!(a.divides(&b));
        let quot = a.quotient_of(&b).unwrap();
        prop_assert_eq!(&(&quot * &a), &b);
        for i in 1..=3 {
            if !a.component(i).is_zero() {
                let (qi, _) = b.component(i).divmod(a.component(i)).unwrap();
                prop_assert_eq!(quot.component(i), &qi);
            }
        }
    }

    #[test]
    fn quotient_reciprocal(p in arb_prime(), a in arb_rpoly(4), e in arb_rpoly(4)) {
        let ctx = FieldCtx::new(p).unwrap();
        let (a, e) = (rpoly(ctx, &a), rpoly(ctx, &e));
        prop_assume!(a.components().iter().all(|c| !c.is_zero()));
        let b = &e * &a;
        let lhs = a.quotient_of(&b).unwrap().reciprocal();
        let rhs = a.reciprocal().quotient_of(&b.reciprocal()).unwrap();
        // equal up to a unit of R: compare after making each component monic
        prop_assert_eq!(lhs.map(Poly::monic), rhs.map(Poly::monic));
    }

    #[test]
    fn gcd_is_divided_by_common_divisors(p in arb_prime(), d in arb_rpoly(3), cofs in prop::collection::vec((arb_rpoly(3), arb_rpoly(3)), 1..4)) {
        let ctx = FieldCtx::new(p).unwrap();
        let d = rpoly(ctx, &d);
        for (x, y) in &cofs {
            let a = &rpoly(ctx, x) * &d;
            let b = &rpoly(ctx, y) * &d;
            prop_assume!(a.components().iter().zip(b.components()).all(|(u, v)| !(u.is_zero() && v.is_zero())));
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.divides(&a) && g.divides(&b));
            prop_assert!(d.divides(&g));
        }
    }

    #[test]
    fn projections_are_shift_closed(seed in any::<u64>(), q in arb_prime(), m in 1usize..6, n in 1usize..6) {
        let code = code_from_seed(seed, q, m, n);
        let zero = vec![0u32; m + n];
        for (i, g) in natural_matrices(&code).iter().enumerate() {
            for r in 0..g.nrows() {
                let row = g.row(r).to_vec();
                let vecs = [0, 1, 2].map(|j| if j == i { row.as_slice() } else { zero.as_slice() });
                let w = Codeword::from_component_vectors(code.ctx(), m, vecs);
                prop_assert!(code.contains(&w.shift()).unwrap());
            }
        }
    }

    #[test]
    fn canonicalize_enumerate_idempotent(seed in any::<u64>(), m in 1usize..4, n in 1usize..4) {
        let code = code_from_seed(seed, 3, m, n);
        prop_assume!(small(&code));
        let words: Vec<Codeword> = code.enumerate(SMALL_CODE).unwrap().collect();
        let again = CodeSpec::canonicalize(code.ctx(), m, n, &words).unwrap();
        prop_assert_eq!(&again, &code);
        let set: HashSet<String> = words.iter().map(|w| w.to_string()).collect();
        let set2: HashSet<String> = again.enumerate(SMALL_CODE).unwrap().map(|w| w.to_string()).collect();
        prop_assert_eq!(set, set2);
    }

    #[test]
    fn canonicalize_random_span(seed in any::<u64>(), m in 1usize..4, n in 1usize..4, count in 1usize..3) {
        let ctx = FieldCtx::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let words: Vec<Codeword> = (0..count).map(|_| random_word(&mut rng, ctx, m, n)).collect();
        prop_assert_eq!(check_closure(ctx, m, n, &words), Ok(()));
    }

    #[test]
    fn double_dual_and_parity_check(seed in any::<u64>(), q in arb_prime(), m in 1usize..7, n in 1usize..7) {
        let code = code_from_seed(seed, q, m, n);
        let d = dual_code(&code, Method::Formula).unwrap().code;
        prop_assert_eq!(&d, &dual_code(&code, Method::Nullspace).unwrap().code);
        prop_assert_eq!(&dual_code(&d, Method::Formula).unwrap().code, &code);
        for (f, g) in standardize_code(&code).unwrap().iter().zip(natural_matrices(&code)) {
            prop_assert!(g.mul(&f.parity_check().transpose()).is_zero());
        }
    }
}
