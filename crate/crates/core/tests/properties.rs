//! Randomized exact-arithmetic properties of the numeric kernel and the
//! representation data, checked with proptest.

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use higgs_cgc::exactnum::{
    binomial, extract_square, factorial_opt, factorial_rat, format_rational, gen_factorial,
    pochhammer, rat_int, QuadraticFactor, QuadraticSurd,
};
use higgs_cgc::{parse_rational, proj_coeff, CGValue, HalfInt, IrrepModel, Rational};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-200i64..=200, 1i64..=40).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    arb_rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn arb_quadratic() -> impl Strategy<Value = QuadraticFactor> {
    (arb_rational(), arb_rational(), arb_rational())
        .prop_map(|(a, b, c)| QuadraticFactor::new(a, b, c))
}

fn arb_surd() -> impl Strategy<Value = QuadraticSurd> {
    (arb_rational(), 0i64..=400)
        .prop_map(|(c, r)| QuadraticSurd::new(c, rat_int(r)).expect("nonnegative radicand"))
}

proptest! {
    #[test]
    fn pochhammer_recurrence(a in arb_rational(), n in 0u32..12) {
        let lhs = pochhammer(&a, n + 1);
        let rhs = pochhammer(&a, n) * (&a + rat_int(n as i64));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gen_factorial_recurrence(q in arb_quadratic(), n in 0u32..12) {
        let lhs = gen_factorial(&q, n + 1);
        let rhs = gen_factorial(&q, n) * q.eval_int(n as i64 + 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_reflect_maps_arguments(q in arb_quadratic(), c in arb_rational(), x in arb_rational()) {
        // roots r -> 1 - r + c means evaluation at x pulls back to 1 + c - x
        let lhs = q.shift_reflect(&c).eval(&x);
        let rhs = q.eval(&(Rational::one() + &c - &x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn extract_square_splits_exactly(n in 0u64..2_000_000) {
        let n = BigUint::from(n);
        let (s, f) = extract_square(&n);
        prop_assert_eq!(&s * &s * &f, n);
        // the squarefree part has no further square to extract
        let (s2, f2) = extract_square(&f);
        prop_assert!(s2.is_one() || f.is_zero());
        prop_assert_eq!(f2, f);
    }

    #[test]
    fn surd_canonicalization_squares(c in arb_rational(), r in 0i64..=400) {
        let s = QuadraticSurd::new(c.clone(), rat_int(r)).unwrap();
        prop_assert_eq!(s.square(), &c * &c * rat_int(r));
        prop_assert_eq!(s.signum() == 0, c.is_zero() || r == 0);
    }

    #[test]
    fn surd_product_is_commutative_and_squares(x in arb_surd(), y in arb_surd()) {
        let xy = x.mul(&y);
        prop_assert_eq!(&xy, &y.mul(&x));
        prop_assert_eq!(xy.square(), x.square() * y.square());
    }

    #[test]
    fn surd_like_addition_is_linear(x in arb_surd(), a in arb_rational(), b in arb_rational()) {
        let sum = x.scale(&a).checked_add(&x.scale(&b)).unwrap();
        prop_assert_eq!(sum, x.scale(&(a + b)));
    }

    #[test]
    fn cg_value_from_ratio_squares(num in arb_surd(), den in arb_nonzero_rational()) {
        let den = if den.is_negative() { -den } else { den };
        let v = CGValue::from_ratio(&num, &den).unwrap();
        prop_assert_eq!(v.square() * &den, num.square());
        prop_assert_eq!(v.sign(), num.signum());
    }

    #[test]
    fn rational_format_parse_roundtrip(r in arb_rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn half_int_to_rational_is_additive(a in -50i64..=50, b in -50i64..=50) {
        let x = HalfInt::from_twice(a);
        let y = HalfInt::from_twice(b);
        prop_assert_eq!((x + y).to_rational(), x.to_rational() + y.to_rational());
    }

    #[test]
    fn factorials_and_binomials_agree(n in 0i64..18, k in 0i64..18) {
        prop_assert_eq!(
            factorial_rat(n),
            Rational::from_integer(factorial_opt(n).unwrap())
        );
        prop_assert_eq!(binomial(n, k), binomial(n, n - k));
        if k <= n {
            let direct = factorial_rat(n) / (factorial_rat(k) * factorial_rat(n - k));
            prop_assert_eq!(Rational::from_integer(binomial(n, k)), direct);
        } else {
            prop_assert!(binomial(n, k).is_zero());
        }
    }

    #[test]
    fn psi_factorizes_and_xi_is_symmetric(
        tj in 1i64..=8,
        bn in -1i64..=60,
        bd in 1i64..=40,
    ) {
        let j = HalfInt::from_twice(tj);
        let beta2 = Rational::new(bn.into(), (40 * bd).into());
        let model = IrrepModel::cubic(j, beta2).unwrap();
        for n in 1..=tj {
            let xi = model.xi(n).unwrap();
            prop_assert_eq!(&xi, &model.xi(tj + 1 - n).unwrap());
            prop_assert_eq!(model.psi(n).unwrap(), rat_int(n) * rat_int(tj + 1 - n) * &xi);
        }
    }

    #[test]
    fn projector_coefficients_satisfy_recurrence(
        tj in 1i64..=6,
        bn in -1i64..=60,
        bd in 1i64..=40,
        l in 1u32..=6,
    ) {
        let j = HalfInt::from_twice(tj);
        let beta2 = Rational::new(bn.into(), (40 * bd).into());
        let (cl, cl_prev) = match (proj_coeff(j, &beta2, l), proj_coeff(j, &beta2, l - 1)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Ok(()), // degenerate parameter point
        };
        let jr = j.to_rational();
        let lr = rat_int(l as i64);
        let factor = Rational::one()
            + &beta2
                * (&lr * &lr
                    + (rat_int(2) * &jr + Rational::one()) * &lr
                    + rat_int(2) * &jr * (&jr + Rational::one()));
        let lhs = lr * (rat_int(2) * &jr + rat_int(l as i64 + 1)) * factor * cl;
        prop_assert_eq!(lhs, -cl_prev);
    }
}
