use boolean_kerov::combinatorics::Partition;
use boolean_kerov::exactmath::{
    apply_iota, int, series_expand_at_infinity, series_mul, solve_exact, GradedPolynomial,
    Monomial, Rational, RationalMatrix, UniPoly, VarFamily,
};
use boolean_kerov::observables::profile_coordinates;
use num_traits::Zero;
use proptest::prelude::*;

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=6, 0..=5).prop_map(Partition::new)
}

fn reversed(p: &UniPoly, len: usize, shift: usize) -> Vec<Rational> {
    // coefficient of w^i is the coefficient of z^(shift - i)
    (0..len)
        .map(|i| {
            if i <= shift {
                p.coeff(shift - i)
            } else {
                Rational::zero()
            }
        })
        .collect()
}

fn arb_poly(max_deg: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-9i64..=9, 0..=max_deg + 1)
}

fn monic(roots: &[i64]) -> UniPoly {
    UniPoly::from_roots(roots.iter().map(|&r| int(r)))
}

proptest! {
    #[test]
    fn expansion_times_denominator_is_numerator(
        roots in prop::collection::vec(-6i64..=6, 1..=5),
        numer in arb_poly(5),
        order in 1usize..=10,
    ) {
        let denom = monic(&roots);
        let d = roots.len();
        let mut coeffs: Vec<Rational> = numer.into_iter().map(int).collect();
        coeffs.truncate(d + 2);
        let numer = UniPoly::new(coeffs);
        let a = series_expand_at_infinity(&numer, &denom, order).unwrap();
        let len = order + 1;
        let back = series_mul(&a, &reversed(&denom, len, d), len);
        prop_assert_eq!(back, reversed(&numer, len, d + 1));
    }

    #[test]
    fn product_of_transforms_is_convolution(l in arb_partition(), m in arb_partition(), order in 2usize..=10) {
        let (p, q) = (profile_coordinates(&l), profile_coordinates(&m));
        let a = series_expand_at_infinity(&p.maxima_polynomial(), &p.minima_polynomial(), order).unwrap();
        let b = series_expand_at_infinity(&q.maxima_polynomial(), &q.minima_polynomial(), order).unwrap();
        let numer = &p.maxima_polynomial() * &q.maxima_polynomial();
        let denom = &p.minima_polynomial() * &q.minima_polynomial();
        let c = series_expand_at_infinity(&numer, &denom, order).unwrap();
        // G_l G_m = sum_(i,j) a_i b_j z^(2-i-j)
        for (mi, cm) in c.iter().enumerate() {
            let mut conv = Rational::zero();
            for (i, ai) in a.iter().enumerate().take((mi + 1).min(order) + 1) {
                let j = mi + 1 - i;
                if j <= order {
                    conv += ai * &b[j];
                }
            }
            prop_assert_eq!(cm, &conv, "index {}", mi);
        }
    }

    #[test]
    fn reported_solutions_are_exact(
        entries in prop::collection::vec(-15i64..=15, 16),
        rhs in prop::collection::vec(-15i64..=15, 4),
    ) {
        let rows: Vec<Vec<Rational>> = entries.chunks(4).map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        let a = RationalMatrix::from_rows(rows);
        let b: Vec<Rational> = rhs.into_iter().map(int).collect();
        if let Ok(x) = solve_exact(&a, &b) {
            prop_assert_eq!(a.mul_vec(&x), b);
        }
    }

    #[test]
    fn iota_is_an_involution(terms in prop::collection::vec((prop::collection::vec(2u32..=7, 0..=3), -5i64..=5), 0..=6)) {
        let p = GradedPolynomial::from_terms(
            VarFamily::X,
            terms.into_iter().map(|(m, c)| (Monomial::new(m), int(c))),
        );
        prop_assert_eq!(apply_iota(&apply_iota(&p)), p);
    }
}
