use cubicplane::algebra::{parse_poly, Ambient, Field, Matrix, MultiPoly, ProjPoint, Scalar, VarSet};
use cubicplane::detrep::SymDetRep;
use cubicplane::spin::theta_counts;
use proptest::prelude::*;

const MONOS: [&[&str]; 4] = [
    &[],
    &["x1", "x2", "x3"],
    &["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"],
    &[
        "x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2", "x3^3",
    ],
];

fn form(coeffs: &[i64], deg: usize, field: Field) -> MultiPoly {
    let text: Vec<String> = MONOS[deg].iter().zip(coeffs).map(|(m, c)| format!("({c})*{m}")).collect();
    parse_poly(&text.join(" + "), VarSet::Plane, field).unwrap()
}

/// Row-major upper-triangle coefficients of a linear/quadratic/cubic profile.
fn rep_from(coeffs: &[i64], field: Field) -> Option<SymDetRep> {
    let mut it = coeffs.iter().copied();
    let mut take = |n: usize| -> Vec<i64> { (&mut it).take(n).collect() };
    let mut rows = vec![vec![MultiPoly::zero(VarSet::Plane, field); 4]; 4];
    for i in 0..4 {
        for j in i..4 {
            let deg = if j < 3 { 1 } else if i < 3 { 2 } else { 3 };
            let f = form(&take(MONOS[deg].len()), deg, field);
            rows[i][j] = f.clone();
            rows[j][i] = f;
        }
    }
    SymDetRep::validate(rows).ok()
}

// 6 linear entries, 3 quadrics, 1 cubic.
const NCOEFFS: usize = 6 * 3 + 3 * 6 + 10;

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, NCOEFFS)
}

fn plane_point(field: Field) -> impl Strategy<Value = ProjPoint> {
    prop::collection::vec(-6i64..=6, 3).prop_filter_map("zero vector", move |v| {
        ProjPoint::from_ints(&v, Ambient::Plane, field).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fourfold_satisfies_euler(c in coeffs()) {
        let field = Field::Prime(13);
        let Some(rep) = rep_from(&c, field) else { return Ok(()) };
        let f = rep.fourfold();
        let mut euler = MultiPoly::zero(VarSet::Ambient, field);
        for (i, d) in f.gradient().into_iter().enumerate() {
            euler = &euler + &(&MultiPoly::var(i, VarSet::Ambient, field) * &d);
        }
        prop_assert_eq!(euler, f.scale(&field.from_i64(3)));
    }

    #[test]
    fn sextic_commutes_with_evaluation(c in coeffs(), p in plane_point(Field::Rational)) {
        let Some(rep) = rep_from(&c, Field::Rational) else { return Ok(()) };
        prop_assert_eq!(rep.sextic().eval(p.coords()).unwrap(), rep.evaluate(&p).det());
    }

    #[test]
    fn reduction_commutes_with_derivation(c in coeffs(), q in prop::sample::select(vec![7u32, 11, 13])) {
        let Some(rep) = rep_from(&c, Field::Rational) else { return Ok(()) };
        let target = Field::Prime(q);
        let reduced = rep.reduce(target).unwrap();
        prop_assert_eq!(reduced.sextic(), rep.sextic().reduce(target).unwrap());
        prop_assert_eq!(reduced.d_cubic(), rep.d_cubic().reduce(target).unwrap());
        prop_assert_eq!(reduced.fourfold(), rep.fourfold().reduce(target).unwrap());
    }

    #[test]
    fn fourfold_restricts_to_fiber_quadric(c in coeffs(), p in plane_point(Field::Prime(13)),
                                           u in prop::collection::vec(0i64..13, 4)) {
        let field = Field::Prime(13);
        let Some(rep) = rep_from(&c, field) else { return Ok(()) };
        let w: Vec<Scalar> = u.iter().map(|&n| field.from_i64(n)).collect();
        let t = &w[3];
        let mut x: Vec<Scalar> = p.coords().iter().map(|c| c * t).collect();
        x.extend(w[..3].iter().cloned());
        let gram = rep.evaluate(&p);
        prop_assert_eq!(rep.fourfold().eval(&x).unwrap(), t * &gram.bilinear(&w, &w));
    }

    #[test]
    fn kernel_vectors_are_annihilated(entries in prop::collection::vec(-3i64..=3, 20)) {
        let field = Field::Prime(11);
        let m = Matrix::from_fn(4, 5, |i, j| field.from_i64(entries[5 * i + j]));
        let ker = m.kernel();
        prop_assert_eq!(ker.len() + m.rank(), 5);
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn theta_counts_split(g in 0u32..40) {
        let (total, even, odd) = theta_counts(g);
        prop_assert_eq!(total, even + odd);
        prop_assert_eq!(even - odd, 1u128 << g);
    }
}
