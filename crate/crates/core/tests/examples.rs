use cubicplane::algebra::{Field, Scalar};
use cubicplane::analysis::analyze;
use cubicplane::examples::{build_example, prop44_violation, ExampleError, Provenance, NAMES};

fn kv(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

#[test]
fn defaults_reproduce_expected_values() {
    for name in NAMES {
        let ex = build_example(name, &[]).unwrap();
        assert!(!ex.expected.is_empty(), "{name} has no frozen values");
        let flat = analyze(&ex.rep).unwrap().flat();
        assert_eq!(ex.mismatches(&flat), vec![], "{name}");
    }
}

#[test]
fn stated_values_are_tagged() {
    let ex = build_example("prop44", &[]).unwrap();
    let stated: Vec<&str> = ex
        .expected
        .iter()
        .filter(|e| e.provenance == Provenance::Stated)
        .map(|e| e.key)
        .collect();
    assert!(stated.contains(&"smooth") && stated.contains(&"s_theta_count"));
}

#[test]
fn non_default_parameters_drop_expectations() {
    let ex = build_example("ex42ii", &kv(&[("field", "fp:11")])).unwrap();
    assert!(ex.expected.is_empty());
    let same = build_example("ex42ii", &kv(&[("l4", "x1 + x2 + x3")])).unwrap();
    assert!(!same.expected.is_empty());
}

#[test]
fn prop44_section_plane_lies_on_the_fourfold() {
    let a = "2,1,0,-1,1,1,0,3,1";
    let ex = build_example("prop44", &kv(&[("A", a)])).unwrap();
    let field = ex.rep.field();
    let f = ex.rep.fourfold();
    let plane = ex.section_plane.as_ref().unwrap();
    let m = [[2, 1, 0], [-1, 1, 1], [0, 3, 1]];
    for x in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, 3], [5, -1, 4], [2, 2, 7]] {
        let mut pt: Vec<Scalar> = x.iter().map(|&v| field.from_i64(v)).collect();
        for row in &m {
            pt.push(field.from_i64(row.iter().zip(&x).map(|(a, b)| a * b).sum()));
        }
        assert!(f.eval(&pt).unwrap().is_zero());
        assert!(plane.iter().all(|l| l.eval(&pt).unwrap().is_zero()));
    }
}

#[test]
fn prop44_identity_is_in_u_and_zero_is_not() {
    let id = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    assert_eq!(prop44_violation(&id, Field::Rational), None);
    assert!(prop44_violation(&[[0; 3]; 3], Field::Rational).unwrap().contains("vanishes identically"));
    let err = build_example("prop44", &kv(&[("A", "0,0,0,0,0,0,0,0,0")])).unwrap_err();
    assert!(matches!(err, ExampleError::Rejected(_)));
    // a11 = 0 puts e1 on the cubic.
    let bad = build_example("prop44", &kv(&[("A", "0,1,0,0,1,0,0,0,1")])).unwrap_err();
    assert!(bad.to_string().contains("a11 = 0"), "{bad}");
}

#[test]
fn ex42i_rejects_cubics_through_coordinate_nodes() {
    let err = build_example("ex42i", &kv(&[("f", "x1^3 + x2^3 + x1*x2*x3")])).unwrap_err();
    assert!(err.to_string().contains("nine distinct points"), "{err}");
    // Tangent to x3 = 0: (x1 + x2)^2 double root.
    let err = build_example("ex42i", &kv(&[("f", "x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3 + x3^3")]));
    assert!(err.is_err());
}

#[test]
fn ex42ii_rejects_special_position() {
    let err = build_example("ex42ii", &kv(&[("l4", "x1 + x2")])).unwrap_err();
    assert!(err.to_string().contains("general position"), "{err}");
    let err = build_example("ex42ii", &kv(&[("l5", "x1")])).unwrap_err();
    assert!(err.to_string().contains("coincide"), "{err}");
}

#[test]
fn fermat_example_needs_q_one_mod_eight() {
    assert!(matches!(
        build_example("ex43_fermat", &kv(&[("field", "fp:13")])),
        Err(ExampleError::Rejected(_))
    ));
    let ex = build_example("ex43_fermat", &kv(&[("field", "fp:41")])).unwrap();
    assert!(ex.notes.iter().any(|n| n.contains("omega^2 = i")));
    let r = analyze(&ex.rep).unwrap();
    assert!(r.sing_x.base.net_degenerate);
}

#[test]
fn rmk31_point_is_in_tilde_but_not_in_s_theta() {
    let ex = build_example("rmk31", &[]).unwrap();
    let flat = analyze(&ex.rep).unwrap().flat();
    let tilde = flat.get("s_theta_tilde").unwrap().render();
    let s = flat.get("s_theta").unwrap().render();
    assert!(tilde.contains("(0:0:1)") && !s.contains("(0:0:1)"));
}

#[test]
fn unknown_names_and_parameters_are_usage_errors() {
    assert!(matches!(build_example("ex99", &[]), Err(ExampleError::UnknownName(_))));
    assert!(matches!(
        build_example("rmk31", &kv(&[("l1", "x1")])),
        Err(ExampleError::UnknownParam { .. })
    ));
    assert!(matches!(
        build_example("prop44", &kv(&[("A", "1,2")])),
        Err(ExampleError::BadParam { .. })
    ));
}
