use cubicplane::algebra::Field;
use cubicplane::analysis::analyze;
use cubicplane::examples::build_example;
use cubicplane::fourfold::{brute_force_oracle, OracleError};

fn agree(name: &str, q: u64) {
    let ex = build_example(name, &[]).unwrap();
    let mut brute: Vec<String> = brute_force_oracle(&ex.rep, q).unwrap().iter().map(|p| p.to_string()).collect();
    let reduced = ex.rep.reduce(Field::prime(q).unwrap()).unwrap();
    let mut assembled: Vec<String> = analyze(&reduced).unwrap().sing_x.points().iter().map(|p| p.to_string()).collect();
    brute.sort();
    assembled.sort();
    assert_eq!(brute, assembled, "{name} mod {q}");
}

#[test]
fn ex42i_mod_7() {
    agree("ex42i", 7);
}

#[test]
fn ex42ii_mod_7_and_13() {
    agree("ex42ii", 7);
    agree("ex42ii", 13);
}

#[test]
fn ex43_mod_7() {
    agree("ex43_quartic_two_lines", 7);
    agree("ex43_quintic_line", 13);
}

#[test]
fn rmk31_mod_11() {
    agree("rmk31", 11);
}

#[test]
fn prop44_is_smooth_mod_13() {
    let ex = build_example("prop44", &[]).unwrap();
    assert!(brute_force_oracle(&ex.rep, 13).unwrap().is_empty());
}

#[test]
fn oracle_refuses_composites_and_huge_primes() {
    let ex = build_example("ex42ii", &[]).unwrap();
    assert!(matches!(brute_force_oracle(&ex.rep, 15), Err(OracleError::NotPrime(15))));
    assert!(matches!(brute_force_oracle(&ex.rep, 101), Err(OracleError::Budget(_))));
}
