//! Named representations from the literature on cubic fourfolds containing
//! a plane, each with the invariants the pipeline is expected to reproduce.

use thiserror::Error;

use crate::algebra::{
    parse_poly, ternary_quadrics_resultant, AlgebraError, Field, Monomial, MultiPoly, Scalar, UniPoly, VarSet,
};
use crate::analysis::{Flat, Value};
use crate::detrep::{DetRepError, SymDetRep};

pub const NAMES: [&str; 7] = [
    "ex42i",
    "ex42ii",
    "ex43_quartic_two_lines",
    "ex43_quintic_line",
    "ex43_fermat",
    "rmk31",
    "prop44",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExampleError {
    #[error("unknown example {0:?}; known: {list}", list = NAMES.join(", "))]
    UnknownName(String),
    #[error("example {name} has no parameter {key:?}; accepted: {accepted}")]
    UnknownParam {
        name: String,
        key: String,
        accepted: String,
    },
    #[error("parameter {key}: {msg}")]
    BadParam { key: String, msg: String },
    /// The parameters violate the example's hypotheses.
    #[error("{0}")]
    Rejected(String),
    #[error(transparent)]
    Rep(#[from] DetRepError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Quoted from the literature.
    Stated,
    /// Computed independently and frozen.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub key: &'static str,
    pub value: Value,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedExample {
    pub name: &'static str,
    /// Every parameter with the value used, defaults included.
    pub params: Vec<(String, String)>,
    pub rep: SymDetRep,
    /// Empty unless every parameter has its default value.
    pub expected: Vec<Expectation>,
    pub notes: Vec<String>,
    /// For `prop44`: the plane `P_A`, disjoint from `P`, as three linear
    /// forms in `x1..x3, u1..u3`.
    pub section_plane: Option<[MultiPoly; 3]>,
}

impl NamedExample {
    /// Keys whose value in `report` differs from the expectation, with
    /// both values.
    pub fn mismatches(&self, report: &Flat) -> Vec<(String, String, String)> {
        self.expected
            .iter()
            .filter_map(|e| {
                let got = report.get(e.key).map(Value::render).unwrap_or_else(|| "<missing>".into());
                let want = e.value.render();
                (got != want).then(|| (e.key.to_string(), want, got))
            })
            .collect()
    }
}

struct Params<'a> {
    name: &'static str,
    given: &'a [(String, String)],
    used: Vec<(String, String)>,
    all_default: bool,
}

impl<'a> Params<'a> {
    fn new(name: &'static str, given: &'a [(String, String)], accepted: &[&str]) -> Result<Self, ExampleError> {
        for (k, _) in given {
            if !accepted.contains(&k.as_str()) {
                return Err(ExampleError::UnknownParam {
                    name: name.into(),
                    key: k.clone(),
                    accepted: accepted.join(", "),
                });
            }
        }
        Ok(Params {
            name,
            given,
            used: Vec::new(),
            all_default: true,
        })
    }

    fn text(&mut self, key: &str, default: &str) -> String {
        let v = match self.given.iter().rev().find(|(k, _)| k == key) {
            Some((_, v)) if v.trim() != default => {
                self.all_default = false;
                v.trim().to_string()
            }
            _ => default.to_string(),
        };
        self.used.push((key.to_string(), v.clone()));
        v
    }

    fn field(&mut self, default: &str) -> Result<Field, ExampleError> {
        let v = self.text("field", default);
        v.parse().map_err(|e: AlgebraError| ExampleError::BadParam {
            key: "field".into(),
            msg: e.to_string(),
        })
    }

    fn poly(&mut self, key: &str, default: &str, field: Field) -> Result<MultiPoly, ExampleError> {
        let v = self.text(key, default);
        parse_poly(&v, VarSet::Plane, field).map_err(|e| ExampleError::BadParam {
            key: key.into(),
            msg: e.to_string(),
        })
    }

    fn finish(
        self,
        rep: SymDetRep,
        expected: Vec<Expectation>,
        notes: Vec<String>,
        section_plane: Option<[MultiPoly; 3]>,
    ) -> NamedExample {
        NamedExample {
            name: self.name,
            params: self.used,
            rep,
            expected: if self.all_default { expected } else { Vec::new() },
            notes,
            section_plane,
        }
    }
}

fn zero(field: Field) -> MultiPoly {
    MultiPoly::zero(VarSet::Plane, field)
}

fn var(i: usize, field: Field) -> MultiPoly {
    MultiPoly::var(i, VarSet::Plane, field)
}

fn c(field: Field, n: i64) -> MultiPoly {
    MultiPoly::constant(field.from_i64(n), VarSet::Plane)
}

/// `f` restricted to `x_k = 0` has three distinct roots, none at the
/// coordinate points (`f(e_j) ≠ 0` for the other two `j`).
fn meets_coordinate_line_in_three_points(f: &MultiPoly, k: usize) -> bool {
    let a = (k + 1) % 3;
    let field = f.field();
    let mut coeffs = vec![field.zero(); 4];
    for (m, v) in f.terms() {
        if m.0[k] == 0 {
            let i = m.0[a] as usize;
            coeffs[i] = &coeffs[i] + v;
        }
    }
    let u = UniPoly::new(field, coeffs.clone());
    !coeffs[0].is_zero() && !coeffs[3].is_zero() && u.is_squarefree()
}

fn expect(list: &[(&'static str, Value, Provenance)]) -> Vec<Expectation> {
    list.iter()
        .map(|(k, v, p)| Expectation {
            key: k,
            value: v.clone(),
            provenance: *p,
        })
        .collect()
}

/// Reports list points in sorted string order.
fn pts(v: &[&str]) -> Value {
    let mut v: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    v.sort();
    Value::List(v)
}

use Provenance::{Derived, Stated};
use Value::{Bool, Int};

fn ex42i(given: &[(String, String)]) -> Result<NamedExample, ExampleError> {
    let mut p = Params::new("ex42i", given, &["f", "field"])?;
    let field = p.field("rational")?;
    let f = p.poly("f", "x1^3 + x2^3 + x3^3", field)?;
    for k in 0..3 {
        if !meets_coordinate_line_in_three_points(&f, k) {
            return Err(ExampleError::Rejected(format!(
                "f must meet x1*x2*x3 = 0 in nine distinct points away from its nodes; it fails on x{} = 0",
                k + 1
            )));
        }
    }
    let (x1, x2, x3) = (var(0, field), var(1, field), var(2, field));
    let z = zero(field);
    let rep = SymDetRep::validate(vec![
        vec![z.clone(), x1.clone(), x2.clone(), z.clone()],
        vec![x1, z.clone(), x3.clone(), z.clone()],
        vec![x2, x3, z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z, f],
    ])?;
    let expected = expect(&[
        ("b_points", pts(&["(0:0:0:0:0:1)", "(0:0:0:0:1:0)", "(0:0:0:1:0:0)"]), Stated),
        ("b_count", Int(3), Stated),
        ("s_c_count", Int(0), Derived),
        ("sing_x_count", Int(3), Stated),
        ("sing_c_count", Int(6), Derived),
        ("s_theta_count", Int(3), Derived),
        ("s_theta_tilde_count", Int(6), Derived),
        ("complete", Bool(false), Derived),
        ("smooth", Bool(false), Derived),
        ("bounds_ok", Bool(true), Derived),
    ]);
    let notes = vec![
        "over the rationals only 3 of the 9 points of C1 ∩ {x1*x2*x3 = 0} are rational; use field=fp:7 for all 12 nodes".into(),
        "the coordinate nodes lie on D = {2*x1*x2*x3 = 0}, so Sing(C) ∩ D has 12 points although only the 9 points p1..p9 are named"
            .into(),
    ];
    Ok(p.finish(rep, expected, notes, None))
}

fn ex42ii(given: &[(String, String)]) -> Result<NamedExample, ExampleError> {
    let mut p = Params::new("ex42ii", given, &["l1", "l2", "l3", "l4", "l5", "l6", "field"])?;
    let field = p.field("rational")?;
    let defaults = ["x1", "x2", "x3", "x1 + x2 + x3", "x1 + 2*x2 + 3*x3", "x1 + 3*x2 + 2*x3"];
    let mut lines = Vec::new();
    for (i, d) in defaults.iter().enumerate() {
        lines.push(p.poly(&format!("l{}", i + 1), d, field)?);
    }
    // Fifteen distinct pairwise intersections: six distinct lines, no three
    // through a point.
    let coeffs: Vec<Vec<Scalar>> = lines
        .iter()
        .map(|l| (0..3).map(|i| l.coefficient(&Monomial::var(i))).collect())
        .collect();
    let mut meets = Vec::new();
    for i in 0..6 {
        if lines[i].degree() != Some(1) {
            return Err(ExampleError::BadParam {
                key: format!("l{}", i + 1),
                msg: "not a linear form".into(),
            });
        }
        for j in i + 1..6 {
            let (a, b) = (&coeffs[i], &coeffs[j]);
            let cross = vec![
                &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
                &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
                &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
            ];
            let pt = crate::algebra::ProjPoint::new(cross, crate::algebra::Ambient::Plane).map_err(|_| {
                ExampleError::Rejected(format!("lines l{} and l{} coincide", i + 1, j + 1))
            })?;
            meets.push(pt);
        }
    }
    meets.sort();
    meets.dedup();
    if meets.len() != 15 {
        return Err(ExampleError::Rejected(
            "the six lines must be in general position: three of them pass through one point".into(),
        ));
    }
    let cubic = &(&lines[3] * &lines[4]) * &lines[5];
    let rep = SymDetRep::diagonal([lines[0].clone(), lines[1].clone(), lines[2].clone(), cubic])?;
    let expected = expect(&[
        ("sing_c_count", Int(15), Derived),
        ("s_theta_tilde_count", Int(12), Stated),
        ("s_theta_count", Int(12), Derived),
        ("s_c", pts(&["(1:-2:1)", "(1:-1/5:-1/5)", "(1:1:-2)"]), Derived),
        ("s_c_count", Int(3), Stated),
        ("b_count", Int(0), Stated),
        ("sing_x", pts(&["(1:-2:1:0:0:0)", "(1:-1/5:-1/5:0:0:0)", "(1:1:-2:0:0:0)"]), Derived),
        ("sing_x_count", Int(3), Stated),
        ("complete", Bool(true), Derived),
        ("smooth", Bool(false), Derived),
        ("bounds_ok", Bool(true), Derived),
        ("couples", Int(12), Derived),
    ]);
    Ok(p.finish(rep, expected, Vec::new(), None))
}

const NODAL_AT_ONES: &str = "(x2 - x3)^2*x3 - (x1 - x3)^3 - (x1 - x3)^2*x3";

fn ex43_quartic_two_lines(given: &[(String, String)]) -> Result<NamedExample, ExampleError> {
    let mut p = Params::new("ex43_quartic_two_lines", given, &["l1", "l2", "l11", "q1", "f", "field"])?;
    let field = p.field("rational")?;
    let l1 = p.poly("l1", "x1", field)?;
    let l2 = p.poly("l2", "x1 + x2", field)?;
    let l11 = p.poly("l11", "x3", field)?;
    let q1 = p.poly("q1", "x1^2 - x2^2", field)?;
    let f = p.poly("f", NODAL_AT_ONES, field)?;
    let z = zero(field);
    let rep = SymDetRep::validate(vec![
        vec![l1, z.clone(), z.clone(), z.clone()],
        vec![z.clone(), l2, z.clone(), z.clone()],
        vec![z.clone(), z.clone(), l11, q1.clone()],
        vec![z.clone(), z, q1, f],
    ])?;
    let expected = expect(&[
        ("sing_c", pts(&["(0:0:1)", "(1:-1:0)", "(1:1:1)"]), Derived),
        ("s_theta", pts(&["(0:0:1)", "(1:-1:0)"]), Derived),
        ("s_c", pts(&["(1:1:1)"]), Derived),
        ("b_count", Int(0), Derived),
        ("sing_x", pts(&["(1:1:1:0:0:0)"]), Derived),
        ("complete", Bool(false), Derived),
        ("bounds_ok", Bool(true), Derived),
    ]);
    let notes = vec!["the quartic has one node, at (1:1:1); over the rationals 3 of the 10 nodes of the sextic are rational".into()];
    Ok(p.finish(rep, expected, notes, None))
}

fn ex43_quintic_line(given: &[(String, String)]) -> Result<NamedExample, ExampleError> {
    let mut p = Params::new(
        "ex43_quintic_line",
        given,
        &["l1", "l11", "l12", "l22", "q1", "q2", "f", "field"],
    )?;
    let field = p.field("rational")?;
    let l1 = p.poly("l1", "x1 + x3", field)?;
    let l11 = p.poly("l11", "x1", field)?;
    let l12 = p.poly("l12", "x2 - x3", field)?;
    let l22 = p.poly("l22", "x3", field)?;
    let q1 = p.poly("q1", "x1^2 - x2^2", field)?;
    let q2 = p.poly("q2", "x2^2 - x3^2", field)?;
    let f = p.poly("f", NODAL_AT_ONES, field)?;
    let z = zero(field);
    let rep = SymDetRep::validate(vec![
        vec![l1, z.clone(), z.clone(), z.clone()],
        vec![z.clone(), l11, l12.clone(), q1.clone()],
        vec![z.clone(), l12, l22, q2.clone()],
        vec![z, q1, q2, f],
    ])?;
    let expected = expect(&[
        ("sing_c", pts(&["(1:0:1)", "(1:1:1)"]), Derived),
        ("s_theta", pts(&["(1:0:1)"]), Derived),
        ("s_c", pts(&["(1:1:1)"]), Derived),
        ("b_count", Int(0), Derived),
        ("sing_x", pts(&["(1:1:1:0:0:0)"]), Derived),
        ("complete", Bool(false), Derived),
        ("bounds_ok", Bool(true), Derived),
    ]);
    let notes = vec!["the quintic has two nodes; over the rationals 2 of the 7 nodes of the sextic are rational".into()];
    Ok(p.finish(rep, expected, notes, None))
}

fn ex43_fermat(given: &[(String, String)]) -> Result<NamedExample, ExampleError> {
    let mut p = Params::new("ex43_fermat", given, &["field"])?;
    let field = p.field("fp:17")?;
    let Field::Prime(q) = field else {
        return Err(ExampleError::Rejected(
            "this example needs i and a square root of i, so it is only built over F_q with q ≡ 1 (mod 8)".into(),
        ));
    };
    if q % 8 != 1 {
        return Err(ExampleError::Rejected(format!(
            "this example needs i and a square root of i: q = {q} is not ≡ 1 (mod 8)"
        )));
    }
    let i = field.from_i64(-1).sqrt().expect("q ≡ 1 mod 4");
    let (x1, x2, x3) = (var(0, field), var(1, field), var(2, field));
    let cst = |s: &Scalar| MultiPoly::constant(s.clone(), VarSet::Plane);
    let fermat = parse_poly("x1^4 + x2^4 + x3^4", VarSet::Plane, field)?;
    let target = &(&x1 * &(&x1 + &x2)) * &fermat;
    let build = |omega: &Scalar| -> Result<SymDetRep, ExampleError> {
        let z = zero(field);
        let a = -&(&x1 - &(&cst(omega) * &x2));
        let b = &(&x1 + &(&cst(omega) * &x2)) * &(&(&x1 * &x1) + &(&cst(&i) * &(&x2 * &x2)));
        let s = &x3 * &x3;
        Ok(SymDetRep::validate(vec![
            vec![-&x1, z.clone(), z.clone(), z.clone()],
            vec![z.clone(), &x1 + &x2, z.clone(), z.clone()],
            vec![z.clone(), z.clone(), a, s.clone()],
            vec![z, c(field, 0), s, b],
        ])?)
    };
    // As printed, ω² = −i; the determinant identity needs ω² = i.
    let mut notes = Vec::new();
    let mut chosen = None;
    for (label, sq) in [("-i", -&i), ("i", i.clone())] {
        if let Some(omega) = sq.sqrt() {
            let rep = build(&omega)?;
            if rep.sextic() == target || rep.sextic() == -&target {
                notes.push(format!("i = {i}, omega = {omega} with omega^2 = {label}"));
                chosen = Some(rep);
                break;
            }
            notes.push(format!("omega^2 = {label} does not give det M = ±x1*(x1 + x2)*(x1^4 + x2^4 + x3^4)"));
        }
    }
    let rep = chosen.ok_or_else(|| ExampleError::Rejected("no choice of omega reproduces the Fermat quartic".into()))?;
    notes.push("G(e3) = 0: the conics Q_p ∩ P form a pencil, not a net, so bounds_ok is false".into());
    let expected = expect(&[
        ("sing_c_count", Int(5), Derived),
        ("s_theta_count", Int(5), Derived),
        ("s_c_count", Int(0), Derived),
        ("net_degenerate", Bool(true), Derived),
        ("sing_x_count", Int(0), Derived),
        ("bounds_ok", Bool(false), Derived),
    ]);
    Ok(p.finish(rep, expected, notes, None))
}

fn rmk31(given: &[(String, String)]) -> Result<NamedExample, ExampleError> {
    let mut p = Params::new("rmk31", given, &["f", "field"])?;
    let field = p.field("rational")?;
    let f = p.poly("f", "x1^3 + x2^3 + x3^3 + x1*x2*x3", field)?;
    let (x1, x2, x3) = (var(0, field), var(1, field), var(2, field));
    let z = zero(field);
    let rep = SymDetRep::validate(vec![
        vec![z.clone(), x1.clone(), x2.clone(), z.clone()],
        vec![x1.clone(), -&x3, z.clone(), z.clone()],
        vec![x2, z.clone(), &x1 + &x3, z.clone()],
        vec![z.clone(), z.clone(), z, f],
    ])?;
    let expected = expect(&[
        ("sing_c", pts(&["(0:0:1)", "(1:0:-1)"]), Derived),
        ("s_theta", pts(&["(1:0:-1)"]), Derived),
        ("s_theta_tilde", pts(&["(0:0:1)", "(1:0:-1)"]), Stated),
        ("s_c_count", Int(0), Derived),
        ("b_points", pts(&["(0:0:0:1:0:0)"]), Derived),
        ("sing_x_count", Int(1), Derived),
        ("bounds_ok", Bool(true), Derived),
    ]);
    let notes = vec!["det M1 = x2^2*x3 - x1^3 - x1^2*x3 (the x1^2*x3 sign differs from x2^2*x3 - x1^3 + x1^2*x3; both are nodal at (0:0:1))".into()];
    Ok(p.finish(rep, expected, notes, None))
}

/// `f_A = Σ_i (a_i1 x1 + a_i2 x2 + a_i3 x3)² x_i`.
pub fn prop44_cubic(a: &[[i64; 3]; 3], field: Field) -> MultiPoly {
    let mut f = zero(field);
    for (i, row) in a.iter().enumerate() {
        let mut lin = zero(field);
        for (j, &aij) in row.iter().enumerate() {
            lin = &lin + &(&c(field, aij) * &var(j, field));
        }
        f = &f + &(&(&lin * &lin) * &var(i, field));
    }
    f
}

/// Why `A` is outside the open set `U`, if it is.
pub fn prop44_violation(a: &[[i64; 3]; 3], field: Field) -> Option<String> {
    let f = prop44_cubic(a, field);
    if f.is_zero() {
        return Some("f_A vanishes identically".into());
    }
    for i in 0..3 {
        if field.from_i64(a[i][i]).is_zero() {
            return Some(format!(
                "a{0}{0} = 0, so C'_A passes through the coordinate point e{0} where two of the lines meet",
                i + 1
            ));
        }
    }
    let g = f.gradient();
    if ternary_quadrics_resultant([&g[0], &g[1], &g[2]]).is_zero() {
        return Some("C'_A is singular".into());
    }
    for k in 0..3 {
        if !meets_coordinate_line_in_three_points(&f, k) {
            return Some(format!("C'_A is tangent to the line x{} = 0", k + 1));
        }
    }
    None
}

fn parse_matrix(text: &str) -> Result<[[i64; 3]; 3], ExampleError> {
    let bad = |msg: &str| ExampleError::BadParam {
        key: "A".into(),
        msg: msg.into(),
    };
    let v: Vec<i64> = text
        .split([',', ';', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| bad("entries must be integers")))
        .collect::<Result<_, _>>()?;
    if v.len() != 9 {
        return Err(bad("expected nine entries a11,a12,...,a33"));
    }
    Ok([[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]])
}

fn prop44(given: &[(String, String)]) -> Result<NamedExample, ExampleError> {
    let mut p = Params::new("prop44", given, &["A", "field"])?;
    let field = p.field("fp:13")?;
    let a = parse_matrix(&p.text("A", "1,0,0,0,1,0,0,0,1"))?;
    for f in [Field::Rational, field] {
        if let Some(why) = prop44_violation(&a, f) {
            let over = if f == Field::Rational {
                String::new()
            } else {
                format!(" over {f}")
            };
            return Err(ExampleError::Rejected(format!("A is not in U{over}: {why}")));
        }
    }
    let fa = prop44_cubic(&a, field);
    let rep = SymDetRep::diagonal([var(0, field), var(1, field), var(2, field), -&fa])?;
    let amb = |i| MultiPoly::var(i, VarSet::Ambient, field);
    let section = [0, 1, 2].map(|i| {
        let mut form = amb(3 + i);
        for j in 0..3 {
            let aij = MultiPoly::constant(field.from_i64(a[i][j]), VarSet::Ambient);
            form = &form - &(&aij * &amb(j));
        }
        form
    });
    let expected = expect(&[
        ("sing_c_count", Int(12), Derived),
        ("s_theta_count", Int(12), Stated),
        ("s_theta_tilde_count", Int(12), Stated),
        ("s_c_count", Int(0), Derived),
        ("b_count", Int(0), Stated),
        ("sing_x_count", Int(0), Stated),
        ("smooth", Bool(true), Stated),
        ("couples", Int(12), Stated),
        ("ns2_class_count", Int(25), Stated),
        ("ns2_rank_lower_bound", Int(14), Stated),
        ("ns2_det", Value::BigInt("32768".into()), Derived),
    ]);
    let notes = vec![
        "P_A is cut out by u_i - (a_i1 x1 + a_i2 x2 + a_i3 x3), i = 1, 2, 3".into(),
        "over the rationals only 6 of the 12 nodes are rational; the default field F_13 contains all of them".into(),
    ];
    Ok(p.finish(rep, expected, notes, Some(section)))
}

pub fn build_example(name: &str, params: &[(String, String)]) -> Result<NamedExample, ExampleError> {
    match name {
        "ex42i" => ex42i(params),
        "ex42ii" => ex42ii(params),
        "ex43_quartic_two_lines" => ex43_quartic_two_lines(params),
        "ex43_quintic_line" => ex43_quintic_line(params),
        "ex43_fermat" => ex43_fermat(params),
        "rmk31" => rmk31(params),
        "prop44" => prop44(params),
        other => Err(ExampleError::UnknownName(other.into())),
    }
}
