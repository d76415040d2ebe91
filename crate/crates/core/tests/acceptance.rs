//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use cubicplane::algebra::ProjPoint;
use cubicplane::analysis::{analyze, AnalysisReport};
use cubicplane::cli::{run_cli, EXIT_REJECTED, EXIT_USAGE};
use cubicplane::curves::rank_profile;
use cubicplane::detrep::SymDetRep;
use cubicplane::examples::{build_example, NAMES};
use cubicplane::fourfold::{brute_force_oracle, couples_and_intersections};
use cubicplane::lattice::ns2_gram;
use cubicplane::spin::{build_dual_graph, graph_stats, spin_subsets, theta_counts, Config};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn names(v: &[ProjPoint]) -> Vec<String> {
    let mut s: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    s.sort();
    s
}

fn example(name: &str, field: Option<&str>) -> Option<SymDetRep> {
    let params: Vec<(String, String)> = field.map(|f| vec![("field".into(), f.into())]).unwrap_or_default();
    build_example(name, &params).ok().map(|e| e.rep)
}

/// The example over `F_q`, when it can be built there and its sextic stays
/// nodal.
fn compatible(name: &str, q: u64) -> Option<(SymDetRep, AnalysisReport)> {
    let rep = example(name, Some(&format!("fp:{q}")))?;
    let report = analyze(&rep).ok()?;
    Some((rep, report))
}

fn primes_for(name: &str) -> Vec<u64> {
    if name == "ex43_fermat" {
        vec![17]
    } else {
        vec![7, 11, 13]
    }
}

fn c1() -> Outcome {
    let rep = example("ex42i", None).ok_or("ex42i did not build")?;
    let r = analyze(&rep).map_err(|e| e.to_string())?;
    let b = names(&r.sing_x.base.points);
    let want = ["(0:0:0:0:0:1)", "(0:0:0:0:1:0)", "(0:0:0:1:0:0)"];
    ensure(b == want, || format!("B = {b:?}"))?;
    let (n, sc) = (r.sing_x.len(), r.classification.s_c().len());
    ensure(n == sc + 3, || format!("#Sing(X) = {n}, #S_C = {sc}"))?;
    Ok(format!("B = {{{}}}, #Sing(X) = {n} = #S_C + 3", b.join(", ")))
}

fn c2() -> Outcome {
    let rep = example("ex42ii", None).ok_or("ex42ii did not build")?;
    let r = analyze(&rep).map_err(|e| e.to_string())?;
    let c = &r.classification;
    ensure(r.sing_x.base.points.is_empty(), || "B is not empty".into())?;
    ensure(c.points.len() == 15 && c.s_theta_tilde().len() == 12, || {
        format!("{} nodes, #S~ = {}", c.points.len(), c.s_theta_tilde().len())
    })?;
    let vertices = names(&r.sing_x.cone_vertices);
    let want = ["(1:-1/5:-1/5:0:0:0)", "(1:-2:1:0:0:0)", "(1:1:-2:0:0:0)"];
    ensure(vertices == want && names(&r.sing_x.points()) == want, || format!("Sing(X) = {vertices:?}"))?;
    ensure(c.s_c().len() == 3, || format!("#S_C = {}", c.s_c().len()))?;
    Ok("B = ∅, #S~ = 12 of 15, Sing(X) = 3 cone vertices = #S_C".into())
}

fn c3() -> Outcome {
    let mut notes = Vec::new();
    for q in [13, 7] {
        let (rep, r) = compatible("prop44", q).ok_or(format!("prop44 rejected over F_{q}"))?;
        ensure(r.smooth() == Some(true), || format!("assembly not smooth over F_{q}"))?;
        let oracle = brute_force_oracle(&rep, q).map_err(|e| e.to_string())?;
        ensure(oracle.is_empty(), || format!("oracle finds {} points over F_{q}", oracle.len()))?;
        let s = r.classification.s_theta().len();
        ensure(s == 12, || format!("#S_θ = {s} over F_{q}"))?;
        let ns = r.ns2.as_ref().ok_or("no NS2 report")?;
        ensure(
            ns.class_count == 25 && ns.gram.len() == 14 && ns.det != 0.into() && ns.rank_lower_bound == 14,
            || format!("NS2: {} classes, size {}, det {}", ns.class_count, ns.gram.len(), ns.det),
        )?;
        notes.push(format!("F_{q}"));
    }
    Ok(format!("smooth by assembly and oracle over {}, #S_θ = 12, 25 classes, det 32768, rank ≥ 14", notes.join(", ")))
}

fn c4() -> Outcome {
    let mut checked = Vec::new();
    for name in NAMES {
        for q in primes_for(name) {
            let Some((rep, r)) = compatible(name, q) else { continue };
            let oracle = names(&brute_force_oracle(&rep, q).map_err(|e| e.to_string())?);
            let assembled = names(&r.sing_x.points());
            ensure(oracle == assembled, || format!("{name} mod {q}: oracle {oracle:?} vs assembly {assembled:?}"))?;
            checked.push(format!("{name}/{q}"));
        }
    }
    Ok(format!("{} pairs agree: {}", checked.len(), checked.join(" ")))
}

fn bound_check(label: &str, r: &AnalysisReport) -> Result<(), String> {
    let x = &r.sing_x;
    let (n, sc, b) = (x.len(), r.classification.s_c().len(), x.base.points.len());
    ensure(sc <= n && n <= sc + 3 && b <= 3 && x.all_double && x.zero_dimensional && x.complete, || {
        format!(
            "{label}: #Sing(X) = {n}, #S_C = {sc}, #B = {b}, double {}, zero-dim {}",
            x.all_double, x.zero_dimensional
        )
    })
}

fn c5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3_1);
    let field = "fp:13";
    let (mut family, mut attempts) = (0, 0);
    while family < 50 {
        attempts += 1;
        let a: Vec<String> = (0..9).map(|_| rng.gen_range(-3i64..=3).to_string()).collect();
        let params = vec![("A".into(), a.join(",")), ("field".into(), field.into())];
        let Ok(ex) = build_example("prop44", &params) else { continue };
        let r = analyze(&ex.rep).map_err(|e| format!("A = {}: {e}", a.join(",")))?;
        bound_check(&format!("A = {}", a.join(",")), &r)?;
        ensure(r.smooth() == Some(true), || format!("A = {} not smooth", a.join(",")))?;
        family += 1;
    }
    let mut perturbed = 0;
    let mut singular_seen = 0;
    let coeff = |rng: &mut ChaCha8Rng| rng.gen_range(-3i64..=3);
    while perturbed < 20 {
        let params: Vec<(String, String)> = if perturbed % 2 == 0 {
            let monos = ["x1^3", "x1^2*x2", "x1^2*x3", "x1*x2^2", "x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2", "x3^3"];
            let f: Vec<String> = monos.iter().map(|m| format!("({})*{m}", coeff(&mut rng))).collect();
            vec![("f".into(), f.join(" + ")), ("field".into(), field.into())]
        } else {
            let mut p: Vec<(String, String)> = (4..=6)
                .map(|i| {
                    let c: Vec<i64> = (0..3).map(|_| coeff(&mut rng)).collect();
                    (format!("l{i}"), format!("({})*x1 + ({})*x2 + ({})*x3", c[0], c[1], c[2]))
                })
                .collect();
            p.push(("field".into(), field.into()));
            p
        };
        let name = if perturbed % 2 == 0 { "ex42i" } else { "ex42ii" };
        let Ok(ex) = build_example(name, &params) else { continue };
        let Ok(r) = analyze(&ex.rep) else { continue };
        bound_check(&format!("{name} {params:?}"), &r)?;
        singular_seen += usize::from(!r.sing_x.is_empty());
        perturbed += 1;
    }
    Ok(format!(
        "50 prop44 members ({attempts} draws) smooth within bounds; 20 perturbed ex42 reps within bounds ({singular_seen} singular)"
    ))
}

fn c6() -> Outcome {
    let rep = example("prop44", None).ok_or("prop44 did not build")?;
    let r = analyze(&rep).map_err(|e| e.to_string())?;
    let s_theta = r.classification.s_theta();
    let c = couples_and_intersections(&rep, &s_theta).map_err(|e| e.to_string())?;
    ensure(c.pairs.len() == 12, || format!("{} couples", c.pairs.len()))?;
    ensure(c.within_are_lines(), || "a couple does not meet in a line".into())?;
    ensure(c.cross.len() == 66 && c.cross_are_points(), || "cross-couple planes do not meet in points".into())?;
    ensure(c.no_plane_is_p(), || "a plane equals P".into())?;
    Ok("12 couples, 12 lines within, 66×4 cross intersections are points, no plane is P".into())
}

fn witness(spec: &str) -> Result<bool, String> {
    let cfg: Config = spec.parse().map_err(|e: cubicplane::spin::SpinError| e.to_string())?;
    let g = build_dual_graph(&cfg.components, true).map_err(|e| format!("{spec}: {e}"))?;
    Ok(!spin_subsets(&g, 10, false).is_empty())
}

fn c7() -> Outcome {
    ensure(theta_counts(10) == (1048576, 524800, 523776), || format!("{:?}", theta_counts(10)))?;
    let listed = [
        "lines=6",
        "conics=3",
        "conics=2,lines=2",
        "conic,lines=4",
        "lines=3,cubic:nodes=1",
        "line,quintic:nodes=5",
        "line,quintic:nodes=6",
        "cubic,cubic:nodes=1",
        "quartic:nodes=1,lines=2",
        "quartic:nodes=2,lines=2",
    ];
    for spec in listed {
        ensure(witness(spec)?, || format!("{spec} has no witness"))?;
    }
    let mut excluded: Vec<String> = (0..10).map(|m| format!("sextic:nodes={m}")).collect();
    excluded.push("cubics=2".into());
    excluded.extend((0..5).map(|m| format!("line,quintic:nodes={m}")));
    excluded.push("quartic,conic".into());
    for spec in &excluded {
        ensure(!witness(spec)?, || format!("{spec} has a witness"))?;
    }
    let conics = build_dual_graph(&"conics=3".parse::<Config>().unwrap().components, true).unwrap();
    let (_, b1) = graph_stats(&conics);
    ensure(b1 == 10, || format!("3 conics: b1 = {b1}"))?;
    Ok(format!(
        "theta_counts(10) ok; (a)–(h) ({} configurations) have witnesses; {} excluded configurations do not; 3 conics b1 = 10",
        listed.len(),
        excluded.len()
    ))
}

fn c8() -> Outcome {
    for m in 1..=12 {
        let r = ns2_gram(m).map_err(|e| e.to_string())?;
        ensure(r.det != 0.into(), || format!("m = {m}: det 0"))?;
    }
    let d1 = ns2_gram(1).unwrap().det;
    ensure(d1 == 16.into(), || format!("det(m = 1) = {d1}"))?;
    Ok("det ≠ 0 for m = 1..12, det(m = 1) = 16".into())
}

fn c9() -> Outcome {
    let mut checked = Vec::new();
    for name in NAMES {
        for q in primes_for(name) {
            let Some((rep, _)) = compatible(name, q) else { continue };
            let prof = rank_profile(&rep);
            ensure(prof.is_stratified(), || format!("{name} mod {q}: {prof:?}"))?;
            checked.push(format!("{name}/{q}"));
        }
    }
    Ok(format!("{} example/prime pairs stratified", checked.len()))
}

fn c10() -> Outcome {
    let dir = std::env::temp_dir().join(format!("cubicplane-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let head = "field rational\nvars x1 x2 x3\n";
    let f = "(x2 - x3)^2*x3 - (x1 - x3)^3 - (x1 - x3)^2*x3";
    let cases = [
        (
            "cuspidal",
            format!("row 0: x1, 0, 0, 0\nrow 1: 0, x2, 0, 0\nrow 2: 0, 0, x3, 0\nrow 3: 0, 0, 0, (x2 - x3)^2*x3 - (x1 - x3)^3\n"),
            "nodal",
        ),
        (
            "non-reduced",
            format!("row 0: x1, 0, 0, 0\nrow 1: 0, x1, 0, 0\nrow 2: 0, 0, x3, 0\nrow 3: 0, 0, 0, {f}\n"),
            "reduced",
        ),
        (
            "asymmetric",
            format!("row 0: x1, x2, 0, 0\nrow 1: 0, x2, 0, 0\nrow 2: 0, 0, x3, 0\nrow 3: 0, 0, 0, {f}\n"),
            "symmetric",
        ),
    ];
    for (label, rows, word) in cases {
        let path = dir.join(format!("{label}.rep"));
        std::fs::write(&path, format!("{head}{rows}")).map_err(|e| e.to_string())?;
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_cli(["cubicplane", "analyze", path.to_str().unwrap()], &mut out, &mut err);
        let err = String::from_utf8_lossy(&err);
        ensure(code == EXIT_REJECTED || code == EXIT_USAGE, || format!("{label}: exit {code}"))?;
        ensure(out.is_empty(), || format!("{label}: a report was printed"))?;
        ensure(err.contains(word), || format!("{label}: diagnostic {err:?} lacks {word:?}"))?;
    }
    Ok("cuspidal, non-reduced and asymmetric inputs rejected with exit 1 and no report".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("three coordinate lines plus a cubic: base locus and #Sing(X) = #S_C + 3", c1),
        ("six lines: cone vertices over the nodes off D", c2),
        ("identity member of the A-family is smooth", c3),
        ("oracle equivalence on the named examples", c4),
        ("singular-locus bounds on random members", c5),
        ("couples of planes on the identity member", c6),
        ("spin bookkeeping", c7),
        ("NS2 Gram determinants", c8),
        ("rank stratification over F_7, F_11, F_13", c9),
        ("rejection of invalid representations", c10),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {title} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {title} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
