//! Acceptance gate: one PASS/FAIL line per criterion, each under its time limit.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use enriques_core::char2::{self, AValue, CoordinateChange, WeierstrassModel};
use enriques_core::field::{BinaryField, FieldElement};
use enriques_core::graph;
use enriques_core::intmat::Signature;
use enriques_core::plane::{self, LineType};
use enriques_core::report::{self, Context};
use enriques_core::sylvester::{self, GammaVertex, PermS6};
use enriques_core::vinberg;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: &str) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c1(cx: &Context) -> Outcome {
    let p = cx.plane();
    ensure(p.points.len() == 21 && p.lines.len() == 21, "21 points and 21 lines")?;
    for i in 0..21 {
        let on_line = (0..21).filter(|&q| plane::incidence(&p.points[q], &p.lines[i])).count();
        let through = (0..21).filter(|&l| plane::incidence(&p.points[i], &p.lines[l])).count();
        ensure(on_line == 5 && through == 5, "5-regular incidence")?;
    }
    let torsion = plane::torsion_points().map_err(err)?;
    ensure(torsion.len() == 9, "9 torsion points")?;
    ensure(torsion.iter().all(|q| plane::cubic_value(&q.coords()).is_zero()), "torsion on cubic")?;
    let types = p.line_types().map_err(err)?;
    let tangents = types.iter().filter(|t| matches!(t, LineType::TripleTangent { .. })).count();
    ensure(tangents == 9 && types.len() - tangents == 12, "9 triple tangents and 12 transversals")
}

fn c2(cx: &Context) -> Outcome {
    let p = cx.plane();
    let found: BTreeSet<Vec<usize>> = p.general_sextuples().iter().map(|s| s.points.to_vec()).collect();
    ensure(found.len() == 168, "168 general sextuples")?;
    // oracle: rank of the coordinate triple over GF(4)
    let collinear = |a: usize, b: usize, c: usize| {
        let (x, y, z) = (p.points[a].coords(), p.points[b].coords(), p.points[c].coords());
        let det = x[0] * (y[1] * z[2] + y[2] * z[1]) + x[1] * (y[0] * z[2] + y[2] * z[0]) + x[2] * (y[0] * z[1] + y[1] * z[0]);
        det.is_zero()
    };
    let mut brute = 0;
    for s in combinations(21, 6) {
        let general = (0..6).all(|i| (i + 1..6).all(|j| (j + 1..6).all(|k| !collinear(s[i], s[j], s[k]))));
        if general {
            brute += 1;
            ensure(found.contains(&s), "brute-force sextuple missing from search")?;
        }
    }
    ensure(brute == 168, "brute force finds 168")
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn c3(cx: &Context) -> Outcome {
    let ns = cx.ns().map_err(err)?;
    ensure(ns.radical_basis.len() == 20, "radical rank 20")?;
    ensure(ns.gram22.dim() == 22 && ns.rank() == 22, "rank 22")?;
    let sig = ns.gram22.exact_signature();
    ensure(sig == Signature { plus: 1, minus: 21, zero: 0 }, "signature (1,21)")?;
    ensure(ns.gram22.determinant() == 4.into() || ns.gram22.determinant() == (-4).into(), "|det| = 4")?;
    ensure(ns.gram22.is_even(), "even")?;
    let l0 = ns.ell_vector(0);
    for m in 1..21 {
        ensure(ns.in_radical(&diff(&ns.ell_vector(m), &l0)), "ell independent of the line")?;
    }
    ensure(ns.pair42(&l0, &l0) == 2, "ell^2 = 2")
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn c4(cx: &Context) -> Outcome {
    let ns = cx.ns().map_err(err)?;
    let cfgs = ns.find_contraction_configs().map_err(err)?;
    ensure(!cfgs.is_empty(), "a contraction configuration exists")?;
    let cremona = ns.cremona_vectors();
    ensure(cremona.len() == 168, "168 Cremona vectors")?;
    for cfg in &cfgs {
        let orth: Vec<usize> = (0..168)
            .filter(|&i| cfg.curve_ids.iter().all(|&c| ns.pair42(&cremona[i].vector, &ns.unit(c)) == 0))
            .collect();
        ensure(orth.len() == 10, "exactly 10 orthogonal vectors")?;
        // each corresponds to a splitting of the 6 free points into two triangles
        let splits: BTreeSet<[usize; 6]> = orth.iter().map(|&i| cremona[i].points).collect();
        ensure(splits == ns.triangle_splittings(cfg).into_iter().collect(), "match the 10 two-triangle splittings")?;
    }
    Ok(())
}

fn c5(cx: &Context) -> Outcome {
    let numx = cx.numx().map_err(err)?;
    ensure(numx.gram_complement.all_entries_even(), "complement Gram all even")?;
    ensure(numx.gram10.is_even(), "halved Gram even")?;
    ensure(numx.gram10.determinant() == (-1).into(), "det -1")?;
    ensure(numx.gram10.exact_signature() == Signature { plus: 1, minus: 9, zero: 0 }, "signature (1,9)")
}

fn c6(cx: &Context) -> Outcome {
    let lg = cx.lattice_gamma().map_err(err)?;
    let g = sylvester::combinatorial_gamma();
    let perm = graph::find_isomorphism(lg, &g).ok_or("not isomorphic")?;
    ensure(lg.is_isomorphism(&g, &perm), "returned map is an isomorphism")?;
    let verts = sylvester::gamma_vertices();
    let tv: Vec<usize> = (0..40).filter(|&i| matches!(verts[i], GammaVertex::TenVector(_))).collect();
    ensure(tv.len() == 10, "ten ten-vectors")?;
    for &i in &tv {
        ensure(tv.iter().all(|&j| i == j || g.pairing(i, j) == 2), "ten-vector block complete with 2")?;
        let duads = (0..40).filter(|&j| matches!(verts[j], GammaVertex::Duad(_)) && g.pairing(i, j) == 2).count();
        let synth = (0..40).filter(|&j| matches!(verts[j], GammaVertex::Syntheme(_)) && g.pairing(i, j) == 2).count();
        ensure(duads == 6 && synth == 6, "6 duads and 6 synthemes at pairing 2")?;
    }
    Ok(())
}

fn c7(cx: &Context) -> Outcome {
    let g = cx.gamma();
    let grp = graph::automorphism_group(g);
    ensure(grp.order == 1440, &format!("|Aut| = {} not 1440", grp.order))?;
    let elements: BTreeSet<&Vec<usize>> = grp.elements.iter().collect();
    let s6: BTreeSet<Vec<usize>> = PermS6::all().iter().map(sylvester::s6_action).collect();
    ensure(s6.len() == 720, "720 distinct S6 images")?;
    ensure(s6.iter().all(|p| elements.contains(p) && g.is_isomorphism(g, p)), "S6 inside Aut")?;
    let outer = sylvester::outer_automorphism().map_err(err)?;
    ensure(g.is_isomorphism(g, &outer) && !s6.contains(&outer), "outer automorphism outside S6")?;
    ensure(graph::compose(&outer, &outer)[..30].iter().enumerate().all(|(i, &j)| i == j), "outer involutive on duads and synthemes")
}

fn c8(cx: &Context) -> Outcome {
    let g = cx.gamma();
    let (_, diagrams, census) = vinberg::maximal_parabolics(g, 8).map_err(err)?;
    let want: BTreeSet<String> =
        ["~A2^4", "~A4^2", "~A5+~A2+~A1", "~A3^2+~A1^2"].iter().map(|s| s.to_string()).collect();
    let have: BTreeSet<String> = census.maximal_by_type.keys().cloned().collect();
    ensure(have == want, &format!("rank-8 types {have:?}"))?;
    ensure(diagrams.iter().all(|d| vinberg::diagram_is_consistent(g, d)), "diagrams are orthogonal unions")?;
    for ex in report::fibration_examples(g, &diagrams).map_err(err)? {
        ensure(ex.found, &format!("example {} not found", ex.type_name))?;
        ensure(ex.ok(), &format!("example {} 2-section degrees {:?}", ex.type_name, ex.degrees))?;
    }
    Ok(())
}

fn c9(cx: &Context) -> Outcome {
    let g = cx.gamma();
    ensure(g.gram().rank() == 10, "span rank 10")?;
    ensure(g.max_pairing() <= 2, "no pairing >= 3")?;
    let cert = vinberg::vinberg_check(g, 10).map_err(err)?;
    let connected = vinberg::enumerate_connected_parabolics(g, 8).map_err(err)?;
    ensure(cert.entries.len() == connected.len(), "certificate covers every connected parabolic")?;
    for e in &cert.entries {
        let d = e.completion.as_ref().ok_or("a parabolic has no completion")?;
        ensure(d.total_rank == 8 && d.components.contains(&e.component), "completion has rank 8 and contains it")?;
        ensure(vinberg::diagram_is_consistent(g, d), "completion is an orthogonal union")?;
    }
    ensure(cert.verdict, "verdict")
}

fn c10(cx: &Context) -> Outcome {
    for c in char2::check_two_closed(AValue::Symbolic).map_err(err)? {
        ensure(c.holds, &format!("symbolic {}", c.name))?;
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    let mut n = 0;
    while n < 20 {
        let a = FieldElement::new(BinaryField::Gf64, rng.gen_range(0..64));
        if a.pow(3).is_one() {
            continue;
        }
        n += 1;
        for c in char2::check_two_closed(AValue::Value(a)).map_err(err)? {
            ensure(c.holds, &format!("{} at a = {a}", c.name))?;
        }
    }
    for c in char2::blowup_chart_check(AValue::Symbolic).map_err(err)? {
        ensure(c.holds, &format!("blow-up chart {}", c.name))?;
    }
    let literal = char2::weierstrass_transform_check(CoordinateChange::Literal).map_err(err)?;
    eprintln!(
        "    printed coordinate change: remainder {} terms (exact division: {})",
        literal.remainder_terms, literal.remainder_is_zero
    );
    let w = char2::weierstrass_transform_check(CoordinateChange::Reciprocal).map_err(err)?;
    ensure(w.remainder_is_zero && w.quotient_free_of_y && w.identity_holds, "substitution divides exactly")?;
    ensure(w.passed(), "Weierstrass check")?;
    let d = char2::discriminant_report(&WeierstrassModel::from_coordinate_change()).map_err(err)?;
    ensure(d.matches_expected, "Delta = t^6 (t^3+1)^6")?;
    ensure(d.total_order == 24, "sum of orders 24")?;
    ensure(d.zeros.len() == 4 && d.zeros.iter().all(|z| z.ord_delta == 6), "ord 6 at 4 zeros")?;
    let ns = cx.ns().map_err(err)?;
    let e = char2::euler_for_config(ns, cx.config().map_err(err)?);
    ensure(e.d_squared == -24 && e.forced_degree == 0, "deg <D> = 0 from D^2 = -24")
}

fn main() {
    let cx = Context::new(0);
    type Crit = (u8, &'static str, u64, fn(&Context) -> Outcome);
    let criteria: [Crit; 10] = [
        (1, "plane census", 1, c1),
        (2, "168 general sextuples", 5, c2),
        (3, "NS(Y) model", 10, c3),
        (4, "contraction configs and Cremona vectors", 60, c4),
        (5, "Num(X) unimodular", 5, c5),
        (6, "lattice graph isomorphic to combinatorial graph", 10, c6),
        (7, "automorphism group of order 1440", 30, c7),
        (8, "rank-8 parabolic types and examples", 600, c8),
        (9, "finite-index certificate", 600, c9),
        (10, "symbolic characteristic-2 suite", 10, c10),
    ];
    let mut failures = Vec::new();
    for (n, name, limit, f) in criteria {
        let start = Instant::now();
        let res = panic::catch_unwind(AssertUnwindSafe(|| f(&cx))).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let res = res.and_then(|()| {
            ensure(took <= Duration::from_secs(limit), &format!("took {took:?}, limit {limit}s"))
        });
        match &res {
            Ok(()) => println!("criterion {n:>2} PASS  {name} ({} ms)", took.as_millis()),
            Err(e) => {
                println!("criterion {n:>2} FAIL  {name}: {e}");
                failures.push(n);
            }
        }
    }
    if !failures.is_empty() {
        println!("failed criteria: {failures:?}");
        std::process::exit(1);
    }
    println!("all 10 criteria passed");
}
