//! Verification suites, the JSON report and data exports.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::fmt;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::char2::{self, AValue, CoordinateChange, WeierstrassModel};
use crate::error::{Error, Result};
use crate::field::{BinaryField, FieldElement};
use crate::graph::{self, IntersectionGraph};
use crate::intmat::Signature;
use crate::ns::{self, ContractionConfig, NsY, NumX};
use crate::plane::{self, LineType, Plane};
use crate::sylvester::{self, PermS6};
use crate::vinberg;

pub const SCHEMA: &str = "enriqueslab/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Plane,
    Lattice,
    Gamma,
    Vinberg,
    Char2,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }

    pub const NAMES: [&'static str; 6] = ["all", "plane", "lattice", "gamma", "vinberg", "char2"];
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "plane" => Suite::Plane,
            "lattice" => Suite::Lattice,
            "gamma" => Suite::Gamma,
            "vinberg" => Suite::Vinberg,
            "char2" => Suite::Char2,
            _ => return Err(Error::Precondition(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Suite::All, Suite::Plane, Suite::Lattice, Suite::Gamma, Suite::Vinberg, Suite::Char2]
            .iter()
            .position(|s| s == self)
            .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    /// Short name of the mathematical claim, or `"plumbing"`.
    pub claim: String,
    /// Acceptance criterion number this check decides, if any.
    pub criterion: Option<u8>,
    pub status: Status,
    pub witness: Value,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub suite: Suite,
    pub config_index: usize,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.check_id == id)
    }

    pub fn by_criterion(&self, n: u8) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.criterion == Some(n))
    }

    /// Same report with every `elapsed_ms` zeroed.
    pub fn without_timing(&self) -> VerificationReport {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0;
        }
        r
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    pub suite: Suite,
    pub config_index: usize,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { suite: Suite::All, config_index: 0, seed: 0 }
    }
}

/// Shared computations, built on first use.
pub struct Context {
    config_index: usize,
    plane: OnceCell<Plane>,
    ns: OnceCell<NsY>,
    configs: OnceCell<Vec<ContractionConfig>>,
    numx: OnceCell<NumX>,
    gamma: OnceCell<IntersectionGraph>,
    lattice_gamma: OnceCell<IntersectionGraph>,
}

impl Context {
    pub fn new(config_index: usize) -> Self {
        Context {
            config_index,
            plane: OnceCell::new(),
            ns: OnceCell::new(),
            configs: OnceCell::new(),
            numx: OnceCell::new(),
            gamma: OnceCell::new(),
            lattice_gamma: OnceCell::new(),
        }
    }

    fn try_cell<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
        if let Some(v) = cell.get() {
            return Ok(v);
        }
        let v = f()?;
        Ok(cell.get_or_init(|| v))
    }

    pub fn plane(&self) -> &Plane {
        self.plane.get_or_init(Plane::new)
    }

    pub fn ns(&self) -> Result<&NsY> {
        Self::try_cell(&self.ns, ns::build_ns_y)
    }

    pub fn configs(&self) -> Result<&[ContractionConfig]> {
        let ns = self.ns()?;
        Self::try_cell(&self.configs, || ns.find_contraction_configs()).map(|v| v.as_slice())
    }

    pub fn config(&self) -> Result<&ContractionConfig> {
        let cfgs = self.configs()?;
        cfgs.get(self.config_index).ok_or_else(|| {
            Error::Precondition(format!("config index {} out of range 0..{}", self.config_index, cfgs.len()))
        })
    }

    pub fn numx(&self) -> Result<&NumX> {
        let (ns, cfg) = (self.ns()?, self.config()?);
        Self::try_cell(&self.numx, || ns.orthogonal_complement(cfg))
    }

    pub fn gamma(&self) -> &IntersectionGraph {
        self.gamma.get_or_init(sylvester::combinatorial_gamma)
    }

    pub fn lattice_gamma(&self) -> Result<&IntersectionGraph> {
        let (ns, cfg, numx) = (self.ns()?, self.config()?, self.numx()?);
        Self::try_cell(&self.lattice_gamma, || ns.lattice_gamma(numx, cfg))
    }
}

type CheckFn = Box<dyn FnOnce(&Context) -> Result<(bool, Value)>>;

struct Check {
    id: &'static str,
    claim: &'static str,
    criterion: Option<u8>,
    suite: Suite,
    body: CheckFn,
}

fn check(
    id: &'static str,
    claim: &'static str,
    criterion: Option<u8>,
    suite: Suite,
    body: impl FnOnce(&Context) -> Result<(bool, Value)> + 'static,
) -> Check {
    Check { id, claim, criterion, suite, body: Box::new(body) }
}

fn sig_json(s: Signature) -> Value {
    json!([s.plus, s.minus, s.zero])
}

fn checks(seed: u64) -> Vec<Check> {
    vec![
        check("plane.census", "plane-and-cubic-census", Some(1), Suite::Plane, |cx| {
            let p = cx.plane();
            let regular = (0..21).all(|i| p.points_on(i).count_ones() == 5 && p.lines_through(i).count_ones() == 5);
            let torsion = plane::torsion_points()?;
            let on_cubic = torsion.iter().all(|q| plane::cubic_value(&q.coords()).is_zero());
            let types = p.line_types()?;
            let tangents = types.iter().filter(|t| matches!(t, LineType::TripleTangent { .. })).count();
            let transversals = types.iter().filter(|t| matches!(t, LineType::Transversal { .. })).count();
            let ok = p.points.len() == 21
                && p.lines.len() == 21
                && regular
                && torsion.len() == 9
                && on_cubic
                && tangents == 9
                && transversals == 12;
            Ok((ok, json!({
                "points": p.points.len(), "lines": p.lines.len(), "five_regular": regular,
                "torsion_points": torsion.len(), "torsion_on_cubic": on_cubic,
                "triple_tangents": tangents, "transversals": transversals,
            })))
        }),
        check("plane.general_sextuples", "hyperoval-count", Some(2), Suite::Plane, |cx| {
            let p = cx.plane();
            let found: BTreeSet<[usize; 6]> = p.general_sextuples().into_iter().map(|s| s.points).collect();
            let brute = brute_force_general_sextuples(p);
            Ok((found.len() == 168 && found == brute, json!({ "found": found.len(), "brute_force": brute.len(), "agree": found == brute })))
        }),
        check("lattice.ns_y", "ns-of-covering-k3", Some(3), Suite::Lattice, |cx| {
            let ns = cx.ns()?;
            let ell = ns.ell_vector(0);
            let well_defined = (0..21).all(|m| ns.ell_class(m) == ns.ell_class(0));
            let det = ns.gram22.determinant();
            let sig = ns.gram22.exact_signature();
            let ok = ns.radical_basis.len() == 20
                && ns.rank() == 22
                && sig == (Signature { plus: 1, minus: 21, zero: 0 })
                && det.magnitude() == &4u32.into()
                && ns.gram22.is_even()
                && well_defined
                && ns.pair42(&ell, &ell) == 2;
            Ok((ok, json!({
                "radical_rank": ns.radical_basis.len(), "rank": ns.rank(), "signature": sig_json(sig),
                "det": det.to_string(), "even": ns.gram22.is_even(), "ell_well_defined": well_defined,
                "ell_squared": ns.pair42(&ell, &ell),
            })))
        }),
        check("lattice.contraction_configs", "ten-orthogonal-cremona-vectors", Some(4), Suite::Lattice, |cx| {
            let ns = cx.ns()?;
            let cfgs = cx.configs()?;
            let cremona = ns.cremona_vectors();
            let mut all_ten = true;
            let mut all_splittings = true;
            for cfg in cfgs {
                all_ten &= cfg.orthogonal_cremona.len() == 10;
                let got: BTreeSet<[usize; 6]> = cfg.orthogonal_cremona.iter().map(|&i| cremona[i].points).collect();
                let want: BTreeSet<[usize; 6]> = ns.triangle_splittings(cfg).into_iter().collect();
                all_splittings &= got == want && want.len() == 10;
            }
            let squares_ok = cremona.iter().all(|c| ns.pair42(&c.vector, &c.vector) == -4);
            let ok = !cfgs.is_empty() && cremona.len() == 168 && squares_ok && all_ten && all_splittings;
            Ok((ok, json!({
                "configs": cfgs.len(), "cremona_vectors": cremona.len(), "cremona_squares_minus_4": squares_ok,
                "ten_orthogonal_each": all_ten, "match_triangle_splittings": all_splittings,
            })))
        }),
        check("lattice.num_x", "enriques-lattice-unimodular", Some(5), Suite::Lattice, |cx| {
            let numx = cx.numx()?;
            let sig = numx.gram10.exact_signature();
            let det = numx.gram10.determinant();
            let ok = numx.gram_complement.all_entries_even()
                && numx.gram10.is_even()
                && det == (-1).into()
                && sig == (Signature { plus: 1, minus: 9, zero: 0 });
            Ok((ok, json!({
                "config_index": cx.config_index, "complement_all_even": numx.gram_complement.all_entries_even(),
                "complement_det": numx.gram_complement.determinant().to_string(),
                "halved_even": numx.gram10.is_even(), "halved_det": det.to_string(), "signature": sig_json(sig),
            })))
        }),
        check("gamma.lattice_isomorphism", "forty-classes-match-combinatorics", Some(6), Suite::Gamma, |cx| {
            let lg = cx.lattice_gamma()?;
            let g = cx.gamma();
            let iso = graph::find_isomorphism(lg, g);
            let tv: Vec<usize> = (30..40).collect();
            let complete = tv.iter().all(|&i| tv.iter().all(|&j| i == j || g.pairing(i, j) == 2));
            let six_six = tv.iter().all(|&i| {
                (0..15).filter(|&j| g.pairing(i, j) == 2).count() == 6 && (15..30).filter(|&j| g.pairing(i, j) == 2).count() == 6
            });
            let lat_tv: Vec<usize> = (30..40).collect();
            let lat_complete = lat_tv.iter().all(|&i| lat_tv.iter().all(|&j| i == j || lg.pairing(i, j) == 2));
            let ok = iso.is_some() && complete && six_six && lat_complete;
            let mapping: Vec<(String, String)> = iso
                .iter()
                .flat_map(|p| p.iter().enumerate().map(|(i, &j)| (lg.label(i).to_string(), g.label(j).to_string())))
                .collect();
            Ok((ok, json!({
                "isomorphic": iso.is_some(), "tenvector_block_complete": complete && lat_complete,
                "tenvector_meets_six_and_six": six_six, "isomorphism": mapping,
            })))
        }),
        check("gamma.automorphisms", "automorphisms-of-gamma", Some(7), Suite::Gamma, |cx| {
            let g = cx.gamma();
            let grp = graph::automorphism_group(g);
            let elements: BTreeSet<&Vec<usize>> = grp.elements.iter().collect();
            let s6: Vec<Vec<usize>> = PermS6::all().iter().map(sylvester::s6_action).collect();
            let s6_distinct = s6.iter().collect::<BTreeSet<_>>().len();
            let s6_inside = s6.iter().all(|p| elements.contains(p));
            let outer = sylvester::outer_automorphism()?;
            let outer_inside = elements.contains(&outer);
            let involution = (0..30).all(|v| outer[outer[v]] == v);
            let orbits_all = graph::orbit_census(&grp.generators, g.len());
            let orbits_s6 = graph::orbit_census(&s6, g.len());
            let ok = grp.order == 1440 && s6_distinct == 720 && s6_inside && outer_inside && involution;
            Ok((ok, json!({
                "order": grp.order, "generators": grp.generators.len(), "s6_images": s6_distinct,
                "s6_contained": s6_inside, "outer_contained": outer_inside, "outer_involutive_on_30": involution,
                "orbits": orbits_all, "orbits_under_s6": orbits_s6,
            })))
        }),
        check("gamma.sylvester_labels", "curves-as-duads-and-synthemes", None, Suite::Gamma, |cx| {
            let (ns, cfg, numx) = (cx.ns()?, cx.config()?, cx.numx()?);
            let (classes, gram) = ns.gram_of_40(numx, cfg)?;
            let labels = ns.sylvester_labels(cfg, &classes)?;
            let exact = (0..40).all(|i| {
                (0..40).all(|j| i == j || gram.get(i, j) == &sylvester::gamma_pairing(&labels[i], &labels[j]).into())
            });
            Ok((exact, json!({ "labels": labels.iter().map(|l| l.label()).collect::<Vec<_>>(), "pairings_reproduced": exact })))
        }),
        check("vinberg.maximal_parabolics", "four-maximal-parabolic-types", Some(8), Suite::Vinberg, |cx| {
            let g = cx.gamma();
            let (_, diagrams, census) = vinberg::maximal_parabolics(g, 8)?;
            let want: BTreeSet<&str> = ["~A2^4", "~A4^2", "~A5+~A2+~A1", "~A3^2+~A1^2"].into_iter().collect();
            let have: BTreeSet<&str> = census.maximal_by_type.keys().map(|s| s.as_str()).collect();
            let examples = fibration_examples(g, &diagrams)?;
            let examples_ok = examples.iter().all(FibrationExample::ok);
            Ok((have == want && examples_ok, json!({ "census": census, "examples": examples })))
        }),
        check("vinberg.finite_index", "reflection-group-finite-index", Some(9), Suite::Vinberg, |cx| {
            let g = cx.gamma();
            let rank = g.gram().rank();
            let max_pairing = g.max_pairing();
            let cert = vinberg::vinberg_check(g, 10)?;
            let completed = cert.entries.iter().filter(|e| e.completion.is_some()).count();
            Ok((cert.verdict && rank == 10 && max_pairing <= 2, json!({
                "span_rank": rank, "max_pairing": max_pairing, "connected_parabolics": cert.entries.len(),
                "completed": completed, "verdict": cert.verdict,
            })))
        }),
        check("vinberg.without_ten_vectors", "plumbing", None, Suite::Vinberg, |cx| {
            let g = cx.gamma();
            let sub = g.induced(&(0..30).collect::<Vec<_>>());
            let cert = vinberg::vinberg_check(&sub, 10)?;
            let missing = cert.entries.iter().filter(|e| e.completion.is_none()).count();
            Ok((!cert.verdict, json!({ "verdict": cert.verdict, "uncompleted": missing, "census": cert.census })))
        }),
        check("char2.symbolic_suite", "vector-field-and-weierstrass-model", Some(10), Suite::Char2, move |cx| {
            char2_suite(cx, seed)
        }),
    ]
}

fn brute_force_general_sextuples(p: &Plane) -> BTreeSet<[usize; 6]> {
    // collinearity by a vanishing 3x3 determinant
    let det = |a: usize, b: usize, c: usize| {
        let (x, y, z) = (p.points[a].coords(), p.points[b].coords(), p.points[c].coords());
        x[0] * (y[1] * z[2] + y[2] * z[1]) + x[1] * (y[0] * z[2] + y[2] * z[0]) + x[2] * (y[0] * z[1] + y[1] * z[0])
    };
    let mut collinear = vec![vec![vec![false; 21]; 21]; 21];
    for a in 0..21 {
        for b in 0..21 {
            for c in 0..21 {
                collinear[a][b][c] = det(a, b, c).is_zero();
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut idx = [0usize, 1, 2, 3, 4, 5];
    loop {
        let ok = (0..6).all(|i| (i + 1..6).all(|j| (j + 1..6).all(|k| !collinear[idx[i]][idx[j]][idx[k]])));
        if ok {
            out.insert(idx);
        }
        let mut i = 6;
        while i > 0 && idx[i - 1] == 21 - 6 + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..6 {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FibrationExample {
    pub type_name: String,
    pub found: bool,
    pub two_section: String,
    pub expected_degrees: Vec<i64>,
    pub degrees: Vec<i64>,
}

impl FibrationExample {
    pub fn ok(&self) -> bool {
        self.found && self.degrees == self.expected_degrees
    }
}

type ExampleData = (&'static str, &'static [&'static [&'static str]], &'static str, &'static [i64]);

/// Four rank-8 diagrams with a 2-section and its degree against each
/// component kernel (1 for a half-fibre).
pub const FIBRATION_EXAMPLES: [ExampleData; 4] = [
    (
        "~A2^4",
        &[
            &["12", "23", "13"],
            &["45", "46", "56"],
            &["(14,25,36)", "(15,26,34)", "(16,24,35)"],
            &["(14,26,35)", "(15,24,36)", "(16,25,34)"],
        ],
        "(12,35,46)",
        &[2, 2, 2, 2],
    ),
    (
        "~A4^2",
        &[
            &["12", "23", "34", "45", "15"],
            &["(13,25,46)", "(14,26,35)", "(13,24,56)", "(14,25,36)", "(16,24,35)"],
        ],
        "46",
        &[2, 2],
    ),
    (
        "~A5+~A2+~A1",
        &[
            &["(14,25,36)", "(15,26,34)", "(14,23,56)", "(15,24,36)", "(14,26,35)", "(15,23,46)"],
            &["12", "13", "16"],
            &["45", "(145,236)"],
        ],
        "56",
        &[2, 1, 1],
    ),
    (
        "~A3^2+~A1^2",
        &[
            &["24", "25", "34", "35"],
            &["(12,36,45)", "(14,23,56)", "(13,26,45)", "(15,23,46)"],
            &["16", "(16,23,45)"],
            &["(123,456)", "(145,236)"],
        ],
        "13",
        &[2, 2, 1, 2],
    ),
];

pub fn fibration_examples(
    g: &IntersectionGraph,
    diagrams: &[vinberg::ParabolicDiagram],
) -> Result<Vec<FibrationExample>> {
    let index = |l: &str| g.index_of(l).ok_or_else(|| Error::Precondition(format!("no vertex {l}")));
    let mut out = Vec::new();
    for (name, comps, two_section, expected) in FIBRATION_EXAMPLES {
        let mut want: Vec<Vec<usize>> = Vec::new();
        for c in comps {
            let mut v: Vec<usize> = c.iter().map(|l| index(l)).collect::<Result<_>>()?;
            v.sort_unstable();
            want.push(v);
        }
        let s = index(two_section)?;
        let diagram = diagrams.iter().find(|d| {
            let mut have: Vec<Vec<usize>> = d.components.iter().map(|c| c.vertices.clone()).collect();
            let mut w = want.clone();
            have.sort();
            w.sort();
            have == w && d.type_name() == name
        });
        let degrees = match diagram {
            Some(d) => want
                .iter()
                .filter_map(|v| d.components.iter().find(|c| &c.vertices == v))
                .map(|c| vinberg::fiber_degree(g, c, s))
                .collect(),
            None => Vec::new(),
        };
        out.push(FibrationExample {
            type_name: name.to_string(),
            found: diagram.is_some(),
            two_section: two_section.to_string(),
            expected_degrees: expected.to_vec(),
            degrees,
        });
    }
    Ok(out)
}

fn char2_suite(cx: &Context, seed: u64) -> Result<(bool, Value)> {
    let symbolic = char2::check_two_closed(AValue::Symbolic)?;
    let zero = char2::check_two_closed(AValue::Value(FieldElement::zero(BinaryField::Gf2)))?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut sampled = Vec::new();
    while sampled.len() < 20 {
        let a = FieldElement::new(BinaryField::Gf64, rng.gen_range(0..64));
        if !a.pow(3).is_one() {
            sampled.push(a);
        }
    }
    let mut sweep_ok = true;
    for &a in &sampled {
        sweep_ok &= char2::check_two_closed(AValue::Value(a))?.iter().all(|c| c.holds);
        sweep_ok &= char2::specialization_commutes(a)?;
    }
    let chart = char2::blowup_chart_check(AValue::Symbolic)?;
    let chart_zero = char2::blowup_chart_check(AValue::Value(FieldElement::zero(BinaryField::Gf2)))?;
    let literal = char2::weierstrass_transform_check(CoordinateChange::Literal)?;
    let reciprocal = char2::weierstrass_transform_check(CoordinateChange::Reciprocal)?;
    let disc = char2::discriminant_report(&WeierstrassModel::from_coordinate_change())?;
    let disc_ok = disc.matches_expected
        && disc.total_order == 24
        && disc.zeros.len() == 4
        && disc.zeros.iter().all(|z| z.ord_delta == 6 && z.valuation_j == -6 && z.suggests_i_n);
    let (ns, cfg) = (cx.ns()?, cx.config()?);
    let euler = char2::euler_for_config(ns, cfg);
    let euler11 = char2::euler_formula_check(ns, &cfg.curve_ids[..11]);
    let euler_ok = euler.d_squared == -24 && euler.forced_degree == 0 && euler11.forced_degree == 2;
    let ok = symbolic.iter().all(|c| c.holds)
        && zero.iter().all(|c| c.holds)
        && sweep_ok
        && chart.iter().all(|c| c.holds)
        && chart_zero.iter().all(|c| c.holds)
        && reciprocal.passed()
        && disc_ok
        && euler_ok;
    Ok((ok, json!({
        "two_closed_symbolic": symbolic,
        "two_closed_a_zero": zero,
        "specializations": sampled.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        "specializations_ok": sweep_ok,
        "blowup_chart": chart,
        "blowup_chart_a_zero": chart_zero,
        "weierstrass_literal": literal,
        "weierstrass_reciprocal": reciprocal,
        "discriminant": disc,
        "euler": euler,
        "euler_eleven_curves": euler11,
    })))
}

fn panic_message(e: &(dyn std::any::Any + Send)) -> String {
    e.downcast_ref::<&str>()
        .map(|s| s.to_string())
        .or_else(|| e.downcast_ref::<String>().cloned())
        .unwrap_or_else(|| "panic".to_string())
}

/// Runs the suite; failures and errors are recorded, never propagated.
pub fn run(opts: &RunOptions) -> VerificationReport {
    let cx = Context::new(opts.config_index);
    let mut records = Vec::new();
    for c in checks(opts.seed) {
        if !opts.suite.includes(c.suite) {
            continue;
        }
        let start = Instant::now();
        let body = c.body;
        let outcome = panic::catch_unwind(AssertUnwindSafe(|| body(&cx)));
        let (status, witness) = match outcome {
            Ok(Ok((true, w))) => (Status::Pass, w),
            Ok(Ok((false, w))) => (Status::Fail, w),
            Ok(Err(e)) => (Status::Fail, json!({ "error": e.to_string() })),
            Err(p) => (Status::Fail, json!({ "panic": panic_message(&*p) })),
        };
        records.push(CheckRecord {
            check_id: c.id.to_string(),
            claim: c.claim.to_string(),
            criterion: c.criterion,
            status,
            witness,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    let count = |s: Status| records.iter().filter(|r| r.status == s).count();
    VerificationReport {
        schema: SCHEMA.to_string(),
        suite: opts.suite,
        config_index: opts.config_index,
        seed: opts.seed,
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        checks: records,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportKind {
    GammaDot,
    GammaJson,
    LatticeJson,
}

impl FromStr for ExportKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma-dot" => Ok(ExportKind::GammaDot),
            "gamma-json" => Ok(ExportKind::GammaJson),
            "lattice-json" => Ok(ExportKind::LatticeJson),
            _ => Err(Error::Precondition(format!("unknown export {s:?}"))),
        }
    }
}

pub fn export_string(kind: ExportKind, config_index: usize) -> Result<String> {
    let cx = Context::new(config_index);
    match kind {
        ExportKind::GammaDot => Ok(cx.gamma().to_dot()),
        ExportKind::GammaJson => cx.gamma().to_json(),
        ExportKind::LatticeJson => {
            let e = cx.ns()?.export(cx.numx()?, cx.config()?)?;
            Ok(serde_json::to_string_pretty(&e)?)
        }
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

pub fn export(kind: ExportKind, config_index: usize, path: &Path) -> Result<()> {
    write_file(path, &export_string(kind, config_index)?)
}

pub fn read_lattice_json(path: &Path) -> Result<ns::LatticeExport> {
    let s = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    Ok(serde_json::from_str(&s)?)
}
