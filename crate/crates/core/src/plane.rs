//! The projective plane PG(2,4), the supersingular cubic
//! `x1^2 x2 + x1 x2^2 = x0^3`, its nine 3-torsion points and the
//! tangent/transversal split of the 21 rational lines.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{BinaryField, FieldElement};
use crate::poly::{PolyRing, SparsePoly};

const F4: BinaryField = BinaryField::Gf4;

fn f4(bits: u8) -> FieldElement {
    FieldElement::new(F4, bits)
}

fn normalize(c: [FieldElement; 3]) -> Option<[FieldElement; 3]> {
    let lead = c.iter().find(|x| !x.is_zero())?;
    let inv = lead.inverse().expect("nonzero");
    Some(c.map(|x| (x * inv).restrict(F4).expect("coordinates lie in GF(4)")))
}

/// A point of PG(2,4), first nonzero coordinate scaled to one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [FieldElement; 3],
}

impl ProjPoint {
    pub fn new(coords: [FieldElement; 3]) -> Result<Self> {
        normalize(coords)
            .map(|coords| ProjPoint { coords })
            .ok_or_else(|| Error::Precondition("all homogeneous coordinates are zero".into()))
    }

    pub fn coords(&self) -> [FieldElement; 3] {
        self.coords
    }
}

/// A line of PG(2,4), stored by its dual coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine {
    dual: [FieldElement; 3],
}

impl ProjLine {
    pub fn new(dual: [FieldElement; 3]) -> Result<Self> {
        normalize(dual)
            .map(|dual| ProjLine { dual })
            .ok_or_else(|| Error::Precondition("all dual coordinates are zero".into()))
    }

    pub fn dual_coords(&self) -> [FieldElement; 3] {
        self.dual
    }

    /// The line through two distinct points (cross product).
    pub fn through(p: &ProjPoint, q: &ProjPoint) -> Result<Self> {
        let (a, b) = (p.coords, q.coords);
        ProjLine::new([
            a[1] * b[2] + a[2] * b[1],
            a[2] * b[0] + a[0] * b[2],
            a[0] * b[1] + a[1] * b[0],
        ])
    }
}

pub fn incidence(p: &ProjPoint, l: &ProjLine) -> bool {
    (0..3)
        .map(|i| p.coords[i] * l.dual[i])
        .fold(FieldElement::zero(F4), |a, b| a + b)
        .is_zero()
}

fn fmt_triple(c: &[FieldElement; 3], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "({},{},{})", c[0], c[1], c[2])
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(&self.coords, f)
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{self}")
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(&self.dual, f)
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{self}")
    }
}

fn all_normalized() -> Vec<[FieldElement; 3]> {
    let mut out = Vec::new();
    for a in F4.elements() {
        for b in F4.elements() {
            for c in F4.elements() {
                if let Some(n) = normalize([a, b, c]) {
                    if n == [a, b, c] {
                        out.push(n);
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// The 21 rational points, sorted by coordinates under `0 < 1 < w < w^2`.
pub fn enumerate_points() -> Vec<ProjPoint> {
    all_normalized()
        .into_iter()
        .map(|coords| ProjPoint { coords })
        .collect()
}

/// The 21 rational lines in the same order on dual coordinates.
pub fn enumerate_lines() -> Vec<ProjLine> {
    all_normalized()
        .into_iter()
        .map(|dual| ProjLine { dual })
        .collect()
}

/// Evaluates `x1^2 x2 + x1 x2^2 + x0^3`.
pub fn cubic_value(c: &[FieldElement; 3]) -> FieldElement {
    c[1].square() * c[2] + c[1] * c[2].square() + c[0].pow(3)
}

/// The torsion points `Q_0, ..., Q_8` as listed with the curve, `Q_0` the origin.
pub fn torsion_points() -> Result<Vec<ProjPoint>> {
    let w = f4(2);
    let w2 = f4(3);
    let (o, l) = (f4(0), f4(1));
    let listed = [
        [o, l, o],
        [o, o, l],
        [o, l, l],
        [l, w, l],
        [w, w, l],
        [w2, w, l],
        [l, w2, l],
        [w, w2, l],
        [w2, w2, l],
    ];
    listed
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if !cubic_value(c).is_zero() {
                return Err(Error::Invariant(format!("Q{i} = {c:?} is not on the cubic")));
            }
            ProjPoint::new(*c)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineType {
    TripleTangent { at: ProjPoint },
    Transversal { through: [ProjPoint; 3] },
}

fn cubic_poly(x: &[SparsePoly; 3]) -> SparsePoly {
    &(&(&x[1].pow(2) * &x[2]) + &(&x[1] * &x[2].pow(2))) + &x[0].pow(3)
}

/// Roots in GF(64) of a univariate polynomial in `s`, with multiplicities.
fn roots_with_multiplicity(g: &SparsePoly) -> Vec<(FieldElement, u32)> {
    let ring = g.ring().clone();
    let s = ring.var("s");
    let mut out = Vec::new();
    for r in BinaryField::Gf64.elements() {
        let lin = &s + &ring.constant(r);
        let mut h = g.clone();
        let mut m = 0;
        while !h.is_zero() {
            match h.divide_exact(&lin).expect("nonzero divisor") {
                Some(q) => {
                    h = q;
                    m += 1;
                }
                None => break,
            }
        }
        if m > 0 {
            out.push((r, m));
        }
    }
    out
}

/// Classifies a rational line by restricting the cubic to it and factoring
/// the resulting binary cubic over GF(64).
pub fn line_type(l: &ProjLine) -> Result<LineType> {
    let pts: Vec<ProjPoint> = enumerate_points()
        .into_iter()
        .filter(|p| incidence(p, l))
        .collect();
    let (p, q) = (pts[0], pts[1]);
    let ring = PolyRing::new(&["s", "u"]);
    let (s, u) = (ring.var("s"), ring.var("u"));
    let x: [SparsePoly; 3] = std::array::from_fn(|i| {
        &(&s * &ring.constant(p.coords[i])) + &(&u * &ring.constant(q.coords[i]))
    });
    let f = cubic_poly(&x);
    if f.is_zero() {
        return Err(Error::Invariant(format!("line {l} is a component of the cubic")));
    }
    // dehomogenize at u = 1; the point u = 0 is p
    let uni_ring = PolyRing::new(&["s"]);
    let g = f
        .specialize(&[("u", FieldElement::one(BinaryField::Gf2))])
        .change_ring(&uni_ring)?;
    let mut roots: Vec<(ProjPoint, u32)> = Vec::new();
    let at_p = 3 - g.total_degree().unwrap_or(0);
    if at_p > 0 {
        roots.push((p, at_p));
    }
    for (r, m) in roots_with_multiplicity(&g) {
        let Some(r4) = r.restrict(F4) else {
            return Err(Error::Invariant(format!("line {l} meets the cubic off GF(4)")));
        };
        let pt = ProjPoint::new(std::array::from_fn(|i| r4 * p.coords[i] + q.coords[i]))?;
        roots.push((pt, m));
    }
    let total: u32 = roots.iter().map(|r| r.1).sum();
    if total != 3 {
        return Err(Error::Invariant(format!("line {l}: intersection multiplicity {total} != 3")));
    }
    let torsion = torsion_points()?;
    for (pt, _) in &roots {
        if !torsion.contains(pt) {
            return Err(Error::Invariant(format!("line {l} meets the cubic at non-torsion {pt}")));
        }
    }
    match roots.as_slice() {
        [(at, 3)] => Ok(LineType::TripleTangent { at: *at }),
        [(a, 1), (b, 1), (c, 1)] => {
            let mut through = [*a, *b, *c];
            through.sort();
            Ok(LineType::Transversal { through })
        }
        other => Err(Error::Invariant(format!(
            "line {l}: unexpected intersection pattern {other:?}"
        ))),
    }
}

/// Six distinct rational points (indices into [`enumerate_points`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Sextuple {
    pub points: [usize; 6],
    pub general: bool,
}

/// Cached points, lines and incidence of PG(2,4).
#[derive(Clone, Debug)]
pub struct Plane {
    pub points: Vec<ProjPoint>,
    pub lines: Vec<ProjLine>,
    /// `incidence[l][p]`
    pub incidence: Vec<Vec<bool>>,
    line_masks: Vec<u32>,
    point_masks: Vec<u32>,
}

impl Default for Plane {
    fn default() -> Self {
        Self::new()
    }
}

impl Plane {
    pub fn new() -> Self {
        let points = enumerate_points();
        let lines = enumerate_lines();
        let incidence: Vec<Vec<bool>> = lines
            .iter()
            .map(|l| points.iter().map(|p| self::incidence(p, l)).collect())
            .collect();
        let line_masks = incidence
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &b)| b).fold(0u32, |m, (i, _)| m | 1 << i))
            .collect();
        let point_masks = (0..points.len())
            .map(|p| (0..lines.len()).filter(|&l| incidence[l][p]).fold(0u32, |m, l| m | 1 << l))
            .collect();
        Plane {
            points,
            lines,
            incidence,
            line_masks,
            point_masks,
        }
    }

    pub fn point_index(&self, p: &ProjPoint) -> usize {
        self.points.binary_search(p).expect("rational point")
    }

    pub fn line_index(&self, l: &ProjLine) -> usize {
        self.lines.binary_search(l).expect("rational line")
    }

    /// Bitmask of the points on line `l`.
    pub fn points_on(&self, l: usize) -> u32 {
        self.line_masks[l]
    }

    /// Bitmask of the lines through point `p`.
    pub fn lines_through(&self, p: usize) -> u32 {
        self.point_masks[p]
    }

    pub fn is_general(&self, pts: &[usize]) -> bool {
        let mask = pts.iter().fold(0u32, |m, &p| m | 1 << p);
        self.line_masks.iter().all(|l| (l & mask).count_ones() <= 2)
    }

    /// All general six-point sets in lexicographic order of point indices.
    pub fn general_sextuples(&self) -> Vec<Sextuple> {
        let n = self.points.len();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(6);
        self.extend_general(0, n, &mut cur, &mut out);
        out
    }

    fn extend_general(&self, start: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Sextuple>) {
        if cur.len() == 6 {
            out.push(Sextuple {
                points: cur.as_slice().try_into().unwrap(),
                general: true,
            });
            return;
        }
        for p in start..n {
            cur.push(p);
            if self.is_general(cur) {
                self.extend_general(p + 1, n, cur, out);
            }
            cur.pop();
        }
    }

    pub fn line_types(&self) -> Result<Vec<LineType>> {
        self.lines.iter().map(line_type).collect()
    }

    pub fn export(&self) -> Result<PlaneExport> {
        let torsion = torsion_points()?;
        let types = self.line_types()?;
        Ok(PlaneExport {
            points: self.points.iter().map(|p| p.to_string()).collect(),
            lines: self.lines.iter().map(|l| l.to_string()).collect(),
            incidence: self
                .incidence
                .iter()
                .map(|r| r.iter().map(|&b| b as u8).collect())
                .collect(),
            torsion: torsion.iter().map(|p| self.point_index(p)).collect(),
            line_types: types
                .iter()
                .map(|t| match t {
                    LineType::TripleTangent { at } => format!("tangent@{at}"),
                    LineType::Transversal { through } => format!(
                        "transversal@{},{},{}",
                        through[0], through[1], through[2]
                    ),
                })
                .collect(),
            general_sextuples: self.general_sextuples().into_iter().map(|s| s.points).collect(),
        })
    }
}

/// JSON view of the plane data.
#[derive(Clone, Debug, Serialize)]
pub struct PlaneExport {
    pub points: Vec<String>,
    pub lines: Vec<String>,
    pub incidence: Vec<Vec<u8>>,
    pub torsion: Vec<usize>,
    pub line_types: Vec<String>,
    pub general_sextuples: Vec<[usize; 6]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn collinear(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> bool {
        let (x, y, z) = (a.coords, b.coords, c.coords);
        let det = x[0] * (y[1] * z[2] + y[2] * z[1])
            + x[1] * (y[0] * z[2] + y[2] * z[0])
            + x[2] * (y[0] * z[1] + y[1] * z[0]);
        det.is_zero()
    }

    #[test]
    fn census() {
        let plane = Plane::new();
        assert_eq!(plane.points.len(), 21);
        assert_eq!(plane.lines.len(), 21);
        assert!(plane.points.contains(&ProjPoint::new([f4(0), f4(1), f4(0)]).unwrap()));
        for l in 0..21 {
            assert_eq!(plane.incidence[l].iter().filter(|&&b| b).count(), 5);
            assert_eq!((0..21).filter(|&p| plane.incidence[p][l]).count(), 5);
        }
    }

    #[test]
    fn two_lines_meet_once_two_points_span_once() {
        let plane = Plane::new();
        for a in 0..21 {
            for b in a + 1..21 {
                assert_eq!((plane.points_on(a) & plane.points_on(b)).count_ones(), 1);
                assert_eq!((plane.lines_through(a) & plane.lines_through(b)).count_ones(), 1);
            }
        }
    }

    #[test]
    fn incidence_pairing() {
        let p = ProjPoint::new([f4(0), f4(1), f4(0)]).unwrap();
        let x1 = ProjLine::new([f4(0), f4(1), f4(0)]).unwrap();
        assert!(!incidence(&p, &x1));
    }

    #[test]
    fn torsion_points_on_cubic() {
        let t = torsion_points().unwrap();
        assert_eq!(t.len(), 9);
        let w = FieldElement::omega();
        // Q3 = (1, w, 1): w + w^2 = 1
        assert!((w + w.square()).is_one());
        assert!(cubic_value(&t[3].coords()).is_zero());
        let pts = enumerate_points();
        assert!(t.iter().all(|q| pts.contains(q)));
        let distinct: BTreeSet<_> = t.iter().collect();
        assert_eq!(distinct.len(), 9);
    }

    #[test]
    fn line_x1_is_tangent_at_q1() {
        let l = ProjLine::new([f4(0), f4(1), f4(0)]).unwrap();
        let q1 = ProjPoint::new([f4(0), f4(0), f4(1)]).unwrap();
        assert_eq!(line_type(&l).unwrap(), LineType::TripleTangent { at: q1 });
    }

    #[test]
    fn tangent_transversal_census() {
        let plane = Plane::new();
        let types = plane.line_types().unwrap();
        let tangents: Vec<_> = types
            .iter()
            .filter_map(|t| match t {
                LineType::TripleTangent { at } => Some(*at),
                _ => None,
            })
            .collect();
        assert_eq!(tangents.len(), 9);
        let at: BTreeSet<_> = tangents.iter().collect();
        let torsion: BTreeSet<_> = torsion_points().unwrap().into_iter().collect();
        assert_eq!(at.into_iter().copied().collect::<BTreeSet<_>>(), torsion);
        for t in &types {
            if let LineType::Transversal { through } = t {
                assert!(through[0] != through[1] && through[1] != through[2]);
                assert!(through.iter().all(|p| torsion.contains(p)));
            }
        }
    }

    #[test]
    fn general_sextuples_match_brute_force() {
        let plane = Plane::new();
        let fast: BTreeSet<[usize; 6]> = plane.general_sextuples().into_iter().map(|s| s.points).collect();
        assert_eq!(fast.len(), 168);
        let pts = &plane.points;
        let mut brute = BTreeSet::new();
        let idx: Vec<usize> = (0..21).collect();
        for c in itertools_combinations(&idx, 6) {
            let ok = itertools_combinations(&c, 3)
                .iter()
                .all(|t| !collinear(&pts[t[0]], &pts[t[1]], &pts[t[2]]));
            if ok {
                brute.insert(<[usize; 6]>::try_from(c.as_slice()).unwrap());
            }
        }
        assert_eq!(fast, brute);
    }

    fn itertools_combinations(v: &[usize], k: usize) -> Vec<Vec<usize>> {
        fn go(v: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..v.len() {
                cur.push(v[i]);
                go(v, k, i + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(v, k, 0, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn general_sextuples_invariant_under_collineations() {
        let plane = Plane::new();
        let set: BTreeSet<[usize; 6]> = plane.general_sextuples().into_iter().map(|s| s.points).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        let mut tried = 0;
        while tried < 20 {
            let m: [[FieldElement; 3]; 3] =
                std::array::from_fn(|_| std::array::from_fn(|_| f4(rng.gen_range(0..4))));
            let image = |p: &ProjPoint| -> Option<ProjPoint> {
                let c = p.coords();
                ProjPoint::new(std::array::from_fn(|i| {
                    m[i][0] * c[0] + m[i][1] * c[1] + m[i][2] * c[2]
                }))
                .ok()
            };
            let imgs: Option<Vec<ProjPoint>> = plane.points.iter().map(image).collect();
            let Some(imgs) = imgs else { continue };
            let perm: Vec<usize> = imgs.iter().map(|p| plane.point_index(p)).collect();
            if perm.iter().collect::<BTreeSet<_>>().len() != 21 {
                continue;
            }
            tried += 1;
            for s in &set {
                let mut t: Vec<usize> = s.iter().map(|&p| perm[p]).collect();
                t.sort();
                assert!(set.contains(&<[usize; 6]>::try_from(t.as_slice()).unwrap()));
            }
        }
    }
}
