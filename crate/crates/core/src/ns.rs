//! Lattice model of NS(Y) built from the 42 nodal curves, the 168 Cremona
//! `(-4)`-vectors, the 12-curve contraction configurations and the Num(X)
//! model on the orthogonal complement with halved pairing.
//!
//! Curve ids: `0..21` are the pullbacks of the rational lines (family A, in
//! [`Plane::lines`] order), `21..42` the exceptional curves over the rational
//! points (family B, in [`Plane::points`] order).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::{self, column_reduce, IntMatrix, IntegerSymMatrix, Signature};
use crate::graph::IntersectionGraph;
use crate::plane::Plane;
use crate::sylvester::{Duad, GammaVertex, Syntheme, TenVector};

pub const NUM_CURVES: usize = 42;
const HALF: usize = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Pullback of a rational line.
    A,
    /// Exceptional curve over a rational point.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    pub id: usize,
    pub family: Family,
    /// Line index for family A, point index for family B.
    pub plane_object: usize,
}

impl CurveClass {
    pub fn line(l: usize) -> Self {
        CurveClass { id: l, family: Family::A, plane_object: l }
    }

    pub fn point(p: usize) -> Self {
        CurveClass { id: HALF + p, family: Family::B, plane_object: p }
    }

    pub fn from_id(id: usize) -> Self {
        assert!(id < NUM_CURVES);
        if id < HALF {
            Self::line(id)
        } else {
            Self::point(id - HALF)
        }
    }
}

pub type Vec42 = [i64; NUM_CURVES];

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// NS(Y) as `Z^42` modulo the radical of the configuration form.
#[derive(Clone, Debug)]
pub struct NsY {
    pub plane: Plane,
    pub gram42: IntegerSymMatrix,
    gram42_small: Vec<Vec<i64>>,
    /// Hermite-normal-form basis of the radical.
    pub radical_basis: Vec<Vec<BigInt>>,
    /// Lifts in `Z^42` of the chosen quotient basis.
    pub quotient_basis: Vec<Vec<BigInt>>,
    /// `projection * v` gives quotient coordinates of `v`.
    projection: IntMatrix,
    pub gram22: IntegerSymMatrix,
}

/// The configuration form on the 42 curves.
pub fn configuration_gram(plane: &Plane) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; NUM_CURVES]; NUM_CURVES];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for l in 0..HALF {
        for p in 0..HALF {
            if plane.incidence[l][p] {
                g[l][HALF + p] = 1;
                g[HALF + p][l] = 1;
            }
        }
    }
    g
}

pub fn build_ns_y() -> Result<NsY> {
    let plane = Plane::new();
    let small = configuration_gram(&plane);
    let gram42 = IntegerSymMatrix::from_rows(&small)?;
    let red = column_reduce(gram42.matrix());
    let rank = red.rank;
    let radical_basis = intmat::hermite_normal_form(&red.kernel_columns());
    let quotient_basis: Vec<Vec<BigInt>> = (0..rank).map(|j| red.u.column(j)).collect();
    let projection = IntMatrix::from_rows(&(0..rank).map(|i| red.u_inv.row(i)).collect::<Vec<_>>());
    let gram22 = gram42.congruent(&quotient_basis);
    let ns = NsY {
        plane,
        gram42,
        gram42_small: small,
        radical_basis,
        quotient_basis,
        projection,
        gram22,
    };
    ns.verify()?;
    Ok(ns)
}

impl NsY {
    fn verify(&self) -> Result<()> {
        if self.radical_basis.len() != 20 || self.gram22.dim() != 22 {
            return Err(Error::Invariant(format!(
                "radical rank {} / quotient rank {}",
                self.radical_basis.len(),
                self.gram22.dim()
            )));
        }
        let sig = self.gram22.exact_signature();
        if sig != (Signature { plus: 1, minus: 21, zero: 0 }) {
            return Err(Error::Invariant(format!("NS(Y) signature {sig}")));
        }
        if self.gram22.determinant().abs() != BigInt::from(4) {
            return Err(Error::Invariant("|det NS(Y)| != 4".into()));
        }
        if !self.gram22.is_even() {
            return Err(Error::Invariant("NS(Y) is not even".into()));
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.gram22.dim()
    }

    /// Pairing of two `Z^42` vectors (well defined on the quotient).
    pub fn pair42(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &a) in u.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = &self.gram42_small[i];
            for (j, &b) in v.iter().enumerate() {
                if b != 0 {
                    s += a * row[j] * b;
                }
            }
        }
        s
    }

    pub fn in_radical(&self, v: &[i64]) -> bool {
        self.gram42_small
            .iter()
            .all(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() == 0)
    }

    /// Quotient coordinates.
    pub fn quotient(&self, v: &[i64]) -> Vec<BigInt> {
        self.projection.mul_vec(&to_big(v))
    }

    pub fn unit(&self, id: usize) -> Vec42 {
        let mut v = [0; NUM_CURVES];
        v[id] = 1;
        v
    }

    /// `2 A_m + sum of the exceptional curves over the points of m`, in `Z^42`.
    pub fn ell_vector(&self, m: usize) -> Vec42 {
        let mut v = [0; NUM_CURVES];
        v[m] = 2;
        for p in 0..HALF {
            if self.plane.incidence[m][p] {
                v[HALF + p] = 1;
            }
        }
        v
    }

    /// The class of a line pullback in quotient coordinates.
    pub fn ell_class(&self, m: usize) -> Vec<BigInt> {
        self.quotient(&self.ell_vector(m))
    }

    pub fn cremona_vectors(&self) -> Vec<CremonaVector> {
        let ell = self.ell_vector(0);
        self.plane
            .general_sextuples()
            .into_iter()
            .map(|s| {
                let mut v = ell.map(|x| 2 * x);
                for &p in &s.points {
                    v[HALF + p] -= 1;
                }
                CremonaVector { points: s.points, vector: v }
            })
            .collect()
    }

    /// All contraction configurations, searching 6-line sets with no three
    /// concurrent lines first.
    pub fn find_contraction_configs(&self) -> Result<Vec<ContractionConfig>> {
        let cremona = self.cremona_vectors();
        let mut out = Vec::new();
        for lines in self.line_sets_no_three_concurrent() {
            for points in self.compatible_point_sets(&lines) {
                if let Some(cfg) = self.make_config(&lines, &points, &cremona) {
                    out.push(cfg);
                }
            }
        }
        out.sort_by(|a, b| (a.lines, a.points).cmp(&(b.lines, b.points)));
        if out.is_empty() {
            return Err(Error::Invariant("no contraction configuration exists".into()));
        }
        Ok(out)
    }

    /// Same search over every 6-line subset, without the concurrency filter.
    pub fn find_contraction_configs_unpruned(&self) -> Vec<ContractionConfig> {
        let cremona = self.cremona_vectors();
        let mut out = Vec::new();
        let mut lines = Vec::with_capacity(6);
        fn rec(
            ns: &NsY,
            start: usize,
            lines: &mut Vec<usize>,
            cremona: &[CremonaVector],
            out: &mut Vec<ContractionConfig>,
        ) {
            if lines.len() == 6 {
                let ls: [usize; 6] = lines.as_slice().try_into().unwrap();
                for points in ns.compatible_point_sets(&ls) {
                    if let Some(cfg) = ns.make_config(&ls, &points, cremona) {
                        out.push(cfg);
                    }
                }
                return;
            }
            for l in start..HALF {
                lines.push(l);
                rec(ns, l + 1, lines, cremona, out);
                lines.pop();
            }
        }
        rec(self, 0, &mut lines, &cremona, &mut out);
        out.sort_by(|a, b| (a.lines, a.points).cmp(&(b.lines, b.points)));
        out
    }

    fn line_sets_no_three_concurrent(&self) -> Vec<[usize; 6]> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(6);
        fn rec(plane: &Plane, start: usize, cur: &mut Vec<usize>, out: &mut Vec<[usize; 6]>) {
            if cur.len() == 6 {
                out.push(cur.as_slice().try_into().unwrap());
                return;
            }
            for l in start..HALF {
                cur.push(l);
                let mask = cur.iter().fold(0u32, |m, &x| m | 1 << x);
                let ok = (0..HALF).all(|p| (plane.lines_through(p) & mask).count_ones() <= 2);
                if ok {
                    rec(plane, l + 1, cur, out);
                }
                cur.pop();
            }
        }
        rec(&self.plane, 0, &mut cur, &mut out);
        out
    }

    /// 6-point sets avoiding every chosen line.
    fn compatible_point_sets(&self, lines: &[usize; 6]) -> Vec<[usize; 6]> {
        let covered = lines.iter().fold(0u32, |m, &l| m | self.plane.points_on(l));
        let free: Vec<usize> = (0..HALF).filter(|p| covered & (1 << p) == 0).collect();
        let mut out = Vec::new();
        if free.len() < 6 {
            return out;
        }
        let k = free.len();
        let mut idx: Vec<usize> = (0..6).collect();
        loop {
            out.push(std::array::from_fn(|i| free[idx[i]]));
            let mut i = 6;
            while i > 0 && idx[i - 1] == k - 6 + i - 1 {
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

    fn make_config(
        &self,
        lines: &[usize; 6],
        points: &[usize; 6],
        cremona: &[CremonaVector],
    ) -> Option<ContractionConfig> {
        if !self.plane.is_general(points) {
            return None;
        }
        let curve_ids: [usize; 12] = std::array::from_fn(|i| {
            if i < 6 {
                lines[i]
            } else {
                HALF + points[i - 6]
            }
        });
        // Gram of the 12 classes must be -2 I
        for (a, &i) in curve_ids.iter().enumerate() {
            for &j in &curve_ids[a + 1..] {
                if self.gram42_small[i][j] != 0 {
                    return None;
                }
            }
        }
        let orthogonal: Vec<usize> = cremona
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                curve_ids
                    .iter()
                    .all(|&e| self.pair42(&c.vector, &self.unit(e)) == 0)
            })
            .map(|(i, _)| i)
            .collect();
        if orthogonal.len() != 10 {
            return None;
        }
        Some(ContractionConfig {
            lines: *lines,
            points: *points,
            curve_ids,
            orthogonal_cremona: orthogonal,
        })
    }

    /// The ten two-triangle splittings of the chosen lines, each as the sorted
    /// set of the six pairwise intersection points inside the two triangles.
    pub fn triangle_splittings(&self, cfg: &ContractionConfig) -> Vec<[usize; 6]> {
        let mut v = self.triangle_splittings_in_order(cfg);
        v.sort();
        v
    }

    fn triangle_splittings_in_order(&self, cfg: &ContractionConfig) -> Vec<[usize; 6]> {
        let meet = |a: usize, b: usize| -> usize {
            let m = self.plane.points_on(cfg.lines[a]) & self.plane.points_on(cfg.lines[b]);
            m.trailing_zeros() as usize
        };
        triangle_splits()
            .into_iter()
            .map(|(x, y)| {
                let mut pts = [
                    meet(x[0], x[1]),
                    meet(x[0], x[2]),
                    meet(x[1], x[2]),
                    meet(y[0], y[1]),
                    meet(y[0], y[2]),
                    meet(y[1], y[2]),
                ];
                pts.sort_unstable();
                pts
            })
            .collect()
    }

    pub fn orthogonal_complement(&self, cfg: &ContractionConfig) -> Result<NumX> {
        let classes: Vec<Vec<BigInt>> = cfg.curve_ids.iter().map(|&e| self.quotient(&self.unit(e))).collect();
        let g = self.gram22.matrix();
        // rows: (class)^T G22
        let rows: Vec<Vec<BigInt>> = classes
            .iter()
            .map(|c| g.transpose().mul_vec(c))
            .collect();
        let a = IntMatrix::from_rows(&rows);
        let basis = intmat::integer_kernel(&a);
        if basis.len() != 10 {
            return Err(Error::Invariant(format!("complement rank {}", basis.len())));
        }
        let gram_complement = self.gram22.congruent(&basis);
        if !gram_complement.all_entries_even() {
            return Err(Error::Invariant("complement Gram has an odd entry".into()));
        }
        let gram10 = gram_complement.divided(2)?;
        let det = gram10.determinant();
        if det.abs() != BigInt::from(1) {
            return Err(Error::Invariant(format!("halved complement determinant {det}")));
        }
        Ok(NumX {
            complement_basis: basis,
            gram_complement,
            gram10,
        })
    }

    /// `2C + E + E'` for each of the 30 curves outside the configuration.
    pub fn nodal_curve_classes(&self, numx: &NumX, cfg: &ContractionConfig) -> Result<Vec<NodalClass>> {
        let contracted: BTreeSet<usize> = cfg.curve_ids.iter().copied().collect();
        let mut out = Vec::new();
        for c in 0..NUM_CURVES {
            if contracted.contains(&c) {
                continue;
            }
            let meets: Vec<usize> = cfg
                .curve_ids
                .iter()
                .copied()
                .filter(|&e| self.gram42_small[c][e] != 0)
                .collect();
            if meets.len() != 2 || meets.iter().any(|&e| self.gram42_small[c][e] != 1) {
                return Err(Error::Invariant(format!(
                    "curve {c} meets {} contracted curves",
                    meets.len()
                )));
            }
            let mut v = self.unit(c).map(|x| 2 * x);
            v[meets[0]] += 1;
            v[meets[1]] += 1;
            for &e in &cfg.curve_ids {
                if self.pair42(&v, &self.unit(e)) != 0 {
                    return Err(Error::Invariant(format!("2C+E+E' for curve {c} not orthogonal")));
                }
            }
            let coords = numx.project(&self.quotient(&v))?;
            out.push(NodalClass {
                curve: CurveClass::from_id(c),
                contracted_neighbors: [meets[0], meets[1]],
                vector42: v,
                coords,
            });
        }
        Ok(out)
    }

    /// The 30 nodal classes followed by the 10 orthogonal Cremona vectors, in
    /// Num(X) coordinates.
    pub fn classes_of_40(&self, numx: &NumX, cfg: &ContractionConfig) -> Result<Vec<EnriquesClass>> {
        let mut out: Vec<EnriquesClass> = self
            .nodal_curve_classes(numx, cfg)?
            .into_iter()
            .map(|n| EnriquesClass {
                kind: ClassKind::Nodal(n.curve),
                vector42: n.vector42,
                coords: n.coords,
            })
            .collect();
        let cremona = self.cremona_vectors();
        for &i in &cfg.orthogonal_cremona {
            let c = &cremona[i];
            out.push(EnriquesClass {
                kind: ClassKind::Cremona(c.points),
                vector42: c.vector,
                coords: numx.project(&self.quotient(&c.vector))?,
            });
        }
        Ok(out)
    }

    pub fn gram_of_40(&self, numx: &NumX, cfg: &ContractionConfig) -> Result<(Vec<EnriquesClass>, IntegerSymMatrix)> {
        let classes = self.classes_of_40(numx, cfg)?;
        let n = classes.len();
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = numx.gram10.pairing(&classes[i].coords, &classes[j].coords);
                let doubled = self.pair42(&classes[i].vector42, &classes[j].vector42);
                if BigInt::from(doubled) != &v * 2 {
                    return Err(Error::Invariant(format!(
                        "pairing ({i},{j}) in Num(X) is not half the NS(Y) pairing"
                    )));
                }
                if i == j && v != BigInt::from(-2) {
                    return Err(Error::Invariant(format!("class {i} has square {v}")));
                }
                if i != j && !(0..=2).contains(&i64::try_from(&v).unwrap_or(-1)) {
                    return Err(Error::Invariant(format!("pairing ({i},{j}) = {v} outside 0..=2")));
                }
                rows[i][j] = v;
            }
        }
        Ok((classes, IntegerSymMatrix::from_rows(&rows)?))
    }

    pub fn export(&self, numx: &NumX, cfg: &ContractionConfig) -> Result<LatticeExport> {
        let (classes, gram40) = self.gram_of_40(numx, cfg)?;
        Ok(LatticeExport {
            schema: crate::report::SCHEMA.to_string(),
            gram22: self.gram22.matrix().to_i64_rows(),
            gram10: numx.gram10.matrix().to_i64_rows(),
            complement_basis: numx
                .complement_basis
                .iter()
                .map(|v| v.iter().map(|x| i64::try_from(x).expect("small")).collect())
                .collect(),
            config: ConfigExport {
                lines: cfg.lines,
                points: cfg.points,
                curve_ids: cfg.curve_ids,
            },
            classes: classes
                .iter()
                .map(|c| ClassExport {
                    label: c.kind.label(),
                    coords: c.coords.iter().map(|x| i64::try_from(x).expect("small")).collect(),
                })
                .collect(),
            gram40: gram40.matrix().to_i64_rows(),
        })
    }
}

impl NsY {
    /// The 40 classes as an intersection graph labelled by curve names.
    pub fn lattice_gamma(&self, numx: &NumX, cfg: &ContractionConfig) -> Result<IntersectionGraph> {
        let (classes, gram) = self.gram_of_40(numx, cfg)?;
        IntersectionGraph::from_gram(classes.iter().map(|c| c.kind.label()).collect(), &gram)
    }

    /// Names the 40 classes by six-letter combinatorics, the letters being the
    /// contracted lines: a free point is the duad of the two contracted lines
    /// through it, a free line the syntheme of the free points on it, and a
    /// Cremona vector the two triangles of contracted lines it comes from.
    pub fn sylvester_labels(&self, cfg: &ContractionConfig, classes: &[EnriquesClass]) -> Result<Vec<GammaVertex>> {
        let letter_mask = |p: usize| -> Vec<u8> {
            (0..6)
                .filter(|&i| self.plane.incidence[cfg.lines[i]][p])
                .map(|i| i as u8 + 1)
                .collect()
        };
        let duad_of_point = |p: usize| -> Result<Duad> {
            match letter_mask(p)[..] {
                [a, b] => Ok(Duad::new(a, b)),
                _ => Err(Error::Invariant(format!("point {p} is not on exactly two contracted lines"))),
            }
        };
        let splittings = self.triangle_splittings_labelled(cfg);
        classes
            .iter()
            .map(|c| match &c.kind {
                ClassKind::Nodal(cc) if cc.family == Family::B => Ok(GammaVertex::Duad(duad_of_point(cc.plane_object)?)),
                ClassKind::Nodal(cc) => {
                    let l = cc.plane_object;
                    let free: Vec<usize> = (0..HALF)
                        .filter(|&p| self.plane.incidence[l][p] && !cfg.points.contains(&p))
                        .collect();
                    if free.len() != 3 {
                        return Err(Error::Invariant(format!("line {l} has {} free points", free.len())));
                    }
                    let d: Vec<Duad> = free.iter().map(|&p| duad_of_point(p)).collect::<Result<_>>()?;
                    Ok(GammaVertex::Syntheme(Syntheme::new([d[0], d[1], d[2]])?))
                }
                ClassKind::Cremona(pts) => splittings
                    .iter()
                    .find(|(set, _)| set == pts)
                    .map(|(_, t)| GammaVertex::TenVector(*t))
                    .ok_or_else(|| Error::Invariant("Cremona vector matches no splitting".into())),
            })
            .collect()
    }

    fn triangle_splittings_labelled(&self, cfg: &ContractionConfig) -> Vec<([usize; 6], TenVector)> {
        let sets = self.triangle_splittings_in_order(cfg);
        triangle_splits()
            .into_iter()
            .zip(sets)
            .map(|((x, _), set)| (set, TenVector::new(x.map(|i| i as u8 + 1))))
            .collect()
    }
}

/// The ten unordered splittings of `{0..6}` into two triples, first triple
/// containing 0, in lexicographic order.
pub fn triangle_splits() -> Vec<([usize; 3], [usize; 3])> {
    let mut out = Vec::new();
    for a in 1..6 {
        for b in a + 1..6 {
            let x = [0, a, b];
            let y: Vec<usize> = (0..6).filter(|i| !x.contains(i)).collect();
            out.push((x, [y[0], y[1], y[2]]));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CremonaVector {
    pub points: [usize; 6],
    pub vector: Vec42,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionConfig {
    pub lines: [usize; 6],
    pub points: [usize; 6],
    /// Six line curves then six point curves.
    pub curve_ids: [usize; 12],
    /// Indices into [`NsY::cremona_vectors`] of the ten orthogonal vectors.
    pub orthogonal_cremona: Vec<usize>,
}

/// Num(X) realized on the orthogonal complement of the contracted curves.
#[derive(Clone, Debug)]
pub struct NumX {
    /// Hermite basis of the complement, in NS(Y) quotient coordinates.
    pub complement_basis: Vec<Vec<BigInt>>,
    /// Restriction of the NS(Y) form.
    pub gram_complement: IntegerSymMatrix,
    /// Half of `gram_complement`.
    pub gram10: IntegerSymMatrix,
}

impl NumX {
    /// Coordinates in `complement_basis` of a quotient vector orthogonal to
    /// the contracted curves.
    pub fn project(&self, v22: &[BigInt]) -> Result<Vec<BigInt>> {
        intmat::solve_in_span(&self.complement_basis, v22)
    }
}

#[derive(Clone, Debug)]
pub struct NodalClass {
    pub curve: CurveClass,
    pub contracted_neighbors: [usize; 2],
    pub vector42: Vec42,
    pub coords: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassKind {
    Nodal(CurveClass),
    Cremona([usize; 6]),
}

impl ClassKind {
    pub fn label(&self) -> String {
        match self {
            ClassKind::Nodal(c) => match c.family {
                Family::A => format!("A{}", c.plane_object),
                Family::B => format!("B{}", c.plane_object),
            },
            ClassKind::Cremona(p) => format!(
                "R{}",
                p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(".")
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EnriquesClass {
    pub kind: ClassKind,
    pub vector42: Vec42,
    pub coords: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigExport {
    pub lines: [usize; 6],
    pub points: [usize; 6],
    pub curve_ids: [usize; 12],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassExport {
    pub label: String,
    pub coords: Vec<i64>,
}

/// JSON form of the lattice data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeExport {
    pub schema: String,
    pub gram22: Vec<Vec<i64>>,
    pub gram10: Vec<Vec<i64>>,
    pub complement_basis: Vec<Vec<i64>>,
    pub config: ConfigExport,
    pub classes: Vec<ClassExport>,
    pub gram40: Vec<Vec<i64>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn configuration_gram_shape() {
        let ns = build_ns_y().unwrap();
        for i in 0..NUM_CURVES {
            assert_eq!(ns.gram42.get(i, i), &BigInt::from(-2));
        }
        assert_eq!(ns.radical_basis.len(), 20);
        assert_eq!(ns.gram42.rank(), 22);
        assert_eq!(
            ns.gram42.exact_signature(),
            Signature { plus: 1, minus: 21, zero: 20 }
        );
        for v in &ns.radical_basis {
            assert!(ns.gram42.matrix().mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn ell_is_well_defined() {
        let ns = build_ns_y().unwrap();
        let e0 = ns.ell_vector(0);
        assert_eq!(ns.pair42(&e0, &e0), 2);
        for m in 0..HALF {
            let e = ns.ell_vector(m);
            let diff: Vec<i64> = e.iter().zip(&e0).map(|(a, b)| a - b).collect();
            assert!(ns.in_radical(&diff), "ell from line {m}");
            assert_eq!(ns.ell_class(m), ns.ell_class(0));
            for p in 0..HALF {
                assert_eq!(ns.pair42(&e, &ns.unit(HALF + p)), 0);
            }
            for l in 0..HALF {
                assert_eq!(ns.pair42(&e, &ns.unit(l)), 1);
            }
        }
    }

    #[test]
    fn quotient_gram_matches_pairing() {
        let ns = build_ns_y().unwrap();
        let a = ns.unit(3);
        let b = ns.ell_vector(5);
        let (qa, qb) = (ns.quotient(&a), ns.quotient(&b));
        assert_eq!(ns.gram22.pairing(&qa, &qb), BigInt::from(ns.pair42(&a, &b)));
    }

    #[test]
    fn cremona_vectors() {
        let ns = build_ns_y().unwrap();
        let cr = ns.cremona_vectors();
        assert_eq!(cr.len(), 168);
        let ell = ns.ell_vector(0);
        for c in &cr {
            assert_eq!(ns.pair42(&c.vector, &c.vector), -4);
            assert_eq!(ns.pair42(&c.vector, &ell), 4);
        }
    }

    #[test]
    fn pruned_contraction_search_equals_unpruned() {
        let ns = build_ns_y().unwrap();
        let pruned = ns.find_contraction_configs().unwrap();
        let full = ns.find_contraction_configs_unpruned();
        assert_eq!(pruned, full);
        assert_eq!(pruned.len(), 168);
    }

    #[test]
    fn config_invariants_and_splittings() {
        let ns = build_ns_y().unwrap();
        let cfgs = ns.find_contraction_configs().unwrap();
        let cr = ns.cremona_vectors();
        for cfg in cfgs.iter().step_by(17) {
            assert_eq!(cfg.orthogonal_cremona.len(), 10);
            let got: BTreeSet<[usize; 6]> = cfg.orthogonal_cremona.iter().map(|&i| cr[i].points).collect();
            let want: BTreeSet<[usize; 6]> = ns.triangle_splittings(cfg).into_iter().collect();
            assert_eq!(got, want);
            let g12 = ns.gram42.submatrix(&cfg.curve_ids);
            assert_eq!(g12, IntegerSymMatrix::from_rows(&(0..12).map(|i| (0..12).map(|j| if i == j { -2i64 } else { 0 }).collect()).collect::<Vec<_>>()).unwrap());
        }
    }

    #[test]
    fn num_x_is_unimodular_even_hyperbolic() {
        let ns = build_ns_y().unwrap();
        let cfg = &ns.find_contraction_configs().unwrap()[0];
        let numx = ns.orthogonal_complement(cfg).unwrap();
        assert_eq!(numx.gram_complement.determinant().abs(), BigInt::from(1024));
        assert_eq!(numx.gram10.determinant(), BigInt::from(-1));
        assert!(numx.gram10.is_even());
        assert_eq!(numx.gram10.exact_signature(), Signature { plus: 1, minus: 9, zero: 0 });
        assert!(intmat::is_primitive(&numx.complement_basis));
        assert!(numx.project(&vec![BigInt::zero(); 22]).unwrap().iter().all(|x| x.is_zero()));
        // a contracted class is not in the complement
        assert!(numx.project(&ns.quotient(&ns.unit(cfg.curve_ids[0]))).is_err());
    }

    #[test]
    fn forty_classes() {
        let ns = build_ns_y().unwrap();
        let cfg = &ns.find_contraction_configs().unwrap()[0];
        let numx = ns.orthogonal_complement(cfg).unwrap();
        let (classes, g) = ns.gram_of_40(&numx, cfg).unwrap();
        assert_eq!(classes.len(), 40);
        assert_eq!(g.rank(), 10);
        for i in 30..40 {
            for j in 30..40 {
                if i != j {
                    assert_eq!(g.get(i, j), &BigInt::from(2));
                }
            }
            let a2 = (0..30).filter(|&j| matches!(classes[j].kind, ClassKind::Nodal(c) if c.family == Family::A) && g.get(i, j) == &BigInt::from(2)).count();
            let b2 = (0..30).filter(|&j| matches!(classes[j].kind, ClassKind::Nodal(c) if c.family == Family::B) && g.get(i, j) == &BigInt::from(2)).count();
            let zeros = (0..30).filter(|&j| g.get(i, j).is_zero()).count();
            assert_eq!((a2, b2, zeros), (6, 6, 18));
        }
        for i in 0..30 {
            let ClassKind::Nodal(ci) = classes[i].kind else { unreachable!() };
            let cross2 = (0..30)
                .filter(|&j| matches!(classes[j].kind, ClassKind::Nodal(cj) if cj.family != ci.family) && g.get(i, j) == &BigInt::from(2))
                .count();
            assert_eq!(cross2, 3);
        }
    }

    #[test]
    fn sylvester_labels_reproduce_combinatorial_pairings() {
        let ns = build_ns_y().unwrap();
        let cfgs = ns.find_contraction_configs().unwrap();
        for cfg in [&cfgs[0], &cfgs[101]] {
            let numx = ns.orthogonal_complement(cfg).unwrap();
            let (classes, g) = ns.gram_of_40(&numx, cfg).unwrap();
            let labels = ns.sylvester_labels(cfg, &classes).unwrap();
            assert_eq!(labels.iter().collect::<BTreeSet<_>>().len(), 40);
            for i in 0..40 {
                for j in 0..40 {
                    if i != j {
                        assert_eq!(
                            g.get(i, j),
                            &BigInt::from(crate::sylvester::gamma_pairing(&labels[i], &labels[j])),
                            "{:?} {:?}",
                            labels[i],
                            labels[j]
                        );
                    }
                }
            }
        }
    }
}
