//! Duads, synthemes and totals on six letters, the combinatorial graph on
//! duads, synthemes and ten-vectors, the S6 action and an outer automorphism.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::IntersectionGraph;

/// An unordered pair of distinct letters `1..=6`, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Duad(pub u8, pub u8);

impl Duad {
    pub fn new(a: u8, b: u8) -> Self {
        assert!(a != b && (1..=6).contains(&a) && (1..=6).contains(&b));
        Duad(a.min(b), a.max(b))
    }

    pub fn contains(&self, x: u8) -> bool {
        self.0 == x || self.1 == x
    }

    pub fn meets(&self, o: &Duad) -> bool {
        self.contains(o.0) || self.contains(o.1)
    }

    pub fn apply(&self, g: &PermS6) -> Duad {
        Duad::new(g.image(self.0), g.image(self.1))
    }
}

impl fmt::Display for Duad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

/// Three disjoint duads, sorted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syntheme(pub [Duad; 3]);

impl Syntheme {
    pub fn new(mut d: [Duad; 3]) -> Result<Self> {
        d.sort();
        let letters: BTreeSet<u8> = d.iter().flat_map(|x| [x.0, x.1]).collect();
        if letters.len() != 6 {
            return Err(Error::Precondition(format!("duads {} {} {} overlap", d[0], d[1], d[2])));
        }
        Ok(Syntheme(d))
    }

    pub fn contains(&self, d: &Duad) -> bool {
        self.0.contains(d)
    }

    pub fn shares_duad(&self, o: &Syntheme) -> bool {
        self.0.iter().any(|d| o.contains(d))
    }

    pub fn apply(&self, g: &PermS6) -> Syntheme {
        Syntheme::new(self.0.map(|d| d.apply(g))).expect("permutations preserve disjointness")
    }
}

impl fmt::Display for Syntheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// A split of the six letters into two triples; the first triple holds 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TenVector(pub [u8; 3], pub [u8; 3]);

impl TenVector {
    pub fn new(mut a: [u8; 3]) -> Self {
        a.sort_unstable();
        let b: Vec<u8> = (1..=6).filter(|x| !a.contains(x)).collect();
        let b = [b[0], b[1], b[2]];
        if a.contains(&1) {
            TenVector(a, b)
        } else {
            TenVector(b, a)
        }
    }

    /// Duads lying inside one of the triples (six of them).
    pub fn inner_duads(&self) -> Vec<Duad> {
        let mut v = Vec::new();
        for t in [self.0, self.1] {
            v.push(Duad::new(t[0], t[1]));
            v.push(Duad::new(t[0], t[2]));
            v.push(Duad::new(t[1], t[2]));
        }
        v.sort();
        v
    }

    pub fn same_side(&self, d: &Duad) -> bool {
        [self.0, self.1].iter().any(|t| t.contains(&d.0) && t.contains(&d.1))
    }

    /// A syntheme is compatible when all three of its duads cross the split.
    pub fn crosses(&self, s: &Syntheme) -> bool {
        s.0.iter().all(|d| !self.same_side(d))
    }

    pub fn apply(&self, g: &PermS6) -> TenVector {
        TenVector::new(self.0.map(|x| g.image(x)))
    }
}

impl fmt::Display for TenVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |t: [u8; 3]| t.iter().map(|x| x.to_string()).collect::<String>();
        write!(f, "({},{})", s(self.0), s(self.1))
    }
}

pub fn duads() -> Vec<Duad> {
    let mut v = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            v.push(Duad(a, b));
        }
    }
    v
}

pub fn synthemes() -> Vec<Syntheme> {
    let mut v = BTreeSet::new();
    for d1 in duads() {
        for d2 in duads() {
            for d3 in duads() {
                if let Ok(s) = Syntheme::new([d1, d2, d3]) {
                    v.insert(s);
                }
            }
        }
    }
    v.into_iter().collect()
}

pub fn ten_vectors() -> Vec<TenVector> {
    let mut v = Vec::new();
    for a in 2..=6 {
        for b in a + 1..=6 {
            v.push(TenVector::new([1, a, b]));
        }
    }
    v
}

/// Five synthemes partitioning the fifteen duads.
pub type Total = [Syntheme; 5];

/// All totals, found by exhaustive search.
pub fn totals() -> Vec<Total> {
    let syn = synthemes();
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(syn: &[Syntheme], start: usize, cur: &mut Vec<usize>, out: &mut Vec<Total>) {
        if cur.len() == 5 {
            out.push(std::array::from_fn(|i| syn[cur[i]]));
            return;
        }
        for i in start..syn.len() {
            if cur.iter().all(|&j| !syn[j].shares_duad(&syn[i])) {
                cur.push(i);
                rec(syn, i + 1, cur, out);
                cur.pop();
            }
        }
    }
    rec(&syn, 0, &mut cur, &mut out);
    out
}

pub const TOTAL_NAMES: [char; 6] = ['A', 'B', 'C', 'D', 'E', 'F'];

/// The syntheme common to each pair of totals `A..F`.
pub const PAIR_TABLE: [(char, char, &str); 15] = [
    ('A', 'B', "14,25,36"),
    ('A', 'C', "16,24,35"),
    ('A', 'D', "13,26,45"),
    ('A', 'E', "12,34,56"),
    ('A', 'F', "15,23,46"),
    ('B', 'C', "15,26,34"),
    ('B', 'D', "12,35,46"),
    ('B', 'E', "16,23,45"),
    ('B', 'F', "13,24,56"),
    ('C', 'D', "14,23,56"),
    ('C', 'E', "13,25,46"),
    ('C', 'F', "12,36,45"),
    ('D', 'E', "15,24,36"),
    ('D', 'F', "16,25,34"),
    ('E', 'F', "14,26,35"),
];

pub fn parse_syntheme(s: &str) -> Result<Syntheme> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::Precondition(format!("bad syntheme {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut d = [Duad(1, 2); 3];
    for (k, p) in parts.iter().enumerate() {
        let b = p.as_bytes();
        if b.len() != 2 || !(b'1'..=b'6').contains(&b[0]) || !(b'1'..=b'6').contains(&b[1]) || b[0] == b[1] {
            return Err(bad());
        }
        d[k] = Duad::new(b[0] - b'0', b[1] - b'0');
    }
    Syntheme::new(d)
}

/// The six named totals built from [`PAIR_TABLE`], checked against the
/// exhaustive search.
pub fn named_totals() -> Result<[Total; 6]> {
    let mut out: Vec<Vec<Syntheme>> = vec![Vec::new(); 6];
    for &(x, y, s) in &PAIR_TABLE {
        let syn = parse_syntheme(s)?;
        for c in [x, y] {
            let i = TOTAL_NAMES.iter().position(|&n| n == c).unwrap();
            out[i].push(syn);
        }
    }
    let found: BTreeSet<Vec<Syntheme>> = totals()
        .into_iter()
        .map(|t| {
            let mut v = t.to_vec();
            v.sort();
            v
        })
        .collect();
    let mut named = Vec::new();
    for (i, mut t) in out.into_iter().enumerate() {
        t.sort();
        if !found.contains(&t) {
            return Err(Error::Invariant(format!("table row {} is not a total", TOTAL_NAMES[i])));
        }
        named.push(<Total>::try_from(t.as_slice()).unwrap());
    }
    if found.len() != 6 {
        return Err(Error::Invariant(format!("{} totals found", found.len())));
    }
    Ok(named.try_into().unwrap())
}

/// A permutation of `1..=6`; `images[i]` is the image of `i + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermS6(pub [u8; 6]);

impl PermS6 {
    pub fn identity() -> Self {
        PermS6([1, 2, 3, 4, 5, 6])
    }

    pub fn new(images: [u8; 6]) -> Result<Self> {
        let mut s = images;
        s.sort_unstable();
        if s != [1, 2, 3, 4, 5, 6] {
            return Err(Error::Precondition(format!("{images:?} is not a permutation")));
        }
        Ok(PermS6(images))
    }

    pub fn image(&self, x: u8) -> u8 {
        self.0[(x - 1) as usize]
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &PermS6) -> PermS6 {
        PermS6(other.0.map(|x| self.image(x)))
    }

    pub fn inverse(&self) -> PermS6 {
        let mut inv = [0u8; 6];
        for (i, &x) in self.0.iter().enumerate() {
            inv[(x - 1) as usize] = i as u8 + 1;
        }
        PermS6(inv)
    }

    /// All 720 permutations in lexicographic order.
    pub fn all() -> Vec<PermS6> {
        let mut out = Vec::with_capacity(720);
        let mut p = [1u8, 2, 3, 4, 5, 6];
        loop {
            out.push(PermS6(p));
            let Some(i) = (1..6).rev().find(|&i| p[i - 1] < p[i]) else { break };
            let j = (i..6).rev().find(|&j| p[j] > p[i - 1]).unwrap();
            p.swap(i - 1, j);
            p[i..].reverse();
        }
        out
    }

    pub fn transposition(a: u8, b: u8) -> PermS6 {
        let mut p = [1, 2, 3, 4, 5, 6];
        p.swap((a - 1) as usize, (b - 1) as usize);
        PermS6(p)
    }

    pub fn six_cycle() -> PermS6 {
        PermS6([2, 3, 4, 5, 6, 1])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GammaVertex {
    Duad(Duad),
    Syntheme(Syntheme),
    TenVector(TenVector),
}

impl GammaVertex {
    pub fn label(&self) -> String {
        match self {
            GammaVertex::Duad(d) => d.to_string(),
            GammaVertex::Syntheme(s) => s.to_string(),
            GammaVertex::TenVector(t) => t.to_string(),
        }
    }

    pub fn apply(&self, g: &PermS6) -> GammaVertex {
        match self {
            GammaVertex::Duad(d) => GammaVertex::Duad(d.apply(g)),
            GammaVertex::Syntheme(s) => GammaVertex::Syntheme(s.apply(g)),
            GammaVertex::TenVector(t) => GammaVertex::TenVector(t.apply(g)),
        }
    }
}

/// 15 duads, 15 synthemes, 10 ten-vectors, each block in lexicographic order.
pub fn gamma_vertices() -> Vec<GammaVertex> {
    let mut v: Vec<GammaVertex> = duads().into_iter().map(GammaVertex::Duad).collect();
    v.extend(synthemes().into_iter().map(GammaVertex::Syntheme));
    v.extend(ten_vectors().into_iter().map(GammaVertex::TenVector));
    v
}

/// Pairing of two distinct vertices of the combinatorial graph.
pub fn gamma_pairing(a: &GammaVertex, b: &GammaVertex) -> i64 {
    use GammaVertex::*;
    match (a, b) {
        (Duad(x), Duad(y)) => x.meets(y) as i64,
        (Syntheme(x), Syntheme(y)) => !x.shares_duad(y) as i64,
        (Duad(d), Syntheme(s)) | (Syntheme(s), Duad(d)) => 2 * s.contains(d) as i64,
        (TenVector(_), TenVector(_)) => 2,
        (TenVector(t), Duad(d)) | (Duad(d), TenVector(t)) => 2 * t.same_side(d) as i64,
        (TenVector(t), Syntheme(s)) | (Syntheme(s), TenVector(t)) => 2 * t.crosses(s) as i64,
    }
}

pub fn combinatorial_gamma() -> IntersectionGraph {
    let verts = gamma_vertices();
    let n = verts.len();
    let mut p = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            p[i][j] = if i == j { -2 } else { gamma_pairing(&verts[i], &verts[j]) };
        }
    }
    IntersectionGraph::new(verts.iter().map(|v| v.label()).collect(), p).expect("well formed")
}

/// Vertex permutation induced by `g` on [`gamma_vertices`].
pub fn s6_action(g: &PermS6) -> Vec<usize> {
    let verts = gamma_vertices();
    verts
        .iter()
        .map(|v| {
            let w = v.apply(g);
            verts.iter().position(|u| *u == w).expect("closed under S6")
        })
        .collect()
}

/// Letter `i` goes to total `LETTER_TO_TOTAL[i - 1]`.
pub const LETTER_TO_TOTAL: [char; 6] = ['A', 'E', 'D', 'B', 'F', 'C'];

/// Vertex permutation of the combinatorial graph exchanging duads and
/// synthemes: a duad `ij` goes to the syntheme shared by the totals of `i`
/// and `j`, a syntheme to the duad of letters whose totals contain it, and a
/// ten-vector to the one whose inner duads are the images of its crossing
/// synthemes.
pub fn outer_automorphism() -> Result<Vec<usize>> {
    let named = named_totals()?;
    let total_of = |letter: u8| -> &Total {
        let c = LETTER_TO_TOTAL[(letter - 1) as usize];
        &named[TOTAL_NAMES.iter().position(|&n| n == c).unwrap()]
    };
    let duad_image = |d: &Duad| -> Result<Syntheme> {
        let (a, b) = (total_of(d.0), total_of(d.1));
        let common: Vec<&Syntheme> = a.iter().filter(|s| b.contains(s)).collect();
        if common.len() != 1 {
            return Err(Error::Invariant(format!("totals of {d} share {} synthemes", common.len())));
        }
        Ok(*common[0])
    };
    let syntheme_image = |s: &Syntheme| -> Result<Duad> {
        let letters: Vec<u8> = (1..=6).filter(|&x| total_of(x).contains(s)).collect();
        if letters.len() != 2 {
            return Err(Error::Invariant(format!("{s} lies in {} totals", letters.len())));
        }
        Ok(Duad::new(letters[0], letters[1]))
    };
    let verts = gamma_vertices();
    let pos = |v: &GammaVertex| verts.iter().position(|u| u == v).unwrap();
    let mut out = Vec::with_capacity(verts.len());
    for v in &verts {
        let w = match v {
            GammaVertex::Duad(d) => GammaVertex::Syntheme(duad_image(d)?),
            GammaVertex::Syntheme(s) => GammaVertex::Duad(syntheme_image(s)?),
            GammaVertex::TenVector(t) => {
                let mut ds: Vec<Duad> = synthemes()
                    .iter()
                    .filter(|s| t.crosses(s))
                    .map(syntheme_image)
                    .collect::<Result<_>>()?;
                ds.sort();
                let target = ten_vectors().into_iter().find(|u| u.inner_duads() == ds);
                match target {
                    Some(u) => GammaVertex::TenVector(u),
                    None => return Err(Error::Invariant(format!("no image for {t}"))),
                }
            }
        };
        out.push(pos(&w));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(duads().len(), 15);
        assert_eq!(synthemes().len(), 15);
        assert_eq!(ten_vectors().len(), 10);
        assert_eq!(totals().len(), 6);
        assert_eq!(PermS6::all().len(), 720);
    }

    #[test]
    fn every_duad_in_three_synthemes_and_every_syntheme_in_two_totals() {
        for d in duads() {
            assert_eq!(synthemes().iter().filter(|s| s.contains(&d)).count(), 3);
        }
        let t = named_totals().unwrap();
        for s in synthemes() {
            assert_eq!(t.iter().filter(|x| x.contains(&s)).count(), 2);
        }
        for i in 0..6 {
            for j in 0..i {
                assert_eq!(t[i].iter().filter(|s| t[j].contains(s)).count(), 1);
            }
        }
    }

    #[test]
    fn ten_vector_labels() {
        let v = ten_vectors();
        assert_eq!(v[0].to_string(), "(123,456)");
        assert_eq!(v[9].to_string(), "(156,234)");
        for t in &v {
            assert_eq!(synthemes().iter().filter(|s| t.crosses(s)).count(), 6);
        }
    }

    #[test]
    fn pairing_examples_and_degree_profile() {
        let g = combinatorial_gamma();
        let t = g.index_of("(123,456)").unwrap();
        let mut twos: Vec<&str> = (0..40).filter(|&j| g.pairing(t, j) == 2 && j < 30).map(|j| g.label(j)).collect();
        twos.sort();
        let mut want = vec![
            "12", "13", "23", "45", "46", "56", "(14,25,36)", "(14,26,35)", "(15,24,36)", "(15,26,34)",
            "(16,24,35)", "(16,25,34)",
        ];
        want.sort();
        assert_eq!(twos, want);
        let d12 = g.index_of("12").unwrap();
        assert_eq!((0..40).filter(|&j| g.pairing(d12, j) == 1).count(), 8);
        let s = g.index_of("(12,34,56)").unwrap();
        assert_eq!((0..15).filter(|&j| g.pairing(s, j) == 2).count(), 3);
        assert_eq!((15..30).filter(|&j| g.pairing(s, j) == 1).count(), 8);
        for v in 0..40 {
            let d2 = (0..40).filter(|&j| j != v && g.pairing(v, j) == 2).count();
            let d1 = (0..40).filter(|&j| g.pairing(v, j) == 1).count();
            if v < 30 {
                assert_eq!((d2, d1), (7, 8));
            } else {
                assert_eq!((d2, d1), (21, 0));
            }
        }
    }

    #[test]
    fn s6_preserves_pairings() {
        let g = combinatorial_gamma();
        for p in PermS6::all() {
            assert!(g.is_isomorphism(&g, &s6_action(&p)));
        }
    }

    #[test]
    fn outer_automorphism_is_automorphism_swapping_blocks() {
        let g = combinatorial_gamma();
        let phi = outer_automorphism().unwrap();
        assert!(g.is_isomorphism(&g, &phi));
        assert!(phi[..15].iter().all(|&i| (15..30).contains(&i)));
        assert!(phi[15..30].iter().all(|&i| i < 15));
        let d14 = g.index_of("14").unwrap();
        assert_eq!(g.label(phi[d14]), "(14,25,36)");
        for v in 0..30 {
            assert_eq!(phi[phi[v]], v);
        }
    }

    #[test]
    fn perm_algebra() {
        let a = PermS6([2, 1, 3, 4, 5, 6]);
        let b = PermS6::six_cycle();
        assert_eq!(a.compose(&a), PermS6::identity());
        assert_eq!(b.compose(&b.inverse()), PermS6::identity());
        assert_eq!(a.compose(&b).image(1), a.image(b.image(1)));
        assert!(PermS6::new([1, 1, 2, 3, 4, 5]).is_err());
    }
}
