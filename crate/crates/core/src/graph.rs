//! Labelled intersection graphs of `(-2)`-classes, isomorphism search,
//! automorphism groups and orbit censuses.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::IntegerSymMatrix;

/// Vertices are `(-2)`-classes; edge multiplicity is the pairing (0, 1 or 2
/// for the graphs built here, arbitrary nonnegative in general).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionGraph {
    labels: Vec<String>,
    pairing: Vec<Vec<i64>>,
}

impl IntersectionGraph {
    /// `pairing` holds off-diagonal pairings; the diagonal must be `-2`.
    pub fn new(labels: Vec<String>, pairing: Vec<Vec<i64>>) -> Result<Self> {
        let n = labels.len();
        if pairing.len() != n || pairing.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("pairing matrix shape".into()));
        }
        for i in 0..n {
            if pairing[i][i] != -2 {
                return Err(Error::Precondition(format!("vertex {} has square {}", labels[i], pairing[i][i])));
            }
            for j in 0..i {
                if pairing[i][j] != pairing[j][i] {
                    return Err(Error::Precondition("pairing is not symmetric".into()));
                }
                if pairing[i][j] < 0 {
                    return Err(Error::Precondition("negative off-diagonal pairing".into()));
                }
            }
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::Precondition("duplicate vertex label".into()));
        }
        Ok(IntersectionGraph { labels, pairing })
    }

    pub fn from_gram(labels: Vec<String>, gram: &IntegerSymMatrix) -> Result<Self> {
        Self::new(labels, gram.matrix().to_i64_rows())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        self.pairing[i][j]
    }

    pub fn pairing_rows(&self) -> &[Vec<i64>] {
        &self.pairing
    }

    pub fn gram(&self) -> IntegerSymMatrix {
        IntegerSymMatrix::from_rows(&self.pairing).expect("symmetric by construction")
    }

    pub fn max_pairing(&self) -> i64 {
        let mut m = 0;
        for i in 0..self.len() {
            for j in 0..i {
                m = m.max(self.pairing[i][j]);
            }
        }
        m
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| j != i && self.pairing[i][j] != 0)
    }

    pub fn edge_count(&self, multiplicity: i64) -> usize {
        let mut c = 0;
        for i in 0..self.len() {
            for j in 0..i {
                if self.pairing[i][j] == multiplicity {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn induced(&self, idx: &[usize]) -> IntersectionGraph {
        IntersectionGraph {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
            pairing: idx.iter().map(|&i| idx.iter().map(|&j| self.pairing[i][j]).collect()).collect(),
        }
    }

    /// Same graph with vertex `i` of the result equal to vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> IntersectionGraph {
        self.induced(perm)
    }

    pub fn with_pairing(&self, i: usize, j: usize, value: i64) -> Result<IntersectionGraph> {
        let mut p = self.pairing.clone();
        p[i][j] = value;
        p[j][i] = value;
        IntersectionGraph::new(self.labels.clone(), p)
    }

    /// `perm` maps vertices of `self` to vertices of `other` preserving pairings.
    pub fn is_isomorphism(&self, other: &IntersectionGraph, perm: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.pairing[i][j] == other.pairing[perm[i]][perm[j]]))
    }

    /// Graphviz; a pairing of `k > 1` is drawn as `k` parallel edges carrying
    /// `multiplicity=k`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph gamma {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  v{i} [label=\"{l}\"];");
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let k = self.pairing[i][j];
                for _ in 0..k {
                    if k > 1 {
                        let _ = writeln!(s, "  v{i} -- v{j} [multiplicity={k}];");
                    } else {
                        let _ = writeln!(s, "  v{i} -- v{j};");
                    }
                }
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&GraphExport::from(self))?)
    }

    pub fn from_json(s: &str) -> Result<IntersectionGraph> {
        let e: GraphExport = serde_json::from_str(s)?;
        e.into_graph()
    }
}

/// JSON form of an [`IntersectionGraph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub schema: String,
    pub labels: Vec<String>,
    pub pairing: Vec<Vec<i64>>,
}

impl From<&IntersectionGraph> for GraphExport {
    fn from(g: &IntersectionGraph) -> Self {
        GraphExport {
            schema: crate::report::SCHEMA.to_string(),
            labels: g.labels.clone(),
            pairing: g.pairing.clone(),
        }
    }
}

impl GraphExport {
    pub fn into_graph(self) -> Result<IntersectionGraph> {
        IntersectionGraph::new(self.labels, self.pairing)
    }
}

// ---------------------------------------------------------------------------
// isomorphism search

/// Refines an ordered partition until every cell is equitable with respect
/// to pairing counts. Cells are split identically in both graphs; `None`
/// signals the two colourings can not be matched.
fn refine(
    ga: &IntersectionGraph,
    gb: &IntersectionGraph,
    mut ca: Vec<usize>,
    mut cb: Vec<usize>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = ga.len();
    loop {
        let ncol = ca.iter().copied().max().map_or(0, |m| m + 1);
        let sig = |g: &IntersectionGraph, c: &[usize], v: usize| -> (usize, Vec<(usize, i64, usize)>) {
            let mut counts: BTreeMap<(usize, i64), usize> = BTreeMap::new();
            for u in 0..n {
                if u != v && g.pairing[v][u] != 0 {
                    *counts.entry((c[u], g.pairing[v][u])).or_default() += 1;
                }
            }
            (c[v], counts.into_iter().map(|((a, b), k)| (a, b, k)).collect())
        };
        let sa: Vec<_> = (0..n).map(|v| sig(ga, &ca, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| sig(gb, &cb, v)).collect();
        let mut keys: Vec<_> = sa.clone();
        keys.sort();
        keys.dedup();
        let mut keys_b: Vec<_> = sb.clone();
        keys_b.sort();
        keys_b.dedup();
        if keys != keys_b {
            return None;
        }
        let index: HashMap<_, usize> = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let na: Vec<usize> = sa.iter().map(|k| index[k]).collect();
        let nb: Vec<usize> = sb.iter().map(|k| index[k]).collect();
        let mut hist_a = vec![0usize; keys.len()];
        let mut hist_b = vec![0usize; keys.len()];
        for &c in &na {
            hist_a[c] += 1;
        }
        for &c in &nb {
            hist_b[c] += 1;
        }
        if hist_a != hist_b {
            return None;
        }
        let stable = keys.len() == ncol;
        ca = na;
        cb = nb;
        if stable {
            return Some((ca, cb));
        }
    }
}

fn search(
    ga: &IntersectionGraph,
    gb: &IntersectionGraph,
    ca: Vec<usize>,
    cb: Vec<usize>,
    first_only: bool,
    out: &mut Vec<Vec<usize>>,
) {
    let Some((ca, cb)) = refine(ga, gb, ca, cb) else { return };
    let n = ga.len();
    let ncol = ca.iter().copied().max().map_or(0, |m| m + 1);
    if ncol == n {
        let mut pos_b = vec![0; n];
        for v in 0..n {
            pos_b[cb[v]] = v;
        }
        let perm: Vec<usize> = (0..n).map(|v| pos_b[ca[v]]).collect();
        if ga.is_isomorphism(gb, &perm) {
            out.push(perm);
        }
        return;
    }
    // branch on the smallest nontrivial cell
    let mut size = vec![0usize; ncol];
    for &c in &ca {
        size[c] += 1;
    }
    let cell = (0..ncol).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c)).unwrap();
    let va = (0..n).find(|&v| ca[v] == cell).unwrap();
    for vb in (0..n).filter(|&v| cb[v] == cell) {
        let mut na = ca.clone();
        let mut nb = cb.clone();
        na[va] = ncol;
        nb[vb] = ncol;
        search(ga, gb, na, nb, first_only, out);
        if first_only && !out.is_empty() {
            return;
        }
    }
}

/// Some pairing-preserving bijection `a -> b`.
pub fn find_isomorphism(a: &IntersectionGraph, b: &IntersectionGraph) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let mut out = Vec::new();
    search(a, b, vec![0; a.len()], vec![0; b.len()], true, &mut out);
    out.pop()
}

/// Every automorphism, as vertex permutations.
pub fn all_automorphisms(g: &IntersectionGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search(g, g, vec![0; g.len()], vec![0; g.len()], false, &mut out);
    out.sort();
    out
}

/// Brute force over all `n!` permutations; for small graphs only.
pub fn brute_force_automorphisms(g: &IntersectionGraph) -> Vec<Vec<usize>> {
    let n = g.len();
    assert!(n <= 9, "brute force limited to 9 vertices");
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if g.is_isomorphism(g, &perm) {
            out.push(perm.clone());
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p . q)(i) = p(q(i))
    q.iter().map(|&i| p[i]).collect()
}

/// All products of the generators.
pub fn closure(generators: &[Vec<usize>], n: usize) -> HashSet<Vec<usize>> {
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = compose(s, &g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub order: usize,
    pub generators: Vec<Vec<usize>>,
    pub elements: Vec<Vec<usize>>,
}

impl AutomorphismGroup {
    pub fn orbits(&self, n: usize) -> Vec<Vec<usize>> {
        orbits_of(&self.generators, n)
    }
}

pub fn automorphism_group(g: &IntersectionGraph) -> AutomorphismGroup {
    let elements = all_automorphisms(g);
    let n = g.len();
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut span = closure(&generators, n);
    for e in &elements {
        if !span.contains(e) {
            generators.push(e.clone());
            span = closure(&generators, n);
            if span.len() == elements.len() {
                break;
            }
        }
    }
    AutomorphismGroup { order: elements.len(), generators, elements }
}

/// Orbits of the group generated by `generators`, each sorted, ordered by
/// smallest element.
pub fn orbits_of(generators: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for g in generators {
        for (i, &gi) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, gi));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// Sorted orbit sizes (descending).
pub fn orbit_census(generators: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = orbits_of(generators, n).iter().map(|o| o.len()).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}
