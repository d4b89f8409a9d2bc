//! Exact icosahedron and 600-cell models, and the classification of a
//! vertex figure's vertices by how many members of a seed clique they touch.
//!
//! For an interior vertex of the simplex, the seed is the set of its parents
//! seen in the 600-cell vertex figure; a figure vertex adjacent to `d` of
//! them becomes a child with `d + 1` incoming edges. The same procedure on
//! the icosahedron gives the face classes of the hyperbolic Pascal pyramid.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::census::VertexClass;
use crate::error::{Error, Result};
use crate::Golden;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolytopeName {
    Icosahedron,
    SixHundredCell,
}

impl PolytopeName {
    pub fn max_seed(self) -> usize {
        match self {
            PolytopeName::Icosahedron => 3,
            PolytopeName::SixHundredCell => 4,
        }
    }

    /// Child class of a figure vertex adjacent to `touching` seed members.
    pub fn child_class(self, touching: usize) -> Option<VertexClass> {
        use VertexClass::*;
        match (self, touching) {
            (PolytopeName::Icosahedron, 0) => Some(E),
            (PolytopeName::Icosahedron, 1) => Some(D),
            (PolytopeName::Icosahedron, 2) => Some(C),
            (PolytopeName::SixHundredCell, 0) => Some(K),
            (PolytopeName::SixHundredCell, 1) => Some(H),
            (PolytopeName::SixHundredCell, 2) => Some(G),
            (PolytopeName::SixHundredCell, 3) => Some(F),
            _ => None,
        }
    }
}

impl fmt::Display for PolytopeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeName::Icosahedron => write!(f, "icosahedron"),
            PolytopeName::SixHundredCell => write!(f, "600-cell"),
        }
    }
}

/// Vertex set with adjacency and the 3- and 4-cliques of its edge graph.
#[derive(Clone, Debug)]
pub struct Polytope {
    pub name: PolytopeName,
    /// Empty when built from an adjacency dump.
    pub vertices: Vec<Vec<Golden>>,
    adjacency: Vec<u128>,
    pub edges: Vec<[usize; 2]>,
    pub triangles: Vec<[usize; 3]>,
    pub tetrahedra: Vec<[usize; 4]>,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn golden(a: i64, b: i64) -> Golden {
    Golden::new(int(a), int(b))
}

fn dot(u: &[Golden], v: &[Golden]) -> Golden {
    u.iter()
        .zip(v)
        .fold(Golden::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn sorted(mut points: Vec<Vec<Golden>>) -> Vec<Vec<Golden>> {
    points.sort_by(|p, q| {
        p.iter()
            .zip(q)
            .map(|(x, y)| {
                x.partial_cmp(y)
                    .expect("golden numbers are totally ordered")
            })
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    points
}

/// `(0, ±1, ±φ)` and its cyclic shifts; edge length 2.
fn icosahedron_vertices() -> Vec<Vec<Golden>> {
    let mut pts = Vec::with_capacity(12);
    for s1 in [1, -1] {
        for s2 in [1, -1] {
            let base = [golden(0, 0), golden(s1, 0), golden(0, s2)];
            for shift in 0..3 {
                pts.push((0..3).map(|i| base[(i + shift) % 3].clone()).collect());
            }
        }
    }
    sorted(pts)
}

/// The 120 unit quaternions of the binary icosahedral group, doubled:
/// permutations of `(±2,0,0,0)`, all `(±1,±1,±1,±1)`, and even permutations
/// of `(±φ, ±1, ±(φ-1), 0)`. Adjacent vertices have inner product `2φ`.
fn six_hundred_cell_vertices() -> Vec<Vec<Golden>> {
    let mut pts = Vec::with_capacity(120);
    for axis in 0..4 {
        for s in [2, -2] {
            let mut p = vec![golden(0, 0); 4];
            p[axis] = golden(s, 0);
            pts.push(p);
        }
    }
    for bits in 0..16u32 {
        pts.push(
            (0..4)
                .map(|i| golden(if bits >> i & 1 == 1 { -1 } else { 1 }, 0))
                .collect(),
        );
    }
    let even_perms = even_permutations();
    for signs in 0..8u32 {
        let sign = |i: u32| if signs >> i & 1 == 1 { -1 } else { 1 };
        let base = [
            golden(0, sign(0)),
            golden(sign(1), 0),
            golden(-sign(2), sign(2)),
            golden(0, 0),
        ];
        for perm in &even_perms {
            let mut p = vec![golden(0, 0); 4];
            for (src, &dst) in perm.iter().enumerate() {
                p[dst] = base[src].clone();
            }
            pts.push(p);
        }
    }
    sorted(pts)
}

fn even_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(12);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    if !distinct {
                        continue;
                    }
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if inversions % 2 == 0 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

type AdjacencyTest = Box<dyn Fn(&[Golden], &[Golden]) -> bool>;

pub fn build_polytope(name: PolytopeName) -> Polytope {
    let (vertices, adjacent): (_, AdjacencyTest) = match name {
        PolytopeName::Icosahedron => {
            let four = golden(4, 0);
            (
                icosahedron_vertices(),
                Box::new(move |u, v| {
                    let diff: Vec<Golden> = u
                        .iter()
                        .zip(v)
                        .map(|(x, y)| x.clone() - y.clone())
                        .collect();
                    dot(&diff, &diff) == four
                }),
            )
        }
        PolytopeName::SixHundredCell => {
            let two_phi = golden(0, 2);
            (
                six_hundred_cell_vertices(),
                Box::new(move |u, v| dot(u, v) == two_phi),
            )
        }
    };
    let n = vertices.len();
    let mut adjacency = vec![0u128; n];
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(&vertices[i], &vertices[j]) {
                adjacency[i] |= 1 << j;
                adjacency[j] |= 1 << i;
            }
        }
    }
    Polytope::assemble(name, vertices, adjacency)
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

fn above(i: usize) -> u128 {
    if i >= 127 {
        0
    } else {
        !0u128 << (i + 1)
    }
}

impl Polytope {
    fn assemble(name: PolytopeName, vertices: Vec<Vec<Golden>>, adjacency: Vec<u128>) -> Self {
        let n = adjacency.len();
        let mut edges = Vec::new();
        let mut triangles = Vec::new();
        let mut tetrahedra = Vec::new();
        for i in 0..n {
            for j in bits(adjacency[i] & above(i)) {
                edges.push([i, j]);
                let common_ij = adjacency[i] & adjacency[j] & above(j);
                for k in bits(common_ij) {
                    triangles.push([i, j, k]);
                    for l in bits(common_ij & adjacency[k] & above(k)) {
                        tetrahedra.push([i, j, k, l]);
                    }
                }
            }
        }
        Self {
            name,
            vertices,
            adjacency,
            edges,
            triangles,
            tetrahedra,
        }
    }

    /// Rebuilds the combinatorial structure from an adjacency dump.
    pub fn from_adjacency(name: PolytopeName, text: &str) -> Result<Self> {
        let lists = parse_adjacency(text)?;
        let n = lists.len();
        if n > 128 {
            return Err(Error::Argument(format!(
                "{n} vertices exceed the 128-vertex limit"
            )));
        }
        let mut adjacency = vec![0u128; n];
        for (i, list) in lists.iter().enumerate() {
            for &j in list {
                if j >= n || j == i {
                    return Err(Error::Parse(format!("bad neighbour {j} of v{i}")));
                }
                adjacency[i] |= 1 << j;
            }
        }
        for i in 0..n {
            for j in bits(adjacency[i]) {
                if adjacency[j] >> i & 1 == 0 {
                    return Err(Error::Parse(format!("v{i} -> v{j} is not symmetric")));
                }
            }
        }
        Ok(Self::assemble(name, Vec::new(), adjacency))
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i] >> j & 1 == 1
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        bits(self.adjacency[i]).collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].count_ones() as usize
    }

    pub fn is_clique(&self, seed: &[usize]) -> bool {
        seed.iter().enumerate().all(|(k, &i)| {
            i < self.vertex_count()
                && seed[k + 1..]
                    .iter()
                    .all(|&j| i != j && self.is_adjacent(i, j))
        })
    }

    /// All cliques of size `m` (1 to 4), in lexicographic order.
    pub fn cliques(&self, m: usize) -> Vec<Vec<usize>> {
        match m {
            1 => (0..self.vertex_count()).map(|i| vec![i]).collect(),
            2 => self.edges.iter().map(|e| e.to_vec()).collect(),
            3 => self.triangles.iter().map(|t| t.to_vec()).collect(),
            4 => self.tetrahedra.iter().map(|t| t.to_vec()).collect(),
            _ => Vec::new(),
        }
    }

    /// `v<i>: j k l …` per vertex, neighbours ascending.
    pub fn adjacency_dump(&self) -> String {
        let mut out = String::new();
        for i in 0..self.vertex_count() {
            let ns: Vec<String> = self.neighbors(i).iter().map(|j| j.to_string()).collect();
            out.push_str(&format!("v{i}: {}\n", ns.join(" ")));
        }
        out
    }

    /// Vertex and edge counts of the subgraph induced by the neighbours of `v`,
    /// with the induced degree of each neighbour.
    pub fn neighbor_figure(&self, v: usize) -> (usize, usize, Vec<usize>) {
        let mask = self.adjacency[v];
        let degrees: Vec<usize> = bits(mask)
            .map(|u| (self.adjacency[u] & mask).count_ones() as usize)
            .collect();
        let edges = degrees.iter().sum::<usize>() / 2;
        (degrees.len(), edges, degrees)
    }

    /// The neighbours of every vertex span an icosahedron: 12 vertices,
    /// 30 edges, each of induced degree 5.
    pub fn neighbors_form_icosahedra(&self) -> bool {
        (0..self.vertex_count()).all(|v| {
            let (n, e, degrees) = self.neighbor_figure(v);
            n == 12 && e == 30 && degrees.iter().all(|&d| d == 5)
        })
    }
}

/// Parses lines of the form `v<i>: j k l …`; lines must be in index order.
pub fn parse_adjacency(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("line {}: missing ':'", lineno + 1)))?;
        let index: usize = head
            .strip_prefix('v')
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| {
                Error::Parse(format!("line {}: bad vertex label {head:?}", lineno + 1))
            })?;
        if index != out.len() {
            return Err(Error::Parse(format!(
                "line {}: expected v{}, found v{index}",
                lineno + 1,
                out.len()
            )));
        }
        let neighbours = tail
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("line {}: bad index {t:?}", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(neighbours);
    }
    Ok(out)
}

/// Global counts and the incidence numbers shared by every vertex / edge.
/// A `None` means the number is not the same everywhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStats {
    pub vertices: usize,
    pub edges: usize,
    pub triangles: usize,
    pub tetrahedra: usize,
    pub edges_per_vertex: Option<usize>,
    pub triangles_per_vertex: Option<usize>,
    pub tetrahedra_per_vertex: Option<usize>,
    pub triangles_per_edge: Option<usize>,
    pub tetrahedra_per_edge: Option<usize>,
    pub tetrahedra_per_triangle: Option<usize>,
}

impl IncidenceStats {
    pub fn is_regular(&self) -> bool {
        self.edges_per_vertex.is_some()
            && self.triangles_per_vertex.is_some()
            && self.tetrahedra_per_vertex.is_some()
            && self.triangles_per_edge.is_some()
            && self.tetrahedra_per_edge.is_some()
            && self.tetrahedra_per_triangle.is_some()
    }
}

impl fmt::Display for IncidenceStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: Option<usize>| x.map_or_else(|| "irregular".to_string(), |v| v.to_string());
        writeln!(f, "vertices: {}", self.vertices)?;
        writeln!(f, "edges: {}", self.edges)?;
        writeln!(f, "triangles: {}", self.triangles)?;
        writeln!(f, "tetrahedra: {}", self.tetrahedra)?;
        writeln!(f, "edges per vertex: {}", show(self.edges_per_vertex))?;
        writeln!(
            f,
            "triangles per vertex: {}",
            show(self.triangles_per_vertex)
        )?;
        writeln!(
            f,
            "tetrahedra per vertex: {}",
            show(self.tetrahedra_per_vertex)
        )?;
        writeln!(f, "triangles per edge: {}", show(self.triangles_per_edge))?;
        writeln!(f, "tetrahedra per edge: {}", show(self.tetrahedra_per_edge))?;
        writeln!(
            f,
            "tetrahedra per triangle: {}",
            show(self.tetrahedra_per_triangle)
        )?;
        writeln!(f, "regular: {}", self.is_regular())
    }
}

fn uniform(values: impl IntoIterator<Item = usize>) -> Option<usize> {
    let mut it = values.into_iter();
    let first = it.next().unwrap_or(0);
    it.all(|x| x == first).then_some(first)
}

fn tally<const K: usize>(items: &[[usize; K]], keys: &[Vec<usize>]) -> Vec<usize> {
    let mut counts = vec![0; keys.len()];
    for item in items {
        for (slot, key) in counts.iter_mut().zip(keys) {
            if key.iter().all(|k| item.contains(k)) {
                *slot += 1;
            }
        }
    }
    counts
}

pub fn incidence_stats(p: &Polytope) -> IncidenceStats {
    let n = p.vertex_count();
    let vertex_keys: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let edge_keys: Vec<Vec<usize>> = p.edges.iter().map(|e| e.to_vec()).collect();
    let triangle_keys: Vec<Vec<usize>> = p.triangles.iter().map(|t| t.to_vec()).collect();
    IncidenceStats {
        vertices: n,
        edges: p.edges.len(),
        triangles: p.triangles.len(),
        tetrahedra: p.tetrahedra.len(),
        edges_per_vertex: uniform((0..n).map(|i| p.degree(i))),
        triangles_per_vertex: uniform(tally(&p.triangles, &vertex_keys)),
        tetrahedra_per_vertex: uniform(tally(&p.tetrahedra, &vertex_keys)),
        triangles_per_edge: uniform(tally(&p.triangles, &edge_keys)),
        tetrahedra_per_edge: uniform(tally(&p.tetrahedra, &edge_keys)),
        tetrahedra_per_triangle: uniform(tally(&p.tetrahedra, &triangle_keys)),
    }
}

/// Child-class counts produced by one seed clique.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassificationCounts {
    pub seed_size: usize,
    pub counts: BTreeMap<VertexClass, usize>,
}

impl ClassificationCounts {
    pub fn new(seed_size: usize, counts: &[(VertexClass, usize)]) -> Self {
        Self {
            seed_size,
            counts: counts.iter().copied().filter(|&(_, n)| n > 0).collect(),
        }
    }

    pub fn get(&self, class: VertexClass) -> usize {
        self.counts.get(&class).copied().unwrap_or(0)
    }

    /// Classified vertices plus the seed itself.
    pub fn accounted_vertices(&self) -> usize {
        self.seed_size + self.counts.values().sum::<usize>()
    }
}

impl fmt::Display for ClassificationCounts {
    /// `G=5,H=12,K=101`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(c, n)| format!("{c}={n}"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn classify_neighbors(p: &Polytope, seed: &[usize]) -> Result<ClassificationCounts> {
    if seed.is_empty() || seed.len() > p.name.max_seed() {
        return Err(Error::Argument(format!(
            "seed size {} outside 1..={} for the {}",
            seed.len(),
            p.name.max_seed(),
            p.name
        )));
    }
    if !p.is_clique(seed) {
        return Err(Error::Argument(format!("seed {seed:?} is not a clique")));
    }
    let seed_mask = seed.iter().fold(0u128, |m, &i| m | 1 << i);
    let mut counts = BTreeMap::new();
    for v in 0..p.vertex_count() {
        if seed_mask >> v & 1 == 1 {
            continue;
        }
        let touching = (p.adjacency[v] & seed_mask).count_ones() as usize;
        let class = p.name.child_class(touching).ok_or_else(|| {
            Error::Invariant(format!("vertex {v} touches {touching} seed members"))
        })?;
        *counts.entry(class).or_insert(0) += 1;
    }
    Ok(ClassificationCounts {
        seed_size: seed.len(),
        counts,
    })
}

/// Classification over every clique of one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustiveClassification {
    pub seed_size: usize,
    pub cliques: usize,
    /// Distinct outcomes with how many cliques produced each.
    pub outcomes: BTreeMap<String, (ClassificationCounts, usize)>,
}

impl ExhaustiveClassification {
    /// The common outcome, if every clique gave the same one.
    pub fn uniform(&self) -> Option<&ClassificationCounts> {
        match self.outcomes.len() {
            1 => self.outcomes.values().next().map(|(c, _)| c),
            _ => None,
        }
    }
}

pub fn classify_all(p: &Polytope, seed_size: usize) -> Result<ExhaustiveClassification> {
    let cliques = p.cliques(seed_size);
    let mut outcomes: BTreeMap<String, (ClassificationCounts, usize)> = BTreeMap::new();
    for clique in &cliques {
        let c = classify_neighbors(p, clique)?;
        outcomes.entry(c.to_string()).or_insert_with(|| (c, 0)).1 += 1;
    }
    Ok(ExhaustiveClassification {
        seed_size,
        cliques: cliques.len(),
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn icosahedron_counts() {
        let p = build_polytope(PolytopeName::Icosahedron);
        assert_eq!(
            (p.vertex_count(), p.edges.len(), p.triangles.len()),
            (12, 30, 20)
        );
        assert!(p.tetrahedra.is_empty());
        let s = incidence_stats(&p);
        assert_eq!(s.triangles_per_edge, Some(2));
        assert_eq!(s.edges_per_vertex, Some(5));
    }

    #[test]
    fn six_hundred_cell_has_120_distinct_unit_vertices() {
        let p = build_polytope(PolytopeName::SixHundredCell);
        assert_eq!(p.vertex_count(), 120);
        let four = golden(4, 0);
        for v in &p.vertices {
            assert_eq!(dot(v, v), four);
        }
        for w in p.vertices.windows(2) {
            assert_ne!(w[0], w[1]);
        }
    }

    #[test]
    fn even_permutations_count() {
        assert_eq!(even_permutations().len(), 12);
    }

    #[test]
    fn seed_validation() {
        let p = build_polytope(PolytopeName::Icosahedron);
        let far = (1..12).find(|&j| !p.is_adjacent(0, j)).unwrap();
        assert!(classify_neighbors(&p, &[0, far]).is_err());
        assert!(classify_neighbors(&p, &[]).is_err());
        assert!(classify_neighbors(&p, &[0, 0]).is_err());
        let t = p
            .tetrahedra
            .first()
            .map(|t| t.to_vec())
            .unwrap_or(vec![0, 1, 2, 3]);
        assert!(classify_neighbors(&p, &t).is_err());
    }

    #[test]
    fn icosahedron_single_seed() {
        let p = build_polytope(PolytopeName::Icosahedron);
        let c = classify_neighbors(&p, &[0]).unwrap();
        assert_eq!(c.to_string(), "D=5,E=6");
        assert_eq!(c.accounted_vertices(), 12);
    }

    #[test]
    fn adjacency_dump_round_trip() {
        let p = build_polytope(PolytopeName::Icosahedron);
        let q = Polytope::from_adjacency(PolytopeName::Icosahedron, &p.adjacency_dump()).unwrap();
        assert_eq!(q.edges, p.edges);
        assert_eq!(q.triangles, p.triangles);
        assert!(parse_adjacency("v1: 0\n").is_err());
        assert!(parse_adjacency("v0 1 2\n").is_err());
        assert!(Polytope::from_adjacency(PolytopeName::Icosahedron, "v0: 1\nv1:\n").is_err());
    }
}
