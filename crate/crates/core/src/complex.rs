//! Finite abstract simplicial complexes and the basic operators on them.
//!
//! A [`Complex`] stores every simplex explicitly (not just the maximal ones), so
//! membership tests are a single lookup. All operators return new complexes;
//! nothing here mutates a complex after construction.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// An opaque vertex label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Vertex {
    fn from(v: u32) -> Self {
        Vertex(v)
    }
}

/// A nonempty, strictly increasing list of vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Builds a simplex from vertices in any order. Duplicates and the empty
    /// list are rejected.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::input("empty simplex"));
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!("duplicate vertex {} in simplex", w[0])));
        }
        Ok(Simplex(vertices))
    }

    /// Like [`Simplex::new`] but collapses repeated vertices instead of
    /// rejecting them. Used for images of simplices under simplicial maps.
    pub fn from_image(vertices: impl IntoIterator<Item = Vertex>) -> Option<Self> {
        let set: BTreeSet<Vertex> = vertices.into_iter().collect();
        if set.is_empty() {
            None
        } else {
            Some(Simplex(set.into_iter().collect()))
        }
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex(vec![v])
    }

    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Self {
        debug_assert!(!vertices.is_empty() && vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        !self.0.iter().any(|v| other.contains(*v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let set: BTreeSet<Vertex> = self.0.iter().chain(other.0.iter()).copied().collect();
        Simplex(set.into_iter().collect())
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex((0..n).filter(|i| mask & (1 << i) != 0).map(|i| self.0[i]).collect())
        })
    }

    /// Codimension-one faces.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|skip| {
                Simplex(self.0.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v).collect())
            })
            .collect()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Shorthand used throughout the crate and its tests.
pub fn simplex(vs: &[u32]) -> Simplex {
    Simplex::new(vs.iter().map(|&v| Vertex(v)).collect()).expect("valid simplex literal")
}

/// A simple undirected graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Graph {
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self> {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> =
            vertices.into_iter().map(|v| (v, BTreeSet::new())).collect();
        for (a, b) in edges {
            if a == b {
                return Err(Error::input(format!("loop at vertex {a}")));
            }
            if !adj.contains_key(&a) || !adj.contains_key(&b) {
                return Err(Error::input(format!("edge {a}-{b} has an endpoint outside the vertex set")));
            }
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
        Ok(Graph { adj })
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&a, nb)| nb.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    pub fn num_edges(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn is_adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.adj.get(&a).is_some_and(|nb| nb.contains(&b))
    }

    /// Breadth-first distances from `source`; unreachable vertices are absent.
    pub fn distances_from(&self, source: Vertex) -> BTreeMap<Vertex, usize> {
        let mut dist = BTreeMap::new();
        if !self.has_vertex(source) {
            return dist;
        }
        dist.insert(source, 0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[&u];
            for w in self.neighbors(u) {
                if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(w) {
                    e.insert(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let comp: Vec<Vertex> = self.distances_from(v).into_keys().collect();
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }
}

/// A finite abstract simplicial complex, stored closed under faces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Complex {
    simplices: BTreeSet<Simplex>,
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl Complex {
    pub fn empty() -> Self {
        Complex::default()
    }

    /// Face closure of the given simplices.
    pub fn from_simplices<I>(simplices: I) -> Self
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut all = BTreeSet::new();
        for s in simplices {
            if all.contains(&s) {
                continue;
            }
            all.extend(s.faces());
        }
        Self::from_closed_set(all)
    }

    /// Face closure of a list of vertex lists; rejects lists with repeated
    /// vertices.
    pub fn from_vertex_lists<I, L>(lists: I) -> Result<Self>
    where
        I: IntoIterator<Item = L>,
        L: IntoIterator<Item = Vertex>,
    {
        let simplices = lists
            .into_iter()
            .map(|l| Simplex::new(l.into_iter().collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_simplices(simplices))
    }

    fn from_closed_set(simplices: BTreeSet<Simplex>) -> Self {
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
        for s in &simplices {
            match s.vertices() {
                [v] => {
                    adj.entry(*v).or_default();
                }
                [a, b] => {
                    adj.entry(*a).or_default().insert(*b);
                    adj.entry(*b).or_default().insert(*a);
                }
                _ => {}
            }
        }
        Complex { simplices, adj }
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn num_simplices(&self) -> usize {
        self.simplices.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn simplices_of_dim(&self, d: usize) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().filter(move |s| s.dim() == d)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    /// Whether the given vertices (repeats allowed) span a simplex.
    pub fn spans(&self, vertices: impl IntoIterator<Item = Vertex>) -> bool {
        Simplex::from_image(vertices).is_some_and(|s| self.contains(&s))
    }

    pub fn dimension(&self) -> Option<usize> {
        self.simplices.iter().map(Simplex::dim).max()
    }

    /// Number of simplices per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dimension().map_or(0, |d| d + 1)];
        for s in &self.simplices {
            f[s.dim()] += 1;
        }
        f
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<Simplex> = BTreeSet::new();
        for s in &self.simplices {
            covered.extend(s.facets());
        }
        self.simplices.iter().filter(|s| !covered.contains(*s)).cloned().collect()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flatten().copied()
    }

    pub fn neighbor_set(&self, v: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.adj.get(&v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn is_adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.adj.get(&a).is_some_and(|nb| nb.contains(&b))
    }

    pub fn one_skeleton(&self) -> Graph {
        Graph { adj: self.adj.clone() }
    }

    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.first_simplex_outside(other).is_none()
    }

    pub(crate) fn first_simplex_outside(&self, other: &Complex) -> Option<&Simplex> {
        self.simplices.iter().find(|s| !other.contains(s))
    }

    pub fn intersection(&self, other: &Complex) -> Complex {
        Self::from_closed_set(self.simplices.intersection(&other.simplices).cloned().collect())
    }

    pub fn union(&self, other: &Complex) -> Complex {
        Self::from_closed_set(self.simplices.union(&other.simplices).cloned().collect())
    }

    /// Link of `s`: simplices disjoint from `s` whose union with `s` is a
    /// simplex.
    pub fn link(&self, s: &Simplex) -> Result<Complex> {
        if !self.contains(s) {
            return Err(Error::domain(format!("simplex {s} is not in the complex")));
        }
        let link = self
            .simplices
            .iter()
            .filter(|t| t.is_disjoint(s) && self.contains(&t.union(s)))
            .cloned()
            .collect();
        Ok(Self::from_closed_set(link))
    }

    /// Closed star of `s`: every simplex containing `s`, with all faces.
    pub fn closed_star(&self, s: &Simplex) -> Result<Complex> {
        if !self.contains(s) {
            return Err(Error::domain(format!("simplex {s} is not in the complex")));
        }
        let cofaces = self.simplices.iter().filter(|t| s.vertices().iter().all(|v| t.contains(*v)));
        Ok(Self::from_simplices(cofaces.cloned()))
    }

    /// Every simplex of `self` with all vertices in `vs`.
    pub fn full_subcomplex(&self, vs: &BTreeSet<Vertex>) -> Result<Complex> {
        if let Some(v) = vs.iter().find(|v| !self.has_vertex(**v)) {
            return Err(Error::domain(format!("vertex {v} is not in the complex")));
        }
        Ok(self.full_subcomplex_unchecked(vs))
    }

    pub(crate) fn full_subcomplex_unchecked(&self, vs: &BTreeSet<Vertex>) -> Complex {
        Self::from_closed_set(
            self.simplices
                .iter()
                .filter(|s| s.vertices().iter().all(|v| vs.contains(v)))
                .cloned()
                .collect(),
        )
    }

    /// Smallest subcomplex containing every simplex of `self` that is not in
    /// `y`.
    pub fn complement(&self, y: &Complex) -> Result<Complex> {
        if let Some(s) = y.first_simplex_outside(self) {
            return Err(Error::domain(format!("simplex {s} of the subtrahend is not in the complex")));
        }
        Ok(Self::from_simplices(self.simplices.difference(&y.simplices).cloned()))
    }

    /// Full subcomplex on the closed neighbourhood of `v`.
    pub fn one_ball(&self, v: Vertex) -> Result<Complex> {
        let nb = self
            .adj
            .get(&v)
            .ok_or_else(|| Error::domain(format!("vertex {v} is not in the complex")))?;
        let mut vs = nb.clone();
        vs.insert(v);
        Ok(self.full_subcomplex_unchecked(&vs))
    }

    /// Union of the simplices containing `v` (the alternative reading of a
    /// 1-ball; coincides with [`Complex::one_ball`] on flag complexes).
    pub fn one_ball_star(&self, v: Vertex) -> Result<Complex> {
        self.closed_star(&Simplex::vertex(v))
    }

    /// Join with a complex on a disjoint vertex set.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        if let Some(v) = self.vertices().find(|v| other.has_vertex(*v)) {
            return Err(Error::domain(format!("join operands share vertex {v}")));
        }
        let mut all: BTreeSet<Simplex> = self.simplices.union(&other.simplices).cloned().collect();
        for s in &self.simplices {
            for t in &other.simplices {
                all.insert(s.union(t));
            }
        }
        Ok(Self::from_closed_set(all))
    }

    /// Vertex classes of the 1-skeleton's reachability relation.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        self.one_skeleton().connected_components()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// True iff every clique of the 1-skeleton spans a simplex.
    pub fn is_flag(&self) -> bool {
        let g = self.one_skeleton();
        let mut ok = true;
        for_each_clique(&g, None, &mut |c| {
            if c.len() >= 3 && !self.contains(&Simplex::from_sorted(c.to_vec())) {
                ok = false;
            }
            ok
        });
        ok
    }
}

/// Calls `visit` on every clique of `g` (as a sorted vertex list) with at most
/// `max_size` vertices. Enumeration stops once `visit` returns false.
pub(crate) fn for_each_clique(g: &Graph, max_size: Option<usize>, visit: &mut dyn FnMut(&[Vertex]) -> bool) {
    fn extend(
        g: &Graph,
        clique: &mut Vec<Vertex>,
        candidates: &[Vertex],
        max_size: Option<usize>,
        visit: &mut dyn FnMut(&[Vertex]) -> bool,
    ) -> bool {
        if !visit(clique) {
            return false;
        }
        if max_size.is_some_and(|m| clique.len() >= m) {
            return true;
        }
        for (i, &v) in candidates.iter().enumerate() {
            let nb = g.neighbor_set(v).expect("candidate is a vertex");
            let next: Vec<Vertex> = candidates[i + 1..].iter().copied().filter(|w| nb.contains(w)).collect();
            clique.push(v);
            let go_on = extend(g, clique, &next, max_size, visit);
            clique.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    let vertices: Vec<Vertex> = g.vertices().collect();
    for (i, &v) in vertices.iter().enumerate() {
        let nb = g.neighbor_set(v).expect("vertex");
        let candidates: Vec<Vertex> = vertices[i + 1..].iter().copied().filter(|w| nb.contains(w)).collect();
        let mut clique = vec![v];
        if !extend(g, &mut clique, &candidates, max_size, visit) {
            return;
        }
    }
}

/// Flag (clique) complex of `g`. With `max_dim = Some(d)` only cliques of
/// dimension at most `d` are kept.
pub fn flag_complex(g: &Graph, max_dim: Option<usize>) -> Complex {
    let mut simplices = BTreeSet::new();
    for_each_clique(g, max_dim.map(|d| d + 1), &mut |c| {
        simplices.insert(Simplex::from_sorted(c.to_vec()));
        true
    });
    Complex::from_closed_set(simplices)
}

/// A finite set of labelled points with a symmetric dissimilarity matrix.
/// The triangle inequality is not required.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteMetric {
    points: Vec<Vertex>,
    dist: Vec<Vec<f64>>,
}

impl FiniteMetric {
    pub fn new(points: Vec<Vertex>, dist: Vec<Vec<f64>>) -> Result<Self> {
        let n = points.len();
        if dist.len() != n || dist.iter().any(|row| row.len() != n) {
            return Err(Error::input(format!("distance matrix must be {n}x{n}")));
        }
        if points.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(Error::input("duplicate point label"));
        }
        for i in 0..n {
            if dist[i][i] != 0.0 {
                return Err(Error::input(format!("nonzero diagonal entry at {i}")));
            }
            for j in 0..n {
                let d = dist[i][j];
                if !(d >= 0.0) || d != dist[j][i] {
                    return Err(Error::input(format!("entry ({i},{j}) is negative or asymmetric")));
                }
            }
        }
        Ok(FiniteMetric { points, dist })
    }

    /// Points on the real line at the given coordinates, labelled 0..n.
    pub fn on_line(coords: &[f64]) -> Self {
        let points = (0..coords.len() as u32).map(Vertex).collect();
        let dist = coords.iter().map(|a| coords.iter().map(|b| (a - b).abs()).collect()).collect();
        FiniteMetric { points, dist }
    }

    pub fn points(&self) -> &[Vertex] {
        &self.points
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.dist[i][j]
    }
}

/// Rips complex at scale `r`: the flag complex of the graph joining points at
/// distance at most `r`, truncated at `max_dim`.
pub fn rips_complex(m: &FiniteMetric, r: f64, max_dim: usize) -> Result<Complex> {
    if !(r >= 0.0) {
        return Err(Error::input(format!("scale must be non-negative, got {r}")));
    }
    let n = m.points.len();
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| m.dist[i][j] <= r)
        .map(|(i, j)| (m.points[i], m.points[j]));
    let g = Graph::new(m.points.iter().copied(), edges)?;
    Ok(flag_complex(&g, Some(max_dim)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    fn vs(v: &[u32]) -> BTreeSet<Vertex> {
        v.iter().map(|&x| Vertex(x)).collect()
    }

    fn graph(n: u32, edges: &[(u32, u32)]) -> Graph {
        Graph::new((0..n).map(Vertex), edges.iter().map(|&(a, b)| (Vertex(a), Vertex(b)))).unwrap()
    }

    /// Brute-force clique oracle: every vertex subset that is pairwise adjacent.
    fn cliques_by_subsets(g: &Graph) -> BTreeSet<Simplex> {
        let verts: Vec<Vertex> = g.vertices().collect();
        let n = verts.len();
        let mut out = BTreeSet::new();
        for mask in 1u32..(1 << n) {
            let sub: Vec<Vertex> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| verts[i]).collect();
            let ok = sub.iter().enumerate().all(|(i, a)| sub[i + 1..].iter().all(|b| g.is_adjacent(*a, *b)));
            if ok {
                out.insert(Simplex::new(sub).unwrap());
            }
        }
        out
    }

    #[test]
    fn closure_of_single_triangle() {
        let x = Complex::from_simplices([simplex(&[0, 1, 2])]);
        assert_eq!(x.num_simplices(), 7);
        assert_eq!(x.f_vector(), vec![3, 3, 1]);
    }

    #[test]
    fn closure_of_empty_list() {
        let x = Complex::from_simplices(Vec::new());
        assert!(x.is_empty());
        assert_eq!(x.dimension(), None);
    }

    #[test]
    fn closure_of_two_triangles_shares_edge() {
        let x = Complex::from_simplices([simplex(&[0, 1, 2]), simplex(&[1, 2, 3])]);
        // 4 vertices, 5 edges (bc once), 2 triangles
        assert_eq!(x.f_vector(), vec![4, 5, 2]);
        assert_eq!(x.num_simplices(), 11);
    }

    #[test]
    fn duplicate_vertex_is_rejected() {
        let err = Complex::from_vertex_lists([vec![Vertex(1), Vertex(1), Vertex(2)]]).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn flag_of_six_cycle_has_no_triangles() {
        let g = generate::cycle(6).unwrap().one_skeleton();
        let x = flag_complex(&g, None);
        assert_eq!(x.f_vector(), vec![6, 6]);
    }

    #[test]
    fn flag_of_k4_is_solid_tetrahedron() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let x = flag_complex(&g, None);
        assert!(x.contains(&simplex(&[0, 1, 2, 3])));
        assert_eq!(x.num_simplices(), 15);
    }

    #[test]
    fn flag_of_octahedron_graph_matches_clique_oracle() {
        let g = generate::octahedron().one_skeleton();
        let x = flag_complex(&g, None);
        let oracle = cliques_by_subsets(&g);
        assert_eq!(x.simplices().cloned().collect::<BTreeSet<_>>(), oracle);
        assert_eq!(x.f_vector(), vec![6, 12, 8]);
    }

    #[test]
    fn flag_complex_respects_max_dim() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let x = flag_complex(&g, Some(1));
        assert_eq!(x.dimension(), Some(1));
    }

    #[test]
    fn hollow_tetrahedron_is_not_flag() {
        assert!(!generate::tetra_boundary().is_flag());
        assert!(generate::octahedron().is_flag());
        assert!(generate::icosahedron().is_flag());
    }

    #[test]
    fn link_in_octahedron_is_four_cycle() {
        let x = generate::octahedron();
        let l = x.link(&simplex(&[0])).unwrap();
        assert_eq!(l.f_vector(), vec![4, 4]);
        assert!(!l.has_vertex(Vertex(0)) && !l.has_vertex(Vertex(1)));
        assert!(l.vertices().all(|v| l.degree(v) == 2));
    }

    #[test]
    fn link_of_edge_in_triangle_is_opposite_vertex() {
        let x = Complex::from_simplices([simplex(&[0, 1, 2])]);
        let l = x.link(&simplex(&[0, 1])).unwrap();
        assert_eq!(l, Complex::from_simplices([simplex(&[2])]));
    }

    #[test]
    fn icosahedron_vertex_links_are_five_cycles() {
        let x = generate::icosahedron();
        for v in x.vertices() {
            let l = x.link(&Simplex::vertex(v)).unwrap();
            assert_eq!(l.f_vector(), vec![5, 5]);
            assert!(l.is_connected());
        }
    }

    #[test]
    fn link_of_missing_simplex_is_domain_error() {
        let x = generate::cycle(6).unwrap();
        assert!(matches!(x.link(&simplex(&[0, 2])), Err(Error::Domain(_))));
    }

    #[test]
    fn full_subcomplex_on_antipodes_is_discrete() {
        let x = generate::octahedron();
        let y = x.full_subcomplex(&vs(&[0, 1])).unwrap();
        assert_eq!(y.f_vector(), vec![2]);
        assert_eq!(x.full_subcomplex(&x.vertex_set()).unwrap(), x);
        let t = Complex::from_simplices([simplex(&[0, 1, 2])]);
        assert_eq!(t.full_subcomplex(&vs(&[0, 1])).unwrap(), Complex::from_simplices([simplex(&[0, 1])]));
        assert!(matches!(t.full_subcomplex(&vs(&[7])), Err(Error::Domain(_))));
    }

    #[test]
    fn complement_examples() {
        let x = Complex::from_simplices([simplex(&[0, 1, 2]), simplex(&[1, 2, 3])]);
        assert_eq!(x.complement(&Complex::empty()).unwrap(), x);
        assert!(x.complement(&x).unwrap().is_empty());
        let y = Complex::from_simplices([simplex(&[0, 1, 2])]);
        assert_eq!(x.complement(&y).unwrap(), Complex::from_simplices([simplex(&[1, 2, 3])]));
        let z = Complex::from_simplices([simplex(&[0, 3])]);
        assert!(matches!(x.complement(&z), Err(Error::Domain(_))));
    }

    #[test]
    fn one_ball_examples() {
        let x = generate::octahedron();
        let b = x.one_ball(Vertex(0)).unwrap();
        assert_eq!(b.vertex_set(), vs(&[0, 2, 3, 4, 5]));
        assert_eq!(b.f_vector(), vec![5, 8, 4]);
        let iso = Complex::from_simplices([simplex(&[9])]);
        assert_eq!(iso.one_ball(Vertex(9)).unwrap(), iso);
        let cone = generate::cone(&generate::cycle(6).unwrap());
        let apex = cone.vertices().max().unwrap();
        assert_eq!(cone.one_ball(apex).unwrap(), cone);
        assert_eq!(x.one_ball_star(Vertex(0)).unwrap(), b);
    }

    #[test]
    fn rips_on_a_line() {
        let m = FiniteMetric::on_line(&[0.0, 1.0, 2.0]);
        let r1 = rips_complex(&m, 1.0, 3).unwrap();
        assert_eq!(r1.f_vector(), vec![3, 2]);
        let r2 = rips_complex(&m, 2.0, 3).unwrap();
        assert!(r2.contains(&simplex(&[0, 1, 2])));
        let r0 = rips_complex(&m, 0.0, 3).unwrap();
        assert_eq!(r0.f_vector(), vec![3]);
        assert!(rips_complex(&m, -1.0, 3).is_err());
    }

    #[test]
    fn metric_validation() {
        let bad = FiniteMetric::new(vec![Vertex(0), Vertex(1)], vec![vec![0.0, 1.0], vec![2.0, 0.0]]);
        assert!(bad.is_err());
        let diag = FiniteMetric::new(vec![Vertex(0)], vec![vec![1.0]]);
        assert!(diag.is_err());
    }

    #[test]
    fn components() {
        assert_eq!(generate::cycle(6).unwrap().connected_components().len(), 1);
        let two = Complex::from_simplices([simplex(&[0, 1, 2]), simplex(&[3, 4, 5])]);
        assert_eq!(two.connected_components().len(), 2);
        assert!(Complex::empty().connected_components().is_empty());
    }

    #[test]
    fn join_of_point_and_cycle_is_cone() {
        let c5 = generate::cycle(5).unwrap();
        let p = Complex::from_simplices([simplex(&[10])]);
        assert_eq!(c5.join(&p).unwrap().f_vector(), vec![6, 10, 5]);
        assert!(c5.join(&c5).is_err());
    }

    #[test]
    fn graph_rejects_loops() {
        assert!(Graph::new([Vertex(0)], [(Vertex(0), Vertex(0))]).is_err());
    }
}
