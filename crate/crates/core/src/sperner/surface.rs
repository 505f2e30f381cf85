//! Combinatorial checks for triangulated surfaces given as triangle lists.

use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Simplex, Vertex};

/// Shape of a connected triangulated surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SurfaceInfo {
    pub euler: i64,
    /// Number of boundary circles.
    pub boundary_components: usize,
}

impl SurfaceInfo {
    pub fn is_sphere(&self) -> bool {
        self.euler == 2 && self.boundary_components == 0
    }

    pub fn is_disc(&self) -> bool {
        self.euler == 1 && self.boundary_components == 1
    }
}

/// Why a triangle list fails to be a connected surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum SurfaceDefect {
    Empty,
    EdgeInTooManyTriangles(Vertex, Vertex),
    SingularVertex(Vertex),
    Disconnected,
}

fn edges_of(t: &Simplex) -> [(Vertex, Vertex); 3] {
    let v = t.vertices();
    [(v[0], v[1]), (v[0], v[2]), (v[1], v[2])]
}

/// Edge incidence counts of a triangle list.
pub(crate) fn edge_counts<'a>(tris: impl IntoIterator<Item = &'a Simplex>) -> BTreeMap<(Vertex, Vertex), usize> {
    let mut counts = BTreeMap::new();
    for t in tris {
        for e in edges_of(t) {
            *counts.entry(e).or_insert(0) += 1;
        }
    }
    counts
}

/// Checks that `tris` (2-simplices) form a connected 2-manifold, possibly
/// with boundary: each edge lies in one or two triangles and the triangles
/// around each vertex form a single fan or a single closed disc.
pub(crate) fn surface_info(tris: &[Simplex]) -> Result<SurfaceInfo, SurfaceDefect> {
    if tris.is_empty() {
        return Err(SurfaceDefect::Empty);
    }
    let counts = edge_counts(tris);
    if let Some((&(a, b), _)) = counts.iter().find(|(_, &c)| c > 2) {
        return Err(SurfaceDefect::EdgeInTooManyTriangles(a, b));
    }
    // vertex links: edges opposite v in triangles containing v
    let mut link: BTreeMap<Vertex, Vec<(Vertex, Vertex)>> = BTreeMap::new();
    for t in tris {
        let v = t.vertices();
        link.entry(v[0]).or_default().push((v[1], v[2]));
        link.entry(v[1]).or_default().push((v[0], v[2]));
        link.entry(v[2]).or_default().push((v[0], v[1]));
    }
    for (&v, edges) in &link {
        if !is_path_or_cycle(edges) {
            return Err(SurfaceDefect::SingularVertex(v));
        }
    }
    // connectivity through shared edges
    let mut by_edge: BTreeMap<(Vertex, Vertex), Vec<usize>> = BTreeMap::new();
    for (i, t) in tris.iter().enumerate() {
        for e in edges_of(t) {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut seen = vec![false; tris.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for e in edges_of(&tris[i]) {
            for &j in &by_edge[&e] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(SurfaceDefect::Disconnected);
    }
    let boundary: Vec<(Vertex, Vertex)> = counts.iter().filter(|(_, &c)| c == 1).map(|(&e, _)| e).collect();
    let v = link.len() as i64;
    let e = counts.len() as i64;
    let f = tris.len() as i64;
    Ok(SurfaceInfo { euler: v - e + f, boundary_components: graph_components(&boundary) })
}

/// True iff the edges form one simple path or one simple cycle.
fn is_path_or_cycle(edges: &[(Vertex, Vertex)]) -> bool {
    let mut deg: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut uniq = BTreeSet::new();
    for &(a, b) in edges {
        let key = if a < b { (a, b) } else { (b, a) };
        if !uniq.insert(key) {
            return false;
        }
        *deg.entry(a).or_default() += 1;
        *deg.entry(b).or_default() += 1;
    }
    if deg.values().any(|&d| d > 2) {
        return false;
    }
    let ends = deg.values().filter(|&&d| d == 1).count();
    (ends == 0 || ends == 2) && graph_components(edges) == 1
}

pub(crate) fn graph_components(edges: &[(Vertex, Vertex)]) -> usize {
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    fn find(p: &mut BTreeMap<Vertex, Vertex>, v: Vertex) -> Vertex {
        let mut r = v;
        while p[&r] != r {
            r = p[&r];
        }
        p.insert(v, r);
        r
    }
    for &(a, b) in edges {
        parent.entry(a).or_insert(a);
        parent.entry(b).or_insert(b);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent.insert(ra, rb);
        }
    }
    let keys: Vec<Vertex> = parent.keys().copied().collect();
    keys.into_iter().filter(|&v| find(&mut parent, v) == v).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::simplex;

    #[test]
    fn shapes() {
        let tet = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]].map(|t| simplex(&t)).to_vec();
        assert!(surface_info(&tet).unwrap().is_sphere());
        assert!(surface_info(&tet[..3]).unwrap().is_disc());
        let bowtie = vec![simplex(&[0, 1, 2]), simplex(&[0, 3, 4])];
        assert_eq!(surface_info(&bowtie), Err(SurfaceDefect::SingularVertex(Vertex(0))));
        let fin = vec![simplex(&[0, 1, 2]), simplex(&[0, 1, 3]), simplex(&[0, 1, 4])];
        assert_eq!(surface_info(&fin), Err(SurfaceDefect::EdgeInTooManyTriangles(Vertex(0), Vertex(1))));
    }
}
