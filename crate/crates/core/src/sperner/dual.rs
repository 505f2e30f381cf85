//! The dual tetrahedral structure on a boundary sphere: four apexes, six arcs
//! joining them and four faces ("dual triangles").

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::complex::{Complex, Simplex, Vertex};
use crate::error::{Error, Result};
use crate::sperner::surface::edge_counts;

/// Index pairs `(i, j)` with `i < j`, in lexicographic order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Incidence role of a sphere vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    /// The apex `w_i`.
    Apex(usize),
    /// An inner vertex of the arc `β_ij` (`i < j`).
    Arc(usize, usize),
    /// A vertex inside the face opposite `w_l`, i.e. the dual triangle on the
    /// other three apexes.
    Region(usize),
}

impl Role {
    /// Colors a vertex with this role may receive.
    pub fn admissible(self) -> Vec<u8> {
        match self {
            Role::Apex(i) => vec![i as u8],
            Role::Arc(i, j) => vec![i as u8, j as u8],
            Role::Region(l) => (0..4u8).filter(|&c| c as usize != l).collect(),
        }
    }

    /// Whether a vertex with this role may lie in face `l`.
    fn fits_face(self, l: usize) -> bool {
        match self {
            Role::Apex(i) => i != l,
            Role::Arc(i, j) => i != l && j != l,
            Role::Region(m) => m == l,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Apex(i) => write!(f, "apex w{i}"),
            Role::Arc(i, j) => write!(f, "arc b{i}{j}"),
            Role::Region(l) => write!(f, "region {l}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualStructure {
    pub apexes: [Vertex; 4],
    /// `arcs[&(i, j)]` runs from `w_i` to `w_j`.
    pub arcs: BTreeMap<(usize, usize), Vec<Vertex>>,
    /// `faces[l]` holds the sphere triangles of the face opposite `w_l`.
    pub faces: [Vec<Simplex>; 4],
}

impl DualStructure {
    /// Apexes at the four vertices of a tetrahedron, arcs along its edges and
    /// faces the triangles opposite each apex.
    pub fn of_tetrahedron(w: [Vertex; 4]) -> Result<Self> {
        let arcs = PAIRS.iter().map(|&(i, j)| ((i, j), vec![w[i], w[j]])).collect();
        let mut faces: [Vec<Simplex>; 4] = Default::default();
        for (l, face) in faces.iter_mut().enumerate() {
            let others: Vec<Vertex> = (0..4).filter(|&i| i != l).map(|i| w[i]).collect();
            face.push(Simplex::new(others)?);
        }
        Ok(DualStructure { apexes: w, arcs, faces })
    }

    /// Builds the structure from apexes and arcs, assigning each component
    /// of the sphere cut along the arcs to the face whose bounding arcs avoid
    /// its index.
    pub fn from_arcs(
        sphere: &Complex,
        apexes: [Vertex; 4],
        arcs: BTreeMap<(usize, usize), Vec<Vertex>>,
    ) -> Result<Self> {
        let arc_edges: BTreeMap<(Vertex, Vertex), (usize, usize)> = arcs
            .iter()
            .flat_map(|(&pair, path)| path.windows(2).map(move |w| (ordered(w[0], w[1]), pair)))
            .collect();
        let tris: Vec<Simplex> = sphere.simplices_of_dim(2).cloned().collect();
        let mut by_edge: BTreeMap<(Vertex, Vertex), Vec<usize>> = BTreeMap::new();
        for (i, t) in tris.iter().enumerate() {
            for e in tri_edges(t) {
                by_edge.entry(e).or_default().push(i);
            }
        }
        let mut faces: [Vec<Simplex>; 4] = Default::default();
        let mut seen = vec![false; tris.len()];
        for start in 0..tris.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![];
            let mut bounding: BTreeSet<(usize, usize)> = BTreeSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(i) = stack.pop() {
                comp.push(i);
                for e in tri_edges(&tris[i]) {
                    if let Some(&pair) = arc_edges.get(&e) {
                        bounding.insert(pair);
                        continue;
                    }
                    for &j in &by_edge[&e] {
                        if !seen[j] {
                            seen[j] = true;
                            stack.push(j);
                        }
                    }
                }
            }
            let candidates: Vec<usize> =
                (0..4).filter(|&l| bounding.iter().all(|&(i, j)| i != l && j != l)).collect();
            let [l] = candidates[..] else {
                return Err(Error::input(format!(
                    "a component of the sphere cut along the arcs is bounded by arcs {bounding:?}"
                )));
            };
            faces[l].extend(comp.into_iter().map(|i| tris[i].clone()));
        }
        for f in faces.iter_mut() {
            f.sort();
        }
        Ok(DualStructure { apexes, arcs, faces })
    }

    /// Role of every vertex touched by the structure. Apexes and arc vertices
    /// take precedence; every other vertex of face `l` gets `Region(l)`.
    pub fn roles(&self) -> BTreeMap<Vertex, Role> {
        let mut roles = BTreeMap::new();
        for (l, face) in self.faces.iter().enumerate() {
            for t in face {
                for &v in t.vertices() {
                    roles.insert(v, Role::Region(l));
                }
            }
        }
        for (&(i, j), path) in &self.arcs {
            for &v in path {
                roles.insert(v, Role::Arc(i, j));
            }
        }
        for (i, &w) in self.apexes.iter().enumerate() {
            roles.insert(w, Role::Apex(i));
        }
        roles
    }
}

fn ordered(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn tri_edges(t: &Simplex) -> [(Vertex, Vertex); 3] {
    let v = t.vertices();
    [(v[0], v[1]), (v[0], v[2]), (v[1], v[2])]
}

/// First violated condition of a dual structure on `sphere`, if any.
///
/// Apexes must be distinct sphere vertices. Each arc `β_ij` must be a simple
/// edge path from `w_i` to `w_j`; two arcs meet at most in a shared apex.
/// The faces must partition the sphere's triangles, a non-arc vertex may
/// belong to one face only, every vertex of a face-`l` triangle must be an
/// apex or arc avoiding `l` or a region-`l` vertex, and inside each face the
/// edges lying in exactly one triangle must be exactly the edges of the
/// three arcs avoiding `l`.
pub fn dual_defect(sphere: &Complex, d: &DualStructure) -> Option<String> {
    let w = d.apexes;
    for i in 0..4 {
        if !sphere.has_vertex(w[i]) {
            return Some(format!("apex w{i}={} is not a sphere vertex", w[i]));
        }
        for j in 0..i {
            if w[i] == w[j] {
                return Some(format!("apexes w{j} and w{i} coincide"));
            }
        }
    }
    for &(i, j) in &PAIRS {
        let Some(path) = d.arcs.get(&(i, j)) else {
            return Some(format!("arc b{i}{j} missing"));
        };
        if path.len() < 2 || path[0] != w[i] || path[path.len() - 1] != w[j] {
            return Some(format!("arc b{i}{j} does not run from w{i} to w{j}"));
        }
        if path.iter().collect::<BTreeSet<_>>().len() != path.len() {
            return Some(format!("arc b{i}{j} is not simple"));
        }
        if let Some(e) = path.windows(2).find(|e| !sphere.is_adjacent(e[0], e[1])) {
            return Some(format!("arc b{i}{j} uses non-edge {}-{}", e[0], e[1]));
        }
    }
    if d.arcs.len() != 6 {
        return Some("unexpected arc index pair".into());
    }
    for (a, &(i, j)) in PAIRS.iter().enumerate() {
        for &(k, l) in &PAIRS[a + 1..] {
            let p: BTreeSet<Vertex> = d.arcs[&(i, j)].iter().copied().collect();
            let q: BTreeSet<Vertex> = d.arcs[&(k, l)].iter().copied().collect();
            let common: BTreeSet<Vertex> = p.intersection(&q).copied().collect();
            let shared: BTreeSet<Vertex> = [i, j].into_iter().filter(|m| *m == k || *m == l).map(|m| w[m]).collect();
            if common != shared {
                return Some(format!("arcs b{i}{j} and b{k}{l} meet in {common:?}"));
            }
        }
    }
    let sphere_tris: BTreeSet<&Simplex> = sphere.simplices_of_dim(2).collect();
    let mut covered = BTreeSet::new();
    for (l, face) in d.faces.iter().enumerate() {
        for t in face {
            if !sphere_tris.contains(t) {
                return Some(format!("face {l} triangle {t} is not on the sphere"));
            }
            if !covered.insert(t) {
                return Some(format!("triangle {t} lies in two faces"));
            }
        }
    }
    if covered.len() != sphere_tris.len() {
        let t = sphere_tris.iter().find(|t| !covered.contains(*t)).unwrap();
        return Some(format!("sphere triangle {t} lies in no face"));
    }
    let arc_vertices: BTreeMap<Vertex, Role> = d
        .arcs
        .iter()
        .flat_map(|(&(i, j), p)| p.iter().map(move |&v| (v, Role::Arc(i, j))))
        .chain(w.iter().enumerate().map(|(i, &v)| (v, Role::Apex(i))))
        .collect();
    let mut region_of: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (l, face) in d.faces.iter().enumerate() {
        for t in face {
            for &v in t.vertices() {
                let role = match arc_vertices.get(&v) {
                    Some(&r) => r,
                    None => {
                        if let Some(&m) = region_of.get(&v) {
                            if m != l {
                                return Some(format!("vertex {v} lies in faces {m} and {l}"));
                            }
                        }
                        region_of.insert(v, l);
                        Role::Region(l)
                    }
                };
                if !role.fits_face(l) {
                    return Some(format!("vertex {v} ({role}) lies in face {l}"));
                }
            }
        }
    }
    for (l, face) in d.faces.iter().enumerate() {
        let bounding: BTreeSet<(Vertex, Vertex)> = PAIRS
            .iter()
            .filter(|&&(i, j)| i != l && j != l)
            .flat_map(|p| d.arcs[p].windows(2).map(|e| ordered(e[0], e[1])))
            .collect();
        let counts = edge_counts(face);
        for (e, &c) in &counts {
            let want = if bounding.contains(e) { 1 } else { 2 };
            if c != want {
                return Some(format!("edge {}-{} lies in {c} triangles of face {l}", e.0, e.1));
            }
        }
        if let Some(e) = bounding.iter().find(|e| !counts.contains_key(e)) {
            return Some(format!("arc edge {}-{} does not bound face {l}", e.0, e.1));
        }
    }
    None
}

/// Errors with the first violated condition.
pub fn validate_dual(sphere: &Complex, d: &DualStructure) -> Result<()> {
    match dual_defect(sphere, d) {
        None => Ok(()),
        Some(why) => Err(Error::input(format!("invalid dual structure: {why}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn tetrahedron_dual_is_valid() {
        let d = DualStructure::of_tetrahedron([0, 1, 2, 3].map(Vertex)).unwrap();
        assert_eq!(dual_defect(&generate::tetra_boundary(), &d), None);
        let rebuilt =
            DualStructure::from_arcs(&generate::tetra_boundary(), d.apexes, d.arcs.clone()).unwrap();
        assert_eq!(rebuilt, d);
        assert!(d.roles().values().all(|r| matches!(r, Role::Apex(_))));
    }

    #[test]
    fn bad_arcs_are_rejected() {
        let mut d = DualStructure::of_tetrahedron([0, 1, 2, 3].map(Vertex)).unwrap();
        d.arcs.insert((0, 1), vec![Vertex(0), Vertex(2), Vertex(1)]);
        assert!(dual_defect(&generate::tetra_boundary(), &d).is_some());
        let mut d = DualStructure::of_tetrahedron([0, 1, 2, 3].map(Vertex)).unwrap();
        d.faces.swap(0, 1);
        assert!(dual_defect(&generate::tetra_boundary(), &d).is_some());
        let mut d = DualStructure::of_tetrahedron([0, 1, 2, 3].map(Vertex)).unwrap();
        d.faces[3].clear();
        assert!(validate_dual(&generate::tetra_boundary(), &d).is_err());
    }
}
