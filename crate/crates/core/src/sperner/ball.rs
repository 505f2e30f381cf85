//! Triangulated 3-balls given by their tetrahedra.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::complex::{Complex, Simplex, Vertex};
use crate::error::{Error, Result};
use crate::sperner::surface::{surface_info, SurfaceDefect};

/// A triangulated 3-disc: tetrahedra plus the boundary 2-sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball3 {
    tets: Vec<Simplex>,
    boundary: Complex,
}

impl Ball3 {
    /// Tetrahedra and explicit boundary triangles. Only the shapes of the
    /// simplices are checked here; see [`validate_ball`].
    pub fn new(tets: Vec<Simplex>, boundary_triangles: Vec<Simplex>) -> Result<Self> {
        if let Some(t) = tets.iter().find(|t| t.len() != 4) {
            return Err(Error::input(format!("{t} is not a tetrahedron")));
        }
        if let Some(t) = boundary_triangles.iter().find(|t| t.len() != 3) {
            return Err(Error::input(format!("{t} is not a triangle")));
        }
        Ok(Ball3 { tets, boundary: Complex::from_simplices(boundary_triangles) })
    }

    /// Tetrahedra with the boundary taken to be the triangles lying in exactly
    /// one of them.
    pub fn from_tets(tets: Vec<Simplex>) -> Result<Self> {
        let boundary = free_triangles(&tets);
        Ball3::new(tets, boundary)
    }

    pub fn tets(&self) -> &[Simplex] {
        &self.tets
    }

    pub fn boundary(&self) -> &Complex {
        &self.boundary
    }

    pub fn boundary_triangles(&self) -> Vec<Simplex> {
        self.boundary.simplices_of_dim(2).cloned().collect()
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        let mut vs: BTreeSet<Vertex> = self.tets.iter().flat_map(|t| t.vertices().iter().copied()).collect();
        vs.extend(self.boundary.vertices());
        vs
    }

    /// Relabels every vertex through `f`.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Ball3> {
        let map = |s: &Simplex| Simplex::new(s.vertices().iter().map(|&v| f(v)).collect());
        let tets = self.tets.iter().map(map).collect::<Result<Vec<_>>>()?;
        let bt = self.boundary.simplices_of_dim(2).map(map).collect::<Result<Vec<_>>>()?;
        Ball3::new(tets, bt)
    }
}

/// Triangles lying in exactly one of the given tetrahedra, sorted.
pub fn free_triangles(tets: &[Simplex]) -> Vec<Simplex> {
    triangle_counts(tets).into_iter().filter(|(_, c)| *c == 1).map(|(t, _)| t).collect()
}

fn triangle_counts(tets: &[Simplex]) -> BTreeMap<Simplex, usize> {
    let mut counts = BTreeMap::new();
    for t in tets {
        for f in t.facets() {
            *counts.entry(f).or_insert(0) += 1;
        }
    }
    counts
}

/// First reason a [`Ball3`] fails to be a valid 3-ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BallDefect {
    NoTetrahedra,
    DuplicateTetrahedron(Simplex),
    TriangleInTooManyTetrahedra(Simplex),
    /// A free triangle missing from the declared boundary.
    UndeclaredBoundaryTriangle(Simplex),
    /// A declared boundary triangle that is not free.
    SpuriousBoundaryTriangle(Simplex),
    /// The declared boundary has simplices not contained in any triangle.
    BoundaryNotPure,
    BoundaryNotSphere(String),
    DualGraphDisconnected,
    /// The link of this vertex is neither a disc (boundary vertex) nor a
    /// sphere (interior vertex).
    BadVertexLink(Vertex),
    InternalVertex(Vertex),
}

impl fmt::Display for BallDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BallDefect::NoTetrahedra => write!(f, "no tetrahedra"),
            BallDefect::DuplicateTetrahedron(t) => write!(f, "tetrahedron {t} listed twice"),
            BallDefect::TriangleInTooManyTetrahedra(t) => write!(f, "triangle {t} lies in more than two tetrahedra"),
            BallDefect::UndeclaredBoundaryTriangle(t) => write!(f, "free triangle {t} is not a boundary triangle"),
            BallDefect::SpuriousBoundaryTriangle(t) => write!(f, "boundary triangle {t} is not free"),
            BallDefect::BoundaryNotPure => write!(f, "boundary has simplices outside its triangles"),
            BallDefect::BoundaryNotSphere(why) => write!(f, "boundary is not a 2-sphere: {why}"),
            BallDefect::DualGraphDisconnected => write!(f, "tetrahedra are not connected through triangles"),
            BallDefect::BadVertexLink(v) => write!(f, "link of vertex {v} is neither a disc nor a sphere"),
            BallDefect::InternalVertex(v) => write!(f, "vertex {v} is not on the boundary"),
        }
    }
}

/// Checks the 3-ball conditions; `None` means valid.
///
/// The tetrahedra must be distinct, every triangle must lie in one or two of
/// them, the free triangles must be exactly the declared boundary, that
/// boundary must be a 2-sphere, the tetrahedra must be connected through
/// shared triangles, and every vertex link must be a disc (boundary vertex)
/// or a 2-sphere (interior vertex). With `require_no_internal` every vertex
/// must also lie on the boundary.
pub fn ball_defect(b: &Ball3, require_no_internal: bool) -> Option<BallDefect> {
    let tets = b.tets();
    if tets.is_empty() {
        return Some(BallDefect::NoTetrahedra);
    }
    let mut seen = BTreeSet::new();
    for t in tets {
        if !seen.insert(t) {
            return Some(BallDefect::DuplicateTetrahedron(t.clone()));
        }
    }
    let counts = triangle_counts(tets);
    if let Some((t, _)) = counts.iter().find(|(_, &c)| c > 2) {
        return Some(BallDefect::TriangleInTooManyTetrahedra(t.clone()));
    }
    let declared: BTreeSet<Simplex> = b.boundary.simplices_of_dim(2).cloned().collect();
    for (t, &c) in &counts {
        if c == 1 && !declared.contains(t) {
            return Some(BallDefect::UndeclaredBoundaryTriangle(t.clone()));
        }
    }
    for t in &declared {
        if counts.get(t) != Some(&1) {
            return Some(BallDefect::SpuriousBoundaryTriangle(t.clone()));
        }
    }
    if Complex::from_simplices(declared.iter().cloned()) != b.boundary {
        return Some(BallDefect::BoundaryNotPure);
    }
    let bt: Vec<Simplex> = declared.iter().cloned().collect();
    match surface_info(&bt) {
        Ok(info) if info.is_sphere() => {}
        Ok(info) => {
            return Some(BallDefect::BoundaryNotSphere(format!(
                "Euler characteristic {} with {} boundary circles",
                info.euler, info.boundary_components
            )))
        }
        Err(SurfaceDefect::Empty) => return Some(BallDefect::BoundaryNotSphere("empty".into())),
        Err(d) => return Some(BallDefect::BoundaryNotSphere(format!("{d:?}"))),
    }
    if !dual_graph_connected(tets) {
        return Some(BallDefect::DualGraphDisconnected);
    }
    let on_boundary = b.boundary.vertex_set();
    let mut links: BTreeMap<Vertex, Vec<Simplex>> = BTreeMap::new();
    for t in tets {
        for &v in t.vertices() {
            let opp: Vec<Vertex> = t.vertices().iter().copied().filter(|&u| u != v).collect();
            links.entry(v).or_default().push(Simplex::from_image(opp).expect("nonempty"));
        }
    }
    for (&v, link) in &links {
        let ok = match surface_info(link) {
            Ok(info) => {
                if on_boundary.contains(&v) {
                    info.is_disc()
                } else {
                    info.is_sphere()
                }
            }
            Err(_) => false,
        };
        if !ok {
            return Some(BallDefect::BadVertexLink(v));
        }
    }
    if require_no_internal {
        if let Some(&v) = links.keys().find(|v| !on_boundary.contains(v)) {
            return Some(BallDefect::InternalVertex(v));
        }
    }
    None
}

pub fn validate_ball(b: &Ball3, require_no_internal: bool) -> bool {
    ball_defect(b, require_no_internal).is_none()
}

fn dual_graph_connected(tets: &[Simplex]) -> bool {
    let mut by_tri: BTreeMap<Simplex, Vec<usize>> = BTreeMap::new();
    for (i, t) in tets.iter().enumerate() {
        for f in t.facets() {
            by_tri.entry(f).or_default().push(i);
        }
    }
    let mut seen = vec![false; tets.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for f in tets[i].facets() {
            for &j in &by_tri[&f] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::simplex;
    use crate::generate;

    fn cone_over(sphere: &Complex, apex: u32) -> Ball3 {
        let tets = sphere.simplices_of_dim(2).map(|t| t.union(&simplex(&[apex]))).collect();
        Ball3::from_tets(tets).unwrap()
    }

    #[test]
    fn single_tetrahedron() {
        let b = Ball3::from_tets(vec![simplex(&[0, 1, 2, 3])]).unwrap();
        assert_eq!(b.boundary_triangles().len(), 4);
        assert_eq!(ball_defect(&b, true), None);
    }

    #[test]
    fn cone_over_octahedron_has_an_internal_vertex() {
        let b = cone_over(&generate::octahedron(), 6);
        assert!(validate_ball(&b, false));
        assert_eq!(ball_defect(&b, true), Some(BallDefect::InternalVertex(Vertex(6))));
    }

    #[test]
    fn tetrahedra_sharing_an_edge_are_not_a_ball() {
        let b = Ball3::from_tets(vec![simplex(&[0, 1, 2, 3]), simplex(&[0, 1, 4, 5])]).unwrap();
        assert!(matches!(ball_defect(&b, false), Some(BallDefect::BoundaryNotSphere(_))));
    }

    #[test]
    fn boundary_mismatch_is_reported() {
        let mut bt = Ball3::from_tets(vec![simplex(&[0, 1, 2, 3])]).unwrap().boundary_triangles();
        bt[0] = simplex(&[0, 1, 4]);
        let b = Ball3::new(vec![simplex(&[0, 1, 2, 3])], bt).unwrap();
        assert!(matches!(ball_defect(&b, false), Some(BallDefect::UndeclaredBoundaryTriangle(_))));
    }

    #[test]
    fn two_tetrahedra_on_a_triangle() {
        // suspension of a triangle
        let b = Ball3::from_tets(vec![simplex(&[0, 1, 2, 3]), simplex(&[0, 1, 2, 4])]).unwrap();
        assert!(validate_ball(&b, true));
        let dup = Ball3::from_tets(vec![simplex(&[0, 1, 2, 3]), simplex(&[0, 1, 2, 3])]).unwrap();
        assert!(matches!(ball_defect(&dup, false), Some(BallDefect::DuplicateTetrahedron(_))));
    }

    #[test]
    fn pinched_ball_is_rejected() {
        // two tetrahedra glued at a single vertex: boundary is a wedge of spheres
        let b = Ball3::from_tets(vec![simplex(&[0, 1, 2, 3]), simplex(&[0, 4, 5, 6])]).unwrap();
        assert!(!validate_ball(&b, false));
    }
}
