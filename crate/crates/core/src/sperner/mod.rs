//! Triangulated 3-balls, dual tetrahedral structures on their boundary,
//! four-colorings and rainbow tetrahedra.

pub mod ball;
pub mod coloring;
pub mod dual;
pub mod fill;
pub(crate) mod surface;

use std::collections::BTreeMap;

pub use ball::{ball_defect, validate_ball, Ball3, BallDefect};
pub use coloring::{by_color, coloring_defect, count_rainbow, find_rainbow, validate_coloring, Coloring, ColoringDefect};
pub use dual::{dual_defect, validate_dual, DualStructure, Role, PAIRS};
pub use fill::{fill_sphere, FillBudget, FillOutcome};

use crate::complex::{Simplex, Vertex};
use crate::error::{Error, Result};
use crate::generate::{barycentric_subdivision, tetra_boundary};

/// A ball together with a dual structure on its boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpernerInstance {
    pub ball: Ball3,
    pub dual: DualStructure,
}

/// The boundary of the tetrahedron subdivided barycentrically `levels >= 1`
/// times, filled by a ball without internal vertices. Apex `w_i` is the
/// barycenter of the face opposite corner `i`; arc `β_ij` runs through the
/// barycenter of the edge shared by those two faces.
pub fn subdivided_tetrahedron(levels: usize) -> Result<SpernerInstance> {
    if levels == 0 {
        return Err(Error::input("subdivided_tetrahedron needs at least one level"));
    }
    let base = tetra_boundary();
    let (mut sphere, ids) = barycentric_subdivision(&base);
    let face = |i: u32| -> Simplex {
        Simplex::new((0..4).filter(|&k| k != i).map(Vertex).collect()).expect("distinct")
    };
    let apexes = [0, 1, 2, 3].map(|i| ids[&face(i)]);
    let mut arcs: BTreeMap<(usize, usize), Vec<Vertex>> = BTreeMap::new();
    for &(i, j) in &PAIRS {
        let shared: Vec<Vertex> = (0..4).filter(|&k| k != i && k != j).map(|k| Vertex(k as u32)).collect();
        let mid = ids[&Simplex::new(shared).expect("distinct")];
        arcs.insert((i, j), vec![apexes[i], mid, apexes[j]]);
    }
    let mut apexes = apexes;
    for _ in 1..levels {
        let (finer, ids) = barycentric_subdivision(&sphere);
        apexes = apexes.map(|w| ids[&Simplex::vertex(w)]);
        for path in arcs.values_mut() {
            let mut refined = vec![ids[&Simplex::vertex(path[0])]];
            for e in path.windows(2) {
                refined.push(ids[&Simplex::new(vec![e[0], e[1]]).expect("edge")]);
                refined.push(ids[&Simplex::vertex(e[1])]);
            }
            *path = refined;
        }
        sphere = finer;
    }
    let dual = DualStructure::from_arcs(&sphere, apexes, arcs)?;
    let tris: Vec<Simplex> = sphere.simplices_of_dim(2).cloned().collect();
    let tets = match fill_sphere(&tris, &|_| true, FillBudget::nodes(100_000)) {
        FillOutcome::Filled(t) => t,
        other => return Err(Error::internal(format!("could not fill subdivided sphere: {other:?}"))),
    };
    let ball = Ball3::new(tets, tris)?;
    Ok(SpernerInstance { ball, dual })
}

/// Lowest admissible color for every sphere vertex whose role allows a color
/// accepted by `allowed`; vertices off the sphere get the lowest allowed
/// color overall.
pub fn lowest_admissible(
    b: &Ball3,
    d: &DualStructure,
    allowed: impl Fn(Vertex, u8) -> bool,
) -> std::result::Result<Coloring, Vertex> {
    let roles = d.roles();
    let mut c = Coloring::default();
    for v in b.vertices() {
        let palette = roles.get(&v).map_or_else(|| vec![0, 1, 2, 3], |r| r.admissible());
        match palette.into_iter().find(|&col| allowed(v, col)) {
            Some(col) => c.set(v, col),
            None => return Err(v),
        }
    }
    Ok(c)
}

/// Uniformly random admissible color for every vertex: apexes and arc and
/// region vertices draw from their role's palette, other vertices from all
/// four colors.
pub fn random_admissible<R: rand::Rng + ?Sized>(b: &Ball3, d: &DualStructure, rng: &mut R) -> Coloring {
    let roles = d.roles();
    b.vertices()
        .into_iter()
        .map(|v| {
            let palette = roles.get(&v).map_or_else(|| vec![0, 1, 2, 3], |r| r.admissible());
            (v, palette[rng.gen_range(0..palette.len())])
        })
        .collect()
}
