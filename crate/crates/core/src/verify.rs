//! Stand-alone checks of Helly certificates.
//!
//! [`certificate`] looks only at X, the four sets and the four vertices.
//! [`witness`] re-checks the intermediate objects of a non-trivial run.

use crate::complex::{Complex, Vertex};
use crate::helly::HellyWitness;
use crate::sperner::{ball_defect, by_color, coloring_defect, dual_defect};

/// `v_i ∈ A_i` for every `i`, and the distinct `v_i` span a simplex of `x`.
pub fn certificate(x: &Complex, a: &[Complex; 4], v: &[Vertex; 4]) -> Result<(), String> {
    for i in 0..4 {
        if !a[i].has_vertex(v[i]) {
            return Err(format!("v{i} = {} is not in A{i}", v[i]));
        }
    }
    if !x.spans(v.iter().copied()) {
        return Err(format!("{} {} {} {} do not span a simplex of X", v[0], v[1], v[2], v[3]));
    }
    Ok(())
}

/// Checks that the witness is a ball without interior vertices mapped
/// simplicially into X, colored by membership of images, whose rainbow
/// tetrahedron maps to `v` color by color.
pub fn witness(x: &Complex, a: &[Complex; 4], v: &[Vertex; 4], w: &HellyWitness) -> Result<(), String> {
    if let Some(d) = ball_defect(&w.ball, true) {
        return Err(format!("ball: {d}"));
    }
    if w.ball.boundary() != &w.sphere {
        return Err("ball boundary differs from the sphere".into());
    }
    let img = |u: &Vertex| w.phi.get(u).copied().ok_or_else(|| format!("vertex {u} is unmapped"));
    for t in w.ball.tets() {
        let im = t.vertices().iter().map(img).collect::<Result<Vec<_>, _>>()?;
        if !x.spans(im) {
            return Err(format!("image of tetrahedron {t} does not span a simplex"));
        }
    }
    if let Some(d) = dual_defect(&w.sphere, &w.dual) {
        return Err(format!("dual structure: {d}"));
    }
    match coloring_defect(&w.ball, &w.dual, &w.coloring) {
        Ok(None) => {}
        Ok(Some(d)) => return Err(format!("coloring: {d}")),
        Err(e) => return Err(e.to_string()),
    }
    for (u, &c) in &w.coloring.0 {
        if !a[c as usize].has_vertex(img(u)?) {
            return Err(format!("vertex {u} has color {c} but its image is not in A{c}"));
        }
    }
    if !w.ball.tets().contains(&w.rainbow) {
        return Err("rainbow tetrahedron is not in the ball".into());
    }
    let ordered = by_color(&w.rainbow, &w.coloring).ok_or("tetrahedron is not rainbow")?;
    for i in 0..4 {
        if img(&ordered[i])? != v[i] {
            return Err(format!("v{i} is not the image of the color-{i} vertex"));
        }
    }
    Ok(())
}
