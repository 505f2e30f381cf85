//! Ball filling, Sperner coloring and the certificate.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::complex::{Complex, Simplex, Vertex};
use crate::error::{Error, Result};
use crate::helly::hypotheses::{pick_triple_points, require_hypotheses, trivial_vertex};
use crate::helly::sphere::{assemble_sphere, dualize};
use crate::helly::{HellyCertificate, HellyInput, HellyOutcome, HellyWitness, Stage, Stalled};
use crate::sperner::{
    ball_defect, by_color, find_rainbow, fill_sphere, lowest_admissible, Ball3, Coloring, DualStructure, FillBudget,
    FillOutcome,
};
use crate::verify;

/// Fills `sphere` by a ball without new vertices whose tetrahedra all map
/// onto simplices of `x`.
pub fn fill_ball(
    x: &Complex,
    sphere: &Complex,
    phi: &BTreeMap<Vertex, Vertex>,
    budget: FillBudget,
) -> Result<std::result::Result<Ball3, Stalled>> {
    let tris: Vec<Simplex> = sphere.simplices_of_dim(2).cloned().collect();
    let admissible = |vs: &[Vertex]| x.spans(vs.iter().map(|v| phi[v]));
    let tets = match fill_sphere(&tris, &admissible, budget) {
        FillOutcome::Filled(t) => t,
        FillOutcome::NoFilling => {
            return Ok(Err(Stalled { stage: Stage::Ball, reason: "no filling without interior vertices".into() }))
        }
        FillOutcome::BudgetExhausted => {
            return Ok(Err(Stalled { stage: Stage::Ball, reason: format!("search budget of {} states spent", budget.nodes) }))
        }
    };
    let b = Ball3::new(tets, tris)?;
    if let Some(why) = ball_filling_defect(x, sphere, &b, phi) {
        return Err(Error::internal(format!("ball filling failed its check: {why}")));
    }
    Ok(Ok(b))
}

/// First reason `b` is not a filling of `sphere` mapped into `x` by `phi`.
pub fn ball_filling_defect(x: &Complex, sphere: &Complex, b: &Ball3, phi: &BTreeMap<Vertex, Vertex>) -> Option<String> {
    if let Some(d) = ball_defect(b, true) {
        return Some(d.to_string());
    }
    if b.boundary() != sphere {
        return Some("ball boundary differs from the sphere".into());
    }
    for t in b.tets() {
        let Some(img) = t.vertices().iter().map(|v| phi.get(v).copied()).collect::<Option<Vec<_>>>() else {
            return Some(format!("tetrahedron {t} has an unmapped vertex"));
        };
        if !x.spans(img) {
            return Some(format!("image of {t} does not span a simplex"));
        }
    }
    None
}

pub fn verify_ball_filling(x: &Complex, sphere: &Complex, b: &Ball3, phi: &BTreeMap<Vertex, Vertex>) -> bool {
    ball_filling_defect(x, sphere, b, phi).is_none()
}

/// Lowest admissible color `c` with `φ(v) ∈ A_c` for every ball vertex.
pub fn sperner_color(a: &[Complex; 4], b: &Ball3, d: &DualStructure, phi: &BTreeMap<Vertex, Vertex>) -> Result<Coloring> {
    lowest_admissible(b, d, |v, c| a[c as usize].has_vertex(phi[&v]))
        .map_err(|v| Error::internal(format!("vertex {v} has no admissible color")))
}

/// Runs the procedure. Hypothesis failures are errors; exhausted budgets give
/// [`HellyOutcome::Unknown`]. Every returned certificate has passed the
/// independent checker.
pub fn helly_point(input: &HellyInput) -> Result<HellyOutcome> {
    require_hypotheses(input)?;
    if let Some(v) = trivial_vertex(input) {
        return finish(input, HellyCertificate::new(&input.a, [v; 4], None));
    }
    let deadline = input.budgets.time_limit.map(|t| Instant::now() + t);
    let z = pick_triple_points(input)?;
    let asm = match assemble_sphere(input, z, deadline)? {
        Ok(a) => a,
        Err(s) => return Ok(HellyOutcome::Unknown(s)),
    };
    let dual = dualize(&asm)?;
    let budget = FillBudget { nodes: input.budgets.ball_nodes, deadline };
    let ball = match fill_ball(&input.x, &asm.sphere, &asm.phi, budget)? {
        Ok(b) => b,
        Err(s) => return Ok(HellyOutcome::Unknown(s)),
    };
    let coloring = sperner_color(&input.a, &ball, &dual, &asm.phi)?;
    let rainbow = find_rainbow(&ball, &coloring).ok_or_else(|| Error::internal("no rainbow tetrahedron"))?;
    let ordered = by_color(&rainbow, &coloring).ok_or_else(|| Error::internal("rainbow tetrahedron misread"))?;
    let simplex = ordered.map(|v| asm.phi[&v]);
    let witness = HellyWitness { z, sphere: asm.sphere, ball, phi: asm.phi, dual, coloring, rainbow };
    finish(input, HellyCertificate::new(&input.a, simplex, Some(witness)))
}

fn finish(input: &HellyInput, cert: HellyCertificate) -> Result<HellyOutcome> {
    if let Err(why) = verify::certificate(&input.x, &input.a, &cert.simplex) {
        return Err(Error::internal(format!("certificate rejected: {why}")));
    }
    if let Some(w) = &cert.witness {
        if let Err(why) = verify::witness(&input.x, &input.a, &cert.simplex, w) {
            return Err(Error::internal(format!("witness rejected: {why}")));
        }
    }
    Ok(HellyOutcome::Certificate(cert))
}
