//! Gluing four collared discs into a sphere, and the dual tetrahedral
//! structure on it.
//!
//! Domain layout: corner `Z_l` has id `l` and image `z_l`. The side joining
//! `Z_k` and `Z_l` (k < l) follows γ_kl, which lies in the two sets other
//! than `A_k` and `A_l`; a one-edge γ gets a stutter vertex so that every
//! side has an interior vertex. Disc `i` is bounded by the three sides
//! avoiding `Z_i` and maps into `A_i`.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::complex::{Complex, Simplex, Vertex};
use crate::error::{Error, Result};
use crate::helly::disc::{disc_defect, fill_collared, DiscFilling, DiscLimits, DiscOutcome};
use crate::helly::hypotheses::connect_path;
use crate::helly::{HellyInput, Stage, Stalled};
use crate::sperner::surface::surface_info;
use crate::sperner::{DualStructure, PAIRS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereAssembly {
    pub z: [Vertex; 4],
    /// γ_kl in X for k < l.
    pub gamma: BTreeMap<(usize, usize), Vec<Vertex>>,
    /// Domain path from `Z_k` to `Z_l` for k < l.
    pub sides: BTreeMap<(usize, usize), Vec<Vertex>>,
    pub discs: [DiscFilling; 4],
    pub sphere: Complex,
    pub phi: BTreeMap<Vertex, Vertex>,
}

/// The two indices other than `k` and `l`.
pub(crate) fn complement(k: usize, l: usize) -> (usize, usize) {
    let mut rest = (0..4).filter(|&i| i != k && i != l);
    (rest.next().unwrap(), rest.next().unwrap())
}

fn others(i: usize) -> [usize; 3] {
    let v: Vec<usize> = (0..4).filter(|&k| k != i).collect();
    [v[0], v[1], v[2]]
}

/// Boundary cycle of disc `i`: side (j,k), then side (k,l), then side (j,l)
/// backwards, with `j < k < l` the other indices.
fn disc_boundary(sides: &BTreeMap<(usize, usize), Vec<Vertex>>, i: usize) -> Vec<Vertex> {
    let [j, k, l] = others(i);
    let mut cycle = sides[&(j, k)].clone();
    cycle.extend(&sides[&(k, l)][1..]);
    let back = &sides[&(j, l)];
    cycle.extend(back[1..back.len() - 1].iter().rev());
    cycle
}

/// Builds the sphere for triple points `z` (pairwise distinct).
pub fn assemble_sphere(
    input: &HellyInput,
    z: [Vertex; 4],
    deadline: Option<Instant>,
) -> Result<std::result::Result<SphereAssembly, Stalled>> {
    let mut next_id = 4u32;
    let mut fresh = || {
        next_id += 1;
        Vertex(next_id - 1)
    };
    let mut phi: BTreeMap<Vertex, Vertex> = (0..4).map(|l| (Vertex(l as u32), z[l])).collect();
    let mut gamma = BTreeMap::new();
    let mut sides = BTreeMap::new();
    for &(k, l) in &PAIRS {
        let (i, j) = complement(k, l);
        let path = connect_path(&input.a[i].intersection(&input.a[j]), z[k], z[l])?;
        if path.len() < 2 {
            return Err(Error::internal("triple points coincide in the non-trivial case"));
        }
        let mut side = vec![Vertex(k as u32)];
        if path.len() == 2 {
            let m = fresh();
            phi.insert(m, path[0].min(path[1]));
            side.push(m);
        }
        for &x in &path[1..path.len() - 1] {
            let m = fresh();
            phi.insert(m, x);
            side.push(m);
        }
        side.push(Vertex(l as u32));
        gamma.insert((k, l), path);
        sides.insert((k, l), side);
    }
    let limits = DiscLimits { max_area: input.budgets.max_area, nodes: input.budgets.disc_nodes, deadline };
    let mut discs = Vec::with_capacity(4);
    for i in 0..4 {
        let boundary = disc_boundary(&sides, i);
        match fill_collared(&input.a[i], &boundary, &phi, &mut next_id, limits)? {
            DiscOutcome::Filled(d) => {
                for (v, x) in &d.phi {
                    phi.insert(*v, *x);
                }
                discs.push(d);
            }
            DiscOutcome::Obstructed => {
                return Ok(Err(Stalled {
                    stage: Stage::Disc(i),
                    reason: format!("the boundary loop is nonzero in H1(A{i}; Q), so A{i} holds no filling"),
                }))
            }
            DiscOutcome::Unknown => {
                return Ok(Err(Stalled {
                    stage: Stage::Disc(i),
                    reason: format!("no disc of area <= {} found for a boundary of length {}", limits.max_area, boundary.len()),
                }))
            }
        }
    }
    let sphere = Complex::from_simplices(discs.iter().flat_map(|d| d.triangles.iter().cloned()));
    let discs: [DiscFilling; 4] = discs.try_into().expect("four discs");
    let asm = SphereAssembly { z, gamma, sides, discs, sphere, phi };
    if let Some(why) = sphere_defect(&input.x, &input.a, &asm) {
        return Err(Error::internal(format!("assembled sphere is invalid: {why}")));
    }
    Ok(Ok(asm))
}

/// First defect of an assembled sphere, if any.
pub fn sphere_defect(x: &Complex, a: &[Complex; 4], asm: &SphereAssembly) -> Option<String> {
    for (i, d) in asm.discs.iter().enumerate() {
        if d.boundary != disc_boundary(&asm.sides, i) {
            return Some(format!("disc {i} has the wrong boundary"));
        }
        if let Some(why) = disc_defect(&a[i], d) {
            return Some(format!("disc {i}: {why}"));
        }
        if d.phi.iter().any(|(v, img)| asm.phi.get(v) != Some(img)) {
            return Some(format!("disc {i} disagrees with the sphere map"));
        }
    }
    let tris: Vec<Simplex> = asm.sphere.simplices_of_dim(2).cloned().collect();
    let total: usize = asm.discs.iter().map(|d| d.triangles.len()).sum();
    if tris.len() != total || asm.sphere.dimension() != Some(2) {
        return Some("discs overlap".into());
    }
    match surface_info(&tris) {
        Ok(info) if info.is_sphere() => {}
        _ => return Some("the glued discs do not form a 2-sphere".into()),
    }
    if let Some(t) = tris.iter().find(|t| !x.spans(t.vertices().iter().map(|v| asm.phi[v]))) {
        return Some(format!("image of {t} does not span a simplex of X"));
    }
    None
}

/// Dual structure: apex `w_i` on the collar of disc `i`; arc β_ij runs from
/// `w_i` along the collar ring, out to the middle vertex of the side shared
/// by discs `i` and `j`, and on to `w_j` the same way.
pub fn dualize(asm: &SphereAssembly) -> Result<DualStructure> {
    let mut crossing: BTreeMap<(usize, usize), Vertex> = BTreeMap::new();
    for (&(k, l), side) in &asm.sides {
        if side.len() < 3 {
            return Err(Error::internal("side without an interior vertex"));
        }
        crossing.insert(complement(k, l), side[side.len() / 2]);
    }
    let mut apexes = [Vertex(0); 4];
    // legs[i][j]: path in disc i from w_i to the crossing with disc j
    let mut legs: BTreeMap<(usize, usize), Vec<Vertex>> = BTreeMap::new();
    for i in 0..4 {
        let d = &asm.discs[i];
        let ring = d.collar.as_ref().ok_or_else(|| Error::internal("disc without collar"))?;
        let n = d.boundary.len();
        let mut qs: Vec<(usize, usize)> = Vec::new();
        for j in (0..4).filter(|&j| j != i) {
            let p = crossing[&(i.min(j), i.max(j))];
            let q = d.boundary.iter().position(|&v| v == p).ok_or_else(|| Error::internal("crossing off disc"))?;
            qs.push((q, j));
        }
        qs.sort();
        let (q1, q2, q3) = (qs[0].0, qs[1].0, qs[2].0);
        apexes[i] = ring[q1];
        legs.insert((i, qs[0].1), vec![ring[q1], d.boundary[q1]]);
        let mut fwd: Vec<Vertex> = (q1..=q2).map(|t| ring[t]).collect();
        fwd.push(d.boundary[q2]);
        legs.insert((i, qs[1].1), fwd);
        let mut back: Vec<Vertex> = (0..=(q1 + n - q3)).map(|s| ring[(q1 + n - s) % n]).collect();
        back.push(d.boundary[q3]);
        legs.insert((i, qs[2].1), back);
    }
    let mut arcs = BTreeMap::new();
    for &(i, j) in &PAIRS {
        let mut path = legs[&(i, j)].clone();
        path.extend(legs[&(j, i)].iter().rev().skip(1));
        arcs.insert((i, j), path);
    }
    DualStructure::from_arcs(&asm.sphere, apexes, arcs)
}
