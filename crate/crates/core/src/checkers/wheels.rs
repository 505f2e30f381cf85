//! Wheels with a pendant triangle and the SD₂* property.

use std::collections::BTreeSet;

use crate::checkers::cycles::{locally_k_large_witness, FullCycle};
use crate::complex::{Complex, Simplex, Vertex};
use crate::error::{Error, Result};

/// A k-wheel (hub plus rim cycle) together with a pendant vertex attached to
/// two rim vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WheelWithPendant {
    pub hub: Vertex,
    /// Rim cycle in canonical rotation/reflection form.
    pub rim: Vec<Vertex>,
    pub pendant: Vertex,
    /// The two rim vertices the pendant attaches to, sorted.
    pub attach: (Vertex, Vertex),
}

impl WheelWithPendant {
    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        let mut s: BTreeSet<Vertex> = self.rim.iter().copied().collect();
        s.insert(self.hub);
        s.insert(self.pendant);
        s
    }
}

/// How the pendant vertex has to sit on the rim.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PendantRule {
    /// The two attach vertices are consecutive on the rim, so pendant and
    /// attach vertices form a triangle.
    #[default]
    Triangle,
    /// Any two rim vertices.
    AnyTwo,
}

/// Every embedded (not necessarily induced) k-wheel with a pendant in the
/// 1-skeleton of `x`, up to the symmetries of the pattern.
pub fn enumerate_wheels_with_pendant(x: &Complex, k: usize, rule: PendantRule) -> Result<Vec<WheelWithPendant>> {
    if k < 4 {
        return Err(Error::domain(format!("wheels need a rim of length >= 4, got {k}")));
    }
    let mut out = BTreeSet::new();
    for hub in x.vertices() {
        let nb: Vec<Vertex> = x.neighbors(hub).collect();
        for rim in simple_cycles_of_length(x, &nb, k) {
            let on_rim: BTreeSet<Vertex> = rim.iter().copied().collect();
            let pairs: Vec<(Vertex, Vertex)> = match rule {
                PendantRule::Triangle => (0..k).map(|i| (rim[i], rim[(i + 1) % k])).collect(),
                PendantRule::AnyTwo => {
                    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).map(|(i, j)| (rim[i], rim[j])).collect()
                }
            };
            for (a, b) in pairs {
                let attach = if a < b { (a, b) } else { (b, a) };
                for p in x.neighbors(a) {
                    if p == hub || on_rim.contains(&p) || !x.is_adjacent(p, b) {
                        continue;
                    }
                    out.insert(WheelWithPendant { hub, rim: rim.clone(), pendant: p, attach });
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Simple cycles of exactly `len` vertices inside the subgraph of `x` induced
/// on `within`, in canonical form.
fn simple_cycles_of_length(x: &Complex, within: &[Vertex], len: usize) -> Vec<Vec<Vertex>> {
    fn dfs(
        x: &Complex,
        allowed: &BTreeSet<Vertex>,
        len: usize,
        path: &mut Vec<Vertex>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let s = path[0];
        let last = *path.last().unwrap();
        if path.len() == len {
            if x.is_adjacent(last, s) && path[1] < last {
                out.push(FullCycle::canonical(path.clone()).vertices().to_vec());
            }
            return;
        }
        for v in x.neighbors(last) {
            if v > s && allowed.contains(&v) && !path.contains(&v) {
                path.push(v);
                dfs(x, allowed, len, path, out);
                path.pop();
            }
        }
    }
    let allowed: BTreeSet<Vertex> = within.iter().copied().collect();
    let mut out = Vec::new();
    for &s in within {
        let mut path = vec![s];
        dfs(x, &allowed, len, &mut path, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// Why a complex fails the SD₂* property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sd2Violation {
    /// A link contains a full 4-cycle (or 3-cycle).
    NotLocally5Large { simplex: Simplex, cycle: FullCycle },
    /// A 5-wheel with pendant lies in no 1-ball.
    WheelOutsideBalls(WheelWithPendant),
}

/// First witness against SD₂*, or `None` when the property holds.
pub fn sd2star_violation(x: &Complex, rule: PendantRule) -> Result<Option<Sd2Violation>> {
    if !x.is_flag() {
        return Err(Error::domain("SD2* is only defined for flag complexes"));
    }
    if let Some((simplex, cycle)) = locally_k_large_witness(x, 5)? {
        return Ok(Some(Sd2Violation::NotLocally5Large { simplex, cycle }));
    }
    let balls: Vec<BTreeSet<Vertex>> = x
        .vertices()
        .map(|v| {
            let mut b: BTreeSet<Vertex> = x.neighbors(v).collect();
            b.insert(v);
            b
        })
        .collect();
    for w in enumerate_wheels_with_pendant(x, 5, rule)? {
        let vs = w.vertex_set();
        if !balls.iter().any(|b| vs.is_subset(b)) {
            return Ok(Some(Sd2Violation::WheelOutsideBalls(w)));
        }
    }
    Ok(None)
}

pub fn satisfies_sd2star(x: &Complex) -> Result<bool> {
    Ok(sd2star_violation(x, PendantRule::Triangle)?.is_none())
}

/// SD₂* holds for the link of every (nonempty) simplex.
pub fn has_sd2star_links(x: &Complex) -> Result<bool> {
    if !x.is_flag() {
        return Err(Error::domain("SD2* is only defined for flag complexes"));
    }
    for s in x.simplices() {
        if !satisfies_sd2star(&x.link(s)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn five_wheel_alone_has_no_pendant() {
        let w = generate::cone(&generate::cycle(5).unwrap());
        assert!(enumerate_wheels_with_pendant(&w, 5, PendantRule::Triangle).unwrap().is_empty());
    }

    #[test]
    fn icosahedron_wheels() {
        let x = generate::icosahedron();
        let ws = enumerate_wheels_with_pendant(&x, 5, PendantRule::Triangle).unwrap();
        // every vertex is a hub of its link 5-cycle; each rim edge has one
        // further common neighbour
        assert_eq!(ws.len(), 12 * 5);
        assert!(ws.iter().all(|w| w.vertex_set().len() == 7));
    }

    #[test]
    fn grid_has_no_five_wheels() {
        let x = generate::tri_grid(4, 4).unwrap();
        assert!(enumerate_wheels_with_pendant(&x, 5, PendantRule::Triangle).unwrap().is_empty());
        assert!(enumerate_wheels_with_pendant(&x, 5, PendantRule::AnyTwo).unwrap().is_empty());
        // interior hubs carry 6-wheels
        assert!(!enumerate_wheels_with_pendant(&x, 6, PendantRule::Triangle).unwrap().is_empty());
    }

    #[test]
    fn sd2star_examples() {
        assert!(satisfies_sd2star(&generate::tri_grid(4, 4).unwrap()).unwrap());
        let ico = generate::icosahedron();
        match sd2star_violation(&ico, PendantRule::Triangle).unwrap() {
            Some(Sd2Violation::WheelOutsideBalls(w)) => assert_eq!(w.rim.len(), 5),
            other => panic!("expected a wheel witness, got {other:?}"),
        }
        let tet = Complex::from_simplices([crate::complex::simplex(&[0, 1, 2, 3])]);
        assert!(satisfies_sd2star(&tet).unwrap());
        assert!(matches!(
            sd2star_violation(&generate::octahedron(), PendantRule::Triangle).unwrap(),
            Some(Sd2Violation::NotLocally5Large { .. })
        ));
        assert!(satisfies_sd2star(&generate::tetra_boundary()).is_err());
    }

    #[test]
    fn sd2star_links_examples() {
        assert!(has_sd2star_links(&generate::tri_grid(4, 4).unwrap()).unwrap());
        assert!(has_sd2star_links(&Complex::from_simplices([crate::complex::simplex(&[0, 1, 2])])).unwrap());
        // vertex links of the octahedron are 4-cycles, whose own links are
        // pairs of points, so every link is SD2*
        assert!(has_sd2star_links(&generate::octahedron()).unwrap());
        assert!(!has_sd2star_links(&generate::cone(&generate::icosahedron())).unwrap());
    }
}
