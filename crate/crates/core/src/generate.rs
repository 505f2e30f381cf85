//! A small corpus of named complexes used by tests and the `gen` subcommand.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::complex::{Complex, Simplex, Vertex};
use crate::error::{Error, Result};

/// Cycle graph `C_n` as a 1-dimensional complex on `0..n`.
pub fn cycle(n: usize) -> Result<Complex> {
    if n < 3 {
        return Err(Error::input(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let n32 = n as u32;
    Ok(Complex::from_simplices(
        (0..n32).map(|i| Simplex::new(vec![Vertex(i), Vertex((i + 1) % n32)]).unwrap()),
    ))
}

/// Boundary of the octahedron. Antipodal pairs are (0,1), (2,3), (4,5).
pub fn octahedron() -> Complex {
    let mut tris = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                tris.push(Simplex::new(vec![Vertex(a), Vertex(b), Vertex(c)]).unwrap());
            }
        }
    }
    Complex::from_simplices(tris)
}

/// Boundary of the icosahedron: poles 0 and 11, upper ring 1..=5, lower ring
/// 6..=10.
pub fn icosahedron() -> Complex {
    let up = |i: u32| Vertex(1 + i % 5);
    let lo = |i: u32| Vertex(6 + i % 5);
    let mut tris = Vec::new();
    for i in 0..5 {
        tris.push(vec![Vertex(0), up(i), up(i + 1)]);
        tris.push(vec![Vertex(11), lo(i), lo(i + 1)]);
        tris.push(vec![up(i), up(i + 1), lo(i)]);
        tris.push(vec![lo(i), lo(i + 1), up(i + 1)]);
    }
    Complex::from_vertex_lists(tris).expect("icosahedron triangles are valid")
}

/// Boundary of the tetrahedron on `0..4`.
pub fn tetra_boundary() -> Complex {
    Complex::from_vertex_lists([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]].map(|t| t.map(Vertex)))
        .expect("valid")
}

/// Vertex `(i, j)` of `tri_grid(w, _)`.
pub fn grid_vertex(w: usize, i: usize, j: usize) -> Vertex {
    Vertex((j * (w + 1) + i) as u32)
}

/// Rhombic patch of the equilateral triangulation: vertices `(i, j)` with
/// `0 <= i <= w`, `0 <= j <= h`, each unit cell split along the
/// `(i+1, j)`–`(i, j+1)` diagonal. Interior vertices have degree 6.
pub fn tri_grid(w: usize, h: usize) -> Result<Complex> {
    if w == 0 || h == 0 {
        return Err(Error::input(format!("tri_grid needs positive dimensions, got {w}x{h}")));
    }
    let v = |i, j| grid_vertex(w, i, j);
    let mut tris = Vec::with_capacity(2 * w * h);
    for j in 0..h {
        for i in 0..w {
            tris.push(vec![v(i, j), v(i + 1, j), v(i, j + 1)]);
            tris.push(vec![v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)]);
        }
    }
    Complex::from_vertex_lists(tris)
}

/// Disc built ring by ring around a centre vertex so that every vertex not on
/// the outermost ring has degree exactly 7.
pub fn deg7_patch(radius: usize) -> Result<Complex> {
    if radius == 0 {
        return Err(Error::input("deg7_patch needs radius >= 1"));
    }
    let mut next_id = 0u32;
    let mut fresh = || {
        next_id += 1;
        Vertex(next_id)
    };
    let centre = Vertex(0);
    let mut tris: Vec<[Vertex; 3]> = Vec::new();
    let mut degree: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut ring: Vec<Vertex> = (0..7).map(|_| fresh()).collect();
    for k in 0..7 {
        tris.push([centre, ring[k], ring[(k + 1) % 7]]);
    }
    for &r in &ring {
        degree.insert(r, 3);
    }
    for _ in 1..radius {
        let n = ring.len();
        // outer[k] lists the new neighbours of ring[k] in order; consecutive
        // ring vertices share their last/first outer vertex.
        let first = fresh();
        let mut shared = first;
        let mut new_ring = Vec::new();
        for k in 0..n {
            let v = ring[k];
            let extra = 6usize.saturating_sub(degree[&v]).max(1);
            let mut run = vec![shared];
            for _ in 0..extra {
                run.push(if k == n - 1 && run.len() == extra { first } else { fresh() });
            }
            // last element of run is shared with ring[k+1]
            for w in run.windows(2) {
                tris.push([v, w[0], w[1]]);
            }
            let last = *run.last().unwrap();
            tris.push([v, ring[(k + 1) % n], last]);
            new_ring.extend(run[..run.len() - 1].iter().copied());
            shared = last;
        }
        ring = new_ring;
        let c = Complex::from_vertex_lists(tris.iter().map(|t| t.to_vec()))?;
        degree = ring.iter().map(|&r| (r, c.degree(r))).collect();
    }
    Complex::from_vertex_lists(tris.iter().map(|t| t.to_vec()))
}

/// Cone over `base` with apex one larger than the largest base vertex.
pub fn cone(base: &Complex) -> Complex {
    let apex = Vertex(base.vertices().map(|v| v.0 + 1).max().unwrap_or(0));
    let mut all: Vec<Simplex> = base.simplices().cloned().collect();
    all.extend(base.simplices().map(|s| s.union(&Simplex::vertex(apex))));
    all.push(Simplex::vertex(apex));
    Complex::from_simplices(all)
}

/// First barycentric subdivision. Returns the subdivided complex and the
/// vertex standing for each simplex of `x`. Ids are assigned in order of
/// (dimension, simplex), so on a complex with vertices `0..n` the original
/// vertices keep their ids.
pub fn barycentric_subdivision(x: &Complex) -> (Complex, BTreeMap<Simplex, Vertex>) {
    let mut order: Vec<&Simplex> = x.simplices().collect();
    order.sort_by(|a, b| a.dim().cmp(&b.dim()).then(a.cmp(b)));
    let ids: BTreeMap<Simplex, Vertex> =
        order.iter().enumerate().map(|(i, s)| ((*s).clone(), Vertex(i as u32))).collect();
    // maximal chains of faces give the top simplices
    let mut chains: Vec<Vec<Vertex>> = Vec::new();
    for s in x.maximal_simplices() {
        let mut stack = vec![(s.clone(), vec![ids[&s]])];
        while let Some((cur, chain)) = stack.pop() {
            if cur.len() == 1 {
                chains.push(chain);
                continue;
            }
            for f in cur.facets() {
                let mut c = chain.clone();
                c.push(ids[&f]);
                stack.push((f, c));
            }
        }
    }
    let sub = Complex::from_vertex_lists(chains).expect("chains have distinct vertices");
    (sub, ids)
}

/// Names accepted by [`generate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusName {
    Cycle(usize),
    Octahedron,
    Icosahedron,
    TriGrid(usize, usize),
    Deg7Patch(usize),
    TetraBoundary,
    Cone(Box<CorpusName>),
}

impl CorpusName {
    /// Parses a whitespace-separated token list such as `tri_grid 5 5` or
    /// `cone cycle 5`.
    pub fn parse_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let (name, rest) = parse_prefix(tokens)?;
        if !rest.is_empty() {
            return Err(Error::input(format!("unexpected trailing parameter {:?}", rest[0].as_ref())));
        }
        Ok(name)
    }
}

fn parse_prefix<S: AsRef<str>>(tokens: &[S]) -> Result<(CorpusName, &[S])> {
    let Some((head, rest)) = tokens.split_first() else {
        return Err(Error::input("missing corpus name"));
    };
    let num = |rest: &[S], i: usize| -> Result<usize> {
        let t = rest.get(i).ok_or_else(|| Error::input(format!("{} needs more parameters", head.as_ref())))?;
        t.as_ref().parse().map_err(|_| Error::input(format!("bad integer {:?}", t.as_ref())))
    };
    Ok(match head.as_ref() {
        "cycle" => (CorpusName::Cycle(num(rest, 0)?), &rest[1..]),
        "octahedron" => (CorpusName::Octahedron, rest),
        "icosahedron" => (CorpusName::Icosahedron, rest),
        "tetra_boundary" => (CorpusName::TetraBoundary, rest),
        "tri_grid" => (CorpusName::TriGrid(num(rest, 0)?, num(rest, 1)?), &rest[2..]),
        "deg7_patch" => (CorpusName::Deg7Patch(num(rest, 0)?), &rest[1..]),
        "cone" => {
            let (inner, rest) = parse_prefix(rest)?;
            (CorpusName::Cone(Box::new(inner)), rest)
        }
        other => return Err(Error::input(format!("unknown corpus name {other:?}"))),
    })
}

impl FromStr for CorpusName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        CorpusName::parse_tokens(&tokens)
    }
}

impl fmt::Display for CorpusName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusName::Cycle(n) => write!(f, "cycle {n}"),
            CorpusName::Octahedron => write!(f, "octahedron"),
            CorpusName::Icosahedron => write!(f, "icosahedron"),
            CorpusName::TriGrid(w, h) => write!(f, "tri_grid {w} {h}"),
            CorpusName::Deg7Patch(r) => write!(f, "deg7_patch {r}"),
            CorpusName::TetraBoundary => write!(f, "tetra_boundary"),
            CorpusName::Cone(b) => write!(f, "cone {b}"),
        }
    }
}

/// The named complexes used for regression checks.
pub fn corpus() -> Vec<CorpusName> {
    use CorpusName::*;
    vec![
        TetraBoundary,
        Octahedron,
        Icosahedron,
        Cycle(4),
        Cycle(5),
        Cycle(6),
        Cycle(7),
        Cycle(8),
        TriGrid(2, 2),
        TriGrid(5, 5),
        Deg7Patch(1),
        Deg7Patch(2),
        Cone(Box::new(Cycle(5))),
        Cone(Box::new(Cycle(6))),
        Cone(Box::new(Octahedron)),
        Cone(Box::new(Icosahedron)),
    ]
}

pub fn generate(name: &CorpusName) -> Result<Complex> {
    match name {
        CorpusName::Cycle(n) => cycle(*n),
        CorpusName::Octahedron => Ok(octahedron()),
        CorpusName::Icosahedron => Ok(icosahedron()),
        CorpusName::TriGrid(w, h) => tri_grid(*w, *h),
        CorpusName::Deg7Patch(r) => deg7_patch(*r),
        CorpusName::TetraBoundary => Ok(tetra_boundary()),
        CorpusName::Cone(b) => Ok(cone(&generate(b)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(cycle(6).unwrap().f_vector(), vec![6, 6]);
        assert_eq!(octahedron().f_vector(), vec![6, 12, 8]);
        assert_eq!(icosahedron().f_vector(), vec![12, 30, 20]);
        assert_eq!(tetra_boundary().f_vector(), vec![4, 6, 4]);
        assert_eq!(tri_grid(2, 2).unwrap().f_vector(), vec![9, 16, 8]);
        assert_eq!(cone(&cycle(5).unwrap()).f_vector(), vec![6, 10, 5]);
    }

    #[test]
    fn spheres_have_euler_characteristic_two() {
        for x in [octahedron(), icosahedron(), tetra_boundary()] {
            assert_eq!(x.euler_characteristic(), 2);
        }
    }

    #[test]
    fn tri_grid_interior_degree_six() {
        let x = tri_grid(4, 4).unwrap();
        for j in 1..4 {
            for i in 1..4 {
                assert_eq!(x.degree(grid_vertex(4, i, j)), 6);
            }
        }
        assert_eq!(x.euler_characteristic(), 1);
    }

    #[test]
    fn deg7_patch_is_a_disc_with_degree_seven_interior() {
        for r in 1..=3 {
            let x = deg7_patch(r).unwrap();
            assert_eq!(x.euler_characteristic(), 1, "radius {r}");
            assert!(x.is_flag());
            // interior vertices: every edge at the vertex lies in two triangles
            for v in x.vertices() {
                let link = x.link(&Simplex::vertex(v)).unwrap();
                let closed = link.vertices().all(|u| link.degree(u) == 2);
                if closed {
                    assert_eq!(x.degree(v), 7, "interior vertex {v} at radius {r}");
                }
            }
        }
        assert_eq!(deg7_patch(1).unwrap().f_vector(), vec![8, 14, 7]);
    }

    #[test]
    fn barycentric_counts() {
        let (sub, ids) = barycentric_subdivision(&tetra_boundary());
        assert_eq!(sub.f_vector(), vec![14, 36, 24]);
        assert_eq!(sub.euler_characteristic(), 2);
        for i in 0..4 {
            assert_eq!(ids[&Simplex::vertex(Vertex(i))], Vertex(i));
        }
        let (sub2, _) = barycentric_subdivision(&sub);
        assert_eq!(sub2.f_vector(), vec![74, 216, 144]);
    }

    #[test]
    fn parse_names() {
        assert_eq!("tri_grid 5 5".parse::<CorpusName>().unwrap(), CorpusName::TriGrid(5, 5));
        assert_eq!(
            "cone cycle 5".parse::<CorpusName>().unwrap(),
            CorpusName::Cone(Box::new(CorpusName::Cycle(5)))
        );
        assert!("cycle".parse::<CorpusName>().is_err());
        assert!("cycle 2".parse::<CorpusName>().and_then(|n| generate(&n)).is_err());
        assert!("blob".parse::<CorpusName>().is_err());
        assert!("octahedron 3".parse::<CorpusName>().is_err());
        let n = "cone tri_grid 2 3".parse::<CorpusName>().unwrap();
        assert_eq!(n.to_string().parse::<CorpusName>().unwrap(), n);
    }
}
