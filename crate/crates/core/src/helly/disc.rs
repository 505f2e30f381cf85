//! Disc fillings of closed edge paths.
//!
//! A filling is a triangulated polygon (the domain) with a map to the target
//! complex such that every triangle's image spans a simplex. The search works
//! on the unfilled polygon and applies two kinds of moves:
//!
//! * ear: cut off a corner `p_{i-1} p_i p_{i+1}` whose images span;
//! * fan: add a new vertex with image `x` joined to a run of consecutive
//!   polygon vertices, each consecutive pair spanning with `x` (the run may be
//!   the whole polygon, which finishes the disc).
//!
//! Moves are tried depth first, best potential first, where the potential is
//! the polygon length plus the distances of its images to a central target
//! vertex.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use crate::checkers::is_rationally_null_homologous;
use crate::complex::{Complex, Simplex, Vertex};
use crate::error::{Error, Result};
use crate::sperner::surface::{edge_counts, surface_info};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscFilling {
    /// Boundary cycle of the domain.
    pub boundary: Vec<Vertex>,
    pub triangles: Vec<Simplex>,
    /// Image of every domain vertex.
    pub phi: BTreeMap<Vertex, Vertex>,
    /// Inner ring parallel to the boundary (`collar[t]` sits next to
    /// `boundary[t]`), when the filling starts with a collar.
    pub collar: Option<Vec<Vertex>>,
}

impl DiscFilling {
    pub fn area(&self) -> usize {
        self.triangles.len()
    }

    pub fn boundary_images(&self) -> Vec<Vertex> {
        self.boundary.iter().map(|v| self.phi[v]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiscOutcome {
    Filled(DiscFilling),
    /// The boundary is nonzero in rational first homology of the target, so
    /// no filling exists.
    Obstructed,
    /// The bounded search found nothing.
    Unknown,
}

#[derive(Clone, Copy, Debug)]
pub struct DiscLimits {
    pub max_area: usize,
    pub nodes: usize,
    pub deadline: Option<Instant>,
}

pub const DEFAULT_DISC_NODES: usize = 200_000;

/// Fills the closed edge path `boundary` (images in `target`; a repeated
/// final vertex is dropped) by a disc with at most `max_area` triangles.
/// Domain vertices are `0..n` on the boundary and fresh ids inside. Paths
/// with fewer than three vertices get the empty, zero-area disc.
pub fn fill_disc(target: &Complex, boundary: &[Vertex], max_area: usize) -> Result<DiscOutcome> {
    let mut images = boundary.to_vec();
    if images.len() > 1 && images.first() == images.last() {
        images.pop();
    }
    check_closed_path(target, &images)?;
    let dom: Vec<Vertex> = (0..images.len() as u32).map(Vertex).collect();
    let phi: BTreeMap<Vertex, Vertex> = dom.iter().copied().zip(images.iter().copied()).collect();
    if images.len() < 3 {
        return Ok(DiscOutcome::Filled(DiscFilling { boundary: dom, triangles: vec![], phi, collar: None }));
    }
    if !is_rationally_null_homologous(target, &images)? {
        return Ok(DiscOutcome::Obstructed);
    }
    let mut next = images.len() as u32;
    let limits = DiscLimits { max_area, nodes: DEFAULT_DISC_NODES, deadline: None };
    let poly: Vec<(Vertex, Vertex)> = dom.iter().map(|&d| (d, phi[&d])).collect();
    Ok(match fill_polygon(target, &poly, &mut next, limits, 0) {
        Some((triangles, extra)) => {
            let mut phi = phi;
            phi.extend(extra);
            DiscOutcome::Filled(DiscFilling { boundary: dom, triangles, phi, collar: None })
        }
        None => DiscOutcome::Unknown,
    })
}

fn check_closed_path(target: &Complex, images: &[Vertex]) -> Result<()> {
    let n = images.len();
    if n == 0 {
        return Err(Error::input("empty boundary path"));
    }
    for (t, &v) in images.iter().enumerate() {
        let u = images[(t + 1) % n];
        if !target.has_vertex(v) || (u != v && !target.is_adjacent(u, v)) {
            return Err(Error::input(format!("boundary is not a closed edge path in the target at {v}-{u}")));
        }
    }
    Ok(())
}

/// Fills the domain cycle `boundary` (images from `phi`) starting with a
/// collar: a parallel inner ring `n_t` with `φ(n_t) = φ(b_t)` and triangles
/// `b_t b_{t+1} n_t`, `b_{t+1} n_{t+1} n_t`; the inner ring is then filled
/// freely. No interior edge of the result joins two boundary vertices.
pub(crate) fn fill_collared(
    target: &Complex,
    boundary: &[Vertex],
    phi: &BTreeMap<Vertex, Vertex>,
    next_id: &mut u32,
    limits: DiscLimits,
) -> Result<DiscOutcome> {
    let n = boundary.len();
    if n < 3 {
        return Err(Error::internal("collared disc needs a boundary of length >= 3"));
    }
    let images: Vec<Vertex> = boundary.iter().map(|v| phi[v]).collect();
    check_closed_path(target, &images)?;
    if !is_rationally_null_homologous(target, &images)? {
        return Ok(DiscOutcome::Obstructed);
    }
    let ring: Vec<Vertex> = (0..n)
        .map(|_| {
            *next_id += 1;
            Vertex(*next_id - 1)
        })
        .collect();
    let mut out_phi: BTreeMap<Vertex, Vertex> = boundary.iter().map(|v| (*v, phi[v])).collect();
    let mut triangles = Vec::with_capacity(2 * n);
    for t in 0..n {
        let s = (t + 1) % n;
        out_phi.insert(ring[t], images[t]);
        triangles.push(Simplex::new(vec![boundary[t], boundary[s], ring[t]])?);
        triangles.push(Simplex::new(vec![boundary[s], ring[s], ring[t]])?);
    }
    if 2 * n > limits.max_area {
        return Ok(DiscOutcome::Unknown);
    }
    let poly: Vec<(Vertex, Vertex)> = ring.iter().zip(images.iter()).map(|(&d, &i)| (d, i)).collect();
    let inner = DiscLimits { max_area: limits.max_area - 2 * n, ..limits };
    Ok(match fill_polygon(target, &poly, next_id, inner, 0) {
        Some((tris, extra)) => {
            triangles.extend(tris);
            out_phi.extend(extra);
            DiscOutcome::Filled(DiscFilling {
                boundary: boundary.to_vec(),
                triangles,
                phi: out_phi,
                collar: Some(ring),
            })
        }
        None => DiscOutcome::Unknown,
    })
}

/// First defect of a disc filling into `target`, if any.
pub fn disc_defect(target: &Complex, d: &DiscFilling) -> Option<String> {
    for v in d.boundary.iter().chain(d.triangles.iter().flat_map(|t| t.vertices())) {
        match d.phi.get(v) {
            None => return Some(format!("domain vertex {v} has no image")),
            Some(x) if !target.has_vertex(*x) => return Some(format!("image {x} of {v} is not in the target")),
            _ => {}
        }
    }
    let images = d.boundary_images();
    if let Err(e) = check_closed_path(target, &images) {
        return Some(e.to_string());
    }
    if d.boundary.len() < 3 {
        return (!d.triangles.is_empty()).then(|| "degenerate boundary with triangles".to_string());
    }
    if d.boundary.iter().collect::<BTreeSet<_>>().len() != d.boundary.len() {
        return Some("boundary cycle repeats a domain vertex".into());
    }
    if let Some(t) = d.triangles.iter().find(|t| !target.spans(t.vertices().iter().map(|v| d.phi[v]))) {
        return Some(format!("image of triangle {t} does not span a simplex"));
    }
    if d.triangles.iter().collect::<BTreeSet<_>>().len() != d.triangles.len() {
        return Some("repeated triangle".into());
    }
    match surface_info(&d.triangles) {
        Ok(info) if info.is_disc() => {}
        Ok(_) | Err(_) => return Some("triangles do not form a disc".into()),
    }
    let n = d.boundary.len();
    let want: BTreeSet<(Vertex, Vertex)> = (0..n)
        .map(|t| {
            let (a, b) = (d.boundary[t], d.boundary[(t + 1) % n]);
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let have: BTreeSet<(Vertex, Vertex)> =
        edge_counts(&d.triangles).into_iter().filter(|(_, c)| *c == 1).map(|(e, _)| e).collect();
    if want != have {
        return Some("disc boundary differs from the given cycle".into());
    }
    None
}

fn key(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

struct PolySearch<'a> {
    target: &'a Complex,
    dist: BTreeMap<Vertex, usize>,
    limits: DiscLimits,
    visited: usize,
    next_id: u32,
    edges: HashSet<(Vertex, Vertex)>,
    base_edges: HashSet<(Vertex, Vertex)>,
    tri_set: HashSet<Simplex>,
    tris: Vec<Simplex>,
    phi: BTreeMap<Vertex, Vertex>,
    seen: HashSet<Vec<Vertex>>,
}

enum Move {
    Ear(usize),
    /// New vertex with image `x` over the run of `len` edges starting at
    /// polygon index `start`; `len == n` closes the disc.
    Fan { start: usize, len: usize, x: Vertex },
}

/// Fills the polygon `(domain, image)` pairs; returns the new triangles and
/// the images of new vertices. `base_area` is already used elsewhere.
fn fill_polygon(
    target: &Complex,
    poly: &[(Vertex, Vertex)],
    next_id: &mut u32,
    limits: DiscLimits,
    base_area: usize,
) -> Option<(Vec<Simplex>, BTreeMap<Vertex, Vertex>)> {
    let center = central_vertex(target, poly.iter().map(|p| p.1))?;
    let dist = target.one_skeleton().distances_from(center);
    let n = poly.len();
    let edges: HashSet<(Vertex, Vertex)> = (0..n).map(|t| key(poly[t].0, poly[(t + 1) % n].0)).collect();
    let mut s = PolySearch {
        target,
        dist,
        limits: DiscLimits { max_area: limits.max_area.saturating_sub(base_area), ..limits },
        visited: 0,
        next_id: *next_id,
        base_edges: edges.clone(),
        edges,
        tri_set: HashSet::new(),
        tris: Vec::new(),
        phi: BTreeMap::new(),
        seen: HashSet::new(),
    };
    if s.dfs(poly.to_vec()) {
        *next_id = s.next_id;
        Some((s.tris, s.phi))
    } else {
        None
    }
}

/// Target vertex minimising the total distance to the given images.
fn central_vertex(target: &Complex, images: impl Iterator<Item = Vertex>) -> Option<Vertex> {
    let g = target.one_skeleton();
    let distinct: BTreeSet<Vertex> = images.collect();
    let mut total: BTreeMap<Vertex, usize> = BTreeMap::new();
    for (k, &src) in distinct.iter().enumerate() {
        let d = g.distances_from(src);
        if k == 0 {
            total = d;
        } else {
            total.retain(|v, _| d.contains_key(v));
            for (v, t) in total.iter_mut() {
                *t += d[v];
            }
        }
    }
    total.into_iter().min_by_key(|&(v, t)| (t, v)).map(|(v, _)| v)
}

/// Rotation- and reflection-invariant key of a cyclic word.
fn canonical(word: &[Vertex]) -> Vec<Vertex> {
    let n = word.len();
    let mut best: Option<Vec<Vertex>> = None;
    let rev: Vec<Vertex> = word.iter().rev().copied().collect();
    for w in [word, &rev[..]] {
        for r in 0..n {
            let cand: Vec<Vertex> = w[r..].iter().chain(w[..r].iter()).copied().collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

impl PolySearch<'_> {
    fn spans(&self, vs: &[Vertex]) -> bool {
        self.target.spans(vs.iter().copied())
    }

    fn potential(&self, images: impl Iterator<Item = Vertex>) -> usize {
        images.map(|v| 2 + self.dist.get(&v).copied().unwrap_or(1 << 20)).sum()
    }

    fn out_of_budget(&self) -> bool {
        self.visited >= self.limits.nodes || self.limits.deadline.is_some_and(|d| Instant::now() > d)
    }

    fn dfs(&mut self, poly: Vec<(Vertex, Vertex)>) -> bool {
        if self.out_of_budget() {
            return false;
        }
        self.visited += 1;
        let n = poly.len();
        let img: Vec<Vertex> = poly.iter().map(|p| p.1).collect();
        if n == 3 && self.tris.len() < self.limits.max_area {
            let t = Simplex::new(poly.iter().map(|p| p.0).collect()).expect("distinct domain vertices");
            if self.spans(&img) && !self.tri_set.contains(&t) {
                self.push_tri(t);
                return true;
            }
        }
        let mut moves: Vec<(usize, Move)> = Vec::new();
        if n > 3 {
            for i in 0..n {
                let (p, q) = ((i + n - 1) % n, (i + 1) % n);
                if self.spans(&[img[p], img[i], img[q]]) && !self.edges.contains(&key(poly[p].0, poly[q].0)) {
                    let pot = self.potential((0..n).filter(|&t| t != i).map(|t| img[t]));
                    moves.push((pot, Move::Ear(i)));
                }
            }
        }
        let mut fans_seen = BTreeSet::new();
        for t in 0..n {
            let (a, b) = (img[t], img[(t + 1) % n]);
            let cands: Vec<Vertex> =
                self.target.neighbors(a).filter(|&x| x != b && self.spans(&[a, b, x])).collect();
            for x in cands {
                let ok = |s: usize| self.spans(&[img[s % n], img[(s + 1) % n], x]);
                let mut start = t;
                let mut len = 1;
                while len < n && ok(start + n - 1) {
                    start = (start + n - 1) % n;
                    len += 1;
                }
                while len < n && ok(start + len) {
                    len += 1;
                }
                if !fans_seen.insert((start, len, x)) {
                    continue;
                }
                if len < n && n - len + 2 < 3 {
                    continue;
                }
                let pot = if len == n {
                    0
                } else {
                    // polygon keeps start, x, start+len and everything after
                    let kept = (0..=n - len).map(|k| img[(start + len + k) % n]);
                    self.potential(kept.chain(std::iter::once(x)))
                };
                moves.push((pot, Move::Fan { start, len, x }));
            }
        }
        moves.sort_by_key(|(pot, m)| {
            (*pot, match m {
                Move::Ear(i) => (0, *i, 0, 0),
                Move::Fan { start, len, x } => (1, *start, n - *len, x.0),
            })
        });
        for (_, m) in moves {
            let mark = (self.tris.len(), self.next_id);
            let next = match m {
                Move::Ear(i) => {
                    let (p, q) = ((i + n - 1) % n, (i + 1) % n);
                    if self.tris.len() + 1 > self.limits.max_area {
                        continue;
                    }
                    let t = Simplex::new(vec![poly[p].0, poly[i].0, poly[q].0]).expect("distinct");
                    self.push_tri(t);
                    let mut next = poly.clone();
                    next.remove(i);
                    next
                }
                Move::Fan { start, len, x } => {
                    if self.tris.len() + len > self.limits.max_area {
                        continue;
                    }
                    let nv = Vertex(self.next_id);
                    self.next_id += 1;
                    self.phi.insert(nv, x);
                    for k in 0..len {
                        let (u, w) = (poly[(start + k) % n].0, poly[(start + k + 1) % n].0);
                        self.push_tri(Simplex::new(vec![u, w, nv]).expect("fresh vertex"));
                    }
                    if len == n {
                        return true;
                    }
                    let mut next = vec![(nv, x)];
                    for k in 0..=n - len {
                        next.push(poly[(start + len + k) % n]);
                    }
                    next
                }
            };
            let word: Vec<Vertex> = next.iter().map(|p| p.1).collect();
            if self.seen.insert(canonical(&word)) && self.dfs(next) {
                return true;
            }
            self.undo(mark);
            if self.out_of_budget() {
                return false;
            }
        }
        false
    }

    fn push_tri(&mut self, t: Simplex) {
        let v = t.vertices();
        for (a, b) in [(v[0], v[1]), (v[0], v[2]), (v[1], v[2])] {
            self.edges.insert(key(a, b));
        }
        self.tri_set.insert(t.clone());
        self.tris.push(t);
    }

    fn undo(&mut self, (ntris, next_id): (usize, u32)) {
        while self.tris.len() > ntris {
            let t = self.tris.pop().unwrap();
            self.tri_set.remove(&t);
        }
        self.edges = self.base_edges.clone();
        for t in &self.tris {
            let v = t.vertices();
            for (a, b) in [(v[0], v[1]), (v[0], v[2]), (v[1], v[2])] {
                self.edges.insert(key(a, b));
            }
        }
        for id in next_id..self.next_id {
            self.phi.remove(&Vertex(id));
        }
        self.next_id = next_id;
    }
}
