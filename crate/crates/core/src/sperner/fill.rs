//! Filling a triangulated 2-sphere by a 3-ball without new vertices.
//!
//! The search removes one sphere vertex `v` at a time: the star of `v` is
//! replaced by a triangulation Δ of its link polygon using diagonals that are
//! not yet sphere edges, and the tetrahedra `v * δ` for `δ ∈ Δ` are added.
//! The sphere shrinks by one vertex per step until it is the boundary of a
//! single tetrahedron. Reading the steps backwards is a shelling, so the
//! tetrahedra always form a 3-ball whose vertices all lie on the original
//! sphere. Every tetrahedron must pass the caller's admissibility test.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use crate::complex::{Simplex, Vertex};

#[derive(Clone, Copy, Debug)]
pub struct FillBudget {
    /// Maximum number of search states visited.
    pub nodes: usize,
    pub deadline: Option<Instant>,
}

impl FillBudget {
    pub fn nodes(nodes: usize) -> Self {
        FillBudget { nodes, deadline: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FillOutcome {
    Filled(Vec<Simplex>),
    /// The search space was exhausted without success.
    NoFilling,
    /// The node budget or deadline ran out.
    BudgetExhausted,
}

struct Search<'a> {
    admissible: &'a dyn Fn(&[Vertex]) -> bool,
    budget: FillBudget,
    visited: usize,
    failed: HashSet<Vec<Simplex>>,
    out_of_budget: bool,
}

/// Fills the sphere given by `triangles`. `admissible` receives the four
/// vertices of each proposed tetrahedron.
pub fn fill_sphere(triangles: &[Simplex], admissible: &dyn Fn(&[Vertex]) -> bool, budget: FillBudget) -> FillOutcome {
    let state: BTreeSet<Simplex> = triangles.iter().cloned().collect();
    let mut search = Search { admissible, budget, visited: 0, failed: HashSet::new(), out_of_budget: false };
    let mut tets = Vec::new();
    if search.dfs(&state, &mut tets) {
        FillOutcome::Filled(tets)
    } else if search.out_of_budget {
        FillOutcome::BudgetExhausted
    } else {
        FillOutcome::NoFilling
    }
}

impl Search<'_> {
    fn dfs(&mut self, state: &BTreeSet<Simplex>, tets: &mut Vec<Simplex>) -> bool {
        if self.visited >= self.budget.nodes || self.budget.deadline.is_some_and(|d| Instant::now() > d) {
            self.out_of_budget = true;
            return false;
        }
        self.visited += 1;
        let key: Vec<Simplex> = state.iter().cloned().collect();
        if self.failed.contains(&key) {
            return false;
        }
        let mut star: BTreeMap<Vertex, Vec<&Simplex>> = BTreeMap::new();
        for t in state {
            for &v in t.vertices() {
                star.entry(v).or_default().push(t);
            }
        }
        if star.len() == 4 {
            let all: Vec<Vertex> = star.keys().copied().collect();
            if state.len() == 4 && (self.admissible)(&all) {
                tets.push(Simplex::new(all).expect("distinct"));
                return true;
            }
            self.failed.insert(key);
            return false;
        }
        let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
        for t in state {
            let v = t.vertices();
            for (a, b) in [(v[0], v[1]), (v[0], v[2]), (v[1], v[2])] {
                adj.entry(a).or_default().insert(b);
                adj.entry(b).or_default().insert(a);
            }
        }
        let mut order: Vec<Vertex> = star.keys().copied().collect();
        order.sort_by_key(|v| (adj[v].len(), *v));
        for v in order {
            let Some(link) = link_cycle(v, &star[&v]) else { continue };
            let Some(patch) = triangulate_link(v, &link, &adj, self.admissible) else { continue };
            let mut next: BTreeSet<Simplex> = state.iter().filter(|t| !t.contains(v)).cloned().collect();
            next.extend(patch.iter().cloned());
            let mark = tets.len();
            tets.extend(patch.iter().map(|d| d.union(&Simplex::vertex(v))));
            if self.dfs(&next, tets) {
                return true;
            }
            tets.truncate(mark);
            if self.out_of_budget {
                return false;
            }
        }
        self.failed.insert(key);
        false
    }
}

/// The link of `v` as a cyclically ordered vertex list.
fn link_cycle(v: Vertex, star: &[&Simplex]) -> Option<Vec<Vertex>> {
    let mut next: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for t in star {
        let opp: Vec<Vertex> = t.vertices().iter().copied().filter(|&u| u != v).collect();
        next.entry(opp[0]).or_default().push(opp[1]);
        next.entry(opp[1]).or_default().push(opp[0]);
    }
    let start = *next.keys().next()?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = next[&start][0];
    while cur != start {
        cycle.push(cur);
        let nb = &next[&cur];
        let step = if nb[0] == prev { nb.get(1)? } else { &nb[0] };
        prev = cur;
        cur = *step;
        if cycle.len() > star.len() {
            return None;
        }
    }
    (cycle.len() == star.len()).then_some(cycle)
}

/// Triangulates the link polygon with admissible cones over `v`, never using
/// an existing sphere edge as a diagonal. Interval dynamic programming;
/// ties go to the smallest split index.
fn triangulate_link(
    v: Vertex,
    link: &[Vertex],
    adj: &BTreeMap<Vertex, BTreeSet<Vertex>>,
    admissible: &dyn Fn(&[Vertex]) -> bool,
) -> Option<Vec<Simplex>> {
    let m = link.len();
    if m < 3 {
        return None;
    }
    let chord_ok = |i: usize, j: usize| j == i + 1 || (i == 0 && j == m - 1) || !adj[&link[i]].contains(&link[j]);
    // split[i][j] = Some(k) when polygon i..=j closed by chord (i, j) is triangulable
    let mut split: Vec<Vec<Option<usize>>> = vec![vec![None; m]; m];
    let ok = |split: &Vec<Vec<Option<usize>>>, i: usize, j: usize| j == i + 1 || split[i][j].is_some();
    for len in 2..m {
        for i in 0..m - len {
            let j = i + len;
            if !chord_ok(i, j) {
                continue;
            }
            for k in i + 1..j {
                if ok(&split, i, k) && ok(&split, k, j) && admissible(&[v, link[i], link[k], link[j]]) {
                    split[i][j] = Some(k);
                    break;
                }
            }
        }
    }
    split[0][m - 1]?;
    let mut out = Vec::new();
    let mut stack = vec![(0, m - 1)];
    while let Some((i, j)) = stack.pop() {
        if j == i + 1 {
            continue;
        }
        let k = split[i][j].expect("triangulable");
        out.push(Simplex::new(vec![link[i], link[k], link[j]]).expect("distinct"));
        stack.push((i, k));
        stack.push((k, j));
    }
    Some(out)
}
