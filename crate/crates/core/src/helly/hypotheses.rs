//! Hypotheses of the four-set Helly procedure, the trivial case, triple
//! points and connecting paths.

use std::collections::{BTreeMap, VecDeque};

use crate::checkers::{classify, ClassifyOptions, TriState};
use crate::complex::{Complex, Vertex};
use crate::error::{Error, HypothesisFailure, Result};
use crate::helly::HellyInput;

/// Outcome of [`check_hypotheses`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    /// First failing hypothesis, if any.
    pub failure: Option<HypothesisFailure>,
    /// Advisory systolicity verdict for X.
    pub systolic: TriState,
}

impl HypothesisReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// The structural hypotheses: every A_i is a nonempty connected subcomplex,
/// every A_i ∩ A_j is connected and every triple intersection is nonempty.
pub fn first_failure(input: &HellyInput) -> Option<HypothesisFailure> {
    let a = &input.a;
    for (index, ai) in a.iter().enumerate() {
        if let Some(s) = ai.first_simplex_outside(&input.x) {
            return Some(HypothesisFailure::NotSubcomplex { index, witness: s.vertices().to_vec() });
        }
    }
    for (index, ai) in a.iter().enumerate() {
        if ai.is_empty() {
            return Some(HypothesisFailure::EmptySet { index });
        }
        if !ai.is_connected() {
            return Some(HypothesisFailure::Disconnected { index });
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let components = a[i].intersection(&a[j]).connected_components();
            if components.len() > 1 {
                return Some(HypothesisFailure::DisconnectedPair { i, j, components });
            }
        }
    }
    (0..4).rev().find(|&l| triple(input, l).next().is_none()).map(|omitted| HypothesisFailure::EmptyTriple { omitted })
}

/// Structural hypotheses plus the advisory classification of X.
pub fn check_hypotheses(input: &HellyInput) -> Result<HypothesisReport> {
    let failure = first_failure(input);
    let systolic = classify(&input.x, &ClassifyOptions::default())?.systolic;
    Ok(HypothesisReport { failure, systolic })
}

pub(crate) fn require_hypotheses(input: &HellyInput) -> Result<()> {
    match first_failure(input) {
        None => Ok(()),
        Some(f) => Err(Error::Hypothesis(f)),
    }
}

/// Vertices of the intersection of the three sets other than `A_omitted`,
/// in increasing order.
fn triple(input: &HellyInput, omitted: usize) -> impl Iterator<Item = Vertex> + '_ {
    let idx: Vec<usize> = (0..4).filter(|&i| i != omitted).collect();
    input.a[idx[0]].vertices().filter(move |&v| input.a[idx[1]].has_vertex(v) && input.a[idx[2]].has_vertex(v))
}

/// Least vertex common to all four sets.
pub fn trivial_vertex(input: &HellyInput) -> Option<Vertex> {
    triple(input, 3).find(|&v| input.a[3].has_vertex(v))
}

/// `z_l` is the least vertex of the triple intersection omitting `A_l`.
pub fn pick_triple_points(input: &HellyInput) -> Result<[Vertex; 4]> {
    let mut z = [Vertex(0); 4];
    for (l, zl) in z.iter_mut().enumerate() {
        *zl = triple(input, l)
            .next()
            .ok_or(Error::Hypothesis(HypothesisFailure::EmptyTriple { omitted: l }))?;
    }
    Ok(z)
}

/// Shortest edge path from `a` to `b` inside `region`. Breadth-first search
/// visits neighbours in increasing order and keeps the first parent found.
pub fn connect_path(region: &Complex, a: Vertex, b: Vertex) -> Result<Vec<Vertex>> {
    if !region.has_vertex(a) || !region.has_vertex(b) {
        return Err(Error::input(format!("{a} or {b} is not in the region")));
    }
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::from([(a, a)]);
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            break;
        }
        for v in region.neighbors(u) {
            if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(v) {
                e.insert(u);
                queue.push_back(v);
            }
        }
    }
    if !parent.contains_key(&b) {
        return Err(Error::Hypothesis(HypothesisFailure::NoPath { from: a, to: b }));
    }
    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(parent[path.last().unwrap()]);
    }
    path.reverse();
    Ok(path)
}
