//! Full (induced, triangle-free) cycles and the largeness conditions built on
//! them.

use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{Complex, Simplex, Vertex};
use crate::error::{Error, Result};

/// A cycle whose vertex set spans exactly the cycle as a full subcomplex.
///
/// Stored in canonical form: rotated to start at its smallest vertex and
/// oriented so the second vertex is smaller than the last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FullCycle(Vec<Vertex>);

impl FullCycle {
    pub fn canonical(mut cycle: Vec<Vertex>) -> Self {
        let n = cycle.len();
        let (start, _) = cycle.iter().enumerate().min_by_key(|(_, v)| **v).expect("nonempty cycle");
        cycle.rotate_left(start);
        if n > 2 && cycle[1] > cycle[n - 1] {
            cycle[1..].reverse();
        }
        FullCycle(cycle)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.0.iter().copied().collect()
    }
}

impl fmt::Display for FullCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Vertex::to_string).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// All full cycles of length `3..=max_len`, each reported once.
///
/// Induced paths are grown from their smallest vertex; a path can only be
/// extended by a vertex adjacent to its last vertex and to no other path
/// vertex, which keeps every closed path chordless. Length-3 cycles are kept
/// only when they do not bound a triangle.
pub fn enumerate_full_cycles(x: &Complex, max_len: usize) -> Vec<FullCycle> {
    let mut out = Vec::new();
    if max_len < 3 {
        return out;
    }
    let verts: Vec<Vertex> = x.vertices().collect();
    for &s in &verts {
        let mut path = vec![s];
        grow(x, max_len, &mut path, &mut out);
    }
    out.sort();
    out
}

fn grow(x: &Complex, max_len: usize, path: &mut Vec<Vertex>, out: &mut Vec<FullCycle>) {
    let s = path[0];
    let last = *path.last().unwrap();
    let candidates: Vec<Vertex> = x.neighbors(last).filter(|&v| v > s && !path.contains(&v)).collect();
    for v in candidates {
        // v must not touch any interior path vertex other than `last`
        if path.len() > 2 && path[1..path.len() - 1].iter().any(|&p| x.is_adjacent(p, v)) {
            continue;
        }
        let closes = path.len() >= 2 && x.is_adjacent(v, s);
        if closes {
            // each cycle is found in both directions; keep one
            if path[1] < v {
                let mut cyc = path.clone();
                cyc.push(v);
                let keep = cyc.len() > 3
                    || !x.contains(&Simplex::new(cyc.clone()).expect("distinct vertices"));
                if keep {
                    out.push(FullCycle::canonical(cyc));
                }
            }
            continue;
        }
        if path.len() + 1 < max_len {
            path.push(v);
            grow(x, max_len, path, out);
            path.pop();
        }
    }
}

fn require_flag(x: &Complex) -> Result<()> {
    if x.is_flag() {
        Ok(())
    } else {
        Err(Error::domain("largeness is only defined for flag complexes"))
    }
}

/// No full cycles of length `< k`.
pub fn is_k_large(x: &Complex, k: usize) -> Result<bool> {
    if k < 5 {
        return Err(Error::domain(format!("k-largeness needs k >= 5, got {k}")));
    }
    require_flag(x)?;
    Ok(enumerate_full_cycles(x, k - 1).is_empty())
}

/// Every link of every simplex is k-large. Returns the first offending
/// simplex and cycle when the check fails.
pub fn locally_k_large_witness(x: &Complex, k: usize) -> Result<Option<(Simplex, FullCycle)>> {
    if k < 5 {
        return Err(Error::domain(format!("k-largeness needs k >= 5, got {k}")));
    }
    require_flag(x)?;
    for s in x.simplices() {
        let link = x.link(s)?;
        if let Some(c) = enumerate_full_cycles(&link, k - 1).into_iter().next() {
            return Ok(Some((s.clone(), c)));
        }
    }
    Ok(None)
}

pub fn is_locally_k_large(x: &Complex, k: usize) -> Result<bool> {
    Ok(locally_k_large_witness(x, k)?.is_none())
}
