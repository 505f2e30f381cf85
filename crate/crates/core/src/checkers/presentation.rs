//! Edge-path group presentations, Tietze simplification and first homology.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::checkers::TriState;
use crate::complex::{Complex, Vertex};
use crate::error::{Error, Result};

/// A letter is a generator index shifted by one, negative for inverses.
pub type Letter = i32;
pub type Word = Vec<Letter>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    /// Generator labels; for edge-path presentations these are the oriented
    /// edges `(u, v)` with `u < v` outside the spanning tree.
    pub generators: Vec<(Vertex, Vertex)>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty() && self.relators.iter().all(Vec::is_empty)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generators.len()).map(|i| format!("g{i}")).collect();
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&l| if l > 0 { format!("g{l}") } else { format!("g{}^-1", -l) })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

/// Edge-path group of `x` at `basepoint`: generators are the edges outside a
/// BFS spanning tree, one relator per triangle.
pub fn fundamental_group_presentation(x: &Complex, basepoint: Vertex) -> Result<Presentation> {
    if !x.has_vertex(basepoint) {
        return Err(Error::domain(format!("basepoint {basepoint} is not a vertex")));
    }
    if !x.is_connected() {
        return Err(Error::domain("fundamental group presentation needs a connected complex"));
    }
    let mut tree: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    let mut seen = BTreeSet::from([basepoint]);
    let mut queue = VecDeque::from([basepoint]);
    while let Some(u) = queue.pop_front() {
        for v in x.neighbors(u) {
            if seen.insert(v) {
                tree.insert(if u < v { (u, v) } else { (v, u) });
                queue.push_back(v);
            }
        }
    }
    let mut index: BTreeMap<(Vertex, Vertex), Letter> = BTreeMap::new();
    let mut generators = Vec::new();
    for e in x.simplices_of_dim(1) {
        let pair = (e.vertices()[0], e.vertices()[1]);
        if !tree.contains(&pair) {
            generators.push(pair);
            index.insert(pair, generators.len() as Letter);
        }
    }
    let letter = |a: Vertex, b: Vertex| -> Option<Letter> {
        if a < b {
            index.get(&(a, b)).copied()
        } else {
            index.get(&(b, a)).map(|l| -l)
        }
    };
    let relators = x
        .simplices_of_dim(2)
        .map(|t| {
            let [a, b, c] = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
            [letter(a, b), letter(b, c), letter(c, a)].into_iter().flatten().collect()
        })
        .collect();
    Ok(Presentation { generators, relators })
}

fn free_reduce(w: &mut Word) {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w.iter() {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    while out.len() >= 2 && out[0] == -out[out.len() - 1] {
        out.pop();
        out.remove(0);
    }
    *w = out;
}

/// Outcome of [`simplify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    pub presentation: Presentation,
    pub moves: usize,
    pub exhausted: bool,
}

/// Bounded Tietze simplification: free and cyclic reduction, deletion of empty
/// and duplicate relators, and elimination of a generator occurring exactly
/// once in some relator. Each elimination and each rewritten relator counts as
/// one move.
pub fn simplify(p: &Presentation, effort: usize) -> Simplified {
    let mut gens: Vec<(Vertex, Vertex)> = p.generators.clone();
    let mut alive: Vec<bool> = vec![true; gens.len() + 1];
    let mut rels: Vec<Word> = p.relators.clone();
    let mut moves = 0usize;
    let mut exhausted = false;
    loop {
        for r in rels.iter_mut() {
            free_reduce(r);
        }
        rels.retain(|r| !r.is_empty());
        rels.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        rels.dedup();
        // shortest relator with a generator occurring exactly once
        let mut pick = None;
        'outer: for (ri, r) in rels.iter().enumerate() {
            let mut count: BTreeMap<Letter, usize> = BTreeMap::new();
            for &l in r {
                *count.entry(l.abs()).or_default() += 1;
            }
            for (&g, &c) in &count {
                if c == 1 {
                    pick = Some((ri, g));
                    break 'outer;
                }
            }
        }
        let Some((ri, g)) = pick else { break };
        let affected = rels.iter().enumerate().filter(|&(i, r)| i != ri && r.iter().any(|l| l.abs() == g)).count();
        if moves + 1 + affected > effort {
            exhausted = true;
            break;
        }
        moves += 1 + affected;
        // r = u g^e v  =>  g^e = u^-1 v^-1, so g = (v u)^-e
        let r = rels.remove(ri);
        let pos = r.iter().position(|l| l.abs() == g).unwrap();
        let sign = r[pos].signum();
        let mut vu: Word = r[pos + 1..].to_vec();
        vu.extend_from_slice(&r[..pos]);
        let g_word: Word = if sign > 0 { invert(&vu) } else { vu };
        let g_inv = invert(&g_word);
        for w in rels.iter_mut() {
            if w.iter().any(|l| l.abs() == g) {
                let mut out = Vec::with_capacity(w.len());
                for &l in w.iter() {
                    if l == g {
                        out.extend_from_slice(&g_word);
                    } else if l == -g {
                        out.extend_from_slice(&g_inv);
                    } else {
                        out.push(l);
                    }
                }
                *w = out;
            }
        }
        alive[g as usize] = false;
    }
    // renumber surviving generators
    let mut renum: BTreeMap<Letter, Letter> = BTreeMap::new();
    let mut kept = Vec::new();
    for (i, gen) in gens.drain(..).enumerate() {
        let old = (i + 1) as Letter;
        if alive[old as usize] {
            kept.push(gen);
            renum.insert(old, kept.len() as Letter);
        }
    }
    let relators = rels
        .into_iter()
        .map(|w| w.into_iter().map(|l| renum[&l.abs()] * l.signum()).collect())
        .collect();
    Simplified { presentation: Presentation { generators: kept, relators }, moves, exhausted }
}

fn invert(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| -l).collect()
}

/// Abelianized relator matrix (rows = relators, columns = generators).
pub fn relator_matrix(p: &Presentation) -> Vec<Vec<i64>> {
    p.relators
        .iter()
        .map(|w| {
            let mut row = vec![0i64; p.generators.len()];
            for &l in w {
                row[(l.abs() - 1) as usize] += l.signum() as i64;
            }
            row
        })
        .collect()
}

/// First homology of the presented group as (free rank, torsion
/// coefficients > 1), via Smith normal form of the relator matrix.
pub fn first_homology(p: &Presentation) -> (usize, Vec<i64>) {
    let n = p.generators.len();
    let diag = smith_diagonal(relator_matrix(p), n);
    let rank = diag.len();
    let torsion = diag.into_iter().map(i64::abs).filter(|&d| d > 1).collect();
    (n - rank, torsion)
}

/// Word of the closed edge path `path` (consecutive repeats allowed) in an
/// edge-path presentation: tree edges contribute nothing.
pub fn edge_path_word(p: &Presentation, path: &[Vertex]) -> Word {
    let index: BTreeMap<(Vertex, Vertex), Letter> =
        p.generators.iter().enumerate().map(|(i, &e)| (e, i as Letter + 1)).collect();
    let mut w = Word::new();
    for (k, &a) in path.iter().enumerate() {
        let b = path[(k + 1) % path.len()];
        if a < b {
            w.extend(index.get(&(a, b)));
        } else if b < a {
            w.extend(index.get(&(b, a)).map(|l| -l));
        }
    }
    w
}

/// Whether the closed edge path `path` in `x` is zero in `H_1(x; Q)`. A
/// `false` answer proves the path bounds no disc in `x`.
pub fn is_rationally_null_homologous(x: &Complex, path: &[Vertex]) -> Result<bool> {
    let Some(&start) = path.first() else { return Ok(true) };
    let comp = x
        .connected_components()
        .into_iter()
        .find(|c| c.contains(&start))
        .ok_or_else(|| Error::domain(format!("{start} is not a vertex")))?;
    let sub = x.full_subcomplex_unchecked(&comp.into_iter().collect());
    let p = fundamental_group_presentation(&sub, start)?;
    let mut class = vec![0i64; p.generators.len()];
    for l in edge_path_word(&p, path) {
        class[(l.abs() - 1) as usize] += l.signum() as i64;
    }
    if class.iter().all(|&c| c == 0) {
        return Ok(true);
    }
    let m = relator_matrix(&p);
    let rank = smith_diagonal(m.clone(), class.len()).len();
    let mut with = m;
    with.push(class);
    let cols = p.generators.len();
    Ok(smith_diagonal(with, cols).len() == rank)
}

/// Nonzero diagonal entries of the Smith normal form.
fn smith_diagonal(mut m: Vec<Vec<i64>>, cols: usize) -> Vec<i64> {
    let rows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero |entry| in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j] / p;
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if m[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // divisibility of the rest of the block
                let bad = (t + 1..rows).flat_map(|i| (t + 1..cols).map(move |j| (i, j))).find(|&(i, j)| m[i][j] % p != 0);
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            m[t][j] += m[i][j];
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // move the smallest remaining entry of row/column t to the pivot
            let mut bi = (t, t);
            for i in t..rows {
                if m[i][t] != 0 && m[i][t].abs() < m[bi.0][bi.1].abs() {
                    bi = (i, t);
                }
            }
            for j in t..cols {
                if m[t][j] != 0 && m[t][j].abs() < m[bi.0][bi.1].abs() {
                    bi = (t, j);
                }
            }
            m.swap(t, bi.0);
            for row in m.iter_mut() {
                row.swap(t, bi.1);
            }
        }
        diag.push(m[t][t]);
        t += 1;
    }
    diag
}

/// Yes when bounded Tietze simplification reaches the trivial presentation,
/// No when first homology is nontrivial (or `x` is empty or disconnected),
/// Unknown otherwise.
pub fn is_simply_connected_bounded(x: &Complex, effort: usize) -> Result<TriState> {
    let Some(base) = x.vertices().next() else {
        return Err(Error::domain("the empty complex is not connected"));
    };
    let p = fundamental_group_presentation(x, base)?;
    let (rank, torsion) = first_homology(&p);
    if rank > 0 || !torsion.is_empty() {
        return Ok(TriState::No);
    }
    let s = simplify(&p, effort);
    Ok(if s.presentation.is_trivial() { TriState::Yes } else { TriState::Unknown })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::simplex;
    use crate::generate;

    #[test]
    fn triangle_is_trivial() {
        let x = Complex::from_simplices([simplex(&[0, 1, 2])]);
        let p = fundamental_group_presentation(&x, Vertex(0)).unwrap();
        assert!(simplify(&p, 100).presentation.is_trivial());
    }

    #[test]
    fn six_cycle_has_one_free_generator() {
        let x = generate::cycle(6).unwrap();
        let p = fundamental_group_presentation(&x, Vertex(0)).unwrap();
        assert_eq!(p.num_generators(), 1);
        assert!(p.relators.is_empty());
        assert_eq!(first_homology(&p), (1, vec![]));
        assert_eq!(is_simply_connected_bounded(&x, 10_000).unwrap(), TriState::No);
    }

    #[test]
    fn tetra_boundary_simplifies_to_trivial() {
        let x = generate::tetra_boundary();
        let p = fundamental_group_presentation(&x, Vertex(0)).unwrap();
        assert_eq!(p.num_generators(), 3);
        assert_eq!(first_homology(&p), (0, vec![]));
        assert!(simplify(&p, 100).presentation.is_trivial());
    }

    #[test]
    fn simply_connected_examples() {
        assert_eq!(is_simply_connected_bounded(&generate::tri_grid(4, 4).unwrap(), 10_000).unwrap(), TriState::Yes);
        assert_eq!(is_simply_connected_bounded(&generate::icosahedron(), 10_000).unwrap(), TriState::Yes);
        assert_eq!(is_simply_connected_bounded(&generate::cone(&generate::cycle(7).unwrap()), 10_000).unwrap(), TriState::Yes);
        // zero effort cannot finish, but homology is still decisive
        assert_eq!(is_simply_connected_bounded(&generate::icosahedron(), 0).unwrap(), TriState::Unknown);
        assert_eq!(is_simply_connected_bounded(&generate::cycle(5).unwrap(), 0).unwrap(), TriState::No);
        let two = Complex::from_simplices([simplex(&[0, 1]), simplex(&[2, 3])]);
        assert!(is_simply_connected_bounded(&two, 10).is_err());
    }

    #[test]
    fn torsion_is_detected() {
        // < a | a^2 >
        let p = Presentation { generators: vec![(Vertex(0), Vertex(1))], relators: vec![vec![1, 1]] };
        assert_eq!(first_homology(&p), (0, vec![2]));
        // < a, b | a^2 b^4, a^4 b^2 > has H1 = Z/2 x Z/6
        let p = Presentation {
            generators: vec![(Vertex(0), Vertex(1)), (Vertex(0), Vertex(2))],
            relators: vec![vec![1, 1, 2, 2, 2, 2], vec![1, 1, 1, 1, 2, 2]],
        };
        let (rank, mut t) = first_homology(&p);
        t.sort();
        assert_eq!((rank, t), (0, vec![2, 6]));
    }

    #[test]
    fn projective_plane_has_torsion() {
        // 6-vertex RP^2
        let x = Complex::from_vertex_lists(
            [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]]
                .map(|t| t.map(Vertex)),
        )
        .unwrap();
        let p = fundamental_group_presentation(&x, Vertex(0)).unwrap();
        assert_eq!(first_homology(&p), (0, vec![2]));
        assert_eq!(is_simply_connected_bounded(&x, 10_000).unwrap(), TriState::No);
    }
}
