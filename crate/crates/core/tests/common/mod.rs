//! Shared oracles and input builders for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use systolic::checkers::FullCycle;
use systolic::generate::{cone, grid_vertex, tri_grid};
use systolic::helly::{first_failure, HellyInput};
use systolic::{flag_complex, Complex, Graph, Simplex, Vertex};

/// Flag complex of a G(n, p) random graph on vertices `0..n`.
pub fn random_flag_complex<R: Rng>(rng: &mut R, n: usize, p: f64) -> Complex {
    let vs: Vec<Vertex> = (0..n as u32).map(Vertex).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((vs[i], vs[j]));
            }
        }
    }
    flag_complex(&Graph::new(vs.iter().copied(), edges).unwrap(), None)
}

/// Every vertex subset of size 3..=max_len whose induced graph is a single
/// cycle and which is not itself a simplex, by brute force over all subsets.
pub fn naive_full_cycles(x: &Complex, max_len: usize) -> BTreeSet<BTreeSet<Vertex>> {
    let vs: Vec<Vertex> = x.vertices().collect();
    let n = vs.len();
    assert!(n <= 20);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 3 || size > max_len {
            continue;
        }
        let set: Vec<Vertex> = (0..n).filter(|&i| mask & (1 << i) != 0).map(|i| vs[i]).collect();
        let deg = |v: Vertex| set.iter().filter(|&&u| x.is_adjacent(u, v)).count();
        if set.iter().any(|&v| deg(v) != 2) || (size == 3 && x.spans(set.iter().copied())) {
            continue;
        }
        // 2-regular: connected iff a walk from the first vertex sees everything
        let mut seen = BTreeSet::from([set[0]]);
        let mut stack = vec![set[0]];
        while let Some(u) = stack.pop() {
            for &w in &set {
                if x.is_adjacent(u, w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.len() == size {
            out.insert(set.into_iter().collect());
        }
    }
    out
}

pub fn cycle_sets(cycles: &[FullCycle]) -> BTreeSet<BTreeSet<Vertex>> {
    cycles.iter().map(FullCycle::vertex_set).collect()
}

/// Random subcomplex of `x`: each maximal simplex kept with probability `p`,
/// closed under faces.
pub fn random_subcomplex<R: Rng>(rng: &mut R, x: &Complex, p: f64) -> Complex {
    Complex::from_simplices(x.maximal_simplices().into_iter().filter(|_| rng.gen_bool(p)).flat_map(|s| {
        let faces: Vec<Simplex> = s.faces().collect();
        faces
    }))
}

/// Complement by brute force: every face of every simplex of `x` not in `y`.
pub fn naive_complement(x: &Complex, y: &Complex) -> BTreeSet<Simplex> {
    let mut out = BTreeSet::new();
    for s in x.simplices().filter(|s| !y.contains(s)) {
        out.extend(s.faces());
    }
    out
}

/// Hexagonal configuration on tri_grid(8, 8) centred at (4, 4).
///
/// Three 120-degree sectors T_0, T_1, T_2 around a small central hexagon D.
/// A_k = D ∪ T_{k+1} ∪ T_{k+2} for k < 3, and A_3 = T_0 ∪ T_1 ∪ T_2, an
/// annulus. With `coned` the grid is coned off and the apex joins A_3.
pub fn hex_config(coned: bool) -> HellyInput {
    let base = tri_grid(8, 8).unwrap();
    let [d, t0, t1, t2] = hex_parts(8, 4, 1);
    let apex = Vertex(base.num_vertices() as u32);
    let x = if coned { cone(&base) } else { base };
    let mut sets = hex_sets(&d, &[t0, t1, t2]);
    if coned {
        sets[3].insert(apex);
    }
    HellyInput::new(x.clone(), sets.map(|s| x.full_subcomplex(&s).unwrap()))
}

/// Central hexagon of radius `r0` around (c, c) in tri_grid(n, n) and the
/// three sectors of radius c around it.
pub fn hex_parts(n: usize, c: i64, r0: i64) -> [BTreeSet<Vertex>; 4] {
    let dirs = [(1i64, 0i64), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];
    let hexdist = |di: i64, dj: i64| di.abs().max(dj.abs()).max((di + dj).abs());
    let mut parts: [BTreeSet<Vertex>; 4] = Default::default();
    parts[0].insert(grid_vertex(n, c as usize, c as usize));
    for k in 0..3 {
        let (u, v) = (dirs[2 * k], dirs[(2 * k + 2) % 6]);
        for a in 1..=c {
            for b in 0..=c {
                let (i, j) = (c + a * u.0 + b * v.0, c + a * u.1 + b * v.1);
                if !(0..=n as i64).contains(&i) || !(0..=n as i64).contains(&j) {
                    continue;
                }
                let p = grid_vertex(n, i as usize, j as usize);
                let part = if hexdist(i - c, j - c) <= r0 { 0 } else { k + 1 };
                parts[part].insert(p);
            }
        }
    }
    parts
}

fn hex_sets(d: &BTreeSet<Vertex>, t: &[BTreeSet<Vertex>; 3]) -> [BTreeSet<Vertex>; 4] {
    [0usize, 1, 2, 3].map(|k| {
        if k == 3 {
            t.iter().flatten().copied().collect()
        } else {
            d.iter().chain(&t[(k + 1) % 3]).chain(&t[(k + 2) % 3]).copied().collect()
        }
    })
}

/// Connected vertex set of the given size grown by random neighbour steps
/// from `start`, or from a random vertex.
fn grow<R: Rng>(rng: &mut R, x: &Complex, size: usize, start: Option<Vertex>) -> BTreeSet<Vertex> {
    let vs: Vec<Vertex> = x.vertices().collect();
    let mut s = BTreeSet::from([start.unwrap_or_else(|| *vs.choose(rng).unwrap())]);
    while s.len() < size {
        let cur: Vec<Vertex> = s.iter().copied().collect();
        let u = *cur.choose(rng).unwrap();
        let nb: Vec<Vertex> = x.neighbors(u).collect();
        s.insert(*nb.choose(rng).unwrap());
    }
    s
}

/// Random input on a grid up to tri_grid(6, 6) that satisfies the
/// structural hypotheses. A third of the draws grow all four sets from one
/// vertex, so they share it; a third are hexagonal configurations with a few
/// random vertices added, which usually have no common vertex.
pub fn random_valid_input<R: Rng>(rng: &mut R) -> HellyInput {
    loop {
        let kind = rng.gen_range(0..3);
        let input = if kind == 2 {
            let n = rng.gen_range(4..=6);
            let x = tri_grid(n, n).unwrap();
            let [d, t0, t1, t2] = hex_parts(n, n as i64 / 2, rng.gen_range(0..=1));
            let mut sets = hex_sets(&d, &[t0, t1, t2]);
            for s in &mut sets {
                for _ in 0..rng.gen_range(0..=2) {
                    let cur: Vec<Vertex> = s.iter().copied().collect();
                    let nb: Vec<Vertex> = x.neighbors(*cur.choose(rng).unwrap()).collect();
                    s.insert(*nb.choose(rng).unwrap());
                }
            }
            HellyInput::new(x.clone(), sets.map(|s| x.full_subcomplex(&s).unwrap()))
        } else {
            let (w, h) = (rng.gen_range(2..=6), rng.gen_range(2..=6));
            let x = tri_grid(w, h).unwrap();
            let n = x.num_vertices();
            let common = (kind == 0).then(|| Vertex(rng.gen_range(0..n as u32)));
            let a = [(); 4].map(|_| {
                let size = rng.gen_range(2..=n.min(20));
                x.full_subcomplex(&grow(rng, &x, size, common)).unwrap()
            });
            HellyInput::new(x, a)
        };
        if first_failure(&input).is_none() {
            return input;
        }
    }
}
