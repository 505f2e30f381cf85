//! Line-based text formats.
//!
//! Every format is UTF-8, one record per line, `#` starts a comment and
//! blank lines are ignored. Records:
//!
//! | file        | record                     |
//! |-------------|----------------------------|
//! | complex     | `s v1 v2 ... vk`           |
//! | ball        | `t a b c d`, `bt a b c`    |
//! | coloring    | `c v color`                |
//! | vertex map  | `m v x`                    |
//! | dual        | `w i v`, `a i j v1 ... vn`, `f l a b c` |
//! | certificate | `cert v0 v1 v2 v3`         |

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::complex::{Complex, Simplex, Vertex};
use crate::error::{Error, Result};
use crate::sperner::{Ball3, Coloring, DualStructure, PAIRS};

struct Record<'a> {
    line: usize,
    keyword: &'a str,
    args: Vec<&'a str>,
}

fn records(text: &str) -> impl Iterator<Item = Record<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = body.split_whitespace();
        let keyword = toks.next()?;
        Some(Record { line: i + 1, keyword, args: toks.collect() })
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

impl Record<'_> {
    fn numbers(&self) -> Result<Vec<u32>> {
        self.args
            .iter()
            .map(|t| t.parse::<u32>().map_err(|_| parse_err(self.line, format!("bad vertex id {t:?}"))))
            .collect()
    }

    fn vertices(&self, expect: Option<usize>) -> Result<Vec<Vertex>> {
        let ns = self.numbers()?;
        if let Some(n) = expect {
            if ns.len() != n {
                return Err(parse_err(self.line, format!("`{}` needs {n} values, got {}", self.keyword, ns.len())));
            }
        }
        Ok(ns.into_iter().map(Vertex).collect())
    }

    fn simplex(&self, expect: Option<usize>) -> Result<Simplex> {
        let vs = self.vertices(expect)?;
        Simplex::new(vs).map_err(|e| parse_err(self.line, e.to_string()))
    }

    fn unknown(&self) -> Error {
        parse_err(self.line, format!("unknown record `{}`", self.keyword))
    }
}

pub fn read_to_string(path: impl AsRef<Path>) -> Result<String> {
    let path = path.as_ref();
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

/// Parses a complex; the result is the face closure of the listed simplices.
pub fn parse_complex(text: &str) -> Result<Complex> {
    let mut simplices = Vec::new();
    for r in records(text) {
        match r.keyword {
            "s" => simplices.push(r.simplex(None)?),
            _ => return Err(r.unknown()),
        }
    }
    Ok(Complex::from_simplices(simplices))
}

/// Parses a complex and checks that it is a subcomplex of `ambient`.
pub fn parse_subcomplex(text: &str, ambient: &Complex) -> Result<Complex> {
    let sub = parse_complex(text)?;
    if let Some(s) = sub.first_simplex_outside(ambient) {
        return Err(Error::Input(format!("simplex {s} is not in the ambient complex")));
    }
    Ok(sub)
}

pub fn load_complex(path: impl AsRef<Path>) -> Result<Complex> {
    parse_complex(&read_to_string(path)?)
}

/// Maximal simplices, one per line, in sorted order.
pub fn write_complex(x: &Complex) -> String {
    let mut out = String::new();
    for s in x.maximal_simplices() {
        push_record(&mut out, "s", s.vertices());
    }
    out
}

fn push_record(out: &mut String, keyword: &str, vs: &[Vertex]) {
    out.push_str(keyword);
    for v in vs {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
}

/// Parses a ball. Without `bt` records the boundary is taken to be the
/// triangles lying in exactly one tetrahedron.
pub fn parse_ball(text: &str) -> Result<Ball3> {
    let mut tets = Vec::new();
    let mut bt = Vec::new();
    for r in records(text) {
        match r.keyword {
            "t" => tets.push(r.simplex(Some(4))?),
            "bt" => bt.push(r.simplex(Some(3))?),
            _ => return Err(r.unknown()),
        }
    }
    if bt.is_empty() {
        Ball3::from_tets(tets)
    } else {
        Ball3::new(tets, bt)
    }
}

pub fn write_ball(b: &Ball3) -> String {
    let mut out = String::new();
    for t in b.tets() {
        push_record(&mut out, "t", t.vertices());
    }
    for t in b.boundary_triangles() {
        push_record(&mut out, "bt", t.vertices());
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut c = Coloring::default();
    for r in records(text) {
        match r.keyword {
            "c" => {
                let ns = r.numbers()?;
                let [v, col] = ns[..] else {
                    return Err(parse_err(r.line, "`c` needs a vertex and a color"));
                };
                if col > 3 {
                    return Err(parse_err(r.line, format!("color {col} outside 0..=3")));
                }
                if c.0.insert(Vertex(v), col as u8).is_some() {
                    return Err(parse_err(r.line, format!("vertex {v} colored twice")));
                }
            }
            _ => return Err(r.unknown()),
        }
    }
    Ok(c)
}

pub fn write_coloring(c: &Coloring) -> String {
    c.0.iter().map(|(v, col)| format!("c {v} {col}\n")).collect()
}

pub fn parse_vertex_map(text: &str) -> Result<BTreeMap<Vertex, Vertex>> {
    let mut m = BTreeMap::new();
    for r in records(text) {
        match r.keyword {
            "m" => {
                let vs = r.vertices(Some(2))?;
                if m.insert(vs[0], vs[1]).is_some() {
                    return Err(parse_err(r.line, format!("vertex {} mapped twice", vs[0])));
                }
            }
            _ => return Err(r.unknown()),
        }
    }
    Ok(m)
}

pub fn write_vertex_map(m: &BTreeMap<Vertex, Vertex>) -> String {
    m.iter().map(|(v, x)| format!("m {v} {x}\n")).collect()
}

fn index(r: &Record, tok: &str, max: usize) -> Result<usize> {
    tok.parse::<usize>()
        .ok()
        .filter(|&i| i < max)
        .ok_or_else(|| parse_err(r.line, format!("bad index {tok:?}")))
}

pub fn parse_dual(text: &str) -> Result<DualStructure> {
    let mut apexes: [Option<Vertex>; 4] = [None; 4];
    let mut arcs = BTreeMap::new();
    let mut faces: [Vec<Simplex>; 4] = Default::default();
    for r in records(text) {
        match r.keyword {
            "w" => {
                if r.args.len() != 2 {
                    return Err(parse_err(r.line, "`w` needs an index and a vertex"));
                }
                let i = index(&r, r.args[0], 4)?;
                let v = Record { line: r.line, keyword: "w", args: vec![r.args[1]] }.vertices(Some(1))?[0];
                apexes[i] = Some(v);
            }
            "a" => {
                if r.args.len() < 4 {
                    return Err(parse_err(r.line, "`a` needs two indices and a path"));
                }
                let (i, j) = (index(&r, r.args[0], 4)?, index(&r, r.args[1], 4)?);
                if i >= j {
                    return Err(parse_err(r.line, "arc indices must satisfy i < j"));
                }
                let path = Record { line: r.line, keyword: "a", args: r.args[2..].to_vec() }.vertices(None)?;
                arcs.insert((i, j), path);
            }
            "f" => {
                if r.args.len() != 4 {
                    return Err(parse_err(r.line, "`f` needs an index and a triangle"));
                }
                let l = index(&r, r.args[0], 4)?;
                let t = Record { line: r.line, keyword: "f", args: r.args[1..].to_vec() }.simplex(Some(3))?;
                faces[l].push(t);
            }
            _ => return Err(r.unknown()),
        }
    }
    let mut w = [Vertex(0); 4];
    for i in 0..4 {
        w[i] = apexes[i].ok_or_else(|| Error::input(format!("apex w{i} missing")))?;
    }
    for f in faces.iter_mut() {
        f.sort();
    }
    Ok(DualStructure { apexes: w, arcs, faces })
}

pub fn write_dual(d: &DualStructure) -> String {
    let mut out = String::new();
    for (i, w) in d.apexes.iter().enumerate() {
        let _ = writeln!(out, "w {i} {w}");
    }
    for &(i, j) in &PAIRS {
        if let Some(p) = d.arcs.get(&(i, j)) {
            push_record(&mut out, &format!("a {i} {j}"), p);
        }
    }
    for (l, face) in d.faces.iter().enumerate() {
        for t in face {
            push_record(&mut out, &format!("f {l}"), t.vertices());
        }
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<[Vertex; 4]> {
    let mut found = None;
    for r in records(text) {
        match r.keyword {
            "cert" => {
                if found.is_some() {
                    return Err(parse_err(r.line, "more than one `cert` record"));
                }
                let vs = r.vertices(Some(4))?;
                found = Some([vs[0], vs[1], vs[2], vs[3]]);
            }
            // membership table and comments written next to the certificate
            "member" => {}
            _ => return Err(r.unknown()),
        }
    }
    found.ok_or_else(|| Error::input("no `cert` record"))
}

pub fn write_certificate(v: &[Vertex; 4]) -> String {
    format!("cert {} {} {} {}\n", v[0], v[1], v[2], v[3])
}
