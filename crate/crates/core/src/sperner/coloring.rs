//! Four-colorings of ball vertices and rainbow tetrahedra.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{Simplex, Vertex};
use crate::error::Result;
use crate::sperner::ball::Ball3;
use crate::sperner::dual::{validate_dual, DualStructure, Role};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coloring(pub BTreeMap<Vertex, u8>);

impl Coloring {
    pub fn get(&self, v: Vertex) -> Option<u8> {
        self.0.get(&v).copied()
    }

    pub fn set(&mut self, v: Vertex, c: u8) {
        self.0.insert(v, c);
    }
}

impl FromIterator<(Vertex, u8)> for Coloring {
    fn from_iter<I: IntoIterator<Item = (Vertex, u8)>>(iter: I) -> Self {
        Coloring(iter.into_iter().collect())
    }
}

/// First violated coloring rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringDefect {
    Uncolored(Vertex),
    OutOfRange(Vertex, u8),
    /// The color of `v` is not admissible for its role.
    Inadmissible { vertex: Vertex, role: Role, color: u8 },
}

impl fmt::Display for ColoringDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringDefect::Uncolored(v) => write!(f, "vertex {v} has no color"),
            ColoringDefect::OutOfRange(v, c) => write!(f, "vertex {v} has color {c} outside 0..=3"),
            ColoringDefect::Inadmissible { vertex, role, color } => {
                write!(f, "vertex {vertex} ({role}) has inadmissible color {color}")
            }
        }
    }
}

/// Checks the coloring rules: `c(w_i) = i`, arc `β_ij` vertices colored in
/// `{i, j}`, and region vertices of the face opposite `w_l` colored in the
/// other three colors. Ball vertices off the sphere may take any color.
/// Errors when the dual structure itself is invalid.
pub fn coloring_defect(b: &Ball3, d: &DualStructure, c: &Coloring) -> Result<Option<ColoringDefect>> {
    validate_dual(b.boundary(), d)?;
    let roles = d.roles();
    for v in b.vertices() {
        let Some(col) = c.get(v) else {
            return Ok(Some(ColoringDefect::Uncolored(v)));
        };
        if col > 3 {
            return Ok(Some(ColoringDefect::OutOfRange(v, col)));
        }
        if let Some(&role) = roles.get(&v) {
            if !role.admissible().contains(&col) {
                return Ok(Some(ColoringDefect::Inadmissible { vertex: v, role, color: col }));
            }
        }
    }
    Ok(None)
}

pub fn validate_coloring(b: &Ball3, d: &DualStructure, c: &Coloring) -> Result<bool> {
    Ok(coloring_defect(b, d, c)?.is_none())
}

fn is_rainbow(t: &Simplex, c: &Coloring) -> bool {
    let mut seen = [false; 4];
    for &v in t.vertices() {
        match c.get(v) {
            Some(col) if col < 4 => seen[col as usize] = true,
            _ => return false,
        }
    }
    seen.iter().all(|&s| s)
}

/// First tetrahedron (in list order) whose vertices carry all four colors.
pub fn find_rainbow(b: &Ball3, c: &Coloring) -> Option<Simplex> {
    b.tets().iter().find(|t| is_rainbow(t, c)).cloned()
}

pub fn count_rainbow(b: &Ball3, c: &Coloring) -> usize {
    b.tets().iter().filter(|t| is_rainbow(t, c)).count()
}

/// The tetrahedron's vertices ordered by color, so entry `i` has color `i`.
pub fn by_color(t: &Simplex, c: &Coloring) -> Option<[Vertex; 4]> {
    let mut out = [None; 4];
    for &v in t.vertices() {
        let col = c.get(v)? as usize;
        if col >= 4 || out[col].is_some() {
            return None;
        }
        out[col] = Some(v);
    }
    Some(out.map(|v| v.unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::simplex;

    fn single() -> (Ball3, DualStructure) {
        let b = Ball3::from_tets(vec![simplex(&[0, 1, 2, 3])]).unwrap();
        let d = DualStructure::of_tetrahedron([0, 1, 2, 3].map(Vertex)).unwrap();
        (b, d)
    }

    fn colors(cs: [u8; 4]) -> Coloring {
        (0..4).map(|i| (Vertex(i as u32), cs[i])).collect()
    }

    #[test]
    fn single_tetrahedron_rules() {
        let (b, d) = single();
        assert!(validate_coloring(&b, &d, &colors([0, 1, 2, 3])).unwrap());
        assert_eq!(
            coloring_defect(&b, &d, &colors([1, 1, 2, 3])).unwrap(),
            Some(ColoringDefect::Inadmissible { vertex: Vertex(0), role: Role::Apex(0), color: 1 })
        );
    }

    #[test]
    fn rainbow_search() {
        let (b, _) = single();
        let c = colors([0, 1, 2, 3]);
        assert_eq!(find_rainbow(&b, &c), Some(simplex(&[0, 1, 2, 3])));
        assert_eq!(count_rainbow(&b, &c), 1);
        assert_eq!(by_color(&simplex(&[0, 1, 2, 3]), &colors([3, 2, 1, 0])), Some([3, 2, 1, 0].map(Vertex)));
        let c = colors([0, 0, 1, 2]);
        assert_eq!(find_rainbow(&b, &c), None);
        assert_eq!(count_rainbow(&b, &c), 0);
    }
}
