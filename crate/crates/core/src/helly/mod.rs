//! Quasi-Helly procedure for four subcomplexes.
//!
//! Given A_0..A_3 in X (connected, with connected pairwise intersections and
//! nonempty triple intersections) the procedure produces vertices
//! `v_i ∈ A_i` spanning a simplex of X. Outline:
//!
//! 1. pick `z_l` in the triple intersection omitting `A_l`;
//! 2. join `z_k`, `z_l` by a path γ in the two sets containing both;
//! 3. fill the three γ's around each `A_i` by a disc in `A_i`;
//! 4. glue the four discs into a 2-sphere S with a map φ: S → X;
//! 5. fill S by a 3-ball B without new vertices, every tetrahedron mapping
//!    onto a simplex of X;
//! 6. color B by `c(v) = i` with `φ(v) ∈ A_i`, following the dual
//!    tetrahedral structure on S, and take a rainbow tetrahedron.

pub mod disc;
pub mod hypotheses;
pub mod pipeline;
pub mod sphere;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use crate::complex::{Complex, Simplex, Vertex};
use crate::sperner::{Ball3, Coloring, DualStructure};

pub use disc::{disc_defect, fill_disc, DiscFilling, DiscOutcome};
pub use hypotheses::{check_hypotheses, connect_path, first_failure, pick_triple_points, trivial_vertex, HypothesisReport};
pub use pipeline::{ball_filling_defect, fill_ball, helly_point, sperner_color, verify_ball_filling};
pub use sphere::{assemble_sphere, dualize, sphere_defect, SphereAssembly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Triangles per disc.
    pub max_area: usize,
    /// Search states per disc.
    pub disc_nodes: usize,
    /// Search states for the ball filling.
    pub ball_nodes: usize,
    pub time_limit: Option<Duration>,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { max_area: 2000, disc_nodes: disc::DEFAULT_DISC_NODES, ball_nodes: 50_000, time_limit: None }
    }
}

#[derive(Clone, Debug)]
pub struct HellyInput {
    pub x: Complex,
    pub a: [Complex; 4],
    pub budgets: Budgets,
}

impl HellyInput {
    pub fn new(x: Complex, a: [Complex; 4]) -> Self {
        HellyInput { x, a, budgets: Budgets::default() }
    }
}

/// Everything the non-trivial case built on the way to its answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HellyWitness {
    pub z: [Vertex; 4],
    pub sphere: Complex,
    pub ball: Ball3,
    pub phi: BTreeMap<Vertex, Vertex>,
    pub dual: DualStructure,
    pub coloring: Coloring,
    pub rainbow: Simplex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HellyCertificate {
    /// `v_i ∈ A_i`; the distinct entries span a simplex of X.
    pub simplex: [Vertex; 4],
    /// `membership[i][j]` is `v_i ∈ A_j`.
    pub membership: [[bool; 4]; 4],
    /// Absent in the trivial case.
    pub witness: Option<HellyWitness>,
}

impl HellyCertificate {
    pub(crate) fn new(a: &[Complex; 4], simplex: [Vertex; 4], witness: Option<HellyWitness>) -> Self {
        let membership = simplex.map(|v| [0, 1, 2, 3].map(|j| a[j].has_vertex(v)));
        HellyCertificate { simplex, membership, witness }
    }

    pub fn is_trivial(&self) -> bool {
        self.witness.is_none()
    }
}

/// Stage of the procedure that ran out of budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Disc(usize),
    Ball,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Disc(i) => write!(f, "disc filling in A{i}"),
            Stage::Ball => write!(f, "ball filling"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stalled {
    pub stage: Stage,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HellyOutcome {
    Certificate(HellyCertificate),
    Unknown(Stalled),
}
