//! Largeness, SD₂* and simple-connectedness checks.

pub mod classify;
pub mod cycles;
pub mod presentation;
pub mod wheels;

use std::fmt;

pub use classify::{classify, ClassifyOptions, Report};
pub use cycles::{enumerate_full_cycles, is_k_large, is_locally_k_large, locally_k_large_witness, FullCycle};
pub use presentation::{
    fundamental_group_presentation, is_rationally_null_homologous, is_simply_connected_bounded, Presentation,
};
pub use wheels::{
    enumerate_wheels_with_pendant, has_sd2star_links, satisfies_sd2star, sd2star_violation, PendantRule,
    Sd2Violation, WheelWithPendant,
};

/// Verdict of a possibly bounded decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriState {
    Yes,
    No,
    Unknown,
}

impl TriState {
    pub fn and(self, other: TriState) -> TriState {
        match (self, other) {
            (TriState::No, _) | (_, TriState::No) => TriState::No,
            (TriState::Yes, TriState::Yes) => TriState::Yes,
            _ => TriState::Unknown,
        }
    }

    /// Single-letter code used in machine records.
    pub fn code(self) -> &'static str {
        match self {
            TriState::Yes => "Y",
            TriState::No => "N",
            TriState::Unknown => "Unknown",
        }
    }
}

impl From<bool> for TriState {
    fn from(b: bool) -> Self {
        if b {
            TriState::Yes
        } else {
            TriState::No
        }
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriState::Yes => "Yes",
            TriState::No => "No",
            TriState::Unknown => "Unknown",
        })
    }
}
