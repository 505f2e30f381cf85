use std::fmt;

use thiserror::Error;

use crate::complex::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input data (bad simplex, bad parameters, bad file contents).
    #[error("input error: {0}")]
    Input(String),

    /// A text file failed to parse; `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The operation is not defined for the given arguments.
    #[error("domain error: {0}")]
    Domain(String),

    /// A hypothesis of the quasi-Helly pipeline does not hold.
    #[error("hypothesis failure: {0}")]
    Hypothesis(HypothesisFailure),

    /// A construction invariant broke; always a bug.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

/// The first failing hypothesis of a Helly input, with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HypothesisFailure {
    NotSubcomplex { index: usize, witness: Vec<Vertex> },
    Disconnected { index: usize },
    EmptySet { index: usize },
    DisconnectedPair { i: usize, j: usize, components: Vec<Vec<Vertex>> },
    EmptyTriple { omitted: usize },
    /// Two vertices that must be joined inside a region lie in different
    /// components of it.
    NoPath { from: Vertex, to: Vertex },
}

impl fmt::Display for HypothesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypothesisFailure::NotSubcomplex { index, witness } => {
                write!(f, "A{index} is not a subcomplex of X (simplex {witness:?})")
            }
            HypothesisFailure::Disconnected { index } => write!(f, "A{index} is disconnected"),
            HypothesisFailure::EmptySet { index } => write!(f, "A{index} is empty"),
            HypothesisFailure::DisconnectedPair { i, j, components } => {
                write!(f, "A{i} ∩ A{j} is disconnected: components")?;
                for c in components {
                    write!(f, " {c:?}")?;
                }
                Ok(())
            }
            HypothesisFailure::EmptyTriple { omitted } => {
                let idx: Vec<usize> = (0..4).filter(|i| i != omitted).collect();
                write!(f, "A{} ∩ A{} ∩ A{} is empty", idx[0], idx[1], idx[2])
            }
            HypothesisFailure::NoPath { from, to } => write!(f, "no path from {from} to {to} in the region"),
        }
    }
}
