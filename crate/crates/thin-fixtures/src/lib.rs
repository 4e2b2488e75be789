//! Named graphs from the thinness literature, with attached certificates,
//! models and the facts known about them, plus random instance generators.

mod named;
pub mod random;

pub use named::*;

use thin_graph::{Graph, Representation};

/// Where a recorded fact comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Stated in the source literature and checkable at desk scale.
    Stated,
    /// Computed here by brute force.
    Derived,
    /// Cited but not machine-checked.
    UnverifiedCitation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub property: &'static str,
    pub value: i64,
    pub provenance: Provenance,
}

impl Fact {
    pub fn stated(property: &'static str, value: i64) -> Self {
        Fact { property, value, provenance: Provenance::Stated }
    }

    pub fn derived(property: &'static str, value: i64) -> Self {
        Fact { property, value, provenance: Provenance::Derived }
    }

    pub fn unverified(property: &'static str, value: i64) -> Self {
        Fact { property, value, provenance: Provenance::UnverifiedCitation }
    }
}

/// A named graph with vertex names, known facts and optional attachments.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub names: Vec<String>,
    pub facts: Vec<Fact>,
    pub representation: Option<Representation>,
    /// Rectangles `(vertex, x1, x2, y1, y2, class)` in doubled coordinates.
    pub boxes: Option<Vec<FixtureBox>>,
}

/// One axis-parallel rectangle in doubled integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixtureBox {
    pub vertex: usize,
    pub x1: i64,
    pub x2: i64,
    pub y1: i64,
    pub y2: i64,
    pub class: u8,
}

impl Fixture {
    pub fn fact(&self, property: &str) -> Option<&Fact> {
        self.facts.iter().find(|f| f.property == property)
    }

    pub fn vertex(&self, name: &str) -> usize {
        self.names.iter().position(|n| n == name).unwrap_or_else(|| panic!("no vertex {name} in {}", self.name))
    }
}
