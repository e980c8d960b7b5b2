use std::collections::BTreeSet;

use crate::error::Result;
use crate::graph::{MultiGraph, VertexId};
use crate::recognizer::{class_check, ClassMode, Verdict};

/// A deletion set, in original vertex labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Solution {
    pub vertices: BTreeSet<VertexId>,
}

impl Solution {
    pub fn new(vertices: BTreeSet<VertexId>) -> Self {
        Solution { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Re-checks `G − X` with the recognizer.
    pub fn verify(&self, g: &MultiGraph, mode: ClassMode) -> Result<Verdict> {
        Ok(class_check(&g.delete_vertices(&self.vertices)?, mode))
    }
}
