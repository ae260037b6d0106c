//! JSON interchange for graphs, numbered graphs and annotated trees.
//!
//! ```json
//! {"format":1,"flags":[0,1,2],"involution":[],"vertices":[[0,1,2]],"genus":[0],
//!  "leaf_numbering":{"0":1,"1":2,"2":3}}
//! ```
//!
//! Annotated trees add `parity` (edge index → 0/1, edges in
//! [`Graph::edges`] order), `rho` and `nu`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::FormatError;
use crate::graph::{Graph, NumberedGraph};
use crate::strata::{annotate, AnnotatedTree};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub format: u64,
    pub flags: Vec<usize>,
    pub involution: Vec<[usize; 2]>,
    pub vertices: Vec<Vec<usize>>,
    pub genus: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leaf_numbering: Option<BTreeMap<usize, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<BTreeMap<usize, u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Vec<usize>>,
}

impl GraphRecord {
    pub fn from_graph(g: &Graph) -> Self {
        GraphRecord {
            format: 1,
            flags: (0..g.flag_count()).collect(),
            involution: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            vertices: g.vertices().to_vec(),
            genus: g.genus_labels().to_vec(),
            leaf_numbering: None,
            parity: None,
            rho: None,
            nu: None,
        }
    }

    pub fn from_numbered(t: &NumberedGraph) -> Self {
        GraphRecord {
            leaf_numbering: Some(t.numbering().into_iter().collect()),
            ..Self::from_graph(t.graph())
        }
    }

    pub fn from_annotated(t: &AnnotatedTree) -> Self {
        let g = t.graph();
        let parity = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(f, _))| (i, t.is_odd(f) as u8))
            .collect();
        GraphRecord {
            parity: Some(parity),
            rho: Some(t.rhos().to_vec()),
            nu: Some(t.nus().to_vec()),
            ..Self::from_numbered(t.tree())
        }
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        if self.format != 1 {
            return Err(FormatError::Version(self.format));
        }
        let n = self.flags.len();
        if self.flags.iter().enumerate().any(|(i, &f)| i != f) {
            return Err(FormatError::Inconsistent("flags"));
        }
        let covered: usize = self.vertices.iter().map(Vec::len).sum();
        if covered != n {
            return Err(FormatError::Inconsistent("vertices"));
        }
        let edges: Vec<(usize, usize)> = self.involution.iter().map(|p| (p[0], p[1])).collect();
        Ok(Graph::new(self.vertices.clone(), self.genus.clone(), &edges)?)
    }

    /// Leaves are numbered in flag order when `leaf_numbering` is absent.
    pub fn to_numbered(&self) -> Result<NumberedGraph, FormatError> {
        let g = self.to_graph()?;
        match &self.leaf_numbering {
            None => Ok(NumberedGraph::in_flag_order(g)),
            Some(m) => {
                let pairs: Vec<(usize, u32)> = m.iter().map(|(&f, &k)| (f, k)).collect();
                Ok(NumberedGraph::new(g, &pairs)?)
            }
        }
    }

    /// Recomputes the annotation; any annotation fields present must agree.
    pub fn to_annotated(&self) -> Result<AnnotatedTree, FormatError> {
        let t = annotate(&self.to_numbered()?)?;
        let fresh = Self::from_annotated(&t);
        if self.parity.as_ref().is_some_and(|p| Some(p) != fresh.parity.as_ref()) {
            return Err(FormatError::Inconsistent("parity"));
        }
        if self.rho.as_ref().is_some_and(|r| Some(r) != fresh.rho.as_ref()) {
            return Err(FormatError::Inconsistent("rho"));
        }
        if self.nu.as_ref().is_some_and(|r| Some(r) != fresh.nu.as_ref()) {
            return Err(FormatError::Inconsistent("nu"));
        }
        Ok(t)
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("records serialize")
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphRecord::from_graph(g)).expect("records serialize")
}

pub fn numbered_to_json(t: &NumberedGraph) -> String {
    serde_json::to_string(&GraphRecord::from_numbered(t)).expect("records serialize")
}

pub fn annotated_to_json(t: &AnnotatedTree) -> String {
    serde_json::to_string(&GraphRecord::from_annotated(t)).expect("records serialize")
}

pub fn parse_record(s: &str) -> Result<GraphRecord, FormatError> {
    Ok(serde_json::from_str(s)?)
}

pub fn graph_from_json(s: &str) -> Result<Graph, FormatError> {
    parse_record(s)?.to_graph()
}

pub fn numbered_from_json(s: &str) -> Result<NumberedGraph, FormatError> {
    parse_record(s)?.to_numbered()
}

pub fn annotated_from_json(s: &str) -> Result<AnnotatedTree, FormatError> {
    parse_record(s)?.to_annotated()
}
