use std::fs;
use std::path::Path as FsPath;

use serde::{Deserialize, Serialize};

use super::{GraphBuilder, MoGraph};
use crate::error::{Error, Result};

/// On-disk graph interchange format.
///
/// ```json
/// {"n_objectives": 2,
///  "vertices": [{"id": 0, "pos": [0.0, 1.0]}, {"id": 1}],
///  "edges": [{"u": 0, "v": 1, "costs": [1.0, 2.0]}]}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n_objectives: usize,
    #[serde(default, skip_serializing_if = "is_false")]
    pub directed: bool,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pos: Option<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub u: u64,
    pub v: u64,
    pub costs: Vec<f64>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

impl GraphFile {
    pub fn into_graph(self) -> Result<MoGraph> {
        let mut b = GraphBuilder::new(self.n_objectives).directed(self.directed);
        let mut index = std::collections::HashMap::with_capacity(self.vertices.len());
        for v in &self.vertices {
            let i = b.add_vertex_with_id(v.id, v.pos);
            if index.insert(v.id, i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {}", v.id)));
            }
        }
        for e in self.edges {
            let lookup = |id: u64| {
                index
                    .get(&id)
                    .copied()
                    .ok_or_else(|| Error::InvalidGraph(format!("edge references unknown vertex {id}")))
            };
            b.add_edge(lookup(e.u)?, lookup(e.v)?, e.costs)?;
        }
        b.build()
    }

    pub fn from_graph(graph: &MoGraph) -> Self {
        let vertices = (0..graph.n_vertices())
            .map(|v| VertexRecord {
                id: graph.id(v),
                pos: graph.position(v),
            })
            .collect();
        let edges = (0..graph.n_edges())
            .map(|e| {
                let (u, v) = graph.edge_endpoints(e);
                EdgeRecord {
                    u: graph.id(u),
                    v: graph.id(v),
                    costs: graph.edge_cost(e).to_vec(),
                }
            })
            .collect();
        Self {
            n_objectives: graph.n_objectives(),
            directed: graph.is_directed(),
            vertices,
            edges,
        }
    }
}

impl MoGraph {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)?;
        file.into_graph()
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&GraphFile::from_graph(self))?)
    }

    pub fn read_json(path: impl AsRef<FsPath>) -> Result<Self> {
        Self::from_json_str(&fs::read_to_string(path)?)
    }

    pub fn write_json(&self, path: impl AsRef<FsPath>) -> Result<()> {
        fs::write(path, self.to_json_string()?)?;
        Ok(())
    }
}
