//! JSON input descriptors for the two group families the workbench
//! understands:
//!
//! ```json
//! {"type":"coxeter","generators":["s","t","u"],
//!  "matrix":[[1,3,2],[3,1,"inf"],[2,"inf",1]]}
//! ```
//!
//! ```json
//! {"type":"graph_product",
//!  "vertices":[{"name":"a","order":2},{"name":"b","order":"Z"}],
//!  "edges":[["a","b"]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterOrder, CoxeterSystem};
use crate::error::{Error, Result};
use crate::gp::{GraphProduct, VertexOrder};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum InputDescriptor {
    #[serde(rename = "coxeter")]
    Coxeter {
        generators: Vec<String>,
        matrix: Vec<Vec<CoxeterOrder>>,
    },
    #[serde(rename = "graph_product")]
    GraphProduct {
        vertices: Vec<VertexDescriptor>,
        edges: Vec<(String, String)>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexDescriptor {
    pub name: String,
    pub order: VertexOrderDescriptor,
}

#[derive(Debug, Clone)]
pub struct VertexOrderDescriptor(pub VertexOrder);

impl Serialize for VertexOrderDescriptor {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            VertexOrder::Finite(n) => ser.serialize_u32(n),
            VertexOrder::Z => ser.serialize_str("Z"),
        }
    }
}

impl<'de> Deserialize<'de> for VertexOrderDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(de)? {
            Raw::Num(n) if (2..=u32::MAX as u64).contains(&n) => {
                Ok(VertexOrderDescriptor(VertexOrder::Finite(n as u32)))
            }
            Raw::Num(n) => Err(D::Error::custom(format!("invalid vertex order {n}"))),
            Raw::Text(t) if t == "Z" || t == "inf" => Ok(VertexOrderDescriptor(VertexOrder::Z)),
            Raw::Text(t) => Err(D::Error::custom(format!(
                "invalid vertex order {t:?}; expected an integer >= 2 or \"Z\""
            ))),
        }
    }
}

/// A fully parsed input: one of the two group models.
#[derive(Debug, Clone)]
pub enum ParsedInput {
    Coxeter(CoxeterSystem),
    GraphProduct(GraphProduct),
}

impl InputDescriptor {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::BadGraph(format!("descriptor parse: {e}")))
    }

    pub fn build(&self) -> Result<ParsedInput> {
        match self {
            InputDescriptor::Coxeter { generators, matrix } => Ok(ParsedInput::Coxeter(
                CoxeterSystem::new(generators.clone(), matrix.clone())?,
            )),
            InputDescriptor::GraphProduct { vertices, edges } => {
                let names: Vec<String> = vertices.iter().map(|v| v.name.clone()).collect();
                let orders: Vec<VertexOrder> = vertices.iter().map(|v| v.order.0).collect();
                let index = |name: &str| -> Result<usize> {
                    names
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
                };
                let edge_indices: Result<Vec<(usize, usize)>> = edges
                    .iter()
                    .map(|(a, b)| Ok((index(a)?, index(b)?)))
                    .collect();
                Ok(ParsedInput::GraphProduct(GraphProduct::new(
                    names,
                    orders,
                    &edge_indices?,
                )?))
            }
        }
    }
}
