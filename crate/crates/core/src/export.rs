//! DOT and JSON exchange formats for orbit posets.
//!
//! JSON documents look like
//!
//! ```json
//! { "setting": "grassmannian", "n": 4, "lambda": [2, 2], "mu": [2, 2],
//!   "elements": [ { "id": 0, "pairs": [], "codim": 4 }, ... ],
//!   "covers": [[0, 1], ...] }
//! ```
//!
//! with covers oriented from the smaller to the larger element. The
//! nilpotent setting carries `dim` instead of `codim` and no partitions.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{
    codimension_d, enumerate_consistent, restricted_leq, ConsistentInvolution, Partition,
};
use crate::involution::{enumerate_involutions, melnikov_leq, orbit_dimension, Involution};
use crate::poset::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Setting {
    Nilpotent,
    Grassmannian,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub id: usize,
    pub pairs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codim: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub setting: Setting,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<usize>>,
    pub elements: Vec<ElementRecord>,
    pub covers: Vec<[usize; 2]>,
}

impl PosetDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let doc: PosetDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.check()?;
        Ok(doc)
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    fn check(&self) -> Result<()> {
        let grass = self.setting == Setting::Grassmannian;
        if grass != (self.lambda.is_some() && self.mu.is_some()) {
            return Err(Error::Parse(
                "lambda and mu are required exactly in the grassmannian setting".into(),
            ));
        }
        for (pos, e) in self.elements.iter().enumerate() {
            if e.id != pos {
                return Err(Error::Parse(format!("element {pos} has id {}", e.id)));
            }
            let ok = if grass {
                e.codim.is_some() && e.dim.is_none()
            } else {
                e.dim.is_some() && e.codim.is_none()
            };
            if !ok {
                return Err(Error::Parse(format!(
                    "element {pos} must carry exactly one of dim/codim matching the setting"
                )));
            }
        }
        if let Some(c) = self.covers.iter().find(|c| c[0] >= self.elements.len() || c[1] >= self.elements.len()) {
            return Err(Error::Parse(format!("cover {c:?} refers to a missing element")));
        }
        Ok(())
    }

    /// Rebuilds the poset of involutions described by the document; the
    /// order is the closure of the listed covers.
    pub fn to_poset(&self) -> Result<Poset<Involution>> {
        let elements = self
            .elements
            .iter()
            .map(|e| {
                let arcs: Vec<(usize, usize)> = e.pairs.iter().map(|p| (p[0], p[1])).collect();
                Involution::from_arcs(self.n, &arcs)
            })
            .collect::<Result<Vec<_>>>()?;
        let covers: Vec<(usize, usize)> = self.covers.iter().map(|c| (c[0], c[1])).collect();
        Poset::from_covers(elements, &covers)
    }
}

/// What a JSON element record needs from an orbit label.
pub trait OrbitRecord {
    fn involution(&self) -> &Involution;
    /// `dim` in the nilpotent setting, `codim` in the Grassmannian one.
    fn statistic(&self) -> usize;
}

impl OrbitRecord for Involution {
    fn involution(&self) -> &Involution {
        self
    }

    fn statistic(&self) -> usize {
        orbit_dimension(self)
    }
}

impl OrbitRecord for ConsistentInvolution {
    fn involution(&self) -> &Involution {
        ConsistentInvolution::involution(self)
    }

    fn statistic(&self) -> usize {
        codimension_d(self)
    }
}

/// Document header: setting, ambient size and (for Grassmannians) the
/// partitions, padded to `k` and `m` parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metadata {
    pub setting: Setting,
    pub n: usize,
    pub lambda: Option<Vec<usize>>,
    pub mu: Option<Vec<usize>>,
}

impl Metadata {
    pub fn nilpotent(n: usize) -> Self {
        Metadata {
            setting: Setting::Nilpotent,
            n,
            lambda: None,
            mu: None,
        }
    }

    pub fn grassmannian(lambda: &Partition, mu: &Partition) -> Self {
        Metadata {
            setting: Setting::Grassmannian,
            n: lambda.n(),
            lambda: Some(lambda.parts().to_vec()),
            mu: Some(mu.parts().to_vec()),
        }
    }
}

pub fn poset_document<T: OrbitRecord>(poset: &Poset<T>, meta: &Metadata) -> PosetDocument {
    let elements = poset
        .elements()
        .iter()
        .enumerate()
        .map(|(id, x)| {
            let pairs = x.involution().arcs().into_iter().map(|(i, j)| [i, j]).collect();
            let stat = x.statistic();
            let (dim, codim) = match meta.setting {
                Setting::Nilpotent => (Some(stat), None),
                Setting::Grassmannian => (None, Some(stat)),
            };
            ElementRecord {
                id,
                pairs,
                dim,
                codim,
            }
        })
        .collect();
    PosetDocument {
        setting: meta.setting,
        n: meta.n,
        lambda: meta.lambda.clone(),
        mu: meta.mu.clone(),
        elements,
        covers: poset.covers().iter().map(|&(a, b)| [a, b]).collect(),
    }
}

pub fn export_json<T: OrbitRecord>(poset: &Poset<T>, meta: &Metadata) -> String {
    poset_document(poset, meta).to_text()
}

/// DOT digraph of the Hasse diagram, edges from smaller to larger element,
/// drawn bottom to top. Nodes appear in element order.
pub fn export_dot<T>(poset: &Poset<T>, labeler: impl Fn(&T) -> String) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
    for (idx, x) in poset.elements().iter().enumerate() {
        let label = labeler(x).replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  n{idx} [label=\"{label}\"];").unwrap();
    }
    for &(a, b) in poset.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// `(13)(24) dim 3`-style label.
pub fn dot_label<T: OrbitRecord>(x: &T, setting: Setting) -> String {
    let key = match setting {
        Setting::Nilpotent => "dim",
        Setting::Grassmannian => "codim",
    };
    format!("{} {key} {}", x.involution(), x.statistic())
}

/// `I_n` under the closure order.
pub fn nilpotent_poset(n: usize) -> Result<Poset<Involution>> {
    Poset::build(enumerate_involutions(n)?, |v, w| {
        melnikov_leq(v, w).expect("equal sizes")
    })
}

/// `I_n(λ, μ)` under the restricted order.
pub fn grassmannian_poset(lambda: &Partition, mu: &Partition) -> Result<Poset<ConsistentInvolution>> {
    Poset::build(enumerate_consistent(lambda, mu)?, |v, w| {
        restricted_leq(v, w).expect("same coloring")
    })
}
