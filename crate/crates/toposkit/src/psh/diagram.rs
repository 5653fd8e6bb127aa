//! Finite diagrams of presheaves, the input to limits and colimits.

use super::{compose_maps, same_base, Presheaf, PresheafMap};
use crate::error::TkError;
use crate::fincat::{self, Base, Mor, Obj};
use std::sync::Arc;

/// A functor from a finite shape category into the presheaf topos:
/// a presheaf per shape object and a map per shape morphism.
#[derive(Clone, Debug)]
pub struct Diagram {
    shape: Base,
    base: Base,
    nodes: Vec<Presheaf>,
    edges: Vec<PresheafMap>,
}

impl Diagram {
    pub fn new(shape: Base, nodes: Vec<Presheaf>, edges: Vec<PresheafMap>) -> Result<Self, TkError> {
        if nodes.len() != shape.object_count() || edges.len() != shape.mor_count() {
            return Err(TkError::shape("diagram tables do not match the shape"));
        }
        let base = match nodes.first() {
            Some(p) => p.base().clone(),
            None => {
                return Err(TkError::shape(
                    "empty-shape diagrams need an explicit base; use Diagram::empty",
                ))
            }
        };
        if nodes.iter().any(|p| !same_base(p.base(), &base)) {
            return Err(TkError::BaseMismatch("diagram nodes over different bases".into()));
        }
        for m in shape.mors() {
            let e = &edges[m.0];
            if e.source() != &nodes[shape.dom(m).0] || e.target() != &nodes[shape.cod(m).0] {
                return Err(TkError::shape(format!(
                    "edge for `{}` has the wrong endpoints",
                    shape.mor_name(m)
                )));
            }
        }
        for a in shape.objects() {
            let id = shape.identity(a);
            if edges[id.0] != PresheafMap::identity(&nodes[a.0]) {
                return Err(TkError::invalid("diagram", "identity edge is not the identity map"));
            }
        }
        for g in shape.mors() {
            for f in shape.mors() {
                if let Some(gf) = shape.compose(g, f) {
                    let composite = compose_maps(&edges[g.0], &edges[f.0])?;
                    if composite != edges[gf.0] {
                        return Err(TkError::invalid(
                            "diagram",
                            format!(
                                "functoriality fails on {}∘{}",
                                shape.mor_name(g),
                                shape.mor_name(f)
                            ),
                        ));
                    }
                }
            }
        }
        Ok(Diagram {
            shape,
            base,
            nodes,
            edges,
        })
    }

    /// The empty diagram over a base (shape has no objects).
    pub fn empty(base: Base) -> Diagram {
        let shape = Arc::new(fincat::discrete(&[]));
        Diagram {
            shape,
            base,
            nodes: Vec::new(),
            edges: Vec::new(),
        }
    }

    /// Discrete diagram on a list of presheaves.
    pub fn discrete(nodes: &[&Presheaf]) -> Result<Diagram, TkError> {
        let names: Vec<String> = (0..nodes.len()).map(|i| format!("n{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let shape = Arc::new(fincat::discrete(&refs));
        let owned: Vec<Presheaf> = nodes.iter().map(|p| (*p).clone()).collect();
        let edges = owned.iter().map(PresheafMap::identity).collect();
        Diagram::new(shape, owned, edges)
    }

    /// Parallel pair `u, v : X → Y` on the two-arrow shape.
    pub fn parallel_pair(u: &PresheafMap, v: &PresheafMap) -> Result<Diagram, TkError> {
        if u.source() != v.source() || u.target() != v.target() {
            return Err(TkError::shape("parallel pair endpoints do not match"));
        }
        let shape = Arc::new(fincat::parallel_pair_shape());
        let nodes = vec![u.source().clone(), u.target().clone()];
        // Shape morphism order: id_s, id_t, u, v.
        let edges = vec![
            PresheafMap::identity(&nodes[0]),
            PresheafMap::identity(&nodes[1]),
            u.clone(),
            v.clone(),
        ];
        Diagram::new(shape, nodes, edges)
    }

    /// Cospan `X →f Z ←g Y` on the cospan shape.
    pub fn cospan(f: &PresheafMap, g: &PresheafMap) -> Result<Diagram, TkError> {
        if f.target() != g.target() {
            return Err(TkError::shape("cospan legs must share their target"));
        }
        let shape = Arc::new(fincat::cospan_shape());
        let nodes = vec![f.source().clone(), g.source().clone(), f.target().clone()];
        let edges = vec![
            PresheafMap::identity(&nodes[0]),
            PresheafMap::identity(&nodes[1]),
            PresheafMap::identity(&nodes[2]),
            f.clone(),
            g.clone(),
        ];
        Diagram::new(shape, nodes, edges)
    }

    pub fn shape(&self) -> &Base {
        &self.shape
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn node(&self, s: Obj) -> &Presheaf {
        &self.nodes[s.0]
    }

    pub fn nodes(&self) -> &[Presheaf] {
        &self.nodes
    }

    pub fn edge(&self, m: Mor) -> &PresheafMap {
        &self.edges[m.0]
    }
}
