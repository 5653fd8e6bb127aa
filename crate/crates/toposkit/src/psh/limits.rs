//! Finite limits and colimits of presheaf diagrams, computed pointwise.
//!
//! Limits are subsets of products in lexicographic element order; colimits
//! quotient a disjoint union by the zig-zag relation the edges generate,
//! with union-find supplying canonical class representatives.

use super::{compose_maps, Diagram, Presheaf, PresheafMap};
use crate::error::{checked_product, Guard, TkError};
use crate::fincat::Obj;
use crate::util::{for_each_tuple, UnionFind};
use std::collections::HashMap;

/// A limit: the apex presheaf and one projection leg per shape object.
#[derive(Clone, Debug)]
pub struct Limit {
    pub apex: Presheaf,
    pub legs: Vec<PresheafMap>,
    /// Per base object, the list of compatible tuples (one coordinate per
    /// shape object) in lexicographic order.
    pub tuples: Vec<Vec<Vec<usize>>>,
}

pub fn finite_limit(d: &Diagram, guard: &Guard) -> Result<Limit, TkError> {
    let base = d.base().clone();
    let shape = d.shape().clone();
    let mut tuples: Vec<Vec<Vec<usize>>> = Vec::with_capacity(base.object_count());
    let mut index: Vec<HashMap<Vec<usize>, usize>> = Vec::with_capacity(base.object_count());
    for a in base.objects() {
        let radix: Vec<usize> = shape.objects().map(|s| d.node(s).size(a)).collect();
        guard.check(
            "limit tuple enumeration",
            checked_product(radix.iter().map(|&r| r as u128)),
        )?;
        let mut here = Vec::new();
        for_each_tuple(&radix, |tuple| {
            let compatible = shape.mors().all(|m| {
                let (s, t) = (shape.dom(m), shape.cod(m));
                d.edge(m).apply(a, tuple[s.0]) == tuple[t.0]
            });
            if compatible {
                here.push(tuple.to_vec());
            }
        });
        let map: HashMap<Vec<usize>, usize> =
            here.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        tuples.push(here);
        index.push(map);
    }
    let sets: Vec<usize> = tuples.iter().map(|t| t.len()).collect();
    let mut actions = Vec::with_capacity(base.mor_count());
    for f in base.mors() {
        let (a, b) = (base.dom(f), base.cod(f));
        let act = tuples[b.0]
            .iter()
            .map(|tuple| {
                let image: Vec<usize> = shape
                    .objects()
                    .map(|s| d.node(s).apply(f, tuple[s.0]))
                    .collect();
                *index[a.0]
                    .get(&image)
                    .expect("limit tuples are closed under the base action")
            })
            .collect();
        actions.push(act);
    }
    let apex = Presheaf::new(base.clone(), sets, actions)?;
    let legs = shape
        .objects()
        .map(|s| {
            let components: Vec<Vec<usize>> = base
                .objects()
                .map(|a| tuples[a.0].iter().map(|t| t[s.0]).collect())
                .collect();
            PresheafMap::new_unchecked(apex.clone(), d.node(s).clone(), components)
        })
        .collect();
    Ok(Limit { apex, legs, tuples })
}

/// A colimit: the apex presheaf and one injection leg per shape object.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub apex: Presheaf,
    pub legs: Vec<PresheafMap>,
    /// Per base object, each class as a sorted list of `(shape node, element)`.
    pub classes: Vec<Vec<Vec<(usize, usize)>>>,
}

pub fn finite_colimit(d: &Diagram) -> Result<Colimit, TkError> {
    let base = d.base().clone();
    let shape = d.shape().clone();
    let nshape = shape.object_count();
    let mut classes_per_obj = Vec::with_capacity(base.object_count());
    let mut class_of: Vec<Vec<Vec<usize>>> = Vec::with_capacity(base.object_count());
    for a in base.objects() {
        // Flatten the disjoint union Σ_s D(s)(a).
        let mut offsets = vec![0usize; nshape + 1];
        for s in 0..nshape {
            offsets[s + 1] = offsets[s] + d.node(Obj(s)).size(a);
        }
        let total = offsets[nshape];
        let mut uf = UnionFind::new(total);
        for m in shape.mors() {
            let (s, t) = (shape.dom(m), shape.cod(m));
            for x in 0..d.node(s).size(a) {
                let y = d.edge(m).apply(a, x);
                uf.union(offsets[s.0] + x, offsets[t.0] + y);
            }
        }
        let classes = uf.classes(total);
        let mut lookup = vec![Vec::new(); nshape];
        for s in 0..nshape {
            lookup[s] = vec![usize::MAX; d.node(Obj(s)).size(a)];
        }
        let decoded: Vec<Vec<(usize, usize)>> = classes
            .iter()
            .enumerate()
            .map(|(ci, members)| {
                members
                    .iter()
                    .map(|&flat| {
                        let s = (0..nshape).rfind(|&s| offsets[s] <= flat).unwrap();
                        let x = flat - offsets[s];
                        lookup[s][x] = ci;
                        (s, x)
                    })
                    .collect()
            })
            .collect();
        classes_per_obj.push(decoded);
        class_of.push(lookup);
    }
    let sets: Vec<usize> = classes_per_obj.iter().map(|c| c.len()).collect();
    let mut actions = Vec::with_capacity(base.mor_count());
    for f in base.mors() {
        let (a, b) = (base.dom(f), base.cod(f));
        let act = classes_per_obj[b.0]
            .iter()
            .map(|members| {
                let (s, x) = members[0];
                class_of[a.0][s][d.node(Obj(s)).apply(f, x)]
            })
            .collect();
        actions.push(act);
    }
    let apex = Presheaf::new(base.clone(), sets, actions)?;
    let legs = shape
        .objects()
        .map(|s| {
            let components: Vec<Vec<usize>> = base
                .objects()
                .map(|a| {
                    (0..d.node(s).size(a))
                        .map(|x| class_of[a.0][s.0][x])
                        .collect()
                })
                .collect();
            PresheafMap::new_unchecked(d.node(s).clone(), apex.clone(), components)
        })
        .collect();
    Ok(Colimit {
        apex,
        legs,
        classes: classes_per_obj,
    })
}

/// Pullback of a cospan `f : X → Z ← Y : g`, with the two projections.
pub struct Pullback {
    pub limit: Limit,
    pub to_x: PresheafMap,
    pub to_y: PresheafMap,
}

pub fn pullback(f: &PresheafMap, g: &PresheafMap, guard: &Guard) -> Result<Pullback, TkError> {
    let d = Diagram::cospan(f, g)?;
    let limit = finite_limit(&d, guard)?;
    let to_x = limit.legs[0].clone();
    let to_y = limit.legs[1].clone();
    Ok(Pullback { limit, to_x, to_y })
}

/// Equalizer of a parallel pair, with its inclusion into the source.
pub fn equalizer(u: &PresheafMap, v: &PresheafMap, guard: &Guard) -> Result<(Limit, PresheafMap), TkError> {
    let d = Diagram::parallel_pair(u, v)?;
    let limit = finite_limit(&d, guard)?;
    let incl = limit.legs[0].clone();
    Ok((limit, incl))
}

/// Coequalizer of a parallel pair, with the quotient map from the target.
pub fn coequalizer(u: &PresheafMap, v: &PresheafMap) -> Result<(Colimit, PresheafMap), TkError> {
    let d = Diagram::parallel_pair(u, v)?;
    let colimit = finite_colimit(&d)?;
    let q = colimit.legs[1].clone();
    Ok((colimit, q))
}

/// Mediating map of a cone into a computed limit. Returns `None` when the
/// family is not a cone over the diagram.
pub fn mediating_into_limit(
    lim: &Limit,
    d: &Diagram,
    cone: &[PresheafMap],
) -> Result<Option<PresheafMap>, TkError> {
    if cone.len() != d.shape().object_count() {
        return Err(TkError::shape("one cone leg per shape object required"));
    }
    let apex = match cone.first() {
        Some(l) => l.source().clone(),
        None => return Err(TkError::shape("mediating into an empty-shape limit is trivial")),
    };
    for (s, leg) in cone.iter().enumerate() {
        if leg.source() != &apex || leg.target() != d.node(Obj(s)) {
            return Err(TkError::shape("cone legs have inconsistent endpoints"));
        }
    }
    for m in d.shape().mors() {
        let (s, t) = (d.shape().dom(m), d.shape().cod(m));
        if compose_maps(d.edge(m), &cone[s.0])? != cone[t.0] {
            return Ok(None);
        }
    }
    let base = apex.base().clone();
    let mut components = Vec::with_capacity(base.object_count());
    for a in base.objects() {
        let mut comp = Vec::with_capacity(apex.size(a));
        for z in 0..apex.size(a) {
            let tuple: Vec<usize> = (0..cone.len()).map(|s| cone[s].apply(a, z)).collect();
            match lim.tuples[a.0].iter().position(|t| *t == tuple) {
                Some(i) => comp.push(i),
                None => return Ok(None),
            }
        }
        components.push(comp);
    }
    Ok(Some(PresheafMap::new_unchecked(apex, lim.apex.clone(), components)))
}

/// Mediating map out of a computed colimit for a cocone. Returns `None`
/// when the family is not a cocone.
pub fn mediating_from_colimit(
    colim: &Colimit,
    d: &Diagram,
    cocone: &[PresheafMap],
) -> Result<Option<PresheafMap>, TkError> {
    if cocone.len() != d.shape().object_count() {
        return Err(TkError::shape("one cocone leg per shape object required"));
    }
    let apex = match cocone.first() {
        Some(l) => l.target().clone(),
        None => return Err(TkError::shape("mediating from an empty-shape colimit is trivial")),
    };
    for (s, leg) in cocone.iter().enumerate() {
        if leg.target() != &apex || leg.source() != d.node(Obj(s)) {
            return Err(TkError::shape("cocone legs have inconsistent endpoints"));
        }
    }
    for m in d.shape().mors() {
        let (s, t) = (d.shape().dom(m), d.shape().cod(m));
        if compose_maps(&cocone[t.0], d.edge(m))? != cocone[s.0] {
            return Ok(None);
        }
    }
    let base = apex.base().clone();
    let mut components = Vec::with_capacity(base.object_count());
    for a in base.objects() {
        let mut comp = Vec::with_capacity(colim.classes[a.0].len());
        for members in &colim.classes[a.0] {
            let images: Vec<usize> = members
                .iter()
                .map(|&(s, x)| cocone[s].apply(a, x))
                .collect();
            if images.windows(2).any(|w| w[0] != w[1]) {
                return Ok(None);
            }
            comp.push(images[0]);
        }
        components.push(comp);
    }
    Ok(Some(PresheafMap::new_unchecked(colim.apex.clone(), apex, components)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;
    use crate::psh::{enumerate_maps, Presheaf};
    use std::sync::Arc;

    #[test]
    fn empty_limit_is_terminal() {
        let base = Arc::new(fincat::walking_arrow());
        let lim = finite_limit(&Diagram::empty(base.clone()), &Guard::default()).unwrap();
        assert_eq!(lim.apex, Presheaf::terminal(base));
    }

    #[test]
    fn empty_colimit_is_initial() {
        let base = Arc::new(fincat::walking_arrow());
        let colim = finite_colimit(&Diagram::empty(base.clone())).unwrap();
        assert_eq!(colim.apex, Presheaf::initial(base));
    }

    #[test]
    fn binary_product_of_constants_multiplies_sizes() {
        let base = Arc::new(fincat::terminal_category());
        let x = Presheaf::constant(base.clone(), 2);
        let y = Presheaf::constant(base.clone(), 3);
        let d = Diagram::discrete(&[&x, &y]).unwrap();
        let lim = finite_limit(&d, &Guard::default()).unwrap();
        assert_eq!(lim.apex.sizes(), &[6]);
    }

    #[test]
    fn coproduct_sizes_add() {
        let base = Arc::new(fincat::terminal_category());
        let x = Presheaf::constant(base.clone(), 1);
        let y = Presheaf::constant(base.clone(), 4);
        let d = Diagram::discrete(&[&x, &y]).unwrap();
        let colim = finite_colimit(&d).unwrap();
        assert_eq!(colim.apex.sizes(), &[5]);
    }

    #[test]
    fn coequalizer_of_distinct_points_collapses_to_one() {
        // Oracle (computed independently by hand-run union-find on the
        // generated relation): both elements of the 2-element set end up in
        // one class, so the coequalizer has exactly 1 element.
        let base = Arc::new(fincat::terminal_category());
        let one = Presheaf::terminal(base.clone());
        let two = Presheaf::constant(base.clone(), 2);
        let p0 = PresheafMap::new(one.clone(), two.clone(), vec![vec![0]]).unwrap();
        let p1 = PresheafMap::new(one.clone(), two.clone(), vec![vec![1]]).unwrap();
        let (colim, q) = coequalizer(&p0, &p1).unwrap();
        assert_eq!(colim.apex.sizes(), &[1]);
        assert_eq!(q.component(crate::fincat::Obj(0)), &[0, 0]);
    }

    #[test]
    fn mediating_maps_into_limits_exist_and_are_unique() {
        let base = Arc::new(fincat::walking_arrow());
        let x = Presheaf::constant(base.clone(), 2);
        let y = Presheaf::constant(base.clone(), 2);
        let d = Diagram::discrete(&[&x, &y]).unwrap();
        let lim = finite_limit(&d, &Guard::default()).unwrap();
        // Build a cone from any corpus object by composing maps into the apex.
        let z = Presheaf::constant(base.clone(), 2);
        for m in enumerate_maps(&z, &lim.apex, &Guard::default()).unwrap() {
            let cone: Vec<PresheafMap> = lim
                .legs
                .iter()
                .map(|leg| compose_maps(leg, &m).unwrap())
                .collect();
            let med = mediating_into_limit(&lim, &d, &cone).unwrap().unwrap();
            assert_eq!(med, m);
            // Uniqueness by exhaustive search.
            let all = enumerate_maps(&z, &lim.apex, &Guard::default()).unwrap();
            let count = all
                .iter()
                .filter(|cand| {
                    lim.legs
                        .iter()
                        .zip(&cone)
                        .all(|(leg, c)| compose_maps(leg, cand).unwrap() == *c)
                })
                .count();
            assert_eq!(count, 1);
        }
    }
}
