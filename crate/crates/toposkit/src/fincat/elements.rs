//! Categories of elements, in both orientations.
//!
//! For a presheaf `P` the objects are pairs `(a, x ∈ P(a))` with a morphism
//! `(a, x) → (b, y)` for each `f : a → b` with `x = y·f`; for a covariant
//! set-valued functor the morphisms go along the action instead. The
//! projection functor to the base comes with the construction.

use super::{Base, CategoryBuilder, FinFunctor, Mor, Obj};
use crate::psh::{Presheaf, SetFunctor};
use std::collections::HashMap;
use std::sync::Arc;

/// A category of elements with its projection to the base.
#[derive(Clone, Debug)]
pub struct ElementsCategory {
    pub cat: Base,
    /// Object `i` of `cat` is the pair `objects[i] = (base object, element)`.
    pub objects: Vec<(Obj, usize)>,
    pub proj: FinFunctor,
}

enum ElemOrientation<'a> {
    Contravariant(&'a Presheaf),
    Covariant(&'a SetFunctor),
}

/// Contravariant orientation: morphisms `(a, P(f)(y)) → (b, y)` per
/// `f : a → b` and `y ∈ P(b)`.
pub fn elements_of_presheaf(p: &Presheaf) -> ElementsCategory {
    build(p.base(), p.sizes(), ElemOrientation::Contravariant(p))
}

/// Covariant orientation (used for flatness): morphisms
/// `(a, x) → (b, M(f)(x))` per `f : a → b` and `x ∈ M(a)`.
pub fn elements_of_set_functor(m: &SetFunctor) -> ElementsCategory {
    build(m.base(), m.sizes(), ElemOrientation::Covariant(m))
}

fn build(base: &Base, sizes: &[usize], orientation: ElemOrientation<'_>) -> ElementsCategory {
    let mut builder = CategoryBuilder::new();
    let mut objects = Vec::new();
    let mut obj_index: HashMap<(usize, usize), Obj> = HashMap::new();
    for a in base.objects() {
        for x in 0..sizes[a.0] {
            let name = format!("{}.{}", base.obj_name(a), x);
            let o = builder.add_object(&name).expect("unique names");
            obj_index.insert((a.0, x), o);
            objects.push((a, x));
        }
    }
    // One morphism per (non-identity base morphism, parameter); the
    // parameter ranges over the presheaf's codomain set or the covariant
    // functor's domain set.
    let mut mor_table: HashMap<(usize, usize), Mor> = HashMap::new();
    let mut mor_meta: Vec<(Mor, Mor, usize)> = Vec::new();
    for f in base.mors() {
        if base.is_identity(f) {
            continue;
        }
        let (a, b) = (base.dom(f), base.cod(f));
        let params = match orientation {
            ElemOrientation::Contravariant(_) => sizes[b.0],
            ElemOrientation::Covariant(_) => sizes[a.0],
        };
        for t in 0..params {
            let (src, dst) = match orientation {
                ElemOrientation::Contravariant(p) => {
                    (obj_index[&(a.0, p.apply(f, t))], obj_index[&(b.0, t)])
                }
                ElemOrientation::Covariant(m) => {
                    (obj_index[&(a.0, t)], obj_index[&(b.0, m.apply(f, t))])
                }
            };
            let name = format!("{}.{}", base.mor_name(f), t);
            let em = builder.add_morphism(&name, src, dst).expect("unique names");
            mor_table.insert((f.0, t), em);
            mor_meta.push((em, f, t));
        }
    }
    let identity_of = |builder: &CategoryBuilder, o: Obj| -> Mor {
        let (a, x) = objects[o.0];
        builder
            .morphism(&format!("id_{}.{}", base.obj_name(a), x))
            .expect("identities exist")
    };
    for &(em_g, g, tg) in &mor_meta {
        for &(em_f, f, tf) in &mor_meta {
            let composable = match orientation {
                ElemOrientation::Contravariant(p) => {
                    base.cod(f) == base.dom(g) && tf == p.apply(g, tg)
                }
                ElemOrientation::Covariant(m) => {
                    base.cod(f) == base.dom(g) && m.apply(f, tf) == tg
                }
            };
            if !composable {
                continue;
            }
            let gf = base.compose(g, f).expect("composable in the base");
            let param = match orientation {
                ElemOrientation::Contravariant(_) => tg,
                ElemOrientation::Covariant(_) => tf,
            };
            let em_gf = if base.is_identity(gf) {
                let src = match orientation {
                    ElemOrientation::Contravariant(p) => {
                        obj_index[&(base.dom(f).0, p.apply(f, tf))]
                    }
                    ElemOrientation::Covariant(_) => obj_index[&(base.dom(f).0, tf)],
                };
                identity_of(&builder, src)
            } else {
                mor_table[&(gf.0, param)]
            };
            builder.set_composite(em_g, em_f, em_gf).expect("consistent");
        }
    }
    let cat = Arc::new(builder.finish());
    debug_assert!(super::validate_category(&cat).ok());
    let obj_map: Vec<Obj> = objects.iter().map(|&(a, _)| a).collect();
    let mor_map: Vec<Mor> = cat
        .mors()
        .map(|em| {
            if let Some(&(_, f, _)) = mor_meta.iter().find(|&&(m, _, _)| m == em) {
                f
            } else {
                let pos = cat
                    .objects()
                    .find(|&o| cat.identity(o) == em)
                    .expect("non-listed morphisms are identities");
                base.identity(objects[pos.0].0)
            }
        })
        .collect();
    let proj = FinFunctor::new(cat.clone(), base.clone(), obj_map, mor_map)
        .expect("projection is a functor");
    ElementsCategory { cat, objects, proj }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{self, terminal_objects, validate_category};
    use crate::psh::{representable, Presheaf};

    #[test]
    fn elements_of_the_terminal_presheaf_recover_the_base() {
        let arrow = Arc::new(fincat::walking_arrow());
        let one = Presheaf::terminal(arrow.clone());
        let e = elements_of_presheaf(&one);
        assert!(validate_category(&e.cat).ok());
        assert_eq!(e.cat.object_count(), 2);
        assert_eq!(e.cat.mor_count(), 3);
    }

    #[test]
    fn elements_of_the_empty_presheaf_is_empty() {
        let arrow = Arc::new(fincat::walking_arrow());
        let zero = Presheaf::initial(arrow.clone());
        let e = elements_of_presheaf(&zero);
        assert_eq!(e.cat.object_count(), 0);
        assert_eq!(e.cat.mor_count(), 0);
    }

    #[test]
    fn elements_of_a_representable_matches_its_total_size() {
        // Oracle: enumerate the pairs and arrows by brute force. y(b) on the
        // walking arrow has elements u at a and id_b at b, so 2 objects; the
        // non-identity arrows are those lying over u with target id_b.
        let arrow = Arc::new(fincat::walking_arrow());
        let b = arrow.object_by_name("b").unwrap();
        let yb = representable(&arrow, b);
        let e = elements_of_presheaf(&yb.psh);
        assert!(validate_category(&e.cat).ok());
        assert_eq!(e.cat.object_count(), 2);
        assert_eq!(e.cat.mor_count(), 3);
    }

    #[test]
    fn elements_of_representables_have_a_terminal_object() {
        // The identity element of y(a)(a) is terminal, exhaustively on the
        // fixture corpus.
        for base in [
            Arc::new(fincat::terminal_category()),
            Arc::new(fincat::walking_arrow()),
            Arc::new(fincat::chain(3)),
            Arc::new(fincat::square_poset()),
            Arc::new(fincat::cyclic_group(2)),
            Arc::new(fincat::cyclic_group(3)),
        ] {
            for a in base.objects() {
                let ya = representable(&base, a);
                let e = elements_of_presheaf(&ya.psh);
                assert!(validate_category(&e.cat).ok());
                let terminals = terminal_objects(&e.cat);
                // Terminal objects are unique only up to isomorphism (a
                // torsor's elements category has several); the identity
                // element must be among them.
                let id_pos = ya.elems[a.0]
                    .iter()
                    .position(|&m| m == base.identity(a))
                    .unwrap();
                let id_obj = e
                    .objects
                    .iter()
                    .position(|&(o, x)| o == a && x == id_pos)
                    .unwrap();
                assert!(
                    terminals.contains(&crate::fincat::Obj(id_obj)),
                    "y({}) on {base}",
                    base.obj_name(a)
                );
            }
        }
    }

    #[test]
    fn covariant_elements_of_a_group_action_see_orbits() {
        let z2 = Arc::new(fincat::cyclic_group(2));
        let g = z2.mor_by_name("g").unwrap();
        let mut actions = vec![vec![0, 1], vec![0, 1]];
        actions[g.0] = vec![1, 0];
        let m = SetFunctor::new(z2.clone(), vec![2], actions).unwrap();
        let e = elements_of_set_functor(&m);
        assert!(validate_category(&e.cat).ok());
        assert_eq!(e.cat.object_count(), 2);
        // Each element has an identity and a swap arrow: 4 morphisms.
        assert_eq!(e.cat.mor_count(), 4);
    }

    #[test]
    fn projection_functor_covers_the_base_for_terminal_presheaf() {
        let chain = Arc::new(fincat::chain(3));
        let one = Presheaf::terminal(chain.clone());
        let e = elements_of_presheaf(&one);
        for (i, &(a, _)) in e.objects.iter().enumerate() {
            assert_eq!(e.proj.on_obj(Obj(i)), a);
        }
    }
}
