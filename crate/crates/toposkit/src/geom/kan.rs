//! Kan extensions along a functor between finite base categories, computed
//! as pointwise colimits (left) and ends (right), plus precomposition.

use crate::error::{checked_pow, checked_product, Guard, TkError};
use crate::fincat::{FinFunctor, Mor, Obj};
use crate::psh::{Presheaf, PresheafMap};
use crate::util::UnionFind;
use std::collections::HashMap;

/// Precomposition `f* : Psh(D) → Psh(C)` for `f : C → D`.
pub fn precompose(f: &FinFunctor, q: &Presheaf) -> Result<Presheaf, TkError> {
    if q.base() != &f.target {
        return Err(TkError::BaseMismatch("precomposition input lives over the wrong base".into()));
    }
    let c = f.source.clone();
    let sets: Vec<usize> = c.objects().map(|a| q.size(f.on_obj(a))).collect();
    let actions: Vec<Vec<usize>> = c.mors().map(|u| q.action(f.on_mor(u)).to_vec()).collect();
    Presheaf::new(c, sets, actions)
}

/// Precomposition on maps.
pub fn precompose_map(f: &FinFunctor, h: &PresheafMap) -> Result<PresheafMap, TkError> {
    let src = precompose(f, h.source())?;
    let dst = precompose(f, h.target())?;
    let components: Vec<Vec<usize>> = f
        .source
        .objects()
        .map(|a| h.component(f.on_obj(a)).to_vec())
        .collect();
    PresheafMap::new(src, dst, components)
}

/// Left Kan extension data: `(f_! P)(d)` is the set of classes of triples
/// `(c, φ : d → f c, x ∈ P(c))` under the zig-zag relation generated by
/// `(c, f(u)∘φ, x') ~ (c', φ', …)` for `u : c → c'`.
#[derive(Clone, Debug)]
pub struct LeftKan {
    pub psh: Presheaf,
    /// Per object `d` of the target base, class representatives as triples
    /// `(c, φ, x)`.
    pub reps: Vec<Vec<(Obj, Mor, usize)>>,
    class_of: Vec<HashMap<(usize, usize, usize), usize>>,
}

impl LeftKan {
    pub fn class(&self, d: Obj, c: Obj, phi: Mor, x: usize) -> usize {
        self.class_of[d.0][&(c.0, phi.0, x)]
    }
}

pub fn left_kan(f: &FinFunctor, p: &Presheaf, _guard: &Guard) -> Result<LeftKan, TkError> {
    if p.base() != &f.source {
        return Err(TkError::BaseMismatch("left Kan input lives over the wrong base".into()));
    }
    let c_cat = f.source.clone();
    let d_cat = f.target.clone();
    let mut reps_all = Vec::with_capacity(d_cat.object_count());
    let mut class_all = Vec::with_capacity(d_cat.object_count());
    for d in d_cat.objects() {
        // Triples (c, φ : d → f c, x ∈ P(c)) in canonical order.
        let mut triples: Vec<(Obj, Mor, usize)> = Vec::new();
        for c in c_cat.objects() {
            for phi in d_cat.hom(d, f.on_obj(c)) {
                for x in 0..p.size(c) {
                    triples.push((c, phi, x));
                }
            }
        }
        let index: HashMap<(usize, usize, usize), usize> = triples
            .iter()
            .enumerate()
            .map(|(i, &(c, phi, x))| ((c.0, phi.0, x), i))
            .collect();
        let mut uf = UnionFind::new(triples.len());
        // (c, φ, P(u)(x')) ~ (c', f(u)∘φ, x') for u : c → c', x' ∈ P(c').
        for u in c_cat.mors() {
            let (c, c2) = (c_cat.dom(u), c_cat.cod(u));
            for phi in d_cat.hom(d, f.on_obj(c)) {
                let fu_phi = d_cat
                    .compose(f.on_mor(u), phi)
                    .expect("composable by typing");
                for x2 in 0..p.size(c2) {
                    let lhs = index[&(c.0, phi.0, p.apply(u, x2))];
                    let rhs = index[&(c2.0, fu_phi.0, x2)];
                    uf.union(lhs, rhs);
                }
            }
        }
        let classes = uf.classes(triples.len());
        let mut class_of = HashMap::new();
        let reps: Vec<(Obj, Mor, usize)> = classes
            .iter()
            .enumerate()
            .map(|(ci, members)| {
                for &m in members {
                    let (c, phi, x) = triples[m];
                    class_of.insert((c.0, phi.0, x), ci);
                }
                triples[members[0]]
            })
            .collect();
        reps_all.push(reps);
        class_all.push(class_of);
    }
    let sets: Vec<usize> = reps_all.iter().map(|r| r.len()).collect();
    let mut actions = Vec::with_capacity(d_cat.mor_count());
    for v in d_cat.mors() {
        // (f_! P)(v) : (f_! P)(cod v) → (f_! P)(dom v): precompose φ with v.
        let (d_new, d_old) = (d_cat.dom(v), d_cat.cod(v));
        let act = reps_all[d_old.0]
            .iter()
            .map(|&(c, phi, x)| {
                let phi_v = d_cat.compose(phi, v).expect("composable by typing");
                class_all[d_new.0][&(c.0, phi_v.0, x)]
            })
            .collect();
        actions.push(act);
    }
    let psh = Presheaf::new(d_cat, sets, actions)?;
    Ok(LeftKan {
        psh,
        reps: reps_all,
        class_of: class_all,
    })
}

/// Functorial action of the left Kan extension on a map `h : P → P'`.
pub fn left_kan_map(
    f: &FinFunctor,
    h: &PresheafMap,
    src: &LeftKan,
    dst: &LeftKan,
) -> Result<PresheafMap, TkError> {
    let d_cat = f.target.clone();
    let components = d_cat
        .objects()
        .map(|d| {
            src.reps[d.0]
                .iter()
                .map(|&(c, phi, x)| dst.class_of[d.0][&(c.0, phi.0, h.apply(c, x))])
                .collect()
        })
        .collect();
    Ok(PresheafMap::new_unchecked(
        src.psh.clone(),
        dst.psh.clone(),
        components,
    ))
}

/// Right Kan extension data: `(f_* P)(d)` is the set of families
/// `ξ = (ξ_c : D(f c, d) → P(c))_c` natural in `c`. A family is stored as
/// one vector per source object, indexed by the hom list `D(f c, d)`.
#[derive(Clone, Debug)]
pub struct RightKan {
    pub psh: Presheaf,
    /// Per object `d`: the hom lists `D(f c, d)` per source object `c`.
    pub hom_lists: Vec<Vec<Vec<Mor>>>,
    /// Per object `d`: families in canonical order.
    pub families: Vec<Vec<Vec<Vec<usize>>>>,
    index: Vec<HashMap<Vec<Vec<usize>>, usize>>,
}

impl RightKan {
    pub fn family_index(&self, d: Obj, family: &Vec<Vec<usize>>) -> usize {
        self.index[d.0][family]
    }
}

pub fn right_kan(f: &FinFunctor, p: &Presheaf, guard: &Guard) -> Result<RightKan, TkError> {
    if p.base() != &f.source {
        return Err(TkError::BaseMismatch("right Kan input lives over the wrong base".into()));
    }
    let c_cat = f.source.clone();
    let d_cat = f.target.clone();
    let mut hom_lists_all = Vec::with_capacity(d_cat.object_count());
    let mut families_all = Vec::with_capacity(d_cat.object_count());
    let mut index_all = Vec::with_capacity(d_cat.object_count());
    for d in d_cat.objects() {
        let hom_lists: Vec<Vec<Mor>> = c_cat
            .objects()
            .map(|c| d_cat.hom(f.on_obj(c), d))
            .collect();
        let candidates = checked_product(
            c_cat
                .objects()
                .map(|c| checked_pow(p.size(c) as u128, hom_lists[c.0].len() as u128)),
        );
        guard.check("right Kan end enumeration", candidates)?;

        // Backtrack object by object; check naturality squares whose two
        // source objects are both assigned:
        //   ξ_c(ψ ∘ f(u)) = P(u)(ξ_{c'}(ψ))  for u : c → c', ψ : f c' → d.
        let nobj = c_cat.object_count();
        let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut partial: Vec<Vec<usize>> = Vec::new();

        fn consistent(
            c_cat: &crate::fincat::FinCategory,
            d_cat: &crate::fincat::FinCategory,
            f: &FinFunctor,
            p: &Presheaf,
            hom_lists: &[Vec<Mor>],
            partial: &[Vec<usize>],
        ) -> bool {
            let k = partial.len();
            c_cat.mors().all(|u| {
                let (c, c2) = (c_cat.dom(u), c_cat.cod(u));
                if c.0 >= k || c2.0 >= k {
                    return true;
                }
                hom_lists[c2.0].iter().enumerate().all(|(pi, &psi)| {
                    let psi_fu = d_cat.compose(psi, f.on_mor(u)).expect("composable");
                    let li = hom_lists[c.0]
                        .iter()
                        .position(|&m| m == psi_fu)
                        .expect("hom list is complete");
                    partial[c.0][li] == p.apply(u, partial[c2.0][pi])
                })
            })
        }

        fn recurse(
            c_cat: &crate::fincat::FinCategory,
            d_cat: &crate::fincat::FinCategory,
            f: &FinFunctor,
            p: &Presheaf,
            hom_lists: &[Vec<Mor>],
            nobj: usize,
            partial: &mut Vec<Vec<usize>>,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            if partial.len() == nobj {
                out.push(partial.clone());
                return;
            }
            let c = Obj(partial.len());
            let arity = hom_lists[c.0].len();
            let size = p.size(c);
            if arity > 0 && size == 0 {
                return;
            }
            let mut func = vec![0usize; arity];
            loop {
                partial.push(func.clone());
                if consistent(c_cat, d_cat, f, p, hom_lists, partial) {
                    recurse(c_cat, d_cat, f, p, hom_lists, nobj, partial, out);
                }
                partial.pop();
                let mut i = arity;
                loop {
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                    func[i] += 1;
                    if func[i] < size {
                        break;
                    }
                    func[i] = 0;
                }
            }
        }

        recurse(
            &c_cat,
            &d_cat,
            f,
            p,
            &hom_lists,
            nobj,
            &mut partial,
            &mut out,
        );
        let index: HashMap<Vec<Vec<usize>>, usize> = out
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, fam)| (fam, i))
            .collect();
        hom_lists_all.push(hom_lists);
        families_all.push(out);
        index_all.push(index);
    }
    let sets: Vec<usize> = families_all.iter().map(|f| f.len()).collect();
    let mut actions = Vec::with_capacity(d_cat.mor_count());
    for v in d_cat.mors() {
        // (f_* P)(v) : families at cod v → families at dom v, ξ ↦ ξ(v ∘ −).
        let (d_new, d_old) = (d_cat.dom(v), d_cat.cod(v));
        let act = families_all[d_old.0]
            .iter()
            .map(|fam| {
                let new_fam: Vec<Vec<usize>> = c_cat
                    .objects()
                    .map(|c| {
                        hom_lists_all[d_new.0][c.0]
                            .iter()
                            .map(|&psi| {
                                let v_psi = d_cat.compose(v, psi).expect("composable");
                                let pos = hom_lists_all[d_old.0][c.0]
                                    .iter()
                                    .position(|&m| m == v_psi)
                                    .expect("hom list is complete");
                                fam[c.0][pos]
                            })
                            .collect()
                    })
                    .collect();
                index_all[d_new.0][&new_fam]
            })
            .collect();
        actions.push(act);
    }
    let psh = Presheaf::new(d_cat, sets, actions)?;
    Ok(RightKan {
        psh,
        hom_lists: hom_lists_all,
        families: families_all,
        index: index_all,
    })
}

/// Functorial action of the right Kan extension on a map `h : P → P'`.
pub fn right_kan_map(
    f: &FinFunctor,
    h: &PresheafMap,
    src: &RightKan,
    dst: &RightKan,
) -> Result<PresheafMap, TkError> {
    let d_cat = f.target.clone();
    let c_cat = f.source.clone();
    let components = d_cat
        .objects()
        .map(|d| {
            src.families[d.0]
                .iter()
                .map(|fam| {
                    let mapped: Vec<Vec<usize>> = c_cat
                        .objects()
                        .map(|c| fam[c.0].iter().map(|&x| h.apply(c, x)).collect())
                        .collect();
                    dst.index[d.0][&mapped]
                })
                .collect()
        })
        .collect();
    Ok(PresheafMap::new_unchecked(
        src.psh.clone(),
        dst.psh.clone(),
        components,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;
    use std::sync::Arc;

    fn pick_b() -> FinFunctor {
        let one = Arc::new(fincat::terminal_category());
        let arrow = Arc::new(fincat::walking_arrow());
        let b = arrow.object_by_name("b").unwrap();
        FinFunctor::new(one, arrow.clone(), vec![b], vec![arrow.identity(b)]).unwrap()
    }

    #[test]
    fn precomposition_evaluates_at_the_image_object() {
        let f = pick_b();
        let arrow = f.target.clone();
        let yb = crate::psh::representable(&arrow, arrow.object_by_name("b").unwrap()).psh;
        let restricted = precompose(&f, &yb).unwrap();
        assert_eq!(restricted.sizes(), &[1]);
    }

    #[test]
    fn left_kan_along_identity_is_identity() {
        let arrow = Arc::new(fincat::walking_arrow());
        let id = FinFunctor::identity(arrow.clone());
        let p = crate::psh::representable(&arrow, arrow.object_by_name("b").unwrap()).psh;
        let lan = left_kan(&id, &p, &Guard::default()).unwrap();
        assert!(crate::psh::are_isomorphic(&lan.psh, &p));
        let ran = right_kan(&id, &p, &Guard::default()).unwrap();
        assert!(crate::psh::are_isomorphic(&ran.psh, &p));
    }

    #[test]
    fn kan_extensions_of_a_point_along_pick_b() {
        let f = pick_b();
        let one_base = f.source.clone();
        let p = Presheaf::constant(one_base, 2);
        // f_! P is the copower 2 · y(b): sizes (2, 2) on the walking arrow.
        let lan = left_kan(&f, &p, &Guard::default()).unwrap();
        assert_eq!(lan.psh.sizes(), &[2, 2]);
        // f_* P has (f_* P)(d) = P^{|hom(b, d)|}: at a there are no maps
        // b → a, so a singleton; at b exactly P.
        let ran = right_kan(&f, &p, &Guard::default()).unwrap();
        assert_eq!(ran.psh.sizes(), &[1, 2]);
    }
}
