//! The presheaf topos over a finite base category, with finite sets as
//! values.
//!
//! Elements of `P(a)` are the indices `0..P(a).len()`; the action of a
//! morphism `f : a → b` is a function `P(b) → P(a)` stored as an array.
//! All constructions pick canonical element orders so repeated runs produce
//! identical data.

mod classify;
mod diagram;
mod exponential;
mod hom;
mod limits;

pub use classify::{factor_epi_mono, map_class, mono_failure, Factorization, MapClass};
pub use diagram::Diagram;
pub use exponential::{exponential, Exponential};
pub use hom::{
    are_isomorphic, count_nat_candidates, enumerate_maps, enumerate_nats, first_iso, global_elements,
};
pub use limits::{
    coequalizer, equalizer, finite_colimit, finite_limit, mediating_from_colimit,
    mediating_into_limit, pullback, Colimit, Limit,
};

use crate::error::TkError;
use crate::fincat::{Base, FinCategory, Mor, Obj};
use std::sync::Arc;

/// A contravariant finite-set-valued functor on a finite category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presheaf {
    base: Base,
    sets: Vec<usize>,
    /// Per morphism `f : a → b`, the function `P(b) → P(a)`.
    actions: Vec<Vec<usize>>,
}

pub(crate) fn same_base(a: &Base, b: &Base) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Presheaf {
    /// Build and validate: identities act as identities and
    /// `P(g∘f) = P(f)∘P(g)` for every composable pair.
    pub fn new(base: Base, sets: Vec<usize>, actions: Vec<Vec<usize>>) -> Result<Self, TkError> {
        if sets.len() != base.object_count() || actions.len() != base.mor_count() {
            return Err(TkError::shape("presheaf tables do not match the base category"));
        }
        for f in base.mors() {
            let (a, b) = (base.dom(f), base.cod(f));
            let act = &actions[f.0];
            if act.len() != sets[b.0] {
                return Err(TkError::shape(format!(
                    "action of `{}` must be defined on all {} elements",
                    base.mor_name(f),
                    sets[b.0]
                )));
            }
            if act.iter().any(|&x| x >= sets[a.0]) {
                return Err(TkError::shape(format!(
                    "action of `{}` maps outside the target set",
                    base.mor_name(f)
                )));
            }
        }
        let p = Presheaf { base, sets, actions };
        p.check_functorial()?;
        Ok(p)
    }

    fn check_functorial(&self) -> Result<(), TkError> {
        let base = &self.base;
        for a in base.objects() {
            let id = base.identity(a);
            for x in 0..self.sets[a.0] {
                if self.actions[id.0][x] != x {
                    return Err(TkError::invalid(
                        "presheaf",
                        format!("identity at `{}` does not act as identity", base.obj_name(a)),
                    ));
                }
            }
        }
        for g in base.mors() {
            for f in base.mors() {
                if let Some(gf) = base.compose(g, f) {
                    // P(g∘f) = P(f) ∘ P(g) on P(cod g).
                    let c = base.cod(g);
                    for y in 0..self.sets[c.0] {
                        let direct = self.actions[gf.0][y];
                        let via = self.actions[f.0][self.actions[g.0][y]];
                        if direct != via {
                            return Err(TkError::invalid(
                                "presheaf",
                                format!(
                                    "contravariance fails on {}∘{} at element {}",
                                    base.mor_name(g),
                                    base.mor_name(f),
                                    y
                                ),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn size(&self, a: Obj) -> usize {
        self.sets[a.0]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sets
    }

    pub fn action(&self, f: Mor) -> &[usize] {
        &self.actions[f.0]
    }

    /// Apply `P(f) : P(cod f) → P(dom f)` to an element.
    pub fn apply(&self, f: Mor, y: usize) -> usize {
        self.actions[f.0][y]
    }

    pub fn total_size(&self) -> usize {
        self.sets.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.iter().all(|&n| n == 0)
    }

    /// Terminal presheaf: a singleton everywhere.
    pub fn terminal(base: Base) -> Presheaf {
        let sets = vec![1; base.object_count()];
        let actions = base.mors().map(|_| vec![0]).collect();
        Presheaf { base, sets, actions }
    }

    /// Initial presheaf: empty everywhere.
    pub fn initial(base: Base) -> Presheaf {
        let sets = vec![0; base.object_count()];
        let actions = base.mors().map(|_| Vec::new()).collect();
        Presheaf { base, sets, actions }
    }

    /// Constant presheaf with `n` elements and identity actions.
    pub fn constant(base: Base, n: usize) -> Presheaf {
        let sets = vec![n; base.object_count()];
        let actions = base.mors().map(|_| (0..n).collect()).collect();
        Presheaf { base, sets, actions }
    }
}

/// A representable presheaf `y(a)` together with the meaning of its
/// elements: `y(a)(b)` is the list of morphisms `b → a` in index order.
#[derive(Clone, Debug)]
pub struct Representable {
    pub psh: Presheaf,
    pub at: Obj,
    pub elems: Vec<Vec<Mor>>,
}

pub fn representable(base: &Base, a: Obj) -> Representable {
    let elems: Vec<Vec<Mor>> = base.objects().map(|b| base.hom(b, a)).collect();
    let sets: Vec<usize> = elems.iter().map(|v| v.len()).collect();
    let mut actions = Vec::with_capacity(base.mor_count());
    for f in base.mors() {
        let (d, c) = (base.dom(f), base.cod(f));
        // y(a)(f) : hom(c, a) → hom(d, a), h ↦ h∘f.
        let act = elems[c.0]
            .iter()
            .map(|&h| {
                let hf = base.compose(h, f).expect("composable by typing");
                elems[d.0].iter().position(|&k| k == hf).unwrap()
            })
            .collect();
        actions.push(act);
    }
    Representable {
        psh: Presheaf {
            base: base.clone(),
            sets,
            actions,
        },
        at: a,
        elems,
    }
}

/// A natural transformation between presheaves over the same base, as a
/// total component table. Construction validates naturality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PresheafMap {
    source: Presheaf,
    target: Presheaf,
    components: Vec<Vec<usize>>,
}

impl PresheafMap {
    pub fn new(
        source: Presheaf,
        target: Presheaf,
        components: Vec<Vec<usize>>,
    ) -> Result<Self, TkError> {
        if !same_base(source.base(), target.base()) {
            return Err(TkError::BaseMismatch(
                "presheaf map endpoints live over different bases".into(),
            ));
        }
        let base = source.base().clone();
        if components.len() != base.object_count() {
            return Err(TkError::shape("one component per object required"));
        }
        for a in base.objects() {
            if components[a.0].len() != source.size(a) {
                return Err(TkError::shape(format!(
                    "component at `{}` must be defined on all elements",
                    base.obj_name(a)
                )));
            }
            if components[a.0].iter().any(|&y| y >= target.size(a)) {
                return Err(TkError::shape(format!(
                    "component at `{}` maps outside the target set",
                    base.obj_name(a)
                )));
            }
        }
        // Naturality: for f : a → b, h_a ∘ P(f) = Q(f) ∘ h_b on P(b).
        for f in base.mors() {
            let (a, b) = (base.dom(f), base.cod(f));
            for y in 0..source.size(b) {
                let left = components[a.0][source.apply(f, y)];
                let right = target.apply(f, components[b.0][y]);
                if left != right {
                    return Err(TkError::invalid(
                        "presheaf map",
                        format!(
                            "naturality fails at `{}` on element {}",
                            base.mor_name(f),
                            y
                        ),
                    ));
                }
            }
        }
        Ok(PresheafMap {
            source,
            target,
            components,
        })
    }

    pub(crate) fn new_unchecked(
        source: Presheaf,
        target: Presheaf,
        components: Vec<Vec<usize>>,
    ) -> Self {
        debug_assert!(
            PresheafMap::new(source.clone(), target.clone(), components.clone()).is_ok(),
            "internal construction produced an unnatural map"
        );
        PresheafMap {
            source,
            target,
            components,
        }
    }

    pub fn identity(p: &Presheaf) -> Self {
        let components = p.sizes().iter().map(|&n| (0..n).collect()).collect();
        PresheafMap {
            source: p.clone(),
            target: p.clone(),
            components,
        }
    }

    pub fn source(&self) -> &Presheaf {
        &self.source
    }

    pub fn target(&self) -> &Presheaf {
        &self.target
    }

    pub fn base(&self) -> &Base {
        self.source.base()
    }

    pub fn component(&self, a: Obj) -> &[usize] {
        &self.components[a.0]
    }

    pub fn components(&self) -> &Vec<Vec<usize>> {
        &self.components
    }

    pub fn apply(&self, a: Obj, x: usize) -> usize {
        self.components[a.0][x]
    }

    /// Unique map into the terminal presheaf.
    pub fn to_terminal(p: &Presheaf) -> Self {
        let terminal = Presheaf::terminal(p.base().clone());
        let components = p.sizes().iter().map(|&n| vec![0; n]).collect();
        PresheafMap {
            source: p.clone(),
            target: terminal,
            components,
        }
    }

    /// Unique map out of the initial presheaf.
    pub fn from_initial(p: &Presheaf) -> Self {
        let initial = Presheaf::initial(p.base().clone());
        let components = p.sizes().iter().map(|_| Vec::new()).collect();
        PresheafMap {
            source: initial,
            target: p.clone(),
            components,
        }
    }

    /// A global element `1 → X` from a compatible family of elements.
    pub fn global_element(x: &Presheaf, family: Vec<usize>) -> Result<Self, TkError> {
        let one = Presheaf::terminal(x.base().clone());
        PresheafMap::new(one, x.clone(), family.into_iter().map(|e| vec![e]).collect())
    }
}

/// `g∘f` for presheaf maps (`f` first, then `g`).
pub fn compose_maps(g: &PresheafMap, f: &PresheafMap) -> Result<PresheafMap, TkError> {
    if f.target != g.source {
        return Err(TkError::shape("composition endpoints do not match"));
    }
    let components = f
        .components
        .iter()
        .zip(&g.components)
        .map(|(fc, gc)| fc.iter().map(|&x| gc[x]).collect())
        .collect();
    Ok(PresheafMap {
        source: f.source.clone(),
        target: g.target.clone(),
        components,
    })
}

/// A binary product presheaf with projections and canonical pair indexing
/// (`index = x·|Y(a)| + y`).
#[derive(Clone, Debug)]
pub struct Product {
    pub obj: Presheaf,
    pub pr1: PresheafMap,
    pub pr2: PresheafMap,
    left_sizes: Vec<usize>,
    right_sizes: Vec<usize>,
}

impl Product {
    pub fn pair_index(&self, a: Obj, x: usize, y: usize) -> usize {
        debug_assert!(x < self.left_sizes[a.0] && y < self.right_sizes[a.0]);
        x * self.right_sizes[a.0] + y
    }

    pub fn unpair(&self, a: Obj, i: usize) -> (usize, usize) {
        let r = self.right_sizes[a.0];
        (i / r, i % r)
    }

    /// Pairing `⟨u, v⟩ : Z → X×Y` of maps with common source.
    pub fn pairing(&self, u: &PresheafMap, v: &PresheafMap) -> Result<PresheafMap, TkError> {
        if u.source() != v.source() {
            return Err(TkError::shape("pairing needs maps with the same source"));
        }
        if u.target() != self.pr1.target() || v.target() != self.pr2.target() {
            return Err(TkError::shape("pairing targets do not match the product factors"));
        }
        let base = u.base().clone();
        let components = base
            .objects()
            .map(|a| {
                (0..u.source().size(a))
                    .map(|z| self.pair_index(a, u.apply(a, z), v.apply(a, z)))
                    .collect()
            })
            .collect();
        Ok(PresheafMap::new_unchecked(
            u.source().clone(),
            self.obj.clone(),
            components,
        ))
    }

    /// `u×v : X×Y → X'×Y'` acting factorwise into another product.
    pub fn parallel(
        &self,
        other: &Product,
        u: &PresheafMap,
        v: &PresheafMap,
    ) -> Result<PresheafMap, TkError> {
        let first = compose_maps(u, &self.pr1)?;
        let second = compose_maps(v, &self.pr2)?;
        other.pairing(&first, &second)
    }
}

pub fn product(x: &Presheaf, y: &Presheaf) -> Result<Product, TkError> {
    if !same_base(x.base(), y.base()) {
        return Err(TkError::BaseMismatch("product factors over different bases".into()));
    }
    let base = x.base().clone();
    let sets: Vec<usize> = base.objects().map(|a| x.size(a) * y.size(a)).collect();
    let mut actions = Vec::with_capacity(base.mor_count());
    for f in base.mors() {
        let (a, b) = (base.dom(f), base.cod(f));
        let mut act = Vec::with_capacity(sets[b.0]);
        for xe in 0..x.size(b) {
            for ye in 0..y.size(b) {
                act.push(x.apply(f, xe) * y.size(a) + y.apply(f, ye));
            }
        }
        actions.push(act);
    }
    let obj = Presheaf {
        base: base.clone(),
        sets,
        actions,
    };
    let pr1_components = base
        .objects()
        .map(|a| {
            (0..obj.size(a))
                .map(|i| i / y.size(a).max(1))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>();
    let pr2_components = base
        .objects()
        .map(|a| (0..obj.size(a)).map(|i| i % y.size(a).max(1)).collect())
        .collect();
    let pr1 = PresheafMap::new_unchecked(obj.clone(), x.clone(), pr1_components);
    let pr2 = PresheafMap::new_unchecked(obj.clone(), y.clone(), pr2_components);
    Ok(Product {
        obj,
        pr1,
        pr2,
        left_sizes: x.sizes().to_vec(),
        right_sizes: y.sizes().to_vec(),
    })
}

/// An n-ary product with tuple indexing (last factor fastest).
#[derive(Clone, Debug)]
pub struct ProductMany {
    pub obj: Presheaf,
    pub legs: Vec<PresheafMap>,
    factor_sizes: Vec<Vec<usize>>,
}

impl ProductMany {
    pub fn tuple_index(&self, a: Obj, tuple: &[usize]) -> usize {
        let mut idx = 0;
        for (k, &t) in tuple.iter().enumerate() {
            idx = idx * self.factor_sizes[k][a.0] + t;
        }
        idx
    }

    pub fn untuple(&self, a: Obj, mut i: usize) -> Vec<usize> {
        let k = self.factor_sizes.len();
        let mut out = vec![0; k];
        for j in (0..k).rev() {
            let s = self.factor_sizes[j][a.0];
            out[j] = i % s;
            i /= s;
        }
        out
    }

    pub fn pairing(&self, maps: &[PresheafMap]) -> Result<PresheafMap, TkError> {
        if maps.len() != self.factor_sizes.len() {
            return Err(TkError::shape("wrong number of maps for tupling"));
        }
        if maps.is_empty() {
            return Err(TkError::shape("empty tupling needs an explicit source"));
        }
        let src = maps[0].source().clone();
        if maps.iter().any(|m| m.source() != &src) {
            return Err(TkError::shape("tupling needs maps with the same source"));
        }
        let base = src.base().clone();
        let components = base
            .objects()
            .map(|a| {
                (0..src.size(a))
                    .map(|z| {
                        let tuple: Vec<usize> = maps.iter().map(|m| m.apply(a, z)).collect();
                        self.tuple_index(a, &tuple)
                    })
                    .collect()
            })
            .collect();
        Ok(PresheafMap::new_unchecked(src, self.obj.clone(), components))
    }
}

pub fn product_many(factors: &[&Presheaf]) -> Result<ProductMany, TkError> {
    if factors.is_empty() {
        return Err(TkError::shape("product_many needs at least one factor"));
    }
    let base = factors[0].base().clone();
    if factors.iter().any(|p| !same_base(p.base(), &base)) {
        return Err(TkError::BaseMismatch("product factors over different bases".into()));
    }
    let sets: Vec<usize> = base
        .objects()
        .map(|a| factors.iter().map(|p| p.size(a)).product())
        .collect();
    let factor_sizes: Vec<Vec<usize>> = factors.iter().map(|p| p.sizes().to_vec()).collect();
    let tuple_index = |a: Obj, tuple: &[usize]| -> usize {
        let mut idx = 0;
        for (k, &t) in tuple.iter().enumerate() {
            idx = idx * factor_sizes[k][a.0] + t;
        }
        idx
    };
    let mut actions = Vec::with_capacity(base.mor_count());
    for f in base.mors() {
        let (a, b) = (base.dom(f), base.cod(f));
        let radix: Vec<usize> = factors.iter().map(|p| p.size(b)).collect();
        let mut act = Vec::with_capacity(sets[b.0]);
        crate::util::for_each_tuple(&radix, |tuple| {
            let image: Vec<usize> = tuple
                .iter()
                .enumerate()
                .map(|(k, &t)| factors[k].apply(f, t))
                .collect();
            act.push(tuple_index(a, &image));
        });
        actions.push(act);
    }
    let obj = Presheaf {
        base: base.clone(),
        sets,
        actions,
    };
    let mut legs = Vec::with_capacity(factors.len());
    for (k, p) in factors.iter().enumerate() {
        let components: Vec<Vec<usize>> = base
            .objects()
            .map(|a| {
                (0..obj.size(a))
                    .map(|i| {
                        // Decode coordinate k.
                        let mut idx = i;
                        let mut coords = vec![0; factors.len()];
                        for j in (0..factors.len()).rev() {
                            let s = factor_sizes[j][a.0];
                            coords[j] = idx % s;
                            idx /= s;
                        }
                        coords[k]
                    })
                    .collect()
            })
            .collect();
        legs.push(PresheafMap::new_unchecked(
            obj.clone(),
            (*p).clone(),
            components,
        ));
    }
    Ok(ProductMany {
        obj,
        legs,
        factor_sizes,
    })
}

/// A covariant finite-set-valued functor on a finite category, used for
/// categories of elements, flatness and points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunctor {
    base: Base,
    sets: Vec<usize>,
    /// Per morphism `f : a → b`, the function `M(a) → M(b)`.
    actions: Vec<Vec<usize>>,
}

impl SetFunctor {
    pub fn new(base: Base, sets: Vec<usize>, actions: Vec<Vec<usize>>) -> Result<Self, TkError> {
        if sets.len() != base.object_count() || actions.len() != base.mor_count() {
            return Err(TkError::shape("set functor tables do not match the base"));
        }
        for f in base.mors() {
            let (a, b) = (base.dom(f), base.cod(f));
            if actions[f.0].len() != sets[a.0] || actions[f.0].iter().any(|&x| x >= sets[b.0]) {
                return Err(TkError::shape(format!(
                    "action of `{}` is not a total function into the target",
                    base.mor_name(f)
                )));
            }
        }
        for a in base.objects() {
            let id = base.identity(a);
            if (0..sets[a.0]).any(|x| actions[id.0][x] != x) {
                return Err(TkError::invalid("set functor", "identity does not act as identity"));
            }
        }
        for g in base.mors() {
            for f in base.mors() {
                if let Some(gf) = base.compose(g, f) {
                    let a = base.dom(f);
                    for x in 0..sets[a.0] {
                        if actions[gf.0][x] != actions[g.0][actions[f.0][x]] {
                            return Err(TkError::invalid(
                                "set functor",
                                format!(
                                    "functoriality fails on {}∘{}",
                                    base.mor_name(g),
                                    base.mor_name(f)
                                ),
                            ));
                        }
                    }
                }
            }
        }
        Ok(SetFunctor { base, sets, actions })
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn size(&self, a: Obj) -> usize {
        self.sets[a.0]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sets
    }

    pub fn apply(&self, f: Mor, x: usize) -> usize {
        self.actions[f.0][x]
    }

    pub fn total_size(&self) -> usize {
        self.sets.iter().sum()
    }
}

/// Natural isomorphism test for covariant set functors, by backtracking
/// over families of bijections.
pub fn set_functors_isomorphic(m: &SetFunctor, n: &SetFunctor) -> bool {
    if !same_base(m.base(), n.base()) || m.sizes() != n.sizes() {
        return false;
    }
    let base = m.base().clone();
    let nobj = base.object_count();
    // components[a] is a bijection M(a) → N(a), built object by object.
    fn extend(
        base: &FinCategory,
        m: &SetFunctor,
        n: &SetFunctor,
        comps: &mut Vec<Vec<usize>>,
        a: usize,
        nobj: usize,
    ) -> bool {
        if a == nobj {
            return true;
        }
        let size = m.size(Obj(a));
        let mut perm: Vec<usize> = (0..size).collect();
        loop {
            comps.push(perm.clone());
            if natural_so_far(base, m, n, comps) && extend(base, m, n, comps, a + 1, nobj) {
                return true;
            }
            comps.pop();
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
    fn natural_so_far(base: &FinCategory, m: &SetFunctor, n: &SetFunctor, comps: &[Vec<usize>]) -> bool {
        let assigned = comps.len();
        base.mors().all(|f| {
            let (a, b) = (base.dom(f), base.cod(f));
            if a.0 >= assigned || b.0 >= assigned {
                return true;
            }
            (0..m.size(a)).all(|x| comps[b.0][m.apply(f, x)] == n.apply(f, comps[a.0][x]))
        })
    }
    let mut comps = Vec::new();
    extend(&base, m, n, &mut comps, 0, nobj)
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;

    fn arrow() -> Base {
        Arc::new(fincat::walking_arrow())
    }

    #[test]
    fn representable_on_walking_arrow() {
        let base = arrow();
        let b = base.object_by_name("b").unwrap();
        let yb = representable(&base, b);
        // y(b)(a) = {u}, y(b)(b) = {id_b}.
        assert_eq!(yb.psh.sizes(), &[1, 1]);
        let a = base.object_by_name("a").unwrap();
        let ya = representable(&base, a);
        assert_eq!(ya.psh.sizes(), &[1, 0]);
    }

    #[test]
    fn constant_presheaf_is_functorial() {
        let base = arrow();
        let p = Presheaf::constant(base, 3);
        assert_eq!(p.total_size(), 6);
        assert!(Presheaf::new(p.base().clone(), p.sizes().to_vec(), (0..p.base().mor_count()).map(|f| p.action(crate::fincat::Mor(f)).to_vec()).collect()).is_ok());
    }

    #[test]
    fn invalid_action_is_rejected() {
        let base = arrow();
        let u = base.mor_by_name("u").unwrap();
        // P(a) = 1, P(b) = 2, but u's action hits index 1 in a singleton.
        let mut actions: Vec<Vec<usize>> = vec![vec![0], vec![0, 1], vec![]];
        actions[u.0] = vec![0, 1];
        assert!(Presheaf::new(base, vec![1, 2], actions).is_err());
    }

    #[test]
    fn naturality_is_enforced() {
        let base = arrow();
        let u = base.mor_by_name("u").unwrap();
        // Singleton at a, two points at b, both collapsing along u.
        let mut actions: Vec<Vec<usize>> = vec![vec![0], vec![0, 1], vec![]];
        actions[u.0] = vec![0, 0];
        let p = Presheaf::new(base.clone(), vec![1, 2], actions).unwrap();
        // Swap at b only: breaks nothing (action is constant), so this is
        // natural; compose with itself to sanity-check the happy path.
        let swap = PresheafMap::new(p.clone(), p.clone(), vec![vec![0], vec![1, 0]]).unwrap();
        assert!(compose_maps(&swap, &swap).is_ok());
        // Separating the collapsed points in a constant target breaks
        // naturality along u.
        let c2 = Presheaf::constant(base.clone(), 2);
        let bad = PresheafMap::new(p, c2, vec![vec![0], vec![0, 1]]);
        assert!(bad.is_err());
    }

    #[test]
    fn product_sizes_multiply() {
        let base = Arc::new(fincat::terminal_category());
        let x = Presheaf::constant(base.clone(), 2);
        let y = Presheaf::constant(base.clone(), 3);
        let p = product(&x, &y).unwrap();
        assert_eq!(p.obj.sizes(), &[6]);
    }

    #[test]
    fn product_projections_recover_coordinates() {
        let base = arrow();
        let x = Presheaf::constant(base.clone(), 2);
        let y = Presheaf::constant(base.clone(), 2);
        let p = product(&x, &y).unwrap();
        for a in base.objects() {
            for i in 0..p.obj.size(a) {
                let (xe, ye) = p.unpair(a, i);
                assert_eq!(p.pr1.apply(a, i), xe);
                assert_eq!(p.pr2.apply(a, i), ye);
                assert_eq!(p.pair_index(a, xe, ye), i);
            }
        }
    }
}
