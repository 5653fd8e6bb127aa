//! Exponentials `Y^X` by the representable-hom formula:
//! `(Y^X)(a) = Nat(y(a) × X, Y)`, with evaluation and transposition.

use super::{
    compose_maps, enumerate_nats, product, representable, Presheaf, PresheafMap, Product,
    Representable,
};
use crate::error::{Guard, TkError};
use std::collections::HashMap;

/// The exponential object together with the meaning of its elements.
#[derive(Clone, Debug)]
pub struct Exponential {
    pub exp: Presheaf,
    x: Presheaf,
    y: Presheaf,
    /// Per object `a`: y(a) with its element tables.
    reps: Vec<Representable>,
    /// Per object `a`: the product y(a) × X.
    products: Vec<Product>,
    /// Per object `a`: element `k` of `exp(a)` is the natural transformation
    /// `y(a) × X → Y` with these components.
    elems: Vec<Vec<Vec<Vec<usize>>>>,
    index: Vec<HashMap<Vec<Vec<usize>>, usize>>,
}

pub fn exponential(x: &Presheaf, y: &Presheaf, guard: &Guard) -> Result<Exponential, TkError> {
    if !super::same_base(x.base(), y.base()) {
        return Err(TkError::BaseMismatch("exponential factors over different bases".into()));
    }
    let base = x.base().clone();
    let mut reps = Vec::with_capacity(base.object_count());
    let mut products = Vec::with_capacity(base.object_count());
    let mut elems = Vec::with_capacity(base.object_count());
    let mut index = Vec::with_capacity(base.object_count());
    for a in base.objects() {
        let ya = representable(&base, a);
        let prod = product(&ya.psh, x)?;
        let nats = enumerate_nats(&prod.obj, y, guard)?;
        let map: HashMap<Vec<Vec<usize>>, usize> = nats
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        reps.push(ya);
        products.push(prod);
        elems.push(nats);
        index.push(map);
    }
    let sets: Vec<usize> = elems.iter().map(|e| e.len()).collect();
    let mut actions = Vec::with_capacity(base.mor_count());
    for f in base.mors() {
        // exp(f) : exp(cod f) → exp(dom f): precompose with y(f) × id_X.
        let (a_new, a_old) = (base.dom(f), base.cod(f));
        let mut act = Vec::with_capacity(sets[a_old.0]);
        for eta in &elems[a_old.0] {
            let mut table: Vec<Vec<usize>> = Vec::with_capacity(base.object_count());
            for b in base.objects() {
                let mut row = Vec::with_capacity(products[a_new.0].obj.size(b));
                for i in 0..products[a_new.0].obj.size(b) {
                    let (gpos, xe) = products[a_new.0].unpair(b, i);
                    let g = reps[a_new.0].elems[b.0][gpos];
                    let fg = base.compose(f, g).expect("composable by typing");
                    let fg_pos = reps[a_old.0].elems[b.0]
                        .iter()
                        .position(|&k| k == fg)
                        .expect("f∘g has codomain cod f");
                    row.push(eta[b.0][products[a_old.0].pair_index(b, fg_pos, xe)]);
                }
                table.push(row);
            }
            act.push(index[a_new.0][&table]);
        }
        actions.push(act);
    }
    let exp = Presheaf::new(base, sets, actions)?;
    Ok(Exponential {
        exp,
        x: x.clone(),
        y: y.clone(),
        reps,
        products,
        elems,
        index,
    })
}

impl Exponential {
    /// Evaluation `Y^X × X → Y` over the given product of `exp` and `X`.
    pub fn eval_map(&self, exp_x: &Product) -> Result<PresheafMap, TkError> {
        if exp_x.pr1.target() != &self.exp || exp_x.pr2.target() != &self.x {
            return Err(TkError::shape("evaluation needs the product exp × X"));
        }
        let base = self.exp.base().clone();
        let components = base
            .objects()
            .map(|a| {
                let id_pos = self.reps[a.0].elems[a.0]
                    .iter()
                    .position(|&k| k == base.identity(a))
                    .expect("identity is an element of y(a)(a)");
                (0..exp_x.obj.size(a))
                    .map(|i| {
                        let (k, xe) = exp_x.unpair(a, i);
                        self.elems[a.0][k][a.0][self.products[a.0].pair_index(a, id_pos, xe)]
                    })
                    .collect()
            })
            .collect();
        Ok(PresheafMap::new_unchecked(
            exp_x.obj.clone(),
            self.y.clone(),
            components,
        ))
    }

    /// Transpose `h : Z × X → Y` to `Z → Y^X` over the given product.
    pub fn transpose(&self, zx: &Product, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        if h.source() != &zx.obj || h.target() != &self.y || zx.pr2.target() != &self.x {
            return Err(TkError::shape("transpose needs a map Z × X → Y"));
        }
        let z = zx.pr1.target().clone();
        let base = z.base().clone();
        let mut components = Vec::with_capacity(base.object_count());
        for a in base.objects() {
            let mut comp = Vec::with_capacity(z.size(a));
            for ze in 0..z.size(a) {
                let mut table: Vec<Vec<usize>> = Vec::with_capacity(base.object_count());
                for b in base.objects() {
                    let mut row = Vec::with_capacity(self.products[a.0].obj.size(b));
                    for i in 0..self.products[a.0].obj.size(b) {
                        let (gpos, xe) = self.products[a.0].unpair(b, i);
                        let g = self.reps[a.0].elems[b.0][gpos];
                        row.push(h.apply(b, zx.pair_index(b, z.apply(g, ze), xe)));
                    }
                    table.push(row);
                }
                comp.push(
                    *self.index[a.0]
                        .get(&table)
                        .expect("transpose lands in the enumerated exponential"),
                );
            }
            components.push(comp);
        }
        Ok(PresheafMap::new_unchecked(z, self.exp.clone(), components))
    }

    /// Inverse of transposition: recover `Z × X → Y` from `k : Z → Y^X`.
    pub fn untranspose(&self, zx: &Product, k: &PresheafMap) -> Result<PresheafMap, TkError> {
        if k.target() != &self.exp || zx.pr1.target() != k.source() || zx.pr2.target() != &self.x {
            return Err(TkError::shape("untranspose needs Z → Y^X and the product Z × X"));
        }
        let exp_x = product(&self.exp, &self.x)?;
        let ev = self.eval_map(&exp_x)?;
        let k_times_id = zx.parallel(&exp_x, k, &PresheafMap::identity(&self.x))?;
        compose_maps(&ev, &k_times_id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;
    use std::sync::Arc;

    #[test]
    fn exponential_on_a_point_counts_functions() {
        let base = Arc::new(fincat::terminal_category());
        let x = Presheaf::constant(base.clone(), 2);
        let y = Presheaf::constant(base.clone(), 3);
        let e = exponential(&x, &y, &Guard::default()).unwrap();
        assert_eq!(e.exp.sizes(), &[9]);
    }

    #[test]
    fn exponential_by_terminal_is_identity() {
        let base = Arc::new(fincat::walking_arrow());
        let y = Presheaf::constant(base.clone(), 3);
        let one = Presheaf::terminal(base);
        let e = exponential(&one, &y, &Guard::default()).unwrap();
        assert!(super::super::are_isomorphic(&e.exp, &y));
    }

    #[test]
    fn transpose_is_a_bijection() {
        let base = Arc::new(fincat::walking_arrow());
        let x = Presheaf::constant(base.clone(), 2);
        let y = Presheaf::constant(base.clone(), 2);
        let z = Presheaf::terminal(base.clone());
        let e = exponential(&x, &y, &Guard::default()).unwrap();
        let zx = product(&z, &x).unwrap();
        let maps = super::super::enumerate_maps(&zx.obj, &y, &Guard::default()).unwrap();
        let mut seen = std::collections::HashSet::new();
        for h in &maps {
            let t = e.transpose(&zx, h).unwrap();
            assert_eq!(&e.untranspose(&zx, &t).unwrap(), h);
            seen.insert(t.components().clone());
        }
        // Injective with matching counts: a bijection onto Hom(Z, Y^X).
        assert_eq!(seen.len(), maps.len());
        let homs = super::super::enumerate_maps(&z, &e.exp, &Guard::default()).unwrap();
        assert_eq!(homs.len(), maps.len());
    }
}
