//! Mono/epi/iso classification and epi–mono image factorization.
//!
//! At this finite scale a map is mono iff every component is injective and
//! epi iff every component is surjective; the test suite checks these
//! pointwise criteria against the categorical cancellation definitions.

use super::{Presheaf, PresheafMap};
use crate::error::TkError;
use crate::fincat::Obj;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapClass {
    pub mono: bool,
    pub epi: bool,
    pub iso: bool,
}

/// Classify a map by its components. `iso` is `mono && epi`, which is exact
/// for set-valued presheaves.
pub fn map_class(h: &PresheafMap) -> MapClass {
    let base = h.base().clone();
    let mut mono = true;
    let mut epi = true;
    for a in base.objects() {
        let comp = h.component(a);
        let mut seen = vec![false; h.target().size(a)];
        for &y in comp {
            if seen[y] {
                mono = false;
            }
            seen[y] = true;
        }
        if seen.iter().any(|&s| !s) {
            epi = false;
        }
    }
    MapClass {
        mono,
        epi,
        iso: mono && epi,
    }
}

/// First witness that `h` is not mono: an object and two elements its
/// component identifies.
pub fn mono_failure(h: &PresheafMap) -> Option<(Obj, usize, usize)> {
    let base = h.base().clone();
    for a in base.objects() {
        let comp = h.component(a);
        for i in 0..comp.len() {
            for j in (i + 1)..comp.len() {
                if comp[i] == comp[j] {
                    return Some((a, i, j));
                }
            }
        }
    }
    None
}

/// An epi–mono factorization `h = m ∘ e` through the pointwise image.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub image: Presheaf,
    pub e: PresheafMap,
    pub m: PresheafMap,
}

/// Factor `h : P → Q` as a surjection onto its image followed by the image
/// inclusion. Image elements are the hit target elements in ascending order.
pub fn factor_epi_mono(h: &PresheafMap) -> Result<Factorization, TkError> {
    let base = h.base().clone();
    let p = h.source();
    let q = h.target();
    // Hit elements per object, ascending.
    let mut hit: Vec<Vec<usize>> = Vec::with_capacity(base.object_count());
    for a in base.objects() {
        let mut flags = vec![false; q.size(a)];
        for &y in h.component(a) {
            flags[y] = true;
        }
        hit.push(
            flags
                .iter()
                .enumerate()
                .filter_map(|(y, &b)| b.then_some(y))
                .collect(),
        );
    }
    let pos = |a: Obj, y: usize| hit[a.0].binary_search(&y).expect("element is in the image");
    let sets: Vec<usize> = hit.iter().map(|v| v.len()).collect();
    let mut actions = Vec::with_capacity(base.mor_count());
    for f in base.mors() {
        let (a, b) = (base.dom(f), base.cod(f));
        // The image of a natural map is closed under the actions.
        let act = hit[b.0].iter().map(|&y| pos(a, q.apply(f, y))).collect();
        actions.push(act);
    }
    let image = Presheaf::new(base.clone(), sets, actions)?;
    let e_components: Vec<Vec<usize>> = base
        .objects()
        .map(|a| h.component(a).iter().map(|&y| pos(a, y)).collect())
        .collect();
    let m_components: Vec<Vec<usize>> = hit.clone();
    let e = PresheafMap::new_unchecked(p.clone(), image.clone(), e_components);
    let m = PresheafMap::new_unchecked(image.clone(), q.clone(), m_components);
    Ok(Factorization { image, e, m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Guard;
    use crate::fincat;
    use crate::psh::{compose_maps, enumerate_maps, Presheaf};
    use std::sync::Arc;

    #[test]
    fn identity_is_iso() {
        let base = Arc::new(fincat::walking_arrow());
        let p = Presheaf::constant(base, 2);
        let id = PresheafMap::identity(&p);
        let c = map_class(&id);
        assert!(c.mono && c.epi && c.iso);
    }

    #[test]
    fn initial_to_terminal_is_mono_not_epi() {
        let base = Arc::new(fincat::walking_arrow());
        let terminal = Presheaf::terminal(base.clone());
        let h = PresheafMap::from_initial(&terminal);
        let c = map_class(&h);
        assert!(c.mono && !c.epi && !c.iso);
    }

    #[test]
    fn constant_collapse_is_epi_not_mono() {
        let base = Arc::new(fincat::terminal_category());
        let two = Presheaf::constant(base.clone(), 2);
        let one = Presheaf::terminal(base);
        let h = PresheafMap::new(two, one, vec![vec![0, 0]]).unwrap();
        let c = map_class(&h);
        assert!(!c.mono && c.epi);
        assert_eq!(mono_failure(&h), Some((Obj(0), 0, 1)));
    }

    #[test]
    fn factorization_of_an_iso_has_identity_mono_part() {
        let base = Arc::new(fincat::terminal_category());
        let two = Presheaf::constant(base, 2);
        let swap = PresheafMap::new(two.clone(), two.clone(), vec![vec![1, 0]]).unwrap();
        let fac = factor_epi_mono(&swap).unwrap();
        assert_eq!(fac.e, swap);
        assert_eq!(fac.m, PresheafMap::identity(&two));
    }

    #[test]
    fn constant_endomap_has_singleton_image() {
        let base = Arc::new(fincat::terminal_category());
        let two = Presheaf::constant(base, 2);
        let h = PresheafMap::new(two.clone(), two.clone(), vec![vec![1, 1]]).unwrap();
        let fac = factor_epi_mono(&h).unwrap();
        assert_eq!(fac.image.sizes(), &[1]);
        assert!(map_class(&fac.e).epi);
        assert!(map_class(&fac.m).mono);
        assert_eq!(compose_maps(&fac.m, &fac.e).unwrap(), h);
    }

    #[test]
    fn pointwise_mono_agrees_with_cancellation_on_small_corpus() {
        let base = Arc::new(fincat::walking_arrow());
        let guard = Guard::default();
        // The pool contains both representables, so cancellation against the
        // pool is equivalent to pointwise injectivity.
        let pool = [
            Presheaf::terminal(base.clone()),
            Presheaf::constant(base.clone(), 2),
            crate::psh::representable(&base, base.object_by_name("a").unwrap()).psh,
            crate::psh::representable(&base, base.object_by_name("b").unwrap()).psh,
        ];
        for src in &pool {
            for dst in &pool {
                for h in enumerate_maps(src, dst, &guard).unwrap() {
                    let pointwise = map_class(&h).mono;
                    let cancellable = pool.iter().all(|z| {
                        let maps = enumerate_maps(z, src, &guard).unwrap();
                        maps.iter().enumerate().all(|(i, u)| {
                            maps.iter().skip(i + 1).all(|v| {
                                compose_maps(&h, u).unwrap() != compose_maps(&h, v).unwrap()
                            })
                        })
                    });
                    assert_eq!(pointwise, cancellable);
                }
            }
        }
    }
}
