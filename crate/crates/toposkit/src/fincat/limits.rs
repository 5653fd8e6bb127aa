//! Finite limits *inside* a finite category, found by exhaustive search.
//! Used to decide whether a base category has finite limits and to probe
//! functors for limit preservation.

use super::{FinCategory, Mor, Obj};

/// Objects `t` such that every object has exactly one morphism into `t`.
pub fn terminal_objects(cat: &FinCategory) -> Vec<Obj> {
    cat.objects()
        .filter(|&t| cat.objects().all(|x| cat.hom(x, t).len() == 1))
        .collect()
}

/// Search for a product of `a` and `b`: an object `p` with projections
/// through which every span factors uniquely. Returns the first witness in
/// canonical order.
pub fn find_product(cat: &FinCategory, a: Obj, b: Obj) -> Option<(Obj, Mor, Mor)> {
    for p in cat.objects() {
        for &pi1 in &cat.hom(p, a) {
            for &pi2 in &cat.hom(p, b) {
                if is_product(cat, a, b, p, pi1, pi2) {
                    return Some((p, pi1, pi2));
                }
            }
        }
    }
    None
}

fn is_product(cat: &FinCategory, a: Obj, b: Obj, p: Obj, pi1: Mor, pi2: Mor) -> bool {
    cat.objects().all(|z| {
        cat.hom(z, a).iter().all(|&f| {
            cat.hom(z, b).iter().all(|&g| {
                let mediators = cat
                    .hom(z, p)
                    .iter()
                    .filter(|&&m| cat.compose(pi1, m) == Some(f) && cat.compose(pi2, m) == Some(g))
                    .count();
                mediators == 1
            })
        })
    })
}

/// Search for an equalizer of the parallel pair `u, v : a → b`.
pub fn find_equalizer(cat: &FinCategory, u: Mor, v: Mor) -> Option<(Obj, Mor)> {
    let a = cat.dom(u);
    if cat.dom(v) != a || cat.cod(v) != cat.cod(u) {
        return None;
    }
    for e in cat.objects() {
        for &i in &cat.hom(e, a) {
            if cat.compose(u, i) != cat.compose(v, i) {
                continue;
            }
            let universal = cat.objects().all(|z| {
                cat.hom(z, a).iter().all(|&f| {
                    if cat.compose(u, f) != cat.compose(v, f) {
                        return true;
                    }
                    let mediators = cat
                        .hom(z, e)
                        .iter()
                        .filter(|&&m| cat.compose(i, m) == Some(f))
                        .count();
                    mediators == 1
                })
            });
            if universal {
                return Some((e, i));
            }
        }
    }
    None
}

/// A finite category has all finite limits iff it has a terminal object,
/// binary products, and equalizers of all parallel pairs.
pub fn has_finite_limits(cat: &FinCategory) -> bool {
    if terminal_objects(cat).is_empty() {
        return false;
    }
    for a in cat.objects() {
        for b in cat.objects() {
            if find_product(cat, a, b).is_none() {
                return false;
            }
        }
    }
    for u in cat.mors() {
        for v in cat.mors() {
            if cat.dom(u) == cat.dom(v) && cat.cod(u) == cat.cod(v) {
                if find_equalizer(cat, u, v).is_none() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;

    #[test]
    fn posets_with_top_and_meets_have_finite_limits() {
        assert!(has_finite_limits(&fincat::terminal_category()));
        assert!(has_finite_limits(&fincat::walking_arrow()));
        assert!(has_finite_limits(&fincat::chain(3)));
        assert!(has_finite_limits(&fincat::square_poset()));
    }

    #[test]
    fn groups_and_discrete_categories_lack_finite_limits() {
        assert!(!has_finite_limits(&fincat::cyclic_group(2)));
        assert!(!has_finite_limits(&fincat::discrete(&["i", "j"])));
    }

    #[test]
    fn square_poset_meet_is_the_bottom() {
        let c = fincat::square_poset();
        let b = c.object_by_name("b").unwrap();
        let cc = c.object_by_name("c").unwrap();
        let (p, _, _) = find_product(&c, b, cc).unwrap();
        assert_eq!(c.obj_name(p), "a");
    }

    #[test]
    fn walking_arrow_terminal_is_b() {
        let c = fincat::walking_arrow();
        let ts = terminal_objects(&c);
        assert_eq!(ts.len(), 1);
        assert_eq!(c.obj_name(ts[0]), "b");
    }
}
