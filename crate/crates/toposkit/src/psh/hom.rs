//! Exhaustive enumeration of natural transformations and isomorphisms.
//!
//! Enumeration backtracks object by object in index order, pruning every
//! naturality square whose two components are already assigned, and emits
//! results in lexicographic order of the component tables. The size guard
//! is checked against the full candidate product up front.

use super::{Presheaf, PresheafMap};
use crate::error::{checked_pow, Guard, TkError};
use crate::fincat::Obj;

/// Number of raw candidate component families for maps `A → B`.
pub fn count_nat_candidates(a: &Presheaf, b: &Presheaf) -> u128 {
    let mut total: u128 = 1;
    for o in a.base().objects() {
        total = total.saturating_mul(checked_pow(b.size(o) as u128, a.size(o) as u128));
    }
    total
}

/// All natural transformations `A → B` as raw component tables.
pub fn enumerate_nats(
    a: &Presheaf,
    b: &Presheaf,
    guard: &Guard,
) -> Result<Vec<Vec<Vec<usize>>>, TkError> {
    if !super::same_base(a.base(), b.base()) {
        return Err(TkError::BaseMismatch("hom enumeration over different bases".into()));
    }
    guard.check("natural transformation enumeration", count_nat_candidates(a, b))?;
    let base = a.base().clone();
    let nobj = base.object_count();
    let mut out = Vec::new();
    let mut comps: Vec<Vec<usize>> = Vec::new();

    // Check naturality squares whose endpoints both have assigned components.
    fn consistent(a: &Presheaf, b: &Presheaf, comps: &[Vec<usize>]) -> bool {
        let base = a.base();
        let assigned = comps.len();
        base.mors().all(|f| {
            let (d, c) = (base.dom(f), base.cod(f));
            if d.0 >= assigned || c.0 >= assigned {
                return true;
            }
            (0..a.size(c)).all(|y| comps[d.0][a.apply(f, y)] == b.apply(f, comps[c.0][y]))
        })
    }

    fn recurse(
        a: &Presheaf,
        b: &Presheaf,
        nobj: usize,
        comps: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if comps.len() == nobj {
            out.push(comps.clone());
            return;
        }
        let o = Obj(comps.len());
        let (dom_n, cod_n) = (a.size(o), b.size(o));
        if dom_n > 0 && cod_n == 0 {
            return;
        }
        let mut func = vec![0usize; dom_n];
        loop {
            comps.push(func.clone());
            if consistent(a, b, comps) {
                recurse(a, b, nobj, comps, out);
            }
            comps.pop();
            // Advance to the next function in lexicographic order.
            let mut i = dom_n;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                func[i] += 1;
                if func[i] < cod_n {
                    break;
                }
                func[i] = 0;
            }
        }
    }

    recurse(a, b, nobj, &mut comps, &mut out);
    Ok(out)
}

/// All natural transformations `A → B` as validated maps.
pub fn enumerate_maps(a: &Presheaf, b: &Presheaf, guard: &Guard) -> Result<Vec<PresheafMap>, TkError> {
    Ok(enumerate_nats(a, b, guard)?
        .into_iter()
        .map(|components| PresheafMap::new_unchecked(a.clone(), b.clone(), components))
        .collect())
}

/// First isomorphism `A → B` in canonical order, if any. Backtracks over
/// bijective components only.
pub fn first_iso(a: &Presheaf, b: &Presheaf) -> Option<PresheafMap> {
    if !super::same_base(a.base(), b.base()) || a.sizes() != b.sizes() {
        return None;
    }
    let base = a.base().clone();
    let nobj = base.object_count();

    fn consistent(a: &Presheaf, b: &Presheaf, comps: &[Vec<usize>]) -> bool {
        let base = a.base();
        let assigned = comps.len();
        base.mors().all(|f| {
            let (d, c) = (base.dom(f), base.cod(f));
            if d.0 >= assigned || c.0 >= assigned {
                return true;
            }
            (0..a.size(c)).all(|y| comps[d.0][a.apply(f, y)] == b.apply(f, comps[c.0][y]))
        })
    }

    fn recurse(a: &Presheaf, b: &Presheaf, nobj: usize, comps: &mut Vec<Vec<usize>>) -> bool {
        if comps.len() == nobj {
            return true;
        }
        let o = Obj(comps.len());
        let n = a.size(o);
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            comps.push(perm.clone());
            if consistent(a, b, comps) && recurse(a, b, nobj, comps) {
                return true;
            }
            comps.pop();
            if !super::next_permutation(&mut perm) {
                return false;
            }
        }
    }

    let mut comps = Vec::new();
    if recurse(a, b, nobj, &mut comps) {
        Some(PresheafMap::new_unchecked(a.clone(), b.clone(), comps))
    } else {
        None
    }
}

pub fn are_isomorphic(a: &Presheaf, b: &Presheaf) -> bool {
    first_iso(a, b).is_some()
}

/// All global elements `1 → X`, in canonical order.
pub fn global_elements(x: &Presheaf) -> Vec<PresheafMap> {
    let one = Presheaf::terminal(x.base().clone());
    // Candidate count is the product of the set sizes; tiny by construction,
    // but a malicious input could still blow up, so go through the guard
    // with its default bound.
    enumerate_maps(&one, x, &Guard::default()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;
    use std::sync::Arc;

    #[test]
    fn hom_counts_on_a_point_are_function_counts() {
        let base = Arc::new(fincat::terminal_category());
        let x = Presheaf::constant(base.clone(), 2);
        let y = Presheaf::constant(base.clone(), 3);
        assert_eq!(enumerate_maps(&x, &y, &Guard::default()).unwrap().len(), 9);
    }

    #[test]
    fn equivariant_maps_from_the_regular_z2_action() {
        let base = Arc::new(fincat::cyclic_group(2));
        let s = base.object_by_name("s").unwrap();
        let reg = super::super::representable(&base, s).psh;
        // Maps G_reg → G_reg are right translations: exactly 2.
        assert_eq!(enumerate_maps(&reg, &reg, &Guard::default()).unwrap().len(), 2);
    }

    #[test]
    fn guard_refuses_oversized_enumerations() {
        let base = Arc::new(fincat::terminal_category());
        let x = Presheaf::constant(base.clone(), 10);
        let y = Presheaf::constant(base.clone(), 10);
        let tiny = Guard::new(100);
        assert!(matches!(
            enumerate_maps(&x, &y, &tiny),
            Err(TkError::Resource { .. })
        ));
    }

    #[test]
    fn global_elements_of_regular_action_are_fixed_points() {
        let base = Arc::new(fincat::cyclic_group(2));
        let s = base.object_by_name("s").unwrap();
        let reg = super::super::representable(&base, s).psh;
        assert_eq!(global_elements(&reg).len(), 0);
        let triv = Presheaf::constant(base, 2);
        assert_eq!(global_elements(&triv).len(), 2);
    }

    #[test]
    fn isomorphism_search_distinguishes_twisted_actions() {
        let base = Arc::new(fincat::cyclic_group(2));
        let s = base.object_by_name("s").unwrap();
        let reg = super::super::representable(&base, s).psh;
        let triv = Presheaf::constant(base, 2);
        assert!(are_isomorphic(&reg, &reg));
        assert!(!are_isomorphic(&reg, &triv));
    }
}
