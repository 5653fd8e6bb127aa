//! Sheaves of sections, étale spaces of presheaves via germs, and the
//! local-homeomorphism test.
//!
//! Finite spaces have minimal open neighbourhoods, so the germ of a section
//! at a point is exactly its restriction to that minimal open; stalks are
//! literal sets rather than colimits.

use super::{Bundle, FinSpace, SpaceSite};
use crate::error::TkError;
use crate::fincat::{Mor, Obj};
use crate::psh::Presheaf;
use std::collections::BTreeSet;

/// The sheaf of sections together with the sections themselves: element `k`
/// of `F(U)` is `sections[U][k]`, a tuple over the sorted points of `U`.
#[derive(Clone, Debug)]
pub struct SectionsSheaf {
    pub psh: Presheaf,
    pub sections: Vec<Vec<Vec<usize>>>,
}

fn subspace_opens(x: &FinSpace, u: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let mut out: Vec<BTreeSet<usize>> = x
        .opens()
        .iter()
        .map(|w| w.intersection(u).cloned().collect())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Continuous sections of the projection over `u`, as tuples over the
/// sorted points of `u`, in lexicographic order.
fn sections_over(b: &Bundle, u: &BTreeSet<usize>) -> Vec<Vec<usize>> {
    let pts: Vec<usize> = u.iter().cloned().collect();
    let candidates: Vec<Vec<usize>> = pts
        .iter()
        .map(|&x| {
            (0..b.total.point_count())
                .filter(|&y| b.proj[y] == x)
                .collect()
        })
        .collect();
    let sub_opens = subspace_opens(&b.base, u);
    let mut out = Vec::new();
    let radix: Vec<usize> = candidates.iter().map(|c| c.len()).collect();
    crate::util::for_each_tuple(&radix, |choice| {
        let tuple: Vec<usize> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| candidates[i][c])
            .collect();
        // Continuity of the section as a map U → total.
        let continuous = b.total.opens().iter().all(|v| {
            let preimage: BTreeSet<usize> = pts
                .iter()
                .enumerate()
                .filter(|(i, _)| v.contains(&tuple[*i]))
                .map(|(_, &x)| x)
                .collect();
            sub_opens.contains(&preimage)
        });
        if continuous {
            out.push(tuple);
        }
    });
    out
}

/// `F(U)` = continuous sections of the projection over `U`; restriction is
/// tuple restriction. The result is a sheaf for the canonical topology.
pub fn sections_sheaf(b: &Bundle, site: &SpaceSite) -> Result<SectionsSheaf, TkError> {
    if b.base != site.space {
        return Err(TkError::BaseMismatch("bundle base differs from the site's space".into()));
    }
    let x = &site.space;
    let sections: Vec<Vec<Vec<usize>>> = x.opens().iter().map(|u| sections_over(b, u)).collect();
    let sets: Vec<usize> = sections.iter().map(|s| s.len()).collect();
    let cat = &site.cat;
    let mut actions = Vec::with_capacity(cat.mor_count());
    for f in cat.mors() {
        // f : V ⊆ U; restriction F(U) → F(V).
        let (v_obj, u_obj) = (cat.dom(f), cat.cod(f));
        let vpts: Vec<usize> = x.opens()[v_obj.0].iter().cloned().collect();
        let upts: Vec<usize> = x.opens()[u_obj.0].iter().cloned().collect();
        let positions: Vec<usize> = vpts
            .iter()
            .map(|p| upts.iter().position(|q| q == p).expect("V ⊆ U"))
            .collect();
        let act = sections[u_obj.0]
            .iter()
            .map(|s| {
                let restricted: Vec<usize> = positions.iter().map(|&i| s[i]).collect();
                sections[v_obj.0]
                    .iter()
                    .position(|t| *t == restricted)
                    .expect("restrictions of sections are sections")
            })
            .collect();
        actions.push(act);
    }
    let psh = Presheaf::new(cat.clone(), sets, actions)?;
    Ok(SectionsSheaf { psh, sections })
}

/// The étale space of a presheaf on `Open(X)`: total points are germs
/// `(x, e ∈ F(U_x))` with `U_x` the minimal open around `x`; the topology
/// is generated by the images of sections.
#[derive(Clone, Debug)]
pub struct EtaleSpace {
    pub bundle: Bundle,
    /// Total point `i` is the germ `germs[i] = (base point, stalk element)`.
    pub germs: Vec<(usize, usize)>,
}

pub fn etale_space(f: &Presheaf, site: &SpaceSite) -> Result<EtaleSpace, TkError> {
    if f.base() != &site.cat {
        return Err(TkError::BaseMismatch("presheaf does not live on the site's open poset".into()));
    }
    let x = &site.space;
    let cat = &site.cat;
    let min_open: Vec<usize> = (0..x.point_count())
        .map(|p| x.open_index(&x.minimal_open(p)).expect("minimal opens are open"))
        .collect();
    let mut germs = Vec::new();
    for p in 0..x.point_count() {
        for e in 0..f.size(Obj(min_open[p])) {
            germs.push((p, e));
        }
    }
    let germ_index = |p: usize, e: usize| -> usize {
        germs.iter().position(|&g| g == (p, e)).expect("germ exists")
    };
    // Restriction morphism V ⊆ U in the open poset.
    let le_mor = |v: usize, u: usize| -> Mor {
        if v == u {
            cat.identity(Obj(u))
        } else {
            cat.hom(Obj(v), Obj(u))[0]
        }
    };
    // Basic opens: for U open and s ∈ F(U), the set of germs of s over U.
    let mut basics: Vec<BTreeSet<usize>> = Vec::new();
    for (u_idx, u) in x.opens().iter().enumerate() {
        for s in 0..f.size(Obj(u_idx)) {
            let set: BTreeSet<usize> = u
                .iter()
                .map(|&p| {
                    let m = le_mor(min_open[p], u_idx);
                    germ_index(p, f.apply(m, s))
                })
                .collect();
            basics.push(set);
        }
    }
    let names: Vec<String> = germs
        .iter()
        .map(|&(p, e)| format!("{}#{}", x.point_name(p), e))
        .collect();
    let total = FinSpace::generate(names, basics)?;
    let proj: Vec<usize> = (0..total.point_count())
        .map(|i| {
            // `generate` preserves point order.
            germs[i].0
        })
        .collect();
    let bundle = Bundle::new(total, x.clone(), proj)?;
    Ok(EtaleSpace { bundle, germs })
}

/// Local homeomorphism test: every total point needs an open neighbourhood
/// mapped homeomorphically onto an open of the base.
pub fn is_etale(b: &Bundle) -> (bool, Option<usize>) {
    'points: for y in 0..b.total.point_count() {
        'candidates: for n in b.total.opens() {
            if !n.contains(&y) {
                continue;
            }
            let image: BTreeSet<usize> = n.iter().map(|&p| b.proj[p]).collect();
            if !b.base.is_open(&image) {
                continue;
            }
            // Injective on N.
            if image.len() != n.len() {
                continue;
            }
            // Open as a map onto its image: images of opens restricted to N
            // stay open.
            for v in b.total.opens() {
                let vn: BTreeSet<usize> = v.intersection(n).cloned().collect();
                let img: BTreeSet<usize> = vn.iter().map(|&p| b.proj[p]).collect();
                if !b.base.is_open(&img) {
                    continue 'candidates;
                }
            }
            continue 'points;
        }
        return (false, Some(y));
    }
    (true, None)
}

/// All bundle maps `b1 → b2` over the shared base: continuous total maps
/// commuting with the projections.
pub fn enumerate_bundle_maps(b1: &Bundle, b2: &Bundle) -> Vec<Vec<usize>> {
    if b1.base != b2.base {
        return Vec::new();
    }
    let n1 = b1.total.point_count();
    let candidates: Vec<Vec<usize>> = (0..n1)
        .map(|y| {
            (0..b2.total.point_count())
                .filter(|&z| b2.proj[z] == b1.proj[y])
                .collect()
        })
        .collect();
    let radix: Vec<usize> = candidates.iter().map(|c| c.len()).collect();
    let mut out = Vec::new();
    crate::util::for_each_tuple(&radix, |choice| {
        let map: Vec<usize> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| candidates[i][c])
            .collect();
        let continuous = b2.total.opens().iter().all(|v| {
            let pre: BTreeSet<usize> = (0..n1).filter(|&y| v.contains(&map[y])).collect();
            b1.total.is_open(&pre)
        });
        if continuous {
            out.push(map);
        }
    });
    out
}

/// Homeomorphism of bundles over the same base: a bundle map with a
/// two-sided continuous inverse.
pub fn bundles_isomorphic(b1: &Bundle, b2: &Bundle) -> bool {
    if b1.base != b2.base || b1.total.point_count() != b2.total.point_count() {
        return false;
    }
    let forward = enumerate_bundle_maps(b1, b2);
    let backward = enumerate_bundle_maps(b2, b1);
    for f in &forward {
        for g in &backward {
            let fg_is_id = (0..b2.total.point_count()).all(|z| f[g[z]] == z);
            let gf_is_id = (0..b1.total.point_count()).all(|y| g[f[y]] == y);
            if fg_is_id && gf_is_id {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::canonical_topology;
    use crate::sites::is_sheaf;

    #[test]
    fn identity_bundle_has_the_terminal_sections_sheaf() {
        let x = FinSpace::sierpinski();
        let site = canonical_topology(&x);
        let b = Bundle::identity(&x);
        let s = sections_sheaf(&b, &site).unwrap();
        assert!(s.psh.sizes().iter().all(|&n| n == 1));
        assert!(is_sheaf(&s.psh, &site.site).is_sheaf);
    }

    #[test]
    fn empty_total_space_gives_empty_sections_except_over_the_empty_open() {
        let x = FinSpace::sierpinski();
        let site = canonical_topology(&x);
        let empty = FinSpace::new(vec![], vec![]).unwrap();
        let b = Bundle::new(empty, x.clone(), vec![]).unwrap();
        let s = sections_sheaf(&b, &site).unwrap();
        for (u_idx, u) in x.opens().iter().enumerate() {
            let expected = if u.is_empty() { 1 } else { 0 };
            assert_eq!(s.psh.size(Obj(u_idx)), expected);
        }
        assert!(is_sheaf(&s.psh, &site.site).is_sheaf);
    }

    #[test]
    fn two_point_discrete_fibre_over_a_point_has_two_global_sections() {
        let x = FinSpace::singleton();
        let site = canonical_topology(&x);
        let fibre = FinSpace::discrete(2);
        let b = Bundle::new(fibre, x.clone(), vec![0, 0]).unwrap();
        let s = sections_sheaf(&b, &site).unwrap();
        let full = x.open_index(&[0usize].into_iter().collect()).unwrap();
        assert_eq!(s.psh.size(Obj(full)), 2);
    }

    #[test]
    fn identity_bundle_is_etale_and_indiscrete_fibre_is_not() {
        let x = FinSpace::sierpinski();
        assert!(is_etale(&Bundle::identity(&x)).0);
        let pt = FinSpace::singleton();
        let indiscrete = FinSpace::indiscrete(2);
        let b = Bundle::new(indiscrete, pt, vec![0, 0]).unwrap();
        let (ok, witness) = is_etale(&b);
        assert!(!ok);
        assert!(witness.is_some());
    }

    #[test]
    fn etale_space_of_the_terminal_presheaf_is_the_identity_bundle() {
        let x = FinSpace::sierpinski();
        let site = canonical_topology(&x);
        let one = Presheaf::terminal(site.cat.clone());
        let e = etale_space(&one, &site).unwrap();
        assert!(bundles_isomorphic(&e.bundle, &Bundle::identity(&x)));
        assert!(is_etale(&e.bundle).0);
    }

    #[test]
    fn etale_space_of_a_representable_is_the_open_inclusion() {
        // The representable at {1} on the Sierpiński space: a one-point
        // total space over the open point.
        let x = FinSpace::sierpinski();
        let site = canonical_topology(&x);
        let open_pt: BTreeSet<usize> = [x.point_by_name("1").unwrap()].into_iter().collect();
        let u_obj = Obj(x.open_index(&open_pt).unwrap());
        let y_u = crate::psh::representable(&site.cat, u_obj).psh;
        let e = etale_space(&y_u, &site).unwrap();
        assert_eq!(e.bundle.total.point_count(), 1);
        assert_eq!(e.bundle.proj, vec![x.point_by_name("1").unwrap()]);
        assert!(is_etale(&e.bundle).0);
    }

    #[test]
    fn sections_after_etale_recovers_the_sheaf() {
        let x = FinSpace::sierpinski();
        let site = canonical_topology(&x);
        let one = Presheaf::terminal(site.cat.clone());
        let e = etale_space(&one, &site).unwrap();
        let s = sections_sheaf(&e.bundle, &site).unwrap();
        assert!(crate::psh::are_isomorphic(&s.psh, &one));
    }
}
