//! Grothendieck topologies, Lawvere–Tierney operators, the sheaf condition,
//! and sheafification by applying the plus construction twice.
//!
//! A topology is stored as, per object, the set of covering sieves (as
//! indices into the canonical sieve list of [`crate::classifier::OmegaTable`]).
//! The three axioms — maximality, stability and transitivity — are checked
//! exhaustively.

use crate::classifier::{OmegaTable, Sieve};
use crate::error::{checked_pow, Guard, TkError};
use crate::fincat::{Base, Obj};
use crate::psh::{
    compose_maps, product, same_base, Presheaf, PresheafMap, Product,
};
use crate::util::UnionFind;
use std::collections::{BTreeSet, HashMap};

/// Covering data on a finite category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothendieckTopology {
    /// Per object, indices of the covering sieves in canonical order.
    pub covers: Vec<BTreeSet<usize>>,
}

impl GrothendieckTopology {
    pub fn is_covering(&self, a: Obj, sieve_idx: usize) -> bool {
        self.covers[a.0].contains(&sieve_idx)
    }
}

#[derive(Clone, Debug)]
pub enum TopologyViolation {
    /// The maximal sieve on the object is missing.
    Maximality { a: Obj },
    /// A covering sieve with a non-covering pullback.
    Stability { a: Obj, sieve: usize, along: crate::fincat::Mor },
    /// A sieve whose pullback along every member of a cover is covering,
    /// yet which is not itself covering.
    Transitivity { a: Obj, cover: usize, sieve: usize },
}

/// Check the three axioms exhaustively.
pub fn validate_topology(om: &OmegaTable, top: &GrothendieckTopology) -> Vec<TopologyViolation> {
    let base = om.base().clone();
    let mut violations = Vec::new();
    if top.covers.len() != base.object_count() {
        violations.push(TopologyViolation::Maximality { a: Obj(0) });
        return violations;
    }
    for a in base.objects() {
        if !top.is_covering(a, om.maximal_index(a)) {
            violations.push(TopologyViolation::Maximality { a });
        }
    }
    for a in base.objects() {
        for &s in &top.covers[a.0] {
            let sieve = om.sieve(a, s);
            for f in base.mors_into(a) {
                let pulled = sieve.pullback(&base, f);
                let idx = om.sieve_index(&pulled).expect("pullbacks are closed");
                if !top.is_covering(base.dom(f), idx) {
                    violations.push(TopologyViolation::Stability { a, sieve: s, along: f });
                }
            }
        }
    }
    for a in base.objects() {
        for &s in &top.covers[a.0] {
            let cover = om.sieve(a, s);
            for (r_idx, r) in om.sieves[a.0].iter().enumerate() {
                if top.is_covering(a, r_idx) {
                    continue;
                }
                let all_pullbacks_cover = cover.members.iter().all(|&f| {
                    let pulled = r.pullback(&base, f);
                    let idx = om.sieve_index(&pulled).expect("closed");
                    top.is_covering(base.dom(f), idx)
                });
                if all_pullbacks_cover {
                    violations.push(TopologyViolation::Transitivity {
                        a,
                        cover: s,
                        sieve: r_idx,
                    });
                }
            }
        }
    }
    violations
}

/// A category with a validated topology, plus the Ω tables everything here
/// computes against.
#[derive(Clone, Debug)]
pub struct Site {
    pub omega: OmegaTable,
    pub topology: GrothendieckTopology,
}

impl Site {
    pub fn new(omega: OmegaTable, topology: GrothendieckTopology) -> Result<Site, TkError> {
        let violations = validate_topology(&omega, &topology);
        if let Some(v) = violations.first() {
            return Err(TkError::invalid("topology", format!("{v:?}")));
        }
        Ok(Site { omega, topology })
    }

    pub fn base(&self) -> &Base {
        self.omega.base()
    }

    /// Only maximal sieves cover.
    pub fn trivial(omega: OmegaTable) -> Site {
        let covers = omega
            .base()
            .objects()
            .map(|a| [omega.maximal_index(a)].into_iter().collect())
            .collect();
        Site {
            topology: GrothendieckTopology { covers },
            omega,
        }
    }

    /// Every sieve covers.
    pub fn largest(omega: OmegaTable) -> Site {
        let covers = omega
            .base()
            .objects()
            .map(|a| (0..omega.sieves[a.0].len()).collect())
            .collect();
        Site {
            topology: GrothendieckTopology { covers },
            omega,
        }
    }
}

/// Exhaustive, duplicate-free enumeration of the topologies on a base, in
/// lexicographic order of their cover tables.
pub fn enumerate_topologies(om: &OmegaTable, guard: &Guard) -> Result<Vec<GrothendieckTopology>, TkError> {
    let base = om.base().clone();
    let candidates = om
        .sieves
        .iter()
        .map(|l| checked_pow(2, (l.len().saturating_sub(1)) as u128))
        .fold(1u128, |a, b| a.saturating_mul(b));
    guard.check("topology enumeration", candidates)?;
    let nobj = base.object_count();
    let mut out = Vec::new();
    let mut current: Vec<BTreeSet<usize>> = Vec::new();

    fn recurse(
        om: &OmegaTable,
        nobj: usize,
        current: &mut Vec<BTreeSet<usize>>,
        out: &mut Vec<GrothendieckTopology>,
    ) {
        if current.len() == nobj {
            let top = GrothendieckTopology {
                covers: current.clone(),
            };
            if validate_topology(om, &top).is_empty() {
                out.push(top);
            }
            return;
        }
        let a = current.len();
        let max = om.maximal_index(Obj(a));
        let others: Vec<usize> = (0..om.sieves[a].len()).filter(|&i| i != max).collect();
        for mask in 0u64..(1u64 << others.len()) {
            let mut set: BTreeSet<usize> = [max].into_iter().collect();
            for (bit, &idx) in others.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    set.insert(idx);
                }
            }
            current.push(set);
            recurse(om, nobj, current, out);
            current.pop();
        }
    }

    recurse(om, nobj, &mut current, &mut out);
    Ok(out)
}

/// The closure operator `j : Ω → Ω` of a topology:
/// `j_a(S) = { f : b → a | f*(S) covering at b }`.
pub fn topology_to_j(om: &OmegaTable, top: &GrothendieckTopology) -> Result<PresheafMap, TkError> {
    let base = om.base().clone();
    let mut components = Vec::with_capacity(base.object_count());
    for a in base.objects() {
        let mut comp = Vec::with_capacity(om.sieves[a.0].len());
        for s in &om.sieves[a.0] {
            let members: BTreeSet<crate::fincat::Mor> = base
                .mors_into(a)
                .into_iter()
                .filter(|&f| {
                    let pulled = s.pullback(&base, f);
                    top.is_covering(base.dom(f), om.sieve_index(&pulled).expect("closed"))
                })
                .collect();
            let closed = Sieve { apex: a, members };
            comp.push(
                om.sieve_index(&closed)
                    .ok_or_else(|| TkError::invalid("topology", "closure is not a sieve"))?,
            );
        }
        components.push(comp);
    }
    PresheafMap::new(om.omega.clone(), om.omega.clone(), components)
}

/// Covering sieves of an operator `j`: those with `j_a(S)` maximal.
pub fn j_to_topology(om: &OmegaTable, j: &PresheafMap) -> GrothendieckTopology {
    let base = om.base().clone();
    let covers = base
        .objects()
        .map(|a| {
            let max = om.maximal_index(a);
            (0..om.sieves[a.0].len())
                .filter(|&s| j.apply(a, s) == max)
                .collect()
        })
        .collect();
    GrothendieckTopology { covers }
}

/// The meet map `Ω × Ω → Ω` (sieve intersection) over a given product.
pub fn omega_meet(om: &OmegaTable, prod: &Product) -> Result<PresheafMap, TkError> {
    let base = om.base().clone();
    let components = base
        .objects()
        .map(|a| {
            (0..prod.obj.size(a))
                .map(|i| {
                    let (s, t) = prod.unpair(a, i);
                    let meet = om.sieve(a, s).intersect(om.sieve(a, t));
                    om.sieve_index(&meet).expect("intersections are closed")
                })
                .collect()
        })
        .collect();
    PresheafMap::new(prod.obj.clone(), om.omega.clone(), components)
}

/// Check the three closure-operator equations for `j : Ω → Ω`:
/// truth preservation, idempotence, meet preservation.
pub fn lt_operator_failure(om: &OmegaTable, j: &PresheafMap) -> Result<Option<String>, TkError> {
    if j.source() != &om.omega || j.target() != &om.omega {
        return Err(TkError::shape("an operator must be a map Ω → Ω"));
    }
    if &compose_maps(j, &om.truth)? != &om.truth {
        return Ok(Some("j∘t ≠ t".into()));
    }
    if &compose_maps(j, j)? != j {
        return Ok(Some("j∘j ≠ j".into()));
    }
    let prod = product(&om.omega, &om.omega)?;
    let meet = omega_meet(om, &prod)?;
    let jxj = prod.parallel(&prod, j, j)?;
    let lhs = compose_maps(j, &meet)?;
    let rhs = compose_maps(&meet, &jxj)?;
    if lhs != rhs {
        return Ok(Some("j does not preserve meets".into()));
    }
    Ok(None)
}

/// Brute-force enumeration of all Lawvere–Tierney operators, independent of
/// the topology enumeration.
pub fn enumerate_lt_operators(om: &OmegaTable, guard: &Guard) -> Result<Vec<PresheafMap>, TkError> {
    let mut out = Vec::new();
    for j in crate::psh::enumerate_maps(&om.omega, &om.omega, guard)? {
        if lt_operator_failure(om, &j)?.is_none() {
            out.push(j);
        }
    }
    Ok(out)
}

/// A matching family for a sieve: one element of `P(dom f)` per member `f`,
/// compatible under precomposition. Families are stored as vectors indexed
/// by the sieve's sorted member list.
fn matching_families(p: &Presheaf, sieve: &Sieve, base: &Base) -> Vec<Vec<usize>> {
    let members: Vec<crate::fincat::Mor> = sieve.members.iter().cloned().collect();
    let mut out = Vec::new();
    let mut partial: Vec<usize> = Vec::new();

    fn compatible(
        p: &Presheaf,
        base: &Base,
        members: &[crate::fincat::Mor],
        partial: &[usize],
    ) -> bool {
        let k = partial.len();
        for i in 0..k {
            let f = members[i];
            for g in base.mors_into(base.dom(f)) {
                let fg = base.compose(f, g).expect("composable");
                if let Some(j) = members.iter().position(|&m| m == fg) {
                    if j < k && partial[j] != p.apply(g, partial[i]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn recurse(
        p: &Presheaf,
        base: &Base,
        members: &[crate::fincat::Mor],
        partial: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if partial.len() == members.len() {
            out.push(partial.clone());
            return;
        }
        let f = members[partial.len()];
        for x in 0..p.size(base.dom(f)) {
            partial.push(x);
            if compatible(p, base, members, partial) {
                recurse(p, base, members, partial, out);
            }
            partial.pop();
        }
    }

    recurse(p, base, &members, &mut partial, &mut out);
    out
}

/// Restriction of `x ∈ P(a)` to a family over a sieve on `a`.
fn restrict_to_family(p: &Presheaf, sieve: &Sieve, x: usize) -> Vec<usize> {
    sieve.members.iter().map(|&f| p.apply(f, x)).collect()
}

/// Verdict of the sheaf condition with the first failing cover.
#[derive(Clone, Debug)]
pub struct SheafVerdict {
    pub is_sheaf: bool,
    pub failure: Option<SheafFailure>,
}

#[derive(Clone, Debug)]
pub struct SheafFailure {
    pub at: Obj,
    pub cover: usize,
    /// True when two sections restrict to the same family; false when some
    /// family has no amalgamation.
    pub non_injective: bool,
}

/// A presheaf is a sheaf iff restriction to matching families is a
/// bijection for every covering sieve.
pub fn is_sheaf(p: &Presheaf, site: &Site) -> SheafVerdict {
    let base = site.base().clone();
    for a in base.objects() {
        for &s in &site.topology.covers[a.0] {
            let sieve = site.omega.sieve(a, s);
            let families = matching_families(p, sieve, &base);
            let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
            for x in 0..p.size(a) {
                let fam = restrict_to_family(p, sieve, x);
                if seen.insert(fam, x).is_some() {
                    return SheafVerdict {
                        is_sheaf: false,
                        failure: Some(SheafFailure {
                            at: a,
                            cover: s,
                            non_injective: true,
                        }),
                    };
                }
            }
            if seen.len() != families.len() {
                return SheafVerdict {
                    is_sheaf: false,
                    failure: Some(SheafFailure {
                        at: a,
                        cover: s,
                        non_injective: false,
                    }),
                };
            }
        }
    }
    SheafVerdict {
        is_sheaf: true,
        failure: None,
    }
}

/// One application of the plus construction, with the unit and enough
/// bookkeeping to act on classes.
#[derive(Clone, Debug)]
pub struct Plus {
    pub psh: Presheaf,
    pub unit: PresheafMap,
    /// Per object, per class, the canonical representative `(sieve, family)`.
    reps: Vec<Vec<(usize, Vec<usize>)>>,
    class_of: Vec<HashMap<(usize, Vec<usize>), usize>>,
}

/// `P⁺(a)` = matching families over covers of `a`, modulo agreement on a
/// common refinement cover. Classes are joined along restrictions to
/// covering subsieves, which generates the full equivalence.
pub fn plus(p: &Presheaf, site: &Site, guard: &Guard) -> Result<Plus, TkError> {
    if !same_base(p.base(), site.base()) {
        return Err(TkError::BaseMismatch("plus construction over a different base".into()));
    }
    let base = site.base().clone();
    let mut reps_per_obj = Vec::with_capacity(base.object_count());
    let mut class_of_per_obj = Vec::with_capacity(base.object_count());
    for a in base.objects() {
        // Enumerate all (covering sieve, matching family) pairs canonically.
        let mut pairs: Vec<(usize, Vec<usize>)> = Vec::new();
        for &s in &site.topology.covers[a.0] {
            let sieve = site.omega.sieve(a, s);
            let candidates: u128 = sieve
                .members
                .iter()
                .map(|&f| p.size(base.dom(f)) as u128)
                .fold(1u128, |acc, n| acc.saturating_mul(n));
            guard.check("matching family enumeration", candidates)?;
            let fams = matching_families(p, sieve, &base);
            guard.check(
                "plus construction families",
                (pairs.len() + fams.len()) as u128,
            )?;
            for fam in fams {
                pairs.push((s, fam));
            }
        }
        let index: HashMap<(usize, Vec<usize>), usize> = pairs
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, pr)| (pr, i))
            .collect();
        let mut uf = UnionFind::new(pairs.len());
        for (i, (s, fam)) in pairs.iter().enumerate() {
            let sieve = site.omega.sieve(a, *s);
            for &r in &site.topology.covers[a.0] {
                if r == *s {
                    continue;
                }
                let rsieve = site.omega.sieve(a, r);
                if !rsieve.members.is_subset(&sieve.members) {
                    continue;
                }
                // Restrict the family to the subsieve.
                let member_list: Vec<crate::fincat::Mor> = sieve.members.iter().cloned().collect();
                let restricted: Vec<usize> = rsieve
                    .members
                    .iter()
                    .map(|f| fam[member_list.iter().position(|m| m == f).unwrap()])
                    .collect();
                let j = index[&(r, restricted)];
                uf.union(i, j);
            }
        }
        let classes = uf.classes(pairs.len());
        let mut class_of = HashMap::new();
        let reps: Vec<(usize, Vec<usize>)> = classes
            .iter()
            .enumerate()
            .map(|(ci, members)| {
                for &m in members {
                    class_of.insert(pairs[m].clone(), ci);
                }
                pairs[members[0]].clone()
            })
            .collect();
        reps_per_obj.push(reps);
        class_of_per_obj.push(class_of);
    }
    let sets: Vec<usize> = reps_per_obj.iter().map(|r| r.len()).collect();
    let mut actions = Vec::with_capacity(base.mor_count());
    for f in base.mors() {
        let (a, b) = (base.dom(f), base.cod(f));
        let act = reps_per_obj[b.0]
            .iter()
            .map(|(s, fam)| {
                let sieve = site.omega.sieve(b, *s);
                let pulled = sieve.pullback(&base, f);
                let pulled_idx = site.omega.sieve_index(&pulled).expect("closed");
                let member_list: Vec<crate::fincat::Mor> = sieve.members.iter().cloned().collect();
                let new_fam: Vec<usize> = pulled
                    .members
                    .iter()
                    .map(|&g| {
                        let fg = base.compose(f, g).expect("composable");
                        fam[member_list.iter().position(|&m| m == fg).unwrap()]
                    })
                    .collect();
                class_of_per_obj[a.0][&(pulled_idx, new_fam)]
            })
            .collect();
        actions.push(act);
    }
    let psh = Presheaf::new(base.clone(), sets, actions)?;
    let unit_components = base
        .objects()
        .map(|a| {
            let max = site.omega.maximal_index(a);
            let sieve = site.omega.sieve(a, max);
            (0..p.size(a))
                .map(|x| class_of_per_obj[a.0][&(max, restrict_to_family(p, sieve, x))])
                .collect()
        })
        .collect();
    let unit = PresheafMap::new(p.clone(), psh.clone(), unit_components)?;
    Ok(Plus {
        psh,
        unit,
        reps: reps_per_obj,
        class_of: class_of_per_obj,
    })
}

impl Plus {
    /// Functorial action on maps: push each family through `h`.
    pub fn map_through(
        &self,
        h: &PresheafMap,
        target_plus: &Plus,
        site: &Site,
    ) -> Result<PresheafMap, TkError> {
        if h.source() != self.unit.source() || h.target() != target_plus.unit.source() {
            return Err(TkError::shape("plus functor applied to a mismatched map"));
        }
        let base = site.base().clone();
        let components = base
            .objects()
            .map(|a| {
                self.reps[a.0]
                    .iter()
                    .map(|(s, fam)| {
                        let sieve = site.omega.sieve(a, *s);
                        let mapped: Vec<usize> = sieve
                            .members
                            .iter()
                            .zip(fam)
                            .map(|(&f, &x)| h.apply(base.dom(f), x))
                            .collect();
                        target_plus.class_of[a.0][&(*s, mapped)]
                    })
                    .collect()
            })
            .collect();
        Ok(PresheafMap::new_unchecked(
            self.psh.clone(),
            target_plus.psh.clone(),
            components,
        ))
    }
}

/// The associated sheaf: the plus construction applied twice.
#[derive(Clone, Debug)]
pub struct Sheafification {
    pub sheaf: Presheaf,
    /// Unit `P → P‡`.
    pub unit: PresheafMap,
    pub first: Plus,
    pub second: Plus,
}

pub fn sheafify(p: &Presheaf, site: &Site, guard: &Guard) -> Result<Sheafification, TkError> {
    let first = plus(p, site, guard)?;
    let second = plus(&first.psh, site, guard)?;
    let unit = compose_maps(&second.unit, &first.unit)?;
    Ok(Sheafification {
        sheaf: second.psh.clone(),
        unit,
        first,
        second,
    })
}

/// Functorial action of sheafification on a map.
pub fn sheafify_map(
    h: &PresheafMap,
    src: &Sheafification,
    dst: &Sheafification,
    site: &Site,
) -> Result<PresheafMap, TkError> {
    let once = src.first.map_through(h, &dst.first, site)?;
    src.second.map_through(&once, &dst.second, site)
}

/// Factor a map `h : P → Q` with `Q` a sheaf through the sheafification
/// unit. The factorization exists and is unique; uniqueness is re-checked
/// exhaustively in the test suites.
pub fn factor_through_sheafification(
    sh: &Sheafification,
    h: &PresheafMap,
    site: &Site,
) -> Result<PresheafMap, TkError> {
    let q = h.target().clone();
    if !is_sheaf(&q, site).is_sheaf {
        return Err(TkError::invalid("sheafification", "factoring target is not a sheaf"));
    }
    let step1 = factor_through_plus(&sh.first, h, site)?;
    factor_through_plus(&sh.second, &step1, site)
}

fn factor_through_plus(pl: &Plus, h: &PresheafMap, site: &Site) -> Result<PresheafMap, TkError> {
    let base = site.base().clone();
    let q = h.target().clone();
    let mut components = Vec::with_capacity(base.object_count());
    for a in base.objects() {
        let mut comp = Vec::with_capacity(pl.reps[a.0].len());
        for (s, fam) in &pl.reps[a.0] {
            let sieve = site.omega.sieve(a, *s);
            let image: Vec<usize> = sieve
                .members
                .iter()
                .zip(fam)
                .map(|(&f, &x)| h.apply(base.dom(f), x))
                .collect();
            // Q is a sheaf: exactly one section restricts to this family.
            let mut found = None;
            for y in 0..q.size(a) {
                if restrict_to_family(&q, sieve, y) == image {
                    found = Some(y);
                    break;
                }
            }
            match found {
                Some(y) => comp.push(y),
                None => {
                    return Err(TkError::invalid(
                        "sheafification",
                        "no amalgamation in the target sheaf",
                    ))
                }
            }
        }
        components.push(comp);
    }
    PresheafMap::new(pl.psh.clone(), q, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::omega;
    use crate::fincat;
    use std::sync::Arc;

    fn omega_of(base: &Base) -> OmegaTable {
        omega(base)
    }

    #[test]
    fn two_topologies_on_the_terminal_category() {
        let one = Arc::new(fincat::terminal_category());
        let om = omega_of(&one);
        let tops = enumerate_topologies(&om, &Guard::default()).unwrap();
        assert_eq!(tops.len(), 2);
    }

    #[test]
    fn two_topologies_on_z2() {
        let z2 = Arc::new(fincat::cyclic_group(2));
        let om = omega_of(&z2);
        let tops = enumerate_topologies(&om, &Guard::default()).unwrap();
        assert_eq!(tops.len(), 2);
    }

    #[test]
    fn topology_and_lt_counts_agree_on_fixtures() {
        for base in [
            Arc::new(fincat::terminal_category()),
            Arc::new(fincat::walking_arrow()),
            Arc::new(fincat::cyclic_group(2)),
            Arc::new(fincat::chain(3)),
        ] {
            let om = omega_of(&base);
            let tops = enumerate_topologies(&om, &Guard::default()).unwrap();
            let lts = enumerate_lt_operators(&om, &Guard::default()).unwrap();
            assert_eq!(tops.len(), lts.len(), "on {base}");
            // The two translations are mutually inverse.
            for top in &tops {
                let j = topology_to_j(&om, top).unwrap();
                assert!(lt_operator_failure(&om, &j).unwrap().is_none());
                assert_eq!(&j_to_topology(&om, &j), top);
            }
            for j in &lts {
                let top = j_to_topology(&om, j);
                assert!(validate_topology(&om, &top).is_empty());
                assert_eq!(&topology_to_j(&om, &top).unwrap(), j);
            }
        }
    }

    #[test]
    fn trivial_topology_has_identity_operator() {
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega_of(&arrow);
        let site = Site::trivial(om);
        let j = topology_to_j(&site.omega, &site.topology).unwrap();
        assert_eq!(j, PresheafMap::identity(&site.omega.omega));
    }

    #[test]
    fn largest_topology_has_constant_truth_operator() {
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega_of(&arrow);
        let site = Site::largest(om);
        let j = topology_to_j(&site.omega, &site.topology).unwrap();
        for a in site.base().objects() {
            let max = site.omega.maximal_index(a);
            assert!(j.component(a).iter().all(|&s| s == max));
        }
    }

    #[test]
    fn everything_is_a_sheaf_for_the_trivial_topology() {
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega_of(&arrow);
        let site = Site::trivial(om);
        for p in [
            Presheaf::terminal(arrow.clone()),
            Presheaf::constant(arrow.clone(), 3),
            crate::psh::representable(&arrow, arrow.object_by_name("b").unwrap()).psh,
        ] {
            assert!(is_sheaf(&p, &site).is_sheaf);
        }
    }

    #[test]
    fn terminal_presheaf_is_a_sheaf_for_any_topology() {
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega_of(&arrow);
        for top in enumerate_topologies(&om, &Guard::default()).unwrap() {
            let site = Site::new(omega_of(&arrow), top).unwrap();
            let one = Presheaf::terminal(arrow.clone());
            assert!(is_sheaf(&one, &site).is_sheaf);
        }
    }

    #[test]
    fn sheafifying_a_sheaf_changes_nothing() {
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega_of(&arrow);
        let site = Site::trivial(om);
        let p = Presheaf::constant(arrow.clone(), 2);
        let sh = sheafify(&p, &site, &Guard::default()).unwrap();
        assert!(crate::psh::map_class(&sh.unit).iso);
    }

    #[test]
    fn sheafification_for_the_largest_topology_is_terminal() {
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega_of(&arrow);
        let site = Site::largest(om);
        let p = Presheaf::constant(arrow.clone(), 3);
        let sh = sheafify(&p, &site, &Guard::default()).unwrap();
        assert!(crate::psh::are_isomorphic(&sh.sheaf, &Presheaf::terminal(arrow.clone())));
    }

    #[test]
    fn sheafification_output_is_a_sheaf_and_idempotent() {
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega_of(&arrow);
        for top in enumerate_topologies(&om, &Guard::default()).unwrap() {
            let site = Site::new(omega_of(&arrow), top).unwrap();
            for p in [
                Presheaf::constant(arrow.clone(), 2),
                crate::psh::representable(&arrow, arrow.object_by_name("a").unwrap()).psh,
            ] {
                let sh = sheafify(&p, &site, &Guard::default()).unwrap();
                assert!(is_sheaf(&sh.sheaf, &site).is_sheaf);
                let again = sheafify(&sh.sheaf, &site, &Guard::default()).unwrap();
                assert!(crate::psh::map_class(&again.unit).iso);
            }
        }
    }

    #[test]
    fn universal_property_of_sheafification() {
        // For every sheaf Q and map P → Q, exactly one factoring P‡ → Q.
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega_of(&arrow);
        let tops = enumerate_topologies(&om, &Guard::default()).unwrap();
        let guard = Guard::default();
        for top in tops {
            let site = Site::new(omega_of(&arrow), top).unwrap();
            let p = Presheaf::constant(arrow.clone(), 2);
            let sh = sheafify(&p, &site, &guard).unwrap();
            let sheaf_pool: Vec<Presheaf> = [
                Presheaf::terminal(arrow.clone()),
                Presheaf::constant(arrow.clone(), 2),
                crate::psh::representable(&arrow, arrow.object_by_name("b").unwrap()).psh,
            ]
            .into_iter()
            .filter(|q| is_sheaf(q, &site).is_sheaf)
            .collect();
            for q in &sheaf_pool {
                for h in crate::psh::enumerate_maps(&p, q, &guard).unwrap() {
                    let lift = factor_through_sheafification(&sh, &h, &site).unwrap();
                    assert_eq!(compose_maps(&lift, &sh.unit).unwrap(), h);
                    let all = crate::psh::enumerate_maps(&sh.sheaf, q, &guard).unwrap();
                    let count = all
                        .iter()
                        .filter(|cand| compose_maps(cand, &sh.unit).unwrap() == h)
                        .count();
                    assert_eq!(count, 1);
                }
            }
        }
    }
}
