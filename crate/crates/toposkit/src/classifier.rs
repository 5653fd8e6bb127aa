//! Sieves, the subobject classifier Ω, characteristic maps and subobject
//! lattices.
//!
//! `Ω(a)` is the set of sieves on `a` in canonical order (by size, then by
//! member list); the action along `f : a → b` is sieve pullback, and the
//! truth map picks the maximal sieve everywhere. Subobjects are stored as
//! canonical pointwise subsets closed under the presheaf actions.

use crate::error::{checked_pow, Guard, TkError};
use crate::fincat::{Base, Mor, Obj};
use crate::psh::{
    enumerate_maps, mono_failure, same_base, Presheaf, PresheafMap,
};
use std::collections::{BTreeSet, HashMap};

/// A sieve on an object: a set of morphisms with that codomain, closed
/// under precomposition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Sieve {
    pub apex: Obj,
    pub members: BTreeSet<Mor>,
}

impl Sieve {
    pub fn empty(apex: Obj) -> Sieve {
        Sieve {
            apex,
            members: BTreeSet::new(),
        }
    }

    pub fn maximal(base: &Base, apex: Obj) -> Sieve {
        Sieve {
            apex,
            members: base.mors_into(apex).into_iter().collect(),
        }
    }

    pub fn contains(&self, f: Mor) -> bool {
        self.members.contains(&f)
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Closure check; returns a witness pair `(f, g)` with `f ∈ S`,
    /// `f∘g ∉ S` on failure.
    pub fn closure_failure(&self, base: &Base) -> Option<(Mor, Mor)> {
        for &f in &self.members {
            for g in base.mors_into(base.dom(f)) {
                let fg = base.compose(f, g).expect("composable by typing");
                if !self.members.contains(&fg) {
                    return Some((f, g));
                }
            }
        }
        None
    }

    pub fn is_closed(&self, base: &Base) -> bool {
        self.closure_failure(base).is_none()
    }

    /// Pullback `f*(S) = { g | f∘g ∈ S }` along `f : b → apex`, a sieve on `b`.
    pub fn pullback(&self, base: &Base, f: Mor) -> Sieve {
        debug_assert_eq!(base.cod(f), self.apex);
        let b = base.dom(f);
        let members = base
            .mors_into(b)
            .into_iter()
            .filter(|&g| self.members.contains(&base.compose(f, g).expect("composable")))
            .collect();
        Sieve { apex: b, members }
    }

    pub fn intersect(&self, other: &Sieve) -> Sieve {
        debug_assert_eq!(self.apex, other.apex);
        Sieve {
            apex: self.apex,
            members: self.members.intersection(&other.members).cloned().collect(),
        }
    }

    /// Canonical sort key: size first, then the member list.
    fn key(&self) -> (usize, Vec<Mor>) {
        (self.members.len(), self.members.iter().cloned().collect())
    }

    pub fn render(&self, base: &Base) -> String {
        let names: Vec<&str> = self.members.iter().map(|&m| base.mor_name(m)).collect();
        format!("{{{}}}", names.join(" "))
    }
}

/// Exhaustive, duplicate-free, canonically ordered enumeration of the
/// sieves on `a`, by closure-filtered subset enumeration.
pub fn sieves_on(base: &Base, a: Obj) -> Vec<Sieve> {
    let incoming = base.mors_into(a);
    let n = incoming.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let members: BTreeSet<Mor> = incoming
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &m)| m)
            .collect();
        let s = Sieve { apex: a, members };
        if s.is_closed(base) {
            out.push(s);
        }
    }
    out.sort_by_key(|s| s.key());
    out
}

/// Ω with its sieve tables: canonical sieve lists per object, pullback
/// tables, the presheaf itself, and the truth map.
#[derive(Clone, Debug)]
pub struct OmegaTable {
    base: Base,
    pub sieves: Vec<Vec<Sieve>>,
    index: Vec<HashMap<BTreeSet<Mor>, usize>>,
    pub omega: Presheaf,
    pub truth: PresheafMap,
    pub terminal: Presheaf,
}

/// Build Ω over a valid base category.
pub fn omega(base: &Base) -> OmegaTable {
    let sieves: Vec<Vec<Sieve>> = base.objects().map(|a| sieves_on(base, a)).collect();
    let index: Vec<HashMap<BTreeSet<Mor>, usize>> = sieves
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .map(|(i, s)| (s.members.clone(), i))
                .collect()
        })
        .collect();
    let sets: Vec<usize> = sieves.iter().map(|l| l.len()).collect();
    let mut actions = Vec::with_capacity(base.mor_count());
    for f in base.mors() {
        let (a, b) = (base.dom(f), base.cod(f));
        let act = sieves[b.0]
            .iter()
            .map(|s| index[a.0][&s.pullback(base, f).members])
            .collect();
        actions.push(act);
    }
    let omega = Presheaf::new(base.clone(), sets, actions).expect("sieve pullback is functorial");
    let terminal = Presheaf::terminal(base.clone());
    let truth_components = base
        .objects()
        .map(|a| vec![index[a.0][&Sieve::maximal(base, a).members]])
        .collect();
    let truth = PresheafMap::new(terminal.clone(), omega.clone(), truth_components)
        .expect("the maximal sieve family is natural");
    OmegaTable {
        base: base.clone(),
        sieves,
        index,
        omega,
        truth,
        terminal,
    }
}

impl OmegaTable {
    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn sieve_index(&self, s: &Sieve) -> Option<usize> {
        self.index[s.apex.0].get(&s.members).copied()
    }

    pub fn maximal_index(&self, a: Obj) -> usize {
        self.index[a.0][&Sieve::maximal(&self.base, a).members]
    }

    pub fn empty_index(&self, a: Obj) -> usize {
        self.index[a.0][&BTreeSet::new()]
    }

    pub fn sieve(&self, a: Obj, i: usize) -> &Sieve {
        &self.sieves[a.0][i]
    }
}

/// A subobject as a canonical pointwise subset closed under the actions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subpresheaf {
    pub elems: Vec<BTreeSet<usize>>,
}

impl Subpresheaf {
    pub fn top(x: &Presheaf) -> Subpresheaf {
        Subpresheaf {
            elems: x.sizes().iter().map(|&n| (0..n).collect()).collect(),
        }
    }

    pub fn bottom(x: &Presheaf) -> Subpresheaf {
        Subpresheaf {
            elems: x.sizes().iter().map(|_| BTreeSet::new()).collect(),
        }
    }

    /// Closure under the ambient actions; witness `(f, y)` has `y` in the
    /// subset at `cod f` but its image outside the subset at `dom f`.
    pub fn closure_failure(&self, x: &Presheaf) -> Option<(Mor, usize)> {
        let base = x.base();
        for f in base.mors() {
            let (a, b) = (base.dom(f), base.cod(f));
            for &y in &self.elems[b.0] {
                if !self.elems[a.0].contains(&x.apply(f, y)) {
                    return Some((f, y));
                }
            }
        }
        None
    }

    pub fn is_action_closed(&self, x: &Presheaf) -> bool {
        self.closure_failure(x).is_none()
    }

    pub fn leq(&self, other: &Subpresheaf) -> bool {
        self.elems
            .iter()
            .zip(&other.elems)
            .all(|(s, t)| s.is_subset(t))
    }

    pub fn total_size(&self) -> usize {
        self.elems.iter().map(|s| s.len()).sum()
    }

    /// The subobject as a presheaf with ascending renumbering, plus its
    /// inclusion.
    pub fn to_presheaf(&self, x: &Presheaf) -> Result<(Presheaf, PresheafMap), TkError> {
        let base = x.base().clone();
        let lists: Vec<Vec<usize>> = self.elems.iter().map(|s| s.iter().cloned().collect()).collect();
        let sets: Vec<usize> = lists.iter().map(|l| l.len()).collect();
        let pos = |a: Obj, y: usize| -> Result<usize, TkError> {
            lists[a.0]
                .binary_search(&y)
                .map_err(|_| TkError::invalid("subobject", "subset is not action-closed"))
        };
        let mut actions = Vec::with_capacity(base.mor_count());
        for f in base.mors() {
            let (a, b) = (base.dom(f), base.cod(f));
            let mut act = Vec::with_capacity(sets[b.0]);
            for &y in &lists[b.0] {
                act.push(pos(a, x.apply(f, y))?);
            }
            actions.push(act);
        }
        let sub = Presheaf::new(base.clone(), sets, actions)?;
        let incl = PresheafMap::new_unchecked(sub.clone(), x.clone(), lists);
        Ok((sub, incl))
    }

    /// Canonical subset underlying a mono `m : A ↣ X` (its pointwise image).
    pub fn from_mono(m: &PresheafMap) -> Result<Subpresheaf, TkError> {
        if let Some((a, x, y)) = mono_failure(m) {
            return Err(TkError::NotMono {
                at: m.base().obj_name(a).to_string(),
                x,
                y,
            });
        }
        Ok(Subpresheaf {
            elems: m
                .components()
                .iter()
                .map(|comp| comp.iter().cloned().collect())
                .collect(),
        })
    }

    /// Pullback (preimage) along `h : X' → X` of a subobject of `X`.
    pub fn pullback_along(&self, h: &PresheafMap) -> Subpresheaf {
        let base = h.base().clone();
        Subpresheaf {
            elems: base
                .objects()
                .map(|a| {
                    (0..h.source().size(a))
                        .filter(|&x| self.elems[a.0].contains(&h.apply(a, x)))
                        .collect()
                })
                .collect(),
        }
    }

    fn key(&self) -> (usize, Vec<Vec<usize>>) {
        (
            self.total_size(),
            self.elems.iter().map(|s| s.iter().cloned().collect()).collect(),
        )
    }
}

/// The full subobject lattice of a presheaf, canonically ordered.
#[derive(Clone, Debug)]
pub struct SubobjectLattice {
    pub carrier: Presheaf,
    pub elems: Vec<Subpresheaf>,
    pub leq: Vec<Vec<bool>>,
}

/// Enumerate all action-closed pointwise subsets of `x`.
pub fn subobjects(x: &Presheaf, guard: &Guard) -> Result<SubobjectLattice, TkError> {
    let base = x.base().clone();
    let candidates: u128 = x
        .sizes()
        .iter()
        .map(|&n| checked_pow(2, n as u128))
        .fold(1u128, |acc, c| acc.saturating_mul(c));
    guard.check("subobject enumeration", candidates)?;

    // Backtrack over objects choosing subsets, pruning closure violations
    // between already-chosen components.
    let nobj = base.object_count();
    let mut chosen: Vec<BTreeSet<usize>> = Vec::new();
    let mut out: Vec<Subpresheaf> = Vec::new();

    fn consistent(x: &Presheaf, chosen: &[BTreeSet<usize>]) -> bool {
        let base = x.base();
        let k = chosen.len();
        base.mors().all(|f| {
            let (a, b) = (base.dom(f), base.cod(f));
            if a.0 >= k || b.0 >= k {
                return true;
            }
            chosen[b.0].iter().all(|&y| chosen[a.0].contains(&x.apply(f, y)))
        })
    }

    fn recurse(
        x: &Presheaf,
        nobj: usize,
        chosen: &mut Vec<BTreeSet<usize>>,
        out: &mut Vec<Subpresheaf>,
    ) {
        if chosen.len() == nobj {
            out.push(Subpresheaf {
                elems: chosen.clone(),
            });
            return;
        }
        let n = x.size(Obj(chosen.len()));
        for mask in 0u64..(1u64 << n) {
            let subset: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            chosen.push(subset);
            if consistent(x, chosen) {
                recurse(x, nobj, chosen, out);
            }
            chosen.pop();
        }
    }

    recurse(x, nobj, &mut chosen, &mut out);
    out.sort_by_key(|s| s.key());
    let leq = out
        .iter()
        .map(|s| out.iter().map(|t| s.leq(t)).collect())
        .collect();
    Ok(SubobjectLattice {
        carrier: x.clone(),
        elems: out,
        leq,
    })
}

/// Characteristic map of a subobject: `χ_a(x) = { f : b → a | x·f ∈ S(b) }`.
/// The classified subset equals `χ⁻¹(truth)` by construction; this is
/// asserted on every call.
pub fn classify_subobject(
    sub: &Subpresheaf,
    x: &Presheaf,
    om: &OmegaTable,
) -> Result<PresheafMap, TkError> {
    if !same_base(x.base(), om.base()) {
        return Err(TkError::BaseMismatch("subobject and Ω over different bases".into()));
    }
    if let Some((f, y)) = sub.closure_failure(x) {
        return Err(TkError::invalid(
            "subobject",
            format!(
                "not action-closed: element {} at `{}` escapes along `{}`",
                y,
                x.base().obj_name(x.base().cod(f)),
                x.base().mor_name(f)
            ),
        ));
    }
    let base = x.base().clone();
    let mut components = Vec::with_capacity(base.object_count());
    for a in base.objects() {
        let mut comp = Vec::with_capacity(x.size(a));
        for xe in 0..x.size(a) {
            let members: BTreeSet<Mor> = base
                .mors_into(a)
                .into_iter()
                .filter(|&f| sub.elems[base.dom(f).0].contains(&x.apply(f, xe)))
                .collect();
            let sieve = Sieve { apex: a, members };
            comp.push(
                om.sieve_index(&sieve)
                    .expect("the classifying sieve is closed"),
            );
        }
        components.push(comp);
    }
    let chi = PresheafMap::new(x.clone(), om.omega.clone(), components)?;
    debug_assert_eq!(&truth_preimage(&chi, om), sub);
    Ok(chi)
}

/// Characteristic map of a mono `m : A ↣ X`; rejects non-monos with a
/// counterexample pair.
pub fn characteristic(m: &PresheafMap, om: &OmegaTable) -> Result<PresheafMap, TkError> {
    let sub = Subpresheaf::from_mono(m)?;
    classify_subobject(&sub, m.target(), om)
}

/// The subset classified by a map into Ω: `{ x | χ(x) = maximal }`.
pub fn truth_preimage(chi: &PresheafMap, om: &OmegaTable) -> Subpresheaf {
    let base = chi.base().clone();
    Subpresheaf {
        elems: base
            .objects()
            .map(|a| {
                let max = om.maximal_index(a);
                (0..chi.source().size(a))
                    .filter(|&x| chi.apply(a, x) == max)
                    .collect()
            })
            .collect(),
    }
}

/// One line of a classifier certificate.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub label: String,
    pub ok: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct ClassifierCertificate {
    pub ok: bool,
    pub lines: Vec<CheckLine>,
}

impl ClassifierCertificate {
    fn push(&mut self, label: String, ok: bool, witness: Option<String>) {
        self.ok &= ok;
        self.lines.push(CheckLine { label, ok, witness });
    }
}

/// Verify the classifier over a corpus of presheaves:
/// (i) every subobject of every corpus object has exactly one classifying
/// map; (ii) `Sub(X) ≅ Hom(X, Ω)` via truth pullback; (iii) the domain of
/// the truth map is terminal; and the truth map is mono.
pub fn verify_classifier(
    om: &OmegaTable,
    corpus: &[Presheaf],
    guard: &Guard,
) -> Result<ClassifierCertificate, TkError> {
    let mut cert = ClassifierCertificate {
        ok: true,
        lines: Vec::new(),
    };

    // (iii) The domain of truth is terminal: singleton everywhere, and every
    // corpus object admits exactly one map into it.
    let t_dom = om.truth.source();
    let singleton = t_dom.sizes().iter().all(|&n| n == 1);
    cert.push("truth domain has singleton values".into(), singleton, None);
    for (i, x) in corpus.iter().enumerate() {
        let count = enumerate_maps(x, t_dom, guard)?.len();
        cert.push(
            format!("corpus[{i}] has a unique map into the truth domain"),
            count == 1,
            (count != 1).then(|| format!("{count} maps found")),
        );
    }

    // Truth is mono (unique map out of the terminal object case).
    let truth_mono = mono_failure(&om.truth).is_none();
    cert.push("truth map is mono".into(), truth_mono, None);

    // (i) + (ii): one Hom(X, Ω) enumeration per corpus object covers
    // existence, uniqueness, and the bijection with Sub(X).
    for (i, x) in corpus.iter().enumerate() {
        let lattice = subobjects(x, guard)?;
        let homs = enumerate_maps(x, &om.omega, guard)?;
        let mut hits: HashMap<Subpresheaf, usize> = HashMap::new();
        for chi in &homs {
            *hits.entry(truth_preimage(chi, om)).or_insert(0) += 1;
        }
        let mut all_unique = true;
        let mut witness = None;
        for sub in &lattice.elems {
            let chi = classify_subobject(sub, x, om)?;
            if truth_preimage(&chi, om) != *sub {
                all_unique = false;
                witness = Some("constructed map classifies the wrong subset".to_string());
                break;
            }
            match hits.get(sub) {
                Some(1) => {}
                other => {
                    all_unique = false;
                    witness = Some(format!(
                        "subobject of total size {} has {} classifying maps",
                        sub.total_size(),
                        other.copied().unwrap_or(0)
                    ));
                    break;
                }
            }
        }
        cert.push(
            format!(
                "corpus[{i}]: every subobject has a unique characteristic map ({} subobjects)",
                lattice.elems.len()
            ),
            all_unique,
            witness,
        );
        let bijective = homs.len() == lattice.elems.len();
        cert.push(
            format!(
                "corpus[{i}]: |Sub(X)| = {} equals |Hom(X, Ω)| = {}",
                lattice.elems.len(),
                homs.len()
            ),
            bijective,
            None,
        );
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;
    use crate::psh::representable;
    use std::sync::Arc;

    #[test]
    fn sieve_counts_on_fixture_categories() {
        // Oracle: subset enumeration filtered by closure, done by hand.
        let one = Arc::new(fincat::terminal_category());
        assert_eq!(sieves_on(&one, Obj(0)).len(), 2);

        let arrow = Arc::new(fincat::walking_arrow());
        let a = arrow.object_by_name("a").unwrap();
        let b = arrow.object_by_name("b").unwrap();
        assert_eq!(sieves_on(&arrow, a).len(), 2);
        let on_b = sieves_on(&arrow, b);
        assert_eq!(on_b.len(), 3);
        // Canonical order: ∅, {u}, {id_b, u}.
        assert_eq!(on_b[0].size(), 0);
        assert_eq!(on_b[1].size(), 1);
        assert!(on_b[1].contains(arrow.mor_by_name("u").unwrap()));
        assert_eq!(on_b[2].size(), 2);

        let z2 = Arc::new(fincat::cyclic_group(2));
        assert_eq!(sieves_on(&z2, Obj(0)).len(), 2);
    }

    #[test]
    fn omega_on_the_point_is_two_valued() {
        let one = Arc::new(fincat::terminal_category());
        let om = omega(&one);
        assert_eq!(om.omega.sizes(), &[2]);
    }

    #[test]
    fn omega_on_z2_is_constant_two_with_trivial_action() {
        let z2 = Arc::new(fincat::cyclic_group(2));
        let om = omega(&z2);
        assert_eq!(om.omega.sizes(), &[2]);
        let g = z2.mor_by_name("g").unwrap();
        assert_eq!(om.omega.action(g), &[0, 1]);
    }

    #[test]
    fn omega_on_discrete_bases_is_the_constant_family_of_twos() {
        for names in [vec!["i", "j"], vec!["i", "j", "k"]] {
            let d = Arc::new(fincat::discrete(&names));
            let om = omega(&d);
            assert!(om.omega.sizes().iter().all(|&n| n == 2));
        }
    }

    #[test]
    fn characteristic_of_identity_is_constant_truth() {
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega(&arrow);
        let x = Presheaf::constant(arrow.clone(), 2);
        let chi = classify_subobject(&Subpresheaf::top(&x), &x, &om).unwrap();
        for a in arrow.objects() {
            let max = om.maximal_index(a);
            assert!(chi.component(a).iter().all(|&s| s == max));
        }
    }

    #[test]
    fn characteristic_of_bottom_is_constant_empty_sieve() {
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega(&arrow);
        let x = Presheaf::constant(arrow.clone(), 2);
        let chi = classify_subobject(&Subpresheaf::bottom(&x), &x, &om).unwrap();
        for a in arrow.objects() {
            let empty = om.empty_index(a);
            assert!(chi.component(a).iter().all(|&s| s == empty));
        }
    }

    #[test]
    fn characteristic_on_walking_arrow_matches_the_generated_subobject() {
        // Subpresheaf of y(b) generated by u: {u} at a, ∅ at b.
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega(&arrow);
        let yb = representable(&arrow, arrow.object_by_name("b").unwrap());
        let sub = Subpresheaf {
            elems: vec![[0usize].into_iter().collect(), BTreeSet::new()],
        };
        assert!(sub.is_action_closed(&yb.psh));
        let chi = classify_subobject(&sub, &yb.psh, &om).unwrap();
        let b = arrow.object_by_name("b").unwrap();
        let u = arrow.mor_by_name("u").unwrap();
        let sieve_at_b = om.sieve(b, chi.apply(b, 0));
        assert_eq!(sieve_at_b.members.iter().cloned().collect::<Vec<_>>(), vec![u]);
    }

    #[test]
    fn non_mono_input_is_rejected_with_witness() {
        let one = Arc::new(fincat::terminal_category());
        let om = omega(&one);
        let two = Presheaf::constant(one.clone(), 2);
        let collapse = PresheafMap::new(two.clone(), two.clone(), vec![vec![0, 0]]).unwrap();
        match characteristic(&collapse, &om) {
            Err(TkError::NotMono { x, y, .. }) => assert_eq!((x, y), (0, 1)),
            other => panic!("expected NotMono, got {other:?}"),
        }
    }

    #[test]
    fn subobject_counts() {
        let one = Arc::new(fincat::terminal_category());
        let terminal = Presheaf::terminal(one.clone());
        assert_eq!(subobjects(&terminal, &Guard::default()).unwrap().elems.len(), 2);
        let two = Presheaf::constant(one.clone(), 2);
        assert_eq!(subobjects(&two, &Guard::default()).unwrap().elems.len(), 4);

        let arrow = Arc::new(fincat::walking_arrow());
        let yb = representable(&arrow, arrow.object_by_name("b").unwrap());
        // Matches Ω(b): 3 subobjects by the classifier bijection.
        assert_eq!(subobjects(&yb.psh, &Guard::default()).unwrap().elems.len(), 3);
    }

    #[test]
    fn verify_classifier_on_small_fixtures() {
        for base in [
            Arc::new(fincat::terminal_category()),
            Arc::new(fincat::walking_arrow()),
            Arc::new(fincat::cyclic_group(2)),
        ] {
            let om = omega(&base);
            let mut corpus: Vec<Presheaf> = vec![
                Presheaf::initial(base.clone()),
                Presheaf::terminal(base.clone()),
                om.omega.clone(),
            ];
            for a in base.objects() {
                corpus.push(representable(&base, a).psh);
            }
            let cert = verify_classifier(&om, &corpus, &Guard::default()).unwrap();
            assert!(cert.ok, "{:?}", cert.lines);
        }
    }

    #[test]
    fn hom_two_omega_has_four_elements_on_the_point() {
        let one = Arc::new(fincat::terminal_category());
        let om = omega(&one);
        let two = Presheaf::constant(one.clone(), 2);
        let homs = enumerate_maps(&two, &om.omega, &Guard::default()).unwrap();
        assert_eq!(homs.len(), 4);
        assert_eq!(subobjects(&two, &Guard::default()).unwrap().elems.len(), 4);
    }

    #[test]
    fn regular_z2_action_has_two_equivariant_maps_to_omega() {
        let z2 = Arc::new(fincat::cyclic_group(2));
        let om = omega(&z2);
        let reg = representable(&z2, Obj(0)).psh;
        assert_eq!(enumerate_maps(&reg, &om.omega, &Guard::default()).unwrap().len(), 2);
    }

    #[test]
    fn classification_is_natural_under_pullback() {
        // Pull back a subobject along h, classify, and compare with χ∘h.
        let arrow = Arc::new(fincat::walking_arrow());
        let om = omega(&arrow);
        let x = Presheaf::constant(arrow.clone(), 2);
        let pool = [
            Presheaf::terminal(arrow.clone()),
            Presheaf::constant(arrow.clone(), 2),
            representable(&arrow, arrow.object_by_name("b").unwrap()).psh,
        ];
        let lattice = subobjects(&x, &Guard::default()).unwrap();
        for xp in &pool {
            for h in enumerate_maps(xp, &x, &Guard::default()).unwrap() {
                for sub in &lattice.elems {
                    let chi = classify_subobject(sub, &x, &om).unwrap();
                    let lhs = classify_subobject(&sub.pullback_along(&h), xp, &om).unwrap();
                    let rhs = crate::psh::compose_maps(&chi, &h).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
