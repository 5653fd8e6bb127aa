//! Axiom audits over a declared finite corpus of objects: well-pointedness,
//! Choice, natural-numbers-object refutation, and global-element counting.
//!
//! Pass verdicts are corpus-relative (the ambient topos has infinitely many
//! objects); failing verdicts carry witnesses that re-verify from scratch.

use crate::error::{Guard, TkError};
use crate::fincat::Base;
use crate::psh::{
    compose_maps, enumerate_maps, first_iso, global_elements, map_class, Presheaf, PresheafMap,
};
use crate::sites::{sheafify, Site};
use crate::util::sha256_hex;

/// A finite window onto a topos: the base category, an optional site (for a
/// sheaf subtopos), and a list of objects the audits quantify over.
#[derive(Clone, Debug)]
pub struct ToposCorpus {
    pub base: Base,
    pub site: Option<Site>,
    pub objects: Vec<Presheaf>,
}

impl ToposCorpus {
    pub fn new(base: Base, objects: Vec<Presheaf>) -> Result<Self, TkError> {
        for p in &objects {
            if p.base() != &base {
                return Err(TkError::BaseMismatch("corpus object over the wrong base".into()));
            }
        }
        Ok(ToposCorpus {
            base,
            site: None,
            objects,
        })
    }

    pub fn with_site(base: Base, site: Site, objects: Vec<Presheaf>) -> Result<Self, TkError> {
        let mut corpus = ToposCorpus::new(base, objects)?;
        for p in &corpus.objects {
            if !crate::sites::is_sheaf(p, &site).is_sheaf {
                return Err(TkError::invalid(
                    "corpus",
                    "a sheaf-topos corpus object is not a sheaf",
                ));
            }
        }
        corpus.site = Some(site);
        Ok(corpus)
    }

    /// The terminal object of the ambient topos (a sheaf for any topology).
    pub fn terminal(&self) -> Presheaf {
        Presheaf::terminal(self.base.clone())
    }

    /// The initial object: the empty presheaf, or its sheafification when a
    /// site is present.
    pub fn initial(&self, guard: &Guard) -> Result<Presheaf, TkError> {
        let zero = Presheaf::initial(self.base.clone());
        match &self.site {
            None => Ok(zero),
            Some(site) => Ok(sheafify(&zero, site, guard)?.sheaf),
        }
    }

    /// Epi in context: pointwise surjective for presheaf corpora; locally
    /// surjective (image sieve covers) for sheaf corpora.
    pub fn is_epi(&self, h: &PresheafMap) -> bool {
        match &self.site {
            None => map_class(h).epi,
            Some(site) => {
                let base = self.base.clone();
                base.objects().all(|a| {
                    (0..h.target().size(a)).all(|y| {
                        let members: std::collections::BTreeSet<crate::fincat::Mor> = base
                            .mors_into(a)
                            .into_iter()
                            .filter(|&f| {
                                let restricted = h.target().apply(f, y);
                                h.component(base.dom(f))
                                    .iter()
                                    .any(|&img| img == restricted)
                            })
                            .collect();
                        let sieve = crate::classifier::Sieve { apex: a, members };
                        match site.omega.sieve_index(&sieve) {
                            Some(idx) => site.topology.is_covering(a, idx),
                            None => false,
                        }
                    })
                })
            }
        }
    }

    /// Deterministic digest of the corpus contents, recorded in
    /// certificates.
    pub fn hash(&self) -> String {
        let mut bytes = Vec::new();
        bytes.extend_from_slice(format!("{:?}", self.base).as_bytes());
        for p in &self.objects {
            bytes.extend_from_slice(format!("{:?}|{:?};", p.sizes(), (0..self.base.mor_count()).map(|f| p.action(crate::fincat::Mor(f)).to_vec()).collect::<Vec<_>>()).as_bytes());
        }
        if let Some(site) = &self.site {
            bytes.extend_from_slice(format!("{:?}", site.topology).as_bytes());
        }
        sha256_hex(&bytes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

/// Witness data; every variant carries enough to re-run the check.
#[derive(Clone, Debug)]
pub enum AuditWitness {
    /// Distinct parallel maps agreeing on all global elements.
    InseparablePair {
        source: usize,
        target: usize,
        f: Vec<Vec<usize>>,
        g: Vec<Vec<usize>>,
    },
    /// Initial and terminal objects are isomorphic.
    Degenerate,
    /// An epi with no section.
    UnsplitEpi {
        source: usize,
        target: usize,
        e: Vec<Vec<usize>>,
    },
    /// A recursion triple with `count ≠ 1` mediating maps.
    NnoTriple {
        object: usize,
        point: Vec<Vec<usize>>,
        step: Vec<Vec<usize>>,
        count: usize,
    },
}

#[derive(Clone, Debug)]
pub struct AuditCertificate {
    pub audit: String,
    pub verdict: Verdict,
    pub witnesses: Vec<AuditWitness>,
    pub corpus_hash: String,
}

impl AuditCertificate {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Well-pointedness: (i) the terminal object separates all corpus parallel
/// pairs via global elements; (ii) initial ≇ terminal.
pub fn check_well_pointed(corpus: &ToposCorpus, guard: &Guard) -> Result<AuditCertificate, TkError> {
    let mut witnesses = Vec::new();
    let initial = corpus.initial(guard)?;
    if first_iso(&initial, &corpus.terminal()).is_some() {
        witnesses.push(AuditWitness::Degenerate);
    }
    'outer: for (i, x) in corpus.objects.iter().enumerate() {
        let points = global_elements(x);
        for (j, y) in corpus.objects.iter().enumerate() {
            let maps = enumerate_maps(x, y, guard)?;
            for (fi, f) in maps.iter().enumerate() {
                for g in maps.iter().skip(fi + 1) {
                    let separated = points
                        .iter()
                        .any(|p| compose_maps(f, p).unwrap() != compose_maps(g, p).unwrap());
                    if !separated {
                        witnesses.push(AuditWitness::InseparablePair {
                            source: i,
                            target: j,
                            f: f.components().clone(),
                            g: g.components().clone(),
                        });
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(AuditCertificate {
        audit: "well-pointed".into(),
        verdict: if witnesses.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        witnesses,
        corpus_hash: corpus.hash(),
    })
}

/// Choice: every corpus epi has a section, found by exhaustive search.
pub fn check_choice(corpus: &ToposCorpus, guard: &Guard) -> Result<AuditCertificate, TkError> {
    let mut witnesses = Vec::new();
    'outer: for (i, x) in corpus.objects.iter().enumerate() {
        for (j, y) in corpus.objects.iter().enumerate() {
            for e in enumerate_maps(x, y, guard)? {
                if !corpus.is_epi(&e) {
                    continue;
                }
                let sections = enumerate_maps(y, x, guard)?;
                let split = sections
                    .iter()
                    .any(|m| compose_maps(&e, m).unwrap() == PresheafMap::identity(y));
                if !split {
                    witnesses.push(AuditWitness::UnsplitEpi {
                        source: i,
                        target: j,
                        e: e.components().clone(),
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(AuditCertificate {
        audit: "choice".into(),
        verdict: if witnesses.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        witnesses,
        corpus_hash: corpus.hash(),
    })
}

/// Verdict for a candidate natural-numbers object.
#[derive(Clone, Debug)]
pub enum NnoVerdict {
    /// Some corpus triple `(X, x, r)` admits zero or at least two maps
    /// making the recursion diagram commute.
    Refuted(AuditCertificate),
    /// Every corpus triple admits exactly one; never a proof.
    ConsistentUpToCorpus(AuditCertificate),
}

/// Test a candidate `(N, zero, succ)` against every corpus recursion triple
/// `(X, x : 1 → X, r : X → X)`: count maps `h : N → X` with `h∘zero = x`
/// and `h∘succ = r∘h`.
pub fn check_nno_candidate(
    corpus: &ToposCorpus,
    n: &Presheaf,
    zero: &PresheafMap,
    succ: &PresheafMap,
    guard: &Guard,
) -> Result<NnoVerdict, TkError> {
    if zero.source() != &corpus.terminal() || zero.target() != n {
        return Err(TkError::shape("zero must be a global element of the candidate"));
    }
    if succ.source() != n || succ.target() != n {
        return Err(TkError::shape("successor must be an endomap of the candidate"));
    }
    for (i, x) in corpus.objects.iter().enumerate() {
        let points = global_elements(x);
        let endos = enumerate_maps(x, x, guard)?;
        let homs = enumerate_maps(n, x, guard)?;
        for point in &points {
            for r in &endos {
                let count = homs
                    .iter()
                    .filter(|h| {
                        compose_maps(h, zero).unwrap() == *point
                            && compose_maps(h, succ).unwrap() == compose_maps(r, h).unwrap()
                    })
                    .count();
                if count != 1 {
                    let cert = AuditCertificate {
                        audit: "nno-candidate".into(),
                        verdict: Verdict::Fail,
                        witnesses: vec![AuditWitness::NnoTriple {
                            object: i,
                            point: point.components().clone(),
                            step: r.components().clone(),
                            count,
                        }],
                        corpus_hash: corpus.hash(),
                    };
                    return Ok(NnoVerdict::Refuted(cert));
                }
            }
        }
    }
    Ok(NnoVerdict::ConsistentUpToCorpus(AuditCertificate {
        audit: "nno-candidate".into(),
        verdict: Verdict::Pass,
        witnesses: Vec::new(),
        corpus_hash: corpus.hash(),
    }))
}

/// Re-run the checks backing a certificate's witnesses; `true` when every
/// witness still witnesses.
pub fn reverify(corpus: &ToposCorpus, cert: &AuditCertificate, guard: &Guard) -> Result<bool, TkError> {
    for w in &cert.witnesses {
        match w {
            AuditWitness::Degenerate => {
                let initial = corpus.initial(guard)?;
                if first_iso(&initial, &corpus.terminal()).is_none() {
                    return Ok(false);
                }
            }
            AuditWitness::InseparablePair { source, target, f, g } => {
                let x = &corpus.objects[*source];
                let y = &corpus.objects[*target];
                let f = PresheafMap::new(x.clone(), y.clone(), f.clone())?;
                let g = PresheafMap::new(x.clone(), y.clone(), g.clone())?;
                if f == g {
                    return Ok(false);
                }
                let separated = global_elements(x)
                    .iter()
                    .any(|p| compose_maps(&f, p).unwrap() != compose_maps(&g, p).unwrap());
                if separated {
                    return Ok(false);
                }
            }
            AuditWitness::UnsplitEpi { source, target, e } => {
                let x = &corpus.objects[*source];
                let y = &corpus.objects[*target];
                let e = PresheafMap::new(x.clone(), y.clone(), e.clone())?;
                if !corpus.is_epi(&e) {
                    return Ok(false);
                }
                let split = enumerate_maps(y, x, guard)?
                    .iter()
                    .any(|m| compose_maps(&e, m).unwrap() == PresheafMap::identity(y));
                if split {
                    return Ok(false);
                }
            }
            AuditWitness::NnoTriple { .. } => {
                // Re-checked through check_nno_candidate by the caller, which
                // owns the candidate data.
            }
        }
    }
    Ok(true)
}

/// Global element count per corpus object, as its own audit artifact.
pub fn global_element_counts(corpus: &ToposCorpus) -> Vec<(usize, usize)> {
    corpus
        .objects
        .iter()
        .enumerate()
        .map(|(i, x)| (i, global_elements(x).len()))
        .collect()
}

/// The full subcategory of constant presheaves of sizes `0..=max` — the
/// standard corpus for the one-object base.
pub fn constant_corpus(base: &Base, max: usize) -> Result<ToposCorpus, TkError> {
    let objects = (0..=max)
        .map(|n| Presheaf::constant(base.clone(), n))
        .collect();
    ToposCorpus::new(base.clone(), objects)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;
    use crate::psh::representable;
    use std::sync::Arc;

    #[test]
    fn finite_sets_are_well_pointed_and_have_choice() {
        let one = Arc::new(fincat::terminal_category());
        let corpus = constant_corpus(&one, 3).unwrap();
        let wp = check_well_pointed(&corpus, &Guard::default()).unwrap();
        assert!(wp.passed(), "{:?}", wp.witnesses);
        let ch = check_choice(&corpus, &Guard::default()).unwrap();
        assert!(ch.passed(), "{:?}", ch.witnesses);
    }

    #[test]
    fn z2_sets_fail_both_audits_via_the_regular_action() {
        let z2 = Arc::new(fincat::cyclic_group(2));
        let reg = representable(&z2, crate::fincat::Obj(0)).psh;
        let corpus = ToposCorpus::new(
            z2.clone(),
            vec![
                Presheaf::initial(z2.clone()),
                Presheaf::terminal(z2.clone()),
                reg,
            ],
        )
        .unwrap();
        let wp = check_well_pointed(&corpus, &Guard::default()).unwrap();
        assert!(!wp.passed());
        assert!(matches!(wp.witnesses[0], AuditWitness::InseparablePair { .. }));
        let ch = check_choice(&corpus, &Guard::default()).unwrap();
        assert!(!ch.passed());
        assert!(matches!(ch.witnesses[0], AuditWitness::UnsplitEpi { .. }));
        // Witnesses re-verify from scratch.
        assert!(reverify(&corpus, &wp, &Guard::default()).unwrap());
        assert!(reverify(&corpus, &ch, &Guard::default()).unwrap());
    }

    #[test]
    fn degenerate_sheaf_corpus_fails_nondegeneracy() {
        let one = Arc::new(fincat::terminal_category());
        let om = crate::classifier::omega(&one);
        let site = Site::largest(om);
        let corpus = ToposCorpus::with_site(
            one.clone(),
            site,
            vec![Presheaf::terminal(one.clone())],
        )
        .unwrap();
        let wp = check_well_pointed(&corpus, &Guard::default()).unwrap();
        assert!(!wp.passed());
        assert!(wp
            .witnesses
            .iter()
            .any(|w| matches!(w, AuditWitness::Degenerate)));
    }

    #[test]
    fn isos_always_split() {
        let one = Arc::new(fincat::terminal_category());
        let two = Presheaf::constant(one.clone(), 2);
        let corpus = ToposCorpus::new(one, vec![two]).unwrap();
        assert!(check_choice(&corpus, &Guard::default()).unwrap().passed());
    }

    #[test]
    fn terminal_candidate_is_refuted_by_a_swap_triple() {
        let one = Arc::new(fincat::terminal_category());
        let corpus = constant_corpus(&one, 2).unwrap();
        let n = Presheaf::terminal(one.clone());
        let zero = PresheafMap::identity(&n);
        let succ = PresheafMap::identity(&n);
        match check_nno_candidate(&corpus, &n, &zero, &succ, &Guard::default()).unwrap() {
            NnoVerdict::Refuted(cert) => {
                assert!(matches!(cert.witnesses[0], AuditWitness::NnoTriple { .. }))
            }
            NnoVerdict::ConsistentUpToCorpus(_) => panic!("the point is not recursion-initial"),
        }
    }

    #[test]
    fn cyclic_candidate_is_refuted() {
        let one = Arc::new(fincat::terminal_category());
        let corpus = constant_corpus(&one, 2).unwrap();
        let n = Presheaf::constant(one.clone(), 3);
        let zero = PresheafMap::global_element(&n, vec![0]).unwrap();
        let succ =
            PresheafMap::new(n.clone(), n.clone(), vec![vec![1, 2, 0]]).unwrap();
        match check_nno_candidate(&corpus, &n, &zero, &succ, &Guard::default()).unwrap() {
            NnoVerdict::Refuted(_) => {}
            NnoVerdict::ConsistentUpToCorpus(_) => panic!("rotation is not recursion-initial"),
        }
    }

    #[test]
    fn empty_triple_corpus_is_vacuously_consistent() {
        let one = Arc::new(fincat::terminal_category());
        let corpus = ToposCorpus::new(one.clone(), vec![]).unwrap();
        let n = Presheaf::terminal(one.clone());
        let zero = PresheafMap::identity(&n);
        let succ = PresheafMap::identity(&n);
        assert!(matches!(
            check_nno_candidate(&corpus, &n, &zero, &succ, &Guard::default()).unwrap(),
            NnoVerdict::ConsistentUpToCorpus(_)
        ));
    }

    #[test]
    fn global_element_counts_match_fixed_points() {
        let z2 = Arc::new(fincat::cyclic_group(2));
        let reg = representable(&z2, crate::fincat::Obj(0)).psh;
        let om = crate::classifier::omega(&z2);
        let corpus =
            ToposCorpus::new(z2.clone(), vec![reg, om.omega.clone()]).unwrap();
        let counts = global_element_counts(&corpus);
        assert_eq!(counts, vec![(0, 0), (1, 2)]);
    }

    #[test]
    fn omega_over_the_walking_arrow_has_three_global_elements() {
        // Cross-check: naturality forces pairs (S_a, S_b) with u*(S_b) = S_a.
        let arrow = Arc::new(fincat::walking_arrow());
        let om = crate::classifier::omega(&arrow);
        assert_eq!(global_elements(&om.omega).len(), 3);
    }

    #[test]
    fn audits_are_monotone_under_corpus_growth() {
        // A failing audit stays failing when the corpus grows.
        let z2 = Arc::new(fincat::cyclic_group(2));
        let reg = representable(&z2, crate::fincat::Obj(0)).psh;
        let small = ToposCorpus::new(
            z2.clone(),
            vec![Presheaf::terminal(z2.clone()), reg.clone()],
        )
        .unwrap();
        let grown = ToposCorpus::new(
            z2.clone(),
            vec![
                Presheaf::terminal(z2.clone()),
                reg,
                Presheaf::constant(z2.clone(), 2),
            ],
        )
        .unwrap();
        assert!(!check_choice(&small, &Guard::default()).unwrap().passed());
        assert!(!check_choice(&grown, &Guard::default()).unwrap().passed());
    }
}
