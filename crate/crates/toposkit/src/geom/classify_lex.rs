//! Classification of left-exact functors into a presheaf topos: the induced
//! geometric morphism has inverse image `P ↦ P ⊗ M` (the colimit extension
//! of `M` along the Yoneda embedding, computed as a pointwise coend) and
//! direct image `Q ↦ Nat(M−, Q)`.

use super::AdjointPair;
use crate::error::{Guard, TkError};
use crate::fincat::{
    find_equalizer, find_product, has_finite_limits, terminal_objects, Base, Obj,
};
use crate::psh::{
    are_isomorphic, compose_maps, enumerate_nats, equalizer, map_class, product, representable,
    same_base, Presheaf, PresheafMap,
};
use crate::util::UnionFind;
use std::collections::HashMap;

/// A functor `M : C → Psh(D)`: a presheaf per object of `C`, a presheaf map
/// per morphism, functorially.
#[derive(Clone, Debug)]
pub struct DiagramFunctor {
    pub source: Base,
    pub target_base: Base,
    pub objects: Vec<Presheaf>,
    pub maps: Vec<PresheafMap>,
}

impl DiagramFunctor {
    pub fn new(
        source: Base,
        target_base: Base,
        objects: Vec<Presheaf>,
        maps: Vec<PresheafMap>,
    ) -> Result<Self, TkError> {
        if objects.len() != source.object_count() || maps.len() != source.mor_count() {
            return Err(TkError::shape("functor tables do not match the source category"));
        }
        for p in &objects {
            if !same_base(p.base(), &target_base) {
                return Err(TkError::BaseMismatch("functor values over the wrong base".into()));
            }
        }
        for f in source.mors() {
            let m = &maps[f.0];
            if m.source() != &objects[source.dom(f).0] || m.target() != &objects[source.cod(f).0]
            {
                return Err(TkError::shape(format!(
                    "map for `{}` has the wrong endpoints",
                    source.mor_name(f)
                )));
            }
        }
        for a in source.objects() {
            if maps[source.identity(a).0] != PresheafMap::identity(&objects[a.0]) {
                return Err(TkError::invalid("diagram functor", "identities not preserved"));
            }
        }
        for g in source.mors() {
            for f in source.mors() {
                if let Some(gf) = source.compose(g, f) {
                    if compose_maps(&maps[g.0], &maps[f.0])? != maps[gf.0] {
                        return Err(TkError::invalid(
                            "diagram functor",
                            format!(
                                "functoriality fails on {}∘{}",
                                source.mor_name(g),
                                source.mor_name(f)
                            ),
                        ));
                    }
                }
            }
        }
        Ok(DiagramFunctor {
            source,
            target_base,
            objects,
            maps,
        })
    }

    pub fn value(&self, c: Obj) -> &Presheaf {
        &self.objects[c.0]
    }
}

/// The Yoneda embedding as a diagram functor `C → Psh(C)`.
pub fn yoneda_functor(c: &Base) -> DiagramFunctor {
    let objects: Vec<Presheaf> = c.objects().map(|a| representable(c, a).psh).collect();
    let reps: Vec<crate::psh::Representable> = c.objects().map(|a| representable(c, a)).collect();
    let maps: Vec<PresheafMap> = c
        .mors()
        .map(|f| {
            let (a, b) = (c.dom(f), c.cod(f));
            // y(f) : y(a) → y(b), postcomposition with f.
            let components: Vec<Vec<usize>> = c
                .objects()
                .map(|x| {
                    reps[a.0].elems[x.0]
                        .iter()
                        .map(|&h| {
                            let fh = c.compose(f, h).expect("composable");
                            reps[b.0].elems[x.0].iter().position(|&k| k == fh).unwrap()
                        })
                        .collect()
                })
                .collect();
            PresheafMap::new(objects[a.0].clone(), objects[b.0].clone(), components)
                .expect("postcomposition is natural")
        })
        .collect();
    DiagramFunctor {
        source: c.clone(),
        target_base: c.clone(),
        objects,
        maps,
    }
}

/// Probe-based left-exactness check for a diagram functor; also verifies
/// that the source has finite limits.
pub fn check_lex_diagram_functor(m: &DiagramFunctor, guard: &Guard) -> Result<(), TkError> {
    let c = &m.source;
    if !has_finite_limits(c) {
        return Err(TkError::NotLex("the source category lacks finite limits".into()));
    }
    let t = terminal_objects(c)[0];
    if !are_isomorphic(m.value(t), &Presheaf::terminal(m.target_base.clone())) {
        return Err(TkError::NotLex("terminal object not preserved".into()));
    }
    for a in c.objects() {
        for b in c.objects() {
            let (p, pi1, pi2) = find_product(c, a, b).expect("finite limits exist");
            let prod = product(m.value(a), m.value(b))?;
            let cmp = prod.pairing(&m.maps[pi1.0], &m.maps[pi2.0])?;
            if cmp.source() != m.value(p) || !map_class(&cmp).iso {
                return Err(TkError::NotLex(format!(
                    "product of `{}` and `{}` not preserved",
                    c.obj_name(a),
                    c.obj_name(b)
                )));
            }
        }
    }
    for u in c.mors() {
        for v in c.mors() {
            if c.dom(u) != c.dom(v) || c.cod(u) != c.cod(v) {
                continue;
            }
            let (e, i) = find_equalizer(c, u, v).expect("finite limits exist");
            let (lim, _incl) = equalizer(&m.maps[u.0], &m.maps[v.0], guard)?;
            let d = crate::psh::Diagram::parallel_pair(&m.maps[u.0], &m.maps[v.0])?;
            let cone = vec![
                m.maps[i.0].clone(),
                compose_maps(&m.maps[u.0], &m.maps[i.0])?,
            ];
            match crate::psh::mediating_into_limit(&lim, &d, &cone)? {
                Some(med) if med.source() == m.value(e) && map_class(&med).iso => {}
                _ => {
                    return Err(TkError::NotLex(format!(
                        "equalizer of `{}` and `{}` not preserved",
                        c.mor_name(u),
                        c.mor_name(v)
                    )))
                }
            }
        }
    }
    Ok(())
}

/// The pointwise coend `(P ⊗ M)(d)`: classes of `(c, p ∈ P(c), x ∈ M(c)(d))`
/// under `(c, p·u, x) ~ (c', p, M(u)(x))` for `u : c → c'`.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub psh: Presheaf,
    pub reps: Vec<Vec<(Obj, usize, usize)>>,
    class_of: Vec<HashMap<(usize, usize, usize), usize>>,
}

impl Tensor {
    pub fn class(&self, d: Obj, c: Obj, p: usize, x: usize) -> usize {
        self.class_of[d.0][&(c.0, p, x)]
    }
}

pub fn tensor(p: &Presheaf, m: &DiagramFunctor, _guard: &Guard) -> Result<Tensor, TkError> {
    if p.base() != &m.source {
        return Err(TkError::BaseMismatch("tensor input lives over the wrong base".into()));
    }
    let c_cat = m.source.clone();
    let d_cat = m.target_base.clone();
    let mut reps_all = Vec::with_capacity(d_cat.object_count());
    let mut class_all = Vec::with_capacity(d_cat.object_count());
    for d in d_cat.objects() {
        let mut triples: Vec<(Obj, usize, usize)> = Vec::new();
        for c in c_cat.objects() {
            for pe in 0..p.size(c) {
                for x in 0..m.value(c).size(d) {
                    triples.push((c, pe, x));
                }
            }
        }
        let index: HashMap<(usize, usize, usize), usize> = triples
            .iter()
            .enumerate()
            .map(|(i, &(c, pe, x))| ((c.0, pe, x), i))
            .collect();
        let mut uf = UnionFind::new(triples.len());
        // For u : c → c', p' ∈ P(c'), x ∈ M(c)(d):
        //   (c, P(u)(p'), x) ~ (c', p', M(u)_d(x)).
        for u in c_cat.mors() {
            let (c, c2) = (c_cat.dom(u), c_cat.cod(u));
            for p2 in 0..p.size(c2) {
                for x in 0..m.value(c).size(d) {
                    let lhs = index[&(c.0, p.apply(u, p2), x)];
                    let rhs = index[&(c2.0, p2, m.maps[u.0].apply(d, x))];
                    uf.union(lhs, rhs);
                }
            }
        }
        let classes = uf.classes(triples.len());
        let mut class_of = HashMap::new();
        let reps: Vec<(Obj, usize, usize)> = classes
            .iter()
            .enumerate()
            .map(|(ci, members)| {
                for &mm in members {
                    let (c, pe, x) = triples[mm];
                    class_of.insert((c.0, pe, x), ci);
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
        let (d_new, d_old) = (d_cat.dom(v), d_cat.cod(v));
        let act = reps_all[d_old.0]
            .iter()
            .map(|&(c, pe, x)| class_all[d_new.0][&(c.0, pe, m.value(c).apply(v, x))])
            .collect();
        actions.push(act);
    }
    let psh = Presheaf::new(d_cat, sets, actions)?;
    Ok(Tensor {
        psh,
        reps: reps_all,
        class_of: class_all,
    })
}

/// Functorial action of `− ⊗ M` on a map `h : P → P'`.
pub fn tensor_map(
    h: &PresheafMap,
    m: &DiagramFunctor,
    src: &Tensor,
    dst: &Tensor,
) -> Result<PresheafMap, TkError> {
    let d_cat = m.target_base.clone();
    let components = d_cat
        .objects()
        .map(|d| {
            src.reps[d.0]
                .iter()
                .map(|&(c, pe, x)| dst.class_of[d.0][&(c.0, h.apply(c, pe), x)])
                .collect()
        })
        .collect();
    Ok(PresheafMap::new_unchecked(
        src.psh.clone(),
        dst.psh.clone(),
        components,
    ))
}

/// The direct image `Q ↦ Nat(M−, Q)` with its enumerated transformations.
#[derive(Clone, Debug)]
pub struct HomFunctor {
    pub psh: Presheaf,
    /// Per object `c` of the source, the natural transformations
    /// `M(c) → Q` as component tables, canonically ordered.
    pub nats: Vec<Vec<Vec<Vec<usize>>>>,
    index: Vec<HashMap<Vec<Vec<usize>>, usize>>,
}

pub fn hom_functor(m: &DiagramFunctor, q: &Presheaf, guard: &Guard) -> Result<HomFunctor, TkError> {
    if !same_base(q.base(), &m.target_base) {
        return Err(TkError::BaseMismatch("hom functor input over the wrong base".into()));
    }
    let c_cat = m.source.clone();
    let mut nats_all = Vec::with_capacity(c_cat.object_count());
    let mut index_all = Vec::with_capacity(c_cat.object_count());
    for c in c_cat.objects() {
        let nats = enumerate_nats(m.value(c), q, guard)?;
        let index: HashMap<Vec<Vec<usize>>, usize> = nats
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        nats_all.push(nats);
        index_all.push(index);
    }
    let sets: Vec<usize> = nats_all.iter().map(|n| n.len()).collect();
    let d_cat = m.target_base.clone();
    let mut actions = Vec::with_capacity(c_cat.mor_count());
    for u in c_cat.mors() {
        // Contravariant: Nat(M(c'), Q) → Nat(M(c), Q), η ↦ η ∘ M(u).
        let (c, c2) = (c_cat.dom(u), c_cat.cod(u));
        let act = nats_all[c2.0]
            .iter()
            .map(|eta| {
                let composed: Vec<Vec<usize>> = d_cat
                    .objects()
                    .map(|d| {
                        (0..m.value(c).size(d))
                            .map(|x| eta[d.0][m.maps[u.0].apply(d, x)])
                            .collect()
                    })
                    .collect();
                index_all[c.0][&composed]
            })
            .collect();
        actions.push(act);
    }
    let psh = Presheaf::new(c_cat, sets, actions)?;
    Ok(HomFunctor {
        psh,
        nats: nats_all,
        index: index_all,
    })
}

/// The adjunction `(− ⊗ M) ⊣ Nat(M−, −)`; its geometric morphism goes
/// `Psh(D) → Psh(C)`.
pub struct TensorHomAdj {
    pub m: DiagramFunctor,
    guard: Guard,
}

impl TensorHomAdj {
    pub fn new(m: DiagramFunctor, guard: Guard) -> Self {
        TensorHomAdj { m, guard }
    }
}

impl AdjointPair for TensorHomAdj {
    fn left_src(&self) -> &Base {
        &self.m.source
    }

    fn left_dst(&self) -> &Base {
        &self.m.target_base
    }

    fn left_obj(&self, p: &Presheaf) -> Result<Presheaf, TkError> {
        Ok(tensor(p, &self.m, &self.guard)?.psh)
    }

    fn left_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        let src = tensor(h.source(), &self.m, &self.guard)?;
        let dst = tensor(h.target(), &self.m, &self.guard)?;
        tensor_map(h, &self.m, &src, &dst)
    }

    fn right_obj(&self, q: &Presheaf) -> Result<Presheaf, TkError> {
        Ok(hom_functor(&self.m, q, &self.guard)?.psh)
    }

    fn right_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        let src = hom_functor(&self.m, h.source(), &self.guard)?;
        let dst = hom_functor(&self.m, h.target(), &self.guard)?;
        let c_cat = self.m.source.clone();
        let d_cat = self.m.target_base.clone();
        let components = c_cat
            .objects()
            .map(|c| {
                src.nats[c.0]
                    .iter()
                    .map(|eta| {
                        let pushed: Vec<Vec<usize>> = d_cat
                            .objects()
                            .map(|d| eta[d.0].iter().map(|&y| h.apply(d, y)).collect())
                            .collect();
                        dst.index[c.0][&pushed]
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

    fn unit(&self, p: &Presheaf) -> Result<PresheafMap, TkError> {
        // P → Nat(M−, P⊗M): p at c goes to the transformation
        // x ↦ [c, p, x].
        let tens = tensor(p, &self.m, &self.guard)?;
        let hom = hom_functor(&self.m, &tens.psh, &self.guard)?;
        let c_cat = self.m.source.clone();
        let d_cat = self.m.target_base.clone();
        let components = c_cat
            .objects()
            .map(|c| {
                (0..p.size(c))
                    .map(|pe| {
                        let table: Vec<Vec<usize>> = d_cat
                            .objects()
                            .map(|d| {
                                (0..self.m.value(c).size(d))
                                    .map(|x| tens.class(d, c, pe, x))
                                    .collect()
                            })
                            .collect();
                        hom.index[c.0][&table]
                    })
                    .collect()
            })
            .collect();
        PresheafMap::new(p.clone(), hom.psh.clone(), components)
    }

    fn counit(&self, q: &Presheaf) -> Result<PresheafMap, TkError> {
        // Nat(M−, Q) ⊗ M → Q: [c, η, x] ↦ η_d(x).
        let hom = hom_functor(&self.m, q, &self.guard)?;
        let tens = tensor(&hom.psh, &self.m, &self.guard)?;
        let d_cat = self.m.target_base.clone();
        let components = d_cat
            .objects()
            .map(|d| {
                tens.reps[d.0]
                    .iter()
                    .map(|&(c, eta_idx, x)| hom.nats[c.0][eta_idx][d.0][x])
                    .collect()
            })
            .collect();
        PresheafMap::new(tens.psh.clone(), q.clone(), components)
    }

    fn describe(&self) -> String {
        "tensor with a diagram functor ⊣ hom".into()
    }
}

#[derive(Clone, Debug)]
pub struct ClassifyLexReport {
    pub lex_ok: bool,
    pub triangles_ok: bool,
    pub round_trip_ok: bool,
    pub lines: Vec<String>,
}

/// Classify a left-exact functor `M : C → Psh(D)`: certify the induced
/// adjunction on the corpora and check that tensoring the representables
/// recovers `M` up to natural isomorphism, naturally in `C`.
pub fn classify_lex(
    m: &DiagramFunctor,
    corpus_c: &[Presheaf],
    corpus_d: &[Presheaf],
    guard: &Guard,
) -> Result<ClassifyLexReport, TkError> {
    check_lex_diagram_functor(m, guard)?;
    let mut lines = Vec::new();
    lines.push("source has finite limits and M preserves the probes".to_string());
    let adj = TensorHomAdj::new(m.clone(), *guard);
    let cert = super::verify_triangles(&adj, corpus_c, corpus_d)?;
    let triangles_ok = cert.ok;
    lines.push(format!(
        "triangle identities on {} + {} corpus objects: {}",
        corpus_c.len(),
        corpus_d.len(),
        if triangles_ok { "ok" } else { "failed" }
    ));

    // Round trip: y(c) ⊗ M ≅ M(c) via [c', g : c' → c, x] ↦ M(g)(x),
    // naturally in c.
    let c_cat = m.source.clone();
    let d_cat = m.target_base.clone();
    let mut round_trip_ok = true;
    let mut comparisons: Vec<PresheafMap> = Vec::new();
    let reps: Vec<crate::psh::Representable> =
        c_cat.objects().map(|c| representable(&c_cat, c)).collect();
    let mut tensors = Vec::new();
    for c in c_cat.objects() {
        let tens = tensor(&reps[c.0].psh, m, guard)?;
        let components: Vec<Vec<usize>> = d_cat
            .objects()
            .map(|d| {
                tens.reps[d.0]
                    .iter()
                    .map(|&(c2, g_pos, x)| {
                        let g = reps[c.0].elems[c2.0][g_pos];
                        m.maps[g.0].apply(d, x)
                    })
                    .collect()
            })
            .collect();
        let cmp = PresheafMap::new(tens.psh.clone(), m.value(c).clone(), components)?;
        if !map_class(&cmp).iso {
            round_trip_ok = false;
            lines.push(format!(
                "round trip fails at `{}`: y(c) ⊗ M has sizes {:?}, M(c) has {:?}",
                c_cat.obj_name(c),
                tens.psh.sizes(),
                m.value(c).sizes()
            ));
        }
        comparisons.push(cmp);
        tensors.push(tens);
    }
    // Naturality of the comparison along every morphism of C.
    if round_trip_ok {
        for f in c_cat.mors() {
            let (a, b) = (c_cat.dom(f), c_cat.cod(f));
            // y(f) ⊗ M against M(f).
            let yf = yoneda_functor(&c_cat).maps[f.0].clone();
            let lifted = tensor_map(&yf, m, &tensors[a.0], &tensors[b.0])?;
            let lhs = compose_maps(&comparisons[b.0], &lifted)?;
            let rhs = compose_maps(&m.maps[f.0], &comparisons[a.0])?;
            if lhs != rhs {
                round_trip_ok = false;
                lines.push(format!(
                    "round-trip comparison is not natural at `{}`",
                    c_cat.mor_name(f)
                ));
            }
        }
    }
    lines.push(format!(
        "round trip (inverse image ∘ Yoneda ≅ M): {}",
        if round_trip_ok { "ok" } else { "failed" }
    ));
    Ok(ClassifyLexReport {
        lex_ok: true,
        triangles_ok,
        round_trip_ok,
        lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;
    use std::sync::Arc;

    #[test]
    fn yoneda_is_lex_on_finite_limit_bases() {
        for base in [
            Arc::new(fincat::terminal_category()),
            Arc::new(fincat::walking_arrow()),
            Arc::new(fincat::square_poset()),
        ] {
            let y = yoneda_functor(&base);
            assert!(check_lex_diagram_functor(&y, &Guard::default()).is_ok(), "{base}");
        }
    }

    #[test]
    fn tensor_with_yoneda_is_the_identity_up_to_iso() {
        let base = Arc::new(fincat::walking_arrow());
        let y = yoneda_functor(&base);
        for p in [
            Presheaf::terminal(base.clone()),
            Presheaf::constant(base.clone(), 2),
            representable(&base, base.object_by_name("b").unwrap()).psh,
        ] {
            let t = tensor(&p, &y, &Guard::default()).unwrap();
            assert!(are_isomorphic(&t.psh, &p));
        }
    }

    #[test]
    fn classify_yoneda_on_the_walking_arrow() {
        let base = Arc::new(fincat::walking_arrow());
        let y = yoneda_functor(&base);
        let corpus: Vec<Presheaf> = vec![
            Presheaf::terminal(base.clone()),
            Presheaf::constant(base.clone(), 2),
            representable(&base, base.object_by_name("a").unwrap()).psh,
        ];
        let report = classify_lex(&y, &corpus, &corpus, &Guard::default()).unwrap();
        assert!(report.triangles_ok, "{:?}", report.lines);
        assert!(report.round_trip_ok, "{:?}", report.lines);
    }

    #[test]
    fn terminal_valued_functor_classifies() {
        // C = terminal category, M picks the terminal presheaf of Psh(D).
        let one = Arc::new(fincat::terminal_category());
        let arrow = Arc::new(fincat::walking_arrow());
        let m = DiagramFunctor::new(
            one.clone(),
            arrow.clone(),
            vec![Presheaf::terminal(arrow.clone())],
            vec![PresheafMap::identity(&Presheaf::terminal(arrow.clone()))],
        )
        .unwrap();
        let corpus_c = vec![Presheaf::terminal(one.clone()), Presheaf::constant(one, 2)];
        let corpus_d = vec![
            Presheaf::terminal(arrow.clone()),
            representable(&arrow, arrow.object_by_name("b").unwrap()).psh,
        ];
        let report = classify_lex(&m, &corpus_c, &corpus_d, &Guard::default()).unwrap();
        assert!(report.triangles_ok && report.round_trip_ok, "{:?}", report.lines);
    }

    #[test]
    fn non_lex_functors_are_rejected_with_a_probe_witness() {
        // M on the walking arrow sending the terminal object b to a
        // two-element presheaf cannot preserve the terminal probe.
        let arrow = Arc::new(fincat::walking_arrow());
        let one = Arc::new(fincat::terminal_category());
        let two = Presheaf::constant(one.clone(), 2);
        let m = DiagramFunctor::new(
            arrow.clone(),
            one.clone(),
            vec![two.clone(), two.clone()],
            vec![
                PresheafMap::identity(&two),
                PresheafMap::identity(&two),
                PresheafMap::identity(&two),
            ],
        )
        .unwrap();
        assert!(matches!(
            check_lex_diagram_functor(&m, &Guard::default()),
            Err(TkError::NotLex(_))
        ));
    }
}
