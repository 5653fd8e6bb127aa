//! Geometric morphisms as certified adjoint pairs between presheaf (and
//! sheaf) toposes.
//!
//! Functors between toposes are represented extensionally: an adjoint pair
//! knows how to act on any presheaf and map handed to it, and certification
//! runs over a declared finite corpus of objects. Left-exactness is
//! certified on probe diagrams (terminal, binary products, equalizers),
//! which generate all finite limits.

mod classify_lex;
mod kan;
mod points;

pub use classify_lex::{
    check_lex_diagram_functor, classify_lex, hom_functor, tensor, yoneda_functor, ClassifyLexReport,
    DiagramFunctor, HomFunctor, Tensor,
};
pub use kan::{
    left_kan, left_kan_map, precompose, precompose_map, right_kan, right_kan_map, LeftKan, RightKan,
};
pub use points::{
    enumerate_lex_functors, enumerate_set_functors, flatness, points, FlatnessCertificate,
    FlatnessFailure,
};

use crate::error::{Guard, TkError};
use crate::fincat::{Base, FinFunctor, Obj};
use crate::psh::{
    are_isomorphic, compose_maps, enumerate_maps, equalizer, first_iso, map_class, product,
    Presheaf, PresheafMap,
};
use crate::sites::{factor_through_sheafification, sheafify, sheafify_map, Site};

/// An adjunction `L ⊣ R` with `L : Psh(left_src) → Psh(left_dst)`,
/// given by its action on objects and maps plus unit and counit.
pub trait AdjointPair {
    fn left_src(&self) -> &Base;
    fn left_dst(&self) -> &Base;
    fn left_obj(&self, p: &Presheaf) -> Result<Presheaf, TkError>;
    fn left_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError>;
    fn right_obj(&self, q: &Presheaf) -> Result<Presheaf, TkError>;
    fn right_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError>;
    /// `η_P : P → R(L(P))` for `P` over `left_src`.
    fn unit(&self, p: &Presheaf) -> Result<PresheafMap, TkError>;
    /// `ε_Q : L(R(Q)) → Q` for `Q` over `left_dst`.
    fn counit(&self, q: &Presheaf) -> Result<PresheafMap, TkError>;
    fn describe(&self) -> String;
}

/// The adjunction `f_! ⊣ f*` for a functor `f : C → D`.
pub struct LanStar {
    pub f: FinFunctor,
    guard: Guard,
}

impl LanStar {
    pub fn new(f: FinFunctor, guard: Guard) -> Self {
        LanStar { f, guard }
    }
}

impl AdjointPair for LanStar {
    fn left_src(&self) -> &Base {
        &self.f.source
    }

    fn left_dst(&self) -> &Base {
        &self.f.target
    }

    fn left_obj(&self, p: &Presheaf) -> Result<Presheaf, TkError> {
        Ok(left_kan(&self.f, p, &self.guard)?.psh)
    }

    fn left_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        let src = left_kan(&self.f, h.source(), &self.guard)?;
        let dst = left_kan(&self.f, h.target(), &self.guard)?;
        left_kan_map(&self.f, h, &src, &dst)
    }

    fn right_obj(&self, q: &Presheaf) -> Result<Presheaf, TkError> {
        precompose(&self.f, q)
    }

    fn right_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        precompose_map(&self.f, h)
    }

    fn unit(&self, p: &Presheaf) -> Result<PresheafMap, TkError> {
        // P → f* f_! P at c: x ↦ [c, id_{f c}, x].
        let lan = left_kan(&self.f, p, &self.guard)?;
        let target = precompose(&self.f, &lan.psh)?;
        let c_cat = self.f.source.clone();
        let d_cat = self.f.target.clone();
        let components = c_cat
            .objects()
            .map(|c| {
                let fc = self.f.on_obj(c);
                (0..p.size(c))
                    .map(|x| lan.class(fc, c, d_cat.identity(fc), x))
                    .collect()
            })
            .collect();
        PresheafMap::new(p.clone(), target, components)
    }

    fn counit(&self, q: &Presheaf) -> Result<PresheafMap, TkError> {
        // f_! f* Q → Q at d: [c, φ : d → f c, x ∈ Q(f c)] ↦ Q(φ)(x).
        let fq = precompose(&self.f, q)?;
        let lan = left_kan(&self.f, &fq, &self.guard)?;
        let d_cat = self.f.target.clone();
        let components = d_cat
            .objects()
            .map(|d| {
                lan.reps[d.0]
                    .iter()
                    .map(|&(_, phi, x)| q.apply(phi, x))
                    .collect()
            })
            .collect();
        PresheafMap::new(lan.psh.clone(), q.clone(), components)
    }

    fn describe(&self) -> String {
        "left Kan extension ⊣ precomposition".into()
    }
}

/// The adjunction `f* ⊣ f_*` for a functor `f : C → D`; the underlying
/// geometric morphism goes `Psh(C) → Psh(D)`.
pub struct StarRan {
    pub f: FinFunctor,
    guard: Guard,
}

impl StarRan {
    pub fn new(f: FinFunctor, guard: Guard) -> Self {
        StarRan { f, guard }
    }
}

impl AdjointPair for StarRan {
    fn left_src(&self) -> &Base {
        &self.f.target
    }

    fn left_dst(&self) -> &Base {
        &self.f.source
    }

    fn left_obj(&self, q: &Presheaf) -> Result<Presheaf, TkError> {
        precompose(&self.f, q)
    }

    fn left_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        precompose_map(&self.f, h)
    }

    fn right_obj(&self, p: &Presheaf) -> Result<Presheaf, TkError> {
        Ok(right_kan(&self.f, p, &self.guard)?.psh)
    }

    fn right_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        let src = right_kan(&self.f, h.source(), &self.guard)?;
        let dst = right_kan(&self.f, h.target(), &self.guard)?;
        right_kan_map(&self.f, h, &src, &dst)
    }

    fn unit(&self, q: &Presheaf) -> Result<PresheafMap, TkError> {
        // Q → f_* f* Q at d: y ↦ the family ψ ↦ Q(ψ)(y).
        let fq = precompose(&self.f, q)?;
        let ran = right_kan(&self.f, &fq, &self.guard)?;
        let d_cat = self.f.target.clone();
        let c_cat = self.f.source.clone();
        let components = d_cat
            .objects()
            .map(|d| {
                (0..q.size(d))
                    .map(|y| {
                        let family: Vec<Vec<usize>> = c_cat
                            .objects()
                            .map(|c| {
                                ran.hom_lists[d.0][c.0]
                                    .iter()
                                    .map(|&psi| q.apply(psi, y))
                                    .collect()
                            })
                            .collect();
                        ran.family_index(d, &family)
                    })
                    .collect()
            })
            .collect();
        PresheafMap::new(q.clone(), ran.psh.clone(), components)
    }

    fn counit(&self, p: &Presheaf) -> Result<PresheafMap, TkError> {
        // f* f_* P → P at c: family ξ at f c ↦ ξ_c(id_{f c}).
        let ran = right_kan(&self.f, p, &self.guard)?;
        let fran = precompose(&self.f, &ran.psh)?;
        let c_cat = self.f.source.clone();
        let d_cat = self.f.target.clone();
        let components = c_cat
            .objects()
            .map(|c| {
                let fc = self.f.on_obj(c);
                (0..fran.size(c))
                    .map(|k| {
                        let fam = &ran.families[fc.0][k];
                        let id_pos = ran.hom_lists[fc.0][c.0]
                            .iter()
                            .position(|&m| m == d_cat.identity(fc))
                            .expect("identity is in the hom list");
                        fam[c.0][id_pos]
                    })
                    .collect()
            })
            .collect();
        PresheafMap::new(fran, p.clone(), components)
    }

    fn describe(&self) -> String {
        "precomposition ⊣ right Kan extension".into()
    }
}

/// The adjunction `sheafification ⊣ inclusion` over a site: the sheaf
/// subtopos embedding. The `left_dst` corpus must consist of sheaves.
pub struct SheafifyAdj {
    pub site: Site,
    guard: Guard,
}

impl SheafifyAdj {
    pub fn new(site: Site, guard: Guard) -> Self {
        SheafifyAdj { site, guard }
    }
}

impl AdjointPair for SheafifyAdj {
    fn left_src(&self) -> &Base {
        self.site.base()
    }

    fn left_dst(&self) -> &Base {
        self.site.base()
    }

    fn left_obj(&self, p: &Presheaf) -> Result<Presheaf, TkError> {
        Ok(sheafify(p, &self.site, &self.guard)?.sheaf)
    }

    fn left_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        let src = sheafify(h.source(), &self.site, &self.guard)?;
        let dst = sheafify(h.target(), &self.site, &self.guard)?;
        sheafify_map(h, &src, &dst, &self.site)
    }

    fn right_obj(&self, q: &Presheaf) -> Result<Presheaf, TkError> {
        Ok(q.clone())
    }

    fn right_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        Ok(h.clone())
    }

    fn unit(&self, p: &Presheaf) -> Result<PresheafMap, TkError> {
        Ok(sheafify(p, &self.site, &self.guard)?.unit)
    }

    fn counit(&self, q: &Presheaf) -> Result<PresheafMap, TkError> {
        // For a sheaf Q the unit is invertible; the counit is the unique
        // factorization of id_Q through it.
        let sh = sheafify(q, &self.site, &self.guard)?;
        factor_through_sheafification(&sh, &PresheafMap::identity(q), &self.site)
    }

    fn describe(&self) -> String {
        "sheafification ⊣ inclusion".into()
    }
}

/// A geometric morphism `E → F`: inverse image `L : F → E` (left exact
/// left adjoint) and direct image `R : E → F`, certified over corpora.
pub struct GeometricMorphism {
    pub adj: Box<dyn AdjointPair>,
    pub name: String,
}

impl GeometricMorphism {
    /// Inverse image on objects.
    pub fn inverse(&self, q: &Presheaf) -> Result<Presheaf, TkError> {
        self.adj.left_obj(q)
    }

    /// Direct image on objects.
    pub fn direct(&self, p: &Presheaf) -> Result<Presheaf, TkError> {
        self.adj.right_obj(p)
    }

    /// The standard morphism `Psh(C) → Psh(D)` induced by `f : C → D`.
    pub fn from_functor(f: FinFunctor, guard: Guard) -> GeometricMorphism {
        GeometricMorphism {
            name: "induced by a base functor".into(),
            adj: Box::new(StarRan::new(f, guard)),
        }
    }

    /// The sheaf-subtopos inclusion for a site.
    pub fn sheaf_inclusion(site: Site, guard: Guard) -> GeometricMorphism {
        GeometricMorphism {
            name: "sheaf subtopos inclusion".into(),
            adj: Box::new(SheafifyAdj::new(site, guard)),
        }
    }

    /// A deliberately lopsided pair: `f_! ⊣ f*` packaged as if `f_!` were
    /// an inverse image. A genuine adjunction, but `f_!` usually fails the
    /// left-exactness probes.
    pub fn from_left_kan_pair(f: FinFunctor, guard: Guard) -> GeometricMorphism {
        GeometricMorphism {
            name: "left Kan pair".into(),
            adj: Box::new(LanStar::new(f, guard)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GmCheckLine {
    pub label: String,
    pub ok: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct GmCertificate {
    pub ok: bool,
    pub triangles_ok: bool,
    pub left_exact_ok: bool,
    pub lines: Vec<GmCheckLine>,
}

impl GmCertificate {
    fn push(&mut self, label: String, ok: bool, witness: Option<String>) {
        self.ok &= ok;
        self.lines.push(GmCheckLine { label, ok, witness });
    }
}

/// Verify the triangle identities on the corpora, exactly.
pub fn verify_triangles(
    adj: &dyn AdjointPair,
    src_corpus: &[Presheaf],
    dst_corpus: &[Presheaf],
) -> Result<GmCertificate, TkError> {
    let mut cert = GmCertificate {
        ok: true,
        triangles_ok: true,
        left_exact_ok: true,
        lines: Vec::new(),
    };
    for (i, p) in src_corpus.iter().enumerate() {
        let unit = adj.unit(p)?;
        let l_unit = adj.left_map(&unit)?;
        let lp = adj.left_obj(p)?;
        let counit_lp = adj.counit(&lp)?;
        let composite = compose_maps(&counit_lp, &l_unit)?;
        let ok = composite == PresheafMap::identity(&lp);
        cert.push(
            format!("triangle ε_L ∘ Lη = id at source corpus[{i}]"),
            ok,
            None,
        );
    }
    for (i, q) in dst_corpus.iter().enumerate() {
        let counit = adj.counit(q)?;
        let r_counit = adj.right_map(&counit)?;
        let rq = adj.right_obj(q)?;
        let unit_rq = adj.unit(&rq)?;
        let composite = compose_maps(&r_counit, &unit_rq)?;
        let ok = composite == PresheafMap::identity(&rq);
        cert.push(
            format!("triangle Rε ∘ ηR = id at target corpus[{i}]"),
            ok,
            None,
        );
    }
    cert.triangles_ok = cert.ok;
    Ok(cert)
}

/// Certify a geometric morphism: triangle identities plus left-exactness
/// of the inverse image on terminal, binary-product and equalizer probes
/// drawn from the `left_src` corpus.
pub fn verify_geometric(
    gm: &GeometricMorphism,
    src_corpus: &[Presheaf],
    dst_corpus: &[Presheaf],
    equalizer_probe_cap: usize,
    guard: &Guard,
) -> Result<GmCertificate, TkError> {
    let adj = gm.adj.as_ref();
    let mut cert = verify_triangles(adj, src_corpus, dst_corpus)?;

    // Terminal probe.
    let one_src = Presheaf::terminal(adj.left_src().clone());
    let one_dst = Presheaf::terminal(adj.left_dst().clone());
    let l_one = adj.left_obj(&one_src)?;
    let terminal_ok = are_isomorphic(&l_one, &one_dst);
    if !terminal_ok {
        cert.left_exact_ok = false;
    }
    cert.push(
        "inverse image preserves the terminal object".into(),
        terminal_ok,
        (!terminal_ok).then(|| format!("L(1) has sizes {:?}", l_one.sizes())),
    );

    // Binary product probes over corpus pairs.
    for (i, x) in src_corpus.iter().enumerate() {
        for (j, y) in src_corpus.iter().enumerate().skip(i) {
            let prod = product(x, y)?;
            let l_prod = adj.left_obj(&prod.obj)?;
            let lx = adj.left_obj(x)?;
            let ly = adj.left_obj(y)?;
            let target = product(&lx, &ly)?;
            let comparison = target.pairing(&adj.left_map(&prod.pr1)?, &adj.left_map(&prod.pr2)?)?;
            let ok = comparison.source() == &l_prod && map_class(&comparison).iso;
            if !ok {
                cert.left_exact_ok = false;
            }
            cert.push(
                format!("inverse image preserves the product of corpus[{i}] and corpus[{j}]"),
                ok,
                (!ok).then(|| {
                    format!(
                        "L(X×Y) sizes {:?}, LX×LY sizes {:?}",
                        l_prod.sizes(),
                        target.obj.sizes()
                    )
                }),
            );
        }
    }

    // Equalizer probes: parallel pairs in canonical order, capped.
    let mut probes = 0usize;
    'outer: for x in src_corpus {
        for y in src_corpus {
            let maps = enumerate_maps(x, y, guard)?;
            for u in &maps {
                for v in &maps {
                    if u == v {
                        continue;
                    }
                    if probes >= equalizer_probe_cap {
                        break 'outer;
                    }
                    probes += 1;
                    let (lim, incl) = equalizer(u, v, guard)?;
                    let le = adj.left_obj(&lim.apex)?;
                    let l_incl = adj.left_map(&incl)?;
                    let (tlim, _tincl) = equalizer(&adj.left_map(u)?, &adj.left_map(v)?, guard)?;
                    let d = crate::psh::Diagram::parallel_pair(
                        &adj.left_map(u)?,
                        &adj.left_map(v)?,
                    )?;
                    let cone = vec![l_incl.clone(), compose_maps(&adj.left_map(u)?, &l_incl)?];
                    let mediating = crate::psh::mediating_into_limit(&tlim, &d, &cone)?;
                    let ok = match mediating {
                        Some(m) => {
                            let _ = &le;
                            m.source() == &le && map_class(&m).iso
                        }
                        None => false,
                    };
                    if !ok {
                        cert.left_exact_ok = false;
                    }
                    cert.push(
                        format!("inverse image preserves equalizer probe #{probes}"),
                        ok,
                        None,
                    );
                }
            }
        }
    }
    cert.ok = cert.triangles_ok && cert.left_exact_ok;
    Ok(cert)
}

/// A morphism is an embedding iff its direct image is full and faithful,
/// iff the counit is an isomorphism; checked on the corpus of the source
/// topos (objects over `left_dst`).
pub fn is_embedding(
    gm: &GeometricMorphism,
    dst_corpus: &[Presheaf],
) -> Result<(bool, Option<String>), TkError> {
    for (i, q) in dst_corpus.iter().enumerate() {
        let counit = gm.adj.counit(q)?;
        if !map_class(&counit).iso {
            return Ok((false, Some(format!("counit at corpus[{i}] is not an isomorphism"))));
        }
    }
    Ok((true, None))
}

/// Direct hom-set comparison for full-and-faithfulness of the direct image
/// on a corpus; the dual route to the counit criterion.
pub fn direct_image_fully_faithful(
    gm: &GeometricMorphism,
    dst_corpus: &[Presheaf],
    guard: &Guard,
) -> Result<bool, TkError> {
    for x in dst_corpus {
        for y in dst_corpus {
            let homs = enumerate_maps(x, y, guard)?;
            let rx = gm.adj.right_obj(x)?;
            let ry = gm.adj.right_obj(y)?;
            let images: Vec<PresheafMap> = homs
                .iter()
                .map(|h| gm.adj.right_map(h))
                .collect::<Result<_, _>>()?;
            let mut seen = std::collections::HashSet::new();
            for m in &images {
                if !seen.insert(m.components().clone()) {
                    return Ok(false); // not faithful
                }
            }
            let all = enumerate_maps(&rx, &ry, guard)?;
            if all.len() != images.len() {
                return Ok(false); // not full
            }
        }
    }
    Ok(true)
}

/// Identity geometric morphism on a presheaf topos.
pub struct IdentityAdj {
    pub base: Base,
}

impl AdjointPair for IdentityAdj {
    fn left_src(&self) -> &Base {
        &self.base
    }

    fn left_dst(&self) -> &Base {
        &self.base
    }

    fn left_obj(&self, p: &Presheaf) -> Result<Presheaf, TkError> {
        Ok(p.clone())
    }

    fn left_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        Ok(h.clone())
    }

    fn right_obj(&self, p: &Presheaf) -> Result<Presheaf, TkError> {
        Ok(p.clone())
    }

    fn right_map(&self, h: &PresheafMap) -> Result<PresheafMap, TkError> {
        Ok(h.clone())
    }

    fn unit(&self, p: &Presheaf) -> Result<PresheafMap, TkError> {
        Ok(PresheafMap::identity(p))
    }

    fn counit(&self, q: &Presheaf) -> Result<PresheafMap, TkError> {
        Ok(PresheafMap::identity(q))
    }

    fn describe(&self) -> String {
        "identity".into()
    }
}

/// Check `(f_* F)(V) ≅ F(f⁻¹ V)` object by object for a space-induced
/// functor: the right Kan extension along the open-image functor of an
/// open embedding agrees with precomposition along the preimage functor.
pub fn direct_image_matches_preimage(
    f: &FinFunctor,
    preimage_obj: impl Fn(Obj) -> Obj,
    p: &Presheaf,
    guard: &Guard,
) -> Result<bool, TkError> {
    let ran = right_kan(f, p, guard)?;
    let expected_sizes: Vec<usize> = f
        .target
        .objects()
        .map(|v| p.size(preimage_obj(v)))
        .collect();
    if ran.psh.sizes() != expected_sizes.as_slice() {
        return Ok(false);
    }
    // Sizes agree; confirm the identification is natural by exhibiting an
    // isomorphism.
    let expected = Presheaf::new(
        f.target.clone(),
        expected_sizes,
        f.target
            .mors()
            .map(|v| {
                // Action along v : V → W is P of the induced preimage map.
                let (vv, ww) = (f.target.dom(v), f.target.cod(v));
                let (pv, pw) = (preimage_obj(vv), preimage_obj(ww));
                let m = *f
                    .source
                    .hom(pv, pw)
                    .first()
                    .expect("preimages are monotone");
                p.action(m).to_vec()
            })
            .collect(),
    )?;
    Ok(first_iso(&ran.psh, &expected).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;
    use std::sync::Arc;

    fn pick_b() -> FinFunctor {
        let one = Arc::new(fincat::terminal_category());
        let arrow = Arc::new(fincat::walking_arrow());
        let b = arrow.object_by_name("b").unwrap();
        FinFunctor::new(one, arrow.clone(), vec![b], vec![arrow.identity(b)]).unwrap()
    }

    fn small_corpus(base: &Base) -> Vec<Presheaf> {
        let mut v = vec![Presheaf::terminal(base.clone()), Presheaf::constant(base.clone(), 2)];
        for a in base.objects() {
            v.push(crate::psh::representable(base, a).psh);
        }
        v
    }

    #[test]
    fn identity_morphism_is_certified_and_an_embedding() {
        let arrow = Arc::new(fincat::walking_arrow());
        let gm = GeometricMorphism {
            adj: Box::new(IdentityAdj { base: arrow.clone() }),
            name: "identity".into(),
        };
        let corpus = small_corpus(&arrow);
        let cert = verify_geometric(&gm, &corpus, &corpus, 4, &Guard::default()).unwrap();
        assert!(cert.ok, "{:?}", cert.lines);
        assert!(is_embedding(&gm, &corpus).unwrap().0);
    }

    #[test]
    fn both_adjunctions_of_a_functor_satisfy_the_triangles() {
        let f = pick_b();
        let src = small_corpus(&f.source);
        let dst = small_corpus(&f.target);
        let lan_star = LanStar::new(f.clone(), Guard::default());
        let cert = verify_triangles(&lan_star, &src, &dst).unwrap();
        assert!(cert.ok, "{:?}", cert.lines);
        let star_ran = StarRan::new(f, Guard::default());
        let cert = verify_triangles(&star_ran, &dst, &src).unwrap();
        assert!(cert.ok, "{:?}", cert.lines);
    }

    #[test]
    fn functor_induced_morphism_is_geometric() {
        let f = pick_b();
        let src = small_corpus(&f.target); // F = Psh(D): corpus over D
        let dst = small_corpus(&f.source); // E = Psh(C)
        let gm = GeometricMorphism::from_functor(f, Guard::default());
        let cert = verify_geometric(&gm, &src, &dst, 6, &Guard::default()).unwrap();
        assert!(cert.ok, "{:?}", cert.lines);
    }

    #[test]
    fn left_kan_pair_fails_a_left_exactness_probe() {
        // Picking the non-terminal object a: f_!(1) = y(a), which is not
        // terminal, so the terminal probe fails while the triangles hold.
        let one = Arc::new(fincat::terminal_category());
        let arrow = Arc::new(fincat::walking_arrow());
        let a = arrow.object_by_name("a").unwrap();
        let f =
            FinFunctor::new(one, arrow.clone(), vec![a], vec![arrow.identity(a)]).unwrap();
        let src = small_corpus(&f.source);
        let dst = small_corpus(&f.target);
        let gm = GeometricMorphism::from_left_kan_pair(f, Guard::default());
        let cert = verify_geometric(&gm, &src, &dst, 4, &Guard::default()).unwrap();
        assert!(cert.triangles_ok);
        assert!(!cert.left_exact_ok, "f_! should fail a probe");
    }

    #[test]
    fn sheaf_inclusion_is_an_embedding() {
        let arrow = Arc::new(fincat::walking_arrow());
        let om = crate::classifier::omega(&arrow);
        let site = crate::sites::Site::largest(om);
        let gm = GeometricMorphism::sheaf_inclusion(site.clone(), Guard::default());
        // Corpus of sheaves: sheafifications.
        let sheaves: Vec<Presheaf> = small_corpus(&arrow)
            .into_iter()
            .map(|p| sheafify(&p, &site, &Guard::default()).unwrap().sheaf)
            .collect();
        assert!(is_embedding(&gm, &sheaves).unwrap().0);
        assert!(direct_image_fully_faithful(&gm, &sheaves, &Guard::default()).unwrap());
        let presheaves = small_corpus(&arrow);
        let cert = verify_geometric(&gm, &presheaves, &sheaves, 4, &Guard::default()).unwrap();
        assert!(cert.ok, "{:?}", cert.lines);
    }

    #[test]
    fn non_full_functor_gives_a_non_embedding() {
        // The unique functor from the discrete two-object category into the
        // terminal category is not full on hom-sets in the image direction,
        // and its induced direct image is not fully faithful.
        let d2 = Arc::new(fincat::discrete(&["i", "j"]));
        let one = Arc::new(fincat::terminal_category());
        let f = FinFunctor::new(
            d2.clone(),
            one.clone(),
            vec![Obj(0), Obj(0)],
            vec![one.identity(Obj(0)), one.identity(Obj(0))],
        )
        .unwrap();
        let gm = GeometricMorphism::from_functor(f, Guard::default());
        let dst_corpus = small_corpus(&d2);
        let (emb, witness) = is_embedding(&gm, &dst_corpus).unwrap();
        assert!(!emb);
        assert!(witness.is_some());
        assert!(!direct_image_fully_faithful(&gm, &dst_corpus, &Guard::default()).unwrap());
    }
}
