//! Points of a presheaf topos as flat set-valued functors, with flatness
//! witnessed by a cofiltered category of elements, and the dual lex-functor
//! enumeration for bases with finite limits.

use crate::error::{checked_pow, checked_product, Guard, TkError};
use crate::fincat::{find_equalizer, find_product, has_finite_limits, terminal_objects, Base, Mor, Obj};
use crate::psh::{set_functors_isomorphic, SetFunctor};

/// Witness data that the covariant category of elements is cofiltered.
#[derive(Clone, Debug)]
pub struct FlatnessCertificate {
    pub functor: SetFunctor,
    /// Some element `(c, x)`.
    pub nonempty: (Obj, usize),
    /// For each pair of elements, a span: `(apex, maps to each side)`.
    pub spans: Vec<(((Obj, usize), (Obj, usize)), ((Obj, usize), Mor, Mor))>,
    /// For each equalized parallel pair, an equalizing fork.
    pub parallels: Vec<((Mor, Mor, (Obj, usize)), ((Obj, usize), Mor))>,
}

#[derive(Clone, Debug)]
pub enum FlatnessFailure {
    Empty,
    NoSpan {
        left: (Obj, usize),
        right: (Obj, usize),
    },
    NoEqualizingFork {
        u: Mor,
        v: Mor,
        at: (Obj, usize),
    },
}

fn elements(m: &SetFunctor) -> Vec<(Obj, usize)> {
    let mut out = Vec::new();
    for c in m.base().objects() {
        for x in 0..m.size(c) {
            out.push((c, x));
        }
    }
    out
}

/// Decide flatness by searching the three families of cones.
pub fn flatness(m: &SetFunctor) -> Result<FlatnessCertificate, FlatnessFailure> {
    let base = m.base().clone();
    let elems = elements(m);
    if elems.is_empty() {
        return Err(FlatnessFailure::Empty);
    }
    let nonempty = elems[0];

    // Binary spans: for (c1, x1), (c2, x2) find (c, x) with f1 : c → c1,
    // f2 : c → c2, M(f1)(x) = x1, M(f2)(x) = x2.
    let mut spans = Vec::new();
    for &(c1, x1) in &elems {
        for &(c2, x2) in &elems {
            let mut found = None;
            'search: for &(c, x) in &elems {
                for f1 in base.hom(c, c1) {
                    if m.apply(f1, x) != x1 {
                        continue;
                    }
                    for f2 in base.hom(c, c2) {
                        if m.apply(f2, x) == x2 {
                            found = Some(((c, x), f1, f2));
                            break 'search;
                        }
                    }
                }
            }
            match found {
                Some(w) => spans.push((((c1, x1), (c2, x2)), w)),
                None => {
                    return Err(FlatnessFailure::NoSpan {
                        left: (c1, x1),
                        right: (c2, x2),
                    })
                }
            }
        }
    }

    // Parallel pairs u, v : c1 → c2 equalized at x1 need a fork
    // w : c → c1 with u∘w = v∘w and M(w)(x) = x1.
    let mut parallels = Vec::new();
    for u in base.mors() {
        for v in base.mors() {
            if u == v || base.dom(u) != base.dom(v) || base.cod(u) != base.cod(v) {
                continue;
            }
            let c1 = base.dom(u);
            for x1 in 0..m.size(c1) {
                if m.apply(u, x1) != m.apply(v, x1) {
                    continue;
                }
                let mut found = None;
                'fork: for &(c, x) in &elems {
                    for w in base.hom(c, c1) {
                        if m.apply(w, x) != x1 {
                            continue;
                        }
                        if base.compose(u, w) == base.compose(v, w) {
                            found = Some(((c, x), w));
                            break 'fork;
                        }
                    }
                }
                match found {
                    Some(w) => parallels.push(((u, v, (c1, x1)), w)),
                    None => {
                        return Err(FlatnessFailure::NoEqualizingFork {
                            u,
                            v,
                            at: (c1, x1),
                        })
                    }
                }
            }
        }
    }

    Ok(FlatnessCertificate {
        functor: m.clone(),
        nonempty,
        spans,
        parallels,
    })
}

/// Enumerate all covariant set-valued functors with carrier sizes at most
/// `bound`, in canonical order.
pub fn enumerate_set_functors(
    base: &Base,
    bound: usize,
    guard: &Guard,
) -> Result<Vec<SetFunctor>, TkError> {
    // Candidate count across all size vectors.
    let mut total: u128 = 0;
    let nobj = base.object_count();
    let size_vectors = crate::util::all_tuples(&vec![bound + 1; nobj]);
    for sizes in &size_vectors {
        let per = checked_product(base.mors().map(|f| {
            let (a, b) = (base.dom(f), base.cod(f));
            checked_pow(sizes[b.0] as u128, sizes[a.0] as u128)
        }));
        total = total.saturating_add(per);
    }
    guard.check("set functor enumeration", total)?;

    let mut out = Vec::new();
    for sizes in size_vectors {
        // Backtrack over morphisms in index order; identities are forced.
        let nmor = base.mor_count();
        let mut actions: Vec<Vec<usize>> = Vec::new();

        fn consistent(base: &Base, actions: &[Vec<usize>], sizes: &[usize]) -> bool {
            let k = actions.len();
            for g in base.mors() {
                for f in base.mors() {
                    if let Some(gf) = base.compose(g, f) {
                        if g.0 < k && f.0 < k && gf.0 < k {
                            let a = base.dom(f);
                            for x in 0..sizes[a.0] {
                                if actions[gf.0][x] != actions[g.0][actions[f.0][x]] {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
            true
        }

        fn recurse(
            base: &Base,
            sizes: &[usize],
            nmor: usize,
            actions: &mut Vec<Vec<usize>>,
            out: &mut Vec<SetFunctor>,
        ) {
            if actions.len() == nmor {
                if let Ok(m) = SetFunctor::new(base.clone(), sizes.to_vec(), actions.clone()) {
                    out.push(m);
                }
                return;
            }
            let f = Mor(actions.len());
            let (a, b) = (base.dom(f), base.cod(f));
            if base.is_identity(f) {
                actions.push((0..sizes[a.0]).collect());
                if consistent(base, actions, sizes) {
                    recurse(base, sizes, nmor, actions, out);
                }
                actions.pop();
                return;
            }
            let (dom_n, cod_n) = (sizes[a.0], sizes[b.0]);
            if dom_n > 0 && cod_n == 0 {
                return;
            }
            let mut func = vec![0usize; dom_n];
            loop {
                actions.push(func.clone());
                if consistent(base, actions, sizes) {
                    recurse(base, sizes, nmor, actions, out);
                }
                actions.pop();
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

        recurse(base, &sizes, nmor, &mut actions, &mut out);
    }
    Ok(out)
}

/// Points of the presheaf topos over `base`: flat functors with carrier
/// sizes ≤ `bound`, deduplicated up to natural isomorphism, each with its
/// flatness certificate.
pub fn points(base: &Base, bound: usize, guard: &Guard) -> Result<Vec<FlatnessCertificate>, TkError> {
    let mut reps: Vec<FlatnessCertificate> = Vec::new();
    for m in enumerate_set_functors(base, bound, guard)? {
        if let Ok(cert) = flatness(&m) {
            if !reps
                .iter()
                .any(|r| set_functors_isomorphic(&r.functor, &m))
            {
                reps.push(cert);
            }
        }
    }
    Ok(reps)
}

/// Enumerate finite-limit-preserving covariant functors with carrier sizes
/// ≤ `bound`, up to natural isomorphism. Errors when the base does not
/// have finite limits.
pub fn enumerate_lex_functors(
    base: &Base,
    bound: usize,
    guard: &Guard,
) -> Result<Vec<SetFunctor>, TkError> {
    if !has_finite_limits(base) {
        return Err(TkError::NotLex(
            "the base category does not have finite limits".into(),
        ));
    }
    let terminal = terminal_objects(base)[0];
    let mut reps: Vec<SetFunctor> = Vec::new();
    'next: for m in enumerate_set_functors(base, bound, guard)? {
        // Terminal probe.
        if m.size(terminal) != 1 {
            continue;
        }
        // Binary product probes: M(a×b) → M(a)×M(b) bijective via the
        // projections.
        for a in base.objects() {
            for b in base.objects() {
                let (p, pi1, pi2) = find_product(base, a, b).expect("finite limits exist");
                let mut seen = std::collections::HashSet::new();
                for x in 0..m.size(p) {
                    if !seen.insert((m.apply(pi1, x), m.apply(pi2, x))) {
                        continue 'next;
                    }
                }
                if seen.len() != m.size(a) * m.size(b) {
                    continue 'next;
                }
            }
        }
        // Equalizer probes.
        for u in base.mors() {
            for v in base.mors() {
                if base.dom(u) != base.dom(v) || base.cod(u) != base.cod(v) {
                    continue;
                }
                let (e, i) = find_equalizer(base, u, v).expect("finite limits exist");
                let mut seen = std::collections::HashSet::new();
                for x in 0..m.size(e) {
                    if !seen.insert(m.apply(i, x)) {
                        continue 'next;
                    }
                }
                let expected: std::collections::HashSet<usize> = (0..m.size(base.dom(u)))
                    .filter(|&x| m.apply(u, x) == m.apply(v, x))
                    .collect();
                if seen != expected {
                    continue 'next;
                }
            }
        }
        if !reps.iter().any(|r| set_functors_isomorphic(r, &m)) {
            reps.push(m);
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;
    use std::sync::Arc;

    #[test]
    fn the_point_topos_has_one_point_per_bound() {
        let one = Arc::new(fincat::terminal_category());
        // Flat functors on the terminal category are the nonempty sets whose
        // elements category is cofiltered: parallel pairs are trivial, spans
        // need a common ancestor, so only singletons qualify.
        let pts = points(&one, 1, &Guard::default()).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].functor.sizes(), &[1]);
    }

    #[test]
    fn z2_has_exactly_the_regular_torsor_as_point() {
        let z2 = Arc::new(fincat::cyclic_group(2));
        let pts = points(&z2, 4, &Guard::default()).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].functor.total_size(), 2);
        // Free and transitive: the swap action.
        let g = z2.mor_by_name("g").unwrap();
        assert_eq!(pts[0].functor.apply(g, 0), 1);
    }

    #[test]
    fn flatness_failures_carry_witnesses() {
        let z2 = Arc::new(fincat::cyclic_group(2));
        // Trivial 2-element action: spans between the two fixed points fail.
        let m = SetFunctor::new(z2.clone(), vec![2], vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert!(matches!(flatness(&m), Err(FlatnessFailure::NoSpan { .. })));
        let empty = SetFunctor::new(z2, vec![0], vec![vec![], vec![]]).unwrap();
        assert!(matches!(flatness(&empty), Err(FlatnessFailure::Empty)));
    }

    #[test]
    fn flat_and_lex_enumerations_coincide_on_finite_limit_bases() {
        for base in [
            Arc::new(fincat::terminal_category()),
            Arc::new(fincat::walking_arrow()),
            Arc::new(fincat::chain(3)),
        ] {
            let bound = 2;
            let flats = points(&base, bound, &Guard::default()).unwrap();
            let lexes = enumerate_lex_functors(&base, bound, &Guard::default()).unwrap();
            assert_eq!(flats.len(), lexes.len(), "on {base}");
            for cert in &flats {
                assert!(lexes
                    .iter()
                    .any(|l| set_functors_isomorphic(l, &cert.functor)));
            }
        }
    }

    #[test]
    fn lex_enumeration_rejects_bases_without_finite_limits() {
        let z2 = Arc::new(fincat::cyclic_group(2));
        assert!(matches!(
            enumerate_lex_functors(&z2, 2, &Guard::default()),
            Err(TkError::NotLex(_))
        ));
    }
}
