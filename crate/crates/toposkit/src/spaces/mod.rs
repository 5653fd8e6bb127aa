//! Finite topological spaces, frames, bundles, and the geometry built on
//! them: canonical sites, sheaves of sections, étale spaces, sobriety,
//! spatiality, and locale recovery from subobjects of the terminal sheaf.
//!
//! Spaces are finite, so arbitrary unions degenerate to finite ones and
//! every frame axiom is checked in full.

mod etale;

pub use etale::{
    bundles_isomorphic, enumerate_bundle_maps, etale_space, is_etale, sections_sheaf, EtaleSpace,
    SectionsSheaf,
};

use crate::classifier::{omega, Subpresheaf};
use crate::error::{Guard, TkError};
use crate::fincat::{Base, CategoryBuilder, Obj};
use crate::psh::Presheaf;
use crate::sites::{GrothendieckTopology, Site};
use std::collections::BTreeSet;
use std::sync::Arc;

/// A finite topological space: named points and a family of open sets
/// containing ∅ and the whole set, closed under union and intersection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSpace {
    points: Vec<String>,
    opens: Vec<BTreeSet<usize>>,
}

impl FinSpace {
    /// Validate the family (with ∅ and the full set added implicitly) and
    /// sort the opens canonically: by size, then lexicographically.
    pub fn new(points: Vec<String>, mut opens: Vec<BTreeSet<usize>>) -> Result<FinSpace, TkError> {
        let n = points.len();
        {
            let mut seen = std::collections::HashSet::new();
            for p in &points {
                if !seen.insert(p) {
                    return Err(TkError::invalid("space", format!("duplicate point `{p}`")));
                }
            }
        }
        for o in &opens {
            if o.iter().any(|&x| x >= n) {
                return Err(TkError::invalid("space", "open set mentions an unknown point"));
            }
        }
        opens.push(BTreeSet::new());
        opens.push((0..n).collect());
        opens.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        opens.dedup();
        for i in 0..opens.len() {
            for j in (i + 1)..opens.len() {
                let union: BTreeSet<usize> = opens[i].union(&opens[j]).cloned().collect();
                let inter: BTreeSet<usize> = opens[i].intersection(&opens[j]).cloned().collect();
                if !opens.contains(&union) {
                    return Err(TkError::invalid(
                        "space",
                        format!("not closed under union: {:?} ∪ {:?}", opens[i], opens[j]),
                    ));
                }
                if !opens.contains(&inter) {
                    return Err(TkError::invalid(
                        "space",
                        format!("not closed under intersection: {:?} ∩ {:?}", opens[i], opens[j]),
                    ));
                }
            }
        }
        Ok(FinSpace { points, opens })
    }

    /// Close a subbasis under unions and intersections.
    pub fn generate(points: Vec<String>, subbasis: Vec<BTreeSet<usize>>) -> Result<FinSpace, TkError> {
        let n = points.len();
        let mut family: BTreeSet<BTreeSet<usize>> = subbasis.into_iter().collect();
        family.insert(BTreeSet::new());
        family.insert((0..n).collect());
        loop {
            let mut new = Vec::new();
            for a in &family {
                for b in &family {
                    let u: BTreeSet<usize> = a.union(b).cloned().collect();
                    let i: BTreeSet<usize> = a.intersection(b).cloned().collect();
                    if !family.contains(&u) {
                        new.push(u);
                    }
                    if !family.contains(&i) {
                        new.push(i);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            family.extend(new);
        }
        FinSpace::new(points, family.into_iter().collect())
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn point_name(&self, x: usize) -> &str {
        &self.points[x]
    }

    pub fn point_by_name(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    pub fn opens(&self) -> &[BTreeSet<usize>] {
        &self.opens
    }

    pub fn open_index(&self, o: &BTreeSet<usize>) -> Option<usize> {
        self.opens.iter().position(|u| u == o)
    }

    pub fn is_open(&self, o: &BTreeSet<usize>) -> bool {
        self.opens.contains(o)
    }

    /// The smallest open containing `x` (an intersection of opens, hence open).
    pub fn minimal_open(&self, x: usize) -> BTreeSet<usize> {
        let mut acc: BTreeSet<usize> = (0..self.point_count()).collect();
        for o in &self.opens {
            if o.contains(&x) {
                acc = acc.intersection(o).cloned().collect();
            }
        }
        acc
    }

    /// Closed sets: complements of opens, in the complementary order.
    pub fn closed_sets(&self) -> Vec<BTreeSet<usize>> {
        let all: BTreeSet<usize> = (0..self.point_count()).collect();
        self.opens
            .iter()
            .map(|o| all.difference(o).cloned().collect())
            .collect()
    }

    pub fn closure_of_point(&self, x: usize) -> BTreeSet<usize> {
        // Smallest closed set containing x.
        let mut best: Option<BTreeSet<usize>> = None;
        for c in self.closed_sets() {
            if c.contains(&x) && best.as_ref().map_or(true, |b| c.len() < b.len()) {
                best = Some(c);
            }
        }
        best.expect("the whole space is closed")
    }

    /// T0: distinct points are separated by some open.
    pub fn is_t0(&self) -> bool {
        let n = self.point_count();
        (0..n).all(|x| {
            ((x + 1)..n).all(|y| {
                self.opens
                    .iter()
                    .any(|o| o.contains(&x) != o.contains(&y))
            })
        })
    }

    pub fn render_open(&self, o: &BTreeSet<usize>) -> String {
        let names: Vec<&str> = o.iter().map(|&x| self.point_name(x)).collect();
        format!("{{{}}}", names.join(" "))
    }

    pub fn singleton() -> FinSpace {
        FinSpace::new(vec!["x".into()], vec![]).unwrap()
    }

    /// Two points 0, 1 with opens ∅, {1}, {0, 1}.
    pub fn sierpinski() -> FinSpace {
        FinSpace::new(
            vec!["0".into(), "1".into()],
            vec![[1usize].into_iter().collect()],
        )
        .unwrap()
    }

    pub fn discrete(n: usize) -> FinSpace {
        let points: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        let opens = (0..(1usize << n))
            .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
            .collect();
        FinSpace::new(points, opens).unwrap()
    }

    pub fn indiscrete(n: usize) -> FinSpace {
        let points: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        FinSpace::new(points, vec![]).unwrap()
    }
}

/// A frame presented by tables: a bounded distributive lattice (finiteness
/// makes "all joins" mean finite joins).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub labels: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub top: usize,
    pub bottom: usize,
}

impl Frame {
    /// Build from a partial order by computing joins and meets; errors when
    /// a bound is missing or distributivity fails.
    pub fn from_poset(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Frame, TkError> {
        let n = labels.len();
        if n == 0 || leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(TkError::shape("a frame needs a nonempty square order table"));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(TkError::invalid("frame", "order is not reflexive"));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(TkError::invalid("frame", "order is not antisymmetric"));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(TkError::invalid("frame", "order is not transitive"));
                    }
                }
            }
        }
        let lub = |a: usize, b: usize| -> Option<usize> {
            let ubs: Vec<usize> = (0..n).filter(|&u| leq[a][u] && leq[b][u]).collect();
            ubs.iter()
                .find(|&&u| ubs.iter().all(|&v| leq[u][v]))
                .copied()
        };
        let glb = |a: usize, b: usize| -> Option<usize> {
            let lbs: Vec<usize> = (0..n).filter(|&l| leq[l][a] && leq[l][b]).collect();
            lbs.iter()
                .find(|&&l| lbs.iter().all(|&m| leq[m][l]))
                .copied()
        };
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                join[a][b] = lub(a, b).ok_or_else(|| {
                    TkError::invalid("frame", format!("join of {a} and {b} does not exist"))
                })?;
                meet[a][b] = glb(a, b).ok_or_else(|| {
                    TkError::invalid("frame", format!("meet of {a} and {b} does not exist"))
                })?;
            }
        }
        let top = (0..n)
            .find(|&t| (0..n).all(|x| leq[x][t]))
            .ok_or_else(|| TkError::invalid("frame", "no top element"))?;
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| leq[b][x]))
            .ok_or_else(|| TkError::invalid("frame", "no bottom element"))?;
        // Finite meets distribute over joins.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]] {
                        return Err(TkError::invalid(
                            "frame",
                            format!("distributivity fails at ({a}, {b}, {c})"),
                        ));
                    }
                }
            }
        }
        Ok(Frame {
            labels,
            leq,
            join,
            meet,
            top,
            bottom,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The two-element frame {⊥ < ⊤}.
    pub fn two() -> Frame {
        Frame::from_poset(
            vec!["bot".into(), "top".into()],
            vec![vec![true, true], vec![false, true]],
        )
        .unwrap()
    }

    /// Order isomorphism test via an explicit mapping.
    pub fn is_order_iso(&self, other: &Frame, map: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &m in map {
            if m >= n || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        (0..n).all(|a| (0..n).all(|b| self.leq[a][b] == other.leq[map[a]][map[b]]))
    }

    /// Find an order isomorphism to another frame by backtracking.
    pub fn find_iso(&self, other: &Frame) -> Option<Vec<usize>> {
        let n = self.len();
        if other.len() != n {
            return None;
        }
        fn extend(a: &Frame, b: &Frame, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let i = map.len();
            if i == a.len() {
                return true;
            }
            for cand in 0..b.len() {
                if used[cand] {
                    continue;
                }
                let ok = (0..i).all(|j| {
                    a.leq[j][i] == b.leq[map[j]][cand] && a.leq[i][j] == b.leq[cand][map[j]]
                });
                if ok {
                    map.push(cand);
                    used[cand] = true;
                    if extend(a, b, map, used) {
                        return true;
                    }
                    used[cand] = false;
                    map.pop();
                }
            }
            false
        }
        let mut map = Vec::new();
        let mut used = vec![false; n];
        extend(self, other, &mut map, &mut used).then_some(map)
    }
}

/// A frame map: preserves order, binary joins and meets, top and bottom
/// (finite joins and meets in full, by finiteness).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameMap {
    pub source: Frame,
    pub target: Frame,
    pub map: Vec<usize>,
}

impl FrameMap {
    pub fn new(source: Frame, target: Frame, map: Vec<usize>) -> Result<FrameMap, TkError> {
        let n = source.len();
        if map.len() != n || map.iter().any(|&m| m >= target.len()) {
            return Err(TkError::shape("frame map table does not match"));
        }
        for a in 0..n {
            for b in 0..n {
                if source.leq[a][b] && !target.leq[map[a]][map[b]] {
                    return Err(TkError::invalid("frame map", "order not preserved"));
                }
                if map[source.join[a][b]] != target.join[map[a]][map[b]] {
                    return Err(TkError::invalid("frame map", "joins not preserved"));
                }
                if map[source.meet[a][b]] != target.meet[map[a]][map[b]] {
                    return Err(TkError::invalid("frame map", "meets not preserved"));
                }
            }
        }
        if map[source.top] != target.top {
            return Err(TkError::invalid("frame map", "top not preserved"));
        }
        if map[source.bottom] != target.bottom {
            return Err(TkError::invalid("frame map", "bottom not preserved"));
        }
        Ok(FrameMap {
            source,
            target,
            map,
        })
    }
}

/// A continuous map of finite spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMap {
    pub source: FinSpace,
    pub target: FinSpace,
    pub map: Vec<usize>,
}

impl SpaceMap {
    /// Checks continuity; the witness on failure names the offending open.
    pub fn new(source: FinSpace, target: FinSpace, map: Vec<usize>) -> Result<SpaceMap, TkError> {
        if map.len() != source.point_count() || map.iter().any(|&y| y >= target.point_count()) {
            return Err(TkError::shape("point map does not match the spaces"));
        }
        for v in target.opens() {
            let preimage: BTreeSet<usize> = (0..source.point_count())
                .filter(|&x| v.contains(&map[x]))
                .collect();
            if !source.is_open(&preimage) {
                return Err(TkError::invalid(
                    "space map",
                    format!(
                        "not continuous: preimage of {} is not open",
                        target.render_open(v)
                    ),
                ));
            }
        }
        Ok(SpaceMap {
            source,
            target,
            map,
        })
    }

    pub fn preimage(&self, v: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.source.point_count())
            .filter(|&x| v.contains(&self.map[x]))
            .collect()
    }
}

/// Everything the sheaf machinery needs about one space: its frame, the
/// open-poset category, and the canonical site where a sieve covers iff the
/// union of its members' domains is the whole open.
#[derive(Clone, Debug)]
pub struct SpaceSite {
    pub space: FinSpace,
    pub frame: Frame,
    pub cat: Base,
    pub site: Site,
}

/// The frame of opens and the poset category `Open(X)`.
pub fn open_frame(x: &FinSpace) -> (Frame, Base) {
    let opens = x.opens();
    let labels: Vec<String> = opens.iter().map(|o| x.render_open(o)).collect();
    let leq: Vec<Vec<bool>> = opens
        .iter()
        .map(|u| opens.iter().map(|v| u.is_subset(v)).collect())
        .collect();
    let frame = Frame::from_poset(labels.clone(), leq.clone()).expect("open sets form a frame");
    let mut b = CategoryBuilder::new();
    let objs: Vec<Obj> = labels
        .iter()
        .map(|l| b.add_object(l).expect("labels are unique"))
        .collect();
    let n = opens.len();
    let mut arrows = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i][j] {
                let m = b
                    .add_morphism(&format!("le_{i}_{j}"), objs[i], objs[j])
                    .unwrap();
                arrows[i][j] = Some(m);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if leq[i][j] && leq[j][k] {
                    let f = if i == j { None } else { arrows[i][j] };
                    let g = if j == k { None } else { arrows[j][k] };
                    let h = if i == k { None } else { arrows[i][k] };
                    match (f, g) {
                        (Some(f), Some(g)) => {
                            let hh = h.unwrap_or_else(|| unreachable!("strictly increasing"));
                            b.set_composite(g, f, hh).unwrap();
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    let cat = Arc::new(b.finish());
    debug_assert!(crate::fincat::validate_category(&cat).ok());
    (frame, cat)
}

/// The canonical topology: a sieve on `U` covers iff its members' domains
/// union to `U`.
pub fn canonical_topology(x: &FinSpace) -> SpaceSite {
    let (frame, cat) = open_frame(x);
    let om = omega(&cat);
    let covers = cat
        .objects()
        .map(|u_obj| {
            let u = &x.opens()[u_obj.0];
            (0..om.sieves[u_obj.0].len())
                .filter(|&s| {
                    let sieve = om.sieve(u_obj, s);
                    let mut union: BTreeSet<usize> = BTreeSet::new();
                    for &f in &sieve.members {
                        union.extend(x.opens()[cat.dom(f).0].iter().cloned());
                    }
                    &union == u
                })
                .collect()
        })
        .collect();
    let topology = GrothendieckTopology { covers };
    let site = Site::new(om, topology).expect("the canonical covers satisfy the axioms");
    SpaceSite {
        space: x.clone(),
        frame,
        cat,
        site,
    }
}

/// The inverse-image frame map `Open(Y) → Open(X)` of a continuous map.
pub fn open_functor(f: &SpaceMap) -> Result<FrameMap, TkError> {
    let (src_frame, _) = open_frame(&f.target);
    let (dst_frame, _) = open_frame(&f.source);
    let map = f
        .target
        .opens()
        .iter()
        .map(|v| {
            f.source
                .open_index(&f.preimage(v))
                .expect("continuity was checked")
        })
        .collect();
    FrameMap::new(src_frame, dst_frame, map)
}

/// A bundle: a continuous projection from a total space onto a base space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub total: FinSpace,
    pub base: FinSpace,
    pub proj: Vec<usize>,
}

impl Bundle {
    pub fn new(total: FinSpace, base: FinSpace, proj: Vec<usize>) -> Result<Bundle, TkError> {
        SpaceMap::new(total.clone(), base.clone(), proj.clone()).map_err(|_| {
            TkError::invalid("bundle", "projection is not continuous")
        })?;
        Ok(Bundle { total, base, proj })
    }

    pub fn identity(x: &FinSpace) -> Bundle {
        Bundle {
            total: x.clone(),
            base: x.clone(),
            proj: (0..x.point_count()).collect(),
        }
    }
}

/// Subobjects of the terminal sheaf, as a frame, with the isomorphism to
/// `Open(X)` exhibited.
#[derive(Clone, Debug)]
pub struct LocaleRecovery {
    pub frame: Frame,
    /// `iso[open index] = index of the corresponding subsheaf of 1`.
    pub iso_from_open: Vec<usize>,
    pub subsheaves: Vec<Subpresheaf>,
}

/// Compute `Sub(1)` in the sheaf topos of the canonical site and exhibit
/// the isomorphism with the frame of opens.
pub fn recover_locale(site: &SpaceSite, guard: &Guard) -> Result<LocaleRecovery, TkError> {
    let one = Presheaf::terminal(site.cat.clone());
    let lattice = crate::classifier::subobjects(&one, guard)?;
    let mut subsheaves = Vec::new();
    for sub in &lattice.elems {
        let (p, _) = sub.to_presheaf(&one)?;
        if crate::sites::is_sheaf(&p, &site.site).is_sheaf {
            subsheaves.push(sub.clone());
        }
    }
    let n = subsheaves.len();
    let leq: Vec<Vec<bool>> = subsheaves
        .iter()
        .map(|s| subsheaves.iter().map(|t| s.leq(t)).collect())
        .collect();
    let labels: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let frame = Frame::from_poset(labels, leq)?;
    // The expected iso sends an open W to the subsheaf U ↦ {* iff U ⊆ W}.
    let mut iso_from_open = Vec::with_capacity(site.space.opens().len());
    for w in site.space.opens() {
        let expected = Subpresheaf {
            elems: site
                .space
                .opens()
                .iter()
                .map(|u| {
                    if u.is_subset(w) {
                        [0usize].into_iter().collect()
                    } else {
                        BTreeSet::new()
                    }
                })
                .collect(),
        };
        let idx = subsheaves
            .iter()
            .position(|s| s == &expected)
            .ok_or_else(|| TkError::invalid("locale recovery", "principal subsheaf missing"))?;
        iso_from_open.push(idx);
    }
    Ok(LocaleRecovery {
        frame,
        iso_from_open,
        subsheaves,
    })
}

/// Sobriety report: witnesses are irreducible closed sets with their
/// generic points (a sober space has exactly one per set).
#[derive(Clone, Debug)]
pub struct SoberReport {
    pub sober: bool,
    pub witnesses: Vec<(BTreeSet<usize>, Vec<usize>)>,
}

/// A closed set is irreducible when it is nonempty and not covered by two
/// closed sets unless one of them already covers it.
pub fn is_sober(x: &FinSpace) -> SoberReport {
    let closed = x.closed_sets();
    let mut witnesses = Vec::new();
    let mut sober = true;
    for c in &closed {
        if c.is_empty() {
            continue;
        }
        let irreducible = closed.iter().all(|d| {
            closed.iter().all(|e| {
                let covers = c.iter().all(|p| d.contains(p) || e.contains(p));
                !covers || c.is_subset(d) || c.is_subset(e)
            })
        });
        if !irreducible {
            continue;
        }
        let generic: Vec<usize> = (0..x.point_count())
            .filter(|&p| &x.closure_of_point(p) == c)
            .collect();
        if generic.len() != 1 {
            sober = false;
        }
        witnesses.push((c.clone(), generic));
    }
    SoberReport { sober, witnesses }
}

/// All frame maps into the two-element frame, i.e. the points of the locale.
pub fn frame_points(l: &Frame) -> Vec<FrameMap> {
    let two = Frame::two();
    let n = l.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        let map: Vec<usize> = (0..n).map(|i| ((mask >> i) & 1) as usize).collect();
        if let Ok(fm) = FrameMap::new(l.clone(), two.clone(), map) {
            out.push(fm);
        }
    }
    out
}

/// Spatial: distinct elements are separated by some point.
pub fn is_spatial(l: &Frame) -> (bool, Option<(usize, usize)>) {
    let points = frame_points(l);
    for a in 0..l.len() {
        for b in (a + 1)..l.len() {
            if !points.iter().any(|p| p.map[a] != p.map[b]) {
                return (false, Some((a, b)));
            }
        }
    }
    (true, None)
}

/// All topologies on `n` labeled points, one `FinSpace` per preorder
/// (finite spaces are exactly the preorders via their up-set topologies).
pub fn all_spaces(n: usize) -> Vec<FinSpace> {
    assert!(n <= 4, "intended for small oracle sweeps");
    let points: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    if n == 0 {
        return vec![FinSpace::new(points, vec![]).unwrap()];
    }
    let mut out = Vec::new();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter_map(move |j| (i != j).then_some((i, j))))
        .collect();
    'mask: for mask in 0u64..(1u64 << pairs.len()) {
        let mut rel = vec![vec![false; n]; n];
        for i in 0..n {
            rel[i][i] = true;
        }
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                rel[i][j] = true;
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if rel[i][j] && rel[j][k] && !rel[i][k] {
                        continue 'mask;
                    }
                }
            }
        }
        // Opens are the up-sets of the preorder.
        let opens: Vec<BTreeSet<usize>> = (0..(1u64 << n))
            .filter_map(|omask| {
                let set: BTreeSet<usize> = (0..n).filter(|i| omask & (1 << i) != 0).collect();
                let up_closed = set
                    .iter()
                    .all(|&i| (0..n).all(|j| !rel[i][j] || set.contains(&j)));
                up_closed.then_some(set)
            })
            .collect();
        out.push(FinSpace::new(points.clone(), opens).unwrap());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_space_has_the_two_element_frame() {
        let x = FinSpace::singleton();
        let (frame, cat) = open_frame(&x);
        assert_eq!(frame.len(), 2);
        assert_eq!(cat.object_count(), 2);
    }

    #[test]
    fn sierpinski_space_has_the_three_chain_frame() {
        let x = FinSpace::sierpinski();
        let (frame, _) = open_frame(&x);
        assert_eq!(frame.len(), 3);
        // A chain: the order is total.
        for a in 0..3 {
            for b in 0..3 {
                assert!(frame.leq[a][b] || frame.leq[b][a]);
            }
        }
    }

    #[test]
    fn indiscrete_two_points_has_the_singleton_frame() {
        let x = FinSpace::indiscrete(2);
        let (frame, _) = open_frame(&x);
        let (point_frame, _) = open_frame(&FinSpace::singleton());
        assert_eq!(frame.len(), 2);
        assert!(frame.find_iso(&point_frame).is_some());
    }

    #[test]
    fn canonical_covers_on_the_singleton() {
        let site = canonical_topology(&FinSpace::singleton());
        // Bottom open ∅: covered by the empty sieve and the maximal one.
        let empty_obj = Obj(0);
        assert_eq!(site.site.topology.covers[empty_obj.0].len(), 2);
        // Top open: only the maximal sieve's union reaches the point.
        let top_obj = Obj(1);
        let covering: Vec<usize> = site.site.topology.covers[top_obj.0].iter().cloned().collect();
        for s in covering {
            let sieve = site.site.omega.sieve(top_obj, s);
            assert!(sieve.members.iter().any(|&f| site.cat.dom(f) == top_obj));
        }
    }

    #[test]
    fn discrete_two_point_space_is_covered_by_its_singletons() {
        let x = FinSpace::discrete(2);
        let site = canonical_topology(&x);
        let full: BTreeSet<usize> = [0, 1].into_iter().collect();
        let top_obj = Obj(x.open_index(&full).unwrap());
        // The sieve generated by the two singleton inclusions covers.
        let idx: Vec<usize> = site.site.topology.covers[top_obj.0].iter().cloned().collect();
        assert!(!idx.is_empty());
        let has_proper_cover = idx.iter().any(|&s| {
            let sieve = site.site.omega.sieve(top_obj, s);
            !sieve.members.contains(&site.cat.identity(top_obj))
        });
        assert!(has_proper_cover);
    }

    #[test]
    fn open_functor_for_the_open_point_inclusion() {
        let point = FinSpace::singleton();
        let sier = FinSpace::sierpinski();
        let open_pt = sier.point_by_name("1").unwrap();
        let incl = SpaceMap::new(point.clone(), sier.clone(), vec![open_pt]).unwrap();
        let fm = open_functor(&incl).unwrap();
        // Open(Sierpiński) = (∅, {1}, {0,1}) → Open(pt): ∅↦∅, {1}↦pt, all↦pt.
        assert_eq!(fm.map, vec![0, 1, 1]);
        // A constant map to the closed point is also continuous; to the open
        // point of the 3-chain it maps everything nontrivial to the top.
        let closed_pt = sier.point_by_name("0").unwrap();
        let const_closed = SpaceMap::new(point.clone(), sier.clone(), vec![closed_pt]).unwrap();
        let fm2 = open_functor(&const_closed).unwrap();
        assert_eq!(fm2.map, vec![0, 0, 1]);
    }

    #[test]
    fn discontinuous_maps_are_rejected_with_a_witness() {
        let sier = FinSpace::sierpinski();
        let discrete1 = FinSpace::singleton();
        // Map the Sierpiński space to a point: fine.
        assert!(SpaceMap::new(sier.clone(), discrete1, vec![0, 0]).is_ok());
        // Swap on Sierpiński is discontinuous.
        let swap = SpaceMap::new(sier.clone(), sier.clone(), vec![1, 0]);
        assert!(matches!(swap, Err(TkError::Invalid { .. })));
    }

    #[test]
    fn sobriety_fixtures() {
        assert!(is_sober(&FinSpace::sierpinski()).sober);
        let report = is_sober(&FinSpace::indiscrete(2));
        assert!(!report.sober);
        // The whole space is irreducible with two generic points.
        assert!(report.witnesses.iter().any(|(_, g)| g.len() == 2));
        for n in 1..=3 {
            assert!(is_sober(&FinSpace::discrete(n)).sober);
        }
    }

    #[test]
    fn sober_iff_t0_on_all_small_spaces() {
        for n in 0..=3 {
            for x in all_spaces(n) {
                assert_eq!(is_sober(&x).sober, x.is_t0(), "{:?}", x);
            }
        }
    }

    #[test]
    fn frame_point_counts() {
        let (pt_frame, _) = open_frame(&FinSpace::singleton());
        assert_eq!(frame_points(&pt_frame).len(), 1);
        assert!(is_spatial(&pt_frame).0);
        let (sier_frame, _) = open_frame(&FinSpace::sierpinski());
        assert_eq!(frame_points(&sier_frame).len(), 2);
        assert!(is_spatial(&sier_frame).0);
    }

    #[test]
    fn frames_of_small_spaces_are_spatial() {
        for n in 0..=3 {
            for x in all_spaces(n) {
                let (frame, _) = open_frame(&x);
                assert!(is_spatial(&frame).0);
            }
        }
    }

    #[test]
    fn locale_recovery_matches_the_open_frame() {
        for x in [
            FinSpace::singleton(),
            FinSpace::sierpinski(),
            FinSpace::indiscrete(2),
            FinSpace::discrete(2),
        ] {
            let site = canonical_topology(&x);
            let rec = recover_locale(&site, &Guard::default()).unwrap();
            assert_eq!(rec.frame.len(), site.frame.len());
            // The principal-subsheaf map is an order isomorphism.
            assert!(site.frame.is_order_iso(&rec.frame, &rec.iso_from_open));
        }
    }

    #[test]
    fn indiscrete_and_point_recover_the_same_locale() {
        let a = recover_locale(&canonical_topology(&FinSpace::indiscrete(2)), &Guard::default())
            .unwrap();
        let b = recover_locale(&canonical_topology(&FinSpace::singleton()), &Guard::default())
            .unwrap();
        assert!(a.frame.find_iso(&b.frame).is_some());
    }

    #[test]
    fn space_counts_match_the_labeled_topology_numbers() {
        assert_eq!(all_spaces(0).len(), 1);
        assert_eq!(all_spaces(1).len(), 1);
        assert_eq!(all_spaces(2).len(), 4);
        assert_eq!(all_spaces(3).len(), 29);
    }
}
