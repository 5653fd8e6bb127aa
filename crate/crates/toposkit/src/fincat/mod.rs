//! Finite categories, functors and natural transformations as validated
//! first-class data.
//!
//! A category is presented by explicit object and morphism lists plus a
//! complete composition table; there is no generator/relation solving, so
//! validation is a finite check of totality, identity laws and
//! associativity. Objects and morphisms carry their declaration index, and
//! all enumerations downstream are ordered by those indices.

mod elements;
mod limits;

pub use elements::{elements_of_presheaf, elements_of_set_functor, ElementsCategory};
pub use limits::{find_equalizer, find_product, has_finite_limits, terminal_objects};

use crate::error::TkError;
use std::fmt;
use std::sync::Arc;

/// Index of an object in its category.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Obj(pub usize);

/// Index of a morphism in its category.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mor(pub usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MorData {
    pub name: String,
    pub dom: Obj,
    pub cod: Obj,
}

/// A finite category: object list, morphism list, identity table and a
/// composition table indexed as `compose[g][f] = g∘f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinCategory {
    objects: Vec<String>,
    mors: Vec<MorData>,
    identities: Vec<Mor>,
    compose: Vec<Vec<Option<Mor>>>,
}

pub type Base = Arc<FinCategory>;

impl FinCategory {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn mor_count(&self) -> usize {
        self.mors.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> {
        (0..self.objects.len()).map(Obj)
    }

    pub fn mors(&self) -> impl Iterator<Item = Mor> {
        (0..self.mors.len()).map(Mor)
    }

    pub fn obj_name(&self, a: Obj) -> &str {
        &self.objects[a.0]
    }

    pub fn mor_name(&self, f: Mor) -> &str {
        &self.mors[f.0].name
    }

    pub fn dom(&self, f: Mor) -> Obj {
        self.mors[f.0].dom
    }

    pub fn cod(&self, f: Mor) -> Obj {
        self.mors[f.0].cod
    }

    pub fn identity(&self, a: Obj) -> Mor {
        self.identities[a.0]
    }

    pub fn is_identity(&self, f: Mor) -> bool {
        self.identities.contains(&f)
    }

    /// `g∘f`, defined exactly when `cod f = dom g` in a valid category.
    pub fn compose(&self, g: Mor, f: Mor) -> Option<Mor> {
        self.compose[g.0][f.0]
    }

    /// Morphisms with codomain `a`, in index order.
    pub fn mors_into(&self, a: Obj) -> Vec<Mor> {
        self.mors().filter(|&f| self.cod(f) == a).collect()
    }

    /// Morphisms with domain `a`, in index order.
    pub fn mors_from(&self, a: Obj) -> Vec<Mor> {
        self.mors().filter(|&f| self.dom(f) == a).collect()
    }

    /// Morphisms `a → b`, in index order.
    pub fn hom(&self, a: Obj, b: Obj) -> Vec<Mor> {
        self.mors()
            .filter(|&f| self.dom(f) == a && self.cod(f) == b)
            .collect()
    }

    pub fn object_by_name(&self, name: &str) -> Option<Obj> {
        self.objects.iter().position(|n| n == name).map(Obj)
    }

    pub fn mor_by_name(&self, name: &str) -> Option<Mor> {
        self.mors.iter().position(|m| m.name == name).map(Mor)
    }

    /// The opposite category: same objects and morphism names, domains and
    /// codomains swapped, composition transposed. An involution.
    pub fn opposite(&self) -> FinCategory {
        let mors = self
            .mors
            .iter()
            .map(|m| MorData {
                name: m.name.clone(),
                dom: m.cod,
                cod: m.dom,
            })
            .collect();
        let n = self.mors.len();
        let mut compose = vec![vec![None; n]; n];
        for g in 0..n {
            for f in 0..n {
                compose[g][f] = self.compose[f][g];
            }
        }
        FinCategory {
            objects: self.objects.clone(),
            mors,
            identities: self.identities.clone(),
            compose,
        }
    }
}

/// One violated law, with enough data to display a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CategoryViolation {
    /// The table defines `g∘f` although `cod f ≠ dom g`.
    CompositeOnNonComposable { g: Mor, f: Mor },
    /// `cod f = dom g` but the table has no entry.
    MissingComposite { g: Mor, f: Mor },
    /// `g∘f = h` but `h` is not a morphism `dom f → cod g`.
    CompositeTypeMismatch { g: Mor, f: Mor, h: Mor },
    /// `id∘f ≠ f` or `f∘id ≠ f`.
    IdentityLaw { f: Mor },
    /// `(h∘g)∘f ≠ h∘(g∘f)` for a composable triple.
    Associativity { h: Mor, g: Mor, f: Mor },
}

/// Validation report: empty `violations` means every law holds.
#[derive(Clone, Debug, Default)]
pub struct CategoryReport {
    pub violations: Vec<CategoryViolation>,
}

impl CategoryReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render(&self, cat: &FinCategory) -> String {
        if self.ok() {
            return "ok".to_string();
        }
        let name = |f: Mor| cat.mor_name(f).to_string();
        self.violations
            .iter()
            .map(|v| match v {
                CategoryViolation::CompositeOnNonComposable { g, f } => {
                    format!("composite on non-composable pair: {} . {}", name(*g), name(*f))
                }
                CategoryViolation::MissingComposite { g, f } => {
                    format!("missing composite: {} . {}", name(*g), name(*f))
                }
                CategoryViolation::CompositeTypeMismatch { g, f, h } => format!(
                    "composite {} . {} = {} has wrong domain or codomain",
                    name(*g),
                    name(*f),
                    name(*h)
                ),
                CategoryViolation::IdentityLaw { f } => {
                    format!("identity law fails at {}", name(*f))
                }
                CategoryViolation::Associativity { h, g, f } => format!(
                    "associativity fails on {} . {} . {}",
                    name(*h),
                    name(*g),
                    name(*f)
                ),
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Check every law instance; malformed input yields a failing report, never
/// a panic.
pub fn validate_category(cat: &FinCategory) -> CategoryReport {
    let mut report = CategoryReport::default();
    let n = cat.mor_count();
    for g in (0..n).map(Mor) {
        for f in (0..n).map(Mor) {
            let composable = cat.cod(f) == cat.dom(g);
            match cat.compose(g, f) {
                Some(h) if !composable => {
                    report
                        .violations
                        .push(CategoryViolation::CompositeOnNonComposable { g, f });
                    let _ = h;
                }
                Some(h) => {
                    if cat.dom(h) != cat.dom(f) || cat.cod(h) != cat.cod(g) {
                        report
                            .violations
                            .push(CategoryViolation::CompositeTypeMismatch { g, f, h });
                    }
                }
                None if composable => {
                    report
                        .violations
                        .push(CategoryViolation::MissingComposite { g, f });
                }
                None => {}
            }
        }
    }
    for f in cat.mors() {
        let idc = cat.identity(cat.cod(f));
        let idd = cat.identity(cat.dom(f));
        if cat.compose(idc, f) != Some(f) || cat.compose(f, idd) != Some(f) {
            report.violations.push(CategoryViolation::IdentityLaw { f });
        }
    }
    for f in cat.mors() {
        for g in cat.mors() {
            if cat.cod(f) != cat.dom(g) {
                continue;
            }
            for h in cat.mors() {
                if cat.cod(g) != cat.dom(h) {
                    continue;
                }
                let left = cat.compose(g, f).and_then(|gf| cat.compose(h, gf));
                let right = cat.compose(h, g).and_then(|hg| cat.compose(hg, f));
                if left != right || left.is_none() {
                    report
                        .violations
                        .push(CategoryViolation::Associativity { h: h, g, f });
                }
            }
        }
    }
    report
}

/// Incremental builder. Identities are created automatically when an object
/// is added (named `id_<object>`), and identity composites are filled in at
/// `finish` unless explicitly overridden.
#[derive(Debug, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    mors: Vec<MorData>,
    identities: Vec<Mor>,
    entries: Vec<(Mor, Mor, Mor)>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, name: &str) -> Result<Obj, TkError> {
        if self.objects.iter().any(|n| n == name) {
            return Err(TkError::invalid("category", format!("duplicate object `{name}`")));
        }
        let a = Obj(self.objects.len());
        self.objects.push(name.to_string());
        let id = Mor(self.mors.len());
        self.mors.push(MorData {
            name: format!("id_{name}"),
            dom: a,
            cod: a,
        });
        self.identities.push(id);
        Ok(a)
    }

    pub fn add_morphism(&mut self, name: &str, dom: Obj, cod: Obj) -> Result<Mor, TkError> {
        if self.mors.iter().any(|m| m.name == name) {
            return Err(TkError::invalid("category", format!("duplicate morphism `{name}`")));
        }
        if dom.0 >= self.objects.len() || cod.0 >= self.objects.len() {
            return Err(TkError::shape("morphism endpoints out of range"));
        }
        let f = Mor(self.mors.len());
        self.mors.push(MorData {
            name: name.to_string(),
            dom,
            cod,
        });
        Ok(f)
    }

    /// Record `g∘f = h`. Conflicting redefinition is an error; entries on
    /// non-composable pairs are allowed and flagged by validation.
    pub fn set_composite(&mut self, g: Mor, f: Mor, h: Mor) -> Result<(), TkError> {
        if let Some((_, _, old)) = self.entries.iter().find(|(eg, ef, _)| *eg == g && *ef == f) {
            if *old != h {
                return Err(TkError::invalid(
                    "category",
                    format!(
                        "conflicting composites for {} . {}",
                        self.mors[g.0].name, self.mors[f.0].name
                    ),
                ));
            }
            return Ok(());
        }
        self.entries.push((g, f, h));
        Ok(())
    }

    pub fn object(&self, name: &str) -> Option<Obj> {
        self.objects.iter().position(|n| n == name).map(Obj)
    }

    pub fn morphism(&self, name: &str) -> Option<Mor> {
        self.mors.iter().position(|m| m.name == name).map(Mor)
    }

    /// Assemble the category. The result is not validated; run
    /// [`validate_category`] (or use [`CategoryBuilder::finish_validated`]).
    pub fn finish(self) -> FinCategory {
        let n = self.mors.len();
        let mut compose: Vec<Vec<Option<Mor>>> = vec![vec![None; n]; n];
        for (g, f, h) in &self.entries {
            compose[g.0][f.0] = Some(*h);
        }
        let cat = FinCategory {
            objects: self.objects,
            mors: self.mors,
            identities: self.identities,
            compose,
        };
        let mut cat = cat;
        // Identity composites are implicit unless overridden.
        for f in 0..n {
            let f = Mor(f);
            let idc = cat.identity(cat.cod(f));
            let idd = cat.identity(cat.dom(f));
            if cat.compose[idc.0][f.0].is_none() {
                cat.compose[idc.0][f.0] = Some(f);
            }
            if cat.compose[f.0][idd.0].is_none() {
                cat.compose[f.0][idd.0] = Some(f);
            }
        }
        cat
    }

    pub fn finish_validated(self) -> Result<FinCategory, TkError> {
        let cat = self.finish();
        let report = validate_category(&cat);
        if report.ok() {
            Ok(cat)
        } else {
            Err(TkError::invalid("category", report.render(&cat)))
        }
    }
}

/// The category with one object and only its identity.
pub fn terminal_category() -> FinCategory {
    let mut b = CategoryBuilder::new();
    b.add_object("pt").unwrap();
    b.finish()
}

/// Two objects `a`, `b` and one non-identity arrow `u : a → b`.
pub fn walking_arrow() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let a = b.add_object("a").unwrap();
    let bb = b.add_object("b").unwrap();
    b.add_morphism("u", a, bb).unwrap();
    b.finish()
}

/// Discrete category on the given object names.
pub fn discrete(names: &[&str]) -> FinCategory {
    let mut b = CategoryBuilder::new();
    for n in names {
        b.add_object(n).unwrap();
    }
    b.finish()
}

/// Poset category from a reflexive-transitive `leq` relation on `names`.
/// One morphism `i → j` whenever `leq(i, j)`.
pub fn poset(names: &[&str], leq: impl Fn(usize, usize) -> bool) -> Result<FinCategory, TkError> {
    let n = names.len();
    for i in 0..n {
        if !leq(i, i) {
            return Err(TkError::invalid("poset", "relation is not reflexive"));
        }
        for j in 0..n {
            for k in 0..n {
                if leq(i, j) && leq(j, k) && !leq(i, k) {
                    return Err(TkError::invalid("poset", "relation is not transitive"));
                }
            }
            if i != j && leq(i, j) && leq(j, i) {
                return Err(TkError::invalid("poset", "relation is not antisymmetric"));
            }
        }
    }
    let mut b = CategoryBuilder::new();
    let objs: Vec<Obj> = names
        .iter()
        .map(|nm| b.add_object(nm))
        .collect::<Result<_, _>>()?;
    let mut arrow = vec![vec![None; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && leq(i, j) {
                let m = b.add_morphism(&format!("le_{}_{}", names[i], names[j]), objs[i], objs[j])?;
                arrow[i][j] = Some(m);
            }
        }
    }
    let morph = |b: &CategoryBuilder, arrow: &Vec<Vec<Option<Mor>>>, i: usize, j: usize| -> Mor {
        if i == j {
            b.morphism(&format!("id_{}", names[i])).unwrap()
        } else {
            arrow[i][j].unwrap()
        }
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if leq(i, j) && leq(j, k) {
                    let f = morph(&b, &arrow, i, j);
                    let g = morph(&b, &arrow, j, k);
                    let h = morph(&b, &arrow, i, k);
                    b.set_composite(g, f, h)?;
                }
            }
        }
    }
    Ok(b.finish())
}

/// Chain poset `x0 < x1 < … < x_{n-1}`.
pub fn chain(n: usize) -> FinCategory {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    poset(&refs, |i, j| i <= j).unwrap()
}

/// The commutative square poset: bottom `a`, middle `b`, `c`, top `d`.
pub fn square_poset() -> FinCategory {
    let leq = |i: usize, j: usize| -> bool {
        // 0 = a, 1 = b, 2 = c, 3 = d
        i == j || i == 0 || j == 3
    };
    poset(&["a", "b", "c", "d"], leq).unwrap()
}

/// Cyclic group Z/n as a one-object category; generator named `g`.
pub fn cyclic_group(n: usize) -> FinCategory {
    assert!(n >= 1);
    let mut b = CategoryBuilder::new();
    let star = b.add_object("s").unwrap();
    let mut pow: Vec<Mor> = vec![b.morphism("id_s").unwrap()];
    for k in 1..n {
        let name = if k == 1 { "g".to_string() } else { format!("g{k}") };
        pow.push(b.add_morphism(&name, star, star).unwrap());
    }
    for i in 0..n {
        for j in 0..n {
            b.set_composite(pow[i], pow[j], pow[(i + j) % n]).unwrap();
        }
    }
    b.finish()
}

/// Shape with two objects and two parallel arrows `s ⇉ t`.
pub fn parallel_pair_shape() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let s = b.add_object("s").unwrap();
    let t = b.add_object("t").unwrap();
    b.add_morphism("u", s, t).unwrap();
    b.add_morphism("v", s, t).unwrap();
    b.finish()
}

/// Cospan shape `x → z ← y`.
pub fn cospan_shape() -> FinCategory {
    let mut b = CategoryBuilder::new();
    let x = b.add_object("x").unwrap();
    let y = b.add_object("y").unwrap();
    let z = b.add_object("z").unwrap();
    b.add_morphism("l", x, z).unwrap();
    b.add_morphism("r", y, z).unwrap();
    b.finish()
}

/// A functor between finite categories, given by total object and morphism
/// tables. Construction validates the four preservation laws.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinFunctor {
    pub source: Base,
    pub target: Base,
    obj_map: Vec<Obj>,
    mor_map: Vec<Mor>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctorViolation {
    DomainNotPreserved { f: Mor },
    CodomainNotPreserved { f: Mor },
    IdentityNotPreserved { a: Obj },
    CompositeNotPreserved { g: Mor, f: Mor },
}

#[derive(Clone, Debug, Default)]
pub struct FunctorReport {
    pub violations: Vec<FunctorViolation>,
}

impl FunctorReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the preservation laws for raw functor tables, exhaustively.
pub fn validate_functor(
    source: &FinCategory,
    target: &FinCategory,
    obj_map: &[Obj],
    mor_map: &[Mor],
) -> FunctorReport {
    let mut report = FunctorReport::default();
    for f in source.mors() {
        let ff = mor_map[f.0];
        if target.dom(ff) != obj_map[source.dom(f).0] {
            report.violations.push(FunctorViolation::DomainNotPreserved { f });
        }
        if target.cod(ff) != obj_map[source.cod(f).0] {
            report.violations.push(FunctorViolation::CodomainNotPreserved { f });
        }
    }
    for a in source.objects() {
        if mor_map[source.identity(a).0] != target.identity(obj_map[a.0]) {
            report.violations.push(FunctorViolation::IdentityNotPreserved { a });
        }
    }
    for g in source.mors() {
        for f in source.mors() {
            if let Some(gf) = source.compose(g, f) {
                let lhs = Some(mor_map[gf.0]);
                let rhs = target.compose(mor_map[g.0], mor_map[f.0]);
                if lhs != rhs {
                    report.violations.push(FunctorViolation::CompositeNotPreserved { g, f });
                }
            }
        }
    }
    report
}

impl FinFunctor {
    pub fn new(
        source: Base,
        target: Base,
        obj_map: Vec<Obj>,
        mor_map: Vec<Mor>,
    ) -> Result<Self, TkError> {
        if obj_map.len() != source.object_count() || mor_map.len() != source.mor_count() {
            return Err(TkError::shape("functor table sizes do not match the source"));
        }
        if obj_map.iter().any(|a| a.0 >= target.object_count())
            || mor_map.iter().any(|f| f.0 >= target.mor_count())
        {
            return Err(TkError::shape("functor table entries out of range"));
        }
        let report = validate_functor(&source, &target, &obj_map, &mor_map);
        if !report.ok() {
            return Err(TkError::invalid(
                "functor",
                format!("{} preservation violations, first: {:?}", report.violations.len(), report.violations[0]),
            ));
        }
        Ok(FinFunctor {
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    pub fn identity(cat: Base) -> Self {
        let obj_map = cat.objects().collect();
        let mor_map = cat.mors().collect();
        FinFunctor {
            source: cat.clone(),
            target: cat,
            obj_map,
            mor_map,
        }
    }

    pub fn on_obj(&self, a: Obj) -> Obj {
        self.obj_map[a.0]
    }

    pub fn on_mor(&self, f: Mor) -> Mor {
        self.mor_map[f.0]
    }
}

/// A natural transformation between parallel functors, as a component table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransform {
    pub source: FinFunctor,
    pub target: FinFunctor,
    components: Vec<Mor>,
}

impl NatTransform {
    pub fn new(source: FinFunctor, target: FinFunctor, components: Vec<Mor>) -> Result<Self, TkError> {
        if source.source != target.source || source.target != target.target {
            return Err(TkError::BaseMismatch(
                "natural transformation needs parallel functors".into(),
            ));
        }
        let dom_cat = &source.source;
        let cod_cat = &source.target;
        if components.len() != dom_cat.object_count() {
            return Err(TkError::shape("one component per source object required"));
        }
        for a in dom_cat.objects() {
            let c = components[a.0];
            if cod_cat.dom(c) != source.on_obj(a) || cod_cat.cod(c) != target.on_obj(a) {
                return Err(TkError::shape(format!(
                    "component at {} has the wrong endpoints",
                    dom_cat.obj_name(a)
                )));
            }
        }
        for f in dom_cat.mors() {
            let (a, b) = (dom_cat.dom(f), dom_cat.cod(f));
            let left = cod_cat.compose(components[b.0], source.on_mor(f));
            let right = cod_cat.compose(target.on_mor(f), components[a.0]);
            if left != right || left.is_none() {
                return Err(TkError::invalid(
                    "natural transformation",
                    format!("naturality square at `{}` does not commute", dom_cat.mor_name(f)),
                ));
            }
        }
        Ok(NatTransform {
            source,
            target,
            components,
        })
    }

    pub fn component(&self, a: Obj) -> Mor {
        self.components[a.0]
    }
}

impl fmt::Display for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "category with {} objects, {} morphisms",
            self.object_count(),
            self.mor_count()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_category_is_valid() {
        let c = terminal_category();
        assert!(validate_category(&c).ok());
        assert_eq!(c.object_count(), 1);
        assert_eq!(c.mor_count(), 1);
    }

    #[test]
    fn walking_arrow_is_valid() {
        let c = walking_arrow();
        assert!(validate_category(&c).ok());
        assert_eq!(c.mor_count(), 3);
    }

    #[test]
    fn composite_on_non_composable_pair_is_reported() {
        // u : a → b with u∘u entered by hand.
        let mut b = CategoryBuilder::new();
        let a = b.add_object("a").unwrap();
        let bb = b.add_object("b").unwrap();
        let u = b.add_morphism("u", a, bb).unwrap();
        b.set_composite(u, u, u).unwrap();
        let cat = b.finish();
        let report = validate_category(&cat);
        assert!(!report.ok());
        assert!(report
            .violations
            .contains(&CategoryViolation::CompositeOnNonComposable { g: u, f: u }));
    }

    #[test]
    fn missing_composite_is_reported() {
        let mut b = CategoryBuilder::new();
        let a = b.add_object("a").unwrap();
        let bb = b.add_object("b").unwrap();
        let c = b.add_object("c").unwrap();
        b.add_morphism("u", a, bb).unwrap();
        b.add_morphism("v", bb, c).unwrap();
        // v∘u never entered.
        let cat = b.finish();
        let report = validate_category(&cat);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, CategoryViolation::MissingComposite { .. })));
    }

    #[test]
    fn opposite_swaps_the_walking_arrow() {
        let c = walking_arrow();
        let op = c.opposite();
        assert!(validate_category(&op).ok());
        let u = op.mor_by_name("u").unwrap();
        assert_eq!(op.obj_name(op.dom(u)), "b");
        assert_eq!(op.obj_name(op.cod(u)), "a");
    }

    #[test]
    fn opposite_is_an_involution_on_fixture_categories() {
        for c in [
            terminal_category(),
            walking_arrow(),
            chain(3),
            square_poset(),
            cyclic_group(2),
            cyclic_group(3),
            discrete(&["i", "j"]),
        ] {
            assert_eq!(c.opposite().opposite(), c);
        }
    }

    #[test]
    fn terminal_category_is_self_dual() {
        let c = terminal_category();
        assert_eq!(c.opposite(), c);
    }

    #[test]
    fn chain_opposite_reverses_the_order() {
        let c = chain(3);
        let op = c.opposite();
        assert!(validate_category(&op).ok());
        // In the opposite chain, x2 is the bottom: maps out of it to all.
        let x2 = op.object_by_name("x2").unwrap();
        assert_eq!(op.mors_from(x2).len(), 3);
    }

    #[test]
    fn groups_are_valid_one_object_categories() {
        for n in 1..=4 {
            let c = cyclic_group(n);
            assert!(validate_category(&c).ok(), "Z/{n}");
            assert_eq!(c.mor_count(), n);
        }
    }

    #[test]
    fn functor_validation_catches_broken_tables() {
        let one = Arc::new(terminal_category());
        let arrow = Arc::new(walking_arrow());
        let b = arrow.object_by_name("b").unwrap();
        let id_b = arrow.identity(b);
        // Picking b is a functor.
        assert!(FinFunctor::new(one.clone(), arrow.clone(), vec![b], vec![id_b]).is_ok());
        // Sending the identity to u is not.
        let u = arrow.mor_by_name("u").unwrap();
        assert!(FinFunctor::new(one, arrow, vec![b], vec![u]).is_err());
    }
}
