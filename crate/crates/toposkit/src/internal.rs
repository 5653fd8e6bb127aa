//! Internal groups, rings and fields in a presheaf topos, with identity
//! checking over generalized elements.
//!
//! Products are pointwise, so an operation diagram commutes iff its
//! pointwise equations hold at every object; generalized-element
//! quantification over representable shapes reduces to the same pointwise
//! data, and both checkers are implemented and compared.

use crate::error::{Guard, TkError};
use crate::fincat::Obj;
use crate::psh::{
    compose_maps, equalizer, factor_epi_mono, map_class, product, product_many, pullback,
    Presheaf, PresheafMap,
};
use std::collections::BTreeSet;

/// A group object: carrier `G`, multiplication `G×G → G`, inverse, and unit.
#[derive(Clone, Debug)]
pub struct InternalGroup {
    pub carrier: Presheaf,
    pub mult: PresheafMap,
    pub inv: PresheafMap,
    pub unit: PresheafMap,
    prod: crate::psh::Product,
}

impl InternalGroup {
    /// Well-typedness only; the axioms are checked by [`check_group`].
    pub fn new(
        carrier: Presheaf,
        mult: PresheafMap,
        inv: PresheafMap,
        unit: PresheafMap,
    ) -> Result<Self, TkError> {
        let prod = product(&carrier, &carrier)?;
        if mult.source() != &prod.obj || mult.target() != &carrier {
            return Err(TkError::shape("multiplication must be a map G×G → G"));
        }
        if inv.source() != &carrier || inv.target() != &carrier {
            return Err(TkError::shape("inverse must be a map G → G"));
        }
        if unit.source() != &Presheaf::terminal(carrier.base().clone())
            || unit.target() != &carrier
        {
            return Err(TkError::shape("unit must be a map 1 → G"));
        }
        Ok(InternalGroup {
            carrier,
            mult,
            inv,
            unit,
            prod,
        })
    }

    /// Build from pointwise tables.
    pub fn from_tables(
        carrier: Presheaf,
        mult_table: impl Fn(Obj, usize, usize) -> usize,
        inv_table: impl Fn(Obj, usize) -> usize,
        unit_elem: impl Fn(Obj) -> usize,
    ) -> Result<Self, TkError> {
        let base = carrier.base().clone();
        let prod = product(&carrier, &carrier)?;
        let mult_components: Vec<Vec<usize>> = base
            .objects()
            .map(|a| {
                (0..prod.obj.size(a))
                    .map(|i| {
                        let (x, y) = prod.unpair(a, i);
                        mult_table(a, x, y)
                    })
                    .collect()
            })
            .collect();
        let mult = PresheafMap::new(prod.obj.clone(), carrier.clone(), mult_components)?;
        let inv_components: Vec<Vec<usize>> = base
            .objects()
            .map(|a| (0..carrier.size(a)).map(|x| inv_table(a, x)).collect())
            .collect();
        let inv = PresheafMap::new(carrier.clone(), carrier.clone(), inv_components)?;
        let unit =
            PresheafMap::global_element(&carrier, base.objects().map(unit_elem).collect())?;
        InternalGroup::new(carrier, mult, inv, unit)
    }

    pub fn mul_at(&self, a: Obj, x: usize, y: usize) -> usize {
        self.mult.apply(a, self.prod.pair_index(a, x, y))
    }

    pub fn inv_at(&self, a: Obj, x: usize) -> usize {
        self.inv.apply(a, x)
    }

    pub fn unit_at(&self, a: Obj) -> usize {
        self.unit.apply(a, 0)
    }
}

/// One failed group axiom with an element witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupAxiomFailure {
    Associativity { at: Obj, x: usize, y: usize, z: usize },
    UnitLaw { at: Obj, x: usize },
    InverseLaw { at: Obj, x: usize },
}

#[derive(Clone, Debug, Default)]
pub struct GroupReport {
    pub failures: Vec<GroupAxiomFailure>,
}

impl GroupReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verify all group-axiom diagrams by pointwise evaluation.
pub fn check_group(g: &InternalGroup) -> GroupReport {
    let base = g.carrier.base().clone();
    let mut report = GroupReport::default();
    for a in base.objects() {
        let n = g.carrier.size(a);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if g.mul_at(a, g.mul_at(a, x, y), z) != g.mul_at(a, x, g.mul_at(a, y, z)) {
                        report
                            .failures
                            .push(GroupAxiomFailure::Associativity { at: a, x, y, z });
                    }
                }
            }
        }
        let e = g.unit_at(a);
        for x in 0..n {
            if g.mul_at(a, e, x) != x || g.mul_at(a, x, e) != x {
                report.failures.push(GroupAxiomFailure::UnitLaw { at: a, x });
            }
            if g.mul_at(a, x, g.inv_at(a, x)) != e || g.mul_at(a, g.inv_at(a, x), x) != e {
                report.failures.push(GroupAxiomFailure::InverseLaw { at: a, x });
            }
        }
    }
    report
}

/// A term over named variables with group operations; parsed from a small
/// prefix grammar: `(* x (inv y))`, `e` for the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Var(String),
    Unit,
    Inv(Box<GroupExpr>),
    Mul(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    pub fn parse(input: &str) -> Result<GroupExpr, TkError> {
        let tokens = tokenize(input);
        let mut pos = 0usize;
        let expr = parse_expr(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(TkError::invalid("expression", "trailing tokens"));
        }
        Ok(expr)
    }

    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            GroupExpr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            GroupExpr::Unit => {}
            GroupExpr::Inv(e) => e.collect_vars(out),
            GroupExpr::Mul(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// Evaluate at an object under an assignment of variables to elements.
    pub fn eval_at(&self, g: &InternalGroup, a: Obj, vars: &[String], assign: &[usize]) -> usize {
        match self {
            GroupExpr::Var(v) => {
                let i = vars.iter().position(|w| w == v).expect("variable is bound");
                assign[i]
            }
            GroupExpr::Unit => g.unit_at(a),
            GroupExpr::Inv(e) => g.inv_at(a, e.eval_at(g, a, vars, assign)),
            GroupExpr::Mul(l, r) => g.mul_at(
                a,
                l.eval_at(g, a, vars, assign),
                r.eval_at(g, a, vars, assign),
            ),
        }
    }

    /// Interpret the term as a presheaf map `G^n → G` over a chosen power.
    pub fn as_map(
        &self,
        g: &InternalGroup,
        vars: &[String],
        power: &crate::psh::ProductMany,
    ) -> Result<PresheafMap, TkError> {
        match self {
            GroupExpr::Var(v) => {
                let i = vars.iter().position(|w| w == v).ok_or_else(|| {
                    TkError::invalid("expression", format!("unbound variable `{v}`"))
                })?;
                Ok(power.legs[i].clone())
            }
            GroupExpr::Unit => {
                let bang = PresheafMap::to_terminal(&power.obj);
                compose_maps(&g.unit, &bang)
            }
            GroupExpr::Inv(e) => {
                let inner = e.as_map(g, vars, power)?;
                compose_maps(&g.inv, &inner)
            }
            GroupExpr::Mul(l, r) => {
                let lm = l.as_map(g, vars, power)?;
                let rm = r.as_map(g, vars, power)?;
                let pair = g.prod.pairing(&lm, &rm)?;
                compose_maps(&g.mult, &pair)
            }
        }
    }
}

fn tokenize(s: &str) -> Vec<String> {
    s.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(|t| t.to_string())
        .collect()
}

fn parse_expr(tokens: &[String], pos: &mut usize) -> Result<GroupExpr, TkError> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| TkError::invalid("expression", "unexpected end of input"))?;
    *pos += 1;
    if tok == "(" {
        let head = tokens
            .get(*pos)
            .ok_or_else(|| TkError::invalid("expression", "empty application"))?
            .clone();
        *pos += 1;
        let expr = match head.as_str() {
            "*" => {
                let l = parse_expr(tokens, pos)?;
                let r = parse_expr(tokens, pos)?;
                GroupExpr::Mul(Box::new(l), Box::new(r))
            }
            "inv" => GroupExpr::Inv(Box::new(parse_expr(tokens, pos)?)),
            other => {
                return Err(TkError::invalid(
                    "expression",
                    format!("unknown operation `{other}`"),
                ))
            }
        };
        match tokens.get(*pos) {
            Some(t) if t == ")" => {
                *pos += 1;
                Ok(expr)
            }
            _ => Err(TkError::invalid("expression", "expected `)`")),
        }
    } else if tok == ")" {
        Err(TkError::invalid("expression", "unexpected `)`"))
    } else if tok == "e" {
        Ok(GroupExpr::Unit)
    } else {
        Ok(GroupExpr::Var(tok.clone()))
    }
}

/// Verdict of an identity check with the first counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityVerdict {
    pub holds: bool,
    /// `(object, assignment)` falsifying the identity.
    pub witness: Option<(Obj, Vec<usize>)>,
}

fn merged_variables(
    lhs: &GroupExpr,
    rhs: &GroupExpr,
    given: Option<(&GroupExpr, &GroupExpr)>,
) -> Vec<String> {
    let mut vars = lhs.variables();
    for v in rhs.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    if let Some((gl, gr)) = given {
        for v in gl.variables().into_iter().chain(gr.variables()) {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    vars
}

/// Generalized-element checker: evaluate both sides over all assignments of
/// the variables to elements of `G(a)`, for every representable shape
/// `y(a)`. A `given` pair turns the check into a guarded implication.
pub fn check_identity_elements(
    g: &InternalGroup,
    lhs: &GroupExpr,
    rhs: &GroupExpr,
    given: Option<(&GroupExpr, &GroupExpr)>,
    guard: &Guard,
) -> Result<IdentityVerdict, TkError> {
    let vars = merged_variables(lhs, rhs, given);
    let base = g.carrier.base().clone();
    for a in base.objects() {
        let n = g.carrier.size(a);
        guard.check(
            "identity assignment enumeration",
            crate::error::checked_pow(n as u128, vars.len() as u128),
        )?;
        let radix = vec![n; vars.len()];
        let mut witness: Option<(Obj, Vec<usize>)> = None;
        crate::util::for_each_tuple(&radix, |assign| {
            if witness.is_some() {
                return;
            }
            if let Some((gl, gr)) = given {
                if gl.eval_at(g, a, &vars, assign) != gr.eval_at(g, a, &vars, assign) {
                    return;
                }
            }
            if lhs.eval_at(g, a, &vars, assign) != rhs.eval_at(g, a, &vars, assign) {
                witness = Some((a, assign.to_vec()));
            }
        });
        if witness.is_some() {
            return Ok(IdentityVerdict {
                holds: false,
                witness,
            });
        }
    }
    Ok(IdentityVerdict {
        holds: true,
        witness: None,
    })
}

/// Diagrammatic checker: interpret both sides as maps `G^n → G` and compare
/// them; a `given` pair restricts the comparison to the equalizer subobject
/// where its two sides agree.
pub fn check_identity_diagram(
    g: &InternalGroup,
    lhs: &GroupExpr,
    rhs: &GroupExpr,
    given: Option<(&GroupExpr, &GroupExpr)>,
    guard: &Guard,
) -> Result<bool, TkError> {
    let vars = merged_variables(lhs, rhs, given);
    if vars.is_empty() {
        let one = Presheaf::terminal(g.carrier.base().clone());
        let pm = product_many(&[&one])?;
        let lm = lhs.as_map(g, &vars, &pm)?;
        let rm = rhs.as_map(g, &vars, &pm)?;
        return Ok(lm == rm);
    }
    let factors: Vec<&Presheaf> = vars.iter().map(|_| &g.carrier).collect();
    let power = product_many(&factors)?;
    let lm = lhs.as_map(g, &vars, &power)?;
    let rm = rhs.as_map(g, &vars, &power)?;
    match given {
        None => Ok(lm == rm),
        Some((gl, gr)) => {
            let glm = gl.as_map(g, &vars, &power)?;
            let grm = gr.as_map(g, &vars, &power)?;
            let (_, incl) = equalizer(&glm, &grm, guard)?;
            Ok(compose_maps(&lm, &incl)? == compose_maps(&rm, &incl)?)
        }
    }
}

/// A commutative ring object.
#[derive(Clone, Debug)]
pub struct InternalRing {
    pub carrier: Presheaf,
    pub add: PresheafMap,
    pub mul: PresheafMap,
    pub neg: PresheafMap,
    pub zero: PresheafMap,
    pub one: PresheafMap,
    prod: crate::psh::Product,
}

impl InternalRing {
    pub fn new(
        carrier: Presheaf,
        add: PresheafMap,
        mul: PresheafMap,
        neg: PresheafMap,
        zero: PresheafMap,
        one: PresheafMap,
    ) -> Result<Self, TkError> {
        let prod = product(&carrier, &carrier)?;
        for (m, want) in [(&add, "addition"), (&mul, "multiplication")] {
            if m.source() != &prod.obj || m.target() != &carrier {
                return Err(TkError::shape(format!("{want} must be a map R×R → R")));
            }
        }
        if neg.source() != &carrier || neg.target() != &carrier {
            return Err(TkError::shape("negation must be a map R → R"));
        }
        let terminal = Presheaf::terminal(carrier.base().clone());
        for (m, want) in [(&zero, "zero"), (&one, "one")] {
            if m.source() != &terminal || m.target() != &carrier {
                return Err(TkError::shape(format!("{want} must be a global element")));
            }
        }
        Ok(InternalRing {
            carrier,
            add,
            mul,
            neg,
            zero,
            one,
            prod,
        })
    }

    /// The constant ring Z/n over a base.
    pub fn z_mod(base: crate::fincat::Base, n: usize) -> Result<InternalRing, TkError> {
        assert!(n >= 1);
        let carrier = Presheaf::constant(base.clone(), n);
        let prod = product(&carrier, &carrier)?;
        let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            base.objects()
                .map(|a| {
                    (0..prod.obj.size(a))
                        .map(|i| {
                            let (x, y) = prod.unpair(a, i);
                            op(x, y)
                        })
                        .collect()
                })
                .collect()
        };
        let add =
            PresheafMap::new(prod.obj.clone(), carrier.clone(), table(&|x, y| (x + y) % n))?;
        let mul =
            PresheafMap::new(prod.obj.clone(), carrier.clone(), table(&|x, y| (x * y) % n))?;
        let neg_components: Vec<Vec<usize>> = base
            .objects()
            .map(|a| (0..carrier.size(a)).map(|x| (n - x) % n).collect())
            .collect();
        let neg = PresheafMap::new(carrier.clone(), carrier.clone(), neg_components)?;
        let zero = PresheafMap::global_element(&carrier, base.objects().map(|_| 0).collect())?;
        let one =
            PresheafMap::global_element(&carrier, base.objects().map(|_| 1 % n).collect())?;
        InternalRing::new(carrier, add, mul, neg, zero, one)
    }

    pub fn add_at(&self, a: Obj, x: usize, y: usize) -> usize {
        self.add.apply(a, self.prod.pair_index(a, x, y))
    }

    pub fn mul_at(&self, a: Obj, x: usize, y: usize) -> usize {
        self.mul.apply(a, self.prod.pair_index(a, x, y))
    }

    pub fn zero_at(&self, a: Obj) -> usize {
        self.zero.apply(a, 0)
    }

    pub fn one_at(&self, a: Obj) -> usize {
        self.one.apply(a, 0)
    }
}

/// Commutative ring axioms, pointwise.
pub fn check_ring(r: &InternalRing) -> Result<(), String> {
    let base = r.carrier.base().clone();
    for a in base.objects() {
        let n = r.carrier.size(a);
        let zero = r.zero_at(a);
        let one = r.one_at(a);
        for x in 0..n {
            if r.add_at(a, zero, x) != x {
                return Err(format!("0 + x ≠ x at element {x}"));
            }
            if r.mul_at(a, one, x) != x {
                return Err(format!("1 · x ≠ x at element {x}"));
            }
            if r.add_at(a, x, r.neg.apply(a, x)) != zero {
                return Err(format!("x + (−x) ≠ 0 at element {x}"));
            }
            for y in 0..n {
                if r.add_at(a, x, y) != r.add_at(a, y, x) {
                    return Err("addition is not commutative".into());
                }
                if r.mul_at(a, x, y) != r.mul_at(a, y, x) {
                    return Err("multiplication is not commutative".into());
                }
                for z in 0..n {
                    if r.add_at(a, r.add_at(a, x, y), z) != r.add_at(a, x, r.add_at(a, y, z)) {
                        return Err("addition is not associative".into());
                    }
                    if r.mul_at(a, r.mul_at(a, x, y), z) != r.mul_at(a, x, r.mul_at(a, y, z)) {
                        return Err("multiplication is not associative".into());
                    }
                    if r.mul_at(a, x, r.add_at(a, y, z))
                        != r.add_at(a, r.mul_at(a, x, y), r.mul_at(a, x, z))
                    {
                        return Err("distributivity fails".into());
                    }
                }
            }
        }
    }
    Ok(())
}

/// The units subobject: `P = {(x, y) | x·y = 1}` as a pullback, then
/// `U ↣ R` as the image of `P ↣ R×R → R`.
#[derive(Clone, Debug)]
pub struct UnitsSubobject {
    /// Elements of U per object, as a subset of the carrier.
    pub units: Vec<BTreeSet<usize>>,
    pub inclusion: PresheafMap,
}

pub fn units_subobject(r: &InternalRing, guard: &Guard) -> Result<UnitsSubobject, TkError> {
    let base = r.carrier.base().clone();
    // P as the pullback of mul : R×R → R against one : 1 → R.
    let pb = pullback(&r.mul, &r.one, guard)?;
    let f = compose_maps(&r.prod.pr1, &pb.to_x)?;
    let fac = factor_epi_mono(&f)?;
    let units: Vec<BTreeSet<usize>> = base
        .objects()
        .map(|a| fac.m.component(a).iter().cloned().collect())
        .collect();
    Ok(UnitsSubobject {
        units,
        inclusion: fac.m,
    })
}

/// Field verdicts name the failed axiom with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldVerdict {
    Field,
    /// Zero and one coincide somewhere: the equalizer of `0, 1 : 1 ⇉ R` is
    /// not the initial object.
    ZeroEqualsOne { at: Obj },
    /// An element hit by neither summand of `1 + U → R`.
    NonUnitNonZero { at: Obj, element: usize },
}

impl FieldVerdict {
    pub fn is_field(&self) -> bool {
        matches!(self, FieldVerdict::Field)
    }
}

fn nontriviality(r: &InternalRing, guard: &Guard) -> Result<Option<Obj>, TkError> {
    let (eq, _) = equalizer(&r.zero, &r.one, guard)?;
    for a in r.carrier.base().objects() {
        if eq.apex.size(a) > 0 {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Field axioms, first variant: the equalizer of `0, 1 : 1 ⇉ R` is initial,
/// and the copairing `1 + U → R` (zero on the first summand, the inclusion
/// on the second) is epi.
pub fn check_field(r: &InternalRing, guard: &Guard) -> Result<FieldVerdict, TkError> {
    if let Err(msg) = check_ring(r) {
        return Err(TkError::invalid("ring", msg));
    }
    if let Some(at) = nontriviality(r, guard)? {
        return Ok(FieldVerdict::ZeroEqualsOne { at });
    }
    let units = units_subobject(r, guard)?;
    let base = r.carrier.base().clone();
    for a in base.objects() {
        let zero = r.zero_at(a);
        for x in 0..r.carrier.size(a) {
            if x != zero && !units.units[a.0].contains(&x) {
                return Ok(FieldVerdict::NonUnitNonZero { at: a, element: x });
            }
        }
    }
    Ok(FieldVerdict::Field)
}

/// Field axioms, second variant: nontriviality as above, plus the internal
/// negation of the units subobject is contained in the zero subobject. The
/// negation `¬U` holds of `x` at `a` when no restriction of `x` lands in
/// `U` — the largest subobject disjoint from `U`.
pub fn check_field_alt(r: &InternalRing, guard: &Guard) -> Result<FieldVerdict, TkError> {
    if let Err(msg) = check_ring(r) {
        return Err(TkError::invalid("ring", msg));
    }
    if let Some(at) = nontriviality(r, guard)? {
        return Ok(FieldVerdict::ZeroEqualsOne { at });
    }
    let units = units_subobject(r, guard)?;
    let base = r.carrier.base().clone();
    for a in base.objects() {
        let zero = r.zero_at(a);
        for x in 0..r.carrier.size(a) {
            let never_invertible = base
                .mors_into(a)
                .iter()
                .all(|&f| !units.units[base.dom(f).0].contains(&r.carrier.apply(f, x)));
            if never_invertible && x != zero {
                return Ok(FieldVerdict::NonUnitNonZero { at: a, element: x });
            }
        }
    }
    Ok(FieldVerdict::Field)
}

/// The copairing `1 + U → R` built through an actual coproduct, classified
/// by the epi test — the categorical route the tests compare against.
pub fn copair_zero_units_is_epi(r: &InternalRing, guard: &Guard) -> Result<bool, TkError> {
    let units = units_subobject(r, guard)?;
    let one = Presheaf::terminal(r.carrier.base().clone());
    let u_psh = units.inclusion.source().clone();
    let d = crate::psh::Diagram::discrete(&[&one, &u_psh])?;
    let colim = crate::psh::finite_colimit(&d)?;
    let cocone = vec![r.zero.clone(), units.inclusion.clone()];
    let copair = crate::psh::mediating_from_colimit(&colim, &d, &cocone)?
        .expect("cocones over discrete shapes always mediate");
    Ok(map_class(&copair).epi)
}

/// Constant group from a multiplication table over any base.
pub fn constant_group(
    base: crate::fincat::Base,
    mult: &[Vec<usize>],
    inv: &[usize],
    unit: usize,
) -> Result<InternalGroup, TkError> {
    let n = mult.len();
    let carrier = Presheaf::constant(base, n);
    InternalGroup::from_tables(carrier, |_, x, y| mult[x][y], |_, x| inv[x], |_| unit)
}

/// Multiplication, inverse and unit tables for the symmetric group S3;
/// elements are the six permutations of three letters in lexicographic
/// one-line order.
pub fn s3_tables() -> (Vec<Vec<usize>>, Vec<usize>, usize) {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] { [p[q[0]], p[q[1]], p[q[2]]] };
    let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).unwrap();
    let mult: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| perms.iter().map(|q| index(&compose(p, q))).collect())
        .collect();
    let inv: Vec<usize> = perms
        .iter()
        .map(|p| {
            let mut ip = [0usize; 3];
            for i in 0..3 {
                ip[p[i]] = i;
            }
            index(&ip)
        })
        .collect();
    (mult, inv, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat;
    use std::sync::Arc;

    fn s3_over_point() -> InternalGroup {
        let base = Arc::new(fincat::terminal_category());
        let (mult, inv, unit) = s3_tables();
        constant_group(base, &mult, &inv, unit).unwrap()
    }

    fn z3_over_arrow() -> InternalGroup {
        let base = Arc::new(fincat::walking_arrow());
        let mult: Vec<Vec<usize>> = (0..3)
            .map(|x| (0..3).map(|y| (x + y) % 3).collect())
            .collect();
        let inv: Vec<usize> = (0..3).map(|x| (3 - x) % 3).collect();
        constant_group(base, &mult, &inv, 0).unwrap()
    }

    #[test]
    fn z3_and_s3_pass_the_group_check() {
        assert!(check_group(&z3_over_arrow()).ok());
        assert!(check_group(&s3_over_point()).ok());
    }

    #[test]
    fn corrupted_multiplication_reports_an_associativity_witness() {
        let base = Arc::new(fincat::terminal_category());
        let mut mult: Vec<Vec<usize>> = (0..3)
            .map(|x| (0..3).map(|y| (x + y) % 3).collect())
            .collect();
        mult[1][2] = 1; // stays unit-compatible, breaks associativity
        let inv: Vec<usize> = (0..3).map(|x| (3 - x) % 3).collect();
        let g = constant_group(base, &mult, &inv, 0).unwrap();
        let report = check_group(&g);
        assert!(report
            .failures
            .iter()
            .any(|f| matches!(f, GroupAxiomFailure::Associativity { .. })));
    }

    #[test]
    fn expression_parsing_round_trips() {
        let e = GroupExpr::parse("(* x (inv y))").unwrap();
        assert_eq!(
            e,
            GroupExpr::Mul(
                Box::new(GroupExpr::Var("x".into())),
                Box::new(GroupExpr::Inv(Box::new(GroupExpr::Var("y".into()))))
            )
        );
        assert!(GroupExpr::parse("(* x").is_err());
        assert!(GroupExpr::parse("(foo x)").is_err());
        assert_eq!(GroupExpr::parse("e").unwrap(), GroupExpr::Unit);
    }

    #[test]
    fn inverse_antihomomorphism_holds_on_s3() {
        let g = s3_over_point();
        let lhs = GroupExpr::parse("(* (inv y) (inv x))").unwrap();
        let rhs = GroupExpr::parse("(inv (* x y))").unwrap();
        let verdict = check_identity_elements(&g, &lhs, &rhs, None, &Guard::default()).unwrap();
        assert!(verdict.holds);
        assert!(check_identity_diagram(&g, &lhs, &rhs, None, &Guard::default()).unwrap());
    }

    #[test]
    fn cancellation_holds_as_a_guarded_identity() {
        let g = z3_over_arrow();
        let guard_l = GroupExpr::parse("(* x a)").unwrap();
        let guard_r = GroupExpr::parse("(* y a)").unwrap();
        let lhs = GroupExpr::parse("x").unwrap();
        let rhs = GroupExpr::parse("y").unwrap();
        let verdict = check_identity_elements(
            &g,
            &lhs,
            &rhs,
            Some((&guard_l, &guard_r)),
            &Guard::default(),
        )
        .unwrap();
        assert!(verdict.holds);
        assert!(check_identity_diagram(
            &g,
            &lhs,
            &rhs,
            Some((&guard_l, &guard_r)),
            &Guard::default()
        )
        .unwrap());
    }

    #[test]
    fn commutativity_fails_on_s3_in_both_checkers() {
        let g = s3_over_point();
        let lhs = GroupExpr::parse("(* x y)").unwrap();
        let rhs = GroupExpr::parse("(* y x)").unwrap();
        let verdict = check_identity_elements(&g, &lhs, &rhs, None, &Guard::default()).unwrap();
        assert!(!verdict.holds);
        assert!(verdict.witness.is_some());
        assert!(!check_identity_diagram(&g, &lhs, &rhs, None, &Guard::default()).unwrap());
    }

    #[test]
    fn x_times_x_inverse_is_the_unit_everywhere() {
        for g in [s3_over_point(), z3_over_arrow()] {
            let lhs = GroupExpr::parse("(* x (inv x))").unwrap();
            let rhs = GroupExpr::parse("e").unwrap();
            assert!(check_identity_elements(&g, &lhs, &rhs, None, &Guard::default())
                .unwrap()
                .holds);
        }
    }

    #[test]
    fn units_of_z4_are_one_and_three() {
        let base = Arc::new(fincat::terminal_category());
        let r = InternalRing::z_mod(base, 4).unwrap();
        let u = units_subobject(&r, &Guard::default()).unwrap();
        assert_eq!(u.units[0], [1usize, 3].into_iter().collect());
    }

    #[test]
    fn units_of_f2_is_just_one() {
        let base = Arc::new(fincat::terminal_category());
        let r = InternalRing::z_mod(base, 2).unwrap();
        let u = units_subobject(&r, &Guard::default()).unwrap();
        assert_eq!(u.units[0], [1usize].into_iter().collect());
    }

    #[test]
    fn field_verdicts_on_small_rings() {
        let base = Arc::new(fincat::terminal_category());
        for (n, is_field) in [(2, true), (3, true), (4, false), (5, true), (6, false)] {
            let r = InternalRing::z_mod(base.clone(), n).unwrap();
            let v = check_field(&r, &Guard::default()).unwrap();
            assert_eq!(v.is_field(), is_field, "Z/{n}");
            let v2 = check_field_alt(&r, &Guard::default()).unwrap();
            assert_eq!(v2.is_field(), is_field, "Z/{n} (alt)");
        }
        // Z/4: the witness is 2.
        let r = InternalRing::z_mod(base.clone(), 4).unwrap();
        assert_eq!(
            check_field(&r, &Guard::default()).unwrap(),
            FieldVerdict::NonUnitNonZero {
                at: Obj(0),
                element: 2
            }
        );
        // The zero ring fails nontriviality.
        let zero_ring = InternalRing::z_mod(base, 1).unwrap();
        assert!(matches!(
            check_field(&zero_ring, &Guard::default()).unwrap(),
            FieldVerdict::ZeroEqualsOne { .. }
        ));
    }

    #[test]
    fn copairing_route_agrees_with_the_pointwise_epi_test() {
        let base = Arc::new(fincat::terminal_category());
        for n in 2..=6 {
            let r = InternalRing::z_mod(base.clone(), n).unwrap();
            let epi = copair_zero_units_is_epi(&r, &Guard::default()).unwrap();
            let verdict = check_field(&r, &Guard::default()).unwrap();
            assert_eq!(epi, verdict.is_field(), "Z/{n}");
        }
    }

    #[test]
    fn field_variants_agree_on_constant_rings_over_the_walking_arrow() {
        let base = Arc::new(fincat::walking_arrow());
        for n in 2..=6 {
            let r = InternalRing::z_mod(base.clone(), n).unwrap();
            let a = check_field(&r, &Guard::default()).unwrap().is_field();
            let b = check_field_alt(&r, &Guard::default()).unwrap().is_field();
            assert_eq!(a, b, "Z/{n} over the arrow");
        }
    }
}
