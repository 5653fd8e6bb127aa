//! Line-oriented text formats and the workspace loader.
//!
//! One artifact per file, UTF-8, `#` comments. Extensions: `.fc` category,
//! `.fp` presheaf, `.fm` presheaf map, `.fj` topology, `.fs` space, `.fb`
//! bundle, `.fa` algebra, `.fw` workspace (includes plus functor, corpus
//! and candidate declarations). Every artifact validates on load, and all
//! cross-references are by explicit name — no search paths.

use crate::classifier::omega;
use crate::error::TkError;
use crate::etcs::ToposCorpus;
use crate::fincat::{Base, CategoryBuilder, FinFunctor, Mor, Obj};
use crate::geom::DiagramFunctor;
use crate::internal::{InternalGroup, InternalRing};
use crate::psh::{Presheaf, PresheafMap};
use crate::sites::{GrothendieckTopology, Site};
use crate::spaces::{canonical_topology, Bundle, FinSpace, SpaceSite};
use crate::util::sha256_hex;
use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::sync::Arc;

/// A presheaf with its source names preserved for display.
#[derive(Clone, Debug)]
pub struct NamedPresheaf {
    pub over: String,
    pub psh: Presheaf,
    pub elem_names: Vec<Vec<String>>,
}

impl NamedPresheaf {
    pub fn elem_index(&self, a: Obj, name: &str) -> Option<usize> {
        self.elem_names[a.0].iter().position(|n| n == name)
    }
}

#[derive(Clone, Debug)]
pub struct NamedMap {
    pub source: String,
    pub target: String,
    pub map: PresheafMap,
}

#[derive(Clone, Debug)]
pub struct NamedTopology {
    pub over: String,
    pub site: Site,
}

#[derive(Clone, Debug)]
pub struct NamedBundle {
    pub total: String,
    pub base: String,
    pub bundle: Bundle,
}

#[derive(Clone, Debug)]
pub enum NamedAlgebra {
    Group { over: String, group: InternalGroup },
    Ring { over: String, ring: InternalRing },
}

#[derive(Clone, Debug)]
pub struct NnoCandidate {
    pub carrier: String,
    pub zero: String,
    pub succ: String,
}

/// A fully resolved, validated workspace.
#[derive(Debug, Default)]
pub struct Workspace {
    pub categories: BTreeMap<String, Base>,
    pub spaces: BTreeMap<String, SpaceSite>,
    pub presheaves: BTreeMap<String, NamedPresheaf>,
    pub maps: BTreeMap<String, NamedMap>,
    pub topologies: BTreeMap<String, NamedTopology>,
    pub bundles: BTreeMap<String, NamedBundle>,
    pub algebras: BTreeMap<String, NamedAlgebra>,
    pub functors: BTreeMap<String, FinFunctor>,
    pub diagram_functors: BTreeMap<String, DiagramFunctor>,
    pub corpora: BTreeMap<String, ToposCorpus>,
    pub nno_candidates: BTreeMap<String, NnoCandidate>,
    /// `(display path, sha256)` for every loaded file, in load order.
    pub files: Vec<(String, String)>,
}

impl Workspace {
    pub fn artifact_count(&self) -> usize {
        self.categories.len()
            + self.spaces.len()
            + self.presheaves.len()
            + self.maps.len()
            + self.topologies.len()
            + self.bundles.len()
            + self.algebras.len()
            + self.functors.len()
            + self.diagram_functors.len()
            + self.corpora.len()
            + self.nno_candidates.len()
    }

    pub fn category(&self, name: &str) -> Result<&Base, TkError> {
        self.categories.get(name).ok_or(TkError::Unresolved {
            kind: "category",
            name: name.to_string(),
        })
    }

    pub fn space(&self, name: &str) -> Result<&SpaceSite, TkError> {
        self.spaces.get(name).ok_or(TkError::Unresolved {
            kind: "space",
            name: name.to_string(),
        })
    }

    pub fn presheaf(&self, name: &str) -> Result<&NamedPresheaf, TkError> {
        self.presheaves.get(name).ok_or(TkError::Unresolved {
            kind: "presheaf",
            name: name.to_string(),
        })
    }

    pub fn map(&self, name: &str) -> Result<&NamedMap, TkError> {
        self.maps.get(name).ok_or(TkError::Unresolved {
            kind: "map",
            name: name.to_string(),
        })
    }

    pub fn load(paths: &[PathBuf]) -> Result<Workspace, TkError> {
        let mut files: Vec<(PathBuf, String)> = Vec::new();
        let mut seen: BTreeSet<PathBuf> = BTreeSet::new();
        for p in paths {
            collect_files(p, &mut files, &mut seen)?;
        }
        let mut ws = Workspace::default();
        for (path, text) in &files {
            ws.files.push((
                path.display().to_string(),
                sha256_hex(text.as_bytes()),
            ));
        }
        // Phase order: categories, spaces, presheaves, maps, topologies,
        // bundles, algebras, workspace blocks.
        for (path, text) in &files {
            if ext_of(path) == "fc" {
                let (name, cat) = parse_fc(text, &path.display().to_string())?;
                insert_unique(&mut ws.categories, &name, Arc::new(cat), "category")?;
            }
        }
        for (path, text) in &files {
            if ext_of(path) == "fs" {
                let (name, space) = parse_fs(text, &path.display().to_string())?;
                let site = canonical_topology(&space);
                // The open poset is reachable as a category named
                // `Open(<space>)`.
                insert_unique(
                    &mut ws.categories,
                    &format!("Open({name})"),
                    site.cat.clone(),
                    "category",
                )?;
                insert_unique(&mut ws.spaces, &name, site, "space")?;
            }
        }
        for (path, text) in &files {
            if ext_of(path) == "fp" {
                let (name, np) = parse_fp(text, &path.display().to_string(), &ws)?;
                insert_unique(&mut ws.presheaves, &name, np, "presheaf")?;
            }
        }
        for (path, text) in &files {
            if ext_of(path) == "fm" {
                let (name, nm) = parse_fm(text, &path.display().to_string(), &ws)?;
                insert_unique(&mut ws.maps, &name, nm, "map")?;
            }
        }
        for (path, text) in &files {
            if ext_of(path) == "fj" {
                let (name, nt) = parse_fj(text, &path.display().to_string(), &ws)?;
                insert_unique(&mut ws.topologies, &name, nt, "topology")?;
            }
        }
        for (path, text) in &files {
            if ext_of(path) == "fb" {
                let (name, nb) = parse_fb(text, &path.display().to_string(), &ws)?;
                insert_unique(&mut ws.bundles, &name, nb, "bundle")?;
            }
        }
        for (path, text) in &files {
            if ext_of(path) == "fa" {
                let (name, na) = parse_fa(text, &path.display().to_string(), &ws)?;
                insert_unique(&mut ws.algebras, &name, na, "algebra")?;
            }
        }
        for (path, text) in &files {
            if ext_of(path) == "fw" {
                parse_fw_blocks(text, &path.display().to_string(), &mut ws)?;
            }
        }
        Ok(ws)
    }
}

fn ext_of(path: &Path) -> String {
    path.extension()
        .map(|e| e.to_string_lossy().to_string())
        .unwrap_or_default()
}

fn collect_files(
    path: &Path,
    out: &mut Vec<(PathBuf, String)>,
    seen: &mut BTreeSet<PathBuf>,
) -> Result<(), TkError> {
    let canonical = path.canonicalize().map_err(|e| TkError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    if !seen.insert(canonical.clone()) {
        return Ok(());
    }
    let text = std::fs::read_to_string(path).map_err(|e| TkError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    // Workspace files pull in their includes first.
    if ext_of(path) == "fw" {
        let dir = path.parent().unwrap_or(Path::new("."));
        for (lineno, line) in logical_lines(&text) {
            let tokens = tokens_of(line);
            if tokens.first().map(|t| t.as_str()) == Some("include") {
                if tokens.len() != 2 {
                    return Err(TkError::Parse {
                        file: path.display().to_string(),
                        line: lineno,
                        msg: "include takes exactly one path".into(),
                    });
                }
                collect_files(&dir.join(&tokens[1]), out, seen)?;
            }
        }
    }
    out.push((path.to_path_buf(), text));
    Ok(())
}

fn insert_unique<T>(
    map: &mut BTreeMap<String, T>,
    name: &str,
    value: T,
    kind: &'static str,
) -> Result<(), TkError> {
    if map.contains_key(name) {
        return Err(TkError::invalid(kind, format!("duplicate name `{name}`")));
    }
    map.insert(name.to_string(), value);
    Ok(())
}

/// Lines with comments stripped and blanks removed, 1-indexed.
fn logical_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = raw.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i + 1, line))
        })
        .collect()
}

fn tokens_of(line: &str) -> Vec<String> {
    line.replace('{', " { ")
        .replace('}', " } ")
        .split_whitespace()
        .map(|t| t.to_string())
        .collect()
}

fn perr(file: &str, line: usize, msg: impl Into<String>) -> TkError {
    TkError::Parse {
        file: file.to_string(),
        line,
        msg: msg.into(),
    }
}

/// Parse the members of a `{ ... }` group starting at `tokens[start]`.
fn parse_braced(
    tokens: &[String],
    start: usize,
    file: &str,
    line: usize,
) -> Result<(Vec<String>, usize), TkError> {
    if tokens.get(start).map(|t| t.as_str()) != Some("{") {
        return Err(perr(file, line, "expected `{`"));
    }
    let mut members = Vec::new();
    let mut i = start + 1;
    loop {
        match tokens.get(i) {
            Some(t) if t == "}" => return Ok((members, i + 1)),
            Some(t) => {
                members.push(t.clone());
                i += 1;
            }
            None => return Err(perr(file, line, "unterminated `{`")),
        }
    }
}

pub fn parse_fc(text: &str, file: &str) -> Result<(String, crate::fincat::FinCategory), TkError> {
    let mut name: Option<String> = None;
    let mut builder = CategoryBuilder::new();
    let mut composites: Vec<(usize, String, String, String)> = Vec::new();
    for (lineno, line) in logical_lines(text) {
        let t = tokens_of(line);
        match t[0].as_str() {
            "category" => {
                if t.len() != 2 {
                    return Err(perr(file, lineno, "usage: category <name>"));
                }
                name = Some(t[1].clone());
            }
            "object" => {
                if t.len() != 2 {
                    return Err(perr(file, lineno, "usage: object <id>"));
                }
                builder
                    .add_object(&t[1])
                    .map_err(|e| perr(file, lineno, e.to_string()))?;
            }
            "morphism" => {
                // morphism <id> : <dom> -> <cod>
                if t.len() != 6 || t[2] != ":" || t[4] != "->" {
                    return Err(perr(file, lineno, "usage: morphism <id> : <obj> -> <obj>"));
                }
                let dom = builder
                    .object(&t[3])
                    .ok_or_else(|| perr(file, lineno, format!("unknown object `{}`", t[3])))?;
                let cod = builder
                    .object(&t[5])
                    .ok_or_else(|| perr(file, lineno, format!("unknown object `{}`", t[5])))?;
                builder
                    .add_morphism(&t[1], dom, cod)
                    .map_err(|e| perr(file, lineno, e.to_string()))?;
            }
            "compose" => {
                // compose <g> . <f> = <h>
                if t.len() != 6 || t[2] != "." || t[4] != "=" {
                    return Err(perr(file, lineno, "usage: compose <g> . <f> = <h>"));
                }
                composites.push((lineno, t[1].clone(), t[3].clone(), t[5].clone()));
            }
            other => return Err(perr(file, lineno, format!("unknown directive `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| perr(file, 1, "missing `category <name>` header"))?;
    for (lineno, g, f, h) in composites {
        let gg = builder
            .morphism(&g)
            .ok_or_else(|| perr(file, lineno, format!("unknown morphism `{g}`")))?;
        let ff = builder
            .morphism(&f)
            .ok_or_else(|| perr(file, lineno, format!("unknown morphism `{f}`")))?;
        let hh = builder
            .morphism(&h)
            .ok_or_else(|| perr(file, lineno, format!("unknown morphism `{h}`")))?;
        builder
            .set_composite(gg, ff, hh)
            .map_err(|e| perr(file, lineno, e.to_string()))?;
    }
    let cat = builder.finish();
    let report = crate::fincat::validate_category(&cat);
    if !report.ok() {
        return Err(TkError::invalid(
            "category",
            format!("{file}: {}", report.render(&cat)),
        ));
    }
    Ok((name, cat))
}

pub fn parse_fp(text: &str, file: &str, ws: &Workspace) -> Result<(String, NamedPresheaf), TkError> {
    let mut header: Option<(String, String)> = None;
    let mut set_lines: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut map_lines: Vec<(usize, String, String, String)> = Vec::new();
    for (lineno, line) in logical_lines(text) {
        let t = tokens_of(line);
        match t[0].as_str() {
            "presheaf" => {
                // presheaf <name> over <category>
                if t.len() != 4 || t[2] != "over" {
                    return Err(perr(file, lineno, "usage: presheaf <name> over <category>"));
                }
                header = Some((t[1].clone(), t[3].clone()));
            }
            "set" => {
                // set <obj> = {e0 e1 ...}
                if t.len() < 4 || t[2] != "=" {
                    return Err(perr(file, lineno, "usage: set <obj> = {elems}"));
                }
                let (members, _) = parse_braced(&t, 3, file, lineno)?;
                set_lines.push((lineno, t[1].clone(), members));
            }
            "map" => {
                // map <mor> : <from> -> <to>
                if t.len() != 6 || t[2] != ":" || t[4] != "->" {
                    return Err(perr(file, lineno, "usage: map <mor> : <elt> -> <elt>"));
                }
                map_lines.push((lineno, t[1].clone(), t[3].clone(), t[5].clone()));
            }
            other => return Err(perr(file, lineno, format!("unknown directive `{other}`"))),
        }
    }
    let (name, over) = header.ok_or_else(|| perr(file, 1, "missing `presheaf <name> over <category>`"))?;
    let base = ws.category(&over)?.clone();
    let mut elem_names: Vec<Vec<String>> = vec![Vec::new(); base.object_count()];
    for (lineno, obj, members) in set_lines {
        let a = base
            .object_by_name(&obj)
            .ok_or_else(|| perr(file, lineno, format!("unknown object `{obj}` in `{over}`")))?;
        if !elem_names[a.0].is_empty() {
            return Err(perr(file, lineno, format!("duplicate set for `{obj}`")));
        }
        elem_names[a.0] = members;
    }
    let sets: Vec<usize> = elem_names.iter().map(|v| v.len()).collect();
    // Actions: identities implicit; everything else must be total.
    let mut actions: Vec<Vec<Option<usize>>> = base
        .mors()
        .map(|f| vec![None; sets[base.cod(f).0]])
        .collect();
    for a in base.objects() {
        let id = base.identity(a);
        actions[id.0] = (0..sets[a.0]).map(Some).collect();
    }
    for (lineno, mor, from, to) in map_lines {
        let f = base
            .mor_by_name(&mor)
            .ok_or_else(|| perr(file, lineno, format!("unknown morphism `{mor}`")))?;
        let (a, b) = (base.dom(f), base.cod(f));
        let from_idx = elem_names[b.0]
            .iter()
            .position(|n| *n == from)
            .ok_or_else(|| perr(file, lineno, format!("unknown element `{from}` at `{}`", base.obj_name(b))))?;
        let to_idx = elem_names[a.0]
            .iter()
            .position(|n| *n == to)
            .ok_or_else(|| perr(file, lineno, format!("unknown element `{to}` at `{}`", base.obj_name(a))))?;
        if actions[f.0][from_idx].is_some() {
            return Err(perr(file, lineno, format!("duplicate action entry for `{mor}` at `{from}`")));
        }
        actions[f.0][from_idx] = Some(to_idx);
    }
    let mut total_actions = Vec::with_capacity(actions.len());
    for (fi, act) in actions.into_iter().enumerate() {
        let f = Mor(fi);
        let mut resolved = Vec::with_capacity(act.len());
        for (ei, slot) in act.into_iter().enumerate() {
            match slot {
                Some(v) => resolved.push(v),
                None => {
                    return Err(TkError::invalid(
                        "presheaf",
                        format!(
                            "{file}: action of `{}` undefined on element {}",
                            base.mor_name(f),
                            ei
                        ),
                    ))
                }
            }
        }
        total_actions.push(resolved);
    }
    let psh = Presheaf::new(base, sets, total_actions)
        .map_err(|e| TkError::invalid("presheaf", format!("{file}: {e}")))?;
    Ok((
        name,
        NamedPresheaf {
            over,
            psh,
            elem_names,
        },
    ))
}

pub fn parse_fm(text: &str, file: &str, ws: &Workspace) -> Result<(String, NamedMap), TkError> {
    let mut header: Option<(String, String, String)> = None;
    let mut at_lines: Vec<(usize, String, String, String)> = Vec::new();
    for (lineno, line) in logical_lines(text) {
        let t = tokens_of(line);
        match t[0].as_str() {
            "presheafmap" => {
                // presheafmap <name> : <P> -> <Q>
                if t.len() != 6 || t[2] != ":" || t[4] != "->" {
                    return Err(perr(file, lineno, "usage: presheafmap <name> : <P> -> <Q>"));
                }
                header = Some((t[1].clone(), t[3].clone(), t[5].clone()));
            }
            "at" => {
                // at <obj> : <x> -> <y>
                if t.len() != 6 || t[2] != ":" || t[4] != "->" {
                    return Err(perr(file, lineno, "usage: at <obj> : <x> -> <y>"));
                }
                at_lines.push((lineno, t[1].clone(), t[3].clone(), t[5].clone()));
            }
            other => return Err(perr(file, lineno, format!("unknown directive `{other}`"))),
        }
    }
    let (name, src_name, dst_name) =
        header.ok_or_else(|| perr(file, 1, "missing `presheafmap <name> : <P> -> <Q>`"))?;
    let src = ws.presheaf(&src_name)?;
    let dst = ws.presheaf(&dst_name)?;
    let base = src.psh.base().clone();
    let mut components: Vec<Vec<Option<usize>>> = base
        .objects()
        .map(|a| vec![None; src.psh.size(a)])
        .collect();
    for (lineno, obj, x, y) in at_lines {
        let a = base
            .object_by_name(&obj)
            .ok_or_else(|| perr(file, lineno, format!("unknown object `{obj}`")))?;
        let xi = src
            .elem_index(a, &x)
            .ok_or_else(|| perr(file, lineno, format!("unknown source element `{x}`")))?;
        let yi = dst
            .elem_index(a, &y)
            .ok_or_else(|| perr(file, lineno, format!("unknown target element `{y}`")))?;
        components[a.0][xi] = Some(yi);
    }
    let mut total = Vec::with_capacity(components.len());
    for (ai, comp) in components.into_iter().enumerate() {
        let mut resolved = Vec::with_capacity(comp.len());
        for (ei, slot) in comp.into_iter().enumerate() {
            match slot {
                Some(v) => resolved.push(v),
                None => {
                    return Err(TkError::invalid(
                        "presheaf map",
                        format!(
                            "{file}: component at `{}` undefined on element {}",
                            base.obj_name(Obj(ai)),
                            ei
                        ),
                    ))
                }
            }
        }
        total.push(resolved);
    }
    let map = PresheafMap::new(src.psh.clone(), dst.psh.clone(), total)
        .map_err(|e| TkError::invalid("presheaf map", format!("{file}: {e}")))?;
    Ok((
        name,
        NamedMap {
            source: src_name,
            target: dst_name,
            map,
        },
    ))
}

pub fn parse_fj(text: &str, file: &str, ws: &Workspace) -> Result<(String, NamedTopology), TkError> {
    let mut header: Option<(String, String)> = None;
    let mut cover_lines: Vec<(usize, String, Vec<String>)> = Vec::new();
    for (lineno, line) in logical_lines(text) {
        let t = tokens_of(line);
        match t[0].as_str() {
            "topology" => {
                if t.len() != 4 || t[2] != "over" {
                    return Err(perr(file, lineno, "usage: topology <name> over <category>"));
                }
                header = Some((t[1].clone(), t[3].clone()));
            }
            "cover" => {
                // cover <obj> = {morphisms}
                if t.len() < 4 || t[2] != "=" {
                    return Err(perr(file, lineno, "usage: cover <obj> = {morphisms}"));
                }
                let (members, _) = parse_braced(&t, 3, file, lineno)?;
                cover_lines.push((lineno, t[1].clone(), members));
            }
            other => return Err(perr(file, lineno, format!("unknown directive `{other}`"))),
        }
    }
    let (name, over) =
        header.ok_or_else(|| perr(file, 1, "missing `topology <name> over <category>`"))?;
    let base = ws.category(&over)?.clone();
    let om = omega(&base);
    // Maximal sieves are implicit.
    let mut covers: Vec<BTreeSet<usize>> = base
        .objects()
        .map(|a| [om.maximal_index(a)].into_iter().collect())
        .collect();
    for (lineno, obj, members) in cover_lines {
        let a = base
            .object_by_name(&obj)
            .ok_or_else(|| perr(file, lineno, format!("unknown object `{obj}`")))?;
        let mut sieve_members = BTreeSet::new();
        for m in members {
            let f = base
                .mor_by_name(&m)
                .ok_or_else(|| perr(file, lineno, format!("unknown morphism `{m}`")))?;
            if base.cod(f) != a {
                return Err(perr(file, lineno, format!("`{m}` does not land in `{obj}`")));
            }
            sieve_members.insert(f);
        }
        let sieve = crate::classifier::Sieve {
            apex: a,
            members: sieve_members,
        };
        if let Some((f, g)) = sieve.closure_failure(&base) {
            return Err(perr(
                file,
                lineno,
                format!(
                    "cover is not a sieve: contains `{}` but not its precomposite with `{}`",
                    base.mor_name(f),
                    base.mor_name(g)
                ),
            ));
        }
        let idx = om
            .sieve_index(&sieve)
            .expect("closed sieves are enumerated");
        covers[a.0].insert(idx);
    }
    let site = Site::new(om, GrothendieckTopology { covers })
        .map_err(|e| TkError::invalid("topology", format!("{file}: {e}")))?;
    Ok((name, NamedTopology { over, site }))
}

pub fn parse_fs(text: &str, file: &str) -> Result<(String, FinSpace), TkError> {
    let mut name: Option<String> = None;
    let mut points: Vec<String> = Vec::new();
    let mut opens: Vec<(usize, Vec<String>)> = Vec::new();
    for (lineno, line) in logical_lines(text) {
        let t = tokens_of(line);
        match t[0].as_str() {
            "space" => {
                if t.len() != 2 {
                    return Err(perr(file, lineno, "usage: space <name>"));
                }
                name = Some(t[1].clone());
            }
            "points" => {
                points = t[1..].to_vec();
            }
            "open" => {
                let (members, _) = parse_braced(&t, 1, file, lineno)?;
                opens.push((lineno, members));
            }
            other => return Err(perr(file, lineno, format!("unknown directive `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| perr(file, 1, "missing `space <name>` header"))?;
    let mut open_sets = Vec::new();
    for (lineno, members) in opens {
        let mut set = BTreeSet::new();
        for m in members {
            let idx = points
                .iter()
                .position(|p| *p == m)
                .ok_or_else(|| perr(file, lineno, format!("unknown point `{m}`")))?;
            set.insert(idx);
        }
        open_sets.push(set);
    }
    let space = FinSpace::new(points, open_sets)
        .map_err(|e| TkError::invalid("space", format!("{file}: {e}")))?;
    Ok((name, space))
}

pub fn parse_fb(text: &str, file: &str, ws: &Workspace) -> Result<(String, NamedBundle), TkError> {
    let mut header: Option<(String, String, String)> = None;
    let mut point_lines: Vec<(usize, String, String)> = Vec::new();
    for (lineno, line) in logical_lines(text) {
        let t = tokens_of(line);
        match t[0].as_str() {
            "bundle" => {
                // bundle <name> : <total> -> <base>
                if t.len() != 6 || t[2] != ":" || t[4] != "->" {
                    return Err(perr(file, lineno, "usage: bundle <name> : <total> -> <base>"));
                }
                header = Some((t[1].clone(), t[3].clone(), t[5].clone()));
            }
            "point" => {
                // point <y> -> <x>
                if t.len() != 4 || t[2] != "->" {
                    return Err(perr(file, lineno, "usage: point <y> -> <x>"));
                }
                point_lines.push((lineno, t[1].clone(), t[3].clone()));
            }
            other => return Err(perr(file, lineno, format!("unknown directive `{other}`"))),
        }
    }
    let (name, total_name, base_name) =
        header.ok_or_else(|| perr(file, 1, "missing `bundle <name> : <total> -> <base>`"))?;
    let total = ws.space(&total_name)?.space.clone();
    let base = ws.space(&base_name)?.space.clone();
    let mut proj: Vec<Option<usize>> = vec![None; total.point_count()];
    for (lineno, y, x) in point_lines {
        let yi = total
            .point_by_name(&y)
            .ok_or_else(|| perr(file, lineno, format!("unknown total point `{y}`")))?;
        let xi = base
            .point_by_name(&x)
            .ok_or_else(|| perr(file, lineno, format!("unknown base point `{x}`")))?;
        proj[yi] = Some(xi);
    }
    let proj: Vec<usize> = proj
        .into_iter()
        .enumerate()
        .map(|(i, slot)| {
            slot.ok_or_else(|| {
                TkError::invalid(
                    "bundle",
                    format!("{file}: projection undefined on point `{}`", total.point_name(i)),
                )
            })
        })
        .collect::<Result<_, _>>()?;
    let bundle = Bundle::new(total, base, proj)
        .map_err(|e| TkError::invalid("bundle", format!("{file}: {e}")))?;
    Ok((
        name,
        NamedBundle {
            total: total_name,
            base: base_name,
            bundle,
        },
    ))
}

pub fn parse_fa(text: &str, file: &str, ws: &Workspace) -> Result<(String, NamedAlgebra), TkError> {
    #[derive(Default)]
    struct Tables {
        carrier: Option<String>,
        unit: Vec<(usize, String, String)>,
        inv: Vec<(usize, String, String, String)>,
        mult: Vec<(usize, String, String, String, String)>,
        zero: Vec<(usize, String, String)>,
        one: Vec<(usize, String, String)>,
        neg: Vec<(usize, String, String, String)>,
        add: Vec<(usize, String, String, String, String)>,
        mul: Vec<(usize, String, String, String, String)>,
    }
    let mut header: Option<(String, String, String)> = None; // kind, name, over
    let mut tb = Tables::default();
    for (lineno, line) in logical_lines(text) {
        let t = tokens_of(line);
        match t[0].as_str() {
            "algebra" => {
                // algebra group|ring <name> over <category>
                if t.len() != 5 || t[3] != "over" {
                    return Err(perr(file, lineno, "usage: algebra group|ring <name> over <category>"));
                }
                header = Some((t[1].clone(), t[2].clone(), t[4].clone()));
            }
            "carrier" => {
                if t.len() != 2 {
                    return Err(perr(file, lineno, "usage: carrier <presheaf>"));
                }
                tb.carrier = Some(t[1].clone());
            }
            "unit" if t.len() == 3 => tb.unit.push((lineno, t[1].clone(), t[2].clone())),
            "zero" if t.len() == 3 => tb.zero.push((lineno, t[1].clone(), t[2].clone())),
            "one" if t.len() == 3 => tb.one.push((lineno, t[1].clone(), t[2].clone())),
            "inv" if t.len() == 4 => {
                tb.inv.push((lineno, t[1].clone(), t[2].clone(), t[3].clone()))
            }
            "neg" if t.len() == 4 => {
                tb.neg.push((lineno, t[1].clone(), t[2].clone(), t[3].clone()))
            }
            "mult" if t.len() == 5 => tb.mult.push((
                lineno,
                t[1].clone(),
                t[2].clone(),
                t[3].clone(),
                t[4].clone(),
            )),
            "add" if t.len() == 5 => tb.add.push((
                lineno,
                t[1].clone(),
                t[2].clone(),
                t[3].clone(),
                t[4].clone(),
            )),
            "mul" if t.len() == 5 => tb.mul.push((
                lineno,
                t[1].clone(),
                t[2].clone(),
                t[3].clone(),
                t[4].clone(),
            )),
            other => return Err(perr(file, lineno, format!("unknown or malformed directive `{other}`"))),
        }
    }
    let (kind, name, over) =
        header.ok_or_else(|| perr(file, 1, "missing `algebra group|ring <name> over <category>`"))?;
    let carrier_name = tb
        .carrier
        .clone()
        .ok_or_else(|| perr(file, 1, "missing `carrier <presheaf>`"))?;
    let np = ws.presheaf(&carrier_name)?;
    if np.over != over {
        return Err(TkError::invalid(
            "algebra",
            format!("{file}: carrier lives over `{}`, not `{over}`", np.over),
        ));
    }
    let base = np.psh.base().clone();
    let obj = |lineno: usize, s: &str| -> Result<Obj, TkError> {
        base.object_by_name(s)
            .ok_or_else(|| perr(file, lineno, format!("unknown object `{s}`")))
    };
    let elem = |lineno: usize, a: Obj, s: &str| -> Result<usize, TkError> {
        np.elem_index(a, s)
            .ok_or_else(|| perr(file, lineno, format!("unknown element `{s}`")))
    };
    // Dense operation tables, validated for totality.
    let read_unary = |rows: &[(usize, String, String, String)],
                      what: &str|
     -> Result<Vec<Vec<usize>>, TkError> {
        let mut table: Vec<Vec<Option<usize>>> = base
            .objects()
            .map(|a| vec![None; np.psh.size(a)])
            .collect();
        for (lineno, o, x, y) in rows {
            let a = obj(*lineno, o)?;
            let xi = elem(*lineno, a, x)?;
            let yi = elem(*lineno, a, y)?;
            table[a.0][xi] = Some(yi);
        }
        table
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|slot| {
                        slot.ok_or_else(|| {
                            TkError::invalid("algebra", format!("{file}: incomplete {what} table"))
                        })
                    })
                    .collect()
            })
            .collect()
    };
    let read_binary = |rows: &[(usize, String, String, String, String)],
                       what: &str|
     -> Result<Vec<Vec<Vec<usize>>>, TkError> {
        let mut table: Vec<Vec<Vec<Option<usize>>>> = base
            .objects()
            .map(|a| vec![vec![None; np.psh.size(a)]; np.psh.size(a)])
            .collect();
        for (lineno, o, x, y, z) in rows {
            let a = obj(*lineno, o)?;
            let xi = elem(*lineno, a, x)?;
            let yi = elem(*lineno, a, y)?;
            let zi = elem(*lineno, a, z)?;
            table[a.0][xi][yi] = Some(zi);
        }
        table
            .into_iter()
            .map(|rows| {
                rows.into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|slot| {
                                slot.ok_or_else(|| {
                                    TkError::invalid(
                                        "algebra",
                                        format!("{file}: incomplete {what} table"),
                                    )
                                })
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    };
    let read_element = |rows: &[(usize, String, String)], what: &str| -> Result<Vec<usize>, TkError> {
        let mut table: Vec<Option<usize>> = vec![None; base.object_count()];
        for (lineno, o, e) in rows {
            let a = obj(*lineno, o)?;
            table[a.0] = Some(elem(*lineno, a, e)?);
        }
        table
            .into_iter()
            .map(|slot| {
                slot.ok_or_else(|| {
                    TkError::invalid("algebra", format!("{file}: incomplete {what} table"))
                })
            })
            .collect()
    };
    match kind.as_str() {
        "group" => {
            let mult = read_binary(&tb.mult, "mult")?;
            let inv = read_unary(&tb.inv, "inv")?;
            let unit = read_element(&tb.unit, "unit")?;
            let group = InternalGroup::from_tables(
                np.psh.clone(),
                |a, x, y| mult[a.0][x][y],
                |a, x| inv[a.0][x],
                |a| unit[a.0],
            )
            .map_err(|e| TkError::invalid("algebra", format!("{file}: {e}")))?;
            Ok((name, NamedAlgebra::Group { over, group }))
        }
        "ring" => {
            let add = read_binary(&tb.add, "add")?;
            let mul = read_binary(&tb.mul, "mul")?;
            let neg = read_unary(&tb.neg, "neg")?;
            let zero = read_element(&tb.zero, "zero")?;
            let one = read_element(&tb.one, "one")?;
            let carrier = np.psh.clone();
            let prod = crate::psh::product(&carrier, &carrier)?;
            let binop = |table: &Vec<Vec<Vec<usize>>>| -> Result<PresheafMap, TkError> {
                let comps: Vec<Vec<usize>> = base
                    .objects()
                    .map(|a| {
                        (0..prod.obj.size(a))
                            .map(|i| {
                                let (x, y) = prod.unpair(a, i);
                                table[a.0][x][y]
                            })
                            .collect()
                    })
                    .collect();
                PresheafMap::new(prod.obj.clone(), carrier.clone(), comps)
            };
            let add_map = binop(&add).map_err(|e| TkError::invalid("algebra", format!("{file}: {e}")))?;
            let mul_map = binop(&mul).map_err(|e| TkError::invalid("algebra", format!("{file}: {e}")))?;
            let neg_map = PresheafMap::new(carrier.clone(), carrier.clone(), neg)
                .map_err(|e| TkError::invalid("algebra", format!("{file}: {e}")))?;
            let zero_map = PresheafMap::global_element(&carrier, zero)
                .map_err(|e| TkError::invalid("algebra", format!("{file}: {e}")))?;
            let one_map = PresheafMap::global_element(&carrier, one)
                .map_err(|e| TkError::invalid("algebra", format!("{file}: {e}")))?;
            let ring = InternalRing::new(carrier, add_map, mul_map, neg_map, zero_map, one_map)
                .map_err(|e| TkError::invalid("algebra", format!("{file}: {e}")))?;
            Ok((name, NamedAlgebra::Ring { over, ring }))
        }
        other => Err(TkError::invalid(
            "algebra",
            format!("{file}: unknown algebra kind `{other}`"),
        )),
    }
}

fn parse_fw_blocks(text: &str, file: &str, ws: &mut Workspace) -> Result<(), TkError> {
    #[derive(Clone)]
    enum Block {
        Functor {
            name: String,
            src: String,
            dst: String,
            fobj: Vec<(usize, String, String)>,
            fmor: Vec<(usize, String, String)>,
        },
        DiagramFunctor {
            name: String,
            src: String,
            dst: String,
            dobj: Vec<(usize, String, String)>,
            dmor: Vec<(usize, String, String)>,
        },
    }
    let mut blocks: Vec<Block> = Vec::new();
    let mut corpora: Vec<(usize, String, String, Vec<String>)> = Vec::new();
    let mut candidates: Vec<(usize, String, String, String, String)> = Vec::new();
    for (lineno, line) in logical_lines(text) {
        let t = tokens_of(line);
        match t[0].as_str() {
            "workspace" | "include" => {}
            "functor" => {
                // functor <name> : <catA> -> <catB>
                if t.len() != 6 || t[2] != ":" || t[4] != "->" {
                    return Err(perr(file, lineno, "usage: functor <name> : <cat> -> <cat>"));
                }
                blocks.push(Block::Functor {
                    name: t[1].clone(),
                    src: t[3].clone(),
                    dst: t[5].clone(),
                    fobj: Vec::new(),
                    fmor: Vec::new(),
                });
            }
            "diagram-functor" => {
                // diagram-functor <name> : <catC> => <catD>
                if t.len() != 6 || t[2] != ":" || t[4] != "=>" {
                    return Err(perr(file, lineno, "usage: diagram-functor <name> : <cat> => <cat>"));
                }
                blocks.push(Block::DiagramFunctor {
                    name: t[1].clone(),
                    src: t[3].clone(),
                    dst: t[5].clone(),
                    dobj: Vec::new(),
                    dmor: Vec::new(),
                });
            }
            "fobj" | "fmor" | "dobj" | "dmor" => {
                if t.len() != 4 || t[2] != "=" {
                    return Err(perr(file, lineno, format!("usage: {} <from> = <to>", t[0])));
                }
                let entry = (lineno, t[1].clone(), t[3].clone());
                match (t[0].as_str(), blocks.last_mut()) {
                    ("fobj", Some(Block::Functor { fobj, .. })) => fobj.push(entry),
                    ("fmor", Some(Block::Functor { fmor, .. })) => fmor.push(entry),
                    ("dobj", Some(Block::DiagramFunctor { dobj, .. })) => dobj.push(entry),
                    ("dmor", Some(Block::DiagramFunctor { dmor, .. })) => dmor.push(entry),
                    _ => {
                        return Err(perr(
                            file,
                            lineno,
                            format!("`{}` outside of its block", t[0]),
                        ))
                    }
                }
            }
            "corpus" => {
                // corpus <name> over <category> = <psh...>
                if t.len() < 6 || t[2] != "over" || t[4] != "=" {
                    return Err(perr(file, lineno, "usage: corpus <name> over <category> = <presheaves>"));
                }
                corpora.push((lineno, t[1].clone(), t[3].clone(), t[5..].to_vec()));
            }
            "nno-candidate" => {
                // nno-candidate <name> : <N> <zero> <succ>
                if t.len() != 6 || t[2] != ":" {
                    return Err(perr(file, lineno, "usage: nno-candidate <name> : <N> <zero> <succ>"));
                }
                candidates.push((lineno, t[1].clone(), t[3].clone(), t[4].clone(), t[5].clone()));
            }
            other => return Err(perr(file, lineno, format!("unknown directive `{other}`"))),
        }
    }
    for block in blocks {
        match block {
            Block::Functor {
                name,
                src,
                dst,
                fobj,
                fmor,
            } => {
                let source = ws.category(&src)?.clone();
                let target = ws.category(&dst)?.clone();
                let mut obj_map: Vec<Option<Obj>> = vec![None; source.object_count()];
                for (lineno, from, to) in fobj {
                    let a = source
                        .object_by_name(&from)
                        .ok_or_else(|| perr(file, lineno, format!("unknown object `{from}`")))?;
                    let b = target
                        .object_by_name(&to)
                        .ok_or_else(|| perr(file, lineno, format!("unknown object `{to}`")))?;
                    obj_map[a.0] = Some(b);
                }
                let mut mor_map: Vec<Option<Mor>> = vec![None; source.mor_count()];
                for (lineno, from, to) in fmor {
                    let f = source
                        .mor_by_name(&from)
                        .ok_or_else(|| perr(file, lineno, format!("unknown morphism `{from}`")))?;
                    let g = target
                        .mor_by_name(&to)
                        .ok_or_else(|| perr(file, lineno, format!("unknown morphism `{to}`")))?;
                    mor_map[f.0] = Some(g);
                }
                // Identities are implicit.
                let obj_map: Vec<Obj> = obj_map
                    .into_iter()
                    .enumerate()
                    .map(|(i, slot)| {
                        slot.ok_or_else(|| {
                            TkError::invalid(
                                "functor",
                                format!("{file}: no image for object `{}`", source.obj_name(Obj(i))),
                            )
                        })
                    })
                    .collect::<Result<_, _>>()?;
                let mor_map: Vec<Mor> = mor_map
                    .into_iter()
                    .enumerate()
                    .map(|(i, slot)| match slot {
                        Some(m) => Ok(m),
                        None => {
                            let f = Mor(i);
                            if source.is_identity(f) {
                                Ok(target.identity(obj_map[source.dom(f).0]))
                            } else {
                                Err(TkError::invalid(
                                    "functor",
                                    format!(
                                        "{file}: no image for morphism `{}`",
                                        source.mor_name(f)
                                    ),
                                ))
                            }
                        }
                    })
                    .collect::<Result<_, _>>()?;
                let functor = FinFunctor::new(source, target, obj_map, mor_map)
                    .map_err(|e| TkError::invalid("functor", format!("{file}: {e}")))?;
                insert_unique(&mut ws.functors, &name, functor, "functor")?;
            }
            Block::DiagramFunctor {
                name,
                src,
                dst,
                dobj,
                dmor,
            } => {
                let source = ws.category(&src)?.clone();
                let target = ws.category(&dst)?.clone();
                let mut objects: Vec<Option<Presheaf>> = vec![None; source.object_count()];
                for (lineno, from, to) in dobj {
                    let a = source
                        .object_by_name(&from)
                        .ok_or_else(|| perr(file, lineno, format!("unknown object `{from}`")))?;
                    objects[a.0] = Some(ws.presheaf(&to)?.psh.clone());
                }
                let objects: Vec<Presheaf> = objects
                    .into_iter()
                    .enumerate()
                    .map(|(i, slot)| {
                        slot.ok_or_else(|| {
                            TkError::invalid(
                                "diagram functor",
                                format!("{file}: no value for object `{}`", source.obj_name(Obj(i))),
                            )
                        })
                    })
                    .collect::<Result<_, _>>()?;
                let mut maps: Vec<Option<PresheafMap>> = vec![None; source.mor_count()];
                for (lineno, from, to) in dmor {
                    let f = source
                        .mor_by_name(&from)
                        .ok_or_else(|| perr(file, lineno, format!("unknown morphism `{from}`")))?;
                    maps[f.0] = Some(ws.map(&to)?.map.clone());
                }
                let maps: Vec<PresheafMap> = maps
                    .into_iter()
                    .enumerate()
                    .map(|(i, slot)| match slot {
                        Some(m) => Ok(m),
                        None => {
                            let f = Mor(i);
                            if source.is_identity(f) {
                                Ok(PresheafMap::identity(&objects[source.dom(f).0]))
                            } else {
                                Err(TkError::invalid(
                                    "diagram functor",
                                    format!("{file}: no map for `{}`", source.mor_name(f)),
                                ))
                            }
                        }
                    })
                    .collect::<Result<_, _>>()?;
                let df = DiagramFunctor::new(source, target, objects, maps)
                    .map_err(|e| TkError::invalid("diagram functor", format!("{file}: {e}")))?;
                insert_unique(&mut ws.diagram_functors, &name, df, "diagram functor")?;
            }
        }
    }
    for (lineno, name, over, members) in corpora {
        let base = ws.category(&over)?.clone();
        let objects: Vec<Presheaf> = members
            .iter()
            .map(|m| Ok(ws.presheaf(m)?.psh.clone()))
            .collect::<Result<_, TkError>>()
            .map_err(|e| perr(file, lineno, e.to_string()))?;
        let corpus = ToposCorpus::new(base, objects)
            .map_err(|e| TkError::invalid("corpus", format!("{file}: {e}")))?;
        insert_unique(&mut ws.corpora, &name, corpus, "corpus")?;
    }
    for (lineno, name, n, zero, succ) in candidates {
        ws.presheaf(&n).map_err(|e| perr(file, lineno, e.to_string()))?;
        ws.map(&zero).map_err(|e| perr(file, lineno, e.to_string()))?;
        ws.map(&succ).map_err(|e| perr(file, lineno, e.to_string()))?;
        insert_unique(
            &mut ws.nno_candidates,
            &name,
            NnoCandidate {
                carrier: n,
                zero,
                succ,
            },
            "nno candidate",
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_file(dir: &Path, name: &str, contents: &str) -> PathBuf {
        let path = dir.join(name);
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(contents.as_bytes()).unwrap();
        path
    }

    fn tmpdir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("toposkit-files-{tag}-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        std::fs::create_dir_all(&dir).unwrap();
        dir
    }

    const ARROW_FC: &str = "# the walking arrow\ncategory arrow\nobject a\nobject b\nmorphism u : a -> b\n";

    #[test]
    fn category_files_load_and_validate() {
        let dir = tmpdir("fc");
        let p = write_file(&dir, "arrow.fc", ARROW_FC);
        let ws = Workspace::load(&[p]).unwrap();
        assert_eq!(ws.artifact_count(), 1);
        let cat = ws.category("arrow").unwrap();
        assert_eq!(cat.mor_count(), 3);
    }

    #[test]
    fn presheaf_referencing_an_unknown_category_is_an_error() {
        let dir = tmpdir("fp-unknown");
        let p = write_file(
            &dir,
            "p.fp",
            "presheaf P over nowhere\nset a = {x}\n",
        );
        match Workspace::load(&[p]) {
            Err(TkError::Unresolved { kind, name }) => {
                assert_eq!(kind, "category");
                assert_eq!(name, "nowhere");
            }
            other => panic!("expected an unresolved-category error, got {other:?}"),
        }
    }

    #[test]
    fn presheaf_files_resolve_elements_by_name() {
        let dir = tmpdir("fp");
        let c = write_file(&dir, "arrow.fc", ARROW_FC);
        let p = write_file(
            &dir,
            "p.fp",
            "presheaf P over arrow\nset a = {x0 x1}\nset b = {y0 y1 y2}\nmap u : y0 -> x0\nmap u : y1 -> x0\nmap u : y2 -> x1\n",
        );
        let ws = Workspace::load(&[c, p]).unwrap();
        let np = ws.presheaf("P").unwrap();
        assert_eq!(np.psh.sizes(), &[2, 3]);
    }

    #[test]
    fn incomplete_presheaf_actions_are_rejected() {
        let dir = tmpdir("fp-bad");
        let c = write_file(&dir, "arrow.fc", ARROW_FC);
        let p = write_file(
            &dir,
            "p.fp",
            "presheaf P over arrow\nset a = {x}\nset b = {y0 y1}\nmap u : y0 -> x\n",
        );
        assert!(Workspace::load(&[c, p]).is_err());
    }

    #[test]
    fn spaces_register_their_open_poset_category() {
        let dir = tmpdir("fs");
        let s = write_file(
            &dir,
            "sier.fs",
            "space sierpinski\npoints c o\nopen { o }\n",
        );
        let ws = Workspace::load(&[s]).unwrap();
        assert!(ws.category("Open(sierpinski)").is_ok());
        let site = ws.space("sierpinski").unwrap();
        assert_eq!(site.frame.len(), 3);
    }

    #[test]
    fn workspace_files_include_and_declare() {
        let dir = tmpdir("fw");
        write_file(&dir, "one.fc", "category one\nobject pt\n");
        write_file(
            &dir,
            "n2.fp",
            "presheaf N2 over one\nset pt = {a b}\n",
        );
        write_file(
            &dir,
            "zero.fm",
            "presheafmap zero2 : One -> N2\nat pt : t -> a\n",
        );
        write_file(
            &dir,
            "one_psh.fp",
            "presheaf One over one\nset pt = {t}\n",
        );
        write_file(
            &dir,
            "succ.fm",
            "presheafmap succ2 : N2 -> N2\nat pt : a -> b\nat pt : b -> a\n",
        );
        let w = write_file(
            &dir,
            "demo.fw",
            "workspace demo\ninclude one.fc\ninclude one_psh.fp\ninclude n2.fp\ninclude zero.fm\ninclude succ.fm\ncorpus small over one = One N2\nnno-candidate swap : N2 zero2 succ2\n",
        );
        let ws = Workspace::load(&[w]).unwrap();
        assert_eq!(ws.corpora.len(), 1);
        assert_eq!(ws.nno_candidates.len(), 1);
        assert_eq!(ws.corpora["small"].objects.len(), 2);
    }

    #[test]
    fn bundle_files_check_continuity() {
        let dir = tmpdir("fb");
        write_file(&dir, "sier.fs", "space S\npoints c o\nopen { o }\n");
        write_file(&dir, "pt.fs", "space P\npoints x\n");
        let good = write_file(&dir, "b.fb", "bundle B : P -> S\npoint x -> o\n");
        let ws = Workspace::load(&[
            dir.join("sier.fs"),
            dir.join("pt.fs"),
            good,
        ])
        .unwrap();
        assert!(ws.bundles.contains_key("B"));
    }

    #[test]
    fn algebra_files_build_groups() {
        let dir = tmpdir("fa");
        write_file(&dir, "one.fc", "category one\nobject pt\n");
        write_file(&dir, "z2.fp", "presheaf Z2 over one\nset pt = {e g}\n");
        let a = write_file(
            &dir,
            "z2.fa",
            "algebra group Z2grp over one\ncarrier Z2\nunit pt e\ninv pt e e\ninv pt g g\nmult pt e e e\nmult pt e g g\nmult pt g e g\nmult pt g g e\n",
        );
        let ws = Workspace::load(&[dir.join("one.fc"), dir.join("z2.fp"), a]).unwrap();
        match &ws.algebras["Z2grp"] {
            NamedAlgebra::Group { group, .. } => {
                assert!(crate::internal::check_group(group).ok());
            }
            _ => panic!("expected a group"),
        }
    }

    #[test]
    fn topology_files_validate_the_axioms() {
        let dir = tmpdir("fj");
        write_file(&dir, "arrow.fc", ARROW_FC);
        // The largest topology on the arrow: empty sieve everywhere plus
        // {u} on b.
        let t = write_file(
            &dir,
            "big.fj",
            "topology big over arrow\ncover a = {}\ncover b = {}\ncover b = {u}\n",
        );
        let ws = Workspace::load(&[dir.join("arrow.fc"), t]).unwrap();
        let nt = &ws.topologies["big"];
        // All sieves cover: 2 on a, 3 on b.
        assert_eq!(nt.site.topology.covers[0].len(), 2);
        assert_eq!(nt.site.topology.covers[1].len(), 3);
    }
}
