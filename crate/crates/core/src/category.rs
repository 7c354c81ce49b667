//! Finite categories given by explicit composition tables.
//!
//! `compose(g, f)` is `g ∘ f`: `f` is applied first, so the pair is composable
//! exactly when `cod(f) = dom(g)`. A chain `v_1, …, v_n` composes to
//! `v_n ∘ … ∘ v_1`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::validation::{Validation, ViolationKind};

/// On-disk description of a category. Names only; nothing is checked yet.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryData {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDecl>,
    pub identities: BTreeMap<String, String>,
    /// Triples `[g, f, h]` meaning `g ∘ f = h`.
    pub composition: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDecl {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

impl MorphismDecl {
    pub fn new(name: impl Into<String>, dom: impl Into<String>, cod: impl Into<String>) -> Self {
        MorphismDecl {
            name: name.into(),
            dom: dom.into(),
            cod: cod.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectId(usize);

impl ObjectId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorphismId(usize);

impl MorphismId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: ObjectId,
    pub cod: ObjectId,
}

/// A category whose laws have been checked. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorphismId>,
    // row-major: table[g * m + f] = g ∘ f
    table: Vec<Option<MorphismId>>,
    object_index: HashMap<String, ObjectId>,
    morphism_index: HashMap<String, MorphismId>,
    by_name: Vec<MorphismId>,
    rank: Vec<usize>,
    homs: Vec<Vec<MorphismId>>,
}

/// Name-resolution of raw data, tolerant of every kind of defect.
struct Resolved<'a> {
    object_index: HashMap<&'a str, usize>,
    morphism_index: HashMap<&'a str, usize>,
    // None for morphisms shadowed by an earlier declaration of the same name
    // or whose endpoints do not resolve.
    ends: Vec<Option<(usize, usize)>>,
    identities: Vec<Option<usize>>,
    table: Vec<Option<usize>>,
}

fn resolve<'a>(data: &'a CategoryData, report: &mut Validation) -> Resolved<'a> {
    use ViolationKind::*;

    let mut object_index = HashMap::new();
    for name in &data.objects {
        if name.is_empty() {
            report.push(EmptyName, "object with empty name");
        } else if object_index.contains_key(name.as_str()) {
            report.push(DuplicateName, format!("object `{name}` declared twice"));
        } else {
            object_index.insert(name.as_str(), object_index.len());
        }
    }
    let m = data.morphisms.len();
    let mut morphism_index = HashMap::new();
    let mut ends = vec![None; m];
    for (i, decl) in data.morphisms.iter().enumerate() {
        if decl.name.is_empty() {
            report.push(EmptyName, "morphism with empty name");
            continue;
        }
        if morphism_index.contains_key(decl.name.as_str()) {
            report.push(
                DuplicateName,
                format!("morphism `{}` declared twice", decl.name),
            );
            continue;
        }
        morphism_index.insert(decl.name.as_str(), i);
        let dom = object_index.get(decl.dom.as_str()).copied();
        let cod = object_index.get(decl.cod.as_str()).copied();
        if dom.is_none() {
            report.push(
                UnknownName,
                format!("morphism `{}` has unknown domain `{}`", decl.name, decl.dom),
            );
        }
        if cod.is_none() {
            report.push(
                UnknownName,
                format!(
                    "morphism `{}` has unknown codomain `{}`",
                    decl.name, decl.cod
                ),
            );
        }
        if let (Some(d), Some(c)) = (dom, cod) {
            ends[i] = Some((d, c));
        }
    }

    let mut identities = vec![None; object_index.len()];
    for name in &data.objects {
        let Some(&obj) = object_index.get(name.as_str()) else {
            continue;
        };
        if identities[obj].is_some() {
            continue;
        }
        let Some(id_name) = data.identities.get(name) else {
            report.push(MissingIdentity, format!("object `{name}` has no identity"));
            continue;
        };
        let Some(&id) = morphism_index.get(id_name.as_str()) else {
            report.push(
                UnknownName,
                format!("identity of `{name}` is unknown morphism `{id_name}`"),
            );
            continue;
        };
        match ends[id] {
            Some((d, c)) if d == obj && c == obj => identities[obj] = Some(id),
            Some(_) => report.push(
                IdentityTyping,
                format!(
                    "identity of `{name}` is `{id_name}`: {} -> {}",
                    data.morphisms[id].dom, data.morphisms[id].cod
                ),
            ),
            None => {}
        }
    }
    for key in data.identities.keys() {
        if !object_index.contains_key(key.as_str()) {
            report.push(
                UnknownName,
                format!("identity given for unknown object `{key}`"),
            );
        }
    }

    let mut table: Vec<Option<usize>> = vec![None; m * m];
    for [g_name, f_name, h_name] in &data.composition {
        let mut lookup = |n: &str| {
            let found = morphism_index.get(n).copied();
            if found.is_none() {
                report.push(
                    UnknownName,
                    format!("composition mentions unknown morphism `{n}`"),
                );
            }
            found
        };
        let (g, f, h) = (lookup(g_name), lookup(f_name), lookup(h_name));
        let (Some(g), Some(f), Some(h)) = (g, f, h) else {
            continue;
        };
        let (Some((dom_g, cod_g)), Some((dom_f, cod_f)), Some((dom_h, cod_h))) =
            (ends[g], ends[f], ends[h])
        else {
            continue;
        };
        if cod_f != dom_g {
            report.push(
                UndefinedComposite,
                format!(
                    "`{g_name}` ∘ `{f_name}` given but cod({f_name}) = `{}` and dom({g_name}) = `{}`",
                    data.morphisms[f].cod, data.morphisms[g].dom
                ),
            );
            continue;
        }
        if dom_h != dom_f || cod_h != cod_g {
            report.push(
                CompositeTyping,
                format!(
                    "`{g_name}` ∘ `{f_name}` = `{h_name}` but `{h_name}` is {} -> {}, expected {} -> {}",
                    data.morphisms[h].dom,
                    data.morphisms[h].cod,
                    data.morphisms[f].dom,
                    data.morphisms[g].cod
                ),
            );
        }
        match table[g * m + f] {
            Some(prev) if prev != h => report.push(
                ConflictingComposite,
                format!(
                    "`{g_name}` ∘ `{f_name}` given as both `{}` and `{h_name}`",
                    data.morphisms[prev].name
                ),
            ),
            Some(_) => {}
            None => table[g * m + f] = Some(h),
        }
    }

    Resolved {
        object_index,
        morphism_index,
        ends,
        identities,
        table,
    }
}

fn check_laws(data: &CategoryData, r: &Resolved<'_>, report: &mut Validation) {
    use ViolationKind::*;
    let m = data.morphisms.len();
    let name = |i: usize| data.morphisms[i].name.as_str();
    let live: Vec<usize> = (0..m).filter(|&i| r.ends[i].is_some()).collect();
    let ends = |i: usize| r.ends[i].expect("live morphism");

    for &g in &live {
        for &f in &live {
            if ends(f).1 == ends(g).0 && r.table[g * m + f].is_none() {
                report.push(
                    MissingComposite,
                    format!("no composite given for `{}` ∘ `{}`", name(g), name(f)),
                );
            }
        }
    }

    for &f in &live {
        let (dom, cod) = ends(f);
        if let Some(id) = r.identities[cod] {
            if let Some(h) = r.table[id * m + f] {
                if h != f {
                    report.push(
                        IdentityLaw,
                        format!(
                            "`{}` ∘ `{}` = `{}`, expected `{}`",
                            name(id),
                            name(f),
                            name(h),
                            name(f)
                        ),
                    );
                }
            }
        }
        if let Some(id) = r.identities[dom] {
            if let Some(h) = r.table[f * m + id] {
                if h != f {
                    report.push(
                        IdentityLaw,
                        format!(
                            "`{}` ∘ `{}` = `{}`, expected `{}`",
                            name(f),
                            name(id),
                            name(h),
                            name(f)
                        ),
                    );
                }
            }
        }
    }

    for &f in &live {
        for &g in &live {
            if ends(f).1 != ends(g).0 {
                continue;
            }
            let Some(gf) = r.table[g * m + f] else {
                continue;
            };
            for &h in &live {
                if ends(g).1 != ends(h).0 {
                    continue;
                }
                let Some(hg) = r.table[h * m + g] else {
                    continue;
                };
                let left = r.table[h * m + gf];
                let right = r.table[hg * m + f];
                if let (Some(left), Some(right)) = (left, right) {
                    if left != right {
                        report.push(
                            Associativity,
                            format!(
                                "`{h}` ∘ (`{g}` ∘ `{f}`) = `{}` but (`{h}` ∘ `{g}`) ∘ `{f}` = `{}`",
                                name(left),
                                name(right),
                                h = name(h),
                                g = name(g),
                                f = name(f),
                            ),
                        );
                    }
                }
            }
        }
    }
}

/// Checks totality, typing, identity laws and associativity of raw category data.
pub fn validate_category(data: &CategoryData) -> Validation {
    let mut report = Validation::default();
    let resolved = resolve(data, &mut report);
    check_laws(data, &resolved, &mut report);
    report
}

impl TryFrom<CategoryData> for FiniteCategory {
    type Error = Error;

    fn try_from(data: CategoryData) -> Result<Self> {
        FiniteCategory::new(&data)
    }
}

impl FiniteCategory {
    pub fn new(data: &CategoryData) -> Result<Self> {
        let mut report = Validation::default();
        let r = resolve(data, &mut report);
        check_laws(data, &r, &mut report);
        if !report.is_ok() {
            return Err(Error::InvalidCategory(report));
        }

        // A valid table has no shadowed morphisms, so declaration indices are ids.
        let n = data.objects.len();
        let m = data.morphisms.len();
        let morphisms: Vec<Morphism> = data
            .morphisms
            .iter()
            .zip(&r.ends)
            .map(|(decl, ends)| {
                let (d, c) = ends.expect("validated");
                Morphism {
                    name: decl.name.clone(),
                    dom: ObjectId(d),
                    cod: ObjectId(c),
                }
            })
            .collect();
        let identities = r
            .identities
            .iter()
            .map(|id| MorphismId(id.expect("validated")))
            .collect();
        let table = r.table.iter().map(|e| e.map(MorphismId)).collect();
        let mut by_name: Vec<MorphismId> = (0..m).map(MorphismId).collect();
        by_name.sort_by(|a, b| morphisms[a.0].name.cmp(&morphisms[b.0].name));
        let mut rank = vec![0; m];
        for (pos, id) in by_name.iter().enumerate() {
            rank[id.0] = pos;
        }
        let mut homs = vec![Vec::new(); n * n];
        for (i, mor) in morphisms.iter().enumerate() {
            homs[mor.dom.0 * n + mor.cod.0].push(MorphismId(i));
        }
        Ok(FiniteCategory {
            objects: data.objects.clone(),
            object_index: r
                .object_index
                .iter()
                .map(|(k, &v)| (k.to_string(), ObjectId(v)))
                .collect(),
            morphism_index: r
                .morphism_index
                .iter()
                .map(|(k, &v)| (k.to_string(), MorphismId(v)))
                .collect(),
            morphisms,
            identities,
            table,
            by_name,
            rank,
            homs,
        })
    }

    pub fn empty() -> Self {
        FiniteCategory::new(&CategoryData::default()).expect("empty category is valid")
    }

    pub fn to_data(&self) -> CategoryData {
        let m = self.morphisms.len();
        let mut composition = Vec::new();
        for g in 0..m {
            for f in 0..m {
                if let Some(h) = self.table[g * m + f] {
                    composition.push([
                        self.morphisms[g].name.clone(),
                        self.morphisms[f].name.clone(),
                        self.morphisms[h.0].name.clone(),
                    ]);
                }
            }
        }
        CategoryData {
            objects: self.objects.clone(),
            morphisms: self
                .morphisms
                .iter()
                .map(|mor| {
                    MorphismDecl::new(
                        &mor.name,
                        &self.objects[mor.dom.0],
                        &self.objects[mor.cod.0],
                    )
                })
                .collect(),
            identities: self
                .identities
                .iter()
                .enumerate()
                .map(|(o, id)| (self.objects[o].clone(), self.morphisms[id.0].name.clone()))
                .collect(),
            composition,
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_name(&self, a: ObjectId) -> &str {
        &self.objects[a.0]
    }

    pub fn object_id(&self, name: &str) -> Result<ObjectId> {
        self.object_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjectId> + '_ {
        (0..self.objects.len()).map(ObjectId)
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    /// Morphism ids in declaration order.
    pub fn morphism_ids(&self) -> impl Iterator<Item = MorphismId> + '_ {
        (0..self.morphisms.len()).map(MorphismId)
    }

    /// Morphism ids sorted by name; the order every witness search follows.
    pub fn ids_by_name(&self) -> &[MorphismId] {
        &self.by_name
    }

    /// Position of `f` in [`ids_by_name`](Self::ids_by_name).
    pub fn rank(&self, f: MorphismId) -> usize {
        self.rank[f.0]
    }

    pub fn morphism_id(&self, name: &str) -> Result<MorphismId> {
        self.morphism_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
    }

    pub fn name(&self, f: MorphismId) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn dom(&self, f: MorphismId) -> ObjectId {
        self.morphisms[f.0].dom
    }

    pub fn cod(&self, f: MorphismId) -> ObjectId {
        self.morphisms[f.0].cod
    }

    pub fn identity(&self, a: ObjectId) -> MorphismId {
        self.identities[a.0]
    }

    pub fn is_identity(&self, f: MorphismId) -> bool {
        let dom = self.dom(f);
        dom == self.cod(f) && self.identity(dom) == f
    }

    /// `g ∘ f`, or `None` when `cod(f) != dom(g)`.
    pub fn comp(&self, g: MorphismId, f: MorphismId) -> Option<MorphismId> {
        self.table[g.0 * self.morphisms.len() + f.0]
    }

    /// Morphisms `a -> b` in declaration order.
    pub fn homs(&self, a: ObjectId, b: ObjectId) -> &[MorphismId] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    pub fn is_thin(&self) -> bool {
        self.homs.iter().all(|h| h.len() <= 1)
    }

    pub fn compose(&self, g: &str, f: &str) -> Result<&str> {
        let (gi, fi) = (self.morphism_id(g)?, self.morphism_id(f)?);
        match self.comp(gi, fi) {
            Some(h) => Ok(self.name(h)),
            None => Err(Error::NotComposable {
                g: g.to_string(),
                f: f.to_string(),
                cod_f: self.object_name(self.cod(fi)).to_string(),
                dom_g: self.object_name(self.dom(gi)).to_string(),
            }),
        }
    }

    pub fn identity_of(&self, a: &str) -> Result<&str> {
        Ok(self.name(self.identity(self.object_id(a)?)))
    }

    pub fn hom(&self, a: &str, b: &str) -> Result<Vec<&str>> {
        let (a, b) = (self.object_id(a)?, self.object_id(b)?);
        Ok(self.homs(a, b).iter().map(|&f| self.name(f)).collect())
    }
}

impl fmt::Display for FiniteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "category with {} objects and {} morphisms",
            self.objects.len(),
            self.morphisms.len()
        )
    }
}
