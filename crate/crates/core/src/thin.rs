//! Quasi-ordered classes, i.e. thin categories, presented as preorders.
//!
//! In a thin category the arrow-category notions have closed forms:
//!
//! * `(A, B)` and `(C, D)` are unitary equivalent iff `A ≈ C` and `B ≈ D`,
//!   where `X ≈ Y` means `X ≤ Y ≤ X`;
//! * `(A, B)` is a submorphism of `(C, D)` iff `C ≤ A ≤ B ≤ D`;
//! * the composition condition holds iff the preorder has a global lower
//!   bound and a global upper bound;
//! * the boundedness condition holds iff the preorder is discrete.
//!
//! The last two are checked exhaustively by [`verify_prop1`] and
//! [`verify_prop2`] against the generic deciders.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::archimedean::Analysis;
use crate::arrow::Decision;
use crate::category::{CategoryData, FiniteCategory, MorphismDecl};
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::validation::{Validation, ViolationKind};

pub const DEFAULT_PREORDER_CAP: usize = 4;

/// On-disk preorder: `pairs` lists `[x, y]` for `x ≤ y`, reflexive pairs included.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreorderData {
    pub elements: Vec<String>,
    pub pairs: Vec<[String; 2]>,
}

impl PreorderData {
    /// Reflexive-transitive closure over the declared elements. Pairs naming
    /// unknown elements are kept as given so validation still reports them.
    pub fn closed(&self) -> PreorderData {
        let n = self.elements.len();
        let index: HashMap<&str, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.as_str(), i))
            .collect();
        let mut le = vec![false; n * n];
        let mut foreign = Vec::new();
        for i in 0..n {
            le[i * n + i] = true;
        }
        for [x, y] in &self.pairs {
            match (index.get(x.as_str()), index.get(y.as_str())) {
                (Some(&i), Some(&j)) => le[i * n + j] = true,
                _ => foreign.push([x.clone(), y.clone()]),
            }
        }
        for k in 0..n {
            for i in 0..n {
                if le[i * n + k] {
                    for j in 0..n {
                        if le[k * n + j] {
                            le[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if le[i * n + j] {
                    pairs.push([self.elements[i].clone(), self.elements[j].clone()]);
                }
            }
        }
        pairs.extend(foreign);
        PreorderData {
            elements: self.elements.clone(),
            pairs,
        }
    }
}

pub fn validate_preorder(data: &PreorderData) -> Validation {
    let mut report = Validation::default();
    resolve(data, &mut report);
    report
}

fn resolve(data: &PreorderData, report: &mut Validation) -> Option<Preorder> {
    use ViolationKind::*;
    let mut index = HashMap::new();
    for e in &data.elements {
        if e.is_empty() {
            report.push(EmptyName, "element with empty name");
        } else if e.contains("->") {
            report.push(InvalidName, format!("element `{e}` contains `->`"));
        } else if index.contains_key(e.as_str()) {
            report.push(DuplicateName, format!("element `{e}` declared twice"));
        } else {
            index.insert(e.as_str(), index.len());
        }
    }
    let n = index.len();
    let mut le = vec![false; n * n];
    for [x, y] in &data.pairs {
        let mut known = true;
        for name in [x, y] {
            if !index.contains_key(name.as_str()) {
                report.push(
                    UnknownName,
                    format!("pair ({x}, {y}) mentions unknown element `{name}`"),
                );
                known = false;
            }
        }
        if known {
            le[index[x.as_str()] * n + index[y.as_str()]] = true;
        }
    }
    let elements: Vec<String> = {
        let mut es = vec![String::new(); n];
        for (name, &i) in &index {
            es[i] = name.to_string();
        }
        es
    };
    for i in 0..n {
        if !le[i * n + i] {
            report.push(Reflexivity, format!("missing ({0}, {0})", elements[i]));
        }
    }
    for i in 0..n {
        for k in 0..n {
            if le[i * n + k] {
                continue;
            }
            if let Some(j) = (0..n).find(|&j| le[i * n + j] && le[j * n + k]) {
                report.push(
                    Transitivity,
                    format!(
                        "{x} ≤ {y} and {y} ≤ {z} but ({x}, {z}) is missing",
                        x = elements[i],
                        y = elements[j],
                        z = elements[k]
                    ),
                );
            }
        }
    }
    report.is_ok().then(|| Preorder::from_parts(elements, le))
}

/// A validated preorder; `le` is the full relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    le: Vec<bool>,
}

impl Preorder {
    pub fn new(data: &PreorderData) -> Result<Self> {
        let mut report = Validation::default();
        resolve(data, &mut report).ok_or(Error::InvalidPreorder(report))
    }

    fn from_parts(elements: Vec<String>, le: Vec<bool>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Preorder {
            elements,
            index,
            le,
        }
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn le_index(&self, i: usize, j: usize) -> bool {
        self.le[i * self.size() + j]
    }

    fn position(&self, x: &str) -> Result<usize> {
        self.index
            .get(x)
            .copied()
            .ok_or_else(|| Error::UnknownElement(x.to_string()))
    }

    pub fn le(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.le_index(self.position(x)?, self.position(y)?))
    }

    /// Related pairs `(x, y)`, ordered by `x` then `y` in declaration order.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        let n = self.size();
        (0..n * n)
            .filter(|&k| self.le[k])
            .map(move |k| (self.elements[k / n].as_str(), self.elements[k % n].as_str()))
    }

    pub fn to_data(&self) -> PreorderData {
        PreorderData {
            elements: self.elements.clone(),
            pairs: self
                .pairs()
                .map(|(x, y)| [x.to_string(), y.to_string()])
                .collect(),
        }
    }

    /// The thin category with one morphism `m:x->y` per related pair.
    pub fn to_category(&self) -> FiniteCategory {
        let n = self.size();
        let name = |i: usize, j: usize| morphism_name(&self.elements[i], &self.elements[j]);
        let mut data = CategoryData {
            objects: self.elements.clone(),
            ..CategoryData::default()
        };
        for i in 0..n {
            data.identities.insert(self.elements[i].clone(), name(i, i));
            for j in 0..n {
                if !self.le_index(i, j) {
                    continue;
                }
                data.morphisms.push(MorphismDecl::new(
                    name(i, j),
                    &self.elements[i],
                    &self.elements[j],
                ));
                for k in 0..n {
                    if self.le_index(j, k) {
                        data.composition.push([name(j, k), name(i, j), name(i, k)]);
                    }
                }
            }
        }
        FiniteCategory::new(&data).expect("the thin category of a preorder satisfies every law")
    }

    fn pair_positions(&self, (a, b): (&str, &str)) -> Result<(usize, usize)> {
        let (i, j) = (self.position(a)?, self.position(b)?);
        if !self.le_index(i, j) {
            return Err(Error::NotInRelation(a.to_string(), b.to_string()));
        }
        Ok((i, j))
    }

    fn equivalent_index(&self, i: usize, j: usize) -> bool {
        self.le_index(i, j) && self.le_index(j, i)
    }
}

pub fn morphism_name(x: &str, y: &str) -> String {
    format!("m:{x}->{y}")
}

pub fn to_category(data: &PreorderData) -> Result<FiniteCategory> {
    Ok(Preorder::new(data)?.to_category())
}

/// The partition into `≈`-classes, `X ≈ Y` iff `X ≤ Y` and `Y ≤ X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivClasses {
    pub elements: Vec<String>,
    /// `representatives[i]` is the first element, in declaration order, of
    /// the class of `elements[i]`.
    pub representatives: Vec<String>,
}

impl EquivClasses {
    pub fn representative(&self, x: &str) -> Option<&str> {
        self.elements
            .iter()
            .position(|e| e == x)
            .map(|i| self.representatives[i].as_str())
    }

    pub fn classes(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = Vec::new();
        let mut seen: Vec<&str> = Vec::new();
        for (e, r) in self.elements.iter().zip(&self.representatives) {
            match seen.iter().position(|s| s == r) {
                Some(k) => out[k].push(e.clone()),
                None => {
                    seen.push(r);
                    out.push(vec![e.clone()]);
                }
            }
        }
        out
    }
}

pub fn equiv_classes(p: &Preorder) -> EquivClasses {
    let n = p.size();
    let representatives = (0..n)
        .map(|i| {
            let r = (0..n)
                .find(|&j| p.equivalent_index(i, j))
                .expect("reflexive");
            p.elements[r].clone()
        })
        .collect();
    EquivClasses {
        elements: p.elements.clone(),
        representatives,
    }
}

/// Closed form of unitary equivalence: `A ≈ C` and `B ≈ D`.
pub fn unitary_equiv_thin(p: &Preorder, ab: (&str, &str), cd: (&str, &str)) -> Result<bool> {
    let (a, b) = p.pair_positions(ab)?;
    let (c, d) = p.pair_positions(cd)?;
    Ok(p.equivalent_index(a, c) && p.equivalent_index(b, d))
}

/// Closed form of the submorphism relation: `C ≤ A` and `B ≤ D`.
pub fn submorphism_thin(p: &Preorder, ab: (&str, &str), cd: (&str, &str)) -> Result<bool> {
    let (a, b) = p.pair_positions(ab)?;
    let (c, d) = p.pair_positions(cd)?;
    Ok(p.le_index(c, a) && p.le_index(b, d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundWitness {
    pub lower: String,
    pub upper: String,
}

/// Is there `U ≤ W` with `U ≤ A` and `B ≤ W` for every related `(A, B)`?
pub fn is_bounded_preorder(p: &Preorder) -> Decision<BoundWitness> {
    let n = p.size();
    let pairs: Vec<(usize, usize)> = (0..n * n)
        .filter(|&k| p.le[k])
        .map(|k| (k / n, k % n))
        .collect();
    let witness = (0..n)
        .flat_map(|u| (0..n).map(move |w| (u, w)))
        .find(|&(u, w)| {
            p.le_index(u, w)
                && pairs
                    .iter()
                    .all(|&(a, b)| p.le_index(u, a) && p.le_index(b, w))
        })
        .map(|(u, w)| BoundWitness {
            lower: p.elements[u].clone(),
            upper: p.elements[w].clone(),
        });
    Decision {
        holds: witness.is_some(),
        witness,
    }
}

pub fn is_discrete(p: &Preorder) -> bool {
    let n = p.size();
    (0..n * n).all(|k| !p.le[k] || k / n == k % n)
}

/// Every labeled preorder on `{1, …, n}`: each reflexive relation in order of
/// its off-diagonal bit mask, kept when transitive.
pub struct Preorders {
    n: usize,
    offdiag: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
}

impl Iterator for Preorders {
    type Item = Preorder;

    fn next(&mut self) -> Option<Preorder> {
        let n = self.n;
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            let mut le = vec![false; n * n];
            for i in 0..n {
                le[i * n + i] = true;
            }
            for (bit, &(i, j)) in self.offdiag.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    le[i * n + j] = true;
                }
            }
            let transitive = (0..n).all(|i| {
                (0..n).all(|j| !le[i * n + j] || (0..n).all(|k| !le[j * n + k] || le[i * n + k]))
            });
            if transitive {
                let elements = (1..=n).map(|i| i.to_string()).collect();
                return Some(Preorder::from_parts(elements, le));
            }
        }
        None
    }
}

pub fn enumerate_preorders(n: usize) -> Result<Preorders> {
    enumerate_preorders_capped(n, DEFAULT_PREORDER_CAP)
}

pub fn enumerate_preorders_capped(n: usize, cap: usize) -> Result<Preorders> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    if n > cap {
        return Err(Error::SizeCap { size: n, cap });
    }
    let offdiag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    if offdiag.len() >= 64 {
        return Err(Error::SizeCap { size: n, cap: 8 });
    }
    Ok(Preorders {
        n,
        end: 1u64 << offdiag.len(),
        offdiag,
        next_mask: 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Proposition {
    /// composition condition ⇔ bounded
    Prop1,
    /// boundedness condition ⇔ discrete, and every `ℕv` is bounded
    Prop2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropMismatch {
    /// Position of the preorder in enumeration order.
    pub index: usize,
    pub preorder: PreorderData,
    /// Which comparison failed: `arch1_vs_bounded`, `arch2_vs_discrete` or `nv_bounded`.
    pub check: String,
    pub generic: bool,
    pub closed_form: bool,
    pub morphism: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropReport {
    pub proposition: Proposition,
    pub size: usize,
    pub checked: usize,
    pub passed: usize,
    pub mismatch: Option<PropMismatch>,
}

impl PropReport {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

fn check_prop1(p: &Preorder) -> Option<(String, bool, bool, Option<String>)> {
    let c = p.to_category();
    let generic = Analysis::with_strategy(&c, Strategy::Sequential)
        .archimedean_composition()
        .holds;
    let closed = is_bounded_preorder(p).holds;
    (generic != closed).then(|| ("arch1_vs_bounded".to_string(), generic, closed, None))
}

fn check_prop2(p: &Preorder) -> Option<(String, bool, bool, Option<String>)> {
    let c = p.to_category();
    let analysis = Analysis::with_strategy(&c, Strategy::Sequential);
    let generic = analysis.archimedean_bounded().holds;
    let closed = is_discrete(p);
    if generic != closed {
        return Some(("arch2_vs_discrete".to_string(), generic, closed, None));
    }
    c.ids_by_name()
        .iter()
        .find(|&&v| !analysis.is_bounded(&analysis.nv_members(v)))
        .map(|&v| {
            (
                "nv_bounded".to_string(),
                false,
                true,
                Some(c.name(v).to_string()),
            )
        })
}

fn sweep(prop: Proposition, n: usize, strategy: Strategy) -> Result<PropReport> {
    let preorders: Vec<Preorder> = enumerate_preorders(n)?.collect();
    let check = match prop {
        Proposition::Prop1 => check_prop1,
        Proposition::Prop2 => check_prop2,
    };
    let outcomes = strategy.map_slice(&preorders, check);
    let passed = outcomes.iter().filter(|o| o.is_none()).count();
    let mismatch = outcomes
        .into_iter()
        .enumerate()
        .find_map(|(index, o)| o.map(|o| (index, o)))
        .map(
            |(index, (check, generic, closed_form, morphism))| PropMismatch {
                index,
                preorder: preorders[index].to_data(),
                check,
                generic,
                closed_form,
                morphism,
            },
        );
    Ok(PropReport {
        proposition: prop,
        size: n,
        checked: preorders.len(),
        passed,
        mismatch,
    })
}

/// Composition condition on `to_category(p)` against boundedness of `p`,
/// for every preorder of size `n`.
pub fn verify_prop1(n: usize) -> Result<PropReport> {
    verify_prop1_with(n, Strategy::default())
}

pub fn verify_prop1_with(n: usize, strategy: Strategy) -> Result<PropReport> {
    sweep(Proposition::Prop1, n, strategy)
}

/// Boundedness condition on `to_category(p)` against discreteness of `p`,
/// plus boundedness of every `ℕ(U, W)`, for every preorder of size `n`.
pub fn verify_prop2(n: usize) -> Result<PropReport> {
    verify_prop2_with(n, Strategy::default())
}

pub fn verify_prop2_with(n: usize, strategy: Strategy) -> Result<PropReport> {
    sweep(Proposition::Prop2, n, strategy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn data(elements: &[&str], pairs: &[(&str, &str)]) -> PreorderData {
        PreorderData {
            elements: elements.iter().map(|s| s.to_string()).collect(),
            pairs: pairs
                .iter()
                .map(|&(x, y)| [x.to_string(), y.to_string()])
                .collect(),
        }
    }

    #[test]
    fn validate_examples() {
        assert!(validate_preorder(&fixtures::chain3().to_data()).is_ok());
        let no_13 = data(
            &["1", "2", "3"],
            &[("1", "1"), ("2", "2"), ("3", "3"), ("1", "2"), ("2", "3")],
        );
        let r = validate_preorder(&no_13);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].kind, ViolationKind::Transitivity);
        assert!(r.violations[0].message.contains("(1, 3)"));
        let no_22 = data(
            &["1", "2", "3"],
            &[("1", "1"), ("3", "3"), ("1", "2"), ("2", "3"), ("1", "3")],
        );
        let r = validate_preorder(&no_22);
        assert!(r.has(ViolationKind::Reflexivity));
        assert!(matches!(
            Preorder::new(&no_22),
            Err(Error::InvalidPreorder(_))
        ));
    }

    #[test]
    fn validate_names() {
        let r = validate_preorder(&data(&["a", "a", "b->c", ""], &[("a", "a"), ("a", "z")]));
        let kinds: Vec<_> = r.violations.iter().map(|v| v.kind).collect();
        use ViolationKind::*;
        assert_eq!(
            kinds,
            vec![DuplicateName, InvalidName, EmptyName, UnknownName]
        );
    }

    #[test]
    fn closure_repairs_missing_pairs() {
        let raw = data(&["1", "2", "3"], &[("1", "2"), ("2", "3")]);
        assert!(!validate_preorder(&raw).is_ok());
        let closed = raw.closed();
        assert!(validate_preorder(&closed).is_ok());
        assert_eq!(Preorder::new(&closed).unwrap(), fixtures::chain3());
    }

    #[test]
    fn to_category_examples() {
        let c = fixtures::chain3().to_category();
        assert_eq!((c.object_count(), c.morphism_count()), (3, 6));
        assert!(c.is_thin());
        let c = fixtures::disc2().to_category();
        assert_eq!((c.object_count(), c.morphism_count()), (2, 2));
        let c = fixtures::indisc2().to_category();
        assert_eq!((c.object_count(), c.morphism_count()), (2, 4));
        assert!(to_category(&data(&["1"], &[])).is_err());
    }

    #[test]
    fn equiv_classes_examples() {
        let e = equiv_classes(&fixtures::indisc2());
        assert_eq!(e.classes(), vec![vec!["A".to_string(), "B".to_string()]]);
        assert_eq!(e.representative("B"), Some("A"));
        let e = equiv_classes(&fixtures::chain3());
        assert_eq!(e.classes().len(), 3);
        let e = equiv_classes(&fixtures::singleton_preorder());
        assert_eq!(e.classes(), vec![vec!["x".to_string()]]);
    }

    #[test]
    fn closed_form_examples() {
        let indisc2 = fixtures::indisc2();
        assert!(unitary_equiv_thin(&indisc2, ("A", "B"), ("B", "A")).unwrap());
        let chain3 = fixtures::chain3();
        assert!(!unitary_equiv_thin(&chain3, ("1", "2"), ("2", "3")).unwrap());
        assert!(unitary_equiv_thin(&chain3, ("1", "2"), ("1", "2")).unwrap());
        assert!(submorphism_thin(&chain3, ("2", "3"), ("1", "3")).unwrap());
        assert!(!submorphism_thin(&chain3, ("1", "3"), ("2", "3")).unwrap());
        assert!(submorphism_thin(&chain3, ("1", "3"), ("1", "3")).unwrap());
        assert_eq!(
            submorphism_thin(&chain3, ("3", "1"), ("1", "3")),
            Err(Error::NotInRelation("3".into(), "1".into()))
        );
    }

    #[test]
    fn bounded_and_discrete_examples() {
        let d = is_bounded_preorder(&fixtures::chain3());
        assert_eq!(
            d.witness,
            Some(BoundWitness {
                lower: "1".into(),
                upper: "3".into()
            })
        );
        assert!(!is_bounded_preorder(&fixtures::disc2()).holds);
        let d = is_bounded_preorder(&fixtures::singleton_preorder());
        assert_eq!(
            d.witness,
            Some(BoundWitness {
                lower: "x".into(),
                upper: "x".into()
            })
        );
        assert!(is_discrete(&fixtures::disc2()));
        assert!(!is_discrete(&fixtures::chain3()));
        assert!(!is_discrete(&fixtures::indisc2()));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_preorders(1).unwrap().count(), 1);
        assert_eq!(enumerate_preorders(2).unwrap().count(), 4);
        assert_eq!(enumerate_preorders(3).unwrap().count(), 29);
        assert!(matches!(
            enumerate_preorders(5),
            Err(Error::SizeCap { size: 5, cap: 4 })
        ));
        assert_eq!(enumerate_preorders(0).err(), Some(Error::EmptySize));
    }

    #[test]
    fn propositions_small_sizes() {
        for n in 1..=3 {
            let r1 = verify_prop1(n).unwrap();
            assert!(r1.holds(), "{r1:?}");
            assert_eq!(r1.passed, r1.checked);
            let r2 = verify_prop2(n).unwrap();
            assert!(r2.holds(), "{r2:?}");
        }
        assert_eq!(verify_prop1(3).unwrap().checked, 29);
        assert_eq!(verify_prop2(2).unwrap().checked, 4);
    }
}
