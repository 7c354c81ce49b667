//! Finite partially ordered semigroups `(E, +, ≤)` with a designated `zero`.
//!
//! `E₊ = { x | zero ≤ x }` must be closed under `+`. The designated zero is
//! only used for comparisons; it need not be neutral for `+`, and `+` need
//! not be monotone unless the strict check is requested.
//!
//! Multiples `n·x` start at `n = 1`: `1·x = x`, `(n+1)·x = n·x + x`.
//!
//! Conditions decided here, all quantifiers ranging over finite sets:
//!
//! * unit: `∃ u ∈ E₊ ∀ x ∈ E ∃ n ≥ 1 : n·u ≥ x`;
//! * bounded multiples: `∀ x ∈ E₊ : ℕx bounded above ⟹ x = zero`;
//! * the two-sided form `∀ x ∈ E₊ : x = zero ⟺ ℕx bounded above`.
//!
//! "Bounded above" searches bounds in `E₊` by default, or in all of `E` with
//! [`BoundRange::All`].

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::arrow::Decision;
use crate::error::{Error, Result};
use crate::exec::Strategy;
use crate::validation::{Validation, ViolationKind};

pub const DEFAULT_SEMIGROUP_CAP: usize = 3;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupData {
    pub elements: Vec<String>,
    /// Triples `[x, y, z]` meaning `x + y = z`; must cover every pair.
    pub add: Vec<[String; 3]>,
    /// Pairs `[x, y]` meaning `x ≤ y`, reflexive pairs included.
    pub leq: Vec<[String; 2]>,
    pub zero: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundRange {
    #[default]
    Positive,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedSemigroup {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    add: Vec<usize>,
    le: Vec<bool>,
    zero: usize,
}

pub fn validate_semigroup(data: &SemigroupData, monotone: bool) -> Validation {
    let mut report = Validation::default();
    resolve(data, monotone, &mut report);
    report
}

fn resolve(
    data: &SemigroupData,
    monotone: bool,
    report: &mut Validation,
) -> Option<OrderedSemigroup> {
    use ViolationKind::*;
    let mut index: HashMap<&str, usize> = HashMap::new();
    for e in &data.elements {
        if e.is_empty() {
            report.push(EmptyName, "element with empty name");
        } else if index.contains_key(e.as_str()) {
            report.push(DuplicateName, format!("element `{e}` declared twice"));
        } else {
            index.insert(e.as_str(), index.len());
        }
    }
    let n = index.len();
    let mut names = vec![String::new(); n];
    for (name, &i) in &index {
        names[i] = name.to_string();
    }
    let zero = index.get(data.zero.as_str()).copied();
    if zero.is_none() {
        report.push(
            UnknownName,
            format!("zero `{}` is not an element", data.zero),
        );
    }

    let mut add: Vec<Option<usize>> = vec![None; n * n];
    for [x, y, z] in &data.add {
        let ids: Vec<Option<usize>> = [x, y, z]
            .iter()
            .map(|name| {
                let id = index.get(name.as_str()).copied();
                if id.is_none() {
                    report.push(
                        UnknownName,
                        format!("sum {x} + {y} = {z} mentions unknown element `{name}`"),
                    );
                }
                id
            })
            .collect();
        let (Some(i), Some(j), Some(k)) = (ids[0], ids[1], ids[2]) else {
            continue;
        };
        match add[i * n + j] {
            Some(prev) if prev != k => report.push(
                ConflictingSum,
                format!("{x} + {y} given as both {} and {z}", names[prev]),
            ),
            Some(_) => {}
            None => add[i * n + j] = Some(k),
        }
    }
    for i in 0..n {
        for j in 0..n {
            if add[i * n + j].is_none() {
                report.push(
                    MissingSum,
                    format!("no sum given for {} + {}", names[i], names[j]),
                );
            }
        }
    }

    let mut le = vec![false; n * n];
    for [x, y] in &data.leq {
        match (index.get(x.as_str()), index.get(y.as_str())) {
            (Some(&i), Some(&j)) => le[i * n + j] = true,
            _ => report.push(
                UnknownName,
                format!("order pair ({x}, {y}) mentions an unknown element"),
            ),
        }
    }

    let total = add.iter().all(Option::is_some);
    let add: Vec<usize> = add.into_iter().map(|s| s.unwrap_or(0)).collect();
    let sum = |i: usize, j: usize| add[i * n + j];
    if total {
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (l, r) = (sum(sum(i, j), k), sum(i, sum(j, k)));
                    if l != r {
                        report.push(
                            Associativity,
                            format!(
                                "({x} + {y}) + {z} = {} but {x} + ({y} + {z}) = {}",
                                names[l],
                                names[r],
                                x = names[i],
                                y = names[j],
                                z = names[k]
                            ),
                        );
                    }
                }
            }
        }
    }
    let leq = |i: usize, j: usize| le[i * n + j];
    for (i, name) in names.iter().enumerate() {
        if !leq(i, i) {
            report.push(Reflexivity, format!("missing ({name}, {name})"));
        }
    }
    for i in 0..n {
        for k in 0..n {
            if leq(i, k) {
                continue;
            }
            if let Some(j) = (0..n).find(|&j| leq(i, j) && leq(j, k)) {
                report.push(
                    Transitivity,
                    format!(
                        "{x} ≤ {y} and {y} ≤ {z} but ({x}, {z}) is missing",
                        x = names[i],
                        y = names[j],
                        z = names[k]
                    ),
                );
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if leq(i, j) && leq(j, i) {
                report.push(
                    Antisymmetry,
                    format!(
                        "{x} ≤ {y} and {y} ≤ {x} for distinct elements",
                        x = names[i],
                        y = names[j]
                    ),
                );
            }
        }
    }
    if let (Some(z), true) = (zero, total) {
        for i in (0..n).filter(|&i| leq(z, i)) {
            for j in (0..n).filter(|&j| leq(z, j)) {
                if !leq(z, sum(i, j)) {
                    report.push(
                        Positivity,
                        format!(
                            "{x} and {y} are positive but {x} + {y} = {} is not",
                            names[sum(i, j)],
                            x = names[i],
                            y = names[j]
                        ),
                    );
                }
            }
        }
    }
    if monotone && total {
        for i in 0..n {
            for j in (0..n).filter(|&j| j != i && leq(i, j)) {
                for k in 0..n {
                    if !leq(sum(i, k), sum(j, k)) || !leq(sum(k, i), sum(k, j)) {
                        report.push(
                            Monotonicity,
                            format!(
                                "{x} ≤ {y} is not preserved by adding {z}",
                                x = names[i],
                                y = names[j],
                                z = names[k]
                            ),
                        );
                    }
                }
            }
        }
    }
    if !report.is_ok() {
        return None;
    }
    Some(OrderedSemigroup::from_parts(
        names,
        add,
        le,
        zero.expect("checked"),
    ))
}

/// `{ n·x : n ≥ 1 }` in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipleSet {
    pub base: String,
    pub members: Vec<String>,
}

/// Answer of a universal decider with its least counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl OrderedSemigroup {
    pub fn new(data: &SemigroupData) -> Result<Self> {
        OrderedSemigroup::new_checked(data, false)
    }

    /// Like [`new`](Self::new); with `monotone` also requires
    /// `x ≤ y ⟹ x + z ≤ y + z` and `z + x ≤ z + y`.
    pub fn new_checked(data: &SemigroupData, monotone: bool) -> Result<Self> {
        let mut report = Validation::default();
        resolve(data, monotone, &mut report).ok_or(Error::InvalidSemigroup(report))
    }

    fn from_parts(elements: Vec<String>, add: Vec<usize>, le: Vec<bool>, zero: usize) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        OrderedSemigroup {
            elements,
            index,
            add,
            le,
            zero,
        }
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn zero(&self) -> &str {
        &self.elements[self.zero]
    }

    fn sum(&self, i: usize, j: usize) -> usize {
        self.add[i * self.size() + j]
    }

    fn leq(&self, i: usize, j: usize) -> bool {
        self.le[i * self.size() + j]
    }

    fn position(&self, x: &str) -> Result<usize> {
        self.index
            .get(x)
            .copied()
            .ok_or_else(|| Error::UnknownElement(x.to_string()))
    }

    pub fn add(&self, x: &str, y: &str) -> Result<&str> {
        Ok(&self.elements[self.sum(self.position(x)?, self.position(y)?)])
    }

    pub fn le(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.leq(self.position(x)?, self.position(y)?))
    }

    pub fn is_total(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.leq(i, j) || self.leq(j, i)))
    }

    /// True when the designated zero is also a two-sided identity for `+`.
    pub fn zero_is_neutral(&self) -> bool {
        (0..self.size()).all(|i| self.sum(self.zero, i) == i && self.sum(i, self.zero) == i)
    }

    fn positive_ids(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&i| self.leq(self.zero, i))
            .collect()
    }

    pub fn positives(&self) -> Vec<String> {
        self.positive_ids()
            .into_iter()
            .map(|i| self.elements[i].clone())
            .collect()
    }

    fn multiple_ids(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        let mut cur = x;
        while !seen[cur] {
            seen[cur] = true;
            out.push(cur);
            cur = self.sum(cur, x);
        }
        out
    }

    pub fn multiples(&self, x: &str) -> Result<MultipleSet> {
        let i = self.position(x)?;
        Ok(MultipleSet {
            base: x.to_string(),
            members: self
                .multiple_ids(i)
                .into_iter()
                .map(|m| self.elements[m].clone())
                .collect(),
        })
    }

    fn bounded_above(&self, x: usize, range: BoundRange) -> bool {
        let ms = self.multiple_ids(x);
        (0..self.size())
            .filter(|&y| range == BoundRange::All || self.leq(self.zero, y))
            .any(|y| ms.iter().all(|&m| self.leq(m, y)))
    }

    /// `∃ u ∈ E₊ ∀ x ∈ E ∃ n ≥ 1 : n·u ≥ x`, with the first such `u`.
    pub fn archimedean_unit(&self) -> Decision<String> {
        let n = self.size();
        let witness = self
            .positive_ids()
            .into_iter()
            .find(|&u| {
                let ms = self.multiple_ids(u);
                (0..n).all(|x| ms.iter().any(|&m| self.leq(x, m)))
            })
            .map(|u| self.elements[u].clone());
        Decision {
            holds: witness.is_some(),
            witness,
        }
    }

    /// `∀ x ∈ E₊ : ℕx bounded above ⟹ x = zero`, with the first violating `x`.
    pub fn archimedean_bounded_multiples(&self, range: BoundRange) -> Refutation {
        let counterexample = self
            .positive_ids()
            .into_iter()
            .find(|&x| x != self.zero && self.bounded_above(x, range))
            .map(|x| self.elements[x].clone());
        Refutation {
            holds: counterexample.is_none(),
            counterexample,
        }
    }

    /// The two-sided form `∀ x ∈ E₊ : x = zero ⟺ ℕx bounded above`.
    pub fn two_sided_condition(&self, range: BoundRange) -> bool {
        self.positive_ids()
            .into_iter()
            .all(|x| (x == self.zero) == self.bounded_above(x, range))
    }

    /// Whether the two-sided form and the one-directional bounded-multiples
    /// condition agree on this instance.
    pub fn check_13_14_equiv(&self, range: BoundRange) -> bool {
        self.two_sided_condition(range) == self.archimedean_bounded_multiples(range).holds
    }

    pub fn to_data(&self) -> SemigroupData {
        let n = self.size();
        let e = |i: usize| self.elements[i].clone();
        SemigroupData {
            elements: self.elements.clone(),
            add: (0..n * n)
                .map(|k| [e(k / n), e(k % n), e(self.add[k])])
                .collect(),
            leq: (0..n * n)
                .filter(|&k| self.le[k])
                .map(|k| [e(k / n), e(k % n)])
                .collect(),
            zero: e(self.zero),
        }
    }
}

fn element_names(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn check_size(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    if n > cap {
        return Err(Error::SizeCap { size: n, cap });
    }
    Ok(())
}

/// Every associative table on `n` elements, row-major, in increasing order of
/// the table read as a base-`n` number.
pub fn associative_tables(n: usize, strategy: Strategy) -> Vec<Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    strategy.filter_map_range(total, |code| {
        let mut table = vec![0; cells];
        let mut rest = code;
        for cell in table.iter_mut().rev() {
            *cell = rest % n;
            rest /= n;
        }
        let sum = |i: usize, j: usize| table[i * n + j];
        let associative =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| sum(sum(i, j), k) == sum(i, sum(j, k)))));
        associative.then_some(table)
    })
}

/// Every total order on `n` elements, as relation matrices, in lexicographic
/// order of the ranking permutation.
pub fn total_orders(n: usize) -> Vec<Vec<bool>> {
    fn permutations(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                permutations(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut perms = Vec::new();
    permutations(&mut Vec::new(), n, &mut perms);
    perms
        .into_iter()
        .map(|rank| (0..n * n).map(|k| rank[k / n] <= rank[k % n]).collect())
        .collect()
}

/// Every partial order on `n` elements, in order of the off-diagonal bit mask.
pub fn partial_orders(n: usize) -> Vec<Vec<bool>> {
    let offdiag: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    (0u64..1 << offdiag.len())
        .filter_map(|mask| {
            let mut le = vec![false; n * n];
            for i in 0..n {
                le[i * n + i] = true;
            }
            for (bit, &(i, j)) in offdiag.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    le[i * n + j] = true;
                }
            }
            let antisymmetric = offdiag
                .iter()
                .all(|&(i, j)| !(le[i * n + j] && le[j * n + i]));
            let transitive = (0..n).all(|i| {
                (0..n).all(|j| !le[i * n + j] || (0..n).all(|k| !le[j * n + k] || le[i * n + k]))
            });
            (antisymmetric && transitive).then_some(le)
        })
        .collect()
}

/// Every instance built from the given tables and orders, one per zero
/// choice, keeping only those whose positive cone is closed under `+`.
pub fn instances(n: usize, tables: &[Vec<usize>], orders: &[Vec<bool>]) -> Vec<OrderedSemigroup> {
    let mut out = Vec::new();
    for table in tables {
        for order in orders {
            for zero in 0..n {
                let positive: Vec<usize> = (0..n).filter(|&i| order[zero * n + i]).collect();
                let closed = positive
                    .iter()
                    .all(|&i| positive.iter().all(|&j| order[zero * n + table[i * n + j]]));
                if closed {
                    out.push(OrderedSemigroup::from_parts(
                        element_names(n),
                        table.clone(),
                        order.clone(),
                        zero,
                    ));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub size: usize,
    pub tables_examined: usize,
    pub associative_tables: usize,
    pub total_orders: usize,
    /// Instances (table, order, zero) whose positive cone is closed.
    pub instances: usize,
    pub passed: usize,
    /// Instances where the bounded-multiples condition holds.
    pub bounded_multiples_holding: usize,
    pub zero_neutral_instances: usize,
    pub equiv_failures: usize,
    pub counterexample: Option<SemigroupData>,
    pub first_equiv_failure: Option<SemigroupData>,
}

impl LemmaReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none() && self.equiv_failures == 0
    }
}

/// Over every totally ordered instance of size `n`: bounded multiples implies
/// the unit condition, and the two-sided form agrees with bounded multiples.
pub fn verify_lemma1(n: usize) -> Result<LemmaReport> {
    verify_lemma1_with(n, Strategy::default())
}

pub fn verify_lemma1_with(n: usize, strategy: Strategy) -> Result<LemmaReport> {
    verify_lemma1_capped(n, DEFAULT_SEMIGROUP_CAP, strategy)
}

pub fn verify_lemma1_capped(n: usize, cap: usize, strategy: Strategy) -> Result<LemmaReport> {
    check_size(n, cap)?;
    let tables = associative_tables(n, strategy);
    let orders = total_orders(n);
    let all = instances(n, &tables, &orders);
    // (implication holds, bounded multiples holds, zero neutral, agreement)
    let outcomes: Vec<(bool, bool, bool, bool)> = strategy.map_slice(&all, |s| {
        let bounded = s.archimedean_bounded_multiples(BoundRange::Positive).holds;
        let unit = s.archimedean_unit().holds;
        (
            !bounded || unit,
            bounded,
            s.zero_is_neutral(),
            s.check_13_14_equiv(BoundRange::Positive),
        )
    });
    let first = |pick: fn(&(bool, bool, bool, bool)) -> bool| {
        outcomes
            .iter()
            .position(|o| !pick(o))
            .map(|i| all[i].to_data())
    };
    Ok(LemmaReport {
        size: n,
        tables_examined: n.pow((n * n) as u32),
        associative_tables: tables.len(),
        total_orders: orders.len(),
        instances: all.len(),
        passed: outcomes.iter().filter(|o| o.0).count(),
        bounded_multiples_holding: outcomes.iter().filter(|o| o.1).count(),
        zero_neutral_instances: outcomes.iter().filter(|o| o.2).count(),
        equiv_failures: outcomes.iter().filter(|o| !o.3).count(),
        counterexample: first(|o| o.0),
        first_equiv_failure: first(|o| o.3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn sg(data: SemigroupData) -> OrderedSemigroup {
        OrderedSemigroup::new(&data).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(validate_semigroup(&fixtures::trunc3(), false).is_ok());

        let mut dropped = fixtures::trunc3();
        dropped
            .leq
            .retain(|p| p != &["1".to_string(), "2".to_string()]);
        assert!(validate_semigroup(&dropped, false).is_ok());

        let mut no_refl = fixtures::trunc3();
        no_refl
            .leq
            .retain(|p| p != &["0".to_string(), "0".to_string()]);
        let r = validate_semigroup(&no_refl, false);
        assert!(r.has(ViolationKind::Reflexivity), "{r}");
    }

    #[test]
    fn non_associative_table_is_reported() {
        // x + y = (x - y) mod 3
        let mut data = fixtures::trunc3();
        let names = ["0", "1", "2"];
        data.add = (0..9)
            .map(|k| {
                let (x, y) = (k / 3, k % 3);
                [
                    names[x].into(),
                    names[y].into(),
                    names[(x + 3 - y) % 3].into(),
                ]
            })
            .collect();
        // oracle: (1 - 1) - 1 = 2 but 1 - (1 - 1) = 1
        let r = validate_semigroup(&data, false);
        assert!(r.has(ViolationKind::Associativity), "{r}");
    }

    #[test]
    fn structural_and_order_defects() {
        let mut data = fixtures::trunc3();
        data.add.pop();
        data.leq.push(["1".into(), "0".into()]);
        data.zero = "7".into();
        let r = validate_semigroup(&data, false);
        assert!(r.has(ViolationKind::UnknownName));
        assert!(r.has(ViolationKind::MissingSum));
        assert!(r.has(ViolationKind::Antisymmetry));
        assert!(matches!(
            OrderedSemigroup::new(&data),
            Err(Error::InvalidSemigroup(_))
        ));
    }

    #[test]
    fn positivity_violation() {
        // NEG with 0 + 0 = a: still associative (a copy of Z/2) but E₊ = {0} is not closed
        let mut data = fixtures::neg();
        for t in data.add.iter_mut() {
            if t[0] == "0" && t[1] == "0" {
                t[2] = "a".into();
            }
        }
        let r = validate_semigroup(&data, false);
        assert!(r.has(ViolationKind::Positivity), "{r}");
    }

    #[test]
    fn monotone_mode() {
        assert!(validate_semigroup(&fixtures::trunc3(), true).is_ok());
        assert!(validate_semigroup(&fixtures::neg(), true).is_ok());
        // Z/2 ordered 0 ≤ 1: adding 1 sends 0 ≤ 1 to 1 ≤ 0
        let z2 = SemigroupData {
            elements: vec!["0".into(), "1".into()],
            add: vec![
                ["0".into(), "0".into(), "0".into()],
                ["0".into(), "1".into(), "1".into()],
                ["1".into(), "0".into(), "1".into()],
                ["1".into(), "1".into(), "0".into()],
            ],
            leq: vec![
                ["0".into(), "0".into()],
                ["1".into(), "1".into()],
                ["0".into(), "1".into()],
            ],
            zero: "0".into(),
        };
        assert!(validate_semigroup(&z2, false).is_ok());
        let r = validate_semigroup(&z2, true);
        assert_eq!(r.violations.len(), 1, "{r}");
        assert_eq!(r.violations[0].kind, ViolationKind::Monotonicity);
    }

    #[test]
    fn positives_examples() {
        assert_eq!(sg(fixtures::trunc3()).positives(), vec!["0", "1", "2"]);
        assert_eq!(sg(fixtures::neg()).positives(), vec!["0"]);
        assert_eq!(sg(fixtures::singleton_semigroup()).positives(), vec!["0"]);
    }

    #[test]
    fn multiples_examples() {
        let t = sg(fixtures::trunc3());
        assert_eq!(t.multiples("1").unwrap().members, vec!["1", "2"]);
        assert_eq!(t.multiples("2").unwrap().members, vec!["2"]);
        assert_eq!(t.multiples("0").unwrap().members, vec!["0"]);
        assert_eq!(t.multiples("9"), Err(Error::UnknownElement("9".into())));
    }

    #[test]
    fn unit_examples() {
        assert_eq!(
            sg(fixtures::trunc3()).archimedean_unit().witness.as_deref(),
            Some("1")
        );
        assert_eq!(
            sg(fixtures::neg()).archimedean_unit().witness.as_deref(),
            Some("0")
        );
        assert_eq!(
            sg(fixtures::singleton_semigroup())
                .archimedean_unit()
                .witness
                .as_deref(),
            Some("0")
        );
    }

    #[test]
    fn bounded_multiples_examples() {
        let r = sg(fixtures::trunc3()).archimedean_bounded_multiples(BoundRange::Positive);
        assert_eq!(r.counterexample.as_deref(), Some("1"));
        assert!(
            sg(fixtures::neg())
                .archimedean_bounded_multiples(BoundRange::Positive)
                .holds
        );
        assert!(
            sg(fixtures::singleton_semigroup())
                .archimedean_bounded_multiples(BoundRange::Positive)
                .holds
        );
    }

    #[test]
    fn equivalence_examples() {
        let t = sg(fixtures::trunc3());
        assert!(!t.two_sided_condition(BoundRange::Positive));
        assert!(t.check_13_14_equiv(BoundRange::Positive));
        let n = sg(fixtures::neg());
        assert!(n.two_sided_condition(BoundRange::Positive));
        assert!(n.check_13_14_equiv(BoundRange::Positive));
        assert!(sg(fixtures::singleton_semigroup()).check_13_14_equiv(BoundRange::Positive));
    }

    #[test]
    fn bound_range_widening() {
        // NEG: E₊ = {0}; widening the bound range only adds candidates.
        let n = sg(fixtures::neg());
        assert!(n.archimedean_bounded_multiples(BoundRange::All).holds);
    }

    #[test]
    fn order_enumerations() {
        assert_eq!(total_orders(3).len(), 6);
        assert_eq!(partial_orders(1).len(), 1);
        assert_eq!(partial_orders(2).len(), 3);
        assert_eq!(partial_orders(3).len(), 19);
    }

    #[test]
    fn lemma_small_sizes() {
        let r = verify_lemma1(1).unwrap();
        assert!(r.holds());
        assert_eq!(r.instances, 1);
        let r = verify_lemma1(2).unwrap();
        assert!(r.holds(), "{r:?}");
        assert!(matches!(
            verify_lemma1(4),
            Err(Error::SizeCap { size: 4, cap: 3 })
        ));
    }
}
