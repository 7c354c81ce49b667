//! The two categorical Archimedean conditions, decided exactly on finite
//! categories.
//!
//! Both conditions are phrased in terms of `ℕv`: the set of all composites
//! `v_n ∘ … ∘ v_1` (`n ≥ 1`) of composable chains whose factors are each
//! unitary equivalent to `v`. In a finite category that set is the reachable
//! set of a monotone extension step, so it is computed exactly and neither
//! decider needs a chain-length cutoff.
//!
//! * composition condition: some unit `v` has every morphism `f` a
//!   submorphism of some member of `ℕv` (the length may depend on `f`);
//! * boundedness condition: whenever `ℕv` is bounded, `v` is an identity.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::arrow::{iso_witness, submorphism_witness, unitary_via_isos};
use crate::category::{FiniteCategory, MorphismId};
use crate::error::Result;
use crate::exec::Strategy;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NvClosure {
    pub unit: String,
    /// Morphisms unitary equivalent to the unit, in declaration order.
    pub generators: Vec<String>,
    /// Every realizable composite, in declaration order.
    pub members: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArchStats {
    pub morphisms: usize,
    pub candidates_examined: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArchReport {
    pub holds: bool,
    pub witness: Option<String>,
    pub counterexample: Option<String>,
    pub stats: ArchStats,
}

/// Unitary-equivalence and submorphism relations of one category, tabulated.
pub struct Analysis<'c> {
    cat: &'c FiniteCategory,
    equiv: Vec<bool>,
    // sub[f * m + g]: f is a submorphism of g
    sub: Vec<bool>,
    strategy: Strategy,
}

impl<'c> Analysis<'c> {
    pub fn new(cat: &'c FiniteCategory) -> Self {
        Analysis::with_strategy(cat, Strategy::default())
    }

    pub fn with_strategy(cat: &'c FiniteCategory, strategy: Strategy) -> Self {
        let m = cat.morphism_count();
        let ids: Vec<MorphismId> = cat.morphism_ids().collect();
        let rows: Vec<(Vec<bool>, Vec<bool>)> = strategy.map_slice(&ids, |&f| {
            let mut eq = Vec::with_capacity(m);
            let mut sub = Vec::with_capacity(m);
            for g in cat.morphism_ids() {
                let fast = unitary_via_isos(cat, f, g);
                debug_assert_eq!(fast, iso_witness(cat, f, g).is_some());
                eq.push(fast);
                sub.push(submorphism_witness(cat, f, g).is_some());
            }
            (eq, sub)
        });
        let (equiv, sub) = rows.into_iter().fold(
            (Vec::with_capacity(m * m), Vec::with_capacity(m * m)),
            |(mut eqs, mut subs), (eq, sub)| {
                eqs.extend(eq);
                subs.extend(sub);
                (eqs, subs)
            },
        );
        Analysis {
            cat,
            equiv,
            sub,
            strategy,
        }
    }

    pub fn category(&self) -> &'c FiniteCategory {
        self.cat
    }

    pub fn equivalent(&self, f: MorphismId, g: MorphismId) -> bool {
        self.equiv[f.index() * self.cat.morphism_count() + g.index()]
    }

    pub fn submorphism(&self, f: MorphismId, g: MorphismId) -> bool {
        self.sub[f.index() * self.cat.morphism_count() + g.index()]
    }

    pub fn unit_equivalents(&self, v: MorphismId) -> Vec<MorphismId> {
        self.cat
            .morphism_ids()
            .filter(|&g| self.equivalent(g, v))
            .collect()
    }

    /// Members of `ℕv`, in declaration order.
    pub fn nv_members(&self, v: MorphismId) -> Vec<MorphismId> {
        let c = self.cat;
        let generators = self.unit_equivalents(v);
        let mut seen = vec![false; c.morphism_count()];
        let mut queue: VecDeque<MorphismId> = VecDeque::new();
        for &g in &generators {
            seen[g.index()] = true;
            queue.push_back(g);
        }
        while let Some(m) = queue.pop_front() {
            for &w in &generators {
                if let Some(next) = c.comp(w, m) {
                    if !seen[next.index()] {
                        seen[next.index()] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
        c.morphism_ids().filter(|f| seen[f.index()]).collect()
    }

    pub fn nv_closure(&self, v: MorphismId) -> NvClosure {
        let names = |ids: Vec<MorphismId>| {
            ids.into_iter()
                .map(|f| self.cat.name(f).to_string())
                .collect()
        };
        NvClosure {
            unit: self.cat.name(v).to_string(),
            generators: names(self.unit_equivalents(v)),
            members: names(self.nv_members(v)),
        }
    }

    fn bounds(&self, ms: &[MorphismId]) -> Vec<MorphismId> {
        self.cat
            .ids_by_name()
            .iter()
            .copied()
            .filter(|&f| ms.iter().all(|&n| self.submorphism(n, f)))
            .collect()
    }

    pub fn is_bounded(&self, ms: &[MorphismId]) -> bool {
        let c = self.cat;
        c.morphism_ids()
            .any(|f| ms.iter().all(|&n| self.submorphism(n, f)))
    }

    /// Boundedness of `ms`. The witness is the least (by name) bound that is
    /// minimal in the submorphism order among all bounds.
    pub fn bounded_class(&self, ms: &[MorphismId]) -> ArchReport {
        let c = self.cat;
        let stats = ArchStats {
            morphisms: c.morphism_count(),
            candidates_examined: c.morphism_count(),
        };
        let bounds = self.bounds(ms);
        if !bounds.is_empty() {
            let tightest = bounds
                .iter()
                .copied()
                .find(|&f| {
                    bounds
                        .iter()
                        .all(|&g| !self.submorphism(g, f) || self.submorphism(f, g))
                })
                .expect("a finite preorder has minimal elements");
            return ArchReport {
                holds: true,
                witness: Some(c.name(tightest).to_string()),
                counterexample: None,
                stats,
            };
        }
        let covered = |f: MorphismId| ms.iter().filter(|&&n| self.submorphism(n, f)).count();
        let best = c
            .ids_by_name()
            .iter()
            .copied()
            .fold(None::<(MorphismId, usize)>, |best, f| match best {
                Some((_, n)) if n >= covered(f) => best,
                _ => Some((f, covered(f))),
            });
        let counterexample = best.and_then(|(f, _)| {
            ms.iter()
                .copied()
                .filter(|&n| !self.submorphism(n, f))
                .min_by_key(|&n| c.rank(n))
                .map(|n| c.name(n).to_string())
        });
        ArchReport {
            holds: false,
            witness: None,
            counterexample,
            stats,
        }
    }

    /// The composition condition: one unit whose iterated composites dominate
    /// every morphism.
    pub fn archimedean_composition(&self) -> ArchReport {
        let c = self.cat;
        let units = c.ids_by_name();
        // covered[i][f]: f is a submorphism of some member of ℕ(units[i])
        let covered: Vec<Vec<bool>> = self.strategy.map_slice(units, |&v| {
            let members = self.nv_members(v);
            c.morphism_ids()
                .map(|f| members.iter().any(|&n| self.submorphism(f, n)))
                .collect()
        });
        let stats = ArchStats {
            morphisms: c.morphism_count(),
            candidates_examined: units.len(),
        };
        if let Some(i) = covered.iter().position(|row| row.iter().all(|&b| b)) {
            return ArchReport {
                holds: true,
                witness: Some(c.name(units[i]).to_string()),
                counterexample: None,
                stats,
            };
        }
        let best = covered
            .iter()
            .enumerate()
            .fold(None::<(usize, usize)>, |best, (i, row)| {
                let n = row.iter().filter(|&&b| b).count();
                match best {
                    Some((_, top)) if top >= n => best,
                    _ => Some((i, n)),
                }
            });
        let counterexample = best.and_then(|(i, _)| {
            c.ids_by_name()
                .iter()
                .find(|f| !covered[i][f.index()])
                .map(|&f| c.name(f).to_string())
        });
        ArchReport {
            holds: false,
            witness: None,
            counterexample,
            stats,
        }
    }

    /// The boundedness condition: a unit with bounded `ℕv` must be an identity.
    pub fn archimedean_bounded(&self) -> ArchReport {
        let c = self.cat;
        let units = c.ids_by_name();
        let violating: Vec<bool> = self.strategy.map_slice(units, |&v| {
            !c.is_identity(v) && self.is_bounded(&self.nv_members(v))
        });
        let counterexample = violating
            .iter()
            .position(|&bad| bad)
            .map(|i| c.name(units[i]).to_string());
        ArchReport {
            holds: counterexample.is_none(),
            witness: None,
            counterexample,
            stats: ArchStats {
                morphisms: c.morphism_count(),
                candidates_examined: units.len(),
            },
        }
    }
}

/// All morphisms unitary equivalent to `v`, in declaration order.
pub fn unit_equivalents(c: &FiniteCategory, v: &str) -> Result<Vec<String>> {
    let v = c.morphism_id(v)?;
    Ok(c.morphism_ids()
        .filter(|&g| iso_witness(c, g, v).is_some())
        .map(|g| c.name(g).to_string())
        .collect())
}

pub fn nv_closure(c: &FiniteCategory, v: &str) -> Result<NvClosure> {
    let v = c.morphism_id(v)?;
    Ok(Analysis::new(c).nv_closure(v))
}

pub fn is_bounded_class<S: AsRef<str>>(c: &FiniteCategory, ms: &[S]) -> Result<ArchReport> {
    let ids = ms
        .iter()
        .map(|n| c.morphism_id(n.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Analysis::new(c).bounded_class(&ids))
}

pub fn is_archimedean_composition(c: &FiniteCategory) -> ArchReport {
    Analysis::new(c).archimedean_composition()
}

pub fn is_archimedean_bounded(c: &FiniteCategory) -> ArchReport {
    Analysis::new(c).archimedean_bounded()
}
