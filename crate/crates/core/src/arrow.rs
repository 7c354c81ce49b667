//! The arrow category `C²`: morphisms of `C` as objects, commuting squares as
//! morphisms, plus the two relations the Archimedean conditions are built
//! from, unitary equivalence (isomorphism in `C²`) and the submorphism order.
//!
//! Every existential search walks candidates in name order and stops at the
//! first hit, so reported witnesses are the lexicographically least ones.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::category::{CategoryData, FiniteCategory, MorphismDecl, MorphismId, ObjectId};
use crate::error::{Error, Result};

/// A commuting square `(a, b)` from `source: A -> B` to `target: A' -> B'`,
/// that is `target ∘ a = b ∘ source`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Square {
    pub source: String,
    pub target: String,
    pub a: String,
    pub b: String,
}

impl Square {
    fn from_ids(
        c: &FiniteCategory,
        source: MorphismId,
        target: MorphismId,
        a: MorphismId,
        b: MorphismId,
    ) -> Self {
        Square {
            source: c.name(source).to_string(),
            target: c.name(target).to_string(),
            a: c.name(a).to_string(),
            b: c.name(b).to_string(),
        }
    }

    /// Name of the square as a morphism of the arrow category.
    pub fn name(&self) -> String {
        format!("sq({},{},{},{})", self.source, self.target, self.a, self.b)
    }
}

/// Answer of an existential decider together with its least witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Decision<W> {
    fn from_witness(witness: Option<W>) -> Self {
        Decision {
            holds: witness.is_some(),
            witness,
        }
    }
}

/// A pair of mutually inverse squares between two morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub forward: Square,
    pub backward: Square,
}

/// `(a, b)` with `g = b ∘ f ∘ a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmorphismWitness {
    pub a: String,
    pub b: String,
}

pub(crate) fn homs_by_name(c: &FiniteCategory, x: ObjectId, y: ObjectId) -> Vec<MorphismId> {
    let mut hs = c.homs(x, y).to_vec();
    hs.sort_by_key(|&h| c.rank(h));
    hs
}

/// All squares `(a, b)` from `f` to `g`, in witness order.
pub(crate) fn squares(
    c: &FiniteCategory,
    f: MorphismId,
    g: MorphismId,
) -> Vec<(MorphismId, MorphismId)> {
    let mut out = Vec::new();
    let bs = homs_by_name(c, c.cod(f), c.cod(g));
    for a in homs_by_name(c, c.dom(f), c.dom(g)) {
        for &b in &bs {
            if c.comp(g, a) == c.comp(b, f) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn is_commuting_square(
    c: &FiniteCategory,
    f: &str,
    f2: &str,
    a: &str,
    b: &str,
) -> Result<bool> {
    let (fi, f2i, ai, bi) = (
        c.morphism_id(f)?,
        c.morphism_id(f2)?,
        c.morphism_id(a)?,
        c.morphism_id(b)?,
    );
    let obj = |o| c.object_name(o);
    if c.dom(ai) != c.dom(fi) || c.cod(ai) != c.dom(f2i) {
        return Err(Error::SquareTyping {
            side: "a",
            detail: format!(
                "`{a}` is {} -> {}, expected {} -> {}",
                obj(c.dom(ai)),
                obj(c.cod(ai)),
                obj(c.dom(fi)),
                obj(c.dom(f2i))
            ),
        });
    }
    if c.dom(bi) != c.cod(fi) || c.cod(bi) != c.cod(f2i) {
        return Err(Error::SquareTyping {
            side: "b",
            detail: format!(
                "`{b}` is {} -> {}, expected {} -> {}",
                obj(c.dom(bi)),
                obj(c.cod(bi)),
                obj(c.cod(fi)),
                obj(c.cod(f2i))
            ),
        });
    }
    Ok(c.comp(f2i, ai) == c.comp(bi, fi))
}

/// Least pair of mutually inverse squares `f -> g`, `g -> f`, straight from
/// the definition of isomorphism in `C²`.
pub(crate) fn iso_witness(
    c: &FiniteCategory,
    f: MorphismId,
    g: MorphismId,
) -> Option<((MorphismId, MorphismId), (MorphismId, MorphismId))> {
    let (id_a, id_b) = (c.identity(c.dom(f)), c.identity(c.cod(f)));
    let (id_c, id_d) = (c.identity(c.dom(g)), c.identity(c.cod(g)));
    let back = squares(c, g, f);
    for (a, b) in squares(c, f, g) {
        for &(a2, b2) in &back {
            if c.comp(a2, a) == Some(id_a)
                && c.comp(b2, b) == Some(id_b)
                && c.comp(a, a2) == Some(id_c)
                && c.comp(b, b2) == Some(id_d)
            {
                return Some(((a, b), (a2, b2)));
            }
        }
    }
    None
}

/// True when `m` has a two-sided inverse in the base category.
pub fn is_iso(c: &FiniteCategory, m: MorphismId) -> bool {
    let (x, y) = (c.dom(m), c.cod(m));
    c.homs(y, x)
        .iter()
        .any(|&n| c.comp(n, m) == Some(c.identity(x)) && c.comp(m, n) == Some(c.identity(y)))
}

/// Shortcut criterion: one commuting square `f -> g` whose sides are both
/// isomorphisms. Agrees with [`iso_witness`]; the property tests hold them equal.
pub(crate) fn unitary_via_isos(c: &FiniteCategory, f: MorphismId, g: MorphismId) -> bool {
    squares(c, f, g)
        .into_iter()
        .any(|(a, b)| is_iso(c, a) && is_iso(c, b))
}

pub fn is_unitary_equivalent(c: &FiniteCategory, f: &str, g: &str) -> Result<Decision<IsoWitness>> {
    let (fi, gi) = (c.morphism_id(f)?, c.morphism_id(g)?);
    let witness = iso_witness(c, fi, gi).map(|((a, b), (a2, b2))| IsoWitness {
        forward: Square::from_ids(c, fi, gi, a, b),
        backward: Square::from_ids(c, gi, fi, a2, b2),
    });
    Ok(Decision::from_witness(witness))
}

pub fn is_unitary_equivalent_via_isos(c: &FiniteCategory, f: &str, g: &str) -> Result<bool> {
    Ok(unitary_via_isos(c, c.morphism_id(f)?, c.morphism_id(g)?))
}

/// Least `(a, b)` with `g = b ∘ f ∘ a`.
pub(crate) fn submorphism_witness(
    c: &FiniteCategory,
    f: MorphismId,
    g: MorphismId,
) -> Option<(MorphismId, MorphismId)> {
    let bs = homs_by_name(c, c.cod(f), c.cod(g));
    for a in homs_by_name(c, c.dom(g), c.dom(f)) {
        let fa = c.comp(f, a).expect("typed");
        if let Some(&b) = bs.iter().find(|&&b| c.comp(b, fa) == Some(g)) {
            return Some((a, b));
        }
    }
    None
}

pub fn is_submorphism(
    c: &FiniteCategory,
    f: &str,
    g: &str,
) -> Result<Decision<SubmorphismWitness>> {
    let (fi, gi) = (c.morphism_id(f)?, c.morphism_id(g)?);
    let witness = submorphism_witness(c, fi, gi).map(|(a, b)| SubmorphismWitness {
        a: c.name(a).to_string(),
        b: c.name(b).to_string(),
    });
    Ok(Decision::from_witness(witness))
}

/// `C²` together with the category it was built from.
#[derive(Debug, Clone)]
pub struct ArrowCategory {
    pub base: FiniteCategory,
    pub derived: FiniteCategory,
    /// One entry per morphism of `derived`, in the same order.
    pub squares: Vec<Square>,
}

impl ArrowCategory {
    pub fn square(&self, name: &str) -> Result<&Square> {
        let id = self.derived.morphism_id(name)?;
        Ok(&self.squares[id.index()])
    }
}

pub fn build_arrow_category(c: &FiniteCategory) -> Result<ArrowCategory> {
    let mut data = CategoryData {
        objects: c.morphisms().iter().map(|m| m.name.clone()).collect(),
        ..CategoryData::default()
    };
    // squares_from[f] lists (target, a, b, index into `squares`)
    let mut squares_from: Vec<Vec<(MorphismId, MorphismId, MorphismId, usize)>> =
        vec![Vec::new(); c.morphism_count()];
    let mut squares_out = Vec::new();
    let mut index: BTreeMap<(MorphismId, MorphismId, MorphismId, MorphismId), usize> =
        BTreeMap::new();
    for f in c.morphism_ids() {
        for g in c.morphism_ids() {
            for &a in c.homs(c.dom(f), c.dom(g)) {
                for &b in c.homs(c.cod(f), c.cod(g)) {
                    if c.comp(g, a) != c.comp(b, f) {
                        continue;
                    }
                    let sq = Square::from_ids(c, f, g, a, b);
                    data.morphisms
                        .push(MorphismDecl::new(sq.name(), &sq.source, &sq.target));
                    index.insert((f, g, a, b), squares_out.len());
                    squares_from[f.index()].push((g, a, b, squares_out.len()));
                    squares_out.push(sq);
                }
            }
        }
    }
    for f in c.morphism_ids() {
        let id = (f, f, c.identity(c.dom(f)), c.identity(c.cod(f)));
        data.identities
            .insert(c.name(f).to_string(), squares_out[index[&id]].name());
    }
    // (a2, b2) ∘ (a, b) = (a2 ∘ a, b2 ∘ b)
    for f in c.morphism_ids() {
        for &(g, a, b, first) in &squares_from[f.index()] {
            for &(h, a2, b2, second) in &squares_from[g.index()] {
                let a3 = c.comp(a2, a).expect("typed");
                let b3 = c.comp(b2, b).expect("typed");
                let composite = index[&(f, h, a3, b3)];
                data.composition.push([
                    squares_out[second].name(),
                    squares_out[first].name(),
                    squares_out[composite].name(),
                ]);
            }
        }
    }
    let derived = FiniteCategory::new(&data)?;
    Ok(ArrowCategory {
        base: c.clone(),
        derived,
        squares: squares_out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::validate_category;
    use crate::fixtures;

    fn cat(data: CategoryData) -> FiniteCategory {
        FiniteCategory::new(&data).unwrap()
    }

    #[test]
    fn commuting_square_examples() {
        let pair = cat(fixtures::pair());
        assert!(is_commuting_square(&pair, "f", "f", "id_A", "id_B").unwrap());
        assert!(is_commuting_square(&pair, "id_A", "f", "id_A", "f").unwrap());
        let loop1 = cat(fixtures::loop1());
        assert!(!is_commuting_square(&loop1, "id", "g", "id", "id").unwrap());
    }

    #[test]
    fn commuting_square_typing_errors_name_the_side() {
        let pair = cat(fixtures::pair());
        let err = is_commuting_square(&pair, "f", "f", "f", "id_B").unwrap_err();
        assert!(
            matches!(err, Error::SquareTyping { side: "a", .. }),
            "{err}"
        );
        let err = is_commuting_square(&pair, "f", "f", "id_A", "f").unwrap_err();
        assert!(
            matches!(err, Error::SquareTyping { side: "b", .. }),
            "{err}"
        );
        assert!(matches!(
            is_commuting_square(&pair, "f", "f", "id_A", "nope"),
            Err(Error::UnknownMorphism(_))
        ));
    }

    #[test]
    fn pair_arrow_category() {
        let arrow = build_arrow_category(&cat(fixtures::pair())).unwrap();
        assert_eq!(arrow.derived.object_count(), 3);
        assert_eq!(arrow.derived.morphism_count(), 6);
        let mut hom_pairs: Vec<(String, String)> = arrow
            .squares
            .iter()
            .map(|s| (s.source.clone(), s.target.clone()))
            .collect();
        hom_pairs.sort();
        let mut expected: Vec<(String, String)> = [
            ("id_A", "id_A"),
            ("id_A", "f"),
            ("id_A", "id_B"),
            ("f", "f"),
            ("f", "id_B"),
            ("id_B", "id_B"),
        ]
        .iter()
        .map(|&(s, t)| (s.to_string(), t.to_string()))
        .collect();
        expected.sort();
        assert_eq!(hom_pairs, expected);
        assert!(validate_category(&arrow.derived.to_data()).is_ok());
        let sq = arrow.square("sq(id_A,f,id_A,f)").unwrap();
        assert_eq!((sq.a.as_str(), sq.b.as_str()), ("id_A", "f"));
    }

    #[test]
    fn empty_arrow_category() {
        let arrow = build_arrow_category(&FiniteCategory::empty()).unwrap();
        assert_eq!(arrow.derived.object_count(), 0);
        assert_eq!(arrow.derived.morphism_count(), 0);
    }

    #[test]
    fn thin_arrow_category_is_thin_over_pairs() {
        let chain3 = fixtures::chain3();
        let arrow = build_arrow_category(&chain3.to_category()).unwrap();
        assert!(arrow.derived.is_thin());
        let mut objects = arrow.derived.objects().to_vec();
        objects.sort();
        let mut pairs: Vec<String> = chain3.pairs().map(|(x, y)| format!("m:{x}->{y}")).collect();
        pairs.sort();
        assert_eq!(objects, pairs);
    }

    #[test]
    fn unitary_equivalence_examples() {
        let pair = cat(fixtures::pair());
        let d = is_unitary_equivalent(&pair, "f", "f").unwrap();
        assert!(d.holds);
        let w = d.witness.unwrap();
        assert_eq!(
            (w.forward.a.as_str(), w.forward.b.as_str()),
            ("id_A", "id_B")
        );
        assert_eq!(
            (w.backward.a.as_str(), w.backward.b.as_str()),
            ("id_A", "id_B")
        );

        let indisc2 = fixtures::indisc2().to_category();
        assert!(
            is_unitary_equivalent(&indisc2, "m:A->B", "m:B->A")
                .unwrap()
                .holds
        );

        let chain3 = fixtures::chain3().to_category();
        let d = is_unitary_equivalent(&chain3, "m:1->2", "m:2->3").unwrap();
        assert!(!d.holds);
        assert!(d.witness.is_none());
        assert!(is_unitary_equivalent(&chain3, "m:1->2", "zz").is_err());
    }

    #[test]
    fn loop1_identity_and_involution_are_equivalent() {
        let loop1 = cat(fixtures::loop1());
        let d = is_unitary_equivalent(&loop1, "id", "g").unwrap();
        assert!(d.holds);
        // candidates a, b range over {g, id} in name order; (g, id): g ∘ g = id = id ∘ id
        let w = d.witness.unwrap();
        assert_eq!((w.forward.a.as_str(), w.forward.b.as_str()), ("g", "id"));
        assert!(is_unitary_equivalent_via_isos(&loop1, "id", "g").unwrap());
    }

    #[test]
    fn idempotent_is_not_equivalent_to_identity() {
        let c = cat(fixtures::idempotent());
        assert!(!is_unitary_equivalent(&c, "id", "e").unwrap().holds);
        assert!(!is_unitary_equivalent_via_isos(&c, "id", "e").unwrap());
    }

    #[test]
    fn submorphism_examples() {
        let pair = cat(fixtures::pair());
        let d = is_submorphism(&pair, "f", "f").unwrap();
        assert_eq!(
            d.witness,
            Some(SubmorphismWitness {
                a: "id_A".into(),
                b: "id_B".into()
            })
        );
        let chain3 = fixtures::chain3().to_category();
        let d = is_submorphism(&chain3, "m:2->3", "m:1->3").unwrap();
        assert_eq!(
            d.witness,
            Some(SubmorphismWitness {
                a: "m:1->2".into(),
                b: "m:3->3".into()
            })
        );
        let disc2 = fixtures::disc2().to_category();
        assert!(!is_submorphism(&disc2, "m:1->1", "m:2->2").unwrap().holds);
    }
}
