//! Small named structures used throughout the tests, benches and CLI examples.

use crate::category::{CategoryData, MorphismDecl};
use crate::semigroup::SemigroupData;
use crate::thin::{Preorder, PreorderData};

fn table(
    objects: &[&str],
    morphisms: &[(&str, &str, &str)],
    identities: &[(&str, &str)],
    composition: &[(&str, &str, &str)],
) -> CategoryData {
    CategoryData {
        objects: objects.iter().map(|s| s.to_string()).collect(),
        morphisms: morphisms
            .iter()
            .map(|&(n, d, c)| MorphismDecl::new(n, d, c))
            .collect(),
        identities: identities
            .iter()
            .map(|&(o, m)| (o.to_string(), m.to_string()))
            .collect(),
        composition: composition
            .iter()
            .map(|&(g, f, h)| [g.to_string(), f.to_string(), h.to_string()])
            .collect(),
    }
}

/// Objects `A`, `B`; one non-identity arrow `f: A -> B`.
pub fn pair() -> CategoryData {
    table(
        &["A", "B"],
        &[("id_A", "A", "A"), ("id_B", "B", "B"), ("f", "A", "B")],
        &[("A", "id_A"), ("B", "id_B")],
        &[
            ("id_A", "id_A", "id_A"),
            ("id_B", "id_B", "id_B"),
            ("f", "id_A", "f"),
            ("id_B", "f", "f"),
        ],
    )
}

/// One object with an involution: `g ∘ g = id`.
pub fn loop1() -> CategoryData {
    table(
        &["*"],
        &[("id", "*", "*"), ("g", "*", "*")],
        &[("*", "id")],
        &[
            ("id", "id", "id"),
            ("id", "g", "g"),
            ("g", "id", "g"),
            ("g", "g", "id"),
        ],
    )
}

/// One object, three endomorphisms, `p ∘ p = q` and `p ∘ q = q` but `q ∘ p = p`:
/// `(p ∘ p) ∘ p = p` while `p ∘ (p ∘ p) = q`.
pub fn non_associative() -> CategoryData {
    table(
        &["*"],
        &[("id", "*", "*"), ("p", "*", "*"), ("q", "*", "*")],
        &[("*", "id")],
        &[
            ("id", "id", "id"),
            ("id", "p", "p"),
            ("id", "q", "q"),
            ("p", "id", "p"),
            ("q", "id", "q"),
            ("p", "p", "q"),
            ("p", "q", "q"),
            ("q", "p", "p"),
            ("q", "q", "q"),
        ],
    )
}

/// The cyclic group of order three as a one-object category.
pub fn cyclic3() -> CategoryData {
    let names = ["e", "r", "s"];
    let mut composition = Vec::new();
    for (i, g) in names.iter().enumerate() {
        for (j, f) in names.iter().enumerate() {
            composition.push((*g, *f, names[(i + j) % 3]));
        }
    }
    table(
        &["*"],
        &[("e", "*", "*"), ("r", "*", "*"), ("s", "*", "*")],
        &[("*", "e")],
        &composition,
    )
}

/// One object with an idempotent `e ∘ e = e`.
pub fn idempotent() -> CategoryData {
    table(
        &["*"],
        &[("id", "*", "*"), ("e", "*", "*")],
        &[("*", "id")],
        &[
            ("id", "id", "id"),
            ("id", "e", "e"),
            ("e", "id", "e"),
            ("e", "e", "e"),
        ],
    )
}

/// Two parallel arrows `s, t: A -> B`.
pub fn parallel() -> CategoryData {
    table(
        &["A", "B"],
        &[
            ("id_A", "A", "A"),
            ("id_B", "B", "B"),
            ("s", "A", "B"),
            ("t", "A", "B"),
        ],
        &[("A", "id_A"), ("B", "id_B")],
        &[
            ("id_A", "id_A", "id_A"),
            ("id_B", "id_B", "id_B"),
            ("s", "id_A", "s"),
            ("t", "id_A", "t"),
            ("id_B", "s", "s"),
            ("id_B", "t", "t"),
        ],
    )
}

/// Two isomorphic objects: `i: A -> B`, `j: B -> A`, mutually inverse.
pub fn iso_pair() -> CategoryData {
    table(
        &["A", "B"],
        &[
            ("id_A", "A", "A"),
            ("id_B", "B", "B"),
            ("i", "A", "B"),
            ("j", "B", "A"),
        ],
        &[("A", "id_A"), ("B", "id_B")],
        &[
            ("id_A", "id_A", "id_A"),
            ("id_B", "id_B", "id_B"),
            ("i", "id_A", "i"),
            ("id_B", "i", "i"),
            ("j", "id_B", "j"),
            ("id_A", "j", "j"),
            ("j", "i", "id_A"),
            ("i", "j", "id_B"),
        ],
    )
}

fn preorder(elements: &[&str], pairs: &[(&str, &str)]) -> Preorder {
    let data = PreorderData {
        elements: elements.iter().map(|s| s.to_string()).collect(),
        pairs: pairs
            .iter()
            .map(|&(x, y)| [x.to_string(), y.to_string()])
            .collect(),
    };
    Preorder::new(&data).expect("fixture preorder is valid")
}

/// The chain `1 < 2 < 3`.
pub fn chain3() -> Preorder {
    preorder(
        &["1", "2", "3"],
        &[
            ("1", "1"),
            ("2", "2"),
            ("3", "3"),
            ("1", "2"),
            ("2", "3"),
            ("1", "3"),
        ],
    )
}

/// Two incomparable elements.
pub fn disc2() -> Preorder {
    preorder(&["1", "2"], &[("1", "1"), ("2", "2")])
}

/// Two elements below each other: `A ≤ B ≤ A`.
pub fn indisc2() -> Preorder {
    preorder(
        &["A", "B"],
        &[("A", "A"), ("B", "B"), ("A", "B"), ("B", "A")],
    )
}

pub fn singleton_preorder() -> Preorder {
    preorder(&["x"], &[("x", "x")])
}

fn semigroup(
    elements: &[&str],
    add: impl Fn(usize, usize) -> usize,
    leq: &[(&str, &str)],
    zero: &str,
) -> SemigroupData {
    let mut triples = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            triples.push([
                x.to_string(),
                y.to_string(),
                elements[add(i, j)].to_string(),
            ]);
        }
    }
    SemigroupData {
        elements: elements.iter().map(|s| s.to_string()).collect(),
        add: triples,
        leq: leq
            .iter()
            .map(|&(x, y)| [x.to_string(), y.to_string()])
            .collect(),
        zero: zero.to_string(),
    }
}

/// `{0, 1, 2}` with `x + y = min(x + y, 2)` and the usual order.
pub fn trunc3() -> SemigroupData {
    semigroup(
        &["0", "1", "2"],
        |x, y| (x + y).min(2),
        &[
            ("0", "0"),
            ("1", "1"),
            ("2", "2"),
            ("0", "1"),
            ("1", "2"),
            ("0", "2"),
        ],
        "0",
    )
}

/// `{a, 0}` with `a` absorbing, `0` neutral, and `a < 0`.
pub fn neg() -> SemigroupData {
    semigroup(
        &["a", "0"],
        |x, y| if x == 0 || y == 0 { 0 } else { 1 },
        &[("a", "a"), ("0", "0"), ("a", "0")],
        "0",
    )
}

pub fn singleton_semigroup() -> SemigroupData {
    semigroup(&["0"], |_, _| 0, &[("0", "0")], "0")
}
