use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::forests::{Label, OrderedSubset};

use super::perm::Permutation;
use super::words::{canonical_cyclic, inverse_word, GeneratorWord};
use super::CoverError;

/// Largest `n` for which presentations are generated. Letters `s_ij` print
/// as two digits, and the `s_A` presentation grows factorially.
pub const MAX_PRESENTATION_N: u32 = 9;
pub const MAX_PVCN_N: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationKind {
    Cactus,
    VirtualCactus,
    Pvcn,
}

impl fmt::Display for PresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PresentationKind::Cactus => "cactus",
            PresentationKind::VirtualCactus => "virtual_cactus",
            PresentationKind::Pvcn => "pvcn",
        })
    }
}

impl FromStr for PresentationKind {
    type Err = CoverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cactus" => Ok(PresentationKind::Cactus),
            "virtual_cactus" | "virtual-cactus" => Ok(PresentationKind::VirtualCactus),
            "pvcn" => Ok(PresentationKind::Pvcn),
            _ => Err(CoverError::UnknownKind(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `s_ij`, `i < j`.
    Cactus {
        i: u32,
        j: u32,
    },
    Perm(Permutation),
    /// `s_A`.
    Ordered(OrderedSubset),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Cactus { i, j } => write!(f, "s{i}{j}"),
            Letter::Perm(p) => write!(f, "{p}"),
            Letter::Ordered(a) => write!(f, "s{a}"),
        }
    }
}

impl FromStr for Letter {
    type Err = CoverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoverError::BadLetter(s.to_string());
        let numbers = |inner: &str| -> Result<Vec<u32>, CoverError> {
            inner.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| bad())).collect()
        };
        if let Some(inner) = s.strip_prefix("s(").and_then(|r| r.strip_suffix(')')) {
            let labels = numbers(inner)?;
            return OrderedSubset::new(labels).filter(|a| a.len() >= 2).map(Letter::Ordered).ok_or_else(bad);
        }
        if let Some(inner) = s.strip_prefix("p[").and_then(|r| r.strip_suffix(']')) {
            return Permutation::from_images(numbers(inner)?).map(Letter::Perm).ok_or_else(bad);
        }
        let digits = s.strip_prefix('s').ok_or_else(bad)?.as_bytes();
        match digits {
            [a, b] if a.is_ascii_digit() && b.is_ascii_digit() => {
                let (i, j) = (u32::from(a - b'0'), u32::from(b - b'0'));
                if 1 <= i && i < j {
                    Ok(Letter::Cactus { i, j })
                } else {
                    Err(bad())
                }
            }
            _ => Err(bad()),
        }
    }
}

/// Splits on `·`, `.`, `*` or whitespace.
pub fn parse_word(text: &str) -> Result<Vec<Letter>, CoverError> {
    let mut letters = Vec::new();
    let mut depth = 0;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (c == '·' || c == '.' || c == '*' || c.is_whitespace()) {
            if !current.is_empty() {
                letters.push(current.parse()?);
                current.clear();
            }
        } else {
            current.push(c);
        }
    }
    if !current.is_empty() {
        letters.push(current.parse()?);
    }
    Ok(letters)
}

/// A word over the `s_A` generators only.
pub fn parse_generator_word(text: &str) -> Result<GeneratorWord, CoverError> {
    parse_word(text)?
        .into_iter()
        .map(|l| match l {
            Letter::Ordered(a) => Ok(a),
            other => Err(CoverError::BadLetter(other.to_string())),
        })
        .collect()
}

pub fn format_word(word: &[Letter]) -> String {
    word.iter().map(Letter::to_string).collect::<Vec<_>>().join("·")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelatorFamily {
    Involution,
    Commutation,
    Nested,
    Coxeter,
    Conjugation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub family: RelatorFamily,
    pub word: Vec<Letter>,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub kind: PresentationKind,
    pub n: u32,
    pub generators: Vec<Letter>,
    pub relators: Vec<Relator>,
}

impl Presentation {
    pub fn relators_of(&self, family: RelatorFamily) -> impl Iterator<Item = &Relator> {
        self.relators.iter().filter(move |r| r.family == family)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "gen {g}")?;
        }
        for r in &self.relators {
            writeln!(f, "rel {}", format_word(&r.word))?;
        }
        Ok(())
    }
}

pub fn presentation(kind: PresentationKind, n: u32) -> Result<Presentation, CoverError> {
    let limit = if kind == PresentationKind::Pvcn { MAX_PVCN_N } else { MAX_PRESENTATION_N };
    if !(2..=limit).contains(&n) {
        return Err(CoverError::UnsupportedN(n));
    }
    Ok(match kind {
        PresentationKind::Cactus => cactus(n),
        PresentationKind::VirtualCactus => virtual_cactus(n),
        PresentationKind::Pvcn => pvcn(n),
    })
}

fn intervals(n: u32) -> Vec<(u32, u32)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

fn s(i: u32, j: u32) -> Letter {
    Letter::Cactus { i, j }
}

fn cactus(n: u32) -> Presentation {
    let all = intervals(n);
    let mut relators = Vec::new();
    for &(i, j) in &all {
        relators.push(Relator { family: RelatorFamily::Involution, word: vec![s(i, j), s(i, j)] });
    }
    for (x, &(i, j)) in all.iter().enumerate() {
        for &(k, l) in &all[x + 1..] {
            if j < k || l < i {
                relators.push(Relator {
                    family: RelatorFamily::Commutation,
                    word: vec![s(i, j), s(k, l), s(i, j), s(k, l)],
                });
            }
        }
    }
    // s_ij s_kl = s_{w(l) w(k)} s_ij for [k,l] strictly inside [i,j]
    for &(i, j) in &all {
        let w = Permutation::interval_reversal(n, i, j);
        for &(k, l) in &all {
            if i <= k && l <= j && (k, l) != (i, j) {
                relators.push(Relator {
                    family: RelatorFamily::Nested,
                    word: vec![s(i, j), s(k, l), s(i, j), s(w.apply(l), w.apply(k))],
                });
            }
        }
    }
    Presentation {
        kind: PresentationKind::Cactus,
        n,
        generators: all.iter().map(|&(i, j)| s(i, j)).collect(),
        relators,
    }
}

fn virtual_cactus(n: u32) -> Presentation {
    let mut p = cactus(n);
    p.kind = PresentationKind::VirtualCactus;
    let t = |k: u32| Letter::Perm(Permutation::adjacent(n, k));
    p.generators.extend((1..n).map(t));
    for a in 1..n {
        p.relators.push(Relator { family: RelatorFamily::Coxeter, word: vec![t(a), t(a)] });
        for b in a + 1..n {
            let order = if b == a + 1 { 3 } else { 2 };
            let word = (0..order).flat_map(|_| [t(a), t(b)]).collect();
            p.relators.push(Relator { family: RelatorFamily::Coxeter, word });
        }
    }
    // w s_ij w⁻¹ = s_{w(i) w(j)} whenever w shifts [i,j] rigidly
    let perms = Permutation::all(n);
    for (i, j) in intervals(n) {
        for w in &perms {
            if !w.preserves_interval(i, j) {
                continue;
            }
            let letters: Vec<Letter> = w.adjacent_word().into_iter().map(t).collect();
            let mut word = letters.clone();
            word.push(s(i, j));
            word.extend(letters.into_iter().rev());
            word.push(s(w.apply(i), w.apply(j)));
            p.relators.push(Relator { family: RelatorFamily::Conjugation, word });
        }
    }
    p
}

/// Ordered subsets of `1..=n` with at least two elements, by length and then lexicographically.
pub fn ordered_subsets(n: u32) -> Vec<OrderedSubset> {
    let mut out = Vec::new();
    fn grow(n: u32, prefix: &mut Vec<Label>, out: &mut Vec<Vec<Label>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        for x in 1..=n {
            if !prefix.contains(&x) {
                prefix.push(x);
                grow(n, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut raw = Vec::new();
    grow(n, &mut Vec::new(), &mut raw);
    raw.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out.extend(raw.into_iter().map(|v| OrderedSubset::new(v).expect("distinct labels")));
    out
}

fn concat(parts: &[&OrderedSubset]) -> OrderedSubset {
    OrderedSubset::new(parts.iter().flat_map(|p| p.labels().iter().copied()).collect()).expect("parts are disjoint")
}

/// Ordered subsets of the labels not in `used`, including the empty one.
fn ordered_subsets_avoiding(n: u32, used: crate::forests::LabelSet) -> Vec<OrderedSubset> {
    let mut out = vec![OrderedSubset::new(Vec::new()).expect("empty")];
    fn grow(n: u32, used: crate::forests::LabelSet, prefix: &mut Vec<Label>, out: &mut Vec<OrderedSubset>) {
        for x in 1..=n {
            if !used.contains(x) && !prefix.contains(&x) {
                prefix.push(x);
                out.push(OrderedSubset::new(prefix.clone()).expect("distinct labels"));
                grow(n, used, prefix, out);
                prefix.pop();
            }
        }
    }
    grow(n, used, &mut Vec::new(), &mut out);
    out
}

fn pvcn(n: u32) -> Presentation {
    let generators = ordered_subsets(n);
    let mut relators = Vec::new();
    let mut seen: BTreeSet<GeneratorWord> = BTreeSet::new();
    let mut push = |family, word: GeneratorWord, relators: &mut Vec<Relator>| {
        if seen.insert(canonical_cyclic(&word)) {
            relators.push(Relator { family, word: word.into_iter().map(Letter::Ordered).collect() });
        }
    };

    for a in &generators {
        push(RelatorFamily::Involution, vec![a.clone(), a.reversed()], &mut relators);
    }
    for a in &generators {
        for b in &generators {
            if a.set().is_disjoint(b.set()) {
                push(RelatorFamily::Commutation, vec![a.clone(), b.clone(), a.reversed(), b.reversed()], &mut relators);
            }
        }
    }
    // s_{A^r} s_{CAB} = s_{CA^rB} s_A, as the cyclic word A^r, CAB, A^r, (CA^rB)^r
    for a in &generators {
        let rest = ordered_subsets_avoiding(n, a.set());
        for c in &rest {
            for b in &rest {
                if !c.set().is_disjoint(b.set()) || (c.is_empty() && b.is_empty()) {
                    continue;
                }
                let ar = a.reversed();
                let word = vec![ar.clone(), concat(&[c, a, b]), ar.clone(), concat(&[c, &ar, b]).reversed()];
                push(RelatorFamily::Nested, word, &mut relators);
            }
        }
    }
    Presentation {
        kind: PresentationKind::Pvcn,
        n,
        generators: generators.into_iter().map(Letter::Ordered).collect(),
        relators,
    }
}

/// `s_A` letters of a relator, when it is a word in them.
pub fn generator_word(r: &Relator) -> Option<GeneratorWord> {
    r.word
        .iter()
        .map(|l| match l {
            Letter::Ordered(a) => Some(a.clone()),
            _ => None,
        })
        .collect()
}

/// `w ↦` the relator for `w = 1` written with `s_A⁻¹ = s_{A^r}`.
pub fn relator_of_equation(lhs: &[OrderedSubset], rhs: &[OrderedSubset]) -> GeneratorWord {
    let mut word = lhs.to_vec();
    word.extend(inverse_word(rhs));
    word
}
