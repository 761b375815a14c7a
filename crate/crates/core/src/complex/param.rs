use std::collections::HashMap;
use std::fmt;
use std::ops::Add;

use crate::forests::{LabelSet, TypeSet};

use super::ComplexError;

/// Largest `n` whose parameters fit in 64 bits (`2^6 - 6 - 1 = 57`).
pub const MAX_TYPE_N: u32 = 6;

/// The fixed ordering of `L`: subsets of `1..=n` with at least two elements,
/// by size and then lexicographically on their sorted elements.
#[derive(Clone, Debug)]
pub struct TypeIndex {
    n: u32,
    types: Vec<TypeSet>,
    lookup: HashMap<TypeSet, usize>,
}

impl TypeIndex {
    pub fn new(n: u32) -> Result<Self, ComplexError> {
        if !(2..=MAX_TYPE_N).contains(&n) {
            return Err(ComplexError::UnsupportedN(n));
        }
        let mut types = Vec::new();
        for size in 2..=n as usize {
            let mut combo: Vec<u32> = (1..=size as u32).collect();
            loop {
                types.push(TypeSet::from_labels(combo.iter().copied()).expect("size >= 2"));
                // next combination in lexicographic order
                let Some(i) = (0..size).rev().find(|&i| combo[i] < n - (size - 1 - i) as u32) else {
                    break;
                };
                combo[i] += 1;
                for j in i + 1..size {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
        let lookup = types.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        Ok(TypeIndex { n, types, lookup })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `|L| = 2^n - n - 1`.
    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn types(&self) -> &[TypeSet] {
        &self.types
    }

    pub fn type_at(&self, index: usize) -> TypeSet {
        self.types[index]
    }

    pub fn index_of(&self, t: TypeSet) -> Option<usize> {
        self.lookup.get(&t).copied()
    }

    pub fn index_of_set(&self, set: LabelSet) -> Option<usize> {
        TypeSet::new(set).and_then(|t| self.index_of(t))
    }

    /// The number of parameters, `2^|L|`.
    pub fn parameter_count(&self) -> u64 {
        1u64 << self.types.len()
    }

    /// Hex digits used when printing a parameter.
    pub fn hex_width(&self) -> usize {
        self.types.len().div_ceil(4).max(1)
    }

    pub fn hex(&self, p: Parameter) -> String {
        format!("{:0width$x}", p.0, width = self.hex_width())
    }

    /// Parses lowercase or uppercase hex; the value must fit in `|L|` bits.
    pub fn parse_hex(&self, text: &str) -> Result<Parameter, ComplexError> {
        let text = text.trim();
        let text = text.strip_prefix("0x").unwrap_or(text);
        let bad = || ComplexError::BadParameter(text.to_string());
        if text.is_empty() || text.len() > 16 {
            return Err(bad());
        }
        let value = u64::from_str_radix(text, 16).map_err(|_| bad())?;
        if self.types.len() < 64 && value >> self.types.len() != 0 {
            return Err(bad());
        }
        Ok(Parameter(value))
    }
}

/// An element of `(Z/2Z)^L`; bit `i` is the coordinate of the `i`-th type.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Parameter(pub u64);

impl Parameter {
    pub const ZERO: Parameter = Parameter(0);

    /// `1_l` for the type with index `i`.
    pub fn unit(i: usize) -> Self {
        Parameter(1u64 << i)
    }

    pub fn coordinate(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn toggled(self, i: usize) -> Self {
        Parameter(self.0 ^ (1u64 << i))
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }
}

/// Coordinates live in Z/2, so addition is exclusive or.
impl Add for Parameter {
    type Output = Parameter;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parameter) -> Parameter {
        Parameter(self.0 ^ rhs.0)
    }
}

impl fmt::LowerHex for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::LowerHex::fmt(&self.0, f)
    }
}
