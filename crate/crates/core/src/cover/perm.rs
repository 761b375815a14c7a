use std::fmt;

/// A bijection of `1..=n` in one-line notation: `images[i]` is the image of `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Returns `None` unless `images` is a rearrangement of `1..=images.len()`.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let slot = seen.get_mut((x as usize).checked_sub(1)?)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Permutation { images })
    }

    /// `w_ij`: reverses `i..=j` and fixes everything else.
    pub fn interval_reversal(n: u32, i: u32, j: u32) -> Self {
        assert!(1 <= i && i < j && j <= n, "interval {i}..={j} outside 1..={n}");
        let images = (1..=n).map(|x| if (i..=j).contains(&x) { i + j - x } else { x }).collect();
        Permutation { images }
    }

    /// Swaps `i` and `i + 1`.
    pub fn adjacent(n: u32, i: u32) -> Self {
        Self::interval_reversal(n, i, i + 1)
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize - 1]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as u32 + 1)
    }

    /// Whether `w(i + k) = w(i) + k` for `k = 0..=j - i`.
    pub fn preserves_interval(&self, i: u32, j: u32) -> bool {
        (i..=j).all(|x| self.apply(x) == self.apply(i) + (x - i))
    }

    /// A word in adjacent transpositions `t_k` (swapping `k`, `k + 1`) whose
    /// product, read left to right as composition, is `self`.
    pub fn adjacent_word(&self) -> Vec<u32> {
        // bubble sort records swaps s with self ∘ t_{s_1} ∘ ... ∘ t_{s_m} = id
        let mut a = self.images.clone();
        let mut swaps = Vec::new();
        for end in (1..a.len()).rev() {
            for k in 0..end {
                if a[k] > a[k + 1] {
                    a.swap(k, k + 1);
                    swaps.push(k as u32 + 1);
                }
            }
        }
        swaps.reverse();
        swaps
    }

    /// All permutations of `1..=n` in lexicographic order of their images.
    pub fn all(n: u32) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = (1..=n).collect();
        loop {
            out.push(Permutation { images: current.clone() });
            let Some(i) = (0..current.len().saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
                break;
            };
            let j = (i + 1..current.len()).rev().find(|&j| current[j] > current[i]).expect("successor exists");
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("p[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}
