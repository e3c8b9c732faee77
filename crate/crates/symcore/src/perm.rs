use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Partition, SymError};

/// Permutation of {1, ..., n}. Points are 1-based everywhere at the API
/// boundary; the flat image table inside is 0-based and never leaks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            img: (0..degree).collect(),
        }
    }

    /// Builds from the image word `[p(1), p(2), ..., p(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self, SymError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n {
                return Err(SymError::InvalidPermutation(format!(
                    "image {v} out of range 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(SymError::InvalidPermutation(format!("image {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Perm {
            img: images.iter().map(|&v| v - 1).collect(),
        })
    }

    /// Builds from disjoint cycles over {1, ..., degree}; omitted points are
    /// fixed. `from_cycles(5, &[vec![1, 2, 3]])` is (1 2 3)(4)(5).
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, SymError> {
        let mut img: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for w in 0..cycle.len() {
                let a = cycle[w];
                let b = cycle[(w + 1) % cycle.len()];
                if a == 0 || a > degree {
                    return Err(SymError::InvalidPermutation(format!(
                        "cycle entry {a} out of range 1..={degree}"
                    )));
                }
                if used[a - 1] {
                    return Err(SymError::InvalidPermutation(format!(
                        "point {a} appears in two cycles"
                    )));
                }
                used[a - 1] = true;
                img[a - 1] = b - 1;
            }
        }
        Ok(Perm { img })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// Image of the 1-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1] + 1
    }

    /// Image word `[p(1), ..., p(n)]`.
    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v + 1).collect()
    }

    /// Left-to-right product: `(self * other)(i) = other(self(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, SymError> {
        if self.degree() != other.degree() {
            return Err(SymError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Perm {
            img: self.img.iter().map(|&v| other.img[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v] = i;
        }
        Perm { img }
    }

    /// Relabels points through `g`: if self sends i to j, the result sends
    /// g(i) to g(j). Cycle type is preserved.
    pub fn conjugate_by(&self, g: &Perm) -> Result<Perm, SymError> {
        if self.degree() != g.degree() {
            return Err(SymError::DegreeMismatch(self.degree(), g.degree()));
        }
        let mut img = vec![0; self.img.len()];
        for i in 0..self.img.len() {
            img[g.img[i]] = g.img[self.img[i]];
        }
        Ok(Perm { img })
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.img
            .iter()
            .enumerate()
            .all(|(i, &v)| v != i && self.img[v] == i)
    }

    /// Disjoint cycles, each rotated to open with its smallest point, listed
    /// by smallest point. Fixed points appear as singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.img[cur];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.img.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.img[cur];
            }
        }
        count
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens).expect("cycle lengths sorted decreasingly")
    }

    /// Length of the cycle through the 1-based point `i`.
    pub fn cycle_len_through(&self, i: usize) -> usize {
        let start = i - 1;
        let mut cur = self.img[start];
        let mut len = 1;
        while cur != start {
            cur = self.img[cur];
            len += 1;
        }
        len
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id_{}", self.degree());
        }
        for cycle in self.cycles() {
            if cycle.len() == 1 {
                continue;
            }
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.images().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Perm::from_images(&images).map_err(D::Error::custom)
    }
}

/// Orbit of a 1-based point under the group generated by `gens`, sorted.
pub fn orbit_of_point(start: usize, gens: &[&Perm]) -> Vec<usize> {
    let n = gens.first().map_or(start, |g| g.degree());
    let mut seen = vec![false; n.max(start)];
    let mut stack = vec![start];
    seen[start - 1] = true;
    let mut orbit = vec![start];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g.apply(p);
            if !seen[q - 1] {
                seen[q - 1] = true;
                orbit.push(q);
                stack.push(q);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

/// Calls `f` with every image word of S_n in lexicographic order. The slice
/// holds 0-based images; callers needing a `Perm` pay for construction only
/// on the words they keep.
pub fn for_each_image_word(n: usize, mut f: impl FnMut(&[usize])) {
    let mut word: Vec<usize> = (0..n).collect();
    loop {
        f(&word);
        // textbook next_permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| word[i] < word[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
        word.swap(i, j);
        word[i + 1..].reverse();
    }
}

pub fn perms_of_degree(n: usize) -> impl Iterator<Item = Perm> {
    let mut words = Vec::new();
    for_each_image_word(n, |w| words.push(w.to_vec()));
    words.into_iter().map(|img| Perm { img })
}

/// All fixed-point-free involutions of the (even) degree, in the order given
/// by repeatedly pairing the smallest free point. (2n-1)!! of them.
pub fn fixed_point_free_involutions(degree: usize) -> Vec<Perm> {
    assert!(degree % 2 == 0, "need an even degree, got {degree}");
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; degree];
    pair_up(&mut img, &mut out);
    out
}

fn pair_up(img: &mut Vec<usize>, out: &mut Vec<Perm>) {
    let Some(a) = img.iter().position(|&v| v == usize::MAX) else {
        out.push(Perm { img: img.clone() });
        return;
    };
    for b in a + 1..img.len() {
        if img[b] == usize::MAX {
            img[a] = b;
            img[b] = a;
            pair_up(img, out);
            img[a] = usize::MAX;
            img[b] = usize::MAX;
        }
    }
}

/// Every permutation of the class's degree with the given cycle type.
/// Exhaustive filter; meant for the small degrees the oracles sweep.
pub fn class_elements(lambda: &Partition) -> Vec<Perm> {
    let n = lambda.sum();
    perms_of_degree(n)
        .filter(|p| &p.cycle_type() == lambda)
        .collect()
}
