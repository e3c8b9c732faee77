use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{factorial, SymError};

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymError> {
        if parts.iter().any(|&p| p == 0) {
            return Err(SymError::InvalidPartition("zero part".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(SymError::InvalidPartition(format!(
                "parts {parts:?} not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts for the caller; zero parts are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// part value -> multiplicity
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Centralizer order z = prod over part values i of i^{m_i} * m_i!.
    pub fn z(&self) -> BigUint {
        let mut acc = BigUint::from(1u32);
        for (i, m) in self.multiplicities() {
            for _ in 0..m {
                acc *= BigUint::from(i);
            }
            acc *= factorial(m);
        }
        acc
    }

    /// Size of the conjugacy class in S_{sum}: n!/z. Exact division.
    pub fn class_size(&self) -> BigUint {
        let n = factorial(self.sum());
        let z = self.z();
        debug_assert!((&n % &z) == BigUint::from(0u32));
        n / z
    }

    /// Every part multiplied by m.
    pub fn scaled(&self, m: usize) -> Partition {
        assert!(m > 0, "scale factor must be positive");
        Partition {
            parts: self.parts.iter().map(|&p| p * m).collect(),
        }
    }

    /// All parts divided by m, if m divides each.
    pub fn unscaled(&self, m: usize) -> Option<Partition> {
        if self.parts.iter().all(|&p| p % m == 0) {
            Some(Partition {
                parts: self.parts.iter().map(|&p| p / m).collect(),
            })
        } else {
            None
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

/// All partitions of n in reverse-lexicographic order: [n] first,
/// [1, 1, ..., 1] last. The order is part of the contract; callers index
/// into it for deterministic tables.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    out
}

fn descend(left: usize, cap: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    let mut p = cap.min(left);
    while p >= 1 {
        stack.push(p);
        descend(left - p, p, stack, out);
        stack.pop();
        p -= 1;
    }
}
