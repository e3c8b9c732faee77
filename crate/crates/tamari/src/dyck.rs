//! Dyck paths as balanced up/down words with nonnegative prefixes.

use crate::nu::Dir;
use crate::TamariError;
use std::fmt;
use std::str::FromStr;

/// A Dyck path of semilength n: 2n steps, `true` for up, every prefix has at
/// least as many ups as downs, total balanced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<bool>,
}

impl DyckPath {
    pub fn new(steps: Vec<bool>) -> Result<Self, TamariError> {
        let mut height = 0i64;
        for &s in &steps {
            height += if s { 1 } else { -1 };
            if height < 0 {
                return Err(TamariError::BadPath("prefix dips below zero".into()));
            }
        }
        if height != 0 {
            return Err(TamariError::BadPath("unbalanced step counts".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[bool] {
        &self.steps
    }

    /// For the k-th up step (1-based), the offset to its matching down step.
    pub fn distance_vector(&self) -> Vec<usize> {
        let n = self.semilength();
        let mut out = vec![0usize; n];
        let mut stack: Vec<(usize, usize)> = Vec::new(); // (up index, position)
        let mut ups_seen = 0usize;
        for (pos, &s) in self.steps.iter().enumerate() {
            if s {
                stack.push((ups_seen, pos));
                ups_seen += 1;
            } else {
                let (k, up_pos) = stack.pop().expect("balanced path");
                out[k] = pos - up_pos;
            }
        }
        out
    }

    /// The canopy: for k = 1, .., n-1, records what follows the k-th up step.
    /// An up step gives E, a down step gives N.
    pub fn canopy(&self) -> Vec<Dir> {
        let mut out = Vec::new();
        let mut ups_seen = 0usize;
        for (pos, &s) in self.steps.iter().enumerate() {
            if s {
                ups_seen += 1;
                if ups_seen == self.semilength() {
                    break;
                }
                out.push(if self.steps[pos + 1] { Dir::E } else { Dir::N });
            }
        }
        out
    }

    /// Length of the maximal run of down steps at the end of the path.
    pub fn last_descent(&self) -> usize {
        self.steps.iter().rev().take_while(|&&s| !s).count()
    }

    /// Order-reversing involution of the Tamari lattice, i.e. the mirror of
    /// the corresponding binary tree. Writing a nonempty path as A u B d,
    /// where the shown up step matches the final down step, the image is
    /// mirror(B) u mirror(A) d. Sends a canopy to its reversed complement.
    pub fn mirror(&self) -> DyckPath {
        fn rec(steps: &[bool], out: &mut Vec<bool>) {
            if steps.is_empty() {
                return;
            }
            let mut height = 0i64;
            let mut last_zero = 0usize;
            for (pos, &s) in steps[..steps.len() - 1].iter().enumerate() {
                height += if s { 1 } else { -1 };
                if height == 0 {
                    last_zero = pos + 1;
                }
            }
            rec(&steps[last_zero + 1..steps.len() - 1], out);
            out.push(true);
            rec(&steps[..last_zero], out);
            out.push(false);
        }
        let mut steps = Vec::with_capacity(self.steps.len());
        rec(&self.steps, &mut steps);
        DyckPath { steps }
    }

    /// All paths covering this one: for each valley (a down step immediately
    /// followed by an up step) the down step jumps over the excursion that
    /// starts at the up step.
    pub fn covers_up(&self) -> Vec<DyckPath> {
        let mut out = Vec::new();
        for i in 0..self.steps.len().saturating_sub(1) {
            if self.steps[i] || !self.steps[i + 1] {
                continue;
            }
            // excursion starting at i+1: shortest balanced segment
            let mut height = 0i64;
            let mut end = i + 1;
            loop {
                height += if self.steps[end] { 1 } else { -1 };
                if height == 0 {
                    break;
                }
                end += 1;
            }
            let mut steps = Vec::with_capacity(self.steps.len());
            steps.extend_from_slice(&self.steps[..i]);
            steps.extend_from_slice(&self.steps[i + 1..=end]);
            steps.push(false);
            steps.extend_from_slice(&self.steps[end + 1..]);
            out.push(DyckPath { steps });
        }
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            f.write_str(if s { "u" } else { "d" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DyckPath {
    type Err = TamariError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut steps = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                'u' | 'U' => steps.push(true),
                'd' | 'D' => steps.push(false),
                c if c.is_whitespace() => {}
                other => {
                    return Err(TamariError::BadPath(format!("unexpected character {other:?}")))
                }
            }
        }
        DyckPath::new(steps)
    }
}

/// Every Dyck path of semilength n, in lexicographic order with up < down.
pub fn all_dyck_paths(n: usize) -> Vec<DyckPath> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(2 * n);
    fn rec(steps: &mut Vec<bool>, ups: usize, downs: usize, n: usize, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath { steps: steps.clone() });
            return;
        }
        if ups < n {
            steps.push(true);
            rec(steps, ups + 1, downs, n, out);
            steps.pop();
        }
        if downs < ups {
            steps.push(false);
            rec(steps, ups, downs + 1, n, out);
            steps.pop();
        }
    }
    rec(&mut steps, 0, 0, n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        assert!("uudd".parse::<DyckPath>().is_ok());
        assert!("ud ud".parse::<DyckPath>().is_ok());
        assert!("duud".parse::<DyckPath>().is_err());
        assert!("uud".parse::<DyckPath>().is_err());
        assert!("uxdd".parse::<DyckPath>().is_err());
    }

    #[test]
    fn distance_vectors() {
        let p: DyckPath = "uudd".parse().unwrap();
        assert_eq!(p.distance_vector(), vec![3, 1]);
        let p: DyckPath = "uududd".parse().unwrap();
        assert_eq!(p.distance_vector(), vec![5, 1, 1]);
        let p: DyckPath = "udud".parse().unwrap();
        assert_eq!(p.distance_vector(), vec![1, 1]);
    }

    #[test]
    fn canopies() {
        let p: DyckPath = "ududud".parse().unwrap();
        assert_eq!(p.canopy(), vec![Dir::N, Dir::N]);
        let p: DyckPath = "uuuddd".parse().unwrap();
        assert_eq!(p.canopy(), vec![Dir::E, Dir::E]);
        let p: DyckPath = "uududd".parse().unwrap();
        assert_eq!(p.canopy(), vec![Dir::E, Dir::N]);
    }

    #[test]
    fn catalan_counts() {
        let want = [1usize, 1, 2, 5, 14, 42, 132];
        for (n, &w) in want.iter().enumerate() {
            assert_eq!(all_dyck_paths(n).len(), w);
        }
    }

    #[test]
    fn mirror_on_small_paths() {
        let cases = [
            ("ud", "ud"),
            ("udud", "uudd"),
            ("ududud", "uuuddd"),
            ("uduudd", "uduudd"),
            ("uuddud", "uududd"),
        ];
        for (from, to) in cases {
            let p: DyckPath = from.parse().unwrap();
            assert_eq!(p.mirror().to_string(), to);
            assert_eq!(p.mirror().mirror(), p);
        }
    }

    #[test]
    fn single_rotation() {
        let p: DyckPath = "udud".parse().unwrap();
        let covers = p.covers_up();
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].to_string(), "uudd");
        // the maximum has no valleys
        assert!("uudd".parse::<DyckPath>().unwrap().covers_up().is_empty());
    }
}
