//! Small finite posets stored as dense order matrices, with just enough
//! machinery for interval counting, lattice checks and isomorphism search.

use num_bigint::BigUint;

#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    words: usize,
    /// up[a] is the bitset of all b with a <= b (including a)
    up: Vec<Vec<u64>>,
}

impl Poset {
    pub fn from_leq<F: Fn(usize, usize) -> bool>(n: usize, leq: F) -> Poset {
        let words = n.div_ceil(64).max(1);
        let mut up = vec![vec![0u64; words]; n];
        for a in 0..n {
            for b in 0..n {
                if leq(a, b) {
                    up[a][b / 64] |= 1 << (b % 64);
                }
            }
            debug_assert!(up[a][a / 64] & (1 << (a % 64)) != 0, "order must be reflexive");
        }
        Poset { n, words, up }
    }

    /// Reflexive-transitive closure of a cover relation.
    pub fn from_covers(n: usize, covers: &[Vec<usize>]) -> Poset {
        assert_eq!(covers.len(), n);
        let words = n.div_ceil(64).max(1);
        let mut up = vec![vec![0u64; words]; n];
        for a in 0..n {
            // depth-first reachability
            let mut stack = vec![a];
            while let Some(v) = stack.pop() {
                let w = &mut up[a][v / 64];
                let bit = 1 << (v % 64);
                if *w & bit != 0 {
                    continue;
                }
                *w |= bit;
                stack.extend(covers[v].iter().copied());
            }
        }
        Poset { n, words, up }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a][b / 64] & (1 << (b % 64)) != 0
    }

    pub fn dual(&self) -> Poset {
        Poset::from_leq(self.n, |a, b| self.leq(b, a))
    }

    pub fn interval_count(&self) -> BigUint {
        let mut total = 0u64;
        for row in &self.up {
            total += row.iter().map(|w| w.count_ones() as u64).sum::<u64>();
        }
        BigUint::from(total)
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.n).find(|&a| (0..self.n).all(|b| self.leq(a, b)))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.n).find(|&a| (0..self.n).all(|b| self.leq(b, a)))
    }

    fn join_exists(&self, a: usize, b: usize) -> bool {
        // common upper bounds
        let bounds: Vec<u64> =
            (0..self.words).map(|w| self.up[a][w] & self.up[b][w]).collect();
        // a join is a common upper bound below all others
        for c in 0..self.n {
            if bounds[c / 64] & (1 << (c % 64)) == 0 {
                continue;
            }
            if (0..self.words).all(|w| bounds[w] & !self.up[c][w] == 0) {
                return true;
            }
        }
        false
    }

    pub fn is_lattice(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let dual = self.dual();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if !self.join_exists(a, b) || !dual.join_exists(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Cover lists derived from the order matrix.
    pub fn covers(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                let direct = (0..self.n)
                    .all(|c| c == a || c == b || !(self.leq(a, c) && self.leq(c, b)));
                if direct {
                    out[a].push(b);
                }
            }
        }
        out
    }
}

/// Invariant used to cut down the isomorphism search: sizes of the up-set and
/// down-set and the cover degrees of each element.
fn signatures(p: &Poset) -> Vec<(usize, usize, usize, usize)> {
    let covers = p.covers();
    let mut cover_in = vec![0usize; p.size()];
    for cs in &covers {
        for &b in cs {
            cover_in[b] += 1;
        }
    }
    (0..p.size())
        .map(|a| {
            let ups = (0..p.size()).filter(|&b| p.leq(a, b)).count();
            let downs = (0..p.size()).filter(|&b| p.leq(b, a)).count();
            (ups, downs, covers[a].len(), cover_in[a])
        })
        .collect()
}

pub fn are_isomorphic(p: &Poset, q: &Poset) -> bool {
    if p.size() != q.size() {
        return false;
    }
    let n = p.size();
    let sig_p = signatures(p);
    let sig_q = signatures(q);
    {
        let mut sp = sig_p.clone();
        let mut sq = sig_q.clone();
        sp.sort_unstable();
        sq.sort_unstable();
        if sp != sq {
            return false;
        }
    }
    // map elements of p in order of rarest signature first
    let mut order: Vec<usize> = (0..n).collect();
    let mut freq = std::collections::HashMap::new();
    for s in &sig_p {
        *freq.entry(*s).or_insert(0usize) += 1;
    }
    order.sort_by_key(|&a| (freq[&sig_p[a]], sig_p[a]));

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        k: usize,
        order: &[usize],
        p: &Poset,
        q: &Poset,
        sig_p: &[(usize, usize, usize, usize)],
        sig_q: &[(usize, usize, usize, usize)],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let a = order[k];
        for b in 0..q.size() {
            if used[b] || sig_p[a] != sig_q[b] {
                continue;
            }
            let consistent = order[..k].iter().all(|&a2| {
                let b2 = image[a2];
                p.leq(a, a2) == q.leq(b, b2) && p.leq(a2, a) == q.leq(b2, b)
            });
            if !consistent {
                continue;
            }
            image[a] = b;
            used[b] = true;
            if rec(k + 1, order, p, q, sig_p, sig_q, image, used) {
                return true;
            }
            image[a] = usize::MAX;
            used[b] = false;
        }
        false
    }
    rec(0, &order, p, q, &sig_p, &sig_q, &mut image, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Poset {
        Poset::from_leq(n, |a, b| a <= b)
    }

    fn antichain(n: usize) -> Poset {
        Poset::from_leq(n, |a, b| a == b)
    }

    #[test]
    fn chains_and_antichains() {
        let c = chain(4);
        assert_eq!(c.interval_count(), BigUint::from(10u32));
        assert!(c.is_lattice());
        assert_eq!(c.minimum(), Some(0));
        assert_eq!(c.maximum(), Some(3));
        let a = antichain(3);
        assert_eq!(a.interval_count(), BigUint::from(3u32));
        assert!(!a.is_lattice());
        assert!(a.minimum().is_none());
    }

    #[test]
    fn closure_recovers_chain() {
        let covers = vec![vec![1], vec![2], vec![]];
        let p = Poset::from_covers(3, &covers);
        assert!(are_isomorphic(&p, &chain(3)));
        assert_eq!(p.covers(), covers);
    }

    #[test]
    fn duality_and_isomorphism() {
        let covers = vec![vec![1, 2], vec![3], vec![3], vec![]];
        let diamond = Poset::from_covers(4, &covers);
        assert!(are_isomorphic(&diamond, &diamond.dual()));
        assert!(!are_isomorphic(&diamond, &chain(4)));
        assert!(diamond.is_lattice());
    }
}
