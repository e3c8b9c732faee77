//! Lattices of northeast paths weakly above a fixed word nu, ordered by the
//! horizontal-distance rotation rule, together with the closed interval
//! counts for the staircase family.

use crate::poset::Poset;
use crate::TamariError;
use num_bigint::BigUint;
use std::collections::BTreeMap;
use std::fmt;
use symcore::binomial;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dir {
    N,
    E,
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dir::N => "N",
            Dir::E => "E",
        })
    }
}

pub fn parse_word(s: &str) -> Result<Vec<Dir>, TamariError> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'N' | 'n' => Ok(Dir::N),
            'E' | 'e' => Ok(Dir::E),
            other => Err(TamariError::BadPath(format!("unexpected character {other:?}"))),
        })
        .collect()
}

pub fn word_string(w: &[Dir]) -> String {
    w.iter().map(|d| d.to_string()).collect()
}

/// Height profile: entry j is the number of N steps before the (j+1)-th E.
fn height_profile(word: &[Dir]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut ns = 0usize;
    for &d in word {
        match d {
            Dir::N => ns += 1,
            Dir::E => out.push(ns),
        }
    }
    out
}

fn enumerate_above(nu: &[Dir], cap: usize) -> Result<Vec<Vec<Dir>>, TamariError> {
    let total_n = nu.iter().filter(|&&d| d == Dir::N).count();
    let total_e = nu.len() - total_n;
    let wall = height_profile(nu);
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(nu.len());
    fn rec(
        word: &mut Vec<Dir>,
        ns: usize,
        es: usize,
        total_n: usize,
        total_e: usize,
        wall: &[usize],
        out: &mut Vec<Vec<Dir>>,
        cap: usize,
    ) -> Result<(), TamariError> {
        if out.len() > cap {
            return Err(TamariError::BadArgument(format!(
                "more than {cap} paths above the given word"
            )));
        }
        if ns == total_n && es == total_e {
            out.push(word.clone());
            return Ok(());
        }
        if ns < total_n {
            word.push(Dir::N);
            rec(word, ns + 1, es, total_n, total_e, wall, out, cap)?;
            word.pop();
        }
        if es < total_e && ns >= wall[es] {
            word.push(Dir::E);
            rec(word, ns, es + 1, total_n, total_e, wall, out, cap)?;
            word.pop();
        }
        Ok(())
    }
    rec(&mut word, 0, 0, total_n, total_e, &wall, &mut out, cap)?;
    Ok(out)
}

/// Number of initial columns of the wall with height at most y.
fn max_x_at_height(wall: &[usize], y: usize) -> usize {
    wall.iter().take_while(|&&h| h <= y).count()
}

/// All covers of a path above nu: each east-north valley pushes its east step
/// past the segment ending at the next point of equal horizontal distance.
fn covers_above(word: &[Dir], wall: &[usize]) -> Vec<Vec<Dir>> {
    // coordinates of every lattice point along the path
    let mut points = Vec::with_capacity(word.len() + 1);
    let (mut x, mut y) = (0usize, 0usize);
    points.push((x, y));
    for &d in word {
        match d {
            Dir::N => y += 1,
            Dir::E => x += 1,
        }
        points.push((x, y));
    }
    let horiz = |p: (usize, usize)| max_x_at_height(wall, p.1) - p.0;
    let mut out = Vec::new();
    for s in 0..word.len().saturating_sub(1) {
        if word[s] != Dir::E || word[s + 1] != Dir::N {
            continue;
        }
        let q = points[s + 1];
        let h = horiz(q);
        let t = (s + 2..=word.len())
            .find(|&t| horiz(points[t]) == h)
            .expect("horizontal distance recurs by the endpoint");
        let mut next = Vec::with_capacity(word.len());
        next.extend_from_slice(&word[..s]);
        next.extend_from_slice(&word[s + 1..t]);
        next.push(Dir::E);
        next.extend_from_slice(&word[t..]);
        out.push(next);
    }
    out
}

pub struct NuTamari {
    nu: Vec<Dir>,
    elements: Vec<Vec<Dir>>,
    poset: Poset,
}

pub fn nu_tamari(nu: &[Dir]) -> Result<NuTamari, TamariError> {
    let elements = enumerate_above(nu, 100_000)?;
    let index: BTreeMap<&Vec<Dir>, usize> =
        elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let wall = height_profile(nu);
    let covers: Vec<Vec<usize>> = elements
        .iter()
        .map(|w| {
            covers_above(w, &wall)
                .iter()
                .map(|c| *index.get(c).expect("covers stay above the wall"))
                .collect()
        })
        .collect();
    let poset = Poset::from_covers(elements.len(), &covers);
    Ok(NuTamari { nu: nu.to_vec(), elements, poset })
}

impl NuTamari {
    pub fn nu(&self) -> &[Dir] {
        &self.nu
    }

    pub fn elements(&self) -> &[Vec<Dir>] {
        &self.elements
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn interval_count(&self) -> BigUint {
        self.poset.interval_count()
    }
}

/// Reverse the word and swap N with E.
pub fn reverse_complement(word: &[Dir]) -> Vec<Dir> {
    word.iter()
        .rev()
        .map(|d| match d {
            Dir::N => Dir::E,
            Dir::E => Dir::N,
        })
        .collect()
}

/// Interval count of the lattice of paths above (N E^m)^n.
pub fn m_tamari_interval_count(m: usize, n: usize) -> Result<BigUint, TamariError> {
    if m == 0 || n == 0 {
        return Err(TamariError::BadArgument("need positive m and n".into()));
    }
    let mut nu = Vec::with_capacity(n * (m + 1));
    for _ in 0..n {
        nu.push(Dir::N);
        nu.extend(std::iter::repeat(Dir::E).take(m));
    }
    Ok(nu_tamari(&nu)?.interval_count())
}

/// (m+1) ((m+1)^2 n + m choose n-1) / (n (mn+1)).
pub fn m_tamari_interval_count_closed_form(m: usize, n: usize) -> BigUint {
    assert!(m >= 1 && n >= 1);
    let num = BigUint::from(m as u64 + 1) * binomial((m + 1) * (m + 1) * n + m, n - 1);
    let den = BigUint::from(n as u64 * (m as u64 * n as u64 + 1));
    assert!((&num % &den) == BigUint::from(0u32));
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_element_chain_above_en() {
        let t = nu_tamari(&[Dir::E, Dir::N]).unwrap();
        assert_eq!(t.elements().len(), 2);
        assert_eq!(t.interval_count(), BigUint::from(3u32));
        assert!(t.poset().minimum().is_some());
        assert!(t.poset().maximum().is_some());
    }

    #[test]
    fn wall_constrains_enumeration() {
        // only NE itself lies above NE
        let t = nu_tamari(&[Dir::N, Dir::E]).unwrap();
        assert_eq!(t.elements().len(), 1);
    }

    #[test]
    fn pure_words_are_rigid() {
        let t = nu_tamari(&[Dir::N, Dir::N, Dir::N]).unwrap();
        assert_eq!(t.elements().len(), 1);
        let t = nu_tamari(&[Dir::E, Dir::E]).unwrap();
        assert_eq!(t.elements().len(), 1);
    }

    #[test]
    fn reverse_complement_involutes() {
        let w = parse_word("NEENE").unwrap();
        assert_eq!(reverse_complement(&reverse_complement(&w)), w);
        assert_eq!(word_string(&reverse_complement(&w)), "NENNE");
    }
}
