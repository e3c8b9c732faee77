use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use symcore::{factorial, fixed_point_free_involutions, Partition, Perm};

use crate::rotation::{canonical_bullet, GeneralRotation};
use crate::sweep::fold_image_words_sharded;
use crate::MapError;

/// Predicate on a permutation's multiset of cycle lengths.
#[derive(Clone, Debug, Default)]
pub enum CycleFilter {
    #[default]
    Any,
    Exact(Partition),
    LengthsIn(BTreeSet<usize>),
}

impl CycleFilter {
    fn matches(&self, lengths_desc: &[usize]) -> bool {
        match self {
            CycleFilter::Any => true,
            CycleFilter::Exact(p) => p.parts() == lengths_desc,
            CycleFilter::LengthsIn(set) => lengths_desc.iter().all(|l| set.contains(l)),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct GeneralFilter {
    pub genus: Option<usize>,
    pub faces: CycleFilter,
    pub vertices: CycleFilter,
    pub loopless: bool,
    pub simple: bool,
    pub nonseparable: bool,
}

#[derive(Clone, Debug, Default)]
pub struct BipartiteFilter {
    pub genus: Option<usize>,
    /// On half-degrees: a part d is a face of degree 2d.
    pub faces_half: CycleFilter,
}

fn exact_div(a: BigUint, b: &BigUint) -> BigUint {
    assert_eq!(&a % b, BigUint::from(0u32), "inexact division {a}/{b}");
    a / b
}

// ---- word-level helpers (0-based image words) ----------------------------

fn invert_word(w: &[usize], out: &mut Vec<usize>) {
    out.clear();
    out.resize(w.len(), 0);
    for (i, &v) in w.iter().enumerate() {
        out[v] = i;
    }
}

fn cycle_lengths_desc(w: &[usize], seen: &mut Vec<bool>, out: &mut Vec<usize>) {
    seen.clear();
    seen.resize(w.len(), false);
    out.clear();
    for start in 0..w.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = w[cur];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
}

fn cycle_count(w: &[usize], seen: &mut Vec<bool>) -> usize {
    seen.clear();
    seen.resize(w.len(), false);
    let mut count = 0;
    for start in 0..w.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = w[cur];
        }
    }
    count
}

/// Orbit of 0 under a list of image words covers everything?
fn transitive_words(words: &[&[usize]], seen: &mut Vec<bool>, stack: &mut Vec<usize>) -> bool {
    let n = words[0].len();
    seen.clear();
    seen.resize(n, false);
    stack.clear();
    stack.push(0);
    seen[0] = true;
    let mut reached = 1;
    while let Some(d) = stack.pop() {
        for w in words {
            let img = w[d];
            if !seen[img] {
                seen[img] = true;
                reached += 1;
                stack.push(img);
            }
        }
    }
    reached == n
}

/// Scratch buffers recycled across one shard's iterations.
#[derive(Default)]
struct Scratch {
    seen: Vec<bool>,
    stack: Vec<usize>,
    lens: Vec<usize>,
    sigma: Vec<usize>,
    inv: Vec<usize>,
    prod: Vec<usize>,
    vertex_of: Vec<usize>,
}

/// Full predicate for (phi, rho) given as words. `rho` as a function so the
/// canonical pairing can stay allocation-free.
fn general_word_matches(
    phi: &[usize],
    rho: impl Fn(usize) -> usize + Copy,
    filter: &GeneralFilter,
    s: &mut Scratch,
) -> bool {
    let darts = phi.len();
    // rho as a word, once
    s.prod.clear();
    s.prod.extend((0..darts).map(rho));
    {
        let rho_word: &[usize] = &s.prod;
        if !transitive_words(&[phi, rho_word], &mut s.seen, &mut s.stack) {
            return false;
        }
    }
    cycle_lengths_desc(phi, &mut s.seen, &mut s.lens);
    if !filter.faces.matches(&s.lens) {
        return false;
    }
    let f = s.lens.len();
    // sigma = rho then phi
    s.sigma.clear();
    s.sigma.extend((0..darts).map(|i| phi[rho(i)]));
    cycle_lengths_desc(&s.sigma, &mut s.seen, &mut s.lens);
    if !filter.vertices.matches(&s.lens) {
        return false;
    }
    let v = s.lens.len();
    if let Some(g) = filter.genus {
        let chi = v as i64 + f as i64 - (darts / 2) as i64;
        if 2 - chi != 2 * g as i64 {
            return false;
        }
    }
    if !(filter.loopless || filter.simple || filter.nonseparable) {
        return true;
    }
    // vertex ids from sigma cycles
    s.vertex_of.clear();
    s.vertex_of.resize(darts, usize::MAX);
    let mut vid = 0;
    for start in 0..darts {
        if s.vertex_of[start] != usize::MAX {
            continue;
        }
        let mut cur = start;
        while s.vertex_of[cur] == usize::MAX {
            s.vertex_of[cur] = vid;
            cur = s.sigma[cur];
        }
        vid += 1;
    }
    let has_loop = (0..darts).any(|d| s.vertex_of[d] == s.vertex_of[rho(d)]);
    if (filter.loopless || filter.simple || filter.nonseparable) && has_loop {
        return false;
    }
    if filter.simple {
        let mut pairs: Vec<(usize, usize)> = (0..darts)
            .filter(|&d| d < rho(d))
            .map(|d| {
                let (a, b) = (s.vertex_of[d], s.vertex_of[rho(d)]);
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    if filter.nonseparable {
        if darts < 4 {
            return false; // fewer than two edges
        }
        // cut vertex test by deletion; vertex count is tiny here
        let edges: Vec<(usize, usize)> = (0..darts)
            .filter(|&d| d < rho(d))
            .map(|d| (s.vertex_of[d], s.vertex_of[rho(d)]))
            .collect();
        for cut in 0..vid {
            if vid <= 1 {
                break;
            }
            let mut adj = vec![Vec::new(); vid];
            for &(a, b) in &edges {
                if a != cut && b != cut {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
            let alive: Vec<usize> = (0..vid).filter(|&x| x != cut).collect();
            if alive.is_empty() {
                continue;
            }
            let mut seen = vec![false; vid];
            let mut stack = vec![alive[0]];
            seen[alive[0]] = true;
            let mut reached = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        reached += 1;
                        stack.push(y);
                    }
                }
            }
            if reached != alive.len() {
                return false;
            }
        }
    }
    true
}

/// Rooted general maps with n edges matching the filter.
///
/// With an exact face type, phi is pinned to the canonical class
/// representative and rho sweeps all pairings; otherwise rho is pinned to
/// (1 2)(3 4)... and phi sweeps the full symmetric group. Both modes scale by
/// the pinned permutation's class size and divide by (2n-1)! labelings.
pub fn count_rooted_general(n_edges: usize, filter: &GeneralFilter) -> Result<BigUint, MapError> {
    let darts = 2 * n_edges;
    if n_edges == 0 {
        return Ok(BigUint::from(0u32));
    }
    if let CycleFilter::Exact(ft) = &filter.faces {
        if ft.sum() != darts {
            return Ok(BigUint::from(0u32));
        }
        if darts > 14 {
            return Err(MapError::TooLarge(format!(
                "{} pairings on {darts} darts",
                symcore::double_factorial_odd(n_edges)
            )));
        }
        let phi = canonical_of_type(ft);
        let phi_word: Vec<usize> = (1..=darts).map(|i| phi.apply(i) - 1).collect();
        let mut s = Scratch::default();
        let mut hits = 0u64;
        for rho in fixed_point_free_involutions(darts) {
            let rho_word: Vec<usize> = (1..=darts).map(|i| rho.apply(i) - 1).collect();
            if general_word_matches(&phi_word, |d| rho_word[d], filter, &mut s) {
                hits += 1;
            }
        }
        let labeled = BigUint::from(hits) * ft.class_size();
        return Ok(exact_div(labeled, &factorial(darts - 1)));
    }
    if darts > 10 {
        return Err(MapError::TooLarge(format!(
            "sweep of S_{darts} = {} image words; pass an exact face type instead",
            factorial(darts)
        )));
    }
    let hits = fold_image_words_sharded(
        darts,
        || (0u64, Scratch::default()),
        |(acc, s), phi_word| {
            if general_word_matches(phi_word, |d| d ^ 1, filter, s) {
                *acc += 1;
            }
        },
        |(a, s), (b, _)| (a + b, s),
    )
    .0;
    let pairing_class = Partition::new(vec![2; n_edges]).unwrap().class_size();
    let labeled = BigUint::from(hits) * pairing_class;
    Ok(exact_div(labeled, &factorial(darts - 1)))
}

fn canonical_of_type(t: &Partition) -> Perm {
    let mut cycles = Vec::new();
    let mut next = 1;
    for &p in t.parts() {
        cycles.push((next..next + p).collect::<Vec<_>>());
        next += p;
    }
    Perm::from_cycles(t.sum(), &cycles).unwrap()
}

/// Distinct rooted general maps (canonical forms) with n edges matching the
/// filter, in a deterministic order.
pub fn list_rooted_general(
    n_edges: usize,
    filter: &GeneralFilter,
) -> Result<Vec<GeneralRotation>, MapError> {
    let darts = 2 * n_edges;
    if n_edges == 0 {
        return Ok(Vec::new());
    }
    if darts > 10 {
        return Err(MapError::TooLarge(format!(
            "listing sweeps S_{darts} = {} image words",
            factorial(darts)
        )));
    }
    let set = fold_image_words_sharded(
        darts,
        || (BTreeSet::new(), Scratch::default()),
        |(set, s), phi_word| {
            if general_word_matches(phi_word, |d| d ^ 1, filter, s) {
                set.insert(canonical_words(phi_word, |d| d ^ 1));
            }
        },
        |(mut a, s), (b, _)| {
            a.extend(b);
            (a, s)
        },
    )
    .0;
    Ok(set
        .into_iter()
        .map(|(phi, rho)| {
            let phi = Perm::from_images(&phi.iter().map(|&v| v + 1).collect::<Vec<_>>()).unwrap();
            let rho = Perm::from_images(&rho.iter().map(|&v| v + 1).collect::<Vec<_>>()).unwrap();
            GeneralRotation::new(phi, rho).unwrap()
        })
        .collect())
}

/// Root-preserving canonical relabeling of a transitive pair, as words.
fn canonical_words(phi: &[usize], rho: impl Fn(usize) -> usize) -> (Vec<usize>, Vec<usize>) {
    let n = phi.len();
    let mut order = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([0usize]);
    order[0] = 0;
    let mut next = 1;
    while let Some(d) = queue.pop_front() {
        for img in [phi[d], rho(d)] {
            if order[img] == usize::MAX {
                order[img] = next;
                next += 1;
                queue.push_back(img);
            }
        }
    }
    debug_assert_eq!(next, n);
    let mut cphi = vec![0; n];
    let mut crho = vec![0; n];
    for d in 0..n {
        cphi[order[d]] = order[phi[d]];
        crho[order[d]] = order[rho(d)];
    }
    (cphi, crho)
}

/// Closed form for rooted planar maps: 2 * 3^n * C(2n, n) / ((n+1)(n+2)).
pub fn planar_map_count(n: usize) -> BigUint {
    let num = BigUint::from(2u32) * BigUint::from(3u32).pow(n as u32) * symcore::binomial(2 * n, n);
    exact_div(num, &BigUint::from((n + 1) * (n + 2)))
}

// ---- bipartite maps -------------------------------------------------------

fn bipartite_word_matches(
    black: &[usize],
    circ: &[usize],
    filter: &BipartiteFilter,
    s: &mut Scratch,
) -> Option<usize> {
    // returns l(sigma_black) on a match, for the marking weights
    if !transitive_words(&[black, circ], &mut s.seen, &mut s.stack) {
        return None;
    }
    // phi = (black * circ)^-1
    s.prod.clear();
    s.prod.extend((0..black.len()).map(|i| circ[black[i]]));
    let (prod, inv) = (&s.prod, &mut s.inv);
    invert_word(prod, inv);
    cycle_lengths_desc(inv, &mut s.seen, &mut s.lens);
    if !filter.faces_half.matches(&s.lens) {
        return None;
    }
    let f = s.lens.len();
    let vb = cycle_count(black, &mut s.seen);
    let vw = cycle_count(circ, &mut s.seen);
    if let Some(g) = filter.genus {
        let chi = (vb + vw + f) as i64 - black.len() as i64;
        if 2 - chi != 2 * g as i64 {
            return None;
        }
    }
    Some(vb)
}

/// Rooted bipartite maps with n edges. Enumerates (sigma_black, sigma_white)
/// pairs outright, or pins phi to a canonical representative when the face
/// half-type is exact.
pub fn count_rooted_bipartite(n: usize, filter: &BipartiteFilter) -> Result<BigUint, MapError> {
    count_rooted_bipartite_marked(n, filter, 0)
}

/// Same, weighting each map by C(number of black vertices, k_black): rooted
/// bipartite maps with k_black marked black vertices.
pub fn count_rooted_bipartite_marked(
    n: usize,
    filter: &BipartiteFilter,
    k_black: usize,
) -> Result<BigUint, MapError> {
    if n == 0 {
        return Ok(BigUint::from(0u32));
    }
    let mark = |vb: usize| {
        // C(vb, k) in u64; vb <= n <= small
        let mut acc = 1u64;
        for i in 0..k_black {
            if i >= vb {
                return 0;
            }
            acc = acc * (vb - i) as u64 / (i + 1) as u64;
        }
        acc
    };
    if let CycleFilter::Exact(ft) = &filter.faces_half {
        if ft.sum() != n {
            return Ok(BigUint::from(0u32));
        }
        if n > 8 {
            return Err(MapError::TooLarge(format!("sweep of S_{n} with pinned phi")));
        }
        let phi = canonical_of_type(ft);
        let phi_word: Vec<usize> = (1..=n).map(|i| phi.apply(i) - 1).collect();
        let mut phi_inv = Vec::new();
        invert_word(&phi_word, &mut phi_inv);
        let weighted = fold_image_words_sharded(
            n,
            || (0u64, Scratch::default(), Vec::new(), Vec::new()),
            |(acc, s, binv, circ), black| {
                invert_word(black, binv);
                circ.clear();
                circ.extend((0..n).map(|x| phi_inv[binv[x]]));
                if let Some(vb) = bipartite_word_matches(black, circ, filter, s) {
                    *acc += mark(vb);
                }
            },
            |(a, s, b1, b2), (b, _, _, _)| (a + b, s, b1, b2),
        )
        .0;
        let labeled = BigUint::from(weighted) * ft.class_size();
        return Ok(exact_div(labeled, &factorial(n - 1)));
    }
    if n > 6 {
        return Err(MapError::TooLarge(format!(
            "double sweep of S_{n} x S_{n}; pass an exact face half-type instead"
        )));
    }
    let weighted = fold_image_words_sharded(
        n,
        || (0u64, Scratch::default()),
        |(acc, s), black| {
            let black = black.to_vec();
            symcore::for_each_image_word(n, |circ| {
                if let Some(vb) = bipartite_word_matches(&black, circ, filter, s) {
                    *acc += mark(vb);
                }
            });
        },
        |(a, s), (b, _)| (a + b, s),
    )
    .0;
    Ok(exact_div(BigUint::from(weighted), &factorial(n - 1)))
}

// ---- constellations -------------------------------------------------------

/// Rooted m-constellations with n hyperedges whose phi cycle lengths match
/// the filter.
pub fn count_rooted_constellations(
    m: usize,
    n: usize,
    genus: Option<usize>,
    faces: &CycleFilter,
) -> Result<BigUint, MapError> {
    count_rooted_constellations_marked(m, n, genus, faces, &vec![0; m.saturating_sub(1)])
}

/// Rooted m-constellations with marks[i-1] marked vertices of color i for
/// i = 1..m-1 (the last color is never marked): each rotation system weighs
/// prod_i C(l(sigma_i), marks[i-1]).
pub fn count_rooted_constellations_marked(
    m: usize,
    n: usize,
    genus: Option<usize>,
    faces: &CycleFilter,
    marks: &[usize],
) -> Result<BigUint, MapError> {
    assert_eq!(marks.len(), m - 1, "one mark count per color 1..m-1");
    if n == 0 {
        return Ok(BigUint::from(0u32));
    }
    let mut cost = 1f64;
    for _ in 0..m {
        cost *= factorial_f64(n);
    }
    if cost > 2e7 {
        return Err(MapError::TooLarge(format!(
            "constellation sweep of (n!)^m = {cost:.3e} tuples"
        )));
    }
    // depth-first over the m sigma words
    let mut sigmas: Vec<Vec<usize>> = Vec::new();
    let mut weighted = 0u128;
    let mut s = Scratch::default();
    sweep_sigmas(m, n, &mut sigmas, &mut |sigmas: &[Vec<usize>]| {
        if let Some(w) = constellation_weight(sigmas, n, genus, faces, marks, &mut s) {
            weighted += w;
        }
    });
    Ok(exact_div(BigUint::from(weighted), &factorial(n - 1)))
}

fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product::<f64>().max(1.0)
}

fn sweep_sigmas(left: usize, n: usize, acc: &mut Vec<Vec<usize>>, f: &mut impl FnMut(&[Vec<usize>])) {
    if left == 0 {
        f(acc);
        return;
    }
    symcore::for_each_image_word(n, |w| {
        acc.push(w.to_vec());
        sweep_sigmas(left - 1, n, acc, f);
        acc.pop();
    });
}

fn constellation_weight(
    sigmas: &[Vec<usize>],
    n: usize,
    genus: Option<usize>,
    faces: &CycleFilter,
    marks: &[usize],
    s: &mut Scratch,
) -> Option<u128> {
    let words: Vec<&[usize]> = sigmas.iter().map(|w| w.as_slice()).collect();
    if !transitive_words(&words, &mut s.seen, &mut s.stack) {
        return None;
    }
    // phi = (sigma_1 ... sigma_m)^-1
    s.prod.clear();
    s.prod.extend(0..n);
    for w in sigmas {
        for x in s.prod.iter_mut() {
            *x = w[*x];
        }
    }
    let (prod, inv) = (&s.prod, &mut s.inv);
    invert_word(prod, inv);
    cycle_lengths_desc(inv, &mut s.seen, &mut s.lens);
    if !faces.matches(&s.lens) {
        return None;
    }
    let f = s.lens.len();
    let vs: Vec<usize> = sigmas.iter().map(|w| cycle_count(w, &mut s.seen)).collect();
    if let Some(g) = genus {
        let m = sigmas.len();
        let chi = vs.iter().sum::<usize>() as i64 + f as i64 + n as i64 - (m * n) as i64;
        if 2 - chi != 2 * g as i64 {
            return None;
        }
    }
    let mut weight = 1u128;
    for (i, &k) in marks.iter().enumerate() {
        weight *= binom_u128(vs[i], k)?;
    }
    Some(weight)
}

fn binom_u128(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return None; // weight zero: drop the term
    }
    let mut acc = 1u128;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    Some(acc)
}

// ---- hypermaps ------------------------------------------------------------

/// Rooted m-hypermaps with n hyperedges: sigma_bullet pinned to block
/// m-cycles, sigma_circ swept over S_{mn}. The filter applies to hyperface
/// degrees divided by m (sigma_circ cycle lengths / m).
pub fn count_rooted_hypermaps(
    m: usize,
    n: usize,
    genus: Option<usize>,
    hyperfaces_over_m: &CycleFilter,
) -> Result<BigUint, MapError> {
    if n == 0 {
        return Ok(BigUint::from(0u32));
    }
    let deg = m * n;
    if deg > 10 {
        return Err(MapError::TooLarge(format!(
            "hypermap sweep of S_{deg} = {} image words",
            factorial(deg)
        )));
    }
    let bullet: Vec<usize> = {
        let b = canonical_bullet(m, n);
        (1..=deg).map(|i| b.apply(i) - 1).collect()
    };
    let hits = fold_image_words_sharded(
        deg,
        || (0u64, Scratch::default()),
        |(acc, s), circ| {
            cycle_lengths_desc(circ, &mut s.seen, &mut s.lens);
            if s.lens.iter().any(|l| l % m != 0) {
                return;
            }
            let over_m: Vec<usize> = s.lens.iter().map(|l| l / m).collect();
            if !hyperfaces_over_m.matches(&over_m) {
                return;
            }
            let faces = s.lens.len();
            if !transitive_words(&[circ, &bullet], &mut s.seen, &mut s.stack) {
                return;
            }
            if let Some(g) = genus {
                // phi = (circ * bullet)^-1; cycle count equals the product's
                s.prod.clear();
                s.prod.extend((0..deg).map(|i| bullet[circ[i]]));
                let verts = {
                    let prod: &[usize] = &s.prod;
                    cycle_count(prod, &mut s.seen)
                };
                let chi = faces as i64 + verts as i64 + n as i64 - deg as i64;
                if 2 - chi != 2 * g as i64 {
                    return;
                }
            }
            *acc += 1;
        },
        |(a, s), (b, _)| (a + b, s),
    )
    .0;
    let per_map = factorial(n - 1) * BigUint::from(m).pow(n as u32 - 1);
    Ok(exact_div(BigUint::from(hits), &per_map))
}

// ---- censuses for the series layer ----------------------------------------

/// Rooted planar-or-higher censuses keyed by (outer face half-degree,
/// internal face half-degrees): outer is the phi-cycle through the root
/// label 1. Counts are rooted maps (labeled / (n-1)!).
pub fn census_bipartite(
    n: usize,
    genus: usize,
) -> Result<BTreeMap<(usize, Partition), BigUint>, MapError> {
    if n > 6 {
        return Err(MapError::TooLarge(format!("double sweep of S_{n} x S_{n}")));
    }
    let labeled = fold_image_words_sharded(
        n,
        || (BTreeMap::<(usize, Partition), u64>::new(), Scratch::default()),
        |(acc, s), black| {
            let black = black.to_vec();
            symcore::for_each_image_word(n, |circ| {
                if let Some(key) = census_key(&[&black, circ], n, 2, genus, s) {
                    *acc.entry(key).or_insert(0) += 1;
                }
            });
        },
        |(mut a, s), (b, _)| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            (a, s)
        },
    )
    .0;
    divide_census(labeled, &factorial(n - 1))
}

/// Same census for m-constellations.
pub fn census_constellation(
    m: usize,
    n: usize,
    genus: usize,
) -> Result<BTreeMap<(usize, Partition), BigUint>, MapError> {
    let mut cost = 1f64;
    for _ in 0..m {
        cost *= factorial_f64(n);
    }
    if cost > 2e7 {
        return Err(MapError::TooLarge(format!(
            "constellation sweep of (n!)^m = {cost:.3e} tuples"
        )));
    }
    let mut sigmas: Vec<Vec<usize>> = Vec::new();
    let mut acc: BTreeMap<(usize, Partition), u64> = BTreeMap::new();
    let mut s = Scratch::default();
    sweep_sigmas(m, n, &mut sigmas, &mut |sigmas: &[Vec<usize>]| {
        let words: Vec<&[usize]> = sigmas.iter().map(|w| w.as_slice()).collect();
        if let Some(key) = census_key(&words, n, m, genus, &mut s) {
            *acc.entry(key).or_insert(0) += 1;
        }
    });
    divide_census(acc, &factorial(n - 1))
}

/// On a transitive genus match, the census key (outer half-degree through
/// label 1, partition of the remaining phi cycle lengths).
fn census_key(
    sigma_words: &[&[usize]],
    n: usize,
    m: usize,
    genus: usize,
    s: &mut Scratch,
) -> Option<(usize, Partition)> {
    if !transitive_words(sigma_words, &mut s.seen, &mut s.stack) {
        return None;
    }
    s.prod.clear();
    s.prod.extend(0..n);
    for w in sigma_words {
        for x in s.prod.iter_mut() {
            *x = w[*x];
        }
    }
    let (prod, inv) = (&s.prod, &mut s.inv);
    invert_word(prod, inv);
    let v: usize = sigma_words.iter().map(|w| cycle_count(w, &mut s.seen)).sum();
    // phi cycles, tracking which one holds the root
    s.vertex_of.clear();
    s.vertex_of.resize(n, usize::MAX);
    let mut outer = 0;
    let mut internal = Vec::new();
    let mut fcount = 0;
    for start in 0..n {
        if s.vertex_of[start] != usize::MAX {
            continue;
        }
        fcount += 1;
        let mut len = 0;
        let mut cur = start;
        let mut holds_root = false;
        while s.vertex_of[cur] == usize::MAX {
            s.vertex_of[cur] = 0;
            holds_root |= cur == 0;
            cur = inv[cur];
            len += 1;
        }
        if holds_root {
            outer = len;
        } else {
            internal.push(len);
        }
    }
    let chi = v as i64 + fcount as i64 + n as i64 - (m * n) as i64;
    if 2 - chi != 2 * genus as i64 {
        return None;
    }
    Some((outer, Partition::from_unsorted(internal)))
}

fn divide_census(
    labeled: BTreeMap<(usize, Partition), u64>,
    by: &BigUint,
) -> Result<BTreeMap<(usize, Partition), BigUint>, MapError> {
    Ok(labeled
        .into_iter()
        .map(|(k, v)| (k, exact_div(BigUint::from(v), by)))
        .collect())
}

/// Labeled transitive (sigma_black, sigma_white) pairs of the given genus,
/// grouped by the full cycle type of phi. No root, no division: callers
/// divide by n! for the exponential generating function.
pub fn bipartite_unrooted_census(
    n: usize,
    genus: usize,
) -> Result<BTreeMap<Partition, BigUint>, MapError> {
    if n > 6 {
        return Err(MapError::TooLarge(format!("double sweep of S_{n} x S_{n}")));
    }
    let labeled = fold_image_words_sharded(
        n,
        || (BTreeMap::<Partition, u64>::new(), Scratch::default()),
        |(acc, s), black| {
            let black = black.to_vec();
            symcore::for_each_image_word(n, |circ| {
                if !transitive_words(&[&black, circ], &mut s.seen, &mut s.stack) {
                    return;
                }
                s.prod.clear();
                s.prod.extend((0..n).map(|i| circ[black[i]]));
                let (prod, inv) = (&s.prod, &mut s.inv);
                invert_word(prod, inv);
                cycle_lengths_desc(inv, &mut s.seen, &mut s.lens);
                let f = s.lens.len();
                let v = cycle_count(&black, &mut s.seen) + cycle_count(circ, &mut s.seen);
                let chi = (v + f) as i64 - n as i64;
                if 2 - chi == 2 * genus as i64 {
                    let key = Partition::new(s.lens.clone()).unwrap();
                    *acc.entry(key).or_insert(0) += 1;
                }
            });
        },
        |(mut a, s), (b, _)| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            (a, s)
        },
    )
    .0;
    Ok(labeled
        .into_iter()
        .map(|(k, v)| (k, BigUint::from(v)))
        .collect())
}
