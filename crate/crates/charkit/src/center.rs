//! The center of the symmetric group algebra in the class-sum basis, with two
//! independent product routes:
//!
//! * convolution, via structure constants counted from explicit permutation
//!   pairs, and
//! * the spectral route, conjugating to the basis of orthogonal idempotents
//!   F_theta where multiplication is pointwise.
//!
//! On top of the algebra sit the Jucys-Murphy generating product
//! Pi_n(t) = prod_k (1 + t J_k) and class-level Hurwitz counts: powers of the
//! transposition class sum for the classical count, truncated inversion of
//! Pi_n(-t) for the monotone count.

use crate::{expect_integer, rat_int, CharError};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use symcore::{factorial, partitions_of, Partition, Perm};

/// Largest degree for which we materialize the full structure-constant table.
const MAX_ALGEBRA_DEGREE: usize = 8;

pub struct ClassAlgebra {
    n: usize,
    classes: Vec<Partition>,
    index: BTreeMap<Vec<usize>, usize>,
    class_sizes: Vec<BigUint>,
    /// table[i][k][j]: coefficient of K_j in K_i K_k
    table: Vec<Vec<Vec<BigUint>>>,
    /// chi[theta][class], both in `partitions_of(n)` order
    chi: Vec<Vec<BigInt>>,
    dims: Vec<BigInt>,
}

fn canonical_rep(lambda: &Partition) -> Perm {
    let mut cycles = Vec::new();
    let mut next = 1usize;
    for &part in lambda.parts() {
        cycles.push((next..next + part).collect::<Vec<_>>());
        next += part;
    }
    Perm::from_cycles(lambda.sum(), &cycles).expect("consecutive cycles are disjoint")
}

impl ClassAlgebra {
    pub fn new(n: usize) -> Result<Self, CharError> {
        if n == 0 || n > MAX_ALGEBRA_DEGREE {
            return Err(CharError::BadArgument(format!(
                "class algebra degree must be in 1..={MAX_ALGEBRA_DEGREE}, got {n}"
            )));
        }
        let classes = partitions_of(n);
        let index: BTreeMap<Vec<usize>, usize> = classes
            .iter()
            .enumerate()
            .map(|(i, p)| (p.parts().to_vec(), i))
            .collect();
        let class_sizes: Vec<BigUint> = classes.iter().map(|p| p.class_size()).collect();
        let reps: Vec<Perm> = classes.iter().map(canonical_rep).collect();

        // bucket all of S_n by cycle type once
        let mut by_class: Vec<Vec<Perm>> = vec![Vec::new(); classes.len()];
        for g in symcore::perms_of_degree(n) {
            let i = index[&g.cycle_type().parts().to_vec()];
            by_class[i].push(g);
        }

        // c^j_{ik} = #{ a in Cl_i : a^{-1} rep_j in Cl_k }, counted by sweeping
        // a over Cl_i for each target class j.
        let m = classes.len();
        let mut table = vec![vec![vec![BigUint::zero(); m]; m]; m];
        for i in 0..m {
            for a in &by_class[i] {
                let ainv = a.inverse();
                for (j, rep) in reps.iter().enumerate() {
                    let b = ainv.compose(rep).expect("same degree");
                    let k = index[&b.cycle_type().parts().to_vec()];
                    table[i][k][j] += 1u32;
                }
            }
        }

        let chi: Vec<Vec<BigInt>> = classes
            .iter()
            .map(|theta| {
                classes
                    .iter()
                    .map(|mu| crate::mn_character(theta, mu).expect("sizes match"))
                    .collect()
            })
            .collect();
        let ones = index[&vec![1; n]];
        let dims: Vec<BigInt> = chi.iter().map(|row| row[ones].clone()).collect();

        Ok(ClassAlgebra { n, classes, index, class_sizes, table, chi, dims })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn class_index(&self, lambda: &Partition) -> Result<usize, CharError> {
        self.index
            .get(&lambda.parts().to_vec())
            .copied()
            .ok_or_else(|| CharError::DegreeMismatch(self.n, lambda.sum()))
    }

    pub fn product_convolution(
        &self,
        a: &CenterElement,
        b: &CenterElement,
    ) -> Result<CenterElement, CharError> {
        self.check(a)?;
        self.check(b)?;
        let m = self.classes.len();
        let mut out = vec![BigRational::zero(); m];
        for (la, ca) in &a.coeffs {
            let i = self.class_index(la)?;
            for (mu, cb) in &b.coeffs {
                let k = self.class_index(mu)?;
                let w = ca * cb;
                for j in 0..m {
                    let c = &self.table[i][k][j];
                    if !c.is_zero() {
                        out[j] += &w * rat_int(&BigInt::from(c.clone()));
                    }
                }
            }
        }
        Ok(self.from_dense(out))
    }

    /// Central character omega_theta(K_la) = |Cl(la)| chi^theta_la / f^theta;
    /// the eigenvalue of K_la on the theta-isotypic block.
    fn eigenvalue(&self, class_idx: usize, theta_idx: usize) -> BigRational {
        let size = rat_int(&BigInt::from(self.class_sizes[class_idx].clone()));
        size * rat_int(&self.chi[theta_idx][class_idx]) / rat_int(&self.dims[theta_idx])
    }

    pub fn to_spectral(&self, a: &CenterElement) -> Result<Vec<BigRational>, CharError> {
        self.check(a)?;
        let m = self.classes.len();
        let mut out = vec![BigRational::zero(); m];
        for (la, c) in &a.coeffs {
            let i = self.class_index(la)?;
            for theta in 0..m {
                out[theta] += c * self.eigenvalue(i, theta);
            }
        }
        Ok(out)
    }

    pub fn from_spectral(&self, hat: &[BigRational]) -> CenterElement {
        let m = self.classes.len();
        assert_eq!(hat.len(), m);
        let nfact = rat_int(&BigInt::from(factorial(self.n)));
        let mut out = vec![BigRational::zero(); m];
        for (theta, e) in hat.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let scale = e * rat_int(&self.dims[theta]) / &nfact;
            for j in 0..m {
                out[j] += &scale * rat_int(&self.chi[theta][j]);
            }
        }
        self.from_dense(out)
    }

    pub fn product_characters(
        &self,
        a: &CenterElement,
        b: &CenterElement,
    ) -> Result<CenterElement, CharError> {
        let ha = self.to_spectral(a)?;
        let hb = self.to_spectral(b)?;
        let prod: Vec<BigRational> = ha.iter().zip(&hb).map(|(x, y)| x * y).collect();
        Ok(self.from_spectral(&prod))
    }

    /// The orthogonal idempotent F_theta = (f^theta / n!) sum_la chi^theta_la K_la.
    pub fn orthogonal_idempotent(&self, theta_idx: usize) -> CenterElement {
        let nfact = rat_int(&BigInt::from(factorial(self.n)));
        let scale = rat_int(&self.dims[theta_idx]) / nfact;
        let dense = (0..self.classes.len())
            .map(|j| &scale * rat_int(&self.chi[theta_idx][j]))
            .collect();
        self.from_dense(dense)
    }

    fn from_dense(&self, dense: Vec<BigRational>) -> CenterElement {
        let coeffs = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (self.classes[j].clone(), c))
            .collect();
        CenterElement { n: self.n, coeffs }
    }

    fn check(&self, a: &CenterElement) -> Result<(), CharError> {
        if a.n != self.n {
            return Err(CharError::DegreeMismatch(self.n, a.n));
        }
        Ok(())
    }
}

/// An element of the center of QS_n, stored on the class-sum basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterElement {
    n: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl CenterElement {
    pub fn zero(n: usize) -> Self {
        CenterElement { n, coeffs: BTreeMap::new() }
    }

    pub fn class_sum(lambda: &Partition) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda.clone(), BigRational::one());
        CenterElement { n: lambda.sum(), coeffs }
    }

    pub fn identity(n: usize) -> Self {
        Self::class_sum(&Partition::new(vec![1; n]).expect("column shape"))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigRational> {
        &self.coeffs
    }

    pub fn add_scaled(&mut self, other: &CenterElement, scale: &BigRational) {
        assert_eq!(self.n, other.n, "degree mismatch");
        for (la, c) in &other.coeffs {
            let entry = self.coeffs.entry(la.clone()).or_insert_with(BigRational::zero);
            *entry += c * scale;
        }
        self.coeffs.retain(|_, c| !c.is_zero());
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Coefficients of Pi_n(t) = prod_{k=1}^{n} (id + t J_k) as central elements,
/// index d holding the coefficient of t^d. The product is computed in the
/// full group algebra; centrality of each layer is checked by verifying the
/// coefficient is constant on every conjugacy class before regrouping.
pub fn jm_pi(n: usize) -> Result<Vec<CenterElement>, CharError> {
    if n == 0 || n > 7 {
        return Err(CharError::BadArgument(format!(
            "group algebra sweep supports degree 1..=7, got {n}"
        )));
    }
    let perms: Vec<Perm> = symcore::perms_of_degree(n).collect();
    let index: BTreeMap<Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, g)| (g.images(), i)).collect();
    let id_idx = index[&(1..=n).collect::<Vec<_>>()];

    // poly[d][g] = coefficient of t^d at the group element g
    let mut poly: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); perms.len()]];
    poly[0][id_idx] = BigInt::one();
    for k in 2..=n {
        let mut next: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); perms.len()]; poly.len() + 1];
        for (d, layer) in poly.iter().enumerate() {
            for (gi, c) in layer.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                next[d][gi] += c;
                // right-multiply g by (i, k): post-compose images with the swap
                let images = perms[gi].images();
                for i in 1..k {
                    let swapped: Vec<usize> = images
                        .iter()
                        .map(|&v| {
                            if v == i {
                                k
                            } else if v == k {
                                i
                            } else {
                                v
                            }
                        })
                        .collect();
                    next[d + 1][index[&swapped]] += c;
                }
            }
        }
        poly = next;
    }

    // regroup each layer by cycle type, insisting on class-constant coefficients
    let classes = partitions_of(n);
    let class_of: Vec<usize> = perms
        .iter()
        .map(|g| {
            let t = g.cycle_type();
            classes.iter().position(|p| *p == t).expect("type is a partition of n")
        })
        .collect();
    let mut out = Vec::new();
    for layer in &poly {
        let mut per_class: Vec<Option<BigInt>> = vec![None; classes.len()];
        for (gi, c) in layer.iter().enumerate() {
            let slot = &mut per_class[class_of[gi]];
            match slot {
                None => *slot = Some(c.clone()),
                Some(prev) => assert_eq!(prev, c, "layer is not central"),
            }
        }
        let mut elem = CenterElement::zero(n);
        for (j, v) in per_class.into_iter().enumerate() {
            let v = v.unwrap_or_else(BigInt::zero);
            if !v.is_zero() {
                elem.add_scaled(&CenterElement::class_sum(&classes[j]), &rat_int(&v));
            }
        }
        out.push(elem);
    }
    Ok(out)
}

/// Number of r-tuples of transpositions multiplying (left to right) to a
/// fixed permutation of cycle type lambda: the K_lambda coefficient of the
/// r-th power of the transposition class sum.
pub fn classical_hurwitz_class(
    lambda: &Partition,
    r: usize,
    algebra: &ClassAlgebra,
) -> Result<BigUint, CharError> {
    let n = algebra.degree();
    if lambda.sum() != n {
        return Err(CharError::DegreeMismatch(n, lambda.sum()));
    }
    if n < 2 {
        // no transpositions exist; only the empty product survives
        let hit = r == 0 && lambda.parts().iter().all(|&p| p == 1);
        return Ok(if hit { BigUint::one() } else { BigUint::zero() });
    }
    let mut tparts = vec![2usize];
    tparts.extend(std::iter::repeat(1).take(n - 2));
    let k2 = CenterElement::class_sum(&Partition::new(tparts).expect("transposition type"));
    let mut acc = CenterElement::identity(n);
    for _ in 0..r {
        acc = algebra.product_convolution(&acc, &k2)?;
    }
    let c = acc.coeff(lambda);
    let c = expect_integer(&c, "transposition power coefficient");
    assert!(!c.is_negative());
    Ok(c.to_biguint().expect("nonnegative"))
}

/// Number of monotone r-tuples (larger moved points weakly increasing) of
/// transpositions multiplying to a fixed permutation of type lambda: the
/// (t^r, K_lambda) coefficient of Pi_n(-t)^{-1}.
pub fn monotone_hurwitz_class(
    lambda: &Partition,
    r: usize,
    algebra: &ClassAlgebra,
) -> Result<BigUint, CharError> {
    let n = algebra.degree();
    if lambda.sum() != n {
        return Err(CharError::DegreeMismatch(n, lambda.sum()));
    }
    let pi = jm_pi(n)?;
    // layers of Pi_n(-t): sign-twisted layers of Pi_n(t)
    let signed: Vec<CenterElement> = pi
        .iter()
        .enumerate()
        .map(|(d, e)| {
            let mut s = CenterElement::zero(n);
            let sign = if d % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            s.add_scaled(e, &sign);
            s
        })
        .collect();
    // invert the unit-constant-term series mod t^{r+1}
    let mut inv: Vec<CenterElement> = vec![CenterElement::identity(n)];
    for d in 1..=r {
        let mut layer = CenterElement::zero(n);
        for j in 1..=d.min(signed.len() - 1) {
            let prod = algebra.product_convolution(&signed[j], &inv[d - j])?;
            layer.add_scaled(&prod, &(-BigRational::one()));
        }
        inv.push(layer);
    }
    let c = inv[r].coeff(lambda);
    let c = expect_integer(&c, "monotone inverse coefficient");
    assert!(!c.is_negative(), "monotone count must be nonnegative");
    Ok(c.to_biguint().expect("nonnegative"))
}

/// Direct tuple sweep: count r-tuples of transpositions in S_n with product
/// equal to the canonical representative of Cl(lambda), optionally restricted
/// to monotone tuples. Intended for small n and r as an independent check.
pub fn hurwitz_brute_force(lambda: &Partition, r: usize, monotone: bool) -> BigUint {
    let n = lambda.sum();
    let target = canonical_rep(lambda);
    let mut transpositions = Vec::new();
    for b in 2..=n {
        for a in 1..b {
            transpositions.push((Perm::from_cycles(n, &[vec![a, b]]).expect("transposition"), b));
        }
    }
    if r == 0 {
        return if target.is_identity() { BigUint::one() } else { BigUint::zero() };
    }
    if transpositions.is_empty() {
        return BigUint::zero();
    }
    let mut count = BigUint::zero();
    let mut stack: Vec<usize> = Vec::new();
    // iterative odometer over transposition indices
    loop {
        if stack.len() == r {
            let mut acc = Perm::identity(n);
            let mut ok = true;
            let mut last_b = 0usize;
            for &ti in &stack {
                let (t, b) = &transpositions[ti];
                if monotone && *b < last_b {
                    ok = false;
                    break;
                }
                last_b = *b;
                acc = acc.compose(t).expect("same degree");
            }
            if ok && acc == target {
                count += 1u32;
            }
            // advance
            loop {
                match stack.pop() {
                    None => return count,
                    Some(i) => {
                        if i + 1 < transpositions.len() {
                            stack.push(i + 1);
                            break;
                        }
                    }
                }
            }
        } else {
            stack.push(0);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transposition_square_in_s3() {
        let alg = ClassAlgebra::new(3).unwrap();
        let k2 = CenterElement::class_sum(&p(&[2, 1]));
        let sq = alg.product_convolution(&k2, &k2).unwrap();
        assert_eq!(sq.coeff(&p(&[1, 1, 1])), rat_int(&BigInt::from(3)));
        assert_eq!(sq.coeff(&p(&[3])), rat_int(&BigInt::from(3)));
        assert_eq!(sq.coeff(&p(&[2, 1])), BigRational::zero());
    }

    #[test]
    fn monotone_pair_count_for_three_cycle() {
        let alg = ClassAlgebra::new(3).unwrap();
        assert_eq!(monotone_hurwitz_class(&p(&[3]), 2, &alg).unwrap(), BigUint::from(2u32));
        assert_eq!(hurwitz_brute_force(&p(&[3]), 2, true), BigUint::from(2u32));
        assert_eq!(classical_hurwitz_class(&p(&[3]), 2, &alg).unwrap(), BigUint::from(3u32));
        assert_eq!(hurwitz_brute_force(&p(&[3]), 2, false), BigUint::from(3u32));
    }

    #[test]
    fn empty_product_conventions() {
        assert_eq!(hurwitz_brute_force(&p(&[1, 1]), 0, false), BigUint::one());
        assert_eq!(hurwitz_brute_force(&p(&[2]), 0, false), BigUint::zero());
    }
}
