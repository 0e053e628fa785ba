//! The finite lattice set `S = {0, p_1 e_1, ..., p_{n-1} e_{n-1}}` in `Z^n`
//! and the group `G` of affine lattice maps that preserve it.
//!
//! `G` consists of the matrices equal to the identity except for the last
//! column `(a_1, ..., a_{n-1}, ±1)`, with zero translation. The bounded
//! brute-force search in [`stabilizer_bruteforce`] enumerates every
//! `(A, b)` with entries in a box and checks that the maps fixing `S` are
//! exactly the `G`-form ones.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of `(A, b)` pairs examined by the brute force.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000_000;

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<i64> {
    if count == 0 {
        return Vec::new();
    }
    // p_k < k (ln k + ln ln k) for k >= 6
    let k = count.max(6) as f64;
    let limit = (k * (k.ln() + k.ln().ln())).ceil() as usize + 1;
    let mut sieve = vec![true; limit + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= limit {
        if sieve[i] {
            for j in (i * i..=limit).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve.iter().enumerate().filter(|(_, &p)| p).map(|(i, _)| i as i64).take(count).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSet {
    pub n: usize,
    pub points: Vec<Vec<i64>>,
}

impl LatticeSet {
    pub fn contains(&self, v: &[i64]) -> bool {
        self.points.iter().any(|p| p == v)
    }
}

pub fn build_s(n: usize) -> Result<LatticeSet> {
    if n < 3 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut points = vec![vec![0; n]];
    for (i, p) in first_primes(n - 1).into_iter().enumerate() {
        let mut v = vec![0; n];
        v[i] = p;
        points.push(v);
    }
    Ok(LatticeSet { n, points })
}

/// `x -> A x + b` with `A` in GL_n(Z).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AffineLatticeMap {
    pub matrix: Vec<Vec<i64>>,
    pub translation: Vec<i64>,
}

impl AffineLatticeMap {
    pub fn identity(n: usize) -> Self {
        let matrix = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        AffineLatticeMap { matrix, translation: vec![0; n] }
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn determinant(&self) -> i64 {
        determinant(&self.matrix)
    }

    pub fn apply(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: v.len() });
        }
        Ok(self
            .matrix
            .iter()
            .zip(&self.translation)
            .map(|(row, b)| row.iter().zip(v).map(|(a, x)| a * x).sum::<i64>() + b)
            .collect())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffineLatticeMap) -> Result<AffineLatticeMap> {
        let n = self.dim();
        if other.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, got: other.dim() });
        }
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum()).collect())
            .collect();
        let translation = self.apply(&other.translation)?;
        Ok(AffineLatticeMap { matrix, translation })
    }

    /// The `G` element this map equals, if it has `G`-form.
    pub fn as_g_element(&self) -> Option<GElement> {
        let n = self.dim();
        if self.translation.iter().any(|&b| b != 0) {
            return None;
        }
        for i in 0..n {
            for j in 0..n - 1 {
                if self.matrix[i][j] != i64::from(i == j) {
                    return None;
                }
            }
        }
        let eps = self.matrix[n - 1][n - 1];
        if eps != 1 && eps != -1 {
            return None;
        }
        let a = (0..n - 1).map(|i| self.matrix[i][n - 1]).collect();
        Some(GElement { a, eps: eps as i8 })
    }
}

/// Exact integer determinant by fraction-free (Bareiss) elimination.
pub fn determinant(matrix: &[Vec<i64>]) -> i64 {
    let n = matrix.len();
    let mut m: Vec<Vec<i128>> = matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        return 1;
    }
    (sign * m[n - 1][n - 1]) as i64
}

/// An element of `G`: identity matrix with last column `(a, eps)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GElement {
    pub a: Vec<i64>,
    pub eps: i8,
}

impl GElement {
    pub fn new(a: Vec<i64>, eps: i8) -> Result<Self> {
        if eps != 1 && eps != -1 {
            return Err(Error::InvalidArgument(format!("eps must be ±1, got {eps}")));
        }
        Ok(GElement { a, eps })
    }

    pub fn identity(n: usize) -> Self {
        GElement { a: vec![0; n - 1], eps: 1 }
    }

    /// Dimension `n` of the ambient lattice.
    pub fn dim(&self) -> usize {
        self.a.len() + 1
    }

    pub fn inverse(&self) -> GElement {
        let e = i64::from(self.eps);
        GElement { a: self.a.iter().map(|&x| -e * x).collect(), eps: self.eps }
    }
}

pub fn g_to_affine(g: &GElement) -> AffineLatticeMap {
    let n = g.dim();
    let mut map = AffineLatticeMap::identity(n);
    for (i, &a) in g.a.iter().enumerate() {
        map.matrix[i][n - 1] = a;
    }
    map.matrix[n - 1][n - 1] = i64::from(g.eps);
    map
}

pub fn apply(map: &AffineLatticeMap, v: &[i64]) -> Result<Vec<i64>> {
    map.apply(v)
}

/// True iff `map` permutes the points of `s`.
pub fn maps_s_to_s(map: &AffineLatticeMap, s: &LatticeSet) -> Result<bool> {
    if map.dim() != s.n {
        return Err(Error::DimensionMismatch { expected: s.n, got: map.dim() });
    }
    let mut images = Vec::with_capacity(s.points.len());
    for p in &s.points {
        let q = map.apply(p)?;
        if !s.contains(&q) || images.contains(&q) {
            return Ok(false);
        }
        images.push(q);
    }
    Ok(true)
}

pub fn stabilizer_bruteforce(n: usize, entry_bound: i64) -> Result<Vec<AffineLatticeMap>> {
    stabilizer_bruteforce_capped(n, entry_bound, DEFAULT_ENUMERATION_CAP)
}

/// All `(A, b)` with entries in `[-entry_bound, entry_bound]`, `det A = ±1`
/// and `A S + b = S`, in lexicographic order of the flattened entries.
///
/// Fails with [`Error::StabilizerOutsideG`] if any such map is not of
/// `G`-form.
pub fn stabilizer_bruteforce_capped(n: usize, entry_bound: i64, cap: u64) -> Result<Vec<AffineLatticeMap>> {
    let s = build_s(n)?;
    if entry_bound < 1 {
        return Err(Error::InvalidArgument("entry_bound must be at least 1".into()));
    }
    let width = (2 * entry_bound + 1) as u64;
    let matrix_count = checked_pow(width, n * n);
    let total = matrix_count.and_then(|m| checked_pow(width, n).and_then(|t| m.checked_mul(t)));
    let (matrix_count, translation_count) = match total {
        Some(t) if t <= cap => (matrix_count.expect("checked"), checked_pow(width, n).expect("checked")),
        _ => return Err(Error::cap(format!("stabilizer enumeration for n={n}, bound={entry_bound}"), cap)),
    };

    let decode = |mut index: u64, len: usize| -> Vec<i64> {
        let mut out = vec![0i64; len];
        for slot in out.iter_mut().rev() {
            *slot = (index % width) as i64 - entry_bound;
            index /= width;
        }
        out
    };

    let mut found: Vec<AffineLatticeMap> = (0..matrix_count)
        .into_par_iter()
        .flat_map_iter(|mi| {
            let flat = decode(mi, n * n);
            let matrix: Vec<Vec<i64>> = flat.chunks(n).map(<[i64]>::to_vec).collect();
            let det = determinant(&matrix);
            let candidates = if det == 1 || det == -1 { translation_count } else { 0 };
            let s = &s;
            (0..candidates).filter_map(move |ti| {
                let map = AffineLatticeMap { matrix: matrix.clone(), translation: decode(ti, n) };
                maps_s_to_s(&map, s).expect("dimensions agree").then_some(map)
            })
        })
        .collect();
    found.sort();

    if let Some(stray) = found.iter().find(|m| m.as_g_element().is_none()) {
        return Err(Error::StabilizerOutsideG(format!("{stray:?}")));
    }
    Ok(found)
}

fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    (0..exp).try_fold(1u64, |acc, _| acc.checked_mul(base))
}

/// `{g_to_affine(g) : |a_i| <= bound, eps = ±1}` in the same order as
/// [`stabilizer_bruteforce`].
pub fn g_elements_in_box(n: usize, bound: i64) -> Vec<AffineLatticeMap> {
    let mut out = Vec::new();
    let width = (2 * bound + 1) as usize;
    let count = width.pow((n - 1) as u32);
    for eps in [-1i8, 1] {
        for idx in 0..count {
            let mut a = vec![0i64; n - 1];
            let mut k = idx;
            for slot in a.iter_mut().rev() {
                *slot = (k % width) as i64 - bound;
                k /= width;
            }
            out.push(g_to_affine(&GElement { a, eps }));
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(first_primes(10), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(first_primes(1), vec![2]);
        assert_eq!(first_primes(100)[99], 541);
    }

    #[test]
    fn build_s_examples() {
        assert_eq!(build_s(3).unwrap().points, vec![vec![0, 0, 0], vec![2, 0, 0], vec![0, 3, 0]]);
        assert_eq!(
            build_s(4).unwrap().points,
            vec![vec![0, 0, 0, 0], vec![2, 0, 0, 0], vec![0, 3, 0, 0], vec![0, 0, 5, 0]]
        );
        assert_eq!(build_s(2).unwrap_err(), Error::DimensionTooSmall(2));
    }

    #[test]
    fn g_to_affine_examples() {
        assert_eq!(g_to_affine(&GElement::identity(3)), AffineLatticeMap::identity(3));
        let m = g_to_affine(&GElement::new(vec![5, 0], 1).unwrap());
        assert_eq!(m.matrix.iter().map(|r| r[2]).collect::<Vec<_>>(), vec![5, 0, 1]);
        assert_eq!(g_to_affine(&GElement::new(vec![4, -7], -1).unwrap()).determinant(), -1);
        assert!(GElement::new(vec![0, 0], 2).is_err());
    }

    #[test]
    fn apply_examples() {
        let id = AffineLatticeMap::identity(3);
        assert_eq!(id.apply(&[2, 0, 0]).unwrap(), vec![2, 0, 0]);
        let g = g_to_affine(&GElement::new(vec![5, 0], 1).unwrap());
        assert_eq!(g.apply(&[0, 0, 1]).unwrap(), vec![5, 0, 1]);
        let s = build_s(3).unwrap();
        for p in &s.points {
            assert_eq!(&g.apply(p).unwrap(), p);
        }
        assert_eq!(g.apply(&[1, 2]).unwrap_err(), Error::DimensionMismatch { expected: 3, got: 2 });
    }

    #[test]
    fn maps_s_to_s_examples() {
        let s = build_s(3).unwrap();
        let g = g_to_affine(&GElement::new(vec![-3, 8], -1).unwrap());
        assert!(maps_s_to_s(&g, &s).unwrap());
        let shift = AffineLatticeMap { translation: vec![1, 0, 0], ..AffineLatticeMap::identity(3) };
        assert!(!maps_s_to_s(&shift, &s).unwrap());
        let swap = AffineLatticeMap {
            matrix: vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
            translation: vec![0; 3],
        };
        assert!(!maps_s_to_s(&swap, &s).unwrap());
        assert!(maps_s_to_s(&AffineLatticeMap::identity(4), &s).is_err());
    }

    #[test]
    fn determinant_matches_cofactor_expansion() {
        let m = vec![vec![2, -1, 0], vec![1, 3, 2], vec![0, 5, -4]];
        // 2(3*-4 - 2*5) - (-1)(1*-4 - 0) + 0 = -44 - 4
        assert_eq!(determinant(&m), -48);
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn g_inverse_and_closure() {
        let g = GElement::new(vec![3, -2], -1).unwrap();
        let h = GElement::new(vec![1, 4], 1).unwrap();
        let id = AffineLatticeMap::identity(3);
        assert_eq!(g_to_affine(&g).compose(&g_to_affine(&g.inverse())).unwrap(), id);
        let gh = g_to_affine(&g).compose(&g_to_affine(&h)).unwrap();
        assert!(gh.as_g_element().is_some());
    }

    #[test]
    fn stabilizer_n3_bound1() {
        let maps = stabilizer_bruteforce(3, 1).unwrap();
        assert_eq!(maps.len(), 18);
        assert_eq!(maps, g_elements_in_box(3, 1));
        assert!(maps.contains(&AffineLatticeMap::identity(3)));
    }

    #[test]
    fn stabilizer_cap() {
        assert!(matches!(stabilizer_bruteforce_capped(4, 1, 1000), Err(Error::ResourceCap { .. })));
        assert_eq!(stabilizer_bruteforce(2, 1).unwrap_err(), Error::DimensionTooSmall(2));
    }
}
