//! Rooted maps by brute force over vertex rotations.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use super::count_cycles;
use crate::error::{Error, Result};

pub const MAX_MAP_EDGES: usize = 5;

fn permutation_of_rank(mut rank: u64, n: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    let mut fact: u64 = (1..n as u64).product();
    for k in (1..=n).rev() {
        let i = (rank / fact) as usize;
        rank %= fact;
        out.push(pool.remove(i));
        if k > 1 {
            fact /= (k - 1) as u64;
        }
    }
    out
}

fn transitive(alpha: &[usize], sigma: &[usize]) -> bool {
    let n = alpha.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(d) = stack.pop() {
        for e in [alpha[d], sigma[d]] {
            if !seen[e] {
                seen[e] = true;
                count += 1;
                stack.push(e);
            }
        }
    }
    count == n
}

/// `T_g(n)`: rooted maps of genus `g` with `n` edges.
///
/// With the edge involution fixed, each rooted map accounts for
/// `(2n−1)!/(2n−1)!!` of the transitive vertex rotations.
pub fn count_rooted_maps(g: u32, n: usize) -> Result<u64> {
    if n > MAX_MAP_EDGES {
        return Err(Error::arg(format!(
            "rooted maps are brute-forced only up to {MAX_MAP_EDGES} edges"
        )));
    }
    Ok(genus_histogram(n)?.get(g as usize).copied().unwrap_or(0))
}

/// Planar rooted maps: `2·3^n(2n)!/(n!(n+2)!)`.
pub fn tutte_planar(n: usize) -> BigInt {
    let fact = |k: usize| -> BigInt { (1..=k).fold(BigInt::one(), |acc, i| acc * i) };
    BigInt::from(2) * BigInt::from(3).pow(n as u32) * fact(2 * n) / (fact(n) * fact(n + 2))
}

#[derive(Clone, Debug, Serialize)]
pub struct MapCount {
    pub genus: u32,
    pub edges: usize,
    pub count: u64,
}

/// All `T_g(n)` with `g ≤ g_max`, `n ≤ n_max`.
pub fn rooted_maps_table(g_max: u32, n_max: usize) -> Result<Vec<MapCount>> {
    if n_max > MAX_MAP_EDGES {
        return Err(Error::arg(format!(
            "rooted maps are brute-forced only up to {MAX_MAP_EDGES} edges"
        )));
    }
    let mut out = Vec::new();
    for n in 0..=n_max {
        let counts = genus_histogram(n)?;
        for g in 0..=g_max {
            let count = counts.get(g as usize).copied().unwrap_or(0);
            out.push(MapCount {
                genus: g,
                edges: n,
                count,
            });
        }
    }
    debug_assert!(out
        .iter()
        .all(|m| m.genus != 0 || BigInt::from(m.count) == tutte_planar(m.edges)));
    Ok(out)
}

fn genus_histogram(n: usize) -> Result<Vec<u64>> {
    if n == 0 {
        return Ok(vec![1]);
    }
    let darts = 2 * n;
    let alpha: Vec<usize> = (0..darts).map(|d| d ^ 1).collect();
    let total: u64 = (1..=darts as u64).product();
    let hist = (0..total)
        .into_par_iter()
        .fold(
            || vec![0u64; n / 2 + 1],
            |mut acc, r| {
                let sigma = permutation_of_rank(r, darts);
                if transitive(&alpha, &sigma) {
                    let phi: Vec<usize> = (0..darts).map(|d| sigma[alpha[d]]).collect();
                    let euler = (count_cycles(&sigma) + count_cycles(&phi)) as i64 - n as i64;
                    acc[(2 - euler).to_usize().unwrap_or(0) / 2] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n / 2 + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let double_fact: u64 = (1..darts as u64).step_by(2).product();
    let labelings: u64 = (1..darts as u64).product();
    hist.into_iter()
        .map(|h| {
            let num = h * double_fact;
            if num % labelings != 0 {
                return Err(Error::consistency(format!(
                    "{h} rotations do not split into rooted maps ({num} / {labelings})"
                )));
            }
            Ok(num / labelings)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_rooted_maps(0, 0).unwrap(), 1);
        assert_eq!(count_rooted_maps(1, 0).unwrap(), 0);
        assert_eq!(count_rooted_maps(0, 1).unwrap(), 2);
        assert_eq!(count_rooted_maps(0, 2).unwrap(), 9);
        assert_eq!(count_rooted_maps(1, 2).unwrap(), 1);
        assert_eq!(count_rooted_maps(1, 3).unwrap(), 20);
        assert_eq!(count_rooted_maps(1, 4).unwrap(), 307);
        assert_eq!(count_rooted_maps(2, 4).unwrap(), 21);
        assert!(count_rooted_maps(0, 6).is_err());
    }

    #[test]
    fn planar_matches_tutte() {
        for n in 0..=4 {
            assert_eq!(
                BigInt::from(count_rooted_maps(0, n).unwrap()),
                tutte_planar(n)
            );
        }
        assert_eq!(tutte_planar(3), BigInt::from(54));
    }

    #[test]
    fn table_agrees_with_single_counts() {
        let t = rooted_maps_table(2, 3).unwrap();
        for m in &t {
            assert_eq!(m.count, count_rooted_maps(m.genus, m.edges).unwrap());
        }
    }

    #[test]
    fn ranks_cover_permutations() {
        let mut seen = std::collections::BTreeSet::new();
        for r in 0..24 {
            seen.insert(permutation_of_rank(r, 4));
        }
        assert_eq!(seen.len(), 24);
    }
}
