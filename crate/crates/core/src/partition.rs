//! Integer partitions and the combinatorics of `S_n` conjugacy classes.
//!
//! A [`Partition`] is used both as an irreducible-representation label, as a
//! cycle type, and as the shape of a Young subgroup `S_λ = S_λ1 × … × S_λl`.
//!
//! The canonical order on partitions of a fixed `n` is descending
//! lexicographic: `(n)` first, `(1^n)` last. It is a linear extension of the
//! dominance order and `Ord` on [`Partition`] implements it, so sorted
//! collections iterate canonically.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, k)) if *q == p => *k += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `self ⊵ other` in the dominance order.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Centralizer order `z_μ = ∏ i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (part, mult)| {
                acc * num_traits::pow(BigInt::from(part), mult) * factorial(mult)
            })
    }

    /// Order of the Young subgroup `S_λ1 × … × S_λl`.
    pub fn young_subgroup_order(&self) -> BigInt {
        self.parts.iter().map(|&p| factorial(p)).product()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated, weakly decreasing positive integers, e.g. `3,1,1`.
    /// The empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = 0;
        for field in s.split(',') {
            let lead = field.len() - field.trim_start().len();
            let value: usize = field.trim().parse().map_err(|_| Error::Parse {
                position: offset + lead,
                message: format!("expected a positive integer, found '{}'", field.trim()),
            })?;
            if value == 0 {
                return Err(Error::Parse {
                    position: offset + lead,
                    message: "partition parts must be positive".into(),
                });
            }
            if parts.last().is_some_and(|&prev| prev < value) {
                return Err(Error::Parse {
                    position: offset + lead,
                    message: "partition parts must be weakly decreasing".into(),
                });
            }
            parts.push(value);
            offset += field.len() + 1;
        }
        Ok(Partition { parts })
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// All partitions of `n` in canonical (descending lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Number of partitions of `n` with exactly `l` parts.
///
/// `p(n, n) = 1` and `p(n, l) = p(n-1, l-1) + p(n-l, l)`, with
/// `p(0, 0) = 1`, `p(n, 0) = 0` for `n > 0` and `p(n, l) = 0` for `l > n`.
pub fn p_length(n: usize, l: usize) -> BigInt {
    if l > n {
        return BigInt::zero();
    }
    // table[m][k] = p(m, k) for m <= n, k <= l
    let mut table = vec![vec![BigInt::zero(); l + 1]; n + 1];
    table[0][0] = BigInt::one();
    for m in 1..=n {
        for k in 1..=l.min(m) {
            table[m][k] = if k == m {
                BigInt::one()
            } else {
                &table[m - 1][k - 1] + &table[m - k][k]
            };
        }
    }
    table[n][l].clone()
}

/// Number of set partitions of `{1..n}` whose block sizes are `shape`:
/// `n! / ∏ (λ_i!)^{k_i} k_i!`.
pub fn set_partition_count(shape: &Partition) -> BigInt {
    let denom = shape
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (part, mult)| {
            acc * num_traits::pow(factorial(part), mult) * factorial(mult)
        });
    factorial(shape.n()) / denom
}

/// Whether the parts of `fine` can be grouped so that the groups sum to the
/// parts of `coarse`.
pub fn refines(fine: &Partition, coarse: &Partition) -> Result<bool> {
    if fine.n() != coarse.n() {
        return Err(Error::SizeMismatch {
            expected: coarse.n(),
            found: fine.n(),
        });
    }
    let mut bins = coarse.parts.clone();
    Ok(place(fine.parts(), &mut bins))
}

fn place(items: &[usize], bins: &mut [usize]) -> bool {
    let Some((&item, rest)) = items.split_first() else {
        return bins.iter().all(|&b| b == 0);
    };
    for i in 0..bins.len() {
        if bins[i] < item || bins[..i].contains(&bins[i]) {
            continue;
        }
        bins[i] -= item;
        let ok = place(rest, bins);
        bins[i] += item;
        if ok {
            return true;
        }
    }
    false
}

/// Number of permutations in `S_n` with cycle type `mu`: `n! / z_μ`.
pub fn class_size(mu: &Partition) -> BigInt {
    factorial(mu.n()) / mu.centralizer_order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(3),
            vec![part("3"), part("2,1"), part("1,1,1")]
        );
        assert_eq!(partitions_of(5).len(), 7);
        let mut sorted = partitions_of(6);
        sorted.sort();
        assert_eq!(sorted, partitions_of(6));
    }

    #[test]
    fn p_length_values() {
        assert_eq!(p_length(4, 2), BigInt::from(2));
        for n in 0..10 {
            assert_eq!(p_length(n, n), BigInt::one());
        }
        assert_eq!(p_length(0, 0), BigInt::one());
        assert_eq!(p_length(5, 0), BigInt::zero());
        assert_eq!(p_length(3, 4), BigInt::zero());
    }

    #[test]
    fn set_partition_counts() {
        assert_eq!(set_partition_count(&part("2,1")), BigInt::from(3));
        assert_eq!(set_partition_count(&part("1,1,1,1,1")), BigInt::one());
        assert_eq!(set_partition_count(&part("2,2")), BigInt::from(3));
    }

    #[test]
    fn refinement() {
        assert!(refines(&part("1,1,1"), &part("3")).unwrap());
        assert!(refines(&part("2,1"), &part("2,1")).unwrap());
        assert!(!refines(&part("2,2"), &part("3,1")).unwrap());
        assert!(refines(&part("2,1,1"), &part("3,1")).unwrap());
        assert!(!refines(&part("3,1"), &part("2,2")).unwrap());
        assert!(matches!(
            refines(&part("2,1"), &part("2")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&part("1,1")), BigInt::one());
        assert_eq!(class_size(&part("2")), BigInt::one());
        assert_eq!(class_size(&part("2,1")), BigInt::from(3));
    }

    #[test]
    fn text_form() {
        assert_eq!(part("3,1,1").parts(), &[3, 1, 1]);
        assert_eq!(part(" 2 , 2 ").to_string(), "2,2");
        assert_eq!(part("").n(), 0);
        assert!(matches!(
            "2,3".parse::<Partition>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            "2,x".parse::<Partition>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            "0".parse::<Partition>(),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_and_dominance() {
        assert_eq!(part("3,1").conjugate(), part("2,1,1"));
        assert!(part("3,1").dominates(&part("2,2")));
        assert!(!part("2,2").dominates(&part("3,1")));
        assert!(!part("3,3").dominates(&part("4,1,1")));
        assert!(!part("4,1,1").dominates(&part("3,3")));
    }
}
