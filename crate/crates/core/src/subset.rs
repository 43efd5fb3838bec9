//! Increasing index sets drawn from `[n] = {1, ..., n}`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A strictly increasing list of 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(Vec<usize>);

impl Subset {
    pub fn new(elements: Vec<usize>) -> Result<Self> {
        if elements.first() == Some(&0) || elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "subset must be strictly increasing and 1-based",
            ));
        }
        Ok(Subset(elements))
    }

    /// `{1, ..., k}`.
    pub fn range(k: usize) -> Self {
        Subset((1..=k).collect())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn max(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of even elements.
    pub fn even_count(&self) -> usize {
        self.0.iter().filter(|&&s| s % 2 == 0).count()
    }

    /// `[n] \ self`, in increasing order.
    pub fn complement(&self, n: usize) -> Subset {
        Subset((1..=n).filter(|&i| !self.contains(i)).collect())
    }

    /// 0-based positions, for indexing slices.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&s| s - 1)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// All `k`-element subsets of `[n]`, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        out.push(Subset(current.clone()));
        // rightmost position that can still advance
        let Some(pos) = (0..k).rev().find(|&i| current[i] < n - (k - 1 - i)) else {
            return out;
        };
        current[pos] += 1;
        for i in pos + 1..k {
            current[i] = current[i - 1] + 1;
        }
    }
}

/// Every permutation of `0..k`, in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        out.push(perm.clone());
        let Some(i) = (1..k).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Sign of a permutation given in one-line notation.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let inversions = (0..perm.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn enumerates_lexicographically() {
        let all = subsets(4, 2);
        let got: Vec<Vec<usize>> = all.iter().map(|s| s.elements().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(subsets(3, 0), vec![Subset(vec![])]);
        assert!(subsets(2, 3).is_empty());
        assert_eq!(subsets(6, 3).len(), 20);
    }

    #[test]
    fn derived_attributes() {
        let s = Subset::new(vec![1, 2, 4]).unwrap();
        assert_eq!(s.sum(), 7);
        assert_eq!(s.even_count(), 2);
        assert_eq!(s.complement(5).elements(), &[3, 5]);
        assert!(Subset::new(vec![2, 2]).is_err());
        assert!(Subset::new(vec![0, 1]).is_err());
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        let total: i32 = perms.iter().map(|p| permutation_sign(p)).sum();
        assert_eq!(total, 0);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
    }
}
