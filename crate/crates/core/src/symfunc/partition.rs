use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, parts weakly decreasing and positive.
///
/// The derived ordering is lexicographic on the parts, which refines the
/// dominance order: `λ ⊵ μ` implies `λ ≥ μ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sort an arbitrary exponent vector and drop zeros.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut parts: Vec<usize> = exps.iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1, 1, …, 1)` with `n` ones.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// `self ⊵ other`: equal size and every partial sum at least as large.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Exponent vector padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// All distinct rearrangements of the padded exponent vector.
    pub fn monomial_exponents(&self, n: usize) -> Vec<Vec<usize>> {
        assert!(self.len() <= n);
        let mut v = self.padded(n);
        v.sort_unstable();
        let mut out = vec![v.clone()];
        while next_permutation(&mut v) {
            out.push(v.clone());
        }
        out
    }

    pub fn parse(s: &str) -> Result<Self> {
        let parts = crate::combinatorics::parse_list(s)?;
        Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Lexicographic next permutation; false once the last one is reached.
fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Partitions of `n` in decreasing lexicographic order, `[n]` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `total` into `len` nonnegative parts.
pub fn compositions(total: usize, len: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            prefix.push(remaining);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for x in (0..=remaining).rev() {
            prefix.push(x);
            rec(remaining - x, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, len, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        let got: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(got, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(6, 6).len(), 462);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::parse("2,1").unwrap(), p(&[2, 1]));
        assert_eq!(Partition::parse("[]").unwrap(), Partition::empty());
        assert_eq!(Partition::from_exponents(&[0, 1, 2]), p(&[2, 1]));
    }

    #[test]
    fn transpose_and_dominance() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        for n in 0..=8 {
            for a in partitions(n) {
                assert_eq!(a.transpose().transpose(), a);
                for b in partitions(n) {
                    if a.dominates(&b) {
                        assert!(a >= b);
                        assert!(b.transpose().dominates(&a.transpose()));
                    }
                }
            }
        }
        assert!(!p(&[3, 3]).dominates(&p(&[4, 1, 1])));
        assert!(!p(&[4, 1, 1]).dominates(&p(&[3, 3])));
    }

    #[test]
    fn rearrangements() {
        assert_eq!(p(&[2, 1]).monomial_exponents(3).len(), 6);
        assert_eq!(p(&[1, 1]).monomial_exponents(3).len(), 3);
        assert_eq!(Partition::empty().monomial_exponents(2), vec![vec![0, 0]]);
    }
}
