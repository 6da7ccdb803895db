use std::collections::BTreeSet;
use std::fmt;

use super::hessenberg::HessenbergFunction;
use crate::error::{Error, Result};

/// An upward-closed set of positive roots `(i, j)`, `1 ≤ i < j ≤ n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootIdeal {
    n: usize,
    roots: BTreeSet<(usize, usize)>,
}

impl RootIdeal {
    pub fn new(n: usize, roots: BTreeSet<(usize, usize)>) -> Result<Self> {
        for &(i, j) in &roots {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::InvalidRoot { i, j, n });
            }
        }
        let ideal = RootIdeal { n, roots };
        if let Some((i, j, mi, mj)) = ideal.closure_violation() {
            return Err(Error::NotUpwardClosed {
                i,
                j,
                missing_i: mi,
                missing_j: mj,
            });
        }
        Ok(ideal)
    }

    pub(crate) fn from_roots_unchecked(n: usize, roots: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(RootIdeal::new(n, roots.clone()).is_ok());
        RootIdeal { n, roots }
    }

    pub fn empty(n: usize) -> Self {
        RootIdeal {
            n,
            roots: BTreeSet::new(),
        }
    }

    /// All of `Δ⁺`.
    pub fn full(n: usize) -> Self {
        let roots = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        RootIdeal { n, roots }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.roots.contains(&(i, j))
    }

    pub fn roots(&self) -> &BTreeSet<(usize, usize)> {
        &self.roots
    }

    pub fn is_subset(&self, other: &RootIdeal) -> bool {
        self.n == other.n && self.roots.is_subset(&other.roots)
    }

    /// Returns the first `(i, j)` whose required neighbour `(i', j')` is
    /// missing. Only the immediate neighbours `(i−1, j)` and `(i, j+1)` need
    /// checking; closure under those implies the full condition.
    fn closure_violation(&self) -> Option<(usize, usize, usize, usize)> {
        for &(i, j) in &self.roots {
            if i > 1 && !self.contains(i - 1, j) {
                return Some((i, j, i - 1, j));
            }
            if j < self.n && !self.contains(i, j + 1) {
                return Some((i, j, i, j + 1));
            }
        }
        None
    }

    pub fn is_upward_closed(&self) -> bool {
        self.closure_violation().is_none()
    }

    /// `h_Ψ(i) = max({ j | (i, j) ∉ Ψ } ∪ { i })`.
    pub fn to_hessenberg(&self) -> HessenbergFunction {
        let values = (1..=self.n)
            .map(|i| {
                (i + 1..=self.n)
                    .filter(|&j| !self.contains(i, j))
                    .max()
                    .unwrap_or(i)
            })
            .collect();
        HessenbergFunction::new(values).expect("root ideal always yields a Hessenberg function")
    }

    /// `h_i(Ψ) = max({ j | (j, i) ∈ Ψ } ∪ { 0 })` for each column `i`.
    pub fn h_profile(&self) -> HProfile {
        let values = (1..=self.n)
            .map(|i| (1..i).filter(|&j| self.contains(j, i)).max().unwrap_or(0))
            .collect();
        HProfile { values }
    }

    /// The involution `(i, j) ↦ (n+1−j, n+1−i)`.
    pub fn theta(&self) -> RootIdeal {
        let m = self.n + 1;
        let roots = self.roots.iter().map(|&(i, j)| (m - j, m - i)).collect();
        RootIdeal::from_roots_unchecked(self.n, roots)
    }

    /// Invariance under swapping indices `i ↔ i+1`. An ideal containing
    /// `(i, i+1)` is never stable, since `s_i` sends that root out of `Δ⁺`.
    pub fn is_si_stable(&self, i: usize) -> bool {
        assert!(1 <= i && i < self.n);
        if self.contains(i, i + 1) {
            return false;
        }
        let swap = |x: usize| {
            if x == i {
                i + 1
            } else if x == i + 1 {
                i
            } else {
                x
            }
        };
        self.roots
            .iter()
            .all(|&(a, b)| self.roots.contains(&(swap(a), swap(b))))
    }

    /// Roots whose removal leaves an ideal (the minimal elements).
    pub fn removable_roots(&self) -> Vec<(usize, usize)> {
        self.roots
            .iter()
            .copied()
            .filter(|&(i, j)| {
                let below = i + 1 < j && self.contains(i + 1, j);
                let left = j - 1 > i && self.contains(i, j - 1);
                !below && !left
            })
            .collect()
    }

    /// Roots outside the ideal whose addition keeps it upward closed.
    pub fn addable_roots(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.contains(i, j) {
                    continue;
                }
                let up_ok = i == 1 || self.contains(i - 1, j);
                let right_ok = j == self.n || self.contains(i, j + 1);
                if up_ok && right_ok {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn with_root(&self, root: (usize, usize)) -> RootIdeal {
        let mut roots = self.roots.clone();
        roots.insert(root);
        RootIdeal::from_roots_unchecked(self.n, roots)
    }

    pub fn without_root(&self, root: (usize, usize)) -> RootIdeal {
        let mut roots = self.roots.clone();
        roots.remove(&root);
        RootIdeal::from_roots_unchecked(self.n, roots)
    }

    /// Parse `"{(1,3),(2,4)}"`. For a nonempty ideal the size defaults to the
    /// largest column index (upward closure forces it); the empty ideal
    /// needs `n` explicitly.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self> {
        let body = s.trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("root ideal must be braced: {s:?}")))?;
        let mut roots = BTreeSet::new();
        let mut rest = body.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed '(' in {s:?}")))?;
            let pair: Vec<&str> = open[..close].split(',').collect();
            if pair.len() != 2 {
                return Err(Error::Parse(format!("root needs two indices in {s:?}")));
            }
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad index {t:?}")))
            };
            roots.insert((parse(pair[0])?, parse(pair[1])?));
            rest = open[close + 1..].trim_start();
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
        }
        let n = match n {
            Some(n) => n,
            None => roots
                .iter()
                .map(|&(_, j)| j)
                .max()
                .ok_or_else(|| Error::Parse("empty root ideal needs an explicit size".into()))?,
        };
        RootIdeal::new(n, roots)
    }
}

impl From<&HessenbergFunction> for RootIdeal {
    fn from(h: &HessenbergFunction) -> Self {
        h.to_root_ideal()
    }
}

impl fmt::Display for RootIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .roots
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// The column profile `(h_1(Ψ), …, h_n(Ψ))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HProfile {
    pub values: Vec<usize>,
}

impl HProfile {
    /// `h_i(Ψ)` for `1 ≤ i ≤ n`.
    pub fn get(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn is_valid(&self) -> bool {
        self.values.first().is_none_or(|&v| v == 0)
            && self.values.iter().enumerate().all(|(k, &v)| v < k + 1)
            && self.values.windows(2).all(|w| w[0] <= w[1])
    }
}
