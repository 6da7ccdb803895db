use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::root_ideal::RootIdeal;
use crate::error::{Error, Result};

/// A weakly increasing map `h: [n] → [n]` with `h(i) ≥ i` and `h(n) = n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        validate_hessenberg(&values)?;
        Ok(HessenbergFunction { values })
    }

    /// `h(i) = n` for every `i`: the complete graph.
    pub fn complete(n: usize) -> Self {
        assert!(n > 0);
        HessenbergFunction { values: vec![n; n] }
    }

    /// `h(i) = i`: the graph with no edges.
    pub fn identity(n: usize) -> Self {
        assert!(n > 0);
        HessenbergFunction {
            values: (1..=n).collect(),
        }
    }

    /// Build from the Dyck-path area sequence `a_i = h(i) − i`.
    pub fn from_area_sequence(area: &[usize]) -> Result<Self> {
        let values = area.iter().enumerate().map(|(k, a)| a + k + 1).collect();
        Self::new(values)
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(i)` for `1 ≤ i ≤ n`.
    pub fn value(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn area_sequence(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, v)| v - (k + 1))
            .collect()
    }

    /// The root ideal `Ψ_h`: `(i, j) ∈ Ψ_h` iff `j > h(i)`.
    pub fn to_root_ideal(&self) -> RootIdeal {
        let n = self.n();
        let roots = (1..=n)
            .flat_map(|i| (self.value(i) + 1..=n).map(move |j| (i, j)))
            .collect();
        RootIdeal::from_roots_unchecked(n, roots)
    }

    pub fn edge_count(&self) -> usize {
        (1..=self.n()).map(|i| self.value(i) - i).sum()
    }

    pub fn unit_interval_graph(&self) -> UnitIntervalGraph {
        let n = self.n();
        let edges = (1..=n)
            .flat_map(|i| (i + 1..=self.value(i)).map(move |j| (i, j)))
            .collect();
        UnitIntervalGraph { n, edges }
    }

    /// Connected components as Hessenberg functions on relabelled vertex
    /// blocks, in increasing order of their original labels.
    pub fn connected_components(&self) -> Vec<HessenbergFunction> {
        let mut out = Vec::new();
        let mut start = 1;
        for i in 1..=self.n() {
            // i and i+1 are joined iff h(i) > i; otherwise a block ends at i.
            if self.value(i) == i {
                let offset = start - 1;
                let values = (start..=i).map(|k| self.value(k) - offset).collect();
                out.push(HessenbergFunction { values });
                start = i + 1;
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        (1..self.n()).all(|i| self.value(i) > i)
    }

    /// Parse `"2,3,3"` (optionally wrapped in parentheses or brackets).
    pub fn parse_values(s: &str) -> Result<Self> {
        Self::new(parse_usize_list(s)?)
    }

    /// Parse a Dyck-path area sequence such as `"1,1,0"`.
    pub fn parse_area(s: &str) -> Result<Self> {
        Self::from_area_sequence(&parse_usize_list(s)?)
    }
}

impl FromStr for HessenbergFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_values(s)
    }
}

impl TryFrom<Vec<usize>> for HessenbergFunction {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<HessenbergFunction> for Vec<usize> {
    fn from(h: HessenbergFunction) -> Self {
        h.values
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn validate_hessenberg(seq: &[usize]) -> Result<()> {
    let n = seq.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    for (k, pair) in seq.windows(2).enumerate() {
        if pair[0] > pair[1] {
            return Err(Error::NotWeaklyIncreasing {
                pos: k + 1,
                left: pair[0],
                right: pair[1],
            });
        }
    }
    if seq[n - 1] != n {
        return Err(Error::LastValueNotN {
            n,
            value: seq[n - 1],
        });
    }
    for (k, &v) in seq.iter().enumerate() {
        if v < k + 1 {
            return Err(Error::ValueBelowIndex {
                index: k + 1,
                value: v,
            });
        }
    }
    Ok(())
}

pub(crate) fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    let trimmed = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if trimmed.trim().is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: {:?}", tok.trim())))
        })
        .collect()
}

/// The unit interval graph `Γ_h`, edges stored as `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitIntervalGraph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl UnitIntervalGraph {
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&(i, j))
    }

    /// For each vertex, its neighbours with a smaller label.
    pub fn lower_neighbours(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n + 1];
        for &(i, j) in &self.edges {
            out[j].push(i);
        }
        out
    }
}

/// Lexicographic stream of all Hessenberg functions of size `n`.
#[derive(Debug, Clone)]
pub struct HessenbergIter {
    next: Option<Vec<usize>>,
}

pub fn enumerate_hessenberg(n: usize) -> HessenbergIter {
    assert!(n >= 1, "enumerate_hessenberg needs n >= 1");
    HessenbergIter {
        next: Some((1..=n).collect()),
    }
}

impl Iterator for HessenbergIter {
    type Item = HessenbergFunction;

    fn next(&mut self) -> Option<HessenbergFunction> {
        let current = self.next.take()?;
        let n = current.len();
        // Bump the rightmost free slot that can grow, then reset the tail to
        // its lexicographic minimum.
        let mut succ = current.clone();
        let mut found = false;
        for p in (0..n.saturating_sub(1)).rev() {
            if succ[p] < n {
                succ[p] += 1;
                for q in p + 1..n - 1 {
                    succ[q] = succ[q - 1].max(q + 1);
                }
                found = true;
                break;
            }
        }
        if found {
            self.next = Some(succ);
        }
        Some(HessenbergFunction { values: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::catalan;

    fn h(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(h(&[2, 3, 3]).n(), 3);
        assert!(matches!(
            HessenbergFunction::new(vec![3, 2, 3]),
            Err(Error::NotWeaklyIncreasing { pos: 1, .. })
        ));
        assert_eq!(h(&[1, 2, 3]).edge_count(), 0);
        assert!(matches!(
            HessenbergFunction::new(vec![1, 1, 3]),
            Err(Error::ValueBelowIndex { index: 2, value: 1 })
        ));
        assert_eq!(
            HessenbergFunction::new(vec![2, 2, 2]),
            Err(Error::LastValueNotN { n: 3, value: 2 })
        );
        assert_eq!(
            HessenbergFunction::new(vec![2, 3, 3, 3]),
            Err(Error::LastValueNotN { n: 4, value: 3 })
        );
        assert_eq!(
            HessenbergFunction::new(vec![2, 4, 4]),
            Err(Error::LastValueNotN { n: 3, value: 4 })
        );
        assert_eq!(HessenbergFunction::new(vec![]), Err(Error::EmptySequence));
    }

    #[test]
    fn components() {
        assert_eq!(h(&[2, 3, 3]).connected_components(), vec![h(&[2, 3, 3])]);
        assert_eq!(
            h(&[2, 2, 3]).connected_components(),
            vec![h(&[2, 2]), h(&[1])]
        );
        assert_eq!(
            h(&[1, 2, 3]).connected_components(),
            vec![h(&[1]), h(&[1]), h(&[1])]
        );
        assert_eq!(
            h(&[1, 3, 3, 5, 5]).connected_components(),
            vec![h(&[1]), h(&[2, 2]), h(&[2, 2])]
        );
    }

    #[test]
    fn graph_edges() {
        let g = h(&[2, 3, 3]).unit_interval_graph();
        assert_eq!(g.edges, [(1, 2), (2, 3)].into_iter().collect());
        assert!(g.has_edge(3, 2));
        assert!(!g.has_edge(1, 3));
    }

    #[test]
    fn enumeration_small() {
        let all: Vec<_> = enumerate_hessenberg(1).collect();
        assert_eq!(all, vec![h(&[1])]);
        let all: Vec<Vec<usize>> = enumerate_hessenberg(3).map(Vec::from).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 3],
                vec![2, 2, 3],
                vec![2, 3, 3],
                vec![3, 3, 3]
            ]
        );
        assert_eq!(enumerate_hessenberg(4).count(), 14);
    }

    #[test]
    fn enumeration_is_catalan_and_sorted() {
        for n in 1..=10 {
            let all: Vec<_> = enumerate_hessenberg(n).collect();
            assert_eq!(all.len() as u64, catalan(n), "n={n}");
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn area_roundtrip() {
        let f = HessenbergFunction::parse_area("1,1,0").unwrap();
        assert_eq!(f, h(&[2, 3, 3]));
        assert_eq!(f.area_sequence(), vec![1, 1, 0]);
        assert_eq!(HessenbergFunction::parse_values("(2,3,3)").unwrap(), f);
        assert!(HessenbergFunction::parse_values("2,x,3").is_err());
    }

    #[test]
    fn edges_complement_ideal() {
        for n in 1..=7 {
            for f in enumerate_hessenberg(n) {
                let g = f.unit_interval_graph();
                assert_eq!(g.edges.len(), f.edge_count());
                assert_eq!(g.edges.len(), n * (n - 1) / 2 - f.to_root_ideal().len());
            }
        }
    }
}
