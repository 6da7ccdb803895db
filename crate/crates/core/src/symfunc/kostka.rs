use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::partition::{partitions, Partition};
use crate::error::{Error, Result};

/// Number of semistandard Young tableaux of shape `shape` and content
/// `content`.
pub fn kostka(shape: &Partition, content: &Partition) -> Result<u64> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch {
            expected: shape.size(),
            actual: content.size(),
        });
    }
    let mut memo = HashMap::new();
    Ok(count_ssyt(shape.parts(), content.parts(), &mut memo))
}

/// Peel off the cells holding the largest letter: they form a horizontal
/// strip of size `content.last()`.
fn count_ssyt(
    shape: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), u64>,
) -> u64 {
    let Some((&strip, rest)) = content.split_last() else {
        return u64::from(shape.iter().all(|&p| p == 0));
    };
    if shape.iter().filter(|&&p| p > 0).count() > content.len() {
        return 0;
    }
    let key = (shape.to_vec(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut inner = shape.to_vec();
    let mut total = 0;
    strips(shape, 0, strip, &mut inner, &mut |rho| {
        total += count_ssyt(rho, rest, memo);
    });
    memo.insert(key, total);
    total
}

/// Enumerate `rho ⊆ shape` with `shape/rho` a horizontal strip of `left`
/// cells: `shape[i+1] ≤ rho[i] ≤ shape[i]`.
fn strips(
    shape: &[usize],
    row: usize,
    left: usize,
    rho: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if left == 0 {
            let trimmed: Vec<usize> = rho.iter().copied().filter(|&p| p > 0).collect();
            emit(&trimmed);
        }
        return;
    }
    let floor = shape.get(row + 1).copied().unwrap_or(0);
    let max_take = (shape[row] - floor).min(left);
    for take in 0..=max_take {
        rho[row] = shape[row] - take;
        strips(shape, row + 1, left - take, rho, emit);
    }
    rho[row] = shape[row];
}

/// The full Kostka matrix for one degree, rows and columns indexed by
/// [`partitions`] order (decreasing lexicographic).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaTable {
    pub version: String,
    pub degree: usize,
    pub partitions: Vec<Partition>,
    pub matrix: Vec<Vec<u64>>,
    #[serde(skip)]
    index: HashMap<Partition, usize>,
}

pub const KOSTKA_VERSION: &str = "kostka-v1";

impl KostkaTable {
    pub fn compute(degree: usize) -> Self {
        let parts = partitions(degree);
        let matrix = parts
            .iter()
            .map(|lam| {
                parts
                    .iter()
                    .map(|mu| {
                        if lam.dominates(mu) {
                            kostka(lam, mu).expect("same degree")
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_parts(degree, parts, matrix)
    }

    fn from_parts(degree: usize, partitions: Vec<Partition>, matrix: Vec<Vec<u64>>) -> Self {
        let index = partitions
            .iter()
            .enumerate()
            .map(|(k, p)| (p.clone(), k))
            .collect();
        KostkaTable {
            version: KOSTKA_VERSION.to_string(),
            degree,
            partitions,
            matrix,
            index,
        }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn get(&self, shape: &Partition, content: &Partition) -> u64 {
        match (self.index_of(shape), self.index_of(content)) {
            (Some(a), Some(b)) => self.matrix[a][b],
            _ => 0,
        }
    }

    /// Nonzero entries of the row for `shape`.
    pub fn row(&self, shape: &Partition) -> impl Iterator<Item = (&Partition, u64)> + '_ {
        let row = self.index_of(shape).map(|k| &self.matrix[k]);
        self.partitions
            .iter()
            .zip(row.into_iter().flatten())
            .filter(|(_, &k)| k != 0)
            .map(|(p, &k)| (p, k))
    }

    pub fn cache_path(dir: &Path, degree: usize) -> PathBuf {
        dir.join(format!("kostka-{degree}.json"))
    }

    pub fn save(&self, dir: &Path) -> Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = Self::cache_path(dir, self.degree);
        fs::write(&path, serde_json::to_string(self)?)?;
        Ok(path)
    }

    /// Load a cached table, rejecting anything whose shape does not match a
    /// fresh partition listing or whose diagonal is not all ones.
    pub fn load(dir: &Path, degree: usize) -> Result<Option<Self>> {
        let path = Self::cache_path(dir, degree);
        if !path.exists() {
            return Ok(None);
        }
        let raw: KostkaTable = serde_json::from_str(&fs::read_to_string(&path)?)?;
        let expected = partitions(degree);
        let ok = raw.version == KOSTKA_VERSION
            && raw.degree == degree
            && raw.partitions == expected
            && raw.matrix.len() == expected.len()
            && raw.matrix.iter().all(|r| r.len() == expected.len())
            && (0..expected.len()).all(|k| raw.matrix[k][k] == 1);
        if !ok {
            return Err(Error::Parse(format!(
                "corrupt Kostka cache {}",
                path.display()
            )));
        }
        Ok(Some(Self::from_parts(degree, raw.partitions, raw.matrix)))
    }
}

fn registry() -> &'static RwLock<HashMap<usize, Arc<KostkaTable>>> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<KostkaTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// The shared Kostka table for `degree`, computed on first use.
pub fn kostka_table(degree: usize) -> Arc<KostkaTable> {
    if let Some(t) = registry().read().unwrap().get(&degree) {
        return Arc::clone(t);
    }
    let table = Arc::new(KostkaTable::compute(degree));
    let mut guard = registry().write().unwrap();
    Arc::clone(guard.entry(degree).or_insert(table))
}

/// Seed the shared registry, e.g. from an on-disk cache.
pub fn install_kostka_table(table: KostkaTable) {
    registry()
        .write()
        .unwrap()
        .insert(table.degree, Arc::new(table));
}
