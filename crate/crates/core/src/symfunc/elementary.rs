use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::partition::{partitions, Partition};

/// Monomial expansions `e_μ = Σ_λ M_{μλ} m_λ` for every `μ ⊢ degree`,
/// obtained by multiplying out elementary polynomials in `degree`
/// variables.
#[derive(Debug, Clone)]
pub struct ElementaryTable {
    pub degree: usize,
    pub rows: BTreeMap<Partition, BTreeMap<Partition, u64>>,
}

impl ElementaryTable {
    pub fn compute(degree: usize) -> Self {
        let vars = degree.max(1);
        let rows = partitions(degree)
            .into_iter()
            .map(|mu| {
                let row = expand_elementary_product(&mu, vars);
                (mu, row)
            })
            .collect();
        ElementaryTable { degree, rows }
    }

    pub fn row(&self, mu: &Partition) -> &BTreeMap<Partition, u64> {
        &self.rows[mu]
    }
}

/// Expand `e_{μ_1} ⋯ e_{μ_k}` in `vars` variables and read off the
/// coefficient of each dominant monomial `x^λ`.
fn expand_elementary_product(mu: &Partition, vars: usize) -> BTreeMap<Partition, u64> {
    let mut poly: HashMap<Vec<usize>, u64> = HashMap::new();
    poly.insert(vec![0; vars], 1);
    for &k in mu.parts() {
        let subsets = k_subsets(vars, k);
        let mut next: HashMap<Vec<usize>, u64> = HashMap::new();
        for (exp, c) in &poly {
            for s in &subsets {
                let mut e = exp.clone();
                for &i in s {
                    e[i] += 1;
                }
                *next.entry(e).or_default() += c;
            }
        }
        poly = next;
    }
    poly.into_iter()
        .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, c)| (Partition::from_exponents(&e), c))
        .collect()
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn elementary_table(degree: usize) -> Arc<ElementaryTable> {
    static TABLES: OnceLock<RwLock<HashMap<usize, Arc<ElementaryTable>>>> = OnceLock::new();
    let reg = TABLES.get_or_init(Default::default);
    if let Some(t) = reg.read().unwrap().get(&degree) {
        return Arc::clone(t);
    }
    let table = Arc::new(ElementaryTable::compute(degree));
    let mut guard = reg.write().unwrap();
    Arc::clone(guard.entry(degree).or_insert(table))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_rows() {
        let t = ElementaryTable::compute(3);
        // e_3 = m_111
        assert_eq!(t.row(&p(&[3])), &[(p(&[1, 1, 1]), 1)].into_iter().collect());
        // e_21 = m_21 + 3 m_111
        assert_eq!(
            t.row(&p(&[2, 1])),
            &[(p(&[2, 1]), 1), (p(&[1, 1, 1]), 3)].into_iter().collect()
        );
        // e_111 = (x1+x2+x3)^3
        assert_eq!(
            t.row(&p(&[1, 1, 1])),
            &[(p(&[3]), 1), (p(&[2, 1]), 3), (p(&[1, 1, 1]), 6)]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn leading_term_is_transpose() {
        for n in 0..=7 {
            let t = ElementaryTable::compute(n);
            for mu in partitions(n) {
                let row = t.row(&mu);
                let top = row.keys().next_back().unwrap();
                assert_eq!(top, &mu.transpose());
                assert_eq!(row[top], 1);
            }
        }
    }
}
