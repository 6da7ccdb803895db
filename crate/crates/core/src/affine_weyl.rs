//! The affine weight lattice `ℤδ ⊕ ℤΛ_0 ⊕ ⊕ ℤε_i` of type `A_{n−1}`, the
//! simple reflections acting on it, and the operator product
//! `S_{1,h_1} ⋯ S_{n,h_n} e^{Λ_n}` whose projection is the chromatic
//! symmetric function at `t = 1`.
//!
//! Index `n` doubles as the affine node `0`; callers may pass either.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::HessenbergFunction;
use crate::error::{Error, Result};
use crate::symfunc::{Basis, LaurentT, Partition, SymFunc};

/// `c_delta·δ + c_lambda0·Λ_0 + Σ eps[i]·ε_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AffineWeight {
    pub c_delta: i64,
    pub c_lambda0: i64,
    pub eps: Vec<i64>,
}

impl AffineWeight {
    pub fn new(c_delta: i64, c_lambda0: i64, eps: Vec<i64>) -> Self {
        AffineWeight {
            c_delta,
            c_lambda0,
            eps,
        }
    }

    /// The fundamental weight `Λ_i = Λ_0 + ε_1 + ⋯ + ε_i` (`0 ≤ i ≤ n`).
    pub fn fundamental(i: usize, n: usize) -> Result<Self> {
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let eps = (0..n).map(|k| i64::from(k < i)).collect();
        Ok(AffineWeight::new(0, 1, eps))
    }

    pub fn n(&self) -> usize {
        self.eps.len()
    }

    /// The level `Λ(K)`.
    pub fn level(&self) -> i64 {
        self.c_lambda0
    }

    /// Pairing with the simple root `α_i`; `Λ_0` and `δ` lie in the radical.
    pub fn pair_simple_root(&self, i: usize) -> i64 {
        let n = self.n();
        if i < n {
            self.eps[i - 1] - self.eps[i]
        } else {
            // α_0 = ε_n − ε_1 + δ
            self.eps[n - 1] - self.eps[0]
        }
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps: Vec<String> = self.eps.iter().map(|e| e.to_string()).collect();
        write!(
            f,
            "delta={} lambda0={} eps={}",
            self.c_delta,
            self.c_lambda0,
            eps.join(",")
        )
    }
}

fn normalize_index(i: usize, n: usize) -> Result<usize> {
    match i {
        0 => Ok(n),
        i if i <= n => Ok(i),
        _ => Err(Error::IndexOutOfRange { index: i, n }),
    }
}

/// `s_i(Λ) = Λ − (⟨α_i, Λ⟩ + [i = n]·Λ(K)) α_i`.
///
/// An involution for `n ≥ 2`. For `n = 1` the affine root degenerates to
/// `δ` and the map is a translation.
pub fn reflect(i: usize, w: &AffineWeight) -> Result<AffineWeight> {
    let n = w.n();
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let i = normalize_index(i, n)?;
    let mut out = w.clone();
    reflect_in_place(i, &mut out);
    Ok(out)
}

/// `i` must already be in `1..=n`.
fn reflect_in_place(i: usize, w: &mut AffineWeight) {
    let n = w.n();
    if i < n {
        let p = w.eps[i - 1] - w.eps[i];
        w.eps[i - 1] -= p;
        w.eps[i] += p;
    } else {
        let p = w.eps[n - 1] - w.eps[0] + w.c_lambda0;
        w.eps[n - 1] -= p;
        w.eps[0] += p;
        w.c_delta -= p;
    }
}

/// A product `s_{j_ℓ} ⋯ s_{j_1}`, stored left to right as written; the
/// rightmost generator acts first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ReflectionWord(pub Vec<usize>);

impl ReflectionWord {
    pub fn identity() -> Self {
        ReflectionWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, w: &AffineWeight) -> Result<AffineWeight> {
        let n = w.n();
        let mut out = w.clone();
        for &g in self.0.iter().rev() {
            reflect_in_place(normalize_index(g, n)?, &mut out);
        }
        Ok(out)
    }

    fn apply_in_place(&self, w: &mut AffineWeight) {
        for &g in self.0.iter().rev() {
            reflect_in_place(g, w);
        }
    }
}

impl fmt::Display for ReflectionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let gens: Vec<String> = self.0.iter().map(|g| format!("s{g}")).collect();
        write!(f, "{}", gens.join(" "))
    }
}

/// The words of `S^i`: `1, s_i, s_{i+1}s_i, …` up to length `n − i + h`,
/// generator indices read cyclically with `n` standing for the affine node.
pub fn s_set(i: usize, h: usize, n: usize) -> Result<Vec<ReflectionWord>> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    if h >= i {
        return Err(Error::InvalidProfile { i, h });
    }
    let longest = n - i + h;
    Ok((0..=longest)
        .map(|len| {
            let mut gens: Vec<usize> = (0..len).map(|k| (i - 1 + k) % n + 1).collect();
            gens.reverse();
            ReflectionWord(gens)
        })
        .collect())
}

/// A finite integer combination of `e^{Λ}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightSum {
    terms: BTreeMap<AffineWeight, BigInt>,
}

pub const WEIGHTSUM_VERSION: &str = "weightsum-v1";

/// Which sign of `δ` is read as `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QConvention {
    /// `q = e^{−δ}`, so `e^{cδ}` carries `q^{−c}`.
    NegativeDelta,
    /// `q = e^{+δ}`, so `e^{cδ}` carries `q^{c}`.
    PositiveDelta,
}

impl WeightSum {
    pub fn single(w: AffineWeight) -> Self {
        let mut s = WeightSum::default();
        s.add(w, BigInt::one());
        s
    }

    pub fn add(&mut self, w: AffineWeight, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineWeight, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Apply the formal sum of `words` to every term.
    pub fn apply_operator(&self, words: &[ReflectionWord]) -> WeightSum {
        let mut out = WeightSum::default();
        for (w, c) in &self.terms {
            for word in words {
                let mut image = w.clone();
                word.apply_in_place(&mut image);
                out.add(image, c.clone());
            }
        }
        out
    }

    /// Erase `δ` and `Λ_0`, keeping the ε-exponent vector.
    pub fn project(&self) -> BTreeMap<Vec<i64>, BigInt> {
        let mut out: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
        for (w, c) in &self.terms {
            *out.entry(w.eps.clone()).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Keep the `δ` grading as a `q`-polynomial per ε-exponent vector.
    pub fn project_q(&self, convention: QConvention) -> BTreeMap<Vec<i64>, LaurentT> {
        let mut out: BTreeMap<Vec<i64>, LaurentT> = BTreeMap::new();
        for (w, c) in &self.terms {
            let q_exp = match convention {
                QConvention::NegativeDelta => -w.c_delta,
                QConvention::PositiveDelta => w.c_delta,
            };
            *out.entry(w.eps.clone()).or_default() += &LaurentT::monomial(q_exp, c.clone());
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// `coeff  delta=<d> lambda0=<l> eps=<e1,…,en>` per term, lines sorted
    /// lexicographically.
    pub fn dump_lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("{c}  {w}"))
            .collect();
        lines.sort();
        lines
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                serde_json::json!({
                    "coeff": c.to_string().parse::<serde_json::Number>().expect("integer literal"),
                    "delta": w.c_delta,
                    "lambda0": w.c_lambda0,
                    "eps": w.eps,
                })
            })
            .collect();
        serde_json::json!({ "version": WEIGHTSUM_VERSION, "terms": terms })
    }
}

/// Output of the product formula.
#[derive(Debug, Clone)]
pub struct FormulaEvaluation {
    pub h: HessenbergFunction,
    /// `(h_1(Ψ), …, h_n(Ψ))`.
    pub profile: Vec<usize>,
    pub decorated: WeightSum,
    /// Monomial coefficients keyed by the ε-exponent vector.
    pub projected: BTreeMap<Vec<i64>, BigInt>,
    /// `Π_j (n + 1 − j + h_j)`, the number of operator tuples.
    pub term_count: BigInt,
}

impl FormulaEvaluation {
    /// Read the projection as an m-basis symmetric function via the
    /// coefficients of dominant exponent vectors. Fails if any exponent is
    /// negative or the total degree is off.
    pub fn projected_symfunc(&self) -> Result<SymFunc> {
        let n = self.h.n();
        let mut f = SymFunc::zero(Basis::M, n);
        for (gamma, c) in &self.projected {
            if gamma.iter().any(|&x| x < 0) {
                return Err(Error::BadWeight(format!("negative exponent in {gamma:?}")));
            }
            if gamma.windows(2).all(|w| w[0] >= w[1]) {
                let exps: Vec<usize> = gamma.iter().map(|&x| x as usize).collect();
                f.add_term(Partition::from_exponents(&exps), &LaurentT::constant(c.clone()))?;
            }
        }
        Ok(f)
    }

    /// The q-graded projection read at dominant exponents, and whether each
    /// q-degree is itself symmetric.
    pub fn q_graded(&self, convention: QConvention) -> (SymFunc, bool) {
        let n = self.h.n();
        let graded = self.decorated.project_q(convention);
        let mut f = SymFunc::zero(Basis::M, n);
        let mut symmetric = true;
        for (gamma, c) in &graded {
            let mut sorted = gamma.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if graded.get(&sorted) != Some(c) {
                symmetric = false;
            }
            if &sorted == gamma && gamma.iter().all(|&x| x >= 0) {
                let exps: Vec<usize> = gamma.iter().map(|&x| x as usize).collect();
                f.add_term(Partition::from_exponents(&exps), c)
                    .expect("degree preserved by reflections");
            }
        }
        (f, symmetric)
    }
}

fn operator_sets(h: &HessenbergFunction) -> (Vec<usize>, Vec<Vec<ReflectionWord>>) {
    let n = h.n();
    let profile = h.to_root_ideal().h_profile().values;
    let sets = (1..=n)
        .map(|i| s_set(i, profile[i - 1], n).expect("profile satisfies h_i < i"))
        .collect();
    (profile, sets)
}

/// `Π_j (n + 1 − j + h_j(Ψ))`.
pub fn formula_term_count(h: &HessenbergFunction) -> BigInt {
    let n = h.n();
    let profile = h.to_root_ideal().h_profile();
    (1..=n)
        .map(|j| BigInt::from(n + 1 - j + profile.get(j)))
        .product()
}

/// Evaluate `S_{1,h_1} ⋯ S_{n,h_n} e^{Λ_n}`, rightmost factor first.
pub fn evaluate_formula(h: &HessenbergFunction) -> FormulaEvaluation {
    let n = h.n();
    let (profile, sets) = operator_sets(h);
    let start = AffineWeight::fundamental(n, n).expect("n ≤ n");
    let decorated = sets
        .iter()
        .rev()
        .fold(WeightSum::single(start), |acc, words| acc.apply_operator(words));
    let projected = decorated.project();
    FormulaEvaluation {
        h: h.clone(),
        profile,
        decorated,
        projected,
        term_count: formula_term_count(h),
    }
}

/// Visit `x_1 ⋯ x_n Λ_n` for every tuple in `S^1 × ⋯ × S^n`.
///
/// Each `S^i` is a chain of words where the next word adds one generator
/// on the left, so a depth-first walk costs one reflection per visited node.
fn for_each_fixed_point(h: &HessenbergFunction, mut visit: impl FnMut(&AffineWeight)) {
    let n = h.n();
    let (_, sets) = operator_sets(h);
    let chains: Vec<Vec<usize>> = sets
        .iter()
        .map(|words| {
            debug_assert!(words.windows(2).all(|p| p[1].0[1..] == p[0].0[..]));
            words.iter().skip(1).map(|w| w.0[0]).collect()
        })
        .collect();
    let start = AffineWeight::fundamental(n, n).expect("n ≤ n");
    walk(&chains, n, &start, &mut visit);
}

fn walk(chains: &[Vec<usize>], level: usize, w: &AffineWeight, visit: &mut impl FnMut(&AffineWeight)) {
    if level == 0 {
        visit(w);
        return;
    }
    let mut cur = w.clone();
    walk(chains, level - 1, &cur, visit);
    for &g in &chains[level - 1] {
        reflect_in_place(g, &mut cur);
        walk(chains, level - 1, &cur, visit);
    }
}

/// Number of operator tuples whose image of `Λ_n` projects to `X^γ`.
pub fn count_fixed_points(h: &HessenbergFunction, gamma: &[i64]) -> Result<u64> {
    let n = h.n();
    if gamma.len() != n {
        return Err(Error::BadWeight(format!(
            "{gamma:?} has {} entries, expected {n}",
            gamma.len()
        )));
    }
    if gamma.iter().any(|&x| x < 0) {
        return Err(Error::BadWeight(format!("{gamma:?} has a negative entry")));
    }
    if gamma.iter().sum::<i64>() != n as i64 {
        return Err(Error::BadWeight(format!("{gamma:?} does not sum to {n}")));
    }
    let mut count = 0;
    for_each_fixed_point(h, |w| {
        if w.eps == gamma {
            count += 1;
        }
    });
    Ok(count)
}

/// Every fixed point bucketed by its ε-vector, in one pass.
pub fn fixed_point_histogram(h: &HessenbergFunction) -> BTreeMap<Vec<i64>, u64> {
    let mut out: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for_each_fixed_point(h, |w| *out.entry(w.eps.clone()).or_default() += 1);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_hessenberg;
    use crate::symfunc::compositions;
    use rand::{Rng, SeedableRng};

    fn hf(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v.to_vec()).unwrap()
    }

    fn lam3() -> AffineWeight {
        AffineWeight::fundamental(3, 3).unwrap()
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(reflect(1, &lam3()).unwrap(), lam3());
        let r = reflect(3, &lam3()).unwrap();
        assert_eq!(r, AffineWeight::new(-1, 1, vec![2, 1, 0]));
        assert_eq!(reflect(0, &lam3()).unwrap(), r);
        assert_eq!(
            reflect(2, &r).unwrap(),
            AffineWeight::new(-1, 1, vec![2, 0, 1])
        );
        assert!(matches!(
            reflect(4, &lam3()),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        ));
    }

    #[test]
    fn reflections_are_involutions() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 2..=6 {
            for _ in 0..10_000 {
                let w = AffineWeight::new(
                    rng.gen_range(-20..=20),
                    rng.gen_range(-5..=5),
                    (0..n).map(|_| rng.gen_range(-10..=10)).collect(),
                );
                for i in 1..=n {
                    let once = reflect(i, &w).unwrap();
                    assert_eq!(reflect(i, &once).unwrap(), w);
                    assert_eq!(once.c_lambda0, w.c_lambda0);
                }
            }
        }
    }

    #[test]
    fn s_set_examples() {
        let words = |i, h| s_set(i, h, 3).unwrap();
        assert_eq!(
            words(3, 1),
            vec![ReflectionWord::identity(), ReflectionWord(vec![3])]
        );
        assert_eq!(
            words(2, 0),
            vec![ReflectionWord::identity(), ReflectionWord(vec![2])]
        );
        assert_eq!(
            words(1, 0),
            vec![
                ReflectionWord::identity(),
                ReflectionWord(vec![1]),
                ReflectionWord(vec![2, 1])
            ]
        );
        assert!(matches!(s_set(2, 2, 3), Err(Error::InvalidProfile { .. })));
        assert!(matches!(s_set(4, 0, 3), Err(Error::IndexOutOfRange { .. })));
        // longest word wraps through the affine node: s_1 s_0 s_3 s_2 for n=4
        let long = s_set(2, 1, 4).unwrap();
        assert_eq!(long.last().unwrap(), &ReflectionWord(vec![4, 3, 2]));
        let long = s_set(3, 2, 4).unwrap();
        assert_eq!(long.last().unwrap(), &ReflectionWord(vec![1, 4, 3]));
    }

    #[test]
    fn s_set_sizes() {
        for n in 1..=7 {
            for i in 1..=n {
                for h in 0..i {
                    assert_eq!(s_set(i, h, n).unwrap().len(), n - i + h + 1);
                }
            }
        }
    }

    #[test]
    fn worked_example() {
        let eval = evaluate_formula(&hf(&[2, 3, 3]));
        assert_eq!(eval.profile, vec![0, 0, 1]);
        let mut expected = BTreeMap::new();
        for g in [
            [2, 1, 0],
            [2, 0, 1],
            [1, 2, 0],
            [0, 2, 1],
            [1, 0, 2],
            [0, 1, 2],
        ] {
            expected.insert(g.to_vec(), BigInt::one());
        }
        expected.insert(vec![1, 1, 1], BigInt::from(6));
        assert_eq!(eval.projected, expected);
        assert_eq!(eval.term_count, BigInt::from(12));
        for (w, _) in eval.decorated.terms() {
            let is_21 = w.eps.iter().any(|&x| x == 2);
            assert_eq!(w.c_delta.abs(), i64::from(is_21), "{w}");
        }
        let (q_neg, sym) = eval.q_graded(QConvention::NegativeDelta);
        assert!(sym);
        let m21 = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(q_neg.coeff(&m21), LaurentT::t_pow(1));
        let (q_pos, _) = eval.q_graded(QConvention::PositiveDelta);
        assert_eq!(q_pos.coeff(&m21), LaurentT::t_pow(-1));
        assert_eq!(q_pos.coeff(&Partition::column(3)), LaurentT::constant(6));
    }

    #[test]
    fn complete_and_empty() {
        let eval = evaluate_formula(&hf(&[3, 3, 3]));
        assert_eq!(
            eval.projected,
            [(vec![1, 1, 1], BigInt::from(6))].into_iter().collect()
        );
        let eval = evaluate_formula(&hf(&[1, 2, 3]));
        assert_eq!(eval.decorated.mass(), BigInt::from(27));
        // (X1+X2+X3)^3: multinomial coefficients
        for (g, c) in &eval.projected {
            let fact = |k: i64| (1..=k).product::<i64>();
            let multinomial = 6 / g.iter().map(|&x| fact(x)).product::<i64>();
            assert_eq!(c, &BigInt::from(multinomial));
        }
        assert_eq!(eval.projected.len(), 10);
    }

    #[test]
    fn fixed_point_examples() {
        let h = hf(&[2, 3, 3]);
        assert_eq!(count_fixed_points(&h, &[2, 1, 0]).unwrap(), 1);
        assert_eq!(count_fixed_points(&h, &[1, 1, 1]).unwrap(), 6);
        assert_eq!(count_fixed_points(&h, &[3, 0, 0]).unwrap(), 0);
        assert!(count_fixed_points(&h, &[2, 2, 0]).is_err());
        assert!(count_fixed_points(&h, &[4, -1, 0]).is_err());
        assert!(count_fixed_points(&h, &[3, 0]).is_err());
    }

    #[test]
    fn level_preserved_and_symmetric_projection() {
        for n in 1..=5 {
            for h in enumerate_hessenberg(n) {
                let eval = evaluate_formula(&h);
                assert!(eval.decorated.terms().all(|(w, _)| w.c_lambda0 == 1));
                assert_eq!(eval.decorated.mass(), eval.term_count);
                for (g, c) in &eval.projected {
                    let mut sorted = g.clone();
                    sorted.sort_unstable_by(|a, b| b.cmp(a));
                    assert_eq!(eval.projected.get(&sorted), Some(c), "{h} {g:?}");
                }
            }
        }
    }

    #[test]
    fn fixed_points_match_operator_product() {
        for n in 1..=5 {
            for h in enumerate_hessenberg(n) {
                let eval = evaluate_formula(&h);
                let hist = fixed_point_histogram(&h);
                let total: u64 = hist.values().sum();
                assert_eq!(BigInt::from(total), eval.term_count);
                for g in compositions(n, n) {
                    let gi: Vec<i64> = g.iter().map(|&x| x as i64).collect();
                    let want = eval.projected.get(&gi).cloned().unwrap_or_default();
                    let got = count_fixed_points(&h, &gi).unwrap();
                    assert_eq!(BigInt::from(got), want, "{h} {gi:?}");
                }
            }
        }
    }
}
