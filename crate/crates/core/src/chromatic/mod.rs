//! The chromatic quasisymmetric function of `Γ_h` by direct enumeration of
//! proper colorings, and the quantities derived from it.

mod verify;

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::combinatorics::HessenbergFunction;
use crate::symfunc::{t_factorial, Basis, LaurentT, Partition, SymFunc};

pub use verify::{verify_laws, Status, Suite, SuiteSelection, SummaryRow, VerifyEntry, VerifyReport, VERIFY_VERSION};

/// Walk every proper coloring `κ: [n] → [colors]` of `Γ_h`, handing the
/// visitor the coloring and its ascent count.
fn for_each_proper_coloring(h: &HessenbergFunction, colors: usize, mut visit: impl FnMut(&[usize], u32)) {
    let n = h.n();
    let lower = h.unit_interval_graph().lower_neighbours();
    let mut kappa = vec![0usize; n + 1];
    fn rec(
        v: usize,
        n: usize,
        colors: usize,
        asc: u32,
        lower: &[Vec<usize>],
        kappa: &mut [usize],
        visit: &mut dyn FnMut(&[usize], u32),
    ) {
        if v > n {
            visit(&kappa[1..], asc);
            return;
        }
        'color: for c in 0..colors {
            let mut gained = 0;
            for &u in &lower[v] {
                if kappa[u] == c {
                    continue 'color;
                }
                if kappa[u] < c {
                    gained += 1;
                }
            }
            kappa[v] = c;
            rec(v + 1, n, colors, asc + gained, lower, kappa, visit);
        }
    }
    rec(1, n, colors, 0, &lower, &mut kappa, &mut visit);
}

/// Monomial data of `X_h(t)` in `n` variables: `(exponent vector, ascents)`
/// mapped to the number of proper colorings producing it.
pub fn chromatic_monomials(h: &HessenbergFunction) -> BTreeMap<(Vec<usize>, u32), u64> {
    let n = h.n();
    let mut out: BTreeMap<(Vec<usize>, u32), u64> = BTreeMap::new();
    for_each_proper_coloring(h, n, |kappa, asc| {
        let mut content = vec![0usize; n];
        for &c in kappa {
            content[c] += 1;
        }
        *out.entry((content, asc)).or_default() += 1;
    });
    out
}

/// `X_h(t)` in the monomial basis.
pub fn chromatic_qsym_m(h: &HessenbergFunction) -> SymFunc {
    let n = h.n();
    let mut counts: BTreeMap<Partition, BTreeMap<u32, u64>> = BTreeMap::new();
    for_each_proper_coloring(h, n, |kappa, asc| {
        let mut content = vec![0usize; n];
        for &c in kappa {
            content[c] += 1;
        }
        // The coefficient of m_λ is the coefficient of the dominant monomial x^λ.
        if content.windows(2).all(|w| w[0] >= w[1]) {
            *counts
                .entry(Partition::from_exponents(&content))
                .or_default()
                .entry(asc)
                .or_default() += 1;
        }
    });
    let mut f = SymFunc::zero(Basis::M, n);
    for (lam, by_asc) in counts {
        let c = LaurentT::from_half_pairs(
            by_asc
                .into_iter()
                .map(|(a, k)| (2 * i64::from(a), BigInt::from(k))),
        );
        f.add_term(lam, &c).expect("content sums to n");
    }
    f
}

/// `X_h(t) = Σ_{proper κ} t^{asc(κ)} x_κ`, in the Schur basis.
pub fn chromatic_qsym(h: &HessenbergFunction) -> SymFunc {
    chromatic_qsym_m(h).convert(Basis::S)
}

/// `gdim V^λ` for each `λ`, i.e. `t^{|Ψ_h|}` times the Schur coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMultiplicities {
    pub entries: BTreeMap<Partition, LaurentT>,
    pub shift: usize,
}

impl GradedMultiplicities {
    pub fn from_schur(x: &SymFunc, shift: usize) -> Self {
        let x = x.convert(Basis::S);
        let entries = x
            .terms()
            .map(|(lam, c)| (lam.clone(), c.shift_half(2 * shift as i64)))
            .collect();
        GradedMultiplicities { entries, shift }
    }

    /// Reassemble `t^{−shift} Σ s_λ · gdim V^λ`.
    pub fn to_symfunc(&self, degree: usize) -> SymFunc {
        SymFunc::from_terms(
            Basis::S,
            degree,
            self.entries
                .iter()
                .map(|(lam, c)| (lam.clone(), c.shift_half(-2 * self.shift as i64))),
        )
        .expect("entries share one degree")
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(LaurentT::is_nonnegative)
    }

    pub fn only_integer_powers(&self) -> bool {
        self.entries.values().all(LaurentT::only_integer_powers)
    }
}

pub fn graded_multiplicities(h: &HessenbergFunction) -> GradedMultiplicities {
    GradedMultiplicities::from_schur(&chromatic_qsym(h), h.to_root_ideal().len())
}

/// `Π_{j=1}^n (n + 1 − j + h_j(Ψ))`.
pub fn euler_char(h: &HessenbergFunction) -> u64 {
    let n = h.n();
    let profile = h.to_root_ideal().h_profile();
    (1..=n).map(|j| (n + 1 - j + profile.get(j)) as u64).product()
}

/// Number of proper colorings of `Γ_h` with `k` colors.
pub fn coloring_count(h: &HessenbergFunction, k: usize) -> u64 {
    let mut count = 0;
    for_each_proper_coloring(h, k, |_, _| count += 1);
    count
}

/// `[n]_t! · e_n`, the value on the complete graph.
pub fn complete_graph_value(n: usize) -> SymFunc {
    SymFunc::basis_element(Basis::E, Partition::new(vec![n]).expect("n > 0"))
        .scale(&t_factorial(n))
}

/// Evaluate at `X_1 = ⋯ = X_n = 1`: each `m_λ` contributes its number of
/// distinct monomials in `n` variables.
pub fn principal_specialization_at_one(f: &SymFunc, vars: usize) -> BigInt {
    f.convert(Basis::M)
        .terms()
        .map(|(lam, c)| {
            if lam.len() > vars {
                BigInt::from(0)
            } else {
                c.eval_at_one() * BigInt::from(lam.monomial_exponents(vars).len())
            }
        })
        .sum()
}
