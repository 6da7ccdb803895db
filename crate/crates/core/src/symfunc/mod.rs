//! Exact symmetric functions with Laurent-in-`t` coefficients.
//!
//! Everything is homogeneous: a [`SymFunc`] carries its degree and a basis
//! tag, and stores one [`LaurentT`] per partition of that degree. The
//! monomial basis is the working basis; Schur and elementary coefficients
//! are reached through integer unitriangular transition matrices, so no
//! rationals ever appear.

mod elementary;
mod kostka;
mod laurent;
mod lr;
mod partition;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use elementary::{elementary_table, ElementaryTable};
pub use kostka::{install_kostka_table, kostka, kostka_table, KostkaTable, KOSTKA_VERSION};
pub use laurent::{t_factorial, t_integer, LaurentT};
pub use lr::{lr_coefficient, lr_coefficient_via_product};
pub use partition::{compositions, partitions, Partition};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Monomial `m_λ`.
    M,
    /// Schur `s_λ`.
    S,
    /// Elementary `e_λ`.
    E,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::M, Basis::S, Basis::E];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::S => "s",
            Basis::E => "e",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::M),
            "s" => Ok(Basis::S),
            "e" => Ok(Basis::E),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A homogeneous symmetric function of fixed degree in one basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, LaurentT>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit, `m_∅ = s_∅ = e_∅`.
    pub fn one() -> Self {
        Self::basis_element(Basis::M, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut f = Self::zero(basis, degree);
        f.coeffs.insert(lambda, LaurentT::one());
        f
    }

    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, LaurentT)>,
    {
        let mut f = Self::zero(basis, degree);
        for (lam, c) in terms {
            f.add_term(lam, &c)?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentT) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                actual: lambda.size(),
            });
        }
        self.add_term_unchecked(lambda, c);
        Ok(())
    }

    fn add_term_unchecked(&mut self, lambda: Partition, c: &LaurentT) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> LaurentT {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing lexicographic order of partitions.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &LaurentT)> + '_ {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentT) -> LaurentT) -> SymFunc {
        let mut out = Self::zero(self.basis, self.degree);
        for (lam, c) in &self.coeffs {
            out.add_term_unchecked(lam.clone(), &f(c));
        }
        out
    }

    pub fn scale(&self, c: &LaurentT) -> SymFunc {
        self.map_coeffs(|x| x * c)
    }

    /// Specialize `t = 1`.
    pub fn at_t_one(&self) -> SymFunc {
        self.map_coeffs(|c| LaurentT::constant(c.eval_at_one()))
    }

    /// The integer symmetric function multiplying `t^{half/2}`.
    pub fn t_coefficient(&self, half: i64) -> SymFunc {
        self.map_coeffs(|c| LaurentT::constant(c.coeff_half(half)))
    }

    /// All half-exponents occurring in any coefficient.
    pub fn t_support(&self) -> Vec<i64> {
        let mut all: Vec<i64> = self
            .coeffs
            .values()
            .flat_map(|c| c.terms().map(|(k, _)| k))
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    pub fn convert(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let m = self.to_monomial();
        match target {
            Basis::M => m,
            Basis::S => monomial_to_schur(&m),
            Basis::E => monomial_to_elementary(&m),
        }
    }

    fn to_monomial(&self) -> SymFunc {
        match self.basis {
            Basis::M => self.clone(),
            Basis::S => {
                let table = kostka_table(self.degree);
                let mut out = Self::zero(Basis::M, self.degree);
                for (lam, c) in &self.coeffs {
                    for (mu, k) in table.row(lam) {
                        out.add_term_unchecked(mu.clone(), &c.scale(&BigInt::from(k)));
                    }
                }
                out
            }
            Basis::E => {
                let table = elementary_table(self.degree);
                let mut out = Self::zero(Basis::M, self.degree);
                for (mu, c) in &self.coeffs {
                    for (lam, &k) in table.row(mu) {
                        out.add_term_unchecked(lam.clone(), &c.scale(&BigInt::from(k)));
                    }
                }
                out
            }
        }
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (lam, c) in &other.convert(self.basis).coeffs {
            out.add_term_unchecked(lam.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.map_coeffs(|c| -c))
    }

    fn check_degree(&self, other: &SymFunc) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch {
                expected: self.degree,
                actual: other.degree,
            });
        }
        Ok(())
    }

    /// Equality as symmetric functions, regardless of the stored basis.
    pub fn same_function(&self, other: &SymFunc) -> bool {
        self.degree == other.degree && self.convert(Basis::M) == other.convert(Basis::M)
    }

    /// Product, computed by expanding into monomials in
    /// `max(deg f + deg g, 1)` variables. The result is in the m-basis.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let f = self.convert(Basis::M);
        let g = other.convert(Basis::M);
        let degree = f.degree + g.degree;
        let vars = degree.max(1);
        let f_monomials: Vec<(Vec<usize>, &LaurentT)> = f
            .coeffs
            .iter()
            .flat_map(|(lam, c)| lam.monomial_exponents(vars).into_iter().map(move |e| (e, c)))
            .collect();
        let mut out = Self::zero(Basis::M, degree);
        for nu in partitions(degree) {
            let target = nu.padded(vars);
            let mut acc = LaurentT::zero();
            for (a, c) in &f_monomials {
                if a.iter().zip(&target).all(|(x, y)| x <= y) {
                    let rest: Vec<usize> = target.iter().zip(a).map(|(y, x)| y - x).collect();
                    if let Some(d) = g.coeffs.get(&Partition::from_exponents(&rest)) {
                        acc += &(*c * d);
                    }
                }
            }
            out.add_term_unchecked(nu, &acc);
        }
        out
    }

    pub fn positivity_and_palindromy(&self, basis: Basis, center_half: i64) -> PositivityReport {
        let f = self.convert(basis);
        PositivityReport {
            positive: f.coeffs.values().all(LaurentT::is_nonnegative),
            palindromic: f.coeffs.values().all(|c| c.is_palindromic(center_half)),
        }
    }

    pub fn to_json(&self) -> SymFuncJson {
        SymFuncJson {
            version: SYMFUNC_VERSION.to_string(),
            basis: self.basis,
            degree: self.degree,
            terms: self
                .coeffs
                .iter()
                .rev()
                .map(|(lam, c)| TermJson {
                    partition: lam.parts().to_vec(),
                    coeff: c.terms().map(|(k, v)| (k, v.to_string())).collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &SymFuncJson) -> Result<Self> {
        if j.version != SYMFUNC_VERSION {
            return Err(Error::Parse(format!("unsupported version {:?}", j.version)));
        }
        let mut f = Self::zero(j.basis, j.degree);
        for term in &j.terms {
            let lam = Partition::new(term.partition.clone())?;
            let c = LaurentT::from_half_pairs(
                term.coeff
                    .iter()
                    .map(|(k, v)| {
                        v.parse::<BigInt>()
                            .map(|v| (*k, v))
                            .map_err(|_| Error::Parse(format!("bad integer {v:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?,
            );
            f.add_term(lam, &c)?;
        }
        Ok(f)
    }
}

/// Back-substitute along lexicographic order (which refines dominance),
/// peeling the leading `m_λ` with the row `s_λ = m_λ + lower terms`.
fn monomial_to_schur(m: &SymFunc) -> SymFunc {
    let table = kostka_table(m.degree);
    let mut work = m.coeffs.clone();
    let mut out = SymFunc::zero(Basis::S, m.degree);
    while let Some((lam, c)) = work.pop_last() {
        for (mu, k) in table.row(&lam) {
            if *mu == lam {
                continue;
            }
            let slot = work.entry(mu.clone()).or_default();
            *slot -= &c.scale(&BigInt::from(k));
            if slot.is_zero() {
                work.remove(mu);
            }
        }
        out.add_term_unchecked(lam, &c);
    }
    out
}

/// Same idea with `e_{λ'} = m_λ + lower terms`.
fn monomial_to_elementary(m: &SymFunc) -> SymFunc {
    let table = elementary_table(m.degree);
    let mut work = m.coeffs.clone();
    let mut out = SymFunc::zero(Basis::E, m.degree);
    while let Some((lam, c)) = work.pop_last() {
        let mu = lam.transpose();
        for (nu, &k) in table.row(&mu) {
            if *nu == lam {
                debug_assert_eq!(k, 1);
                continue;
            }
            let slot = work.entry(nu.clone()).or_default();
            *slot -= &c.scale(&BigInt::from(k));
            if slot.is_zero() {
                work.remove(nu);
            }
        }
        out.add_term_unchecked(mu, &c);
    }
    out
}

impl SymFunc {
    /// Render with `var` as the coefficient indeterminate, larger
    /// partitions first: `t*s[2,1] + (1+2t+t^2)*s[1,1,1]`.
    pub fn format_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let sym = self.basis.symbol();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (lam, c) in self.coeffs.iter().rev() {
            let parts: Vec<String> = lam.parts().iter().map(|p| p.to_string()).collect();
            let element = format!("{sym}[{}]", parts.join(","));
            out.push(if c.is_one() {
                element
            } else if c.len() == 1 && c == &(-LaurentT::one()) {
                format!("-{element}")
            } else if c.len() == 1 {
                format!("{}*{element}", c.format_in(var))
            } else {
                format!("({})*{element}", c.format_in(var))
            });
        }
        out.join(" + ")
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_in("t"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub positive: bool,
    pub palindromic: bool,
}

pub const SYMFUNC_VERSION: &str = "symfunc-v1";

/// Wire form of a [`SymFunc`]. Coefficients are `[half-exponent, integer]`
/// pairs; integers are written as JSON numbers of arbitrary size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncJson {
    pub version: String,
    pub basis: Basis,
    pub degree: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<usize>,
    #[serde(with = "bigint_pairs")]
    pub coeff: Vec<(i64, String)>,
}

mod bigint_pairs {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::{Number, Value};

    pub fn serialize<S: Serializer>(pairs: &[(i64, String)], s: S) -> Result<S::Ok, S::Error> {
        let values: Vec<(i64, Number)> = pairs
            .iter()
            .map(|(k, v)| Ok((*k, v.parse::<Number>().map_err(serde::ser::Error::custom)?)))
            .collect::<Result<_, S::Error>>()?;
        values.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(i64, String)>, D::Error> {
        let raw: Vec<(i64, Value)> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| match v {
                Value::Number(n) => Ok((k, n.to_string())),
                Value::String(s) => Ok((k, s)),
                other => Err(D::Error::custom(format!("bad coefficient {other}"))),
            })
            .collect()
    }
}

#[cfg(test)]
mod tests;
