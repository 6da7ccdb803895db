use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    chromatic_qsym, complete_graph_value, coloring_count, euler_char, principal_specialization_at_one,
    GradedMultiplicities,
};
use crate::affine_weyl::{evaluate_formula, fixed_point_histogram};
use crate::combinatorics::{enumerate_hessenberg, find_modular_triples, HessenbergFunction};
use crate::error::{Error, Result};
use crate::symfunc::{Basis, LaurentT, SymFunc};

pub const VERIFY_VERSION: &str = "verify-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Operator product projected at `q = 1` equals the oracle at `t = 1`.
    Formula,
    /// Product formula, coloring count, fixed points and `X_h(1,…,1)` agree.
    Euler,
    /// Complete graph gives `[n]_t! e_n`.
    Complete,
    /// Disconnected graphs factor over components.
    Factorization,
    /// `(1+t) X_h = X_{h0} + t X_{h1}` on every detected triple.
    Modular,
    /// Diagnostic: the column-type modular condition matched.
    ModularBranch2,
    SchurPositivity,
    /// Each Schur coefficient is palindromic about `t^{|E|}`.
    Palindromicity,
    /// Graded multiplicities are nonnegative and in integer powers of `t`.
    Gdim,
    /// e-positivity at `t = 1`.
    EPositivity,
    /// e-positivity of every `t`-coefficient; a failure is a finding.
    EPositivityGraded,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Formula,
        Suite::Euler,
        Suite::Complete,
        Suite::Factorization,
        Suite::Modular,
        Suite::ModularBranch2,
        Suite::SchurPositivity,
        Suite::Palindromicity,
        Suite::Gdim,
        Suite::EPositivity,
        Suite::EPositivityGraded,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Formula => "formula",
            Suite::Euler => "euler",
            Suite::Complete => "complete",
            Suite::Factorization => "factorization",
            Suite::Modular => "modular",
            Suite::ModularBranch2 => "modular-branch2",
            Suite::SchurPositivity => "schur-positivity",
            Suite::Palindromicity => "palindromicity",
            Suite::Gdim => "gdim",
            Suite::EPositivity => "e-positivity",
            Suite::EPositivityGraded => "e-positivity-graded",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Which suites to run. Parses `all`, a suite name, the groups `qs`
/// (Schur positivity and palindromicity) and `epos` (both e-positivity
/// suites), or a comma-separated mix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteSelection(pub BTreeSet<Suite>);

impl SuiteSelection {
    pub fn all() -> Self {
        SuiteSelection(Suite::ALL.into_iter().collect())
    }

    pub fn contains(&self, s: Suite) -> bool {
        self.0.contains(&s)
    }
}

impl FromStr for SuiteSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut set = BTreeSet::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok {
                "all" => set.extend(Suite::ALL),
                "qs" => set.extend([Suite::SchurPositivity, Suite::Palindromicity]),
                "epos" => set.extend([Suite::EPositivity, Suite::EPositivityGraded]),
                other => {
                    let suite: Suite = other.parse()?;
                    set.insert(suite);
                    if suite == Suite::Modular {
                        set.insert(Suite::ModularBranch2);
                    }
                }
            }
        }
        if set.is_empty() {
            return Err(Error::Parse("empty suite selection".into()));
        }
        Ok(SuiteSelection(set))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not a correctness failure: data against an open conjecture or a
    /// diagnostic worth surfacing.
    Finding,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub h: String,
    pub suite: Suite,
    pub status: Status,
    pub lhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub version: String,
    pub n: usize,
    pub functions: usize,
    pub entries: Vec<VerifyEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub n: usize,
    pub suite: Suite,
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
}

pub const SUMMARY_CSV_HEADER: &str = "n,suite,total,pass,fail,finding";

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &VerifyEntry> + '_ {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn findings(&self) -> impl Iterator<Item = &VerifyEntry> + '_ {
        self.entries.iter().filter(|e| e.status == Status::Finding)
    }

    pub fn is_success(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn suite_entries(&self, suite: Suite) -> impl Iterator<Item = &VerifyEntry> + '_ {
        self.entries.iter().filter(move |e| e.suite == suite)
    }

    /// One row per suite that produced entries, in suite order.
    pub fn summary(&self) -> Vec<SummaryRow> {
        let mut rows: BTreeMap<Suite, SummaryRow> = BTreeMap::new();
        for e in &self.entries {
            let row = rows.entry(e.suite).or_insert(SummaryRow {
                n: self.n,
                suite: e.suite,
                total: 0,
                pass: 0,
                fail: 0,
                finding: 0,
            });
            row.total += 1;
            match e.status {
                Status::Pass => row.pass += 1,
                Status::Fail => row.fail += 1,
                Status::Finding => row.finding += 1,
            }
        }
        rows.into_values().collect()
    }

    pub fn summary_csv(reports: &[&VerifyReport]) -> String {
        let mut out = String::from(SUMMARY_CSV_HEADER);
        out.push('\n');
        for r in reports {
            for row in r.summary() {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    row.n, row.suite, row.total, row.pass, row.fail, row.finding
                ));
            }
        }
        out
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn h_label(h: &HessenbergFunction) -> String {
    h.values()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn both_bases(f: &SymFunc) -> String {
    format!("s: {} ; m: {}", f.convert(Basis::S), f.convert(Basis::M))
}

fn entry(h: &HessenbergFunction, suite: Suite, status: Status, lhs: String) -> VerifyEntry {
    VerifyEntry {
        h: h_label(h),
        suite,
        status,
        lhs,
        rhs: None,
        note: None,
    }
}

/// Equality check; on mismatch both sides are printed in the s and m bases.
fn compare(h: &HessenbergFunction, suite: Suite, lhs: &SymFunc, rhs: &SymFunc) -> VerifyEntry {
    if lhs.same_function(rhs) {
        entry(h, suite, Status::Pass, lhs.to_string())
    } else {
        VerifyEntry {
            rhs: Some(both_bases(rhs)),
            ..entry(h, suite, Status::Fail, both_bases(lhs))
        }
    }
}

fn check_one(
    h: &HessenbergFunction,
    x: &SymFunc,
    suites: &SuiteSelection,
) -> Vec<VerifyEntry> {
    let n = h.n();
    let mut out = Vec::new();

    if suites.contains(Suite::Formula) {
        let eval = evaluate_formula(h);
        let oracle = x.at_t_one().convert(Basis::M);
        out.push(match eval.projected_symfunc() {
            Ok(proj) => compare(h, Suite::Formula, &proj, &oracle),
            Err(e) => VerifyEntry {
                rhs: Some(both_bases(&oracle)),
                ..entry(h, Suite::Formula, Status::Fail, e.to_string())
            },
        });
    }

    if suites.contains(Suite::Euler) {
        let product = euler_char(h);
        let colorings = coloring_count(h, n);
        let fixed: u64 = fixed_point_histogram(h).values().sum();
        let specialized = principal_specialization_at_one(x, n);
        let ok = product == colorings
            && product == fixed
            && BigInt::from(product) == specialized;
        let lhs = format!(
            "euler_char={product} colorings={colorings} fixed_points={fixed} X(1..1)={specialized}"
        );
        out.push(entry(h, Suite::Euler, if ok { Status::Pass } else { Status::Fail }, lhs));
    }

    if suites.contains(Suite::Complete) && *h == HessenbergFunction::complete(n) {
        out.push(compare(h, Suite::Complete, x, &complete_graph_value(n)));
    }

    if suites.contains(Suite::Factorization) && !h.is_connected() {
        let product = h
            .connected_components()
            .iter()
            .map(chromatic_qsym)
            .fold(SymFunc::one(), |acc, f| acc.multiply(&f));
        let mut e = compare(h, Suite::Factorization, x, &product);
        let comps: Vec<String> = h.connected_components().iter().map(|c| c.to_string()).collect();
        e.note = Some(format!("components {}", comps.join(" ")));
        out.push(e);
    }

    let schur = x.convert(Basis::S);
    if suites.contains(Suite::SchurPositivity) {
        let ok = schur.terms().all(|(_, c)| c.is_nonnegative());
        out.push(entry(
            h,
            Suite::SchurPositivity,
            if ok { Status::Pass } else { Status::Fail },
            schur.to_string(),
        ));
    }

    if suites.contains(Suite::Palindromicity) {
        let edges = h.edge_count();
        let report = schur.positivity_and_palindromy(Basis::S, 2 * edges as i64);
        let mut e = entry(
            h,
            Suite::Palindromicity,
            if report.palindromic { Status::Pass } else { Status::Fail },
            schur.to_string(),
        );
        e.note = Some(format!("center t^{edges}"));
        out.push(e);
    }

    if suites.contains(Suite::Gdim) {
        let g = GradedMultiplicities::from_schur(&schur, h.to_root_ideal().len());
        let ok = g.is_nonnegative() && g.only_integer_powers();
        let table: Vec<String> = g
            .entries
            .iter()
            .rev()
            .map(|(lam, c)| format!("{lam}: {c}"))
            .collect();
        let mut e = entry(h, Suite::Gdim, if ok { Status::Pass } else { Status::Fail }, table.join("; "));
        e.note = Some(format!("shift {}", g.shift));
        out.push(e);
    }

    if suites.contains(Suite::EPositivity) {
        let e1 = x.at_t_one().convert(Basis::E);
        let ok = e1.terms().all(|(_, c)| c.is_nonnegative());
        out.push(entry(
            h,
            Suite::EPositivity,
            if ok { Status::Pass } else { Status::Fail },
            e1.to_string(),
        ));
    }

    if suites.contains(Suite::EPositivityGraded) {
        let e = x.convert(Basis::E);
        let ok = e.terms().all(|(_, c)| c.is_nonnegative());
        out.push(entry(
            h,
            Suite::EPositivityGraded,
            if ok { Status::Pass } else { Status::Finding },
            e.to_string(),
        ));
    }

    out
}

/// Run the selected identity checks over every Hessenberg function of size
/// `n`. Work is spread over the current rayon pool; the report order is
/// fixed by enumeration order regardless of scheduling.
pub fn verify_laws(n: usize, suites: &SuiteSelection) -> VerifyReport {
    let functions: Vec<HessenbergFunction> = enumerate_hessenberg(n).collect();
    let values: Vec<SymFunc> = functions.par_iter().map(chromatic_qsym).collect();

    let mut entries: Vec<VerifyEntry> = functions
        .par_iter()
        .zip(values.par_iter())
        .map(|(h, x)| check_one(h, x, suites))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();

    if suites.contains(Suite::Modular) || suites.contains(Suite::ModularBranch2) {
        let by_h: HashMap<&HessenbergFunction, &SymFunc> = functions.iter().zip(&values).collect();
        let one_plus_t = LaurentT::from_coeffs([1, 1]);
        let t = LaurentT::t_pow(1);
        for triple in find_modular_triples(n) {
            let (h0, h, h1) = triple.hessenberg_triple();
            let note = format!(
                "h0={} h1={} i={} branch={}",
                h0,
                h1,
                triple.i,
                triple.branch()
            );
            if suites.contains(Suite::Modular) {
                let lhs = by_h[&h].scale(&one_plus_t);
                let rhs = by_h[&h0]
                    .add(&by_h[&h1].scale(&t))
                    .expect("same degree");
                let mut e = compare(&h, Suite::Modular, &lhs, &rhs);
                e.note = Some(note.clone());
                entries.push(e);
            }
            if triple.branch2 && suites.contains(Suite::ModularBranch2) {
                let mut e = entry(
                    &h,
                    Suite::ModularBranch2,
                    Status::Finding,
                    "column-type modular condition matched".to_string(),
                );
                e.note = Some(note);
                entries.push(e);
            }
        }
    }

    VerifyReport {
        version: VERIFY_VERSION.to_string(),
        n,
        functions: functions.len(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_all_pass() {
        let report = verify_laws(3, &SuiteSelection::all());
        assert_eq!(report.functions, 5);
        assert!(report.is_success());
        assert_eq!(report.findings().count(), 0);
        assert_eq!(report.suite_entries(Suite::Modular).count(), 0);
        assert_eq!(report.suite_entries(Suite::Formula).count(), 5);
        assert_eq!(report.suite_entries(Suite::Complete).count(), 1);
        // (1,2,3), (1,3,3), (2,2,3) are disconnected
        assert_eq!(report.suite_entries(Suite::Factorization).count(), 3);
    }

    #[test]
    fn n4_modular_witness() {
        let report = verify_laws(4, &"modular".parse().unwrap());
        let witness = report
            .suite_entries(Suite::Modular)
            .find(|e| e.h == "2,3,4,4")
            .expect("witness");
        assert_eq!(witness.status, Status::Pass);
        assert_eq!(
            witness.note.as_deref(),
            Some("h0=(3,3,4,4) h1=(2,2,4,4) i=1 branch=1")
        );
        assert!(report.is_success());
    }

    #[test]
    fn factorization_example() {
        let h = HessenbergFunction::new(vec![2, 2, 3]).unwrap();
        let x = chromatic_qsym(&h);
        let e2 = SymFunc::basis_element(Basis::E, crate::symfunc::Partition::new(vec![2]).unwrap());
        let e1 = SymFunc::basis_element(Basis::E, crate::symfunc::Partition::new(vec![1]).unwrap());
        let expected = e2.multiply(&e1).scale(&LaurentT::from_coeffs([1, 1]));
        assert!(x.same_function(&expected));
    }

    #[test]
    fn mismatch_reports_both_bases() {
        let h = HessenbergFunction::complete(2);
        let a = chromatic_qsym(&h);
        let b = a.scale(&LaurentT::t_pow(1));
        let e = compare(&h, Suite::Complete, &a, &b);
        assert_eq!(e.status, Status::Fail);
        assert!(e.lhs.starts_with("s: ") && e.lhs.contains(" ; m: "));
        assert!(e.rhs.unwrap().contains("t^2"));
    }

    #[test]
    fn selection_parsing() {
        let all: SuiteSelection = "all".parse().unwrap();
        assert_eq!(all, SuiteSelection::all());
        let qs: SuiteSelection = "qs,formula".parse().unwrap();
        assert_eq!(qs.0.len(), 3);
        assert!("bogus".parse::<SuiteSelection>().is_err());
        assert!("".parse::<SuiteSelection>().is_err());
    }

    #[test]
    fn summary_and_json() {
        let report = verify_laws(3, &SuiteSelection::all());
        let csv = VerifyReport::summary_csv(&[&report]);
        assert!(csv.starts_with("n,suite,total,pass,fail,finding\n"));
        assert!(csv.contains("3,formula,5,5,0,0\n"));
        let json = report.to_json_pretty();
        let back: VerifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert!(json.contains("\"version\": \"verify-v1\""));
    }
}
