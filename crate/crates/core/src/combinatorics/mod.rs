//! Hessenberg functions, root ideals, unit interval graphs and the
//! dictionary between them.
//!
//! Indices are 1-based throughout to match the usual notation: a root
//! `(i, j)` with `i < j` stands for `ε_i − ε_j`, and `h.value(i)` is `h(i)`.

mod hessenberg;
mod modular;
mod root_ideal;

pub(crate) use hessenberg::parse_usize_list as parse_list;
pub use hessenberg::{enumerate_hessenberg, HessenbergFunction, HessenbergIter, UnitIntervalGraph};
pub use modular::{find_modular_triples, ModularTriple};
pub use root_ideal::{HProfile, RootIdeal};

/// Catalan number `C_n`, the count of Hessenberg functions of size `n`.
pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let got: Vec<u64> = (0..11).map(catalan).collect();
        assert_eq!(got, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
    }
}
