use super::hessenberg::{enumerate_hessenberg, HessenbergFunction};
use super::root_ideal::RootIdeal;

/// A triple `Ψ0 ⊊ Ψ ⊊ Ψ1` of root ideals to which the modular law applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularTriple {
    pub psi0: RootIdeal,
    pub psi: RootIdeal,
    pub psi1: RootIdeal,
    /// Reflection index, `1 ≤ i < n`.
    pub i: usize,
    /// The row-type condition: `(i,j) ∈ Ψ∖Ψ0` and `(i+1,j) ∈ Ψ1∖Ψ`.
    pub branch1: bool,
    /// The column-type condition: `(j,i) ∈ Ψ∖Ψ0` and `(j,i+1) ∈ Ψ1∖Ψ`.
    pub branch2: bool,
}

impl ModularTriple {
    /// The disjunct that fired, preferring the first.
    pub fn branch(&self) -> u8 {
        if self.branch1 {
            1
        } else {
            2
        }
    }

    pub fn hessenberg_triple(
        &self,
    ) -> (HessenbergFunction, HessenbergFunction, HessenbergFunction) {
        (
            self.psi0.to_hessenberg(),
            self.psi.to_hessenberg(),
            self.psi1.to_hessenberg(),
        )
    }

    /// Size, containment and stability conditions.
    pub fn is_well_formed(&self) -> bool {
        let n = self.psi.n();
        self.psi0.is_upward_closed()
            && self.psi.is_upward_closed()
            && self.psi1.is_upward_closed()
            && self.psi0.is_subset(&self.psi)
            && self.psi.is_subset(&self.psi1)
            && self.psi0.len() + 1 == self.psi.len()
            && self.psi.len() + 1 == self.psi1.len()
            && 1 <= self.i
            && self.i < n
            && self.psi0.is_si_stable(self.i)
            && self.psi1.is_si_stable(self.i)
            && (self.branch1 || self.branch2)
    }
}

/// Evaluate both disjuncts literally for a candidate `(Ψ0, Ψ, Ψ1, i)`.
pub(crate) fn modular_conditions(
    psi0: &RootIdeal,
    psi: &RootIdeal,
    psi1: &RootIdeal,
    i: usize,
) -> (bool, bool) {
    let n = psi.n();
    let in_mid = |a: usize, b: usize| psi.contains(a, b) && !psi0.contains(a, b);
    let in_top = |a: usize, b: usize| psi1.contains(a, b) && !psi.contains(a, b);
    let branch1 = (i + 1..n).any(|j| in_mid(i, j) && in_top(i + 1, j));
    let branch2 = (1..i).any(|j| in_mid(j, i) && in_top(j, i + 1));
    (branch1, branch2)
}

/// All modular-law triples of size `n`, ordered by `Ψ` in Hessenberg
/// enumeration order, then by the removed root, the added root and `i`.
pub fn find_modular_triples(n: usize) -> Vec<ModularTriple> {
    let mut out = Vec::new();
    for h in enumerate_hessenberg(n) {
        let psi = h.to_root_ideal();
        let lower: Vec<RootIdeal> = psi
            .removable_roots()
            .into_iter()
            .map(|r| psi.without_root(r))
            .collect();
        let upper: Vec<RootIdeal> = psi
            .addable_roots()
            .into_iter()
            .map(|r| psi.with_root(r))
            .collect();
        for psi0 in &lower {
            for psi1 in &upper {
                for i in 1..n {
                    if !psi0.is_si_stable(i) || !psi1.is_si_stable(i) {
                        continue;
                    }
                    let (branch1, branch2) = modular_conditions(psi0, &psi, psi1, i);
                    if branch1 || branch2 {
                        out.push(ModularTriple {
                            psi0: psi0.clone(),
                            psi: psi.clone(),
                            psi1: psi1.clone(),
                            i,
                            branch1,
                            branch2,
                        });
                    }
                }
            }
        }
    }
    out
}
