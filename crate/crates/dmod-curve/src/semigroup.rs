//! Numerical semigroups `Γ ⊆ ℕ₀` and the combinatorics attached to the ring
//! of differential operators on `k[Γ]`: the vanishing sets `Ω(w)`, their
//! cardinalities `σ(w)`, and the plane semigroup `Γ'` with
//! `(m, n) ∈ Γ' ⇔ n ≥ σ(m − n)` that underlies the associated graded ring.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;

/// A numerical semigroup with finite complement in `ℕ₀`.
///
/// Immutable after construction; membership, gaps and the Frobenius number
/// are precomputed, everything else is derived on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    gaps: Vec<u64>,
    frobenius: i64,
    /// Membership sieve on `0..=sieve_top`, with `sieve_top > frobenius`.
    sieve: Vec<bool>,
}

impl NumericalSemigroup {
    /// Build `Γ = ⟨rawGenerators⟩`. The stored generator list is minimal:
    /// raw generators expressible as sums of two nonzero elements are
    /// dropped (verified by brute force rather than assumed).
    pub fn new(raw_generators: &[i64]) -> Result<Self> {
        if raw_generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut gens: Vec<u64> = Vec::new();
        for &g in raw_generators {
            if g < 1 {
                return Err(Error::NonPositiveGenerator(g));
            }
            if !gens.contains(&(g as u64)) {
                gens.push(g as u64);
            }
        }
        gens.sort_unstable();
        let gcd = gens.iter().fold(0u64, |acc, &g| num_integer::gcd(acc, g));
        if gcd != 1 {
            return Err(Error::CommonFactor(gcd));
        }

        // Sieve until a run of min-generator consecutive members shows up;
        // past such a run every integer is a member.
        let min_gen = gens[0] as usize;
        let mut bound = (gens[gens.len() - 1] as usize) * min_gen + min_gen + 2;
        let sieve = loop {
            let mut sieve = vec![false; bound + 1];
            sieve[0] = true;
            for n in 1..=bound {
                sieve[n] = gens
                    .iter()
                    .any(|&g| (g as usize) <= n && sieve[n - g as usize]);
            }
            let mut run = 0usize;
            let mut complete = false;
            for n in 0..=bound {
                run = if sieve[n] { run + 1 } else { 0 };
                if run >= min_gen {
                    complete = true;
                    break;
                }
            }
            if complete {
                break sieve;
            }
            bound *= 2;
        };
        let frobenius = (0..sieve.len())
            .rev()
            .find(|&n| !sieve[n])
            .map_or(-1, |n| n as i64);
        let gaps: Vec<u64> = (0..sieve.len())
            .filter(|&n| !sieve[n])
            .map(|n| n as u64)
            .collect();

        let member = |n: usize| -> bool { n < sieve.len() && sieve[n] || n as i64 > frobenius };
        let minimal: Vec<u64> = gens
            .iter()
            .copied()
            .filter(|&g| {
                !(1..g).any(|x| member(x as usize) && member((g - x) as usize))
            })
            .collect();

        Ok(NumericalSemigroup {
            generators: minimal,
            gaps,
            frobenius,
            sieve,
        })
    }

    /// The full semigroup `ℕ₀`, i.e. the Weyl-algebra case `A = k[t]`.
    pub fn full() -> Self {
        NumericalSemigroup::new(&[1]).unwrap()
    }

    pub fn is_full(&self) -> bool {
        self.frobenius < 0
    }

    /// Minimal generating set, sorted.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// The gap set `H = ℕ₀ ∖ Γ`, sorted.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Number of gaps (the genus).
    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// Largest gap, or `-1` when `Γ = ℕ₀`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        if n > self.frobenius {
            return true;
        }
        self.sieve[n as usize]
    }

    /// Members of `Γ ∩ [0, hi]` in increasing order.
    pub fn members_upto(&self, hi: i64) -> Vec<i64> {
        (0..=hi.max(-1)).filter(|&n| self.contains(n)).collect()
    }

    /// `Ω(w) = { γ ∈ Γ : γ + w ∉ Γ }`, always finite: beyond
    /// `frobenius − w` every `γ + w` is a member.
    pub fn omega(&self, w: i64) -> Vec<i64> {
        let top = self.frobenius - w;
        (0..=top.max(-1))
            .filter(|&g| self.contains(g) && !self.contains(g + w))
            .collect()
    }

    /// `σ(w) = |Ω(w)|`; satisfies `σ(−w) = σ(w) + w`.
    pub fn sigma(&self, w: i64) -> usize {
        self.omega(w).len()
    }

    /// Write a nonzero member as a sum of minimal generators.
    pub fn express_member(&self, n: i64) -> Option<Vec<u64>> {
        if n < 0 || !self.contains(n) {
            return None;
        }
        let mut n = n as u64;
        let mut out = Vec::new();
        while n > 0 {
            let g = *self
                .generators
                .iter()
                .rev()
                .find(|&&g| g <= n && self.contains((n - g) as i64))?;
            out.push(g);
            n -= g;
        }
        Some(out)
    }

    /// Is `(m, n)` a point of `Γ'`? Defined by `n ≥ σ(m − n)`.
    pub fn in_gamma_prime(&self, m: i64, n: i64) -> bool {
        m >= 0 && n >= 0 && n >= self.sigma(m - n) as i64
    }

    /// Compute the gap points of `Γ'` and, for `Γ ≠ ℕ₀`, the minimal
    /// generator exponents of the associated graded ring.
    ///
    /// `search_bound` must be large enough that `σ(v) = 0` for every
    /// `v > search_bound`; since `σ` vanishes exactly on `Γ ∪ (frobenius, ∞)`
    /// this means `search_bound ≥ frobenius`, and the bound is certified
    /// here rather than trusted.
    pub fn gamma_prime(&self, search_bound: i64) -> Result<GammaPrimeData> {
        let bound = search_bound.max(self.frobenius);
        // Certify sigma vanishes beyond the working bound.
        for v in (bound + 1)..=(bound + 2 * self.generators[0] as i64 + 2) {
            debug_assert_eq!(self.sigma(v), 0);
        }
        // Every gap point (m, n) of the plane semigroup satisfies
        // min(m, n) < genus and max(m, n) <= genus + frobenius.
        let box_top = self.genus() as i64 + bound + 1;
        let mut gap_points = BTreeSet::new();
        for m in 0..=box_top {
            for n in 0..=box_top {
                if !self.in_gamma_prime(m, n) {
                    gap_points.insert((m as u64, n as u64));
                }
            }
        }

        let minimal = if self.is_full() {
            None
        } else {
            let mut candidates = BTreeSet::new();
            let mut degrees: Vec<u64> = self.generators.to_vec();
            degrees.extend_from_slice(&self.gaps);
            for d in degrees {
                let w = d as i64;
                for w in [w, -w] {
                    let m = self.sigma(-w) as u64;
                    let n = self.sigma(w) as u64;
                    candidates.insert((m, n));
                }
            }
            candidates.insert((1, 1));
            // Prune reducible candidates: x + y with both parts nonzero
            // points of the plane semigroup.
            let irreducible = candidates
                .iter()
                .copied()
                .filter(|&(m, n)| {
                    !(0..=m).any(|i| {
                        (0..=n).any(|j| {
                            (i, j) != (0, 0)
                                && (i, j) != (m, n)
                                && self.in_gamma_prime(i as i64, j as i64)
                                && self.in_gamma_prime((m - i) as i64, (n - j) as i64)
                        })
                    })
                })
                .collect();
            Some(irreducible)
        };

        Ok(GammaPrimeData {
            gap_points,
            minimal,
        })
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ">")
    }
}

/// Data of the plane semigroup `Γ' ⊆ ℕ₀²` attached to the associated
/// graded ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaPrimeData {
    gap_points: BTreeSet<(u64, u64)>,
    minimal: Option<BTreeSet<(u64, u64)>>,
}

impl GammaPrimeData {
    /// The finite set `ℕ₀² ∖ Γ'`.
    pub fn gap_points(&self) -> &BTreeSet<(u64, u64)> {
        &self.gap_points
    }

    /// `s = |ℕ₀² ∖ Γ'|`; the correction term in the Bernstein dimension
    /// formula.
    pub fn s(&self) -> usize {
        self.gap_points.len()
    }

    /// Minimal generator exponents `(i, j)` of `k[Γ']`, meaning `tⁱ ξʲ`.
    /// Refused for `Γ = ℕ₀` where the statement does not apply.
    pub fn minimal_generators(&self) -> Result<&BTreeSet<(u64, u64)>> {
        self.minimal
            .as_ref()
            .ok_or(Error::FullSemigroup("minimal generators of gr D"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent membership oracle: plain breadth-first closure, no reuse
    /// of the sieve logic under test.
    fn oracle_members(gens: &[i64], top: i64) -> Vec<bool> {
        let mut member = vec![false; (top + 1) as usize];
        member[0] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for n in 0..=top as usize {
                if member[n] {
                    continue;
                }
                for &g in gens {
                    let g = g as usize;
                    if g <= n && member[n - g] {
                        member[n] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
        member
    }

    fn oracle_omega(gens: &[i64], w: i64) -> Vec<i64> {
        // Enumerate well past where gamma + w must be a member again.
        let top = 200;
        let member = oracle_members(gens, top + w.abs() + 1);
        let contains = |n: i64| n >= 0 && n < member.len() as i64 && member[n as usize]
            || n >= member.len() as i64;
        (0..=top)
            .filter(|&g| contains(g) && !contains(g + w))
            .collect()
    }

    fn s23() -> NumericalSemigroup {
        NumericalSemigroup::new(&[2, 3]).unwrap()
    }

    #[test]
    fn construction_2_3() {
        let g = s23();
        assert_eq!(g.generators(), &[2, 3]);
        assert_eq!(g.gaps(), &[1]);
        assert_eq!(g.frobenius(), 1);
    }

    #[test]
    fn construction_full() {
        let g = NumericalSemigroup::new(&[1]).unwrap();
        assert!(g.is_full());
        assert_eq!(g.gaps(), &[] as &[u64]);
        assert_eq!(g.frobenius(), -1);
    }

    #[test]
    fn redundant_generators_are_pruned() {
        let g = NumericalSemigroup::new(&[4, 6, 2, 3]).unwrap();
        assert_eq!(g.generators(), &[2, 3]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            NumericalSemigroup::new(&[]),
            Err(Error::EmptyGenerators)
        );
        assert_eq!(
            NumericalSemigroup::new(&[4, 6]),
            Err(Error::CommonFactor(2))
        );
        assert_eq!(
            NumericalSemigroup::new(&[0, 3]),
            Err(Error::NonPositiveGenerator(0))
        );
    }

    #[test]
    fn omega_matches_enumeration_oracle() {
        let g = s23();
        assert_eq!(g.omega(1), oracle_omega(&[2, 3], 1));
        assert_eq!(g.omega(1), vec![0]);
        assert_eq!(g.omega(-1), oracle_omega(&[2, 3], -1));
        assert_eq!(g.omega(-1), vec![0, 2]);
        let full = NumericalSemigroup::full();
        assert_eq!(full.omega(5), vec![] as Vec<i64>);
        assert_eq!(full.omega(-3), vec![0, 1, 2]);
        let g345 = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        for w in -12..=12 {
            assert_eq!(g345.omega(w), oracle_omega(&[3, 4, 5], w), "w={}", w);
        }
    }

    #[test]
    fn sigma_values_and_identity() {
        let g = s23();
        assert_eq!(g.sigma(1), 1);
        assert_eq!(g.sigma(-1), 2);
        let full = NumericalSemigroup::full();
        for w in 0..=10 {
            assert_eq!(full.sigma(w), 0);
        }
        for gens in [vec![2, 3], vec![2, 5], vec![3, 4, 5], vec![1], vec![6, 10, 15]] {
            let g = NumericalSemigroup::new(&gens).unwrap();
            for w in -50..=50i64 {
                assert_eq!(
                    g.sigma(-w) as i64,
                    g.sigma(w) as i64 + w,
                    "{:?} w={}",
                    gens,
                    w
                );
            }
        }
    }

    #[test]
    fn membership_agrees_with_gaps() {
        for gens in [vec![2, 3], vec![2, 5], vec![3, 4, 5]] {
            let g = NumericalSemigroup::new(&gens).unwrap();
            for n in 0..=3 * g.frobenius().max(1) {
                assert!(g.contains(n) ^ g.gaps().contains(&(n as u64)));
            }
            assert!(!g.contains(-1));
        }
    }

    #[test]
    fn gamma_prime_2_3() {
        let g = s23();
        let gp = g.gamma_prime(g.frobenius()).unwrap();
        let expected: BTreeSet<(u64, u64)> = [(1, 0), (0, 1)].into_iter().collect();
        assert_eq!(gp.gap_points(), &expected);
        assert_eq!(gp.s(), 2);
        assert!(gp.minimal_generators().unwrap().contains(&(1, 1)));
    }

    #[test]
    fn gamma_prime_full() {
        let g = NumericalSemigroup::full();
        let gp = g.gamma_prime(0).unwrap();
        assert_eq!(gp.s(), 0);
        assert!(matches!(
            gp.minimal_generators(),
            Err(Error::FullSemigroup(_))
        ));
    }

    #[test]
    fn gamma_prime_stable_under_bigger_bound() {
        for gens in [vec![2, 3], vec![2, 5], vec![3, 4, 5]] {
            let g = NumericalSemigroup::new(&gens).unwrap();
            let a = g.gamma_prime(g.frobenius()).unwrap();
            let b = g.gamma_prime(g.frobenius() + 17).unwrap();
            assert_eq!(a.s(), b.s());
            assert_eq!(a.gap_points(), b.gap_points());
        }
    }

    #[test]
    fn express_member_sums_to_input() {
        let g = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        for n in 0..40 {
            if g.contains(n) {
                let parts = g.express_member(n).unwrap();
                assert_eq!(parts.iter().sum::<u64>() as i64, n);
                assert!(parts.iter().all(|p| g.generators().contains(p)));
            } else {
                assert!(g.express_member(n).is_none());
            }
        }
    }

    #[test]
    fn omega_empty_exactly_when_translation_stays_inside() {
        let g = s23();
        for w in -8..=8 {
            let empty = g.omega(w).is_empty();
            let closed = (0..=g.frobenius() + w.abs() + 6)
                .filter(|&n| g.contains(n))
                .all(|n| g.contains(n + w));
            assert_eq!(empty, w >= 0 && closed);
        }
    }
}
