//! Constructions specific to `D = Diff(A)` for a monomial curve `A = k[Γ]`:
//! the minimal-order operators `P_w`, the generating set of `D`, bases of
//! the graded pieces `D_w`, and principal symbols in `gr D ⊆ k[t, ξ]`.

use crate::error::{Error, Result};
use crate::opalgebra::{HomogeneousComponent, LaurentWeylOperator};
use crate::poly::QPoly;
use crate::rat::{rint, Rat};
use crate::semigroup::NumericalSemigroup;
use num_traits::One;
use std::fmt;

/// The Euler polynomial `∏_{γ ∈ Ω(w)} (x − γ)` of `P_w`.
pub fn pw_euler_poly(gamma: &NumericalSemigroup, w: i64) -> QPoly {
    let mut f = QPoly::one();
    for g in gamma.omega(w) {
        f = &f * &QPoly::x_minus(&rint(g));
    }
    f
}

/// `P_w = tʷ ∏_{γ ∈ Ω(w)} (E − γ)` as a homogeneous component.
pub fn pw_component(gamma: &NumericalSemigroup, w: i64) -> HomogeneousComponent {
    HomogeneousComponent::new(w, pw_euler_poly(gamma, w))
}

/// `P_w` in normal form. Homogeneous of degree `w`, order `σ(w)`, and of
/// minimal order among the degree-`w` operators in `D`.
pub fn build_pw(gamma: &NumericalSemigroup, w: i64) -> LaurentWeylOperator {
    pw_component(gamma, w).to_operator()
}

/// A named generator of `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DGenerator {
    pub label: String,
    pub degree: i64,
    pub op: LaurentWeylOperator,
}

/// The generating set `{E} ∪ {P_w : |w| ∈ generators(Γ) ∪ gaps(Γ)}`,
/// sorted by degree.
pub fn generators_of_d(gamma: &NumericalSemigroup) -> Vec<DGenerator> {
    let mut degrees: Vec<i64> = vec![0];
    for &a in gamma.generators() {
        degrees.push(a as i64);
        degrees.push(-(a as i64));
    }
    for &h in gamma.gaps() {
        degrees.push(h as i64);
        degrees.push(-(h as i64));
    }
    degrees.sort_unstable();
    degrees.dedup();
    degrees
        .into_iter()
        .map(|w| {
            if w == 0 {
                DGenerator {
                    label: "E".to_string(),
                    degree: 0,
                    op: LaurentWeylOperator::euler(),
                }
            } else {
                DGenerator {
                    label: format!("P[{}]", w),
                    degree: w,
                    op: build_pw(gamma, w),
                }
            }
        })
        .collect()
}

/// Basis `{P_w Eˢ : σ(w) + s ≤ maxOrder}` of the degree-`w` piece of `D`
/// up to the given order. Empty when `maxOrder < σ(w)`.
pub fn dw_basis(
    gamma: &NumericalSemigroup,
    w: i64,
    max_order: usize,
) -> Vec<LaurentWeylOperator> {
    let sigma = gamma.sigma(w);
    if max_order < sigma {
        return Vec::new();
    }
    let base = pw_euler_poly(gamma, w);
    (0..=(max_order - sigma))
        .map(|s| {
            let mut f = base.clone();
            for _ in 0..s {
                f = &f * &QPoly::x();
            }
            HomogeneousComponent::new(w, f).to_operator()
        })
        .collect()
}

/// A monomial `c · tⁱ ξʲ` of the associated graded ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolMonomial {
    pub t_exp: i64,
    pub xi_exp: u32,
    pub coeff: Rat,
}

impl fmt::Display for SymbolMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.coeff.is_one() {
            write!(f, "{}*", self.coeff)?;
        }
        match (self.t_exp, self.xi_exp) {
            (0, 0) => write!(f, "1"),
            (i, 0) => write!(f, "t^{}", i),
            (0, j) => write!(f, "xi^{}", j),
            (i, j) => write!(f, "t^{}*xi^{}", i, j),
        }
    }
}

/// Principal symbol: for each homogeneous component of order `p`, the
/// order-`p` part with `∂` replaced by `ξ`. In strict mode the operator
/// must lie in `D`, so the symbol lands in `gr D ⊆ k[t, ξ]`.
pub fn symbol(
    p: &LaurentWeylOperator,
    gamma: &NumericalSemigroup,
    strict: bool,
) -> Result<Vec<SymbolMonomial>> {
    if strict && !p.membership(gamma, gamma) {
        return Err(Error::NotInRing(p.to_string()));
    }
    Ok(p.decompose()
        .into_iter()
        .map(|comp| {
            let order = comp.order().expect("components are nonzero") as u32;
            SymbolMonomial {
                t_exp: comp.degree + order as i64,
                xi_exp: order,
                coeff: comp.euler_poly.leading().unwrap().clone(),
            }
        })
        .collect())
}

/// Cross-check the generator exponents of `gr D = k[Γ']`: the symbols of
/// the `P_w` for `|w|` a generator or gap, together with `t ξ`, must equal
/// the independently computed minimal generators of `Γ'`.
pub fn verify_gr_generators(gamma: &NumericalSemigroup) -> Result<bool> {
    if gamma.is_full() {
        return Err(Error::FullSemigroup("verify_gr_generators"));
    }
    let mut from_symbols = std::collections::BTreeSet::new();
    for gen in generators_of_d(gamma) {
        if gen.degree == 0 {
            continue;
        }
        let syms = symbol(&gen.op, gamma, true)?;
        debug_assert_eq!(syms.len(), 1);
        let s = &syms[0];
        from_symbols.insert((s.t_exp as u64, s.xi_exp as u64));
    }
    from_symbols.insert((1, 1));
    let gp = gamma.gamma_prime(gamma.frobenius())?;
    Ok(&from_symbols == gp.minimal_generators()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::QMat;
    use crate::opalgebra::LaurentPoly;

    fn g23() -> NumericalSemigroup {
        NumericalSemigroup::new(&[2, 3]).unwrap()
    }

    #[test]
    fn pw_small_cases() {
        let g = g23();
        // Ω(1) = {0}: P_1 = tE = t²∂
        assert_eq!(build_pw(&g, 1), LaurentWeylOperator::term(2, 1, rint(1)));
        // Ω(−1) = {0, 2}: P_{−1} = t⁻¹E(E−2) = t∂² − ∂
        let expected = &LaurentWeylOperator::term(1, 2, rint(1))
            - &LaurentWeylOperator::term(0, 1, rint(1));
        assert_eq!(build_pw(&g, -1), expected);
        // over ℕ₀: P_{−1} = ∂
        let full = NumericalSemigroup::full();
        assert_eq!(build_pw(&full, -1), LaurentWeylOperator::d_pow(1));
    }

    #[test]
    fn pw_degree_order_membership() {
        for gens in [vec![2, 3], vec![2, 5], vec![3, 4, 5], vec![1]] {
            let g = NumericalSemigroup::new(&gens).unwrap();
            for w in -8..=8 {
                let p = build_pw(&g, w);
                assert_eq!(p.degree(), Some(w));
                assert_eq!(p.order(), Some(g.sigma(w) as u32));
                assert!(p.membership(&g, &g), "P_{} over {:?}", w, gens);
            }
        }
    }

    #[test]
    fn pw_has_minimal_order_among_divisors() {
        // Dropping any root from the defining product leaves D.
        let g = g23();
        for w in -4..=4 {
            let omega = g.omega(w);
            if omega.is_empty() {
                continue;
            }
            for skip in 0..omega.len() {
                let mut f = QPoly::one();
                for (k, &root) in omega.iter().enumerate() {
                    if k != skip {
                        f = &f * &QPoly::x_minus(&rint(root));
                    }
                }
                let candidate = HomogeneousComponent::new(w, f).to_operator();
                assert!(!candidate.membership(&g, &g), "w={} skip={}", w, skip);
            }
        }
    }

    #[test]
    fn generator_sets() {
        let g = g23();
        let gens = generators_of_d(&g);
        let degrees: Vec<i64> = gens.iter().map(|g| g.degree).collect();
        assert_eq!(degrees, vec![-3, -2, -1, 0, 1, 2, 3]);

        let full = NumericalSemigroup::full();
        let gens = generators_of_d(&full);
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[0].op, LaurentWeylOperator::d_pow(1));
        assert_eq!(gens[1].op, LaurentWeylOperator::euler());
        assert_eq!(gens[2].op, LaurentWeylOperator::t_pow(1));

        let g345 = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let degrees: Vec<i64> = generators_of_d(&g345).iter().map(|g| g.degree).collect();
        assert_eq!(degrees, vec![-5, -4, -3, -2, -1, 0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn generators_preserve_the_curve() {
        for gens in [vec![2, 3], vec![3, 4, 5]] {
            let g = NumericalSemigroup::new(&gens).unwrap();
            let top = g.frobenius() + 2 * *g.generators().last().unwrap() as i64;
            for dg in generators_of_d(&g) {
                for n in 0..=top {
                    if g.contains(n) {
                        assert!(dg.op.apply_monomial(n).supported_in(&g));
                    }
                }
            }
        }
    }

    #[test]
    fn dw_basis_examples() {
        let g = g23();
        let basis = dw_basis(&g, 1, 2);
        // σ(1) = 1: [tE, tE²]
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], LaurentWeylOperator::term(2, 1, rint(1)));
        for b in &basis {
            assert!(b.membership(&g, &g));
        }
        assert_eq!(dw_basis(&g, 1, 0), Vec::new());
        // P_0 = 1
        assert_eq!(dw_basis(&g, 0, 0), vec![LaurentWeylOperator::one()]);
        // Weyl: w = −1, maxOrder 1 → [∂, ∂E] truncated at order 1 → [∂]
        let full = NumericalSemigroup::full();
        assert_eq!(dw_basis(&full, -1, 1), vec![LaurentWeylOperator::d_pow(1)]);
        assert_eq!(dw_basis(&full, -1, 2).len(), 2);
    }

    #[test]
    fn dw_basis_spans_by_exact_rank() {
        // Any t^w f(E) in D of bounded order is a combination of the basis.
        let g = g23();
        for w in [-2i64, 0, 1, 3] {
            let max_order = g.sigma(w) + 2;
            let basis = dw_basis(&g, w, max_order);
            let member = {
                let f = &pw_euler_poly(&g, w) * &QPoly::from_ints(&[3, -1, 1]);
                HomogeneousComponent::new(w, f).to_operator()
            };
            let dim = max_order + 3;
            let row = |op: &LaurentWeylOperator| -> Vec<Rat> {
                let comp = op.as_component().unwrap();
                (0..dim).map(|k| comp.euler_poly.coeff(k)).collect()
            };
            let mut rows: Vec<Vec<Rat>> = basis.iter().map(row).collect();
            let rank_before = QMat::from_rows(rows.clone()).rank();
            rows.push(row(&member));
            let rank_after = QMat::from_rows(rows).rank();
            assert_eq!(rank_before, rank_after, "w={}", w);
            assert_eq!(rank_before, basis.len());
        }
    }

    #[test]
    fn symbol_examples() {
        let g = g23();
        // P_1 = tE → t²ξ
        let s = symbol(&build_pw(&g, 1), &g, true).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].t_exp, s[0].xi_exp), (2, 1));
        assert!(s[0].coeff.is_one());
        // E → tξ
        let s = symbol(&LaurentWeylOperator::euler(), &g, true).unwrap();
        assert_eq!((s[0].t_exp, s[0].xi_exp), (1, 1));
        // t³ → t³ (ξ-exponent 0)
        let s = symbol(&LaurentWeylOperator::t_pow(3), &g, true).unwrap();
        assert_eq!((s[0].t_exp, s[0].xi_exp), (3, 0));
        // strict mode rejects ∂ ∉ D
        assert!(symbol(&LaurentWeylOperator::d_pow(1), &g, true).is_err());
        assert!(symbol(&LaurentWeylOperator::d_pow(1), &g, false).is_ok());
    }

    #[test]
    fn symbol_exponents_satisfy_gamma_prime_boundary() {
        for gens in [vec![2, 3], vec![2, 5], vec![3, 4, 5]] {
            let g = NumericalSemigroup::new(&gens).unwrap();
            for w in -10..=10i64 {
                let s = &symbol(&build_pw(&g, w), &g, true).unwrap()[0];
                assert_eq!(s.t_exp as usize, g.sigma(-w));
                assert_eq!(s.xi_exp as usize, g.sigma(w));
                // the point sits in Γ' with the boundary attained
                assert!(g.in_gamma_prime(s.t_exp, s.xi_exp as i64));
                assert_eq!(s.xi_exp as usize, g.sigma(s.t_exp - s.xi_exp as i64));
            }
        }
    }

    #[test]
    fn symbols_add_under_multiplication() {
        let g = g23();
        for v in -4..=4i64 {
            for w in -4..=4i64 {
                let pv = build_pw(&g, v);
                let pw = build_pw(&g, w);
                let prod = &pv * &pw;
                let s = symbol(&prod, &g, true).unwrap();
                assert_eq!(s.len(), 1);
                assert_eq!(s[0].t_exp as usize, g.sigma(-v) + g.sigma(-w));
                assert_eq!(s[0].xi_exp as usize, g.sigma(v) + g.sigma(w));
            }
        }
    }

    #[test]
    fn gr_generator_cross_check() {
        for gens in [vec![2, 3], vec![2, 5], vec![3, 4, 5]] {
            let g = NumericalSemigroup::new(&gens).unwrap();
            assert!(verify_gr_generators(&g).unwrap(), "{:?}", gens);
        }
        assert!(verify_gr_generators(&NumericalSemigroup::full()).is_err());
    }

    #[test]
    fn pw_applied_by_omega_rule() {
        // P_1 for <2,3> kills 1 because 0 ∈ Ω(1).
        let g = g23();
        let p1 = build_pw(&g, 1);
        assert!(p1.apply_monomial(0).is_zero());
        // and sends t² to a nonzero multiple of t³
        let image = p1.apply_monomial(2);
        assert_eq!(image, LaurentPoly::monomial(3, rint(2)));
    }
}
