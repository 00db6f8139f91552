//! The Bernstein filtration `Bⁿ` of `D`, Hilbert functions of filtered
//! cyclic modules, quasi-polynomial extraction, and the dimension and
//! multiplicity invariants `d(M)`, `e(M)`.
//!
//! The layer `Bⁿ` is spanned by the operators `P_w Eˢ` with
//! `2(σ(w)+s) + w ≤ n`; in normal form this is exactly the condition
//! `max(i+j) ≤ n`. For a cyclic module `D/I` the good filtration is the
//! image of `Bⁿ`, so `dim Mₙ = dim Bⁿ − dim(Bⁿ ∩ I)`.

use crate::diffring::pw_euler_poly;
use crate::error::{Error, Result};
use crate::linalg::QMat;
use crate::opalgebra::{HomogeneousComponent, LaurentWeylOperator};
use crate::poly::QPoly;
use crate::rat::{rint, Rat};
use crate::semigroup::NumericalSemigroup;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// One layer of the Bernstein filtration, with its `P_w Eˢ` index basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernsteinLayer {
    pub n: i64,
    /// Pairs `(w, s)` indexing `P_w Eˢ` with `2(σ(w)+s) + w ≤ n`.
    pub basis: Vec<(i64, usize)>,
    pub dim: usize,
}

/// Exact dimension of `Bⁿ`: counts pairs `(w, s)` with
/// `2σ(w) + 2s + w ≤ n`. Zero for `n < 0`, one for `n = 0`.
pub fn bernstein_dim(gamma: &NumericalSemigroup, n: i64) -> usize {
    if n < 0 {
        return 0;
    }
    let mut count = 0usize;
    for w in -n..=n {
        let slack = n - w - 2 * gamma.sigma(w) as i64;
        if slack >= 0 {
            count += (slack / 2) as usize + 1;
        }
    }
    count
}

pub fn bernstein_layer(gamma: &NumericalSemigroup, n: i64) -> BernsteinLayer {
    let mut basis = Vec::new();
    if n >= 0 {
        for w in -n..=n {
            let slack = n - w - 2 * gamma.sigma(w) as i64;
            if slack < 0 {
                continue;
            }
            for s in 0..=slack / 2 {
                basis.push((w, s as usize));
            }
        }
    }
    BernsteinLayer {
        n,
        dim: basis.len(),
        basis,
    }
}

/// `(n+1)(n+2)/2 − s`, the eventual closed form of `dim Bⁿ`.
pub fn bernstein_closed_form(n: i64, s: usize) -> i64 {
    (n + 1) * (n + 2) / 2 - s as i64
}

/// Smallest `n₀ ≥ 0` such that `dim Bⁿ` equals the closed form for every
/// `n` in `[n₀, upto]`, or `None` if there is no such onset.
pub fn bernstein_onset(gamma: &NumericalSemigroup, upto: i64) -> Option<i64> {
    let s = gamma.gamma_prime(gamma.frobenius()).ok()?.s();
    let mut onset = None;
    for n in 0..=upto {
        if bernstein_dim(gamma, n) as i64 == bernstein_closed_form(n, s) {
            onset.get_or_insert(n);
        } else {
            onset = None;
        }
    }
    onset
}

/// A finite list of generators of a left ideal `I ⊆ D`, presenting the
/// cyclic module `D/I`. An empty list is the zero ideal, presenting `D`
/// itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftIdealPresentation {
    generators: Vec<LaurentWeylOperator>,
    bernstein_degrees: Vec<i64>,
}

impl LeftIdealPresentation {
    /// Validate that every generator lies in `D`; zero generators are
    /// dropped.
    pub fn new(
        gamma: &NumericalSemigroup,
        generators: Vec<LaurentWeylOperator>,
    ) -> Result<Self> {
        let mut gens = Vec::new();
        for (i, g) in generators.into_iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            if !g.membership(gamma, gamma) {
                return Err(Error::GeneratorNotInD(i));
            }
            gens.push(g);
        }
        let bdegs = gens
            .iter()
            .map(|g| g.bernstein_degree().expect("nonzero"))
            .collect();
        Ok(LeftIdealPresentation {
            generators: gens,
            bernstein_degrees: bdegs,
        })
    }

    /// The zero ideal: presents `D` as a module over itself.
    pub fn zero_ideal() -> Self {
        LeftIdealPresentation {
            generators: Vec::new(),
            bernstein_degrees: Vec::new(),
        }
    }

    pub fn principal(gamma: &NumericalSemigroup, p: LaurentWeylOperator) -> Result<Self> {
        Self::new(gamma, vec![p])
    }

    pub fn generators(&self) -> &[LaurentWeylOperator] {
        &self.generators
    }

    pub fn bernstein_degrees(&self) -> &[i64] {
        &self.bernstein_degrees
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_principal(&self) -> bool {
        self.generators.len() == 1
    }
}

/// Filtration dimensions `dim M₀, …, dim M_nmax` of `D/I` under the image
/// filtration, with `exact` set when the values are certified closed-form
/// (principal or zero ideal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertProfile {
    pub dims: Vec<usize>,
    pub exact: bool,
}

/// Filtration dimensions of `D/I`.
///
/// For a principal ideal `I = D·P` the Bernstein degree is additive
/// (the Bernstein-graded ring `k[Γ']` is a domain), so
/// `dim(Bⁿ ∩ I) = dim Bⁿ⁻ᵇ` exactly. For several generators the
/// intersection is computed by saturation: the span of
/// `B^{N−bᵢ}·genᵢ` is intersected with `Bⁿ` for growing `N` until the
/// dimension stabilizes, and failure to stabilize within
/// `saturation_window` is an error.
pub fn module_hilbert(
    gamma: &NumericalSemigroup,
    ideal: &LeftIdealPresentation,
    n_max: i64,
    saturation_window: usize,
) -> Result<HilbertProfile> {
    let n_max = n_max.max(0);
    if ideal.is_zero_ideal() {
        let dims = (0..=n_max).map(|n| bernstein_dim(gamma, n)).collect();
        return Ok(HilbertProfile { dims, exact: true });
    }
    if ideal.is_principal() {
        let b = ideal.bernstein_degrees[0];
        let dims = (0..=n_max)
            .map(|n| bernstein_dim(gamma, n) - bernstein_dim(gamma, n - b))
            .collect();
        return Ok(HilbertProfile { dims, exact: true });
    }

    let window = saturation_window.max(2);
    let mut dims = Vec::with_capacity(n_max as usize + 1);
    for n in 0..=n_max {
        // The cut dimension is nondecreasing in the saturation level, so
        // agreement at the top of the window certifies stabilization.
        let near_top = ideal_layer_dim(gamma, ideal, n, n + window as i64 - 1);
        let top = ideal_layer_dim(gamma, ideal, n, n + window as i64);
        if near_top != top {
            return Err(Error::NoStabilization {
                at_degree: n,
                window,
            });
        }
        dims.push(bernstein_dim(gamma, n) - top);
    }
    Ok(HilbertProfile { dims, exact: false })
}

/// `dim(Bⁿ ∩ Σᵢ B^{N−bᵢ}·genᵢ)` in normal-form coordinates.
fn ideal_layer_dim(
    gamma: &NumericalSemigroup,
    ideal: &LeftIdealPresentation,
    n: i64,
    big_n: i64,
) -> usize {
    let mut products: Vec<LaurentWeylOperator> = Vec::new();
    for (gen, &b) in ideal.generators.iter().zip(&ideal.bernstein_degrees) {
        let layer = bernstein_layer(gamma, big_n - b);
        for (w, s) in layer.basis {
            let mut f = pw_euler_poly(gamma, w);
            for _ in 0..s {
                f = &f * &QPoly::x();
            }
            let q = HomogeneousComponent::new(w, f).to_operator();
            let prod = &q * gen;
            if !prod.is_zero() {
                products.push(prod);
            }
        }
    }
    if products.is_empty() {
        return 0;
    }
    // Index the union of monomial supports.
    let mut index: BTreeMap<(i64, u32), usize> = BTreeMap::new();
    for p in &products {
        for (key, _) in p.terms() {
            let next = index.len();
            index.entry(key).or_insert(next);
        }
    }
    let cols = index.len();
    let rows: Vec<Vec<Rat>> = products
        .iter()
        .map(|p| {
            let mut row = vec![Rat::zero(); cols];
            for (key, c) in p.terms() {
                row[index[&key]] = c.clone();
            }
            row
        })
        .collect();
    let full = QMat::from_rows(rows.clone()).rank();
    // Kernel of the projection to coordinates of Bernstein degree > n.
    let high_cols: Vec<usize> = index
        .iter()
        .filter(|&(&(i, j), _)| i + j as i64 > n)
        .map(|(_, &c)| c)
        .collect();
    if high_cols.is_empty() {
        return full;
    }
    let proj_rows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| high_cols.iter().map(|&c| r[c].clone()).collect())
        .collect();
    let proj_rank = QMat::from_rows(proj_rows).rank();
    full - proj_rank
}

/// The fitted quasi-polynomial of a Hilbert profile:
/// `dim M_{nm+r} = P_r(n)` for `n ≥ 0` with `nm + r ≥ onset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    /// Minimal period `m ≥ 1`.
    pub period: usize,
    /// `P_0, …, P_{m−1}`, all sharing the leading term `(e/d!)·tᵈ`.
    pub polys: Vec<QPoly>,
    /// `d(M)`.
    pub dimension: usize,
    /// `e(M)`, a positive integer.
    pub multiplicity: u64,
    /// Smallest index from which every prediction is exact.
    pub onset: i64,
}

impl QuasiPolynomial {
    /// Predicted `dim Mₙ`.
    pub fn predict(&self, n: i64) -> Rat {
        let m = self.period as i64;
        let r = n.rem_euclid(m);
        self.polys[r as usize].eval_int((n - r) / m)
    }
}

const MAX_POLE_ORDER: usize = 4;
const MAX_PERIOD: usize = 8;

/// Fit the minimal quasi-polynomial to a Hilbert profile.
///
/// The search finds the smallest pole order, then the minimal period `m`
/// making `(1 − tᵐ)^{d+1} · Σ hₙ tⁿ` a polynomial on the window, extracts
/// each residue polynomial by exact interpolation, and verifies every
/// prediction on a held-out tail of length at least `2m` beyond the
/// interpolation nodes.
pub fn fit_quasi_polynomial(dims: &[usize]) -> Result<QuasiPolynomial> {
    let len = dims.len();
    if dims.iter().all(|&h| h == 0) {
        return Err(Error::ZeroModule);
    }
    let mut required_hint: Option<usize> = None;
    for pole in 1..=MAX_POLE_ORDER {
        for m in 1..=MAX_PERIOD {
            match try_fit(dims, pole, m) {
                FitOutcome::Fit(qp) => return Ok(qp),
                FitOutcome::TooShort(required) => {
                    required_hint =
                        Some(required_hint.map_or(required, |r| r.min(required)));
                }
                FitOutcome::NoFit => {}
            }
        }
    }
    match required_hint {
        Some(required) => Err(Error::InsufficientData {
            have: len,
            required,
        }),
        None => Err(Error::NotQuasiPolynomial),
    }
}

enum FitOutcome {
    Fit(QuasiPolynomial),
    TooShort(usize),
    NoFit,
}

fn try_fit(dims: &[usize], pole: usize, m: usize) -> FitOutcome {
    let len = dims.len();
    let d = pole - 1;
    // Coefficients of (1 - t^m)^pole applied to the series.
    let h = |i: i64| -> i64 {
        if i < 0 {
            0
        } else {
            dims[i as usize] as i64
        }
    };
    let binom = |n: usize, k: usize| -> i64 {
        let mut b = 1i64;
        for j in 0..k {
            b = b * (n - j) as i64 / (j + 1) as i64;
        }
        b
    };
    let g = |i: i64| -> i64 {
        (0..=pole)
            .map(|k| (if k % 2 == 0 { 1 } else { -1 }) * binom(pole, k) * h(i - (k * m) as i64))
            .sum()
    };
    let mut z = len as i64;
    while z > 0 && g(z - 1) == 0 {
        z -= 1;
    }
    if z as usize == len {
        return FitOutcome::NoFit;
    }
    // Interpolation nodes per residue class, all at indices >= z, leaving a
    // held-out tail of length >= 2m past the last node.
    let mut polys = Vec::with_capacity(m);
    let mut last_node = 0i64;
    for r in 0..m as i64 {
        let mut first = z + (r - z).rem_euclid(m as i64);
        if first < r {
            first = r;
        }
        let nodes: Vec<i64> = (0..=d as i64).map(|k| first + k * m as i64).collect();
        let top = *nodes.last().unwrap();
        last_node = last_node.max(top);
        if top + 2 * m as i64 >= len as i64 {
            let required = (top + 2 * m as i64 + 1) as usize;
            return FitOutcome::TooShort(required);
        }
        let points: Vec<(Rat, Rat)> = nodes
            .iter()
            .map(|&i| (rint((i - r) / m as i64), rint(h(i))))
            .collect();
        polys.push(QPoly::interpolate(&points));
    }
    // Predictive verification on everything from the zero tail onward,
    // including the held-out block past the interpolation nodes.
    let qp_predict = |i: i64| -> Rat {
        let r = i.rem_euclid(m as i64);
        polys[r as usize].eval_int((i - r) / m as i64)
    };
    for i in z..len as i64 {
        if qp_predict(i) != rint(h(i)) {
            return FitOutcome::NoFit;
        }
    }
    debug_assert!(len as i64 - 1 - last_node >= 2 * m as i64);
    // All residue polynomials must share the leading term (e/d!)·t^d with
    // e a positive integer.
    let lead = polys[0].coeff(d);
    for p in &polys {
        if p.degree() != polys[0].degree() || p.coeff(d) != lead {
            return FitOutcome::NoFit;
        }
    }
    let mut factorial = Rat::one();
    for k in 1..=d {
        factorial = factorial * rint(k as i64);
    }
    let e = &lead * &factorial;
    if !e.is_integer() || !e.is_positive() {
        return FitOutcome::NoFit;
    }
    // Onset: walk back as far as predictions stay exact.
    let mut onset = z;
    while onset > 0 && qp_predict(onset - 1) == rint(h(onset - 1)) {
        onset -= 1;
    }
    FitOutcome::Fit(QuasiPolynomial {
        period: m,
        polys,
        dimension: d,
        multiplicity: e.to_integer().try_into().expect("small multiplicity"),
        onset,
    })
}

/// `(d(M), e(M))` for `M = D/I`, via the image filtration and the
/// quasi-polynomial fit. The Bernstein inequality `d ≥ 1` and the bound
/// `d ≤ 2` are checked.
pub fn dimension_multiplicity(
    gamma: &NumericalSemigroup,
    ideal: &LeftIdealPresentation,
) -> Result<(usize, u64)> {
    let profile = module_hilbert(gamma, ideal, DEFAULT_NMAX, DEFAULT_SATURATION)?;
    let qp = fit_quasi_polynomial(&profile.dims)?;
    assert!(
        qp.dimension >= 1 && qp.dimension <= 2,
        "Bernstein inequality violated: d = {}",
        qp.dimension
    );
    Ok((qp.dimension, qp.multiplicity))
}

/// Is `D/I` holonomic? True for the zero module and for `d(M) = 1`.
pub fn is_holonomic(
    gamma: &NumericalSemigroup,
    ideal: &LeftIdealPresentation,
) -> Result<bool> {
    let profile = module_hilbert(gamma, ideal, DEFAULT_NMAX, DEFAULT_SATURATION)?;
    match fit_quasi_polynomial(&profile.dims) {
        Ok(qp) => Ok(qp.dimension == 1),
        Err(Error::ZeroModule) => Ok(true),
        Err(e) => Err(e),
    }
}

pub const DEFAULT_NMAX: i64 = 48;
pub const DEFAULT_SATURATION: usize = 6;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opalgebra::LaurentWeylOperator as Op;

    fn weyl() -> NumericalSemigroup {
        NumericalSemigroup::full()
    }

    fn g23() -> NumericalSemigroup {
        NumericalSemigroup::new(&[2, 3]).unwrap()
    }

    #[test]
    fn bernstein_dims_small() {
        let full = weyl();
        assert_eq!(bernstein_dim(&full, 2), 6);
        assert_eq!(bernstein_dim(&full, 0), 1);
        assert_eq!(bernstein_dim(&full, -1), 0);
        assert_eq!(bernstein_dim(&g23(), -3), 0);
    }

    #[test]
    fn bernstein_matches_closed_form_eventually() {
        for gens in [vec![2, 3], vec![2, 5], vec![3, 4, 5], vec![1]] {
            let g = NumericalSemigroup::new(&gens).unwrap();
            let s = g.gamma_prime(g.frobenius()).unwrap().s();
            let onset = bernstein_onset(&g, 40).unwrap();
            for n in onset..=40 {
                assert_eq!(
                    bernstein_dim(&g, n) as i64,
                    bernstein_closed_form(n, s),
                    "{:?} n={}",
                    gens,
                    n
                );
            }
        }
    }

    #[test]
    fn bernstein_layer_counts_match() {
        let g = g23();
        for n in -2..=12 {
            assert_eq!(bernstein_layer(&g, n).dim, bernstein_dim(&g, n));
        }
    }

    #[test]
    fn principal_profiles_weyl() {
        let w = weyl();
        // D/D∂t: ∂t has Bernstein degree 2, dims 2n+1
        let dt = &Op::d_pow(1) * &Op::t_pow(1);
        let ideal = LeftIdealPresentation::principal(&w, dt).unwrap();
        let profile = module_hilbert(&w, &ideal, 12, 4).unwrap();
        assert!(profile.exact);
        for n in 0..=12usize {
            assert_eq!(profile.dims[n], 2 * n + 1);
        }
        // D/Dt: dims n+1
        let ideal = LeftIdealPresentation::principal(&w, Op::t_pow(1)).unwrap();
        let profile = module_hilbert(&w, &ideal, 10, 4).unwrap();
        for n in 0..=10usize {
            assert_eq!(profile.dims[n], n + 1);
        }
        // unit ideal: zero module
        let ideal = LeftIdealPresentation::principal(&w, Op::one()).unwrap();
        let profile = module_hilbert(&w, &ideal, 6, 4).unwrap();
        assert!(profile.dims.iter().all(|&d| d == 0));
    }

    #[test]
    fn saturation_finds_hidden_units() {
        let w = weyl();
        // <∂, t> contains ∂t − t∂ = 1, so D/I = 0.
        let ideal =
            LeftIdealPresentation::new(&w, vec![Op::d_pow(1), Op::t_pow(1)]).unwrap();
        let profile = module_hilbert(&w, &ideal, 8, 6).unwrap();
        assert!(!profile.exact);
        assert!(profile.dims.iter().all(|&d| d == 0));
    }

    #[test]
    fn saturation_agrees_with_principal_on_gcd_ideals() {
        let w = weyl();
        let e = Op::euler();
        let shift = |c: i64| &e - &Op::term(0, 0, rint(c));
        // <E(E−2), E(E−3)> = D·E
        let a = &e * &shift(2);
        let b = &e * &shift(3);
        let two_gen = LeftIdealPresentation::new(&w, vec![a, b]).unwrap();
        let sat = module_hilbert(&w, &two_gen, 10, 6).unwrap();
        let principal = LeftIdealPresentation::principal(&w, e).unwrap();
        let exact = module_hilbert(&w, &principal, 10, 6).unwrap();
        assert_eq!(sat.dims, exact.dims);
    }

    #[test]
    fn ideal_validation() {
        let g = g23();
        assert!(matches!(
            LeftIdealPresentation::new(&g, vec![Op::d_pow(1)]),
            Err(Error::GeneratorNotInD(0))
        ));
        // P_{-1} = t∂² − ∂ sits in B³ (component of degree −1 and order 2)
        let p = crate::diffring::build_pw(&g, -1);
        let ideal = LeftIdealPresentation::new(&g, vec![Op::zero(), p]).unwrap();
        assert!(ideal.is_principal());
        assert_eq!(ideal.bernstein_degrees(), &[3]);
    }

    #[test]
    fn fit_synthetic_period_two() {
        // 1,1,2,2,3,3,... = 1/((1−t)(1−t²))
        let dims: Vec<usize> = (0..40).map(|n| n / 2 + 1).collect();
        let qp = fit_quasi_polynomial(&dims).unwrap();
        assert_eq!(qp.period, 2);
        assert_eq!(qp.dimension, 1);
        assert_eq!(qp.multiplicity, 1);
        let expected = QPoly::from_ints(&[1, 1]);
        assert_eq!(qp.polys, vec![expected.clone(), expected]);
        for n in 0..40i64 {
            assert_eq!(qp.predict(n), rint(n / 2 + 1));
        }
    }

    #[test]
    fn fit_ring_itself() {
        let g = g23();
        let dims: Vec<usize> = (0..=40).map(|n| bernstein_dim(&g, n)).collect();
        let qp = fit_quasi_polynomial(&dims).unwrap();
        assert_eq!((qp.dimension, qp.multiplicity, qp.period), (2, 1, 1));
    }

    #[test]
    fn fit_linear_profile() {
        let dims: Vec<usize> = (0..30).map(|n| n + 1).collect();
        let qp = fit_quasi_polynomial(&dims).unwrap();
        assert_eq!((qp.dimension, qp.multiplicity, qp.period), (1, 1, 1));
    }

    #[test]
    fn fit_errors() {
        assert!(matches!(
            fit_quasi_polynomial(&[0, 0, 0]),
            Err(Error::ZeroModule)
        ));
        assert!(matches!(
            fit_quasi_polynomial(&[1, 1, 2]),
            Err(Error::InsufficientData { .. })
        ));
        // 2^n is not quasi-polynomial
        let dims: Vec<usize> = (0..20).map(|n| 1usize << n).collect();
        assert!(matches!(
            fit_quasi_polynomial(&dims),
            Err(Error::NotQuasiPolynomial)
        ));
    }

    #[test]
    fn dimension_multiplicity_cases() {
        let w = weyl();
        // D/D(E − 1/2): dims 2n+1 → (1, 2)
        let p = &Op::euler() - &Op::term(0, 0, crate::rat::rat(1, 2));
        let ideal = LeftIdealPresentation::principal(&w, p).unwrap();
        assert_eq!(dimension_multiplicity(&w, &ideal).unwrap(), (1, 2));
        // D itself: (2, 1) over any curve
        for g in [weyl(), g23()] {
            let ideal = LeftIdealPresentation::zero_ideal();
            assert_eq!(dimension_multiplicity(&g, &ideal).unwrap(), (2, 1));
        }
        // D/D·t∂t → (1, 3)
        let tdt = &(&Op::t_pow(1) * &Op::d_pow(1)) * &Op::t_pow(1);
        let ideal = LeftIdealPresentation::principal(&w, tdt).unwrap();
        assert_eq!(dimension_multiplicity(&w, &ideal).unwrap(), (1, 3));
    }

    #[test]
    fn holonomicity() {
        let w = weyl();
        let ideal = LeftIdealPresentation::principal(&w, Op::d_pow(1)).unwrap();
        assert!(is_holonomic(&w, &ideal).unwrap());
        assert!(!is_holonomic(&w, &LeftIdealPresentation::zero_ideal()).unwrap());
        // zero module is holonomic by convention
        let unit = LeftIdealPresentation::principal(&w, Op::one()).unwrap();
        assert!(is_holonomic(&w, &unit).unwrap());
        // (E−α)(E−β) principal: always holonomic
        let e = Op::euler();
        let p = &(&e - &Op::term(0, 0, crate::rat::rat(1, 3)))
            * &(&e - &Op::term(0, 0, crate::rat::rat(2, 5)));
        let ideal = LeftIdealPresentation::principal(&w, p).unwrap();
        assert!(is_holonomic(&w, &ideal).unwrap());
    }

    #[test]
    fn multiplicity_additive_for_products() {
        let w = weyl();
        let samples = [
            &Op::euler() - &Op::term(0, 0, rint(2)),
            Op::t_pow(1),
            &Op::d_pow(1) * &Op::d_pow(1),
        ];
        for p in &samples {
            for q in &samples {
                let pq = p * q;
                let ep = dimension_multiplicity(
                    &w,
                    &LeftIdealPresentation::principal(&w, p.clone()).unwrap(),
                )
                .unwrap();
                let eq = dimension_multiplicity(
                    &w,
                    &LeftIdealPresentation::principal(&w, q.clone()).unwrap(),
                )
                .unwrap();
                let epq = dimension_multiplicity(
                    &w,
                    &LeftIdealPresentation::principal(&w, pq).unwrap(),
                )
                .unwrap();
                assert_eq!(epq.1, ep.1 + eq.1);
            }
        }
    }
}
