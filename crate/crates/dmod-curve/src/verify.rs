//! The one-shot verification suite: nine exact checks tying the whole
//! crate together, shared by `dmod-curve verify` and the acceptance test
//! target. Every tolerance is exact equality; randomized checks use a
//! fixed-seed ChaCha generator so runs are bit-identical.

use crate::diffring::{build_pw, pw_euler_poly, symbol, verify_gr_generators};
use crate::error::Result;
use crate::ext::{expected_ext1, ext_table, non_split_witness, SimpleLabel};
use crate::hilbert::{
    bernstein_closed_form, bernstein_dim, bernstein_onset, dimension_multiplicity,
    fit_quasi_polynomial, module_hilbert, LeftIdealPresentation,
};
use crate::indecomp::{
    build_indecomposable, composition_series, is_indecomposable_certified, IndecomposableKind,
    WordEnd,
};
use crate::modules::{
    build_malpha, build_minfty, inner_window, is_simple_certified, localization_check,
    GradedModuleModel, SimpleVerdict, Window,
};
use crate::opalgebra::{graded_divide, HomogeneousComponent, LaurentWeylOperator};
use crate::poly::QPoly;
use crate::rat::{rat, rint, Rat};
use crate::semigroup::NumericalSemigroup;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

/// Result of one verification criterion.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

/// Settings shared by the whole suite.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Featured curve for the criteria that take one (beyond the pinned
    /// test set).
    pub gens: Vec<i64>,
    pub seed: u64,
    pub threads: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            gens: vec![2, 3],
            seed: 42,
            threads: threads_from_env(),
        }
    }
}

/// Parallelism degree: `DMOD_CURVE_THREADS`, default 1.
pub fn threads_from_env() -> usize {
    std::env::var("DMOD_CURVE_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

fn pinned_curves() -> Vec<NumericalSemigroup> {
    [vec![2, 3], vec![2, 5], vec![3, 4, 5]]
        .iter()
        .map(|g| NumericalSemigroup::new(g).expect("pinned curves are valid"))
        .collect()
}

fn outcome(
    id: usize,
    name: &'static str,
    start: Instant,
    result: Result<(bool, String)>,
) -> CriterionOutcome {
    let (passed, detail) = match result {
        Ok((p, d)) => (p, d),
        Err(e) => (false, format!("error: {}", e)),
    };
    CriterionOutcome {
        id,
        name,
        passed,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

/// Criterion 1: `dim Bⁿ = (n+1)(n+2)/2 − s` exactly on `[onset, 80]` for
/// the pinned curves.
pub fn criterion_bernstein_formula(_cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        let mut details = Vec::new();
        let mut ok = true;
        for g in pinned_curves() {
            let s = g.gamma_prime(g.frobenius())?.s();
            let onset = bernstein_onset(&g, 80);
            match onset {
                Some(n0) => {
                    let exact = (n0..=80)
                        .all(|n| bernstein_dim(&g, n) as i64 == bernstein_closed_form(n, s));
                    ok &= exact;
                    details.push(format!("{}: s={} onset={} exact={}", g, s, n0, exact));
                }
                None => {
                    ok = false;
                    details.push(format!("{}: no onset found", g));
                }
            }
        }
        Ok((ok, details.join("; ")))
    };
    outcome(1, "bernstein-dimension-formula", start, run())
}

/// Criterion 2: `σ(−w) = σ(w) + w` for `|w| ≤ 50` and
/// `symbol(P_w) = t^{σ(−w)} ξ^{σ(w)}` for `|w| ≤ 20`.
pub fn criterion_sigma_symbols(_cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        for g in pinned_curves() {
            for w in -50..=50i64 {
                ok &= g.sigma(-w) as i64 == g.sigma(w) as i64 + w;
            }
            for w in -20..=20i64 {
                let syms = symbol(&build_pw(&g, w), &g, true)?;
                ok &= syms.len() == 1
                    && syms[0].t_exp as usize == g.sigma(-w)
                    && syms[0].xi_exp as usize == g.sigma(w)
                    && syms[0].coeff == rint(1);
            }
        }
        Ok((ok, "sigma identity on [-50,50], symbols on [-20,20]".into()))
    };
    outcome(2, "sigma-identity-and-symbols", start, run())
}

/// Criterion 3: the symbol exponents of the generators reproduce the
/// minimal generators of `Γ'` for the pinned curves.
pub fn criterion_gr_generators(_cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        let mut details = Vec::new();
        for g in pinned_curves() {
            let verified = verify_gr_generators(&g)?;
            ok &= verified;
            details.push(format!("{}: {}", g, verified));
        }
        Ok((ok, details.join("; ")))
    };
    outcome(3, "gr-d-minimal-generators", start, run())
}

/// A seeded random principal presentation `D·P_w·h(E)` over the given
/// curve.
fn random_principal(
    gamma: &NumericalSemigroup,
    rng: &mut ChaCha8Rng,
) -> LeftIdealPresentation {
    loop {
        let w = rng.gen_range(-4..=4i64);
        let deg = rng.gen_range(0..=2usize);
        let mut coeffs: Vec<Rat> = (0..=deg).map(|_| rint(rng.gen_range(-3..=3))).collect();
        if coeffs.iter().all(num_traits::Zero::is_zero) {
            coeffs[deg] = rint(1);
        }
        let h = QPoly::from_coeffs(coeffs);
        if h.is_zero() {
            continue;
        }
        let f = &pw_euler_poly(gamma, w) * &h;
        if w == 0 && f.degree() == Some(0) {
            // a nonzero constant generates the unit ideal
            continue;
        }
        let p = HomogeneousComponent::new(w, f).to_operator();
        if p.is_zero() {
            continue;
        }
        return LeftIdealPresentation::principal(gamma, p).expect("built inside D");
    }
}

/// Criterion 4: dimension and multiplicity of the named modules, plus the
/// Bernstein inequality on 25 random principal ideals.
pub fn criterion_dimension_multiplicity(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        let weyl = NumericalSemigroup::full();
        let featured = NumericalSemigroup::new(&cfg.gens)?;
        let mut ok = true;
        let mut details = Vec::new();

        for g in [&weyl, &featured] {
            let de = dimension_multiplicity(g, &LeftIdealPresentation::zero_ideal())?;
            ok &= de == (2, 1);
            details.push(format!("D over {}: {:?}", g, de));
        }
        let named: [(&str, LaurentWeylOperator, (usize, u64)); 3] = [
            ("D/Dt", LaurentWeylOperator::t_pow(1), (1, 1)),
            ("D/Dd", LaurentWeylOperator::d_pow(1), (1, 1)),
            (
                "D/D(E-1/2)",
                &LaurentWeylOperator::euler() - &LaurentWeylOperator::term(0, 0, rat(1, 2)),
                (1, 2),
            ),
        ];
        for (name, op, expected) in named {
            let ideal = LeftIdealPresentation::principal(&weyl, op)?;
            let de = dimension_multiplicity(&weyl, &ideal)?;
            ok &= de == expected;
            details.push(format!("{}: {:?}", name, de));
        }

        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut inequality_holds = true;
        for k in 0..25 {
            let g = if k % 2 == 0 { &weyl } else { &featured };
            let ideal = random_principal(g, &mut rng);
            let (d, _) = dimension_multiplicity(g, &ideal)?;
            inequality_holds &= d >= 1;
        }
        ok &= inequality_holds;
        details.push(format!("Bernstein inequality on 25 random principal ideals: {}", inequality_holds));
        Ok((ok, details.join("; ")))
    };
    outcome(4, "dimension-and-multiplicity", start, run())
}

/// Criterion 5: the fitted quasi-polynomials reproduce held-out Hilbert
/// values exactly on a tail of length at least `2m` past the fitting
/// window.
pub fn criterion_quasi_polynomials(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        let weyl = NumericalSemigroup::full();
        let featured = NumericalSemigroup::new(&cfg.gens)?;
        let mut profiles: Vec<(String, NumericalSemigroup, LeftIdealPresentation)> = vec![
            (
                "D".into(),
                featured.clone(),
                LeftIdealPresentation::zero_ideal(),
            ),
            (
                "D/Dt".into(),
                weyl.clone(),
                LeftIdealPresentation::principal(&weyl, LaurentWeylOperator::t_pow(1))?,
            ),
            (
                "D/Dd".into(),
                weyl.clone(),
                LeftIdealPresentation::principal(&weyl, LaurentWeylOperator::d_pow(1))?,
            ),
            (
                "D/D(E-1/2)".into(),
                weyl.clone(),
                LeftIdealPresentation::principal(
                    &weyl,
                    &LaurentWeylOperator::euler()
                        - &LaurentWeylOperator::term(0, 0, rat(1, 2)),
                )?,
            ),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for k in 0..25 {
            let g = if k % 2 == 0 { &weyl } else { &featured };
            profiles.push((format!("random-{}", k), g.clone(), random_principal(g, &mut rng)));
        }

        let fit_nmax = 48i64;
        let mut ok = true;
        for (name, g, ideal) in &profiles {
            let profile = module_hilbert(g, ideal, fit_nmax, 6)?;
            let qp = fit_quasi_polynomial(&profile.dims)?;
            let tail = 2 * qp.period as i64 + 2;
            let extended = module_hilbert(g, ideal, fit_nmax + tail, 6)?;
            let held_out_exact = (fit_nmax + 1..=fit_nmax + tail)
                .all(|n| qp.predict(n) == rint(extended.dims[n as usize] as i64));
            if !held_out_exact {
                ok = false;
            }
            debug_assert!(held_out_exact, "{}", name);
        }
        // synthetic period-2 profile 1,1,2,2,3,3,...
        let synth: Vec<usize> = (0..40).map(|n| n / 2 + 1).collect();
        let qp = fit_quasi_polynomial(&synth[..32])?;
        let synth_ok = qp.period == 2
            && qp.dimension == 1
            && qp.multiplicity == 1
            && (32..40).all(|n| qp.predict(n as i64) == rint(synth[n] as i64));
        ok &= synth_ok;
        Ok((
            ok,
            format!(
                "{} profiles re-predicted exactly; synthetic period-2: {}",
                profiles.len(),
                synth_ok
            ),
        ))
    };
    outcome(5, "quasi-polynomial-fits", start, run())
}

/// Criterion 6: the 5×5 Ext table over `{0, ∞, 1/2, 1/3, 2/3}` matches
/// the classification, with Morita transfer re-verified on the featured
/// curve.
pub fn criterion_ext_table(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        let featured = NumericalSemigroup::new(&cfg.gens)?;
        let samples = [rat(1, 2), rat(1, 3), rat(2, 3)];
        let table = ext_table(&featured, &samples, (-12, 12))?;
        let mut ok = table.len() == 25;
        let mut nonzero = 0;
        for entry in &table {
            let expected = expected_ext1(&entry.source, &entry.target);
            ok &= entry.ext1_dim == expected;
            if expected > 0 {
                nonzero += 1;
                ok &= entry.graded_degree == Some(0);
            }
        }
        ok &= nonzero == 5;
        // the non-split witness behind the (∞, 0) cell
        let witness = non_split_witness((-14, 14))?;
        ok &= witness.non_split();
        Ok((
            ok,
            format!(
                "25 cells verified, {} nonzero, non-split witness: {}",
                nonzero,
                witness.non_split()
            ),
        ))
    };
    outcome(6, "ext-table", start, run())
}

/// Criterion 7: simplicity certificates for `M_0`, `M_{1/2}`, `M_{1/3}`,
/// `M_∞` over the Weyl algebra and the featured curve, certified on the
/// inner window `[-12, 12]`, plus localization checks.
pub fn criterion_simple_modules(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        let build_window: Window = (-18, 18);
        let weyl = NumericalSemigroup::full();
        let featured = NumericalSemigroup::new(&cfg.gens)?;
        let mut ok = true;
        let mut details = Vec::new();
        for g in [&weyl, &featured] {
            let mut models: Vec<GradedModuleModel> = vec![
                build_malpha(g, &Rat::zero(), build_window)?,
                build_malpha(g, &rat(1, 2), build_window)?,
                build_malpha(g, &rat(1, 3), build_window)?,
                build_minfty(g, build_window, 80 + 4 * g.genus())?,
            ];
            let inner = inner_window(build_window);
            ok &= inner == (-12, 12);
            for m in models.drain(..) {
                let (verdict, _) = is_simple_certified(&m);
                let simple = verdict == SimpleVerdict::Simple;
                ok &= simple;
                details.push(format!("{} over {}: {:?}", m.tag, g, verdict));
            }
            for alpha in [Rat::zero(), rat(1, 2), rat(1, 3)] {
                let loc = localization_check(g, &alpha, (-12, 12))?;
                ok &= loc;
                details.push(format!("S^-1 M_{} = N_{} over {}: {}", alpha, alpha, g, loc));
            }
        }
        Ok((ok, details.join("; ")))
    };
    outcome(7, "simple-module-suite", start, run())
}

/// Criterion 8: word-module invariants for `n ≤ 4`: multiplicity `n`,
/// composition length `n`, the factor list of `D/D∂t`, and its
/// indecomposability certificate.
pub fn criterion_indecomposables(_cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        let window: Window = (-14, 14);
        let mut ok = true;
        let mut details = Vec::new();
        for n in 1..=4i64 {
            for beta in [WordEnd::Zero, WordEnd::Infinity] {
                let b = build_indecomposable(&IndecomposableKind::Word { beta, n }, window)?;
                let factors = composition_series(&b.model)?;
                let good = b.multiplicity == n as u64
                    && factors.len() == n as usize
                    && factors.iter().all(|f| f.confirmed);
                ok &= good;
                details.push(format!(
                    "w({:?},{}): e={} length={}",
                    beta,
                    n,
                    b.multiplicity,
                    factors.len()
                ));
            }
        }
        // D/D∂t: factors {M_0[−1], M_∞} and indecomposable
        let dt = build_indecomposable(
            &IndecomposableKind::Word {
                beta: WordEnd::Infinity,
                n: 2,
            },
            window,
        )?;
        let factors = composition_series(&dt.model)?;
        let factors_ok = factors.len() == 2
            && factors[0].family == SimpleLabel::Zero
            && factors[0].twist == -1
            && factors[1].family == SimpleLabel::Infinity
            && factors[1].twist == 0;
        let (indec, cert) = is_indecomposable_certified(&dt.model)?;
        ok &= factors_ok && indec;
        details.push(format!(
            "D/D(dt): factors ok={} indecomposable={} endo_dim={}",
            factors_ok, indec, cert.endo_dim
        ));
        Ok((ok, details.join("; ")))
    };
    outcome(8, "alternating-word-indecomposables", start, run())
}

/// Criterion 9: 200 seeded random graded divisions reconstruct exactly
/// with remainder order below the divisor order.
pub fn criterion_division(cfg: &VerifyConfig) -> CriterionOutcome {
    let start = Instant::now();
    let run = || -> Result<(bool, String)> {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9E3779B97F4A7C15);
        let mut random_component = |max_deg: usize, allow_zero: bool| loop {
            let degree = rng.gen_range(-6..=6i64);
            let coeffs: Vec<Rat> = (0..=max_deg)
                .map(|_| rint(rng.gen_range(-5..=5)))
                .collect();
            let f = QPoly::from_coeffs(coeffs);
            if allow_zero || !f.is_zero() {
                return HomogeneousComponent::new(degree, f);
            }
        };
        let mut ok = true;
        for _ in 0..200 {
            let p = random_component(4, true);
            let q = random_component(3, false);
            let (l, r) = graded_divide(&p, &q)?;
            let back = &(&l.to_operator() * &q.to_operator()) + &r.to_operator();
            ok &= back == p.to_operator();
            let r_order = r.order().map(|o| o as i64).unwrap_or(-1);
            let q_order = q.order().map(|o| o as i64).unwrap_or(-1);
            ok &= r_order < q_order;
        }
        Ok((ok, "200 random divisions reconstructed exactly".into()))
    };
    outcome(9, "graded-division", start, run())
}

type CriterionFn = fn(&VerifyConfig) -> CriterionOutcome;

const CRITERIA: [CriterionFn; 9] = [
    criterion_bernstein_formula,
    criterion_sigma_symbols,
    criterion_gr_generators,
    criterion_dimension_multiplicity,
    criterion_quasi_polynomials,
    criterion_ext_table,
    criterion_simple_modules,
    criterion_indecomposables,
    criterion_division,
];

/// Run the whole suite. Criteria are independent and may run on
/// `cfg.threads` worker threads; the returned order is always by id.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CriterionOutcome> {
    if cfg.threads <= 1 {
        return CRITERIA.iter().map(|f| f(cfg)).collect();
    }
    let queue = std::sync::Mutex::new((0..CRITERIA.len()).collect::<Vec<_>>());
    let results = std::sync::Mutex::new(Vec::<CriterionOutcome>::new());
    std::thread::scope(|scope| {
        for _ in 0..cfg.threads.min(CRITERIA.len()) {
            scope.spawn(|| loop {
                let next = queue.lock().unwrap().pop();
                match next {
                    Some(i) => {
                        let out = CRITERIA[i](cfg);
                        results.lock().unwrap().push(out);
                    }
                    None => break,
                }
            });
        }
    });
    let mut out = results.into_inner().unwrap();
    out.sort_by_key(|o| o.id);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_criterion_is_fast_and_green() {
        let cfg = VerifyConfig::default();
        let out = criterion_division(&cfg);
        assert!(out.passed, "{}", out.detail);
    }

    #[test]
    fn deterministic_outcomes_across_runs() {
        let cfg = VerifyConfig::default();
        let a = criterion_division(&cfg);
        let b = criterion_division(&cfg);
        assert_eq!(a.passed, b.passed);
        assert_eq!(a.detail, b.detail);
    }

    #[test]
    fn parallel_matches_sequential_order() {
        let mut cfg = VerifyConfig {
            threads: 3,
            ..VerifyConfig::default()
        };
        // restrict to a cheap subset by reusing single criteria directly
        cfg.threads = 3;
        let seq: Vec<usize> = vec![
            criterion_sigma_symbols(&cfg).id,
            criterion_gr_generators(&cfg).id,
        ];
        assert_eq!(seq, vec![2, 3]);
    }
}
