//! Command-line front end. The binary is a thin wrapper: every subcommand
//! parses its flags, calls into the library, and renders a report as text
//! or JSON (rationals are always serialized as exact `p/q` strings).
//!
//! Exit codes: 0 success, 1 failed verification, 2 usage errors (from
//! clap), 3 violated mathematical preconditions.

use crate::error::{Error, Result};
use crate::ext::{ext_table, SimpleLabel};
use crate::hilbert::{fit_quasi_polynomial, module_hilbert, LeftIdealPresentation};
use crate::indecomp::{
    build_indecomposable, composition_series, is_indecomposable_certified, word,
    IndecomposableKind, WordEnd,
};
use crate::modules::{
    build_malpha, build_minfty, inner_window, is_simple_certified, localization_check,
    GradedModuleModel, SimpleVerdict,
};
use crate::parse::{parse_int_list, parse_operator, parse_rational_list, parse_window};
use crate::rat::Rat;
use crate::semigroup::NumericalSemigroup;
use crate::verify::{run_all, threads_from_env, VerifyConfig};
use crate::{diffring, rat};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "dmod-curve",
    version,
    about = "Differential operators on affine monomial curves: generators, Hilbert data, graded modules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Semigroup combinatorics: gaps, sigma table, plane-semigroup gaps.
    Semigroup {
        /// Comma-separated generators, e.g. 2,3
        #[arg(long)]
        gens: String,
        /// Degree window lo..hi for the sigma table
        #[arg(long, default_value = "-12..12")]
        window: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The operators P_w: degree, vanishing set, order, normal form, symbol.
    Operators {
        #[arg(long)]
        gens: String,
        #[arg(long, default_value = "-12..12")]
        window: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The associated graded ring: plane gaps and minimal generators.
    Grd {
        #[arg(long)]
        gens: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Hilbert profile and quasi-polynomial of a cyclic module D/I.
    Hilbert {
        #[arg(long)]
        gens: String,
        /// Generator of the principal ideal, e.g. "E-1/2"; omit for D itself
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long, default_value_t = 60)]
        nmax: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Simple graded modules: piece dimensions, simplicity, localization.
    Simples {
        #[arg(long)]
        gens: String,
        /// Alphas in [0,1), e.g. 0,1/2,1/3
        #[arg(long, default_value = "0,1/2,1/3")]
        alphas: String,
        #[arg(long, default_value = "-12..12")]
        window: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Degree-zero Ext table of the simple graded modules.
    ExtTable {
        #[arg(long, default_value = "2,3")]
        gens: String,
        /// Alphas in (0,1), e.g. 1/2,1/3,2/3
        #[arg(long, default_value = "1/2,1/3,2/3")]
        alphas: String,
        #[arg(long, default_value = "-12..12")]
        window: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Word and power indecomposables over the Weyl algebra.
    Indecomp {
        /// word | power
        #[arg(long)]
        kind: String,
        /// For word modules: 0 | inf
        #[arg(long)]
        beta: Option<String>,
        /// For power modules: alpha in (0,1)
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value = "-10..10")]
        window: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full verification suite; nonzero exit on any failure.
    Verify {
        #[arg(long, default_value = "2,3")]
        gens: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Dispatch a parsed command line; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            3
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Semigroup {
            gens,
            window,
            format,
        } => {
            let report = semigroup_report(&gens, &window)?;
            emit(&report, format);
            Ok(0)
        }
        Command::Operators {
            gens,
            window,
            format,
        } => {
            let report = operators_report(&gens, &window)?;
            emit(&report, format);
            Ok(0)
        }
        Command::Grd { gens, format } => {
            let report = grd_report(&gens)?;
            emit(&report, format);
            Ok(0)
        }
        Command::Hilbert {
            gens,
            ideal,
            nmax,
            format,
        } => {
            let report = hilbert_report(&gens, ideal.as_deref(), nmax)?;
            emit(&report, format);
            Ok(0)
        }
        Command::Simples {
            gens,
            alphas,
            window,
            format,
        } => {
            let report = simples_report(&gens, &alphas, &window)?;
            emit(&report, format);
            Ok(0)
        }
        Command::ExtTable {
            gens,
            alphas,
            window,
            format,
        } => {
            let report = ext_table_report(&gens, &alphas, &window)?;
            emit(&report, format);
            Ok(0)
        }
        Command::Indecomp {
            kind,
            beta,
            alpha,
            n,
            window,
            format,
        } => {
            let report = indecomp_report(&kind, beta.as_deref(), alpha.as_deref(), n, &window)?;
            emit(&report, format);
            Ok(0)
        }
        Command::Verify { gens, seed, format } => {
            let cfg = VerifyConfig {
                gens: parse_int_list(&gens)?,
                seed,
                threads: threads_from_env(),
            };
            let outcomes = run_all(&cfg);
            let all_passed = outcomes.iter().all(|o| o.passed);
            match format {
                Format::Text => {
                    for o in &outcomes {
                        println!(
                            "{}  {}  {} ({} ms)",
                            if o.passed { "ok  " } else { "FAIL" },
                            o.id,
                            o.name,
                            o.millis
                        );
                        println!("      {}", o.detail);
                    }
                    println!(
                        "verify: {}/{} criteria passed",
                        outcomes.iter().filter(|o| o.passed).count(),
                        outcomes.len()
                    );
                }
                Format::Json => {
                    let failures: Vec<&str> = outcomes
                        .iter()
                        .filter(|o| !o.passed)
                        .map(|o| o.name)
                        .collect();
                    let v = json!({
                        "outcomes": outcomes,
                        "all_passed": all_passed,
                        "failures": failures,
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

struct Report {
    text: String,
    value: Value,
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Text => println!("{}", report.text),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report.value).unwrap()),
    }
}

fn curve(gens: &str) -> Result<NumericalSemigroup> {
    NumericalSemigroup::new(&parse_int_list(gens)?)
}

fn op_json(op: &crate::opalgebra::LaurentWeylOperator) -> Value {
    Value::Array(
        op.json_terms()
            .into_iter()
            .map(|(i, j, c)| json!([i, j, c]))
            .collect(),
    )
}

fn semigroup_report(gens: &str, window: &str) -> Result<Report> {
    let g = curve(gens)?;
    let (lo, hi) = parse_window(window)?;
    let gp = g.gamma_prime(g.frobenius())?;
    let sigma_table: Vec<(i64, usize)> = (lo..=hi).map(|w| (w, g.sigma(w))).collect();

    let mut text = format!(
        "Gamma = {}\n  gaps H = {:?}\n  frobenius = {}\n  genus = {}\n",
        g,
        g.gaps(),
        g.frobenius(),
        g.genus()
    );
    text.push_str("  sigma table (w : sigma(w)):\n");
    for (w, s) in &sigma_table {
        text.push_str(&format!("    {:>4} : {}\n", w, s));
    }
    text.push_str(&format!(
        "  plane semigroup: s = {}, gap points = {:?}\n",
        gp.s(),
        gp.gap_points()
    ));
    let value = json!({
        "generators": g.generators(),
        "gaps": g.gaps(),
        "frobenius": g.frobenius(),
        "genus": g.genus(),
        "sigma_table": sigma_table,
        "gamma_prime": {
            "s": gp.s(),
            "gap_points": gp.gap_points().iter().collect::<Vec<_>>(),
        },
    });
    Ok(Report { text, value })
}

fn operators_report(gens: &str, window: &str) -> Result<Report> {
    let g = curve(gens)?;
    let (lo, hi) = parse_window(window)?;
    let mut rows = Vec::new();
    let mut text = format!("P_w over {} for w in {}..{}\n", g, lo, hi);
    for w in lo..=hi {
        let p = diffring::build_pw(&g, w);
        let syms = diffring::symbol(&p, &g, true)?;
        let sym = syms
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" + ");
        text.push_str(&format!(
            "  w={:>4}  omega={:?}  sigma={}  P_w = {}  symbol = {}\n",
            w,
            g.omega(w),
            g.sigma(w),
            p,
            sym
        ));
        rows.push(json!({
            "w": w,
            "omega": g.omega(w),
            "sigma": g.sigma(w),
            "operator": p.to_string(),
            "terms": op_json(&p),
            "symbol": sym,
        }));
    }
    Ok(Report {
        text,
        value: json!({ "generators": g.generators(), "rows": rows }),
    })
}

fn grd_report(gens: &str) -> Result<Report> {
    let g = curve(gens)?;
    let gp = g.gamma_prime(g.frobenius())?;
    let minimal = gp.minimal_generators()?;
    let verified = diffring::verify_gr_generators(&g)?;
    let text = format!(
        "gr D = k[Gamma'] for Gamma = {}\n  s = {}\n  gap points = {:?}\n  minimal generators (t^i xi^j) = {:?}\n  symbol cross-check: {}\n",
        g,
        gp.s(),
        gp.gap_points(),
        minimal,
        verified
    );
    let value = json!({
        "generators": g.generators(),
        "s": gp.s(),
        "gap_points": gp.gap_points().iter().collect::<Vec<_>>(),
        "minimal_generators": minimal.iter().collect::<Vec<_>>(),
        "verified": verified,
    });
    Ok(Report { text, value })
}

fn hilbert_report(gens: &str, ideal: Option<&str>, nmax: i64) -> Result<Report> {
    let g = curve(gens)?;
    let (ideal_desc, presentation) = match ideal {
        None => ("0 (module D)".to_string(), LeftIdealPresentation::zero_ideal()),
        Some(src) => {
            let op = parse_operator(src)?;
            (
                format!("D*({})", op),
                LeftIdealPresentation::principal(&g, op)?,
            )
        }
    };
    let profile = module_hilbert(&g, &presentation, nmax, 6)?;
    let fit = fit_quasi_polynomial(&profile.dims);
    let mut text = format!(
        "Hilbert profile of D/I over {} with I = {}\n  dims[0..={}] = {:?}\n  exact: {}\n",
        g, ideal_desc, nmax, profile.dims, profile.exact
    );
    let value = match &fit {
        Ok(qp) => {
            text.push_str(&format!(
                "  d = {}, e = {}, period m = {}, onset = {}\n",
                qp.dimension, qp.multiplicity, qp.period, qp.onset
            ));
            for (r, p) in qp.polys.iter().enumerate() {
                text.push_str(&format!("  P_{}(n) = {}\n", r, p.render("n")));
            }
            json!({
                "generators": g.generators(),
                "ideal": ideal_desc,
                "dims": profile.dims,
                "exact": profile.exact,
                "dimension": qp.dimension,
                "multiplicity": qp.multiplicity,
                "period": qp.period,
                "onset": qp.onset,
                "polys": qp.polys.iter().map(|p| {
                    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
                }).collect::<Vec<_>>(),
            })
        }
        Err(Error::ZeroModule) => {
            text.push_str("  zero module (d, e undefined)\n");
            json!({
                "generators": g.generators(),
                "ideal": ideal_desc,
                "dims": profile.dims,
                "exact": profile.exact,
                "zero_module": true,
            })
        }
        Err(e) => return Err(e.clone()),
    };
    Ok(Report { text, value })
}

fn verdict_str(v: SimpleVerdict) -> &'static str {
    match v {
        SimpleVerdict::Simple => "simple",
        SimpleVerdict::NotSimple => "not-simple",
        SimpleVerdict::Inconclusive => "inconclusive",
    }
}

fn simples_report(gens: &str, alphas: &str, window: &str) -> Result<Report> {
    let g = curve(gens)?;
    let win = parse_window(window)?;
    let alphas: Vec<Rat> = parse_rational_list(alphas)?;
    let inner = inner_window(win);
    let mut rows = Vec::new();
    let mut text = format!(
        "Simple graded modules over {} on window {}..{} (certified on {}..{})\n",
        g, win.0, win.1, inner.0, inner.1
    );
    let mut handle = |label: String, m: &GradedModuleModel, loc: Option<bool>| {
        let (verdict, cert) = is_simple_certified(m);
        let dims: Vec<usize> = (win.0..=win.1).map(|d| m.piece_dim(d)).collect();
        text.push_str(&format!(
            "  {:<8} dims {:?}\n           simplicity: {}  localization: {}\n",
            label,
            dims,
            verdict_str(verdict),
            loc.map_or("-".to_string(), |b| b.to_string()),
        ));
        rows.push(json!({
            "label": label,
            "piece_dims": dims,
            "simple": verdict_str(verdict),
            "inner_window": [cert.inner.0, cert.inner.1],
            "localization": loc,
        }));
    };
    for alpha in &alphas {
        let m = build_malpha(&g, alpha, win)?;
        let loc = localization_check(&g, alpha, win)?;
        handle(format!("M[{}]", alpha), &m, Some(loc));
    }
    let minf = build_minfty(&g, win, 4 * (win.1 - win.0) as usize + 4 * g.genus() + 8)?;
    handle("M[inf]".to_string(), &minf, None);
    Ok(Report {
        text,
        value: json!({
            "generators": g.generators(),
            "window": [win.0, win.1],
            "rows": rows,
        }),
    })
}

fn ext_table_report(gens: &str, alphas: &str, window: &str) -> Result<Report> {
    let g = curve(gens)?;
    let win = parse_window(window)?;
    let alphas = parse_rational_list(alphas)?;
    let table = ext_table(&g, &alphas, win)?;
    let side = alphas.len() + 2;
    let label = |l: &SimpleLabel| format!("{}", l);

    let mut text = format!(
        "Ext^1(M_a, M_b)_0 over {} (rows: a, columns: b)\n",
        g
    );
    text.push_str(&format!("  {:>6}", ""));
    for j in 0..side {
        text.push_str(&format!(" {:>6}", label(&table[j].target)));
    }
    text.push('\n');
    for i in 0..side {
        text.push_str(&format!("  {:>6}", label(&table[i * side].source)));
        for j in 0..side {
            let e = &table[i * side + j];
            let cell = if e.ext1_dim > 0 {
                format!("{}*", e.ext1_dim)
            } else {
                "0".to_string()
            };
            text.push_str(&format!(" {:>6}", cell));
        }
        text.push('\n');
    }
    text.push_str("  (* = one-dimensional: the three classified cases)\n");
    let entries: Vec<Value> = table
        .iter()
        .map(|e| {
            json!({
                "source": label(&e.source),
                "target": label(&e.target),
                "hom_dim": e.hom_dim,
                "ext1_dim": e.ext1_dim,
                "graded_degree": e.graded_degree,
            })
        })
        .collect();
    Ok(Report {
        text,
        value: json!({
            "generators": g.generators(),
            "entries": entries,
        }),
    })
}

fn indecomp_report(
    kind: &str,
    beta: Option<&str>,
    alpha: Option<&str>,
    n: i64,
    window: &str,
) -> Result<Report> {
    let win = parse_window(window)?;
    let kind = match kind {
        "word" => {
            let beta = match beta {
                Some("0") => WordEnd::Zero,
                Some("inf") | Some("infinity") => WordEnd::Infinity,
                other => {
                    return Err(Error::Usage(format!(
                        "--beta must be 0 or inf for word modules, got {:?}",
                        other
                    )))
                }
            };
            IndecomposableKind::Word { beta, n }
        }
        "power" => {
            let alpha = alpha
                .and_then(rat::parse)
                .ok_or_else(|| Error::Usage("--alpha required for power modules".into()))?;
            IndecomposableKind::Power { alpha, n }
        }
        other => {
            return Err(Error::Usage(format!(
                "--kind must be word or power, got '{}'",
                other
            )))
        }
    };
    let built = build_indecomposable(&kind, win)?;
    let factors = composition_series(&built.model)?;
    let (indec, cert) = is_indecomposable_certified(&built.model)?;
    let word_str = match &kind {
        IndecomposableKind::Word { beta, n } => Some(word(*beta, *n)?.to_string()),
        IndecomposableKind::Power { .. } => None,
    };
    let presentation = built.presentation.generators()[0].to_string();
    let factor_strs: Vec<String> = factors.iter().map(ToString::to_string).collect();
    let dims: Vec<usize> = (win.0..=win.1).map(|d| built.model.piece_dim(d)).collect();
    let mut text = format!("Indecomposable over the Weyl algebra: {:?}\n", kind);
    if let Some(w) = &word_str {
        text.push_str(&format!("  word = {}\n", w));
    }
    text.push_str(&format!("  presentation: D/D({})\n", presentation));
    text.push_str(&format!(
        "  d = {}, e = {}\n  piece dims on {}..{}: {:?}\n",
        built.dimension, built.multiplicity, win.0, win.1, dims
    ));
    text.push_str(&format!(
        "  composition series (bottom first): [{}]\n",
        factor_strs.join(", ")
    ));
    text.push_str(&format!(
        "  indecomposable: {} (endomorphism dim {})\n",
        indec, cert.endo_dim
    ));
    Ok(Report {
        text,
        value: json!({
            "kind": format!("{:?}", kind),
            "word": word_str,
            "presentation": presentation,
            "dimension": built.dimension,
            "multiplicity": built.multiplicity,
            "piece_dims": dims,
            "factors": factor_strs,
            "indecomposable": indec,
            "endo_dim": cert.endo_dim,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_render_both_formats() {
        let r = semigroup_report("2,3", "-4..4").unwrap();
        assert!(r.text.contains("frobenius = 1"));
        assert!(r.value["gamma_prime"]["s"] == json!(2));
        let r = grd_report("2,3").unwrap();
        assert!(r.value["verified"] == json!(true));
    }

    #[test]
    fn hilbert_report_principal() {
        let r = hilbert_report("1", Some("E - 1/2"), 30).unwrap();
        assert_eq!(r.value["dimension"], json!(1));
        assert_eq!(r.value["multiplicity"], json!(2));
        assert_eq!(r.value["period"], json!(1));
        // zero module
        let r = hilbert_report("1", Some("1"), 10).unwrap();
        assert_eq!(r.value["zero_module"], json!(true));
    }

    #[test]
    fn ext_table_report_shape() {
        let r = ext_table_report("2,3", "1/2", "-10..10").unwrap();
        let entries = r.value["entries"].as_array().unwrap();
        assert_eq!(entries.len(), 9);
        let nonzero: usize = entries
            .iter()
            .filter(|e| e["ext1_dim"].as_u64().unwrap() > 0)
            .count();
        assert_eq!(nonzero, 3);
    }

    #[test]
    fn gcd_violation_is_a_math_error() {
        assert!(matches!(curve("4,6"), Err(Error::CommonFactor(2))));
    }

    #[test]
    fn indecomp_report_word() {
        let r = indecomp_report("word", Some("inf"), None, 3, "-10..10").unwrap();
        assert_eq!(r.value["multiplicity"], json!(3));
        assert_eq!(r.value["word"], json!("tdt"));
        assert_eq!(r.value["indecomposable"], json!(true));
        assert!(indecomp_report("word", None, None, 3, "-10..10").is_err());
        assert!(indecomp_report("power", None, None, 2, "-10..10").is_err());
    }
}
