//! Exact arithmetic in `Diff(T) = k[t,t⁻¹]⟨∂⟩` with the relation `[∂,t] = 1`.
//!
//! Operators are kept in normal form, all `∂` to the right, as a finite map
//! `(i, j) ↦ c` representing `Σ c·tⁱ∂ʲ`. A homogeneous operator of degree
//! `w` can equally be written `tʷ·f(E)` for the Euler operator `E = t∂`;
//! the [`HomogeneousComponent`] view is where the graded division algorithm
//! and membership tests live.

use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::rat::{rint, Rat};
use crate::semigroup::NumericalSemigroup;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial `k[t, t⁻¹]`, the module the operators act on.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn monomial(n: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(n, c);
        }
        LaurentPoly { terms }
    }

    pub fn t_pow(n: i64) -> Self {
        LaurentPoly::monomial(n, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.terms.iter().map(|(&n, c)| (n, c))
    }

    pub fn coeff(&self, n: i64) -> Rat {
        self.terms.get(&n).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, n: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(n).or_insert_with(Rat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&n);
        }
    }

    /// Does every exponent lie in `Γ` (so the polynomial is in `k[Γ]`)?
    pub fn supported_in(&self, gamma: &NumericalSemigroup) -> bool {
        self.terms.keys().all(|&n| gamma.contains(n))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (n, c) in rhs.terms() {
            out.add_term(n, c.clone());
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in &self.terms {
            let body = match n {
                0 => format!("{}", c),
                1 if c.is_one() => "t".to_string(),
                1 => format!("{}*t", c),
                _ if c.is_one() => format!("t^{}", n),
                _ => format!("{}*t^{}", c, n),
            };
            if first {
                write!(f, "{}", body)?;
                first = false;
            } else if let Some(s) = body.strip_prefix('-') {
                write!(f, " - {}", s)?;
            } else {
                write!(f, " + {}", body)?;
            }
        }
        Ok(())
    }
}

/// An element of `Diff(T)` in normal form: `Σ c_{ij} tⁱ ∂ʲ` with all `∂`
/// moved to the right via `[∂, t] = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentWeylOperator {
    terms: BTreeMap<(i64, u32), Rat>,
}

impl LaurentWeylOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, 0, Rat::one())
    }

    pub fn term(i: i64, j: u32, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        LaurentWeylOperator { terms }
    }

    /// `tⁱ` (any integer exponent).
    pub fn t_pow(i: i64) -> Self {
        Self::term(i, 0, Rat::one())
    }

    /// `∂ʲ`.
    pub fn d_pow(j: u32) -> Self {
        Self::term(0, j, Rat::one())
    }

    /// The Euler operator `E = t∂`.
    pub fn euler() -> Self {
        Self::term(1, 1, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, u32), &Rat)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: i64, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, key: (i64, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentWeylOperator {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| (k, v * c))
                .collect(),
        }
    }

    /// Order as a differential operator: the highest power of `∂`.
    /// `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Degree when homogeneous (`tⁱ∂ʲ` has degree `i − j`); `None` for zero
    /// or inhomogeneous operators.
    pub fn degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|&(i, j)| i - j as i64);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.is_empty() || self.degree().is_some()
    }

    /// Bernstein degree `max(i + j)` over the normal form. For elements of
    /// `D` this equals `max(2·order + degree)` over the homogeneous
    /// components, the filtration level of the Bernstein filtration.
    pub fn bernstein_degree(&self) -> Result<i64> {
        self.terms
            .keys()
            .map(|&(i, j)| i + j as i64)
            .max()
            .ok_or(Error::ZeroBernsteinDegree)
    }

    /// Apply to a Laurent polynomial: `tⁱ∂ʲ · tⁿ = n(n−1)⋯(n−j+1) tⁿ⁺ⁱ⁻ʲ`.
    pub fn apply(&self, g: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((i, j), c) in self.terms() {
            for (n, gc) in g.terms() {
                let mut factor = c * gc;
                for k in 0..j {
                    factor = factor * rint(n - k as i64);
                }
                out.add_term(n + i - j as i64, factor);
            }
        }
        out
    }

    pub fn apply_monomial(&self, n: i64) -> LaurentPoly {
        self.apply(&LaurentPoly::t_pow(n))
    }

    /// Split into homogeneous components, degrees strictly increasing.
    pub fn decompose(&self) -> Vec<HomogeneousComponent> {
        let mut by_degree: BTreeMap<i64, Vec<(u32, Rat)>> = BTreeMap::new();
        for ((i, j), c) in self.terms() {
            by_degree
                .entry(i - j as i64)
                .or_default()
                .push((j, c.clone()));
        }
        by_degree
            .into_iter()
            .map(|(w, terms)| {
                let top = terms.iter().map(|&(j, _)| j).max().unwrap() as usize;
                let mut falling = vec![Rat::zero(); top + 1];
                for (j, c) in terms {
                    falling[j as usize] = &falling[j as usize] + &c;
                }
                HomogeneousComponent {
                    degree: w,
                    euler_poly: QPoly::from_falling_coeffs(&falling),
                }
            })
            .collect()
    }

    /// Extract the single homogeneous component, or fail.
    pub fn as_component(&self) -> Result<HomogeneousComponent> {
        let comps = self.decompose();
        match comps.len() {
            0 => Ok(HomogeneousComponent::zero(0)),
            1 => Ok(comps.into_iter().next().unwrap()),
            _ => Err(Error::NotHomogeneous(self.to_string())),
        }
    }

    /// Does `P` map `k[source]` into `k[target]`? With `source = target = Γ`
    /// this is membership in `D = Diff(A)`; with `source = ℕ₀` it tests the
    /// bimodule `D(B, ·)`, and with `target = ℕ₀` the bimodule `D(·, B)`.
    ///
    /// A homogeneous `tʷ f(E)` qualifies iff `f(γ) = 0` for every
    /// `γ ∈ source` with `γ + w ∉ target`; that set is finite because
    /// everything past the target's Frobenius number is a member.
    pub fn membership(
        &self,
        source: &NumericalSemigroup,
        target: &NumericalSemigroup,
    ) -> bool {
        self.decompose().iter().all(|comp| {
            let top = target.frobenius() - comp.degree;
            (0..=top.max(-1))
                .filter(|&g| source.contains(g) && !target.contains(g + comp.degree))
                .all(|g| comp.euler_poly.eval_int(g).is_zero())
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Term list `[(i, j, "p/q"), ...]` for JSON reports.
    pub fn json_terms(&self) -> Vec<(i64, u32, String)> {
        self.terms()
            .map(|((i, j), c)| (i, j, c.to_string()))
            .collect()
    }
}

impl Add for &LaurentWeylOperator {
    type Output = LaurentWeylOperator;
    fn add(self, rhs: &LaurentWeylOperator) -> LaurentWeylOperator {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentWeylOperator {
    type Output = LaurentWeylOperator;
    fn sub(self, rhs: &LaurentWeylOperator) -> LaurentWeylOperator {
        self + &(-rhs)
    }
}

impl Neg for &LaurentWeylOperator {
    type Output = LaurentWeylOperator;
    fn neg(self) -> LaurentWeylOperator {
        LaurentWeylOperator {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &LaurentWeylOperator {
    type Output = LaurentWeylOperator;

    /// Normal-form product via `∂ᵇ tᶜ = Σ_k C(b,k) · c(c−1)⋯(c−k+1) · tᶜ⁻ᵏ ∂ᵇ⁻ᵏ`.
    fn mul(self, rhs: &LaurentWeylOperator) -> LaurentWeylOperator {
        let mut out = LaurentWeylOperator::zero();
        for ((a, b), ca) in self.terms() {
            for ((c, d), cb) in rhs.terms() {
                let base = ca * cb;
                let mut binom = Rat::one();
                let mut falling = Rat::one();
                for k in 0..=b {
                    if k > 0 {
                        binom = binom * rint((b - k + 1) as i64) / rint(k as i64);
                        falling = falling * rint(c - k as i64 + 1);
                    }
                    if falling.is_zero() {
                        break;
                    }
                    let coeff = &base * &binom * &falling;
                    out.add_term((a + c - k as i64, b + d - k), coeff);
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentWeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms() {
            let mut factors: Vec<String> = Vec::new();
            match i {
                0 => {}
                1 => factors.push("t".to_string()),
                _ => factors.push(format!("t^{}", i)),
            }
            match j {
                0 => {}
                1 => factors.push("d".to_string()),
                _ => factors.push(format!("d^{}", j)),
            }
            let body = if factors.is_empty() {
                format!("{}", c)
            } else if c.is_one() {
                factors.join("*")
            } else if c.clone().neg().is_one() {
                format!("-{}", factors.join("*"))
            } else {
                format!("{}*{}", c, factors.join("*"))
            };
            if first {
                write!(f, "{}", body)?;
                first = false;
            } else if let Some(s) = body.strip_prefix('-') {
                write!(f, " - {}", s)?;
            } else {
                write!(f, " + {}", body)?;
            }
        }
        Ok(())
    }
}

/// Homogeneous operator `tʷ f(E)` of degree `w` with Euler polynomial `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousComponent {
    pub degree: i64,
    pub euler_poly: QPoly,
}

impl HomogeneousComponent {
    pub fn new(degree: i64, euler_poly: QPoly) -> Self {
        HomogeneousComponent { degree, euler_poly }
    }

    pub fn zero(degree: i64) -> Self {
        HomogeneousComponent {
            degree,
            euler_poly: QPoly::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.euler_poly.is_zero()
    }

    /// Order = degree of the Euler polynomial.
    pub fn order(&self) -> Option<usize> {
        self.euler_poly.degree()
    }

    /// Expand back to normal form using `tʲ∂ʲ = E(E−1)⋯(E−j+1)`.
    pub fn to_operator(&self) -> LaurentWeylOperator {
        let mut out = LaurentWeylOperator::zero();
        for (j, b) in self.euler_poly.falling_coeffs().into_iter().enumerate() {
            out.add_term((self.degree + j as i64, j as u32), b);
        }
        out
    }
}

impl fmt::Display for HomogeneousComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{} * ({})", self.degree, self.euler_poly.render("E"))
    }
}

/// Graded division in `Diff(T)`: for homogeneous `P`, `Q` with `Q ≠ 0`,
/// produce the unique homogeneous `L`, `R` with `P = L·Q + R` and
/// `order(R) < order(Q)`.
///
/// Writing `P = tʷ f(E)` and `Q = tᵛ g(E)`, the polynomial division
/// `f = q·g + r` gives `L = tʷ⁻ᵛ q(E − v)` and `R = tʷ r(E)`, using
/// `f(E)·tᵛ = tᵛ·f(E + v)`.
pub fn graded_divide(
    p: &HomogeneousComponent,
    q: &HomogeneousComponent,
) -> Result<(HomogeneousComponent, HomogeneousComponent)> {
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (quot, rem) = p.euler_poly.divrem(&q.euler_poly).unwrap();
    let shift = quot.shift(&rint(-q.degree));
    Ok((
        HomogeneousComponent::new(p.degree - q.degree, shift),
        HomogeneousComponent::new(p.degree, rem),
    ))
}

/// A generator of minimal order for the homogeneous left ideal
/// `Diff(T)·gens`. Since every `tᵛ` is a unit, each generator is first
/// normalized to degree zero, and the Euclidean algorithm runs through
/// [`graded_divide`]; the result is `f(E)` with `f` monic.
pub fn principal_generator(gens: &[LaurentWeylOperator]) -> Result<LaurentWeylOperator> {
    let mut normalized: Vec<HomogeneousComponent> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let comp = g.as_component()?;
        normalized.push(HomogeneousComponent::new(0, comp.euler_poly));
    }
    if normalized.is_empty() {
        return Err(Error::ZeroOperator);
    }
    let mut acc = normalized[0].clone();
    for next in &normalized[1..] {
        let mut a = acc;
        let mut b = next.clone();
        while !b.is_zero() {
            let (_, r) = graded_divide(&a, &b)?;
            a = b;
            b = r;
        }
        acc = a;
    }
    Ok(HomogeneousComponent::new(0, acc.euler_poly.monic()).to_operator())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn op(terms: &[(i64, u32, i64)]) -> LaurentWeylOperator {
        let mut out = LaurentWeylOperator::zero();
        for &(i, j, c) in terms {
            out = &out + &LaurentWeylOperator::term(i, j, rint(c));
        }
        out
    }

    #[test]
    fn defining_relation() {
        // ∂·t = t∂ + 1
        let p = &LaurentWeylOperator::d_pow(1) * &LaurentWeylOperator::t_pow(1);
        assert_eq!(p, op(&[(1, 1, 1), (0, 0, 1)]));
        // t⁻¹·t = 1
        let q = &LaurentWeylOperator::t_pow(-1) * &LaurentWeylOperator::t_pow(1);
        assert_eq!(q, LaurentWeylOperator::one());
    }

    #[test]
    fn euler_squared() {
        // E·E = t²∂² + t∂
        let e = LaurentWeylOperator::euler();
        assert_eq!(&e * &e, op(&[(2, 2, 1), (1, 1, 1)]));
    }

    #[test]
    fn apply_is_calculus() {
        let d = LaurentWeylOperator::d_pow(1);
        assert_eq!(d.apply_monomial(3), LaurentPoly::monomial(2, rint(3)));
        // E(E−2) kills t²
        let e = LaurentWeylOperator::euler();
        let p = &e * &(&e - &LaurentWeylOperator::term(0, 0, rint(2)));
        assert!(p.apply_monomial(2).is_zero());
        // negative exponents differentiate correctly: ∂ t⁻¹ = −t⁻²
        assert_eq!(d.apply_monomial(-1), LaurentPoly::monomial(-2, rint(-1)));
    }

    #[test]
    fn apply_respects_products() {
        let p = op(&[(2, 1, 3), (-1, 0, 1)]);
        let q = op(&[(0, 2, 1), (1, 1, -2)]);
        let pq = &p * &q;
        for n in -4..=4 {
            let direct = pq.apply_monomial(n);
            let two_step = p.apply(&q.apply_monomial(n));
            assert_eq!(direct, two_step, "n={}", n);
        }
    }

    #[test]
    fn decompose_examples() {
        // t∂ + t² → degrees 0 and 2
        let p = op(&[(1, 1, 1), (2, 0, 1)]);
        let comps = p.decompose();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].degree, 0);
        assert_eq!(comps[0].euler_poly, QPoly::x());
        assert_eq!(comps[1].degree, 2);
        assert_eq!(comps[1].euler_poly, QPoly::one());
        // ∂² → degree −2 with Euler polynomial x(x−1)
        let d2 = LaurentWeylOperator::d_pow(2);
        let comps = d2.decompose();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].degree, -2);
        assert_eq!(comps[0].euler_poly, QPoly::from_ints(&[0, -1, 1]));
        // zero decomposes to nothing
        assert!(LaurentWeylOperator::zero().decompose().is_empty());
    }

    #[test]
    fn decompose_round_trip() {
        let p = op(&[(3, 1, 2), (-2, 4, 5), (0, 0, -7), (1, 1, 1)]);
        let mut sum = LaurentWeylOperator::zero();
        for c in p.decompose() {
            sum = &sum + &c.to_operator();
        }
        assert_eq!(sum, p);
    }

    #[test]
    fn membership_examples() {
        let g23 = NumericalSemigroup::new(&[2, 3]).unwrap();
        let full = NumericalSemigroup::full();
        // ∂ maps t² to 2t ∉ A
        assert!(!LaurentWeylOperator::d_pow(1).membership(&g23, &g23));
        // E preserves every graded piece
        assert!(LaurentWeylOperator::euler().membership(&g23, &g23));
        assert!(LaurentWeylOperator::euler().membership(&full, &full));
        // t: 1 ↦ t ∉ k[Γ] for Γ = <2,3>
        assert!(!LaurentWeylOperator::t_pow(1).membership(&full, &g23));
        // t² does map k[t] into k[<2,3>]? t²·t = t³ ∈ A, t²·1 = t² ∈ A: yes
        assert!(LaurentWeylOperator::t_pow(2).membership(&full, &g23));
    }

    /// Brute-force membership oracle by applying to the monomial basis.
    fn membership_oracle(
        p: &LaurentWeylOperator,
        source: &NumericalSemigroup,
        target: &NumericalSemigroup,
    ) -> bool {
        let span = p
            .decompose()
            .iter()
            .map(|c| c.degree.abs())
            .max()
            .unwrap_or(0);
        let top = target.frobenius().max(source.frobenius()) + span + 1;
        (0..=top)
            .filter(|&g| source.contains(g))
            .all(|g| p.apply_monomial(g).supported_in(target))
    }

    #[test]
    fn membership_agrees_with_apply_oracle() {
        let g23 = NumericalSemigroup::new(&[2, 3]).unwrap();
        let g345 = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let samples = [
            op(&[(1, 1, 1)]),
            op(&[(2, 1, 1)]),
            op(&[(1, 2, 1), (0, 1, -1)]),
            op(&[(0, 1, 1)]),
            op(&[(3, 0, 1), (2, 0, 2)]),
            op(&[(-1, 2, 1)]),
            op(&[(1, 2, 1), (0, 1, -1), (5, 0, 3)]),
        ];
        for p in &samples {
            for g in [&g23, &g345] {
                assert_eq!(
                    p.membership(g, g),
                    membership_oracle(p, g, g),
                    "P = {}",
                    p
                );
            }
        }
    }

    #[test]
    fn graded_divide_examples() {
        // t²E ÷ tE → L = t, R = 0
        let p = op(&[(3, 1, 1)]).as_component().unwrap(); // t²·E = t³∂
        let q = op(&[(2, 1, 1)]).as_component().unwrap(); // t·E = t²∂
        let (l, r) = graded_divide(&p, &q).unwrap();
        assert!(r.is_zero());
        assert_eq!(l.to_operator(), LaurentWeylOperator::t_pow(1));
        // degenerate: order(P) < order(Q)
        let small = op(&[(1, 0, 1)]).as_component().unwrap();
        let (l, r) = graded_divide(&small, &q).unwrap();
        assert!(l.is_zero());
        assert_eq!(r.to_operator(), op(&[(1, 0, 1)]));
        // t∂t∂ ÷ E leaves no remainder of positive order
        let tdtd = &op(&[(1, 1, 1)]) * &op(&[(1, 1, 1)]);
        let (l, r) = graded_divide(
            &tdtd.as_component().unwrap(),
            &LaurentWeylOperator::euler().as_component().unwrap(),
        )
        .unwrap();
        assert_eq!(r.order(), None);
        let back = &(&l.to_operator() * &LaurentWeylOperator::euler())
            + &r.to_operator();
        assert_eq!(back, tdtd);
    }

    #[test]
    fn principal_generator_examples() {
        // [tE] → E after stripping the unit
        let te = op(&[(2, 1, 1)]);
        assert_eq!(
            principal_generator(&[te]).unwrap(),
            LaurentWeylOperator::euler()
        );
        // [E, E−1] generate everything
        let e = LaurentWeylOperator::euler();
        let e1 = &e - &LaurentWeylOperator::one();
        assert_eq!(
            principal_generator(&[e.clone(), e1]).unwrap(),
            LaurentWeylOperator::one()
        );
        // [E(E−1), E(E−2)] → E
        let shift = |c: i64| &e - &LaurentWeylOperator::term(0, 0, rint(c));
        let a = &e * &shift(1);
        let b = &e * &shift(2);
        assert_eq!(principal_generator(&[a, b]).unwrap(), e);
        // all-zero input rejected
        assert!(matches!(
            principal_generator(&[LaurentWeylOperator::zero()]),
            Err(Error::ZeroOperator)
        ));
    }

    #[test]
    fn bernstein_degree_reads_normal_form() {
        assert_eq!(op(&[(1, 1, 1), (0, 0, 1)]).bernstein_degree().unwrap(), 2);
        assert_eq!(op(&[(0, 3, 1), (-1, 2, -3)]).bernstein_degree().unwrap(), 3);
        assert!(LaurentWeylOperator::zero().bernstein_degree().is_err());
    }

    #[test]
    fn rendering() {
        let p = op(&[(2, 1, 1), (0, 0, -1)]);
        assert_eq!(p.to_string(), "-1 + t^2*d");
        assert_eq!(
            LaurentWeylOperator::term(1, 1, rat(1, 2)).to_string(),
            "1/2*t*d"
        );
    }
}
