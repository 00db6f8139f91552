//! Dense univariate polynomials over the rationals.
//!
//! Small and exact: this backs Euler-operator components, the graded
//! division algorithm, and quasi-polynomial interpolation. Coefficients are
//! stored low degree first with no trailing zeros.

use crate::rat::{rint, Rat};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        QPoly { coeffs: vec![c] }.normalized()
    }

    /// The variable itself.
    pub fn x() -> Self {
        QPoly {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    /// `x - c`.
    pub fn x_minus(c: &Rat) -> Self {
        QPoly {
            coeffs: vec![-c.clone(), Rat::one()],
        }
        .normalized()
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        QPoly { coeffs }.normalized()
    }

    /// Integer coefficients, low degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly {
            coeffs: coeffs.iter().map(|&c| rint(c)).collect(),
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, n: i64) -> Rat {
        self.eval(&rint(n))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => self.scale(&(Rat::one() / l)),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rint(i as i64))
                .collect(),
        }
        .normalized()
    }

    /// Substitute `x + c` for `x`.
    pub fn shift(&self, c: &Rat) -> Self {
        // Horner with the binomial twist: f(x+c) built from the top down.
        let mut acc = QPoly::zero();
        for coef in self.coeffs.iter().rev() {
            acc = &(&acc * &QPoly::x_minus(&(-c.clone()))) + &QPoly::constant(coef.clone());
        }
        acc
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn divrem(&self, divisor: &QPoly) -> Option<(QPoly, QPoly)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let mut new = rem.coeffs.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                new[i + shift] = &new[i + shift] - &(c * &factor);
            }
            rem = QPoly { coeffs: new }.normalized();
        }
        Some((QPoly { coeffs: quot }.normalized(), rem))
    }

    /// Exact division; `None` if the remainder is nonzero or divisor is zero.
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        let (q, r) = self.divrem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).unwrap();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns `(g, u, v)` with `u·self + v·other = g`
    /// and `g` the monic gcd.
    pub fn xgcd(&self, other: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (QPoly::one(), QPoly::zero());
        let (mut v0, mut v1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).unwrap();
            let u = &u0 - &(&q * &u1);
            let v = &v0 - &(&q * &v1);
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u);
            (v0, v1) = (v1, v);
        }
        match r0.leading() {
            None => (QPoly::zero(), QPoly::zero(), QPoly::zero()),
            Some(l) => {
                let inv = Rat::one() / l;
                (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
            }
        }
    }

    /// The falling factorial `x (x-1) ... (x-j+1)`; the empty product is 1.
    pub fn falling_factorial(j: usize) -> QPoly {
        let mut p = QPoly::one();
        for k in 0..j {
            p = &p * &QPoly::x_minus(&rint(k as i64));
        }
        p
    }

    /// Coefficients `b_j` with `f = Σ b_j x(x-1)...(x-j+1)`, via forward
    /// differences at 0, 1, 2, ...
    pub fn falling_coeffs(&self) -> Vec<Rat> {
        let n = self.coeffs.len();
        let mut values: Vec<Rat> = (0..n).map(|i| self.eval_int(i as i64)).collect();
        let mut out = Vec::with_capacity(n);
        let mut factorial = Rat::one();
        for j in 0..n {
            if j > 0 {
                factorial = factorial * rint(j as i64);
            }
            out.push(&values[0] / &factorial);
            for i in 0..n - j - 1 {
                values[i] = &values[i + 1] - &values[i];
            }
            values.truncate(n - j - 1);
        }
        out
    }

    pub fn from_falling_coeffs(coeffs: &[Rat]) -> QPoly {
        let mut acc = QPoly::zero();
        for (j, b) in coeffs.iter().enumerate() {
            if !b.is_zero() {
                acc = &acc + &QPoly::falling_factorial(j).scale(b);
            }
        }
        acc
    }

    /// Unique polynomial of degree < points.len() through the given points.
    /// Points must have pairwise distinct abscissae.
    pub fn interpolate(points: &[(Rat, Rat)]) -> QPoly {
        let mut acc = QPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut term = QPoly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    let denom = xi - xj;
                    term = &term * &QPoly::x_minus(xj).scale(&(Rat::one() / denom));
                }
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Exact rational roots, each listed once. Complete for degree <= 2;
    /// for higher degrees, linear factors with small integer roots are
    /// stripped first and whatever remains unresolved is ignored.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let mut roots = Vec::new();
        let mut f = self.clone();
        if f.is_zero() {
            return roots;
        }
        while f.coeff(0).is_zero() && f.degree().unwrap_or(0) > 0 {
            if !roots.contains(&Rat::zero()) {
                roots.push(Rat::zero());
            }
            f = f.div_exact(&QPoly::x()).unwrap();
        }
        // Trial roots with small numerator and denominator keep
        // cubic-and-up cases useful.
        if f.degree().unwrap_or(0) > 2 {
            for q in 1i64..=6 {
                for p in -30 * q..=30 * q {
                    let c = crate::rat::rat(p, q);
                    while f.degree().unwrap_or(0) > 2 && f.eval(&c).is_zero() {
                        if !roots.contains(&c) {
                            roots.push(c.clone());
                        }
                        f = f.div_exact(&QPoly::x_minus(&c)).unwrap();
                    }
                }
            }
        }
        match f.degree() {
            Some(1) => {
                let r = -f.coeff(0) / f.coeff(1);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            Some(2) => {
                let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
                let disc = &b * &b - rint(4) * &a * &c;
                if let Some(s) = crate::rat::sqrt_exact(&disc) {
                    let two_a = rint(2) * &a;
                    for r in [(-&b + &s) / &two_a, (-&b - &s) / &two_a] {
                        if !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
            _ => {}
        }
        roots.sort();
        roots
    }

    /// Render using the given variable name.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = if c.is_one() && i > 0 {
                String::new()
            } else if (-c).is_one() && i > 0 {
                "-".to_string()
            } else {
                format!("{}", c)
            };
            let body = match i {
                0 => mag,
                1 if mag.is_empty() || mag == "-" => format!("{}{}", mag, var),
                1 => format!("{}*{}", mag, var),
                _ if mag.is_empty() || mag == "-" => format!("{}{}^{}", mag, var, i),
                _ => format!("{}*{}^{}", mag, var, i),
            };
            parts.push(body);
        }
        let mut out = String::new();
        for (k, p) in parts.iter().enumerate() {
            if k == 0 {
                out.push_str(p);
            } else if let Some(stripped) = p.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(stripped);
            } else {
                out.push_str(" + ");
                out.push_str(p);
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly { coeffs: out }.normalized()
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QPoly { coeffs: out }.normalized()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn divrem_reconstructs() {
        let f = QPoly::from_ints(&[1, 0, -3, 2]);
        let g = QPoly::from_ints(&[-1, 1]);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(&(&q * &g) + &r, f);
        assert!(r.degree().unwrap_or(0) < g.degree().unwrap());
    }

    #[test]
    fn gcd_of_shifted_products() {
        // gcd(x(x-1), x(x-2)) = x
        let a = &QPoly::x() * &QPoly::x_minus(&rint(1));
        let b = &QPoly::x() * &QPoly::x_minus(&rint(2));
        assert_eq!(a.gcd(&b), QPoly::x());
        // gcd(x, x-1) = 1
        assert_eq!(QPoly::x().gcd(&QPoly::x_minus(&rint(1))), QPoly::one());
    }

    #[test]
    fn xgcd_bezout() {
        let a = QPoly::from_ints(&[0, 1, 1]); // x(x+1)
        let b = QPoly::from_ints(&[0, -1, 1]); // x(x-1)
        let (g, u, v) = a.xgcd(&b);
        assert_eq!(g, QPoly::x());
        assert_eq!(&(&u * &a) + &(&v * &b), g);
    }

    #[test]
    fn falling_coeff_round_trip() {
        let f = QPoly::from_ints(&[2, -1, 0, 5, 3]);
        let b = f.falling_coeffs();
        assert_eq!(QPoly::from_falling_coeffs(&b), f);
        // x^2 = x(x-1) + x
        let sq = QPoly::from_ints(&[0, 0, 1]);
        assert_eq!(sq.falling_coeffs(), vec![rint(0), rint(1), rint(1)]);
    }

    #[test]
    fn shift_is_substitution() {
        let f = QPoly::from_ints(&[1, 2, 3]);
        let g = f.shift(&rat(1, 2));
        for n in -4..4 {
            assert_eq!(g.eval_int(n), f.eval(&(rint(n) + rat(1, 2))));
        }
    }

    #[test]
    fn interpolation_matches() {
        let f = QPoly::from_ints(&[3, -2, 1]);
        let pts: Vec<(Rat, Rat)> = (0..3).map(|n| (rint(n), f.eval_int(n))).collect();
        assert_eq!(QPoly::interpolate(&pts), f);
    }

    #[test]
    fn quadratic_roots() {
        // (x - 1/2)(x + 3) = x^2 + 5/2 x - 3/2
        let f = QPoly::from_coeffs(vec![rat(-3, 2), rat(5, 2), rint(1)]);
        assert_eq!(f.rational_roots(), vec![rint(-3), rat(1, 2)]);
        // x^2 + 1 has none
        assert!(QPoly::from_ints(&[1, 0, 1]).rational_roots().is_empty());
    }
}
