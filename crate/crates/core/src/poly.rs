//! Exact integer polynomials in one, two or three variables.
//!
//! Rendering follows the usual hand-written style: descending powers,
//! explicit signs and caret exponents, e.g. `15Z^2 - 43Z + 28` or
//! `5X^4Y^4Z - 5X^4Y^4`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

pub type Coeff = i128;

/// Polynomial in one variable with integer coefficients.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Coefficients listed from the constant term upwards.
    pub fn from_coeffs(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Coeff {
        self.coeffs.get(power).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: Coeff) -> Coeff {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Renders with the given variable name.
    pub fn render(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(p, &c)| (c, monomial(&[(var, p as u32)])));
        join_terms(terms)
    }

    /// Coefficients keyed by exponent, for JSON output.
    pub fn to_json_map(&self) -> BTreeMap<String, Coeff> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(p, &c)| (p.to_string(), c))
            .collect()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("Z"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// Sparse polynomial in `N` variables; exponent tuples map to nonzero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly<const N: usize> {
    terms: BTreeMap<[u32; N], Coeff>,
}

/// Polynomial in `X, Y`.
pub type BiPoly = MultiPoly<2>;
/// Polynomial in `X, Y, Z`.
pub type TriPoly = MultiPoly<3>;

const VARS: [&str; 3] = ["X", "Y", "Z"];

#[derive(Serialize)]
pub struct JsonTerm<const N: usize> {
    pub exp: Vec<u32>,
    pub coef: Coeff,
}

impl<const N: usize> MultiPoly<N> {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Coeff) -> Self {
        let mut p = Self::zero();
        p.add_term([0; N], c);
        p
    }

    pub fn monomial(exp: [u32; N], c: Coeff) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// The variable with the given index (0 for `X`).
    pub fn var(index: usize) -> Self {
        let mut exp = [0; N];
        exp[index] = 1;
        Self::monomial(exp, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ([u32; N], Coeff)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: [u32; N], c: Coeff) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: [u32; N]) -> Coeff {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent of the given variable, `None` for zero.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn scale(&self, k: Coeff) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, &c)| (e, c * k)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let mut e = [0; N];
                for i in 0..N {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, point: [Coeff; N]) -> Coeff {
        self.terms
            .iter()
            .map(|(e, &c)| (0..N).fold(c, |acc, i| acc * point[i].pow(e[i])))
            .sum()
    }

    pub fn render(&self) -> String {
        let terms = self.terms.iter().rev().map(|(e, &c)| {
            let parts: Vec<(&str, u32)> = (0..N).map(|i| (VARS[i], e[i])).collect();
            (c, monomial(&parts))
        });
        join_terms(terms)
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm<N>> {
        self.terms
            .iter()
            .rev()
            .map(|(e, &c)| JsonTerm {
                exp: e.to_vec(),
                coef: c,
            })
            .collect()
    }
}

impl BiPoly {
    /// `t(Y, X)`.
    pub fn swap_variables(&self) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().map(|(&[a, b], &c)| ([b, a], c)))
    }
}

impl<const N: usize> fmt::Display for MultiPoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<const N: usize> fmt::Debug for MultiPoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

fn monomial(parts: &[(&str, u32)]) -> String {
    let mut s = String::new();
    for &(v, e) in parts {
        match e {
            0 => {}
            1 => s.push_str(v),
            e => {
                s.push_str(v);
                s.push('^');
                s.push_str(&e.to_string());
            }
        }
    }
    s
}

fn join_terms<I: Iterator<Item = (Coeff, String)>>(terms: I) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let mag = c.unsigned_abs();
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag == 1 {
            mono
        } else {
            format!("{mag}{mono}")
        };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unipoly_rendering() {
        assert_eq!(
            UniPoly::from_coeffs(vec![28, -43, 15]).to_string(),
            "15Z^2 - 43Z + 28"
        );
        assert_eq!(UniPoly::from_coeffs(vec![-1, 1]).to_string(), "Z - 1");
        assert_eq!(UniPoly::from_coeffs(vec![0, -1]).to_string(), "-Z");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::constant(1).to_string(), "1");
        assert_eq!(
            UniPoly::from_coeffs(vec![-8, 14, -7, 1]).render("Q"),
            "Q^3 - 7Q^2 + 14Q - 8"
        );
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(UniPoly::zero().degree(), None);
        assert_eq!(UniPoly::from_coeffs(vec![0, 0]).degree(), None);
        assert_eq!(UniPoly::constant(3).degree(), Some(0));
    }

    #[test]
    fn unipoly_arithmetic() {
        let a = UniPoly::from_coeffs(vec![-1, 1]);
        let b = UniPoly::from_coeffs(vec![1, 1]);
        assert_eq!(a.mul(&b), UniPoly::from_coeffs(vec![-1, 0, 1]));
        assert_eq!(a.add(&b), UniPoly::from_coeffs(vec![0, 2]));
        assert_eq!(a.sub(&a), UniPoly::zero());
        assert_eq!(a.eval(5), 4);
    }

    #[test]
    fn multipoly_rendering_order() {
        let t = BiPoly::from_terms([
            ([1, 0], 15),
            ([4, 0], 1),
            ([1, 1], 5),
            ([0, 4], 1),
            ([0, 1], 15),
        ]);
        assert_eq!(t.to_string(), "X^4 + 5XY + 15X + Y^4 + 15Y");
        let w = TriPoly::from_terms([([8, 0, 0], 1), ([4, 4, 1], 5), ([4, 4, 0], -5)]);
        assert_eq!(w.to_string(), "X^8 + 5X^4Y^4Z - 5X^4Y^4");
        assert_eq!(TriPoly::zero().to_string(), "0");
    }

    #[test]
    fn multipoly_arithmetic() {
        let x = BiPoly::var(0);
        let y = BiPoly::var(1);
        let s = x.add(&y.scale(-1));
        let sq = s.pow(2);
        assert_eq!(sq.to_string(), "X^2 - 2XY + Y^2");
        assert_eq!(sq.eval([3, 1]), 4);
        assert_eq!(sq.degree_in(1), Some(2));
        assert_eq!(
            BiPoly::from_terms([([2, 1], 3)])
                .swap_variables()
                .coeff([1, 2]),
            3
        );
        let mut p = BiPoly::constant(2);
        p.add_term([0, 0], -2);
        assert!(p.is_empty());
    }
}
