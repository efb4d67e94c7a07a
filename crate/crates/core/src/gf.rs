//! Finite fields GF(p^m) with order at most 2^16.
//!
//! Elements are `u32` values in the compact encoding `a0 + a1*p + ... + a_{m-1}*p^{m-1}`,
//! where `a0 + a1*t + ... + a_{m-1}*t^{m-1}` is the polynomial representative
//! modulo the field's defining polynomial. For prime fields this is just the
//! residue `0..p`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// Fields up to this order get log/exp tables.
const TABLE_ORDER_LIMIT: u32 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("field of order {p}^{m} exceeds the supported maximum of 2^16")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("`{0}` is not an element of the field")]
    InvalidElement(String),
    #[error("GF({small}) is not a subfield of GF({large})")]
    NotASubfield { small: u32, large: u32 },
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// GF(p^m). Cheap to clone.
#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

struct Inner {
    p: u32,
    m: u32,
    order: u32,
    /// Monic defining polynomial, low degree first, length `m + 1`.
    modulus: Vec<u32>,
    tables: Option<LogTables>,
}

struct LogTables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.m)
    }
}

impl FiniteField {
    /// GF(p^m) defined by the first monic irreducible polynomial of degree
    /// `m` over GF(p), where polynomials `t^m + c` are ordered by the compact
    /// encoding of `c` (so `t^2 + 2` precedes `t^2 + t + 1`).
    pub fn new(p: u32, m: u32) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroExtensionDegree);
        }
        let order = (p as u64).checked_pow(m).filter(|&o| o <= MAX_FIELD_ORDER);
        let order = order.ok_or(FieldError::FieldTooLarge { p, m })? as u32;
        let modulus = first_irreducible(p, m as usize);
        let mut inner = Inner {
            p,
            m,
            order,
            modulus,
            tables: None,
        };
        if m > 1 && order <= TABLE_ORDER_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(FiniteField(Arc::new(inner)))
    }

    pub fn prime(p: u32) -> Result<Self, FieldError> {
        Self::new(p, 1)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Defining polynomial coefficients, low degree first (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.0.order
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.order
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if self.0.m == 1 {
            return (a + b) % p;
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        if self.0.m == 1 {
            return (p - a) % p;
        }
        let mut a = a;
        let (mut out, mut place) = (0, 1);
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.0.m == 1 {
            return ((a as u64 * b as u64) % self.0.p as u64) as u32;
        }
        match &self.0.tables {
            Some(t) => {
                let q1 = self.0.order - 1;
                t.exp[((t.log[a as usize] + t.log[b as usize]) % q1) as usize]
            }
            None => poly_mul_mod(&self.0, a, b),
        }
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            let q1 = self.0.order - 1;
            return Some(t.exp[((q1 - t.log[a as usize]) % q1) as usize]);
        }
        Some(self.pow(a, self.0.order as u64 - 2))
    }

    /// Coefficients `a0, ..., a_{m-1}` of the polynomial representative.
    pub fn digits(&self, a: u32) -> Vec<u32> {
        let p = self.0.p;
        let mut a = a;
        (0..self.0.m)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.0.p + d % self.0.p)
    }

    /// Parses an element written either as its compact integer encoding or
    /// as a polynomial in `t`, e.g. `1+2*t+t^2`.
    pub fn parse_element(&self, token: &str) -> Result<u32, FieldError> {
        let bad = || FieldError::InvalidElement(token.to_string());
        if token.bytes().all(|b| b.is_ascii_digit()) && !token.is_empty() {
            let v: u64 = token.parse().map_err(|_| bad())?;
            return if v < self.0.order as u64 {
                Ok(v as u32)
            } else {
                Err(bad())
            };
        }
        let p = self.0.p as u64;
        let mut digits = vec![0u64; self.0.m as usize];
        for term in token.split('+') {
            let term = term.trim();
            let (coef, power) = match term.split_once('t') {
                None => (term.parse::<u64>().map_err(|_| bad())?, 0usize),
                Some((c, rest)) => {
                    let coef = match c.strip_suffix('*') {
                        Some(c) => c.parse::<u64>().map_err(|_| bad())?,
                        None if c.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    let power = match rest.strip_prefix('^') {
                        Some(e) => e.parse::<usize>().map_err(|_| bad())?,
                        None if rest.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (coef, power)
                }
            };
            if power >= digits.len() || coef >= p {
                return Err(bad());
            }
            digits[power] = (digits[power] + coef) % p;
        }
        let digits: Vec<u32> = digits.into_iter().map(|d| d as u32).collect();
        Ok(self.from_digits(&digits))
    }

    /// Polynomial rendering of an element, e.g. `2+t^2`.
    pub fn format_poly(&self, a: u32) -> String {
        let terms: Vec<String> = self
            .digits(a)
            .into_iter()
            .enumerate()
            .filter(|&(_, d)| d != 0)
            .map(|(i, d)| match (i, d) {
                (0, d) => d.to_string(),
                (1, 1) => "t".to_string(),
                (1, d) => format!("{d}*t"),
                (i, 1) => format!("t^{i}"),
                (i, d) => format!("{d}*t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// The embedding of `small` into `self`, as a lookup table indexed by the
    /// elements of `small`. Requires equal characteristic and a dividing
    /// extension degree.
    pub fn embedding_of(&self, small: &FiniteField) -> Result<Vec<u32>, FieldError> {
        let not_sub = || FieldError::NotASubfield {
            small: small.order(),
            large: self.order(),
        };
        if small.characteristic() != self.characteristic()
            || !self.degree().is_multiple_of(small.degree())
        {
            return Err(not_sub());
        }
        if small.degree() == 1 {
            return Ok(small.elements().collect());
        }
        // Image of t: a root of small's defining polynomial.
        let root = self
            .elements()
            .find(|&x| {
                let mut acc = 0;
                for &c in small.modulus().iter().rev() {
                    acc = self.add(self.mul(acc, x), c);
                }
                acc == 0
            })
            .ok_or_else(not_sub)?;
        let powers: Vec<u32> = (0..small.degree() as u64)
            .map(|i| self.pow(root, i))
            .collect();
        Ok(small
            .elements()
            .map(|a| {
                small
                    .digits(a)
                    .iter()
                    .zip(&powers)
                    .fold(0, |acc, (&d, &pw)| self.add(acc, self.mul(d, pw)))
            })
            .collect())
    }
}

/// Multiplies two compact-encoded elements as polynomials and reduces modulo
/// the defining polynomial.
fn poly_mul_mod(f: &Inner, a: u32, b: u32) -> u32 {
    let p = f.p as u64;
    let m = f.m as usize;
    let da = digits_of(a, f.p, m);
    let db = digits_of(b, f.p, m);
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    reduce(&mut prod, &f.modulus, p);
    prod[..m]
        .iter()
        .rev()
        .fold(0u32, |acc, &d| acc * f.p + d as u32)
}

fn digits_of(a: u32, p: u32, m: usize) -> Vec<u64> {
    let mut a = a;
    (0..m)
        .map(|_| {
            let d = a % p;
            a /= p;
            d as u64
        })
        .collect()
}

/// In-place reduction modulo a monic polynomial; afterwards only the low
/// `deg(modulus)` coefficients are meaningful.
fn reduce(poly: &mut [u64], modulus: &[u32], p: u64) {
    let m = modulus.len() - 1;
    for top in (m..poly.len()).rev() {
        let c = poly[top];
        if c == 0 {
            continue;
        }
        poly[top] = 0;
        for (k, &mk) in modulus[..m].iter().enumerate() {
            let idx = top - m + k;
            poly[idx] = (poly[idx] + (p - c) * mk as u64) % p;
        }
    }
}

/// Remainder of `num` modulo the monic `den` over GF(p), trimmed.
fn poly_rem(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if c != 0 {
            for (k, &dk) in den.iter().enumerate() {
                r[shift + k] = (r[shift + k] + (p - c) * dk) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        // All monic polynomials of degree d.
        let count = p.pow(d as u32);
        for c in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut v = c;
            for _ in 0..d {
                cand.push(v % p);
                v /= p;
            }
            cand.push(1);
            if poly_rem(poly, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: u32, m: usize) -> Vec<u32> {
    let pp = p as u64;
    let count = pp.pow(m as u32);
    for c in 0..count {
        let mut poly = Vec::with_capacity(m + 1);
        let mut v = c;
        for _ in 0..m {
            poly.push(v % pp);
            v /= pp;
        }
        poly.push(1);
        if is_irreducible(&poly, pp) {
            return poly.into_iter().map(|x| x as u32).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn build_tables(f: &Inner) -> LogTables {
    let q = f.order as usize;
    let q1 = (q - 1) as u64;
    let mut prime_factors = Vec::new();
    let mut rest = q1;
    let mut d = 2;
    while d * d <= rest {
        if rest.is_multiple_of(d) {
            prime_factors.push(d);
            while rest.is_multiple_of(d) {
                rest /= d;
            }
        }
        d += 1;
    }
    if rest > 1 {
        prime_factors.push(rest);
    }
    let slow_pow = |a: u32, mut e: u64| {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mul_mod(f, acc, base);
            }
            base = poly_mul_mod(f, base, base);
            e >>= 1;
        }
        acc
    };
    let generator = (2..f.order)
        .find(|&g| prime_factors.iter().all(|&r| slow_pow(g, q1 / r) != 1))
        .expect("multiplicative group is cyclic");
    let mut exp = vec![0u32; q - 1];
    let mut log = vec![0u32; q];
    let mut x = 1u32;
    for (i, slot) in exp.iter_mut().enumerate() {
        *slot = x;
        log[x as usize] = i as u32;
        x = poly_mul_mod(f, x, generator);
    }
    LogTables { log, exp }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_basics() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(f.order(), 5);
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.neg(2), 3);
        assert_eq!(f.inv(2), Some(3));
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FiniteField::new(4, 1),
            Err(FieldError::NonPrimeCharacteristic(4))
        );
        assert_eq!(
            FiniteField::new(1, 1),
            Err(FieldError::NonPrimeCharacteristic(1))
        );
        assert_eq!(
            FiniteField::new(2, 17),
            Err(FieldError::FieldTooLarge { p: 2, m: 17 })
        );
        assert_eq!(FiniteField::new(3, 0), Err(FieldError::ZeroExtensionDegree));
        assert!(FiniteField::new(2, 16).is_ok());
    }

    #[test]
    fn gf4_modulus_is_the_unique_quadratic() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // t * t = t + 1
        assert_eq!(f.mul(2, 2), 3);
    }

    /// Independent search: a monic quadratic over GF(5) is irreducible iff
    /// it has no root; take the first in compact order.
    #[test]
    fn gf25_modulus_from_exhaustive_search() {
        let mut expected = None;
        'search: for c1 in 0..5u32 {
            for c0 in 0..5u32 {
                if (0..5u32).all(|x| (x * x + c1 * x + c0) % 5 != 0) {
                    expected = Some(vec![c0, c1, 1]);
                    break 'search;
                }
            }
        }
        let f = FiniteField::new(5, 2).unwrap();
        assert_eq!(f.modulus(), expected.unwrap().as_slice());
        assert_eq!(f.modulus(), &[2, 0, 1]);
    }

    #[test]
    fn gf8_and_gf16_moduli() {
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert_eq!(FiniteField::new(2, 4).unwrap().modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn table_and_polynomial_multiplication_agree() {
        for (p, m) in [(2, 3), (3, 2), (5, 2), (2, 6)] {
            let f = FiniteField::new(p, m).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(
                        f.mul(a, b),
                        if a == 0 || b == 0 {
                            0
                        } else {
                            poly_mul_mod(&f.0, a, b)
                        }
                    );
                }
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = FiniteField::new(2, 13).unwrap();
        assert!(f.0.tables.is_none());
        for a in [1u32, 2, 77, 4095, 8191] {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), 1);
        }
    }

    #[test]
    fn parse_and_format_elements() {
        let f = FiniteField::new(5, 2).unwrap();
        assert_eq!(f.parse_element("7").unwrap(), 7);
        assert_eq!(f.parse_element("2+t").unwrap(), 7);
        assert_eq!(f.parse_element("2+1*t").unwrap(), 7);
        assert_eq!(f.parse_element("3*t").unwrap(), 15);
        assert_eq!(f.format_poly(7), "2+t");
        assert_eq!(f.format_poly(0), "0");
        assert!(f.parse_element("25").is_err());
        assert!(f.parse_element("t^2").is_err());
        assert!(f.parse_element("5*t").is_err());
        let g = FiniteField::new(3, 3).unwrap();
        assert_eq!(g.parse_element("1+t^2").unwrap(), 10);
        assert_eq!(g.format_poly(10), "1+t^2");
    }

    #[test]
    fn embedding_respects_field_operations() {
        let small = FiniteField::new(2, 2).unwrap();
        let large = FiniteField::new(2, 4).unwrap();
        let map = large.embedding_of(&small).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(
                    map[small.add(a, b) as usize],
                    large.add(map[a as usize], map[b as usize])
                );
                assert_eq!(
                    map[small.mul(a, b) as usize],
                    large.mul(map[a as usize], map[b as usize])
                );
            }
        }
        assert!(FiniteField::new(2, 3)
            .unwrap()
            .embedding_of(&small)
            .is_err());
        assert!(large
            .embedding_of(&FiniteField::new(3, 1).unwrap())
            .is_err());
    }
}
