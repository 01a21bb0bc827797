//! Exact sparse integer polynomials in `Z[x1, x2, …]`.
//!
//! Coefficients are arbitrary-precision integers, so the signed sums arising
//! from pipe-dream enumeration can never overflow silently. The module also
//! carries the two operator families acting on the ring — the divided
//! difference `∂_i` and its isobaric variant `π_i` — together with the
//! Schubert and Grothendieck polynomials they generate by downward induction
//! from the staircase monomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::perm::{ascent_chain_to_top, Permutation};
use crate::Error;

/// An exponent vector with trailing zeros trimmed; `exps[k]` is the exponent
/// of `x_{k+1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// The constant monomial `1`.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The single variable `x_i` (1-based).
    pub fn var(i: u32) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut exps = vec![0; i as usize];
        exps[i as usize - 1] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let mut m = Monomial { exps };
        m.trim();
        m
    }

    /// The staircase monomial `x1^{n-1} x2^{n-2} … x_{n-1}`.
    pub fn staircase(n: u32) -> Self {
        Monomial::from_exponents((1..n).rev().collect())
    }

    fn trim(&mut self) {
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based); zero past the stored window.
    pub fn exponent(&self, i: u32) -> u32 {
        assert!(i >= 1, "variables are 1-based");
        self.exps.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let mut exps = vec![0u32; len];
        for (k, &e) in self.exps.iter().enumerate() {
            exps[k] += e;
        }
        for (k, &e) in other.exps.iter().enumerate() {
            exps[k] += e;
        }
        Monomial::from_exponents(exps)
    }

    /// Exchanges the exponents of `x_i` and `x_{i+1}`.
    pub fn swap(&self, i: u32) -> Monomial {
        let mut exps = self.exps.clone();
        let need = (i + 1) as usize;
        if exps.len() < need {
            exps.resize(need, 0);
        }
        exps.swap(i as usize - 1, i as usize);
        Monomial::from_exponents(exps)
    }

    /// Copy with the exponents of `x_i` and `x_{i+1}` replaced.
    fn with_pair(&self, i: u32, a: u32, b: u32) -> Monomial {
        let mut exps = self.exps.clone();
        let need = (i + 1) as usize;
        if exps.len() < need {
            exps.resize(need, 0);
        }
        exps[i as usize - 1] = a;
        exps[i as usize] = b;
        Monomial::from_exponents(exps)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (k, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", k + 1)),
                _ => parts.push(format!("x{}^{}", k + 1, e)),
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// A sparse polynomial: monomials mapped to nonzero exact integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::from_term(Monomial::one(), c)
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(i: u32) -> Self {
        Polynomial::from_term(Monomial::var(i), 1)
    }

    pub fn from_term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Polynomial::zero();
        p.add_assign_term(m, c.into());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the internal map order (not the display order).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_assign_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_assign_term(m.clone(), c.clone());
        }
        out
    }

    pub fn subtract(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_assign_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn negate(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_assign_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// Multiplies by the single variable `x_i`.
    pub fn multiply_by_variable(&self, i: u32) -> Polynomial {
        let xi = Monomial::var(i);
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&xi), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.multiply(self);
        }
        out
    }

    /// `s_i(f)`: the variables `x_i` and `x_{i+1}` interchanged.
    pub fn swap_variables(&self, i: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap(i), c.clone()))
                .collect(),
        }
    }

    /// The divided difference `∂_i(f) = (f - s_i f) / (x_i - x_{i+1})`.
    ///
    /// The quotient is formed termwise: a monomial pair `x_i^a x_{i+1}^b`
    /// with `a > b` contributes the telescoping sum
    /// `x_i^b x_{i+1}^{a-1} + x_i^{b+1} x_{i+1}^{a-2} + … + x_i^{a-1} x_{i+1}^b`.
    /// The result is multiplied back as an exactness check; a mismatch would
    /// indicate an internal fault and panics.
    pub fn divided_difference(&self, i: u32) -> Polynomial {
        assert!(i >= 1, "operator indices are 1-based");
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let a = m.exponent(i);
            let b = m.exponent(i + 1);
            if a == b {
                continue;
            }
            if a > b {
                for t in 0..(a - b) {
                    out.add_assign_term(m.with_pair(i, b + t, a - 1 - t), c.clone());
                }
            } else {
                for t in 0..(b - a) {
                    out.add_assign_term(m.with_pair(i, a + t, b - 1 - t), -c.clone());
                }
            }
        }
        let numerator = self.subtract(&self.swap_variables(i));
        let factor = Polynomial::var(i).subtract(&Polynomial::var(i + 1));
        assert_eq!(
            factor.multiply(&out),
            numerator,
            "internal fault: divided difference was not an exact quotient"
        );
        out
    }

    /// The isobaric divided difference `π_i(f) = ∂_i(f - x_{i+1} f)`.
    pub fn isobaric_divided_difference(&self, i: u32) -> Polynomial {
        self.subtract(&self.multiply_by_variable(i + 1))
            .divided_difference(i)
    }

    pub fn min_total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    /// The sum of all terms of minimal total degree.
    pub fn lowest_degree_part(&self) -> Result<Polynomial, Error> {
        let d = self.min_total_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Terms sorted by ascending total degree, then descending lexicographic
    /// exponent order; this is the printing order.
    pub fn ordered_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| display_order(a, b));
        v
    }
}

fn display_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        other => return other,
    }
    let len = a.exponents().len().max(b.exponents().len());
    for k in 0..len {
        let (ea, eb) = (
            a.exponents().get(k).copied().unwrap_or(0),
            b.exponents().get(k).copied().unwrap_or(0),
        );
        match eb.cmp(&ea) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

impl fmt::Display for Polynomial {
    /// Canonical text form, e.g. `x1 + x2 − x1*x2`; unit coefficients and
    /// unit exponents are omitted and the minus separator is U+2212.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (k, (m, c)) in self.ordered_terms().into_iter().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    out.push('\u{2212}');
                }
            } else if c.is_negative() {
                out.push_str(" \u{2212} ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.magnitude();
            if m.is_constant() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&m.to_string());
            }
        }
        write!(f, "{out}")
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, other: Self) -> Polynomial {
        Polynomial::add(self, other)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, other: Self) -> Polynomial {
        self.subtract(other)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, other: Self) -> Polynomial {
        self.multiply(other)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negate()
    }
}

/// The Schubert polynomial of `w ∈ S_n`: the staircase monomial at the top,
/// one `∂_i` per step of the descending chain down to `w`. With the chain
/// convention of [`ascent_chain_to_top`] this is exactly the polynomial the
/// reduced pipe dreams of `w` sum to.
pub fn schubert(w: &Permutation, n: u32) -> Result<Polynomial, Error> {
    let chain = ascent_chain_to_top(w, n)?;
    let mut poly = Polynomial::from_term(Monomial::staircase(n), 1);
    for &i in chain.letters() {
        poly = poly.divided_difference(i);
    }
    Ok(poly)
}

/// The Grothendieck polynomial of `w ∈ S_n`: the same induction with `π_i`.
pub fn grothendieck(w: &Permutation, n: u32) -> Result<Polynomial, Error> {
    let chain = ascent_chain_to_top(w, n)?;
    let mut poly = Polynomial::from_term(Monomial::staircase(n), 1);
    for &i in chain.letters() {
        poly = poly.isobaric_divided_difference(i);
    }
    Ok(poly)
}
