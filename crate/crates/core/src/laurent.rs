//! Exact arithmetic for Laurent polynomials in `x1..xn` with polynomial
//! coefficient variables `y1..yn`.
//!
//! Every element lives in `Z[x1^±1, .., xn^±1, y1, .., yn]`: x-exponents may
//! be negative, y-exponents are non-negative by construction (a negative
//! y-exponent is a type error, not a representable value). Coefficients are
//! arbitrary-precision integers so long mutation runs can never overflow.
//!
//! Terms are kept in a canonical order (y-exponent vector lexicographically,
//! then x-exponent vector lexicographically) and zero coefficients are never
//! stored, so equality is structural and text rendering is bit-exact across
//! runs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors raised by Laurent arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    /// Two operands (or a polynomial and a matrix) disagree on the number of
    /// variables.
    #[error("laurent: dimension mismatch ({left} vs {right} variables)")]
    DimensionMismatch { left: usize, right: usize },
    /// An exponent vector of the wrong length was supplied.
    #[error("laurent: exponent vector has length {got}, expected {expected}")]
    ExponentLength { expected: usize, got: usize },
    /// `divide_exact` was asked to divide by zero.
    #[error("laurent: division by zero")]
    DivisionByZero,
    /// `divide_exact` found a non-trivial remainder.
    #[error("laurent: inexact division")]
    InexactDivision,
    /// An operation would have produced a negative y-exponent.
    #[error("laurent: negative y exponent")]
    NegativeYExponent,
    /// Canonical-text parsing failed.
    #[error("laurent: parse error: {0}")]
    Parse(String),
}

/// A monomial key: y-exponents first so the derived lexicographic order is
/// the canonical term order (y vector, then x vector).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Mono {
    y: Vec<u32>,
    x: Vec<i64>,
}

/// An exact Laurent polynomial in `n` x-variables and `n` y-variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Mono, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial on `nvars` variable pairs.
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(nvars: usize, value: BigInt) -> Self {
        let mut p = Self::zero(nvars);
        if !value.is_zero() {
            p.terms.insert(
                Mono {
                    y: vec![0; nvars],
                    x: vec![0; nvars],
                },
                value,
            );
        }
        p
    }

    /// A single term `coef * x^xs * y^ys`.
    pub fn monomial(
        nvars: usize,
        coef: BigInt,
        xs: &[i64],
        ys: &[u32],
    ) -> Result<Self, LaurentError> {
        if xs.len() != nvars {
            return Err(LaurentError::ExponentLength {
                expected: nvars,
                got: xs.len(),
            });
        }
        if ys.len() != nvars {
            return Err(LaurentError::ExponentLength {
                expected: nvars,
                got: ys.len(),
            });
        }
        let mut p = Self::zero(nvars);
        if !coef.is_zero() {
            p.terms.insert(
                Mono {
                    y: ys.to_vec(),
                    x: xs.to_vec(),
                },
                coef,
            );
        }
        Ok(p)
    }

    /// The variable `x_i` (1-based).
    pub fn var_x(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "x variable index out of range");
        let mut xs = vec![0i64; nvars];
        xs[i - 1] = 1;
        Self::monomial(nvars, BigInt::one(), &xs, &vec![0; nvars]).expect("exponent lengths match")
    }

    /// The variable `y_i` (1-based).
    pub fn var_y(nvars: usize, i: usize) -> Self {
        assert!((1..=nvars).contains(&i), "y variable index out of range");
        let mut ys = vec![0u32; nvars];
        ys[i - 1] = 1;
        Self::monomial(nvars, BigInt::one(), &vec![0; nvars], &ys).expect("exponent lengths match")
    }

    /// Number of variable pairs.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (non-zero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterate terms in canonical order as `(x_exponents, y_exponents, coef)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &[u32], &BigInt)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.x.as_slice(), m.y.as_slice(), c))
    }

    /// The coefficient of the given monomial (zero if absent).
    pub fn coefficient(&self, xs: &[i64], ys: &[u32]) -> BigInt {
        let key = Mono {
            y: ys.to_vec(),
            x: xs.to_vec(),
        };
        self.terms.get(&key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// If the polynomial is a single term, its `(x, y, coef)` data.
    pub fn as_monomial(&self) -> Option<(Vec<i64>, Vec<u32>, BigInt)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("one term");
            Some((m.x.clone(), m.y.clone(), c.clone()))
        } else {
            None
        }
    }

    fn check_arity(&self, other: &Self) -> Result<(), LaurentError> {
        if self.nvars != other.nvars {
            return Err(LaurentError::DimensionMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    fn insert_term(terms: &mut BTreeMap<Mono, BigInt>, mono: Mono, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(coef);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_arity(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_term(&mut terms, m.clone(), c.clone());
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_arity(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mono = Mono {
                    y: ma.y.iter().zip(&mb.y).map(|(a, b)| a + b).collect(),
                    x: ma.x.iter().zip(&mb.x).map(|(a, b)| a + b).collect(),
                };
                Self::insert_term(&mut terms, mono, ca * cb);
            }
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self).expect("arity is stable under pow");
        }
        acc
    }

    /// Exact division: returns `q` with `self = q * divisor`, or an error if
    /// no such Laurent polynomial exists. Exactness is decided by long
    /// division after clearing denominators, so an inexact division is always
    /// detected (never an infinite loop or a silently wrong quotient).
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        self.check_arity(divisor)?;
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let n = self.nvars;

        // Shift both operands so every exponent is non-negative; divide in
        // the ordinary polynomial ring; unshift at the end. For each single
        // variable, lowest degrees are additive over products, so an exact
        // Laurent quotient always corresponds to an exact polynomial one.
        let (p0, p_shift_x, p_shift_y) = self.shifted_to_polynomial();
        let (q0, q_shift_x, q_shift_y) = divisor.shifted_to_polynomial();

        let (q_lead_m, q_lead_c) = q0.terms.iter().next_back().expect("divisor is non-zero");
        let mut remainder = p0.terms.clone();
        let mut quotient: BTreeMap<Mono, BigInt> = BTreeMap::new();

        while let Some((r_mono, r_coef)) = remainder.iter().next_back() {
            let r_mono = r_mono.clone();
            let r_coef = r_coef.clone();
            // The leading monomial must be divisible in the polynomial sense.
            let mut t = Mono {
                y: Vec::with_capacity(n),
                x: Vec::with_capacity(n),
            };
            for (a, b) in r_mono.y.iter().zip(&q_lead_m.y) {
                if a < b {
                    return Err(LaurentError::InexactDivision);
                }
                t.y.push(a - b);
            }
            for (a, b) in r_mono.x.iter().zip(&q_lead_m.x) {
                if a < b {
                    return Err(LaurentError::InexactDivision);
                }
                t.x.push(a - b);
            }
            let (t_coef, rem) = num_integer_div_rem(&r_coef, q_lead_c);
            if !rem.is_zero() {
                return Err(LaurentError::InexactDivision);
            }
            for (m, c) in &q0.terms {
                let shifted = Mono {
                    y: m.y.iter().zip(&t.y).map(|(a, b)| a + b).collect(),
                    x: m.x.iter().zip(&t.x).map(|(a, b)| a + b).collect(),
                };
                Self::insert_term(&mut remainder, shifted, -(c * &t_coef));
            }
            quotient.insert(t, t_coef);
        }

        // Undo the shifts: quotient * x^(p_shift - q_shift) * y^(likewise).
        let mut terms = BTreeMap::new();
        for (m, c) in quotient {
            let mut y = Vec::with_capacity(n);
            for i in 0..n {
                let e = i64::from(m.y[i]) + i64::from(p_shift_y[i]) - i64::from(q_shift_y[i]);
                if e < 0 {
                    return Err(LaurentError::NegativeYExponent);
                }
                y.push(u32::try_from(e).expect("y exponent fits in u32"));
            }
            let x = (0..n)
                .map(|i| m.x[i] + p_shift_x[i] - q_shift_x[i])
                .collect();
            terms.insert(Mono { y, x }, c);
        }
        Ok(LaurentPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Shift so all exponents are >= 0; returns the shifted polynomial plus
    /// the per-variable shifts that were subtracted.
    fn shifted_to_polynomial(&self) -> (LaurentPoly, Vec<i64>, Vec<u32>) {
        let n = self.nvars;
        let mut min_x = vec![i64::MAX; n];
        let mut min_y = vec![u32::MAX; n];
        for m in self.terms.keys() {
            for i in 0..n {
                min_x[i] = min_x[i].min(m.x[i]);
                min_y[i] = min_y[i].min(m.y[i]);
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono = Mono {
                    y: (0..n).map(|i| m.y[i] - min_y[i]).collect(),
                    x: (0..n).map(|i| m.x[i] - min_x[i]).collect(),
                };
                (mono, c.clone())
            })
            .collect();
        (
            LaurentPoly {
                nvars: self.nvars,
                terms,
            },
            min_x,
            min_y,
        )
    }

    /// Per-variable minimum x-exponent over all terms (the negated
    /// denominator vector of the reduced fraction). `None` for zero.
    pub fn min_x_exponents(&self) -> Option<Vec<i64>> {
        if self.is_zero() {
            return None;
        }
        let mut min_x = vec![i64::MAX; self.nvars];
        for m in self.terms.keys() {
            for (low, &e) in min_x.iter_mut().zip(&m.x) {
                *low = (*low).min(e);
            }
        }
        Some(min_x)
    }

    /// Substitute `x_i := 1` for all i (keeps the y-part of every term).
    pub fn specialize_x_one(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mono = Mono {
                y: m.y.clone(),
                x: vec![0; self.nvars],
            };
            Self::insert_term(&mut terms, mono, c.clone());
        }
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Substitute `y_i := 1` for all i (keeps the x-part of every term).
    pub fn specialize_y_one(&self) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mono = Mono {
                y: vec![0; self.nvars],
                x: m.x.clone(),
            };
            Self::insert_term(&mut terms, mono, c.clone());
        }
        LaurentPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Degree of each term under the grading `deg(x_i) = e_i`,
    /// `deg(y_j) = -B e_j`, i.e. `a - B b` for a term `x^a y^b`. Returns the
    /// common degree vector if all terms agree (`None` if inhomogeneous or
    /// zero).
    pub fn degree_of(&self, b_matrix: &[Vec<i64>]) -> Result<Option<Vec<i64>>, LaurentError> {
        if b_matrix.len() != self.nvars || b_matrix.iter().any(|row| row.len() != self.nvars) {
            return Err(LaurentError::DimensionMismatch {
                left: self.nvars,
                right: b_matrix.len(),
            });
        }
        let mut degree: Option<Vec<i64>> = None;
        for m in self.terms.keys() {
            let d: Vec<i64> = (0..self.nvars)
                .map(|i| {
                    m.x[i]
                        - (0..self.nvars)
                            .map(|j| b_matrix[i][j] * i64::from(m.y[j]))
                            .sum::<i64>()
                })
                .collect();
            match &degree {
                None => degree = Some(d),
                Some(prev) if *prev == d => {}
                Some(_) => return Ok(None),
            }
        }
        Ok(degree)
    }

    /// Render in canonical text form. Inverse of [`LaurentPoly::parse`].
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let magnitude = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.x.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(format!("x{}", i + 1));
                } else {
                    factors.push(format!("x{}^{}", i + 1, e));
                }
            }
            for (i, &e) in m.y.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(format!("y{}", i + 1));
                } else {
                    factors.push(format!("y{}^{}", i + 1, e));
                }
            }
            if factors.is_empty() {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    /// Parse the canonical text form produced by [`LaurentPoly::render`].
    pub fn parse(nvars: usize, input: &str) -> Result<Self, LaurentError> {
        let input = input.trim();
        if input.is_empty() {
            return Err(LaurentError::Parse("empty input".to_string()));
        }
        if input == "0" {
            return Ok(Self::zero(nvars));
        }
        let mut result = Self::zero(nvars);
        // Split on top-level " + " / " - " separators, honoring a leading '-'.
        let mut rest = input;
        let mut sign = BigInt::one();
        if let Some(stripped) = rest.strip_prefix('-') {
            sign = -sign;
            rest = stripped;
        }
        loop {
            let (term_str, next) = match (rest.find(" + "), rest.find(" - ")) {
                (Some(p), Some(m)) if p < m => (&rest[..p], Some((&rest[p + 3..], false))),
                (Some(_), Some(m)) => (&rest[..m], Some((&rest[m + 3..], true))),
                (Some(p), None) => (&rest[..p], Some((&rest[p + 3..], false))),
                (None, Some(m)) => (&rest[..m], Some((&rest[m + 3..], true))),
                (None, None) => (rest, None),
            };
            let term = Self::parse_term(nvars, term_str.trim(), &sign)?;
            result = result.add(&term)?;
            match next {
                Some((next_rest, negative)) => {
                    rest = next_rest;
                    sign = if negative {
                        -BigInt::one()
                    } else {
                        BigInt::one()
                    };
                }
                None => break,
            }
        }
        Ok(result)
    }

    fn parse_term(nvars: usize, term: &str, sign: &BigInt) -> Result<Self, LaurentError> {
        if term.is_empty() {
            return Err(LaurentError::Parse("empty term".to_string()));
        }
        let mut coef = sign.clone();
        let mut xs = vec![0i64; nvars];
        let mut ys = vec![0u32; nvars];
        let mut saw_coef = false;
        for factor in term.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(LaurentError::Parse("empty factor".to_string()));
            }
            if factor.starts_with('x') || factor.starts_with('y') {
                let is_x = factor.starts_with('x');
                let body = &factor[1..];
                let (idx_str, exp_str) = match body.find('^') {
                    Some(caret) => (&body[..caret], Some(&body[caret + 1..])),
                    None => (body, None),
                };
                let idx: usize = idx_str.parse().map_err(|_| {
                    LaurentError::Parse(format!("bad variable index in {factor:?}"))
                })?;
                if idx == 0 || idx > nvars {
                    return Err(LaurentError::Parse(format!(
                        "variable index {idx} out of range 1..={nvars}"
                    )));
                }
                let exp: i64 = match exp_str {
                    Some(s) => s
                        .parse()
                        .map_err(|_| LaurentError::Parse(format!("bad exponent in {factor:?}")))?,
                    None => 1,
                };
                if is_x {
                    xs[idx - 1] += exp;
                } else {
                    if exp < 0 {
                        return Err(LaurentError::NegativeYExponent);
                    }
                    ys[idx - 1] += u32::try_from(exp).map_err(|_| {
                        LaurentError::Parse(format!("exponent overflow in {factor:?}"))
                    })?;
                }
            } else {
                if saw_coef {
                    return Err(LaurentError::Parse(format!(
                        "more than one numeric factor in {term:?}"
                    )));
                }
                let value: BigInt = factor
                    .parse()
                    .map_err(|_| LaurentError::Parse(format!("bad coefficient {factor:?}")))?;
                coef *= value;
                saw_coef = true;
            }
        }
        Self::monomial(nvars, coef, &xs, &ys)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Truncated-toward-zero division with remainder, for exactness checks.
fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let q = a / b;
    let r = a - &q * b;
    (q, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(n: usize, s: &str) -> LaurentPoly {
        LaurentPoly::parse(n, s).expect("test polynomial parses")
    }

    #[test]
    fn renders_canonical_examples() {
        let p = poly(3, "x1^-1 + 2*x1*x3^-2*y1*y3 - x2");
        assert_eq!(p.render(), "x1^-1 - x2 + 2*x1*x3^-2*y1*y3");
        assert_eq!(LaurentPoly::zero(2).render(), "0");
        assert_eq!(LaurentPoly::one(2).render(), "1");
        assert_eq!(LaurentPoly::constant(2, BigInt::from(-7)).render(), "-7");
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = poly(2, "x1*y2 + 3");
        let q = p.neg();
        assert!(p.add(&q).unwrap().is_zero());
    }

    #[test]
    fn mul_collects_terms() {
        let p = poly(1, "x1 + 1");
        let q = poly(1, "x1 - 1");
        assert_eq!(p.mul(&q).unwrap().render(), "-1 + x1^2");
    }

    #[test]
    fn divide_exact_recovers_factor() {
        let p = poly(2, "x1^-1 + y1*x2");
        let q = poly(2, "x1*x2^-3 + y2");
        let prod = p.mul(&q).unwrap();
        assert_eq!(prod.divide_exact(&p).unwrap(), q);
        assert_eq!(prod.divide_exact(&q).unwrap(), p);
    }

    #[test]
    fn divide_exact_detects_remainder() {
        let p = poly(1, "x1^2 + 1");
        let q = poly(1, "x1 + 1");
        assert_eq!(p.divide_exact(&q), Err(LaurentError::InexactDivision));
    }

    #[test]
    fn divide_by_zero_is_an_error() {
        let p = poly(1, "x1");
        assert_eq!(
            p.divide_exact(&LaurentPoly::zero(1)),
            Err(LaurentError::DivisionByZero)
        );
    }

    #[test]
    fn division_flags_negative_y_exponent() {
        let p = poly(1, "x1");
        let q = poly(1, "y1");
        assert_eq!(p.divide_exact(&q), Err(LaurentError::NegativeYExponent));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let p = LaurentPoly::one(2);
        let q = LaurentPoly::one(3);
        assert!(matches!(
            p.add(&q),
            Err(LaurentError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn specialization_drops_the_right_block() {
        let p = poly(2, "x1^-1*y2 + x2*y2 + x1");
        assert_eq!(p.specialize_x_one().render(), "1 + 2*y2");
        assert_eq!(p.specialize_y_one().render(), "x1^-1 + x2 + x1");
    }

    #[test]
    fn degree_detects_homogeneity() {
        // B = [[0, -1], [1, 0]]: deg(y1) = -(column 1) = (0, -1). The
        // exchange result (1 + x2*y1)/x1 is homogeneous of degree (-1, 0).
        let b = vec![vec![0, -1], vec![1, 0]];
        let homog = poly(2, "x1^-1 + x1^-1*x2*y1");
        assert_eq!(homog.degree_of(&b).unwrap(), Some(vec![-1, 0]));
        let inhomog = poly(2, "x1 + x2");
        assert_eq!(inhomog.degree_of(&b).unwrap(), None);
        assert_eq!(LaurentPoly::zero(2).degree_of(&b).unwrap(), None);
    }

    #[test]
    fn min_x_exponents_tracks_denominator() {
        let p = poly(2, "x1^-2*x2 + x1*x2^-1");
        assert_eq!(p.min_x_exponents(), Some(vec![-2, -1]));
        assert_eq!(LaurentPoly::zero(2).min_x_exponents(), None);
    }

    prop_compose! {
        fn arb_poly(nvars: usize)
            (terms in proptest::collection::vec(
                (
                    proptest::collection::vec(-4i64..5, nvars),
                    proptest::collection::vec(0u32..4, nvars),
                    -9i64..10,
                ),
                0..8,
            ))
        -> LaurentPoly {
            let mut p = LaurentPoly::zero(nvars);
            for (xs, ys, c) in terms {
                let m = LaurentPoly::monomial(nvars, BigInt::from(c), &xs, &ys).unwrap();
                p = p.add(&m).unwrap();
            }
            p
        }
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(p in arb_poly(3)) {
            let text = p.render();
            let back = LaurentPoly::parse(3, &text).unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn mul_distributes_over_add(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
            let left = a.mul(&b.add(&c).unwrap()).unwrap();
            let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn product_division_is_exact(a in arb_poly(2), b in arb_poly(2)) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b).unwrap();
            prop_assert_eq!(prod.divide_exact(&b).unwrap(), a);
        }
    }
}
