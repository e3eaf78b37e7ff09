//! Exact scalars: arbitrary-precision rationals, sparse multivariate
//! polynomials over `Q`, and rational evaluation points.
//!
//! Polynomials are stored as a map from exponent vectors to nonzero rational
//! coefficients, so structural equality is exact equality of polynomials and
//! the zero polynomial is the empty map.  Coordinates are `x1..xd` and all
//! indices in the public API are 1-based.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::NambuError;

/// Exact rational scalar: reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses a rational from a `p/q` or plain-integer decimal string.
pub fn parse_rational(s: &str) -> Result<Rational, NambuError> {
    Rational::from_str(s.trim())
        .map_err(|e| NambuError::Parse(format!("invalid rational {s:?}: {e}")))
}

/// Renders a rational as `p/q` with an explicit denominator (`3` -> `"3/1"`).
pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Convenience constructor for small rationals.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A rational point in coordinates `x1..xd`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point { coords }
    }

    /// The origin of a `dim`-dimensional coordinate chart.
    pub fn origin(dim: usize) -> Self {
        Point {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// The value of coordinate `xi` (1-based).
    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i - 1]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Sparse multivariate polynomial over `Q` in variables `x1..xd`.
///
/// Invariants: every stored coefficient is nonzero and every exponent vector
/// has length `dim`.  Terms are kept in a `BTreeMap`, so iteration order (and
/// hence serialization and display) is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Polynomial {
    /// The zero polynomial in `dim` variables.
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `value`.
    pub fn constant(dim: usize, value: Rational) -> Self {
        let mut p = Polynomial::zero(dim);
        p.add_term(vec![0; dim], value);
        p
    }

    /// The constant polynomial `1`.
    pub fn one(dim: usize) -> Self {
        Polynomial::constant(dim, Rational::one())
    }

    /// The coordinate function `xi` (1-based).
    pub fn var(dim: usize, i: usize) -> Result<Self, NambuError> {
        if i == 0 || i > dim {
            return Err(NambuError::IndexOutOfRange { index: i, dim });
        }
        let mut exps = vec![0; dim];
        exps[i - 1] = 1;
        let mut p = Polynomial::zero(dim);
        p.add_term(exps, Rational::one());
        Ok(p)
    }

    /// A single term `coeff * x^exps`.
    pub fn monomial(dim: usize, exps: Vec<u32>, coeff: Rational) -> Result<Self, NambuError> {
        if exps.len() != dim {
            return Err(NambuError::DimensionMismatch {
                expected: dim,
                found: exps.len(),
            });
        }
        let mut p = Polynomial::zero(dim);
        p.add_term(exps, coeff);
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(exponent vector, coefficient)` pairs in lexicographic
    /// order of the exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The largest total degree of any term; `0` for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// If the polynomial is constant (including zero), its value.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (exps, coeff) = self.terms.iter().next().unwrap();
                exps.iter().all(|&e| e == 0).then(|| coeff.clone())
            }
            _ => None,
        }
    }

    /// If the polynomial is exactly a coordinate function `xi`, returns `i`.
    pub fn as_coordinate(&self) -> Option<usize> {
        if self.terms.len() != 1 {
            return None;
        }
        let (exps, coeff) = self.terms.iter().next().unwrap();
        if !coeff.is_one() {
            return None;
        }
        let mut idx = None;
        for (pos, &e) in exps.iter().enumerate() {
            match (e, idx) {
                (0, _) => {}
                (1, None) => idx = Some(pos + 1),
                _ => return None,
            }
        }
        idx
    }

    /// The coefficient of the constant term (the value at the origin).
    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Adds `coeff * x^exps` in place, dropping the term if it cancels.
    pub(crate) fn add_term(&mut self, exps: Vec<u32>, coeff: Rational) {
        debug_assert_eq!(exps.len(), self.dim);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        let mut out = Polynomial::zero(self.dim);
        for (e, a) in &self.terms {
            out.terms.insert(e.clone(), a * c);
        }
        out
    }

    /// Partial derivative with respect to `xi` (1-based).
    pub fn diff(&self, i: usize) -> Result<Polynomial, NambuError> {
        if i == 0 || i > self.dim {
            return Err(NambuError::IndexOutOfRange { index: i, dim: self.dim });
        }
        let mut out = Polynomial::zero(self.dim);
        for (e, c) in &self.terms {
            let k = e[i - 1];
            if k == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[i - 1] = k - 1;
            out.add_term(exps, c * Rational::from_integer(BigInt::from(k)));
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, p: &Point) -> Result<Rational, NambuError> {
        NambuError::check_dim(self.dim, p.dim())?;
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (pos, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    term *= &p.coords()[pos];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.dim);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `xi := images[i-1]`; all images must share one dimension.
    ///
    /// This is a ring homomorphism `Q[x1..xd] -> Q[x1..xe]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, NambuError> {
        if images.len() != self.dim {
            return Err(NambuError::DimensionMismatch {
                expected: self.dim,
                found: images.len(),
            });
        }
        let out_dim = images.first().map(|p| p.dim()).unwrap_or(0);
        for img in images {
            NambuError::check_dim(out_dim, img.dim())?;
        }
        // Cache powers of each image as they are needed.
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(out_dim), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(out_dim);
        for (e, c) in &self.terms {
            let mut term = Polynomial::constant(out_dim, c.clone());
            for (pos, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let cache = &mut powers[pos];
                while cache.len() <= k as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                term = &term * &cache[k as usize];
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Evaluates the polynomial at `x + shift`, i.e. recenters the origin.
    pub fn shift(&self, shift: &Point) -> Result<Polynomial, NambuError> {
        NambuError::check_dim(self.dim, shift.dim())?;
        let images: Result<Vec<Polynomial>, NambuError> = (1..=self.dim)
            .map(|i| {
                Ok(&Polynomial::var(self.dim, i)?
                    + &Polynomial::constant(self.dim, shift.coord(i).clone()))
            })
            .collect();
        self.substitute(&images?)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "polynomial dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.dim, rhs.dim, "polynomial dimension mismatch");
        let mut out = Polynomial::zero(self.dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let mut factors: Vec<String> = Vec::new();
            for (pos, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(format!("x{}", pos + 1)),
                    _ => factors.push(format!("x{}^{}", pos + 1, k)),
                }
            }
            let abs = c.abs();
            let coeff = if abs.is_one() && !factors.is_empty() {
                String::new()
            } else {
                abs.to_string()
            };
            let sep = if coeff.is_empty() || factors.is_empty() { "" } else { "*" };
            let body = format!("{}{}{}", coeff, sep, factors.join("*"));
            if first {
                let sign = if c.is_negative() { "-" } else { "" };
                write!(f, "{sign}{body}")?;
                first = false;
            } else {
                let sign = if c.is_negative() { " - " } else { " + " };
                write!(f, "{sign}{body}")?;
            }
        }
        Ok(())
    }
}
