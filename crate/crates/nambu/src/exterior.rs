//! Exterior calculus on increasing multi-indices.
//!
//! Multi-vector fields and differential forms are stored as maps from
//! strictly increasing multi-indices to polynomial coefficients, with *no*
//! factorial normalization: the basis element `dx1^dx2` (resp. `d1^d2`) has
//! the single stored component `1` on the index `(1,2)`, the pairing is
//! `<a, A> = sum_I a_I A^I` over increasing `I`, and the wedge is the signed
//! shuffle sum.  Interior products contract into the *first* slots.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::NambuError;
use crate::perm::sorted_with_sign;
use crate::scalar::{Point, Polynomial, Rational};

/// A strictly increasing tuple of 1-based coordinate indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    /// Builds a multi-index, checking strict monotonicity and range.
    pub fn new(indices: Vec<usize>, dim: usize) -> Result<Self, NambuError> {
        for &i in &indices {
            if i == 0 || i > dim {
                return Err(NambuError::IndexOutOfRange { index: i, dim });
            }
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(NambuError::Parse(format!(
                "multi-index {indices:?} is not strictly increasing"
            )));
        }
        Ok(MultiIndex(indices))
    }

    /// Sorts an arbitrary index tuple into a multi-index with the parity of
    /// the sort, or `None` when an index repeats (the alternating object is
    /// zero there).
    pub fn sorted_sign(
        indices: &[usize],
        dim: usize,
    ) -> Result<Option<(MultiIndex, i8)>, NambuError> {
        for &i in indices {
            if i == 0 || i > dim {
                return Err(NambuError::IndexOutOfRange { index: i, dim });
            }
        }
        Ok(sorted_with_sign(indices).map(|(sorted, sign)| (MultiIndex(sorted), sign)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Shared storage for alternating tensors with polynomial coefficients.
///
/// Keys are strictly increasing index vectors; stored coefficients are
/// nonzero.  `MultiVectorField` and `DifferentialForm` wrap this with their
/// variance-specific operations.
#[derive(Debug, Clone, PartialEq, Eq)]
struct AltCoeffs {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Polynomial>,
}

impl AltCoeffs {
    fn zero(dim: usize, degree: usize) -> Self {
        AltCoeffs {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, indices: Vec<usize>, coeff: Polynomial) {
        debug_assert_eq!(indices.len(), self.degree);
        debug_assert_eq!(coeff.dim(), self.dim);
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(indices) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn add(&self, rhs: &AltCoeffs) -> AltCoeffs {
        let mut out = self.clone();
        for (i, c) in &rhs.terms {
            out.add_term(i.clone(), c.clone());
        }
        out
    }

    fn neg(&self) -> AltCoeffs {
        self.scale_rat(&-Rational::one())
    }

    fn scale_rat(&self, c: &Rational) -> AltCoeffs {
        let mut out = AltCoeffs::zero(self.dim, self.degree);
        for (i, p) in &self.terms {
            out.add_term(i.clone(), p.scale(c));
        }
        out
    }

    fn scale_poly(&self, f: &Polynomial) -> AltCoeffs {
        let mut out = AltCoeffs::zero(self.dim, self.degree);
        for (i, p) in &self.terms {
            out.add_term(i.clone(), f * p);
        }
        out
    }

    fn wedge(&self, rhs: &AltCoeffs) -> AltCoeffs {
        debug_assert_eq!(self.dim, rhs.dim);
        let mut out = AltCoeffs::zero(self.dim, self.degree + rhs.degree);
        for (i, a) in &self.terms {
            for (j, b) in &rhs.terms {
                let concat: Vec<usize> = i.iter().chain(j.iter()).copied().collect();
                if let Some((sorted, sign)) = sorted_with_sign(&concat) {
                    let mut coeff = a * b;
                    if sign < 0 {
                        coeff = -&coeff;
                    }
                    out.add_term(sorted, coeff);
                }
            }
        }
        out
    }

    /// Signed component for an arbitrary index tuple.
    fn component(&self, indices: &[usize]) -> Result<Polynomial, NambuError> {
        if indices.len() != self.degree {
            return Err(NambuError::DegreeMismatch {
                expected: self.degree,
                found: indices.len(),
            });
        }
        match MultiIndex::sorted_sign(indices, self.dim)? {
            None => Ok(Polynomial::zero(self.dim)),
            Some((sorted, sign)) => Ok(match self.terms.get(sorted.as_slice()) {
                None => Polynomial::zero(self.dim),
                Some(p) if sign >= 0 => p.clone(),
                Some(p) => -p,
            }),
        }
    }

    fn eval_at(&self, p: &Point) -> Result<AltCoeffs, NambuError> {
        NambuError::check_dim(self.dim, p.dim())?;
        let mut out = AltCoeffs::zero(self.dim, self.degree);
        for (i, c) in &self.terms {
            out.add_term(i.clone(), Polynomial::constant(self.dim, c.eval(p)?));
        }
        Ok(out)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, basis: &str, sep: &str) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let blade: Vec<String> = i.iter().map(|k| format!("{basis}{k}")).collect();
            let blade = blade.join(sep);
            if blade.is_empty() {
                write!(f, "{c}")?;
            } else if c == &Polynomial::one(self.dim) {
                write!(f, "{blade}")?;
            } else if c.num_terms() == 1 {
                write!(f, "{c}·{blade}")?;
            } else {
                write!(f, "({c})·{blade}")?;
            }
        }
        Ok(())
    }
}

macro_rules! alt_common {
    ($ty:ident) => {
        impl $ty {
            /// The zero tensor of the given dimension and degree.
            pub fn zero(dim: usize, degree: usize) -> Self {
                $ty(AltCoeffs::zero(dim, degree))
            }

            /// Builds a tensor from `(multi-index, coefficient)` pairs,
            /// summing duplicates and validating indices and dimensions.
            pub fn from_terms(
                dim: usize,
                degree: usize,
                terms: Vec<(Vec<usize>, Polynomial)>,
            ) -> Result<Self, NambuError> {
                let mut inner = AltCoeffs::zero(dim, degree);
                for (indices, coeff) in terms {
                    let mi = MultiIndex::new(indices, dim)?;
                    if mi.len() != degree {
                        return Err(NambuError::DegreeMismatch {
                            expected: degree,
                            found: mi.len(),
                        });
                    }
                    NambuError::check_dim(dim, coeff.dim())?;
                    inner.add_term(mi.0, coeff);
                }
                Ok($ty(inner))
            }

            /// A single basis blade with the given coefficient.
            pub fn basis_blade(
                dim: usize,
                indices: Vec<usize>,
                coeff: Polynomial,
            ) -> Result<Self, NambuError> {
                let degree = indices.len();
                Self::from_terms(dim, degree, vec![(indices, coeff)])
            }

            pub fn dim(&self) -> usize {
                self.0.dim
            }

            pub fn degree(&self) -> usize {
                self.0.degree
            }

            pub fn is_zero(&self) -> bool {
                self.0.terms.is_empty()
            }

            /// Iterates `(increasing multi-index, coefficient)` pairs in
            /// lexicographic index order.
            pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Polynomial)> {
                self.0.terms.iter().map(|(i, c)| (i.as_slice(), c))
            }

            pub fn num_terms(&self) -> usize {
                self.0.terms.len()
            }

            /// Signed component for an arbitrary (not necessarily sorted)
            /// index tuple; zero when an index repeats.
            pub fn component(&self, indices: &[usize]) -> Result<Polynomial, NambuError> {
                self.0.component(indices)
            }

            /// The stored coefficient on a strictly increasing multi-index.
            pub fn coefficient(&self, indices: &[usize]) -> Option<&Polynomial> {
                self.0.terms.get(indices)
            }

            pub fn add(&self, rhs: &Self) -> Result<Self, NambuError> {
                NambuError::check_dim(self.dim(), rhs.dim())?;
                if self.degree() != rhs.degree() {
                    return Err(NambuError::DegreeMismatch {
                        expected: self.degree(),
                        found: rhs.degree(),
                    });
                }
                Ok($ty(self.0.add(&rhs.0)))
            }

            pub fn sub(&self, rhs: &Self) -> Result<Self, NambuError> {
                self.add(&rhs.neg())
            }

            pub fn neg(&self) -> Self {
                $ty(self.0.neg())
            }

            pub fn scale(&self, c: &Rational) -> Self {
                $ty(self.0.scale_rat(c))
            }

            /// Multiplies every coefficient by a polynomial.
            pub fn scale_poly(&self, f: &Polynomial) -> Self {
                $ty(self.0.scale_poly(f))
            }

            /// Wedge product within the same variance.
            pub fn wedge(&self, rhs: &Self) -> Result<Self, NambuError> {
                NambuError::check_dim(self.dim(), rhs.dim())?;
                Ok($ty(self.0.wedge(&rhs.0)))
            }

            /// Freezes the coefficients at a point (the result has constant
            /// coefficients in the same chart).
            pub fn eval_at(&self, p: &Point) -> Result<Self, NambuError> {
                Ok($ty(self.0.eval_at(p)?))
            }
        }
    };
}

/// Multi-vector field: an alternating contravariant tensor field, degree
/// `n >= 0`, with polynomial coefficients on increasing multi-indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiVectorField(AltCoeffs);

/// Differential form of degree `k >= 0` with polynomial coefficients on
/// increasing multi-indices.  A degree-0 form is a single polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialForm(AltCoeffs);

alt_common!(MultiVectorField);
alt_common!(DifferentialForm);

impl MultiVectorField {
    /// A degree-0 multi-vector field, i.e. a scalar function.
    pub fn scalar(f: Polynomial) -> Self {
        let dim = f.dim();
        let mut inner = AltCoeffs::zero(dim, 0);
        inner.add_term(Vec::new(), f);
        MultiVectorField(inner)
    }

    /// If this is a degree-0 field, its scalar value.
    pub fn as_scalar(&self) -> Option<Polynomial> {
        (self.degree() == 0).then(|| {
            self.coefficient(&[])
                .cloned()
                .unwrap_or_else(|| Polynomial::zero(self.dim()))
        })
    }
}

impl DifferentialForm {
    /// A degree-0 form, i.e. a scalar function.
    pub fn scalar(f: Polynomial) -> Self {
        let dim = f.dim();
        let mut inner = AltCoeffs::zero(dim, 0);
        inner.add_term(Vec::new(), f);
        DifferentialForm(inner)
    }

    /// The basis covector `dxi`.
    pub fn basis_covector(dim: usize, i: usize) -> Result<Self, NambuError> {
        DifferentialForm::basis_blade(dim, vec![i], Polynomial::one(dim))
    }
}

impl fmt::Display for MultiVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, "d", "^")
    }
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, "dx", "^")
    }
}

/// Polynomial vector field, stored by components: `X = sum_i X^i d/dxi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    dim: usize,
    components: Vec<Polynomial>,
}

impl VectorField {
    pub fn new(components: Vec<Polynomial>) -> Result<Self, NambuError> {
        let dim = components.len();
        for c in &components {
            NambuError::check_dim(dim, c.dim())?;
        }
        Ok(VectorField { dim, components })
    }

    pub fn zero(dim: usize) -> Self {
        VectorField {
            dim,
            components: vec![Polynomial::zero(dim); dim],
        }
    }

    /// The coordinate field `d/dxi`.
    pub fn basis(dim: usize, i: usize) -> Result<Self, NambuError> {
        if i == 0 || i > dim {
            return Err(NambuError::IndexOutOfRange { index: i, dim });
        }
        let mut v = VectorField::zero(dim);
        v.components[i - 1] = Polynomial::one(dim);
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// The component `X^i` (1-based).
    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &VectorField) -> Result<VectorField, NambuError> {
        NambuError::check_dim(self.dim, rhs.dim)?;
        VectorField::new(
            self.components
                .iter()
                .zip(&rhs.components)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn neg(&self) -> VectorField {
        VectorField {
            dim: self.dim,
            components: self.components.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale_poly(&self, f: &Polynomial) -> VectorField {
        VectorField {
            dim: self.dim,
            components: self.components.iter().map(|c| f * c).collect(),
        }
    }

    /// Directional derivative `X[f] = sum_i X^i df/dxi`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, NambuError> {
        NambuError::check_dim(self.dim, f.dim())?;
        let mut acc = Polynomial::zero(self.dim);
        for (i, xi) in self.components.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            acc = &acc + &(xi * &f.diff(i + 1)?);
        }
        Ok(acc)
    }

    /// The same field as a degree-1 multi-vector field.
    pub fn as_multivector(&self) -> MultiVectorField {
        let mut inner = AltCoeffs::zero(self.dim, 1);
        for (i, c) in self.components.iter().enumerate() {
            inner.add_term(vec![i + 1], c.clone());
        }
        MultiVectorField(inner)
    }

    /// Extracts a vector field from a degree-1 multi-vector field.
    pub fn from_multivector(mv: &MultiVectorField) -> Result<VectorField, NambuError> {
        if mv.degree() != 1 {
            return Err(NambuError::DegreeMismatch {
                expected: 1,
                found: mv.degree(),
            });
        }
        let mut v = VectorField::zero(mv.dim());
        for (idx, c) in mv.terms() {
            v.components[idx[0] - 1] = c.clone();
        }
        Ok(v)
    }

    /// Component values at a point.
    pub fn eval_at(&self, p: &Point) -> Result<Vec<Rational>, NambuError> {
        self.components.iter().map(|c| c.eval(p)).collect()
    }

    /// Lie bracket of vector fields: `[X,Y]^i = X[Y^i] - Y[X^i]`.
    pub fn lie_bracket(&self, rhs: &VectorField) -> Result<VectorField, NambuError> {
        NambuError::check_dim(self.dim, rhs.dim)?;
        let components: Result<Vec<Polynomial>, NambuError> = (0..self.dim)
            .map(|i| Ok(&self.apply(&rhs.components[i])? - &rhs.apply(&self.components[i])?))
            .collect();
        VectorField::new(components?)
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.as_multivector().fmt(f)
    }
}

/// Full pairing of a `k`-form with a `k`-vector field:
/// `<a, A> = sum_I a_I A^I` over increasing multi-indices.
pub fn pairing(alpha: &DifferentialForm, a: &MultiVectorField) -> Result<Polynomial, NambuError> {
    NambuError::check_dim(alpha.dim(), a.dim())?;
    if alpha.degree() != a.degree() {
        return Err(NambuError::DegreeMismatch {
            expected: alpha.degree(),
            found: a.degree(),
        });
    }
    let mut acc = Polynomial::zero(alpha.dim());
    for (i, c) in alpha.terms() {
        if let Some(p) = a.coefficient(i) {
            acc = &acc + &(c * p);
        }
    }
    Ok(acc)
}

/// Interior product of a `k`-form into the first `k` slots of an `n`-vector
/// field (`k <= n`); for `k = n` this coincides with the full pairing.
pub fn interior_form(
    alpha: &DifferentialForm,
    pi: &MultiVectorField,
) -> Result<MultiVectorField, NambuError> {
    NambuError::check_dim(alpha.dim(), pi.dim())?;
    let k = alpha.degree();
    let n = pi.degree();
    if k > n {
        return Err(NambuError::DegreeMismatch { expected: n, found: k });
    }
    let mut out = AltCoeffs::zero(pi.dim(), n - k);
    for (j, a) in alpha.terms() {
        for (i, p) in pi.terms() {
            if !j.iter().all(|x| i.contains(x)) {
                continue;
            }
            let rest: Vec<usize> = i.iter().copied().filter(|x| !j.contains(x)).collect();
            let concat: Vec<usize> = j.iter().chain(rest.iter()).copied().collect();
            let (_, sign) = sorted_with_sign(&concat).expect("subset split cannot repeat");
            let mut coeff = a * p;
            if sign < 0 {
                coeff = -&coeff;
            }
            out.add_term(rest, coeff);
        }
    }
    Ok(MultiVectorField(out))
}

/// Interior product of a vector field into the first slot of a `k`-form
/// (`k >= 1`).
pub fn interior_vector(
    x: &VectorField,
    omega: &DifferentialForm,
) -> Result<DifferentialForm, NambuError> {
    NambuError::check_dim(x.dim(), omega.dim())?;
    let k = omega.degree();
    if k == 0 {
        return Err(NambuError::DegreeMismatch { expected: 1, found: 0 });
    }
    let mut out = AltCoeffs::zero(omega.dim(), k - 1);
    for (i, w) in omega.terms() {
        for (pos, &idx) in i.iter().enumerate() {
            let xc = x.component(idx);
            if xc.is_zero() {
                continue;
            }
            let mut coeff = xc * w;
            if pos % 2 == 1 {
                coeff = -&coeff;
            }
            let rest: Vec<usize> = i
                .iter()
                .enumerate()
                .filter(|(q, _)| *q != pos)
                .map(|(_, &v)| v)
                .collect();
            out.add_term(rest, coeff);
        }
    }
    Ok(DifferentialForm(out))
}

/// Exterior derivative; on a degree-0 form this is the differential of the
/// function.
pub fn exterior_derivative(alpha: &DifferentialForm) -> Result<DifferentialForm, NambuError> {
    let dim = alpha.dim();
    let mut out = AltCoeffs::zero(dim, alpha.degree() + 1);
    for (i, c) in alpha.terms() {
        for j in 1..=dim {
            if i.contains(&j) {
                continue;
            }
            let dc = c.diff(j)?;
            if dc.is_zero() {
                continue;
            }
            let pos = i.iter().filter(|&&v| v < j).count();
            let mut indices = i.to_vec();
            indices.insert(pos, j);
            let coeff = if pos % 2 == 1 { -&dc } else { dc };
            out.add_term(indices, coeff);
        }
    }
    Ok(DifferentialForm(out))
}

/// The differential of a function as a 1-form.
pub fn differential(f: &Polynomial) -> Result<DifferentialForm, NambuError> {
    exterior_derivative(&DifferentialForm::scalar(f.clone()))
}

/// Radial (origin-based) homotopy operator for the Poincare lemma.
///
/// On a `k`-form with `k >= 1` it satisfies `h(da) + d(h(a)) = a`; applied
/// to `df` for a function `f` it returns `f - f(0)`.
pub fn homotopy(alpha: &DifferentialForm) -> Result<DifferentialForm, NambuError> {
    let k = alpha.degree();
    if k == 0 {
        return Err(NambuError::DegreeMismatch { expected: 1, found: 0 });
    }
    let dim = alpha.dim();
    let mut out = AltCoeffs::zero(dim, k - 1);
    for (i, c) in alpha.terms() {
        for (exps, coeff) in c.terms() {
            let m: u32 = exps.iter().sum();
            let weight = coeff / Rational::from_integer(BigInt::from(k as u32 + m));
            for (pos, &idx) in i.iter().enumerate() {
                let mut mono_exps = exps.to_vec();
                mono_exps[idx - 1] += 1;
                let signed = if pos % 2 == 1 { -weight.clone() } else { weight.clone() };
                let term = Polynomial::monomial(dim, mono_exps, signed)?;
                let rest: Vec<usize> = i
                    .iter()
                    .enumerate()
                    .filter(|(q, _)| *q != pos)
                    .map(|(_, &v)| v)
                    .collect();
                out.add_term(rest, term);
            }
        }
    }
    Ok(DifferentialForm(out))
}

/// Wedge of differentials `df1 ^ ... ^ dfk`.
pub fn wedge_of_differentials(fs: &[Polynomial]) -> Result<DifferentialForm, NambuError> {
    let dim = fs
        .first()
        .map(|f| f.dim())
        .ok_or(NambuError::Parse("empty differential list".into()))?;
    let mut acc = DifferentialForm::scalar(Polynomial::one(dim));
    for f in fs {
        acc = acc.wedge(&differential(f)?)?;
    }
    Ok(acc)
}

/// Wedge of vector fields `X1 ^ ... ^ Xk` as a multi-vector field.
pub fn wedge_of_vectors(xs: &[VectorField]) -> Result<MultiVectorField, NambuError> {
    let dim = xs
        .first()
        .map(|x| x.dim())
        .ok_or(NambuError::Parse("empty vector list".into()))?;
    let mut acc = MultiVectorField::scalar(Polynomial::one(dim));
    for x in xs {
        acc = acc.wedge(&x.as_multivector())?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn x(dim: usize, i: usize) -> Polynomial {
        Polynomial::var(dim, i).unwrap()
    }

    fn dx(dim: usize, i: usize) -> DifferentialForm {
        DifferentialForm::basis_covector(dim, i).unwrap()
    }

    fn dd(dim: usize, indices: &[usize]) -> MultiVectorField {
        MultiVectorField::basis_blade(dim, indices.to_vec(), Polynomial::one(dim)).unwrap()
    }

    #[test]
    fn multi_index_validation() {
        assert!(MultiIndex::new(vec![1, 2, 4], 4).is_ok());
        assert!(MultiIndex::new(vec![2, 2], 4).is_err());
        assert!(MultiIndex::new(vec![3, 1], 4).is_err());
        assert!(matches!(
            MultiIndex::new(vec![1, 5], 4),
            Err(NambuError::IndexOutOfRange { index: 5, dim: 4 })
        ));
    }

    #[test]
    fn sorted_sign_examples() {
        let (mi, sign) = MultiIndex::sorted_sign(&[3, 1, 2], 4).unwrap().unwrap();
        assert_eq!(mi.as_slice(), &[1, 2, 3]);
        assert_eq!(sign, 1);
        let (mi, sign) = MultiIndex::sorted_sign(&[2, 1], 4).unwrap().unwrap();
        assert_eq!(mi.as_slice(), &[1, 2]);
        assert_eq!(sign, -1);
        assert!(MultiIndex::sorted_sign(&[1, 1, 2], 4).unwrap().is_none());
    }

    #[test]
    fn wedge_of_basis_covectors_has_unit_component() {
        // No factorial factors: (dx1^dx2) has the single component 1 on (1,2).
        let w = dx(3, 1).wedge(&dx(3, 2)).unwrap();
        assert_eq!(w.coefficient(&[1, 2]), Some(&Polynomial::one(3)));
        assert_eq!(w.num_terms(), 1);
        let anti = dx(3, 2).wedge(&dx(3, 1)).unwrap();
        assert_eq!(anti, w.neg());
    }

    #[test]
    fn wedge_with_a_polynomial_coefficient() {
        let a = dx(2, 1).scale_poly(&x(2, 1));
        let w = a.wedge(&dx(2, 2)).unwrap();
        assert_eq!(w.coefficient(&[1, 2]), Some(&x(2, 1)));
    }

    #[test]
    fn wedge_of_a_covector_with_itself_vanishes() {
        let a = dx(3, 1).add(&dx(3, 2)).unwrap();
        assert!(a.wedge(&a).unwrap().is_zero());
    }

    #[test]
    fn pairing_is_the_component_sum() {
        let fm = dx(4, 1).wedge(&dx(4, 2)).unwrap();
        assert_eq!(pairing(&fm, &dd(4, &[1, 2])).unwrap(), Polynomial::one(4));
        assert_eq!(pairing(&fm, &dd(4, &[1, 3])).unwrap(), Polynomial::zero(4));
        // <x3 dx1^dx2, d1^d2 + d3^d4> = x3
        let alpha = fm.scale_poly(&x(4, 3));
        let pi = dd(4, &[1, 2]).add(&dd(4, &[3, 4])).unwrap();
        assert_eq!(pairing(&alpha, &pi).unwrap(), x(4, 3));
    }

    #[test]
    fn pairing_rejects_degree_mismatch() {
        assert!(matches!(
            pairing(&dx(3, 1), &dd(3, &[1, 2])),
            Err(NambuError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn interior_form_contracts_first_slots() {
        let pi = dd(3, &[1, 2, 3]);
        let i1 = interior_form(&dx(3, 1), &pi).unwrap();
        assert_eq!(i1, dd(3, &[2, 3]));
        let i12 = interior_form(&dx(3, 1).wedge(&dx(3, 2)).unwrap(), &pi).unwrap();
        assert_eq!(i12, dd(3, &[3]));
        // Full contraction agrees with the pairing.
        let full = interior_form(&wedge_of_differentials(&[x(3, 1), x(3, 2), x(3, 3)]).unwrap(), &pi)
            .unwrap();
        assert_eq!(full.as_scalar().unwrap(), Polynomial::one(3));
    }

    #[test]
    fn interior_vector_contracts_the_first_slot() {
        let w = dx(3, 1).wedge(&dx(3, 2)).unwrap();
        let v = VectorField::basis(3, 2).unwrap();
        assert_eq!(interior_vector(&v, &w).unwrap(), dx(3, 1).neg());
        let top = w.wedge(&dx(3, 3)).unwrap();
        let v1 = VectorField::basis(3, 1).unwrap();
        assert_eq!(
            interior_vector(&v1, &top).unwrap(),
            dx(3, 2).wedge(&dx(3, 3)).unwrap()
        );
        // i_{x1 d2}(dx1^dx2) = -x1 dx1
        let xf = VectorField::basis(2, 2).unwrap().scale_poly(&x(2, 1));
        let w2 = dx(2, 1).wedge(&dx(2, 2)).unwrap();
        assert_eq!(
            interior_vector(&xf, &w2).unwrap(),
            dx(2, 1).scale_poly(&x(2, 1)).neg()
        );
    }

    #[test]
    fn exterior_derivative_examples() {
        // d(x1) = dx1
        assert_eq!(differential(&x(2, 1)).unwrap(), dx(2, 1));
        // d(x2 dx1) = -dx1^dx2
        let a = dx(2, 1).scale_poly(&x(2, 2));
        assert_eq!(
            exterior_derivative(&a).unwrap(),
            dx(2, 1).wedge(&dx(2, 2)).unwrap().neg()
        );
        // d(x1 dx2^dx3) = dx1^dx2^dx3
        let b = dx(3, 2).wedge(&dx(3, 3)).unwrap().scale_poly(&x(3, 1));
        let top = dx(3, 1)
            .wedge(&dx(3, 2))
            .unwrap()
            .wedge(&dx(3, 3))
            .unwrap();
        assert_eq!(exterior_derivative(&b).unwrap(), top);
    }

    #[test]
    fn homotopy_examples() {
        // h(dx1) = x1
        let h = homotopy(&dx(2, 1)).unwrap();
        assert_eq!(h, DifferentialForm::scalar(x(2, 1)));
        // h(x2 dx1) = (1/2) x1 x2
        let h2 = homotopy(&dx(2, 1).scale_poly(&x(2, 2))).unwrap();
        assert_eq!(
            h2,
            DifferentialForm::scalar((&x(2, 1) * &x(2, 2)).scale(&rat(1, 2)))
        );
    }

    #[test]
    fn homotopy_inverts_the_differential_of_a_function() {
        // h(df) = f - f(0)
        let f = &(&x(3, 1) * &x(3, 2)) + &(&x(3, 3).pow(3) + &Polynomial::constant(3, rat(5, 1)));
        let recovered = homotopy(&differential(&f).unwrap()).unwrap();
        let expected = &f - &Polynomial::constant(3, f.constant_term());
        assert_eq!(recovered, DifferentialForm::scalar(expected));
    }

    #[test]
    fn homotopy_identity_on_a_mixed_form() {
        // h(da) + d(h(a)) = a for a = x1 x3 dx2 + x2^2 dx3 in d=3.
        let a = dx(3, 2)
            .scale_poly(&(&x(3, 1) * &x(3, 3)))
            .add(&dx(3, 3).scale_poly(&x(3, 2).pow(2)))
            .unwrap();
        let lhs = homotopy(&exterior_derivative(&a).unwrap())
            .unwrap()
            .add(&exterior_derivative(&homotopy(&a).unwrap()).unwrap())
            .unwrap();
        assert_eq!(lhs, a);
    }

    #[test]
    fn evaluation_freezes_coefficients() {
        let pi = dd(2, &[1, 2]).scale_poly(&x(2, 1));
        let at = pi.eval_at(&Point::new(vec![rat(3, 1), rat(0, 1)])).unwrap();
        assert_eq!(
            at.coefficient(&[1, 2]),
            Some(&Polynomial::constant(2, rat(3, 1)))
        );
        let at_origin = pi.eval_at(&Point::origin(2)).unwrap();
        assert!(at_origin.is_zero());
    }
}
