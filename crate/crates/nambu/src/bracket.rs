//! The Nambu bracket of an `n`-vector field and its companion operators:
//! sharp/flat maps, Hamiltonian vector fields, the Schouten–Nijenhuis
//! bracket, Lie derivatives, ranks, Casimir and conformal checks.
//!
//! Conventions: storage on increasing multi-indices carries no factorial
//! factors, and the pairing is the plain component sum.  This normalization
//! is pinned by the exact identity `X_f[g] = {f_1,...,f_{n-1}, g}`.

use std::fmt;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::NambuError;
use crate::exterior::{
    differential, exterior_derivative, interior_form, interior_vector, wedge_of_differentials,
    DifferentialForm, MultiVectorField, VectorField,
};
use crate::identity::Verdict;
use crate::linalg::RationalMatrix;
use crate::scalar::{Point, Polynomial, Rational};

/// An almost Nambu–Poisson structure: a multi-vector field `pi` of degree
/// `n >= 1` inducing the `n`-bracket `{f_1,...,f_n} = <df_1^...^df_n, pi>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketStructure {
    pi: MultiVectorField,
}

/// Pointwise rank data: for a multi-vector the image basis of the sharp
/// map, for a form the kernel basis of the flat map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub point: Point,
    pub rank: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {} at {}", self.rank, self.point)
    }
}

impl BracketStructure {
    /// Wraps a multi-vector field of degree `n >= 1`.
    pub fn new(pi: MultiVectorField) -> Result<Self, NambuError> {
        if pi.degree() == 0 {
            return Err(NambuError::UnsupportedArity {
                n: 0,
                context: "bracket structure",
            });
        }
        Ok(BracketStructure { pi })
    }

    pub fn dim(&self) -> usize {
        self.pi.dim()
    }

    /// The bracket arity `n`.
    pub fn arity(&self) -> usize {
        self.pi.degree()
    }

    pub fn multivector(&self) -> &MultiVectorField {
        &self.pi
    }

    /// True when every coefficient of `pi` is a constant.
    pub fn is_constant(&self) -> bool {
        self.pi.terms().all(|(_, c)| c.as_constant().is_some())
    }

    /// The `n`-bracket `{f_1,...,f_n} = sum_I pi^I det(df_a/dx^{i_b})`.
    ///
    /// Coordinate entries take a fast path: the bracket of `n` coordinate
    /// functions is the signed component of `pi`.
    pub fn bracket(&self, entries: &[Polynomial]) -> Result<Polynomial, NambuError> {
        let n = self.arity();
        let dim = self.dim();
        if entries.len() != n {
            return Err(NambuError::ArityMismatch {
                context: "bracket",
                expected: n,
                found: entries.len(),
            });
        }
        for e in entries {
            NambuError::check_dim(dim, e.dim())?;
        }
        let coords: Option<Vec<usize>> = entries.iter().map(|e| e.as_coordinate()).collect();
        if let Some(indices) = coords {
            return self.pi.component(&indices);
        }
        let grads: Vec<Vec<Polynomial>> = entries
            .iter()
            .map(|f| (1..=dim).map(|j| f.diff(j)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let mut acc = Polynomial::zero(dim);
        for (i_set, coeff) in self.pi.terms() {
            let det = gradient_det(&grads, &(0..n).collect::<Vec<_>>(), i_set);
            if det.is_zero() {
                continue;
            }
            acc = &acc + &(coeff * &det);
        }
        Ok(acc)
    }

    /// Sharp map: contraction of an `(n-1)`-form into the first slots of
    /// `pi`, reinterpreted as a vector field.
    pub fn sharp(&self, alpha: &DifferentialForm) -> Result<VectorField, NambuError> {
        if alpha.degree() + 1 != self.arity() {
            return Err(NambuError::DegreeMismatch {
                expected: self.arity() - 1,
                found: alpha.degree(),
            });
        }
        VectorField::from_multivector(&interior_form(alpha, &self.pi)?)
    }

    /// Hamiltonian vector field `X_f = sharp(df_1 ^ ... ^ df_{n-1})`, so
    /// that `X_f[g] = {f_1,...,f_{n-1}, g}` exactly.
    pub fn hamiltonian_vf(&self, fs: &[Polynomial]) -> Result<VectorField, NambuError> {
        let n = self.arity();
        if fs.len() + 1 != n {
            return Err(NambuError::ArityMismatch {
                context: "hamiltonian",
                expected: n - 1,
                found: fs.len(),
            });
        }
        let alpha = if fs.is_empty() {
            DifferentialForm::scalar(Polynomial::one(self.dim()))
        } else {
            wedge_of_differentials(fs)?
        };
        self.sharp(&alpha)
    }

    /// Rank of `pi` at a point: the dimension of the image of the sharp
    /// map, with an image basis (deterministic greedy row choice).
    pub fn rank_multivector_at(&self, p: &Point) -> Result<RankReport, NambuError> {
        NambuError::check_dim(self.dim(), p.dim())?;
        let d = self.dim();
        let k = self.arity() - 1;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for combo in (1..=d).combinations(k) {
            let alpha =
                DifferentialForm::basis_blade(d, combo.clone(), Polynomial::one(d))?;
            rows.push(self.sharp(&alpha)?.eval_at(p)?);
        }
        let matrix = RationalMatrix::from_rows(rows.clone())?;
        let picked = matrix.independent_rows();
        Ok(RankReport {
            point: p.clone(),
            rank: picked.len(),
            basis: picked.into_iter().map(|r| rows[r].clone()).collect(),
        })
    }

    /// Matrix of `J = sharp o flat` on the coordinate basis at a point,
    /// with exact invertibility.
    pub fn j_map_at(
        &self,
        omega: &DifferentialForm,
        p: &Point,
    ) -> Result<(RationalMatrix, bool), NambuError> {
        NambuError::check_dim(self.dim(), omega.dim())?;
        NambuError::check_dim(self.dim(), p.dim())?;
        if omega.degree() != self.arity() {
            return Err(NambuError::DegreeMismatch {
                expected: self.arity(),
                found: omega.degree(),
            });
        }
        let d = self.dim();
        let mut m = RationalMatrix::zeros(d, d);
        for j in 1..=d {
            let ej = VectorField::basis(d, j)?;
            let beta = flat(omega, &ej)?.eval_at(p)?;
            let col = self.sharp(&beta)?.eval_at(p)?;
            for (i, v) in col.into_iter().enumerate() {
                *m.get_mut(i, j - 1) = v;
            }
        }
        let invertible = !m.det().is_zero();
        Ok((m, invertible))
    }

    /// True iff `i_{df} pi = 0`, i.e. `f` is a Casimir function.
    pub fn is_casimir(&self, f: &Polynomial) -> Result<bool, NambuError> {
        NambuError::check_dim(self.dim(), f.dim())?;
        Ok(interior_form(&differential(f)?, &self.pi)?.is_zero())
    }
}

/// Determinant of the gradient submatrix `rows x cols` (cols are 1-based
/// coordinate indices), by Laplace expansion with zero pruning.
fn gradient_det(grads: &[Vec<Polynomial>], rows: &[usize], cols: &[usize]) -> Polynomial {
    let dim = grads[0][0].dim();
    if rows.is_empty() {
        return Polynomial::one(dim);
    }
    let r0 = rows[0];
    let rest_rows = &rows[1..];
    let mut acc = Polynomial::zero(dim);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &grads[r0][c - 1];
        if entry.is_zero() {
            continue;
        }
        let rest_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|(q, _)| *q != pos)
            .map(|(_, &v)| v)
            .collect();
        let minor = gradient_det(grads, rest_rows, &rest_cols);
        if minor.is_zero() {
            continue;
        }
        let term = entry * &minor;
        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Flat map `flat(X) = i_X omega` for an `n`-form `omega`, `n >= 1`.
pub fn flat(omega: &DifferentialForm, x: &VectorField) -> Result<DifferentialForm, NambuError> {
    interior_vector(x, omega)
}

/// Rank of a form at a point: `d` minus the kernel dimension of the flat
/// map, with a kernel basis.
pub fn rank_form_at(omega: &DifferentialForm, p: &Point) -> Result<RankReport, NambuError> {
    NambuError::check_dim(omega.dim(), p.dim())?;
    if omega.degree() == 0 {
        return Err(NambuError::DegreeMismatch { expected: 1, found: 0 });
    }
    let d = omega.dim();
    let k = omega.degree();
    let col_index: Vec<Vec<usize>> = (1..=d).combinations(k - 1).collect();
    let mut m = RationalMatrix::zeros(d, col_index.len());
    for j in 1..=d {
        let ej = VectorField::basis(d, j)?;
        let row_form = flat(omega, &ej)?.eval_at(p)?;
        for (c, combo) in col_index.iter().enumerate() {
            if let Some(coeff) = row_form.coefficient(combo) {
                *m.get_mut(j - 1, c) = coeff
                    .as_constant()
                    .expect("evaluated form has constant coefficients");
            }
        }
    }
    let kernel = m.transpose().kernel_basis();
    Ok(RankReport {
        point: p.clone(),
        rank: d - kernel.len(),
        basis: kernel,
    })
}

/// Componentwise partial derivative of a multi-vector field.
fn coefficient_diff(a: &MultiVectorField, j: usize) -> Result<MultiVectorField, NambuError> {
    let mut terms = Vec::new();
    for (i, c) in a.terms() {
        terms.push((i.to_vec(), c.diff(j)?));
    }
    MultiVectorField::from_terms(a.dim(), a.degree(), terms)
}

/// Contraction `i_{dx_j}` of a multi-vector field (zero on degree 0).
fn theta_diff(a: &MultiVectorField, j: usize) -> Result<Option<MultiVectorField>, NambuError> {
    if a.degree() == 0 {
        return Ok(None);
    }
    let dxj = DifferentialForm::basis_covector(a.dim(), j)?;
    Ok(Some(interior_form(&dxj, a)?))
}

/// Schouten–Nijenhuis antibracket of multi-vector fields, normalized by
/// `(d_i, x^j) = delta_i^j`.
///
/// For `A` of degree `p` and `B` of degree `q` this computes
/// `sum_j [ (-1)^{p-1} (i_{dx_j}A) ^ (dB/dx^j)  -  (dA/dx^j) ^ (i_{dx_j}B) ]`,
/// which satisfies graded symmetry `(A,B) = -(-1)^{(p-1)(q-1)}(B,A)`,
/// graded Leibniz in each argument, and `(X,B) = L_X B` for vector fields.
pub fn schouten_nijenhuis(
    a: &MultiVectorField,
    b: &MultiVectorField,
) -> Result<MultiVectorField, NambuError> {
    NambuError::check_dim(a.dim(), b.dim())?;
    let dim = a.dim();
    let p = a.degree();
    let q = b.degree();
    let out_degree = (p + q).saturating_sub(1);
    let mut acc = MultiVectorField::zero(dim, out_degree);
    for j in 1..=dim {
        if let Some(ta) = theta_diff(a, j)? {
            let db = coefficient_diff(b, j)?;
            if !db.is_zero() {
                let mut term = ta.wedge(&db)?;
                if p % 2 == 0 {
                    term = term.neg();
                }
                acc = acc.add(&term)?;
            }
        }
        if let Some(tb) = theta_diff(b, j)? {
            let da = coefficient_diff(a, j)?;
            if !da.is_zero() {
                acc = acc.sub(&da.wedge(&tb)?)?;
            }
        }
    }
    Ok(acc)
}

/// Lie derivative of a multi-vector field along a vector field, realized
/// as the Schouten–Nijenhuis bracket `(X, pi)`.
pub fn lie_derivative_multivector(
    x: &VectorField,
    pi: &MultiVectorField,
) -> Result<MultiVectorField, NambuError> {
    schouten_nijenhuis(&x.as_multivector(), pi)
}

/// Lie derivative of a form via the Cartan formula
/// `L_X omega = i_X d omega + d i_X omega`.
pub fn lie_derivative_form(
    x: &VectorField,
    omega: &DifferentialForm,
) -> Result<DifferentialForm, NambuError> {
    NambuError::check_dim(x.dim(), omega.dim())?;
    let first = interior_vector(x, &exterior_derivative(omega)?)?;
    if omega.degree() == 0 {
        // i_X omega is undefined on functions; L_X f = X[f] = i_X df.
        return Ok(first);
    }
    first.add(&exterior_derivative(&interior_vector(x, omega)?)?)
}

/// Checks the conformal condition `L_X omega = lambda * omega` exactly.
/// On failure the witness residual is the lexicographically first nonzero
/// component of `L_X omega - lambda * omega`.
pub fn conformal_check(
    omega: &DifferentialForm,
    x: &VectorField,
    lambda: &Polynomial,
) -> Result<Verdict, NambuError> {
    NambuError::check_dim(omega.dim(), x.dim())?;
    NambuError::check_dim(omega.dim(), lambda.dim())?;
    let residual = lie_derivative_form(x, omega)?.sub(&omega.scale_poly(lambda))?;
    if residual.is_zero() {
        Ok(Verdict::pass(1))
    } else {
        let first = residual
            .terms()
            .next()
            .map(|(_, c)| c.clone())
            .expect("nonzero form has a term");
        Ok(Verdict::fail(vec![lambda.clone()], first, 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn x(dim: usize, i: usize) -> Polynomial {
        Polynomial::var(dim, i).unwrap()
    }

    fn blade(dim: usize, indices: &[usize]) -> MultiVectorField {
        MultiVectorField::basis_blade(dim, indices.to_vec(), Polynomial::one(dim)).unwrap()
    }

    fn darboux_r2() -> BracketStructure {
        let pi = blade(6, &[1, 2, 3]).add(&blade(6, &[4, 5, 6])).unwrap();
        BracketStructure::new(pi).unwrap()
    }

    fn dx(dim: usize, i: usize) -> DifferentialForm {
        DifferentialForm::basis_covector(dim, i).unwrap()
    }

    #[test]
    fn bracket_of_coordinates_is_a_component_lookup() {
        let s = BracketStructure::new(blade(3, &[1, 2, 3])).unwrap();
        assert_eq!(
            s.bracket(&[x(3, 1), x(3, 2), x(3, 3)]).unwrap(),
            Polynomial::one(3)
        );
        assert_eq!(
            s.bracket(&[x(3, 1), x(3, 1), x(3, 2)]).unwrap(),
            Polynomial::zero(3)
        );
        assert_eq!(
            s.bracket(&[x(3, 2), x(3, 1), x(3, 3)]).unwrap(),
            Polynomial::constant(3, rat(-1, 1))
        );
        let s2 = darboux_r2();
        assert_eq!(
            s2.bracket(&[x(6, 4), x(6, 5), x(6, 6)]).unwrap(),
            Polynomial::one(6)
        );
    }

    #[test]
    fn bracket_of_general_entries_expands_gradients() {
        let s = darboux_r2();
        // {x1, x2, x3*x5} = d3(x3*x5) = x5 through the first block.
        let val = s.bracket(&[x(6, 1), x(6, 2), &x(6, 3) * &x(6, 5)]).unwrap();
        assert_eq!(val, x(6, 5));
        // Leibniz in the last slot on a sample.
        let g = x(6, 3);
        let h = x(6, 5);
        let lhs = s.bracket(&[x(6, 1), x(6, 2), &g * &h]).unwrap();
        let rhs = &(&g * &s.bracket(&[x(6, 1), x(6, 2), h.clone()]).unwrap())
            + &(&h * &s.bracket(&[x(6, 1), x(6, 2), g.clone()]).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_arity_is_enforced() {
        let s = darboux_r2();
        assert!(matches!(
            s.bracket(&[x(6, 1), x(6, 2)]),
            Err(NambuError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn sharp_follows_the_first_slot_convention() {
        let s = BracketStructure::new(blade(3, &[1, 2, 3])).unwrap();
        let a12 = dx(3, 1).wedge(&dx(3, 2)).unwrap();
        assert_eq!(s.sharp(&a12).unwrap(), VectorField::basis(3, 3).unwrap());
        let a13 = dx(3, 1).wedge(&dx(3, 3)).unwrap();
        assert_eq!(
            s.sharp(&a13).unwrap(),
            VectorField::basis(3, 2).unwrap().neg()
        );
        let s2 = darboux_r2();
        let a45 = dx(6, 4).wedge(&dx(6, 5)).unwrap();
        assert_eq!(s2.sharp(&a45).unwrap(), VectorField::basis(6, 6).unwrap());
    }

    #[test]
    fn hamiltonian_fields_reproduce_the_bracket() {
        let s = BracketStructure::new(blade(3, &[1, 2, 3])).unwrap();
        assert_eq!(
            s.hamiltonian_vf(&[x(3, 1), x(3, 2)]).unwrap(),
            VectorField::basis(3, 3).unwrap()
        );
        assert!(s.hamiltonian_vf(&[x(3, 1), x(3, 1)]).unwrap().is_zero());
        let scaled =
            BracketStructure::new(blade(3, &[1, 2, 3]).scale_poly(&x(3, 1))).unwrap();
        assert_eq!(
            scaled.hamiltonian_vf(&[x(3, 2), x(3, 3)]).unwrap(),
            VectorField::basis(3, 1).unwrap().scale_poly(&x(3, 1))
        );
        // X_f[g] = {f, g} on a polynomial sample.
        let s2 = darboux_r2();
        let f = vec![&x(6, 1) + &x(6, 4), &x(6, 2) * &x(6, 5)];
        let g = &x(6, 3) * &x(6, 6);
        let xf = s2.hamiltonian_vf(&f).unwrap();
        let mut entries = f.clone();
        entries.push(g.clone());
        assert_eq!(xf.apply(&g).unwrap(), s2.bracket(&entries).unwrap());
    }

    #[test]
    fn flat_examples() {
        let w = dx(3, 1).wedge(&dx(3, 2)).unwrap().wedge(&dx(3, 3)).unwrap();
        assert_eq!(
            flat(&w, &VectorField::basis(3, 1).unwrap()).unwrap(),
            dx(3, 2).wedge(&dx(3, 3)).unwrap()
        );
        let w4 = dx(4, 1).wedge(&dx(4, 2)).unwrap().wedge(&dx(4, 3)).unwrap();
        assert!(flat(&w4, &VectorField::basis(4, 4).unwrap()).unwrap().is_zero());
        let w2 = dx(2, 1).wedge(&dx(2, 2)).unwrap();
        let xf = VectorField::basis(2, 2).unwrap().scale_poly(&x(2, 1));
        assert_eq!(
            flat(&w2, &xf).unwrap(),
            dx(2, 1).scale_poly(&x(2, 1)).neg()
        );
    }

    #[test]
    fn lie_bracket_examples() {
        let d1 = VectorField::basis(4, 1).unwrap();
        let d2 = VectorField::basis(4, 2).unwrap();
        assert!(d1.lie_bracket(&d2).unwrap().is_zero());
        let x1d4 = VectorField::basis(4, 4).unwrap().scale_poly(&x(4, 1));
        assert_eq!(
            d1.lie_bracket(&x1d4).unwrap(),
            VectorField::basis(4, 4).unwrap()
        );
        let x1d1 = VectorField::basis(4, 1).unwrap().scale_poly(&x(4, 1));
        let x1d2 = VectorField::basis(4, 2).unwrap().scale_poly(&x(4, 1));
        assert_eq!(x1d1.lie_bracket(&x1d2).unwrap(), x1d2);
    }

    #[test]
    fn schouten_normalization_and_symmetry() {
        // (d_i, x^j) = delta on all pairs in d=3.
        for i in 1..=3 {
            for j in 1..=3 {
                let di = VectorField::basis(3, i).unwrap().as_multivector();
                let xj = MultiVectorField::scalar(x(3, j));
                let sn = schouten_nijenhuis(&di, &xj).unwrap();
                let expected = if i == j {
                    MultiVectorField::scalar(Polynomial::one(3))
                } else {
                    MultiVectorField::zero(3, 0)
                };
                assert_eq!(sn, expected);
            }
        }
    }

    #[test]
    fn schouten_of_a_bivector_with_a_field() {
        // (d1^d2, x1*d3) = -d2^d3: forced by graded symmetry with L_X.
        let a = blade(3, &[1, 2]);
        let b = VectorField::basis(3, 3)
            .unwrap()
            .scale_poly(&x(3, 1))
            .as_multivector();
        assert_eq!(schouten_nijenhuis(&a, &b).unwrap(), blade(3, &[2, 3]).neg());
    }

    #[test]
    fn schouten_agrees_with_lie_bracket_on_vectors() {
        let x1d1 = VectorField::basis(3, 1).unwrap().scale_poly(&x(3, 1));
        let x1d2 = VectorField::basis(3, 2).unwrap().scale_poly(&x(3, 1));
        let sn = schouten_nijenhuis(&x1d1.as_multivector(), &x1d2.as_multivector()).unwrap();
        assert_eq!(sn, x1d1.lie_bracket(&x1d2).unwrap().as_multivector());
    }

    #[test]
    fn involution_is_automatic_in_odd_degree() {
        let pi = blade(3, &[1, 2, 3]).scale_poly(&(&x(3, 1) + &x(3, 2).pow(2)));
        assert!(schouten_nijenhuis(&pi, &pi).unwrap().is_zero());
        let pi2 = darboux_r2().multivector().clone();
        assert!(schouten_nijenhuis(&pi2, &pi2).unwrap().is_zero());
    }

    #[test]
    fn involution_detects_a_non_jacobi_bivector() {
        // pi = x2*d1^d2 + d2^d3 has {{x1,x2},x3} + cyclic = 1.
        let pi = blade(3, &[1, 2])
            .scale_poly(&x(3, 2))
            .add(&blade(3, &[2, 3]))
            .unwrap();
        let sn = schouten_nijenhuis(&pi, &pi).unwrap();
        assert!(!sn.is_zero());
        // while x3*d1^d2 + d2^d3 is an honest Poisson structure
        let poisson = blade(3, &[1, 2])
            .scale_poly(&x(3, 3))
            .add(&blade(3, &[2, 3]))
            .unwrap();
        assert!(schouten_nijenhuis(&poisson, &poisson).unwrap().is_zero());
    }

    #[test]
    fn lie_derivative_examples() {
        let d1 = VectorField::basis(3, 1).unwrap();
        let pi = blade(3, &[1, 2, 3]);
        assert!(lie_derivative_multivector(&d1, &pi).unwrap().is_zero());
        let x1d1 = VectorField::basis(3, 1).unwrap().scale_poly(&x(3, 1));
        assert_eq!(lie_derivative_multivector(&x1d1, &pi).unwrap(), pi.neg());
        let xpi = pi.scale_poly(&x(3, 1));
        assert_eq!(lie_derivative_multivector(&d1, &xpi).unwrap(), pi);
    }

    #[test]
    fn rank_of_multivectors() {
        let s = BracketStructure::new(blade(3, &[1, 2, 3])).unwrap();
        assert_eq!(s.rank_multivector_at(&Point::origin(3)).unwrap().rank, 3);
        let s2 = darboux_r2();
        let p = Point::new(vec![rat(1, 2); 6]);
        assert_eq!(s2.rank_multivector_at(&p).unwrap().rank, 6);
        let s3 = BracketStructure::new(blade(3, &[1, 2, 3]).scale_poly(&x(3, 1))).unwrap();
        assert_eq!(s3.rank_multivector_at(&Point::origin(3)).unwrap().rank, 0);
    }

    #[test]
    fn rank_of_forms() {
        let w3 = dx(3, 1).wedge(&dx(3, 2)).unwrap().wedge(&dx(3, 3)).unwrap();
        let r = rank_form_at(&w3, &Point::origin(3)).unwrap();
        assert_eq!(r.rank, 3);
        assert!(r.basis.is_empty());
        let w4 = dx(4, 1).wedge(&dx(4, 2)).unwrap().wedge(&dx(4, 3)).unwrap();
        let r4 = rank_form_at(&w4, &Point::origin(4)).unwrap();
        assert_eq!(r4.rank, 3);
        assert_eq!(
            r4.basis,
            vec![vec![rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)]]
        );
        let zero = DifferentialForm::zero(3, 2);
        assert_eq!(rank_form_at(&zero, &Point::origin(3)).unwrap().rank, 0);
    }

    #[test]
    fn j_map_examples() {
        let s = BracketStructure::new(blade(3, &[1, 2, 3])).unwrap();
        let w = dx(3, 1).wedge(&dx(3, 2)).unwrap().wedge(&dx(3, 3)).unwrap();
        let (m, inv) = s.j_map_at(&w, &Point::origin(3)).unwrap();
        assert_eq!(m, RationalMatrix::identity(3));
        assert!(inv);
        let (z, zinv) = s
            .j_map_at(&DifferentialForm::zero(3, 3), &Point::origin(3))
            .unwrap();
        assert_eq!(z, RationalMatrix::zeros(3, 3));
        assert!(!zinv);
        let s4 = BracketStructure::new(blade(4, &[1, 2, 3])).unwrap();
        let w4 = dx(4, 1).wedge(&dx(4, 2)).unwrap().wedge(&dx(4, 3)).unwrap();
        let (_, inv4) = s4.j_map_at(&w4, &Point::origin(4)).unwrap();
        assert!(!inv4);
    }

    #[test]
    fn casimir_examples() {
        let s = BracketStructure::new(blade(4, &[1, 2, 3])).unwrap();
        assert!(s.is_casimir(&x(4, 4)).unwrap());
        assert!(!s.is_casimir(&x(4, 1)).unwrap());
        let s2 = darboux_r2();
        assert!(s2.is_casimir(&Polynomial::one(6)).unwrap());
    }

    #[test]
    fn conformal_examples() {
        let w = dx(3, 1).wedge(&dx(3, 2)).unwrap().wedge(&dx(3, 3)).unwrap();
        let x1d1 = VectorField::basis(3, 1).unwrap().scale_poly(&x(3, 1));
        let v = conformal_check(&w, &x1d1, &Polynomial::one(3)).unwrap();
        assert!(v.passed);

        let v2 = conformal_check(
            &w,
            &VectorField::basis(3, 1).unwrap(),
            &Polynomial::zero(3),
        )
        .unwrap();
        assert!(v2.passed);

        let w2 = dx(2, 1).wedge(&dx(2, 2)).unwrap();
        let x1d1b = VectorField::basis(2, 1).unwrap().scale_poly(&x(2, 1));
        let two = Polynomial::constant(2, rat(2, 1));
        let v3 = conformal_check(&w2, &x1d1b, &two).unwrap();
        assert!(!v3.passed);
        let resid = lie_derivative_form(&x1d1b, &w2)
            .unwrap()
            .sub(&w2.scale_poly(&two))
            .unwrap();
        assert_eq!(resid, w2.neg());
    }
}
