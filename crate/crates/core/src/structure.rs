//! Structure equations: the n-tuple μ of 2-forms giving dω^j = μ^j,
//! and the induced anti-derivation on the whole exterior algebra.

use crate::error::AlgebraError;
use crate::form::Form;
use crate::scalar::Scalar;
use crate::word::{Letter, Word};

/// dω^j = μ^j for j = 1..n; dω^{j̄} = conjugate(μ^j) is implied.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureEquations {
    n: u8,
    mu: Vec<Form>,
}

impl StructureEquations {
    pub fn new(n: u8, mu: Vec<Form>) -> Result<Self, AlgebraError> {
        if mu.len() != n as usize {
            return Err(AlgebraError::DimensionMismatch {
                left: n,
                right: mu.len() as u8,
            });
        }
        for m in &mu {
            if m.dimension() != n {
                return Err(AlgebraError::DimensionMismatch {
                    left: n,
                    right: m.dimension(),
                });
            }
            if !m.is_zero() && m.degrees() != vec![2] {
                return Err(AlgebraError::InvariantViolation(
                    "every μ^j must be a 2-form".into(),
                ));
            }
        }
        Ok(StructureEquations { n, mu })
    }

    pub fn abelian(n: u8) -> Self {
        StructureEquations {
            n,
            mu: (0..n).map(|_| Form::zero(n)).collect(),
        }
    }

    pub fn dimension(&self) -> u8 {
        self.n
    }

    pub fn mu(&self, j: u8) -> &Form {
        &self.mu[(j - 1) as usize]
    }

    pub fn mus(&self) -> &[Form] {
        &self.mu
    }

    fn d_letter(&self, l: Letter) -> Form {
        let m = &self.mu[(l.idx - 1) as usize];
        if l.barred {
            m.conjugate()
        } else {
            m.clone()
        }
    }

    /// The differential induced by μ, extended as an anti-derivation:
    /// d(α∧β) = dα∧β + (−1)^{deg α} α∧dβ. Degree-0 scalars map to 0.
    pub fn d(&self, a: &Form) -> Form {
        assert_eq!(a.dimension(), self.n, "dimension mismatch");
        let mut out = Form::zero(self.n);
        for (w, c) in a.terms() {
            for (i, &l) in w.0.iter().enumerate() {
                // ω^{l_1..l_{i-1}} ∧ dω^{l_i} ∧ ω^{l_{i+1}..}
                let prefix = Word(w.0[..i].to_vec());
                let suffix = Word(w.0[i + 1..].to_vec());
                let sign = if i % 2 == 0 { 1 } else { -1 };
                let mut piece = Form::zero(self.n);
                piece.add_term(prefix, Scalar::one());
                piece = piece.wedge(&self.d_letter(l));
                let mut tail = Form::zero(self.n);
                tail.add_term(suffix, Scalar::one());
                piece = piece.wedge(&tail);
                let c2 = if sign < 0 { -c.clone() } else { c.clone() };
                out = out.add(&piece.scale(&c2));
            }
        }
        out
    }

    /// Jacobi identity for the induced bracket: d(μ^j) = 0 for all j.
    pub fn jacobi_holds(&self) -> bool {
        self.failing_jacobi_index().is_none()
    }

    /// The first j with d(μ^j) ≠ 0, if any.
    pub fn failing_jacobi_index(&self) -> Option<u8> {
        (1..=self.n).find(|&j| !self.d(self.mu(j)).is_zero())
    }

    /// Integrability of the underlying almost complex structure:
    /// every μ^j has vanishing (0,2) part.
    pub fn is_integrable(&self) -> bool {
        self.mu.iter().all(|m| m.project_bidegree(0, 2).is_zero())
    }

    /// Re-express the equations after ω'^j = Σ_k M_{jk} ω^k.
    pub fn change_basis(&self, m: &[Vec<Scalar>]) -> Result<StructureEquations, AlgebraError> {
        let n = self.n as usize;
        assert_eq!(m.len(), n, "matrix must be n×n");
        let inv = crate::linalg::invert(m).ok_or(AlgebraError::SingularMatrix)?;
        // old ω^k expressed in the new basis: ω^k = Σ_j inv[k][j] ω'^j
        let old_in_new: Vec<Form> = (0..n)
            .map(|k| {
                let mut f = Form::zero(self.n);
                for (j, c) in inv[k].iter().enumerate() {
                    f = f.add(&Form::word(self.n, &[(j + 1) as i8], c.clone()));
                }
                f
            })
            .collect();
        // dω'^j = Σ_k M_{jk} μ^k, then substitute old letters away
        let mu2: Vec<Form> = (0..n)
            .map(|j| {
                let mut f = Form::zero(self.n);
                for (k, c) in m[j].iter().enumerate() {
                    f = f.add(&self.mu[k].scale(c));
                }
                f.substitute(&old_in_new)
            })
            .collect();
        StructureEquations::new(self.n, mu2)
    }

    pub fn to_approx(&self, eps: f64) -> StructureEquations {
        StructureEquations {
            n: self.n,
            mu: self.mu.iter().map(|m| m.to_approx(eps)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // dω^3 = A ω^{1 1̄} + ib ω^{1 2̄} − ibĒ ω^{2 1̄}, dω^2 = E ω^{13} + ω^{1 3̄}
    fn nonnilpotent_eqs(a: Scalar, e: Scalar, b: Scalar) -> StructureEquations {
        let ib = Scalar::i() * b;
        let mu2 = Form::word(3, &[1, 3], e.clone()).add(&Form::basis(3, &[1, -3]));
        let mu3 = Form::word(3, &[1, -1], a)
            .add(&Form::word(3, &[1, -2], ib.clone()))
            .add(&Form::word(3, &[2, -1], -(ib * e.conj())));
        StructureEquations::new(3, vec![Form::zero(3), mu2, mu3]).unwrap()
    }

    #[test]
    fn abelian_tuple_satisfies_jacobi() {
        assert!(StructureEquations::abelian(3).jacobi_holds());
    }

    #[test]
    fn nonnilpotent_equations_satisfy_jacobi() {
        let eqs = nonnilpotent_eqs(Scalar::one(), Scalar::one(), Scalar::one());
        assert!(eqs.jacobi_holds());
        let eqs = nonnilpotent_eqs(Scalar::i(), -Scalar::one(), Scalar::from_int(2));
        assert!(eqs.jacobi_holds());
    }

    #[test]
    fn generic_tuple_fails_jacobi() {
        // dω^2 = ω^{1 3̄}, dω^3 = ω^{12}:
        // d(dω^2) = -ω^1 ∧ ω^{1̄2̄} ≠ 0 while d(dω^3) = -ω^1 ∧ dω^2 = 0
        let eqs = StructureEquations::new(
            3,
            vec![
                Form::zero(3),
                Form::basis(3, &[1, -3]),
                Form::basis(3, &[1, 2]),
            ],
        )
        .unwrap();
        assert!(!eqs.jacobi_holds());
        assert_eq!(eqs.failing_jacobi_index(), Some(2));
    }

    #[test]
    fn d_of_scalar_is_zero() {
        let eqs = nonnilpotent_eqs(Scalar::one(), Scalar::one(), Scalar::one());
        assert!(eqs.d(&Form::scalar(3, Scalar::gauss(1, 2, 3, 4))).is_zero());
    }

    #[test]
    fn d_squared_vanishes_when_jacobi_holds() {
        let eqs = nonnilpotent_eqs(Scalar::i(), Scalar::one(), Scalar::one());
        let a = Form::basis(3, &[1, -3])
            .add(&Form::word(3, &[2, -2], Scalar::gauss(1, 3, 1, 1)))
            .add(&Form::basis(3, &[3]));
        assert!(eqs.d(&eqs.d(&a)).is_zero());
    }

    #[test]
    fn d_commutes_with_conjugation() {
        let eqs = nonnilpotent_eqs(Scalar::i(), Scalar::one(), Scalar::from_int(2));
        let a = Form::word(3, &[1, -2], Scalar::gauss(2, 1, -1, 3)).add(&Form::basis(3, &[3, -3]));
        assert_eq!(eqs.d(&a.conjugate()), eqs.d(&a).conjugate());
    }
}
