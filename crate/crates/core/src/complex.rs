//! Complex structures presented through their (1,0)-basis structure
//! equations, the reduced coefficient families on six dimensional
//! nilpotent algebras, and the coefficient-level algebra classifier.

use crate::catalog::CatalogTag;
use crate::error::AlgebraError;
use crate::form::Form;
use crate::lie::{AlgebraClass, LieAlgebra};
use crate::linalg;
use crate::scalar::Scalar;
use crate::structure::StructureEquations;

/// An integrable complex structure: structure equations whose μ^j have
/// no (0,2) component, on an algebra satisfying Jacobi.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexStructure {
    eqs: StructureEquations,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JClass {
    Nonnilpotent,
    Nilpotent { abelian: bool, parallelizable: bool },
}

impl ComplexStructure {
    pub fn new(eqs: StructureEquations) -> Result<Self, AlgebraError> {
        if let Some(j) = eqs.failing_jacobi_index() {
            return Err(AlgebraError::JacobiFailure { j });
        }
        if !eqs.is_integrable() {
            return Err(AlgebraError::InvariantViolation(
                "equations have a (0,2) component: almost complex structure not integrable"
                    .into(),
            ));
        }
        Ok(ComplexStructure { eqs })
    }

    pub fn eqs(&self) -> &StructureEquations {
        &self.eqs
    }

    /// Complex dimension n (real dimension 2n).
    pub fn dimension(&self) -> u8 {
        self.eqs.dimension()
    }

    pub fn algebra(&self) -> LieAlgebra {
        LieAlgebra::from_mu(&self.eqs).expect("construction checked Jacobi")
    }

    /// J on real coordinates: J X_{2j-1} = X_{2j}, J X_{2j} = -X_{2j-1}.
    pub fn j_apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let m = 2 * self.dimension() as usize;
        assert_eq!(x.len(), m);
        let mut out = vec![Scalar::zero(); m];
        for j in 0..(m / 2) {
            out[2 * j] = -x[2 * j + 1].clone();
            out[2 * j + 1] = x[2 * j].clone();
        }
        out
    }

    /// Dims of the J-adapted ascending series
    /// g^J_l = { X : [X, g] ⊆ g^J_{l-1} and [JX, g] ⊆ g^J_{l-1} },
    /// listed for l = 1, 2, … until stabilization.
    pub fn ascending_series_adapted(&self) -> Vec<usize> {
        let g = self.algebra();
        let m = g.dimension() as usize;
        // bracket-by-e_j as a matrix in the first argument
        let ad: Vec<Vec<Vec<Scalar>>> = (1..=m as u8)
            .map(|j| {
                (1..=m as u8)
                    .map(|k| {
                        (1..=m as u8)
                            .map(|i| g.structure_constant(k, i, j))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut prev: Vec<Vec<Scalar>> = Vec::new(); // g^J_0 = 0
        let mut dims = Vec::new();
        loop {
            // reduction against span(prev): v ↦ v - Σ v[p_i]·row_i,
            // zero exactly on the span
            let mut echelon = prev.clone();
            let pivots = linalg::rref(&mut echelon);
            let reduce = |v: Vec<Scalar>| -> Vec<Scalar> {
                let mut v = v;
                for (row, &p) in echelon.iter().zip(&pivots) {
                    let f = v[p].clone();
                    if f.is_zero() {
                        continue;
                    }
                    for (a, r) in v.iter_mut().zip(row) {
                        let sub = &f * r;
                        *a = a.clone() - sub;
                    }
                }
                v
            };
            // linear constraints on x: reduce([x, e_j]) = 0 and
            // reduce([Jx, e_j]) = 0 for every j
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for mj in &ad {
                for use_j in [false, true] {
                    let mut images: Vec<Vec<Scalar>> = Vec::new();
                    for i in 0..m {
                        let mut e = vec![Scalar::zero(); m];
                        e[i] = Scalar::one();
                        let arg = if use_j { self.j_apply(&e) } else { e };
                        images.push(reduce(linalg::mat_vec(mj, &arg)));
                    }
                    // transpose: one constraint row per output coordinate
                    for k in 0..m {
                        let row: Vec<Scalar> = images.iter().map(|im| im[k].clone()).collect();
                        if row.iter().any(|c| !c.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
            let next = linalg::kernel_basis(&rows, m);
            let dim = next.len();
            if dims.last() == Some(&dim) {
                break;
            }
            dims.push(dim);
            if dim == m {
                break;
            }
            prev = next;
        }
        dims
    }

    pub fn is_nilpotent_structure(&self) -> bool {
        self.ascending_series_adapted().last() == Some(&(2 * self.dimension() as usize))
    }

    /// Abelian: [JX, JY] = [X, Y] on the real algebra.
    pub fn is_abelian(&self) -> bool {
        let g = self.algebra();
        let m = g.dimension() as usize;
        let basis: Vec<Vec<Scalar>> = (0..m)
            .map(|i| {
                let mut v = vec![Scalar::zero(); m];
                v[i] = Scalar::one();
                v
            })
            .collect();
        for x in 0..m {
            for y in (x + 1)..m {
                let plain = g.bracket(&basis[x], &basis[y]);
                let turned = g.bracket(&self.j_apply(&basis[x]), &self.j_apply(&basis[y]));
                if plain != turned {
                    return false;
                }
            }
        }
        true
    }

    /// Complex parallelizable: d(g^{1,0}) ⊆ Λ^{2,0}.
    pub fn is_parallelizable(&self) -> bool {
        self.eqs
            .mus()
            .iter()
            .all(|mu| mu.project_bidegree(2, 0) == *mu)
    }

    pub fn classify(&self) -> JClass {
        if self.is_nilpotent_structure() {
            JClass::Nilpotent {
                abelian: self.is_abelian(),
                parallelizable: self.is_parallelizable(),
            }
        } else {
            JClass::Nonnilpotent
        }
    }

    /// Rewrite on the (1,0)-basis ω'^j = Σ_k M_{jk} ω^k.
    pub fn apply_basis_change(&self, m: &[Vec<Scalar>]) -> Result<ComplexStructure, AlgebraError> {
        ComplexStructure::new(self.eqs.change_basis(m)?)
    }
}

/// dω^1 = 0, dω^2 = E ω^{13} + ω^{1 3̄},
/// dω^3 = A ω^{1 1̄} + ib ω^{1 2̄} - ibĒ ω^{2 1̄}, with |E| = 1 and
/// b real nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct NonNilpotentCoeffs {
    pub a: Scalar,
    pub e: Scalar,
    pub b: Scalar,
}

impl NonNilpotentCoeffs {
    pub fn new(a: Scalar, e: Scalar, b: Scalar) -> Result<Self, AlgebraError> {
        if e.norm_sq() != Scalar::one() {
            return Err(AlgebraError::InvariantViolation("|E| must be 1".into()));
        }
        if !b.is_real() || b.is_zero() {
            return Err(AlgebraError::InvariantViolation(
                "b must be real and nonzero".into(),
            ));
        }
        Ok(NonNilpotentCoeffs { a, e, b })
    }

    pub fn build(&self) -> ComplexStructure {
        let ib = Scalar::i() * self.b.clone();
        let mu2 = Form::word(3, &[1, 3], self.e.clone()).add(&Form::basis(3, &[1, -3]));
        let mu3 = Form::word(3, &[1, -1], self.a.clone())
            .add(&Form::word(3, &[1, -2], ib.clone()))
            .add(&Form::word(3, &[2, -1], -(ib * self.e.conj())));
        let eqs = StructureEquations::new(3, vec![Form::zero(3), mu2, mu3])
            .expect("shape is fixed");
        ComplexStructure::new(eqs).expect("family satisfies Jacobi and integrability")
    }

    /// Ā = AE picks h₁₉⁻ (first Betti number 3); otherwise h₂₆⁺.
    pub fn classify_algebra(&self) -> AlgebraClass {
        if self.a.conj() == &self.a * &self.e {
            AlgebraClass::Tag(CatalogTag::H19Minus)
        } else {
            AlgebraClass::Tag(CatalogTag::H26Plus)
        }
    }
}

/// dω^1 = 0, dω^2 = ε ω^{1 1̄},
/// dω^3 = ρ ω^{12} + (1-ε)A ω^{1 1̄} + B ω^{1 2̄} + C ω^{2 1̄}
///        + (1-ε)D ω^{2 2̄}, with ε, ρ ∈ {0,1}.
#[derive(Clone, Debug, PartialEq)]
pub struct NilpotentCoeffs {
    pub epsilon: u8,
    pub rho: u8,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

impl NilpotentCoeffs {
    pub fn new(
        epsilon: u8,
        rho: u8,
        a: Scalar,
        b: Scalar,
        c: Scalar,
        d: Scalar,
    ) -> Result<Self, AlgebraError> {
        if epsilon > 1 || rho > 1 {
            return Err(AlgebraError::InvariantViolation(
                "ε and ρ must be 0 or 1".into(),
            ));
        }
        Ok(NilpotentCoeffs {
            epsilon,
            rho,
            a,
            b,
            c,
            d,
        })
    }

    pub fn build(&self) -> Result<ComplexStructure, AlgebraError> {
        let one_minus_eps = Scalar::from_int(1 - self.epsilon as i64);
        let mu2 = Form::word(3, &[1, -1], Scalar::from_int(self.epsilon as i64));
        let mu3 = Form::word(3, &[1, 2], Scalar::from_int(self.rho as i64))
            .add(&Form::word(3, &[1, -1], &one_minus_eps * &self.a))
            .add(&Form::word(3, &[1, -2], self.b.clone()))
            .add(&Form::word(3, &[2, -1], self.c.clone()))
            .add(&Form::word(3, &[2, -2], &one_minus_eps * &self.d));
        let eqs = StructureEquations::new(3, vec![Form::zero(3), mu2, mu3])?;
        ComplexStructure::new(eqs)
    }
}

/// dω^1 = dω^2 = 0, dω^3 = ρ ω^{12} + ω^{1 1̄} + B ω^{1 2̄} + D ω^{2 2̄}.
///
/// The underlying algebra depends only on (ρ, |B|², Re D, (Im D)²), so
/// those squares may be supplied exactly even when B or Im D is
/// irrational; such records classify but cannot build equations.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoStepCoeffs {
    pub rho: u8,
    b: Option<Scalar>,
    d: Option<Scalar>,
    b_sq: Scalar,
    x: Scalar,
    y_sq: Scalar,
}

impl TwoStepCoeffs {
    pub fn new(rho: u8, b: Scalar, d: Scalar) -> Result<Self, AlgebraError> {
        if rho > 1 {
            return Err(AlgebraError::InvariantViolation("ρ must be 0 or 1".into()));
        }
        let y = d.im_part();
        Ok(TwoStepCoeffs {
            rho,
            b_sq: b.norm_sq(),
            x: d.re_part(),
            y_sq: &y * &y,
            b: Some(b),
            d: Some(d),
        })
    }

    /// Classification-only record from the exact squares |B|², x = Re D
    /// and y² = (Im D)².
    pub fn from_squares(rho: u8, b_sq: Scalar, x: Scalar, y_sq: Scalar) -> Result<Self, AlgebraError> {
        if rho > 1 {
            return Err(AlgebraError::InvariantViolation("ρ must be 0 or 1".into()));
        }
        for (v, name) in [(&b_sq, "|B|²"), (&x, "x"), (&y_sq, "y²")] {
            if !v.is_real() {
                return Err(AlgebraError::InvariantViolation(format!(
                    "{name} must be real"
                )));
            }
        }
        if b_sq.real_sign() < 0 || y_sq.real_sign() < 0 {
            return Err(AlgebraError::InvariantViolation(
                "squares must be nonnegative".into(),
            ));
        }
        Ok(TwoStepCoeffs {
            rho,
            b: None,
            d: None,
            b_sq,
            x,
            y_sq,
        })
    }

    pub fn b(&self) -> Option<&Scalar> {
        self.b.as_ref()
    }

    pub fn d(&self) -> Option<&Scalar> {
        self.d.as_ref()
    }

    pub fn b_norm_sq(&self) -> &Scalar {
        &self.b_sq
    }

    pub fn x(&self) -> &Scalar {
        &self.x
    }

    pub fn y_sq(&self) -> &Scalar {
        &self.y_sq
    }

    pub fn build(&self) -> Result<ComplexStructure, AlgebraError> {
        let (b, d) = match (&self.b, &self.d) {
            (Some(b), Some(d)) => (b, d),
            _ => {
                return Err(AlgebraError::InvariantViolation(
                    "squares-only record has no structure equations".into(),
                ))
            }
        };
        let mu3 = Form::word(3, &[1, 2], Scalar::from_int(self.rho as i64))
            .add(&Form::basis(3, &[1, -1]))
            .add(&Form::word(3, &[1, -2], b.clone()))
            .add(&Form::word(3, &[2, -2], d.clone()));
        let eqs = StructureEquations::new(3, vec![Form::zero(3), Form::zero(3), mu3])?;
        ComplexStructure::new(eqs)
    }

    /// The underlying algebra, by the exact case split on
    /// (ρ, |B|², x, y²).
    pub fn classify_algebra(&self) -> AlgebraClass {
        let rho = Scalar::from_int(self.rho as i64);
        let y_zero = self.y_sq.is_zero();
        let x_zero = self.x.is_zero();
        let tag = if self.b_sq == rho {
            if !y_zero {
                CatalogTag::H2
            } else if !x_zero {
                if self.rho == 1 {
                    CatalogTag::H4
                } else {
                    CatalogTag::H3
                }
            } else if self.rho == 1 {
                CatalogTag::H6
            } else {
                CatalogTag::H8
            }
        } else {
            // compare 4y² with (ρ-|B|²)(4x+ρ-|B|²)
            let k = rho - self.b_sq.clone();
            let rhs = &k * &(Scalar::from_int(4) * self.x.clone() + k.clone());
            let diff = Scalar::from_int(4) * self.y_sq.clone() - rhs;
            match diff.real_sign() {
                1 => CatalogTag::H2,
                0 => CatalogTag::H4,
                _ => CatalogTag::H5,
            }
        };
        AlgebraClass::Tag(tag)
    }

    /// The SKT condition ρ + |B|² = 2 Re D, independent of the metric.
    pub fn skt_condition(&self) -> bool {
        Scalar::from_int(self.rho as i64) + self.b_sq.clone()
            == Scalar::from_int(2) * self.x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_step(rho: u8, b: Scalar, d: Scalar) -> TwoStepCoeffs {
        TwoStepCoeffs::new(rho, b, d).unwrap()
    }

    #[test]
    fn integrability_detects_bidegree() {
        let eqs = StructureEquations::new(
            3,
            vec![Form::zero(3), Form::zero(3), Form::basis(3, &[-1, -2])],
        )
        .unwrap();
        assert!(eqs.jacobi_holds());
        assert!(!eqs.is_integrable());
        assert!(ComplexStructure::new(eqs).is_err());
    }

    #[test]
    fn nonnilpotent_family_is_nonnilpotent() {
        let c = NonNilpotentCoeffs::new(Scalar::i(), Scalar::one(), Scalar::one()).unwrap();
        let j = c.build();
        assert_eq!(j.ascending_series_adapted(), vec![0]);
        assert_eq!(j.classify(), JClass::Nonnilpotent);
        assert_eq!(j.algebra().center_dim(), 1);
    }

    #[test]
    fn coefficient_invariants_are_enforced() {
        assert!(NonNilpotentCoeffs::new(Scalar::zero(), Scalar::from_int(2), Scalar::one())
            .is_err());
        assert!(NonNilpotentCoeffs::new(Scalar::zero(), Scalar::one(), Scalar::zero()).is_err());
        assert!(NonNilpotentCoeffs::new(Scalar::zero(), Scalar::one(), Scalar::i()).is_err());
    }

    #[test]
    fn nilpotent_family_ascending_series_fills_up() {
        // ε = ρ = 1, A = B = C = D = 0
        let c = NilpotentCoeffs::new(
            1,
            1,
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
        )
        .unwrap();
        let j = c.build().unwrap();
        let dims = j.ascending_series_adapted();
        assert_eq!(dims.last(), Some(&6));
        assert!(matches!(j.classify(), JClass::Nilpotent { .. }));
    }

    #[test]
    fn abelian_iff_no_holomorphic_part() {
        // ρ = 0 two-step instances are abelian
        let j = two_step(0, Scalar::i(), Scalar::from_int(2)).build().unwrap();
        assert!(j.is_abelian());
        let j = two_step(1, Scalar::zero(), Scalar::zero()).build().unwrap();
        assert!(!j.is_abelian());
        // abelian structures on the torus
        let j = ComplexStructure::new(StructureEquations::abelian(3)).unwrap();
        assert!(j.is_abelian());
        assert_eq!(j.ascending_series_adapted(), vec![6]);
    }

    #[test]
    fn iwasawa_structure_is_parallelizable_on_h5() {
        let eqs = StructureEquations::new(
            3,
            vec![Form::zero(3), Form::zero(3), Form::basis(3, &[1, 2])],
        )
        .unwrap();
        let j = ComplexStructure::new(eqs).unwrap();
        assert_eq!(
            j.classify(),
            JClass::Nilpotent {
                abelian: false,
                parallelizable: true
            }
        );
        assert!(j
            .algebra()
            .classify_by_fingerprint()
            .unwrap()
            .contains(CatalogTag::H5));
    }

    #[test]
    fn h2_witness_from_nilpotent_coeffs() {
        // dω^3 = ω^{12} + ω^{1 2̄} + ω^{2 1̄}
        let c = NilpotentCoeffs::new(
            0,
            1,
            Scalar::zero(),
            Scalar::one(),
            Scalar::one(),
            Scalar::zero(),
        )
        .unwrap();
        let j = c.build().unwrap();
        assert!(matches!(
            j.classify(),
            JClass::Nilpotent {
                abelian: false,
                ..
            }
        ));
        assert!(j
            .algebra()
            .classify_by_fingerprint()
            .unwrap()
            .contains(CatalogTag::H2));
    }

    #[test]
    fn two_step_classifier_case_split() {
        let z = Scalar::zero;
        // (i.2) ρ=y=0, x≠0 → h3
        assert!(two_step(0, z(), Scalar::from_int(2)).classify_algebra().contains(CatalogTag::H3));
        // (i.4) ρ=1, |B|=1, x=y=0 → h6
        assert!(two_step(1, Scalar::i(), z()).classify_algebra().contains(CatalogTag::H6));
        // (i.5) ρ=x=y=0 → h8
        assert!(two_step(0, z(), z()).classify_algebra().contains(CatalogTag::H8));
        // (i.1) |B|=ρ, y≠0 → h2
        assert!(two_step(0, z(), Scalar::i()).classify_algebra().contains(CatalogTag::H2));
        // (ii) split
        assert!(two_step(1, z(), Scalar::from_ratio(1, 2)).classify_algebra().contains(CatalogTag::H5));
        assert!(two_step(1, z(), Scalar::i()).classify_algebra().contains(CatalogTag::H2));
    }

    #[test]
    fn boundary_case_with_exact_squares() {
        // ρ=1, B=0, D = 1/2 + iy with y² = 3/4: 4y² = 3 = 1·(2+1) → h4
        let c = TwoStepCoeffs::from_squares(
            1,
            Scalar::zero(),
            Scalar::from_ratio(1, 2),
            Scalar::from_ratio(3, 4),
        )
        .unwrap();
        assert!(c.classify_algebra().contains(CatalogTag::H4));
        assert!(c.build().is_err());
    }

    #[test]
    fn coeff_classifier_agrees_with_fingerprint() {
        let samples = [
            (0u8, Scalar::zero(), Scalar::from_int(3)),
            (1, Scalar::from_ratio(1, 2), Scalar::gauss(1, 3, 2, 1)),
            (1, Scalar::i(), Scalar::zero()),
            (0, Scalar::gauss(1, 1, 1, 1), Scalar::gauss(-1, 2, 1, 5)),
            (1, Scalar::zero(), Scalar::gauss(0, 1, 1, 1)),
        ];
        for (rho, b, d) in samples {
            let c = two_step(rho, b, d);
            let by_coeffs = c.classify_algebra().unique().unwrap();
            let by_print = c
                .build()
                .unwrap()
                .algebra()
                .classify_by_fingerprint()
                .unwrap();
            assert!(by_print.contains(by_coeffs), "ρ={rho}");
        }
    }

    #[test]
    fn basis_change_preserves_everything() {
        let c = two_step(1, Scalar::i(), Scalar::gauss(1, 2, -1, 3));
        let j = c.build().unwrap();
        let m = vec![
            vec![Scalar::one(), Scalar::gauss(0, 1, 1, 2), Scalar::zero()],
            vec![Scalar::zero(), Scalar::from_int(2), Scalar::zero()],
            vec![Scalar::i(), Scalar::zero(), Scalar::one()],
        ];
        let j2 = j.apply_basis_change(&m).unwrap();
        assert_eq!(j.classify(), j2.classify());
        assert!(j
            .algebra()
            .profile()
            .matches(&j2.algebra().profile()));
    }

    #[test]
    fn epsilonzero_reduction_formula() {
        // ε=0, A≠0: ω^1=ω'^1-Cω'^2, ω^2=Aω'^2, ω^3=Aω'^3 lands on the
        // two-step shape with B'=(ĀB-AC̄)/A, D'=Ā(AD-BC)/A
        let (a, b, c, d) = (
            Scalar::gauss(2, 1, 1, 1),
            Scalar::gauss(1, 2, 0, 1),
            Scalar::gauss(0, 1, 1, 3),
            Scalar::gauss(-1, 1, 1, 2),
        );
        let rho = 1u8;
        let nil = NilpotentCoeffs::new(0, rho, a.clone(), b.clone(), c.clone(), d.clone())
            .unwrap()
            .build()
            .unwrap();
        // rows give ω'^j in terms of ω^k: invert the stated old-in-new map
        let m_old_in_new = vec![
            vec![Scalar::one(), -c.clone(), Scalar::zero()],
            vec![Scalar::zero(), a.clone(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), a.clone()],
        ];
        let m_new_in_old = crate::linalg::invert(&m_old_in_new).unwrap();
        let j2 = nil.apply_basis_change(&m_new_in_old).unwrap();
        let mu3 = j2.eqs().mu(3);
        let b_new = (&a.conj() * &b - &a * &c.conj()).div(&a);
        let d_new = (a.conj() * (&a * &d - &b * &c)).div(&a);
        assert_eq!(mu3.coeff_of(&[1, 2]), Scalar::from_int(rho as i64));
        assert_eq!(mu3.coeff_of(&[1, -1]), Scalar::one());
        assert_eq!(mu3.coeff_of(&[1, -2]), b_new);
        assert_eq!(mu3.coeff_of(&[2, -1]), Scalar::zero());
        assert_eq!(mu3.coeff_of(&[2, -2]), d_new);
    }
}
