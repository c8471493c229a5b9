//! Locally conformal Kähler metrics: solve dΩ = θ ∧ Ω with dθ = 0 for
//! a constant-coefficient 1-form θ.

use std::collections::BTreeSet;

use crate::complex::ComplexStructure;
use crate::error::AlgebraError;
use crate::form::Form;
use crate::hermitian::{del_omega, HermitianMetric};
use crate::linalg::solve;
use crate::scalar::Scalar;
use crate::structure::StructureEquations;
use crate::word::Word;

/// Outcome of the LCK equation. `kahler` marks the degenerate case
/// dΩ = 0, where θ = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct LckSolution {
    pub theta: Form,
    pub kahler: bool,
}

/// Solve ∂Ω = θ^{1,0} ∧ Ω for θ^{1,0} = Σ λ_j ω^j, set θ = θ^{1,0} +
/// conjugate, and keep the solution only if dΩ = θ ∧ Ω and dθ = 0.
pub fn solve_lck(
    j: &ComplexStructure,
    g: &HermitianMetric,
) -> Result<Option<LckSolution>, AlgebraError> {
    g.check_positive()?;
    let n = j.dimension();
    let omega = g.fundamental_form();
    let d_omega = j.eqs().d(&omega);
    if d_omega.is_zero() {
        return Ok(Some(LckSolution {
            theta: Form::zero(n),
            kahler: true,
        }));
    }
    let del = del_omega(j, g)?;
    // columns: coefficients of ω^j ∧ Ω; rows: every word occurring in
    // either side of the (2,1)-equation
    let cols: Vec<Form> = (1..=n as i8)
        .map(|jj| Form::word(n, &[jj], Scalar::one()).wedge(&omega))
        .collect();
    let mut words: BTreeSet<Word> = BTreeSet::new();
    for f in cols.iter().chain(std::iter::once(&del)) {
        for (w, _) in f.terms() {
            words.insert(w.clone());
        }
    }
    let words: Vec<Word> = words.into_iter().collect();
    let a: Vec<Vec<Scalar>> = words
        .iter()
        .map(|w| cols.iter().map(|c| c.coeff(w)).collect())
        .collect();
    let rhs: Vec<Scalar> = words.iter().map(|w| del.coeff(w)).collect();
    let Some(lambda) = solve(&a, &rhs) else {
        return Ok(None);
    };
    let mut theta10 = Form::zero(n);
    for (jj, l) in lambda.iter().enumerate() {
        theta10 = theta10.add(&Form::word(n, &[(jj + 1) as i8], l.clone()));
    }
    let theta = theta10.add(&theta10.conjugate());
    let closed = j.eqs().d(&theta).is_zero();
    let conformal = j.eqs().d(&omega) == theta.wedge(&omega);
    if closed && conformal {
        Ok(Some(LckSolution {
            theta,
            kahler: false,
        }))
    } else {
        Ok(None)
    }
}

pub fn is_lck(j: &ComplexStructure, g: &HermitianMetric) -> Result<bool, AlgebraError> {
    Ok(solve_lck(j, g)?.is_some())
}

/// The four dimensional two-step example dω¹ = 0, dω² = ω^{1 1̄}.
pub fn kodaira_thurston_structure() -> ComplexStructure {
    let mu = vec![Form::zero(2), Form::word(2, &[1, -1], Scalar::one())];
    ComplexStructure::new(StructureEquations::new(2, mu).expect("2-forms"))
        .expect("integrable")
}

/// On the four dimensional example every positive metric is SKT and
/// LCK at once; returns its Lee form.
pub fn kodaira_thurston_check(
    r: Scalar,
    s: Scalar,
    u: Scalar,
) -> Result<(bool, LckSolution), AlgebraError> {
    let j = kodaira_thurston_structure();
    let g = HermitianMetric::new2(r, s, u)?;
    let skt = crate::hermitian::is_skt(&j, &g)?;
    let sol = solve_lck(&j, &g)?.ok_or_else(|| {
        AlgebraError::InvariantViolation("expected an LCK solution in dimension four".into())
    })?;
    Ok((skt, sol))
}
