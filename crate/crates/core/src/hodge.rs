//! The Riemannian side of a Hermitian pair: induced real metric,
//! Hodge star, codifferential and Lee form, all exact.

use crate::complex::ComplexStructure;
use crate::error::AlgebraError;
use crate::form::Form;
use crate::hermitian::{det, HermitianMetric};
use crate::lie::LieAlgebra;
use crate::linalg::{invert, Matrix};
use crate::realform::{complex_to_real, real_to_complex, RealForm};
use crate::scalar::Scalar;

/// Hodge machinery for one (J, g) pair on a fixed real basis
/// X_1, ..., X_{2n}, oriented by e^1 ∧ ... ∧ e^{2n}.
pub struct Hodge {
    n: u8,
    m: u8,
    lie: LieAlgebra,
    metric: Matrix,
    ginv: Matrix,
    vol: Scalar,
    omega_r: RealForm,
}

impl Hodge {
    pub fn new(j: &ComplexStructure, g: &HermitianMetric) -> Result<Self, AlgebraError> {
        g.check_positive()?;
        if g.dimension() != j.dimension() {
            return Err(AlgebraError::DimensionMismatch {
                left: g.dimension(),
                right: j.dimension(),
            });
        }
        let n = j.dimension();
        let m = 2 * n;
        let omega_r = complex_to_real(&g.fundamental_form());
        // g(X_a, X_b) = Ω(X_a, JX_b)
        let metric: Matrix = (1..=m)
            .map(|a| {
                (1..=m)
                    .map(|b| {
                        let (jb, sign) = j_index(b);
                        let c = omega_r.coeff(&[a, jb]);
                        if sign < 0 {
                            -c
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        let ginv = invert(&metric).ok_or(AlgebraError::SingularMatrix)?;
        // vol = Ωⁿ/n!
        let mut top = omega_r.clone();
        let mut fact = 1i64;
        for k in 2..=n as i64 {
            top = top.wedge(&omega_r);
            fact *= k;
        }
        let all: Vec<u8> = (1..=m).collect();
        let vol = top.coeff(&all).div(&Scalar::from_int(fact));
        if !vol.is_real() || vol.real_sign() <= 0 {
            return Err(AlgebraError::InvariantViolation(
                "volume form is not positively oriented".into(),
            ));
        }
        Ok(Hodge {
            n,
            m,
            lie: j.algebra(),
            metric,
            ginv,
            vol,
            omega_r,
        })
    }

    pub fn metric(&self) -> &Matrix {
        &self.metric
    }

    pub fn metric_inverse(&self) -> &Matrix {
        &self.ginv
    }

    pub fn volume(&self) -> &Scalar {
        &self.vol
    }

    pub fn fundamental_form_real(&self) -> &RealForm {
        &self.omega_r
    }

    /// ⟨e^I, e^J⟩ = det(g^{i_a j_b}) for equal-length index sets.
    fn inner(&self, i: &[u8], j: &[u8]) -> Scalar {
        let sub: Vec<Vec<Scalar>> = i
            .iter()
            .map(|&a| {
                j.iter()
                    .map(|&b| self.ginv[(a - 1) as usize][(b - 1) as usize].clone())
                    .collect()
            })
            .collect();
        det(&sub)
    }

    /// Hodge star, degree by degree: β ∧ ∗α = ⟨β, α⟩ vol.
    pub fn star(&self, f: &RealForm) -> RealForm {
        let m = self.m;
        let mut out = RealForm::zero(m);
        for (w, c) in f.terms() {
            let k = w.len();
            for i in subsets(m, k) {
                let ip = self.inner(&i, w);
                if ip.is_zero() {
                    continue;
                }
                let comp: Vec<u8> = (1..=m).filter(|a| !i.contains(a)).collect();
                let coeff = &self.vol * &(split_sign(&i, &comp) * ip * c.clone());
                out.add_term(comp, coeff);
            }
        }
        out
    }

    /// δ = -∗d∗ (even-dimensional convention).
    pub fn codifferential(&self, f: &RealForm) -> RealForm {
        self.star(&self.lie.d(&self.star(f))).neg()
    }

    /// Lee form θ = 1/(1-n) JδΩ.
    pub fn lee_form(&self) -> RealForm {
        let delta = self.codifferential(&self.omega_r);
        apply_j_one_form(&delta).scale(&Scalar::from_ratio(-1, self.n as i64 - 1))
    }

    pub fn lee_form_complex(&self) -> Form {
        real_to_complex(&self.lee_form())
    }
}

/// JX_{2j-1} = X_{2j}, JX_{2j} = -X_{2j-1}, as (index, sign).
fn j_index(b: u8) -> (u8, i8) {
    if b % 2 == 1 {
        (b + 1, 1)
    } else {
        (b - 1, -1)
    }
}

/// (Jα)(X) = α(JX) on 1-forms: Je^{2j-1} = -e^{2j}, Je^{2j} = e^{2j-1}.
fn apply_j_one_form(f: &RealForm) -> RealForm {
    let m = f.dimension();
    let mut out = RealForm::zero(m);
    for (w, c) in f.terms() {
        assert_eq!(w.len(), 1);
        let a = w[0];
        if a % 2 == 1 {
            out.add_term(vec![a + 1], -c.clone());
        } else {
            out.add_term(vec![a - 1], c.clone());
        }
    }
    out
}

fn subsets(m: u8, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: u8, m: u8, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in start..=m {
            cur.push(a);
            rec(a + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(1, m, k, &mut cur, &mut out);
    out
}

/// Sign of the shuffle (i, comp) as a permutation of 1..m; both halves
/// are sorted, so only cross inversions count.
fn split_sign(i: &[u8], comp: &[u8]) -> Scalar {
    let inv: usize = i
        .iter()
        .map(|&a| comp.iter().filter(|&&b| b < a).count())
        .sum();
    if inv % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}
