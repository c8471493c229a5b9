//! Levi-Civita connection of a left-invariant metric, via the Koszul
//! formula on the fixed real basis.

use crate::complex::ComplexStructure;
use crate::error::AlgebraError;
use crate::hermitian::HermitianMetric;
use crate::hodge::Hodge;
use crate::lie::LieAlgebra;
use crate::linalg::{mat_vec, Matrix};
use crate::realform::RealForm;
use crate::scalar::Scalar;

/// ∇ with ∇_{X_i} X_j = Σ_k Γ^k_{ij} X_k.
pub struct LeviCivita {
    m: u8,
    lie: LieAlgebra,
    metric: Matrix,
    gamma: Vec<Vec<Vec<Scalar>>>,
}

impl LeviCivita {
    pub fn new(j: &ComplexStructure, g: &HermitianMetric) -> Result<Self, AlgebraError> {
        let hodge = Hodge::new(j, g)?;
        let metric = hodge.metric().clone();
        let ginv = hodge.metric_inverse().clone();
        let lie = j.algebra();
        let m = 2 * j.dimension();
        let pair = |x: &[Scalar], k: u8| -> Scalar {
            let mut acc = Scalar::zero();
            for (l, c) in x.iter().enumerate() {
                acc = acc + c * &metric[l][(k - 1) as usize];
            }
            acc
        };
        let half = Scalar::from_ratio(1, 2);
        let mut gamma = vec![vec![Vec::new(); m as usize]; m as usize];
        for i in 1..=m {
            for jj in 1..=m {
                // 2 g(∇_i X_j, X_k) =
                //   g([X_i,X_j],X_k) - g([X_j,X_k],X_i) + g([X_k,X_i],X_j)
                let rhs: Vec<Scalar> = (1..=m)
                    .map(|k| {
                        let t1 = pair(&lie.bracket_basis(i, jj), k);
                        let t2 = pair(&lie.bracket_basis(jj, k), i);
                        let t3 = pair(&lie.bracket_basis(k, i), jj);
                        (t1 - t2 + t3) * half.clone()
                    })
                    .collect();
                gamma[(i - 1) as usize][(jj - 1) as usize] = mat_vec(&ginv, &rhs);
            }
        }
        Ok(LeviCivita {
            m,
            lie,
            metric,
            gamma,
        })
    }

    /// Coordinates of ∇_{X_i} X_j, 1-based indices.
    pub fn nabla(&self, i: u8, j: u8) -> &[Scalar] {
        &self.gamma[(i - 1) as usize][(j - 1) as usize]
    }

    pub fn is_torsion_free(&self) -> bool {
        for i in 1..=self.m {
            for j in 1..=self.m {
                let br = self.lie.bracket_basis(i, j);
                for k in 0..self.m as usize {
                    let lhs = self.nabla(i, j)[k].clone() - self.nabla(j, i)[k].clone();
                    if !(lhs - br[k].clone()).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_metric_compatible(&self) -> bool {
        let g = |x: &[Scalar], k: usize| -> Scalar {
            let mut acc = Scalar::zero();
            for (l, c) in x.iter().enumerate() {
                acc = acc + c * &self.metric[l][k];
            }
            acc
        };
        for i in 1..=self.m {
            for j in 1..=self.m {
                for k in 1..=self.m {
                    let a = g(self.nabla(i, j), (k - 1) as usize);
                    let b = g(self.nabla(i, k), (j - 1) as usize);
                    if !(a + b).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// A constant-coefficient 1-form θ is parallel iff θ(∇_i X_j) = 0
    /// for all i, j.
    pub fn is_parallel_one_form(&self, theta: &RealForm) -> bool {
        for i in 1..=self.m {
            for j in 1..=self.m {
                let mut acc = Scalar::zero();
                for (a, c) in self.nabla(i, j).iter().enumerate() {
                    acc = acc + c * &theta.coeff(&[(a + 1) as u8]);
                }
                if !acc.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::TwoStepCoeffs;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn koszul_connection_is_torsion_free_and_metric() {
        let j = TwoStepCoeffs::new(1, Scalar::i(), Scalar::gauss(1, 2, 1, 1))
            .unwrap()
            .build()
            .unwrap();
        let g = HermitianMetric::new3(s(3), s(2), s(2), Scalar::gauss(1, 1, 1, 2), s(0), s(1))
            .unwrap();
        let lc = LeviCivita::new(&j, &g).unwrap();
        assert!(lc.is_torsion_free());
        assert!(lc.is_metric_compatible());
    }

    #[test]
    fn lee_form_of_the_standard_example_is_parallel() {
        // dω³ = ω^{1 1̄} + ω^{2 2̄}, canonical metric: θ = 2e⁵
        let j = TwoStepCoeffs::new(0, s(0), s(1)).unwrap().build().unwrap();
        let g = HermitianMetric::canonical(3);
        let lc = LeviCivita::new(&j, &g).unwrap();
        let theta = Hodge::new(&j, &g).unwrap().lee_form();
        assert!(!theta.is_zero());
        assert!(lc.is_parallel_one_form(&theta));
    }

    #[test]
    fn nonparallel_lee_form() {
        // ρ = B = 1, D = 0, canonical metric
        let j = TwoStepCoeffs::new(1, s(1), s(0)).unwrap().build().unwrap();
        let g = HermitianMetric::canonical(3);
        let lc = LeviCivita::new(&j, &g).unwrap();
        let theta = Hodge::new(&j, &g).unwrap().lee_form();
        assert!(!theta.is_zero());
        assert!(!lc.is_parallel_one_form(&theta));
    }
}
