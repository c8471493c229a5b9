//! Compatible Hermitian metrics on a fixed (1,0)-basis, their
//! fundamental forms, and the torsion-class predicates (Kähler, SKT,
//! balanced) computed symbolically.

use std::collections::BTreeMap;

use crate::complex::ComplexStructure;
use crate::error::AlgebraError;
use crate::form::Form;
use crate::lie::AlgebraClass;
use crate::scalar::Scalar;

/// Metric coefficients on the (1,0)-basis: Ω = i Σ_j d_j ω^{j j̄}
/// + Σ_{j<k} (u_{jk} ω^{j k̄} - ū_{jk} ω^{k j̄}). In dimension 3 the
/// off-diagonal names are u = u_{12}, v = u_{23}, z = u_{13}.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMetric {
    n: u8,
    diag: Vec<Scalar>,
    off: BTreeMap<(u8, u8), Scalar>,
}

impl HermitianMetric {
    pub fn new(
        diag: Vec<Scalar>,
        off: BTreeMap<(u8, u8), Scalar>,
    ) -> Result<Self, AlgebraError> {
        let n = diag.len() as u8;
        for d in &diag {
            if !d.is_real() {
                return Err(AlgebraError::InvariantViolation(
                    "diagonal coefficients must be real".into(),
                ));
            }
        }
        for &(j, k) in off.keys() {
            if !(1 <= j && j < k && k <= n) {
                return Err(AlgebraError::InvariantViolation(
                    "off-diagonal indices must satisfy 1 ≤ j < k ≤ n".into(),
                ));
            }
        }
        Ok(HermitianMetric { n, diag, off })
    }

    /// r = s = t = 1, u = v = z = 0.
    pub fn canonical(n: u8) -> Self {
        HermitianMetric {
            n,
            diag: vec![Scalar::one(); n as usize],
            off: BTreeMap::new(),
        }
    }

    pub fn new3(
        r: Scalar,
        s: Scalar,
        t: Scalar,
        u: Scalar,
        v: Scalar,
        z: Scalar,
    ) -> Result<Self, AlgebraError> {
        let mut off = BTreeMap::new();
        off.insert((1, 2), u);
        off.insert((2, 3), v);
        off.insert((1, 3), z);
        HermitianMetric::new(vec![r, s, t], off)
    }

    pub fn new2(r: Scalar, s: Scalar, u: Scalar) -> Result<Self, AlgebraError> {
        let mut off = BTreeMap::new();
        off.insert((1, 2), u);
        HermitianMetric::new(vec![r, s], off)
    }

    pub fn dimension(&self) -> u8 {
        self.n
    }

    pub fn diag(&self, j: u8) -> &Scalar {
        &self.diag[(j - 1) as usize]
    }

    pub fn off(&self, j: u8, k: u8) -> Scalar {
        assert!(j < k);
        self.off.get(&(j, k)).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Entry of the Hermitian coefficient matrix H with Ω = i Σ H_{jk}
    /// ω^{j k̄}: H_{jj} = d_j, H_{jk} = -i u_{jk} for j < k.
    pub fn h_entry(&self, j: u8, k: u8) -> Scalar {
        use std::cmp::Ordering::*;
        match j.cmp(&k) {
            Equal => self.diag(j).clone(),
            Less => -Scalar::i() * self.off(j, k),
            Greater => self.h_entry(k, j).conj(),
        }
    }

    /// Positive definiteness via Sylvester: all leading principal
    /// minors of H positive.
    pub fn is_positive_definite(&self) -> bool {
        for k in 1..=self.n {
            let sub: Vec<Vec<Scalar>> = (1..=k)
                .map(|j| (1..=k).map(|l| self.h_entry(j, l)).collect())
                .collect();
            let d = det(&sub);
            if !d.is_real() || d.real_sign() <= 0 {
                return false;
            }
        }
        true
    }

    pub fn check_positive(&self) -> Result<(), AlgebraError> {
        if self.is_positive_definite() {
            Ok(())
        } else {
            Err(AlgebraError::NotPositiveDefinite)
        }
    }

    /// The fundamental (1,1)-form Ω; always real.
    pub fn fundamental_form(&self) -> Form {
        let n = self.n;
        let mut omega = Form::zero(n);
        for j in 1..=n {
            omega = omega.add(&Form::word(
                n,
                &[j as i8, -(j as i8)],
                Scalar::i() * self.diag(j).clone(),
            ));
        }
        for (&(j, k), u) in &self.off {
            omega = omega.add(&Form::word(n, &[j as i8, -(k as i8)], u.clone()));
            omega = omega.add(&Form::word(n, &[k as i8, -(j as i8)], -u.conj()));
        }
        omega
    }
}

pub(crate) fn det(m: &[Vec<Scalar>]) -> Scalar {
    // Gaussian elimination with exact division
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut d = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = d * a[c][c].clone();
        let inv = a[c][c].inv();
        for i in (c + 1)..n {
            let f = &a[i][c] * &inv;
            if f.is_zero() {
                continue;
            }
            for j in c..n {
                let sub = &f * &a[c][j];
                a[i][j] = a[i][j].clone() - sub;
            }
        }
    }
    d
}

/// ∂Ω = π_{2,1}(dΩ).
pub fn del_omega(j: &ComplexStructure, g: &HermitianMetric) -> Result<Form, AlgebraError> {
    g.check_positive()?;
    let omega = g.fundamental_form();
    Ok(j.eqs().d(&omega).project_bidegree(2, 1))
}

/// ∂̄∂Ω = π_{2,2}(d(∂Ω)).
pub fn delbar_del_omega(
    j: &ComplexStructure,
    g: &HermitianMetric,
) -> Result<Form, AlgebraError> {
    let del = del_omega(j, g)?;
    Ok(j.eqs().d(&del).project_bidegree(2, 2))
}

pub fn is_kahler(j: &ComplexStructure, g: &HermitianMetric) -> Result<bool, AlgebraError> {
    g.check_positive()?;
    Ok(j.eqs().d(&g.fundamental_form()).is_zero())
}

/// ∂̄∂Ω = 0, without demanding dΩ ≠ 0.
pub fn is_pluriclosed(j: &ComplexStructure, g: &HermitianMetric) -> Result<bool, AlgebraError> {
    Ok(delbar_del_omega(j, g)?.is_zero())
}

/// SKT: ∂Ω nonzero and ∂̄-closed.
pub fn is_skt(j: &ComplexStructure, g: &HermitianMetric) -> Result<bool, AlgebraError> {
    let del = del_omega(j, g)?;
    Ok(!del.is_zero() && j.eqs().d(&del).project_bidegree(2, 2).is_zero())
}

/// Balanced: ∂Ω ∧ Ω = 0.
pub fn is_balanced(j: &ComplexStructure, g: &HermitianMetric) -> Result<bool, AlgebraError> {
    let del = del_omega(j, g)?;
    Ok(del.wedge(&g.fundamental_form()).is_zero())
}

/// The Bismut torsion 3-form JdΩ = i(∂Ω - ∂̄Ω).
pub fn bismut_torsion(j: &ComplexStructure, g: &HermitianMetric) -> Result<Form, AlgebraError> {
    let del = del_omega(j, g)?;
    Ok(del.sub(&del.conjugate()).scale(&Scalar::i()))
}

/// Parameter point of the two-step SKT family: B = p + iq and
/// D = x + iy with x = (ρ + p² + q²)/2 forced by the SKT condition.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionPoint {
    pub rho: u8,
    pub p: Scalar,
    pub q: Scalar,
    pub y: Scalar,
}

impl RegionPoint {
    pub fn new(rho: u8, p: Scalar, q: Scalar, y: Scalar) -> Result<Self, AlgebraError> {
        if rho > 1 {
            return Err(AlgebraError::InvariantViolation("ρ must be 0 or 1".into()));
        }
        for (c, name) in [(&p, "p"), (&q, "q"), (&y, "y")] {
            if !c.is_real() {
                return Err(AlgebraError::InvariantViolation(format!(
                    "{name} must be real"
                )));
            }
        }
        Ok(RegionPoint { rho, p, q, y })
    }

    /// x = (ρ + p² + q²)/2.
    pub fn x(&self) -> Scalar {
        (Scalar::from_int(self.rho as i64) + &self.p * &self.p + &self.q * &self.q)
            .div(&Scalar::from_int(2))
    }

    pub fn coeffs(&self) -> crate::complex::TwoStepCoeffs {
        let b = self.p.clone() + Scalar::i() * self.q.clone();
        let d = self.x() + Scalar::i() * self.y.clone();
        crate::complex::TwoStepCoeffs::new(self.rho, b, d).expect("ρ validated")
    }

    /// Underlying algebra along the SKT slice: for ρ = 1 the ovaloid
    /// 4y² - 4 + (1 + p² + q²)² = 0 separates h₅ (inside) from h₂
    /// (outside), with h₄ on the surface; for ρ = 0 the origin is h₈
    /// and every other point h₂.
    pub fn classify(&self) -> AlgebraClass {
        use crate::catalog::CatalogTag::*;
        let k = &self.p * &self.p + &self.q * &self.q;
        if self.rho == 0 {
            let origin = k.is_zero() && self.y.is_zero();
            return AlgebraClass::Tag(if origin { H8 } else { H2 });
        }
        let one_plus_k = Scalar::one() + k;
        let w = Scalar::from_int(4) * (&self.y * &self.y) - Scalar::from_int(4)
            + &one_plus_k * &one_plus_k;
        AlgebraClass::Tag(match w.real_sign() {
            -1 => H5,
            0 => H4,
            _ => H2,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogTag;
    use crate::complex::{NonNilpotentCoeffs, TwoStepCoeffs};

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn positivity_criteria() {
        assert!(HermitianMetric::canonical(3).is_positive_definite());
        // rs = |u|² on the boundary
        let g = HermitianMetric::new3(s(1), s(1), s(1), Scalar::i(), s(0), s(0)).unwrap();
        assert!(!g.is_positive_definite());
        let g = HermitianMetric::new3(s(2), s(1), s(1), Scalar::i(), s(0), s(0)).unwrap();
        assert!(g.is_positive_definite());
        let g = HermitianMetric::new2(s(1), s(2), Scalar::i()).unwrap();
        assert!(g.is_positive_definite());
        let g = HermitianMetric::new2(s(1), s(1), Scalar::i()).unwrap();
        assert!(!g.is_positive_definite());
    }

    #[test]
    fn fundamental_form_is_real_1_1() {
        let g = HermitianMetric::new3(
            s(2),
            s(3),
            s(1),
            Scalar::gauss(1, 2, 1, 3),
            Scalar::i(),
            Scalar::gauss(0, 1, -1, 4),
        )
        .unwrap();
        let omega = g.fundamental_form();
        assert!(omega.is_real());
        assert_eq!(omega, omega.project_bidegree(1, 1));
    }

    #[test]
    fn nonnilpotent_del_omega_matches_closed_form() {
        // ∂Ω for equations dω² = Eω^{13}+ω^{1 3̄},
        // dω³ = Aω^{1 1̄}+ibω^{1 2̄}-ibĒω^{2 1̄}:
        //   -(Āv+ibz)ω^{12 1̄} - ibEv ω^{12 2̄} - (iĀt-u+Eū)ω^{13 1̄}
        //   + (is+bt)E ω^{13 2̄} + Ev ω^{13 3̄} + (is-bt)ω^{23 1̄}
        let (a, e, b) = (Scalar::gauss(1, 2, 1, 1), Scalar::i(), s(2));
        let j = NonNilpotentCoeffs::new(a.clone(), e.clone(), b.clone())
            .unwrap()
            .build();
        let (r, s_, t) = (s(3), s(2), s(1));
        let (u, v, z) = (
            Scalar::gauss(1, 1, 1, 2),
            Scalar::gauss(0, 1, 1, 3),
            Scalar::gauss(1, 4, 0, 1),
        );
        let g = HermitianMetric::new3(r, s_.clone(), t.clone(), u.clone(), v.clone(), z.clone())
            .unwrap();
        let del = del_omega(&j, &g).unwrap();
        let ib = Scalar::i() * b.clone();
        let expected = Form::word(3, &[1, 2, -1], -(a.conj() * v.clone() + &ib * &z))
            .add(&Form::word(3, &[1, 2, -2], -(&ib * &e) * v.clone()))
            .add(&Form::word(
                3,
                &[1, 3, -1],
                -(Scalar::i() * a.conj() * t.clone() - u.clone() + &e * &u.conj()),
            ))
            .add(&Form::word(
                3,
                &[1, 3, -2],
                (Scalar::i() * s_.clone() + &b * &t) * e.clone(),
            ))
            .add(&Form::word(3, &[1, 3, -3], &e * &v))
            .add(&Form::word(
                3,
                &[2, 3, -1],
                Scalar::i() * s_.clone() - &b * &t,
            ));
        assert_eq!(del, expected);
    }

    #[test]
    fn nonnilpotent_delbar_del_omega() {
        // ∂̄∂Ω = 2i(b²t ω^{12 1̄ 2̄} + s ω^{13 1̄ 3̄}) for the family above
        let b = s(2);
        let j = NonNilpotentCoeffs::new(Scalar::gauss(1, 1, -2, 1), Scalar::i(), b.clone())
            .unwrap()
            .build();
        let (s_, t) = (s(5), s(3));
        let g = HermitianMetric::new3(
            s(7),
            s_.clone(),
            t.clone(),
            Scalar::gauss(1, 2, 1, 1),
            s(0),
            Scalar::i(),
        )
        .unwrap();
        let dd = delbar_del_omega(&j, &g).unwrap();
        let two_i = Scalar::gauss(0, 1, 2, 1);
        let expected = Form::word(3, &[1, 2, -1, -2], &two_i * &(&b * &b * t))
            .add(&Form::word(3, &[1, 3, -1, -3], &two_i * &s_));
        assert_eq!(dd, expected);
        assert!(!is_skt(&j, &g).unwrap());
    }

    #[test]
    fn skt_on_two_step_instances() {
        // ρ=1, B=0, D=1/2 is SKT for any positive metric (h5)
        let j = TwoStepCoeffs::new(1, s(0), Scalar::from_ratio(1, 2))
            .unwrap()
            .build()
            .unwrap();
        for g in [
            HermitianMetric::canonical(3),
            HermitianMetric::new3(s(2), s(1), s(3), Scalar::i(), s(0), Scalar::gauss(1, 2, 0, 1))
                .unwrap(),
        ] {
            assert!(is_skt(&j, &g).unwrap());
            assert!(!is_kahler(&j, &g).unwrap());
        }
        // h8 (ρ=B=D=0) carries SKT metrics
        let j = TwoStepCoeffs::new(0, s(0), s(0)).unwrap().build().unwrap();
        assert!(is_skt(&j, &HermitianMetric::canonical(3)).unwrap());
        // h6 (ρ=1, |B|=1, D=0): Eq(8) reads 2 = 0, never SKT
        let j = TwoStepCoeffs::new(1, Scalar::i(), s(0)).unwrap().build().unwrap();
        assert!(!is_skt(&j, &HermitianMetric::canonical(3)).unwrap());
    }

    #[test]
    fn skt_iff_coefficient_equation() {
        // over a small grid, is_skt ⇔ ρ + |B|² = 2 Re D
        for rho in [0u8, 1] {
            for bi in -1..=1i64 {
                for x2 in 0..=3i64 {
                    let b = Scalar::gauss(bi, 1, 1, 2);
                    let d = Scalar::exact(crate::rat(x2, 2), crate::rat(1, 3));
                    let c = TwoStepCoeffs::new(rho, b, d).unwrap();
                    let j = c.build().unwrap();
                    let g = HermitianMetric::new3(
                        s(2),
                        s(1),
                        s(1),
                        Scalar::gauss(1, 2, -1, 2),
                        s(0),
                        s(0),
                    )
                    .unwrap();
                    assert_eq!(
                        is_skt(&j, &g).unwrap(),
                        c.skt_condition(),
                        "rho={rho} bi={bi} x2={x2}"
                    );
                }
            }
        }
    }

    #[test]
    fn balanced_witnesses() {
        // canonical metric, ρ=1, B=0, D=-1 (h2)
        let j = TwoStepCoeffs::new(1, s(0), s(-1)).unwrap().build().unwrap();
        let g = HermitianMetric::canonical(3);
        assert!(is_balanced(&j, &g).unwrap());
        // h19⁻: E = Ā/A, u = -Ā/(2b), r = 1+|u|², s = t = 1, v = z = 0
        let a = Scalar::gauss(1, 1, 1, 1); // |A|² = 2, E = Ā/A has |E| = 1
        let e = a.conj().div(&a);
        let b = Scalar::one();
        let j = NonNilpotentCoeffs::new(a.clone(), e, b.clone()).unwrap().build();
        let u = -(a.conj().div(&(Scalar::from_int(2) * b)));
        let g = HermitianMetric::new3(
            Scalar::one() + u.norm_sq(),
            s(1),
            s(1),
            u,
            s(0),
            s(0),
        )
        .unwrap();
        assert!(g.is_positive_definite());
        assert!(is_balanced(&j, &g).unwrap());
        // h6: ρ = B = 1, D = 0, u = i, r = 1+|u|² = 2
        let j = TwoStepCoeffs::new(1, s(1), s(0)).unwrap().build().unwrap();
        let g = HermitianMetric::new3(s(2), s(1), s(1), Scalar::i(), s(0), s(0)).unwrap();
        assert!(g.is_positive_definite());
        assert!(is_balanced(&j, &g).unwrap());
    }

    #[test]
    fn bismut_torsion_closed_iff_skt() {
        let j = TwoStepCoeffs::new(1, s(0), Scalar::from_ratio(1, 2))
            .unwrap()
            .build()
            .unwrap();
        let g = HermitianMetric::canonical(3);
        let tor = bismut_torsion(&j, &g).unwrap();
        assert!(tor.is_real());
        assert!(!tor.is_zero());
        assert!(j.eqs().d(&tor).is_zero());
        // h6 torsion is not closed
        let j = TwoStepCoeffs::new(1, Scalar::i(), s(0)).unwrap().build().unwrap();
        let tor = bismut_torsion(&j, &g).unwrap();
        assert!(!j.eqs().d(&tor).is_zero());
    }

    #[test]
    fn region_points() {
        let pt = |rho, p: i64, q: i64, y: i64| {
            RegionPoint::new(rho, s(p), s(q), s(y)).unwrap().classify()
        };
        assert!(pt(1, 0, 0, 0).contains(CatalogTag::H5));
        assert!(pt(1, 1, 0, 0).contains(CatalogTag::H4));
        assert!(pt(1, 2, 0, 0).contains(CatalogTag::H2));
        assert!(pt(1, 0, 0, 1).contains(CatalogTag::H2));
        assert!(pt(0, 0, 0, 0).contains(CatalogTag::H8));
        assert!(pt(0, 0, 0, 1).contains(CatalogTag::H2));
        // agreement with the coefficient classifier on a grid
        for rho in [0u8, 1] {
            for p in -2..=2i64 {
                for y in -2..=2i64 {
                    let pt = RegionPoint::new(rho, s(p), s(0), s(y)).unwrap();
                    assert_eq!(pt.classify(), pt.coeffs().classify_algebra());
                    assert!(pt.coeffs().skt_condition());
                }
            }
        }
    }
}
