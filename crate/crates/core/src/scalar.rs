//! Coefficient field: complex numbers with an exact Gaussian-rational
//! backend and a tolerance-tagged floating backend.
//!
//! Exact arithmetic is closed (no rounding ever occurs). Mixed
//! exact/approx arithmetic promotes to approx, keeping the larger eps.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Default tolerance for the approximate backend.
pub const DEFAULT_EPS: f64 = 1e-9;

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact { re: Rational, im: Rational },
    Approx { re: f64, im: f64, eps: f64 },
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn i() -> Self {
        Scalar::Exact {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Exact {
            re: Rational::from(BigInt::from(n)),
            im: Rational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::Exact {
            re: rat(num, den),
            im: Rational::zero(),
        }
    }

    pub fn exact(re: Rational, im: Rational) -> Self {
        Scalar::Exact { re, im }
    }

    pub fn exact_re(re: Rational) -> Self {
        Scalar::Exact {
            re,
            im: Rational::zero(),
        }
    }

    /// Gaussian rational from integer pairs: (a/b) + (c/d) i.
    pub fn gauss(a: i64, b: i64, c: i64, d: i64) -> Self {
        Scalar::Exact {
            re: rat(a, b),
            im: rat(c, d),
        }
    }

    pub fn approx(re: f64, im: f64) -> Self {
        Scalar::Approx {
            re,
            im,
            eps: DEFAULT_EPS,
        }
    }

    pub fn approx_eps(re: f64, im: f64, eps: f64) -> Self {
        Scalar::Approx { re, im, eps }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact { .. })
    }

    pub fn eps(&self) -> f64 {
        match self {
            Scalar::Exact { .. } => 0.0,
            Scalar::Approx { eps, .. } => *eps,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact { re, im } => re.is_zero() && im.is_zero(),
            Scalar::Approx { re, im, eps } => re.abs() <= *eps && im.abs() <= *eps,
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Scalar::Exact { im, .. } => im.is_zero(),
            Scalar::Approx { im, eps, .. } => im.abs() <= *eps,
        }
    }

    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact {
                re: re.clone(),
                im: -im.clone(),
            },
            Scalar::Approx { re, im, eps } => Scalar::Approx {
                re: *re,
                im: -im,
                eps: *eps,
            },
        }
    }

    pub fn re_part(&self) -> Scalar {
        match self {
            Scalar::Exact { re, .. } => Scalar::exact_re(re.clone()),
            Scalar::Approx { re, eps, .. } => Scalar::approx_eps(*re, 0.0, *eps),
        }
    }

    pub fn im_part(&self) -> Scalar {
        match self {
            Scalar::Exact { im, .. } => Scalar::exact_re(im.clone()),
            Scalar::Approx { im, eps, .. } => Scalar::approx_eps(*im, 0.0, *eps),
        }
    }

    /// |z|^2, always a real scalar.
    pub fn norm_sq(&self) -> Scalar {
        self.clone() * self.conj()
    }

    pub fn to_complex_f64(&self) -> (f64, f64) {
        match self {
            Scalar::Exact { re, im } => (
                re.to_f64().unwrap_or(f64::NAN),
                im.to_f64().unwrap_or(f64::NAN),
            ),
            Scalar::Approx { re, im, .. } => (*re, *im),
        }
    }

    /// Magnitude proxy used for pivot selection.
    pub fn magnitude(&self) -> f64 {
        let (re, im) = self.to_complex_f64();
        re.abs() + im.abs()
    }

    /// Exact real value, if this scalar is exact and purely real.
    pub fn as_exact_real(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact { re, im } if im.is_zero() => Some(re),
            _ => None,
        }
    }

    /// Sign of the real part for a real scalar: -1, 0, +1 (0 within eps
    /// on the approx backend).
    pub fn real_sign(&self) -> i8 {
        match self {
            Scalar::Exact { re, .. } => {
                if re.is_zero() {
                    0
                } else if re.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Approx { re, eps, .. } => {
                if re.abs() <= *eps {
                    0
                } else if *re > 0.0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero scalar");
        match self {
            Scalar::Exact { re, im } => {
                let d = re * re + im * im;
                Scalar::Exact {
                    re: re / &d,
                    im: -(im / &d),
                }
            }
            Scalar::Approx { re, im, eps } => {
                let d = re * re + im * im;
                Scalar::Approx {
                    re: re / d,
                    im: -im / d,
                    eps: *eps,
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.clone() * other.inv()
    }

    /// Force onto the approx backend with at least the given eps.
    pub fn to_approx(&self, eps: f64) -> Scalar {
        let (re, im) = self.to_complex_f64();
        Scalar::Approx {
            re,
            im,
            eps: eps.max(self.eps()),
        }
    }
}

fn promote(a: &Scalar, b: &Scalar) -> Option<f64> {
    if a.is_exact() && b.is_exact() {
        None
    } else {
        Some(a.eps().max(b.eps()))
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, other: Scalar) -> Scalar {
        match promote(&self, &other) {
            None => match (self, other) {
                (Scalar::Exact { re: r1, im: i1 }, Scalar::Exact { re: r2, im: i2 }) => {
                    Scalar::Exact {
                        re: r1 + r2,
                        im: i1 + i2,
                    }
                }
                _ => unreachable!(),
            },
            Some(eps) => {
                let (r1, i1) = self.to_complex_f64();
                let (r2, i2) = other.to_complex_f64();
                Scalar::Approx {
                    re: r1 + r2,
                    im: i1 + i2,
                    eps,
                }
            }
        }
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, other: Scalar) -> Scalar {
        self + (-other)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact { re, im } => Scalar::Exact { re: -re, im: -im },
            Scalar::Approx { re, im, eps } => Scalar::Approx {
                re: -re,
                im: -im,
                eps,
            },
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, other: Scalar) -> Scalar {
        match promote(&self, &other) {
            None => match (self, other) {
                (Scalar::Exact { re: r1, im: i1 }, Scalar::Exact { re: r2, im: i2 }) => {
                    Scalar::Exact {
                        re: &r1 * &r2 - &i1 * &i2,
                        im: &r1 * &i2 + &i1 * &r2,
                    }
                }
                _ => unreachable!(),
            },
            Some(eps) => {
                let (r1, i1) = self.to_complex_f64();
                let (r2, i2) = other.to_complex_f64();
                Scalar::Approx {
                    re: r1 * r2 - i1 * i2,
                    im: r1 * i2 + i1 * r2,
                    eps,
                }
            }
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, other: &Scalar) -> Scalar {
        self.clone() + other.clone()
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, other: &Scalar) -> Scalar {
        self.clone() * other.clone()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        (self.clone() - other.clone()).is_zero()
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact { re, im } => {
                if im.is_zero() {
                    write!(f, "{}", fmt_rational(re))
                } else if re.is_zero() {
                    write!(f, "{}*i", fmt_rational(im))
                } else if im.is_negative() {
                    write!(f, "{}-{}*i", fmt_rational(re), fmt_rational(&-im.clone()))
                } else {
                    write!(f, "{}+{}*i", fmt_rational(re), fmt_rational(im))
                }
            }
            Scalar::Approx { re, im, .. } => {
                if im.abs() == 0.0 {
                    write!(f, "{re}")
                } else if *im < 0.0 {
                    write!(f, "{}-{}*i", re, -im)
                } else {
                    write!(f, "{re}+{im}*i")
                }
            }
        }
    }
}
