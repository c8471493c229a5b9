//! Graded elements of the complexified exterior algebra on a fixed
//! (1,0)/(0,1) basis split.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::AlgebraError;
use crate::scalar::Scalar;
use crate::word::{Letter, Word};

/// A (possibly inhomogeneous) complex form on dimension n.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct Form {
    n: u8,
    terms: BTreeMap<Word, Scalar>,
}

impl Form {
    pub fn zero(n: u8) -> Self {
        Form {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// A degree-0 scalar is a valid form.
    pub fn scalar(n: u8, c: Scalar) -> Self {
        let mut f = Form::zero(n);
        f.add_term(Word::empty(), c);
        f
    }

    /// Monomial from signed letter shorthand: positive k is ω^k,
    /// negative k is ω^{k̄}. The letters need not be sorted.
    pub fn word(n: u8, letters: &[i8], coeff: Scalar) -> Self {
        let ls: Vec<Letter> = letters.iter().map(|&k| Letter::from_signed(k)).collect();
        for l in &ls {
            assert!(l.idx >= 1 && l.idx <= n, "letter index out of range");
        }
        let mut f = Form::zero(n);
        if let Some((w, sign)) = Word::sort(ls) {
            let c = if sign < 0 { -coeff } else { coeff };
            f.add_term(w, c);
        }
        f
    }

    pub fn basis(n: u8, letters: &[i8]) -> Self {
        Form::word(n, letters, Scalar::one())
    }

    pub fn dimension(&self) -> u8 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient by signed-letter shorthand, sign-adjusted for the
    /// canonical ordering of the queried word.
    pub fn coeff_of(&self, letters: &[i8]) -> Scalar {
        let ls: Vec<Letter> = letters.iter().map(|&k| Letter::from_signed(k)).collect();
        match Word::sort(ls) {
            None => Scalar::zero(),
            Some((w, sign)) => {
                let c = self.coeff(&w);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Form {
        let mut out = Form::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        let mut out = Form::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (w, k) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    /// Exterior product. Errors on dimension mismatch.
    pub fn checked_wedge(&self, other: &Form) -> Result<Form, AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = Form::zero(self.n);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                if let Some((w, sign)) = w1.merge(w2) {
                    let c = c1 * c2;
                    out.add_term(w, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Form) -> Form {
        self.checked_wedge(other).expect("dimension mismatch")
    }

    /// Complex conjugation: bar-flips letters (re-sorting with sign)
    /// and conjugates coefficients.
    pub fn conjugate(&self) -> Form {
        let mut out = Form::zero(self.n);
        for (w, c) in &self.terms {
            let (cw, sign) = w.conj();
            let cc = c.conj();
            out.add_term(cw, if sign < 0 { -cc } else { cc });
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// Canonical projection onto bidegree (p,q). The empty projection
    /// is the zero form.
    pub fn project_bidegree(&self, p: usize, q: usize) -> Form {
        let mut out = Form::zero(self.n);
        for (w, c) in &self.terms {
            if w.bidegree() == (p, q) {
                out.add_term(w.clone(), c.clone());
            }
        }
        out
    }

    pub fn project_degree(&self, k: usize) -> Form {
        let mut out = Form::zero(self.n);
        for (w, c) in &self.terms {
            if w.degree() == k {
                out.add_term(w.clone(), c.clone());
            }
        }
        out
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|w| w.degree()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// Substitute ω^j ↦ images[j-1] (and ω^{j̄} ↦ conjugate(images[j-1]))
    /// multiplicatively. All images must share one dimension.
    pub fn substitute(&self, images: &[Form]) -> Form {
        assert_eq!(images.len(), self.n as usize, "need one image per ω^j");
        let m = images.first().map(|f| f.n).unwrap_or(self.n);
        let mut out = Form::zero(m);
        for (w, c) in &self.terms {
            let mut acc = Form::scalar(m, c.clone());
            for l in &w.0 {
                let img = &images[(l.idx - 1) as usize];
                let factor = if l.barred { img.conjugate() } else { img.clone() };
                acc = acc.wedge(&factor);
            }
            out = out.add(&acc);
        }
        out
    }

    /// Map every coefficient onto the approx backend.
    pub fn to_approx(&self, eps: f64) -> Form {
        let mut out = Form::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.to_approx(eps));
        }
        out
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if w.degree() == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}
