//! Exterior algebra on the real basis e^1..e^m underlying the complex
//! one: ω^j = e^{2j-1} + i e^{2j}. Coefficients stay in [`Scalar`]
//! (complex), so complexified and honest real forms share one type;
//! reality is a testable predicate.

use std::collections::BTreeMap;
use std::fmt;

use crate::form::Form;
use crate::scalar::Scalar;

/// Sorted strictly-increasing index sets over 1..=m.
pub type Indices = Vec<u8>;

#[derive(Clone, Debug, PartialEq)]
pub struct RealForm {
    m: u8,
    terms: BTreeMap<Indices, Scalar>,
}

fn sort_indices(mut idx: Vec<u8>) -> Option<(Indices, i8)> {
    let mut sign = 1i8;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((idx, sign))
}

impl RealForm {
    pub fn zero(m: u8) -> Self {
        RealForm {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(m: u8, c: Scalar) -> Self {
        let mut f = RealForm::zero(m);
        f.add_term(vec![], c);
        f
    }

    pub fn term(m: u8, idx: &[u8], coeff: Scalar) -> Self {
        for &i in idx {
            assert!(i >= 1 && i <= m, "index out of range");
        }
        let mut f = RealForm::zero(m);
        if let Some((w, sign)) = sort_indices(idx.to_vec()) {
            f.add_term(w, if sign < 0 { -coeff } else { coeff });
        }
        f
    }

    pub fn basis(m: u8, idx: &[u8]) -> Self {
        RealForm::term(m, idx, Scalar::one())
    }

    pub fn dimension(&self) -> u8 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Indices, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &[u8]) -> Scalar {
        match sort_indices(idx.to_vec()) {
            None => Scalar::zero(),
            Some((w, sign)) => {
                let c = self.terms.get(&w).cloned().unwrap_or_else(Scalar::zero);
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    pub fn add_term(&mut self, idx: Indices, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &RealForm) -> RealForm {
        assert_eq!(self.m, other.m, "dimension mismatch");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &RealForm) -> RealForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RealForm {
        let mut out = RealForm::zero(self.m);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> RealForm {
        let mut out = RealForm::zero(self.m);
        if c.is_zero() {
            return out;
        }
        for (w, k) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn wedge(&self, other: &RealForm) -> RealForm {
        assert_eq!(self.m, other.m, "dimension mismatch");
        let mut out = RealForm::zero(self.m);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut joined = w1.clone();
                joined.extend_from_slice(w2);
                if let Some((w, sign)) = sort_indices(joined) {
                    let c = c1 * c2;
                    out.add_term(w, if sign < 0 { -c } else { c });
                }
            }
        }
        out
    }

    /// Conjugate coefficients only — the real basis is fixed by
    /// conjugation, so a form is real iff this is the identity.
    pub fn conjugate(&self) -> RealForm {
        let mut out = RealForm::zero(self.m);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.conj());
        }
        out
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }

    pub fn re(&self) -> RealForm {
        let mut out = RealForm::zero(self.m);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.re_part());
        }
        out
    }

    pub fn im(&self) -> RealForm {
        let mut out = RealForm::zero(self.m);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.im_part());
        }
        out
    }

    pub fn project_degree(&self, k: usize) -> RealForm {
        let mut out = RealForm::zero(self.m);
        for (w, c) in &self.terms {
            if w.len() == k {
                out.add_term(w.clone(), c.clone());
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|w| w.len()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }
}

impl fmt::Display for RealForm {
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
            if w.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*e")?;
                for i in w {
                    write!(f, "{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Express a complex form on the underlying real basis via
/// ω^j = e^{2j-1} + i e^{2j}.
pub fn complex_to_real(f: &Form) -> RealForm {
    let n = f.dimension();
    let m = 2 * n;
    let mut out = RealForm::zero(m);
    for (w, c) in f.terms() {
        let mut acc = RealForm::scalar(m, c.clone());
        for l in &w.0 {
            let a = RealForm::basis(m, &[2 * l.idx - 1]);
            let ib = RealForm::term(
                m,
                &[2 * l.idx],
                if l.barred { -Scalar::i() } else { Scalar::i() },
            );
            acc = acc.wedge(&a.add(&ib));
        }
        out = out.add(&acc);
    }
    out
}

/// Inverse of [`complex_to_real`]: e^{2j-1} = (ω^j+ω^{j̄})/2,
/// e^{2j} = (ω^j-ω^{j̄})/2i.
pub fn real_to_complex(f: &RealForm) -> Form {
    let m = f.dimension();
    assert!(m % 2 == 0, "real dimension must be even");
    let n = m / 2;
    let half = Scalar::from_ratio(1, 2);
    let minus_half_i = Scalar::gauss(0, 1, -1, 2);
    let mut out = Form::zero(n);
    for (w, c) in f.terms() {
        let mut acc = Form::scalar(n, c.clone());
        for &i in w {
            let j = ((i + 1) / 2) as i8;
            let img = if i % 2 == 1 {
                // e^{2j-1}
                Form::word(n, &[j], half.clone()).add(&Form::word(n, &[-j], half.clone()))
            } else {
                // e^{2j} = -i/2 (ω^j - ω^{j̄})
                Form::word(n, &[j], minus_half_i.clone())
                    .add(&Form::word(n, &[-j], -minus_half_i.clone()))
            };
            acc = acc.wedge(&img);
        }
        out = out.add(&acc);
    }
    out
}
