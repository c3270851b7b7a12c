use std::collections::BTreeMap;
use std::fmt;

use super::field::{Field, Scalar};
use super::ideal::MonomialIdeal;
use super::monomial::Monomial;
use super::AlgebraError;

/// Sparse multivariate polynomial over an exact field, in a fixed number of
/// variables. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: Field, nvars: usize) -> Self {
        Polynomial { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: Field, nvars: usize, c: Scalar) -> Self {
        Self::monomial(field, nvars, Monomial::one(), c)
    }

    pub fn one(field: Field, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    pub fn var(field: Field, nvars: usize, index: usize) -> Self {
        Self::monomial(field, nvars, Monomial::var(index), field.one())
    }

    pub fn monomial(field: Field, nvars: usize, m: Monomial, c: Scalar) -> Self {
        assert!(m.min_nvars() <= nvars, "monomial uses a variable outside the ring");
        assert_eq!(c.field(), field);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { field, nvars, terms }
    }

    /// Collects like terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(field: Field, nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Linear form `sum coeffs[j] * x_j`.
    pub fn linear(field: Field, coeffs: &[Scalar]) -> Self {
        Self::from_terms(field, coeffs.len(), coeffs.iter().enumerate().map(|(j, c)| (Monomial::var(j), c.clone())))
    }

    fn add_term(&mut self, m: Monomial, c: &Scalar) {
        assert!(m.min_nvars() <= self.nvars, "monomial uses a variable outside the ring");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    /// Coefficients of `x_0, ..., x_{n-1}` in the degree-one component.
    pub fn linear_part(&self) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.nvars];
        for (m, c) in &self.terms {
            if let [(v, 1)] = m.exponents() {
                out[*v] = c.clone();
            }
        }
        out
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        assert_eq!(self.nvars, other.nvars, "polynomials in different numbers of variables");
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.nvars);
        }
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.field, self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Deletes every term whose monomial lies in `ideal`, giving the canonical
    /// representative of `self + ideal`.
    pub fn normal_form(&self, ideal: &MonomialIdeal) -> Result<Polynomial, AlgebraError> {
        if ideal.nvars() != self.nvars {
            return Err(AlgebraError::VariableCountMismatch { expected: ideal.nvars(), found: self.nvars });
        }
        Ok(self.reduce(ideal))
    }

    fn reduce(&self, ideal: &MonomialIdeal) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| !ideal.contains(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Evaluates `self` at `images` (one per variable of `self`, all in the
    /// target ring of `target_ideal`) and reduces modulo `target_ideal`.
    pub fn substitute(&self, images: &[Polynomial], target_ideal: &MonomialIdeal) -> Result<Polynomial, AlgebraError> {
        if images.len() != self.nvars {
            return Err(AlgebraError::ArityMismatch { expected: self.nvars, found: images.len() });
        }
        let target_n = target_ideal.nvars();
        for img in images {
            if img.nvars != target_n {
                return Err(AlgebraError::VariableCountMismatch { expected: target_n, found: img.nvars });
            }
            if img.field != self.field {
                return Err(AlgebraError::FieldMismatch);
            }
        }
        let mut out = Polynomial::zero(self.field, target_n);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(self.field, target_n, c.clone());
            for &(v, e) in m.exponents() {
                for _ in 0..e {
                    acc = (&acc * &images[v]).reduce(target_ideal);
                    if acc.is_zero() {
                        break;
                    }
                }
            }
            out = &out + &acc;
        }
        Ok(out.reduce(target_ideal))
    }

    /// Renames variables into a ring with `nvars` variables. Terms touching a
    /// variable mapped to `None` are dropped (that variable is set to zero).
    pub fn reindex(&self, map: &[Option<usize>], nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            nvars,
            self.terms.iter().filter_map(|(m, c)| m.reindex(map).map(|m| (m, c.clone()))),
        )
    }

    /// Pretty-prints using `names` for the variables, in the parser's grammar.
    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = Polynomial::zero(self.field, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut first = true;
            if !mag.is_one() || m.is_one() {
                write!(f, "{mag}")?;
                first = false;
            }
            for &(v, e) in m.exponents() {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                let name = self.names.get(v).map(String::as_str).unwrap_or("?");
                if e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}
