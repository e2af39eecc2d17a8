use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Rational, VariableOrder};
use crate::{Error, Result};

/// Exponents of a monomial `y_1^{a_1} ... y_d^{a_d}`.
///
/// The derived ordering is lexicographic in index order, which is the
/// canonical storage order of [`SparsePolynomial`] terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Multivariate polynomial with exact rational coefficients.
///
/// No stored coefficient is zero and every key has length `nvars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zero(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, var: usize) -> Self {
        Self::monomial(nvars, ExponentVector::unit(nvars, var), Rational::one())
    }

    pub fn monomial(nvars: usize, exps: ExponentVector, c: Rational) -> Self {
        assert_eq!(exps.len(), nvars, "exponent length must equal the variable count");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Builds a polynomial from arbitrary terms, merging repeats and pruning zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::dim(nvars, e.len()));
            }
            p.add_term(e, c);
        }
        Ok(p)
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

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                (e.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&ExponentVector::zero(self.nvars))
    }

    fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::dim(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        SparsePolynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePolynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// The minimal term under `order`, or `None` for the zero polynomial.
    pub fn lowest_term(&self, order: &VariableOrder) -> Result<Option<(&ExponentVector, &Rational)>> {
        if order.len() != self.nvars {
            return Err(Error::dim(self.nvars, order.len()));
        }
        Ok(self.terms.iter().min_by(|a, b| order.cmp_slices(a.0.as_slice(), b.0.as_slice())))
    }

    /// Multiplies by -1 if needed so that the lowest term under `order` has a
    /// positive coefficient.
    pub fn normalize_sign(&self, order: &VariableOrder) -> Result<Self> {
        Ok(match self.lowest_term(order)? {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        })
    }

    /// Substitutes `values[i]` for variable `i`; all values share one ring.
    pub fn substitute(&self, values: &[SparsePolynomial]) -> Result<SparsePolynomial> {
        if values.len() != self.nvars {
            return Err(Error::dim(self.nvars, values.len()));
        }
        let target = values.first().map(|v| v.nvars).unwrap_or(0);
        let mut out = SparsePolynomial::zero(target);
        for (e, c) in &self.terms {
            let mut t = SparsePolynomial::constant(target, c.clone());
            for (v, &k) in e.as_slice().iter().enumerate() {
                if k > 0 {
                    t = t.mul(&values[v].pow(k))?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Replaces variable `var` by `value`.
    pub fn substitute_var(&self, var: usize, value: &SparsePolynomial) -> Result<SparsePolynomial> {
        self.check(value)?;
        if var >= self.nvars {
            return Err(Error::Index { index: var + 1, max: self.nvars });
        }
        let mut out = SparsePolynomial::zero(self.nvars);
        let mut powers: Vec<SparsePolynomial> = vec![SparsePolynomial::one(self.nvars)];
        for (e, c) in &self.terms {
            let k = e.as_slice()[var] as usize;
            if k == 0 {
                out.add_term(e.clone(), c.clone());
                continue;
            }
            while powers.len() <= k {
                let next = powers.last().unwrap().mul(value)?;
                powers.push(next);
            }
            let mut rest = e.as_slice().to_vec();
            rest[var] = 0;
            for (e2, c2) in &powers[k].terms {
                out.add_term(ExponentVector::new(rest.clone()).add(e2), c * c2);
            }
        }
        Ok(out)
    }

    /// Re-reads this polynomial in the first `nvars` variables, provided no
    /// later variable occurs.
    pub fn restrict_vars(&self, nvars: usize) -> Option<SparsePolynomial> {
        if nvars > self.nvars {
            return None;
        }
        let mut out = SparsePolynomial::zero(nvars);
        for (e, c) in &self.terms {
            if e.as_slice()[nvars..].iter().any(|&k| k > 0) {
                return None;
            }
            out.terms.insert(ExponentVector::new(e.as_slice()[..nvars].to_vec()), c.clone());
        }
        Some(out)
    }

    /// Re-reads this polynomial in a larger ring, new variables appended.
    pub fn extend_vars(&self, nvars: usize) -> SparsePolynomial {
        assert!(nvars >= self.nvars);
        let mut out = SparsePolynomial::zero(nvars);
        for (e, c) in &self.terms {
            let mut v = e.as_slice().to_vec();
            v.resize(nvars, 0);
            out.terms.insert(ExponentVector::new(v), c.clone());
        }
        out
    }

    /// Indices of variables that occur with positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars];
        for e in self.terms.keys() {
            for (v, &k) in e.as_slice().iter().enumerate() {
                if k > 0 {
                    seen[v] = true;
                }
            }
        }
        (0..self.nvars).filter(|&v| seen[v]).collect()
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_polynomial(self))
    }
}
