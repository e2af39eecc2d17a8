use std::cmp::Ordering;

use crate::{Error, Result};

/// A ranking of variables; `ranking[0]` is the most significant variable
/// (`y_1` in `y_1 > y_2 > ... > y_d`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableOrder {
    ranking: Vec<usize>,
}

impl VariableOrder {
    pub fn identity(nvars: usize) -> Self {
        VariableOrder { ranking: (0..nvars).collect() }
    }

    pub fn new(ranking: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; ranking.len()];
        for &r in &ranking {
            if r >= ranking.len() || seen[r] {
                return Err(Error::Validation(format!("ranking {ranking:?} is not a permutation")));
            }
            seen[r] = true;
        }
        Ok(VariableOrder { ranking })
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub(crate) fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &v in &self.ranking {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }
}

/// Lexicographic comparison: the first variable in ranking order where the
/// exponents differ decides, and the larger exponent is the larger monomial.
pub fn compare_lex(a: &super::ExponentVector, b: &super::ExponentVector, order: &VariableOrder) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::dim(a.len(), b.len()));
    }
    if a.len() != order.len() {
        return Err(Error::dim(order.len(), a.len()));
    }
    Ok(order.cmp_slices(a.as_slice(), b.as_slice()))
}
