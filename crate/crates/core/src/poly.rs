//! Exact sparse multivariate polynomials over the integers.
//!
//! Coefficients are i64 with checked arithmetic: any overflow is an error,
//! never a silent wraparound. Exponent vectors are dense `Vec<u8>` keyed in a
//! BTreeMap so iteration order (and therefore all printed output) is
//! deterministic.

use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("integer overflow during polynomial arithmetic")]
    Overflow,
    #[error("exponent vector has length {0}, polynomial has {1} variables")]
    ArityMismatch(usize, usize),
}

/// Exponent vector of a target monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u8>);

impl Monomial {
    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sparse polynomial: map from exponent vector to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, i64>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0u8; nvars], 1i64);
        SparsePoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &i64)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Result<i64, PolyError> {
        if m.0.len() != self.nvars {
            return Err(PolyError::ArityMismatch(m.0.len(), self.nvars));
        }
        Ok(self.terms.get(&m.0).copied().unwrap_or(0))
    }

    /// True iff every stored term has the same total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: usize) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().map(|&x| x as usize).sum::<usize>() == d)
    }

    /// Multiplies by the linear factor (x_u - x_v), keeping only terms whose
    /// exponents stay within `cap` (when given). Exponents never decrease, so
    /// dropping over-cap terms cannot affect the capped coefficient.
    pub fn mul_linear_diff(
        &self,
        u: usize,
        v: usize,
        cap: Option<&[u8]>,
    ) -> Result<SparsePoly, PolyError> {
        let mut terms: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
        let mut push = |key: Vec<u8>, c: i64| -> Result<(), PolyError> {
            let entry = terms.entry(key).or_insert(0);
            *entry = entry.checked_add(c).ok_or(PolyError::Overflow)?;
            Ok(())
        };
        for (e, &c) in &self.terms {
            // + x_u branch
            if e[u] < u8::MAX {
                let within = cap.map_or(true, |cp| e[u] + 1 <= cp[u]);
                if within {
                    let mut e2 = e.clone();
                    e2[u] += 1;
                    push(e2, c)?;
                }
            }
            // - x_v branch
            if e[v] < u8::MAX {
                let within = cap.map_or(true, |cp| e[v] + 1 <= cp[v]);
                if within {
                    let mut e2 = e.clone();
                    e2[v] += 1;
                    push(e2, c.checked_neg().ok_or(PolyError::Overflow)?)?;
                }
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(SparsePoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Exact evaluation at integer points with checked arithmetic.
    pub fn evaluate(&self, xs: &[i64]) -> Result<i128, PolyError> {
        assert_eq!(xs.len(), self.nvars);
        let mut total: i128 = 0;
        for (e, &c) in &self.terms {
            let mut term: i128 = c as i128;
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.checked_mul(xs[i] as i128).ok_or(PolyError::Overflow)?;
                }
            }
            total = total.checked_add(term).ok_or(PolyError::Overflow)?;
        }
        Ok(total)
    }
}
