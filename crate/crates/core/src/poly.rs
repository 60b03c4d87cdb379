use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul};

use crate::error::Error;
use crate::monomial::Monomial;
use crate::vars::VariableTable;

/// Sparse polynomial over GF(2).
///
/// Terms are distinct monomials stored in strictly descending lex order;
/// the zero polynomial has no terms. Values are immutable: every operation
/// returns a fresh polynomial.
#[derive(Clone)]
pub struct PolyGF2 {
    table: Arc<VariableTable>,
    terms: Vec<Monomial>,
}

impl PolyGF2 {
    pub fn zero(table: &Arc<VariableTable>) -> Self {
        PolyGF2 {
            table: table.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(table: &Arc<VariableTable>) -> Self {
        Self::monomial(table, Monomial::one(table.len()))
    }

    pub fn monomial(table: &Arc<VariableTable>, m: Monomial) -> Self {
        debug_assert_eq!(m.nvars(), table.len());
        PolyGF2 {
            table: table.clone(),
            terms: alloc::vec![m],
        }
    }

    /// The variable called `name`.
    pub fn var(table: &Arc<VariableTable>, name: &str) -> Result<Self, Error> {
        let i = table
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Self::monomial(table, Monomial::var(table.len(), i)))
    }

    /// Sum of the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(
        table: &Arc<VariableTable>,
        monomials: I,
    ) -> Self {
        let mut terms: Vec<Monomial> = monomials.into_iter().collect();
        canonicalize(&mut terms);
        PolyGF2 {
            table: table.clone(),
            terms,
        }
    }

    /// Caller guarantees `terms` is strictly descending.
    pub(crate) fn from_sorted(table: &Arc<VariableTable>, terms: Vec<Monomial>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] > w[1]));
        PolyGF2 {
            table: table.clone(),
            terms,
        }
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    pub fn same_table(&self, other: &PolyGF2) -> bool {
        Arc::ptr_eq(&self.table, &other.table) || *self.table == *other.table
    }

    fn check_table(&self, other: &PolyGF2) -> Result<(), Error> {
        if self.same_table(other) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    /// Weighted degree of the leading monomial; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|m| self.table.weighted_degree(m))
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|m| self.table.weighted_degree(m) == d),
        }
    }

    pub fn coeff_of(&self, m: &Monomial) -> bool {
        self.terms.binary_search_by(|x| m.cmp(x)).is_ok()
    }

    pub fn checked_add(&self, other: &PolyGF2) -> Result<PolyGF2, Error> {
        self.check_table(other)?;
        Ok(PolyGF2 {
            table: self.table.clone(),
            terms: merge_xor(&self.terms, &other.terms),
        })
    }

    pub fn checked_mul(&self, other: &PolyGF2) -> Result<PolyGF2, Error> {
        self.check_table(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(PolyGF2::zero(&self.table));
        }
        if self.len() == 1 {
            return other.mul_monomial(&self.terms[0]);
        }
        if other.len() == 1 {
            return self.mul_monomial(&other.terms[0]);
        }
        let mut terms = Vec::with_capacity(self.len() * other.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(a.checked_mul(b)?);
            }
        }
        canonicalize(&mut terms);
        Ok(PolyGF2 {
            table: self.table.clone(),
            terms,
        })
    }

    /// `m * self`. Multiplication by a monomial preserves term order.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<PolyGF2, Error> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.checked_mul(m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyGF2 {
            table: self.table.clone(),
            terms,
        })
    }

    /// Frobenius: `(sum m)^2 = sum m^2`.
    pub fn square(&self) -> Result<PolyGF2, Error> {
        let terms = self
            .terms
            .iter()
            .map(|t| t.checked_pow(2))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyGF2 {
            table: self.table.clone(),
            terms,
        })
    }

    pub fn checked_pow(&self, mut e: u32) -> Result<PolyGF2, Error> {
        let mut result = PolyGF2::one(&self.table);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.square()?;
            }
        }
        Ok(result)
    }

    /// Drop every term in which variable `var` occurs, i.e. substitute 0.
    pub fn set_var_zero(&self, var: usize) -> PolyGF2 {
        let terms = self
            .terms
            .iter()
            .filter(|m| m.exponent(var) == 0)
            .copied()
            .collect();
        PolyGF2 {
            table: self.table.clone(),
            terms,
        }
    }

    /// Re-express over `target`, which must contain every variable occurring
    /// in `self` under the same name and degree.
    pub fn rebase(&self, target: &Arc<VariableTable>) -> Result<PolyGF2, Error> {
        let mut map = [usize::MAX; crate::monomial::MAX_VARS];
        for (i, slot) in map.iter_mut().enumerate().take(self.table.len()) {
            if let Some(j) = target.index_of(self.table.name(i)) {
                if target.degree(j) != self.table.degree(i) {
                    return Err(Error::TableMismatch);
                }
                *slot = j;
            }
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for m in &self.terms {
            let mut exps = [0u16; crate::monomial::MAX_VARS];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    if map[i] == usize::MAX {
                        return Err(Error::MissingVariable(self.table.name(i).into()));
                    }
                    exps[map[i]] = e;
                }
            }
            out.push(Monomial::new(&exps[..target.len()]));
        }
        Ok(PolyGF2::from_monomials(target, out))
    }
}

/// Sort descending and cancel repeated monomials in pairs.
pub(crate) fn canonicalize(terms: &mut Vec<Monomial>) {
    terms.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = 0;
    let mut i = 0;
    while i < terms.len() {
        let mut j = i + 1;
        while j < terms.len() && terms[j] == terms[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            terms[out] = terms[i];
            out += 1;
        }
        i = j;
    }
    terms.truncate(out);
}

/// Symmetric difference of two descending monomial lists.
pub(crate) fn merge_xor(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl PartialEq for PolyGF2 {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.same_table(other)
    }
}

impl Eq for PolyGF2 {}

impl core::hash::Hash for PolyGF2 {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl PartialOrd for PolyGF2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares term lists lexicographically, leading terms first.
impl Ord for PolyGF2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl fmt::Display for PolyGF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::write_poly(f, self)
    }
}

impl fmt::Debug for PolyGF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyGF2({self})")
    }
}

/// Panics when the operands use different variable tables; see
/// [`PolyGF2::checked_add`].
impl Add for &PolyGF2 {
    type Output = PolyGF2;

    fn add(self, rhs: &PolyGF2) -> PolyGF2 {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

/// Panics on table mismatch or exponent overflow; see
/// [`PolyGF2::checked_mul`].
impl Mul for &PolyGF2 {
    type Output = PolyGF2;

    fn mul(self, rhs: &PolyGF2) -> PolyGF2 {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}
