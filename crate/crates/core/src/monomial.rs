use core::cmp::Ordering;

use crate::error::Error;
use crate::vars::VariableTable;

/// Maximum number of variables a [`VariableTable`] may hold.
pub const MAX_VARS: usize = 8;

/// Exponent vector aligned with a [`VariableTable`].
///
/// Unused slots are always zero, so the derived ordering on the array is
/// exactly pure lex with slot 0 as the greatest variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS);
        Monomial {
            exps: [0; MAX_VARS],
            nvars: nvars as u8,
        }
    }

    pub fn new(exponents: &[u16]) -> Self {
        assert!(exponents.len() <= MAX_VARS, "too many variables");
        let mut exps = [0; MAX_VARS];
        exps[..exponents.len()].copy_from_slice(exponents);
        Monomial {
            exps,
            nvars: exponents.len() as u8,
        }
    }

    pub(crate) fn from_array(exps: [u16; MAX_VARS], nvars: usize) -> Self {
        Monomial {
            exps,
            nvars: nvars as u8,
        }
    }

    /// Single variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars()]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial, Error> {
        let mut exps = [0u16; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i]
                .checked_add(other.exps[i])
                .ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps,
            nvars: self.nvars,
        })
    }

    pub fn checked_pow(&self, e: u32) -> Result<Monomial, Error> {
        let mut exps = [0u16; MAX_VARS];
        for (i, x) in exps.iter_mut().enumerate() {
            let v = u32::from(self.exps[i]) * e;
            *x = u16::try_from(v).map_err(|_| Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps,
            nvars: self.nvars,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut exps = [0u16; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = other.exps[i] - self.exps[i];
        }
        Monomial {
            exps,
            nvars: self.nvars,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].max(other.exps[i]);
        }
        Monomial {
            exps,
            nvars: self.nvars,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Pure lexicographic comparison in the table's variable priority.
pub fn mono_compare(
    table: &VariableTable,
    m1: &Monomial,
    m2: &Monomial,
) -> Result<Ordering, Error> {
    if m1.nvars() != table.len() || m2.nvars() != table.len() {
        return Err(Error::TableMismatch);
    }
    Ok(m1.exps.cmp(&m2.exps))
}
