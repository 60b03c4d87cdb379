use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::monomial::{Monomial, MAX_VARS};

/// Ordered, graded variables. Position in the list is the lex priority:
/// the first variable is the greatest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableTable {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl VariableTable {
    pub fn new<S: AsRef<str>>(vars: &[(S, u32)]) -> Result<Self, Error> {
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidTable(format!(
                "{} variables, at most {MAX_VARS} supported",
                vars.len()
            )));
        }
        let mut names: Vec<String> = Vec::with_capacity(vars.len());
        let mut degrees = Vec::with_capacity(vars.len());
        for (name, degree) in vars {
            let name = name.as_ref();
            if name.is_empty() || !is_identifier(name) {
                return Err(Error::InvalidTable(format!("bad variable name `{name}`")));
            }
            if names.iter().any(|n| n == name) {
                return Err(Error::InvalidTable(format!("duplicate variable `{name}`")));
            }
            if *degree == 0 {
                return Err(Error::InvalidTable(format!(
                    "variable `{name}` has degree 0"
                )));
            }
            names.push(name.to_string());
            degrees.push(*degree);
        }
        Ok(VariableTable { names, degrees })
    }

    /// `w1 > w2 > ... > wk`, `|w_i| = i`.
    pub fn stiefel_whitney(k: u32) -> Self {
        let vars: Vec<(String, u32)> = (1..=k).map(|i| (format!("w{i}"), i)).collect();
        Self::new(&vars).expect("valid table")
    }

    /// `w2 > w3`.
    pub fn w2_w3() -> Self {
        Self::new(&[("w2", 2), ("w3", 3)]).expect("valid table")
    }

    /// `a > w2 > w3` with `|a| = degree`.
    pub fn with_a(degree: u32) -> Self {
        Self::new(&[("a", degree), ("w2", 2), ("w3", 3)]).expect("valid table")
    }

    /// `b > w2` with `|b| = degree`.
    pub fn with_b(degree: u32) -> Self {
        Self::new(&[("b", degree), ("w2", 2)]).expect("valid table")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Weighted degree `sum e_i * |x_i|`.
    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(i, d)| d * u32::from(m.exponent(i)))
            .sum()
    }

    /// Every monomial of weighted degree `degree`, in descending lex order.
    pub fn monomials_of_degree(&self, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = [0u16; MAX_VARS];
        self.enumerate(0, degree, &mut exps, &mut |_| true, &mut out);
        out
    }

    /// Like [`monomials_of_degree`](Self::monomials_of_degree) but prunes
    /// every branch whose partial monomial fails `keep`. `keep` must be
    /// monotone: if it rejects `m` it rejects every multiple of `m`.
    pub(crate) fn monomials_of_degree_filtered(
        &self,
        degree: u32,
        keep: &mut dyn FnMut(&Monomial) -> bool,
    ) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = [0u16; MAX_VARS];
        self.enumerate(0, degree, &mut exps, keep, &mut out);
        out
    }

    fn enumerate(
        &self,
        var: usize,
        remaining: u32,
        exps: &mut [u16; MAX_VARS],
        keep: &mut dyn FnMut(&Monomial) -> bool,
        out: &mut Vec<Monomial>,
    ) {
        let n = self.len();
        if var == n {
            if remaining == 0 {
                let m = Monomial::from_array(*exps, n);
                if keep(&m) {
                    out.push(m);
                }
            }
            return;
        }
        let d = self.degrees[var];
        if var + 1 == n {
            if remaining.is_multiple_of(d) && remaining / d <= u32::from(u16::MAX) {
                exps[var] = (remaining / d) as u16;
                let m = Monomial::from_array(*exps, n);
                if keep(&m) {
                    out.push(m);
                }
                exps[var] = 0;
            }
            return;
        }
        let max = (remaining / d).min(u32::from(u16::MAX));
        for e in (0..=max).rev() {
            exps[var] = e as u16;
            if e > 0 && !keep(&Monomial::from_array(*exps, n)) {
                continue;
            }
            self.enumerate(var + 1, remaining - e * d, exps, keep, out);
        }
        exps[var] = 0;
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for VariableTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, d)) in self.names.iter().zip(&self.degrees).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}:{d}")?;
        }
        Ok(())
    }
}
