use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{normal_form, GroebnerBasis};
use crate::bitmatrix::BitVector;
use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::PolyGF2;
use crate::vars::VariableTable;

/// A presented graded algebra `GF(2)[vars] / (gb)` with lazily computed
/// standard-monomial bases per degree.
///
/// Bases fill on demand through `&mut self` until [`seal`](Self::seal) is
/// called; afterwards the value is read-only and queries above the sealed
/// range fail with [`Error::NotSealed`].
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    gb: GroebnerBasis,
    bases: Vec<Vec<Monomial>>,
    sealed: bool,
    top_degree_hint: Option<u32>,
}

impl GradedQuotient {
    pub fn new(gb: GroebnerBasis) -> Self {
        GradedQuotient {
            gb,
            bases: Vec::new(),
            sealed: false,
            top_degree_hint: None,
        }
    }

    pub fn with_top_degree(mut self, top: u32) -> Self {
        self.top_degree_hint = Some(top);
        self
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        self.gb.table()
    }

    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Expected top nonzero degree, when known from the construction.
    pub fn top_degree_hint(&self) -> Option<u32> {
        self.top_degree_hint
    }

    pub fn is_sealed(&self) -> bool {
        self.sealed
    }

    /// Highest degree whose basis is available, if any.
    pub fn filled_to(&self) -> Option<u32> {
        (self.bases.len() as u32).checked_sub(1)
    }

    fn not_sealed(&self, degree: u32) -> Error {
        Error::NotSealed {
            degree,
            sealed_to: self.filled_to().unwrap_or(0),
        }
    }

    pub fn fill_to(&mut self, degree: u32) -> Result<(), Error> {
        if self.bases.len() as u32 > degree {
            return Ok(());
        }
        if self.sealed {
            return Err(self.not_sealed(degree));
        }
        while self.bases.len() as u32 <= degree {
            let d = self.bases.len() as u32;
            let gb = &self.gb;
            let basis = self
                .gb
                .table()
                .monomials_of_degree_filtered(d, &mut |m| !gb.is_reducible(m));
            self.bases.push(basis);
        }
        Ok(())
    }

    /// Freeze the cache; later queries above the filled range are errors.
    pub fn seal(&mut self) {
        self.sealed = true;
    }

    pub fn seal_to(&mut self, degree: u32) -> Result<(), Error> {
        self.fill_to(degree)?;
        self.seal();
        Ok(())
    }

    /// Standard monomials of `degree` in descending lex, filling the cache
    /// if needed.
    pub fn standard_monomials(&mut self, degree: u32) -> Result<&[Monomial], Error> {
        self.fill_to(degree)?;
        Ok(&self.bases[degree as usize])
    }

    /// Read-only access to an already computed basis.
    pub fn basis(&self, degree: u32) -> Result<&[Monomial], Error> {
        self.bases
            .get(degree as usize)
            .map(Vec::as_slice)
            .ok_or_else(|| self.not_sealed(degree))
    }

    pub fn dim(&self, degree: u32) -> Result<usize, Error> {
        Ok(self.basis(degree)?.len())
    }

    pub fn hilbert_function(&mut self, up_to: u32) -> Result<Vec<usize>, Error> {
        self.fill_to(up_to)?;
        Ok(self.bases[..=up_to as usize].iter().map(Vec::len).collect())
    }

    pub fn normal_form(&self, p: &PolyGF2) -> Result<PolyGF2, Error> {
        normal_form(p, &self.gb)
    }

    /// Coordinates of the homogeneous element `p` of degree `degree` in the
    /// standard-monomial basis of that degree.
    pub fn coordinates(&self, p: &PolyGF2, degree: u32) -> Result<BitVector, Error> {
        let basis = self.basis(degree)?;
        let nf = self.normal_form(p)?;
        let mut v = BitVector::zeros(basis.len());
        for m in nf.terms() {
            if self.table().weighted_degree(m) != degree {
                return Err(Error::NonHomogeneous);
            }
            let idx = basis
                .binary_search_by(|x| m.cmp(x))
                .expect("normal form monomials are standard");
            v.set(idx, true);
        }
        Ok(v)
    }

    /// The element with the given coordinates in degree `degree`.
    pub fn element(&self, coords: &BitVector, degree: u32) -> Result<PolyGF2, Error> {
        let basis = self.basis(degree)?;
        let terms: Vec<Monomial> = coords.ones().map(|i| basis[i]).collect();
        Ok(PolyGF2::from_sorted(self.table(), terms))
    }
}
