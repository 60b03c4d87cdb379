use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::bitmatrix::{BitMatrix, BitVector};
use crate::error::Error;
use crate::groebner::GradedQuotient;
use crate::poly::PolyGF2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RestrictionKind {
    /// `i*: H*(G_{n+1,k}) -> H*(G_{n,k})`, `w_r -> w_r`.
    IStar,
    /// `j*: H*(G_{n+1,k+1}) -> H*(G_{n,k})`, `w_r -> w_r`, `w_{k+1} -> 0`.
    JStar,
}

#[derive(Clone, Debug)]
pub enum MapKind {
    /// Ring homomorphism; `images[i]` is the image of source variable `i`.
    RingHom {
        images: Vec<PolyGF2>,
    },
    Multiplication {
        multiplier: PolyGF2,
    },
}

/// A linear map between graded quotients, homogeneous of degree
/// `degree_shift`, realized per degree as a [`BitMatrix`] acting on
/// coefficient columns: the matrix at degree `d` has one column per source
/// standard monomial of degree `d` and one row per target standard monomial
/// of degree `d + shift`.
///
/// Both rings must already hold bases for the degrees queried (fill or seal
/// them first).
#[derive(Clone, Debug)]
pub struct GradedLinearMap<'a> {
    source: &'a GradedQuotient,
    target: &'a GradedQuotient,
    kind: MapKind,
    degree_shift: u32,
    matrix_cache: BTreeMap<u32, BitMatrix>,
}

impl<'a> GradedLinearMap<'a> {
    pub fn source(&self) -> &'a GradedQuotient {
        self.source
    }

    pub fn target(&self) -> &'a GradedQuotient {
        self.target
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    pub fn degree_shift(&self) -> u32 {
        self.degree_shift
    }

    /// Image of an arbitrary source polynomial, in target normal form.
    pub fn apply(&self, p: &PolyGF2) -> Result<PolyGF2, Error> {
        let raw = match &self.kind {
            MapKind::Multiplication { multiplier } => p.checked_mul(multiplier)?,
            MapKind::RingHom { images } => {
                let table = self.target.table();
                let mut acc = PolyGF2::zero(table);
                for m in p.terms() {
                    let mut term = PolyGF2::one(table);
                    for (i, &e) in m.exponents().iter().enumerate() {
                        if e > 0 {
                            term = term.checked_mul(&images[i].checked_pow(u32::from(e))?)?;
                        }
                    }
                    acc = acc.checked_add(&term)?;
                }
                acc
            }
        };
        self.target.normal_form(&raw)
    }

    fn build_matrix(&self, degree: u32) -> Result<BitMatrix, Error> {
        let src = self.source.basis(degree)?;
        let rows = self.target.basis(degree + self.degree_shift)?.len();
        let mut columns = Vec::with_capacity(src.len());
        for m in src {
            let image = self.apply(&PolyGF2::monomial(self.source.table(), *m))?;
            columns.push(
                self.target
                    .coordinates(&image, degree + self.degree_shift)?,
            );
        }
        Ok(BitMatrix::from_columns(rows, &columns))
    }

    pub fn matrix(&mut self, degree: u32) -> Result<&BitMatrix, Error> {
        if !self.matrix_cache.contains_key(&degree) {
            let m = self.build_matrix(degree)?;
            self.matrix_cache.insert(degree, m);
        }
        Ok(&self.matrix_cache[&degree])
    }

    /// Kernel in source degree `degree`, as normal-form polynomials.
    pub fn kernel(&mut self, degree: u32) -> Result<Vec<PolyGF2>, Error> {
        let basis = self.matrix(degree)?.kernel_basis();
        basis
            .iter()
            .map(|v| self.source.element(v, degree))
            .collect()
    }
}

pub fn ring_hom<'a>(
    source: &'a GradedQuotient,
    target: &'a GradedQuotient,
    images: Vec<PolyGF2>,
) -> Result<GradedLinearMap<'a>, Error> {
    let st = source.table();
    if images.len() != st.len() {
        return Err(Error::InvalidParams(format!(
            "{} generator images for {} variables",
            images.len(),
            st.len()
        )));
    }
    for (i, img) in images.iter().enumerate() {
        if !img.same_table(&PolyGF2::zero(target.table())) {
            return Err(Error::TableMismatch);
        }
        if !img.is_homogeneous() || img.degree().is_some_and(|d| d != st.degree(i)) {
            return Err(Error::GeneratorDegreeMismatch(format!(
                "image of {} is not homogeneous of degree {}",
                st.name(i),
                st.degree(i)
            )));
        }
    }
    Ok(GradedLinearMap {
        source,
        target,
        kind: MapKind::RingHom { images },
        degree_shift: 0,
        matrix_cache: BTreeMap::new(),
    })
}

/// `i*` or `j*` between Borel rings, sending each `w_r` to the target's
/// `w_r`; under `j*` the source's extra top class goes to 0.
pub fn restriction_map<'a>(
    kind: RestrictionKind,
    source: &'a GradedQuotient,
    target: &'a GradedQuotient,
) -> Result<GradedLinearMap<'a>, Error> {
    let st = source.table();
    let tt = target.table();
    let expected = match kind {
        RestrictionKind::IStar => tt.len(),
        RestrictionKind::JStar => tt.len() + 1,
    };
    if st.len() != expected {
        return Err(Error::GeneratorDegreeMismatch(format!(
            "{kind:?} from {} to {} variables",
            st.len(),
            tt.len()
        )));
    }
    let mut images = Vec::with_capacity(st.len());
    for i in 0..st.len() {
        let name = st.name(i);
        match tt.index_of(name) {
            Some(j) if tt.degree(j) == st.degree(i) => images.push(PolyGF2::var(tt, name)?),
            None if kind == RestrictionKind::JStar && i + 1 == st.len() => {
                images.push(PolyGF2::zero(tt))
            }
            _ => {
                return Err(Error::GeneratorDegreeMismatch(format!(
                    "source generator {name} has no matching target generator"
                )))
            }
        }
    }
    ring_hom(source, target, images)
}

/// Multiplication by a fixed homogeneous element.
pub fn multiplication_map(
    ring: &GradedQuotient,
    multiplier: PolyGF2,
) -> Result<GradedLinearMap<'_>, Error> {
    if !multiplier.same_table(&PolyGF2::zero(ring.table())) {
        return Err(Error::TableMismatch);
    }
    if !multiplier.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let degree_shift = multiplier.degree().unwrap_or(0);
    Ok(GradedLinearMap {
        source: ring,
        target: ring,
        kind: MapKind::Multiplication { multiplier },
        degree_shift,
        matrix_cache: BTreeMap::new(),
    })
}

/// Multiplication by `w1`, degree `+1`.
pub fn mult_w1(ring: &GradedQuotient) -> Result<GradedLinearMap<'_>, Error> {
    let w1 = PolyGF2::var(ring.table(), "w1").map_err(|_| Error::MissingVariable("w1".into()))?;
    multiplication_map(ring, w1)
}

/// Basis of `ker f ∩ ker g` in source degree `degree`: the null space of
/// the two matrices stacked.
pub fn kernel_intersection(
    f: &mut GradedLinearMap<'_>,
    g: &mut GradedLinearMap<'_>,
    degree: u32,
) -> Result<Vec<PolyGF2>, Error> {
    if !core::ptr::eq(f.source, g.source) && f.source.gb() != g.source.gb() {
        return Err(Error::SourceMismatch);
    }
    let stacked = f.matrix(degree)?.vstack(g.matrix(degree)?);
    let source = f.source;
    stacked
        .kernel_basis()
        .iter()
        .map(|v: &BitVector| source.element(v, degree))
        .collect()
}
