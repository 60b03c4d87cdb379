use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::families::{g_poly, wbar};
use super::pow2;
use crate::error::Error;
use crate::groebner::{buchberger_reduced, GradedQuotient, GroebnerBasis};
use crate::monomial::Monomial;
use crate::poly::PolyGF2;
use crate::vars::VariableTable;

pub const T_MIN: u32 = 3;
pub const T_MAX: u32 = 8;

pub(crate) fn check_t(t: u32) -> Result<(), Error> {
    if (T_MIN..=T_MAX).contains(&t) {
        Ok(())
    } else {
        Err(Error::UnsupportedT(t))
    }
}

/// Which of `n = 2^t - 1, 2^t - 2, 2^t - 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    Minus1,
    Minus2,
    Minus3,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::Minus1, Case::Minus2, Case::Minus3];

    pub fn offset(self) -> u32 {
        match self {
            Case::Minus1 => 1,
            Case::Minus2 => 2,
            Case::Minus3 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Case::Minus1 => "minus1",
            Case::Minus2 => "minus2",
            Case::Minus3 => "minus3",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "minus1" => Ok(Case::Minus1),
            "minus2" => Ok(Case::Minus2),
            "minus3" => Ok(Case::Minus3),
            _ => Err(Error::InvalidParams(format!("unknown case `{s}`"))),
        }
    }
}

/// `t`, the case selecting `n`, and the undetermined coefficient `gamma`
/// (only meaningful for [`Case::Minus1`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassmannParams {
    pub t: u32,
    pub case: Case,
    pub gamma: bool,
}

impl GrassmannParams {
    pub fn new(t: u32, case: Case, gamma: bool) -> Result<Self, Error> {
        check_t(t)?;
        Ok(GrassmannParams { t, case, gamma })
    }

    pub fn n(&self) -> u32 {
        pow2(self.t) - self.case.offset()
    }

    /// Degree of the extra generator `a`, `2^t - 4`.
    pub fn a_degree(&self) -> u32 {
        pow2(self.t) - 4
    }

    /// `dim G~_{n,3} = 3(n - 3)`.
    pub fn manifold_dim(&self) -> u32 {
        3 * (self.n() - 3)
    }
}

/// Identifies a presented ring whose Groebner basis may be cached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKey {
    /// `H*(G_{n,k}) = Z2[w1..wk] / (w̄_{n-k+1}, ..., w̄_n)`.
    Borel { n: u32, k: u32 },
    /// `Z2[w2, w3] / J_{n,3}`, the image of `p*` in `H*(G~_{n,3})`.
    ImageJ { n: u32 },
    /// Presented `H*(G~_{n,3})`.
    Oriented(GrassmannParams),
    /// Presented `H*(G~_{2^t-2,2}) = Z2[b, w2] / (w2^{2^{t-1}-1}, b^2 + w2^{2^{t-1}-2} b)`.
    OrientedK2 { t: u32 },
}

impl RingKey {
    pub fn validate(&self) -> Result<(), Error> {
        match *self {
            RingKey::Borel { n, k } => {
                if !(1..=3).contains(&k) || n < k {
                    return Err(Error::InvalidParams(format!(
                        "Borel ring needs n >= k, 1 <= k <= 3; got n={n}, k={k}"
                    )));
                }
            }
            RingKey::ImageJ { n } => {
                if n < 2 {
                    return Err(Error::InvalidParams(format!(
                        "J_{{n,3}} needs n >= 2; got {n}"
                    )));
                }
            }
            RingKey::Oriented(p) => check_t(p.t)?,
            RingKey::OrientedK2 { t } => check_t(t)?,
        }
        Ok(())
    }

    pub fn table(&self) -> Arc<VariableTable> {
        Arc::new(match *self {
            RingKey::Borel { k, .. } => VariableTable::stiefel_whitney(k),
            RingKey::ImageJ { .. } => VariableTable::w2_w3(),
            RingKey::Oriented(p) => VariableTable::with_a(p.a_degree()),
            RingKey::OrientedK2 { t } => VariableTable::with_b(pow2(t) - 4),
        })
    }

    /// Dimension of the manifold whose cohomology the ring models.
    pub fn top_degree(&self) -> Option<u32> {
        match *self {
            RingKey::Borel { n, k } => Some(k * (n - k)),
            RingKey::ImageJ { .. } => None,
            RingKey::Oriented(p) => Some(p.manifold_dim()),
            RingKey::OrientedK2 { t } => Some(2 * (pow2(t) - 4)),
        }
    }

    /// The defining generators, zero ones included.
    pub fn generators(&self) -> Result<Vec<PolyGF2>, Error> {
        self.validate()?;
        let table = self.table();
        match *self {
            RingKey::Borel { n, k } => (n - k + 1..=n)
                .map(|r| wbar(r, k)?.rebase(&table))
                .collect(),
            RingKey::ImageJ { n } => (n - 2..=n).map(|r| g_poly(r).rebase(&table)).collect(),
            RingKey::Oriented(p) => {
                let t = p.t;
                let g = |r: u32| g_poly(r).rebase(&table);
                let a = PolyGF2::var(&table, "a")?;
                let a2 = a.square()?;
                Ok(match p.case {
                    Case::Minus1 => {
                        let mut rel = &a2 + &(&g(pow2(t) - 4)? * &a);
                        if p.gamma {
                            rel = &rel + &w2_power(&table, pow2(t) - 4);
                        }
                        alloc::vec![g(pow2(t) - 2)?, g(pow2(t) - 1)?, rel]
                    }
                    Case::Minus2 => alloc::vec![g(pow2(t) - 4)?, g(pow2(t) - 2)?, a2],
                    Case::Minus3 => alloc::vec![g(pow2(t) - 5)?, g(pow2(t) - 4)?, a2],
                })
            }
            RingKey::OrientedK2 { t } => {
                let b = PolyGF2::var(&table, "b")?;
                let rel = &b.square()? + &(&w2_power(&table, pow2(t - 1) - 2) * &b);
                Ok(alloc::vec![w2_power(&table, pow2(t - 1) - 1), rel])
            }
        }
    }

    /// Reduced Groebner basis by Buchberger's algorithm.
    pub fn compute_gb(&self) -> Result<GroebnerBasis, Error> {
        buchberger_reduced(&self.generators()?, &self.table())
    }

    pub fn quotient(&self, gb: GroebnerBasis) -> GradedQuotient {
        let q = GradedQuotient::new(gb);
        match self.top_degree() {
            Some(top) => q.with_top_degree(top),
            None => q,
        }
    }
}

fn w2_power(table: &Arc<VariableTable>, e: u32) -> PolyGF2 {
    let i = table.index_of("w2").expect("table has w2");
    let mut exps = [0u16; crate::monomial::MAX_VARS];
    exps[i] = e as u16;
    PolyGF2::monomial(table, Monomial::new(&exps[..table.len()]))
}

/// Source of Groebner bases for [`RingKey`]s, e.g. a file cache.
pub trait GbProvider {
    fn groebner(&self, key: &RingKey) -> Result<GroebnerBasis, Error>;

    fn quotient(&self, key: &RingKey) -> Result<GradedQuotient, Error> {
        Ok(key.quotient(self.groebner(key)?))
    }
}

/// Always recomputes.
#[derive(Clone, Copy, Debug, Default)]
pub struct DirectCompute;

impl GbProvider for DirectCompute {
    fn groebner(&self, key: &RingKey) -> Result<GroebnerBasis, Error> {
        key.compute_gb()
    }
}

/// `H*(G_{n,k})` in the Borel presentation, lex `w1 > ... > wk`.
pub fn borel_ring(n: u32, k: u32) -> Result<GradedQuotient, Error> {
    DirectCompute.quotient(&RingKey::Borel { n, k })
}

/// `Z2[w2, w3] / (g_{n-2}, g_{n-1}, g_n)`, lex `w2 > w3`.
pub fn image_ring(n: u32) -> Result<GradedQuotient, Error> {
    DirectCompute.quotient(&RingKey::ImageJ { n })
}

/// The presented ring of `G~_{n,3}`, lex `a > w2 > w3`.
pub fn oriented_ring(params: GrassmannParams) -> Result<GradedQuotient, Error> {
    DirectCompute.quotient(&RingKey::Oriented(params))
}

/// The presented ring of `G~_{2^t-2,2}`, lex `b > w2`.
pub fn oriented_ring_k2(t: u32) -> Result<GradedQuotient, Error> {
    DirectCompute.quotient(&RingKey::OrientedK2 { t })
}
