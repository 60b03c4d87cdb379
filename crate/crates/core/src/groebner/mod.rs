//! Multivariate division, Buchberger's algorithm and reduced Groebner bases
//! over GF(2) under pure lex order.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::PolyGF2;
use crate::text::parse_poly;
use crate::vars::VariableTable;

mod quotient;

pub use quotient::GradedQuotient;

/// A reduced Groebner basis, elements sorted by ascending leading monomial.
///
/// Construct with [`buchberger_reduced`]; reduced bases are unique per
/// ideal and order, so structural equality is ideal equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    table: Arc<VariableTable>,
    elements: Vec<PolyGF2>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    fn from_sorted(table: Arc<VariableTable>, elements: Vec<PolyGF2>) -> Self {
        let leading = elements
            .iter()
            .map(|g| *g.leading_monomial().unwrap())
            .collect();
        GroebnerBasis {
            table,
            elements,
            leading,
        }
    }

    /// Basis of the zero ideal.
    pub fn empty(table: &Arc<VariableTable>) -> Self {
        GroebnerBasis {
            table: table.clone(),
            elements: Vec::new(),
            leading: Vec::new(),
        }
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn elements(&self) -> &[PolyGF2] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Is `m` divisible by some leading monomial?
    pub fn is_reducible(&self, m: &Monomial) -> bool {
        self.leading.iter().any(|l| l.divides(m))
    }

    /// No leading monomial divides any monomial of another element, no
    /// element is zero, and elements are in ascending LM order.
    pub fn is_reduced(&self) -> bool {
        self.leading.windows(2).all(|w| w[0] < w[1])
            && self.elements.iter().enumerate().all(|(i, g)| {
                g.terms().iter().all(|m| {
                    self.leading
                        .iter()
                        .enumerate()
                        .all(|(j, l)| j == i || !l.divides(m))
                })
            })
    }

    /// Every S-polynomial reduces to zero.
    pub fn is_closed(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let s = s_polynomial(&self.elements[i], &self.elements[j]).expect("nonzero");
                if !normal_form(&s, self).expect("same table").is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Text form: `# order: <name:degree, ...>` then one element per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# order: {}", self.table).unwrap();
        for g in &self.elements {
            writeln!(s, "{g}").unwrap();
        }
        s
    }

    /// Inverse of [`to_text`](Self::to_text). Checks the basis is reduced
    /// and sorted; closure under S-polynomials is not re-verified.
    pub fn from_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
        let spec = header
            .strip_prefix("# order:")
            .ok_or_else(|| parse_err(0, "expected `# order:` header"))?;
        let mut vars: Vec<(String, u32)> = Vec::new();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, deg) = item
                .split_once(':')
                .ok_or_else(|| parse_err(0, "expected name:degree"))?;
            let deg = deg
                .trim()
                .parse()
                .map_err(|_| parse_err(0, "bad variable degree"))?;
            vars.push((name.trim().into(), deg));
        }
        let table = Arc::new(VariableTable::new(&vars)?);
        let mut elements = Vec::new();
        for line in lines {
            if line.is_empty() {
                continue;
            }
            let g = parse_poly(line, &table)?;
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            elements.push(g);
        }
        let gb = Self::from_sorted(table, elements);
        if !gb.is_reduced() {
            return Err(Error::Assertion(
                "basis in file is not reduced and sorted".into(),
            ));
        }
        Ok(gb)
    }
}

fn parse_err(position: usize, message: &str) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

/// Index of the element with the smallest leading monomial dividing `m`.
fn find_reducer(leading: &[Monomial], m: &Monomial) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, l) in leading.iter().enumerate() {
        if l.divides(m) && best.is_none_or(|b| *l < leading[b]) {
            best = Some(i);
        }
    }
    best
}

/// Full reduction of `p` by `divisors` (with leading monomials `leading`).
fn reduce(p: &PolyGF2, divisors: &[PolyGF2], leading: &[Monomial]) -> Result<PolyGF2, Error> {
    if divisors.is_empty() || p.is_zero() {
        return Ok(p.clone());
    }
    let mut heap: BinaryHeap<Monomial> = p.terms().iter().copied().collect();
    let mut remainder = Vec::new();
    while let Some(m) = heap.pop() {
        let mut count = 1usize;
        while heap.peek() == Some(&m) {
            heap.pop();
            count += 1;
        }
        if count.is_multiple_of(2) {
            continue;
        }
        match find_reducer(leading, &m) {
            Some(i) => {
                let q = leading[i].quotient_of(&m);
                for t in &divisors[i].terms()[1..] {
                    heap.push(t.checked_mul(&q)?);
                }
            }
            None => remainder.push(m),
        }
    }
    Ok(PolyGF2::from_sorted(p.table(), remainder))
}

/// Remainder of `p` on division by `gb`: the unique representative of the
/// coset of `p` whose monomials are all standard.
pub fn normal_form(p: &PolyGF2, gb: &GroebnerBasis) -> Result<PolyGF2, Error> {
    if !Arc::ptr_eq(p.table(), &gb.table) && **p.table() != *gb.table {
        return Err(Error::TableMismatch);
    }
    reduce(p, &gb.elements, &gb.leading)
}

pub fn s_polynomial(f: &PolyGF2, g: &PolyGF2) -> Result<PolyGF2, Error> {
    let (lf, lg) = match (f.leading_monomial(), g.leading_monomial()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial),
    };
    let l = lf.lcm(lg);
    f.mul_monomial(&lf.quotient_of(&l))?
        .checked_add(&g.mul_monomial(&lg.quotient_of(&l))?)
}

pub fn ideal_member(p: &PolyGF2, gb: &GroebnerBasis) -> Result<bool, Error> {
    Ok(normal_form(p, gb)?.is_zero())
}

pub fn ideals_equal(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<bool, Error> {
    if *a.table != *b.table {
        return Err(Error::TableMismatch);
    }
    Ok(a.elements == b.elements)
}

/// Reduced Groebner basis of the ideal generated by `generators`.
///
/// Generators must be homogeneous; zero generators are dropped. Pairs are
/// processed by ascending lcm degree and skipped by Buchberger's coprime
/// criterion and the chain criterion.
pub fn buchberger_reduced(
    generators: &[PolyGF2],
    table: &Arc<VariableTable>,
) -> Result<GroebnerBasis, Error> {
    let mut basis: Vec<PolyGF2> = Vec::new();
    for g in generators {
        if !Arc::ptr_eq(g.table(), table) && **g.table() != **table {
            return Err(Error::TableMismatch);
        }
        if !g.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        if !g.is_zero() && !basis.contains(g) {
            basis.push(g.clone());
        }
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis::empty(table));
    }
    let mut leading: Vec<Monomial> = basis
        .iter()
        .map(|g| *g.leading_monomial().unwrap())
        .collect();

    // (lcm degree, lcm, i, j), smallest first
    let mut queue: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    let push_pairs = |k: usize,
                      leading: &[Monomial],
                      queue: &mut BTreeSet<(u32, Monomial, usize, usize)>,
                      pending: &mut BTreeSet<(usize, usize)>| {
        for i in 0..k {
            let l = leading[i].lcm(&leading[k]);
            queue.insert((table.weighted_degree(&l), l, i, k));
            pending.insert((i, k));
        }
    };
    for k in 0..basis.len() {
        push_pairs(k, &leading, &mut queue, &mut pending);
    }

    while let Some((_, lcm, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        if leading[i].is_coprime(&leading[j]) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leading[k].divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let h = reduce(&s, &basis, &leading)?;
        if !h.is_zero() {
            leading.push(*h.leading_monomial().unwrap());
            basis.push(h);
            push_pairs(basis.len() - 1, &leading, &mut queue, &mut pending);
        }
    }

    // minimalize
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by_key(|&i| leading[i]);
    let mut kept: Vec<usize> = Vec::new();
    for &i in &order {
        if !kept.iter().any(|&k| leading[k].divides(&leading[i])) {
            kept.push(i);
        }
    }
    let minimal: Vec<PolyGF2> = kept.iter().map(|&i| basis[i].clone()).collect();
    let min_leading: Vec<Monomial> = kept.iter().map(|&i| leading[i]).collect();

    // interreduce: each element's tail by the others
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let others: Vec<PolyGF2> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, p)| p.clone())
            .collect();
        let other_lms: Vec<Monomial> = min_leading
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, m)| *m)
            .collect();
        let r = reduce(g, &others, &other_lms)?;
        debug_assert_eq!(r.leading_monomial(), Some(&min_leading[i]));
        reduced.push(r);
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    Ok(GroebnerBasis::from_sorted(table.clone(), reduced))
}

/// Human-readable list of leading monomials, for witnesses.
pub fn describe_leading(gb: &GroebnerBasis) -> String {
    let parts: Vec<String> = gb
        .leading
        .iter()
        .map(|m| crate::text::monomial_to_string(&gb.table, m))
        .collect();
    format!("{{{}}}", parts.join(", "))
}
