#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use grasschar_core::{Monomial, PolyGF2, VariableTable};

/// `dim (R / I)_d` for the homogeneous ideal generated by `gens`, by row
/// reduction of the span of all `m * f` of degree `d`. No Groebner bases.
pub fn quotient_dim_by_row_reduction(
    table: &Arc<VariableTable>,
    gens: &[PolyGF2],
    degree: u32,
) -> usize {
    let monomials = table.monomials_of_degree(degree);
    let mut pivots: BTreeMap<Monomial, BTreeSet<Monomial>> = BTreeMap::new();
    for f in gens.iter().filter(|f| !f.is_zero()) {
        let fd = f.degree().unwrap();
        if fd > degree {
            continue;
        }
        for m in table.monomials_of_degree(degree - fd) {
            let mut row: BTreeSet<Monomial> = BTreeSet::new();
            for t in f.terms() {
                let p = t.checked_mul(&m).unwrap();
                if !row.remove(&p) {
                    row.insert(p);
                }
            }
            // eliminate against existing pivots, largest monomial first
            while let Some(&top) = row.iter().next_back() {
                match pivots.get(&top) {
                    Some(prow) => {
                        for x in prow {
                            if !row.remove(x) {
                                row.insert(*x);
                            }
                        }
                    }
                    None => {
                        pivots.insert(top, row);
                        break;
                    }
                }
            }
        }
    }
    monomials.len() - pivots.len()
}

pub fn hilbert_by_row_reduction(
    table: &Arc<VariableTable>,
    gens: &[PolyGF2],
    up_to: u32,
) -> Vec<usize> {
    (0..=up_to)
        .map(|d| quotient_dim_by_row_reduction(table, gens, d))
        .collect()
}
