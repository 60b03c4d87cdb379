//! Coefficient tables: the coefficient of a fixed monomial `M` in products
//! `w1^p w2^q w3^s * w̄_r`, as used when expanding `w1 * x` for a kernel
//! candidate `x`.

use alloc::vec::Vec;

use crate::grassmann::{pow2, wbar_closed};
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub table: &'static str,
    pub label: &'static str,
    /// Exponents of `M` in `w1, w2, w3`.
    pub monomial: [u32; 3],
    /// Exponents of the factor multiplying `w̄_r`.
    pub factor: [u32; 3],
    pub wbar_index: u32,
    pub expected: bool,
}

impl TableRow {
    /// Exponents of `M / factor`, if the factor divides `M`.
    pub fn cofactor(&self) -> Option<[u32; 3]> {
        let [a, b, c] = self.monomial;
        let [p, q, s] = self.factor;
        Some([a.checked_sub(p)?, b.checked_sub(q)?, c.checked_sub(s)?])
    }

    /// The coefficient of `M` in `factor * w̄_r`, computed from `w̄_r`.
    pub fn compute(&self) -> bool {
        match self.cofactor() {
            None => false,
            Some(e) => {
                let w = wbar_closed(self.wbar_index);
                let m = Monomial::new(&[e[0] as u16, e[1] as u16, e[2] as u16]);
                w.coeff_of(&m)
            }
        }
    }
}

/// All rows at `t` (`t >= 3`).
pub fn table_rows(t: u32) -> Vec<TableRow> {
    let n = pow2(t);
    let h = pow2(t - 1);
    let row = |table, label, monomial, factor, wbar_index, expected| TableRow {
        table,
        label,
        monomial,
        factor,
        wbar_index,
        expected,
    };
    let m1 = [4, h - 2, 0];
    let m2 = [3, h - 3, 1];
    let m3 = [3, h - 3, 0];
    let m4 = [n - 5, 1, 0];
    let m4b = [1, h - 2, 0];
    alloc::vec![
        row("table-1", "alpha", m1, [3, 0, 0], n - 3, true),
        row("table-1", "beta", m1, [1, 1, 0], n - 3, false),
        row("table-1", "mu", m1, [0, 0, 1], n - 3, false),
        row("table-1", "lambda", m1, [2, 0, 0], n - 2, false),
        row("table-1", "nu+mu", m1, [1, 0, 0], n - 1, false),
        row("table-2", "alpha", m2, [3, 0, 0], n - 3, false),
        row("table-2", "beta", m2, [1, 1, 0], n - 3, true),
        row("table-2", "mu", m2, [0, 0, 1], n - 3, false),
        row("table-2", "lambda", m2, [2, 0, 0], n - 2, false),
        row("table-2", "nu+mu", m2, [1, 0, 0], n - 1, false),
        row("table-3", "alpha", m3, [1, 0, 0], n - 4, true),
        row("table-3", "mu", m3, [0, 0, 0], n - 3, false),
        row("table-4", "alpha", m4, [2, 0, 0], n - 5, false),
        row("table-4", "lambda", m4, [1, 0, 0], n - 4, true),
        row("table-4", "mu", m4, [0, 0, 0], n - 3, false),
        row("table-4b", "alpha", m4b, [2, 0, 0], n - 5, false),
        row("table-4b", "mu", m4b, [0, 0, 0], n - 3, true),
        row(
            "leading-terms",
            "w2^{2^{t-1}-1} in w̄_{2^t-2}",
            [0, h - 1, 0],
            [0, 0, 0],
            n - 2,
            true
        ),
        row(
            "leading-terms",
            "w1^{2^t-3} in w̄_{2^t-3}",
            [n - 3, 0, 0],
            [0, 0, 0],
            n - 3,
            true
        ),
    ]
}
