use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::pow2;
use super::rings::check_t;
use crate::error::Error;
use crate::lucas::lucas_binom;
use crate::monomial::Monomial;
use crate::poly::PolyGF2;
use crate::vars::VariableTable;

/// `w̄_r` over `w1..w3` from the closed sum over `a + 2b + 3c = r` with
/// coefficient `binom(a+b+c, a) * binom(b+c, b) mod 2`.
pub fn wbar_closed(r: u32) -> PolyGF2 {
    let table = Arc::new(VariableTable::stiefel_whitney(3));
    let mut terms = Vec::new();
    for c in 0..=r / 3 {
        for b in 0..=(r - 3 * c) / 2 {
            let a = r - 3 * c - 2 * b;
            let (a64, b64, c64) = (u64::from(a), u64::from(b), u64::from(c));
            if lucas_binom(a64 + b64 + c64, a64) && lucas_binom(b64 + c64, b64) {
                terms.push(Monomial::new(&[a as u16, b as u16, c as u16]));
            }
        }
    }
    PolyGF2::from_monomials(&table, terms)
}

/// `[w̄_0, ..., w̄_max]` over `w1..wk` from the recurrence
/// `w̄_r = w1 w̄_{r-1} + ... + wk w̄_{r-k}`, i.e. the homogeneous parts of
/// `1 / (1 + w1 + ... + wk)`.
pub fn wbar_sequence(max_r: u32, k: u32) -> Result<Vec<PolyGF2>, Error> {
    if !(1..=3).contains(&k) {
        return Err(Error::InvalidParams(format!("k = {k} is outside 1..=3")));
    }
    let table = Arc::new(VariableTable::stiefel_whitney(k));
    let vars: Vec<Monomial> = (0..k as usize)
        .map(|i| Monomial::var(k as usize, i))
        .collect();
    let mut seq: Vec<PolyGF2> = Vec::with_capacity(max_r as usize + 1);
    seq.push(PolyGF2::one(&table));
    for r in 1..=max_r as usize {
        let mut acc = PolyGF2::zero(&table);
        for (i, v) in vars.iter().enumerate() {
            if i < r {
                acc = acc.checked_add(&seq[r - 1 - i].mul_monomial(v)?)?;
            }
        }
        seq.push(acc);
    }
    Ok(seq)
}

/// `w̄_r` over `w1..wk`.
///
/// For `k = 3` this is the closed formula, cross-checked in debug builds
/// against one step of the recurrence.
pub fn wbar(r: u32, k: u32) -> Result<PolyGF2, Error> {
    match k {
        3 => {
            let w = wbar_closed(r);
            if cfg!(debug_assertions) && r >= 3 {
                let t = w.table().clone();
                let step = &(&(&PolyGF2::var(&t, "w1")? * &wbar_closed(r - 1))
                    + &(&PolyGF2::var(&t, "w2")? * &wbar_closed(r - 2)))
                    + &(&PolyGF2::var(&t, "w3")? * &wbar_closed(r - 3));
                debug_assert_eq!(step, w, "closed formula disagrees with recurrence at r={r}");
            }
            Ok(w)
        }
        1 | 2 => Ok(wbar_sequence(r, k)?.pop().expect("nonempty")),
        _ => Err(Error::InvalidParams(format!("k = {k} is outside 1..=3"))),
    }
}

/// `g_r = sum over 2b + 3c = r of binom(b+c, b) w2^b w3^c`, the reduction
/// of `w̄_r` modulo `w1`.
pub fn g_poly(r: u32) -> PolyGF2 {
    let table = Arc::new(VariableTable::w2_w3());
    let mut terms = Vec::new();
    for c in 0..=r / 3 {
        let rest = r - 3 * c;
        if rest % 2 == 1 {
            continue;
        }
        let b = rest / 2;
        if lucas_binom(u64::from(b + c), u64::from(b)) {
            terms.push(Monomial::new(&[b as u16, c as u16]));
        }
    }
    PolyGF2::from_monomials(&table, terms)
}

/// `[f_0, ..., f_{t-1}]` with `f_i = g_{2^t - 3 + 2^i}`, checking
/// `LM(f_i) = w2^{2^{t-1} - 2^i} w3^{2^i - 1}` and `f_{t-1} = w3^{2^{t-1} - 1}`.
pub fn fukaya_family(t: u32) -> Result<Vec<PolyGF2>, Error> {
    check_t(t)?;
    let mut family = Vec::with_capacity(t as usize);
    for i in 0..t {
        let f = g_poly(pow2(t) - 3 + pow2(i));
        let expected = Monomial::new(&[(pow2(t - 1) - pow2(i)) as u16, (pow2(i) - 1) as u16]);
        if f.leading_monomial() != Some(&expected) {
            return Err(Error::Assertion(format!(
                "LM(f_{i}) at t={t}: got {:?}, expected w2^{}*w3^{}",
                f.leading_monomial()
                    .map(|m| crate::text::monomial_to_string(f.table(), m)),
                pow2(t - 1) - pow2(i),
                pow2(i) - 1
            )));
        }
        family.push(f);
    }
    let last = family.last().expect("t >= 3");
    if last.len() != 1 {
        return Err(Error::Assertion(format!(
            "f_{} = {last} is not a monomial",
            t - 1
        )));
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;
    use alloc::string::ToString;

    /// Coefficients of `1/(1 + w1 + w2 + w3)` up to degree `n` by direct
    /// power-series inversion: the inverse is `sum_j (-s)^j = sum_j s^j` with
    /// `s = w1 + w2 + w3`, truncated by degree.
    fn inverse_series_oracle(n: u32) -> Vec<PolyGF2> {
        let table = Arc::new(VariableTable::stiefel_whitney(3));
        let s = parse_poly("w1 + w2 + w3", &table).unwrap();
        let mut total = PolyGF2::zero(&table);
        let mut power = PolyGF2::one(&table);
        for _ in 0..=n {
            total = &total + &power;
            let next = &power * &s;
            power = PolyGF2::from_monomials(
                &table,
                next.terms()
                    .iter()
                    .copied()
                    .filter(|m| table.weighted_degree(m) <= n),
            );
        }
        (0..=n)
            .map(|d| {
                PolyGF2::from_monomials(
                    &table,
                    total
                        .terms()
                        .iter()
                        .copied()
                        .filter(|m| table.weighted_degree(m) == d),
                )
            })
            .collect()
    }

    #[test]
    fn wbar_small_values() {
        let oracle = inverse_series_oracle(8);
        assert!(wbar(0, 3).unwrap().is_one());
        assert!(wbar(0, 1).unwrap().is_one());
        assert_eq!(wbar(2, 3).unwrap().to_string(), "w1^2 + w2");
        for (r, o) in oracle.iter().enumerate() {
            assert_eq!(&wbar(r as u32, 3).unwrap(), o, "r = {r}");
        }
        assert!(wbar(3, 4).is_err());
        assert!(wbar(3, 0).is_err());
    }

    #[test]
    fn wbar_k1_k2() {
        assert_eq!(wbar(5, 1).unwrap().to_string(), "w1^5");
        // (1 + w1 + w2)^{-1}: degree 3 part is w1^3 + 2 w1 w2 = w1^3
        assert_eq!(wbar(3, 2).unwrap().to_string(), "w1^3");
        assert_eq!(wbar(4, 2).unwrap().to_string(), "w1^4 + w1^2*w2 + w2^2");
    }

    #[test]
    fn closed_formula_equals_recurrence() {
        let seq = wbar_sequence(200, 3).unwrap();
        for (r, w) in seq.iter().enumerate() {
            assert_eq!(w, &wbar_closed(r as u32), "r = {r}");
        }
    }

    #[test]
    fn power_series_identity() {
        let n = 60;
        let table = Arc::new(VariableTable::stiefel_whitney(3));
        let total = wbar_sequence(n, 3)
            .unwrap()
            .iter()
            .fold(PolyGF2::zero(&table), |acc, w| &acc + w);
        let prod = &parse_poly("1 + w1 + w2 + w3", &table).unwrap() * &total;
        let low: Vec<_> = prod
            .terms()
            .iter()
            .filter(|m| table.weighted_degree(m) <= n)
            .collect();
        assert_eq!(low.len(), 1);
        assert!(low[0].is_one());
    }

    #[test]
    fn g_values() {
        assert!(g_poly(0).is_one());
        assert!(g_poly(1).is_zero());
        assert!(g_poly(5).is_zero());
        assert_eq!(g_poly(6).to_string(), "w2^3 + w3^2");
        assert_eq!(g_poly(7).to_string(), "w2^2*w3");
        assert_eq!(g_poly(4).to_string(), "w2^2");
        assert_eq!(g_poly(12).to_string(), "w2^6 + w3^4");
        let w3 = parse_poly("w3", g_poly(0).table()).unwrap();
        assert_eq!(&w3 * &g_poly(4), g_poly(7));
    }

    #[test]
    fn g_is_wbar_mod_w1() {
        for r in 0..=200 {
            let reduced = wbar_closed(r).set_var_zero(0);
            let g = g_poly(r).rebase(reduced.table()).unwrap();
            assert_eq!(reduced, g, "r = {r}");
        }
    }

    #[test]
    fn fukaya_examples() {
        let f = fukaya_family(3).unwrap();
        let s: Vec<_> = f.iter().map(|p| p.to_string()).collect();
        assert_eq!(s, ["w2^3 + w3^2", "w2^2*w3", "w3^3"]);
        for t in 3..=8 {
            let f = fukaya_family(t).unwrap();
            assert_eq!(
                f[0].leading_monomial().unwrap().exponents(),
                &[(pow2(t - 1) - 1) as u16, 0]
            );
        }
        assert_eq!(fukaya_family(4).unwrap()[3].to_string(), "w3^7");
        assert_eq!(fukaya_family(2), Err(Error::UnsupportedT(2)));
    }
}
