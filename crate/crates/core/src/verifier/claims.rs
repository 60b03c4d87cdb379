use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{tables, ClaimParams, Status, Witness};
use crate::error::Error;
use crate::grassmann::{
    fukaya_family, g_poly, gysin_dims_with, kernel_intersection, mult_w1, pow2, restriction_map,
    wbar_closed, wbar_sequence, Case, GbProvider, GrassmannParams, RestrictionKind, RingKey,
};
use crate::groebner::{ideal_member, ideals_equal, normal_form, GradedQuotient};
use crate::monomial::Monomial;
use crate::poly::PolyGF2;
use crate::text::monomial_to_string;
use crate::vars::VariableTable;

/// Upper end of the index ranges checked by the sequence identities.
const SEQUENCE_RANGE: u32 = 200;

#[derive(Default)]
pub(super) struct Outcome {
    pub witnesses: Vec<Witness>,
    pub failed: bool,
    pub reason: Option<String>,
}

impl Outcome {
    fn note(&mut self, label: impl Into<String>, value: impl Into<String>) {
        self.witnesses.push(Witness {
            label: label.into(),
            value: value.into(),
        });
    }

    pub(super) fn fail(&mut self, label: impl Into<String>, value: impl Into<String>) {
        self.failed = true;
        self.note(label, value);
    }

    fn check(&mut self, ok: bool, label: impl Into<String>, value: impl Into<String>) {
        if ok {
            self.note(label, value);
        } else {
            self.fail(label, value);
        }
    }

    fn skip(&mut self, reason: &str) {
        self.reason = Some(reason.into());
    }

    pub(super) fn status(&self) -> Status {
        if self.failed {
            Status::Fail
        } else if self.reason.is_some() {
            Status::SkippedDegenerate
        } else {
            Status::Pass
        }
    }
}

pub(super) fn run(
    id: &str,
    p: &ClaimParams,
    provider: &dyn GbProvider,
    out: &mut Outcome,
) -> Result<(), Error> {
    let t = p.t;
    match id {
        "wbar-consistency" => wbar_consistency(t, out),
        "g-recurrence" => g_recurrence(t, out),
        "g-vanish" => {
            let g = g_poly(pow2(t) - 3);
            out.check(g.is_zero(), "g_{2^t-3}", g.to_string());
            Ok(())
        }
        "g-c-div-4" => g_c_div_4(t, out),
        "fukaya-lm" => fukaya_lm(t, out),
        "fukaya-reduced-membership" => fukaya_membership(t, provider, out),
        "ideal-eq-2t" => {
            let a = provider.groebner(&RingKey::ImageJ { n: pow2(t) - 1 })?;
            let b = provider.groebner(&RingKey::ImageJ { n: pow2(t) })?;
            out.check(
                ideals_equal(&a, &b)?,
                "J_{2^t-1,3} = J_{2^t,3}",
                format!("{} reduced basis elements each", a.len()),
            );
            Ok(())
        }
        "lemma-3.5" => lemma_3_5(t, provider, out),
        "eq-g-square" => eq_g_square(t, provider, out),
        "lemma-4.2-membership" => {
            let gb = provider.groebner(&RingKey::ImageJ { n: pow2(t) - 2 })?;
            let w = w23(pow2(t) - 4, 0);
            out.check(
                ideal_member(&w, &gb)?,
                "w2^{2^t-4} in J_{2^t-2,3}",
                w.to_string(),
            );
            Ok(())
        }
        "prop-3.2" => kernel_claim(
            out,
            provider,
            RingKey::Borel { n: pow2(t), k: 3 },
            RingKey::Borel {
                n: pow2(t) - 1,
                k: 3,
            },
            RestrictionKind::IStar,
            pow2(t) - 1,
        ),
        "prop-3.4" => kernel_claim(
            out,
            provider,
            RingKey::Borel {
                n: pow2(t) - 1,
                k: 3,
            },
            RingKey::Borel {
                n: pow2(t) - 2,
                k: 2,
            },
            RestrictionKind::JStar,
            pow2(t) - 4,
        ),
        "prop-4.1" => kernel_claim(
            out,
            provider,
            RingKey::Borel {
                n: pow2(t) - 1,
                k: 3,
            },
            RingKey::Borel {
                n: pow2(t) - 2,
                k: 3,
            },
            RestrictionKind::IStar,
            pow2(t) - 4,
        ),
        "prop-5.1" => kernel_claim(
            out,
            provider,
            RingKey::Borel {
                n: pow2(t) - 2,
                k: 3,
            },
            RingKey::Borel {
                n: pow2(t) - 3,
                k: 3,
            },
            RestrictionKind::IStar,
            pow2(t) - 4,
        ),
        "prop-3.6" => prop_3_6(oriented_params(p)?, provider, out),
        "basis-B" => basis_b(oriented_params(p)?, provider, out),
        "top-class" => top_class(oriented_params(p)?, provider, out),
        "hilbert-vs-gysin" => hilbert_vs_gysin(oriented_params(p)?, provider, out),
        "poincare-palindrome" => palindrome(oriented_params(p)?, provider, out),
        "k2-ring" => k2_ring(t, provider, out),
        "tables" => {
            for row in tables::table_rows(t) {
                let got = row.compute();
                out.check(
                    got == row.expected,
                    format!("{} {}", row.table, row.label),
                    format!("{} (expected {})", u8::from(got), u8::from(row.expected)),
                );
            }
            Ok(())
        }
        _ => Err(Error::UnknownClaim(id.into())),
    }
}

fn oriented_params(p: &ClaimParams) -> Result<GrassmannParams, Error> {
    GrassmannParams::new(
        p.t,
        p.case.unwrap_or(Case::Minus1),
        p.gamma.unwrap_or(false),
    )
}

fn w23_table() -> Arc<VariableTable> {
    Arc::new(VariableTable::w2_w3())
}

fn w23(b: u32, c: u32) -> PolyGF2 {
    PolyGF2::monomial(&w23_table(), Monomial::new(&[b as u16, c as u16]))
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn wbar_consistency(t: u32, out: &mut Outcome) -> Result<(), Error> {
    let max = SEQUENCE_RANGE.max(pow2(t));
    let seq = wbar_sequence(max, 3)?;
    let w2w3 = w23_table();
    let mut bad_closed = None;
    let mut bad_mod = None;
    for r in 0..=max {
        let closed = wbar_closed(r);
        if bad_closed.is_none() && closed != seq[r as usize] {
            bad_closed = Some((r, closed.clone()));
        }
        if bad_mod.is_none() && closed.set_var_zero(0).rebase(&w2w3)? != g_poly(r) {
            bad_mod = Some(r);
        }
    }
    match bad_closed {
        None => out.note("closed = recurrence", format!("r <= {max}")),
        Some((r, w)) => out.fail(format!("closed formula at r = {r}"), w.to_string()),
    }
    match bad_mod {
        None => out.note("w̄_r mod w1 = g_r", format!("r <= {max}")),
        Some(r) => out.fail(format!("w̄_r mod w1 at r = {r}"), g_poly(r).to_string()),
    }
    Ok(())
}

fn g_recurrence(t: u32, out: &mut Outcome) -> Result<(), Error> {
    let max = SEQUENCE_RANGE.max(pow2(t));
    let tab = w23_table();
    let w2 = PolyGF2::var(&tab, "w2")?;
    let w3 = PolyGF2::var(&tab, "w3")?;
    let g: Vec<PolyGF2> = (0..=max + 3).map(g_poly).collect();
    let bad = (0..=max as usize).find(|&r| g[r + 3] != &(&w2 * &g[r + 1]) + &(&w3 * &g[r]));
    match bad {
        None => out.note("g_{r+3} = w2 g_{r+1} + w3 g_r", format!("r <= {max}")),
        Some(r) => out.fail(format!("recurrence at r = {r}"), g[r + 3].to_string()),
    }
    let lhs = &w3 * &g_poly(pow2(t) - 4);
    let rhs = g_poly(pow2(t) - 1);
    out.check(lhs == rhs, "w3 g_{2^t-4} = g_{2^t-1}", rhs.to_string());
    Ok(())
}

fn g_c_div_4(t: u32, out: &mut Outcome) -> Result<(), Error> {
    let g = g_poly(pow2(t) - 4);
    let tab = g.table().clone();
    let bad: Vec<String> = g
        .terms()
        .iter()
        .filter(|m| m.exponent(1) % 4 != 0)
        .map(|m| monomial_to_string(&tab, m))
        .collect();
    if bad.is_empty() {
        out.note(
            "g_{2^t-4}",
            format!("{} terms, all w3 exponents divisible by 4", g.len()),
        );
    } else {
        out.fail("terms with w3 exponent not divisible by 4", bad.join(" + "));
    }
    let lm = w23(pow2(t - 1) - 2, 0);
    out.check(
        g.leading_monomial() == lm.leading_monomial(),
        "LM(g_{2^t-4})",
        g.leading_monomial()
            .map_or("0".into(), |m| monomial_to_string(&tab, m)),
    );
    Ok(())
}

fn fukaya_lm(t: u32, out: &mut Outcome) -> Result<(), Error> {
    match fukaya_family(t) {
        Ok(family) => {
            for (i, f) in family.iter().enumerate() {
                let lm = f.leading_monomial().expect("nonzero");
                out.note(format!("LM(f_{i})"), monomial_to_string(f.table(), lm));
            }
            out.note(format!("f_{}", t - 1), family[t as usize - 1].to_string());
            Ok(())
        }
        Err(Error::Assertion(m)) => {
            out.fail("family", m);
            Ok(())
        }
        Err(e) => Err(e),
    }
}

fn fukaya_membership(t: u32, provider: &dyn GbProvider, out: &mut Outcome) -> Result<(), Error> {
    let gb = provider.groebner(&RingKey::ImageJ { n: pow2(t) - 1 })?;
    let family: Vec<PolyGF2> = (0..t).map(|i| g_poly(pow2(t) - 3 + pow2(i))).collect();
    for (i, f) in family.iter().enumerate() {
        if !ideal_member(f, &gb)? {
            out.fail(format!("f_{i} not in J_{{2^t-1,3}}"), f.to_string());
        }
    }
    let gb_lms: BTreeSet<Monomial> = gb.leading_monomials().iter().copied().collect();
    let fam_lms: BTreeSet<Monomial> = family
        .iter()
        .filter_map(|f| f.leading_monomial().copied())
        .collect();
    out.check(
        gb_lms == fam_lms,
        "LM(reduced basis)",
        crate::groebner::describe_leading(&gb),
    );
    let cube = Monomial::new(&[0, (pow2(t - 1) - 1) as u16]);
    out.check(
        gb.elements().contains(&PolyGF2::monomial(gb.table(), cube)),
        "monomial element",
        monomial_to_string(gb.table(), &cube),
    );
    let gb_set: BTreeSet<&PolyGF2> = gb.elements().iter().collect();
    let fam_set: BTreeSet<&PolyGF2> = family.iter().collect();
    let reduced = gb_set == fam_set;
    if t == 3 {
        out.check(
            reduced,
            "family is the reduced basis",
            gb.to_text().replace('\n', "; "),
        );
    } else {
        out.note(
            "family is the reduced basis",
            if reduced { "yes" } else { "no" },
        );
    }
    Ok(())
}

fn lemma_3_5(t: u32, provider: &dyn GbProvider, out: &mut Outcome) -> Result<(), Error> {
    let top = pow2(t) - 4;
    let ks: Vec<u32> = (1..).take_while(|k| 6 * k <= top).collect();
    if ks.is_empty() {
        out.note("k range", format!("empty: 2^t-4-6 < 0 at t = {t}"));
        out.skip("degenerate");
        return Ok(());
    }
    let gb = provider.groebner(&RingKey::ImageJ { n: pow2(t) - 1 })?;
    for k in ks {
        let m = w23(top - 6 * k, 4 * k);
        let nf = normal_form(&m, &gb)?;
        out.check(nf.is_zero(), format!("NF({m})"), nf.to_string());
    }
    Ok(())
}

fn eq_g_square(t: u32, provider: &dyn GbProvider, out: &mut Outcome) -> Result<(), Error> {
    let gb = provider.groebner(&RingKey::ImageJ { n: pow2(t) - 1 })?;
    let lhs = normal_form(&g_poly(pow2(t) - 4).square()?, &gb)?;
    let rhs = normal_form(&w23(pow2(t) - 4, 0), &gb)?;
    out.check(lhs == rhs, "NF(g_{2^t-4}^2)", lhs.to_string());
    out.check(!rhs.is_zero(), "NF(w2^{2^t-4})", rhs.to_string());
    let top = w23(pow2(t - 2) - 1, pow2(t - 1) - 2);
    out.check(
        rhs == top,
        "w2^{2^t-4} = w2^{2^{t-2}-1} w3^{2^{t-1}-2}",
        top.to_string(),
    );
    Ok(())
}

fn kernel_claim(
    out: &mut Outcome,
    provider: &dyn GbProvider,
    source: RingKey,
    target: RingKey,
    kind: RestrictionKind,
    degree: u32,
) -> Result<(), Error> {
    let mut src = provider.quotient(&source)?;
    src.seal_to(degree + 1)?;
    let mut tgt = provider.quotient(&target)?;
    tgt.seal_to(degree)?;
    let mut f = mult_w1(&src)?;
    let mut g = restriction_map(kind, &src, &tgt)?;
    out.note("source dimension", src.dim(degree)?.to_string());
    out.note("rank w1", f.matrix(degree)?.rank().to_string());
    out.note("rank restriction", g.matrix(degree)?.rank().to_string());
    let kernel = kernel_intersection(&mut f, &mut g, degree)?;
    out.check(
        kernel.is_empty(),
        "kernel",
        format!("kernel dimension {} in degree {degree}", kernel.len()),
    );
    for x in kernel {
        out.fail("kernel element", x.to_string());
    }
    Ok(())
}

fn oriented(params: GrassmannParams, provider: &dyn GbProvider) -> Result<GradedQuotient, Error> {
    provider.quotient(&RingKey::Oriented(params))
}

fn prop_3_6(
    params: GrassmannParams,
    provider: &dyn GbProvider,
    out: &mut Outcome,
) -> Result<(), Error> {
    let ring = oriented(params, provider)?;
    let tab = ring.table().clone();
    let a = PolyGF2::var(&tab, "a")?;
    let w2 = PolyGF2::var(&tab, "w2")?;
    let a3 = ring.normal_form(&a.checked_pow(3)?)?;
    let aw = ring.normal_form(&(&a * &w2.checked_pow(pow2(params.t) - 4)?))?;
    out.check(!aw.is_zero(), "NF(a w2^{2^t-4})", aw.to_string());
    let expected = if params.gamma {
        PolyGF2::zero(&tab)
    } else {
        aw.clone()
    };
    out.check(a3 == expected, "NF(a^3)", format!("NF(a^3) = {a3}"));
    Ok(())
}

/// Exponent pairs `(b, c)` with `w2^b w3^c` outside every `LM(f_i)`.
fn set_b_pairs(t: u32) -> Vec<(u32, u32)> {
    let h = pow2(t - 1);
    let mut pairs = Vec::new();
    for b in 0..h {
        for c in 0..h {
            if (0..t).all(|i| b < h - pow2(i) || c + 1 < pow2(i)) {
                pairs.push((b, c));
            }
        }
    }
    pairs
}

fn basis_b(
    params: GrassmannParams,
    provider: &dyn GbProvider,
    out: &mut Outcome,
) -> Result<(), Error> {
    let mut ring = oriented(params, provider)?;
    let top = params.manifold_dim();
    let ad = params.a_degree();
    let mut expected: BTreeSet<Monomial> = BTreeSet::new();
    for (b, c) in set_b_pairs(params.t) {
        for r in 0..2u16 {
            expected.insert(Monomial::new(&[r, b as u16, c as u16]));
        }
    }
    let mut actual = BTreeSet::new();
    for d in 0..=top + ad {
        actual.extend(ring.standard_monomials(d)?.iter().copied());
    }
    let tab = ring.table().clone();
    let missing: Vec<String> = expected
        .difference(&actual)
        .map(|m| monomial_to_string(&tab, m))
        .collect();
    let extra: Vec<String> = actual
        .difference(&expected)
        .map(|m| monomial_to_string(&tab, m))
        .collect();
    if !missing.is_empty() {
        out.fail("in B but reducible", missing.join(", "));
    }
    if !extra.is_empty() {
        out.fail("standard but not in B", extra.join(", "));
    }
    out.note("|B|", expected.len().to_string());
    Ok(())
}

fn top_class(
    params: GrassmannParams,
    provider: &dyn GbProvider,
    out: &mut Outcome,
) -> Result<(), Error> {
    let t = params.t;
    let mut ring = oriented(params, provider)?;
    let top = params.manifold_dim();
    let tab = ring.table().clone();
    let expected = Monomial::new(&[1, (pow2(t - 2) - 1) as u16, (pow2(t - 1) - 2) as u16]);
    let basis = ring.standard_monomials(top)?.to_vec();
    let shown = basis
        .iter()
        .map(|m| monomial_to_string(&tab, m))
        .collect::<Vec<_>>()
        .join(", ");
    out.check(basis == [expected], format!("basis in degree {top}"), shown);
    for d in top + 1..=top + params.a_degree() {
        let dim = ring.standard_monomials(d)?.len();
        if dim != 0 {
            out.fail(format!("dimension in degree {d}"), dim.to_string());
        }
    }

    let mut image = provider.quotient(&RingKey::ImageJ { n: pow2(t) - 1 })?;
    let itop = pow2(t + 1) - 8;
    let itab = image.table().clone();
    let iexpected = Monomial::new(&[(pow2(t - 2) - 1) as u16, (pow2(t - 1) - 2) as u16]);
    let ibasis = image.standard_monomials(itop)?.to_vec();
    let shown = ibasis
        .iter()
        .map(|m| monomial_to_string(&itab, m))
        .collect::<Vec<_>>()
        .join(", ");
    out.check(
        ibasis == [iexpected],
        format!("image basis in degree {itop}"),
        shown,
    );
    // Standard monomials of the image ring have b, c < 2^{t-1}.
    let bound = 5 * (pow2(t - 1) - 1);
    for d in itop + 1..=bound {
        let dim = image.standard_monomials(d)?.len();
        if dim != 0 {
            out.fail(format!("image dimension in degree {d}"), dim.to_string());
        }
    }
    let nf = image.normal_form(&w23(pow2(t) - 4, 0))?;
    out.check(
        nf == PolyGF2::monomial(&itab, iexpected),
        "NF(w2^{2^t-4})",
        nf.to_string(),
    );
    Ok(())
}

fn hilbert_vs_gysin(
    params: GrassmannParams,
    provider: &dyn GbProvider,
    out: &mut Outcome,
) -> Result<(), Error> {
    let top = params.manifold_dim();
    let mut ring = oriented(params, provider)?;
    let hilbert = ring.hilbert_function(top)?;
    let gysin = gysin_dims_with(provider, params.n(), 3, top)?;
    out.note("total", hilbert.iter().sum::<usize>().to_string());
    out.check(hilbert == gysin, "hilbert", join(&hilbert));
    if hilbert != gysin {
        out.fail("gysin", join(&gysin));
    }
    Ok(())
}

fn palindrome(
    params: GrassmannParams,
    provider: &dyn GbProvider,
    out: &mut Outcome,
) -> Result<(), Error> {
    let top = params.manifold_dim();
    let mut ring = oriented(params, provider)?;
    let hilbert = ring.hilbert_function(top + params.a_degree())?;
    let (body, above) = hilbert.split_at(top as usize + 1);
    let reversed: Vec<usize> = body.iter().rev().copied().collect();
    out.check(
        body == reversed.as_slice(),
        format!("hilbert up to {top}"),
        join(body),
    );
    out.check(
        above.iter().all(|&d| d == 0),
        format!("hilbert above {top}"),
        join(above),
    );
    Ok(())
}

fn k2_ring(t: u32, provider: &dyn GbProvider, out: &mut Outcome) -> Result<(), Error> {
    let mut ring = provider.quotient(&RingKey::OrientedK2 { t })?;
    let tab = ring.table().clone();
    let b = PolyGF2::var(&tab, "b")?;
    let w2 = PolyGF2::var(&tab, "w2")?;
    let b2 = ring.normal_form(&b.square()?)?;
    out.check(!b2.is_zero(), "NF(b^2)", b2.to_string());
    let shifted = &b + &w2.checked_pow(pow2(t - 1) - 2)?;
    let s2 = ring.normal_form(&shifted.square()?)?;
    out.check(s2 == b2, "NF((b + w2^{2^{t-1}-2})^2)", s2.to_string());
    let w = ring.normal_form(&w2.checked_pow(pow2(t) - 4)?)?;
    out.check(w.is_zero(), "NF(w2^{2^t-4})", w.to_string());
    let top = 2 * (pow2(t) - 4);
    let hilbert = ring.hilbert_function(top)?;
    let gysin = gysin_dims_with(provider, pow2(t) - 2, 2, top)?;
    out.check(hilbert == gysin, "hilbert", join(&hilbert));
    if hilbert != gysin {
        out.fail("gysin", join(&gysin));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_b_at_t3() {
        // Complement of the ideal (w2^3, w2^2 w3, w3^3) in Z2[w2, w3].
        let pairs = set_b_pairs(3);
        assert_eq!(
            pairs,
            [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0)]
        );
    }
}
