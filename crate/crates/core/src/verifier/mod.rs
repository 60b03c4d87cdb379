//! Named, parameterized checks of the computational statements about
//! `H*(G_{n,3})` and `H*(G~_{n,3})`, each producing a [`ClaimReport`].

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::grassmann::{Case, GbProvider, T_MAX, T_MIN};

mod claims;
pub mod tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    SkippedDegenerate,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedDegenerate => "skipped-degenerate",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameters a claim instance runs at. Field order is the report sort key.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClaimParams {
    pub t: u32,
    pub case: Option<Case>,
    pub gamma: Option<bool>,
    pub n: Option<u32>,
    pub extra: Option<String>,
}

impl ClaimParams {
    pub fn at(t: u32) -> Self {
        ClaimParams {
            t,
            case: None,
            gamma: None,
            n: None,
            extra: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim_id: String,
    pub params: ClaimParams,
    pub status: Status,
    /// Why a claim was skipped (`"cap"` or `"degenerate"`).
    pub reason: Option<String>,
    pub witnesses: Vec<Witness>,
    pub duration_ms: u64,
}

/// Which parameter combinations a claim runs at for each `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grid {
    PerT,
    PerGamma,
    PerCaseGamma,
}

#[derive(Clone, Copy, Debug)]
pub struct ClaimDef {
    pub id: &'static str,
    /// The mathematical statement being checked.
    pub statement: &'static str,
    /// Largest `t` the claim runs at; above it the claim is skipped.
    pub cap: u32,
    pub grid: Grid,
}

/// Every claim, sorted by id.
pub const CATALOG: &[ClaimDef] = &[
    ClaimDef { id: "basis-B", statement: "standard monomials of the minus1 ring = {a^r w2^b w3^c : r<2, for all i: b<2^{t-1}-2^i or c<2^i-1}", cap: 5, grid: Grid::PerGamma },
    ClaimDef { id: "eq-g-square", statement: "g_{2^t-4}^2 = w2^{2^t-4} = w2^{2^{t-2}-1} w3^{2^{t-1}-2} != 0 in Z2[w2,w3]/J_{2^t-1,3}", cap: 8, grid: Grid::PerT },
    ClaimDef { id: "fukaya-lm", statement: "LM(f_i) = w2^{2^{t-1}-2^i} w3^{2^i-1} for f_i = g_{2^t-3+2^i}, and f_{t-1} = w3^{2^{t-1}-1}", cap: 8, grid: Grid::PerT },
    ClaimDef { id: "fukaya-reduced-membership", statement: "f_i in J_{2^t-1,3} and LM(reduced GB of J_{2^t-1,3}) = {LM(f_i)}", cap: 8, grid: Grid::PerT },
    ClaimDef { id: "g-c-div-4", statement: "every monomial w2^b w3^c of g_{2^t-4} has 4 | c; LM(g_{2^t-4}) = w2^{2^{t-1}-2}", cap: 8, grid: Grid::PerT },
    ClaimDef { id: "g-recurrence", statement: "g_{r+3} = w2 g_{r+1} + w3 g_r; w3 g_{2^t-4} = g_{2^t-1}", cap: 8, grid: Grid::PerT },
    ClaimDef { id: "g-vanish", statement: "g_{2^t-3} = 0", cap: 8, grid: Grid::PerT },
    ClaimDef { id: "hilbert-vs-gysin", statement: "Hilbert function of the presented H*(G~_{n,3}) = Gysin count from H*(G_{n,3}) and w1", cap: 5, grid: Grid::PerCaseGamma },
    ClaimDef { id: "ideal-eq-2t", statement: "J_{2^t-1,3} = J_{2^t,3}", cap: 8, grid: Grid::PerT },
    ClaimDef { id: "k2-ring", statement: "in H*(G~_{2^t-2,2}): (b + mu w2^{2^{t-1}-2})^2 = b^2 != 0, w2^{2^t-4} = 0; Hilbert = Gysin count", cap: 5, grid: Grid::PerT },
    ClaimDef { id: "lemma-3.5", statement: "w2^{2^t-4-6k} w3^{4k} = 0 in Z2[w2,w3]/J_{2^t-1,3} for k>0, 2^t-4-6k>=0", cap: 8, grid: Grid::PerT },
    ClaimDef { id: "lemma-4.2-membership", statement: "w2^{2^t-4} in J_{2^t-2,3}", cap: 8, grid: Grid::PerT },
    ClaimDef { id: "poincare-palindrome", statement: "Hilbert function of the presented H*(G~_{n,3}) is palindromic about 3(n-3) and vanishes above", cap: 5, grid: Grid::PerCaseGamma },
    ClaimDef { id: "prop-3.2", statement: "ker w1 ∩ ker i* = 0 on H^{2^t-1}(G_{2^t,3}), i*: -> H^{2^t-1}(G_{2^t-1,3})", cap: 5, grid: Grid::PerT },
    ClaimDef { id: "prop-3.4", statement: "ker w1 ∩ ker j* = 0 on H^{2^t-4}(G_{2^t-1,3}), j*: -> H^{2^t-4}(G_{2^t-2,2})", cap: 5, grid: Grid::PerT },
    ClaimDef { id: "prop-3.6", statement: "a^3 = (1+gamma) a w2^{2^t-4} and a w2^{2^t-4} != 0 in the minus1 ring", cap: 5, grid: Grid::PerGamma },
    ClaimDef { id: "prop-4.1", statement: "ker w1 ∩ ker i* = 0 on H^{2^t-4}(G_{2^t-1,3}), i*: -> H^{2^t-4}(G_{2^t-2,3})", cap: 5, grid: Grid::PerT },
    ClaimDef { id: "prop-5.1", statement: "ker w1 ∩ ker i* = 0 on H^{2^t-4}(G_{2^t-2,3}), i*: -> H^{2^t-4}(G_{2^t-3,3})", cap: 5, grid: Grid::PerT },
    ClaimDef { id: "tables", statement: "coefficient tables for w1^4 w2^{2^{t-1}-2}, w1^3 w2^{2^{t-1}-3} w3, w1^3 w2^{2^{t-1}-3}, w1^{2^t-5} w2 in products with w̄_r", cap: 8, grid: Grid::PerT },
    ClaimDef { id: "top-class", statement: "top basis elements: w2^{2^{t-2}-1} w3^{2^{t-1}-2} in degree 2^{t+1}-8 of im p*, a w2^{2^{t-2}-1} w3^{2^{t-1}-2} in degree 3*2^t-12", cap: 5, grid: Grid::PerGamma },
    ClaimDef { id: "wbar-consistency", statement: "closed formula for w̄_r = recurrence (r <= 200); (1+w1+w2+w3) sum w̄_r = 1; w̄_r mod w1 = g_r", cap: 8, grid: Grid::PerT },
];

pub fn catalog() -> &'static [ClaimDef] {
    CATALOG
}

pub fn find_claim(id: &str) -> Result<&'static ClaimDef, Error> {
    CATALOG
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.into()))
}

/// Parameter instances of `def` at `t`, in report order.
pub fn param_grid(def: &ClaimDef, t: u32) -> Vec<ClaimParams> {
    let with = |case: Option<Case>, gamma: Option<bool>| {
        let n = case.map(|c| (1u32 << t) - c.offset());
        ClaimParams {
            t,
            case,
            gamma,
            n,
            extra: None,
        }
    };
    match def.grid {
        Grid::PerT => vec![ClaimParams::at(t)],
        Grid::PerGamma => vec![
            with(Some(Case::Minus1), Some(false)),
            with(Some(Case::Minus1), Some(true)),
        ],
        Grid::PerCaseGamma => Case::ALL
            .iter()
            .flat_map(|&c| [with(Some(c), Some(false)), with(Some(c), Some(true))])
            .collect(),
    }
}

/// Run one claim instance. `duration_ms` is left at 0 for the caller to
/// fill in.
pub fn run_claim(
    claim_id: &str,
    params: &ClaimParams,
    provider: &dyn GbProvider,
) -> Result<ClaimReport, Error> {
    let def = find_claim(claim_id)?;
    if !(T_MIN..=T_MAX).contains(&params.t) {
        return Err(Error::UnsupportedT(params.t));
    }
    let mut report = ClaimReport {
        claim_id: def.id.to_string(),
        params: params.clone(),
        status: Status::Pass,
        reason: None,
        witnesses: Vec::new(),
        duration_ms: 0,
    };
    if params.t > def.cap {
        report.status = Status::SkippedDegenerate;
        report.reason = Some("cap".into());
        return Ok(report);
    }
    let mut out = claims::Outcome::default();
    if let Err(e) = claims::run(def.id, params, provider, &mut out) {
        out.fail("error", e.to_string());
    }
    report.status = out.status();
    report.reason = out.reason.clone();
    report.witnesses = out.witnesses;
    Ok(report)
}

pub fn check_range(t_min: u32, t_max: u32) -> Result<(), Error> {
    if !(T_MIN..=T_MAX).contains(&t_min) {
        return Err(Error::UnsupportedT(t_min));
    }
    if !(T_MIN..=T_MAX).contains(&t_max) {
        return Err(Error::UnsupportedT(t_max));
    }
    if t_min > t_max {
        return Err(Error::InvalidParams(alloc::format!(
            "empty range {t_min}..{t_max}"
        )));
    }
    Ok(())
}

/// Every `(claim, params)` instance for `t` in `t_min..=t_max`, sorted by
/// `(claim_id, t, case, gamma)`.
pub fn instances(
    t_min: u32,
    t_max: u32,
    filter: Option<&str>,
) -> Result<Vec<(&'static ClaimDef, ClaimParams)>, Error> {
    check_range(t_min, t_max)?;
    if let Some(id) = filter {
        find_claim(id)?;
    }
    let mut out = Vec::new();
    for def in CATALOG.iter().filter(|d| filter.is_none_or(|f| f == d.id)) {
        for t in t_min..=t_max {
            for p in param_grid(def, t) {
                out.push((def, p));
            }
        }
    }
    out.sort_by(|a, b| (a.0.id, &a.1).cmp(&(b.0.id, &b.1)));
    Ok(out)
}

pub fn run_all(
    t_min: u32,
    t_max: u32,
    provider: &dyn GbProvider,
) -> Result<Vec<ClaimReport>, Error> {
    instances(t_min, t_max, None)?
        .into_iter()
        .map(|(def, p)| run_claim(def.id, &p, provider))
        .collect()
}
