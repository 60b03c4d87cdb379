//! Runs catalog claims in report order and times each one.

use std::time::Instant;

use grasschar_core::grassmann::GbProvider;
use grasschar_core::verifier::{instances, run_claim, ClaimReport};
use grasschar_core::Error;

/// Run every instance of `claim` (or of all claims) for `t` in
/// `t_min..=t_max`, calling `emit` on each report as it completes.
pub fn run(
    t_min: u32,
    t_max: u32,
    claim: Option<&str>,
    provider: &dyn GbProvider,
    mut emit: impl FnMut(&ClaimReport),
) -> Result<Vec<ClaimReport>, Error> {
    let mut reports = Vec::new();
    for (def, params) in instances(t_min, t_max, claim)? {
        let start = Instant::now();
        let mut report = run_claim(def.id, &params, provider)?;
        report.duration_ms = start.elapsed().as_millis() as u64;
        emit(&report);
        reports.push(report);
    }
    Ok(reports)
}
