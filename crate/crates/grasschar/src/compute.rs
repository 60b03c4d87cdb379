//! The `compute` subcommand: print polynomials, bases and dimension
//! vectors.

use std::sync::Arc;

use grasschar_core::grassmann::{
    g_poly, gysin_dims_with, wbar, Case, GbProvider, GrassmannParams, RingKey,
};
use grasschar_core::text::monomial_to_string;
use serde_json::json;

use crate::error::CliError;
use crate::report::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RingKind {
    Borel,
    #[value(name = "imageJ")]
    ImageJ,
    Oriented,
    K2,
}

/// Ring selection flags shared by `gb`, `basis` and `hilbert`.
#[derive(Clone, Debug, Default, clap::Args)]
pub struct RingArgs {
    #[arg(long, value_enum)]
    pub ring: Option<RingKind>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub t: Option<u32>,
    #[arg(long, value_parser = parse_case)]
    pub case: Option<Case>,
    #[arg(long, value_parser = parse_gamma)]
    pub gamma: Option<bool>,
}

pub fn parse_case(s: &str) -> Result<Case, String> {
    s.parse().map_err(|e: grasschar_core::Error| e.to_string())
}

pub fn parse_gamma(s: &str) -> Result<bool, String> {
    match s {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(format!("gamma must be 0 or 1, got `{s}`")),
    }
}

fn need<T>(v: Option<T>, flag: &str, ring: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for --ring {ring}")))
}

impl RingArgs {
    pub fn key(&self) -> Result<RingKey, CliError> {
        let ring = self
            .ring
            .ok_or_else(|| CliError::Usage("--ring is required".into()))?;
        let key = match ring {
            RingKind::Borel => RingKey::Borel {
                n: need(self.n, "n", "borel")?,
                k: self.k.unwrap_or(3),
            },
            RingKind::ImageJ => RingKey::ImageJ {
                n: need(self.n, "n", "imageJ")?,
            },
            RingKind::Oriented => RingKey::Oriented(GrassmannParams::new(
                need(self.t, "t", "oriented")?,
                self.case.unwrap_or(Case::Minus1),
                self.gamma.unwrap_or(false),
            )?),
            RingKind::K2 => RingKey::OrientedK2 {
                t: need(self.t, "t", "k2")?,
            },
        };
        key.validate()?;
        Ok(key)
    }
}

pub fn g(r: u32, format: Format) -> String {
    let p = g_poly(r);
    match format {
        Format::Text => p.to_string(),
        Format::Json => json!({ "r": r, "poly": p.to_string() }).to_string(),
    }
}

pub fn wbar_cmd(r: u32, k: u32, format: Format) -> Result<String, CliError> {
    let p = wbar(r, k)?;
    Ok(match format {
        Format::Text => p.to_string(),
        Format::Json => json!({ "r": r, "k": k, "poly": p.to_string() }).to_string(),
    })
}

pub fn gb(key: &RingKey, provider: &dyn GbProvider, format: Format) -> Result<String, CliError> {
    let gb = provider.groebner(key)?;
    let elements: Vec<String> = gb.elements().iter().map(|p| p.to_string()).collect();
    Ok(match format {
        Format::Text => elements.join("\n"),
        Format::Json => {
            json!({ "order": gb.table().to_string(), "elements": elements }).to_string()
        }
    })
}

pub fn basis(
    key: &RingKey,
    degree: u32,
    provider: &dyn GbProvider,
    format: Format,
) -> Result<String, CliError> {
    let mut ring = provider.quotient(key)?;
    let table = Arc::clone(ring.table());
    let monos: Vec<String> = ring
        .standard_monomials(degree)?
        .iter()
        .map(|m| monomial_to_string(&table, m))
        .collect();
    Ok(match format {
        Format::Text => monos.join("\n"),
        Format::Json => json!({ "degree": degree, "basis": monos }).to_string(),
    })
}

fn dims(values: &[usize], format: Format, field: &str) -> String {
    match format {
        Format::Text => values
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(","),
        Format::Json => json!({ field: values }).to_string(),
    }
}

pub fn hilbert(
    key: &RingKey,
    up_to: u32,
    provider: &dyn GbProvider,
    format: Format,
) -> Result<String, CliError> {
    let mut ring = provider.quotient(key)?;
    Ok(dims(&ring.hilbert_function(up_to)?, format, "hilbert"))
}

pub fn gysin(
    n: u32,
    k: u32,
    up_to: u32,
    provider: &dyn GbProvider,
    format: Format,
) -> Result<String, CliError> {
    Ok(dims(
        &gysin_dims_with(provider, n, k, up_to)?,
        format,
        "gysin",
    ))
}
