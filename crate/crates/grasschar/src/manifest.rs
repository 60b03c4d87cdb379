//! The shipped claims manifest: one tab-separated line per claim with its
//! id, the statement checked, and the largest `t` it runs at.

use grasschar_core::verifier::CATALOG;

pub const MANIFEST: &str = include_str!("../claims.tsv");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestEntry {
    pub claim_id: String,
    pub statement: String,
    pub cap: u32,
}

pub fn parse(text: &str) -> Result<Vec<ManifestEntry>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        let [id, statement, cap] = fields.as_slice() else {
            return Err(format!("line {}: expected 3 tab-separated fields", i + 1));
        };
        let cap = cap
            .parse()
            .map_err(|_| format!("line {}: bad cap `{cap}`", i + 1))?;
        out.push(ManifestEntry {
            claim_id: id.to_string(),
            statement: statement.to_string(),
            cap,
        });
    }
    Ok(out)
}

/// Manifest text generated from the catalog.
pub fn render_catalog() -> String {
    let mut s = String::from("# claim_id\tstatement\tcap\n");
    for def in CATALOG {
        s.push_str(&format!("{}\t{}\t{}\n", def.id, def.statement, def.cap));
    }
    s
}

/// Differences between `entries` and the catalog, empty when they agree.
pub fn compare_with_catalog(entries: &[ManifestEntry]) -> Vec<String> {
    let mut problems = Vec::new();
    for def in CATALOG {
        match entries.iter().find(|e| e.claim_id == def.id) {
            None => problems.push(format!("{} missing from manifest", def.id)),
            Some(e) => {
                if e.cap != def.cap {
                    problems.push(format!(
                        "{}: cap {} in manifest, {} in catalog",
                        def.id, e.cap, def.cap
                    ));
                }
                if e.statement != def.statement {
                    problems.push(format!("{}: statement differs", def.id));
                }
            }
        }
    }
    for e in entries {
        if !CATALOG.iter().any(|d| d.id == e.claim_id) {
            problems.push(format!("{} in manifest but not in catalog", e.claim_id));
        }
    }
    problems
}
