//! Bounded searches around two open questions: whether every monomial
//! A-graded ideal is coherent when `n - d <= 2`, and which subdivisions
//! occur as radicals.

use std::collections::BTreeMap;

use aga_core::census::{enumerate_mono_agas, CensusOptions};
use aga_core::coherence::classify;
use aga_core::grading::GradingSet;
use aga_core::structure::{radical_mono, stanley_components, stanley_monomial_part, subdivision_of};
use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cli::Failure;
use crate::io;

/// Largest entry the coherence scan accepts.
pub const MAX_SCAN_ENTRY: u64 = 40;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    /// Three-element `A` in a range: count incoherent monomial A-graded ideals.
    CoherenceNd2,
    /// Subdivisions of one `A` arising from radicals of its monomial A-graded ideals.
    SubdivisionRealization,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub label: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub kind: String,
    pub scanned: usize,
    pub findings: Vec<Finding>,
    pub summary: String,
}

impl ScanReport {
    pub fn text(&self) -> String {
        let mut s: String = self.findings.iter().map(|f| format!("{}\t{}\n", f.label, f.detail)).collect();
        s.push_str(&format!("# {}\n", self.summary));
        s
    }

    pub fn json(&self) -> Value {
        let f: Vec<Value> = self.findings.iter().map(|f| json!({ "label": f.label, "detail": f.detail })).collect();
        json!({ "kind": self.kind, "scanned": self.scanned, "findings": f, "summary": self.summary })
    }
}

pub fn run(kind: ScanKind, min_entry: u64, max_entry: u64, grading: Option<&str>) -> Result<ScanReport, Failure> {
    match kind {
        ScanKind::CoherenceNd2 => coherence_nd2(min_entry.max(1), max_entry),
        ScanKind::SubdivisionRealization => {
            let Some(g) = grading else {
                return Err(Failure::Usage("subdivision-realization needs --grading".into()));
            };
            subdivision_realization(&io::parse_grading(g)?)
        }
    }
}

/// Every `{a < b < c}` in `[lo, hi]`; incoherent counts are reported per set.
pub fn coherence_nd2(lo: u64, hi: u64) -> Result<ScanReport, Failure> {
    if hi > MAX_SCAN_ENTRY {
        return Err(Failure::Usage(format!("range guard: entries must not exceed {MAX_SCAN_ENTRY}")));
    }
    let mut sets = Vec::new();
    for a in lo..=hi {
        for b in a + 1..=hi {
            for c in b + 1..=hi {
                sets.push([a, b, c]);
            }
        }
    }
    let classes = sets
        .par_iter()
        .map(|t| Ok((t, classify(&GradingSet::one_dim(t)?)?)))
        .collect::<Result<Vec<_>, aga_core::error::Error>>()?;
    let mut findings = Vec::new();
    let (mut members, mut incoherent) = (0, 0);
    for (t, c) in &classes {
        members += c.census;
        incoherent += c.incoherent;
        if c.incoherent > 0 {
            findings.push(Finding {
                label: format!("{{{},{},{}}}", t[0], t[1], t[2]),
                detail: format!("{} of {} monomial A-graded ideals incoherent", c.incoherent, c.census),
            });
        }
    }
    Ok(ScanReport {
        kind: "coherence-nd2".into(),
        scanned: sets.len(),
        summary: format!("{} sets, {members} monomial A-graded ideals, {incoherent} incoherent", sets.len()),
        findings,
    })
}

/// Group the census by subdivision; a subdivision is realized when some
/// member's radical equals its Stanley ideal.
pub fn subdivision_realization(a: &GradingSet) -> Result<ScanReport, Failure> {
    let census = enumerate_mono_agas(a, &CensusOptions::default())?;
    let mut groups: BTreeMap<String, (usize, bool)> = BTreeMap::new();
    for sel in &census.selections {
        let sub = subdivision_of(&sel.ideal)?;
        let monomial = stanley_components(&sub)?.iter().all(|c| c.binomials().next().is_none());
        let realized = monomial && stanley_monomial_part(&sub)? == radical_mono(&sel.ideal);
        let key = sub.maximal_cells.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        let e = groups.entry(key).or_insert((0, false));
        e.0 += 1;
        e.1 |= realized;
    }
    let realized = groups.values().filter(|g| g.1).count();
    let findings = groups
        .iter()
        .map(|(cells, (count, ok))| Finding {
            label: cells.clone(),
            detail: format!("{count} ideals, radical equals Stanley ideal: {ok}"),
        })
        .collect();
    Ok(ScanReport {
        kind: "subdivision-realization".into(),
        scanned: census.len(),
        summary: format!(
            "{} monomial A-graded ideals, {} subdivisions, {realized} realized",
            census.len(),
            groups.len()
        ),
        findings,
    })
}
