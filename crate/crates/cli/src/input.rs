//! Relation ingestion: a JSON document or a labelled CSV matrix, both with
//! exact degree strings, plus the canonical emitter.

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use frl_core::{Degree, FuzzyRelation, Universe};

/// Serialized form of a fuzzy relation: universe labels plus a square grid
/// of degree strings (decimal or rational, converted exactly).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationDocument {
    pub universe: Vec<String>,
    pub mu: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl RelationDocument {
    pub fn to_relation(&self) -> Result<FuzzyRelation> {
        let universe = Universe::new(self.universe.iter().cloned())?;
        let n = universe.len();
        if self.mu.len() != n {
            bail!("matrix has {} rows, universe has {} elements", self.mu.len(), n);
        }
        let mut rows = Vec::with_capacity(n);
        for (i, row) in self.mu.iter().enumerate() {
            if row.len() != n {
                bail!("row {} has {} entries, expected {}", i + 1, row.len(), n);
            }
            let parsed: Result<Vec<Degree>, frl_core::Error> =
                row.iter().map(|s| s.parse()).collect();
            rows.push(parsed.with_context(|| format!("in row {}", i + 1))?);
        }
        Ok(FuzzyRelation::new(universe, rows)?)
    }

    /// The canonical document of a relation: reduced rational degrees.
    pub fn from_relation(relation: &FuzzyRelation, name: Option<String>) -> Self {
        let universe = relation.universe();
        let n = universe.len();
        let mu = (0..n)
            .map(|x| (0..n).map(|y| relation.degree(x, y).to_string()).collect())
            .collect();
        RelationDocument {
            universe: universe.labels().to_vec(),
            mu,
            name,
        }
    }
}

/// Parses a relation from JSON (sniffed by a leading `{`) or from CSV with
/// a label header row and label-prefixed data rows.
pub fn parse_relation(text: &str) -> Result<(FuzzyRelation, Option<String>)> {
    let document = if text.trim_start().starts_with('{') {
        serde_json::from_str::<RelationDocument>(text).context("invalid relation document")?
    } else {
        parse_csv(text)?
    };
    let relation = document.to_relation()?;
    Ok((relation, document.name))
}

/// Emits the canonical JSON document; parsing it back reproduces the
/// relation exactly.
pub fn emit_relation(relation: &FuzzyRelation, name: Option<String>) -> String {
    let document = RelationDocument::from_relation(relation, name);
    let mut text = serde_json::to_string_pretty(&document).expect("plain data serializes");
    text.push('\n');
    text
}

fn parse_csv(text: &str) -> Result<RelationDocument> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut records: Vec<Vec<String>> = Vec::new();
    for record in reader.records() {
        let record = record.context("invalid CSV")?;
        let cells: Vec<String> = record.iter().map(str::to_string).collect();
        if !cells.iter().all(String::is_empty) {
            records.push(cells);
        }
    }
    let Some((header, data)) = records.split_first() else {
        bail!("empty CSV input");
    };
    let n = data.len();
    // header is either the n labels, or a corner cell followed by them
    let labels: Vec<String> = if header.len() == n + 1 {
        header[1..].to_vec()
    } else if header.len() == n {
        header.clone()
    } else {
        bail!(
            "CSV header has {} cells but there are {} data rows",
            header.len(),
            n
        );
    };
    let mut mu = Vec::with_capacity(n);
    for (i, row) in data.iter().enumerate() {
        if row.len() != n + 1 {
            bail!(
                "CSV row {} has {} cells, expected a label plus {} entries",
                i + 2,
                row.len(),
                n
            );
        }
        if row[0] != labels[i] {
            bail!(
                "CSV row {} is labelled {:?} but the header says {:?}",
                i + 2,
                row[0],
                labels[i]
            );
        }
        mu.push(row[1..].to_vec());
    }
    Ok(RelationDocument {
        universe: labels,
        mu,
        name: None,
    })
}

/// Splits a comma-separated label list into a crisp set over `universe`.
pub fn parse_set(
    universe: &std::sync::Arc<Universe>,
    spec: &str,
) -> Result<frl_core::CrispSet> {
    let labels: Vec<&str> = spec
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    frl_core::CrispSet::from_labels(std::sync::Arc::clone(universe), labels)
        .map_err(|e| anyhow!(e))
}
