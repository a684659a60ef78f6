//! Job configuration: an optional JSON file overridden by command-line flags.

use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use cellkit::coxeter::DEFAULT_CAP;
use cellkit::{CoxeterMatrix, CoxeterSystem, Element, WeightFunction};
use clap::ValueEnum;
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum SideArg {
    Left,
    Right,
    TwoSided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum VariantArg {
    Vogan,
    Delta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum LambdaArg {
    RPi,
    LeftCell,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Preset(String),
    Matrix { matrix: Vec<Vec<u32>> },
}

/// Every field is optional; flags take precedence.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub group: Option<GroupSpec>,
    pub weights: Option<Vec<i64>>,
    pub cap: Option<usize>,
    pub jobs: Option<usize>,
    pub format: Option<Format>,
    pub side: Option<SideArg>,
    pub variant: Option<VariantArg>,
    pub lambda: Option<LambdaArg>,
    /// 1-based generator pair.
    pub pair: Option<Vec<usize>>,
    pub element: Option<String>,
    pub strong: Option<bool>,
}

impl JobConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
    }
}

/// A validated group together with its weights.
pub struct Job {
    pub name: String,
    pub group: Arc<CoxeterSystem>,
    pub weights: WeightFunction,
}

impl Job {
    pub fn build(spec: &GroupSpec, weights: Option<&[i64]>, cap: Option<usize>) -> Result<Self> {
        let (name, matrix) = match spec {
            GroupSpec::Preset(name) => (name.clone(), CoxeterMatrix::preset(name).map_err(|e| anyhow!("group: {e}"))?),
            GroupSpec::Matrix { matrix } => ("custom".to_string(), CoxeterMatrix::new(matrix.clone()).map_err(|e| anyhow!("group.matrix: {e}"))?),
        };
        let group = CoxeterSystem::build(matrix, cap.unwrap_or(DEFAULT_CAP)).map_err(|e| anyhow!("group: {e}"))?;
        let weights = match weights {
            Some(w) => WeightFunction::new(group.matrix(), w).map_err(|e| anyhow!("weights: {e}"))?,
            None => WeightFunction::equal(group.rank()),
        };
        Ok(Self {
            name,
            group: Arc::new(group),
            weights,
        })
    }

    pub fn element(&self, text: &str) -> Result<Element> {
        self.group
            .parse_word(text)
            .ok_or_else(|| anyhow!("element: cannot parse {text:?} as a word in s1..s{}", self.group.rank()))
    }

    /// Converts a 1-based pair into 0-based generator indices.
    pub fn pair(&self, pair: &[usize]) -> Result<(usize, usize)> {
        let n = self.group.rank();
        match pair {
            [s, t] if (1..=n).contains(s) && (1..=n).contains(t) => Ok((s - 1, t - 1)),
            _ => bail!("pair: expected two generator numbers between 1 and {n}, got {pair:?}"),
        }
    }
}
