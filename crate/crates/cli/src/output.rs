//! JSON documents and DOT graphs. Elements are written as words `"s1 s2"`
//! (`"e"` for the identity); dihedral groups also get `1_k` / `2_k` labels.

use std::fmt::Write;

use cellkit::tau::{PairKind, PairSummary};
use cellkit::{CoxeterSystem, Element};
use serde::Serialize;

use crate::config::Job;

#[derive(Serialize)]
pub struct Header {
    pub command: &'static str,
    pub group: String,
    pub rank: usize,
    pub order: usize,
    pub weights: Vec<i32>,
}

impl Header {
    pub fn new(command: &'static str, job: &Job) -> Self {
        Self {
            command,
            group: job.name.clone(),
            rank: job.group.rank(),
            order: job.group.order(),
            weights: job.weights.as_slice().to_vec(),
        }
    }
}

pub fn word(g: &CoxeterSystem, w: Element) -> String {
    g.format_word(w)
}

pub fn words(g: &CoxeterSystem, ws: &[Element]) -> Vec<String> {
    ws.iter().map(|&w| g.format_word(w)).collect()
}

pub fn labels(g: &CoxeterSystem, ws: &[Element]) -> Option<Vec<String>> {
    ws.iter().map(|&w| g.dihedral_label(w)).collect()
}

pub fn generators(set: cellkit::GenSet) -> Vec<usize> {
    set.iter().map(|s| s + 1).collect()
}

#[derive(Serialize)]
pub struct PairOut {
    pub kind: &'static str,
    pub s: usize,
    pub t: usize,
}

impl From<&PairSummary> for PairOut {
    fn from(p: &PairSummary) -> Self {
        Self {
            kind: p.kind.name(),
            s: p.s + 1,
            t: p.t + 1,
        }
    }
}

impl PairOut {
    pub fn new(kind: PairKind, (s, t): (usize, usize)) -> Self {
        Self {
            kind: kind.name(),
            s: s + 1,
            t: t + 1,
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("output is serialisable");
    text.push('\n');
    text
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A directed graph with labelled nodes `0..labels.len()`.
pub fn dot(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(l)).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}
