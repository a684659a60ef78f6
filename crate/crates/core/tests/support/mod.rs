//! Independent reference implementations shared by the integration suites.
#![allow(dead_code)]

pub mod bar;
pub mod classical;
pub mod dihedral;
pub mod perm;
pub mod properties;
pub mod rsk;

use std::sync::Arc;

use cellkit::{CoxeterSystem, KlTable, WeightFunction};

pub fn table(name: &str, weights: &[i64]) -> KlTable {
    let g = Arc::new(CoxeterSystem::from_preset(name, 20_000).unwrap());
    let w = WeightFunction::new(g.matrix(), weights).unwrap();
    KlTable::compute(g, w)
}
