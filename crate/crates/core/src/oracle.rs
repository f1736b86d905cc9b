//! Brute-force counting by subset enumeration. Slow and obviously correct;
//! used to check the BDD pipeline on small graphs.

use num_bigint::BigUint;
use thiserror::Error;

use crate::constraints::ConstraintMode;
use crate::graph::{Graph, Vertex};

pub const MAX_COUNT_VERTICES: usize = 30;
pub const MAX_ENUMERATE_VERTICES: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{n} vertices is beyond the enumeration limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| {
            g.neighbors(v)
                .expect("vertex in range")
                .iter()
                .fold(0u64, |m, &u| m | 1 << (u - 1))
        })
        .collect()
}

fn accepts(masks: &[u64], set: u64, mode: ConstraintMode) -> bool {
    let n = masks.len();
    for (i, &nb) in masks.iter().enumerate().take(n) {
        let inside = set >> i & 1 == 1;
        if inside && set & nb != 0 {
            return false;
        }
        if mode == ConstraintMode::Kernel && !inside && set & nb == 0 {
            return false;
        }
    }
    true
}

pub fn brute_count(g: &Graph, mode: ConstraintMode) -> Result<BigUint, OracleError> {
    let n = g.num_vertices();
    if n > MAX_COUNT_VERTICES {
        return Err(OracleError::TooLarge {
            n,
            limit: MAX_COUNT_VERTICES,
        });
    }
    let masks = neighbor_masks(g);
    let total = (0..1u64 << n).filter(|&s| accepts(&masks, s, mode)).count();
    Ok(BigUint::from(total))
}

/// All accepted vertex sets, ordered by size then lexicographically.
pub fn enumerate_sets(g: &Graph, mode: ConstraintMode) -> Result<Vec<Vec<Vertex>>, OracleError> {
    let n = g.num_vertices();
    if n > MAX_ENUMERATE_VERTICES {
        return Err(OracleError::TooLarge {
            n,
            limit: MAX_ENUMERATE_VERTICES,
        });
    }
    let masks = neighbor_masks(g);
    let mut sets: Vec<Vec<Vertex>> = (0..1u64 << n)
        .filter(|&s| accepts(&masks, s, mode))
        .map(|s| (1..=n).filter(|&v| s >> (v - 1) & 1 == 1).collect())
        .collect();
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(sets)
}
