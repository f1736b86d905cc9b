//! Compiles a graph into the BDD of its independent sets or of its kernels.
//!
//! Both functions are conjunctions of local pieces: one `¬(x_u ∧ x_v)` per edge
//! for independent sets, one function over `{v} ∪ N(v)` per vertex for kernels.
//! Pieces are conjoined in a fixed order (edges lexicographically, vertices
//! ascending) so builds and access counts are reproducible.

use std::fmt;
use std::str::FromStr;

use crate::bdd::{Bdd, BddError, BddStore, NodeId};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstraintMode {
    IndependentSet,
    Kernel,
}

impl fmt::Display for ConstraintMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstraintMode::IndependentSet => "is",
            ConstraintMode::Kernel => "kernel",
        })
    }
}

impl FromStr for ConstraintMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "is" | "independent-set" | "independent_set" => Ok(ConstraintMode::IndependentSet),
            "kernel" | "kernels" | "mis" => Ok(ConstraintMode::Kernel),
            other => Err(format!("unknown constraint mode {other:?}")),
        }
    }
}

/// Position of each vertex in the BDD variable order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarOrder {
    /// `level[v - 1]` is the variable index (1-based) assigned to vertex `v`.
    level: Vec<u32>,
}

impl VarOrder {
    /// Vertex `v` is variable `v`.
    pub fn natural(n: usize) -> Self {
        VarOrder {
            level: (1..=n as u32).collect(),
        }
    }

    /// `order[i]` is the vertex tested at depth `i + 1`. Must be a permutation of `1..=n`.
    pub fn from_sequence(order: &[Vertex]) -> Result<Self, String> {
        let n = order.len();
        let mut level = vec![0u32; n];
        for (i, &v) in order.iter().enumerate() {
            if v == 0 || v > n || level[v - 1] != 0 {
                return Err(format!("{order:?} is not a permutation of 1..={n}"));
            }
            level[v - 1] = i as u32 + 1;
        }
        Ok(VarOrder { level })
    }

    pub fn level(&self, v: Vertex) -> u32 {
        self.level[v - 1]
    }

    pub fn len(&self) -> usize {
        self.level.len()
    }

    pub fn is_empty(&self) -> bool {
        self.level.is_empty()
    }
}

pub fn build(g: &Graph, mode: ConstraintMode) -> Bdd {
    match mode {
        ConstraintMode::IndependentSet => independent_set_bdd(g),
        ConstraintMode::Kernel => kernel_bdd(g),
    }
}

pub fn independent_set_bdd(g: &Graph) -> Bdd {
    independent_set_bdd_with_order(g, &VarOrder::natural(g.num_vertices()))
        .expect("natural order matches the graph")
}

pub fn kernel_bdd(g: &Graph) -> Bdd {
    kernel_bdd_with_order(g, &VarOrder::natural(g.num_vertices()))
        .expect("natural order matches the graph")
}

fn check_order(g: &Graph, order: &VarOrder) -> Result<(), BddError> {
    if order.len() != g.num_vertices() {
        return Err(BddError::ArityMismatch {
            left: g.num_vertices() as u32,
            right: order.len() as u32,
        });
    }
    Ok(())
}

pub fn independent_set_bdd_with_order(g: &Graph, order: &VarOrder) -> Result<Bdd, BddError> {
    check_order(g, order)?;
    let mut store = BddStore::new(g.num_vertices() as u32);
    let mut f = NodeId::TRUE;
    for &(u, v) in g.edges() {
        let piece = not_both(&mut store, order.level(u), order.level(v));
        f = store.and(f, piece);
    }
    Ok(Bdd::from_parts(store, f))
}

/// `¬(x_a ∧ x_b)` built directly.
fn not_both(store: &mut BddStore, a: u32, b: u32) -> NodeId {
    let (top, bottom) = (a.min(b), a.max(b));
    let inner = store
        .make_node(bottom, NodeId::TRUE, NodeId::FALSE)
        .expect("bottom variable in range");
    store
        .make_node(top, NodeId::TRUE, inner)
        .expect("top above bottom")
}

pub fn kernel_bdd_with_order(g: &Graph, order: &VarOrder) -> Result<Bdd, BddError> {
    check_order(g, order)?;
    let mut store = BddStore::new(g.num_vertices() as u32);
    let mut f = NodeId::TRUE;
    for v in g.vertices() {
        let neighbors = g.neighbors(v).expect("vertex in range");
        let piece = kernel_local(&mut store, order.level(v), neighbors.iter().map(|&u| order.level(u)));
        f = store.and(f, piece);
    }
    Ok(Bdd::from_parts(store, f))
}

/// Local kernel condition at one vertex: if `x_center` then no neighbor is set,
/// otherwise at least one neighbor is set.
fn kernel_local<I>(store: &mut BddStore, center: u32, neighbors: I) -> NodeId
where
    I: Iterator<Item = u32>,
{
    let mut vars: Vec<u32> = neighbors.collect();
    vars.push(center);
    vars.sort_unstable();
    // Shannon expansion over the local variables; make_node merges the
    // repeated subtrees, so the result is already reduced.
    local_rec(store, &vars, 0, center, None, false)
}

fn local_rec(
    store: &mut BddStore,
    vars: &[u32],
    pos: usize,
    center: u32,
    center_val: Option<bool>,
    seen_neighbor: bool,
) -> NodeId {
    if pos == vars.len() {
        let ok = match center_val.expect("center is among the variables") {
            true => !seen_neighbor,
            false => seen_neighbor,
        };
        return store.constant(ok);
    }
    // Short-circuit: center set and a neighbor set is already false.
    if center_val == Some(true) && seen_neighbor {
        return NodeId::FALSE;
    }
    let var = vars[pos];
    let (lo, hi) = if var == center {
        (
            local_rec(store, vars, pos + 1, center, Some(false), seen_neighbor),
            local_rec(store, vars, pos + 1, center, Some(true), seen_neighbor),
        )
    } else {
        (
            local_rec(store, vars, pos + 1, center, center_val, seen_neighbor),
            local_rec(store, vars, pos + 1, center, center_val, true),
        )
    };
    store.make_node(var, lo, hi).expect("variables ascend")
}
