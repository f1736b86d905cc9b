//! Reduced ordered binary decision diagrams.
//!
//! A [`BddStore`] is an append-only node table shared by every function built
//! in it. Node ids 0 and 1 are the FALSE and TRUE sinks; both carry the
//! sentinel variable `num_vars + 1`. Because [`BddStore::make_node`] only ever
//! references ids that already exist, insertion order is a valid
//! children-before-parents order, which is what [`BddStore::count_solutions`]
//! walks.
//!
//! [`Bdd`] bundles a store with a root for callers that just want a value.

use std::fmt::{self, Write as _};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BddError {
    #[error("ordering violation: node on variable {var} points to a child on variable {child_var}")]
    OrderingViolation { var: u32, child_var: u32 },
    #[error("variable {var} out of range 1..={num_vars}")]
    VariableOutOfRange { var: u32, num_vars: u32 },
    #[error("operands are over {left} and {right} variables")]
    ArityMismatch { left: u32, right: u32 },
    #[error("node {node} refers to child {child} that does not precede it")]
    UnorderedStore { node: u32, child: u32 },
    #[error("node {0} has LO = HI")]
    RedundantNode(u32),
    #[error("nodes {0} and {1} share the same (var, lo, hi) triple")]
    DuplicateNode(u32, u32),
    #[error("node id {0} is not in the store")]
    UnknownNode(u32),
}

/// Index into a [`BddStore`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub u32);

impl NodeId {
    pub const FALSE: NodeId = NodeId(0);
    pub const TRUE: NodeId = NodeId(1);

    pub fn is_sink(self) -> bool {
        self.0 < 2
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BddNode {
    pub var: u32,
    pub lo: NodeId,
    pub hi: NodeId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoolOp {
    And,
    Or,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum MemoOp {
    And,
    Or,
    Not,
}

impl From<BoolOp> for MemoOp {
    fn from(op: BoolOp) -> Self {
        match op {
            BoolOp::And => MemoOp::And,
            BoolOp::Or => MemoOp::Or,
        }
    }
}

#[derive(Clone, Copy, Default)]
struct CacheSlot {
    tag: u32,
    f: u32,
    g: u32,
    result: u32,
}

/// Direct-mapped operation cache. Entries are tagged with a generation that is
/// bumped on every top-level operation, which empties the cache in O(1).
#[derive(Clone)]
struct OpCache {
    slots: Vec<CacheSlot>,
    bits: u32,
    generation: u32,
}

impl OpCache {
    const MIN_BITS: u32 = 10;
    const MAX_BITS: u32 = 22;

    fn new() -> Self {
        OpCache {
            slots: vec![CacheSlot::default(); 1 << Self::MIN_BITS],
            bits: Self::MIN_BITS,
            generation: 0,
        }
    }

    /// Starts a new operation, growing the table to track the store size.
    fn begin(&mut self, store_len: usize) {
        let want = (usize::BITS - store_len.leading_zeros()).clamp(Self::MIN_BITS, Self::MAX_BITS);
        if want > self.bits || self.generation >= (u32::MAX >> 2) {
            self.bits = want.max(self.bits);
            self.slots = vec![CacheSlot::default(); 1 << self.bits];
            self.generation = 0;
        }
        self.generation += 1;
    }

    fn clear(&mut self) {
        self.generation = u32::MAX >> 2;
    }

    fn slot(&self, f: NodeId, g: NodeId) -> usize {
        let h = (u64::from(f.0) << 32 | u64::from(g.0)).wrapping_mul(0x9e37_79b9_7f4a_7c15);
        (h >> (64 - self.bits)) as usize
    }

    fn tag(&self, op: MemoOp) -> u32 {
        self.generation << 2 | op as u32
    }

    fn get(&self, op: MemoOp, f: NodeId, g: NodeId) -> Option<NodeId> {
        let s = &self.slots[self.slot(f, g)];
        (s.tag == self.tag(op) && s.f == f.0 && s.g == g.0).then_some(NodeId(s.result))
    }

    fn put(&mut self, op: MemoOp, f: NodeId, g: NodeId, r: NodeId) {
        let i = self.slot(f, g);
        self.slots[i] = CacheSlot {
            tag: self.tag(op),
            f: f.0,
            g: g.0,
            result: r.0,
        };
    }
}

/// Node store with its uniqueness table, operation cache and access tally.
#[derive(Clone)]
pub struct BddStore {
    num_vars: u32,
    nodes: Vec<BddNode>,
    unique: FxHashMap<BddNode, NodeId>,
    memo: OpCache,
    accesses: u64,
}

impl fmt::Debug for BddStore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BddStore")
            .field("num_vars", &self.num_vars)
            .field("nodes", &self.nodes.len())
            .field("accesses", &self.accesses)
            .finish()
    }
}

impl BddStore {
    pub fn new(num_vars: u32) -> Self {
        let sink = num_vars + 1;
        let nodes = vec![
            BddNode {
                var: sink,
                lo: NodeId::FALSE,
                hi: NodeId::FALSE,
            },
            BddNode {
                var: sink,
                lo: NodeId::TRUE,
                hi: NodeId::TRUE,
            },
        ];
        BddStore {
            num_vars,
            nodes,
            unique: FxHashMap::default(),
            memo: OpCache::new(),
            accesses: 0,
        }
    }

    /// Builds a store from raw records, bypassing the reduction rules. Entries
    /// 0 and 1 of `records` are ignored and replaced by the sinks. Only ids and
    /// variable ranges are validated; everything else is left for
    /// [`BddStore::check_invariants`] and [`BddStore::count_solutions`] to find.
    pub fn from_raw(num_vars: u32, records: &[BddNode]) -> Result<Self, BddError> {
        let mut store = BddStore::new(num_vars);
        let len = records.len().max(2) as u32;
        for rec in records.iter().skip(2) {
            if rec.var == 0 || rec.var > num_vars {
                return Err(BddError::VariableOutOfRange {
                    var: rec.var,
                    num_vars,
                });
            }
            for child in [rec.lo, rec.hi] {
                if child.0 >= len {
                    return Err(BddError::UnknownNode(child.0));
                }
            }
            store.nodes.push(*rec);
        }
        Ok(store)
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    /// Total nodes ever stored, dead ones included, sinks counted once each.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.len() <= 2
    }

    pub fn sink_var(&self) -> u32 {
        self.num_vars + 1
    }

    pub fn node(&self, id: NodeId) -> BddNode {
        self.nodes[id.index()]
    }

    pub fn var(&self, id: NodeId) -> u32 {
        self.nodes[id.index()].var
    }

    pub fn access_count(&self) -> u64 {
        self.accesses
    }

    pub fn reset_access_count(&mut self) {
        self.accesses = 0;
    }

    /// Drops the operation cache. The node store is kept.
    pub fn clear_cache(&mut self) {
        self.memo.clear();
    }

    pub fn constant(&self, value: bool) -> NodeId {
        if value {
            NodeId::TRUE
        } else {
            NodeId::FALSE
        }
    }

    /// The function `x_i`.
    pub fn variable(&mut self, i: u32) -> Result<NodeId, BddError> {
        self.check_var(i)?;
        Ok(self.mk(i, NodeId::FALSE, NodeId::TRUE))
    }

    fn check_var(&self, var: u32) -> Result<(), BddError> {
        if var == 0 || var > self.num_vars {
            Err(BddError::VariableOutOfRange {
                var,
                num_vars: self.num_vars,
            })
        } else {
            Ok(())
        }
    }

    /// Returns the node for `(var, lo, hi)`, applying both reduction rules.
    pub fn make_node(&mut self, var: u32, lo: NodeId, hi: NodeId) -> Result<NodeId, BddError> {
        self.check_var(var)?;
        for child in [lo, hi] {
            if child.index() >= self.nodes.len() {
                return Err(BddError::UnknownNode(child.0));
            }
            let child_var = self.var(child);
            if child_var <= var {
                return Err(BddError::OrderingViolation { var, child_var });
            }
        }
        Ok(self.mk(var, lo, hi))
    }

    fn mk(&mut self, var: u32, lo: NodeId, hi: NodeId) -> NodeId {
        if lo == hi {
            return lo;
        }
        debug_assert!(var < self.var(lo) && var < self.var(hi));
        let key = BddNode { var, lo, hi };
        self.accesses += 1;
        if let Some(&id) = self.unique.get(&key) {
            return id;
        }
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(key);
        self.unique.insert(key, id);
        self.accesses += 1;
        id
    }

    pub fn and(&mut self, f: NodeId, g: NodeId) -> NodeId {
        self.apply(BoolOp::And, f, g)
    }

    pub fn or(&mut self, f: NodeId, g: NodeId) -> NodeId {
        self.apply(BoolOp::Or, f, g)
    }

    /// `op(f, g)`. The operation cache lives for one top-level call.
    pub fn apply(&mut self, op: BoolOp, f: NodeId, g: NodeId) -> NodeId {
        self.memo.begin(self.nodes.len());
        self.apply_rec(op, f, g)
    }

    fn apply_rec(&mut self, op: BoolOp, f: NodeId, g: NodeId) -> NodeId {
        match op {
            BoolOp::And => {
                if f == NodeId::FALSE || g == NodeId::FALSE {
                    return NodeId::FALSE;
                }
                if f == NodeId::TRUE || f == g {
                    return g;
                }
                if g == NodeId::TRUE {
                    return f;
                }
            }
            BoolOp::Or => {
                if f == NodeId::TRUE || g == NodeId::TRUE {
                    return NodeId::TRUE;
                }
                if f == NodeId::FALSE || f == g {
                    return g;
                }
                if g == NodeId::FALSE {
                    return f;
                }
            }
        }
        let (f, g) = if f <= g { (f, g) } else { (g, f) };
        let mop = MemoOp::from(op);
        self.accesses += 1;
        if let Some(r) = self.memo.get(mop, f, g) {
            return r;
        }
        let fnode = self.nodes[f.index()];
        let gnode = self.nodes[g.index()];
        self.accesses += 2;
        let var = fnode.var.min(gnode.var);
        let (f0, f1) = if fnode.var == var {
            (fnode.lo, fnode.hi)
        } else {
            (f, f)
        };
        let (g0, g1) = if gnode.var == var {
            (gnode.lo, gnode.hi)
        } else {
            (g, g)
        };
        let lo = self.apply_rec(op, f0, g0);
        let hi = self.apply_rec(op, f1, g1);
        let r = self.mk(var, lo, hi);
        self.memo.put(mop, f, g, r);
        r
    }

    /// Complement of `f`.
    pub fn not(&mut self, f: NodeId) -> NodeId {
        self.memo.begin(self.nodes.len());
        self.not_rec(f)
    }

    fn not_rec(&mut self, f: NodeId) -> NodeId {
        if f == NodeId::FALSE {
            return NodeId::TRUE;
        }
        if f == NodeId::TRUE {
            return NodeId::FALSE;
        }
        self.accesses += 1;
        if let Some(r) = self.memo.get(MemoOp::Not, f, f) {
            return r;
        }
        let node = self.nodes[f.index()];
        self.accesses += 1;
        let lo = self.not_rec(node.lo);
        let hi = self.not_rec(node.hi);
        let r = self.mk(node.var, lo, hi);
        self.memo.put(MemoOp::Not, f, f, r);
        r
    }

    /// Copies the function rooted at `root` in `other` into this store.
    pub fn import(&mut self, other: &BddStore, root: NodeId) -> Result<NodeId, BddError> {
        if other.num_vars != self.num_vars {
            return Err(BddError::ArityMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        let reachable = other.reachable(root)?;
        let mut map: FxHashMap<NodeId, NodeId> = FxHashMap::default();
        map.insert(NodeId::FALSE, NodeId::FALSE);
        map.insert(NodeId::TRUE, NodeId::TRUE);
        for id in reachable {
            let node = other.node(id);
            let lo = *map.get(&node.lo).ok_or(BddError::UnorderedStore {
                node: id.0,
                child: node.lo.0,
            })?;
            let hi = *map.get(&node.hi).ok_or(BddError::UnorderedStore {
                node: id.0,
                child: node.hi.0,
            })?;
            let new = self.make_node(node.var, lo, hi)?;
            map.insert(id, new);
        }
        Ok(map[&root])
    }

    /// Non-sink nodes reachable from `root`, in ascending id order.
    pub fn reachable(&self, root: NodeId) -> Result<Vec<NodeId>, BddError> {
        if root.index() >= self.nodes.len() {
            return Err(BddError::UnknownNode(root.0));
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![root];
        let mut out = Vec::new();
        while let Some(id) = stack.pop() {
            if id.is_sink() || seen[id.index()] {
                continue;
            }
            seen[id.index()] = true;
            out.push(id);
            let node = self.nodes[id.index()];
            stack.push(node.lo);
            stack.push(node.hi);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Nodes of the diagram rooted at `root`, both sinks counted once each.
    pub fn node_count(&self, root: NodeId) -> usize {
        self.reachable(root).map_or(0, |r| r.len() + 2)
    }

    /// Exact number of satisfying assignments over all `num_vars` variables.
    ///
    /// Walks the reachable nodes in store order with `c[0] = 0`, `c[1] = 1` and
    /// `c[k] = 2^(v(lo) - v(k) - 1) c[lo] + 2^(v(hi) - v(k) - 1) c[hi]`, then
    /// scales the root's count by `2^(v(root) - 1)` for the variables skipped
    /// above it.
    pub fn count_solutions(&self, root: NodeId) -> Result<BigUint, BddError> {
        let order = self.reachable(root)?;
        let mut counts: Vec<Option<BigUint>> = vec![None; self.nodes.len()];
        counts[0] = Some(BigUint::zero());
        counts[1] = Some(BigUint::one());
        for &k in &order {
            let node = self.nodes[k.index()];
            let mut c = BigUint::zero();
            for child in [node.lo, node.hi] {
                if child >= k {
                    return Err(BddError::UnorderedStore {
                        node: k.0,
                        child: child.0,
                    });
                }
                let child_var = self.var(child);
                if child_var <= node.var {
                    return Err(BddError::OrderingViolation {
                        var: node.var,
                        child_var,
                    });
                }
                let cc = counts[child.index()]
                    .as_ref()
                    .expect("children precede parents");
                c += cc << (child_var - node.var - 1);
            }
            counts[k.index()] = Some(c);
        }
        let root_count = counts[root.index()].take().expect("root counted");
        Ok(root_count << (self.var(root) - 1))
    }

    /// Full sweep: no duplicate triples anywhere in the store, and every node
    /// reachable from `root` is non-redundant and ordered.
    pub fn check_invariants(&self, root: NodeId) -> Result<(), BddError> {
        let mut seen: FxHashMap<BddNode, u32> = FxHashMap::default();
        for (i, node) in self.nodes.iter().enumerate().skip(2) {
            if let Some(&j) = seen.get(node) {
                return Err(BddError::DuplicateNode(j, i as u32));
            }
            seen.insert(*node, i as u32);
        }
        for id in self.reachable(root)? {
            let node = self.node(id);
            if node.lo == node.hi {
                return Err(BddError::RedundantNode(id.0));
            }
            for child in [node.lo, node.hi] {
                let child_var = self.var(child);
                if child_var <= node.var {
                    return Err(BddError::OrderingViolation {
                        var: node.var,
                        child_var,
                    });
                }
            }
        }
        Ok(())
    }

    /// Evaluates the function at a full assignment (`assignment[i - 1]` is `x_i`).
    pub fn eval(&self, root: NodeId, assignment: &[bool]) -> bool {
        let mut id = root;
        while !id.is_sink() {
            let node = self.nodes[id.index()];
            id = if assignment[node.var as usize - 1] {
                node.hi
            } else {
                node.lo
            };
        }
        id == NodeId::TRUE
    }

    /// Text listing of the diagram rooted at `root`, renumbered densely:
    /// one `k: var lo hi` line per non-sink node, then the root id.
    pub fn dump(&self, root: NodeId) -> String {
        let order = self.reachable(root).unwrap_or_default();
        let mut renumber: FxHashMap<NodeId, u32> = FxHashMap::default();
        renumber.insert(NodeId::FALSE, 0);
        renumber.insert(NodeId::TRUE, 1);
        let mut out = String::new();
        for (i, &id) in order.iter().enumerate() {
            let k = i as u32 + 2;
            renumber.insert(id, k);
            let node = self.node(id);
            let _ = writeln!(
                out,
                "{k}: {} {} {}",
                node.var, renumber[&node.lo], renumber[&node.hi]
            );
        }
        let _ = writeln!(out, "{}", renumber.get(&root).copied().unwrap_or(root.0));
        out
    }
}

/// A function together with the store that holds it.
#[derive(Debug, Clone)]
pub struct Bdd {
    store: BddStore,
    root: NodeId,
}

impl Bdd {
    pub fn from_parts(store: BddStore, root: NodeId) -> Self {
        Bdd { store, root }
    }

    pub fn constant(value: bool, num_vars: u32) -> Self {
        let store = BddStore::new(num_vars);
        let root = store.constant(value);
        Bdd { store, root }
    }

    pub fn variable(i: u32, num_vars: u32) -> Result<Self, BddError> {
        let mut store = BddStore::new(num_vars);
        let root = store.variable(i)?;
        Ok(Bdd { store, root })
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn store(&self) -> &BddStore {
        &self.store
    }

    pub fn num_vars(&self) -> u32 {
        self.store.num_vars
    }

    /// `op(self, other)` in a copy of `self`'s store.
    pub fn apply(&self, op: BoolOp, other: &Bdd) -> Result<Bdd, BddError> {
        let mut store = self.store.clone();
        let g = store.import(&other.store, other.root)?;
        let root = store.apply(op, self.root, g);
        Ok(Bdd { store, root })
    }

    pub fn and(&self, other: &Bdd) -> Result<Bdd, BddError> {
        self.apply(BoolOp::And, other)
    }

    pub fn or(&self, other: &Bdd) -> Result<Bdd, BddError> {
        self.apply(BoolOp::Or, other)
    }

    pub fn not(&self) -> Bdd {
        let mut store = self.store.clone();
        let root = store.not(self.root);
        Bdd { store, root }
    }

    pub fn count_solutions(&self) -> Result<BigUint, BddError> {
        self.store.count_solutions(self.root)
    }

    pub fn node_count(&self) -> usize {
        self.store.node_count(self.root)
    }

    pub fn access_count(&self) -> u64 {
        self.store.access_count()
    }

    pub fn check_invariants(&self) -> Result<(), BddError> {
        self.store.check_invariants(self.root)
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.store.eval(self.root, assignment)
    }

    pub fn dump(&self) -> String {
        self.store.dump(self.root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn majority(store: &mut BddStore) -> NodeId {
        let x1 = store.variable(1).unwrap();
        let x2 = store.variable(2).unwrap();
        let x3 = store.variable(3).unwrap();
        let a = store.and(x1, x2);
        let b = store.and(x1, x3);
        let c = store.and(x2, x3);
        let ab = store.or(a, b);
        store.or(ab, c)
    }

    #[test]
    fn make_node_reduction_rules() {
        let mut s = BddStore::new(3);
        assert_eq!(s.make_node(3, NodeId::TRUE, NodeId::TRUE), Ok(NodeId::TRUE));
        let a = s.make_node(2, NodeId::FALSE, NodeId::TRUE).unwrap();
        let b = s.make_node(2, NodeId::FALSE, NodeId::TRUE).unwrap();
        assert_eq!(a, b);
        assert_eq!(s.len(), 3);
        let x3 = s.make_node(3, NodeId::FALSE, NodeId::TRUE).unwrap();
        assert!(matches!(
            s.make_node(3, x3, NodeId::TRUE),
            Err(BddError::OrderingViolation { var: 3, child_var: 3 })
        ));
    }

    #[test]
    fn make_node_rejects_children_above() {
        let mut s = BddStore::new(5);
        let a = s.make_node(3, NodeId::FALSE, NodeId::TRUE).unwrap();
        let b = s.make_node(4, NodeId::FALSE, NodeId::TRUE).unwrap();
        assert_eq!(
            s.make_node(5, a, b),
            Err(BddError::OrderingViolation { var: 5, child_var: 3 })
        );
        assert!(s.accesses > 0);
    }

    #[test]
    fn constants_and_variables() {
        assert_eq!(Bdd::constant(true, 3).count_solutions().unwrap(), 8u32.into());
        assert_eq!(Bdd::constant(false, 3).count_solutions().unwrap(), 0u32.into());
        assert_eq!(Bdd::constant(true, 0).count_solutions().unwrap(), 1u32.into());
        assert_eq!(Bdd::constant(true, 6).count_solutions().unwrap(), 64u32.into());
        assert_eq!(Bdd::variable(1, 1).unwrap().count_solutions().unwrap(), 1u32.into());
        assert_eq!(Bdd::variable(2, 3).unwrap().count_solutions().unwrap(), 4u32.into());
        assert_eq!(
            Bdd::variable(4, 3).unwrap_err(),
            BddError::VariableOutOfRange { var: 4, num_vars: 3 }
        );
        assert_eq!(Bdd::constant(true, 3).node_count(), 2);
    }

    #[test]
    fn not_examples() {
        let t = Bdd::constant(true, 3);
        assert_eq!(t.not().count_solutions().unwrap(), 0u32.into());
        let x1 = Bdd::variable(1, 2).unwrap();
        assert_eq!(x1.not().count_solutions().unwrap(), 2u32.into());
        assert_eq!(x1.not().not().root(), x1.root());
    }

    #[test]
    fn majority_structure() {
        let mut s = BddStore::new(3);
        let m = majority(&mut s);
        assert_eq!(s.count_solutions(m).unwrap(), 4u32.into());
        assert_eq!(s.node_count(m), 6);
        s.check_invariants(m).unwrap();
        let dump = s.dump(m);
        assert_eq!(dump, "2: 3 0 1\n3: 2 0 2\n4: 2 2 1\n5: 1 3 4\n5\n");
    }

    #[test]
    fn identity_and_annihilator() {
        let mut s = BddStore::new(3);
        let m = majority(&mut s);
        let f = Bdd::from_parts(s, m);
        let t = Bdd::constant(true, 3);
        let z = Bdd::constant(false, 3);
        assert_eq!(f.and(&t).unwrap().count_solutions().unwrap(), 4u32.into());
        assert_eq!(f.and(&z).unwrap().count_solutions().unwrap(), 0u32.into());
        assert_eq!(
            f.and(&Bdd::constant(true, 4)).unwrap_err(),
            BddError::ArityMismatch { left: 3, right: 4 }
        );
    }

    #[test]
    fn unordered_store_detected() {
        // node 2 points at node 3, which comes after it
        let recs = [
            BddNode { var: 4, lo: NodeId(0), hi: NodeId(0) },
            BddNode { var: 4, lo: NodeId(1), hi: NodeId(1) },
            BddNode { var: 1, lo: NodeId(0), hi: NodeId(3) },
            BddNode { var: 2, lo: NodeId(0), hi: NodeId(1) },
        ];
        let s = BddStore::from_raw(3, &recs).unwrap();
        assert_eq!(
            s.count_solutions(NodeId(2)),
            Err(BddError::UnorderedStore { node: 2, child: 3 })
        );
        assert_eq!(s.count_solutions(NodeId(3)).unwrap(), 4u32.into());
    }

    #[test]
    fn invariant_sweep_catches_bad_raw_nodes() {
        let recs = [
            BddNode { var: 3, lo: NodeId(0), hi: NodeId(0) },
            BddNode { var: 3, lo: NodeId(1), hi: NodeId(1) },
            BddNode { var: 1, lo: NodeId(0), hi: NodeId(1) },
            BddNode { var: 1, lo: NodeId(0), hi: NodeId(1) },
            BddNode { var: 2, lo: NodeId(1), hi: NodeId(1) },
        ];
        let s = BddStore::from_raw(2, &recs).unwrap();
        assert_eq!(s.check_invariants(NodeId(2)), Err(BddError::DuplicateNode(2, 3)));
        let s = BddStore::from_raw(2, &[recs[0], recs[1], recs[4]]).unwrap();
        assert_eq!(s.check_invariants(NodeId(2)), Err(BddError::RedundantNode(2)));
    }

    #[test]
    fn access_counter_is_monotone() {
        let mut s = BddStore::new(4);
        let mut last = 0;
        let mut f = NodeId::TRUE;
        for i in 1..=4 {
            let x = s.variable(i).unwrap();
            let nx = s.not(x);
            f = s.and(f, nx);
            assert!(s.access_count() >= last);
            last = s.access_count();
        }
        assert_eq!(s.count_solutions(f).unwrap(), 1u32.into());
        s.reset_access_count();
        assert_eq!(s.access_count(), 0);
    }
}
