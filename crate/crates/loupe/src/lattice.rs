//! Inclusion lattices of subloop families and their modularity.

use std::collections::BTreeSet;

use crate::{Element, Error, FiniteLoop, Result, SubLoop};

/// A family of subloops closed under intersection and containing `{e}` and
/// the whole loop. Join is the least member containing both arguments,
/// which for the family of all subloops is the generated subloop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionLattice {
    nodes: Vec<SubLoop>,
    meet: Vec<usize>,
    join: Vec<usize>,
    leq: Vec<bool>,
}

/// Outcome of a lattice law check: a violating triple of node indices for
/// the equational scan, and an embedded pentagon or diamond
/// `[bottom, a, b, c, top]` from the sublattice search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeVerdict {
    pub holds: bool,
    pub triple: Option<[usize; 3]>,
    pub sublattice: Option<[usize; 5]>,
}

/// Maximum number of nodes produced by closing a family under intersection.
pub const MAX_NODES: usize = 5_000;

pub fn build_lattice(l: &FiniteLoop, family: &[SubLoop]) -> Result<InclusionLattice> {
    for s in family {
        s.check_parent(l)?;
    }
    let mut set: BTreeSet<Vec<Element>> = family.iter().map(|s| s.elements().to_vec()).collect();
    set.insert(vec![0]);
    set.insert(l.elements().collect());
    loop {
        let cur: Vec<&Vec<Element>> = set.iter().collect();
        let mut fresh = Vec::new();
        for (i, a) in cur.iter().enumerate() {
            for b in &cur[i + 1..] {
                let m: Vec<Element> = a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect();
                if !set.contains(&m) {
                    fresh.push(m);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        set.extend(fresh);
        if set.len() > MAX_NODES {
            return Err(Error::CapExceeded { what: "lattice closure", limit: MAX_NODES });
        }
    }
    let mut nodes: Vec<SubLoop> = set.into_iter().map(|v| l.subloop(&v)).collect::<Result<_>>()?;
    nodes.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    Ok(InclusionLattice::from_nodes(nodes))
}

impl InclusionLattice {
    fn from_nodes(nodes: Vec<SubLoop>) -> Self {
        let k = nodes.len();
        let mut leq = vec![false; k * k];
        for i in 0..k {
            for j in 0..k {
                leq[i * k + j] = nodes[i].is_subset_of(&nodes[j]);
            }
        }
        let index_of = |s: &SubLoop| nodes.iter().position(|t| t == s).expect("family is meet-closed");
        let mut meet = vec![0; k * k];
        let mut join = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                meet[i * k + j] = index_of(&nodes[i].meet(&nodes[j]));
                // Nodes are sorted by order, so the first upper bound is least.
                join[i * k + j] = (0..k).find(|&u| leq[i * k + u] && leq[j * k + u]).unwrap();
            }
        }
        InclusionLattice { nodes, meet, join, leq }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[SubLoop] {
        &self.nodes
    }

    pub fn index_of(&self, s: &SubLoop) -> Option<usize> {
        self.nodes.iter().position(|t| t == s)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    /// Pairs `(lower, upper)` of the covering relation, in node order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for a in 0..k {
            for b in 0..k {
                if a != b && self.leq(a, b) && !(0..k).any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    fn pentagon(&self) -> Option<[usize; 5]> {
        let k = self.len();
        for a in 0..k {
            for c in 0..k {
                if a == c || !self.leq(a, c) {
                    continue;
                }
                for b in 0..k {
                    if self.meet(b, a) == self.meet(b, c) && self.join(b, a) == self.join(b, c) {
                        return Some([self.meet(b, a), a, b, c, self.join(b, a)]);
                    }
                }
            }
        }
        None
    }

    fn diamond(&self) -> Option<[usize; 5]> {
        let k = self.len();
        let incomparable = |x: usize, y: usize| !self.leq(x, y) && !self.leq(y, x);
        for a in 0..k {
            for b in a + 1..k {
                if !incomparable(a, b) {
                    continue;
                }
                let (lo, hi) = (self.meet(a, b), self.join(a, b));
                for c in b + 1..k {
                    if incomparable(a, c)
                        && incomparable(b, c)
                        && self.meet(a, c) == lo
                        && self.meet(b, c) == lo
                        && self.join(a, c) == hi
                        && self.join(b, c) == hi
                    {
                        return Some([lo, a, b, c, hi]);
                    }
                }
            }
        }
        None
    }

    fn modular_violation(&self) -> Option<[usize; 3]> {
        let k = self.len();
        for x in 0..k {
            for z in 0..k {
                if !self.leq(x, z) {
                    continue;
                }
                for y in 0..k {
                    if self.join(x, self.meet(y, z)) != self.meet(self.join(x, y), z) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    fn distributive_violation(&self) -> Option<[usize; 3]> {
        let k = self.len();
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)) {
                        return Some([x, y, z]);
                    }
                }
            }
        }
        None
    }

    /// Pentagon-free iff the modular equation holds on every triple.
    pub fn check_modular(&self) -> LatticeVerdict {
        let triple = self.modular_violation();
        let sublattice = self.pentagon();
        debug_assert_eq!(triple.is_none(), sublattice.is_none());
        LatticeVerdict { holds: triple.is_none() && sublattice.is_none(), triple, sublattice }
    }

    /// Modular and diamond-free; the triple is a failure of the
    /// distributive equation.
    pub fn check_distributive(&self) -> LatticeVerdict {
        let triple = self.distributive_violation();
        let sublattice = self.pentagon().or_else(|| self.diamond());
        LatticeVerdict { holds: triple.is_none() && sublattice.is_none(), triple, sublattice }
    }

    /// Pentagon search alone. The result is `[a∧b, a, b, c, a∨b]` with
    /// `a < c`, `a∧b = c∧b` and `a∨b = c∨b`.
    pub fn find_pentagon(&self) -> Option<[usize; 5]> {
        self.pentagon()
    }

    /// Diamond search alone. The result is `[bottom, a, b, c, top]` with
    /// `a, b, c` pairwise incomparable and sharing meets and joins.
    pub fn find_diamond(&self) -> Option<[usize; 5]> {
        self.diamond()
    }

    /// Modular equation scan alone.
    pub fn modular_equation_violation(&self) -> Option<[usize; 3]> {
        self.modular_violation()
    }

    pub fn node_label(&self, l: &FiniteLoop, i: usize) -> String {
        let names: Vec<String> = self.nodes[i].elements().iter().map(|&x| l.label(x)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Hasse diagram as a Graphviz digraph, edges pointing upward.
    pub fn export_dot(&self, l: &FiniteLoop) -> String {
        let mut s = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for i in 0..self.len() {
            s.push_str(&format!("  n{} [label=\"{}\"];\n", i, self.node_label(l, i)));
        }
        for (a, b) in self.covers() {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }
}
