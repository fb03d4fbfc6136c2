use super::elemset::{sort_family, ElemSet};

/// Minimal transversals of a growing hypergraph, maintained with Berge's
/// incremental algorithm.
#[derive(Clone, Debug)]
pub(crate) struct Transversals {
    sets: Vec<ElemSet>,
}

impl Transversals {
    /// The transversals of the empty hypergraph: just the empty set.
    pub fn new() -> Transversals {
        Transversals {
            sets: vec![ElemSet::EMPTY],
        }
    }

    pub fn sets(&self) -> &[ElemSet] {
        &self.sets
    }

    /// Adds the edge `edge` and restores minimality.
    pub fn add_edge(&mut self, edge: &ElemSet) {
        let mut next = Vec::with_capacity(self.sets.len());
        for t in &self.sets {
            if t.intersects(edge) {
                next.push(*t);
            } else {
                next.extend(edge.iter().map(|e| t.with(e)));
            }
        }
        self.sets = minimize(next);
    }
}

/// Drops every set that strictly contains another, plus duplicates.
pub(crate) fn minimize(mut sets: Vec<ElemSet>) -> Vec<ElemSet> {
    sort_family(&mut sets);
    let mut kept: Vec<ElemSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

/// All minimal hitting sets of `edges`, in family order.
///
/// Empty edges are ignored; with no non-empty edge the answer is `[∅]`.
pub fn minimal_hitting_sets(edges: &[ElemSet]) -> Vec<ElemSet> {
    let mut t = Transversals::new();
    for e in edges.iter().filter(|e| !e.is_empty()) {
        t.add_edge(e);
    }
    let mut sets = t.sets;
    sort_family(&mut sets);
    sets
}
