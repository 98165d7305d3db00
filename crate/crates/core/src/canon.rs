//! Canonical labelling, isomorphism testing and isomorphism dedup.
//!
//! The labelling is computed by colour refinement followed by an
//! individualise-and-refine search tree whose leaves are discrete colourings.
//! Every leaf is a relabelling of the input; the canonical graph is the least
//! one under the row-wise adjacency order. Subtrees are skipped when they are
//! images of an explored subtree under a known automorphism (twin vertices,
//! or automorphisms found at earlier leaves that fix the current prefix).

use std::collections::HashMap;
use std::fmt;

use crate::graph::{SmallGraph, VertexSet, MAX_ORDER};
use crate::graph6;

/// Cap on stored automorphisms; more are never needed for pruning at this size.
const MAX_GENERATORS: usize = 64;

/// Isomorphism-invariant key: the graph6 bytes of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Box<[u8]>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Key of a graph already known to be a canonical relabelling.
    pub(crate) fn of_canonical(g: &SmallGraph) -> Self {
        CanonicalForm(graph6::encode_bytes(g).into_boxed_slice())
    }

    /// The canonical graph itself.
    pub fn graph(&self) -> SmallGraph {
        graph6::decode_bytes(&self.0).expect("canonical keys are valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl From<&SmallGraph> for CanonicalForm {
    fn from(g: &SmallGraph) -> Self {
        canonical_form(g)
    }
}

/// Result of canonical labelling.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// The canonical relabelling of the input.
    pub graph: SmallGraph,
    /// `perm[v]` is the canonical label of input vertex `v`.
    pub perm: Vec<u8>,
    /// Automorphisms of the input found during the search, each as `v -> image`.
    /// They generate a subgroup of the automorphism group, not necessarily all of it.
    pub automorphisms: Vec<[u8; MAX_ORDER]>,
}

pub fn canonical_labeling(g: &SmallGraph) -> Labeling {
    let mut search = Search::new(g);
    let mut colors = [0u8; MAX_ORDER];
    let mut prefix = Vec::with_capacity(g.order());
    search.descend(&mut colors, &mut prefix);
    let (graph, perm) = search.best.expect("search reaches at least one leaf");
    Labeling {
        graph,
        perm: perm[..g.order()].to_vec(),
        automorphisms: search.automorphisms,
    }
}

/// The canonical relabelling of `g`.
pub fn canonical_graph(g: &SmallGraph) -> SmallGraph {
    canonical_labeling(g).graph
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    CanonicalForm(graph6::encode_bytes(&canonical_graph(g)).into_boxed_slice())
}

pub fn are_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence()
    {
        return false;
    }
    canonical_graph(a) == canonical_graph(b)
}

/// Keeps one graph per isomorphism class, ordered by canonical key.
///
/// The representative kept for each class is the first one seen in `graphs`.
pub fn dedup<I>(graphs: I) -> Vec<SmallGraph>
where
    I: IntoIterator<Item = SmallGraph>,
{
    let mut store = DedupStore::default();
    for (i, g) in graphs.into_iter().enumerate() {
        store.insert_indexed(i as u64, g);
    }
    store.into_sorted()
}

/// A mergeable isomorphism-class set.
///
/// Workers fill their own store with globally indexed graphs and the shards
/// are merged afterwards; the lowest index wins for each class, so the merged
/// result does not depend on how work was split.
#[derive(Clone, Debug, Default)]
pub struct DedupStore {
    classes: HashMap<CanonicalForm, (u64, SmallGraph)>,
}

impl DedupStore {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, key: &CanonicalForm) -> bool {
        self.classes.contains_key(key)
    }

    /// Inserts `g`; returns `true` if its class was new.
    pub fn insert_indexed(&mut self, index: u64, g: SmallGraph) -> bool {
        let key = canonical_form(&g);
        self.insert_keyed(key, index, g)
    }

    pub fn insert_keyed(&mut self, key: CanonicalForm, index: u64, g: SmallGraph) -> bool {
        use std::collections::hash_map::Entry;
        match self.classes.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert((index, g));
                true
            }
            Entry::Occupied(mut slot) => {
                if index < slot.get().0 {
                    slot.insert((index, g));
                }
                false
            }
        }
    }

    pub fn merge(&mut self, other: DedupStore) {
        for (key, (index, g)) in other.classes {
            self.insert_keyed(key, index, g);
        }
    }

    /// Representatives with their keys, sorted by key.
    pub fn into_sorted_keyed(self) -> Vec<(CanonicalForm, SmallGraph)> {
        let mut out: Vec<_> = self.classes.into_iter().map(|(k, (_, g))| (k, g)).collect();
        out.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn into_sorted(self) -> Vec<SmallGraph> {
        self.into_sorted_keyed()
            .into_iter()
            .map(|(_, g)| g)
            .collect()
    }
}

struct Search<'a> {
    g: &'a SmallGraph,
    n: usize,
    best: Option<(SmallGraph, [u8; MAX_ORDER])>,
    automorphisms: Vec<[u8; MAX_ORDER]>,
}

impl<'a> Search<'a> {
    fn new(g: &'a SmallGraph) -> Self {
        Search {
            g,
            n: g.order(),
            best: None,
            automorphisms: Vec::new(),
        }
    }

    /// Equitable refinement. A colour is the position of its cell's first
    /// slot in the ordered partition, so cells only ever split in place.
    /// Returns `true` once the colouring is discrete.
    fn refine(&self, colors: &mut [u8; MAX_ORDER]) -> bool {
        let n = self.n;
        let mut distinct = count_distinct(&colors[..n]);
        loop {
            if distinct == n {
                return true;
            }
            let mut keys: [(u8, [u8; MAX_ORDER], u8); MAX_ORDER] =
                [(0, [0; MAX_ORDER], 0); MAX_ORDER];
            for v in 0..n {
                let mut counts = [0u8; MAX_ORDER];
                for w in self.g.neighbors(v) {
                    counts[colors[w] as usize] += 1;
                }
                keys[v] = (colors[v], counts, v as u8);
            }
            let keys = &mut keys[..n];
            keys.sort_unstable_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
            let mut next = 0;
            for i in 0..n {
                if i == 0 || (keys[i].0, &keys[i].1) != (keys[i - 1].0, &keys[i - 1].1) {
                    next += 1;
                    colors[keys[i].2 as usize] = i as u8;
                } else {
                    colors[keys[i].2 as usize] = colors[keys[i - 1].2 as usize];
                }
            }
            if next == distinct {
                return false;
            }
            distinct = next;
        }
    }

    fn descend(&mut self, colors: &mut [u8; MAX_ORDER], prefix: &mut Vec<u8>) {
        if self.refine(colors) {
            self.leaf(colors);
            return;
        }
        let n = self.n;
        // Target: the non-singleton cell with the smallest colour.
        let mut sizes = [0u8; MAX_ORDER];
        for &c in &colors[..n] {
            sizes[c as usize] += 1;
        }
        let target = (0..n).find(|&c| sizes[c] > 1).unwrap() as u8;
        let members: VertexSet = (0..n).filter(|&v| colors[v] == target).collect();

        let mut tried = VertexSet::EMPTY;
        for v in members {
            if tried.iter().any(|w| self.twins(v, w)) || self.same_orbit(v, tried, prefix) {
                continue;
            }
            let mut child = *colors;
            for w in members {
                if w != v {
                    child[w] = target + 1;
                }
            }
            prefix.push(v as u8);
            self.descend(&mut child, prefix);
            prefix.pop();
            tried.insert(v);
        }
    }

    #[inline]
    fn twins(&self, v: usize, w: usize) -> bool {
        let a = self.g.neighbors(v).0 & !(1 << w);
        let b = self.g.neighbors(w).0 & !(1 << v);
        a == b
    }

    /// Is `v` in the orbit of some vertex of `tried` under the known
    /// automorphisms that fix every prefix vertex?
    fn same_orbit(&self, v: usize, tried: VertexSet, prefix: &[u8]) -> bool {
        if tried.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let mut parent: [u8; MAX_ORDER] = std::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; MAX_ORDER], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p as usize] != p) {
                continue;
            }
            any = true;
            for (x, &gx) in gamma.iter().enumerate().take(self.n) {
                let a = find(&mut parent, x);
                let b = find(&mut parent, gx as usize);
                if a != b {
                    parent[a.max(b)] = a.min(b) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|w| find(&mut parent, w) == root)
    }

    fn leaf(&mut self, colors: &[u8; MAX_ORDER]) {
        let code = self.g.permute_unchecked(&colors[..self.n]);
        match &self.best {
            Some((best, _)) if code > *best => {}
            Some((best, best_perm)) if code == *best => {
                if self.automorphisms.len() < MAX_GENERATORS {
                    let mut inverse = [0u8; MAX_ORDER];
                    for v in 0..self.n {
                        inverse[best_perm[v] as usize] = v as u8;
                    }
                    let mut gamma = [0u8; MAX_ORDER];
                    for v in 0..self.n {
                        gamma[v] = inverse[colors[v] as usize];
                    }
                    if (0..self.n).any(|v| gamma[v] as usize != v) {
                        self.automorphisms.push(gamma);
                    }
                }
            }
            _ => self.best = Some((code, *colors)),
        }
    }
}

fn count_distinct(colors: &[u8]) -> usize {
    let mut seen = 0u32;
    for &c in colors {
        seen |= 1 << c;
    }
    seen.count_ones() as usize
}
