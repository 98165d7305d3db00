//! The edge-deletion cascade.
//!
//! Graphs are processed one size layer at a time, largest first. Each graph
//! in a layer is apex-tested; non-apex graphs are MMNA-tested, and unless
//! they are MMNA their one-edge deletions that pass the degree and
//! connectivity filters join the next layer down. Seeds join the layer of
//! their size. Apex graphs are not expanded: apexness is minor-closed, so
//! their deletions are apex too. A deletion lowers the size by exactly one, so
//! deduplicating within a layer is enough. The run ends when no layer is left.
//!
//! Layers hold canonical keys only, so memory stays proportional to the
//! largest layer plus the seeds still waiting.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::apex::is_apex;
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::SmallGraph;
use crate::graph6::Graph6Reader;
use crate::mmna::is_mmna;
use crate::pipeline::table::CountTable;

/// Graphs handed to the worker pool at a time.
const CHUNK: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeConfig {
    /// Deletions leaving a vertex of smaller degree are discarded.
    pub min_degree: usize,
    /// Deletions that disconnect the graph are discarded.
    pub connected_only: bool,
    /// Rounds allowed after the first; `None` is unbounded. Each round
    /// processes one size layer.
    pub max_depth: Option<usize>,
    /// Per-round state is written here when set.
    pub checkpoint_dir: Option<PathBuf>,
    /// Continue from the state in `checkpoint_dir`; seeds are then ignored.
    pub resume: bool,
}

impl Default for CascadeConfig {
    fn default() -> Self {
        CascadeConfig {
            min_degree: 3,
            connected_only: false,
            max_depth: None,
            checkpoint_dir: None,
            resume: false,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStats {
    pub depth: usize,
    /// Edge count of every graph in the layer.
    pub size: usize,
    pub tested: usize,
    pub apex: usize,
    pub non_apex: usize,
    pub mmna: usize,
}

#[derive(Clone, Debug)]
pub struct CascadeReport {
    /// MMNA graphs, canonical relabellings sorted by canonical key.
    pub mmna: Vec<SmallGraph>,
    pub table: CountTable,
    /// `false` when `max_depth` stopped the run with work left.
    pub complete: bool,
    pub levels: Vec<LevelStats>,
}

#[derive(Serialize, Deserialize)]
struct CheckpointState {
    next_depth: usize,
    levels: Vec<LevelStats>,
}

const STATE_FILE: &str = "state.json";
const PENDING_FILE: &str = "pending.g6";
const MMNA_FILE: &str = "mmna.g6";

/// A cascade in preparation: add seeds, then [`Cascade::run`].
pub struct Cascade {
    config: CascadeConfig,
    layers: BTreeMap<usize, HashSet<CanonicalForm>>,
    mmna: Vec<CanonicalForm>,
    levels: Vec<LevelStats>,
    depth: usize,
    resumed: bool,
}

impl Cascade {
    /// Loads the checkpoint when `config.resume` is set.
    pub fn new(config: CascadeConfig) -> Result<Self> {
        let mut c = Cascade {
            config,
            layers: BTreeMap::new(),
            mmna: Vec::new(),
            levels: Vec::new(),
            depth: 0,
            resumed: false,
        };
        if c.config.resume {
            let dir = c.config.checkpoint_dir.clone().ok_or_else(|| {
                Error::Checkpoint("resume requested without a checkpoint directory".into())
            })?;
            if dir.join(STATE_FILE).exists() {
                c.load_checkpoint(&dir)?;
                c.resumed = true;
                log::info!("resuming cascade at depth {}", c.depth);
            }
        }
        Ok(c)
    }

    fn insert(&mut self, key: CanonicalForm, size: usize) {
        self.layers.entry(size).or_default().insert(key);
    }

    pub fn add_seed(&mut self, g: &SmallGraph) {
        if !self.resumed {
            self.insert(canonical_form(g), g.size());
        }
    }

    /// Canonicalises seeds on the worker pool.
    pub fn add_seeds<'a, I>(&mut self, seeds: I)
    where
        I: IntoIterator<Item = &'a SmallGraph>,
    {
        let mut buf: Vec<SmallGraph> = Vec::with_capacity(CHUNK);
        for g in seeds {
            buf.push(*g);
            if buf.len() == CHUNK {
                self.flush_seeds(&mut buf);
            }
        }
        self.flush_seeds(&mut buf);
    }

    fn flush_seeds(&mut self, buf: &mut Vec<SmallGraph>) {
        if self.resumed {
            buf.clear();
            return;
        }
        let keys: Vec<(CanonicalForm, usize)> = buf
            .par_iter()
            .map(|g| (canonical_form(g), g.size()))
            .collect();
        for (k, size) in keys {
            self.insert(k, size);
        }
        buf.clear();
    }

    /// Adds every graph of a graph6 stream, failing on the first bad record.
    pub fn add_seed_stream<R: std::io::BufRead>(&mut self, source: R) -> Result<usize> {
        let mut buf = Vec::with_capacity(CHUNK);
        let mut count = 0;
        for item in Graph6Reader::new(source) {
            buf.push(item?.1);
            count += 1;
            if buf.len() == CHUNK {
                self.flush_seeds(&mut buf);
            }
        }
        self.flush_seeds(&mut buf);
        Ok(count)
    }

    /// Whether state was loaded from a checkpoint.
    pub fn is_resumed(&self) -> bool {
        self.resumed
    }

    /// Graphs waiting to be processed.
    pub fn pending(&self) -> usize {
        self.layers.values().map(HashSet::len).sum()
    }

    /// Runs to the fixed point, or until `max_depth` rounds have been done.
    pub fn run(mut self) -> Result<CascadeReport> {
        let complete = loop {
            let Some((size, layer)) = self.layers.pop_last() else {
                break true;
            };
            if self.config.max_depth.is_some_and(|m| self.depth > m) {
                self.layers.insert(size, layer);
                break false;
            }
            let stats = self.process_layer(size, layer);
            log::info!(
                "depth {} (e={}): {} tested, {} apex, {} non-apex, {} mmna, {} pending",
                stats.depth,
                stats.size,
                stats.tested,
                stats.apex,
                stats.non_apex,
                stats.mmna,
                self.pending()
            );
            self.levels.push(stats);
            self.depth += 1;
            if let Some(dir) = self.config.checkpoint_dir.clone() {
                self.save_checkpoint(&dir)?;
            }
        };
        self.mmna.sort_unstable();
        let graphs: Vec<SmallGraph> = self.mmna.iter().map(CanonicalForm::graph).collect();
        let table = CountTable::from_graphs(&graphs);
        Ok(CascadeReport {
            mmna: graphs,
            table,
            complete,
            levels: self.levels,
        })
    }

    fn process_layer(&mut self, size: usize, layer: HashSet<CanonicalForm>) -> LevelStats {
        let mut keys: Vec<CanonicalForm> = layer.into_iter().collect();
        keys.sort_unstable();
        let mut stats = LevelStats {
            depth: self.depth,
            size,
            tested: keys.len(),
            ..LevelStats::default()
        };
        let mut next = size
            .checked_sub(1)
            .map(|s| self.layers.remove(&s).unwrap_or_default());
        for chunk in keys.chunks(CHUNK) {
            let outcomes: Vec<Outcome> = chunk
                .par_iter()
                .map(|k| process(&k.graph(), &self.config))
                .collect();
            for (key, out) in chunk.iter().zip(outcomes) {
                match out {
                    Outcome::Apex => stats.apex += 1,
                    Outcome::Mmna => {
                        stats.non_apex += 1;
                        stats.mmna += 1;
                        self.mmna.push(key.clone());
                    }
                    Outcome::Expand(children) => {
                        stats.non_apex += 1;
                        if let Some(next) = next.as_mut() {
                            next.extend(children);
                        }
                    }
                }
            }
        }
        if let Some(next) = next.filter(|n| !n.is_empty()) {
            self.layers.insert(size - 1, next);
        }
        stats
    }

    fn save_checkpoint(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir).map_err(|source| Error::File {
            path: dir.to_path_buf(),
            source,
        })?;
        let mut pending = Vec::new();
        for layer in self.layers.values().rev() {
            let mut keys: Vec<&CanonicalForm> = layer.iter().collect();
            keys.sort_unstable();
            for k in keys {
                pending.extend_from_slice(k.as_bytes());
                pending.push(b'\n');
            }
        }
        let mut mmna = Vec::new();
        for k in &self.mmna {
            mmna.extend_from_slice(k.as_bytes());
            mmna.push(b'\n');
        }
        // Graph files first, state last: a state file always points at complete data.
        write_atomic(dir, PENDING_FILE, &pending)?;
        write_atomic(dir, MMNA_FILE, &mmna)?;
        let state = CheckpointState {
            next_depth: self.depth,
            levels: self.levels.clone(),
        };
        let json =
            serde_json::to_vec_pretty(&state).map_err(|e| Error::Checkpoint(e.to_string()))?;
        write_atomic(dir, STATE_FILE, &json)
    }

    fn load_checkpoint(&mut self, dir: &Path) -> Result<()> {
        let state_path = dir.join(STATE_FILE);
        let raw = fs::read(&state_path).map_err(|source| Error::File {
            path: state_path,
            source,
        })?;
        let state: CheckpointState =
            serde_json::from_slice(&raw).map_err(|e| Error::Checkpoint(e.to_string()))?;
        self.depth = state.next_depth;
        self.levels = state.levels;
        // Both files hold canonical graphs written by `save_checkpoint`.
        for g in read_g6(&dir.join(PENDING_FILE))? {
            self.insert(CanonicalForm::of_canonical(&g), g.size());
        }
        self.mmna = read_g6(&dir.join(MMNA_FILE))?
            .iter()
            .map(CanonicalForm::of_canonical)
            .collect();
        Ok(())
    }
}

enum Outcome {
    Apex,
    Mmna,
    Expand(Vec<CanonicalForm>),
}

fn process(g: &SmallGraph, config: &CascadeConfig) -> Outcome {
    if is_apex(g) {
        return Outcome::Apex;
    }
    if is_mmna(g).is_mmna() {
        return Outcome::Mmna;
    }
    let mut children = Vec::new();
    for e in g.edges() {
        let h = g.delete_edge(e).unwrap();
        if h.degree(e.u()) < config.min_degree || h.degree(e.v()) < config.min_degree {
            continue;
        }
        if config.connected_only && !h.is_connected() {
            continue;
        }
        children.push(canonical_form(&h));
    }
    children.sort_unstable();
    children.dedup();
    Outcome::Expand(children)
}

/// Runs the cascade from `seeds` with `config`.
pub fn run_cascade(seeds: &[SmallGraph], config: &CascadeConfig) -> Result<CascadeReport> {
    let mut c = Cascade::new(config.clone())?;
    c.add_seeds(seeds);
    c.run()
}

fn write_atomic(dir: &Path, name: &str, bytes: &[u8]) -> Result<()> {
    let tmp = dir.join(format!("{name}.tmp"));
    let path = dir.join(name);
    fs::write(&tmp, bytes).map_err(|source| Error::File {
        path: tmp.clone(),
        source,
    })?;
    fs::rename(&tmp, &path).map_err(|source| Error::File { path, source })
}

fn read_g6(path: &Path) -> Result<Vec<SmallGraph>> {
    let file = fs::File::open(path).map_err(|source| Error::File {
        path: path.to_path_buf(),
        source,
    })?;
    Graph6Reader::new(BufReader::new(file))
        .map(|r| r.map(|(_, g)| g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon;
    use crate::graph6;
    use crate::named;
    use crate::transforms::{dy_closure, ClosureCaps};

    #[test]
    fn k6_seed() {
        let r = run_cascade(&[named::complete(6)], &CascadeConfig::default()).unwrap();
        assert!(r.complete);
        assert_eq!(r.mmna.len(), 1);
        assert!(canon::are_isomorphic(&r.mmna[0], &named::complete(6)));
    }

    #[test]
    fn petersen_family_seed() {
        let family = dy_closure(&[named::complete(6)], ClosureCaps::default());
        let r = run_cascade(&family, &CascadeConfig::default()).unwrap();
        assert!(r.complete);
        assert_eq!(r.mmna, family);
        assert_eq!(r.levels.len(), 1);
    }

    #[test]
    fn k7_cascade_stays_on_seven_vertices() {
        let r = run_cascade(&[named::complete(7)], &CascadeConfig::default()).unwrap();
        assert!(r.complete);
        for g in &r.mmna {
            assert!(is_mmna(g).is_mmna());
            assert_eq!(g.order(), 7);
        }
        let sizes: Vec<usize> = r.levels.iter().map(|l| l.size).collect();
        assert!(sizes.windows(2).all(|w| w[0] == w[1] + 1));
    }

    #[test]
    fn depth_budget_reports_incomplete() {
        let cfg = CascadeConfig {
            max_depth: Some(0),
            ..CascadeConfig::default()
        };
        let r = run_cascade(&[named::complete(7)], &cfg).unwrap();
        assert!(!r.complete);
        assert_eq!(r.levels.len(), 1);
    }

    #[test]
    fn seeds_from_a_stream() {
        let text = format!(
            "{}\n{}\n",
            graph6::encode(&named::complete(6)),
            graph6::encode(&named::petersen())
        );
        let mut c = Cascade::new(CascadeConfig::default()).unwrap();
        assert_eq!(c.add_seed_stream(text.as_bytes()).unwrap(), 2);
        assert_eq!(c.pending(), 2);
        assert_eq!(c.run().unwrap().mmna.len(), 2);
    }

    #[test]
    fn empty_seeds() {
        let r = run_cascade(&[], &CascadeConfig::default()).unwrap();
        assert!(r.complete && r.mmna.is_empty() && r.table.is_empty());
    }
}
