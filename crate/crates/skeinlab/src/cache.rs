//! Process-wide caches for the expensive per-`n` objects: the resolution
//! solvers for `NC(n, k)` and the character tables of `S_n`.
//!
//! Each entry is built at most once. Readers share it through an `Arc`; a
//! build happens outside the lock, and if two threads race the first insert
//! wins, so every caller sees the same value.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, OnceLock, RwLock};

use skeinlab_core::repsym::CharacterTable;
use skeinlab_core::skein::NcSolver;
use skeinlab_core::{NcVector, Result, SetPartition};

struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Copy, V> Memo<K, V> {
    fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    fn get_or_try_insert(&self, key: K, build: impl FnOnce() -> Result<V>) -> Result<Arc<V>> {
        if let Some(v) = self.map.read().expect("cache lock poisoned").get(&key) {
            return Ok(v.clone());
        }
        let built = Arc::new(build()?);
        let mut map = self.map.write().expect("cache lock poisoned");
        Ok(map.entry(key).or_insert(built).clone())
    }
}

fn solvers() -> &'static Memo<(usize, usize), NcSolver> {
    static CELL: OnceLock<Memo<(usize, usize), NcSolver>> = OnceLock::new();
    CELL.get_or_init(Memo::new)
}

fn tables() -> &'static Memo<usize, CharacterTable> {
    static CELL: OnceLock<Memo<usize, CharacterTable>> = OnceLock::new();
    CELL.get_or_init(Memo::new)
}

/// The shared solver for partitions of `[n]` with `k` blocks.
pub fn solver(n: usize, k: usize) -> Result<Arc<NcSolver>> {
    solvers().get_or_try_insert((n, k), || NcSolver::new(n, k))
}

/// The shared character table of `S_n`.
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    tables().get_or_try_insert(n, || CharacterTable::new(n))
}

/// `p(π)` through the cached solver.
pub fn resolve(pi: &SetPartition) -> Result<NcVector> {
    if pi.is_noncrossing() {
        return NcVector::basis(pi);
    }
    solver(pi.n(), pi.num_blocks())?.resolve(pi)
}
