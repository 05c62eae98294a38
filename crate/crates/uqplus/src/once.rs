//! Compute-once concurrent maps: readers share a value, exactly one caller
//! runs the initializer for a key.

use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

pub struct OnceMap<K, V> {
    map: DashMap<K, Arc<OnceLock<V>>>,
}

impl<K: Eq + Hash + Clone, V: Clone> Default for OnceMap<K, V> {
    fn default() -> Self {
        OnceMap { map: DashMap::new() }
    }
}

impl<K: Eq + Hash + Clone, V: Clone> OnceMap<K, V> {
    pub fn new() -> Self {
        Self::default()
    }

    /// The initializer runs without any shard lock held, so it may recurse
    /// into the same map for other keys.
    pub fn get_or_init(&self, key: &K, f: impl FnOnce() -> V) -> V {
        let cell = match self.map.get(key) {
            Some(c) => c.clone(),
            None => self.map.entry(key.clone()).or_default().clone(),
        };
        cell.get_or_init(f).clone()
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.map.get(key).and_then(|c| c.get().cloned())
    }

    /// Seeds a value (used when loading a cache); existing values win.
    pub fn insert(&self, key: K, value: V) {
        let cell = self.map.entry(key).or_default().clone();
        let _ = cell.set(value);
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Initialized entries.
    pub fn entries(&self) -> Vec<(K, V)> {
        self.map.iter().filter_map(|e| e.value().get().map(|v| (e.key().clone(), v.clone()))).collect()
    }
}
