use crate::error::{AduError, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::HashMap;

/// A finite ranked poset given by its fibers and covering pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RankedPoset {
    pub family: String,
    pub params: Value,
    pub elements: Vec<String>,
    pub fibers: Vec<Vec<usize>>,
    pub covers: Vec<(usize, usize)>,
}

impl RankedPoset {
    /// Builds a poset from `(key, rank)` pairs and covers given on keys'
    /// positions. Elements are re-indexed by `(rank, key)` so the output does not
    /// depend on construction order.
    pub fn from_parts(
        family: &str,
        params: Value,
        items: Vec<(String, usize)>,
        covers: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut order: Vec<usize> = (0..items.len()).collect();
        order.sort_by(|&a, &b| (items[a].1, &items[a].0).cmp(&(items[b].1, &items[b].0)));
        let mut new_index = vec![0; items.len()];
        for (n, &old) in order.iter().enumerate() {
            new_index[old] = n;
        }
        let top = items.iter().map(|x| x.1).max().unwrap_or(0);
        let mut fibers = vec![Vec::new(); if items.is_empty() { 0 } else { top + 1 }];
        let mut elements = Vec::with_capacity(items.len());
        for (n, &old) in order.iter().enumerate() {
            fibers[items[old].1].push(n);
            elements.push(items[old].0.clone());
        }
        let mut covers: Vec<(usize, usize)> = covers.into_iter().map(|(a, b)| (new_index[a], new_index[b])).collect();
        covers.sort_unstable();
        covers.dedup();
        let p = Self { family: family.into(), params, elements, fibers, covers };
        p.validate()?;
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Rank of the poset, i.e. the index of the last fiber.
    pub fn top_rank(&self) -> usize {
        self.fibers.len().saturating_sub(1)
    }

    pub fn fiber_sizes(&self) -> Vec<usize> {
        self.fibers.iter().map(Vec::len).collect()
    }

    pub fn rank_of(&self) -> Vec<usize> {
        let mut r = vec![usize::MAX; self.len()];
        for (i, fib) in self.fibers.iter().enumerate() {
            for &x in fib {
                r[x] = i;
            }
        }
        r
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.1 == x).map(|c| c.0).collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.0 == x).map(|c| c.1).collect()
    }

    /// Checks that fibers partition the elements, keys are distinct and every
    /// cover joins adjacent fibers.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(AduError::Parse(format!("invalid ranked poset: {m}")));
        let rank = self.rank_of();
        let listed: usize = self.fibers.iter().map(Vec::len).sum();
        if listed != self.len() || rank.contains(&usize::MAX) {
            return bad("fibers do not partition the elements".into());
        }
        let mut seen = HashMap::with_capacity(self.len());
        for (i, k) in self.elements.iter().enumerate() {
            if let Some(j) = seen.insert(k.as_str(), i) {
                return bad(format!("duplicate key {k:?} at {j} and {i}"));
            }
        }
        for &(lo, hi) in &self.covers {
            if lo >= self.len() || hi >= self.len() {
                return bad(format!("cover ({lo}, {hi}) out of range"));
            }
            if rank[hi] != rank[lo] + 1 {
                return bad(format!("cover ({lo}, {hi}) joins fibers {} and {}", rank[lo], rank[hi]));
            }
        }
        Ok(())
    }

    /// Deterministic pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("poset serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let p: Self = serde_json::from_str(text)?;
        p.validate()?;
        Ok(p)
    }
}
