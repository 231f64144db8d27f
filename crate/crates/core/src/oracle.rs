//! Ground truth by exhaustive search.
//!
//! [`grundy_oracle`] applies the affine impartial mex rule to the full option
//! tree of a component. [`outcome_playout`] ignores value theory entirely and
//! decides who wins a sum by playing it out.

use std::hash::Hash;

use dashmap::DashMap;

use crate::fixture::{Component, Position};
use crate::moves::{apply, legal_moves, MoveKind};
use crate::sum::Outcome;
use crate::value::GrundyValue;

/// Concurrent memo. Entries are never overwritten with a different value
/// since every key determines its value.
#[derive(Debug)]
pub struct Table<K: Eq + Hash, V> {
    map: DashMap<K, V>,
}

impl<K: Eq + Hash, V: Copy> Table<K, V> {
    pub fn new() -> Self {
        Table { map: DashMap::new() }
    }

    pub fn get(&self, key: &K) -> Option<V> {
        self.map.get(key).map(|r| *r)
    }

    /// Stores `value` unless the key is already present; returns the stored value.
    pub fn insert(&self, key: K, value: V) -> V {
        *self.map.entry(key).or_insert(value)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

impl<K: Eq + Hash, V: Copy> Default for Table<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

/// Component piece sequence to Grundy value.
pub type TranspositionTable = Table<Component, GrundyValue>;

/// Multiset of non-empty components to "the player to move wins".
pub type PlayoutTable = Table<Vec<Component>, bool>;

/// Least nonnegative integer not in `values`.
pub fn mex<I: IntoIterator<Item = u64>>(values: I) -> u64 {
    let values: Vec<u64> = values.into_iter().collect();
    let mut seen = vec![false; values.len() + 1];
    for v in values {
        if let Some(slot) = usize::try_from(v).ok().and_then(|i| seen.get_mut(i)) {
            *slot = true;
        }
    }
    // at most `len` of the `len + 1` slots are filled
    seen.iter().position(|&s| !s).unwrap_or(seen.len()) as u64
}

/// Inputs to the mex rule for one component.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EvalSets {
    /// Finite values of quiet options (fixes and quiet removals).
    pub immediate: Vec<u64>,
    /// Values of the components reached by shock moves.
    pub carry_targets: Vec<GrundyValue>,
}

impl EvalSets {
    /// The mex rule with the protected set derived from carry-on targets.
    pub fn value(&self) -> GrundyValue {
        let mut targets = self.carry_targets.iter();
        let Some(&first) = targets.next() else {
            return GrundyValue::Finite(mex(self.immediate.iter().copied()));
        };
        let n = match first {
            GrundyValue::Moon => return GrundyValue::Moon,
            GrundyValue::Finite(n) => n,
        };
        if targets.any(|&t| t != first) {
            // a moon target or two distinct nimbers protect every nimber
            return GrundyValue::Moon;
        }
        if self.immediate.contains(&n) {
            GrundyValue::Moon
        } else {
            GrundyValue::Finite(n)
        }
    }
}

pub fn eval_sets(component: &Component, memo: Option<&TranspositionTable>) -> EvalSets {
    let mut sets = EvalSets::default();
    for mv in legal_moves(component) {
        let next = apply(component, mv).expect("generated move is legal");
        let v = oracle(&next, memo);
        match (mv.kind, v) {
            (MoveKind::RemoveSocketShock, v) => sets.carry_targets.push(v),
            (_, GrundyValue::Finite(n)) => sets.immediate.push(n),
            // quiet options worth the moon are not nimbers
            (_, GrundyValue::Moon) => {}
        }
    }
    sets
}

fn oracle(component: &Component, memo: Option<&TranspositionTable>) -> GrundyValue {
    if component.is_empty() {
        return GrundyValue::ZERO;
    }
    if let Some(v) = memo.and_then(|m| m.get(component)) {
        return v;
    }
    let v = eval_sets(component, memo).value();
    match memo {
        Some(m) => m.insert(component.clone(), v),
        None => v,
    }
}

pub fn grundy_oracle(component: &Component, memo: &TranspositionTable) -> GrundyValue {
    oracle(component, Some(memo))
}

/// Same as [`grundy_oracle`] but re-explores the whole option tree.
pub fn grundy_oracle_unmemoized(component: &Component) -> GrundyValue {
    oracle(component, None)
}

/// Wins for the player to move, found by direct search over play.
pub fn outcome_playout(position: &Position, memo: &PlayoutTable) -> Outcome {
    if mover_wins(position.multiset_key(), memo) {
        Outcome::N
    } else {
        Outcome::P
    }
}

fn mover_wins(state: Vec<Component>, memo: &PlayoutTable) -> bool {
    if state.is_empty() {
        return false;
    }
    if let Some(w) = memo.get(&state) {
        return w;
    }
    let mut wins = false;
    'search: for (ci, c) in state.iter().enumerate() {
        for mv in legal_moves(c) {
            let replaced = apply(c, mv).expect("generated move is legal");
            let mut next = state.clone();
            if replaced.is_empty() {
                next.remove(ci);
            } else {
                next[ci] = replaced;
                next.sort_unstable();
            }
            let next_wins = mover_wins(next, memo);
            // after a shock the same player moves again
            let good = if mv.kind.is_shock() { next_wins } else { !next_wins };
            if good {
                wins = true;
                break 'search;
            }
        }
    }
    memo.insert(state, wins)
}
