//! Linear-time Grundy values.
//!
//! A component is folded right to left. The processed suffix always starts
//! with a bulb (or is empty), so only its value matters; each step prefixes
//! `k` bulbs and `m` sockets to it and evaluates the closed form for
//! `bulbs(k) sockets(m) X` where `X` has value `v`.

use crate::fixture::{Component, Run};
use crate::value::GrundyValue;

use GrundyValue::{Finite, Moon};

/// `n + 1` for even `n`, `n - 1` for odd `n`.
fn flip_parity(n: u64) -> u64 {
    n ^ 1
}

/// Value of `k` bulbs, then `m` sockets, then a bulb-leading (or empty) suffix
/// of value `v`.
pub fn triple_value(k: u64, m: u64, v: GrundyValue) -> GrundyValue {
    let n = match v {
        Moon => return Moon,
        Finite(n) => n,
    };
    if m == 0 {
        return Finite(k + n);
    }
    let odd = m % 2 == 1;
    let value = match (k, n) {
        // sockets(m) bulbs(n)
        (0, n) if odd => flip_parity(n),
        (0, n) => n,
        // bulbs(k) sockets(m)
        (k, 0) if odd => k + 1,
        (k, 0) => k,
        // bulbs(k) sockets(m) bulb: the one sandwich case that yields the moon
        (_, 1) if m == 1 => return Moon,
        (k, 1) if odd => k,
        (k, 1) => k + 1,
        (k, n) if odd => k + n,
        (k, n) => k + flip_parity(n),
    };
    Finite(value)
}

/// One right-to-left fold: `bulbs sockets (suffix)` evaluated to `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FoldStep {
    pub bulbs: u64,
    pub sockets: u64,
    pub suffix: GrundyValue,
    pub value: GrundyValue,
}

fn fold<F: FnMut(FoldStep)>(component: &Component, mut visit: F) -> GrundyValue {
    let mut runs = component.runs_rev().peekable();
    let mut v = Finite(0);
    while let Some(run) = runs.next() {
        let (k, m) = match run {
            Run::Bulbs(k) => (k, 0),
            Run::Sockets(m) => match runs.next_if(|r| matches!(r, Run::Bulbs(_))) {
                Some(bulbs) => (bulbs.len(), m),
                None => (0, m),
            },
        };
        let (k, m) = (k as u64, m as u64);
        let next = triple_value(k, m, v);
        visit(FoldStep { bulbs: k, sockets: m, suffix: v, value: next });
        v = next;
        if v.is_moon() {
            break;
        }
    }
    v
}

pub fn grundy_fast(component: &Component) -> GrundyValue {
    fold(component, |_| ())
}

/// The intermediate folds of [`grundy_fast`], innermost first. Stops at the
/// first moon.
pub fn fold_trace(component: &Component) -> Vec<FoldStep> {
    let mut steps = Vec::new();
    fold(component, |s| steps.push(s));
    steps
}
