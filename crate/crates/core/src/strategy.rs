//! Winning turns: a chain of shock moves followed by one quiet move that
//! leaves the opponent a zero position.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::fast::grundy_fast;
use crate::fixture::Position;
use crate::moves::{apply, apply_position, legal_moves, MoveKind, PositionMove};
use crate::sum::{gsum, gsum_all, outcome, position_value, Outcome};
use crate::value::GrundyValue;

/// One complete turn. Every move but the last is a shock.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WinningLine {
    pub moves: Vec<PositionMove>,
}

impl WinningLine {
    pub fn shocks(&self) -> usize {
        self.moves.len().saturating_sub(1)
    }

    /// The position reached by playing the line from `start`, if it is legal.
    pub fn play(&self, start: &Position) -> Option<Position> {
        self.moves
            .iter()
            .try_fold(start.clone(), |p, &mv| apply_position(&p, mv).ok())
    }
}

/// A winning turn for an N-position, `None` for a P-position.
///
/// Shock chains are explored breadth first, so the returned line has the
/// fewest shocks; ties go to the lexicographically smallest sequence of
/// `(component, piece)` pairs.
pub fn best_line(position: &Position) -> Option<WinningLine> {
    if outcome(position) == Outcome::P {
        return None;
    }
    let mut visited = HashSet::new();
    visited.insert(position.multiset_key());
    let mut frontier = vec![(position.clone(), Vec::<PositionMove>::new())];
    while !frontier.is_empty() {
        for (node, path) in &frontier {
            if let Some(last) = quiet_win(node) {
                let mut moves = path.clone();
                moves.push(last);
                return Some(WinningLine { moves });
            }
        }
        let mut next = Vec::new();
        for (node, path) in &frontier {
            for (ci, c) in node.components().iter().enumerate() {
                for mv in legal_moves(c).into_iter().filter(|m| m.kind.is_shock()) {
                    let mv = PositionMove::new(ci, mv);
                    let child = apply_position(node, mv).expect("generated move is legal");
                    if visited.insert(child.multiset_key()) {
                        let mut p = path.clone();
                        p.push(mv);
                        next.push((child, p));
                    }
                }
            }
        }
        frontier = next;
    }
    None
}

/// First quiet or fix move (in component, piece order) to a zero position.
fn quiet_win(position: &Position) -> Option<PositionMove> {
    let values: Vec<GrundyValue> = position.components().iter().map(grundy_fast).collect();
    for (ci, c) in position.components().iter().enumerate() {
        let rest = gsum_all(values.iter().enumerate().filter(|&(j, _)| j != ci).map(|(_, &v)| v));
        if rest.is_moon() {
            continue;
        }
        for mv in legal_moves(c).into_iter().filter(|m| !m.kind.is_shock()) {
            let after = apply(c, mv).expect("generated move is legal");
            if gsum(rest, grundy_fast(&after)).is_zero() {
                return Some(PositionMove::new(ci, mv));
            }
        }
    }
    None
}

/// Checks shape (shocks then one non-shock move), legality of every move and
/// that the final position has value zero.
pub fn validate_line(position: &Position, line: &WinningLine) -> bool {
    let Some((last, shocks)) = line.moves.split_last() else {
        return false;
    };
    if last.kind() == MoveKind::RemoveSocketShock || shocks.iter().any(|m| !m.kind().is_shock()) {
        return false;
    }
    if line.moves.len() > position.total_pieces() {
        return false;
    }
    line.play(position)
        .is_some_and(|end| position_value(&end).is_zero())
}
